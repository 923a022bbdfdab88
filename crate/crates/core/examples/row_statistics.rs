//! Row statistics of a tableau and the embedded element they define.

use crystal_tableaux::binfinity::f_of_t;
use crystal_tableaux::cartan::{CartanData, LieType};
use crystal_tableaux::letters::Letter;
use crystal_tableaux::tableau::{row_stats, stat_keys, Tableau};

fn main() {
    let cd = CartanData::new(LieType::A, 3).unwrap();
    let un = Letter::Unbarred;
    let t = Tableau::new(
        &cd,
        vec![
            vec![un(1), un(2), un(3), un(3)],
            vec![un(2), un(4), un(4)],
            vec![un(3)],
        ],
    )
    .unwrap();

    println!("tableau:");
    for row in t.rows() {
        let syms: Vec<String> = row.iter().map(|x| x.symbol()).collect();
        println!("  {}", syms.join(" "));
    }
    println!("large: {}", t.is_large());

    let stats = row_stats(&cd, &t);
    println!("\nrow statistics a(i, j):");
    for i in 1..=t.row_count() {
        for key in stat_keys(&cd, i) {
            println!("  a({i}, {}) = {}", key.symbol(), stats.get(i, key));
        }
    }

    let p = f_of_t(&cd, &t).unwrap();
    println!("\nembedded element:");
    println!("{}", serde_json::to_string_pretty(&p).unwrap());
}

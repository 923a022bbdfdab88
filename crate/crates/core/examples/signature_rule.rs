//! The tensor-product signature rule at work: which factor a lowering
//! operator selects, on letter words and on elementary factors.

use crystal_tableaux::cartan::{CartanData, LieType};
use crystal_tableaux::crystal::{
    lower_position, tensor_apply, tensor_stats, Dir, ElementaryFactor,
};
use crystal_tableaux::letters::Letter;

fn word_text(word: &[Letter]) -> String {
    word.iter()
        .map(|x| x.symbol())
        .collect::<Vec<_>>()
        .join(" (x) ")
}

fn main() {
    let cd = CartanData::new(LieType::A, 2).unwrap();

    // Lower a two-letter word repeatedly with index 1.
    let mut word = vec![Letter::Unbarred(1), Letter::Unbarred(1)];
    println!("lowering f_1 on a type A2 word:");
    loop {
        let (phi, eps) = tensor_stats(&cd, &word, 1);
        println!("  {}   phi_1 = {phi}, eps_1 = {eps}", word_text(&word));
        match tensor_apply(&cd, &word, 1, Dir::F) {
            Some(next) => word = next,
            None => break,
        }
    }
    println!("  (dead end)\n");

    // The same rule drives elementary factors; the selected position shifts
    // as the levels change.
    let mut factors = vec![
        ElementaryFactor::ground(2),
        ElementaryFactor::ground(1),
        ElementaryFactor::ground(2),
    ];
    println!("lowering f_2 on b_2 (x) b_1 (x) b_2:");
    for _ in 0..3 {
        let pos = lower_position(&cd, &factors, 2).unwrap();
        println!(
            "  levels {:?}  -> acts on factor {}",
            factors.iter().map(|f| f.level).collect::<Vec<_>>(),
            pos + 1
        );
        factors = tensor_apply(&cd, &factors, 2, Dir::F).unwrap();
    }
    println!(
        "  levels {:?}",
        factors.iter().map(|f| f.level).collect::<Vec<_>>()
    );
}

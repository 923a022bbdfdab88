//! Print the letter crystals of the vector representations: every letter,
//! its statistics, and the labeled arrows between letters.

use crystal_tableaux::cartan::{CartanData, LieType};
use crystal_tableaux::letters::Letter;

fn main() {
    for (lie_type, rank) in [
        (LieType::A, 3),
        (LieType::C, 3),
        (LieType::B, 2),
        (LieType::D, 3),
    ] {
        let cd = CartanData::new(lie_type, rank).unwrap();
        println!("== type {lie_type}, rank {rank} ==");
        for x in Letter::alphabet(&cd) {
            let mut arrows = Vec::new();
            for i in 1..=rank {
                if let Some(y) = x.lower(&cd, i) {
                    arrows.push(format!("--{i}--> {y}"));
                }
            }
            let arrow_text = if arrows.is_empty() {
                "(sink)".to_string()
            } else {
                arrows.join("  ")
            };
            println!("  {:>4}  {arrow_text}", x.symbol());
        }
        // Type B walks two n-labeled steps through the zero letter.
        if lie_type == LieType::B {
            let n = rank;
            println!(
                "  note: phi_{n}({n}) = {}",
                Letter::Unbarred(n).phi_len(&cd, n)
            );
        }
        println!();
    }
}

//! Write a crystal graph as Graphviz DOT text to stdout. The type B vector
//! crystal shows the two n-labeled arrows through the zero letter.

use crystal_tableaux::cartan::{CartanData, LieType};
use crystal_tableaux::dot::export_dot;
use crystal_tableaux::enumerate::{enumerate_crystal, DEFAULT_CAP};
use crystal_tableaux::tableau::DominantWeight;

fn main() {
    let cd = CartanData::new(LieType::B, 2).unwrap();
    let lambda = DominantWeight::new(&cd, vec![1, 0]).unwrap();
    let graph = enumerate_crystal(&cd, &lambda, DEFAULT_CAP).unwrap();
    print!("{}", export_dot(&graph));
}

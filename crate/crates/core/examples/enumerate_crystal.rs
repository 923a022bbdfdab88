//! Enumerate small highest-weight crystals and compare against the
//! brute-force filling oracle.

use crystal_tableaux::cartan::{CartanData, LieType};
use crystal_tableaux::dot::compact_id;
use crystal_tableaux::enumerate::{
    enumerate_crystal, enumerate_semistandard_oracle, same_tableau_set, DEFAULT_CAP,
};
use crystal_tableaux::tableau::DominantWeight;

fn main() {
    let cases: [(LieType, usize, Vec<i64>); 4] = [
        (LieType::A, 2, vec![1, 1]),
        (LieType::C, 2, vec![1, 0]),
        (LieType::B, 2, vec![1, 0]),
        (LieType::D, 3, vec![1, 0, 0]),
    ];
    for (lie_type, rank, coeffs) in cases {
        let cd = CartanData::new(lie_type, rank).unwrap();
        let lambda = DominantWeight::new(&cd, coeffs.clone()).unwrap();
        let graph = enumerate_crystal(&cd, &lambda, DEFAULT_CAP).unwrap();
        let oracle = enumerate_semistandard_oracle(&cd, &lambda.shape(&cd), DEFAULT_CAP).unwrap();
        println!(
            "type {lie_type}{rank}, lambda {coeffs:?}: {} elements, {} edges, oracle {}",
            graph.nodes.len(),
            graph.edges.len(),
            oracle.len(),
        );
        assert!(same_tableau_set(&graph.nodes, &oracle));
        for t in &graph.nodes {
            println!("  {}", compact_id(t));
        }
        println!();
    }
}

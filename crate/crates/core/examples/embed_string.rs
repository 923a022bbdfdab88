//! Embed lowering strings into the fixed tensor product of elementary
//! crystals, and project them onto a large highest-weight crystal: the two
//! routes carry the same exponent data.

use crystal_tableaux::binfinity::{
    choose_large_lambda, f_of_t, image_member, pi_lambda, psi_embed, FString, PsiSequence,
};
use crystal_tableaux::cartan::{CartanData, LieType};
use crystal_tableaux::dot::compact_id;

fn main() {
    let cd = CartanData::new(LieType::C, 2).unwrap();
    let seq = PsiSequence::new(&cd);
    let blocks: Vec<Vec<usize>> = seq
        .blocks()
        .iter()
        .map(|b| b.iter().map(|s| s.index).collect())
        .collect();
    println!("type C2 factor blocks: {blocks:?}\n");

    for indices in [
        vec![],
        vec![1],
        vec![2, 1],
        vec![1, 2, 1],
        vec![1, 1, 2, 2, 1],
    ] {
        let b = FString::new(&cd, indices.clone()).unwrap();
        let p = psi_embed(&cd, &b).unwrap();
        let lambda = choose_large_lambda(&cd, &b);
        let t = pi_lambda(&cd, &b, &lambda).unwrap();
        let via_stats = f_of_t(&cd, &t).unwrap();
        println!("string {indices:?}");
        println!("  embedding exponents {:?}", p.exponents());
        println!(
            "  projection (lambda {:?}) {}",
            lambda.coeffs(),
            compact_id(&t)
        );
        assert_eq!(p, via_stats);
        assert!(image_member(&cd, &p));
        println!("  statistics map agrees; image chains hold\n");
    }
}

//! Crystal combinatorics for the classical Lie types A, B, C, D.
//!
//! The crate builds, from scratch, the combinatorial skeletons used in the
//! theory of quantized enveloping algebras:
//!
//! * Cartan data and the pairing `⟨h_i, α_j⟩` ([`cartan`]);
//! * abstract crystal arithmetic with `Z ∪ {-∞}` statistics, elementary
//!   crystals `B_i`, and the tensor-product signature rule ([`crystal`]);
//! * the box letters of the vector representations with their arrows and
//!   orders ([`letters`]);
//! * tableaux over those alphabets: admissible columns, the
//!   almost-semistandard and largeness predicates, reading words, crystal
//!   operators, highest-weight tableaux, and per-row statistics
//!   ([`tableau`]);
//! * exhaustive desk-scale enumeration of finite crystals and a brute-force
//!   filling oracle ([`enumerate`]);
//! * the crystal `B(∞)` of lowering strings, its projections `π̄_λ`, the
//!   embedding into a fixed tensor product of elementary crystals, the row
//!   statistics map `F(T)`, closed-form statistics, and the exact image
//!   characterization ([`binfinity`]);
//! * verification drivers that check all of the above against each other,
//!   exhaustively, at small rank and depth ([`verify`]);
//! * DOT rendering of crystal graphs ([`dot`]).
//!
//! Every structure is immutable and every operation a pure function, so all
//! of it can be driven from multiple threads without coordination.
//!
//! See the `examples/` directory for one runnable program per capability,
//! and the `crystal-tableaux` binary for a JSON-speaking command line.

pub mod binfinity;
pub mod cartan;
pub mod crystal;
pub mod dot;
pub mod enumerate;
pub mod error;
pub mod letters;
pub mod tableau;
pub mod verify;

pub use binfinity::{
    choose_large_lambda, closed_form_stats, f_of_t, fstring_weight, image_member, pi_lambda,
    psi_embed, FString, PsiElement, PsiSequence,
};
pub use cartan::{CartanData, LieType, RootVector};
pub use crystal::{tensor_apply, tensor_stats, CrystalElem, Dir, ElementaryFactor, ExtInt};
pub use enumerate::{enumerate_crystal, enumerate_semistandard_oracle, CrystalGraph, DEFAULT_CAP};
pub use error::{Error, Result};
pub use letters::Letter;
pub use tableau::{
    highest_weight_tableau, is_valid_column, row_stats, DominantWeight, RowStats, StatKey, Tableau,
};
pub use verify::{surjectivity_probe, verify_theorem, Report};

#[cfg(test)]
mod thread_safety {
    use super::*;

    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_shareable() {
        assert_send_sync::<CartanData>();
        assert_send_sync::<Letter>();
        assert_send_sync::<Tableau>();
        assert_send_sync::<FString>();
        assert_send_sync::<PsiElement>();
        assert_send_sync::<CrystalGraph>();
        assert_send_sync::<Report>();
    }
}

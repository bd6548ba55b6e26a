//! Exact-arithmetic combinatorics of Schur, stable Grothendieck and
//! dual stable Grothendieck expansions.
//!
//! The central object is a [`TableauModel`]: a finite set of
//! semistandard tableaux with polynomial weights, defining a symmetric
//! function as the weighted sum of the Schur functions of the tableau
//! shapes.  Any such function also expands in the stable Grothendieck
//! basis `G` (over reverse plane partitions) and in the dual basis `g`
//! (over set-valued tableaux, with signs), and this crate computes all
//! three expansions exactly, together with the supporting machinery:
//! RSK insertion, the reading words of set-valued tableaux and reverse
//! plane partitions, dilation/contraction moves and their involution,
//! elegant fillings with the basis transition matrices, and the charge
//! statistics behind Hall-Littlewood and Macdonald specializations.
//!
//! All arithmetic is exact; coefficients live in `Z[t]` with integer
//! coefficient type [`IntPoly`].  Every value is immutable after
//! construction and every operation is a pure function.

pub mod elegant;
pub mod engine;
pub mod error;
pub mod involution;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod rpp;
pub mod statistics;
pub mod svt;
pub mod symfun;
pub mod tableau;
pub mod word;

pub use elegant::{
    enumerate_elegant, filling_to_rpp, filling_to_svt, rpp_to_filling, svt_to_filling,
    ElegantFilling,
};
pub use engine::{
    class_signed_sum, hall_littlewood_coefficient_sum, hall_littlewood_dual,
    hall_littlewood_grothendieck, lr_product_dual, lr_product_grothendieck, Comparison,
    TableauModel, VerifyReport,
};
pub use error::{Error, Result};
pub use involution::{contract, dilate, involute, slide_in, TableauPair};
pub use partition::{
    contained_partitions, partitions_of, partitions_of_bounded, partitions_up_to, Evaluation,
    Partition,
};
pub use perm::Permutation;
pub use poly::Poly;
pub use rpp::{enumerate_rpp, enumerate_rpp_bounded, ReversePlanePartition};
pub use statistics::{
    charge, charge_perm, charge_subwords, is_yamanouchi, refined_charge, LetterSet,
};
pub use svt::{enumerate_svt, enumerate_svt_by_content, SetValuedTableau};
pub use symfun::{
    elegant_count, hall_inner, kostka_number, lr_coefficient, schur_multiply, strict_elegant_count,
    to_monomials, Basis, SymFunc,
};
pub use tableau::{
    enumerate_ssyt, enumerate_ssyt_bounded, is_tableau_word, knuth_equivalent, kostka,
    reverse_bump, row_insert, rsk_insert, Tableau,
};
pub use word::Word;

#[cfg(feature = "sign-pairing")]
pub use involution::sign_pairing;

/// Weights and expansion coefficients: integer polynomials in `t`.
pub type IntPoly = Poly<i64>;

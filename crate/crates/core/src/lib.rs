//! Exact computations with homogeneous ideals: Gröbner bases and initial
//! ideals, monomial ideal classification, graded Betti numbers, annihilator
//! numbers, reduction numbers and Pommaret bases.

pub mod annihilator;
pub mod betti;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod pommaret;
pub mod reduction;
pub mod verify;

pub use annihilator::{
    annihilator_numbers, annihilator_numbers_graded, compare_with_initial, correspondence_check,
    correspondence_check_graded, extremal_annihilators, AnnihilatorTable,
};
pub use betti::{
    betti_koszul, betti_of_graded, betti_oracle, derived_invariants, extremal_betti, BettiTable, Corner,
    DerivedInvariants, Subject,
};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use groebner::{
    apply_change, buchberger, buchberger_with, gin_sample, gin_sample_with, initial_ideal, normal_form, GinConfig,
    GinSample, GroebnerBasis, GroebnerConfig, LinearChange,
};
pub use monideal::{HilbertSeries, IntPoly, MonomialIdeal, MonomialPrime, StabilityWitness};
pub use monomial::{default_names, Monomial, TermOrder};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use poly::{Polynomial, Ring};
pub use pommaret::{involutive_divides, pommaret_complete, Completion, InvolutiveBasis};
pub use reduction::{
    canonical_reduction_number, reduction_lower_bound, reduction_number, search_min_reduction, top_degree,
    SearchConfig, SearchResult, TopDegree,
};

//! Fixed inputs shared by the benchmarks.

use borel_core::{default_names, parse_polynomial_list, MonomialIdeal, Polynomial, Ring, TermOrder};

pub const CUBICS: &str = "(2x1+x2)^3, (x2+2x3)^3, (3x1+x3)^3, (x1+3x3)^3, \
    (3x1+2x3)^3, (2x2-3x3)^3, (4x1+3x2)^3, (3x1-5x3)^3";

/// Eight cubes of linear forms in three variables.
pub fn cubics() -> Vec<Polynomial> {
    parse_polynomial_list(CUBICS, (1, 1), &default_names(3), Ring::rational(3), TermOrder::RevLex)
        .expect("fixed input parses")
}

/// The lex-segment-like ideal generated by every monomial of degree `d` in `n`
/// variables divisible by `x1`, plus `x2^d`.
pub fn segment(n: usize, d: u32) -> MonomialIdeal {
    let mut gens: Vec<_> = borel_core::Monomial::all_of_degree(n, d).into_iter().filter(|m| m.exp(0) > 0).collect();
    gens.push(borel_core::Monomial::var_power(n, 1, d));
    MonomialIdeal::new(n, gens)
}

/// `(x1, …, xn)^d`.
pub fn power_of_maximal(n: usize, d: u32) -> MonomialIdeal {
    MonomialIdeal::new(n, borel_core::Monomial::all_of_degree(n, d))
}

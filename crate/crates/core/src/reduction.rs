//! Reduction numbers of the maximal ideal of `R/I`.
//!
//! For linear forms `y_1, …, y_d` forming a system of parameters of `R/I`,
//! `r_J(R/I) = a(R/(I, y_1, …, y_d))`, the top nonzero degree.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::annihilator::annihilator_numbers_graded;
use crate::error::{Error, Result};
use crate::groebner::initial_ideal;
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Polynomial, Ring};

/// `max{p : M_p ≠ 0}`, or `−∞` for the zero module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TopDegree {
    NegInfinity,
    Finite(u32),
}

impl TopDegree {
    pub fn value(self) -> Option<u32> {
        match self {
            TopDegree::NegInfinity => None,
            TopDegree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for TopDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopDegree::NegInfinity => write!(f, "-inf"),
            TopDegree::Finite(d) => write!(f, "{d}"),
        }
    }
}

fn ring_of(gens: &[Polynomial]) -> Result<Ring> {
    gens.first().map(Polynomial::ring).ok_or(Error::ZeroIdeal)
}

fn check_linear(forms: &[Polynomial]) -> Result<()> {
    for (index, f) in forms.iter().enumerate() {
        if f.is_zero() || f.degree() != Some(1) || !f.is_homogeneous() {
            return Err(Error::Domain(format!("form {} is not a nonzero linear form", index + 1)));
        }
    }
    Ok(())
}

/// Top degree of a monomial quotient of finite length.
fn top_degree_monomial(i: &MonomialIdeal) -> Result<TopDegree> {
    if i.is_unit() {
        return Ok(TopDegree::NegInfinity);
    }
    let hs = i.hilbert_series();
    let (h, e) = hs.reduced();
    if e != 0 {
        return Err(Error::NotSystemOfParameters { dimension: e as i64 });
    }
    Ok(h.degree().map_or(TopDegree::NegInfinity, |d| TopDegree::Finite(d as u32)))
}

/// `a(R/(I + (forms)))`, read from the revlex initial ideal of `I + (forms)`.
pub fn top_degree(gens: &[Polynomial], forms: &[Polynomial]) -> Result<TopDegree> {
    check_linear(forms)?;
    let all: Vec<Polynomial> = gens.iter().chain(forms).cloned().collect();
    top_degree_monomial(&initial_ideal(&all, TermOrder::RevLex)?)
}

/// `dim R/I`, from the revlex initial ideal.
pub fn quotient_dimension(gens: &[Polynomial]) -> Result<i64> {
    Ok(initial_ideal(gens, TermOrder::RevLex)?.dimension())
}

/// `r_J(R/I)` for `J` generated by `forms`; their number must equal `dim R/I`.
pub fn reduction_number(gens: &[Polynomial], forms: &[Polynomial]) -> Result<TopDegree> {
    let d = quotient_dimension(gens)?;
    if d < 0 {
        return Ok(TopDegree::NegInfinity);
    }
    if forms.len() != d as usize {
        return Err(Error::ReductionSpec { expected: d as usize, found: forms.len() });
    }
    top_degree(gens, forms)
}

fn tail_vars(ring: Ring, d: usize) -> Vec<Polynomial> {
    let n = ring.nvars;
    (n - d..n).map(|k| Polynomial::var(ring, TermOrder::RevLex, k)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalReduction {
    pub dimension: usize,
    /// `r_J(R/I)` for `J = (x_{n−d+1}, …, x_n)`.
    pub value: TopDegree,
    /// The same reduction computed for `R/in(I)`.
    pub initial_value: TopDegree,
}

/// Reduction number for the last `d = dim R/I` variables, computed for both
/// `I` and its revlex initial ideal. Requires the first `d` colon modules
/// along `x_n, x_{n−1}, …` to have finite length.
pub fn canonical_reduction_number(gens: &[Polynomial]) -> Result<CanonicalReduction> {
    let ring = ring_of(gens)?;
    let init = initial_ideal(gens, TermOrder::RevLex)?;
    if init.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let d = init.dimension() as usize;
    let alpha = annihilator_numbers_graded(gens)?;
    if let Some(row) = alpha.rows.iter().take(d).find(|r| !r.finite) {
        return Err(Error::NotFilterRegular { row: row.index });
    }
    let tail = tail_vars(ring, d);
    let value = top_degree(gens, &tail)?;
    let n = ring.nvars;
    let initial_value = top_degree_monomial(&init.sum(&MonomialIdeal::from_vars(n, n - d..n)))?;
    if value != initial_value {
        return Err(Error::Internal(format!(
            "tail reduction numbers differ: {value} for the ideal, {initial_value} for its initial ideal"
        )));
    }
    Ok(CanonicalReduction { dimension: d, value, initial_value })
}

/// `min{deg F : F ∈ I homogeneous} − 1`, a lower bound for `r(R/I)`.
pub fn reduction_lower_bound(gens: &[Polynomial]) -> Result<i64> {
    let init = initial_ideal(gens, TermOrder::RevLex)?;
    init.min_degree().map(|d| d as i64 - 1).ok_or(Error::ZeroIdeal)
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub budget: usize,
    /// Coefficients are drawn from this set.
    pub grid: Vec<i64>,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 100, grid: vec![-1, 0, 1], seed: 0 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchResult {
    pub best_r: u32,
    /// Coefficient rows `a_{i,·}` of the best forms.
    pub best_coefficients: Vec<Vec<i64>>,
    #[serde(skip)]
    pub best_forms: Vec<Polynomial>,
    pub lower_bound: i64,
    pub canonical_r: Option<u32>,
    pub candidates: usize,
    pub systems_of_parameters: usize,
    pub exhaustive: bool,
}

/// `y_i = x_{n−d+i} + Σ_{j ≤ n−d} a_{i,j} x_j`.
pub fn candidate_forms(ring: Ring, d: usize, coeffs: &[Vec<i64>]) -> Vec<Polynomial> {
    let n = ring.nvars;
    let ord = TermOrder::RevLex;
    (0..d)
        .map(|i| {
            let lead = std::iter::once((Monomial::var(n, n - d + i), ring.field.one()));
            let rest = (0..n - d).map(|j| (Monomial::var(n, j), ring.field.from_i64(coeffs[i][j])));
            Polynomial::from_terms(ring, ord, lead.chain(rest))
        })
        .collect()
}

/// Smallest `r_J(R/I)` over candidate reductions of the shape of
/// [`candidate_forms`]. Candidate 0 is the tail-variable reduction. The
/// whole grid is enumerated when it fits the budget, otherwise candidates
/// are sampled with the seeded generator.
pub fn search_min_reduction(gens: &[Polynomial], cfg: &SearchConfig) -> Result<SearchResult> {
    let ring = ring_of(gens)?;
    let init = initial_ideal(gens, TermOrder::RevLex)?;
    if init.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ring.nvars;
    let d = init.dimension() as usize;
    let lower_bound = reduction_lower_bound(gens)?;
    let free = d * (n - d);
    let grid_size = (cfg.grid.len() as u128).checked_pow(free as u32);
    let exhaustive = grid_size.is_some_and(|g| g <= cfg.budget as u128);
    let reshape = |flat: Vec<i64>| -> Vec<Vec<i64>> {
        if n == d {
            return vec![Vec::new(); d];
        }
        flat.chunks(n - d).map(<[i64]>::to_vec).collect()
    };
    let mut candidates: Vec<Vec<Vec<i64>>> = vec![vec![vec![0; n - d]; d]];
    if exhaustive {
        let total = grid_size.expect("fits") as usize;
        for idx in 0..total {
            let mut rem = idx;
            let flat: Vec<i64> = (0..free)
                .map(|_| {
                    let c = cfg.grid[rem % cfg.grid.len()];
                    rem /= cfg.grid.len();
                    c
                })
                .collect();
            candidates.push(reshape(flat));
        }
    } else if !cfg.grid.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for _ in 1..cfg.budget.max(1) {
            let flat: Vec<i64> = (0..free).map(|_| cfg.grid[rng.gen_range(0..cfg.grid.len())]).collect();
            candidates.push(reshape(flat));
        }
    }
    candidates.dedup();
    let results: Vec<Option<u32>> = candidates
        .par_iter()
        .map(|c| match top_degree(gens, &candidate_forms(ring, d, c)) {
            Ok(t) => Ok(Some(t.value().unwrap_or(0))),
            Err(Error::NotSystemOfParameters { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect::<Result<_>>()?;
    let systems_of_parameters = results.iter().filter(|r| r.is_some()).count();
    let best = results.iter().enumerate().filter_map(|(k, r)| r.map(|r| (r, k))).min();
    let Some((best_r, k)) = best else {
        return Err(Error::SearchFailure(candidates.len()));
    };
    if (best_r as i64) < lower_bound {
        return Err(Error::Internal(format!("reduction number {best_r} below the lower bound {lower_bound}")));
    }
    Ok(SearchResult {
        best_r,
        best_coefficients: candidates[k].clone(),
        best_forms: candidate_forms(ring, d, &candidates[k]),
        lower_bound,
        canonical_r: results[0],
        candidates: candidates.len(),
        systems_of_parameters,
        exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::default_names;
    use crate::parse::parse_polynomial;

    fn polys(n: usize, src: &[&str]) -> Vec<Polynomial> {
        let names = default_names(n);
        src.iter().map(|s| parse_polynomial(s, &names, Ring::rational(n), TermOrder::RevLex).unwrap()).collect()
    }

    fn example() -> Vec<Polynomial> {
        polys(3, &["x1^4", "x1*x2^3", "x1*x3^2"])
    }

    #[test]
    fn two_reductions_of_the_same_ideal() {
        let i = example();
        assert_eq!(reduction_number(&i, &polys(3, &["x2", "x3"])).unwrap(), TopDegree::Finite(3));
        assert_eq!(reduction_number(&i, &polys(3, &["x2", "x3 - x1"])).unwrap(), TopDegree::Finite(2));
        assert_eq!(reduction_lower_bound(&i).unwrap(), 2);
    }

    #[test]
    fn wrong_number_of_forms() {
        let r = reduction_number(&example(), &polys(3, &["x2"]));
        assert!(matches!(r, Err(Error::ReductionSpec { expected: 2, found: 1 })));
    }

    #[test]
    fn not_a_system_of_parameters() {
        let r = reduction_number(&example(), &polys(3, &["x1", "x1"]));
        assert!(r.is_err());
        let r = top_degree(&example(), &polys(3, &["x1", "x2"]));
        assert!(matches!(r, Err(Error::NotSystemOfParameters { dimension: 1 })));
    }

    #[test]
    fn artinian_top_degree() {
        assert_eq!(top_degree(&polys(2, &["x1^2", "x1*x2", "x2^3"]), &[]).unwrap(), TopDegree::Finite(2));
        let c = canonical_reduction_number(&polys(2, &["x1^2", "x2^2"])).unwrap();
        assert_eq!(c.value, TopDegree::Finite(2));
    }

    #[test]
    fn unit_quotient_is_minus_infinity() {
        assert_eq!(top_degree(&polys(2, &["1"]), &[]).unwrap(), TopDegree::NegInfinity);
        assert_eq!(top_degree(&polys(2, &["x1", "x2"]), &[]).unwrap(), TopDegree::Finite(0));
    }

    #[test]
    fn canonical_is_three_for_the_example() {
        let c = canonical_reduction_number(&example()).unwrap();
        assert_eq!((c.dimension, c.value, c.initial_value), (2, TopDegree::Finite(3), TopDegree::Finite(3)));
    }

    #[test]
    fn grid_search_finds_two() {
        let s = search_min_reduction(&example(), &SearchConfig::default()).unwrap();
        assert!(s.exhaustive);
        assert_eq!(s.best_r, 2);
        assert_eq!(s.canonical_r, Some(3));
        assert_eq!(reduction_number(&example(), &s.best_forms).unwrap(), TopDegree::Finite(2));
    }

    #[test]
    fn linear_generator_bound_is_zero() {
        assert_eq!(reduction_lower_bound(&polys(3, &["x1 + x2", "x3^2"])).unwrap(), 0);
    }
}

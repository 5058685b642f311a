//! Annihilator numbers of `R/J` along `x_n, x_{n−1}, …, x_1`.
//!
//! With `J_i = J + (x_n, …, x_{n−i+1})`, row `i < n` is the colon module
//! `A_i = (J_i : x_{n−i}) / J_i` and row `n` is `R/J_n`. Exactness of
//! `0 → A_i(−1) → R/J_i(−1) → R/J_i → R/J_{i+1} → 0` gives
//! `α_{i,j} = HF_i(j) − HF_i(j+1) + HF_{i+1}(j+1)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{betti_koszul, betti_of_graded, extremal_betti, BettiTable, Corner};
use crate::error::{Error, Result};
use crate::groebner::initial_ideal;
use crate::monideal::{HilbertSeries, IntPoly, MonomialIdeal};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorRow {
    pub index: usize,
    /// `A_i` has finite length.
    pub finite: bool,
    /// `α_{i,j}` for `j = 0, 1, …`; for infinite rows, up to `cutoff`.
    pub values: Vec<u64>,
    pub cutoff: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorTable {
    pub nvars: usize,
    pub rows: Vec<AnnihilatorRow>,
}

impl AnnihilatorTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.rows.get(i).and_then(|r| r.values.get(j as usize)).copied().unwrap_or(0)
    }

    /// Rows `0..n` all have finite length, i.e. `x_n, …, x_1` is filter regular.
    pub fn all_finite(&self) -> bool {
        self.first_infinite().is_none()
    }

    pub fn first_infinite(&self) -> Option<usize> {
        self.rows.iter().take(self.nvars).find(|r| !r.finite).map(|r| r.index)
    }

    pub fn entries(&self) -> Vec<((usize, u32), u64)> {
        self.rows
            .iter()
            .flat_map(|r| r.values.iter().enumerate().filter(|(_, v)| **v != 0).map(move |(j, v)| ((r.index, j as u32), *v)))
            .collect()
    }
}

/// Hilbert series of `R/J_i` for `i = 0..=n`, from the initial ideals.
fn tail_series_monomial(j: &MonomialIdeal) -> Vec<HilbertSeries> {
    let n = j.nvars();
    (0..=n)
        .into_par_iter()
        .map(|i| j.sum(&MonomialIdeal::from_vars(n, n - i..n)).hilbert_series())
        .collect()
}

fn tail_series_graded(gens: &[Polynomial]) -> Result<Vec<HilbertSeries>> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroIdeal);
    };
    let (ring, ord) = (first.ring(), TermOrder::RevLex);
    let n = ring.nvars;
    (0..=n)
        .into_par_iter()
        .map(|i| {
            let mut all: Vec<Polynomial> = gens.to_vec();
            all.extend((n - i..n).map(|k| Polynomial::var(ring, ord, k)));
            Ok(initial_ideal(&all, ord)?.hilbert_series())
        })
        .collect()
}

fn table_from_series(series: &[HilbertSeries], cutoff: u32) -> Result<AnnihilatorTable> {
    let n = series.len() - 1;
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // generating function of A_i is (HS_{i+1} − (1 − t) HS_i) / t
        let num = if i < n {
            let p = series[i + 1].numerator.sub(&IntPoly::new(vec![1, -1]).mul(&series[i].numerator));
            if p.coeff(0) != 0 {
                return Err(Error::Internal(format!("colon module series {p} has a constant term")));
            }
            IntPoly::new(p.0.iter().skip(1).copied().collect())
        } else {
            series[n].numerator.clone()
        };
        let hs = HilbertSeries { numerator: num, nvars: n };
        let (h, e) = hs.reduced();
        let (finite, values) = if e == 0 {
            (true, h.0.clone())
        } else {
            (false, (0..=cutoff as i64).map(|d| hs.coefficient(d)).collect())
        };
        if let Some(v) = values.iter().find(|v| **v < 0) {
            return Err(Error::Internal(format!("negative annihilator number {v} in row {i}")));
        }
        let mut values: Vec<u64> = values.into_iter().map(|v| v as u64).collect();
        while values.last() == Some(&0) {
            values.pop();
        }
        let cutoff = if finite { values.len().saturating_sub(1) as u32 } else { cutoff };
        rows.push(AnnihilatorRow { index: i, finite, values, cutoff });
    }
    Ok(AnnihilatorTable { nvars: n, rows })
}

/// Degree cutoff for printing rows of infinite length.
fn default_cutoff(j: &MonomialIdeal) -> u32 {
    j.lcm().degree() + j.nvars() as u32
}

pub fn annihilator_numbers(j: &MonomialIdeal) -> Result<AnnihilatorTable> {
    if j.is_unit() {
        return Err(Error::UnitIdeal);
    }
    table_from_series(&tail_series_monomial(j), default_cutoff(j))
}

/// Annihilator numbers of `R/I` for homogeneous generators; every Hilbert
/// function is taken from a revlex initial ideal of `I + (tail variables)`.
pub fn annihilator_numbers_graded(gens: &[Polynomial]) -> Result<AnnihilatorTable> {
    let init = initial_ideal(gens, TermOrder::RevLex)?;
    if init.is_unit() {
        return Err(Error::UnitIdeal);
    }
    table_from_series(&tail_series_graded(gens)?, default_cutoff(&init))
}

/// `α_{i,j}` counted directly: monomials of degree `j` outside `J_i` that
/// `x_{n−i}` pushes into `J_i`. Row `n` counts standard monomials of `J_n`.
pub fn annihilator_numbers_direct(j: &MonomialIdeal, max_degree: u32) -> Vec<Vec<u64>> {
    let n = j.nvars();
    (0..=n)
        .map(|i| {
            let ji = j.sum(&MonomialIdeal::from_vars(n, n - i..n));
            (0..=max_degree)
                .map(|d| {
                    let std = ji.standard_monomials(d);
                    if i == n {
                        return std.len() as u64;
                    }
                    let y = Monomial::var(n, n - i - 1);
                    std.iter().filter(|m| ji.contains(&m.mul(&y))).count() as u64
                })
                .collect()
        })
        .collect()
}

/// Nonzero `α_{i,j}` with `α_{k,l} = 0` whenever `k ≤ i`, `l ≥ j` and `(k, l) ≠ (i, j)`.
pub fn extremal_annihilators(t: &AnnihilatorTable) -> Result<Vec<Corner>> {
    if let Some(row) = t.first_infinite() {
        return Err(Error::NotFilterRegular { row });
    }
    let e = t.entries();
    Ok(e.iter()
        .filter(|((i, j), _)| !e.iter().any(|((k, l), _)| (k, l) != (i, j) && k <= i && l >= j))
        .map(|&((i, j), value)| Corner { i, j, value })
        .collect())
}

/// `binom(a, b)` with `binom(a, −1) = [a = −1]` and zero for other negative arguments.
fn binom_ext(a: i64, b: i64) -> u128 {
    if b == -1 {
        return (a == -1) as u128;
    }
    if b < -1 || a < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1u128, |acc, k| acc * (a - k) as u128 / (k + 1) as u128)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundViolation {
    pub i: usize,
    pub j: u32,
    pub beta: u64,
    pub bound: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    /// Extremal `β_{i,i+j}(R/J)` as `(i, i+j)`.
    pub extremal_betti: Vec<Corner>,
    /// Extremal `α_{k,l}` as `(k, l)`.
    pub extremal_alpha: Vec<Corner>,
    /// Extremal Betti corners mapped through `(i, i+j) ↦ (n−i, j)`.
    pub mapped_betti: Vec<Corner>,
    pub corners_match: bool,
    pub bound_violations: Vec<BoundViolation>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.corners_match && self.bound_violations.is_empty()
    }
}

/// Compares extremal Betti numbers of `R/J` with extremal annihilator numbers
/// (`β_{i,i+j} = α_{n−i,j}`) and checks the entrywise bound
/// `β_{i,i+j} ≤ Σ_{k=0}^{n−i} binom(n−k−1, i−1) α_{k,j}`.
pub fn correspondence(betti: &BettiTable, alpha: &AnnihilatorTable) -> Result<CorrespondenceReport> {
    let n = alpha.nvars;
    let extremal_alpha = extremal_annihilators(alpha)?;
    let quotient = betti.clone().with_subject(crate::betti::Subject::Quotient);
    let extremal_betti = extremal_betti(&quotient);
    let mut mapped_betti: Vec<Corner> =
        extremal_betti.iter().map(|c| Corner { i: n - c.i, j: c.j - c.i as u32, value: c.value }).collect();
    mapped_betti.sort();
    let mut sorted_alpha = extremal_alpha.clone();
    sorted_alpha.sort();
    let corners_match = mapped_betti == sorted_alpha;
    let mut bound_violations = Vec::new();
    for ((i, jj), beta) in quotient.entries() {
        let j = jj - i as u32;
        let bound: u128 = (0..=n - i)
            .map(|k| binom_ext(n as i64 - k as i64 - 1, i as i64 - 1) * alpha.get(k, j) as u128)
            .sum();
        if beta as u128 > bound {
            bound_violations.push(BoundViolation { i, j, beta, bound });
        }
    }
    Ok(CorrespondenceReport { extremal_betti, extremal_alpha, mapped_betti, corners_match, bound_violations })
}

/// [`correspondence`] for a monomial ideal, computing both tables.
pub fn correspondence_check(j: &MonomialIdeal) -> Result<CorrespondenceReport> {
    let alpha = annihilator_numbers(j)?;
    if let Some(row) = alpha.first_infinite() {
        return Err(Error::NotFilterRegular { row });
    }
    correspondence(&betti_koszul(j, None)?, &alpha)
}

/// [`correspondence`] for homogeneous generators.
pub fn correspondence_check_graded(gens: &[Polynomial]) -> Result<CorrespondenceReport> {
    let alpha = annihilator_numbers_graded(gens)?;
    if let Some(row) = alpha.first_infinite() {
        return Err(Error::NotFilterRegular { row });
    }
    correspondence(&betti_of_graded(gens, None)?, &alpha)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialComparison {
    /// First row of infinite length for `I`, if any.
    pub violated_row: Option<usize>,
    pub equal: bool,
    pub ideal: AnnihilatorTable,
    pub initial: AnnihilatorTable,
}

impl InitialComparison {
    pub fn hypothesis_holds(&self) -> bool {
        self.violated_row.is_none()
    }
}

/// Compares the annihilator table of `R/I` with that of `R/in(I)` (revlex).
pub fn compare_with_initial(gens: &[Polynomial]) -> Result<InitialComparison> {
    let ideal = annihilator_numbers_graded(gens)?;
    let initial = annihilator_numbers(&initial_ideal(gens, TermOrder::RevLex)?)?;
    Ok(InitialComparison { violated_row: ideal.first_infinite(), equal: ideal == initial, ideal, initial })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::groebner::{apply_change, LinearChange};
    use crate::monomial::default_names;
    use crate::parse::parse_polynomial;
    use crate::poly::Ring;

    fn mi(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows)
    }

    #[test]
    fn square_in_one_variable() {
        let t = annihilator_numbers(&mi(1, &[&[2]])).unwrap();
        assert_eq!(t.rows[0].values, vec![0, 1]);
        assert_eq!(t.rows[1].values, vec![1]);
        assert!(t.all_finite());
    }

    #[test]
    fn quasi_stable_first_colon_is_infinite() {
        let t = annihilator_numbers(&mi(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]])).unwrap();
        assert!(!t.rows[0].finite);
        assert_eq!(t.first_infinite(), Some(0));
        assert!(matches!(extremal_annihilators(&t), Err(Error::NotFilterRegular { row: 0 })));
    }

    #[test]
    fn hilbert_route_matches_colons() {
        let ideals = [
            mi(3, &[&[3, 0, 0], &[1, 2, 0], &[1, 0, 2]]),
            mi(3, &[&[1, 1, 0], &[1, 0, 1], &[2, 0, 0]]),
            mi(2, &[&[2, 0], &[1, 1], &[0, 3]]),
            mi(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]),
        ];
        for j in &ideals {
            let t = annihilator_numbers(j).unwrap();
            let direct = annihilator_numbers_direct(j, 8);
            for (i, row) in direct.iter().enumerate() {
                for (d, &v) in row.iter().enumerate() {
                    if d as u32 > t.rows[i].cutoff && !t.rows[i].finite {
                        break;
                    }
                    assert_eq!(t.get(i, d as u32), v, "{j:?} row {i} degree {d}");
                }
            }
        }
    }

    #[test]
    fn plane_ideal_corners_correspond() {
        let r = correspondence_check(&mi(2, &[&[2, 0], &[1, 1], &[0, 3]])).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.extremal_alpha, vec![Corner { i: 0, j: 2, value: 1 }]);
    }

    #[test]
    fn section3_initial_corner() {
        let j = mi(3, &[&[3, 0, 0], &[2, 1, 0], &[0, 3, 0], &[2, 0, 1], &[1, 0, 2], &[0, 0, 3], &[0, 2, 1], &[1, 2, 0]]);
        let r = correspondence_check(&j).unwrap();
        assert!(r.passed());
        assert_eq!(r.extremal_alpha, vec![Corner { i: 0, j: 3, value: 2 }]);
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binom_ext(-1, -1), 1);
        assert_eq!(binom_ext(2, -1), 0);
        assert_eq!(binom_ext(4, 2), 6);
        assert_eq!(binom_ext(-2, 0), 0);
    }

    #[test]
    fn graded_table_equals_initial_table() {
        let ring = Ring::rational(3);
        let names = default_names(3);
        let gens: Vec<Polynomial> = ["x1^4", "x1*x2^3", "x1*x3^2"]
            .iter()
            .map(|s| parse_polynomial(s, &names, ring, TermOrder::RevLex).unwrap())
            .collect();
        let change = LinearChange::from_integers(Field::Rational, &[vec![1, 0, 0], vec![2, 1, 0], vec![-1, 3, 1]]).unwrap();
        let moved = apply_change(&gens, &change).unwrap();
        let c = compare_with_initial(&moved).unwrap();
        assert!(c.hypothesis_holds());
        assert!(c.equal);
    }
}

//! Monomial ideals: minimal generators, colons and saturations, standard
//! monomials, Hilbert series, dimension, associated primes, and the stability
//! classes (Borel type, strongly stable, stable, quasi-stable).

mod classify;
mod hilbert;
mod primes;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::monomial::{default_names, Monomial, TermOrder};
use crate::poly::{Polynomial, Ring};

pub use classify::StabilityWitness;
pub use hilbert::{HilbertSeries, IntPoly};
pub use primes::MonomialPrime;

/// A monomial ideal stored by its unique minimal generating set.
///
/// Generators are kept sorted decreasingly in revlex so equal ideals compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Drops every generator divisible by another one.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = gens.into_iter().collect();
    v.sort_by_key(|m| m.degree());
    v.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(v.len());
    for m in v {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| TermOrder::RevLex.cmp(b, a)));
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        assert!(gens.iter().all(|g| g.nvars() == nvars), "generator length differs from ring size");
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    /// Convenience constructor from exponent rows.
    pub fn from_exponents(nvars: usize, rows: &[&[u32]]) -> Self {
        Self::new(nvars, rows.iter().map(|r| Monomial::new(r.to_vec())))
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// The ideal `(x_k : k ∈ vars)`.
    pub fn from_vars(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::new(nvars, vars.into_iter().map(|k| Monomial::var(nvars, k)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// lcm of all generators.
    pub fn lcm(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.nvars), |acc, g| acc.lcm(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn add_gen(&self, m: Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().cloned().chain(std::iter::once(m)))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))))
    }

    /// `I : m`.
    pub fn colon_monomial(&self, m: &Monomial) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.colon(m)))
    }

    /// `I : x_k^∞` (0-based `k`): the k-th exponent of every generator is dropped.
    pub fn saturate_var(&self, k: usize) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(|g| g.with_exp(k, 0)))
    }

    /// `I : (x_k : k ∈ vars) = ⋂ I : x_k`.
    pub fn colon_prime(&self, vars: &[usize]) -> MonomialIdeal {
        let mut it = vars.iter();
        let Some(&first) = it.next() else {
            // colon by the zero ideal is the whole ring
            return MonomialIdeal::unit(self.nvars);
        };
        let mut acc = self.colon_monomial(&Monomial::var(self.nvars, first));
        for &k in it {
            acc = acc.intersection(&self.colon_monomial(&Monomial::var(self.nvars, k)));
        }
        acc
    }

    /// `I : p^∞`, the fixed point of `J ↦ J : p`.
    pub fn saturate_prime(&self, vars: &[usize]) -> MonomialIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_prime(vars);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `I : 𝔪^∞`.
    pub fn saturation(&self) -> MonomialIdeal {
        let all: Vec<usize> = (0..self.nvars).collect();
        self.saturate_prime(&all)
    }

    /// Degree-`d` monomials outside the ideal, revlex-descending.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = Monomial::all_of_degree(self.nvars, d).into_iter().filter(|m| !self.contains(m)).collect();
        v.sort_by(|a, b| TermOrder::RevLex.cmp(b, a));
        v
    }

    /// Krull dimension of `R/I`: `n` minus the smallest vertex cover of the
    /// generator supports. The unit ideal gives −1.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.nvars;
        let masks: Vec<u64> = self.gens.iter().map(|g| g.support().fold(0u64, |acc, k| acc | (1 << k))).collect();
        for size in 0..=n {
            if covers_of_size(n, size, &masks) {
                return (n - size) as i64;
            }
        }
        unreachable!("the full variable set is a cover")
    }

    /// Variable reversal `x_i ↦ x_{n+1-i}`.
    pub fn reversed(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.gens.iter().map(Monomial::reversed))
    }

    /// The generators as monic polynomials.
    pub fn to_polynomials(&self, ring: Ring, order: TermOrder) -> Vec<Polynomial> {
        self.gens.iter().map(|g| Polynomial::monomial(ring, order, g.clone())).collect()
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.display_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

fn covers_of_size(n: usize, size: usize, masks: &[u64]) -> bool {
    fn rec(start: usize, n: usize, left: usize, chosen: u64, masks: &[u64]) -> bool {
        if left == 0 {
            return masks.iter().all(|m| m & chosen != 0);
        }
        (start..n).any(|k| rec(k + 1, n, left - 1, chosen | (1 << k), masks))
    }
    rec(0, n, size, 0, masks)
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars)))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows)
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(mi(1, &[&[2], &[3]]), mi(1, &[&[2]]));
        let i = mi(3, &[&[3, 0, 0], &[1, 2, 0], &[3, 1, 0], &[1, 0, 2]]);
        assert_eq!(i.gens().len(), 3);
        assert!(!i.gens().contains(&Monomial::new(vec![3, 1, 0])));
        assert!(MonomialIdeal::new(2, Vec::new()).is_zero());
    }

    #[test]
    fn colon_examples() {
        let i = mi(3, &[&[4, 0, 0], &[1, 3, 0], &[1, 0, 2]]);
        assert!(i.saturate_var(0).is_unit());
        assert_eq!(i.colon_monomial(&Monomial::one(3)), i);
        let j = mi(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]);
        assert!(j.saturate_var(2).is_unit());
        assert_eq!(j.saturate_var(0), mi(3, &[&[0, 0, 1]]));
        assert_eq!(i.colon_monomial(&Monomial::new(vec![1, 0, 0])), mi(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 2]]));
    }

    #[test]
    fn saturation_examples() {
        let i = mi(3, &[&[1, 1, 0], &[1, 0, 1], &[2, 0, 0]]);
        assert_eq!(i.saturation(), mi(3, &[&[1, 0, 0]]));
        let sat = mi(3, &[&[1, 0, 0]]);
        assert_eq!(sat.saturation(), sat);
        let j = mi(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]);
        assert_eq!(j.saturation(), mi(3, &[&[0, 0, 1]]));
    }

    #[test]
    fn standard_monomial_examples() {
        let unit = MonomialIdeal::unit(2);
        assert!((0..4).all(|d| unit.standard_monomials(d).is_empty()));
        let i = mi(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(i.standard_monomials(2), vec![Monomial::new(vec![0, 2])]);
        assert!(i.standard_monomials(3).is_empty());
        assert_eq!(MonomialIdeal::zero(2).standard_monomials(2).len(), 3);
        assert!(i.contains(&Monomial::new(vec![5, 1])));
        assert!(!i.contains(&Monomial::new(vec![0, 2])));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(mi(3, &[&[4, 0, 0], &[1, 3, 0], &[1, 0, 2]]).dimension(), 2);
        assert_eq!(MonomialIdeal::unit(3).dimension(), -1);
        assert_eq!(mi(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]).dimension(), 2);
        assert_eq!(MonomialIdeal::zero(3).dimension(), 3);
        assert_eq!(mi(2, &[&[2, 0], &[0, 2]]).dimension(), 0);
    }

    #[test]
    fn reversal() {
        let i = mi(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]);
        assert_eq!(i.reversed(), mi(3, &[&[1, 0, 1], &[1, 1, 0], &[2, 0, 0]]));
        assert_eq!(i.reversed().reversed(), i);
    }
}

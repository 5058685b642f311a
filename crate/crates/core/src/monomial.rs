//! Exponent vectors and term orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense exponent vector `(μ₁, …, μₙ)` standing for `x₁^μ₁ ⋯ xₙ^μₙ`.
///
/// The derived `Ord` compares exponent tuples lexicographically, which is the
/// lex term order with `x₁ > ⋯ > xₙ`. Use [`TermOrder`] for anything else.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `x_k` (0-based index).
    pub fn var(nvars: usize, k: usize) -> Self {
        Self::var_power(nvars, k, 1)
    }

    pub fn var_power(nvars: usize, k: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[k] = e;
        Monomial(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, k: usize) -> u32 {
        self.0[k]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// The generator of the colon `(self) : (other)`: exponent-wise `max(a - b, 0)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, _)| k)
    }

    /// Number of variables with positive exponent.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|&&e| e > 0).count()
    }

    pub fn with_exp(&self, k: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[k] = e;
        Monomial(v)
    }

    /// Variable reversal `x_i ↦ x_{n+1-i}`.
    pub fn reversed(&self) -> Monomial {
        Monomial(self.0.iter().rev().copied().collect())
    }

    /// Renders the monomial with the given variable names (`x1^2*x3`).
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .support()
            .map(|k| match self.0[k] {
                1 => names[k].clone(),
                e => format!("{}^{}", names[k], e),
            })
            .collect();
        parts.join("*")
    }

    /// All monomials of total degree `d` in `nvars` variables, in lex-descending order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fill_degree(&mut cur, 0, d, &mut out);
        out
    }
}

fn fill_degree(cur: &mut Vec<u32>, k: usize, rem: u32, out: &mut Vec<Monomial>) {
    let n = cur.len();
    if n == 0 {
        if rem == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if k == n - 1 {
        cur[k] = rem;
        out.push(Monomial(cur.clone()));
        cur[k] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        cur[k] = e;
        fill_degree(cur, k + 1, rem - e, out);
    }
    cur[k] = 0;
}

/// Default variable names `x1, …, xn`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("x{i}")).collect()
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars())))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.nvars())))
    }
}

/// Monomial orders with the convention `x₁ > x₂ > ⋯ > xₙ`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    /// Degree reverse lexicographic.
    #[default]
    RevLex,
    Lex,
    DegLex,
}

impl TermOrder {
    /// Compares two exponent vectors, checking that their lengths agree.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::Dimension { expected: a.nvars(), found: b.nvars() });
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison; both vectors must have the same length.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            TermOrder::Lex => a.0.cmp(&b.0),
            TermOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)),
            TermOrder::RevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        // smaller exponent in the last differing variable wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::RevLex => "revlex",
            TermOrder::Lex => "lex",
            TermOrder::DegLex => "deglex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "revlex" | "degrevlex" => Ok(TermOrder::RevLex),
            "lex" => Ok(TermOrder::Lex),
            "deglex" => Ok(TermOrder::DegLex),
            other => Err(Error::Domain(format!("unknown term order '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> Monomial {
        Monomial::new(v.to_vec())
    }

    fn all_up_to(n: usize, d: u32) -> Vec<Monomial> {
        (0..=d).flat_map(|k| Monomial::all_of_degree(n, k)).collect()
    }

    #[test]
    fn revlex_xz_below_y2() {
        assert_eq!(TermOrder::RevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn reflexive() {
        for ord in [TermOrder::RevLex, TermOrder::Lex, TermOrder::DegLex] {
            assert_eq!(ord.cmp(&m(&[2, 1]), &m(&[2, 1])), Ordering::Equal);
        }
    }

    #[test]
    fn lex_ignores_degree() {
        assert_eq!(TermOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 100])), Ordering::Greater);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(matches!(TermOrder::RevLex.compare(&m(&[1]), &m(&[1, 0])), Err(Error::Dimension { .. })));
    }

    #[test]
    fn revlex_degree_three_sequence() {
        // x1^3 > x1^2x2 > x1x2^2 > x2^3 > x1^2x3 > x1x2x3 > x2^2x3 > x1x3^2 > x2x3^2 > x3^3
        let expected = [
            [3, 0, 0],
            [2, 1, 0],
            [1, 2, 0],
            [0, 3, 0],
            [2, 0, 1],
            [1, 1, 1],
            [0, 2, 1],
            [1, 0, 2],
            [0, 1, 2],
            [0, 0, 3],
        ];
        let mut mons = Monomial::all_of_degree(3, 3);
        mons.sort_by(|a, b| TermOrder::RevLex.cmp(b, a));
        let got: Vec<Vec<u32>> = mons.iter().map(|x| x.exponents().to_vec()).collect();
        let want: Vec<Vec<u32>> = expected.iter().map(|x| x.to_vec()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn exhaustive_total_multiplicative() {
        for n in 1..=3 {
            let mons = all_up_to(n, 4);
            for ord in [TermOrder::RevLex, TermOrder::Lex, TermOrder::DegLex] {
                for a in &mons {
                    for b in &mons {
                        let ab = ord.cmp(a, b);
                        assert_eq!(ab, ord.cmp(b, a).reverse());
                        assert_eq!(ab == Ordering::Equal, a == b);
                        for c in &mons {
                            if ab == Ordering::Greater && ord.cmp(b, c) == Ordering::Greater {
                                assert_eq!(ord.cmp(a, c), Ordering::Greater);
                            }
                            if ab != Ordering::Equal {
                                assert_eq!(ord.cmp(&a.mul(c), &b.mul(c)), ab);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(3, 3).len(), 10);
        assert_eq!(Monomial::all_of_degree(2, 2).len(), 3);
        assert_eq!(Monomial::all_of_degree(0, 0).len(), 1);
        assert!(Monomial::all_of_degree(0, 1).is_empty());
    }
}

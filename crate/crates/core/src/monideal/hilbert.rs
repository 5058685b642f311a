use std::fmt;

use serde::{Deserialize, Serialize};

use super::MonomialIdeal;
use crate::monomial::Monomial;

/// Integer polynomial in `t`, dense by ascending power, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPoly(pub Vec<i64>);

impl IntPoly {
    pub fn new(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.0.len().max(o.0.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        let n = self.0.len().max(o.0.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::default();
        }
        let mut v = vec![0i64; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    /// `t^k · self`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        IntPoly(v)
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> IntPoly {
        let mut p = IntPoly::one();
        for _ in 0..k {
            p = p.mul(&IntPoly(vec![1, -1]));
        }
        p
    }

    /// Exact division by `1 - t`, if it divides.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        // q_k = Σ_{i ≤ k} p_i; remainder is p(1)
        let mut q = Vec::with_capacity(self.0.len());
        let mut acc = 0i64;
        for &c in &self.0 {
            acc += c;
            q.push(acc);
        }
        if q.pop() != Some(0) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{a}t")?,
                (_, 1) => write!(f, "t^{k}")?,
                _ => write!(f, "{a}t^{k}")?,
            }
        }
        Ok(())
    }
}

/// `HS(R/I)(t) = numerator(t) / (1 - t)^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub nvars: usize,
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

impl HilbertSeries {
    /// `dim_K (R/I)_d`.
    pub fn coefficient(&self, d: i64) -> i64 {
        let n = self.nvars as i64;
        if n == 0 {
            return if d >= 0 { self.numerator.coeff(d as usize) } else { 0 };
        }
        self.numerator
            .0
            .iter()
            .enumerate()
            .map(|(k, &c)| c * binomial(d - k as i64 + n - 1, n - 1))
            .sum()
    }

    /// Cancels common factors of `1 - t`: returns `(h, e)` with `HS = h / (1 - t)^e`.
    pub fn reduced(&self) -> (IntPoly, usize) {
        let mut h = self.numerator.clone();
        let mut e = self.nvars;
        if h.is_zero() {
            return (h, 0);
        }
        while e > 0 {
            match h.div_one_minus_t() {
                Some(q) => {
                    h = q;
                    e -= 1;
                }
                None => break,
            }
        }
        (h, e)
    }

    /// Krull dimension read off the pole order at `t = 1`; −1 for the zero module.
    pub fn dimension(&self) -> i64 {
        if self.numerator.is_zero() {
            return -1;
        }
        self.reduced().1 as i64
    }

    /// The module has finite length iff the series is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.reduced().1 == 0
    }
}

impl MonomialIdeal {
    /// Hilbert series of `R/I` by the pivot recursion
    /// `N(I) = N(I + (p)) + t^{deg p} N(I : p)` on a variable power `p`.
    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries { numerator: hilbert_numerator(self), nvars: self.nvars }
    }
}

fn hilbert_numerator(i: &MonomialIdeal) -> IntPoly {
    if i.is_zero() {
        return IntPoly::one();
    }
    if i.is_unit() {
        return IntPoly::default();
    }
    let gens = i.gens();
    let pairwise_coprime = gens.iter().enumerate().all(|(a, g)| gens[a + 1..].iter().all(|h| g.is_coprime(h)));
    if pairwise_coprime {
        return gens.iter().fold(IntPoly::one(), |acc, g| acc.mul(&IntPoly::one().sub(&IntPoly::one().shift(g.degree() as usize))));
    }
    let pivot = choose_pivot(i);
    let with = i.add_gen(pivot.clone());
    let colon = i.colon_monomial(&pivot);
    hilbert_numerator(&with).add(&hilbert_numerator(&colon).shift(pivot.degree() as usize))
}

/// Most frequent variable, raised to the lower median of its positive exponents.
fn choose_pivot(i: &MonomialIdeal) -> Monomial {
    let n = i.nvars();
    let (k, _) = (0..n)
        .map(|k| (k, i.gens().iter().filter(|g| g.exp(k) > 0).count()))
        .max_by_key(|&(k, c)| (c, std::cmp::Reverse(k)))
        .expect("at least one variable");
    let mut exps: Vec<u32> = i.gens().iter().map(|g| g.exp(k)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    Monomial::var_power(n, k, exps[(exps.len() - 1) / 2])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows)
    }

    fn dims(i: &MonomialIdeal, upto: i64) -> Vec<i64> {
        let hs = i.hilbert_series();
        (0..=upto).map(|d| hs.coefficient(d)).collect()
    }

    #[test]
    fn zero_ideal_numerator() {
        assert_eq!(MonomialIdeal::zero(3).hilbert_series().numerator, IntPoly::one());
        assert!(MonomialIdeal::unit(3).hilbert_series().numerator.is_zero());
    }

    #[test]
    fn artinian_plane_example() {
        let i = mi(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        assert_eq!(i.hilbert_series().numerator, IntPoly::new(vec![1, 0, -2, 0, 1]));
        assert_eq!(dims(&i, 5), vec![1, 2, 1, 0, 0, 0]);
        assert!(i.hilbert_series().is_polynomial());
    }

    #[test]
    fn eventually_linear_example() {
        let i = mi(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]);
        assert_eq!(dims(&i, 6), vec![1, 3, 3, 4, 5, 6, 7]);
        assert_eq!(i.hilbert_series().dimension(), 2);
    }

    #[test]
    fn series_matches_enumeration() {
        let ideals = [
            mi(3, &[&[3, 0, 0], &[1, 2, 0], &[1, 0, 2]]),
            mi(3, &[&[1, 1, 0], &[1, 0, 1], &[2, 0, 0]]),
            mi(3, &[&[2, 1, 1], &[0, 3, 1], &[1, 1, 2], &[0, 0, 4]]),
            mi(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[2, 0, 0, 1]]),
        ];
        for i in &ideals {
            let hs = i.hilbert_series();
            for d in 0..=10 {
                assert_eq!(hs.coefficient(d), i.standard_monomials(d as u32).len() as i64, "{i:?} degree {d}");
            }
            assert_eq!(hs.dimension(), i.dimension());
        }
    }

    #[test]
    fn division_by_one_minus_t() {
        let p = IntPoly::new(vec![1, -2, 1]);
        assert_eq!(p.div_one_minus_t(), Some(IntPoly::new(vec![1, -1])));
        assert_eq!(IntPoly::new(vec![1, 1]).div_one_minus_t(), None);
    }
}

//! Sparse polynomials over [`Field`] with terms kept sorted in a [`TermOrder`].

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::monomial::{default_names, Monomial, TermOrder};

/// `K[x₁, …, xₙ]`: variable count and coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    pub nvars: usize,
    pub field: Field,
}

impl Ring {
    pub fn new(nvars: usize, field: Field) -> Self {
        Ring { nvars, field }
    }

    pub fn rational(nvars: usize) -> Self {
        Ring { nvars, field: Field::Rational }
    }
}

/// A polynomial as a list of `(monomial, coefficient)` pairs, strictly
/// decreasing in `order`, with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    order: TermOrder,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(ring: Ring, order: TermOrder) -> Self {
        Polynomial { ring, order, terms: Vec::new() }
    }

    pub fn constant(ring: Ring, order: TermOrder, c: FieldElement) -> Self {
        Self::term(ring, order, Monomial::one(ring.nvars), c)
    }

    pub fn term(ring: Ring, order: TermOrder, m: Monomial, c: FieldElement) -> Self {
        assert_eq!(m.nvars(), ring.nvars);
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring, order, terms }
    }

    pub fn monomial(ring: Ring, order: TermOrder, m: Monomial) -> Self {
        Self::term(ring, order, m, ring.field.one())
    }

    pub fn var(ring: Ring, order: TermOrder, k: usize) -> Self {
        Self::monomial(ring, order, Monomial::var(ring.nvars, k))
    }

    /// Builds a canonical polynomial from arbitrary terms (duplicates merged, zeros dropped).
    pub fn from_terms(ring: Ring, order: TermOrder, terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars, "monomial length differs from ring size");
            match acc.get_mut(&m) {
                Some(x) => *x = &*x + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring, order, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-sorts the terms for another term order.
    pub fn with_order(&self, order: TermOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: self.ring, order, terms }
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &FieldElement)> {
        self.terms.first().map(|(m, c)| (m, c)).ok_or(Error::ZeroPolynomial)
    }

    /// Leading term with respect to `ord`, whatever order the terms are stored in.
    pub fn leading_term_in(&self, ord: TermOrder) -> Result<(&Monomial, &FieldElement)> {
        if ord == self.order {
            return self.leading_term();
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(x, _)| x.degree() == d)
            }
        }
    }

    /// A single nonzero term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(format!(
                "{} variables over {} vs {} variables over {}",
                self.ring.nvars, self.ring.field, other.ring.nvars, other.ring.field
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let other = other.with_order(self.order);
        Ok(self.merge(&other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let other = other.with_order(self.order);
        Ok(self.merge(&other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take = if i == self.terms.len() {
                std::cmp::Ordering::Less
            } else if j == other.terms.len() {
                std::cmp::Ordering::Greater
            } else {
                ord.cmp(&self.terms[i].0, &other.terms[j].0)
            };
            match take {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &self.terms[i].1 - &other.terms[j].1 } else { &self.terms[i].1 + &other.terms[j].1 };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: self.ring, order: ord, terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring, order: self.order, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scalar_mul(&self, c: &FieldElement) -> Result<Polynomial> {
        if c.field() != self.ring.field {
            return Err(Error::RingMismatch(format!("scalar in {} for polynomial over {}", c.field(), self.ring.field)));
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(self.ring, self.order));
        }
        Ok(self.scale_unchecked(c))
    }

    fn scale_unchecked(&self, c: &FieldElement) -> Polynomial {
        Polynomial { ring: self.ring, order: self.order, terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// `c · m · self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring, self.order);
        }
        Polynomial {
            ring: self.ring,
            order: self.order,
            terms: self.terms.iter().map(|(x, a)| (x.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let prods = self
            .terms
            .iter()
            .flat_map(|(a, c)| other.terms.iter().map(move |(b, d)| (a.mul(b), c * d)));
        Ok(Polynomial::from_terms(self.ring, self.order, prods))
    }

    /// `self^e`. Negative exponents are rejected.
    pub fn pow(&self, e: i64) -> Result<Polynomial> {
        if e < 0 {
            return Err(Error::Domain(format!("negative exponent {e}")));
        }
        let mut acc = Polynomial::constant(self.ring, self.order, self.ring.field.one());
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// In-place `self -= c · m · g`.
    pub(crate) fn sub_mul_term(&mut self, c: &FieldElement, m: &Monomial, g: &Polynomial) {
        let scaled = g.mul_term(m, c);
        *self = self.merge(&scaled, true);
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, FieldElement)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Trusts the caller that `terms` are strictly decreasing in `order` and nonzero.
    pub(crate) fn from_sorted_terms(ring: Ring, order: TermOrder, terms: Vec<(Monomial, FieldElement)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == std::cmp::Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring, order, terms }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale_unchecked(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElement {
        self.terms.iter().find(|(x, _)| x == m).map(|(_, c)| c.clone()).unwrap_or_else(|| self.ring.field.zero())
    }

    /// Renders the polynomial with the given variable names; parseable by [`crate::parse`].
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&m.display_with(names));
            } else {
                s.push_str(&format!("{}*{}", abs, m.display_with(names)));
            }
        }
        s
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.ring.nvars)))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.ring.nvars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use proptest::prelude::*;

    fn names(n: usize) -> Vec<String> {
        default_names(n)
    }

    fn p(ring: Ring, s: &str) -> Polynomial {
        parse_polynomial(s, &names(ring.nvars), ring, TermOrder::RevLex).unwrap()
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = Ring::rational(2);
        let f = p(r, "x1 + x2");
        let g = p(r, "-x1 - x2");
        assert!(f.add(&g).unwrap().is_zero());
    }

    #[test]
    fn binomial_cube() {
        let r = Ring::rational(2);
        let f = p(r, "2*x1 + x2").pow(3).unwrap();
        assert_eq!(f, p(r, "8*x1^3 + 12*x1^2*x2 + 6*x1*x2^2 + x2^3"));
    }

    #[test]
    fn frobenius_in_char_two() {
        let r = Ring::new(2, Field::Prime(2));
        let f = p(r, "x1 + x2").pow(2).unwrap();
        assert_eq!(f, p(r, "x1^2 + x2^2"));
        // ((ax+by)^2, (cx+dy)^2) only keep square terms
        for (a, b) in [(1, 1), (3, 5), (7, 2)] {
            let g = p(r, &format!("{a}*x1 + {b}*x2")).pow(2).unwrap();
            assert!(g.terms().iter().all(|(m, _)| m.exponents().iter().all(|e| e % 2 == 0)));
        }
    }

    #[test]
    fn ring_mismatch_and_negative_power() {
        let f = p(Ring::rational(2), "x1");
        let g = p(Ring::rational(3), "x1");
        assert!(matches!(f.add(&g), Err(Error::RingMismatch(_))));
        assert!(matches!(f.mul(&g), Err(Error::RingMismatch(_))));
        assert!(matches!(f.pow(-1), Err(Error::Domain(_))));
    }

    #[test]
    fn leading_terms() {
        let r = Ring::rational(4);
        let f = p(r, "x2^2*x3 + x3*x4^2 + x3^3");
        let (m, _) = f.leading_term().unwrap();
        assert_eq!(m.exponents(), &[0, 2, 1, 0]);
        let c = p(r, "5");
        let (m, c) = c.leading_term().unwrap();
        assert!(m.is_one());
        assert_eq!(c, &Field::Rational.from_i64(5));
        let s = p(Ring::rational(2), "x2 + x1");
        for ord in [TermOrder::RevLex, TermOrder::Lex, TermOrder::DegLex] {
            assert_eq!(s.leading_term_in(ord).unwrap().0.exponents(), &[1, 0]);
        }
        assert!(matches!(Polynomial::zero(r, TermOrder::RevLex).leading_term(), Err(Error::ZeroPolynomial)));
    }

    fn arb_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, ring.nvars), -5i64..=5), 0..5).prop_map(move |ts| {
            Polynomial::from_terms(
                ring,
                TermOrder::RevLex,
                ts.into_iter().map(|(e, c)| (Monomial::new(e), ring.field.from_i64(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(Ring::rational(3)), b in arb_poly(Ring::rational(3)), c in arb_poly(Ring::rational(3))) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert!(a.sub(&a).unwrap().is_zero());
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly(Ring::rational(3))) {
            let s = a.display_with(&names(3));
            prop_assert_eq!(p(Ring::rational(3), &s), a);
        }
    }
}

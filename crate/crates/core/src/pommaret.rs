//! Pommaret division: class, multiplicative variables, completion and the
//! involutive normal form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

/// `min{i : μ_i ≠ 0}`, 1-based.
pub fn cls(mu: &Monomial) -> Result<usize> {
    mu.support().next().map(|k| k + 1).ok_or_else(|| Error::Domain("the constant monomial has no class".into()))
}

/// 0-based indices of `x_1, …, x_{cls μ}`; every variable for the constant monomial.
pub fn multiplicative_vars(mu: &Monomial) -> Vec<usize> {
    let top = cls(mu).unwrap_or(mu.nvars());
    (0..top).collect()
}

/// `μ | ν` and `ν − μ` only involves multiplicative variables of `μ`.
pub fn involutive_divides(mu: &Monomial, nu: &Monomial) -> bool {
    if !mu.divides(nu) {
        return false;
    }
    let top = cls(mu).unwrap_or(mu.nvars());
    nu.div(mu).support().all(|k| k < top)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutiveBasis {
    pub nvars: usize,
    /// Sorted by degree, then decreasing revlex.
    pub elements: Vec<Monomial>,
}

impl InvolutiveBasis {
    pub fn multiplicative_masks(&self) -> Vec<Vec<usize>> {
        self.elements.iter().map(multiplicative_vars).collect()
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.nvars, self.elements.iter().cloned())
    }
}

/// Completion stopped at the degree cap without closing up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divergence {
    pub degree_cap: u32,
    /// Elements collected before the cap was crossed.
    pub partial: Vec<Monomial>,
    /// A prolongation above the cap with no involutive divisor.
    pub witness: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Completion {
    Basis(InvolutiveBasis),
    Diverges(Divergence),
}

impl Completion {
    pub fn basis(&self) -> Option<&InvolutiveBasis> {
        match self {
            Completion::Basis(b) => Some(b),
            Completion::Diverges(_) => None,
        }
    }
}

/// `max(n + 2·maxdeg, deg lcm(I))`. The lcm term dominates the regularity, which
/// bounds the degree of a Pommaret basis whenever one exists.
pub fn default_degree_cap(i: &MonomialIdeal) -> u32 {
    let n = i.nvars() as u32;
    (n + 2 * i.max_degree().unwrap_or(0)).max(i.lcm().degree())
}

fn sort_elements(v: &mut [Monomial]) {
    v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| TermOrder::RevLex.cmp(b, a)));
}

/// Adds non-multiplicative prolongations `x_k · h` (`k > cls h`) lacking an
/// involutive divisor, lowest degree first, until the set is closed.
pub fn pommaret_complete(i: &MonomialIdeal, degree_cap: Option<u32>) -> Result<Completion> {
    if i.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = i.nvars();
    let cap = degree_cap.unwrap_or_else(|| default_degree_cap(i));
    let mut basis: Vec<Monomial> = i.gens().to_vec();
    sort_elements(&mut basis);
    loop {
        let mut pending: Vec<Monomial> = Vec::new();
        for h in &basis {
            let top = cls(h).unwrap_or(n);
            for k in top..n {
                let p = h.mul(&Monomial::var(n, k));
                if !basis.iter().any(|g| involutive_divides(g, &p)) && !pending.contains(&p) {
                    pending.push(p);
                }
            }
        }
        let Some(low) = pending.iter().map(Monomial::degree).min() else {
            break;
        };
        if low > cap {
            if i.is_quasi_stable() {
                return Err(Error::Internal(format!(
                    "Pommaret completion of a quasi-stable ideal passed degree {cap}"
                )));
            }
            sort_elements(&mut pending);
            return Ok(Completion::Diverges(Divergence { degree_cap: cap, partial: basis, witness: pending.swap_remove(0) }));
        }
        pending.retain(|p| p.degree() == low);
        // an element with an involutive divisor has its cone inside the divisor's cone
        basis.retain(|h| !pending.iter().any(|p| p != h && involutive_divides(p, h)));
        basis.extend(pending);
        sort_elements(&mut basis);
    }
    Ok(Completion::Basis(InvolutiveBasis { nvars: n, elements: basis }))
}

/// The unique involutive divisor of `m` in `b`, or `None` when `m ∉ (b)`.
pub fn involutive_normal_form(m: &Monomial, b: &InvolutiveBasis) -> Result<Option<Monomial>> {
    let mut found = b.elements.iter().filter(|h| involutive_divides(h, m));
    let first = found.next().cloned();
    if let Some(second) = found.next() {
        return Err(Error::InvalidBasis(format!("{m:?} has involutive divisors {:?} and {second:?}", first.unwrap())));
    }
    if first.is_none() && b.elements.iter().any(|h| h.divides(m)) {
        return Err(Error::InvalidBasis(format!("{m:?} lies in the ideal but has no involutive divisor")));
    }
    Ok(first)
}

/// Every monomial of `(b)` up to `degree` has exactly one involutive divisor.
pub fn check_partition(b: &InvolutiveBasis, degree: u32) -> Result<()> {
    for d in 0..=degree {
        for m in Monomial::all_of_degree(b.nvars, d) {
            involutive_normal_form(&m, b)?;
        }
    }
    Ok(())
}

/// Polynomial Pommaret basis: `t · g` for each element `t · lm(g)` of the
/// monomial Pommaret basis of the revlex leading ideal.
#[derive(Debug, Clone)]
pub struct PolynomialPommaret {
    pub monomial: InvolutiveBasis,
    pub elements: Vec<Polynomial>,
}

pub fn pommaret_of_graded(gens: &[Polynomial], degree_cap: Option<u32>) -> Result<std::result::Result<PolynomialPommaret, Divergence>> {
    let gb = buchberger(gens, TermOrder::RevLex)?;
    lift(&gb, degree_cap)
}

fn lift(gb: &GroebnerBasis, degree_cap: Option<u32>) -> Result<std::result::Result<PolynomialPommaret, Divergence>> {
    let b = match pommaret_complete(&gb.initial_ideal(), degree_cap)? {
        Completion::Basis(b) => b,
        Completion::Diverges(d) => return Ok(Err(d)),
    };
    let one = gb.ring().field.one();
    let elements = b
        .elements
        .iter()
        .map(|t| {
            let g = gb
                .generators()
                .iter()
                .find(|g| g.leading_monomial().expect("nonzero").divides(t))
                .expect("every basis element lies in the leading ideal");
            g.mul_term(&t.div(g.leading_monomial().unwrap()), &one)
        })
        .collect();
    Ok(Ok(PolynomialPommaret { monomial: b, elements }))
}

use serde::{Deserialize, Serialize};

use super::MonomialIdeal;
use crate::monomial::Monomial;

/// A failed saturation equality: `monomial` lies in `I : x_k^∞` but not in
/// the saturation by the segment prime at 1-based variable `index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityWitness {
    pub index: usize,
    pub monomial: Monomial,
}

impl MonomialIdeal {
    /// Checks `I : x_j^∞ = I : (x_1, …, x_j)^∞` for every `j`.
    pub fn borel_type_witness(&self) -> Option<StabilityWitness> {
        let w = (0..self.nvars).find_map(|j| {
            let segment: Vec<usize> = (0..=j).collect();
            saturation_gap(self, j, &segment)
        });
        if cfg!(debug_assertions) {
            let by_primes = self.associated_primes().iter().all(|p| p.is_initial_segment());
            assert_eq!(w.is_none(), by_primes, "Borel-type tests disagree on {self:?}");
        }
        w
    }

    pub fn is_borel_type(&self) -> bool {
        self.borel_type_witness().is_none()
    }

    /// Checks `I : x_k^∞ = I : (x_k, …, x_n)^∞` for every `k`.
    pub fn quasi_stable_witness(&self) -> Option<StabilityWitness> {
        let n = self.nvars;
        let w = (0..n).find_map(|k| {
            let segment: Vec<usize> = (k..n).collect();
            saturation_gap(self, k, &segment)
        });
        if cfg!(debug_assertions) {
            let by_primes = self.associated_primes().iter().all(|p| p.is_terminal_segment(n));
            assert_eq!(w.is_none(), by_primes, "quasi-stable tests disagree on {self:?}");
        }
        w
    }

    pub fn is_quasi_stable(&self) -> bool {
        self.quasi_stable_witness().is_none()
    }

    /// Associated-prime characterization of Borel type: every prime is `(x_1, …, x_j)`.
    pub fn is_borel_type_by_primes(&self) -> bool {
        self.associated_primes().iter().all(|p| p.is_initial_segment())
    }

    /// Associated-prime characterization of quasi-stability: every prime is `(x_k, …, x_n)`.
    pub fn is_quasi_stable_by_primes(&self) -> bool {
        self.associated_primes().iter().all(|p| p.is_terminal_segment(self.nvars))
    }

    /// `x_i (u / x_j) ∈ I` for every generator `u`, every `x_j | u` and `i < j`.
    pub fn is_strongly_stable(&self) -> bool {
        self.gens.iter().all(|u| u.support().all(|j| (0..j).all(|i| self.contains(&exchange(u, i, j)))))
    }

    /// Like [`Self::is_strongly_stable`] but only for `j` the largest index dividing `u`.
    pub fn is_stable(&self) -> bool {
        self.gens.iter().all(|u| match u.support().last() {
            None => true,
            Some(j) => (0..j).all(|i| self.contains(&exchange(u, i, j))),
        })
    }
}

fn exchange(u: &Monomial, i: usize, j: usize) -> Monomial {
    let mut e = u.exponents().to_vec();
    e[j] -= 1;
    e[i] += 1;
    Monomial::new(e)
}

/// `I : p^∞ ⊆ I : x_k^∞` always holds since `x_k ∈ p`; report a generator of
/// the larger side that the smaller one misses.
fn saturation_gap(i: &MonomialIdeal, k: usize, segment: &[usize]) -> Option<StabilityWitness> {
    let by_var = i.saturate_var(k);
    let by_prime = i.saturate_prime(segment);
    by_var
        .gens()
        .iter()
        .find(|g| !by_prime.contains(g))
        .map(|g| StabilityWitness { index: k + 1, monomial: g.clone() })
}

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::MonomialIdeal;
use crate::monomial::{default_names, Monomial};

/// A monomial prime `(x_k : k ∈ vars)`, 0-based sorted indices.
///
/// The empty set stands for the zero prime, which only occurs as the
/// associated prime of the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MonomialPrime {
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(vars: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = vars.into_iter().collect();
        MonomialPrime { vars: set.into_iter().collect() }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.vars.binary_search(&k).is_ok()
    }

    /// `(x_1, …, x_j)` for some `j ≥ 0`.
    pub fn is_initial_segment(&self) -> bool {
        self.vars.iter().enumerate().all(|(i, &k)| i == k)
    }

    /// `(x_k, …, x_n)` for some `k`.
    pub fn is_terminal_segment(&self, nvars: usize) -> bool {
        let start = nvars - self.vars.len();
        self.vars.iter().enumerate().all(|(i, &k)| k == start + i)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.vars.is_empty() {
            return "(0)".into();
        }
        let parts: Vec<&str> = self.vars.iter().map(|&k| names[k].as_str()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.vars.last().map_or(0, |k| k + 1);
        write!(f, "{}", self.display_with(&default_names(n)))
    }
}

impl MonomialIdeal {
    /// Irredundant irreducible decomposition: each component is generated by pure powers.
    ///
    /// Splits a generator `m = x_k^a · v` (with `v ≠ 1`) as `I = (I + x_k^a) ∩ (I + v)`
    /// until every generator is a pure power, then drops components containing
    /// another one. The unit ideal has no components.
    pub fn irreducible_components(&self) -> Vec<MonomialIdeal> {
        let mut leaves = BTreeSet::new();
        split(self, &mut leaves);
        let leaves: Vec<MonomialIdeal> = leaves.into_iter().map(|k| k.0).collect();
        leaves
            .iter()
            .enumerate()
            .filter(|(a, q)| !leaves.iter().enumerate().any(|(b, other)| *a != b && q.contains_ideal(other)))
            .map(|(_, q)| q.clone())
            .collect()
    }

    /// `Ass(R/I)`: radicals of the irredundant irreducible components.
    pub fn associated_primes(&self) -> BTreeSet<MonomialPrime> {
        self.irreducible_components()
            .iter()
            .map(|q| MonomialPrime::new(q.gens().iter().flat_map(|g| g.support().collect::<Vec<_>>())))
            .collect()
    }
}

/// Ordered wrapper so leaves can be deduplicated in a set.
#[derive(PartialEq, Eq)]
struct Key(MonomialIdeal);

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.gens().cmp(other.0.gens())
    }
}

fn split(i: &MonomialIdeal, leaves: &mut BTreeSet<Key>) {
    if i.is_unit() {
        return;
    }
    let Some(g) = i.gens().iter().find(|g| g.support_size() >= 2) else {
        leaves.insert(Key(i.clone()));
        return;
    };
    let k = g.support().next().expect("nonempty support");
    let u = Monomial::var_power(i.nvars(), k, g.exp(k));
    let v = g.div(&u);
    split(&i.add_gen(u), leaves);
    split(&i.add_gen(v), leaves);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows)
    }

    fn primes(list: &[&[usize]]) -> BTreeSet<MonomialPrime> {
        list.iter().map(|v| MonomialPrime::new(v.iter().copied())).collect()
    }

    #[test]
    fn quasi_stable_example_primes() {
        let i = mi(3, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]);
        assert_eq!(i.associated_primes(), primes(&[&[2], &[0, 1, 2]]));
        let comps = i.irreducible_components();
        let back = comps.iter().skip(1).fold(comps[0].clone(), |acc, q| acc.intersection(q));
        assert_eq!(back, i);
    }

    #[test]
    fn borel_example_primes() {
        let j = mi(3, &[&[1, 1, 0], &[1, 0, 1], &[2, 0, 0]]);
        assert_eq!(j.associated_primes(), primes(&[&[0], &[0, 1, 2]]));
    }

    #[test]
    fn cubic_initial_ideal_primes() {
        let i = mi(
            3,
            &[&[3, 0, 0], &[2, 1, 0], &[0, 3, 0], &[2, 0, 1], &[1, 0, 2], &[0, 0, 3], &[0, 2, 1], &[1, 2, 0]],
        );
        assert_eq!(i.associated_primes(), primes(&[&[0, 1, 2]]));
    }

    #[test]
    fn degenerate_ideals() {
        assert!(MonomialIdeal::unit(3).associated_primes().is_empty());
        assert_eq!(MonomialIdeal::zero(2).associated_primes(), primes(&[&[]]));
    }

    #[test]
    fn segments() {
        assert!(MonomialPrime::new([0, 1]).is_initial_segment());
        assert!(!MonomialPrime::new([1]).is_initial_segment());
        assert!(MonomialPrime::new([1, 2]).is_terminal_segment(3));
        assert!(!MonomialPrime::new([0]).is_terminal_segment(3));
        assert!(MonomialPrime::new([]).is_initial_segment());
        assert!(MonomialPrime::new([]).is_terminal_segment(3));
    }
}

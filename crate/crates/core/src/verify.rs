//! Random instance generators and cross-checks between independent routes.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::annihilator::{annihilator_numbers, annihilator_numbers_graded, correspondence};
use crate::betti::{betti_koszul, betti_of_graded, derived_invariants, extremal_betti, Subject};
use crate::error::Result;
use crate::field::Field;
use crate::groebner::{apply_change, initial_ideal, LinearChange};
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Polynomial, Ring};
use crate::pommaret::{pommaret_complete, Completion};
use crate::reduction::canonical_reduction_number;

/// A proper monomial ideal with `1..=max_gens` random generators of degree `1..=max_deg`.
pub fn random_monomial_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| {
        let d = rng.gen_range(1..=max_deg);
        let mut e = vec![0u32; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        Monomial::new(e)
    });
    MonomialIdeal::new(n, gens)
}

/// A random subset (`1..=max_gens` elements) of the monomials of degree `1..=max_deg`.
pub fn random_small_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    let pool: Vec<Monomial> = (1..=max_deg).flat_map(|d| Monomial::all_of_degree(n, d)).collect();
    let count = rng.gen_range(1..=max_gens.min(pool.len()));
    MonomialIdeal::new(n, pool.choose_multiple(rng, count).cloned())
}

/// Homogeneous generators obtained by a random integer change of coordinates
/// of a random monomial ideal, kept only when the revlex initial ideal is of Borel type.
pub fn random_graded_with_borel_initial<R: Rng>(
    rng: &mut R,
    n: usize,
    max_gens: usize,
    max_deg: u32,
    range: i64,
) -> Result<Option<Vec<Polynomial>>> {
    let ring = Ring::rational(n);
    let m = random_monomial_ideal(rng, n, max_gens, max_deg);
    let change = loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-range..=range)).collect()).collect();
        if let Ok(c) = LinearChange::from_integers(Field::Rational, &rows) {
            break c;
        }
    };
    let gens = apply_change(&m.to_polynomials(ring, TermOrder::RevLex), &change)?;
    let init = initial_ideal(&gens, TermOrder::RevLex)?;
    Ok(init.is_borel_type().then_some(gens))
}

/// Equivalences for a monomial ideal; each entry names a failed statement.
pub fn monomial_equivalences(i: &MonomialIdeal) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let borel = i.is_borel_type();
    let quasi = i.is_quasi_stable();
    if borel != i.is_borel_type_by_primes() {
        failures.push("Borel type: colon test and associated primes disagree".into());
    }
    if quasi != i.is_quasi_stable_by_primes() {
        failures.push("quasi-stable: colon test and associated primes disagree".into());
    }
    if borel != annihilator_numbers(i)?.all_finite() {
        failures.push(format!("Borel type is {borel} but finiteness of the colon modules is {}", !borel));
    }
    let terminates = matches!(pommaret_complete(i, None)?, Completion::Basis(_));
    if quasi != terminates {
        failures.push(format!("quasi-stable is {quasi} but Pommaret completion termination is {terminates}"));
    }
    if borel != i.reversed().is_quasi_stable() {
        failures.push("Borel type of I differs from quasi-stability of the reversed ideal".into());
    }
    Ok(failures)
}

/// Named comparisons between `I` and its revlex initial ideal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialIdealChecks {
    pub extremal_betti: bool,
    pub annihilator_tables: bool,
    pub correspondence: bool,
    pub invariants: bool,
    pub tail_reduction: bool,
    pub upper_bound: bool,
}

impl InitialIdealChecks {
    pub fn all(&self) -> bool {
        self.extremal_betti
            && self.annihilator_tables
            && self.correspondence
            && self.invariants
            && self.tail_reduction
            && self.upper_bound
    }
}

/// Runs every comparison for homogeneous generators whose initial ideal is of Borel type.
pub fn initial_ideal_checks(gens: &[Polynomial]) -> Result<InitialIdealChecks> {
    let init = initial_ideal(gens, TermOrder::RevLex)?;
    let bi = betti_of_graded(gens, None)?;
    let bin = betti_koszul(&init, None)?;
    let ai = annihilator_numbers_graded(gens)?;
    let ain = annihilator_numbers(&init)?;
    let ci = correspondence(&bi, &ai)?;
    let cin = correspondence(&bin, &ain)?;
    let tail = canonical_reduction_number(gens);
    Ok(InitialIdealChecks {
        extremal_betti: extremal_betti(&bi.clone().with_subject(Subject::Ideal))
            == extremal_betti(&bin.clone().with_subject(Subject::Ideal)),
        annihilator_tables: ai == ain,
        correspondence: ci.corners_match && cin.corners_match,
        invariants: derived_invariants(&bi) == derived_invariants(&bin),
        tail_reduction: tail.is_ok_and(|t| t.value == t.initial_value),
        upper_bound: ci.bound_violations.is_empty() && cin.bound_violations.is_empty(),
    })
}

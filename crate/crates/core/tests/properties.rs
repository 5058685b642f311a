use borel_core::betti::ORACLE_CAP;
use borel_core::verify::{initial_ideal_checks, monomial_equivalences, random_graded_with_borel_initial};
use borel_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn monomial_ideal(n: usize, max_gens: usize, max_deg: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u32..=max_deg, n), 1..=max_gens).prop_filter_map(
        "nonconstant generators within the degree bound",
        move |rows| {
            let gens: Vec<Monomial> = rows
                .into_iter()
                .map(Monomial::new)
                .filter(|m| m.degree() >= 1 && m.degree() <= max_deg)
                .collect();
            (!gens.is_empty()).then(|| MonomialIdeal::new(n, gens))
        },
    )
}

fn poly_strategy(n: usize, deg: u32) -> impl Strategy<Value = Polynomial> {
    let mons = Monomial::all_of_degree(n, deg);
    prop::collection::vec(-3i64..=3, mons.len()).prop_map(move |cs| {
        let ring = Ring::rational(n);
        Polynomial::from_terms(ring, TermOrder::RevLex, mons.iter().cloned().zip(cs.into_iter().map(|c| ring.field.from_i64(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn koszul_matches_oracle(i in monomial_ideal(3, 6, 4)) {
        prop_assert_eq!(betti_koszul(&i, None).unwrap(), betti_oracle(&i, ORACLE_CAP).unwrap());
    }

    #[test]
    fn four_variable_oracle(i in monomial_ideal(4, 4, 3)) {
        prop_assert_eq!(betti_koszul(&i, None).unwrap(), betti_oracle(&i, ORACLE_CAP).unwrap());
    }

    #[test]
    fn classification_equivalences(i in monomial_ideal(3, 5, 3)) {
        let failures = monomial_equivalences(&i).unwrap();
        prop_assert!(failures.is_empty(), "{:?}: {:?}", i, failures);
    }

    #[test]
    fn strongly_stable_implies_stable_implies_borel(i in monomial_ideal(3, 5, 3)) {
        if i.is_strongly_stable() {
            prop_assert!(i.is_stable());
        }
        if i.is_stable() {
            prop_assert!(i.is_borel_type());
        }
    }

    #[test]
    fn hilbert_series_counts_standard_monomials(i in monomial_ideal(3, 5, 4)) {
        let hs = i.hilbert_series();
        for d in 0..9u32 {
            prop_assert_eq!(hs.coefficient(d as i64), i.standard_monomials(d).len() as i64);
        }
        prop_assert_eq!(hs.dimension(), i.dimension());
    }

    #[test]
    fn decomposition_recovers_ideal(i in monomial_ideal(3, 5, 3)) {
        let comps = i.irreducible_components();
        let back = comps.iter().skip(1).fold(comps[0].clone(), |acc, q| acc.intersection(q));
        prop_assert_eq!(back, i);
    }

    #[test]
    fn pommaret_partition(i in monomial_ideal(3, 4, 3)) {
        if let Completion::Basis(b) = pommaret_complete(&i, None).unwrap() {
            prop_assert_eq!(b.ideal(), i.clone());
            borel_core::pommaret::check_partition(&b, 2 * i.max_degree().unwrap() + 3).unwrap();
        }
    }

    #[test]
    fn groebner_basis_properties(f in poly_strategy(3, 2), g in poly_strategy(3, 2), h in poly_strategy(3, 3)) {
        let gens: Vec<Polynomial> = [f, g, h].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = buchberger(&gens, TermOrder::RevLex).unwrap();
        for p in &gens {
            prop_assert!(gb.contains(p).unwrap());
        }
        let again = buchberger(gb.generators(), TermOrder::RevLex).unwrap();
        prop_assert_eq!(&again, &gb);
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(buchberger(&rev, TermOrder::RevLex).unwrap(), gb.clone());
        // the Hilbert function does not depend on the order
        let lex = initial_ideal(&gens, TermOrder::Lex).unwrap().hilbert_series();
        prop_assert_eq!(lex.numerator, gb.initial_ideal().hilbert_series().numerator);
    }

    #[test]
    fn betti_below_initial_ideal(f in poly_strategy(3, 2), g in poly_strategy(3, 2), h in poly_strategy(3, 2)) {
        let gens: Vec<Polynomial> = [f, g, h].into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let t = betti_of_graded(&gens, None).unwrap();
        let init = initial_ideal(&gens, TermOrder::RevLex).unwrap();
        let tin = betti_koszul(&init, None).unwrap();
        for ((i, j), v) in t.entries() {
            prop_assert!(v <= tin.quotient_entry(i, j));
        }
    }
}

#[test]
fn revlex_tail_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ring = Ring::rational(3);
    for _ in 0..20 {
        let Some(gens) = random_graded_with_borel_initial(&mut rng, 3, 4, 3, 3).unwrap() else {
            continue;
        };
        let init = initial_ideal(&gens, TermOrder::RevLex).unwrap();
        for d in 0..=3 {
            let mut all = gens.clone();
            all.extend((3 - d..3).map(|k| Polynomial::var(ring, TermOrder::RevLex, k)));
            let lhs = initial_ideal(&all, TermOrder::RevLex).unwrap();
            assert_eq!(lhs, init.sum(&MonomialIdeal::from_vars(3, 3 - d..3)));
        }
    }
}

#[test]
fn initial_ideal_theorems_on_a_sample() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 15 {
        if let Some(gens) = random_graded_with_borel_initial(&mut rng, 3, 4, 3, 3).unwrap() {
            let c = initial_ideal_checks(&gens).unwrap();
            assert!(c.all(), "{gens:?}: {c:?}");
            checked += 1;
        }
    }
}

use borel_core::*;

const CUBICS: &str = "(2x1+x2)^3, (x2+2x3)^3, (3x1+x3)^3, (x1+3x3)^3, (3x1+2x3)^3, (2x2-3x3)^3, (4x1+3x2)^3, (3x1-5x3)^3";

fn cubics() -> Vec<Polynomial> {
    parse_polynomial_list(CUBICS, (1, 1), &default_names(3), Ring::rational(3), TermOrder::RevLex).unwrap()
}

fn mi(rows: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(3, rows)
}

fn initial() -> MonomialIdeal {
    mi(&[&[3, 0, 0], &[2, 1, 0], &[0, 3, 0], &[2, 0, 1], &[1, 0, 2], &[0, 0, 3], &[0, 2, 1], &[1, 2, 0]])
}

fn gin() -> MonomialIdeal {
    mi(&[
        &[3, 0, 0],
        &[2, 1, 0],
        &[1, 2, 0],
        &[0, 3, 0],
        &[2, 0, 1],
        &[1, 1, 1],
        &[0, 2, 1],
        &[1, 0, 2],
        &[0, 1, 3],
        &[0, 0, 4],
    ])
}

#[test]
fn initial_ideal_and_primes() {
    let init = initial_ideal(&cubics(), TermOrder::RevLex).unwrap();
    assert_eq!(init, initial());
    assert_eq!(init.associated_primes().into_iter().collect::<Vec<_>>(), vec![MonomialPrime::new([0, 1, 2])]);
    assert!(init.is_borel_type());
}

#[test]
fn betti_diagram_of_the_ideal() {
    let t = betti_of_graded(&cubics(), None).unwrap().with_subject(Subject::Ideal);
    let want = "        0    1    2\n--------------------\n 3:     8    9    1\n 4:     -    1    2\n--------------------\nTot:    8   10    3\n";
    assert_eq!(t.render(), want);
}

#[test]
fn invariants_agree_with_initial_ideal() {
    let ti = betti_of_graded(&cubics(), None).unwrap();
    let tin = betti_koszul(&initial(), None).unwrap();
    assert_eq!(derived_invariants(&ti), derived_invariants(&tin));
    assert_eq!(derived_invariants(&ti).depth, 0);
    assert_eq!(derived_invariants(&ti).reg_ideal, Some(4));
    let ei = extremal_betti(&ti.clone().with_subject(Subject::Ideal));
    assert_eq!(ei, vec![Corner { i: 2, j: 6, value: 2 }]);
    assert_eq!(ei, extremal_betti(&tin.with_subject(Subject::Ideal)));
}

#[test]
fn minimal_generators_agree_but_first_syzygies_do_not() {
    let ti = betti_of_graded(&cubics(), None).unwrap().with_subject(Subject::Ideal);
    let tin = betti_koszul(&initial(), None).unwrap().with_subject(Subject::Ideal);
    assert_eq!(ti.totals()[0], tin.totals()[0]);
    assert_eq!((ti.totals()[1], tin.totals()[1]), (10, 11));
}

#[test]
fn gin_diagram() {
    let t = betti_koszul(&gin(), None).unwrap().with_subject(Subject::Ideal);
    let want = "        0    1    2\n--------------------\n 3:     8   11    4\n 4:     2    4    2\n--------------------\nTot:   10   15    6\n";
    assert_eq!(t.render(), want);
    assert!(gin().is_strongly_stable());
}

#[test]
fn sampled_gin() {
    let s = gin_sample(&cubics(), TermOrder::RevLex, 3, 1).unwrap();
    assert_eq!(s.ideal, gin());
}

#[test]
fn annihilators_of_ideal_and_initial_ideal() {
    let c = compare_with_initial(&cubics()).unwrap();
    assert!(c.hypothesis_holds());
    assert!(c.equal);
    let r = correspondence_check_graded(&cubics()).unwrap();
    assert!(r.passed());
    assert_eq!(r.extremal_alpha, vec![Corner { i: 0, j: 3, value: 2 }]);
}

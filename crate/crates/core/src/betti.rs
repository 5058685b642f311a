//! Graded Betti numbers through Koszul homology, a simplicial oracle, derived
//! invariants and the CoCoA-style diagram printer.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis};
use crate::linalg::{rank, SparseRow};
use crate::monideal::{HilbertSeries, IntPoly, MonomialIdeal};
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;

/// Which module a table describes. Entries are stored for `R/I`; the ideal
/// view reads `β_i(I) = β_{i+1}(R/I)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Subject {
    Quotient,
    Ideal,
}

impl std::str::FromStr for Subject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quotient" => Ok(Subject::Quotient),
            "ideal" => Ok(Subject::Ideal),
            other => Err(Error::Domain(format!("unknown subject '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    quotient: BTreeMap<(usize, u32), u64>,
    subject: Subject,
    truncated: bool,
}

impl BettiTable {
    /// Builds a table from nonzero `β_{i,j}(R/I)` values.
    pub fn from_quotient(nvars: usize, entries: impl IntoIterator<Item = ((usize, u32), u64)>, truncated: bool) -> Self {
        let quotient = entries.into_iter().filter(|(_, v)| *v != 0).collect();
        BettiTable { nvars, quotient, subject: Subject::Quotient, truncated }
    }

    pub fn with_subject(mut self, subject: Subject) -> Self {
        self.subject = subject;
        self
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Set when a degree bound below the Taylor bound was imposed.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// `β_{i,j}` of the table's subject.
    pub fn get(&self, i: usize, j: u32) -> u64 {
        match self.subject {
            Subject::Quotient => self.quotient_entry(i, j),
            Subject::Ideal => self.quotient_entry(i + 1, j),
        }
    }

    pub fn quotient_entry(&self, i: usize, j: u32) -> u64 {
        self.quotient.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero `((i, j), β_{i,j})` of the table's subject, ordered by `(i, j)`.
    pub fn entries(&self) -> Vec<((usize, u32), u64)> {
        match self.subject {
            Subject::Quotient => self.quotient.iter().map(|(&k, &v)| (k, v)).collect(),
            Subject::Ideal => {
                self.quotient.iter().filter(|((i, _), _)| *i >= 1).map(|(&(i, j), &v)| ((i - 1, j), v)).collect()
            }
        }
    }

    /// Total Betti numbers `β_i` of the subject for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<u64> {
        let e = self.entries();
        let Some(top) = e.iter().map(|((i, _), _)| *i).max() else {
            return Vec::new();
        };
        let mut t = vec![0; top + 1];
        for ((i, _), v) in e {
            t[i] += v;
        }
        t
    }

    /// `Σ (−1)^i β_{i,j}(R/I) t^j`.
    pub fn euler_numerator(&self) -> IntPoly {
        let top = self.quotient.keys().map(|(_, j)| *j as usize).max().unwrap_or(0);
        let mut c = vec![0i64; top + 1];
        for (&(i, j), &v) in &self.quotient {
            let v = v as i64;
            c[j as usize] += if i % 2 == 0 { v } else { -v };
        }
        IntPoly::new(c)
    }

    /// CoCoA layout: columns `i`, rows `j - i`, `-` for zero, totals last.
    pub fn render(&self) -> String {
        let entries = self.entries();
        let ncols = self.totals().len();
        let mut out = String::from("    ");
        for i in 0..ncols {
            out.push_str(&format!("{i:>5}"));
        }
        out.push('\n');
        let rule = "-".repeat(5 * ncols + 5);
        out.push_str(&rule);
        out.push('\n');
        let rows: Vec<i64> = entries.iter().map(|((i, j), _)| *j as i64 - *i as i64).collect();
        if let (Some(&lo), Some(&hi)) = (rows.iter().min(), rows.iter().max()) {
            for l in lo..=hi {
                out.push_str(&format!("{l:>2}: "));
                for i in 0..ncols {
                    let j = l + i as i64;
                    let v = if j < 0 { 0 } else { self.get(i, j as u32) };
                    if v == 0 {
                        out.push_str(&format!("{:>5}", "-"));
                    } else {
                        out.push_str(&format!("{v:>5}"));
                    }
                }
                out.push('\n');
            }
        }
        out.push_str(&rule);
        out.push('\n');
        out.push_str("Tot:");
        for t in self.totals() {
            out.push_str(&format!("{t:>5}"));
        }
        out.push('\n');
        out
    }
}

static EULER_CHECKS: AtomicUsize = AtomicUsize::new(0);
static EULER_FAILURES: AtomicUsize = AtomicUsize::new(0);

/// `(checked, failed)` counts of Euler characteristic checks in this process.
pub fn euler_check_counts() -> (usize, usize) {
    (EULER_CHECKS.load(Ordering::SeqCst), EULER_FAILURES.load(Ordering::SeqCst))
}

/// Compares the alternating sum of the table with the Hilbert series numerator.
pub fn euler_check(table: &BettiTable, hs: &HilbertSeries) -> Result<()> {
    EULER_CHECKS.fetch_add(1, Ordering::SeqCst);
    let lhs = table.euler_numerator();
    if table.truncated || lhs == hs.numerator {
        return Ok(());
    }
    EULER_FAILURES.fetch_add(1, Ordering::SeqCst);
    Err(Error::Internal(format!("Betti numerator {lhs} differs from Hilbert numerator {}", hs.numerator)))
}

fn check_proper(i: &MonomialIdeal) -> Result<()> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if i.nvars() > 24 {
        return Err(Error::ResourceLimit("more than 24 variables".into()));
    }
    Ok(())
}

/// All exponent vectors `a ≤ bound` componentwise, with `|a| ≤ max_deg`.
fn multidegrees_below(bound: &Monomial, max_deg: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &e in bound.exponents() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for prefix in &out {
            let used: u32 = prefix.iter().sum();
            for k in 0..=e {
                if used + k > max_deg {
                    break;
                }
                let mut v = prefix.clone();
                v.push(k);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(Monomial::new).collect()
}

fn sub_mask(a: &Monomial, mask: u32) -> Monomial {
    let mut e = a.exponents().to_vec();
    for (k, x) in e.iter_mut().enumerate() {
        if mask >> k & 1 == 1 {
            *x -= 1;
        }
    }
    Monomial::new(e)
}

fn support_mask(a: &Monomial) -> u32 {
    a.support().fold(0, |acc, k| acc | 1 << k)
}

fn submasks_of_size(mask: u32, size: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut s = mask;
    loop {
        if s.count_ones() == size {
            out.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
    out.sort_unstable();
    out
}

/// Boundary of `e_S`: `Σ_{k ∈ S} (−1)^{#{l ∈ S : l < k}} e_{S∖k}`.
fn boundary_terms(s: u32) -> impl Iterator<Item = (u32, bool)> {
    (0..32).filter(move |k| s >> k & 1 == 1).map(move |k| {
        let below = (s & ((1u32 << k) - 1)).count_ones();
        (s & !(1 << k), below % 2 == 1)
    })
}

/// Rank of the map sending each source basis element to its signed faces
/// that survive in the target basis.
fn boundary_rank(field: Field, sources: &[u32], targets: &[u32]) -> usize {
    if sources.is_empty() || targets.is_empty() {
        return 0;
    }
    let index: HashMap<u32, usize> = targets.iter().enumerate().map(|(c, &t)| (t, c)).collect();
    let rows: Vec<SparseRow> = sources
        .iter()
        .map(|&s| {
            let mut row: SparseRow = boundary_terms(s)
                .filter_map(|(t, neg)| index.get(&t).map(|&c| (c, field.from_i64(if neg { -1 } else { 1 }))))
                .collect();
            row.sort_by_key(|(c, _)| *c);
            row
        })
        .collect();
    rank(field, &rows, targets.len())
}

pub fn betti_koszul(i: &MonomialIdeal, j_max: Option<u32>) -> Result<BettiTable> {
    betti_koszul_over(i, j_max, Field::Rational)
}

/// `β_{i,j}(R/I)` as Koszul homology of `x_1, …, x_n` on `R/I`.
///
/// The degree-`j` strand splits by multidegree `a`; its basis is
/// `e_S ⊗ x^{a−S}` with `x^{a−S} ∉ I`, and only `a ≤ lcm(I)` can contribute.
/// Without `j_max` every such `a` is visited, so no entry is missed.
pub fn betti_koszul_over(i: &MonomialIdeal, j_max: Option<u32>, field: Field) -> Result<BettiTable> {
    check_proper(i)?;
    let n = i.nvars();
    let lcm = i.lcm();
    let bound = lcm.degree();
    let cap = j_max.unwrap_or(bound).min(bound);
    let truncated = j_max.is_some_and(|j| j < bound);
    let per_degree: Vec<Vec<(usize, u32, u64)>> = multidegrees_below(&lcm, cap)
        .into_par_iter()
        .map(|a| {
            let supp = support_mask(&a);
            let basis: Vec<Vec<u32>> = (0..=n as u32 + 1)
                .map(|size| {
                    if size as usize > n {
                        return Vec::new();
                    }
                    submasks_of_size(supp, size).into_iter().filter(|&s| !i.contains(&sub_mask(&a, s))).collect()
                })
                .collect();
            let ranks: Vec<usize> =
                (0..=n + 1).map(|k| if k == 0 { 0 } else { boundary_rank(field, &basis[k], &basis[k - 1]) }).collect();
            (0..=n)
                .filter_map(|k| {
                    let h = basis[k].len() - ranks[k] - ranks[k + 1];
                    (h > 0).then_some((k, a.degree(), h as u64))
                })
                .collect()
        })
        .collect();
    let table = accumulate(n, per_degree, truncated);
    euler_check(&table, &i.hilbert_series())?;
    Ok(table)
}

fn accumulate(n: usize, parts: Vec<Vec<(usize, u32, u64)>>, truncated: bool) -> BettiTable {
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    for (i, j, v) in parts.into_iter().flatten() {
        *entries.entry((i, j)).or_default() += v;
    }
    BettiTable::from_quotient(n, entries, truncated)
}

/// Default limit on the number of multidegrees the oracle visits.
pub const ORACLE_CAP: u128 = 250_000;

/// Independent check: `β_{i,a}(I) = dim H̃_{i−1}(K^a(I))` where the upper
/// Koszul complex `K^a(I)` has faces `S ⊆ supp(a)` with `x^{a−S} ∈ I`.
pub fn betti_oracle(i: &MonomialIdeal, cap: u128) -> Result<BettiTable> {
    betti_oracle_over(i, cap, Field::Rational)
}

pub fn betti_oracle_over(i: &MonomialIdeal, cap: u128, field: Field) -> Result<BettiTable> {
    check_proper(i)?;
    let n = i.nvars();
    let lcm = i.lcm();
    let count: u128 = lcm.exponents().iter().map(|&e| e as u128 + 1).product();
    if count > cap {
        return Err(Error::OracleTooLarge { multidegrees: count, cap });
    }
    let mut parts = vec![vec![(0usize, 0u32, 1u64)]];
    if !i.is_zero() {
        parts.extend(multidegrees_below(&lcm, lcm.degree()).into_par_iter().map(|a| {
            if !i.contains(&a) {
                return Vec::new();
            }
            let supp = support_mask(&a);
            // faces[d] holds faces with d vertices
            let faces: Vec<Vec<u32>> = (0..=n as u32)
                .map(|d| submasks_of_size(supp, d).into_iter().filter(|&s| i.contains(&sub_mask(&a, s))).collect())
                .collect();
            let mut out = Vec::new();
            for d in 0..=n {
                let down = if d == 0 { 0 } else { boundary_rank(field, &faces[d], &faces[d - 1]) };
                let up = if d == n { 0 } else { boundary_rank(field, &faces[d + 1], &faces[d]) };
                let h = faces[d].len() - down - up;
                if h > 0 {
                    // H̃_{d−1} gives β_d(I) = β_{d+1}(R/I)
                    out.push((d + 1, a.degree(), h as u64));
                }
            }
            out
        }).collect::<Vec<_>>());
    }
    let table = accumulate(n, parts, false);
    euler_check(&table, &i.hilbert_series())?;
    Ok(table)
}

/// `β_{i,j}(R/I)` for homogeneous generators: Koszul strands over the
/// standard monomials of `in(I)`, with multiplication maps reduced modulo
/// the revlex Gröbner basis. The default degree bound is `deg lcm(in(I))`.
pub fn betti_of_graded(gens: &[Polynomial], j_max: Option<u32>) -> Result<BettiTable> {
    let gb = buchberger(gens, TermOrder::RevLex)?;
    betti_of_basis(&gb, j_max)
}

pub fn betti_of_basis(gb: &GroebnerBasis, j_max: Option<u32>) -> Result<BettiTable> {
    let init = gb.initial_ideal();
    check_proper(&init)?;
    let ring = gb.ring();
    let n = ring.nvars;
    let field = ring.field;
    let bound = init.lcm().degree();
    let cap = j_max.unwrap_or(bound).min(bound);
    let truncated = j_max.is_some_and(|j| j < bound);

    let std_mons: Vec<Vec<Monomial>> = (0..=cap).map(|d| init.standard_monomials(d)).collect();
    let std_index: Vec<HashMap<Monomial, usize>> =
        std_mons.iter().map(|v| v.iter().enumerate().map(|(c, m)| (m.clone(), c)).collect()).collect();

    // mult[d][k][c]: normal form of x_k · (c-th standard monomial of degree d)
    let mult: Vec<Vec<Vec<SparseRow>>> = (0..cap as usize)
        .into_par_iter()
        .map(|d| {
            (0..n)
                .map(|k| {
                    std_mons[d]
                        .iter()
                        .map(|m| {
                            let p = Polynomial::monomial(ring, TermOrder::RevLex, m.mul(&Monomial::var(n, k)));
                            let r = gb.normal_form(&p)?;
                            let mut row: SparseRow =
                                r.terms().iter().map(|(t, c)| (std_index[d + 1][t], c.clone())).collect();
                            row.sort_by_key(|(c, _)| *c);
                            Ok(row)
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let masks: Vec<Vec<u32>> = (0..=n as u32).map(|s| submasks_of_size((1u32 << n) - 1, s)).collect();
    let parts: Vec<Vec<(usize, u32, u64)>> = (0..=cap)
        .into_par_iter()
        .map(|j| {
            let dim = |i: usize| -> usize {
                if i > n || (i as u32) > j {
                    0
                } else {
                    masks[i].len() * std_mons[(j - i as u32) as usize].len()
                }
            };
            // d_i : Λ^i ⊗ (R/I)_{j−i} → Λ^{i−1} ⊗ (R/I)_{j−i+1}
            let rank_d = |i: usize| -> usize {
                if i == 0 || dim(i) == 0 || dim(i - 1) == 0 {
                    return 0;
                }
                let d = (j - i as u32) as usize;
                let width = std_mons[d + 1].len();
                let pos: HashMap<u32, usize> = masks[i - 1].iter().enumerate().map(|(p, &s)| (s, p)).collect();
                let mut rows = Vec::with_capacity(dim(i));
                for &s in &masks[i] {
                    for c in 0..std_mons[d].len() {
                        let mut row: SparseRow = Vec::new();
                        for (t, neg) in boundary_terms(s) {
                            let k = (s ^ t).trailing_zeros() as usize;
                            let offset = pos[&t] * width;
                            for (col, x) in &mult[d][k][c] {
                                row.push((offset + col, if neg { -x } else { x.clone() }));
                            }
                        }
                        row.sort_by_key(|(c, _)| *c);
                        rows.push(row);
                    }
                }
                rank(field, &rows, dim(i - 1))
            };
            let ranks: Vec<usize> = (0..=n + 1).map(rank_d).collect();
            (0..=n)
                .filter_map(|i| {
                    let h = dim(i) - ranks[i] - ranks[i + 1];
                    (h > 0).then_some((i, j, h as u64))
                })
                .collect()
        })
        .collect();
    let table = accumulate(n, parts, truncated);
    euler_check(&table, &init.hilbert_series())?;
    Ok(table)
}

/// Invariants of `R/I` read off a complete Betti table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedInvariants {
    pub pd: usize,
    pub depth: i64,
    /// `reg(R/I)`.
    pub reg: i64,
    /// `reg(I) = reg(R/I) + 1`, absent for the zero ideal.
    pub reg_ideal: Option<i64>,
    pub dim: i64,
    pub cohen_macaulay: bool,
}

pub fn derived_invariants(t: &BettiTable) -> DerivedInvariants {
    let pd = t.quotient.keys().map(|(i, _)| *i).max().unwrap_or(0);
    let reg = t.quotient.keys().map(|(i, j)| *j as i64 - *i as i64).max().unwrap_or(0);
    let depth = t.nvars as i64 - pd as i64;
    let dim = HilbertSeries { numerator: t.euler_numerator(), nvars: t.nvars }.dimension();
    let reg_ideal = (pd > 0).then_some(reg + 1);
    DerivedInvariants { pd, depth, reg, reg_ideal, dim, cohen_macaulay: depth == dim }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub i: usize,
    pub j: u32,
    pub value: u64,
}

/// Nonzero `β_{i,j}` with `β_{k,l} = 0` whenever `k ≥ i`, `l − k ≥ j − i` and `(k, l) ≠ (i, j)`.
/// Positions follow the table's subject.
pub fn extremal_betti(t: &BettiTable) -> Vec<Corner> {
    let e = t.entries();
    e.iter()
        .filter(|((i, j), _)| {
            let row = *j as i64 - *i as i64;
            !e.iter().any(|((k, l), _)| (k, l) != (i, j) && k >= i && *l as i64 - *k as i64 >= row)
        })
        .map(|&((i, j), value)| Corner { i, j, value })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::default_names;
    use crate::parse::parse_polynomial;
    use crate::poly::Ring;

    fn mi(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows)
    }

    fn section3_initial() -> MonomialIdeal {
        mi(3, &[&[3, 0, 0], &[2, 1, 0], &[0, 3, 0], &[2, 0, 1], &[1, 0, 2], &[0, 0, 3], &[0, 2, 1], &[1, 2, 0]])
    }

    #[test]
    fn principal_in_one_variable() {
        let t = betti_koszul(&mi(1, &[&[2]]), None).unwrap();
        assert_eq!(t.entries(), vec![((0, 0), 1), ((1, 2), 1)]);
        let d = derived_invariants(&t);
        assert_eq!((d.pd, d.depth, d.dim, d.cohen_macaulay), (1, 0, 0, true));
    }

    #[test]
    fn plane_artinian_ideal() {
        let i = mi(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let t = betti_koszul(&i, None).unwrap().with_subject(Subject::Ideal);
        assert_eq!(t.entries(), vec![((0, 2), 2), ((0, 3), 1), ((1, 3), 1), ((1, 4), 1)]);
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(betti_oracle(&i, ORACLE_CAP).unwrap(), betti_koszul(&i, None).unwrap());
    }

    #[test]
    fn cocoa_layout_of_initial_ideal() {
        let t = betti_koszul(&section3_initial(), None).unwrap().with_subject(Subject::Ideal);
        let want = "        0    1    2\n--------------------\n 3:     8    9    2\n 4:     -    2    2\n--------------------\nTot:    8   11    4\n";
        assert_eq!(t.render(), want);
        let d = derived_invariants(&t);
        assert_eq!((d.pd, d.depth, d.reg_ideal), (3, 0, Some(4)));
        assert_eq!(extremal_betti(&t), vec![Corner { i: 2, j: 6, value: 2 }]);
    }

    #[test]
    fn oracle_agrees_on_initial_ideal() {
        let i = section3_initial();
        assert_eq!(betti_oracle(&i, ORACLE_CAP).unwrap(), betti_koszul(&i, None).unwrap());
        assert!(matches!(betti_oracle(&i, 10), Err(Error::OracleTooLarge { .. })));
    }

    #[test]
    fn complete_intersection_of_quadrics() {
        let ring = Ring::rational(2);
        let names = default_names(2);
        let gens: Vec<Polynomial> = ["x1^2 + x2^2", "x1*x2"]
            .iter()
            .map(|s| parse_polynomial(s, &names, ring, TermOrder::RevLex).unwrap())
            .collect();
        let t = betti_of_graded(&gens, None).unwrap().with_subject(Subject::Ideal);
        assert_eq!(t.entries(), vec![((0, 2), 2), ((1, 4), 1)]);
    }

    #[test]
    fn pure_resolution_has_one_corner() {
        let t = betti_koszul(&mi(2, &[&[2, 0], &[1, 1], &[0, 2]]), None).unwrap();
        let d = derived_invariants(&t);
        assert!(d.cohen_macaulay);
        assert_eq!(extremal_betti(&t), vec![Corner { i: d.pd, j: (d.pd as i64 + d.reg) as u32, value: 2 }]);
    }

    #[test]
    fn zero_and_unit() {
        let t = betti_koszul(&MonomialIdeal::zero(2), None).unwrap();
        assert_eq!(t.entries(), vec![((0, 0), 1)]);
        assert!(matches!(betti_koszul(&MonomialIdeal::unit(2), None), Err(Error::UnitIdeal)));
    }

    #[test]
    fn truncation_flagged() {
        let t = betti_koszul(&mi(2, &[&[2, 0], &[0, 2]]), Some(2)).unwrap();
        assert!(t.truncated());
        assert_eq!(t.quotient_entry(2, 4), 0);
        assert!(!betti_koszul(&mi(2, &[&[2, 0], &[0, 2]]), None).unwrap().truncated());
    }
}

//! Buchberger's algorithm, normal forms, initial ideals, linear coordinate
//! changes and sampled generic initial ideals.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg;
use crate::monideal::MonomialIdeal;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::{Polynomial, Ring};

/// Resource limits for [`buchberger_with`].
#[derive(Debug, Clone, Copy)]
pub struct GroebnerConfig {
    /// Maximum number of critical pairs reduced before giving up.
    pub max_pairs: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { max_pairs: 200_000 }
    }
}

/// A reduced Gröbner basis: monic, auto-reduced, sorted by decreasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: TermOrder,
    ring: Ring,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.nvars, self.leading_monomials())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.generators, self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

/// Remainder of `f` under full division by `g`: no term of the result is
/// divisible by a leading monomial of `g`, and `f - result ∈ (g)`.
pub fn normal_form(f: &Polynomial, g: &[Polynomial], ord: TermOrder) -> Result<Polynomial> {
    for h in g {
        if h.ring() != f.ring() {
            return Err(Error::RingMismatch("divisor ring differs from dividend ring".into()));
        }
    }
    let divisors: Vec<Polynomial> = g.iter().filter(|h| !h.is_zero()).map(|h| h.with_order(ord)).collect();
    Ok(reduce(f.with_order(ord), &divisors))
}

fn reduce(mut p: Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let (ring, ord) = (p.ring(), p.order());
    let mut rem = Vec::new();
    while let Some((m, c)) = p.leading_term().ok().map(|(m, c)| (m.clone(), c.clone())) {
        let hit = divisors.iter().find(|d| d.leading_monomial().expect("nonzero").divides(&m));
        match hit {
            Some(d) => {
                let (lm, lc) = d.leading_term().expect("nonzero");
                let q = &c * &lc.inv().expect("nonzero leading coefficient");
                let shift = m.div(lm);
                p.sub_mul_term(&q, &shift, d);
            }
            None => {
                let t = p.pop_leading().expect("nonzero");
                rem.push(t);
            }
        }
    }
    Polynomial::from_sorted_terms(ring, ord, rem)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf), &cf.inv().expect("nonzero"));
    let b = g.mul_term(&l.div(mg), &cg.inv().expect("nonzero"));
    a.sub(&b).expect("same ring")
}

pub fn buchberger(gens: &[Polynomial], ord: TermOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, ord, &GroebnerConfig::default())
}

/// Reduced Gröbner basis of homogeneous generators.
///
/// Pairs are processed by the normal strategy (smallest lcm first) and
/// skipped by the coprime and chain criteria.
pub fn buchberger_with(gens: &[Polynomial], ord: TermOrder, cfg: &GroebnerConfig) -> Result<GroebnerBasis> {
    let ring = check_inputs(gens)?;
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.with_order(ord).monic()).collect();
    if basis.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let lm = |b: &Vec<Polynomial>, i: usize| b[i].leading_monomial().expect("nonzero").clone();

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }
    let mut processed = 0usize;
    while !pending.is_empty() {
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = lm(&basis, a.0).lcm(&lm(&basis, a.1));
                let lb = lm(&basis, b.0).lcm(&lm(&basis, b.1));
                ord.cmp(&la, &lb).then_with(|| a.cmp(b))
            })
            .expect("nonempty");
        pending.remove(&(i, j));
        let (mi, mj) = (lm(&basis, i), lm(&basis, j));
        if mi.is_coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis, k).divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::ResourceLimit(format!("more than {} critical pairs", cfg.max_pairs)));
        }
        let h = reduce(s_polynomial(&basis[i], &basis[j]), &basis);
        if !h.is_zero() {
            let t = basis.len();
            basis.push(h.monic());
            for s in 0..t {
                pending.insert((s, t));
            }
        }
    }
    Ok(GroebnerBasis { generators: reduce_basis(basis), order: ord, ring })
}

fn check_inputs(gens: &[Polynomial]) -> Result<Ring> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroIdeal);
    };
    let ring = first.ring();
    for (idx, g) in gens.iter().enumerate() {
        if g.ring() != ring {
            return Err(Error::RingMismatch(format!("generator {idx} lives in a different ring")));
        }
        if !g.is_homogeneous() {
            return Err(Error::NotHomogeneous { index: idx });
        }
    }
    Ok(ring)
}

/// Minimal basis, then tail reduction of each element by the others.
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.sort_by(|a, b| {
        let (ma, mb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        a.order().cmp(ma, mb)
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let m = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(m)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, h)| h.clone()).collect();
        out.push(reduce(minimal[idx].clone(), &others).monic());
    }
    out.sort_by(|a, b| a.order().cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    out
}

/// `in_<(I)`: the minimal leading monomials of the reduced Gröbner basis.
pub fn initial_ideal(gens: &[Polynomial], ord: TermOrder) -> Result<MonomialIdeal> {
    let ring = check_inputs(gens)?;
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    if nonzero.iter().all(|g| g.is_monomial()) {
        return Ok(MonomialIdeal::new(ring.nvars, nonzero.iter().map(|g| g.leading_monomial().unwrap().clone())));
    }
    Ok(buchberger(gens, ord)?.initial_ideal())
}

/// Invertible linear substitution `x_i ↦ Σ_j A_ij x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearChange {
    matrix: Vec<Vec<FieldElement>>,
    field: Field,
}

impl LinearChange {
    pub fn new(field: Field, matrix: Vec<Vec<FieldElement>>) -> Result<Self> {
        let n = matrix.len();
        for row in &matrix {
            if row.len() != n {
                return Err(Error::Dimension { expected: n, found: row.len() });
            }
            if row.iter().any(|x| x.field() != field) {
                return Err(Error::RingMismatch("matrix entry outside the coefficient field".into()));
            }
        }
        if linalg::rank_dense(field, &matrix) != n {
            return Err(Error::SingularChange);
        }
        Ok(LinearChange { matrix, field })
    }

    pub fn from_integers(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(field, rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect())
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let matrix = (0..n).map(|i| (0..n).map(|j| field.from_i64((i == j) as i64)).collect()).collect();
        LinearChange { matrix, field }
    }

    /// Sends `x_i` to `x_{perm[i]}`.
    pub fn permutation(field: Field, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let rows: Vec<Vec<i64>> = perm.iter().map(|&p| (0..n).map(|j| (j == p) as i64).collect()).collect();
        Self::from_integers(field, &rows)
    }

    pub fn matrix(&self) -> &[Vec<FieldElement>] {
        &self.matrix
    }

    pub fn nvars(&self) -> usize {
        self.matrix.len()
    }
}

/// Applies the substitution to every generator and re-expands.
pub fn apply_change(gens: &[Polynomial], change: &LinearChange) -> Result<Vec<Polynomial>> {
    let n = change.nvars();
    gens.iter()
        .map(|f| {
            let ring = f.ring();
            if ring.nvars != n {
                return Err(Error::Dimension { expected: n, found: ring.nvars });
            }
            if ring.field != change.field {
                return Err(Error::RingMismatch("change matrix field differs from polynomial field".into()));
            }
            let ord = f.order();
            let images: Vec<Polynomial> = (0..n)
                .map(|i| {
                    Polynomial::from_terms(
                        ring,
                        ord,
                        (0..n).map(|j| (Monomial::var(n, j), change.matrix[i][j].clone())),
                    )
                })
                .collect();
            let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
            let mut acc = Polynomial::zero(ring, ord);
            for (m, c) in f.terms() {
                let mut t = Polynomial::constant(ring, ord, c.clone());
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let p = match powers.get(&(i, e)) {
                        Some(p) => p.clone(),
                        None => {
                            let p = images[i].pow(e as i64)?;
                            powers.insert((i, e), p.clone());
                            p
                        }
                    };
                    t = t.mul(&p)?;
                }
                acc = acc.add(&t)?;
            }
            Ok(acc)
        })
        .collect()
}

/// Settings for [`gin_sample`].
#[derive(Debug, Clone, Copy)]
pub struct GinConfig {
    /// Matrix entries are drawn uniformly from `[-range, range]`.
    pub range: i64,
    pub parallel: bool,
}

impl Default for GinConfig {
    fn default() -> Self {
        GinConfig { range: 10_000, parallel: true }
    }
}

/// Outcome of a sampled generic initial ideal.
#[derive(Debug, Clone)]
pub struct GinSample {
    /// The initial ideal attained most often.
    pub ideal: MonomialIdeal,
    /// How many trials produced `ideal`.
    pub agreement: usize,
    pub per_trial: Vec<MonomialIdeal>,
    pub seed: u64,
}

impl GinSample {
    pub fn trials(&self) -> usize {
        self.per_trial.len()
    }
}

/// The random change used by trial `trial` of a run seeded with `seed`.
pub fn random_change(n: usize, seed: u64, trial: u64, range: i64) -> LinearChange {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    loop {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-range..=range)).collect()).collect();
        if let Ok(c) = LinearChange::from_integers(Field::Rational, &rows) {
            return c;
        }
    }
}

pub fn gin_sample(gens: &[Polynomial], ord: TermOrder, trials: usize, seed: u64) -> Result<GinSample> {
    gin_sample_with(gens, ord, trials, seed, &GinConfig::default())
}

/// Probabilistic `gin_<(I)`: the most frequent initial ideal over `trials`
/// random changes of coordinates. Not certified.
pub fn gin_sample_with(gens: &[Polynomial], ord: TermOrder, trials: usize, seed: u64, cfg: &GinConfig) -> Result<GinSample> {
    let ring = check_inputs(gens)?;
    if let Field::Prime(p) = ring.field {
        return Err(Error::UnsupportedCharacteristic(p));
    }
    if trials == 0 {
        return Err(Error::Domain("at least one trial is required".into()));
    }
    let run = |t: usize| -> Result<MonomialIdeal> {
        let change = random_change(ring.nvars, seed, t as u64, cfg.range);
        initial_ideal(&apply_change(gens, &change)?, ord)
    };
    let per_trial: Vec<MonomialIdeal> = if cfg.parallel {
        (0..trials).into_par_iter().map(run).collect::<Result<_>>()?
    } else {
        (0..trials).map(run).collect::<Result<_>>()?
    };
    let mut tally: Vec<(MonomialIdeal, usize)> = Vec::new();
    for i in &per_trial {
        match tally.iter_mut().find(|(j, _)| j == i) {
            Some((_, c)) => *c += 1,
            None => tally.push((i.clone(), 1)),
        }
    }
    let best = tally.iter().map(|(_, c)| *c).max().expect("at least one trial");
    if trials > 1 && best == 1 {
        return Err(Error::GinAmbiguous(tally.into_iter().map(|(i, _)| i).collect()));
    }
    let (ideal, agreement) = tally.into_iter().find(|(_, c)| *c == best).expect("maximum exists");
    Ok(GinSample { ideal, agreement, per_trial, seed })
}

use std::fmt::Write as _;

use borel_core::annihilator::{annihilator_numbers, annihilator_numbers_graded, correspondence, AnnihilatorTable};
use borel_core::betti::{betti_koszul_over, betti_of_graded, betti_oracle_over, ORACLE_CAP};
use borel_core::pommaret::{multiplicative_vars, pommaret_of_graded, Divergence, InvolutiveBasis};
use borel_core::reduction::quotient_dimension;
use borel_core::{
    buchberger, canonical_reduction_number, derived_invariants, extremal_betti, gin_sample, initial_ideal,
    parse_polynomial_list, pommaret_complete, reduction_lower_bound, reduction_number, search_min_reduction,
    BettiTable, Completion, Corner, Error, Field, MonomialIdeal, Polynomial, Result, SearchConfig, Subject,
    TermOrder,
};
use serde_json::{json, Value};

use crate::input::IdealFile;
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A theorem hypothesis failed; the result carries a witness.
    HypothesisViolated,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::HypothesisViolated => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub result: Value,
    pub status: Status,
    pub warnings: Vec<String>,
}

impl Outcome {
    fn ok(text: String, result: Value) -> Self {
        Outcome { text, result, status: Status::Ok, warnings: Vec::new() }
    }

    /// The versioned JSON envelope.
    pub fn to_json(&self, command: &str, file: &IdealFile) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "input": input_json(file),
            "status": match self.status { Status::Ok => "ok", Status::HypothesisViolated => "hypothesis_violated" },
            "warnings": self.warnings,
            "result": self.result,
        })
    }
}

fn input_json(file: &IdealFile) -> Value {
    json!({
        "variables": file.names,
        "characteristic": file.field.characteristic(),
        "generators": file.gens.iter().map(|g| g.display_with(&file.names)).collect::<Vec<_>>(),
    })
}

fn ideal_strings(i: &MonomialIdeal, names: &[String]) -> Vec<String> {
    i.gens().iter().map(|g| g.display_with(names)).collect()
}

fn finite_field_warning(file: &IdealFile) -> Vec<String> {
    match file.field {
        Field::Prime(p) => vec![format!("characteristic {p}: statements about generic coordinates assume an infinite field")],
        Field::Rational => Vec::new(),
    }
}

/// The input itself when monomial, otherwise its revlex initial ideal.
fn monomial_view(file: &IdealFile) -> Result<(MonomialIdeal, &'static str)> {
    match file.monomial_ideal() {
        Some(m) => Ok((m, "input")),
        None => Ok((initial_ideal(&file.gens, TermOrder::RevLex)?, "initial_ideal")),
    }
}

fn var_set(vars: &[usize], names: &[String]) -> String {
    let v: Vec<&str> = vars.iter().map(|&k| names[k].as_str()).collect();
    format!("({})", v.join(","))
}

pub fn classify(file: &IdealFile) -> Result<Outcome> {
    let names = &file.names;
    let (i, subject) = monomial_view(file)?;
    let n = i.nvars();
    let primes: Vec<String> = i.associated_primes().iter().map(|p| p.display_with(names)).collect();
    let witness_json = |w: Option<borel_core::StabilityWitness>, segment: &dyn Fn(usize) -> Vec<usize>| -> Value {
        match w {
            None => Value::Null,
            Some(w) => json!({
                "variable": names[w.index - 1],
                "segment": var_set(&segment(w.index - 1), names),
                "monomial": w.monomial.display_with(names),
            }),
        }
    };
    let borel_w = i.borel_type_witness();
    let quasi_w = i.quasi_stable_witness();
    let result = json!({
        "subject": subject,
        "ideal": ideal_strings(&i, names),
        "borel_type": borel_w.is_none(),
        "quasi_stable": quasi_w.is_none(),
        "strongly_stable": i.is_strongly_stable(),
        "stable": i.is_stable(),
        "dimension": i.dimension(),
        "associated_primes": primes,
        "borel_witness": witness_json(borel_w.clone(), &|k| (0..=k).collect()),
        "quasi_stable_witness": witness_json(quasi_w.clone(), &|k| (k..n).collect()),
    });
    let mut text = String::new();
    let label = if subject == "input" { "ideal" } else { "initial ideal" };
    writeln!(text, "{label}: {}", i.display_with(names)).unwrap();
    for key in ["borel_type", "strongly_stable", "stable", "quasi_stable", "dimension"] {
        writeln!(text, "{key}: {}", result[key]).unwrap();
    }
    writeln!(text, "associated_primes: {}", primes.join(", ")).unwrap();
    if let Some(w) = &borel_w {
        let seg = var_set(&(0..w.index).collect::<Vec<_>>(), names);
        writeln!(
            text,
            "borel_witness: {} lies in I : {}^inf but not in I : {seg}^inf",
            w.monomial.display_with(names),
            names[w.index - 1]
        )
        .unwrap();
    }
    if let Some(w) = &quasi_w {
        let seg = var_set(&(w.index - 1..n).collect::<Vec<_>>(), names);
        writeln!(
            text,
            "quasi_stable_witness: {} lies in I : {}^inf but not in I : {seg}^inf",
            w.monomial.display_with(names),
            names[w.index - 1]
        )
        .unwrap();
    }
    let mut out = Outcome::ok(text, result);
    out.warnings = finite_field_warning(file);
    Ok(out)
}

pub fn initial(file: &IdealFile, order: TermOrder) -> Result<Outcome> {
    let names = &file.names;
    let gb = buchberger(&file.gens, order)?;
    let init = gb.initial_ideal();
    let result = json!({
        "order": order.name(),
        "generators": ideal_strings(&init, names),
        "groebner_basis": gb.generators().iter().map(|g| g.display_with(names)).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(format!("{}\n", init.display_with(names)), result))
}

fn betti_json(t: &BettiTable) -> Value {
    let d = derived_invariants(t);
    json!({
        "subject": t.subject(),
        "entries": t.entries().iter().map(|((i, j), v)| json!({"i": i, "j": j, "value": v})).collect::<Vec<_>>(),
        "totals": t.totals(),
        "diagram": t.render(),
        "truncated": t.truncated(),
        "invariants": d,
        "extremal": extremal_betti(t),
    })
}

pub fn gin(file: &IdealFile, trials: usize, seed: u64) -> Result<Outcome> {
    let names = &file.names;
    let s = gin_sample(&file.gens, TermOrder::RevLex, trials, seed)?;
    let t = betti_koszul_over(&s.ideal, None, file.field)?.with_subject(Subject::Ideal);
    let result = json!({
        "ideal": ideal_strings(&s.ideal, names),
        "trials": s.per_trial.len(),
        "agreement": s.agreement,
        "seed": seed,
        "probabilistic": true,
        "per_trial": s.per_trial.iter().map(|i| ideal_strings(i, names)).collect::<Vec<_>>(),
        "betti": betti_json(&t),
    });
    let text = format!(
        "gin: {}\nagreement: {}/{} (seed {seed}, probabilistic)\n{}",
        s.ideal.display_with(names),
        s.agreement,
        s.per_trial.len(),
        t.render()
    );
    Ok(Outcome::ok(text, result))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Koszul,
    Oracle,
}

pub fn betti(file: &IdealFile, subject: Subject, method: Method, of_initial: bool, j_max: Option<u32>) -> Result<Outcome> {
    let monomial = if of_initial {
        Some(initial_ideal(&file.gens, TermOrder::RevLex)?)
    } else {
        file.monomial_ideal()
    };
    let t = match (method, monomial) {
        (Method::Koszul, Some(m)) => betti_koszul_over(&m, j_max, file.field)?,
        (Method::Koszul, None) => betti_of_graded(&file.gens, j_max)?,
        (Method::Oracle, Some(m)) => betti_oracle_over(&m, ORACLE_CAP, file.field)?,
        (Method::Oracle, None) => {
            return Err(Error::Domain("the oracle needs a monomial ideal; pass --initial".into()));
        }
    }
    .with_subject(subject);
    let mut result = betti_json(&t);
    result["of"] = json!(if of_initial { "initial_ideal" } else { "input" });
    result["method"] = json!(match method {
        Method::Koszul => "koszul",
        Method::Oracle => "oracle",
    });
    let mut out = Outcome::ok(t.render(), result);
    if t.truncated() {
        out.warnings.push("degree bound below the Taylor bound: the table may be incomplete".into());
    }
    Ok(out)
}

fn annihilators(file: &IdealFile) -> Result<AnnihilatorTable> {
    match file.monomial_ideal() {
        Some(m) => annihilator_numbers(&m),
        None => annihilator_numbers_graded(&file.gens),
    }
}

fn ann_json(t: &AnnihilatorTable, names: &[String]) -> Value {
    let n = t.nvars;
    json!(t
        .rows
        .iter()
        .map(|r| json!({
            "i": r.index,
            "variable": if r.index < n { Value::from(names[n - r.index - 1].clone()) } else { Value::Null },
            "finite": r.finite,
            "values": r.values,
            "cutoff": r.cutoff,
        }))
        .collect::<Vec<_>>())
}

fn ann_text(t: &AnnihilatorTable, names: &[String]) -> String {
    let n = t.nvars;
    let mut s = String::new();
    for r in &t.rows {
        let var = if r.index < n { names[n - r.index - 1].as_str() } else { "-" };
        let vals: Vec<String> = r.values.iter().map(u64::to_string).collect();
        let tail = if r.finite { "" } else { " ... (infinite length)" };
        writeln!(s, "A_{} [{var}]: {}{tail}", r.index, vals.join(" ")).unwrap();
    }
    s
}

pub fn ann(file: &IdealFile) -> Result<Outcome> {
    let t = annihilators(file)?;
    let result = json!({"rows": ann_json(&t, &file.names), "filter_regular": t.all_finite()});
    Ok(Outcome::ok(ann_text(&t, &file.names), result))
}

/// Witness for a failed finiteness hypothesis.
fn violation(file: &IdealFile, t: &AnnihilatorTable, row: usize) -> Result<Outcome> {
    let names = &file.names;
    let n = t.nvars;
    let (m, _) = monomial_view(file)?;
    let var = &names[n - row - 1];
    let mut text = format!("hypothesis violated: the colon module A_{row} by {var} has infinite length\n");
    let mut witness = json!({"row": row, "variable": var});
    if let Some(w) = m.borel_type_witness() {
        let seg = var_set(&(0..w.index).collect::<Vec<_>>(), names);
        writeln!(
            text,
            "initial ideal is not of Borel type: {} lies in I : {}^inf but not in I : {seg}^inf",
            w.monomial.display_with(names),
            names[w.index - 1]
        )
        .unwrap();
        witness["borel_witness"] = json!({"variable": names[w.index - 1], "monomial": w.monomial.display_with(names)});
    }
    Ok(Outcome { text, result: json!({"violation": witness}), status: Status::HypothesisViolated, warnings: Vec::new() })
}

fn corner_text(c: &Corner, sym: &str) -> String {
    format!("{sym}_{{{},{}}} = {}", c.i, c.j, c.value)
}

pub fn extremal(file: &IdealFile) -> Result<Outcome> {
    let alpha = annihilators(file)?;
    if let Some(row) = alpha.first_infinite() {
        return violation(file, &alpha, row);
    }
    let betti = match file.monomial_ideal() {
        Some(m) => betti_koszul_over(&m, None, file.field)?,
        None => betti_of_graded(&file.gens, None)?,
    };
    let report = correspondence(&betti, &alpha)?;
    let ideal_view = betti.clone().with_subject(Subject::Ideal);
    let ext_ideal = extremal_betti(&ideal_view);
    let mut text = String::new();
    let list = |v: &[Corner], sym: &str| v.iter().map(|c| corner_text(c, sym)).collect::<Vec<_>>().join(", ");
    writeln!(text, "extremal betti (ideal): {}", list(&ext_ideal, "beta")).unwrap();
    writeln!(text, "extremal betti (quotient): {}", list(&report.extremal_betti, "beta")).unwrap();
    writeln!(text, "extremal annihilators: {}", list(&report.extremal_alpha, "alpha")).unwrap();
    writeln!(text, "correspondence: {}", if report.corners_match { "ok" } else { "FAILED" }).unwrap();
    writeln!(text, "upper bound: {}", if report.bound_violations.is_empty() { "ok" } else { "FAILED" }).unwrap();
    let mut result = json!({
        "extremal_betti_ideal": ext_ideal,
        "correspondence": report,
    });
    if file.monomial_ideal().is_none() {
        let init = initial_ideal(&file.gens, TermOrder::RevLex)?;
        let tin = betti_koszul_over(&init, None, file.field)?.with_subject(Subject::Ideal);
        let ext_in = extremal_betti(&tin);
        let same = ext_in == ext_ideal;
        writeln!(text, "extremal betti of in(I): {} ({})", list(&ext_in, "beta"), if same { "same" } else { "different" })
            .unwrap();
        result["extremal_betti_initial"] = json!(ext_in);
        result["same_as_initial"] = json!(same);
    }
    Ok(Outcome::ok(text, result))
}

#[derive(Debug, Clone, Default)]
pub struct ReductionArgs {
    pub forms: Option<String>,
    pub search: Option<usize>,
    pub seed: u64,
    pub grid: Option<Vec<i64>>,
}

pub fn reduction(file: &IdealFile, args: &ReductionArgs) -> Result<Outcome> {
    let names = &file.names;
    let dim = quotient_dimension(&file.gens)?;
    let lower = reduction_lower_bound(&file.gens)?;
    let mut text = format!("dimension: {dim}\nlower_bound: {lower}\n");
    let mut result = json!({"dimension": dim, "lower_bound": lower});
    if let Some(src) = &args.forms {
        let forms: Vec<Polynomial> = parse_polynomial_list(src, (1, 1), names, file.ring(), TermOrder::RevLex)?;
        let r = reduction_number(&file.gens, &forms)?;
        writeln!(text, "r_J: {r}").unwrap();
        result["forms"] = json!(forms.iter().map(|f| f.display_with(names)).collect::<Vec<_>>());
        result["r_J"] = json!(r.value());
    }
    if let Some(budget) = args.search {
        let cfg = SearchConfig { budget, grid: args.grid.clone().unwrap_or_else(|| vec![-1, 0, 1]), seed: args.seed };
        let s = search_min_reduction(&file.gens, &cfg)?;
        let forms: Vec<String> = s.best_forms.iter().map(|f| f.display_with(names)).collect();
        writeln!(text, "search: best r_J = {} with J = ({}); r(R/I) in [{}, {}]", s.best_r, forms.join(", "), lower.max(0), s.best_r)
            .unwrap();
        writeln!(
            text,
            "search: {} candidates, {} systems of parameters, {}",
            s.candidates,
            s.systems_of_parameters,
            if s.exhaustive { "whole grid" } else { "sampled" }
        )
        .unwrap();
        let mut sj = serde_json::to_value(&s).expect("serializable");
        sj["best_forms"] = json!(forms);
        sj["seed"] = json!(args.seed);
        sj["grid"] = json!(cfg.grid);
        result["search"] = sj;
    }
    if args.forms.is_none() && args.search.is_none() {
        match canonical_reduction_number(&file.gens) {
            Ok(c) => {
                writeln!(text, "canonical: {} (in(I): {})", c.value, c.initial_value).unwrap();
                result["canonical"] = json!({"value": c.value.value(), "initial_value": c.initial_value.value(), "dimension": c.dimension});
            }
            Err(Error::NotFilterRegular { row }) => {
                let alpha = annihilators(file)?;
                let mut v = violation(file, &alpha, row)?;
                v.text = text + &v.text;
                v.result["dimension"] = json!(dim);
                v.result["lower_bound"] = json!(lower);
                return Ok(v);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Outcome::ok(text, result))
}

fn basis_lines(b: &InvolutiveBasis, names: &[String]) -> Vec<(String, String)> {
    b.elements.iter().map(|h| (h.display_with(names), var_set(&multiplicative_vars(h), names))).collect()
}

fn divergence_text(d: &Divergence, names: &[String]) -> String {
    format!(
        "diverges: no finite Pommaret basis up to degree {} (unresolved prolongation {})\n",
        d.degree_cap,
        d.witness.display_with(names)
    )
}

pub fn pommaret(file: &IdealFile, cap: Option<u32>) -> Result<Outcome> {
    let names = &file.names;
    let (basis, polys) = match file.monomial_ideal() {
        Some(m) => match pommaret_complete(&m, cap)? {
            Completion::Basis(b) => (Ok(b), None),
            Completion::Diverges(d) => (Err(d), None),
        },
        None => match pommaret_of_graded(&file.gens, cap)? {
            Ok(p) => (Ok(p.monomial), Some(p.elements)),
            Err(d) => (Err(d), None),
        },
    };
    match basis {
        Ok(b) => {
            let lines = basis_lines(&b, names);
            let mut text = String::new();
            for (idx, (h, x)) in lines.iter().enumerate() {
                match &polys {
                    Some(p) => writeln!(text, "{} {x}", p[idx].display_with(names)).unwrap(),
                    None => writeln!(text, "{h} {x}").unwrap(),
                }
            }
            let result = json!({
                "status": "basis",
                "elements": lines.iter().map(|(h, x)| json!({"term": h, "multiplicative": x})).collect::<Vec<_>>(),
                "polynomials": polys.map(|p| p.iter().map(|f| f.display_with(names)).collect::<Vec<_>>()),
            });
            Ok(Outcome::ok(text, result))
        }
        Err(d) => {
            let result = json!({
                "status": "diverges",
                "degree_cap": d.degree_cap,
                "witness": d.witness.display_with(names),
                "partial": d.partial.iter().map(|m| m.display_with(names)).collect::<Vec<_>>(),
            });
            Ok(Outcome::ok(divergence_text(&d, names), result))
        }
    }
}

/// Everything at once: initial ideal, classification, Betti diagrams of `I`
/// and `in(I)`, annihilator comparison, extremal correspondence, reduction
/// numbers and the Pommaret basis. `gin` adds a sampled generic initial ideal.
pub fn report(file: &IdealFile, gin_run: Option<(usize, u64)>) -> Result<Outcome> {
    let names = &file.names;
    let mut text = String::new();
    let mut result = json!({});
    let mut status = Status::Ok;

    let init = initial_ideal(&file.gens, TermOrder::RevLex)?;
    writeln!(text, "initial ideal: {}", init.display_with(names)).unwrap();
    result["initial_ideal"] = json!(ideal_strings(&init, names));

    let init_file = IdealFile { names: names.clone(), field: file.field, gens: init.to_polynomials(file.ring(), TermOrder::RevLex) };
    let c = classify(&init_file)?;
    writeln!(
        text,
        "in(I): borel_type={} strongly_stable={} stable={} quasi_stable={}",
        c.result["borel_type"], c.result["strongly_stable"], c.result["stable"], c.result["quasi_stable"]
    )
    .unwrap();
    writeln!(text, "associated primes of in(I): {}", c.result["associated_primes"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect::<Vec<_>>().join(", ")).unwrap();
    result["classification_initial"] = c.result;

    let bi = betti(file, Subject::Ideal, Method::Koszul, false, None)?;
    let bin = betti(file, Subject::Ideal, Method::Koszul, true, None)?;
    writeln!(text, "\nBetti diagram of I:\n{}", bi.text).unwrap();
    writeln!(text, "Betti diagram of in(I):\n{}", bin.text).unwrap();
    let (bti, btin) = (&bi.result, &bin.result);
    let same_inv = bti["invariants"] == btin["invariants"];
    writeln!(
        text,
        "pd(R/I)={} depth={} reg(I)={} dim={} CM={} ({} for in(I))",
        bti["invariants"]["pd"],
        bti["invariants"]["depth"],
        bti["invariants"]["reg_ideal"],
        bti["invariants"]["dim"],
        bti["invariants"]["cohen_macaulay"],
        if same_inv { "same" } else { "different" }
    )
    .unwrap();
    result["betti"] = bi.result;
    result["betti_initial"] = bin.result;

    if let Some((trials, seed)) = gin_run {
        let g = gin(file, trials, seed)?;
        writeln!(text, "\nBetti diagram of gin(I):\n{}", g.text).unwrap();
        result["gin"] = g.result;
    }

    let alpha = annihilators(file)?;
    let alpha_in = annihilator_numbers(&init)?;
    writeln!(text, "\nannihilator numbers of R/I:\n{}", ann_text(&alpha, names)).unwrap();
    result["annihilators"] = ann_json(&alpha, names);
    result["annihilators_equal_initial"] = json!(alpha == alpha_in);
    match alpha.first_infinite() {
        Some(row) => {
            let v = violation(file, &alpha, row)?;
            text.push_str(&v.text);
            result["violation"] = v.result["violation"].clone();
            status = Status::HypothesisViolated;
        }
        None => {
            writeln!(text, "annihilator tables of I and in(I): {}", if alpha == alpha_in { "equal" } else { "different" }).unwrap();
            let e = extremal(file)?;
            text.push_str(&e.text);
            result["extremal"] = e.result;
            let r = reduction(file, &ReductionArgs::default())?;
            text.push_str(&r.text);
            result["reduction"] = r.result;
        }
    }
    if status == Status::HypothesisViolated {
        let lower = reduction_lower_bound(&file.gens)?;
        writeln!(text, "lower_bound: {lower}").unwrap();
        result["reduction"] = json!({"lower_bound": lower});
    }

    let p = pommaret(&init_file, None)?;
    writeln!(text, "\nPommaret basis of in(I):\n{}", p.text.trim_end()).unwrap();
    result["pommaret_initial"] = p.result;

    let mut out = Outcome { text, result, status, warnings: finite_field_warning(file) };
    if let Some((_, _)) = gin_run {
        out.warnings.push("gin is sampled with random coordinates and is not certified".into());
    }
    Ok(out)
}

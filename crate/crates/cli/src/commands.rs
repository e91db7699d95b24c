use std::fmt::Write as _;

use serde_json::{json, Value};
use z4gbent::construct::{
    build_cf, build_code, circulant_code, closed_form, extend_type_ii, gray_image_code,
    pipeline_with, reference_pair, reference_pair_anf, PipelineOptions,
};
use z4gbent::designs::{
    table_rows, torsion_min_weight_design, verify_one_design, DesignRow, TorsionDesign,
};
use z4gbent::z4code::EXHAUSTIVE_LIMIT_LOG2;
use z4gbent::{
    boolfn::gbent_from_bent_pair, enumerate_bent, BooleanFunction, Error, Result, WeightKind,
    Z4Code,
};

use crate::{PairArgs, Sampling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    /// Completed, but part of the requested output was out of reach.
    Capacity,
}

pub struct Output {
    pub json: Value,
    pub text: String,
    pub status: Status,
}

impl Output {
    fn new(json: Value, text: String, ok: bool) -> Self {
        let status = if ok { Status::Ok } else { Status::Failed };
        Output { json, text, status }
    }
}

/// A bent pair given on the command line or by `--m`.
struct Pair {
    a_anf: String,
    b_anf: String,
    a: BooleanFunction,
    b: BooleanFunction,
}

impl Pair {
    fn json(&self) -> Value {
        json!({"a": self.a_anf, "b": self.b_anf, "n": self.a.arity()})
    }
}

/// Largest `k` such that `xk` occurs in the text.
fn max_variable(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let start = i + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if let Ok(k) = text[start..end].parse::<usize>() {
                best = best.max(k);
            }
            i = end;
        } else {
            i += 1;
        }
    }
    best
}

fn pair(args: &PairArgs) -> Result<Pair> {
    if args.input.is_some() {
        return Err(Error::Precondition(
            "this command takes a bent pair, not --in".into(),
        ));
    }
    let (a_anf, b_anf, n) = match (&args.a, &args.b, args.m) {
        (Some(a), Some(b), _) => {
            let n = args
                .n
                .unwrap_or_else(|| max_variable(a).max(max_variable(b)));
            (a.clone(), b.clone(), n)
        }
        (_, _, Some(m)) => {
            let (a, b) = reference_pair_anf(m)?;
            (a.to_string(), b.to_string(), m - 1)
        }
        _ => return Err(Error::Precondition("give --a and --b, or --m".into())),
    };
    let a = BooleanFunction::from_anf(&a_anf, n)?;
    let b = BooleanFunction::from_anf(&b_anf, n)?;
    Ok(Pair { a_anf, b_anf, a, b })
}

/// C_f from a pair, or a code read from `--in`.
fn source_code(args: &PairArgs) -> Result<(Value, Z4Code)> {
    match &args.input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
            Ok((
                json!({"file": path.display().to_string()}),
                Z4Code::from_text(&text)?,
            ))
        }
        None => {
            let p = pair(args)?;
            Ok((p.json(), build_code(&p.a, &p.b)?))
        }
    }
}

fn generators(c: &Z4Code) -> Vec<String> {
    c.standard_form()
        .generators()
        .iter()
        .map(|g| g.to_string())
        .collect()
}

pub fn bent(n: usize, list: bool) -> Result<Output> {
    let fns = enumerate_bent(n)?;
    let mut text = format!("{} bent functions on {n} variables\n", fns.len());
    let mut json = json!({"n": n, "count": fns.len()});
    if list {
        for f in &fns {
            let _ = writeln!(text, "{f}  {}", f.to_anf());
        }
        json["functions"] = fns
            .iter()
            .map(|f| json!({"table": f.to_string(), "anf": f.to_anf()}))
            .collect();
    }
    Ok(Output::new(json, text, true))
}

pub fn gbent(args: &PairArgs) -> Result<Output> {
    let p = pair(args)?;
    let f = gbent_from_bent_pair(&p.a, &p.b)?;
    let mut norms: Vec<i64> = f
        .generalized_walsh_hadamard()
        .iter()
        .map(|w| w.norm())
        .collect();
    norms.sort_unstable();
    norms.dedup();
    let ok = f.is_gbent();
    let json = json!({
        "inputs": p.json(),
        "m": f.arity(),
        "table": f.to_string(),
        "spectrum_norms": norms,
        "gbent": ok,
    });
    let text = format!(
        "f = {f} on {} variables\nspectrum norms {norms:?}\ngbent: {}\n",
        f.arity(),
        if ok { "yes" } else { "no" }
    );
    Ok(Output::new(json, text, ok))
}

pub fn build(args: &PairArgs) -> Result<Output> {
    let p = pair(args)?;
    let cf = build_cf(&p.a, &p.b)?;
    let code = circulant_code(&cf);
    let (k1, k2) = code.type_of();
    let ok = code.is_self_orthogonal();
    let json = json!({
        "inputs": p.json(),
        "c_f": cf.to_string(),
        "length": code.length(),
        "type": [k1, k2],
        "self_orthogonal": ok,
        "cyclic": code.is_cyclic(),
        "generators": generators(&code),
    });
    let text = format!(
        "c_f = {cf}\nC_f: length {}, type 4^{k1} 2^{k2}, self-orthogonal {ok}\n{}",
        code.length(),
        code.to_text()
    );
    Ok(Output::new(json, text, ok))
}

pub fn extend(args: &PairArgs, s: Sampling) -> Result<Output> {
    let (source, code) = source_code(args)?;
    let ext = extend_type_ii(&code)?;
    let c = &ext.code;
    let (k1, k2) = c.type_of();
    let type_ii = c.type_ii();
    let type_iv = c.type_iv(s.samples, s.seed);
    let ok = c.is_self_dual() && type_ii.holds();
    let json = json!({
        "source": source,
        "length": c.length(),
        "type": [k1, k2],
        "k2": ext.k2,
        "k3": ext.k3,
        "reordered": ext.reordered,
        "added_rows": ext.added_rows.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "self_dual": c.is_self_dual(),
        "type_ii": type_ii.to_json(),
        "type_iv": type_iv.to_json(),
        "generators": generators(c),
    });
    let text = format!(
        "extended code: length {}, type 4^{k1} 2^{k2}, k3 = {}\nself-dual {}, Type II {} ({}), Type IV {:?} ({})\n{}",
        c.length(),
        ext.k3,
        c.is_self_dual(),
        type_ii.holds(),
        type_ii.method.name(),
        type_iv.outcome,
        type_iv.method.name(),
        c.to_text()
    );
    Ok(Output::new(json, text, ok))
}

pub fn gray(args: &PairArgs) -> Result<Output> {
    let (source, code) = source_code(args)?;
    let image = gray_image_code(&code)?;
    let (d, capacity) = match image.minimum_distance() {
        Ok(d) => (d, None),
        Err(e @ Error::Capacity { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e),
    };
    let mut json = json!({
        "source": source,
        "length": image.length(),
        "dimension": image.dimension(),
        "minimum_distance": d,
        "even": image.is_even(),
        "doubly_even": image.is_doubly_even(),
        "self_dual": image.is_self_dual(),
    });
    let d_text = d.map_or_else(|| "?".to_string(), |d| d.to_string());
    let mut text = format!(
        "Gray image [{}, {}, {d_text}], doubly even {}, self-dual {}\n",
        image.length(),
        image.dimension(),
        image.is_doubly_even(),
        image.is_self_dual()
    );
    if let Some(msg) = capacity {
        let _ = writeln!(text, "minimum distance not computed: {msg}");
        json["capacity"] = json!(msg);
        return Ok(Output {
            json,
            text,
            status: Status::Capacity,
        });
    }
    Ok(Output::new(json, text, true))
}

#[derive(Default)]
struct Checks(Vec<(String, Option<bool>, String)>);

impl Checks {
    fn add(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.0.push((name.to_string(), Some(ok), detail.into()));
    }

    /// Records a fallible check; capacity errors mark it skipped.
    fn try_add(&mut self, name: &str, r: Result<(bool, String)>) {
        match r {
            Ok((ok, detail)) => self.add(name, ok, detail),
            Err(e @ Error::Capacity { .. }) => self.0.push((name.to_string(), None, e.to_string())),
            Err(e) => self.add(name, false, e.to_string()),
        }
    }

    fn passed(&self) -> bool {
        self.0.iter().all(|(_, ok, _)| *ok != Some(false))
    }

    fn json(&self) -> Value {
        self.0
            .iter()
            .map(|(name, ok, detail)| {
                let status = match ok {
                    Some(true) => "pass",
                    Some(false) => "fail",
                    None => "skipped",
                };
                json!({"name": name, "status": status, "detail": detail})
            })
            .collect()
    }

    fn text(&self) -> String {
        let mut s = String::new();
        for (name, ok, detail) in &self.0 {
            let tag = match ok {
                Some(true) => "ok  ",
                Some(false) => "FAIL",
                None => "skip",
            };
            if detail.is_empty() {
                let _ = writeln!(s, "{tag} {name}");
            } else {
                let _ = writeln!(s, "{tag} {name}: {detail}");
            }
        }
        s
    }
}

pub fn verify(m: usize, exhaustive: bool, s: Sampling) -> Result<Output> {
    if m != 3 && m != 5 {
        return Err(Error::UnsupportedArity {
            arity: m,
            reason: "verify supports m = 3 and m = 5",
        });
    }
    let closed = closed_form(m)?;
    let (a, b) = reference_pair(m)?;
    let code = extend_type_ii(&build_code(&a, &b)?)?.code;
    let mut checks = Checks::default();

    checks.add(
        "self-dual",
        code.is_self_dual(),
        format!("type {:?}", code.type_of()),
    );
    let t2 = code.type_ii();
    checks.add("Type II", t2.holds(), t2.method.name());
    let size = closed.code_size();
    let totals = closed.euclidean.total() == size
        && closed.swe.total() == size
        && closed.lee.as_ref().is_none_or(|l| l.total() == size);
    checks.add(
        "closed-form totals",
        totals,
        format!("2^{}", closed.length()),
    );
    checks.add(
        "swe marginal = Euclidean distribution",
        closed.swe.distribution(WeightKind::Euclidean) == closed.euclidean,
        "",
    );
    checks.add(
        "literal swe overcounts the middle class",
        closed.literal_swe_overcounts(),
        "",
    );
    let residue = code.residue();
    checks.try_add(
        "torsion distribution = MacWilliams transform of the residue",
        residue
            .weight_distribution()
            .and_then(|w| w.macwilliams(residue.dimension()))
            .map(|w| {
                (
                    w == closed.torsion,
                    format!("residue dimension {}", residue.dimension()),
                )
            }),
    );
    checks.try_add(
        "torsion distribution = enumeration",
        code.torsion()
            .weight_distribution()
            .map(|w| (w == closed.torsion, String::new())),
    );

    if m == 3 {
        checks.try_add(
            "swe = enumeration",
            code.swe()
                .map(|t| (t == closed.swe, "256 codewords".to_string())),
        );
    } else {
        let t4 = code.type_iv(s.samples, s.seed);
        checks.add("Type IV", t4.holds(), t4.method.name());
        let r = code.sample_check(s.samples, s.seed);
        checks.add(
            "sampled congruences",
            r.all_pass(),
            format!(
                "{} samples, seed {:#x}: {} / {} / {} violations of 8 | wt_E, 4 | wt_L, 2 | wt_H",
                r.samples, r.seed, r.euclidean_not_0_mod_8, r.lee_not_0_mod_4, r.hamming_odd
            ),
        );
        let congruent = closed.euclidean.counts.keys().all(|w| w % 8 == 0)
            && closed
                .lee
                .as_ref()
                .is_some_and(|l| l.counts.keys().all(|w| w % 4 == 0));
        checks.add("closed-form congruences", congruent, "8 | wt_E, 4 | wt_L");
        let gray = closed
            .gray_image_distribution()
            .expect("Lee distribution for m >= 5");
        checks.try_add(
            "Gray distribution is fixed by MacWilliams",
            gray.macwilliams(closed.length())
                .map(|w| (w == gray, String::new())),
        );
        if exhaustive {
            checks.try_add(
                "swe = exhaustive enumeration",
                code.swe_with_limit(EXHAUSTIVE_LIMIT_LOG2).map(|t| {
                    let ok = t == closed.swe
                        && t.distribution(WeightKind::Euclidean) == closed.euclidean
                        && Some(&t.distribution(WeightKind::Lee)) == closed.lee.as_ref();
                    (ok, format!("2^{} codewords", closed.length()))
                }),
            );
        }
    }

    let ok = checks.passed();
    let json = json!({
        "m": m,
        "samples": s.samples,
        "seed": s.seed,
        "exhaustive": exhaustive,
        "checks": checks.json(),
        "closed_form": closed.to_json(),
        "passed": ok,
    });
    let text = format!(
        "verify m = {m} (samples {}, seed {:#x})\n{}",
        s.samples,
        s.seed,
        checks.text()
    );
    Ok(Output::new(json, text, ok))
}

fn row_text(r: &DesignRow) -> String {
    let s = &r.summary;
    let mut line = format!(
        "{:<18} {:<34} {:<12} b = {:<4} intersections {:?}",
        r.code,
        r.words,
        r.params()
            .map_or_else(|| "not a 1-design".to_string(), |p| p.to_string()),
        s.b,
        s.intersection_numbers
    );
    if let Some(net) = &s.net {
        let _ = write!(line, ", net {net}");
    }
    for (t, g) in &s.srg {
        let _ = write!(line, ", G_{t} = SRG({},{},{},{})", g.v, g.k, g.lambda, g.mu);
    }
    line.push('\n');
    line
}

pub fn designs(m: usize) -> Result<Output> {
    let rows = match m {
        3 | 5 => table_rows(m)?,
        7 => Vec::new(),
        _ => {
            return Err(Error::UnsupportedArity {
                arity: m,
                reason: "designs supports m = 3, 5 and 7",
            })
        }
    };
    let torsion = torsion_min_weight_design(m)?;
    let expected = TorsionDesign::expected(m);
    let torsion_ok =
        verify_one_design(&torsion.design) == Some(expected) && torsion.coverage_holds();
    let ok = torsion_ok && rows.iter().all(|r| r.params().is_some());
    let json = json!({
        "m": m,
        "rows": rows.iter().map(DesignRow::to_json).collect::<Vec<_>>(),
        "torsion": torsion.to_json(),
        "torsion_expected": expected.to_string(),
        "passed": ok,
    });
    let mut text: String = rows.iter().map(row_text).collect();
    let _ = writeln!(
        text,
        "torsion min-weight design {} with {} blocks in {} classes, expected {expected}: {}",
        verify_one_design(&torsion.design).map_or_else(|| "?".to_string(), |p| p.to_string()),
        torsion.design.b(),
        torsion.classes.len(),
        if torsion_ok { "ok" } else { "FAIL" }
    );
    Ok(Output::new(json, text, ok))
}

pub fn pipeline(args: &PairArgs, s: Sampling) -> Result<Output> {
    let p = pair(args)?;
    let opts = PipelineOptions {
        samples: s.samples,
        seed: s.seed,
        ..PipelineOptions::default()
    };
    let report = pipeline_with(&p.a, &p.b, &opts)?;
    let mut json = report.to_json();
    json["config"] = json!({"samples": s.samples, "seed": s.seed});
    let mut text = format!(
        "pipeline m = {} for a = {}, b = {} (samples {}, seed {:#x})\n",
        report.m, p.a_anf, p.b_anf, s.samples, s.seed
    );
    for c in &report.checks {
        let _ = writeln!(
            text,
            "{} {}: {}",
            if c.passed { "ok  " } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    let _ = writeln!(
        text,
        "{}",
        if report.passed() {
            "all checks pass"
        } else {
            "some checks fail"
        }
    );
    Ok(Output::new(json, text, report.passed()))
}

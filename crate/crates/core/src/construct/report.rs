//! The whole construction for one bent pair, collected into a JSON report
//! with a list of pass/fail checks.

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Map, Value};

use super::{
    build_cf, circulant_code, closed_form, extend_type_ii, four_variant_codes, gray_image_code,
    PAUT_ORDER_M5_REFERENCE,
};
use crate::bincode::{
    BinaryCode, BinaryWeightDistribution, MAX_ENUMERATION_DIMENSION, MAX_SEARCH_WEIGHT,
};
use crate::boolfn::BooleanFunction;
use crate::designs::{pair_design_rows, torsion_design_of, TorsionDesign};
use crate::error::{Error, Result};
use crate::z4code::{Z4Code, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::z4vec::WeightKind;

/// Largest `m` a pipeline runs for.
pub const MAX_PIPELINE_M: usize = 7;

/// Largest `m` for which minimum weights, duals and design tables are
/// computed; above it only the torsion design is extracted.
pub const MAX_DETAILED_M: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub m: usize,
    pub body: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The body with the checks appended under `"checks"`.
    pub fn to_json(&self) -> Value {
        let mut v = self.body.clone();
        v["checks"] = Value::Array(
            self.checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect(),
        );
        v["passed"] = json!(self.passed());
        v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PipelineOptions {
    pub samples: u64,
    pub seed: u64,
    pub designs: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
            designs: true,
        }
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

fn code_json(c: &Z4Code) -> Value {
    let (k1, k2) = c.type_of();
    json!({
        "length": c.length(),
        "type": [k1, k2],
        "log2_size": c.log2_cardinality(),
        "self_orthogonal": c.is_self_orthogonal(),
        "self_dual": c.is_self_dual(),
        "cyclic": c.is_cyclic(),
    })
}

fn min_weights_json(w: Option<(usize, usize, usize)>) -> Value {
    match w {
        Some((h, l, e)) => json!({"hamming": h, "lee": l, "euclidean": e}),
        None => Value::Null,
    }
}

fn distributions_json(c: &Z4Code) -> Result<Value> {
    let swe = c.swe()?;
    let mut out = Map::new();
    for kind in WeightKind::ALL {
        out.insert(kind.name().into(), swe.distribution(kind).to_json());
    }
    out.insert("swe".into(), swe.to_json());
    Ok(Value::Object(out))
}

/// `[n, k, d]` of a binary code; `d` is found by enumeration when the
/// dimension allows, else by the bounded search.
fn binary_parameters(c: &BinaryCode) -> Result<(usize, usize, Option<usize>)> {
    let d = if c.dimension() <= MAX_ENUMERATION_DIMENSION {
        c.minimum_distance()?
    } else {
        let mut d = None;
        for bound in 1..=MAX_SEARCH_WEIGHT {
            if !c.min_weight_codewords(bound)?.is_empty() {
                d = Some(bound);
                break;
            }
        }
        d
    };
    Ok((c.length(), c.dimension(), d))
}

fn binary_json(c: &BinaryCode) -> Result<Value> {
    let (n, k, d) = binary_parameters(c)?;
    Ok(json!({
        "parameters": [n, k, d],
        "doubly_even": c.is_doubly_even(),
        "self_dual": c.is_self_dual(),
    }))
}

fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}

fn torsion_json_and_checks(t: &TorsionDesign, m: usize, checks: &mut Checks) -> Value {
    let want = TorsionDesign::expected(m);
    let got = crate::designs::verify_one_design(&t.design);
    checks.add(
        "torsion weight-2 supports form the expected 1-design",
        got == Some(want),
        format!(
            "expected {want} with {} blocks, got {} with {} blocks",
            want.b,
            got.map_or("no 1-design".into(), |p| p.to_string()),
            t.design.b()
        ),
    );
    checks.add(
        "torsion classes M(k) cover points as stated",
        t.coverage_holds(),
        format!("{} classes", t.classes.len()),
    );
    t.to_json()
}

/// [`pipeline_with`] under the default sample count and seed.
pub fn pipeline(a: &BooleanFunction, b: &BooleanFunction) -> Result<Report> {
    pipeline_with(a, b, &PipelineOptions::default())
}

pub fn pipeline_with(
    a: &BooleanFunction,
    b: &BooleanFunction,
    opts: &PipelineOptions,
) -> Result<Report> {
    let cf = build_cf(a, b)?;
    let n = cf.len();
    let m = a.arity() + 1;
    if m > MAX_PIPELINE_M {
        return Err(Error::UnsupportedArity {
            arity: m,
            reason: "pipelines run for m = 3, 5, 7",
        });
    }
    let detailed = m <= MAX_DETAILED_M;
    let mut checks = Checks::default();
    let mut body = Map::new();
    body.insert(
        "inputs".into(),
        json!({"a": a.to_anf(), "b": b.to_anf(), "m": m, "length": n}),
    );

    let w = cf.weights();
    let wt_e = w.euclidean;
    body.insert(
        "c_f".into(),
        json!({
            "digits": cf.to_string(),
            "hamming": w.hamming,
            "lee": w.lee,
            "euclidean": wt_e,
        }),
    );
    checks.add(
        "<c_f, c_f> = 0",
        cf.inner_product(&cf)? == 0,
        cf.to_string(),
    );
    checks.add(
        "wt_E(c_f) = 0 mod 8",
        wt_e % 8 == 0,
        format!("wt_E = {wt_e}"),
    );
    if m >= 5 {
        checks.add(
            "wt_E(c_f) >= 2^m/3 + 8 (observed)",
            3 * wt_e >= n + 24,
            format!("wt_E = {wt_e}, bound {:.2}", n as f64 / 3.0 + 8.0),
        );
    }

    let c = circulant_code(&cf);
    let mut cf_json = code_json(&c);
    let residue_dim = c.residue().dimension();
    cf_json["residue_dimension"] = json!(residue_dim);
    checks.add("C_f is self-orthogonal", c.is_self_orthogonal(), "");
    checks.add(
        "generators of C_f have wt_E = 0 mod 8",
        c.generators()
            .iter()
            .all(|g| g.weight(WeightKind::Euclidean) % 8 == 0),
        "",
    );
    checks.add(
        "residue of C_f has dimension 2",
        residue_dim == 2,
        format!("dimension {residue_dim}"),
    );
    if detailed {
        cf_json["min_weights"] = min_weights_json(c.min_weights()?);
    }
    if c.is_enumerable() {
        cf_json["distributions"] = distributions_json(&c)?;
    }
    match m {
        3 => cf_json["paut_order"] = json!(c.paut_order()?),
        5 => {
            cf_json["paut_order_reference"] = json!(PAUT_ORDER_M5_REFERENCE.to_string());
            cf_json["paut_order_note"] = json!("recorded constant, not recomputed");
        }
        _ => {}
    }
    body.insert("C_f".into(), cf_json);

    if detailed {
        let dual = c.dual()?;
        let mut dual_json = code_json(&dual);
        dual_json["min_weights"] = min_weights_json(dual.min_weights()?);
        body.insert("dual".into(), dual_json);
    }

    match gray_image_code(&c) {
        Ok(image) => {
            let mut v = binary_json(&image)?;
            v["linear"] = json!(true);
            checks.add("Gray image of C_f is linear", true, "");
            if m >= 5 {
                checks.add(
                    "Gray image of C_f is doubly even",
                    image.is_doubly_even(),
                    "",
                );
            }
            body.insert("gray_C_f".into(), v);
        }
        Err(Error::NonlinearImage(why)) => {
            checks.add("Gray image of C_f is linear", false, why.clone());
            body.insert("gray_C_f".into(), json!({"linear": false, "reason": why}));
        }
        Err(e) => return Err(e),
    }

    let ext = extend_type_ii(&c)?;
    let code = &ext.code;
    let mut ext_json = code_json(code);
    ext_json["k3"] = json!(ext.k3);
    ext_json["reordered"] = json!(ext.reordered);
    ext_json["permutation"] = json!(ext.permutation);
    ext_json["added_rows"] = json!(ext
        .added_rows
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>());
    checks.add("extension is self-dual", code.is_self_dual(), "");
    checks.add(
        "extension has type 4^2 2^(n-4)",
        code.type_of() == (2, n - 4),
        format!("{:?}", code.type_of()),
    );
    let type_ii = code.type_ii();
    let type_iv = code.type_iv(opts.samples, opts.seed);
    let sample = code.sample_check(opts.samples, opts.seed);
    checks.add(
        "extension is Type II",
        type_ii.holds(),
        type_ii.method.name(),
    );
    if m >= 5 {
        checks.add(
            "extension is Type IV",
            type_iv.holds(),
            type_iv.method.name(),
        );
        checks.add(
            "sampled codewords have 8 | wt_E, 4 | wt_L, even wt_H",
            sample.all_pass(),
            format!(
                "{} samples, seed {}: {} / {} / {} violations",
                sample.samples,
                sample.seed,
                sample.euclidean_not_0_mod_8,
                sample.lee_not_0_mod_4,
                sample.hamming_odd
            ),
        );
    } else {
        checks.add(
            "sampled codewords have 8 | wt_E",
            sample.euclidean_not_0_mod_8 == 0,
            format!("{} samples, seed {}", sample.samples, sample.seed),
        );
    }
    ext_json["type_ii"] = type_ii.to_json();
    ext_json["type_iv"] = type_iv.to_json();
    ext_json["samples"] = json!({
        "count": sample.samples,
        "seed": sample.seed,
        "euclidean_not_0_mod_8": sample.euclidean_not_0_mod_8,
        "lee_not_0_mod_4": sample.lee_not_0_mod_4,
        "hamming_odd": sample.hamming_odd,
    });
    if code.is_enumerable() {
        ext_json["distributions"] = distributions_json(code)?;
    }
    if m == 3 {
        ext_json["paut_order"] = json!(code.paut_order()?);
    }

    match four_variant_codes(&c) {
        Ok(variants) => {
            let mut variants_json = json!({
                "b": variants.iter().map(|v| v.b).collect::<Vec<_>>(),
            });
            if n <= crate::z4code::MAX_EQUIVALENCE_LENGTH {
                let (mut monomial, mut permutation) = (true, true);
                for (i, x) in variants.iter().enumerate() {
                    for y in &variants[i + 1..] {
                        monomial &= x.code.monomial_equivalent(&y.code)?.is_some();
                        permutation &= x.code.permutation_equivalent(&y.code)?.is_some();
                    }
                }
                let orders = variants
                    .iter()
                    .map(|v| v.code.paut_order())
                    .collect::<Result<Vec<_>>>()?;
                checks.add("the four variants are monomially equivalent", monomial, "");
                variants_json["pairwise_monomially_equivalent"] = json!(monomial);
                variants_json["pairwise_permutation_equivalent"] = json!(permutation);
                variants_json["paut_orders"] = json!(orders);
            }
            checks.add("four Type II variants", true, "");
            ext_json["variants"] = variants_json;
        }
        Err(Error::ConstructionBug(why)) => checks.add("four Type II variants", false, why),
        Err(e) => return Err(e),
    }

    let image = gray_image_code(code)?;
    let mut image_json = binary_json(&image)?;
    checks.add(
        "Gray image of the extension is self-dual",
        image.is_self_dual(),
        "",
    );
    if m >= 5 {
        checks.add(
            "Gray image of the extension is doubly even",
            image.is_doubly_even(),
            "",
        );
    }

    let closed = closed_form(m)?;
    let size = pow2(n);
    let mut totals = closed.euclidean.total() == size
        && closed.swe.total() == size
        && closed.torsion.total() == pow2(n - 2);
    if let Some(lee) = &closed.lee {
        totals &= lee.total() == size;
    }
    checks.add(
        "closed-form totals",
        totals,
        format!("2^{n} words, 2^{} torsion words", n - 2),
    );
    let residue_dist = code.residue().weight_distribution()?;
    let mw = residue_dist.macwilliams(code.residue().dimension())?;
    checks.add(
        "torsion distribution = MacWilliams transform of residue",
        mw == closed.torsion,
        "",
    );
    if code.torsion().dimension() <= MAX_ENUMERATION_DIMENSION {
        checks.add(
            "torsion distribution = enumeration",
            code.torsion().weight_distribution()? == closed.torsion,
            "",
        );
    }
    if code.is_enumerable() {
        let swe = code.swe()?;
        checks.add(
            "closed-form Euclidean distribution = enumeration",
            swe.distribution(WeightKind::Euclidean) == closed.euclidean,
            "",
        );
        checks.add("closed-form swe = enumeration", swe == closed.swe, "");
        let lee = swe.distribution(WeightKind::Lee);
        if let Some(closed_lee) = &closed.lee {
            checks.add(
                "closed-form Lee distribution = enumeration",
                &lee == closed_lee,
                "",
            );
        }
        if image.dimension() <= MAX_ENUMERATION_DIMENSION {
            let mut counts = vec![BigUint::default(); 2 * n + 1];
            for (&w, c) in &lee.counts {
                counts[w] = c.clone();
            }
            let want = BinaryWeightDistribution::new(counts);
            checks.add(
                "Gray image distribution = Lee distribution",
                image.weight_distribution()? == want,
                "",
            );
        }
    }
    if let Some(gray) = closed.gray_image_distribution() {
        let self_dual = gray.macwilliams(n).map(|d| d == gray).unwrap_or(false);
        checks.add(
            "closed-form Gray image distribution is fixed by MacWilliams",
            self_dual,
            "",
        );
        image_json["closed_form_distribution"] = gray.to_json();
    }
    ext_json["gray_image"] = image_json;
    body.insert("extension".into(), ext_json);
    body.insert("closed_form".into(), closed.to_json());

    if opts.designs {
        let mut designs = Map::new();
        if detailed {
            let rows = pair_design_rows(&c, code)?;
            designs.insert(
                "rows".into(),
                Value::Array(rows.iter().map(|r| r.to_json()).collect()),
            );
        }
        let t = torsion_design_of(code)?;
        designs.insert(
            "torsion".into(),
            torsion_json_and_checks(&t, m, &mut checks),
        );
        body.insert("designs".into(), Value::Object(designs));
    }

    Ok(Report {
        m,
        body: Value::Object(body),
        checks: checks.0,
    })
}

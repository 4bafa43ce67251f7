//! Command implementations behind the `cda` binary. Every command turns JSON
//! input into a [`RunReport`]; the binary only handles I/O and exit codes.

use std::collections::BTreeMap;

use cda_core::boundquiver::conditions::{build_tilting_apr, build_tilting_canonical, check_conditions};
use cda_core::boundquiver::constructors::{canonical_algebra, cd_algebra, field_to_json, Instance, Lambda};
use cda_core::boundquiver::tilting::{dimension_matrix, end_dims};
use cda_core::lattice::{
    coxeter_matrix, enumerate_symbols, gram_both_bases, gram_s_basis, signature, symbol_from_data, PointDims,
    RawEpsilon, RepType, Symbol,
};
use cda_core::speciesdims::{
    base_change_cd_to_canonical, base_change_squid_to_canonical, base_change_squid_to_cd, cartan_canonical, cartan_cd,
    cartan_squid, scaled_projective_gram,
};
use cda_core::verify::{self, CheckResult};
use cda_core::Field;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

/// Largest sweep bounds accepted.
pub const MAX_RANK: usize = 12;
pub const MAX_D: u32 = 4;
pub const MAX_T: usize = 4;
pub const MAX_WEIGHT: u32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error in {source_name} at line {line}, column {column}: {message}")]
    Parse { source_name: String, line: usize, column: usize, message: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub checks: Vec<CheckResult>,
    pub matrices: BTreeMap<String, Value>,
}

impl RunReport {
    fn new(command: &str, inputs: Value) -> RunReport {
        RunReport { command: command.into(), inputs, checks: Vec::new(), matrices: BTreeMap::new() }
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && verify::all_pass(&self.checks)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn parse_json(text: &str, source_name: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        source_name: source_name.into(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// `Q` or `Fp:<p>`.
pub fn parse_field(s: &str) -> Result<Field, CliError> {
    match s.trim() {
        "Q" => Ok(Field::Rational),
        t => {
            let p = t
                .strip_prefix("Fp:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| CliError::Input(format!("field must be Q or Fp:<p>, got {s:?}")))?;
            Field::prime(p).map_err(|e| CliError::Input(e.to_string()))
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// A symbol given directly, `{"epsilon": 1, "arms": [{"p":2,"e":1,"f":2}]}`,
/// or through dimension data, `{"epsilon": "1", "weights": [2],
/// "points": [{"dim_du":1,"dim_uf":2,"dim_dv":1,"dim_vg":2}]}`.
pub fn parse_symbol(v: &Value) -> Result<Symbol, CliError> {
    let Some(points) = v.get("points") else {
        return Symbol::from_json(v).map_err(input);
    };
    let raw = match &v["epsilon"] {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(CliError::Input("missing \"epsilon\"".into())),
    };
    let eps = RawEpsilon::parse(&raw).ok_or_else(|| CliError::Input(format!("epsilon must be 1/2, 1 or 2, got {raw}")))?;
    let get = |p: &Value, k: &str| -> Result<u32, CliError> {
        p[k].as_u64().map(|x| x as u32).ok_or_else(|| CliError::Input(format!("point is missing integer \"{k}\"")))
    };
    let pts = points
        .as_array()
        .ok_or_else(|| CliError::Input("\"points\" must be an array".into()))?
        .iter()
        .map(|p| Ok(PointDims::new(get(p, "dim_du")?, get(p, "dim_uf")?, get(p, "dim_dv")?, get(p, "dim_vg")?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let weights: Vec<u32> = serde_json::from_value(v["weights"].clone()).map_err(input)?;
    symbol_from_data(eps, &pts, &weights).map_err(input)
}

fn require_rational(field: Option<Field>) -> Result<(), CliError> {
    match field {
        None | Some(Field::Rational) => Ok(()),
        Some(_) => Err(CliError::Input("lattice computations are over Q only".into())),
    }
}

/// Invariants, Gram matrices in three bases and the Coxeter matrix of a symbol.
pub fn cmd_symbol(v: &Value, field: Option<Field>) -> Result<RunReport, CliError> {
    require_rational(field)?;
    let s = parse_symbol(v)?;
    let mut r = RunReport::new("symbol", v.clone());
    let sig = signature(&s);
    r.inputs = json!({ "input": v, "symbol": s.to_json() });
    r.checks.push(CheckResult::new(
        "symbol.invariants",
        true,
        json!({
            "kappa": s.kappa(),
            "delta": s.delta(),
            "rep_type": s.rep_type().to_string(),
            "signature": [sig.0, sig.1, sig.2],
            "rank": s.rank(),
            "condition6": s.condition6(),
        }),
    ));
    r.checks.push(verify::lattice_axioms(&s));
    r.checks.push(verify::gram_displays(&s));
    r.checks.push(verify::type_table(&s));
    let l = gram_s_basis(&s);
    r.matrices.insert("gram_s_basis".into(), l.to_json());
    if let Ok(tau) = coxeter_matrix(&l) {
        r.matrices.insert("coxeter".into(), tau.to_json());
    }
    if let Ok((c, o)) = gram_both_bases(&s) {
        r.matrices.insert("gram_canonical_basis".into(), c.to_json());
        r.matrices.insert("gram_opposite_basis".into(), o.to_json());
    }
    Ok(r)
}

/// Lattice bounds shared by `lattice-verify` and `sweep`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LatticeBounds {
    pub max_rank: usize,
    pub max_d: u32,
}

fn lattice_bounds(v: &Value) -> Result<LatticeBounds, CliError> {
    let max_rank = opt_u64(v, "max_rank")?.unwrap_or(0) as usize;
    let max_d = opt_u64(v, "max_d")?.unwrap_or(if max_rank > 0 { 2 } else { 0 }) as u32;
    if max_rank > MAX_RANK || max_d > MAX_D {
        return Err(CliError::Input(format!("bounds exceed max_rank {MAX_RANK}, max_d {MAX_D}")));
    }
    Ok(LatticeBounds { max_rank, max_d })
}

fn opt_u64(v: &Value, key: &str) -> Result<Option<u64>, CliError> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(x) => x.as_u64().map(Some).ok_or_else(|| CliError::Input(format!("\"{key}\" must be a non-negative integer"))),
    }
}

/// Collapse per-item checks into one result per check name.
fn aggregate(items: Vec<Vec<CheckResult>>) -> Vec<CheckResult> {
    let mut by_name: BTreeMap<String, (usize, usize, Vec<Value>)> = BTreeMap::new();
    for c in items.into_iter().flatten() {
        let e = by_name.entry(c.name).or_default();
        e.0 += 1;
        if !c.pass {
            e.1 += 1;
            if e.2.len() < 10 {
                e.2.push(c.details);
            }
        }
    }
    by_name
        .into_iter()
        .map(|(name, (total, failed, sample))| {
            CheckResult::new(name, failed == 0, json!({ "total": total, "failed": failed, "failures": sample }))
        })
        .collect()
}

fn lattice_checks(s: &Symbol) -> Vec<CheckResult> {
    let mut v = vec![verify::lattice_axioms(s), verify::gram_displays(s), verify::type_table(s), verify::euler_table_check(s, true)];
    v.extend(verify::symbol_congruences(s));
    v
}

/// Lattice axioms, Gram displays and the type table over enumerated symbols.
pub fn cmd_lattice_verify(v: &Value, field: Option<Field>, threads: Option<usize>) -> Result<RunReport, CliError> {
    require_rational(field)?;
    let b = lattice_bounds(v)?;
    let mut r = RunReport::new("lattice-verify", v.clone());
    let symbols = enumerate_symbols(b.max_rank, b.max_d);
    let results = run_pool(threads, || symbols.par_iter().map(lattice_checks).collect())?;
    r.checks.push(CheckResult::new("lattice.symbols", true, json!({ "count": symbols.len() })));
    r.checks.extend(aggregate(results));
    Ok(r)
}

fn parse_instance(v: &Value, field: Option<Field>) -> Result<Instance, CliError> {
    let mut v = v.clone();
    if let (Some(f), Some(o)) = (field, v.as_object_mut()) {
        o.insert("field".into(), field_to_json(f));
    }
    Instance::from_json(&v).map_err(input)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Cd,
    Canonical,
}

impl std::str::FromStr for Target {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Target, CliError> {
        match s {
            "cd" => Ok(Target::Cd),
            "canonical" => Ok(Target::Canonical),
            _ => Err(CliError::Input(format!("target must be cd or canonical, got {s:?}"))),
        }
    }
}

/// Conditions, tilting module, endomorphism dimensions and congruence.
pub fn cmd_tilt(v: &Value, target: Target, field: Option<Field>) -> Result<RunReport, CliError> {
    let inst = parse_instance(v, field)?;
    let name = match target {
        Target::Cd => "cd",
        Target::Canonical => "canonical",
    };
    let mut r = RunReport::new("tilt", json!({ "instance": inst.to_json(), "target": name }));
    let conds = check_conditions(&inst).map_err(input)?;
    r.checks.push(CheckResult::new("conditions.all", conds.all(), json!(conds)));
    match target {
        Target::Cd => {
            r.checks.extend(verify::tilt_cd(&inst));
            if let (Ok((alg, t)), Ok(b)) = (build_tilting_apr(&inst), cd_algebra(&inst)) {
                r.matrices.insert("end_dims".into(), end_dims(&alg, &t).to_json());
                r.matrices.insert("cartan".into(), b.cartan().to_json());
                r.matrices.insert("dimension_matrix".into(), dimension_matrix(&t).to_json());
            }
        }
        Target::Canonical => {
            r.checks.extend(verify::tilt_canonical(&inst));
            if let (Ok((alg, t)), Ok(c)) = (build_tilting_canonical(&inst), canonical_algebra(&inst)) {
                r.matrices.insert("end_dims".into(), end_dims(&alg, &t).to_json());
                r.matrices.insert("cartan".into(), c.algebra.cartan().to_json());
                r.matrices.insert("dimension_matrix".into(), dimension_matrix(&t).to_json());
                r.matrices.insert("normalization".into(), json!(c.normalization.describe()));
            }
        }
    }
    Ok(r)
}

/// Pairwise congruence of the three projective-basis Gram matrices.
pub fn cmd_congruence(v: &Value, field: Option<Field>) -> Result<RunReport, CliError> {
    require_rational(field)?;
    let s = parse_symbol(v)?;
    let mut r = RunReport::new("congruence", json!({ "input": v, "symbol": s.to_json() }));
    r.checks.extend(verify::symbol_congruences(&s));
    r.matrices.insert("squid".into(), scaled_projective_gram(&s, &cartan_squid(&s)).to_json());
    r.matrices.insert("canonical".into(), scaled_projective_gram(&s, &cartan_canonical(&s)).to_json());
    if let Ok(b) = base_change_squid_to_canonical(&s) {
        r.matrices.insert("base_change_squid_canonical".into(), b.to_json());
    }
    if let Ok(cd) = cartan_cd(&s) {
        r.matrices.insert("cd".into(), scaled_projective_gram(&s, &cd).to_json());
        r.matrices.insert("base_change_squid_cd".into(), base_change_squid_to_cd(&s).to_json());
        if let Ok(b) = base_change_cd_to_canonical(&s) {
            r.matrices.insert("base_change_cd_canonical".into(), b.to_json());
        }
    }
    Ok(r)
}

/// Sweep bounds: symbols up to `max_rank`/`max_d`, simply-laced instances with
/// `1 ≤ t ≤ max_t`, weights in `2..=max_weight`, points chosen increasingly
/// from `points` (default 0, 1, 2, 3, inf).
#[derive(Clone, Debug, PartialEq)]
pub struct SweepBounds {
    pub lattice: LatticeBounds,
    pub max_t: usize,
    pub max_weight: u32,
    pub points: Vec<String>,
}

pub fn sweep_bounds(v: &Value) -> Result<SweepBounds, CliError> {
    if !v.is_object() {
        return Err(CliError::Input("sweep bounds must be a JSON object".into()));
    }
    let lattice = lattice_bounds(v)?;
    let max_t = opt_u64(v, "max_t")?.unwrap_or(0) as usize;
    let max_weight = opt_u64(v, "max_weight")?.unwrap_or(if max_t > 0 { 3 } else { 0 }) as u32;
    if max_t > MAX_T || max_weight > MAX_WEIGHT {
        return Err(CliError::Input(format!("bounds exceed max_t {MAX_T}, max_weight {MAX_WEIGHT}")));
    }
    let points = match v.get("points") {
        None | Some(Value::Null) => ["0", "1", "2", "3", "inf"].map(String::from).to_vec(),
        Some(p) => serde_json::from_value::<Vec<Value>>(p.clone())
            .map_err(input)?
            .into_iter()
            .map(|x| match x {
                Value::String(s) => Ok(s),
                Value::Number(n) => Ok(n.to_string()),
                _ => Err(CliError::Input("points must be strings or numbers".into())),
            })
            .collect::<Result<_, _>>()?,
    };
    Ok(SweepBounds { lattice, max_t, max_weight, points })
}

pub fn sweep_instances(b: &SweepBounds, field: Field) -> Result<Vec<Instance>, CliError> {
    let lambdas: Vec<Lambda> = b.points.iter().map(|p| Lambda::parse(field, p)).collect::<Result<_, _>>().map_err(input)?;
    let mut out = Vec::new();
    if b.max_weight < 2 {
        return Ok(out);
    }
    let span = (b.max_weight - 1) as usize;
    for t in 1..=b.max_t.min(lambdas.len()) {
        let subsets = increasing_subsets(lambdas.len(), t);
        for code in 0..span.pow(t as u32) {
            let weights: Vec<u32> = (0..t).map(|k| 2 + (code / span.pow(k as u32) % span) as u32).collect();
            for sub in &subsets {
                let ls = sub.iter().map(|&k| lambdas[k].clone()).collect();
                out.push(Instance::new(weights.clone(), ls, field).map_err(input)?);
            }
        }
    }
    Ok(out)
}

fn increasing_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for last in k - 1..n {
        for mut s in increasing_subsets(last, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out.sort();
    out
}

fn instance_checks(inst: &Instance) -> Vec<CheckResult> {
    let mut v = vec![verify::conditions_agree(inst)];
    if !check_conditions(inst).map(|c| c.all()).unwrap_or(false) {
        return v;
    }
    // the Coxeter-Dynkin algebra is only built for finite points
    let finite = inst.lambdas.iter().all(|l| !l.is_infinite());
    if finite {
        v.extend(verify::tilt_cd(inst));
    }
    v.extend(verify::tilt_canonical(inst));
    v.extend(verify::reflections(inst).into_iter().filter(|c| finite || c.name != "reflect.cd"));
    v
}

fn run_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder.build().map_err(|e| CliError::Io(e.to_string()))?;
    Ok(pool.install(f))
}

/// Every cross-module suite over the bounded enumerations.
pub fn cmd_sweep(v: &Value, field: Option<Field>, threads: Option<usize>) -> Result<RunReport, CliError> {
    let b = sweep_bounds(v)?;
    let field = field.unwrap_or(Field::Rational);
    let symbols = enumerate_symbols(b.lattice.max_rank, b.lattice.max_d);
    let instances = sweep_instances(&b, field)?;
    let (sym_results, inst_results) = run_pool(threads, || {
        (
            symbols.par_iter().map(lattice_checks).collect::<Vec<_>>(),
            instances.par_iter().map(instance_checks).collect::<Vec<_>>(),
        )
    })?;
    let mut types: BTreeMap<String, usize> = BTreeMap::new();
    for s in &symbols {
        *types.entry(s.rep_type().to_string()).or_default() += 1;
    }
    for t in [RepType::Domestic, RepType::Tubular, RepType::Wild] {
        types.entry(t.to_string()).or_default();
    }
    let mut r = RunReport::new("sweep", v.clone());
    r.checks.push(CheckResult::new(
        "sweep.enumeration",
        true,
        json!({ "symbols": symbols.len(), "instances": instances.len(), "rep_types": types }),
    ));
    r.checks.extend(aggregate(sym_results));
    r.checks.extend(aggregate(inst_results));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_and_instances() {
        assert_eq!(increasing_subsets(4, 2).len(), 6);
        assert_eq!(increasing_subsets(3, 0), vec![Vec::<usize>::new()]);
        let b = sweep_bounds(&json!({ "max_t": 2, "max_weight": 3 })).unwrap();
        // t=1: 2 weights × 5 points, t=2: 4 weight pairs × 10 point pairs
        assert_eq!(sweep_instances(&b, Field::Rational).unwrap().len(), 10 + 40);
    }

    #[test]
    fn field_flag() {
        assert_eq!(parse_field("Q").unwrap(), Field::Rational);
        assert_eq!(parse_field("Fp:101").unwrap(), Field::Prime(101));
        assert!(parse_field("Fp:100").is_err());
        assert!(parse_field("R").is_err());
    }

    #[test]
    fn parse_error_position() {
        match parse_json("{\n  \"a\": ,\n}", "x.json") {
            Err(CliError::Parse { line, column, .. }) => assert_eq!((line, column), (2, 8)),
            other => panic!("{other:?}"),
        }
    }
}

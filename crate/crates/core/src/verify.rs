//! Check suites shared by the acceptance tests and the command-line front end.
//! Every check returns a named pass/fail result with JSON details.

use serde::Serialize;
use serde_json::{json, Value};

use crate::boundquiver::conditions::{build_tilting_apr, build_tilting_canonical, check_conditions};
use crate::boundquiver::constructors::{cd_algebra, Instance, Lambda};
use crate::boundquiver::homological::ext_dim;
use crate::boundquiver::onepoint::{reflect_to_canonical, reflect_to_cd};
use crate::boundquiver::tilting::{
    cotilting_report, dimension_matrix, end_dims, tilting_report,
};
use crate::boundquiver::{BoundQuiverAlgebra, Representation};
use crate::exactalg::{Field, Matrix, Scalar};
use crate::lattice::{
    coxeter_matrix, display_canonical, display_opposite, expected_signature, gram_both_bases,
    gram_s_basis, signature, symbol_from_data, PointDims, RawEpsilon, RepType,
    Symbol,
};
use crate::speciesdims::{
    arm_label, base_change_cd_to_canonical, base_change_squid_to_canonical, base_change_squid_to_cd,
    cartan_canonical, cartan_cd, cartan_squid, congruence_check, gram_simple_basis,
    scaled_projective_gram, DimPresentation, SpeciesError,
};

const Q: Field = Field::Rational;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub details: Value,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, pass: bool, details: Value) -> CheckResult {
        CheckResult { name: name.into(), pass, details }
    }

    fn error(name: impl Into<String>, err: impl std::fmt::Display) -> CheckResult {
        CheckResult::new(name, false, json!({ "error": err.to_string() }))
    }
}

pub fn all_pass(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.pass)
}

fn int(n: i64) -> Scalar {
    Q.from_i64(n)
}

/// Symbols covered by the lattice suites: rank ≤ 12 with d_i ≤ 2, plus
/// rank ≤ 8 with d_i ≤ 4, without repetition.
pub fn lattice_symbols() -> Vec<Symbol> {
    let mut out = crate::lattice::enumerate_symbols(12, 2);
    for s in crate::lattice::enumerate_symbols(8, 4) {
        if s.arms.iter().any(|a| a.d() > 2) {
            out.push(s);
        }
    }
    out
}

/// Integral Coxeter matrix, ⟨y,x⟩ = −⟨x,τy⟩ on all basis pairs, and
/// τ^j s_i^(0) = s_i^(j), τ^{p_i} s_i^(0) = s_i^(0).
pub fn lattice_axioms(s: &Symbol) -> CheckResult {
    let name = "lattice.axioms";
    let l = gram_s_basis(s);
    let tau = match coxeter_matrix(&l) {
        Ok(t) => t,
        Err(e) => return CheckResult::error(name, e),
    };
    let adjoint = l.gram.transpose() == l.gram.mul(&tau).neg();
    let mut periodic = true;
    for (i, arm) in s.arms.iter().enumerate() {
        let start = unit(l.rank(), l.s_index(i, 0));
        let mut v = start.clone();
        for j in 1..=arm.p as usize {
            v = tau.mul(&v);
            let want = if j == arm.p as usize {
                start.clone()
            } else if j <= arm.p as usize - 2 {
                unit(l.rank(), l.s_index(i, j))
            } else {
                continue;
            };
            periodic &= v == want;
        }
    }
    CheckResult::new(
        name,
        adjoint && periodic,
        json!({ "symbol": s.to_string(), "integral": true, "adjoint": adjoint, "periodic": periodic }),
    )
}

fn unit(n: usize, k: usize) -> Matrix {
    let mut v = Matrix::zeros(Q, n, 1);
    v.set(k, 0, int(1));
    v
}

/// The canonical-basis and opposite-basis Gram matrices against their
/// closed-form displays.
pub fn gram_displays(s: &Symbol) -> CheckResult {
    let name = "lattice.gram_displays";
    let (c, o) = match gram_both_bases(s) {
        Ok(x) => x,
        Err(e) => return CheckResult::error(name, e),
    };
    let pass = c.gram == display_canonical(s) && o.gram == display_opposite(s);
    CheckResult::new(
        name,
        pass,
        json!({
            "symbol": s.to_string(),
            "canonical_convention": c.convention.name(),
            "opposite_convention": o.convention.name(),
        }),
    )
}

/// Sign of δ against the inertia of the symmetrized form.
pub fn type_table(s: &Symbol) -> CheckResult {
    let sig = signature(s);
    let want = expected_signature(s);
    CheckResult::new(
        "lattice.type_table",
        sig == want,
        json!({
            "symbol": s.to_string(),
            "delta": s.delta(),
            "rep_type": s.rep_type().to_string(),
            "signature": [sig.0, sig.1, sig.2],
            "expected": [want.0, want.1, want.2],
        }),
    )
}

/// Euler form of the Coxeter-Dynkin algebra in its simple basis, as the
/// closed-form value table states it (unit dim_k F). With `corrected`, the
/// entries ⟨S_i(j), S_G⟩ are −ε²f_i for j = 1 and 0 for j ≥ 2.
pub fn euler_value_table(s: &Symbol, corrected: bool) -> Option<Matrix> {
    let p = cartan_cd(s).ok()?;
    let n = p.size();
    let eps = s.epsilon as i64;
    let idx = |l: &str| p.index(l).unwrap();
    let (f, g) = (idx("F"), idx("G"));
    let mut m = Matrix::zeros(Q, n, n);
    m.set(f, f, int(1));
    m.set(f, g, int(2 * eps));
    m.set(g, g, int(eps * eps));
    for (i, arm) in s.arms.iter().enumerate() {
        let ef = int(eps * arm.f as i64);
        let d = &ef / &int(arm.e as i64);
        m.set(f, idx(&arm_label(i + 1, 1)), -&ef);
        for j in 1..arm.p as usize {
            let v = idx(&arm_label(i + 1, j));
            m.set(v, v, d.clone());
            if j + 1 < arm.p as usize {
                m.set(idx(&arm_label(i + 1, j + 1)), v, -&d);
            }
            let to_g = match (corrected, j) {
                (false, _) => int(eps * eps * arm.f as i64),
                (true, 1) => int(-eps * eps * arm.f as i64),
                (true, _) => int(0),
            };
            m.set(v, g, to_g);
        }
    }
    Some(m)
}

/// Simple-basis Euler form of the Coxeter-Dynkin algebra against the table.
pub fn euler_table_check(s: &Symbol, corrected: bool) -> CheckResult {
    let name = if corrected { "speciesdims.euler_table_corrected" } else { "speciesdims.euler_table" };
    let Ok(p) = cartan_cd(s) else {
        return CheckResult::new(name, true, json!({ "symbol": s.to_string(), "skipped": "condition (6) fails" }));
    };
    let got = match gram_simple_basis(&p) {
        Ok(g) => g,
        Err(e) => return CheckResult::error(name, e),
    };
    let want = euler_value_table(s, corrected).expect("cartan_cd succeeded");
    let mismatches: Vec<Value> = mismatches(&p, &got, &want);
    CheckResult::new(
        name,
        mismatches.is_empty(),
        json!({ "symbol": s.to_string(), "mismatches": mismatches }),
    )
}

fn mismatches(p: &DimPresentation, got: &Matrix, want: &Matrix) -> Vec<Value> {
    let mut out = Vec::new();
    for i in 0..got.rows() {
        for j in 0..got.cols() {
            if got.get(i, j) != want.get(i, j) {
                out.push(json!({
                    "entry": [p.vertex_labels[i], p.vertex_labels[j]],
                    "computed": got.get(i, j).to_string(),
                    "table": want.get(i, j).to_string(),
                }));
            }
        }
    }
    out
}

/// Pairwise congruence of the κ-scaled projective-basis Gram matrices of the
/// squid, Coxeter-Dynkin and canonical algebras.
pub fn symbol_congruences(s: &Symbol) -> Vec<CheckResult> {
    let a = scaled_projective_gram(s, &cartan_squid(s));
    let c = scaled_projective_gram(s, &cartan_canonical(s));
    let mut out = vec![congruence("congruence.squid_canonical", &a, &c, base_change_squid_to_canonical(s))];
    if let Ok(cd) = cartan_cd(s) {
        let b = scaled_projective_gram(s, &cd);
        out.push(congruence("congruence.squid_cd", &a, &b, Ok::<_, SpeciesError>(base_change_squid_to_cd(s))));
        out.push(congruence("congruence.cd_canonical", &b, &c, base_change_cd_to_canonical(s)));
    }
    out
}

fn congruence<E: std::fmt::Display>(name: &str, g1: &Matrix, g2: &Matrix, s: Result<Matrix, E>) -> CheckResult {
    let s = match s {
        Ok(s) => s,
        Err(e) => return CheckResult::error(name, e),
    };
    match congruence_check(g1, g2, &s) {
        Ok(pass) => CheckResult::new(name, pass, json!({ "base_change": s.to_json() })),
        Err(e) => CheckResult::error(name, e),
    }
}

fn lambdas(field: Field, ls: &[&str]) -> Vec<Lambda> {
    ls.iter().map(|l| Lambda::parse(field, l).expect("fixed point label")).collect()
}

/// Simply-laced instances: every weight tuple with entries in {2,3,4} and
/// 1 ≤ t ≤ 4, paired with every increasing t-subset of {0,1,2,3,∞}.
pub fn condition_instances() -> Vec<Instance> {
    let points = ["0", "1", "2", "3", "inf"];
    let mut out = Vec::new();
    for t in 1..=4usize {
        let mut subsets = Vec::new();
        choose(points.len(), t, 0, &mut Vec::new(), &mut subsets);
        for code in 0..3usize.pow(t as u32) {
            let weights: Vec<u32> = (0..t).map(|k| 2 + (code / 3usize.pow(k as u32) % 3) as u32).collect();
            for sub in &subsets {
                let ls: Vec<&str> = sub.iter().map(|&k| points[k]).collect();
                out.push(Instance::new(weights.clone(), lambdas(Q, &ls), Q).expect("valid instance"));
            }
        }
    }
    out
}

fn choose(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        choose(n, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Conditions (1), (2), (3), (5), (6) are all true or all false.
pub fn conditions_agree(inst: &Instance) -> CheckResult {
    let name = "conditions.agree";
    match check_conditions(inst) {
        Ok(c) => {
            let v = [c.c1, c.c2, c.c3, c.c5, c.c6];
            let pass = v.iter().all(|&b| b == v[0]) && c.c4 == c.c5;
            CheckResult::new(name, pass, json!({ "instance": inst.to_string(), "conditions": c }))
        }
        Err(e) => CheckResult::error(name, e),
    }
}

/// Instances for the tilting suites: t = 2, 3 and mixed weights up to (2,3,4).
pub fn tilting_instances() -> Vec<Instance> {
    let set: [(&[u32], &[&str]); 12] = [
        (&[2, 2], &["0", "1"]),
        (&[2, 3], &["0", "1"]),
        (&[2, 4], &["0", "1"]),
        (&[3, 3], &["0", "1"]),
        (&[3, 4], &["0", "1"]),
        (&[2, 3], &["1", "3"]),
        (&[2, 2, 2], &["0", "1", "2"]),
        (&[2, 2, 3], &["0", "1", "2"]),
        (&[2, 2, 4], &["0", "1", "2"]),
        (&[2, 3, 3], &["0", "1", "2"]),
        (&[2, 3, 4], &["0", "1", "2"]),
        (&[2, 2, 2], &["0", "2", "3"]),
    ];
    set.iter()
        .map(|(w, l)| Instance::new(w.to_vec(), lambdas(Q, l), Q).expect("valid instance"))
        .collect()
}

/// Dimension-level congruence: the summand dimension matrix S carries the
/// squid's simple-basis Euler form to the target's projective-basis form.
fn summand_congruence(name: &str, inst: &Instance, summands: &[Representation], target: &DimPresentation) -> CheckResult {
    let s = dimension_matrix(summands);
    let g = match gram_simple_basis(&cartan_squid(&inst.symbol())) {
        Ok(g) => g,
        Err(e) => return CheckResult::error(name, e),
    };
    match congruence_check(&g, &target.projective_gram(), &s) {
        Ok(pass) => CheckResult::new(name, pass, json!({ "instance": inst.to_string(), "dimension_matrix": s.to_json() })),
        Err(e) => CheckResult::error(name, e),
    }
}

fn end_dims_check(name: &str, inst: &Instance, alg: &BoundQuiverAlgebra, t: &[Representation], want: &Matrix) -> CheckResult {
    let got = end_dims(alg, t);
    CheckResult::new(
        name,
        &got == want,
        json!({ "instance": inst.to_string(), "end_dims": got.to_json(), "cartan": want.to_json() }),
    )
}

/// Tilting towards the Coxeter-Dynkin algebra B.
pub fn tilt_cd(inst: &Instance) -> Vec<CheckResult> {
    let names = ["tilt_cd.is_tilting", "tilt_cd.end_dims", "tilt_cd.ext2_sf_sg", "tilt_cd.congruence"];
    let (alg, t) = match build_tilting_apr(inst) {
        Ok(x) => x,
        Err(e) => return names.iter().map(|n| CheckResult::error(*n, &e)).collect(),
    };
    let b = match cd_algebra(inst) {
        Ok(b) => b,
        Err(e) => return names.iter().map(|n| CheckResult::error(*n, &e)).collect(),
    };
    let report = tilting_report(&alg, &t);
    let (f, g) = (b.vertex("F").unwrap(), b.vertex("G").unwrap());
    let ext2 = ext_dim(&b, &Representation::simple(&b, f), &Representation::simple(&b, g), 2);
    let target = cartan_cd(&inst.symbol());
    vec![
        CheckResult::new(names[0], report.holds(), json!({ "instance": inst.to_string(), "report": report })),
        end_dims_check(names[1], inst, &alg, &t, &b.cartan()),
        CheckResult::new(names[2], ext2 == 2, json!({ "instance": inst.to_string(), "dim": ext2 })),
        match target {
            Ok(p) => summand_congruence(names[3], inst, &t, &p),
            Err(e) => CheckResult::error(names[3], e),
        },
    ]
}

/// Tilting towards the canonical algebra C. The module is also checked for
/// the dual (cotilting) conditions.
pub fn tilt_canonical(inst: &Instance) -> Vec<CheckResult> {
    let names = [
        "tilt_canonical.is_tilting",
        "tilt_canonical.is_cotilting",
        "tilt_canonical.end_dims",
        "tilt_canonical.congruence",
    ];
    let (alg, t) = match build_tilting_canonical(inst) {
        Ok(x) => x,
        Err(e) => return names.iter().map(|n| CheckResult::error(*n, &e)).collect(),
    };
    let c = match crate::boundquiver::constructors::canonical_algebra(inst) {
        Ok(c) => c,
        Err(e) => return names.iter().map(|n| CheckResult::error(*n, &e)).collect(),
    };
    let tr = tilting_report(&alg, &t);
    let co = cotilting_report(&alg, &t);
    vec![
        CheckResult::new(names[0], tr.holds(), json!({ "instance": inst.to_string(), "report": tr })),
        CheckResult::new(names[1], co.holds(), json!({ "instance": inst.to_string(), "report": co })),
        end_dims_check(names[2], inst, &alg, &t, &c.algebra.cartan()),
        summand_congruence(names[3], inst, &t, &cartan_canonical(&inst.symbol())),
    ]
}

/// Reflection of N at F towards B, and the arm-reflection chain towards C.
pub fn reflections(inst: &Instance) -> Vec<CheckResult> {
    let cd = match reflect_to_cd(inst) {
        Ok(r) => CheckResult::new("reflect.cd", r.holds(inst.t()), json!({ "instance": inst.to_string(), "result": r })),
        Err(e) => CheckResult::error("reflect.cd", e),
    };
    let can = match reflect_to_canonical(inst) {
        Ok(r) => CheckResult::new(
            "reflect.canonical",
            r.holds(),
            json!({ "instance": inst.to_string(), "table": r.table_holds(), "result": r }),
        ),
        Err(e) => CheckResult::error("reflect.canonical", e),
    };
    vec![cd, can]
}

/// The real/complex tame bimodule with one exceptional point of weight 2.
pub fn real_complex_symbol() -> CheckResult {
    let name = "symbol.real_complex";
    match symbol_from_data(RawEpsilon::One, &[PointDims::new(1, 2, 1, 2)], &[2]) {
        Ok(s) => CheckResult::new(
            name,
            s.delta() == -2 && s.rep_type() == RepType::Domestic,
            json!({ "symbol": s.to_string(), "delta": s.delta(), "rep_type": s.rep_type().to_string() }),
        ),
        Err(e) => CheckResult::error(name, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_counts() {
        assert_eq!(condition_instances().len(), 3 * 5 + 9 * 10 + 27 * 10 + 81 * 5);
        assert_eq!(tilting_instances().len(), 12);
    }

    #[test]
    fn euler_table_d4_tilde() {
        let s = Symbol::simply_laced(&[2, 2]).unwrap();
        assert!(!euler_table_check(&s, false).pass);
        assert!(euler_table_check(&s, true).pass);
    }

    #[test]
    fn small_symbols() {
        for s in crate::lattice::enumerate_symbols(5, 2) {
            assert!(lattice_axioms(&s).pass, "{s}");
            assert!(gram_displays(&s).pass, "{s}");
            assert!(type_table(&s).pass, "{s}");
            assert!(all_pass(&symbol_congruences(&s)), "{s}");
        }
        assert!(real_complex_symbol().pass);
    }
}

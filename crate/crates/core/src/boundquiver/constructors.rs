//! Squid, Coxeter-Dynkin and canonical algebras of simply-laced instances.

use std::fmt;

use serde_json::{json, Value};

use super::{BoundQuiverAlgebra, BoundQuiverError, Quiver, Relation};
use crate::exactalg::{Field, Matrix, Scalar};
use crate::lattice::Symbol;
use crate::speciesdims::{arm_label, canonical_arm_label};

/// A point (1:λ) of the projective line, or (0:1) for λ = ∞.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lambda {
    Finite(Scalar),
    Infinity,
}

impl Lambda {
    pub fn parse(field: Field, s: &str) -> Result<Lambda, BoundQuiverError> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(Lambda::Infinity),
            t => field.parse(t).map(Lambda::Finite).map_err(|e| BoundQuiverError::Parse(e.to_string())),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Lambda::Infinity)
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Finite(x) => write!(f, "{x}"),
            Lambda::Infinity => write!(f, "inf"),
        }
    }
}

fn check_distinct(points: &[Lambda]) -> Result<(), BoundQuiverError> {
    for i in 0..points.len() {
        if points[..i].contains(&points[i]) {
            return Err(BoundQuiverError::DuplicatePoints);
        }
    }
    Ok(())
}

/// A simply-laced instance: weights, points and the base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub weights: Vec<u32>,
    pub lambdas: Vec<Lambda>,
    pub field: Field,
}

pub fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rational => json!("Q"),
        Field::Prime(p) => json!({"Fp": p}),
    }
}

pub fn field_from_json(v: &Value) -> Result<Field, BoundQuiverError> {
    let bad = || BoundQuiverError::Parse(format!("invalid field {v}"));
    match v {
        Value::Null => Ok(Field::Rational),
        Value::String(s) if s == "Q" => Ok(Field::Rational),
        Value::String(s) => match s.strip_prefix("Fp:") {
            Some(p) => Field::prime(p.parse().map_err(|_| bad())?).map_err(BoundQuiverError::from),
            None => Err(bad()),
        },
        Value::Object(o) => {
            let p = o.get("Fp").and_then(Value::as_u64).ok_or_else(bad)?;
            Field::prime(p).map_err(BoundQuiverError::from)
        }
        _ => Err(bad()),
    }
}

impl Instance {
    pub fn new(weights: Vec<u32>, lambdas: Vec<Lambda>, field: Field) -> Result<Instance, BoundQuiverError> {
        if weights.len() != lambdas.len() {
            return Err(BoundQuiverError::Parse("weights and lambdas differ in length".into()));
        }
        if weights.is_empty() {
            return Err(BoundQuiverError::Parse("at least one point is required".into()));
        }
        if weights.iter().any(|&p| p < 2) {
            return Err(BoundQuiverError::Parse("weights must be at least 2".into()));
        }
        if lambdas.iter().any(|l| matches!(l, Lambda::Finite(x) if x.field() != field)) {
            return Err(BoundQuiverError::Parse("point outside the base field".into()));
        }
        check_distinct(&lambdas)?;
        Ok(Instance { weights, lambdas, field })
    }

    pub fn t(&self) -> usize {
        self.weights.len()
    }

    pub fn symbol(&self) -> Symbol {
        Symbol::simply_laced(&self.weights).expect("weights are validated")
    }

    /// Parse {"weights":[..], "lambdas":[..], "field": "Q" | {"Fp": p}}.
    pub fn from_json(v: &Value) -> Result<Instance, BoundQuiverError> {
        let bad = |m: &str| BoundQuiverError::Parse(m.to_string());
        let field = field_from_json(v.get("field").unwrap_or(&Value::Null))?;
        let weights = v["weights"]
            .as_array()
            .ok_or_else(|| bad("missing \"weights\" array"))?
            .iter()
            .map(|w| w.as_u64().map(|w| w as u32).ok_or_else(|| bad("weights must be integers")))
            .collect::<Result<Vec<_>, _>>()?;
        let lambdas = v["lambdas"]
            .as_array()
            .ok_or_else(|| bad("missing \"lambdas\" array"))?
            .iter()
            .map(|l| match l {
                Value::String(s) => Lambda::parse(field, s),
                Value::Number(n) => Lambda::parse(field, &n.to_string()),
                _ => Err(bad("lambdas must be strings or numbers")),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Instance::new(weights, lambdas, field)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weights": self.weights,
            "lambdas": self.lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "field": field_to_json(self.field),
        })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        let l: Vec<String> = self.lambdas.iter().map(Lambda::to_string).collect();
        write!(f, "weights ({}) points ({}) over {}", w.join(","), l.join(","), self.field)
    }
}

fn arm_arrow(i: usize, j: usize) -> String {
    format!("h{i}_{j}")
}

/// Vertices e_i(p_i−1)…e_i(1) per arm, then F and G; arrows h{i}_{j}: e_i(j+1) → e_i(j),
/// a{i}: e_i(1) → F and x, y: F → G, with a_i(x + λ_i y) = 0 (a_i y = 0 for ∞).
pub fn squid_algebra(inst: &Instance) -> Result<BoundQuiverAlgebra, BoundQuiverError> {
    check_distinct(&inst.lambdas)?;
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    for (i, &p) in inst.weights.iter().enumerate() {
        for j in (1..p as usize).rev() {
            vertices.push(arm_label(i + 1, j));
            if j > 1 {
                arrows.push((arm_arrow(i + 1, j - 1), arm_label(i + 1, j), arm_label(i + 1, j - 1)));
            }
        }
        arrows.push((format!("a{}", i + 1), arm_label(i + 1, 1), "F".into()));
    }
    vertices.push("F".into());
    vertices.push("G".into());
    arrows.push(("x".into(), "F".into(), "G".into()));
    arrows.push(("y".into(), "F".into(), "G".into()));
    let q = Quiver::new(vertices, arrows)?;
    let (x, y) = (q.arrow("x")?, q.arrow("y")?);
    let f = inst.field;
    let mut rels = Vec::new();
    for (i, l) in inst.lambdas.iter().enumerate() {
        let a = q.arrow(&format!("a{}", i + 1))?;
        rels.push(match l {
            Lambda::Finite(c) => Relation::new(vec![(f.one(), vec![a, x]), (c.clone(), vec![a, y])]),
            Lambda::Infinity => Relation::new(vec![(f.one(), vec![a, y])]),
        });
    }
    BoundQuiverAlgebra::new(q, rels, f)
}

/// Vertices F, the arms, G; arrows a{i}: F → e_i(1), b{i}: e_i(1) → G and the
/// arm arrows, with Σ a_i b_i = 0 and Σ λ_i a_i b_i = 0.
pub fn cd_algebra(inst: &Instance) -> Result<BoundQuiverAlgebra, BoundQuiverError> {
    if inst.lambdas.iter().any(Lambda::is_infinite) {
        return Err(BoundQuiverError::InfinitePointUnsupported);
    }
    check_distinct(&inst.lambdas)?;
    let mut vertices = vec!["F".to_string()];
    let mut arrows = Vec::new();
    for (i, &p) in inst.weights.iter().enumerate() {
        for j in (1..p as usize).rev() {
            vertices.push(arm_label(i + 1, j));
            if j > 1 {
                arrows.push((arm_arrow(i + 1, j - 1), arm_label(i + 1, j), arm_label(i + 1, j - 1)));
            }
        }
        arrows.push((format!("a{}", i + 1), "F".into(), arm_label(i + 1, 1)));
        arrows.push((format!("b{}", i + 1), arm_label(i + 1, 1), "G".into()));
    }
    vertices.push("G".into());
    let q = Quiver::new(vertices, arrows)?;
    let f = inst.field;
    let mut sum = Vec::new();
    let mut weighted = Vec::new();
    for (i, l) in inst.lambdas.iter().enumerate() {
        let (a, b) = (q.arrow(&format!("a{}", i + 1))?, q.arrow(&format!("b{}", i + 1))?);
        let Lambda::Finite(c) = l else { unreachable!() };
        sum.push((f.one(), vec![a, b]));
        weighted.push((c.clone(), vec![a, b]));
    }
    BoundQuiverAlgebra::new(q, vec![Relation::new(sum), Relation::new(weighted)], f)
}

/// The Möbius transformation sending the first two points to ∞ and 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub first: Lambda,
    pub second: Lambda,
}

impl Normalization {
    pub fn apply(&self, z: &Lambda) -> Lambda {
        let field = match (&self.first, &self.second, z) {
            (Lambda::Finite(a), _, _) | (_, Lambda::Finite(a), _) => a.field(),
            _ => unreachable!("points are distinct"),
        };
        match (&self.first, &self.second) {
            // z − λ₂
            (Lambda::Infinity, Lambda::Finite(b)) => match z {
                Lambda::Infinity => Lambda::Infinity,
                Lambda::Finite(z) => Lambda::Finite(z - b),
            },
            // 1 / (z − λ₁)
            (Lambda::Finite(a), Lambda::Infinity) => match z {
                Lambda::Infinity => Lambda::Finite(field.zero()),
                Lambda::Finite(z) if z == a => Lambda::Infinity,
                Lambda::Finite(z) => Lambda::Finite((z - a).inv()),
            },
            // (z − λ₂) / (z − λ₁)
            (Lambda::Finite(a), Lambda::Finite(b)) => match z {
                Lambda::Infinity => Lambda::Finite(field.one()),
                Lambda::Finite(z) if z == a => Lambda::Infinity,
                Lambda::Finite(z) => Lambda::Finite(&(z - b) / &(z - a)),
            },
            (Lambda::Infinity, Lambda::Infinity) => unreachable!("points are distinct"),
        }
    }

    pub fn describe(&self) -> String {
        match (&self.first, &self.second) {
            (Lambda::Infinity, Lambda::Finite(b)) => format!("z -> z - ({b})"),
            (Lambda::Finite(a), Lambda::Infinity) => format!("z -> 1/(z - ({a}))"),
            (Lambda::Finite(a), Lambda::Finite(b)) => format!("z -> (z - ({b}))/(z - ({a}))"),
            _ => unreachable!(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalAlgebra {
    pub algebra: BoundQuiverAlgebra,
    pub normalization: Normalization,
    /// Images of all points; the first two are ∞ and 0.
    pub normalized: Vec<Lambda>,
}

/// Vertices F, c_i(1)…c_i(p_i−1) per arm, G; arrows u{i}: F → c_i(1),
/// h{i}_{j}: c_i(j) → c_i(j+1), v{i}: c_i(p_i−1) → G. After normalizing the
/// points to ∞, 0, μ_3, …, the arm paths satisfy P_i = P_2 + μ_i P_1 for i ≥ 3.
pub fn canonical_algebra(inst: &Instance) -> Result<CanonicalAlgebra, BoundQuiverError> {
    if inst.t() < 2 {
        return Err(BoundQuiverError::TooFewPoints);
    }
    check_distinct(&inst.lambdas)?;
    let normalization = Normalization { first: inst.lambdas[0].clone(), second: inst.lambdas[1].clone() };
    let normalized: Vec<Lambda> = inst.lambdas.iter().map(|z| normalization.apply(z)).collect();

    let mut vertices = vec!["F".to_string()];
    let mut arrows = Vec::new();
    for (i, &p) in inst.weights.iter().enumerate() {
        let top = p as usize - 1;
        for j in 1..=top {
            vertices.push(canonical_arm_label(i + 1, j));
            if j < top {
                arrows.push((arm_arrow(i + 1, j), canonical_arm_label(i + 1, j), canonical_arm_label(i + 1, j + 1)));
            }
        }
        arrows.push((format!("u{}", i + 1), "F".into(), canonical_arm_label(i + 1, 1)));
        arrows.push((format!("v{}", i + 1), canonical_arm_label(i + 1, top), "G".into()));
    }
    vertices.push("G".into());
    let q = Quiver::new(vertices, arrows)?;
    let arm_path = |i: usize| -> Result<Vec<usize>, BoundQuiverError> {
        let top = inst.weights[i] as usize - 1;
        let mut p = vec![q.arrow(&format!("u{}", i + 1))?];
        for j in 1..top {
            p.push(q.arrow(&arm_arrow(i + 1, j))?);
        }
        p.push(q.arrow(&format!("v{}", i + 1))?);
        Ok(p)
    };
    let f = inst.field;
    let mut rels = Vec::new();
    for (i, mu) in normalized.iter().enumerate().skip(2) {
        let Lambda::Finite(mu) = mu else { unreachable!("only the first point maps to ∞") };
        rels.push(Relation::new(vec![
            (f.one(), arm_path(i)?),
            (-f.one(), arm_path(1)?),
            (-mu.clone(), arm_path(0)?),
        ]));
    }
    let algebra = BoundQuiverAlgebra::new(q, rels, f)?;
    Ok(CanonicalAlgebra { algebra, normalization, normalized })
}

/// Row i is (1, λ_i), or (0, 1) for ∞.
pub fn theta0_matrix(field: Field, points: &[Lambda]) -> Matrix {
    let rows = points
        .iter()
        .map(|l| match l {
            Lambda::Finite(c) => vec![field.one(), c.clone()],
            Lambda::Infinity => vec![field.zero(), field.one()],
        })
        .collect();
    Matrix::from_rows(field, 2, rows)
}

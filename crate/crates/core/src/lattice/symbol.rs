//! Symbols (p_i, e_i, f_i, d_i | ε) and their numerical invariants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LatticeError;

/// One arm of a symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arm {
    pub p: u32,
    pub e: u32,
    pub f: u32,
}

impl Arm {
    pub fn new(p: u32, e: u32, f: u32) -> Arm {
        Arm { p, e, f }
    }

    pub fn d(&self) -> u32 {
        self.e * self.f
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Symbol {
    pub epsilon: u32,
    pub arms: Vec<Arm>,
}

/// Equality ignores arm order.
impl PartialEq for Symbol {
    fn eq(&self, other: &Symbol) -> bool {
        self.epsilon == other.epsilon && self.sorted_arms() == other.sorted_arms()
    }
}

impl Eq for Symbol {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepType {
    Domestic,
    Tubular,
    Wild,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepType::Domestic => "domestic",
            RepType::Tubular => "tubular",
            RepType::Wild => "wild",
        };
        f.write_str(s)
    }
}

impl Symbol {
    pub fn new(epsilon: u32, arms: Vec<Arm>) -> Result<Symbol, LatticeError> {
        let s = Symbol { epsilon, arms };
        s.validate()?;
        Ok(s)
    }

    /// Simply-laced symbol: all e_i = f_i = 1, ε = 1.
    pub fn simply_laced(weights: &[u32]) -> Result<Symbol, LatticeError> {
        Symbol::new(1, weights.iter().map(|&p| Arm::new(p, 1, 1)).collect())
    }

    pub fn validate(&self) -> Result<(), LatticeError> {
        let bad = |m: String| Err(LatticeError::InvalidSymbol(m));
        if self.epsilon != 1 && self.epsilon != 2 {
            return bad(format!("epsilon must be 1 or 2, got {}", self.epsilon));
        }
        if self.arms.is_empty() {
            return bad("at least one arm is required".into());
        }
        for a in &self.arms {
            if a.p < 2 || a.e < 1 || a.f < 1 {
                return bad(format!("arm {a:?} needs p >= 2, e >= 1, f >= 1"));
            }
        }
        Ok(())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Symbol, LatticeError> {
        let s: Symbol = serde_json::from_value(v.clone())
            .map_err(|e| LatticeError::InvalidSymbol(e.to_string()))?;
        if let Some(arms) = v["arms"].as_array() {
            for (a, raw) in s.arms.iter().zip(arms) {
                if let Some(d) = raw.get("d") {
                    if d.as_u64() != Some(a.d() as u64) {
                        return Err(LatticeError::InvalidSymbol(format!(
                            "d must equal e*f for arm {a:?}"
                        )));
                    }
                }
            }
        }
        s.validate()?;
        Ok(s)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arms: Vec<_> = self
            .arms
            .iter()
            .map(|a| serde_json::json!({"p": a.p, "e": a.e, "f": a.f, "d": a.d()}))
            .collect();
        serde_json::json!({"epsilon": self.epsilon, "arms": arms})
    }

    pub fn t(&self) -> usize {
        self.arms.len()
    }

    pub fn sorted_arms(&self) -> Vec<Arm> {
        let mut a = self.arms.clone();
        a.sort();
        a
    }

    /// Lattice rank 2 + Σ(p_i − 1).
    pub fn rank(&self) -> usize {
        2 + self.arms.iter().map(|a| a.p as usize - 1).sum::<usize>()
    }

    pub fn kappa(&self) -> u64 {
        self.arms.iter().fold(1u64, |acc, a| {
            let e = a.e as u64;
            acc.lcm(&(e / e.gcd(&(self.epsilon as u64 * a.f as u64))))
        })
    }

    /// δ = p·(Σ d_i(1 − 1/p_i) − 2/ε) with p = lcm of the weights.
    pub fn delta(&self) -> i64 {
        let p = self.arms.iter().fold(1u64, |acc, a| acc.lcm(&(a.p as u64)));
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        let mut sum = BigRational::zero();
        for a in &self.arms {
            sum += r(a.d() as i64 * (a.p as i64 - 1), a.p as i64);
        }
        sum -= r(2, self.epsilon as i64);
        let delta = sum * r(p as i64, 1);
        assert!(delta.is_integer(), "delta must be integral");
        delta.to_integer().to_i64().expect("delta fits in i64")
    }

    pub fn rep_type(&self) -> RepType {
        match self.delta() {
            d if d < 0 => RepType::Domestic,
            0 => RepType::Tubular,
            _ => RepType::Wild,
        }
    }

    /// The numerical form of condition (6): ε·Σ d_i ≥ 2.
    pub fn condition6(&self) -> bool {
        self.epsilon * self.arms.iter().map(Arm::d).sum::<u32>() >= 2
    }

    pub fn is_simply_laced(&self) -> bool {
        self.epsilon == 1 && self.arms.iter().all(|a| a.e == 1 && a.f == 1)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = |g: fn(&Arm) -> u32| {
            self.arms.iter().map(|a| g(a).to_string()).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "(p={} d={} f={} | eps={})",
            col(|a| a.p),
            col(Arm::d),
            col(|a| a.f),
            self.epsilon
        )
    }
}

/// The base ε of the input data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RawEpsilon {
    Half,
    One,
    Two,
}

impl RawEpsilon {
    fn as_rational(self) -> BigRational {
        match self {
            RawEpsilon::Half => BigRational::new(1.into(), 2.into()),
            RawEpsilon::One => BigRational::from_integer(1.into()),
            RawEpsilon::Two => BigRational::from_integer(2.into()),
        }
    }

    pub fn parse(s: &str) -> Option<RawEpsilon> {
        match s.trim() {
            "1/2" | "0.5" => Some(RawEpsilon::Half),
            "1" => Some(RawEpsilon::One),
            "2" => Some(RawEpsilon::Two),
            _ => None,
        }
    }
}

/// Dimension data of one exceptional point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointDims {
    pub dim_du: u32,
    pub dim_uf: u32,
    pub dim_dv: u32,
    pub dim_vg: u32,
}

impl PointDims {
    pub fn new(dim_du: u32, dim_uf: u32, dim_dv: u32, dim_vg: u32) -> PointDims {
        PointDims { dim_du, dim_uf, dim_dv, dim_vg }
    }
}

/// Extract the symbol from dimension data of the input.
pub fn symbol_from_data(
    eps: RawEpsilon,
    points: &[PointDims],
    weights: &[u32],
) -> Result<Symbol, LatticeError> {
    if points.len() != weights.len() {
        return Err(LatticeError::InconsistentDimensions(format!(
            "{} points but {} weights",
            points.len(),
            weights.len()
        )));
    }
    let e = eps.as_rational();
    let int = |n: u32| BigRational::from_integer(BigInt::from(n));
    let mut arms = Vec::new();
    for (i, (pt, &p)) in points.iter().zip(weights).enumerate() {
        if int(pt.dim_uf) != &e * int(pt.dim_vg) || int(pt.dim_dv) != &e * int(pt.dim_du) {
            return Err(LatticeError::InconsistentDimensions(format!(
                "point {}: expected dimUF = eps*dimVG and dimDV = eps*dimDU, got {pt:?}",
                i + 1
            )));
        }
        let arm = match eps {
            RawEpsilon::One | RawEpsilon::Two => Arm::new(p, pt.dim_du, pt.dim_vg),
            RawEpsilon::Half => Arm::new(p, pt.dim_dv, pt.dim_uf),
        };
        arms.push(arm);
    }
    let epsilon = match eps {
        RawEpsilon::One => 1,
        RawEpsilon::Two | RawEpsilon::Half => 2,
    };
    Symbol::new(epsilon, arms)
}

/// All symbols up to arm reordering with rank ≤ `max_rank` and d_i ≤ `max_d`.
pub fn enumerate_symbols(max_rank: usize, max_d: u32) -> Vec<Symbol> {
    if max_rank < 3 || max_d < 1 {
        return Vec::new();
    }
    let budget = max_rank - 2;
    let mut kinds = Vec::new();
    for p in 2..=(budget as u32 + 1) {
        for e in 1..=max_d {
            for f in 1..=max_d / e {
                kinds.push(Arm::new(p, e, f));
            }
        }
    }
    kinds.sort();
    let mut multisets = Vec::new();
    let mut current = Vec::new();
    grow(&kinds, 0, budget, &mut current, &mut multisets);
    let mut out = Vec::new();
    for epsilon in [1, 2] {
        for arms in &multisets {
            out.push(Symbol { epsilon, arms: arms.clone() });
        }
    }
    out
}

fn grow(kinds: &[Arm], start: usize, budget: usize, cur: &mut Vec<Arm>, out: &mut Vec<Vec<Arm>>) {
    if !cur.is_empty() {
        out.push(cur.clone());
    }
    for k in start..kinds.len() {
        let cost = kinds[k].p as usize - 1;
        if cost <= budget {
            cur.push(kinds[k]);
            grow(kinds, k, budget - cost, cur, out);
            cur.pop();
        }
    }
}

//! The equivalent conditions on a squid algebra, the module N = e_0 A e_G,
//! and the two tilting modules over the squid.

use serde::Serialize;

use super::ar::{has_injective_summand, tau, tau_inverse};
use super::constructors::{squid_algebra, theta0_matrix, Instance};
use super::homological::{hom_dim, injective, projective, projective_dimension};
use super::{BoundQuiverAlgebra, BoundQuiverError, Representation};
use crate::speciesdims::{arm_label, check_condition6};

/// Per-condition results; `c4` is the Hom-vanishing form of `c5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conditions {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    pub c4: bool,
    pub c5: bool,
    pub c6: bool,
    /// pd of τ⁻¹(top e_F A), when defined.
    pub pd_x: Option<usize>,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.c1 && self.c2 && self.c3 && self.c4 && self.c5 && self.c6
    }

    pub fn none(&self) -> bool {
        !(self.c1 || self.c2 || self.c3 || self.c4 || self.c5 || self.c6)
    }

    pub fn agree(&self) -> bool {
        self.all() || self.none()
    }
}

/// Vertices of the squid other than G.
pub fn a0_vertices(alg: &BoundQuiverAlgebra) -> Vec<usize> {
    let g = alg.vertex("G").expect("squid has G");
    (0..alg.vertex_count()).filter(|&v| v != g).collect()
}

/// N = e_0 A e_G as a representation of A_0^op: N_w = e_w A e_G, with each
/// reversed arrow acting by left multiplication.
pub fn n_module(alg: &BoundQuiverAlgebra) -> (BoundQuiverAlgebra, Representation) {
    let g = alg.vertex("G").expect("squid has G");
    let keep = a0_vertices(alg);
    let a0 = alg.restrict(&keep).expect("full subquiver of a valid algebra");
    let a0op = (*a0.opposite()).clone();
    let dims = keep.iter().map(|&w| alg.dim(w, g)).collect();
    let maps = a0op
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            let big = alg.quiver().arrow(&a.name).expect("same arrow names");
            alg.left_mul_arrow(big, g)
        })
        .collect();
    (a0op, Representation { field: alg.field(), dims, maps })
}

pub fn x_module(alg: &BoundQuiverAlgebra) -> Result<Representation, BoundQuiverError> {
    let f = alg.vertex("F")?;
    tau_inverse(alg, &Representation::simple(alg, f))
}

pub fn check_conditions(inst: &Instance) -> Result<Conditions, BoundQuiverError> {
    let alg = squid_algebra(inst)?;
    let f = alg.vertex("F")?;
    let top = Representation::simple(&alg, f);

    let c1 = theta0_matrix(inst.field, &inst.lambdas).rank() == 2;

    let pd_x = x_module(&alg).ok().and_then(|x| projective_dimension(&alg, &x));
    let c2 = pd_x == Some(1);

    let c3 = (0..alg.vertex_count()).all(|v| hom_dim(&alg, &injective(&alg, v), &top) == 0);

    let (a0op, n) = n_module(&alg);
    let f0 = a0op.vertex("F")?;
    let c4 = hom_dim(&a0op, &Representation::simple(&a0op, f0), &n) == 0;
    let c5 = !has_injective_summand(&a0op, &n, f0);

    let c6 = check_condition6(&vec![(1, 1); inst.t()]);
    Ok(Conditions { c1, c2, c3, c4, c5, c6, pd_x })
}

/// Summands of the tilting module towards the Coxeter-Dynkin algebra, listed
/// in its vertex order: X at F, e_i(j)A at each arm vertex, e_G A at G.
pub fn build_tilting_apr(inst: &Instance) -> Result<(BoundQuiverAlgebra, Vec<Representation>), BoundQuiverError> {
    let c = check_conditions(inst)?;
    if !c.all() {
        return Err(BoundQuiverError::ConditionsViolated(format!("{c:?}")));
    }
    let alg = squid_algebra(inst)?;
    let mut t = vec![x_module(&alg)?];
    for (i, &p) in inst.weights.iter().enumerate() {
        for j in (1..p as usize).rev() {
            t.push(projective(&alg, alg.vertex(&arm_label(i + 1, j))?));
        }
    }
    t.push(projective(&alg, alg.vertex("G")?));
    Ok((alg, t))
}

/// τ^k applied to M.
pub fn tau_power(alg: &BoundQuiverAlgebra, m: &Representation, k: usize) -> Result<Representation, BoundQuiverError> {
    (0..k).try_fold(m.clone(), |acc, _| tau(alg, &acc))
}

/// Summands of the tilting module towards the canonical algebra, listed in
/// its vertex order: D(Ae_F), then τ^j D(A e_i(j)) at c_i(j), then D(Ae_G).
pub fn build_tilting_canonical(inst: &Instance) -> Result<(BoundQuiverAlgebra, Vec<Representation>), BoundQuiverError> {
    if inst.t() < 2 {
        return Err(BoundQuiverError::TooFewPoints);
    }
    let c = check_conditions(inst)?;
    if !c.all() {
        return Err(BoundQuiverError::ConditionsViolated(format!("{c:?}")));
    }
    let alg = squid_algebra(inst)?;
    let mut t = vec![injective(&alg, alg.vertex("F")?)];
    for (i, &p) in inst.weights.iter().enumerate() {
        for j in 1..p as usize {
            let inj = injective(&alg, alg.vertex(&arm_label(i + 1, j))?);
            t.push(tau_power(&alg, &inj, j)?);
        }
    }
    t.push(injective(&alg, alg.vertex("G")?));
    Ok((alg, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundquiver::constructors::{canonical_algebra, cd_algebra, Lambda};
    use crate::boundquiver::homological::ext_dim;
    use crate::boundquiver::tilting::{end_dims, is_tilting};
    use crate::exactalg::Field;

    fn inst(w: &[u32], l: &[&str]) -> Instance {
        let f = Field::Rational;
        Instance::new(w.to_vec(), l.iter().map(|s| Lambda::parse(f, s).unwrap()).collect(), f).unwrap()
    }

    #[test]
    fn conditions_hold_or_fail_together() {
        let c = check_conditions(&inst(&[2, 2], &["0", "1"])).unwrap();
        assert!(c.all());
        assert_eq!(c.pd_x, Some(1));
        for w in [2, 3] {
            assert!(check_conditions(&inst(&[w], &["0"])).unwrap().none());
        }
    }

    #[test]
    fn x_module_dims() {
        let alg = squid_algebra(&inst(&[2, 2], &["0", "1"])).unwrap();
        assert_eq!(x_module(&alg).unwrap().dims, vec![1, 1, 1, 0]);
    }

    #[test]
    fn apr_module_tilts_to_cd() {
        for (w, l) in [(&[2, 2][..], &["0", "1"][..]), (&[2, 3], &["0", "1"]), (&[2, 2, 2], &["0", "1", "2"])] {
            let i = inst(w, l);
            let (alg, t) = build_tilting_apr(&i).unwrap();
            assert_eq!(t.len(), alg.vertex_count());
            assert!(is_tilting(&alg, &t));
            let b = cd_algebra(&i).unwrap();
            let e = end_dims(&alg, &t);
            assert_eq!(e, b.cartan());
            let (f, g) = (b.vertex("F").unwrap(), b.vertex("G").unwrap());
            assert_eq!(e.get(f, g).to_i64(), Some(w.len() as i64 - 2));
        }
    }

    #[test]
    fn ext2_between_simples_of_cd() {
        let b = cd_algebra(&inst(&[2, 2], &["0", "1"])).unwrap();
        let (f, g) = (b.vertex("F").unwrap(), b.vertex("G").unwrap());
        assert_eq!(ext_dim(&b, &Representation::simple(&b, f), &Representation::simple(&b, g), 2), 2);
    }

    #[test]
    fn canonical_summands_have_canonical_endomorphisms() {
        let i = inst(&[2, 2], &["0", "1"]);
        let (alg, t) = build_tilting_canonical(&i).unwrap();
        assert!(is_tilting(&alg, &t));
        let e = end_dims(&alg, &t);
        assert_eq!(e, canonical_algebra(&i).unwrap().algebra.cartan());
        assert_eq!(e.get(0, t.len() - 1).to_i64(), Some(2));
        assert_eq!(build_tilting_canonical(&inst(&[2], &["0"])).err(), Some(BoundQuiverError::TooFewPoints));
    }

    #[test]
    fn replacing_x_by_the_simple_breaks_tilting() {
        let i = inst(&[2, 2], &["0", "1"]);
        let (alg, mut t) = build_tilting_apr(&i).unwrap();
        let f = alg.vertex("F").unwrap();
        let s = Representation::simple(&alg, f);
        assert_eq!(projective_dimension(&alg, &s), Some(1));
        let g = projective(&alg, alg.vertex("G").unwrap());
        assert_ne!(ext_dim(&alg, &s, &g, 1), 0);
        t[0] = s;
        assert!(!is_tilting(&alg, &t));
    }
}

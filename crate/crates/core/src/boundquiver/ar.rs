//! Auslander-Reiten translates through the transpose.

use super::homological::{
    cokernel, hom_space, injective, projective, projective_resolution, ProjMap, ProjectiveSum,
};
use super::{BoundQuiverAlgebra, BoundQuiverError, Representation};

/// Minimal presentation P_1 → P_0 → M → 0.
pub fn minimal_presentation(alg: &BoundQuiverAlgebra, m: &Representation) -> ProjMap {
    let res = projective_resolution(alg, m, 1);
    match res.differentials.into_iter().next() {
        Some(d) => d,
        None => ProjMap { dom: ProjectiveSum { tops: vec![] }, cod: res.terms[0].clone(), images: vec![] },
    }
}

/// Tr M as a representation of the opposite algebra.
pub fn transpose(alg: &BoundQuiverAlgebra, m: &Representation) -> Representation {
    let op = alg.opposite();
    let t = minimal_presentation(alg, m).transpose(alg);
    let f = t.morphism(&op);
    cokernel(&op, &t.cod.representation(&op), &f).0
}

pub fn has_projective_summand(alg: &BoundQuiverAlgebra, m: &Representation, v: usize) -> bool {
    hom_space(alg, m, &projective(alg, v)).iter().any(|g| !g.blocks[v].is_zero())
}

pub fn has_injective_summand(alg: &BoundQuiverAlgebra, m: &Representation, v: usize) -> bool {
    hom_space(alg, &injective(alg, v), m).iter().any(|f| !f.blocks[v].is_zero())
}

pub fn is_projective_free(alg: &BoundQuiverAlgebra, m: &Representation) -> bool {
    (0..alg.vertex_count()).all(|v| !has_projective_summand(alg, m, v))
}

pub fn is_injective_free(alg: &BoundQuiverAlgebra, m: &Representation) -> bool {
    (0..alg.vertex_count()).all(|v| !has_injective_summand(alg, m, v))
}

/// τM = D Tr M, for M without projective summands.
pub fn tau(alg: &BoundQuiverAlgebra, m: &Representation) -> Result<Representation, BoundQuiverError> {
    m.check(alg)?;
    if !is_projective_free(alg, m) {
        return Err(BoundQuiverError::ProjectiveSummand);
    }
    Ok(transpose(alg, m).dual())
}

/// τ⁻¹M = Tr D M, for M without injective summands.
pub fn tau_inverse(alg: &BoundQuiverAlgebra, m: &Representation) -> Result<Representation, BoundQuiverError> {
    m.check(alg)?;
    if !is_injective_free(alg, m) {
        return Err(BoundQuiverError::InjectiveSummand);
    }
    let op = alg.opposite();
    Ok(transpose(&op, &m.dual()))
}

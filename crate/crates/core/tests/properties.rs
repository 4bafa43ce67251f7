use cda_core::boundquiver::ar::has_projective_summand;
use cda_core::boundquiver::constructors::{cd_algebra, squid_algebra, Instance, Lambda};
use cda_core::boundquiver::homological::{ext_dim, injective, projective};
use cda_core::boundquiver::reflection::{bgp_reflect, Direction};
use cda_core::boundquiver::tilting::is_isomorphic;
use cda_core::boundquiver::{BoundQuiverAlgebra, Quiver, Representation};
use cda_core::lattice::{enumerate_symbols, gram_canonical_basis};
use cda_core::speciesdims::{cartan_canonical, cartan_cd, cartan_squid, gram_simple_basis, DimPresentation};
use cda_core::{Field, Matrix};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn instance(w: &[u32]) -> Instance {
    let pts = ["0", "1", "2", "3"];
    Instance::new(w.to_vec(), pts[..w.len()].iter().map(|s| Lambda::parse(Q, s).unwrap()).collect(), Q).unwrap()
}

/// Direct sum of indecomposables picked by code: 0 projective, 1 injective, 2 simple.
fn module(alg: &BoundQuiverAlgebra, picks: &[(u8, usize)]) -> Representation {
    picks.iter().fold(Representation::zero(alg), |acc, &(kind, v)| {
        let v = v % alg.vertex_count();
        let m = match kind % 3 {
            0 => projective(alg, v),
            1 => injective(alg, v),
            _ => Representation::simple(alg, v),
        };
        acc.direct_sum(&m, alg)
    })
}

fn euler_by_ext(alg: &BoundQuiverAlgebra, m: &Representation, n: &Representation) -> i64 {
    (0..=3).map(|k| (if k % 2 == 0 { 1 } else { -1 }) * ext_dim(alg, m, n, k) as i64).sum()
}

fn euler_by_dims(p: &DimPresentation, m: &Representation, n: &Representation) -> i64 {
    let g = gram_simple_basis(p).unwrap();
    let col = |r: &Representation| Matrix::from_i64(Q, &r.dims.iter().map(|&d| vec![d as i64]).collect::<Vec<_>>());
    col(m).transpose().mul(&g).mul(&col(n)).get(0, 0).to_i64().unwrap()
}

fn star(leaves: usize) -> BoundQuiverAlgebra {
    let mut vs: Vec<String> = (1..=leaves).map(|i| i.to_string()).collect();
    vs.push("c".into());
    let arrows = (1..=leaves).map(|i| (format!("a{i}"), i.to_string(), "c".to_string())).collect();
    BoundQuiverAlgebra::new(Quiver::new(vs, arrows).unwrap(), vec![], Q).unwrap()
}

fn random_rep(alg: &BoundQuiverAlgebra, dims: Vec<usize>, entries: &[i64]) -> Representation {
    let mut it = entries.iter().cycle();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| {
            let (r, c) = (dims[a.tgt], dims[a.src]);
            let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| *it.next().unwrap()).collect()).collect();
            if r == 0 || c == 0 { Matrix::zeros(Q, r, c) } else { Matrix::from_i64(Q, &rows) }
        })
        .collect();
    Representation { field: Q, dims, maps }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn euler_form_via_resolutions(
        which in 0usize..4,
        pm in prop::collection::vec((0u8..3, 0usize..16), 1..3),
        pn in prop::collection::vec((0u8..3, 0usize..16), 1..3),
    ) {
        let weights: [&[u32]; 4] = [&[2, 2], &[2, 3], &[2, 2, 2], &[3, 3]];
        let inst = instance(weights[which % 4]);
        let s = inst.symbol();
        for (alg, pres) in [
            (squid_algebra(&inst).unwrap(), cartan_squid(&s)),
            (cd_algebra(&inst).unwrap(), cartan_cd(&s).unwrap()),
        ] {
            let (m, n) = (module(&alg, &pm), module(&alg, &pn));
            prop_assert_eq!(euler_by_ext(&alg, &m, &n), euler_by_dims(&pres, &m, &n));
        }
    }

    #[test]
    fn reflect_plus_then_minus(
        leaves in 1usize..4,
        dims in prop::collection::vec(0usize..3, 4),
        centre in 0usize..4,
        entries in prop::collection::vec(-2i64..3, 1..24),
    ) {
        let alg = star(leaves);
        let c = alg.vertex("c").unwrap();
        let mut d: Vec<usize> = dims[..leaves].to_vec();
        d.push(centre);
        let m = random_rep(&alg, d, &entries);
        prop_assume!(!has_projective_summand(&alg, &m, c));
        let (b, r) = bgp_reflect(&alg, &m, c, Direction::Plus).unwrap();
        let (a2, back) = bgp_reflect(&b, &r, c, Direction::Minus).unwrap();
        prop_assert_eq!(&back.dims, &m.dims);
        prop_assert!(is_isomorphic(&a2, &back, &m));
    }
}

#[test]
fn canonical_cartan_is_the_canonical_basis_gram() {
    for s in enumerate_symbols(7, 4) {
        let g = gram_canonical_basis(&s).unwrap().gram;
        let h = cartan_canonical(&s).hom_dims.scale(&Q.from_i64(s.kappa() as i64));
        assert_eq!(g, h, "{s}");
    }
}

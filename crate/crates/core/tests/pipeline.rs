//! End-to-end checks from root data to packets on small groups.

use num_rational::BigRational;
use num_traits::Zero;

use extq_core::bernstein::{centralizer_subdatum, iwahori_datum, BernsteinDatum};
use extq_core::extquot::{extended_quotient, fiber_over, projection_to_quotient};
use extq_core::lpackets::{packet_key, packet_partition, same_packet};
use extq_core::parameters::{
    affine_to_enhanced, chi_w_character, cuspidal_support, enumerate_affine_params_at, mu_tilde,
    mu_tilde_report, MuTildeOptions, ParamError,
};
use extq_core::rootdata::{build_root_datum, restrict, ClassFunction, FiniteGroup};
use extq_core::torus::{canonical_orbit_rep, TorusPoint};
use extq_core::unipotent::unipotent_classes;

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn tp(v: &[(i64, i64)]) -> TorusPoint {
    TorusPoint::from_torsion(v.iter().map(|&(a, b)| q(a, b)).collect())
}

fn iwahori(name: &str) -> BernsteinDatum {
    iwahori_datum(&build_root_datum(name).unwrap()).unwrap()
}

/// A simple reflection.
fn some_reflection(w: &FiniteGroup) -> usize {
    (0..w.order())
        .find(|&i| w.element(i).word.len() == 1)
        .unwrap()
}

fn sum_positive_coroots(d: &BernsteinDatum) -> Vec<BigRational> {
    let rd = &d.h;
    let mut h = vec![BigRational::zero(); rd.rank];
    for i in rd.positive_indices() {
        for (x, c) in h.iter_mut().zip(&rd.coroots[i]) {
            *x += BigRational::from_integer(c.clone());
        }
    }
    h
}

/// Partitions of `n` with parts at most `k`.
fn partition_count(n: usize, k: usize) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=k.min(n)).map(|p| partition_count(n - p, p)).sum()
}

#[test]
fn sl2_fibers_and_projection() {
    let d = iwahori("SL2");
    let comps = extended_quotient(&d.ws);
    for (t0, expected) in [(tp(&[(0, 1)]), 2), (tp(&[(1, 2)]), 2), (tp(&[(1, 4)]), 1)] {
        let fiber = fiber_over(&d.ws, &comps, &t0);
        assert_eq!(fiber.len(), expected, "fiber over {}", t0.display());
        for p in &fiber {
            assert_eq!(projection_to_quotient(&d.ws, p), canonical_orbit_rep(&d.ws, &t0));
        }
    }
}

#[test]
fn centralizers_follow_root_values() {
    // a root survives exactly when <alpha, t> is an integer
    for (g, gens, expect) in [("SL2", vec![(1, 2)], 2), ("SL2", vec![(1, 4)], 1), ("GL2", vec![(0, 1), (1, 2)], 1)] {
        let rd = build_root_datum(g).unwrap();
        let t = tp(&gens);
        let kept = rd
            .roots
            .iter()
            .filter(|a| {
                let v: BigRational = a.iter().zip(t.torsion()).map(|(x, y)| BigRational::from_integer(x.clone()) * y).sum();
                v.is_integer()
            })
            .count();
        let oracle = if kept > 0 { 2 } else { 1 };
        let b = centralizer_subdatum(&rd, &[t]).unwrap();
        assert_eq!(b.ws.order(), oracle);
        assert_eq!(oracle, expect);
    }
}

#[test]
fn sl3_transposition_character_by_frobenius() {
    let d = iwahori("SL3");
    let s = some_reflection(&d.ws);
    let chi = chi_w_character(&d, s, &tp(&[(0, 1), (0, 1)])).unwrap();
    let c2 = d.ws.generated_subgroup(&[s]);
    let sign = ClassFunction::from_element_fn(&c2, |i| {
        let v = if c2.element(i).is_identity() { 1 } else { -1 };
        extq_core::cyclotomic::Cyclo::from_int(v)
    });
    let table = d.ws.character_table();
    let mut degree = 0;
    for i in 0..table.num_classes() {
        let irr = table.irreducible(i);
        let by_frobenius = restrict(irr, &d.ws, &c2).unwrap().inner(&sign);
        assert_eq!(chi.inner(irr), by_frobenius);
        degree += irr.degree_int() * i64::try_from(by_frobenius.to_integer()).unwrap();
    }
    assert_eq!(degree, 3);
    assert_eq!(chi.degree_int(), 3);
}

#[test]
fn parameter_counts_match_partitions() {
    let sl2 = iwahori("SL2");
    assert_eq!(enumerate_affine_params_at(&sl2, &tp(&[(0, 1)])).unwrap().len(), 2);
    assert_eq!(enumerate_affine_params_at(&sl2, &tp(&[(1, 4)])).unwrap().len(), 1);
    let sl3 = iwahori("SL3");
    let p3 = partition_count(3, 3);
    assert_eq!(enumerate_affine_params_at(&sl3, &tp(&[(0, 1), (0, 1)])).unwrap().len(), p3);
}

#[test]
fn regular_class_support_is_two_rho_check() {
    let d = iwahori("SL3");
    let two_rho = sum_positive_coroots(&d);
    let params = enumerate_affine_params_at(&d, &tp(&[(0, 1), (0, 1)])).unwrap();
    let reg = params.iter().find(|a| a.x.name == "(3)").unwrap();
    assert_eq!(reg.x.h_x, two_rho);
    let expected = canonical_orbit_rep(&d.ws, &tp(&[(0, 1), (0, 1)]).times_cocharacter_at_nu(&two_rho));
    assert_eq!(cuspidal_support(&d, reg), expected);
    assert!(!expected.is_compact());
    let e = affine_to_enhanced(&d, reg).unwrap();
    assert_eq!(e.h_phi, two_rho);
}

#[test]
fn sl2_regular_class_has_coroot_cocharacter() {
    let rd = build_root_datum("SL2").unwrap();
    let classes = unipotent_classes(&rd).unwrap();
    let reg = classes.iter().find(|c| !c.is_trivial()).unwrap();
    let coroot: Vec<BigRational> = rd.coroots[rd.simple_indices[0]].iter().cloned().map(BigRational::from_integer).collect();
    assert_eq!(reg.h_x, coroot);
    assert_eq!(rd.pair_root(rd.simple_indices[0], &reg.h_x), q(2, 1));
}

#[test]
fn sl2_packets_over_plus_and_minus_one() {
    let d = iwahori("SL2");
    let a = mu_tilde(&d, MuTildeOptions { torsion_bound: 2 }).unwrap();
    let coroot = BigRational::from_integer(d.h.coroots[d.h.simple_indices[0]][0].clone());
    for t0 in [tp(&[(0, 1)]), tp(&[(1, 2)])] {
        let pts = fiber_over(&d.ws, &a.components, &t0);
        let parts = packet_partition(&d.ws, &a.components, &pts).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(!same_packet(&d.ws, &a.components, &pts[0], &pts[1]).unwrap());
        for p in &pts {
            let key = packet_key(&d.ws, &a.components, p).unwrap();
            assert_eq!(key.t, t0);
            let h = &key.h[0];
            if p.w.is_identity() {
                assert!(h.is_zero());
            } else {
                assert!(h == &coroot || h == &-coroot.clone());
            }
        }
        let single = packet_partition(&d.ws, &a.components, &pts[..1]).unwrap();
        assert_eq!(single.len(), 1);
    }
    assert!(a.components.iter().all(|c| c.label.is_some()));
}

#[test]
fn sp4_identity_fiber_has_too_few_characters() {
    let d = iwahori("Sp4");
    let report = mu_tilde_report(&d, MuTildeOptions { torsion_bound: 1 }).unwrap();
    let f = &report.fibers[0];
    assert_eq!((f.num_irreducibles, f.chi_rank), (5, 4));
    assert!(matches!(mu_tilde(&d, MuTildeOptions { torsion_bound: 1 }), Err(ParamError::NoAssignment(_))));
}

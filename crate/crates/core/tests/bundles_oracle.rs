mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::{builtin, c1, cx, cyclic, edge_values, grp, residues_mod};
use pontryagin_core::abelian::{FiniteAbelianGroup, RootOfUnity};
use pontryagin_core::bundles::{
    canonical_triple, enumerate_triples, full_extension_classes, mod_to_pon, pon_to_mod, random_triple,
    ring_pair_from_dual_bundle, triple_exists, triple_isomorphic, triples_extending_pair, validate_pair, ModulePairData,
    PairData, PonAutElement, TripleData, TripleExistence, TripleIsomorphism,
};
use pontryagin_core::topology::{cohomology, cup11, Cochain, SimplicialComplex};
use pontryagin_oracle::bundle::{self as ob, Apon};
use pontryagin_oracle::cochain as oc;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn exists(g: &Cochain, chi: &Cochain, n: u64) -> TripleData {
    match triple_exists(g, chi, n).unwrap() {
        TripleExistence::Exists(t) => t,
        other => panic!("expected a triple, got {other:?}"),
    }
}

fn h1_reps(x: &Arc<SimplicialComplex>, g: &FiniteAbelianGroup) -> Vec<Cochain> {
    cohomology(x, 1, g).unwrap().representatives()
}

/// One representative per class, zero included.
fn h1_all(x: &Arc<SimplicialComplex>, g: &FiniteAbelianGroup) -> Vec<Cochain> {
    let h = cohomology(x, 1, g).unwrap();
    h.classes().map(|c| h.representative(&c).unwrap()).collect()
}

#[test]
fn perturbing_one_phase_flags_exactly_the_incident_triangles() {
    let x = builtin("torus");
    let n = 3;
    let r = ring_pair_from_dual_bundle(&h1_reps(&x, &cyclic(3))[0], n).unwrap();
    let base = r.underlying_pair();
    assert!(validate_pair(&base).is_valid());
    for e in [0usize, 5, 20] {
        let mut zeta = base.zeta().clone();
        zeta[e][1] = (zeta[e][1] + 1) % n;
        let p = PairData::new(base.g().clone(), n, zeta).unwrap();
        let flagged: BTreeSet<Vec<u32>> = validate_pair(&p).violations.into_iter().map(|v| v.simplex).collect();
        let edge = &x.simplices(1)[e];
        let incident: BTreeSet<Vec<u32>> =
            x.simplices(2).iter().filter(|t| edge.iter().all(|v| t.contains(v))).cloned().collect();
        assert_eq!(flagged, incident);
    }
}

#[test]
fn ring_pairs_are_valid_on_every_builtin() {
    for name in SimplicialComplex::BUILTIN_NAMES {
        let x = builtin(name);
        for g in [cyclic(2), cyclic(4), FiniteAbelianGroup::new(&[2, 3]).unwrap()] {
            for chi in h1_all(&x, &g) {
                let r = ring_pair_from_dual_bundle(&chi, g.exponent()).unwrap();
                assert!(validate_pair(&r.underlying_pair()).is_valid());
                assert_eq!(r.chi(), &chi);
            }
        }
    }
}

#[test]
fn real_projective_line_ring_pair() {
    let x = builtin("circle");
    let chi = c1(&x, 2, &[1, 0, 0]);
    let o = cx(&x);
    for n in [2u64, 4] {
        let p = ring_pair_from_dual_bundle(&chi, n).unwrap().underlying_pair();
        // no finite gauge trivializes it ...
        assert!(p.gauge_trivialization().unwrap().is_none());
        assert!(!ob::lifted_phases_trivial(&o, &grp(p.group()), n, &edge_values(p.g()), p.zeta()));
        // ... but the integral Bockstein vanishes, so it is trivial as a U(1)-bundle
        assert!(p.topologically_trivial().unwrap());
    }
}

#[test]
fn existence_decisions_match_exhaustive_search() {
    let cases: Vec<(&str, FiniteAbelianGroup, u64)> = vec![
        ("circle", cyclic(2), 2),
        ("circle", cyclic(4), 4),
        ("circle", FiniteAbelianGroup::new(&[2, 3]).unwrap(), 6),
        ("rp2", cyclic(2), 2),
        ("rp2", cyclic(2), 4),
        ("rp2", cyclic(4), 4),
        ("torus", cyclic(3), 3),
        ("torus", cyclic(2), 2),
        ("sphere", cyclic(2), 2),
    ];
    for (name, g, n) in cases {
        let x = builtin(name);
        let o = cx(&x);
        let og = grp(&g);
        let reps = h1_all(&x, &g);
        for a in &reps {
            for b in &reps {
                let cup = ob::cup11(&o, &og, n, &edge_values(a), &edge_values(b));
                assert_eq!(cup, residues_mod(&cup11(a, b, n).unwrap(), n));
                let expected = oc::find_primitive_1(&o, n, &cup).is_some();
                let got = triple_exists(a, b, n).unwrap();
                assert_eq!(matches!(got, TripleExistence::Exists(_)), expected, "{name} {:?} {:?}", a.residues(), b.residues());
                if name == "circle" {
                    assert!(expected);
                }
                if let TripleExistence::Obstructed { gerbe_class } = got {
                    assert!(!gerbe_class.is_zero());
                }
            }
        }
    }
}

#[test]
fn named_obstructions() {
    let rp2 = builtin("rp2");
    let w = h1_reps(&rp2, &cyclic(2)).remove(0);
    assert!(matches!(triple_exists(&w, &w, 2).unwrap(), TripleExistence::Obstructed { .. }));
    let zero = Cochain::zero(rp2.clone(), 1, cyclic(2));
    assert!(matches!(triple_exists(&w, &zero, 2).unwrap(), TripleExistence::Exists(_)));
    assert!(matches!(triple_exists(&zero, &w, 2).unwrap(), TripleExistence::Exists(_)));
    let torus = builtin("torus");
    let r = h1_reps(&torus, &cyclic(3));
    assert!(matches!(triple_exists(&r[0], &r[1], 3).unwrap(), TripleExistence::Obstructed { .. }));
}

#[test]
fn torsor_counts_match_brute_force() {
    let point = builtin("point");
    let z = Cochain::zero(point.clone(), 1, cyclic(2));
    assert_eq!(enumerate_triples(&z, &z, 2).unwrap().class_count(), 1);

    let circle = builtin("circle");
    let o = cx(&circle);
    let og = grp(&cyclic(2));
    for (g, chi) in [(c1(&circle, 2, &[0, 0, 0]), c1(&circle, 2, &[0, 0, 0])), (c1(&circle, 2, &[1, 0, 0]), c1(&circle, 2, &[0, 1, 0]))] {
        let report = enumerate_triples(&g, &chi, 2).unwrap();
        assert_eq!(report.class_count(), 2);
        assert!(report.free && report.transitive && report.orbit_stabilizer_holds());
        let cup = ob::cup11(&o, &og, 2, &edge_values(&g), &edge_values(&chi));
        let all = oc::all_primitives_1(&o, 2, &cup);
        let classes = oc::classes_mod_coboundaries(&o, 2, &all);
        assert_eq!(classes.len(), 2);
        let hit: BTreeSet<usize> = report
            .representatives
            .iter()
            .map(|s| {
                let r = residues_mod(s, 2);
                classes.iter().position(|c| c.iter().any(|&i| all[i] == r)).unwrap()
            })
            .collect();
        assert_eq!(hit.len(), 2);
    }

    let torus = builtin("torus");
    let z = Cochain::zero(torus.clone(), 1, cyclic(3));
    let report = enumerate_triples(&z, &z, 3).unwrap();
    assert_eq!(report.class_count(), 9);
    assert_eq!(3usize.pow(oc::cohomology_dim_mod_p(&cx(&torus), 1, 3) as u32), 9);
    assert!(report.free && report.transitive && report.orbit_stabilizer_holds());

    let sphere = builtin("sphere");
    let z = Cochain::zero(sphere, 1, cyclic(2));
    assert_eq!(enumerate_triples(&z, &z, 2).unwrap().class_count(), 1);
}

#[test]
fn conversions_round_trip_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for name in SimplicialComplex::BUILTIN_NAMES {
        let x = builtin(name);
        let o = cx(&x);
        for i in 0..100 {
            let (g, n) = if i % 2 == 0 { (cyclic(2), 4) } else { (cyclic(3), 3) };
            let t = random_triple(&x, &g, n, &mut rng).unwrap();
            assert!(validate_pair(&t.pair()).is_valid() && validate_pair(&t.dual_pair()).is_valid());
            let m = pon_to_mod(&t).unwrap();
            let back = mod_to_pon(&m).unwrap();
            assert_eq!(back, t);
            assert_eq!(pon_to_mod(&back).unwrap(), m);
            let u = Cochain::from_residues(x.clone(), 0, n, &(0..x.count(0) as i64).map(|v| v * 7 + i).collect::<Vec<_>>()).unwrap();
            let moved = t.gauged(&u).unwrap();
            match triple_isomorphic(&t, &moved).unwrap() {
                TripleIsomorphism::Gauge(found) => {
                    let ds: Vec<u64> = moved.s().residues().iter().zip(t.s().residues()).map(|(a, b)| (a + n - b) % n).collect();
                    assert_eq!(ob::gauge(&o, n, &found.residues()), ds);
                }
                other => panic!("{name}: {other:?}"),
            }
        }
    }
}

#[test]
fn non_coboundary_shift_is_detected() {
    let x = builtin("circle");
    let t = TripleData::trivial(&x, &cyclic(2), 2).unwrap();
    let shifted = t.shifted(&c1(&x, 2, &[1, 0, 0])).unwrap();
    assert!(matches!(triple_isomorphic(&t, &shifted).unwrap(), TripleIsomorphism::Distinct { .. }));
    assert!(matches!(triple_isomorphic(&t, &t).unwrap(), TripleIsomorphism::Gauge(u) if u.is_zero()));
}

#[test]
fn ring_pair_over_itself_is_the_canonical_triple() {
    for name in ["circle", "torus", "rp2"] {
        let x = builtin(name);
        for chi_hat in h1_all(&x, &cyclic(2)) {
            let zero = Cochain::zero(x.clone(), 1, cyclic(2));
            let m = ModulePairData::new(&zero, &chi_hat.neg(), &Cochain::zero(x.clone(), 1, cyclic(4)), 4).unwrap();
            assert_eq!(mod_to_pon(&m).unwrap(), canonical_triple(&chi_hat, 4).unwrap());
        }
    }
}

fn full_case(g: &Cochain, chi: &Cochain, n: u64) -> (usize, usize) {
    let x = g.complex();
    let o = cx(x);
    let og = grp(g.coeffs());
    let t0 = exists(g, chi, n);
    let report = full_extension_classes(&t0).unwrap();
    let brute = ob::full_classes_bruteforce(&o, &og, n, &edge_values(g), &edge_values(chi), &residues_mod(t0.s(), n));
    // the quotient acts freely and transitively on the brute-force classes
    let hit: Vec<usize> = report
        .representatives
        .iter()
        .map(|s| {
            let r = residues_mod(s, n);
            brute.iter().position(|c| c.contains(&r)).expect("representative is top-valid")
        })
        .collect();
    let distinct: BTreeSet<usize> = hit.iter().copied().collect();
    assert_eq!(distinct.len(), hit.len(), "two cosets land in one class");
    assert_eq!(distinct.len(), brute.len(), "some class is not reached");
    assert!(report.free && report.transitive);
    (report.class_count(), brute.len())
}

#[test]
fn full_extension_classes_match_brute_force_on_the_circle() {
    let x = builtin("circle");
    let gen = c1(&x, 2, &[1, 0, 0]);
    let zero = c1(&x, 2, &[0, 0, 0]);
    let (core, brute) = full_case(&gen, &gen, 2);
    assert_eq!(core, brute);
    let t0 = exists(&gen, &gen, 2);
    let full = full_extension_classes(&t0).unwrap().full.unwrap();
    assert_eq!(full.kernel.len(), 2);
    assert_eq!(full_case(&zero, &zero, 2), (1, 1));
    for (a, b) in [(&gen, &zero), (&zero, &gen)] {
        let (core, brute) = full_case(a, b, 2);
        assert_eq!(core, brute);
    }
    for n in [4u64] {
        for a in [&gen, &zero] {
            for b in [&gen, &zero] {
                let (core, brute) = full_case(a, b, n);
                assert_eq!(core, brute, "n={n}");
            }
        }
    }
    let gen3 = c1(&x, 3, &[1, 0, 0]);
    let (core, brute) = full_case(&gen3, &gen3.scale(2), 3);
    assert_eq!(core, brute);
}

fn trivial_phases_over(g: &Cochain, n: u64) -> PairData {
    PairData::trivial_phases(g.clone(), n).unwrap()
}

fn extension_duals(f: &PairData) -> BTreeSet<Vec<u64>> {
    triples_extending_pair(f).unwrap().into_iter().map(|c| c.dual_class.coords().to_vec()).collect()
}

fn oracle_extension_count(f: &PairData, duals: &[Cochain]) -> usize {
    let x = f.base();
    let o = cx(x);
    duals
        .iter()
        .filter(|chi| ob::extends_to_triple(&o, &grp(f.group()), f.order_n(), &edge_values(f.g()), f.zeta(), &edge_values(chi)))
        .count()
}

#[test]
fn extensions_of_the_trivial_line_bundle_over_the_sphere_cover() {
    let x = builtin("rp2");
    let w = h1_reps(&x, &cyclic(2)).remove(0);
    let duals = h1_all(&x, &cyclic(2));
    for (n, expected) in [(4u64, 2usize), (2, 1)] {
        let f = trivial_phases_over(&w, n);
        let found = triples_extending_pair(&f).unwrap();
        assert_eq!(found.len(), expected, "n={n}");
        assert_eq!(oracle_extension_count(&f, &duals), expected);
        for c in &found {
            let diff: Vec<Vec<u64>> = c.witness.zeta().iter().zip(f.zeta()).map(|(a, b)| a.iter().zip(b).map(|(p, q)| (p + n - q) % n).collect()).collect();
            assert!(ob::lifted_phases_trivial(&cx(&x), &grp(f.group()), n, &edge_values(&w), &diff));
        }
    }
    let f = trivial_phases_over(&Cochain::zero(x.clone(), 1, cyclic(2)), 2);
    let found = extension_duals(&f);
    assert_eq!(found.len(), oracle_extension_count(&f, &duals));
}

#[test]
fn engineered_pair_has_no_extension() {
    let x = builtin("rp2");
    let g4 = cyclic(4);
    let u = h1_reps(&x, &g4).remove(0);
    let zero = Cochain::zero(x.clone(), 1, g4.clone());
    let zeta: Vec<Vec<u64>> = u.residues().iter().map(|&r| vec![r, 0, 0, 0]).collect();
    let f = PairData::new(zero, 4, zeta).unwrap();
    assert!(validate_pair(&f).is_valid());
    assert!(triples_extending_pair(&f).unwrap().is_empty());
    assert_eq!(oracle_extension_count(&f, &h1_all(&x, &g4)), 0);
}

#[test]
fn extension_over_a_point() {
    let x = builtin("point");
    let f = trivial_phases_over(&Cochain::zero(x, 1, cyclic(2)), 2);
    let found = triples_extending_pair(&f).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].classes.class_count(), 1);
}

fn apon(a: &PonAutElement) -> Apon {
    Apon { g: a.shift().coords().to_vec(), t: 0, chi: a.character().coords().to_vec() }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pontryagin_automorphisms_compose_like_the_reference(
        factors in prop::collection::vec(2u64..6, 1..3),
        picks in prop::collection::vec(0usize..1000, 6),
    ) {
        let g = FiniteAbelianGroup::new(&factors).unwrap();
        let n = g.exponent();
        let el = |i: usize| g.element_at(picks[i] % g.order());
        let a = PonAutElement::new(&g, el(0), RootOfUnity::new(picks[4] as i64, n), el(1)).unwrap();
        let b = PonAutElement::new(&g, el(2), RootOfUnity::new(picks[5] as i64, n), el(3)).unwrap();
        let og = grp(&g);
        let mut ra = apon(&a);
        ra.t = (picks[4] as u64) % n;
        let mut rb = apon(&b);
        rb.t = (picks[5] as u64) % n;
        let ab = a.compose(&b);
        let rab = ra.after(&rb, &og, n);
        prop_assert_eq!(ab.shift().coords(), &rab.g[..]);
        prop_assert_eq!(ab.character().coords(), &rab.chi[..]);
        prop_assert_eq!(ab.phase(), RootOfUnity::new(rab.t as i64, n));
        prop_assert_eq!(ab.partner(), a.partner().compose(&b.partner()));
        prop_assert!(a.intertwines_pi());
        prop_assert_eq!(a.compose(&a.inverse()), PonAutElement::identity(&g));
    }
}

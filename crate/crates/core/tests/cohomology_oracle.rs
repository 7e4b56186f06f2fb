mod common;

use std::sync::Arc;

use common::{builtin, c1, cx, cyclic, edge_values};
use pontryagin_core::abelian::FiniteAbelianGroup;
use pontryagin_core::topology::{
    cohomology, cup01, cup11, solve_coboundary, total_space, CoboundarySolution, Cochain, SimplicialComplex,
};

const BUILTIN_NAMES: [&str; 5] = SimplicialComplex::BUILTIN_NAMES;
use pontryagin_oracle::bundle as ob;
use pontryagin_oracle::cochain as oc;
use pontryagin_oracle::group::Grp;
use proptest::prelude::*;

fn random_cochain(x: &Arc<SimplicialComplex>, k: usize, n: u64, seed: &[i64]) -> Cochain {
    let r: Vec<i64> = (0..x.count(k)).map(|i| seed[i % seed.len()] * (i as i64 + 1)).collect();
    Cochain::from_residues(x.clone(), k, n, &r).unwrap()
}

#[test]
fn coboundary_matches_direct_evaluation() {
    for name in BUILTIN_NAMES {
        let x = builtin(name);
        let o = cx(&x);
        for k in 0..x.dim().unwrap() {
            let c = random_cochain(&x, k, 5, &[3, 1, 4, 1, 5, 9, 2, 6]);
            assert_eq!(c.coboundary().residues(), oc::coboundary(&o, k, 5, &c.residues()), "{name} k={k}");
        }
    }
}

#[test]
fn coboundary_squares_to_zero_on_builtins() {
    for name in BUILTIN_NAMES {
        let x = builtin(name);
        for k in 0..x.dim().unwrap().saturating_sub(1) {
            for n in [2, 3, 12] {
                let c = random_cochain(&x, k, n, &[1, 7, 2, 8, 5]);
                assert!(c.coboundary().coboundary().is_zero(), "{name} k={k} n={n}");
            }
        }
    }
}

#[test]
fn cohomology_orders_match_rank_oracle() {
    for name in BUILTIN_NAMES {
        let x = builtin(name);
        let o = cx(&x);
        for p in [2u64, 3] {
            for k in 0..=x.dim().unwrap() {
                let h = cohomology(&x, k, &cyclic(p)).unwrap();
                let dim = oc::cohomology_dim_mod_p(&o, k, p);
                assert_eq!(h.order(), p.pow(dim as u32) as usize, "{name} H^{k}(ℤ/{p})");
                assert!(h.invariant_factors().iter().all(|&f| f == p));
            }
        }
    }
}

#[test]
fn cohomology_orders_match_exhaustive_enumeration() {
    let square = Arc::new(SimplicialComplex::new(&[0, 1, 2, 3], &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap());
    let bowtie = Arc::new(SimplicialComplex::new(&[0, 1, 2], &[vec![0, 1, 2]]).unwrap());
    let two_points = Arc::new(SimplicialComplex::new(&[0, 5], &[]).unwrap());
    let complexes = [builtin("point"), builtin("circle"), square, bowtie, two_points];
    for x in complexes {
        assert!(x.count(1) <= 4);
        let o = cx(&x);
        for n in [2u64, 3, 4] {
            for k in 0..=x.dim().unwrap() {
                let h = cohomology(&x, k, &cyclic(n)).unwrap();
                assert_eq!(h.order(), oc::cohomology_order_exhaustive(&o, k, n), "{:?} k={k} n={n}", x.facets());
            }
        }
    }
}

#[test]
fn named_examples() {
    let torus = builtin("torus");
    let h = cohomology(&torus, 1, &cyclic(3)).unwrap();
    assert_eq!(h.invariant_factors(), &[3, 3]);
    let rp2 = builtin("rp2");
    assert_eq!(rp2.count(0), 6);
    assert_eq!(rp2.count(1), 15);
    assert_eq!(rp2.count(2), 10);
    assert_eq!(cohomology(&rp2, 1, &cyclic(2)).unwrap().invariant_factors(), &[2]);
    assert_eq!(cohomology(&rp2, 2, &cyclic(2)).unwrap().invariant_factors(), &[2]);
    assert_eq!(cohomology(&builtin("circle"), 1, &cyclic(2)).unwrap().invariant_factors(), &[2]);
}

#[test]
fn cup_of_rp2_generator_is_not_a_coboundary() {
    let x = builtin("rp2");
    let o = cx(&x);
    let w = cohomology(&x, 1, &cyclic(2)).unwrap().representatives().remove(0);
    let cup = cup11(&w, &w, 2).unwrap();
    let og = Grp::new(&[2]);
    assert_eq!(cup.residues(), ob::cup11(&o, &og, 2, &edge_values(&w), &edge_values(&w)));
    // all 2^15 one-cochains
    assert!(oc::all_primitives_1(&o, 2, &cup.residues()).is_empty());
    match solve_coboundary(&cup).unwrap() {
        CoboundarySolution::NonzeroClass(c) => assert!(!c.is_zero()),
        CoboundarySolution::Primitive(_) => panic!("cup of w1 with itself bounds"),
    }
}

#[test]
fn torus_generators_cup_is_nonzero() {
    let x = builtin("torus");
    let o = cx(&x);
    let reps = cohomology(&x, 1, &cyclic(3)).unwrap().representatives();
    let cup = cup11(&reps[0], &reps[1], 3).unwrap();
    assert!(oc::find_primitive_1(&o, 3, &cup.residues()).is_none());
    assert!(solve_coboundary(&cup).unwrap().primitive().is_none());
    let h2 = cohomology(&x, 2, &cyclic(3)).unwrap();
    assert_eq!(h2.order(), 3);
    assert!(!h2.reduce(&cup).unwrap().is_zero());
}

#[test]
fn cup01_of_constant_with_circle_generator() {
    let x = builtin("circle");
    let one = Cochain::from_residues(x.clone(), 0, 2, &[1, 1, 1]).unwrap();
    let chi = c1(&x, 2, &[1, 0, 0]);
    let h1 = cohomology(&x, 1, &cyclic(2)).unwrap();
    assert!(!h1.reduce(&cup01(&one, &chi, 2).unwrap()).unwrap().is_zero());
    let exact = Cochain::from_residues(x.clone(), 0, 2, &[0, 1, 0]).unwrap().coboundary();
    assert!(h1.reduce(&cup01(&one, &exact, 2).unwrap()).unwrap().is_zero());
    assert!(oc::find_primitive_0(&cx(&x), 2, &cup01(&one, &exact, 2).unwrap().residues()).is_some());
}

#[test]
fn covering_examples() {
    let circle = builtin("circle");
    let cov = total_space(&circle, &c1(&circle, 2, &[1, 0, 0])).unwrap();
    assert_eq!(cov.total().count(0), 6);
    assert_eq!(cov.total().components(), 1);
    let rp2 = builtin("rp2");
    let w = cohomology(&rp2, 1, &cyclic(2)).unwrap().representatives().remove(0);
    let cov = total_space(&rp2, &w).unwrap();
    assert_eq!(cov.total().count(0), 12);
    assert_eq!(cov.total().euler_characteristic(), 2);
    let o = ob::total_space(&cx(&rp2), &Grp::new(&[2]), &edge_values(&w));
    assert_eq!(o.euler_characteristic(), 2);
    assert_eq!(o.count(2), cov.total().count(2));
    let trivial = total_space(&rp2, &Cochain::zero(rp2.clone(), 1, cyclic(3))).unwrap();
    assert_eq!(trivial.total().components(), 3);
}

fn builtin_strategy() -> impl Strategy<Value = &'static str> {
    prop::sample::select(BUILTIN_NAMES.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn solver_recovers_a_primitive(name in builtin_strategy(), n in 2u64..7, seed in prop::collection::vec(-20i64..20, 1..8)) {
        let x = builtin(name);
        for k in 0..x.dim().unwrap() {
            let s0 = random_cochain(&x, k, n, &seed);
            let alpha = s0.coboundary();
            let s = solve_coboundary(&alpha).unwrap().primitive();
            prop_assert!(s.is_some());
            prop_assert_eq!(s.unwrap().coboundary(), alpha);
        }
    }

    #[test]
    fn reduction_is_additive(name in builtin_strategy(), n in 2u64..6, a in 0usize..50, b in 0usize..50) {
        let x = builtin(name);
        let h = cohomology(&x, 1, &FiniteAbelianGroup::cyclic(n).unwrap()).unwrap();
        let classes: Vec<_> = h.classes().collect();
        let (ca, cb) = (&classes[a % classes.len()], &classes[b % classes.len()]);
        let sum = h.representative(ca).unwrap().add(&h.representative(cb).unwrap()).unwrap();
        prop_assert_eq!(h.reduce(&sum).unwrap(), h.class_group().add(ca, cb));
    }

    #[test]
    fn cup_is_bilinear(n in 2u64..5, a in prop::collection::vec(0i64..4, 21), b in prop::collection::vec(0i64..4, 21), c in prop::collection::vec(0i64..4, 21)) {
        let x = builtin("torus");
        let (a, b, c) = (c1(&x, n, &a), c1(&x, n, &b), c1(&x, n, &c));
        let lhs = pontryagin_core::topology::cup11_cochain(&a.add(&b).unwrap(), &c, n).unwrap();
        let rhs = pontryagin_core::topology::cup11_cochain(&a, &c, n).unwrap()
            .add(&pontryagin_core::topology::cup11_cochain(&b, &c, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

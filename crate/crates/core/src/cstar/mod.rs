//! Hilbert-module picture of a triple.
//!
//! Sections of `F^ℂ` form a right module over the twisted convolution ring
//! of `F₀`, with a ring-valued inner product. The fibrewise Fourier
//! transform carries all of this to sections of `F̂^ℂ` over `C₀(Ê)`.
//! Everything is stored in the local charts of the base and moved between
//! charts with exact [`TransportOp`]s.

mod elements;
mod transport;
mod verify;

pub use elements::{
    convolve_ring, cstar_norm, ft_ring, ft_triple, ift_ring, ift_triple, inner_0, inner_c, module_action, norm_inf1,
    star, DualFunction, DualSection, RingElement, Section,
};
pub use transport::{transport, transport_dual, transports_close, TransportOp};
pub use verify::{verify_main_theorem, IdentityCheck, MainTheoremReport, IDENTITY_NAMES};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::FiniteAbelianGroup;
    use crate::bundles::{random_triple, triple_exists, TripleExistence};
    use crate::topology::{Cochain, SimplicialComplex};
    use alloc::sync::Arc;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn circle_triple() -> crate::bundles::TripleData {
        let b = Arc::new(SimplicialComplex::circle());
        let g = Cochain::from_residues(b.clone(), 1, 4, &[1, 0, 0]).unwrap();
        let chi = Cochain::from_residues(b, 1, 4, &[0, 3, 0]).unwrap();
        match triple_exists(&g, &chi, 4).unwrap() {
            TripleExistence::Exists(t) => t,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn theorem_holds_on_circle() {
        let r = verify_main_theorem(&circle_triple(), 4, 1).unwrap();
        assert_eq!(r.checks.len(), 8);
        assert!(r.passed(1e-10), "{r:?}");
    }

    #[test]
    fn theorem_holds_on_random_torus_triple() {
        let b = Arc::new(SimplicialComplex::torus());
        let g = FiniteAbelianGroup::new(&[2, 4]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let t = random_triple(&b, &g, 4, &mut rng).unwrap();
        assert!(verify_main_theorem(&t, 2, 3).unwrap().passed(1e-10));
    }

    #[test]
    fn frames_do_not_change_the_element() {
        let t = Arc::new(circle_triple());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let ring = Arc::new(t.ring_pair());
        let a = RingElement::random_framed(ring.clone(), &mut rng);
        let b = RingElement::random_framed(ring, &mut rng);
        let ab = convolve_ring(&a, &b).unwrap();
        let ab0 = convolve_ring(&a.in_standard_frame(), &b.in_standard_frame()).unwrap();
        assert!(ab.max_abs_diff(&ab0) < 1e-12);
        assert!(star(&a).max_abs_diff(&star(&a.in_standard_frame())) < 1e-12);
    }

    #[test]
    fn norms_and_round_trips() {
        let t = Arc::new(circle_triple());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let gamma = Section::random(t.clone(), &mut rng);
        assert!(ift_triple(&ft_triple(&gamma)).max_abs_diff(&gamma) < 1e-12);
        let a = RingElement::random(gamma.ring().clone(), &mut rng);
        assert!(ift_ring(a.ring().clone(), &ft_ring(&a)).unwrap().max_abs_diff(&a) < 1e-12);
        assert!(cstar_norm(&a) <= norm_inf1(&a) + 1e-12);
        let aa = convolve_ring(&star(&a), &a).unwrap();
        assert!((cstar_norm(&aa) - cstar_norm(&a).powi(2)).abs() < 1e-9);
    }

    #[test]
    fn parent_mismatch_is_rejected() {
        let t1 = Arc::new(circle_triple());
        let b = t1.base().clone();
        let t2 = Arc::new(crate::bundles::TripleData::trivial(&b, t1.group(), 4).unwrap());
        let x = Section::zero(t1);
        let y = Section::zero(t2);
        assert!(inner_c(&x, &y).is_err());
    }
}

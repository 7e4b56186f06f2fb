use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::abelian::FiniteAbelianGroup;
use crate::bundles::PairData;
use crate::topology::{Cochain, SimplicialComplex};
use crate::{Error, Result};

/// A ring pair, determined by the `Ĝ`-valued cocycle `χ` of its dual bundle.
///
/// The underlying pair has `g = 0` and `ζ_ji(x) = ⟨x, χ_ji⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPairData {
    chi: Cochain,
    order_n: u64,
}

/// The ring pair `F_Ê` of a `Ĝ`-bundle with cocycle `χ`.
pub fn ring_pair_from_dual_bundle(chi: &Cochain, order_n: u64) -> Result<RingPairData> {
    if chi.degree() != 1 {
        return Err(Error::CochainShape("a Ĝ-bundle is given by a 1-cocycle".into()));
    }
    chi.require_cocycle()?;
    chi.coeffs().check_order(order_n)?;
    Ok(RingPairData { chi: chi.clone(), order_n })
}

impl RingPairData {
    pub fn base(&self) -> &Arc<SimplicialComplex> {
        self.chi.complex()
    }

    /// The fibre group `G`; its dual carries `χ`.
    pub fn group(&self) -> &FiniteAbelianGroup {
        self.chi.coeffs()
    }

    pub fn order_n(&self) -> u64 {
        self.order_n
    }

    /// The cocycle of the dual bundle `Ê`.
    pub fn chi(&self) -> &Cochain {
        &self.chi
    }

    /// The pair obtained by forgetting the multiplication.
    pub fn underlying_pair(&self) -> PairData {
        let group = self.group();
        let n = self.order_n;
        let zeta: Vec<Vec<u64>> = self
            .chi
            .values()
            .iter()
            .map(|c| group.elements().map(|x| group.pairing_mod(&x, c, n)).collect())
            .collect();
        let g = Cochain::zero(self.base().clone(), 1, group.clone());
        PairData::new(g, n, zeta).expect("ring pair tables have the right shape")
    }

    /// `ζ_e(x)` residue mod `N` by enumeration index.
    pub fn zeta(&self, edge: usize, x: usize) -> u64 {
        let group = self.group();
        group.pairing_mod(&group.element_at(x), self.chi.value(edge), self.order_n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::validate_pair;

    #[test]
    fn zero_gives_trivial_pair() {
        let b = Arc::new(SimplicialComplex::circle());
        let chi = Cochain::zero(b, 1, FiniteAbelianGroup::cyclic(2).unwrap());
        let r = ring_pair_from_dual_bundle(&chi, 2).unwrap();
        assert!(r.underlying_pair().zeta().iter().flatten().all(|&z| z == 0));
        assert_eq!(r.chi(), &chi);
    }

    #[test]
    fn derived_pairs_are_valid() {
        let b = Arc::new(SimplicialComplex::torus());
        let z3 = FiniteAbelianGroup::cyclic(3).unwrap();
        let u = Cochain::from_residues(b, 0, 3, &[0, 1, 2, 2, 1, 0, 1]).unwrap();
        let chi = u.coboundary();
        assert_eq!(chi.coeffs(), &z3);
        let r = ring_pair_from_dual_bundle(&chi, 6).unwrap();
        assert!(validate_pair(&r.underlying_pair()).is_valid());
    }

    #[test]
    fn rejects_non_cocycle() {
        let b = Arc::new(SimplicialComplex::sphere());
        let mut chi = Cochain::zero(b, 1, FiniteAbelianGroup::cyclic(2).unwrap());
        chi.set(0, FiniteAbelianGroup::cyclic(2).unwrap().element(&[1]).unwrap()).unwrap();
        assert!(ring_pair_from_dual_bundle(&chi, 2).is_err());
    }
}

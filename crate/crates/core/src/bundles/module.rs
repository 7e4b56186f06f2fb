use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::abelian::{FiniteAbelianGroup, GroupElement};
use crate::bundles::classes::{h1_mu, perp_shift, pon_torsor, TorsorReport};
use crate::bundles::{ring_pair_from_dual_bundle, validate_pair, PairData, RingPairData};
use crate::topology::{
    cohomology, cup11, total_space, CoboundarySolver, Cochain, SimplicialComplex,
};
use crate::{Error, Result};

/// A module pair `F → E → B` over the ring pair `F_Ê`, in cocycle form
/// `(g, χ, s)` with `ζ_ji(x) = ⟨x, χ_ji⟩ s_ji⁻¹` and `δs = g ∪ χ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePairData {
    pair: PairData,
    ring: RingPairData,
    s: Cochain,
}

pub(crate) fn check_same_base(a: &Cochain, b: &Cochain) -> Result<()> {
    if a.complex() != b.complex() {
        return Err(Error::ParentMismatch("cocycles live on different bases"));
    }
    Ok(())
}

/// Validates `δs = g ∪ χ` in `Z/N`.
pub(crate) fn check_cup_primitive(g: &Cochain, chi: &Cochain, s: &Cochain, n: u64) -> Result<()> {
    check_same_base(g, chi)?;
    check_same_base(g, s)?;
    if s.degree() != 1 || s.coeffs() != &FiniteAbelianGroup::cyclic(n)? {
        return Err(Error::CochainShape(alloc::format!("s must be a Z/{n}-valued 1-cochain")));
    }
    let cup = cup11(g, chi, n)?;
    if s.coboundary() != cup {
        return Err(Error::InvalidBundleData("δs differs from the cup cocycle".into()));
    }
    Ok(())
}

impl ModulePairData {
    pub fn new(g: &Cochain, chi: &Cochain, s: &Cochain, order_n: u64) -> Result<Self> {
        check_cup_primitive(g, chi, s, order_n)?;
        let ring = ring_pair_from_dual_bundle(chi, order_n)?;
        let group = g.coeffs();
        let zeta = chi
            .values()
            .iter()
            .zip(s.residues())
            .map(|(c, sv)| {
                group.elements().map(|x| (group.pairing_mod(&x, c, order_n) + order_n - sv) % order_n).collect()
            })
            .collect();
        let pair = PairData::new(g.clone(), order_n, zeta)?;
        Ok(Self { pair, ring, s: s.clone() })
    }

    /// Assembles a module pair from its parts, checking the `ζ` relation.
    pub fn from_parts(pair: PairData, ring: RingPairData, s: Cochain) -> Result<Self> {
        let m = Self::new(pair.g(), ring.chi(), &s, pair.order_n())?;
        if m.pair != pair {
            return Err(Error::InvalidBundleData("ζ is not ⟨x, χ⟩ s⁻¹".into()));
        }
        Ok(m)
    }

    pub fn base(&self) -> &Arc<SimplicialComplex> {
        self.pair.base()
    }

    pub fn pair(&self) -> &PairData {
        &self.pair
    }

    pub fn ring(&self) -> &RingPairData {
        &self.ring
    }

    pub fn g(&self) -> &Cochain {
        self.pair.g()
    }

    pub fn chi(&self) -> &Cochain {
        self.ring.chi()
    }

    pub fn s(&self) -> &Cochain {
        &self.s
    }

    pub fn order_n(&self) -> u64 {
        self.pair.order_n()
    }
}

/// Why a module pair does not exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleObstruction {
    /// `[E] ∪ [Ê] ≠ 0`; class coordinates in `H²(B; μ_N)`.
    Cup(GroupElement),
    /// `[F] ∉ [Ê]^⊥`; class of `F` relative to a module structure, in
    /// `H¹(E; μ_N)`, which is not a pullback from the base.
    NotInPerp(GroupElement),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExistence {
    /// A module pair whose underlying pair is isomorphic to the given `F`.
    Exists(ModulePairData),
    Obstructed(ModuleObstruction),
}

/// Decides whether the pair `F` over `E` carries a module structure over `F_Ê`.
pub fn module_pair_exists(g: &Cochain, chi: &Cochain, f: &PairData) -> Result<ModuleExistence> {
    check_same_base(g, chi)?;
    if f.g() != g {
        return Err(Error::ParentMismatch("F is not a pair over E"));
    }
    if !validate_pair(f).is_valid() {
        return Err(Error::InvalidBundleData("F violates the pair cocycle law".into()));
    }
    let n = f.order_n();
    let cup = cup11(g, chi, n)?;
    let solver = CoboundarySolver::new(g.complex(), 2)?;
    let Some(s0) = solver.solve(&cup)? else {
        let h2 = cohomology(g.complex(), 2, cup.coeffs())?;
        return Ok(ModuleExistence::Obstructed(ModuleObstruction::Cup(h2.reduce(&cup)?)));
    };
    let m0 = ModulePairData::new(g, chi, &s0, n)?;
    let cov = total_space(g.complex(), g)?;
    let diff = m0.pair.phase_cochain_on(&cov)?.sub(&f.phase_cochain_on(&cov)?)?;
    match perp_shift(&cov, &diff, n)? {
        Ok(z) => Ok(ModuleExistence::Exists(ModulePairData::new(g, chi, &s0.add(&z)?, n)?)),
        Err(class) => Ok(ModuleExistence::Obstructed(ModuleObstruction::NotInPerp(class))),
    }
}

/// Isomorphism classes of module pairs over `(E, Ê)` as an `H¹(B; μ_N)`-torsor.
pub fn enumerate_module_classes(g: &Cochain, chi: &Cochain, order_n: u64) -> Result<TorsorReport> {
    check_same_base(g, chi)?;
    let cup = cup11(g, chi, order_n)?;
    let solver = CoboundarySolver::new(g.complex(), 2)?;
    let s0 = solver.solve(&cup)?.ok_or(Error::NonzeroObstruction)?;
    let h1 = h1_mu(g.complex(), order_n)?;
    let all: Vec<GroupElement> = h1.classes().collect();
    pon_torsor(&h1, &s0, &all)
}

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::Rng;

use crate::abelian::{FiniteAbelianGroup, GroupElement};
use crate::bundles::classes::{h1_mu, pon_torsor, TorsorReport};
use crate::bundles::module::{check_cup_primitive, check_same_base};
use crate::bundles::{ring_pair_from_dual_bundle, ModulePairData, PairData, RingPairData, ZetaTable};
use crate::topology::{cohomology, cup11, CoboundarySolver, Cochain, CohomologyGroup, SimplicialComplex};
use crate::{Error, Result};

/// A Pontrjagin duality triple in cocycle form `(g, χ̂, s)`.
///
/// Derived transitions, additively in `Z/N`:
///
/// ```text
/// ζ_ji(x) = s_ji − ⟨x, χ̂_ji⟩
/// ζ̂_ji(ξ) = s_ji + ⟨g_ji, ξ⟩ + ⟨g_ji, χ̂_ji⟩
/// ```
///
/// Both are pair cocycles exactly when `δs = g ∪ χ̂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleData {
    g: Cochain,
    chi_hat: Cochain,
    s: Cochain,
    order_n: u64,
    zeta: ZetaTable,
    zeta_hat: ZetaTable,
}

impl TripleData {
    pub fn new(g: &Cochain, chi_hat: &Cochain, s: &Cochain, order_n: u64) -> Result<Self> {
        check_cup_primitive(g, chi_hat, s, order_n)?;
        let group = g.coeffs();
        let n = order_n;
        let mut zeta = Vec::with_capacity(s.values().len());
        let mut zeta_hat = Vec::with_capacity(s.values().len());
        for e in 0..g.complex().count(1) {
            let ge = g.value(e);
            let ce = chi_hat.value(e);
            let se = s.residue(e);
            zeta.push(group.elements().map(|x| (se + n - group.pairing_mod(&x, ce, n)) % n).collect());
            let twist = group.pairing_mod(ge, ce, n);
            zeta_hat.push(group.elements().map(|xi| (se + group.pairing_mod(ge, &xi, n) + twist) % n).collect());
        }
        Ok(Self { g: g.clone(), chi_hat: chi_hat.clone(), s: s.clone(), order_n, zeta, zeta_hat })
    }

    /// The trivial triple over `base`.
    pub fn trivial(base: &Arc<SimplicialComplex>, group: &FiniteAbelianGroup, order_n: u64) -> Result<Self> {
        let g = Cochain::zero(base.clone(), 1, group.clone());
        let s = Cochain::zero(base.clone(), 1, FiniteAbelianGroup::cyclic(order_n)?);
        Self::new(&g, &g, &s, order_n)
    }

    pub fn base(&self) -> &Arc<SimplicialComplex> {
        self.g.complex()
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        self.g.coeffs()
    }

    pub fn order_n(&self) -> u64 {
        self.order_n
    }

    pub fn g(&self) -> &Cochain {
        &self.g
    }

    pub fn chi_hat(&self) -> &Cochain {
        &self.chi_hat
    }

    pub fn s(&self) -> &Cochain {
        &self.s
    }

    pub fn zeta(&self) -> &ZetaTable {
        &self.zeta
    }

    pub fn zeta_hat(&self) -> &ZetaTable {
        &self.zeta_hat
    }

    /// The pair `F → E → B`.
    pub fn pair(&self) -> PairData {
        PairData::new(self.g.clone(), self.order_n, self.zeta.clone()).expect("shapes fixed at construction")
    }

    /// The dual pair `F̂ → Ê → B`.
    pub fn dual_pair(&self) -> PairData {
        PairData::new(self.chi_hat.clone(), self.order_n, self.zeta_hat.clone()).expect("shapes fixed at construction")
    }

    /// The ring pair `F_{Ê^op}` acting on `F`.
    pub fn ring_pair(&self) -> RingPairData {
        ring_pair_from_dual_bundle(&self.chi_hat.neg(), self.order_n).expect("negated cocycle")
    }

    /// Same `(g, χ̂)` with a different `s`.
    pub fn with_s(&self, s: &Cochain) -> Result<Self> {
        Self::new(&self.g, &self.chi_hat, s, self.order_n)
    }

    /// Adds a `μ_N` 1-cocycle to `s` (the `H¹(B; μ_N)` action).
    pub fn shifted(&self, z: &Cochain) -> Result<Self> {
        self.with_s(&self.s.add(z)?)
    }

    /// Applies the gauge `s ↦ s + δu` for a `μ_N` 0-cochain `u`.
    pub fn gauged(&self, u: &Cochain) -> Result<Self> {
        self.with_s(&self.s.add(&u.coboundary())?)
    }
}

/// The canonical triple of a `Ĝ`-bundle: `(0, χ̂, 0)`.
pub fn canonical_triple(chi_hat: &Cochain, order_n: u64) -> Result<TripleData> {
    let g = Cochain::zero(chi_hat.complex().clone(), 1, chi_hat.coeffs().clone());
    let s = Cochain::zero(chi_hat.complex().clone(), 1, FiniteAbelianGroup::cyclic(order_n)?);
    TripleData::new(&g, chi_hat, &s, order_n)
}

/// Module pair over `F_Ê` ↦ triple over `(E, Ê^op)`: `χ̂ = −χ`, `s ↦ −s`.
pub fn mod_to_pon(m: &ModulePairData) -> Result<TripleData> {
    TripleData::new(m.g(), &m.chi().neg(), &m.s().neg(), m.order_n())
}

/// Triple ↦ module pair over `F_{Ê^op}`; inverse of [`mod_to_pon`].
pub fn pon_to_mod(t: &TripleData) -> Result<ModulePairData> {
    ModulePairData::new(&t.g, &t.chi_hat.neg(), &t.s.neg(), t.order_n)
}

/// Outcome of [`triple_exists`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleExistence {
    Exists(TripleData),
    /// Coordinates of the class `−[E] ∪ [Ê]` in `H²(B; μ_N)`.
    Obstructed { gerbe_class: GroupElement },
}

/// Decides whether a triple over `(E, Ê)` exists.
pub fn triple_exists(g: &Cochain, chi_hat: &Cochain, order_n: u64) -> Result<TripleExistence> {
    check_same_base(g, chi_hat)?;
    let cup = cup11(g, chi_hat, order_n)?;
    let solver = CoboundarySolver::new(g.complex(), 2)?;
    match solver.solve(&cup)? {
        Some(s) => Ok(TripleExistence::Exists(TripleData::new(g, chi_hat, &s, order_n)?)),
        None => {
            let h2 = cohomology(g.complex(), 2, cup.coeffs())?;
            Ok(TripleExistence::Obstructed { gerbe_class: h2.reduce(&cup.neg())? })
        }
    }
}

/// Isomorphism classes in `Pon(E, Ê)`, an `H¹(B; μ_N)`-torsor.
pub fn enumerate_triples(g: &Cochain, chi_hat: &Cochain, order_n: u64) -> Result<TorsorReport> {
    let TripleExistence::Exists(t) = triple_exists(g, chi_hat, order_n)? else {
        return Err(Error::NonzeroObstruction);
    };
    let h1 = h1_mu(g.complex(), order_n)?;
    let all: Vec<GroupElement> = h1.classes().collect();
    pon_torsor(&h1, t.s(), &all)
}

/// Outcome of [`triple_isomorphic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleIsomorphism {
    /// A `μ_N` 0-cochain `u` with `s₂ = s₁ + δu`.
    Gauge(Cochain),
    /// `s₂ − s₁` represents this nonzero class of `H¹(B; μ_N)`.
    Distinct { difference_class: GroupElement },
}

/// Compares two triples over the same `(E, Ê)` in `Pon(E, Ê)`.
pub fn triple_isomorphic(t1: &TripleData, t2: &TripleData) -> Result<TripleIsomorphism> {
    if t1.g != t2.g || t1.chi_hat != t2.chi_hat || t1.order_n != t2.order_n {
        return Err(Error::ParentMismatch("triples over different (E, Ê)"));
    }
    let diff = t2.s.sub(&t1.s)?;
    let solver = CoboundarySolver::new(t1.base(), 1)?;
    match solver.solve(&diff)? {
        Some(u) => Ok(TripleIsomorphism::Gauge(u)),
        None => {
            let h1 = h1_mu(t1.base(), t1.order_n)?;
            Ok(TripleIsomorphism::Distinct { difference_class: h1.reduce(&diff)? })
        }
    }
}

/// A uniformly random cocycle: random class plus random coboundary.
pub fn random_cocycle<R: Rng + ?Sized>(h: &CohomologyGroup, rng: &mut R) -> Result<Cochain> {
    let classes = h.class_group();
    let class = classes.element_at(rng.gen_range(0..classes.order()));
    let rep = h.representative(&class)?;
    if h.degree() == 0 {
        return Ok(rep);
    }
    let coeffs = h.coeffs();
    let u = Cochain::from_fn(h.complex().clone(), h.degree() - 1, coeffs.clone(), |_| {
        coeffs.element_at(rng.gen_range(0..coeffs.order()))
    });
    rep.add(&u.coboundary())
}

/// A random triple over `base`: random `E`, a random `Ê` with vanishing cup
/// product (falling back to `Ê = 0`), and a random `s`.
pub fn random_triple<R: Rng + ?Sized>(
    base: &Arc<SimplicialComplex>,
    group: &FiniteAbelianGroup,
    order_n: u64,
    rng: &mut R,
) -> Result<TripleData> {
    let h1g = cohomology(base, 1, group)?;
    let h1n = h1_mu(base, order_n)?;
    let solver = CoboundarySolver::new(base, 2)?;
    let g = random_cocycle(&h1g, rng)?;
    for _ in 0..16 {
        let chi_hat = random_cocycle(&h1g, rng)?;
        if let Some(s0) = solver.solve(&cup11(&g, &chi_hat, order_n)?)? {
            let s = s0.add(&random_cocycle(&h1n, rng)?)?;
            return TripleData::new(&g, &chi_hat, &s, order_n);
        }
    }
    let chi_hat = Cochain::zero(base.clone(), 1, group.clone());
    let s = random_cocycle(&h1n, rng)?;
    TripleData::new(&g, &chi_hat, &s, order_n)
}

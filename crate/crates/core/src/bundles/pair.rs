use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::abelian::{FiniteAbelianGroup, GroupElement, RootOfUnity};
use crate::topology::{
    bockstein_vanishes, solve_coboundary, total_space, CoboundarySolution, Cochain, CoveringSpace,
    SimplicialComplex,
};
use crate::{Error, Result};

/// Dense per-edge phase table: `table[e][x]` is the residue mod `N` of
/// `ζ_e(x)`, where `x` runs over the fibre group in enumeration order.
pub type ZetaTable = Vec<Vec<u64>>;

/// Transition data of a pair `F → E → B` in cocycle form.
///
/// On the edge `i < j` the chart change is `(h, z) ↦ (g_ji + h, ζ_ji(h) z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairData {
    g: Cochain,
    order_n: u64,
    zeta: ZetaTable,
}

/// One violated instance of the pair cocycle law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairViolation {
    /// The 2-simplex `(v0, v1, v2)`.
    pub simplex: Vec<u32>,
    /// Fibre element at which the `ζ` law fails, or `None` when `g` itself
    /// fails the cocycle law there.
    pub element: Option<GroupElement>,
}

/// Outcome of [`validate_pair`]; empty iff valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairReport {
    pub violations: Vec<PairViolation>,
}

impl PairReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl PairData {
    /// Checks shapes only; use [`validate_pair`] for the cocycle laws.
    pub fn new(g: Cochain, order_n: u64, zeta: ZetaTable) -> Result<Self> {
        if g.degree() != 1 {
            return Err(Error::CochainShape("pair transitions must be a 1-cochain".into()));
        }
        g.coeffs().check_order(order_n)?;
        let edges = g.complex().count(1);
        if zeta.len() != edges {
            return Err(Error::LengthMismatch { expected: edges, found: zeta.len() });
        }
        let order = g.coeffs().order();
        for row in &zeta {
            if row.len() != order {
                return Err(Error::LengthMismatch { expected: order, found: row.len() });
            }
            if row.iter().any(|&r| r >= order_n) {
                return Err(Error::InvalidBundleData(format!("phase residue not reduced mod {order_n}")));
            }
        }
        Ok(Self { g, order_n, zeta })
    }

    /// `g` arbitrary, `ζ ≡ 1`.
    pub fn trivial_phases(g: Cochain, order_n: u64) -> Result<Self> {
        let zeta = alloc::vec![alloc::vec![0; g.coeffs().order()]; g.complex().count(1)];
        Self::new(g, order_n, zeta)
    }

    pub fn base(&self) -> &Arc<SimplicialComplex> {
        self.g.complex()
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        self.g.coeffs()
    }

    pub fn g(&self) -> &Cochain {
        &self.g
    }

    pub fn order_n(&self) -> u64 {
        self.order_n
    }

    pub fn zeta(&self) -> &ZetaTable {
        &self.zeta
    }

    /// `ζ_e(x)` as an exact root of unity.
    pub fn zeta_root(&self, edge: usize, x: usize) -> RootOfUnity {
        RootOfUnity::new(self.zeta[edge][x] as i64, self.order_n)
    }

    #[cfg(test)]
    pub(crate) fn zeta_mut(&mut self) -> &mut ZetaTable {
        &mut self.zeta
    }

    /// The `μ_N`-valued 1-cocycle on the total space of `E` equivalent to
    /// this pair: the lifted edge `((v_i, h), (v_j, g_ji + h))` carries `ζ_ji(h)`.
    pub fn cocycle_on_total_space(&self) -> Result<(CoveringSpace, Cochain)> {
        let cov = total_space(self.base(), &self.g)?;
        let c = self.phase_cochain_on(&cov)?;
        Ok((cov, c))
    }

    /// Same as [`cocycle_on_total_space`](Self::cocycle_on_total_space) for
    /// a covering already built from this pair's `g`.
    pub fn phase_cochain_on(&self, cov: &CoveringSpace) -> Result<Cochain> {
        let group = self.group();
        let base = self.base();
        let res: Vec<i64> = cov
            .total()
            .simplices(1)
            .iter()
            .map(|e| {
                let bedge = cov.project_simplex(e);
                let idx = base.index_of(&bedge).ok_or_else(|| Error::UnknownSimplex(bedge.clone()))?;
                let h = group.index_of(&cov.sheet(e[0]));
                Ok(self.zeta[idx][h] as i64)
            })
            .collect::<Result<_>>()?;
        Cochain::from_residues(cov.total().clone(), 1, self.order_n, &res)
    }

    /// A `μ_N` gauge on the total space trivializing `ζ`, if one exists.
    pub fn gauge_trivialization(&self) -> Result<Option<Cochain>> {
        let (_, c) = self.cocycle_on_total_space()?;
        if !c.is_cocycle() {
            return Err(Error::NotACocycle { degree: 1 });
        }
        Ok(match solve_coboundary(&c)? {
            CoboundarySolution::Primitive(u) => Some(u),
            CoboundarySolution::NonzeroClass(_) => None,
        })
    }

    /// Whether `F` is trivial as a `U(1)`-bundle over `E` once continuous
    /// gauges are allowed (vanishing integral Bockstein).
    pub fn topologically_trivial(&self) -> Result<bool> {
        let (_, c) = self.cocycle_on_total_space()?;
        bockstein_vanishes(&c)
    }
}

/// Lists every 2-simplex and fibre element where the pair law fails:
/// `g_kj + g_ji = g_ki` and `ζ_kj(g_ji + x) ζ_ji(x) = ζ_ki(x)`.
pub fn validate_pair(p: &PairData) -> PairReport {
    let x = p.base();
    let group = p.group();
    let n = p.order_n;
    let mut violations = Vec::new();
    for t in x.simplices(2) {
        let e01 = x.index_of(&[t[0], t[1]]).unwrap();
        let e12 = x.index_of(&[t[1], t[2]]).unwrap();
        let e02 = x.index_of(&[t[0], t[2]]).unwrap();
        let g01 = p.g.value(e01);
        let g12 = p.g.value(e12);
        let g02 = p.g.value(e02);
        if group.add(g01, g12) != *g02 {
            violations.push(PairViolation { simplex: t.clone(), element: None });
            continue;
        }
        let shift = group.index_of(g01);
        for h in 0..group.order() {
            let lhs = (p.zeta[e12][group.add_index(shift, h)] + p.zeta[e01][h]) % n;
            if lhs != p.zeta[e02][h] {
                violations.push(PairViolation { simplex: t.clone(), element: Some(group.element_at(h)) });
            }
        }
    }
    PairReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_pair_is_valid() {
        let b = Arc::new(SimplicialComplex::rp2());
        let g = Cochain::zero(b, 1, FiniteAbelianGroup::cyclic(2).unwrap());
        let p = PairData::trivial_phases(g, 2).unwrap();
        assert!(validate_pair(&p).is_valid());
        assert!(p.gauge_trivialization().unwrap().is_some());
    }

    #[test]
    fn perturbation_hits_incident_triangles() {
        let b = Arc::new(SimplicialComplex::torus());
        let g = Cochain::zero(b.clone(), 1, FiniteAbelianGroup::cyclic(3).unwrap());
        let mut p = PairData::trivial_phases(g, 3).unwrap();
        p.zeta_mut()[4][1] = 1;
        let report = validate_pair(&p);
        let e = &b.simplices(1)[4];
        let incident = b.simplices(2).iter().filter(|t| e.iter().all(|v| t.contains(v))).count();
        assert_eq!(report.violations.len(), incident);
        assert!(report.violations.iter().all(|v| e.iter().all(|w| v.simplex.contains(w))));
    }

    #[test]
    fn shape_checks() {
        let b = Arc::new(SimplicialComplex::circle());
        let g = Cochain::zero(b, 1, FiniteAbelianGroup::cyclic(2).unwrap());
        assert!(PairData::new(g.clone(), 3, alloc::vec![alloc::vec![0; 2]; 3]).is_err());
        assert!(PairData::new(g.clone(), 2, alloc::vec![alloc::vec![0; 2]; 2]).is_err());
        assert!(PairData::new(g, 2, alloc::vec![alloc::vec![0, 2]; 3]).is_err());
    }
}

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::abelian::{FiniteAbelianGroup, GroupElement};
use crate::topology::cochain::same_complex;
use crate::topology::{Cochain, SimplicialComplex};
use crate::{Error, Result};

/// The `|G|`-sheeted covering defined by a `G`-valued 1-cocycle.
///
/// The total-space vertex `(v, h)` has id `index(v) · |G| + index(h)`, so
/// lifting preserves the ascending order of simplices.
#[derive(Clone, Debug)]
pub struct CoveringSpace {
    total: Arc<SimplicialComplex>,
    base: Arc<SimplicialComplex>,
    group: FiniteAbelianGroup,
    cocycle: Cochain,
}

/// Builds the total space of the principal `G`-bundle with transition cocycle `g`.
pub fn total_space(base: &Arc<SimplicialComplex>, g: &Cochain) -> Result<CoveringSpace> {
    if !same_complex(base, g.complex()) || g.degree() != 1 {
        return Err(Error::CochainShape("expected a 1-cochain on the base".into()));
    }
    g.require_cocycle()?;
    let group = g.coeffs().clone();
    let order = group.order() as u32;
    let nverts = base.vertices().len() as u32;
    let vertices: Vec<u32> = (0..nverts * order).collect();
    let mut lifted = Vec::new();
    for k in 1..=base.dim().unwrap_or(0) {
        for s in base.simplices(k) {
            for h in 0..group.order() {
                let h0 = group.element_at(h);
                let lift = s
                    .iter()
                    .map(|&v| {
                        let shift = g.edge(s[0], v).expect("edge of a simplex");
                        let sheet = group.index_of(&group.add(&h0, &shift)) as u32;
                        base.vertex_index(v).unwrap() as u32 * order + sheet
                    })
                    .collect::<Vec<u32>>();
                lifted.push(lift);
            }
        }
    }
    let total = SimplicialComplex::new(&vertices, &lifted)?;
    let expected: Vec<usize> = (0..=base.dim().unwrap_or(0)).map(|k| base.count(k) * group.order()).collect();
    let found: Vec<usize> = (0..expected.len()).map(|k| total.count(k)).collect();
    if expected != found {
        return Err(Error::NotACocycle { degree: 1 });
    }
    Ok(CoveringSpace { total: Arc::new(total), base: base.clone(), group, cocycle: g.clone() })
}

impl CoveringSpace {
    pub fn total(&self) -> &Arc<SimplicialComplex> {
        &self.total
    }

    pub fn base(&self) -> &Arc<SimplicialComplex> {
        &self.base
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn cocycle(&self) -> &Cochain {
        &self.cocycle
    }

    /// Total-space vertex id of `(v, h)`.
    pub fn vertex(&self, v: u32, h: &GroupElement) -> u32 {
        let order = self.group.order() as u32;
        self.base.vertex_index(v).expect("base vertex") as u32 * order + self.group.index_of(h) as u32
    }

    /// Base vertex id under a total-space vertex.
    pub fn project(&self, w: u32) -> u32 {
        self.base.vertices()[(w / self.group.order() as u32) as usize]
    }

    /// Sheet coordinate of a total-space vertex.
    pub fn sheet(&self, w: u32) -> GroupElement {
        self.group.element_at((w % self.group.order() as u32) as usize)
    }

    /// Deck transformation `(v, h) ↦ (v, h + a)` on vertex ids.
    pub fn deck(&self, a: &GroupElement, w: u32) -> u32 {
        let h = self.group.add(&self.sheet(w), a);
        self.vertex(self.project(w), &h)
    }

    /// Projection of a total-space simplex.
    pub fn project_simplex(&self, s: &[u32]) -> Vec<u32> {
        s.iter().map(|&w| self.project(w)).collect()
    }
}

/// Pullback `p^* c` along the covering projection.
pub fn pullback_map(cov: &CoveringSpace, c: &Cochain) -> Result<Cochain> {
    if !same_complex(&cov.base, c.complex()) {
        return Err(Error::ParentMismatch("cochain is not on the base of this covering"));
    }
    let k = c.degree();
    let values = cov
        .total
        .simplices(k)
        .iter()
        .map(|s| c.get(&cov.project_simplex(s)).cloned().ok_or_else(|| Error::UnknownSimplex(s.clone())))
        .collect::<Result<Vec<_>>>()?;
    Cochain::from_values(cov.total.clone(), k, c.coeffs().clone(), values)
}

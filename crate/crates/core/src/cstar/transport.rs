use alloc::vec::Vec;

use num_complex::Complex64;

use crate::abelian::phase_to_complex;
use crate::bundles::{PairData, RingPairData, TripleData};
use crate::topology::Cochain;
use crate::{Error, Result};

/// A chart change on fibre functions: `out[y] = e(phase[y] / n) · in[perm[y]]`.
///
/// Phases are kept as exact residues so composites can be compared exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportOp {
    perm: Vec<usize>,
    phases: Vec<u64>,
    n: u64,
}

impl TransportOp {
    pub fn identity(len: usize, n: u64) -> Self {
        Self { perm: (0..len).collect(), phases: alloc::vec![0; len], n }
    }

    /// Transport of sections of the pair from the chart at vertex `a` to the
    /// chart at vertex `b`: a fibre point `(x, z)` over `a` is `(g_ba + x, ζ_ba(x) z)`
    /// over `b`.
    pub fn from_pair(p: &PairData, a: u32, b: u32) -> Result<Self> {
        let base = p.base();
        let group = p.group();
        let n = p.order_n();
        if a == b {
            base.vertex_index(a).ok_or_else(|| Error::UnknownSimplex(alloc::vec![a]))?;
            return Ok(Self::identity(group.order(), n));
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let e = base.index_of(&[lo, hi]).ok_or_else(|| Error::UnknownSimplex(alloc::vec![lo, hi]))?;
        let g = group.index_of(p.g().value(e));
        let zeta = &p.zeta()[e];
        let perm: Vec<usize> = (0..group.order()).map(|y| group.sub_index(y, g)).collect();
        let phases = perm.iter().map(|&x| zeta[x]).collect();
        let forward = Self { perm, phases, n };
        Ok(if a < b { forward } else { forward.inverse() })
    }

    pub fn section(t: &TripleData, a: u32, b: u32) -> Result<Self> {
        Self::from_pair(&t.pair(), a, b)
    }

    pub fn dual_section(t: &TripleData, a: u32, b: u32) -> Result<Self> {
        Self::from_pair(&t.dual_pair(), a, b)
    }

    /// Acts on standard-frame values of ring elements.
    pub fn ring(r: &RingPairData, a: u32, b: u32) -> Result<Self> {
        Self::from_pair(&r.underlying_pair(), a, b)
    }

    /// Functions on the total space of the bundle with cocycle `c`.
    pub fn dual_function(c: &Cochain, order_n: u64, a: u32, b: u32) -> Result<Self> {
        Self::from_pair(&PairData::trivial_phases(c.clone(), order_n)?, a, b)
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.phases.iter().all(|&k| k % self.n == 0)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &TransportOp) -> Result<TransportOp> {
        if self.len() != first.len() || self.n != first.n {
            return Err(Error::ParentMismatch("transports on different fibres"));
        }
        let perm = self.perm.iter().map(|&p| first.perm[p]).collect();
        let phases = self.perm.iter().zip(&self.phases).map(|(&p, &k)| (k + first.phases[p]) % self.n).collect();
        Ok(TransportOp { perm, phases, n: self.n })
    }

    pub fn inverse(&self) -> TransportOp {
        let mut perm = alloc::vec![0; self.len()];
        let mut phases = alloc::vec![0; self.len()];
        for (y, (&x, &k)) in self.perm.iter().zip(&self.phases).enumerate() {
            perm[x] = y;
            phases[x] = (self.n - k % self.n) % self.n;
        }
        TransportOp { perm, phases, n: self.n }
    }

    pub fn apply(&self, values: &[Complex64]) -> Result<Vec<Complex64>> {
        if values.len() != self.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: values.len() });
        }
        Ok(self
            .perm
            .iter()
            .zip(&self.phases)
            .map(|(&x, &k)| phase_to_complex(k, self.n) * values[x])
            .collect())
    }
}

/// Whether the transports around every 2-simplex compose exactly.
pub fn transports_close(p: &PairData) -> Result<bool> {
    for t in p.base().simplices(2) {
        let ab = TransportOp::from_pair(p, t[0], t[1])?;
        let bc = TransportOp::from_pair(p, t[1], t[2])?;
        let ac = TransportOp::from_pair(p, t[0], t[2])?;
        if bc.compose(&ab)? != ac {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Moves the chart values of a section at vertex `a` into the chart at `b`.
pub fn transport(t: &TripleData, a: u32, b: u32, values: &[Complex64]) -> Result<Vec<Complex64>> {
    TransportOp::section(t, a, b)?.apply(values)
}

/// Dual-side counterpart of [`transport`].
pub fn transport_dual(t: &TripleData, a: u32, b: u32, values: &[Complex64]) -> Result<Vec<Complex64>> {
    TransportOp::dual_section(t, a, b)?.apply(values)
}

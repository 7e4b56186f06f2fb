use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::abelian::{FiniteAbelianGroup, GroupElement};
use crate::topology::SimplicialComplex;
use crate::{Error, Result};

/// A `k`-cochain with values in a finite abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    complex: Arc<SimplicialComplex>,
    degree: usize,
    coeffs: FiniteAbelianGroup,
    values: Vec<GroupElement>,
}

pub(crate) fn same_complex(a: &Arc<SimplicialComplex>, b: &Arc<SimplicialComplex>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Cochain {
    pub fn zero(complex: Arc<SimplicialComplex>, degree: usize, coeffs: FiniteAbelianGroup) -> Self {
        let n = complex.count(degree);
        let z = coeffs.zero();
        Self { complex, degree, values: alloc::vec![z; n], coeffs }
    }

    pub fn from_values(
        complex: Arc<SimplicialComplex>,
        degree: usize,
        coeffs: FiniteAbelianGroup,
        values: Vec<GroupElement>,
    ) -> Result<Self> {
        let n = complex.count(degree);
        if values.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: values.len() });
        }
        for v in &values {
            coeffs.check(v)?;
        }
        Ok(Self { complex, degree, coeffs, values })
    }

    pub fn from_fn(
        complex: Arc<SimplicialComplex>,
        degree: usize,
        coeffs: FiniteAbelianGroup,
        mut f: impl FnMut(&[u32]) -> GroupElement,
    ) -> Self {
        let values = complex.simplices(degree).iter().map(|s| f(s)).collect();
        Self { complex, degree, coeffs, values }
    }

    /// A cochain with values in `Z/n`, given as residues.
    pub fn from_residues(complex: Arc<SimplicialComplex>, degree: usize, n: u64, residues: &[i64]) -> Result<Self> {
        let coeffs = FiniteAbelianGroup::cyclic(n)?;
        let values = residues
            .iter()
            .map(|&r| if coeffs.rank() == 0 { coeffs.zero() } else { coeffs.element_signed(&[r]).unwrap() })
            .collect();
        Self::from_values(complex, degree, coeffs, values)
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &FiniteAbelianGroup {
        &self.coeffs
    }

    pub fn values(&self) -> &[GroupElement] {
        &self.values
    }

    pub fn value(&self, idx: usize) -> &GroupElement {
        &self.values[idx]
    }

    pub fn get(&self, simplex: &[u32]) -> Option<&GroupElement> {
        if simplex.len() != self.degree + 1 {
            return None;
        }
        self.complex.index_of(simplex).map(|i| &self.values[i])
    }

    pub fn set(&mut self, idx: usize, v: GroupElement) -> Result<()> {
        self.coeffs.check(&v)?;
        self.values[idx] = v;
        Ok(())
    }

    /// Single residue per simplex for cyclic coefficients (0 for the trivial group).
    pub fn residues(&self) -> Vec<u64> {
        self.values.iter().map(|v| v.coords().first().copied().unwrap_or(0)).collect()
    }

    /// Residue on one simplex for cyclic coefficients.
    pub fn residue(&self, idx: usize) -> u64 {
        self.values[idx].coords().first().copied().unwrap_or(0)
    }

    /// Value of a 1-cochain on the oriented edge `a → b`.
    pub fn edge(&self, a: u32, b: u32) -> Result<GroupElement> {
        if a == b {
            return Ok(self.coeffs.zero());
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let v = self.get(&[lo, hi]).ok_or_else(|| Error::UnknownSimplex(alloc::vec![lo, hi]))?;
        Ok(if a < b { v.clone() } else { self.coeffs.neg(v) })
    }

    fn check_compatible(&self, other: &Cochain) -> Result<()> {
        if !same_complex(&self.complex, &other.complex) {
            return Err(Error::ParentMismatch("cochains live on different complexes"));
        }
        if self.degree != other.degree {
            return Err(Error::CochainShape(format!("degrees {} and {}", self.degree, other.degree)));
        }
        if self.coeffs != other.coeffs {
            return Err(Error::GroupMismatch {
                left: self.coeffs.factors().to_vec(),
                right: other.coeffs.factors().to_vec(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| self.coeffs.add(a, b)).collect();
        Ok(Cochain { values, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_compatible(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| self.coeffs.sub(a, b)).collect();
        Ok(Cochain { values, ..self.clone() })
    }

    pub fn neg(&self) -> Cochain {
        let values = self.values.iter().map(|a| self.coeffs.neg(a)).collect();
        Cochain { values, ..self.clone() }
    }

    pub fn scale(&self, m: i64) -> Cochain {
        let values = self.values.iter().map(|a| self.coeffs.scale(m, a)).collect();
        Cochain { values, ..self.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(GroupElement::is_zero)
    }

    /// Simplicial coboundary, `(δc)(v_0…v_{k+1}) = Σ_i (-1)^i c(v_0…v̂_i…v_{k+1})`.
    pub fn coboundary(&self) -> Cochain {
        let k = self.degree;
        let x = &self.complex;
        let values = (0..x.count(k + 1))
            .map(|idx| {
                let mut acc = self.coeffs.zero();
                for (i, f) in x.faces(k + 1, idx).into_iter().enumerate() {
                    let v = &self.values[f];
                    acc = if i % 2 == 0 { self.coeffs.add(&acc, v) } else { self.coeffs.sub(&acc, v) };
                }
                acc
            })
            .collect();
        Cochain { complex: self.complex.clone(), degree: k + 1, coeffs: self.coeffs.clone(), values }
    }

    pub fn is_cocycle(&self) -> bool {
        self.coboundary().is_zero()
    }

    pub(crate) fn require_cocycle(&self) -> Result<()> {
        if self.is_cocycle() {
            Ok(())
        } else {
            Err(Error::NotACocycle { degree: self.degree })
        }
    }

    /// The same values read in another cyclic coefficient group `Z/m`, with
    /// residues multiplied by `factor`. Used to move `Z/n` data into `Z/N`.
    pub fn rescale_cyclic(&self, m: u64, factor: u64) -> Result<Cochain> {
        let residues: Vec<i64> = self.residues().iter().map(|&r| (r * factor) as i64).collect();
        Cochain::from_residues(self.complex.clone(), self.degree, m, &residues)
    }
}

fn check_pairing_inputs(a: &Cochain, b: &Cochain, n: u64) -> Result<()> {
    if !same_complex(&a.complex, &b.complex) {
        return Err(Error::ParentMismatch("cup factors live on different complexes"));
    }
    if a.coeffs != b.coeffs {
        return Err(Error::GroupMismatch { left: a.coeffs.factors().to_vec(), right: b.coeffs.factors().to_vec() });
    }
    a.coeffs.check_order(n)
}

/// Alexander–Whitney product of a `G`-valued and a `Ĝ`-valued 1-cochain,
/// `(g ∪ χ)(v0 v1 v2) = ⟨g(v0 v1), χ(v1 v2)⟩`, as a `Z/n` 2-cochain.
/// No cocycle check.
pub fn cup11_cochain(g: &Cochain, chi: &Cochain, n: u64) -> Result<Cochain> {
    check_pairing_inputs(g, chi, n)?;
    if g.degree != 1 || chi.degree != 1 {
        return Err(Error::CochainShape("cup11 takes two 1-cochains".into()));
    }
    let x = &g.complex;
    let group = &g.coeffs;
    let res: Vec<i64> = x
        .simplices(2)
        .iter()
        .map(|t| {
            let a = g.get(&[t[0], t[1]]).unwrap();
            let b = chi.get(&[t[1], t[2]]).unwrap();
            group.pairing_mod(a, b, n) as i64
        })
        .collect();
    Cochain::from_residues(x.clone(), 2, n, &res)
}

/// Cup product of 1-cocycles in `G` and `Ĝ`, valued in `μ_n ≅ Z/n`.
pub fn cup11(g: &Cochain, chi: &Cochain, n: u64) -> Result<Cochain> {
    g.require_cocycle()?;
    chi.require_cocycle()?;
    cup11_cochain(g, chi, n)
}

/// `(c ∪ χ)(v0 v1) = ⟨c(v0), χ(v0 v1)⟩` for a `G`-valued 0-cochain.
pub fn cup01(c: &Cochain, chi: &Cochain, n: u64) -> Result<Cochain> {
    check_pairing_inputs(c, chi, n)?;
    if c.degree != 0 || chi.degree != 1 {
        return Err(Error::CochainShape("cup01 takes a 0-cochain and a 1-cochain".into()));
    }
    c.require_cocycle()?;
    chi.require_cocycle()?;
    let x = &c.complex;
    let res: Vec<i64> = x
        .simplices(1)
        .iter()
        .enumerate()
        .map(|(i, e)| c.coeffs.pairing_mod(c.get(&[e[0]]).unwrap(), chi.value(i), n) as i64)
        .collect();
    Cochain::from_residues(x.clone(), 1, n, &res)
}

/// `(g ∪ c)(v0 v1) = ⟨g(v0 v1), c(v1)⟩` for a `Ĝ`-valued 0-cochain `c`.
pub fn cup10(g: &Cochain, c: &Cochain, n: u64) -> Result<Cochain> {
    check_pairing_inputs(g, c, n)?;
    if g.degree != 1 || c.degree != 0 {
        return Err(Error::CochainShape("cup10 takes a 1-cochain and a 0-cochain".into()));
    }
    g.require_cocycle()?;
    c.require_cocycle()?;
    let x = &g.complex;
    let res: Vec<i64> = x
        .simplices(1)
        .iter()
        .enumerate()
        .map(|(i, e)| g.coeffs.pairing_mod(g.value(i), c.get(&[e[1]]).unwrap(), n) as i64)
        .collect();
    Cochain::from_residues(x.clone(), 1, n, &res)
}

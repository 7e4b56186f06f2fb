use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{FiniteAbelianGroup, GroupElement};
use crate::topology::cochain::same_complex;
use crate::topology::snf::{mat_mul, mat_vec, mat_vec_mod, smith_normal_form, Matrix};
use crate::topology::{Cochain, SimplicialComplex};
use crate::{Error, Result};

fn gcd_i(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `m`, for `gcd(a, m) = 1`.
fn inv_mod(a: i128, m: i128) -> i128 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m)
}

/// Cohomology with coefficients in one cyclic factor `Z/n`.
#[derive(Clone, Debug)]
struct CyclicPart {
    factor: usize,
    n: u64,
    /// Cocycles are `V · y` with `m_i | y_i`.
    m: Vec<i128>,
    v: Matrix,
    v_inv: Matrix,
    /// Change of basis on `w = y / m` realizing the quotient.
    p: Matrix,
    p_inv: Matrix,
    /// `(row of P, order)` for every nontrivial cyclic summand.
    summands: Vec<(usize, u64)>,
}

/// `H^k(X; A)` with its invariant factors, representatives and a reduction map.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    complex: Arc<SimplicialComplex>,
    degree: usize,
    coeffs: FiniteAbelianGroup,
    parts: Vec<CyclicPart>,
    classes: FiniteAbelianGroup,
}

/// Computes `H^k(X; A)`.
pub fn cohomology(x: &Arc<SimplicialComplex>, k: usize, coeffs: &FiniteAbelianGroup) -> Result<CohomologyGroup> {
    let cols = x.count(k);
    let dk = x.coboundary_matrix(k);
    let snf_k = smith_normal_form(&dk, x.count(k + 1), cols)?;
    let prev = if k > 0 { Some(x.coboundary_matrix(k - 1)) } else { None };
    let vinv_prev = match &prev {
        Some(d) => mat_mul(&snf_k.v_inv, d, x.count(k - 1))?,
        None => vec![Vec::new(); cols],
    };
    let prev_cols = if k > 0 { x.count(k - 1) } else { 0 };

    let mut parts = Vec::new();
    let mut orders = Vec::new();
    for (f, &n) in coeffs.factors().iter().enumerate() {
        let ni = n as i128;
        let m: Vec<i128> = (0..cols)
            .map(|i| {
                let d = if i < snf_k.rank { snf_k.diag[i] } else { 0 };
                ni / gcd_i(d, ni)
            })
            .collect();
        // Relation matrix [W | diag(n / m)].
        let mut r = vec![vec![0i128; prev_cols + cols]; cols];
        for i in 0..cols {
            let o = ni / m[i];
            for j in 0..prev_cols {
                let y = vinv_prev[i][j];
                if y % m[i] != 0 {
                    return Err(Error::Overflow);
                }
                r[i][j] = (y / m[i]).rem_euclid(o);
            }
            r[i][prev_cols + i] = o;
        }
        let snf_r = smith_normal_form(&r, cols, prev_cols + cols)?;
        let summands: Vec<(usize, u64)> = snf_r
            .diag
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 1)
            .map(|(j, &e)| (j, e as u64))
            .collect();
        orders.extend(summands.iter().map(|&(_, e)| e));
        parts.push(CyclicPart {
            factor: f,
            n,
            m,
            v: snf_k.v.clone(),
            v_inv: snf_k.v_inv.clone(),
            p: snf_r.u,
            p_inv: snf_r.u_inv,
            summands,
        });
    }
    Ok(CohomologyGroup {
        complex: x.clone(),
        degree: k,
        coeffs: coeffs.clone(),
        parts,
        classes: FiniteAbelianGroup::new(&orders)?,
    })
}

impl CohomologyGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &FiniteAbelianGroup {
        &self.coeffs
    }

    pub fn complex(&self) -> &Arc<SimplicialComplex> {
        &self.complex
    }

    /// Orders of the cyclic summands, grouped by coefficient factor.
    pub fn invariant_factors(&self) -> &[u64] {
        self.classes.factors()
    }

    /// The group of class coordinates.
    pub fn class_group(&self) -> &FiniteAbelianGroup {
        &self.classes
    }

    pub fn order(&self) -> usize {
        self.classes.order()
    }

    fn check_input(&self, c: &Cochain) -> Result<()> {
        if !same_complex(&self.complex, c.complex()) {
            return Err(Error::ParentMismatch("cochain is not on this complex"));
        }
        if c.degree() != self.degree {
            return Err(Error::CochainShape(alloc::format!(
                "expected degree {}, found {}",
                self.degree,
                c.degree()
            )));
        }
        if c.coeffs() != &self.coeffs {
            return Err(Error::GroupMismatch {
                left: self.coeffs.factors().to_vec(),
                right: c.coeffs().factors().to_vec(),
            });
        }
        Ok(())
    }

    /// Class coordinates of a cocycle.
    pub fn reduce(&self, c: &Cochain) -> Result<GroupElement> {
        self.check_input(c)?;
        c.require_cocycle()?;
        let mut coords = Vec::with_capacity(self.classes.rank());
        for part in &self.parts {
            let n = part.n as i128;
            let x: Vec<i128> = c.values().iter().map(|v| v.coords()[part.factor] as i128).collect();
            let y = mat_vec_mod(&part.v_inv, &x, n);
            let w: Vec<i128> = y
                .iter()
                .zip(&part.m)
                .map(|(&yi, &mi)| if yi % mi == 0 { Ok(yi / mi) } else { Err(Error::NotACocycle { degree: self.degree }) })
                .collect::<Result<_>>()?;
            let pw = mat_vec(&part.p, &w)?;
            for &(j, e) in &part.summands {
                coords.push(pw[j].rem_euclid(e as i128) as u64);
            }
        }
        self.classes.element(&coords)
    }

    pub fn is_zero_class(&self, c: &Cochain) -> Result<bool> {
        Ok(self.reduce(c)?.is_zero())
    }

    /// One representative cocycle per cyclic summand, in coordinate order.
    pub fn representatives(&self) -> Vec<Cochain> {
        let mut out = Vec::new();
        for part in &self.parts {
            let n = part.n as i128;
            for &(j, _) in &part.summands {
                let w: Vec<i128> = part.p_inv.iter().map(|row| row[j]).collect();
                let y: Vec<i128> = w.iter().zip(&part.m).map(|(a, b)| a * b).collect();
                let x = mat_vec_mod(&part.v, &y, n);
                let values = x
                    .iter()
                    .map(|&r| {
                        let mut coords = vec![0u64; self.coeffs.rank()];
                        coords[part.factor] = r as u64;
                        self.coeffs.element(&coords).unwrap()
                    })
                    .collect();
                out.push(Cochain::from_values(self.complex.clone(), self.degree, self.coeffs.clone(), values).unwrap());
            }
        }
        out
    }

    /// The representative `Σ_j c_j · rep_j` of a class.
    pub fn representative(&self, class: &GroupElement) -> Result<Cochain> {
        self.classes.check(class)?;
        let mut acc = Cochain::zero(self.complex.clone(), self.degree, self.coeffs.clone());
        for (rep, &c) in self.representatives().iter().zip(class.coords()) {
            acc = acc.add(&rep.scale(c as i64))?;
        }
        Ok(acc)
    }

    /// Every class, in enumeration order of the class group.
    pub fn classes(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.classes.elements()
    }
}

/// Outcome of [`solve_coboundary`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoboundarySolution {
    /// A cochain `s` with `δs = α`.
    Primitive(Cochain),
    /// `α` is not a coboundary; its class coordinates.
    NonzeroClass(GroupElement),
}

impl CoboundarySolution {
    pub fn primitive(self) -> Option<Cochain> {
        match self {
            CoboundarySolution::Primitive(s) => Some(s),
            CoboundarySolution::NonzeroClass(_) => None,
        }
    }
}

/// Reusable solver for `δs = α` in a fixed degree.
#[derive(Clone, Debug)]
pub struct CoboundarySolver {
    complex: Arc<SimplicialComplex>,
    degree: usize,
    u: Matrix,
    v: Matrix,
    diag: Vec<i128>,
}

impl CoboundarySolver {
    /// Solver for targets of degree `k >= 1`.
    pub fn new(x: &Arc<SimplicialComplex>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::CochainShape("0-cochains have no primitives".into()));
        }
        let d = x.coboundary_matrix(k - 1);
        let s = smith_normal_form(&d, x.count(k), x.count(k - 1))?;
        let diag = (0..x.count(k)).map(|i| if i < s.rank { s.diag[i] } else { 0 }).collect();
        Ok(Self { complex: x.clone(), degree: k, u: s.u, v: s.v, diag })
    }

    /// A primitive modulo the coefficient group, or `None`.
    pub fn solve(&self, alpha: &Cochain) -> Result<Option<Cochain>> {
        if !same_complex(&self.complex, alpha.complex()) || alpha.degree() != self.degree {
            return Err(Error::ParentMismatch("solver built for another complex or degree"));
        }
        let coeffs = alpha.coeffs();
        let cols = self.complex.count(self.degree - 1);
        let mut out = vec![vec![0u64; coeffs.rank()]; cols];
        for (f, &n) in coeffs.factors().iter().enumerate() {
            let n = n as i128;
            let a: Vec<i128> = alpha.values().iter().map(|v| v.coords()[f] as i128).collect();
            let beta = mat_vec_mod(&self.u, &a, n);
            let mut t = vec![0i128; cols];
            for (i, &b) in beta.iter().enumerate() {
                let d = self.diag[i].rem_euclid(n);
                let g = gcd_i(d, n);
                if b % g != 0 {
                    return Ok(None);
                }
                if i < cols && d != 0 {
                    let m = n / g;
                    t[i] = ((b / g) * inv_mod(d / g, m)).rem_euclid(m);
                }
            }
            let s = mat_vec_mod(&self.v, &t, n);
            for (slot, r) in out.iter_mut().zip(s) {
                slot[f] = r as u64;
            }
        }
        let values = out.iter().map(|c| coeffs.element(c).unwrap()).collect();
        let s = Cochain::from_values(self.complex.clone(), self.degree - 1, coeffs.clone(), values)?;
        debug_assert!(s.coboundary() == *alpha);
        Ok(Some(s))
    }
}

/// Solves `δs = α` for a `k`-cocycle, `k >= 1`, or certifies a nonzero class.
pub fn solve_coboundary(alpha: &Cochain) -> Result<CoboundarySolution> {
    alpha.require_cocycle()?;
    let solver = CoboundarySolver::new(alpha.complex(), alpha.degree())?;
    match solver.solve(alpha)? {
        Some(s) => Ok(CoboundarySolution::Primitive(s)),
        None => {
            let h = cohomology(alpha.complex(), alpha.degree(), alpha.coeffs())?;
            Ok(CoboundarySolution::NonzeroClass(h.reduce(alpha)?))
        }
    }
}

/// Whether an integer `k`-cochain is the coboundary of an integer cochain.
pub fn integral_coboundary_exists(x: &SimplicialComplex, k: usize, c: &[i128]) -> Result<bool> {
    if c.len() != x.count(k) {
        return Err(Error::LengthMismatch { expected: x.count(k), found: c.len() });
    }
    if k == 0 {
        return Ok(c.iter().all(|&v| v == 0));
    }
    let d = x.coboundary_matrix(k - 1);
    let s = smith_normal_form(&d, x.count(k), x.count(k - 1))?;
    let beta = mat_vec(&s.u, c)?;
    Ok(beta.iter().enumerate().all(|(i, &b)| if i < s.rank { b % s.diag[i] == 0 } else { b == 0 }))
}

/// Whether the integral Bockstein of a `Z/n`-valued cocycle vanishes, i.e.
/// whether the flat `U(1)` class it defines is topologically trivial.
pub fn bockstein_vanishes(c: &Cochain) -> Result<bool> {
    c.require_cocycle()?;
    if c.coeffs().rank() > 1 {
        return Err(Error::CochainShape("Bockstein needs cyclic coefficients".into()));
    }
    let n = c.coeffs().order() as i128;
    let x = c.complex();
    let k = c.degree();
    let lift: Vec<i128> = c.residues().iter().map(|&r| r as i128).collect();
    let d = x.coboundary_matrix(k);
    let dl = mat_vec(&d, &lift)?;
    let quotient: Vec<i128> = dl.iter().map(|v| v / n).collect();
    integral_coboundary_exists(x, k + 1, &quotient)
}

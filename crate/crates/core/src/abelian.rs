//! Finite abelian groups in invariant-factor form, their duals, and the
//! canonical pairing with values in exact roots of unity.
//!
//! A group is presented as `Z/n_1 ⊕ … ⊕ Z/n_r`. Its dual has the same factors;
//! a dual element `χ` acts on `g` by
//! `⟨g, χ⟩ = exp(2πi Σ_k g_k χ_k / n_k)`.
//!
//! Elements are enumerated in mixed radix with the last factor varying
//! fastest. That order fixes the layout of every dense table in the crate.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// The group `⊕_k Z/n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    strides: Vec<usize>,
    order: usize,
    exponent: u64,
}

impl FiniteAbelianGroup {
    /// Builds `⊕ Z/n_k`. Factors equal to 1 are trivial and are dropped;
    /// a factor of 0 is rejected. The empty list gives the trivial group.
    pub fn new(factors: &[u64]) -> Result<Self> {
        let mut kept = Vec::with_capacity(factors.len());
        for &n in factors {
            match n {
                0 => return Err(Error::InvalidFactor(0)),
                1 => {}
                _ => kept.push(n),
            }
        }
        let mut strides = vec![1usize; kept.len()];
        let mut order: usize = 1;
        for k in (0..kept.len()).rev() {
            strides[k] = order;
            order = order.checked_mul(kept[k] as usize).ok_or(Error::Overflow)?;
        }
        let exponent = kept.iter().fold(1u64, |acc, &n| lcm(acc, n));
        Ok(Self { factors: kept, strides, order, exponent })
    }

    pub fn trivial() -> Self {
        Self { factors: Vec::new(), strides: Vec::new(), order: 1, exponent: 1 }
    }

    /// `Z/n` for `n >= 1`.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// The character group. Its elements are read as characters via
    /// [`pairing`](Self::pairing).
    pub fn dual(&self) -> Self {
        self.clone()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.rank()] }
    }

    /// Validates and reduces raw coordinates.
    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        self.check_len(coords.len())?;
        Ok(GroupElement {
            coords: coords.iter().zip(&self.factors).map(|(&c, &n)| c % n).collect(),
        })
    }

    /// Like [`element`](Self::element) but accepts signed coordinates.
    pub fn element_signed(&self, coords: &[i64]) -> Result<GroupElement> {
        self.check_len(coords.len())?;
        Ok(GroupElement {
            coords: coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
                .collect(),
        })
    }

    /// The generator of the `k`-th cyclic factor.
    pub fn generator(&self, k: usize) -> GroupElement {
        let mut g = self.zero();
        g.coords[k] = 1;
        g
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.coords.len() == self.rank() && g.coords.iter().zip(&self.factors).all(|(&c, &n)| c < n)
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found != self.rank() {
            return Err(Error::ElementShape { expected: self.rank(), found });
        }
        Ok(())
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        self.check_len(g.coords.len())?;
        if !self.contains(g) {
            return Err(Error::ElementShape { expected: self.rank(), found: g.coords.len() });
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.factors)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a.coords.iter().zip(&self.factors).map(|(&x, &n)| (n - x) % n).collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// `m · a` for a signed integer `m`.
    pub fn scale(&self, m: i64, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &n)| ((m.rem_euclid(n as i64) as u64) * x) % n)
                .collect(),
        }
    }

    /// Position of `g` in the mixed-radix enumeration.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.coords.iter().zip(&self.strides).map(|(&c, &s)| c as usize * s).sum()
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut coords = vec![0u64; self.rank()];
        for k in 0..self.rank() {
            coords[k] = (idx / self.strides[k]) as u64;
            idx %= self.strides[k];
        }
        GroupElement { coords }
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    /// Index of `a + b`, computed on indices.
    pub fn add_index(&self, a: usize, b: usize) -> usize {
        let mut out = 0usize;
        for k in 0..self.rank() {
            let n = self.factors[k] as usize;
            let s = self.strides[k];
            let x = (a / s) % n;
            let y = (b / s) % n;
            out += ((x + y) % n) * s;
        }
        out
    }

    pub fn neg_index(&self, a: usize) -> usize {
        let mut out = 0usize;
        for k in 0..self.rank() {
            let n = self.factors[k] as usize;
            let s = self.strides[k];
            let x = (a / s) % n;
            out += ((n - x) % n) * s;
        }
        out
    }

    pub fn sub_index(&self, a: usize, b: usize) -> usize {
        self.add_index(a, self.neg_index(b))
    }

    /// Numerator of `⟨g, χ⟩` over the group exponent.
    pub fn pairing_numerator(&self, g: &GroupElement, chi: &GroupElement) -> u64 {
        let e = self.exponent;
        let mut acc = 0u64;
        for k in 0..self.rank() {
            let n = self.factors[k];
            let term = (g.coords[k] * chi.coords[k]) % n;
            acc = (acc + term * (e / n)) % e;
        }
        acc
    }

    /// Numerator of `⟨g, χ⟩` for enumeration indices.
    pub fn pairing_numerator_index(&self, g: usize, chi: usize) -> u64 {
        let e = self.exponent;
        let mut acc = 0u64;
        for k in 0..self.rank() {
            let n = self.factors[k];
            let s = self.strides[k];
            let x = ((g / s) as u64) % n;
            let y = ((chi / s) as u64) % n;
            acc = (acc + ((x * y) % n) * (e / n)) % e;
        }
        acc
    }

    /// The canonical pairing `G × Ĝ → U(1)`, exact.
    pub fn pairing(&self, g: &GroupElement, chi: &GroupElement) -> Result<RootOfUnity> {
        self.check(g)?;
        self.check(chi)?;
        Ok(RootOfUnity::new(self.pairing_numerator(g, chi) as i64, self.exponent))
    }

    /// Double-dual evaluation `g ↦ ⟨g, ·⟩`, returned as the character of `Ĝ`
    /// it defines (same coordinates under the positional convention).
    pub fn double_dual_eval(&self, g: &GroupElement) -> GroupElement {
        g.clone()
    }

    /// Checks that a root-of-unity order `n` absorbs the exponent.
    pub fn check_order(&self, n: u64) -> Result<()> {
        if n == 0 || n % self.exponent != 0 {
            return Err(Error::OrderNotDivisible { order_n: n, exponent: self.exponent });
        }
        Ok(())
    }

    /// `⟨g, χ⟩` as a residue mod `n`, where `exponent | n`.
    pub fn pairing_mod(&self, g: &GroupElement, chi: &GroupElement, n: u64) -> u64 {
        self.pairing_numerator(g, chi) * (n / self.exponent) % n
    }

    pub fn pairing_mod_index(&self, g: usize, chi: usize, n: u64) -> u64 {
        self.pairing_numerator_index(g, chi) * (n / self.exponent) % n
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "Z/{n}")?;
        }
        Ok(())
    }
}

/// An element of a [`FiniteAbelianGroup`] (or of its dual), by coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// `exp(2πi q)` for a rational `q ∈ [0, 1)`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };

    /// `exp(2πi k/n)`. Panics if `n == 0`.
    pub fn new(k: i64, n: u64) -> Self {
        assert!(n > 0, "root of unity with zero order");
        let r = k.rem_euclid(n as i64) as u64;
        let d = gcd(r, n);
        RootOfUnity { num: r / d, den: n / d }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    /// The order of this root (the reduced denominator).
    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Numerator over an ambient order `n`, if the denominator divides `n`.
    pub fn in_order(&self, n: u64) -> Result<u64> {
        if n == 0 || n % self.den != 0 {
            return Err(Error::OrderNotDivisible { order_n: n, exponent: self.den });
        }
        Ok(self.num * (n / self.den))
    }

    /// Product of roots (sum of exponents mod 1).
    pub fn mul(self, other: RootOfUnity) -> RootOfUnity {
        let l = lcm(self.den, other.den);
        let a = self.num * (l / self.den) + other.num * (l / other.den);
        RootOfUnity::new(a as i64, l)
    }

    pub fn inv(self) -> RootOfUnity {
        RootOfUnity::new(-(self.num as i64), self.den)
    }

    pub fn pow(self, m: i64) -> RootOfUnity {
        let r = m.rem_euclid(self.den as i64) as u64;
        RootOfUnity::new(((self.num * r) % self.den) as i64, self.den)
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn to_complex(self) -> Complex64 {
        root_to_complex(self)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `exp(2πi q)` in double precision; the eighth roots are exact or
/// correctly rounded.
pub fn root_to_complex(q: RootOfUnity) -> Complex64 {
    phase_to_complex(q.num, q.den)
}

/// `exp(2πi k/n)` for `0 <= k < n`.
pub fn phase_to_complex(k: u64, n: u64) -> Complex64 {
    let k = k % n;
    if (4 * k) % n == 0 {
        return match 4 * k / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    // Fold into (-1/2, 1/2] so the angle is as small as possible.
    let signed = if 2 * k > n { k as f64 - n as f64 } else { k as f64 };
    let theta = 2.0 * core::f64::consts::PI * signed / n as f64;
    let (s, c) = libm::sincos(theta);
    Complex64::new(c, s)
}

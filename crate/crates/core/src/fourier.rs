//! Harmonic analysis on a finite abelian group.
//!
//! Counting measure on `G` in the forward direction and `1/|G|` on the
//! inverse, so that
//!
//! ```text
//! ft(f)(χ)   = Σ_g f(g) ⟨g, χ⟩
//! ift(F)(g)  = |G|⁻¹ Σ_χ F(χ) ⟨g, χ⟩⁻¹
//! ft(f ∗ h)  = ft(f) · ft(h)
//! ```

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::abelian::{phase_to_complex, FiniteAbelianGroup};
use crate::{Error, Result};

/// A complex function on a group, stored in enumeration order.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupFunction {
    group: FiniteAbelianGroup,
    values: Vec<Complex64>,
}

impl GroupFunction {
    pub fn new(group: FiniteAbelianGroup, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::LengthMismatch { expected: group.order(), found: values.len() });
        }
        Ok(Self { group, values })
    }

    pub fn zeros(group: FiniteAbelianGroup) -> Self {
        let n = group.order();
        Self { group, values: vec![Complex64::new(0.0, 0.0); n] }
    }

    /// Indicator of the element with enumeration index `idx`.
    pub fn delta(group: FiniteAbelianGroup, idx: usize) -> Self {
        let mut f = Self::zeros(group);
        f.values[idx] = Complex64::new(1.0, 0.0);
        f
    }

    pub fn constant(group: FiniteAbelianGroup, c: Complex64) -> Self {
        let n = group.order();
        Self { group, values: vec![c; n] }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Pointwise product.
    pub fn pointwise(&self, other: &GroupFunction) -> Result<GroupFunction> {
        same_group(&self.group, &other.group)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect();
        Ok(GroupFunction { group: self.group.clone(), values })
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(&self, other: &GroupFunction) -> f64 {
        max_abs_diff(&self.values, &other.values)
    }

    /// `Σ |f(g)|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum()
    }
}

pub(crate) fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn same_group(a: &FiniteAbelianGroup, b: &FiniteAbelianGroup) -> Result<()> {
    if a != b {
        return Err(Error::GroupMismatch { left: a.factors().to_vec(), right: b.factors().to_vec() });
    }
    Ok(())
}

/// `exp(2πi k/e)` for `k < e`.
fn phase_table(e: u64) -> Vec<Complex64> {
    (0..e).map(|k| phase_to_complex(k, e)).collect()
}

/// Forward transform by the defining double sum, `O(|G|²)`.
pub fn ft(f: &GroupFunction) -> GroupFunction {
    dense_transform(f, false)
}

/// Inverse transform by the defining double sum.
pub fn ift(f: &GroupFunction) -> GroupFunction {
    let mut out = dense_transform(f, true);
    let scale = 1.0 / f.group.order() as f64;
    for z in &mut out.values {
        *z *= scale;
    }
    out
}

fn dense_transform(f: &GroupFunction, inverse: bool) -> GroupFunction {
    let g = &f.group;
    let e = g.exponent();
    let phases = phase_table(e);
    let factors = g.factors();
    let r = factors.len();
    let mut out = vec![Complex64::new(0.0, 0.0); g.order()];
    let mut step = vec![0u64; r];
    let mut digits = vec![0u64; r];
    for (chi, slot) in out.iter_mut().enumerate() {
        // `⟨x, χ⟩` advances by `step[k]` when digit `k` of `x` does.
        for (k, c) in g.element_at(chi).coords().iter().enumerate() {
            let w = c * (e / factors[k]) % e;
            step[k] = if inverse { (e - w) % e } else { w };
        }
        digits.iter_mut().for_each(|d| *d = 0);
        let mut k = 0u64;
        let mut acc = Complex64::new(0.0, 0.0);
        for v in &f.values {
            acc += v * phases[k as usize];
            for j in (0..r).rev() {
                digits[j] += 1;
                k = (k + step[j]) % e;
                if digits[j] < factors[j] {
                    break;
                }
                digits[j] = 0;
                k = (k + e - step[j] * factors[j] % e) % e;
            }
        }
        *slot = acc;
    }
    GroupFunction { group: g.clone(), values: out }
}

/// `(f ∗ h)(x) = Σ_y f(x − y) h(y)`.
pub fn convolve(f: &GroupFunction, h: &GroupFunction) -> Result<GroupFunction> {
    same_group(&f.group, &h.group)?;
    let g = &f.group;
    let n = g.order();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (y, hv) in h.values.iter().enumerate() {
        if *hv == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (x, slot) in out.iter_mut().enumerate() {
            *slot += f.values[g.sub_index(x, y)] * hv;
        }
    }
    Ok(GroupFunction { group: g.clone(), values: out })
}

/// Forward transform one cyclic factor at a time: radix-2 Cooley–Tukey on
/// power-of-two factors, a direct sum on the others.
pub fn fast_ft(f: &GroupFunction) -> GroupFunction {
    let mut values = f.values.clone();
    separable_transform(&f.group, &mut values, false);
    GroupFunction { group: f.group.clone(), values }
}

/// Inverse of [`fast_ft`].
pub fn fast_ift(f: &GroupFunction) -> GroupFunction {
    let mut values = f.values.clone();
    separable_transform(&f.group, &mut values, true);
    let scale = 1.0 / f.group.order() as f64;
    for z in &mut values {
        *z *= scale;
    }
    GroupFunction { group: f.group.clone(), values }
}

/// Unnormalized transform of a raw vector laid out over `group`.
pub(crate) fn transform_in_place(group: &FiniteAbelianGroup, values: &mut [Complex64], inverse: bool) {
    separable_transform(group, values, inverse);
}

fn separable_transform(group: &FiniteAbelianGroup, values: &mut [Complex64], inverse: bool) {
    let total = group.order();
    let mut stride = total;
    let mut line = Vec::new();
    let mut scratch = Vec::new();
    for &n in group.factors() {
        let n = n as usize;
        // Elements of this axis sit `inner` apart.
        let inner = stride / n;
        stride = inner;
        let twiddles: Vec<Complex64> = (0..n as u64)
            .map(|k| {
                let k = if inverse { (n as u64 - k) % n as u64 } else { k };
                phase_to_complex(k, n as u64)
            })
            .collect();
        let block = inner * n;
        for outer in (0..total).step_by(block) {
            for off in 0..inner {
                line.clear();
                line.extend((0..n).map(|j| values[outer + off + j * inner]));
                if n.is_power_of_two() {
                    radix2(&mut line, &twiddles);
                } else {
                    direct(&line, &twiddles, &mut scratch);
                    line.copy_from_slice(&scratch);
                }
                for (j, v) in line.iter().enumerate() {
                    values[outer + off + j * inner] = *v;
                }
            }
        }
    }
}

fn direct(input: &[Complex64], twiddles: &[Complex64], out: &mut Vec<Complex64>) {
    let n = input.len();
    out.clear();
    out.extend((0..n).map(|k| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, v) in input.iter().enumerate() {
            acc += v * twiddles[(j * k) % n];
        }
        acc
    }));
}

/// In-place iterative radix-2 transform; `twiddles[k] = w^k` for the
/// primitive root `w` of order `buf.len()`.
fn radix2(buf: &mut [Complex64], twiddles: &[Complex64]) {
    let n = buf.len();
    if n <= 1 {
        return;
    }
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut len = 2;
    while len <= n {
        let step = n / len;
        let half = len / 2;
        for start in (0..n).step_by(len) {
            for k in 0..half {
                let w = twiddles[k * step];
                let a = buf[start + k];
                let b = buf[start + k + half] * w;
                buf[start + k] = a + b;
                buf[start + k + half] = a - b;
            }
        }
        len <<= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn grp(f: &[u64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(f).unwrap()
    }

    #[test]
    fn ft_examples() {
        let z2 = grp(&[2]);
        let f = GroupFunction::new(z2.clone(), vec![c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(ft(&f).values(), &[c(1.0, 0.0), c(1.0, 0.0)]);
        let f = GroupFunction::constant(z2.clone(), c(1.0, 0.0));
        assert!(ft(&f).max_abs_diff(&GroupFunction::new(z2, vec![c(2.0, 0.0), c(0.0, 0.0)]).unwrap()) < 1e-15);
        let z4 = grp(&[4]);
        let f = GroupFunction::delta(z4.clone(), 1);
        let want = GroupFunction::new(z4, vec![c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)]).unwrap();
        assert_eq!(ft(&f), want);
    }

    #[test]
    fn ift_examples() {
        let z8 = grp(&[8]);
        let d = GroupFunction::delta(z8, 0);
        assert!(ift(&ft(&d)).max_abs_diff(&d) < 1e-15);
        let z2 = grp(&[2]);
        let one = GroupFunction::constant(z2.clone(), c(1.0, 0.0));
        assert!(ift(&one).max_abs_diff(&GroupFunction::delta(z2, 0)) < 1e-15);
    }

    #[test]
    fn convolve_examples() {
        let z6 = grp(&[6]);
        let a = GroupFunction::delta(z6.clone(), 2);
        let b = GroupFunction::delta(z6.clone(), 5);
        assert_eq!(convolve(&a, &b).unwrap(), GroupFunction::delta(z6.clone(), 1));
        let f = GroupFunction::new(z6.clone(), (0..6).map(|k| c(k as f64, -1.0)).collect()).unwrap();
        assert_eq!(convolve(&f, &GroupFunction::delta(z6, 0)).unwrap(), f);
        assert!(convolve(&f, &GroupFunction::delta(grp(&[2, 3]), 0)).is_err());
    }

    #[test]
    fn fast_matches_standard_basis() {
        let z8 = grp(&[8]);
        for i in 0..8 {
            let d = GroupFunction::delta(z8.clone(), i);
            assert!(fast_ft(&d).max_abs_diff(&ft(&d)) < 1e-12);
        }
        let t = GroupFunction::constant(FiniteAbelianGroup::trivial(), c(3.0, 1.0));
        assert_eq!(fast_ft(&t), t);
    }

    #[test]
    fn length_is_validated() {
        assert!(GroupFunction::new(grp(&[3]), vec![c(0.0, 0.0)]).is_err());
    }
}

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::Rng;

use crate::abelian::{phase_to_complex, FiniteAbelianGroup, GroupElement};
use crate::bundles::{RingPairData, TripleData};
use crate::fourier::{max_abs_diff, transform_in_place};
use crate::topology::Cochain;
use crate::{Error, Result};

fn check_shape(values: &[Vec<Complex64>], vertices: usize, order: usize) -> Result<()> {
    if values.len() != vertices {
        return Err(Error::LengthMismatch { expected: vertices, found: values.len() });
    }
    for v in values {
        if v.len() != order {
            return Err(Error::LengthMismatch { expected: order, found: v.len() });
        }
        if v.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidBundleData("non-finite section value".into()));
        }
    }
    Ok(())
}

fn random_values<R: Rng + ?Sized>(vertices: usize, order: usize, rng: &mut R) -> Vec<Vec<Complex64>> {
    (0..vertices)
        .map(|_| (0..order).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect())
        .collect()
}

pub(crate) fn max_diff_rows(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> f64 {
    a.iter().zip(b).map(|(x, y)| max_abs_diff(x, y)).fold(0.0, f64::max)
}

/// Classical transform of one chart vector.
pub(crate) fn chart_ft(group: &FiniteAbelianGroup, v: &[Complex64]) -> Vec<Complex64> {
    let mut out = v.to_vec();
    transform_in_place(group, &mut out, false);
    out
}

pub(crate) fn chart_ift(group: &FiniteAbelianGroup, v: &[Complex64]) -> Vec<Complex64> {
    let mut out = v.to_vec();
    transform_in_place(group, &mut out, true);
    let scale = 1.0 / group.order() as f64;
    out.iter_mut().for_each(|z| *z *= scale);
    out
}

/// `Σ_h a(x − h) b(h) w(h)` on one chart.
fn chart_convolve(group: &FiniteAbelianGroup, a: &[Complex64], b: &[Complex64], w: impl Fn(usize) -> Complex64) -> Vec<Complex64> {
    let n = group.order();
    let mut out = alloc::vec![Complex64::new(0.0, 0.0); n];
    for h in 0..n {
        let bh = b[h] * w(h);
        if bh == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (x, slot) in out.iter_mut().enumerate() {
            *slot += a[group.sub_index(x, h)] * bh;
        }
    }
    out
}

/// A section of the ring bundle `F₀^ℂ`, stored chart-wise.
///
/// Each vertex value may be expressed relative to a frame `ψ ∈ Ĝ`; the
/// standard-frame values are `α₀(g) = ⟨g, ψ⟩ α_ψ(g)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RingElement {
    ring: Arc<RingPairData>,
    frames: Vec<GroupElement>,
    values: Vec<Vec<Complex64>>,
}

impl RingElement {
    pub fn new(ring: Arc<RingPairData>, values: Vec<Vec<Complex64>>) -> Result<Self> {
        let frames = alloc::vec![ring.group().zero(); ring.base().vertices().len()];
        Self::with_frames(ring, frames, values)
    }

    pub fn with_frames(ring: Arc<RingPairData>, frames: Vec<GroupElement>, values: Vec<Vec<Complex64>>) -> Result<Self> {
        let nv = ring.base().vertices().len();
        check_shape(&values, nv, ring.group().order())?;
        if frames.len() != nv {
            return Err(Error::LengthMismatch { expected: nv, found: frames.len() });
        }
        for f in &frames {
            ring.group().check(f)?;
        }
        Ok(Self { ring, frames, values })
    }

    pub fn zero(ring: Arc<RingPairData>) -> Self {
        let nv = ring.base().vertices().len();
        let n = ring.group().order();
        Self::new(ring, alloc::vec![alloc::vec![Complex64::new(0.0, 0.0); n]; nv]).unwrap()
    }

    /// `δ_a` at every vertex, standard frames.
    pub fn delta(ring: Arc<RingPairData>, a: &GroupElement) -> Result<Self> {
        ring.group().check(a)?;
        let mut e = Self::zero(ring);
        let idx = e.ring.group().index_of(a);
        for v in &mut e.values {
            v[idx] = Complex64::new(1.0, 0.0);
        }
        Ok(e)
    }

    pub fn random<R: Rng + ?Sized>(ring: Arc<RingPairData>, rng: &mut R) -> Self {
        let values = random_values(ring.base().vertices().len(), ring.group().order(), rng);
        Self::new(ring, values).unwrap()
    }

    /// Random values in random frames.
    pub fn random_framed<R: Rng + ?Sized>(ring: Arc<RingPairData>, rng: &mut R) -> Self {
        let group = ring.group().clone();
        let frames = (0..ring.base().vertices().len()).map(|_| group.element_at(rng.gen_range(0..group.order()))).collect();
        let values = random_values(ring.base().vertices().len(), group.order(), rng);
        Self::with_frames(ring, frames, values).unwrap()
    }

    pub fn ring(&self) -> &Arc<RingPairData> {
        &self.ring
    }

    pub fn frames(&self) -> &[GroupElement] {
        &self.frames
    }

    pub fn values(&self) -> &[Vec<Complex64>] {
        &self.values
    }

    fn group(&self) -> &FiniteAbelianGroup {
        self.ring.group()
    }

    fn frame_phase(&self, v: usize, g: usize) -> Complex64 {
        let group = self.group();
        let k = group.pairing_numerator(&group.element_at(g), &self.frames[v]);
        phase_to_complex(k, group.exponent())
    }

    /// The same element with all frames set to zero.
    pub fn in_standard_frame(&self) -> RingElement {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(v, row)| row.iter().enumerate().map(|(g, z)| self.frame_phase(v, g) * z).collect())
            .collect();
        RingElement { ring: self.ring.clone(), frames: alloc::vec![self.group().zero(); self.frames.len()], values }
    }

    pub fn max_abs_diff(&self, other: &RingElement) -> f64 {
        max_diff_rows(&self.in_standard_frame().values, &other.in_standard_frame().values)
    }

    pub(crate) fn same_ring(&self, ring: &RingPairData) -> Result<()> {
        if *self.ring != *ring {
            return Err(Error::ParentMismatch("ring elements of different ring pairs"));
        }
        Ok(())
    }
}

/// Twisted convolution `α ∗_μ β`, expressed in the frames of `α`:
/// `(α ∗ β)(x) = Σ_h α(x − h) β(h) ⟨h, ψ_β − ψ_α⟩`.
pub fn convolve_ring(a: &RingElement, b: &RingElement) -> Result<RingElement> {
    a.same_ring(&b.ring)?;
    let group = a.group();
    let values = (0..a.values.len())
        .map(|v| {
            let twist = group.sub(&b.frames[v], &a.frames[v]);
            chart_convolve(group, &a.values[v], &b.values[v], |h| {
                phase_to_complex(group.pairing_numerator(&group.element_at(h), &twist), group.exponent())
            })
        })
        .collect();
    Ok(RingElement { ring: a.ring.clone(), frames: a.frames.clone(), values })
}

/// `α*(g) = conj(α(−g))`.
pub fn star(a: &RingElement) -> RingElement {
    let group = a.group();
    let values = a
        .values
        .iter()
        .map(|row| (0..row.len()).map(|g| row[group.neg_index(g)].conj()).collect())
        .collect();
    RingElement { ring: a.ring.clone(), frames: a.frames.clone(), values }
}

/// `sup_b Σ_g |α(b, g)|`.
pub fn norm_inf1(a: &RingElement) -> f64 {
    a.values.iter().map(|row| row.iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// A function on the total space of a `Ĝ`-bundle (an element of `C₀(Ê)`),
/// stored chart-wise.
#[derive(Clone, Debug, PartialEq)]
pub struct DualFunction {
    cocycle: Cochain,
    values: Vec<Vec<Complex64>>,
}

impl DualFunction {
    pub fn new(cocycle: Cochain, values: Vec<Vec<Complex64>>) -> Result<Self> {
        check_shape(&values, cocycle.complex().vertices().len(), cocycle.coeffs().order())?;
        Ok(Self { cocycle, values })
    }

    /// The `Ĝ`-valued cocycle of the space this function lives on.
    pub fn cocycle(&self) -> &Cochain {
        &self.cocycle
    }

    pub fn values(&self) -> &[Vec<Complex64>] {
        &self.values
    }

    pub fn max_abs_diff(&self, other: &DualFunction) -> f64 {
        max_diff_rows(&self.values, &other.values)
    }

    pub fn pointwise(&self, other: &DualFunction) -> Result<DualFunction> {
        if self.cocycle != other.cocycle {
            return Err(Error::ParentMismatch("functions on different dual bundles"));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x * y).collect())
            .collect();
        Ok(DualFunction { cocycle: self.cocycle.clone(), values })
    }

    pub fn conj(&self) -> DualFunction {
        let values = self.values.iter().map(|r| r.iter().map(|z| z.conj()).collect()).collect();
        DualFunction { cocycle: self.cocycle.clone(), values }
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Gelfand transform of a ring element: the classical transform of its
/// standard-frame values, a function on the dual bundle with cocycle `−χ`.
pub fn ft_ring(a: &RingElement) -> DualFunction {
    let std = a.in_standard_frame();
    let group = a.group();
    let values = std.values.iter().map(|row| chart_ft(group, row)).collect();
    DualFunction { cocycle: a.ring.chi().neg(), values }
}

/// Inverse of [`ft_ring`] into the ring pair whose dual cocycle is `−c`.
pub fn ift_ring(ring: Arc<RingPairData>, f: &DualFunction) -> Result<RingElement> {
    if ring.chi().neg() != f.cocycle {
        return Err(Error::ParentMismatch("function does not live on the dual of this ring"));
    }
    let group = ring.group().clone();
    let values = f.values.iter().map(|row| chart_ift(&group, row)).collect();
    RingElement::new(ring, values)
}

/// C*-norm realized as the sup of the Gelfand transform.
pub fn cstar_norm(a: &RingElement) -> f64 {
    ft_ring(a).sup_norm()
}

/// A section of `F^ℂ` over `E`, stored chart-wise in the triple's charts.
#[derive(Clone, Debug, PartialEq)]
pub struct Section {
    triple: Arc<TripleData>,
    ring: Arc<RingPairData>,
    values: Vec<Vec<Complex64>>,
}

impl Section {
    pub fn new(triple: Arc<TripleData>, values: Vec<Vec<Complex64>>) -> Result<Self> {
        check_shape(&values, triple.base().vertices().len(), triple.group().order())?;
        let ring = Arc::new(triple.ring_pair());
        Ok(Self { triple, ring, values })
    }

    pub fn zero(triple: Arc<TripleData>) -> Self {
        let nv = triple.base().vertices().len();
        let n = triple.group().order();
        Self::new(triple, alloc::vec![alloc::vec![Complex64::new(0.0, 0.0); n]; nv]).unwrap()
    }

    pub fn random<R: Rng + ?Sized>(triple: Arc<TripleData>, rng: &mut R) -> Self {
        let values = random_values(triple.base().vertices().len(), triple.group().order(), rng);
        Self::new(triple, values).unwrap()
    }

    pub fn triple(&self) -> &Arc<TripleData> {
        &self.triple
    }

    /// The ring pair acting on this module, shared with its ring elements.
    pub fn ring(&self) -> &Arc<RingPairData> {
        &self.ring
    }

    pub fn values(&self) -> &[Vec<Complex64>] {
        &self.values
    }

    pub fn max_abs_diff(&self, other: &Section) -> f64 {
        max_diff_rows(&self.values, &other.values)
    }

    fn same_triple(&self, other: &Section) -> Result<()> {
        if *self.triple != *other.triple {
            return Err(Error::ParentMismatch("sections of different triples"));
        }
        Ok(())
    }
}

/// A section of `F̂^ℂ` over `Ê`, stored chart-wise.
#[derive(Clone, Debug, PartialEq)]
pub struct DualSection {
    triple: Arc<TripleData>,
    values: Vec<Vec<Complex64>>,
}

impl DualSection {
    pub fn new(triple: Arc<TripleData>, values: Vec<Vec<Complex64>>) -> Result<Self> {
        check_shape(&values, triple.base().vertices().len(), triple.group().order())?;
        Ok(Self { triple, values })
    }

    pub fn triple(&self) -> &Arc<TripleData> {
        &self.triple
    }

    pub fn values(&self) -> &[Vec<Complex64>] {
        &self.values
    }

    pub fn max_abs_diff(&self, other: &DualSection) -> f64 {
        max_diff_rows(&self.values, &other.values)
    }

    /// Pointwise action of `C₀(Ê)`.
    pub fn scale_by(&self, f: &DualFunction) -> Result<DualSection> {
        if &f.cocycle != self.triple.chi_hat() {
            return Err(Error::ParentMismatch("function is not on Ê"));
        }
        let values = self
            .values
            .iter()
            .zip(&f.values)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x * y).collect())
            .collect();
        Ok(DualSection { triple: self.triple.clone(), values })
    }
}

/// Right action `γ ∗_ρ α`; in the triple's charts
/// `(γ ∗ α)(x) = Σ_h γ(x − h) α₀(h)`.
pub fn module_action(gamma: &Section, a: &RingElement) -> Result<Section> {
    a.same_ring(&gamma.ring)?;
    let group = gamma.triple.group();
    let a0 = a.in_standard_frame();
    let one = Complex64::new(1.0, 0.0);
    let values = gamma
        .values
        .iter()
        .zip(&a0.values)
        .map(|(g, b)| chart_convolve(group, g, b, |_| one))
        .collect();
    Ok(Section { triple: gamma.triple.clone(), ring: gamma.ring.clone(), values })
}

/// `⟨γ, δ⟩_c(g) = Σ_h conj(γ(h)) δ(h + g)`, conjugate-linear in `γ`.
pub fn inner_c(gamma: &Section, delta: &Section) -> Result<RingElement> {
    gamma.same_triple(delta)?;
    let group = gamma.triple.group();
    let n = group.order();
    let values = gamma
        .values
        .iter()
        .zip(&delta.values)
        .map(|(a, b)| {
            (0..n)
                .map(|g| (0..n).map(|h| a[h].conj() * b[group.add_index(h, g)]).sum())
                .collect()
        })
        .collect();
    RingElement::new(gamma.ring.clone(), values)
}

/// Fourier transform of a section based on the triple; in each chart the
/// classical transform `γ̂(χ) = Σ_h γ(h) ⟨h, χ⟩`.
pub fn ft_triple(gamma: &Section) -> DualSection {
    let group = gamma.triple.group();
    let values = gamma.values.iter().map(|row| chart_ft(group, row)).collect();
    DualSection { triple: gamma.triple.clone(), values }
}

/// Inverse of [`ft_triple`].
pub fn ift_triple(hat: &DualSection) -> Section {
    let group = hat.triple.group();
    let values = hat.values.iter().map(|row| chart_ift(group, row)).collect();
    Section::new(hat.triple.clone(), values).expect("shape preserved")
}

/// `⟨γ̂, δ̂⟩₀ = conj(γ̂) δ̂` pointwise, an element of `C₀(Ê)`.
pub fn inner_0(a: &DualSection, b: &DualSection) -> Result<DualFunction> {
    if *a.triple != *b.triple {
        return Err(Error::ParentMismatch("dual sections of different triples"));
    }
    let values = a
        .values
        .iter()
        .zip(&b.values)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.conj() * q).collect())
        .collect();
    Ok(DualFunction { cocycle: a.triple.chi_hat().clone(), values })
}

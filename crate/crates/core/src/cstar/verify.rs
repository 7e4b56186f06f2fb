use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bundles::TripleData;
use crate::cstar::elements::{chart_ft, max_diff_rows};
use crate::cstar::{
    convolve_ring, ft_ring, ft_triple, inner_0, inner_c, module_action, star, RingElement, Section, TransportOp,
};
use crate::fourier::max_abs_diff;
use crate::Result;

/// Names of the identities checked by [`verify_main_theorem`], in report order.
pub const IDENTITY_NAMES: [&str; 8] = [
    "inner_product",
    "algebra_morphism",
    "module_action",
    "chart_equivariance",
    "positivity",
    "star",
    "module_linearity",
    "hermitian",
];

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub max_deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MainTheoremReport {
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<IdentityCheck>,
}

impl MainTheoremReport {
    pub fn max_deviation(&self) -> f64 {
        self.checks.iter().map(|c| c.max_deviation).fold(0.0, f64::max)
    }

    pub fn passed(&self, tolerance: f64) -> bool {
        self.checks.iter().all(|c| c.max_deviation <= tolerance)
    }

    pub fn deviation(&self, name: &str) -> Option<f64> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.max_deviation)
    }
}

/// Checks on random sections that the Fourier transform of the triple is
/// an isomorphism of Hilbert modules compatible with every chart change.
pub fn verify_main_theorem(t: &TripleData, trials: usize, seed: u64) -> Result<MainTheoremReport> {
    let triple = Arc::new(t.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dev = [0.0f64; 8];
    let base = t.base().clone();
    let group = t.group().clone();
    let edges: Vec<(u32, u32, usize, usize)> = base
        .simplices(1)
        .iter()
        .map(|e| (e[0], e[1], base.vertex_index(e[0]).unwrap(), base.vertex_index(e[1]).unwrap()))
        .collect();

    for _ in 0..trials {
        let gamma = Section::random(triple.clone(), &mut rng);
        let delta = Section::random(triple.clone(), &mut rng);
        let ring = gamma.ring().clone();
        let a = RingElement::random_framed(ring.clone(), &mut rng);
        let b = RingElement::random_framed(ring.clone(), &mut rng);

        let gh = ft_triple(&gamma);
        let dh = ft_triple(&delta);
        let ah = ft_ring(&a);
        let bh = ft_ring(&b);

        let ip = inner_c(&gamma, &delta)?;
        dev[0] = dev[0].max(ft_ring(&ip).max_abs_diff(&inner_0(&gh, &dh)?));

        dev[1] = dev[1].max(ft_ring(&convolve_ring(&a, &b)?).max_abs_diff(&ah.pointwise(&bh)?));

        dev[2] = dev[2].max(ft_triple(&module_action(&gamma, &a)?).max_abs_diff(&gh.scale_by(&ah)?));

        let a0 = a.in_standard_frame();
        for &(va, vb, ia, _) in &edges {
            let sec = TransportOp::section(t, va, vb)?;
            let dual = TransportOp::dual_section(t, va, vb)?;
            let lhs = chart_ft(&group, &sec.apply(&gamma.values()[ia])?);
            let rhs = dual.apply(&gh.values()[ia])?;
            dev[3] = dev[3].max(max_abs_diff(&lhs, &rhs));

            let rop = TransportOp::ring(&ring, va, vb)?;
            let fop = TransportOp::dual_function(ah.cocycle(), t.order_n(), va, vb)?;
            let lhs = chart_ft(&group, &rop.apply(&a0.values()[ia])?);
            let rhs = fop.apply(&ah.values()[ia])?;
            dev[3] = dev[3].max(max_abs_diff(&lhs, &rhs));
        }

        let self_ip = ft_ring(&inner_c(&gamma, &gamma)?);
        for z in self_ip.values().iter().flatten() {
            dev[4] = dev[4].max((-z.re).max(0.0)).max(z.im.abs());
        }

        dev[5] = dev[5].max(ft_ring(&star(&a)).max_abs_diff(&ah.conj()));

        let lhs = inner_c(&gamma, &module_action(&delta, &a)?)?;
        let rhs = convolve_ring(&ip, &a)?;
        dev[6] = dev[6].max(lhs.max_abs_diff(&rhs));

        let swapped = inner_c(&delta, &gamma)?;
        dev[7] = dev[7].max(max_diff_rows(star(&ip).values(), swapped.values()));
    }

    Ok(MainTheoremReport {
        trials,
        seed,
        checks: IDENTITY_NAMES.iter().zip(dev).map(|(&name, max_deviation)| IdentityCheck { name, max_deviation }).collect(),
    })
}

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::abelian::GroupElement;
use crate::bundles::classes::{apply_hom, h1_mu, orbit_analysis, pon_torsor, pullback_on_classes, span, FullExtensionData, TorsorReport};
use crate::bundles::{mod_to_pon, module_pair_exists, validate_pair, ModuleExistence, PairData, TripleData};
use crate::topology::{cohomology, cup01, cup10, cup11, total_space, CoboundarySolver, Cochain, CohomologyGroup};
use crate::{Error, Result};

/// `ker(p*) ∩ ker(p̂*)` for the coverings of the given cocycles, as a sorted
/// list of class coordinates in `h1`.
fn joint_kernel(h1: &CohomologyGroup, cocycles: &[&Cochain], n: u64) -> Result<Vec<GroupElement>> {
    let mut homs = Vec::new();
    for c in cocycles {
        let cov = total_space(h1.complex(), c)?;
        homs.push(pullback_on_classes(&cov, h1, n)?);
    }
    Ok(h1
        .classes()
        .filter(|c| homs.iter().all(|(target, imgs)| apply_hom(target.class_group(), imgs, c).is_zero()))
        .collect())
}

/// Classes of full extensions of the pairs of `t0`, as an `N/M`-torsor.
///
/// A top-valid class is a triple `(g, χ̂, s)` whose pair and dual pair are
/// isomorphic to those of `t0` over the identity of `E` and `Ê`; two are
/// identified when related by a full isomorphism, which shifts `s` by
/// coboundaries and by the cup products `c ∪ χ̂` and `g ∪ ĉ` with
/// `c ∈ H⁰(B; G)`, `ĉ ∈ H⁰(B; Ĝ)`.
pub fn full_extension_classes(t0: &TripleData) -> Result<TorsorReport> {
    let base = t0.base();
    let n = t0.order_n();
    let h1 = h1_mu(base, n)?;
    let classes = h1.class_group();
    let kernel = joint_kernel(&h1, &[t0.g(), t0.chi_hat()], n)?;

    let h0 = cohomology(base, 0, t0.group())?;
    let mut gens = Vec::new();
    for c in h0.representatives() {
        gens.push(h1.reduce(&cup01(&c, t0.chi_hat(), n)?)?);
        gens.push(h1.reduce(&cup10(t0.g(), &c, n)?)?);
    }
    let shifts_span: BTreeSet<GroupElement> = span(classes, &gens).into_keys().collect();
    let image: Vec<GroupElement> = kernel.iter().filter(|c| shifts_span.contains(*c)).cloned().collect();

    let mut covered = BTreeSet::new();
    let mut cosets = Vec::new();
    for k in &kernel {
        if covered.contains(k) {
            continue;
        }
        for m in &image {
            covered.insert(classes.add(k, m));
        }
        cosets.push(k.clone());
    }

    let shifts = cosets.iter().map(|c| h1.representative(c)).collect::<Result<Vec<_>>>()?;
    let reps = shifts.iter().map(|z| t0.s().add(z)).collect::<Result<Vec<_>>>()?;
    let same = |a: &Cochain, b: &Cochain| -> Result<bool> { Ok(shifts_span.contains(&h1.reduce(&a.sub(b)?)?)) };
    let (orbits, free, transitive) = orbit_analysis(&reps, &shifts, same)?;
    Ok(TorsorReport {
        acting_order: cosets.len(),
        acting_factors: None,
        representatives: reps,
        coordinates: cosets.clone(),
        orbits,
        free,
        transitive,
        full: Some(FullExtensionData {
            h1_factors: h1.invariant_factors().to_vec(),
            kernel,
            image,
            coset_representatives: cosets,
        }),
    })
}

/// A dual bundle class for which the pair extends to a triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionCandidate {
    /// Coordinates of `[Ê]` in `H¹(B; Ĝ)`.
    pub dual_class: GroupElement,
    pub chi_hat: Cochain,
    /// A triple whose pair is isomorphic to the given one.
    pub witness: TripleData,
    /// All such triples over `(E, Ê)` up to isomorphism, a `ker p*`-torsor.
    pub classes: TorsorReport,
}

/// Searches the classes of `H¹(B; Ĝ)` for duals `Ê` extending `F` to a triple.
pub fn triples_extending_pair(f: &PairData) -> Result<Vec<ExtensionCandidate>> {
    if !validate_pair(f).is_valid() {
        return Err(Error::InvalidBundleData("F violates the pair cocycle law".into()));
    }
    let base = f.base();
    let n = f.order_n();
    let g = f.g();
    let h1g = cohomology(base, 1, f.group())?;
    let h1 = h1_mu(base, n)?;
    let kernel = joint_kernel(&h1, &[g], n)?;
    let solver = CoboundarySolver::new(base, 2)?;
    let mut out = Vec::new();
    for class in h1g.classes() {
        let chi_hat = h1g.representative(&class)?;
        if solver.solve(&cup11(g, &chi_hat, n)?)?.is_none() {
            continue;
        }
        if let ModuleExistence::Exists(m) = module_pair_exists(g, &chi_hat.neg(), f)? {
            let witness = mod_to_pon(&m)?;
            let classes = pon_torsor(&h1, witness.s(), &kernel)?;
            out.push(ExtensionCandidate { dual_class: class, chi_hat, witness, classes });
        }
    }
    Ok(out)
}

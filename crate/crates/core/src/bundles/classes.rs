use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::abelian::{FiniteAbelianGroup, GroupElement};
use crate::topology::{cohomology, pullback_map, CoboundarySolver, Cochain, CohomologyGroup, CoveringSpace, SimplicialComplex};
use crate::Result;

/// `H¹(B; μ_N)`.
pub(crate) fn h1_mu(base: &Arc<SimplicialComplex>, n: u64) -> Result<CohomologyGroup> {
    cohomology(base, 1, &FiniteAbelianGroup::cyclic(n)?)
}

/// The subgroup generated by `gens`, each element with one coefficient
/// vector expressing it.
pub(crate) fn span(group: &FiniteAbelianGroup, gens: &[GroupElement]) -> BTreeMap<GroupElement, Vec<u64>> {
    let mut seen = BTreeMap::new();
    let mut queue = VecDeque::new();
    seen.insert(group.zero(), vec![0u64; gens.len()]);
    queue.push_back(group.zero());
    while let Some(x) = queue.pop_front() {
        let coeffs = seen[&x].clone();
        for (j, g) in gens.iter().enumerate() {
            let y = group.add(&x, g);
            if !seen.contains_key(&y) {
                let mut c = coeffs.clone();
                c[j] += 1;
                seen.insert(y.clone(), c);
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Linear combination of class representatives.
pub(crate) fn combine(base: &Cochain, reps: &[Cochain], coeffs: &[u64]) -> Result<Cochain> {
    let mut acc = base.clone();
    for (r, &c) in reps.iter().zip(coeffs) {
        acc = acc.add(&r.scale(c as i64))?;
    }
    Ok(acc)
}

/// Finds a base 1-cocycle `z` with `[p* z] = [diff]` in `H¹(E; μ_N)`.
/// On failure returns the class of `diff`.
pub(crate) fn perp_shift(cov: &CoveringSpace, diff: &Cochain, n: u64) -> Result<core::result::Result<Cochain, GroupElement>> {
    let h1e = cohomology(cov.total(), 1, &FiniteAbelianGroup::cyclic(n)?)?;
    let h1b = h1_mu(cov.base(), n)?;
    let target = h1e.reduce(diff)?;
    let reps = h1b.representatives();
    let gens = reps.iter().map(|r| h1e.reduce(&pullback_map(cov, r)?)).collect::<Result<Vec<_>>>()?;
    let reachable = span(h1e.class_group(), &gens);
    match reachable.get(&target) {
        Some(coeffs) => {
            let zero = Cochain::zero(cov.base().clone(), 1, FiniteAbelianGroup::cyclic(n)?);
            Ok(Ok(combine(&zero, &reps, coeffs)?))
        }
        None => Ok(Err(target)),
    }
}

/// The homomorphism `H¹(B; μ_N) → H¹(E; μ_N)` on class coordinates.
pub(crate) fn pullback_on_classes(
    cov: &CoveringSpace,
    h1b: &CohomologyGroup,
    n: u64,
) -> Result<(CohomologyGroup, Vec<GroupElement>)> {
    let h1e = cohomology(cov.total(), 1, &FiniteAbelianGroup::cyclic(n)?)?;
    let imgs = h1b
        .representatives()
        .iter()
        .map(|r| h1e.reduce(&pullback_map(cov, r)?))
        .collect::<Result<Vec<_>>>()?;
    Ok((h1e, imgs))
}

/// Image of a class under a homomorphism given on generators.
pub(crate) fn apply_hom(target: &FiniteAbelianGroup, imgs: &[GroupElement], class: &GroupElement) -> GroupElement {
    let mut acc = target.zero();
    for (img, &c) in imgs.iter().zip(class.coords()) {
        acc = target.add(&acc, &target.scale(c as i64, img));
    }
    acc
}

/// One orbit of a group action on a finite set of classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Index into [`TorsorReport::representatives`].
    pub representative: usize,
    pub size: usize,
    pub stabilizer: usize,
}

/// Data specific to the classification of full extensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullExtensionData {
    /// Invariant factors of `H¹(B; μ_N)`.
    pub h1_factors: Vec<u64>,
    /// `N(E, Ê) = ker p* ∩ ker p̂*`, as class coordinates.
    pub kernel: Vec<GroupElement>,
    /// `M(E, Ê)`: the part of `N` reached by cup products with `H⁰`.
    pub image: Vec<GroupElement>,
    /// One element of `N` per coset of `M`.
    pub coset_representatives: Vec<GroupElement>,
}

/// A finite set of classes with a group acting on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsorReport {
    pub acting_order: usize,
    /// Invariant factors of the acting group when it is a full cohomology
    /// group; `None` for a quotient `N/M`.
    pub acting_factors: Option<Vec<u64>>,
    /// One cochain `s` per class, in lexicographic order of coordinates.
    pub representatives: Vec<Cochain>,
    /// Coordinates of each class relative to the first.
    pub coordinates: Vec<GroupElement>,
    pub orbits: Vec<Orbit>,
    pub free: bool,
    pub transitive: bool,
    pub full: Option<FullExtensionData>,
}

impl TorsorReport {
    pub fn class_count(&self) -> usize {
        self.representatives.len()
    }

    /// `|orbit| · |stabilizer| = |acting group|` for every orbit.
    pub fn orbit_stabilizer_holds(&self) -> bool {
        self.orbits.iter().all(|o| o.size * o.stabilizer == self.acting_order)
    }
}

/// Orbit bookkeeping for `a · s = s + shift(a)` on `reps`, with classes
/// compared by `same`.
pub(crate) fn orbit_analysis(
    reps: &[Cochain],
    shifts: &[Cochain],
    same: impl Fn(&Cochain, &Cochain) -> Result<bool>,
) -> Result<(Vec<Orbit>, bool, bool)> {
    let mut assigned = vec![false; reps.len()];
    let mut orbits = Vec::new();
    let mut closed = true;
    for i in 0..reps.len() {
        if assigned[i] {
            continue;
        }
        let mut members = BTreeSet::new();
        let mut stabilizer = 0;
        for a in shifts {
            let y = reps[i].add(a)?;
            let mut hit = None;
            for (j, r) in reps.iter().enumerate() {
                if same(&y, r)? {
                    hit = Some(j);
                    break;
                }
            }
            match hit {
                Some(j) => {
                    if j == i {
                        stabilizer += 1;
                    }
                    members.insert(j);
                }
                None => closed = false,
            }
        }
        for &j in &members {
            assigned[j] = true;
        }
        orbits.push(Orbit { representative: i, size: members.len(), stabilizer });
    }
    let free = orbits.iter().all(|o| o.stabilizer == 1);
    let transitive = closed && orbits.len() == 1;
    Ok((orbits, free, transitive))
}

/// Classes `s0 + rep(a)` for the listed `a ∈ H¹(B; μ_N)`, compared up to
/// `μ_N` gauge, with the `H¹` action analysed explicitly.
pub(crate) fn pon_torsor(h1: &CohomologyGroup, s0: &Cochain, acting: &[GroupElement]) -> Result<TorsorReport> {
    let mut acting = acting.to_vec();
    acting.sort();
    let shifts = acting.iter().map(|a| h1.representative(a)).collect::<Result<Vec<_>>>()?;
    let reps = shifts.iter().map(|z| s0.add(z)).collect::<Result<Vec<_>>>()?;
    let solver = CoboundarySolver::new(h1.complex(), 1)?;
    let same = |a: &Cochain, b: &Cochain| -> Result<bool> { Ok(solver.solve(&a.sub(b)?)?.is_some()) };
    let (orbits, free, transitive) = orbit_analysis(&reps, &shifts, same)?;
    let full_group = acting.len() == h1.order();
    Ok(TorsorReport {
        acting_order: acting.len(),
        acting_factors: if full_group { Some(h1.invariant_factors().to_vec()) } else { None },
        representatives: reps,
        coordinates: acting,
        orbits,
        free,
        transitive,
        full: None,
    })
}

use crate::abelian::{FiniteAbelianGroup, GroupElement, RootOfUnity};
use crate::Result;

/// An automorphism `(g, t, χ)` of the trivial triple, acting on the fibre
/// `G × U(1)` of `F` by `(h, z) ↦ (h + g, t ⟨h, χ⟩ z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PonAutElement {
    group: FiniteAbelianGroup,
    shift: GroupElement,
    phase: RootOfUnity,
    character: GroupElement,
}

impl PonAutElement {
    pub fn new(group: &FiniteAbelianGroup, shift: GroupElement, phase: RootOfUnity, character: GroupElement) -> Result<Self> {
        group.check(&shift)?;
        group.check(&character)?;
        Ok(Self { group: group.clone(), shift, phase, character })
    }

    pub fn identity(group: &FiniteAbelianGroup) -> Self {
        Self { group: group.clone(), shift: group.zero(), phase: RootOfUnity::ONE, character: group.zero() }
    }

    pub fn shift(&self) -> &GroupElement {
        &self.shift
    }

    pub fn phase(&self) -> RootOfUnity {
        self.phase
    }

    pub fn character(&self) -> &GroupElement {
        &self.character
    }

    fn pair(&self, a: &GroupElement, b: &GroupElement) -> RootOfUnity {
        RootOfUnity::new(self.group.pairing_numerator(a, b) as i64, self.group.exponent())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PonAutElement) -> PonAutElement {
        let twist = self.pair(&other.shift, &self.character);
        PonAutElement {
            group: self.group.clone(),
            shift: self.group.add(&self.shift, &other.shift),
            phase: self.phase.mul(other.phase).mul(twist),
            character: self.group.add(&self.character, &other.character),
        }
    }

    pub fn inverse(&self) -> PonAutElement {
        let g = self.group.neg(&self.shift);
        let chi = self.group.neg(&self.character);
        // (g, t, χ)⁻¹ = (−g, t⁻¹⟨g, χ⟩, −χ)
        let phase = self.phase.inv().mul(self.pair(&self.shift, &self.character));
        PonAutElement { group: self.group.clone(), shift: g, phase, character: chi }
    }

    /// Action on a fibre point `(h, z)`.
    pub fn act(&self, h: &GroupElement, z: RootOfUnity) -> (GroupElement, RootOfUnity) {
        (self.group.add(h, &self.shift), self.phase.mul(self.pair(h, &self.character)).mul(z))
    }

    /// The partner automorphism on the dual side,
    /// `φ(g, t, χ) = (−χ, t ⟨g, −χ⟩, g)`.
    pub fn partner(&self) -> PonAutElement {
        let minus_chi = self.group.neg(&self.character);
        PonAutElement {
            group: self.group.clone(),
            shift: minus_chi.clone(),
            phase: self.phase.mul(self.pair(&self.shift, &minus_chi)),
            character: self.shift.clone(),
        }
    }

    /// Checks `π(a·(h, z), ξ + ĝ) = φ(a)·π((h, z), ξ)` on every fibre point,
    /// where `π((h, z), ξ) = ((ξ, ⟨h, ξ⟩ z), h)`.
    pub fn intertwines_pi(&self) -> bool {
        let hat = self.partner();
        let z = RootOfUnity::ONE;
        self.group.elements().all(|h| {
            self.group.elements().all(|xi| {
                let (h1, z1) = self.act(&h, z);
                let xi1 = self.group.add(&xi, &hat.shift);
                let lhs = (xi1, self.pair(&h1, &self.group.add(&xi, &hat.shift)).mul(z1), h1);
                let (xi2, z2) = hat.act(&xi, self.pair(&h, &xi).mul(z));
                let h2 = self.group.add(&h, &self.shift);
                lhs == (xi2, z2, h2)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(group: &FiniteAbelianGroup, n: u64) -> alloc::vec::Vec<PonAutElement> {
        let mut out = alloc::vec::Vec::new();
        for g in group.elements() {
            for chi in group.elements() {
                for k in 0..n {
                    out.push(PonAutElement::new(group, g.clone(), RootOfUnity::new(k as i64, n), chi.clone()).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn partner_formula() {
        let g = FiniteAbelianGroup::cyclic(4).unwrap();
        let a = PonAutElement::new(&g, g.element(&[1]).unwrap(), RootOfUnity::ONE, g.element(&[1]).unwrap()).unwrap();
        let p = a.partner();
        assert_eq!(p.shift().coords(), &[3]);
        assert_eq!(p.character().coords(), &[1]);
        assert_eq!(p.phase(), RootOfUnity::new(-1, 4));
    }

    #[test]
    fn partner_is_a_homomorphism_and_intertwines() {
        let g = FiniteAbelianGroup::new(&[2, 3]).unwrap();
        let elems = all(&g, 6);
        for a in elems.iter().step_by(7) {
            assert!(a.intertwines_pi());
            assert_eq!(a.compose(&a.inverse()), PonAutElement::identity(&g));
            for b in elems.iter().step_by(11) {
                assert_eq!(a.compose(b).partner(), a.partner().compose(&b.partner()));
            }
        }
    }
}

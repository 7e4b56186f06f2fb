//! Cocycle-level pairs, ring pairs, module pairs and Pontrjagin duality
//! triples over a finite simplicial base, with their existence obstructions
//! and classifications.
//!
//! Phases are residues in `Z/N` standing for `μ_N`, where `N` is a multiple
//! of the exponent of the fibre group. Edges are oriented from the lower
//! vertex id to the higher one.

mod aut;
mod classes;
mod extension;
mod module;
mod pair;
mod ring;
mod triple;

pub use aut::PonAutElement;
pub use classes::{FullExtensionData, Orbit, TorsorReport};
pub use extension::{full_extension_classes, triples_extending_pair, ExtensionCandidate};
pub use module::{enumerate_module_classes, module_pair_exists, ModuleExistence, ModuleObstruction, ModulePairData};
pub use pair::{validate_pair, PairData, PairReport, PairViolation, ZetaTable};
pub use ring::{ring_pair_from_dual_bundle, RingPairData};
pub use triple::{
    canonical_triple, enumerate_triples, mod_to_pon, pon_to_mod, random_cocycle, random_triple, triple_exists,
    triple_isomorphic, TripleData, TripleExistence, TripleIsomorphism,
};

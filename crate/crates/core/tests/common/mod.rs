#![allow(dead_code)]

use std::sync::Arc;

use pontryagin_core::abelian::FiniteAbelianGroup;
use pontryagin_core::topology::{Cochain, SimplicialComplex};
use pontryagin_oracle::group::Grp;
use pontryagin_oracle::Cx;

pub fn cx(x: &SimplicialComplex) -> Cx {
    let mut all = Vec::new();
    for k in 0..=x.dim().unwrap_or(0) {
        all.extend(x.simplices(k).iter().cloned());
    }
    let out = Cx::from_facets(&all);
    for k in 0..out.simplices.len() {
        assert_eq!(out.simplices[k], x.simplices(k), "simplex order differs in dimension {k}");
    }
    out
}

pub fn grp(g: &FiniteAbelianGroup) -> Grp {
    Grp::new(g.factors())
}

pub fn edge_values(c: &Cochain) -> Vec<Vec<u64>> {
    c.values().iter().map(|v| v.coords().to_vec()).collect()
}

pub fn builtin(name: &str) -> Arc<SimplicialComplex> {
    Arc::new(SimplicialComplex::builtin(name).unwrap())
}

pub fn cyclic(n: u64) -> FiniteAbelianGroup {
    FiniteAbelianGroup::cyclic(n).unwrap()
}

/// A `ℤ/n` 1-cochain from residues.
pub fn c1(x: &Arc<SimplicialComplex>, n: u64, r: &[i64]) -> Cochain {
    Cochain::from_residues(x.clone(), 1, n, r).unwrap()
}

/// Residues of a `ℤ/n` cochain mod `order_n`.
pub fn residues_mod(c: &Cochain, order_n: u64) -> Vec<u64> {
    c.residues().into_iter().map(|r| r % order_n).collect()
}

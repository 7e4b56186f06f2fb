//! Finite simplicial complexes, cochains with coefficients in finite abelian
//! groups, cohomology via Smith normal form, cup products and coverings.
//!
//! Simplices are stored with ascending vertex ids. A 1-cochain value on the
//! edge `(a, b)` with `a < b` is read as the transition from the chart at `a`
//! to the chart at `b`; the opposite orientation carries the negated value.

mod cochain;
mod cohomology;
mod complex;
mod covering;
pub mod snf;

pub use cochain::{cup01, cup10, cup11, cup11_cochain, Cochain};
pub use cohomology::{
    bockstein_vanishes, cohomology, integral_coboundary_exists, solve_coboundary, CoboundarySolution,
    CoboundarySolver, CohomologyGroup,
};
pub use complex::{Simplex, SimplicialComplex};
pub use covering::{pullback_map, total_space, CoveringSpace};

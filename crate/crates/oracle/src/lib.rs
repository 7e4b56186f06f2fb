//! Slow, direct reference computations for the test suites.
//!
//! Everything here works on plain vectors and shares no code with the
//! library under test. Groups are products of cyclic factors with
//! mixed-radix indexing (last factor fastest), and every `μ_N` value is a
//! residue mod `N`.

pub mod bundle;
pub mod cochain;
pub mod complex;
pub mod group;

pub use complex::Cx;

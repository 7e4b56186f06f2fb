//! Exact, desk-scale computations for Pontrjagin duality in bundles of finite
//! abelian groups over finite simplicial bases.
//!
//! The crate is `no_std` with `alloc`. Group and cocycle arithmetic is exact
//! (residues and rational roots of unity); only the harmonic-analysis layer in
//! [`fourier`] and [`cstar`] works in floating point.
//!
//! Module map:
//! - [`abelian`]: finite abelian groups, duals, the canonical pairing.
//! - [`fourier`]: Fourier transform, inverse, convolution, fast transform.
//! - [`topology`]: simplicial complexes, cochains, cohomology via Smith normal
//!   form, cup products, covering spaces.
//! - [`bundles`]: pairs, ring pairs, module pairs, duality triples and their
//!   classification.
//! - [`cstar`]: twisted convolution algebras, Hilbert-module structure and the
//!   Fourier transform based on a triple.
#![no_std]

extern crate alloc;

pub mod abelian;
pub mod bundles;
pub mod cstar;
mod error;
pub mod fourier;
pub mod topology;

pub use error::{Error, Result};
pub use num_complex::Complex64;

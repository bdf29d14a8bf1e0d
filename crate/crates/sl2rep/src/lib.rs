//! Explicit complex irreducible representations of `SL2(Z/p^n Z)` for odd
//! primes `p`, Fourier transforms of functions on these groups, and spectral
//! experiments on the associated Cayley and Schreier graphs.
//!
//! The construction covers the complete set of irreducibles for `n = 2`
//! (non-quotient representations built from the ring `G(k, Delta)` together
//! with quotient representations lifted from `SL2(Z/p Z)`), the `k = n`
//! decomposition for `n <= 3`, and partial `k < n` subspaces at `n = 3`.
//!
//! Entry points:
//! - [`repbuilder::Inventory::build`] constructs the full labeled inventory;
//! - [`fourier`] implements the transform, its inverse and set transforms;
//! - [`spectra`] computes per-representation Cayley spectra, the Schreier
//!   graph on the projective line, and random-generator sweeps;
//! - the `sl2rep` binary and the `examples/` directory drive everything.

pub mod baseline;
pub mod cli;
pub mod fourier;
pub mod gring;
pub(crate) mod linalg;
pub mod modarith;
pub mod plot;
pub mod repbuilder;
pub mod sl2group;
pub mod spectra;

pub use modarith::{ModInt, PrimePower};
pub use repbuilder::{Inventory, RepLabel, Representation};
pub use sl2group::{GeneratingSet, SL2Elem};

//! Exact computer algebra for affine Landau-Ginzburg models.
//!
//! The library computes singularity invariants of a hypersurface potential
//! through its regularization on affine space: critical and relative-critical
//! values, Milnor data and per-value multiplicities, Hochschild/periodic-cyclic
//! ranks, and the matrix-factorization calculus (Koszul factorizations, tensor
//! products, stable homs, 2-periodic resolutions and Eisenbud operators).
//!
//! All arithmetic is exact over the rationals. Groebner-basis computations are
//! capped by an explicit [`Budget`] and fail loudly instead of hanging.

pub mod crit;
pub mod error;
pub mod factor;
pub mod groebner;
pub mod lg;
pub mod linalg;
pub mod matfac;
pub mod milnor;
pub mod poly;
pub mod unipoly;

pub use error::Error;
pub use groebner::{Budget, GroebnerBasis, Ideal, Staircase, Submodule};
pub use lg::{LgModel, RegSeqReport, RegularizedPotential};
pub use poly::{ModuleOrder, Monomial, MonomialOrder, PolyRing, Polynomial, Rat};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

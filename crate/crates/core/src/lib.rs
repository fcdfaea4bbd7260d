//! Toeplitz operator calculus on weighted Bergman spaces of the unit disc,
//! at finite truncation.
//!
//! The crate provides, bottom up:
//!
//! * [`mobius`] — hyperbolic geometry of the disc: `SU(1,1)` Möbius
//!   transformations, the invariant point-pair function `delta`, geodesics,
//!   Schottky pairings and free-group enumeration;
//! * [`bergman`] — the weighted Bergman space `H_t` truncated to
//!   `span{e_0, …, e_N}`: basis norms, reproducing kernel, the projective
//!   representation of disc isometries, and the inverse-derivative operator;
//! * [`symbols`] — functions on the disc (Laurent polynomials, radial
//!   profiles, bumps, boundary collars, Poincaré series) with analytic
//!   Wirtinger derivatives, boundary restriction and winding numbers;
//! * [`quadrature`] — integration on the disc against the weighted,
//!   hyperbolic and Lebesgue measures, double integrals with the
//!   `delta^t` kernel, and 2-form / boundary-form integrals;
//! * [`toeplitz`] — Toeplitz and Hankel matrices and the classical trace
//!   formulas for (semi)commutators, including the Carey–Pincus pairing;
//! * [`equivariant`] — Schottky fundamental domains, group averaging, the
//!   equivariant trace of Toeplitz operators and commutators, and the
//!   index-equals-total-winding computations.
//!
//! All types are immutable values and all operations are pure, so everything
//! here is safe to drive from concurrent workers.

pub mod bergman;
pub mod equivariant;
pub mod error;
pub mod mobius;
pub mod numeric;
pub mod quadrature;
pub mod symbols;
pub mod toeplitz;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

pub use num_complex::Complex64;

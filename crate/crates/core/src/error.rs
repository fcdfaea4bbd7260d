//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by geometry, assembly and trace operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A point expected in the open unit disc was on or outside the circle.
    #[error("point {0} lies outside the open unit disc")]
    OutsideDisc(num_complex::Complex64),

    /// Weight parameter out of range (the space requires t > 1; some trace
    /// operations require t > 2 or t > 5).
    #[error("weight t = {t} is not admissible here (need t > {min})")]
    InvalidWeight { t: f64, min: f64 },

    /// Invalid truncation degree or corner size.
    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),

    /// Matrix padding too small for the requested symbols.
    #[error("padding {given} is too small (need at least {needed})")]
    InvalidPadding { given: usize, needed: usize },

    /// Quadrature rule construction or use failed.
    #[error("quadrature: {0}")]
    Quadrature(String),

    /// A pair of Schottky circles is not disjoint in the closed disc.
    #[error("pairing circles {0} and {1} intersect in the closed disc")]
    CirclesIntersect(usize, usize),

    /// A circle supplied as a geodesic is not orthogonal to the unit circle.
    #[error("circle (center {center}, radius {radius}) is not orthogonal to the unit circle")]
    NotOrthogonal { center: num_complex::Complex64, radius: f64 },

    /// Degenerate geometric configuration (tangent circles, coinciding
    /// geodesics, …).
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// Orbit sum or orbit descent is not certified complete at the requested
    /// word-length horizon.
    #[error("horizon exceeded: word length {limit} is not sufficient at {point}")]
    HorizonExceeded { point: num_complex::Complex64, limit: usize },

    /// Boundary data contains a sample too close to zero for winding-number
    /// or inversion purposes.
    #[error("boundary data not invertible: |sample| = {modulus:.3e} at index {index}")]
    NotInvertibleOnBoundary { index: usize, modulus: f64 },

    /// Consecutive boundary samples differ in argument by at least pi.
    #[error("boundary data undersampled: argument jump {jump:.3} at index {index}")]
    Undersampled { index: usize, jump: f64 },

    /// Sample grids of two boundary data sets do not match.
    #[error("mismatched boundary grids: {0}")]
    GridMismatch(String),

    /// A symbol's support violates a support-location precondition.
    #[error("invalid symbol support: {0}")]
    InvalidSupport(String),

    /// Boundary gluing of a restricted symbol is discontinuous.
    #[error("gluing discontinuity {mismatch:.3e} on boundary component {component}")]
    GluingDiscontinuity { component: usize, mismatch: f64 },

    /// No common vanishing interval exists for a pair of collar symbols on
    /// some boundary component.
    #[error("no valid cut on boundary component {0}")]
    NoValidCut(usize),

    /// Unbounded or otherwise inadmissible symbol.
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    /// Configuration parsing / validation error.
    #[error("config: {0}")]
    Config(String),
}

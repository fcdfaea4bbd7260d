//! The weighted Bergman space of the disc at finite truncation.
//!
//! With the probability normalization `dmu_t = ((t-1)/pi) (1-|z|^2)^(t-2) dA`
//! the monomials are orthogonal with `||z^n||^2 = n! Gamma(t) / Gamma(n+t)`,
//! the reproducing kernel is `(1 - z conj(w))^(-t)`, and operators act on
//! `span{e_0, ..., e_N}` in the orthonormal basis `e_n = z^n / ||z^n||`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::Error;
use crate::mobius::MobiusTransform;
use crate::numeric::ln_gamma;
use crate::Result;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Weight and truncation degree of the ambient space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisSpec {
    t: f64,
    degree: usize,
}

impl BasisSpec {
    /// `t` is the weight (must exceed 1); operators act on degrees `0..=degree`.
    pub fn new(t: f64, degree: usize) -> Result<Self> {
        if !(t > 1.0) {
            return Err(Error::InvalidWeight { t, min: 1.0 });
        }
        Ok(Self { t, degree })
    }

    pub fn weight(&self) -> f64 {
        self.t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Matrix dimension `degree + 1`.
    pub fn dim(&self) -> usize {
        self.degree + 1
    }

    /// The same weight at truncation degree `degree + extra`.
    pub fn padded(&self, extra: usize) -> Self {
        Self { t: self.t, degree: self.degree + extra }
    }
}

/// Squared norm of the monomial `z^n` in the weighted space:
/// `(t-1) B(n+1, t-1) = n! Gamma(t) / Gamma(n+t)`, via log-Gamma.
pub fn basis_norm_sq(n: usize, t: f64) -> Result<f64> {
    if !(t > 1.0) {
        return Err(Error::InvalidWeight { t, min: 1.0 });
    }
    let n = n as f64;
    Ok((ln_gamma(n + 1.0) + ln_gamma(t) - ln_gamma(n + t)).exp())
}

/// Norm of the monomial `z^n`.
pub fn basis_norm(n: usize, t: f64) -> Result<f64> {
    basis_norm_sq(n, t).map(f64::sqrt)
}

/// Squared norms of `z^0 .. z^max_degree` by the Beta-ratio recurrence
/// `||z^{n+1}||^2 / ||z^n||^2 = (n+1)/(n+t)` seeded at `||1|| = 1`.
///
/// This is the path all matrix assembly uses: consecutive ratios are exact to
/// a couple of ulps, which the trace formulas rely on. The log-Gamma form
/// above is the scalar reference for isolated degrees.
pub fn basis_norms_sq(max_degree: usize, t: f64) -> Result<Vec<f64>> {
    if !(t > 1.0) {
        return Err(Error::InvalidWeight { t, min: 1.0 });
    }
    let mut v = Vec::with_capacity(max_degree + 1);
    v.push(1.0);
    for n in 0..max_degree {
        let nf = n as f64;
        let last = *v.last().unwrap();
        v.push(last * (nf + 1.0) / (nf + t));
    }
    Ok(v)
}

/// Norms of `z^0 .. z^max_degree`; see [`basis_norms_sq`].
pub fn basis_norms(max_degree: usize, t: f64) -> Result<Vec<f64>> {
    let mut v = basis_norms_sq(max_degree, t)?;
    for x in &mut v {
        *x = x.sqrt();
    }
    Ok(v)
}

/// Reproducing kernel `K_t(z, w) = (1 - z conj(w))^{-t}` (principal branch;
/// the base has positive real part on the bidisc).
pub fn kernel(z: Complex64, w: Complex64, t: f64) -> Complex64 {
    (ONE - z * w.conj()).powf(-t)
}

/// A square matrix over the orthonormal monomial basis, entry `(m, n)` being
/// `<A e_n, e_m>`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedOperator {
    spec: BasisSpec,
    entries: DMatrix<Complex64>,
}

impl TruncatedOperator {
    pub fn from_matrix(spec: BasisSpec, entries: DMatrix<Complex64>) -> Self {
        assert_eq!(entries.nrows(), spec.dim());
        assert_eq!(entries.ncols(), spec.dim());
        Self { spec, entries }
    }

    pub fn identity(spec: BasisSpec) -> Self {
        Self { spec, entries: DMatrix::identity(spec.dim(), spec.dim()) }
    }

    pub fn zeros(spec: BasisSpec) -> Self {
        Self { spec, entries: DMatrix::zeros(spec.dim(), spec.dim()) }
    }

    pub fn spec(&self) -> BasisSpec {
        self.spec
    }

    pub fn dim(&self) -> usize {
        self.spec.dim()
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn entry(&self, m: usize, n: usize) -> Complex64 {
        self.entries[(m, n)]
    }

    pub fn adjoint(&self) -> Self {
        Self { spec: self.spec, entries: self.entries.adjoint() }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { spec: self.spec, entries: &self.entries * c }
    }

    /// Sum of the first `k` diagonal entries. The finite-truncation surrogate
    /// for the trace of a trace-class operator; for a commutator of two full
    /// matrices with `k = dim` it vanishes identically.
    pub fn corner_trace(&self, k: usize) -> Result<Complex64> {
        if k > self.dim() {
            return Err(Error::InvalidTruncation(format!(
                "corner size {k} exceeds dimension {}",
                self.dim()
            )));
        }
        let mut acc = ZERO;
        for i in 0..k {
            acc += self.entries[(i, i)];
        }
        Ok(acc)
    }

    /// Top-left `k x k` block.
    pub fn low_block(&self, k: usize) -> DMatrix<Complex64> {
        self.entries.view((0, 0), (k, k)).into_owned()
    }

    /// Largest singular value.
    pub fn operator_norm(&self) -> f64 {
        let svd = self.entries.clone().svd(false, false);
        svd.singular_values.iter().copied().fold(0.0, f64::max)
    }

    /// All singular values, in decreasing order.
    pub fn singular_values(&self) -> Vec<f64> {
        let svd = self.entries.clone().svd(false, false);
        let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
        sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
        sv
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.spec.dim(), other.spec.dim(), "operator dimensions differ");
        assert!(
            (self.spec.weight() - other.spec.weight()).abs() < 1e-12,
            "operator weights differ"
        );
    }
}

impl std::ops::Add for &TruncatedOperator {
    type Output = TruncatedOperator;
    fn add(self, rhs: &TruncatedOperator) -> TruncatedOperator {
        self.assert_compatible(rhs);
        TruncatedOperator { spec: self.spec, entries: &self.entries + &rhs.entries }
    }
}

impl std::ops::Sub for &TruncatedOperator {
    type Output = TruncatedOperator;
    fn sub(self, rhs: &TruncatedOperator) -> TruncatedOperator {
        self.assert_compatible(rhs);
        TruncatedOperator { spec: self.spec, entries: &self.entries - &rhs.entries }
    }
}

impl std::ops::Mul for &TruncatedOperator {
    type Output = TruncatedOperator;
    fn mul(self, rhs: &TruncatedOperator) -> TruncatedOperator {
        self.assert_compatible(rhs);
        TruncatedOperator { spec: self.spec, entries: &self.entries * &rhs.entries }
    }
}

/// `A B - B A` formed at the operators' common size.
pub fn commutator(a: &TruncatedOperator, b: &TruncatedOperator) -> TruncatedOperator {
    &(a * b) - &(b * a)
}

/// Sum of the first `k` diagonal entries of `A B - B A` without forming the
/// products (`O(k . dim)` instead of `O(dim^3)`).
pub fn commutator_corner_trace(
    a: &TruncatedOperator,
    b: &TruncatedOperator,
    k: usize,
) -> Result<Complex64> {
    a.assert_compatible(b);
    if k > a.dim() {
        return Err(Error::InvalidTruncation(format!(
            "corner size {k} exceeds dimension {}",
            a.dim()
        )));
    }
    let dim = a.dim();
    let mut acc = ZERO;
    for n in 0..k {
        let mut diag = ZERO;
        for j in 0..dim {
            diag += a.entries[(n, j)] * b.entries[(j, n)] - b.entries[(n, j)] * a.entries[(j, n)];
        }
        acc += diag;
    }
    Ok(acc)
}

/// Matrix of the bounded extension of `z^n -> z^{n+1}/(n+1)`: subdiagonal
/// entries `1/sqrt((n+1)(n+t))`, which are also its singular values.
pub fn dbar_inverse(spec: BasisSpec) -> Result<TruncatedOperator> {
    if spec.degree() < 1 {
        return Err(Error::InvalidTruncation(
            "inverse derivative needs degree >= 1".to_string(),
        ));
    }
    let t = spec.weight();
    let dim = spec.dim();
    let mut m = DMatrix::zeros(dim, dim);
    for n in 0..dim - 1 {
        let nf = n as f64;
        m[(n + 1, n)] = Complex64::new(1.0 / ((nf + 1.0) * (nf + t)).sqrt(), 0.0);
    }
    Ok(TruncatedOperator::from_matrix(spec, m))
}

/// Matrix of differentiation `h -> h'` on the truncated basis: superdiagonal
/// entries `sqrt(n (n+t-1))`. Together with [`dbar_inverse`] it satisfies
/// `D . D^{-1} = I` on degrees `0..N-1`.
pub fn derivative_matrix(spec: BasisSpec) -> TruncatedOperator {
    let t = spec.weight();
    let dim = spec.dim();
    let mut m = DMatrix::zeros(dim, dim);
    for n in 1..dim {
        let nf = n as f64;
        m[(n - 1, n)] = Complex64::new((nf * (nf + t - 1.0)).sqrt(), 0.0);
    }
    TruncatedOperator::from_matrix(spec, m)
}

/// Contour radius used for the representation quadrature: `0.75` for small
/// truncations, pushed outward for large ones so that `r^{-N}` stays within
/// floating-point headroom.
fn contour_radius(degree: usize) -> f64 {
    let n = degree.max(1) as f64;
    0.75_f64.max((1e-7_f64).powf(1.0 / n))
}

/// Matrix of the weight-`t/2` action of the isometry `g` on the truncated
/// basis: the operator `h -> (h o g^{-1}) . ((g^{-1})')^{t/2}`, so that a
/// rotation by `theta` gives the diagonal `e^{-i (n + t/2) theta}`.
///
/// Entries are recovered from Taylor coefficients by angular quadrature on a
/// circle of radius `< 1` with `4 (N+1)` nodes. Up to truncation the matrix
/// is unitary on low modes; a warning is logged when the defect on the
/// `min(10, dim)` block exceeds `1e-6`.
pub fn representation_matrix(g: &MobiusTransform, spec: BasisSpec) -> Result<TruncatedOperator> {
    let dim = spec.dim();
    let t = spec.weight();
    let ginv = g.inverse();
    let r = contour_radius(spec.degree());
    if r >= 1.0 {
        return Err(Error::Quadrature("contour radius must be < 1".to_string()));
    }
    let k_nodes = 4 * dim;

    // samples of w = g^{-1}(z) and of ((g^{-1})')^{t/2} on the contour
    let mut w = Vec::with_capacity(k_nodes);
    let mut base = Vec::with_capacity(k_nodes);
    for k in 0..k_nodes {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (k_nodes as f64);
        let z = Complex64::from_polar(r, theta);
        w.push(ginv.apply_unchecked(z));
        base.push((ginv.log_derivative(z) * (t / 2.0)).exp());
    }

    let norms: Vec<f64> = basis_norms(spec.degree(), t)?;
    let mut planner = FftPlanner::new();
    let fft = planner.plan_fft_forward(k_nodes);

    let mut entries = DMatrix::zeros(dim, dim);
    let mut pow: Vec<Complex64> = vec![ONE; k_nodes];
    let mut buf: Vec<Complex64> = vec![ZERO; k_nodes];
    for n in 0..dim {
        for k in 0..k_nodes {
            buf[k] = pow[k] * base[k] / norms[n];
        }
        fft.process(&mut buf);
        let scale = 1.0 / k_nodes as f64;
        for m in 0..dim {
            // Taylor coefficient a_m r^m recovered at frequency m
            entries[(m, n)] = buf[m] * scale * (norms[m] / r.powi(m as i32));
        }
        for k in 0..k_nodes {
            pow[k] *= w[k];
        }
    }

    let op = TruncatedOperator::from_matrix(spec, entries);
    // low modes whose image is far from the truncation edge must already be
    // near-isometric; a defect there indicates a quadrature problem
    let block = (dim / 8).clamp(1, 8);
    let defect = unitarity_defect(&op, block);
    if defect > 1e-6 && dim >= 32 {
        log::warn!(
            "representation matrix unitarity defect {defect:.3e} on {block}x{block} block"
        );
    }
    Ok(op)
}

/// Frobenius norm of `(U* U - I)` restricted to the top-left `k x k` block,
/// with the product formed at the operator's own size.
pub fn unitarity_defect(u: &TruncatedOperator, k: usize) -> f64 {
    let prod = &u.adjoint() * u;
    let mut acc = 0.0;
    for i in 0..k.min(u.dim()) {
        for j in 0..k.min(u.dim()) {
            let expected = if i == j { ONE } else { ZERO };
            acc += (prod.entry(i, j) - expected).norm_sqr();
        }
    }
    acc.sqrt()
}

/// Unitarity defect of the representation of `g` on the `k x k` low block,
/// with `U* U` formed at padded size `N + N/4` per the crate's convention
/// that products are always assembled at padded size.
pub fn representation_unitarity_defect(
    g: &MobiusTransform,
    spec: BasisSpec,
    block: usize,
) -> Result<f64> {
    let padded = spec.padded((spec.degree() / 4).max(4));
    let u = representation_matrix(g, padded)?;
    Ok(unitarity_defect(&u, block.min(spec.dim())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::MobiusTransform;
    use approx::assert_abs_diff_eq;

    #[test]
    fn basis_norm_values() {
        assert_abs_diff_eq!(basis_norm_sq(0, 2.0).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(basis_norm_sq(0, 7.3).unwrap(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(basis_norm_sq(1, 2.0).unwrap(), 0.5, epsilon = 1e-14);
        // 10! Gamma(6) / Gamma(16) = 120 * 10! / 15! = 3.33000333...e-4
        let expected = 120.0 * (3628800.0 / 1.307674368e12);
        assert_abs_diff_eq!(basis_norm_sq(10, 6.0).unwrap(), expected, epsilon = 1e-16);
        assert!((basis_norm_sq(10, 6.0).unwrap() - 3.33000333e-4).abs() < 1e-12);
        assert!(basis_norm_sq(3, 1.0).is_err());
    }

    #[test]
    fn basis_norm_ratio_recurrence() {
        for &t in &[1.5, 2.0, 6.0, 11.25] {
            let norms = basis_norms_sq(2000, t).unwrap();
            for n in 0..2000usize {
                let ratio = norms[n + 1] / norms[n];
                let expected = (n as f64 + 1.0) / (n as f64 + t);
                assert!(
                    (ratio - expected).abs() < 1e-14,
                    "t = {t}, n = {n}: {ratio} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn bulk_norms_agree_with_log_gamma() {
        for &t in &[1.5, 2.0, 6.0] {
            let norms = basis_norms_sq(2000, t).unwrap();
            for &n in &[0usize, 1, 7, 40, 333, 1999] {
                // the log-Gamma reference itself carries ~1e-11 relative
                // error at n ~ 2000 (exp amplifies the absolute log error)
                let reference = basis_norm_sq(n, t).unwrap();
                assert!(
                    (norms[n] - reference).abs() <= 1e-10 * reference,
                    "t = {t}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn kernel_values_and_symmetry() {
        let t = 4.0;
        let w = Complex64::new(0.3, -0.5);
        assert_abs_diff_eq!(
            kernel(Complex64::new(0.0, 0.0), w, t).re,
            1.0,
            epsilon = 1e-15
        );
        let half = Complex64::new(0.5, 0.0);
        assert_abs_diff_eq!(kernel(half, half, t).re, 0.75_f64.powi(-4), epsilon = 1e-12);

        let z = Complex64::new(0.2, 0.6);
        let k1 = kernel(z, w, t);
        let k2 = kernel(w, z, t);
        assert!((k1 - k2.conj()).norm() < 1e-14);
        // positivity on the diagonal
        assert!(kernel(z, z, t).re > 0.0);
        assert!(kernel(z, z, t).im.abs() < 1e-14);
    }

    #[test]
    fn kernel_reproduced_by_basis_sum() {
        let t = 3.5;
        let z = Complex64::new(0.4, 0.3);
        let w = Complex64::new(-0.2, 0.35);
        let mut acc = Complex64::new(0.0, 0.0);
        for n in 0..=60 {
            let nsq = basis_norm_sq(n, t).unwrap();
            acc += z.powu(n as u32) * w.conj().powu(n as u32) / nsq;
        }
        assert!((acc - kernel(z, w, t)).norm() < 1e-8);
    }

    #[test]
    fn corner_trace_basics() {
        let spec = BasisSpec::new(2.0, 9).unwrap();
        let id = TruncatedOperator::identity(spec);
        assert_abs_diff_eq!(id.corner_trace(5).unwrap().re, 5.0, epsilon = 1e-15);
        assert!(id.corner_trace(11).is_err());

        let mut m = DMatrix::zeros(10, 10);
        for i in 0..10 {
            m[(i, i)] = Complex64::new(0.5f64.powi(i as i32), 0.0);
        }
        let d = TruncatedOperator::from_matrix(spec, m);
        assert_abs_diff_eq!(d.corner_trace(3).unwrap().re, 1.75, epsilon = 1e-15);
    }

    #[test]
    fn full_corner_trace_of_commutator_vanishes() {
        let spec = BasisSpec::new(3.0, 14).unwrap();
        let dim = spec.dim();
        let a = TruncatedOperator::from_matrix(
            spec,
            DMatrix::from_fn(dim, dim, |i, j| {
                Complex64::new((i * 3 + j) as f64 * 0.01, (i as f64 - j as f64) * 0.02)
            }),
        );
        let b = TruncatedOperator::from_matrix(
            spec,
            DMatrix::from_fn(dim, dim, |i, j| {
                Complex64::new((i + 2 * j) as f64 * 0.015, 0.3 - j as f64 * 0.01)
            }),
        );
        let tr = commutator(&a, &b).corner_trace(dim).unwrap();
        assert!(tr.norm() < 1e-12);
        // fast path matches the dense commutator
        let fast = commutator_corner_trace(&a, &b, 7).unwrap();
        let dense = commutator(&a, &b).corner_trace(7).unwrap();
        assert!((fast - dense).norm() < 1e-12);
    }

    #[test]
    fn dbar_inverse_entries_and_left_inverse() {
        let spec = BasisSpec::new(2.0, 20).unwrap();
        let inv = dbar_inverse(spec).unwrap();
        assert_abs_diff_eq!(inv.entry(1, 0).re, 1.0 / 2.0_f64.sqrt(), epsilon = 1e-15);

        let spec6 = BasisSpec::new(6.0, 20).unwrap();
        let inv6 = dbar_inverse(spec6).unwrap();
        assert_abs_diff_eq!(inv6.entry(10, 9).re, 1.0 / 150.0_f64.sqrt(), epsilon = 1e-15);

        // D . D^{-1} = I on degrees 0..N-1 (finite-rank defect at the top)
        let d = derivative_matrix(spec6);
        let prod = &d * &inv6;
        for n in 0..20 {
            assert!((prod.entry(n, n) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        }
        assert!(prod.entry(20, 20).norm() < 1e-14);

        // singular values are exactly the subdiagonal entries
        let sv = inv6.singular_values();
        let mut expected: Vec<f64> = (0..20)
            .map(|n| 1.0 / ((n as f64 + 1.0) * (n as f64 + 6.0)).sqrt())
            .collect();
        expected.push(0.0);
        expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (s, e) in sv.iter().zip(expected.iter()) {
            assert!((s - e).abs() < 1e-12);
        }

        // Hilbert-Schmidt norm squared is a bounded, convergent partial sum
        let hs_sq: f64 = (0..2000)
            .map(|n| 1.0 / ((n as f64 + 1.0) * (n as f64 + 6.0)))
            .sum();
        let bound: f64 = (0..5000).map(|n| 1.0 / ((n as f64 + 1.0) * (n as f64 + 1.0))).sum();
        assert!(hs_sq < bound + 1.0);

        assert!(dbar_inverse(BasisSpec::new(2.0, 0).unwrap()).is_err());
    }

    #[test]
    fn representation_identity_and_rotation() {
        let spec = BasisSpec::new(3.0, 12).unwrap();
        let id = representation_matrix(&MobiusTransform::identity(), spec).unwrap();
        let defect = (&id - &TruncatedOperator::identity(spec)).frobenius_norm();
        assert!(defect < 1e-10, "identity defect {defect}");

        let theta = 0.9;
        let rot = representation_matrix(&MobiusTransform::rotation(theta), spec).unwrap();

        // diagonal with entries e^{-i (n + t/2) theta} up to a global phase
        let phase = rot.entry(0, 0) / Complex64::from_polar(1.0, -(0.0 + 1.5) * theta);
        assert_abs_diff_eq!(phase.norm(), 1.0, epsilon = 1e-10);
        for n in 0..=12usize {
            let expected = Complex64::from_polar(1.0, -(n as f64 + 1.5) * theta) * phase;
            assert!((rot.entry(n, n) - expected).norm() < 1e-9);
            for m in 0..=12usize {
                if m != n {
                    assert!(rot.entry(m, n).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn representation_unitary_block_for_hyperbolic() {
        let g = MobiusTransform::new(
            Complex64::new(0.5f64.cosh(), 0.0),
            Complex64::new(0.5f64.sinh(), 0.0),
        )
        .unwrap();
        // product formed at padded size per the assembly convention
        let spec = BasisSpec::new(6.0, 40).unwrap();
        let defect = representation_unitarity_defect(&g, spec, 10).unwrap();
        assert!(defect < 1e-6, "unitarity defect {defect:.3e}");
        // at the raw truncation the defect is the genuine tail mass and
        // decays to zero as the degree grows
        let raw40 = unitarity_defect(
            &representation_matrix(&g, BasisSpec::new(6.0, 40).unwrap()).unwrap(),
            10,
        );
        let raw60 = unitarity_defect(
            &representation_matrix(&g, BasisSpec::new(6.0, 60).unwrap()).unwrap(),
            10,
        );
        assert!(raw60 < raw40 / 1e4, "no decay: {raw40:.3e} -> {raw60:.3e}");
        assert!(raw60 < 1e-12);
    }

    #[test]
    fn representation_cocycle_on_low_block() {
        let spec = BasisSpec::new(4.0, 50).unwrap();
        let g = MobiusTransform::new(
            Complex64::new(0.4f64.cosh(), 0.1),
            Complex64::new(0.35, -0.12),
        )
        .unwrap();
        let h = MobiusTransform::point_translation(Complex64::new(-0.2, 0.3)).unwrap();
        let ug = representation_matrix(&g, spec).unwrap();
        let uh = representation_matrix(&h, spec).unwrap();
        let ugh = representation_matrix(&(g * h), spec).unwrap();
        let prod = &ug * &uh;
        // the products differ by a unimodular scalar on the low block
        let k = 8;
        let phase = prod.entry(0, 0) / ugh.entry(0, 0);
        assert!((phase.norm() - 1.0).abs() < 1e-6, "|phase| = {}", phase.norm());
        let mut worst: f64 = 0.0;
        for i in 0..k {
            for j in 0..k {
                let d = (prod.entry(i, j) - ugh.entry(i, j) * phase).norm();
                worst = worst.max(d);
            }
        }
        assert!(worst < 1e-6, "cocycle block mismatch {worst:.3e}");
    }
}

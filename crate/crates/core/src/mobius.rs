//! Hyperbolic geometry of the unit disc.
//!
//! Isometries are kept in `SU(1,1)` normal form `[[a, b], [conj(b), conj(a)]]`
//! with `|a|^2 - |b|^2 = 1`, acting by `z -> (a z + b)/(conj(b) z + conj(a))`.
//! Geodesics are Euclidean circles orthogonal to the unit circle; pairs of
//! disjoint geodesics are paired by the hyperbolic translation along their
//! common perpendicular, which is the building block of Schottky groups.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// An orientation-preserving isometry of the hyperbolic disc.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct MobiusTransform {
    a: Complex64,
    b: Complex64,
}

impl MobiusTransform {
    /// Builds a transform from the two defining entries, renormalizing so
    /// that `|a|^2 - |b|^2 = 1`.
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        let det = a.norm_sqr() - b.norm_sqr();
        if det <= 0.0 {
            return Err(Error::Degenerate(format!(
                "matrix with |a|^2 - |b|^2 = {det} is not a disc isometry"
            )));
        }
        let s = det.sqrt();
        Ok(Self { a: a / s, b: b / s })
    }

    pub fn identity() -> Self {
        Self { a: ONE, b: Complex64::new(0.0, 0.0) }
    }

    /// Rotation `z -> e^{i theta} z`.
    pub fn rotation(theta: f64) -> Self {
        Self {
            a: Complex64::from_polar(1.0, theta / 2.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// The translation taking `0` to `w`, `z -> (z + w)/(1 + conj(w) z)`.
    pub fn point_translation(w: Complex64) -> Result<Self> {
        if w.norm() >= 1.0 {
            return Err(Error::OutsideDisc(w));
        }
        let s = (1.0 - w.norm_sqr()).sqrt();
        Ok(Self { a: ONE / s, b: w / s })
    }

    /// Hyperbolic translation along the geodesic through `from` and `to`
    /// taking `from` to `to`.
    pub fn translation_along(from: Complex64, to: Complex64) -> Result<Self> {
        let p = Self::point_translation(from)?.inverse();
        let image = p.apply(to)?;
        let rho = image.norm();
        if rho < 1e-15 {
            return Ok(Self::identity());
        }
        let phase = Self::rotation(-image.arg());
        let s = (1.0 - rho * rho).sqrt();
        let shift = Self { a: ONE / s, b: Complex64::new(rho / s, 0.0) };
        // p^{-1} . rot(phi) . shift . rot(-phi) . p, written with the rotation
        // folded in so the axis maps to the real line and back.
        Ok(p.inverse() * phase.inverse() * shift * phase * p)
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    /// Applies the transform to a point of the open disc.
    pub fn apply(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() >= 1.0 {
            return Err(Error::OutsideDisc(z));
        }
        Ok(self.apply_unchecked(z))
    }

    /// Applies the transform to a point of the closed disc; boundary points
    /// map to boundary points.
    pub fn apply_closed(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() > 1.0 + 1e-9 {
            return Err(Error::OutsideDisc(z));
        }
        Ok(self.apply_unchecked(z))
    }

    #[inline]
    pub(crate) fn apply_unchecked(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.b.conj() * z + self.a.conj())
    }

    /// Complex derivative `g'(z) = 1/(conj(b) z + conj(a))^2`.
    pub fn derivative(&self, z: Complex64) -> Complex64 {
        let d = self.b.conj() * z + self.a.conj();
        ONE / (d * d)
    }

    /// Continuous branch of `log g'` on the closed disc, normalized so the
    /// identity gives `0`. Uses `log g'(z) = -2 (Log conj(a) +
    /// Log(1 + conj(b) z / conj(a)))`; the second argument stays in the right
    /// half plane because `|b| < |a|`.
    pub fn log_derivative(&self, z: Complex64) -> Complex64 {
        let ac = self.a.conj();
        let w = self.b.conj() * z / ac;
        debug_assert!(w.norm() < 1.0 + 1e-12);
        -2.0 * (ac.ln() + (ONE + w).ln())
    }

    pub fn inverse(&self) -> Self {
        Self { a: self.a.conj(), b: -self.b }
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.projective_distance(&Self::identity()) < tol
    }

    /// Distance between transforms as projective matrices (up to global sign).
    pub fn projective_distance(&self, other: &Self) -> f64 {
        let d_plus = ((self.a - other.a).norm_sqr() + (self.b - other.b).norm_sqr()).sqrt();
        let d_minus = ((self.a + other.a).norm_sqr() + (self.b + other.b).norm_sqr()).sqrt();
        d_plus.min(d_minus)
    }
}

impl std::ops::Mul for MobiusTransform {
    type Output = MobiusTransform;

    /// Composition `(g * h)(z) = g(h(z))`, renormalized to keep
    /// `|a|^2 - |b|^2 = 1` from drifting over long words.
    fn mul(self, rhs: MobiusTransform) -> MobiusTransform {
        let a = self.a * rhs.a + self.b * rhs.b.conj();
        let b = self.a * rhs.b + self.b * rhs.a.conj();
        let s = (a.norm_sqr() - b.norm_sqr()).sqrt();
        MobiusTransform { a: a / s, b: b / s }
    }
}

/// Möbius-invariant point-pair function
/// `delta(p, q) = (1 - |p|^2)(1 - |q|^2) / |1 - p conj(q)|^2 ∈ (0, 1]`,
/// the squared reciprocal of `cosh` of half the hyperbolic distance.
pub fn delta(p: Complex64, q: Complex64) -> f64 {
    let num = (1.0 - p.norm_sqr()) * (1.0 - q.norm_sqr());
    let den = (ONE - p * q.conj()).norm_sqr();
    num / den
}

/// Hyperbolic distance between two points of the disc.
pub fn hyperbolic_distance(p: Complex64, q: Complex64) -> f64 {
    // delta = 1 / cosh^2(d/2)
    let d = delta(p, q);
    2.0 * (1.0 / d.sqrt()).acosh()
}

// ---------------------------------------------------------------------------
// Geodesics and the hyperboloid model
// ---------------------------------------------------------------------------

/// Minkowski inner product with signature (+, +, -).
fn mdot(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] - u[2] * v[2]
}

/// `eta(u x v)` where `x` is the Euclidean cross product: the unique vector
/// Minkowski-orthogonal to both arguments.
fn mcross(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    let c = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    [c[0], c[1], -c[2]]
}

/// Maps a disc point onto the hyperboloid `x^2 + y^2 - z^2 = -1`, `z > 0`.
fn to_hyperboloid(z: Complex64) -> [f64; 3] {
    let s = 1.0 - z.norm_sqr();
    [2.0 * z.re / s, 2.0 * z.im / s, (1.0 + z.norm_sqr()) / s]
}

/// Inverse of [`to_hyperboloid`].
fn to_disc(x: [f64; 3]) -> Complex64 {
    Complex64::new(x[0], x[1]) / (1.0 + x[2])
}

/// A geodesic of the disc, represented as a Euclidean circle orthogonal to
/// the unit circle (`|center|^2 = radius^2 + 1`). Diameters are not
/// representable in this form and are rejected.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Geodesic {
    pub center: Complex64,
    pub radius: f64,
}

impl Geodesic {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if radius <= 0.0 || (center.norm_sqr() - radius * radius - 1.0).abs() > 1e-8 {
            return Err(Error::NotOrthogonal { center, radius });
        }
        Ok(Self { center, radius })
    }

    /// Unit spacelike normal of the corresponding plane in the hyperboloid
    /// model, with positive last component.
    pub(crate) fn normal(&self) -> [f64; 3] {
        [
            self.center.re / self.radius,
            self.center.im / self.radius,
            1.0 / self.radius,
        ]
    }

    /// Rebuilds a geodesic from a spacelike normal vector. Fails for
    /// diameters (vanishing last component).
    pub(crate) fn from_normal(v: [f64; 3]) -> Result<Self> {
        let n = mdot(v, v);
        if n <= 0.0 {
            return Err(Error::Degenerate(
                "normal vector is not spacelike".to_string(),
            ));
        }
        let s = n.sqrt();
        let mut u = [v[0] / s, v[1] / s, v[2] / s];
        if u[2] < 0.0 {
            u = [-u[0], -u[1], -u[2]];
        }
        if u[2].abs() < 1e-9 {
            return Err(Error::Degenerate(
                "geodesic is a diameter; not representable as a circle".to_string(),
            ));
        }
        Geodesic::new(Complex64::new(u[0] / u[2], u[1] / u[2]), 1.0 / u[2])
    }

    /// True when `z` lies strictly inside the Euclidean circle (the half-disc
    /// cut off by the geodesic, away from the origin).
    pub fn encloses(&self, z: Complex64) -> bool {
        (z - self.center).norm() < self.radius
    }

    /// Signed depth inside the half-disc: positive inside, negative outside.
    pub fn depth(&self, z: Complex64) -> f64 {
        self.radius - (z - self.center).norm()
    }

    /// The arc of the unit circle cut off by the circle, as
    /// `(mid - halfwidth, mid + halfwidth)` in angle.
    pub fn shadow(&self) -> (f64, f64) {
        let mid = self.center.arg();
        let halfwidth = (1.0 / self.center.norm()).acos();
        (mid - halfwidth, mid + halfwidth)
    }

    /// Euclidean disjointness of two circles in the closed disc.
    pub fn disjoint_from(&self, other: &Geodesic) -> bool {
        (self.center - other.center).norm() > self.radius + other.radius
    }

    /// Image of the geodesic under an isometry (maps geodesics to geodesics).
    pub fn map(&self, g: &MobiusTransform) -> Result<Self> {
        // Three points on the circle inside the closed disc determine the
        // image circle; use the two ideal endpoints and the closest point.
        let (lo, hi) = self.shadow();
        let p1 = g.apply_closed(Complex64::from_polar(1.0, lo))?;
        let p2 = g.apply_closed(Complex64::from_polar(1.0, hi))?;
        let p3 = g.apply_closed(self.closest_point_to_origin())?;
        circle_through(p1, p2, p3)
    }

    /// The point of the geodesic closest to the origin.
    pub fn closest_point_to_origin(&self) -> Complex64 {
        let dir = self.center / self.center.norm();
        dir * (self.center.norm() - self.radius)
    }
}

/// Circle through three points (used to transport geodesics).
fn circle_through(p1: Complex64, p2: Complex64, p3: Complex64) -> Result<Geodesic> {
    let ax = p1.re;
    let ay = p1.im;
    let bx = p2.re;
    let by = p2.im;
    let cx = p3.re;
    let cy = p3.im;
    let d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    if d.abs() < 1e-12 {
        return Err(Error::Degenerate("collinear points in circle fit".to_string()));
    }
    let a2 = ax * ax + ay * ay;
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
    let uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
    let center = Complex64::new(ux, uy);
    let radius = (p1 - center).norm();
    Geodesic::new(center, radius)
}

/// Intersection point of two crossing geodesics (given by normals).
fn plane_intersection(u: [f64; 3], v: [f64; 3]) -> Result<Complex64> {
    let x = mcross(u, v);
    let n = mdot(x, x);
    if n >= -1e-12 {
        return Err(Error::Degenerate("geodesics do not intersect".to_string()));
    }
    let s = (-n).sqrt();
    let mut p = [x[0] / s, x[1] / s, x[2] / s];
    if p[2] < 0.0 {
        p = [-p[0], -p[1], -p[2]];
    }
    Ok(to_disc(p))
}

/// Common perpendicular data for two disjoint geodesics: the feet of the
/// perpendicular on each of them (inside the disc).
fn perpendicular_feet(c1: &Geodesic, c2: &Geodesic) -> Result<(Complex64, Complex64, [f64; 3])> {
    let v1 = c1.normal();
    let v2 = c2.normal();
    let inner = mdot(v1, v2);
    if inner.abs() <= 1.0 + 1e-12 {
        return Err(Error::Degenerate(
            "circles are not disjoint; no common perpendicular".to_string(),
        ));
    }
    let axis = mcross(v1, v2); // spacelike for ultraparallel geodesics
    let f1 = plane_intersection(axis, v1)?;
    let f2 = plane_intersection(axis, v2)?;
    Ok((f1, f2, axis))
}

/// The geodesic through `foot` orthogonal to the geodesic with normal `axis`.
fn perpendicular_at(axis: [f64; 3], foot: Complex64) -> Result<Geodesic> {
    let x = to_hyperboloid(foot);
    Geodesic::from_normal(mcross(axis, x))
}

// ---------------------------------------------------------------------------
// Pairings and Schottky data
// ---------------------------------------------------------------------------

/// A Schottky side pairing: the hyperbolic translation along the common
/// perpendicular of two disjoint geodesics, carrying the source circle onto
/// the target circle and the exterior of the source half-disc onto the
/// interior of the target half-disc.
#[derive(Clone, Debug)]
pub struct Pairing {
    pub source: Geodesic,
    pub target: Geodesic,
    pub transform: MobiusTransform,
}

impl Pairing {
    /// Canonical pairing of two disjoint circles orthogonal to the unit
    /// circle: translation along their common perpendicular by the distance
    /// between them.
    pub fn new(source: Geodesic, target: Geodesic) -> Result<Self> {
        let (f1, f2, _) = perpendicular_feet(&source, &target)?;
        let transform = MobiusTransform::translation_along(f1, f2)?;
        let pairing = Self { source, target, transform };
        pairing.validate()?;
        Ok(pairing)
    }

    /// Pairing determined by a hyperbolic generator via its isometric
    /// circles `|conj(b) z + conj(a)| = 1` and `|{-conj(b)} z + a| = 1`.
    pub fn from_generator(g: MobiusTransform) -> Result<Self> {
        let b = g.b();
        if b.norm() < 1e-12 {
            return Err(Error::Degenerate(
                "generator fixes the origin; it has no isometric circles".to_string(),
            ));
        }
        let r = 1.0 / b.norm();
        let source = Geodesic::new(-g.a().conj() / b.conj(), r)?;
        let target = Geodesic::new(g.a() / b.conj(), r)?;
        let pairing = Self { source, target, transform: g };
        pairing.validate()?;
        Ok(pairing)
    }

    /// Checks that the stored transform really carries the source circle to
    /// the target circle.
    fn validate(&self) -> Result<()> {
        let image = self.source.map(&self.transform)?;
        let drift = (image.center - self.target.center).norm()
            + (image.radius - self.target.radius).abs();
        if drift > 1e-7 {
            return Err(Error::Degenerate(format!(
                "pairing transform does not map source circle to target circle (drift {drift:.3e})"
            )));
        }
        Ok(())
    }

    /// Slides both circles by hyperbolic distance `s` along the axis of the
    /// pairing (positive direction: source toward target). The transform is
    /// unchanged, so the slid pairing generates the same group but cuts a
    /// different fundamental domain.
    pub fn slide(&self, s: f64) -> Result<Self> {
        let (f1, f2, axis) = perpendicular_feet(&self.source, &self.target)?;
        let step = MobiusTransform::translation_along(f1, f2)?;
        // reparametrize the translation to length s
        let total = hyperbolic_distance(f1, f2);
        let unit = fractional_power_along(&step, f1, s / total)?;
        let g1 = unit.apply(f1)?;
        let g2 = unit.apply(f2)?;
        let source = perpendicular_at(axis, g1)?;
        let target = perpendicular_at(axis, g2)?;
        let pairing = Self { source, target, transform: self.transform };
        pairing.validate()?;
        Ok(pairing)
    }
}

/// The translation along the axis of `step` through `anchor`, scaled to the
/// fraction `t` of its translation length.
fn fractional_power_along(
    step: &MobiusTransform,
    anchor: Complex64,
    t: f64,
) -> Result<MobiusTransform> {
    let image = step.apply(anchor)?;
    let d = hyperbolic_distance(anchor, image);
    let p = MobiusTransform::point_translation(anchor)?.inverse();
    let dir = p.apply(image)?;
    let phase = MobiusTransform::rotation(-dir.arg());
    let rho = (t * d / 2.0).tanh();
    let s = (1.0 - rho * rho).sqrt();
    let shift = MobiusTransform::new(ONE / s, Complex64::new(rho / s, 0.0))?;
    Ok(p.inverse() * phase.inverse() * shift * phase * p)
}

/// Result of the Schottky (ping-pong) verification.
#[derive(Clone, Debug)]
pub struct SchottkyReport {
    /// All `2m` circles are pairwise disjoint in the closed disc.
    pub is_schottky: bool,
    /// First offending pair of circle indices, if any (circles are numbered
    /// source/target per pairing: `2i` and `2i + 1`).
    pub intersecting: Option<(usize, usize)>,
    /// Single-generator groups are cyclic, hence elementary (not icc).
    pub elementary: bool,
    pub messages: Vec<String>,
}

/// Checks the ping-pong condition: all pairing circles pairwise disjoint in
/// the closed disc. Success guarantees the generated group is free, discrete
/// and of infinite covolume.
pub fn verify_schottky(pairings: &[Pairing]) -> SchottkyReport {
    let mut circles: Vec<&Geodesic> = Vec::new();
    for p in pairings {
        circles.push(&p.source);
        circles.push(&p.target);
    }
    let mut intersecting = None;
    'outer: for i in 0..circles.len() {
        for j in (i + 1)..circles.len() {
            if !circles[i].disjoint_from(circles[j]) {
                intersecting = Some((i, j));
                break 'outer;
            }
        }
    }
    let elementary = pairings.len() == 1;
    let mut messages = Vec::new();
    if let Some((i, j)) = intersecting {
        messages.push(format!("circles {i} and {j} intersect in the closed disc"));
    }
    if elementary {
        messages.push(
            "single pairing generates a cyclic group: elementary, not icc".to_string(),
        );
    }
    SchottkyReport {
        is_schottky: intersecting.is_none(),
        intersecting,
        elementary,
        messages,
    }
}

// ---------------------------------------------------------------------------
// Words and group enumeration
// ---------------------------------------------------------------------------

/// A letter of a free-group word: a generator index and an inversion flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub index: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inverted(self) -> Self {
        Self { index: self.index, inverse: !self.inverse }
    }
}

/// A freely reduced word in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self { letters: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Appends a letter on the right (innermost position), cancelling freely.
    pub fn push_right(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverted()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    /// Appends a letter on the left (outermost position), cancelling freely.
    pub fn push_left(&mut self, l: Letter) {
        if self.letters.first() == Some(&l.inverted()) {
            self.letters.remove(0);
        } else {
            self.letters.insert(0, l);
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }
}

impl std::fmt::Display for GroupWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for l in &self.letters {
            write!(f, "{}{}", (b'a' + (l.index % 26) as u8) as char, if l.inverse { "'" } else { "" })?;
        }
        Ok(())
    }
}

/// Enumerates all freely reduced words of length at most `max_len` over `m`
/// generators together with their composed transforms, ordered by length and
/// then lexicographically. The count is `1 + sum_k 2m (2m-1)^(k-1)`.
pub fn enumerate_group(
    generators: &[MobiusTransform],
    max_len: usize,
) -> Vec<(GroupWord, MobiusTransform)> {
    let m = generators.len();
    let mut all: Vec<(GroupWord, MobiusTransform)> =
        vec![(GroupWord::identity(), MobiusTransform::identity())];
    let mut frontier: Vec<(GroupWord, MobiusTransform)> = all.clone();
    let letters: Vec<Letter> = (0..m)
        .flat_map(|i| {
            [Letter { index: i, inverse: false }, Letter { index: i, inverse: true }]
        })
        .collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (word, transform) in &frontier {
            for &l in &letters {
                if word.letters().last() == Some(&l.inverted()) {
                    continue;
                }
                let mut w = word.clone();
                w.letters.push(l);
                let g = if l.inverse {
                    generators[l.index].inverse()
                } else {
                    generators[l.index]
                };
                // append on the right: new transform acts first
                next.push((w, *transform * g));
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// A finitely generated free Fuchsian group given by Schottky pairings, with
/// elements precomputed up to a word-length horizon.
#[derive(Clone, Debug)]
pub struct FuchsianGroup {
    pairings: Vec<Pairing>,
    generators: Vec<MobiusTransform>,
    elements: Vec<(GroupWord, MobiusTransform)>,
    /// `offsets[k]` = number of elements of word length < k; the slice
    /// `elements[..offsets[k + 1]]` holds all words of length <= k.
    offsets: Vec<usize>,
    horizon: usize,
}

impl FuchsianGroup {
    /// Builds the group from pairings after checking the ping-pong condition.
    pub fn from_pairings(pairings: Vec<Pairing>, horizon: usize) -> Result<Self> {
        let report = verify_schottky(&pairings);
        if let Some((i, j)) = report.intersecting {
            return Err(Error::CirclesIntersect(i, j));
        }
        let generators: Vec<MobiusTransform> = pairings.iter().map(|p| p.transform).collect();
        let elements = enumerate_group(&generators, horizon);
        let m = generators.len();
        let mut offsets = vec![0usize; horizon + 2];
        let mut count = 1usize;
        offsets[1] = 1;
        for k in 1..=horizon {
            count += 2 * m * (2 * m - 1).pow((k - 1) as u32).max(1);
            offsets[k + 1] = count;
        }
        debug_assert_eq!(count, elements.len());
        Ok(Self { pairings, generators, elements, offsets, horizon })
    }

    /// The trivial group (classical, non-equivariant setting).
    pub fn trivial() -> Self {
        Self {
            pairings: Vec::new(),
            generators: Vec::new(),
            elements: vec![(GroupWord::identity(), MobiusTransform::identity())],
            offsets: vec![0, 1],
            horizon: 0,
        }
    }

    pub fn pairings(&self) -> &[Pairing] {
        &self.pairings
    }

    pub fn generators(&self) -> &[MobiusTransform] {
        &self.generators
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// All elements of word length at most `l`.
    pub fn elements_up_to(&self, l: usize) -> Result<&[(GroupWord, MobiusTransform)]> {
        if l > self.horizon {
            return Err(Error::HorizonExceeded {
                point: Complex64::new(0.0, 0.0),
                limit: self.horizon,
            });
        }
        let end = self.offsets[(l + 1).min(self.offsets.len() - 1)];
        Ok(&self.elements[..end])
    }

    /// Composes the transform of a word.
    pub fn transform_of(&self, word: &GroupWord) -> MobiusTransform {
        let mut g = MobiusTransform::identity();
        for l in word.letters() {
            let step = if l.inverse {
                self.generators[l.index].inverse()
            } else {
                self.generators[l.index]
            };
            g = g * step;
        }
        g
    }

    /// Ping-pong descent: moves `z` into the closure of the standard
    /// fundamental domain (the complement of all pairing half-discs) and
    /// returns the representative together with the word mapping `z` to it.
    /// Points within `1e-12` of a circle are treated as already outside it.
    pub fn descend(&self, z: Complex64, max_steps: usize) -> Result<(Complex64, GroupWord)> {
        if z.norm() > 1.0 + 1e-9 {
            return Err(Error::OutsideDisc(z));
        }
        let mut current = z;
        let mut word = GroupWord::identity();
        for _ in 0..=max_steps {
            let mut moved = false;
            for (i, pairing) in self.pairings.iter().enumerate() {
                if pairing.source.depth(current) > 1e-12 {
                    current = pairing.transform.apply_closed(current)?;
                    word.push_left(Letter { index: i, inverse: false });
                    moved = true;
                    break;
                }
                if pairing.target.depth(current) > 1e-12 {
                    current = pairing.transform.inverse().apply_closed(current)?;
                    word.push_left(Letter { index: i, inverse: true });
                    moved = true;
                    break;
                }
            }
            if !moved {
                return Ok((current, word));
            }
            if word.len() > max_steps {
                break;
            }
        }
        Err(Error::HorizonExceeded { point: z, limit: max_steps })
    }

    /// True when `z` lies in the closure of the standard fundamental domain.
    pub fn in_fundamental_domain(&self, z: Complex64) -> bool {
        self.pairings.iter().all(|p| p.source.depth(z) <= 1e-12 && p.target.depth(z) <= 1e-12)
    }
}

/// Standard well-separated test configurations: `m = 1` pairs circles at
/// angles `0` and `pi` (annulus quotient); `m = 2` pairs adjacent circles at
/// angles `(0, pi/2)` and `(pi, 3pi/2)` (three boundary components).
pub fn standard_pairings(m: usize, radius: f64) -> Result<Vec<Pairing>> {
    if !(0.0..1.0).contains(&radius) {
        return Err(Error::Degenerate(format!("circle radius {radius} out of range")));
    }
    let d = (1.0 + radius * radius).sqrt();
    let circle = |angle: f64| Geodesic::new(Complex64::from_polar(d, angle), radius);
    use std::f64::consts::{FRAC_PI_2, PI};
    match m {
        1 => Ok(vec![Pairing::new(circle(0.0)?, circle(PI)?)?]),
        2 => Ok(vec![
            Pairing::new(circle(0.0)?, circle(FRAC_PI_2)?)?,
            Pairing::new(circle(PI)?, circle(PI + FRAC_PI_2)?)?,
        ]),
        _ => Err(Error::Degenerate(format!(
            "no standard configuration for m = {m}"
        ))),
    }
}

// ---------------------------------------------------------------------------
// JSON group specification
// ---------------------------------------------------------------------------

/// Serializable circle description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CircleSpec {
    pub center: [f64; 2],
    pub radius: f64,
}

/// Serializable pairing description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairingSpec {
    pub circle1: CircleSpec,
    pub circle2: CircleSpec,
}

/// Serializable generator matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub a_re: f64,
    pub a_im: f64,
    pub b_re: f64,
    pub b_im: f64,
}

/// Group specification file contents: either explicit circle pairings or
/// generator matrices (isometric circles are derived in the latter case).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Pairings { pairings: Vec<PairingSpec> },
    Generators { generators: Vec<GeneratorSpec> },
}

impl GroupSpec {
    pub fn to_pairings(&self) -> Result<Vec<Pairing>> {
        match self {
            GroupSpec::Pairings { pairings } => pairings
                .iter()
                .map(|p| {
                    let c1 = Geodesic::new(
                        Complex64::new(p.circle1.center[0], p.circle1.center[1]),
                        p.circle1.radius,
                    )?;
                    let c2 = Geodesic::new(
                        Complex64::new(p.circle2.center[0], p.circle2.center[1]),
                        p.circle2.radius,
                    )?;
                    Pairing::new(c1, c2)
                })
                .collect(),
            GroupSpec::Generators { generators } => generators
                .iter()
                .map(|g| {
                    let t = MobiusTransform::new(
                        Complex64::new(g.a_re, g.a_im),
                        Complex64::new(g.b_re, g.b_im),
                    )?;
                    Pairing::from_generator(t)
                })
                .collect(),
        }
    }
}

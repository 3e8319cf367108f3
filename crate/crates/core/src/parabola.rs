//! Element and value regions of the Parabola Theorem for continued
//! fractions, and scans of the ratio set `{z^a / ((z)_a (z)_b)}`.
//!
//! For `|α| < π/2` the element region is the closed parabolic set
//! `E_α = {a : |a| − Re(a·e^(−2iα)) ≤ ½cos²α}` and the value region is the
//! half plane `V_α = {w : Re(w·e^(−iα)) ≥ −½cosα}`. The theorem's step map
//! sends `w ↦ a/(1+w)`; whenever `a ∈ E_α`, the map carries `V_α` into
//! itself, which is what `value_set_step_check` samples. The parabola's
//! boundary in polar form is `r(θ)·e^(i(θ+2α))` with
//! `r(θ) = ½cos²α/(1−cosθ)`; it crosses the real axis at `−1/4` and the
//! vertex sits at `−¼e^(2iα)cos²α`.

use crate::poly::geom_val;
use crate::report::{CheckReport, Violation};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;
use thiserror::Error;

/// Membership slack below which a point counts as outside; boundary points
/// belong to the (closed) regions.
pub const REGION_TOL: f64 = 1e-12;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum AzError {
    #[error("geometric sum (z)_{a} vanishes for this z")]
    GeometricSumZero { a: u32 },
}

/// The pair of Parabola Theorem regions for one opening angle α.
#[derive(Clone, Copy, Debug)]
pub struct ParabolaRegion {
    alpha: f64,
    half_cos_sq: f64,
    half_cos: f64,
}

impl ParabolaRegion {
    pub fn new(alpha: f64) -> Self {
        Self::try_new(alpha).expect("opening angle must satisfy |alpha| < pi/2")
    }

    pub fn try_new(alpha: f64) -> Option<Self> {
        if !(alpha.abs() < std::f64::consts::FRAC_PI_2) {
            return None;
        }
        let c = alpha.cos();
        Some(ParabolaRegion { alpha, half_cos_sq: 0.5 * c * c, half_cos: 0.5 * c })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// ½cos²α, the right side of the element inequality.
    pub fn half_cos_sq(&self) -> f64 {
        self.half_cos_sq
    }

    /// Slack of the element inequality; nonnegative inside `E_α`.
    pub fn element_margin(&self, a: Complex64) -> f64 {
        let rot = a * Complex64::from_polar(1.0, -2.0 * self.alpha);
        self.half_cos_sq - (a.norm() - rot.re)
    }

    pub fn element_contains(&self, a: Complex64) -> bool {
        self.element_margin(a) >= -REGION_TOL
    }

    /// Slack of the value half-plane inequality; nonnegative inside `V_α`.
    pub fn value_margin(&self, w: Complex64) -> f64 {
        let rot = w * Complex64::from_polar(1.0, -self.alpha);
        rot.re + self.half_cos
    }

    pub fn value_contains(&self, w: Complex64) -> bool {
        self.value_margin(w) >= -REGION_TOL
    }

    /// Boundary of `E_α` in polar form, θ ∈ (0, 2π).
    pub fn element_boundary_point(&self, theta: f64) -> Complex64 {
        let r = self.half_cos_sq / (1.0 - theta.cos());
        Complex64::from_polar(r, theta + 2.0 * self.alpha)
    }

    /// Vertex `−¼e^(2iα)cos²α` of the parabola.
    pub fn vertex(&self) -> Complex64 {
        Complex64::from_polar(0.5 * self.half_cos_sq, 2.0 * self.alpha + std::f64::consts::PI)
    }

    /// Boundary of `V_α`: the line `e^(iα)(−½cosα + iv)`.
    pub fn value_boundary_point(&self, v: f64) -> Complex64 {
        Complex64::from_polar(1.0, self.alpha) * Complex64::new(-self.half_cos, v)
    }

    /// Interior of `V_α` at depth `d ≥ 0` behind the boundary line.
    pub fn value_interior_point(&self, d: f64, v: f64) -> Complex64 {
        Complex64::from_polar(1.0, self.alpha) * Complex64::new(-self.half_cos + d, v)
    }
}

/// Samples `w ∈ V_α` (boundary plus exponentially spaced interior points)
/// and checks that the step map `w ↦ a/(1+w)` lands back in `V_α`.
pub fn value_set_step_check(region: &ParabolaRegion, a: Complex64, sample_count: usize) -> CheckReport {
    let t0 = Instant::now();
    let mut report = CheckReport::new("parabola-step");
    assert!(
        region.element_contains(a),
        "step check requires an element of E_alpha"
    );
    let k = (sample_count / 24).max(4);
    let mut offsets = vec![0.0f64];
    let mut depths = vec![0.0f64];
    for i in 0..k {
        let mag = 10f64.powf(-6.0 + 9.0 * i as f64 / (k - 1) as f64);
        offsets.push(mag);
        offsets.push(-mag);
        depths.push(mag);
    }
    for &d in &depths {
        for &v in &offsets {
            let w = region.value_interior_point(d, v);
            debug_assert!(region.value_contains(w));
            let image = a / (Complex64::new(1.0, 0.0) + w);
            let margin = region.value_margin(image);
            report.observe(margin, REGION_TOL, || {
                format!("a={a} d={d:e} v={v:e} image={image}")
            });
        }
    }
    report.finalize(t0);
    report
}

/// One grid point of the ratio set.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AzPoint {
    pub a: u32,
    pub b: u32,
    pub re: f64,
    pub im: f64,
    pub inside: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AzViolation {
    pub a: u32,
    pub b: u32,
    pub value: [f64; 2],
}

/// Scan of `z^a/((z)_a (z)_b)` over `1 ≤ a ≤ a_max`, `1 ≤ b ≤ b_max`
/// against `E_α`, plus the a→∞ limit ray `(z−1)/(z)_b` when `|z| > 1`.
#[derive(Clone, Debug, Serialize)]
pub struct AzReport {
    pub z: [f64; 2],
    pub alpha: f64,
    pub a_max: u32,
    pub b_max: u32,
    pub violations: Vec<AzViolation>,
    pub limit_violations: Vec<AzViolation>,
    pub all_inside: bool,
    #[serde(skip)]
    pub points: Vec<AzPoint>,
}

pub fn az_scan(z: Complex64, alpha: f64, a_max: u32, b_max: u32) -> Result<AzReport, AzError> {
    let region = ParabolaRegion::new(alpha);
    let n_max = a_max.max(b_max);
    let mut geo = Vec::with_capacity(n_max as usize + 1);
    geo.push(Complex64::new(0.0, 0.0)); // unused slot for index 0
    for a in 1..=n_max {
        let g = geom_val(z, a);
        if g.norm() <= 1e-12 * z.norm().powi(a as i32 - 1).max(1.0) {
            return Err(AzError::GeometricSumZero { a });
        }
        geo.push(g);
    }
    let one = Complex64::new(1.0, 0.0);
    let points: Vec<AzPoint> = (1..=a_max)
        .into_par_iter()
        .flat_map_iter(|a| {
            // z^a/(z)_a = z − 1 + 1/(z)_a, stable for any a
            let ratio_a = z - one + one / geo[a as usize];
            let geo = &geo;
            (1..=b_max).map(move |b| {
                let value = ratio_a / geo[b as usize];
                AzPoint {
                    a,
                    b,
                    re: value.re,
                    im: value.im,
                    inside: region.element_contains(value),
                }
            })
        })
        .collect();
    let violations: Vec<AzViolation> = points
        .iter()
        .filter(|p| !p.inside)
        .map(|p| AzViolation { a: p.a, b: p.b, value: [p.re, p.im] })
        .collect();
    let mut limit_violations = Vec::new();
    if z.norm() > 1.0 + 1e-9 {
        for b in 1..=b_max {
            let value = (z - one) / geo[b as usize];
            if !region.element_contains(value) {
                limit_violations.push(AzViolation { a: u32::MAX, b, value: [value.re, value.im] });
            }
        }
    }
    let all_inside = violations.is_empty() && limit_violations.is_empty();
    Ok(AzReport {
        z: [z.re, z.im],
        alpha,
        a_max,
        b_max,
        violations,
        limit_violations,
        all_inside,
        points,
    })
}

/// For each α on a uniform grid of (−π/2, π/2), reports whether the whole
/// ratio-set grid for `z` fits inside `E_α`.
pub fn az_alpha_sweep(
    z: Complex64,
    a_max: u32,
    b_max: u32,
    alpha_count: usize,
) -> Result<Vec<(f64, bool)>, AzError> {
    let mut out = Vec::with_capacity(alpha_count);
    let base = az_scan(z, 0.0, a_max, b_max)?;
    for i in 0..alpha_count {
        let alpha = -std::f64::consts::FRAC_PI_2
            + std::f64::consts::PI * (i + 1) as f64 / (alpha_count + 1) as f64;
        let region = ParabolaRegion::new(alpha);
        let all = base
            .points
            .iter()
            .all(|p| region.element_contains(Complex64::new(p.re, p.im)));
        out.push((alpha, all));
    }
    Ok(out)
}

/// Boundary check report entry used by the CLI figure exports.
pub fn element_boundary_polyline(region: &ParabolaRegion, r_cap: f64, count: usize) -> Vec<Complex64> {
    // keep only boundary points with radius ≤ r_cap; θ = 0 is the point at
    // infinity and is excluded by construction
    let mut pts = Vec::new();
    for i in 1..count {
        let theta = 2.0 * std::f64::consts::PI * i as f64 / count as f64;
        let p = region.element_boundary_point(theta);
        if p.norm() <= r_cap {
            pts.push(p);
        }
    }
    pts
}

pub fn check_report_from_az(report: &AzReport) -> CheckReport {
    let mut cr = CheckReport::new("azscan");
    cr.samples = report.points.len() as u64;
    let region = ParabolaRegion::new(report.alpha);
    cr.worst_margin = report
        .points
        .iter()
        .map(|p| region.element_margin(Complex64::new(p.re, p.im)))
        .fold(f64::INFINITY, f64::min);
    cr.violations = report
        .violations
        .iter()
        .chain(report.limit_violations.iter())
        .map(|v| Violation {
            label: format!("a={} b={} value={}+{}i", v.a, v.b, v.value[0], v.value[1]),
            margin: region.element_margin(Complex64::new(v.value[0], v.value[1])),
        })
        .collect();
    cr
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const ALPHA12: f64 = PI / 12.0;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn element_membership_examples() {
        let e = ParabolaRegion::new(ALPHA12);
        // real axis crossing, a boundary point: |−1/4| + (1/4)cos(π/6) = (2+√3)/8
        assert!(e.element_contains(c(-0.25, 0.0)));
        assert!(e.element_margin(c(-0.25, 0.0)).abs() < 1e-15);
        // origin
        assert!(e.element_contains(c(0.0, 0.0)));
        // vertex is on the boundary
        let v = e.vertex();
        assert!(e.element_contains(v));
        assert!(e.element_margin(v).abs() < 1e-15);
        // just outside along the negative real axis
        assert!(!e.element_contains(c(-0.26, 0.0)));
        // the half_cos_sq constant at π/12 is (2+√3)/8
        assert!((e.half_cos_sq() - (2.0 + 3f64.sqrt()) / 8.0).abs() < 1e-15);
    }

    #[test]
    fn value_membership_examples() {
        let e = ParabolaRegion::new(ALPHA12);
        // −1/2 is on the boundary line for every α
        assert!(e.value_contains(c(-0.5, 0.0)));
        assert!(e.value_margin(c(-0.5, 0.0)).abs() < 1e-15);
        assert!(e.value_contains(c(0.0, 0.0)));
        // −1 lies strictly outside for |α| < π/2
        assert!(!e.value_contains(c(-1.0, 0.0)));
        for alpha in [-1.2, -0.3, 0.0, 0.4, 1.3] {
            let r = ParabolaRegion::new(alpha);
            assert!(!r.value_contains(c(-1.0, 0.0)), "alpha={alpha}");
            assert!(r.value_margin(c(-0.5, 0.0)).abs() < 1e-15);
        }
    }

    #[test]
    fn boundary_polar_form_sits_on_boundary() {
        for alpha in [-1.0, -0.5, 0.0, ALPHA12, 0.9] {
            let e = ParabolaRegion::new(alpha);
            for i in 1..200 {
                let theta = 2.0 * PI * i as f64 / 200.0;
                let p = e.element_boundary_point(theta);
                assert!(
                    e.element_margin(p).abs() <= 1e-10 * (1.0 + p.norm()),
                    "alpha={alpha} theta={theta}"
                );
            }
        }
    }

    #[test]
    fn step_check_examples() {
        let e = ParabolaRegion::new(ALPHA12);
        let r = value_set_step_check(&e, c(-0.25, 0.0), 10_000);
        assert!(r.passed(), "worst {}", r.worst_margin);
        let r0 = value_set_step_check(&e, c(0.0, 0.0), 10_000);
        assert!(r0.passed());
        let e0 = ParabolaRegion::new(0.0);
        let r1 = value_set_step_check(&e0, c(0.25, 0.0), 10_000);
        assert!(r1.passed());
    }

    #[test]
    fn step_check_randomized_elements() {
        // deterministic pairs (α, a ∈ E_α): a sampled along the boundary
        // parametrization scaled inward
        let mut state = 0x6a09e667f3bcc908u64;
        let mut next = move || {
            state = state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^= z >> 31;
            (z >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            let alpha = (next() - 0.5) * 2.8;
            let e = ParabolaRegion::new(alpha);
            let theta = 0.05 + next() * (2.0 * PI - 0.1);
            let scale = next();
            let a = e.element_boundary_point(theta) * scale;
            assert!(e.element_contains(a));
            let r = value_set_step_check(&e, a, 200);
            assert!(r.passed(), "alpha={alpha} a={a} worst={}", r.worst_margin);
        }
    }

    #[test]
    fn az_scan_boundary_point_of_disk() {
        // z on the upper boundary of |w−2| ≤ 1
        let z = c(2.0 - (PI / 7.0).cos(), (PI / 7.0).sin());
        let rep = az_scan(z, ALPHA12, 50, 50).unwrap();
        assert!(rep.all_inside, "violations: {:?}", rep.violations);
    }

    #[test]
    fn az_scan_near_miss_angle_has_outside_points() {
        let rep = az_scan(c(1.0, 2.5), 0.16 * PI, 50, 50).unwrap();
        assert!(!rep.all_inside);
        assert!(!rep.violations.is_empty());
    }

    #[test]
    fn az_scan_real_point_stays_real_and_inside() {
        let rep = az_scan(c(3.0, 0.0), ALPHA12, 40, 40).unwrap();
        assert!(rep.all_inside);
        for p in &rep.points {
            assert!(p.im.abs() < 1e-12);
            assert!(p.re > 0.0);
        }
    }

    #[test]
    fn az_scan_rejects_vanishing_geometric_sum() {
        // (z)_4 = 0 at z = i
        let err = az_scan(c(0.0, 1.0), ALPHA12, 6, 6).unwrap_err();
        assert_eq!(err, AzError::GeometricSumZero { a: 4 });
    }

    #[test]
    fn alpha_sweep_finds_no_containing_angle_for_near_miss_z() {
        let sweep = az_alpha_sweep(c(1.0, 2.5), 50, 50, 721).unwrap();
        assert_eq!(sweep.len(), 721);
        assert!(sweep.iter().all(|&(_, inside)| !inside));
    }
}

//! Numerical verification lab for the geometric-sum inequalities.
//!
//! Everything here revolves around lower bounds for `|(z)_n|`, the modulus
//! of the geometric sum, on and inside the disk `|z − 2| ≤ 1`:
//!
//! * `pn_poly`/`pn_min`: the polynomial `P_n` with `|(1+it)_n|² = P_n(t²)`
//!   and its minimum over `t ∈ ℝ`, computed from the exact integer
//!   derivative by sign-change bisection.
//! * `check_mo_inequality`: `|(1+it/n)^n − 1| ≥ |e^(it) − 1|`.
//! * `check_ball_min`: `|(z)_n| ≥ min(n, 11/2)` on the disk.
//! * `check_wnt_bounds`: three lower bounds along the boundary
//!   parametrization `w = (2 − cos(t/n)) + i·sin(t/n)`.
//! * `check_small_cases`: `|(z)_5| ≥ 5|z|` and `|(z)_6| ≥ 6|z|` on the
//!   boundary circle, with exact polynomial certificates.
//! * `check_aux_lemmas`: the elementary inequalities the above rest on.
//! * `check_region_inclusions`: five planar sets that must land inside the
//!   parabolic element region with opening angle π/12.
//!
//! Checks return a `CheckReport`; a report passes when no sampled margin
//! dips below tolerance. Conjectural observations are written to the
//! report's diagnostics and never gate anything.

use crate::parabola::ParabolaRegion;
use crate::poly::{geom_val, IntPoly};
use crate::report::{CheckReport, GridSpec, MARGIN_TOL};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::time::Instant;

/// A geometric-sum value `(z)_n` tagged with its inputs.
#[derive(Clone, Copy, Debug)]
pub struct GeomValue {
    pub z: Complex64,
    pub n: u32,
    pub value: Complex64,
}

impl GeomValue {
    pub fn new(z: Complex64, n: u32) -> Self {
        GeomValue { z, n, value: geom_val(z, n) }
    }
}

/// Boundary point `w = (2 − cos(t/n)) + i·sin(t/n)` of the disk
/// `|w − 2| ≤ 1`, with `|w|² = 5 − 4cos(t/n)`.
#[derive(Clone, Copy, Debug)]
pub struct DiskBoundaryPoint {
    pub n: u32,
    pub t: f64,
    pub value: Complex64,
}

impl DiskBoundaryPoint {
    pub fn new(n: u32, t: f64) -> Self {
        assert!(n >= 1);
        assert!(t > 0.0 && t <= n as f64 * PI, "need 0 < t ≤ nπ");
        let phase = t / n as f64;
        let value = Complex64::new(2.0 - phase.cos(), phase.sin());
        let modulus_sq = 5.0 - 4.0 * phase.cos();
        assert!(
            (value.norm_sqr() - modulus_sq).abs() <= 1e-12,
            "boundary point invariant"
        );
        DiskBoundaryPoint { n, t, value }
    }
}

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(1)];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// Exact polynomial `P_n` with `|(1+it)_n|² = P_n(t²)`.
///
/// `|(1+it)_n|²·t² = |(1+it)^n − 1|² = (1+t²)^n − 2·Re(1+it)^n + 1`, and the
/// right side is a polynomial in `u = t²` with zero constant term.
pub fn pn_poly(n: u32) -> IntPoly {
    assert!(n >= 1);
    let n = n as usize;
    let row = binomial_row(n);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (j, c) in row.iter().enumerate() {
        coeffs[j] += c;
    }
    coeffs[0] += 1;
    for j in 0..=n / 2 {
        let term = &row[2 * j] * BigInt::from(2);
        if j % 2 == 0 {
            coeffs[j] -= term;
        } else {
            coeffs[j] += term;
        }
    }
    assert!(coeffs[0].is_zero());
    IntPoly::from_coeffs(coeffs[1..].to_vec())
}

fn horner_f64(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn bisect_sign_change(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= 1e-12 * (1.0 + mid.abs()) {
            return mid;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `min over t of |(1+it)_n| = sqrt(min over x ≥ 0 of P_n(x))`, locating the
/// minimum through sign changes of the exact derivative and bisecting each
/// bracket down to width 1e-12.
pub fn pn_min(n: u32) -> f64 {
    assert!((1..=64).contains(&n), "practical cap");
    let p = pn_poly(n);
    let pc = p.coeffs_f64();
    if p.degree() == Some(0) {
        return pc[0].sqrt();
    }
    let d = p.derivative();
    let dc = d.coeffs_f64();
    let lead = *dc.last().unwrap();
    // Fujiwara-type bound on the derivative's root moduli
    let deg = dc.len() - 1;
    let mut xmax: f64 = 1.0;
    for k in 1..=deg {
        let b = (dc[deg - k] / lead).abs().powf(1.0 / k as f64);
        xmax = xmax.max(2.0 * b);
    }
    let steps = ((xmax * 64.0).ceil() as usize).clamp(4096, 1 << 20);
    let mut best = horner_f64(&pc, 0.0);
    let mut prev_x = 0.0;
    let mut prev_s = horner_f64(&dc, 0.0);
    for i in 1..=steps {
        let x = xmax * i as f64 / steps as f64;
        let s = horner_f64(&dc, x);
        if (prev_s <= 0.0 && s >= 0.0) || (prev_s >= 0.0 && s <= 0.0) {
            let root = bisect_sign_change(|t| horner_f64(&dc, t), prev_x, x);
            best = best.min(horner_f64(&pc, root));
        }
        prev_x = x;
        prev_s = s;
    }
    best.sqrt()
}

/// Reference values for `min_t |(1+it)_n|`, n = 1..=14, rounded to the
/// shown digits; the sequence rises to its peak at n = 9 and decreases
/// afterwards.
pub const LINE_MINIMA: [f64; 14] = [
    1.0, 2.0, 3.0, 4.0, 5.0, 5.8206, 6.3003, 6.5136, 6.5474, 6.4727, 6.3388, 6.1771, 6.0069,
    5.8386,
];

/// Compares `pn_min` against the frozen reference at tolerance 5e-4.
pub fn table3_report() -> CheckReport {
    let t0 = Instant::now();
    let mut report = CheckReport::new("table3");
    let computed: Vec<(u32, f64)> = (1..=14u32).into_par_iter().map(|n| (n, pn_min(n))).collect();
    for &(n, got) in &computed {
        let want = LINE_MINIMA[n as usize - 1];
        report.observe(5e-4 - (got - want).abs(), 0.0, || {
            format!("n={n} got={got} want={want}")
        });
        report.diagnostics.insert(format!("min_n{n:02}"), got);
    }
    // unimodal shape: increasing through n = 9, decreasing after
    for w in computed.windows(2) {
        let ((n0, a), (n1, b)) = (w[0], w[1]);
        let ok = if n1 <= 9 { b > a } else { b < a };
        report.observe(if ok { 1.0 } else { -1.0 }, 0.0, || {
            format!("shape between n={n0} and n={n1}")
        });
    }
    report.finalize(t0);
    report
}

/// `|(1+it/n)^n − 1| ≥ |e^(it) − 1| = 2|sin(t/2)|` over a t-grid for each
/// `n ≤ n_max`.
pub fn check_mo_inequality(n_max: u32, t_grid: &GridSpec) -> CheckReport {
    let t0 = Instant::now();
    let pts = t_grid.points();
    let mut merged = CheckReport::new("mo");
    let parts: Vec<CheckReport> = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut r = CheckReport::new("mo");
            for &t in &pts {
                let lhs = (Complex64::new(1.0, t / n as f64).powu(n) - Complex64::new(1.0, 0.0))
                    .norm();
                let rhs = 2.0 * (t / 2.0).sin().abs();
                r.observe(lhs - rhs, MARGIN_TOL, || format!("n={n} t={t}"));
            }
            r
        })
        .collect();
    for p in parts {
        merged.merge(p);
    }
    merged.finalize(t0);
    merged
}

/// `|(z)_n| ≥ min(n, 11/2)` sampled on the boundary circle `|z − 2| = 1`,
/// on interior rings, and along the boundary parametrization points.
/// The observed boundary minimum lands in the diagnostics.
pub fn check_ball_min(n: u32, boundary_samples: usize) -> CheckReport {
    let t0 = Instant::now();
    let mut report = CheckReport::new("ballmin");
    let bound = (n as f64).min(5.5);
    let mut observed_min = f64::INFINITY;
    {
        let mut sample = |z: Complex64, label: &dyn Fn() -> String| {
            let v = geom_val(z, n).norm();
            observed_min = observed_min.min(v);
            report.observe(v - bound, MARGIN_TOL, label);
        };
        for k in 0..boundary_samples {
            let th = 2.0 * PI * k as f64 / boundary_samples as f64;
            let z = Complex64::new(2.0 + th.cos(), th.sin());
            sample(z, &|| format!("n={n} boundary theta={th}"));
        }
        for &rho in &[0.0, 0.25, 0.5, 0.75] {
            let count = (boundary_samples / 8).max(8);
            for k in 0..count {
                let th = 2.0 * PI * k as f64 / count as f64;
                let z = Complex64::new(2.0 + rho * th.cos(), rho * th.sin());
                sample(z, &|| format!("n={n} interior rho={rho} theta={th}"));
                if rho == 0.0 {
                    break;
                }
            }
        }
        let tcount = (boundary_samples / 4).max(16);
        let tmax = n as f64 * PI;
        for i in 1..=tcount {
            // the fraction hits 1.0 exactly at the last step, keeping
            // t inside the (0, nπ] domain regardless of rounding
            let t = tmax * (i as f64 / tcount as f64);
            let w = DiskBoundaryPoint::new(n, t);
            sample(w.value, &|| format!("n={n} curve t={t}"));
        }
    }
    report.diagnostics.insert("observed_min".into(), observed_min);
    report.finalize(t0);
    report
}

/// Runs `check_ball_min` for every `n ≤ n_max` and aggregates. Also records
/// how the observed minima for `n ≥ 7` compare against 2π (a conjectured
/// asymptotic floor, reported only), together with the maximum of the
/// cubic proof polynomial `π(2−11x) + π³(2−11x)³(x/2 − 11x²/8)` on
/// `[0, 1/15]`.
pub fn check_ball_min_range(n_max: u32, boundary_samples: usize) -> CheckReport {
    let t0 = Instant::now();
    let mut merged = CheckReport::new("ballmin");
    let parts: Vec<CheckReport> = (1..=n_max)
        .into_par_iter()
        .map(|n| check_ball_min(n, boundary_samples))
        .collect();
    let two_pi = 2.0 * PI;
    let mut conj_slack = f64::INFINITY;
    for (i, mut p) in parts.into_iter().enumerate() {
        let n = i as u32 + 1;
        if n >= 7 {
            if let Some(&m) = p.diagnostics.get("observed_min") {
                conj_slack = conj_slack.min(m - two_pi);
            }
        }
        p.diagnostics.clear();
        merged.merge(p);
    }
    merged.diagnostics.insert("conjectured_floor_two_pi".into(), two_pi);
    merged.diagnostics.insert("min_slack_above_two_pi_n_ge_7".into(), conj_slack);
    let proof_poly = |x: f64| {
        let s = 2.0 - 11.0 * x;
        PI * s + PI.powi(3) * s.powi(3) * (0.5 * x - 11.0 / 8.0 * x * x)
    };
    let (argmax, maxval) = golden_max(proof_poly, 0.0, 1.0 / 15.0);
    merged.diagnostics.insert("proof_poly_max".into(), maxval);
    merged.diagnostics.insert("proof_poly_argmax".into(), argmax);
    merged.diagnostics.insert("proof_poly_right_end".into(), proof_poly(1.0 / 15.0));
    merged.finalize(t0);
    merged
}

fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - phi * (b - a);
    let mut d = a + phi * (b - a);
    for _ in 0..200 {
        if f(c) > f(d) {
            b = d;
        } else {
            a = c;
        }
        if b - a < 1e-14 {
            break;
        }
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Three lower bounds for `|(w)_n|` along the boundary parametrization:
/// the linear bound `n(1 − t/2π)` on `(0, nπ]`, the sine bound
/// `2n·sin(t/2n)` on `(0, nπ]` for `n ≥ 4`, and the fifth-order bound
/// `t + t³(1/(2n) − 25/(24n²)) − t⁵(1/(8n³) − 1/(16n⁴))` on `(0, 2π]`.
pub fn check_wnt_bounds(n: u32, t_points: usize) -> CheckReport {
    let t0 = Instant::now();
    let mut report = CheckReport::new("wnt");
    let nf = n as f64;
    let full = GridSpec::new(0.0, nf * PI, t_points).points_open_start();
    for &t in &full {
        let w = DiskBoundaryPoint::new(n, t);
        let v = geom_val(w.value, n).norm();
        let linear = nf * (1.0 - t / (2.0 * PI));
        report.observe(v - linear, MARGIN_TOL, || format!("linear n={n} t={t}"));
        if n >= 4 {
            let sine = 2.0 * nf * (t / (2.0 * nf)).sin();
            report.observe(v - sine, MARGIN_TOL, || format!("sine n={n} t={t}"));
        }
    }
    let short = GridSpec::new(0.0, 2.0 * PI, t_points).points_open_start();
    for &t in &short {
        if t > nf * PI {
            break;
        }
        let w = DiskBoundaryPoint::new(n, t);
        let v = geom_val(w.value, n).norm();
        let t3 = 1.0 / (2.0 * nf) - 25.0 / (24.0 * nf * nf);
        let t5 = 1.0 / (8.0 * nf.powi(3)) - 1.0 / (16.0 * nf.powi(4));
        let fifth = t + t.powi(3) * t3 - t.powi(5) * t5;
        report.observe(v - fifth, MARGIN_TOL, || format!("fifth n={n} t={t}"));
    }
    report.finalize(t0);
    report
}

pub fn check_wnt_bounds_range(ns: &[u32], t_points: usize) -> CheckReport {
    let t0 = Instant::now();
    let mut merged = CheckReport::new("wnt");
    let parts: Vec<CheckReport> =
        ns.par_iter().map(|&n| check_wnt_bounds(n, t_points)).collect();
    for p in parts {
        merged.merge(p);
    }
    merged.finalize(t0);
    merged
}

/// `|(z)_5| ≥ 5|z|` and `|(z)_6| ≥ 6|z|` on the boundary circle, plus the
/// exact certificates for the same inequalities in the radial variable:
/// with `cosθ = (r²+3)/(4r)`,
///
/// ```text
/// |(z)_5|² − 25|z|² ·|z−1|²-normalized = (r²−1)³(31r⁴+98r²+211)/32
/// |(z)_6|² − 36|z|² ·…                = (r²−1)²(63r⁸+132r⁶+210r⁴+308r²−665)/64
/// ```
///
/// both compared against the direct trigonometric evaluation at relative
/// tolerance 1e-9. The analogous ratio slack for n = 7..12 is recorded in
/// the diagnostics without being asserted.
pub fn check_small_cases(samples: usize) -> CheckReport {
    let t0 = Instant::now();
    let mut report = CheckReport::new("smallcases");
    for k in 0..samples {
        let phi = 2.0 * PI * k as f64 / samples as f64;
        let z = Complex64::new(2.0 + phi.cos(), phi.sin());
        let zn = z.norm();
        let m5 = geom_val(z, 5).norm() - 5.0 * zn;
        let m6 = geom_val(z, 6).norm() - 6.0 * zn;
        report.observe(m5, MARGIN_TOL, || format!("n=5 phi={phi}"));
        report.observe(m6, MARGIN_TOL, || format!("n=6 phi={phi}"));
    }
    for nn in 7..=12u32 {
        let mut slack = f64::INFINITY;
        for k in 0..samples {
            let phi = 2.0 * PI * k as f64 / samples as f64;
            let z = Complex64::new(2.0 + phi.cos(), phi.sin());
            slack = slack.min(geom_val(z, nn).norm() - nn as f64 * z.norm());
        }
        report.diagnostics.insert(format!("ratio_slack_n{nn}"), slack);
    }
    // radial certificates on r ∈ [1, 3]
    let rgrid = GridSpec::new(1.0, 3.0, samples.max(2)).points();
    for &r in &rgrid {
        let c = ((r * r + 3.0) / (4.0 * r)).min(1.0);
        let r2 = r * r;
        let cos5 = 16.0 * c.powi(5) - 20.0 * c.powi(3) + 5.0 * c;
        let cos6 = 32.0 * c.powi(6) - 48.0 * c.powi(4) + 18.0 * c * c - 1.0;
        let direct5 = r.powi(10) - 2.0 * r.powi(5) * cos5 + 1.0 - 25.0 * r2 * (r2 - 2.0 * r * c + 1.0);
        let cert5 = (r2 - 1.0).powi(3) * (31.0 * r2 * r2 + 98.0 * r2 + 211.0) / 32.0;
        let direct6 = r.powi(12) - 2.0 * r.powi(6) * cos6 + 1.0 - 36.0 * r2 * (r2 - 2.0 * r * c + 1.0);
        let cert6 = (r2 - 1.0).powi(2)
            * (63.0 * r2.powi(4) + 132.0 * r2.powi(3) + 210.0 * r2 * r2 + 308.0 * r2 - 665.0)
            / 64.0;
        report.observe(cert5, MARGIN_TOL, || format!("cert5 nonneg r={r}"));
        report.observe(cert6, MARGIN_TOL, || format!("cert6 nonneg r={r}"));
        let tol5 = 1e-9 * cert5.abs().max(1.0);
        let tol6 = 1e-9 * cert6.abs().max(1.0);
        report.observe(tol5 - (direct5 - cert5).abs(), 0.0, || {
            format!("cert5 agreement r={r} direct={direct5} cert={cert5}")
        });
        report.observe(tol6 - (direct6 - cert6).abs(), 0.0, || {
            format!("cert6 agreement r={r} direct={direct6} cert={cert6}")
        });
    }
    report.finalize(t0);
    report
}

/// The elementary inequalities used by the bound proofs:
///
/// * `sin x ≥ x − x²/π` on the reals, with equality at 0 and π;
/// * `(1+x)^r ≥ 1 + rx + r(r−1)/2·x²` for `x ≥ 0`, `r ≥ 2`;
/// * `|(z)_a| ≥ |z|^(a−1)` for `Re z ≥ 1` (a Mitrinović-type bound);
/// * `|(x+yi)_n| ≥ |(x₀+yi)_n|` for `x ≥ x₀ ≥ 1`;
/// * on the closed upper half-disk `|z−2| ≤ 1, Im z ≥ 0`: `0 ≤ arg z ≤ π/6`
///   (tangency at `z = 3/2 + i√3/2`) and `|Re z⁻⁴| ≤ |Re z⁻²|`.
pub fn check_aux_lemmas(samples: usize) -> CheckReport {
    let t0 = Instant::now();
    let mut report = CheckReport::new("auxlemmas");
    let block = (samples / 5).max(64);

    // sinc lower bound
    for &x in &GridSpec::new(-2.0 * PI, 3.0 * PI, block).points() {
        report.observe(x.sin() - (x - x * x / PI), MARGIN_TOL, || format!("sinc x={x}"));
    }
    report.observe_equality(0.0f64.sin() - (0.0 - 0.0), 1e-9, || "sinc equality x=0".into());
    report.observe_equality(PI.sin() - (PI - PI), 1e-9, || "sinc equality x=pi".into());

    // quadratic Bernoulli bound
    let side = (block as f64).sqrt() as usize + 1;
    for &r in &GridSpec::new(2.0, 8.0, side).points() {
        for &x in &GridSpec::new(0.0, 5.0, side).points() {
            let margin = (1.0 + x).powf(r) - (1.0 + r * x + r * (r - 1.0) / 2.0 * x * x);
            report.observe(margin, MARGIN_TOL, || format!("bernoulli r={r} x={x}"));
        }
    }
    report.observe_equality((1.0f64 + 0.0).powf(3.7) - 1.0, 1e-9, || {
        "bernoulli equality x=0".into()
    });
    {
        let x = 1.7f64;
        let margin = (1.0 + x).powi(2) - (1.0 + 2.0 * x + x * x);
        report.observe_equality(margin, 1e-9, || "bernoulli equality r=2".into());
    }

    // modulus lower bound for Re z ≥ 1
    let cube = ((block as f64).cbrt() as usize + 1).max(4);
    for &x in &GridSpec::new(1.0, 3.0, cube).points() {
        for &y in &GridSpec::new(-3.0, 3.0, cube).points() {
            let z = Complex64::new(x, y);
            for a in 1..=12u32 {
                let margin = geom_val(z, a).norm() - z.norm().powi(a as i32 - 1);
                report.observe(margin, MARGIN_TOL, || format!("modulus a={a} z={z}"));
            }
        }
    }
    report.observe_equality(geom_val(Complex64::new(1.5, -2.0), 1).norm() - 1.0, 1e-9, || {
        "modulus equality a=1".into()
    });

    // push-left monotonicity in the real part
    for &x0 in &[1.0, 1.5, 2.0] {
        for &dx in &GridSpec::new(0.0, 2.0, cube).points() {
            for &y in &GridSpec::new(-3.0, 3.0, cube).points() {
                for n in 1..=10u32 {
                    let lhs = geom_val(Complex64::new(x0 + dx, y), n).norm();
                    let rhs = geom_val(Complex64::new(x0, y), n).norm();
                    report.observe(lhs - rhs, MARGIN_TOL, || {
                        format!("pushleft x0={x0} dx={dx} y={y} n={n}")
                    });
                }
            }
        }
    }

    // upper half-disk: argument cone and inverse-power comparison
    let rim = (block / 16).max(32);
    for i in 0..=rim {
        let rho = i as f64 / rim as f64;
        for j in 0..=rim {
            let phi = PI * j as f64 / rim as f64;
            let z = Complex64::new(2.0 + rho * phi.cos(), rho * phi.sin());
            if z.im < 0.0 {
                continue;
            }
            let arg = z.arg();
            report.observe(PI / 6.0 - arg, MARGIN_TOL, || format!("argcone z={z}"));
            report.observe(arg, MARGIN_TOL, || format!("argcone-nonneg z={z}"));
            let inv2 = (z.powi(-2)).re.abs();
            let inv4 = (z.powi(-4)).re.abs();
            report.observe(inv2 - inv4, MARGIN_TOL, || format!("invpowers z={z}"));
            if rho == 0.0 {
                break;
            }
        }
    }
    let tangent = Complex64::new(1.5, 3f64.sqrt() / 2.0);
    report.observe_equality(PI / 6.0 - tangent.arg(), 1e-9, || "argcone tangency".into());

    report.finalize(t0);
    report
}

/// Five planar sets that must sit inside the element region `E` with
/// opening angle π/12: the ball `B(0, 0.23)`, the upper half of
/// `B(3/2, 7/4)`, the Minkowski sum `B(0, 1/5) + B(1, 1)⁺`, `B(1/2.3, 1/2.3)`
/// (the inverse of the half plane `Re ≥ 1.15`), and `B(0.25, 0.35)`.
/// Spot checks: the polar boundary parametrization sits on the boundary;
/// max Re over the inverse region `E⁻¹` is ≈ 1.13861 (< 1.14), attained
/// near θ = 4π/9; and the squared distance from 3/2 to the boundary,
/// `g(θ) = r² − 3r·cos(θ+π/6) + 9/4`, has minimum 49/16 at θ = 5π/6.
pub fn check_region_inclusions(samples_per_set: usize) -> CheckReport {
    let t0 = Instant::now();
    let mut report = CheckReport::new("regions");
    let e = ParabolaRegion::new(PI / 12.0);
    let lambda = e.half_cos_sq();

    let include = |z: Complex64, name: &str, report: &mut CheckReport| {
        report.observe(e.element_margin(z), 1e-12, || format!("{name} z={z}"));
    };

    let ring = (samples_per_set / 4).max(64);

    // (a) ball(0, 0.23)
    for &rho in &[0.23, 0.15, 0.05] {
        for k in 0..ring {
            let th = 2.0 * PI * k as f64 / ring as f64;
            include(Complex64::from_polar(rho, th), "set-a", &mut report);
        }
    }

    // (b) upper half of ball(3/2, 7/4)
    for &rho in &[1.75, 1.3, 0.8, 0.3] {
        for &phi in &GridSpec::new(0.0, PI, ring).points() {
            include(Complex64::new(1.5 + rho * phi.cos(), rho * phi.sin()), "set-b", &mut report);
        }
    }

    // (c) Minkowski sum ball(0, 1/5) + upper half of ball(1, 1)
    let small = (ring / 4).max(12);
    for &ru in &[0.2, 0.12] {
        for ku in 0..small {
            let tu = 2.0 * PI * ku as f64 / small as f64;
            let u = Complex64::from_polar(ru, tu);
            for &rv in &[1.0, 0.6, 0.2] {
                for &pv in &GridSpec::new(0.0, PI, small).points() {
                    let v = Complex64::new(1.0 + rv * pv.cos(), rv * pv.sin());
                    include(u + v, "set-c", &mut report);
                }
            }
        }
    }

    // (d) ball(1/2.3, 1/2.3), the inverse of the half plane Re ≥ 1.15
    let dc = 1.0 / 2.3;
    for &rho in &[dc, 0.3, 0.1] {
        for k in 0..ring {
            let th = 2.0 * PI * k as f64 / ring as f64;
            include(Complex64::new(dc, 0.0) + Complex64::from_polar(rho, th), "set-d", &mut report);
        }
    }
    // the same set described directly: inverses of points with Re w = 1.15
    for &im in &GridSpec::new(-40.0, 40.0, ring).points() {
        let w = Complex64::new(1.15, im);
        include(w.inv(), "set-d-line", &mut report);
    }

    // (e) ball(0.25, 0.35)
    for &rho in &[0.35, 0.22, 0.08] {
        for k in 0..ring {
            let th = 2.0 * PI * k as f64 / ring as f64;
            include(Complex64::new(0.25, 0.0) + Complex64::from_polar(rho, th), "set-e", &mut report);
        }
    }

    // spot check: boundary parametrization has zero element margin
    for i in 1..200 {
        let theta = 2.0 * PI * i as f64 / 200.0;
        let p = e.element_boundary_point(theta);
        let dev = e.element_margin(p).abs();
        report.observe(1e-10 * (1.0 + p.norm()) - dev, 0.0, || {
            format!("boundary-parametrization theta={theta}")
        });
    }

    // spot check: max Re over E⁻¹
    let f = |theta: f64| (1.0 - theta.cos()) / lambda * (theta - PI / 6.0).cos();
    let grid = 20_000;
    let mut best_theta = 0.0;
    let mut best = f64::NEG_INFINITY;
    for i in 1..grid {
        let theta = 2.0 * PI * i as f64 / grid as f64;
        let v = f(theta);
        if v > best {
            best = v;
            best_theta = theta;
        }
    }
    let window = 2.0 * PI / grid as f64;
    let (argmax, maxre) = golden_max(f, best_theta - window, best_theta + window);
    report.diagnostics.insert("inverse_region_max_re".into(), maxre);
    report.diagnostics.insert("inverse_region_argmax".into(), argmax);
    report.observe(1.14 - maxre, 0.0, || format!("inverse-region max Re {maxre}"));
    report.observe(1e-3 - (maxre - 1.13861).abs(), 0.0, || {
        format!("inverse-region max Re {maxre} vs 1.13861")
    });
    report.observe(1e-2 - (argmax - 4.0 * PI / 9.0).abs(), 0.0, || {
        format!("inverse-region argmax {argmax} vs 4π/9")
    });

    // spot check: distance² from 3/2 to the boundary over θ ∈ [−π/6, 5π/6]
    let g = |theta: f64| {
        let r = lambda / (1.0 - theta.cos());
        r * r - 3.0 * r * (theta + PI / 6.0).cos() + 2.25
    };
    let g_end = g(5.0 * PI / 6.0);
    report.observe_equality(g_end - 49.0 / 16.0, 1e-12, || {
        format!("g(5π/6)={g_end} vs 49/16")
    });
    for &theta in &GridSpec::new(-PI / 6.0, 5.0 * PI / 6.0, 4096).points() {
        if theta.abs() < 1e-9 {
            continue;
        }
        report.observe(g(theta) - 49.0 / 16.0, MARGIN_TOL, || {
            format!("g minimum theta={theta}")
        });
    }
    report.diagnostics.insert("boundary_distance_sq_at_5pi_over_6".into(), g_end);

    report.finalize(t0);
    report
}

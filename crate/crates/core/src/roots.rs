//! Root localization for Stern polynomials.
//!
//! `find_roots` computes all complex roots of an `IntPoly` with a
//! residual-certified Aberth–Ehrlich iteration (companion-matrix
//! eigenvalues as fallback), Newton polishing, and exact conjugate
//! symmetrization. Every returned root satisfies
//! `|p(z)| ≤ REL_RESIDUAL_TOL · Σ|cᵢ||z|^i`; otherwise the call fails
//! rather than returning unreliable positions.
//!
//! On top of that sit the bulk consumers:
//!
//! * `scan_odd` walks all odd indices up to a bound, streams one record per
//!   root into a sink, and accumulates extremes (closest approach to 2,
//!   smallest modulus, largest real part, worst residual).
//! * `rational_roots_census` finds every rational root exactly, by clearing
//!   denominators — no floating point involved.
//! * `alpha_family_check` compares the roots of `S` at index
//!   `(2ⁿ − (−1)ⁿ)/3` against `−sec²(jπ/n)/4` for `j = 1..⌊(n−1)/2⌋`.
//! * `t_family_report` tabulates maximal imaginary/real parts along the
//!   index family `(4^(n+1) + (−2)ⁿ + 1)/3`.

use crate::poly::IntPoly;
use crate::stern::{stern_poly, SternIndex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

/// Relative backward-error bound every accepted root must satisfy.
pub const REL_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub enum RootError {
    ZeroPolynomial,
    ResidualTooLarge { root: [f64; 2], relative: f64 },
    FamilyShape { n: u32, expected: usize, got: usize },
    FamilyMismatch { n: u32, got: f64, want: f64 },
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::ZeroPolynomial => write!(f, "cannot take roots of the zero polynomial"),
            RootError::ResidualTooLarge { root, relative } => write!(
                f,
                "root ({}, {}) failed the residual check: relative residual {relative:e}",
                root[0], root[1]
            ),
            RootError::FamilyShape { n, expected, got } => {
                write!(f, "family member n={n}: expected {expected} roots, got {got}")
            }
            RootError::FamilyMismatch { n, got, want } => {
                write!(f, "family member n={n}: root {got} does not match predicted {want}")
            }
        }
    }
}

impl std::error::Error for RootError {}

fn horner_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn eval_with_scale(coeffs: &[f64], z: Complex64) -> (Complex64, f64) {
    let zn = z.norm();
    let mut p = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for &c in coeffs.iter().rev() {
        p = p * z + c;
        scale = scale * zn + c.abs();
    }
    (p, scale.max(coeffs.last().map(|c| c.abs()).unwrap_or(0.0)))
}

fn aberth(coeffs: &[f64]) -> Option<Vec<Complex64>> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let r_up = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let c0 = coeffs[0];
    let r_lo = 1.0
        / (1.0
            + coeffs[1..]
                .iter()
                .map(|c| (c / c0).abs())
                .fold(0.0, f64::max));
    let r0 = (r_up * r_lo).sqrt();
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(r0, 2.0 * PI * k as f64 / deg as f64 + 0.43))
        .collect();
    for _ in 0..400 {
        let mut settled = true;
        for k in 0..deg {
            let (p, dp) = horner_with_derivative(coeffs, z[k]);
            let (_, scale) = eval_with_scale(coeffs, z[k]);
            if p.norm() <= 1e-14 * scale {
                continue;
            }
            settled = false;
            if dp.norm() == 0.0 {
                z[k] += Complex64::new(1e-6, 1e-6);
                continue;
            }
            let w = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != k {
                    let d = z[k] - z[j];
                    if d.norm() > 1e-300 {
                        s += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let step = if denom.norm() < 1e-12 { w } else { w / denom };
            z[k] -= step;
        }
        if settled {
            return Some(z);
        }
    }
    None
}

fn companion_eigenvalues(coeffs: &[f64]) -> Vec<Complex64> {
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let mut m = nalgebra::DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        m[(i, deg - 1)] = -coeffs[i] / lead;
    }
    m.complex_eigenvalues()
        .iter()
        .map(|e| Complex64::new(e.re, e.im))
        .collect()
}

fn newton_polish(coeffs: &[f64], roots: &mut [Complex64]) {
    for z in roots.iter_mut() {
        let mut best = *z;
        let mut best_val = horner_with_derivative(coeffs, best).0.norm();
        let mut cur = best;
        for _ in 0..16 {
            let (p, dp) = horner_with_derivative(coeffs, cur);
            if dp.norm() == 0.0 {
                break;
            }
            cur -= p / dp;
            let val = horner_with_derivative(coeffs, cur).0.norm();
            if val < best_val {
                best = cur;
                best_val = val;
            }
        }
        *z = best;
    }
}

/// Positional uncertainty of a computed root: `10·|p(z)|/|p'(z)|`, with
/// `|p(z)|` floored at the evaluation noise `ε·Σ|cᵢ||z|ⁱ`. Floating-point
/// Horner cannot resolve values below that floor, so a smaller `|p(z)|` is
/// cancellation luck, not precision; without the floor the band collapses
/// near multiple roots, where the residual is pure noise while the root
/// itself may sit ~|c|^(1/m) off its true position.
fn positional_band(coeffs: &[f64], z: Complex64) -> f64 {
    let (p, dp) = horner_with_derivative(coeffs, z);
    let (_, scale) = eval_with_scale(coeffs, z);
    let noise = f64::EPSILON * scale;
    let denom = dp.norm();
    if denom == 0.0 {
        return f64::INFINITY;
    }
    10.0 * p.norm().max(noise) / denom
}

/// Make the root set exactly closed under conjugation. Near-real roots are
/// snapped onto the axis (a root whose imaginary part is inside its own
/// positional band is indistinguishable from real); every remaining upper
/// root is greedily matched to the nearest unused lower root and the pair
/// is averaged into exact conjugates. True partners sit within roundoff of
/// each other, so nearest matching always recovers them, even when several
/// pairs share a real part. Roots with real coefficients have conjugation-
/// balanced multisets, so a leftover unmatched complex root can only be
/// debris from a real multiple root split asymmetrically by the solver;
/// those are projected back onto the axis.
fn symmetrize_conjugates(coeffs: &[f64], roots: &mut [Complex64]) {
    for z in roots.iter_mut() {
        if z.im == 0.0 {
            continue;
        }
        let band = positional_band(coeffs, *z).min(1e-4);
        if z.im.abs() <= (1e-12 * (1.0 + z.norm())).max(band) {
            z.im = 0.0;
        }
    }
    let reals: Vec<Complex64> = roots.iter().copied().filter(|z| z.im == 0.0).collect();
    let upper: Vec<Complex64> = roots.iter().copied().filter(|z| z.im > 0.0).collect();
    let lower: Vec<Complex64> = roots.iter().copied().filter(|z| z.im < 0.0).collect();
    let mut used = vec![false; lower.len()];
    let mut out = reals;
    let mut stragglers: Vec<Complex64> = Vec::new();
    for &u in &upper {
        let target = u.conj();
        let mut best: Option<(f64, usize)> = None;
        for (i, &l) in lower.iter().enumerate() {
            if used[i] {
                continue;
            }
            let d = (l - target).norm();
            if best.map_or(true, |(bd, _)| d < bd) {
                best = Some((d, i));
            }
        }
        match best {
            Some((d, i)) if d <= 1e-3 * (1.0 + u.norm()) => {
                used[i] = true;
                let l = lower[i];
                let re = 0.5 * (u.re + l.re);
                let im = 0.5 * (u.im - l.im);
                out.push(Complex64::new(re, im));
                out.push(Complex64::new(re, -im));
            }
            _ => stragglers.push(u),
        }
    }
    stragglers.extend(lower.iter().enumerate().filter(|(i, _)| !used[*i]).map(|(_, &l)| l));
    out.extend(stragglers.into_iter().map(|z| Complex64::new(z.re, 0.0)));
    debug_assert_eq!(out.len(), roots.len());
    roots.copy_from_slice(&out);
}

fn sort_roots(roots: &mut [Complex64]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// All complex roots (with multiplicity) of `p`, sorted by real part then
/// imaginary part. Exact zeros at the origin are deflated first; degree one
/// is solved exactly; higher degrees use the Aberth–Ehrlich iteration with
/// a companion-matrix fallback, polished by Newton steps. Fails when any
/// root's relative residual exceeds [`REL_RESIDUAL_TOL`].
pub fn find_roots(p: &IntPoly) -> Result<Vec<Complex64>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let all = p.coeffs_f64();
    let m = all.iter().position(|&c| c != 0.0).unwrap();
    let mut roots = vec![Complex64::new(0.0, 0.0); m];
    let coeffs = &all[m..];
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Ok(roots);
    }
    if deg == 1 {
        roots.push(Complex64::new(-coeffs[0] / coeffs[1], 0.0));
        sort_roots(&mut roots);
        return Ok(roots);
    }
    let mut inner = match aberth(coeffs) {
        Some(z) => z,
        None => companion_eigenvalues(coeffs),
    };
    newton_polish(coeffs, &mut inner);
    symmetrize_conjugates(coeffs, &mut inner);
    for &z in &inner {
        let (val, scale) = eval_with_scale(coeffs, z);
        let rel = val.norm() / scale.max(f64::MIN_POSITIVE);
        if rel > REL_RESIDUAL_TOL {
            return Err(RootError::ResidualTooLarge { root: [z.re, z.im], relative: rel });
        }
    }
    roots.extend(inner);
    sort_roots(&mut roots);
    Ok(roots)
}

/// Relative residual of `z` as a root of `p`.
pub fn relative_residual(p: &IntPoly, z: Complex64) -> f64 {
    let coeffs = p.coeffs_f64();
    let (val, scale) = eval_with_scale(&coeffs, z);
    val.norm() / scale.max(f64::MIN_POSITIVE)
}

/// First-order positional error band `10·|p(z)|/|p'(z)|` for a computed
/// root, with `|p(z)|` floored at the floating-point evaluation noise;
/// infinite when the derivative vanishes (multiple root).
pub fn error_band(p: &IntPoly, z: Complex64) -> f64 {
    let coeffs = p.coeffs_f64();
    positional_band(&coeffs, z)
}

/// One root of one Stern polynomial, as streamed by [`scan_odd`].
#[derive(Clone, Debug, Serialize)]
pub struct RootRecord {
    pub n: u64,
    pub degree: usize,
    pub root: [f64; 2],
    /// relative backward error `|p(z)| / Σ|cᵢ||z|^i`
    pub residual: f64,
    pub dist_to_two: f64,
    pub abs_root: f64,
    /// first-order positional error band `10·|p(z)|/|p'(z)|`, noise-floored
    pub error_band: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanSummary {
    pub n_max: u64,
    pub polynomials: u64,
    pub roots: u64,
    pub min_dist_to_two: f64,
    pub min_dist_n: u64,
    pub min_abs_root: f64,
    pub min_abs_n: u64,
    pub max_re: f64,
    pub max_re_n: u64,
    pub worst_residual: f64,
    pub worst_residual_n: u64,
    /// indices with a root inside or on the unit circle around 2
    pub two_disk_violations: Vec<u64>,
    /// indices with a root of modulus ≤ 1/4
    pub quarter_disk_violations: Vec<u64>,
    /// indices with a root whose error band straddles `|z − 2| = 1`
    pub near_two_boundary: Vec<u64>,
}

impl ScanSummary {
    fn new(n_max: u64) -> Self {
        ScanSummary {
            n_max,
            polynomials: 0,
            roots: 0,
            min_dist_to_two: f64::INFINITY,
            min_dist_n: 0,
            min_abs_root: f64::INFINITY,
            min_abs_n: 0,
            max_re: f64::NEG_INFINITY,
            max_re_n: 0,
            worst_residual: 0.0,
            worst_residual_n: 0,
            two_disk_violations: Vec::new(),
            quarter_disk_violations: Vec::new(),
            near_two_boundary: Vec::new(),
        }
    }

    fn absorb(&mut self, rec: &RootRecord) {
        self.roots += 1;
        if rec.dist_to_two < self.min_dist_to_two {
            self.min_dist_to_two = rec.dist_to_two;
            self.min_dist_n = rec.n;
        }
        if rec.abs_root < self.min_abs_root {
            self.min_abs_root = rec.abs_root;
            self.min_abs_n = rec.n;
        }
        if rec.root[0] > self.max_re {
            self.max_re = rec.root[0];
            self.max_re_n = rec.n;
        }
        if rec.residual > self.worst_residual {
            self.worst_residual = rec.residual;
            self.worst_residual_n = rec.n;
        }
        if rec.dist_to_two <= 1.0 && self.two_disk_violations.last() != Some(&rec.n) {
            self.two_disk_violations.push(rec.n);
        }
        if rec.abs_root <= 0.25 && self.quarter_disk_violations.last() != Some(&rec.n) {
            self.quarter_disk_violations.push(rec.n);
        }
        let slack = (rec.dist_to_two - 1.0).abs();
        if slack <= rec.error_band && slack <= 0.05 && self.near_two_boundary.last() != Some(&rec.n)
        {
            self.near_two_boundary.push(rec.n);
        }
    }
}

fn records_for(n: u64) -> Result<Vec<RootRecord>, RootError> {
    let p = stern_poly(&SternIndex::from(n));
    let degree = p.degree().unwrap_or(0);
    if degree == 0 {
        return Ok(Vec::new());
    }
    let roots = find_roots(&p)?;
    let coeffs = p.coeffs_f64();
    Ok(roots
        .into_iter()
        .map(|z| {
            let (val, scale) = eval_with_scale(&coeffs, z);
            let (pv, dp) = horner_with_derivative(&coeffs, z);
            let error_band = if dp.norm() > 0.0 {
                10.0 * pv.norm() / dp.norm()
            } else {
                f64::INFINITY
            };
            RootRecord {
                n,
                degree,
                root: [z.re, z.im],
                residual: val.norm() / scale.max(f64::MIN_POSITIVE),
                dist_to_two: (z - Complex64::new(2.0, 0.0)).norm(),
                abs_root: z.norm(),
                error_band,
            }
        })
        .collect())
}

/// Finds the roots of `S_n` for every odd `n` in `3..=n_max`, feeding each
/// record to `sink` in increasing order of `n` and returning the summary.
/// The underlying work is parallel; the observable order is not.
pub fn scan_odd(
    n_max: u64,
    mut sink: impl FnMut(&RootRecord),
) -> Result<ScanSummary, RootError> {
    let mut summary = ScanSummary::new(n_max);
    let ns: Vec<u64> = (3..=n_max).step_by(2).collect();
    for chunk in ns.chunks(4096) {
        let block: Result<Vec<(u64, Vec<RootRecord>)>, RootError> = chunk
            .par_iter()
            .map(|&n| records_for(n).map(|r| (n, r)))
            .collect();
        for (_, records) in block? {
            summary.polynomials += 1;
            for rec in &records {
                summary.absorb(rec);
                sink(rec);
            }
        }
    }
    Ok(summary)
}

fn positive_divisors(v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            if d != v / d {
                out.push(v / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Exact rational roots of `S_n` over all odd `n ≤ n_max`, keyed by the
/// root `(numerator, denominator)` in lowest terms with positive
/// denominator; each key maps to the sorted list of indices where the root
/// occurs. Candidates come from the rational root theorem and are verified
/// with exact big-rational arithmetic.
pub fn rational_roots_census(n_max: u64) -> BTreeMap<(i64, u64), Vec<u64>> {
    let ns: Vec<u64> = (1..=n_max).step_by(2).collect();
    let per: Vec<(u64, Vec<(i64, u64)>)> = ns
        .par_iter()
        .map(|&n| {
            let p = stern_poly(&SternIndex::from(n));
            let mut found = Vec::new();
            if p.degree().unwrap_or(0) >= 1 {
                let lead = p.leading().unwrap().abs().to_u64().expect("small leading");
                let c0 = p.coeff(0).abs().to_u64().expect("small constant");
                // odd indices have constant term 1, but stay general
                for num in positive_divisors(c0.max(1)) {
                    for den in positive_divisors(lead) {
                        if num_integer::gcd(num, den) != 1 {
                            continue;
                        }
                        for sign in [1i64, -1] {
                            let cand = BigRational::new(
                                BigInt::from(sign * num as i64),
                                BigInt::from(den),
                            );
                            if p.eval_rational(&cand).is_zero() {
                                found.push((sign * num as i64, den));
                            }
                        }
                    }
                }
            }
            found.sort_unstable();
            (n, found)
        })
        .collect();
    let mut census: BTreeMap<(i64, u64), Vec<u64>> = BTreeMap::new();
    for (n, found) in per {
        for key in found {
            census.entry(key).or_default().push(n);
        }
    }
    census
}

/// Index `(2ⁿ − (−1)ⁿ)/3` of the n-th member of the secant root family.
pub fn alpha_index(n: u32) -> u64 {
    assert!((2..=62).contains(&n));
    if n % 2 == 0 {
        ((1u64 << n) - 1) / 3
    } else {
        ((1u64 << n) + 1) / 3
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaFamilyResult {
    pub n: u32,
    pub index: u64,
    pub degree: usize,
    /// (computed root, predicted `−sec²(jπ/n)/4`) pairs, ascending
    pub pairs: Vec<(f64, f64)>,
    pub max_abs_diff: f64,
}

/// Verifies that the roots of `S` at `alpha_index(n)` are exactly the real
/// values `−sec²(jπ/n)/4`, `j = 1..⌊(n−1)/2⌋`, to absolute tolerance 1e-9.
pub fn alpha_family_check(n: u32) -> Result<AlphaFamilyResult, RootError> {
    let index = alpha_index(n);
    let p = stern_poly(&SternIndex::from(index));
    let degree = p.degree().unwrap_or(0);
    let roots = find_roots(&p)?;
    let mut expected: Vec<f64> = (1..=(n as usize).saturating_sub(1) / 2)
        .map(|j| -0.25 / (PI * j as f64 / n as f64).cos().powi(2))
        .collect();
    expected.sort_by(f64::total_cmp);
    if roots.len() != expected.len() || degree != expected.len() {
        return Err(RootError::FamilyShape { n, expected: expected.len(), got: roots.len() });
    }
    let mut pairs = Vec::with_capacity(expected.len());
    let mut max_abs_diff = 0.0f64;
    for (z, &want) in roots.iter().zip(&expected) {
        if z.im != 0.0 {
            return Err(RootError::FamilyMismatch { n, got: z.im, want: 0.0 });
        }
        let diff = (z.re - want).abs();
        if diff > 1e-9 {
            return Err(RootError::FamilyMismatch { n, got: z.re, want });
        }
        max_abs_diff = max_abs_diff.max(diff);
        pairs.push((z.re, want));
    }
    Ok(AlphaFamilyResult { n, index, degree, pairs, max_abs_diff })
}

/// Index `(4^(n+1) + (−2)ⁿ + 1)/3` of the n-th member of the tower family.
pub fn t_index(n: u32) -> u64 {
    assert!((1..=30).contains(&n));
    let four = 4u128.pow(n + 1);
    let mid: i128 = if n % 2 == 0 { 1i128 << n } else { -(1i128 << n) };
    ((four as i128 + mid + 1) / 3) as u64
}

#[derive(Clone, Debug, Serialize)]
pub struct TFamilyRow {
    pub n: u32,
    pub index: u64,
    pub degree: usize,
    pub max_im: f64,
    pub max_re: f64,
    /// real part of the root attaining `max_im`
    pub re_at_max_im: f64,
    /// observed `Re/Im²` for that root; `None` when every root is real
    #[serde(skip_serializing_if = "Option::is_none")]
    pub re_over_im_sq: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TFamilyReport {
    pub rows: Vec<TFamilyRow>,
    /// `max_im` grows strictly along even n and along odd n separately
    /// (the two parity classes interleave); observed, not asserted
    pub max_im_increasing_by_parity: bool,
    /// largest `max_im` seen, a witness for the divergence of imaginary
    /// parts along the family
    pub max_im_overall: f64,
    /// observed, not asserted
    pub all_re_below_one: bool,
}

/// Tabulates root extremes along the tower family for `n = 1..=n_max`.
/// The growth of the maximal imaginary part and the `Re < 1` bound are
/// reported as observations only.
pub fn t_family_report(n_max: u32) -> Result<TFamilyReport, RootError> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let index = t_index(n);
        let p = stern_poly(&SternIndex::from(index));
        let degree = p.degree().unwrap_or(0);
        let roots = find_roots(&p)?;
        let top = roots
            .iter()
            .copied()
            .max_by(|a, b| a.im.total_cmp(&b.im).then(a.re.total_cmp(&b.re)))
            .expect("family polynomials have roots");
        let max_im = top.im.max(0.0);
        let max_re = roots.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
        let re_over_im_sq = (top.im > 0.0).then(|| top.re / (top.im * top.im));
        rows.push(TFamilyRow {
            n,
            index,
            degree,
            max_im,
            max_re,
            re_at_max_im: top.re,
            re_over_im_sq,
        });
    }
    let increasing = |parity: u32| {
        rows.iter()
            .filter(|r| r.n % 2 == parity)
            .collect::<Vec<_>>()
            .windows(2)
            .all(|w| w[1].max_im > w[0].max_im)
    };
    let max_im_increasing_by_parity = increasing(0) && increasing(1);
    let max_im_overall = rows.iter().map(|r| r.max_im).fold(0.0f64, f64::max);
    let all_re_below_one = rows.iter().all(|r| r.max_re < 1.0);
    Ok(TFamilyReport { rows, max_im_increasing_by_parity, max_im_overall, all_re_below_one })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    #[test]
    fn roots_of_linear_stern_polys() {
        // S_3 = 1 + λ
        let r = find_roots(&stern_poly(&SternIndex::from(3u64))).unwrap();
        assert_eq!(r, vec![Complex64::new(-1.0, 0.0)]);
        // S_5 = 1 + 2λ
        let r = find_roots(&stern_poly(&SternIndex::from(5u64))).unwrap();
        assert_eq!(r, vec![Complex64::new(-0.5, 0.0)]);
    }

    #[test]
    fn roots_of_s11_are_golden_quadratic() {
        // S_11 = 1 + 3λ + λ²; roots (−3 ± √5)/2
        let r = find_roots(&stern_poly(&SternIndex::from(11u64))).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].re - (-2.618033988749895)).abs() < 1e-12);
        assert!((r[1].re - (-0.3819660112501051)).abs() < 1e-12);
        assert_eq!(r[0].im, 0.0);
        assert_eq!(r[1].im, 0.0);
    }

    #[test]
    fn roots_of_s13_are_complex_pair() {
        // S_13 = 1 + 2λ + 2λ²; roots −1/2 ± i/2
        let r = find_roots(&stern_poly(&SternIndex::from(13u64))).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0].re + 0.5).abs() < 1e-12 && (r[0].im + 0.5).abs() < 1e-12);
        assert!((r[1].re + 0.5).abs() < 1e-12 && (r[1].im - 0.5).abs() < 1e-12);
        assert_eq!(r[0].conj(), r[1]);
    }

    #[test]
    fn double_root_handled() {
        // S_9 = (1 + λ)²
        let r = find_roots(&stern_poly(&SternIndex::from(9u64))).unwrap();
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z - Complex64::new(-1.0, 0.0)).norm() < 1e-5);
        }
    }

    #[test]
    fn origin_deflation() {
        // λ³ + λ⁴ = λ³(1 + λ)
        let p = IntPoly::from_i64(&[0, 0, 0, 1, 1]);
        let r = find_roots(&p).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r[1..], vec![Complex64::new(0.0, 0.0); 3]);
        assert_eq!(r[0], Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn zero_poly_rejected() {
        assert_eq!(find_roots(&IntPoly::zero()), Err(RootError::ZeroPolynomial));
    }

    #[test]
    fn conjugate_closure_is_exact() {
        for n in (101u64..400).step_by(2) {
            let p = stern_poly(&SternIndex::from(n));
            if p.degree().unwrap_or(0) == 0 {
                continue;
            }
            let roots = find_roots(&p).unwrap();
            for z in &roots {
                assert!(
                    roots.iter().any(|w| *w == z.conj()),
                    "n={n}: {z} lacks exact conjugate"
                );
            }
        }
    }

    #[test]
    fn residuals_small_in_range() {
        for n in (3u64..=1001).step_by(2) {
            let p = stern_poly(&SternIndex::from(n));
            if p.degree().unwrap_or(0) == 0 {
                continue;
            }
            for z in find_roots(&p).unwrap() {
                assert!(relative_residual(&p, z) <= REL_RESIDUAL_TOL);
            }
        }
    }

    #[test]
    fn scan_small_range() {
        let mut seen = Vec::new();
        let summary = scan_odd(1023, |rec| seen.push(rec.n)).unwrap();
        assert_eq!(summary.polynomials, 511);
        assert!(summary.roots > 1000);
        assert!(summary.min_dist_to_two > 1.0);
        assert!(summary.min_abs_root > 0.25);
        assert!(summary.two_disk_violations.is_empty());
        assert!(summary.quarter_disk_violations.is_empty());
        assert!(summary.worst_residual <= REL_RESIDUAL_TOL);
        // sink ordering is by increasing n
        assert!(seen.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn census_finds_the_three_roots() {
        let census = rational_roots_census(127);
        assert!(census.contains_key(&(-1, 1)), "{census:?}");
        assert!(census.contains_key(&(-1, 2)));
        assert!(census.contains_key(&(-1, 3)));
        assert!(census[&(-1, 1)].contains(&3));
        assert!(census[&(-1, 2)].contains(&5));
        assert!(census[&(-1, 3)].contains(&21));
        assert_eq!(census.keys().count(), 3);
    }

    #[test]
    fn alpha_indices() {
        assert_eq!(alpha_index(2), 1);
        assert_eq!(alpha_index(3), 3);
        assert_eq!(alpha_index(4), 5);
        assert_eq!(alpha_index(5), 11);
        assert_eq!(alpha_index(6), 21);
        assert_eq!(alpha_index(16), 21845);
    }

    #[test]
    fn alpha_family_members() {
        for n in 3..=12u32 {
            let res = alpha_family_check(n).unwrap();
            assert_eq!(res.degree, (n as usize - 1) / 2);
            assert!(res.max_abs_diff <= 1e-9, "n={n}: {}", res.max_abs_diff);
        }
        let res = alpha_family_check(16).unwrap();
        assert_eq!(res.index, 21845);
        assert_eq!(res.degree, 7);
    }

    #[test]
    fn t_indices() {
        assert_eq!(t_index(1), 5);
        assert_eq!(t_index(2), 23);
        assert_eq!(t_index(3), 83);
        assert_eq!(t_index(12), 22_370_987);
    }

    #[test]
    fn t_family_small() {
        let rep = t_family_report(6).unwrap();
        assert_eq!(rep.rows.len(), 6);
        assert!(rep.max_im_increasing_by_parity, "{:?}", rep.rows);
        assert!(rep.rows[0].max_im == 0.0);
        assert!(rep.rows[1].max_im > 0.0);
        // divergence witness: the even subsequence has grown past n=2
        assert!(rep.rows[5].max_im > rep.rows[1].max_im);
        assert!(rep.all_re_below_one);
    }
}

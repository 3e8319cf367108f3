//! Irreducibility certificates for Stern polynomials at prime indices.
//!
//! The certificate rests on two facts checked independently here:
//! `S_p(2) = p` exactly (integer arithmetic), and every root of `S_p` lies
//! strictly outside the closed unit disk around 2 (certified numerics). If
//! `S_p` factored nontrivially over ℤ, evaluating at 2 would factor the
//! prime `p` into two integers of modulus > 1, which is impossible.
//!
//! `factor_oracle` provides the independent cross-check: a small-degree
//! factorization routine over ℤ that proposes candidate factors from
//! conjugate-closed subsets of the numerically computed roots and accepts
//! them only after exact polynomial division. Its verdict never feeds into
//! a certificate silently; it lands in `oracle_confirmed`.

use crate::poly::IntPoly;
use crate::roots::{error_band, find_roots, RootError};
use crate::stern::{stern_poly, SternIndex};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum CertifyError {
    NotPrime(u64),
    ValueMismatch { p: u64, value: String },
    RootInsideDisk { p: u64, dist: f64 },
    /// the root's numerical error band straddles the disk boundary, so the
    /// exclusion cannot be certified at this precision
    RootNearBoundary { p: u64, dist: f64, band: f64 },
    Roots(RootError),
}

impl fmt::Display for CertifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertifyError::NotPrime(n) => write!(f, "{n} is not prime"),
            CertifyError::ValueMismatch { p, value } => {
                write!(f, "S_{p}(2) evaluated to {value}, expected {p}")
            }
            CertifyError::RootInsideDisk { p, dist } => {
                write!(f, "S_{p} has a root at distance {dist} ≤ 1 from 2")
            }
            CertifyError::RootNearBoundary { p, dist, band } => write!(
                f,
                "S_{p} has a root at distance {dist} from 2 with error band {band}; \
                 cannot certify the exclusion"
            ),
            CertifyError::Roots(e) => write!(f, "root finding failed: {e}"),
        }
    }
}

impl std::error::Error for CertifyError {}

impl From<RootError> for CertifyError {
    fn from(e: RootError) -> Self {
        CertifyError::Roots(e)
    }
}

/// Deterministic primality by trial division; fine for the desk-scale
/// ranges used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, Clone, Serialize)]
pub struct IrredCertificate {
    pub p: u64,
    pub degree: usize,
    pub value_at_two: u64,
    pub min_dist_to_two: f64,
    /// `Some(true)` when the factor oracle independently confirms
    /// irreducibility, `Some(false)` when it contradicts it, `None` when
    /// the degree is out of the oracle's reach.
    pub oracle_confirmed: Option<bool>,
}

/// Certifies that `S_p` is irreducible over ℤ for prime `p`: checks
/// `S_p(2) = p` exactly and that all roots stay strictly outside
/// `|z − 2| ≤ 1`, with the root positions' error bands clear of the
/// boundary. The factor oracle's independent verdict is recorded.
pub fn certify_prime(p: u64) -> Result<IrredCertificate, CertifyError> {
    if !is_prime(p) {
        return Err(CertifyError::NotPrime(p));
    }
    let poly = stern_poly(&SternIndex::from(p));
    let value = poly.eval_int(&BigInt::from(2));
    if value != BigInt::from(p) {
        return Err(CertifyError::ValueMismatch { p, value: value.to_string() });
    }
    let degree = poly.degree().unwrap_or(0);
    let mut min_dist = f64::INFINITY;
    if degree >= 1 {
        for z in find_roots(&poly)? {
            let dist = (z - Complex64::new(2.0, 0.0)).norm();
            if dist <= 1.0 {
                return Err(CertifyError::RootInsideDisk { p, dist });
            }
            let band = error_band(&poly, z);
            if (dist - 1.0).abs() <= band {
                return Err(CertifyError::RootNearBoundary { p, dist, band });
            }
            min_dist = min_dist.min(dist);
        }
    }
    let oracle_confirmed = factor_oracle(&poly)
        .map(|fs| fs.iter().filter(|f| f.degree().unwrap_or(0) >= 1).count() == 1);
    Ok(IrredCertificate {
        p,
        degree,
        value_at_two: p,
        min_dist_to_two: min_dist,
        oracle_confirmed,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CertifySummary {
    pub p_max: u64,
    pub count: usize,
    pub max_degree: usize,
    pub min_dist_to_two: f64,
    pub oracle_checked: usize,
    pub oracle_confirmed: usize,
    pub certificates: Vec<IrredCertificate>,
}

/// Certifies every prime up to `p_max`, in parallel, failing on the first
/// prime that cannot be certified.
pub fn certify_range(p_max: u64) -> Result<CertifySummary, CertifyError> {
    let primes: Vec<u64> = (2..=p_max).filter(|&n| is_prime(n)).collect();
    let certificates: Vec<IrredCertificate> = primes
        .par_iter()
        .map(|&p| certify_prime(p))
        .collect::<Result<_, _>>()?;
    let max_degree = certificates.iter().map(|c| c.degree).max().unwrap_or(0);
    let min_dist_to_two = certificates
        .iter()
        .map(|c| c.min_dist_to_two)
        .fold(f64::INFINITY, f64::min);
    let oracle_checked = certificates.iter().filter(|c| c.oracle_confirmed.is_some()).count();
    let oracle_confirmed = certificates
        .iter()
        .filter(|c| c.oracle_confirmed == Some(true))
        .count();
    Ok(CertifySummary {
        p_max,
        count: certificates.len(),
        max_degree,
        min_dist_to_two,
        oracle_checked,
        oracle_confirmed,
        certificates,
    })
}

fn divisors_of(v: &BigInt) -> Vec<u64> {
    let v = v.abs().to_u64().expect("oracle coefficients stay small");
    let mut out = Vec::new();
    let mut d = 1u64;
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

/// Full factorization over ℤ for polynomials of degree ≤ 24, or `None`
/// when the polynomial is zero, too large, or the search is inconclusive.
/// The product of the returned factors equals the input exactly; each
/// factor of degree ≥ 2 was accepted only after an exact division check,
/// so a `Some` answer is proof, not heuristic.
pub fn factor_oracle(p: &IntPoly) -> Option<Vec<IntPoly>> {
    let degree = p.degree()?;
    if degree > 24 {
        return None;
    }
    let mut factors: Vec<IntPoly> = Vec::new();
    let mut rem = p.clone();

    // powers of λ
    while rem.degree().unwrap_or(0) >= 1 && rem.coeff(0).is_zero() {
        let lambda = IntPoly::monomial(1);
        rem = rem.div_exact(&lambda).expect("zero constant term");
        factors.push(lambda);
    }

    // rational roots, with multiplicity
    if rem.degree().unwrap_or(0) >= 1 {
        let lead_divs = divisors_of(rem.leading().unwrap());
        let c0_divs = divisors_of(&rem.coeff(0));
        'cand: for &num in &c0_divs {
            for &den in &lead_divs {
                if num_integer::gcd(num, den) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let cand = BigRational::new(
                        BigInt::from(sign * num as i64),
                        BigInt::from(den),
                    );
                    loop {
                        if rem.degree().unwrap_or(0) == 0 {
                            break 'cand;
                        }
                        if !rem.eval_rational(&cand).is_zero() {
                            break;
                        }
                        let factor = IntPoly::from_coeffs(vec![
                            BigInt::from(-sign * num as i64),
                            BigInt::from(den),
                        ]);
                        rem = rem.div_exact(&factor).expect("verified rational root");
                        factors.push(factor);
                    }
                }
            }
        }
    }

    factor_irrational(rem, &mut factors)?;
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    debug_assert_eq!(
        &factors.iter().fold(IntPoly::one(), |acc, f| &acc * f),
        p
    );
    Some(factors)
}

/// Factors a polynomial with no roots at 0 and no rational roots, by
/// reconstructing candidate factors from conjugate-closed subsets of its
/// numerical roots and verifying each by exact division.
fn factor_irrational(rem: IntPoly, out: &mut Vec<IntPoly>) -> Option<()> {
    let d = rem.degree()?;
    if d == 0 {
        if rem != IntPoly::one() {
            out.push(rem);
        }
        return Some(());
    }
    if d <= 3 {
        // free of rational (hence linear) factors, so irreducible
        out.push(rem);
        return Some(());
    }
    let roots = find_roots(&rem).ok()?;
    // units: real roots singly, conjugate pairs jointly
    let mut units: Vec<Vec<Complex64>> = Vec::new();
    let mut used = vec![false; roots.len()];
    for i in 0..roots.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        if roots[i].im == 0.0 {
            units.push(vec![roots[i]]);
        } else {
            let conj = roots[i].conj();
            let j = (0..roots.len())
                .find(|&j| !used[j] && roots[j] == conj)
                .expect("roots are conjugate-closed");
            used[j] = true;
            units.push(vec![roots[i], conj]);
        }
    }
    let lead_divs = divisors_of(rem.leading().unwrap());
    let mut budget = 2_000_000usize;
    for k in 2..=d / 2 {
        let mut chosen: Vec<usize> = Vec::new();
        let mut found: Option<(IntPoly, IntPoly)> = None;
        let ok = subset_search(&units, 0, k, &mut chosen, &mut budget, &mut |sel| {
            let cand_roots: Vec<Complex64> =
                sel.iter().flat_map(|&u| units[u].iter().copied()).collect();
            for &b in &lead_divs {
                if let Some(candidate) = reconstruct(&cand_roots, b) {
                    if let Some(q) = rem.div_exact(&candidate) {
                        found = Some((candidate, q));
                        return true;
                    }
                }
            }
            false
        });
        if ok.is_none() {
            return None; // budget exhausted
        }
        if let Some((candidate, q)) = found {
            out.push(candidate);
            return factor_irrational(q, out);
        }
    }
    out.push(rem);
    Some(())
}

/// Depth-first enumeration of unit subsets with total root count `need`.
/// Returns `None` when the budget runs out, `Some(stopped)` otherwise.
fn subset_search(
    units: &[Vec<Complex64>],
    start: usize,
    need: usize,
    chosen: &mut Vec<usize>,
    budget: &mut usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> Option<bool> {
    if need == 0 {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        return Some(visit(chosen));
    }
    if start >= units.len() {
        return Some(false);
    }
    let capacity: usize = units[start..].iter().map(|u| u.len()).sum();
    if capacity < need {
        return Some(false);
    }
    if units[start].len() <= need {
        chosen.push(start);
        match subset_search(units, start + 1, need - units[start].len(), chosen, budget, visit) {
            None => return None,
            Some(true) => {
                chosen.pop();
                return Some(true);
            }
            Some(false) => {}
        }
        chosen.pop();
    }
    subset_search(units, start + 1, need, chosen, budget, visit)
}

/// Expands `b·∏(λ − rᵢ)` and rounds to an integer polynomial, rejecting
/// the candidate when any coefficient is not convincingly integral.
fn reconstruct(roots: &[Complex64], b: u64) -> Option<IntPoly> {
    let mut acc = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let mut next = vec![Complex64::new(0.0, 0.0); acc.len() + 1];
        for (i, &c) in acc.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= r * c;
        }
        acc = next;
    }
    let bf = b as f64;
    let mut ints = Vec::with_capacity(acc.len());
    for c in &acc {
        let scaled = c.re * bf;
        let rounded = scaled.round();
        if (scaled - rounded).abs() > 0.3 || c.im.abs() > 0.3 {
            return None;
        }
        ints.push(BigInt::from(rounded as i64));
    }
    Some(IntPoly::from_coeffs(ints))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(1));
        assert!(!is_prime(25));
        assert!(is_prime(2017));
    }

    #[test]
    fn certify_small_primes() {
        for p in [2u64, 3, 5, 7, 13] {
            let cert = certify_prime(p).unwrap();
            assert_eq!(cert.p, p);
            assert_eq!(cert.value_at_two, p);
            assert!(cert.min_dist_to_two > 1.0);
            assert_eq!(cert.oracle_confirmed, Some(true), "p={p}");
        }
    }

    #[test]
    fn certify_13_distance() {
        // roots −1/2 ± i/2 sit at distance √6.5 from 2
        let cert = certify_prime(13).unwrap();
        assert!((cert.min_dist_to_two - 6.5f64.sqrt()).abs() < 1e-9);
        assert_eq!(cert.degree, 2);
    }

    #[test]
    fn certify_rejects_composite() {
        assert!(matches!(certify_prime(9), Err(CertifyError::NotPrime(9))));
        assert!(matches!(certify_prime(1), Err(CertifyError::NotPrime(1))));
    }

    #[test]
    fn oracle_factors_perfect_square() {
        // λ² + 2λ + 1 = (1 + λ)²
        let p = IntPoly::from_i64(&[1, 2, 1]);
        let fs = factor_oracle(&p).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], IntPoly::from_i64(&[1, 1]));
        assert_eq!(fs[1], IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn oracle_factors_stern_nine() {
        // S_9 = 1 + 2λ + λ²
        let fs = factor_oracle(&stern_poly(&SternIndex::from(9u64))).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0], IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn oracle_factors_geometric_sums() {
        use crate::poly::geom_poly;
        let expect = [(4u32, 2usize), (6, 3), (8, 3), (9, 2)];
        for (k, nfactors) in expect {
            let fs = factor_oracle(&geom_poly(k)).unwrap();
            let nontrivial = fs.iter().filter(|f| f.degree().unwrap_or(0) >= 1).count();
            assert_eq!(nontrivial, nfactors, "k={k}: {fs:?}");
            let product = fs.iter().fold(IntPoly::one(), |acc, f| &acc * f);
            assert_eq!(product, geom_poly(k));
        }
    }

    #[test]
    fn oracle_factors_quadratic_pair() {
        // (λ² + λ + 1)(λ² + 2) has no rational roots
        let a = IntPoly::from_i64(&[1, 1, 1]);
        let b = IntPoly::from_i64(&[2, 0, 1]);
        let fs = factor_oracle(&(&a * &b)).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&a));
        assert!(fs.contains(&b));
    }

    #[test]
    fn oracle_handles_nonmonic_factors() {
        // (2λ² + 1)(λ² + 3)
        let a = IntPoly::from_i64(&[1, 0, 2]);
        let b = IntPoly::from_i64(&[3, 0, 1]);
        let fs = factor_oracle(&(&a * &b)).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&a));
        assert!(fs.contains(&b));
        // (2λ + 1)(3λ + 1) via rational roots
        let fs = factor_oracle(&IntPoly::from_i64(&[1, 5, 6])).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&IntPoly::from_i64(&[1, 2])));
        assert!(fs.contains(&IntPoly::from_i64(&[1, 3])));
    }

    #[test]
    fn oracle_keeps_irreducibles_whole() {
        // λ⁴ + λ² + 1 = (λ² + λ + 1)(λ² − λ + 1)
        let p = IntPoly::from_i64(&[1, 0, 1, 0, 1]);
        let fs = factor_oracle(&p).unwrap();
        let product = fs.iter().fold(IntPoly::one(), |acc, f| &acc * f);
        assert_eq!(product, p);
        assert_eq!(fs.len(), 2);
        // λ⁴ + λ + 1 has no rational roots and no quadratic factorization
        let q = IntPoly::from_i64(&[1, 1, 0, 0, 1]);
        let fs = factor_oracle(&q).unwrap();
        assert_eq!(fs.len(), 1, "{fs:?}");
        assert_eq!(fs[0], q);
        // λ⁴ + 3λ² + 3λ + 3 is irreducible by the Eisenstein criterion at 3
        let q = IntPoly::from_i64(&[3, 3, 3, 0, 1]);
        let fs = factor_oracle(&q).unwrap();
        assert_eq!(fs.len(), 1, "{fs:?}");
        assert_eq!(fs[0], q);
    }

    #[test]
    fn oracle_extracts_lambda_powers() {
        // λ³(1 + λ)
        let p = IntPoly::from_i64(&[0, 0, 0, 1, 1]);
        let fs = factor_oracle(&p).unwrap();
        assert_eq!(fs.len(), 4);
        let lambdas = fs.iter().filter(|f| **f == IntPoly::monomial(1)).count();
        assert_eq!(lambdas, 3);
    }

    #[test]
    fn certify_range_small() {
        let s = certify_range(100).unwrap();
        assert_eq!(s.count, 25);
        assert_eq!(s.oracle_checked, 25);
        assert_eq!(s.oracle_confirmed, 25);
        assert!(s.min_dist_to_two > 1.0);
    }
}

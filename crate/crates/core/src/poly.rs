//! Dense polynomials with exact integer coefficients.
//!
//! Everything downstream (Stern polynomials, continued fractions, the root
//! scanner) builds on this type: exact add/mul, Horner evaluation at complex
//! points, exact evaluation at integers and rationals, and the geometric-sum
//! polynomial `(λ)_n = 1 + λ + … + λ^(n-1)`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul};

/// Polynomial in one variable over the integers, coefficients stored
/// low-to-high with no trailing zeros (the zero polynomial is empty).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// λ^k
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of λ^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by λ^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self + &other.neg()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Coefficients converted to f64 (rounded when above 2^53).
    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Exact division; returns None when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let top = std::mem::replace(&mut rem[i], BigInt::zero());
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= c * &q;
            }
            quot[i - dd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(k: usize) -> String {
    k.to_string()
        .chars()
        .map(|d| SUPERSCRIPTS[d.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Display for IntPoly {
    /// Renders in the λ-power form used throughout: `0`, `1`, `λ+λ²+λ³`,
    /// `1+2λ+2λ²`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if k == 1 {
                write!(f, "λ")?;
            } else if k >= 2 {
                write!(f, "λ{}", superscript(k))?;
            }
        }
        Ok(())
    }
}

/// The geometric sum `(λ)_n = 1 + λ + … + λ^(n-1)` as an exact polynomial.
pub fn geom_poly(n: u32) -> IntPoly {
    assert!(n >= 1, "geometric sum needs at least one term");
    IntPoly { coeffs: vec![BigInt::one(); n as usize] }
}

/// Numeric geometric sum `(z)_n`. Uses the closed form `(z^n - 1)/(z - 1)`
/// away from `z = 1` and switches to direct summation when `|z - 1| ≤ 1e-8`,
/// where the closed form loses precision; `(1)_n = n` exactly.
pub fn geom_val(z: Complex64, n: u32) -> Complex64 {
    assert!(n >= 1, "geometric sum needs at least one term");
    let zm1 = z - Complex64::new(1.0, 0.0);
    if zm1.norm() <= 1e-8 {
        let mut acc = Complex64::new(1.0, 0.0);
        let mut pw = Complex64::new(1.0, 0.0);
        for _ in 1..n {
            pw *= z;
            acc += pw;
        }
        acc
    } else {
        (z.powu(n) - Complex64::new(1.0, 0.0)) / zm1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn add_examples() {
        // (1+λ) + (1+λ+λ²) = 2+2λ+λ²
        assert_eq!(&p(&[1, 1]) + &p(&[1, 1, 1]), p(&[2, 2, 1]));
        // additive identity keeps structure
        assert_eq!(&p(&[0, 1, 2]) + &IntPoly::zero(), p(&[0, 1, 2]));
        // (λ+λ²) + (1+λ+λ²) = 1+2λ+2λ²
        assert_eq!(&p(&[0, 1, 1]) + &p(&[1, 1, 1]), p(&[1, 2, 2]));
    }

    #[test]
    fn mul_examples() {
        // (1+λ)(1+λ+λ²) = 1+2λ+2λ²+λ³
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1, 1]), p(&[1, 2, 2, 1]));
        assert_eq!(&p(&[1, 3, 1]) * &IntPoly::one(), p(&[1, 3, 1]));
        // (1+λ)(1+λ+λ²) + λ² = 1+2λ+3λ²+λ³
        assert_eq!(&(&p(&[1, 1]) * &p(&[1, 1, 1])) + &IntPoly::monomial(2), p(&[1, 2, 3, 1]));
    }

    #[test]
    fn eval_examples() {
        let q = p(&[1, 3, 1]);
        assert_eq!(q.eval_int(&BigInt::from(2)), BigInt::from(11));
        assert_eq!(q.eval_int(&BigInt::from(0)), BigInt::from(1));
        assert_eq!(q.eval_int(&BigInt::from(1)), BigInt::from(5));
        let z = Complex64::new(2.0, 0.0);
        assert!((q.eval_complex(z) - Complex64::new(11.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn geom_poly_examples() {
        assert_eq!(geom_poly(1), IntPoly::one());
        assert_eq!(geom_poly(3), p(&[1, 1, 1]));
        assert_eq!(geom_poly(4).eval_int(&BigInt::one()), BigInt::from(4));
    }

    #[test]
    #[should_panic]
    fn geom_poly_rejects_zero() {
        geom_poly(0);
    }

    #[test]
    fn geom_val_examples() {
        assert!((geom_val(Complex64::new(1.0, 0.0), 7) - Complex64::new(7.0, 0.0)).norm() < 1e-12);
        assert!((geom_val(Complex64::new(2.0, 0.0), 5) - Complex64::new(31.0, 0.0)).norm() < 1e-12);
        assert!(geom_val(Complex64::new(0.0, 1.0), 4).norm() < 1e-12);
    }

    #[test]
    fn geom_val_near_one_switches_to_summation() {
        let z = Complex64::new(1.0 + 3e-9, -2e-9);
        let direct: Complex64 = (0..6).map(|k| z.powu(k)).sum();
        assert!((geom_val(z, 6) - direct).norm() <= 1e-13 * direct.norm());
    }

    #[test]
    fn display_forms() {
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::one().to_string(), "1");
        assert_eq!(p(&[0, 1, 1, 1]).to_string(), "λ+λ²+λ³");
        assert_eq!(p(&[1, 2, 2]).to_string(), "1+2λ+2λ²");
        assert_eq!(p(&[0, 0, 1]).to_string(), "λ²");
        assert_eq!(p(&[-1, 0, 3]).to_string(), "-1+3λ²");
        assert_eq!(p(&[1, -4]).to_string(), "1-4λ");
    }

    #[test]
    fn div_exact_examples() {
        let prod = &p(&[1, 1]) * &p(&[1, 2, 3]);
        assert_eq!(prod.div_exact(&p(&[1, 1])), Some(p(&[1, 2, 3])));
        assert_eq!(p(&[1, 1, 1]).div_exact(&p(&[1, 1])), None);
        // non-monic divisor with exact quotient
        let prod2 = &p(&[1, 2]) * &p(&[3, 1]);
        assert_eq!(prod2.div_exact(&p(&[1, 2])), Some(p(&[3, 1])));
    }

    #[test]
    fn derivative_example() {
        assert_eq!(p(&[5, 3, 0, 2]).derivative(), p(&[3, 0, 6]));
        assert_eq!(p(&[7]).derivative(), IntPoly::zero());
    }

    proptest! {
        #[test]
        fn eval_is_ring_homomorphism(
            a in proptest::collection::vec(-9i64..=9, 0..12),
            b in proptest::collection::vec(-9i64..=9, 0..12),
            re in -2.0f64..2.0,
            im in -2.0f64..2.0,
        ) {
            let (pa, pb) = (p(&a), p(&b));
            let z = Complex64::new(re, im);
            let lhs = (&pa * &pb).eval_complex(z);
            let rhs = pa.eval_complex(z) * pb.eval_complex(z);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm() + rhs.norm()));
            let lhs_add = (&pa + &pb).eval_complex(z);
            let rhs_add = pa.eval_complex(z) + pb.eval_complex(z);
            prop_assert!((lhs_add - rhs_add).norm() <= 1e-12 * (1.0 + lhs_add.norm()));
        }

        #[test]
        fn geom_val_matches_closed_form(n in 1u32..50, re in -3.0f64..3.0, im in -3.0f64..3.0) {
            let z = Complex64::new(re, im);
            prop_assume!((z - Complex64::new(1.0, 0.0)).norm() > 1e-6);
            let closed = (z.powu(n) - Complex64::new(1.0, 0.0)) / (z - Complex64::new(1.0, 0.0));
            let poly_val = geom_poly(n).eval_complex(z);
            prop_assert!((geom_val(z, n) - closed).norm() <= 1e-10 * (1.0 + closed.norm()));
            prop_assert!((poly_val - closed).norm() <= 1e-9 * (1.0 + closed.norm()));
        }

        #[test]
        fn div_exact_inverts_mul(
            a in proptest::collection::vec(-5i64..=5, 1..8),
            b in proptest::collection::vec(-5i64..=5, 1..8),
        ) {
            let (pa, pb) = (p(&a), p(&b));
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let prod = &pa * &pb;
            prop_assert_eq!(prod.div_exact(&pa), Some(pb));
        }
    }
}

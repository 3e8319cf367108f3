//! Generalized continued fractions over the complex numbers.
//!
//! A fraction `b_0 + K(a_n | b_n)` is stored as its leading term plus the
//! lists of partial numerators and denominators. Evaluation runs backwards
//! from the deepest level, which is the numerically stable direction here.
//! The equivalence transform rescales to unit partial denominators, and
//! `stern_ratio_cf` builds the fraction whose value is the ratio
//! `S_[[a_1,…,a_t]](z) / S_[[a_2,…,a_t]](z)` of Stern polynomials at
//! consecutive bracket tails:
//!
//! ```text
//! S_[[a_1,…,a_t]] / S_[[a_2,…,a_t]] = (z)_a1 + z^a1 / ((z)_a2 + z^a2 / (… + z^a(t-1) / (z)_at))
//! ```

use crate::poly::geom_val;
use crate::stern::BracketSeq;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum CfError {
    #[error("near-zero denominator at depth {depth}")]
    DivisionNearZero { depth: usize },
    #[error("partial denominator b{index} is zero")]
    ZeroDenominator { index: usize },
}

/// `b0 + a1/(b1 + a2/(b2 + …))` with `partial_nums = [a1, a2, …]` and
/// `partial_dens = [b1, b2, …]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContFrac {
    pub b0: Complex64,
    pub partial_nums: Vec<Complex64>,
    pub partial_dens: Vec<Complex64>,
}

impl ContFrac {
    pub fn new(b0: Complex64, partial_nums: Vec<Complex64>, partial_dens: Vec<Complex64>) -> Self {
        assert_eq!(
            partial_nums.len(),
            partial_dens.len(),
            "numerators and denominators must pair up"
        );
        ContFrac { b0, partial_nums, partial_dens }
    }

    pub fn depth(&self) -> usize {
        self.partial_nums.len()
    }
}

const NEAR_ZERO: f64 = 1e-300;

/// Backward (tail-first) evaluation.
pub fn cf_eval(cf: &ContFrac) -> Result<Complex64, CfError> {
    let t = cf.depth();
    if t == 0 {
        return Ok(cf.b0);
    }
    let mut acc = cf.partial_dens[t - 1];
    for j in (1..t).rev() {
        if acc.norm() < NEAR_ZERO {
            return Err(CfError::DivisionNearZero { depth: j + 1 });
        }
        acc = cf.partial_dens[j - 1] + cf.partial_nums[j] / acc;
    }
    if acc.norm() < NEAR_ZERO {
        return Err(CfError::DivisionNearZero { depth: 1 });
    }
    Ok(cf.b0 + cf.partial_nums[0] / acc)
}

/// Equivalence transform to unit partial denominators. Returns the leading
/// factor `f` and a fraction `1 + c1/(1 + c2/(1 + …))` with
/// `c_1 = a_1/(b_0·b_1)` and `c_j = a_j/(b_(j-1)·b_j)`, so that the original
/// value equals `f · cf_eval(unit)`.
pub fn cf_equivalence_unit(cf: &ContFrac) -> Result<(Complex64, ContFrac), CfError> {
    if cf.b0.norm() < NEAR_ZERO {
        return Err(CfError::ZeroDenominator { index: 0 });
    }
    for (i, b) in cf.partial_dens.iter().enumerate() {
        if b.norm() < NEAR_ZERO {
            return Err(CfError::ZeroDenominator { index: i + 1 });
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let t = cf.depth();
    let mut nums = Vec::with_capacity(t);
    for j in 0..t {
        let prev = if j == 0 { cf.b0 } else { cf.partial_dens[j - 1] };
        nums.push(cf.partial_nums[j] / (prev * cf.partial_dens[j]));
    }
    Ok((cf.b0, ContFrac::new(one, nums, vec![one; t])))
}

/// Continued fraction for the Stern ratio attached to a bracket:
/// leading term `(z)_a1`, partial numerators `z^a1 … z^a(t-1)`, partial
/// denominators `(z)_a2 … (z)_at`. A single-term bracket yields depth 0.
pub fn stern_ratio_cf(b: &BracketSeq, z: Complex64) -> ContFrac {
    let terms = b.terms();
    let t = terms.len();
    let b0 = geom_val(z, terms[0]);
    let mut nums = Vec::with_capacity(t - 1);
    let mut dens = Vec::with_capacity(t - 1);
    for i in 0..t - 1 {
        nums.push(z.powu(terms[i]));
        dens.push(geom_val(z, terms[i + 1]));
    }
    ContFrac::new(b0, nums, dens)
}

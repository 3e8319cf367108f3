//! The Stern (diatomic) sequence, Stern polynomials, and the bracket
//! encoding of odd indices.
//!
//! The polynomials follow the recurrences `S_0 = 0`, `S_1 = 1`,
//! `S_2n = λ·S_n`, `S_2n+1 = S_n + S_n+1`; evaluating at 1 recovers the
//! diatomic sequence and evaluating at 2 recovers the index itself. Every
//! odd index has a unique alternating binary representation
//! `[[a_1,…,a_t]] = 2^(a_1+…+a_t) − 2^(a_2+…+a_t) + … + (−1)^t`, and the
//! bracket recursion ties `S` of an index to `S` of the bracket tails
//! through geometric-sum coefficients.
//!
//! Single queries walk the binary expansion with the pair
//! `(S_m, S_m+1)`, so each call costs O(log n) polynomial operations;
//! `SternTable` fills a contiguous range bottom-up for bulk scans.

use crate::poly::{geom_poly, IntPoly};
use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;
use thiserror::Error;

/// Index into the Stern sequence: an arbitrary-precision nonnegative integer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SternIndex(BigUint);

impl SternIndex {
    pub fn new(n: BigUint) -> Self {
        SternIndex(n)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_odd(&self) -> bool {
        self.0.bit(0)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Bits from most significant to least significant.
    fn bits_msb(&self) -> impl Iterator<Item = bool> + '_ {
        let n = self.0.bits();
        (0..n).rev().map(move |i| self.0.bit(i))
    }
}

impl From<u64> for SternIndex {
    fn from(n: u64) -> Self {
        SternIndex(BigUint::from(n))
    }
}

impl From<u32> for SternIndex {
    fn from(n: u32) -> Self {
        SternIndex(BigUint::from(n))
    }
}

impl From<BigUint> for SternIndex {
    fn from(n: BigUint) -> Self {
        SternIndex(n)
    }
}

impl fmt::Display for SternIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// s_n, the Stern diatomic sequence.
pub fn stern_seq(n: &SternIndex) -> BigUint {
    let mut a = BigUint::zero(); // s_m
    let mut b = BigUint::one(); // s_{m+1}
    for bit in n.bits_msb() {
        if bit {
            // (s_2m+1, s_2m+2) = (s_m + s_m+1, s_m+1)
            a = &a + &b;
        } else {
            // (s_2m, s_2m+1) = (s_m, s_m + s_m+1)
            b = &a + &b;
        }
    }
    a
}

/// S_n(λ) as an exact integer polynomial.
pub fn stern_poly(n: &SternIndex) -> IntPoly {
    let mut a = IntPoly::zero(); // S_m
    let mut b = IntPoly::one(); // S_{m+1}
    for bit in n.bits_msb() {
        if bit {
            // (S_2m+1, S_2m+2) = (S_m + S_m+1, λ·S_m+1)
            let s = &a + &b;
            b = b.shift_up(1);
            a = s;
        } else {
            // (S_2m, S_2m+1) = (λ·S_m, S_m + S_m+1)
            let s = &a + &b;
            a = a.shift_up(1);
            b = s;
        }
    }
    a
}

/// S_n(z) evaluated directly along the binary expansion, without
/// materializing the polynomial.
pub fn stern_eval(n: &SternIndex, z: Complex64) -> Complex64 {
    let mut a = Complex64::new(0.0, 0.0);
    let mut b = Complex64::new(1.0, 0.0);
    for bit in n.bits_msb() {
        if bit {
            let s = a + b;
            b *= z;
            a = s;
        } else {
            let s = a + b;
            a *= z;
            b = s;
        }
    }
    a
}

/// Bulk table of `S_0 … S_n_max`, filled bottom-up.
pub struct SternTable {
    polys: Vec<IntPoly>,
}

impl SternTable {
    pub fn build(n_max: usize) -> Self {
        let mut polys = Vec::with_capacity(n_max + 1);
        polys.push(IntPoly::zero());
        if n_max >= 1 {
            polys.push(IntPoly::one());
        }
        for n in 2..=n_max {
            let m = n / 2;
            let p = if n % 2 == 0 {
                polys[m].shift_up(1)
            } else {
                &polys[m] + &polys[m + 1]
            };
            polys.push(p);
        }
        SternTable { polys }
    }

    pub fn poly(&self, n: usize) -> &IntPoly {
        &self.polys[n]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BracketError {
    #[error("bracket must have at least one term")]
    Empty,
    #[error("bracket terms must be positive")]
    ZeroTerm,
    #[error("index must be odd and positive, got {0}")]
    NotOddPositive(String),
    #[error("bracket recursion needs at least two terms, got {0}")]
    TooShort(usize),
}

/// Alternating binary representation `[[a_1,…,a_t]]` of an odd index;
/// terms are positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketSeq {
    terms: Vec<u32>,
}

impl BracketSeq {
    pub fn new(terms: Vec<u32>) -> Result<Self, BracketError> {
        if terms.is_empty() {
            return Err(BracketError::Empty);
        }
        if terms.iter().any(|&a| a == 0) {
            return Err(BracketError::ZeroTerm);
        }
        Ok(BracketSeq { terms })
    }

    pub fn terms(&self) -> &[u32] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for BracketSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[")?;
        for (i, a) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]]")
    }
}

/// Value of `[[a_1,…,a_t]]`, via the tail recurrence
/// `[[a_1,…,a_t]] = 2^(a_t)·[[a_1,…,a_t-1]] + (−1)^t` with `[[]] = 1`.
pub fn bracket_decode(b: &BracketSeq) -> SternIndex {
    let mut v = BigUint::one();
    for (i, &a) in b.terms.iter().enumerate() {
        v <<= a;
        if i % 2 == 0 {
            v -= BigUint::one();
        } else {
            v += BigUint::one();
        }
    }
    SternIndex(v)
}

/// Bracket terms of an odd positive index (unique). Greedy from the top bit:
/// `n = 2^σ − n'` with `σ = bitlen(n)`, and `a_1 = σ − bitlen(n')`.
pub fn bracket_encode(n: &SternIndex) -> Result<BracketSeq, BracketError> {
    if n.is_zero() || !n.is_odd() {
        return Err(BracketError::NotOddPositive(n.to_string()));
    }
    let mut terms = Vec::new();
    let mut cur = n.0.clone();
    loop {
        let sigma = cur.bits();
        if cur.count_ones() == sigma {
            // all-ones tail: cur = 2^sigma − 1 = [[sigma]]
            terms.push(sigma as u32);
            break;
        }
        let next = (BigUint::one() << sigma) - &cur;
        terms.push((sigma - next.bits()) as u32);
        cur = next;
    }
    BracketSeq::new(terms)
}

/// Checks `S_(2^k·m + r) = S_(2^k − r)·S_m + S_r·S_(m+1)` exactly,
/// for `0 ≤ r < 2^k`.
pub fn verify_index_recursion(m: &SternIndex, k: u32, r: u64) -> bool {
    assert!(k >= 1, "need a positive power of two");
    assert!(k < 64 && r < (1u64 << k), "residue must satisfy r < 2^k");
    let two_k = BigUint::one() << k;
    let index = SternIndex((&m.0 << k) + BigUint::from(r));
    let lhs = stern_poly(&index);
    let m_plus = SternIndex(&m.0 + BigUint::one());
    let left = SternIndex(&two_k - BigUint::from(r));
    let rhs = &(&stern_poly(&left) * &stern_poly(m))
        + &(&stern_poly(&SternIndex::from(r)) * &stern_poly(&m_plus));
    lhs == rhs
}

/// Checks the bracket recursion
/// `S_[[a_1,…,a_t]] = (λ)_(a_1)·S_[[a_2,…,a_t]] + λ^(a_1)·S_[[a_3,…,a_t]]`
/// exactly; the empty bracket stands for index 1. Needs t ≥ 2.
pub fn verify_bracket_recursion(b: &BracketSeq) -> Result<bool, BracketError> {
    let t = b.len();
    if t < 2 {
        return Err(BracketError::TooShort(t));
    }
    let a1 = b.terms[0] as usize;
    let full = stern_poly(&bracket_decode(b));
    let tail1 = stern_poly(&bracket_decode(&BracketSeq::new(b.terms[1..].to_vec())?));
    let tail2 = if t >= 3 {
        stern_poly(&bracket_decode(&BracketSeq::new(b.terms[2..].to_vec())?))
    } else {
        IntPoly::one()
    };
    let rhs = &(&geom_poly(a1 as u32) * &tail1) + &(&IntPoly::monomial(a1) * &tail2);
    Ok(full == rhs)
}

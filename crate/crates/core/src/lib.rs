//! Stern polynomials and the analytic machinery around them.
//!
//! The Stern polynomials are defined by `S_0 = 0`, `S_1 = 1` and
//!
//! ```text
//! S_{2n}   = λ·S_n
//! S_{2n+1} = S_n + S_{n+1}
//! ```
//!
//! specializing to the Stern diatomic sequence at `λ = 1` and to the index
//! itself at `λ = 2`. This crate provides:
//!
//! * exact construction and evaluation ([`stern_poly`], [`stern_eval`],
//!   [`SternTable`]) together with the bracket encoding of odd indices and
//!   its continued-fraction expansion ([`stern::bracket_encode`],
//!   [`contfrac::stern_ratio_cf`]);
//! * certified root localization and bulk scans over index ranges
//!   ([`roots::find_roots`], [`roots::scan_odd`]), an exact rational-root
//!   census, and two explicit index families with predicted root sets;
//! * irreducibility certificates at prime indices backed by an independent
//!   factor oracle ([`certify::certify_prime`]);
//! * a verification lab for the geometric-sum lower bounds and the
//!   parabolic root-exclusion regions ([`bounds`], [`parabola`]), reporting
//!   sampled margins through [`report::CheckReport`].
//!
//! Everything numerical states its tolerance and reports worst-case
//! margins; everything structural (polynomial identities, recursions,
//! factorizations) is checked in exact integer or rational arithmetic.

pub mod bounds;
pub mod certify;
pub mod contfrac;
pub mod parabola;
pub mod poly;
pub mod report;
pub mod roots;
pub mod stern;

pub use num_complex::Complex64;
pub use poly::{geom_poly, geom_val, IntPoly};
pub use report::{fmt_g17, CheckReport, GridSpec, Violation, MARGIN_TOL};
pub use stern::{
    bracket_decode, bracket_encode, stern_eval, stern_poly, stern_seq, BracketSeq, SternIndex,
    SternTable,
};

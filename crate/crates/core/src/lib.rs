//! Exact computation of generalized Euler numbers and the ordered set
//! partition combinatorics behind them.
//!
//! For a block-size modulus `d >= 2` the generalized Euler numbers are the
//! coefficients of the reciprocal of the d-sectioned exponential series
//! `sum_k x^(dk) / (dk)!`.  For `d = 2` they are the signed secant/tangent
//! Euler numbers, for `d = 3` the Lehmer numbers.  The crate computes them
//! by several independent routes and cross-validates:
//!
//! * [`euler`] — recurrence, exact series inversion, signed composition
//!   sums, Hessenberg determinants, and cross-method checking,
//! * [`partitions`] — d-divisible ordered set partitions, the split/merge
//!   sign-reversing involution, and d-alternating permutations,
//! * [`congruences`] — residue checks (mod 2, mod 3, mod p², mod 2p²) and
//!   the block-rotation action underlying the mod-3 argument,
//! * [`mobius`] — the C_p x C_p action on p-divisible partitions and a
//!   numerical verification of the Möbius-inversion congruence argument,
//! * [`exactnum`] — arbitrary-precision integers/rationals and memoized
//!   factorial, binomial, and multinomial coefficients.
//!
//! All arithmetic is exact; nothing here ever rounds.  The crate is
//! `no_std` (with `alloc`) so the math core stays host-independent; IO and
//! serialization live in the companion CLI crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod congruences;
pub mod euler;
pub mod exactnum;
pub mod mobius;
pub mod partitions;

pub use error::{Error, Result};

/// Default ceiling on the number of objects any brute-force enumeration is
/// allowed to visit.  Every enumerating entry point takes an explicit cap so
/// callers can raise or lower it.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

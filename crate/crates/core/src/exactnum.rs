//! Exact arbitrary-precision arithmetic: integers, rationals, and memoized
//! factorial / binomial / multinomial coefficients.
//!
//! Everything downstream (recurrences, series inversion, determinants,
//! signed enumeration) is built on these; no floating point appears
//! anywhere in the crate.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Exact signed integer of arbitrary size.
pub type Integer = BigInt;

/// Exact fraction of [`Integer`]s, always fully reduced with a positive
/// denominator.
pub type Rational = BigRational;

/// Grow-on-demand table of factorials, `table[k] = k!`.
///
/// The table only ever grows and existing entries are never rewritten.  The
/// cache takes `&mut self`, so it is confined to one execution context;
/// independent computations each own their own cache.
#[derive(Debug, Clone)]
pub struct FactorialCache {
    table: Vec<Integer>,
}

impl FactorialCache {
    /// New cache holding just `0! = 1`.
    pub fn new() -> Self {
        FactorialCache {
            table: vec![Integer::one()],
        }
    }

    /// Largest `n` whose factorial is currently memoized.
    pub fn max_n(&self) -> usize {
        self.table.len() - 1
    }

    fn ensure(&mut self, n: usize) {
        while self.table.len() <= n {
            let k = self.table.len();
            let next = &self.table[k - 1] * Integer::from(k);
            self.table.push(next);
        }
    }

    /// `n!`, extending the table as needed.
    pub fn factorial(&mut self, n: usize) -> Integer {
        self.ensure(n);
        self.table[n].clone()
    }

    /// Binomial coefficient `C(n, k)`; zero when `k > n`.
    pub fn binomial(&mut self, n: usize, k: usize) -> Integer {
        if k > n {
            return Integer::zero();
        }
        self.ensure(n);
        &self.table[n] / (&self.table[k] * &self.table[n - k])
    }

    /// Multinomial coefficient `n! / (parts[0]! * parts[1]! * ...)`.
    ///
    /// The parts must sum to exactly `n`.
    pub fn multinomial(&mut self, n: usize, parts: &[usize]) -> Result<Integer> {
        let parts_sum: usize = parts.iter().sum();
        if parts_sum != n {
            return Err(Error::MultinomialParts { n, parts_sum });
        }
        self.ensure(n);
        let mut out = self.table[n].clone();
        for &p in parts {
            out /= &self.table[p];
        }
        Ok(out)
    }
}

impl Default for FactorialCache {
    fn default() -> Self {
        FactorialCache::new()
    }
}

/// `n!` by direct product, without a cache.
pub fn factorial(n: usize) -> Integer {
    let mut out = Integer::one();
    for k in 1..=n {
        out *= Integer::from(k);
    }
    out
}

/// `C(n, k)` by the multiplicative formula; zero when `k > n`.
///
/// Each intermediate division is exact, so this route is independent of the
/// factorial table and useful for cross-checking it.
pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut out = Integer::one();
    for i in 0..k {
        out *= Integer::from(n - i);
        out /= Integer::from(i + 1);
    }
    out
}

/// Multinomial coefficient as a telescoping product of binomials.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<Integer> {
    let parts_sum: usize = parts.iter().sum();
    if parts_sum != n {
        return Err(Error::MultinomialParts { n, parts_sum });
    }
    let mut out = Integer::one();
    let mut rest = n;
    for &p in parts {
        out *= binomial(rest, p);
        rest -= p;
    }
    Ok(out)
}

/// Trial-division primality check; adequate for the small primes used as
/// action/congruence parameters.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut f = 3;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

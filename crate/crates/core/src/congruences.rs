//! Residue identities satisfied by the generalized Euler numbers, and the
//! block-rotation action that explains the mod-3 one.
//!
//! The four families:
//!
//! * `mod2` — the value at `dn` is odd, for every `d >= 2`,
//! * `mod3` — the value at `dn` is congruent to
//!   `-1 + sum_{k=1}^{n-1} C(dn, dk)` modulo 3,
//! * `p2` — for prime `p`, the value at `pn` with modulus block size `p` is
//!   congruent to `(-1)^n` modulo `p^2`,
//! * `2p2` — for odd prime `p`, the same value modulo `2p^2`.
//!
//! Checks compare `a` and `b` by testing `m | (a - b)`, so representative
//! choices never matter; reports carry least nonnegative residues for
//! display.  Values are produced by [`crate::euler::recursion_table`].

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::euler::{recursion_table, EulerTable};
use crate::exactnum::{is_prime, FactorialCache};
use crate::partitions::OrderedSetPartition;
use crate::{Error, Result};

/// The four congruence families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CongruenceKind {
    Mod2,
    Mod3,
    PrimeSquared,
    TwoPrimeSquared,
}

impl CongruenceKind {
    /// Stable short name, matching the CLI spelling.
    pub fn name(self) -> &'static str {
        match self {
            CongruenceKind::Mod2 => "mod2",
            CongruenceKind::Mod3 => "mod3",
            CongruenceKind::PrimeSquared => "p2",
            CongruenceKind::TwoPrimeSquared => "2p2",
        }
    }

    /// Whether the family parameter is a block-size modulus `d` (as opposed
    /// to a prime `p`).
    pub fn takes_d(self) -> bool {
        matches!(self, CongruenceKind::Mod2 | CongruenceKind::Mod3)
    }

    fn validate_param(self, param: usize) -> Result<()> {
        match self {
            CongruenceKind::Mod2 | CongruenceKind::Mod3 => {
                if param < 2 {
                    return Err(Error::ModulusTooSmall { d: param });
                }
            }
            CongruenceKind::PrimeSquared => {
                if !is_prime(param) {
                    return Err(Error::NotPrime { p: param });
                }
            }
            CongruenceKind::TwoPrimeSquared => {
                if !is_prime(param) {
                    return Err(Error::NotPrime { p: param });
                }
                if param == 2 {
                    return Err(Error::NotOddPrime { p: param });
                }
            }
        }
        Ok(())
    }
}

impl core::fmt::Display for CongruenceKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdict of one congruence check.  `observed` and `expected` are least
/// nonnegative residues; `pass` was decided by divisibility of the
/// difference, not by comparing representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub n: usize,
    pub modulus: BigInt,
    pub observed: BigInt,
    pub expected: BigInt,
    pub pass: bool,
}

fn residue_check(
    n: usize,
    value: &BigInt,
    expected_raw: &BigInt,
    modulus: BigInt,
) -> CongruenceCheck {
    let pass = ((value - expected_raw) % &modulus).is_zero();
    let observed = value.mod_floor(&modulus);
    let expected = expected_raw.mod_floor(&modulus);
    CongruenceCheck {
        n,
        modulus,
        observed,
        expected,
        pass,
    }
}

fn mod2_check(table: &EulerTable, d: usize, n: usize) -> CongruenceCheck {
    residue_check(n, table.value(d * n), &BigInt::one(), BigInt::from(2))
}

fn mod3_check(
    table: &EulerTable,
    cache: &mut FactorialCache,
    d: usize,
    n: usize,
) -> CongruenceCheck {
    let mut expected = BigInt::from(-1);
    for k in 1..n {
        expected += cache.binomial(d * n, d * k);
    }
    residue_check(n, table.value(d * n), &expected, BigInt::from(3))
}

fn parity_sign(n: usize) -> BigInt {
    if n % 2 == 1 {
        BigInt::from(-1)
    } else {
        BigInt::one()
    }
}

/// The value at `dn` is congruent to 1 modulo 2.
pub fn check_mod2(d: usize, n: usize) -> Result<CongruenceCheck> {
    CongruenceKind::Mod2.validate_param(d)?;
    let table = recursion_table(d, d * n)?;
    Ok(mod2_check(&table, d, n))
}

/// The value at `dn` is congruent to `-1 + sum_{k=1}^{n-1} C(dn, dk)`
/// modulo 3.
pub fn check_mod3(d: usize, n: usize) -> Result<CongruenceCheck> {
    CongruenceKind::Mod3.validate_param(d)?;
    let table = recursion_table(d, d * n)?;
    let mut cache = FactorialCache::new();
    Ok(mod3_check(&table, &mut cache, d, n))
}

/// For prime `p`, the value at `pn` (with block size `p`) is congruent to
/// `(-1)^n` modulo `p^2`.
pub fn check_p_squared(p: usize, n: usize) -> Result<CongruenceCheck> {
    CongruenceKind::PrimeSquared.validate_param(p)?;
    let table = recursion_table(p, p * n)?;
    Ok(residue_check(
        n,
        table.value(p * n),
        &parity_sign(n),
        BigInt::from(p * p),
    ))
}

/// For odd prime `p`, the value at `pn` is congruent to `(-1)^n` modulo
/// `2p^2`.
pub fn check_2p_squared(p: usize, n: usize) -> Result<CongruenceCheck> {
    CongruenceKind::TwoPrimeSquared.validate_param(p)?;
    let table = recursion_table(p, p * n)?;
    Ok(residue_check(
        n,
        table.value(p * n),
        &parity_sign(n),
        BigInt::from(2 * p * p),
    ))
}

/// Result of sweeping one congruence family over `1..=n_max`.
#[derive(Debug, Clone)]
pub struct CongruenceReport {
    pub kind: CongruenceKind,
    /// The family parameter: `d` for mod2/mod3, `p` for p2/2p2.
    pub param: usize,
    pub n_max: usize,
    pub checks: Vec<CongruenceCheck>,
}

impl CongruenceReport {
    /// True when every check in the sweep passed.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs the named check for every `1 <= n <= n_max`, computing the value
/// table once.
pub fn congruence_sweep(
    kind: CongruenceKind,
    param: usize,
    n_max: usize,
) -> Result<CongruenceReport> {
    kind.validate_param(param)?;
    let table = recursion_table(param, param * n_max)?;
    let mut cache = FactorialCache::new();
    let checks = (1..=n_max)
        .map(|n| match kind {
            CongruenceKind::Mod2 => mod2_check(&table, param, n),
            CongruenceKind::Mod3 => mod3_check(&table, &mut cache, param, n),
            CongruenceKind::PrimeSquared => residue_check(
                n,
                table.value(param * n),
                &parity_sign(n),
                BigInt::from(param * param),
            ),
            CongruenceKind::TwoPrimeSquared => residue_check(
                n,
                table.value(param * n),
                &parity_sign(n),
                BigInt::from(2 * param * param),
            ),
        })
        .collect();
    Ok(CongruenceReport {
        kind,
        param,
        n_max,
        checks,
    })
}

/// Rotates the first three blocks, `(B1, B2, B3, ...) -> (B2, B3, B1, ...)`.
/// Partitions with fewer than three blocks are returned unchanged, so this
/// generates a C_3 action whose non-trivial orbits all have size 3.
pub fn rotate_blocks(pi: &OrderedSetPartition) -> OrderedSetPartition {
    if pi.block_count() < 3 {
        return pi.clone();
    }
    let blocks = pi.blocks();
    let mut out = Vec::with_capacity(blocks.len());
    out.push(blocks[1].clone());
    out.push(blocks[2].clone());
    out.push(blocks[0].clone());
    out.extend_from_slice(&blocks[3..]);
    OrderedSetPartition::from_blocks_unchecked(pi.ground_size(), out)
}

//! The C_p x C_p action on p-divisible ordered set partitions and the
//! Möbius-inversion argument it supports.
//!
//! For a prime `p`, let `g` cycle the elements `1, ..., p` and `h` cycle
//! `p+1, ..., 2p`, both acting on partitions of `[pn]` elementwise (block
//! order is preserved, blocks are re-sorted).  The subgroup lattice of
//! `G = <g> x <h>` has exactly `p + 3` members: the trivial subgroup, the
//! `p + 1` subgroups of order `p` (`<g h^i>` for `0 <= i < p` and `<h>`),
//! and `G` itself.
//!
//! Writing `alpha(H)` for the signed partition sum restricted to partitions
//! whose stabilizer *contains* `H` and `beta(H)` for the stabilizer being
//! *exactly* `H`, Möbius inversion over the lattice gives
//! `beta(trivial) = sum_H mu(H) alpha(H)`, each `alpha` collapses to a
//! smaller generalized Euler number, and `beta(trivial)` is divisible by
//! `p^2` because free orbits have size `p^2`.  [`verify_inversion`] checks
//! all of this numerically for concrete `(p, n)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::euler::recursion_table;
use crate::exactnum::is_prime;
use crate::partitions::{self, OrderedSetPartition};
use crate::{Error, Result};

/// One of the `p + 3` subgroups of `C_p x C_p`.
///
/// `Mixed(i)` is the order-p subgroup generated by `g * h^i`; `Mixed(0)` is
/// `<g>` and `PureH` is `<h>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubgroupId {
    Trivial,
    Mixed(usize),
    PureH,
    Full,
}

impl SubgroupId {
    /// All subgroups for a given prime, in lattice-compatible order
    /// (bottom first, top last).
    pub fn all(p: usize) -> Vec<SubgroupId> {
        let mut out = Vec::with_capacity(p + 3);
        out.push(SubgroupId::Trivial);
        out.extend((0..p).map(SubgroupId::Mixed));
        out.push(SubgroupId::PureH);
        out.push(SubgroupId::Full);
        out
    }

    /// Number of group elements in the subgroup.
    pub fn order(self, p: usize) -> u64 {
        let p = p as u64;
        match self {
            SubgroupId::Trivial => 1,
            SubgroupId::Mixed(_) | SubgroupId::PureH => p,
            SubgroupId::Full => p * p,
        }
    }

    fn valid_for(self, p: usize) -> bool {
        match self {
            SubgroupId::Mixed(i) => i < p,
            _ => true,
        }
    }
}

impl core::fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SubgroupId::Trivial => f.write_str("<e>"),
            SubgroupId::Mixed(0) => f.write_str("<g>"),
            SubgroupId::Mixed(1) => f.write_str("<gh>"),
            SubgroupId::Mixed(i) => write!(f, "<gh^{i}>"),
            SubgroupId::PureH => f.write_str("<h>"),
            SubgroupId::Full => f.write_str("<g,h>"),
        }
    }
}

/// Containment order of the subgroup lattice: the trivial subgroup is below
/// everything, the full group above everything, and the order-p subgroups
/// are pairwise incomparable.
pub fn subgroup_leq(lower: SubgroupId, upper: SubgroupId) -> bool {
    lower == upper || lower == SubgroupId::Trivial || upper == SubgroupId::Full
}

/// The subgroup lattice of `C_p x C_p` together with its Möbius function.
#[derive(Debug, Clone)]
pub struct SubgroupLattice {
    p: usize,
    elements: Vec<SubgroupId>,
    mu: Vec<i64>,
}

impl SubgroupLattice {
    /// The prime.
    pub fn p(&self) -> usize {
        self.p
    }

    /// All subgroups, bottom first.
    pub fn elements(&self) -> &[SubgroupId] {
        &self.elements
    }

    /// Möbius function value `mu(trivial, h)`.
    pub fn mu(&self, h: SubgroupId) -> i64 {
        let idx = self
            .elements
            .iter()
            .position(|&e| e == h)
            .expect("subgroup belongs to this lattice");
        self.mu[idx]
    }
}

/// Builds the lattice for a prime `p` and computes its Möbius function
/// recursively from the containment order (`mu(bottom) = 1`, then
/// `mu(x) = -sum_{y < x} mu(y)`), asserting the closed form: 1 at the
/// bottom, -1 at each of the `p + 1` middle subgroups, `p` at the top.
pub fn build_lattice(p: usize) -> Result<SubgroupLattice> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    let elements = SubgroupId::all(p);
    let mut mu: Vec<i64> = Vec::with_capacity(elements.len());
    for (i, &x) in elements.iter().enumerate() {
        let value = if x == SubgroupId::Trivial {
            1
        } else {
            let mut below = 0i64;
            for (j, &y) in elements.iter().enumerate() {
                if j != i && subgroup_leq(y, x) {
                    below += mu[j];
                }
            }
            -below
        };
        mu.push(value);
    }
    for (&x, &value) in elements.iter().zip(&mu) {
        let closed = match x {
            SubgroupId::Trivial => 1,
            SubgroupId::Mixed(_) | SubgroupId::PureH => -1,
            SubgroupId::Full => p as i64,
        };
        assert_eq!(value, closed, "recursive Möbius value disagrees at {x}");
    }
    Ok(SubgroupLattice { p, elements, mu })
}

/// An element `g^a h^b` of `C_p x C_p`, exponents reduced mod p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    pub a: usize,
    pub b: usize,
}

impl GroupElement {
    /// `g^a h^b` with exponents reduced modulo `p`.
    pub fn new(a: usize, b: usize, p: usize) -> Self {
        GroupElement { a: a % p, b: b % p }
    }

    /// The identity element.
    pub fn identity() -> Self {
        GroupElement { a: 0, b: 0 }
    }

    /// Componentwise addition of exponents mod p.
    pub fn compose(self, other: GroupElement, p: usize) -> Self {
        GroupElement::new(self.a + other.a, self.b + other.b, p)
    }
}

fn validate_action_input(pi: &OrderedSetPartition, p: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    if pi.ground_size() < 2 * p {
        return Err(Error::GroundSetTooSmall {
            n: pi.ground_size(),
            min: 2 * p,
        });
    }
    if !pi.is_d_divisible(p) {
        return Err(Error::NotDivisible { d: p });
    }
    Ok(())
}

fn apply_element(x: GroupElement, pi: &OrderedSetPartition, p: usize) -> OrderedSetPartition {
    let blocks = pi
        .blocks()
        .iter()
        .map(|block| {
            let mut moved: Vec<usize> = block
                .iter()
                .map(|&e| {
                    if e <= p {
                        (e - 1 + x.a) % p + 1
                    } else if e <= 2 * p {
                        (e - p - 1 + x.b) % p + p + 1
                    } else {
                        e
                    }
                })
                .collect();
            moved.sort_unstable();
            moved
        })
        .collect();
    OrderedSetPartition::from_blocks_unchecked(pi.ground_size(), blocks)
}

/// Acts on a p-divisible partition of `[pn]` (`n >= 2`): `g` rotates the
/// elements `1..=p` cyclically, `h` rotates `p+1..=2p`, all other elements
/// stay put; blocks keep their order and are re-sorted internally.
pub fn act_element(
    x: GroupElement,
    pi: &OrderedSetPartition,
    p: usize,
) -> Result<OrderedSetPartition> {
    validate_action_input(pi, p)?;
    Ok(apply_element(x, pi, p))
}

fn stabilizer_unchecked(pi: &OrderedSetPartition, p: usize) -> SubgroupId {
    let mut fixing: Vec<GroupElement> = Vec::new();
    for a in 0..p {
        for b in 0..p {
            let x = GroupElement { a, b };
            if apply_element(x, pi, p) == *pi {
                fixing.push(x);
            }
        }
    }
    if fixing.len() == p * p {
        return SubgroupId::Full;
    }
    if fixing.len() == 1 {
        return SubgroupId::Trivial;
    }
    assert_eq!(fixing.len(), p, "stabilizer size must divide p^2");
    let witness = fixing
        .into_iter()
        .find(|x| *x != GroupElement::identity())
        .expect("non-trivial stabilizer has a non-identity element");
    if witness.a == 0 {
        return SubgroupId::PureH;
    }
    // Solve i * a = b (mod p) for the diagonal index i.
    let inv_a = (1..p)
        .find(|&x| (witness.a * x) % p == 1)
        .expect("a is invertible mod a prime");
    SubgroupId::Mixed((witness.b * inv_a) % p)
}

/// The stabilizer of a partition under the `C_p x C_p` action, classified
/// by brute force over all `p^2` group elements.
pub fn stabilizer(pi: &OrderedSetPartition, p: usize) -> Result<SubgroupId> {
    validate_action_input(pi, p)?;
    Ok(stabilizer_unchecked(pi, p))
}

/// True when every generator of `h` fixes the partition, i.e. when the
/// stabilizer contains `h`.
fn fixed_by_subgroup(pi: &OrderedSetPartition, h: SubgroupId, p: usize) -> bool {
    let fixes = |x: GroupElement| apply_element(x, pi, p) == *pi;
    match h {
        SubgroupId::Trivial => true,
        SubgroupId::Mixed(i) => fixes(GroupElement { a: 1, b: i }),
        SubgroupId::PureH => fixes(GroupElement { a: 0, b: 1 }),
        SubgroupId::Full => {
            fixes(GroupElement { a: 1, b: 0 }) && fixes(GroupElement { a: 0, b: 1 })
        }
    }
}

fn validate_sum_params(h: SubgroupId, p: usize, n: usize) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    if n < 2 {
        return Err(Error::GroundSetTooSmall {
            n: p * n,
            min: 2 * p,
        });
    }
    assert!(h.valid_for(p), "subgroup index out of range for p = {p}");
    Ok(())
}

/// `alpha(H)`: the signed sum over the p-divisible partitions of `[pn]`
/// whose stabilizer contains `H`, computed by testing `H`'s generators
/// directly against each enumerated partition.
pub fn alpha(h: SubgroupId, p: usize, n: usize, cap: u64) -> Result<BigInt> {
    validate_sum_params(h, p, n)?;
    let mut acc: i128 = 0;
    for pi in partitions::enumerate_d_divisible(p * n, p, cap)? {
        if fixed_by_subgroup(&pi, h, p) {
            acc += i128::from(pi.sign());
        }
    }
    Ok(BigInt::from(acc))
}

/// `beta(H)`: the signed sum over the p-divisible partitions of `[pn]`
/// whose stabilizer is exactly `H`, using the brute-force classification.
pub fn beta(h: SubgroupId, p: usize, n: usize, cap: u64) -> Result<BigInt> {
    validate_sum_params(h, p, n)?;
    let mut acc: i128 = 0;
    for pi in partitions::enumerate_d_divisible(p * n, p, cap)? {
        if stabilizer_unchecked(&pi, p) == h {
            acc += i128::from(pi.sign());
        }
    }
    Ok(BigInt::from(acc))
}

/// True when the elements `1..=p` all lie in one block.  Blocks are sorted,
/// so this holds exactly when the block containing 1 starts `1, 2, ..., p`.
fn pin_in_single_block(pi: &OrderedSetPartition, p: usize) -> bool {
    pi.blocks()
        .iter()
        .find(|b| b[0] == 1)
        .is_some_and(|b| b.len() >= p && b[p - 1] == p)
}

/// The involution on partitions whose block containing 1 contains all of
/// `[p] = {1, ..., p}`: if that block is strictly larger than `[p]`, split
/// `[p]` off directly before the remainder; if it equals `[p]` and is not
/// the last block, merge it with the following block; if the *last* block
/// is exactly `[p]`, the partition is a fixed point.
pub fn pin_involution(pi: &OrderedSetPartition, p: usize) -> Result<OrderedSetPartition> {
    if !is_prime(p) {
        return Err(Error::NotPrime { p });
    }
    if !pi.is_d_divisible(p) {
        return Err(Error::NotDivisible { d: p });
    }
    if !pin_in_single_block(pi, p) {
        return Err(Error::PinOutsideDomain);
    }
    let blocks = pi.blocks();
    let idx = blocks
        .iter()
        .position(|b| b[0] == 1)
        .expect("element 1 lies in some block");
    let block = &blocks[idx];
    let mut out: Vec<Vec<usize>> = Vec::with_capacity(blocks.len() + 1);
    if block.len() > p {
        out.extend_from_slice(&blocks[..idx]);
        out.push(block[..p].to_vec());
        out.push(block[p..].to_vec());
        out.extend_from_slice(&blocks[idx + 1..]);
    } else if idx + 1 < blocks.len() {
        out.extend_from_slice(&blocks[..idx]);
        let mut merged = blocks[idx + 1].clone();
        merged.splice(0..0, block.iter().copied());
        out.push(merged);
        out.extend_from_slice(&blocks[idx + 2..]);
    } else {
        return Ok(pi.clone());
    }
    Ok(OrderedSetPartition::from_blocks_unchecked(
        pi.ground_size(),
        out,
    ))
}

/// One named assertion inside an inversion report.
#[derive(Debug, Clone)]
pub struct InversionCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Per-subgroup row of an inversion report.
#[derive(Debug, Clone)]
pub struct SubgroupRow {
    pub subgroup: SubgroupId,
    pub mu: i64,
    pub alpha: BigInt,
    pub beta: BigInt,
}

/// Everything [`verify_inversion`] measured for one `(p, n)`.
#[derive(Debug, Clone)]
pub struct InversionReport {
    pub p: usize,
    pub n: usize,
    /// Number of p-divisible partitions of `[pn]`.
    pub partition_count: u64,
    pub rows: Vec<SubgroupRow>,
    pub checks: Vec<InversionCheck>,
}

impl InversionReport {
    /// True when every assertion held.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// The row for one subgroup.
    pub fn row(&self, h: SubgroupId) -> &SubgroupRow {
        self.rows
            .iter()
            .find(|r| r.subgroup == h)
            .expect("subgroup belongs to this lattice")
    }
}

fn check(name: &'static str, pass: bool, detail: String) -> InversionCheck {
    InversionCheck { name, pass, detail }
}

/// Runs the whole Möbius-inversion argument numerically for `[pn]`
/// (`p` prime, `n >= 2`): tabulates `mu`, `alpha`, `beta` for every
/// subgroup, then asserts
///
/// 1. `beta(<e>) = sum_H mu(H) alpha(H)` exactly,
/// 2. `beta(<e>) = 0 (mod p^2)`,
/// 3. `alpha(<e>)` equals the generalized Euler number at `pn`,
/// 4. `alpha(<g>) = alpha(<h>) = -`value at `p(n-1)`,
/// 5. `alpha(<g h^i>) (i >= 1)` and `alpha(<g,h>)` all equal the value at
///    `p(n-2)`,
/// 6. the fixed points of [`pin_involution`] biject with the p-divisible
///    partitions of `[p(n-1)]` by deleting the final block `[p]`.
///
/// `alpha` values are accumulated by generator tests and `beta` values by
/// full stabilizer classification, so (1) genuinely cross-validates the two
/// routes.
pub fn verify_inversion(p: usize, n: usize, cap: u64) -> Result<InversionReport> {
    validate_sum_params(SubgroupId::Trivial, p, n)?;
    let lattice = build_lattice(p)?;
    let subgroups = lattice.elements().to_vec();

    let mut alpha_acc = vec![0i128; subgroups.len()];
    let mut beta_acc = vec![0i128; subgroups.len()];
    let mut partition_count = 0u64;
    for pi in partitions::enumerate_d_divisible(p * n, p, cap)? {
        partition_count += 1;
        let sign = i128::from(pi.sign());
        let stab = stabilizer_unchecked(&pi, p);
        for (i, &h) in subgroups.iter().enumerate() {
            if fixed_by_subgroup(&pi, h, p) {
                alpha_acc[i] += sign;
            }
            if stab == h {
                beta_acc[i] += sign;
            }
        }
    }

    let rows: Vec<SubgroupRow> = subgroups
        .iter()
        .enumerate()
        .map(|(i, &subgroup)| SubgroupRow {
            subgroup,
            mu: lattice.mu(subgroup),
            alpha: BigInt::from(alpha_acc[i]),
            beta: BigInt::from(beta_acc[i]),
        })
        .collect();

    let euler = recursion_table(p, p * n)?;
    let euler_at = |m: usize| -> BigInt { euler.value(p * m).clone() };

    let mut checks = Vec::with_capacity(6);

    let beta_trivial = &rows[0].beta;
    let inverted: BigInt = rows.iter().map(|r| BigInt::from(r.mu) * &r.alpha).sum();
    checks.push(check(
        "inversion_formula",
        *beta_trivial == inverted,
        format!("beta(<e>) = {beta_trivial}, sum mu(H) alpha(H) = {inverted}"),
    ));

    let p2 = BigInt::from(p * p);
    let remainder = beta_trivial % &p2;
    checks.push(check(
        "beta_trivial_mod_p2",
        remainder == BigInt::from(0),
        format!("beta(<e>) = {beta_trivial} mod {p2} leaves {remainder}"),
    ));

    let expected = euler_at(n);
    checks.push(check(
        "alpha_trivial_is_euler",
        rows[0].alpha == expected,
        format!("alpha(<e>) = {}, euler value = {expected}", rows[0].alpha),
    ));

    let expected = -euler_at(n - 1);
    let alpha_g = &self_row(&rows, SubgroupId::Mixed(0)).alpha;
    let alpha_h = &self_row(&rows, SubgroupId::PureH).alpha;
    checks.push(check(
        "alpha_g_and_h",
        *alpha_g == expected && *alpha_h == expected,
        format!("alpha(<g>) = {alpha_g}, alpha(<h>) = {alpha_h}, expected {expected}"),
    ));

    let expected = euler_at(n - 2);
    let alpha_full = &self_row(&rows, SubgroupId::Full).alpha;
    let diagonals_ok = (1..p).all(|i| self_row(&rows, SubgroupId::Mixed(i)).alpha == expected);
    checks.push(check(
        "alpha_mixed_and_full",
        diagonals_ok && *alpha_full == expected,
        format!("alpha(<g,h>) = {alpha_full}, expected {expected} (and all <gh^i>, i >= 1)"),
    ));

    checks.push(pin_bijection_check(p, n, cap)?);

    Ok(InversionReport {
        p,
        n,
        partition_count,
        rows,
        checks,
    })
}

fn self_row(rows: &[SubgroupRow], h: SubgroupId) -> &SubgroupRow {
    rows.iter()
        .find(|r| r.subgroup == h)
        .expect("subgroup belongs to this lattice")
}

/// Deletes a final block equal to `[p]` and relabels `e -> e - p`, mapping
/// a pinned fixed point on `[pn]` to a partition of `[p(n-1)]`.
fn delete_pin_block(pi: &OrderedSetPartition, p: usize) -> OrderedSetPartition {
    let blocks = pi.blocks();
    let trimmed: Vec<Vec<usize>> = blocks[..blocks.len() - 1]
        .iter()
        .map(|b| b.iter().map(|&e| e - p).collect())
        .collect();
    OrderedSetPartition::from_blocks_unchecked(pi.ground_size() - p, trimmed)
}

fn pin_bijection_check(p: usize, n: usize, cap: u64) -> Result<InversionCheck> {
    let mut involution_ok = true;
    let mut domain_count = 0u64;
    let mut images: BTreeSet<OrderedSetPartition> = BTreeSet::new();
    for pi in partitions::enumerate_d_divisible(p * n, p, cap)? {
        if !pin_in_single_block(&pi, p) {
            continue;
        }
        domain_count += 1;
        let image = pin_involution(&pi, p)?;
        if image == pi {
            images.insert(delete_pin_block(&pi, p));
        } else if pin_involution(&image, p)? != pi
            || pi.block_count().abs_diff(image.block_count()) != 1
        {
            involution_ok = false;
        }
    }
    let expected: BTreeSet<OrderedSetPartition> =
        partitions::enumerate_d_divisible(p * (n - 1), p, cap)?.collect();
    let bijection_ok = images == expected;
    Ok(check(
        "pin_involution_bijection",
        involution_ok && bijection_ok,
        format!(
            "{} fixed points among {domain_count} pinned partitions, {} targets",
            images.len(),
            expected.len()
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ENUMERATION_CAP as CAP;
    use alloc::string::ToString;
    use core::str::FromStr;

    fn osp(s: &str) -> OrderedSetPartition {
        OrderedSetPartition::from_str(s).unwrap()
    }

    #[test]
    fn lattice_shape_and_mu() {
        let lattice = build_lattice(2).unwrap();
        assert_eq!(lattice.elements().len(), 5);
        assert_eq!(lattice.mu(SubgroupId::Trivial), 1);
        assert_eq!(lattice.mu(SubgroupId::Mixed(0)), -1);
        assert_eq!(lattice.mu(SubgroupId::Mixed(1)), -1);
        assert_eq!(lattice.mu(SubgroupId::PureH), -1);
        assert_eq!(lattice.mu(SubgroupId::Full), 2);

        let lattice = build_lattice(3).unwrap();
        assert_eq!(lattice.elements().len(), 6);
        assert_eq!(lattice.mu(SubgroupId::Full), 3);
        let middles = SubgroupId::all(3)
            .into_iter()
            .filter(|&h| h != SubgroupId::Trivial && h != SubgroupId::Full)
            .count();
        assert_eq!(middles, 4, "p + 1 subgroups of order p");

        assert!(matches!(build_lattice(4), Err(Error::NotPrime { p: 4 })));

        for p in [2usize, 3, 5, 7] {
            let lattice = build_lattice(p).unwrap();
            assert_eq!(lattice.elements().len(), p + 3);
            let total: i64 = lattice.elements().iter().map(|&h| lattice.mu(h)).sum();
            assert_eq!(total, 0, "Möbius values over the lattice sum to zero");
        }
    }

    #[test]
    fn subgroup_display_names() {
        assert_eq!(SubgroupId::Trivial.to_string(), "<e>");
        assert_eq!(SubgroupId::Mixed(0).to_string(), "<g>");
        assert_eq!(SubgroupId::Mixed(1).to_string(), "<gh>");
        assert_eq!(SubgroupId::Mixed(2).to_string(), "<gh^2>");
        assert_eq!(SubgroupId::PureH.to_string(), "<h>");
        assert_eq!(SubgroupId::Full.to_string(), "<g,h>");
    }

    #[test]
    fn action_moves_elements() {
        // p = 2: g swaps 1,2; h swaps 3,4.
        let g = GroupElement { a: 1, b: 0 };
        let pi = osp("1 3/2 4");
        assert_eq!(act_element(g, &pi, 2).unwrap(), osp("2 3/1 4"));
        let e = GroupElement::identity();
        assert_eq!(act_element(e, &pi, 2).unwrap(), pi);
        // elements above 2p are fixed
        let h = GroupElement { a: 0, b: 1 };
        let pi = osp("1 2/3 4/5 6");
        assert_eq!(act_element(h, &pi, 2).unwrap(), osp("1 2/3 4/5 6"));
    }

    #[test]
    fn action_validates_input() {
        let small = osp("1 2");
        assert!(matches!(
            act_element(GroupElement::identity(), &small, 2),
            Err(Error::GroundSetTooSmall { n: 2, min: 4 })
        ));
        let bad = osp("1/2 3 4");
        assert!(matches!(
            act_element(GroupElement::identity(), &bad, 2),
            Err(Error::NotDivisible { d: 2 })
        ));
        assert!(matches!(
            act_element(GroupElement::identity(), &osp("1 2 3 4"), 4),
            Err(Error::NotPrime { p: 4 })
        ));
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(stabilizer(&osp("1 2 3 4"), 2).unwrap(), SubgroupId::Full);
        assert_eq!(stabilizer(&osp("1 3/2 4"), 2).unwrap(), SubgroupId::Trivial);
        assert_eq!(stabilizer(&osp("1 2/3 4"), 2).unwrap(), SubgroupId::Full);
    }

    #[test]
    fn alpha_beta_examples() {
        assert_eq!(
            alpha(SubgroupId::Trivial, 2, 2, CAP).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            alpha(SubgroupId::Mixed(0), 2, 2, CAP).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(alpha(SubgroupId::Full, 2, 2, CAP).unwrap(), BigInt::from(1));
        assert_eq!(
            beta(SubgroupId::Trivial, 2, 2, CAP).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            beta(SubgroupId::Trivial, 3, 2, CAP).unwrap(),
            BigInt::from(18)
        );
        assert_eq!(
            beta(SubgroupId::Mixed(0), 2, 2, CAP).unwrap(),
            BigInt::from(0)
        );
        assert!(matches!(
            alpha(SubgroupId::Trivial, 2, 1, CAP),
            Err(Error::GroundSetTooSmall { .. })
        ));
    }

    #[test]
    fn pin_involution_cases() {
        // split: the block holding [2] is bigger than [2]
        let pi = osp("1 2 5 6/3 4");
        assert_eq!(pin_involution(&pi, 2).unwrap(), osp("1 2/5 6/3 4"));
        // merge: [2] block with a successor
        let pi = osp("1 2/5 6/3 4");
        assert_eq!(pin_involution(&pi, 2).unwrap(), osp("1 2 5 6/3 4"));
        // fixed: last block is exactly [2]
        let pi = osp("3 4/5 6/1 2");
        assert_eq!(pin_involution(&pi, 2).unwrap(), pi);
        // outside the domain
        assert_eq!(
            pin_involution(&osp("1 3/2 4"), 2),
            Err(Error::PinOutsideDomain)
        );
    }

    #[test]
    fn inversion_report_2_2() {
        let report = verify_inversion(2, 2, CAP).unwrap();
        assert!(report.pass(), "checks: {:?}", report.checks);
        assert_eq!(report.partition_count, 7);
        assert_eq!(report.row(SubgroupId::Trivial).beta, BigInt::from(4));
        assert_eq!(report.row(SubgroupId::Trivial).alpha, BigInt::from(5));
        // 1*5 - (1 + 1 + 1) + 2*1 = 4
        assert_eq!(report.row(SubgroupId::Full).alpha, BigInt::from(1));
    }

    #[test]
    fn inversion_report_3_2() {
        let report = verify_inversion(3, 2, CAP).unwrap();
        assert!(report.pass(), "checks: {:?}", report.checks);
        assert_eq!(report.partition_count, 21);
        // 19 - 4*1 + 3*1 = 18, divisible by 9
        assert_eq!(report.row(SubgroupId::Trivial).beta, BigInt::from(18));
    }

    #[test]
    fn inversion_rejects_bad_params() {
        assert!(matches!(
            verify_inversion(4, 2, CAP),
            Err(Error::NotPrime { p: 4 })
        ));
        assert!(matches!(
            verify_inversion(2, 1, CAP),
            Err(Error::GroundSetTooSmall { .. })
        ));
    }
}

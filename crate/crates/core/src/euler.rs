//! The generalized Euler numbers and every route we have to them.
//!
//! For `d >= 2`, the numbers are defined by the reciprocal of the
//! d-sectioned exponential series: writing `f(x) = sum_k x^(dk) / (dk)!`,
//! the value at index `n` is `n!` times the coefficient of `x^n` in
//! `1 / f(x)`.  Nonzero values occur only at multiples of `d`; for `d = 2`
//! these are the signed Euler numbers `1, -1, 5, -61, 1385, ...` and for
//! `d = 3` the Lehmer numbers `1, -1, 19, -1513, ...`.
//!
//! Implemented routes:
//!
//! * [`recursion_table`] — the binomial recurrence obtained from
//!   `f(x) * (1/f(x)) = 1`,
//! * [`series_table`] — exact rational series inversion,
//! * [`composition_sum`] — the signed sum of multinomial coefficients over
//!   integer compositions,
//! * [`determinant`] — a lower-Hessenberg determinant of reciprocal
//!   factorials,
//! * brute force via [`crate::partitions`] — the signed partition sum and
//!   the d-alternating permutation count.
//!
//! [`crosscheck`] runs any subset of these against each other.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::{self, FactorialCache};
use crate::partitions;
use crate::{Error, Result};

fn ensure_modulus(d: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::ModulusTooSmall { d });
    }
    Ok(())
}

/// A computation method for the generalized Euler numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Recursion,
    Series,
    Compositions,
    Determinant,
    Bruteforce,
    Alternating,
}

impl Method {
    /// Every method, in canonical order.
    pub const ALL: [Method; 6] = [
        Method::Recursion,
        Method::Series,
        Method::Compositions,
        Method::Determinant,
        Method::Bruteforce,
        Method::Alternating,
    ];

    /// Stable lowercase name, matching the CLI spelling.
    pub fn name(self) -> &'static str {
        match self {
            Method::Recursion => "recursion",
            Method::Series => "series",
            Method::Compositions => "compositions",
            Method::Determinant => "determinant",
            Method::Bruteforce => "bruteforce",
            Method::Alternating => "alternating",
        }
    }

    /// True for the enumeration-backed methods that honor a cap.
    pub fn is_brute_force(self) -> bool {
        matches!(self, Method::Bruteforce | Method::Alternating)
    }
}

impl core::fmt::Display for Method {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

/// A table of generalized Euler numbers for one `d`, indexed by `n` from 0
/// through `n_max`, tagged with the method that produced it.  Entries at
/// indices not divisible by `d` are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerTable {
    d: usize,
    method: Method,
    values: Vec<BigInt>,
}

impl EulerTable {
    /// The block-size modulus.
    pub fn d(&self) -> usize {
        self.d
    }

    /// The method that produced the table.
    pub fn method(&self) -> Method {
        self.method
    }

    /// Largest index in the table.
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// The value at index `n`.  Panics when `n > n_max`.
    pub fn value(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    /// All values, index = `n`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Computes the table by the binomial recurrence: the value at `dn` is
/// minus the sum over `0 <= i < n` of `C(dn, di)` times the value at `di`.
pub fn recursion_table(d: usize, n_max: usize) -> Result<EulerTable> {
    ensure_modulus(d)?;
    let mut values = vec![BigInt::zero(); n_max + 1];
    values[0] = BigInt::one();
    let mut cache = FactorialCache::new();
    let mut m = 1;
    while d * m <= n_max {
        let dn = d * m;
        let mut acc = BigInt::zero();
        for i in 0..m {
            acc += cache.binomial(dn, d * i) * &values[d * i];
        }
        values[dn] = -acc;
        m += 1;
    }
    Ok(EulerTable {
        d,
        method: Method::Recursion,
        values,
    })
}

/// Exact rational coefficients of a truncated power series, index = degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoefficients {
    coeffs: Vec<BigRational>,
}

impl SeriesCoefficients {
    /// Truncation order (largest degree held).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^k`.  Panics when `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    /// All coefficients, index = degree.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// The d-sectioned exponential `sum_k x^(dk) / (dk)!`, truncated at `order`.
pub fn sectioned_exponential(d: usize, order: usize) -> Result<SeriesCoefficients> {
    ensure_modulus(d)?;
    let mut cache = FactorialCache::new();
    let coeffs = (0..=order)
        .map(|k| {
            if k % d == 0 {
                BigRational::new(BigInt::one(), cache.factorial(k))
            } else {
                BigRational::zero()
            }
        })
        .collect();
    Ok(SeriesCoefficients { coeffs })
}

/// The reciprocal of the d-sectioned exponential, truncated at `order`:
/// `c_0 = 1` and `c_k = -sum_{j >= 1} f_j c_(k-j)` where `f_j` are the
/// sectioned coefficients (zero unless `d | j`).
pub fn reciprocal_series(d: usize, order: usize) -> Result<SeriesCoefficients> {
    let f = sectioned_exponential(d, order)?;
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(order + 1);
    coeffs.push(BigRational::one());
    for k in 1..=order {
        let mut acc = BigRational::zero();
        let mut j = d;
        while j <= k {
            acc += f.coeff(j) * &coeffs[k - j];
            j += d;
        }
        coeffs.push(-acc);
    }
    Ok(SeriesCoefficients { coeffs })
}

/// Computes the table by series inversion: the value at `n` is `n! * c_n`
/// with `c` the reciprocal series, which is always an integer.
pub fn series_table(d: usize, n_max: usize) -> Result<EulerTable> {
    let c = reciprocal_series(d, n_max)?;
    let mut cache = FactorialCache::new();
    let values = (0..=n_max)
        .map(|n| {
            let scaled = BigRational::from_integer(cache.factorial(n)) * c.coeff(n);
            assert!(
                scaled.is_integer(),
                "n! * c_n must be integral; inversion is broken"
            );
            scaled.to_integer()
        })
        .collect();
    Ok(EulerTable {
        d,
        method: Method::Series,
        values,
    })
}

/// Iterator over the compositions of a positive integer in lexicographic
/// order, starting at `(1, 1, ..., 1)` and ending at `(total)`.
struct Compositions {
    current: Option<Vec<usize>>,
}

fn compositions(total: usize) -> Compositions {
    Compositions {
        current: (total > 0).then(|| vec![1; total]),
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.take()?;
        let k = current.len();
        if k >= 2 {
            // Successor: fold the last part into its neighbor, then pad
            // back out with ones.
            let mut next = current[..k - 1].to_vec();
            next[k - 2] += 1;
            next.extend(core::iter::repeat_n(1, current[k - 1] - 1));
            self.current = Some(next);
        }
        Some(current)
    }
}

/// Computes the value at index `n` as a signed sum of multinomial
/// coefficients over the compositions of `n / d`: a composition
/// `(n_1, ..., n_k)` contributes `(-1)^k * multinomial(n; d*n_1, ..., d*n_k)`.
/// Zero when `d` does not divide `n`, one when `n = 0` (the empty
/// composition).
pub fn composition_sum(d: usize, n: usize) -> Result<BigInt> {
    ensure_modulus(d)?;
    if !n.is_multiple_of(d) {
        return Ok(BigInt::zero());
    }
    let m = n / d;
    if m == 0 {
        return Ok(BigInt::one());
    }
    let mut cache = FactorialCache::new();
    let mut total = BigInt::zero();
    for comp in compositions(m) {
        let parts: Vec<usize> = comp.iter().map(|&p| p * d).collect();
        let coeff = cache
            .multinomial(n, &parts)
            .expect("composition parts scale to n");
        if comp.len() % 2 == 1 {
            total -= coeff;
        } else {
            total += coeff;
        }
    }
    Ok(total)
}

/// Computes the value at index `d * size` as `(-1)^size * (d*size)!` times
/// the determinant of the `size x size` lower-Hessenberg matrix with entry
/// `1 / ((i - j + 1) d)!` at row `i`, column `j` (zero when `j > i + 1`; the
/// superdiagonal is `1/0! = 1`).
///
/// The determinant is expanded along last rows, giving the O(size^2)
/// recurrence `D_r = sum_k (-1)^(r-k) h_(r,k) D_(k-1)`.  An empty matrix has
/// determinant 1 by convention, so `size = 0` returns 1.
pub fn determinant(d: usize, size: usize) -> Result<BigInt> {
    ensure_modulus(d)?;
    if size == 0 {
        return Ok(BigInt::one());
    }
    let mut cache = FactorialCache::new();
    let mut dets: Vec<BigRational> = Vec::with_capacity(size + 1);
    dets.push(BigRational::one());
    for r in 1..=size {
        let mut acc = BigRational::zero();
        for k in 1..=r {
            let entry = BigRational::new(BigInt::one(), cache.factorial((r - k + 1) * d));
            let term = entry * &dets[k - 1];
            if (r - k) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        dets.push(acc);
    }
    let mut scaled = BigRational::from_integer(cache.factorial(size * d)) * &dets[size];
    if size % 2 == 1 {
        scaled = -scaled;
    }
    assert!(
        scaled.is_integer(),
        "(dn)! times the Hessenberg determinant must be integral"
    );
    Ok(scaled.to_integer())
}

/// The classic (unsigned) Euler numbers `1, 1, 1, 2, 5, 16, 61, 272, ...`
/// counting alternating permutations, for all indices up to `n_max`, via
/// the boustrophedon (Entringer) recurrence.
pub fn classic_euler(n_max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(BigInt::one());
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut row: Vec<BigInt> = Vec::with_capacity(n + 1);
        row.push(BigInt::zero());
        for k in 1..=n {
            let next = &row[k - 1] + &prev[n - k];
            row.push(next);
        }
        out.push(row[n].clone());
        prev = row;
    }
    out
}

/// Checks the classic relation at one index: for even `n` the generalized
/// number at `d = 2` equals `(-1)^(n/2)` times the classic Euler number,
/// and for odd `n` it is zero.
pub fn check_classic_relation(n: usize) -> bool {
    let table = recursion_table(2, n).expect("d = 2 is a valid modulus");
    let value = table.value(n);
    if n % 2 == 1 {
        return value.is_zero();
    }
    let classic = classic_euler(n);
    let expected = if (n / 2) % 2 == 1 {
        -classic[n].clone()
    } else {
        classic[n].clone()
    };
    *value == expected
}

/// Builds the full table for one method.  The brute-force methods consult
/// `cap` and fail with [`Error::CapExceeded`] if any index is out of reach;
/// the exact methods ignore it.
pub fn table(d: usize, n_max: usize, method: Method, cap: u64) -> Result<EulerTable> {
    ensure_modulus(d)?;
    match method {
        Method::Recursion => recursion_table(d, n_max),
        Method::Series => series_table(d, n_max),
        Method::Compositions => {
            let values = (0..=n_max)
                .map(|n| composition_sum(d, n))
                .collect::<Result<Vec<_>>>()?;
            Ok(EulerTable {
                d,
                method: Method::Compositions,
                values,
            })
        }
        Method::Determinant => {
            let mut values = vec![BigInt::zero(); n_max + 1];
            values[0] = BigInt::one();
            let mut m = 1;
            while d * m <= n_max {
                values[d * m] = determinant(d, m)?;
                m += 1;
            }
            Ok(EulerTable {
                d,
                method: Method::Determinant,
                values,
            })
        }
        Method::Bruteforce => {
            let values = (0..=n_max)
                .map(|n| partitions::signed_sum(n, d, cap))
                .collect::<Result<Vec<_>>>()?;
            Ok(EulerTable {
                d,
                method: Method::Bruteforce,
                values,
            })
        }
        Method::Alternating => {
            let mut values = vec![BigInt::zero(); n_max + 1];
            values[0] = BigInt::one();
            let mut m = 1;
            while d * m <= n_max {
                let count = partitions::count_d_alternating(d * m, d, cap)?;
                values[d * m] = if m % 2 == 1 { -count } else { count };
                m += 1;
            }
            Ok(EulerTable {
                d,
                method: Method::Alternating,
                values,
            })
        }
    }
}

/// What one method produced for one index during a cross-check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MethodOutcome {
    Value(BigInt),
    /// The method was skipped at this index because its enumeration would
    /// exceed the cap.
    Skipped {
        required: BigInt,
        cap: u64,
    },
}

/// Per-index cross-check result.
#[derive(Debug, Clone)]
pub struct CrosscheckRow {
    pub n: usize,
    /// Outcomes in the same order as the report's method list.
    pub outcomes: Vec<MethodOutcome>,
    /// True when all non-skipped values at this index agree.
    pub agree: bool,
}

/// Result of running several methods side by side.
#[derive(Debug, Clone)]
pub struct CrosscheckReport {
    pub d: usize,
    pub n_max: usize,
    pub methods: Vec<Method>,
    pub rows: Vec<CrosscheckRow>,
    pub all_agree: bool,
}

/// Runs the given methods for all indices `0..=n_max` and compares values
/// index by index.  Brute-force methods are skipped (and reported as such)
/// at indices where their enumeration would exceed `cap`; they are never
/// silently counted as agreeing.
pub fn crosscheck(
    d: usize,
    n_max: usize,
    methods: &[Method],
    cap: u64,
) -> Result<CrosscheckReport> {
    ensure_modulus(d)?;
    let selected: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|m| methods.contains(m))
        .collect();
    if selected.len() < 2 {
        return Err(Error::TooFewMethods {
            count: selected.len(),
        });
    }

    let mut tables: Vec<Option<EulerTable>> = Vec::new();
    for &method in &selected {
        tables.push(if method.is_brute_force() {
            None
        } else {
            Some(table(d, n_max, method, cap)?)
        });
    }

    let mut rows = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut outcomes = Vec::with_capacity(selected.len());
        for (i, &method) in selected.iter().enumerate() {
            let outcome = match method {
                Method::Bruteforce => {
                    let required = count_d_divisible_checked(n, d);
                    if required > BigInt::from(cap) {
                        MethodOutcome::Skipped { required, cap }
                    } else {
                        MethodOutcome::Value(partitions::signed_sum(n, d, cap)?)
                    }
                }
                Method::Alternating => {
                    if n % d != 0 {
                        MethodOutcome::Value(BigInt::zero())
                    } else {
                        let required = exactnum::factorial(n);
                        if required > BigInt::from(cap) {
                            MethodOutcome::Skipped { required, cap }
                        } else {
                            let count = partitions::count_d_alternating(n, d, cap)?;
                            MethodOutcome::Value(if (n / d) % 2 == 1 { -count } else { count })
                        }
                    }
                }
                _ => MethodOutcome::Value(
                    tables[i]
                        .as_ref()
                        .expect("exact table present")
                        .value(n)
                        .clone(),
                ),
            };
            outcomes.push(outcome);
        }
        let mut agree = true;
        let mut first: Option<&BigInt> = None;
        for outcome in &outcomes {
            if let MethodOutcome::Value(v) = outcome {
                match first {
                    None => first = Some(v),
                    Some(f) if f != v => agree = false,
                    _ => {}
                }
            }
        }
        rows.push(CrosscheckRow { n, outcomes, agree });
    }
    let all_agree = rows.iter().all(|r| r.agree);
    Ok(CrosscheckReport {
        d,
        n_max,
        methods: selected,
        rows,
        all_agree,
    })
}

fn count_d_divisible_checked(n: usize, d: usize) -> BigInt {
    partitions::count_d_divisible(n, d).expect("modulus already validated")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ENUMERATION_CAP as CAP;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn recursion_d2_golden() {
        let t = recursion_table(2, 8).unwrap();
        assert_eq!(t.values(), &ints(&[1, 0, -1, 0, 5, 0, -61, 0, 1385])[..]);
        assert_eq!(t.d(), 2);
        assert_eq!(t.n_max(), 8);
        assert_eq!(t.method(), Method::Recursion);
    }

    #[test]
    fn recursion_d3_golden() {
        let t = recursion_table(3, 9).unwrap();
        assert_eq!(t.values(), &ints(&[1, 0, 0, -1, 0, 0, 19, 0, 0, -1513])[..]);
    }

    #[test]
    fn recursion_d4_golden() {
        // Independently frozen from the brute-force partition sum: the 70
        // ordered pairs of 4-blocks of [8] each contribute +1 and the single
        // block contributes -1, giving 69.
        let t = recursion_table(4, 8).unwrap();
        assert_eq!(t.values(), &ints(&[1, 0, 0, 0, -1, 0, 0, 0, 69])[..]);
    }

    #[test]
    fn recursion_rejects_small_modulus() {
        assert!(matches!(
            recursion_table(1, 4),
            Err(Error::ModulusTooSmall { d: 1 })
        ));
        assert!(matches!(
            recursion_table(0, 4),
            Err(Error::ModulusTooSmall { d: 0 })
        ));
    }

    #[test]
    fn series_matches_known_coefficients() {
        let c = reciprocal_series(2, 4).unwrap();
        assert_eq!(
            *c.coeff(4),
            BigRational::new(BigInt::from(5), BigInt::from(24))
        );
        let t = series_table(2, 7).unwrap();
        assert_eq!(t.value(4), &BigInt::from(5));
        assert_eq!(t.value(7), &BigInt::from(0));
        let t = series_table(3, 3).unwrap();
        assert_eq!(t.value(3), &BigInt::from(-1));
    }

    #[test]
    fn composition_sum_examples() {
        assert_eq!(composition_sum(2, 4).unwrap(), BigInt::from(5));
        assert_eq!(composition_sum(2, 5).unwrap(), BigInt::from(0));
        assert_eq!(composition_sum(3, 6).unwrap(), BigInt::from(19));
        assert_eq!(composition_sum(2, 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn compositions_enumerate_in_lex_order() {
        let all: Vec<Vec<usize>> = compositions(3).collect();
        assert_eq!(all, vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]);
        let all: Vec<Vec<usize>> = compositions(4).collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]), "strictly ascending");
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(2, 2).unwrap(), BigInt::from(5));
        assert_eq!(determinant(2, 1).unwrap(), BigInt::from(-1));
        assert_eq!(determinant(3, 2).unwrap(), BigInt::from(19));
        // Empty determinant convention: the 0 x 0 matrix has determinant 1.
        assert_eq!(determinant(2, 0).unwrap(), BigInt::from(1));
        assert_eq!(determinant(5, 0).unwrap(), BigInt::from(1));
    }

    #[test]
    fn classic_euler_golden() {
        assert_eq!(
            classic_euler(9),
            ints(&[1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936])
        );
    }

    #[test]
    fn classic_relation_holds() {
        for n in 0..=16 {
            assert!(check_classic_relation(n), "failed at n = {n}");
        }
    }

    #[test]
    fn single_block_value_is_minus_one() {
        for d in 2..=7usize {
            assert_eq!(recursion_table(d, d).unwrap().value(d), &BigInt::from(-1));
        }
    }

    #[test]
    fn crosscheck_agrees_on_small_ranges() {
        let report = crosscheck(2, 8, &Method::ALL, CAP).unwrap();
        assert!(report.all_agree);
        assert_eq!(report.rows.len(), 9);

        let report = crosscheck(3, 9, &[Method::Recursion, Method::Series], CAP).unwrap();
        assert!(report.all_agree);

        let report = crosscheck(5, 5, &Method::ALL, CAP).unwrap();
        assert!(report.all_agree);
        for outcome in &report.rows[5].outcomes {
            assert_eq!(*outcome, MethodOutcome::Value(BigInt::from(-1)));
        }
    }

    #[test]
    fn crosscheck_rejects_tiny_method_sets() {
        assert!(matches!(
            crosscheck(2, 4, &[], CAP),
            Err(Error::TooFewMethods { count: 0 })
        ));
        assert!(matches!(
            crosscheck(2, 4, &[Method::Recursion], CAP),
            Err(Error::TooFewMethods { count: 1 })
        ));
        assert!(matches!(
            crosscheck(2, 4, &[Method::Recursion, Method::Recursion], CAP),
            Err(Error::TooFewMethods { count: 1 })
        ));
    }

    #[test]
    fn crosscheck_reports_skips_above_cap() {
        let report = crosscheck(2, 8, &Method::ALL, 10).unwrap();
        assert!(report.all_agree, "skips must not count as disagreement");
        let brute_idx = report
            .methods
            .iter()
            .position(|&m| m == Method::Bruteforce)
            .unwrap();
        assert!(matches!(
            report.rows[8].outcomes[brute_idx],
            MethodOutcome::Skipped { .. }
        ));
        assert!(matches!(
            report.rows[2].outcomes[brute_idx],
            MethodOutcome::Value(_)
        ));
    }

    #[test]
    fn table_dispatcher_tags_methods() {
        for method in Method::ALL {
            let t = table(2, 6, method, CAP).unwrap();
            assert_eq!(t.method(), method);
            assert_eq!(t.value(4), &BigInt::from(5), "method {method}");
        }
    }

    #[test]
    fn table_bruteforce_fails_over_cap() {
        assert!(matches!(
            table(2, 8, Method::Bruteforce, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}

//! Stirling-type triangles: classical, degenerate, and degenerate r-Stirling.
//!
//! The degenerate triangles are produced by triangular back-substitution on
//! their defining change-of-basis systems: S_{2,λ}(n, ·) expands the
//! degenerate falling factorial (x)_{n,λ} in the classical falling-factorial
//! basis, and S_{1,λ}(n, ·) expands (x)_n in the degenerate basis. The
//! degenerate r-Stirling numbers come in three independent routes (binomial
//! convolution, EGF coefficient extraction, and a shifted basis solve) which
//! the verification suites compare exactly.
//!
//! Every value in these systems is an integer (the bases are monic integer
//! unitriangular), so the solvers run on raw `BigInt` coefficient vectors;
//! rational normalization on numbers of hundreds of bits would otherwise
//! dominate triangle generation.
//!
//! Triangles and coefficient caches are grown row by row under a single
//! writer; completed rows are immutable and shared freely across threads.

use crate::binomial::{binomial, factorial};
use crate::error::{Error, Result};
use crate::genfun::degenerate_exp;
use crate::lambda_poly::LambdaPoly;
use crate::rational::{rat, Rational};
use crate::series::TruncSeries;
use num_bigint::BigInt;
use num_traits::Zero;
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::RwLock;

/// λ-polynomial with integer coefficients, the internal working form of the
/// triangle solvers. Trailing zeros are tolerated; conversion back to
/// [`LambdaPoly`] trims.
type ZPoly = Vec<BigInt>;

fn zpoly_is_zero(p: &ZPoly) -> bool {
    p.iter().all(Zero::is_zero)
}

fn zpoly_to_lambda(p: ZPoly) -> LambdaPoly {
    LambdaPoly::from_coeffs(p.into_iter().map(Rational::from_integer).collect())
}

fn zpoly_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn zpoly_sub_assign(target: &mut ZPoly, other: &ZPoly) {
    if target.len() < other.len() {
        target.resize(other.len(), BigInt::from(0));
    }
    for (t, o) in target.iter_mut().zip(other) {
        if !o.is_zero() {
            *t -= o;
        }
    }
}

fn zpoly_add_assign(target: &mut ZPoly, other: &ZPoly) {
    if target.len() < other.len() {
        target.resize(other.len(), BigInt::from(0));
    }
    for (t, o) in target.iter_mut().zip(other) {
        if !o.is_zero() {
            *t += o;
        }
    }
}

/// Which triangle a [`StirlingTriangle`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    /// Signed Stirling numbers of the first kind S_1(n, k).
    Classical1,
    /// Stirling numbers of the second kind S_2(n, k).
    Classical2,
    /// Degenerate Stirling numbers of the first kind S_{1,λ}(n, k).
    Degenerate1,
    /// Degenerate Stirling numbers of the second kind S_{2,λ}(n, k).
    Degenerate2,
}

/// Lazily extended, memoized triangle of λ-polynomial entries.
///
/// Row construction is serialized behind a write lock; published rows are
/// never mutated, so queries are pure once a row exists.
#[derive(Debug)]
pub struct StirlingTriangle {
    kind: StirlingKind,
    rows: RwLock<Vec<Vec<LambdaPoly>>>,
}

impl StirlingTriangle {
    pub fn new(kind: StirlingKind) -> Self {
        StirlingTriangle {
            kind,
            rows: RwLock::new(Vec::new()),
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Entry (n, k); zero for k > n.
    pub fn entry(&self, n: usize, k: usize) -> LambdaPoly {
        if k > n {
            return LambdaPoly::zero();
        }
        self.ensure_rows(n);
        self.rows.read().unwrap()[n][k].clone()
    }

    /// Clone of rows 0..=n.
    pub fn rows_up_to(&self, n: usize) -> Vec<Vec<LambdaPoly>> {
        self.ensure_rows(n);
        self.rows.read().unwrap()[..=n].to_vec()
    }

    /// Make sure rows 0..=n exist.
    pub fn ensure_rows(&self, n: usize) {
        {
            let rows = self.rows.read().unwrap();
            if rows.len() > n {
                return;
            }
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let next = rows.len();
            let row = match self.kind {
                StirlingKind::Classical1 => classical_row(&rows, next, -1),
                StirlingKind::Classical2 => classical_row(&rows, next, 1),
                StirlingKind::Degenerate1 => {
                    let target = classical_falling_int(next)
                        .into_iter()
                        .map(|c| vec![c])
                        .collect::<Vec<_>>();
                    solve_in_degenerate_falling_basis(target)
                        .into_iter()
                        .map(zpoly_to_lambda)
                        .collect()
                }
                StirlingKind::Degenerate2 => {
                    solve_in_classical_falling_basis(degenerate_falling_int(next))
                        .into_iter()
                        .map(zpoly_to_lambda)
                        .collect()
                }
            };
            rows.push(row);
        }
    }
}

/// Classical triangles by their two-term recurrences:
/// S_1(n, k) = S_1(n-1, k-1) - (n-1) S_1(n-1, k)   (sign = -1)
/// S_2(n, k) = S_2(n-1, k-1) + k S_2(n-1, k)       (sign = +1)
fn classical_row(rows: &[Vec<LambdaPoly>], n: usize, sign: i64) -> Vec<LambdaPoly> {
    if n == 0 {
        return vec![LambdaPoly::one()];
    }
    let prev = &rows[n - 1];
    (0..=n)
        .map(|k| {
            let carry = if k > 0 { prev[k - 1].clone() } else { LambdaPoly::zero() };
            if k < n {
                let factor = if sign < 0 { -(n as i64 - 1) } else { k as i64 };
                &carry + &prev[k].scale(&rat(factor))
            } else {
                carry
            }
        })
        .collect()
}

/// Back-substitution of the unitriangular system Σ_k row[k] · (x)_k = target,
/// with the target given by x-monomial coefficients (each a λ-polynomial).
/// Residual updates run in place; this is the hot path of triangle
/// generation.
fn solve_in_classical_falling_basis(target: Vec<ZPoly>) -> Vec<ZPoly> {
    let n = target.len() - 1;
    let mut residual = target;
    let mut row = vec![ZPoly::new(); n + 1];
    for k in (0..=n).rev() {
        let s = std::mem::take(&mut residual[k]);
        if !zpoly_is_zero(&s) {
            let basis = classical_falling_int(k);
            for (j, b) in basis.iter().enumerate().take(k) {
                if b.is_zero() {
                    continue;
                }
                let target_j = &mut residual[j];
                if target_j.len() < s.len() {
                    target_j.resize(s.len(), BigInt::from(0));
                }
                for (i, c) in s.iter().enumerate() {
                    if !c.is_zero() {
                        target_j[i] -= c * b;
                    }
                }
            }
        }
        row[k] = s;
    }
    debug_assert!(residual.iter().all(zpoly_is_zero));
    row
}

/// Back-substitution of Σ_k row[k] · (x)_{k,λ} = target.
fn solve_in_degenerate_falling_basis(target: Vec<ZPoly>) -> Vec<ZPoly> {
    let n = target.len() - 1;
    let mut residual = target;
    let mut row = vec![ZPoly::new(); n + 1];
    for k in (0..=n).rev() {
        let s = std::mem::take(&mut residual[k]);
        if !zpoly_is_zero(&s) {
            let basis = degenerate_falling_int(k);
            for (j, b) in basis.iter().enumerate().take(k) {
                if !zpoly_is_zero(b) {
                    zpoly_sub_assign(&mut residual[j], &zpoly_mul(&s, b));
                }
            }
        }
        row[k] = s;
    }
    debug_assert!(residual.iter().all(zpoly_is_zero));
    row
}

static S1_CLASSICAL: Lazy<StirlingTriangle> =
    Lazy::new(|| StirlingTriangle::new(StirlingKind::Classical1));
static S2_CLASSICAL: Lazy<StirlingTriangle> =
    Lazy::new(|| StirlingTriangle::new(StirlingKind::Classical2));
static S1_DEGENERATE: Lazy<StirlingTriangle> =
    Lazy::new(|| StirlingTriangle::new(StirlingKind::Degenerate1));
static S2_DEGENERATE: Lazy<StirlingTriangle> =
    Lazy::new(|| StirlingTriangle::new(StirlingKind::Degenerate2));

/// Shared memoized triangle for a kind.
pub fn shared(kind: StirlingKind) -> &'static StirlingTriangle {
    match kind {
        StirlingKind::Classical1 => &S1_CLASSICAL,
        StirlingKind::Classical2 => &S2_CLASSICAL,
        StirlingKind::Degenerate1 => &S1_DEGENERATE,
        StirlingKind::Degenerate2 => &S2_DEGENERATE,
    }
}

static CLASSICAL_FALLING: Lazy<RwLock<Vec<Vec<BigInt>>>> =
    Lazy::new(|| RwLock::new(vec![vec![BigInt::from(1)]]));
static DEGENERATE_FALLING: Lazy<RwLock<Vec<Vec<ZPoly>>>> =
    Lazy::new(|| RwLock::new(vec![vec![vec![BigInt::from(1)]]]));

/// Integer coefficients of (x)_n in the monomial basis, from the cache.
fn classical_falling_int(n: usize) -> Vec<BigInt> {
    {
        let rows = CLASSICAL_FALLING.read().unwrap();
        if rows.len() > n {
            return rows[n].clone();
        }
    }
    let mut rows = CLASSICAL_FALLING.write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let j = BigInt::from(rows.len() - 1);
        // multiply by (x - j)
        let mut next = vec![BigInt::from(0); prev.len() + 1];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &j;
        }
        rows.push(next);
    }
    rows[n].clone()
}

/// λ-polynomial coefficients of (x)_{n,λ} in the monomial basis, integer
/// form, from the cache.
fn degenerate_falling_int(n: usize) -> Vec<ZPoly> {
    {
        let rows = DEGENERATE_FALLING.read().unwrap();
        if rows.len() > n {
            return rows[n].clone();
        }
    }
    let mut rows = DEGENERATE_FALLING.write().unwrap();
    while rows.len() <= n {
        let prev = rows.last().unwrap();
        let j = BigInt::from(rows.len() - 1);
        // multiply by (x - jλ): jλ·c shifts the λ-coefficients up by one
        let mut next = vec![ZPoly::new(); prev.len() + 1];
        for (i, c) in prev.iter().enumerate() {
            zpoly_add_assign(&mut next[i + 1], c);
            if !j.is_zero() {
                let mut shifted: ZPoly = vec![BigInt::from(0)];
                shifted.extend(c.iter().map(|x| x * &j));
                zpoly_sub_assign(&mut next[i], &shifted);
            }
        }
        rows.push(next);
    }
    rows[n].clone()
}

/// Coefficients of the classical falling factorial (x)_n = x(x-1)···(x-n+1)
/// in the monomial basis x^k. These are the signed Stirling numbers of the
/// first kind.
pub fn falling_factorial_coeffs(n: usize) -> Vec<Rational> {
    classical_falling_int(n)
        .into_iter()
        .map(Rational::from_integer)
        .collect()
}

/// Coefficients of the degenerate falling factorial (x)_{n,λ} =
/// x(x-λ)···(x-(n-1)λ) in the monomial basis x^k.
pub fn degenerate_falling_coeffs(n: usize) -> Vec<LambdaPoly> {
    degenerate_falling_int(n)
        .into_iter()
        .map(zpoly_to_lambda)
        .collect()
}

/// The degenerate falling factorial (x)_{n,λ} evaluated at a rational x, as a
/// polynomial in λ: Π_{j<n} (x - jλ).
pub fn degenerate_falling(x: &Rational, n: usize) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for j in 0..n {
        let factor = LambdaPoly::from_coeffs(vec![x.clone(), rat(-(j as i64))]);
        acc = &acc * &factor;
    }
    acc
}

fn check_index(n: usize, k: usize) -> Result<()> {
    if k > n {
        Err(Error::Index { n, k })
    } else {
        Ok(())
    }
}

fn check_r(r: i64) -> Result<usize> {
    if r < 0 {
        Err(Error::NegativeR(r))
    } else {
        Ok(r as usize)
    }
}

/// Degenerate Stirling number of the second kind S_{2,λ}(n, k): the
/// change-of-basis coefficient from degenerate to classical falling
/// factorials, by triangular solve.
pub fn stirling2_degenerate(n: usize, k: usize) -> Result<LambdaPoly> {
    check_index(n, k)?;
    Ok(S2_DEGENERATE.entry(n, k))
}

/// Degenerate Stirling number of the first kind S_{1,λ}(n, k): inverse basis
/// change to [`stirling2_degenerate`].
pub fn stirling1_degenerate(n: usize, k: usize) -> Result<LambdaPoly> {
    check_index(n, k)?;
    Ok(S1_DEGENERATE.entry(n, k))
}

/// Classical S_1(n, k) (signed), as an exact rational.
pub fn stirling1_classical(n: usize, k: usize) -> Result<Rational> {
    check_index(n, k)?;
    Ok(S1_CLASSICAL.entry(n, k).coeff(0))
}

/// Classical S_2(n, k), as an exact rational.
pub fn stirling2_classical(n: usize, k: usize) -> Result<Rational> {
    check_index(n, k)?;
    Ok(S2_CLASSICAL.entry(n, k).coeff(0))
}

/// One degenerate r-Stirling number together with its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RStirlingEntry {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub value: LambdaPoly,
}

impl RStirlingEntry {
    /// Compute via the convolution route.
    pub fn compute(n: usize, k: usize, r: i64) -> Result<Self> {
        let value = r_stirling2_convolution(n, k, r)?;
        Ok(RStirlingEntry {
            n,
            k,
            r: r as usize,
            value,
        })
    }
}

static R_STIRLING_MEMO: Lazy<RwLock<HashMap<(usize, usize, usize), LambdaPoly>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// Degenerate r-Stirling number of the second kind via the binomial
/// convolution Σ_m C(n, m) S_{2,λ}(m, k) (r)_{n-m,λ}.
pub fn r_stirling2_convolution(n: usize, k: usize, r: i64) -> Result<LambdaPoly> {
    let ru = check_r(r)?;
    check_index(n, k)?;
    if let Some(v) = R_STIRLING_MEMO.read().unwrap().get(&(n, k, ru)) {
        return Ok(v.clone());
    }
    let rx = rat(r);
    let mut sum = LambdaPoly::zero();
    for m in k..=n {
        let s = S2_DEGENERATE.entry(m, k);
        if s.is_zero() {
            continue;
        }
        let term = &s.scale(&binomial(n, m)) * &degenerate_falling(&rx, n - m);
        sum += &term;
    }
    R_STIRLING_MEMO
        .write()
        .unwrap()
        .insert((n, k, ru), sum.clone());
    Ok(sum)
}

static EXP_POW_CACHE: Lazy<RwLock<HashMap<(usize, usize), TruncSeries>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));
static EM1_POW_CACHE: Lazy<RwLock<HashMap<(usize, usize), TruncSeries>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn exp_r_cached(r: usize, order: usize) -> TruncSeries {
    if let Some(s) = EXP_POW_CACHE.read().unwrap().get(&(r, order)) {
        return s.clone();
    }
    let s = degenerate_exp(&rat(r as i64), order);
    EXP_POW_CACHE.write().unwrap().insert((r, order), s.clone());
    s
}

fn exp_minus_one_pow_cached(k: usize, order: usize) -> TruncSeries {
    if let Some(s) = EM1_POW_CACHE.read().unwrap().get(&(k, order)) {
        return s.clone();
    }
    let base = &degenerate_exp(&rat(1), order) - &TruncSeries::one(order);
    let mut acc = TruncSeries::one(order);
    let mut cache = EM1_POW_CACHE.write().unwrap();
    cache.entry((0, order)).or_insert_with(|| acc.clone());
    for j in 1..=k {
        acc = &acc * &base;
        cache.entry((j, order)).or_insert_with(|| acc.clone());
    }
    acc
}

/// Degenerate r-Stirling number via the EGF e_λ^r(t)(e_λ(t) - 1)^k:
/// the entry equals n!/k! times the ordinary t^n coefficient.
pub fn r_stirling2_via_egf(n: usize, k: usize, r: i64, order: usize) -> Result<LambdaPoly> {
    let ru = check_r(r)?;
    check_index(n, k)?;
    if order < n {
        return Err(Error::OrderTooLow { order, n });
    }
    let prod = &exp_r_cached(ru, order) * &exp_minus_one_pow_cached(k, order);
    let factor = Rational::new(factorial(n), factorial(k));
    Ok(prod.coeff(n).scale(&factor))
}

/// Degenerate r-Stirling number by expanding the shifted degenerate falling
/// factorial (x + r)_{n,λ} in the classical falling-factorial basis.
pub fn r_stirling2_via_basis(n: usize, k: usize, r: i64) -> Result<LambdaPoly> {
    let ru = check_r(r)?;
    check_index(n, k)?;
    // monomial coefficients of (x + r)_{n,λ} = Π_j (x + r - jλ)
    let mut coeffs: Vec<ZPoly> = vec![vec![BigInt::from(1)]];
    for j in 0..n {
        let shift: ZPoly = vec![BigInt::from(ru), BigInt::from(-(j as i64))];
        let mut next = vec![ZPoly::new(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            zpoly_add_assign(&mut next[i + 1], c);
            zpoly_add_assign(&mut next[i], &zpoly_mul(c, &shift));
        }
        coeffs = next;
    }
    let row = solve_in_classical_falling_basis(coeffs);
    Ok(zpoly_to_lambda(row.into_iter().nth(k).unwrap()))
}

/// Enumeration bound for the brute-force partition counters.
pub const BRUTE_FORCE_BOUND: usize = 12;

/// Number of partitions of an n-element set into k nonempty blocks, by
/// exhaustive iteration over restricted-growth strings.
pub fn count_partitions_bruteforce(n: usize, k: usize) -> Result<u64> {
    if n > BRUTE_FORCE_BOUND {
        return Err(Error::TooLarge {
            size: n,
            bound: BRUTE_FORCE_BOUND,
        });
    }
    Ok(count_rgs(n, 0, k))
}

/// Number of partitions of an (n+r)-element set into k+r nonempty blocks with
/// the elements 1..r in pairwise distinct blocks.
pub fn count_r_partitions_bruteforce(n: usize, k: usize, r: i64) -> Result<u64> {
    let ru = check_r(r)?;
    if n + ru > BRUTE_FORCE_BOUND {
        return Err(Error::TooLarge {
            size: n + ru,
            bound: BRUTE_FORCE_BOUND,
        });
    }
    Ok(count_rgs(n + ru, ru, k + ru))
}

/// Count restricted-growth strings of length `len` whose block count equals
/// `blocks`, with the first `fixed` positions pinned to 0, 1, .., fixed-1
/// (canonical form of "first `fixed` elements in distinct blocks").
///
/// Iterative odometer: position i may hold any value up to one past the
/// prefix maximum, capped at blocks - 1.
fn count_rgs(len: usize, fixed: usize, blocks: usize) -> u64 {
    if len == 0 {
        return u64::from(blocks == 0);
    }
    if blocks == 0 || blocks > len || fixed > len {
        return 0;
    }
    let mut a = vec![0usize; len];
    // used[i] = number of blocks used by a[..i]
    let mut used = vec![0usize; len + 1];
    for i in 0..len {
        if i < fixed {
            a[i] = i;
        }
        used[i + 1] = used[i].max(a[i] + 1);
    }
    let mut count = 0u64;
    loop {
        if used[len] == blocks {
            count += 1;
        }
        let mut i = len;
        loop {
            if i == fixed {
                return count;
            }
            i -= 1;
            if a[i] < used[i].min(blocks - 1) {
                break;
            }
        }
        a[i] += 1;
        used[i + 1] = used[i].max(a[i] + 1);
        for j in i + 1..len {
            a[j] = 0;
            used[j + 1] = used[j].max(1);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorial_small() {
        assert_eq!(falling_factorial_coeffs(0), vec![rat(1)]);
        assert_eq!(falling_factorial_coeffs(2), vec![rat(0), rat(-1), rat(1)]);
    }

    #[test]
    fn falling_factorial_matches_naive_integer_product() {
        // oracle: expand (x)(x-1)(x-2)(x-3) with exact integers
        let mut naive = vec![BigInt::from(1)];
        for j in 0..4i64 {
            let mut next = vec![BigInt::from(0); naive.len() + 1];
            for (i, c) in naive.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * BigInt::from(j);
            }
            naive = next;
        }
        let got = falling_factorial_coeffs(4);
        assert_eq!(got.len(), naive.len());
        for (g, n) in got.iter().zip(&naive) {
            assert_eq!(g, &Rational::from_integer(n.clone()));
        }
        assert_eq!(got[1], rat(-6));
    }

    #[test]
    fn degenerate_falling_small() {
        assert_eq!(degenerate_falling_coeffs(0), vec![LambdaPoly::one()]);
        assert_eq!(
            degenerate_falling_coeffs(2),
            vec![LambdaPoly::zero(), -&LambdaPoly::lambda(), LambdaPoly::one()]
        );
        // x(x-λ)(x-2λ) = x^3 - 3λ x^2 + 2λ^2 x
        let c3 = degenerate_falling_coeffs(3);
        assert_eq!(c3[1], LambdaPoly::lambda().mul_lambda_pow(1).scale(&rat(2)));
        assert_eq!(c3[2], LambdaPoly::lambda().scale(&rat(-3)));
    }

    #[test]
    fn degenerate_falling_coeffs_match_evaluated_product() {
        // oracle: evaluate both forms at rational points
        use crate::rational::ratio;
        let x = ratio(5, 3);
        let q = ratio(-2, 7);
        for n in 0..=7usize {
            let via_coeffs: Rational = degenerate_falling_coeffs(n)
                .iter()
                .enumerate()
                .map(|(k, c)| c.eval(&q) * num_traits::pow(x.clone(), k))
                .sum();
            assert_eq!(via_coeffs, degenerate_falling(&x, n).eval(&q), "n = {n}");
        }
    }

    #[test]
    fn degenerate_falling_degree_bound_is_exact() {
        for n in 1..=8usize {
            let coeffs = degenerate_falling_coeffs(n);
            for (k, c) in coeffs.iter().enumerate().skip(1) {
                assert_eq!(c.degree(), Some(n - k), "(x)_{{{n},λ}} coeff of x^{k}");
            }
        }
    }

    #[test]
    fn stirling2_degenerate_examples() {
        for n in 0..=8 {
            assert_eq!(stirling2_degenerate(n, n).unwrap(), LambdaPoly::one());
        }
        assert_eq!(
            stirling2_degenerate(2, 1).unwrap(),
            LambdaPoly::from_coeffs(vec![rat(1), rat(-1)])
        );
        // λ = 0 specialization against the exhaustive partition counter
        let s32 = stirling2_degenerate(3, 2).unwrap();
        assert_eq!(
            s32.eval(&rat(0)),
            rat(count_partitions_bruteforce(3, 2).unwrap() as i64)
        );
        assert!(stirling2_degenerate(2, 3).is_err());
    }

    #[test]
    fn stirling1_degenerate_examples() {
        assert_eq!(
            stirling1_degenerate(2, 1).unwrap(),
            LambdaPoly::from_coeffs(vec![rat(-1), rat(1)])
        );
        // inverse matrices: off-diagonal product vanishes
        let mut sum = LambdaPoly::zero();
        for j in 2..=3 {
            sum += &(&stirling1_degenerate(3, j).unwrap() * &stirling2_degenerate(j, 2).unwrap());
        }
        assert!(sum.is_zero());
    }

    #[test]
    fn basis_round_trip_reproduces_degenerate_falling() {
        // Σ_k S_{2,λ}(n,k) (x)_k expanded back into monomials equals (x)_{n,λ}
        for n in 0..=8usize {
            let mut recovered = vec![LambdaPoly::zero(); n + 1];
            for k in 0..=n {
                let s = stirling2_degenerate(n, k).unwrap();
                for (j, c) in falling_factorial_coeffs(k).iter().enumerate() {
                    recovered[j] += &s.scale(c);
                }
            }
            assert_eq!(recovered, degenerate_falling_coeffs(n));
        }
    }

    #[test]
    fn classical_triangles_frozen_values() {
        assert_eq!(stirling1_classical(5, 1).unwrap(), rat(24));
        assert_eq!(stirling1_classical(5, 2).unwrap(), rat(-50));
        assert_eq!(stirling1_classical(6, 3).unwrap(), rat(-225));
        assert_eq!(stirling2_classical(5, 3).unwrap(), rat(25));
        assert_eq!(stirling2_classical(6, 2).unwrap(), rat(31));
        assert_eq!(stirling2_classical(8, 2).unwrap(), rat(127));
    }

    #[test]
    fn classical_kinds_are_lambda_free() {
        for kind in [StirlingKind::Classical1, StirlingKind::Classical2] {
            for row in shared(kind).rows_up_to(8) {
                for e in row {
                    assert!(e.is_constant());
                }
            }
        }
    }

    #[test]
    fn triangle_edges() {
        for kind in [
            StirlingKind::Classical1,
            StirlingKind::Classical2,
            StirlingKind::Degenerate1,
            StirlingKind::Degenerate2,
        ] {
            let t = shared(kind);
            for n in 0..=8 {
                assert_eq!(t.entry(n, n), LambdaPoly::one());
                if n >= 1 {
                    assert!(t.entry(n, 0).is_zero());
                }
                assert!(t.entry(n, n + 1).is_zero());
            }
        }
    }

    #[test]
    fn r_stirling_convolution_examples() {
        // n=1, k=0, r=1: the m=0 term contributes 1·1·(1)_{1,λ} = 1, m=1 is 0
        assert_eq!(r_stirling2_convolution(1, 0, 1).unwrap(), LambdaPoly::one());
        for n in 0..=5 {
            assert_eq!(r_stirling2_convolution(n, n, 3).unwrap(), LambdaPoly::one());
        }
        // r = 0 reduces to S_{2,λ}
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(
                    r_stirling2_convolution(n, k, 0).unwrap(),
                    stirling2_degenerate(n, k).unwrap()
                );
            }
        }
        assert_eq!(r_stirling2_convolution(1, 0, -1), Err(Error::NegativeR(-1)));
    }

    #[test]
    fn r_stirling_frozen_entry() {
        // {3 brace 2}_λ with r=1, n=2, k=1 expands to 3 - λ
        let expect = LambdaPoly::from_coeffs(vec![rat(3), rat(-1)]);
        assert_eq!(r_stirling2_convolution(2, 1, 1).unwrap(), expect);
        assert_eq!(r_stirling2_via_egf(2, 1, 1, 4).unwrap(), expect);
        assert_eq!(r_stirling2_via_basis(2, 1, 1).unwrap(), expect);
    }

    #[test]
    fn r_stirling_egf_route() {
        for r in 0..=3 {
            assert_eq!(r_stirling2_via_egf(0, 0, r, 2).unwrap(), LambdaPoly::one());
        }
        assert_eq!(r_stirling2_via_egf(1, 1, 0, 1).unwrap(), LambdaPoly::one());
        assert_eq!(
            r_stirling2_via_egf(3, 1, 2, 2),
            Err(Error::OrderTooLow { order: 2, n: 3 })
        );
    }

    #[test]
    fn r_stirling_basis_route_edge_cases() {
        for n in 0..=5 {
            // k = 0 column equals (r)_{n,λ}
            assert_eq!(
                r_stirling2_via_basis(n, 0, 2).unwrap(),
                degenerate_falling(&rat(2), n)
            );
        }
        assert_eq!(r_stirling2_via_basis(0, 0, 4).unwrap(), LambdaPoly::one());
    }

    #[test]
    fn r_stirling_entry_struct() {
        let e = RStirlingEntry::compute(1, 0, 2).unwrap();
        assert_eq!(e.value, LambdaPoly::constant(rat(2)));
        assert!(RStirlingEntry::compute(2, 3, 0).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions_bruteforce(3, 2).unwrap(), 3);
        assert_eq!(count_partitions_bruteforce(4, 2).unwrap(), 7);
        for n in 0..=6 {
            assert_eq!(count_partitions_bruteforce(n, n).unwrap(), 1);
        }
        assert_eq!(count_partitions_bruteforce(5, 0).unwrap(), 0);
        assert_eq!(count_partitions_bruteforce(0, 0).unwrap(), 1);
        assert!(matches!(
            count_partitions_bruteforce(13, 2),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn bell_numbers_from_partition_counts() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, b) in bell.iter().enumerate() {
            let total: u64 = (0..=n)
                .map(|k| count_partitions_bruteforce(n, k).unwrap())
                .sum();
            assert_eq!(total, *b);
        }
    }

    #[test]
    fn r_partition_counts() {
        // r = 0 reduces to the plain counter
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(
                    count_r_partitions_bruteforce(n, k, 0).unwrap(),
                    count_partitions_bruteforce(n, k).unwrap()
                );
            }
        }
        // n = 0: only the all-singleton partition of 1..r
        assert_eq!(count_r_partitions_bruteforce(0, 0, 3).unwrap(), 1);
        assert_eq!(count_r_partitions_bruteforce(0, 1, 3).unwrap(), 0);
        // matches the degenerate entry at λ = 0
        let entry = r_stirling2_convolution(2, 1, 1).unwrap();
        assert_eq!(
            entry.eval(&rat(0)),
            rat(count_r_partitions_bruteforce(2, 1, 1).unwrap() as i64)
        );
        assert!(count_r_partitions_bruteforce(10, 2, 3).is_err());
        assert_eq!(
            count_r_partitions_bruteforce(1, 0, -2),
            Err(Error::NegativeR(-2))
        );
    }

    #[test]
    fn degree_bounds() {
        for n in 0..=9usize {
            for k in 0..=n {
                let s = stirling2_degenerate(n, k).unwrap();
                if let Some(d) = s.degree() {
                    assert!(d <= n - k);
                }
                let rs = r_stirling2_convolution(n, k, 3).unwrap();
                if let Some(d) = rs.degree() {
                    assert!(d <= n - k);
                }
            }
        }
    }
}

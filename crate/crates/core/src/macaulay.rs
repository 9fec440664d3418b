//! Binomial coefficients, Macaulay representations and the shadow operator.
//!
//! For a degree `d >= 1` every non-negative integer `c` has a unique
//! representation
//!
//! ```text
//! c = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_1, 1),   k_d > k_{d-1} > ... > k_1 >= 0
//! ```
//!
//! where `C(a, b) = 0` whenever `a < b`. Once the greedy remainder reaches
//! zero at position `j` the tail is padded with `(j-1, j-2, ..., 0)`, so the
//! array always has exactly `d` entries and `c = 0` is the pure padding array
//! `(d-1, ..., 1, 0)`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact non-negative count.
pub type BigCount = BigUint;

/// `C(a, b)`, zero whenever `a < b` (in particular for every negative `a`).
pub fn binomial(a: i64, b: u64) -> BigCount {
    if a < 0 || (a as u64) < b {
        return BigCount::zero();
    }
    let a = a as u64;
    binomial_u64(a, b)
}

fn binomial_u64(a: u64, b: u64) -> BigCount {
    if a < b {
        return BigCount::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigCount::one();
    for step in 0..b {
        acc *= a - step;
        acc /= step + 1;
    }
    acc
}

/// The `d`'th Macaulay coefficients `(k_d, ..., k_1)` of some integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MacaulayRep {
    coeffs: Vec<u64>,
}

impl MacaulayRep {
    /// Wraps a coefficient array given highest position first. Rejects empty
    /// arrays and arrays that are not strictly decreasing.
    pub fn from_coeffs(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotDecreasing);
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32
    }

    /// Coefficients `(k_d, ..., k_1)`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `(position j, k_j)` pairs from `j = d` down to `1`.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let d = self.coeffs.len() as u64;
        self.coeffs.iter().enumerate().map(move |(idx, &k)| (d - idx as u64, k))
    }

    /// `sum_j C(k_j - shift, j)`; `shift = 0` evaluates the representation.
    pub fn eval_shifted(&self, shift: u64) -> BigCount {
        self.terms()
            .map(|(j, k)| {
                if k < shift {
                    BigCount::zero()
                } else {
                    binomial_u64(k - shift, j)
                }
            })
            .sum()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (j, k)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "C({k},{j})")?;
        }
        Ok(())
    }
}

/// Largest `k` with `C(k, j) <= target`; always at least `j - 1`.
fn largest_fitting(target: &BigCount, j: u64) -> Result<u64> {
    let mut lo = j - 1;
    let mut hi = j.max(1);
    while binomial_u64(hi, j) <= *target {
        lo = hi;
        hi = hi.checked_mul(2).ok_or(Error::CoefficientOverflow)?;
    }
    // binom(lo, j) <= target < binom(hi, j)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial_u64(mid, j) <= *target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Greedy `d`'th Macaulay representation of `c` with tail padding.
///
/// Fails only when a coefficient would not fit in 64 bits, which needs
/// `c >= 2^64` for `d = 1` and far larger values otherwise.
pub fn macaulay_rep(c: &BigCount, d: u32) -> Result<MacaulayRep> {
    if d == 0 {
        return Err(Error::InvalidArgument("representation degree must be positive".into()));
    }
    let mut rem = c.clone();
    let mut coeffs = Vec::with_capacity(d as usize);
    for j in (1..=d as u64).rev() {
        let k = if rem.is_zero() { j - 1 } else { largest_fitting(&rem, j)? };
        rem -= binomial_u64(k, j);
        coeffs.push(k);
    }
    debug_assert!(rem.is_zero());
    Ok(MacaulayRep { coeffs })
}

/// Value of a representation.
pub fn eval_rep(rep: &MacaulayRep) -> BigCount {
    rep.eval_shifted(0)
}

/// Evaluates a raw coefficient array, rejecting arrays that are not strictly
/// decreasing.
pub fn eval_coeffs(coeffs: &[u64]) -> Result<BigCount> {
    MacaulayRep::from_coeffs(coeffs.to_vec()).map(|rep| eval_rep(&rep))
}

/// `c_<d>`: decrement every Macaulay coefficient and evaluate.
pub fn shadow(c: &BigCount, d: u32) -> Result<BigCount> {
    iterated_shadow(c, d, 1)
}

/// `sum_j C(k_j - r, j)` for the `d`'th coefficients of `c`.
pub fn iterated_shadow(c: &BigCount, d: u32, r: u64) -> Result<BigCount> {
    Ok(macaulay_rep(c, d)?.eval_shifted(r))
}

/// Compares two integers through their coefficient arrays.
pub fn macaulay_compare(c1: &BigCount, c2: &BigCount, d: u32) -> Result<Ordering> {
    Ok(macaulay_rep(c1, d)?.cmp(&macaulay_rep(c2, d)?))
}

/// `C(i + r, r)`, the counting threshold for `r` forms in degree `i`.
pub fn es_threshold(i: u32, r: u32) -> BigCount {
    binomial_u64(i as u64 + r as u64, r as u64)
}

/// Degree-`i` representation of `C(i + r, r) - 1`, which is
/// `(i + r - 1, i + r - 2, ..., r)`.
pub fn es_bound_rep(i: u32, r: u32) -> Result<MacaulayRep> {
    if i == 0 || r == 0 {
        return Err(Error::InvalidArgument("i and r must be positive".into()));
    }
    macaulay_rep(&(es_threshold(i, r) - 1u32), i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use alloc::string::ToString;
    use alloc::vec;

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    fn pascal(rows: usize) -> Vec<Vec<u64>> {
        let mut t = vec![vec![0u64; rows + 1]; rows + 1];
        for a in 0..=rows {
            t[a][0] = 1;
            for b in 1..=a {
                t[a][b] = t[a - 1][b - 1].saturating_add(t[a - 1][b]);
            }
        }
        t
    }

    /// Enumerates every strictly decreasing array of length `d` with entries
    /// below `top` and records the one evaluating to each small value.
    fn enumerate_reps(d: usize, top: usize, max_value: u64) -> BTreeMap<u64, Vec<u64>> {
        let table = pascal(top + 1);
        let mut out = BTreeMap::new();
        let mut stack: Vec<u64> = Vec::new();
        fn go(
            d: usize,
            upper: usize,
            stack: &mut Vec<u64>,
            table: &[Vec<u64>],
            max_value: u64,
            out: &mut BTreeMap<u64, Vec<u64>>,
        ) {
            let pos = d - stack.len();
            if pos == 0 {
                let v: u64 = stack
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| table[k as usize][d - i])
                    .sum();
                if v <= max_value {
                    assert!(out.insert(v, stack.clone()).is_none(), "two arrays for {v}");
                }
                return;
            }
            for k in (pos - 1)..upper {
                stack.push(k as u64);
                go(d, k, stack, table, max_value, out);
                stack.pop();
            }
        }
        go(d, top, &mut stack, &table, max_value, &mut out);
        out
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 3), big(10));
        assert_eq!(binomial(0, 1), big(0));
        assert_eq!(binomial(-1, 1), big(0));
        assert_eq!(binomial(-3, 0), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(60, 30), big(118264581564861424));
    }

    #[test]
    fn worked_example() {
        let rep = macaulay_rep(&big(13), 3).unwrap();
        assert_eq!(rep.coeffs(), &[5, 3, 0]);
        assert_eq!(eval_rep(&rep), big(13));
        assert_eq!(rep.to_string(), "C(5,3) + C(3,2) + C(0,1)");
    }

    #[test]
    fn padding() {
        assert_eq!(macaulay_rep(&big(0), 3).unwrap().coeffs(), &[2, 1, 0]);
        assert_eq!(macaulay_rep(&big(10), 3).unwrap().coeffs(), &[5, 1, 0]);
        assert_eq!(eval_coeffs(&[2, 1, 0]).unwrap(), big(0));
        assert_eq!(eval_coeffs(&[5, 1, 0]).unwrap(), big(10));
        assert_eq!(eval_coeffs(&[5, 3, 0]).unwrap(), big(13));
    }

    #[test]
    fn rejects_non_decreasing() {
        assert_eq!(eval_coeffs(&[3, 3]), Err(Error::NotDecreasing));
        assert_eq!(eval_coeffs(&[1, 2]), Err(Error::NotDecreasing));
        assert_eq!(eval_coeffs(&[]), Err(Error::NotDecreasing));
        assert!(macaulay_rep(&big(3), 0).is_err());
    }

    #[test]
    fn greedy_matches_enumeration() {
        for d in 1..=4usize {
            let oracle = enumerate_reps(d, 64, 60);
            for c in 0..=60u64 {
                let rep = macaulay_rep(&big(c), d as u32).unwrap();
                assert_eq!(rep.coeffs(), oracle[&c].as_slice(), "c={c} d={d}");
            }
        }
    }

    #[test]
    fn shadow_values() {
        // C(4,3) + C(2,2) + C(-1,1)
        assert_eq!(shadow(&big(13), 3).unwrap(), big(5));
        assert_eq!(shadow(&big(2), 2).unwrap(), big(0));
        for d in 1..6 {
            assert_eq!(shadow(&big(0), d).unwrap(), big(0));
        }
    }

    /// Shadow computed from the enumerated representation, applied `r` times.
    fn oracle_iterate(c: u64, d: usize, r: usize, reps: &BTreeMap<u64, Vec<u64>>) -> u64 {
        let table = pascal(80);
        let mut v = c;
        for _ in 0..r {
            let rep = &reps[&v];
            v = rep
                .iter()
                .enumerate()
                .map(|(idx, &k)| if k == 0 { 0 } else { table[k as usize - 1][d - idx] })
                .sum();
        }
        v
    }

    #[test]
    fn iterated_shadow_values() {
        let reps3 = enumerate_reps(3, 20, 20);
        assert_eq!(oracle_iterate(13, 3, 2, &reps3), 1);
        assert_eq!(iterated_shadow(&big(13), 3, 2).unwrap(), big(1));
        assert_eq!(iterated_shadow(&big(13), 3, 0).unwrap(), big(13));
        // C(6,4) - 1 = 14 with i = 4, r = 2
        let reps4 = enumerate_reps(4, 20, 20);
        assert_eq!(oracle_iterate(14, 4, 2, &reps4), 0);
        assert_eq!(iterated_shadow(&big(14), 4, 2).unwrap(), big(0));
        // free K[x,y,z] in degree 2 cut twice: C(4,2) + C(0,1) -> C(2,2) + C(-2,1)
        let reps2 = enumerate_reps(2, 20, 20);
        assert_eq!(oracle_iterate(6, 2, 2, &reps2), 1);
        assert_eq!(iterated_shadow(&big(6), 2, 2).unwrap(), big(1));
    }

    #[test]
    fn iterate_matches_enumerated_oracle() {
        for d in 1..=4usize {
            let reps = enumerate_reps(d, 64, 60);
            for c in 0..=60u64 {
                for r in 0..=3usize {
                    let expected = oracle_iterate(c, d, r, &reps);
                    assert_eq!(iterated_shadow(&big(c), d as u32, r as u64).unwrap(), big(expected));
                }
            }
        }
    }

    #[test]
    fn compare_examples() {
        assert_eq!(macaulay_compare(&big(13), &big(13), 3).unwrap(), Ordering::Equal);
        assert_eq!(macaulay_compare(&big(12), &big(13), 3).unwrap(), Ordering::Less);
        assert_eq!(macaulay_compare(&big(35), &big(36), 3).unwrap(), Ordering::Less);
    }

    #[test]
    fn thresholds() {
        assert_eq!(es_threshold(2, 2), big(6));
        assert_eq!(es_threshold(3, 1), big(4));
        assert_eq!(es_threshold(1, 5), big(6));
        assert_eq!(es_bound_rep(2, 2).unwrap().coeffs(), &[3, 2]);
        assert_eq!(es_bound_rep(1, 7).unwrap().coeffs(), &[7]);
        let rep = es_bound_rep(3, 2).unwrap();
        assert_eq!(rep.coeffs(), &[4, 3, 2]);
        assert_eq!(eval_rep(&rep), big(9));
    }

    #[test]
    fn large_counts_do_not_wrap() {
        let c = es_threshold(40, 40);
        let rep = es_bound_rep(40, 40).unwrap();
        assert_eq!(eval_rep(&rep), c - 1u32);
        assert_eq!(rep.coeffs()[0], 79);
        assert_eq!(*rep.coeffs().last().unwrap(), 40);
    }
}

//! Exact binomial coefficients in `u128` with overflow detection.

use crate::error::{Error, Result};

/// `C(n, k)`, exact. Returns `0` when `k > n`.
///
/// Uses the multiplicative formula on the smaller of `k` and `n - k`. Each
/// intermediate `C(n - k + i, i)` is an integer, and the product is split
/// through a gcd so that no intermediate exceeds the final result by more
/// than a factor of `i`.
pub fn binom(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        let num = (n as u128) - (k as u128) + i;
        // acc * num / i, with acc * num possibly overflowing: divide first
        let g = gcd(acc, i);
        let (a, d) = (acc / g, i / g);
        let g2 = gcd(num, d);
        let (m, d) = (num / g2, d / g2);
        debug_assert_eq!(d, 1);
        acc = a
            .checked_mul(m)
            .ok_or_else(|| Error::Overflow(format!("C({n}, {k})")))?;
    }
    Ok(acc)
}

/// `C(n, k)` extended to signed arguments: zero whenever `k < 0` or `n < k`
/// (including `n < 0`). Thresholds such as `C(n-2, k-2)` at `k = 1` use this.
pub fn binom_signed(n: i64, k: i64) -> Result<u128> {
    if k < 0 || n < 0 || k > n {
        return Ok(0);
    }
    binom(n as u64, k as u64)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn mul(a: u128, b: u128, what: &str) -> Result<u128> {
    a.checked_mul(b)
        .ok_or_else(|| Error::Overflow(what.to_string()))
}

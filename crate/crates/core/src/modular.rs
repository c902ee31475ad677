//! Integer helpers shared by the transform, the simulator and the cost model.

use crate::error::{DprtError, Result};

/// Positive remainder of `a` modulo `b`, i.e. the unique `r` in `[0, b)` with
/// `a = r (mod b)`. Negative `a` is allowed.
pub fn mod_index(a: i64, b: i64) -> Result<i64> {
    if b <= 0 {
        return Err(DprtError::InvalidArgument(format!(
            "modulus must be positive, got {b}"
        )));
    }
    Ok(a.rem_euclid(b))
}

/// `(a + b * c) mod n` on unsigned indices, without intermediate overflow for
/// any `n` that fits in memory.
#[inline]
pub(crate) fn wrap(a: usize, b: usize, c: usize, n: usize) -> usize {
    ((a as u128 + b as u128 * c as u128) % n as u128) as usize
}

/// `(a - b * c) mod n` on unsigned indices.
#[inline]
pub(crate) fn wrap_sub(a: usize, b: usize, c: usize, n: usize) -> usize {
    let prod = (b as u128 * c as u128) % n as u128;
    ((a as u128 + n as u128 - prod) % n as u128) as usize
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `ceil(log2(x))` for `x >= 1`; `ceil_log2(1) == 0`.
pub fn ceil_log2(x: u64) -> u32 {
    assert!(x >= 1, "ceil_log2 of zero");
    u64::BITS - (x - 1).leading_zeros()
}

/// Width of an exact DPRT coefficient: `b + ceil(log2(n))`.
pub fn output_width(n: usize, b: u32) -> u32 {
    b + ceil_log2(n as u64)
}

//! Reference forward and inverse transforms, evaluated directly from their
//! defining sums.

use crate::error::{DprtError, InvalidReason, Result};
use crate::image::{max_value, Image};
use crate::modular::{wrap, wrap_sub};
use crate::radon::RadonArray;

/// Forward DPRT.
///
/// `R(m, d) = sum_i f(i, <d + m i>_N)` for `m < N` and `R(N, d) = sum_j f(d, j)`.
pub fn forward_dprt(img: &Image) -> RadonArray {
    let n = img.n();
    let mut values = vec![0u64; (n + 1) * n];
    for m in 0..n {
        let row = &mut values[m * n..(m + 1) * n];
        for (d, out) in row.iter_mut().enumerate() {
            *out = (0..n).map(|i| img.get(i, wrap(d, m, i, n))).sum();
        }
    }
    for d in 0..n {
        values[n * n + d] = img.row(d).iter().sum();
    }
    let r = RadonArray::from_parts_unchecked(n, img.bits(), values);
    debug_assert!(r.values().iter().all(|&v| v <= n as u64 * img.max_value()));
    r
}

/// Sum of projection `m`; equal to the sum of all pixels for a valid array.
pub fn total_sum(r: &RadonArray, m: usize) -> Result<u64> {
    if m > r.n() {
        return Err(DprtError::InvalidArgument(format!(
            "direction {m} out of range 0..={}",
            r.n()
        )));
    }
    Ok(r.projection(m).iter().sum())
}

/// Final normalisation step of the inverse: `(z - s) / n`, where `z` already
/// includes `R(N, row)`.
///
/// Fails when `z < s`, when the division leaves a remainder, or when the
/// quotient does not fit in `bits`.
pub fn normalize_pixel(z: u64, s: u64, n: usize, bits: u32, row: usize, col: usize) -> Result<u64> {
    let diff = z
        .checked_sub(s)
        .ok_or(DprtError::InvalidRadonArray(InvalidReason::Negative { row, col }))?;
    let n = n as u64;
    if diff % n != 0 {
        return Err(DprtError::InvalidRadonArray(InvalidReason::NotDivisible {
            row,
            col,
            remainder: diff % n,
        }));
    }
    let value = diff / n;
    if value > max_value(bits) {
        return Err(DprtError::InvalidRadonArray(InvalidReason::Overflow {
            row,
            col,
            value,
            bits,
        }));
    }
    Ok(value)
}

/// Inverse DPRT.
///
/// `f(i, j) = ( sum_{m<N} R(m, <j - m i>_N) - S + R(N, i) ) / N`, with `S`
/// taken from projection 0. The input is validated: unequal projection masses,
/// a negative bracket, a non-zero remainder or an over-wide pixel all yield
/// [`DprtError::InvalidRadonArray`].
pub fn inverse_dprt(r: &RadonArray) -> Result<Image> {
    r.check_projection_mass()?;
    let n = r.n();
    let s = total_sum(r, 0)?;
    let mut pixels = Vec::with_capacity(n * n);
    for i in 0..n {
        let last = r.get(n, i);
        for j in 0..n {
            let back: u64 = (0..n).map(|m| r.get(m, wrap_sub(j, m, i, n))).sum();
            pixels.push(normalize_pixel(back + last, s, n, r.bits(), i, j)?);
        }
    }
    Image::new(n, r.bits(), pixels)
}

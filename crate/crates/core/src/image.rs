use crate::error::{DprtError, Result};
use crate::modular::is_prime;
use crate::MAX_BITS;

/// An `N x N` image of `B`-bit non-negative pixels, `N` prime.
///
/// Pixels are stored row-major; `get(i, j)` is row `i`, column `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Image {
    n: usize,
    bits: u32,
    pixels: Vec<u64>,
}

pub(crate) fn check_side(n: usize) -> Result<()> {
    if !is_prime(n as u64) {
        return Err(DprtError::NotPrime(n));
    }
    Ok(())
}

pub(crate) fn check_bits(bits: u32) -> Result<()> {
    if bits == 0 || bits > MAX_BITS {
        return Err(DprtError::InvalidArgument(format!(
            "bits per pixel must be in 1..={MAX_BITS}, got {bits}"
        )));
    }
    Ok(())
}

impl Image {
    pub fn new(n: usize, bits: u32, pixels: Vec<u64>) -> Result<Self> {
        check_side(n)?;
        check_bits(bits)?;
        if pixels.len() != n * n {
            return Err(DprtError::InvalidArgument(format!(
                "expected {} pixels for a {n}x{n} image, got {}",
                n * n,
                pixels.len()
            )));
        }
        let max = max_value(bits);
        if let Some(idx) = pixels.iter().position(|&p| p > max) {
            return Err(DprtError::PixelOutOfRange {
                row: idx / n,
                col: idx % n,
                value: pixels[idx],
                bits,
            });
        }
        Ok(Image { n, bits, pixels })
    }

    pub fn zeros(n: usize, bits: u32) -> Result<Self> {
        Self::new(n, bits, vec![0; n * n])
    }

    /// Image with every pixel set to `value`.
    pub fn constant(n: usize, bits: u32, value: u64) -> Result<Self> {
        Self::new(n, bits, vec![value; n * n])
    }

    pub fn from_fn(n: usize, bits: u32, mut f: impl FnMut(usize, usize) -> u64) -> Result<Self> {
        let mut pixels = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                pixels.push(f(i, j));
            }
        }
        Self::new(n, bits, pixels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.pixels[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.pixels[i * self.n..(i + 1) * self.n]
    }

    pub fn pixels(&self) -> &[u64] {
        &self.pixels
    }

    /// Sum of all pixels.
    pub fn sum(&self) -> u64 {
        self.pixels.iter().sum()
    }

    /// Largest representable pixel value, `2^B - 1`.
    pub fn max_value(&self) -> u64 {
        max_value(self.bits)
    }
}

pub(crate) fn max_value(bits: u32) -> u64 {
    (1u64 << bits) - 1
}

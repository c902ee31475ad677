use crate::error::{DprtError, InvalidReason, Result};
use crate::image::{check_bits, check_side, max_value};

/// `(N + 1) x N` array of DPRT coefficients `R(m, d)`.
///
/// Row `m < N` is the projection along the prime direction `m`; row `N` holds
/// the row sums of the image. `bits` is the pixel width `B` of the source
/// image, so coefficients are bounded by `N * (2^B - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RadonArray {
    n: usize,
    bits: u32,
    values: Vec<u64>,
}

impl RadonArray {
    /// Wraps `values` (row-major, `(N + 1) * N` entries) after checking the
    /// shape and the per-coefficient bound.
    pub fn new(n: usize, bits: u32, values: Vec<u64>) -> Result<Self> {
        check_side(n)?;
        check_bits(bits)?;
        if values.len() != (n + 1) * n {
            return Err(DprtError::InvalidArgument(format!(
                "expected {} coefficients for N = {n}, got {}",
                (n + 1) * n,
                values.len()
            )));
        }
        let bound = n as u64 * max_value(bits);
        if let Some(idx) = values.iter().position(|&v| v > bound) {
            return Err(DprtError::CoefficientOutOfRange {
                m: idx / n,
                d: idx % n,
                value: values[idx],
                bound,
            });
        }
        Ok(RadonArray { n, bits, values })
    }

    pub fn zeros(n: usize, bits: u32) -> Result<Self> {
        Self::new(n, bits, vec![0; (n + 1) * n])
    }

    pub(crate) fn from_parts_unchecked(n: usize, bits: u32, values: Vec<u64>) -> Self {
        debug_assert_eq!(values.len(), (n + 1) * n);
        RadonArray { n, bits, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Pixel width `B` of the image this array describes.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Width needed for one coefficient, `B + ceil(log2 N)`.
    pub fn coefficient_bits(&self) -> u32 {
        crate::output_width(self.n, self.bits)
    }

    #[inline]
    pub fn get(&self, m: usize, d: usize) -> u64 {
        self.values[m * self.n + d]
    }

    /// Projection `R(m, .)`.
    pub fn projection(&self, m: usize) -> &[u64] {
        &self.values[m * self.n..(m + 1) * self.n]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Checks that every projection carries the same total mass, which holds
    /// for (and, over the rationals, characterises) arrays in the range of the
    /// forward transform.
    pub fn check_projection_mass(&self) -> Result<()> {
        let expected: u64 = self.projection(0).iter().sum();
        for m in 1..=self.n {
            let found: u64 = self.projection(m).iter().sum();
            if found != expected {
                return Err(DprtError::invalid(InvalidReason::MassMismatch {
                    m,
                    expected,
                    found,
                }));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_is_n_times_max_pixel() {
        assert!(RadonArray::new(3, 2, vec![9; 12]).is_ok());
        let err = RadonArray::new(3, 2, {
            let mut v = vec![0; 12];
            v[7] = 10;
            v
        })
        .unwrap_err();
        assert_eq!(
            err,
            DprtError::CoefficientOutOfRange {
                m: 2,
                d: 1,
                value: 10,
                bound: 9
            }
        );
    }

    #[test]
    fn shape_checks() {
        assert!(RadonArray::new(3, 8, vec![0; 9]).is_err());
        assert_eq!(RadonArray::zeros(9, 8), Err(DprtError::NotPrime(9)));
    }

    #[test]
    fn mass_mismatch_is_reported() {
        let mut v = vec![1; 12];
        v[0] = 2;
        let r = RadonArray::new(3, 8, v).unwrap();
        assert!(matches!(
            r.check_projection_mass(),
            Err(DprtError::InvalidRadonArray(InvalidReason::MassMismatch { m: 1, expected: 4, found: 3 }))
        ));
    }
}

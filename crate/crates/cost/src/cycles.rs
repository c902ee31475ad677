use dprt_core::{ceil_log2, is_prime};

use crate::{CostError, Method, Result};

/// Total clock cycles for one transform of an `n x n` image.
///
/// `h` is the strip height and is required for the scalable methods only.
/// `use_mem_in` adds the `N` cycles of buffering the sinogram in the input
/// memory of the scalable inverse; it is ignored elsewhere.
pub fn cycle_model(method: Method, n: usize, b: u32, h: Option<usize>, use_mem_in: bool) -> Result<u64> {
    if !is_prime(n as u64) {
        return Err(CostError::NotPrime(n));
    }
    let nn = n as u64;
    let log_n = u64::from(ceil_log2(nn));
    let b = u64::from(b);
    let strip = |name| -> Result<(u64, u64, u64)> {
        let h = h.ok_or(CostError::MissingStripHeight(name))?;
        if h < 2 || h > n {
            return Err(CostError::InvalidArgument(format!(
                "strip height must be in 2..={n}, got {h}"
            )));
        }
        let h = h as u64;
        Ok((h, nn.div_ceil(h), u64::from(ceil_log2(h))))
    };
    Ok(match method {
        Method::Serial => nn * nn * nn + 2 * nn * nn + nn,
        Method::Systolic => nn * nn + nn + 1,
        Method::Sfdprt => {
            let (h, k, h_lat) = strip("sfdprt")?;
            k * (nn + 3 * h + 3) + nn + h_lat + 1
        }
        Method::Fdprt => 2 * nn + log_n + 1,
        Method::Isfdprt => {
            let (h, k, h_lat) = strip("isfdprt")?;
            let mem_in = if use_mem_in { nn } else { 0 };
            k * (nn + h) + 2 * log_n + h_lat + b + 3 + mem_in
        }
        Method::Ifdprt => 2 * nn + 3 * log_n + b + 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_counts_for_251() {
        assert_eq!(cycle_model(Method::Systolic, 251, 8, None, false).unwrap(), 63_253);
        assert_eq!(cycle_model(Method::Fdprt, 251, 8, None, false).unwrap(), 511);
    }

    #[test]
    fn scalable_examples() {
        assert_eq!(cycle_model(Method::Sfdprt, 251, 8, Some(2), false).unwrap(), 33_013);
        assert_eq!(cycle_model(Method::Sfdprt, 251, 8, Some(84), false).unwrap(), 1_777);
        assert_eq!(cycle_model(Method::Sfdprt, 7, 8, Some(2), false).unwrap(), 73);
        assert_eq!(cycle_model(Method::Sfdprt, 7, 8, Some(7), false).unwrap(), 42);
        assert_eq!(cycle_model(Method::Fdprt, 7, 8, None, false).unwrap(), 18);
        assert_eq!(cycle_model(Method::Isfdprt, 7, 8, Some(2), false).unwrap(), 54);
        assert_eq!(cycle_model(Method::Isfdprt, 7, 8, Some(2), true).unwrap(), 61);
        assert_eq!(cycle_model(Method::Ifdprt, 7, 8, None, false).unwrap(), 33);
        assert_eq!(cycle_model(Method::Ifdprt, 251, 8, None, false).unwrap(), 536);
    }

    #[test]
    fn serial_is_cubic() {
        assert_eq!(cycle_model(Method::Serial, 7, 8, None, false).unwrap(), 7 * 64);
    }

    #[test]
    fn specialised_rows_agree_with_general_formulas() {
        for n in [3usize, 5, 7, 11, 13, 17, 31, 61, 251] {
            let nn = n as u64;
            let log_n = u64::from(ceil_log2(nn));
            for b in [1u32, 4, 8, 12] {
                let bb = u64::from(b);
                let sf = |h| cycle_model(Method::Sfdprt, n, b, Some(h), false).unwrap();
                let isf = |h| cycle_model(Method::Isfdprt, n, b, Some(h), false).unwrap();
                assert_eq!(sf(2), nn.div_ceil(2) * (nn + 9) + nn + 2);
                assert_eq!(sf(n), 5 * nn + log_n + 4);
                assert_eq!(isf(2), nn.div_ceil(2) * (nn + 2) + 2 * log_n + bb + 4);
                assert_eq!(isf(n), 2 * nn + 3 * log_n + bb + 3);
            }
        }
    }

    #[test]
    fn argument_errors() {
        assert_eq!(
            cycle_model(Method::Sfdprt, 7, 8, None, false),
            Err(CostError::MissingStripHeight("sfdprt"))
        );
        assert!(matches!(
            cycle_model(Method::Isfdprt, 7, 8, Some(8), false),
            Err(CostError::InvalidArgument(_))
        ));
        assert_eq!(cycle_model(Method::Fdprt, 9, 8, None, false), Err(CostError::NotPrime(9)));
    }
}

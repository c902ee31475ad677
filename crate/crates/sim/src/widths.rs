use serde::{Deserialize, Serialize};

use dprt_core::ceil_log2;

/// Bit widths of the inverse datapath.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseDatapathWidths {
    /// Sinogram coefficient width, `B + ceil(log2 N)`.
    pub b_prime: u32,
    /// Vertical tree output and divider width, `B' + ceil(log2 (N + 1))`.
    pub bo: u32,
    /// Width of the pixel sum, `B' + ceil(log2 N)`.
    pub bq: u32,
}

impl InverseDatapathWidths {
    pub fn new(n: usize, bits: u32) -> Self {
        let log_n = ceil_log2(n as u64);
        let b_prime = bits + log_n;
        InverseDatapathWidths {
            b_prime,
            bo: b_prime + ceil_log2(n as u64 + 1),
            bq: b_prime + log_n,
        }
    }

    /// Pipeline depth of the divider, `B + 2 ceil(log2 N)` (equal to `bq`).
    pub fn divider_latency(&self) -> usize {
        self.bq as usize
    }
}

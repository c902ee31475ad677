//! Shared tail of the inverse datapaths: subtract `SR`, divide by `N`.

use dprt_core::{normalize_pixel, Result};

use crate::tree::DelayLine;
use crate::widths::InverseDatapathWidths;

type Row = (usize, Vec<u64>);

/// One-cycle subtractor followed by the pipelined exact divider.
///
/// The subtractor registers `Z` together with `SR`; the divider evaluates
/// borrow, remainder and range checks per pixel in column order.
#[derive(Debug)]
pub(crate) struct Normalizer {
    n: usize,
    bits: u32,
    widths: InverseDatapathWidths,
    sr: Option<u64>,
    sub: DelayLine<(usize, Vec<u64>, u64)>,
    div: DelayLine<Row>,
}

impl Normalizer {
    pub fn new(n: usize, bits: u32) -> Self {
        let widths = InverseDatapathWidths::new(n, bits);
        Normalizer {
            n,
            bits,
            widths,
            sr: None,
            sub: DelayLine::new(1),
            div: DelayLine::new(widths.divider_latency()),
        }
    }

    pub fn widths(&self) -> InverseDatapathWidths {
        self.widths
    }

    /// Latches the horizontal tree output. Takes effect for the next cycle.
    pub fn set_sr(&mut self, sr: u64) {
        assert!(sr >> self.widths.bq == 0, "SR exceeds {} bits", self.widths.bq);
        self.sr = Some(sr);
    }

    pub fn is_empty(&self) -> bool {
        self.sub.is_empty() && self.div.is_empty()
    }

    /// Advances one cycle; returns the image row finishing in this cycle.
    pub fn step(&mut self, z: Option<Row>) -> Result<Option<Row>> {
        let sub_in = z.map(|(i, z)| {
            assert!(z.iter().all(|&v| v >> self.widths.bo == 0), "Z exceeds {} bits", self.widths.bo);
            (i, z, self.sr.expect("SR not ready"))
        });
        let div_in = match self.sub.step(sub_in) {
            Some((i, z, sr)) => {
                let q = z
                    .iter()
                    .enumerate()
                    .map(|(j, &v)| normalize_pixel(v, sr, self.n, self.bits, i, j))
                    .collect::<Result<Vec<u64>>>()?;
                Some((i, q))
            }
            None => None,
        };
        Ok(self.div.step(div_in))
    }
}

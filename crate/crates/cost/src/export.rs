//! Flat tabular rows for CSV output.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::{cycle_model, resource_model, Method, ParetoPoint, Result};

/// One line of a cost table. Baseline rows leave `h` and `k` empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostRow {
    pub method: Method,
    #[serde(rename = "H")]
    pub h: Option<usize>,
    #[serde(rename = "K")]
    pub k: Option<usize>,
    pub cycles: u64,
    pub flipflops: u64,
    pub adders: u64,
    pub ram_bits: u64,
    pub muxes: Option<u64>,
}

impl From<&ParetoPoint> for CostRow {
    fn from(p: &ParetoPoint) -> Self {
        CostRow {
            method: p.resources.method,
            h: Some(p.h),
            k: Some(p.strips),
            cycles: p.cycles,
            flipflops: p.resources.total_flipflops,
            adders: p.resources.one_bit_additions,
            ram_bits: p.resources.ram_bits,
            muxes: p.resources.mux_count,
        }
    }
}

impl CostRow {
    pub fn evaluate(method: Method, n: usize, b: u32, h: Option<usize>, use_mem_in: bool) -> Result<Self> {
        let r = resource_model(method, n, b, h)?;
        Ok(CostRow {
            method,
            h: r.h,
            k: r.h.map(|h| n.div_ceil(h)),
            cycles: cycle_model(method, n, b, h, use_mem_in)?,
            flipflops: r.total_flipflops,
            adders: r.one_bit_additions,
            ram_bits: r.ram_bits,
            muxes: r.mux_count,
        })
    }
}

pub fn write_csv<W: Write>(out: W, rows: &[CostRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> csv::Result<Vec<CostRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

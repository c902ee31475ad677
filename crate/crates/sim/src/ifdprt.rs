//! Fastest inverse architecture.

use dprt_core::{DprtError, Image, RadonArray, Result};

use crate::normalize::Normalizer;
use crate::registers::ShiftRegisterArray;
use crate::report::{Architecture, CycleReport, SimConfig, SimRun};
use crate::trace::{Clock, Phase};
use crate::tree::AdderTreeArray;

struct Ifdprt {
    n: usize,
    regs: ShiftRegisterArray,
    /// `R(N, .)`, rotated left once per output row; cell 0 feeds every tree.
    last: ShiftRegisterArray,
    vtree: AdderTreeArray<usize>,
    htree: AdderTreeArray<()>,
    norm: Normalizer,
    clock: Clock,
    pixels: Vec<u64>,
}

impl Ifdprt {
    fn begin(&mut self, phase: Phase, capture: Option<usize>, sr_row: Option<Vec<u64>>) -> Result<()> {
        let n = self.n;
        self.clock.enter(phase, None);
        let input = capture.map(|i| {
            self.clock.capture(i);
            let cols = (0..n)
                .map(|j| {
                    let mut c = self.regs.column(j);
                    c.push(self.last.row(0)[0]);
                    c
                })
                .collect();
            (i, cols)
        });
        if let Some((i, row)) = self.norm.step(self.vtree.step(input))? {
            self.pixels[i * n..(i + 1) * n].copy_from_slice(&row);
        }
        if let Some(((), sums)) = self.htree.step(sr_row.map(|row| ((), vec![row]))) {
            self.norm.set_sr(sums[0]);
        }
        Ok(())
    }

    fn end(&mut self) {
        self.regs.clock();
        self.last.clock();
        self.clock.tick(None, None);
    }
}

/// Takes `2N + 3 ceil(log2 N) + B + 2` cycles.
///
/// Projections `0..N` fill an `N x N` array while the horizontal tree sums
/// projection 0 into `SR`. Output row `i` is captured from all rows plus
/// `R(N, i)`.
pub fn run_ifdprt(r_arr: &RadonArray) -> Result<SimRun<Image>> {
    r_arr.check_projection_mass()?;
    let n = r_arr.n();
    let bits = r_arr.bits();
    if n < 3 {
        return Err(DprtError::InvalidArgument(
            "the inverse datapath needs an odd prime side".into(),
        ));
    }
    let norm = Normalizer::new(n, bits);
    let width = norm.widths().b_prime;
    let mut m = Ifdprt {
        n,
        regs: ShiftRegisterArray::new(n, n, width),
        last: ShiftRegisterArray::new(1, n, width),
        vtree: AdderTreeArray::new(n, n + 1, width),
        htree: AdderTreeArray::new(1, n, width),
        norm,
        clock: Clock::new(),
        pixels: vec![0; n * n],
    };

    for t in 0..n {
        let row = r_arr.projection(t).to_vec();
        m.begin(Phase::SinogramLoad, None, (t == 0).then(|| row.clone()))?;
        m.regs.push(row);
        m.end();
    }
    m.begin(Phase::SinogramLoad, None, None)?;
    m.last.push(r_arr.projection(n).to_vec());
    m.end();
    for i in 0..n {
        m.begin(Phase::Backprojection, Some(i), None)?;
        for a in 0..n {
            m.regs.rotate_right(a, a);
        }
        m.last.rotate_left(0, 1);
        m.end();
    }
    while !(m.vtree.is_empty() && m.norm.is_empty()) {
        m.begin(Phase::Drain, None, None)?;
        m.end();
    }

    let output = Image::new(n, bits, m.pixels)?;
    let config = SimConfig {
        n,
        bits,
        h: None,
        use_mem_in: false,
    };
    let trace = m.clock.into_trace();
    let report = CycleReport::from_trace(Architecture::Ifdprt, config, &trace);
    Ok(SimRun { output, report, trace })
}

//! Fastest forward architecture: the whole image in an `N x N` register
//! array, one direction per cycle.

use dprt_core::{Image, RadonArray, Result};

use crate::registers::ShiftRegisterArray;
use crate::report::{Architecture, CycleReport, SimConfig, SimRun};
use crate::trace::{Clock, Phase};
use crate::tree::AdderTreeArray;

struct Fdprt {
    n: usize,
    regs: ShiftRegisterArray,
    tree: AdderTreeArray<usize>,
    clock: Clock,
    values: Vec<u64>,
}

impl Fdprt {
    fn begin(&mut self, phase: Phase, capture: Option<usize>) {
        self.clock.enter(phase, None);
        let input = capture.map(|k| {
            self.clock.capture(k);
            (k, self.regs.columns())
        });
        if let Some((k, sums)) = self.tree.step(input) {
            let n = self.n;
            self.values[k * n..(k + 1) * n].copy_from_slice(&sums);
        }
    }

    fn end(&mut self) {
        self.regs.clock();
        self.clock.tick(None, None);
    }
}

/// Takes `2N + ceil(log2 N) + 1` cycles. The shift after direction `N - 1`
/// returns every row to its original alignment and is combined with the
/// transposition that feeds direction `N`.
pub fn run_fdprt(img: &Image) -> Result<SimRun<RadonArray>> {
    let n = img.n();
    let bits = img.bits();
    let mut m = Fdprt {
        n,
        regs: ShiftRegisterArray::new(n, n, bits),
        tree: AdderTreeArray::new(n, n, bits),
        clock: Clock::new(),
        values: vec![0; (n + 1) * n],
    };

    for t in 0..n {
        m.begin(Phase::ImageLoad, None);
        m.regs.push(img.row(t).to_vec());
        m.end();
    }
    for k in 0..n {
        m.begin(Phase::Projections, Some(k));
        for a in 0..n {
            m.regs.rotate_left(a, a);
        }
        if k == n - 1 {
            m.regs.transpose();
        }
        m.end();
    }
    m.begin(Phase::LastProjection, Some(n));
    m.end();
    while !m.tree.is_empty() {
        m.begin(Phase::Drain, None);
        m.end();
    }

    let output = RadonArray::new(n, bits, m.values)?;
    let config = SimConfig {
        n,
        bits,
        h: None,
        use_mem_in: false,
    };
    let trace = m.clock.into_trace();
    let report = CycleReport::from_trace(Architecture::Fdprt, config, &trace);
    Ok(SimRun { output, report, trace })
}

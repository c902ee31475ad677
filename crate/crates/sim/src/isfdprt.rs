//! Strip-scalable inverse architecture.
//!
//! Strips of `H` projections are backprojected one after the other. Partial
//! rows are accumulated in MEM_OUT; the last strip adds `R(N, i)`, subtracts
//! `SR`, divides by `N` and stores the image row back into MEM_OUT.

use dprt_core::{DprtError, Image, RadonArray, Result, StripPlan};

use crate::mem::{Access, MemModel};
use crate::normalize::Normalizer;
use crate::registers::ShiftRegisterArray;
use crate::report::{Architecture, CycleReport, SimConfig, SimRun};
use crate::trace::{Clock, Phase};
use crate::tree::{AdderTreeArray, DelayLine};

type Tagged = ((usize, usize), Vec<u64>);

struct Isfdprt {
    k: usize,
    mem_in: Option<MemModel>,
    mem_out: MemModel,
    regs: ShiftRegisterArray,
    last: ShiftRegisterArray,
    vtree: AdderTreeArray<(usize, usize)>,
    htree: AdderTreeArray<()>,
    /// Adds `R(N, i)` on the last strip, passes other strips through.
    add_last: DelayLine<Tagged>,
    /// MEM_OUT read-modify-write; only the last strip continues.
    accumulate: DelayLine<Tagged>,
    norm: Normalizer,
    clock: Clock,
}

impl Isfdprt {
    fn begin(
        &mut self,
        phase: Phase,
        strip: Option<usize>,
        capture: Option<(usize, usize)>,
        sr_row: Option<Vec<u64>>,
    ) -> Result<()> {
        self.clock.enter(phase, strip);
        let input = capture.map(|tag| {
            self.clock.capture(tag.1);
            (tag, self.regs.columns())
        });

        let tree_out = self.vtree.step(input).map(|((r, i), mut sums)| {
            if r + 1 == self.k {
                let v = self.last.row(0)[0];
                self.last.rotate_left(0, 1);
                sums.iter_mut().for_each(|s| *s += v);
            }
            ((r, i), sums)
        });
        let acc_in = self.add_last.step(tree_out).map(|((r, i), sums)| {
            let old = self.mem_out.read(Access::Row(i));
            let acc: Vec<u64> = old.into_iter().zip(sums).map(|(a, b)| a + b).collect();
            if r + 1 < self.k {
                self.mem_out.write(Access::Row(i), acc.clone());
            }
            ((r, i), acc)
        });
        let z = self
            .accumulate
            .step(acc_in)
            .filter(|((r, _), _)| r + 1 == self.k)
            .map(|((_, i), z)| (i, z));
        if let Some((i, row)) = self.norm.step(z)? {
            self.mem_out.write(Access::Row(i), row);
        }
        if let Some(((), sums)) = self.htree.step(sr_row.map(|row| ((), vec![row]))) {
            self.norm.set_sr(sums[0]);
        }
        Ok(())
    }

    fn end(&mut self) {
        self.regs.clock();
        self.last.clock();
        self.clock.tick(self.mem_in.as_mut(), Some(&mut self.mem_out));
    }

    fn busy(&self) -> bool {
        !(self.vtree.is_empty()
            && self.add_last.is_empty()
            && self.accumulate.is_empty()
            && self.norm.is_empty())
    }
}

/// Inverse transform with strips of `h` projections. Takes
/// `K (N + H) + ceil(log2 H) + 3 + B + 2 ceil(log2 N)` cycles, plus `N` when
/// the sinogram is first buffered in MEM_IN.
pub fn run_isfdprt(r_arr: &RadonArray, h: usize, use_mem_in: bool) -> Result<SimRun<Image>> {
    r_arr.check_projection_mass()?;
    let n = r_arr.n();
    let bits = r_arr.bits();
    if n < 3 {
        return Err(DprtError::InvalidArgument(
            "the inverse datapath needs an odd prime side".into(),
        ));
    }
    let plan = StripPlan::new(n, h)?;
    let k = plan.strips();
    let norm = Normalizer::new(n, bits);
    let widths = norm.widths();
    let width = widths.b_prime;
    let mut m = Isfdprt {
        k,
        mem_in: use_mem_in.then(|| MemModel::new(n, width)),
        mem_out: MemModel::new(n, widths.bq),
        regs: ShiftRegisterArray::new(h, n, width),
        last: ShiftRegisterArray::new(1, n, width),
        vtree: AdderTreeArray::new(n, h, width),
        htree: AdderTreeArray::new(1, n, width),
        add_last: DelayLine::new(1),
        accumulate: DelayLine::new(1),
        norm,
        clock: Clock::new(),
    };

    if use_mem_in {
        for t in 0..n {
            m.begin(Phase::SinogramLoad, None, None, None)?;
            let row = r_arr.projection(t).to_vec();
            m.mem_in.as_mut().unwrap().write(Access::Row(t), row);
            m.end();
        }
    }
    for r in 0..k {
        for y in 0..h {
            let q = r * h + y;
            let row = match (&mut m.mem_in, q < n) {
                (_, false) => vec![0; n],
                (Some(mem), true) => mem.read(Access::Row(q)),
                (None, true) => r_arr.projection(q).to_vec(),
            };
            let sr_row = (q == 0).then(|| row.clone());
            m.begin(Phase::Backprojection, Some(r), None, sr_row)?;
            m.regs.push(row);
            m.end();
        }
        for i in 0..n {
            m.begin(Phase::Backprojection, Some(r), Some((r, i)), None)?;
            for a in 0..h {
                m.regs.rotate_right(a, (r * h + a) % n);
            }
            if r + 1 == k && i == 0 {
                m.last.push(r_arr.projection(n).to_vec());
            }
            m.end();
        }
    }
    while m.busy() {
        m.begin(Phase::Drain, None, None, None)?;
        m.end();
    }

    let pixels = (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));
    let pixels = pixels.map(|(i, j)| m.mem_out.word(j, i)).collect();
    let output = Image::new(n, bits, pixels)?;
    let config = SimConfig {
        n,
        bits,
        h: Some(h),
        use_mem_in,
    };
    let trace = m.clock.into_trace();
    let report = CycleReport::from_trace(Architecture::Isfdprt, config, &trace);
    Ok(SimRun { output, report, trace })
}

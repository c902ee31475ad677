//! Strip-scalable forward architecture.
//!
//! MEM_IN layout after [`SfdprtMachine::load_shifted_image`]: word `q` of
//! bank `b` holds `f(q, <q - b>)`. A row-mode read at `q` therefore returns
//! row `q` shifted and reversed, and a column-mode read at base `d` returns
//! image column `d` in row order `f(<d + i>, d)`. Every word entering the
//! register array is flipped (`v'[j] = v[<-j>]`); row-mode strips are then
//! pre-shifted by CRS so each register row holds its image row unrotated.

use dprt_core::{ceil_log2, DprtError, Image, RadonArray, Result, StripPlan};

use crate::mem::{Access, MemModel};
use crate::registers::{flip, ShiftRegisterArray};
use crate::report::{Architecture, CycleReport, SimConfig, SimRun};
use crate::trace::{Clock, Phase};
use crate::tree::AdderTreeArray;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoadMode {
    /// Image rows, for directions `0..N`.
    Row,
    /// Image columns, for direction `N`.
    Column,
}

/// One tree output: partial projection `direction` of strip `strip`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialRow {
    pub strip: usize,
    pub direction: usize,
    pub sums: Vec<u64>,
}

/// Adds a partial projection into MEM_OUT row `k` with one read and one
/// write. Row `N` arrives reversed from the column pass and is flipped first.
pub fn add_partial_result(mem_out: &mut MemModel, k: usize, partial: &[u64]) -> Vec<u64> {
    let row = if k == mem_out.n() { flip(partial) } else { partial.to_vec() };
    let acc: Vec<u64> = mem_out
        .read(Access::Row(k))
        .into_iter()
        .zip(row)
        .map(|(a, b)| a + b)
        .collect();
    mem_out.write(Access::Row(k), acc.clone());
    acc
}

#[derive(Debug)]
pub struct SfdprtMachine {
    n: usize,
    bits: u32,
    plan: StripPlan,
    mem_in: MemModel,
    mem_out: MemModel,
    regs: ShiftRegisterArray,
    tree: AdderTreeArray<(usize, usize)>,
    pending: Option<(usize, usize)>,
    loaded: Option<(usize, LoadMode)>,
    image_loaded: bool,
    clock: Clock,
    emitted: Vec<PartialRow>,
}

impl SfdprtMachine {
    pub fn new(n: usize, bits: u32, h: usize) -> Result<Self> {
        let plan = StripPlan::new(n, h)?;
        if bits == 0 || bits > dprt_core::MAX_BITS {
            return Err(DprtError::InvalidArgument(format!("unsupported pixel width {bits}")));
        }
        let out_width = bits + ceil_log2(n as u64);
        Ok(SfdprtMachine {
            n,
            bits,
            plan,
            mem_in: MemModel::new(n, bits),
            mem_out: MemModel::with_depth(n, n + 1, out_width),
            regs: ShiftRegisterArray::new(h, n, bits),
            tree: AdderTreeArray::new(n, h, bits),
            pending: None,
            loaded: None,
            image_loaded: false,
            clock: Clock::new(),
            emitted: Vec::new(),
        })
    }

    pub fn plan(&self) -> &StripPlan {
        &self.plan
    }

    pub fn cycle(&self) -> u64 {
        self.clock.cycle()
    }

    pub fn mem_in(&self) -> &MemModel {
        &self.mem_in
    }

    pub fn mem_out(&self) -> &MemModel {
        &self.mem_out
    }

    pub fn registers(&self) -> &ShiftRegisterArray {
        &self.regs
    }

    /// Every tree output so far, in emission order.
    pub fn emitted(&self) -> &[PartialRow] {
        &self.emitted
    }

    fn begin(&mut self, phase: Phase, strip: Option<usize>) {
        self.clock.enter(phase, strip);
        let input = self.pending.take().map(|tag| {
            self.clock.capture(tag.1);
            (tag, self.regs.columns())
        });
        if let Some(((strip, direction), sums)) = self.tree.step(input) {
            add_partial_result(&mut self.mem_out, direction, &sums);
            self.emitted.push(PartialRow { strip, direction, sums });
        }
    }

    fn end(&mut self) {
        self.regs.clock();
        self.clock.tick(Some(&mut self.mem_in), Some(&mut self.mem_out));
    }

    /// Streams the image into MEM_IN and rewrites it into the shifted
    /// layout, one strip at a time through the register array. Strip 0 is
    /// latched from the input bus while it is being written.
    ///
    /// Takes `N + K (H + 1)` cycles.
    pub fn load_shifted_image(&mut self, img: &Image) -> Result<u64> {
        if img.n() != self.n || img.bits() > self.bits {
            return Err(DprtError::InvalidArgument(format!(
                "machine is sized for {n}x{n} images of {b} bits, got {m}x{m} of {c} bits",
                n = self.n,
                b = self.bits,
                m = img.n(),
                c = img.bits()
            )));
        }
        if self.image_loaded {
            return Err(DprtError::InvalidArgument("image already loaded".into()));
        }
        let (n, h, k) = (self.n, self.plan.height(), self.plan.strips());
        let start = self.cycle();
        for t in 0..n {
            self.begin(Phase::ImageLoad, None);
            let row = img.row(t).to_vec();
            if t < h {
                self.regs.push(row.clone());
            }
            self.mem_in.write(Access::Row(t), row);
            self.end();
        }
        self.begin(Phase::ImageLoad, Some(0));
        for a in 0..h {
            self.regs.rotate_left(a, a);
        }
        self.end();
        for z in 1..k {
            for y in 0..h {
                self.begin(Phase::ImageLoad, Some(z));
                let q = z * h + y;
                let row = if q < n { self.mem_in.read(Access::Row(q)) } else { vec![0; n] };
                let top = self.regs.push(row);
                self.mem_in.write(Access::Row((z - 1) * h + y), flip(&top));
                self.end();
            }
            self.begin(Phase::ImageLoad, Some(z));
            for a in 0..h {
                self.regs.rotate_left(a, z * h + a);
            }
            self.end();
        }
        for y in 0..h {
            self.begin(Phase::ImageLoad, Some(k - 1));
            let top = self.regs.push(vec![0; n]);
            let q = (k - 1) * h + y;
            if q < n {
                self.mem_in.write(Access::Row(q), flip(&top));
            }
            self.end();
        }
        self.image_loaded = true;
        Ok(self.cycle() - start)
    }

    /// Moves strip `r` into the register array: `H` transfer cycles followed
    /// by one parallel pre-shift. Rows past the end of the image are zero.
    ///
    /// In column mode the tree capture for direction `N` is deferred to the
    /// following cycle, which may be the first cycle of the next load.
    pub fn load_strip(&mut self, r: usize, mode: LoadMode) -> Result<u64> {
        if !self.image_loaded {
            return Err(DprtError::InvalidArgument("no image loaded".into()));
        }
        if r >= self.plan.strips() {
            return Err(DprtError::InvalidArgument(format!(
                "strip {r} out of range for {} strips",
                self.plan.strips()
            )));
        }
        let (n, h) = (self.n, self.plan.height());
        let phase = match mode {
            LoadMode::Row => Phase::Projections,
            LoadMode::Column => Phase::LastProjection,
        };
        let start = self.cycle();
        for y in 0..h {
            self.begin(phase, Some(r));
            let q = r * h + y;
            let v = if q < n {
                let access = match mode {
                    LoadMode::Row => Access::Row(q),
                    LoadMode::Column => Access::Column(q),
                };
                flip(&self.mem_in.read(access))
            } else {
                vec![0; n]
            };
            self.regs.push(v);
            self.end();
        }
        self.begin(phase, Some(r));
        for a in 0..h {
            let q = (r * h + a) % n;
            match mode {
                LoadMode::Row => self.regs.rotate_right(a, q),
                LoadMode::Column => self.regs.rotate_left(a, q),
            }
        }
        self.end();
        if mode == LoadMode::Column {
            self.pending = Some((r, n));
        }
        self.loaded = Some((r, mode));
        Ok(self.cycle() - start)
    }

    /// One cycle: captures direction `k` into the trees and shifts every row
    /// `a` left by its absolute row index.
    pub fn step_projection(&mut self, k: usize) -> Result<()> {
        let r = match self.loaded {
            Some((r, LoadMode::Row)) if self.pending.is_none() => r,
            _ => return Err(DprtError::InvalidArgument("no row-mode strip loaded".into())),
        };
        if k >= self.n {
            return Err(DprtError::InvalidArgument(format!("direction {k} out of range")));
        }
        let h = self.plan.height();
        self.pending = Some((r, k));
        self.begin(Phase::Projections, Some(r));
        for a in 0..h {
            self.regs.rotate_left(a, (r * h + a) % self.n);
        }
        self.end();
        Ok(())
    }

    /// Issues a deferred capture, then runs until the trees are empty.
    pub fn flush(&mut self) -> u64 {
        let start = self.cycle();
        if self.pending.is_some() {
            let strip = self.loaded.map(|(r, _)| r);
            self.begin(Phase::LastProjection, strip);
            self.end();
        }
        while !self.tree.is_empty() {
            self.begin(Phase::Drain, None);
            self.end();
        }
        self.cycle() - start
    }

    /// Reads MEM_OUT out as the transform and closes the run.
    pub fn finish(mut self) -> Result<SimRun<RadonArray>> {
        self.flush();
        let n = self.n;
        let values = (0..=n)
            .flat_map(|k| (0..n).map(move |d| (d, k)))
            .map(|(d, k)| self.mem_out.word(d, k))
            .collect();
        let output = RadonArray::new(n, self.bits, values)?;
        let config = SimConfig {
            n,
            bits: self.bits,
            h: Some(self.plan.height()),
            use_mem_in: false,
        };
        let trace = self.clock.into_trace();
        let report = CycleReport::from_trace(Architecture::Sfdprt, config, &trace);
        Ok(SimRun { output, report, trace })
    }
}

/// Full forward transform on the scalable architecture with strips of `h`
/// rows. Takes `K (N + 3H + 3) + N + ceil(log2 H) + 1` cycles.
pub fn run_sfdprt(img: &Image, h: usize) -> Result<SimRun<RadonArray>> {
    let mut m = SfdprtMachine::new(img.n(), img.bits(), h)?;
    let k = m.plan().strips();
    m.load_shifted_image(img)?;
    for r in 0..k {
        m.load_strip(r, LoadMode::Row)?;
        for dir in 0..img.n() {
            m.step_projection(dir)?;
        }
    }
    for r in 0..k {
        m.load_strip(r, LoadMode::Column)?;
    }
    m.finish()
}

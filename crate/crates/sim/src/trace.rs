//! Per-cycle trace of controller state and memory traffic.
//!
//! One line per cycle: `cycle,phase,strip,direction,mem_ops`. Empty fields
//! are written as `-`. Memory operations are `;`-separated, prefixed with the
//! memory (`in` or `out`) and encoded as `r<a>` row read, `w<a>` row write,
//! `c<b>` column read at base `b`, `x<b>` column write at base `b`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::mem::{MemModel, MemOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    ImageLoad,
    SinogramLoad,
    Projections,
    LastProjection,
    Backprojection,
    Drain,
}

impl Phase {
    pub fn name(self) -> &'static str {
        match self {
            Phase::ImageLoad => "image_load",
            Phase::SinogramLoad => "sinogram_load",
            Phase::Projections => "projections",
            Phase::LastProjection => "last_projection",
            Phase::Backprojection => "backprojection",
            Phase::Drain => "drain",
        }
    }

    /// Phases reported separately for every strip.
    pub fn per_strip(self) -> bool {
        matches!(self, Phase::Projections | Phase::Backprojection)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Port {
    In,
    Out,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub cycle: u64,
    pub phase: Phase,
    pub strip: Option<usize>,
    /// Direction captured by the adder trees in this cycle.
    pub direction: Option<usize>,
    pub mem_ops: Vec<(Port, MemOp)>,
}

impl TraceRow {
    pub fn reads(&self, port: Port) -> usize {
        self.mem_ops.iter().filter(|(p, op)| *p == port && !op.write).count()
    }

    pub fn writes(&self, port: Port) -> usize {
        self.mem_ops.iter().filter(|(p, op)| *p == port && op.write).count()
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl fmt::Display for TraceRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{},", self.cycle, self.phase, opt(self.strip), opt(self.direction))?;
        if self.mem_ops.is_empty() {
            return f.write_str("-");
        }
        for (i, (port, op)) in self.mem_ops.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            let p = match port {
                Port::In => "in",
                Port::Out => "out",
            };
            write!(f, "{p}.{op}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    pub rows: Vec<TraceRow>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn lines(&self) -> impl Iterator<Item = String> + '_ {
        self.rows.iter().map(|r| r.to_string())
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Cycle counter and trace recorder shared by the machines.
#[derive(Debug)]
pub(crate) struct Clock {
    cycle: u64,
    phase: Phase,
    strip: Option<usize>,
    direction: Option<usize>,
    trace: Trace,
}

impl Clock {
    pub fn new() -> Self {
        Clock {
            cycle: 0,
            phase: Phase::ImageLoad,
            strip: None,
            direction: None,
            trace: Trace::default(),
        }
    }

    pub fn cycle(&self) -> u64 {
        self.cycle
    }

    pub fn enter(&mut self, phase: Phase, strip: Option<usize>) {
        self.phase = phase;
        self.strip = strip;
    }

    pub fn capture(&mut self, direction: usize) {
        assert!(self.direction.is_none(), "two tree captures in one cycle");
        self.direction = Some(direction);
    }

    /// Closes the current cycle.
    pub fn tick(&mut self, mem_in: Option<&mut MemModel>, mem_out: Option<&mut MemModel>) {
        let mut mem_ops = Vec::new();
        if let Some(m) = mem_in {
            mem_ops.extend(m.clock().into_iter().map(|op| (Port::In, op)));
        }
        if let Some(m) = mem_out {
            mem_ops.extend(m.clock().into_iter().map(|op| (Port::Out, op)));
        }
        self.trace.rows.push(TraceRow {
            cycle: self.cycle,
            phase: self.phase,
            strip: self.strip,
            direction: self.direction.take(),
            mem_ops,
        });
        self.cycle += 1;
    }

    pub fn into_trace(self) -> Trace {
        self.trace
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::trace::{Phase, Trace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Architecture {
    Sfdprt,
    Fdprt,
    Isfdprt,
    Ifdprt,
}

impl Architecture {
    pub const ALL: [Architecture; 4] = [
        Architecture::Sfdprt,
        Architecture::Fdprt,
        Architecture::Isfdprt,
        Architecture::Ifdprt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Architecture::Sfdprt => "sfdprt",
            Architecture::Fdprt => "fdprt",
            Architecture::Isfdprt => "isfdprt",
            Architecture::Ifdprt => "ifdprt",
        }
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, Architecture::Isfdprt | Architecture::Ifdprt)
    }

    pub fn is_scalable(self) -> bool {
        matches!(self, Architecture::Sfdprt | Architecture::Isfdprt)
    }
}

impl fmt::Display for Architecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimConfig {
    pub n: usize,
    pub bits: u32,
    pub h: Option<usize>,
    /// Sinogram buffered in MEM_IN before the scalable inverse starts.
    pub use_mem_in: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseSpan {
    pub phase: Phase,
    pub strip: Option<usize>,
    pub cycles: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub method: Architecture,
    pub config: SimConfig,
    pub total: u64,
    pub phases: Vec<PhaseSpan>,
}

impl CycleReport {
    /// Groups contiguous trace cycles by phase, splitting per-strip phases
    /// at strip boundaries.
    pub fn from_trace(method: Architecture, config: SimConfig, trace: &Trace) -> Self {
        let mut phases: Vec<PhaseSpan> = Vec::new();
        for row in &trace.rows {
            let strip = if row.phase.per_strip() { row.strip } else { None };
            match phases.last_mut() {
                Some(p) if p.phase == row.phase && p.strip == strip => p.cycles += 1,
                _ => phases.push(PhaseSpan {
                    phase: row.phase,
                    strip,
                    cycles: 1,
                }),
            }
        }
        CycleReport {
            method,
            config,
            total: trace.len() as u64,
            phases,
        }
    }

    /// Cycles spent in `phase` over all strips.
    pub fn phase_cycles(&self, phase: Phase) -> u64 {
        self.phases.iter().filter(|p| p.phase == phase).map(|p| p.cycles).sum()
    }
}

/// Result of one simulation.
#[derive(Debug, Clone)]
pub struct SimRun<T> {
    pub output: T,
    pub report: CycleReport,
    pub trace: Trace,
}

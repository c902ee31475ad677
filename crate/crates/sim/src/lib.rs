//! Cycle-accurate behavioral models of the DPRT architectures.
//!
//! Four machines are modeled at register-transfer granularity: the
//! strip-scalable forward and inverse designs and the fastest forward and
//! inverse designs. Each run returns the transform, a per-cycle [`Trace`] and
//! a [`CycleReport`]. Values are computed exactly and checked against the
//! declared register widths as they move through the datapath.
//!
//! All state updates follow one clocking rule: within a cycle every unit
//! reads the register and memory contents from the start of the cycle, and
//! writes take effect at the clock edge.
//!
//! ```
//! use dprt_core::{forward_dprt, Image};
//! use dprt_sim::run_sfdprt;
//!
//! let img = Image::from_fn(7, 8, |i, j| (i * 7 + j) as u64).unwrap();
//! let run = run_sfdprt(&img, 2).unwrap();
//! assert_eq!(run.output, forward_dprt(&img));
//! assert_eq!(run.report.total, 73);
//! ```

pub mod fdprt;
pub mod ifdprt;
pub mod isfdprt;
pub mod mem;
mod normalize;
pub mod registers;
pub mod report;
pub mod sfdprt;
pub mod trace;
pub mod tree;
pub mod widths;

pub use fdprt::run_fdprt;
pub use ifdprt::run_ifdprt;
pub use isfdprt::run_isfdprt;
pub use mem::{Access, MemModel, MemOp};
pub use registers::{flip, ShiftRegisterArray};
pub use report::{Architecture, CycleReport, PhaseSpan, SimConfig, SimRun};
pub use sfdprt::{add_partial_result, run_sfdprt, LoadMode, PartialRow, SfdprtMachine};
pub use trace::{Phase, Port, Trace, TraceRow};
pub use tree::{AdderTreeArray, DelayLine};
pub use widths::InverseDatapathWidths;

//! Structured run reports.

use serde::{Deserialize, Serialize};

use dprt_cost::ResourceReport;
use dprt_sim::{CycleReport, PhaseSpan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub n: usize,
    pub bits: u32,
    pub h: Option<usize>,
    pub use_mem_in: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSection {
    pub total: u64,
    pub closed_form: u64,
    pub phases: Vec<PhaseSpan>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub status: Status,
    pub output_matches_reference: bool,
    pub cycles_match_closed_form: bool,
}

/// Document written by `simulate` and `cost`. Contains no timestamps, so
/// identical runs serialize to identical bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub method: String,
    pub config: ReportConfig,
    pub cycles: CycleSection,
    pub resources: Option<ResourceReport>,
    pub verification: Option<Verification>,
}

impl ReportFile {
    pub fn from_simulation(sim: &CycleReport, closed_form: u64, resources: Option<ResourceReport>, output_ok: bool) -> Self {
        let cycles_ok = sim.total == closed_form;
        ReportFile {
            method: sim.method.name().to_string(),
            config: ReportConfig {
                n: sim.config.n,
                bits: sim.config.bits,
                h: sim.config.h,
                use_mem_in: sim.config.use_mem_in,
            },
            cycles: CycleSection {
                total: sim.total,
                closed_form,
                phases: sim.phases.clone(),
            },
            resources,
            verification: Some(Verification {
                status: if output_ok && cycles_ok { Status::Pass } else { Status::Fail },
                output_matches_reference: output_ok,
                cycles_match_closed_form: cycles_ok,
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.verification.as_ref().is_none_or(|v| v.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Phase table: `phase,strip,cycles`, closed by a `total` row.
    pub fn phases_csv(&self) -> String {
        let mut out = String::from("phase,strip,cycles\n");
        for p in &self.cycles.phases {
            let strip = p.strip.map(|s| s.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{}\n", p.phase, strip, p.cycles));
        }
        out.push_str(&format!("total,,{}\n", self.cycles.total));
        out
    }
}

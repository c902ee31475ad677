use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::CostError;

/// Architectures covered by the cost model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Serial,
    Systolic,
    Sfdprt,
    Fdprt,
    Isfdprt,
    Ifdprt,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Serial,
        Method::Systolic,
        Method::Sfdprt,
        Method::Fdprt,
        Method::Isfdprt,
        Method::Ifdprt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Serial => "serial",
            Method::Systolic => "systolic",
            Method::Sfdprt => "sfdprt",
            Method::Fdprt => "fdprt",
            Method::Isfdprt => "isfdprt",
            Method::Ifdprt => "ifdprt",
        }
    }

    /// Whether the method is parameterised by a strip height.
    pub fn is_scalable(self) -> bool {
        matches!(self, Method::Sfdprt | Method::Isfdprt)
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, Method::Isfdprt | Method::Ifdprt)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = CostError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CostError::UnknownMethod(s.to_string()))
    }
}

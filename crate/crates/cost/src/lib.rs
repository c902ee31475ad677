//! Closed-form cycle and resource models for the DPRT architectures, and the
//! strip-height Pareto front of the scalable design.
//!
//! Serial and systolic architectures are included as analytic baselines only.

mod error;
pub mod export;
pub mod method;
pub mod pareto;
pub mod resources;
pub mod tree;

pub use export::CostRow;

mod cycles;

pub use cycles::cycle_model;
pub use error::CostError;
pub use method::Method;
pub use pareto::{pareto_front, pareto_front_with, reduces_strips, Costing, ParetoPoint};
pub use resources::{resource_model, ResourceReport};
pub use tree::{tree_resources, TreeResources};

pub type Result<T> = std::result::Result<T, CostError>;

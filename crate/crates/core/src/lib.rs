//! Resource and runtime estimation for fault-tolerant quantum computation on
//! the surface code, applied to Grover-based industrial shift scheduling.
//!
//! The pipeline estimates, for a given hardware scenario and problem size:
//! the logical qubit layout, the minimum number of logical cycles, the
//! T-state demand and the multi-round 15-to-1 distillation fleet that serves
//! it, the code distance meeting the error budget, and from those the total
//! physical-qubit count and wall-clock runtime. Full-search runs are
//! extrapolated from single-rotation estimates via error-budget scaling and
//! compared against a 1 GHz classical brute-force baseline to locate
//! quantum/classical crossover points.
//!
//! Entry points:
//! - [`estimator::estimate`] / [`estimator::estimate_scenario`] for one circuit,
//! - [`gas::estimate_full_gas`] / [`gas::crossover_days`] for complete searches,
//! - [`scenarios::builtin_scenarios`] for the hardware catalog.
//!
//! All operations are pure functions of their inputs and safe for concurrent
//! use.

pub mod counts;
pub mod distill;
pub mod error;
pub mod estimator;
pub mod gas;
mod math;
pub mod qec;
pub mod scenarios;

pub use counts::{LogicalCounts, QissInstance};
pub use distill::{
    DistillationRound, DistillationUnit, FactoryConfig, FactoryDesign, UnitCountRule,
};
pub use error::{Error, Result};
pub use estimator::{ErrorBudget, EstimateResult, EstimatorConfig, SynthesisConstants};
pub use gas::GasRun;
pub use qec::{CodeDistance, PhysicalParams, QecParams};
pub use scenarios::{Modality, RoadmapEntry, Scenario};

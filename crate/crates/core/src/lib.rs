//! Differentially private causal graph discovery.
//!
//! Two discovery pipelines share the privacy machinery in this crate:
//!
//! * constraint-based skeleton discovery: PC-style conditional-independence
//!   pruning where every test statistic is perturbed with Laplace noise and
//!   per-order budgets come from an error-probability optimizer
//!   ([`budget::opt_budgets`]);
//! * score-based structure learning: NOTEARS-style continuous optimization
//!   with per-sample gradient clipping, analytically calibrated Gaussian
//!   noise, and a multiplicative per-iteration budget schedule.
//!
//! Composition bookkeeping lives in [`accountant::LeakageLedger`]; synthetic
//! data generation, metrics, and the experiment harness round out the crate.

pub mod accountant;
pub mod budget;
pub mod data;
pub mod datasets;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod kendall;
pub mod mechanisms;
pub mod metrics;
pub mod report;
pub mod score;
pub mod skeleton;

pub use data::DataMatrix;
pub use error::{Error, Result};
pub use graph::{EdgeList, SeparationSets, UndirectedGraph};

//! Library side of the verification harness: run configuration, report
//! schema, the per-module suites and the convergence studies.

pub mod config;
pub mod converge;
pub mod manifest;
pub mod report;
pub mod suites;

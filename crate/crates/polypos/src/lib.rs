//! File formats, report rendering, verification suites and the command-line
//! interface built on `polypos-core`.

pub mod cli;
pub mod emit;
pub mod formats;
pub mod parallel;
pub mod suites;

pub use emit::{emit, Format};
pub use suites::{run_suite, run_suite_with, SuiteOptions, SuiteReport, Verdict};

//! The library side of the `ncentered` command line: matrix files, run
//! reports and one function per subcommand.

mod commands;
mod matrix_file;
mod report;

pub use commands::{cmd_classify, cmd_counterexample, cmd_mp, cmd_polar, cmd_verify_theorems, DEFAULT_MAX_N};
pub use matrix_file::MatrixFile;
pub use report::{ReportCheck, RunReport};

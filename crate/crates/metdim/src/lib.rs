//! File formats, run reports, the verification sweep and the `metdim`
//! command line, on top of `metdim-core`.

pub mod cli;
pub mod formats;
pub mod report;
pub mod sweep;

pub use formats::{parse_graph, read_graph, write_edge_list, write_json, FormatError};
pub use report::{emit_report, RunReport, Status, Task};
pub use sweep::{run_sweep, SweepConfig, SweepOutcome};

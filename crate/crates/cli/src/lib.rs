//! Ideal files, command implementations and JSON reports behind the `borel` binary.

pub mod commands;
pub mod input;

pub use commands::{Outcome, Status};
pub use input::{parse_ideal, IdealFile};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Exit status for a failed command: 2 when a theorem hypothesis fails, 1 otherwise.
pub fn exit_code(e: &borel_core::Error) -> i32 {
    match e {
        borel_core::Error::NotFilterRegular { .. } => 2,
        _ => 1,
    }
}

//! The `psifoc` command line: argument grammar, dispatch, exit codes.

mod command;
mod run;

pub use command::{parse_command, Action, Command, FamilySpec, MatrixKind, ParseError};
pub use run::{
    build_matrix, load_custom_family, resolve_family, run_argv, run_command, verify_fermat_family, CliError,
    Outcome, RunConfig, DEFAULT_TRUNC, TRUNC_VAR,
};

//! File formats, run reports and command implementations behind the
//! `qpdom` binary.
//!
//! Exit codes: 0 ok, 1 property violation, 2 parse error, 3 structure
//! error (numbering or diagram), 4 resource cap, 5 domain assumption.

pub mod bench;
pub mod commands;
pub mod formats;
pub mod fuzz;
pub mod report;

pub use report::RunReport;

/// Runs the closure on a thread with a large stack.  The evaluator
/// recurses once per vertex on the widest paths.
pub fn with_big_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(STACK_BYTES)
            .spawn_scoped(s, f)
            .expect("spawn worker")
            .join()
            .unwrap_or_else(|e| std::panic::resume_unwind(e))
    })
}

pub const STACK_BYTES: usize = 256 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitKind {
    Violation = 1,
    Parse = 2,
    Structure = 3,
    Resource = 4,
    Domain = 5,
}

/// A failed command.  A violation may carry the report that found it.
#[derive(Debug, thiserror::Error)]
#[error("{msg}")]
pub struct CliError {
    pub kind: ExitKind,
    pub msg: String,
    pub report: Option<Box<RunReport>>,
}

impl CliError {
    pub fn new(kind: ExitKind, msg: impl Into<String>) -> Self {
        CliError { kind, msg: msg.into(), report: None }
    }

    pub fn code(&self) -> i32 {
        self.kind as i32
    }
}

impl From<formats::ParseError> for CliError {
    fn from(e: formats::ParseError) -> Self {
        CliError::new(ExitKind::Parse, e.to_string())
    }
}

impl From<formats::CnfError> for CliError {
    fn from(e: formats::CnfError) -> Self {
        let kind = match e {
            formats::CnfError::Parse(_) => ExitKind::Parse,
            formats::CnfError::RepeatedVariable { .. } => ExitKind::Domain,
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<qpdom_core::graph::GraphError> for CliError {
    fn from(e: qpdom_core::graph::GraphError) -> Self {
        use qpdom_core::graph::GraphError::*;
        let kind = match e {
            NumberingViolated { .. } | ModelMismatch(..) | DuplicatePosition(_) | PositionOutOfRange { .. } => {
                ExitKind::Structure
            }
            _ => ExitKind::Parse,
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<qpdom_core::dp::DpError> for CliError {
    fn from(e: qpdom_core::dp::DpError) -> Self {
        use qpdom_core::dp::DpError;
        match e {
            DpError::Graph(g) => g.into(),
            DpError::MemoCap { .. } => CliError::new(ExitKind::Resource, e.to_string()),
            DpError::EmptyGraph | DpError::Key(_) => CliError::new(ExitKind::Parse, e.to_string()),
            DpError::Internal(_) => CliError::new(ExitKind::Violation, e.to_string()),
        }
    }
}

impl From<qpdom_core::oracle::OracleError> for CliError {
    fn from(e: qpdom_core::oracle::OracleError) -> Self {
        use qpdom_core::oracle::OracleError;
        let kind = match e {
            OracleError::CapExceeded { .. } => ExitKind::Resource,
            _ => ExitKind::Parse,
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<qpdom_core::reduction::ReductionError> for CliError {
    fn from(e: qpdom_core::reduction::ReductionError) -> Self {
        use qpdom_core::reduction::ReductionError as R;
        match e {
            R::RepeatedVariable { .. } => CliError::new(ExitKind::Domain, e.to_string()),
            R::VariableOutOfRange { .. } => CliError::new(ExitKind::Parse, e.to_string()),
            R::TooManyVariables { .. } => CliError::new(ExitKind::Resource, e.to_string()),
            R::Graph(g) => g.into(),
            R::Oracle(o) => o.into(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(ExitKind::Parse, e.to_string())
    }
}

use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Each variant corresponds to one named failure mode; [`Error::name`] gives
/// the stable identifier the command-line tool prints.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order relation has a directed cycle through element {0}")]
    Cycle(usize),
    #[error("index {index} out of range for {len} elements")]
    Index { index: usize, len: usize },
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("size {size} exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("poset is outside the required class: {0}")]
    Class(String),
    #[error("poset height {0} is below the required minimum of 4")]
    Height(usize),
    #[error("bipartite graph does not match its generating poset: {0}")]
    Shape(String),
    #[error("ground element {0} lies in no member of the family")]
    Coverage(usize),
    #[error("poset is not a Helly poset")]
    NotHelly,
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("clause on line {line} has {found} literals, expected 3")]
    Arity { line: usize, found: usize },
    #[error("formula is not an EQUAL-3-SAT instance: {0}")]
    Validation(String),
    #[error("search exceeded its node budget of {0}")]
    BudgetExceeded(u64),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable identifier used in command-line diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Cycle(_) => "CycleError",
            Error::Index { .. } => "IndexError",
            Error::Param(_) => "ParamError",
            Error::SizeCap { .. } => "SizeCapError",
            Error::NotBipartite => "NotBipartiteError",
            Error::IsolatedVertex(_) => "IsolatedVertexError",
            Error::Class(_) => "ClassError",
            Error::Height(_) => "HeightError",
            Error::Shape(_) => "ShapeError",
            Error::Coverage(_) => "CoverageError",
            Error::NotHelly => "NotHellyError",
            Error::Format { .. } => "FormatError",
            Error::Arity { .. } => "ArityError",
            Error::Validation(_) => "ValidationError",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::UnknownSuite(_) => "UnknownSuite",
            Error::Inconsistent(_) => "InconsistencyError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_size(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeCap { size, cap })
    } else {
        Ok(())
    }
}

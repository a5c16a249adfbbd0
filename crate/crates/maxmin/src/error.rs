use thiserror::Error;

/// Errors shared across the crate.
///
/// Arithmetic never fails once operands are validated, so almost everything
/// here is a construction or precondition problem: mixing scalars from
/// different chains, feeding a vector of the wrong length to a matrix, or
/// asking for an object (witness, eigenspace description) that the verdict at
/// hand does not provide.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two scalars (or containers of scalars) live over different chains.
    #[error("context mismatch: one operand has top {left}, the other {right}")]
    ContextMismatch { left: u32, right: u32 },

    /// A tick value lies outside `0..=top`.
    #[error("tick {value} is out of range for chain top {top}")]
    TickOutOfRange { value: u64, top: u32 },

    /// `top` must be at least 1 so the chain has distinct endpoints.
    #[error("chain top must be positive")]
    ZeroTop,

    /// Vector/matrix sizes do not line up.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A matrix literal was not square.
    #[error("matrix is not square: {rows} rows but row {row} has {cols} entries")]
    NotSquare { rows: usize, row: usize, cols: usize },

    /// Dimension zero objects are not part of the model.
    #[error("empty vectors and matrices are not supported")]
    Empty,

    /// An interval box had a coordinate with lower > upper.
    #[error("interval bounds inverted at coordinate {index}: lower {lower} > upper {upper}")]
    InvertedBounds { index: usize, lower: u32, upper: u32 },

    /// A vector argument was required to lie inside the box and does not.
    #[error("vector leaves the box at coordinate {index}")]
    OutsideBox { index: usize },

    /// A scaling factor was required to lie inside the admissible range.
    #[error("scaling level {value} is outside the admissible range [{low}, {high}]")]
    LevelOutOfRange { value: u32, low: u32, high: u32 },

    /// The operand is not a fixed point although one was required.
    #[error("vector is not an eigenvector of the matrix")]
    NotEigenvector,

    /// Asked for per-cycle eigenspace structure of a matrix that is not
    /// simple over the box.
    #[error("eigenspace structure is only available for a Simple verdict")]
    NotConforming,

    /// Asked for a second-solution witness although the verdict was Simple
    /// or the preconditions failed.
    #[error("no witness: the verdict does not provide one")]
    WitnessUnavailable,

    /// Exhaustive enumeration refused to run because the instance exceeds
    /// the configured limits.
    #[error("instance too large for exhaustive check: {what} is {found}, limit {limit}")]
    OracleLimit {
        what: &'static str,
        found: usize,
        limit: usize,
    },

    /// A required input (right-hand side, start vector, ...) was absent.
    #[error("missing input: {name}")]
    MissingInput { name: &'static str },

    /// Instance file could not be parsed; the message carries the toml
    /// diagnostic (with line/column) or a field-level explanation.
    #[error("invalid instance: {0}")]
    Instance(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

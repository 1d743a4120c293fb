use thiserror::Error;

/// Reasons a graph file can be rejected. Each carries enough context to
/// point the user at the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex count")]
    MissingVertexCount,
    #[error("malformed line: {0:?}")]
    Malformed(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={vertex_count}")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("edge e{0} does not exist in this graph")]
    InvalidEdge(usize),

    #[error("variable index {index} out of range for {vars} variables")]
    InvalidVariable { index: usize, vars: usize },

    #[error("ambient length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("monomial division is not exact")]
    InexactDivision,

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("invalid monomial order: {0}")]
    OrderSpec(String),

    #[error("order is not y-compatible for variable e{0}")]
    NotYCompatible(usize),

    #[error("capability exceeded: {0}")]
    Capability(String),

    #[error("no non-bridge nondegenerate edge exists (the toric ideal is zero)")]
    NoDeletionEdge,

    #[error("height mismatch: formula gives {formula}, degeneration gives {degeneration}")]
    HeightMismatch { formula: usize, degeneration: usize },

    #[error("chromatic bound violated: chi = {chi} exceeds |cover| + 3 = {bound}")]
    BoundViolation { chi: usize, bound: usize },

    /// A structural statement about primitive walks failed. Reaching this is a
    /// bug in the engine or a counterexample, never a user error.
    #[error("structural violation: {0}")]
    Structural(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors surfaced by the library. Variants that describe invariant breaches
/// (`CeilingRelationViolated`, `LemmaViolated`, ...) are never valid outputs;
/// they signal an implementation bug or corrupted input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed PD code: {0}")]
    MalformedPd(String),

    #[error("edge {edge} appears {count} times, expected exactly 2")]
    EdgeCountViolation { edge: usize, count: usize },

    #[error("edge orientations are globally inconsistent (edge {0})")]
    InconsistentOrientation(usize),

    #[error("diagram has {0} components; this operation requires a knot")]
    MultiComponent(usize),

    #[error("operands live at different cube vertices")]
    VertexMismatch,

    #[error("diagram has {n} crossings, exceeding the cap of {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },

    #[error("elimination produced a non-monomial entry; upstream data is not bigraded")]
    NonMonomialEntry,

    #[error("differential does not square to zero: {0}")]
    BrokenDifferential(String),

    #[error("edge-variable multiple of a representative is not a cycle")]
    NotACycleAfterMultiplication,

    #[error("ceiling relation violated: ceil(u_X/2) != u_t (u_X = {u_x}, u_t = {u_t})")]
    CeilingRelationViolated { u_x: usize, u_t: usize },

    #[error("Lee free part malformed: {0}")]
    FreePartMalformed(String),

    #[error("u_X = {u_x} exceeds the recorded unknotting number {u}")]
    BoundViolation { u_x: usize, u: usize },

    #[error("single crossing change moved u_X from {before} to {after}")]
    LemmaViolated { before: usize, after: usize },

    #[error("chain identity failed: {0}")]
    IdentityFailed(String),

    #[error("crossing {0} does not have the sign this construction requires")]
    WrongCrossingSign(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

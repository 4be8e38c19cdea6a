use thiserror::Error;

/// Errors produced by the algebra, enveloping-algebra and representation code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("the zero element has no symbol")]
    ZeroElement,
    #[error("top exterior power of the odd part is not a trivial module for the even part")]
    TopNotTrivial,
    #[error("element does not centralize the even subalgebra: {0}")]
    NotG0Central(String),
    #[error("element is not of weight zero")]
    NotZeroWeight,
    #[error("algebra `{0}` carries no root datum")]
    NoRootDatum(String),
    #[error("result exceeds the slice depth {0}")]
    DepthExceeded(usize),
    #[error("action mismatch: {0}")]
    ActionMismatch(String),
    #[error("anticentre basis has an element of mixed or unexpected parity: {0}")]
    MixedParity(String),
    #[error("element is not in the computed ghost centre span")]
    NotInGhostCentre,
    #[error("invalid root datum: {0}")]
    RootDatum(String),
}

pub type Result<T> = std::result::Result<T, Error>;

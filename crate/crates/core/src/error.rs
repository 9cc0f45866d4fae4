//! Error type shared across the crate.

/// Everything that can go wrong while parsing input, enumerating a
/// realization, or assembling a complex. Positions are byte offsets into the
/// offending string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty token at byte {position}")]
    EmptyToken { position: usize },

    #[error("malformed token `{token}` at byte {position}")]
    MalformedToken { token: String, position: usize },

    #[error("malformed exponent in `{token}` at byte {position}: {reason}")]
    MalformedExponent {
        token: String,
        position: usize,
        reason: String,
    },

    #[error("unknown generator `{name}` at byte {position}")]
    UnknownGenerator { name: String, position: usize },

    #[error("invalid generator name `{name}`")]
    InvalidGeneratorName { name: String },

    #[error("duplicate generator name `{name}`")]
    DuplicateGenerator { name: String },

    #[error("relator {index}: {source}")]
    RelatorParse {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("relator {index} reduces to the empty word")]
    EmptyRelator { index: usize },

    #[error("relator {index} uses generator index {generator}, but only {count} generators are declared")]
    GeneratorIndexOutOfRange {
        index: usize,
        generator: usize,
        count: usize,
    },

    #[error("image of generator {index} is not a permutation of 0..{degree}")]
    NotAPermutation { index: usize, degree: usize },

    #[error("realization supplies {supplied} generator images, presentation declares {declared}")]
    GeneratorCountMismatch { supplied: usize, declared: usize },

    #[error("realization is missing an image for generator `{name}`")]
    MissingGeneratorImage { name: String },

    #[error("realization supplies an image for undeclared generator `{name}`")]
    UnexpectedGeneratorImage { name: String },

    #[error("unsupported realization kind `{kind}`")]
    UnsupportedRealizationKind { kind: String },

    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("relator {index} does not evaluate to the identity in the realization")]
    RelatorNotSatisfied { index: usize },

    #[error("active relator index {index} is out of range ({count} relators)")]
    ActiveRelatorOutOfRange { index: usize, count: usize },

    #[error("modulus {p} divides a denominator of the matrix")]
    BadPrime { p: u64 },

    #[error("cannot parse `{text}` as a rational number")]
    InvalidRational { text: String },

    #[error("edge {edge} endpoint {vertex} is out of range ({vertices} vertices)")]
    EdgeEndpointOutOfRange {
        edge: usize,
        vertex: usize,
        vertices: usize,
    },

    #[error("cochain has {supplied} values, graph has {expected} vertices")]
    CochainLengthMismatch { supplied: usize, expected: usize },
}

impl Error {
    /// Stable machine-readable tag for each variant, used by the CLI when it
    /// emits structured error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyToken { .. } => "empty-token",
            Error::MalformedToken { .. } => "malformed-token",
            Error::MalformedExponent { .. } => "malformed-exponent",
            Error::UnknownGenerator { .. } => "unknown-generator",
            Error::InvalidGeneratorName { .. } => "invalid-generator-name",
            Error::DuplicateGenerator { .. } => "duplicate-generator",
            Error::RelatorParse { source, .. } => source.kind(),
            Error::EmptyRelator { .. } => "empty-relator",
            Error::GeneratorIndexOutOfRange { .. } => "generator-index-out-of-range",
            Error::NotAPermutation { .. } => "not-a-permutation",
            Error::GeneratorCountMismatch { .. } => "generator-count-mismatch",
            Error::MissingGeneratorImage { .. } => "missing-generator-image",
            Error::UnexpectedGeneratorImage { .. } => "unexpected-generator-image",
            Error::UnsupportedRealizationKind { .. } => "unsupported-realization-kind",
            Error::OrderCapExceeded { .. } => "order-cap-exceeded",
            Error::RelatorNotSatisfied { .. } => "relator-not-satisfied",
            Error::ActiveRelatorOutOfRange { .. } => "active-relator-out-of-range",
            Error::BadPrime { .. } => "bad-prime",
            Error::InvalidRational { .. } => "invalid-rational",
            Error::EdgeEndpointOutOfRange { .. } => "edge-endpoint-out-of-range",
            Error::CochainLengthMismatch { .. } => "cochain-length-mismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised while building classes, digraphs, cycles and verdicts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown class `{0}`")]
    UnknownClass(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("{size} words exceed the enumeration cap of {cap}")]
    CapExceeded { size: u128, cap: u64 },

    #[error("closed count {formula} disagrees with enumeration {enumerated} for {class}")]
    CountMismatch {
        class: String,
        formula: u128,
        enumerated: u128,
    },

    #[error("letter {letter} is outside an alphabet of size {k}")]
    LetterOutOfRange { letter: usize, k: usize },

    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(char),

    #[error("expected a word of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("the cyclic sequence is empty")]
    EmptySequence,

    #[error("the transition digraph needs words of length at least 2 (got n = {0})")]
    WordTooShort(usize),

    #[error("the digraph is not Eulerian")]
    NotEulerian,

    #[error("malformed circuit: {0}")]
    MalformedCircuit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

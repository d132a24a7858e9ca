use std::fmt;

use thiserror::Error;

/// Why a transition digraph has no Euler tour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EulerFailure {
    Empty,
    Unbalanced,
    Disconnected,
}

impl fmt::Display for EulerFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EulerFailure::Empty => "digraph has no edges",
            EulerFailure::Unbalanced => "digraph is not balanced",
            EulerFailure::Disconnected => "digraph is not weakly connected",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("overlap length s={s} out of range for word length n={n}")]
    OverlapOutOfRange { s: usize, n: usize },

    #[error("word {word} has length {found}, expected {expected}")]
    MixedLengths {
        word: String,
        found: usize,
        expected: usize,
    },

    #[error("duplicate word {0}")]
    DuplicateWord(String),

    #[error("set of {count} words exceeds the materialization cap of {cap}")]
    CapExceeded { count: String, cap: usize },

    #[error("word set is empty")]
    EmptySet,

    #[error("no Euler tour: {0}")]
    NotEulerian(EulerFailure),

    #[error("singleton word {0} does not overlap itself")]
    SingletonMismatch(String),

    #[error("cycle breaks the overlap condition at index {0}")]
    UnverifiedCycle(usize),

    #[error("cannot parse word {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Failure while reading a Seifert expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// The text does not match `[g, n; (a1,b1), ..., (aM,bM)]`.
    Syntax {
        position: usize,
        expected: &'static str,
    },
    /// Well-formed text describing an invalid manifold.
    Semantic(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { position, expected } => {
                write!(
                    f,
                    "syntax error at position {position}: expected {expected}"
                )
            }
            ParseError::Semantic(msg) => write!(f, "invalid Seifert data: {msg}"),
        }
    }
}

impl core::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Parse(ParseError),
    /// The orbifold Chern number vanishes, so the moduli-space description
    /// (Betti number 2g, torsion order |c1 * prod alpha|^N) does not apply.
    ZeroChernNumber,
    /// The level k must be a positive integer.
    ZeroLevel,
    /// An argument outside the operation's domain.
    Domain(String),
    /// Supplied bundle-class phases do not cover the torsion group exactly once.
    PhaseMismatch(String),
    /// Two independent computations disagreed. Indicates a bug.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(e) => e.fmt(f),
            Error::ZeroChernNumber => f.write_str(
                "orbifold Chern number is zero: theorem hypothesis violated \
                 (Betti number and torsion order not determined)",
            ),
            Error::ZeroLevel => f.write_str("level k must be at least 1"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::PhaseMismatch(msg) => write!(f, "phase assignment mismatch: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

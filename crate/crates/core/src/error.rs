use core::fmt;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus is not a prime number.
    InvalidModulus(u64),
    /// Two values built over different prime fields were combined.
    ModulusMismatch { left: u64, right: u64 },
    /// An enumeration was requested beyond the configured guardrail.
    BoundExceeded { p: u64, bound: u64 },
    /// The given vectors do not span a 2-dimensional subspace.
    DegenerateSpan,
    /// The matrix is singular, so it is not an isomorphism of torsion groups.
    NotAnIsomorphism,
    /// The line is not the graph of an isomorphism (it meets one of the
    /// coordinate lines non-trivially).
    NotAGraph,
    /// A witness datum violates the preconditions of a construction.
    InvalidWitness(&'static str),
    /// The requested quantity is not integral for the given data.
    Inconsistent(&'static str),
    /// The intersection pairing is only documented against the reference
    /// classes.
    UnsupportedPairing,
    /// The operation is not defined for these parameters.
    OutOfScope(&'static str),
    /// A recipe fails its own structural invariants.
    InvalidRecipe(&'static str),
    /// Invalid data for a quadratic endomorphism.
    InvalidEndo(&'static str),
    /// Invalid data for a curve class on the product surface.
    InvalidClass(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidModulus(p) => write!(f, "{p} is not prime"),
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::BoundExceeded { p, bound } => {
                write!(f, "p = {p} exceeds the supported bound {bound}")
            }
            Error::DegenerateSpan => write!(f, "vectors do not span a line"),
            Error::NotAnIsomorphism => write!(f, "matrix is singular"),
            Error::NotAGraph => write!(f, "line is not the graph of an isomorphism"),
            Error::InvalidWitness(msg) => write!(f, "invalid witness: {msg}"),
            Error::Inconsistent(msg) => write!(f, "inconsistent data: {msg}"),
            Error::UnsupportedPairing => write!(f, "intersection pairing not documented"),
            Error::OutOfScope(msg) => write!(f, "out of scope: {msg}"),
            Error::InvalidRecipe(msg) => write!(f, "invalid recipe: {msg}"),
            Error::InvalidEndo(msg) => write!(f, "invalid endomorphism: {msg}"),
            Error::InvalidClass(msg) => write!(f, "invalid curve class: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

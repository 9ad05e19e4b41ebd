use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    NotSquare {
        rows: usize,
        cols: usize,
    },
    NonInteger,
    Singular,
    CyclicQuiver,
    InvalidSize(String),
    InvalidQuiver(String),
    InvalidAlgebra(String),
    /// `(a*b)*c != a*(b*c)` for the named basis indices.
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
    },
    NotNilpotent,
    AlgebraMismatch,
    InvalidModule(String),
    ResolutionTooLong {
        max_len: usize,
    },
    InfiniteGlobalDimension,
    NotHereditary,
    /// A nonzero Hom in a degree where it must vanish.
    NonvanishingHom {
        i: usize,
        j: usize,
        r: i32,
        dim: usize,
    },
    SummandCount {
        expected: usize,
        found: usize,
    },
    NotIndecomposable(String),
    BimoduleAxiom(String),
    HypothesisFailure(String),
    StepLimit {
        max_steps: usize,
    },
    ResourceBound(String),
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { op, left, right } => write!(
                f,
                "dimension mismatch in {}: {}x{} vs {}x{}",
                op, left.0, left.1, right.0, right.1
            ),
            Error::NotSquare { rows, cols } => write!(f, "matrix is not square ({}x{})", rows, cols),
            Error::NonInteger => write!(f, "matrix has non-integer entries"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::CyclicQuiver => write!(f, "quiver has an oriented cycle"),
            Error::InvalidSize(s) => write!(f, "invalid size: {}", s),
            Error::InvalidQuiver(s) => write!(f, "invalid quiver: {}", s),
            Error::InvalidAlgebra(s) => write!(f, "invalid algebra: {}", s),
            Error::NotAssociative { a, b, c } => {
                write!(f, "associativity fails on basis triple ({}, {}, {})", a, b, c)
            }
            Error::NotNilpotent => write!(f, "radical candidate is not nilpotent"),
            Error::AlgebraMismatch => write!(f, "objects live over different algebras"),
            Error::InvalidModule(s) => write!(f, "invalid module: {}", s),
            Error::ResolutionTooLong { max_len } => {
                write!(f, "projective resolution longer than {} steps", max_len)
            }
            Error::InfiniteGlobalDimension => write!(f, "algebra has infinite global dimension"),
            Error::NotHereditary => write!(f, "algebra is not hereditary"),
            Error::NonvanishingHom { i, j, r, dim } => write!(
                f,
                "Hom(T_{}, T_{}[{}]) has dimension {} but must vanish",
                j, i, r, dim
            ),
            Error::SummandCount { expected, found } => {
                write!(f, "expected {} summands, found {}", expected, found)
            }
            Error::NotIndecomposable(s) => write!(f, "not indecomposable: {}", s),
            Error::BimoduleAxiom(s) => write!(f, "bimodule axiom violated: {}", s),
            Error::HypothesisFailure(s) => write!(f, "hypothesis failure: {}", s),
            Error::StepLimit { max_steps } => write!(f, "exceeded {} knitting steps", max_steps),
            Error::ResourceBound(s) => write!(f, "resource bound exceeded: {}", s),
            Error::Precondition(s) => write!(f, "precondition violated: {}", s),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;

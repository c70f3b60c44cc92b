use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field size {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size {0} exceeds the table limit 65536")]
    TooLarge(u64),
    #[error("division by zero in GF(q)")]
    DivisionByZero,
    #[error("discrete logarithm of zero")]
    DlogOfZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("class group has torsion (Smith invariants of phi are not all 1)")]
    TorsionClassGroup,
    #[error("phi does not have full column rank")]
    RankDeficient,
    #[error("beta * phi is not zero or beta is not surjective onto Z^d")]
    ExactnessFailure,
    #[error("graded pieces are unbounded: the fan of phi is not complete")]
    Unbounded,
    #[error("Q is not a square diagonal matrix")]
    NotDiagonal,
    #[error("monomial order does not rank every eliminated variable above the kept ones")]
    OrderMismatch,
    #[error("the lattice contains a nonzero nonnegative vector; the complete-intersection test does not apply")]
    PreconditionUnverified,
    #[error("integer value {0} does not fit an exponent")]
    Overflow(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{what}: {size} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("Groebner basis grew beyond {0} polynomials")]
    ResourceGuard(usize),
    #[error("matrix of size {rows}x{cols} is beyond the dominating-test size guard")]
    SizeGuard { rows: usize, cols: usize },
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TorsionClassGroup | Error::Unbounded | Error::PreconditionUnverified => 3,
            Error::GuardExceeded { .. } | Error::ResourceGuard(_) | Error::SizeGuard { .. } => 4,
            _ => 2,
        }
    }

    pub(crate) fn guard(what: &'static str, size: u128, limit: u128) -> Self {
        Error::GuardExceeded { what, size, limit }
    }
}

use thiserror::Error;

/// Crate-wide error type. Variants are kept distinct so callers can route
/// on the failure kind (e.g. bad reduction vs. singular model, non-simple
/// root vs. zero polynomial).
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial is zero modulo {0}")]
    ZeroModulo(u64),
    #[error("residue {value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },
    #[error("non-simple root: derivative vanishes at {root} modulo {l}")]
    NonSimpleRoot { root: u64, l: u64 },
    #[error("singular curve over F_{p}")]
    SingularCurve { p: u64 },
    #[error("singular specialization over F_{p} (repeated root)")]
    SingularSpecialization { p: u64 },
    #[error("bad reduction at {p}")]
    BadReduction { p: u64 },
    #[error("point does not satisfy the curve equation")]
    PointNotOnCurve,
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("normalization failed: {0}")]
    Normalization(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("missing eigenvalue a_{p} for class {label} of level {level}")]
    MissingEigenvalue { level: u64, label: String, p: u64 },
    #[error("prime {l} is not asserted coprime to the coefficient-ring index")]
    IndexNotAsserted { l: u64 },
    #[error("inertia degree {0} > 1 where a degree-one prime is required")]
    InertiaDegreeTooLarge(usize),
    #[error("ramified prime has no canonical lifted root")]
    RamifiedPrime,
    #[error("denominator {den} not invertible modulo {modulus}")]
    DenominatorNotInvertible { den: String, modulus: u64 },
    #[error("insufficient eigenvalue data: {0}")]
    InsufficientData(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("gcd too large to factor over u64: {0}")]
    GcdTooLarge(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

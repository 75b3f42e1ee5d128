use thiserror::Error;

/// Every failure carries a stable machine-readable code, printed in brackets
/// at the start of the message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("[NON_UNIT_CONSTANT_TERM] series constant term must be 1, got {0}")]
    NonUnitConstantTerm(String),
    #[error("[NONZERO_CONSTANT_TERM] series constant term must be 0, got {0}")]
    NonZeroConstantTerm(String),
    #[error("[ENUMERATION_BUDGET] {what} needs {needed} items, budget is {budget}")]
    EnumerationBudget {
        what: String,
        needed: u128,
        budget: u128,
    },
    #[error("[MODEL_INVARIANT_VIOLATION] {0}")]
    ModelInvariantViolation(String),
    #[error("[FIELD_INVARIANT_VIOLATION] {0}")]
    FieldInvariantViolation(String),
    #[error("[COUNT_INCONSISTENCY] {0}")]
    CountInconsistency(String),
    #[error("[ZETA_FE_VIOLATION] {0}")]
    ZetaFeViolation(String),
    #[error("[NOT_A_DOUBLE_COVER_PAIR] {0}")]
    NotADoubleCoverPair(String),
    #[error("[DEGREE_MISMATCH] expected degree {expected}, found {found}")]
    DegreeMismatch { expected: i64, found: i64 },
    #[error("[Q_MISMATCH] inputs live over different fields (q = {0} vs q = {1})")]
    QMismatch(u64, u64),
    #[error("[L_FE_VIOLATION] {0}")]
    LFunctionFeViolation(String),
    #[error("[L_INVALID] {0}")]
    InvalidLFunction(String),
    #[error("[SINGULAR_AT_ONE] L(T = 1) = 0, so 1 - Frobenius is not invertible")]
    SingularAtOne,
    #[error(
        "[DENSITY_DEGREE_MISMATCH] density has {found} coefficients, context requires {expected}"
    )]
    DensityDegreeMismatch { expected: i64, found: i64 },
    #[error("[DENSITY_SYMMETRY_VIOLATION] {0}")]
    DensitySymmetryViolation(String),
    #[error("[HALVING_HYPOTHESIS_VIOLATION] {0}")]
    HalvingHypothesisViolation(String),
    #[error("[FAMILY_INCONSISTENCY] {0}")]
    FamilyInconsistency(String),
    #[error("[INVALID_CONTEXT] {0}")]
    InvalidContext(String),
    #[error("[INVALID_PERMUTATION] {0}")]
    InvalidPermutation(String),
    #[error("[INVALID_INPUT] {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonUnitConstantTerm(_) => "NON_UNIT_CONSTANT_TERM",
            Error::NonZeroConstantTerm(_) => "NONZERO_CONSTANT_TERM",
            Error::EnumerationBudget { .. } => "ENUMERATION_BUDGET",
            Error::ModelInvariantViolation(_) => "MODEL_INVARIANT_VIOLATION",
            Error::FieldInvariantViolation(_) => "FIELD_INVARIANT_VIOLATION",
            Error::CountInconsistency(_) => "COUNT_INCONSISTENCY",
            Error::ZetaFeViolation(_) => "ZETA_FE_VIOLATION",
            Error::NotADoubleCoverPair(_) => "NOT_A_DOUBLE_COVER_PAIR",
            Error::DegreeMismatch { .. } => "DEGREE_MISMATCH",
            Error::QMismatch(..) => "Q_MISMATCH",
            Error::LFunctionFeViolation(_) => "L_FE_VIOLATION",
            Error::InvalidLFunction(_) => "L_INVALID",
            Error::SingularAtOne => "SINGULAR_AT_ONE",
            Error::DensityDegreeMismatch { .. } => "DENSITY_DEGREE_MISMATCH",
            Error::DensitySymmetryViolation(_) => "DENSITY_SYMMETRY_VIOLATION",
            Error::HalvingHypothesisViolation(_) => "HALVING_HYPOTHESIS_VIOLATION",
            Error::FamilyInconsistency(_) => "FAMILY_INCONSISTENCY",
            Error::InvalidContext(_) => "INVALID_CONTEXT",
            Error::InvalidPermutation(_) => "INVALID_PERMUTATION",
            Error::InvalidInput(_) => "INVALID_INPUT",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors for domain violations and failed numerical contracts.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// `p` must satisfy `p >= 2` and `gcd(p, 3) = 1`.
    #[error("invalid denominator p = {0}: need p >= 2 and p not divisible by 3")]
    InvalidLevel(i64),
    #[error("element {0} is not in the dominant chamber")]
    NotDominant(String),
    #[error("weight {0} is not dominant")]
    WeightNotDominant(String),
    #[error(
        "element {0} has nonzero triality; it lies outside the non-extended affine Weyl group"
    )]
    NotTrialityZero(String),
    #[error("weight {0} lies outside the shifted level-{1} alcove")]
    OutOfAlcove(String, i64),
    #[error("element {0} lies outside the admissible alcove for p = {1}")]
    OutsideAdmissibleAlcove(String, i64),
    #[error("weight {0} lies outside the dual set E_p for p = {1}")]
    OutsideDualSet(String, i64),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("{what}: defect {defect:.3e} exceeds tolerance {tol:.1e}")]
    Defect { what: String, defect: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

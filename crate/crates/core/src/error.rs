use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero vector does not represent a projective point or plane")]
    ZeroVector,

    #[error("point is not proper (self-form {self_form:e} is not negative)")]
    NotProper { self_form: f64 },

    #[error("inconsistent representatives: cosh quotient {quotient} is below 1")]
    InconsistentRepresentatives { quotient: f64 },

    #[error("planes are not ultraparallel (|cos| = {cosine})")]
    NotUltraparallel { cosine: f64 },

    #[error("planes do not intersect (|cos| = {cosine})")]
    NotIntersecting { cosine: f64 },

    #[error("matrix is singular to working precision")]
    SingularMatrix,

    #[error("non-finite input {0}")]
    NonFinite(f64),

    #[error("parameter p = {0} is outside (6, ∞)")]
    ParameterOutOfRange(f64),

    #[error("dihedral angle {0} is outside [0, π/2]")]
    AngleOutOfRange(f64),

    #[error("orthoscheme angles give a negative radicand {0:e} for θ")]
    NegativeRadicand(f64),

    #[error("orthoscheme angles give a zero denominator for θ")]
    ZeroDenominator,

    #[error("height quotient {0} is below 1; wrong Schläfli inverse indices")]
    HeightQuotient(f64),

    #[error("negative input {name} = {value}")]
    NegativeInput { name: &'static str, value: f64 },

    #[error("quadrature did not reach tolerance {tol:e} (estimated error {estimate:e})")]
    ToleranceNotReached { tol: f64, estimate: f64 },

    #[error("invalid bracket [{lo}, {hi}] with tolerance {tol}")]
    InvalidBracket { lo: f64, hi: f64, tol: f64 },
}

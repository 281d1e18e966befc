use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {reason} (got {value})")]
    Domain {
        func: &'static str,
        reason: &'static str,
        value: f64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("channel l={l} is anomalous (D = {discriminant}); use the s-wave cutoff operations")]
    AnomalousChannel { l: u32, discriminant: f64 },

    #[error("channel l={l} is not anomalous (D = {discriminant} >= 0)")]
    NotAnomalous { l: u32, discriminant: f64 },

    #[error("cutoff outside the scaling regime: -ln(mu*a/2) - gamma = {denominator} <= 0")]
    OutsideScalingRegime { denominator: f64 },

    #[error("root not found: {0}")]
    RootNotFound(String),

    #[error("step size too large: h * max|k_eff| = {value} > 0.5")]
    StepTooLarge { value: f64 },

    #[error("asymptotic fit residual {residual:e} exceeds tolerance")]
    PoorFit { residual: f64 },

    #[error("no bound state: s-wave discriminant D = {discriminant} >= 0")]
    NoBoundState { discriminant: f64 },

    #[error("no convergence in {0}")]
    NoConvergence(&'static str),
}

impl Error {
    /// True for failures of a numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::RootNotFound(_)
                | Error::StepTooLarge { .. }
                | Error::PoorFit { .. }
                | Error::NoConvergence(_)
        )
    }
}

pub(crate) fn domain(func: &'static str, reason: &'static str, value: f64) -> Error {
    Error::Domain {
        func,
        reason,
        value,
    }
}

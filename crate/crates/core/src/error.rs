use thiserror::Error;

/// Failures surfaced by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("interval divisor contains zero")]
    DivisorContainsZero,
    #[error("square root of negative value")]
    NegativeSqrt,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),
    #[error("expression contains odd power Π^{0}; not a polynomial in Π²")]
    OddPiPower(i32),
    #[error("precision cap of {cap} digits reached: {what}")]
    PrecisionExhausted { cap: u32, what: String },
    #[error("resource cap reached: {0}")]
    ResourceCap(String),
}

impl Error {
    /// `true` for errors caused by hitting a configured resource or precision cap.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::PrecisionExhausted { .. } | Error::ResourceCap(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Error taxonomy shared by every module in the crate.
//!
//! The variants partition failures by *who can fix them*:
//!
//! * [`Error::Domain`] — the caller passed an argument outside the
//!   mathematical domain of the operation (wrong sign, pole argument,
//!   index out of `(1, 2)`, …).  Retrying with the same inputs can never
//!   succeed.
//! * [`Error::Range`] — the inputs are legal but the result is not
//!   representable or meaningful in `f64` (e.g. an exponent that would
//!   overflow `exp`).
//! * [`Error::PrecisionLoss`] — the algorithm ran, but cancellation or
//!   overflow diagnostics show the result would carry fewer correct digits
//!   than the contract promises.  A different method (or argument range)
//!   is required.
//! * [`Error::QuadratureFailure`] — an adaptive integration or series
//!   summation hit its subdivision/term budget without meeting tolerance.
//! * [`Error::FitFailure`] — an asymptotic fit could not be performed on
//!   the supplied data (sign changes, degenerate grid, …).

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library. See the module docs for the taxonomy.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of `op`.
    #[error("{op}: domain error: {detail}")]
    Domain {
        /// Operation that rejected its input.
        op: &'static str,
        /// Human-readable description naming the offending field/argument.
        detail: String,
    },

    /// Result not representable / argument outside the supported range.
    #[error("{op}: range error: {detail}")]
    Range {
        /// Operation that rejected its input.
        op: &'static str,
        /// Human-readable description of the limit that was exceeded.
        detail: String,
    },

    /// Diagnostics show the result would not meet the accuracy contract.
    #[error("{op}: precision loss: {detail}")]
    PrecisionLoss {
        /// Operation that detected the loss.
        op: &'static str,
        /// Description including the measured diagnostic value.
        detail: String,
    },

    /// An iterative quadrature / summation did not converge in budget.
    #[error("{op}: quadrature failure: {detail}")]
    QuadratureFailure {
        /// Operation that failed to converge.
        op: &'static str,
        /// Description of the budget that was exhausted.
        detail: String,
    },

    /// A least-squares or ratio fit could not be carried out.
    #[error("{op}: fit failure: {detail}")]
    FitFailure {
        /// Operation that rejected the data.
        op: &'static str,
        /// Why the data cannot be fitted.
        detail: String,
    },
}

impl Error {
    /// Shorthand constructor for [`Error::Domain`].
    pub fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    /// Shorthand constructor for [`Error::Range`].
    pub fn range(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Range {
            op,
            detail: detail.into(),
        }
    }

    /// Shorthand constructor for [`Error::PrecisionLoss`].
    pub fn precision(op: &'static str, detail: impl Into<String>) -> Self {
        Error::PrecisionLoss {
            op,
            detail: detail.into(),
        }
    }

    /// Shorthand constructor for [`Error::QuadratureFailure`].
    pub fn quadrature(op: &'static str, detail: impl Into<String>) -> Self {
        Error::QuadratureFailure {
            op,
            detail: detail.into(),
        }
    }

    /// Shorthand constructor for [`Error::FitFailure`].
    pub fn fit(op: &'static str, detail: impl Into<String>) -> Self {
        Error::FitFailure {
            op,
            detail: detail.into(),
        }
    }
}

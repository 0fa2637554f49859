//! Exact and high-precision workbench for the arithmetic of even zeta values.
//!
//! The library constructs Bernoulli-type numbers, generalized Ramanujan
//! polynomials, minor-corner-layered (MCL) determinants, exact pi-graded
//! zeta-family constants, Li-criterion coefficients, and pseudo-characteristic
//! polynomial bounds, and cross-checks every identity between them by at
//! least two independent computational routes: exact rational arithmetic
//! where a closed form exists, correctly-rounded high-precision floating
//! arithmetic everywhere else.

pub mod bernoulli;
pub mod exactcore;
pub mod hpnum;
pub mod li;
pub mod mcl;
pub mod pseudochar;
pub mod ramanujan;
pub mod report;
pub mod suites;
pub mod zetafam;

/// Unified error type for every fallible operation in the workbench.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,
    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("pi-grade mismatch: a term in pi^{0} cannot be added to one in pi^{1}")]
    GradeMismatch(u32, u32),
    #[error("input sequence too short: need {needed} entries, got {got}")]
    LengthShortfall { needed: usize, got: usize },
    #[error("order {s} exceeds the supported bound {max} for this operation")]
    OrderTooLarge { s: usize, max: usize },
    #[error("precision {got} bits is insufficient here; need at least {needed}")]
    PrecisionTooLow { needed: u32, got: u32 },
    #[error("zeta has a pole at s = 1; the evaluation is rejected")]
    ZetaPole,
    #[error("the expansion point must lie strictly in the upper half-plane")]
    NonPositiveImag,
    #[error("iteration did not converge within {iters} rounds ({} partial estimates kept)", partial.len())]
    NoConvergence {
        iters: usize,
        /// Best root estimates at the moment the budget ran out, so a
        /// caller can inspect how far the iteration got.
        partial: Vec<hpnum::RootEstimate>,
    },
    #[error("cannot parse {kind} from {text:?}")]
    Parse { kind: &'static str, text: String },
}

pub type Result<T> = std::result::Result<T, Error>;

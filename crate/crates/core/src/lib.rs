//! Exact arithmetic for deciding when rational powers of power series
//! have integral coefficients.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! floating-point code paths. The crate is organized as:
//!
//! - [`arith`]: big-rational number theory (p-adic valuations, Legendre's
//!   factorial valuation, radicals, generalized binomial coefficients,
//!   prime-power decomposition of exponents)
//! - [`series`]: truncated formal power series over `BigRational` with
//!   exact ring arithmetic, rational powers, exp/log, `x -> x^p`
//!   substitution, stride extraction and congruences mod `p^k`
//! - [`criteria`]: the integrality decision procedures (stride congruence
//!   criterion, Dieudonné–Dwork criterion and its extensions, and the
//!   brute-force expansion oracle they are all cross-checked against)
//! - [`seqgen`]: generators for the coefficient families these criteria
//!   classify (k-central binomial and generalized trinomial coefficients)
//!
//! All values are immutable and all operations are pure functions, so the
//! whole API is safe to use concurrently.

pub mod arith;
pub mod criteria;
pub mod seqgen;
pub mod series;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use arith::{
    binom_rational, digit_sum, factor_exponent, is_prime, legendre_factorial_val, nu_p, rad,
    ArithError, ExponentSpec, PrimePower, Valuation,
};
pub use criteria::{
    check_dd, check_dd_additive, check_dd_extended, check_theorem_main, classify_quadratic,
    decide_rational_power, hrs_reduction_check, oracle_integrality, CriteriaError, CriterionKind,
    CriterionOutcome, DdVariant, IntegralityReport, PrimePowerOutcome, Verdict, Witness,
};
pub use seqgen::{k_central_binomials, sharpness_certificate, trinomial_coefficients, SeqError};
pub use series::{congruent_mod_pk, Congruence, SeriesError, TruncatedSeries};

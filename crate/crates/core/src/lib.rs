//! Classical and generalized Gauss/confluent hypergeometric functions, the
//! generalized beta function B_p^{(α,β)}, and numerical certification of the
//! Grüss-type inequalities relating them.
//!
//! Every evaluator returns a value with an absolute error estimate so that
//! inequality checks can tell a genuine violation from a numerical tie.

pub mod approx;
pub mod error;
pub mod inequality;
pub mod oracle;
pub mod params;
pub mod quadrature;
pub mod scalar;
pub mod series;
pub mod sum;

pub use error::{HgError, Result};
pub use params::ParamSet;
pub use quadrature::{
    gauss_2f1_integral, gchf_integral, gen_beta, gghf_integral, integrate01, kummer_1f1_integral,
    GenBetaEngine, GenBetaValue, QuadConfig,
};
pub use scalar::{beta, lambda_envelope, log_gamma, pochhammer, theta_envelope};
pub use series::{
    gauss_2f1, gauss_2f1_beta_expansion, gchf_series, gghf_series, kummer_1f1,
    kummer_1f1_beta_expansion, EvalConfig, EvalResult, Method,
};

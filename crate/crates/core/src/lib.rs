//! Causal direction inference for pairs of discrete variables.
//!
//! Each variable is scored with its multinomial stochastic complexity, the
//! normalized maximum likelihood (NML) code length in bits:
//!
//! ```text
//! S(X) = n log n - Σ h_j log h_j + log R(m, n)
//! ```
//!
//! where `h_j` are the symbol counts and `R(m, n)` is the multinomial
//! normalizing sum. The conditional complexity `S(Y | X)` is the sum of the
//! complexities of `Y` restricted to each observed value of `X`. The direction
//! with the smaller total, `S(X) + S(Y | X)` versus `S(Y) + S(X | Y)`, is
//! reported as the causal one.
//!
//! ```
//! use cisc::{infer, DiscreteSample, Direction};
//!
//! let x = DiscreteSample::new(vec![0, 0, 1, 1, 2, 2], 3).unwrap();
//! let verdict = infer(&x, &x).unwrap();
//! assert_eq!(verdict.direction, Direction::Undecided);
//! ```
//!
//! Besides the score itself the crate ships the evaluation machinery: a
//! seeded additive-noise pair generator ([`synth`]), accuracy and
//! decision-rate curves, benchmark directory scoring and runtime profiling
//! ([`eval`]), and a tolerant reader for two-column pair files ([`pairfile`]).

mod codelength;
mod complexity;
mod error;
mod inference;
mod normalizer;
mod sample;

pub mod eval;
pub mod pairfile;
pub mod synth;

pub use codelength::Codelength;
pub use complexity::{
    conditional_stochastic_complexity, ml_codelength, stochastic_complexity, Scorer,
};
pub use error::{Error, Result};
pub use inference::{directed_scores, infer, CausalVerdict, Direction, TIE_EPSILON};
pub use normalizer::{
    normalizing_sum, normalizing_sum_oracle, normalizing_sum_with, LogNormalizer, NormalizerMethod,
    DEFAULT_PRECISION, ORACLE_MAX_DOMAIN, ORACLE_MAX_LEN,
};
pub use sample::{encode, encode_sorted, DiscreteSample, Encoded, Histogram};

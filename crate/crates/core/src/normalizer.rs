//! The multinomial normalizing sum `R(m, n)`.
//!
//! `R(m, n)` sums the maximum-likelihood probability of every length-`n`
//! sequence over an `m`-symbol alphabet. Its base-2 logarithm is the
//! parametric complexity added to the maximum-likelihood code length.
//!
//! The fast path evaluates `R(2, n)` with the truncated series
//!
//! ```text
//! R(2, n) = Σ_{k=0}^{n} n! / ((n - k)! n^k)
//! ```
//!
//! whose terms decay like `exp(-k² / 2n)`, so only `O(√(d n))` of them are
//! needed for `d` digits, and then climbs to `m` with the recurrence
//!
//! ```text
//! R(k + 2, n) = R(k + 1, n) + (n / k) R(k, n),    R(1, n) = 1
//! ```
//!
//! carried in log space as a running ratio so nothing overflows. Total cost
//! is `O(√(d n) + m)`.

use std::f64::consts::LN_2;

use crate::error::{Error, Result};

/// Default number of significant decimal digits for the fast path.
pub const DEFAULT_PRECISION: u32 = 10;

/// Largest alphabet accepted by [`normalizing_sum_oracle`].
pub const ORACLE_MAX_DOMAIN: usize = 8;
/// Largest sample length accepted by [`normalizing_sum_oracle`].
pub const ORACLE_MAX_LEN: usize = 12;

/// `log2 R(m, n)` for an `m`-symbol alphabet and sample length `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogNormalizer {
    pub m: usize,
    pub n: usize,
    pub log2_r: f64,
}

impl LogNormalizer {
    /// `R` itself; overflows to infinity for large `m` or `n`.
    pub fn value(&self) -> f64 {
        self.log2_r.exp2()
    }
}

/// How the two-symbol base case `R(2, n)` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormalizerMethod {
    /// Truncated series, stopping once the remaining tail is below
    /// `10^-(digits + 1)` of the partial sum.
    Series { digits: u32 },
    /// Full `O(n)` binomial sum with log-gamma coefficients.
    Binomial,
}

impl Default for NormalizerMethod {
    fn default() -> Self {
        NormalizerMethod::Series {
            digits: DEFAULT_PRECISION,
        }
    }
}

/// `log2 R(m, n)` by the fast series-plus-recurrence path.
pub fn normalizing_sum(m: usize, n: usize, precision_digits: u32) -> Result<LogNormalizer> {
    normalizing_sum_with(
        m,
        n,
        NormalizerMethod::Series {
            digits: precision_digits,
        },
    )
}

pub fn normalizing_sum_with(m: usize, n: usize, method: NormalizerMethod) -> Result<LogNormalizer> {
    if m == 0 {
        return Err(Error::ZeroDomain);
    }
    if n == 0 {
        return Err(Error::EmptySample);
    }
    Ok(LogNormalizer {
        m,
        n,
        log2_r: ln_normalizer(m, n, method) / LN_2,
    })
}

/// Natural log of `R(m, n)`. Requires `m, n >= 1`.
pub(crate) fn ln_normalizer(m: usize, n: usize, method: NormalizerMethod) -> f64 {
    debug_assert!(m >= 1 && n >= 1);
    if m == 1 {
        return 0.0;
    }
    let base = match method {
        NormalizerMethod::Series { digits } => binary_series(n, digits),
        NormalizerMethod::Binomial => binary_binomial(n),
    };
    let mut ln_prev = 0.0;
    let mut ln_cur = base.ln();
    let nf = n as f64;
    for k in 1..=(m - 2) {
        // R(k+2) / R(k+1) = 1 + (n/k) R(k) / R(k+1)
        let ln_next = ln_cur + (nf / k as f64 * (ln_prev - ln_cur).exp()).ln_1p();
        ln_prev = ln_cur;
        ln_cur = ln_next;
    }
    ln_cur
}

fn binary_series(n: usize, digits: u32) -> f64 {
    let nf = n as f64;
    let tolerance = 10f64.powi(-(digits.min(300) as i32) - 1);
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..=n {
        term *= (n - k + 1) as f64 / nf;
        sum += term;
        // Term ratios are at most 1 - k/n, so the tail is bounded by term * (n - k) / k.
        if term * (n - k) as f64 / k as f64 <= tolerance * sum {
            break;
        }
    }
    sum
}

fn binary_binomial(n: usize) -> f64 {
    let nf = n as f64;
    let ln_n_fact = libm::lgamma(nf + 1.0);
    // 0^0 = 1: both end points contribute exactly one.
    let mut sum = if n == 0 { 1.0 } else { 2.0 };
    for h in 1..n {
        let hf = h as f64;
        let rest = nf - hf;
        let ln_choose = ln_n_fact - libm::lgamma(hf + 1.0) - libm::lgamma(rest + 1.0);
        // Each term is a binomial probability, hence <= 1; no shift needed.
        sum += (ln_choose + hf * (hf / nf).ln() + rest * (rest / nf).ln()).exp();
    }
    sum
}

/// `log2 R(m, n)` by direct enumeration of every count vector `h_1 + ... + h_m = n`.
///
/// Exponential in `m`; limited to `m <= 8`, `n <= 12`.
pub fn normalizing_sum_oracle(m: usize, n: usize) -> Result<LogNormalizer> {
    if m == 0 {
        return Err(Error::ZeroDomain);
    }
    if n == 0 {
        return Err(Error::EmptySample);
    }
    if m > ORACLE_MAX_DOMAIN || n > ORACLE_MAX_LEN {
        return Err(Error::OracleBound {
            m,
            n,
            max_m: ORACLE_MAX_DOMAIN,
            max_n: ORACLE_MAX_LEN,
        });
    }
    let factorial: Vec<f64> = (0..=n)
        .scan(1.0, |acc, k| {
            if k > 0 {
                *acc *= k as f64;
            }
            Some(*acc)
        })
        .collect();
    let mut counts = vec![0usize; m];
    let mut total = 0.0;
    enumerate_compositions(&mut counts, 0, n, &mut |h| {
        let coefficient = h.iter().fold(factorial[n], |c, &k| c / factorial[k]);
        let likelihood: f64 = h
            .iter()
            .map(|&k| (k as f64 / n as f64).powi(k as i32))
            .product();
        total += coefficient * likelihood;
    });
    Ok(LogNormalizer {
        m,
        n,
        log2_r: total.log2(),
    })
}

fn enumerate_compositions(
    counts: &mut [usize],
    pos: usize,
    remaining: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    if pos + 1 == counts.len() {
        counts[pos] = remaining;
        visit(counts);
        return;
    }
    for k in 0..=remaining {
        counts[pos] = k;
        enumerate_compositions(counts, pos + 1, remaining - k, visit);
    }
}

//! Cause distributions and their parameter draws.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// The seven cause families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Uniform,
    Binomial,
    Geometric,
    Hypergeometric,
    Poisson,
    NegativeBinomial,
    Multinomial,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Uniform,
        Family::Binomial,
        Family::Geometric,
        Family::Hypergeometric,
        Family::Poisson,
        Family::NegativeBinomial,
        Family::Multinomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Uniform => "uniform",
            Family::Binomial => "binomial",
            Family::Geometric => "geometric",
            Family::Hypergeometric => "hypergeometric",
            Family::Poisson => "poisson",
            Family::NegativeBinomial => "negative-binomial",
            Family::Multinomial => "multinomial",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key || (key == "negbin" && *f == Family::NegativeBinomial))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A cause family with concrete parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum CauseClass {
    /// Uniform on `{1, ..., upper}`.
    Uniform {
        upper: i64,
    },
    Binomial {
        trials: i64,
        p: f64,
    },
    /// Trials up to and including the first success; support `{1, 2, ...}`.
    Geometric {
        p: f64,
    },
    /// Successes among `draws` taken without replacement from an urn of
    /// `successes + failures` items.
    Hypergeometric {
        successes: i64,
        failures: i64,
        draws: i64,
    },
    Poisson {
        lambda: f64,
    },
    /// Failures before the `successes`-th success.
    NegativeBinomial {
        successes: i64,
        p: f64,
    },
    /// One categorical draw per observation; values in `{1, ..., theta.len()}`.
    Multinomial {
        theta: Vec<f64>,
    },
}

pub const MAX_UNIFORM_UPPER: i64 = 10;
pub const MAX_URN_GROUP: i64 = 40;
pub const MAX_HYPERGEOMETRIC_DRAWS: i64 = 41;
/// Trial count range for binomial and negative binomial.
pub const MAX_TRIALS: i64 = 40;
pub const P_RANGE: (f64, f64) = (0.1, 0.9);
pub const LAMBDA_RANGE: (f64, f64) = (1.0, 10.0);
pub const MULTINOMIAL_CATEGORIES: (usize, usize) = (2, 10);

/// Poisson inverse-CDF search stops here.
const POISSON_CUTOFF: i64 = 1_000;

impl CauseClass {
    pub fn family(&self) -> Family {
        match self {
            CauseClass::Uniform { .. } => Family::Uniform,
            CauseClass::Binomial { .. } => Family::Binomial,
            CauseClass::Geometric { .. } => Family::Geometric,
            CauseClass::Hypergeometric { .. } => Family::Hypergeometric,
            CauseClass::Poisson { .. } => Family::Poisson,
            CauseClass::NegativeBinomial { .. } => Family::NegativeBinomial,
            CauseClass::Multinomial { .. } => Family::Multinomial,
        }
    }

    /// Whether every parameter lies in its admissible range.
    pub fn is_admissible(&self) -> bool {
        let p_ok = |p: f64| (P_RANGE.0..=P_RANGE.1).contains(&p);
        match *self {
            CauseClass::Uniform { upper } => (1..=MAX_UNIFORM_UPPER).contains(&upper),
            CauseClass::Binomial { trials, p } => (1..=MAX_TRIALS).contains(&trials) && p_ok(p),
            CauseClass::Geometric { p } => p_ok(p),
            CauseClass::Hypergeometric {
                successes,
                failures,
                draws,
            } => {
                (1..=MAX_URN_GROUP).contains(&successes)
                    && (1..=MAX_URN_GROUP).contains(&failures)
                    && (1..=MAX_HYPERGEOMETRIC_DRAWS.min(successes + failures)).contains(&draws)
            }
            CauseClass::Poisson { lambda } => (LAMBDA_RANGE.0..=LAMBDA_RANGE.1).contains(&lambda),
            CauseClass::NegativeBinomial { successes, p } => {
                (1..=MAX_TRIALS).contains(&successes) && p_ok(p)
            }
            CauseClass::Multinomial { ref theta } => {
                (MULTINOMIAL_CATEGORIES.0..=MULTINOMIAL_CATEGORIES.1).contains(&theta.len())
                    && theta.iter().all(|&t| t >= 0.0)
                    && (theta.iter().sum::<f64>() - 1.0).abs() < 1e-9
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            CauseClass::Uniform { upper } => format!("uniform(L={upper})"),
            CauseClass::Binomial { trials, p } => format!("binomial(n={trials},p={p:.6})"),
            CauseClass::Geometric { p } => format!("geometric(p={p:.6})"),
            CauseClass::Hypergeometric {
                successes,
                failures,
                draws,
            } => format!("hypergeometric(M={successes},K={failures},N={draws})"),
            CauseClass::Poisson { lambda } => format!("poisson(lambda={lambda:.6})"),
            CauseClass::NegativeBinomial { successes, p } => {
                format!("negative-binomial(n={successes},p={p:.6})")
            }
            CauseClass::Multinomial { theta } => {
                let parts: Vec<String> = theta.iter().map(|t| format!("{t:.6}")).collect();
                format!("multinomial(theta=[{}])", parts.join(";"))
            }
        }
    }
}

/// Draws the parameters of `family` from their admissible ranges.
pub fn random_cause_class<R: Rng + ?Sized>(family: Family, rng: &mut R) -> CauseClass {
    let p = |rng: &mut R| rng.gen_range(P_RANGE.0..=P_RANGE.1);
    match family {
        Family::Uniform => CauseClass::Uniform {
            upper: rng.gen_range(1..=MAX_UNIFORM_UPPER),
        },
        Family::Binomial => CauseClass::Binomial {
            trials: rng.gen_range(1..=MAX_TRIALS),
            p: p(rng),
        },
        Family::Geometric => CauseClass::Geometric { p: p(rng) },
        Family::Hypergeometric => {
            let successes = rng.gen_range(1..=MAX_URN_GROUP);
            let failures = rng.gen_range(1..=MAX_URN_GROUP);
            let draws = rng.gen_range(1..=MAX_HYPERGEOMETRIC_DRAWS.min(successes + failures));
            CauseClass::Hypergeometric {
                successes,
                failures,
                draws,
            }
        }
        Family::Poisson => CauseClass::Poisson {
            lambda: rng.gen_range(LAMBDA_RANGE.0..=LAMBDA_RANGE.1),
        },
        Family::NegativeBinomial => CauseClass::NegativeBinomial {
            successes: rng.gen_range(1..=MAX_TRIALS),
            p: p(rng),
        },
        Family::Multinomial => {
            let k = rng.gen_range(MULTINOMIAL_CATEGORIES.0..=MULTINOMIAL_CATEGORIES.1);
            // Uniform spacings of k - 1 sorted points on [0, 1].
            let mut cuts: Vec<f64> = (0..k - 1).map(|_| rng.gen::<f64>()).collect();
            cuts.sort_by(f64::total_cmp);
            cuts.push(1.0);
            let mut prev = 0.0;
            let theta = cuts
                .into_iter()
                .map(|c| {
                    let t = c - prev;
                    prev = c;
                    t
                })
                .collect();
            CauseClass::Multinomial { theta }
        }
    }
}

/// `n` i.i.d. raw draws from `class`.
pub fn sample_cause<R: Rng + ?Sized>(class: &CauseClass, n: usize, rng: &mut R) -> Vec<i64> {
    match *class {
        CauseClass::Uniform { upper } => (0..n).map(|_| rng.gen_range(1..=upper)).collect(),
        CauseClass::Binomial { trials, p } => {
            let cdf = binomial_cdf(trials, p);
            (0..n)
                .map(|_| inverse_cdf(&cdf, rng.gen()) as i64)
                .collect()
        }
        CauseClass::Geometric { p } => (0..n).map(|_| geometric_trials(p, rng)).collect(),
        CauseClass::Hypergeometric {
            successes,
            failures,
            draws,
        } => (0..n)
            .map(|_| {
                let (mut white, mut black, mut hits) = (successes, failures, 0);
                for _ in 0..draws {
                    if rng.gen_range(0..white + black) < white {
                        white -= 1;
                        hits += 1;
                    } else {
                        black -= 1;
                    }
                }
                hits
            })
            .collect(),
        CauseClass::Poisson { lambda } => {
            let cdf = poisson_cdf(lambda);
            (0..n)
                .map(|_| inverse_cdf(&cdf, rng.gen()) as i64)
                .collect()
        }
        CauseClass::NegativeBinomial { successes, p } => (0..n)
            .map(|_| (0..successes).map(|_| geometric_trials(p, rng) - 1).sum())
            .collect(),
        CauseClass::Multinomial { ref theta } => {
            let mut acc = 0.0;
            let mut cdf: Vec<f64> = theta
                .iter()
                .map(|t| {
                    acc += t;
                    acc
                })
                .collect();
            *cdf.last_mut().expect("at least two categories") = 1.0;
            (0..n)
                .map(|_| inverse_cdf(&cdf, rng.gen()) as i64 + 1)
                .collect()
        }
    }
}

// Smallest index whose cumulative probability exceeds `u`.
fn inverse_cdf(cdf: &[f64], u: f64) -> usize {
    cdf.partition_point(|&c| c <= u).min(cdf.len() - 1)
}

fn binomial_cdf(trials: i64, p: f64) -> Vec<f64> {
    let ratio = p / (1.0 - p);
    let mut pmf = (1.0 - p).powi(trials as i32);
    let mut acc = 0.0;
    let mut cdf = Vec::with_capacity(trials as usize + 1);
    for k in 0..=trials {
        acc += pmf;
        cdf.push(acc);
        pmf *= (trials - k) as f64 / (k + 1) as f64 * ratio;
    }
    *cdf.last_mut().expect("non-empty") = 1.0;
    cdf
}

fn poisson_cdf(lambda: f64) -> Vec<f64> {
    let mut pmf = (-lambda).exp();
    let mut acc = 0.0;
    let mut cdf = Vec::new();
    for k in 0..=POISSON_CUTOFF {
        acc += pmf;
        cdf.push(acc);
        if acc >= 1.0 - f64::EPSILON {
            break;
        }
        pmf *= lambda / (k + 1) as f64;
    }
    *cdf.last_mut().expect("non-empty") = 1.0;
    cdf
}

fn geometric_trials<R: Rng + ?Sized>(p: f64, rng: &mut R) -> i64 {
    // 1 - u lies in (0, 1]
    let u: f64 = rng.gen();
    let k = ((1.0 - u).ln() / (1.0 - p).ln()).ceil();
    (k as i64).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn mean_var(xs: &[i64]) -> (f64, f64) {
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<i64>() as f64 / n;
        let var = xs.iter().map(|&x| (x as f64 - mean).powi(2)).sum::<f64>() / n;
        (mean, var)
    }

    fn assert_mean(class: CauseClass, expected_mean: f64, expected_var: f64) {
        let n = 100_000;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let xs = sample_cause(&class, n, &mut rng);
        let (mean, _) = mean_var(&xs);
        let bound = 3.0 * (expected_var / n as f64).sqrt();
        assert!(
            (mean - expected_mean).abs() <= bound,
            "{class:?}: mean {mean} vs {expected_mean} (bound {bound})"
        );
    }

    #[test]
    fn moments_match_closed_forms() {
        assert_mean(CauseClass::Binomial { trials: 10, p: 0.5 }, 5.0, 2.5);
        let p = 0.3;
        assert_mean(CauseClass::Geometric { p }, 1.0 / p, (1.0 - p) / (p * p));
        assert_mean(CauseClass::Poisson { lambda: 4.2 }, 4.2, 4.2);
        assert_mean(
            CauseClass::NegativeBinomial {
                successes: 5,
                p: 0.4,
            },
            5.0 * 0.6 / 0.4,
            5.0 * 0.6 / (0.4 * 0.4),
        );
        // M = 12 successes, K = 18 failures, N = 10 draws
        let (m, k, d) = (12.0, 18.0, 10.0);
        let total: f64 = m + k;
        assert_mean(
            CauseClass::Hypergeometric {
                successes: 12,
                failures: 18,
                draws: 10,
            },
            d * m / total,
            d * (m / total) * (k / total) * (total - d) / (total - 1.0),
        );
        assert_mean(CauseClass::Uniform { upper: 6 }, 3.5, 35.0 / 12.0);
        let theta = vec![0.2, 0.5, 0.3];
        assert_mean(CauseClass::Multinomial { theta }, 2.1, 0.49);
    }

    #[test]
    fn degenerate_uniform_is_constant() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let xs = sample_cause(&CauseClass::Uniform { upper: 1 }, 50, &mut rng);
        assert!(xs.iter().all(|&x| x == 1));
    }

    #[test]
    fn drawn_parameters_are_admissible() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for family in Family::ALL {
            for _ in 0..500 {
                let class = random_cause_class(family, &mut rng);
                assert_eq!(class.family(), family);
                assert!(class.is_admissible(), "{class:?}");
            }
        }
    }

    #[test]
    fn uniform_upper_covers_its_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = [false; 11];
        for _ in 0..1000 {
            if let CauseClass::Uniform { upper } = random_cause_class(Family::Uniform, &mut rng) {
                seen[upper as usize] = true;
            }
        }
        assert!(!seen[0]);
        assert!(seen[1..].iter().all(|&s| s));
    }

    #[test]
    fn family_names_round_trip() {
        for family in Family::ALL {
            assert_eq!(family.name().parse::<Family>().unwrap(), family);
        }
        assert_eq!(
            "NegBin".parse::<Family>().unwrap(),
            Family::NegativeBinomial
        );
        assert!("cauchy".parse::<Family>().is_err());
    }
}

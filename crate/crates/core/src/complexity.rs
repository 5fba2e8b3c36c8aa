use std::collections::HashMap;
use std::f64::consts::LN_2;

use crate::codelength::Codelength;
use crate::error::{Error, Result};
use crate::normalizer::{ln_normalizer, NormalizerMethod};
use crate::sample::{DiscreteSample, Histogram};

/// Maximum-likelihood code length `n log2 n - Σ h_j log2 h_j`, with `0 log 0 = 0`.
pub fn ml_codelength(hist: &Histogram) -> Codelength {
    let mut nonzero: Vec<u64> = hist.counts().iter().copied().filter(|&h| h > 0).collect();
    Codelength::from_bits(ml_bits(&mut nonzero, hist.total()))
}

// Counts are summed in sorted order so the result depends only on the multiset
// of counts, which makes relabeled samples score bit-identically.
fn ml_bits(nonzero: &mut [u64], total: u64) -> f64 {
    if nonzero.len() <= 1 {
        return 0.0;
    }
    nonzero.sort_unstable();
    let xlogx = |h: u64| {
        let h = h as f64;
        h * h.log2()
    };
    let fitted: f64 = nonzero.iter().map(|&h| xlogx(h)).sum();
    (xlogx(total) - fitted).max(0.0)
}

/// Stochastic complexity under the multinomial class, with the default precision.
pub fn stochastic_complexity(sample: &DiscreteSample) -> Codelength {
    Scorer::default().stochastic_complexity(sample)
}

/// `S(target | condition)` with the default precision.
pub fn conditional_stochastic_complexity(
    target: &DiscreteSample,
    condition: &DiscreteSample,
) -> Result<Codelength> {
    Scorer::default().conditional_stochastic_complexity(target, condition)
}

/// Scores samples with a fixed normalizing-sum evaluation strategy.
///
/// A `Scorer` holds no mutable state and can be shared across threads.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Scorer {
    method: NormalizerMethod,
}

impl Scorer {
    /// Scorer using the fast series with `precision_digits` significant digits.
    pub fn new(precision_digits: u32) -> Self {
        Scorer {
            method: NormalizerMethod::Series {
                digits: precision_digits,
            },
        }
    }

    pub fn with_method(method: NormalizerMethod) -> Self {
        Scorer { method }
    }

    pub fn method(&self) -> NormalizerMethod {
        self.method
    }

    pub(crate) fn log2_normalizer(&self, m: usize, n: usize) -> f64 {
        ln_normalizer(m, n, self.method) / LN_2
    }

    pub fn stochastic_complexity(&self, sample: &DiscreteSample) -> Codelength {
        let hist = sample.histogram();
        let ml = ml_codelength(&hist).bits();
        Codelength::from_bits(ml + self.log2_normalizer(sample.domain_size(), sample.len()))
    }

    /// Sum over the observed values `x` of `condition` of the complexity of
    /// `target` restricted to `condition == x`.
    ///
    /// Every slice is scored against the full target domain size.
    pub fn conditional_stochastic_complexity(
        &self,
        target: &DiscreteSample,
        condition: &DiscreteSample,
    ) -> Result<Codelength> {
        if target.len() != condition.len() {
            return Err(Error::LengthMismatch(target.len(), condition.len()));
        }
        let m_target = target.domain_size();
        let m_cond = condition.domain_size();

        // Counting sort of the target values by condition value.
        let mut offsets = vec![0usize; m_cond + 1];
        for &c in condition.values() {
            offsets[c + 1] += 1;
        }
        for i in 0..m_cond {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut grouped = vec![0usize; target.len()];
        for (&c, &t) in condition.values().iter().zip(target.values()) {
            grouped[cursor[c]] = t;
            cursor[c] += 1;
        }

        let mut cells = vec![0u64; m_target];
        let mut nonzero = Vec::new();
        let mut normalizers: HashMap<usize, f64> = HashMap::new();
        let mut slice_scores = Vec::new();
        for bounds in offsets.windows(2) {
            let slice = &grouped[bounds[0]..bounds[1]];
            if slice.is_empty() {
                continue;
            }
            nonzero.clear();
            for &t in slice {
                if cells[t] == 0 {
                    nonzero.push(t as u64);
                }
                cells[t] += 1;
            }
            for symbol in nonzero.iter_mut() {
                let s = *symbol as usize;
                *symbol = cells[s];
                cells[s] = 0;
            }
            let ml = ml_bits(&mut nonzero, slice.len() as u64);
            let parametric = *normalizers
                .entry(slice.len())
                .or_insert_with(|| self.log2_normalizer(m_target, slice.len()));
            slice_scores.push(ml + parametric);
        }
        slice_scores.sort_unstable_by(f64::total_cmp);
        Ok(Codelength::from_bits(slice_scores.iter().sum()))
    }
}

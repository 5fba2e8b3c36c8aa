//! Accuracy, decision-rate curves and experiment runners.

mod benchmark;
mod campaign;
mod profile;
mod report;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::inference::{CausalVerdict, Direction};

pub use benchmark::{
    list_pair_files, load_ground_truths, parse_ground_truths, run_benchmark, BenchmarkReport,
};
pub use campaign::{run_synthetic_campaign, CampaignConfig};
pub use profile::{runtime_profile, uniform_pair, write_profile_csv, ProfileRow};
pub use report::{read_results_csv, write_curve_csv, write_results_csv, RESULTS_HEADER};

/// The verdict for one labeled pair.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub pair_id: String,
    pub ground_truth: Direction,
    pub verdict: CausalVerdict,
    /// Wall-clock seconds spent in inference; zero when not measured.
    pub elapsed: f64,
}

impl EvalResult {
    pub fn confidence(&self) -> f64 {
        self.verdict.confidence
    }

    pub fn is_correct(&self) -> bool {
        self.verdict.direction == self.ground_truth
    }

    fn credit(&self) -> f64 {
        match self.verdict.direction {
            Direction::Undecided => 0.5,
            d if d == self.ground_truth => 1.0,
            _ => 0.0,
        }
    }
}

/// Fraction of correct decisions; undecided pairs earn half credit, the
/// expectation of a coin flip.
pub fn accuracy(results: &[EvalResult]) -> Result<f64> {
    if results.is_empty() {
        return Err(Error::EmptyCampaign);
    }
    Ok(results.iter().map(EvalResult::credit).sum::<f64>() / results.len() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub rate: f64,
    pub accuracy: f64,
}

/// Accuracy over the most confident fraction of results, for several fractions.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionRateCurve {
    pub points: Vec<CurvePoint>,
}

/// Results ordered by descending confidence, ties broken by pair id.
pub fn rank_by_confidence(results: &[EvalResult]) -> Vec<&EvalResult> {
    let mut ranked: Vec<&EvalResult> = results.iter().collect();
    ranked.sort_by(|a, b| match b.confidence().total_cmp(&a.confidence()) {
        Ordering::Equal => a.pair_id.cmp(&b.pair_id),
        other => other,
    });
    ranked
}

/// Number of results a decision rate covers: `ceil(rate * total)`, at least one.
pub fn top_count(rate: f64, total: usize) -> usize {
    // The slack absorbs products such as 0.3 * 10 = 3.0000000000000004.
    ((rate * total as f64 - 1e-9).ceil() as usize).clamp(1, total)
}

pub fn decision_rate_curve(results: &[EvalResult], rates: &[f64]) -> Result<DecisionRateCurve> {
    if results.is_empty() {
        return Err(Error::EmptyCampaign);
    }
    if let Some(&bad) = rates.iter().find(|&&r| !(r > 0.0 && r <= 1.0)) {
        return Err(Error::InvalidRate(bad));
    }
    let mut rates = rates.to_vec();
    rates.sort_by(f64::total_cmp);
    rates.dedup();

    let ranked = rank_by_confidence(results);
    let mut credit_prefix = Vec::with_capacity(ranked.len() + 1);
    credit_prefix.push(0.0);
    for r in &ranked {
        credit_prefix.push(credit_prefix.last().unwrap() + r.credit());
    }
    let points = rates
        .into_iter()
        .map(|rate| {
            let k = top_count(rate, ranked.len());
            CurvePoint {
                rate,
                accuracy: credit_prefix[k] / k as f64,
            }
        })
        .collect();
    Ok(DecisionRateCurve { points })
}

/// `0.05, 0.10, ..., 1.00`
pub fn default_rates() -> Vec<f64> {
    (1..=20).map(|i| i as f64 / 20.0).collect()
}

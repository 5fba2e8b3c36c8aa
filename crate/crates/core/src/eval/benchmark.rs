use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use crate::complexity::Scorer;
use crate::error::{file_error, Error, Result};
use crate::eval::EvalResult;
use crate::inference::Direction;
use crate::pairfile::{PairFile, PairFileOptions};

/// Outcome of scoring a directory of labeled pair files.
#[derive(Debug, Clone, Default)]
pub struct BenchmarkReport {
    /// One result per successfully scored pair, in pair id order.
    pub results: Vec<EvalResult>,
    /// Pairs that could not be scored, with the reason.
    pub failures: Vec<(String, String)>,
}

/// Parses `pair_id<TAB>direction` lines; `#` comments and blank lines are skipped.
pub fn parse_ground_truths(text: &str, source: &str) -> Result<BTreeMap<String, Direction>> {
    let mut truths = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            path: source.to_string(),
            line: i + 1,
            message,
        };
        let mut fields = line.split('\t');
        let (Some(id), Some(dir)) = (fields.next(), fields.next()) else {
            return Err(parse_err("expected `pair_id<TAB>direction`".to_string()));
        };
        let direction: Direction = dir.parse().map_err(|e: Error| parse_err(e.to_string()))?;
        if direction == Direction::Undecided {
            return Err(parse_err("ground truth must be XtoY or YtoX".to_string()));
        }
        truths.insert(id.trim().to_string(), direction);
    }
    Ok(truths)
}

pub fn load_ground_truths(path: &Path) -> Result<BTreeMap<String, Direction>> {
    let text = fs::read_to_string(path).map_err(file_error(path))?;
    parse_ground_truths(&text, &path.display().to_string())
}

/// Regular files in `dir` keyed by file stem, sorted by stem.
pub fn list_pair_files(dir: &Path) -> Result<BTreeMap<String, PathBuf>> {
    let mut files = BTreeMap::new();
    for entry in fs::read_dir(dir).map_err(file_error(dir))? {
        let path = entry?.path();
        if !path.is_file() {
            continue;
        }
        if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
            files.insert(stem.to_string(), path);
        }
    }
    Ok(files)
}

/// Scores every pair listed in `truths` whose file is present in `files`.
///
/// Values are treated as categories: tokens are matched exactly after
/// numeric normalization, without binning. Unreadable or missing pairs are
/// reported in `failures` and skipped.
pub fn run_benchmark(
    files: &BTreeMap<String, PathBuf>,
    truths: &BTreeMap<String, Direction>,
    scorer: Scorer,
    options: PairFileOptions,
    record_timing: bool,
) -> BenchmarkReport {
    let outcomes: Vec<(String, Result<EvalResult>)> = truths
        .par_iter()
        .map(|(id, &truth)| {
            let outcome = match files.get(id) {
                None => Err(Error::Io(std::io::Error::new(
                    std::io::ErrorKind::NotFound,
                    format!("no pair file for `{id}`"),
                ))),
                Some(path) => score_file(id, path, truth, scorer, options, record_timing),
            };
            (id.clone(), outcome)
        })
        .collect();

    let mut report = BenchmarkReport::default();
    for (id, outcome) in outcomes {
        match outcome {
            Ok(result) => report.results.push(result),
            Err(e) => report.failures.push((id, e.to_string())),
        }
    }
    report
}

fn score_file(
    id: &str,
    path: &Path,
    truth: Direction,
    scorer: Scorer,
    options: PairFileOptions,
    record_timing: bool,
) -> Result<EvalResult> {
    let pair = PairFile::read(path, options)?;
    let (x, y) = pair.encode()?;
    let start = Instant::now();
    let verdict = scorer.infer(&x.sample, &y.sample)?;
    Ok(EvalResult {
        pair_id: id.to_string(),
        ground_truth: truth,
        verdict,
        elapsed: if record_timing {
            start.elapsed().as_secs_f64()
        } else {
            0.0
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_truth_file() {
        let t = parse_ground_truths("# header\npair0001\tXtoY\n\npair0002\tYtoX\n", "t").unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t["pair0002"], Direction::YtoX);
        assert!(parse_ground_truths("pair0001 XtoY\n", "t").is_err());
        assert!(parse_ground_truths("pair0001\tUndecided\n", "t").is_err());
        assert!(parse_ground_truths("pair0001\tup\n", "t").is_err());
    }

    #[test]
    fn scores_and_reports_failures() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("same.txt"), "1 1\n2 2\n3 3\n2 2\n").unwrap();
        fs::write(dir.path().join("broken.txt"), "1 1\n2\n").unwrap();
        fs::write(dir.path().join("ignored.txt"), "1 1\n").unwrap();
        let files = list_pair_files(dir.path()).unwrap();
        let truths = parse_ground_truths("same\tXtoY\nbroken\tYtoX\nmissing\tXtoY\n", "t").unwrap();
        let report = run_benchmark(
            &files,
            &truths,
            Scorer::default(),
            PairFileOptions::default(),
            false,
        );
        assert_eq!(report.results.len(), 1);
        assert_eq!(report.results[0].pair_id, "same");
        assert_eq!(report.results[0].verdict.direction, Direction::Undecided);
        let failed: Vec<&str> = report.failures.iter().map(|(id, _)| id.as_str()).collect();
        assert_eq!(failed, vec!["broken", "missing"]);
    }
}

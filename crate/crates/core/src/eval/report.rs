//! CSV tables for results and decision-rate curves.

use std::io::{Read, Write};

use crate::codelength::Codelength;
use crate::error::{Error, Result};
use crate::eval::{DecisionRateCurve, EvalResult};
use crate::inference::{CausalVerdict, Direction};

pub const RESULTS_HEADER: [&str; 7] = [
    "pair_id",
    "ground_truth",
    "direction",
    "s_xy",
    "s_yx",
    "delta",
    "elapsed_s",
];

pub fn write_results_csv<W: Write>(writer: W, results: &[EvalResult]) -> Result<()> {
    let mut out = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    out.write_record(RESULTS_HEADER)?;
    for r in results {
        out.write_record([
            r.pair_id.clone(),
            r.ground_truth.to_string(),
            r.verdict.direction.to_string(),
            format!("{:.6}", r.verdict.s_x_to_y.bits()),
            format!("{:.6}", r.verdict.s_y_to_x.bits()),
            format!("{:.6}", r.verdict.delta),
            format!("{:.6}", r.elapsed),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Reads a results table; the stored direction is kept as written.
pub fn read_results_csv<R: Read>(reader: R) -> Result<Vec<EvalResult>> {
    let mut input = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(reader);
    let headers = input.headers()?.clone();
    if headers.iter().ne(RESULTS_HEADER) {
        return Err(Error::Parse {
            path: "results".to_string(),
            line: 1,
            message: format!("expected header `{}`", RESULTS_HEADER.join(",")),
        });
    }
    let mut results = Vec::new();
    for (i, record) in input.records().enumerate() {
        let record = record?;
        let line = i + 2;
        let number = |col: usize| -> Result<f64> {
            record[col].trim().parse::<f64>().map_err(|e| Error::Parse {
                path: "results".to_string(),
                line,
                message: format!("column `{}`: {e}", RESULTS_HEADER[col]),
            })
        };
        let delta = number(5)?;
        results.push(EvalResult {
            pair_id: record[0].to_string(),
            ground_truth: record[1].parse::<Direction>()?,
            verdict: CausalVerdict {
                s_x_to_y: Codelength::from_bits(number(3)?),
                s_y_to_x: Codelength::from_bits(number(4)?),
                delta,
                direction: record[2].parse::<Direction>()?,
                confidence: delta.abs(),
            },
            elapsed: number(6)?,
        });
    }
    Ok(results)
}

pub fn write_curve_csv<W: Write>(mut writer: W, curve: &DecisionRateCurve) -> Result<()> {
    writeln!(writer, "rate,accuracy")?;
    for p in &curve.points {
        writeln!(writer, "{:.6},{:.6}", p.rate, p.accuracy)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::decision_rate_curve;

    fn sample_results() -> Vec<EvalResult> {
        vec![
            EvalResult {
                pair_id: "a,1".to_string(),
                ground_truth: Direction::XtoY,
                verdict: CausalVerdict::from_scores(
                    Codelength::from_bits(10.5),
                    Codelength::from_bits(12.25),
                ),
                elapsed: 0.0,
            },
            EvalResult {
                pair_id: "b".to_string(),
                ground_truth: Direction::YtoX,
                verdict: CausalVerdict::from_scores(
                    Codelength::from_bits(3.0),
                    Codelength::from_bits(3.0),
                ),
                elapsed: 0.125,
            },
        ]
    }

    #[test]
    fn results_table_format() {
        let mut buf = Vec::new();
        write_results_csv(&mut buf, &sample_results()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "pair_id,ground_truth,direction,s_xy,s_yx,delta,elapsed_s\n\
             \"a,1\",XtoY,XtoY,10.500000,12.250000,-1.750000,0.000000\n\
             b,YtoX,Undecided,3.000000,3.000000,0.000000,0.125000\n"
        );
        let back = read_results_csv(text.as_bytes()).unwrap();
        assert_eq!(back, sample_results());
    }

    #[test]
    fn rejects_foreign_header() {
        assert!(read_results_csv("a,b\n1,2\n".as_bytes()).is_err());
    }

    #[test]
    fn curve_table_format() {
        let curve = decision_rate_curve(&sample_results(), &[0.5, 1.0]).unwrap();
        let mut buf = Vec::new();
        write_curve_csv(&mut buf, &curve).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "rate,accuracy\n0.500000,1.000000\n1.000000,0.750000\n"
        );
    }
}

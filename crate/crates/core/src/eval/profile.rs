use std::io::Write;
use std::time::Instant;

use rand::Rng;

use crate::complexity::Scorer;
use crate::error::{Error, Result};
use crate::inference::CausalVerdict;
use crate::sample::{encode_sorted, DiscreteSample};
use crate::synth::{pair_seed, stream};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileRow {
    pub n: usize,
    pub m: usize,
    /// Fastest of the timed repetitions, in seconds.
    pub seconds: f64,
    pub verdict: CausalVerdict,
}

/// Independent `X` and `Y`, each uniform on `m` symbols.
pub fn uniform_pair(n: usize, m: usize, seed: u64) -> Result<(DiscreteSample, DiscreteSample)> {
    if m == 0 {
        return Err(Error::ZeroDomain);
    }
    let mut rng = stream(seed);
    let column = |rng: &mut _| -> Result<DiscreteSample> {
        let raw: Vec<usize> = (0..n).map(|_| Rng::gen_range(rng, 0..m)).collect();
        Ok(encode_sorted(&raw)?.sample)
    };
    let x = column(&mut rng)?;
    let y = column(&mut rng)?;
    Ok((x, y))
}

/// Times inference on uniform random pairs at every `(n, m)` grid point.
///
/// Runs serially; each point reports the minimum over `repeats` runs.
pub fn runtime_profile(
    n_grid: &[usize],
    m_grid: &[usize],
    seed: u64,
    repeats: usize,
    scorer: Scorer,
) -> Result<Vec<ProfileRow>> {
    let mut rows = Vec::new();
    let mut index = 0;
    for &n in n_grid {
        for &m in m_grid {
            let (x, y) = uniform_pair(n, m, pair_seed(seed, index))?;
            index += 1;
            let mut best = f64::INFINITY;
            let mut verdict = None;
            for _ in 0..repeats.max(1) {
                let start = Instant::now();
                let v = scorer.infer(&x, &y)?;
                best = best.min(start.elapsed().as_secs_f64());
                verdict = Some(v);
            }
            rows.push(ProfileRow {
                n,
                m,
                seconds: best,
                verdict: verdict.expect("at least one repetition"),
            });
        }
    }
    Ok(rows)
}

/// Writes `n,m,seconds,s_xy,s_yx,delta`; without timing the seconds column is zero.
pub fn write_profile_csv<W: Write>(
    mut writer: W,
    rows: &[ProfileRow],
    with_timing: bool,
) -> Result<()> {
    writeln!(writer, "n,m,seconds,s_xy,s_yx,delta")?;
    for r in rows {
        writeln!(
            writer,
            "{},{},{:.6},{:.6},{:.6},{:.6}",
            r.n,
            r.m,
            if with_timing { r.seconds } else { 0.0 },
            r.verdict.s_x_to_y.bits(),
            r.verdict.s_y_to_x.bits(),
            r.verdict.delta,
        )?;
    }
    Ok(())
}

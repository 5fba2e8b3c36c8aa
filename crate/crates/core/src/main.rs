use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cisc::eval::{
    self, decision_rate_curve, list_pair_files, load_ground_truths, read_results_csv,
    run_benchmark, runtime_profile, write_curve_csv, write_profile_csv, write_results_csv,
};
use cisc::pairfile::{read_column, PairFile, PairFileOptions};
use cisc::synth::{pair_seed, synthesize, Family};
use cisc::{encode, Direction, Error, Scorer, DEFAULT_PRECISION};

#[derive(Debug, Parser)]
#[command(
    name = "cisc",
    version,
    about = "Causal direction of discrete pairs by stochastic complexity"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Master seed for generated data.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Significant digits for the normalizing sum.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: u32,

    /// Column holding X (0-based).
    #[arg(long = "x", global = true, default_value_t = 0)]
    column_x: usize,

    /// Column holding Y (0-based).
    #[arg(long = "y", global = true, default_value_t = 1)]
    column_y: usize,

    /// Skip the first data line of every input file.
    #[arg(long, global = true)]
    header: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Infer the causal direction between two columns of a file.
    Infer { file: PathBuf },

    /// Stochastic complexity of a single column, in bits.
    Sc {
        file: PathBuf,
        /// Column to score (0-based).
        #[arg(long, default_value_t = 0)]
        column: usize,
    },

    /// Write synthetic additive-noise pairs plus ground truth and manifest.
    Synth {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },

    /// Score every labeled pair file in a directory; results CSV on stdout.
    Bench {
        dir: PathBuf,
        /// `pair_id<TAB>direction` lines.
        truth: PathBuf,
        /// Write zero elapsed times for byte-stable output.
        #[arg(long)]
        no_timing: bool,
    },

    /// Accuracy against decision rate from a results CSV.
    Rate {
        results: PathBuf,
        /// Comma-separated rates in (0, 1]; defaults to 0.05, 0.10, ..., 1.00.
        #[arg(long, value_delimiter = ',')]
        rates: Vec<f64>,
    },

    /// Time inference on uniform random pairs over a grid.
    Profile {
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        n_grid: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2,20")]
        m_grid: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Write zero timings for byte-stable output.
        #[arg(long)]
        no_timing: bool,
    },
}

impl GlobalArgs {
    fn scorer(&self) -> Scorer {
        Scorer::new(self.precision)
    }

    fn pair_options(&self) -> PairFileOptions {
        PairFileOptions {
            column_x: self.column_x,
            column_y: self.column_y,
            header: self.header,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = run(&cli, &mut out).and_then(|()| out.flush().map_err(Error::from));
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numeric() { 3 } else { 2 })
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> cisc::Result<()> {
    let g = &cli.global;
    match &cli.command {
        Command::Infer { file } => cmd_infer(file, g, out),
        Command::Sc { file, column } => {
            let tokens = read_column(file, *column, g.header)?;
            let sample = encode(&tokens)?.sample;
            let bits = g.scorer().stochastic_complexity(&sample);
            if !bits.is_finite() {
                return Err(Error::NonFinite(format!("S = {}", bits.bits())));
            }
            writeln!(out, "{bits}")?;
            Ok(())
        }
        Command::Synth {
            family,
            pairs,
            n,
            out: dir,
        } => cmd_synth(*family, *pairs, *n, g.seed, dir),
        Command::Bench {
            dir,
            truth,
            no_timing,
        } => {
            let truths = load_ground_truths(truth)?;
            let files = list_pair_files(dir)?;
            let report = run_benchmark(&files, &truths, g.scorer(), g.pair_options(), !no_timing);
            for (id, reason) in &report.failures {
                eprintln!("skipped {id}: {reason}");
            }
            write_results_csv(&mut *out, &report.results)?;
            if let Ok(acc) = eval::accuracy(&report.results) {
                eprintln!(
                    "scored {} of {} pairs, accuracy {acc:.4}",
                    report.results.len(),
                    truths.len()
                );
            }
            Ok(())
        }
        Command::Rate { results, rates } => {
            let file = fs::File::open(results).map_err(|source| Error::File {
                path: results.display().to_string(),
                source,
            })?;
            let results = read_results_csv(file)?;
            let rates = if rates.is_empty() {
                eval::default_rates()
            } else {
                rates.clone()
            };
            let curve = decision_rate_curve(&results, &rates)?;
            write_curve_csv(out, &curve)
        }
        Command::Profile {
            n_grid,
            m_grid,
            repeats,
            no_timing,
        } => {
            let rows = runtime_profile(n_grid, m_grid, g.seed, *repeats, g.scorer())?;
            write_profile_csv(out, &rows, !no_timing)
        }
    }
}

fn cmd_infer(file: &Path, g: &GlobalArgs, out: &mut impl Write) -> cisc::Result<()> {
    let pair = PairFile::read(file, g.pair_options())?;
    let (x, y) = pair.encode()?;
    let v = g.scorer().infer(&x.sample, &y.sample)?;
    let direction = match v.direction {
        Direction::XtoY => "x->y",
        Direction::YtoX => "y->x",
        Direction::Undecided => "undecided",
    };
    writeln!(out, "direction\t{direction}")?;
    writeln!(out, "s_xy\t{:.6}", v.s_x_to_y.bits())?;
    writeln!(out, "s_yx\t{:.6}", v.s_y_to_x.bits())?;
    writeln!(out, "delta\t{:.6}", v.delta)?;
    writeln!(out, "confidence\t{:.6}", v.confidence)?;
    Ok(())
}

/// Writes `<id>.txt` per pair (raw integer columns), `truth.tsv` and `manifest.tsv`.
fn cmd_synth(family: Family, pairs: usize, n: usize, seed: u64, dir: &Path) -> cisc::Result<()> {
    fs::create_dir_all(dir).map_err(|source| Error::File {
        path: dir.display().to_string(),
        source,
    })?;
    let mut truth = String::new();
    let mut manifest = String::from("pair_id\tground_truth\tseed\tclass\tt\n");
    let config = eval::CampaignConfig::new(family, pairs, n, seed);
    for index in 0..pairs {
        let id = config.pair_id(index);
        let pair_seed = pair_seed(seed, index as u64);
        let pair = synthesize(family, n, pair_seed)?;
        let mut body = String::with_capacity(n * 8);
        for (x, y) in pair.raw_x().into_iter().zip(pair.raw_y()) {
            body.push_str(&format!("{x} {y}\n"));
        }
        fs::write(dir.join(format!("{id}.txt")), body)?;
        truth.push_str(&format!("{id}\t{}\n", pair.ground_truth));
        manifest.push_str(&format!(
            "{id}\t{}\t{pair_seed}\t{}\t{}\n",
            pair.ground_truth,
            pair.class.describe(),
            pair.anm.t
        ));
    }
    fs::write(dir.join("truth.tsv"), truth)?;
    fs::write(dir.join("manifest.tsv"), manifest)?;
    Ok(())
}

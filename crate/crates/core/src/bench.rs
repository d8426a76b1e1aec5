//! Instrumented runs over input families and a two-model scaling fit.
//!
//! The currency is the operation counter of each engine: triples touched
//! for the fast algorithm, start positions visited for the quadratic one.
//! Wall-clock time is recorded but only informational.

use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fast::FastState;
use crate::generators::{self, Zimin, RNG_NAME};
use crate::naive::QuadraticState;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Zimin { n: usize },
    Random { n: usize, sigma: u32, seed: u64 },
    Repeated { n: usize },
    File(PathBuf),
}

impl Family {
    pub fn seed(&self) -> Option<u64> {
        match self {
            Family::Random { seed, .. } => Some(*seed),
            _ => None,
        }
    }

    fn symbols(&self) -> Result<Vec<u64>> {
        Ok(match self {
            Family::Zimin { n } => Zimin::new().take(*n).collect(),
            Family::Random { n, sigma, seed } => {
                generators::random_text(*n, *sigma, *seed).as_slice().iter().map(|&c| c as u64).collect()
            }
            Family::Repeated { n } => vec![0; *n],
            Family::File(path) => std::fs::read(path)
                .map_err(|source| Error::Io { path: path.clone(), source })?
                .into_iter()
                .map(u64::from)
                .collect(),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Zimin { n } => write!(f, "zimin(n={n})"),
            Family::Random { n, sigma, seed } => write!(f, "random(n={n},sigma={sigma},seed={seed})"),
            Family::Repeated { n } => write!(f, "repeated(n={n})"),
            Family::File(path) => write!(f, "file({})", path.display()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    #[default]
    Fast,
    Quadratic,
}

/// Counters for one round.
///
/// For the quadratic engine `gap_triples` holds the uncompressed set size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RoundStats {
    pub j: usize,
    pub gap_triples: usize,
    pub triples_processed: u64,
    pub suffix_palindromes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunSummary {
    pub n: usize,
    pub family: String,
    pub seed: Option<u64>,
    pub rng: Option<&'static str>,
    pub engine: Engine,
    pub total_triples: u64,
    pub mean_suffix_palindromes: f64,
    pub wall_clock_millis: f64,
    pub final_pl: usize,
}

impl RunSummary {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }
}

/// Run `engine` over `family`, passing each round's counters to `observe`.
pub fn run_instrumented<F>(family: &Family, engine: Engine, mut observe: F) -> Result<RunSummary>
where
    F: FnMut(&RoundStats),
{
    let symbols = family.symbols()?;
    let n = symbols.len();
    let started = Instant::now();
    let mut suffix_total = 0u64;
    let (total, final_pl) = match engine {
        Engine::Fast => {
            let mut state = FastState::with_capacity(n);
            for (idx, c) in symbols.into_iter().enumerate() {
                state.push(c);
                let stats = RoundStats {
                    j: idx + 1,
                    gap_triples: state.gap_triples().len(),
                    triples_processed: state.round_triples(),
                    suffix_palindromes: state.suffix_palindromes(),
                };
                suffix_total += stats.suffix_palindromes as u64;
                observe(&stats);
            }
            (state.triples_processed(), state.pl())
        }
        Engine::Quadratic => {
            let mut state = QuadraticState::new();
            let mut pl = 0;
            for (idx, c) in symbols.into_iter().enumerate() {
                let before = state.elements();
                pl = state.push(c);
                let size = state.starts().len();
                let stats = RoundStats {
                    j: idx + 1,
                    gap_triples: size,
                    triples_processed: state.elements() - before,
                    suffix_palindromes: size,
                };
                suffix_total += size as u64;
                observe(&stats);
            }
            (state.elements(), pl)
        }
    };
    let wall = started.elapsed().as_secs_f64() * 1e3;
    Ok(RunSummary {
        n,
        family: family.to_string(),
        seed: family.seed(),
        rng: family.seed().map(|_| RNG_NAME),
        engine,
        total_triples: total,
        mean_suffix_palindromes: if n == 0 { 0.0 } else { suffix_total as f64 / n as f64 },
        wall_clock_millis: wall,
        final_pl,
    })
}

/// Run every family, spreading work over `jobs` threads. Results keep the
/// input order.
pub fn run_many(families: &[Family], engine: Engine, jobs: usize) -> Vec<Result<RunSummary>> {
    let jobs = jobs.max(1).min(families.len().max(1));
    let mut results: Vec<Option<Result<RunSummary>>> = (0..families.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let chunks = results.chunks_mut(families.len().div_ceil(jobs).max(1));
        for (chunk_idx, chunk) in chunks.enumerate() {
            let base = chunk_idx * families.len().div_ceil(jobs).max(1);
            scope.spawn(move || {
                for (off, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(run_instrumented(&families[base + off], engine, |_| {}));
                }
            });
        }
    });
    results.into_iter().map(|r| r.expect("every slot filled")).collect()
}

/// Writes per-round rows as `j,gap_triples,triples_processed`.
pub struct CsvSink<W: Write> {
    out: W,
}

impl<W: Write> CsvSink<W> {
    pub fn new(mut out: W, family: &Family, engine: Engine) -> io::Result<Self> {
        write!(out, "# family={family} engine={engine:?}")?;
        if let Some(seed) = family.seed() {
            write!(out, " seed={seed} rng={RNG_NAME}")?;
        }
        writeln!(out)?;
        writeln!(out, "j,gap_triples,triples_processed")?;
        Ok(CsvSink { out })
    }

    pub fn row(&mut self, s: &RoundStats) -> io::Result<()> {
        writeln!(self.out, "{},{},{}", s.j, s.gap_triples, s.triples_processed)
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.out.flush()?;
        Ok(self.out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Model {
    Linear,
    NLogN,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingRow {
    pub n: usize,
    pub total: f64,
    pub per_n: f64,
    pub per_n_log_n: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingReport {
    pub linear_coef: f64,
    pub linear_residual: f64,
    pub nlogn_coef: f64,
    pub nlogn_residual: f64,
    pub winner: Model,
    pub rows: Vec<ScalingRow>,
}

/// Minimum number of distinct sizes accepted by [`fit_scaling`].
pub const MIN_FIT_SIZES: usize = 4;

/// Fit `total ≈ c·n` and `total ≈ c·n·log2 n` by least squares on relative
/// error and report the better model. Runs sharing a size are averaged.
pub fn fit_scaling(summaries: &[RunSummary]) -> Result<ScalingReport> {
    let mut sizes: Vec<usize> = summaries.iter().map(|s| s.n).filter(|&n| n >= 2).collect();
    sizes.sort_unstable();
    sizes.dedup();
    if sizes.len() < MIN_FIT_SIZES {
        return Err(Error::TooFewSizes { need: MIN_FIT_SIZES, got: sizes.len() });
    }
    let rows: Vec<ScalingRow> = sizes
        .iter()
        .map(|&n| {
            let runs: Vec<f64> = summaries.iter().filter(|s| s.n == n).map(|s| s.total_triples as f64).collect();
            let total = runs.iter().sum::<f64>() / runs.len() as f64;
            let nf = n as f64;
            ScalingRow { n, total, per_n: total / nf, per_n_log_n: total / (nf * nf.log2()) }
        })
        .collect();
    let fit = |model: fn(f64) -> f64| {
        // minimise sum((1 - c * f / y)^2)
        let ratios: Vec<f64> = rows.iter().map(|r| model(r.n as f64) / r.total).collect();
        let c = ratios.iter().sum::<f64>() / ratios.iter().map(|q| q * q).sum::<f64>();
        let residual = ratios.iter().map(|q| (1.0 - c * q).powi(2)).sum::<f64>();
        (c, residual)
    };
    let (linear_coef, linear_residual) = fit(|n| n);
    let (nlogn_coef, nlogn_residual) = fit(|n| n * n.log2());
    let winner = if nlogn_residual < linear_residual { Model::NLogN } else { Model::Linear };
    Ok(ScalingReport { linear_coef, linear_residual, nlogn_coef, nlogn_residual, winner, rows })
}

impl fmt::Display for ScalingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>10} {:>14} {:>10} {:>12}", "n", "total", "total/n", "total/nlogn")?;
        for r in &self.rows {
            writeln!(f, "{:>10} {:>14.1} {:>10.4} {:>12.4}", r.n, r.total, r.per_n, r.per_n_log_n)?;
        }
        writeln!(f, "linear: c = {:.4}, residual = {:.3e}", self.linear_coef, self.linear_residual)?;
        writeln!(f, "n log n: c = {:.4}, residual = {:.3e}", self.nlogn_coef, self.nlogn_residual)?;
        write!(f, "winner: {:?}", self.winner)
    }
}

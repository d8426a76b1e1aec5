use std::fmt::Display;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use palfact::bench::{self, CsvSink, Engine, Family, RunSummary};
use palfact::generators::{format_symbols, parse_symbols, Zimin};
use palfact::{
    bitcount, factorize, pl_fast, pl_oracle, pl_quadratic, verify_factorization, FastState, PlRecord, Text,
    DEFAULT_ORACLE_CAP,
};

/// Palindromic length and minimum palindromic factorization.
#[derive(Parser)]
#[command(name = "palfact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the palindromic length of the input
    Pl {
        #[command(flatten)]
        input: InputArgs,
        /// Print the length of every prefix, one per line, starting with the empty prefix
        #[arg(long)]
        all_prefixes: bool,
        #[arg(long, value_enum, default_value_t = Algorithm::Fast)]
        algorithm: Algorithm,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Print a minimum palindromic factorization of the input
    Factorize {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value_t = Algorithm::Fast)]
        algorithm: Algorithm,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Print the first N symbols of the Zimin word
    Zimin {
        n: usize,
        /// Also print |G_j| for every round and compare it with the bit count of j
        #[arg(long)]
        stats: bool,
    },
    /// Cross-check all algorithms on the input and each of its prefixes
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Instrumented runs with operation counts
    Bench(BenchArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input file; standard input when absent or "-"
    file: Option<PathBuf>,
    /// Read whitespace-separated decimal symbols instead of raw bytes
    #[arg(long)]
    decimal: bool,
    /// Keep a trailing newline in byte mode
    #[arg(long)]
    keep_newline: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Fast,
    Quadratic,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Zimin,
    Random,
    Repeated,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Fast,
    Quadratic,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value_t = FamilyKind::Zimin)]
    family: FamilyKind,
    #[arg(long, default_value_t = 1 << 16)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    sigma: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Input file for --family file
    #[arg(long)]
    path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
    engine: EngineArg,
    /// Write per-round CSV rows to this path ("-" for standard output)
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Print summaries as JSON lines
    #[arg(long)]
    json: bool,
    /// Run sizes 2^LO..=2^HI and fit linear vs n log n, e.g. 10..17
    #[arg(long)]
    sweep: Option<String>,
    /// Seeds per size in a random sweep
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

enum Failure {
    Verification(String),
    Usage(String),
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Pl { input, all_prefixes, algorithm, oracle_cap } => {
            with_input(&input, |t| cmd_pl(t, all_prefixes, algorithm, oracle_cap))
        }
        Command::Factorize { input, json, algorithm, oracle_cap } => {
            let decimal = input.decimal;
            with_input(&input, |t| cmd_factorize(t, json, decimal, algorithm, oracle_cap))
        }
        Command::Zimin { n, stats } => cmd_zimin(n, stats),
        Command::Verify { input, oracle_cap } => with_input(&input, |t| cmd_verify(t, oracle_cap)),
        Command::Bench(args) => cmd_bench(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("palfact: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("palfact: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Symbols the commands can print.
trait Render {
    fn render(part: &[Self]) -> String
    where
        Self: Sized;
}

impl Render for u8 {
    fn render(part: &[u8]) -> String {
        String::from_utf8_lossy(part).into_owned()
    }
}

impl Render for u64 {
    fn render(part: &[u64]) -> String {
        format_symbols(part)
    }
}

enum Input {
    Bytes(Text<u8>),
    Decimal(Text<u64>),
}

fn read_input(args: &InputArgs) -> Result<Input, Failure> {
    let mut raw = Vec::new();
    match &args.file {
        Some(path) if path.as_os_str() != "-" => {
            File::open(path)
                .and_then(|mut f| f.read_to_end(&mut raw))
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        }
        _ => {
            io::stdin().read_to_end(&mut raw)?;
        }
    }
    if args.decimal {
        let s = String::from_utf8(raw).map_err(|_| Failure::Usage("decimal input is not UTF-8".into()))?;
        return Ok(Input::Decimal(parse_symbols(&s)?));
    }
    if !args.keep_newline && raw.last() == Some(&b'\n') {
        raw.pop();
        if raw.last() == Some(&b'\r') {
            raw.pop();
        }
    }
    Ok(Input::Bytes(Text::new(raw)))
}

fn with_input<F>(args: &InputArgs, f: F) -> CmdResult
where
    F: Fn(&dyn ErasedText) -> CmdResult,
{
    match read_input(args)? {
        Input::Bytes(t) => f(&t),
        Input::Decimal(t) => f(&t),
    }
}

/// Object-safe view of a text used by the command bodies.
trait ErasedText {
    fn len(&self) -> usize;
    fn records(&self, algorithm: Algorithm, cap: usize) -> Result<Vec<PlRecord>, Failure>;
    fn render(&self, from: usize, to: usize) -> String;
    fn verify(&self, f: &palfact::Factorization, pl: usize) -> bool;
    fn factorize(&self, records: &[PlRecord]) -> Result<palfact::Factorization, Failure>;
}

impl<S: Eq + Clone + Render> ErasedText for Text<S> {
    fn len(&self) -> usize {
        Text::len(self)
    }

    fn records(&self, algorithm: Algorithm, cap: usize) -> Result<Vec<PlRecord>, Failure> {
        Ok(match algorithm {
            Algorithm::Fast => pl_fast(self),
            Algorithm::Quadratic => pl_quadratic(self),
            Algorithm::Oracle => pl_oracle(self, cap)?,
        })
    }

    fn render(&self, from: usize, to: usize) -> String {
        S::render(self.slice(from, to))
    }

    fn verify(&self, f: &palfact::Factorization, pl: usize) -> bool {
        verify_factorization(self, f, pl)
    }

    fn factorize(&self, records: &[PlRecord]) -> Result<palfact::Factorization, Failure> {
        factorize(self, records).map_err(|e| Failure::Verification(e.to_string()))
    }
}

fn cmd_pl(t: &dyn ErasedText, all_prefixes: bool, algorithm: Algorithm, cap: usize) -> CmdResult {
    let records = t.records(algorithm, cap)?;
    let mut out = BufWriter::new(io::stdout().lock());
    if all_prefixes {
        for r in &records {
            writeln!(out, "{}", r.pl)?;
        }
    } else {
        writeln!(out, "{}", records[t.len()].pl)?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonPart {
    start: usize,
    length: usize,
    text: String,
}

#[derive(Serialize)]
struct JsonFactorization {
    pl: usize,
    parts: Vec<JsonPart>,
}

fn cmd_factorize(t: &dyn ErasedText, json: bool, decimal: bool, algorithm: Algorithm, cap: usize) -> CmdResult {
    let records = t.records(algorithm, cap)?;
    let pl = records[t.len()].pl;
    let f = t.factorize(&records)?;
    if !t.verify(&f, pl) {
        return Err(Failure::Verification(format!("factorization {f} failed verification")));
    }
    let texts: Vec<String> = f.parts.iter().map(|p| t.render(p.start, p.end())).collect();
    if json {
        let doc = JsonFactorization {
            pl,
            parts: f
                .parts
                .iter()
                .zip(texts)
                .map(|(p, text)| JsonPart { start: p.start, length: p.length, text })
                .collect(),
        };
        println!("{}", serde_json::to_string(&doc)?);
    } else {
        let sep = if decimal { " | " } else { "|" };
        println!("{}", texts.join(sep));
    }
    Ok(())
}

fn cmd_zimin(n: usize, stats: bool) -> CmdResult {
    let mut out = BufWriter::new(io::stdout().lock());
    if n > 0 {
        let symbols: Vec<u64> = Zimin::new().take(n).collect();
        writeln!(out, "{}", format_symbols(&symbols))?;
    }
    if !stats {
        out.flush()?;
        return Ok(());
    }
    writeln!(out, "# j,gap_triples,bitcount,match")?;
    let mut state = FastState::with_capacity(n);
    let mut first_mismatch = None;
    for (idx, c) in Zimin::new().take(n).enumerate() {
        state.push(c);
        let j = idx + 1;
        let g = state.gap_triples().len();
        let b = bitcount(j as u64) as usize;
        let ok = g == b;
        if !ok && first_mismatch.is_none() {
            first_mismatch = Some(j);
        }
        writeln!(out, "{j},{g},{b},{}", if ok { "yes" } else { "no" })?;
    }
    match first_mismatch {
        None => writeln!(out, "# all {n} rounds match")?,
        Some(j) => {
            out.flush()?;
            return Err(Failure::Verification(format!("|G_j| differs from B(j) at round {j}")));
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_verify(t: &dyn ErasedText, cap: usize) -> CmdResult {
    let n = t.len();
    let fast = t.records(Algorithm::Fast, cap)?;
    let quad = t.records(Algorithm::Quadratic, cap)?;
    let oracle = if n <= cap { Some(t.records(Algorithm::Oracle, cap)?) } else { None };
    for j in 0..=n {
        let o = oracle.as_ref().map(|o| o[j].pl);
        if fast[j].pl != quad[j].pl || o.is_some_and(|o| o != fast[j].pl) {
            let o = o.map_or("skipped".to_string(), |v| v.to_string());
            return Err(Failure::Verification(format!(
                "mismatch at prefix {j}: fast={} quadratic={} oracle={o}",
                fast[j].pl, quad[j].pl
            )));
        }
    }
    for (name, records) in [("fast", &fast), ("quadratic", &quad)] {
        let f = t.factorize(records)?;
        if !t.verify(&f, records[n].pl) {
            return Err(Failure::Verification(format!("{name} factorization failed verification")));
        }
    }
    let engines = if oracle.is_some() { "fast,quadratic,oracle" } else { "fast,quadratic (oracle skipped: above cap)" };
    println!("ok: n={n} pl={} prefixes={} engines={engines}", fast[n].pl, n + 1);
    Ok(())
}

fn family(args: &BenchArgs, n: usize, seed: u64) -> Result<Family, Failure> {
    Ok(match args.family {
        FamilyKind::Zimin => Family::Zimin { n },
        FamilyKind::Random => Family::Random { n, sigma: args.sigma.max(1), seed },
        FamilyKind::Repeated => Family::Repeated { n },
        FamilyKind::File => {
            Family::File(args.path.clone().ok_or_else(|| Failure::Usage("--family file needs --path".into()))?)
        }
    })
}

fn print_summary(s: &RunSummary, json: bool) {
    if json {
        println!("{}", s.to_json_line());
    } else {
        println!(
            "{}: n={} total_triples={} mean_suffix_palindromes={:.4} final_pl={} wall_ms={:.1}",
            s.family, s.n, s.total_triples, s.mean_suffix_palindromes, s.final_pl, s.wall_clock_millis
        );
    }
}

fn cmd_bench(args: &BenchArgs) -> CmdResult {
    let engine = match args.engine {
        EngineArg::Fast => Engine::Fast,
        EngineArg::Quadratic => Engine::Quadratic,
    };
    if let Some(range) = &args.sweep {
        let (lo, hi) = range
            .split_once("..")
            .and_then(|(a, b)| Some((a.parse::<u32>().ok()?, b.trim_start_matches('=').parse::<u32>().ok()?)))
            .ok_or_else(|| Failure::Usage(format!("bad --sweep {range:?}, expected LO..HI")))?;
        let mut families = Vec::new();
        for k in lo..=hi {
            for seed in 0..args.seeds.max(1) {
                families.push(family(args, 1usize << k, args.seed + seed)?);
            }
        }
        let mut summaries = Vec::new();
        for s in bench::run_many(&families, engine, args.jobs) {
            let s = s?;
            print_summary(&s, args.json);
            summaries.push(s);
        }
        let report = bench::fit_scaling(&summaries)?;
        if args.json {
            println!("{}", serde_json::to_string(&report)?);
        } else {
            println!("{report}");
        }
        return Ok(());
    }
    let fam = family(args, args.n, args.seed)?;
    let summary = match &args.csv {
        Some(path) => {
            let out: Box<dyn Write> = if path.as_os_str() == "-" {
                Box::new(BufWriter::new(io::stdout().lock()))
            } else {
                Box::new(BufWriter::new(
                    File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
                ))
            };
            let mut sink = CsvSink::new(out, &fam, engine)?;
            let mut write_err = None;
            let s = bench::run_instrumented(&fam, engine, |r| {
                if let Err(e) = sink.row(r) {
                    write_err.get_or_insert(e);
                }
            })?;
            if let Some(e) = write_err {
                return Err(e.into());
            }
            sink.finish()?;
            s
        }
        None => bench::run_instrumented(&fam, engine, |_| {})?,
    };
    if args.csv.as_deref().is_some_and(|p| p.as_os_str() == "-") {
        eprintln!("{}", summary.to_json_line());
    } else {
        print_summary(&summary, args.json);
    }
    Ok(())
}

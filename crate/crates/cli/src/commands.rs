use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use hosens_amplify::{modified_power, plain_power, shifted_power, ComposedFunction};
use hosens_circuits::{amplified_circuit, append_parity, Netlist};
use hosens_core::{
    bits, from_text, pdeg, profile, sensitivity_at, sensitivity_order_at, to_text, FunctionProfile, TruthTable,
    MAX_VARS,
};
use hosens_feasibility::{decode_solution, encode_existence, export_lp, parse_lp, solve_feasibility, Verdict};
use hosens_mm::{
    build_korder, build_th1, korder_witness, ladder_reduce, ladder_reduce_korder, mm_truth_table, MMSpec, TermLedger,
};
use hosens_search::{rotsym_search, run_query, ProfileQuery};

use crate::recipes::{self, Budget, RECIPES};
use crate::{read, write, CliError, EXIT_FAILURE, EXIT_INFEASIBLE, EXIT_OK, EXIT_UNKNOWN};

#[derive(Debug, Parser)]
#[command(name = "hosens", version, about = "Sensitivity, degree and resiliency experiments on Boolean functions")]
pub struct Cli {
    /// Worker threads for parallel loops (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the profile of a truth table as JSON.
    Analyze {
        #[arg(long)]
        tt: PathBuf,
    },
    /// Enumerate functions by resiliency and dual sensitivity order.
    Search(SearchArgs),
    /// Encode and solve existence systems.
    #[command(subcommand)]
    Feas(FeasCommand),
    /// Compose a base function with itself.
    Amplify(AmplifyArgs),
    /// Maiorana-McFarland constructions.
    #[command(subcommand)]
    Mm(MmCommand),
    /// Layered circuits for composed functions.
    #[command(subcommand)]
    Circuit(CircuitCommand),
    /// Rerun reproduction recipes.
    Repro(ReproArgs),
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    resiliency: i32,
    /// Minimum dual sensitivity order.
    #[arg(long)]
    dual_order: usize,
    /// Search rotation-symmetric functions only (n <= 10).
    #[arg(long)]
    rotsym: bool,
    /// Directory for the found tables and counts.json.
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum FeasCommand {
    /// Write the system for "pdeg <= p and full sensitivity at the witness".
    Encode {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pdeg: usize,
        /// Witness point index.
        #[arg(long, default_value_t = 0)]
        witness: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an LP file with the internal bounded solver.
    Solve {
        file: PathBuf,
        /// Branching node budget; accepts forms like 1e8.
        #[arg(long, default_value = "1e7", value_parser = parse_count)]
        nodes: u64,
        /// Write the decoded table of a feasible solution here.
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AmplifyMode {
    Plain,
    Modified,
    Shifted,
}

#[derive(Debug, Args)]
struct AmplifyArgs {
    #[arg(long)]
    base: PathBuf,
    #[arg(long)]
    levels: usize,
    #[arg(long, value_enum)]
    mode: AmplifyMode,
    /// Witness point of the base, in hex (modified mode).
    #[arg(long, value_parser = parse_hex)]
    witness: Option<usize>,
    /// Complemented slots as a bitstring x_1 x_2 ... (shifted mode).
    #[arg(long)]
    constants: Option<String>,
    /// Print the composed truth table instead of the report.
    #[arg(long, conflicts_with = "report")]
    emit_table: bool,
    /// Print the JSON report (the default).
    #[arg(long)]
    report: bool,
}

#[derive(Debug, Subcommand)]
enum MmCommand {
    /// Build and verify a construction.
    Build {
        #[arg(long, value_enum)]
        mode: MmMode,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        /// Sensitivity order for the korder modes.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum MmMode {
    Th1,
    Ladder,
    Korder,
    KorderLadder,
}

#[derive(Debug, Subcommand)]
enum CircuitCommand {
    /// Stack a base netlist into a layered circuit.
    Amplify {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        levels: usize,
        /// Keep a sensitivity witness alive through every level.
        #[arg(long, requires = "witness")]
        modified: bool,
        #[arg(long, value_parser = parse_hex)]
        witness: Option<usize>,
        /// XOR the parity of all inputs into the output.
        #[arg(long)]
        parity: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print gate counts and depth as JSON.
        #[arg(long)]
        stats: bool,
    },
}

#[derive(Debug, Args)]
struct ReproArgs {
    /// Recipe id; see --list.
    #[arg(required_unless_present_any = ["list", "all"])]
    id: Option<String>,
    /// Largest budget class to run.
    #[arg(long, value_enum, default_value_t = Budget::Fast)]
    budget: Budget,
    /// List recipe ids with their budgets.
    #[arg(long)]
    list: bool,
    /// Run every recipe.
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// Also write the JSON reports to this file, one per line.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
        _ => Err(format!("{s:?} is not a node count")),
    }
}

fn parse_hex(s: &str) -> Result<usize, String> {
    let t = s.trim_start_matches("0x");
    usize::from_str_radix(t, 16).map_err(|e| format!("{s:?}: {e}"))
}

fn parse_bits(s: &str, d: usize) -> Result<usize, CliError> {
    hosens_mm::parse_point(s, d).map_err(|e| CliError::Usage(format!("--constants: {e}")))
}

/// Writes to standard output, ignoring a closed pipe.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json<T: Serialize>(v: &T) -> Result<(), CliError> {
    out(&(serde_json::to_string_pretty(v)? + "\n"));
    Ok(())
}

fn read_table(path: &Path) -> Result<TruthTable, CliError> {
    Ok(from_text(&read(path)?)?)
}

impl Cli {
    pub fn execute(self) -> Result<i32, CliError> {
        let mut pool = rayon::ThreadPoolBuilder::new();
        if let Some(t) = self.threads {
            if t == 0 {
                return Err(CliError::Usage("--threads must be at least 1".into()));
            }
            pool = pool.num_threads(t);
        }
        let pool = pool.build().map_err(|e| CliError::Usage(e.to_string()))?;
        let command = self.command;
        pool.install(move || command.execute())
    }
}

impl Command {
    fn execute(self) -> Result<i32, CliError> {
        match self {
            Command::Analyze { tt } => {
                print_json(&profile(&read_table(&tt)?))?;
                Ok(EXIT_OK)
            }
            Command::Search(a) => search(a),
            Command::Feas(c) => feas(c),
            Command::Amplify(a) => amplify(a),
            Command::Mm(MmCommand::Build { mode, n1, n2, k, out, table }) => mm_build(mode, n1, n2, k, out, table),
            Command::Circuit(c) => circuit(c),
            Command::Repro(a) => repro(a),
        }
    }
}

#[derive(Serialize)]
struct SearchQuery {
    n: usize,
    resiliency: i32,
    dual_order: usize,
    rotsym: bool,
}

#[derive(Serialize)]
struct SearchSummary {
    query: SearchQuery,
    count: u64,
    wall_time_seconds: f64,
}

fn search(a: SearchArgs) -> Result<i32, CliError> {
    let start = Instant::now();
    let tables: Vec<TruthTable> = if a.rotsym {
        if a.resiliency < 0 {
            return Err(CliError::Usage("--rotsym needs a resiliency of at least 0".into()));
        }
        rotsym_search(a.n, a.resiliency as usize, a.dual_order)?
    } else {
        run_query(&ProfileQuery {
            n: a.n,
            min_resiliency: a.resiliency,
            min_dual_order: a.dual_order,
            exact_dual_order: None,
            count_only: a.emit.is_none(),
        })?
        .tables()
    };
    let count = if a.rotsym || a.emit.is_some() { tables.len() as u64 } else { run_count(&a)? };
    let summary = SearchSummary {
        query: SearchQuery { n: a.n, resiliency: a.resiliency, dual_order: a.dual_order, rotsym: a.rotsym },
        count,
        wall_time_seconds: start.elapsed().as_secs_f64(),
    };
    if let Some(dir) = &a.emit {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.clone(), source })?;
        let width = tables.len().to_string().len();
        for (i, t) in tables.iter().enumerate() {
            write(&dir.join(format!("f{i:0width$}.tt")), &to_text(t))?;
        }
        write(&dir.join("counts.json"), &serde_json::to_string_pretty(&summary)?)?;
    }
    print_json(&summary)?;
    Ok(EXIT_OK)
}

fn run_count(a: &SearchArgs) -> Result<u64, CliError> {
    Ok(run_query(&ProfileQuery {
        n: a.n,
        min_resiliency: a.resiliency,
        min_dual_order: a.dual_order,
        exact_dual_order: None,
        count_only: true,
    })?
    .count)
}

#[derive(Serialize)]
struct EncodeSummary {
    n: usize,
    pdeg: usize,
    witness: usize,
    variables: usize,
    equalities: usize,
}

#[derive(Serialize)]
struct SolveSummary {
    verdict: &'static str,
    nodes: u64,
}

fn feas(c: FeasCommand) -> Result<i32, CliError> {
    match c {
        FeasCommand::Encode { n, pdeg, witness, out } => {
            let sys = encode_existence(n, pdeg, witness)?;
            write(&out, &export_lp(&sys))?;
            print_json(&EncodeSummary {
                n,
                pdeg,
                witness,
                variables: sys.num_vars(),
                equalities: sys.equalities().len(),
            })?;
            Ok(EXIT_OK)
        }
        FeasCommand::Solve { file, nodes, table } => {
            let sys = parse_lp(&read(&file)?)?;
            let out = solve_feasibility(&sys, nodes)?;
            print_json(&SolveSummary { verdict: out.verdict.name(), nodes: out.nodes })?;
            match out.verdict {
                Verdict::Feasible(y) => {
                    if let Some(path) = table {
                        write(&path, &to_text(&decode_solution(&sys, &y)?))?;
                    }
                    Ok(EXIT_OK)
                }
                Verdict::Infeasible => Ok(EXIT_INFEASIBLE),
                Verdict::Unknown => Ok(EXIT_UNKNOWN),
            }
        }
    }
}

#[derive(Serialize)]
struct AmplifyReport {
    mode: hosens_amplify::Mode,
    d: usize,
    levels: usize,
    n: usize,
    /// "exact" (full table) or "sampled" (spectral samples and point checks).
    method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<FunctionProfile>,
    /// `pdeg(base)^levels`.
    pdeg_law: usize,
    /// Sensitivity order of the base at the witness, modified mode only.
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_order: Option<usize>,
    /// Whether the composed function keeps that order at the repeated
    /// witness, checked on the table or on every flip set.
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_order_verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    walsh_samples: Option<WalshSamples>,
}

#[derive(Serialize)]
struct WalshSamples {
    seed: u64,
    samples: usize,
    nonzero: usize,
    max_abs: String,
}

const MAX_FLIP_SETS: u64 = 1 << 22;

fn compose(f: &TruthTable, a: &AmplifyArgs) -> Result<ComposedFunction, CliError> {
    Ok(match a.mode {
        AmplifyMode::Plain => plain_power(f, a.levels)?,
        AmplifyMode::Modified => {
            let w = a.witness.ok_or_else(|| CliError::Usage("--mode modified needs --witness".into()))?;
            modified_power(f, a.levels, w)?
        }
        AmplifyMode::Shifted => {
            let c = a.constants.as_deref().ok_or_else(|| CliError::Usage("--mode shifted needs --constants".into()))?;
            shifted_power(f, a.levels, parse_bits(c, f.n())?)?
        }
    })
}

fn amplify(a: AmplifyArgs) -> Result<i32, CliError> {
    let base = read_table(&a.base)?;
    let c = compose(&base, &a)?;
    let n = c.n();
    if a.emit_table {
        out(&to_text(&c.to_truth_table()?));
        return Ok(EXIT_OK);
    }
    let witness_order = c.witness_point().map(|_| sensitivity_order_at(&base, a.witness.unwrap_or(0)));
    let mut report = AmplifyReport {
        mode: c.mode().clone(),
        d: base.n(),
        levels: a.levels,
        n,
        method: "exact",
        profile: None,
        pdeg_law: pdeg(&base).pow(a.levels as u32),
        witness_order,
        witness_order_verified: None,
        walsh_samples: None,
    };
    if n <= MAX_VARS {
        let t = c.to_truth_table()?;
        if let (Some(k), Some(y)) = (witness_order, c.witness_point()) {
            report.witness_order_verified = Some(hosens_core::is_k_order_sensitive_at(&t, bits::index_of(&y), k));
        }
        report.profile = Some(profile(&t));
    } else {
        report.method = "sampled";
        if let (Some(k), Some(y)) = (witness_order, c.witness_point()) {
            let sets: u64 = (1..=k).map(|j| bits::binomial(n as u64, j as u64)).sum();
            if n <= 64 && sets <= MAX_FLIP_SETS {
                report.witness_order_verified = Some(flips_change_value(&c, &y, k)?);
            }
        }
        let seed = 0;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples = 1000;
        let mut nonzero = 0;
        let mut max_abs = 0u128;
        for _ in 0..samples {
            let w: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            let v = c.walsh_at(&w)?;
            nonzero += usize::from(v != 0);
            max_abs = max_abs.max(v.unsigned_abs());
        }
        report.walsh_samples = Some(WalshSamples { seed, samples, nonzero, max_abs: max_abs.to_string() });
    }
    print_json(&report)?;
    Ok(EXIT_OK)
}

/// Every flip set of size `1..=k` at `y` changes the value of `c`.
fn flips_change_value(c: &ComposedFunction, y: &[bool], k: usize) -> Result<bool, CliError> {
    let n = y.len();
    let v = c.eval(y)?;
    for j in 1..=k {
        for s in bits::subsets_of_size(n, j) {
            let x: Vec<bool> = y.iter().enumerate().map(|(t, &b)| b ^ (s >> t & 1 == 1)).collect();
            if c.eval(&x)? == v {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct MmFile<'a> {
    #[serde(flatten)]
    spec: &'a MMSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    ledger: Option<&'a TermLedger>,
}

#[derive(Serialize)]
struct MmSummary {
    mode: MmMode,
    n1: usize,
    n2: usize,
    witness: usize,
    order: usize,
    order_verified: bool,
    sensitivity_at_witness: usize,
    pdeg: usize,
    levels: Option<usize>,
}

fn mm_build(
    mode: MmMode,
    n1: usize,
    n2: usize,
    k: Option<usize>,
    spec_out: Option<PathBuf>,
    table: Option<PathBuf>,
) -> Result<i32, CliError> {
    // Full sensitivity sits at the all-ones point; order k at (1_{n1}, 0_{n2}).
    let top = (1usize << (n1 + n2)) - 1;
    let need_k = || k.ok_or_else(|| CliError::Usage("--k is required for the korder modes".into()));
    let (spec, ledger, levels, witness, order) = match mode {
        MmMode::Th1 => (build_th1(n1, n2)?, None, None, top, 1),
        MmMode::Ladder => {
            let l = ladder_reduce(n1, n2)?;
            (l.spec, Some(l.ledger), Some(l.reduction), top, 1)
        }
        MmMode::Korder => {
            let k = need_k()?;
            (build_korder(n1, n2, k)?, None, None, korder_witness(n1), k)
        }
        MmMode::KorderLadder => {
            let k = need_k()?;
            let l = ladder_reduce_korder(n1, n2, k)?;
            (l.spec, Some(l.ledger), Some(l.reduction), korder_witness(n1), k)
        }
    };
    let t = mm_truth_table(&spec)?;
    let summary = MmSummary {
        mode,
        n1,
        n2,
        witness,
        order,
        order_verified: hosens_core::is_k_order_sensitive_at(&t, witness, order),
        sensitivity_at_witness: sensitivity_at(&t, witness),
        pdeg: pdeg(&t),
        levels,
    };
    if let Some(path) = spec_out {
        write(&path, &serde_json::to_string_pretty(&MmFile { spec: &spec, ledger: ledger.as_ref() })?)?;
    }
    if let Some(path) = table {
        write(&path, &to_text(&t))?;
    }
    print_json(&summary)?;
    Ok(EXIT_OK)
}

fn circuit(c: CircuitCommand) -> Result<i32, CliError> {
    let CircuitCommand::Amplify { base, levels, modified, witness, parity, out: dest, stats } = c;
    let net = Netlist::parse(&read(&base)?)?;
    let f = net.truth_table()?;
    let composed = if modified { modified_power(&f, levels, witness.unwrap_or(0))? } else { plain_power(&f, levels)? };
    let mut g = amplified_circuit(&net, &composed)?;
    if parity {
        g = append_parity(&g)?;
    }
    match dest {
        Some(path) => write(&path, &g.emit())?,
        None if !stats => out(&g.emit()),
        None => {}
    }
    if stats {
        print_json(&g.stats())?;
    }
    Ok(EXIT_OK)
}

fn repro(a: ReproArgs) -> Result<i32, CliError> {
    if a.list {
        for r in RECIPES {
            out(&format!("{:<18} {:<9} {}\n", r.id, r.budget.name(), r.about));
        }
        return Ok(EXIT_OK);
    }
    let selected: Vec<&recipes::Recipe> = match &a.id {
        Some(id) => vec![recipes::find(id).ok_or_else(|| CliError::Usage(format!("unknown recipe {id:?}")))?],
        None => RECIPES.iter().collect(),
    };
    let mut lines = String::new();
    let mut ok = true;
    for r in selected {
        let report = r.run(a.budget)?;
        for c in &report.checks {
            eprintln!("{:<18} {:<15} {:<52} expected {:<12} got {}", r.id, c.status, c.name, c.expected, c.got);
        }
        ok &= report.passed();
        let line = serde_json::to_string(&report)?;
        lines.push_str(&line);
        lines.push('\n');
        out(&format!("{line}\n"));
    }
    if let Some(path) = a.report {
        write(&path, &lines)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_hex() {
        assert_eq!(parse_count("1e8"), Ok(100_000_000));
        assert_eq!(parse_count("12345"), Ok(12345));
        assert!(parse_count("1.5").is_err());
        assert_eq!(parse_hex("ff"), Ok(255));
        assert_eq!(parse_hex("0x1f"), Ok(31));
        assert!(parse_hex("g").is_err());
    }

    #[test]
    fn usage_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

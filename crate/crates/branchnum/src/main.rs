//! Command-line front end: analyze matrix files, verify against oracles,
//! batch directories, or print analytic cost estimates.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 singular matrix,
//! 4 verification mismatch, 5 search-space guard tripped.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use branchnum::report::{cost_to_json, cost_to_text, report_to_json, report_to_text, ReportKind};
use branchnum::{
    branch_both, branch_exhaustive, branch_exhaustive_with, branch_linear, branch_new_with,
    min_distance_code, BranchAlgo, BranchOptions, BranchReport, CostEstimate, EngineError, Field,
    FqMatrix, ParseError, DEFAULT_EXHAUSTIVE_LIMIT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Diff,
    Lin,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    New,
    Exhaustive,
    Auto,
}

#[derive(Parser, Debug)]
#[command(
    name = "branchnum",
    version,
    about = "Branch numbers of non-singular matrices over finite fields"
)]
struct Args {
    /// Matrix file to analyze (see README for the format)
    matrix: Option<PathBuf>,

    /// Which branch numbers to compute
    #[arg(long, value_enum, default_value_t = Mode::Both)]
    mode: Mode,

    /// Engine selection; auto runs the representative scan
    #[arg(long, value_enum, default_value_t = Algo::Auto)]
    algo: Algo,

    /// Re-derive the result with the exhaustive and code-distance oracles
    /// and fail on any disagreement
    #[arg(long)]
    verify: bool,

    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,

    /// Analyze every file in a directory, one JSON line per file
    #[arg(long, value_name = "DIR", conflicts_with = "matrix")]
    batch: Option<PathBuf>,

    /// Print the analytic cost model for a problem size, no matrix needed
    #[arg(long, num_args = 2, value_names = ["N", "Q"])]
    cost: Option<Vec<u64>>,

    /// Shard the representative scan across this many threads
    #[arg(long, default_value_t = 1)]
    threads: usize,

    /// Disable class filtering (result-neutral; for soundness comparisons)
    #[arg(long)]
    no_filter: bool,
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl Into<String>) -> Failure {
        Failure { code, msg: msg.into() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure::new(2, e.to_string())
    }
}

impl From<EngineError> for Failure {
    fn from(e: EngineError) -> Failure {
        let code = match e {
            EngineError::Singular => 3,
            EngineError::TooLarge { .. } => 5,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn run(args: &Args) -> Result<(), Failure> {
    if let Some(cost_args) = &args.cost {
        return run_cost(cost_args, args.json);
    }
    if let Some(dir) = &args.batch {
        return run_batch(dir, args);
    }
    if let Some(path) = &args.matrix {
        let (outcome, field) = analyze_file(path, args)?;
        if args.json {
            println!("{}", outcome.json());
        } else {
            print!(
                "{}",
                outcome.text(&field, kind_of(args.mode), path.to_str())
            );
        }
        return Ok(());
    }
    Err(Failure::new(2, "nothing to do: pass a matrix file, --batch DIR or --cost N Q"))
}

fn run_cost(cost_args: &[u64], json: bool) -> Result<(), Failure> {
    let n = cost_args[0] as usize;
    let q = cost_args[1];
    if n == 0 || q < 2 {
        return Err(Failure::new(2, "--cost requires n >= 1 and q >= 2"));
    }
    let est = CostEstimate::compute(n, q);
    if json {
        println!("{}", cost_to_json(&est));
    } else {
        print!("{}", cost_to_text(&est));
    }
    Ok(())
}

fn run_batch(dir: &Path, args: &Args) -> Result<(), Failure> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Failure::new(2, format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok())
        .map(|entry| entry.path())
        .filter(|p| {
            p.is_file()
                && !p
                    .file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.starts_with('.'))
        })
        .collect();
    paths.sort();

    for path in paths {
        let name = path.display().to_string();
        let line = match analyze_file(&path, args) {
            Ok((outcome, _)) => {
                let mut value = outcome.json();
                value["file"] = json!(name);
                value
            }
            Err(f) => json!({ "file": name, "error": f.msg }),
        };
        println!("{line}");
    }
    Ok(())
}

/// A finished analysis: the engine report plus verification status.
struct Outcome {
    report: BranchReport,
    verified: Option<bool>,
}

impl Outcome {
    fn json(&self) -> Value {
        let mut value = report_to_json(&self.report);
        if let Some(v) = self.verified {
            value["verified"] = json!(v);
        }
        value
    }

    fn text(&self, field: &Field, kind: ReportKind, source: Option<&str>) -> String {
        let mut out = report_to_text(&self.report, field, kind, source);
        if self.verified == Some(true) {
            out.push_str("verification: ok (exhaustive and code-distance oracles agree)\n");
        }
        out
    }
}

fn kind_of(mode: Mode) -> ReportKind {
    match mode {
        Mode::Diff => ReportKind::Differential,
        Mode::Lin => ReportKind::Linear,
        Mode::Both => ReportKind::Both,
    }
}

fn analyze_file(path: &Path, args: &Args) -> Result<(Outcome, Arc<Field>), Failure> {
    let (field, matrix) = branchnum::parse_matrix_file(path)?;
    let opts = BranchOptions {
        filter: !args.no_filter,
        threads: args.threads,
        ..Default::default()
    };

    let report = match dispatch(&matrix, args, &opts) {
        Ok(r) => r,
        // Under --algo auto with --verify, a singular matrix falls back to
        // the definition-based engine, which accepts it.
        Err(EngineError::Singular)
            if args.algo == Algo::Auto && args.verify && fits_guard(&matrix) =>
        {
            run_engine(&matrix, args.mode, BranchAlgo::Exhaustive, &opts)?
        }
        Err(e) => return Err(e.into()),
    };

    let verified = if args.verify { Some(verify(&matrix, &report, args.mode)?) } else { None };
    if verified == Some(false) {
        return Err(Failure::new(4, "verification mismatch: engines disagree"));
    }
    Ok((Outcome { report, verified }, field))
}

fn fits_guard(m: &FqMatrix) -> bool {
    let q = m.field().order() as u128;
    let mut space: u128 = 1;
    for _ in 0..m.order() {
        space = match space.checked_mul(q) {
            Some(s) if s <= DEFAULT_EXHAUSTIVE_LIMIT => s,
            _ => return false,
        };
    }
    true
}

fn dispatch(
    matrix: &FqMatrix,
    args: &Args,
    opts: &BranchOptions,
) -> Result<BranchReport, EngineError> {
    let algo = match args.algo {
        Algo::New | Algo::Auto => BranchAlgo::New,
        Algo::Exhaustive => BranchAlgo::Exhaustive,
    };
    run_engine(matrix, args.mode, algo, opts)
}

fn run_engine(
    matrix: &FqMatrix,
    mode: Mode,
    algo: BranchAlgo,
    opts: &BranchOptions,
) -> Result<BranchReport, EngineError> {
    match (mode, algo) {
        (Mode::Diff, BranchAlgo::New) => branch_new_with(matrix, opts),
        (Mode::Diff, BranchAlgo::Exhaustive) => {
            branch_exhaustive_with(matrix, DEFAULT_EXHAUSTIVE_LIMIT)
        }
        (Mode::Lin, algo) => branch_linear(matrix, algo, opts),
        (Mode::Both, algo) => branch_both(matrix, algo, opts),
    }
}

/// Re-derives every reported number with the independent oracles.
fn verify(matrix: &FqMatrix, report: &BranchReport, mode: Mode) -> Result<bool, Failure> {
    let transpose = matrix.transpose();
    let lin_oracle = branch_exhaustive(&transpose).map_err(Failure::from)?;

    if matches!(mode, Mode::Diff | Mode::Both) {
        let diff_oracle = branch_exhaustive(matrix).map_err(Failure::from)?;
        if report.branch_diff != diff_oracle.branch_diff {
            return Ok(false);
        }
    }
    if matches!(mode, Mode::Lin | Mode::Both) {
        if report.branch_lin != Some(lin_oracle.branch_diff) {
            return Ok(false);
        }
    }
    // Coding-theory cross-check: the minimum distance of the code generated
    // by [I | M] equals the differential branch number of the transpose.
    let distance = min_distance_code(matrix).map_err(Failure::from)?;
    Ok(distance == lin_oracle.branch_diff)
}

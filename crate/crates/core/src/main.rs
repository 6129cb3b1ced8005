//! Command-line front end: decide, count, analyze, oracle, gen, verify.
//!
//! Exit codes follow SAT-solver and sysexits conventions so the tool
//! scripts cleanly: decide returns 10/20 for YES/NO, verify returns
//! 0/30 for agree/mismatch, 40 flags a term-budget abort, 64 a usage
//! error, 65 unparseable input, 66 a missing input file.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tallysat::{
    analyze_structure, brute_force_falsifying, brute_force_models, count_falsifying_with, generate,
    parse_dimacs, truth_table, write_dimacs, CnfFormula, CountError, CountOptions, CountReport,
    GenError, GenMode, GenSpec, ParsedCnf, StructureReport, DEFAULT_TERM_BUDGET,
};

const EXIT_SAT: u8 = 10;
const EXIT_UNSAT: u8 = 20;
const EXIT_MISMATCH: u8 = 30;
const EXIT_BUDGET: u8 = 40;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NOINPUT: u8 = 66;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(
    name = "tallysat",
    version,
    about = "Decides CNF satisfiability and counts models by counting falsifying tuples exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Abort counting after this many evaluated inclusion–exclusion
    /// terms (exit 40).
    #[arg(long, global = true, default_value_t = DEFAULT_TERM_BUDGET)]
    term_budget: u64,

    /// Suppress warnings on stderr.
    #[arg(long, global = true)]
    quiet: bool,

    /// Worker threads for counting; never changes any output field.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print YES or NO; exit 10 when satisfiable, 20 when not.
    Decide { file: PathBuf },
    /// Count falsifying tuples and models exactly.
    Count {
        file: PathBuf,
        /// Emit the report as one JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Report alternative/non-alternative structure and the predicted
    /// term count.
    Analyze {
        file: PathBuf,
        /// Emit the report as one JSON object.
        #[arg(long)]
        json: bool,
    },
    /// Brute-force counts over all 2^n tuples, for cross-checking.
    Oracle {
        file: PathBuf,
        /// Also write a per-clause truth table as CSV.
        #[arg(long, value_name = "OUT_CSV")]
        table: Option<PathBuf>,
    },
    /// Emit a seeded DIMACS instance.
    Gen {
        #[arg(long)]
        vars: u32,
        #[arg(long)]
        clauses: usize,
        /// Literals per clause.
        #[arg(long)]
        width: u32,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Planted non-alternative group size for --mode chain
        /// (default: all clauses).
        #[arg(long)]
        chain_p: Option<usize>,
        #[arg(long)]
        seed: u64,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the engine and the brute-force oracle; exit 0 on agreement,
    /// 30 on mismatch.
    Verify { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Random,
    Alternative,
    Chain,
}

impl From<ModeArg> for GenMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Random => GenMode::Random,
            ModeArg::Alternative => GenMode::Alternative,
            ModeArg::Chain => GenMode::Chain,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    let options = CountOptions {
        term_budget: cli.term_budget,
        prune: true,
        threads: cli.threads,
    };
    match cli.command {
        Command::Decide { file } => decide_cmd(&file, &options, cli.quiet),
        Command::Count { file, json } => count_cmd(&file, json, &options, cli.quiet),
        Command::Analyze { file, json } => analyze_cmd(&file, json, cli.quiet),
        Command::Oracle { file, table } => oracle_cmd(&file, table.as_deref(), cli.quiet),
        Command::Gen {
            vars,
            clauses,
            width,
            mode,
            chain_p,
            seed,
            output,
        } => gen_cmd(
            &GenSpec {
                n: vars,
                m: clauses,
                width,
                mode: mode.into(),
                chain_p: chain_p.unwrap_or(clauses),
                seed,
            },
            output.as_deref(),
        ),
        Command::Verify { file } => verify_cmd(&file, &options, cli.quiet),
    }
}

/// Reads and parses an input file, printing warnings unless quieted.
fn load(path: &Path, quiet: bool) -> Result<ParsedCnf, u8> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("tallysat: cannot read {}: {e}", path.display());
        EXIT_NOINPUT
    })?;
    let parsed = parse_dimacs(&text).map_err(|e| {
        eprintln!("tallysat: {}: {e}", path.display());
        EXIT_DATA
    })?;
    if !quiet {
        for warning in &parsed.warnings {
            eprintln!("tallysat: warning: {}: {warning}", path.display());
        }
    }
    Ok(parsed)
}

fn count_or_exit(f: &CnfFormula, options: &CountOptions) -> Result<CountReport, u8> {
    count_falsifying_with(f, options).map_err(|e @ CountError::TermBudgetExceeded { .. }| {
        eprintln!("tallysat: {e}");
        EXIT_BUDGET
    })
}

fn decide_cmd(file: &Path, options: &CountOptions, quiet: bool) -> u8 {
    let parsed = match load(file, quiet) {
        Ok(p) => p,
        Err(code) => return code,
    };
    match count_or_exit(&parsed.formula, options) {
        Ok(report) if report.satisfiable => {
            println!("YES");
            EXIT_SAT
        }
        Ok(_) => {
            println!("NO");
            EXIT_UNSAT
        }
        Err(code) => code,
    }
}

fn count_cmd(file: &Path, json: bool, options: &CountOptions, quiet: bool) -> u8 {
    let parsed = match load(file, quiet) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = match count_or_exit(&parsed.formula, options) {
        Ok(r) => r,
        Err(code) => return code,
    };
    if json {
        println!("{}", report.to_json(parsed.declared_clauses));
    } else {
        print_count(&report, parsed.declared_clauses);
    }
    0
}

fn print_count(report: &CountReport, m_declared: usize) {
    println!("n                 = {}", report.n);
    println!("clauses declared  = {m_declared}");
    println!("clauses effective = {}", report.m);
    println!("falsifying (R)    = {}", report.falsifying);
    println!("models            = {}", report.models);
    println!(
        "satisfiable       = {}",
        if report.satisfiable { "yes" } else { "no" }
    );
    println!("path              = {}", report.path.as_str());
    println!("terms evaluated   = {}", report.terms_evaluated);
    println!("subtrees pruned   = {}", report.subtrees_pruned);
}

fn analyze_cmd(file: &Path, json: bool, quiet: bool) -> u8 {
    let parsed = match load(file, quiet) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = analyze_structure(&parsed.formula.negate());
    if json {
        println!("{}", report.to_json());
    } else {
        print_structure(&report);
    }
    0
}

fn print_structure(report: &StructureReport) {
    println!("cubes                    = {}", report.m);
    println!(
        "all pairwise alternative = {}",
        if report.all_pairwise_alternative {
            "yes"
        } else {
            "no"
        }
    );
    println!(
        "component sizes (>= 2)   = {:?}",
        report.nonalternative_components
    );
    println!("largest component (p)    = {}", report.p_max);
    println!(
        "predicted terms bound    = {}",
        report.predicted_terms_upper_bound
    );
}

fn oracle_cmd(file: &Path, table: Option<&Path>, quiet: bool) -> u8 {
    let parsed = match load(file, quiet) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let models = match brute_force_models(&parsed.formula) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("tallysat: {e}");
            return 1;
        }
    };
    let falsifying =
        brute_force_falsifying(&parsed.formula).expect("same variable cap as the model count");
    println!("models     = {models}");
    println!("falsifying = {falsifying}");
    if let Some(path) = table {
        let table = match truth_table(&parsed.formula) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("tallysat: {e}");
                return 1;
            }
        };
        if let Err(e) = fs::write(path, table.to_csv()) {
            eprintln!("tallysat: cannot write {}: {e}", path.display());
            return EXIT_IO;
        }
    }
    0
}

fn gen_cmd(spec: &GenSpec, output: Option<&Path>) -> u8 {
    let formula = match generate(spec) {
        Ok(f) => f,
        Err(e @ GenError::InvalidSpec { .. }) => {
            eprintln!("tallysat: {e}");
            return EXIT_USAGE;
        }
        Err(e @ GenError::RegimeNotMet { .. }) => {
            eprintln!("tallysat: {e}");
            return 1;
        }
    };
    let text = write_dimacs(&formula);
    match output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("tallysat: cannot write {}: {e}", path.display());
                return EXIT_IO;
            }
        }
        None => print!("{text}"),
    }
    0
}

fn verify_cmd(file: &Path, options: &CountOptions, quiet: bool) -> u8 {
    let parsed = match load(file, quiet) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = match count_or_exit(&parsed.formula, options) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let oracle_models = match brute_force_models(&parsed.formula) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("tallysat: {e}");
            return 1;
        }
    };
    println!("engine models = {}", report.models);
    println!("oracle models = {oracle_models}");
    if report.models == oracle_models.into() {
        println!("agree");
        0
    } else {
        println!("MISMATCH");
        EXIT_MISMATCH
    }
}

//! `agw`: enumerate AG-groupoids, compute with their fuzzy subsets, and run
//! the statement suite.
//!
//! Exit codes: 0 success, 1 a witness or falsification was found, 2 bad
//! input or an unmet precondition.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use agw_core::enumerate::{DEFAULT_ENUM_BOUND, MAX_ENUM_ORDER};
use agw_core::harness::{
    recheck, run_check, run_suite, summary_table, Budget, CheckSpec, Population, StatementId, SuiteSummary,
};
use agw_core::ideals::{enumerate_crisp_ideals, enumerate_fuzzy_family, FamilyStrategy, FuzzyFamilyKind, IdealKind};
use agw_core::{
    check_identity, enumerate, generated_left_ideal, generated_left_ideal_oracle, parse_fuzzy_literal,
    parse_table_stream, product, write_table_stream, CayleyTable, EnumSpec, Error, FuzzyPoint, GradeChain, Identity,
};

#[derive(Parser, Debug)]
#[command(name = "agw", version, about = "AG-groupoids and their chain-valued fuzzy ideals")]
struct Cli {
    /// Worker threads for parallel stages.
    #[arg(long, global = true, env = "AGW_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate AG-groupoids of order n as a table stream.
    Enumerate(EnumerateArgs),
    /// Decide a structural identity on a table.
    Check(CheckArgs),
    /// Sup-min product of two fuzzy-subset literals.
    Product(ProductArgs),
    /// Fuzzy left ideal generated by the fuzzy point a_λ.
    GenIdeal(GenIdealArgs),
    /// List the crisp or fuzzy ideals of one kind as JSON.
    Ideals(IdealsArgs),
    /// Run statements over the tables in a file.
    Verify(VerifyArgs),
    /// Run statements over every enumerated AG-groupoid of the given orders.
    Suite(SuiteArgs),
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    n: usize,
    #[arg(long)]
    left_identity: bool,
    #[arg(long)]
    up_to_iso: bool,
    /// Stop after this many tables.
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_ENUM_BOUND)]
    max_order: usize,
}

#[derive(Args, Debug)]
struct CheckArgs {
    file: PathBuf,
    /// left-invertive, medial, paramedial, left-permutable, associative or commutative.
    #[arg(long, default_value = "left-invertive")]
    identity: String,
}

#[derive(Args, Debug)]
struct ProductArgs {
    file: PathBuf,
    /// Literal such as `k=2; 0 1 2`.
    f: String,
    g: String,
}

#[derive(Args, Debug)]
struct GenIdealArgs {
    file: PathBuf,
    a: usize,
    /// Grade level of the point, in 0..=k.
    lambda: usize,
    #[arg(long, default_value_t = 2)]
    k: u8,
    /// Use the fixpoint closure instead of the closed form.
    #[arg(long)]
    oracle: bool,
    /// Print both results and whether they agree.
    #[arg(long)]
    compare: bool,
}

#[derive(Args, Debug)]
struct IdealsArgs {
    file: PathBuf,
    #[arg(long, default_value = "left")]
    kind: String,
    #[arg(long)]
    fuzzy: bool,
    #[arg(long, default_value_t = 2)]
    k: u8,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    file: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    k: Vec<u8>,
    #[arg(long, value_delimiter = ',')]
    ids: Option<Vec<String>>,
    /// Seed for sampled quantifiers.
    #[arg(long, default_value_t = Budget::DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    orders: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    k: Vec<u8>,
    #[arg(long, value_delimiter = ',')]
    ids: Option<Vec<String>>,
    #[arg(long, default_value_t = Budget::DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure that ends the command with exit code 2.
struct Fatal(String);

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        Fatal(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Fatal>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("agw: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("agw: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Check(a) => cmd_check(a),
        Command::Product(a) => cmd_product(a),
        Command::GenIdeal(a) => cmd_gen_ideal(a),
        Command::Ideals(a) => cmd_ideals(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Suite(a) => cmd_suite(a),
    };
    result.unwrap_or_else(|Fatal(msg)| {
        eprintln!("agw: {msg}");
        ExitCode::from(2)
    })
}

fn read(path: &Path) -> Result<String, Fatal> {
    fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fatal> {
    fs::write(path, text).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

/// Every table in a file, which may hold one table or a whole stream.
fn load_tables(path: &Path) -> Result<Vec<CayleyTable>, Fatal> {
    let text = read(path)?;
    let stream = parse_table_stream(&text).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
    if stream.tables.is_empty() {
        return Err(Fatal(format!("{}: no table found", path.display())));
    }
    Ok(stream.tables)
}

fn load_table(path: &Path) -> Result<CayleyTable, Fatal> {
    let mut tables = load_tables(path)?;
    if tables.len() > 1 {
        return Err(Fatal(format!(
            "{}: expected one table, found {}",
            path.display(),
            tables.len()
        )));
    }
    Ok(tables.remove(0))
}

fn parse_ids(ids: &Option<Vec<String>>) -> Result<Option<Vec<StatementId>>, Fatal> {
    ids.as_ref()
        .map(|ids| {
            ids.iter()
                .map(|s| s.parse::<StatementId>().map_err(Fatal::from))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()
}

fn chains(ks: &[u8]) -> Result<Vec<GradeChain>, Fatal> {
    ks.iter().map(|&k| GradeChain::new(k).map_err(Fatal::from)).collect()
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

fn cmd_enumerate(a: EnumerateArgs) -> CmdResult {
    if a.max_order > MAX_ENUM_ORDER {
        return Err(Fatal(format!(
            "--max-order {} exceeds the hard limit {MAX_ENUM_ORDER}",
            a.max_order
        )));
    }
    let spec = EnumSpec::new(a.n)
        .left_identity(a.left_identity)
        .up_to_iso(a.up_to_iso)
        .limit(a.limit)
        .bound(a.max_order);
    let result = enumerate(&spec)?;
    let text = write_table_stream(&result.tables, &result.summary());
    match &a.out {
        Some(path) => {
            write(path, &text)?;
            eprintln!("{}", result.summary());
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(a: CheckArgs) -> CmdResult {
    let identity: Identity = a.identity.parse()?;
    let t = load_table(&a.file)?;
    match check_identity(&t, identity) {
        Ok(()) => {
            println!(
                "pass: {identity} holds on all {} tuples",
                t.order().pow(identity.arity() as u32)
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(w) => {
            println!("witness: {w}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_product(a: ProductArgs) -> CmdResult {
    let t = load_table(&a.file)?;
    let f = parse_fuzzy_literal(&a.f).map_err(|e| Fatal(format!("f: {e}")))?;
    let g = parse_fuzzy_literal(&a.g).map_err(|e| Fatal(format!("g: {e}")))?;
    println!("{}", product(&f, &g, &t)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen_ideal(a: GenIdealArgs) -> CmdResult {
    let t = load_table(&a.file)?;
    let chain = GradeChain::new(a.k)?;
    let point = FuzzyPoint::new(a.a, chain.grade(a.lambda)?)?;
    if a.compare {
        let closed = generated_left_ideal(&point, &t, chain)?;
        let oracle = generated_left_ideal_oracle(&point, &t, chain)?;
        println!("closed-form: {closed}");
        println!("oracle:      {oracle}");
        if closed == oracle {
            println!("agree");
            return Ok(ExitCode::SUCCESS);
        }
        println!("disagree");
        return Ok(ExitCode::from(1));
    }
    let f = if a.oracle {
        generated_left_ideal_oracle(&point, &t, chain)?
    } else {
        generated_left_ideal(&point, &t, chain)?
    };
    println!("{f}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_ideals(a: IdealsArgs) -> CmdResult {
    let kind: IdealKind = a.kind.parse()?;
    let t = load_table(&a.file)?;
    let json = if a.fuzzy {
        let chain = GradeChain::new(a.k)?;
        let family = enumerate_fuzzy_family(
            &t,
            chain,
            FuzzyFamilyKind::from_crisp_kind(kind),
            FamilyStrategy::LevelChain,
        )?;
        serde_json::json!({
            "kind": family.kind,
            "k": chain.resolution(),
            "order": t.order(),
            "count": family.len(),
            "members": family.members,
        })
    } else {
        let family = enumerate_crisp_ideals(&t, kind)?;
        serde_json::json!({
            "kind": family.kind,
            "order": t.order(),
            "count": family.len(),
            "members": family.members,
        })
    };
    print!("{}", to_json(&json));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let tables = load_tables(&a.file)?;
    let ids = parse_ids(&a.ids)?.unwrap_or_else(|| StatementId::ALL.to_vec());
    let budget = Budget::default().with_seed(a.seed);
    let population = Population::Explicit {
        label: a.file.display().to_string(),
        tables,
    };
    let mut reports = Vec::new();
    for chain in chains(&a.k)? {
        for &id in &ids {
            let spec = CheckSpec::new(id, chain, population.clone()).budget(budget);
            let report = run_check(&spec)?;
            if report.witness.is_some() && !recheck(&report)? {
                return Err(Fatal(format!(
                    "{id} at k={}: witness did not survive recheck",
                    chain.resolution()
                )));
            }
            reports.push(report);
        }
    }
    let summary = SuiteSummary::of(&reports);
    print!("{}", to_json(&reports));
    eprint!("{}", summary_table(&reports, summary));
    Ok(if summary.falsified > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_suite(a: SuiteArgs) -> CmdResult {
    let ids = parse_ids(&a.ids)?;
    let mut budget = Budget::default().with_seed(a.seed);
    if let Some(s) = a.samples {
        budget = budget.with_samples(s);
    }
    let report = run_suite(&a.orders, &chains(&a.k)?, ids.as_deref(), budget)?;
    let json = report.to_json();
    match &a.out {
        Some(path) => write(path, &json)?,
        None => print!("{json}"),
    }
    eprint!("{}", report.summary_table());
    Ok(if report.summary.falsified > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

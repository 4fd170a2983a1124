//! Command-line driver. Exit codes: 0 ok, 1 a verified statement failed,
//! 2 parse error, 3 size guard, 4 precondition violation.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kegraph_core::critical::{critical_difference, critical_profile};
use kegraph_core::fixtures;
use kegraph_core::format::{encode_graph6, parse_edge_list, parse_graph6};
use kegraph_core::graph::Graph;
use kegraph_core::independence::omega_with_cap;
use kegraph_core::ke::{diagnose_with_cap, embed_non_ke, EmbedError};
use kegraph_core::limits::DEFAULT_OMEGA_CAP;
use kegraph_core::report::Verdict;
use kegraph_core::search::{
    render_search_result, run_search, Filters, Mode, SearchError, SearchSpec, Source,
};
use kegraph_core::suite::{find_check, registry, run_all, CheckContext};
use output::AnalysisDocument;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const EXIT_OK: u8 = 0;
const EXIT_THEOREM_FAILS: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_PRECONDITION: u8 = 4;

#[derive(Parser)]
#[command(
    name = "kegraph",
    about = "Independence invariants, König-Egerváry structure checks and counterexample search for small graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all invariants and the full verdict table for each input graph
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run selected checkers; exits nonzero if any verified statement fails
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Checker id (see --theorem list) or `all`
        #[arg(long, default_value = "all")]
        theorem: String,
    },
    /// Sweep a graph stream for predicate hits
    Search {
        /// conjecture | problem1 | problem2 | theorem:<id>
        #[arg(long)]
        mode: String,
        /// graph6 stream file, one graph per line
        #[arg(long, value_name = "FILE", conflicts_with_all = ["er", "n"])]
        exhaustive: Option<PathBuf>,
        /// seeded random graphs: vertex count and edge probability
        #[arg(long, num_args = 2, value_names = ["N", "P"])]
        er: Option<Vec<String>>,
        /// built-in exhaustive catalog sizes, e.g. 4..6
        #[arg(long, value_name = "LO..HI")]
        n: Option<String>,
        /// keep only connected graphs
        #[arg(long)]
        connected: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Embed a König-Egerváry graph into a non-König-Egerváry one with the
    /// same maximum independent sets
    Embed {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the built-in fixture regression suite
    Fixtures,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct InputArgs {
    /// graph6 file, one graph per line
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// a single graph6 string
    #[arg(long, value_name = "STRING")]
    g6: Option<String>,
    /// edge-list file: `n m` header, `u v` lines, optional `label i name`
    #[arg(long, value_name = "FILE")]
    edges: Option<PathBuf>,
    /// built-in fixture id, e.g. g1-fig2222
    #[arg(long, value_name = "ID")]
    fixture: Option<String>,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for sampled families and generators
    #[arg(long, default_value_t = 0x4b45)]
    seed: u64,
    /// Maximum number of graphs a search consumes
    #[arg(long, default_value_t = 100_000)]
    budget: usize,
    /// Materialization cap for the family of maximum independent sets
    #[arg(long = "cap-omega", default_value_t = DEFAULT_OMEGA_CAP)]
    cap_omega: usize,
    /// Exclude timings from the output
    #[arg(long = "no-timing")]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { input, common } => cmd_analyze(&input, &common),
        Command::Verify {
            input,
            common,
            theorem,
        } => cmd_verify(&input, &common, &theorem),
        Command::Search {
            mode,
            exhaustive,
            er,
            n,
            connected,
            common,
        } => cmd_search(&mode, exhaustive, er, n, connected, &common),
        Command::Embed { input, common } => cmd_embed(&input, &common),
        Command::Fixtures => Ok(cmd_fixtures()),
    }
}

/// Named input graphs in input order.
fn load_inputs(input: &InputArgs) -> Result<Vec<(Option<String>, Graph)>, Failure> {
    if let Some(path) = &input.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
        let mut graphs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let g = parse_graph6(line).map_err(|e| {
                Failure::new(EXIT_PARSE, format!("{}:{}: {e}", path.display(), i + 1))
            })?;
            graphs.push((None, g));
        }
        if graphs.is_empty() {
            return Err(Failure::new(EXIT_PARSE, "input file contains no graphs"));
        }
        return Ok(graphs);
    }
    if let Some(line) = &input.g6 {
        let g = parse_graph6(line).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
        return Ok(vec![(None, g)]);
    }
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
        let g = parse_edge_list(&text).map_err(|e| Failure::new(EXIT_PARSE, e.to_string()))?;
        return Ok(vec![(None, g)]);
    }
    if let Some(id) = &input.fixture {
        let g = fixtures::fixture(id).ok_or_else(|| {
            Failure::new(
                EXIT_PARSE,
                format!(
                    "unknown fixture `{id}`; available: {}",
                    fixtures::fixture_ids().join(", ")
                ),
            )
        })?;
        return Ok(vec![(Some(id.clone()), g)]);
    }
    Err(Failure::new(
        EXIT_PARSE,
        "no input: pass --input, --g6, --edges or --fixture",
    ))
}

fn guard_failure(e: kegraph_core::LimitError) -> Failure {
    Failure::new(EXIT_GUARD, e.to_string())
}

fn context(common: &CommonArgs) -> CheckContext {
    CheckContext {
        seed: common.seed,
        omega_cap: common.cap_omega,
        ..CheckContext::default()
    }
}

fn cmd_analyze(input: &InputArgs, common: &CommonArgs) -> Result<u8, Failure> {
    let ctx = context(common);
    let mut first = true;
    for (name, g) in load_inputs(input)? {
        let started = Instant::now();
        let diagnosis = diagnose_with_cap(&g, common.cap_omega).map_err(guard_failure)?;
        let om = omega_with_cap(&g, common.cap_omega).map_err(guard_failure)?;
        let profile = critical_profile(&g).map_err(guard_failure)?;
        let (d, _) = critical_difference(&g).map_err(guard_failure)?;
        let invariants_ms = started.elapsed().as_millis();

        let started = Instant::now();
        let reports = run_all(&g, &ctx);
        let theorems_ms = started.elapsed().as_millis();

        let doc = AnalysisDocument {
            name,
            graph6: encode_graph6(&g),
            n: g.vertex_count(),
            m: g.edge_count(),
            diagnosis,
            d,
            core: om.core(),
            corona: om.corona(),
            ker: profile.ker,
            diadem: profile.diadem,
            nucleus: profile.nucleus,
            reports,
            invariants_ms,
            theorems_ms,
        };
        match common.format {
            Format::Machine => println!("{}", doc.machine(!common.no_timing)),
            Format::Text => {
                if !first {
                    println!();
                }
                print!("{}", doc.text(&g, !common.no_timing));
            }
        }
        first = false;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(input: &InputArgs, common: &CommonArgs, theorem: &str) -> Result<u8, Failure> {
    let ctx = context(common);
    if theorem != "all" && find_check(theorem).is_none() {
        let known: Vec<&str> = registry().iter().map(|c| c.id).collect();
        return Err(Failure::new(
            EXIT_PARSE,
            format!("unknown theorem id `{theorem}`; known: {}", known.join(", ")),
        ));
    }
    let mut any_failed = false;
    for (name, g) in load_inputs(input)? {
        let reports = if theorem == "all" {
            run_all(&g, &ctx)
        } else {
            let check = find_check(theorem).expect("validated above");
            vec![(check.run)(&g, &ctx)]
        };
        let title = name.unwrap_or_else(|| encode_graph6(&g));
        match common.format {
            Format::Text => {
                println!("graph {title}: n={} m={}", g.vertex_count(), g.edge_count());
                for r in &reports {
                    let witness = r.witness_summary();
                    if witness.is_empty() {
                        println!("  {:<24} {}", r.id, r.verdict);
                    } else {
                        println!("  {:<24} {:<18} {witness}", r.id, r.verdict.to_string());
                    }
                }
            }
            Format::Machine => {
                for r in &reports {
                    println!(
                        "{} theorem={} verdict={} witness={}",
                        title,
                        r.id,
                        r.verdict,
                        r.witness_summary()
                    );
                }
            }
        }
        any_failed |= reports.iter().any(|r| r.verdict == Verdict::Fails);
    }
    Ok(if any_failed { EXIT_THEOREM_FAILS } else { EXIT_OK })
}

fn parse_mode(mode: &str) -> Result<Mode, Failure> {
    match mode {
        "conjecture" => Ok(Mode::Conjecture),
        "problem1" => Ok(Mode::Problem1Collect),
        "problem2" => Ok(Mode::Problem2Collect),
        other => match other.strip_prefix("theorem:") {
            Some(id) => Ok(Mode::Theorem(id.to_string())),
            None => Err(Failure::new(
                EXIT_PARSE,
                format!("unknown mode `{other}`; use conjecture, problem1, problem2 or theorem:<id>"),
            )),
        },
    }
}

fn parse_range(range: &str) -> Result<(usize, usize), Failure> {
    let bad = || {
        Failure::new(
            EXIT_PARSE,
            format!("cannot parse size range `{range}`; expected LO..HI, e.g. 4..6"),
        )
    };
    let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.parse().map_err(|_| bad())?;
    let hi: usize = hi.parse().map_err(|_| bad())?;
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn search_failure(e: SearchError) -> Failure {
    let code = match &e {
        SearchError::TheoremViolation { .. } | SearchError::ReverificationFailed { .. } => {
            EXIT_THEOREM_FAILS
        }
        SearchError::StreamGraphTooLarge { .. } => EXIT_GUARD,
        SearchError::InvalidSpec(_)
        | SearchError::UnknownCheck(_)
        | SearchError::UnreadableStream { .. }
        | SearchError::Parse { .. } => EXIT_PARSE,
    };
    Failure::new(code, e.to_string())
}

fn cmd_search(
    mode: &str,
    exhaustive: Option<PathBuf>,
    er: Option<Vec<String>>,
    n: Option<String>,
    connected: bool,
    common: &CommonArgs,
) -> Result<u8, Failure> {
    let mode = parse_mode(mode)?;
    let source = match (exhaustive, er, n) {
        (Some(path), None, None) => Source::File(path),
        (None, Some(args), None) => {
            let n: usize = args[0]
                .parse()
                .map_err(|_| Failure::new(EXIT_PARSE, format!("bad vertex count `{}`", args[0])))?;
            let p: f64 = args[1]
                .parse()
                .map_err(|_| Failure::new(EXIT_PARSE, format!("bad probability `{}`", args[1])))?;
            Source::ErdosRenyi {
                n,
                p,
                seed: common.seed,
            }
        }
        (None, None, Some(range)) => {
            let (min_n, max_n) = parse_range(&range)?;
            Source::Catalog { min_n, max_n }
        }
        _ => {
            return Err(Failure::new(
                EXIT_PARSE,
                "choose exactly one source: --exhaustive FILE, --er N P or --n LO..HI",
            ))
        }
    };
    let spec = SearchSpec {
        source,
        mode,
        budget: common.budget,
        filters: Filters {
            connected_only: connected,
            n_range: None,
        },
        omega_cap: common.cap_omega,
    };
    let result = run_search(&spec).map_err(search_failure)?;
    print!("{}", render_search_result(&result, !common.no_timing));
    Ok(EXIT_OK)
}

fn cmd_embed(input: &InputArgs, common: &CommonArgs) -> Result<u8, Failure> {
    let inputs = load_inputs(input)?;
    if inputs.len() != 1 {
        return Err(Failure::new(EXIT_PARSE, "embed takes exactly one graph"));
    }
    let (_, g) = &inputs[0];
    let embedded = embed_non_ke(g).map_err(|e| match e {
        EmbedError::NotKoenigEgervary | EmbedError::ExcludedSmallGraph => {
            Failure::new(EXIT_PRECONDITION, e.to_string())
        }
        EmbedError::Graph(ge) => Failure::new(EXIT_GUARD, ge.to_string()),
    })?;
    let diagnosis = diagnose_with_cap(&embedded, common.cap_omega).map_err(guard_failure)?;
    println!("{}", encode_graph6(&embedded));
    println!(
        "n={} alpha={} mu={} is_ke={} bounds=({},{},{})",
        diagnosis.n,
        diagnosis.alpha,
        diagnosis.mu,
        diagnosis.is_ke,
        diagnosis.bounds.0,
        diagnosis.bounds.1,
        diagnosis.bounds.2
    );
    Ok(EXIT_OK)
}

fn cmd_fixtures() -> u8 {
    let checks = fixtures::run_fixture_checks();
    let mut failed = 0usize;
    for check in &checks {
        if check.pass {
            println!("ok   {} = {}", check.id, check.got);
        } else {
            failed += 1;
            println!(
                "FAIL {} expected {} got {}",
                check.id, check.expected, check.got
            );
        }
    }
    println!(
        "{} checks, {} failed, {} fixtures",
        checks.len(),
        failed,
        fixtures::fixture_ids().len()
    );
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_THEOREM_FAILS
    }
}

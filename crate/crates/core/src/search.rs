//! Predicate-driven sweeps over graph streams: hunting for counterexamples
//! to the diadem/nucleus conjecture and collecting instances of the two
//! open characterization problems.
//!
//! Hits found by the parallel fast path are never trusted: every candidate
//! is re-verified sequentially from its graph6 encoding before emission.

use crate::catalog::catalog_range;
use crate::critical::critical_profile_with_cap;
use crate::format::{encode_graph6, parse_graph6};
use crate::graph::Graph;
use crate::independence::omega_with_cap;
use crate::limits::{LimitError, CRITICAL_MAX_N, DEFAULT_OMEGA_CAP};
use crate::matching::mu;
use crate::report::Verdict;
use crate::set::VertexSet;
use crate::suite::{find_check, run_all, CheckContext};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::path::PathBuf;
use std::time::{Duration, Instant};
use thiserror::Error;

/// Name and version of the generator used for every seeded draw, echoed in
/// the output header so the stream can be reproduced elsewhere.
pub const PRNG_NAME: &str = "chacha8(rand_chacha-0.3)";

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search spec: {0}")]
    InvalidSpec(String),
    #[error("cannot read graph stream {path}: {message}")]
    UnreadableStream { path: PathBuf, message: String },
    #[error("stream line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: crate::format::Graph6Error,
    },
    #[error("stream line {line}: graph on {n} vertices exceeds the search limit of {max}")]
    StreamGraphTooLarge { line: usize, n: usize, max: usize },
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error(
        "check `{check}` failed on {graph6}: {details}. A failed proved statement indicates an \
         implementation bug; aborting the run"
    )]
    TheoremViolation {
        check: &'static str,
        graph6: String,
        details: String,
    },
    #[error("re-verification rejected candidate hit {graph6}; parallel and sequential paths disagree")]
    ReverificationFailed { graph6: String },
}

/// Where the graphs come from.
#[derive(Clone, Debug)]
pub enum Source {
    /// `budget` seeded random graphs with the given edge probability.
    ErdosRenyi { n: usize, p: f64, seed: u64 },
    /// graph6 lines from a file, one graph per line.
    File(PathBuf),
    /// graph6 lines provided directly.
    Lines(Vec<String>),
    /// The built-in exhaustive catalog for every size in the range.
    Catalog { min_n: usize, max_n: usize },
}

/// What counts as a hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// |diadem| + |nucleus| = 2α on a non-König-Egerváry graph. Any hit
    /// falsifies the conjecture; none are expected.
    Conjecture,
    /// Collect graphs with core = nucleus.
    Problem1Collect,
    /// Collect graphs with |corona| + |core| = 2(|V| − μ).
    Problem2Collect,
    /// Run a registered checker (or `all`) over the stream; a failure
    /// aborts the run.
    Theorem(String),
}

#[derive(Clone, Debug, Default)]
pub struct Filters {
    pub connected_only: bool,
    pub n_range: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub source: Source,
    pub mode: Mode,
    pub budget: usize,
    pub filters: Filters,
    pub omega_cap: usize,
}

impl SearchSpec {
    pub fn new(source: Source, mode: Mode) -> SearchSpec {
        SearchSpec {
            source,
            mode,
            budget: 1_000_000,
            filters: Filters::default(),
            omega_cap: DEFAULT_OMEGA_CAP,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.budget == 0 {
            return Err(SearchError::InvalidSpec("budget must be positive".into()));
        }
        if let Source::ErdosRenyi { n, p, .. } = self.source {
            if !(0.0..=1.0).contains(&p) {
                return Err(SearchError::InvalidSpec(format!(
                    "edge probability {p} outside [0, 1]"
                )));
            }
            if n > CRITICAL_MAX_N {
                return Err(SearchError::InvalidSpec(format!(
                    "n={n} exceeds the search limit of {CRITICAL_MAX_N}"
                )));
            }
        }
        if let Mode::Theorem(id) = &self.mode {
            if id != "all" && find_check(id).is_none() {
                return Err(SearchError::UnknownCheck(id.clone()));
            }
        }
        Ok(())
    }
}

/// One verified hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hit {
    pub graph6: String,
    /// Flat key=value diagnosis snapshot.
    pub diagnosis: Vec<(String, String)>,
}

#[derive(Debug)]
pub struct SearchResult {
    pub examined: u64,
    pub skipped: u64,
    pub hits: Vec<Hit>,
    pub elapsed: Duration,
    pub seed: Option<u64>,
}

enum Outcome {
    Hit(Hit),
    Miss,
    Skipped,
    Filtered,
}

/// Runs the sweep described by `spec`. Deterministic given the seed: the
/// hit list is sorted by graph6 encoding and all counters are exact.
pub fn run_search(spec: &SearchSpec) -> Result<SearchResult, SearchError> {
    spec.validate()?;
    let start = Instant::now();

    let (lines, seed) = materialize_source(spec)?;
    let ctx = CheckContext {
        omega_cap: spec.omega_cap,
        ..CheckContext::default()
    };

    let outcomes: Vec<Result<Outcome, SearchError>> = lines
        .par_iter()
        .enumerate()
        .map(|(i, line)| evaluate_line(i + 1, line, spec, &ctx))
        .collect();

    let mut examined = 0u64;
    let mut skipped = 0u64;
    let mut candidates = Vec::new();
    for outcome in outcomes {
        match outcome? {
            Outcome::Hit(h) => {
                examined += 1;
                candidates.push(h);
            }
            Outcome::Miss => examined += 1,
            Outcome::Skipped => {
                examined += 1;
                skipped += 1;
            }
            Outcome::Filtered => {}
        }
    }

    // single-threaded re-verification from the encoded form
    let mut hits = Vec::with_capacity(candidates.len());
    for candidate in candidates {
        let reparsed = parse_graph6(&candidate.graph6)
            .expect("candidate hit came from a parsed graph");
        match evaluate_graph(&reparsed, &candidate.graph6, spec, &ctx)? {
            Outcome::Hit(h) => hits.push(h),
            _ => {
                return Err(SearchError::ReverificationFailed {
                    graph6: candidate.graph6,
                })
            }
        }
    }
    hits.sort_by(|a, b| a.graph6.cmp(&b.graph6));

    Ok(SearchResult {
        examined,
        skipped,
        hits,
        elapsed: start.elapsed(),
        seed,
    })
}

fn materialize_source(spec: &SearchSpec) -> Result<(Vec<String>, Option<u64>), SearchError> {
    match &spec.source {
        Source::ErdosRenyi { n, p, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let lines = (0..spec.budget)
                .map(|_| encode_graph6(&erdos_renyi_from(&mut rng, *n, *p)))
                .collect();
            Ok((lines, Some(*seed)))
        }
        Source::File(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| SearchError::UnreadableStream {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
            Ok((collect_lines(&text, spec.budget), None))
        }
        Source::Lines(lines) => Ok((
            lines
                .iter()
                .filter(|l| !l.trim().is_empty())
                .take(spec.budget)
                .cloned()
                .collect(),
            None,
        )),
        Source::Catalog { min_n, max_n } => {
            let graphs = catalog_range(*min_n, *max_n).map_err(|e| match e {
                LimitError::TooLarge { n, max, .. } => SearchError::InvalidSpec(format!(
                    "catalog size {n} out of range (1..={max}); supply a graph6 stream instead"
                )),
                other => SearchError::InvalidSpec(other.to_string()),
            })?;
            Ok((
                graphs
                    .iter()
                    .map(encode_graph6)
                    .take(spec.budget)
                    .collect(),
                None,
            ))
        }
    }
}

fn collect_lines(text: &str, budget: usize) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .take(budget)
        .map(String::from)
        .collect()
}

fn evaluate_line(
    lineno: usize,
    line: &str,
    spec: &SearchSpec,
    ctx: &CheckContext,
) -> Result<Outcome, SearchError> {
    let g = parse_graph6(line).map_err(|source| SearchError::Parse {
        line: lineno,
        source,
    })?;
    if g.vertex_count() > CRITICAL_MAX_N {
        return Err(SearchError::StreamGraphTooLarge {
            line: lineno,
            n: g.vertex_count(),
            max: CRITICAL_MAX_N,
        });
    }
    if let Some((lo, hi)) = spec.filters.n_range {
        if g.vertex_count() < lo || g.vertex_count() > hi {
            return Ok(Outcome::Filtered);
        }
    }
    if spec.filters.connected_only && !g.is_connected() {
        return Ok(Outcome::Filtered);
    }
    // normalize the echo so hits are reported in canonical graph6 form
    let echo = encode_graph6(&g);
    evaluate_graph(&g, &echo, spec, ctx)
}

fn evaluate_graph(
    g: &Graph,
    graph6: &str,
    spec: &SearchSpec,
    ctx: &CheckContext,
) -> Result<Outcome, SearchError> {
    match &spec.mode {
        Mode::Conjecture => {
            let profile = match critical_profile_with_cap(g, spec.omega_cap) {
                Ok(p) => p,
                Err(LimitError::CapExceeded { .. }) => return Ok(Outcome::Skipped),
                Err(e) => return Err(SearchError::InvalidSpec(e.to_string())),
            };
            let om = match omega_with_cap(g, spec.omega_cap) {
                Ok(o) => o,
                Err(LimitError::CapExceeded { .. }) => return Ok(Outcome::Skipped),
                Err(e) => return Err(SearchError::InvalidSpec(e.to_string())),
            };
            let sum = profile.diadem.len() + profile.nucleus.len();
            let two_alpha = 2 * om.alpha();
            let ke = om.alpha() + mu(g) == g.vertex_count();
            if sum == two_alpha && !ke {
                Ok(Outcome::Hit(Hit {
                    graph6: graph6.to_string(),
                    diagnosis: vec![
                        ("n".into(), g.vertex_count().to_string()),
                        ("alpha".into(), om.alpha().to_string()),
                        ("ke".into(), "false".into()),
                        ("diadem".into(), render_set(profile.diadem)),
                        ("nucleus".into(), render_set(profile.nucleus)),
                        ("diadem+nucleus".into(), sum.to_string()),
                        ("2alpha".into(), two_alpha.to_string()),
                    ],
                }))
            } else {
                Ok(Outcome::Miss)
            }
        }
        Mode::Problem1Collect => {
            let profile = match critical_profile_with_cap(g, spec.omega_cap) {
                Ok(p) => p,
                Err(LimitError::CapExceeded { .. }) => return Ok(Outcome::Skipped),
                Err(e) => return Err(SearchError::InvalidSpec(e.to_string())),
            };
            let om = match omega_with_cap(g, spec.omega_cap) {
                Ok(o) => o,
                Err(LimitError::CapExceeded { .. }) => return Ok(Outcome::Skipped),
                Err(e) => return Err(SearchError::InvalidSpec(e.to_string())),
            };
            if om.core() == profile.nucleus {
                Ok(Outcome::Hit(Hit {
                    graph6: graph6.to_string(),
                    diagnosis: vec![
                        ("n".into(), g.vertex_count().to_string()),
                        ("alpha".into(), om.alpha().to_string()),
                        ("core".into(), render_set(om.core())),
                        ("nucleus".into(), render_set(profile.nucleus)),
                    ],
                }))
            } else {
                Ok(Outcome::Miss)
            }
        }
        Mode::Problem2Collect => {
            let om = match omega_with_cap(g, spec.omega_cap) {
                Ok(o) => o,
                Err(LimitError::CapExceeded { .. }) => return Ok(Outcome::Skipped),
                Err(e) => return Err(SearchError::InvalidSpec(e.to_string())),
            };
            let m = mu(g);
            let sum = om.corona().len() + om.core().len();
            let bound = 2 * (g.vertex_count() - m);
            if sum == bound {
                Ok(Outcome::Hit(Hit {
                    graph6: graph6.to_string(),
                    diagnosis: vec![
                        ("n".into(), g.vertex_count().to_string()),
                        ("alpha".into(), om.alpha().to_string()),
                        ("mu".into(), m.to_string()),
                        ("corona+core".into(), sum.to_string()),
                        ("2(n-mu)".into(), bound.to_string()),
                    ],
                }))
            } else {
                Ok(Outcome::Miss)
            }
        }
        Mode::Theorem(id) => {
            let reports = if id == "all" {
                run_all(g, ctx)
            } else {
                let check = find_check(id).ok_or_else(|| SearchError::UnknownCheck(id.clone()))?;
                vec![(check.run)(g, ctx)]
            };
            for r in &reports {
                if r.verdict == Verdict::Fails {
                    return Err(SearchError::TheoremViolation {
                        check: r.id,
                        graph6: graph6.to_string(),
                        details: r.witness_summary(),
                    });
                }
            }
            Ok(Outcome::Miss)
        }
    }
}

fn render_set(s: VertexSet) -> String {
    let members: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", members.join(","))
}

/// One seeded random graph: each unordered pair becomes an edge
/// independently with probability `p`. Pairs are visited in lexicographic
/// order; each draw takes one `next_u64`, mapped to [0, 1) by the top 53
/// bits, so identical (n, p, seed) give identical graphs on any platform.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, SearchError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(SearchError::InvalidSpec(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    if n > CRITICAL_MAX_N {
        return Err(SearchError::InvalidSpec(format!(
            "n={n} exceeds the search limit of {CRITICAL_MAX_N}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(erdos_renyi_from(&mut rng, n, p))
}

fn erdos_renyi_from(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if unit_f64(rng.next_u64()) < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("generated edges are in range")
}

#[inline]
fn unit_f64(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Renders a result in the newline-delimited hit format with the summary
/// footer. Timing is excluded unless requested so byte comparisons are
/// stable.
pub fn render_search_result(result: &SearchResult, include_timing: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("# prng={PRNG_NAME}\n"));
    for hit in &result.hits {
        out.push_str(&hit.graph6);
        for (k, v) in &hit.diagnosis {
            out.push_str(&format!(" {k}={v}"));
        }
        out.push('\n');
    }
    let seed = match result.seed {
        Some(s) => s.to_string(),
        None => "none".to_string(),
    };
    out.push_str(&format!(
        "examined={} skipped={} hits={} seed={seed}\n",
        result.examined,
        result.skipped,
        result.hits.len()
    ));
    if include_timing {
        out.push_str(&format!("elapsed-ms={}\n", result.elapsed.as_millis()));
    }
    out
}

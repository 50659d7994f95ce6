//! Command-line frontend: parse graph/matroid files, dispatch the exact
//! computations, and emit human-readable or JSON reports.
//!
//! Exit codes are a stable contract: 0 success (and verdict match), 2 file
//! parse error, 3 precondition violation (disconnected input, bad index,
//! cap exceeded, not totally unimodular, ...), 4 classification or
//! agreement mismatch.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use sha2::{Digest, Sha256};

use critgrp::caps_from_override;
use critgrp::exec::parallel_map;
use critgrp::formats::{
    parse_divisor, parse_graph, parse_matroid, serialize_divisor, serialize_graph,
    serialize_matroid, ParseError,
};
use critgrp::report::{CheckLine, FoundItem, Report};
use critgrp_core::classify::{
    classify_biconnected_graphs_from, classify_regular_matroids_exp2_from,
    enumerate_connected_multigraphs, enumerate_tu_candidates, evaluate_graph,
    evaluate_tu_candidate, SearchBounds,
};
use critgrp_core::graph::Orientation;
use critgrp_core::jacobian::{
    check_definition_equivalence, check_exact_sequence, jacobian_dual_cut, jacobian_edge_lattice,
    jacobian_laplacian, projection_and_dual,
};
use critgrp_core::linalg::IntMatrix;
use critgrp_core::matroid::{
    exponent2_structure_check, exponent3_entry_diagnostics, RegularMatroidRep,
};
use critgrp_core::sandpile::{dhar_burn, jacobian_by_reduced_divisors, q_reduce};
use critgrp_core::{Caps, Error};

const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(
    name = "critgrp",
    version,
    about = "Critical groups of multigraphs and regular matroids, with exact arithmetic"
)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Upper bound on worker threads for classification sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Route {
    Laplacian,
    EdgeLattice,
    DualCut,
    ReducedDivisors,
    All,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Kind {
    Graph,
    Matroid,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ClassKind {
    #[value(alias = "g")]
    Graphs,
    #[value(alias = "m")]
    Matroids,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Jacobian of a graph, or of a matroid representation via
    /// the dual-cut route.
    Jacobian {
        #[arg(long, value_enum, default_value = "all")]
        route: Route,
        #[arg(long, value_enum, default_value = "graph")]
        kind: Kind,
        path: PathBuf,
    },
    /// Reduce a divisor to the unique q-reduced representative of its class.
    Reduce {
        #[arg(long, default_value_t = 0)]
        q: usize,
        graph: PathBuf,
        divisor: PathBuf,
    },
    /// Run Dhar's burning algorithm on a divisor and print the trace.
    Burn {
        #[arg(long, default_value_t = 0)]
        q: usize,
        graph: PathBuf,
        divisor: PathBuf,
    },
    /// Exhaustively classify small objects by Jacobian exponent.
    Classify {
        #[arg(long, value_enum)]
        kind: ClassKind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        #[arg(long)]
        max_rank: Option<usize>,
        #[arg(long)]
        max_elements: Option<usize>,
    },
    /// Print the exact projection matrix onto the cut space, its
    /// denominator histogram, and the applicable structure diagnostics.
    Project {
        #[arg(long, value_enum, default_value = "graph")]
        kind: Kind,
        path: PathBuf,
    },
    /// Verify that every Jacobian construction agrees on a graph.
    CheckEquivalence { graph: PathBuf },
}

enum CmdError {
    Parse(String),
    Precondition(String),
}

impl From<ParseError> for CmdError {
    fn from(e: ParseError) -> Self {
        CmdError::Parse(e.to_string())
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        CmdError::Precondition(e.to_string())
    }
}

fn read_file(path: &Path) -> Result<(String, String), CmdError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CmdError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let digest = format!("sha256:{:x}", Sha256::digest(&bytes));
    let text = String::from_utf8(bytes)
        .map_err(|_| CmdError::Parse(format!("{} is not UTF-8", path.display())))?;
    Ok((text, digest))
}

fn digest_of(text: &str) -> String {
    format!("sha256:{:x}", Sha256::digest(text.as_bytes()))
}

fn rational_str(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn caps() -> Result<Caps, CmdError> {
    match std::env::var("CRITGRP_CAP_OVERRIDE") {
        Ok(value) => caps_from_override(&value)
            .map_err(|e| CmdError::Precondition(format!("CRITGRP_CAP_OVERRIDE: {e}"))),
        Err(_) => Ok(Caps::default()),
    }
}

fn thread_count(cli_threads: Option<usize>) -> usize {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    cli_threads.unwrap_or(available).max(1)
}

/// Verified matroid representation from a file: entries checked by the
/// parser, total unimodularity checked here (under the cap).
fn load_matroid(text: &str, caps: &Caps) -> Result<RegularMatroidRep, CmdError> {
    let matrix = parse_matroid(text)?;
    Ok(RegularMatroidRep::new(matrix, caps.tu_dimension)?)
}

fn cmd_jacobian(route: Route, kind: Kind, path: &Path) -> Result<(Report, u8), CmdError> {
    let caps = caps()?;
    let (text, digest) = read_file(path)?;
    let mut report = Report::new("jacobian", digest);
    let mut exit = 0u8;

    match kind {
        Kind::Matroid => {
            if route != Route::DualCut && route != Route::All {
                return Err(CmdError::Precondition(
                    "only the dual-cut route is defined for matroid input".into(),
                ));
            }
            let rep = load_matroid(&text, &caps)?;
            let group = rep.jacobian()?;
            report.set_group(&group);
        }
        Kind::Graph => {
            let g = parse_graph(&text)?;
            match route {
                Route::Laplacian => report.set_group(&jacobian_laplacian(&g)?),
                Route::EdgeLattice => {
                    let o = Orientation::default_for(&g);
                    report.set_group(&jacobian_edge_lattice(&g, &o)?);
                }
                Route::DualCut => {
                    let o = Orientation::default_for(&g);
                    report.set_group(&jacobian_dual_cut(&g.incidence_matrix(&o)?)?);
                }
                Route::ReducedDivisors => {
                    report.set_group(&jacobian_by_reduced_divisors(&g, 0, caps.group_order)?)
                }
                Route::All => {
                    let eq = check_definition_equivalence(&g, caps.group_order)?;
                    report.set_group(&eq.routes[0].1);
                    for (name, group) in &eq.routes {
                        report.checks.push(CheckLine::new(
                            format!("route-{name}"),
                            true,
                            group.to_string(),
                        ));
                    }
                    report
                        .checks
                        .push(CheckLine::new("routes-agree", eq.agree, ""));
                    if !eq.agree {
                        report.verdict = Some("mismatch".into());
                        exit = EXIT_MISMATCH;
                    }
                }
            }
        }
    }
    Ok((report, exit))
}

fn cmd_reduce(q: usize, graph: &Path, divisor: &Path) -> Result<(Report, u8), CmdError> {
    let (gtext, gdigest) = read_file(graph)?;
    let (dtext, ddigest) = read_file(divisor)?;
    let g = parse_graph(&gtext)?;
    let d = parse_divisor(&dtext, g.vertex_count())?;
    let mut report = Report::new("reduce", format!("{gdigest}+{ddigest}"));

    let reduced = q_reduce(&g, &d, q)?;
    // Final certification burn; its trace is the interesting output.
    let outcome = dhar_burn(&g, &reduced, q)?;
    report.divisor = Some(reduced.values().iter().map(|v| v.to_string()).collect());
    report.all_burnt = Some(outcome.all_burnt);
    report.burn_rounds = Some(outcome.rounds);
    report.checks.push(CheckLine::new(
        "reduced-form-certified",
        outcome.all_burnt,
        "",
    ));
    Ok((report, 0))
}

fn cmd_burn(q: usize, graph: &Path, divisor: &Path) -> Result<(Report, u8), CmdError> {
    let (gtext, gdigest) = read_file(graph)?;
    let (dtext, ddigest) = read_file(divisor)?;
    let g = parse_graph(&gtext)?;
    let d = parse_divisor(&dtext, g.vertex_count())?;
    let mut report = Report::new("burn", format!("{gdigest}+{ddigest}"));

    let outcome = dhar_burn(&g, &d, q)?;
    report.divisor = Some(serialize_divisor(&d).split(' ').map(String::from).collect());
    report.all_burnt = Some(outcome.all_burnt);
    report.burn_rounds = Some(outcome.rounds);
    report.checks.push(CheckLine::new(
        "divisor-is-q-reduced",
        outcome.all_burnt,
        if outcome.all_burnt {
            String::new()
        } else {
            let survivors: Vec<usize> = outcome
                .burnt
                .iter()
                .enumerate()
                .filter(|(_, &b)| !b)
                .map(|(v, _)| v)
                .collect();
            format!("unburnt vertices {survivors:?}")
        },
    ));
    Ok((report, 0))
}

fn cmd_classify(
    kind: ClassKind,
    k: usize,
    bounds: SearchBounds,
    threads: usize,
) -> Result<(Report, u8), CmdError> {
    let caps = caps()?;
    let digest = digest_of(&format!(
        "classify kind={} k={k} vertices={} edges={} rank={} elements={}",
        match kind {
            ClassKind::Graphs => "graphs",
            ClassKind::Matroids => "matroids",
        },
        bounds.max_vertices,
        bounds.max_edges,
        bounds.max_rank,
        bounds.max_elements
    ));
    let mut report = Report::new("classify", digest);
    let mut exit = 0u8;

    match kind {
        ClassKind::Graphs => {
            let family = enumerate_connected_multigraphs(&bounds, &caps)?;
            let evaluations = parallel_map(&family, threads, |g| evaluate_graph(g, &caps))
                .into_iter()
                .collect::<Result<Vec<_>, _>>()?;
            let result = classify_biconnected_graphs_from(k, &bounds, &caps, &evaluations)?;
            report.found = Some(
                result
                    .found
                    .iter()
                    .map(|e| FoundItem {
                        object: serialize_graph(&e.graph),
                        invariant_factors: e
                            .jacobian
                            .factors()
                            .iter()
                            .map(|d| d.to_string())
                            .collect(),
                    })
                    .collect(),
            );
            report.expected = Some(result.expected.iter().map(serialize_graph).collect());
            report.checks.push(CheckLine::new(
                "found-set-equals-expected-set",
                result.matches,
                format!("{} graphs searched", family.len()),
            ));
            report.verdict = Some(if result.matches { "match" } else { "mismatch" }.into());
            if !result.matches {
                exit = EXIT_MISMATCH;
            }
        }
        ClassKind::Matroids => {
            if k != 2 {
                return Err(CmdError::Precondition(
                    Error::UnsupportedExponent { k }.to_string(),
                ));
            }
            let candidates = enumerate_tu_candidates(&bounds);
            let survivors = parallel_map(&candidates, threads, |rep| {
                evaluate_tu_candidate(rep, &caps)
            })
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .collect::<Vec<_>>();
            let result = classify_regular_matroids_exp2_from(&bounds, candidates.len(), survivors);
            report.found = Some(
                result
                    .survivors
                    .iter()
                    .map(|s| FoundItem {
                        object: serialize_matroid(s.rep.matrix()),
                        invariant_factors: s
                            .jacobian
                            .factors()
                            .iter()
                            .map(|d| d.to_string())
                            .collect(),
                    })
                    .collect(),
            );
            let max_elements = result
                .survivors
                .iter()
                .map(|s| s.element_count)
                .max()
                .unwrap_or(0);
            report.checks.push(CheckLine::new(
                "survivors-have-at-most-two-elements",
                max_elements <= 2,
                format!(
                    "{} candidates, {} survivors, largest has {max_elements} element(s)",
                    result.candidates_checked,
                    result.survivors.len()
                ),
            ));
            let structures_ok = result
                .survivors
                .iter()
                .all(|s| s.structure.applicable && s.structure.passed());
            report.checks.push(CheckLine::new(
                "survivor-projection-structure",
                structures_ok,
                "",
            ));
            report.verdict = Some(if result.matches { "match" } else { "mismatch" }.into());
            if !result.matches {
                exit = EXIT_MISMATCH;
            }
        }
    }
    Ok((report, exit))
}

fn cmd_project(kind: Kind, path: &Path) -> Result<(Report, u8), CmdError> {
    let caps = caps()?;
    let (text, digest) = read_file(path)?;
    let mut report = Report::new("project", digest);

    let rep: RegularMatroidRep = match kind {
        Kind::Graph => {
            let g = parse_graph(&text)?;
            let d = g.incidence_matrix(&Orientation::default_for(&g))?;
            RegularMatroidRep::new_unverified(d)?
        }
        Kind::Matroid => load_matroid(&text, &caps)?,
    };
    let matrix: &IntMatrix = rep.matrix();
    let dec = projection_and_dual(matrix);
    let n = dec.projection.rows();

    report.projection = Some(
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| rational_str(&dec.projection[(i, j)]))
                    .collect()
            })
            .collect(),
    );
    let mut histogram: BTreeMap<String, usize> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            *histogram
                .entry(dec.projection[(i, j)].denom().to_string())
                .or_default() += 1;
        }
    }
    report.denominator_histogram = Some(histogram.into_iter().collect());
    report.set_group(&jacobian_dual_cut(matrix)?);

    match exponent2_structure_check(&rep, caps.circuit_elements) {
        Ok(structure) => report.push_structure("exponent2", &structure),
        Err(Error::CapExceeded { .. }) => report.checks.push(CheckLine {
            name: "exponent2".into(),
            status: "n/a".into(),
            detail: "skipped: circuit enumeration cap".into(),
        }),
        Err(e) => return Err(e.into()),
    }
    report.push_structure("exponent3", &exponent3_entry_diagnostics(&rep)?);
    Ok((report, 0))
}

fn cmd_check_equivalence(graph: &Path) -> Result<(Report, u8), CmdError> {
    let caps = caps()?;
    let (text, digest) = read_file(graph)?;
    let g = parse_graph(&text)?;
    let mut report = Report::new("check-equivalence", digest);

    let eq = check_definition_equivalence(&g, caps.group_order)?;
    report.set_group(&eq.routes[0].1);
    for (name, group) in &eq.routes {
        report.checks.push(CheckLine::new(
            format!("route-{name}"),
            true,
            group.to_string(),
        ));
    }
    report
        .checks
        .push(CheckLine::new("routes-agree", eq.agree, ""));

    let sequence = check_exact_sequence(&g)?;
    let sequence_ok = sequence.passed();
    report.push_structure("exact-sequence", &sequence);

    let ok = eq.agree && sequence_ok;
    report.verdict = Some(if ok { "match" } else { "mismatch" }.into());
    Ok((report, if ok { 0 } else { EXIT_MISMATCH }))
}

fn run(cli: &Cli) -> Result<(Report, u8), CmdError> {
    let started = Instant::now();
    let threads = thread_count(cli.threads);
    let mut outcome = match &cli.command {
        Command::Jacobian { route, kind, path } => cmd_jacobian(*route, *kind, path)?,
        Command::Reduce { q, graph, divisor } => cmd_reduce(*q, graph, divisor)?,
        Command::Burn { q, graph, divisor } => cmd_burn(*q, graph, divisor)?,
        Command::Classify {
            kind,
            k,
            max_vertices,
            max_edges,
            max_rank,
            max_elements,
        } => {
            let defaults = SearchBounds::default();
            let bounds = SearchBounds {
                max_vertices: max_vertices.unwrap_or(defaults.max_vertices),
                max_edges: max_edges.unwrap_or(defaults.max_edges),
                max_rank: max_rank.unwrap_or(defaults.max_rank),
                max_elements: max_elements.unwrap_or(defaults.max_elements),
            };
            cmd_classify(*kind, *k, bounds, threads)?
        }
        Command::Project { kind, path } => cmd_project(*kind, path)?,
        Command::CheckEquivalence { graph } => cmd_check_equivalence(graph)?,
    };
    outcome.0.timing_ms = started.elapsed().as_millis() as u64;
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, code)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            ExitCode::from(code)
        }
        Err(CmdError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

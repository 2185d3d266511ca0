//! Command definitions and dispatch.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use zipcross_core::bundles::{all_bundles, find_coherent_bundles, Bundle};
use zipcross_core::critical::{
    decompose_internally_4ec, extract_critical_subgraph, is_crossing_critical, Criticality, FourEcError,
};
use zipcross_core::cuts::enumerate_min_cuts;
use zipcross_core::decompose::{cr_via_decomposition, DecomposePolicy, DecompositionTree};
use zipcross_core::mcr::{minor_crossing_number, tree_product_bound, McrLimits, DEFAULT_DEGREE_CAP};
use zipcross_core::solver::verify_certificate;
use zipcross_core::zip::{k33_chain, zip_detailed, ZipSpec};
use zipcross_core::{families, Color, EdgeId, MultiGraph, Outcome, Solver, SolverConfig, VertexId};

use crate::format::{emit_edge_list, parse, Format};
use crate::generate;
use crate::json::{CertificateDoc, CrReport, DecomposeReport, TreeDoc};
use crate::limits::Limits;
use crate::parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "zipcross",
    version,
    about = "Exact crossing numbers, zip products and edge-cut decomposition"
)]
pub struct Cli {
    /// Stop searching after this many nodes (default: $ZIPCROSS_NODE_LIMIT)
    #[arg(long, global = true)]
    pub node_limit: Option<u64>,
    /// Stop searching after this many seconds (default: $ZIPCROSS_TIME_LIMIT)
    #[arg(long, global = true)]
    pub time_limit: Option<f64>,
    /// Input format; guessed from the content when absent
    #[arg(long, global = true, value_enum)]
    pub format: Option<InputFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum InputFormat {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenKind {
    Random,
    Zip,
    Chain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact crossing number with a certificate
    Cr {
        /// Graph file, `-` for stdin, or a family name such as K5 or K3,3
        input: String,
        /// Only decide whether cr <= BUDGET
        #[arg(long)]
        budget: Option<u32>,
        #[arg(long)]
        no_memo: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Write the certificate as JSON to this file
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Crossing number by splitting at small edge cuts
    Decompose {
        input: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=4))]
        max_cut_size: u8,
        /// Allow size-4 splits, which only give a lower bound
        #[arg(long)]
        allow_lb: bool,
        #[arg(long)]
        json: bool,
    },
    /// Zip product of two graphs, printed as an edge list
    Zip {
        input1: String,
        input2: String,
        /// Zip vertices as `v1,v2`
        #[arg(long, value_parser = vertex_pair)]
        at: (u32, u32),
        /// Bijection as a comma list; identity when absent
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
    /// Minimal edge cuts of bounded size
    Cuts {
        input: String,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Leave out cuts that isolate one vertex
        #[arg(long)]
        nontrivial: bool,
        #[arg(long)]
        json: bool,
    },
    /// Bundles at a vertex, one per admissible sink
    Bundles {
        input: String,
        #[arg(long)]
        vertex: u32,
        /// Look for a coherent pair instead
        #[arg(long)]
        coherent: bool,
        #[arg(long)]
        json: bool,
    },
    /// Crossing-criticality test and tools
    Critical {
        input: String,
        /// Print a crossing-critical subgraph with the same crossing number
        #[arg(long, conflicts_with = "four_ec")]
        extract: bool,
        /// Edge ids that extraction must keep
        #[arg(long, value_delimiter = ',')]
        protect: Vec<u32>,
        /// Split into internally 4-edge-connected critical factors
        #[arg(long)]
        four_ec: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minor crossing number within the cubic-expansion class
    Mcr {
        input: String,
        #[arg(long, default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: usize,
        #[arg(long)]
        max_expansions: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Lower bound on the minor crossing number of a tree times a graph
    ProductBound {
        #[arg(long)]
        tree: String,
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a crossing certificate against a graph
    Verify {
        input: String,
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Seeded instance generator
    Gen {
        #[arg(long, value_enum, default_value = "random")]
        kind: GenKind,
        #[arg(long, default_value_t = generate::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        m: usize,
        #[arg(long)]
        multi: bool,
        /// Zip degree for `--kind zip`
        #[arg(long, default_value_t = 3)]
        degree: usize,
        /// Chain length for `--kind chain`
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    /// Print a named graph as an edge list
    Family { name: String },
}

/// What a command printed and how it exits.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Response {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Response {
    fn ok(stdout: String) -> Self {
        Response {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Response {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn input_error(msg: impl Into<String>) -> Self {
        Response {
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
            code: EXIT_INPUT,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("documents serialize");
    s.push('\n');
    s
}

/// Named graphs: K<n>, K<a>,<b>, C<n>, P<n>, S<k>, chain<t>, petersen,
/// prism, apex-k4.
pub fn family(name: &str) -> Option<MultiGraph> {
    let lower = name.trim().to_ascii_lowercase();
    let num = |s: &str| s.parse::<usize>().ok();
    match lower.as_str() {
        "petersen" => return Some(families::petersen()),
        "prism" => return Some(families::prism()),
        "apex-k4" => return Some(families::apex_over_doubled_k4()),
        _ => {}
    }
    if let Some(t) = lower.strip_prefix("chain") {
        return num(t).map(k33_chain);
    }
    let (head, rest) = lower.split_at(1.min(lower.len()));
    match head {
        "k" => match rest.split_once(',') {
            Some((a, b)) => Some(families::complete_bipartite(num(a)?, num(b)?)),
            None => num(rest).map(families::complete),
        },
        "c" => num(rest).filter(|&n| n >= 3).map(families::cycle),
        "p" => num(rest).map(families::path),
        "s" => num(rest).map(families::star),
        _ => None,
    }
}

fn load(spec: &str, format: Option<InputFormat>) -> Result<MultiGraph, String> {
    let format = format.map(|f| match f {
        InputFormat::EdgeList => Format::EdgeList,
        InputFormat::Graph6 => Format::Graph6,
    });
    let text = if spec == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        s
    } else if Path::new(spec).exists() {
        std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?
    } else if let Some(g) = family(spec) {
        return Ok(g);
    } else {
        return Err(format!("{spec}: no such file or graph family"));
    };
    parse(&text, format).map_err(|e| format!("{spec}: {e}"))
}

fn vertex_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or("expected `v1,v2`")?;
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("`{t}` is not a vertex index"))
    };
    Ok((num(a)?, num(b)?))
}

fn vertex(g: &MultiGraph, v: u32) -> Result<VertexId, String> {
    let v = VertexId(v);
    if g.has_vertex(v) {
        Ok(v)
    } else {
        Err(format!("vertex {v} is not in the graph"))
    }
}

pub fn run<I, T>(args: I) -> Response
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Response::ok(text)
            } else {
                Response {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => r,
        Err(msg) => Response::input_error(msg),
    }
}

fn dispatch(cli: &Cli) -> Result<Response, String> {
    let limits = Limits::resolve(cli.node_limit, cli.time_limit)?;
    let config = SolverConfig {
        node_limit: limits.nodes,
        ..SolverConfig::default()
    };
    let fmt = cli.format;
    match &cli.command {
        Command::Cr {
            input,
            budget,
            no_memo,
            threads,
            certificate,
            json,
        } => {
            let g = load(input, fmt)?;
            let config = SolverConfig {
                memoize: !no_memo,
                ..config
            };
            let deadline = limits.deadline();
            let start = Instant::now();
            let out = parallel::crossing_number(&g, *budget, &config, *threads, &deadline);
            let wall = start.elapsed().as_millis() as u64;
            if let (Outcome::Solved(r), Some(path)) = (&out, certificate) {
                let doc = CertificateDoc::from(&r.certificate);
                std::fs::write(path, to_json(&doc)).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let code = match out {
                Outcome::Solved(_) => EXIT_OK,
                Outcome::ExceedsBudget { .. } => EXIT_NEGATIVE,
                Outcome::Unknown { .. } => EXIT_RESOURCE,
            };
            let text = if *json {
                to_json(&CrReport::new(&out, *budget, wall))
            } else {
                match &out {
                    Outcome::Solved(r) => format!("{}\n", r.value),
                    Outcome::ExceedsBudget { budget, lower, .. } => {
                        format!("exceeds budget {budget} (cr >= {lower})\n")
                    }
                    Outcome::Unknown { lower, upper, .. } => format!("unknown, cr in [{lower}, {upper}]\n"),
                }
            };
            Ok(Response::with_code(text, code))
        }
        Command::Decompose {
            input,
            max_cut_size,
            allow_lb,
            json,
        } => {
            let g = load(input, fmt)?;
            let policy = DecomposePolicy {
                max_cut_size: *max_cut_size as usize,
                allow_lower_bound: *allow_lb,
            };
            let deadline = limits.deadline();
            let mut solver = Solver::with_interrupt(config, &deadline);
            let start = Instant::now();
            let tree = cr_via_decomposition(&g, &policy, &mut solver).map_err(|e| e.to_string())?;
            let wall = start.elapsed().as_millis() as u64;
            let v = tree.value();
            let lower_bound_only = !all_splits_exact(&tree);
            let leaves_solved = tree.leaves().iter().all(|l| l.value().exact);
            let code = if leaves_solved { EXIT_OK } else { EXIT_RESOURCE };
            let text = if *json {
                to_json(&DecomposeReport {
                    value: v.lower,
                    exact: v.exact,
                    lower_bound_only,
                    upper: v.upper,
                    splits: tree.split_count(),
                    wall_ms: wall,
                    tree: TreeDoc::from(&tree),
                })
            } else {
                let mut s = String::new();
                if v.exact {
                    let _ = writeln!(s, "{} exact", v.lower);
                } else if !leaves_solved {
                    match v.upper {
                        Some(u) => {
                            let _ = writeln!(s, "unknown, cr in [{}, {u}]", v.lower);
                        }
                        None => {
                            let _ = writeln!(s, "unknown, cr >= {}", v.lower);
                        }
                    }
                } else {
                    let _ = writeln!(s, "≥ {} lower bound", v.lower);
                }
                let _ = writeln!(s, "splits {}", tree.split_count());
                render_tree(&tree, 0, &mut s);
                s
            };
            Ok(Response::with_code(text, code))
        }
        Command::Zip {
            input1,
            input2,
            at,
            sigma,
            json,
        } => {
            let g1 = load(input1, fmt)?;
            let g2 = load(input2, fmt)?;
            let v1 = vertex(&g1, at.0)?;
            let v2 = vertex(&g2, at.1)?;
            let sigma = sigma.clone().unwrap_or_else(|| (0..g1.degree(v1)).collect());
            let z = zip_detailed(&ZipSpec { g1, v1, g2, v2, sigma }).map_err(|e| e.to_string())?;
            let g = z.graph.compact();
            let text = if *json {
                let blue: Vec<usize> = g
                    .edges()
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.color == Some(Color::Blue))
                    .map(|(i, _)| i)
                    .collect();
                to_json(&json!({
                    "vertices": g.vertex_count(),
                    "edges": g.index_pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
                    "blue": blue,
                }))
            } else {
                emit_edge_list(&g)
            };
            Ok(Response::ok(text))
        }
        Command::Cuts {
            input,
            max_size,
            nontrivial,
            json,
        } => {
            let g = load(input, fmt)?;
            let cuts = enumerate_min_cuts(&g, *max_size, *nontrivial).map_err(|e| e.to_string())?;
            let text = if *json {
                let docs: Vec<_> = cuts
                    .iter()
                    .map(|c| {
                        json!({
                            "edges": c.edges.iter().map(|e| e.0).collect::<Vec<_>>(),
                            "sides": [
                                c.sides.0.iter().map(|v| v.0).collect::<Vec<_>>(),
                                c.sides.1.iter().map(|v| v.0).collect::<Vec<_>>(),
                            ],
                            "trivial": c.is_trivial(),
                        })
                    })
                    .collect();
                to_json(&docs)
            } else {
                let mut s = String::new();
                for c in &cuts {
                    let es: Vec<String> = c.edges.iter().map(|e| e.to_string()).collect();
                    let _ = writeln!(
                        s,
                        "size {}: {} | sides {} + {}{}",
                        c.size(),
                        es.join(" "),
                        c.sides.0.len(),
                        c.sides.1.len(),
                        if c.is_trivial() { " trivial" } else { "" }
                    );
                }
                let _ = writeln!(s, "{} cuts", cuts.len());
                s
            };
            Ok(Response::ok(text))
        }
        Command::Bundles {
            input,
            vertex: v,
            coherent,
            json,
        } => {
            let g = load(input, fmt)?;
            let v = vertex(&g, *v)?;
            let found: Vec<Bundle> = if *coherent {
                find_coherent_bundles(&g, v)
                    .map(|(a, b)| vec![a, b])
                    .unwrap_or_default()
            } else {
                all_bundles(&g, v)
            };
            let code = if found.is_empty() { EXIT_NEGATIVE } else { EXIT_OK };
            let text = if *json {
                let docs: Vec<_> = found.iter().map(|b| bundle_json(&g, b)).collect();
                to_json(&json!({ "center": v.0, "coherent": *coherent, "bundles": docs }))
            } else if found.is_empty() {
                if *coherent {
                    "no coherent bundles\n".to_string()
                } else {
                    "no bundle\n".to_string()
                }
            } else {
                let mut s = String::new();
                for b in &found {
                    let paths: Vec<String> = path_vertices(&g, b)
                        .iter()
                        .map(|p| {
                            let vs: Vec<String> = p.iter().map(|v| v.0.to_string()).collect();
                            format!("[{}]", vs.join(" "))
                        })
                        .collect();
                    let _ = writeln!(s, "sink {}: {}", b.sink.0, paths.join(" "));
                }
                s
            };
            Ok(Response::with_code(text, code))
        }
        Command::Critical {
            input,
            extract,
            protect,
            four_ec,
            json,
        } => {
            let g = load(input, fmt)?;
            let deadline = limits.deadline();
            let mut solver = Solver::with_interrupt(config, &deadline);
            if *extract {
                let protected: Vec<EdgeId> = protect.iter().map(|&e| EdgeId(e)).collect();
                let Ok(x) = extract_critical_subgraph(&g, &protected, &mut solver) else {
                    return Ok(Response::with_code("indeterminate\n".into(), EXIT_RESOURCE));
                };
                let kept: Vec<u32> = x.graph.edges().iter().map(|e| e.id.0).collect();
                let nc: Vec<u32> = x.noncritical_protected.iter().map(|e| e.0).collect();
                let text = if *json {
                    to_json(&json!({ "value": x.value, "kept_edges": kept, "noncritical_protected": nc }))
                } else {
                    let mut s = format!("# cr = {}, kept edge ids: {kept:?}\n", x.value);
                    if !nc.is_empty() {
                        let _ = writeln!(s, "# protected but not critical: {nc:?}");
                    }
                    s.push_str(&emit_edge_list(&x.graph));
                    s
                };
                return Ok(Response::ok(text));
            }
            if *four_ec {
                return match decompose_internally_4ec(&g, &mut solver) {
                    Ok(parts) => {
                        let mut values = Vec::new();
                        for p in &parts {
                            values.push(solver.crossing_number(p, None).value().unwrap_or(0));
                        }
                        let text = if *json {
                            let docs: Vec<_> = parts
                                .iter()
                                .zip(&values)
                                .map(|(p, v)| {
                                    json!({
                                        "value": v,
                                        "vertices": p.vertex_count(),
                                        "edges": p.compact().index_pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
                                    })
                                })
                                .collect();
                            to_json(&json!({ "factors": docs, "total": values.iter().sum::<u32>() }))
                        } else {
                            let mut s = format!("{} factors, total {}\n", parts.len(), values.iter().sum::<u32>());
                            for (i, (p, v)) in parts.iter().zip(&values).enumerate() {
                                let _ = writeln!(s, "# factor {i}: cr = {v}");
                                s.push_str(&emit_edge_list(&p.compact()));
                            }
                            s
                        };
                        Ok(Response::ok(text))
                    }
                    Err(FourEcError::NotCritical(e)) => Ok(Response::with_code(
                        format!("not critical: deleting {e} keeps the crossing number\n"),
                        EXIT_NEGATIVE,
                    )),
                    Err(FourEcError::Indeterminate) => Ok(Response::with_code("indeterminate\n".into(), EXIT_RESOURCE)),
                    Err(e) => Err(e.to_string()),
                };
            }
            let verdict = is_crossing_critical(&g, &mut solver);
            let code = match verdict {
                Criticality::Critical { .. } => EXIT_OK,
                Criticality::NotCritical { .. } => EXIT_NEGATIVE,
                Criticality::Indeterminate => EXIT_RESOURCE,
            };
            let text = if *json {
                to_json(&match verdict {
                    Criticality::Critical { value } => json!({ "critical": true, "value": value }),
                    Criticality::NotCritical { value, edge } => {
                        json!({ "critical": false, "value": value, "witness_edge": edge.0 })
                    }
                    Criticality::Indeterminate => json!({ "critical": null }),
                })
            } else {
                match verdict {
                    Criticality::Critical { value } => format!("critical (cr = {value})\n"),
                    Criticality::NotCritical { value, edge } => {
                        format!("not critical: deleting {edge} keeps cr = {value}\n")
                    }
                    Criticality::Indeterminate => "indeterminate\n".into(),
                }
            };
            Ok(Response::with_code(text, code))
        }
        Command::Mcr {
            input,
            degree_cap,
            max_expansions,
            json,
        } => {
            let g = load(input, fmt)?;
            let deadline = limits.deadline();
            let mut solver = Solver::with_interrupt(config, &deadline);
            let lim = McrLimits {
                max_expansions: *max_expansions,
            };
            let res = minor_crossing_number(&g, *degree_cap, lim, &mut solver).map_err(|e| e.to_string())?;
            let Some(r) = res else {
                return Ok(Response::with_code("unknown\n".into(), EXIT_RESOURCE));
            };
            let code = if r.is_exact() || r.class_complete {
                EXIT_OK
            } else {
                EXIT_RESOURCE
            };
            let text = if *json {
                to_json(&json!({
                    "lower": r.lower,
                    "upper": r.upper,
                    "exact": r.is_exact(),
                    "class_value": r.class_value(),
                    "class_complete": r.class_complete,
                    "examined": r.examined,
                    "realizing": {
                        "vertices": r.realizing.host.vertex_count(),
                        "edges": r.realizing.host.compact().index_pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
                    },
                }))
            } else if r.is_exact() {
                format!("{}\n", r.upper)
            } else {
                format!(
                    "mcr in [{}, {}], cubic-expansion class {}\n",
                    r.lower,
                    r.upper,
                    if r.class_complete {
                        "minimum"
                    } else {
                        "search incomplete"
                    }
                )
            };
            Ok(Response::with_code(text, code))
        }
        Command::ProductBound { tree, graph, json } => {
            let t = load(tree, fmt)?;
            let g = load(graph, fmt)?;
            let deadline = limits.deadline();
            let mut solver = Solver::with_interrupt(config, &deadline);
            let b = tree_product_bound(&t, &g, &mut solver).map_err(|e| e.to_string())?;
            let text = if *json {
                to_json(&json!({ "bound": b }))
            } else {
                format!("{b}\n")
            };
            Ok(Response::ok(text))
        }
        Command::Verify {
            input,
            certificate,
            json,
        } => {
            let g = load(input, fmt)?;
            let raw = std::fs::read_to_string(certificate).map_err(|e| format!("{}: {e}", certificate.display()))?;
            let doc: CertificateDoc =
                serde_json::from_str(&raw).map_err(|e| format!("{}: {e}", certificate.display()))?;
            let cert = doc.to_certificate()?;
            let verdict = verify_certificate(&g, &cert);
            let code = if verdict.is_ok() { EXIT_OK } else { EXIT_NEGATIVE };
            let text = match (&verdict, json) {
                (Ok(()), true) => to_json(&json!({ "valid": true, "value": cert.value })),
                (Err(e), true) => to_json(&json!({ "valid": false, "reason": e.to_string() })),
                (Ok(()), false) => format!("valid ({} crossings)\n", cert.value),
                (Err(e), false) => format!("invalid: {e}\n"),
            };
            Ok(Response::with_code(text, code))
        }
        Command::Gen {
            kind,
            seed,
            n,
            m,
            multi,
            degree,
            t,
        } => {
            let mut rng = generate::rng(*seed);
            let text = match kind {
                GenKind::Random => {
                    if *n == 0 || *m + 1 < *n {
                        return Err("need n >= 1 and m >= n - 1".into());
                    }
                    let g = generate::random_connected(&mut rng, *n, *m, *multi);
                    format!("# random connected graph, seed {seed}\n{}", emit_edge_list(&g))
                }
                GenKind::Zip => {
                    if *n < 3 || *degree == 0 {
                        return Err("need n >= 3 and degree >= 1".into());
                    }
                    let spec = generate::random_zip(&mut rng, *n, *degree, m.saturating_sub(*n));
                    let g = zipcross_core::zip::zip(&spec).map_err(|e| e.to_string())?.compact();
                    format!(
                        "# zip product at degree {degree}, seed {seed}, sigma {:?}\n{}",
                        spec.sigma,
                        emit_edge_list(&g)
                    )
                }
                GenKind::Chain => format!("# chain of {t} K3,3\n{}", emit_edge_list(&k33_chain(*t))),
            };
            Ok(Response::ok(text))
        }
        Command::Family { name } => match family(name) {
            Some(g) => Ok(Response::ok(emit_edge_list(&g))),
            None => Err(format!("unknown graph family `{name}`")),
        },
    }
}

fn all_splits_exact(t: &DecompositionTree) -> bool {
    match t {
        DecompositionTree::Leaf { .. } => true,
        DecompositionTree::Split { exact, children, .. } => {
            *exact && all_splits_exact(&children[0]) && all_splits_exact(&children[1])
        }
    }
}

fn render_tree(t: &DecompositionTree, depth: usize, s: &mut String) {
    let pad = "  ".repeat(depth);
    let g = t.graph();
    match t {
        DecompositionTree::Leaf { outcome, .. } => {
            let v = match outcome.bounds() {
                (a, Some(b)) if a == b => format!("cr {a}"),
                (a, Some(b)) => format!("cr in [{a}, {b}]"),
                (a, None) => format!("cr >= {a}"),
            };
            let _ = writeln!(s, "{pad}leaf n={} m={}: {v}", g.vertex_count(), g.edge_count());
        }
        DecompositionTree::Split {
            cut, exact, children, ..
        } => {
            let es: Vec<String> = cut.edges.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(
                s,
                "{pad}split n={} m={} at {} ({})",
                g.vertex_count(),
                g.edge_count(),
                es.join(" "),
                if *exact { "exact" } else { "lower bound" }
            );
            render_tree(&children[0], depth + 1, s);
            render_tree(&children[1], depth + 1, s);
        }
    }
}

/// Vertex sequences of a bundle's paths.
fn path_vertices(g: &MultiGraph, b: &Bundle) -> Vec<Vec<VertexId>> {
    b.paths
        .iter()
        .map(|p| {
            let mut at = p.start;
            let mut vs = vec![at];
            for &e in &p.edges {
                at = g.edge(e).expect("bundle edges exist").other(at);
                vs.push(at);
            }
            vs
        })
        .collect()
}

fn bundle_json(g: &MultiGraph, b: &Bundle) -> serde_json::Value {
    json!({
        "sink": b.sink.0,
        "paths": b.paths.iter().zip(path_vertices(g, b)).map(|(p, vs)| json!({
            "start": p.start.0,
            "edges": p.edges.iter().map(|e| e.0).collect::<Vec<_>>(),
            "vertices": vs.iter().map(|v| v.0).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

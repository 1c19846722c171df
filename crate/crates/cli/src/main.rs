use std::io::Read;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mustpath_core::epe::{epe_with_tree, expand_explicit, ExclusionReport};
use mustpath_core::graph::parse_edge_list_with_warnings;
use mustpath_core::query::{pep_decide, CentralInfo, CepVerdict, Engine, Reason};
use mustpath_core::spqr::{build_spqr, ComponentKind};
use mustpath_core::witness::construct_path;
use mustpath_core::{debug_checks, ElementRef, Error, Graph, VertexId};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "mustpath", version, about = "Simple paths and cycles through required elements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Edge-list file, one `u v` pair per line; `-` reads standard input.
    #[arg(long, short = 'g')]
    graph: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Is there a simple source-target path through both `--via` vertices?
    Pep {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, short = 's')]
        source: String,
        #[arg(long, short = 't')]
        target: String,
        /// Two vertex labels, comma separated.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        via: Vec<String>,
        /// Include a witness path when the answer is yes.
        #[arg(long)]
        witness: bool,
    },
    /// Is there a simple cycle through three elements?
    Cep {
        #[command(flatten)]
        input: GraphArg,
        /// Three elements: `v:LABEL` for vertices, `e:LABEL-LABEL` for edges.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        elements: Vec<String>,
        #[arg(long)]
        witness: bool,
    },
    /// Vertex pairs that no simple source-target path visits together.
    Epe {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long, short = 's')]
        source: String,
        #[arg(long, short = 't')]
        target: String,
        /// Also list every excluded pair.
        #[arg(long)]
        explicit: bool,
    },
    /// Write the SPQR tree of a biconnected graph.
    Spqr {
        #[command(flatten)]
        input: GraphArg,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Engine(#[from] Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(e) if !e.is_input_error() => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Serialize)]
struct QueryOutput {
    answer: bool,
    reason: Reason,
    #[serde(skip_serializing_if = "Option::is_none")]
    central: Option<CentralInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct EpeOutput {
    #[serde(flatten)]
    report: ExclusionReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    explicit: Option<Vec<[String; 2]>>,
}

#[derive(Serialize)]
struct SpqrOutput {
    components: usize,
    s: usize,
    p: usize,
    r: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mustpath: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cmd: Command) -> CliResult<()> {
    match cmd {
        Command::Pep { input, source, target, via, witness } => {
            let g = load(&input.graph)?;
            let [w1, w2] = via.as_slice() else {
                return Err(CliError::Usage(format!("--via needs exactly two labels, got {}", via.len())));
            };
            let (s, t) = (vertex(&g, &source)?, vertex(&g, &target)?);
            let (a, b) = (vertex(&g, w1)?, vertex(&g, w2)?);
            let verdict = pep_decide(&g, s, t, a, b)?;
            let path = if witness && verdict.answer {
                let wp = construct_path(&g, s, t, a, b)?.ok_or_else(|| {
                    Error::Internal("positive path query produced no witness".into())
                })?;
                if debug_checks() {
                    wp.path.validate(&g)?;
                }
                Some(labels(&g, &wp.path.vertices))
            } else {
                None
            };
            eprintln!("path {source} -> {target} via {w1}, {w2}: {}", summary(&verdict));
            emit(&query_output(verdict, path))
        }
        Command::Cep { input, elements, witness } => {
            let g = load(&input.graph)?;
            if elements.len() != 3 {
                return Err(CliError::Usage(format!(
                    "--elements needs exactly three elements, got {}",
                    elements.len()
                )));
            }
            let xs: Vec<ElementRef> =
                elements.iter().map(|x| element(&g, x)).collect::<CliResult<_>>()?;
            let engine = Engine::new(g)?;
            let verdict = engine.cep_decide(xs[0], xs[1], xs[2])?;
            let cycle = if witness && verdict.answer {
                let wc = engine.construct_cycle(xs[0], xs[1], xs[2])?.ok_or_else(|| {
                    Error::Internal("positive cycle query produced no witness".into())
                })?;
                if debug_checks() {
                    wc.cycle.validate(engine.graph())?;
                }
                Some(labels(engine.graph(), &wc.cycle.vertices))
            } else {
                None
            };
            eprintln!("cycle through {}: {}", elements.join(", "), summary(&verdict));
            emit(&query_output(verdict, cycle))
        }
        Command::Epe { input, source, target, explicit } => {
            let g = load(&input.graph)?;
            let (s, t) = (vertex(&g, &source)?, vertex(&g, &target)?);
            let (report, pairs) = match epe_with_tree(&g, s, t) {
                Ok((tree, report)) => {
                    let pairs = if explicit {
                        let set = expand_explicit(&tree, &report)?;
                        Some(
                            set.into_iter()
                                .map(|(a, b)| [g.display_label(a), g.display_label(b)])
                                .collect::<Vec<_>>(),
                        )
                    } else {
                        None
                    };
                    (report, pairs)
                }
                Err(Error::SingleEdge) => (ExclusionReport::default(), explicit.then(Vec::new)),
                Err(e) => return Err(e.into()),
            };
            eprintln!(
                "exclusions {source} -> {target}: {} groups, {} pairs",
                report.groups.len(),
                report.total_pairs
            );
            emit(&EpeOutput { report, explicit: pairs })
        }
        Command::Spqr { input, dot, json } => {
            if dot.is_none() && json.is_none() {
                return Err(CliError::Usage("spqr needs --dot and/or --json".into()));
            }
            let g = load(&input.graph)?;
            let tree = build_spqr(&g)?;
            if debug_checks() {
                tree.check_invariants(true)?;
            }
            if let Some(p) = &dot {
                write(p, &tree.to_dot())?;
            }
            if let Some(p) = &json {
                write(p, &tree.to_json())?;
            }
            let count = |k: ComponentKind| tree.components().iter().filter(|c| c.kind == k).count();
            let out = SpqrOutput {
                components: tree.len(),
                s: count(ComponentKind::S),
                p: count(ComponentKind::P),
                r: count(ComponentKind::R),
            };
            eprintln!("spqr: {} components (S {}, P {}, R {})", out.components, out.s, out.p, out.r);
            emit(&out)
        }
    }
}

fn load(path: &FsPath) -> CliResult<Graph> {
    let name = path.display().to_string();
    let io = |source| CliError::Io { path: name.clone(), source };
    let text = if name == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(io)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    let parsed = parse_edge_list_with_warnings(&text).map_err(|e| match e {
        Error::Parse { .. } | Error::EmptyInput => CliError::Usage(format!("{name}: {e}")),
        other => CliError::Engine(other),
    })?;
    for w in &parsed.warnings {
        eprintln!("warning: {name}: {w}");
    }
    Ok(parsed.graph)
}

fn write(path: &FsPath, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn vertex(g: &Graph, label: &str) -> CliResult<VertexId> {
    g.vertex_by_label(label)
        .ok_or_else(|| CliError::Engine(Error::UnknownLabel(label.to_string())))
}

/// Parses `v:LABEL` or `e:A-B`. Labels may contain `-`, so every split point
/// is tried and exactly one must name an existing edge.
fn element(g: &Graph, text: &str) -> CliResult<ElementRef> {
    if let Some(label) = text.strip_prefix("v:") {
        return Ok(ElementRef::Vertex(vertex(g, label)?));
    }
    let Some(body) = text.strip_prefix("e:") else {
        return Err(CliError::Usage(format!(
            "element `{text}` must look like v:LABEL or e:LABEL-LABEL"
        )));
    };
    let mut found = Vec::new();
    for (i, _) in body.match_indices('-') {
        let (a, b) = (&body[..i], &body[i + 1..]);
        if let (Some(u), Some(v)) = (g.vertex_by_label(a), g.vertex_by_label(b)) {
            if let Some(e) = g.edge_between(u, v) {
                found.push(e);
            }
        }
    }
    match found.as_slice() {
        [e] => Ok(ElementRef::Edge(*e)),
        [] => Err(CliError::Usage(format!("`{body}` does not name an edge of the graph"))),
        _ => Err(CliError::Usage(format!("`{body}` names more than one edge"))),
    }
}

fn labels(g: &Graph, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| g.display_label(v)).collect()
}

fn summary(v: &CepVerdict) -> String {
    let reason = serde_json::to_value(v.reason).expect("reason serializes");
    format!("{} ({})", if v.answer { "yes" } else { "no" }, reason.as_str().unwrap_or("?"))
}

fn query_output(v: CepVerdict, witness: Option<Vec<String>>) -> QueryOutput {
    QueryOutput {
        answer: v.answer,
        reason: v.reason,
        central: v.central,
        witness,
    }
}

fn emit<T: Serialize>(value: &T) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("output serializes");
    println!("{text}");
    Ok(())
}

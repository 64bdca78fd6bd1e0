//! `moplex`: analysis, orderings, Hamiltonian paths and gadget constructions
//! over edge-list files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use moplex_core::asteroidal::asteroidal_number;
use moplex_core::classes::{
    clique_bipartition, is_chordal, is_claw_free, is_cobipartite, is_cochain, is_cocomparability,
    is_proper_interval, two_coloring,
};
use moplex_core::asteroidal::is_at_free;
use moplex_core::generators::{
    check_gadget, corpus, embed_in_2moplex, gi_gadget, maxcut_gadget, CorpusKind, GadgetKind,
};
use moplex_core::hamiltonian::{
    hamiltonian_path_2moplex, hamiltonian_path_few_avoidable, verify_hamiltonian_path,
};
use moplex_core::moplex::{avoidable_vertices, is_moplicial, moplexes};
use moplex_core::orderings::{
    cocomparability_ordering, dfs_plus, is_dfs_ordering, is_ldfs_ordering, is_umbrella_free,
    ldfs_plus,
};
use moplex_core::{Error, Graph, VertexOrdering, VertexSet};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "moplex", version, about = "Moplexes, graph-search orderings and Hamiltonian paths")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for randomized corpora.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Maximum number of items to emit.
    #[arg(long, global = true)]
    limit: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Moplexes, avoidable vertices, asteroidal number and class membership.
    Analyze { graph: PathBuf },
    /// A Hamiltonian path of a connected graph with at most two moplexes.
    Hampath {
        graph: PathBuf,
        /// Use the ordering itself as the path (at most two avoidable vertices).
        #[arg(long)]
        few_avoidable: bool,
    },
    /// A DFS+, LDFS+ or cocomparability ordering.
    Order {
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: OrderKind,
        /// Prior ordering as whitespace-separated labels or ids; defaults to
        /// the identity.
        #[arg(long)]
        tau: Option<String>,
    },
    /// Builds a 2-moplex gadget from the input graph.
    Gadget {
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: GadgetArg,
        /// Umbrella-free ordering for `embed`; computed when omitted.
        #[arg(long)]
        sigma: Option<String>,
        /// Side A of the partition for `maxcut` and `gi`; computed when omitted.
        #[arg(long)]
        side_a: Option<String>,
        /// Writes `<out>.el` and `<out>.roles.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-checks an ordering, a Hamiltonian path certificate or a gadget role map.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        artifact: PathBuf,
    },
    /// Emits graphs from a deterministic corpus as edge lists.
    Corpus {
        #[arg(long, value_enum)]
        kind: CorpusArg,
        #[arg(long)]
        n: usize,
        /// Edge probability for random kinds.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Number of graphs for random kinds.
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderKind {
    #[value(name = "dfs+")]
    DfsPlus,
    #[value(name = "ldfs+")]
    LdfsPlus,
    Cocomp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetArg {
    Embed,
    Maxcut,
    Gi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorpusArg {
    AllLabeled,
    Connected,
    Random,
    Paths,
    Cycles,
    Stars,
    Cochain,
    Cobipartite,
    Bipartite,
}

/// A failed command: stable code, message and exit status.
struct Failure {
    code: String,
    message: String,
    exit: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::ResourceLimit { .. } => 3,
            Error::Violation(_) => 1,
            _ => 2,
        };
        Failure {
            code: e.code().to_string(),
            message: e.to_string(),
            exit,
        }
    }
}

impl Failure {
    fn input(code: &str, message: impl Into<String>) -> Self {
        Failure {
            code: code.into(),
            message: message.into(),
            exit: 2,
        }
    }

    fn violation(message: impl Into<String>) -> Self {
        Failure {
            code: "violation".into(),
            message: message.into(),
            exit: 1,
        }
    }
}

type CmdResult = Result<Output, Failure>;

/// JSON payload plus its plain-text rendering.
struct Output {
    payload: Value,
    text: String,
}

/// A graph file with optional vertex labels from a `.labels` sidecar.
struct Input {
    graph: Graph,
    labels: Option<Vec<String>>,
}

impl Input {
    fn load(path: &Path) -> Result<Self, Failure> {
        let text = read(path)?;
        let graph = Graph::parse_edge_list(&text)?;
        let sidecar = path.with_extension("labels");
        let labels = if sidecar.is_file() {
            let names: Vec<String> = read(&sidecar)?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect();
            if names.len() != graph.vertex_count() {
                return Err(Failure::input(
                    "parse",
                    format!(
                        "{}: {} labels for {} vertices",
                        sidecar.display(),
                        names.len(),
                        graph.vertex_count()
                    ),
                ));
            }
            Some(names)
        } else {
            None
        };
        Ok(Input { graph, labels })
    }

    fn name(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    fn names(&self, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
        vs.into_iter().map(|v| self.name(v)).collect()
    }

    fn line(&self, vs: &[usize]) -> String {
        self.names(vs.iter().copied()).join(" ")
    }

    fn set_json(&self, set: &VertexSet) -> Value {
        json!(self.names(set))
    }

    fn resolve(&self, token: &str) -> Result<usize, Failure> {
        if let Some(v) = self
            .labels
            .as_ref()
            .and_then(|l| l.iter().position(|x| x == token))
        {
            return Ok(v);
        }
        let v: usize = token
            .parse()
            .map_err(|_| Failure::input("unknown_vertex", format!("unknown vertex {token:?}")))?;
        self.graph.check_vertex(v)?;
        Ok(v)
    }

    fn resolve_all(&self, text: &str) -> Result<Vec<usize>, Failure> {
        text.split_whitespace().map(|t| self.resolve(t)).collect()
    }

    fn ordering(&self, text: &str) -> Result<VertexOrdering, Failure> {
        Ok(VertexOrdering::for_graph(&self.graph, self.resolve_all(text)?)?)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::input("io", format!("{}: {e}", path.display())))
}

fn analyze(input: &Input) -> CmdResult {
    let g = &input.graph;
    let ms = moplexes(g);
    let moplex_json: Vec<Value> = ms
        .iter()
        .map(|m| {
            json!({
                "vertices": input.set_json(&m.vertices),
                "neighborhood": input.set_json(&m.neighborhood),
                "simplicial": m.simplicial,
            })
        })
        .collect();
    let avoidable = avoidable_vertices(g);
    let classes: BTreeMap<&str, bool> = [
        ("chordal", is_chordal(g)),
        ("claw_free", is_claw_free(g)),
        ("at_free", is_at_free(g)),
        ("proper_interval", is_proper_interval(g)),
        ("cochain", is_cochain(g)),
        ("cobipartite", is_cobipartite(g)),
        ("cocomparability", is_cocomparability(g)),
    ]
    .into_iter()
    .collect();
    let an = asteroidal_number(g);
    let mut text = format!(
        "vertices: {}\nedges: {}\nmoplex_number: {}\n",
        g.vertex_count(),
        g.edge_count(),
        ms.len()
    );
    for m in &ms {
        text += &format!("moplex: {}\n", input.line(&m.vertices.to_vec()));
    }
    text += &format!("avoidable: {}\n", input.line(&avoidable.to_vec()));
    text += &format!("asteroidal_number: {an}\n");
    for (name, value) in &classes {
        text += &format!("{name}: {value}\n");
    }
    Ok(Output {
        payload: json!({
            "vertex_count": g.vertex_count(),
            "edge_count": g.edge_count(),
            "connected": g.is_connected(),
            "moplexes": moplex_json,
            "moplex_number": ms.len(),
            "avoidable": input.set_json(&avoidable),
            "asteroidal_number": an,
            "classes": classes,
        }),
        text,
    })
}

fn hampath(input: &Input, few_avoidable: bool) -> CmdResult {
    let cert = if few_avoidable {
        hamiltonian_path_few_avoidable(&input.graph)?
    } else {
        hamiltonian_path_2moplex(&input.graph)?
    };
    let sigma = input.line(cert.source_ordering.sequence());
    let path = input.line(cert.path.sequence());
    Ok(Output {
        text: format!("{sigma}\n{path}\n"),
        payload: json!({ "source_ordering": sigma, "path": path }),
    })
}

fn order(input: &Input, kind: OrderKind, tau: Option<&str>) -> CmdResult {
    let g = &input.graph;
    let tau = match tau {
        Some(t) => input.ordering(t)?,
        None => VertexOrdering::identity(g.vertex_count()),
    };
    let (name, result) = match kind {
        OrderKind::DfsPlus => ("dfs+", dfs_plus(g, &tau)?),
        OrderKind::LdfsPlus => ("ldfs+", ldfs_plus(g, &tau)?),
        OrderKind::Cocomp => (
            "cocomp",
            cocomparability_ordering(g).ok_or_else(|| {
                Failure::input("not_cocomparability", "graph has no umbrella-free ordering")
            })?,
        ),
    };
    let line = input.line(result.sequence());
    Ok(Output {
        text: format!("{line}\n"),
        payload: json!({ "kind": name, "ordering": line }),
    })
}

fn side_from(input: &Input, side_a: Option<&str>, fallback: Option<VertexSet>) -> Result<(VertexSet, VertexSet), Failure> {
    let n = input.graph.vertex_count();
    let a = match side_a {
        Some(text) => VertexSet::from_vertices(n, input.resolve_all(text)?),
        None => fallback.ok_or_else(|| {
            Failure::input("invalid_partition", "no suitable partition of the input exists")
        })?,
    };
    let b = a.complement();
    Ok((a, b))
}

fn gadget(
    input: &Input,
    kind: GadgetArg,
    sigma: Option<&str>,
    side_a: Option<&str>,
    out: Option<&Path>,
) -> CmdResult {
    let g = &input.graph;
    let built = match kind {
        GadgetArg::Embed => {
            let sigma = match sigma {
                Some(s) => input.ordering(s)?,
                None => cocomparability_ordering(g).ok_or_else(|| {
                    Failure::input("not_cocomparability", "graph has no umbrella-free ordering")
                })?,
            };
            embed_in_2moplex(g, &sigma)?
        }
        GadgetArg::Maxcut => {
            let (a, b) = side_from(input, side_a, clique_bipartition(g).map(|p| p.0))?;
            maxcut_gadget(g, &a, &b)?
        }
        GadgetArg::Gi => {
            let (a, b) = side_from(input, side_a, two_coloring(g).map(|p| p.0))?;
            gi_gadget(g, &a, &b)?
        }
    };
    let edge_list = built.graph.to_edge_list();
    let mut payload = json!({
        "kind": built.kind,
        "vertex_count": built.graph.vertex_count(),
        "edge_count": built.graph.edge_count(),
        "roles": built.roles,
    });
    if let Some(prefix) = out {
        let el_path = with_suffix(prefix, ".el");
        let roles_path = with_suffix(prefix, ".roles.json");
        let el_name = el_path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let roles_doc = json!({
            "schema_version": SCHEMA_VERSION,
            "kind": built.kind,
            "edge_list": el_name,
            "roles": built.roles,
        });
        write(&el_path, &edge_list)?;
        write(&roles_path, &(pretty(&roles_doc) + "\n"))?;
        payload["files"] = json!([el_path.display().to_string(), roles_path.display().to_string()]);
    } else {
        payload["edge_list"] = json!(edge_list);
    }
    let text = match out {
        Some(_) => format!(
            "{} gadget: {} vertices, {} edges\n",
            kind_name(built.kind),
            built.graph.vertex_count(),
            built.graph.edge_count()
        ),
        None => edge_list,
    };
    Ok(Output { payload, text })
}

fn kind_name(kind: GadgetKind) -> &'static str {
    match kind {
        GadgetKind::Embed => "embed",
        GadgetKind::MaxCut => "max_cut",
        GadgetKind::Gi => "gi",
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn verify(input: &Input, artifact: &Path) -> CmdResult {
    let text = read(artifact)?;
    if let Ok(doc) = serde_json::from_str::<Value>(&text) {
        if doc.get("roles").is_some() {
            return verify_roles(input, artifact, &doc);
        }
        if let Some(path) = doc.get("path").and_then(Value::as_str) {
            let sigma = doc.get("source_ordering").and_then(Value::as_str);
            return verify_hampath(input, sigma, path);
        }
        if let Some(ordering) = doc.get("ordering").and_then(Value::as_str) {
            return verify_ordering(input, ordering);
        }
        return Err(Failure::input("unknown_artifact", "JSON artifact has no roles, path or ordering"));
    }
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    match lines.as_slice() {
        [ordering] => verify_ordering(input, ordering),
        [sigma, path] => verify_hampath(input, Some(sigma), path),
        _ => Err(Failure::input(
            "unknown_artifact",
            "expected one ordering line or two certificate lines",
        )),
    }
}

fn verify_ordering(input: &Input, line: &str) -> CmdResult {
    let g = &input.graph;
    let order = input.ordering(line)?;
    let umbrella = is_umbrella_free(g, &order);
    let connected = g.is_connected();
    let (dfs, ldfs) = if connected {
        (Some(is_dfs_ordering(g, &order)?), Some(is_ldfs_ordering(g, &order)?))
    } else {
        (None, None)
    };
    let hamiltonian = verify_hamiltonian_path(g, order.sequence());
    let umbrella_json = umbrella.map(|u| json!([input.name(u.x), input.name(u.y), input.name(u.z)]));
    let show = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
    Ok(Output {
        text: format!(
            "umbrella_free: {}\ndfs: {}\nldfs: {}\nhamiltonian_path: {hamiltonian}\n",
            umbrella.is_none(),
            show(dfs),
            show(ldfs)
        ),
        payload: json!({
            "artifact": "ordering",
            "umbrella_free": umbrella.is_none(),
            "umbrella": umbrella_json,
            "dfs": dfs,
            "ldfs": ldfs,
            "hamiltonian_path": hamiltonian,
        }),
    })
}

fn verify_hampath(input: &Input, sigma: Option<&str>, path: &str) -> CmdResult {
    let g = &input.graph;
    let path_ids = input.resolve_all(path)?;
    if !verify_hamiltonian_path(g, &path_ids) {
        return Err(Failure::violation(format!("{path} is not a Hamiltonian path")));
    }
    if let Some(sigma) = sigma {
        let order = input.ordering(sigma)?;
        if let Some(u) = is_umbrella_free(g, &order) {
            return Err(Failure::violation(format!(
                "source ordering has umbrella ({}, {}, {})",
                input.name(u.x),
                input.name(u.y),
                input.name(u.z)
            )));
        }
        if !is_ldfs_ordering(g, &order)? {
            return Err(Failure::violation("source ordering is not an LDFS ordering"));
        }
        for v in [order.first(), order.last()].into_iter().flatten() {
            if !is_moplicial(g, v)? {
                return Err(Failure::violation(format!(
                    "source ordering end {} is not moplicial",
                    input.name(v)
                )));
            }
        }
    }
    Ok(Output {
        text: "valid\n".into(),
        payload: json!({ "artifact": "hamiltonian_path", "valid": true, "checked_source_ordering": sigma.is_some() }),
    })
}

fn verify_roles(input: &Input, artifact: &Path, doc: &Value) -> CmdResult {
    let bad = |m: &str| Failure::input("parse", format!("{}: {m}", artifact.display()));
    let kind: GadgetKind = serde_json::from_value(doc.get("kind").cloned().unwrap_or(Value::Null))
        .map_err(|_| bad("missing or unknown gadget kind"))?;
    let roles: BTreeMap<String, usize> =
        serde_json::from_value(doc["roles"].clone()).map_err(|_| bad("roles must map names to ids"))?;
    let el_name = doc
        .get("edge_list")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing edge_list"))?;
    let el_path = artifact.parent().unwrap_or(Path::new(".")).join(el_name);
    let gadget = Graph::parse_edge_list(&read(&el_path)?)?;
    check_gadget(kind, &gadget, &roles, &input.graph)?;
    Ok(Output {
        text: "valid\n".into(),
        payload: json!({
            "artifact": "gadget",
            "kind": kind,
            "valid": true,
            "vertex_count": gadget.vertex_count(),
        }),
    })
}

fn corpus_cmd(kind: CorpusArg, n: usize, p: f64, count: usize, seed: u64, limit: Option<usize>) -> CmdResult {
    let kind = match kind {
        CorpusArg::AllLabeled => CorpusKind::AllLabeled { n },
        CorpusArg::Connected => CorpusKind::ConnectedUnlabeled { n },
        CorpusArg::Random => CorpusKind::Random { n, p, seed, count },
        CorpusArg::Paths => CorpusKind::Paths { n },
        CorpusArg::Cycles => CorpusKind::Cycles { n },
        CorpusArg::Stars => CorpusKind::Stars { m: n },
        CorpusArg::Cochain => CorpusKind::CochainRandom { n, seed, count },
        CorpusArg::Cobipartite => CorpusKind::CobipartiteRandom { n, p, seed, count },
        CorpusArg::Bipartite => {
            if n < 2 {
                return Err(Failure::input("invalid_parameter", "bipartite corpus needs n ≥ 2"));
            }
            CorpusKind::BipartiteConnectedRandom { n, p, seed, count }
        }
    };
    if !(0.0..=1.0).contains(&p) {
        return Err(Failure::input("invalid_parameter", "p must lie in [0, 1]"));
    }
    let graphs: Vec<String> = corpus(&kind)?
        .take(limit.unwrap_or(usize::MAX))
        .map(|g| g.to_edge_list())
        .collect();
    Ok(Output {
        text: graphs.join("\n"),
        payload: json!({ "count": graphs.len(), "graphs": graphs }),
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn run(cli: &Cli) -> (&'static str, CmdResult) {
    match &cli.command {
        Command::Analyze { graph } => ("analyze", Input::load(graph).and_then(|i| analyze(&i))),
        Command::Hampath { graph, few_avoidable } => (
            "hampath",
            Input::load(graph).and_then(|i| hampath(&i, *few_avoidable)),
        ),
        Command::Order { graph, kind, tau } => (
            "order",
            Input::load(graph).and_then(|i| order(&i, *kind, tau.as_deref())),
        ),
        Command::Gadget { graph, kind, sigma, side_a, out } => (
            "gadget",
            Input::load(graph).and_then(|i| {
                gadget(&i, *kind, sigma.as_deref(), side_a.as_deref(), out.as_deref())
            }),
        ),
        Command::Verify { graph, artifact } => (
            "verify",
            Input::load(graph).and_then(|i| verify(&i, artifact)),
        ),
        Command::Corpus { kind, n, p, count } => (
            "corpus",
            corpus_cmd(*kind, *n, *p, *count, cli.seed, cli.limit),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, result) = run(&cli);
    match (result, cli.format) {
        (Ok(out), Format::Json) => {
            let mut doc = json!({ "schema_version": SCHEMA_VERSION, "status": "ok", "command": command });
            doc["result"] = out.payload;
            println!("{}", pretty(&doc));
            ExitCode::SUCCESS
        }
        (Ok(out), Format::Text) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') && !out.text.is_empty() {
                println!();
            }
            ExitCode::SUCCESS
        }
        (Err(f), Format::Json) => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "status": "error",
                "command": command,
                "error": { "code": f.code, "message": f.message },
            });
            println!("{}", pretty(&doc));
            ExitCode::from(f.exit)
        }
        (Err(f), Format::Text) => {
            eprintln!("error[{}]: {}", f.code, f.message);
            ExitCode::from(f.exit)
        }
    }
}

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use oneconn::cycles::ConstrainedCycle;
use oneconn::dot;
use oneconn::generator::{self, GenConfig, GeneratorError, Variant};
use oneconn::oracle::connectivity_flow;
use oneconn::search::all_shortest_cycles;
use oneconn::{
    build_radial, vertex_connectivity, EmbeddingError, OnePlaneEmbedding, RadialError, SearchError,
    SearchOptions, Vertex,
};

mod compare;

#[derive(Parser)]
#[command(name = "oneconn", version, about = "Vertex connectivity of locally maximal 1-plane graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and check an embedding file.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Show the planarisation: vertices, edges and faces.
    Planarise {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build the radial planarisation.
    Radialise {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Add missing kite edges first.
        #[arg(long)]
        complete_kites: bool,
    },
    /// Report missing kite faces and the kite-completed embedding.
    Kites {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Vertex connectivity through the shortest constrained cycle.
    Connectivity {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Fail with exit code 4 if the flow oracle disagrees.
        #[arg(long)]
        oracle_check: bool,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        complete_kites: bool,
        /// Answer with the flow oracle; no local maximality needed.
        #[arg(long)]
        force_oracle: bool,
        /// Also list up to this many shortest constrained cycles.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Vertex connectivity by max flow.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cycle method against the flow oracle on generated graphs.
    Compare {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        nmin: usize,
        #[arg(long, default_value_t = 40)]
        nmax: usize,
        #[arg(long)]
        json: bool,
        /// Where embeddings of disagreeing trials are written.
        #[arg(long, default_value = ".")]
        dump_dir: PathBuf,
    },
    /// Generate an embedding file on stdout.
    Gen {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 0.2)]
        fraction: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Triangulation)]
        variant: VariantArg,
        /// Emit a named fixture instead.
        #[arg(long)]
        fixture: Option<String>,
    },
    /// Write G, G^× or the radial planarisation as DOT or JSON.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = What::Gx)]
        what: What,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        complete_kites: bool,
        /// Highlight the shortest constrained cycle (lambda only).
        #[arg(long)]
        overlay: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Triangulation,
    Sparse,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    G,
    Gx,
    Lambda,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Error with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<EmbeddingError> for Failure {
    fn from(e: EmbeddingError) -> Self {
        match e {
            EmbeddingError::NotLocallyMaximal { .. } => Failure { code: 3, message: e.to_string() },
            _ => Failure { code: 2, message: format!("invalid embedding: {e}") },
        }
    }
}

impl From<RadialError> for Failure {
    fn from(e: RadialError) -> Self {
        let code = match e {
            RadialError::Disconnected(_) => 3,
            _ => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Embedding(e) => e.into(),
            SearchError::Radial(e) => e.into(),
            SearchError::NotLocallyMaximal { .. } => Failure { code: 3, message: e.to_string() },
            other => Failure { code: 4, message: other.to_string() },
        }
    }
}

impl From<GeneratorError> for Failure {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::Embedding(e) => e.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
    }
}

fn load(path: &Path) -> Result<OnePlaneEmbedding, Failure> {
    Ok(OnePlaneEmbedding::from_json(&read_input(path)?)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json output"));
}

fn labels(emb: &OnePlaneEmbedding, vs: &[Vertex]) -> Vec<u32> {
    emb.labels_of(vs)
}

fn cycle_json(emb: &OnePlaneEmbedding, x: &ConstrainedCycle) -> Value {
    let mut v = x.to_json_value();
    v["set"] = json!(labels(emb, &x.originals()));
    v
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file, json } => {
            let e = load(&file)?;
            let report = e.is_locally_maximal();
            let kites = e.missing_kites().len();
            if json {
                print_json(&json!({
                    "schema": 1,
                    "valid": true,
                    "vertices": e.original_count(),
                    "edges": e.originals().len(),
                    "crossings": e.crossing_count(),
                    "faces": e.faces().len(),
                    "connected": e.is_connected(),
                    "locally_maximal": report.ok(),
                    "missing_k4_edges": report.missing.len(),
                    "missing_kites": kites,
                }));
            } else {
                println!(
                    "valid: {} vertices, {} edges, {} crossings, {} faces",
                    e.original_count(),
                    e.originals().len(),
                    e.crossing_count(),
                    e.faces().len()
                );
                println!("connected: {}", e.is_connected());
                println!(
                    "locally maximal: {} ({} K4 edges missing), missing kite faces: {kites}",
                    report.ok(),
                    report.missing.len()
                );
            }
        }
        Command::Planarise { file, json } => {
            let e = load(&file)?;
            let faces = e.trace_faces();
            if json {
                let faces: Vec<Value> = faces
                    .iter()
                    .map(|f| {
                        let darts: Vec<u32> = f.boundary.iter().map(|d| d.0).collect();
                        let vs: Vec<u32> = f
                            .boundary
                            .iter()
                            .map(|&d| e.vertex_label(e.map().origin(d)))
                            .collect();
                        json!({ "id": f.id, "darts": darts, "vertices": vs })
                    })
                    .collect();
                print_json(&json!({
                    "schema": 1,
                    "embedding": serde_json::to_value(e.to_file()).expect("file serializes"),
                    "faces": faces,
                }));
            } else {
                println!(
                    "G^x: {} vertices ({} dummy), {} edges, {} faces",
                    e.vertex_count(),
                    e.crossing_count(),
                    e.map().edge_count(),
                    faces.len()
                );
                for f in &faces {
                    let vs: Vec<String> = f
                        .boundary
                        .iter()
                        .map(|&d| e.vertex_label(e.map().origin(d)).to_string())
                        .collect();
                    println!("face {}: {}", f.id, vs.join(" "));
                }
            }
        }
        Command::Radialise { file, json, complete_kites } => {
            let mut e = load(&file)?;
            if complete_kites {
                e = e.complete_kites()?;
            }
            let rp = build_radial(&e)?;
            if json {
                println!("{}", rp.to_json());
            } else {
                println!(
                    "Lambda: {} vertices ({} graph, {} face), {} edges ({} radial)",
                    rp.vertex_count(),
                    rp.gx_vertex_count(),
                    rp.face_count(),
                    rp.edge_count(),
                    rp.edge_count() - rp.gx_edge_count()
                );
            }
        }
        Command::Kites { file, json } => {
            let e = load(&file)?;
            let missing = e.missing_kites();
            let completed = e.complete_kites().ok();
            let added = completed.as_ref().map(|c| c.originals().len() - e.originals().len());
            if json {
                let list: Vec<Value> = missing
                    .iter()
                    .map(|k| {
                        json!({
                            "crossing": e.vertex_label(e.crossings()[k.crossing].dummy),
                            "first": e.vertex_label(k.first),
                            "second": e.vertex_label(k.second),
                        })
                    })
                    .collect();
                print_json(&json!({
                    "schema": 1,
                    "missing": list,
                    "locally_maximal": completed.is_some(),
                    "added": added,
                    "embedding": completed.map(|c| serde_json::to_value(c.to_file()).expect("file serializes")),
                }));
            } else {
                println!("missing kite faces: {}", missing.len());
                for k in &missing {
                    println!(
                        "  crossing at {}: between {} and {}",
                        e.vertex_label(e.crossings()[k.crossing].dummy),
                        e.vertex_label(k.first),
                        e.vertex_label(k.second)
                    );
                }
                if added.is_none() {
                    println!("not locally maximal: kites cannot be completed");
                }
            }
        }
        Command::Connectivity { file, json, oracle_check, complete_kites, force_oracle, limit } => {
            let e = load(&file)?;
            let opts = SearchOptions { complete_kites, oracle_check, force_oracle };
            let r = vertex_connectivity(&e, opts)?;
            let set = r.separating_set.as_ref().map(|s| labels(&e, s.vertices()));
            let mut extra = Vec::new();
            if let Some(limit) = limit {
                if r.cycle.is_some() {
                    let work = if complete_kites { e.complete_kites()? } else { e.clone() };
                    let rp = build_radial(&work)?;
                    extra = all_shortest_cycles(&rp, limit);
                }
            }
            if json {
                let mut out = json!({
                    "schema": 1,
                    "kappa": r.kappa,
                    "set": set,
                    "cycle_len": r.cycle.as_ref().map(|x| x.len()),
                    "method": r.method.as_str(),
                    "cycle": r.cycle.as_ref().map(|x| x.to_json_value()),
                    "kites_added": r.kites_added,
                });
                if limit.is_some() {
                    out["cycles"] = Value::Array(extra.iter().map(|x| cycle_json(&e, x)).collect());
                }
                print_json(&out);
            } else {
                println!("kappa: {}", r.kappa);
                match &set {
                    Some(s) => println!("separating set: {s:?}"),
                    None => println!("separating set: none (complete graph)"),
                }
                if let Some(x) = &r.cycle {
                    println!("cycle length: {}", x.len());
                }
                println!("method: {}", r.method.as_str());
                for x in &extra {
                    println!("cycle {:?}", labels(&e, &x.originals()));
                }
            }
        }
        Command::Oracle { file, json } => {
            let e = load(&file)?;
            let r = connectivity_flow(e.graph());
            let set = r.set.map(|s| s.into_iter().map(|v| e.vertex_label(Vertex(v))).collect::<Vec<_>>());
            if json {
                print_json(&json!({ "schema": 1, "kappa": r.kappa, "set": set }));
            } else {
                println!("kappa: {}", r.kappa);
                match set {
                    Some(s) => println!("separating set: {s:?}"),
                    None => println!("separating set: none (complete graph)"),
                }
            }
        }
        Command::Compare { trials, seed, nmin, nmax, json, dump_dir } => {
            if nmin < 3 || nmin > nmax {
                return Err(Failure::usage("need 3 <= nmin <= nmax"));
            }
            let report = compare::run(trials, seed, nmin, nmax, &dump_dir)?;
            if json {
                print_json(&report.to_json(seed));
            } else {
                for line in report.disagreements() {
                    eprintln!("{line}");
                }
                println!("{}/{} agree", report.agreeing(), report.len());
            }
            if report.agreeing() != report.len() {
                return Err(Failure { code: 4, message: "cycle method and oracle disagree".into() });
            }
        }
        Command::Gen { n, fraction, seed, variant, fixture } => {
            let e = match fixture {
                Some(name) => generator::fixture(&name)?,
                None => {
                    let variant = match variant {
                        VariantArg::Triangulation => Variant::Triangulation,
                        VariantArg::Sparse => Variant::Sparse,
                    };
                    GenConfig { n, crossing_fraction: fraction, seed, variant }.generate()?
                }
            };
            println!("{}", e.to_file().to_json());
        }
        Command::Export { file, what, format, complete_kites, overlay } => {
            let mut e = load(&file)?;
            let out = match what {
                What::G => match format {
                    Format::Dot => dot::graph_dot(&e),
                    Format::Json => {
                        let edges: Vec<Value> = e
                            .originals()
                            .iter()
                            .map(|o| {
                                json!({
                                    "id": o.label,
                                    "u": e.vertex_label(o.ends[0]),
                                    "v": e.vertex_label(o.ends[1]),
                                    "crossed": o.is_crossed(),
                                })
                            })
                            .collect();
                        let vs: Vec<u32> = (0..e.original_count() as u32).map(|v| e.vertex_label(Vertex(v))).collect();
                        serde_json::to_string_pretty(&json!({ "schema": 1, "vertices": vs, "edges": edges }))
                            .expect("json output")
                    }
                },
                What::Gx => match format {
                    Format::Dot => dot::planarisation_dot(&e),
                    Format::Json => e.to_file().to_json(),
                },
                What::Lambda => {
                    if complete_kites {
                        e = e.complete_kites()?;
                    }
                    let rp = build_radial(&e)?;
                    let x = if overlay { oneconn::search::shortest_constrained_cycle(&rp) } else { None };
                    match format {
                        Format::Dot => dot::radial_dot(&rp, x.as_ref()),
                        Format::Json => rp.to_json(),
                    }
                }
            };
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Ok(threads) = std::env::var("ONECONN_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => {
                eprintln!("error: ONECONN_THREADS must be a positive integer");
                return ExitCode::from(1);
            }
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

//! `tfrecon`: decks, reconstruction, and the exhaustive census from the command line.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tfrecon::census::{run_census, CensusOptions, Theorem};
use tfrecon::classify::{HypothesisClass, Profile};
use tfrecon::deck::{compute_deck, compute_edge_deck, parse_deck_text, AnyDeck, Deck, EdgeDeck};
use tfrecon::graph6::{emit_graph6, parse_graph6_lines};
use tfrecon::reconstruct::{
    edge_reconstruct_g2_tf, edge_reconstruct_g3_tf, oracle_edge_reconstruct, oracle_reconstruct, reconstruct_g2_tf_k3,
    reconstruct_g3_tf_k1, reconstruct_g3_tf_k3plus, Options, ReconstructionResult, DEFAULT_ORACLE_CAP,
};
use tfrecon::{canonical_form, Error, Graph};

#[derive(Parser)]
#[command(name = "tfrecon", version, about = "Graph reconstruction from decks for triangle-free graphs of diameter 2 and 3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the deck of every graph in a graph6 file.
    Deck {
        g6file: PathBuf,
        /// One `<line>.deck` file per graph instead of stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Write the edge deck of every graph in a graph6 file.
    Edgedeck {
        g6file: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Rebuild a graph from its deck.
    Reconstruct {
        #[arg(long, value_enum)]
        class: VertexClass,
        /// Skip the oracle check that the deck belongs to the class.
        #[arg(long)]
        trusted: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        deckfile: PathBuf,
    },
    /// Rebuild a graph from its edge deck.
    EdgeReconstruct {
        #[arg(long, value_enum)]
        class: EdgeClass,
        #[arg(long)]
        trusted: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        edeckfile: PathBuf,
    },
    /// List every graph with the given deck or edge deck.
    Oracle {
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
        deckfile: PathBuf,
    },
    /// Enumerate all graphs on N vertices and verify decks and procedures.
    Census {
        #[arg(long)]
        n: usize,
        /// Also check edge decks among graphs with at least 4 edges and no isolated vertex.
        #[arg(long)]
        edge: bool,
        /// Sweep a procedure over its class (repeatable): T4, T5, T8, T10, T11.
        #[arg(long = "theorem", value_parser = parse_theorem)]
        theorems: Vec<Theorem>,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a CSV summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// graph6 file of all graphs on N vertices to cross-check the enumeration.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Permit n = 10 (vertex) and n = 9 (edge).
        #[arg(long)]
        allow_large: bool,
        /// Record wall time in the report (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VertexClass {
    /// Triangle-free, diameter 2, connectivity 3.
    G2tf3,
    /// Triangle-free, G3, connectivity 1.
    G3tf1,
    /// Triangle-free, G3, connectivity at least 3.
    G3tf3,
    /// Decide by oracle (n <= 10 only).
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum EdgeClass {
    G2tf,
    G3tf,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit status.
struct Failure {
    code: i32,
    kind: String,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: e.exit_code(), kind: e.kind().to_string(), message: e.to_string() }
    }
}

impl Failure {
    fn io(path: &Path, e: io::Error) -> Self {
        Failure { code: 1, kind: "Io".into(), message: format!("{}: {e}", path.display()) }
    }
}

type CliResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn read_graphs(path: &Path) -> CliResult<Vec<Graph>> {
    Ok(parse_graph6_lines(&read(path)?)?)
}

fn read_vertex_deck(path: &Path) -> CliResult<Deck> {
    match parse_deck_text(&read(path)?)? {
        AnyDeck::Vertex(d) => Ok(d),
        AnyDeck::Edge(_) => Err(Error::KindMismatch.into()),
    }
}

fn read_edge_deck(path: &Path) -> CliResult<EdgeDeck> {
    match parse_deck_text(&read(path)?)? {
        AnyDeck::Edge(d) => Ok(d),
        AnyDeck::Vertex(_) => Err(Error::KindMismatch.into()),
    }
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

/// Writes one deck text per graph, to files or to stdout separated by blank lines.
fn emit_decks(texts: Vec<String>, out_dir: Option<&Path>, ext: &str) -> CliResult<()> {
    match out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
            for (i, text) in texts.iter().enumerate() {
                write(&dir.join(format!("{i}.{ext}")), text)?;
            }
        }
        None => {
            let mut out = io::stdout().lock();
            let joined = texts.join("\n");
            out.write_all(joined.as_bytes()).map_err(|e| Failure::io(Path::new("<stdout>"), e))?;
        }
    }
    Ok(())
}

fn resolve_auto(d: &Deck, cap: usize) -> CliResult<VertexClass> {
    let found = oracle_reconstruct(d, cap)?;
    let [g] = found[..] else {
        return Err(Error::HypothesisViolation(format!("{} graphs share this deck", found.len())).into());
    };
    let p = Profile::of(&g);
    let class = [
        (HypothesisClass::Diameter2TriangleFreeK3, VertexClass::G2tf3),
        (HypothesisClass::Diameter3TriangleFreeK1, VertexClass::G3tf1),
        (HypothesisClass::Diameter3TriangleFreeK3Plus, VertexClass::G3tf3),
    ]
    .into_iter()
    .find(|(c, _)| c.contains_profile(&p));
    match class {
        Some((_, v)) => Ok(v),
        None => Err(Error::HypothesisViolation(format!("{} is in none of the supported classes", emit_graph6(&g))).into()),
    }
}

fn reconstruct(class: VertexClass, d: &Deck, opts: &Options) -> CliResult<ReconstructionResult> {
    let class = match class {
        VertexClass::Auto => {
            if d.n() > opts.oracle_cap {
                return Err(Error::CapExceeded { n: d.n(), cap: opts.oracle_cap }.into());
            }
            resolve_auto(d, opts.oracle_cap)?
        }
        c => c,
    };
    let r = match class {
        VertexClass::G2tf3 => reconstruct_g2_tf_k3(d, opts),
        VertexClass::G3tf1 => reconstruct_g3_tf_k1(d, opts),
        VertexClass::G3tf3 | VertexClass::Auto => reconstruct_g3_tf_k3plus(d, opts),
    };
    Ok(r?)
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Deck { g6file, out_dir } => {
            let texts = read_graphs(&g6file)?.iter().map(|g| compute_deck(g).to_text()).collect();
            emit_decks(texts, out_dir.as_deref(), "deck")?;
        }
        Command::Edgedeck { g6file, out_dir } => {
            let graphs = read_graphs(&g6file)?;
            if let Some(g) = graphs.iter().find(|g| g.edge_count() == 0) {
                return Err(Error::MalformedDeck(format!("{} has no edges", emit_graph6(g))).into());
            }
            let texts = graphs.iter().map(|g| compute_edge_deck(g).to_text()).collect();
            emit_decks(texts, out_dir.as_deref(), "edeck")?;
        }
        Command::Reconstruct { class, trusted, oracle_cap, deckfile } => {
            let d = read_vertex_deck(&deckfile)?;
            let r = reconstruct(class, &d, &Options { trusted, oracle_cap })?;
            print_json(&r.to_json());
        }
        Command::EdgeReconstruct { class, trusted, oracle_cap, edeckfile } => {
            let ed = read_edge_deck(&edeckfile)?;
            let opts = Options { trusted, oracle_cap };
            let r = match class {
                EdgeClass::G2tf => edge_reconstruct_g2_tf(&ed, &opts)?,
                EdgeClass::G3tf => edge_reconstruct_g3_tf(&ed, &opts)?,
            };
            print_json(&r.to_json());
        }
        Command::Oracle { oracle_cap, deckfile } => {
            let (kind, found) = match parse_deck_text(&read(&deckfile)?)? {
                AnyDeck::Vertex(d) => ("vertex", oracle_reconstruct(&d, oracle_cap)?),
                AnyDeck::Edge(ed) => ("edge", oracle_edge_reconstruct(&ed, oracle_cap)?),
            };
            let graphs: Vec<String> = found.iter().map(|g| canonical_form(g).to_graph6()).collect();
            print_json(&json!({ "kind": kind, "count": graphs.len(), "graphs": graphs }));
        }
        Command::Census { n, edge, theorems, jobs, out, csv, corpus, allow_large, timings } => {
            if let Some(k) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(k.max(1))
                    .build_global()
                    .map_err(|e| Failure { code: 1, kind: "ThreadPool".into(), message: e.to_string() })?;
            }
            let corpus = corpus.map(|p| read_graphs(&p)).transpose()?;
            let opts = CensusOptions { n, edge, theorems, allow_large, corpus };
            let start = Instant::now();
            let mut report = run_census(&opts)?;
            if timings {
                report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
            }
            let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
            match &out {
                Some(path) => write(path, &text)?,
                None => print!("{text}"),
            }
            if let Some(path) = &csv {
                let mut w = csv::Writer::from_path(path).map_err(|e| Failure::io(path, e.into()))?;
                w.write_record(["section", "metric", "value"]).map_err(|e| Failure::io(path, e.into()))?;
                for row in report.csv_rows() {
                    w.write_record(&row).map_err(|e| Failure::io(path, e.into()))?;
                }
                w.flush().map_err(|e| Failure::io(path, e))?;
            }
            if !report.all_clear() {
                return Err(Failure {
                    code: 2,
                    kind: "CensusFailure".into(),
                    message: "census found collisions or failed checks; see report".into(),
                });
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(4);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            let err = json!({ "error": f.kind, "message": f.message, "exit_code": f.code });
            eprintln!("{err}");
            ExitCode::from(f.code as u8)
        }
    }
}

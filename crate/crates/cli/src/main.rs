//! `obelisk`: compute, construct, verify and draw oriented book embeddings.
//!
//! Exit codes: 0 success, 1 negative verdict (invalid embedding or forbidden
//! subgraph found), 2 usage or input error, 3 size guard.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use obelisk::constructive::{embed_auto, AutoEmbedding, AutoError, Method};
use obelisk::generate::{generate, GenShape};
use obelisk::graph::{classify_shape, parse_graph_with, write_graph, GraphError, OrientedGraph, ParseOptions};
use obelisk::layout::{parse_embedding, render_svg, verify, write_embedding, BookEmbedding};
use obelisk::oracle::{
    mine_critical, mine_critical_with, obt_with, OracleError, OracleOptions, OBT_MAX_N,
};
use obelisk::recognize::{
    classify_m1, decompose_unidicyclic, detect_forbidden, find_page_obstruction, heavy_vertices, OnePageCritical,
};

#[derive(Parser)]
#[command(name = "obelisk", version, about = "Oriented book embeddings of oriented graphs")]
struct Cli {
    /// Print stable `key<TAB>value` lines instead of prose.
    #[arg(long, global = true)]
    porcelain: bool,
    /// Let arcs introduce vertices missing from `v` lines.
    #[arg(long, global = true)]
    implicit_vertices: bool,
    /// Raise every size guard to this vertex count. Slow, never inexact.
    #[arg(long, global = true, env = "OBELISK_MAX_N")]
    max_n: Option<usize>,
    /// Worker threads for exhaustive searches; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact oriented book thickness.
    Obt {
        graph: PathBuf,
        /// Write an optimal embedding here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Build an embedding; exits 1 with a witness when a uni-dicyclic graph
    /// has no 1-page embedding.
    Embed {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = EmbedMethod::Auto)]
        method: EmbedMethod,
        /// Embedding file to write; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check an embedding against a graph.
    Verify { graph: PathBuf, embedding: PathBuf },
    /// Draw a valid embedding as SVG.
    Render {
        graph: PathBuf,
        embedding: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the connected k-page critical graphs up to n vertices.
    Mine {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Random instance, reproducible per seed.
    Gen {
        #[arg(long, value_enum)]
        shape: ShapeArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Shape, decomposition and forbidden subgraphs; exits 1 when a
    /// uni-dicyclic graph contains a forbidden member.
    Recognize { graph: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedMethod {
    Exact,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Tree,
    Cycle,
    Dicycle,
    Unidicyclic,
    Fountain,
}

enum Failure {
    Input(String),
    Guard(String),
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::SizeGuard { .. } => Failure::Guard(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::SizeGuard { .. } => Failure::Guard(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// What a command prints: prose, porcelain pairs, and an exit code of 0 or 1.
struct Report {
    verdict: bool,
    text: String,
    pairs: Vec<(String, String)>,
}

impl Report {
    fn new() -> Self {
        Report {
            verdict: true,
            text: String::new(),
            pairs: Vec::new(),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn pair(&mut self, k: &str, v: impl ToString) {
        self.pairs.push((k.to_string(), v.to_string()));
    }
}

struct Ctx {
    parse: ParseOptions,
    oracle: OracleOptions,
    max_n: Option<usize>,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(ctx: &Ctx, path: &Path) -> Result<OrientedGraph, Failure> {
    parse_graph_with(&read(path)?, ctx.parse).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_embedding(path: &Path) -> Result<BookEmbedding, Failure> {
    parse_embedding(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn one_line(graph_text: &str) -> String {
    graph_text.lines().collect::<Vec<_>>().join("; ")
}

fn cmd_obt(ctx: &Ctx, graph: &Path, witness: Option<&Path>) -> Result<Report, Failure> {
    let g = load_graph(ctx, graph)?;
    let r = obt_with(&g, &ctx.oracle)?;
    let mut rep = Report::new();
    rep.line(format!("obt = {}", r.thickness));
    rep.pair("obt", r.thickness);
    if let Some(path) = witness {
        write(path, &write_embedding(&r.witness))?;
        rep.line(format!("witness written to {}", path.display()));
        rep.pair("witness", path.display());
    }
    Ok(rep)
}

fn cmd_embed(ctx: &Ctx, graph: &Path, method: EmbedMethod, output: Option<&Path>) -> Result<Report, Failure> {
    let g = load_graph(ctx, graph)?;
    let outcome = match method {
        EmbedMethod::Exact => AutoEmbedding::Embedded {
            method: Method::Exact,
            embedding: obt_with(&g, &ctx.oracle)?.witness,
        },
        EmbedMethod::Auto => embed_auto(&g, &ctx.oracle).map_err(|e| match e {
            AutoError::Oracle(o) => Failure::from(o),
            AutoError::Construct(c) => Failure::Input(c.to_string()),
        })?,
    };
    let mut rep = Report::new();
    match outcome {
        AutoEmbedding::Embedded { method, embedding } => {
            let file = format!("# method {method}\n{}", write_embedding(&embedding));
            rep.pair("method", method);
            rep.pair("pages", embedding.pages);
            match output {
                Some(path) => {
                    write(path, &file)?;
                    let noun = if embedding.pages == 1 { "page" } else { "pages" };
                    rep.line(format!(
                        "{method} method, {} {noun}, written to {}",
                        embedding.pages,
                        path.display()
                    ));
                    rep.pair("output", path.display());
                }
                None => rep.text.push_str(&file),
            }
        }
        AutoEmbedding::Forbidden { witness } => {
            rep.verdict = false;
            rep.line("no 1-page embedding: forbidden subgraph found");
            rep.text.push_str(&witness.report());
            rep.pair("method", Method::Unidicyclic);
            rep.pair("forbidden", witness.family);
            rep.pair("arcs", witness.arcs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "));
        }
    }
    Ok(rep)
}

fn cmd_verify(ctx: &Ctx, graph: &Path, embedding: &Path) -> Result<Report, Failure> {
    let g = load_graph(ctx, graph)?;
    let e = load_embedding(embedding)?;
    let r = verify(&g, &e);
    let mut rep = Report::new();
    rep.verdict = r.is_valid();
    rep.line(r.to_string());
    rep.pair("valid", r.is_valid());
    rep.pair("pages", r.pages);
    for v in &r.violations {
        rep.pair("violation", v);
    }
    Ok(rep)
}

fn cmd_render(ctx: &Ctx, graph: &Path, embedding: &Path, output: Option<&Path>) -> Result<Report, Failure> {
    let g = load_graph(ctx, graph)?;
    let e = load_embedding(embedding)?;
    let mut rep = Report::new();
    let svg = match render_svg(&g, &e) {
        Ok(svg) => svg,
        Err(_) => {
            rep.verdict = false;
            let r = verify(&g, &e);
            rep.line(format!("cannot render: {r}"));
            rep.pair("valid", false);
            return Ok(rep);
        }
    };
    match output {
        Some(path) => {
            write(path, &svg)?;
            rep.line(format!("wrote {}", path.display()));
            rep.pair("output", path.display());
        }
        None => rep.text.push_str(&svg),
    }
    Ok(rep)
}

fn cmd_mine(ctx: &Ctx, n: usize, k: usize) -> Result<Report, Failure> {
    let found = match ctx.max_n {
        Some(limit) => {
            if n > limit {
                return Err(Failure::Guard(format!("size guard: mining vertex count is {n}, limit {limit}")));
            }
            mine_critical_with(n, k, &ctx.oracle)?
        }
        None => mine_critical(n, k)?,
    };
    let mut rep = Report::new();
    rep.line(format!("{} connected {k}-page critical graph(s) on at most {n} vertices", found.len()));
    rep.pair("count", found.len());
    for (i, g) in found.iter().enumerate() {
        let text = write_graph(g);
        write!(rep.text, "\n# member {}\n{text}", i + 1).unwrap();
        rep.pair("graph", one_line(&text));
    }
    Ok(rep)
}

fn cmd_gen(shape: ShapeArg, n: usize, seed: u64, output: Option<&Path>) -> Result<Report, Failure> {
    let shape = match shape {
        ShapeArg::Tree => GenShape::Tree,
        ShapeArg::Cycle => GenShape::Cycle,
        ShapeArg::Dicycle => GenShape::Dicycle,
        ShapeArg::Unidicyclic => GenShape::Unidicyclic,
        ShapeArg::Fountain => GenShape::Fountain,
    };
    let g = generate(shape, n, seed).map_err(|e| Failure::Input(e.to_string()))?;
    let text = write_graph(&g);
    let mut rep = Report::new();
    match output {
        Some(path) => {
            write(path, &text)?;
            rep.line(format!("wrote {}", path.display()));
            rep.pair("output", path.display());
        }
        None => rep.text.push_str(&text),
    }
    rep.pair("graph", one_line(&text));
    Ok(rep)
}

fn cmd_recognize(ctx: &Ctx, graph: &Path) -> Result<Report, Failure> {
    let g = load_graph(ctx, graph)?;
    let mut rep = Report::new();
    match classify_shape(&g) {
        Ok(shape) => {
            rep.line(format!("shape: {shape}"));
            rep.pair("shape", shape);
        }
        Err(_) => {
            rep.line("shape: disconnected");
            rep.pair("shape", "disconnected");
        }
    }
    let m1 = match classify_m1(&g) {
        Some(OnePageCritical::SPlus) => "SPlus".to_string(),
        Some(OnePageCritical::SMinus) => "SMinus".to_string(),
        Some(OnePageCritical::Dicycle(n)) => format!("Dicycle n={n}"),
        None => "none".to_string(),
    };
    rep.line(format!("1-page critical: {m1}"));
    rep.pair("one_page_critical", &m1);
    match find_page_obstruction(&g) {
        Some(w) => {
            rep.line(format!("needs a page: contains {}", w.family));
            rep.pair("page_obstruction", w.family);
        }
        None => {
            rep.line("needs no page: every component is a dipath");
            rep.pair("page_obstruction", "none");
        }
    }
    match decompose_unidicyclic(&g) {
        Err(e) => {
            rep.line(format!("strictly uni-dicyclic: no ({e})"));
            rep.pair("unidicyclic", false);
        }
        Ok(d) => {
            let list = |vs: &[u32]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            let heavy = heavy_vertices(&d);
            rep.line("strictly uni-dicyclic: yes");
            rep.line(format!("dicycle: {}", list(&d.dicycle)));
            rep.line(format!("heavy: {}", if heavy.is_empty() { "none".into() } else { list(&heavy) }));
            rep.pair("unidicyclic", true);
            rep.pair("dicycle", list(&d.dicycle));
            rep.pair("heavy", list(&heavy));
            match detect_forbidden(&d) {
                Some(w) => {
                    rep.verdict = false;
                    rep.line("forbidden subgraph:");
                    rep.text.push_str(&w.report());
                    rep.pair("forbidden", w.family);
                    rep.pair("arcs", w.arcs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "));
                }
                None => {
                    rep.line("forbidden subgraph: none (1-page embeddable)");
                    rep.pair("forbidden", "none");
                }
            }
        }
    }
    Ok(rep)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        parse: ParseOptions {
            implicit_vertices: cli.implicit_vertices,
        },
        oracle: OracleOptions {
            max_n: cli.max_n.unwrap_or(OBT_MAX_N),
            jobs: cli.jobs.max(1),
        },
        max_n: cli.max_n,
    };
    let result = match &cli.command {
        Command::Obt { graph, witness } => cmd_obt(&ctx, graph, witness.as_deref()),
        Command::Embed { graph, method, output } => cmd_embed(&ctx, graph, *method, output.as_deref()),
        Command::Verify { graph, embedding } => cmd_verify(&ctx, graph, embedding),
        Command::Render {
            graph,
            embedding,
            output,
        } => cmd_render(&ctx, graph, embedding, output.as_deref()),
        Command::Mine { n, k } => cmd_mine(&ctx, *n, *k),
        Command::Gen { shape, n, seed, output } => cmd_gen(*shape, *n, *seed, output.as_deref()),
        Command::Recognize { graph } => cmd_recognize(&ctx, graph),
    };
    match result {
        Ok(rep) => {
            if cli.porcelain {
                for (k, v) in &rep.pairs {
                    println!("{k}\t{v}");
                }
            } else {
                print!("{}", rep.text);
            }
            ExitCode::from(if rep.verdict { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("hint: raise the limit with --max-n or OBELISK_MAX_N");
            ExitCode::from(3)
        }
    }
}

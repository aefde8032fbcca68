//! `ferrerslab` command-line front end.
//!
//! Exit status: 0 for YES, 1 for NO, 2 for errors and undecided inputs.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use ferrerslab::crosscheck::crosscheck;
use ferrerslab::families::{catalog, generate, FamilyId, FamilyObject};
use ferrerslab::ferrers::{fdim_at_most_2, is_ferrers};
use ferrerslab::format::{parse_any, serialize_bigraph, serialize_graph, Parsed};
use ferrerslab::interval_bigraph::{is_interval_bigraph_capped, DEFAULT_MAX_SIDE};
use ferrerslab::oracle::{oracle_cott, oracle_interval_bigraph, oracle_signed_interval_bigraph, oracle_staircase};
use ferrerslab::recognize::{recognize_cott_with, recognize_signed_interval_bigraph, CottOptions, DEFAULT_MAX_VERTICES};
use ferrerslab::report;
use ferrerslab::signed::{realizes_bigraph, realizes_graph, side_labels, Representation, RepresentationKind};
use ferrerslab::{Bigraph, BinaryMatrix, Decision, Graph};

#[derive(Parser, Debug)]
#[command(name = "ferrerslab", version, about = "Signed interval graphs, interval bigraphs and Ferrers dimension")]
struct Cli {
    /// Largest bigraph side the exhaustive interval-bigraph search accepts.
    #[arg(long, global = true, env = "FERRERSLAB_MAX_SIDE", default_value_t = DEFAULT_MAX_SIDE)]
    max_side: usize,

    /// Largest graph the co-TT search accepts.
    #[arg(long, global = true, env = "FERRERSLAB_MAX_VERTICES", default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,

    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Seed for sampled runs when none is given positionally.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide membership and print a JSON report with a certificate or witness.
    Recognize { kind: Kind, input: PathBuf },
    /// Print a signed interval representation of a graph or bigraph.
    Represent { input: PathBuf },
    /// Check that a representation realizes a graph exactly.
    Verify { graph: PathBuf, representation: PathBuf },
    /// Write a member of a forbidden family.
    Generate { family: String, index: Option<usize> },
    /// List the forbidden families.
    Catalog,
    /// Compare recognizers against the brute-force oracles.
    Crosscheck { max_n: usize, seed: Option<u64> },
    /// Decide membership by brute force.
    Oracle { kind: OracleKind, input: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Ferrers,
    Fdim2,
    IntervalBigraph,
    SignedBigraph,
    CoTt,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OracleKind {
    Staircase,
    SignedBigraph,
    IntervalBigraph,
    CoTt,
}

/// What a command produced: text to emit and the exit status.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn decision(command: &str, yes: bool, body: Map<String, Value>) -> Self {
        let mut r = report::header(command);
        r.insert("answer".into(), json!(if yes { "yes" } else { "no" }));
        r.extend(body);
        Self {
            text: format!("{}\n", serde_json::to_string_pretty(&Value::Object(r)).unwrap()),
            code: if yes { 0 } else { 1 },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => match emit(cli.output.as_deref(), &out.text) {
            Ok(()) => ExitCode::from(out.code),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Writes to a sibling temporary file and renames it into place.
fn emit(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    let Some(path) = path else {
        std::io::stdout().write_all(text.as_bytes())?;
        return Ok(());
    };
    let name = path
        .file_name()
        .ok_or_else(|| anyhow!("output path {} has no file name", path.display()))?;
    let tmp = path.with_file_name(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match &cli.command {
        Command::Recognize { kind, input } => recognize(cli, *kind, &read(input)?),
        Command::Represent { input } => represent(cli, &read(input)?),
        Command::Verify { graph, representation } => verify(&read(graph)?, representation),
        Command::Generate { family, index } => {
            let text = match generate(FamilyId::parse(family, *index)?)? {
                FamilyObject::Graph(g) => serialize_graph(&g),
                FamilyObject::Bigraph(b) => serialize_bigraph(&b),
            };
            Ok(Outcome { text, code: 0 })
        }
        Command::Catalog => {
            let mut text = String::new();
            for e in catalog() {
                text += &format!("{:<8} {:<12} {:<8} {}\n", e.family.name(), e.range.to_string(), e.kind, e.description);
            }
            Ok(Outcome { text, code: 0 })
        }
        Command::Crosscheck { max_n, seed } => {
            let r = crosscheck(*max_n, seed.unwrap_or(cli.seed))?;
            Ok(Outcome {
                text: r.render(),
                code: if r.passed() { 0 } else { 1 },
            })
        }
        Command::Oracle { kind, input } => oracle(*kind, &read(input)?),
    }
}

fn read(path: &Path) -> anyhow::Result<Parsed> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_any(&text).with_context(|| format!("parsing {}", path.display()))
}

fn as_bigraph(p: &Parsed) -> anyhow::Result<Bigraph> {
    match p {
        Parsed::Bigraph(b) => Ok(b.clone()),
        Parsed::Matrix(m) => Ok(Bigraph::from_matrix(m.clone())),
        Parsed::Graph(_) => bail!("expected a bigraph or matrix file, found a graph"),
    }
}

fn as_matrix(p: &Parsed) -> anyhow::Result<BinaryMatrix> {
    Ok(as_bigraph(p)?.matrix().clone())
}

fn as_graph(p: &Parsed) -> anyhow::Result<&Graph> {
    match p {
        Parsed::Graph(g) => Ok(g),
        _ => bail!("expected a graph file"),
    }
}

fn body(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> Map<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Two rows whose supports are incomparable, with a column private to each.
fn incomparable_rows(m: &BinaryMatrix) -> Option<Value> {
    let private = |a: usize, b: usize| (0..m.cols()).find(|&j| m.get(a, j) && !m.get(b, j));
    for a in 0..m.rows() {
        for b in a + 1..m.rows() {
            if let (Some(ja), Some(jb)) = (private(a, b), private(b, a)) {
                return Some(json!({
                    "type": "incomparable_rows",
                    "rows": [a + 1, b + 1],
                    "cols": [ja + 1, jb + 1],
                }));
            }
        }
    }
    None
}

fn cott_options(cli: &Cli) -> CottOptions {
    CottOptions {
        max_vertices: cli.max_vertices,
        ..CottOptions::default()
    }
}

fn recognize(cli: &Cli, kind: Kind, input: &Parsed) -> anyhow::Result<Outcome> {
    let cmd = "recognize";
    Ok(match kind {
        Kind::Ferrers => {
            let m = as_matrix(input)?;
            if is_ferrers(&m) {
                Outcome::decision(cmd, true, body([("certificate", json!({ "type": "ferrers" }))]))
            } else {
                let w = incomparable_rows(&m).expect("a non-Ferrers matrix has incomparable rows");
                Outcome::decision(cmd, false, body([("witness", w)]))
            }
        }
        Kind::Fdim2 => match fdim_at_most_2(&as_matrix(input)?) {
            Decision::Yes(c) => Outcome::decision(cmd, true, body([("certificate", report::fdim2_certificate(&c))])),
            Decision::No(w) => Outcome::decision(cmd, false, body([("witness", report::odd_cycle(&w))])),
        },
        Kind::IntervalBigraph => match is_interval_bigraph_capped(&as_bigraph(input)?, cli.max_side)? {
            Decision::Yes(c) => Outcome::decision(cmd, true, body([("certificate", report::interval_certificate(&c))])),
            Decision::No(w) => Outcome::decision(cmd, false, body([("witness", report::not_interval(&w))])),
        },
        Kind::SignedBigraph => match recognize_signed_interval_bigraph(&as_bigraph(input)?) {
            Decision::Yes(rep) => Outcome::decision(cmd, true, body([("certificate", report::representation(&rep))])),
            Decision::No(w) => Outcome::decision(cmd, false, body([("witness", report::odd_cycle(&w))])),
        },
        Kind::CoTt => {
            let g = as_graph(input)?;
            match recognize_cott_with(g, &cott_options(cli))? {
                Decision::Yes(rep) => {
                    Outcome::decision(cmd, true, body([("certificate", report::representation(&rep))]))
                }
                Decision::No(w) => Outcome::decision(cmd, false, body([("witness", report::cott_witness(&w, g))])),
            }
        }
    })
}

fn represent(cli: &Cli, input: &Parsed) -> anyhow::Result<Outcome> {
    let cmd = "represent";
    let (rep, witness) = match input {
        Parsed::Graph(g) => match recognize_cott_with(g, &cott_options(cli))? {
            Decision::Yes(rep) => (Some(rep), None),
            Decision::No(w) => (None, Some(report::cott_witness(&w, g))),
        },
        _ => match recognize_signed_interval_bigraph(&as_bigraph(input)?) {
            Decision::Yes(rep) => (Some(rep.compacted()), None),
            Decision::No(w) => (None, Some(report::odd_cycle(&w))),
        },
    };
    Ok(match (rep, witness) {
        (Some(rep), _) => {
            let Value::Object(fields) = report::representation(&rep) else {
                unreachable!("representations encode as objects")
            };
            Outcome::decision(cmd, true, fields)
        }
        (None, w) => Outcome::decision(cmd, false, body([("witness", w.unwrap_or(Value::Null))])),
    })
}

/// Puts the intervals of `rep` in the order of `labels`, which must be the same set.
fn reorder(rep: &Representation, labels: &[String]) -> anyhow::Result<Vec<ferrerslab::signed::SignedInterval>> {
    let by_label: HashMap<&str, _> = rep
        .labels()
        .iter()
        .map(String::as_str)
        .zip(rep.intervals().iter().copied())
        .collect();
    if by_label.len() != rep.len() || rep.len() != labels.len() {
        bail!("vertex-set mismatch: representation has {} vertices, graph has {}", rep.len(), labels.len());
    }
    labels
        .iter()
        .map(|l| by_label.get(l.as_str()).copied().ok_or_else(|| anyhow!("vertex-set mismatch: no interval for {l}")))
        .collect()
}

fn verify(input: &Parsed, rep_path: &Path) -> anyhow::Result<Outcome> {
    let text = fs::read_to_string(rep_path).with_context(|| format!("reading {}", rep_path.display()))?;
    let rep = report::parse_representation(&text).with_context(|| format!("parsing {}", rep_path.display()))?;
    let ok = match (input, rep.kind()) {
        (Parsed::Graph(g), RepresentationKind::Graph) => {
            let rep = Representation::graph(g.labels().to_vec(), reorder(&rep, g.labels())?);
            realizes_graph(&rep, g)
        }
        (Parsed::Graph(_), _) => bail!("a graph needs a graph-kind representation"),
        (_, RepresentationKind::Graph) => bail!("a bigraph needs a bigraph-kind representation"),
        (_, RepresentationKind::Bigraph { nx }) => {
            let b = as_bigraph(input)?;
            let (xl, yl) = side_labels(&b);
            let all: Vec<String> = xl.iter().chain(&yl).cloned().collect();
            let ivs = reorder(&rep, &all)?;
            if nx != b.nx() {
                bail!("vertex-set mismatch: representation has {nx} x-vertices, bigraph has {}", b.nx());
            }
            let (x, y) = ivs.split_at(b.nx());
            realizes_bigraph(&Representation::bigraph(x.to_vec(), y.to_vec(), xl, yl), &b)
        }
    };
    Ok(Outcome::decision("verify", ok, Map::new()))
}

fn oracle(kind: OracleKind, input: &Parsed) -> anyhow::Result<Outcome> {
    let cmd = "oracle";
    Ok(match kind {
        OracleKind::Staircase => match oracle_staircase(&as_matrix(input)?)? {
            Some(a) => Outcome::decision(cmd, true, body([("certificate", report::arrangement(&a))])),
            None => Outcome::decision(cmd, false, Map::new()),
        },
        OracleKind::SignedBigraph => match oracle_signed_interval_bigraph(&as_bigraph(input)?)? {
            Some(rep) => Outcome::decision(cmd, true, body([("certificate", report::representation(&rep))])),
            None => Outcome::decision(cmd, false, Map::new()),
        },
        OracleKind::IntervalBigraph => Outcome::decision(cmd, oracle_interval_bigraph(&as_bigraph(input)?)?, Map::new()),
        OracleKind::CoTt => match oracle_cott(as_graph(input)?)? {
            Some(rep) => Outcome::decision(cmd, true, body([("certificate", report::representation(&rep))])),
            None => Outcome::decision(cmd, false, Map::new()),
        },
    })
}

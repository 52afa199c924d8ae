use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use blowup_core::constructions::{
    e_nu_delta_witness, edge_blowup, h_construction, h_odd_gadget, k_st_split, split_family, turan_graph, vertex_split,
    Apex,
};
use blowup_core::decomposition::{
    blowup_construction, decomposition_family_blowup, decomposition_family_direct, derive_params, ex_below_q,
    CoveringFamily, DecompositionFamily,
};
use blowup_core::formulas::{
    conjectured_kst_family_ex, ex_blowup_formula, f_chvatal_hanson, f_diag, g_diag, h_edges, h_prime_edges,
    nim_formula, t_p_edges, BlowupKind,
};
use blowup_core::graph::canon::canonical_form;
use blowup_core::graph::{graph6, notation};
use blowup_core::harness::{self, Format, GridParams, VerificationReport};
use blowup_core::invariants::{
    chromatic_number, covering_number, independent_covering_number, is_factor_critical, matching_number,
};
use blowup_core::oracle::{stabilize_with, verify_free, Cache, CachedOracle, CACHE_ENV};
use blowup_core::{Graph, GraphFamily};

/// Edge blow-ups of graphs: constructions, formulas, exact oracles and verification reports.
///
/// Graph arguments take the catalogue notation (`K3`, `2*K3`, `C4^4`, `K2,3`,
/// `petersen`, ...) or graph6, optionally prefixed with `g6:`.
#[derive(Parser)]
#[command(name = "blowup", version)]
struct Cli {
    /// Directory of the oracle cache (`oracle.jsonl`).
    #[arg(long, global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,

    /// Replay cached oracle answers before trusting them.
    #[arg(long, global = true)]
    paranoid: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and print it as graph6 with its order and size.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Invariants of a graph as a JSON object.
    Params { graph: String },
    /// Decomposition family of `F` and the parameters q, S, B, k.
    Decompose {
        /// The forbidden graph `F`, or the base `G` with `--blowup`.
        graph: String,
        #[arg(long)]
        p: usize,
        /// Treat the argument as a base `G` and decompose `G^{p+1}` by vertex splits.
        #[arg(long)]
        blowup: bool,
        /// Host parameter for the definition search (default |V(F)|).
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// Evaluate a closed-form value.
    Formula {
        #[command(subcommand)]
        what: Formula,
    },
    /// Exact brute-force values.
    Oracle {
        #[command(subcommand)]
        what: Oracle,
    },
    /// Run registry checks and print their reports.
    Verify {
        /// Registry keys, or `all`.
        #[arg(required_unless_present = "list")]
        keys: Vec<String>,
        /// List the registry and exit.
        #[arg(long)]
        list: bool,
        /// Range of n, as `lo..hi` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        n: Option<(usize, usize)>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        s: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        t: Option<Vec<usize>>,
        #[arg(long)]
        k_max: Option<usize>,
        /// Base graphs, separated by `;`.
        #[arg(long, value_delimiter = ';')]
        bases: Option<Vec<String>>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Also write each report as `<dir>/<key>.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render saved JSON reports.
    Report {
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Turán graph T_p(n).
    Turan { n: usize, p: usize },
    /// Edge blow-up G^{p+1}.
    Blowup { graph: String, p: usize },
    /// Vertex split of the listed vertices.
    Split {
        graph: String,
        #[arg(value_delimiter = ',')]
        vertices: Vec<usize>,
    },
    /// All vertex splits of G, up to isomorphism.
    SplitFamily { graph: String },
    /// H(n,p,s), or H'(n,p,s) with `--independent`.
    H {
        n: usize,
        p: usize,
        s: usize,
        #[arg(long)]
        independent: bool,
    },
    /// The lower-bound graph for G^{p+1} on n vertices.
    Lower { graph: String, p: usize, n: usize },
    /// K_{s,t}(a,b).
    Kst { s: usize, t: usize, a: usize, b: usize },
    /// H_{2t-1}.
    Gadget { t: usize },
    /// A graph with ν <= nu, Δ <= delta and f(nu, delta) edges.
    Enu { nu: usize, delta: usize },
    /// Any graph in the notation.
    Graph { graph: String },
}

#[derive(Subcommand)]
enum Formula {
    /// ex(n, G^{p+1}) for a catalogued kind (`matching:2`, `star:3`, `path:5`, `cycle:4`, `clique:3`, `kst:2,3`).
    Ex { kind: String, n: usize, p: usize },
    /// g(n, G^{p+1}).
    Nim { kind: String, n: usize, p: usize },
    /// t_p(n).
    Turan { n: usize, p: usize },
    /// h(n,p,s) and h'(n,p,s).
    H { n: usize, p: usize, s: usize },
    /// f(nu, delta).
    F { nu: usize, delta: usize },
    /// f_diag(k) and g_diag(k).
    Diag { k: usize },
    /// The conjectured ex(n, M(K_{s,t}^{p+1})).
    Conj { n: usize, s: usize, t: usize },
}

#[derive(Subcommand)]
enum Oracle {
    /// ex(n, family) with all extremal graphs.
    Ex {
        n: usize,
        #[arg(required = true)]
        family: Vec<String>,
    },
    /// g(n, H) with an optimal colouring.
    Nim { n: usize, graph: String },
    /// ex(n, M(K_{s,t}^{p+1})) - h'(n,1,s) over a range of n.
    Stabilize {
        s: usize,
        t: usize,
        p: usize,
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
    },
    /// Whether a graph contains a member of a family, with an embedding when it does.
    Free {
        graph: String,
        #[arg(required = true)]
        family: Vec<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {a}..{b}"));
            }
            Ok((a, b))
        }
        None => parse(s).map(|n| (n, n)),
    }
}

fn graph(text: &str) -> Result<Graph> {
    if let Some(g6) = text.strip_prefix("g6:") {
        return graph6::decode(g6).with_context(|| format!("graph6 `{g6}`"));
    }
    match notation::parse(text) {
        Ok(g) => Ok(g),
        Err(e) => graph6::decode(text).map_err(|_| e).with_context(|| format!("graph `{text}`")),
    }
}

fn family(texts: &[String]) -> Result<GraphFamily> {
    texts.iter().map(|t| graph(t)).collect::<Result<Vec<_>>>().map(|v| v.iter().collect())
}

fn graph_json(g: &Graph) -> Value {
    json!({ "graph6": graph6::encode(g), "order": g.order(), "size": g.size() })
}

fn family_json(f: &GraphFamily) -> Value {
    Value::Array(f.iter().map(graph_json).collect())
}

fn oracle(cli: &Cli) -> Result<CachedOracle> {
    let cache = match &cli.cache_dir {
        Some(dir) => Some(Cache::open(dir).with_context(|| format!("cache in {}", dir.display()))?),
        None => None,
    };
    Ok(CachedOracle {
        cache,
        paranoid: cli.paranoid,
    })
}

/// Writes to stdout, ignoring a closed pipe.
fn say(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn print(v: &Value) {
    say(&serde_json::to_string_pretty(v).expect("json values serialize"));
}

fn construct(what: &Construct) -> Result<Value> {
    let g = match what {
        Construct::Turan { n, p } => turan_graph(*n, *p)?,
        Construct::Blowup { graph: g, p } => edge_blowup(&graph(g)?, *p)?,
        Construct::Split { graph: g, vertices } => {
            vertex_split(&graph(g)?, vertices.iter().fold(0u64, |m, &v| m | 1u64.checked_shl(v as u32).unwrap_or(0)))?
        }
        Construct::SplitFamily { graph: g } => return Ok(json!({ "members": family_json(&split_family(&graph(g)?)?) })),
        Construct::H { n, p, s, independent } => {
            h_construction(*n, *p, *s, if *independent { Apex::Independent } else { Apex::Clique })?
        }
        Construct::Lower { graph: g, p, n } => blowup_construction(&graph(g)?, *p, *n)?,
        Construct::Kst { s, t, a, b } => k_st_split(*s, *t, *a, *b)?,
        Construct::Gadget { t } => h_odd_gadget(*t)?,
        Construct::Enu { nu, delta } => e_nu_delta_witness(*nu, *delta)?,
        Construct::Graph { graph: g } => graph(g)?,
    };
    Ok(graph_json(&g))
}

fn params(text: &str) -> Result<Value> {
    let g = graph(text)?;
    let m = matching_number(&g);
    let cover = covering_number(&g)?;
    Ok(json!({
        "graph6": graph6::encode(&g),
        "canonical": canonical_form(&g).to_hex(),
        "order": g.order(),
        "size": g.size(),
        "min_degree": g.min_degree(),
        "max_degree": g.max_degree(),
        "degree_sequence": g.degree_sequence(),
        "connected": g.is_connected(),
        "chromatic_number": chromatic_number(&g)?,
        "matching_number": m.size,
        "covering_number": cover.size,
        "independent_covering_number": independent_covering_number(&g).map(|c| c.size),
        "factor_critical": is_factor_critical(&g),
    }))
}

fn decompose(text: &str, p: usize, blowup: bool, t_max: Option<usize>) -> Result<Value> {
    let g = graph(text)?;
    let m: DecompositionFamily = if blowup {
        decomposition_family_blowup(&g, p)?
    } else {
        decomposition_family_direct(&g, p, t_max)?
    };
    let params = derive_params(&m)?;
    let b = match &params.b {
        CoveringFamily::Sentinel { .. } => json!("sentinel"),
        CoveringFamily::Members(f) => family_json(f),
    };
    let witnesses: Vec<Value> = params
        .s_witnesses
        .iter()
        .map(|w| {
            let cover: Vec<usize> = (0..64).filter(|&v| w.cover >> v & 1 == 1).collect();
            json!({ "member": graph6::encode(&w.member), "cover": cover })
        })
        .collect();
    Ok(json!({
        "p": p,
        "provenance": m.provenance,
        "members": family_json(&m.members),
        "q": params.q,
        "k": params.k,
        "B": b,
        "ex_below_q": ex_below_q(&params)?,
        "S_witnesses": witnesses,
    }))
}

fn formula(what: &Formula) -> Result<Value> {
    Ok(match what {
        Formula::Ex { kind, n, p } => serde_json::to_value(ex_blowup_formula(BlowupKind::parse(kind)?, *n, *p)?)?,
        Formula::Nim { kind, n, p } => serde_json::to_value(nim_formula(BlowupKind::parse(kind)?, *n, *p)?)?,
        Formula::Turan { n, p } => json!({ "value": t_p_edges(*n, *p) }),
        Formula::H { n, p, s } => json!({ "h": h_edges(*n, *p, *s), "h_prime": h_prime_edges(*n, *p, *s) }),
        Formula::F { nu, delta } => json!({ "value": f_chvatal_hanson(*nu, *delta) }),
        Formula::Diag { k } => {
            if *k < 2 {
                bail!("the diagonal values need k >= 2");
            }
            json!({ "f_diag": f_diag(*k), "g_diag": g_diag(*k) })
        }
        Formula::Conj { n, s, t } => json!({ "value": conjectured_kst_family_ex(*n, *s, *t)? }),
    })
}

fn run_oracle(cli: &Cli, what: &Oracle) -> Result<Value> {
    let o = oracle(cli)?;
    Ok(match what {
        Oracle::Ex { n, family: f } => serde_json::to_value(o.ex(*n, &family(f)?)?)?,
        Oracle::Nim { n, graph: h } => serde_json::to_value(o.nim(*n, &graph(h)?)?)?,
        Oracle::Stabilize { s, t, p, n } => {
            serde_json::to_value(stabilize_with(*s, *t, *p, n.0..=n.1, |n, fam| o.ex(n, fam))?)?
        }
        Oracle::Free { graph: g, family: f } => serde_json::to_value(verify_free(&graph(g)?, &family(f)?))?,
    })
}

fn emit(reports: &[VerificationReport], format: OutputFormat) {
    match format {
        OutputFormat::Json if reports.len() == 1 => say(&harness::render(&reports[0], Format::Json)),
        OutputFormat::Json => say(&serde_json::to_string_pretty(reports).expect("reports serialize")),
        OutputFormat::Text => {
            for r in reports {
                say(&harness::render(r, Format::Text));
            }
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Construct { what } => print(&construct(what)?),
        Command::Params { graph } => print(&params(graph)?),
        Command::Decompose { graph, p, blowup, t_max } => print(&decompose(graph, *p, *blowup, *t_max)?),
        Command::Formula { what } => print(&formula(what)?),
        Command::Oracle { what } => print(&run_oracle(cli, what)?),
        Command::Verify {
            keys,
            list,
            n,
            p,
            s,
            t,
            k_max,
            bases,
            format,
            out,
        } => {
            if *list {
                for e in harness::registry() {
                    say(&format!("{:<20} {:<20} {}", e.key, format!("{:?}", e.mode), e.claim));
                }
                return Ok(0);
            }
            let grid = GridParams {
                n: *n,
                p: *p,
                s: s.clone(),
                t: t.clone(),
                k_max: *k_max,
                bases: bases.clone(),
            };
            let keys: Vec<String> = if keys.iter().any(|k| k == "all") {
                harness::registry().iter().map(|e| e.key.to_string()).collect()
            } else {
                keys.clone()
            };
            let o = oracle(cli)?;
            let mut reports = vec![];
            for key in &keys {
                let report = harness::run_verification(key, &grid, &o)?;
                if let Some(dir) = out {
                    fs::create_dir_all(dir)?;
                    fs::write(dir.join(format!("{key}.json")), harness::render(&report, Format::Json) + "\n")?;
                }
                reports.push(report);
            }
            emit(&reports, *format);
            return Ok(harness::exit_code(&reports) as u8);
        }
        Command::Report { files, format } => {
            let mut reports = vec![];
            for f in files {
                let text = fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?;
                let report: VerificationReport =
                    serde_json::from_str(&text).with_context(|| format!("parsing {}", f.display()))?;
                reports.push(report);
            }
            emit(&reports, *format);
            return Ok(harness::exit_code(&reports) as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

//! Command-line front end. [`run`] parses arguments, executes one command and
//! returns the process exit status: 0 on success, 1 when a command fails or
//! a certificate does not verify, 2 on usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use pseudoramsey::atlas::{self, Built};
use pseudoramsey::engine::{self, FeasibilityMode, Forbidden, SampleOptions};
use pseudoramsey::graph::{self, AlphaMode, Graph};
use pseudoramsey::io;
use pseudoramsey::provenance::Family;
use pseudoramsey::spectra;

#[derive(Parser, Debug)]
#[command(name = "pseudoramsey", version, about = "Pseudorandom graphs, Ramsey certificates and the tools between them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph family and write it as a graph file.
    Construct(ConstructArgs),
    /// Print the adjacency spectrum.
    Spectrum(GraphArg),
    /// Print the (n, d, λ) report and the trace inequality check.
    Ndl(NdlArgs),
    /// Print the girth.
    Girth(GraphArg),
    /// Independence number, exact or a seeded lower bound.
    Alpha(AlphaArgs),
    /// Check whether a graph avoids a forbidden subgraph.
    Free(FreeArgs),
    /// List the family L(F) of a base graph F.
    Lf(LfArgs),
    /// Random block construction on a bipartite host.
    Block(BlockArgs),
    /// Sample vertices and prune independent sets; writes a certificate.
    Sample(SampleArgs),
    /// Certify r(F, t) > N for an F-free graph.
    Certify(CertifyArgs),
    /// Rebuild and re-check a certificate.
    Verify(VerifyArgs),
    /// Evaluate the independent-set counting bound.
    ArBound(ArBoundArgs),
    /// Evaluate the block-construction feasibility inequality.
    Feasibility(FeasibilityArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Paley,
    ErPolarity,
    PgIncidence,
    GqIncidence,
    Dkq,
    PgPolarity,
    GqPolarity,
    Cycle,
    Complete,
    Path,
    Empty,
    Petersen,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    family: FamilyName,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct GraphArg {
    graph: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct NdlArgs {
    graph: PathBuf,
    /// Exponents s for the ratios λ n^(s-2) / d^(s-1), comma separated.
    #[arg(long, value_delimiter = ',')]
    s: Vec<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct AlphaArgs {
    graph: PathBuf,
    #[arg(long, conflicts_with = "lower", required_unless_present = "lower")]
    exact: bool,
    #[arg(long, requires = "seed")]
    lower: bool,
    #[arg(long)]
    seed: Option<u64>,
    /// Search nodes (exact) or restarts (lower bound).
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FreeArgs {
    graph: PathBuf,
    /// K<s>, C<l>, G<n>[u-v,...] or the path of a graph file.
    #[arg(long)]
    forbid: String,
}

#[derive(Args, Debug)]
struct LfArgs {
    /// K<s>, C<l>, G<n>[u-v,...] or the path of a graph file.
    #[arg(long)]
    base: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct BlockArgs {
    #[arg(long)]
    host: PathBuf,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Also write the partition (A_u, B_u) as JSON.
    #[arg(long)]
    partition_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SampleArgs {
    graph: PathBuf,
    #[arg(long)]
    forbid: String,
    #[arg(long)]
    t: usize,
    /// Sampling probability; defaults to min(1, ln²n / (2e²λ)).
    #[arg(long)]
    p: Option<f64>,
    /// λ used in the default probability; defaults to the spectral value.
    #[arg(long)]
    lambda: Option<f64>,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Also write the final graph.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    graph: PathBuf,
    #[arg(long)]
    forbid: String,
    /// Defaults to α + 1.
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    certificate: PathBuf,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ArBoundArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    d: f64,
    #[arg(long)]
    lambda: f64,
    #[arg(long)]
    t: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Theorem5,
    Hexagon,
}

#[derive(Args, Debug)]
struct FeasibilityArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Fill m, n and q from the hexagon of order (q, q³).
    #[arg(long, conflicts_with_all = ["m", "n", "d", "q"])]
    hexagon_q: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    t: u64,
    #[arg(long)]
    json: bool,
}

/// Runs one command; see the crate docs for exit statuses.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn family_of(a: &ConstructArgs) -> Result<Family> {
    let need = |v: Option<u64>, name: &str| v.ok_or_else(|| anyhow!("--{name} is required for this family"));
    Ok(match a.family {
        FamilyName::Paley => Family::Paley { q: need(a.q, "q")? },
        FamilyName::ErPolarity => Family::ErPolarity { q: need(a.q, "q")? },
        FamilyName::PgIncidence => Family::PgIncidence { q: need(a.q, "q")? },
        FamilyName::GqIncidence => Family::GqIncidence { q: need(a.q, "q")? },
        FamilyName::Dkq => Family::Dkq { k: need(a.k, "k")?, q: need(a.q, "q")? },
        FamilyName::PgPolarity => Family::PgPolarity { q: need(a.q, "q")? },
        FamilyName::GqPolarity => Family::GqPolarity { q: need(a.q, "q")? },
        FamilyName::Cycle => Family::Cycle { n: need(a.n, "n")? },
        FamilyName::Complete => Family::Complete { n: need(a.n, "n")? },
        FamilyName::Path => Family::Path { n: need(a.n, "n")? },
        FamilyName::Empty => Family::Empty { n: need(a.n, "n")? },
        FamilyName::Petersen => Family::Petersen,
    })
}

fn load(path: &Path) -> Result<io::GraphFile> {
    io::read_graph(path).with_context(|| format!("reading {}", path.display()))
}

fn forbidden(pattern: &str) -> Result<Forbidden> {
    if Path::new(pattern).is_file() {
        let g = load(Path::new(pattern))?.graph;
        return Ok(Forbidden::Pattern(g.with_provenance("pattern()")));
    }
    Ok(pattern.parse()?)
}

fn budget(b: Option<u64>) -> u64 {
    b.unwrap_or(engine::DEFAULT_ALPHA_BUDGET)
}

/// Refuses graphs whose edges differ from what their provenance rebuilds,
/// since a certificate for them could never verify.
fn check_rebuildable(g: &Graph) -> Result<()> {
    let rebuilt = engine::rebuild_graph(g.provenance())
        .with_context(|| format!("provenance {:?} cannot be rebuilt", g.provenance()))?;
    if io::edge_hash(&rebuilt) != io::edge_hash(g) || rebuilt.n() != g.n() {
        bail!("graph does not match the graph rebuilt from its provenance");
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<bool> {
    match command {
        Command::Construct(a) => {
            let family = family_of(&a)?;
            let (g, bip) = match atlas::build(&family)? {
                Built::Graph(g) => (g, None),
                Built::Bipartite(b) => (b.to_graph(), Some(b.m())),
            };
            io::write_graph(&a.out, &g, bip)?;
            writeln!(out, "family: {family}")?;
            writeln!(out, "n: {}", g.n())?;
            writeln!(out, "edges: {}", g.edge_count())?;
            if let Some(m) = bip {
                writeln!(out, "bipartition: {m} {}", g.n() - m)?;
            }
            writeln!(out, "edge_hash: {}", io::edge_hash_hex(&g))?;
            writeln!(out, "written: {}", a.out.display())?;
        }
        Command::Spectrum(a) => {
            let g = load(&a.graph)?.graph;
            let eigs = spectra::spectrum(&g)?;
            if a.json {
                write!(out, "{}", io::to_json(&eigs)?)?;
            } else {
                writeln!(out, "n: {}", g.n())?;
                for (value, mult) in group(&eigs) {
                    writeln!(out, "eigenvalue: {value:.9} multiplicity: {mult}")?;
                }
                writeln!(out, "lambda: {:.9}", spectra::lambda_of(&eigs))?;
            }
        }
        Command::Ndl(a) => {
            let g = load(&a.graph)?.graph;
            let report = spectra::ndl_report(&g, &a.s)?;
            let trace = spectra::trace_cube_check(&g, &report);
            if a.json {
                let doc = serde_json::json!({ "report": report, "trace_check": trace });
                write!(out, "{}", io::to_json(&doc)?)?;
            } else {
                writeln!(out, "n: {}", report.n)?;
                writeln!(out, "regular: {}", report.is_regular)?;
                writeln!(out, "d: {}", report.d)?;
                let degs: Vec<String> = report.degree_multiset.iter().map(|(d, c)| format!("{d}x{c}")).collect();
                writeln!(out, "degrees: {}", degs.join(" "))?;
                writeln!(out, "lambda: {:.9}", report.lambda)?;
                writeln!(out, "bipartite: {}", report.bipartite)?;
                for r in &report.ssv_ratios {
                    match r.ratio {
                        Some(x) => writeln!(out, "ratio s={}: {x:.9} (lambda={:.9}, n={}, d={})", r.s, report.lambda, report.n, report.d)?,
                        None => writeln!(out, "ratio s={}: undefined (d=0)", r.s)?,
                    }
                }
                writeln!(out, "trace_cube: {} (triangles={})", trace.trace_cube, trace.triangles)?;
                writeln!(
                    out,
                    "trace_check: {:?} (d^3 - lambda^3 (n-1) = {:.6}, d={}, lambda={:.9}, n={})",
                    trace.status, trace.rhs, trace.d, trace.lambda, trace.n
                )?;
            }
        }
        Command::Girth(a) => {
            let g = load(&a.graph)?.graph;
            match graph::girth(&g) {
                Some(x) => writeln!(out, "girth: {x}")?,
                None => writeln!(out, "girth: infinite (acyclic)")?,
            }
        }
        Command::Alpha(a) => {
            let g = load(&a.graph)?.graph;
            let (mode, b) = if a.exact {
                (AlphaMode::Exact, budget(a.budget))
            } else {
                let seed = a.seed.ok_or_else(|| anyhow!("--lower needs --seed"))?;
                (AlphaMode::LowerBound { seed }, a.budget.unwrap_or(256))
            };
            let r = graph::independence_number(&g, mode, b)?;
            if a.json {
                write!(out, "{}", io::to_json(&r)?)?;
            } else {
                writeln!(out, "alpha: {}", r.alpha)?;
                writeln!(out, "mode: {}", r.mode)?;
                writeln!(out, "nodes: {}", r.nodes)?;
                writeln!(out, "witness: {}", one_indexed(&r.witness))?;
            }
        }
        Command::Free(a) => {
            let g = load(&a.graph)?.graph;
            let f = forbidden(&a.forbid)?;
            match f.find_in(&g)? {
                None => writeln!(out, "{f}-free: true ({})", f.method())?,
                Some(w) => {
                    writeln!(out, "{f}-free: false")?;
                    writeln!(out, "witness: {}", one_indexed(&w))?;
                }
            }
        }
        Command::Lf(a) => {
            let base = forbidden(&a.base)?.graph()?;
            let fam = engine::lf_family(&base)?;
            if a.json {
                let members: Vec<_> = fam
                    .members
                    .iter()
                    .map(|m| serde_json::json!({ "n": m.graph.n(), "partition": m.partition, "edges": m.graph.edges().collect::<Vec<_>>() }))
                    .collect();
                write!(out, "{}", io::to_json(&serde_json::json!({ "partitions": fam.partitions, "members": members }))?)?;
            } else {
                writeln!(out, "base: {} vertices, {} edges", base.n(), base.edge_count())?;
                writeln!(out, "path partitions: {}", fam.partitions)?;
                writeln!(out, "isomorphism classes: {}", fam.members.len())?;
                for (i, m) in fam.members.iter().enumerate() {
                    let parts: Vec<String> = m
                        .partition
                        .iter()
                        .map(|p| p.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" "))
                        .collect();
                    let edges: Vec<String> = m.graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
                    writeln!(
                        out,
                        "member {i}: n={} edges=[{}] partition=[{}]",
                        m.graph.n(),
                        edges.join(","),
                        parts.join(" | ")
                    )?;
                }
            }
        }
        Command::Block(a) => {
            let host = load(&a.host)?.bipartite()?;
            let (h, partition) = engine::block_construct(&host, a.seed);
            io::write_graph(&a.out, &h, None)?;
            if let Some(p) = &a.partition_out {
                io::write_json(p, &partition)?;
            }
            writeln!(out, "host: {} (|U|={}, |V|={})", host.provenance(), host.m(), host.n())?;
            writeln!(out, "seed: {}", a.seed)?;
            writeln!(out, "n: {}", h.n())?;
            writeln!(out, "edges: {}", h.edge_count())?;
            writeln!(out, "edge_hash: {}", io::edge_hash_hex(&h))?;
            writeln!(out, "written: {}", a.out.display())?;
        }
        Command::Sample(a) => {
            let g = load(&a.graph)?.graph;
            check_rebuildable(&g)?;
            let f = forbidden(&a.forbid)?;
            let options = SampleOptions { lambda: a.lambda, p: a.p };
            let (h, cert) = engine::sample_ramsey_graph(&g, &f, a.t, options, a.seed, budget(a.budget))?;
            io::write_json(&a.out, &cert)?;
            if let Some(path) = &a.graph_out {
                io::write_graph(path, &h, None)?;
            }
            let s = cert.sampling.as_ref().expect("sampled certificate");
            if let Some(lambda) = s.lambda {
                writeln!(out, "lambda: {lambda:.12} ({:?})", s.lambda_source.expect("set with lambda"))?;
            }
            writeln!(out, "p: {} (n={}, {:?})", s.p, s.host_n, s.p_source)?;
            writeln!(out, "sampled: {}", s.sampled)?;
            writeln!(out, "removed: {}", s.removed.len())?;
            writeln!(out, "alpha: {} (t={})", cert.alpha.value, cert.t)?;
            writeln!(out, "claim: {}", cert.claim)?;
            writeln!(out, "written: {}", a.out.display())?;
        }
        Command::Certify(a) => {
            let g = load(&a.graph)?.graph;
            check_rebuildable(&g)?;
            let f = forbidden(&a.forbid)?;
            let cert = engine::certify(&g, &f, a.t, budget(a.budget))?;
            io::write_json(&a.out, &cert)?;
            writeln!(out, "{}-free: true ({})", f, cert.freeness.method)?;
            writeln!(out, "alpha: {} ({})", cert.alpha.value, cert.alpha.mode)?;
            writeln!(out, "claim: {}", cert.claim)?;
            writeln!(out, "edge_hash: {}", cert.edge_hash)?;
            writeln!(out, "written: {}", a.out.display())?;
        }
        Command::Verify(a) => {
            let cert: engine::RamseyCertificate = io::read_json(&a.certificate)
                .with_context(|| format!("reading {}", a.certificate.display()))?;
            let report = engine::verify_certificate(&cert, budget(a.budget))?;
            if a.json {
                write!(out, "{}", io::to_json(&report)?)?;
            } else {
                for c in &report.checks {
                    writeln!(out, "{} {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail)?;
                }
                writeln!(out, "verified: {}", report.passed)?;
                if report.passed {
                    writeln!(out, "claim: {}", cert.claim)?;
                }
            }
            return Ok(report.passed);
        }
        Command::ArBound(a) => {
            let r = engine::alon_rodl_bound(a.n, a.d, a.lambda, a.t)?;
            if a.json {
                write!(out, "{}", io::to_json(&r)?)?;
            } else {
                writeln!(out, "inputs: n={} d={} lambda={} t={}", r.n, r.d, r.lambda, r.t)?;
                writeln!(out, "log_base: natural")?;
                writeln!(out, "ell: {} (t/ln n = {:.6}, rounded up)", r.ell, r.ell_real)?;
                writeln!(out, "ln_intermediate: {:.9} (bound {:e})", r.ln_intermediate, r.intermediate_bound())?;
                writeln!(out, "ln_final: {:.9} (bound {:e})", r.ln_final, r.final_bound())?;
                writeln!(out, "flag d>=1: {}", r.flags.degree_at_least_one)?;
                writeln!(out, "flag lambda>1/2: {}", r.flags.lambda_above_half)?;
                writeln!(out, "flag t>=2n ln^2 n/d: {} (threshold {:.6})", r.flags.t_above_threshold, r.t_threshold)?;
            }
        }
        Command::Feasibility(a) => {
            let mode = match a.mode {
                ModeArg::Theorem5 => FeasibilityMode::Theorem5,
                ModeArg::Hexagon => FeasibilityMode::Hexagon,
            };
            let (m, n, x) = match a.hexagon_q {
                Some(q) => {
                    let (m, n, d) = engine::hexagon_parameters(q)?;
                    (m, n, if mode == FeasibilityMode::Hexagon { q } else { d })
                }
                None => {
                    let m = a.m.ok_or_else(|| anyhow!("--m is required"))?;
                    let n = a.n.ok_or_else(|| anyhow!("--n is required"))?;
                    let x = match mode {
                        FeasibilityMode::Theorem5 => a.d.ok_or_else(|| anyhow!("--d is required in theorem5 mode"))?,
                        FeasibilityMode::Hexagon => a.q.ok_or_else(|| anyhow!("--q is required in hexagon mode"))?,
                    };
                    (m, n, x)
                }
            };
            let r = engine::block_feasibility(m, n, x, a.t, mode)?;
            if a.json {
                write!(out, "{}", io::to_json(&r)?)?;
            } else {
                let label = if mode == FeasibilityMode::Hexagon { "q" } else { "d" };
                writeln!(out, "inputs: m={} n={} {label}={} t={}", r.m, r.n, r.d_or_q, r.t)?;
                writeln!(out, "log_base: 2")?;
                writeln!(out, "integer_part: {}", r.integer_part)?;
                writeln!(out, "t log2 n: {:.6}", r.log_term)?;
                match mode {
                    FeasibilityMode::Theorem5 => {
                        writeln!(out, "d t - m - t log2 n: {:.6}", r.value)?;
                        writeln!(out, "holds: {}", r.holds)?;
                    }
                    FeasibilityMode::Hexagon => {
                        writeln!(out, "exponent t log2 n + m - (q+1) t: {:.6}", r.value)?;
                        writeln!(out, "negative: {}", r.holds)?;
                    }
                }
                if let Some(c) = &r.claim {
                    writeln!(out, "claim: {c}")?;
                }
            }
        }
    }
    Ok(true)
}

fn one_indexed(vs: &[usize]) -> String {
    vs.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

/// Groups a sorted spectrum into (value, multiplicity) with a 1e-6 window.
fn group(eigs: &[f64]) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &e in eigs {
        match out.last_mut() {
            Some((first, count, sum)) if (*first - e).abs() < 1e-6 => {
                *count += 1;
                *sum += e;
            }
            _ => out.push((e, 1, e)),
        }
    }
    out.into_iter().map(|(_, c, s)| (s / c as f64, c)).collect()
}

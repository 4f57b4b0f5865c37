use std::collections::BTreeMap;

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::{Deserialize, Serialize};

use super::bounds::{sampling_probability, theorem_t};
use super::pattern::Forbidden;
use crate::atlas::{self, Built};
use crate::error::{Error, Result};
use crate::graph::{independence_number, is_independent, AlphaMode, Graph, ResultMode};
use crate::io::edge_hash_hex;
use crate::provenance::{Provenance, Step};
use crate::spectra::{lambda_of, spectrum};
use crate::TOOL_VERSION;

pub const CERTIFICATE_FORMAT_VERSION: u32 = 1;
/// Default node budget for exact independence computations.
pub const DEFAULT_ALPHA_BUDGET: u64 = 2_000_000_000;
const ALPHA_METHOD: &str = "branch and bound (maximum clique of the complement)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TSource {
    /// Supplied by the caller.
    Explicit,
    /// Set to `α + 1`.
    AlphaPlusOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamSource {
    /// Computed from the host graph.
    Computed,
    Override,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    pub provenance: String,
    pub family: String,
    pub parameters: BTreeMap<String, u64>,
    pub seed: Option<u64>,
    pub transformations: Vec<String>,
}

impl WitnessRecord {
    fn from_provenance(text: &str) -> Result<Self> {
        let p: Provenance = text.parse()?;
        Ok(WitnessRecord {
            provenance: text.to_string(),
            family: p.family.name().to_string(),
            parameters: p.family.parameters(),
            seed: p.seed(),
            transformations: p.steps.iter().map(|s| s.to_string()).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaRecord {
    pub value: usize,
    pub mode: ResultMode,
    pub method: String,
    /// A maximum independent set, 0-indexed.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FreenessRecord {
    pub method: String,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplingRecord {
    pub host_n: usize,
    pub lambda: Option<f64>,
    pub lambda_source: Option<ParamSource>,
    pub p: f64,
    pub p_source: ParamSource,
    /// Size of the sampled set before removals.
    pub sampled: usize,
    /// Removed host vertices, in removal order.
    pub removed: Vec<usize>,
}

/// The `t = ⌈2 n ln²n / d⌉` of the sampling argument, for comparison with
/// the certified `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremTRecord {
    pub n: usize,
    pub d: usize,
    pub value: u64,
    pub satisfied: bool,
}

/// A checkable witness that `r(F, t) > N`: an `F`-free graph on `N`
/// vertices with no independent set of size `t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RamseyCertificate {
    pub format_version: u32,
    pub claim: String,
    pub forbidden: String,
    pub witness: WitnessRecord,
    pub n: usize,
    pub edge_count: usize,
    pub t: usize,
    pub t_source: TSource,
    pub alpha: AlphaRecord,
    pub freeness: FreenessRecord,
    pub sampling: Option<SamplingRecord>,
    pub theorem_t: Option<TheoremTRecord>,
    pub edge_hash: String,
    pub tool_version: String,
}

pub fn claim_text(forbidden: &Forbidden, t: usize, n: usize) -> String {
    format!("r({}, {t}) > {n}", forbidden.claim_symbol())
}

fn theorem_t_record(host: &Graph, t: usize) -> Option<TheoremTRecord> {
    let (n, d) = (host.n(), host.max_degree());
    (n >= 2 && d >= 1).then(|| {
        let value = theorem_t(n as u64, d as f64);
        TheoremTRecord { n, d, value, satisfied: t as u64 >= value }
    })
}

fn check_free(g: &Graph, forbidden: &Forbidden) -> Result<()> {
    match forbidden.find_in(g)? {
        Some(witness) => Err(Error::ContainsForbidden { pattern: forbidden.to_string(), witness }),
        None => Ok(()),
    }
}

struct Parts<'a> {
    graph: &'a Graph,
    host: &'a Graph,
    forbidden: &'a Forbidden,
    t: usize,
    t_source: TSource,
    alpha: crate::graph::IndependenceResult,
    sampling: Option<SamplingRecord>,
}

fn assemble(parts: Parts<'_>) -> Result<RamseyCertificate> {
    let g = parts.graph;
    Ok(RamseyCertificate {
        format_version: CERTIFICATE_FORMAT_VERSION,
        claim: claim_text(parts.forbidden, parts.t, g.n()),
        forbidden: parts.forbidden.to_string(),
        witness: WitnessRecord::from_provenance(g.provenance())?,
        n: g.n(),
        edge_count: g.edge_count(),
        t: parts.t,
        t_source: parts.t_source,
        alpha: AlphaRecord {
            value: parts.alpha.alpha,
            mode: parts.alpha.mode,
            method: ALPHA_METHOD.to_string(),
            witness: parts.alpha.witness,
        },
        freeness: FreenessRecord { method: parts.forbidden.method().to_string(), verified: true },
        sampling: parts.sampling,
        theorem_t: theorem_t_record(parts.host, parts.t),
        edge_hash: edge_hash_hex(g),
        tool_version: TOOL_VERSION.to_string(),
    })
}

/// Certifies `r(F, t) > |V(g)|` for an `F`-free `g`.
///
/// With `t = None` the strongest claim `t = α(g) + 1` is made. The graph's
/// provenance must be rebuildable, since verification starts from it.
pub fn certify(g: &Graph, forbidden: &Forbidden, t: Option<usize>, alpha_budget: u64) -> Result<RamseyCertificate> {
    check_free(g, forbidden)?;
    let alpha = independence_number(g, AlphaMode::Exact, alpha_budget)?;
    let (t, t_source) = match t {
        None => (alpha.alpha + 1, TSource::AlphaPlusOne),
        Some(t) if t > alpha.alpha => (t, TSource::Explicit),
        Some(t) => {
            return Err(Error::InvalidArgument(format!(
                "t = {t} is too small: the graph has an independent set of size {}",
                alpha.alpha
            )))
        }
    };
    assemble(Parts { graph: g, host: g, forbidden, t, t_source, alpha, sampling: None })
}

/// Vertices kept by independent coin flips with probability `p`.
pub fn sample_vertices(n: usize, p: f64, seed: u64) -> Vec<usize> {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    (0..n)
        .filter(|_| ((rng.next_u64() >> 11) as f64) * (1.0 / (1u64 << 53) as f64) < p)
        .collect()
}

/// How [`sample_ramsey_graph`] picks `λ` and `p`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SampleOptions {
    pub lambda: Option<f64>,
    pub p: Option<f64>,
}

/// Samples each vertex with probability `p = min(1, ln²n / (2e²λ))`, then
/// repeatedly deletes the least vertex of a maximum independent set until
/// none of size `t` is left. Returns the final induced subgraph and its
/// certificate.
pub fn sample_ramsey_graph(
    g: &Graph,
    forbidden: &Forbidden,
    t: usize,
    options: SampleOptions,
    seed: u64,
    alpha_budget: u64,
) -> Result<(Graph, RamseyCertificate)> {
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    check_free(g, forbidden)?;
    let (lambda, lambda_source, p, p_source) = match options.p {
        Some(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!("probability {p} outside [0, 1]")));
            }
            (None, None, p, ParamSource::Override)
        }
        None => {
            let (lambda, source) = match options.lambda {
                Some(l) => (l, ParamSource::Override),
                None => (lambda_of(&spectrum(g)?), ParamSource::Computed),
            };
            if !(lambda > 0.0 && lambda.is_finite()) {
                return Err(Error::InvalidArgument(format!("lambda must be positive, got {lambda}")));
            }
            (Some(lambda), Some(source), sampling_probability(g.n(), lambda), ParamSource::Computed)
        }
    };
    let sampled = sample_vertices(g.n(), p, seed);
    let mut kept = sampled.clone();
    let mut removed = Vec::new();
    let alpha = loop {
        let h = g.induced_subgraph(&kept)?;
        let a = independence_number(&h, AlphaMode::Exact, alpha_budget)?;
        if a.alpha < t {
            break a;
        }
        let v = kept.remove(a.witness[0]);
        removed.push(v);
    };
    let step = Step::Sample { seed, p, t, removed: removed.clone() };
    let graph = g.induced_subgraph(&kept)?.with_provenance(format!("{} |> {step}", g.provenance()));
    let sampling = SamplingRecord { host_n: g.n(), lambda, lambda_source, p, p_source, sampled: sampled.len(), removed };
    let cert = assemble(Parts {
        graph: &graph,
        host: g,
        forbidden,
        t,
        t_source: TSource::Explicit,
        alpha,
        sampling: Some(sampling),
    })?;
    Ok((graph, cert))
}

/// A rebuilt graph, plus the host and sampled set of a trailing sample step.
pub struct Rebuilt {
    pub built: Built,
    pub sample_host: Option<(Graph, usize)>,
}

/// Replays a provenance chain from its base family.
pub fn reconstruct(provenance: &Provenance) -> Result<Rebuilt> {
    let mut built = atlas::build(&provenance.family)?;
    let mut sample_host = None;
    for step in &provenance.steps {
        sample_host = None;
        built = match step {
            Step::Induced { vertices } => Built::Graph(built.into_graph().induced_subgraph(vertices)?),
            Step::Block { seed } => match built {
                Built::Bipartite(b) => Built::Graph(super::block::block_construct(&b, *seed).0),
                Built::Graph(_) => {
                    return Err(Error::Provenance("block step needs a bipartite host".into()));
                }
            },
            Step::Sample { seed, p, removed, .. } => {
                let host = built.into_graph();
                let sampled = sample_vertices(host.n(), *p, *seed);
                let mut kept = sampled.clone();
                for v in removed {
                    let i = kept
                        .binary_search(v)
                        .map_err(|_| Error::Provenance(format!("removed vertex {v} was not sampled")))?;
                    kept.remove(i);
                }
                let g = host.induced_subgraph(&kept)?.with_provenance(format!("{} |> {step}", host.provenance()));
                sample_host = Some((host, sampled.len()));
                Built::Graph(g)
            }
        };
    }
    Ok(Rebuilt { built, sample_host })
}

pub fn rebuild_graph(provenance: &str) -> Result<Graph> {
    Ok(reconstruct(&provenance.parse()?)?.built.into_graph())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, stored: T, derived: T) {
        let passed = stored == derived;
        let detail = if passed { format!("{derived:?}") } else { format!("stored {stored:?}, derived {derived:?}") };
        self.0.push(Check { name: name.to_string(), passed, detail });
    }

    fn holds(&mut self, name: &str, passed: bool, detail: String) {
        self.0.push(Check { name: name.to_string(), passed, detail });
    }
}

/// Rebuilds the witness from its provenance and re-derives every field.
///
/// Field consistency is checked first: the rebuilt graph's size and hash,
/// the claim text, `t` against the recorded `α`, and the recorded
/// independent set. Only when all of those pass are the expensive facts
/// re-derived from scratch: `F`-freeness, the exact independence number,
/// and a spectral `λ` if one was used. Returns an error only when the
/// provenance cannot be replayed; any mismatch is a failed check.
pub fn verify_certificate(cert: &RamseyCertificate, alpha_budget: u64) -> Result<VerificationReport> {
    let provenance: Provenance = cert.witness.provenance.parse()?;
    let rebuilt = reconstruct(&provenance)?;
    let sample_host = rebuilt.sample_host;
    let g = rebuilt.built.into_graph();
    let mut c = Checks::default();

    c.eq("format_version", cert.format_version, CERTIFICATE_FORMAT_VERSION);
    c.eq("tool_version", cert.tool_version.as_str(), TOOL_VERSION);
    c.eq("witness", &cert.witness, &WitnessRecord::from_provenance(g.provenance())?);
    c.eq("n", cert.n, g.n());
    c.eq("edge_count", cert.edge_count, g.edge_count());
    c.eq("edge_hash", cert.edge_hash.clone(), edge_hash_hex(&g));

    let forbidden = match cert.forbidden.parse::<Forbidden>() {
        Ok(f) => {
            c.eq("freeness", &cert.freeness, &FreenessRecord { method: f.method().into(), verified: true });
            c.eq("claim", cert.claim.clone(), claim_text(&f, cert.t, g.n()));
            Some(f)
        }
        Err(e) => {
            c.holds("forbidden", false, e.to_string());
            None
        }
    };

    c.eq("alpha.mode", cert.alpha.mode, ResultMode::Exact);
    c.eq("alpha.method", cert.alpha.method.as_str(), ALPHA_METHOD);
    let w = &cert.alpha.witness;
    let witness_ok = w.len() == cert.alpha.value
        && w.windows(2).all(|p| p[0] < p[1])
        && w.iter().all(|&v| v < g.n())
        && is_independent(&g, w);
    c.holds("alpha.witness", witness_ok, format!("{} vertices, recorded alpha {}", w.len(), cert.alpha.value));
    c.holds("alpha_below_t", cert.alpha.value < cert.t, format!("alpha {} vs t {}", cert.alpha.value, cert.t));
    if cert.t_source == TSource::AlphaPlusOne {
        c.eq("t", cert.t, cert.alpha.value + 1);
    }

    let last_sample = match provenance.steps.last() {
        Some(Step::Sample { p, t, removed, .. }) => Some((*p, *t, removed.clone())),
        _ => None,
    };
    let host = match (&last_sample, sample_host) {
        (Some((p, t, removed)), Some((host, sampled))) => {
            c.eq("t_source", cert.t_source, TSource::Explicit);
            c.eq("t", cert.t, *t);
            match &cert.sampling {
                Some(s) => {
                    c.eq("sampling.host_n", s.host_n, host.n());
                    c.eq("sampling.p", s.p, *p);
                    c.eq("sampling.sampled", s.sampled, sampled);
                    c.eq("sampling.removed", &s.removed, removed);
                    check_probability(&mut c, s, &host);
                }
                None => c.holds("sampling", false, "missing for a sampled witness".into()),
            }
            host
        }
        _ => {
            c.eq("sampling", cert.sampling.as_ref(), None);
            g.clone()
        }
    };
    c.eq("theorem_t", cert.theorem_t.clone(), theorem_t_record(&host, cert.t));

    if c.0.iter().all(|x| x.passed) {
        let forbidden = forbidden.expect("parsed when all checks pass");
        let found = forbidden.find_in(&g)?;
        c.holds("forbidden_free", found.is_none(), format!("{forbidden} copy: {found:?}"));
        let alpha = independence_number(&g, AlphaMode::Exact, alpha_budget)?;
        c.eq("alpha.value", cert.alpha.value, alpha.alpha);
        // the search is deterministic, so the recorded set must be reproduced
        c.eq("alpha.witness_reproduced", &cert.alpha.witness, &alpha.witness);
        if let Some(s) = &cert.sampling {
            if s.lambda_source == Some(ParamSource::Computed) {
                c.eq("sampling.lambda", s.lambda, Some(lambda_of(&spectrum(&host)?)));
            }
        }
    } else {
        c.holds("re-derivation", false, "skipped: recorded fields are inconsistent".into());
    }

    let passed = c.0.iter().all(|x| x.passed);
    Ok(VerificationReport { passed, checks: c.0 })
}

fn check_probability(c: &mut Checks, s: &SamplingRecord, host: &Graph) {
    match s.p_source {
        ParamSource::Override => c.eq("sampling.lambda", s.lambda, None),
        ParamSource::Computed => match (s.lambda, s.lambda_source) {
            (Some(lambda), Some(_)) => {
                c.eq("sampling.p_formula", s.p, sampling_probability(host.n(), lambda));
            }
            _ => c.holds("sampling.lambda", false, "computed p without lambda".into()),
        },
    }
}

//! Machine-readable construction history carried by every graph.
//!
//! A provenance string names a base family and the transformations applied
//! to it, for example
//!
//! ```text
//! gq_incidence(q=3) |> block(seed=7) |> induced(vertices=0:4:9)
//! ```
//!
//! Rebuilding a graph from its provenance is how certificates are
//! re-verified.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Paley { q: u64 },
    ErPolarity { q: u64 },
    PgIncidence { q: u64 },
    GqIncidence { q: u64 },
    Dkq { k: u64, q: u64 },
    /// Polarity graph of `PG(2, q)` built through the generic polarity code.
    PgPolarity { q: u64 },
    /// Polarity graph of `W(3, q)` under the polarity found by search.
    GqPolarity { q: u64 },
    Cycle { n: u64 },
    Complete { n: u64 },
    Path { n: u64 },
    Empty { n: u64 },
    Petersen,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Paley { .. } => "paley",
            Family::ErPolarity { .. } => "er_polarity",
            Family::PgIncidence { .. } => "pg_incidence",
            Family::GqIncidence { .. } => "gq_incidence",
            Family::Dkq { .. } => "dkq",
            Family::PgPolarity { .. } => "pg_polarity",
            Family::GqPolarity { .. } => "gq_polarity",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::Path { .. } => "path",
            Family::Empty { .. } => "empty",
            Family::Petersen => "petersen",
        }
    }

    pub fn parameters(&self) -> BTreeMap<String, u64> {
        let pairs: Vec<(&str, u64)> = match *self {
            Family::Paley { q }
            | Family::ErPolarity { q }
            | Family::PgIncidence { q }
            | Family::GqIncidence { q }
            | Family::PgPolarity { q }
            | Family::GqPolarity { q } => vec![("q", q)],
            Family::Dkq { k, q } => vec![("k", k), ("q", q)],
            Family::Cycle { n } | Family::Complete { n } | Family::Path { n } | Family::Empty { n } => {
                vec![("n", n)]
            }
            Family::Petersen => vec![],
        };
        pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
    }

    /// Whether the family produces a bipartite graph with a designated side.
    pub fn is_bipartite_host(&self) -> bool {
        matches!(self, Family::PgIncidence { .. } | Family::GqIncidence { .. } | Family::Dkq { .. })
    }

    pub fn from_parts(name: &str, params: &BTreeMap<String, u64>) -> Result<Self, Error> {
        let get = |key: &str| {
            params
                .get(key)
                .copied()
                .ok_or_else(|| Error::Provenance(format!("family {name} needs parameter {key}")))
        };
        let family = match name {
            "paley" => Family::Paley { q: get("q")? },
            "er_polarity" => Family::ErPolarity { q: get("q")? },
            "pg_incidence" => Family::PgIncidence { q: get("q")? },
            "gq_incidence" => Family::GqIncidence { q: get("q")? },
            "dkq" => Family::Dkq { k: get("k")?, q: get("q")? },
            "pg_polarity" => Family::PgPolarity { q: get("q")? },
            "gq_polarity" => Family::GqPolarity { q: get("q")? },
            "cycle" => Family::Cycle { n: get("n")? },
            "complete" => Family::Complete { n: get("n")? },
            "path" => Family::Path { n: get("n")? },
            "empty" => Family::Empty { n: get("n")? },
            "petersen" => Family::Petersen,
            other => return Err(Error::Provenance(format!("unknown family {other:?}"))),
        };
        if family.parameters() != *params {
            return Err(Error::Provenance(format!("unexpected parameters for family {name}")));
        }
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters().iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.name(), params.join(","))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Step {
    /// Subgraph induced by the listed parent vertices.
    Induced { vertices: Vec<usize> },
    /// Random block construction on a bipartite host.
    Block { seed: u64 },
    /// Random vertex sampling with probability `p` followed by the listed
    /// removals, which leave no independent set of size `t`.
    Sample { seed: u64, p: f64, t: usize, removed: Vec<usize> },
}

fn list(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":")
}

fn parse_list(s: &str) -> Result<Vec<usize>, Error> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(':')
        .map(|x| x.parse().map_err(|_| Error::Provenance(format!("bad vertex {x:?}"))))
        .collect()
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Induced { vertices } => write!(f, "induced(vertices={})", list(vertices)),
            Step::Block { seed } => write!(f, "block(seed={seed})"),
            Step::Sample { seed, p, t, removed } => {
                write!(f, "sample(seed={seed},p={p},t={t},removed={})", list(removed))
            }
        }
    }
}

/// Splits `name(k=v,...)` into its name and raw key/value pairs.
fn split_call(s: &str) -> Result<(&str, Vec<(&str, &str)>), Error> {
    let s = s.trim();
    let open = s.find('(').ok_or_else(|| Error::Provenance(format!("expected '(' in {s:?}")))?;
    let inner = s[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| Error::Provenance(format!("expected ')' at the end of {s:?}")))?;
    let mut pairs = Vec::new();
    for part in inner.split(',').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Provenance(format!("expected key=value, got {part:?}")))?;
        pairs.push((k.trim(), v.trim()));
    }
    Ok((s[..open].trim(), pairs))
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (name, pairs) = split_call(s)?;
        let map: BTreeMap<&str, &str> = pairs.into_iter().collect();
        let get = |k: &str| {
            map.get(k).copied().ok_or_else(|| Error::Provenance(format!("step {name} lacks {k}")))
        };
        let num = |k: &str| -> Result<u64, Error> {
            get(k)?.parse().map_err(|_| Error::Provenance(format!("bad number for {k}")))
        };
        let (step, keys) = match name {
            "induced" => (Step::Induced { vertices: parse_list(get("vertices")?)? }, 1),
            "block" => (Step::Block { seed: num("seed")? }, 1),
            "sample" => (
                Step::Sample {
                    seed: num("seed")?,
                    p: get("p")?.parse().map_err(|_| Error::Provenance("bad probability".into()))?,
                    t: num("t")? as usize,
                    removed: parse_list(get("removed")?)?,
                },
                4,
            ),
            other => return Err(Error::Provenance(format!("unknown step {other:?}"))),
        };
        if map.len() != keys {
            return Err(Error::Provenance(format!("unexpected keys in step {name}")));
        }
        Ok(step)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub family: Family,
    pub steps: Vec<Step>,
}

impl Provenance {
    pub fn base(family: Family) -> Self {
        Provenance { family, steps: Vec::new() }
    }

    pub fn then(mut self, step: Step) -> Self {
        self.steps.push(step);
        self
    }

    /// Seed of the last randomized step, if any.
    pub fn seed(&self) -> Option<u64> {
        self.steps.iter().rev().find_map(|s| match s {
            Step::Block { seed } | Step::Sample { seed, .. } => Some(*seed),
            Step::Induced { .. } => None,
        })
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for s in &self.steps {
            write!(f, " |> {s}")?;
        }
        Ok(())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut parts = s.split("|>");
        let head = parts.next().unwrap_or_default();
        let (name, pairs) = split_call(head)?;
        let mut params = BTreeMap::new();
        for (k, v) in pairs {
            let v: u64 = v.parse().map_err(|_| Error::Provenance(format!("bad parameter {k}={v}")))?;
            params.insert(k.to_string(), v);
        }
        let family = Family::from_parts(name, &params)?;
        let steps = parts.map(str::parse).collect::<Result<_, _>>()?;
        Ok(Provenance { family, steps })
    }
}

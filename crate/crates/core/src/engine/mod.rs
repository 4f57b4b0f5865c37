//! Ramsey machinery: the counting bound for independent sets in
//! pseudorandom graphs, vertex sampling, the pattern families `L(F)`, the
//! random block construction and its exact independence law, feasibility
//! arithmetic, and certificates.

mod block;
mod bounds;
mod certificate;
mod lf;
mod pattern;

pub use block::{block_construct, indep_probability, independence_frequency, BlockPartition, DyadicProbability};
pub use bounds::{
    alon_rodl_bound, block_feasibility, hexagon_parameters, sampling_probability, theorem_t, AlonRodlFlags,
    AlonRodlReport, FeasibilityMode, FeasibilityReport, LogBase,
};
pub use certificate::{
    certify, claim_text, rebuild_graph, reconstruct, sample_ramsey_graph, sample_vertices, verify_certificate,
    AlphaRecord, Check, FreenessRecord, ParamSource, RamseyCertificate, Rebuilt, SampleOptions, SamplingRecord,
    TSource, TheoremTRecord, VerificationReport, WitnessRecord, CERTIFICATE_FORMAT_VERSION, DEFAULT_ALPHA_BUDGET,
};
pub use lf::{build_fp, canonical_edges, is_lf_free, lf_family, LfViolation, PatternFamily, PatternMember, MAX_LF_EDGES};
pub use pattern::Forbidden;

use serde::{Deserialize, Serialize};
use statrs::function::factorial::{ln_binomial, ln_factorial};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogBase {
    Natural,
    Two,
}

/// Hypotheses of the independent-set counting bound, each evaluated on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlonRodlFlags {
    pub degree_at_least_one: bool,
    pub lambda_above_half: bool,
    pub t_above_threshold: bool,
}

impl AlonRodlFlags {
    pub fn all(&self) -> bool {
        self.degree_at_least_one && self.lambda_above_half && self.t_above_threshold
    }
}

/// Bounds on the number of independent `t`-sets in an `(n, d, λ)`-graph.
///
/// Values are kept as natural logarithms; they overflow `f64` long before
/// the parameters stop being interesting.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlonRodlReport {
    pub n: u64,
    pub d: f64,
    pub lambda: f64,
    pub t: u64,
    pub log_base: LogBase,
    /// `t / ln n` before rounding.
    pub ell_real: f64,
    /// `⌈t / ln n⌉`, clamped to `1..=t`.
    pub ell: u64,
    /// `ln` of `(1/t!) C(t, ℓ) n^ℓ (2λn/d)^(t-ℓ)`.
    pub ln_intermediate: f64,
    /// `ln` of `(2e²λ / ln²n)^t`.
    pub ln_final: f64,
    /// `2 n ln²n / d`.
    pub t_threshold: f64,
    pub flags: AlonRodlFlags,
}

impl AlonRodlReport {
    pub fn final_bound(&self) -> f64 {
        self.ln_final.exp()
    }

    pub fn intermediate_bound(&self) -> f64 {
        self.ln_intermediate.exp()
    }
}

pub fn alon_rodl_bound(n: u64, d: f64, lambda: f64, t: u64) -> Result<AlonRodlReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")));
    }
    if !(d >= 1.0 && d.is_finite()) {
        return Err(Error::InvalidArgument(format!("d must be at least 1, got {d}")));
    }
    if !(lambda > 0.5 && lambda.is_finite()) {
        return Err(Error::InvalidArgument(format!("lambda must exceed 1/2, got {lambda}")));
    }
    if t == 0 {
        return Err(Error::InvalidArgument("t must be at least 1".into()));
    }
    let ln_n = (n as f64).ln();
    let ell_real = t as f64 / ln_n;
    let ell = (ell_real.ceil() as u64).clamp(1, t);
    let tf = t as f64;
    let ln_intermediate = -ln_factorial(t)
        + ln_binomial(t, ell)
        + ell as f64 * ln_n
        + (t - ell) as f64 * (2.0 * lambda * n as f64 / d).ln();
    let e2 = std::f64::consts::E * std::f64::consts::E;
    let ln_final = tf * (2.0 * e2 * lambda / (ln_n * ln_n)).ln();
    let t_threshold = 2.0 * n as f64 * ln_n * ln_n / d;
    Ok(AlonRodlReport {
        n,
        d,
        lambda,
        t,
        log_base: LogBase::Natural,
        ell_real,
        ell,
        ln_intermediate,
        ln_final,
        t_threshold,
        flags: AlonRodlFlags {
            degree_at_least_one: d >= 1.0,
            lambda_above_half: lambda > 0.5,
            t_above_threshold: tf >= t_threshold,
        },
    })
}

/// The `t = ⌈2 n ln²n / d⌉` of the sampling argument.
pub fn theorem_t(n: u64, d: f64) -> u64 {
    let ln_n = (n as f64).ln();
    (2.0 * n as f64 * ln_n * ln_n / d).ceil() as u64
}

/// Vertex-sampling probability `min(1, ln²n / (2e²λ))`.
pub fn sampling_probability(n: usize, lambda: f64) -> f64 {
    let ln_n = (n as f64).ln();
    let e2 = std::f64::consts::E * std::f64::consts::E;
    (ln_n * ln_n / (2.0 * e2 * lambda)).min(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FeasibilityMode {
    /// `d t > m + t log₂ n`.
    Theorem5,
    /// Expected-count exponent `t log₂ n + m - (q+1) t < 0`.
    Hexagon,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub mode: FeasibilityMode,
    pub m: u64,
    pub n: u64,
    /// `d` in theorem5 mode, `q` in hexagon mode.
    pub d_or_q: u64,
    pub t: u64,
    pub log_base: LogBase,
    /// Exact integer part: `d t - m` (theorem5) or `m - (q+1) t` (hexagon).
    pub integer_part: i128,
    /// `t log₂ n`.
    pub log_term: f64,
    /// `d t - m - t log₂ n` (theorem5) or `t log₂ n + m - (q+1) t` (hexagon).
    pub value: f64,
    pub holds: bool,
    /// The implied claim when the inequality holds.
    pub claim: Option<String>,
}

pub fn block_feasibility(m: u64, n: u64, d_or_q: u64, t: u64, mode: FeasibilityMode) -> Result<FeasibilityReport> {
    if m == 0 || n == 0 || d_or_q == 0 || t == 0 {
        return Err(Error::InvalidArgument("feasibility inputs must be positive".into()));
    }
    let log_term = t as f64 * (n as f64).log2();
    let (m_i, t_i, x) = (m as i128, t as i128, d_or_q as i128);
    let (integer_part, value, holds) = match mode {
        FeasibilityMode::Theorem5 => {
            let ip = x * t_i - m_i;
            // d t - m > t log₂ n; no comparison is needed when the integer part is not positive.
            let holds = ip > 0 && (ip as f64) > log_term;
            (ip, ip as f64 - log_term, holds)
        }
        FeasibilityMode::Hexagon => {
            let ip = m_i - (x + 1) * t_i;
            let holds = ip < 0 && log_term < (-ip) as f64;
            (ip, log_term + ip as f64, holds)
        }
    };
    Ok(FeasibilityReport {
        mode,
        m,
        n,
        d_or_q,
        t,
        log_base: LogBase::Two,
        integer_part,
        log_term,
        value,
        holds,
        claim: holds.then(|| format!("r(F, {t}) > {n}")),
    })
}

/// Point and line counts `(m, n, d)` of a generalized hexagon of order
/// `(q, q³)`: `m = (q+1)(q⁸+q⁴+1)` lines, `n = (q³+1)(q⁸+q⁴+1)` points,
/// and `d = q + 1` points per line.
pub fn hexagon_parameters(q: u64) -> Result<(u64, u64, u64)> {
    let too_big = || Error::SizeBound(format!("hexagon counts for q = {q} exceed 64 bits"));
    let q = q as u128;
    let core = q.checked_pow(8).and_then(|x| x.checked_add(q.pow(4) + 1)).ok_or_else(too_big)?;
    let m = (q + 1).checked_mul(core).ok_or_else(too_big)?;
    let n = (q.pow(3) + 1).checked_mul(core).ok_or_else(too_big)?;
    let fit = |x: u128| u64::try_from(x).map_err(|_| too_big());
    Ok((fit(m)?, fit(n)?, fit(q + 1)?))
}

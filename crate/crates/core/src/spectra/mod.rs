//! Adjacency spectra and the spectral certifications built on them: the
//! `(n, d, λ)` report, the cubic trace inequality, and moment cross-checks
//! against combinatorial counts.

mod eigen;
mod report;

pub use eigen::symmetric_eigenvalues;
pub use report::{
    lambda_of, moment_check, ndl_report, singular_values, spectrum, trace_cube, trace_cube_check,
    MomentCheck, SpectralReport, SsvRatio, TraceCheck, TraceStatus, MAX_SPECTRUM_VERTICES,
};

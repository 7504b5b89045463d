//! Fermatean neutrosophic normal numbers (FNNN).
//!
//! An FNNN `⟨(η, ξ); t, i, f⟩` pairs a normal-shaped fuzzy location/spread
//! with truth, indeterminacy and falsity degrees whose cubes sum to at most 2.
//! This crate provides the Λ-parameterized arithmetic on such values, the
//! Φ-weighted Hamming and Euclidean distances, four weighted aggregation
//! operators and a TOPSIS-style ranking pipeline with a Λ sweep.
//!
//! The crate is `no_std` and only needs `alloc`; transcendental functions come
//! from `libm`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod aggregate;
pub mod distance;
pub mod error;
pub mod madm;
pub mod number;
pub mod ops;

mod math;

pub use aggregate::{fnnwa, fnnwg, gfnnwa, gfnnwg, Operator, WeightVector};
pub use distance::{euclidean, hamming, normal_distance, phi, Metric, Phi};
pub use error::{Component, FnnError};
pub use madm::{
    aggregate_rows, closeness, ideal_values, lambda_sweep, normalize, rank, run_pipeline,
    DecisionMatrix, PipelineConfig, RankingReport, SweepResult, SweepRow,
};
pub use number::{accuracy_ffn, make_fnnn, score_ffn, Fnnn, Lambda, MembershipTriple, NormalParams};
pub use ops::{boxplus, boxtimes, power, scale};

pub type Result<T, E = FnnError> = core::result::Result<T, E>;

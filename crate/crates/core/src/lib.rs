//! Exact distance spectra of connected graphs.
//!
//! The library computes integer characteristic polynomials of graph
//! distance matrices, certifies eigenvalue locations by Sturm-sequence
//! root counting over exact rationals, evaluates the closed-form
//! polynomial factors of the apex–clique families K₁ ∨ (K_{n₁} ∪ … ∪ K_{n_r}),
//! and decides — structurally and spectrally, with an agreement record —
//! whether the second distance eigenvalue of a graph lies below the exact
//! threshold −2929/5000. A census module verifies the classification
//! exhaustively on all small connected graphs.
//!
//! The census is data-parallel over graphs via rayon; disable default
//! features for a fully sequential build.

pub mod census;
pub mod classifier;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod rational;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, MAX_ORDER};
pub use poly::IntPoly;
pub use rational::lambda2_threshold;
pub use spectra::{
    char_poly_exact, compare_lambda2_threshold, float_spectrum, inertia_shifted,
    lambda_k_enclosure, sturm_count_greater, EigenContext, Inertia, RationalInterval,
    ThresholdPosition,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

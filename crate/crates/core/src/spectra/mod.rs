//! Exact spectral machinery for distance matrices: integer characteristic
//! polynomials, Sturm-certified root counts and enclosures, a rational
//! inertia oracle, and a floating Jacobi solver for display purposes.

pub mod charpoly;
pub mod enclosure;
pub mod float;
pub mod inertia;
pub mod sturm;

pub use charpoly::char_poly_exact;
pub use enclosure::{
    compare_lambda2_threshold, interlacing_check, interlacing_check_with, lambda_k_enclosure,
    spectrum_enclosures, EigenComparator, EigenContext, RationalInterval, RootEnclosure,
    SpectrumEnclosure, ThresholdPosition,
};
pub use float::float_spectrum;
pub use inertia::{inertia_shifted, Inertia};
pub use sturm::{sturm_count_greater, RootCounter, SturmChain};

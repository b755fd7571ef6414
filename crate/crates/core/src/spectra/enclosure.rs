//! Certified eigenvalue enclosures and exact spectral decisions.
//!
//! Everything on a decision path here is driven by Sturm counts on exact
//! rationals: bisection narrows an interval that provably contains λ_k,
//! the threshold comparison is a root count plus an exact evaluation at
//! the threshold, and two indexed eigenvalues of different matrices are
//! compared by refining their enclosures until they separate — or, when
//! they are literally the same algebraic number, by finding a common root
//! of the two polynomials inside the overlap. No floating point anywhere.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::poly::IntPoly;
use crate::rational::{decimal_string, lambda2_threshold, Rounding};
use crate::spectra::charpoly::char_poly_exact;
use crate::spectra::sturm::RootCounter;

/// A certified enclosure: the target value lies in [lo, hi].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    /// Midpoint rendered with `digits` decimals, ties away from zero.
    pub fn decimal(&self, digits: usize) -> String {
        decimal_string(&self.midpoint(), digits, Rounding::HalfAwayFromZero)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // outward-rounded 12-decimal rendering keeps the enclosure certified
        let mut s = serializer.serialize_struct("RationalInterval", 2)?;
        s.serialize_field("lo", &decimal_string(&self.lo, 12, Rounding::Floor))?;
        s.serialize_field("hi", &decimal_string(&self.hi, 12, Rounding::Ceil))?;
        s.end()
    }
}

/// Where λ₂ sits relative to the open threshold −2929/5000.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ThresholdPosition {
    Below,
    AtThreshold,
    Above,
}

impl std::fmt::Display for ThresholdPosition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ThresholdPosition::Below => "Below",
            ThresholdPosition::AtThreshold => "AtThreshold",
            ThresholdPosition::Above => "Above",
        })
    }
}

/// All eigenvalue enclosures of one matrix, largest first.
#[derive(Debug, Clone)]
pub struct SpectrumEnclosure {
    pub intervals: Vec<RationalInterval>,
    pub width: BigRational,
}

/// Root-counting context for one real-rooted polynomial: the counter, the
/// number of roots, and a bracket radius that provably contains them all.
#[derive(Debug, Clone)]
pub struct EigenContext {
    poly: IntPoly,
    counter: RootCounter,
    count: usize,
    bound: BigInt,
}

/// Working enclosure of the k-th largest root; target in (lo, hi].
#[derive(Debug, Clone)]
pub struct RootEnclosure {
    k: usize,
    lo: BigRational,
    hi: BigRational,
}

impl EigenContext {
    /// Context for the eigenvalues of a distance matrix.
    pub fn for_matrix(d: &DistanceMatrix) -> EigenContext {
        let poly = char_poly_exact(d);
        // spectral radius ≤ max row sum ≤ n · max entry
        let bound = BigInt::from(d.order() as u64 * u64::from(d.max_entry()) + 1);
        EigenContext::from_poly(poly, bound)
    }

    /// Context for an arbitrary real-rooted polynomial whose roots all lie
    /// in (−bound, bound); used for the closed-form family polynomials.
    pub fn from_poly(poly: IntPoly, bound: BigInt) -> EigenContext {
        let counter = RootCounter::new(&poly);
        let count = counter.total_multiplicity();
        EigenContext {
            poly,
            counter,
            count,
            bound,
        }
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn counter(&self) -> &RootCounter {
        &self.counter
    }

    /// Number of roots counted with multiplicity (= matrix order).
    pub fn root_count(&self) -> usize {
        self.count
    }

    pub fn count_greater(&self, t: &BigRational) -> usize {
        self.counter.count_greater(t)
    }

    fn initial_bracket(&self, k: usize) -> Result<RootEnclosure> {
        if k < 1 || k > self.count {
            return Err(Error::EigenIndexOutOfRange {
                k,
                order: self.count,
            });
        }
        let b = BigRational::from_integer(self.bound.clone());
        Ok(RootEnclosure {
            k,
            lo: -&b,
            hi: b,
        })
    }

    /// One bisection halving, keeping λ_k ∈ (lo, hi].
    pub fn refine_step(&self, enc: &mut RootEnclosure) {
        let mid = (&enc.lo + &enc.hi) / BigRational::from_integer(BigInt::from(2));
        if self.counter.count_greater(&mid) >= enc.k {
            enc.lo = mid;
        } else {
            enc.hi = mid;
        }
    }

    /// Certified enclosure of the k-th largest root with width ≤ `width`.
    pub fn lambda_k(&self, k: usize, width: &BigRational) -> Result<RationalInterval> {
        if !width.is_positive() {
            return Err(Error::InvalidParameter("enclosure width must be positive".into()));
        }
        let mut enc = self.initial_bracket(k)?;
        while &enc.hi - &enc.lo > *width {
            self.refine_step(&mut enc);
        }
        Ok(RationalInterval {
            lo: enc.lo,
            hi: enc.hi,
        })
    }

    /// Enclosure of the k-th largest root containing exactly one distinct
    /// root of the polynomial.
    pub fn isolate(&self, k: usize) -> Result<RootEnclosure> {
        let mut enc = self.initial_bracket(k)?;
        while self.counter.count_distinct_in(&enc.lo, &enc.hi) > 1 {
            self.refine_step(&mut enc);
        }
        Ok(enc)
    }

    /// Position of the second-largest root relative to `t`, decided by the
    /// strict count above `t` plus the exact multiplicity of `t` itself.
    pub fn lambda2_position(&self, t: &BigRational) -> ThresholdPosition {
        let above = self.counter.count_greater(t);
        if above >= 2 {
            return ThresholdPosition::Above;
        }
        // λ₂ ≤ t; it equals t iff t is a root deep enough to reach index 2
        if above + self.counter.multiplicity_at(t) >= 2 {
            ThresholdPosition::AtThreshold
        } else {
            ThresholdPosition::Below
        }
    }

    /// Enclosures for every root, largest first.
    pub fn spectrum(&self, width: &BigRational) -> Result<SpectrumEnclosure> {
        let intervals = (1..=self.count)
            .map(|k| self.lambda_k(k, width))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpectrumEnclosure {
            intervals,
            width: width.clone(),
        })
    }
}

impl RootEnclosure {
    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }
}

/// Certified enclosure of λ_k(G), 1-based, width ≤ `width`.
pub fn lambda_k_enclosure(g: &Graph, k: usize, width: &BigRational) -> Result<RationalInterval> {
    let d = g.distance_matrix()?;
    EigenContext::for_matrix(&d).lambda_k(k, width)
}

/// Enclosures for the whole spectrum of a distance matrix.
pub fn spectrum_enclosures(d: &DistanceMatrix, width: &BigRational) -> Result<SpectrumEnclosure> {
    EigenContext::for_matrix(d).spectrum(width)
}

/// Certified position of λ₂(G) relative to −2929/5000. Requires a connected
/// graph on at least two vertices; no floating point on the decision path.
pub fn compare_lambda2_threshold(g: &Graph) -> Result<ThresholdPosition> {
    if g.order() < 2 {
        return Err(Error::BelowTheoremScope);
    }
    let d = g.distance_matrix()?;
    Ok(EigenContext::for_matrix(&d).lambda2_position(&lambda2_threshold()))
}

/// Exact comparator between indexed roots of two real-rooted polynomials.
pub struct EigenComparator<'a> {
    a: &'a EigenContext,
    b: &'a EigenContext,
    /// Square-free common factor; None when the polynomials share no root.
    common: Option<RootCounter>,
}

impl<'a> EigenComparator<'a> {
    pub fn new(a: &'a EigenContext, b: &'a EigenContext) -> EigenComparator<'a> {
        let g = a.poly.square_free_part().gcd(&b.poly.square_free_part());
        let common = if g.degree().unwrap_or(0) > 0 {
            Some(RootCounter::new(&g))
        } else {
            None
        };
        EigenComparator { a, b, common }
    }

    /// Compares the i-th largest root of A with the j-th largest root of B
    /// (both 1-based). Terminates for every pair: distinct algebraic numbers
    /// separate under refinement, equal ones are caught by a common root in
    /// the overlap of the isolating intervals.
    pub fn compare(&self, i: usize, j: usize) -> Result<Ordering> {
        let mut ea = self.a.isolate(i)?;
        let mut eb = self.b.isolate(j)?;
        loop {
            if ea.hi <= eb.lo {
                return Ok(Ordering::Less);
            }
            if eb.hi <= ea.lo {
                return Ok(Ordering::Greater);
            }
            if let Some(common) = &self.common {
                let lo = (&ea.lo).max(&eb.lo).clone();
                let hi = (&ea.hi).min(&eb.hi).clone();
                if lo < hi && common.count_distinct_in(&lo, &hi) > 0 {
                    // the common root inside both isolating intervals is
                    // simultaneously root i of A and root j of B
                    return Ok(Ordering::Equal);
                }
            }
            self.a.refine_step(&mut ea);
            self.b.refine_step(&mut eb);
        }
    }
}

/// Checks the interlacing inequalities μ_{n−m+i}(A) ≤ μ_i(B) ≤ μ_i(A) for
/// the principal submatrix B of A on the vertex subset `s`, decided exactly.
pub fn interlacing_check(d: &DistanceMatrix, s: &[usize]) -> Result<bool> {
    let sub = d.principal_submatrix(s)?;
    let ctx_a = EigenContext::for_matrix(d);
    let ctx_b = EigenContext::for_matrix(&sub);
    interlacing_check_with(&ctx_a, &ctx_b)
}

/// Interlacing on prebuilt contexts (the full-matrix context can be reused
/// across many subsets of the same matrix).
pub fn interlacing_check_with(ctx_a: &EigenContext, ctx_b: &EigenContext) -> Result<bool> {
    let n = ctx_a.root_count();
    let m = ctx_b.root_count();
    if m > n {
        return Err(Error::BadSubset("submatrix larger than matrix".into()));
    }
    let cmp = EigenComparator::new(ctx_a, ctx_b);
    for i in 1..=m {
        // μ_i(B) ≤ μ_i(A)
        if cmp.compare(i, i)? == Ordering::Less {
            return Ok(false);
        }
        // μ_{n−m+i}(A) ≤ μ_i(B)
        if cmp.compare(n - m + i, i)? == Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

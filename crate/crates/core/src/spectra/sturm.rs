//! Sturm chains and certified real-root counting.
//!
//! Chains are built on the square-free factors produced by Yun's
//! decomposition; repeated eigenvalues (the (λ+1)-powers of the clique-join
//! families, the −2s of stars) are recovered from factor multiplicities, so
//! every count here is a count *with multiplicity*.
//!
//! Chain elements are snapped to primitive integer polynomials after each
//! rational remainder step. Scaling by positive rationals preserves every
//! evaluation sign, so the variation counts are untouched while coefficient
//! growth stays polynomial.

use num_rational::BigRational;

use crate::poly::IntPoly;

/// Sturm chain of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the canonical chain p, p′, −rem(p, p′), … with primitive
    /// normalization. `p` must be square-free for the counts to be exact.
    pub fn new(p: &IntPoly) -> SturmChain {
        let p0 = p.primitive_part();
        let p1 = p0.derivative().primitive_part();
        let mut seq = vec![p0, p1];
        loop {
            let last = &seq[seq.len() - 1];
            if last.is_zero() || last.degree() == Some(0) {
                break;
            }
            let r = rational_neg_rem(&seq[seq.len() - 2], last);
            if r.is_zero() {
                break;
            }
            seq.push(r);
        }
        SturmChain { seq }
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut count = 0;
        let mut prev = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::variations(self.seq.iter().map(|p| p.sign_at_pos_infinity()))
    }

    /// Number of distinct real roots in the half-open interval (a, b].
    pub fn count_in_halfopen(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots strictly greater than t.
    pub fn count_greater(&self, t: &BigRational) -> usize {
        self.variations_at(t) - self.variations_at_pos_infinity()
    }
}

/// −(a mod b) computed over ℚ, then scaled to a primitive integer
/// polynomial. Only positive scale factors are applied.
fn rational_neg_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    use crate::poly::RatPoly;
    let r = RatPoly::from_int(a).rem_for_sturm(&RatPoly::from_int(b));
    r.to_primitive_int_signed().neg()
}

#[derive(Debug, Clone)]
struct CountedFactor {
    poly: IntPoly,
    multiplicity: usize,
    chain: SturmChain,
}

/// Root counting with multiplicity for an arbitrary nonzero polynomial.
#[derive(Debug, Clone)]
pub struct RootCounter {
    factors: Vec<CountedFactor>,
}

impl RootCounter {
    pub fn new(p: &IntPoly) -> RootCounter {
        assert!(!p.is_zero(), "root counting needs a nonzero polynomial");
        let factors = p
            .square_free_decomposition()
            .into_iter()
            .map(|(f, multiplicity)| CountedFactor {
                chain: SturmChain::new(&f),
                poly: f,
                multiplicity,
            })
            .collect();
        RootCounter { factors }
    }

    /// Roots strictly greater than t, counted with multiplicity.
    pub fn count_greater(&self, t: &BigRational) -> usize {
        self.factors
            .iter()
            .map(|f| f.multiplicity * f.chain.count_greater(t))
            .sum()
    }

    /// Distinct roots strictly greater than t.
    pub fn count_distinct_greater(&self, t: &BigRational) -> usize {
        self.factors.iter().map(|f| f.chain.count_greater(t)).sum()
    }

    /// Distinct roots in (a, b].
    pub fn count_distinct_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.factors
            .iter()
            .map(|f| f.chain.count_in_halfopen(a, b))
            .sum()
    }

    /// Multiplicity of t as a root (0 when t is not a root).
    pub fn multiplicity_at(&self, t: &BigRational) -> usize {
        self.factors
            .iter()
            .filter(|f| f.poly.sign_at(t) == 0)
            .map(|f| f.multiplicity)
            .sum()
    }

    pub fn is_root(&self, t: &BigRational) -> bool {
        self.multiplicity_at(t) > 0
    }

    /// Total root count (with multiplicity) = degree for real-rooted input.
    pub fn total_multiplicity(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.multiplicity * f.poly.degree().unwrap_or(0))
            .sum()
    }
}

/// Number of real roots of `p` strictly greater than `t`, counted with
/// multiplicity (square-free part per Sturm, multiplicities from the
/// repeated-gcd tower).
pub fn sturm_count_greater(p: &IntPoly, t: &BigRational) -> usize {
    RootCounter::new(p).count_greater(t)
}

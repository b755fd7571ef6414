//! Exact characteristic polynomials of distance matrices via the
//! Faddeev–LeVerrier recurrence over arbitrary-precision integers.
//!
//! For an integer matrix every trace division in the recurrence is exact,
//! so the whole computation stays in ℤ; the result is the monic polynomial
//! det(λI − D) with no rounding anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::graph::DistanceMatrix;
use crate::poly::IntPoly;

/// Monic char polynomial det(λI − D), degree = order, exact.
pub fn char_poly_exact(d: &DistanceMatrix) -> IntPoly {
    let n = d.order();
    let a: Vec<BigInt> = (0..n * n)
        .map(|idx| BigInt::from(d.entry(idx / n, idx % n)))
        .collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();

    // m starts as the identity; every iterate is a polynomial in the
    // symmetric matrix D, hence symmetric, so only the upper triangle of
    // the product is computed and mirrored.
    let mut m: Vec<BigInt> = (0..n * n)
        .map(|idx| {
            if idx / n == idx % n {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();

    for k in 1..=n {
        let mut am = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for j in i..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    let a_il = &a[i * n + l];
                    if a_il.is_zero() {
                        continue;
                    }
                    s += a_il * &m[l * n + j];
                }
                am[i * n + j] = s;
            }
        }
        for i in 0..n {
            for j in 0..i {
                am[i * n + j] = am[j * n + i].clone();
            }
        }

        let mut trace = BigInt::zero();
        for i in 0..n {
            trace += &am[i * n + i];
        }
        let (q, r) = trace.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier trace division must be exact");
        let c = -q;
        if k < n {
            m = am;
            for i in 0..n {
                m[i * n + i] += &c;
            }
        }
        coeffs[n - k] = c;
    }

    IntPoly::from_coeffs(coeffs)
}

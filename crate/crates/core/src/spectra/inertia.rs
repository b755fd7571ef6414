//! Exact inertia of shifted distance matrices by symmetric rational
//! elimination — the second, independent root-counting oracle. By
//! Sylvester's law of inertia the positive count of D − tI equals the
//! number of eigenvalues of D strictly greater than t.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::graph::DistanceMatrix;

/// Signature of a symmetric matrix: counts of positive, negative, and zero
/// eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn total(&self) -> usize {
        self.positive + self.negative + self.zero
    }
}

/// Inertia of D − tI by LDLᵀ-style elimination with 1×1 diagonal pivots and
/// a 2×2 off-diagonal pivot when the whole trailing diagonal vanishes (such
/// a block contributes one positive and one negative eigenvalue).
pub fn inertia_shifted(d: &DistanceMatrix, t: &BigRational) -> Inertia {
    let n = d.order();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = BigRational::from_integer(BigInt::from(d.entry(i, j)));
                    if i == j {
                        e - t
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();

    let mut positive = 0;
    let mut negative = 0;
    let mut zero = 0;
    let mut k = 0;

    while k < n {
        if let Some(p) = (k..n).find(|&i| !m[i][i].is_zero()) {
            swap_symmetric(&mut m, k, p);
            let pivot = m[k][k].clone();
            if pivot.is_positive() {
                positive += 1;
            } else {
                negative += 1;
            }
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let f = &m[i][k] / &pivot;
                for j in i..n {
                    let delta = &f * &m[k][j];
                    m[i][j] = &m[i][j] - &delta;
                    if i != j {
                        m[j][i] = m[i][j].clone();
                    }
                }
                m[i][k] = BigRational::zero();
                m[k][i] = BigRational::zero();
            }
            k += 1;
        } else if let Some((p, q)) = first_offdiag_nonzero(&m, k) {
            // all trailing diagonal entries are zero: pivot on the 2×2
            // block [[0, b], [b, 0]]. k <= p < q, so the first swap cannot
            // displace the entry at column q.
            swap_symmetric(&mut m, k, p);
            swap_symmetric(&mut m, k + 1, q);
            let b = m[k][k + 1].clone();
            debug_assert!(!b.is_zero());
            positive += 1;
            negative += 1;
            for i in k + 2..n {
                let vi_p = m[i][k].clone();
                let vi_q = m[i][k + 1].clone();
                if vi_p.is_zero() && vi_q.is_zero() {
                    continue;
                }
                for j in i..n {
                    let delta = (&vi_p * &m[j][k + 1] + &vi_q * &m[j][k]) / &b;
                    m[i][j] = &m[i][j] - &delta;
                    if i != j {
                        m[j][i] = m[i][j].clone();
                    }
                }
            }
            k += 2;
        } else {
            zero += n - k;
            break;
        }
    }

    Inertia {
        positive,
        negative,
        zero,
    }
}

fn swap_symmetric(m: &mut [Vec<BigRational>], a: usize, b: usize) {
    if a == b {
        return;
    }
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn first_offdiag_nonzero(m: &[Vec<BigRational>], k: usize) -> Option<(usize, usize)> {
    let n = m.len();
    for i in k..n {
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

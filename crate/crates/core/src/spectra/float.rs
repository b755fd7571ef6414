//! Floating-point eigenvalues by cyclic Jacobi rotations: the fast path for
//! table rendering and a cross-check for the exact machinery. Never used on
//! a threshold decision path.

use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the distance matrix, non-increasing. Converged when the
/// off-diagonal Frobenius norm drops below 1e−12 times the max-norm of the
/// input; errors out at the hard sweep cap instead of looping.
pub fn float_spectrum(d: &DistanceMatrix) -> Result<Vec<f64>> {
    let n = d.order();
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| f64::from(d.entry(i, j))).collect())
        .collect();
    let max_norm = f64::from(d.max_entry());
    if n == 1 || max_norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let tol = 1e-12 * max_norm;

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += 2.0 * a[i][j] * a[i][j];
            }
        }
        if off.sqrt() <= tol {
            let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            eigs.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
            return Ok(eigs);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let apq = a[p][q];
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = arp - s * (arq + tau * arp);
                    a[p][r] = a[r][p];
                    a[r][q] = arq + s * (arp - tau * arq);
                    a[q][r] = a[r][q];
                }
            }
        }
    }
    Err(Error::NoConvergence)
}

//! Closed-form characteristic-polynomial factors for the apex–clique
//! families K₁ ∨ (K_{n₁} ∪ … ∪ K_{n_r}), r ∈ {2, 3, 4}.
//!
//! The polynomials are constructed directly from their printed coefficient
//! formulas, never re-derived from determinants; the factorization identity
//! det(λI − D) = (λ+1)^(n−r−1) · family(λ), checked against the independent
//! exact characteristic polynomial, is the consistency proof tying the two
//! derivations together.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::spectra::charpoly::char_poly_exact;

/// Parameter tuple (n₁ ≤ … ≤ n_r) of K₁ ∨ (K_{n₁} ∪ … ∪ K_{n_r}).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliqueJoinSpec {
    sizes: Vec<u64>,
}

impl CliqueJoinSpec {
    /// 2 to 4 positive clique sizes; stored sorted non-decreasing.
    pub fn new(sizes: &[u64]) -> Result<CliqueJoinSpec> {
        if !(2..=4).contains(&sizes.len()) {
            return Err(Error::InvalidParameter(format!(
                "clique join needs 2 to 4 parts, got {}",
                sizes.len()
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter("clique sizes must be positive".into()));
        }
        let mut sizes = sizes.to_vec();
        sizes.sort_unstable();
        Ok(CliqueJoinSpec { sizes })
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn part_count(&self) -> usize {
        self.sizes.len()
    }

    /// Total vertex count 1 + Σ nᵢ.
    pub fn order(&self) -> u64 {
        1 + self.sizes.iter().sum::<u64>()
    }

    /// Exponent of the (λ+1) factor in the characteristic polynomial.
    pub fn one_power(&self) -> u64 {
        self.order() - self.part_count() as u64 - 1
    }
}

/// Which closed form a polynomial came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Cubic for r = 2.
    F,
    /// Quartic for r = 3.
    G4,
    /// Quintic for r = 4.
    H,
    /// Quartic factor of h at (1, 1, n₃, n₄): h = (λ+2)·r.
    R,
    /// Quartic factor of h at (1, 2, 2, n₄): h = (λ+3)·s.
    S,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPolynomial {
    pub kind: FamilyKind,
    pub params: Vec<u64>,
    pub poly: IntPoly,
}

fn big(x: u64) -> BigInt {
    BigInt::from(x)
}

/// k·x for a small constant k.
fn kx(k: i64, x: &BigInt) -> BigInt {
    BigInt::from(k) * x
}

/// λ³ − (n₁+n₂−2)λ² − (3n₁n₂+2n₁+2n₂−1)λ − (2n₁n₂+n₁+n₂), for r = 2.
pub fn poly_f(n1: u64, n2: u64) -> FamilyPolynomial {
    assert!(n1 >= 1 && n2 >= 1, "clique sizes must be positive");
    let prod = big(n1) * big(n2);
    let sum = big(n1) + big(n2);
    let coeffs = vec![
        -(kx(2, &prod) + &sum),
        -(kx(3, &prod) + kx(2, &sum) - big(1)),
        -(&sum - big(2)),
        big(1),
    ];
    FamilyPolynomial {
        kind: FamilyKind::F,
        params: vec![n1, n2],
        poly: IntPoly::from_coeffs(coeffs),
    }
}

/// The printed quartic for r = 3, with g(−1) = 2n₁n₂n₃.
pub fn poly_g(n1: u64, n2: u64, n3: u64) -> FamilyPolynomial {
    assert!(n1 >= 1 && n2 >= 1 && n3 >= 1, "clique sizes must be positive");
    let e1 = big(n1) + big(n2) + big(n3);
    let e2 = big(n1) * big(n2) + big(n1) * big(n3) + big(n2) * big(n3);
    let e3 = big(n1) * big(n2) * big(n3);
    let coeffs = vec![
        -(kx(3, &e3) + kx(2, &e2) + &e1),
        -(kx(5, &e2) + kx(5, &e3) + kx(3, &e1) - big(1)),
        -(kx(3, &e2) + kx(3, &e1) - big(3)),
        -(&e1 - big(3)),
        big(1),
    ];
    FamilyPolynomial {
        kind: FamilyKind::G4,
        params: vec![n1, n2, n3],
        poly: IntPoly::from_coeffs(coeffs),
    }
}

/// The printed quintic h_{n₁,n₂,n₃,n₄} for r = 4, written in terms of the
/// elementary symmetric functions of the four sizes.
pub fn poly_h(n1: u64, n2: u64, n3: u64, n4: u64) -> FamilyPolynomial {
    assert!(
        n1 >= 1 && n2 >= 1 && n3 >= 1 && n4 >= 1,
        "clique sizes must be positive"
    );
    let v = [big(n1), big(n2), big(n3), big(n4)];
    let mut e1 = BigInt::from(0);
    let mut e2 = BigInt::from(0);
    let mut e3 = BigInt::from(0);
    for i in 0..4 {
        e1 += &v[i];
        for j in i + 1..4 {
            e2 += &v[i] * &v[j];
            for k in j + 1..4 {
                e3 += &v[i] * &v[j] * &v[k];
            }
        }
    }
    let e4 = &v[0] * &v[1] * &v[2] * &v[3];
    let coeffs = vec![
        -(kx(4, &e4) + kx(3, &e3) + kx(2, &e2) + &e1),
        -(kx(7, &e4) + kx(8, &e3) + kx(7, &e2) + kx(4, &e1) - big(1)),
        -(kx(5, &e3) + kx(8, &e2) + kx(6, &e1) - big(4)),
        -(kx(3, &e2) + kx(4, &e1) - big(6)),
        -(&e1 - big(4)),
        big(1),
    ];
    FamilyPolynomial {
        kind: FamilyKind::H,
        params: vec![n1, n2, n3, n4],
        poly: IntPoly::from_coeffs(coeffs),
    }
}

/// Quartic r with h_{1,1,n₃,n₄} = (λ+2)·r; r(−1) = 3n₃n₄.
pub fn poly_r(n3: u64, n4: u64) -> FamilyPolynomial {
    assert!(n3 >= 1 && n4 >= 1, "clique sizes must be positive");
    let prod = big(n3) * big(n4);
    let sum = big(n3) + big(n4);
    let coeffs = vec![
        -(kx(6, &prod) + kx(4, &sum) + big(2)),
        -(kx(12, &prod) + kx(11, &sum) + big(6)),
        -(kx(3, &prod) + kx(8, &sum) + big(5)),
        -sum,
        big(1),
    ];
    FamilyPolynomial {
        kind: FamilyKind::R,
        params: vec![n3, n4],
        poly: IntPoly::from_coeffs(coeffs),
    }
}

/// Quartic s with h_{1,2,2,n₄} = (λ+3)·s; s(−1) = 6n₄.
pub fn poly_s(n4: u64) -> FamilyPolynomial {
    assert!(n4 >= 1, "clique sizes must be positive");
    let n4b = big(n4);
    let coeffs = vec![
        -(kx(17, &n4b) + big(11)),
        -(kx(38, &n4b) + big(32)),
        -(kx(16, &n4b) + big(26)),
        -(&n4b + big(4)),
        big(1),
    ];
    FamilyPolynomial {
        kind: FamilyKind::S,
        params: vec![n4],
        poly: IntPoly::from_coeffs(coeffs),
    }
}

/// The family factor matching the spec's part count (f, g, or h).
pub fn family_polynomial(spec: &CliqueJoinSpec) -> FamilyPolynomial {
    let s = spec.sizes();
    match s.len() {
        2 => poly_f(s[0], s[1]),
        3 => poly_g(s[0], s[1], s[2]),
        4 => poly_h(s[0], s[1], s[2], s[3]),
        _ => unreachable!("spec validation bounds the length"),
    }
}

/// Exact rational value of the family polynomial at `t`.
pub fn eval_at(p: &FamilyPolynomial, t: &BigRational) -> BigRational {
    p.poly.eval_rational(t)
}

/// Builds the explicit graph K₁ ∨ (K_{n₁} ∪ … ∪ K_{n_r}), apex first.
pub fn build_graph(spec: &CliqueJoinSpec) -> Result<Graph> {
    let order = spec.order();
    if order > crate::graph::MAX_ORDER as u64 {
        return Err(Error::OrderTooLarge {
            requested: order,
            max: crate::graph::MAX_ORDER,
        });
    }
    let apex = Graph::complete(1)?;
    let mut parts: Option<Graph> = None;
    for &size in spec.sizes() {
        let clique = Graph::complete(size as usize)?;
        parts = Some(match parts {
            None => clique,
            Some(acc) => acc.disjoint_union(&clique)?,
        });
    }
    apex.join(&parts.expect("at least two parts"))
}

/// Verifies det(λI − D) = (λ+1)^(n−r−1) · family(λ) by exact polynomial
/// arithmetic on the built graph.
pub fn factorization_identity_check(spec: &CliqueJoinSpec) -> Result<bool> {
    let g = build_graph(spec)?;
    let cp = char_poly_exact(&g.distance_matrix()?);
    let fam = family_polynomial(spec);
    let expected = fam
        .poly
        .mul(&IntPoly::linear_power(1, spec.one_power() as usize));
    Ok(cp == expected)
}

//! Univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Everything here is exact: evaluation signs at rational points are decided
//! by homogenized integer arithmetic, divisions check divisibility, and the
//! square-free decomposition (Yun's algorithm, run over exact rationals) is
//! what allows root counting with multiplicity downstream.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Integer polynomial in ascending degree order with no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial c·x^deg.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// (x + a)^k, by repeated multiplication; k is small in practice.
    pub fn linear_power(a: i64, k: usize) -> IntPoly {
        let lin = IntPoly::from_i64(&[a, 1]);
        let mut out = IntPoly::one();
        for _ in 0..k {
            out = out.mul(&lin);
        }
        out
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(out)
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point, via the homogenized integer
    /// form Σ cᵢ aⁱ b^(d−i) with b > 0; no rational arithmetic.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let d = match self.degree() {
            None => return 0,
            Some(d) => d,
        };
        let a = x.numer();
        let b = x.denom(); // normalized positive
        let mut acc = self.coeffs[d].clone();
        let mut bp = BigInt::one();
        for i in (0..d).rev() {
            bp *= b;
            acc = acc * a + &self.coeffs[i] * &bp;
        }
        sign_i8(&acc)
    }

    pub fn sign_at_pos_infinity(&self) -> i8 {
        self.leading().map_or(0, sign_i8)
    }

    /// Exact division; None when the divisor does not divide self over ℤ.
    pub fn divide_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        let dlc = divisor.leading().unwrap();
        for k in (0..q.len()).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            let (qc, r) = c.div_rem(dlc);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate().take(dd) {
                rem[k + i] -= &qc * dc;
            }
            q[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// gcd of absolute coefficient values; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the (positive) content. Leading sign is preserved, so
    /// evaluation signs are unchanged everywhere.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_positive(&self) -> IntPoly {
        let p = self.primitive_part();
        match p.leading() {
            Some(l) if l.is_negative() => p.neg(),
            _ => p,
        }
    }

    /// Yun square-free decomposition: pairwise-coprime square-free primitive
    /// factors with their multiplicities, so that self = c · Π fᵢ^mᵢ.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        yun(&RatPoly::from_int(self))
            .into_iter()
            .map(|(f, m)| (f.to_primitive_int(), m))
            .collect()
    }

    /// Product of the distinct irreducible factors, without multiplicity.
    pub fn square_free_part(&self) -> IntPoly {
        let mut out = IntPoly::one();
        for (f, _) in self.square_free_decomposition() {
            out = out.mul(&f);
        }
        out
    }

    /// Primitive gcd over ℤ (computed over ℚ), with positive leading sign.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        rat_gcd(&RatPoly::from_int(self), &RatPoly::from_int(other)).to_primitive_int()
    }
}

fn sign_i8(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Rational-coefficient working form used by gcd and Yun. Internal only.
#[derive(Clone, PartialEq)]
pub(crate) struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn trim(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub(crate) fn from_int(p: &IntPoly) -> Self {
        RatPoly {
            coeffs: p
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn monic(&self) -> RatPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => RatPoly {
                coeffs: self.coeffs.iter().map(|c| c / l).collect(),
            },
        }
    }

    fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly { coeffs: Vec::new() };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        RatPoly::trim(coeffs)
    }

    fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..n)
            .map(|i| {
                self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero)
            })
            .collect();
        RatPoly::trim(coeffs)
    }

    /// Remainder of self by a nonzero divisor.
    pub(crate) fn rem_for_sturm(&self, divisor: &RatPoly) -> RatPoly {
        self.rem(divisor)
    }

    /// Remainder of self by a nonzero divisor.
    fn rem(&self, divisor: &RatPoly) -> RatPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dlc = divisor.coeffs.last().unwrap();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let f = r.last().unwrap() / dlc;
            if !f.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate().take(dd) {
                    r[k + i] = &r[k + i] - &f * dc;
                }
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        RatPoly { coeffs: r }
    }

    /// Exact quotient; panics if the division leaves a remainder (callers
    /// only divide by known factors).
    fn div_exact(&self, divisor: &RatPoly) -> RatPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return RatPoly { coeffs: Vec::new() };
        }
        let sd = self.degree().unwrap();
        assert!(sd >= dd, "inexact polynomial division");
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); sd - dd + 1];
        let dlc = divisor.coeffs.last().unwrap();
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] / dlc;
            if !f.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    r[k + i] = &r[k + i] - &f * dc;
                }
            }
            q[k] = f;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        RatPoly::trim(q)
    }

    /// Clears denominators and removes integer content; sign of the leading
    /// coefficient is forced positive.
    pub(crate) fn to_primitive_int(&self) -> IntPoly {
        self.to_primitive_int_signed().primitive_positive()
    }

    /// Clears denominators and removes integer content while preserving the
    /// sign everywhere — only positive scale factors are applied, which is
    /// what Sturm chain elements require.
    pub(crate) fn to_primitive_int_signed(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::from_coeffs(ints).primitive_part()
    }
}

/// Monic gcd over ℚ by the Euclidean algorithm.
fn rat_gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Yun's square-free decomposition over ℚ; factors come out monic.
fn yun(p: &RatPoly) -> Vec<(RatPoly, usize)> {
    let p = p.monic();
    let dp = p.derivative();
    let g = rat_gcd(&p, &dp);
    if g.degree() == Some(0) {
        return vec![(p, 1)];
    }
    let mut out = Vec::new();
    let mut w = p.div_exact(&g);
    let y = dp.div_exact(&g);
    let mut z = y.sub(&w.derivative());
    let mut mult = 1usize;
    while w.degree().unwrap_or(0) > 0 {
        let gi = rat_gcd(&w, &z);
        if gi.degree().unwrap_or(0) > 0 {
            out.push((gi.clone(), mult));
        }
        w = w.div_exact(&gi);
        let y = z.div_exact(&gi);
        z = y.sub(&w.derivative());
        mult += 1;
    }
    out
}

//! Exact rational scalars: the classification threshold, string parsing,
//! and decimal rendering with explicit rounding modes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The classification threshold −0.5858 as the exact rational −2929/5000.
///
/// The decimal in the theorem statement is treated as an exact number, not
/// as an approximation of √2 − 2 (the proof compares the two as distinct
/// values).
pub fn lambda2_threshold() -> BigRational {
    BigRational::new(BigInt::from(-2929), BigInt::from(5000))
}

/// Rounding mode for decimal rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Floor,
    Ceil,
    /// Ties round away from zero.
    HalfAwayFromZero,
}

/// Parses an exact rational from `p/q`, an integer literal, or a decimal
/// literal with optional exponent (`-0.5858`, `1e-9`). No floating-point
/// intermediate is involved.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InvalidParameter("empty rational literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad numerator in {s:?}")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        return Ok(BigRational::new(n, d));
    }
    parse_decimal(s)
}

fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParameter(format!("bad rational literal {s:?}"));
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e.parse().map_err(|_| bad())?;
            (m, exp)
        }
        None => (s, 0i64),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let joined = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if joined.is_empty() {
        BigInt::zero()
    } else {
        joined.parse().map_err(|_| bad())?
    };
    numer *= BigInt::from(sign);
    let shift = exp - frac_part.len() as i64;
    let base = BigInt::from(10);
    if shift >= 0 {
        Ok(BigRational::from_integer(numer * base.pow(shift as u32)))
    } else {
        Ok(BigRational::new(numer, base.pow((-shift) as u32)))
    }
}

/// Renders `q` with exactly `digits` decimal places under the given mode.
pub fn decimal_string(q: &BigRational, digits: usize, mode: Rounding) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = q * BigRational::from_integer(scale);
    let n: BigInt = match mode {
        Rounding::Floor => scaled.floor().to_integer(),
        Rounding::Ceil => scaled.ceil().to_integer(),
        Rounding::HalfAwayFromZero => {
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            if scaled.is_negative() {
                (scaled - half).ceil().to_integer()
            } else {
                (scaled + half).floor().to_integer()
            }
        }
    };
    if digits == 0 {
        return n.to_string();
    }
    let neg = n.is_negative();
    let abs = n.magnitude().to_string();
    let (int_part, frac_part) = if abs.len() > digits {
        let split = abs.len() - digits;
        (abs[..split].to_string(), abs[split..].to_string())
    } else {
        ("0".to_string(), format!("{abs:0>digits$}"))
    };
    format!("{}{int_part}.{frac_part}", if neg { "-" } else { "" })
}

/// Exact string form of a rational: `n` when integral, otherwise `n/d`.
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Number of decimal places in a printed literal such as `-0.58582`.
pub fn printed_decimals(s: &str) -> usize {
    match s.split_once('.') {
        Some((_, frac)) => frac.chars().take_while(|c| c.is_ascii_digit()).count(),
        None => 0,
    }
}

/// Distance from `q` to the nearest rounding boundary of a `digits`-place
/// rendering, i.e. to the nearest odd multiple of 10^−digits / 2.
pub fn distance_to_rounding_boundary(q: &BigRational, digits: usize) -> BigRational {
    let scale = BigRational::from_integer(BigInt::from(10).pow(digits as u32));
    let scaled = q * &scale;
    let frac = &scaled - scaled.floor();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let dist = (frac - half).abs();
    dist / scale
}

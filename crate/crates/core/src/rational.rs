//! Exact rational helpers shared by every module.
//!
//! Everything that decides a case (thresholds, signs, ranks) runs on
//! [`Q`]. Square roots only show up in output geometry, where they are kept
//! symbolic ([`SqrtQ`], [`QuadSurd`]) and converted to `f64` at the edge.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;

/// Exact rational number.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &Q) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Canonical "p/q" (or "p" for integers) string.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses an integer, a finite decimal (`-0.125`, `1e-3`) or a fraction
/// `p/q` into an exact rational. Decimals never pass through `f64`.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_q(n)?;
        let d = parse_q(d)?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(n / d);
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i32 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit()) || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let all = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str(if all.is_empty() { "0" } else { &all }).map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut v = if scale >= 0 {
        Q::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Q::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        v = -v;
    }
    Ok(v)
}

/// Smallest rational with denominator `den` that is `>= x`.
pub fn ceil_to(x: f64, den: i64) -> Q {
    let n = (x * den as f64).ceil() as i64;
    qf(n, den)
}

/// `multiplier * sqrt(radicand)` with rational parts, radicand >= 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqrtQ {
    pub multiplier: Q,
    pub radicand: Q,
}

impl SqrtQ {
    pub fn sqrt_of(radicand: Q) -> Self {
        debug_assert!(!radicand.is_negative());
        SqrtQ { multiplier: Q::one(), radicand }
    }

    pub fn zero() -> Self {
        SqrtQ { multiplier: Q::zero(), radicand: Q::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.multiplier.is_zero() || self.radicand.is_zero()
    }

    /// Exact square of the value.
    pub fn square(&self) -> Q {
        &self.multiplier * &self.multiplier * &self.radicand
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.multiplier) * to_f64(&self.radicand).sqrt()
    }
}

impl fmt::Display for SqrtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.radicand.is_one() {
            return write!(f, "{}", fmt_q(&self.multiplier));
        }
        if self.multiplier.is_one() {
            write!(f, "sqrt({})", fmt_q(&self.radicand))
        } else {
            write!(f, "{}*sqrt({})", fmt_q(&self.multiplier), fmt_q(&self.radicand))
        }
    }
}

impl Serialize for SqrtQ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SqrtQ", 4)?;
        st.serialize_field("exact", &self.to_string())?;
        st.serialize_field("multiplier", &fmt_q(&self.multiplier))?;
        st.serialize_field("radicand", &fmt_q(&self.radicand))?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

/// `rational + coeff * sqrt(radicand)`; the roots of a rational quadratic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadSurd {
    pub rational: Q,
    pub coeff: Q,
    pub radicand: Q,
}

impl QuadSurd {
    pub fn from_q(x: Q) -> Self {
        QuadSurd { rational: x, coeff: Q::zero(), radicand: Q::zero() }
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero() || self.radicand.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.is_rational().then_some(&self.rational)
    }

    /// Exact sign.
    pub fn sign(&self) -> i8 {
        let a = sign(&self.rational);
        let b = if self.radicand.is_zero() { 0 } else { sign(&self.coeff) };
        if b == 0 {
            return a;
        }
        if a == 0 || a == b {
            return if a == 0 { b } else { a };
        }
        // opposite signs: compare a^2 with b^2 r
        let lhs = &self.rational * &self.rational;
        let rhs = &self.coeff * &self.coeff * &self.radicand;
        match lhs.cmp(&rhs) {
            Ordering::Greater => a,
            Ordering::Less => b,
            Ordering::Equal => 0,
        }
    }

    /// Evaluates `a x^2 + b x + c` at this value, exactly.
    pub fn eval_quadratic(&self, a: &Q, b: &Q, c: &Q) -> QuadSurd {
        // x = p + q sqrt(r);  x^2 = p^2 + q^2 r + 2pq sqrt(r)
        let (p, qq, r) = (&self.rational, &self.coeff, &self.radicand);
        let x2_rat = p * p + qq * qq * r;
        let x2_irr = Q::from_integer(BigInt::from(2)) * p * qq;
        QuadSurd {
            rational: a * x2_rat + b * p + c,
            coeff: a * x2_irr + b * qq,
            radicand: r.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rational) + to_f64(&self.coeff) * to_f64(&self.radicand).sqrt()
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", fmt_q(&self.rational));
        }
        let sgn = if self.coeff.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{} {} {}*sqrt({})",
            fmt_q(&self.rational),
            sgn,
            fmt_q(&self.coeff.abs()),
            fmt_q(&self.radicand)
        )
    }
}

/// A radius given by its exact square, `sqrt(value_sq)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Radius {
    pub squared: QuadSurd,
}

impl Radius {
    pub fn to_f64(&self) -> f64 {
        self.squared.to_f64().max(0.0).sqrt()
    }
}

impl Serialize for Radius {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Radius", 2)?;
        st.serialize_field("exact", &format!("sqrt({})", self.squared))?;
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

/// Serializes a rational as `{"exact": "p/q", "approx": f64}`.
pub fn ser_q<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Q", 2)?;
    st.serialize_field("exact", &fmt_q(x))?;
    st.serialize_field("approx", &to_f64(x))?;
    st.end()
}

pub fn ser_opt_q<S: Serializer>(x: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => ser_q(v, s),
        None => s.serialize_none(),
    }
}

/// Real roots of `a x^2 + b x + c`, ascending and deduplicated. The
/// identically zero polynomial yields no roots.
pub fn quadratic_roots(a: &Q, b: &Q, c: &Q) -> Vec<QuadSurd> {
    if a.is_zero() {
        if b.is_zero() {
            return Vec::new();
        }
        return vec![QuadSurd::from_q(-c / b)];
    }
    let disc = b * b - q(4) * a * c;
    let two_a = q(2) * a;
    match sign(&disc) {
        -1 => Vec::new(),
        0 => vec![QuadSurd::from_q(-b / &two_a)],
        _ => {
            let base = -b / &two_a;
            let step = Q::one() / &two_a;
            let (lo, hi) = if step.is_positive() {
                (-step.clone(), step)
            } else {
                (step.clone(), -step)
            };
            let mk = |coeff: Q| simplify_surd(QuadSurd { rational: base.clone(), coeff, radicand: disc.clone() });
            vec![mk(lo), mk(hi)]
        }
    }
}

/// Folds a perfect-square radicand into the rational part.
fn simplify_surd(s: QuadSurd) -> QuadSurd {
    if let Some(root) = rational_sqrt(&s.radicand) {
        QuadSurd::from_q(s.rational + s.coeff * root)
    } else {
        s
    }
}

/// Exact square root when `x` is the square of a rational.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(parse_q("0.25").unwrap(), qf(1, 4));
        assert_eq!(parse_q("-1.5").unwrap(), qf(-3, 2));
        assert_eq!(parse_q("3/4").unwrap(), qf(3, 4));
        assert_eq!(parse_q("-2").unwrap(), q(-2));
        assert_eq!(parse_q("1e-3").unwrap(), qf(1, 1000));
        assert_eq!(parse_q(".5").unwrap(), qf(1, 2));
        assert_eq!(parse_q("0.1").unwrap(), qf(1, 10));
        assert!(parse_q("abc").is_err());
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("").is_err());
    }

    #[test]
    fn surd_sign_is_exact() {
        // 1 - sqrt(2) < 0, 3/2 - sqrt(2) > 0, 2 - sqrt(4) = 0
        let s = |p, c, r| QuadSurd { rational: q(p), coeff: q(c), radicand: q(r) };
        assert_eq!(s(1, 1, 2).sign(), 1);
        assert_eq!(s(1, -1, 2).sign(), -1);
        assert_eq!(QuadSurd { rational: qf(3, 2), coeff: q(-1), radicand: q(2) }.sign(), 1);
        assert_eq!(s(2, -1, 4).sign(), 0);
    }

    #[test]
    fn quadratic_roots_cover_degenerate_inputs() {
        let r = quadratic_roots(&q(1), &q(-3), &q(2));
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].as_rational(), Some(&q(1)));
        assert_eq!(r[1].as_rational(), Some(&q(2)));
        assert_eq!(quadratic_roots(&q(1), &q(-2), &q(1)).len(), 1);
        assert!(quadratic_roots(&q(0), &q(0), &q(1)).is_empty());
        let lin = quadratic_roots(&q(0), &q(2), &q(1));
        assert_eq!(lin[0].as_rational(), Some(&qf(-1, 2)));
        let irr = quadratic_roots(&q(-1), &q(0), &q(2));
        assert!((irr[0].to_f64() + 2f64.sqrt()).abs() < 1e-15);
        assert!((irr[1].to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }
}

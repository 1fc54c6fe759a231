//! Numeric values carried through lattice computations.
//!
//! A [`Number`] is either an exact rational, a double, or a complex double.
//! Arithmetic between exact values stays exact; anything touching a float is
//! demoted to float, and anything touching a complex value is promoted to
//! complex. Real inputs never produce a complex result implicitly: only
//! [`Number::powc`] with an explicitly complex base (or a complex exponent)
//! does that.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Result, UmbraError};

/// Largest decimal exponent accepted as an exact literal by the parser.
const MAX_EXACT_EXPONENT: i64 = 1000;
/// Longest literal the parser will look at.
const MAX_LITERAL_LEN: usize = 4096;

#[derive(Clone, Debug, PartialEq)]
pub enum Number {
    Exact(BigRational),
    Real(f64),
    Complex(Complex64),
}

impl Number {
    pub fn int(n: i64) -> Self {
        Number::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Number::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn real(x: f64) -> Self {
        Number::Real(x)
    }

    pub fn complex(re: f64, im: f64) -> Self {
        Number::Complex(Complex64::new(re, im))
    }

    pub fn zero() -> Self {
        Number::int(0)
    }

    pub fn one() -> Self {
        Number::int(1)
    }

    /// Exact rational with the same value as a finite double.
    pub fn exact_from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Number::Exact)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Number::Exact(_))
    }

    pub fn is_complex(&self) -> bool {
        matches!(self, Number::Complex(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Number::Exact(q) => q.is_zero(),
            Number::Real(x) => *x == 0.0,
            Number::Complex(z) => z.re == 0.0 && z.im == 0.0,
        }
    }

    /// Real part as a double.
    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(q) => rational_to_f64(q),
            Number::Real(x) => *x,
            Number::Complex(z) => z.re,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Number::Complex(z) => *z,
            other => Complex64::new(other.to_f64(), 0.0),
        }
    }

    /// The value as a real double, or `None` for a complex number with a
    /// nonzero imaginary part.
    pub fn as_real(&self) -> Option<f64> {
        match self {
            Number::Complex(z) if z.im != 0.0 => None,
            other => Some(other.to_f64()),
        }
    }

    /// Demote to floating point, keeping complex values complex.
    pub fn to_float(&self) -> Number {
        match self {
            Number::Exact(q) => Number::Real(rational_to_f64(q)),
            other => other.clone(),
        }
    }

    /// The value as an `i64` when it is an integer (exactly, or as a real
    /// double with no fractional part).
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Number::Exact(q) if q.is_integer() => q.to_integer().to_i64(),
            Number::Exact(_) => None,
            Number::Real(x) => float_as_integer(*x),
            Number::Complex(z) if z.im == 0.0 => float_as_integer(z.re),
            Number::Complex(_) => None,
        }
    }

    /// `Some(n)` when the value is the nonpositive integer `-n`.
    pub fn nonpositive_integer(&self) -> Option<u64> {
        self.as_integer().filter(|&k| k <= 0).map(|k| k.unsigned_abs())
    }

    /// `Some(n)` when the value is the nonnegative integer `n`.
    pub fn nonnegative_integer(&self) -> Option<u64> {
        self.as_integer().filter(|&k| k >= 0).map(|k| k as u64)
    }

    /// Magnitude as a double.
    pub fn abs(&self) -> f64 {
        match self {
            Number::Exact(q) => rational_to_f64(&q.abs()),
            Number::Real(x) => x.abs(),
            Number::Complex(z) => z.norm(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Number> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Number::Exact(q) => Number::Exact(q.recip()),
            Number::Real(x) => Number::Real(1.0 / x),
            Number::Complex(z) => Number::Complex(z.inv()),
        })
    }

    pub fn checked_div(&self, rhs: &Number) -> Option<Number> {
        rhs.recip().map(|r| self * &r)
    }

    /// Integer power by repeated squaring; exact for exact values.
    /// `None` for a negative power of zero.
    pub fn powi(&self, n: i64) -> Option<Number> {
        if n < 0 {
            return self.recip().and_then(|r| r.powi(-n));
        }
        let mut base = self.clone();
        let mut acc = Number::one();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Some(acc)
    }

    /// Principal-branch power `self^exponent`.
    ///
    /// Integer exponents go through [`Number::powi`] (exact for exact bases).
    /// Otherwise a real positive base gives a real result, a real base on
    /// `(-inf, 0]` is rejected as a branch-cut error, and complex bases use
    /// `exp(exponent * Log(base))`.
    pub fn powc(&self, exponent: &Number) -> Result<Number> {
        if let Some(k) = exponent.as_integer() {
            if !exponent.is_complex() || exponent.to_complex().im == 0.0 {
                return self.powi(k).ok_or(UmbraError::pole("zero to a negative power"));
            }
        }
        match (self, exponent) {
            (_, Number::Complex(e)) => {
                let b = self.to_complex();
                if b.im == 0.0 && b.re <= 0.0 {
                    return Err(UmbraError::BranchCut { what: "complex power" });
                }
                Ok(Number::Complex((e * b.ln()).exp()))
            }
            (Number::Complex(b), e) => {
                if b.im == 0.0 && b.re <= 0.0 {
                    return Err(UmbraError::BranchCut { what: "complex power" });
                }
                Ok(Number::Complex(b.powf(e.to_f64())))
            }
            (b, e) => {
                let (b, e) = (b.to_f64(), e.to_f64());
                if b <= 0.0 {
                    return Err(UmbraError::BranchCut { what: "real power" });
                }
                Ok(Number::Real(b.powf(e)))
            }
        }
    }
}

fn float_as_integer(x: f64) -> Option<i64> {
    if x.is_finite() && x.fract() == 0.0 && x.abs() < 9.0e15 {
        Some(x as i64)
    } else {
        None
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    if let Some(x) = q.to_f64() {
        if x.is_finite() && (x != 0.0 || q.is_zero()) {
            return x;
        }
    }
    // Scale numerator and denominator down to the same bit width so very
    // large exact values do not overflow to inf/inf.
    let (n, d) = (q.numer(), q.denom());
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

impl From<i64> for Number {
    fn from(n: i64) -> Self {
        Number::int(n)
    }
}

impl From<f64> for Number {
    fn from(x: f64) -> Self {
        Number::Real(x)
    }
}

impl From<Complex64> for Number {
    fn from(z: Complex64) -> Self {
        Number::Complex(z)
    }
}

impl From<BigRational> for Number {
    fn from(q: BigRational) -> Self {
        Number::Exact(q)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Number> for &Number {
            type Output = Number;
            fn $method(self, rhs: &Number) -> Number {
                match (self, rhs) {
                    (Number::Exact(a), Number::Exact(b)) => Number::Exact(a $op b),
                    (Number::Complex(_), _) | (_, Number::Complex(_)) => {
                        Number::Complex(self.to_complex() $op rhs.to_complex())
                    }
                    _ => Number::Real(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $trait<Number> for Number {
            type Output = Number;
            fn $method(self, rhs: Number) -> Number {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Number> for Number {
            type Output = Number;
            fn $method(self, rhs: &Number) -> Number {
                (&self).$method(rhs)
            }
        }
        impl $trait<Number> for &Number {
            type Output = Number;
            fn $method(self, rhs: Number) -> Number {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

// Division panics on an exact zero divisor, like `BigRational`. Callers that
// can meet a pole use `checked_div`.
binop!(Div, div, /);

impl Neg for &Number {
    type Output = Number;
    fn neg(self) -> Number {
        match self {
            Number::Exact(q) => Number::Exact(-q),
            Number::Real(x) => Number::Real(-x),
            Number::Complex(z) => Number::Complex(-z),
        }
    }
}

impl Neg for Number {
    type Output = Number;
    fn neg(self) -> Number {
        -&self
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Number::Exact(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Number::Real(x) => write!(f, "{x:?}"),
            Number::Complex(z) if z.im < 0.0 || z.im.is_sign_negative() => {
                write!(f, "{:?}-{:?}i", z.re, -z.im)
            }
            Number::Complex(z) => write!(f, "{:?}+{:?}i", z.re, z.im),
        }
    }
}

/// Parses `p`, `p/q`, decimals such as `0.25` or `-1.5e-3`.
///
/// Integers, fractions and decimal literals become exact rationals.
/// Literals with an exponent beyond ±1000 fall back to a double.
impl FromStr for Number {
    type Err = UmbraError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(UmbraError::Parse("empty number".into()));
        }
        if s.len() > MAX_LITERAL_LEN {
            return Err(UmbraError::Parse("number literal too long".into()));
        }
        if let Some((n, d)) = s.split_once('/') {
            let n = parse_decimal(n)?;
            let d = parse_decimal(d)?;
            return match (n, d) {
                (Number::Exact(n), Number::Exact(d)) => {
                    if d.is_zero() {
                        Err(UmbraError::Parse("zero denominator".into()))
                    } else {
                        Ok(Number::Exact(n / d))
                    }
                }
                (n, d) => {
                    let v = n.to_f64() / d.to_f64();
                    if v.is_finite() {
                        Ok(Number::Real(v))
                    } else {
                        Err(UmbraError::Parse("non-finite fraction".into()))
                    }
                }
            };
        }
        parse_decimal(s)
    }
}

fn parse_decimal(s: &str) -> Result<Number> {
    let s = s.trim();
    let bad = || UmbraError::Parse(format!("invalid number literal {s:?}"));
    let (neg, body) = match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], Some(&body[i + 1..])),
        None => (body, None),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
    if int_part.is_empty() && frac_part.is_empty() || !digits_ok(int_part) || !digits_ok(frac_part) {
        return Err(bad());
    }
    let exp: i64 = match exponent {
        None => 0,
        Some(e) => {
            let digits = e.strip_prefix(['+', '-']).unwrap_or(e);
            if digits.is_empty() || !digits_ok(digits) {
                return Err(bad());
            }
            // Saturate absurd exponents; they take the float path below.
            e.parse::<i64>()
                .unwrap_or(if e.starts_with('-') { i64::MIN / 2 } else { i64::MAX / 2 })
        }
    };
    let scale = exp.saturating_sub(frac_part.len() as i64);
    if scale.abs() > MAX_EXACT_EXPONENT {
        let v: f64 = s.parse().map_err(|_| bad())?;
        return if v.is_finite() {
            Ok(Number::Real(v))
        } else {
            Err(UmbraError::Parse(format!("number {s:?} overflows")))
        };
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut n: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().map_err(|_| bad())?
    };
    if neg {
        n = -n;
    }
    let ten = BigInt::from(10);
    let q = if scale >= 0 {
        BigRational::from_integer(n * num::pow(ten, scale as usize))
    } else {
        BigRational::new(n, num::pow(ten, (-scale) as usize))
    };
    Ok(Number::Exact(q))
}

/// Serialized as a string so exact rationals survive a round trip.
impl Serialize for Number {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Number::Real(x) if x.is_finite() => {
                // Keep floats visibly floats after a round trip.
                let s = format!("{x:?}");
                serializer.serialize_str(&s)
            }
            other => serializer.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Number {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Float(f64),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(n) => Ok(Number::int(n)),
            Repr::Float(x) => Ok(Number::Real(x)),
            Repr::Text(s) => parse_tagged(&s).map_err(serde::de::Error::custom),
        }
    }
}

/// Inverse of `Display`: floats print with a `.` or exponent, so
/// `"0.5"` written by `Display` for `Real(0.5)` reads back as a float.
fn parse_tagged(s: &str) -> Result<Number> {
    let t = s.trim();
    if let Some(body) = t.strip_suffix('i') {
        // "re+imi" / "re-imi"
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(i, c)| (c == '+' || c == '-') && !matches!(body.as_bytes()[i - 1], b'e' | b'E'))
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| UmbraError::Parse(format!("invalid complex literal {s:?}")))?;
        let re: f64 = body[..split]
            .parse()
            .map_err(|_| UmbraError::Parse(format!("invalid complex literal {s:?}")))?;
        let im: f64 = body[split..]
            .parse()
            .map_err(|_| UmbraError::Parse(format!("invalid complex literal {s:?}")))?;
        return Ok(Number::complex(re, im));
    }
    let looks_float = t.contains(['.', 'e', 'E']) && !t.contains('/') || t.contains("inf") || t.contains("NaN");
    if looks_float {
        let v: f64 = t
            .parse()
            .map_err(|_| UmbraError::Parse(format!("invalid float literal {s:?}")))?;
        return Ok(Number::Real(v));
    }
    t.parse()
}

impl Zero for Number {
    fn zero() -> Self {
        Number::int(0)
    }
    fn is_zero(&self) -> bool {
        Number::is_zero(self)
    }
}

impl One for Number {
    fn one() -> Self {
        Number::int(1)
    }
}

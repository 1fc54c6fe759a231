//! Text parsers for command-line values: ranges, parameter lists, complex
//! literals.

use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Result, UmbraError};
use crate::umbral_core::Number;

/// Most points a single range may expand to.
pub const MAX_POINTS: usize = 1_000_000;

/// `start:stop[:count]`, or a single value.
///
/// With a count the points are equally spaced and include both ends;
/// without one they step by the lattice spacing from `start` up to `stop`.
#[derive(Clone, Debug, PartialEq)]
pub struct RangeSpec {
    pub start: Number,
    pub stop: Number,
    pub count: Option<usize>,
}

impl RangeSpec {
    pub fn single(v: Number) -> Self {
        RangeSpec {
            start: v.clone(),
            stop: v,
            count: Some(1),
        }
    }

    pub fn points(&self, step: &Number) -> Result<Vec<Number>> {
        let span = &self.stop - &self.start;
        if span.to_f64() < 0.0 {
            return Err(UmbraError::Parse(format!("range {self} runs backwards")));
        }
        if let Some(count) = self.count {
            if count == 1 {
                return Ok(vec![self.start.clone()]);
            }
            let gaps = Number::int(count as i64 - 1);
            return Ok((0..count)
                .map(|i| &self.start + &(&(&span * &Number::int(i as i64)) / &gaps))
                .collect());
        }
        let h = step.to_f64();
        if !(h > 0.0) {
            return Err(UmbraError::Parse(format!("range step must be positive, got {step}")));
        }
        let n = (span.to_f64() / h * (1.0 + 1e-12)).floor();
        if !(n.is_finite() && n < MAX_POINTS as f64) {
            return Err(UmbraError::Parse(format!("range {self} has too many points")));
        }
        Ok((0..=n as i64)
            .map(|i| &self.start + &(&Number::int(i) * step))
            .collect())
    }

    /// Integer points with unit step (or the given count).
    pub fn integers(&self) -> Result<Vec<i64>> {
        self.points(&Number::one())?
            .iter()
            .map(|v| {
                v.as_integer()
                    .filter(|_| !v.is_complex())
                    .ok_or_else(|| UmbraError::Parse(format!("range {self} must produce integers, got {v}")))
            })
            .collect()
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.count {
            Some(1) if self.start == self.stop => write!(f, "{}", self.start),
            Some(c) => write!(f, "{}:{}:{c}", self.start, self.stop),
            None => write!(f, "{}:{}", self.start, self.stop),
        }
    }
}

fn real_literal(s: &str) -> Result<Number> {
    let v: Number = s.parse()?;
    if v.is_complex() {
        return Err(UmbraError::Parse(format!("expected a real number, got {s:?}")));
    }
    Ok(v)
}

impl FromStr for RangeSpec {
    type Err = UmbraError;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            [v] => Ok(RangeSpec::single(real_literal(v)?)),
            [a, b] => Ok(RangeSpec {
                start: real_literal(a)?,
                stop: real_literal(b)?,
                count: None,
            }),
            [a, b, c] => {
                let count: usize = c
                    .trim()
                    .parse()
                    .map_err(|_| UmbraError::Parse(format!("invalid point count {c:?}")))?;
                if count == 0 || count > MAX_POINTS {
                    return Err(UmbraError::Parse(format!("point count must be in 1..={MAX_POINTS}")));
                }
                Ok(RangeSpec {
                    start: real_literal(a)?,
                    stop: real_literal(b)?,
                    count: Some(count),
                })
            }
            _ => Err(UmbraError::Parse(format!(
                "invalid range {s:?}; expected start:stop[:count]"
            ))),
        }
    }
}

impl Serialize for RangeSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RangeSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Comma- or whitespace-separated number literals, optionally in brackets:
/// `"1/2, 3"`, `"[0.25 -1]"`, `""`.
pub fn parse_param_list(s: &str) -> Result<Vec<Number>> {
    let t = s.trim();
    let inner = match (t.chars().next(), t.chars().last()) {
        (Some('['), Some(']')) | (Some('('), Some(')')) if t.len() >= 2 => &t[1..t.len() - 1],
        _ => t,
    };
    inner
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect()
}

/// `re`, `re+imi`, `re-imi`, `imi`, `i`, `-i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t = s.trim();
    let bad = || UmbraError::Parse(format!("invalid complex literal {s:?}"));
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return Ok(Complex64::new(real_literal(t)?.to_f64(), 0.0));
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(i, c)| (c == '+' || c == '-') && !matches!(body.as_bytes()[i - 1], b'e' | b'E'))
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re = real_literal(re).map_err(|_| bad())?.to_f64();
    let im = real_literal(im).map_err(|_| bad())?.to_f64();
    Ok(Complex64::new(re, im))
}

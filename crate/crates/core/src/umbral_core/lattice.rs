use serde::{Deserialize, Serialize};

use super::Number;
use crate::error::{Result, UmbraError};

/// Spacing of a one-dimensional umbral lattice.
///
/// `new` accepts only positive spacings. `signed` also accepts negative
/// ones, which only the Airy quadrature and the gamma-continued powers use.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Lattice {
    spacing: Number,
}

impl Lattice {
    pub fn new(spacing: impl Into<Number>) -> Result<Self> {
        let spacing = spacing.into();
        let lat = Self::signed(spacing)?;
        if lat.spacing.to_f64() < 0.0 {
            return Err(UmbraError::Lattice("spacing must be positive".into()));
        }
        Ok(lat)
    }

    pub fn signed(spacing: impl Into<Number>) -> Result<Self> {
        let spacing = spacing.into();
        if spacing.is_complex() {
            return Err(UmbraError::Lattice("spacing must be real".into()));
        }
        let v = spacing.to_f64();
        if spacing.is_zero() || !v.is_finite() {
            return Err(UmbraError::Lattice(format!(
                "spacing {spacing} is not a finite nonzero value"
            )));
        }
        Ok(Lattice { spacing })
    }

    pub fn spacing(&self) -> &Number {
        &self.spacing
    }

    pub fn is_exact(&self) -> bool {
        self.spacing.is_exact()
    }

    /// `origin + j·a`.
    pub fn point(&self, origin: &Number, j: i64) -> Number {
        origin + &(&Number::int(j) * &self.spacing)
    }
}

/// Samples `F(origin + j·a)` for `j = 0..len`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    lattice: Lattice,
    origin: Number,
    samples: Vec<Number>,
}

impl GridFunction {
    pub fn new(lattice: Lattice, origin: Number, samples: Vec<Number>) -> Self {
        GridFunction {
            lattice,
            origin,
            samples,
        }
    }

    /// Samples `f` at `len` consecutive lattice points.
    pub fn sample<F>(lattice: Lattice, origin: Number, len: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&Number) -> Result<Number>,
    {
        let samples = (0..len as i64)
            .map(|j| f(&lattice.point(&origin, j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(GridFunction::new(lattice, origin, samples))
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn origin(&self) -> &Number {
        &self.origin
    }

    pub fn samples(&self) -> &[Number] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Lattice coordinate of sample `j`.
    pub fn point(&self, j: usize) -> Number {
        self.lattice.point(&self.origin, j as i64)
    }

    pub fn is_exact(&self) -> bool {
        self.lattice.is_exact() && self.origin.is_exact() && self.samples.iter().all(Number::is_exact)
    }

    /// Pointwise map keeping the lattice bookkeeping.
    pub fn map(&self, mut f: impl FnMut(&Number) -> Number) -> GridFunction {
        GridFunction::new(
            self.lattice.clone(),
            self.origin.clone(),
            self.samples.iter().map(&mut f).collect(),
        )
    }

    /// Drops the first `k` samples, moving the origin forward.
    pub fn shifted(&self, k: usize) -> GridFunction {
        let k = k.min(self.len());
        GridFunction::new(self.lattice.clone(), self.point(k), self.samples[k..].to_vec())
    }

    pub fn truncated(&self, len: usize) -> GridFunction {
        let len = len.min(self.len());
        GridFunction::new(self.lattice.clone(), self.origin.clone(), self.samples[..len].to_vec())
    }
}

/// `Δ^order F` with `ΔF(t) = (F(t+a) − F(t))/a`. The result has `order`
/// fewer samples and the same origin.
pub fn forward_difference(f: &GridFunction, order: usize) -> Result<GridFunction> {
    if f.len() < order + 1 {
        return Err(UmbraError::InsufficientSamples {
            needed: order + 1,
            available: f.len(),
        });
    }
    let inv_a = f
        .lattice
        .spacing()
        .recip()
        .ok_or_else(|| UmbraError::Lattice("zero spacing".into()))?;
    let mut samples = f.samples.clone();
    for _ in 0..order {
        samples = samples.windows(2).map(|w| &(&w[1] - &w[0]) * &inv_a).collect();
    }
    Ok(GridFunction::new(f.lattice.clone(), f.origin.clone(), samples))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_spacing() {
        assert!(Lattice::new(Number::zero()).is_err());
        assert!(Lattice::new(Number::int(-1)).is_err());
        assert!(Lattice::signed(Number::int(-1)).is_ok());
        assert!(Lattice::new(Number::real(f64::NAN)).is_err());
        assert!(Lattice::new(Number::complex(1.0, 1.0)).is_err());
        assert!(Lattice::new(Number::ratio(1, 2)).unwrap().is_exact());
    }

    #[test]
    fn difference_of_constant_vanishes() {
        let lat = Lattice::new(Number::ratio(1, 3)).unwrap();
        let g = GridFunction::new(lat, Number::zero(), vec![Number::int(5); 6]);
        let d = forward_difference(&g, 2).unwrap();
        assert_eq!(d.len(), 4);
        assert!(d.samples().iter().all(|s| *s == Number::zero()));
    }

    #[test]
    fn insufficient_samples() {
        let lat = Lattice::new(Number::int(1)).unwrap();
        let g = GridFunction::new(lat, Number::zero(), vec![Number::int(1); 2]);
        assert_eq!(
            forward_difference(&g, 2),
            Err(UmbraError::InsufficientSamples {
                needed: 3,
                available: 2
            })
        );
    }

    #[test]
    fn shifted_moves_origin() {
        let lat = Lattice::new(Number::ratio(1, 2)).unwrap();
        let g = GridFunction::new(lat, Number::int(1), (0..5).map(Number::int).collect());
        let s = g.shifted(2);
        assert_eq!(s.origin(), &Number::int(2));
        assert_eq!(s.samples()[0], Number::int(2));
    }
}

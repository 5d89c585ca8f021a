//! Truncated power series with exact closure at the truncation order.
//!
//! All arithmetic discards coefficients of degree above `trunc_order`; no
//! operation silently extends a series. Composition requires the inner
//! series to vanish at the origin.

use crate::coeff::Coeff;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("series is not invertible: linear coefficient is zero")]
    NonInvertible,
    #[error("inner series of a composition must have zero constant term")]
    ConstantTermNonzero,
    #[error("map is not parabolic: linear coefficient differs from 1")]
    NotParabolic,
    #[error("truncation order {have} too short; need at least {need}")]
    TruncationTooShort { have: usize, need: usize },
    #[error("tau is not a root of unity of order {0}")]
    NotRootOfUnity(usize),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("vector field must vanish at the origin")]
    NonVanishingField,
    #[error("Lie series did not terminate or converge within the term budget")]
    FlowDivergence,
    #[error("multiplier condition violated beyond tolerance: residual {0}")]
    MultiplierMismatch(f64),
}

/// Power series `c_0 + c_1 z + … + c_N z^N` truncated at order `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T: Coeff> {
    coeffs: Vec<T>,
}

pub type TruncatedSeries = Series<Complex64>;

impl<T: Coeff> Series<T> {
    /// Build from coefficients `c_0..=c_N`. Must be nonempty.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    /// The identity germ `z`, truncated at `order`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = T::one();
        }
        s
    }

    /// Monomial `c·z^k`.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: T) {
        assert!(k < self.coeffs.len());
        self.coeffs[k] = c;
    }

    /// Re-truncate to a (possibly lower) order.
    pub fn truncated(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.truncate(order + 1);
        c.resize(order + 1, T::zero());
        Series { coeffs: c }
    }

    /// Index of the lowest nonzero coefficient, if any.
    pub fn order_of_vanishing(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.trunc_order().min(other.trunc_order());
        let coeffs = (0..=n).map(|i| self.coeff(i).add(&other.coeff(i))).collect();
        Series { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.trunc_order().min(other.trunc_order());
        let coeffs = (0..=n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect();
        Series { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.trunc_order().min(other.trunc_order());
        let mut coeffs = vec![T::zero(); n + 1];
        for i in 0..=n {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let b = other.coeff(j);
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(&b));
            }
        }
        Series { coeffs }
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        let n = self.trunc_order();
        if n == 0 {
            return Self::zero(0);
        }
        let coeffs = (1..=n)
            .map(|i| self.coeff(i).mul(&T::from_i64(i as i64)))
            .collect();
        Series { coeffs }
    }

    /// `self ∘ g`; requires `g(0) = 0`.
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        if !g.coeff(0).is_zero() {
            return Err(SeriesError::ConstantTermNonzero);
        }
        let n = self.trunc_order().min(g.trunc_order());
        let g = g.truncated(n);
        // Horner over the outer coefficients.
        let mut acc = Series::monomial(self.coeff(n), 0, n);
        for i in (0..n).rev() {
            acc = acc.mul(&g);
            let c0 = acc.coeff(0).add(&self.coeff(i));
            acc.set_coeff(0, c0);
        }
        Ok(acc)
    }

    /// Multiplicative inverse: `g` with `self · g = 1` to the truncation
    /// order. Requires a nonzero constant term.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        let n = self.trunc_order();
        let mut g = Self::zero(n);
        g.set_coeff(0, T::one().div(&c0).unwrap());
        for m in 1..=n {
            let mut acc = T::zero();
            for j in 1..=m {
                acc = acc.add(&self.coeff(j).mul(&g.coeff(m - j)));
            }
            g.set_coeff(m, acc.neg().div(&c0).unwrap());
        }
        Ok(g)
    }

    /// Compositional inverse: `h` with `h(self(z)) = z` to the truncation order.
    /// Requires `c_0 = 0`, `c_1 ≠ 0`.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        if !self.coeff(0).is_zero() {
            return Err(SeriesError::ConstantTermNonzero);
        }
        let c1 = self.coeff(1);
        if c1.is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        let n = self.trunc_order();
        let mut h = Series::zero(n);
        h.set_coeff(1, T::one().div(&c1).unwrap());
        // Order-by-order correction: the degree-(m+1) defect of h∘f is killed
        // by adding δ z^{m+1} with δ·c_1^{m+1} = −defect.
        for m in 1..n {
            let defect = h.compose(self)?.coeff(m + 1);
            let pw = pow_coeff(&c1, m + 1);
            let delta = defect.neg().div(&pw).unwrap();
            h.set_coeff(m + 1, delta);
        }
        Ok(h)
    }
}

fn pow_coeff<T: Coeff>(c: &T, e: usize) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc.mul(c);
    }
    acc
}

impl Series<Complex64> {
    /// Evaluate by Horner's rule at a complex point.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Largest coefficient magnitude.
    pub fn sup_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Coefficient-wise distance to another series (up to the common order).
    pub fn distance(&self, other: &Self) -> f64 {
        let n = self.trunc_order().min(other.trunc_order());
        (0..=n)
            .map(|i| (self.coeff(i) - other.coeff(i)).norm())
            .fold(0.0, f64::max)
    }
}

/// JSON wire form: coefficients as `[re, im]` pairs plus the truncation order.
#[derive(Serialize, Deserialize)]
pub struct SeriesJson {
    pub coeffs: Vec<[f64; 2]>,
    pub trunc_order: usize,
}

impl From<&TruncatedSeries> for SeriesJson {
    fn from(s: &TruncatedSeries) -> Self {
        SeriesJson {
            coeffs: s.coeffs.iter().map(|c| [c.re, c.im]).collect(),
            trunc_order: s.trunc_order(),
        }
    }
}

impl TryFrom<SeriesJson> for TruncatedSeries {
    type Error = String;
    fn try_from(j: SeriesJson) -> Result<Self, String> {
        if j.coeffs.len() != j.trunc_order + 1 {
            return Err(format!(
                "coefficient count {} inconsistent with trunc_order {}",
                j.coeffs.len(),
                j.trunc_order
            ));
        }
        Ok(Series::new(
            j.coeffs.iter().map(|p| Complex64::new(p[0], p[1])).collect(),
        ))
    }
}

/// The operation selector for the generic series-algebra entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesOp {
    Add,
    Mul,
    Compose,
    Invert,
}

/// Dispatch on a pair of series; `Invert` ignores `g`.
pub fn series_algebra<T: Coeff>(
    f: &Series<T>,
    g: &Series<T>,
    op: SeriesOp,
) -> Result<Series<T>, SeriesError> {
    match op {
        SeriesOp::Add => Ok(f.add(g)),
        SeriesOp::Mul => Ok(f.mul(g)),
        SeriesOp::Compose => f.compose(g),
        SeriesOp::Invert => f.invert(),
    }
}

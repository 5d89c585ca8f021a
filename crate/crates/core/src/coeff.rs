//! Coefficient rings for truncated series arithmetic.
//!
//! Two coefficient types are supported: `Complex64` for floating-point
//! computations and [`EisRat`], the field of rationals extended by a
//! primitive cube root of unity. The latter lets identity checks involving
//! multipliers `exp(2πi p/q)` with `q ∈ {1,2,3,6}` run in exact arithmetic.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Field operations required of a series coefficient.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Division; `None` when dividing by zero.
    fn div(&self, other: &Self) -> Option<Self>
    where
        Self: Sized;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Rough magnitude, used only for convergence/termination heuristics.
    fn abs_est(&self) -> f64;
    /// Equality up to `tol` in magnitude; exact types ignore `tol`.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Option<Self> {
        if other.norm() == 0.0 {
            None
        } else {
            Some(self / other)
        }
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn abs_est(&self) -> f64 {
        self.norm()
    }
    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= tol
    }
}

/// Element `a + b·ω` of ℚ(ω), ω = e^{2πi/3}, with ω² = −1 − ω.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisRat {
    pub a: BigRational,
    pub b: BigRational,
}

impl EisRat {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        EisRat { a, b }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        EisRat {
            a: BigRational::new(BigInt::from(num), BigInt::from(den)),
            b: BigRational::zero(),
        }
    }

    /// The primitive cube root of unity ω.
    pub fn omega() -> Self {
        EisRat {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    /// A primitive root of unity of order `q` for `q ∈ {1, 2, 3, 6}`.
    pub fn root_of_unity(q: u32) -> Option<Self> {
        let one = Self::from_ratio(1, 1);
        match q {
            1 => Some(one),
            2 => Some(one.neg()),
            3 => Some(Self::omega()),
            // e^{2πi/6} = −ω² = 1 + ω
            6 => Some(EisRat {
                a: BigRational::one(),
                b: BigRational::one(),
            }),
            _ => None,
        }
    }

    /// `ζ^p` for `ζ = e^{2πi/q}`; `None` when q is unsupported.
    pub fn unit_power(p: i64, q: u32) -> Option<Self> {
        let zeta = Self::root_of_unity(q)?;
        let mut acc = Self::from_ratio(1, 1);
        let p = p.rem_euclid(q as i64);
        for _ in 0..p {
            acc = acc.mul(&zeta);
        }
        Some(acc)
    }

    /// Field norm a² − ab + b².
    fn field_norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn to_complex(&self) -> Complex64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        // ω = (−1 + i√3)/2
        Complex64::new(a - 0.5 * b, b * 3f64.sqrt() / 2.0)
    }
}

impl Coeff for EisRat {
    fn zero() -> Self {
        EisRat {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }
    fn one() -> Self {
        EisRat {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }
    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }
    fn add(&self, other: &Self) -> Self {
        EisRat {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        }
    }
    fn sub(&self, other: &Self) -> Self {
        EisRat {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        }
    }
    fn mul(&self, other: &Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = −1 − ω
        let ac = &self.a * &other.a;
        let ad_bc = &self.a * &other.b + &self.b * &other.a;
        let bd = &self.b * &other.b;
        EisRat {
            a: ac - &bd,
            b: ad_bc - bd,
        }
    }
    fn div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        // conjugate of c + dω is (c − d) − dω
        let conj = EisRat {
            a: &other.a - &other.b,
            b: -other.b.clone(),
        };
        let num = self.mul(&conj);
        let norm = other.field_norm();
        Some(EisRat {
            a: num.a / &norm,
            b: num.b / norm,
        })
    }
    fn neg(&self) -> Self {
        EisRat {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
    fn conj(&self) -> Self {
        // complex conjugate: ω̄ = ω² = −1 − ω
        EisRat {
            a: &self.a - &self.b,
            b: -self.b.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn abs_est(&self) -> f64 {
        self.a.abs().to_f64().unwrap_or(f64::INFINITY) + self.b.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_cube_root() {
        let w = EisRat::omega();
        let w3 = w.mul(&w).mul(&w);
        assert_eq!(w3, EisRat::one());
        assert!(!w.mul(&w).is_zero());
    }

    #[test]
    fn sixth_root_has_order_six() {
        let z = EisRat::root_of_unity(6).unwrap();
        let mut acc = EisRat::one();
        for i in 1..=6 {
            acc = acc.mul(&z);
            if i < 6 {
                assert_ne!(acc, EisRat::one(), "order divides {i}");
            }
        }
        assert_eq!(acc, EisRat::one());
    }

    #[test]
    fn division_round_trip() {
        let x = EisRat {
            a: BigRational::new(BigInt::from(3), BigInt::from(7)),
            b: BigRational::new(BigInt::from(-2), BigInt::from(5)),
        };
        let y = EisRat::omega().add(&EisRat::from_ratio(4, 3));
        let q = x.div(&y).unwrap();
        assert_eq!(q.mul(&y), x);
    }

    #[test]
    fn to_complex_matches_unit_circle() {
        let z = EisRat::root_of_unity(3).unwrap().to_complex();
        let expect = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!((z - expect).norm() < 1e-15);
    }
}

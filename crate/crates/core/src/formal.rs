//! Formal one-dimensional dynamics: vector fields and their flows,
//! parabolic germs and their invariants (codimension and iterative residue),
//! iterates of resonant germs, the rotation action on model parameters, and
//! germs assembled from pairs of Schwarz reflections.

use crate::coeff::Coeff;
use crate::numeric::{poly_derivative, poly_eval, poly_roots};
use crate::series::{Series, SeriesError};
use num_complex::Complex64;

/// Invertible formal germ fixing the origin: `c_0 = 0`, `c_1 != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalDiffeo<T: Coeff> {
    series: Series<T>,
    /// Optional tag recording a root-of-unity multiplier exp(2πi p/q).
    pub multiplier_pq: Option<(i64, u32)>,
}

impl<T: Coeff> FormalDiffeo<T> {
    pub fn new(series: Series<T>) -> Result<Self, SeriesError> {
        if !series.coeff(0).is_zero() {
            return Err(SeriesError::ConstantTermNonzero);
        }
        if series.coeff(1).is_zero() {
            return Err(SeriesError::NonInvertible);
        }
        Ok(FormalDiffeo {
            series,
            multiplier_pq: None,
        })
    }

    pub fn identity(order: usize) -> Self {
        FormalDiffeo {
            series: Series::identity(order),
            multiplier_pq: None,
        }
    }

    pub fn series(&self) -> &Series<T> {
        &self.series
    }

    pub fn multiplier(&self) -> T {
        self.series.coeff(1)
    }

    pub fn compose(&self, inner: &Self) -> Self {
        FormalDiffeo {
            series: self.series.compose(&inner.series).unwrap(),
            multiplier_pq: None,
        }
    }

    pub fn inverse(&self) -> Self {
        FormalDiffeo {
            series: self.series.invert().unwrap(),
            multiplier_pq: None,
        }
    }

    /// q-fold iterate f∘…∘f.
    pub fn iterate_q(&self, q: usize) -> Self {
        let mut acc = self.clone();
        for _ in 1..q {
            acc = self.compose(&acc);
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FieldKind<T: Coeff> {
    Polynomial,
    /// Model field P_ε(z)/(1 + a z^k) with P_ε = z^{k+1} + Σ_{j<k} ε_j z^j.
    RationalModel { k: usize, eps: Vec<T>, a: T },
}

/// One-dimensional formal vector field `series(z) d/dz`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalVectorField1D<T: Coeff> {
    series: Series<T>,
    pub kind: FieldKind<T>,
}

impl<T: Coeff> FormalVectorField1D<T> {
    pub fn polynomial(series: Series<T>) -> Self {
        FormalVectorField1D {
            series,
            kind: FieldKind::Polynomial,
        }
    }

    /// The model field ż = P_ε(z)/(1 + a z^k); `eps` holds ε_0..ε_{k-1}
    /// (the z^k coefficient of P is absent).
    pub fn rational_model(k: usize, eps: &[T], a: T, order: usize) -> Self {
        assert_eq!(eps.len(), k, "need exactly k low-order coefficients");
        let mut p = Series::zero(order);
        for (j, e) in eps.iter().enumerate() {
            if j <= order {
                p.set_coeff(j, e.clone());
            }
        }
        if k + 1 <= order {
            p.set_coeff(k + 1, T::one());
        }
        let mut denom = Series::zero(order);
        denom.set_coeff(0, T::one());
        if k <= order {
            denom.set_coeff(k, a.clone());
        }
        let series = p.mul(&denom.recip().unwrap());
        FormalVectorField1D {
            series,
            kind: FieldKind::RationalModel {
                k,
                eps: eps.to_vec(),
                a,
            },
        }
    }

    pub fn series(&self) -> &Series<T> {
        &self.series
    }
}

fn sup_est<T: Coeff>(s: &Series<T>, upto: usize) -> f64 {
    (0..=upto.min(s.trunc_order()))
        .map(|i| s.coeff(i).abs_est())
        .fold(0.0, f64::max)
}

/// Formal time-t map of `ż = v(z)` as a series to order `n`, via the Lie
/// series Σ t^m/m! (v d/dz)^m(z). The field need not vanish at the origin;
/// in that case the computation runs at a padded internal order so that
/// truncation noise never reaches degree ≤ n.
pub fn flow_series<T: Coeff>(v: &Series<T>, t: &T, n: usize) -> Result<Series<T>, SeriesError> {
    const MAX_TERMS: usize = 140;
    let v0_zero = v.coeff(0).is_zero();
    let nw = if v0_zero { n } else { n + MAX_TERMS };
    let v = v.truncated(nw);
    let mut g = Series::identity(nw);
    let mut acc = g.clone();
    let mut tm = T::one();
    let mut small_run = 0usize;
    for m in 1..=MAX_TERMS {
        g = v.mul(&g.derivative().truncated(nw));
        tm = tm.mul(t).div(&T::from_i64(m as i64)).unwrap();
        let term = g.scale(&tm);
        acc = acc.add(&term);
        let low = term.truncated(n);
        if low.order_of_vanishing().is_none() {
            return Ok(acc.truncated(n));
        }
        let sup = sup_est(&low, n);
        if sup < 1e-18 * (1.0 + sup_est(&acc, n)) {
            small_run += 1;
            if small_run >= 3 {
                return Ok(acc.truncated(n));
            }
        } else {
            small_run = 0;
        }
    }
    Err(SeriesError::FlowDivergence)
}

/// Formal time-t map of a field fixing the origin, as a germ.
pub fn flow_time_t<T: Coeff>(
    x: &FormalVectorField1D<T>,
    t: &T,
    n: usize,
) -> Result<FormalDiffeo<T>, SeriesError> {
    if !x.series().coeff(0).is_zero() {
        return Err(SeriesError::NonVanishingField);
    }
    FormalDiffeo::new(flow_series(x.series(), t, n)?)
}

/// Codimension and iterative residue of a parabolic germ.
///
/// For f = z + c z^{k+1} + …, the residue of dz/(z − f(z)) at the origin is
/// a conjugacy invariant equal to (k+1)/2 − a in the normalization where the
/// leading nonlinear coefficient is 1; the value of a does not depend on
/// which k-th root is used for that scaling.
pub fn extract_parabolic_invariants(
    f: &FormalDiffeo<Complex64>,
) -> Result<(usize, Complex64), SeriesError> {
    let s = f.series();
    let n = s.trunc_order();
    let scale = s.sup_coeff().max(1.0);
    if (s.coeff(1) - Complex64::new(1.0, 0.0)).norm() > 1e-9 * scale {
        return Err(SeriesError::NotParabolic);
    }
    let mut k = None;
    for m in 2..=n {
        if s.coeff(m).norm() > 1e-10 * scale {
            k = Some(m - 1);
            break;
        }
    }
    let k = k.ok_or(SeriesError::NotParabolic)?;
    if n < 2 * k + 1 {
        return Err(SeriesError::TruncationTooShort {
            have: n,
            need: 2 * k + 1,
        });
    }
    // u = z − f(z) = −c z^{k+1} (1 + r(z)); Res 1/u = (−1/c)·[(1+r)^{-1}]_k
    let u = Series::identity(n).sub(s);
    let c = -u.coeff(k + 1);
    let unit = Series::new(
        (0..=n - k - 1)
            .map(|j| u.coeff(j + k + 1) / -c)
            .collect::<Vec<_>>(),
    );
    let res = -unit.recip().unwrap().coeff(k) / c;
    let a = Complex64::new((k as f64 + 1.0) / 2.0, 0.0) - res;
    Ok((k, a))
}

/// Parameter tuple of the model family after conjugation by R_τ(z) = τ z:
/// ε'_j = τ^{1−j} ε_j, a' = a. Applying the action k times is the identity.
pub fn rotation_action<T: Coeff>(
    eps: &[T],
    a: &T,
    tau: &T,
    k: usize,
) -> Result<(Vec<T>, T), SeriesError> {
    let mut tk = T::one();
    for _ in 0..k {
        tk = tk.mul(tau);
    }
    if !tk.approx_eq(&T::one(), 1e-12) {
        return Err(SeriesError::NotRootOfUnity(k));
    }
    // τ^{-1} = τ^{k-1}
    let mut tau_inv = T::one();
    for _ in 0..k.saturating_sub(1) {
        tau_inv = tau_inv.mul(tau);
    }
    let eps_out = eps
        .iter()
        .enumerate()
        .map(|(j, e)| {
            // τ^{1-j} with exponent reduced mod k
            let exp = (1i64 - j as i64).rem_euclid(k as i64);
            let mut p = T::one();
            for _ in 0..exp {
                p = p.mul(tau);
            }
            e.mul(&p)
        })
        .collect();
    Ok((eps_out, a.clone()))
}

/// A germ that is either holomorphic (`anti = false`) or anti-holomorphic:
/// z ↦ series(z̄). Composition conjugates coefficients per σ∘g = ḡ∘σ.
#[derive(Clone, Debug, PartialEq)]
pub struct AntiMap<T: Coeff> {
    pub series: Series<T>,
    pub anti: bool,
}

impl<T: Coeff> AntiMap<T> {
    pub fn holomorphic(series: Series<T>) -> Self {
        AntiMap {
            series,
            anti: false,
        }
    }

    /// Outer ∘ inner.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        let inner_series = if self.anti {
            inner.series.conj()
        } else {
            inner.series.clone()
        };
        Ok(AntiMap {
            series: self.series.compose(&inner_series)?,
            anti: self.anti ^ inner.anti,
        })
    }
}

/// The Schwarz reflection Σ = h^{-1}∘σ∘h across the curve h^{-1}(ℝ).
pub fn schwarz_reflection<T: Coeff>(h: &FormalDiffeo<T>) -> Result<AntiMap<T>, SeriesError> {
    let g = h.series().invert()?.compose(&h.series().conj())?;
    Ok(AntiMap {
        series: g,
        anti: true,
    })
}

/// The holomorphic germ f = Σ2∘Σ1 of a pair of Schwarz reflections, together
/// with the residual of the reversal condition Σ1∘f = f^{-1}∘Σ1.
pub fn schwarz_pair_diffeo<T: Coeff>(
    h1: &FormalDiffeo<T>,
    h2: &FormalDiffeo<T>,
) -> Result<(FormalDiffeo<T>, f64), SeriesError> {
    let s1 = schwarz_reflection(h1)?;
    let s2 = schwarz_reflection(h2)?;
    let f = s2.compose(&s1)?;
    let f = FormalDiffeo::new(f.series)?;
    let fm = AntiMap::holomorphic(f.series().clone());
    let lhs = s1.compose(&fm)?;
    let finv = AntiMap::holomorphic(f.series().invert()?);
    let rhs = finv.compose(&s1)?;
    debug_assert!(lhs.anti && rhs.anti);
    let diff = lhs.series.sub(&rhs.series);
    let residual = sup_est(&diff, diff.trunc_order());
    Ok((f, residual))
}

/// Fixed points of one member of an unfolded family and the prepared-form
/// multiplier check f'(z_j) vs exp(P'_ε(z_j)).
#[derive(Clone, Debug)]
pub struct PreparedFormReport {
    pub fixed_points: Vec<(Complex64, usize)>,
    pub multipliers: Vec<Complex64>,
    pub target_multipliers: Vec<Complex64>,
    pub residual: f64,
}

/// Checks the prepared-form multiplier condition for a germ f unfolding a
/// codimension-k parabolic point with polynomial P_ε(z) = z^{k+1} + Σ ε_j z^j.
/// When `tol` is given, a residual above it is an error.
pub fn prepared_form(
    f: &FormalDiffeo<Complex64>,
    k: usize,
    eps: &[Complex64],
    tol: Option<f64>,
) -> Result<PreparedFormReport, SeriesError> {
    prepared_form_series(f.series(), k, eps, tol)
}

/// Like [`prepared_form`] but takes the germ as a raw series, for family
/// members whose fixed points are away from the origin (the series then has
/// a nonzero constant term and is not a `FormalDiffeo`).
pub fn prepared_form_series(
    f: &Series<Complex64>,
    k: usize,
    eps: &[Complex64],
    tol: Option<f64>,
) -> Result<PreparedFormReport, SeriesError> {
    assert_eq!(eps.len(), k);
    let mut p = vec![Complex64::new(0.0, 0.0); k + 2];
    for (j, e) in eps.iter().enumerate() {
        p[j] = *e;
    }
    p[k + 1] = Complex64::new(1.0, 0.0);
    let dp = poly_derivative(&p);
    let roots = poly_roots(&p, 1e-9);
    let fd = f.derivative();
    let mut multipliers = Vec::new();
    let mut targets = Vec::new();
    let mut residual = 0.0f64;
    for (z, _) in &roots {
        let m = fd.eval(*z);
        let target = poly_eval(&dp, *z).exp();
        residual = residual.max((m - target).norm());
        multipliers.push(m);
        targets.push(target);
    }
    if let Some(t) = tol {
        if residual > t {
            return Err(SeriesError::MultiplierMismatch(residual));
        }
    }
    Ok(PreparedFormReport {
        fixed_points: roots,
        multipliers,
        target_multipliers: targets,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::EisRat;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn one() -> Complex64 {
        c(1.0, 0.0)
    }

    #[test]
    fn flow_of_z_squared_is_geometric() {
        // ż = z², time-1 map z/(1−z): all coefficients 1
        let v = Series::monomial(one(), 2, 12);
        let f = flow_series(&v, &one(), 12).unwrap();
        assert!(f.coeff(0).norm() < 1e-15);
        for m in 1..=12 {
            assert!(
                (f.coeff(m) - one()).norm() < 1e-12,
                "coeff {m}: {}",
                f.coeff(m)
            );
        }
    }

    #[test]
    fn flow_time_zero_is_identity() {
        let v = Series::new(vec![c(0., 0.), c(0.3, 0.1), c(1., 0.), c(-2., 0.5)]);
        let x = FormalVectorField1D::polynomial(v);
        let f = flow_time_t(&x, &c(0., 0.), 3).unwrap();
        assert!(f.series().distance(&Series::identity(3)) < 1e-15);
    }

    #[test]
    fn model_flow_third_coefficient() {
        // ż = z²/(1+az): coefficient of z³ in the time-1 map is 1 − a
        let a = c(0.7, 0.0);
        let x = FormalVectorField1D::rational_model(1, &[c(0., 0.)], a, 8);
        let f = flow_time_t(&x, &one(), 8).unwrap();
        assert!((f.series().coeff(3) - (one() - a)).norm() < 1e-12);
    }

    #[test]
    fn flow_group_law() {
        let v = Series::new(vec![
            c(0., 0.),
            c(0., 0.),
            c(1., 0.),
            c(0.3, -0.2),
            c(0., 0.1),
        ])
        .truncated(20);
        let s = c(0.4, 0.05);
        let t = c(0.7, -0.1);
        let fs = flow_series(&v, &s, 20).unwrap();
        let ft = flow_series(&v, &t, 20).unwrap();
        let fst = flow_series(&v, &(s + t), 20).unwrap();
        let comp = fs.compose(&ft).unwrap();
        let scale = fst.sup_coeff().max(1.0);
        assert!(
            comp.distance(&fst) < 1e-12 * scale,
            "distance {} at coefficient scale {}",
            comp.distance(&fst),
            scale
        );
    }

    #[test]
    fn extract_invariants_geometric() {
        // z/(1−z) = z + z² + z³ + … → (k, a) = (1, 0)
        let mut coeffs = vec![one(); 8];
        coeffs[0] = c(0., 0.);
        let f = FormalDiffeo::new(Series::new(coeffs)).unwrap();
        let (k, a) = extract_parabolic_invariants(&f).unwrap();
        assert_eq!(k, 1);
        assert!(a.norm() < 1e-12);
    }

    #[test]
    fn extract_invariants_truncated_quadratic() {
        // z + z² (+0z³) → (1, 1)
        let f = FormalDiffeo::new(Series::new(vec![c(0., 0.), one(), one(), c(0., 0.)])).unwrap();
        let (k, a) = extract_parabolic_invariants(&f).unwrap();
        assert_eq!(k, 1);
        assert!((a - one()).norm() < 1e-12);
    }

    #[test]
    fn invariant_round_trip_through_flow() {
        for (k, a) in [
            (1usize, c(0., 0.)),
            (1, c(0.3, 0.1)),
            (2, c(0.3, 0.1)),
            (2, c(-1., 0.)),
            (3, c(0.3, 0.1)),
        ] {
            let n = (2 * k + 1).max(14);
            let x = FormalVectorField1D::rational_model(k, &vec![c(0., 0.); k], a, n);
            let f = flow_time_t(&x, &one(), n).unwrap();
            let (k2, a2) = extract_parabolic_invariants(&f).unwrap();
            assert_eq!(k, k2);
            assert!((a - a2).norm() < 1e-10, "k={k} a={a}: got {a2}");
        }
    }

    #[test]
    fn iterate_relation_exact() {
        // f = ζ(z + z^{kq+1}/(kq) + (A/k²) z^{2kq+1}), ζ = e^{2πi/q}: the
        // q-th iterate is tangent to identity with z^{kq+1} coefficient 1/k,
        // and in the rescaled coordinate where that coefficient is 1 the
        // invariants satisfy B = qA + (kq+1)(q−1)/(2q). The rescaling
        // multiplies both top coefficients by k², so the identity is checked
        // on k²·(raw coefficients) without leaving the field.
        let a_val = EisRat::from_ratio(1, 2);
        for (k, q) in [(1usize, 2u32), (1, 3), (2, 2), (2, 3)] {
            let kq = k * q as usize;
            let n = 2 * kq + 1;
            let k2 = EisRat::from_ratio((k * k) as i64, 1);
            let zeta = EisRat::root_of_unity(q).unwrap();
            let mut s = Series::zero(n);
            s.set_coeff(1, zeta.clone());
            s.set_coeff(kq + 1, zeta.mul(&EisRat::from_ratio(1, kq as i64)));
            s.set_coeff(2 * kq + 1, zeta.mul(&a_val.div(&k2).unwrap()));
            let f = FormalDiffeo::new(s).unwrap();
            let g = f.iterate_q(q as usize);
            assert_eq!(g.series().coeff(1), EisRat::one(), "tangent to identity");
            assert_eq!(
                g.series().coeff(kq + 1),
                EisRat::from_ratio(1, k as i64),
                "leading coefficient of the iterate"
            );
            let b = k2.mul(&g.series().coeff(2 * kq + 1));
            let expect = EisRat::from_ratio(q as i64, 1).mul(&a_val).add(
                &EisRat::from_ratio((kq as i64 + 1) * (q as i64 - 1), 2 * q as i64),
            );
            assert_eq!(b, expect, "k={k} q={q}");
        }
    }

    #[test]
    fn involution_iterates_to_identity() {
        let mut s = Series::zero(5);
        s.set_coeff(1, c(-1., 0.));
        let f = FormalDiffeo::new(s).unwrap();
        let g = f.iterate_q(2);
        assert!(g.series().distance(&Series::identity(5)) < 1e-15);
    }

    #[test]
    fn rotation_action_matches_field_conjugation() {
        // Pushing the model field forward by w = τz multiplies ε_j by τ^{1−j}.
        let k = 3usize;
        let tau = EisRat::omega();
        let eps = vec![
            EisRat::from_ratio(2, 7),
            EisRat::omega(),
            EisRat::from_ratio(-1, 3),
        ];
        let a = EisRat::from_ratio(1, 5);
        let n = 12;
        let x = FormalVectorField1D::rational_model(k, &eps, a.clone(), n);
        let (eps2, a2) = rotation_action(&eps, &a, &tau, k).unwrap();
        let x2 = FormalVectorField1D::rational_model(k, &eps2, a2, n);
        // conjugated field: w ↦ τ·v(τ^{-1}w)
        let tau_inv = EisRat::one().div(&tau).unwrap();
        let sub = Series::monomial(tau_inv, 1, n);
        let pushed = x.series().compose(&sub).unwrap().scale(&tau);
        assert_eq!(pushed, *x2.series());
    }

    #[test]
    fn rotation_action_group_law() {
        let k = 3usize;
        let tau = EisRat::omega();
        let eps = vec![
            EisRat::from_ratio(1, 2),
            EisRat::from_ratio(3, 4),
            EisRat::from_ratio(-2, 9),
        ];
        let a = EisRat::from_ratio(1, 6);
        let mut cur = (eps.clone(), a.clone());
        for _ in 0..k {
            cur = rotation_action(&cur.0, &cur.1, &tau, k).unwrap();
        }
        assert_eq!(cur.0, eps);
        assert_eq!(cur.1, a);
    }

    #[test]
    fn rotation_action_rejects_non_root() {
        let r = rotation_action(&[c(1., 0.)], &c(0., 0.), &c(0.5, 0.), 1);
        assert!(matches!(r, Err(SeriesError::NotRootOfUnity(1))));
    }

    #[test]
    fn schwarz_identity_pair() {
        let id = FormalDiffeo::<Complex64>::identity(8);
        let (f, res) = schwarz_pair_diffeo(&id, &id).unwrap();
        assert!(f.series().distance(&Series::identity(8)) < 1e-14);
        assert!(res < 1e-14);
    }

    #[test]
    fn schwarz_lines_give_rotation() {
        // reflections across ℝ and across the line at angle π/4 compose to
        // rotation by π/2
        let id = FormalDiffeo::<Complex64>::identity(6);
        let h2 = FormalDiffeo::new(Series::monomial(
            Complex64::from_polar(1.0, -std::f64::consts::FRAC_PI_4),
            1,
            6,
        ))
        .unwrap();
        let (f, res) = schwarz_pair_diffeo(&id, &h2).unwrap();
        assert!((f.series().coeff(1) - c(0., 1.)).norm() < 1e-14);
        for m in 2..=6 {
            assert!(f.series().coeff(m).norm() < 1e-14);
        }
        assert!(res < 1e-12);
    }

    #[test]
    fn schwarz_tangent_curves_give_parabolic() {
        let id = FormalDiffeo::<Complex64>::identity(12);
        let mut s = Series::identity(12);
        s.set_coeff(2, c(0., 1.));
        let h2 = FormalDiffeo::new(s).unwrap();
        let (f, res) = schwarz_pair_diffeo(&id, &h2).unwrap();
        assert!(res < 1e-10);
        assert!((f.series().coeff(1) - one()).norm() < 1e-14);
        assert!(f.series().coeff(2).norm() > 0.1);
        let (k, _) = extract_parabolic_invariants(&f).unwrap();
        assert_eq!(k, 1);
    }

    #[test]
    fn prepared_form_model_k1() {
        // ż = z² − 0.04: fixed points ±0.2 with multipliers exp(±0.4)
        let eps = c(0.04, 0.0);
        let x = FormalVectorField1D::rational_model(1, &[-eps], c(0., 0.), 40);
        let flow = flow_series(x.series(), &one(), 40).unwrap();
        let report = prepared_form_series(&flow, 1, &[-eps], None).unwrap();
        assert_eq!(report.fixed_points.len(), 2);
        let mut pts: Vec<f64> = report.fixed_points.iter().map(|p| p.0.re).collect();
        pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        assert!((pts[0] + 0.2).abs() < 1e-10);
        assert!((pts[1] - 0.2).abs() < 1e-10);
        for (m, t) in report.multipliers.iter().zip(&report.target_multipliers) {
            assert!((m - t).norm() < 1e-8, "{m} vs {t}");
        }
        assert!(report.residual < 1e-8);
        let targets: Vec<f64> = report.target_multipliers.iter().map(|t| t.re).collect();
        assert!(targets
            .iter()
            .any(|t| (t - 0.4f64.exp()).abs() < 1e-12));
        assert!(targets
            .iter()
            .any(|t| (t - (-0.4f64).exp()).abs() < 1e-12));
    }

    #[test]
    fn prepared_form_parabolic_limit() {
        let x = FormalVectorField1D::rational_model(2, &[c(0., 0.), c(0., 0.)], c(0., 0.), 10);
        let f = flow_time_t(&x, &one(), 10).unwrap();
        let report = prepared_form(&f, 2, &[c(0., 0.), c(0., 0.)], Some(1e-8)).unwrap();
        assert_eq!(report.fixed_points.len(), 1);
        assert_eq!(report.fixed_points[0].1, 3);
        assert!((report.multipliers[0] - one()).norm() < 1e-10);
    }

    #[test]
    fn prepared_form_cube_roots() {
        // k=2, P = z³ − 0.01: multipliers exp(3 z_j²)
        let eps = [c(-0.01, 0.), c(0., 0.)];
        let x = FormalVectorField1D::rational_model(2, &eps, c(0., 0.), 60);
        let flow = flow_series(x.series(), &one(), 60).unwrap();
        let report = prepared_form_series(&flow, 2, &eps, None).unwrap();
        assert_eq!(report.fixed_points.len(), 3);
        for (p, _) in &report.fixed_points {
            assert!((p.powi(3) - c(0.01, 0.)).norm() < 1e-10);
        }
        assert!(report.residual < 1e-7, "residual {}", report.residual);
    }
}

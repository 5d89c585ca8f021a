//! Adaptive Dormand-Prince 5(4) integration over complex state vectors,
//! with a step observer for trajectory recording and early stopping.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OdeError {
    #[error("step size underflow at t = {0}")]
    StepSizeUnderflow(f64),
    #[error("integration budget of {0} steps exceeded")]
    MaxStepsExceeded(usize),
}

#[derive(Clone, Debug)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub h0: f64,
    pub max_steps: usize,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            rtol: 1e-10,
            atol: 1e-12,
            h0: 1e-3,
            max_steps: 200_000,
        }
    }
}

// Dormand-Prince 5(4) tableau.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 35.0 / 384.0 - 5179.0 / 57600.0;
const E3: f64 = 500.0 / 1113.0 - 7571.0 / 16695.0;
const E4: f64 = 125.0 / 192.0 - 393.0 / 640.0;
const E5: f64 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
const E6: f64 = 11.0 / 84.0 - 187.0 / 2100.0;
const E7: f64 = -1.0 / 40.0;

fn axpy(y: &[Complex64], h: f64, terms: &[(f64, &[Complex64])]) -> Vec<Complex64> {
    let mut out = y.to_vec();
    for (c, k) in terms {
        for (o, v) in out.iter_mut().zip(k.iter()) {
            *o += h * c * v;
        }
    }
    out
}

/// Integrate dy/dt = f(t, y) from `t0` to `t_end` (t_end may be < t0).
///
/// The observer is called after every accepted step with (t, y, h_used) and
/// may return `true` to stop early; the function then returns the current
/// state. On normal completion returns the state at `t_end`.
pub fn integrate<F, S>(
    f: &F,
    t0: f64,
    y0: &[Complex64],
    t_end: f64,
    opts: &OdeOptions,
    mut observer: S,
) -> Result<(f64, Vec<Complex64>), OdeError>
where
    F: Fn(f64, &[Complex64]) -> Vec<Complex64>,
    S: FnMut(f64, &[Complex64], f64) -> bool,
{
    let dir = if t_end >= t0 { 1.0 } else { -1.0 };
    let span = (t_end - t0).abs();
    if span == 0.0 {
        return Ok((t0, y0.to_vec()));
    }
    let mut t = t0;
    let mut y = y0.to_vec();
    let mut h = opts.h0.abs().min(span) * dir;
    let mut k1 = f(t, &y);
    for _ in 0..opts.max_steps {
        if (t_end - t) * dir <= 0.0 {
            return Ok((t, y));
        }
        if h.abs() > (t_end - t).abs() {
            h = t_end - t;
        }
        let y2 = axpy(&y, h, &[(A21, &k1)]);
        let k2 = f(t + h / 5.0, &y2);
        let y3 = axpy(&y, h, &[(A31, &k1), (A32, &k2)]);
        let k3 = f(t + 3.0 * h / 10.0, &y3);
        let y4 = axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]);
        let k4 = f(t + 4.0 * h / 5.0, &y4);
        let y5 = axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]);
        let k5 = f(t + 8.0 * h / 9.0, &y5);
        let y6 = axpy(
            &y,
            h,
            &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
        );
        let k6 = f(t + h, &y6);
        let ynew = axpy(&y, h, &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
        let k7 = f(t + h, &ynew);

        let mut err: f64 = 0.0;
        for i in 0..y.len() {
            let e = h
                * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let scale = opts.atol + opts.rtol * y[i].norm().max(ynew[i].norm());
            err = err.max(e.norm() / scale);
        }
        if err <= 1.0 {
            t += h;
            y = ynew;
            k1 = k7;
            if observer(t, &y, h) {
                return Ok((t, y));
            }
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if h.abs() < 1e-14 * (1.0 + t.abs()) {
            return Err(OdeError::StepSizeUnderflow(t));
        }
    }
    Err(OdeError::MaxStepsExceeded(opts.max_steps))
}

/// Convenience wrapper: integrate to `t_end` with no observer.
pub fn integrate_to<F>(
    f: &F,
    t0: f64,
    y0: &[Complex64],
    t_end: f64,
    opts: &OdeOptions,
) -> Result<Vec<Complex64>, OdeError>
where
    F: Fn(f64, &[Complex64]) -> Vec<Complex64>,
{
    integrate(f, t0, y0, t_end, opts, |_, _, _| false).map(|(_, y)| y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exponential_growth() {
        let f = |_t: f64, y: &[Complex64]| vec![y[0]];
        let y = integrate_to(&f, 0.0, &[c(1., 0.)], 1.0, &OdeOptions::default()).unwrap();
        assert!((y[0].re - 1f64.exp()).abs() < 1e-9);
        assert!(y[0].im.abs() < 1e-12);
    }

    #[test]
    fn rotation_preserves_modulus() {
        let f = |_t: f64, y: &[Complex64]| vec![c(0., 1.) * y[0]];
        let y = integrate_to(&f, 0.0, &[c(1., 0.)], 2.0 * std::f64::consts::PI, &OdeOptions::default())
            .unwrap();
        assert!((y[0] - c(1., 0.)).norm() < 1e-8);
    }

    #[test]
    fn backward_integration() {
        let f = |_t: f64, y: &[Complex64]| vec![y[0]];
        let y = integrate_to(&f, 1.0, &[c(1f64.exp(), 0.)], 0.0, &OdeOptions::default()).unwrap();
        assert!((y[0].re - 1.0).abs() < 1e-9);
    }

    #[test]
    fn observer_early_stop() {
        let f = |_t: f64, y: &[Complex64]| vec![y[0]];
        let (t, y) = integrate(
            &f,
            0.0,
            &[c(1., 0.)],
            10.0,
            &OdeOptions::default(),
            |_, y, _| y[0].re > 2.0,
        )
        .unwrap();
        assert!(t < 10.0);
        assert!(y[0].re > 2.0 && y[0].re < 2.5);
    }

    #[test]
    fn coupled_system() {
        // y'' = -y via first-order system: solution cos t
        let f = |_t: f64, y: &[Complex64]| vec![y[1], -y[0]];
        let y = integrate_to(
            &f,
            0.0,
            &[c(1., 0.), c(0., 0.)],
            std::f64::consts::PI,
            &OdeOptions::default(),
        )
        .unwrap();
        assert!((y[0].re + 1.0).abs() < 1e-9);
        assert!(y[1].re.abs() < 1e-9);
    }
}

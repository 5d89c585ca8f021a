//! Scalar numerical utilities: polynomial root finding, Newton iteration,
//! and Richardson extrapolation.

use num_complex::Complex64;

/// Evaluate a polynomial given by coefficients `c_0..c_d` (low to high).
pub fn poly_eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

pub fn poly_derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect()
}

/// All complex roots of a polynomial, counted with multiplicity.
///
/// Durand-Kerner iteration from a scrambled circle start, followed by a
/// Newton polish of each root and merging of clusters closer than
/// `cluster_tol` into multiple roots.
pub fn poly_roots(coeffs: &[Complex64], cluster_tol: f64) -> Vec<(Complex64, usize)> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.len() > 1 && c.last().unwrap().norm() == 0.0 {
        c.pop();
    }
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = c[d];
    let monic: Vec<Complex64> = c.iter().map(|x| x / lead).collect();

    // Cauchy bound on root moduli.
    let bound = 1.0
        + monic[..d]
            .iter()
            .map(|x| x.norm())
            .fold(0.0, f64::max);
    let radius = bound.min(1e6).max(0.5);

    let mut zs: Vec<Complex64> = (0..d)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius * 0.8, angle)
        })
        .collect();

    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for j in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for l in 0..d {
                if l != j {
                    denom *= zs[j] - zs[l];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates: nudge and continue
                zs[j] += Complex64::new(1e-8, 1e-8);
                continue;
            }
            let step = poly_eval(&monic, zs[j]) / denom;
            zs[j] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * radius.max(1.0) {
            break;
        }
    }

    let dc = poly_derivative(&monic);
    for z in zs.iter_mut() {
        for _ in 0..20 {
            let f = poly_eval(&monic, *z);
            let df = poly_eval(&dc, *z);
            if df.norm() < 1e-300 {
                break;
            }
            let step = f / df;
            *z -= step;
            if step.norm() < 1e-16 * (1.0 + z.norm()) {
                break;
            }
        }
    }

    // Merge clusters into multiple roots at the cluster centroid.
    let mut remaining = zs;
    remaining.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    let mut used = vec![false; remaining.len()];
    for i in 0..remaining.len() {
        if used[i] {
            continue;
        }
        let mut cluster = vec![remaining[i]];
        used[i] = true;
        loop {
            let centroid =
                cluster.iter().sum::<Complex64>() / cluster.len() as f64;
            let mut grew = false;
            for j in 0..remaining.len() {
                if !used[j] && (remaining[j] - centroid).norm() < cluster_tol {
                    cluster.push(remaining[j]);
                    used[j] = true;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        let centroid = cluster.iter().sum::<Complex64>() / cluster.len() as f64;
        out.push((centroid, cluster.len()));
    }
    out.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    out
}

/// Newton iteration on a scalar complex function with numerical or supplied
/// derivative. Returns `None` when not converged within `max_iter`.
pub fn newton<F, G>(f: F, df: G, mut z: Complex64, tol: f64, max_iter: usize) -> Option<Complex64>
where
    F: Fn(Complex64) -> Complex64,
    G: Fn(Complex64) -> Complex64,
{
    for _ in 0..max_iter {
        let fz = f(z);
        let dfz = df(z);
        if dfz.norm() < 1e-300 {
            return None;
        }
        let step = fz / dfz;
        z -= step;
        if step.norm() < tol * (1.0 + z.norm()) {
            return Some(z);
        }
    }
    None
}

/// One Richardson extrapolation step in 1/n: given g(n) = L + c/n + o(1/n),
/// returns the accelerated estimate from samples at n and 2n.
pub fn richardson_1n(g_n: Complex64, g_2n: Complex64) -> Complex64 {
    2.0 * g_2n - g_n
}

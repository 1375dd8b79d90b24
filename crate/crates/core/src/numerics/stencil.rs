//! Fourth-order finite-difference stencils on uniform grids.

use num_complex::Complex64;

use crate::error::{Result, SpectraError};

/// Relative tolerance for accepting a grid as uniform.
const UNIFORM_TOL: f64 = 1e-8;

/// Spacing of `xs`, or an error if it is not uniform.
pub fn uniform_spacing(xs: &[f64]) -> Result<f64> {
    if xs.len() < 2 {
        return Err(SpectraError::InvalidGrid("need at least two points".into()));
    }
    let h = (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64;
    if !(h > 0.0) {
        return Err(SpectraError::InvalidGrid("points must be increasing".into()));
    }
    if xs.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > UNIFORM_TOL * h.max(1.0)) {
        return Err(SpectraError::InvalidGrid("grid is not uniform".into()));
    }
    Ok(h)
}

/// First derivative: centered 5-point stencil inside, one-sided fourth-order
/// stencils on the two outermost points at each end. Needs `f.len() >= 5`.
pub fn first_derivative(f: &[Complex64], h: f64) -> Vec<Complex64> {
    let n = f.len();
    assert!(n >= 5, "first_derivative needs at least 5 samples");
    let scale = 1.0 / (12.0 * h);
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * scale;
    out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * scale;
    for i in 2..n - 2 {
        out[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * scale;
    }
    out[n - 2] =
        (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * scale;
    out[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4]
        + 3.0 * f[n - 5])
        * scale;
    out
}

/// Centered 5-point second derivative at interior index `i` (`2 <= i < n-2`).
#[inline]
pub fn second_derivative_at(f: &[Complex64], i: usize, h: f64) -> Complex64 {
    (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) / (12.0 * h * h)
}

/// Stencil weights `(offset, weight)` of `-d²/dx²` for row `i` of an
/// `n`-point Dirichlet grid, scaled by `1/h²`. The rows next to each wall
/// fall back to the 3-point stencil.
pub fn neg_laplacian_row(i: usize, n: usize) -> Vec<(isize, f64)> {
    if i == 0 || i + 1 == n {
        vec![(-1, -1.0), (0, 2.0), (1, -1.0)]
    } else {
        vec![
            (-2, 1.0 / 12.0),
            (-1, -16.0 / 12.0),
            (0, 30.0 / 12.0),
            (1, -16.0 / 12.0),
            (2, 1.0 / 12.0),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_derivative_is_exact_on_quartics() {
        let h = 0.1;
        let xs: Vec<f64> = (0..12).map(|i| -0.4 + i as f64 * h).collect();
        let f: Vec<Complex64> = xs
            .iter()
            .map(|&x| Complex64::new(x.powi(4) - 2.0 * x, 3.0 * x * x))
            .collect();
        let d = first_derivative(&f, h);
        for (x, v) in xs.iter().zip(d) {
            let exact = Complex64::new(4.0 * x.powi(3) - 2.0, 6.0 * x);
            assert!((v - exact).norm() < 1e-11, "x = {x}: {v} vs {exact}");
        }
    }

    #[test]
    fn second_derivative_is_exact_on_quintics() {
        let h = 0.05;
        let f: Vec<Complex64> = (0..9)
            .map(|i| {
                let x = i as f64 * h;
                Complex64::new(x.powi(5), -x.powi(2))
            })
            .collect();
        let x = 4.0 * h;
        let exact = Complex64::new(20.0 * x.powi(3), -2.0);
        assert!((second_derivative_at(&f, 4, h) - exact).norm() < 1e-9);
    }

    #[test]
    fn uniform_spacing_detects_irregular_grids() {
        assert!((uniform_spacing(&[0.0, 0.5, 1.0]).unwrap() - 0.5).abs() < 1e-15);
        assert!(uniform_spacing(&[0.0, 0.4, 1.0]).is_err());
        assert!(uniform_spacing(&[1.0]).is_err());
    }
}

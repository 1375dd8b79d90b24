//! Finite-difference oracle for the non-Hermitian Schrödinger operator.
//!
//! `-d²/dx² + V(x)` is discretized with Dirichlet walls on a truncated
//! interval and diagonalized as a general complex matrix. Closed-form levels
//! are then matched against eigenvalues whose eigenvectors decay toward the
//! walls, which separates bound states from the discretized continuum.

pub mod stencil;

use faer::dyn_stack::{MemBuffer, MemStack};
use faer::linalg::evd::{evd_cplx, evd_real, evd_scratch, ComputeEigenvectors};
use faer::diag::Diag;
use faer::{Mat, Par};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::GridFunction;
use crate::error::{Result, SpectraError};
use crate::solvers::PotentialSpec;
use crate::spectrum::EigenLevel;

/// Smallest accepted number of interior grid points.
pub const MIN_GRID_POINTS: usize = 16;
/// Largest matrix order handled by the dense eigensolver.
pub const MAX_DENSE_ORDER: usize = 4096;
/// Default number of interior grid points.
pub const DEFAULT_GRID_N: usize = 3000;
/// Environment variable overriding [`DEFAULT_GRID_N`].
pub const GRID_N_ENV: &str = "SPECTRA_DEFAULT_GRID_N";
/// Default absolute matching tolerance.
pub const DEFAULT_MATCH_TOL: f64 = 1e-3;
/// Edge-to-peak modulus ratio below which an eigenvector counts as bound.
pub const DECAY_THRESHOLD: f64 = 1e-4;
/// Fraction of the grid, split between both ends, used for the decay ratio.
pub const EDGE_FRACTION: f64 = 0.05;
/// Required backward error of every eigenpair.
pub const BACKWARD_ERROR_TOL: f64 = 1e-10;
/// Points skipped at each end by [`residual`].
pub const RESIDUAL_EDGE_SKIP: usize = 5;
/// Largest grid spacing accepted by [`residual`].
pub const MAX_RESIDUAL_SPACING: f64 = 0.1;
/// Closed-form levels closer than this are treated as one degenerate cluster.
pub const DEGENERACY_TOL: f64 = 1e-9;

/// Truncated interval `[x_min, x_max]` with `n_points` interior points.
///
/// The walls themselves are not grid points: `x_i = x_min + (i + 1) h` with
/// `h = (x_max - x_min) / (n_points + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(SpectraError::InvalidGrid(format!(
                "need finite x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n_points < MIN_GRID_POINTS {
            return Err(SpectraError::InvalidGrid(format!(
                "need at least {MIN_GRID_POINTS} points, got {n_points}"
            )));
        }
        Ok(Self { x_min, x_max, n_points })
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points + 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        self.x_min + (i + 1) as f64 * self.spacing()
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }
}

/// Default interior point count, honouring `SPECTRA_DEFAULT_GRID_N`.
pub fn default_n_points() -> usize {
    std::env::var(GRID_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n >= MIN_GRID_POINTS)
        .unwrap_or(DEFAULT_GRID_N)
}

/// Half-width used for Scarf II and Pöschl-Teller unless a level decays too
/// slowly for it.
pub const HYPERBOLIC_HALF_WIDTH: f64 = 15.0;
/// Decay lengths `1/κ` that must fit between the origin and each wall.
pub const DECAY_LENGTHS: f64 = 16.0;
/// Default Morse interval.
pub const MORSE_DOMAIN: (f64, f64) = (-4.0, 35.0);

/// Default interval for `spec` given its closed-form levels.
///
/// Hyperbolic families use `[-L, L]` with `L = max(15, 16/κ_min)`, where
/// `κ_min = min Re √(-E)` over the levels; a level near `E = 0` would
/// otherwise leave a visible tail at the walls.
pub fn default_domain(spec: &PotentialSpec, levels: &[EigenLevel]) -> (f64, f64) {
    match spec {
        PotentialSpec::Morse(_) | PotentialSpec::MorseAb(_) => MORSE_DOMAIN,
        PotentialSpec::Scarf2(_) | PotentialSpec::PoschlTeller(_) => {
            let kappa = levels
                .iter()
                .map(|l| (-l.energy).sqrt().re)
                .filter(|k| *k > 0.0)
                .fold(f64::INFINITY, f64::min);
            let half = if kappa.is_finite() {
                HYPERBOLIC_HALF_WIDTH.max(DECAY_LENGTHS / kappa)
            } else {
                HYPERBOLIC_HALF_WIDTH
            };
            let offset = match spec {
                PotentialSpec::PoschlTeller(p) => p.c,
                _ => 0.0,
            };
            (offset - half, offset + half)
        }
    }
}

/// Square complex matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseComplexMatrix {
    order: usize,
    entries: Vec<Complex64>,
}

impl DenseComplexMatrix {
    pub fn zeros(order: usize) -> Self {
        Self { order, entries: vec![Complex64::new(0.0, 0.0); order * order] }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(SpectraError::InvalidGrid("matrix must be square".into()));
        }
        let entries: Vec<Complex64> = rows.iter().flatten().copied().collect();
        if entries.iter().any(|z| !z.is_finite()) {
            return Err(SpectraError::InvalidGrid("matrix entries must be finite".into()));
        }
        Ok(Self { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        self.entries[i * self.order + j] = value;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// Lower and upper bandwidths.
    pub fn bandwidths(&self) -> (usize, usize) {
        let (mut lower, mut upper) = (0, 0);
        for i in 0..self.order {
            for j in 0..self.order {
                if self.get(i, j) != Complex64::new(0.0, 0.0) {
                    if i > j {
                        lower = lower.max(i - j);
                    } else {
                        upper = upper.max(j - i);
                    }
                }
            }
        }
        (lower, upper)
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.entries
            .chunks(self.order)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `sqrt(‖H‖₁ ‖H‖∞)`, an upper bound on the spectral norm.
    pub fn norm_estimate(&self) -> f64 {
        let n = self.order;
        let mut col = vec![0.0; n];
        let mut row_max = 0.0f64;
        for i in 0..n {
            let mut row = 0.0;
            for j in 0..n {
                let a = self.get(i, j).norm();
                row += a;
                col[j] += a;
            }
            row_max = row_max.max(row);
        }
        (row_max * col.into_iter().fold(0.0, f64::max)).sqrt()
    }
}

/// `H = -D₂ + diag(V)` on `grid` with Dirichlet walls.
pub fn discretize(
    potential: impl Fn(f64) -> Result<Complex64>,
    grid: &Grid,
) -> Result<DenseComplexMatrix> {
    let n = grid.n_points;
    if n > MAX_DENSE_ORDER {
        return Err(SpectraError::InvalidGrid(format!(
            "{n} points exceed the dense solver cap {MAX_DENSE_ORDER}"
        )));
    }
    let inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
    let mut h = DenseComplexMatrix::zeros(n);
    for i in 0..n {
        for (offset, w) in stencil::neg_laplacian_row(i, n) {
            let j = i as isize + offset;
            if j >= 0 && (j as usize) < n {
                h.set(i, j as usize, Complex64::new(w * inv_h2, 0.0));
            }
        }
        let v = potential(grid.point(i))?;
        if !v.is_finite() {
            return Err(SpectraError::SingularPoint { x: grid.point(i) });
        }
        h.set(i, i, h.get(i, i) + v);
    }
    Ok(h)
}

/// Eigenvalue with a unit right eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: Complex64,
    /// Unit 2-norm; the largest-modulus component is real and positive.
    pub vector: Vec<Complex64>,
}

/// Banded matrices with `p + q` at most this use inverse iteration for the
/// eigenvectors; wider ones use the dense eigenvector path.
const MAX_BANDED_WIDTH: usize = 16;
const INVERSE_ITERATION_STEPS: usize = 6;

/// All eigenpairs of `h`, sorted by real then imaginary part.
///
/// Eigenvalues come from a Hessenberg reduction and shifted QR run
/// sequentially, so the output is deterministic. A banded matrix with
/// `J H̄ J = H` (a PT-symmetric potential on a symmetric grid) takes a
/// cheaper route: eigenvalues of a unitarily similar real matrix, then
/// eigenvectors by banded inverse iteration. Other matrices use the complex
/// Schur vectors, which stay accurate where strong non-normality makes
/// inverse iteration stall. Every pair is checked against
/// [`BACKWARD_ERROR_TOL`].
pub fn eig_complex(h: &DenseComplexMatrix) -> Result<Vec<EigenPair>> {
    let n = h.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n > MAX_DENSE_ORDER {
        return Err(SpectraError::InvalidGrid(format!(
            "matrix order {n} exceeds the dense solver cap {MAX_DENSE_ORDER}"
        )));
    }
    let norm = h.norm_estimate();
    let (p, q) = h.bandwidths();
    let fast = p + q <= MAX_BANDED_WIDTH && is_centro_hermitian(h);

    let (values, u) = if fast {
        (real_form_eigenvalues(h)?, None)
    } else {
        complex_eigen(h, true)?
    };

    let mut pairs = Vec::with_capacity(n);
    if fast {
        let band = Band::from_matrix(h, p, q);
        for &value in &values {
            let vector = inverse_iteration(&band, value, norm)?;
            pairs.push(EigenPair { value, vector });
        }
    } else {
        let u = u.expect("dense path computes eigenvectors");
        for (k, &value) in values.iter().enumerate() {
            let mut vector: Vec<Complex64> = (0..n).map(|i| u[(i, k)]).collect();
            normalize(&mut vector);
            check_backward_error(h, value, &vector, norm)?;
            pairs.push(EigenPair { value, vector });
        }
    }
    pairs.sort_by(|a, b| {
        a.value.re.total_cmp(&b.value.re).then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(pairs)
}

/// Complex Schur eigenvalues, plus right eigenvectors when requested.
fn complex_eigen(
    h: &DenseComplexMatrix,
    vectors: bool,
) -> Result<(Vec<Complex64>, Option<Mat<Complex64>>)> {
    let n = h.order();
    let a = Mat::<Complex64>::from_fn(n, n, |i, j| h.get(i, j));
    let mut s = Diag::<Complex64>::zeros(n);
    let mut u = vectors.then(|| Mat::<Complex64>::zeros(n, n));
    let want = if vectors { ComputeEigenvectors::Yes } else { ComputeEigenvectors::No };
    let mut buf = MemBuffer::new(evd_scratch::<Complex64>(
        n,
        ComputeEigenvectors::No,
        want,
        Par::Seq,
        Default::default(),
    ));
    evd_cplx(
        a.as_ref(),
        s.as_mut(),
        None,
        u.as_mut().map(|m| m.as_mut()),
        Par::Seq,
        MemStack::new(&mut buf),
        Default::default(),
    )
    .map_err(|e| SpectraError::NoConvergence(format!("{e:?}")))?;
    Ok(((0..n).map(|k| s[k]).collect(), u))
}

/// Relative tolerance of the `J H̄ J = H` test.
const CENTRO_TOL: f64 = 1e-12;

/// `H[n-1-i][n-1-j] = conj(H[i][j])`, the matrix form of `V(-x)* = V(x)` on
/// a grid symmetric about the origin.
fn is_centro_hermitian(h: &DenseComplexMatrix) -> bool {
    let n = h.order();
    let scale = h.entries().iter().map(|z| z.norm()).fold(0.0, f64::max);
    (0..n).all(|i| {
        (0..n).all(|j| (h.get(n - 1 - i, n - 1 - j) - h.get(i, j).conj()).norm() <= CENTRO_TOL * scale)
    })
}

/// Eigenvalues of a centro-Hermitian matrix through the real matrix
/// `Uᴴ H U`, where the columns of `U` are `(e_i + e_{n-1-i})/√2`,
/// `i(e_i - e_{n-1-i})/√2` and, for odd `n`, the middle unit vector.
/// The real Schur form costs a fraction of the complex one.
fn real_form_eigenvalues(h: &DenseComplexMatrix) -> Result<Vec<Complex64>> {
    let n = h.order();
    let half = n / 2;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut cols: Vec<Vec<(usize, Complex64)>> = Vec::with_capacity(n);
    for i in 0..half {
        cols.push(vec![(i, Complex64::new(r, 0.0)), (n - 1 - i, Complex64::new(r, 0.0))]);
    }
    for i in 0..half {
        cols.push(vec![(i, Complex64::new(0.0, r)), (n - 1 - i, Complex64::new(0.0, -r))]);
    }
    if n % 2 == 1 {
        cols.push(vec![(half, Complex64::new(1.0, 0.0))]);
    }
    let m = Mat::<f64>::from_fn(n, n, |a, b| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &(ia, ca) in &cols[a] {
            for &(ib, cb) in &cols[b] {
                acc += ca.conj() * h.get(ia, ib) * cb;
            }
        }
        acc.re
    });
    let mut s_re = Diag::<f64>::zeros(n);
    let mut s_im = Diag::<f64>::zeros(n);
    let mut buf = MemBuffer::new(evd_scratch::<f64>(
        n,
        ComputeEigenvectors::No,
        ComputeEigenvectors::No,
        Par::Seq,
        Default::default(),
    ));
    evd_real(
        m.as_ref(),
        s_re.as_mut(),
        s_im.as_mut(),
        None,
        None,
        Par::Seq,
        MemStack::new(&mut buf),
        Default::default(),
    )
    .map_err(|e| SpectraError::NoConvergence(format!("{e:?}")))?;
    Ok((0..n).map(|k| Complex64::new(s_re[k], s_im[k])).collect())
}

fn backward_error(hv: &[Complex64], value: Complex64, v: &[Complex64], norm: f64) -> f64 {
    let r: f64 = hv.iter().zip(v).map(|(a, b)| (a - value * b).norm_sqr()).sum::<f64>().sqrt();
    let vn: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    r / (norm.max(f64::MIN_POSITIVE) * vn)
}

fn check_backward_error(h: &DenseComplexMatrix, value: Complex64, v: &[Complex64], norm: f64) -> Result<()> {
    let err = backward_error(&h.mul_vec(v), value, v, norm);
    if err < BACKWARD_ERROR_TOL {
        Ok(())
    } else {
        Err(SpectraError::NoConvergence(format!(
            "eigenpair at {value} has backward error {err:e}"
        )))
    }
}

/// Unit 2-norm with the largest component rotated onto the positive real axis.
fn normalize(v: &mut [Complex64]) {
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return;
    }
    let peak = v
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .expect("non-empty vector");
    let phase = peak.conj() / peak.norm();
    for z in v.iter_mut() {
        *z = *z * phase / norm;
    }
}

/// Eigenvector for the computed eigenvalue `value` by inverse iteration.
fn inverse_iteration(
    band: &Band,
    value: Complex64,
    norm: f64,
) -> Result<Vec<Complex64>> {
    let n = band.n;
    let mut v: Vec<Complex64> =
        (0..n).map(|i| Complex64::new(1.0 + (i % 7) as f64 / 7.0, (i % 3) as f64 / 5.0)).collect();
    normalize(&mut v);
    // Near-degenerate eigenvalues can pull later iterates toward a neighbour's
    // vector, so the best iterate is kept.
    let mut best: Option<(f64, Vec<Complex64>)> = None;
    let mut keep = |err: f64, v: &[Complex64]| {
        if best.as_ref().is_none_or(|b| err < b.0) {
            best = Some((err, v.to_vec()));
        }
    };
    let lu = band.shifted_lu(value, norm);
    for _ in 0..INVERSE_ITERATION_STEPS {
        lu.solve_in_place(&mut v);
        if v.iter().any(|z| !z.is_finite()) {
            break;
        }
        normalize(&mut v);
        let err = backward_error(&band.mul_vec(&v), value, &v, norm);
        keep(err, &v);
        if err < 0.01 * BACKWARD_ERROR_TOL {
            break;
        }
    }
    let Some((err, v)) = best else {
        return Err(SpectraError::NoConvergence(format!(
            "inverse iteration at {value} produced no finite vector"
        )));
    };
    if err < BACKWARD_ERROR_TOL {
        Ok(v)
    } else {
        Err(SpectraError::NoConvergence(format!(
            "inverse iteration at {value} stalled with backward error {err:e}"
        )))
    }
}

/// Band storage: row `i` holds columns `i - p ..= i + p + q`, leaving room
/// for the fill-in produced by partial pivoting.
struct Band {
    n: usize,
    p: usize,
    q: usize,
    data: Vec<Complex64>,
}

impl Band {
    fn width(&self) -> usize {
        2 * self.p + self.q + 1
    }

    fn from_matrix(h: &DenseComplexMatrix, p: usize, q: usize) -> Self {
        let n = h.order();
        let mut band = Band { n, p, q, data: vec![Complex64::new(0.0, 0.0); n * (2 * p + q + 1)] };
        for i in 0..n {
            for j in i.saturating_sub(p)..=(i + q).min(n - 1) {
                *band.at(i, j) = h.get(i, j);
            }
        }
        band
    }

    fn at(&mut self, i: usize, j: usize) -> &mut Complex64 {
        let w = self.width();
        &mut self.data[i * w + j + self.p - i]
    }

    fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.width() + j + self.p - i]
    }

    fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| {
                (i.saturating_sub(self.p)..=(i + self.q).min(self.n - 1))
                    .map(|j| self.get(i, j) * v[j])
                    .sum()
            })
            .collect()
    }

    /// LU of `H - σI` with partial pivoting; zero pivots are replaced by
    /// `ε ‖H‖` so that inverse iteration can proceed.
    fn shifted_lu(&self, shift: Complex64, norm: f64) -> BandLu {
        let (n, p, q) = (self.n, self.p, self.q);
        let mut a = Band { n, p, q, data: self.data.clone() };
        for i in 0..n {
            *a.at(i, i) -= shift;
        }
        let mut multipliers = vec![Complex64::new(0.0, 0.0); n * p.max(1)];
        let mut pivots = vec![0usize; n];
        let tiny = f64::EPSILON * norm.max(f64::MIN_POSITIVE);
        for k in 0..n {
            let last_row = (k + p).min(n - 1);
            let last_col = (k + p + q).min(n - 1);
            let r = (k..=last_row)
                .max_by(|&x, &y| a.get(x, k).norm().total_cmp(&a.get(y, k).norm()).then(y.cmp(&x)))
                .expect("non-empty pivot range");
            pivots[k] = r;
            if r != k {
                for j in k..=last_col {
                    let t = a.get(k, j);
                    *a.at(k, j) = a.get(r, j);
                    *a.at(r, j) = t;
                }
            }
            if a.get(k, k).norm() < tiny {
                *a.at(k, k) = Complex64::new(tiny, 0.0);
            }
            let pivot = a.get(k, k);
            for i in k + 1..=last_row {
                let l = a.get(i, k) / pivot;
                multipliers[k * p + (i - k - 1)] = l;
                *a.at(i, k) = Complex64::new(0.0, 0.0);
                if l != Complex64::new(0.0, 0.0) {
                    for j in k + 1..=last_col {
                        let akj = a.get(k, j);
                        *a.at(i, j) -= l * akj;
                    }
                }
            }
        }
        BandLu { u: a, multipliers, pivots }
    }
}

struct BandLu {
    u: Band,
    multipliers: Vec<Complex64>,
    pivots: Vec<usize>,
}

impl BandLu {
    fn solve_in_place(&self, b: &mut [Complex64]) {
        let (n, p, q) = (self.u.n, self.u.p, self.u.q);
        for k in 0..n {
            b.swap(k, self.pivots[k]);
            for i in k + 1..=(k + p).min(n - 1) {
                let l = self.multipliers[k * p + (i - k - 1)];
                let bk = b[k];
                b[i] -= l * bk;
            }
        }
        for i in (0..n).rev() {
            let mut acc = b[i];
            for j in i + 1..=(i + p + q).min(n - 1) {
                acc -= self.u.get(i, j) * b[j];
            }
            b[i] = acc / self.u.get(i, i);
        }
    }
}

/// Mean modulus over the outer [`EDGE_FRACTION`] of the samples divided by
/// the peak modulus.
pub fn edge_decay(values: &[Complex64]) -> f64 {
    let n = values.len();
    if n == 0 {
        return f64::INFINITY;
    }
    let per_side = ((0.5 * EDGE_FRACTION * n as f64).ceil() as usize).clamp(1, n.div_ceil(2));
    let peak = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if peak == 0.0 {
        return f64::INFINITY;
    }
    let edge: f64 = values[..per_side]
        .iter()
        .chain(&values[n - per_side..])
        .map(|z| z.norm())
        .sum();
    edge / (2 * per_side) as f64 / peak
}

/// Oracle comparison for one closed-form level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelMatch {
    pub epsilon: i8,
    pub n: usize,
    pub closed: Complex64,
    /// Numeric estimate: the nearest eigenvalue, or the mean of the `k`
    /// nearest when `k` closed-form levels coincide.
    pub numeric: Option<Complex64>,
    /// The eigenvalues that formed `numeric`.
    pub cluster: Vec<Complex64>,
    pub abs_error: f64,
    /// Largest edge decay ratio among the cluster's eigenvectors.
    pub boundary_decay: f64,
    pub matched: bool,
}

/// Result of [`match_levels`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchReport {
    pub tolerance: f64,
    pub decay_threshold: f64,
    pub levels: Vec<LevelMatch>,
    /// Eigenvalues with bound-state-like eigenvectors that no closed-form
    /// level accounts for.
    pub unclaimed_decaying: Vec<Complex64>,
}

impl MatchReport {
    pub fn all_matched(&self) -> bool {
        self.levels.iter().all(|l| l.matched)
    }
}

/// Nearest-neighbour matching of closed-form levels against numeric pairs.
///
/// A level is matched when its numeric estimate lies within `tol` and every
/// contributing eigenvector has edge decay below [`DECAY_THRESHOLD`]. Levels
/// that coincide in closed form (within [`DEGENERACY_TOL`]) form a cluster of
/// size `k`; their estimate is the mean of the `k` nearest eigenvalues, which
/// is stable when a non-diagonalizable degeneracy is split by truncation.
pub fn match_levels(closed: &[EigenLevel], numeric: &[EigenPair], tol: f64) -> MatchReport {
    let mut claimed = vec![false; numeric.len()];
    let mut levels = Vec::with_capacity(closed.len());
    for level in closed {
        let k = closed
            .iter()
            .filter(|o| (o.energy - level.energy).norm() <= DEGENERACY_TOL)
            .count();
        let mut order: Vec<usize> = (0..numeric.len()).collect();
        order.sort_by(|&a, &b| {
            (numeric[a].value - level.energy)
                .norm()
                .total_cmp(&(numeric[b].value - level.energy).norm())
                .then(a.cmp(&b))
        });
        order.truncate(k);
        let cluster: Vec<Complex64> = order.iter().map(|&i| numeric[i].value).collect();
        let estimate = (!cluster.is_empty())
            .then(|| cluster.iter().sum::<Complex64>() / cluster.len() as f64);
        let abs_error = estimate.map_or(f64::INFINITY, |e| (e - level.energy).norm());
        let boundary_decay = if order.is_empty() {
            f64::INFINITY
        } else {
            order.iter().map(|&i| edge_decay(&numeric[i].vector)).fold(0.0, f64::max)
        };
        let matched = abs_error <= tol && boundary_decay < DECAY_THRESHOLD;
        if matched {
            for &i in &order {
                claimed[i] = true;
            }
        }
        levels.push(LevelMatch {
            epsilon: level.epsilon,
            n: level.n,
            closed: level.energy,
            numeric: estimate,
            cluster,
            abs_error,
            boundary_decay,
            matched,
        });
    }
    let unclaimed_decaying = numeric
        .iter()
        .zip(&claimed)
        .filter(|(pair, c)| !**c && edge_decay(&pair.vector) < DECAY_THRESHOLD)
        .map(|(pair, _)| pair.value)
        .collect();
    MatchReport { tolerance: tol, decay_threshold: DECAY_THRESHOLD, levels, unclaimed_decaying }
}

/// Discretizes `spec` on `grid`, diagonalizes, and matches `levels`.
pub fn verify_levels(
    spec: &PotentialSpec,
    levels: &[EigenLevel],
    grid: &Grid,
    tol: f64,
) -> Result<MatchReport> {
    let h = discretize(|x| spec.potential(x), grid)?;
    let pairs = eig_complex(&h)?;
    Ok(match_levels(levels, &pairs, tol))
}

/// `max |−ψ″ + Vψ − Eψ| / max |ψ|` over the grid, skipping
/// [`RESIDUAL_EDGE_SKIP`] points at each end.
pub fn residual(
    psi: &GridFunction,
    potential: impl Fn(f64) -> Result<Complex64>,
    energy: Complex64,
) -> Result<f64> {
    let h = psi.spacing()?;
    if h > MAX_RESIDUAL_SPACING {
        return Err(SpectraError::GridTooCoarse { spacing: h, limit: MAX_RESIDUAL_SPACING });
    }
    let n = psi.len();
    if n < 2 * RESIDUAL_EDGE_SKIP + 1 {
        return Err(SpectraError::InvalidGrid(format!(
            "residual needs at least {} points, got {n}",
            2 * RESIDUAL_EDGE_SKIP + 1
        )));
    }
    let peak = psi.max_modulus();
    if peak == 0.0 {
        return Err(SpectraError::EmptyFunction);
    }
    let (xs, f) = (psi.xs(), psi.values());
    let mut worst = 0.0f64;
    for i in RESIDUAL_EDGE_SKIP..n - RESIDUAL_EDGE_SKIP {
        let r = -stencil::second_derivative_at(f, i, h) + (potential(xs[i])? - energy) * f[i];
        worst = worst.max(r.norm());
    }
    Ok(worst / peak)
}

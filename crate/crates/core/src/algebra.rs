//! Differential realizations of sl(2,C) and the potential families they induce.
//!
//! A realization is fixed by a pair of complex functions `F`, `G` obeying
//! `F' = 1 - F^2` and `G' = -F G`. Three solution classes exist, all expressed
//! here through the complex coordinate `τ = x - c - iγ`:
//!
//! | class | `F(x)`    | `G(x)`         |
//! |-------|-----------|----------------|
//! | I     | `tanh τ`  | `b sech τ`     |
//! | II    | `coth τ`  | `b cosech τ`   |
//! | III±  | `±1`      | `b e^{∓x}`     |
//!
//! For a fixed realization the family `V_m = (1/4 - m^2) F' + 2 m G' + G^2`
//! shares the energy `-(k - 1/2)^2` across the tower `m = k, k+1, ...`; the
//! reduced raising operator `A_m^+ = d/dx - (m + 1/2) F + G` steps from
//! `V_m` to `V_{m+1}` at fixed energy.

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, SpectraError};
use crate::numerics::stencil;
use crate::solvers::PotentialSpec;

/// Complex scalar used throughout the crate.
pub type ComplexValue = Complex64;

/// `|sinh τ|` below this is treated as the class-II pole.
pub const SINGULAR_TOL: f64 = 1e-12;

/// Largest grid spacing accepted by the finite-difference ladder.
pub const MAX_LADDER_SPACING: f64 = 0.1;

/// The solution class of the realization functions `F`, `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PotentialClass {
    I,
    II,
    /// `F = +1`, `G = b e^{-x}`.
    IIIUpper,
    /// `F = -1`, `G = b e^{x}`.
    IIILower,
}

impl PotentialClass {
    pub fn label(self) -> &'static str {
        match self {
            PotentialClass::I => "I",
            PotentialClass::II => "II",
            PotentialClass::IIIUpper => "III_upper",
            PotentialClass::IIILower => "III_lower",
        }
    }

    fn is_class_iii(self) -> bool {
        matches!(self, PotentialClass::IIIUpper | PotentialClass::IIILower)
    }
}

/// Realization data `(class, c, γ, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealizationParams {
    class: PotentialClass,
    c: f64,
    gamma: f64,
    b: Complex64,
}

impl RealizationParams {
    /// Validates `-π/4 <= γ < π/4` and `γ != 0` for class II. Class III
    /// ignores `c` and `γ`, which are stored as zero.
    pub fn new(class: PotentialClass, c: f64, gamma: f64, b: Complex64) -> Result<Self> {
        if !(c.is_finite() && gamma.is_finite() && b.re.is_finite() && b.im.is_finite()) {
            return Err(SpectraError::InvalidSpec(
                "realization parameters must be finite".into(),
            ));
        }
        if class.is_class_iii() {
            return Ok(Self { class, c: 0.0, gamma: 0.0, b });
        }
        if !(-FRAC_PI_4..FRAC_PI_4).contains(&gamma) {
            return Err(SpectraError::InvalidSpec(format!(
                "contour shift gamma = {gamma} outside [-pi/4, pi/4)"
            )));
        }
        if class == PotentialClass::II && gamma == 0.0 {
            return Err(SpectraError::InvalidSpec(
                "class II needs gamma != 0 to keep the contour off the cosech pole".into(),
            ));
        }
        Ok(Self { class, c, gamma, b })
    }

    pub fn class(&self) -> PotentialClass {
        self.class
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn b_r(&self) -> f64 {
        self.b.re
    }

    pub fn b_i(&self) -> f64 {
        self.b.im
    }

    /// `τ = x - c - iγ`.
    pub fn tau(&self, x: f64) -> Complex64 {
        Complex64::new(x - self.c, -self.gamma)
    }

    /// Point where ground states are pinned to the value 1.
    pub fn reference_point(&self) -> f64 {
        match self.class {
            PotentialClass::I | PotentialClass::II => self.c,
            _ => 0.0,
        }
    }

    fn sinh_tau_checked(&self, x: f64) -> Result<Complex64> {
        let s = self.tau(x).sinh();
        if s.norm() < SINGULAR_TOL {
            return Err(SpectraError::SingularPoint { x });
        }
        Ok(s)
    }

    /// `F(x)`.
    pub fn f(&self, x: f64) -> Result<Complex64> {
        Ok(match self.class {
            PotentialClass::I => self.tau(x).tanh(),
            PotentialClass::II => {
                let s = self.sinh_tau_checked(x)?;
                self.tau(x).cosh() / s
            }
            PotentialClass::IIIUpper => Complex64::new(1.0, 0.0),
            PotentialClass::IIILower => Complex64::new(-1.0, 0.0),
        })
    }

    /// `G(x)`.
    pub fn g(&self, x: f64) -> Result<Complex64> {
        Ok(match self.class {
            PotentialClass::I => self.b / self.tau(x).cosh(),
            PotentialClass::II => self.b / self.sinh_tau_checked(x)?,
            PotentialClass::IIIUpper => self.b * (-x).exp(),
            PotentialClass::IIILower => self.b * x.exp(),
        })
    }

    /// `F'(x)` from the closed form `1 - F^2`.
    pub fn f_prime(&self, x: f64) -> Result<Complex64> {
        let f = self.f(x)?;
        Ok(1.0 - f * f)
    }

    /// `G'(x)` from the closed form `-F G`.
    pub fn g_prime(&self, x: f64) -> Result<Complex64> {
        Ok(-self.f(x)? * self.g(x)?)
    }
}

/// `F(x)` of realization `r`.
pub fn eval_f(r: &RealizationParams, x: f64) -> Result<ComplexValue> {
    r.f(x)
}

/// `G(x)` of realization `r`.
pub fn eval_g(r: &RealizationParams, x: f64) -> Result<ComplexValue> {
    r.g(x)
}

/// Representation label `(m, n)`; `k = m - n` is derived.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RepresentationLabel {
    pub m_r: f64,
    pub m_i: f64,
    pub n: usize,
}

impl RepresentationLabel {
    pub fn new(m: Complex64, n: usize) -> Self {
        Self { m_r: m.re, m_i: m.im, n }
    }

    pub fn m(&self) -> Complex64 {
        Complex64::new(self.m_r, self.m_i)
    }

    pub fn k(&self) -> Complex64 {
        Complex64::new(self.m_r - self.n as f64, self.m_i)
    }

    pub fn energy(&self) -> Complex64 {
        energy_level(self)
    }
}

/// `E = -(m - n - 1/2)^2`.
pub fn energy_level(label: &RepresentationLabel) -> ComplexValue {
    let shifted = label.k() - 0.5;
    -(shifted * shifted)
}

/// `V_m(x) = (1/4 - m^2) F' + 2 m G' + G^2`.
pub fn potential_from_algebra(r: &RealizationParams, m: ComplexValue, x: f64) -> Result<ComplexValue> {
    let fp = r.f_prime(x)?;
    let gp = r.g_prime(x)?;
    let g = r.g(x)?;
    Ok((0.25 - m * m) * fp + 2.0 * m * gp + g * g)
}

/// Physical potential of a family specification at `x`.
pub fn potential_closed_form(spec: &PotentialSpec, x: f64) -> Result<ComplexValue> {
    spec.potential(x)
}

/// Complex samples on an increasing real grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    xs: Vec<f64>,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(xs: Vec<f64>, values: Vec<Complex64>) -> Result<Self> {
        if xs.len() != values.len() {
            return Err(SpectraError::InvalidGrid(format!(
                "{} sample points but {} values",
                xs.len(),
                values.len()
            )));
        }
        if xs.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(SpectraError::InvalidGrid(
                "sample points must be strictly increasing".into(),
            ));
        }
        Ok(Self { xs, values })
    }

    pub fn zeros(xs: Vec<f64>) -> Result<Self> {
        let values = vec![Complex64::new(0.0, 0.0); xs.len()];
        Self::new(xs, values)
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// Spacing of a uniform grid; errors if the grid is not uniform.
    pub fn spacing(&self) -> Result<f64> {
        stencil::uniform_spacing(&self.xs)
    }

    pub fn max_modulus(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Value at the sample closest to `x`.
    pub fn value_near(&self, x: f64) -> Option<Complex64> {
        let idx = self
            .xs
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - x).abs().total_cmp(&(b.1 - x).abs()))?
            .0;
        Some(self.values[idx])
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            xs: self.xs.clone(),
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

/// Principal-log bases (and coefficients) whose weighted logs sum to `ln ψ0`.
fn ground_state_log_terms(
    r: &RealizationParams,
    m: Complex64,
    x: f64,
) -> Result<(Complex64, Vec<Complex64>)> {
    let half = Complex64::new(0.5, 0.0);
    let b = r.b;
    match r.class {
        PotentialClass::I => {
            let tau = r.tau(x);
            let sech = 1.0 / tau.cosh();
            let sinh = tau.sinh();
            // atan z = (i/2) [ln(1 - iz) - ln(1 + iz)]; both arguments are tracked for cuts.
            let i = Complex64::i();
            let lower = 1.0 - i * sinh;
            let upper = 1.0 + i * sinh;
            let log = (m - half) * sech.ln() + b * sinh.atan();
            Ok((log, vec![sech, lower, upper]))
        }
        PotentialClass::II => {
            let half_tau = r.tau(x) * 0.5;
            let sh = half_tau.sinh();
            if sh.norm() < SINGULAR_TOL {
                return Err(SpectraError::SingularPoint { x });
            }
            let ch = half_tau.cosh();
            let log = (b - m + half) * sh.ln() + (-b - m + half) * ch.ln();
            Ok((log, vec![sh, ch]))
        }
        PotentialClass::IIIUpper => Ok((-(m - half) * x - b * (-x).exp(), Vec::new())),
        PotentialClass::IIILower => Ok(((m - half) * x + b * x.exp(), Vec::new())),
    }
}

/// Unnormalized ground state `ψ0` of `V_m`, pinned to 1 at the reference point
/// (`x = c` for classes I and II, `x = 0` for class III).
///
/// Complex powers use the principal logarithm. If any base crosses the
/// negative real axis between consecutive samples the function returns
/// [`SpectraError::BranchCutCrossing`] instead of a silently wrapped result.
pub fn ground_state(r: &RealizationParams, m: ComplexValue, xs: &[f64]) -> Result<GridFunction> {
    let (log_ref, _) = ground_state_log_terms(r, m, r.reference_point())?;
    let mut values = Vec::with_capacity(xs.len());
    let mut prev: Option<(f64, Vec<Complex64>)> = None;
    for &x in xs {
        let (log, bases) = ground_state_log_terms(r, m, x)?;
        if let Some((px, pbases)) = &prev {
            for (a, b) in pbases.iter().zip(&bases) {
                if (b.arg() - a.arg()).abs() > std::f64::consts::PI {
                    return Err(SpectraError::BranchCutCrossing { from: *px, to: x });
                }
            }
        }
        values.push((log - log_ref).exp());
        prev = Some((x, bases));
    }
    GridFunction::new(xs.to_vec(), values)
}

/// `A_m^+ ψ = ψ' - (m + 1/2) F ψ + G ψ`, mapping an eigenfunction of `V_m`
/// to one of `V_{m+1}` with the same energy.
///
/// The derivative uses fourth-order centered differences with one-sided
/// fourth-order stencils on the two outermost points at each end.
pub fn apply_ladder(psi: &GridFunction, m: ComplexValue, r: &RealizationParams) -> Result<GridFunction> {
    if psi.len() < 5 {
        return Err(SpectraError::InvalidGrid(
            "ladder operator needs at least 5 samples".into(),
        ));
    }
    let h = psi.spacing()?;
    if h > MAX_LADDER_SPACING {
        return Err(SpectraError::GridTooCoarse { spacing: h, limit: MAX_LADDER_SPACING });
    }
    let deriv = stencil::first_derivative(psi.values(), h);
    let shift = m + 0.5;
    let values = psi
        .xs()
        .iter()
        .zip(psi.values())
        .zip(deriv)
        .map(|((&x, &v), d)| Ok(d - shift * r.f(x)? * v + r.g(x)? * v))
        .collect::<Result<Vec<_>>>()?;
    GridFunction::new(psi.xs().to_vec(), values)
}

/// Level `n` of `V_m`: the ground state of `V_{m-n}` raised `n` times.
pub fn excited_state(r: &RealizationParams, m: ComplexValue, n: usize, xs: &[f64]) -> Result<GridFunction> {
    let bottom = m - n as f64;
    let mut psi = ground_state(r, bottom, xs)?;
    for step in 0..n {
        psi = apply_ladder(&psi, bottom + step as f64, r)?;
    }
    Ok(psi)
}

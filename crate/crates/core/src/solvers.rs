//! Inversion of the matching equations: physical potential parameters to
//! sl(2,C) realization data and representation labels.
//!
//! Each family yields a small set of branches. A branch is kept only when its
//! ground state is regular (`m_R > 1/2`, and `b_R > 0` for class III). Strict
//! inequalities are evaluated with a relative tolerance of [`REL_TOL`] so that
//! behaviour exactly at a threshold does not depend on rounding noise.

use std::f64::consts::{FRAC_PI_4, SQRT_2};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{PotentialClass, RealizationParams, SINGULAR_TOL};
use crate::error::{Result, SpectraError};

/// Relative tolerance for strict inequalities and threshold equalities.
pub const REL_TOL: f64 = 1e-12;

/// `value > bound`, with ties inside the relative tolerance counted as equal.
pub(crate) fn strictly_greater(value: f64, bound: f64) -> bool {
    value - bound > REL_TOL * bound.abs().max(value.abs()).max(1.0)
}

fn ensure_finite(values: &[(&str, f64)]) -> Result<()> {
    for (name, v) in values {
        if !v.is_finite() {
            return Err(SpectraError::InvalidSpec(format!("{name} must be finite, got {v}")));
        }
    }
    Ok(())
}

/// `V(x) = -V1 sech²x - i V2 sech x tanh x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScarfSpec {
    pub v1: f64,
    pub v2: f64,
}

impl ScarfSpec {
    /// Accepts `V1 >= 0` and `V2 != 0`.
    pub fn new(v1: f64, v2: f64) -> Result<Self> {
        ensure_finite(&[("v1", v1), ("v2", v2)])?;
        if v1 < 0.0 {
            return Err(SpectraError::InvalidSpec(format!("Scarf II needs V1 >= 0, got {v1}")));
        }
        if v2 == 0.0 {
            return Err(SpectraError::InvalidSpec("Scarf II needs V2 != 0".into()));
        }
        Ok(Self { v1, v2 })
    }

    pub fn potential(&self, x: f64) -> Complex64 {
        let sech = 1.0 / x.cosh();
        Complex64::new(-self.v1 * sech * sech, -self.v2 * sech * x.tanh())
    }
}

/// `V(x) = V1 cosech²τ - V2 cosech τ coth τ`, `τ = x - c - iγ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoschlTellerSpec {
    pub v1: f64,
    pub v2: f64,
    pub c: f64,
    pub gamma: f64,
}

impl PoschlTellerSpec {
    /// Accepts `V1 > -1/4`, `V2 != 0` and `0 < |γ| < π/4`.
    pub fn new(v1: f64, v2: f64, c: f64, gamma: f64) -> Result<Self> {
        ensure_finite(&[("v1", v1), ("v2", v2), ("c", c), ("gamma", gamma)])?;
        if !(v1 > -0.25) {
            return Err(SpectraError::InvalidSpec(format!(
                "Poschl-Teller needs V1 > -1/4, got {v1}"
            )));
        }
        if v2 == 0.0 {
            return Err(SpectraError::InvalidSpec("Poschl-Teller needs V2 != 0".into()));
        }
        if gamma == 0.0 || gamma.abs() >= FRAC_PI_4 {
            return Err(SpectraError::InvalidSpec(format!(
                "Poschl-Teller needs 0 < |gamma| < pi/4, got {gamma}"
            )));
        }
        Ok(Self { v1, v2, c, gamma })
    }

    pub fn potential(&self, x: f64) -> Result<Complex64> {
        let tau = Complex64::new(x - self.c, -self.gamma);
        let sinh = tau.sinh();
        if sinh.norm() < SINGULAR_TOL {
            return Err(SpectraError::SingularPoint { x });
        }
        let cosech = 1.0 / sinh;
        let coth = tau.cosh() * cosech;
        Ok(self.v1 * cosech * cosech - self.v2 * cosech * coth)
    }
}

/// `V(x) = (V1R + i V1I) e^{-2x} - (V2R + i V2I) e^{-x}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MorseSpec {
    pub v1r: f64,
    pub v1i: f64,
    pub v2r: f64,
    pub v2i: f64,
}

impl MorseSpec {
    /// Accepts any finite coefficients with `V1I != 0`.
    pub fn new(v1r: f64, v1i: f64, v2r: f64, v2i: f64) -> Result<Self> {
        ensure_finite(&[("v1r", v1r), ("v1i", v1i), ("v2r", v2r), ("v2i", v2i)])?;
        if v1i == 0.0 {
            return Err(SpectraError::InvalidSpec(
                "complexified Morse needs V1I != 0 for a regular ground state".into(),
            ));
        }
        Ok(Self { v1r, v1i, v2r, v2i })
    }

    pub fn v1(&self) -> Complex64 {
        Complex64::new(self.v1r, self.v1i)
    }

    pub fn v2(&self) -> Complex64 {
        Complex64::new(self.v2r, self.v2i)
    }

    pub fn potential(&self, x: f64) -> Complex64 {
        let e = (-x).exp();
        self.v1() * (e * e) - self.v2() * e
    }
}

/// Morse parameters `(A, B, γ', δ')` with `V1 = (A + iB)²`,
/// `V2R = γ' A`, `V2I = δ' B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MorseAbSpec {
    pub a: f64,
    pub b: f64,
    pub gamma_p: f64,
    pub delta_p: f64,
}

impl MorseAbSpec {
    /// Accepts `A > 0` and `B != 0`.
    pub fn new(a: f64, b: f64, gamma_p: f64, delta_p: f64) -> Result<Self> {
        ensure_finite(&[("A", a), ("B", b), ("gamma_p", gamma_p), ("delta_p", delta_p)])?;
        if !(a > 0.0) {
            return Err(SpectraError::InvalidSpec(format!("Morse (A, B) form needs A > 0, got {a}")));
        }
        if b == 0.0 {
            return Err(SpectraError::InvalidSpec("Morse (A, B) form needs B != 0".into()));
        }
        Ok(Self { a, b, gamma_p, delta_p })
    }

    /// `C = ((γ'-1) A + i(δ'-1) B) / (2 (A + iB))`; levels are `-(C - n)²`.
    pub fn c_parameter(&self) -> Complex64 {
        Complex64::new((self.gamma_p - 1.0) * self.a, (self.delta_p - 1.0) * self.b)
            / (2.0 * Complex64::new(self.a, self.b))
    }

    /// `(γ'-1) A² + (δ'-1) B²`; positive exactly when regular levels exist.
    pub fn regularity_margin(&self) -> f64 {
        (self.gamma_p - 1.0) * self.a * self.a + (self.delta_p - 1.0) * self.b * self.b
    }
}

/// Maps `(A, B, γ', δ')` to the four Morse coefficients.
pub fn morse_from_ab(spec: &MorseAbSpec) -> Result<MorseSpec> {
    let MorseAbSpec { a, b, gamma_p, delta_p } = *spec;
    MorseSpec::new(a * a - b * b, 2.0 * a * b, gamma_p * a, delta_p * b)
}

/// Family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PotentialFamily {
    Scarf2,
    PoschlTeller,
    Morse,
    MorseAb,
}

impl PotentialFamily {
    pub fn name(self) -> &'static str {
        match self {
            PotentialFamily::Scarf2 => "scarf2",
            PotentialFamily::PoschlTeller => "poschl-teller",
            PotentialFamily::Morse => "morse",
            PotentialFamily::MorseAb => "morse-ab",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "scarf2" => Some(PotentialFamily::Scarf2),
            "poschl-teller" => Some(PotentialFamily::PoschlTeller),
            "morse" => Some(PotentialFamily::Morse),
            "morse-ab" => Some(PotentialFamily::MorseAb),
            _ => None,
        }
    }
}

/// A validated physical potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PotentialSpec {
    Scarf2(ScarfSpec),
    PoschlTeller(PoschlTellerSpec),
    Morse(MorseSpec),
    MorseAb(MorseAbSpec),
}

impl PotentialSpec {
    pub fn family(&self) -> PotentialFamily {
        match self {
            PotentialSpec::Scarf2(_) => PotentialFamily::Scarf2,
            PotentialSpec::PoschlTeller(_) => PotentialFamily::PoschlTeller,
            PotentialSpec::Morse(_) => PotentialFamily::Morse,
            PotentialSpec::MorseAb(_) => PotentialFamily::MorseAb,
        }
    }

    /// Closed-form potential at `x`.
    pub fn potential(&self, x: f64) -> Result<Complex64> {
        match self {
            PotentialSpec::Scarf2(s) => Ok(s.potential(x)),
            PotentialSpec::PoschlTeller(s) => s.potential(x),
            PotentialSpec::Morse(s) => Ok(s.potential(x)),
            PotentialSpec::MorseAb(s) => Ok(morse_from_ab(s)?.potential(x)),
        }
    }

    /// `|V2| - (V1 + 1/4)` for the families with a symmetry-breaking threshold.
    pub fn threshold_distance(&self) -> Option<f64> {
        match self {
            PotentialSpec::Scarf2(s) => Some(s.v2.abs() - (s.v1 + 0.25)),
            PotentialSpec::PoschlTeller(s) => Some(s.v2.abs() - (s.v1 + 0.25)),
            _ => None,
        }
    }

    /// Named parameters in a fixed order, used for reports.
    pub fn parameters(&self) -> Vec<(&'static str, f64)> {
        match *self {
            PotentialSpec::Scarf2(s) => vec![("v1", s.v1), ("v2", s.v2)],
            PotentialSpec::PoschlTeller(s) => {
                vec![("v1", s.v1), ("v2", s.v2), ("c", s.c), ("contour_gamma", s.gamma)]
            }
            PotentialSpec::Morse(s) => {
                vec![("v1r", s.v1r), ("v1i", s.v1i), ("v2r", s.v2r), ("v2i", s.v2i)]
            }
            PotentialSpec::MorseAb(s) => vec![
                ("A", s.a),
                ("B", s.b),
                ("gamma_p", s.gamma_p),
                ("delta_p", s.delta_p),
            ],
        }
    }
}

/// Branch tag `ε = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn sign(self) -> f64 {
        match self {
            Epsilon::Plus => 1.0,
            Epsilon::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }

    pub fn from_sign(sign: f64) -> Self {
        if sign < 0.0 {
            Epsilon::Minus
        } else {
            Epsilon::Plus
        }
    }

    pub fn from_i8(value: i8) -> Option<Self> {
        match value {
            1 => Some(Epsilon::Plus),
            -1 => Some(Epsilon::Minus),
            _ => None,
        }
    }
}

/// How a branch's levels sit in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BranchKind {
    /// `m_I = 0`: a series of real energies.
    RealSeries,
    /// One of two branches with complex-conjugate `m`.
    ComplexPairMember,
    /// Complex `m` without a conjugate partner (Morse with `δ' != γ'`).
    ComplexUnpaired,
}

/// One admissible parameter branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraicSolution {
    pub realization: RealizationParams,
    pub m_r: f64,
    pub m_i: f64,
    pub epsilon: Epsilon,
    /// Levels are `n = 0, 1, ...` with `n < n_max_exclusive`.
    pub n_max_exclusive: f64,
    pub branch_kind: BranchKind,
    /// Relative mismatch of the Morse reality condition; `None` elsewhere.
    pub reality_condition_residual: Option<f64>,
}

impl AlgebraicSolution {
    pub fn m(&self) -> Complex64 {
        Complex64::new(self.m_r, self.m_i)
    }

    fn new(
        realization: RealizationParams,
        m: Complex64,
        epsilon: Epsilon,
        branch_kind: BranchKind,
    ) -> Self {
        Self {
            realization,
            m_r: m.re,
            m_i: m.im,
            epsilon,
            n_max_exclusive: m.re - 0.5,
            branch_kind,
            reality_condition_residual: None,
        }
    }
}

/// `|V2|` relative to `V1 + 1/4` for the two hyperbolic families.
enum ThresholdSide {
    Below,
    AtThreshold,
    Above,
}

fn threshold_side(v1: f64, v2: f64) -> ThresholdSide {
    let s = v1 + 0.25;
    let gap = v2.abs() - s;
    if gap.abs() <= REL_TOL * s.abs().max(v2.abs()).max(1.0) {
        ThresholdSide::AtThreshold
    } else if gap < 0.0 {
        ThresholdSide::Below
    } else {
        ThresholdSide::Above
    }
}

/// `m_R = (√(V1+1/4+|V2|) + ε √(V1+1/4-|V2|)) / 2` of a real series, before
/// the regularity filter; `None` above the threshold.
pub fn real_series_m(v1: f64, v2: f64, epsilon: Epsilon) -> Option<f64> {
    let (p, q) = real_series_roots(v1, v2)?;
    Some(0.5 * (p + epsilon.sign() * q))
}

fn real_series_roots(v1: f64, v2: f64) -> Option<(f64, f64)> {
    let s = v1 + 0.25;
    let a = v2.abs();
    match threshold_side(v1, v2) {
        ThresholdSide::Above => None,
        ThresholdSide::AtThreshold => Some(((s + a).sqrt(), 0.0)),
        ThresholdSide::Below => Some(((s + a).sqrt(), (s - a).sqrt())),
    }
}

/// Shared structure of the Scarf II and Pöschl-Teller inversions. `make_b`
/// builds `b` from `(ν, ε, first root, second root)` for each regime.
fn solve_hyperbolic(
    v1: f64,
    v2: f64,
    realization: impl Fn(Complex64) -> Result<RealizationParams>,
    real_b: impl Fn(f64, f64, f64, f64) -> Complex64,
    complex_b: impl Fn(f64, f64, f64, f64) -> Complex64,
) -> Result<Vec<AlgebraicSolution>> {
    let nu = v2.signum();
    let s = v1 + 0.25;
    let a = v2.abs();
    let mut out = Vec::new();
    match threshold_side(v1, v2) {
        ThresholdSide::Below | ThresholdSide::AtThreshold => {
            // At the threshold q = 0 and the two series coincide; both are kept.
            let (p, q) = real_series_roots(v1, v2).expect("below or at threshold");
            for eps in [Epsilon::Plus, Epsilon::Minus] {
                let m_r = 0.5 * (p + eps.sign() * q);
                if !strictly_greater(m_r, 0.5) {
                    continue;
                }
                let b = real_b(nu, eps.sign(), p, q);
                out.push(AlgebraicSolution::new(
                    realization(b)?,
                    Complex64::new(m_r, 0.0),
                    eps,
                    BranchKind::RealSeries,
                ));
            }
        }
        ThresholdSide::Above => {
            let outer = (a + s).sqrt();
            let inner = (a - s).sqrt();
            let m_r = 0.5 * outer;
            if strictly_greater(m_r, 0.5) {
                for eps in [Epsilon::Plus, Epsilon::Minus] {
                    let b = complex_b(nu, eps.sign(), outer, inner);
                    out.push(AlgebraicSolution::new(
                        realization(b)?,
                        Complex64::new(m_r, 0.5 * eps.sign() * inner),
                        eps,
                        BranchKind::ComplexPairMember,
                    ));
                }
            }
        }
    }
    if out.is_empty() {
        return Err(SpectraError::NoRegularBranch);
    }
    Ok(out)
}

/// Scarf II branches (class I, `c = γ = 0`).
///
/// Below the threshold `|V2| <= V1 + 1/4` the two real series have `b_R = 0`;
/// above it the two branches carry complex-conjugate `m`.
pub fn solve_scarf2(spec: &ScarfSpec) -> Result<Vec<AlgebraicSolution>> {
    solve_hyperbolic(
        spec.v1,
        spec.v2,
        |b| RealizationParams::new(PotentialClass::I, 0.0, 0.0, b),
        |nu, eps, p, q| Complex64::new(0.0, 0.5 * nu * (p - eps * q)),
        |nu, eps, outer, inner| Complex64::new(0.5 * nu * eps * inner, 0.5 * nu * outer),
    )
}

/// Generalized Pöschl-Teller branches (class II). The roles of `b_R` and `b_I`
/// are exchanged relative to Scarf II; `c` and `γ` only enter the realization.
pub fn solve_poschl_teller(spec: &PoschlTellerSpec) -> Result<Vec<AlgebraicSolution>> {
    let (c, gamma) = (spec.c, spec.gamma);
    solve_hyperbolic(
        spec.v1,
        spec.v2,
        |b| RealizationParams::new(PotentialClass::II, c, gamma, b),
        |nu, eps, p, q| Complex64::new(0.5 * nu * (p - eps * q), 0.0),
        |nu, eps, outer, inner| Complex64::new(0.5 * nu * outer, -0.5 * nu * eps * inner),
    )
}

/// Complexified Morse (class III, upper sign): a single branch.
///
/// With `Δ = |V1|` and `ν = sign V1I`, the regular choice gives
/// `b = ((V1R+Δ)^{1/2} + iν(−V1R+Δ)^{1/2}) / √2` (so `b_R > 0`) and
/// `m = V2 / (2b)`. The branch is real exactly when
/// `(V1R+Δ)^{1/2} V2I = ν (−V1R+Δ)^{1/2} V2R`.
pub fn solve_morse(spec: &MorseSpec) -> Result<Vec<AlgebraicSolution>> {
    let MorseSpec { v1r, v1i, v2r, v2i } = *spec;
    if v1i == 0.0 {
        return Err(SpectraError::InvalidSpec("Morse needs V1I != 0".into()));
    }
    let delta = v1r.hypot(v1i);
    let nu = v1i.signum();
    // Avoid cancellation in the smaller of V1R + Δ and -V1R + Δ.
    let (p_sq, q_sq) = if v1r >= 0.0 {
        let p_sq = v1r + delta;
        (p_sq, v1i * v1i / p_sq)
    } else {
        let q_sq = -v1r + delta;
        (v1i * v1i / q_sq, q_sq)
    };
    let (p, q) = (p_sq.sqrt(), q_sq.sqrt());
    let b = Complex64::new(p / SQRT_2, nu * q / SQRT_2);

    let scale = 1.0 / (2.0 * SQRT_2 * delta);
    let m_r = scale * (p * v2r + nu * q * v2i);
    let mut m_i = scale * (p * v2i - nu * q * v2r);

    let lhs = p * v2i;
    let rhs = nu * q * v2r;
    let size = lhs.abs().max(rhs.abs());
    let residual = if size == 0.0 { 0.0 } else { (lhs - rhs).abs() / size };
    let kind = if residual <= REL_TOL {
        m_i = 0.0;
        BranchKind::RealSeries
    } else {
        BranchKind::ComplexUnpaired
    };

    if !(b.re > 0.0) || !strictly_greater(m_r, 0.5) {
        return Err(SpectraError::NoRegularBranch);
    }
    let realization = RealizationParams::new(PotentialClass::IIIUpper, 0.0, 0.0, b)?;
    let mut sol = AlgebraicSolution::new(
        realization,
        Complex64::new(m_r, m_i),
        Epsilon::from_sign(nu),
        kind,
    );
    sol.reality_condition_residual = Some(residual);
    Ok(vec![sol])
}

/// Dispatches to the family solver.
pub fn solve(spec: &PotentialSpec) -> Result<Vec<AlgebraicSolution>> {
    match spec {
        PotentialSpec::Scarf2(s) => solve_scarf2(s),
        PotentialSpec::PoschlTeller(s) => solve_poschl_teller(s),
        PotentialSpec::Morse(s) => solve_morse(s),
        PotentialSpec::MorseAb(s) => solve_morse(&morse_from_ab(s)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn scarf_real_example() {
        let sols = solve_scarf2(&ScarfSpec::new(9.75, 6.0).unwrap()).unwrap();
        assert_eq!(sols.len(), 2);
        let plus = sols.iter().find(|s| s.epsilon == Epsilon::Plus).unwrap();
        let minus = sols.iter().find(|s| s.epsilon == Epsilon::Minus).unwrap();
        assert!((plus.m_r - 3.0).abs() < 1e-14 && plus.m_i == 0.0);
        assert!((plus.n_max_exclusive - 2.5).abs() < 1e-14);
        assert!((plus.realization.b() - Complex64::new(0.0, 1.0)).norm() < 1e-14);
        assert!((minus.m_r - 1.0).abs() < 1e-14);
        assert!((minus.n_max_exclusive - 0.5).abs() < 1e-14);
        assert!((minus.realization.b() - Complex64::new(0.0, 3.0)).norm() < 1e-14);
        assert!(sols.iter().all(|s| s.branch_kind == BranchKind::RealSeries));
    }

    #[test]
    fn scarf_minus_branch_rejected_at_regularity_boundary() {
        // sqrt(9) - sqrt(4) = 1, so m_R = 1/2 exactly for epsilon = -1.
        let sols = solve_scarf2(&ScarfSpec::new(6.25, 2.5).unwrap()).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].epsilon, Epsilon::Plus);
        assert!((sols[0].m_r - 2.5).abs() < 1e-14);
    }

    #[test]
    fn scarf_complex_example() {
        let sols = solve_scarf2(&ScarfSpec::new(0.0, 5.0).unwrap()).unwrap();
        assert_eq!(sols.len(), 2);
        for s in &sols {
            assert_eq!(s.branch_kind, BranchKind::ComplexPairMember);
            assert!((s.m_r - 0.5 * 5.25f64.sqrt()).abs() < 1e-14);
            assert!((s.m_i.abs() - 0.5 * 4.75f64.sqrt()).abs() < 1e-14);
            assert!((s.n_max_exclusive - (5.25f64.sqrt() - 1.0) / 2.0).abs() < 1e-14);
            assert!((s.n_max_exclusive - 0.6457).abs() < 1e-4);
        }
        assert!((sols[0].m() - sols[1].m().conj()).norm() < 1e-14);
    }

    #[test]
    fn scarf_threshold_merges() {
        let sols = solve_scarf2(&ScarfSpec::new(1.0, 1.25).unwrap()).unwrap();
        assert_eq!(sols.len(), 2);
        assert!(sols.iter().all(|s| s.branch_kind == BranchKind::RealSeries));
        assert!(sols.iter().all(|s| (s.m_r - 0.5 * 2.5f64.sqrt()).abs() < 1e-14));
        assert_eq!(sols[0].realization.b(), sols[1].realization.b());
        let plus = real_series_m(1.0, 1.25, Epsilon::Plus).unwrap();
        let minus = real_series_m(1.0, 1.25, Epsilon::Minus).unwrap();
        assert_eq!(plus, minus);
        // Rounding noise on the sample still lands on the threshold.
        let noisy = solve_scarf2(&ScarfSpec::new(1.0, 0.1 + 23.0 * 0.05).unwrap()).unwrap();
        assert_eq!(noisy.len(), 2);
        assert_eq!(noisy[0].m(), noisy[1].m());
    }

    #[test]
    fn scarf_without_regular_branch() {
        assert_eq!(
            solve_scarf2(&ScarfSpec::new(0.0, 0.1).unwrap()),
            Err(SpectraError::NoRegularBranch)
        );
    }

    #[test]
    fn scarf_spec_validation() {
        assert!(ScarfSpec::new(-1.0, 1.0).is_err());
        assert!(ScarfSpec::new(1.0, 0.0).is_err());
        assert!(ScarfSpec::new(f64::NAN, 1.0).is_err());
        assert!(ScarfSpec::new(0.0, 5.0).is_ok());
    }

    #[test]
    fn negative_v2_flips_b_keeps_m() {
        let pos = solve_scarf2(&ScarfSpec::new(9.75, 6.0).unwrap()).unwrap();
        let neg = solve_scarf2(&ScarfSpec::new(9.75, -6.0).unwrap()).unwrap();
        for (p, n) in pos.iter().zip(&neg) {
            assert_eq!(p.m(), n.m());
            assert_eq!(p.realization.b(), -n.realization.b());
        }
        let spec = PoschlTellerSpec::new(9.75, -6.0, 0.0, PI / 8.0).unwrap();
        let pt = solve_poschl_teller(&spec).unwrap();
        assert!(pt.iter().all(|s| s.realization.b_r() < 0.0));
        let m: Vec<f64> = pt.iter().map(|s| s.m_r).collect();
        assert_eq!(m, vec![3.0, 1.0]);
    }

    #[test]
    fn poschl_teller_examples() {
        let real = solve_poschl_teller(&PoschlTellerSpec::new(9.75, 6.0, 0.0, PI / 8.0).unwrap())
            .unwrap();
        assert_eq!(real.len(), 2);
        assert_eq!(real[0].realization.class(), PotentialClass::II);
        assert!((real[0].realization.b() - Complex64::new(1.0, 0.0)).norm() < 1e-14);
        assert!((real[1].realization.b() - Complex64::new(3.0, 0.0)).norm() < 1e-14);

        let cplx = solve_poschl_teller(&PoschlTellerSpec::new(0.0, 5.0, 0.0, -PI / 8.0).unwrap())
            .unwrap();
        assert_eq!(cplx.len(), 2);
        assert!(cplx.iter().all(|s| s.branch_kind == BranchKind::ComplexPairMember));
        assert!((cplx[0].m() - cplx[1].m().conj()).norm() < 1e-14);
    }

    #[test]
    fn poschl_teller_spec_validation() {
        assert!(PoschlTellerSpec::new(-0.3, 1.0, 0.0, 0.2).is_err());
        assert!(PoschlTellerSpec::new(1.0, 1.0, 0.0, 0.0).is_err());
        assert!(PoschlTellerSpec::new(1.0, 1.0, 0.0, FRAC_PI_4).is_err());
        assert!(PoschlTellerSpec::new(1.0, 0.0, 0.0, 0.2).is_err());
        assert!(PoschlTellerSpec::new(-0.2, 1.0, 0.0, -0.2).is_ok());
    }

    #[test]
    fn morse_ab_mapping() {
        let spec = MorseAbSpec::new(1.0, 1.0, 3.0, 3.0).unwrap();
        assert_eq!(morse_from_ab(&spec).unwrap(), MorseSpec::new(0.0, 2.0, 3.0, 3.0).unwrap());
        assert!((spec.c_parameter() - Complex64::new(1.0, 0.0)).norm() < 1e-15);

        let edge = MorseAbSpec::new(2.0, -1.0, 1.0, 1.0).unwrap();
        assert_eq!(morse_from_ab(&edge).unwrap(), MorseSpec::new(3.0, -4.0, 2.0, -1.0).unwrap());
        assert_eq!(edge.c_parameter(), Complex64::new(0.0, 0.0));
        assert_eq!(edge.regularity_margin(), 0.0);

        let flat = MorseAbSpec::new(1.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(morse_from_ab(&flat).unwrap(), MorseSpec::new(0.0, 2.0, 1.0, 1.0).unwrap());
        assert_eq!(
            solve(&PotentialSpec::MorseAb(flat)),
            Err(SpectraError::NoRegularBranch)
        );
        assert_eq!(
            solve(&PotentialSpec::MorseAb(edge)),
            Err(SpectraError::NoRegularBranch)
        );
        assert!(MorseAbSpec::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(MorseAbSpec::new(1.0, 0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn morse_real_example() {
        let spec = morse_from_ab(&MorseAbSpec::new(1.0, 1.0, 3.0, 3.0).unwrap()).unwrap();
        let sols = solve_morse(&spec).unwrap();
        assert_eq!(sols.len(), 1);
        let s = sols[0];
        assert_eq!(s.branch_kind, BranchKind::RealSeries);
        assert!((s.m_r - 1.5).abs() < 1e-14);
        assert_eq!(s.m_i, 0.0);
        assert!((s.realization.b() - Complex64::new(1.0, 1.0)).norm() < 1e-14);
        assert!((s.n_max_exclusive - 1.0).abs() < 1e-14);
    }

    #[test]
    fn morse_complex_example() {
        let spec = morse_from_ab(&MorseAbSpec::new(1.0, 1.0, 3.0, 5.0).unwrap()).unwrap();
        let s = solve_morse(&spec).unwrap()[0];
        assert_eq!(s.branch_kind, BranchKind::ComplexUnpaired);
        assert!((s.m() - Complex64::new(2.0, 0.5)).norm() < 1e-14);
        assert!(s.reality_condition_residual.unwrap() > 0.1);
    }

    #[test]
    fn morse_negative_v1i_keeps_b_r_positive() {
        let spec = MorseSpec::new(-1.0, -3.0, 6.0, -2.0).unwrap();
        let s = solve_morse(&spec).unwrap()[0];
        assert!(s.realization.b_r() > 0.0);
        assert!(s.realization.b_i() < 0.0);
        assert_eq!(s.epsilon, Epsilon::Minus);
        let b = s.realization.b();
        assert!((b * b - spec.v1()).norm() < 1e-12);
        assert!((2.0 * s.m() * b - spec.v2()).norm() < 1e-12);
    }

    #[test]
    fn morse_invalid_spec() {
        assert!(MorseSpec::new(1.0, 0.0, 1.0, 1.0).is_err());
        let raw = MorseSpec { v1r: 1.0, v1i: 0.0, v2r: 1.0, v2i: 1.0 };
        assert!(matches!(solve_morse(&raw), Err(SpectraError::InvalidSpec(_))));
    }

    #[test]
    fn family_names_round_trip() {
        for f in [
            PotentialFamily::Scarf2,
            PotentialFamily::PoschlTeller,
            PotentialFamily::Morse,
            PotentialFamily::MorseAb,
        ] {
            assert_eq!(PotentialFamily::from_name(f.name()), Some(f));
        }
        assert_eq!(PotentialFamily::from_name("harmonic"), None);
    }
}

//! Level enumeration, classification and parameter sweeps.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{energy_level, RepresentationLabel};
use crate::error::{Result, SpectraError};
use crate::solvers::{
    solve, strictly_greater, AlgebraicSolution, BranchKind, MorseAbSpec, MorseSpec,
    PoschlTellerSpec, PotentialFamily, PotentialSpec, ScarfSpec, REL_TOL,
};

/// One bound state of a branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenLevel {
    pub n: usize,
    pub energy: Complex64,
    /// Branch tag, `+1` or `-1`.
    pub epsilon: i8,
    pub regular: bool,
}

/// Levels `n = 0, 1, ...` with `n < n_max_exclusive` (strict; a level exactly
/// on the bound, up to the relative tolerance, is excluded).
pub fn enumerate_levels(sol: &AlgebraicSolution) -> Vec<EigenLevel> {
    let m = sol.m();
    (0..)
        .take_while(|&n| strictly_greater(sol.n_max_exclusive, n as f64))
        .map(|n| EigenLevel {
            n,
            energy: energy_level(&RepresentationLabel::new(m, n)),
            epsilon: sol.epsilon.as_i8(),
            regular: true,
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    AllReal,
    BrokenConjugatePairs,
    ComplexUnpaired,
    Empty,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::AllReal => "AllReal",
            Classification::BrokenConjugatePairs => "BrokenConjugatePairs",
            Classification::ComplexUnpaired => "ComplexUnpaired",
            Classification::Empty => "Empty",
        }
    }
}

/// A branch together with its levels.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchSpectrum {
    pub solution: AlgebraicSolution,
    pub levels: Vec<EigenLevel>,
}

/// Full closed-form description of one potential.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub spec: PotentialSpec,
    pub branches: Vec<BranchSpectrum>,
    pub classification: Classification,
    pub pt_symmetric: bool,
    /// `|V2| - (V1 + 1/4)` for Scarf II and Pöschl-Teller.
    pub threshold_distance: Option<f64>,
}

impl SpectrumReport {
    /// Report for a potential without any regular branch.
    pub fn empty(spec: &PotentialSpec) -> Result<Self> {
        Ok(Self {
            spec: *spec,
            branches: Vec::new(),
            classification: Classification::Empty,
            pt_symmetric: is_pt_symmetric(spec, &pt_samples())?,
            threshold_distance: spec.threshold_distance(),
        })
    }

    /// All levels, branch by branch.
    pub fn levels(&self) -> impl Iterator<Item = &EigenLevel> + '_ {
        self.branches.iter().flat_map(|b| b.levels.iter())
    }

    pub fn levels_vec(&self) -> Vec<EigenLevel> {
        self.levels().copied().collect()
    }

    /// Levels of branches with `m_I = 0`.
    pub fn real_level_count(&self) -> usize {
        self.branches
            .iter()
            .filter(|b| b.solution.branch_kind == BranchKind::RealSeries)
            .map(|b| b.levels.len())
            .sum()
    }

    /// Number of conjugate pairs formed across the two broken branches.
    pub fn complex_pair_count(&self) -> usize {
        let paired: usize = self
            .branches
            .iter()
            .filter(|b| b.solution.branch_kind == BranchKind::ComplexPairMember)
            .map(|b| b.levels.len())
            .sum();
        paired / 2
    }

    pub fn find_level(&self, epsilon: i8, n: usize) -> Option<(&BranchSpectrum, &EigenLevel)> {
        self.branches
            .iter()
            .filter(|b| b.solution.epsilon.as_i8() == epsilon)
            .find_map(|b| b.levels.iter().find(|l| l.n == n).map(|l| (b, l)))
    }
}

fn conjugate_partners(a: &AlgebraicSolution, b: &AlgebraicSolution) -> bool {
    let (ma, mb) = (a.m(), b.m());
    (ma - mb.conj()).norm() <= REL_TOL * ma.norm().max(1.0) && ma.im != 0.0
}

/// Builds the report for solver output `branches`.
pub fn classify(spec: &PotentialSpec, branches: Vec<AlgebraicSolution>) -> Result<SpectrumReport> {
    let branches: Vec<BranchSpectrum> = branches
        .into_iter()
        .map(|solution| BranchSpectrum { levels: enumerate_levels(&solution), solution })
        .collect();
    let has_levels = branches.iter().any(|b| !b.levels.is_empty());
    let kinds = |k: BranchKind| branches.iter().filter(move |b| b.solution.branch_kind == k);
    let classification = if !has_levels {
        Classification::Empty
    } else if kinds(BranchKind::ComplexPairMember).count() == 2
        && conjugate_partners(
            &kinds(BranchKind::ComplexPairMember).next().unwrap().solution,
            &kinds(BranchKind::ComplexPairMember).nth(1).unwrap().solution,
        )
    {
        Classification::BrokenConjugatePairs
    } else if branches.iter().all(|b| b.solution.branch_kind == BranchKind::RealSeries) {
        Classification::AllReal
    } else {
        Classification::ComplexUnpaired
    };
    Ok(SpectrumReport {
        spec: *spec,
        branches,
        classification,
        pt_symmetric: is_pt_symmetric(spec, &pt_samples())?,
        threshold_distance: spec.threshold_distance(),
    })
}

/// Solves and classifies `spec`.
pub fn analyze(spec: &PotentialSpec) -> Result<SpectrumReport> {
    classify(spec, solve(spec)?)
}

/// Tolerance of [`is_pt_symmetric`].
pub const PT_TOL: f64 = 1e-10;

/// 201 points on `[-8, 8]`.
pub fn pt_samples() -> Vec<f64> {
    (0..=200).map(|i| -8.0 + 0.08 * i as f64).collect()
}

/// `max |V(-x)* - V(x)| < 1e-10` over the samples `xs`.
pub fn is_pt_symmetric(spec: &PotentialSpec, xs: &[f64]) -> Result<bool> {
    let mut worst = 0.0f64;
    for &x in xs {
        let d = spec.potential(-x)?.conj() - spec.potential(x)?;
        worst = worst.max(d.norm());
    }
    Ok(worst < PT_TOL)
}

/// A parameter that a scan can vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SweepParameter {
    V1,
    V2,
    V1r,
    V1i,
    V2r,
    V2i,
    C,
    ContourGamma,
    A,
    B,
    GammaP,
    DeltaP,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::V1 => "v1",
            SweepParameter::V2 => "v2",
            SweepParameter::V1r => "v1r",
            SweepParameter::V1i => "v1i",
            SweepParameter::V2r => "v2r",
            SweepParameter::V2i => "v2i",
            SweepParameter::C => "c",
            SweepParameter::ContourGamma => "contour-gamma",
            SweepParameter::A => "A",
            SweepParameter::B => "B",
            SweepParameter::GammaP => "gamma-p",
            SweepParameter::DeltaP => "delta-p",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        const ALL: [SweepParameter; 12] = [
            SweepParameter::V1,
            SweepParameter::V2,
            SweepParameter::V1r,
            SweepParameter::V1i,
            SweepParameter::V2r,
            SweepParameter::V2i,
            SweepParameter::C,
            SweepParameter::ContourGamma,
            SweepParameter::A,
            SweepParameter::B,
            SweepParameter::GammaP,
            SweepParameter::DeltaP,
        ];
        ALL.into_iter().find(|p| p.name() == name)
    }

    /// `spec` with this parameter replaced by `value`, revalidated.
    pub fn apply(self, spec: &PotentialSpec, value: f64) -> Result<PotentialSpec> {
        use SweepParameter as P;
        let mismatch = || {
            Err(SpectraError::InvalidSpec(format!(
                "parameter {} does not belong to family {}",
                self.name(),
                spec.family().name()
            )))
        };
        Ok(match *spec {
            PotentialSpec::Scarf2(s) => PotentialSpec::Scarf2(match self {
                P::V1 => ScarfSpec::new(value, s.v2)?,
                P::V2 => ScarfSpec::new(s.v1, value)?,
                _ => return mismatch(),
            }),
            PotentialSpec::PoschlTeller(s) => PotentialSpec::PoschlTeller(match self {
                P::V1 => PoschlTellerSpec::new(value, s.v2, s.c, s.gamma)?,
                P::V2 => PoschlTellerSpec::new(s.v1, value, s.c, s.gamma)?,
                P::C => PoschlTellerSpec::new(s.v1, s.v2, value, s.gamma)?,
                P::ContourGamma => PoschlTellerSpec::new(s.v1, s.v2, s.c, value)?,
                _ => return mismatch(),
            }),
            PotentialSpec::Morse(s) => PotentialSpec::Morse(match self {
                P::V1r => MorseSpec::new(value, s.v1i, s.v2r, s.v2i)?,
                P::V1i => MorseSpec::new(s.v1r, value, s.v2r, s.v2i)?,
                P::V2r => MorseSpec::new(s.v1r, s.v1i, value, s.v2i)?,
                P::V2i => MorseSpec::new(s.v1r, s.v1i, s.v2r, value)?,
                _ => return mismatch(),
            }),
            PotentialSpec::MorseAb(s) => PotentialSpec::MorseAb(match self {
                P::A => MorseAbSpec::new(value, s.b, s.gamma_p, s.delta_p)?,
                P::B => MorseAbSpec::new(s.a, value, s.gamma_p, s.delta_p)?,
                P::GammaP => MorseAbSpec::new(s.a, s.b, value, s.delta_p)?,
                P::DeltaP => MorseAbSpec::new(s.a, s.b, s.gamma_p, value)?,
                _ => return mismatch(),
            }),
        })
    }
}

/// One sample of a parameter sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseDiagramRow {
    pub value: f64,
    pub real_level_count: usize,
    pub complex_pair_count: usize,
    pub classification: Classification,
}

/// Sample values `from + i·step` up to `to` (inclusive, with a small slack).
pub fn sweep_values(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(from.is_finite() && to.is_finite() && step.is_finite()) {
        return Err(SpectraError::InvalidSpec("sweep bounds must be finite".into()));
    }
    if !(step > 0.0) {
        return Err(SpectraError::InvalidSpec(format!("sweep step must be > 0, got {step}")));
    }
    if from > to {
        return Err(SpectraError::InvalidSpec(format!("empty sweep range [{from}, {to}]")));
    }
    let count = ((to - from) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| from + i as f64 * step).collect())
}

/// Classifies `base` with `param` set to each sample value. Samples without a
/// regular branch are reported as [`Classification::Empty`].
pub fn scan(
    base: &PotentialSpec,
    param: SweepParameter,
    from: f64,
    to: f64,
    step: f64,
) -> Result<Vec<PhaseDiagramRow>> {
    sweep_values(from, to, step)?
        .into_iter()
        .map(|value| {
            let spec = param.apply(base, value)?;
            let report = match analyze(&spec) {
                Err(SpectraError::NoRegularBranch) => SpectrumReport::empty(&spec)?,
                other => other?,
            };
            Ok(PhaseDiagramRow {
                value,
                real_level_count: report.real_level_count(),
                complex_pair_count: report.complex_pair_count(),
                classification: report.classification,
            })
        })
        .collect()
}

/// Contour shift used by [`scan_threshold`] for Pöschl-Teller.
pub const THRESHOLD_SCAN_GAMMA: f64 = std::f64::consts::PI / 8.0;

/// Sweeps `V2` over `[from, to]` at fixed `V1` for Scarf II (or Pöschl-Teller
/// with `c = 0`, `γ = π/8`).
pub fn scan_threshold(
    family: PotentialFamily,
    v1: f64,
    from: f64,
    to: f64,
    step: f64,
) -> Result<Vec<PhaseDiagramRow>> {
    let values = sweep_values(from, to, step)?;
    // Any nonzero V2 works as a placeholder; `scan` replaces it.
    let seed = values.iter().copied().find(|v| *v != 0.0).unwrap_or(1.0);
    let base = match family {
        PotentialFamily::Scarf2 => PotentialSpec::Scarf2(ScarfSpec::new(v1, seed)?),
        PotentialFamily::PoschlTeller => PotentialSpec::PoschlTeller(PoschlTellerSpec::new(
            v1,
            seed,
            0.0,
            THRESHOLD_SCAN_GAMMA,
        )?),
        other => {
            return Err(SpectraError::InvalidSpec(format!(
                "family {} has no V2 threshold",
                other.name()
            )))
        }
    };
    scan(&base, SweepParameter::V2, from, to, step)
}

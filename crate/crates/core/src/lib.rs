//! Closed-form bound-state spectra of complexified exactly solvable potentials.
//!
//! The three potential families handled here (Scarf II, generalized
//! Pöschl-Teller, Morse) all arise from differential realizations of the
//! complex Lie algebra sl(2,C) acting as a potential algebra. Each physical
//! potential is mapped back to realization data `(class, c, γ, b)` plus a
//! complex representation label `m`; energies then follow from
//! `E_n = -(m - n - 1/2)^2` and eigenfunctions from a first-order ground-state
//! equation and a ladder operator.
//!
//! Every closed-form result can be checked against an independent
//! finite-difference discretization of the non-Hermitian Schrödinger
//! operator, see [`numerics`].
//!
//! ```
//! use spectra::{analyze, PotentialSpec, ScarfSpec, Classification};
//!
//! let spec = PotentialSpec::Scarf2(ScarfSpec::new(9.75, 6.0).unwrap());
//! let report = analyze(&spec).unwrap();
//! assert_eq!(report.classification, Classification::AllReal);
//! assert_eq!(report.levels().count(), 4);
//! ```

pub mod algebra;
pub mod cli;
pub mod error;
pub mod numerics;
pub mod report;
pub mod solvers;
pub mod spectrum;

pub use algebra::{
    apply_ladder, energy_level, excited_state, ground_state, potential_closed_form,
    potential_from_algebra, ComplexValue, GridFunction, PotentialClass, RealizationParams,
    RepresentationLabel,
};
pub use error::{Result, SpectraError};
pub use solvers::{
    morse_from_ab, solve, solve_morse, solve_poschl_teller, solve_scarf2, AlgebraicSolution,
    BranchKind, Epsilon, MorseAbSpec, MorseSpec, PoschlTellerSpec, PotentialFamily,
    PotentialSpec, ScarfSpec,
};
pub use spectrum::{
    analyze, classify, enumerate_levels, is_pt_symmetric, scan, scan_threshold, BranchSpectrum,
    Classification, EigenLevel, PhaseDiagramRow, SpectrumReport, SweepParameter,
};

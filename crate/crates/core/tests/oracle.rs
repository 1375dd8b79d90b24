use std::f64::consts::PI;

use num_complex::Complex64;
use spectra::numerics::{self, default_domain, Grid, MatchReport, DEFAULT_MATCH_TOL};
use spectra::{analyze, EigenLevel, MorseAbSpec, PoschlTellerSpec, PotentialSpec, ScarfSpec};

fn scarf(v1: f64, v2: f64) -> PotentialSpec {
    PotentialSpec::Scarf2(ScarfSpec::new(v1, v2).unwrap())
}

fn pt(gamma: f64) -> PotentialSpec {
    PotentialSpec::PoschlTeller(PoschlTellerSpec::new(9.75, 6.0, 0.0, gamma).unwrap())
}

fn morse_ab(delta: f64) -> PotentialSpec {
    PotentialSpec::MorseAb(MorseAbSpec::new(1.0, 1.0, 3.0, delta).unwrap())
}

fn levels(spec: &PotentialSpec) -> Vec<EigenLevel> {
    analyze(spec).unwrap().levels_vec()
}

fn run(spec: &PotentialSpec, x_min: f64, x_max: f64, n: usize) -> MatchReport {
    let grid = Grid::new(x_min, x_max, n).unwrap();
    numerics::verify_levels(spec, &levels(spec), &grid, DEFAULT_MATCH_TOL).unwrap()
}

fn run_default_domain(spec: &PotentialSpec, n: usize) -> MatchReport {
    let (a, b) = default_domain(spec, &levels(spec));
    run(spec, a, b, n)
}

/// Every level matched, and no bound-state-like eigenvalue sits below the
/// closed-form ground level.
fn assert_complete(name: &str, report: &MatchReport) {
    for l in &report.levels {
        assert!(l.matched, "{name}: level ({}, {}) {l:?}", l.epsilon, l.n);
    }
    let ground = report.levels.iter().map(|l| l.closed.re).fold(f64::INFINITY, f64::min);
    for z in &report.unclaimed_decaying {
        assert!(z.re >= ground - report.tolerance, "{name}: missed bound state at {z}");
    }
}

#[test]
fn convergence_is_fourth_order() {
    let spec = scarf(9.75, 6.0);
    let coarse = run(&spec, -10.0, 10.0, 200);
    let fine = run(&spec, -10.0, 10.0, 401);
    assert!((Grid::new(-10.0, 10.0, 200).unwrap().spacing() / Grid::new(-10.0, 10.0, 401).unwrap().spacing() - 2.0).abs() < 1e-12);
    let mut checked = 0;
    for (c, f) in coarse.levels.iter().zip(&fine.levels) {
        if c.cluster.len() > 1 {
            continue;
        }
        let factor = c.abs_error / f.abs_error;
        assert!(factor >= 8.0, "level {} error {:e} -> {:e}", c.closed, c.abs_error, f.abs_error);
        checked += 1;
    }
    assert_eq!(checked, 2);
}

#[test]
fn worked_examples_are_complete() {
    assert_complete("scarf real", &run_default_domain(&scarf(9.75, 6.0), 1200));
    assert_complete("scarf broken", &run_default_domain(&scarf(0.0, 5.0), 1200));
    assert_complete("poschl-teller", &run_default_domain(&pt(PI / 8.0), 1200));
    assert_complete("morse real", &run_default_domain(&morse_ab(3.0), 1000));
    assert_complete("morse complex", &run_default_domain(&morse_ab(5.0), 1000));
}

#[test]
fn contour_shift_does_not_move_levels() {
    // The cosech poles sit γ away from the contour, so the smaller shift
    // needs a finer grid than the other examples.
    let a = run_default_domain(&pt(PI / 8.0), 2000);
    let b = run_default_domain(&pt(PI / 16.0), 2000);
    assert!(a.all_matched() && b.all_matched(), "{:#?}\n{:#?}", a.levels, b.levels);
    for (x, y) in a.levels.iter().zip(&b.levels) {
        let (x, y) = (x.numeric.unwrap(), y.numeric.unwrap());
        assert!((x - y).norm() < 2e-3, "{x} vs {y}");
    }
}

#[test]
fn morse_right_wall_is_far_enough() {
    let spec = morse_ab(5.0);
    // Same spacing on both domains, so only the wall position changes.
    let near = run(&spec, -4.0, 30.0, 849);
    let far = run(&spec, -4.0, 40.0, 1099);
    assert!(near.all_matched() && far.all_matched());
    for (x, y) in near.levels.iter().zip(&far.levels) {
        let d = (x.numeric.unwrap() - y.numeric.unwrap()).norm();
        assert!(d < 1e-4, "level {}: moved by {d:e}", x.closed);
    }
}

#[test]
fn coarse_grid_is_flagged() {
    let report = run_default_domain(&scarf(9.75, 6.0), 64);
    assert!(!report.all_matched());
}

#[test]
fn wrong_closed_form_is_flagged() {
    let spec = scarf(9.75, 6.0);
    let mut fake = levels(&spec);
    fake[1].energy = Complex64::new(-4.0, 0.0);
    let grid = Grid::new(-15.0, 15.0, 600).unwrap();
    let report = numerics::verify_levels(&spec, &fake, &grid, DEFAULT_MATCH_TOL).unwrap();
    assert!(report.levels[0].matched);
    assert!(!report.levels[1].matched);
    assert!(report.levels[1].abs_error > 1.0);
}

//! Command-line front end.
//!
//! Each subcommand returns an [`Outcome`] rather than exiting, so the binary
//! stays a one-liner and the commands are testable in process.
//!
//! Exit codes: `0` success, `2` invalid input or missing level, `3` no regular
//! branch, `4` unmatched level or failed residual, `5` eigensolver failure.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::excited_state;
use crate::error::SpectraError;
use crate::numerics::{self, default_domain, default_n_points, Grid, DEFAULT_MATCH_TOL};
use crate::report;
use crate::solvers::{MorseAbSpec, MorseSpec, PoschlTellerSpec, PotentialSpec, ScarfSpec};
use crate::spectrum::{analyze, scan, SpectrumReport, SweepParameter};

/// Residual threshold of `verify --from-file`.
pub const FILE_RESIDUAL_TOL: f64 = 1e-5;
/// Sample spacing of `wavefunction` when `--n-points` is not given.
pub const WAVEFUNCTION_SPACING: f64 = 0.01;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NO_BRANCH: i32 = 3;
pub const EXIT_UNMATCHED: i32 = 4;
pub const EXIT_NO_CONVERGENCE: i32 = 5;
pub const EXIT_OTHER: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "spectra", version, about = "Closed-form spectra of complexified Scarf II, Pöschl-Teller and Morse potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form branches, levels and classification.
    Analyze {
        #[command(flatten)]
        potential: PotentialArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classification over a parameter sweep.
    Scan {
        #[command(flatten)]
        potential: PotentialArgs,
        /// Parameter to vary, named like its flag (v2, delta-p, ...).
        #[arg(long)]
        sweep: String,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        step: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare closed-form levels with the finite-difference oracle, or check
    /// an exported wavefunction.
    Verify {
        #[command(flatten)]
        potential: PotentialArgs,
        #[command(flatten)]
        grid: GridArgs,
        /// CSV with columns x, re_psi, im_psi to test against level (epsilon, n).
        #[arg(long)]
        from_file: Option<PathBuf>,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i8,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Export the closed-form eigenfunction of level (epsilon, n).
    Wavefunction {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        epsilon: i8,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Scarf2,
    PoschlTeller,
    Morse,
    MorseAb,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, allow_hyphen_values = true)]
    pub v1: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub v2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub v1r: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub v1i: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub v2r: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub v2i: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub c: f64,
    #[arg(long = "contour-gamma", allow_hyphen_values = true)]
    pub contour_gamma: Option<f64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long = "gamma-p", allow_hyphen_values = true)]
    pub gamma_p: Option<f64>,
    #[arg(long = "delta-p", allow_hyphen_values = true)]
    pub delta_p: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub x_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub n_points: Option<usize>,
    /// Absolute matching tolerance.
    #[arg(long, default_value_t = DEFAULT_MATCH_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Defaults to json for analyze and csv for the other commands.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the document here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Exit code plus the text destined for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn document(exit_code: i32, text: String) -> Self {
        Self { exit_code, stdout: text, stderr: String::new() }
    }

    fn failure(exit_code: i32, err: &SpectraError) -> Self {
        Self { exit_code, stdout: String::new(), stderr: format!("error: {err}\n") }
    }
}

fn exit_code_for(err: &SpectraError) -> i32 {
    match err {
        SpectraError::InvalidSpec(_)
        | SpectraError::InvalidGrid(_)
        | SpectraError::GridTooCoarse { .. }
        | SpectraError::SingularPoint { .. }
        | SpectraError::BranchCutCrossing { .. }
        | SpectraError::LevelNotFound { .. } => EXIT_INVALID,
        SpectraError::NoRegularBranch => EXIT_NO_BRANCH,
        SpectraError::NoConvergence(_) => EXIT_NO_CONVERGENCE,
        SpectraError::EmptyFunction => EXIT_UNMATCHED,
    }
}

fn require(value: Option<f64>, flag: &str) -> Result<f64, SpectraError> {
    value.ok_or_else(|| SpectraError::InvalidSpec(format!("missing --{flag}")))
}

impl PotentialArgs {
    pub fn to_spec(&self) -> Result<PotentialSpec, SpectraError> {
        Ok(match self.family {
            FamilyArg::Scarf2 => {
                PotentialSpec::Scarf2(ScarfSpec::new(require(self.v1, "v1")?, require(self.v2, "v2")?)?)
            }
            FamilyArg::PoschlTeller => PotentialSpec::PoschlTeller(PoschlTellerSpec::new(
                require(self.v1, "v1")?,
                require(self.v2, "v2")?,
                self.c,
                require(self.contour_gamma, "contour-gamma")?,
            )?),
            FamilyArg::Morse => PotentialSpec::Morse(MorseSpec::new(
                require(self.v1r, "v1r")?,
                require(self.v1i, "v1i")?,
                require(self.v2r, "v2r")?,
                require(self.v2i, "v2i")?,
            )?),
            FamilyArg::MorseAb => PotentialSpec::MorseAb(MorseAbSpec::new(
                require(self.a, "A")?,
                require(self.b, "B")?,
                require(self.gamma_p, "gamma-p")?,
                require(self.delta_p, "delta-p")?,
            )?),
        })
    }
}

fn emit(output: &OutputArgs, exit_code: i32, text: String) -> Outcome {
    match &output.output {
        None => Outcome::document(exit_code, text),
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome::document(exit_code, String::new()),
            Err(e) => Outcome {
                exit_code: EXIT_OTHER,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
    }
}

fn oracle_grid(spec: &PotentialSpec, report: &SpectrumReport, args: &GridArgs) -> Result<Grid, SpectraError> {
    let (lo, hi) = default_domain(spec, &report.levels_vec());
    Grid::new(
        args.x_min.unwrap_or(lo),
        args.x_max.unwrap_or(hi),
        args.n_points.unwrap_or_else(default_n_points),
    )
}

/// Sample points for `wavefunction`, walls included.
fn sample_points(spec: &PotentialSpec, report: &SpectrumReport, args: &GridArgs) -> Result<Vec<f64>, SpectraError> {
    let (lo, hi) = default_domain(spec, &report.levels_vec());
    let (x_min, x_max) = (args.x_min.unwrap_or(lo), args.x_max.unwrap_or(hi));
    if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
        return Err(SpectraError::InvalidGrid(format!("need x_min < x_max, got [{x_min}, {x_max}]")));
    }
    let count = match args.n_points {
        Some(n) => n,
        None => ((x_max - x_min) / WAVEFUNCTION_SPACING).round() as usize + 1,
    };
    if count < 5 {
        return Err(SpectraError::InvalidGrid(format!("need at least 5 samples, got {count}")));
    }
    let h = (x_max - x_min) / (count - 1) as f64;
    Ok((0..count).map(|i| x_min + i as f64 * h).collect())
}

fn run_analyze(potential: &PotentialArgs, output: &OutputArgs) -> Result<Outcome, SpectraError> {
    let spec = potential.to_spec()?;
    let (report, code) = match analyze(&spec) {
        Ok(r) => (r, EXIT_OK),
        Err(SpectraError::NoRegularBranch) => (SpectrumReport::empty(&spec)?, EXIT_NO_BRANCH),
        Err(e) => return Err(e),
    };
    let text = match output.format.unwrap_or(Format::Json) {
        Format::Json => report::to_json_string(&report::report_json(&report)),
        Format::Csv => report::report_csv(&report),
    };
    Ok(emit(output, code, text))
}

fn run_scan(
    potential: &PotentialArgs,
    sweep: &str,
    from: f64,
    to: f64,
    step: f64,
    output: &OutputArgs,
) -> Result<Outcome, SpectraError> {
    let param = SweepParameter::from_name(sweep)
        .ok_or_else(|| SpectraError::InvalidSpec(format!("unknown sweep parameter {sweep}")))?;
    // The swept flag may be omitted; seed it with the first sample.
    let mut seeded = potential.clone();
    let slot = match param {
        SweepParameter::V1 => &mut seeded.v1,
        SweepParameter::V2 => &mut seeded.v2,
        SweepParameter::V1r => &mut seeded.v1r,
        SweepParameter::V1i => &mut seeded.v1i,
        SweepParameter::V2r => &mut seeded.v2r,
        SweepParameter::V2i => &mut seeded.v2i,
        SweepParameter::ContourGamma => &mut seeded.contour_gamma,
        SweepParameter::A => &mut seeded.a,
        SweepParameter::B => &mut seeded.b,
        SweepParameter::GammaP => &mut seeded.gamma_p,
        SweepParameter::DeltaP => &mut seeded.delta_p,
        SweepParameter::C => &mut None,
    };
    if slot.is_none() {
        *slot = Some(from);
    }
    let base = seeded.to_spec()?;
    let rows = scan(&base, param, from, to, step)?;
    let text = match output.format.unwrap_or(Format::Csv) {
        Format::Csv => report::scan_csv(&rows),
        Format::Json => report::to_json_string(&report::scan_json(param.name(), &rows)),
    };
    Ok(emit(output, EXIT_OK, text))
}

fn run_verify(
    potential: &PotentialArgs,
    grid: &GridArgs,
    from_file: Option<&PathBuf>,
    epsilon: i8,
    n: usize,
    output: &OutputArgs,
) -> Result<Outcome, SpectraError> {
    let spec = potential.to_spec()?;
    let report = analyze(&spec)?;
    if let Some(path) = from_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| SpectraError::InvalidSpec(format!("cannot read {}: {e}", path.display())))?;
        let psi = report::parse_wavefunction_csv(&text)?;
        let (_, level) = report
            .find_level(epsilon, n)
            .ok_or(SpectraError::LevelNotFound { epsilon, n })?;
        let r = numerics::residual(&psi, |x| spec.potential(x), level.energy)?;
        let passed = r < FILE_RESIDUAL_TOL;
        let body = match output.format.unwrap_or(Format::Csv) {
            Format::Csv => format!(
                "epsilon,n,residual,tolerance,passed\n{epsilon},{n},{},{},{passed}\n",
                report::format_number(r),
                report::format_number(FILE_RESIDUAL_TOL)
            ),
            Format::Json => report::to_json_string(&serde_json::json!({
                "schema_version": report::SCHEMA_VERSION,
                "document": "residual",
                "epsilon": epsilon,
                "n": n,
                "residual": report::round15(r),
                "tolerance": FILE_RESIDUAL_TOL,
                "passed": passed,
            })),
        };
        return Ok(emit(output, if passed { EXIT_OK } else { EXIT_UNMATCHED }, body));
    }
    let g = oracle_grid(&spec, &report, grid)?;
    let matches = numerics::verify_levels(&spec, &report.levels_vec(), &g, grid.tol)?;
    let code = if matches.all_matched() { EXIT_OK } else { EXIT_UNMATCHED };
    let text = match output.format.unwrap_or(Format::Csv) {
        Format::Csv => report::verification_csv(&matches),
        Format::Json => report::to_json_string(&report::verification_json(&report, &g, &matches)),
    };
    Ok(emit(output, code, text))
}

fn run_wavefunction(
    potential: &PotentialArgs,
    epsilon: i8,
    n: usize,
    grid: &GridArgs,
    output: &OutputArgs,
) -> Result<Outcome, SpectraError> {
    let spec = potential.to_spec()?;
    let report = analyze(&spec)?;
    let (branch, _) = report
        .find_level(epsilon, n)
        .ok_or(SpectraError::LevelNotFound { epsilon, n })?;
    let xs = sample_points(&spec, &report, grid)?;
    let psi = excited_state(&branch.solution.realization, branch.solution.m(), n, &xs)?;
    let text = match output.format.unwrap_or(Format::Csv) {
        Format::Csv => report::wavefunction_csv(&psi),
        Format::Json => report::to_json_string(&serde_json::json!({
            "schema_version": report::SCHEMA_VERSION,
            "document": "wavefunction",
            "epsilon": epsilon,
            "n": n,
            "x": psi.xs().iter().map(|x| report::round15(*x)).collect::<Vec<_>>(),
            "re_psi": psi.values().iter().map(|v| report::round15(v.re)).collect::<Vec<_>>(),
            "im_psi": psi.values().iter().map(|v| report::round15(v.im)).collect::<Vec<_>>(),
        })),
    };
    Ok(emit(output, EXIT_OK, text))
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Analyze { potential, output } => run_analyze(potential, output),
        Command::Scan { potential, sweep, from, to, step, output } => {
            run_scan(potential, sweep, *from, *to, *step, output)
        }
        Command::Verify { potential, grid, from_file, epsilon, n, output } => {
            run_verify(potential, grid, from_file.as_ref(), *epsilon, *n, output)
        }
        Command::Wavefunction { potential, epsilon, n, grid, output } => {
            run_wavefunction(potential, *epsilon, *n, grid, output)
        }
    };
    result.unwrap_or_else(|e| Outcome::failure(exit_code_for(&e), &e))
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if e.use_stderr() {
                Outcome { exit_code: code, stdout: String::new(), stderr: text }
            } else {
                Outcome::document(code, text)
            }
        }
    }
}

//! Machine-readable documents: JSON reports and CSV tables.
//!
//! Every floating-point value is rounded to 15 significant digits before it
//! is written, and `-0` is written as `0`, so output is byte-stable across
//! platforms for identical input.

use num_complex::Complex64;
use serde_json::{json, Map, Value};

use crate::algebra::GridFunction;
use crate::numerics::{Grid, MatchReport};
use crate::spectrum::{PhaseDiagramRow, SpectrumReport};
use crate::solvers::BranchKind;

/// Version tag written into every JSON document.
pub const SCHEMA_VERSION: &str = "spectra-report/1";

/// Rounds to 15 significant digits and folds `-0` into `0`.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let r: f64 = format!("{x:.14e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest decimal text of `round15(x)`; non-finite values become `NaN`, `inf`, `-inf`.
pub fn format_number(x: f64) -> String {
    let r = round15(x);
    if r.is_nan() {
        "NaN".into()
    } else if r.is_infinite() {
        if r > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{r}")
    }
}

fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round15(x)).map_or(Value::Null, Value::Number)
}

fn complex(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

fn kind_name(kind: BranchKind) -> &'static str {
    match kind {
        BranchKind::RealSeries => "RealSeries",
        BranchKind::ComplexPairMember => "ComplexPairMember",
        BranchKind::ComplexUnpaired => "ComplexUnpaired",
    }
}

/// JSON document for a closed-form spectrum.
pub fn report_json(report: &SpectrumReport) -> Value {
    let mut parameters = Map::new();
    for (name, value) in report.spec.parameters() {
        parameters.insert(name.to_string(), num(value));
    }
    let branches: Vec<Value> = report
        .branches
        .iter()
        .map(|b| {
            let s = &b.solution;
            let r = &s.realization;
            json!({
                "epsilon": s.epsilon.as_i8(),
                "kind": kind_name(s.branch_kind),
                "m": complex(s.m()),
                "b": complex(r.b()),
                "class": r.class().label(),
                "c": num(r.c()),
                "gamma": num(r.gamma()),
                "n_max_exclusive": num(s.n_max_exclusive),
                "reality_condition_residual": s.reality_condition_residual.map_or(Value::Null, num),
                "levels": b.levels.iter().map(|l| json!({
                    "n": l.n,
                    "energy": complex(l.energy),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let levels: Vec<Value> = report
        .levels()
        .map(|l| {
            json!({
                "epsilon": l.epsilon,
                "n": l.n,
                "re": num(l.energy.re),
                "im": num(l.energy.im),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "document": "spectrum",
        "family": report.spec.family().name(),
        "parameters": parameters,
        "classification": report.classification.name(),
        "pt_symmetric": report.pt_symmetric,
        "threshold_distance": report.threshold_distance.map_or(Value::Null, num),
        "branches": branches,
        "levels": levels,
    })
}

/// JSON document for an oracle comparison.
pub fn verification_json(report: &SpectrumReport, grid: &Grid, matches: &MatchReport) -> Value {
    let rows: Vec<Value> = matches
        .levels
        .iter()
        .map(|m| {
            json!({
                "epsilon": m.epsilon,
                "n": m.n,
                "E_closed": complex(m.closed),
                "E_numeric": m.numeric.map_or(Value::Null, complex),
                "cluster": m.cluster.iter().map(|z| complex(*z)).collect::<Vec<_>>(),
                "abs_error": num(m.abs_error),
                "boundary_decay": num(m.boundary_decay),
                "matched": m.matched,
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "document": "verification",
        "family": report.spec.family().name(),
        "classification": report.classification.name(),
        "grid": { "x_min": num(grid.x_min), "x_max": num(grid.x_max), "n_points": grid.n_points },
        "tolerance": num(matches.tolerance),
        "decay_threshold": num(matches.decay_threshold),
        "all_matched": matches.all_matched(),
        "levels": rows,
        "unclaimed_decaying": matches.unclaimed_decaying.iter().map(|z| complex(*z)).collect::<Vec<_>>(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory CSV write");
    for row in rows {
        w.write_record(&row).expect("in-memory CSV write");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
}

/// One row per level: `epsilon, n, E_re, E_im`.
pub fn report_csv(report: &SpectrumReport) -> String {
    csv_string(
        &["epsilon", "n", "E_re", "E_im"],
        report.levels().map(|l| {
            vec![
                l.epsilon.to_string(),
                l.n.to_string(),
                format_number(l.energy.re),
                format_number(l.energy.im),
            ]
        }),
    )
}

/// `swept_value, real_levels, complex_pairs, classification`.
pub fn scan_csv(rows: &[PhaseDiagramRow]) -> String {
    csv_string(
        &["swept_value", "real_levels", "complex_pairs", "classification"],
        rows.iter().map(|r| {
            vec![
                format_number(r.value),
                r.real_level_count.to_string(),
                r.complex_pair_count.to_string(),
                r.classification.name().to_string(),
            ]
        }),
    )
}

pub fn scan_json(parameter: &str, rows: &[PhaseDiagramRow]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "document": "scan",
        "parameter": parameter,
        "rows": rows.iter().map(|r| json!({
            "swept_value": num(r.value),
            "real_levels": r.real_level_count,
            "complex_pairs": r.complex_pair_count,
            "classification": r.classification.name(),
        })).collect::<Vec<_>>(),
    })
}

/// `epsilon, n, E_closed_re, E_closed_im, E_numeric_re, E_numeric_im, abs_error, boundary_decay, matched`.
pub fn verification_csv(matches: &MatchReport) -> String {
    csv_string(
        &[
            "epsilon",
            "n",
            "E_closed_re",
            "E_closed_im",
            "E_numeric_re",
            "E_numeric_im",
            "abs_error",
            "boundary_decay",
            "matched",
        ],
        matches.levels.iter().map(|m| {
            let numeric = m.numeric.unwrap_or(Complex64::new(f64::NAN, f64::NAN));
            vec![
                m.epsilon.to_string(),
                m.n.to_string(),
                format_number(m.closed.re),
                format_number(m.closed.im),
                format_number(numeric.re),
                format_number(numeric.im),
                format_number(m.abs_error),
                format_number(m.boundary_decay),
                m.matched.to_string(),
            ]
        }),
    )
}

/// `x, re_psi, im_psi`.
pub fn wavefunction_csv(psi: &GridFunction) -> String {
    csv_string(
        &["x", "re_psi", "im_psi"],
        psi.xs().iter().zip(psi.values()).map(|(x, v)| {
            vec![format_number(*x), format_number(v.re), format_number(v.im)]
        }),
    )
}

/// Parses the output of [`wavefunction_csv`].
pub fn parse_wavefunction_csv(text: &str) -> crate::Result<GridFunction> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let bad = |msg: String| crate::SpectraError::InvalidGrid(msg);
    let headers = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    let col = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim() == name)
            .ok_or_else(|| bad(format!("missing column {name}")))
    };
    let (ix, ire, iim) = (col("x")?, col("re_psi")?, col("im_psi")?);
    let (mut xs, mut values) = (Vec::new(), Vec::new());
    for record in reader.records() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let field = |i: usize| -> crate::Result<f64> {
            record
                .get(i)
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| bad(format!("unparsable value in row {:?}", record)))
        };
        xs.push(field(ix)?);
        values.push(Complex64::new(field(ire)?, field(iim)?));
    }
    GridFunction::new(xs, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{PotentialSpec, ScarfSpec};
    use crate::spectrum::analyze;

    #[test]
    fn rounding() {
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(0.1 + 0.2), "0.3");
        assert_eq!(format_number(-6.25), "-6.25");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333333");
        assert_eq!(round15(1e-300), 1e-300);
    }

    #[test]
    fn report_document_fields() {
        let r = analyze(&PotentialSpec::Scarf2(ScarfSpec::new(9.75, 6.0).unwrap())).unwrap();
        let v = report_json(&r);
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        assert_eq!(v["classification"], "AllReal");
        assert_eq!(v["levels"].as_array().unwrap().len(), 4);
        assert_eq!(v["levels"][0]["re"], json!(-6.25));
        assert_eq!(v["threshold_distance"], json!(-4.0));
        assert_eq!(v["branches"][0]["b"]["im"], json!(1.0));
    }

    #[test]
    fn wavefunction_csv_round_trip() {
        let xs = vec![0.0, 0.5, 1.0];
        let vals = vec![Complex64::new(1.0, -0.0), Complex64::new(0.25, 2.0), Complex64::new(-1e-7, 3.5)];
        let psi = GridFunction::new(xs, vals).unwrap();
        let text = wavefunction_csv(&psi);
        assert!(text.starts_with("x,re_psi,im_psi\n0,1,0\n"));
        assert_eq!(parse_wavefunction_csv(&text).unwrap(), psi);
        assert!(parse_wavefunction_csv("x,re\n1,2\n").is_err());
    }
}

use serde_json::Value;
use spectra::cli;

fn validator() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/spectra-report-v1.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn document(args: &[&str]) -> Value {
    let mut full = vec!["spectra"];
    full.extend_from_slice(args);
    let out = cli::run(full);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stderr))
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:#?}\n{doc:#}");
}

#[test]
fn every_document_kind_validates() {
    let v = validator();
    let scarf = ["--family", "scarf2", "--v1", "9.75", "--v2", "6"];
    let docs = [
        document(&[&["analyze"][..], &scarf].concat()),
        document(&["analyze", "--family", "scarf2", "--v1", "0", "--v2", "5"]),
        document(&["analyze", "--family", "scarf2", "--v1", "0", "--v2", "0.1"]),
        document(&["analyze", "--family", "poschl-teller", "--v1", "9.75", "--v2", "6", "--contour-gamma", "0.3"]),
        document(&["analyze", "--family", "morse", "--v1r", "1", "--v1i", "1", "--v2r", "3", "--v2i", "5"]),
        document(&["analyze", "--family", "morse-ab", "--A", "1", "--B", "1", "--gamma-p", "3", "--delta-p", "3"]),
        document(&[&["scan"][..], &scarf, &["--sweep", "v2", "--from", "1", "--to", "12", "--step", "1", "--format", "json"]].concat()),
        document(&[&["verify"][..], &scarf, &["--n-points", "200", "--format", "json"]].concat()),
        document(&[&["wavefunction"][..], &scarf, &["--n", "1", "--x-min", "-2", "--x-max", "2", "--n-points", "81", "--format", "json"]].concat()),
    ];
    for doc in &docs {
        assert_valid(&v, doc);
    }
}

#[test]
fn schema_rejects_foreign_documents() {
    let v = validator();
    let mut doc = document(&["analyze", "--family", "scarf2", "--v1", "9.75", "--v2", "6"]);
    assert!(v.is_valid(&doc));
    doc["schema_version"] = Value::from("spectra-report/0");
    assert!(!v.is_valid(&doc));
    assert!(!v.is_valid(&serde_json::json!({ "schema_version": "spectra-report/1", "document": "other" })));
}

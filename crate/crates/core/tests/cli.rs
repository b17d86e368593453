//! End-to-end checks of the command-line surface: worked examples, exit
//! codes, byte-identical reruns, the slide-chain trace, and JSON output
//! validated against the shipped schema.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_kjdt"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn coeff_worked_example() {
    let out = run(&["coeff", "--n", "5", "--lambda", "3,1", "--mu", "3,1", "--nu", "5,3,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-6\n");
}

#[test]
fn usage_error_exits_2() {
    let out = run(&["coeff", "--n", "5", "--lambda", "3,3", "--mu", "1", "--nu", "5,3,1"]);
    assert_eq!(out.status.code(), Some(2));
    // Missing required flag is a clap usage error, also 2.
    let out = bin().args(["coeff", "--lambda", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_guard_requires_force() {
    let out = run(&["table", "--n", "6", "--out", "-"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_rank_passes() {
    let out = run(&["verify", "--n", "2", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["coeff", "--n", "5", "--lambda", "3,1", "--mu", "3,1", "--nu", "5,3,1", "--list"],
        vec!["verify", "--n", "2", "all"],
        vec!["enumerate", "--n", "3", "--lambda", "2", "--nu", "3,1", "--m", "1", "--x"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic stdout for {:?}", args);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn rectify_trace_matches_slide_chain() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.txt");
    fs::write(&input, ". . . 1\n. 1 3\n2\n").unwrap();
    let out = run(&["rectify", "--input", input.to_str().unwrap(), "--trace"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let frames: Vec<&str> = text.split("\n\n").collect();
    // First slide of the greedy order: bullets on (1,3) and (2,2), one
    // switch pass per value.
    assert_eq!(frames[0], ". . * 1\n* 1 3\n2");
    assert_eq!(frames[1], ". . 1 *\n1 * 3\n2");
    assert_eq!(frames[2], ". . 1 *\n1 2 3\n*");
    assert_eq!(frames[3], ". . 1 3\n1 2 *\n*");
    // Rectification finishes at the superstandard row of length 3.
    assert!(text.ends_with("\n1 2 3\n"));
}

#[test]
fn rectify_with_explicit_order_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.txt");
    let order = dir.path().join("order.txt");
    fs::write(&input, ". . . 1\n. 1 3\n2\n").unwrap();
    fs::write(&order, "1 2 3\n3\n").unwrap();
    let out = run(&[
        "rectify",
        "--input",
        input.to_str().unwrap(),
        "--order",
        order.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 2 3\n");
    // An order of the wrong shape is rejected.
    fs::write(&order, "1 2\n").unwrap();
    let out = run(&[
        "rectify",
        "--input",
        input.to_str().unwrap(),
        "--order",
        order.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_to_stdout_matches_golden() {
    let out = run(&["table", "--n", "1", "--out", "-"]);
    assert!(out.status.success());
    let golden = fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("golden")
            .join("coeff-n1.txt"),
    )
    .unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn double_shape_and_tableau() {
    let out = run(&["double", "--shape", "4,3,1", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4,4,3,3,2\n");

    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.txt");
    fs::write(&input, ". . . 1\n. 1 3\n2\n").unwrap();
    let out = run(&[
        "double",
        "--n",
        "5",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), ". . . 1\n. . 1 5\n. . 3\n. 2 4\n2 6\n");
}

#[test]
fn pieri_counts_and_sign() {
    let out = run(&["pieri", "--n", "3", "--lambda", "2", "--nu", "3,1", "--t", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "kog 1\npieri 1\nsign -1\ncoeff -1\n");
}

#[test]
fn enumerate_decorated_count() {
    let out = run(&["enumerate", "--n", "3", "--lambda", "2", "--nu", "3,1", "--m", "1", "--x"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("count 3\n"));
}

#[test]
fn table_roundtrips_through_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.txt");
    let out = run(&["table", "--n", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let loaded = kjdt::ring::CoeffTable::load(2, &path);
    assert!(loaded.is_ok());
}

#[test]
fn cache_dir_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env("KJDT_CACHE_DIR", dir.path())
        .args(["verify", "--n", "2", "duality"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let cache = dir.path().join("coeff-n2.txt");
    assert!(cache.exists(), "verify did not persist the table");
    // Second run loads the cache (and still passes).
    let out = bin()
        .env("KJDT_CACHE_DIR", dir.path())
        .args(["verify", "--n", "2", "duality"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

// ---------------------------------------------------------------------
// JSON schema validation
// ---------------------------------------------------------------------

fn schema() -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schema")
        .join("cli-output.schema.json");
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

/// Minimal validator for the schema subset used by the shipped file:
/// $ref into definitions, oneOf, enum, type, properties/required/
/// additionalProperties, items (single or tuple) with additionalItems,
/// and minimum.
fn validate(schema_node: &Value, instance: &Value, root: &Value) -> Result<(), String> {
    if let Some(reference) = schema_node.get("$ref").and_then(Value::as_str) {
        let name = reference
            .strip_prefix("#/definitions/")
            .ok_or_else(|| format!("unsupported $ref {}", reference))?;
        let target = root
            .get("definitions")
            .and_then(|d| d.get(name))
            .ok_or_else(|| format!("missing definition {}", name))?;
        return validate(target, instance, root);
    }
    if let Some(variants) = schema_node.get("oneOf").and_then(Value::as_array) {
        let matches = variants
            .iter()
            .filter(|v| validate(v, instance, root).is_ok())
            .count();
        return if matches == 1 {
            Ok(())
        } else {
            Err(format!("oneOf matched {} variants", matches))
        };
    }
    if let Some(options) = schema_node.get("enum").and_then(Value::as_array) {
        if !options.contains(instance) {
            return Err(format!("{} not in enum", instance));
        }
        return Ok(());
    }
    match schema_node.get("type").and_then(Value::as_str) {
        Some("object") => {
            let obj = instance.as_object().ok_or("expected object")?;
            let props = schema_node
                .get("properties")
                .and_then(Value::as_object)
                .cloned()
                .unwrap_or_default();
            if let Some(required) = schema_node.get("required").and_then(Value::as_array) {
                for r in required {
                    let key = r.as_str().unwrap();
                    if !obj.contains_key(key) {
                        return Err(format!("missing required key {}", key));
                    }
                }
            }
            let closed = schema_node
                .get("additionalProperties")
                .map_or(false, |v| v == &Value::Bool(false));
            for (key, value) in obj {
                match props.get(key) {
                    Some(sub) => validate(sub, value, root)
                        .map_err(|e| format!("{}: {}", key, e))?,
                    None if closed => return Err(format!("unexpected key {}", key)),
                    None => {}
                }
            }
            Ok(())
        }
        Some("array") => {
            let arr = instance.as_array().ok_or("expected array")?;
            match schema_node.get("items") {
                Some(Value::Array(tuple)) => {
                    if arr.len() > tuple.len()
                        && schema_node.get("additionalItems") == Some(&Value::Bool(false))
                    {
                        return Err("too many tuple items".into());
                    }
                    for (i, sub) in tuple.iter().enumerate() {
                        match arr.get(i) {
                            Some(v) => validate(sub, v, root)
                                .map_err(|e| format!("[{}]: {}", i, e))?,
                            None => return Err(format!("tuple item {} missing", i)),
                        }
                    }
                    Ok(())
                }
                Some(single) => {
                    for (i, v) in arr.iter().enumerate() {
                        validate(single, v, root).map_err(|e| format!("[{}]: {}", i, e))?;
                    }
                    Ok(())
                }
                None => Ok(()),
            }
        }
        Some("integer") => {
            let x = instance.as_i64().ok_or("expected integer")?;
            if let Some(min) = schema_node.get("minimum").and_then(Value::as_i64) {
                if x < min {
                    return Err(format!("{} below minimum {}", x, min));
                }
            }
            Ok(())
        }
        Some("string") => instance.as_str().map(|_| ()).ok_or("expected string".into()),
        Some("boolean") => instance.as_bool().map(|_| ()).ok_or("expected boolean".into()),
        Some(other) => Err(format!("unsupported type {}", other)),
        None => Ok(()),
    }
}

fn assert_valid_json(args: &[&str]) {
    let out = run(args);
    assert!(out.status.success(), "command failed: {:?}", args);
    let value: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let schema = schema();
    if let Err(e) = validate(&schema, &value, &schema) {
        panic!("schema violation for {:?}: {}\n{}", args, e, value);
    }
}

#[test]
fn json_outputs_validate_against_schema() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("t.txt");
    fs::write(&input, ". . . 1\n. 1 3\n2\n").unwrap();
    let input = input.to_str().unwrap();
    assert_valid_json(&[
        "coeff", "--n", "5", "--lambda", "3,1", "--mu", "3,1", "--nu", "5,3,1", "--list", "--json",
    ]);
    assert_valid_json(&[
        "ecoeff", "--n", "3", "--lambda", "2", "--mu", "1", "--nu", "3,1", "--oracle", "--list",
        "--json",
    ]);
    assert_valid_json(&[
        "pieri", "--n", "3", "--lambda", "2", "--nu", "3,1", "--t", "1", "--list", "--json",
    ]);
    assert_valid_json(&[
        "enumerate", "--n", "3", "--lambda", "2", "--nu", "3,1", "--m", "1", "--x", "--json",
    ]);
    assert_valid_json(&["rectify", "--input", input, "--trace", "--json"]);
    assert_valid_json(&["double", "--shape", "4,3,1", "--n", "5", "--json"]);
    assert_valid_json(&["double", "--n", "5", "--input", input, "--json"]);
    assert_valid_json(&["verify", "--n", "2", "all", "--json"]);
}

#[test]
fn schema_validator_rejects_garbage() {
    let schema = schema();
    let bad: Value = serde_json::json!({ "kind": "coeff", "n": 5 });
    assert!(validate(&schema, &bad, &schema).is_err());
}

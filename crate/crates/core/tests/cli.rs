// Copyright 2026 The zcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::process::Command;

use serde_json::Value;
use zcube::cli::{run, CommandResult};

fn run_line(line: &str) -> CommandResult {
    run(std::iter::once("zcube").chain(line.split_whitespace()))
}

fn schema_for(command: &str) -> jsonschema::JSONSchema {
    let path = format!(
        "{}/schemas/zcube.v1/{command}.json",
        env!("CARGO_MANIFEST_DIR")
    );
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    let schema: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap_or_else(|e| panic!("{path}: {e}"))
}

#[test]
fn payloads_match_their_schemas() {
    let lines = [
        "bounds --n-max 90 --k 1,2",
        "route --family h --n 3 --from 000 --to 111",
        "route --family q --n 6 --from 000000 --to 101101",
        "route --family h --n 10 --from 0000000000 --to 1111111111 --robust-k 3",
        "route --family z --k 2 --n 7 --from 0101010 --to 1100110 --robust-k 5",
        "hampath --n 4 --from 0000 --to 0001",
        "verify --family h --n 6 --level full",
        "verify --family z --k 2 --n 13 --level quick --seed 3",
        "stats --family h --n 7",
        "stats --family q --n 12 --mode sampled --sources 5 --seed 8",
        "diameter --family h --n 3 --mode exact",
        "diameter --family z --k 3 --n 16 --mode sampled --sources 3",
    ];
    for line in lines {
        let r = run_line(line);
        assert_eq!(r.code, 0, "{line}: {}", r.stderr);
        let v: Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["schema"], "zcube.v1");
        let command = v["command"].as_str().unwrap().to_string();
        let schema = schema_for(&command);
        if let Err(errors) = schema.validate(&v) {
            let msgs: Vec<String> = errors
                .map(|e| format!("{e} at {}", e.instance_path))
                .collect();
            panic!("{line}: {msgs:?}");
        };
    }
}

#[test]
fn exit_code_corpus() {
    let corpus: &[(&str, i32)] = &[
        ("gen --family h --n 3", 0),
        ("gen --family q --n 2 --format dot", 0),
        ("gen --family z --n 5", 2),
        ("gen --family z --k 0 --n 5", 2),
        ("gen --family h --k 2 --n 5", 2),
        ("gen --family x --n 5", 2),
        ("gen --family h --n 0", 2),
        ("gen --family h --n -3", 2),
        ("gen --family h --n 21", 1),
        ("gen --family h --n 3 --format svg", 2),
        ("gen --family h", 2),
        ("bounds --n-max 5", 0),
        ("bounds --n-max 0", 2),
        ("bounds --n-max 5 --k 0", 2),
        ("bounds --n-max five", 2),
        ("bounds --n-max 2000000", 1),
        ("route --family h --n 3 --from 000 --to 111", 0),
        ("route --family h --n 3 --from 000 --to 000", 0),
        ("route --family h --n 3 --from 00 --to 111", 2),
        ("route --family h --n 3 --from 0a0 --to 111", 2),
        ("route --family h --n 3 --from 000", 2),
        ("route --family h --n 100 --from 0 --to 1 --robust-k 1", 2),
        ("route --family h --n 3 --from 000 --to 111 --robust-k 4", 2),
        ("hampath --n 2 --from 00 --to 11", 1),
        ("hampath --n 3 --from 000 --to 000", 2),
        ("hampath --n 3 --from 000 --to 110", 0),
        (
            "hampath --n 25 --from 0000000000000000000000000 --to 0000000000000000000000001",
            1,
        ),
        ("verify --family h --n 13 --level full", 1),
        ("verify --family h --n 8 --level full", 0),
        ("verify --family h --n 8 --level medium", 2),
        ("stats --family h --n 15", 1),
        ("stats --family h --n 5 --mode sampled --sources 0", 2),
        ("diameter --family h --n 15", 1),
        ("diameter --family q --n 25 --mode sampled", 1),
        ("diameter --family q --n 4", 0),
        ("", 2),
        ("--version", 0),
        ("help route", 0),
    ];
    for &(line, code) in corpus {
        let r = run_line(line);
        assert_eq!(
            r.code, code,
            "`{line}`: stdout {:?} stderr {:?}",
            r.stdout, r.stderr
        );
        if code != 0 {
            assert!(!r.stderr.is_empty(), "`{line}` gave no diagnostic");
        }
    }
}

#[test]
fn binary_output_is_byte_identical() {
    let bin = env!("CARGO_BIN_EXE_zcube");
    let args = [
        "stats", "--family", "h", "--n", "14", "--mode", "sampled", "--seed", "11",
    ];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        a.stdout,
        run(std::iter::once("zcube").chain(args))
            .stdout
            .into_bytes()
    );
    let bad = Command::new(bin)
        .args(["gen", "--family", "z", "--n", "5"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exact_cap_env_override() {
    let bin = env!("CARGO_BIN_EXE_zcube");
    let out = Command::new(bin)
        .args(["diameter", "--family", "h", "--n", "9"])
        .env("ZCUBE_MAX_EXACT_N", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n <= 8"));
}

#[test]
fn gen_writes_files() {
    let dir = std::env::temp_dir().join(format!("zcube-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h3.txt");
    let r = run([
        "zcube",
        "gen",
        "--family",
        "h",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, include_str!("golden/h3_edges.txt"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bounds_jump_at_80() {
    let r = run_line("bounds --n-max 80");
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[78]["kappa"], 1);
    assert_eq!(rows[78]["sigma"], "2");
    assert_eq!(rows[78]["zstar"], Value::Null);
    assert_eq!(rows[79]["kappa"], 2);
    assert_eq!(rows[79]["sigma"], "22");
    assert!(rows[79]["zstar"].is_number());
    assert_eq!(rows[7]["thm1"], 9.0);
    assert_eq!(rows[2]["thm1_exact"], "13/2");
}

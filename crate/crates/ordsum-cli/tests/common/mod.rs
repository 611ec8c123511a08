#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Session scripts in name order.
pub fn sessions() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(golden_dir())
        .expect("golden directory")
        .map(|e| e.expect("entry").path())
        .filter(|p| p.extension().is_some_and(|x| x == "cmds"))
        .collect();
    out.sort();
    out
}

/// Runs every line of a script through the binary and renders a transcript:
/// the command, its stdout, its stderr prefixed with `! `, and the exit code.
/// Leading `NAME=value` words set environment variables.
pub fn run_session(script: &Path) -> String {
    let src = std::fs::read_to_string(script).expect("script");
    let mut out = String::new();
    for line in src.lines().filter(|l| !l.trim().is_empty()) {
        let words = shlex::split(line).unwrap_or_else(|| panic!("bad quoting: {line}"));
        let (env, args): (Vec<&String>, Vec<&String>) = {
            let split = words
                .iter()
                .position(|w| !w.contains('='))
                .unwrap_or(words.len());
            (
                words[..split].iter().collect(),
                words[split..].iter().collect(),
            )
        };
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_ordsum"));
        cmd.current_dir(env!("CARGO_MANIFEST_DIR"))
            .env_remove("ORDSUM_CAPACITY")
            .args(args);
        for kv in &env {
            let (k, v) = kv.split_once('=').expect("NAME=value");
            cmd.env(k, v);
        }
        let result = cmd.output().expect("binary runs");
        let mut rest = line.trim_start();
        let mut prompt = String::from("$ ");
        for kv in &env {
            prompt.push_str(kv);
            prompt.push(' ');
            rest = rest[kv.len()..].trim_start();
        }
        out.push_str(&format!("{prompt}ordsum {rest}\n"));
        out.push_str(&String::from_utf8_lossy(&result.stdout));
        for l in String::from_utf8_lossy(&result.stderr).lines() {
            out.push_str(&format!("! {l}\n"));
        }
        out.push_str(&format!("[exit {}]\n", result.status.code().unwrap_or(-1)));
    }
    out
}

pub fn expected_path(script: &Path) -> PathBuf {
    script.with_extension("out")
}

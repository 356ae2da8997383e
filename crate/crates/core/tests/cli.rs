//! The `rsg` binary end to end.

use std::process::Command;

fn data(name: &str) -> String {
    format!("{}/examples/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn rsg(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rsg")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn nicefact() {
    assert_eq!(rsg(&["word", "nicefact", "aBa"]), (0, "a b⁻¹ a\n".to_string()));
}

#[test]
fn verify_lemma_two() {
    let (code, out) = rsg(&["verify", "lemma-two", "--omega", "2", "--samples", "50", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS lemma-two"), "{out}");
}

#[test]
fn cover_build_json() {
    let (code, out) = rsg(&["cover", "build", "--input", &data("chain2.json"), "--bound", "4", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["checks"]["stabilized"], true);
    assert_eq!(v["bound"], 4);
}

#[test]
fn same_seed_same_bytes() {
    let args = ["--json", "verify", "lemma-main1", "--samples", "10", "--seed", "3"];
    assert_eq!(rsg(&args), rsg(&args));
    let args = ["--json", "chain", "random", "--samples", "5", "--seed", "3"];
    assert_eq!(rsg(&args), rsg(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(rsg(&["alg", "check", "--input", "/nonexistent.json"]).0, 2);
    assert_eq!(rsg(&["pact", "check", "--input", &data("pact_chain3.json")]).0, 0);
    assert_eq!(rsg(&["sd", "down", "({ε,a)"]).0, 2);
    assert_eq!(rsg(&["bogus"]).0, 2);
}

#[test]
fn tree_dot_and_algebra_tools() {
    let (code, out) = rsg(&["tree", "dot", "{ε,a,ab}"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    let (code, out) = rsg(&["alg", "closure", "--input", &data("chain3.json"), "--pair", "e=f"]);
    assert_eq!((code, out.as_str()), (0, "{1}\n{e, f}\n"));
    let (_, out) = rsg(&["fr", "eval", "({ε,a}, a)", "--target", &data("monoid3.json"), "--map", "a=a"]);
    assert_eq!(out, "a\n");
    let (_, out) = rsg(&["pact", "meet", "--input", &data("pact_chain2.json"), "1", "", "1", "a"]);
    assert_eq!(out, "[e, ε]\n");
}

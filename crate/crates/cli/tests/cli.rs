use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;
use tfrecon::deck::compute_deck;
use tfrecon::graph6::emit_graph6;
use tfrecon::{canonical_form, Graph};

fn tfrecon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tfrecon")).args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stderr_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).unwrap_or_else(|_| panic!("stderr: {}", String::from_utf8_lossy(&out.stderr)))
}

fn write_graphs(dir: &TempDir, name: &str, graphs: &[Graph]) -> String {
    let path = dir.path().join(name);
    let text: String = graphs.iter().map(|g| emit_graph6(g) + "\n").collect();
    fs::write(&path, text).unwrap();
    path_str(&path).to_string()
}

#[test]
fn deck_files_round_trip_through_reconstruct() {
    let dir = TempDir::new().unwrap();
    let p = Graph::petersen();
    let g6 = write_graphs(&dir, "in.g6", &[p, Graph::cycle(5).unwrap()]);
    let decks = dir.path().join("decks");
    let out = tfrecon(&["deck", &g6, "--out-dir", path_str(&decks)]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read_to_string(decks.join("0.deck")).unwrap(), compute_deck(&p).to_text());

    let out = tfrecon(&["reconstruct", "--class", "g2tf3", path_str(&decks.join("0.deck"))]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["route"].as_str().unwrap().starts_with("THM4_"));
    assert_eq!(v["graph_g6"], canonical_form(&p).to_graph6());

    let out = tfrecon(&["reconstruct", "--class", "auto", path_str(&decks.join("0.deck"))]);
    assert_eq!(out.status.code(), Some(0));

    // the 5-cycle has connectivity 2, outside the class
    let out = tfrecon(&["reconstruct", "--class", "g2tf3", path_str(&decks.join("1.deck"))]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "HypothesisViolation");
}

#[test]
fn edge_decks_and_oracle() {
    let dir = TempDir::new().unwrap();
    let c5 = Graph::cycle(5).unwrap();
    let g6 = write_graphs(&dir, "c5.g6", &[c5]);
    let out = tfrecon(&["edgedeck", &g6]);
    assert!(out.status.success());
    let edeck = dir.path().join("c5.edeck");
    fs::write(&edeck, &out.stdout).unwrap();

    let out = tfrecon(&["edge-reconstruct", "--class", "g2tf", path_str(&edeck)]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["graph_g6"], canonical_form(&c5).to_graph6());

    let out = tfrecon(&["oracle", path_str(&edeck)]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["kind"].as_str(), v["count"].as_u64()), (Some("edge"), Some(1)));

    let empty = write_graphs(&dir, "empty.g6", &[Graph::new(3).unwrap()]);
    assert_eq!(tfrecon(&["edgedeck", &empty]).status.code(), Some(4));
}

#[test]
fn census_sweep_counts_every_member() {
    let out = tfrecon(&["census", "--n", "6", "--theorem", "T8"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["total_graphs"], 156);
    let t8 = &v["theorem_verdicts"]["T8"];
    assert_eq!(t8["passes"], t8["instances"]);
    assert!(t8["instances"].as_u64().unwrap() > 0);
}

#[test]
fn census_output_is_identical_across_job_counts() {
    let dir = TempDir::new().unwrap();
    let mut reports = Vec::new();
    for jobs in ["1", "2", "4"] {
        let json = dir.path().join(format!("r{jobs}.json"));
        let csv = dir.path().join(format!("r{jobs}.csv"));
        let out = tfrecon(&[
            "census", "--n", "7", "--edge", "--theorem", "T10", "--theorem", "t8", "--jobs", jobs, "--out",
            path_str(&json), "--csv", path_str(&csv),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
        reports.push((fs::read(&json).unwrap(), fs::read(&csv).unwrap()));
    }
    assert!(reports.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn census_two_reports_the_small_collision() {
    let out = tfrecon(&["census", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["vertex_decks"]["collisions"].as_array().unwrap().len(), 1);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(tfrecon(&["census", "--n", "12"]).status.code(), Some(3));
    assert_eq!(tfrecon(&["census", "--n", "9", "--edge"]).status.code(), Some(3));
    assert_eq!(tfrecon(&["census", "--n", "5", "--theorem", "T99"]).status.code(), Some(4));
    assert_eq!(tfrecon(&["frobnicate"]).status.code(), Some(4));
    assert_eq!(tfrecon(&["--help"]).status.code(), Some(0));

    let bad = dir.path().join("bad.deck");
    fs::write(&bad, "n=5\nC\n").unwrap();
    let out = tfrecon(&["reconstruct", "--class", "g3tf1", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stderr_json(&out)["exit_code"], 4);

    let missing = dir.path().join("absent.deck");
    assert_eq!(tfrecon(&["oracle", path_str(&missing)]).status.code(), Some(1));

    let big = write_graphs(&dir, "big.g6", &[Graph::cycle(12).unwrap()]);
    let out = tfrecon(&["deck", &big]);
    let deck = dir.path().join("big.deck");
    fs::write(&deck, out.stdout).unwrap();
    assert_eq!(tfrecon(&["oracle", path_str(&deck)]).status.code(), Some(3));
}

use bendmin::gen::{connected_planar_3graphs, k4};
use bendmin::io::GraphInput;
use bendmin::Graph;
use std::path::PathBuf;
use std::process::{Command, Output};

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn write_graph(name: &str, g: &Graph) -> PathBuf {
    let p = tmp(name);
    std::fs::write(&p, serde_json::to_string(&GraphInput::from_graph(g)).unwrap()).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bendmin")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn k4_global_prints_four_bends() {
    let p = write_graph("cli_k4.json", &k4());
    let o = run(&[p.to_str().unwrap(), "--mode", "global", "--validate"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "bends: 4");
}

#[test]
fn missing_edge_is_an_input_error() {
    let p = write_graph("cli_k4_edge.json", &k4());
    let o = run(&[p.to_str().unwrap(), "--mode", "edge", "--edge", "0,7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&[p.to_str().unwrap(), "--mode", "edge"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_inputs_exit_with_two() {
    let cases = [
        ("cli_k33.json", r#"{"n":6,"edges":[[0,3],[0,4],[0,5],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]]}"#),
        ("cli_star.json", r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4]]}"#),
        ("cli_split.json", r#"{"n":4,"edges":[[0,1],[2,3]]}"#),
        ("cli_broken.json", r#"{"n":4,"edges":"#),
    ];
    for (name, text) in cases {
        let p = tmp(name);
        std::fs::write(&p, text).unwrap();
        let o = run(&[p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
    }
}

#[test]
fn oracle_check_passes_on_small_corpus() {
    for n in 1..=6 {
        for (i, g) in connected_planar_3graphs(n).iter().enumerate() {
            let p = write_graph(&format!("cli_corpus_{n}_{i}.json"), g);
            let o = run(&[p.to_str().unwrap(), "--mode", "global", "--oracle-check", "--validate"]);
            assert_eq!(o.status.code(), Some(0), "{:?}: {}", g.edges(), String::from_utf8_lossy(&o.stderr));
        }
    }
}

#[test]
fn edge_and_vertex_modes_with_oracle() {
    let p = write_graph("cli_k4_modes.json", &k4());
    let o = run(&[p.to_str().unwrap(), "--mode", "edge", "--edge", "1,2", "--oracle-check", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "bends: 4");
    let o = run(&[p.to_str().unwrap(), "--mode", "vertex", "--vertex", "3", "--oracle-check"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn outputs_are_written_and_deterministic() {
    let g = bendmin::gen::prism();
    let p = write_graph("cli_prism.json", &g);
    let mut runs = Vec::new();
    for k in 0..2 {
        let rep = tmp(&format!("cli_prism_{k}_rep.json"));
        let drawing = tmp(&format!("cli_prism_{k}.json"));
        let svg = tmp(&format!("cli_prism_{k}.svg"));
        let o = run(&[
            p.to_str().unwrap(),
            "--out",
            rep.to_str().unwrap(),
            "--out",
            drawing.to_str().unwrap(),
            "--out",
            svg.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        let files: Vec<Vec<u8>> = [rep, drawing, svg].iter().map(|f| std::fs::read(f).unwrap()).collect();
        runs.push((stdout(&o), files));
    }
    assert_eq!(runs[0], runs[1]);
    let (_, files) = &runs[0];
    let rep: serde_json::Value = serde_json::from_slice(&files[0]).unwrap();
    assert!(rep.get("angles").is_some());
    let drawing: serde_json::Value = serde_json::from_slice(&files[1]).unwrap();
    assert_eq!(drawing["vertices"].as_array().unwrap().len(), 6);
    assert!(String::from_utf8_lossy(&files[2]).contains("<svg"));
}

#[test]
fn unsupported_output_is_rejected() {
    let p = write_graph("cli_k4_out.json", &k4());
    let o = run(&[p.to_str().unwrap(), "--out", tmp("cli_out.png").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

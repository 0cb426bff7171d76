use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_totdom"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("totdom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn generated(args: &[&str], name: &str) -> PathBuf {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    scratch(name, &stdout(&o))
}

#[test]
fn spider_gamma_t() {
    let f = generated(&["generate", "spider", "3"], "spider3.txt");
    let o = run(&["gamma-t", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("gamma_t = 6\n"));
}

#[test]
fn c4_mu_star() {
    let f = scratch("c4.txt", "a b\nb c\nc d\nd a\n");
    let o = run(&["mu-star", f.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("mu_star = 2\n"));
}

#[test]
fn isolated_vertex_is_an_error() {
    let f = scratch("iso.txt", "vertices: z\na b\n");
    let o = run(&["gamma-t", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("isolated vertex: gamma_t undefined"));
}

#[test]
fn malformed_input_names_the_line() {
    let f = scratch("bad.txt", "a b\na b c\n");
    let o = run(&["gamma-t", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn recognize_examples() {
    let g2 = generated(&["generate", "subdivided-grid", "2"], "g2.txt");
    let o = run(&["recognize", g2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certificate: {u1 v1, u2 v2, u3 v3}"));

    let c7 = generated(&["generate", "cycle", "7"], "c7.txt");
    let o = run(&["recognize", c7.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("script-M empty, not maximal"));

    let c3 = scratch("c3.txt", "u v\nu w1\nv w1\n");
    let o = run(&["recognize", c3.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exceptional family K, n=1"));
}

#[test]
fn recognize_rejects_other_degrees() {
    let p = generated(&["generate", "spider", "2"], "spider2.txt");
    let o = run(&["recognize", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("totdom verify"));

    let k4 = scratch("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let o = run(&["recognize", k4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("minimum degree 3 or more"));
}

#[test]
fn certificates_round_trip_through_verify() {
    let g = scratch(
        "mixed.txt",
        "a0 a1\na1 a2\na2 a3\na3 a4\na4 a5\na5 a0\nu v\nu w1\nv w1\nu w2\nv w2\n",
    );
    let cert = std::env::temp_dir().join(format!("totdom-cli-{}/cert.txt", std::process::id()));
    let o = run(&[
        "recognize",
        g.to_str().unwrap(),
        "--oracle",
        "--certificate-out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("agrees"));
    let o = run(&["verify", g.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_examples() {
    let c4 = scratch("c4v.txt", "v0 v1\nv1 v2\nv2 v3\nv3 v0\n");
    let pm = scratch("c4m.txt", "v0 v1\nv2 v3\n");
    let o = run(&["verify", c4.to_str().unwrap(), pm.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(i): fails"));
    assert!(stdout(&o).contains("at v0 v3"), "{}", stdout(&o));

    let sp = generated(&["generate", "spider", "2"], "sp2v.txt");
    let legs = scratch("legs.txt", "x1 y1\nx2 y2\n");
    let o = run(&["verify", sp.to_str().unwrap(), legs.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("M- = {x1 y1, x2 y2}"));

    let shared = scratch("shared.txt", "v0 v1\nv1 v2\n");
    let o = run(&["verify", c4.to_str().unwrap(), shared.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("matching: fails"));

    let partial = scratch("partial.txt", "x1 y1\n");
    let o = run(&["verify", sp.to_str().unwrap(), partial.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("maximal: fails"));
}

#[test]
fn generate_examples() {
    let o = run(&["generate", "spider", "2"]);
    assert!(stdout(&o).contains("vertices: c x1 y1 z1 x2 y2 z2\n"));
    let o = run(&["generate", "prop2", "2", "3"]);
    let header = stdout(&o)
        .lines()
        .find(|l| l.starts_with("vertices:"))
        .unwrap()
        .to_owned();
    assert_eq!(header.split_whitespace().count(), 1 + 8);

    let a = run(&["generate", "family-f", "--seed", "7"]);
    let b = run(&["generate", "family-f", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    assert_eq!(run(&["generate", "prop2", "1", "3"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "spider"]).status.code(), Some(2));
}

#[test]
fn family_f_matching_verifies() {
    let m = std::env::temp_dir().join(format!("totdom-cli-{}/ffm.txt", std::process::id()));
    let g = generated(
        &[
            "generate",
            "family-f",
            "--seed",
            "3",
            "--matching-out",
            m.to_str().unwrap(),
        ],
        "ff.txt",
    );
    let o = run(&["verify", g.to_str().unwrap(), m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn bounds_examples() {
    let k4 = scratch("k4b.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let o = run(&["bounds", k4.to_str().unwrap()]);
    assert_eq!(
        stdout(&o),
        "min_degree = 3\ngamma_t = 2\nmu_star = 2\nbound = 3\nslack = 1\n"
    );
    let p2 = generated(&["generate", "prop2", "2", "3"], "p2.txt");
    assert!(stdout(&run(&["bounds", p2.to_str().unwrap()])).contains("slack = 0"));
    let sp = generated(&["generate", "spider", "2"], "sp2b.txt");
    assert!(stdout(&run(&["bounds", sp.to_str().unwrap()])).contains("slack = 0"));
}

#[test]
fn json_output_is_reproducible() {
    let f = generated(&["generate", "subdivided-grid", "2"], "g2j.txt");
    let args = ["--json", "recognize", f.to_str().unwrap()];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["exit_status"], 0);
    assert_eq!(doc["input"]["girth"], 6);
    assert_eq!(doc["result"]["verdict"], "yes");
    assert_eq!(doc["result"]["certificate_matching"][0][0], "u1");
}

#[test]
fn json_errors_are_documents() {
    let f = scratch("isoj.txt", "vertices: z\na b\n");
    let o = run(&["--json", "gamma-t", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(doc["error"].as_str().unwrap().contains("isolated vertex"));
}

#[test]
fn vertex_limit_from_environment() {
    let f = generated(&["generate", "cycle", "12"], "c12.txt");
    let o = bin()
        .args(["gamma-t", f.to_str().unwrap()])
        .env("TOTDOM_VERTEX_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("limit exceeded"));
    let o = bin()
        .args(["gamma-t", f.to_str().unwrap()])
        .env("TOTDOM_VERTEX_LIMIT", "65")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

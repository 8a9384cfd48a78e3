use std::process::{Command, Output};

fn dsqec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dsqec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn tables_rows() {
    let o = dsqec(&["tables", "I"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 17);
    assert_eq!(lines[2], "XIIII\t0,0,0,1");
    let out = stdout(&dsqec(&["tables", "II"]));
    assert_eq!(out.lines().last(), Some("s4 flip\t0,0,0,0,1"));
    let out = stdout(&dsqec(&["tables", "III"]));
    assert!(out.contains("ZIIIIII\t1,0,0,0,0,0\t1,0,0,1,1,1\n"));
    assert_eq!(dsqec(&["tables", "IV"]).status.code(), Some(2));
}

#[test]
fn distance_of_fixture() {
    let o = dsqec(&["distance", "--code", "five_qubit", "--cutoff", "5"]);
    assert_eq!(stdout(&o), "d=3 d_pure=3\n");
    let o = dsqec(&["distance", "--code", "five_qubit", "--cutoff", "2"]);
    assert_eq!(stdout(&o), "d>2 d_pure>2\n");
}

#[test]
fn verify_global_exit_codes() {
    let ok = dsqec(&[
        "verify-global",
        "--checkset",
        "five_qubit_parity",
        "--budget",
        "sym:1",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).ends_with("ok\n"));
    let bad = dsqec(&["verify-global", "--code", "five_qubit", "--budget", "sym:1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("data XIIII vs flip s3, shared syndrome (0,0,0,1)"));
    let malformed = dsqec(&["verify-global", "--code", "five_qubit", "--budget", "sym"]);
    assert_eq!(malformed.status.code(), Some(2));
    let missing = dsqec(&["verify-global", "--checkset", "/nonexistent/file.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn bounds() {
    let o = dsqec(&[
        "bound",
        "symmetric",
        "--n",
        "5",
        "--k",
        "1",
        "--r",
        "0",
        "--t",
        "1",
    ]);
    assert_eq!(stdout(&o), "20 > 16\n");
    assert_eq!(o.status.code(), Some(1));
    let o = dsqec(&[
        "bound",
        "symmetric",
        "--n",
        "5",
        "--k",
        "1",
        "--r",
        "1",
        "--t",
        "1",
    ]);
    assert_eq!(stdout(&o), "21 <= 32\n");
    assert_eq!(o.status.code(), Some(0));
    let o = dsqec(&[
        "bound", "hybrid", "--nq", "5", "--nc", "0", "--tq", "1", "--tc", "0", "--s", "4",
    ]);
    assert_eq!(stdout(&o), "16 <= 16\n");
}

#[test]
fn lemma1_and_oa() {
    let o = dsqec(&["verify-lemma1", "--checkset", "steane_alt", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = dsqec(&["verify-lemma1", "--code", "five_qubit", "--d", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = dsqec(&["verify-oa", "--code", "five_qubit", "--l", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = dsqec(&["verify-oa", "--code", "five_qubit", "--l", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn augment_round_trips_through_a_file() {
    let dir = std::env::temp_dir().join(format!("dsqec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("random.txt");
    let path = path.to_str().unwrap();
    let args = [
        "augment",
        "--code",
        "five_qubit",
        "--method",
        "random",
        "--seed",
        "4",
        "--out",
        path,
    ];
    assert!(dsqec(&args).status.success());
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("# random augmentation of five_qubit"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 23);
    assert!(dsqec(&args).status.success());
    assert_eq!(std::fs::read_to_string(path).unwrap(), text);
    let o = dsqec(&["verify-lemma1", "--checkset", path, "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn augment_methods() {
    let o = dsqec(&["augment", "--code", "steane_css", "--method", "css-pair"]);
    assert!(stdout(&o).contains("XXXIIIX\nZZZIIIZ\n"));
    let o = dsqec(&["augment", "--code", "five_qubit", "--method", "css-pair"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dsqec(&["augment", "--code", "five_qubit", "--method", "phf-double"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dsqec(&["augment", "--code", "five_qubit", "--method", "parity"]);
    assert_eq!(
        stdout(&o),
        "# parity augmentation of five_qubit\n5 1\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\nZZXIX\n"
    );
}

#[test]
fn simulate_is_reproducible() {
    let args = [
        "simulate",
        "--checkset",
        "five_qubit_parity",
        "--budget",
        "sym:1",
        "--p",
        "0.01",
        "--q",
        "0.005",
        "--trials",
        "20000",
        "--seed",
        "7",
    ];
    let a = stdout(&dsqec(&args));
    let b = stdout(&dsqec(&args));
    assert_eq!(a, b);
    let lines: Vec<&str> = a.lines().collect();
    assert_eq!(lines[0], "p\tq\ttrials\tfailures\tlogical\tflagged\tseed");
    let cells: Vec<&str> = lines[1].split('\t').collect();
    assert_eq!(&cells[..3], &["0.010000", "0.005000", "20000"]);
    assert_eq!(cells[6], "7");
    let failures: u64 = cells[3].parse().unwrap();
    let logical: u64 = cells[4].parse().unwrap();
    let flagged: u64 = cells[5].parse().unwrap();
    assert_eq!(failures, logical + flagged);
}

#[test]
fn help_names_constructs() {
    let out = stdout(&dsqec(&["--help"]));
    for word in [
        "syndrome",
        "RAYON_NUM_THREADS",
        "Orthogonal-array",
        "Hamming",
    ] {
        assert!(out.contains(word), "{word} missing from help");
    }
}

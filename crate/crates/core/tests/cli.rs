use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_palfact"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn pl_of_small_words() {
    let o = run(&["pl"], b"abaab\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2\n");
    assert_eq!(stdout(&run(&["pl"], b"")), "0\n");
    for alg in ["fast", "quadratic", "oracle"] {
        assert_eq!(stdout(&run(&["pl", "--algorithm", alg], b"abaca")), "3\n");
    }
}

#[test]
fn pl_all_prefixes() {
    let o = run(&["pl", "--all-prefixes"], b"caaabaaabaaabaaa\n");
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 17);
    assert_eq!(lines.join(" "), "0 1 2 2 2 3 3 3 2 3 3 3 2 3 3 3 2");
}

#[test]
fn newline_handling() {
    // "aa\n" keeps the newline: "aa" + "\n" is two palindromes
    assert_eq!(stdout(&run(&["pl"], b"aa\n")), "1\n");
    assert_eq!(stdout(&run(&["pl", "--keep-newline"], b"aa\n")), "2\n");
}

#[test]
fn oracle_cap_is_an_error() {
    let o = run(&["pl", "--algorithm", "oracle", "--oracle-cap", "3"], b"abcd");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn factorize_output() {
    let o = run(&["factorize"], b"abaca\n");
    assert!(o.status.success());
    let out = stdout(&o);
    let parts: Vec<&str> = out.trim_end().split('|').collect();
    assert_eq!(parts.len(), 3);
    assert_eq!(parts.concat(), "abaca");
    assert!(parts.iter().all(|p| p.bytes().eq(p.bytes().rev())));
    assert_eq!(stdout(&run(&["factorize"], b"a")), "a\n");
}

#[test]
fn factorize_json() {
    let o = run(&["factorize", "--json"], b"abbaabaabbba");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pl"], 3);
    let parts = v["parts"].as_array().unwrap();
    assert_eq!(parts.len(), 3);
    assert_eq!(parts[0]["start"], 1);
    let total: u64 = parts.iter().map(|p| p["length"].as_u64().unwrap()).sum();
    assert_eq!(total, 12);
}

#[test]
fn decimal_symbols() {
    let z10 = b"1 2 1 3 1 2 1 4 1 2\n";
    assert_eq!(stdout(&run(&["pl", "--decimal"], z10)), "4\n");
    assert_eq!(stdout(&run(&["pl", "--decimal", "--algorithm", "oracle"], z10)), "4\n");
    let parts = stdout(&run(&["factorize", "--decimal"], z10));
    assert_eq!(parts.trim_end().split(" | ").count(), 4);
    let o = run(&["pl", "--decimal"], b"1 x");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn zimin_output() {
    assert_eq!(stdout(&run(&["zimin", "10"], b"")), "1 2 1 3 1 2 1 4 1 2\n");
    let empty = run(&["zimin", "0"], b"");
    assert!(empty.status.success());
    assert!(empty.stdout.is_empty());
    let stats = run(&["zimin", "1024", "--stats"], b"");
    assert!(stats.status.success());
    let out = stdout(&stats);
    assert!(out.lines().skip(2).take(1024).all(|l| l.ends_with(",yes")));
    assert!(out.trim_end().ends_with("# all 1024 rounds match"));
}

#[test]
fn verify_agrees() {
    let o = run(&["verify"], b"abaababbabbaababaab");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("ok: n=19"));
    let big = run(&["verify", "--oracle-cap", "4"], b"abaababbab");
    assert!(big.status.success());
    assert!(stdout(&big).contains("oracle skipped"));
}

#[test]
fn missing_file_is_usage_error() {
    let o = run(&["pl", "/nonexistent/input.txt"], b"");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/input.txt"));
}

#[test]
fn bench_csv_and_json() {
    let o = run(&["bench", "--family", "zimin", "--n", "64", "--csv", "-"], b"");
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("# family=zimin(n=64)"));
    assert_eq!(lines[1], "j,gap_triples,triples_processed");
    assert_eq!(lines.len(), 66);
    assert_eq!(lines[65].split(',').nth(1), Some("1"));

    let o = run(&["bench", "--family", "random", "--n", "1000", "--seed", "4", "--json"], b"");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 4);
    assert_eq!(v["n"], 1000);

    let o = run(&["bench", "--family", "repeated", "--n", "1000", "--engine", "quadratic", "--json"], b"");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["total_triples"], 500500);
}

#[test]
fn bench_sweep_fits() {
    let o = run(&["bench", "--family", "zimin", "--sweep", "10..14"], b"");
    assert!(o.status.success());
    assert!(stdout(&o).contains("winner: NLogN"));
    let few = run(&["bench", "--sweep", "10..12"], b"");
    assert_eq!(few.status.code(), Some(2));
}

use std::process::{Command, Output};

fn samerep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_samerep")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_prints_canonical_text() {
    let out = samerep(&["gen", "chen-lev", "--l", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "C=0,3,4,5 D=1,2,3,6 r=3 m=6\n");
    assert_eq!(stdout(&samerep(&["gen", "evil", "--l", "3"])), "0,3,5,6\n");
    assert_eq!(stdout(&samerep(&["gen", "tm-pair", "--l", "2"])), "C=0,3 D=1,2 m=3\n");
}

#[test]
fn exit_codes() {
    assert_eq!(samerep(&["verify", "thm3", "--m-max", "64"]).status.code(), Some(0));
    assert_eq!(samerep(&["gen", "unicorn"]).status.code(), Some(2));
    assert_eq!(samerep(&["search", "periodic:3", "--n", "5"]).status.code(), Some(2));
    assert_eq!(samerep(&["gen", "lift", "--l", "1"]).status.code(), Some(2));
    assert_eq!(samerep(&["verify", "thm6", "--m-max", "1000"]).status.code(), Some(3));
    assert_eq!(
        samerep(&["search", "periodic:0,2", "--n", "5000"]).status.code(),
        Some(3)
    );
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["verify", "thm6", "--m-max", "40", "--format", "json"][..],
        &["verify", "cor1", "--m-max", "256", "--format", "csv"],
        &["search", "periodic:0,4", "--n", "24", "--format", "json"],
    ] {
        let a = samerep(args);
        let b = samerep(args);
        let mut seq = vec!["--sequential"];
        seq.extend_from_slice(args);
        let c = samerep(&seq);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stdout, c.stdout);
    }
}

#[test]
fn search_reports() {
    let out = stdout(&samerep(&["search", "periodic:3,7", "--n", "27"]));
    assert!(out.starts_with("spec=periodic:3,7 N=27 n*=27 complete=true"), "{out}");
    let out = stdout(&samerep(&["search", "finite:", "--n", "8", "--m", "4"]));
    assert_eq!(out, "contradiction at 5: Mismatch\n");
}

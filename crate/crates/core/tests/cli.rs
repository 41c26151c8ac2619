use std::process::{Command, Output};

fn qshuffle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshuffle"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn mul_prints_canonical_product() {
    let o = qshuffle(&["mul", "--quiver", "a1", "--expr", "e[1=1; z[1,1]]", "--expr", "e[1=1; 1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "q^-1*z[1,1] + q^-1*z[1,2] - 2*q^-2*z[1,1] - 2*q^-2*z[1,2] + q^-3*z[1,1] + q^-3*z[1,2]\n"
    );
}

#[test]
fn member_accepts_generators() {
    let o = qshuffle(&["member", "--quiver", "a1", "--expr", "e[1=2; z[1,1]*z[1,2]]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS\n");
    let o = qshuffle(&["member", "--quiver", "jordan", "--expr", "e[1=1; 1] * e[1=1; z[1,1]^-1]"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn phi_modes_agree_on_a_generator() {
    let args = |mode: &'static str| {
        vec!["phi", "--quiver", "fixtures/jordan_framed.json", "--dim", "2", "--mode", mode, "--expr", "e[1=1; z[1,1]]"]
    };
    let residue = qshuffle(&args("residue"));
    let closed = qshuffle(&args("closed"));
    assert_eq!(residue.status.code(), Some(0));
    assert_eq!(closed.status.code(), Some(0));
    assert_eq!(stdout(&residue), stdout(&closed));
    assert!(stdout(&residue).contains("D[1,2]^1"));
    let f = qshuffle(&["phi", "--quiver", "fixtures/jordan_framed.json", "--dim", "1", "--mode", "closed", "--expr", "f[1=1; z[1,1]]"]);
    assert_eq!(stdout(&f), "[-q^-1*tau[1,1] + q^-1*w[1,1]]/[1] * D[1,1]^-1\n");
}

#[test]
fn closed_mode_needs_a_single_generator() {
    let o = qshuffle(&["phi", "--quiver", "a1", "--dim", "1", "--mode", "closed", "--expr", "e[1=1;1] + e[1=1;1]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = qshuffle(&["verify", "--quiver", "a1", "--suite", "chi"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("suite chi\nquiver a1\nseed 0\n"));
    let o = qshuffle(&["verify", "--quiver", "a1", "--suite", "wheel", "--cases", "3", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("failed 1\n"));
    assert!(out.contains("partition (1)"));
}

#[test]
fn verify_reports_are_reproducible() {
    let run = || {
        let o = qshuffle(&["verify", "--quiver", "a2", "--suite", "xi", "--seed", "11", "--cases", "4"]);
        let text = stdout(&o);
        text.lines().filter(|l| !l.starts_with("wall_time")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(run(), run());
}

#[test]
fn bad_inputs_exit_with_two() {
    let o = qshuffle(&["mul", "--quiver", "fixtures/bad_endpoint.json", "--expr", "e[1=1;1]", "--expr", "e[1=1;1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("arrows[0].target"));
    let o = qshuffle(&["mul", "--quiver", "a1", "--expr", "e[1=1; z[1,1]", "--expr", "e[1=1;1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 14"));
    let o = qshuffle(&["verify", "--quiver", "a1", "--suite", "nosuch"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qshuffle(&["member", "--quiver", "a1", "--expr", "e[2=1; 1]"]);
    assert_eq!(o.status.code(), Some(2));
}

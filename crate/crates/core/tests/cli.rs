use std::process::{Command, Output};

fn invforge(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_invforge"));
    cmd.args(args).env_remove("INVFORGE_THREADS");
    if let Some(t) = threads {
        cmd.env("INVFORGE_THREADS", t);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn psi_json_lists_five_terms() {
    let o = invforge(&["psi", "--n", "2", "--q", "1", "--words", "x1,x2,x1*x2", "--out", "json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().map(|t| t.len()), Some(5), "{v}");
}

#[test]
fn hilbert_methods_agree() {
    let o = invforge(&["hilbert", "--n", "3", "--q", "1", "--m", "2", "--truncate", "6", "--method", "both"], None);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("agree"), "{s}");
}

#[test]
fn verify_suite_passes() {
    let o = invforge(&["verify", "--suite", "section6"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(invforge(&["psi", "--n", "2", "--words", "x1,x2,x1**x2"], None).status.code(), Some(2));
    assert_eq!(invforge(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(invforge(&["verify", "--suite", "nope"], None).status.code(), Some(2));
    assert_eq!(invforge(&["hilbert", "--n", "2", "--q", "3", "--m", "1", "--truncate", "4", "--method", "molien"], None).status.code(), Some(3));
    assert_eq!(invforge(&["--help"], None).status.code(), Some(0));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["dims", "--n", "3", "--q", "1", "--m", "2", "--truncate", "5", "--out", "json"];
    let a = invforge(&args, None);
    let b = invforge(&args, Some("1"));
    let c = invforge(&args, Some("4"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert_eq!(invforge(&args, Some("0")).status.code(), Some(2));
    assert_eq!(invforge(&args, Some("many")).status.code(), Some(2));
}

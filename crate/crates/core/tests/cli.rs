use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use series_roots::bfile::parse_bfile;
use series_roots::codes::{fixture_enumerator, membership_order};
use series_roots::scan::{scan_dir, FileOutcome};
use series_roots::{is_nth_power, nth_root};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_series-roots"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("series-roots-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write_output(args: &[&str], path: &Path) {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}");
    std::fs::write(path, o.stdout).unwrap();
}

fn d4_file(dir: &Path) -> PathBuf {
    let p = dir.join("d4.txt");
    write_output(&["--bfile", "theta", "D4", "--max-norm", "30"], &p);
    p
}

#[test]
fn root_of_d4_theta() {
    let dir = scratch("root");
    let d4 = d4_file(&dir);
    let o = run(&["--bfile", "root", "-n", "4", d4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let root = parse_bfile(&stdout(&o)).unwrap();
    let even: Vec<String> = root
        .values
        .iter()
        .step_by(2)
        .take(6)
        .map(|v| v.to_string())
        .collect();
    assert_eq!(even, ["1", "6", "-48", "672", "-10686", "185472"]);
    assert_eq!(root.values.len(), 31);
}

#[test]
fn non_member_exits_one() {
    let dir = scratch("test");
    let d4 = d4_file(&dir);
    let o = run(&["test", "-n", "8", d4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("obstruction at x^4"));
    let o = run(&["test", "-n", "4", d4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn maxpow_lists_orders() {
    let dir = scratch("maxpow");
    let d4 = d4_file(&dir);
    let o = run(&["maxpow", "--bound", "8", d4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 2 4");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = scratch("errors");
    let gap = dir.join("gap.txt");
    std::fs::write(&gap, "0 1\n2 3\n").unwrap();
    assert_eq!(
        run(&["test", "-n", "2", gap.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["test", "-n", "2", dir.join("missing.txt").to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["theta", "Q99", "--max-norm", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["root", "-n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["wenum", "fixture", "nope"]).status.code(), Some(2));
}

#[test]
fn extremal_leech() {
    let o = run(&["theta-extremal", "-d", "24", "--order", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("c = [1, -720]"));
    assert!(out.contains("1, 0, 0, 0, 196560, 0, 16773120"));
}

#[test]
fn fixture_enumerator_round_trips() {
    let o = run(&["--bfile", "wenum", "fixture", "golay"]);
    assert_eq!(o.status.code(), Some(0));
    let printed = parse_bfile(&stdout(&o)).unwrap().to_series().unwrap();
    assert_eq!(&printed, fixture_enumerator("golay").unwrap().series());
}

#[test]
fn generator_file_enumerator() {
    let dir = scratch("gen");
    let good = dir.join("good.gen");
    std::fs::write(&good, "# repetition code squared\n2 4 2\n1100\n0011\n").unwrap();
    let o = run(&["wenum", "fixture", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1, 0, 2, 0, 1"));
    let bad = dir.join("bad.gen");
    std::fs::write(&bad, "2 4 2\n1100\n1100\n").unwrap();
    assert_eq!(
        run(&["wenum", "fixture", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn congruence_commands_hold() {
    for args in [
        &["congruence", "hanna2", "--order", "128"][..],
        &["congruence", "hanna3", "--order", "81"],
        &["congruence", "postscript", "--order", "60"],
        &["congruence", "rm", "--m-max", "4"],
        &["congruence", "bch", "--m-max", "4"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAILS"));
    }
}

#[test]
fn hanna_and_permutation_listings() {
    let o = run(&["hanna", "-k", "3", "-N", "12"]);
    assert_eq!(stdout(&o).trim(), "1, 3, 3, 1, 3, 3, 3, 3, 3, 3, 3, 3");
    let o = run(&["hanna", "-k", "2", "-N", "10", "--root"]);
    assert_eq!(stdout(&o).trim(), "1, 1, 0, 1, 0, 1, -1, 2, -2, 4");
    let o = run(&["hanna", "-k", "3", "-N", "8", "--mod"]);
    assert_eq!(stdout(&o).trim(), "1, 1, 0, 0, 1, 2, 2, 1");
    let o = run(&["perm", "-N", "10"]);
    assert_eq!(stdout(&o).trim(), "1, 3, 6, 4, 9, 12, 7, 15, 18, 2");
}

#[test]
fn scan_corpus_matches_library() {
    let dir = scratch("scan");
    d4_file(&dir);
    write_output(
        &["--bfile", "wenum", "fixture", "golay"],
        &dir.join("golay.txt"),
    );
    let ones: String = (0..40).map(|i| format!("{i} 1\n")).collect();
    std::fs::write(dir.join("ones.txt"), ones).unwrap();
    std::fs::write(dir.join("two.txt"), "0 2\n1 1\n").unwrap();
    std::fs::write(dir.join("junk.txt"), "hello\n").unwrap();

    let ns: Vec<u64> = (2..=24).collect();
    let reports = scan_dir(&dir, &ns, 1000).unwrap();
    assert_eq!(reports.len(), 5);
    for r in &reports {
        let name = r.path.file_name().unwrap().to_str().unwrap();
        match (name, &r.outcome) {
            ("junk.txt", FileOutcome::Unreadable(_)) | ("two.txt", FileOutcome::Skipped(_)) => {}
            (_, FileOutcome::Tested { verdicts, .. }) => {
                let f = parse_bfile(&std::fs::read_to_string(&r.path).unwrap())
                    .unwrap()
                    .to_series()
                    .unwrap();
                for v in verdicts {
                    let direct = is_nth_power(&f, v.n).unwrap();
                    assert_eq!(
                        (v.member, v.fail_index),
                        (direct.is_member(), direct.fail_index()),
                        "{name} n={}",
                        v.n
                    );
                }
                let members: Vec<u64> = verdicts.iter().filter(|v| v.member).map(|v| v.n).collect();
                match name {
                    "d4.txt" => {
                        assert_eq!(members, [2, 4]);
                        let cert = verdicts[2]
                            .certificate
                            .as_ref()
                            .unwrap()
                            .to_series()
                            .unwrap();
                        assert_eq!(Some(&cert), nth_root(&f, 4).unwrap().root_prefix());
                    }
                    "golay.txt" | "ones.txt" => assert!(members.is_empty(), "{name}: {members:?}"),
                    _ => unreachable!(),
                }
            }
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    // scan tests at most the file's own length; padding the Golay enumerator
    // to the membership order leaves the verdicts unchanged
    let golay = fixture_enumerator("golay").unwrap();
    let padded = golay.padded(membership_order(golay.n));
    assert!((2..=24).all(|n| !is_nth_power(&padded, n).unwrap().is_member()));

    let o = run(&["scan", "-n", "2..24", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("d4.txt\tn=4\tmember to order 31"));
    assert!(out.contains("junk.txt\tunreadable"));
    assert!(out.contains("two.txt\tskipped"));
}

//! The `coble` binary: exit codes, JSON output, determinism and the
//! documented check list.

use std::process::{Command, Output};

use coble::cli::registry;
use serde_json::Value;

fn coble(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coble")).args(args).output().expect("binary runs")
}

fn json_lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout).lines().map(|l| serde_json::from_str(l).expect("JSON line")).collect()
}

fn stable(v: &Value) -> String {
    let mut v = v.clone();
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v.to_string()
}

#[test]
fn readme_lists_exactly_the_registry() {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    let section = readme.split("## Checks").nth(1).unwrap().split("\n## ").next().unwrap();
    let documented: Vec<(String, String)> = section
        .lines()
        .filter_map(|l| {
            let cells: Vec<&str> = l.split('|').map(str::trim).collect();
            let name = cells.get(1)?.strip_prefix('`')?.strip_suffix('`')?;
            Some((name.to_string(), cells.get(2)?.to_string()))
        })
        .collect();
    let registered: Vec<(String, String)> =
        registry().iter().map(|e| (e.name.to_string(), e.suite.to_string())).collect();
    assert_eq!(documented, registered);

    let listed = json_lines(&coble(&["verify", "--list"]));
    let names: Vec<&str> = listed.iter().map(|v| v["name"].as_str().unwrap()).collect();
    assert_eq!(names, registered.iter().map(|(n, _)| n.as_str()).collect::<Vec<_>>());
}

#[test]
fn unknown_check_is_a_usage_error_before_any_work() {
    let o = coble(&["verify", "cr_self_duality", "no_such_check"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("no_such_check"));
}

#[test]
fn other_usage_errors() {
    for args in [
        &["table", "no-such-table"][..],
        &["singular-locus", "--t", "sqrt(5)"],
        &["singular-locus", "--t", "1/0"],
        &["subgroups", "--rank", "1", "--variety", "X_9"],
        &["conic", "--tau", "1", "--u", "1:2"],
        &["wiman-edge"],
        &["verify", "--jobs", "0"],
    ] {
        assert_eq!(coble(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(coble(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_file_matches_stdout_and_io_errors_exit_2() {
    let dir = std::env::temp_dir().join(format!("coble-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.jsonl");
    let o = coble(&["verify", "cr_incidence_15_3", "cr_self_duality", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), o.stdout);
    let bad = dir.join("missing").join("out.jsonl");
    let o = coble(&["verify", "cr_self_duality", "--json", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn seeded_checks_are_deterministic_and_ordered() {
    let names = ["frobenius_reciprocity", "igusa_pulls_back_to_branch_quartic", "tau_value_table"];
    let run = |jobs: &str, seed: &str| {
        let mut args = vec!["verify", "--jobs", jobs, "--seed", seed];
        args.extend(names);
        let o = coble(&args);
        assert_eq!(o.status.code(), Some(0));
        json_lines(&o).iter().map(stable).collect::<Vec<_>>()
    };
    let a = run("1", "5");
    assert_eq!(a, run("3", "5"));
    let order: Vec<String> = a.iter().map(|l| serde_json::from_str::<Value>(l).unwrap()["name"].to_string()).collect();
    assert_eq!(order, ["\"igusa_pulls_back_to_branch_quartic\"", "\"tau_value_table\"", "\"frobenius_reciprocity\""]);
}

#[test]
fn twisted_rank_one_row() {
    let o = coble(&["table", "rank1-subgroups", "--action", "twisted"]);
    assert_eq!(o.status.code(), Some(0));
    let t = &json_lines(&o)[0];
    assert_eq!(t["matched"], true);
    assert_eq!(t["rows"].as_array().unwrap().len(), 1);
    assert_eq!(t["rows"][0]["computed"].as_array().unwrap().len(), 16);
}

#[test]
fn subgroups_subcommand_counts() {
    for (rank, variety, action, count) in
        [("1", "X_t", "natural", 25), ("1", "Y", "twisted", 16), ("2", "X_1/6", "natural", 13), ("2", "X_7/10", "natural", 17)]
    {
        let o = coble(&["subgroups", "--rank", rank, "--variety", variety, "--action", action]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(json_lines(&o)[0]["count"], count, "{rank} {variety} {action}");
    }
}

#[test]
fn informational_subcommands() {
    let o = coble(&["orbits"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o)[0]["total_points"], 76);

    let o = coble(&["singular-locus", "--t", "1/2"]);
    assert_eq!(json_lines(&o)[0]["singular_orbits"], serde_json::json!(["Sigma15", "Sigma30"]));

    let o = coble(&["wiman-edge", "--singular-members"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o)[0]["singular_members"]["witnesses"].as_array().unwrap().len(), 5);

    let o = coble(&["cr", "--kernel"]);
    let dims: Vec<u64> =
        json_lines(&o)[0]["kernel"].as_array().unwrap().iter().map(|r| r["dimension"].as_u64().unwrap()).collect();
    assert_eq!(dims[0], 1);
}

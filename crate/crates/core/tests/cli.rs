use blockperm::cli::run;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("blockperm").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = cli(args);
    assert_eq!(code, 0, "{args:?} failed: {err}");
    out
}

#[test]
fn map_golden_examples() {
    assert_eq!(ok(&["map", "w", "--perm", "236|14578"]), "2346|1578\n");
    assert_eq!(ok(&["map", "v", "--perm", "2346|1578"]), "236|14578\n");
    assert_eq!(ok(&["map", "swap", "--index", "2", "--perm", "1|37|2458|6"]), "1|3478|25|6\n");
    assert_eq!(ok(&["map", "swap", "--index", "2", "--perm", "1|3478|25|6"]), "1|37|2458|6\n");
    assert_eq!(ok(&["map", "sort", "--target", "2,2", "--perm", "13|24"]), "13|24\n");
    assert_eq!(ok(&["map", "transfer", "--index", "1", "--perm", "2|134"]), "23|14\n");
}

#[test]
fn map_with_trace() {
    let out = ok(&["map", "swap", "--index", "2", "--perm", "1|37|2458|6", "--trace"]);
    let (image, trace) = out.split_once('\n').unwrap();
    assert_eq!(image, "1|3478|25|6");
    let trace: serde_json::Value = serde_json::from_str(trace.trim()).unwrap();
    assert_eq!(trace.as_array().unwrap().len(), 2);
    assert_eq!(trace[0]["map"], "W");
    assert_eq!(trace[0]["after"], "1|347|258|6");
}

#[test]
fn map_json() {
    let out = ok(&["--json", "map", "w", "--perm", "236|14578"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["perm"], "2346|1578");
    assert_eq!(v["comp"], serde_json::json!([4, 4]));
    assert_eq!(v["values"], serde_json::json!([2, 3, 4, 6, 1, 5, 7, 8]));
    assert!(v.get("trace").is_none());
}

#[test]
fn max_edits() {
    assert_eq!(ok(&["map", "delete-max", "--k", "1", "--perm", "24|13"]), "2|13\n");
    assert_eq!(ok(&["map", "insert-max", "--k", "1", "--perm", "2|13"]), "24|13\n");
}

#[test]
fn counts() {
    assert_eq!(ok(&["count", "--k", "1", "--comp", "1,1,1"]), "5\n");
    assert_eq!(ok(&["count", "--k", "1", "--comp", "2,2"]), "2\n");
    assert_eq!(ok(&["count", "--lis", "3", "--comp", "2,3"]), "5\n");
    let v: serde_json::Value = serde_json::from_str(&ok(&["--json", "count", "--k", "1", "--comp", "1,1,1,1"])).unwrap();
    assert_eq!(v["count"], "14");
    assert_eq!(v["k"], 1);
}

#[test]
fn count_table_csv() {
    let out = ok(&["count", "--table", "--lis", "1", "--comp", "2,2"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("comp,selector,count"));
    let total: u64 = lines.map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 6);
}

#[test]
fn enumerate_streams_in_order() {
    let out = ok(&["enumerate", "--k", "0", "--comp", "1,1"]);
    assert_eq!(out, "2|1\n");
    let all = ok(&["enumerate", "--comp", "1,2"]);
    assert_eq!(all, "1|23\n2|13\n3|12\n");
}

#[test]
fn tableau_counts() {
    assert_eq!(ok(&["tableau", "count", "--outer", "2,2"]), "2\n");
    assert_eq!(ok(&["tableau", "count", "--outer", "3,3,1", "--inner", "1"]), ok(&["count", "--k", "2", "--comp", "1,2,2"]));
    let big = ok(&["tableau", "count", "--outer", "7,7,7,7,4", "--inner", "2"]);
    assert!(big.trim().parse::<u128>().is_ok());
    let drawn = ok(&["tableau", "count", "--outer", "2,1", "--inner", "1", "--draw"]);
    assert_eq!(drawn, ".#\n#\n2\n");
}

#[test]
fn verify_reports() {
    let out = ok(&["verify", "--suite", "catalan", "--max-size", "5"]);
    assert!(out.lines().all(|l| l.starts_with("PASS catalan/")));
    let v: serde_json::Value = serde_json::from_str(&ok(&["--json", "verify", "--suite", "w-v", "--max-size", "5"])).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["counterexample"].is_null()));
}

#[test]
fn exit_codes() {
    // Domain errors exit with 1.
    let (code, _, err) = cli(&["map", "w", "--perm", "123|"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
    assert_eq!(cli(&["map", "w", "--perm", "21|3"]).0, 2, "a descent inside a block is rejected while parsing");
    assert_eq!(cli(&["map", "inject", "--target", "3,1", "--perm", "12|34"]).0, 1);

    // Usage errors exit with 2.
    assert_eq!(cli(&["count", "--comp", "1,1"]).0, 2);
    assert_eq!(cli(&["map", "swap", "--perm", "1|2"]).0, 2);
    assert_eq!(cli(&["count", "--k", "1", "--lis", "2", "--comp", "1"]).0, 2);
    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["verify", "--suite", "nope"]).0, 2);
}

#[test]
fn size_cap_is_a_domain_error() {
    let (code, _, err) = cli(&["count", "--k", "1", "--comp", "5,5,5"]);
    assert_eq!(code, 1);
    assert!(err.contains("15"), "{err}");
    assert_eq!(ok(&["count", "--k", "0", "--comp", "5,5,5", "--cap", "15"]), "0\n");
}

use std::process::{Command, Output};

fn ringline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringline"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn parse_prints_canonical_form() {
    let out = ringline(&["parse", "GF(2)xGF(3)  x GF(5)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "GF(2) x GF(3) x GF(5)\n");

    let out = ringline(&["parse", "Z4[x]/(x^2+5x+1)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["canonical"], "Z4[x]/(x^2+x+1)");
    assert_eq!(v["ast"]["kind"], "quotient");
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["parse", "GF(6)"][..],
        &["parse", "Z4 x"],
        &["profile", "Z4[x]/(2x^2+1)"],
        &["ring", "Z5000"],
        &["frobnicate"],
        &["table", "--orders", "9..2"],
    ] {
        let out = ringline(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let err = String::from_utf8(ringline(&["parse", "Z4 x"]).stderr).unwrap();
    assert!(err.contains("offset 4"), "{err}");
}

#[test]
fn profile_json_matches_worked_example() {
    let out = ringline(&["profile", "Z4 x Z4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{
            "typeLabel": "16/12",
            "profile": {"tot": 36, "tpI": 28, "oneN": 19, "cap2N": 8, "cap3N": 0, "jcb": 3, "md": 3},
            "expr": "Z4 x Z4"
        }])
    );
}

#[test]
fn profile_csv_has_fixed_columns() {
    let out = ringline(&["profile", "GF(7) x Z4", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "typeLabel,tot,tpI,oneN,cap2N,cap3N,jcb,md,expr\n28/16,48,44,19,4,0,11,3,GF(7) x Z4\n"
    );
}

#[test]
fn table_check_small_orders() {
    let out = ringline(&["table", "--orders", "2..9", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 20, "{text}");
    assert!(!text.contains("FAIL"));
    assert!(text.contains("16 distinct profiles"), "{text}");
}

#[test]
fn full_table_check_passes() {
    let out = ringline(&["table", "--check", "--jobs", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        [
            "typeLabel",
            "tot",
            "tpI",
            "oneN",
            "cap2N",
            "cap3N",
            "jcb",
            "md",
            "expr",
            "pass"
        ]
    );
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 84);
    assert!(rows.iter().all(|r| &r[9] == "PASS"));
    let summary = String::from_utf8(out.stderr).unwrap();
    assert!(summary.contains("65 distinct profiles"), "{summary}");
}

#[test]
fn table_csv_is_stable_across_job_counts() {
    let a = ringline(&["table", "--format", "csv", "--jobs", "1"]);
    let b = ringline(&["table", "--format", "csv", "--jobs", "1"]);
    let c = ringline(&["table", "--format", "csv", "--jobs", "6"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn table_json_lists_records() {
    let out = ringline(&["table", "--orders", "4..4", "--format", "json", "--check"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["pass"] == true));
    assert_eq!(rows[0]["typeLabel"], "4/1");
}

#[test]
fn markdown_table() {
    let out = ringline(&["table", "--orders", "2..3", "--format", "markdown"]);
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with('|'), "{text}");
    assert!(text.contains("GF(3)"));
}

#[test]
fn dot_export_of_z4() {
    let out = ringline(&["line", "Z4", "--export-graph", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("graph neighbour {"));
    assert_eq!(dot.matches(" -- ").count(), 3);
    assert!(dot.contains("[label=\"(1,2)\"]"));
    assert!(dot.trim_end().ends_with('}'));
}

#[test]
fn csv_edge_list_counts_distant_pairs() {
    let out = ringline(&[
        "line",
        "GF(3)",
        "--export-graph",
        "csv",
        "--graph",
        "distant",
    ]);
    let edges = stdout(&out).lines().count() - 1;
    assert_eq!(edges, 4 * 3 / 2);
}

#[test]
fn ring_and_ideals_reports() {
    let out = ringline(&["ring", "Z4"]);
    let text = stdout(&out);
    assert!(text.contains("units (2): 1, 3"), "{text}");
    let out = ringline(&["ideals", "Z4 x Z4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["local"], false);
    assert_eq!(v["radical"].as_array().unwrap().len(), 4);
    assert_eq!(v["maximal"].as_array().unwrap().len(), 2);
}

#[test]
fn line_listing() {
    let out = ringline(&["line", "Z4 x Z4"]);
    let text = stdout(&out);
    assert!(
        text.contains("(1,[0,2])") && text.contains("([1,0],[0,1])"),
        "{text}"
    );
    let out = ringline(&["line", "Z4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 6);
}

use attainset::attraction::attraction_set_direct;
use attainset::json::{family_json, filter_json, parse_family, parse_filter, parse_problem, subset_json};
use attainset::Subset;

const FIXTURE_D: &str = include_str!("../../../fixtures/fixture_d.json");

#[test]
fn family_round_trip_keeps_labels() {
    let text = r#"{"universe": 3, "labels": ["a", "b", "c"], "members": [[1, 0], [], [0]]}"#;
    let f = parse_family(text).unwrap();
    assert_eq!(f.len(), 3);
    assert_eq!(f.universe().label(1), "b");
    let again = parse_family(&family_json(&f).to_string()).unwrap();
    assert_eq!(again, f);
    assert_eq!(subset_json(f.universe(), Subset(0b011)), serde_json::json!(["a", "b"]));
}

#[test]
fn malformed_json_reports_a_position() {
    let err = parse_family(r#"{"universe": 3, "members": [[0], [1}"#).unwrap_err().to_string();
    assert!(err.contains("line 1 column"), "{err}");
}

#[test]
fn bad_members_are_rejected() {
    assert!(parse_family(r#"{"universe": 2, "members": [[2]]}"#).is_err());
    assert!(parse_family(r#"{"universe": 2, "members": [[0, 0]]}"#).is_err());
    assert!(parse_family(r#"{"universe": 2, "members": [], "extra": 1}"#).is_err());
    assert!(parse_family(r#"{"universe": 2, "labels": ["x"], "members": []}"#).is_err());
}

#[test]
fn filter_round_trip() {
    let f = parse_filter(r#"{"ambient": {"powerset": 3}, "min": [0, 2]}"#).unwrap();
    assert_eq!(f.min(), Subset(0b101));
    assert_eq!(parse_filter(&filter_json(&f).to_string()).unwrap(), f);
    let g = parse_filter(r#"{"ambient": {"universe": 4, "members": [[], [0, 1], [2, 3], [0, 1, 2, 3]]}, "min": [0, 1]}"#)
        .unwrap();
    assert!(g.is_ultrafilter());
    assert!(parse_filter(r#"{"ambient": {"universe": 4, "members": [[], [0, 1], [2, 3], [0, 1, 2, 3]]}, "min": [0]}"#).is_err());
}

#[test]
fn fixture_d_parses() {
    let p = parse_problem(FIXTURE_D).unwrap();
    assert_eq!(attraction_set_direct(&p).unwrap(), Subset(0b110));
    assert_eq!(p.tau().universe().label(2), "c");
}

#[test]
fn unknown_label_in_map_is_rejected() {
    let bad = FIXTURE_D.replace(r#""b", "b", "c"]"#, r#""b", "b", "z"]"#);
    let err = parse_problem(&bad).unwrap_err().to_string();
    assert!(err.contains("\"z\""), "{err}");
}

#[test]
fn mismatched_sizes_are_rejected() {
    let bad = FIXTURE_D.replace(r#""E": 4"#, r#""E": 5"#);
    assert!(parse_problem(&bad).is_err());
}

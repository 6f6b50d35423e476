use atlas_cli::{proper_records, render_tableau};
use atlas_rootdata::DiagramStyle;

#[test]
fn tableau_matches_the_golden_file() {
    let golden = include_str!("golden/tableau_n3.txt");
    let got = render_tableau(&proper_records(3, DiagramStyle::Ascii), 3);
    assert_eq!(got, golden);
}

#[test]
fn tableau_is_stable_across_runs() {
    let a = render_tableau(&proper_records(3, DiagramStyle::Unicode), 3);
    let b = render_tableau(&proper_records(3, DiagramStyle::Unicode), 3);
    assert_eq!(a, b);
    assert!(a.contains("○ ○ ○ ●"));
}

use std::sync::OnceLock;

use super::*;
use crate::invariants::torus_diagram;
use crate::pd::tests::trefoil;

pub(crate) fn table() -> &'static KnotTable {
    static T: OnceLock<KnotTable> = OnceLock::new();
    T.get_or_init(|| bundled_table().unwrap())
}

fn realize(v: &[i64]) -> PDDiagram {
    DTCode::new(v.to_vec()).unwrap().realize().unwrap()
}

#[test]
fn bundled_table_shape() {
    let t = table();
    let names: Vec<&str> = t.entries.iter().map(|e| e.name.as_str()).collect();
    assert_eq!(
        names,
        ["unknot", "3_1", "5_1", "7_1", "9_1", "10_139", "K14a18636", "K15n81556", "K12n412"]
    );
    assert!(t.duplicates.is_empty());
    assert!(build_table(&[]).unwrap().is_empty());
}

#[test]
fn every_entry_identifies_as_itself() {
    let t = table();
    for e in &t.entries {
        let hits = identify(&e.dt.realize().unwrap(), t).unwrap();
        assert!(hits.iter().any(|(n, _)| *n == e.name), "{}: {hits:?}", e.name);
    }
    let ids = identify(&PDDiagram::unknot(), t).unwrap();
    assert_eq!(ids, vec![(UNKNOT.to_string(), Chirality::AsListed)]);
}

#[test]
fn torus_entries_are_distinct() {
    let mut t = build_table(&[]).unwrap();
    t.add_torus_knots([3, 5, 7, 9]).unwrap();
    assert_eq!(t.len(), 4);
    assert!(t.duplicates.is_empty());
    let mut u = table().clone();
    u.add_torus_knots([3]).unwrap();
    assert_eq!(u.duplicates, vec![("3_1".to_string(), "T(2,3)".to_string())]);
}

#[test]
fn table_file_round_trip() {
    let t = table();
    let text = t.render();
    assert_eq!(text.lines().count(), t.len());
    let back = KnotTable::parse(&text, false).unwrap();
    assert_eq!(back.entries, t.entries);
    let tampered = text.replacen("determinant=7", "determinant=9", 1);
    assert!(KnotTable::parse(&tampered, false).is_err());
}

#[test]
fn claims() {
    let t = table();
    let fp = t.claim_fingerprint("7_1 # ~7_1").unwrap();
    assert_eq!(fp.signature, 0);
    assert_eq!(fp.determinant, 49);
    assert_eq!(fp, fp.mirror());
    assert!(t.claim_fingerprint("8_17").is_err());
    for claim in ["7_1#~7_1", "~3_1", "unknot", "3_1 # unknot"] {
        let d = t.claim_diagram(claim).unwrap();
        assert_eq!(fingerprint(&d).unwrap(), t.claim_fingerprint(claim).unwrap(), "{claim}");
    }
    assert!(t.claim_diagram("3_1#8_17").is_err());
}

#[test]
fn evidence_reports() {
    let r = same_knot_evidence(&trefoil(), &trefoil()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.to_string().contains("fingerprint evidence"));
    let m = same_knot_evidence(&trefoil(), &trefoil().mirror()).unwrap();
    assert_eq!(m.verdict, Verdict::PassUpToMirror);
    let f = same_knot_evidence(&trefoil(), &PDDiagram::unknot()).unwrap();
    assert_eq!(f.verdict, Verdict::Fail);
    assert!(f.comparisons.iter().any(|c| c == "determinant: 3 != 1"));
    let t7 = same_knot_evidence(&torus_diagram(7).unwrap(), &realize(&[12, 14, -10, -20, 16, 18, 2, -8, 4, -6])).unwrap();
    assert_ne!(t7.verdict, Verdict::Fail);
}

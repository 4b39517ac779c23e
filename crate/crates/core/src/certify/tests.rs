use super::*;
use crate::identify::tests::table;

#[test]
fn sum_certificate_passes_with_bound_5() {
    let cert = sum_certificate();
    assert_eq!(cert.change_count(), 5);
    let r = check_certificate(&cert, table());
    assert!(r.passed(), "{r}");
    assert_eq!(r.bound, Some(5));
}

#[test]
fn wrong_flip_fails_at_its_step() {
    let mut cert = sum_certificate();
    cert.steps[2].flips = vec![7];
    let r = check_certificate(&cert, table());
    assert_eq!(r.failure.as_ref().map(|f| f.0), Some(2), "{r}");
    assert!(r.to_string().contains("FAIL at step 2"));
}

#[test]
fn empty_certificate_on_unknot() {
    let r = check_certificate(&UnknottingCertificate::default(), table());
    assert!(r.passed());
    assert_eq!(r.bound, Some(0));
}

#[test]
fn adjacency_and_cascades() {
    let a = adjacency_certificate_10_139();
    assert_eq!(a.change_count(), 1);
    assert!(check_fragment(&a, table()).passed());
    assert!(torus_cascade_certificate(3).unwrap().steps.is_empty());
    assert!(torus_cascade_certificate(2).is_err());
    let c = torus_cascade_certificate(5).unwrap();
    assert_eq!(c.change_count(), 2);
    let r = check_fragment(&c, table());
    assert!(r.passed(), "{r}");
}

#[test]
fn certificate_text_round_trip() {
    let cert = sum_certificate();
    let text = cert.render();
    assert!(text.contains("presentation: DT:[4, 12, -24, 14, 18, 2, 20, 26, 8, 10, -28, -30, 16, -6, -22]"));
    assert_eq!(UnknottingCertificate::parse(&text).unwrap(), cert);
    assert!(UnknottingCertificate::parse("flip: 1").is_err());
    assert!(UnknottingCertificate::parse("step:\nflip: 1\n").is_err());
}

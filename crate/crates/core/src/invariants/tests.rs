use crate::error::KnotError;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::bracket::{bracket_by_contraction, bracket_by_states};
use super::*;
use crate::codes::{realize_dt, DTCode};
use crate::moves::{backtrack_randomize, connected_sum};
use crate::poly::LaurentPoly;

fn dt(v: &[i64]) -> PDDiagram {
    realize_dt(&DTCode::new(v.to_vec()).unwrap()).unwrap()
}

fn q(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

/// Small prime knots by DT code.
pub(crate) const SMALL: [&[i64]; 6] = [
    &[4, 6, 2],
    &[4, 6, 8, 2],
    &[6, 8, 10, 2, 4],
    &[4, 8, 10, 2, 6],
    &[4, 8, 12, 10, 2, 6],
    &[4, 10, 14, 12, 2, 8, 6],
];

#[test]
fn bracket_basics() {
    assert!(kauffman_bracket(&PDDiagram::unknot()).unwrap().is_one());
    let kink = PDDiagram::from_crossings(vec![crate::pd::Crossing::new([0, 0, 1, 1], 1)], 0).unwrap();
    assert_eq!(kauffman_bracket(&kink).unwrap(), q(&[(3, -1)]));
    assert!(jones(&kink).unwrap().is_one());
    let big = backtrack_randomize(&torus_diagram(3).unwrap(), 12, 4);
    if big.crossing_count() > 4 {
        assert!(matches!(kauffman_bracket_with(&big, 4), Err(KnotError::Resource(_))));
    }
}

#[test]
fn bracket_routes_agree() {
    for (i, code) in SMALL.iter().enumerate() {
        for seed in 0..3 {
            let d = backtrack_randomize(&dt(code), 3, seed + 10 * i as u64);
            if d.crossing_count() <= 14 {
                assert_eq!(bracket_by_states(&d), bracket_by_contraction(&d), "{code:?} seed {seed}");
            }
        }
    }
}

#[test]
fn trefoil_jones() {
    let t = torus_diagram(3).unwrap();
    // t + t^3 - t^4 in q = t^(1/2)
    assert_eq!(jones(&t).unwrap(), q(&[(2, 1), (6, 1), (8, -1)]));
    assert_eq!(jones(&t.mirror()).unwrap(), jones(&t).unwrap().invert_variable());
    assert_eq!(jones(&t).unwrap().render_half("t"), "t + t^3 - t^4");
}

#[test]
fn t27_invariants() {
    let d = torus_diagram(7).unwrap();
    let v = seifert_matrix(&d).unwrap();
    assert_eq!(v.size(), 7 - 2 + 1);
    let skew: Vec<Vec<BigInt>> = (0..6)
        .map(|i| (0..6).map(|j| BigInt::from(v.entries[i][j] - v.entries[j][i])).collect())
        .collect();
    assert_eq!(super::seifert::det_bareiss(skew).abs(), BigInt::one());
    assert_eq!(alexander(&d).unwrap(), q(&[(-3, 1), (-2, -1), (-1, 1), (0, -1), (1, 1), (2, -1), (3, 1)]));
    assert_eq!(signature(&d).unwrap(), 6);
    assert_eq!(signature(&d.mirror()).unwrap(), -6);
    assert_eq!(determinant(&d).unwrap(), 7);
    assert_eq!(murasugi_bound(&d).unwrap(), 3);
    let u = PDDiagram::unknot();
    assert_eq!((signature(&u).unwrap(), determinant(&u).unwrap(), murasugi_bound(&u).unwrap()), (0, 1, 0));
    assert_eq!(seifert_matrix(&u).unwrap().size(), 0);
}

#[test]
fn torus_knot_values() {
    let t34 = crate::braid::BraidWord::new([1, 2].repeat(4)).unwrap().closure();
    assert_eq!(alexander(&t34).unwrap(), q(&[(-3, 1), (-2, -1), (0, 1), (2, -1), (3, 1)]));
    assert_eq!(signature(&t34).unwrap(), 6);
    for k in 1..=6u64 {
        let d = torus_diagram(2 * k as usize + 1).unwrap();
        assert_eq!(signature(&d).unwrap(), 2 * k as i64);
        assert_eq!(determinant(&d).unwrap(), 2 * k + 1);
        assert_eq!(torus_unknotting(2, 2 * k + 1).unwrap(), k);
    }
    assert_eq!(torus_unknotting(2, 3).unwrap(), 1);
    assert!(torus_unknotting(2, 4).is_err());
    assert!(torus_unknotting(1, 5).is_err());
    assert!(torus_diagram(4).is_err());
    assert!(torus_diagram(1).is_err());
}

/// Fox calculus on the Wirtinger presentation, evaluated at a rational `t`.
fn fox_minor_at(w: &WirtingerPresentation, t: &BigRational) -> BigRational {
    let n = w.generators;
    if n <= 1 {
        return BigRational::one();
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for r in &w.relators[..w.relators.len() - 1] {
        let mut row = vec![BigRational::zero(); n];
        let mut prefix = BigRational::one();
        for &x in r {
            let g = x.unsigned_abs() as usize - 1;
            if x > 0 {
                row[g] += &prefix;
                prefix *= t;
            } else {
                prefix /= t;
                row[g] -= &prefix;
            }
        }
        rows.push(row[..n - 1].to_vec());
    }
    // Gaussian elimination over the rationals
    let m = rows.len();
    let mut det = BigRational::one();
    for k in 0..m {
        let Some(p) = (k..m).find(|&r| !rows[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            rows.swap(p, k);
            det = -det;
        }
        det *= &rows[k][k];
        for i in k + 1..m {
            let f = &rows[i][k] / &rows[k][k];
            for j in k..m {
                let v = &f * &rows[k][j];
                rows[i][j] -= v;
            }
        }
    }
    det
}

fn eval_at(p: &LaurentPoly, t: &BigRational) -> BigRational {
    p.terms().fold(BigRational::zero(), |acc, (e, c)| {
        let mut x = BigRational::from_integer(c.into());
        for _ in 0..e.abs() {
            if e > 0 {
                x *= t;
            } else {
                x /= t;
            }
        }
        acc + x
    })
}

/// The Fox minor equals the Seifert-route polynomial up to a unit `±t^k`.
fn agrees_with_fox(d: &PDDiagram) -> bool {
    let delta = alexander(d).unwrap();
    let w = wirtinger(d);
    let mut unit: Option<(i64, bool)> = None;
    // 2 is a root of some Alexander polynomials (6_1), so avoid it
    for t in [3i64, 5, 7] {
        let tr = BigRational::from_integer(t.into());
        let ratio = fox_minor_at(&w, &tr) / eval_at(&delta, &tr);
        let neg = ratio.is_negative();
        let mut r = ratio.abs();
        let mut k = 0i64;
        while r > BigRational::one() {
            r /= &tr;
            k += 1;
        }
        while r < BigRational::one() {
            r *= &tr;
            k -= 1;
        }
        if !r.is_one() {
            return false;
        }
        if unit.is_some_and(|u| u != (k, neg)) {
            return false;
        }
        unit = Some((k, neg));
    }
    true
}

#[test]
fn alexander_agrees_with_fox_calculus() {
    for (i, code) in SMALL.iter().enumerate() {
        let d = dt(code);
        assert!(agrees_with_fox(&d), "{code:?}");
        let big = backtrack_randomize(&d, 4, i as u64);
        assert!(agrees_with_fox(&big), "{code:?} randomized");
        assert_eq!(alexander(&big).unwrap(), alexander(&d).unwrap());
    }
    assert!(agrees_with_fox(&torus_diagram(7).unwrap()));
}

#[test]
fn wirtinger_shapes() {
    let u = wirtinger(&PDDiagram::unknot());
    assert_eq!((u.generators, u.relators.len()), (1, 0));
    assert!(u.is_cyclic());
    assert_eq!(u.to_string(), "Generators: a Relators: ");
    let t = wirtinger(&torus_diagram(3).unwrap());
    assert_eq!((t.generators, t.relators.len(), t.abelianization_rank()), (3, 3, 1));
    assert!(!t.is_cyclic());
}

#[test]
fn sums_and_mirrors() {
    let t7 = torus_diagram(7).unwrap();
    let s = connected_sum(&t7, &t7.mirror()).unwrap();
    assert_eq!(s.crossing_count(), 14);
    assert_eq!(signature(&s).unwrap(), 0);
    assert_eq!(murasugi_bound(&s).unwrap(), 0);
    let j7 = jones(&t7).unwrap();
    assert_eq!(jones(&s).unwrap(), &j7 * &j7.invert_variable());
    let a = dt(SMALL[1]);
    let b = dt(SMALL[2]);
    let ab = connected_sum(&a, &b).unwrap();
    assert_eq!(determinant(&ab).unwrap(), determinant(&a).unwrap() * determinant(&b).unwrap());
    assert_eq!(alexander(&ab).unwrap(), &alexander(&a).unwrap() * &alexander(&b).unwrap());
}

#[test]
fn fingerprint_round_trip_and_mirror() {
    let t = torus_diagram(7).unwrap();
    let f = fingerprint(&t).unwrap();
    assert_eq!(Fingerprint::parse(&f.render()).unwrap(), f);
    let m = fingerprint(&t.mirror()).unwrap();
    assert_ne!(f, m);
    assert_eq!(f.mirror(), m);
    assert_eq!(f.alexander, m.alexander);
    assert_eq!(f.determinant, m.determinant);
    let u = fingerprint(&backtrack_randomize(&PDDiagram::unknot(), 5, 3)).unwrap();
    assert_eq!(u, Fingerprint::unknot());
    assert_eq!(u.min_crossings_seen, 0);
}

use num_bigint::BigInt;

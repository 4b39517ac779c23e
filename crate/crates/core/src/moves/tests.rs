use super::*;
use crate::braid::BraidWord;
use crate::codes::realize_dt;
use crate::pd::tests::trefoil;

fn dt(v: &[i64]) -> PDDiagram {
    realize_dt(&DTCode::new(v.to_vec()).unwrap()).unwrap()
}

pub(crate) const KE: [i64; 15] = [4, 12, -24, 14, 18, 2, -20, 26, 8, 10, -28, -30, 16, 6, -22];

#[test]
fn kink_has_one_reduction() {
    let k = dt(&[2]);
    let moves = find_moves(&k);
    assert_eq!(moves.len(), 1);
    assert_eq!(moves[0].kind(), MoveKind::R1Minus);
    let u = apply_move(&k, &moves[0].mv).unwrap();
    assert_eq!((u.crossing_count(), u.free_loops), (0, 1));
    assert!(find_moves(&PDDiagram::unknot()).is_empty());
}

#[test]
fn trefoil_is_reduced() {
    let moves = find_moves(&trefoil());
    assert!(moves.iter().all(|r| r.kind() == MoveKind::R3 || !matches!(r.kind(), MoveKind::R1Minus | MoveKind::R2Minus)));
    assert!(moves.iter().all(|r| r.kind() != MoveKind::R3), "alternating triangles are cyclic");
}

#[test]
fn every_increasing_move_is_valid_and_undone_by_greedy() {
    let t = trefoil();
    for m in increasing_moves(&t) {
        let bigger = apply_move(&t, &m).unwrap();
        assert!(bigger.validate().is_empty(), "{m:?}");
        assert_eq!(bigger.crossing_count(), 3 + m.kind().delta() as usize);
        assert!(bigger.is_knot());
        assert_eq!(simplify_greedy(&bigger).crossing_count(), 3, "{m:?}");
    }
}

#[test]
fn r3_is_an_involution_on_its_triangle() {
    let mut checked = 0;
    for seed in 0..20 {
        let d = backtrack_randomize(&trefoil(), 6, seed);
        for r in find_moves(&d).into_iter().filter(|r| r.kind() == MoveKind::R3) {
            let e = apply_move(&d, &r.mv).unwrap();
            assert!(e.validate().is_empty());
            assert_eq!(e.crossing_count(), d.crossing_count());
            let back = find_moves(&e)
                .into_iter()
                .filter(|r| r.kind() == MoveKind::R3)
                .map(|r| apply_move(&e, &r.mv).unwrap())
                .any(|f| f == d);
            assert!(back, "third move not reversible");
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn r2_plus_then_minus_restores() {
    let t = trefoil();
    for m in increasing_moves(&t).into_iter().filter(|m| m.kind() == MoveKind::R2Plus) {
        let bigger = apply_move(&t, &m).unwrap();
        let undone = find_moves(&bigger)
            .into_iter()
            .filter(|r| r.kind() == MoveKind::R2Minus)
            .map(|r| apply_move(&bigger, &r.mv).unwrap())
            .any(|d| d == t);
        assert!(undone, "{m:?}");
    }
}

#[test]
fn move_records_round_trip() {
    let t = trefoil();
    let mut all: Vec<MoveRecord> = increasing_moves(&t).into_iter().map(|m| MoveRecord::new(m, 3)).collect();
    all.extend(find_moves(&dt(&[2])));
    all.push(MoveRecord::new(Move::CrossingChange { crossing: 2 }, 3));
    for r in all {
        assert_eq!(MoveRecord::parse(&r.render()).unwrap(), r);
    }
    assert!(MoveRecord::parse("R2- d3+ 5 4").is_err());
    assert!(MoveRecord::parse("R4 c1 3 3").is_err());
}

#[test]
fn ke_simplifies_to_unknot() {
    let d = dt(&KE);
    let s = simplify_global(&d, DEFAULT_GLOBAL_BUDGET, 0);
    assert_eq!(s.crossing_count(), 0);
    assert_eq!(s.free_loops, 1);
}

#[test]
fn randomize_then_simplify() {
    assert_eq!(backtrack_randomize(&trefoil(), 0, 1), trefoil());
    for seed in 0..5 {
        let big = backtrack_randomize(&trefoil(), 10, seed);
        assert!(big.crossing_count() <= 23);
        assert!(big.validate().is_empty());
        assert_eq!(simplify_global(&big, DEFAULT_GLOBAL_BUDGET, seed).crossing_count(), 3);
    }
}

#[test]
fn sums_split_back() {
    let t = trefoil();
    let f8 = dt(&[4, 6, 8, 2]);
    let s = connected_sum(&t, &f8).unwrap();
    assert_eq!(s.crossing_count(), 7);
    assert!(s.validate().is_empty());
    let parts = deconnect_sum(&s);
    let mut sizes: Vec<usize> = parts.iter().map(|p| p.crossing_count()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![3, 4]);
    assert_eq!(deconnect_sum(&t), vec![t.clone()]);
    assert_eq!(connected_sum(&t, &PDDiagram::unknot()).unwrap(), t);
}

#[test]
fn sum_braid_simplifies_and_splits() {
    let w = BraidWord::new(crate::braid::tests::SUM_WORD.to_vec()).unwrap();
    let d = w.closure();
    let s = simplify_global(&d, DEFAULT_GLOBAL_BUDGET, 0);
    let parts = deconnect_sum(&s);
    let sizes: Vec<usize> = parts.iter().map(|p| p.crossing_count()).collect();
    eprintln!("sum braid: {} -> {} crossings, parts {:?}", d.crossing_count(), s.crossing_count(), sizes);
    assert_eq!(s.crossing_count(), 14);
    assert_eq!(sizes, vec![7, 7]);
}

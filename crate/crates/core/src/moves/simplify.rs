use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply_move, find_moves, Move, MoveKind};
use crate::pd::{Dart, PDDiagram};

pub const DEFAULT_GLOBAL_BUDGET: usize = 10_000;

/// Probability of preferring a reducing move (or, failing that, a third move).
const REDUCE_BIAS: f64 = 0.7;
/// The walk restarts from the best diagram once it is this many crossings worse.
const DRIFT_LIMIT: usize = 6;

fn is_reducing(k: MoveKind) -> bool {
    matches!(k, MoveKind::R1Minus | MoveKind::R2Minus)
}

fn first_reduction(d: &PDDiagram) -> Option<Move> {
    find_moves(d).into_iter().find(|r| is_reducing(r.kind())).map(|r| r.mv)
}

/// Applies R1-/R2- at the lowest site until none is left, trying a third
/// move whenever that exposes a new reduction.
pub fn simplify_greedy(d: &PDDiagram) -> PDDiagram {
    let mut cur = d.clone();
    'outer: loop {
        if let Some(m) = first_reduction(&cur) {
            cur = apply_move(&cur, &m).expect("enumerated move applies");
            continue;
        }
        for r in find_moves(&cur).into_iter().filter(|r| r.kind() == MoveKind::R3) {
            let next = apply_move(&cur, &r.mv).expect("enumerated move applies");
            if let Some(m) = first_reduction(&next) {
                cur = apply_move(&next, &m).expect("enumerated move applies");
                continue 'outer;
            }
        }
        return cur;
    }
}

/// A random R1+ or R2+ descriptor; R2+ is drawn from a random face.
fn random_increasing(d: &PDDiagram, rng: &mut ChaCha8Rng) -> Move {
    if d.crossings.is_empty() {
        return Move::R1Plus { edge: 0, left: true, sign: if rng.gen() { 1 } else { -1 } };
    }
    let faces = d.faces();
    if rng.gen_bool(0.9) {
        let usable: Vec<&Vec<Dart>> = faces.iter().filter(|f| f.len() >= 2).collect();
        if let Some(f) = usable.choose(rng) {
            let i = rng.gen_range(0..f.len());
            let j = (i + rng.gen_range(1..f.len())) % f.len();
            if f[i].edge != f[j].edge {
                return Move::R2Plus { a: f[i], b: f[j], a_over: rng.gen() };
            }
        }
    }
    Move::R1Plus {
        edge: rng.gen_range(0..d.edge_count()),
        left: rng.gen(),
        sign: if rng.gen() { 1 } else { -1 },
    }
}

/// Seeded random walk that may pass through larger diagrams, returning the
/// smallest diagram met (after greedy descent).
pub fn simplify_global(d: &PDDiagram, budget: usize, seed: u64) -> PDDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = simplify_greedy(d);
    if best.crossing_count() > d.crossing_count() {
        best = d.clone();
    }
    let mut cur = best.clone();
    for _ in 0..budget {
        if best.crossings.is_empty() {
            break;
        }
        let moves = find_moves(&cur);
        let reducing: Vec<Move> = moves.iter().filter(|r| is_reducing(r.kind())).map(|r| r.mv).collect();
        let thirds: Vec<Move> = moves.iter().filter(|r| r.kind() == MoveKind::R3).map(|r| r.mv).collect();
        let m = if rng.gen_bool(REDUCE_BIAS) {
            match (reducing.choose(&mut rng), thirds.choose(&mut rng)) {
                (Some(m), _) | (None, Some(m)) => *m,
                (None, None) => random_increasing(&cur, &mut rng),
            }
        } else if !thirds.is_empty() && rng.gen_bool(0.5) {
            *thirds.choose(&mut rng).unwrap()
        } else {
            random_increasing(&cur, &mut rng)
        };
        let Ok(next) = apply_move(&cur, &m) else { continue };
        cur = next;
        if cur.crossing_count() < best.crossing_count() {
            cur = simplify_greedy(&cur);
            best = cur.clone();
        } else if cur.crossing_count() > best.crossing_count() + DRIFT_LIMIT {
            cur = best.clone();
        }
    }
    best
}

/// `n` random crossing-increasing or neutral moves.
pub fn backtrack_randomize(d: &PDDiagram, n: usize, seed: u64) -> PDDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = d.clone();
    let mut done = 0;
    while done < n {
        let thirds: Vec<Move> =
            find_moves(&cur).into_iter().filter(|r| r.kind() == MoveKind::R3).map(|r| r.mv).collect();
        let m = match thirds.choose(&mut rng) {
            Some(m) if rng.gen_bool(0.2) => *m,
            _ => random_increasing(&cur, &mut rng),
        };
        if let Ok(next) = apply_move(&cur, &m) {
            cur = next;
            done += 1;
        }
    }
    cur
}

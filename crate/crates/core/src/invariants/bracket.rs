//! Kauffman bracket and Jones polynomial.

use std::collections::HashMap;

use crate::error::{KnotError, Result};
use crate::pd::PDDiagram;
use crate::poly::LaurentPoly;

pub const DEFAULT_BRACKET_CAP: usize = 22;
/// Above this many crossings the bracket is contracted crossing by crossing
/// instead of summing all states.
const RAW_STATE_LIMIT: usize = 16;

/// Loop value `-A^2 - A^-2`.
fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// Smoothing pairs of the slots: A joins `(0,1)(2,3)`, B joins `(0,3)(1,2)`.
fn smoothing(edges: [usize; 4], a: bool) -> [(usize, usize); 2] {
    let [p, q, r, s] = edges;
    if a {
        [(p, q), (r, s)]
    } else {
        [(p, s), (q, r)]
    }
}

pub fn kauffman_bracket(d: &PDDiagram) -> Result<LaurentPoly> {
    kauffman_bracket_with(d, DEFAULT_BRACKET_CAP)
}

/// Bracket in the variable `A`, normalized so the crossingless circle is 1.
pub fn kauffman_bracket_with(d: &PDDiagram, cap: usize) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    if n > cap {
        return Err(KnotError::Resource(format!("{n} crossings exceed the bracket cap of {cap}")));
    }
    if n == 0 {
        return Ok(loop_value().pow(d.free_loops.saturating_sub(1) as u32));
    }
    if n <= RAW_STATE_LIMIT {
        Ok(bracket_by_states(d))
    } else {
        Ok(bracket_by_contraction(d))
    }
}

fn find(uf: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while uf[r] != r {
        r = uf[r];
    }
    uf[x] = r;
    r
}

/// Direct sum over all `2^n` states.
pub(crate) fn bracket_by_states(d: &PDDiagram) -> LaurentPoly {
    let n = d.crossing_count();
    let m = d.edge_count();
    let delta = loop_value();
    let max_loops = n + d.free_loops + 1;
    let powers: Vec<LaurentPoly> = (0..=max_loops).map(|k| delta.pow(k as u32)).collect();
    // counts[a_count][loops]
    let mut counts = vec![vec![0i64; max_loops + 1]; n + 1];
    let mut uf = vec![0usize; m];
    for mask in 0u64..1 << n {
        for (i, u) in uf.iter_mut().enumerate() {
            *u = i;
        }
        let mut merges = 0;
        for (c, x) in d.crossings.iter().enumerate() {
            for (p, q) in smoothing(x.edges, mask >> c & 1 == 0) {
                let (a, b) = (find(&mut uf, p), find(&mut uf, q));
                if a != b {
                    uf[a] = b;
                    merges += 1;
                }
            }
        }
        let loops = m - merges + d.free_loops;
        let a_count = n - (mask.count_ones() as usize);
        counts[a_count][loops] += 1;
    }
    let mut total = LaurentPoly::zero();
    for (a_count, row) in counts.iter().enumerate() {
        for (loops, &k) in row.iter().enumerate() {
            if k != 0 {
                let a_exp = a_count as i64 - (n - a_count) as i64;
                total += &powers[loops - 1].shift(a_exp).scale(k);
            }
        }
    }
    total
}

/// Crossings in the order the strands first reach them.
fn traversal_order(d: &PDDiagram) -> Vec<usize> {
    let topo = d.topology();
    let mut seen = vec![false; d.crossing_count()];
    let mut order = Vec::new();
    for cycle in d.strand_cycles() {
        for e in cycle {
            let c = topo.head[e].0;
            if !seen[c] {
                seen[c] = true;
                order.push(c);
            }
        }
    }
    order
}

type Boundary = Vec<(usize, usize)>;

/// Joins a boundary matching with the arcs of one smoothed crossing.
/// Returns the new matching and the number of loops closed.
fn join(state: &Boundary, arcs: [(usize, usize); 2]) -> (Boundary, usize) {
    let all: Vec<(usize, usize)> = state.iter().chain(arcs.iter()).copied().collect();
    let mut ids: Vec<usize> = all.iter().flat_map(|&(u, v)| [u, v]).collect();
    ids.sort_unstable();
    ids.dedup();
    let mut degree = vec![0usize; ids.len()];
    let pos = |x: usize| ids.binary_search(&x).unwrap();
    let mut uf: Vec<usize> = (0..ids.len()).collect();
    for &(u, v) in &all {
        let (pu, pv) = (pos(u), pos(v));
        degree[pu] += 1;
        degree[pv] += 1;
        let (a, b) = (find(&mut uf, pu), find(&mut uf, pv));
        uf[a] = b;
    }
    // every component is a path (two ends of degree one) or a closed loop
    let mut ends: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut roots = Vec::new();
    for i in 0..ids.len() {
        let r = find(&mut uf, i);
        roots.push(r);
        if degree[i] == 1 {
            ends.entry(r).or_default().push(ids[i]);
        }
    }
    roots.sort_unstable();
    roots.dedup();
    let loops = roots.len() - ends.len();
    let mut next: Boundary = ends.into_values().map(|e| (e[0].min(e[1]), e[0].max(e[1]))).collect();
    next.sort_unstable();
    (next, loops)
}

/// Contracts crossings one at a time, keeping a polynomial for every
/// matching of the edges leaving the processed part.
pub(crate) fn bracket_by_contraction(d: &PDDiagram) -> LaurentPoly {
    let delta = loop_value();
    let mut states: HashMap<Boundary, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    for c in traversal_order(d) {
        let x = d.crossings[c];
        let mut next: HashMap<Boundary, LaurentPoly> = HashMap::new();
        for (state, poly) in &states {
            for (a, exp) in [(true, 1), (false, -1)] {
                let (b, loops) = join(state, smoothing(x.edges, a));
                let mut term = poly.shift(exp);
                for _ in 0..loops {
                    term = &term * &delta;
                }
                let slot = next.entry(b).or_insert_with(LaurentPoly::zero);
                *slot += &term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;
    }
    let mut total = states.remove(&Vec::new()).unwrap_or_else(LaurentPoly::zero);
    if d.crossings.is_empty() {
        return delta.pow(d.free_loops.saturating_sub(1) as u32);
    }
    for _ in 0..d.free_loops {
        total = &total * &delta;
    }
    total.div_exact(&delta).expect("every state closes at least one loop")
}

/// Jones polynomial stored in `q = t^(1/2)`.
pub fn jones(d: &PDDiagram) -> Result<LaurentPoly> {
    jones_with(d, DEFAULT_BRACKET_CAP)
}

pub fn jones_with(d: &PDDiagram, cap: usize) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket_with(d, cap)?;
    let w = d.writhe();
    // (-A^3)^(-w)
    let factor = LaurentPoly::monomial(if w % 2 == 0 { 1 } else { -1 }, -3 * w);
    let in_a = &factor * &bracket;
    in_a.divide_exponents(-2).ok_or_else(|| KnotError::Validity("bracket exponents not even".into()))
}

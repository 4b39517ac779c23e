use crate::error::{KnotError, Result};
use crate::pd::{Crossing, PDDiagram, Topology};

/// Connected sum of two knot diagrams, spliced at edge 0 of each. No
/// crossings are added.
pub fn connected_sum(a: &PDDiagram, b: &PDDiagram) -> Result<PDDiagram> {
    if !a.is_knot() || !b.is_knot() {
        return Err(KnotError::Unsupported("connected sum needs two knot diagrams".into()));
    }
    if a.crossings.is_empty() {
        return Ok(b.clone());
    }
    if b.crossings.is_empty() {
        return Ok(a.clone());
    }
    let off = a.edge_count();
    let mut cs: Vec<Crossing> = a.crossings.clone();
    cs.extend(b.crossings.iter().map(|x| Crossing { edges: x.edges.map(|e| e + off), sign: x.sign }));
    let (ha, hb) = (a.topology().head[0], b.topology().head[0]);
    cs[ha.0].edges[ha.1] = off;
    cs[a.crossing_count() + hb.0].edges[hb.1] = 0;
    PDDiagram::from_crossings(cs, 0)
}

/// Splits a knot diagram at visible 2-edge cuts, recursively. Factors come
/// out in traversal order from the lowest cut found.
pub fn deconnect_sum(d: &PDDiagram) -> Vec<PDDiagram> {
    if !d.is_knot() || d.crossing_count() < 2 {
        return vec![d.clone()];
    }
    match find_cut(d) {
        Some((left, right)) => {
            let mut out = deconnect_sum(&left);
            out.extend(deconnect_sum(&right));
            out
        }
        None => vec![d.clone()],
    }
}

/// Crossings reachable from `start` without using edges `e` and `f`.
fn reach(d: &PDDiagram, topo: &Topology, start: usize, e: usize, f: usize) -> Vec<bool> {
    let mut seen = vec![false; d.crossing_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(c) = stack.pop() {
        for g in d.crossings[c].edges {
            if g == e || g == f {
                continue;
            }
            for (x, _) in [topo.head[g], topo.tail[g]] {
                if !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
    }
    seen
}

fn find_cut(d: &PDDiagram) -> Option<(PDDiagram, PDDiagram)> {
    let topo = d.topology();
    let m = d.edge_count();
    for e in 0..m {
        for f in e + 1..m {
            let side = reach(d, &topo, topo.tail[e].0, e, f);
            let Some(other) = side.iter().position(|&s| !s) else { continue };
            let rest = reach(d, &topo, other, e, f);
            if side.iter().zip(&rest).any(|(&a, &b)| a == b) {
                continue;
            }
            let crosses = |g: usize| side[topo.head[g].0] != side[topo.tail[g].0];
            if crosses(e) && crosses(f) {
                return Some(split(d, e, f, &side));
            }
        }
    }
    None
}

/// Closes each side of the cut `{e, f}` with a single arc.
fn split(d: &PDDiagram, e: usize, f: usize, side: &[bool]) -> (PDDiagram, PDDiagram) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (ci, x) in d.crossings.iter().enumerate() {
        let (from, to, out) = if side[ci] { (f, e, &mut a) } else { (e, f, &mut b) };
        out.push(Crossing { edges: x.edges.map(|g| if g == from { to } else { g }), sign: x.sign });
    }
    let close = |cs| PDDiagram::from_crossings(cs, 0).expect("side of a 2-edge cut closes up");
    (close(a), close(b))
}

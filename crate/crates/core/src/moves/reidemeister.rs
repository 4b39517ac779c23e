//! Reidemeister move primitives on dense-labeled diagrams.

use crate::error::{KnotError, Result};
use crate::pd::{Crossing, Dart, Endpoint, PDDiagram, Topology};

fn find(uf: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while uf[r] != r {
        r = uf[r];
    }
    uf[x] = r;
    r
}

/// Deletes crossings, joining each strand straight through them. Strands
/// left without crossings become free loops.
pub(crate) fn remove_crossings(d: &PDDiagram, remove: &[usize]) -> Result<PDDiagram> {
    let m = d.edge_count();
    let mut uf: Vec<usize> = (0..m).collect();
    for &c in remove {
        let x = d.crossings[c];
        for (p, q) in [(x.edges[0], x.edges[2]), (x.edges[1], x.edges[3])] {
            let (a, b) = (find(&mut uf, p), find(&mut uf, q));
            uf[a] = b;
        }
    }
    let mut present = vec![false; m];
    let mut kept = Vec::new();
    for (ci, x) in d.crossings.iter().enumerate() {
        if remove.contains(&ci) {
            continue;
        }
        let edges = x.edges.map(|e| find(&mut uf, e));
        for &e in &edges {
            present[e] = true;
        }
        kept.push(Crossing { edges, sign: x.sign });
    }
    let mut consumed: Vec<usize> = remove
        .iter()
        .flat_map(|&c| d.crossings[c].edges)
        .map(|e| find(&mut uf, e))
        .filter(|&r| !present[r])
        .collect();
    consumed.sort_unstable();
    consumed.dedup();
    PDDiagram::from_crossings(kept, d.free_loops + consumed.len())
}

/// Replaces `old` by `new` at the endpoint `at`.
fn relabel_at(crossings: &mut [Crossing], at: Endpoint, new: usize) {
    crossings[at.0].edges[at.1] = new;
}

fn endpoint(topo: &Topology, d: Dart) -> Endpoint {
    if d.forward {
        topo.head[d.edge]
    } else {
        topo.tail[d.edge]
    }
}

pub(crate) fn is_kink(x: &Crossing) -> bool {
    let e = x.edges;
    (0..4).any(|i| e[i] == e[(i + 1) % 4])
}

pub(crate) fn r1_minus(d: &PDDiagram, c: usize) -> Result<PDDiagram> {
    let x = d.crossings.get(c).ok_or(KnotError::UnknownCrossing(c))?;
    if !is_kink(x) {
        return Err(KnotError::InvalidMove(format!("crossing {c} is not a kink")));
    }
    remove_crossings(d, &[c])
}

/// Adds a kink on edge `edge`, with the loop on the given side.
pub(crate) fn r1_plus(d: &PDDiagram, edge: usize, left: bool, sign: i8) -> Result<PDDiagram> {
    if d.crossings.is_empty() {
        if d.free_loops == 0 {
            return Err(KnotError::InvalidMove("no strand to curl".into()));
        }
        let x = if sign > 0 { Crossing::new([0, 0, 1, 1], 1) } else { Crossing::new([0, 1, 1, 0], -1) };
        return PDDiagram::from_crossings(vec![x], d.free_loops - 1);
    }
    if edge >= d.edge_count() {
        return Err(KnotError::InvalidMove(format!("no edge {edge}")));
    }
    let topo = d.topology();
    let (e_in, e_out, l) = (edge, d.edge_count(), d.edge_count() + 1);
    let mut cs = d.crossings.clone();
    relabel_at(&mut cs, topo.head[edge], e_out);
    let x = match (left, sign > 0) {
        (true, true) => Crossing::new([e_in, e_out, l, l], 1),
        (true, false) => Crossing::new([l, e_in, e_out, l], -1),
        (false, false) => Crossing::new([e_in, l, l, e_out], -1),
        (false, true) => Crossing::new([l, l, e_out, e_in], 1),
    };
    cs.push(x);
    PDDiagram::from_crossings(cs, d.free_loops)
}

/// Bigon face check: the two crossings are distinct and one strand passes
/// over both of them.
pub(crate) fn r2_minus_crossings(d: &PDDiagram, topo: &Topology, face: &[Dart]) -> Option<[usize; 2]> {
    if face.len() != 2 || face[0].edge == face[1].edge {
        return None;
    }
    let (a, b) = (endpoint(topo, face[0]), endpoint(topo, face[1]));
    if a.0 == b.0 {
        return None;
    }
    // each bigon edge has one end at each crossing; compare its slot parity
    let e = face[0].edge;
    let (h, t) = (topo.head[e], topo.tail[e]);
    let _ = d;
    (h.1 % 2 == t.1 % 2).then_some([a.0.min(b.0), a.0.max(b.0)])
}

pub(crate) fn r2_minus(d: &PDDiagram, face: &[Dart]) -> Result<PDDiagram> {
    let topo = d.topology();
    let [a, b] = r2_minus_crossings(d, &topo, face)
        .ok_or_else(|| KnotError::InvalidMove("face is not a reducible bigon".into()))?;
    remove_crossings(d, &[a, b])
}

/// Pushes a finger of the strand through `a` across the strand through `b`,
/// inside the face on the left of both darts.
pub(crate) fn r2_plus(d: &PDDiagram, a: Dart, b: Dart, a_over: bool) -> Result<PDDiagram> {
    if a.edge == b.edge || a.edge >= d.edge_count() || b.edge >= d.edge_count() {
        return Err(KnotError::InvalidMove("R2+ needs two distinct edges".into()));
    }
    let topo = d.topology();
    let n = d.edge_count();
    let mut cs = d.crossings.clone();
    // the face must contain both darts
    let mut on_face = false;
    let mut x = d.face_successor(&topo, a);
    for _ in 0..2 * n {
        if x == b {
            on_face = true;
            break;
        }
        if x == a {
            break;
        }
        x = d.face_successor(&topo, x);
    }
    if !on_face {
        return Err(KnotError::InvalidMove("darts do not share a face".into()));
    }
    let (e1, e2) = (a.edge, b.edge);
    let (e1_out, e2_out, m1, m2) = (n, n + 1, n + 2, n + 3);
    relabel_at(&mut cs, topo.head[e1], e1_out);
    relabel_at(&mut cs, topo.head[e2], e2_out);
    let (x1, x2) = match (a.forward, b.forward) {
        (true, true) => (
            Crossing::from_ccw([m2, m1, e2_out, e1], a_over, [true, false, false, true]),
            Crossing::from_ccw([e2, m1, m2, e1_out], a_over, [true, true, false, false]),
        ),
        (false, false) => (
            Crossing::from_ccw([m2, e1, e2_out, m1], a_over, [true, true, false, false]),
            Crossing::from_ccw([e2, e1_out, m2, m1], a_over, [true, false, false, true]),
        ),
        (false, true) => (
            Crossing::from_ccw([e2, m1, m2, e1], a_over, [true, false, false, true]),
            Crossing::from_ccw([m2, m1, e2_out, e1_out], a_over, [true, true, false, false]),
        ),
        (true, false) => {
            // mirror of the previous case with the strands' roles swapped
            let (f1, f2, f1_out, f2_out) = (e2, e1, e2_out, e1_out);
            (
                Crossing::from_ccw([f2, m1, m2, f1], !a_over, [true, false, false, true]),
                Crossing::from_ccw([m2, m1, f2_out, f1_out], !a_over, [true, true, false, false]),
            )
        }
    };
    cs.push(x1);
    cs.push(x2);
    PDDiagram::from_crossings(cs, d.free_loops)
}

/// Triangle face whose strands admit a third move: three distinct
/// crossings and a strand passing over both of its triangle crossings.
pub(crate) fn r3_applicable(d: &PDDiagram, topo: &Topology, face: &[Dart]) -> bool {
    if face.len() != 3 {
        return false;
    }
    let ends: Vec<Endpoint> = face.iter().map(|&f| endpoint(topo, f)).collect();
    if ends[0].0 == ends[1].0 || ends[1].0 == ends[2].0 || ends[0].0 == ends[2].0 {
        return false;
    }
    let edges: Vec<usize> = face.iter().map(|f| f.edge).collect();
    if edges[0] == edges[1] || edges[1] == edges[2] || edges[0] == edges[2] {
        return false;
    }
    let _ = d;
    // the edge into vertex i belongs to strand over/under there iff its slot is odd/even;
    // the strand along triangle edge i meets its two crossings at the tail and head slots
    face.iter().any(|f| topo.head[f.edge].1 % 2 == topo.tail[f.edge].1 % 2)
}

pub(crate) fn r3(d: &PDDiagram, face: &[Dart]) -> Result<PDDiagram> {
    let topo = d.topology();
    if !r3_applicable(d, &topo, face) {
        return Err(KnotError::InvalidMove("face does not admit a third move".into()));
    }
    let n = d.edge_count();
    let [(x, jx), (y, jy), (z, jz)]: [Endpoint; 3] = [
        endpoint(&topo, face[0]),
        endpoint(&topo, face[1]),
        endpoint(&topo, face[2]),
    ];
    let (cx, cy, cz) = (d.crossings[x], d.crossings[y], d.crossings[z]);
    let p = |c: &Crossing, s: usize| (c.edges[s % 4], c.is_incoming(s % 4));
    let (p1, p2) = (p(&cx, jx + 1), p(&cx, jx + 2));
    let (p3, p4) = (p(&cy, jy + 1), p(&cy, jy + 2));
    let (p5, p6) = (p(&cz, jz + 1), p(&cz, jz + 2));
    let (t, s1, s2) = (n, n + 1, n + 2);
    // strand T enters at P1 iff it then runs y' -> x'
    let t_in_x = p1.1;
    let s1_in_x = p2.1;
    let s2_in_y = p3.1;
    let s1_over_t = jx % 2 == 1;
    let t_over_s2 = jy % 2 == 1;
    let s2_over_s1 = jz % 2 == 1;
    let nx = Crossing::from_ccw([p4.0, p5.0, t, s1], s1_over_t, [p4.1, p5.1, t_in_x, s1_in_x]);
    let ny = Crossing::from_ccw([p6.0, p1.0, s2, t], t_over_s2, [p6.1, p1.1, s2_in_y, !t_in_x]);
    let nz = Crossing::from_ccw([p2.0, p3.0, s1, s2], s2_over_s1, [p2.1, p3.1, !s1_in_x, !s2_in_y]);
    let mut cs = d.crossings.clone();
    cs[x] = nx;
    cs[y] = ny;
    cs[z] = nz;
    PDDiagram::from_crossings(cs, d.free_loops)
}

//! Injectivity of `H_1(A) → H_1(B)` for a leading subcomplex `A ⊆ B`.

use crate::homology::{ChainComplex, SparseMatrix};

/// Whether the inclusion of the leading subcomplex with cell counts `prefix`
/// induces an injection on `H_1` with rational coefficients.
///
/// With `Z_1(A)` the cycles of `A` and `B_1` the boundaries, injectivity means
/// `Z_1(A) ∩ B_1(B) = B_1(A)`; dimensions are compared by rank.
/// Every 1-cell must have boundary `head - tail` (or zero).
pub fn h1_injective(b: &ChainComplex, prefix: &[usize]) -> bool {
    let a = b.leading_subcomplex(prefix);
    let (a_vertices, a_edges) = (prefix.first().copied().unwrap_or(0), prefix.get(1).copied().unwrap_or(0));
    if a_edges == 0 {
        return true;
    }
    let cycles = cycle_basis(b.boundary(1), a_vertices, a_edges);
    if cycles.is_empty() {
        return true;
    }
    let b_edges = b.counts()[1];
    let d2b = if b.counts().len() > 2 { b.boundary(2).clone() } else { SparseMatrix::zeros(b_edges, 0) };
    let d2a_rank = if a.counts().len() > 2 { a.boundary(2).rational_rank() } else { 0 };
    let stacked = d2b.hstack(&cycles);
    cycles.len() + d2b.rational_rank() - stacked.rational_rank() == d2a_rank
}

/// Fundamental cycles of the graph formed by the first `edges` 1-cells.
fn cycle_basis(d1: &SparseMatrix, vertices: usize, edges: usize) -> Vec<Vec<(usize, i64)>> {
    let mut ends = Vec::with_capacity(edges);
    for e in 0..edges {
        let col = d1.column(e);
        match col {
            [] => ends.push(None),
            [(r0, v0), (r1, v1)] if v0 + v1 == 0 && v0.abs() == 1 => {
                let (tail, head) = if *v0 < 0 { (*r0, *r1) } else { (*r1, *r0) };
                ends.push(Some((tail, head)));
            }
            _ => panic!("1-cell {e} is not a graph edge"),
        }
    }

    // Spanning forest by breadth-first search; tree[x] = (parent, edge, sign of
    // the edge when walked from x to its parent).
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for (e, end) in ends.iter().enumerate() {
        if let Some((t, h)) = *end {
            incident[t].push(e);
            incident[h].push(e);
        }
    }
    let mut tree: Vec<Option<(usize, usize, i64)>> = vec![None; vertices];
    let mut depth = vec![usize::MAX; vertices];
    let mut in_tree = vec![false; edges];
    for root in 0..vertices {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &e in &incident[x] {
                let (t, h) = ends[e].unwrap();
                let y = if t == x { h } else { t };
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    // Walking y → x along e: +1 if e points from y to x.
                    tree[y] = Some((x, e, if t == y { 1 } else { -1 }));
                    in_tree[e] = true;
                    queue.push_back(y);
                }
            }
        }
    }

    let mut out = Vec::new();
    for e in 0..edges {
        if in_tree[e] {
            continue;
        }
        let Some((t, h)) = ends[e] else {
            out.push(vec![(e, 1)]);
            continue;
        };
        // e runs t → h; close it with the tree path h → t.
        let mut cycle = vec![(e, 1)];
        let (mut x, mut y) = (h, t);
        let mut down = Vec::new();
        while x != y {
            if depth[x] >= depth[y] {
                let (p, te, s) = tree[x].unwrap();
                cycle.push((te, s));
                x = p;
            } else {
                let (p, te, s) = tree[y].unwrap();
                down.push((te, -s));
                y = p;
            }
        }
        cycle.extend(down);
        out.push(cycle);
    }
    out
}

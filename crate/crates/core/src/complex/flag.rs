use serde::Serialize;

use super::{Simplex, SimplicialComplex};

/// A 4-cycle `a-b-c-d-a` of the 1-skeleton with neither diagonal `ac` nor `bd`.
///
/// Stored in canonical position: `a` is the smallest vertex and `b < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EmptySquare(pub [usize; 4]);

impl EmptySquare {
    /// Canonical representative of the cycle `v[0]-v[1]-v[2]-v[3]-v[0]`
    /// up to rotation and reflection.
    pub fn canonical(v: [usize; 4]) -> Self {
        let start = (0..4).min_by_key(|&i| v[i]).unwrap();
        let rot = |k: usize| v[(start + k) % 4];
        let (b, d) = (rot(1), rot(3));
        if b < d {
            EmptySquare([rot(0), b, rot(2), d])
        } else {
            EmptySquare([rot(0), d, rot(2), b])
        }
    }

    pub fn vertices(&self) -> [usize; 4] {
        self.0
    }

    /// The two non-adjacent pairs `{a,c}` and `{b,d}`.
    pub fn diagonals(&self) -> ([usize; 2], [usize; 2]) {
        let [a, b, c, d] = self.0;
        ([a, c], [b, d])
    }
}

impl SimplicialComplex {
    /// Calls `visit` on every clique of the 1-skeleton (nonempty, as increasing
    /// vertex lists, in order of size) until it returns `false`.
    fn walk_cliques(&self, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
        let adj = self.adjacency();
        let mut layer: Vec<Simplex> = (0..self.vertex_count()).map(|v| vec![v]).collect();
        while !layer.is_empty() {
            for c in &layer {
                if !visit(c) {
                    return false;
                }
            }
            let mut next = Vec::new();
            for c in &layer {
                let last = *c.last().unwrap();
                for &w in adj[last].iter().filter(|&&w| w > last) {
                    if c.iter().all(|&u| self.has_edge(u, w)) {
                        let mut d = c.clone();
                        d.push(w);
                        next.push(d);
                    }
                }
            }
            layer = next;
        }
        true
    }

    /// True iff every clique of the 1-skeleton spans a simplex.
    pub fn is_flag(&self) -> bool {
        // Cliques are grown from smaller cliques, so the walk stops at the
        // first non-simplex and never enumerates beyond one layer past the faces.
        self.walk_cliques(|c| self.contains(c))
    }

    /// All cliques of the 1-skeleton including the empty one. For a flag
    /// complex these are exactly the simplices together with `∅`.
    pub fn cliques(&self) -> Vec<Simplex> {
        let mut out = vec![Vec::new()];
        self.walk_cliques(|c| {
            out.push(c.to_vec());
            true
        });
        out
    }

    /// Empty squares of the 1-skeleton, each once, sorted.
    pub fn empty_squares(&self) -> Vec<EmptySquare> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for a in 0..self.vertex_count() {
            for (i, &b) in adj[a].iter().enumerate() {
                if b < a {
                    continue;
                }
                for &d in &adj[a][i + 1..] {
                    if d < a || self.has_edge(b, d) {
                        continue;
                    }
                    // c is a common neighbor of b and d, not adjacent to a.
                    for &c in &adj[b] {
                        if c > a && c != d && !self.has_edge(a, c) && self.has_edge(c, d) {
                            out.push(EmptySquare([a, b, c, d]));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_flag_no_square(&self) -> bool {
        self.is_flag() && self.empty_squares().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use crate::complex::catalog;

    #[test]
    fn cycles() {
        assert!(catalog::cycle(5).is_flag());
        assert!(!catalog::cycle(3).is_flag());
        assert!(catalog::cycle(5).is_flag_no_square());
        assert!(!catalog::cycle(4).is_flag_no_square());
        assert!(catalog::cycle(6).is_flag_no_square());
    }

    #[test]
    fn tetrahedron_boundary_is_not_flag() {
        assert!(!catalog::simplex_boundary(3).is_flag());
        assert!(catalog::simplex(3).is_flag());
    }

    #[test]
    fn square_reported_once() {
        let sq = catalog::cycle(4).empty_squares();
        assert_eq!(sq.len(), 1);
        assert_eq!(sq[0].vertices(), [0, 1, 2, 3]);
    }

    #[test]
    fn canonical_rotation() {
        use super::EmptySquare;
        let a = EmptySquare::canonical([2, 3, 0, 1]);
        let b = EmptySquare::canonical([0, 3, 2, 1]);
        assert_eq!(a, b);
        assert_eq!(a.0, [0, 1, 2, 3]);
    }

    #[test]
    fn clique_counts() {
        assert_eq!(catalog::cycle(4).cliques().len(), 9);
        // 4-clique of ∂Δ³ shows up even though it is not a simplex.
        assert_eq!(catalog::simplex_boundary(3).cliques().len(), 16);
    }

    #[test]
    fn icosahedron_is_flag_no_square() {
        assert!(catalog::icosahedron().is_flag_no_square());
        assert_eq!(catalog::octahedron().empty_squares().len(), 3);
    }
}

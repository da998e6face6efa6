//! Small named triangulations used throughout tests and the command line.

use super::SimplicialComplex;

fn build(n: usize, facets: Vec<Vec<usize>>) -> SimplicialComplex {
    SimplicialComplex::new(n, facets).expect("catalog complexes are valid")
}

/// The `n`-cycle (`n ≥ 3`), vertices `0..n`.
pub fn cycle(n: usize) -> SimplicialComplex {
    assert!(n >= 3, "a simplicial cycle needs at least 3 vertices");
    build(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
}

/// The full `d`-simplex.
pub fn simplex(d: usize) -> SimplicialComplex {
    build(d + 1, vec![(0..=d).collect()])
}

/// Boundary of the `d`-simplex, a triangulated `(d-1)`-sphere.
pub fn simplex_boundary(d: usize) -> SimplicialComplex {
    assert!(d >= 1);
    build(d + 1, (0..=d).map(|skip| (0..=d).filter(|&v| v != skip).collect()).collect())
}

/// Octahedron: the join of three copies of `S^0`. Antipodal pairs are `(0,1)`, `(2,3)`, `(4,5)`.
pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    build(6, facets)
}

/// Icosahedron: flag-no-square triangulation of the 2-sphere with 12 vertices.
pub fn icosahedron() -> SimplicialComplex {
    let up = |i: usize| 1 + i % 5;
    let low = |i: usize| 6 + i % 5;
    let mut facets = Vec::new();
    for i in 0..5 {
        facets.push(vec![0, up(i), up(i + 1)]);
        facets.push(vec![11, low(i), low(i + 1)]);
        facets.push(vec![up(i), up(i + 1), low(i)]);
        facets.push(vec![low(i), low(i + 1), up(i + 1)]);
    }
    build(12, facets)
}

/// Six-vertex real projective plane (hemi-icosahedron).
pub fn projective_plane() -> SimplicialComplex {
    let f = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    build(6, f.iter().map(|t| t.to_vec()).collect())
}

/// Seven-vertex torus (Möbius–Császár).
pub fn torus() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7 {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    build(7, facets)
}

/// Looks up a catalog complex by name (`cycle-N`, `simplex-boundary-D`, …).
pub fn by_name(name: &str) -> Option<SimplicialComplex> {
    if let Some(n) = name.strip_prefix("cycle-") {
        return n.parse().ok().filter(|&n| n >= 3).map(cycle);
    }
    if let Some(d) = name.strip_prefix("simplex-boundary-") {
        return d.parse().ok().filter(|&d| d >= 1).map(simplex_boundary);
    }
    match name {
        "pentagon" => Some(cycle(5)),
        "square" => Some(cycle(4)),
        "octahedron" => Some(octahedron()),
        "icosahedron" => Some(icosahedron()),
        "rp2" => Some(projective_plane()),
        "torus" => Some(torus()),
        "point" => Some(simplex(0)),
        "edge" => Some(simplex(1)),
        _ => None,
    }
}

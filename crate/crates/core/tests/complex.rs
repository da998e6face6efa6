mod common;

use std::collections::BTreeSet;

use davis_core::complex::catalog;
use davis_core::{HomologyProfile, SimplicialComplex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

/// Number of k-chains `σ₀ ⊊ … ⊊ σ_k` of nonempty simplices, for every k.
fn chain_counts(k: &SimplicialComplex) -> Vec<usize> {
    let simplices: Vec<u32> = all_simplices(k).into_iter().collect();
    let top = simplices.iter().map(|s| s.count_ones()).max().unwrap() as usize;
    // ending[s][len]: chains of `len + 1` simplices whose largest is `s`.
    let mut ending = std::collections::HashMap::<u32, Vec<usize>>::new();
    let mut by_size = simplices.clone();
    by_size.sort_by_key(|s| s.count_ones());
    for &s in &by_size {
        let mut row = vec![0usize; top];
        row[0] = 1;
        for &t in &by_size {
            if t != s && t & s == t {
                for (len, &c) in ending[&t].iter().enumerate() {
                    if len + 1 < top {
                        row[len + 1] += c;
                    }
                }
            }
        }
        ending.insert(s, row);
    }
    (0..top).map(|len| ending.values().map(|r| r[len]).sum()).collect()
}

#[test]
fn sd_f_vector_matches_chain_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..60 {
        let k = random_complex(&mut rng, 6, 4);
        let sd = k.barycentric_subdivision();
        let mut f = sd.f_vector();
        f.truncate(chain_counts(&k).len());
        assert_eq!(f, chain_counts(&k), "{:?}", k.facets());
    }
}

#[test]
fn sd_is_flag_for_any_complex() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..40 {
        let k = random_complex(&mut rng, 4, 3);
        let sd = k.barycentric_subdivision();
        assert!(sd.is_flag());
        if sd.vertex_count() <= 16 {
            assert!(brute_is_flag(&sd), "{:?}", k.facets());
        }
    }
}

#[test]
fn octahedron_squares_match_tuple_scan() {
    let k = catalog::octahedron();
    let found: BTreeSet<_> = k.empty_squares().iter().map(|s| diagonal_key(s.vertices())).collect();
    let oracle = brute_empty_squares(&k);
    assert_eq!(found, oracle);
    // Each pair of antipodal pairs spans one equatorial square.
    assert_eq!(oracle.len(), 3);
    assert!(k.is_flag());
    assert!(!k.is_flag_no_square());
}

#[test]
fn six_cycle_is_flag_no_square() {
    let k = catalog::cycle(6);
    assert!(brute_is_flag(&k) && brute_empty_squares(&k).is_empty());
    assert!(k.is_flag_no_square());
}

#[test]
fn cliques_of_octahedron_match_subset_scan() {
    let k = catalog::octahedron();
    let mut ours: Vec<u32> =
        k.cliques().iter().filter(|c| !c.is_empty()).map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
    ours.sort_unstable();
    assert_eq!(ours, brute_cliques(&k));
    // 6 vertices, 12 edges, 8 triangles.
    assert_eq!(ours.len(), 26);
}

#[test]
fn tetrahedron_boundary_becomes_flag_no_square() {
    let k = catalog::simplex_boundary(3);
    let sub = k.make_flag_no_square(3).expect("a 2-sphere refines in a few rounds");
    assert!(sub.complex.is_flag_no_square());
    assert!(brute_is_flag(&sub.complex) && brute_empty_squares(&sub.complex).is_empty());
    assert_eq!(sub.complex.homology(), HomologyProfile::sphere(2));
    assert_eq!(betti_mod_p(&sub.complex, 2), vec![1, 0, 1]);
    // Every carrier is a simplex of the original.
    assert!(sub.carriers.iter().all(|c| k.contains(c)));
}

#[test]
fn homology_matches_mod_p_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..40 {
        let k = random_complex(&mut rng, 7, 4);
        let h = k.homology();
        let free: Vec<usize> = (0..betti_mod_p(&k, 3).len()).map(|d| h.rank(d)).collect();
        // No torsion appears in these small complexes unless the integral groups say so.
        if h.degrees().iter().all(|g| g.torsion.is_empty()) {
            assert_eq!(free, betti_mod_p(&k, 3), "{:?}", k.facets());
            assert_eq!(free, betti_mod_p(&k, 2), "{:?}", k.facets());
        }
    }
}

#[test]
fn projective_plane_torsion() {
    let k = catalog::projective_plane();
    assert_eq!(k.f_vector(), vec![6, 15, 10]);
    assert_eq!(k.homology().torsion(1), &[2]);
    assert_eq!(betti_mod_p(&k, 2), vec![1, 1, 1]);
}

#[test]
fn torus_ranks() {
    let k = catalog::torus();
    assert_eq!(k.f_vector(), vec![7, 21, 14]);
    assert_eq!(k.homology(), HomologyProfile::from_ranks(&[1, 2, 1]));
}

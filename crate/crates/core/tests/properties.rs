mod common;

use std::collections::BTreeSet;

use davis_core::complex::catalog;
use davis_core::homology_model::{fp_commute, fp_normal_form, FreeProductWord, Syllable};
use davis_core::obstruction::{boundary_sum_genus_bound, AdjunctionInput, Summand};
use davis_core::{ConeChamber, NerveGraph, SimplicialComplex};
use proptest::prelude::*;

use common::*;

fn complex(max_vertices: usize, max_facet: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=max_facet.min(n)), 1..6)
            .prop_map(move |fs| SimplicialComplex::new(n, fs.into_iter().map(|f| f.into_iter().collect()).collect()).unwrap())
    })
}

fn nerve() -> impl Strategy<Value = NerveGraph> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let edges: Vec<(usize, usize)> = pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            NerveGraph::new((0..n).map(|i| format!("s{i}")).collect(), &edges).unwrap()
        })
    })
}

fn nerve_and_words(count: usize) -> impl Strategy<Value = (NerveGraph, Vec<Vec<u32>>)> {
    nerve().prop_flat_map(move |g| {
        let n = g.generator_count() as u32;
        (Just(g), prop::collection::vec(prop::collection::vec(0..n, 0..14), count))
    })
}

fn fp_word() -> impl Strategy<Value = FreeProductWord> {
    let factors = NerveGraph::from_complex(&catalog::cycle(5)).chamber_order(5);
    prop::collection::vec((0..factors.len(), -3i64..=3, -3i64..=3), 0..8).prop_map(move |raw| {
        fp_normal_form(raw.into_iter().map(|(f, x, y)| Syllable::new(factors[f].clone(), (x, y))).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subdivision_is_flag_and_keeps_homology(k in complex(5, 3)) {
        let sd = k.barycentric_subdivision();
        prop_assert!(sd.is_flag());
        prop_assert_eq!(sd.euler_characteristic(), k.euler_characteristic());
        prop_assert_eq!(sd.homology(), k.homology());
    }

    #[test]
    fn homology_counts(k in complex(7, 4)) {
        let h = k.homology();
        prop_assert_eq!(h.euler_characteristic(), k.euler_characteristic());
        prop_assert_eq!(h.rank(0), k.components().len());
    }

    #[test]
    fn flag_checks_match_brute_force(k in complex(7, 3)) {
        prop_assert_eq!(k.is_flag(), brute_is_flag(&k));
        let squares: BTreeSet<_> = k.empty_squares().iter().map(|s| diagonal_key(s.vertices())).collect();
        prop_assert_eq!(squares, brute_empty_squares(&k));
    }

    #[test]
    fn refinement_keeps_homology(k in complex(5, 2)) {
        if let Ok(sub) = k.make_flag_no_square(3) {
            prop_assert!(sub.complex.is_flag_no_square());
            prop_assert_eq!(sub.complex.homology(), k.homology());
        }
    }

    #[test]
    fn word_laws((g, words) in nerve_and_words(3)) {
        let [a, b, c] = [0, 1, 2].map(|i| g.reduce(&words[i]).unwrap());
        prop_assert_eq!(&g.reduce(a.letters()).unwrap(), &a);
        prop_assert!(a.len() <= words[0].len());
        prop_assert_eq!(a.len() % 2, words[0].len() % 2);
        prop_assert!(g.multiply(&a, &g.inverse(&a).unwrap()).unwrap().is_identity());
        let reversed: Vec<u32> = words[0].iter().rev().copied().collect();
        prop_assert_eq!(g.reduce(&reversed).unwrap(), g.inverse(&a).unwrap());
        let ab_c = g.multiply(&g.multiply(&a, &b).unwrap(), &c).unwrap();
        let a_bc = g.multiply(&a, &g.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(g.in_commutator_subgroup(&g.multiply(&a, &a).unwrap()));
        let descents = g.descent_set(&a).unwrap();
        prop_assert!(descents.iter().all(|x| descents.iter().all(|y| x == y || g.commute(x, y))));
        for v in g.generators() {
            let shorter = g.length(&g.multiply_generator(&a, v).unwrap()) < a.len();
            prop_assert_eq!(shorter, descents.contains(v));
        }
    }

    #[test]
    fn growth_matches_rational_function(g in nerve()) {
        let spheres = g.growth_series(5, 1_000_000).unwrap();
        let oracle = growth_series_oracle(g.generator_count(), commute_fn(&g), 5);
        prop_assert_eq!(spheres.iter().map(|&s| s as i128).collect::<Vec<_>>(), oracle);
    }

    #[test]
    fn orbifold_euler_by_strata(t in complex(6, 3)) {
        let chamber = ConeChamber::new(&t);
        prop_assert_eq!(chamber.orbifold_euler(), common::orbifold_euler_by_strata(&t));
    }

    #[test]
    fn free_product_laws(a in fp_word(), b in fp_word()) {
        prop_assert_eq!(&fp_normal_form(a.syllables().to_vec()), &a);
        let ab = a.multiply(&b);
        prop_assert!(ab.syllable_len() <= a.syllable_len() + b.syllable_len());
        prop_assert!(a.multiply(&a.inverse()).is_identity());
        prop_assert_eq!(fp_commute(&a, &b), fp_commute(&b, &a));
        prop_assert_eq!(fp_commute(&a, &b), ab == b.multiply(&a));
        let (c, r) = a.cyclic_reduction();
        prop_assert_eq!(r.conjugate_by(&c), a);
    }

    #[test]
    fn adjunction_bound_is_even_and_monotone(c1 in -6i64..=6, sq in 0i64..=3, k in 1i64..=8) {
        let bound = |k| davis_core::obstruction::adjunction_genus_bound(&AdjunctionInput { c1_eval: c1, self_int: sq, k, applicable: true }).unwrap();
        prop_assert_eq!(bound(k), bound(-k));
        prop_assert!(bound(k + 1) >= bound(k));
        prop_assert!(2 * bound(k) - 2 >= (k * c1).abs() + k * k * sq);
        prop_assert!(2 * (bound(k) - 1) - 2 < (k * c1).abs() + k * k * sq);
    }

    #[test]
    fn boundary_sums_ignore_order(bounds in prop::collection::vec((1i64..6, any::<bool>(), any::<bool>()), 1..6)) {
        let summands: Vec<Summand> = bounds.iter().enumerate().map(|(i, &(g, rev, _))| Summand { name: format!("X{i}"), genus_bound: g, reversed: rev }).collect();
        let projection: Vec<bool> = bounds.iter().map(|b| b.2).collect();
        let forward = boundary_sum_genus_bound(&summands, &projection);
        let rev_s: Vec<Summand> = summands.iter().rev().map(|s| Summand { reversed: !s.reversed, ..s.clone() }).collect();
        let rev_p: Vec<bool> = projection.iter().rev().copied().collect();
        prop_assert_eq!(forward, boundary_sum_genus_bound(&rev_s, &rev_p));
    }
}

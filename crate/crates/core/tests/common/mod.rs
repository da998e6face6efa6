//! Independent oracles. Nothing here calls into the algorithms under test
//! beyond reading a complex's facets or a nerve's commutation relation.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use davis_core::{NerveGraph, SimplicialComplex};
use num_rational::Rational64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random complex on `1..=max_vertices` vertices with up to six random facets.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize, max_facet: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(1..=6);
    let facets = (0..m)
        .map(|_| {
            let size = rng.gen_range(1..=max_facet.min(n));
            let mut s: BTreeSet<usize> = BTreeSet::new();
            while s.len() < size {
                s.insert(rng.gen_range(0..n));
            }
            s.into_iter().collect()
        })
        .collect();
    SimplicialComplex::new(n, facets).unwrap()
}

/// Random graph complex (vertices and edges only).
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimplicialComplex {
    let mut facets: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                facets.push(vec![a, b]);
            }
        }
    }
    SimplicialComplex::new(n, facets).unwrap()
}

fn masks_of(k: &SimplicialComplex) -> Vec<u32> {
    k.facets().iter().map(|f| f.iter().fold(0u32, |m, &v| m | 1 << v)).collect()
}

/// Every simplex as a bitmask, by subset enumeration of the facets.
pub fn all_simplices(k: &SimplicialComplex) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for f in masks_of(k) {
        let mut sub = f;
        while sub != 0 {
            out.insert(sub);
            sub = (sub - 1) & f;
        }
    }
    out
}

pub fn edge_oracle(k: &SimplicialComplex) -> impl Fn(usize, usize) -> bool {
    let facets = masks_of(k);
    move |a, b| a != b && facets.iter().any(|f| f >> a & 1 == 1 && f >> b & 1 == 1)
}

/// Cliques of the 1-skeleton (nonempty), by subset enumeration.
pub fn brute_cliques(k: &SimplicialComplex) -> Vec<u32> {
    let n = k.vertex_count();
    let edge = edge_oracle(k);
    (1u32..1 << n)
        .filter(|&s| {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| edge(a, b)))
        })
        .collect()
}

pub fn brute_is_flag(k: &SimplicialComplex) -> bool {
    let simplices = all_simplices(k);
    brute_cliques(k).iter().all(|c| simplices.contains(c))
}

/// Empty squares as their unordered diagonal pairs, from all ordered 4-tuples.
pub fn brute_empty_squares(k: &SimplicialComplex) -> BTreeSet<[(usize, usize); 2]> {
    let n = k.vertex_count();
    let edge = edge_oracle(k);
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = [a, b, c, d].iter().collect::<HashSet<_>>().len() == 4;
                    if distinct && edge(a, b) && edge(b, c) && edge(c, d) && edge(d, a) && !edge(a, c) && !edge(b, d) {
                        out.insert(diagonal_key([a, b, c, d]));
                    }
                }
            }
        }
    }
    out
}

pub fn diagonal_key([a, b, c, d]: [usize; 4]) -> [(usize, usize); 2] {
    let p = (a.min(c), a.max(c));
    let q = (b.min(d), b.max(d));
    [p.min(q), p.max(q)]
}

/// Sphere sizes of the Cayley graph computed in the contragredient Tits
/// representation: the orbit of `(1, …, 1)` under `s: f_s ↦ -f_s`,
/// `f_t ↦ f_t + 2 f_s` for `t` not commuting with `s`. The fundamental chamber
/// has trivial stabilizer, so orbit points are group elements. Stops before a
/// level that would push the ball past `cap`.
pub fn orbit_sphere_sizes(n: usize, commute: impl Fn(usize, usize) -> bool, radius: usize, cap: usize) -> Vec<usize> {
    let start = vec![1i64; n];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut frontier = vec![start];
    let mut sizes = vec![1];
    for _ in 0..radius {
        let mut next = Vec::new();
        for f in &frontier {
            for s in 0..n {
                let mut g = f.clone();
                g[s] = -f[s];
                for t in 0..n {
                    if t != s && !commute(s, t) {
                        g[t] = f[t] + 2 * f[s];
                    }
                }
                if seen.insert(g.clone()) {
                    next.push(g);
                }
            }
        }
        if seen.len() > cap {
            break;
        }
        sizes.push(next.len());
        frontier = next;
    }
    sizes
}

/// Sphere sizes from the growth function of a right-angled Coxeter group,
/// `1/W(t) = Σ_σ (-t/(1+t))^{|σ|}` over cliques `σ` (including the empty one).
pub fn growth_series_oracle(n: usize, commute: impl Fn(usize, usize) -> bool, radius: usize) -> Vec<i128> {
    let mut clique_sizes = vec![0usize];
    for s in 1u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        if vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| commute(a, b))) {
            clique_sizes.push(vs.len());
        }
    }
    let d = *clique_sizes.iter().max().unwrap();
    let binom_poly = |e: usize| -> Vec<i128> {
        let mut p = vec![1i128];
        for _ in 0..e {
            let mut q = vec![0i128; p.len() + 1];
            for (i, &c) in p.iter().enumerate() {
                q[i] += c;
                q[i + 1] += c;
            }
            p = q;
        }
        p
    };
    let numerator = binom_poly(d);
    let mut denominator = vec![0i128; d + 1];
    for &k in &clique_sizes {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for (i, &c) in binom_poly(d - k).iter().enumerate() {
            denominator[i + k] += sign * c;
        }
    }
    assert_eq!(denominator[0], 1);
    let mut out = Vec::with_capacity(radius + 1);
    for m in 0..=radius {
        let mut a = numerator.get(m).copied().unwrap_or(0);
        for j in 1..=m.min(d) {
            a -= denominator[j] * out[m - j];
        }
        out.push(a);
    }
    out
}

/// Betti numbers over `F_p` by dense elimination on simplices enumerated here.
pub fn betti_mod_p(k: &SimplicialComplex, p: i64) -> Vec<usize> {
    let simplices = all_simplices(k);
    let top = simplices.iter().map(|s| s.count_ones()).max().unwrap_or(0) as usize;
    let by_dim: Vec<Vec<u32>> = (1..=top).map(|c| simplices.iter().copied().filter(|s| s.count_ones() as usize == c).collect()).collect();
    let rank = |d: usize| -> usize {
        if d == 0 || d >= by_dim.len() {
            return 0;
        }
        let rows = &by_dim[d - 1];
        let mut m: Vec<Vec<i64>> = vec![vec![0; by_dim[d].len()]; rows.len()];
        for (j, &s) in by_dim[d].iter().enumerate() {
            let vs: Vec<u32> = (0..32).filter(|v| s >> v & 1 == 1).collect();
            for (i, &v) in vs.iter().enumerate() {
                let face = s & !(1 << v);
                let r = rows.iter().position(|&x| x == face).unwrap();
                m[r][j] = if i % 2 == 0 { 1 } else { p - 1 };
            }
        }
        rank_mod_p(m, p)
    };
    (0..by_dim.len()).map(|d| by_dim[d].len() - rank(d) - rank(d + 1)).collect()
}

pub fn rank_mod_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] % p != 0) else { continue };
        m.swap(r, piv);
        let inv = pow(m[r][c].rem_euclid(p), p - 2, p);
        for j in 0..cols {
            m[r][j] = m[r][j] * inv % p;
        }
        for i in 0..rows {
            if i != r && m[i][c] % p != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    m[i][j] = (m[i][j] - f * m[r][j]).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

fn pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Orbifold Euler characteristic of the cone chamber by strata: the open
/// cone contributes `1 - χ(T)`, and the stratum with mirror set exactly `σ`
/// contributes `(1 - χ(lk σ)) / 2^{|σ|}`.
pub fn orbifold_euler_by_strata(k: &SimplicialComplex) -> Rational64 {
    let simplices = all_simplices(k);
    let chi = |set: &mut dyn Iterator<Item = u32>| -> i64 { set.map(|s| if s.count_ones() % 2 == 1 { 1 } else { -1 }).sum() };
    let mut total = Rational64::from_integer(1 - chi(&mut simplices.iter().copied()));
    for &sigma in &simplices {
        let link_chi = chi(&mut simplices.iter().copied().filter(|&t| t & sigma == 0 && simplices.contains(&(t | sigma))));
        total += Rational64::new(1 - link_chi, 1 << sigma.count_ones());
    }
    total
}

/// Commutation relation of a nerve as a closure.
pub fn commute_fn(g: &NerveGraph) -> impl Fn(usize, usize) -> bool + '_ {
    move |a, b| g.commute(a as u32, b as u32)
}

/// Nontrivial elements of the commutator subgroup (every generator used an
/// even number of times) within `radius`, counted on the Tits orbit.
pub fn orbit_even_count(n: usize, commute: impl Fn(usize, usize) -> bool, radius: usize) -> usize {
    let start = (vec![1i64; n], 0u64);
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.0.clone()]);
    let mut frontier = vec![start];
    let mut count = 0;
    for _ in 0..radius {
        let mut next = Vec::new();
        for (f, parity) in &frontier {
            for s in 0..n {
                let mut g = f.clone();
                g[s] = -f[s];
                for t in 0..n {
                    if t != s && !commute(s, t) {
                        g[t] = f[t] + 2 * f[s];
                    }
                }
                if seen.insert(g.clone()) {
                    let p = parity ^ 1 << s;
                    count += usize::from(p == 0);
                    next.push((g, p));
                }
            }
        }
        frontier = next;
    }
    count
}

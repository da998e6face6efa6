//! Barycentric subdivision and the flag-no-square refinement loop.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use super::{Simplex, SimplicialComplex};

/// A subdivision together with, for every new vertex, the smallest simplex
/// of the original complex whose interior contains it (its carrier).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub carriers: Vec<Simplex>,
}

impl Subdivision {
    pub fn identity(k: &SimplicialComplex) -> Self {
        Subdivision { complex: k.clone(), carriers: (0..k.vertex_count()).map(|v| vec![v]).collect() }
    }

    /// Composes `self` (a subdivision of K) with `next` (a subdivision of `self.complex`).
    fn then(&self, next: Subdivision) -> Subdivision {
        let carriers = next
            .carriers
            .iter()
            .map(|c| {
                let s: BTreeSet<usize> = c.iter().flat_map(|&v| self.carriers[v].iter().copied()).collect();
                s.into_iter().collect()
            })
            .collect();
        Subdivision { complex: next.complex, carriers }
    }
}

/// Returned when the refinement loop runs out of rounds.
#[derive(Clone, Debug)]
pub struct SubdivisionFailure {
    pub rounds: usize,
    pub last: Subdivision,
    pub flag: bool,
    pub empty_squares: usize,
}

impl fmt::Display for SubdivisionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no flag-no-square subdivision found after {} rounds (flag: {}, empty squares: {}, vertices: {})",
            self.rounds,
            self.flag,
            self.empty_squares,
            self.last.complex.vertex_count()
        )
    }
}

impl std::error::Error for SubdivisionFailure {}

/// Assigns labels, appending `'` on collision so labels stay unique.
struct LabelPool(HashSet<String>);

impl LabelPool {
    fn new() -> Self {
        LabelPool(HashSet::new())
    }

    fn take(&mut self, mut l: String) -> String {
        while !self.0.insert(l.clone()) {
            l.push('\'');
        }
        l
    }
}

fn bracket(k: &SimplicialComplex, s: &[usize]) -> String {
    let parts: Vec<&str> = s.iter().map(|&v| k.label(v)).collect();
    format!("[{}]", parts.join(","))
}

impl SimplicialComplex {
    /// Barycentric subdivision: one vertex per simplex, one simplex per chain
    /// of the face poset. Vertex `i < n` of the result is the barycenter of the
    /// original vertex `i`; higher simplices follow in (dimension, lexicographic) order.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        self.barycentric().complex
    }

    /// Barycentric subdivision with carriers (the carrier of a barycenter is its simplex).
    pub fn barycentric(&self) -> Subdivision {
        let carriers: Vec<Simplex> = self.simplices_by_dim().iter().flatten().cloned().collect();
        let index: HashMap<&[usize], usize> = carriers.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let mut pool = LabelPool::new();
        let labels = carriers
            .iter()
            .map(|s| if s.len() == 1 { pool.take(self.label(s[0]).to_string()) } else { pool.take(bracket(self, s)) })
            .collect();

        let mut facets = Vec::new();
        for f in self.facets() {
            for perm in permutations(f) {
                let chain: Simplex = (1..=perm.len())
                    .map(|i| {
                        let mut prefix = perm[..i].to_vec();
                        prefix.sort_unstable();
                        index[prefix.as_slice()]
                    })
                    .collect();
                let mut chain = chain;
                chain.sort_unstable();
                facets.push(chain);
            }
        }
        let complex = SimplicialComplex::with_labels(labels, facets).expect("barycentric subdivision is valid");
        Subdivision { complex, carriers }
    }

    /// Refinement used for complexes of dimension ≤ 2. Every edge gets a
    /// midpoint; every triangle `abc` gets three inner vertices `o_a, o_b, o_c`
    /// forming a central triangle, with `o_x` joined to corner `x` and to the
    /// midpoints of the two edges at `x`. Each triangle becomes ten; original
    /// vertices double their degree, midpoints of interior edges get degree 6
    /// and inner vertices degree 5.
    pub fn corner_refinement(&self) -> Subdivision {
        assert!(self.dimension().is_none_or(|d| d <= 2), "corner refinement is defined up to dimension 2");
        let n = self.vertex_count();
        let mut pool = LabelPool::new();
        let mut labels: Vec<String> = self.labels().iter().map(|l| pool.take(l.clone())).collect();
        let mut carriers: Vec<Simplex> = (0..n).map(|v| vec![v]).collect();

        let mut midpoint: BTreeMap<Simplex, usize> = BTreeMap::new();
        for e in self.edges() {
            midpoint.insert(e.clone(), labels.len());
            labels.push(pool.take(format!("m{}", bracket(self, e))));
            carriers.push(e.clone());
        }
        let mid = |a: usize, b: usize| midpoint[&vec![a.min(b), a.max(b)]];

        let mut facets = Vec::new();
        for f in self.facets() {
            match f.len() {
                1 => facets.push(f.clone()),
                2 => {
                    let m = mid(f[0], f[1]);
                    facets.push(vec![f[0], m]);
                    facets.push(vec![f[1], m]);
                }
                3 => {
                    let inner: Vec<usize> = f
                        .iter()
                        .map(|&x| {
                            let id = labels.len();
                            labels.push(pool.take(format!("o{}{}", self.label(x), bracket(self, f))));
                            carriers.push(f.clone());
                            id
                        })
                        .collect();
                    facets.push(inner.clone());
                    for i in 0..3 {
                        let (x, ox) = (f[i], inner[i]);
                        for j in 0..3 {
                            if j == i {
                                continue;
                            }
                            let (y, oy) = (f[j], inner[j]);
                            facets.push(vec![x, mid(x, y), ox]);
                            if i < j {
                                facets.push(vec![mid(x, y), ox, oy]);
                            }
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
        let complex = SimplicialComplex::with_labels(labels, facets).expect("refinement is valid");
        Subdivision { complex, carriers }
    }

    /// Searches for a flag-no-square subdivision by repeated refinement: up to
    /// dimension 2 each round applies [`corner_refinement`](Self::corner_refinement),
    /// above that a barycentric subdivision. The result is re-checked after every
    /// round; running out of rounds means the heuristic gave up, not that no such
    /// subdivision exists.
    pub fn make_flag_no_square(&self, max_rounds: usize) -> Result<Subdivision, SubdivisionFailure> {
        let mut current = Subdivision::identity(self);
        for round in 0..=max_rounds {
            if current.complex.is_flag_no_square() {
                return Ok(current);
            }
            if round == max_rounds {
                break;
            }
            let step = match current.complex.dimension() {
                Some(d) if d > 2 => current.complex.barycentric(),
                _ => current.complex.corner_refinement(),
            };
            current = current.then(step);
        }
        let flag = current.complex.is_flag();
        let empty_squares = current.complex.empty_squares().len();
        Err(SubdivisionFailure { rounds: max_rounds, last: current, flag, empty_squares })
    }
}

/// All orderings of `items`, in lexicographic order of positions.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

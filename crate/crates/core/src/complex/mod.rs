//! Finite abstract simplicial complexes.
//!
//! A complex is stored as its list of facets (maximal simplices) over an ordered
//! vertex set. The full simplex table is materialized on first use. All
//! orderings are lexicographic in vertex index, so every derived list is
//! deterministic.

pub mod catalog;
mod flag;
mod subdivide;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::{ChainComplex, HomologyProfile};

pub use flag::EmptySquare;
pub use subdivide::{Subdivision, SubdivisionFailure};

/// A simplex as an increasing list of vertex indices.
pub type Simplex = Vec<usize>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet {facet} refers to vertex index {index}, but only {count} vertices are declared")]
    IndexOutOfRange { facet: usize, index: usize, count: usize },
    #[error("facet {facet} refers to undeclared vertex {label:?}")]
    UnknownVertex { facet: usize, label: String },
    #[error("vertex label {0:?} is declared twice")]
    DuplicateLabel(String),
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("complex has no vertices")]
    EmptyComplex,
    #[error("{0:?} is not a vertex of the complex")]
    NotAVertex(String),
    #[error("simplex {0:?} is not in the parent complex")]
    NotInParent(Simplex),
}

/// The on-disk JSON shape: `{"vertices": ["a", ...], "facets": [["a","b"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawComplex {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

#[derive(Debug)]
struct SimplexTable {
    by_dim: Vec<Vec<Simplex>>,
    lookup: HashSet<Simplex>,
}

#[derive(Debug)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Simplex>,
    table: OnceLock<SimplexTable>,
    adjacency: OnceLock<Vec<Vec<usize>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex::from_normalized(self.labels.clone(), self.facets.clone())
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

/// Validates a labelled complex: labels must be unique, facet entries must be
/// declared, facets nonempty. Duplicated facets and faces of other facets are
/// absorbed, and declared vertices missing from every facet become 0-simplices.
pub fn validate_complex(raw: &RawComplex) -> Result<SimplicialComplex, ComplexError> {
    let mut index = HashMap::new();
    for (i, l) in raw.vertices.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(ComplexError::DuplicateLabel(l.clone()));
        }
    }
    let facets = raw
        .facets
        .iter()
        .enumerate()
        .map(|(fi, f)| {
            f.iter()
                .map(|l| index.get(l.as_str()).copied().ok_or_else(|| ComplexError::UnknownVertex { facet: fi, label: l.clone() }))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    SimplicialComplex::with_labels(raw.vertices.clone(), facets)
}

impl SimplicialComplex {
    /// Complex on vertices labelled `"0"`, `"1"`, ….
    pub fn new(vertex_count: usize, facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        Self::with_labels((0..vertex_count).map(|i| i.to_string()).collect(), facets)
    }

    pub fn with_labels(labels: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        if labels.is_empty() {
            return Err(ComplexError::EmptyComplex);
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ComplexError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        let mut sets: Vec<Simplex> = Vec::with_capacity(facets.len());
        for (fi, f) in facets.into_iter().enumerate() {
            if f.is_empty() {
                return Err(ComplexError::EmptyFacet(fi));
            }
            if let Some(&index) = f.iter().find(|&&v| v >= n) {
                return Err(ComplexError::IndexOutOfRange { facet: fi, index, count: n });
            }
            let s: BTreeSet<usize> = f.into_iter().collect();
            sets.push(s.into_iter().collect());
        }
        let covered: HashSet<usize> = sets.iter().flatten().copied().collect();
        sets.extend((0..n).filter(|v| !covered.contains(v)).map(|v| vec![v]));
        Ok(Self::from_normalized(labels, maximal_sets(sets)))
    }

    /// The void complex (no simplices at all). Only reachable through internal
    /// constructions such as the link of an isolated vertex.
    pub fn void() -> Self {
        Self::from_normalized(Vec::new(), Vec::new())
    }

    fn from_normalized(labels: Vec<String>, facets: Vec<Simplex>) -> Self {
        SimplicialComplex { labels, facets, table: OnceLock::new(), adjacency: OnceLock::new() }
    }

    /// Builds a complex from arbitrary generating simplices (not necessarily maximal).
    /// Vertices not covered by any generator are dropped and the rest reindexed.
    pub(crate) fn generated_by(labels: &[String], gens: impl IntoIterator<Item = Simplex>) -> Self {
        let gens: Vec<Simplex> = gens.into_iter().collect();
        let used: BTreeSet<usize> = gens.iter().flatten().copied().collect();
        let reindex: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let new_labels = used.iter().map(|&v| labels[v].clone()).collect();
        let facets = gens
            .into_iter()
            .map(|s| {
                let mut t: Simplex = s.iter().map(|v| reindex[v]).collect();
                t.sort_unstable();
                t.dedup();
                t
            })
            .collect();
        Self::from_normalized(new_labels, maximal_sets(facets))
    }

    pub fn to_raw(&self) -> RawComplex {
        RawComplex {
            vertices: self.labels.clone(),
            facets: self.facets.iter().map(|f| f.iter().map(|&v| self.labels[v].clone()).collect()).collect(),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension of the complex; `None` for the void complex.
    pub fn dimension(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len() - 1).max()
    }

    fn table(&self) -> &SimplexTable {
        self.table.get_or_init(|| {
            let mut lookup: HashSet<Simplex> = HashSet::new();
            for f in &self.facets {
                for mask in 1u64..(1u64 << f.len()) {
                    let s: Simplex = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                    lookup.insert(s);
                }
            }
            let top = self.dimension().map_or(0, |d| d + 1);
            let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); top];
            for s in &lookup {
                by_dim[s.len() - 1].push(s.clone());
            }
            for layer in &mut by_dim {
                layer.sort_unstable();
            }
            SimplexTable { by_dim, lookup }
        })
    }

    /// All `k`-simplices in lexicographic order.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.table().by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    /// All simplices grouped by dimension.
    pub fn simplices_by_dim(&self) -> &[Vec<Simplex>] {
        &self.table().by_dim
    }

    pub fn simplex_count(&self) -> usize {
        self.table().lookup.len()
    }

    /// Membership test; `s` must be sorted. The empty simplex is always present.
    pub fn contains(&self, s: &[usize]) -> bool {
        s.is_empty() || self.table().lookup.contains(s)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.table().by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    /// Sorted neighbor lists of the 1-skeleton.
    pub fn adjacency(&self) -> &[Vec<usize>] {
        self.adjacency.get_or_init(|| {
            let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.vertex_count()];
            for f in &self.facets {
                for (i, &a) in f.iter().enumerate() {
                    for &b in &f[i + 1..] {
                        adj[a].insert(b);
                        adj[b].insert(a);
                    }
                }
            }
            adj.into_iter().map(|s| s.into_iter().collect()).collect()
        })
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adjacency()[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> &[Simplex] {
        self.simplices(1)
    }

    /// Connected components of the 1-skeleton, as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency()[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The link of vertex `v`: simplices `τ` with `v ∉ τ` and `τ ∪ {v}` a simplex.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex, ComplexError> {
        if v >= self.vertex_count() {
            return Err(ComplexError::NotAVertex(v.to_string()));
        }
        let gens = self
            .facets
            .iter()
            .filter(|f| f.contains(&v) && f.len() > 1)
            .map(|f| f.iter().copied().filter(|&w| w != v).collect::<Simplex>());
        Ok(Self::generated_by(&self.labels, gens))
    }

    pub fn link_of_label(&self, label: &str) -> Result<SimplicialComplex, ComplexError> {
        let v = self.vertex_index(label).ok_or_else(|| ComplexError::NotAVertex(label.to_string()))?;
        self.link(v)
    }

    /// Cone with a new apex vertex appended last.
    pub fn cone(&self, apex_label: &str) -> SimplicialComplex {
        let apex = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.push(apex_label.to_string());
        let facets = if self.facets.is_empty() {
            vec![vec![apex]]
        } else {
            self.facets
                .iter()
                .map(|f| {
                    let mut g = f.clone();
                    g.push(apex);
                    g
                })
                .collect()
        };
        Self::from_normalized(labels, facets)
    }

    /// Simplicial join. Labels of the second factor are suffixed with `'` when they collide.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let n = self.vertex_count();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let mut facets = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                let mut s = f.clone();
                s.extend(g.iter().map(|&v| v + n));
                facets.push(s);
            }
        }
        Self::from_normalized(labels, maximal_sets(facets))
    }

    pub fn chain_complex(&self) -> ChainComplex {
        ChainComplex::from_simplices(self.simplices_by_dim())
    }

    /// Integral simplicial homology.
    pub fn homology(&self) -> HomologyProfile {
        self.chain_complex().homology()
    }
}

/// Deduplicates and drops sets contained in other sets; output is sorted.
fn maximal_sets(mut sets: Vec<Simplex>) -> Vec<Simplex> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Simplex> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| is_subset(&s, k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// A downward-closed set of simplices of a parent complex.
#[derive(Clone, Debug)]
pub struct Subcomplex<'a> {
    parent: &'a SimplicialComplex,
    simplices: BTreeSet<Simplex>,
}

impl<'a> Subcomplex<'a> {
    pub fn empty(parent: &'a SimplicialComplex) -> Self {
        Subcomplex { parent, simplices: BTreeSet::new() }
    }

    /// Closure of `gens` under faces; every generator must be a simplex of `parent`.
    pub fn generated_by(parent: &'a SimplicialComplex, gens: impl IntoIterator<Item = Simplex>) -> Result<Self, ComplexError> {
        let mut out = Self::empty(parent);
        for g in gens {
            if g.is_empty() {
                continue;
            }
            if !parent.contains(&g) {
                return Err(ComplexError::NotInParent(g));
            }
            out.insert_closure(&g);
        }
        Ok(out)
    }

    fn insert_closure(&mut self, s: &[usize]) {
        if self.simplices.contains(s) {
            return;
        }
        for mask in 1u64..(1u64 << s.len()) {
            let face: Simplex = (0..s.len()).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            self.simplices.insert(face);
        }
    }

    pub fn parent(&self) -> &'a SimplicialComplex {
        self.parent
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.simplices.contains(s)
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices.iter().filter(|s| s.len() == 1).map(|s| s[0]).collect()
    }

    pub fn union(&self, other: &Subcomplex<'a>) -> Subcomplex<'a> {
        Subcomplex { parent: self.parent, simplices: self.simplices.union(&other.simplices).cloned().collect() }
    }

    pub fn intersection(&self, other: &Subcomplex<'a>) -> Subcomplex<'a> {
        Subcomplex { parent: self.parent, simplices: self.simplices.intersection(&other.simplices).cloned().collect() }
    }

    /// Closure of the parent's simplices lying outside this subcomplex.
    pub fn complement_closure(&self) -> Subcomplex<'a> {
        let mut out = Subcomplex::empty(self.parent);
        for layer in self.parent.simplices_by_dim() {
            for s in layer {
                if !self.simplices.contains(s) {
                    out.insert_closure(s);
                }
            }
        }
        out
    }

    /// Topological frontier inside the parent: `A ∩ cl(K \ A)`.
    pub fn frontier(&self) -> Subcomplex<'a> {
        self.intersection(&self.complement_closure())
    }

    pub fn by_dim(&self) -> Vec<Vec<Simplex>> {
        let top = self.simplices.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![Vec::new(); top];
        for s in &self.simplices {
            out[s.len() - 1].push(s.clone());
        }
        out
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(|s| s.len() - 1).max()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(|s| if s.len() % 2 == 1 { 1 } else { -1 }).sum()
    }

    pub fn homology(&self) -> HomologyProfile {
        ChainComplex::from_simplices(&self.by_dim()).homology()
    }

    pub fn is_connected(&self) -> bool {
        self.homology().rank(0) == 1
    }

    /// Standalone copy with the parent's labels.
    pub fn to_complex(&self) -> SimplicialComplex {
        SimplicialComplex::generated_by(&self.parent.labels, self.simplices.iter().cloned())
    }
}

impl PartialEq for Subcomplex<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.parent, other.parent) && self.simplices == other.simplices
    }
}

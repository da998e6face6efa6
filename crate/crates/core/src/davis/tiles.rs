//! Truncations `P_n`: the first `n` chambers in chamber order.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use super::assemble::{assemble, boundary_json};
use super::{injectivity, AttachRegion, ConeChamber, DavisError};
use crate::complex::Simplex;
use crate::coxeter::{Generator, ReducedWord};
use crate::homology::{ChainComplex, HomologyProfile};

/// Resource limits for a truncation build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationGuards {
    pub max_tiles: usize,
    pub max_cells: usize,
}

impl Default for TruncationGuards {
    fn default() -> Self {
        TruncationGuards { max_tiles: 4096, max_cells: 2_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tile {
    pub word: ReducedWord,
    /// `(-1)^ℓ(g)`.
    pub sign: i8,
}

/// Tiles `lower` and `upper` share the image of mirror `mirror`, with
/// `g_upper = g_lower · mirror` one letter longer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TileEdge {
    pub lower: usize,
    pub upper: usize,
    pub mirror: Generator,
}

#[derive(Clone, Debug)]
pub struct TileComplex<'a> {
    chamber: &'a ConeChamber,
    tiles: Vec<Tile>,
    cells: Vec<Vec<(ReducedWord, usize)>>,
    chain: ChainComplex,
    prefix_counts: Vec<Vec<usize>>,
    shared: Vec<BTreeSet<Simplex>>,
    edges: Vec<TileEdge>,
}

impl<'a> TileComplex<'a> {
    /// Glues the first `n` chambers. Cell `(g, c)` is keyed by the shortest
    /// element of `g·W_c`.
    pub fn build(chamber: &'a ConeChamber, n: usize, guards: TruncationGuards) -> Result<Self, DavisError> {
        if n > guards.max_tiles {
            return Err(DavisError::GuardExceeded { what: "tile", needed: n, limit: guards.max_tiles });
        }
        let nerve = chamber.nerve();
        let words = nerve.chamber_order(n);
        let tiles: Vec<Tile> = words
            .iter()
            .map(|w| Tile { word: w.clone(), sign: if w.len() % 2 == 0 { 1 } else { -1 } })
            .collect();
        let asm = assemble(chamber, tiles.len(), guards.max_cells, |t, c| {
            chamber.coset_minimum(&words[t], chamber.cell_mirrors(c))
        })?;

        let position: HashMap<&ReducedWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut edges = Vec::new();
        for (j, w) in words.iter().enumerate() {
            for v in nerve.descent_set(w)?.iter() {
                let lower = nerve.multiply_generator(w, v)?;
                edges.push(TileEdge { lower: position[&lower], upper: j, mirror: v });
            }
        }
        edges.sort_unstable_by_key(|e| (e.lower, e.upper));

        Ok(TileComplex {
            chamber,
            tiles,
            cells: asm.cells,
            chain: asm.chain,
            prefix_counts: asm.prefix_counts,
            shared: asm.shared,
            edges,
        })
    }

    pub fn chamber(&self) -> &'a ConeChamber {
        self.chamber
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    /// Cells of dimension `d` as (coset representative, chamber simplex index).
    pub fn cells(&self, d: usize) -> &[(ReducedWord, usize)] {
        &self.cells[d]
    }

    pub fn chain_complex(&self) -> &ChainComplex {
        &self.chain
    }

    /// Cell counts per dimension of `P_k`.
    pub fn prefix_counts(&self, k: usize) -> &[usize] {
        &self.prefix_counts[k - 1]
    }

    /// Chain complex of `P_k`, `1 ≤ k ≤ n`.
    pub fn prefix(&self, k: usize) -> ChainComplex {
        self.chain.leading_subcomplex(self.prefix_counts(k))
    }

    pub fn euler_characteristic(&self, k: usize) -> i64 {
        self.prefix(k).euler_characteristic()
    }

    pub fn homology(&self, k: usize) -> HomologyProfile {
        self.prefix(k).homology()
    }

    /// Boundary simplices of tile `j` that were already glued when it arrived
    /// (empty for the first tile).
    pub fn observed_attach(&self, j: usize) -> &BTreeSet<Simplex> {
        &self.shared[j]
    }

    /// Predicted attach region of tile `j ≥ 1`.
    pub fn attach_region(&self, j: usize) -> Result<AttachRegion<'a>, DavisError> {
        AttachRegion::from_word(self.chamber, &self.tiles[j].word)
    }

    pub fn adjacency(&self) -> &[TileEdge] {
        &self.edges
    }

    pub fn adjacency_connected(&self) -> bool {
        let n = self.tiles.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut components = n;
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.lower), find(&mut parent, e.upper));
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components <= 1
    }

    pub fn signs_alternate(&self) -> bool {
        self.edges.iter().all(|e| self.tiles[e.lower].sign == -self.tiles[e.upper].sign)
    }

    /// For each `k ≥ 2`, whether `H_1(P_{k-1}) → H_1(P_k)` is injective over `Q`.
    pub fn h1_injectivity_steps(&self) -> Vec<bool> {
        (2..=self.tiles.len())
            .map(|k| injectivity::h1_injective(&self.prefix(k), self.prefix_counts(k - 1)))
            .collect()
    }

    pub fn h1_injectivity_check(&self) -> bool {
        self.h1_injectivity_steps().into_iter().all(|b| b)
    }

    pub fn to_dot(&self) -> String {
        let nerve = self.chamber.nerve();
        let mut out = String::from("graph tiles {\n");
        for (i, t) in self.tiles.iter().enumerate() {
            writeln!(
                out,
                "  {i} [label=\"{}\", length={}, sign={}];",
                nerve.display(&t.word),
                t.word.len(),
                t.sign
            )
            .unwrap();
        }
        for e in &self.edges {
            writeln!(out, "  {} -- {} [label=\"{}\"];", e.lower, e.upper, nerve.label(e.mirror)).unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn adjacency_json(&self) -> Value {
        let nerve = self.chamber.nerve();
        let nodes: Vec<Value> = self
            .tiles
            .iter()
            .enumerate()
            .map(|(i, t)| json!({ "index": i, "normal_form": nerve.format(&t.word), "length": t.word.len(), "sign": t.sign }))
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| json!({ "source": e.lower, "target": e.upper, "mirror": nerve.label(e.mirror) }))
            .collect();
        json!({ "nodes": nodes, "edges": edges })
    }

    pub fn boundary_json(&self) -> Value {
        boundary_json(&self.chain)
    }
}

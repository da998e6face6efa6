//! Gluing copies of the chamber into one chain complex.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use serde_json::{json, Value};

use super::{ConeChamber, DavisError};
use crate::complex::Simplex;
use crate::homology::{ChainComplex, SparseMatrix};

/// Cells of a glued complex, each the image of a chamber simplex in some copy.
/// Cells of every dimension are numbered in birth order, so the first `k`
/// copies span a leading subcomplex.
#[derive(Clone, Debug)]
pub(crate) struct Assembly<K> {
    /// `cells[d][i] = (copy key, index of the simplex in the chamber's d-simplices)`.
    pub cells: Vec<Vec<(K, usize)>>,
    pub chain: ChainComplex,
    /// Cell counts per dimension after each copy.
    pub prefix_counts: Vec<Vec<usize>>,
    /// Chamber simplices of each copy that were already present when it arrived.
    pub shared: Vec<BTreeSet<Simplex>>,
}

/// `key(t, c)` names the cell of copy `t` carried by the chamber simplex `c`.
pub(crate) fn assemble<K: Clone + Eq + Hash>(
    chamber: &ConeChamber,
    copies: usize,
    max_cells: usize,
    mut key: impl FnMut(usize, &[usize]) -> K,
) -> Result<Assembly<K>, DavisError> {
    let by_dim = chamber.cone().simplices_by_dim();
    let dims = by_dim.len();
    let positions: Vec<HashMap<&[usize], usize>> =
        by_dim.iter().map(|layer| layer.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect()).collect();

    let mut index: Vec<HashMap<(K, usize), usize>> = vec![HashMap::new(); dims];
    let mut cells: Vec<Vec<(K, usize)>> = vec![Vec::new(); dims];
    let mut columns: Vec<Vec<Vec<(usize, i64)>>> = vec![Vec::new(); dims];
    let mut prefix_counts = Vec::with_capacity(copies);
    let mut shared = Vec::with_capacity(copies);
    let mut total = 0;

    for t in 0..copies {
        let mut seen = BTreeSet::new();
        for (d, layer) in by_dim.iter().enumerate() {
            for (i, c) in layer.iter().enumerate() {
                let k = (key(t, c), i);
                if index[d].contains_key(&k) {
                    seen.insert(c.clone());
                    continue;
                }
                total += 1;
                if total > max_cells {
                    return Err(DavisError::GuardExceeded { what: "cell", needed: total, limit: max_cells });
                }
                if d > 0 {
                    let col = (0..c.len())
                        .map(|j| {
                            let face: Simplex = c.iter().enumerate().filter(|&(x, _)| x != j).map(|(_, &v)| v).collect();
                            let fk = (key(t, &face), positions[d - 1][face.as_slice()]);
                            (index[d - 1][&fk], if j % 2 == 0 { 1 } else { -1 })
                        })
                        .collect();
                    columns[d].push(col);
                }
                index[d].insert(k.clone(), cells[d].len());
                cells[d].push(k);
            }
        }
        prefix_counts.push(cells.iter().map(Vec::len).collect());
        shared.push(seen);
    }

    let counts: Vec<usize> = cells.iter().map(Vec::len).collect();
    let boundaries = (1..dims).map(|d| SparseMatrix::from_columns(counts[d - 1], std::mem::take(&mut columns[d]))).collect();
    Ok(Assembly { cells, chain: ChainComplex::new(counts, boundaries), prefix_counts, shared })
}

/// Boundary matrices as JSON: `{"counts": [...], "boundaries": [{"degree", "rows",
/// "cols", "entries": [[row, col, value], ...]}]}`.
pub fn boundary_json(chain: &ChainComplex) -> Value {
    let boundaries: Vec<Value> = (1..chain.counts().len())
        .map(|k| {
            let m = chain.boundary(k);
            let entries: Vec<[i64; 3]> = (0..m.ncols())
                .flat_map(|c| m.column(c).iter().map(move |&(r, v)| [r as i64, c as i64, v]))
                .collect();
            json!({ "degree": k, "rows": m.nrows(), "cols": m.ncols(), "entries": entries })
        })
        .collect();
    json!({ "counts": chain.counts(), "boundaries": boundaries })
}

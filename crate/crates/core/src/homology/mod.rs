//! Integral homology of finite chain complexes.

pub mod snf;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use snf::SparseMatrix;

/// One graded piece `Z^rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_m` with `t_1 | t_2 | … | t_m`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl DegreeGroup {
    pub fn free(rank: usize) -> Self {
        DegreeGroup { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Graded homology groups, degree 0 first. Degrees past the last entry are trivial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyProfile {
    degrees: Vec<DegreeGroup>,
}

impl HomologyProfile {
    pub fn new(mut degrees: Vec<DegreeGroup>) -> Self {
        for g in &mut degrees {
            g.torsion = normalize_torsion(&g.torsion);
        }
        while degrees.last().is_some_and(DegreeGroup::is_trivial) {
            degrees.pop();
        }
        HomologyProfile { degrees }
    }

    pub fn from_ranks(ranks: &[usize]) -> Self {
        Self::new(ranks.iter().map(|&r| DegreeGroup::free(r)).collect())
    }

    /// Homology of a point.
    pub fn point() -> Self {
        Self::from_ranks(&[1])
    }

    /// Homology of the `d`-sphere; `d = -1` is the empty set.
    pub fn sphere(d: isize) -> Self {
        match d {
            d if d < 0 => Self::default(),
            0 => Self::from_ranks(&[2]),
            d => {
                let mut ranks = vec![0; d as usize + 1];
                ranks[0] = 1;
                ranks[d as usize] = 1;
                Self::from_ranks(&ranks)
            }
        }
    }

    pub fn degree(&self, k: usize) -> DegreeGroup {
        self.degrees.get(k).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> &[DegreeGroup] {
        &self.degrees
    }

    pub fn rank(&self, k: usize) -> usize {
        self.degrees.get(k).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, k: usize) -> &[u64] {
        self.degrees.get(k).map_or(&[], |g| g.torsion.as_slice())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|g| g.rank).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(k, g)| if k % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum()
    }

    /// True when the reduced homology vanishes, i.e. the profile of a point.
    pub fn is_acyclic(&self) -> bool {
        *self == Self::point()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degrees.is_empty() {
            return write!(f, "0");
        }
        for (k, g) in self.degrees.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "H{k}=Z^{}", g.rank)?;
            for t in &g.torsion {
                write!(f, "+Z/{t}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<usize, &DegreeGroup> = self.degrees.iter().enumerate().collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomologyProfile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map: BTreeMap<usize, DegreeGroup> = BTreeMap::deserialize(d)?;
        let top = map.keys().next_back().map_or(0, |&k| k + 1);
        let mut degrees = vec![DegreeGroup::default(); top];
        for (k, g) in map {
            degrees[k] = g;
        }
        Ok(HomologyProfile::new(degrees))
    }
}

/// Rewrites a list of cyclic orders as invariant factors `t_1 | … | t_m`
/// (entries equal to 1 are dropped).
pub fn normalize_torsion(orders: &[u64]) -> Vec<u64> {
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &n in orders {
        assert!(n != 0, "torsion order 0 is not a finite cyclic group");
        let mut n = n;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                let mut q = 1;
                while n % p == 0 {
                    n /= p;
                    q *= p;
                }
                by_prime.entry(p).or_default().push(q);
            }
            p += 1;
        }
        if n > 1 {
            by_prime.entry(n).or_default().push(n);
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![1u64; len];
    for powers in by_prime.values_mut() {
        powers.sort_unstable();
        // Largest powers go to the last factor.
        for (i, &q) in powers.iter().rev().enumerate() {
            out[len - 1 - i] *= q;
        }
    }
    out
}

/// A finite chain complex of free abelian groups, `∂_k : C_k → C_{k-1}`.
#[derive(Clone, Debug, Default)]
pub struct ChainComplex {
    /// Number of cells in each dimension.
    counts: Vec<usize>,
    /// `boundaries[k]` is `∂_k` for `k ≥ 1`; index 0 is unused.
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    /// `boundaries[k-1]` must be the matrix of `∂_k` (rows: (k-1)-cells, columns: k-cells).
    pub fn new(counts: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Self {
        assert_eq!(boundaries.len() + 1, counts.len().max(1), "one boundary map per positive degree");
        let mut all = vec![SparseMatrix::zeros(0, counts.first().copied().unwrap_or(0))];
        for (i, b) in boundaries.into_iter().enumerate() {
            assert_eq!(b.nrows(), counts[i]);
            assert_eq!(b.ncols(), counts[i + 1]);
            all.push(b);
        }
        ChainComplex { counts, boundaries: all }
    }

    /// Oriented simplicial chain complex. `by_dim[k]` lists the k-simplices as
    /// increasing vertex lists and must be closed under faces.
    pub fn from_simplices(by_dim: &[Vec<Vec<usize>>]) -> Self {
        let counts: Vec<usize> = by_dim.iter().map(Vec::len).collect();
        let mut boundaries = Vec::new();
        for k in 1..by_dim.len() {
            let index: HashMap<&[usize], usize> =
                by_dim[k - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
            let cols = by_dim[k]
                .iter()
                .map(|s| {
                    (0..s.len())
                        .map(|i| {
                            let face: Vec<usize> =
                                s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                            let row = *index.get(face.as_slice()).expect("simplex list not closed under faces");
                            (row, if i % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                })
                .collect();
            boundaries.push(SparseMatrix::from_columns(counts[k - 1], cols));
        }
        ChainComplex::new(counts, boundaries)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn dimension(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    /// Matrix of `∂_k`, for `1 ≤ k ≤ dim`.
    pub fn boundary(&self, k: usize) -> &SparseMatrix {
        &self.boundaries[k]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Subcomplex spanned by the first `prefix[k]` cells of each dimension.
    /// The caller guarantees that these prefixes are closed under boundary.
    pub fn leading_subcomplex(&self, prefix: &[usize]) -> ChainComplex {
        assert_eq!(prefix.len(), self.counts.len());
        let mut top = prefix.len();
        while top > 0 && prefix[top - 1] == 0 {
            top -= 1;
        }
        let counts = prefix[..top].to_vec();
        let boundaries = (1..top).map(|k| self.boundaries[k].leading_block(prefix[k - 1], prefix[k])).collect();
        ChainComplex::new(counts, boundaries)
    }

    pub fn homology(&self) -> HomologyProfile {
        let n = self.counts.len();
        // factors[k] = invariant factors of ∂_k.
        let factors: Vec<Vec<u64>> = (0..n)
            .map(|k| if k == 0 { Vec::new() } else { self.boundaries[k].invariant_factors() })
            .collect();
        let degrees = (0..n)
            .map(|k| {
                let rank_out = factors[k].len();
                let (rank_in, torsion) = match factors.get(k + 1) {
                    Some(f) => (f.len(), f.iter().copied().filter(|&d| d > 1).collect()),
                    None => (0, Vec::new()),
                };
                DegreeGroup { rank: self.counts[k] - rank_out - rank_in, torsion }
            })
            .collect();
        HomologyProfile::new(degrees)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_normal_form() {
        assert_eq!(normalize_torsion(&[2, 3]), vec![6]);
        assert_eq!(normalize_torsion(&[4, 2, 2]), vec![2, 2, 4]);
        assert_eq!(normalize_torsion(&[6, 4]), vec![2, 12]);
        assert_eq!(normalize_torsion(&[1, 1]), Vec::<u64>::new());
    }

    #[test]
    fn sphere_profiles() {
        assert_eq!(HomologyProfile::sphere(0).ranks(), vec![2]);
        assert_eq!(HomologyProfile::sphere(2).ranks(), vec![1, 0, 1]);
        assert!(HomologyProfile::sphere(-1).is_empty());
        assert_eq!(HomologyProfile::sphere(3).euler_characteristic(), 0);
    }

    #[test]
    fn json_shape() {
        let p = HomologyProfile::new(vec![DegreeGroup::free(1), DegreeGroup { rank: 0, torsion: vec![2] }]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"0":{"rank":1,"torsion":[]},"1":{"rank":0,"torsion":[2]}}"#);
        let back: HomologyProfile = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn triangle_boundary_chain_complex() {
        let by_dim = vec![vec![vec![0], vec![1], vec![2]], vec![vec![0, 1], vec![0, 2], vec![1, 2]]];
        let cc = ChainComplex::from_simplices(&by_dim);
        assert_eq!(cc.homology().ranks(), vec![1, 1]);
        assert_eq!(cc.euler_characteristic(), 0);
        let sub = cc.leading_subcomplex(&[3, 2]);
        assert_eq!(sub.homology().ranks(), vec![1]);
    }
}

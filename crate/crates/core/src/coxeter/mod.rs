//! The right-angled Coxeter group `W(T)` of a simplicial complex `T`.
//!
//! Generators are the vertices of `T`; each is an involution, and two
//! generators commute exactly when they span an edge. Elements are stored as
//! [`ReducedWord`]s in shortlex normal form: the lexicographically least
//! reduced expression, with letters compared by vertex index.

mod ball;
mod parity;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{EmptySquare, SimplicialComplex};

pub use ball::ball_csv;
pub use parity::{ParityVector, TorsionScan, TorsionScope};

pub type Generator = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator index {0} out of range")]
    GeneratorOutOfRange(Generator),
    #[error("edge ({0}, {1}) does not join two distinct declared generators")]
    InvalidEdge(usize, usize),
    #[error("words belong to different nerves")]
    NerveMismatch,
    #[error("ball of radius {radius} exceeds the guard of {limit} elements")]
    GuardExceeded { radius: usize, limit: usize },
}

/// Generators and commuting pairs of a right-angled Coxeter group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveGraph {
    labels: Vec<String>,
    adjacent: Vec<Vec<bool>>,
    fingerprint: u64,
}

/// A group element in shortlex normal form.
///
/// Ordering is shortlex (length first, then lexicographic), which is the
/// chamber order used for truncations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    nerve: u64,
    letters: Vec<Generator>,
}

impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.nerve.cmp(&other.nerve))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl ReducedWord {
    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed letters, i.e. the inverse as a (not yet normalized) word.
    pub fn reversed_letters(&self) -> Vec<Generator> {
        self.letters.iter().rev().copied().collect()
    }
}

/// `In(w) = {v : ℓ(wv) < ℓ(w)}`, sorted by generator index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DescentSet(pub Vec<Generator>);

impl DescentSet {
    pub fn contains(&self, v: Generator) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = Generator> + '_ {
        self.0.iter().copied()
    }
}

/// Two commuting infinite-order elements `ac` and `bd` built from an empty square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Witness {
    pub square: EmptySquare,
    pub first: ReducedWord,
    pub second: ReducedWord,
}

fn fnv(bytes: impl IntoIterator<Item = u8>, mut h: u64) -> u64 {
    for b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    h
}

impl NerveGraph {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, CoxeterError> {
        let n = labels.len();
        let mut adjacent = vec![vec![false; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(CoxeterError::InvalidEdge(a, b));
            }
            adjacent[a][b] = true;
            adjacent[b][a] = true;
        }
        let mut h = 0xcbf2_9ce4_8422_2325;
        for l in &labels {
            h = fnv(l.bytes().chain([0]), h);
        }
        for (a, row) in adjacent.iter().enumerate() {
            for (b, &adj) in row.iter().enumerate().skip(a + 1) {
                if adj {
                    h = fnv((a as u64).to_le_bytes().into_iter().chain((b as u64).to_le_bytes()), h);
                }
            }
        }
        Ok(NerveGraph { labels, adjacent, fingerprint: h })
    }

    /// The nerve of a complex: its vertices, commuting along edges of the 1-skeleton.
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let edges: Vec<(usize, usize)> = k.edges().iter().map(|e| (e[0], e[1])).collect();
        Self::new(k.labels().to_vec(), &edges).expect("edges of a valid complex")
    }

    pub fn generator_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Generator) -> &str {
        &self.labels[v as usize]
    }

    pub fn generator(&self, label: &str) -> Option<Generator> {
        self.labels.iter().position(|l| l == label).map(|i| i as Generator)
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        0..self.labels.len() as Generator
    }

    /// Distinct generators joined by an edge.
    pub fn commute(&self, a: Generator, b: Generator) -> bool {
        self.adjacent[a as usize][b as usize]
    }

    pub fn edges(&self) -> Vec<(Generator, Generator)> {
        let mut out = Vec::new();
        for a in self.generators() {
            for b in a + 1..self.labels.len() as Generator {
                if self.commute(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Flag completion of the commutation graph.
    pub fn flag_complex(&self) -> SimplicialComplex {
        let n = self.labels.len();
        let edges: Vec<Vec<usize>> = self.edges().into_iter().map(|(a, b)| vec![a as usize, b as usize]).collect();
        let graph = SimplicialComplex::with_labels(self.labels.clone(), edges).expect("nerve graph is a valid 1-complex");
        let facets: Vec<Vec<usize>> = graph.cliques().into_iter().filter(|c| !c.is_empty()).collect();
        debug_assert!(facets.iter().flatten().all(|&v| v < n));
        SimplicialComplex::with_labels(self.labels.clone(), facets).expect("cliques form a complex")
    }

    pub fn identity(&self) -> ReducedWord {
        ReducedWord { nerve: self.fingerprint, letters: Vec::new() }
    }

    pub fn generator_word(&self, v: Generator) -> Result<ReducedWord, CoxeterError> {
        self.reduce(&[v])
    }

    fn check(&self, w: &ReducedWord) -> Result<(), CoxeterError> {
        if w.nerve == self.fingerprint {
            Ok(())
        } else {
            Err(CoxeterError::NerveMismatch)
        }
    }

    /// Appends `s` to a reduced word, cancelling against the last occurrence
    /// of `s` if everything after it commutes with `s`.
    fn push_letter(&self, word: &mut Vec<Generator>, s: Generator) {
        for j in (0..word.len()).rev() {
            let t = word[j];
            if t == s {
                word.remove(j);
                return;
            }
            if !self.commute(t, s) {
                break;
            }
        }
        word.push(s);
    }

    /// Lexicographically least rearrangement of a reduced word by commutations.
    fn normal_form(&self, mut word: Vec<Generator>) -> Vec<Generator> {
        let mut out = Vec::with_capacity(word.len());
        while !word.is_empty() {
            let mut best: Option<usize> = None;
            for i in 0..word.len() {
                let x = word[i];
                if best.is_some_and(|b| word[b] <= x) {
                    continue;
                }
                if word[..i].iter().all(|&t| self.commute(t, x)) {
                    best = Some(i);
                }
            }
            let i = best.expect("the first letter can always move to the front");
            out.push(word.remove(i));
        }
        out
    }

    fn reduce_unchecked(&self, start: Vec<Generator>, tail: &[Generator]) -> ReducedWord {
        let mut word = start;
        for &s in tail {
            self.push_letter(&mut word, s);
        }
        ReducedWord { nerve: self.fingerprint, letters: self.normal_form(word) }
    }

    /// Reduces an arbitrary generator sequence to normal form.
    pub fn reduce(&self, letters: &[Generator]) -> Result<ReducedWord, CoxeterError> {
        if let Some(&bad) = letters.iter().find(|&&v| v as usize >= self.labels.len()) {
            return Err(CoxeterError::GeneratorOutOfRange(bad));
        }
        Ok(self.reduce_unchecked(Vec::new(), letters))
    }

    /// Parses space-separated generator labels.
    pub fn parse(&self, text: &str) -> Result<ReducedWord, CoxeterError> {
        let letters = text
            .split_whitespace()
            .map(|l| self.generator(l).ok_or_else(|| CoxeterError::UnknownGenerator(l.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        self.reduce(&letters)
    }

    /// Space-separated labels; the identity is the empty string.
    pub fn format(&self, w: &ReducedWord) -> String {
        w.letters.iter().map(|&v| self.label(v)).collect::<Vec<_>>().join(" ")
    }

    pub fn display<'a>(&'a self, w: &'a ReducedWord) -> WordDisplay<'a> {
        WordDisplay { nerve: self, word: w }
    }

    pub fn multiply(&self, a: &ReducedWord, b: &ReducedWord) -> Result<ReducedWord, CoxeterError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.reduce_unchecked(a.letters.clone(), &b.letters))
    }

    /// Right multiplication by a single generator.
    pub fn multiply_generator(&self, a: &ReducedWord, v: Generator) -> Result<ReducedWord, CoxeterError> {
        self.check(a)?;
        if v as usize >= self.labels.len() {
            return Err(CoxeterError::GeneratorOutOfRange(v));
        }
        Ok(self.reduce_unchecked(a.letters.clone(), &[v]))
    }

    pub fn inverse(&self, w: &ReducedWord) -> Result<ReducedWord, CoxeterError> {
        self.check(w)?;
        Ok(self.reduce_unchecked(Vec::new(), &w.reversed_letters()))
    }

    pub fn length(&self, w: &ReducedWord) -> usize {
        w.len()
    }

    /// Generators `v` with `ℓ(wv) = ℓ(w) - 1`: letters that can be commuted to the end.
    pub fn descent_set(&self, w: &ReducedWord) -> Result<DescentSet, CoxeterError> {
        self.check(w)?;
        let letters = &w.letters;
        let mut out = BTreeSet::new();
        for j in 0..letters.len() {
            let x = letters[j];
            if letters[j + 1..].iter().all(|&t| self.commute(t, x)) {
                out.insert(x);
            }
        }
        Ok(DescentSet(out.into_iter().collect()))
    }

    /// Induced 4-cycles of the commutation graph.
    pub fn empty_squares(&self) -> Vec<EmptySquare> {
        let n = self.labels.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    if !(self.adjacent[a][b] && self.adjacent[a][d]) || self.adjacent[b][d] {
                        continue;
                    }
                    for c in a + 1..n {
                        if c != b && c != d && self.adjacent[b][c] && self.adjacent[c][d] && !self.adjacent[a][c] {
                            out.push(EmptySquare([a, b, c, d]));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Word hyperbolicity of a right-angled Coxeter group: the commutation
    /// graph (equivalently its flag completion) has no empty square.
    pub fn is_hyperbolic(&self) -> bool {
        self.empty_squares().is_empty()
    }

    /// A `Z²` subgroup exists iff some empty square does; the first one found
    /// gives commuting elements `ac` and `bd`.
    pub fn contains_z2(&self) -> bool {
        !self.is_hyperbolic()
    }

    pub fn z2_witness(&self) -> Option<Z2Witness> {
        let square = *self.empty_squares().first()?;
        let ([a, c], [b, d]) = square.diagonals();
        let first = self.reduce(&[a as Generator, c as Generator]).ok()?;
        let second = self.reduce(&[b as Generator, d as Generator]).ok()?;
        Some(Z2Witness { square, first, second })
    }
}

pub struct WordDisplay<'a> {
    nerve: &'a NerveGraph,
    word: &'a ReducedWord,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            write!(f, "e")
        } else {
            write!(f, "{}", self.nerve.format(self.word))
        }
    }
}

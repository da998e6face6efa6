//! The basic construction over cone chambers.
//!
//! The chamber is the cone over the barycentric subdivision `sd(T)`. The
//! mirror `X_v` is the subcomplex of `sd(T)` spanned by barycenters of
//! simplices containing `v`. Copies of the chamber indexed by group elements
//! are glued by `(g, c) ~ (gu, c)` for `u` in the special subgroup generated
//! by the mirrors through the cell `c`.

mod assemble;
mod injectivity;
mod quotient;
mod region;
mod tiles;

use std::collections::BTreeSet;

use num_rational::Rational64;
use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex, Subcomplex, Subdivision};
use crate::coxeter::{CoxeterError, Generator, NerveGraph, ReducedWord};

pub use injectivity::h1_injective;
pub use quotient::QuotientComplex;
pub use region::{AttachRegion, CertificateStatus, DiskCertificate};
pub use tiles::{Tile, TileComplex, TileEdge, TruncationGuards};

#[derive(Debug, Error, PartialEq)]
pub enum DavisError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("attach regions are defined for nontrivial words only")]
    IdentityWord,
    #[error("{what} guard exceeded: need {needed}, limit {limit}")]
    GuardExceeded { what: &'static str, needed: usize, limit: usize },
    #[error("quotient Euler characteristic {0} is not an integer")]
    NonIntegralEuler(Rational64),
}

/// Cone over `sd(T)` with its mirror structure.
#[derive(Clone, Debug)]
pub struct ConeChamber {
    base: SimplicialComplex,
    nerve: NerveGraph,
    subdivision: Subdivision,
    cone: SimplicialComplex,
    mirrors: Vec<BTreeSet<Simplex>>,
}

impl ConeChamber {
    pub fn new(base: &SimplicialComplex) -> Self {
        let subdivision = base.barycentric();
        let sd = &subdivision.complex;
        let mut apex = String::from("*");
        while sd.vertex_index(&apex).is_some() {
            apex.push('\'');
        }
        let cone = sd.cone(&apex);
        let mut mirrors = vec![BTreeSet::new(); base.vertex_count()];
        for layer in sd.simplices_by_dim() {
            for c in layer {
                // Carriers along a chain are nested; the first is the smallest.
                for &v in &subdivision.carriers[c[0]] {
                    mirrors[v].insert(c.clone());
                }
            }
        }
        ConeChamber { base: base.clone(), nerve: NerveGraph::from_complex(base), subdivision, cone, mirrors }
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn nerve(&self) -> &NerveGraph {
        &self.nerve
    }

    /// The boundary `sd(T)`.
    pub fn boundary(&self) -> &SimplicialComplex {
        &self.subdivision.complex
    }

    /// The carrier in `T` of each vertex of `sd(T)`.
    pub fn carriers(&self) -> &[Simplex] {
        &self.subdivision.carriers
    }

    /// The whole chamber. Its vertices are those of `sd(T)` followed by the apex.
    pub fn cone(&self) -> &SimplicialComplex {
        &self.cone
    }

    pub fn apex(&self) -> usize {
        self.cone.vertex_count() - 1
    }

    pub fn mirror_count(&self) -> usize {
        self.mirrors.len()
    }

    /// `X_v` as a subcomplex of `sd(T)`.
    pub fn mirror(&self, v: Generator) -> Subcomplex<'_> {
        Subcomplex::generated_by(self.boundary(), self.mirrors[v as usize].iter().cloned()).expect("mirror lies in sd(T)")
    }

    /// Mirrors containing the cone simplex `c`: none if `c` contains the apex,
    /// otherwise the vertices of the smallest carrier along the chain.
    pub fn cell_mirrors(&self, c: &[usize]) -> &[usize] {
        if c.is_empty() || c.contains(&self.apex()) {
            &[]
        } else {
            &self.subdivision.carriers[c[0]]
        }
    }

    /// `Σ (-1)^dim c / 2^{#mirrors(c)}` over the cells of the chamber.
    pub fn orbifold_euler(&self) -> Rational64 {
        let mut total = Rational64::from_integer(0);
        for (k, layer) in self.cone.simplices_by_dim().iter().enumerate() {
            for c in layer {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                total += Rational64::new(sign, 1i64 << self.cell_mirrors(c).len());
            }
        }
        total
    }

    /// Euler characteristic of the quotient by the commutator subgroup,
    /// `2^|V|` times the orbifold Euler characteristic.
    pub fn quotient_euler(&self) -> Result<i64, DavisError> {
        let n = self.mirror_count();
        assert!(n < 62, "index 2^{n} does not fit");
        let chi = self.orbifold_euler() * Rational64::from_integer(1i64 << n);
        if chi.is_integer() {
            Ok(chi.to_integer())
        } else {
            Err(DavisError::NonIntegralEuler(chi))
        }
    }

    /// Shortest element of the coset `g·W_c`: strip every descent of `g`
    /// that is a mirror of `c`.
    pub(crate) fn coset_minimum(&self, g: &ReducedWord, mirrors: &[usize]) -> ReducedWord {
        let mut g = g.clone();
        loop {
            let descents = self.nerve.descent_set(&g).expect("word over the chamber's nerve");
            let Some(&s) = mirrors.iter().find(|&&s| descents.contains(s as Generator)) else {
                return g;
            };
            g = self.nerve.multiply_generator(&g, s as Generator).expect("generator in range");
        }
    }
}

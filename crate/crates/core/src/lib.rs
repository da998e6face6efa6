//! Combinatorial toolkit for the reflection group trick: flag and
//! flag-no-square simplicial complexes, right-angled Coxeter groups, truncations
//! and finite quotients of the Davis complex over cone chambers, integral
//! homology, free products of `Z²` factors, and the adjunction genus arithmetic
//! used to tell the resulting manifolds apart.

pub mod complex;
pub mod coxeter;
pub mod davis;
pub mod homology;
pub mod homology_model;
pub mod obstruction;

pub use complex::{validate_complex, ComplexError, RawComplex, SimplicialComplex, Subcomplex};
pub use homology::{ChainComplex, DegreeGroup, HomologyProfile, SparseMatrix};
pub use coxeter::{CoxeterError, DescentSet, Generator, NerveGraph, ReducedWord};
pub use davis::{ConeChamber, DavisError, QuotientComplex, TileComplex};

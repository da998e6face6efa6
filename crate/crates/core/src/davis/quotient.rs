//! The quotient of the Davis complex by the commutator subgroup `W₀`.
//!
//! `W₀` is the kernel of the parity map `W → (Z/2)^V`, so its left cosets
//! are parity vectors `ε`. The cell `(g, c)` maps to `(ε(g) + span(mirrors(c)), c)`;
//! the representative clears the mirror bits of `ε`.

use serde_json::Value;

use super::assemble::{assemble, boundary_json};
use super::{ConeChamber, DavisError};
use crate::homology::{ChainComplex, HomologyProfile};

#[derive(Clone, Debug)]
pub struct QuotientComplex {
    generators: usize,
    cells: Vec<Vec<(u64, usize)>>,
    chain: ChainComplex,
}

impl QuotientComplex {
    /// One chamber per coset of `W₀`, glued by the projected relation. Fails if
    /// `2^|V|` chambers of the chamber's size would exceed `max_cells`.
    pub fn build(chamber: &ConeChamber, max_cells: usize) -> Result<Self, DavisError> {
        let n = chamber.mirror_count();
        let per_chamber = chamber.cone().simplex_count();
        let needed = 1usize.checked_shl(n as u32).and_then(|c| c.checked_mul(per_chamber)).filter(|_| n < 63);
        match needed {
            Some(needed) if needed <= max_cells => {}
            _ => return Err(DavisError::GuardExceeded { what: "cell", needed: needed.unwrap_or(usize::MAX), limit: max_cells }),
        }
        let asm = assemble(chamber, 1 << n, max_cells, |eps, c| {
            let mask = chamber.cell_mirrors(c).iter().fold(0u64, |m, &v| m | 1 << v);
            eps as u64 & !mask
        })?;
        Ok(QuotientComplex { generators: n, cells: asm.cells, chain: asm.chain })
    }

    /// Number of chambers, the index `2^|V|`.
    pub fn chamber_count(&self) -> usize {
        1 << self.generators
    }

    /// Cells of dimension `d` as (parity representative, chamber simplex index).
    pub fn cells(&self, d: usize) -> &[(u64, usize)] {
        &self.cells[d]
    }

    pub fn chain_complex(&self) -> &ChainComplex {
        &self.chain
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.chain.euler_characteristic()
    }

    pub fn homology(&self) -> HomologyProfile {
        self.chain.homology()
    }

    pub fn boundary_json(&self) -> Value {
        boundary_json(&self.chain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::catalog;

    #[test]
    fn square_gives_torus() {
        let ch = ConeChamber::new(&catalog::cycle(4));
        let q = QuotientComplex::build(&ch, 100_000).unwrap();
        assert_eq!(q.chamber_count(), 16);
        assert_eq!(q.euler_characteristic(), 0);
        assert_eq!(q.homology().ranks(), vec![1, 2, 1]);
    }

    #[test]
    fn single_edge_gives_disk() {
        // χ = 4 · (1 - 2/2 + 1/4) = 1.
        let ch = ConeChamber::new(&catalog::simplex(1));
        let q = QuotientComplex::build(&ch, 1000).unwrap();
        assert_eq!(q.chamber_count(), 4);
        assert_eq!(q.euler_characteristic(), ch.quotient_euler().unwrap());
        assert_eq!(q.homology(), HomologyProfile::point());
    }

    #[test]
    fn guard() {
        let ch = ConeChamber::new(&catalog::cycle(5));
        assert!(matches!(QuotientComplex::build(&ch, 100), Err(DavisError::GuardExceeded { .. })));
    }
}

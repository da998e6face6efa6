//! Abelianization `W → (Z/2)^V` and the commutator subgroup `W₀`.

use std::ops::Add;

use serde::Serialize;

use super::{CoxeterError, NerveGraph, ReducedWord};

/// Parity of each generator's letter count. The defining relations preserve
/// these parities, so this is a homomorphism onto `(Z/2)^V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ParityVector(pub Vec<bool>);

impl ParityVector {
    pub fn zero(n: usize) -> Self {
        ParityVector(vec![false; n])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| !b)
    }

    /// Bitmask form, for at most 64 generators.
    pub fn to_mask(&self) -> u64 {
        assert!(self.0.len() <= 64);
        self.0.iter().enumerate().fold(0, |m, (i, &b)| if b { m | (1 << i) } else { m })
    }
}

impl Add for &ParityVector {
    type Output = ParityVector;

    fn add(self, rhs: &ParityVector) -> ParityVector {
        assert_eq!(self.0.len(), rhs.0.len());
        ParityVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a ^ b).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsionScope {
    /// Every element of the ball.
    Full,
    /// Only elements of the commutator subgroup `W₀`.
    Commutator,
}

/// Result of scanning a ball for nontrivial involutions. An empty violation
/// list certifies torsion-freeness up to the scanned radius only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionScan {
    pub radius: usize,
    pub scope: TorsionScope,
    pub elements_checked: usize,
    pub violations: Vec<ReducedWord>,
}

impl TorsionScan {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl NerveGraph {
    pub fn abelianization_vector(&self, w: &ReducedWord) -> ParityVector {
        let mut v = ParityVector::zero(self.generator_count());
        for &s in w.letters() {
            v.0[s as usize] ^= true;
        }
        v
    }

    pub fn in_commutator_subgroup(&self, w: &ReducedWord) -> bool {
        self.abelianization_vector(w).is_zero()
    }

    /// `[W : W₀] = 2^|V|`, reported as the exponent.
    pub fn commutator_index_log2(&self) -> usize {
        self.generator_count()
    }

    /// Torsion in a right-angled Coxeter group is conjugate into a finite
    /// special subgroup, hence consists of involutions; this lists the
    /// nontrivial elements `w` of the ball (restricted to `scope`) with `w² = e`.
    pub fn torsion_scan(&self, radius: usize, scope: TorsionScope, max_elements: usize) -> Result<TorsionScan, CoxeterError> {
        let ball = self.enumerate_ball(radius, max_elements)?;
        let mut checked = 0;
        let mut violations = Vec::new();
        for w in ball.iter().skip(1) {
            if scope == TorsionScope::Commutator && !self.in_commutator_subgroup(w) {
                continue;
            }
            checked += 1;
            if self.multiply(w, w)?.is_identity() {
                violations.push(w.clone());
            }
        }
        Ok(TorsionScan { radius, scope, elements_checked: checked, violations })
    }
}

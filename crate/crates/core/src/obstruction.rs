//! Genus arithmetic: Chern class evaluation from Legendrian handle data, the
//! adjunction lower bound, and its behaviour under boundary sums.
//!
//! The analytic hypotheses behind the adjunction inequality are not checked;
//! callers assert them through the `applicable` flag.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("curve {0}: framing {1} differs from tb - 1 = {2}")]
    SteinViolated(&'static str, i64, i64),
    #[error("the multiple k must be nonzero")]
    ZeroMultiple,
    #[error("the adjunction inequality was not asserted to apply")]
    NotApplicable,
    #[error("projection pattern has {got} entries for {expected} summands")]
    ProjectionMismatch { expected: usize, got: usize },
    #[error("the class projects to zero in every summand")]
    NotEssential,
}

/// Thurston–Bennequin number, rotation number and framing of an attaching curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegendrianCurve {
    pub tb: i64,
    pub r: i64,
    pub framing: i64,
}

impl LegendrianCurve {
    /// A curve with the Stein framing `tb - 1`.
    pub fn stein(tb: i64, r: i64) -> Self {
        LegendrianCurve { tb, r, framing: tb - 1 }
    }

    pub fn satisfies_stein(&self) -> bool {
        self.framing == self.tb - 1
    }

    fn check(&self, name: &'static str) -> Result<(), ObstructionError> {
        if self.satisfies_stein() {
            Ok(())
        } else {
            Err(ObstructionError::SteinViolated(name, self.framing, self.tb - 1))
        }
    }
}

/// Which difference of the two handles the class denotes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// `α = [B] - [G]`.
    #[default]
    Standard,
    /// `α = [G] - [B]`.
    Reversed,
}

/// `⟨c₁, α⟩ = r(B) - r(G)` (negated for the reversed class).
pub fn chern_evaluation(b: &LegendrianCurve, g: &LegendrianCurve, orientation: Orientation) -> Result<i64, ObstructionError> {
    b.check("B")?;
    g.check("G")?;
    let d = b.r - g.r;
    Ok(match orientation {
        Orientation::Standard => d,
        Orientation::Reversed => -d,
    })
}

/// A class `k·α` with `⟨c₁, α⟩ = c1_eval` and `α·α = self_int`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionInput {
    pub c1_eval: i64,
    pub self_int: i64,
    pub k: i64,
    /// Caller's assertion that the inequality applies (Stein, self-intersection ≥ 0).
    pub applicable: bool,
}

/// Smallest `g` with `2g - 2 ≥ |k·c1| + k²·self_int`.
pub fn adjunction_genus_bound(input: &AdjunctionInput) -> Result<i64, ObstructionError> {
    if input.k == 0 {
        return Err(ObstructionError::ZeroMultiple);
    }
    if !input.applicable {
        return Err(ObstructionError::NotApplicable);
    }
    let rhs = (input.k * input.c1_eval).abs() + input.k * input.k * input.self_int;
    Ok(((rhs + 2 + 1).div_euclid(2)).max(0))
}

/// A boundary summand with the genus bound for essential surfaces in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub name: String,
    pub genus_bound: i64,
    /// Orientation-reversed copy; the bound is unchanged.
    pub reversed: bool,
}

/// Genus bound for a surface in the boundary sum whose class projects
/// nontrivially exactly to the summands flagged in `projection`: the least
/// bound among those summands.
pub fn boundary_sum_genus_bound(summands: &[Summand], projection: &[bool]) -> Result<i64, ObstructionError> {
    if summands.len() != projection.len() {
        return Err(ObstructionError::ProjectionMismatch { expected: summands.len(), got: projection.len() });
    }
    summands
        .iter()
        .zip(projection)
        .filter(|(_, &p)| p)
        .map(|(s, _)| s.genus_bound)
        .min()
        .ok_or(ObstructionError::NotEssential)
}

/// Homological data of a chamber for genus bounds: `H_2 = Z·α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusProfile {
    pub name: String,
    pub c1_eval: i64,
    pub self_int: i64,
    /// `α` is represented by an embedded torus.
    pub torus_representable: bool,
}

impl GenusProfile {
    /// The Stein chamber: handle curves with `tb = 1` and rotation numbers 1 and 3.
    pub fn stein_chamber() -> Self {
        let c1_eval = chern_evaluation(&LegendrianCurve::stein(1, 3), &LegendrianCurve::stein(1, 1), Orientation::Standard)
            .expect("Stein framings");
        GenusProfile { name: "X".into(), c1_eval, self_int: 0, torus_representable: false }
    }

    /// The twisted chamber, whose generator is an embedded torus; the
    /// adjunction bound degenerates to 1 and is realized.
    pub fn torus_chamber() -> Self {
        GenusProfile { name: "X'".into(), c1_eval: 0, self_int: 0, torus_representable: true }
    }

    /// Genus bound for essential surfaces representing `k·α`.
    pub fn genus_bound(&self, k: i64) -> Result<i64, ObstructionError> {
        adjunction_genus_bound(&AdjunctionInput { c1_eval: self.c1_eval, self_int: self.self_int, k, applicable: true })
    }

    /// Least bound over all nonzero multiples (attained at `|k| = 1`).
    pub fn summand(&self, reversed: bool) -> Summand {
        Summand { name: self.name.clone(), genus_bound: self.genus_bound(1).expect("k = 1"), reversed }
    }
}

/// The `m`-th member of the clasped family, side by side with the claim made
/// for it. The curve `B` is modelled with rotation number `3 + m`, `tb = 1`
/// and Stein framing; only the shift of the Chern evaluation by `m` is used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyClaim {
    pub m: i64,
    pub c1_eval: i64,
    /// Adjunction bound at `k = 1`: `⌈(m + 4) / 2⌉`.
    pub adjunction_bound: i64,
    /// The claim excludes genus `≤ 2 + m`, i.e. asserts `g ≥ 3 + m`.
    pub claimed_excluded_genus: i64,
    pub claimed_bound: i64,
    /// Whether the adjunction arithmetic alone reaches the claimed bound.
    pub derivable: bool,
}

pub fn family_claim(m: i64) -> Result<FamilyClaim, ObstructionError> {
    assert!(m >= 0, "family index must be non-negative");
    let c1_eval = chern_evaluation(&LegendrianCurve::stein(1, 3 + m), &LegendrianCurve::stein(1, 1), Orientation::Standard)?;
    let adjunction_bound = adjunction_genus_bound(&AdjunctionInput { c1_eval, self_int: 0, k: 1, applicable: true })?;
    let claimed_excluded_genus = 2 + m;
    let claimed_bound = claimed_excluded_genus + 1;
    Ok(FamilyClaim { m, c1_eval, adjunction_bound, claimed_excluded_genus, claimed_bound, derivable: adjunction_bound >= claimed_bound })
}

//! Topology carried outside the chambers: declared chamber homology, the
//! homology of boundary sums, and free products of `Z²` factors indexed by
//! group elements.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::coxeter::{NerveGraph, ReducedWord};
use crate::homology::{DegreeGroup, HomologyProfile};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("chamber profile must be connected (degree-0 rank 1)")]
    DisconnectedChamber,
    #[error("a truncation needs at least one chamber")]
    EmptyTruncation,
    #[error("the free-product law needs at least two factors")]
    TooFewFactors,
    #[error("malformed free-product word: {0}")]
    Malformed(String),
}

/// Homology of an abstract chamber, and whether its `H_2` generator is
/// represented by an embedded torus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberHomologyProfile {
    pub profile: HomologyProfile,
    pub torus_representable: bool,
}

impl ChamberHomologyProfile {
    pub fn new(profile: HomologyProfile, torus_representable: bool) -> Result<Self, ModelError> {
        if profile.rank(0) != 1 || !profile.torsion(0).is_empty() {
            return Err(ModelError::DisconnectedChamber);
        }
        Ok(ChamberHomologyProfile { profile, torus_representable })
    }

    /// A chamber homotopy equivalent to the torus.
    pub fn torus(torus_representable: bool) -> Self {
        ChamberHomologyProfile { profile: HomologyProfile::from_ranks(&[1, 2, 1]), torus_representable }
    }

    pub fn contractible() -> Self {
        ChamberHomologyProfile { profile: HomologyProfile::point(), torus_representable: false }
    }
}

/// Homology of the boundary connected sum of `n` copies of a connected
/// chamber: one component, and `n` copies of every higher group.
pub fn truncation_homology(profile: &HomologyProfile, n: usize) -> Result<HomologyProfile, ModelError> {
    if n == 0 {
        return Err(ModelError::EmptyTruncation);
    }
    if profile.rank(0) != 1 {
        return Err(ModelError::DisconnectedChamber);
    }
    let mut degrees = vec![DegreeGroup::free(1)];
    for g in profile.degrees().iter().skip(1) {
        let torsion = g.torsion.iter().flat_map(|&t| std::iter::repeat(t).take(n)).collect();
        degrees.push(DegreeGroup { rank: g.rank * n, torsion });
    }
    Ok(HomologyProfile::new(degrees))
}

/// A nonzero element of the `Z²` factor labelled `factor`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub factor: ReducedWord,
    pub value: (i64, i64),
}

impl Syllable {
    pub fn new(factor: ReducedWord, value: (i64, i64)) -> Self {
        Syllable { factor, value }
    }

    fn inverse(&self) -> Syllable {
        Syllable { factor: self.factor.clone(), value: (-self.value.0, -self.value.1) }
    }
}

/// Element of a free product of copies of `Z²`, in normal form: no zero
/// syllables and no two neighbours from the same factor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeProductWord {
    syllables: Vec<Syllable>,
}

impl FreeProductWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn syllable(factor: ReducedWord, value: (i64, i64)) -> Self {
        fp_normal_form(vec![Syllable::new(factor, value)])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn syllable_len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn multiply(&self, other: &FreeProductWord) -> FreeProductWord {
        let mut out = self.syllables.clone();
        for s in &other.syllables {
            push_syllable(&mut out, s.clone());
        }
        FreeProductWord { syllables: out }
    }

    pub fn inverse(&self) -> FreeProductWord {
        FreeProductWord { syllables: self.syllables.iter().rev().map(Syllable::inverse).collect() }
    }

    pub fn conjugate_by(&self, g: &FreeProductWord) -> FreeProductWord {
        g.multiply(self).multiply(&g.inverse())
    }

    pub fn pow(&self, k: u32) -> FreeProductWord {
        (0..k).fold(FreeProductWord::identity(), |acc, _| acc.multiply(self))
    }

    /// `(c, r)` with `self = c·r·c⁻¹` and `r` cyclically reduced: its first
    /// and last syllables lie in different factors unless `r` has at most one.
    pub fn cyclic_reduction(&self) -> (FreeProductWord, FreeProductWord) {
        let mut conj = Vec::new();
        let mut core = self.syllables.clone();
        while core.len() >= 2 && core[0].factor == core[core.len() - 1].factor {
            let first = core.remove(0);
            let last = core.pop().unwrap();
            let merged = Syllable { factor: first.factor.clone(), value: (first.value.0 + last.value.0, first.value.1 + last.value.1) };
            conj.push(first);
            if merged.value != (0, 0) {
                core.push(merged);
            }
        }
        (fp_normal_form(conj), FreeProductWord { syllables: core })
    }

    /// JSON list of `[factor label, [x, y]]` entries.
    pub fn to_json(&self, nerve: &NerveGraph) -> Value {
        Value::Array(self.syllables.iter().map(|s| json!([nerve.format(&s.factor), [s.value.0, s.value.1]])).collect())
    }

    pub fn from_json(value: &Value, nerve: &NerveGraph) -> Result<Self, ModelError> {
        let bad = |m: &str| ModelError::Malformed(m.to_string());
        let items = value.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut syllables = Vec::with_capacity(items.len());
        for item in items {
            let label = item.get(0).and_then(Value::as_str).ok_or_else(|| bad("expected a factor label"))?;
            let factor = nerve.parse(label).map_err(|e| ModelError::Malformed(e.to_string()))?;
            let pair = item.get(1).and_then(Value::as_array).ok_or_else(|| bad("expected a pair"))?;
            let x = pair.first().and_then(Value::as_i64).ok_or_else(|| bad("expected an integer"))?;
            let y = pair.get(1).and_then(Value::as_i64).ok_or_else(|| bad("expected an integer"))?;
            syllables.push(Syllable::new(factor, (x, y)));
        }
        Ok(fp_normal_form(syllables))
    }
}

fn push_syllable(out: &mut Vec<Syllable>, s: Syllable) {
    if s.value == (0, 0) {
        return;
    }
    match out.last_mut() {
        Some(last) if last.factor == s.factor => {
            last.value = (last.value.0 + s.value.0, last.value.1 + s.value.1);
            if last.value == (0, 0) {
                out.pop();
            }
        }
        _ => out.push(s),
    }
}

/// Merges same-factor neighbours and drops zeros, cascading as merges cancel.
pub fn fp_normal_form(syllables: Vec<Syllable>) -> FreeProductWord {
    let mut out = Vec::with_capacity(syllables.len());
    for s in syllables {
        push_syllable(&mut out, s);
    }
    FreeProductWord { syllables: out }
}

pub fn fp_commute(a: &FreeProductWord, b: &FreeProductWord) -> bool {
    a.multiply(b) == b.multiply(a)
}

/// The factor containing a conjugate of `w`, if any. The identity lies in
/// every factor and reports none.
pub fn fp_conjugate_into_factor(w: &FreeProductWord) -> Option<ReducedWord> {
    let (_, core) = w.cyclic_reduction();
    match core.syllables.as_slice() {
        [s] => Some(s.factor.clone()),
        _ => None,
    }
}

/// Outcome of the randomized free-product law checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Z2FactorReport {
    pub seed: u64,
    pub factors: usize,
    pub commuting_pairs: usize,
    /// Conjugated same-factor pairs that failed to commute or to land in a common factor.
    pub commuting_violations: usize,
    pub cross_pairs: usize,
    /// Pairs from different factors (possibly conjugated) that commuted anyway.
    pub cross_violations: usize,
    pub kurosh_words: usize,
    /// Words outside every conjugate factor whose powers did not grow.
    pub kurosh_violations: usize,
}

impl Z2FactorReport {
    pub fn is_clean(&self) -> bool {
        self.commuting_violations == 0 && self.cross_violations == 0 && self.kurosh_violations == 0
    }
}

const MAX_POWER: u32 = 10;

/// Randomized check of the law that commuting pairs in a free product of
/// `Z²`'s lie in a common conjugate factor. Draws `samples` commuting pairs
/// `g·x·g⁻¹, g·y·g⁻¹` from one factor, `samples` pairs from two different
/// factors, and `samples` random words for the power-growth check.
pub fn z2_in_factor_property(samples: usize, seed: u64, factors: &[ReducedWord]) -> Result<Z2FactorReport, ModelError> {
    if factors.len() < 2 {
        return Err(ModelError::TooFewFactors);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Z2FactorReport {
        seed,
        factors: factors.len(),
        commuting_pairs: 0,
        commuting_violations: 0,
        cross_pairs: 0,
        cross_violations: 0,
        kurosh_words: 0,
        kurosh_violations: 0,
    };

    for _ in 0..samples {
        let f = factors.choose(&mut rng).unwrap();
        let g = random_word(&mut rng, factors, 4);
        let a = FreeProductWord::syllable(f.clone(), nonzero_pair(&mut rng)).conjugate_by(&g);
        let b = FreeProductWord::syllable(f.clone(), nonzero_pair(&mut rng)).conjugate_by(&g);
        report.commuting_pairs += 1;
        let same_factor = fp_conjugate_into_factor(&a).as_ref() == Some(f) && fp_conjugate_into_factor(&b).as_ref() == Some(f);
        if !(fp_commute(&a, &b) && fp_commute(&b, &a) && same_factor) {
            report.commuting_violations += 1;
        }
    }

    for i in 0..samples {
        let mut pick = factors.choose_multiple(&mut rng, 2);
        let (f1, f2) = (pick.next().unwrap().clone(), pick.next().unwrap().clone());
        let mut a = FreeProductWord::syllable(f1, nonzero_pair(&mut rng));
        let mut b = FreeProductWord::syllable(f2, nonzero_pair(&mut rng));
        // Half the pairs are bare syllables, half are conjugated by a common word.
        if i % 2 == 1 {
            let g = random_word(&mut rng, factors, 4);
            a = a.conjugate_by(&g);
            b = b.conjugate_by(&g);
        }
        report.cross_pairs += 1;
        if fp_commute(&a, &b) {
            report.cross_violations += 1;
        }
    }

    for _ in 0..samples {
        let w = random_word(&mut rng, factors, 6);
        if w.is_identity() || fp_conjugate_into_factor(&w).is_some() {
            continue;
        }
        report.kurosh_words += 1;
        let lens: Vec<usize> = (1..=MAX_POWER).map(|k| w.pow(k).syllable_len()).collect();
        if !lens.windows(2).all(|p| p[0] < p[1]) {
            report.kurosh_violations += 1;
        }
    }
    Ok(report)
}

fn nonzero_pair(rng: &mut ChaCha8Rng) -> (i64, i64) {
    loop {
        let p = (rng.gen_range(-5..=5), rng.gen_range(-5..=5));
        if p != (0, 0) {
            return p;
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, factors: &[ReducedWord], max_len: usize) -> FreeProductWord {
    let len = rng.gen_range(0..=max_len);
    let syllables = (0..len).map(|_| Syllable::new(factors.choose(rng).unwrap().clone(), nonzero_pair(rng))).collect();
    fp_normal_form(syllables)
}

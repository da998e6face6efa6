//! Balls in the Cayley graph, generated directly in normal form.
//!
//! Shortlex normal forms are prefix-closed, so every element of length
//! `k + 1` is `u·s` for exactly one normal word `u` of length `k`. Appending
//! `s` to a normal word `u` gives a normal word of greater length iff, in the
//! maximal suffix of `u` commuting with `s`, `s` does not occur (no
//! cancellation) and every letter is smaller than `s` (no earlier position).

use std::fmt::Write;

use super::{CoxeterError, Generator, NerveGraph, ReducedWord};

#[derive(Debug, PartialEq, Eq)]
enum Extension {
    Shorter,
    Longer { normal: bool },
}

impl NerveGraph {
    fn extend(&self, word: &[Generator], s: Generator) -> Extension {
        let mut normal = true;
        for &t in word.iter().rev() {
            if t == s {
                return Extension::Shorter;
            }
            if !self.commute(t, s) {
                break;
            }
            if t > s {
                normal = false;
            }
        }
        Extension::Longer { normal }
    }

    /// Normal words that extend `word` by one letter, in increasing order.
    fn children<'a>(&'a self, word: &'a [Generator]) -> impl Iterator<Item = Generator> + 'a {
        self.generators().filter(move |&s| self.extend(word, s) == Extension::Longer { normal: true })
    }

    /// All elements of length `≤ radius` in chamber order: by length, then
    /// lexicographically. The identity comes first.
    pub fn enumerate_ball(&self, radius: usize, max_elements: usize) -> Result<Vec<ReducedWord>, CoxeterError> {
        let mut ball = vec![self.identity()];
        let mut sphere_start = 0;
        for r in 1..=radius {
            let sphere_end = ball.len();
            for i in sphere_start..sphere_end {
                let base = ball[i].letters.clone();
                for s in self.children(&base).collect::<Vec<_>>() {
                    if ball.len() >= max_elements {
                        return Err(CoxeterError::GuardExceeded { radius: r, limit: max_elements });
                    }
                    let mut letters = base.clone();
                    letters.push(s);
                    ball.push(ReducedWord { nerve: self.fingerprint, letters });
                }
            }
            sphere_start = sphere_end;
        }
        Ok(ball)
    }

    /// The first `count` elements in chamber order (fewer if the group is
    /// finite and smaller).
    pub fn chamber_order(&self, count: usize) -> Vec<ReducedWord> {
        let mut out = vec![self.identity()];
        let mut sphere_start = 0;
        while out.len() < count && sphere_start < out.len() {
            let sphere_end = out.len();
            for i in sphere_start..sphere_end {
                let base = out[i].letters.clone();
                for s in self.children(&base).collect::<Vec<_>>() {
                    if out.len() == count {
                        return out;
                    }
                    let mut letters = base.clone();
                    letters.push(s);
                    out.push(ReducedWord { nerve: self.fingerprint, letters });
                }
            }
            sphere_start = sphere_end;
        }
        out.truncate(count);
        out
    }

    /// Sphere sizes `|S_0|, …, |S_radius|`, counted by depth-first search
    /// without storing the ball. `max_elements` bounds the total count.
    pub fn growth_series(&self, radius: usize, max_elements: u64) -> Result<Vec<u64>, CoxeterError> {
        let mut counts = vec![0u64; radius + 1];
        let mut total = 0u64;
        let mut stack: Vec<Vec<Generator>> = vec![Vec::new()];
        while let Some(word) = stack.pop() {
            total += 1;
            if total > max_elements {
                return Err(CoxeterError::GuardExceeded { radius: word.len(), limit: max_elements as usize });
            }
            counts[word.len()] += 1;
            if word.len() < radius {
                for s in self.children(&word) {
                    let mut next = word.clone();
                    next.push(s);
                    stack.push(next);
                }
            }
        }
        Ok(counts)
    }
}

/// CSV dump of an ordered ball: `index,length,normal_form`.
pub fn ball_csv(nerve: &NerveGraph, ball: &[ReducedWord]) -> String {
    let mut out = String::from("index,length,normal_form\n");
    for (i, w) in ball.iter().enumerate() {
        writeln!(out, "{},{},{}", i + 1, w.len(), nerve.format(w)).unwrap();
    }
    out
}

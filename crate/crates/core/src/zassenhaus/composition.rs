use std::fmt;

use crate::error::{Error, Result};

/// Ordered tuple `(n_1, ..., n_p)` of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts `p`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `n_1 + ... + n_p`.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// All compositions of total weight `1..=max_weight` with at most
    /// `max_parts` parts, weight-major and lexicographic within a weight.
    pub fn enumerate(max_weight: usize, max_parts: Option<usize>) -> Vec<Composition> {
        let mut out = Vec::new();
        for w in 1..=max_weight {
            out.extend(Composition::of_weight(w, max_parts));
        }
        out
    }

    /// Compositions of exactly `weight` in lexicographic order.
    pub fn of_weight(weight: usize, max_parts: Option<usize>) -> Vec<Composition> {
        let cap = max_parts.unwrap_or(usize::MAX);
        let mut out = Vec::new();
        let mut scratch = Vec::new();
        fill(weight, cap, &mut scratch, &mut out);
        out
    }

    /// Compositions of `weight` with exactly `parts` parts, lexicographic.
    pub fn with_parts(weight: usize, parts: usize) -> Vec<Composition> {
        Composition::of_weight(weight, Some(parts))
            .into_iter()
            .filter(|c| c.len() == parts)
            .collect()
    }

    /// Number of compositions of weight `<= max_weight` and at most
    /// `max_parts` parts, without materialising them.
    pub fn count(max_weight: usize, max_parts: Option<usize>) -> u128 {
        let cap = max_parts.unwrap_or(max_weight);
        let mut total = 0u128;
        for m in 1..=max_weight {
            // C(m-1, p-1) compositions of m into p parts
            let mut binom = 1u128;
            for p in 1..=m.min(cap) {
                if p > 1 {
                    binom = binom * (m - p + 1) as u128 / (p - 1) as u128;
                }
                total += binom;
            }
        }
        total
    }
}

fn fill(remaining: usize, cap: usize, scratch: &mut Vec<usize>, out: &mut Vec<Composition>) {
    if remaining == 0 {
        out.push(Composition(scratch.clone()));
        return;
    }
    if scratch.len() == cap {
        return;
    }
    for first in 1..=remaining {
        scratch.push(first);
        fill(remaining - first, cap, scratch, out);
        scratch.pop();
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str(")")
    }
}

//! Explicit expansions of `e^{A+B}` as `T e^A` (right form) and `e^A T'`
//! (left form), where `T` and `T'` are sums over compositions of products
//! of the scaled nested commutators `script_b(n)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::composition::Composition;
use super::xmp::script_b_list;
use crate::error::{Error, Result};
use crate::freealg::{NCPoly, Rational};

/// Which side of `e^A` the explicit prefactor sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `e^{A+B} = (1 + sum c_n B_{n_p} ... B_{n_1}) e^A`
    Right,
    /// `e^{A+B} = e^A (1 + sum (-1)^{|n|-p} c_n B_{n_1} ... B_{n_p})`
    Left,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Truncation policy for an expansion: total weight at most
/// `max_total_degree`, and at most `max_factors` factors per product when
/// a cap is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionConfig {
    pub max_total_degree: usize,
    pub max_factors: Option<usize>,
    pub side: Side,
}

impl ExpansionConfig {
    pub fn new(max_total_degree: usize, max_factors: Option<usize>, side: Side) -> Result<Self> {
        if max_factors == Some(0) {
            return Err(Error::InvalidFactorCap);
        }
        Ok(ExpansionConfig {
            max_total_degree,
            max_factors,
            side,
        })
    }

    pub fn right(max_total_degree: usize) -> Self {
        ExpansionConfig {
            max_total_degree,
            max_factors: None,
            side: Side::Right,
        }
    }

    pub fn left(max_total_degree: usize) -> Self {
        ExpansionConfig {
            max_total_degree,
            max_factors: None,
            side: Side::Left,
        }
    }

    pub fn with_side(self, side: Side) -> Self {
        ExpansionConfig { side, ..self }
    }
}

/// One product term of an expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub composition: Composition,
    pub coefficient: Rational,
    pub side: Side,
}

impl ExpansionTerm {
    /// Factor indices from left to right as they appear in the product.
    pub fn factor_order(&self) -> Vec<usize> {
        factor_order(&self.composition, self.side)
    }
}

/// Right form multiplies `B_{n_p} ... B_{n_1}`, left form `B_{n_1} ... B_{n_p}`.
pub fn factor_order(c: &Composition, side: Side) -> Vec<usize> {
    match side {
        Side::Right => c.parts().iter().rev().copied().collect(),
        Side::Left => c.parts().to_vec(),
    }
}

/// `n_p ... n_1 / (n_p (n_p + n_{p-1}) ... (n_p + ... + n_1))`, with the
/// extra sign `(-1)^{(n_1 + ... + n_p) - p}` on the left side.
pub fn composition_coefficient(c: &Composition, side: Side) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut tail = 0usize;
    for &n in c.parts().iter().rev() {
        tail += n;
        num *= BigInt::from(n);
        den *= BigInt::from(tail);
    }
    let unsigned = Rational::new(num, den);
    match side {
        Side::Right => unsigned,
        Side::Left if (c.weight() - c.len()) % 2 == 1 => -unsigned,
        Side::Left => unsigned,
    }
}

/// Every term of the truncated expansion, weight-major then lexicographic
/// on the composition parts.
pub fn expansion_terms(cfg: &ExpansionConfig) -> Vec<ExpansionTerm> {
    Composition::enumerate(cfg.max_total_degree, cfg.max_factors)
        .into_iter()
        .map(|composition| ExpansionTerm {
            coefficient: composition_coefficient(&composition, cfg.side),
            composition,
            side: cfg.side,
        })
        .collect()
}

/// Sums `coefficient * factors[i_1] ... factors[i_p]` over the terms, using
/// `factors[n - 1]` for factor index `n`, plus the unit.
pub fn sum_terms(terms: &[ExpansionTerm], factors: &[NCPoly]) -> NCPoly {
    let mut out = NCPoly::one();
    for term in terms {
        let mut prod = NCPoly::one();
        for n in term.factor_order() {
            prod = &prod * &factors[n - 1];
        }
        out += &prod.scale(&term.coefficient);
    }
    out
}

/// The prefactor for either side, as a free-algebra polynomial.
pub fn expansion(cfg: &ExpansionConfig) -> NCPoly {
    let terms = expansion_terms(cfg);
    let factors = script_b_list(cfg.max_total_degree);
    sum_terms(&terms, &factors)
}

/// Prefactor `T` in `e^{A+B} = T e^A`, truncated per `cfg`.
pub fn right_expansion(cfg: &ExpansionConfig) -> Result<NCPoly> {
    if cfg.side != Side::Right {
        return Err(Error::SideMismatch { expected: "right" });
    }
    Ok(expansion(cfg))
}

/// Prefactor `T'` in `e^{A+B} = e^A T'`, truncated per `cfg`.
pub fn left_expansion(cfg: &ExpansionConfig) -> Result<NCPoly> {
    if cfg.side != Side::Left {
        return Err(Error::SideMismatch { expected: "left" });
    }
    Ok(expansion(cfg))
}

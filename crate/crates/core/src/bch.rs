//! Product expansions of `e^X e^Y`.
//!
//! Both expansions reuse the composition coefficients of the Zassenhaus
//! prefactor. The `X`-family builds on `(1/n!) (ad_Y)^{n-1} (X+Y)` with
//! signed coefficients in the right-hand factor order; the `Y`-family builds
//! on `(1/n!) (ad_X)^{n-1} (X+Y)` with positive coefficients in the
//! left-hand order. `X` is stored as generator `A` and `Y` as `B`.

use crate::error::{Error, Result};
use crate::freealg::{inv_factorial, rational, taylor_exp, Generator, NCPoly, Rational};
use crate::zassenhaus::{composition_coefficient, Composition, Side};

pub const X: Generator = Generator::A;
pub const Y: Generator = Generator::B;

pub fn x() -> NCPoly {
    NCPoly::generator(X)
}

pub fn y() -> NCPoly {
    NCPoly::generator(Y)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    ScriptX,
    ScriptY,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::ScriptX => "x",
            Family::ScriptY => "y",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BchTerm {
    pub composition: Composition,
    pub coefficient: Rational,
    pub family: Family,
}

impl BchTerm {
    /// Factor indices left to right: `X_{n_p} ... X_{n_1}` for the
    /// `X`-family and `Y_{n_1} ... Y_{n_p}` for the `Y`-family.
    pub fn factor_order(&self) -> Vec<usize> {
        match self.family {
            Family::ScriptX => self.composition.parts().iter().rev().copied().collect(),
            Family::ScriptY => self.composition.parts().to_vec(),
        }
    }
}

fn check_positive(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::IndexOutOfRange {
            name: "n",
            value: n,
            expected: ">= 1".into(),
        });
    }
    Ok(())
}

/// `(1/n!) (ad_Y)^{n-1} (X+Y)`.
pub fn script_x(n: usize) -> Result<NCPoly> {
    check_positive(n)?;
    Ok(y().ad_power(&(x() + y()), n - 1).scale(&inv_factorial(n)))
}

/// `(1/n!) (ad_X)^{n-1} (X+Y)`.
pub fn script_y(n: usize) -> Result<NCPoly> {
    check_positive(n)?;
    Ok(x().ad_power(&(x() + y()), n - 1).scale(&inv_factorial(n)))
}

fn family_list(family: Family, n: usize) -> Vec<NCPoly> {
    let (ad, mut nested) = match family {
        Family::ScriptX => (y(), x() + y()),
        Family::ScriptY => (x(), x() + y()),
    };
    let mut out = Vec::with_capacity(n);
    for m in 1..=n {
        if m > 1 {
            nested = ad.commutator(&nested);
        }
        out.push(nested.scale(&inv_factorial(m)));
    }
    out
}

/// Signed `(-1)^{|n|-p}` on the `X`-family; plain on the `Y`-family.
pub fn bch_coefficient(c: &Composition, family: Family) -> Rational {
    match family {
        Family::ScriptX => composition_coefficient(c, Side::Left),
        Family::ScriptY => composition_coefficient(c, Side::Right),
    }
}

pub fn bch_terms(family: Family, max_degree: usize) -> Vec<BchTerm> {
    Composition::enumerate(max_degree, None)
        .into_iter()
        .map(|composition| BchTerm {
            coefficient: bch_coefficient(&composition, family),
            composition,
            family,
        })
        .collect()
}

fn product_expansion(family: Family, max_degree: usize) -> NCPoly {
    let factors = family_list(family, max_degree);
    let mut out = NCPoly::one();
    for term in bch_terms(family, max_degree) {
        let mut prod = NCPoly::one();
        for n in term.factor_order() {
            prod = &prod * &factors[n - 1];
        }
        out += &prod.scale(&term.coefficient);
    }
    out
}

/// `1 + sum (-1)^{|n|-p} c_n X_{n_p} ... X_{n_1}` through weight `max_degree`.
pub fn bch_product_x(max_degree: usize) -> NCPoly {
    product_expansion(Family::ScriptX, max_degree)
}

/// `1 + sum c_n Y_{n_1} ... Y_{n_p}` through weight `max_degree`.
pub fn bch_product_y(max_degree: usize) -> NCPoly {
    product_expansion(Family::ScriptY, max_degree)
}

/// Average of the two product expansions.
pub fn bch_symmetrized(max_degree: usize) -> NCPoly {
    (bch_product_x(max_degree) + bch_product_y(max_degree)).scale(&rational(1, 2))
}

/// Truncated Taylor product of `e^X e^Y`, the reference for all three.
pub fn taylor_product(max_degree: usize) -> NCPoly {
    taylor_exp(&x(), max_degree).mul_truncated(&taylor_exp(&y(), max_degree), max_degree)
}

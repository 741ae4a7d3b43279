//! Classical Zassenhaus factors extracted from truncated `t`-series.
//!
//! `e^{t(A+B)} = e^{tA} e^{tB} e^{t^2 Z_2} e^{t^3 Z_3} ...` and the
//! transposed ordering `e^{t(A+B)} = ... e^{t^3 W_3} e^{t^2 W_2} e^{tB} e^{tA}`.
//! Each factor is peeled off the residual series in turn; the lowest
//! surviving power of `t` carries the next one.

use super::expansion::Side;
use crate::error::{Error, Result};
use crate::freealg::{product, NCPoly, TSeries};

/// Factors `Z_2, ..., Z_{n_max}` together with the residual left after
/// stripping them.
#[derive(Debug, Clone)]
pub struct ClassicalZassenhaus {
    /// `factors[k]` is the factor of `t^{k+2}`.
    pub factors: Vec<NCPoly>,
    pub residual: TSeries,
    pub ordering: Side,
}

fn check_range(n_max: usize, truncation: usize) -> Result<()> {
    if n_max < 2 || n_max > truncation {
        return Err(Error::IndexOutOfRange {
            name: "n_max",
            value: n_max,
            expected: format!("2 <= n_max <= N = {truncation}"),
        });
    }
    Ok(())
}

fn exp_of(power: usize, p: NCPoly, truncation: usize) -> Result<TSeries> {
    TSeries::monomial(power, p, truncation).exp()
}

/// Runs the peeling procedure.
///
/// `Side::Right` is the ordering `e^{tA} e^{tB} prod e^{t^n Z_n}` (factors
/// accumulate to the right of `e^{tB}`); `Side::Left` is the transposed
/// ordering (factors accumulate to the left of `e^{tB} e^{tA}`).
pub fn classical_zassenhaus(
    n_max: usize,
    truncation: usize,
    ordering: Side,
) -> Result<ClassicalZassenhaus> {
    check_range(n_max, truncation)?;
    let n = truncation;
    let sum = exp_of(1, NCPoly::a() + NCPoly::b(), n)?;
    let minus_a = exp_of(1, -NCPoly::a(), n)?;
    let minus_b = exp_of(1, -NCPoly::b(), n)?;
    let mut residual = match ordering {
        Side::Right => product([&minus_b, &minus_a, &sum], n)?,
        Side::Left => product([&sum, &minus_a, &minus_b], n)?,
    };
    let mut factors = Vec::with_capacity(n_max - 1);
    for k in 2..=n_max {
        debug_assert!(residual.first_nonconstant_power().is_none_or(|j| j >= k));
        let z = residual.coeff(k).clone();
        let strip = exp_of(k, -&z, n)?;
        residual = match ordering {
            Side::Right => strip.mul(&residual)?,
            Side::Left => residual.mul(&strip)?,
        };
        factors.push(z);
    }
    Ok(ClassicalZassenhaus {
        factors,
        residual,
        ordering,
    })
}

/// `Z_2, ..., Z_{n_max}` for `e^{tA} e^{tB} prod_n e^{t^n Z_n}`.
pub fn classical_zassenhaus_terms(n_max: usize, truncation: usize) -> Result<Vec<NCPoly>> {
    Ok(classical_zassenhaus(n_max, truncation, Side::Right)?.factors)
}

/// `W_2, ..., W_{n_max}` for `(... e^{t^3 W_3} e^{t^2 W_2}) e^{tB} e^{tA}`.
pub fn classical_zassenhaus_transposed(n_max: usize, truncation: usize) -> Result<Vec<NCPoly>> {
    Ok(classical_zassenhaus(n_max, truncation, Side::Left)?.factors)
}

/// Rebuilds the ordered product from a factor list (`factors[0]` belongs
/// to `t^2`) at the given truncation.
pub fn rebuild_product(factors: &[NCPoly], truncation: usize, ordering: Side) -> Result<TSeries> {
    let n = truncation;
    let ea = exp_of(1, NCPoly::a(), n)?;
    let eb = exp_of(1, NCPoly::b(), n)?;
    let exps = factors
        .iter()
        .enumerate()
        .map(|(i, z)| exp_of(i + 2, z.clone(), n))
        .collect::<Result<Vec<_>>>()?;
    match ordering {
        Side::Right => product([&ea, &eb].into_iter().chain(exps.iter()), n),
        Side::Left => product(exps.iter().rev().chain([&eb, &ea]), n),
    }
}

/// `e^{t(A+B)}` at the given truncation.
pub fn exp_sum_series(truncation: usize) -> Result<TSeries> {
    exp_of(1, NCPoly::a() + NCPoly::b(), truncation)
}

//! Dense-matrix evaluation of the symbolic expansions.

mod expm;
mod fixtures;
mod matrix;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub use expm::expm;
pub use fixtures::{
    commuting_diagonal, random_assignment, random_symmetric_assignment, triangular_assignment,
    triangular_pair, FIXTURE_SEED,
};
pub use matrix::{Assignment, AssignmentJson, DenseMatrix, MatrixJson};

use crate::error::{Error, Result};
use crate::freealg::{Generator, NCPoly};
use crate::zassenhaus::{Composition, ExpansionConfig, Side};

/// Substitutes the assignment into `p`: words become matrix products and
/// the empty word becomes the identity.
pub fn evaluate(p: &NCPoly, a: &Assignment) -> DenseMatrix {
    let d = a.dim();
    let mut out = DenseMatrix::zeros(d);
    for (w, c) in p.terms() {
        let mut prod = DenseMatrix::identity(d);
        for &g in w.letters() {
            prod = match g {
                Generator::A => &prod * a.a(),
                Generator::B => &prod * a.b(),
            };
        }
        let c = c.to_f64().expect("rational converts to f64");
        out.add_scaled(&prod, c);
    }
    out
}

/// Matrices of `B_n = (ad_A)^{n-1} B / n!` for `n = 1..=count`.
fn scaled_commutators(a: &Assignment, count: usize) -> Vec<DenseMatrix> {
    let mut out = Vec::with_capacity(count);
    let mut nested = a.b().clone();
    let mut inv_fact = 1.0;
    for n in 1..=count {
        if n > 1 {
            nested = a.a().commutator(&nested);
            inv_fact /= n as f64;
        }
        out.push(nested.scale(inv_fact));
    }
    out
}

/// Numeric value of the truncated prefactor.
///
/// The composition sum is grouped by weight `m` and factor count `p`:
/// peeling off the innermost factor `B_{n_1}` with `n_1 = k` multiplies the
/// coefficient by `k/m`, so `T_{m,p} = sum_k (k/m) T_{m-k,p-1} B_k` on the
/// right side and `T_{m,p} = sum_k (k/m) (-1)^{k-1} B_k T_{m-k,p-1}` on the
/// left side, with `T_{0,0} = I`. This visits each composition exactly once
/// through shared partial products.
pub fn prefactor(a: &Assignment, cfg: &ExpansionConfig) -> DenseMatrix {
    let n = cfg.max_total_degree;
    let cap = cfg.max_factors.unwrap_or(n).min(n);
    let d = a.dim();
    let bs = scaled_commutators(a, n);
    // table[m][p], p <= cap
    let mut table: Vec<Vec<Option<DenseMatrix>>> = vec![vec![None; cap + 1]; n + 1];
    table[0][0] = Some(DenseMatrix::identity(d));
    let mut out = DenseMatrix::identity(d);
    for m in 1..=n {
        for p in 1..=m.min(cap) {
            let mut acc = DenseMatrix::zeros(d);
            for k in 1..=m - p + 1 {
                let Some(prev) = &table[m - k][p - 1] else {
                    continue;
                };
                let weight = k as f64 / m as f64;
                let (prod, sign) = match cfg.side {
                    Side::Right => (prev * &bs[k - 1], 1.0),
                    Side::Left => {
                        let s = if k % 2 == 0 { -1.0 } else { 1.0 };
                        (&bs[k - 1] * prev, s)
                    }
                };
                acc.add_scaled(&prod, sign * weight);
            }
            out.add_scaled(&acc, 1.0);
            table[m][p] = Some(acc);
        }
    }
    out
}

/// `T e^A` (right side) or `e^A T'` (left side) for the truncated
/// prefactor.
pub fn zassenhaus_apply(a: &Assignment, cfg: &ExpansionConfig) -> DenseMatrix {
    let ea = expm(a.a());
    let t = prefactor(a, cfg);
    match cfg.side {
        Side::Right => &t * &ea,
        Side::Left => &ea * &t,
    }
}

/// `e^{A+B}` for the assignment.
pub fn exact_exponential(a: &Assignment) -> DenseMatrix {
    expm(&(a.a() + a.b()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRow {
    pub total_degree: usize,
    pub factor_cap: Option<usize>,
    pub frobenius_error: f64,
    pub terms_evaluated: u128,
}

/// Truncation errors against the matrix-exponential oracle, sorted by degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub side: String,
    pub rows: Vec<ErrorRow>,
}

impl ErrorReport {
    pub fn errors(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.frobenius_error).collect()
    }

    pub fn strictly_decreasing(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].frobenius_error < w[0].frobenius_error)
    }
}

fn check_degrees(degrees: &[usize]) -> Result<()> {
    if degrees.is_empty() {
        return Err(Error::InvalidDegrees(
            "at least one degree is required".into(),
        ));
    }
    if degrees.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidDegrees(
            "degrees must be strictly ascending".into(),
        ));
    }
    Ok(())
}

pub fn convergence_scan(
    a: &Assignment,
    degrees: &[usize],
    side: Side,
    max_factors: Option<usize>,
) -> Result<ErrorReport> {
    check_degrees(degrees)?;
    let exact = exact_exponential(a);
    let mut rows = Vec::with_capacity(degrees.len());
    for &n in degrees {
        let cfg = ExpansionConfig::new(n, max_factors, side)?;
        let approx = zassenhaus_apply(a, &cfg);
        rows.push(ErrorRow {
            total_degree: n,
            factor_cap: max_factors,
            frobenius_error: (&approx - &exact).frobenius_norm(),
            terms_evaluated: Composition::count(n, max_factors),
        });
    }
    Ok(ErrorReport {
        side: side.name().to_string(),
        rows,
    })
}

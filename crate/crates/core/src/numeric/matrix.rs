use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square real matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    inner: DMatrix<f64>,
}

/// Wire form `{"dim": d, "rows": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub rows: Vec<Vec<f64>>,
}

impl DenseMatrix {
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::InvalidMatrix("dimension must be positive".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != d {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {d}",
                    r.len()
                )));
            }
            if let Some(j) = r.iter().position(|x| !x.is_finite()) {
                return Err(Error::InvalidMatrix(format!(
                    "entry ({i},{j}) is not finite"
                )));
            }
        }
        Ok(DenseMatrix {
            inner: DMatrix::from_fn(d, d, |i, j| rows[i][j]),
        })
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        if json.dim != json.rows.len() {
            return Err(Error::InvalidMatrix(format!(
                "dim = {} but {} rows given",
                json.dim,
                json.rows.len()
            )));
        }
        DenseMatrix::from_rows(&json.rows)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            dim: self.dim(),
            rows: self.rows(),
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> f64>(dim: usize, f: F) -> Self {
        DenseMatrix {
            inner: DMatrix::from_fn(dim, dim, f),
        }
    }

    pub(crate) fn from_inner(inner: DMatrix<f64>) -> Self {
        debug_assert!(inner.is_square());
        DenseMatrix { inner }
    }

    pub fn identity(dim: usize) -> Self {
        DenseMatrix {
            inner: DMatrix::identity(dim, dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            inner: DMatrix::zeros(dim, dim),
        }
    }

    pub fn diag(entries: &[f64]) -> Self {
        let d = entries.len();
        DenseMatrix::from_fn(d, |i, j| if i == j { entries[i] } else { 0.0 })
    }

    /// Matrix unit with a single one at `(i, j)`.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        DenseMatrix::from_fn(dim, |r, c| if (r, c) == (i, j) { 1.0 } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim())
            .map(|i| (0..self.dim()).map(|j| self.inner[(i, j)]).collect())
            .collect()
    }

    pub fn inner(&self) -> &DMatrix<f64> {
        &self.inner
    }

    pub fn scale(&self, c: f64) -> Self {
        DenseMatrix {
            inner: &self.inner * c,
        }
    }

    pub fn transpose(&self) -> Self {
        DenseMatrix {
            inner: self.inner.transpose(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.norm()
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        self.inner
            .column_iter()
            .map(|c| c.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &DenseMatrix) -> f64 {
        (&self.inner - &other.inner).amax()
    }

    pub fn commutator(&self, other: &DenseMatrix) -> DenseMatrix {
        DenseMatrix {
            inner: &self.inner * &other.inner - &other.inner * &self.inner,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.inner.iter().all(|x| x.is_finite())
    }

    pub(crate) fn add_scaled(&mut self, other: &DenseMatrix, c: f64) {
        self.inner += &other.inner * c;
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        DenseMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        DenseMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;
    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        DenseMatrix {
            inner: &self.inner * &rhs.inner,
        }
    }
}

/// Pair of same-sized matrices substituted for the two generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    a: DenseMatrix,
    b: DenseMatrix,
}

/// Wire form `{"A": {...}, "B": {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssignmentJson {
    #[serde(rename = "A")]
    pub a: MatrixJson,
    #[serde(rename = "B")]
    pub b: MatrixJson,
}

impl Assignment {
    pub fn new(a: DenseMatrix, b: DenseMatrix) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                left: a.dim(),
                right: b.dim(),
            });
        }
        Ok(Assignment { a, b })
    }

    pub fn from_json(json: &AssignmentJson) -> Result<Self> {
        Assignment::new(
            DenseMatrix::from_json(&json.a)?,
            DenseMatrix::from_json(&json.b)?,
        )
    }

    pub fn to_json(&self) -> AssignmentJson {
        AssignmentJson {
            a: self.a.to_json(),
            b: self.b.to_json(),
        }
    }

    pub fn a(&self) -> &DenseMatrix {
        &self.a
    }

    pub fn b(&self) -> &DenseMatrix {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn transpose(&self) -> Assignment {
        Assignment {
            a: self.a.transpose(),
            b: self.b.transpose(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(DenseMatrix::from_rows(&[]).is_err());
        assert!(DenseMatrix::from_rows(&[vec![1.0, 2.0]]).is_err());
        assert!(DenseMatrix::from_rows(&[vec![f64::NAN]]).is_err());
        assert!(DenseMatrix::from_rows(&[vec![f64::INFINITY]]).is_err());
        let bad = MatrixJson {
            dim: 3,
            rows: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
        };
        assert!(DenseMatrix::from_json(&bad).is_err());
    }

    #[test]
    fn assignment_dims_must_match() {
        let err = Assignment::new(DenseMatrix::identity(2), DenseMatrix::identity(3)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
    }

    #[test]
    fn row_major_layout() {
        let m = DenseMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(m.get(0, 1), 2.0);
        assert_eq!(m.get(1, 0), 3.0);
        assert_eq!(m.rows(), vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
        assert_eq!(m.one_norm(), 6.0);
        assert_eq!(m.transpose().get(0, 1), 3.0);
    }
}

//! Structure-constant matrices.

use std::fmt;

use crate::error::AlgebraError;
use crate::index_set::MAX_DIM;
use crate::scalar::Scalar;

/// A real symmetric `n × n` matrix `g^{ij}` fixing `e^i e^j + e^j e^i = 2 g^{ij} e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    n: usize,
    entries: Vec<Scalar>,
}

impl Metric {
    /// Builds a symmetric nondegenerate metric from its rows.
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let m = Self::new_allow_degenerate(rows)?;
        if m.determinant().is_zero() {
            return Err(AlgebraError::Degenerate);
        }
        Ok(m)
    }

    /// Like [`Metric::new`] but accepts a zero determinant.
    pub fn new_allow_degenerate(rows: Vec<Vec<Scalar>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        if n == 0 || n > MAX_DIM {
            return Err(AlgebraError::DimensionOutOfRange { n, max: MAX_DIM });
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(AlgebraError::NotSquare {
                    rows: n,
                    row,
                    len: r.len(),
                });
            }
        }
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        if entries.iter().any(|x| !x.is_real()) {
            return Err(AlgebraError::ComplexMetric);
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(AlgebraError::NotSymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Metric { n, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, AlgebraError> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(diag: &[Scalar]) -> Result<Self, AlgebraError> {
        let n = diag.len();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { diag[i].clone() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        Self::new(rows)
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Scalar::one(); n]).expect("identity is a valid metric")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry `g^{ij}` with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.entries[i * self.n + j].is_zero()))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.entries.chunks(self.n)
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Scalar {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Scalar::zero();
            };
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det = &det * &p;
            let inv = p.recip().expect("nonzero pivot");
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = &a[r * n + col] * &inv;
                for c in col..n {
                    let d = &f * &a[col * n + c];
                    a[r * n + c] -= &d;
                }
            }
        }
        det
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

//! The ambient algebra: one exterior product and one Clifford product per metric.

use std::fmt;
use std::str::FromStr;

use crate::clifford::clifford_product;
use crate::conversion::convert_basis;
use crate::error::AlgebraError;
use crate::exterior::exterior_product;
use crate::index_set::MAX_DIM;
use crate::metric::Metric;
use crate::multivector::{BasisTag, Multivector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FieldMode {
    #[default]
    Rational,
    Gaussian,
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldMode::Rational => "rational",
            FieldMode::Gaussian => "gaussian",
        })
    }
}

impl FromStr for FieldMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" => Ok(FieldMode::Rational),
            "gaussian" => Ok(FieldMode::Gaussian),
            other => Err(format!("unknown field mode {other:?}")),
        }
    }
}

/// `Λ(E*, g₁, …, g_N)`. With no metrics this is the plain exterior algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolymetricAlgebra {
    n: usize,
    field: FieldMode,
    metrics: Vec<Metric>,
}

impl PolymetricAlgebra {
    pub fn new(n: usize, field: FieldMode, metrics: Vec<Metric>) -> Result<Self, AlgebraError> {
        if n == 0 || n > MAX_DIM {
            return Err(AlgebraError::DimensionOutOfRange { n, max: MAX_DIM });
        }
        if let Some(g) = metrics.iter().find(|g| g.dim() != n) {
            return Err(AlgebraError::DimensionMismatch { left: n, right: g.dim() });
        }
        Ok(PolymetricAlgebra { n, field, metrics })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldMode {
        self.field
    }

    pub fn metric_count(&self) -> usize {
        self.metrics.len()
    }

    pub fn metrics(&self) -> &[Metric] {
        &self.metrics
    }

    /// Metric `g_k`, 1-based.
    pub fn metric(&self, k: usize) -> Result<&Metric, AlgebraError> {
        k.checked_sub(1)
            .and_then(|i| self.metrics.get(i))
            .ok_or(AlgebraError::UnknownMetric {
                k,
                count: self.metrics.len(),
            })
    }

    pub fn wedge(&self, u: &Multivector, v: &Multivector) -> Result<Multivector, AlgebraError> {
        exterior_product(u, v)
    }

    /// `u ∨ᵏ v`.
    pub fn product(&self, u: &Multivector, v: &Multivector, k: usize) -> Result<Multivector, AlgebraError> {
        polymetric_product(u, v, k, self)
    }

    /// Rewrites `u` in `target`, where the Clifford basis is that of `g_k`.
    pub fn convert(&self, u: &Multivector, k: usize, target: BasisTag) -> Result<Multivector, AlgebraError> {
        if u.tag() == target {
            return Ok(u.clone());
        }
        convert_basis(u, self.metric(k)?, target)
    }
}

/// `u ∨ᵏ v`: the Clifford product for metric `g_k`.
pub fn polymetric_product(
    u: &Multivector,
    v: &Multivector,
    k: usize,
    alg: &PolymetricAlgebra,
) -> Result<Multivector, AlgebraError> {
    clifford_product(u, v, alg.metric(k)?)
}

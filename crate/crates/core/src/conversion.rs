//! Grassmann ↔ Clifford basis change driven by the pair-contraction operator `Q`.
//!
//! For an ascending word `i₁ < … < i_k`,
//!
//! ```text
//! Q(i₁…i_k) = Σ_{p<q} (-1)^{q-p-1} g^{i_p i_q} · (word without positions p, q)
//! ```
//!
//! A Grassmann blade in the Clifford basis is `Σ_r (-1)^r / r! · Q^r`, and a
//! Clifford blade in the Grassmann basis is `Σ_r 1 / r! · Q^r`. The same `Q`
//! acts in both directions because deletion keeps words ascending.

use std::collections::BTreeMap;

use crate::error::AlgebraError;
use crate::index_set::{IndexSet, MAX_DIM};
use crate::metric::Metric;
use crate::multivector::{BasisTag, Multivector};
use crate::scalar::Scalar;

/// Largest dimension for which [`conversion_matrix`] materializes a matrix.
pub const MAX_MATRIX_DIM: usize = 12;

/// Which way a basis change goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    GrassmannToClifford,
    CliffordToGrassmann,
}

impl Direction {
    pub fn target(self) -> BasisTag {
        match self {
            Direction::GrassmannToClifford => BasisTag::Clifford,
            Direction::CliffordToGrassmann => BasisTag::Grassmann,
        }
    }
}

/// `Q` applied to one ascending word, given as 1-based indices.
pub fn q_operator(word: &[usize], g: &Metric) -> Result<Vec<(Scalar, Vec<usize>)>, AlgebraError> {
    if word.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AlgebraError::NotAscending);
    }
    if let Some(&i) = word.iter().find(|&&i| i == 0 || i > g.dim()) {
        return Err(AlgebraError::IndexOutOfRange { index: i, n: g.dim() });
    }
    let k = word.len();
    let mut out = Vec::new();
    for p in 0..k {
        for q in p + 1..k {
            let entry = g.get(word[p], word[q]);
            if entry.is_zero() {
                continue;
            }
            let coeff = if (q - p - 1) % 2 == 0 { entry.clone() } else { -entry };
            let rest = word
                .iter()
                .enumerate()
                .filter(|&(t, _)| t != p && t != q)
                .map(|(_, &i)| i)
                .collect();
            out.push((coeff, rest));
        }
    }
    Ok(out)
}

/// `Q` on a blade mask, accumulated into `out` with weight `weight`.
fn q_blade_into(blade: IndexSet, weight: &Scalar, g: &Metric, out: &mut BTreeMap<IndexSet, Scalar>) {
    let idx = blade.to_vec();
    for p in 0..idx.len() {
        for q in p + 1..idx.len() {
            let entry = g.get(idx[p], idx[q]);
            if entry.is_zero() {
                continue;
            }
            let mut c = weight * entry;
            if (q - p - 1) % 2 == 1 {
                c = -c;
            }
            let key = blade.without(idx[p]).without(idx[q]);
            let slot = out.entry(key).or_insert_with(Scalar::zero);
            *slot += &c;
        }
    }
}

/// `Σ_{r=0}^{⌊k/2⌋} sign^r / r! · Q^r(blade)` as raw terms.
fn q_series(blade: IndexSet, g: &Metric, alternating: bool) -> Multivector {
    let mut total = Multivector::zero(g.dim(), BasisTag::Grassmann);
    total.add_term(blade, &Scalar::one());
    let mut current: BTreeMap<IndexSet, Scalar> = BTreeMap::from([(blade, Scalar::one())]);
    for r in 1..=blade.grade() / 2 {
        let mut next = BTreeMap::new();
        for (b, c) in &current {
            q_blade_into(*b, c, g, &mut next);
        }
        next.retain(|_, c| !c.is_zero());
        // r-th term is Q^r / r!, built incrementally as Q(previous) / r
        let mut factor = Scalar::ratio(1, r as i64);
        if alternating {
            factor = -factor;
        }
        for c in next.values_mut() {
            *c *= &factor;
        }
        for (b, c) in &next {
            total.add_term(*b, c);
        }
        current = next;
        if current.is_empty() {
            break;
        }
    }
    total
}

/// A Grassmann blade written in the Clifford basis of `g`.
pub fn grassmann_blade_to_clifford(blade: IndexSet, g: &Metric) -> Result<Multivector, AlgebraError> {
    blade.check_valid(g.dim())?;
    Ok(q_series(blade, g, true).with_tag(BasisTag::Clifford))
}

/// A Clifford blade of `g` written in the Grassmann basis.
pub fn clifford_blade_to_grassmann(blade: IndexSet, g: &Metric) -> Result<Multivector, AlgebraError> {
    blade.check_valid(g.dim())?;
    Ok(q_series(blade, g, false).with_tag(BasisTag::Grassmann))
}

/// Rewrites `u` in the `target` basis; a no-op when already there.
pub fn convert_basis(u: &Multivector, g: &Metric, target: BasisTag) -> Result<Multivector, AlgebraError> {
    if u.dim() != g.dim() {
        return Err(AlgebraError::DimensionMismatch {
            left: u.dim(),
            right: g.dim(),
        });
    }
    if u.tag() == target {
        return Ok(u.clone());
    }
    let mut out = Multivector::zero(u.dim(), target);
    for (b, c) in u.terms() {
        let image = match target {
            BasisTag::Clifford => grassmann_blade_to_clifford(b, g)?,
            BasisTag::Grassmann => clifford_blade_to_grassmann(b, g)?,
        };
        out.add_scaled(&image, c);
    }
    Ok(out)
}

/// A square matrix over [`Scalar`] indexed by blade masks, stored by sparse
/// columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrix {
    n: usize,
    columns: Vec<BTreeMap<u32, Scalar>>,
}

impl BasisMatrix {
    pub fn identity(n: usize) -> Self {
        BasisMatrix {
            n,
            columns: (0..1u32 << n)
                .map(|m| BTreeMap::from([(m, Scalar::one())]))
                .collect(),
        }
    }

    /// Side length, `2^n`.
    pub fn size(&self) -> usize {
        self.columns.len()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: IndexSet, col: IndexSet) -> Scalar {
        self.columns[col.mask() as usize]
            .get(&row.mask())
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &BasisMatrix) -> Result<BasisMatrix, AlgebraError> {
        if self.n != rhs.n {
            return Err(AlgebraError::DimensionMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<u32, Scalar> = BTreeMap::new();
                for (&k, ck) in col {
                    for (&row, a) in &self.columns[k as usize] {
                        *acc.entry(row).or_insert_with(Scalar::zero) += &(a * ck);
                    }
                }
                acc.retain(|_, c| !c.is_zero());
                acc
            })
            .collect();
        Ok(BasisMatrix { n: self.n, columns })
    }

    pub fn is_identity(&self) -> bool {
        self.columns
            .iter()
            .enumerate()
            .all(|(j, col)| col.len() == 1 && col.get(&(j as u32)).is_some_and(Scalar::is_one))
    }
}

/// Materializes a basis change: column `b` holds the image of source blade `b`.
pub fn conversion_matrix(g: &Metric, direction: Direction) -> Result<BasisMatrix, AlgebraError> {
    let n = g.dim();
    if n > MAX_MATRIX_DIM.min(MAX_DIM) {
        return Err(AlgebraError::DimensionOutOfRange { n, max: MAX_MATRIX_DIM });
    }
    let columns = IndexSet::all(n)
        .map(|b| {
            let image = match direction {
                Direction::GrassmannToClifford => grassmann_blade_to_clifford(b, g),
                Direction::CliffordToGrassmann => clifford_blade_to_grassmann(b, g),
            }?;
            Ok(image.terms().map(|(r, c)| (r.mask(), c.clone())).collect())
        })
        .collect::<Result<_, AlgebraError>>()?;
    Ok(BasisMatrix { n, columns })
}

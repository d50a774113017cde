//! Exterior product, rank grading, parity, and pseudo-Hermitian conjugation.
//!
//! Everything here works on Grassmann-tagged multivectors and needs no metric.

use crate::error::AlgebraError;
use crate::index_set::{wedge_blades, IndexSet};
use crate::multivector::{BasisTag, Multivector};

/// `u ∧ v`, the bilinear extension of [`wedge_blades`].
pub fn exterior_product(u: &Multivector, v: &Multivector) -> Result<Multivector, AlgebraError> {
    if u.dim() != v.dim() {
        return Err(AlgebraError::DimensionMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    u.check_tag(BasisTag::Grassmann)?;
    v.check_tag(BasisTag::Grassmann)?;
    let mut out = Multivector::zero(u.dim(), BasisTag::Grassmann);
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let (sign, c) = wedge_blades(a, b);
            match sign {
                0 => {}
                1 => out.add_term(c, &(ca * cb)),
                _ => out.add_term(c, &-(ca * cb)),
            }
        }
    }
    Ok(out)
}

/// The rank-`k` part of `u`.
pub fn rank_project(u: &Multivector, k: usize) -> Result<Multivector, AlgebraError> {
    u.check_tag(BasisTag::Grassmann)?;
    if k > u.dim() {
        return Err(AlgebraError::RankOutOfRange { k, n: u.dim() });
    }
    Ok(u.filter(|b| b.grade() == k))
}

pub fn even_part(u: &Multivector) -> Result<Multivector, AlgebraError> {
    u.check_tag(BasisTag::Grassmann)?;
    Ok(u.filter(|b| b.grade() % 2 == 0))
}

pub fn odd_part(u: &Multivector) -> Result<Multivector, AlgebraError> {
    u.check_tag(BasisTag::Grassmann)?;
    Ok(u.filter(|b| b.grade() % 2 == 1))
}

/// Basis blades of rank `k` in dimension `n`.
pub fn rank_basis(n: usize, k: usize) -> impl Iterator<Item = IndexSet> {
    IndexSet::all(n).filter(move |b| b.grade() == k)
}

/// Basis blades of even (`odd == false`) or odd rank in dimension `n`.
pub fn parity_basis(n: usize, odd: bool) -> impl Iterator<Item = IndexSet> {
    IndexSet::all(n).filter(move |b| (b.grade() % 2 == 1) == odd)
}

/// `U‡`: fixes generators, reverses wedge order, conjugates scalars.
///
/// On a rank-`k` blade this is the factor `(-1)^{k(k-1)/2}` times the
/// conjugated coefficient.
pub fn pseudo_hermitian_conj(u: &Multivector) -> Result<Multivector, AlgebraError> {
    u.check_tag(BasisTag::Grassmann)?;
    Ok(u.map_coeffs(|b, c| {
        let k = b.grade();
        if (k * k.saturating_sub(1) / 2) % 2 == 0 {
            c.conj()
        } else {
            -c.conj()
        }
    }))
}

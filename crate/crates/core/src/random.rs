//! Seeded generators for metrics and multivectors, shared by tests and the
//! benchmark.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::index_set::IndexSet;
use crate::metric::Metric;
use crate::multivector::{BasisTag, Multivector};
use crate::scalar::Scalar;

/// A small rational `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 4`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

/// A nonzero small rational.
pub fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    loop {
        let s = small_rational(rng);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A Gaussian rational with small rational parts.
pub fn small_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let re = small_rational(rng);
    let im = small_rational(rng);
    Scalar::complex(re.re(), im.re())
}

/// A dense symmetric nondegenerate metric with small rational entries.
pub fn random_metric<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Metric {
    loop {
        let mut rows = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let x = small_rational(rng);
                rows[i][j] = x.clone();
                rows[j][i] = x;
            }
        }
        if let Ok(g) = Metric::new(rows) {
            return g;
        }
    }
}

/// A diagonal metric with nonzero small rational entries.
pub fn random_diagonal_metric<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Metric {
    let diag: Vec<Scalar> = (0..n).map(|_| nonzero_rational(rng)).collect();
    Metric::diagonal(&diag).expect("nonzero diagonal is nondegenerate")
}

/// A multivector in which each of the `2^n` blades is present with
/// probability `density`, coefficients from `coeff`.
pub fn random_multivector_with<R, F>(rng: &mut R, n: usize, tag: BasisTag, density: f64, mut coeff: F) -> Multivector
where
    R: Rng + ?Sized,
    F: FnMut(&mut R) -> Scalar,
{
    let mut m = Multivector::zero(n, tag);
    for b in IndexSet::all(n) {
        if rng.gen_bool(density) {
            m.add_term(b, &coeff(rng));
        }
    }
    m
}

pub fn random_multivector<R: Rng + ?Sized>(rng: &mut R, n: usize, tag: BasisTag, density: f64) -> Multivector {
    random_multivector_with(rng, n, tag, density, |r| nonzero_rational(r))
}

/// A multivector with exactly `terms` random blades (fewer if they collide).
pub fn random_sparse<R: Rng + ?Sized>(rng: &mut R, n: usize, tag: BasisTag, terms: usize) -> Multivector {
    let mut m = Multivector::zero(n, tag);
    for _ in 0..terms {
        let b = IndexSet::from_mask(rng.gen_range(0..1u32 << n));
        m.add_term(b, &nonzero_rational(rng));
    }
    m
}

/// `Σ u_j e^j` with random rational `u`.
pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, n: usize, tag: BasisTag) -> (Vec<Scalar>, Multivector) {
    let u: Vec<Scalar> = (0..n).map(|_| small_rational(rng)).collect();
    let mut m = Multivector::zero(n, tag);
    for (j, c) in u.iter().enumerate() {
        m.add_term(IndexSet::singleton(j + 1), c);
    }
    (u, m)
}

/// A rational with a big numerator, for stressing exactness.
pub fn wide_rational<R: Rng + ?Sized>(rng: &mut R) -> Scalar {
    let num = BigInt::from(rng.gen::<i64>()) * BigInt::from(rng.gen::<i64>());
    let den = BigInt::from(rng.gen_range(1..i64::MAX));
    Scalar::real(BigRational::new(num, den))
}

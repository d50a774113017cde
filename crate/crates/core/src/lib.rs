//! Exact N-metric exterior algebras.
//!
//! One `2^n`-dimensional space carries the exterior product `∧` and one
//! Clifford product `∨ᵏ` for each symmetric structure-constant matrix
//! `g_k`. Values are kept in the Grassmann basis; Clifford bases appear at
//! conversion boundaries. All arithmetic is over exact (Gaussian) rationals.
//!
//! ```
//! use polymetric::{clifford_product, BasisTag, Metric, Multivector};
//!
//! let g = Metric::from_i64_rows(&[&[1, 2], &[2, -1]]).unwrap();
//! let e1 = Multivector::basis(2, BasisTag::Grassmann, &[1]).unwrap();
//! let e2 = Multivector::basis(2, BasisTag::Grassmann, &[2]).unwrap();
//! let p = clifford_product(&e1, &e2, &g).unwrap();
//! // e^1 e^2 = e^1 ∧ e^2 + g^{12} e
//! assert_eq!(p.coeff(polymetric::IndexSet::EMPTY), 2.into());
//! ```

pub mod clifford;
pub mod conversion;
pub mod error;
pub mod expr;
pub mod exterior;
pub mod index_set;
pub mod metric;
pub mod multivector;
pub mod oracle;
pub mod polymetric;
pub mod random;
mod rational;
pub mod scalar;

pub use clifford::{clifford_product, vector_times_multivector};
pub use conversion::{
    clifford_blade_to_grassmann, conversion_matrix, convert_basis, grassmann_blade_to_clifford, q_operator,
    BasisMatrix, Direction,
};
pub use error::AlgebraError;
pub use exterior::{even_part, exterior_product, odd_part, pseudo_hermitian_conj, rank_project};
pub use index_set::{wedge_blades, IndexSet, MAX_DIM};
pub use metric::Metric;
pub use multivector::{BasisTag, Multivector};
pub use oracle::{alternation_wedge, normalize_word, oracle_clifford_product};
pub use polymetric::{polymetric_product, FieldMode, PolymetricAlgebra};
pub use scalar::Scalar;

//! Numeric kernel: complex scalars, small dense matrices, eigensolvers for
//! dimensions up to four, a 2×2 complex SVD and a seeded PRNG.

mod complex;
mod eigen;
mod matrix;
mod rng;
mod svd;

pub use complex::Complex;
pub use eigen::{hermitian_eigen, sym3_eigen_desc, HermitianEigen};
pub use matrix::{Matrix, Matrix2, Matrix3, Matrix4, RealMatrix3};
pub use rng::{rng_gaussian, rng_substream, splitmix64, SeededRng};
pub use svd::{svd2_complex, Svd2};

/// Hermiticity tolerance accepted by [`hermitian_eigen`].
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Symmetry tolerance accepted by [`sym3_eigen_desc`].
pub const SYMMETRIC_TOL: f64 = 1e-12;

/// Stable in-place insertion sort; `core` has no allocation-free stable
/// sort and every slice here has at most nine elements.
pub(crate) fn sort_small_by<T: Copy>(v: &mut [T], mut cmp: impl FnMut(&T, &T) -> core::cmp::Ordering) {
    for i in 1..v.len() {
        let x = v[i];
        let mut j = i;
        while j > 0 && cmp(&v[j - 1], &x) == core::cmp::Ordering::Greater {
            v[j] = v[j - 1];
            j -= 1;
        }
        v[j] = x;
    }
}

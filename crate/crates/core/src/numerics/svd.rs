use super::{hermitian_eigen, Complex, Matrix2};
use crate::math;

/// `C = U·diag(s)·V†` for a 2×2 complex matrix.
#[derive(Clone, Copy, Debug)]
pub struct Svd2 {
    pub u: Matrix2,
    /// Singular values, descending.
    pub s: [f64; 2],
    pub v: Matrix2,
}

impl Svd2 {
    pub fn reconstruct(&self) -> Matrix2 {
        self.u * Matrix2::diag(self.s) * self.v.adjoint()
    }
}

const RANK_TOL: f64 = 1e-14;
const PHASE_TOL: f64 = 1e-12;

/// Makes the first entry of `col` with modulus above `1e-12` real and
/// nonnegative.
fn canonical_phase(col: &mut [Complex; 2]) {
    if let Some(z) = col.iter().copied().find(|z| z.abs() > PHASE_TOL) {
        let p = z.conj() / z.abs();
        col.iter_mut().for_each(|c| *c *= p);
    }
}

fn orthogonal_complement(u: &[Complex; 2]) -> [Complex; 2] {
    [-u[1].conj(), u[0].conj()]
}

/// Singular value decomposition of a 2×2 complex matrix.
///
/// `V` comes from the eigenvectors of `C†C` with each column's leading
/// entry made real nonnegative. `U`'s first column is `C·v₁/s₁`; its second
/// column is the orthogonal complement of the first, rephased so that
/// `u₂†·C·v₂ ≥ 0`. When `s₂ < 1e-14` the complement is kept as is.
pub fn svd2_complex(c: &Matrix2) -> Svd2 {
    let ctc = c.adjoint() * *c;
    let eig = hermitian_eigen(&ctc).expect("C†C is Hermitian by construction");

    // Ascending eigenvalues: column 1 is the dominant direction.
    let mut v1 = eig.vector(1);
    let mut v2 = eig.vector(0);
    canonical_phase(&mut v1);
    canonical_phase(&mut v2);
    let mut v = Matrix2::zero();
    v.set_column(0, &v1);
    v.set_column(1, &v2);

    let cv1 = c.mul_vec(&v1);
    let s1 = math::sqrt(cv1[0].norm_sqr() + cv1[1].norm_sqr());
    if s1 < f64::MIN_POSITIVE {
        return Svd2 {
            u: Matrix2::identity(),
            s: [0.0, 0.0],
            v,
        };
    }
    let u1 = [cv1[0] / s1, cv1[1] / s1];
    let mut u2 = orthogonal_complement(&u1);

    let cv2 = c.mul_vec(&v2);
    let z = u2[0].conj() * cv2[0] + u2[1].conj() * cv2[1];
    let s2 = z.abs();
    if s2 >= RANK_TOL {
        let p = z / s2;
        u2 = [u2[0] * p, u2[1] * p];
    }

    let mut u = Matrix2::zero();
    u.set_column(0, &u1);
    u.set_column(1, &u2);
    Svd2 { u, s: [s1, s2], v }
}

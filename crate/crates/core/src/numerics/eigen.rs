//! Cyclic Jacobi eigensolvers for small Hermitian and real symmetric matrices.

use super::{sort_small_by, Complex, Matrix, RealMatrix3, HERMITIAN_TOL, SYMMETRIC_TOL};
use crate::{math, Error, Result};

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TOL: f64 = 1e-13;

/// Eigen-decomposition of a Hermitian matrix: `H = V·diag(values)·V†`.
#[derive(Clone, Copy, Debug)]
pub struct HermitianEigen<const N: usize> {
    /// Eigenvalues, ascending.
    pub values: [f64; N],
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: Matrix<N>,
}

impl<const N: usize> HermitianEigen<N> {
    pub fn vector(&self, k: usize) -> [Complex; N] {
        self.vectors.column(k)
    }

    /// `V·diag(values)·V†`.
    pub fn reconstruct(&self) -> Matrix<N> {
        let mut d = Matrix::<N>::zero();
        for k in 0..N {
            d[(k, k)] = Complex::real(self.values[k]);
        }
        self.vectors * d * self.vectors.adjoint()
    }
}

fn off_diagonal_sqr<const N: usize>(a: &Matrix<N>) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s
}

/// Jacobi rotation `(c, s)` annihilating the off-diagonal entry `r > 0` of
/// the real symmetric block `[[app, r], [r, aqq]]` under `Rᵀ·M·R` with
/// `R = [[c, s], [−s, c]]`.
fn rotation(app: f64, aqq: f64, r: f64) -> (f64, f64) {
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + math::sqrt(1.0 + tau * tau))
    } else {
        -1.0 / (-tau + math::sqrt(1.0 + tau * tau))
    };
    let c = 1.0 / math::sqrt(1.0 + t * t);
    (c, t * c)
}

/// Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian
/// matrix by cyclic complex Jacobi rotations.
///
/// Fails with [`Error::NotHermitian`] when `max |H_ij − conj(H_ji)|`
/// exceeds `1e-10`, and with [`Error::NoConvergence`] if the off-diagonal
/// norm has not dropped below `1e-13·max(1, ‖H‖_F)` after 100 sweeps.
pub fn hermitian_eigen<const N: usize>(h: &Matrix<N>) -> Result<HermitianEigen<N>> {
    if !h.is_finite() {
        return Err(Error::NonFinite);
    }
    let residual = h.hermitian_residual();
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian { residual });
    }

    // Work on the exactly Hermitian part.
    let mut a = (*h + h.adjoint()) * 0.5;
    for i in 0..N {
        a[(i, i)].im = 0.0;
    }
    let mut v = Matrix::<N>::identity();
    let scale = f64::max(1.0, math::sqrt(a.frobenius_sqr()));
    let tol = OFF_DIAGONAL_TOL * scale;

    let mut sweeps = 0;
    while math::sqrt(off_diagonal_sqr(&a)) >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..N {
            for q in (p + 1)..N {
                let b = a[(p, q)];
                let r = b.abs();
                if r < f64::MIN_POSITIVE {
                    continue;
                }
                let (c, s) = rotation(a[(p, p)].re, a[(q, q)].re, r);
                // G = diag(1, e^{-iφ})·R on the (p, q) plane, φ = arg(b).
                let phase = (b / r).conj();
                let g_pp = Complex::real(c);
                let g_pq = Complex::real(s);
                let g_qp = phase * -s;
                let g_qq = phase * c;

                for k in 0..N {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * g_pp + akq * g_qp;
                    a[(k, q)] = akp * g_pq + akq * g_qq;
                }
                for k in 0..N {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                for k in 0..N {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * g_pp + vkq * g_qp;
                    v[(k, q)] = vkp * g_pq + vkq * g_qq;
                }
                a[(p, q)] = Complex::ZERO;
                a[(q, p)] = Complex::ZERO;
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
            }
        }
    }

    let mut order: [usize; N] = core::array::from_fn(|i| i);
    sort_small_by(&mut order, |&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = core::array::from_fn(|k| a[(order[k], order[k])].re);
    let mut vectors = Matrix::<N>::zero();
    for (k, &src) in order.iter().enumerate() {
        vectors.set_column(k, &v.column(src));
    }
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues of a real symmetric 3×3 matrix, descending.
///
/// Real cyclic Jacobi, kept separate from [`hermitian_eigen`] so the two
/// can cross-check each other.
pub fn sym3_eigen_desc(s: &RealMatrix3) -> Result<[f64; 3]> {
    if s.iter().flatten().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let mut residual: f64 = 0.0;
    for i in 0..3 {
        for j in (i + 1)..3 {
            residual = residual.max((s[i][j] - s[j][i]).abs());
        }
    }
    if residual > SYMMETRIC_TOL {
        return Err(Error::NotSymmetric { residual });
    }

    let mut a = *s;
    for i in 0..3 {
        for j in (i + 1)..3 {
            let m = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = m;
            a[j][i] = m;
        }
    }
    let frob = math::sqrt(a.iter().flatten().map(|x| x * x).sum::<f64>());
    let tol = OFF_DIAGONAL_TOL * f64::max(1.0, frob);
    let off = |a: &RealMatrix3| math::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));

    let mut sweeps = 0;
    while off(&a) >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..3 {
            for q in (p + 1)..3 {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let (c, s) = if apq > 0.0 {
                    rotation(a[p][p], a[q][q], apq)
                } else {
                    let (c, s) = rotation(a[p][p], a[q][q], -apq);
                    (c, -s)
                };
                for k in 0..3 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..3 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }

    let mut d = [a[0][0], a[1][1], a[2][2]];
    sort_small_by(&mut d, |x, y| y.total_cmp(x));
    Ok(d)
}

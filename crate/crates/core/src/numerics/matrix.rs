use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use super::Complex;

/// Dense `N×N` complex matrix stored row-major on the stack.
///
/// Only `N ∈ {2, 3, 4}` is used by this crate; see the aliases below.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Matrix<const N: usize> {
    rows: [[Complex; N]; N],
}

pub type Matrix2 = Matrix<2>;
pub type Matrix3 = Matrix<3>;
pub type Matrix4 = Matrix<4>;

/// Real 3×3 matrix, row-major.
pub type RealMatrix3 = [[f64; 3]; 3];

impl<const N: usize> Matrix<N> {
    pub const DIM: usize = N;

    pub fn zero() -> Self {
        Matrix {
            rows: [[Complex::ZERO; N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.rows[i][i] = Complex::ONE;
        }
        m
    }

    pub fn from_rows(rows: [[Complex; N]; N]) -> Self {
        Matrix { rows }
    }

    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.rows[i][j] = Complex::real(rows[i][j]);
            }
        }
        m
    }

    pub fn diag(d: [f64; N]) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            m.rows[i][i] = Complex::real(d[i]);
        }
        m
    }

    /// `|v⟩⟨w|`.
    pub fn outer(v: &[Complex; N], w: &[Complex; N]) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.rows[i][j] = v[i] * w[j].conj();
            }
        }
        m
    }

    pub fn rows(&self) -> &[[Complex; N]; N] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> [Complex; N] {
        core::array::from_fn(|i| self.rows[i][j])
    }

    pub fn set_column(&mut self, j: usize, col: &[Complex; N]) {
        for i in 0..N {
            self.rows[i][j] = col[i];
        }
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.rows[i][j] = self.rows[j][i].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..N {
            for j in 0..N {
                m.rows[i][j] = self.rows[j][i];
            }
        }
        m
    }

    pub fn trace(&self) -> Complex {
        (0..N).fold(Complex::ZERO, |acc, i| acc + self.rows[i][i])
    }

    pub fn scale(&self, k: Complex) -> Self {
        let mut m = *self;
        m.rows.iter_mut().flatten().for_each(|z| *z *= k);
        m
    }

    pub fn mul_vec(&self, v: &[Complex; N]) -> [Complex; N] {
        core::array::from_fn(|i| (0..N).fold(Complex::ZERO, |acc, j| acc + self.rows[i][j] * v[j]))
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.rows.iter().flatten().fold(0.0, |m, z| f64::max(m, z.abs()))
    }

    pub fn frobenius_sqr(&self) -> f64 {
        self.rows.iter().flatten().map(|z| z.norm_sqr()).sum()
    }

    /// `max |M_ij − conj(M_ji)|`.
    pub fn hermitian_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..N {
            for j in i..N {
                r = r.max((self.rows[i][j] - self.rows[j][i].conj()).abs());
            }
        }
        r
    }

    /// `max |(M†M − I)_ij|`.
    pub fn unitary_residual(&self) -> f64 {
        (self.adjoint() * *self - Self::identity()).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_residual() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitary_residual() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.rows.iter().flatten().all(|z| z.is_finite())
    }

    /// `Tr(A·B)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Complex {
        let mut acc = Complex::ZERO;
        for i in 0..N {
            for k in 0..N {
                acc += self.rows[i][k] * other.rows[k][i];
            }
        }
        acc
    }
}

impl Matrix2 {
    /// Kronecker product `self ⊗ other`; `self` acts on the left qubit.
    pub fn kron(&self, other: &Matrix2) -> Matrix4 {
        let mut m = Matrix4::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m[(2 * i + k, 2 * j + l)] = self.rows[i][j] * other.rows[k][l];
                    }
                }
            }
        }
        m
    }

    pub fn pauli_x() -> Self {
        Matrix2::from_real([[0.0, 1.0], [1.0, 0.0]])
    }

    /// `σ_y = [[0, −i], [i, 0]]`.
    pub fn pauli_y() -> Self {
        Matrix2::from_rows([[Complex::ZERO, -Complex::I], [Complex::I, Complex::ZERO]])
    }

    pub fn pauli_z() -> Self {
        Matrix2::from_real([[1.0, 0.0], [0.0, -1.0]])
    }

    /// `[σ_x, σ_y, σ_z]`.
    pub fn paulis() -> [Self; 3] {
        [Self::pauli_x(), Self::pauli_y(), Self::pauli_z()]
    }

    pub fn det(&self) -> Complex {
        self.rows[0][0] * self.rows[1][1] - self.rows[0][1] * self.rows[1][0]
    }
}

impl<const N: usize> Index<(usize, usize)> for Matrix<N> {
    type Output = Complex;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.rows[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Matrix<N> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.rows[i][j]
    }
}

impl<const N: usize> Mul for Matrix<N> {
    type Output = Matrix<N>;
    fn mul(self, o: Matrix<N>) -> Matrix<N> {
        let mut m = Matrix::zero();
        for i in 0..N {
            for k in 0..N {
                let a = self.rows[i][k];
                for j in 0..N {
                    m.rows[i][j] += a * o.rows[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Mul<f64> for Matrix<N> {
    type Output = Matrix<N>;
    fn mul(self, k: f64) -> Matrix<N> {
        self.scale(Complex::real(k))
    }
}

impl<const N: usize> Add for Matrix<N> {
    type Output = Matrix<N>;
    fn add(mut self, o: Matrix<N>) -> Matrix<N> {
        for i in 0..N {
            for j in 0..N {
                self.rows[i][j] += o.rows[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for Matrix<N> {
    type Output = Matrix<N>;
    fn sub(mut self, o: Matrix<N>) -> Matrix<N> {
        for i in 0..N {
            for j in 0..N {
                self.rows[i][j] -= o.rows[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Neg for Matrix<N> {
    type Output = Matrix<N>;
    fn neg(self) -> Matrix<N> {
        self * -1.0
    }
}

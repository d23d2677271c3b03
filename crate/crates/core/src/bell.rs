//! CHSH Bell operators, their spectra and bounds, the closed-form maximal
//! violation of a pure state with a constructive optimal scheme, and the
//! Horodecki criterion.

use core::f64::consts::{PI, SQRT_2};

use crate::numerics::{hermitian_eigen, sym3_eigen_desc, Complex, Matrix2, Matrix4};
use crate::states::{correlation_matrix, schmidt_decompose, DensityMatrix, LocalUnitary, PureState};
use crate::{math, Error, Result};

/// Unit-norm tolerance for Bloch vectors.
pub const UNIT_TOL: f64 = 1e-12;

/// Tsirelson's bound `2√2`.
pub const TSIRELSON: f64 = 2.0 * SQRT_2;

/// Unit vector `a` of the spin observable `a·σ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector {
    x: f64,
    y: f64,
    z: f64,
}

impl BlochVector {
    pub const X: BlochVector = BlochVector { x: 1.0, y: 0.0, z: 0.0 };
    pub const Y: BlochVector = BlochVector { x: 0.0, y: 1.0, z: 0.0 };
    pub const Z: BlochVector = BlochVector { x: 0.0, y: 0.0, z: 1.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm = math::sqrt(x * x + y * y + z * z);
        if (norm - 1.0).abs() > UNIT_TOL {
            return Err(Error::NotUnit { norm });
        }
        Ok(BlochVector { x, y, z })
    }

    /// Rescales a nonzero vector to unit length.
    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = math::sqrt(x * x + y * y + z * z);
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NotUnit { norm });
        }
        Ok(BlochVector {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    /// `(sin p·cos φ, sin p·sin φ, cos p)` for polar `p`, azimuth `φ`.
    pub fn from_angles(polar: f64, azimuth: f64) -> Self {
        let sp = math::sin(polar);
        BlochVector {
            x: sp * math::cos(azimuth),
            y: sp * math::sin(azimuth),
            z: math::cos(polar),
        }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, o: &BlochVector) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(&self, o: &BlochVector) -> [f64; 3] {
        [
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        ]
    }

    /// `|self × o|`.
    pub fn cross_norm(&self, o: &BlochVector) -> f64 {
        let [x, y, z] = self.cross(o);
        math::sqrt(x * x + y * y + z * z)
    }

    pub fn negated(self) -> Self {
        BlochVector {
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }

    /// `x σ_x + y σ_y + z σ_z`.
    pub fn sigma(&self) -> Matrix2 {
        let [px, py, pz] = Matrix2::paulis();
        px * self.x + py * self.y + pz * self.z
    }

    /// Bloch vector of a traceless Hermitian 2×2 matrix, `r_k = ½ Tr(σ_k M)`.
    fn of_operator(m: &Matrix2) -> [f64; 3] {
        Matrix2::paulis().map(|p| 0.5 * p.trace_product(m).re)
    }

    /// The vector `r` with `r·σ = U†·(self·σ)·U`.
    pub fn pull_back(&self, u: &LocalUnitary) -> BlochVector {
        let [x, y, z] = Self::of_operator(&u.pull_back(&self.sigma()));
        BlochVector::normalized(x, y, z).expect("conjugation preserves the norm")
    }
}

/// Dichotomic spin observable `a·σ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Observable {
    pub bloch: BlochVector,
    pub matrix: Matrix2,
}

impl From<BlochVector> for Observable {
    fn from(bloch: BlochVector) -> Self {
        Observable {
            bloch,
            matrix: bloch.sigma(),
        }
    }
}

/// `a·σ` for a Bloch vector given by components; fails with
/// [`Error::NotUnit`] unless `|a| = 1` within `1e-12`.
pub fn observable_from_bloch(v: [f64; 3]) -> Result<Observable> {
    BlochVector::new(v[0], v[1], v[2]).map(Observable::from)
}

/// Alice's `a, a′` and Bob's `b, b′`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementScheme {
    pub a: BlochVector,
    pub a_prime: BlochVector,
    pub b: BlochVector,
    pub b_prime: BlochVector,
}

impl MeasurementScheme {
    pub fn new(a: BlochVector, a_prime: BlochVector, b: BlochVector, b_prime: BlochVector) -> Self {
        MeasurementScheme { a, a_prime, b, b_prime }
    }

    /// From `(polar, azimuth)` pairs for `a, a′, b, b′` in that order.
    pub fn from_angles(p: &[f64; 8]) -> Self {
        MeasurementScheme {
            a: BlochVector::from_angles(p[0], p[1]),
            a_prime: BlochVector::from_angles(p[2], p[3]),
            b: BlochVector::from_angles(p[4], p[5]),
            b_prime: BlochVector::from_angles(p[6], p[7]),
        }
    }

    /// `a → −a, a′ → −a′`: the opposite-sign Bell operator.
    pub fn negate_alice(&self) -> Self {
        MeasurementScheme {
            a: self.a.negated(),
            a_prime: self.a_prime.negated(),
            ..*self
        }
    }

    pub fn vectors(&self) -> [BlochVector; 4] {
        [self.a, self.a_prime, self.b, self.b_prime]
    }

    /// `|a × a′|·|b × b′|`, clamped to `[0, 1]`.
    pub fn sin_x(&self) -> f64 {
        (self.a.cross_norm(&self.a_prime) * self.b.cross_norm(&self.b_prime)).clamp(0.0, 1.0)
    }

    /// `1 − sin x` without cancellation near `sin x = 1`:
    /// `1 − pq = ((a·a′)² + p²(b·b′)²) / (1 + pq)` with `p = |a×a′|`,
    /// `q = |b×b′|`.
    pub fn one_minus_sin_x(&self) -> f64 {
        let p = self.a.cross_norm(&self.a_prime);
        let q = self.b.cross_norm(&self.b_prime);
        let (da, db) = (self.a.dot(&self.a_prime), self.b.dot(&self.b_prime));
        ((da * da + p * p * db * db) / (1.0 + p * q)).clamp(0.0, 1.0)
    }
}

/// `𝔹 = A⊗(B + B′) + A′⊗(B − B′)`.
pub fn bell_operator(s: &MeasurementScheme) -> Matrix4 {
    let (a, ap) = (s.a.sigma(), s.a_prime.sigma());
    let (b, bp) = (s.b.sigma(), s.b_prime.sigma());
    a.kron(&(b + bp)) + ap.kron(&(b - bp))
}

/// `[A, A′]⊗[B, B′]`.
pub fn commutator_product(s: &MeasurementScheme) -> Matrix4 {
    let (a, ap) = (s.a.sigma(), s.a_prime.sigma());
    let (b, bp) = (s.b.sigma(), s.b_prime.sigma());
    (a * ap - ap * a).kron(&(b * bp - bp * b))
}

/// `max |(𝔹² − 4I + [A,A′]⊗[B,B′])_ij|`.
///
/// For unit-square observables `𝔹² = 4I − [A,A′]⊗[B,B′]`; the cross terms
/// are `AA′⊗(B+B′)(B−B′) + A′A⊗(B−B′)(B+B′) = −[A,A′]⊗[B,B′]`.
pub fn square_identity_residual(s: &MeasurementScheme) -> f64 {
    let bell = bell_operator(s);
    (bell * bell - Matrix4::identity() * 4.0 + commutator_product(s)).max_abs()
}

/// `Tr(ρ·𝔹)`.
pub fn chsh_value(s: &MeasurementScheme, rho: &DensityMatrix) -> f64 {
    let v = rho.expectation(&bell_operator(s));
    debug_assert!(v.im.abs() <= 1e-10, "imaginary CHSH value {v:?}");
    v.re
}

/// Spectrum of a Bell operator.
#[derive(Clone, Copy, Debug)]
pub struct BellSpectrum {
    /// `sin x = |a × a′|·|b × b′|`.
    pub sin_x: f64,
    /// `+2√(1+sin x), +2√(1−sin x), −2√(1−sin x), −2√(1+sin x)`.
    pub eigenvalues: [f64; 4],
    /// Orthonormal eigenvectors, paired with `eigenvalues`.
    pub eigenvectors: [[Complex; 4]; 4],
}

impl BellSpectrum {
    /// Closed-form eigenvalues for a given `sin x`, descending.
    pub fn closed_form(sin_x: f64) -> [f64; 4] {
        Self::from_parts(1.0 + sin_x, (1.0 - sin_x).max(0.0))
    }

    /// Closed-form eigenvalues of a scheme, with `1 − sin x` evaluated
    /// stably.
    pub fn closed_form_for(s: &MeasurementScheme) -> [f64; 4] {
        Self::from_parts(1.0 + s.sin_x(), s.one_minus_sin_x())
    }

    fn from_parts(one_plus: f64, one_minus: f64) -> [f64; 4] {
        let hi = 2.0 * math::sqrt(one_plus);
        let lo = 2.0 * math::sqrt(one_minus);
        [hi, lo, -lo, -hi]
    }
}

/// Eigen-decomposition of `𝔹` with eigenvalues from the closed form.
///
/// Since `𝔹² = 4I + 4 (a×a′)·σ ⊗ (b×b′)·σ` and the Pauli product has
/// eigenvalues `±|a×a′||b×b′|`, `𝔹²` has eigenvalues `4(1 ± sin x)`;
/// tracelessness of `𝔹` and its partial traces forces one sign of each
/// root. Eigenvectors are computed numerically and paired in descending
/// order.
pub fn bell_spectrum(s: &MeasurementScheme) -> BellSpectrum {
    debug_assert!(square_identity_residual(s) <= 1e-12);
    let sin_x = s.sin_x();
    let eig = hermitian_eigen(&bell_operator(s)).expect("4×4 Jacobi converges");
    let eigenvectors = core::array::from_fn(|k| eig.vector(3 - k));
    BellSpectrum {
        sin_x,
        eigenvalues: BellSpectrum::closed_form_for(s),
        eigenvectors,
    }
}

/// `η₁ = (1,0,0,1)/√2`, `η₂ = (−1,0,0,1)/√2`, `η₃ = (0,−1,1,0)/√2`,
/// `η₄ = (0,1,1,0)/√2`.
pub fn eta_basis() -> [[Complex; 4]; 4] {
    let r = core::f64::consts::FRAC_1_SQRT_2;
    [[r, 0.0, 0.0, r], [-r, 0.0, 0.0, r], [0.0, -r, r, 0.0], [0.0, r, r, 0.0]].map(|v| v.map(Complex::real))
}

/// `√(4 + |Tr(ρ·[A,A′]⊗[B,B′])|)`.
pub fn landau_bound(s: &MeasurementScheme, rho: &DensityMatrix) -> f64 {
    math::sqrt(4.0 + rho.expectation(&commutator_product(s)).abs())
}

/// `2√(1 + sin²θ)` for `θ ∈ [0, π]`.
pub fn analytic_max_violation(theta: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain {
            what: "theta",
            value: theta,
        });
    }
    let s = math::sin(theta);
    Ok(2.0 * math::sqrt(1.0 + s * s))
}

/// Maximal CHSH value of `ψ` over all measurement schemes.
pub fn max_violation_pure(psi: &PureState) -> f64 {
    analytic_max_violation(schmidt_decompose(psi).theta).expect("Schmidt angle in [0, π/2]")
}

/// A measurement scheme attaining the maximal violation of a given state.
#[derive(Clone, Copy, Debug)]
pub struct OptimalSettings {
    pub scheme: MeasurementScheme,
    /// Mixing angle with `tan λ = sin θ`.
    pub lambda: f64,
    pub achieved_value: f64,
}

/// Builds a scheme with `Tr(|ψ⟩⟨ψ|·𝔹) = 2√(1 + sin²θ)`.
///
/// In the Schmidt frame the correlation matrix is `diag(sin θ, sin θ, −1)`,
/// whose two dominant left-singular directions are `ẑ` and `x̂`. With
/// `a = ẑ`, `a′ = x̂` and `e₁ = Tᵀa/|Tᵀa| = −ẑ`, `e₂ = Tᵀa′/|Tᵀa′| = x̂`,
/// Bob takes `b, b′ = cos λ·e₁ ± sin λ·e₂`. The CHSH value is then
/// `2(cos λ + sin λ·sin θ)`, maximal at `tan λ = sin θ`. All four vectors
/// are finally pulled back through the Schmidt unitaries. A product state
/// uses `a = a′ = ẑ`, `b = b′ = −ẑ`.
pub fn optimal_settings_for(psi: &PureState) -> OptimalSettings {
    let form = schmidt_decompose(psi);
    let sin_theta = math::sin(form.theta);
    let lambda = math::atan(sin_theta);
    let (cl, sl) = (math::cos(lambda), math::sin(lambda));

    let frame = if sin_theta < 1e-15 {
        let down = BlochVector::Z.negated();
        MeasurementScheme::new(BlochVector::Z, BlochVector::Z, down, down)
    } else {
        let e1 = [0.0, 0.0, -1.0];
        let e2 = [1.0, 0.0, 0.0];
        let combine = |sign: f64| {
            let v: [f64; 3] = core::array::from_fn(|k| cl * e1[k] + sign * sl * e2[k]);
            BlochVector::normalized(v[0], v[1], v[2]).expect("unit by construction")
        };
        MeasurementScheme::new(BlochVector::Z, BlochVector::X, combine(1.0), combine(-1.0))
    };

    let scheme = MeasurementScheme::new(
        frame.a.pull_back(&form.u_a),
        frame.a_prime.pull_back(&form.u_a),
        frame.b.pull_back(&form.u_b),
        frame.b_prime.pull_back(&form.u_b),
    );
    let achieved_value = chsh_value(&scheme, &psi.projector());
    OptimalSettings {
        scheme,
        lambda,
        achieved_value,
    }
}

/// Sum of the two largest eigenvalues of `TᵀT`; the largest CHSH value
/// reachable on `ρ` is `2√M`.
pub fn horodecki_m(rho: &DensityMatrix) -> f64 {
    let gram = correlation_matrix(rho).gram();
    let ev = sym3_eigen_desc(&gram).expect("TᵀT is symmetric by construction");
    (ev[0] + ev[1]).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{canonical_state, partial_trace_op, Subsystem};
    use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, FRAC_PI_6};

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    fn unit(x: f64, y: f64, z: f64) -> BlochVector {
        BlochVector::normalized(x, y, z).unwrap()
    }

    #[test]
    fn observables() {
        let z = observable_from_bloch([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(z.matrix, Matrix2::pauli_z());
        let x = observable_from_bloch([1.0, 0.0, 0.0]).unwrap();
        assert_eq!(x.matrix, Matrix2::pauli_x());
        let r = FRAC_1_SQRT_2;
        let d = observable_from_bloch([r, r, 0.0]).unwrap();
        let expect = (Matrix2::pauli_x() + Matrix2::pauli_y()) * r;
        assert!((d.matrix - expect).max_abs() < 1e-16);
        let e = hermitian_eigen(&d.matrix).unwrap();
        assert!(approx(e.values[0], -1.0, 1e-15) && approx(e.values[1], 1.0, 1e-15));
        assert!((d.matrix * d.matrix - Matrix2::identity()).max_abs() < 1e-15);
        assert!(matches!(
            observable_from_bloch([1.0, 1e-5, 0.0]),
            Err(Error::NotUnit { .. })
        ));
    }

    #[test]
    fn bell_operator_examples() {
        let s = MeasurementScheme::new(BlochVector::Z, BlochVector::X, BlochVector::Z, BlochVector::X);
        let (z, x) = (Matrix2::pauli_z(), Matrix2::pauli_x());
        // Z⊗(Z + X) + X⊗(Z − X)
        let expect = z.kron(&z) + z.kron(&x) + x.kron(&z) - x.kron(&x);
        assert!((bell_operator(&s) - expect).max_abs() < 1e-15);
        assert_eq!(bell_operator(&s).trace(), Complex::ZERO);

        let s = MeasurementScheme::new(BlochVector::Z, BlochVector::Z, BlochVector::X, unit(0.2, 0.3, 0.9));
        let b = bell_operator(&s);
        assert!((b - z.kron(&x) * 2.0).max_abs() < 1e-15);
        let e = hermitian_eigen(&b).unwrap();
        assert!(approx(e.values[3], 2.0, 1e-12) && approx(e.values[0], -2.0, 1e-12));
    }

    #[test]
    fn bell_operator_partial_traces_vanish() {
        let s = MeasurementScheme::new(
            unit(0.1, 0.5, -0.3),
            unit(1.0, 0.2, 0.0),
            unit(0.0, -0.7, 0.7),
            unit(0.4, 0.4, 0.1),
        );
        let b = bell_operator(&s);
        assert!(b.trace().abs() < 1e-12);
        assert!(partial_trace_op(&b, Subsystem::A).max_abs() < 1e-12);
        assert!(partial_trace_op(&b, Subsystem::B).max_abs() < 1e-12);
    }

    #[test]
    fn chsh_examples() {
        let singlet = PureState::singlet().projector();
        let s = MeasurementScheme::new(
            BlochVector::Z,
            BlochVector::X,
            unit(-1.0, 0.0, -1.0),
            unit(1.0, 0.0, -1.0),
        );
        assert!(approx(chsh_value(&s, &singlet), 2.0 * SQRT_2, 1e-12));

        let z = BlochVector::Z;
        let s = MeasurementScheme::new(z, z, z, z);
        assert!(approx(chsh_value(&s, &PureState::basis(0).projector()), 2.0, 1e-15));

        let s = MeasurementScheme::new(unit(1.0, 2.0, 3.0), unit(-1.0, 0.5, 0.0), z, BlochVector::X);
        assert_eq!(chsh_value(&s, &DensityMatrix::maximally_mixed()), 0.0);
    }

    #[test]
    fn spectrum_examples() {
        let s = MeasurementScheme::new(
            BlochVector::Z,
            BlochVector::X,
            unit(1.0, 0.0, 1.0),
            unit(-1.0, 0.0, 1.0),
        );
        let sp = bell_spectrum(&s);
        assert!(approx(sp.sin_x, 1.0, 1e-15));
        let ev = sp.eigenvalues;
        assert!(approx(ev[0], TSIRELSON, 1e-15) && ev[1] == 0.0 && ev[2] == 0.0);
        assert!(approx(ev[3], -TSIRELSON, 1e-15));

        let s = MeasurementScheme::new(BlochVector::X, BlochVector::X, BlochVector::Z, unit(0.3, 0.0, 1.0));
        let sp = bell_spectrum(&s);
        assert_eq!(sp.sin_x, 0.0);
        assert_eq!(sp.eigenvalues, [2.0, 2.0, -2.0, -2.0]);
    }

    #[test]
    fn spectrum_eigenvectors_are_eigenvectors() {
        let s = MeasurementScheme::new(
            unit(0.3, -0.2, 0.9),
            unit(0.5, 0.5, -0.1),
            unit(-0.4, 0.8, 0.2),
            unit(0.9, 0.1, 0.3),
        );
        let sp = bell_spectrum(&s);
        let b = bell_operator(&s);
        for k in 0..4 {
            let v = sp.eigenvectors[k];
            let bv = b.mul_vec(&v);
            for i in 0..4 {
                assert!((bv[i] - v[i] * sp.eigenvalues[k]).abs() < 1e-10);
            }
        }
        assert!(sp.eigenvalues.iter().sum::<f64>().abs() < 1e-10);
    }

    #[test]
    fn square_identity_sign() {
        let s = MeasurementScheme::new(
            unit(0.3, -0.2, 0.9),
            unit(0.5, 0.5, -0.1),
            unit(-0.4, 0.8, 0.2),
            unit(0.9, 0.1, 0.3),
        );
        assert!(square_identity_residual(&s) < 1e-13);
        // The commutator term enters with a minus sign.
        let b = bell_operator(&s);
        let plus = (b * b - Matrix4::identity() * 4.0 - commutator_product(&s)).max_abs();
        assert!(plus > 0.1);
        // 𝔹² = 4I + 4 (a×a′)·σ ⊗ (b×b′)·σ
        let sig = |v: [f64; 3]| {
            let [px, py, pz] = Matrix2::paulis();
            px * v[0] + py * v[1] + pz * v[2]
        };
        let rhs = Matrix4::identity() * 4.0 + sig(s.a.cross(&s.a_prime)).kron(&sig(s.b.cross(&s.b_prime))) * 4.0;
        assert!((b * b - rhs).max_abs() < 1e-13);
    }

    #[test]
    fn eta_basis_orthonormal() {
        let eta = eta_basis();
        let ip =
            |u: &[Complex; 4], v: &[Complex; 4]| u.iter().zip(v).fold(Complex::ZERO, |acc, (x, y)| acc + x.conj() * *y);
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((ip(&eta[i], &eta[j]) - Complex::real(e)).abs() < 1e-15);
            }
        }
        // span{η₁, η₂} lives on |00⟩,|11⟩ and span{η₃, η₄} on |01⟩,|10⟩.
        for v in &eta[..2] {
            assert!(v[1] == Complex::ZERO && v[2] == Complex::ZERO);
        }
        for v in &eta[2..] {
            assert!(v[0] == Complex::ZERO && v[3] == Complex::ZERO);
        }
    }

    #[test]
    fn eta_basis_diagonalizes_rotated_operator() {
        // 4 − 4 sin x σ_y⊗σ_y has η₁, η₃ at 4(1 + sin x) and η₂, η₄ at 4(1 − sin x).
        let sx = 0.37;
        let yy = Matrix2::pauli_y().kron(&Matrix2::pauli_y());
        let sq = Matrix4::identity() * 4.0 - yy * (4.0 * sx);
        let expect = [1.0 + sx, 1.0 - sx, 1.0 + sx, 1.0 - sx].map(|v| 4.0 * v);
        for (v, lam) in eta_basis().iter().zip(expect) {
            let w = sq.mul_vec(v);
            for i in 0..4 {
                assert!((w[i] - v[i] * lam).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn landau_examples() {
        let s = MeasurementScheme::new(BlochVector::Z, BlochVector::Z, BlochVector::X, BlochVector::Z);
        assert_eq!(landau_bound(&s, &PureState::singlet().projector()), 2.0);

        // [σ_z, σ_x]⊗[σ_z, σ_x] = (2iσ_y)⊗(2iσ_y) = −4 σ_y⊗σ_y; ⟨σ_y⊗σ_y⟩ = 1 on the singlet.
        let s = MeasurementScheme::new(BlochVector::Z, BlochVector::X, BlochVector::Z, BlochVector::X);
        assert!(approx(
            landau_bound(&s, &PureState::singlet().projector()),
            TSIRELSON,
            1e-15
        ));

        let s = MeasurementScheme::new(unit(1.0, 1.0, 0.0), BlochVector::Y, BlochVector::Z, unit(0.0, 1.0, 1.0));
        assert_eq!(landau_bound(&s, &DensityMatrix::maximally_mixed()), 2.0);
    }

    #[test]
    fn analytic_examples() {
        assert!(approx(analytic_max_violation(FRAC_PI_2).unwrap(), TSIRELSON, 1e-15));
        assert!(approx(TSIRELSON, 2.8284271, 1e-7));
        assert_eq!(analytic_max_violation(0.0).unwrap(), 2.0);
        assert_eq!(analytic_max_violation(PI).unwrap(), 2.0);
        assert!(approx(analytic_max_violation(FRAC_PI_6).unwrap(), 5f64.sqrt(), 1e-15));
        assert!(analytic_max_violation(-0.01).is_err());
        assert!(analytic_max_violation(PI + 1e-9).is_err());
    }

    #[test]
    fn max_violation_examples() {
        assert!(approx(max_violation_pure(&PureState::singlet()), TSIRELSON, 1e-12));
        assert_eq!(max_violation_pure(&PureState::basis(2)), 2.0);
        let psi = PureState::new([0.5, 0.5, 0.5, -0.5].map(Complex::real)).unwrap();
        assert!(approx(max_violation_pure(&psi), TSIRELSON, 1e-12));
    }

    #[test]
    fn optimal_examples() {
        let o = optimal_settings_for(&canonical_state(FRAC_PI_2, 0.0).unwrap());
        assert!(approx(o.achieved_value, TSIRELSON, 1e-9));
        assert!(approx(o.lambda, FRAC_PI_4, 1e-12));

        let o = optimal_settings_for(&canonical_state(0.0, 0.0).unwrap());
        assert!(approx(o.achieved_value, 2.0, 1e-12));
        assert_eq!(o.lambda, 0.0);

        let psi = canonical_state(FRAC_PI_6, 0.0).unwrap();
        let o = optimal_settings_for(&psi);
        assert!(approx(o.achieved_value, 5f64.sqrt(), 1e-9));
        assert!(approx(o.scheme.sin_x(), 0.8, 1e-9));
        assert!(approx(o.achieved_value, chsh_value(&o.scheme, &psi.projector()), 0.0));
    }

    #[test]
    fn horodecki_examples() {
        let theta = 1.2;
        let m = horodecki_m(&canonical_state(theta, 0.0).unwrap().projector());
        assert!(approx(m, 1.0 + theta.sin().powi(2), 1e-14));
        assert_eq!(horodecki_m(&DensityMatrix::maximally_mixed()), 0.0);
        for p in [0.5, FRAC_1_SQRT_2, 0.8, 1.0] {
            let m = horodecki_m(&DensityMatrix::werner(p).unwrap());
            assert!(approx(m, 2.0 * p * p, 1e-14));
            assert!(approx(2.0 * m.sqrt(), TSIRELSON * p, 1e-10));
        }
    }

    #[test]
    fn negated_alice_flips_sign_and_keeps_spectrum() {
        let s = MeasurementScheme::new(
            unit(0.3, -0.2, 0.9),
            unit(0.5, 0.5, -0.1),
            unit(-0.4, 0.8, 0.2),
            unit(0.9, 0.1, 0.3),
        );
        let n = s.negate_alice();
        let rho = canonical_state(0.9, 0.3).unwrap().projector();
        assert!(approx(chsh_value(&n, &rho), -chsh_value(&s, &rho), 1e-14));
        let (e1, e2) = (
            hermitian_eigen(&bell_operator(&s)).unwrap(),
            hermitian_eigen(&bell_operator(&n)).unwrap(),
        );
        for k in 0..4 {
            assert!(approx(e1.values[k], e2.values[k], 1e-12));
        }
        assert_eq!(bell_spectrum(&s).eigenvalues, bell_spectrum(&n).eigenvalues);
    }
}

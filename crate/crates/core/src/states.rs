//! Two-qubit states: pure and mixed representations, the canonical
//! `cos(θ/2)|01⟩ + e^{iχ} sin(θ/2)|10⟩` form and Schmidt reduction to it,
//! entanglement measures, partial traces and random ensembles.

use core::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::numerics::{
    hermitian_eigen, svd2_complex, Complex, Matrix2, Matrix4, RealMatrix3, SeededRng, HERMITIAN_TOL,
};
use crate::{math, Error, Result};

/// Normalization tolerance for pure-state amplitudes.
pub const NORM_TOL: f64 = 1e-12;
/// Trace and positivity tolerance for density matrices.
pub const DENSITY_TOL: f64 = 1e-10;
/// Unitarity tolerance for local unitaries.
pub const UNITARY_TOL: f64 = 1e-12;

fn check_theta(theta: f64) -> Result<()> {
    if (0.0..=PI).contains(&theta) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "theta",
            value: theta,
        })
    }
}

/// Which qubit to keep in a partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Normalized two-qubit pure state in the `|00⟩,|01⟩,|10⟩,|11⟩` basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureState {
    amps: [Complex; 4],
}

impl PureState {
    /// Validates `Σ|amp|² = 1` within `1e-12`.
    pub fn new(amps: [Complex; 4]) -> Result<Self> {
        if !amps.iter().all(|z| z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(PureState { amps })
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    pub fn normalize(amps: [Complex; 4]) -> Result<Self> {
        if !amps.iter().all(|z| z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if norm == 0.0 {
            return Err(Error::NotNormalized { norm });
        }
        let k = 1.0 / math::sqrt(norm);
        Ok(PureState {
            amps: amps.map(|z| z * k),
        })
    }

    pub fn amplitudes(&self) -> &[Complex; 4] {
        &self.amps
    }

    /// `ψ_{ij}` arranged as a 2×2 matrix with `i` indexing qubit `a`.
    pub fn coefficient_matrix(&self) -> Matrix2 {
        let a = &self.amps;
        Matrix2::from_rows([[a[0], a[1]], [a[2], a[3]]])
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Complex {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(Complex::ZERO, |acc, (x, y)| acc + x.conj() * *y)
    }

    /// `|⟨self|other⟩|²`, insensitive to global phase.
    pub fn fidelity(&self, other: &PureState) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// `(u_a ⊗ u_b)·ψ`.
    pub fn apply_local(&self, u_a: &Matrix2, u_b: &Matrix2) -> PureState {
        PureState {
            amps: u_a.kron(u_b).mul_vec(&self.amps),
        }
    }

    pub fn projector(&self) -> DensityMatrix {
        DensityMatrix {
            m: Matrix4::outer(&self.amps, &self.amps),
        }
    }

    /// The singlet `(|01⟩ − |10⟩)/√2`.
    pub fn singlet() -> Self {
        let r = FRAC_1_SQRT_2;
        PureState {
            amps: [Complex::ZERO, Complex::real(r), Complex::real(-r), Complex::ZERO],
        }
    }

    /// Computational basis state `|ij⟩`, `index = 2i + j`.
    pub fn basis(index: usize) -> Self {
        let mut amps = [Complex::ZERO; 4];
        amps[index] = Complex::ONE;
        PureState { amps }
    }
}

/// Two-qubit density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix {
    m: Matrix4,
}

impl DensityMatrix {
    /// Validates Hermiticity, trace and eigenvalues `≥ −1e-10`.
    pub fn new(m: Matrix4) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let residual = m.hermitian_residual();
        if residual > HERMITIAN_TOL {
            return Err(Error::NotHermitian { residual });
        }
        let trace = m.trace().re;
        if (trace - 1.0).abs() > DENSITY_TOL {
            return Err(Error::TraceNotOne { trace });
        }
        let min_eigenvalue = hermitian_eigen(&m)?.values[0];
        if min_eigenvalue < -DENSITY_TOL {
            return Err(Error::NotPositive { min_eigenvalue });
        }
        Ok(DensityMatrix { m })
    }

    pub fn from_pure(psi: &PureState) -> Self {
        psi.projector()
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix {
            m: Matrix4::identity() * 0.25,
        }
    }

    /// `p·|ψ⁻⟩⟨ψ⁻| + (1 − p)·I/4` for `p ∈ [0, 1]`.
    pub fn werner(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Domain {
                what: "werner weight",
                value: p,
            });
        }
        Ok(PureState::singlet().projector().mix(&Self::maximally_mixed(), p))
    }

    /// `w·self + (1 − w)·other`; `w` is clamped to `[0, 1]`.
    pub fn mix(&self, other: &DensityMatrix, w: f64) -> DensityMatrix {
        let w = w.clamp(0.0, 1.0);
        DensityMatrix {
            m: self.m * w + other.m * (1.0 - w),
        }
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.m
    }

    /// `Tr(ρ·O)`.
    pub fn expectation(&self, op: &Matrix4) -> Complex {
        self.m.trace_product(op)
    }
}

/// Single-qubit unitary in the four-angle form
///
/// ```text
/// U(α,β,γ,δ) = e^{−iα} [ e^{i(−β/2−δ/2)} cos(γ/2)   −e^{i(−β/2+δ/2)} sin(γ/2) ]
///                      [ e^{i( β/2−δ/2)} sin(γ/2)    e^{i( β/2+δ/2)} cos(γ/2) ]
/// ```
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalUnitary {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub delta: f64,
    matrix: Matrix2,
}

impl LocalUnitary {
    pub fn from_angles(alpha: f64, beta: f64, gamma: f64, delta: f64) -> Self {
        let (c, s) = (math::cos(gamma / 2.0), math::sin(gamma / 2.0));
        let g = Complex::cis(-alpha);
        let matrix = Matrix2::from_rows([
            [
                g * Complex::cis((-beta - delta) / 2.0) * c,
                -(g * Complex::cis((-beta + delta) / 2.0) * s),
            ],
            [
                g * Complex::cis((beta - delta) / 2.0) * s,
                g * Complex::cis((beta + delta) / 2.0) * c,
            ],
        ]);
        LocalUnitary {
            alpha,
            beta,
            gamma,
            delta,
            matrix,
        }
    }

    /// Recovers `(α, β, γ, δ)` from a 2×2 unitary.
    ///
    /// `γ ∈ [0, π]`. At `γ = 0` only `β + δ` is defined and `β = δ` is
    /// chosen; at `γ = π` only `β − δ` is defined and `β = −δ` is chosen.
    /// The stored matrix is the four-angle formula evaluated at the
    /// recovered angles.
    pub fn from_matrix(u: &Matrix2) -> Result<Self> {
        if !u.is_finite() {
            return Err(Error::NonFinite);
        }
        let residual = u.unitary_residual();
        if residual > UNITARY_TOL {
            return Err(Error::NotUnitary { residual });
        }
        // det U = e^{−2iα}
        let alpha = -u.det().arg() / 2.0;
        let w = u.scale(Complex::cis(alpha));
        let gamma = 2.0 * math::atan2(w[(1, 0)].abs(), w[(0, 0)].abs());
        // arg W₁₁ = (β + δ)/2, arg W₁₀ = (β − δ)/2
        let half_sum = if w[(1, 1)].abs() > 1e-14 { w[(1, 1)].arg() } else { 0.0 };
        let half_diff = if w[(1, 0)].abs() > 1e-14 { w[(1, 0)].arg() } else { 0.0 };
        let lu = Self::from_angles(alpha, half_sum + half_diff, gamma, half_sum - half_diff);
        let residual = (lu.matrix - *u).max_abs();
        if residual > 1e-10 {
            return Err(Error::NotUnitary { residual });
        }
        Ok(lu)
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    pub fn angles(&self) -> [f64; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    /// `U†·op·U`.
    pub fn pull_back(&self, op: &Matrix2) -> Matrix2 {
        self.matrix.adjoint() * *op * self.matrix
    }
}

/// Canonical Schmidt form: `(u_a ⊗ u_b)·ψ = cos(θ/2)|01⟩ + sin(θ/2)|10⟩`.
#[derive(Clone, Copy, Debug)]
pub struct SchmidtForm {
    /// In `[0, π/2]`; the larger Schmidt coefficient is `cos(θ/2)`.
    pub theta: f64,
    /// Relative phase, always `0` in the canonical output.
    pub chi: f64,
    pub u_a: LocalUnitary,
    pub u_b: LocalUnitary,
}

impl SchmidtForm {
    pub fn canonical(&self) -> PureState {
        canonical_state(self.theta, self.chi).expect("theta within [0, π/2]")
    }

    /// `(u_a ⊗ u_b)·ψ`.
    pub fn transform(&self, psi: &PureState) -> PureState {
        psi.apply_local(self.u_a.matrix(), self.u_b.matrix())
    }
}

/// Joint Pauli expectations `t[i][j] = Tr(ρ·σ_i⊗σ_j)`, `i, j ∈ {x, y, z}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationMatrix {
    pub t: RealMatrix3,
}

impl CorrelationMatrix {
    /// `TᵀT`.
    pub fn gram(&self) -> RealMatrix3 {
        let t = &self.t;
        core::array::from_fn(|i| core::array::from_fn(|j| (0..3).map(|k| t[k][i] * t[k][j]).sum()))
    }

    /// `uᵀ·T·v`, the correlation `⟨u·σ ⊗ v·σ⟩`.
    pub fn bilinear(&self, u: &[f64; 3], v: &[f64; 3]) -> f64 {
        let mut acc = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                acc += u[i] * self.t[i][j] * v[j];
            }
        }
        acc
    }
}

/// `(0, cos(θ/2), e^{iχ} sin(θ/2), 0)` for `θ ∈ [0, π]`.
pub fn canonical_state(theta: f64, chi: f64) -> Result<PureState> {
    check_theta(theta)?;
    if !chi.is_finite() {
        return Err(Error::NonFinite);
    }
    let (c, s) = (math::cos(theta / 2.0), math::sin(theta / 2.0));
    Ok(PureState {
        amps: [Complex::ZERO, Complex::real(c), Complex::cis(chi) * s, Complex::ZERO],
    })
}

/// Reduces `ψ` to the canonical form by a product unitary.
///
/// With `C = U·diag(s₁, s₂)·V†` the amplitude matrix of `ψ`, the local
/// unitaries are `u_a = U†` and `u_b = X·Vᵀ` (`X` the bit flip), which map
/// `ψ` to `s₁|01⟩ + s₂|10⟩` exactly.
pub fn schmidt_decompose(psi: &PureState) -> SchmidtForm {
    let svd = svd2_complex(&psi.coefficient_matrix());
    let theta = 2.0 * math::atan2(svd.s[1], svd.s[0]);
    let u_a = svd.u.adjoint();
    let u_b = Matrix2::pauli_x() * svd.v.transpose();
    SchmidtForm {
        theta,
        chi: 0.0,
        u_a: LocalUnitary::from_matrix(&u_a).expect("SVD factors are unitary"),
        u_b: LocalUnitary::from_matrix(&u_b).expect("SVD factors are unitary"),
    }
}

fn binary_entropy_term(p: f64) -> f64 {
    if p <= 0.0 {
        0.0
    } else {
        -p * math::log2(p)
    }
}

/// Von Neumann entropy (bits) of either reduced state of the canonical
/// state with angle `θ`.
pub fn entanglement_entropy(theta: f64) -> Result<f64> {
    check_theta(theta)?;
    let c = math::cos(theta / 2.0);
    let s = math::sin(theta / 2.0);
    let (c2, s2) = (c * c, s * s);
    Ok(binary_entropy_term(c2) + binary_entropy_term(s2))
}

/// `|⟨ψ*|σ_y⊗σ_y|ψ⟩|`.
pub fn concurrence(psi: &PureState) -> f64 {
    let yy = Matrix2::pauli_y().kron(&Matrix2::pauli_y());
    let flipped = yy.mul_vec(psi.amplitudes());
    // ⟨ψ*| has components conj(ψ*_i) = ψ_i.
    psi.amplitudes()
        .iter()
        .zip(&flipped)
        .fold(Complex::ZERO, |acc, (a, b)| acc + *a * *b)
        .abs()
}

/// Partial trace of any 4×4 operator, keeping `keep`.
pub fn partial_trace_op(m: &Matrix4, keep: Subsystem) -> Matrix2 {
    let mut r = Matrix2::zero();
    for x in 0..2 {
        for y in 0..2 {
            for k in 0..2 {
                r[(x, y)] += match keep {
                    Subsystem::A => m[(2 * x + k, 2 * y + k)],
                    Subsystem::B => m[(2 * k + x, 2 * k + y)],
                };
            }
        }
    }
    r
}

/// Reduced single-qubit density matrix of subsystem `keep`.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> Matrix2 {
    partial_trace_op(rho.matrix(), keep)
}

/// `Tr ρ²`.
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.m.trace_product(&rho.m).re
}

fn complex_gaussian(rng: &mut SeededRng) -> Complex {
    let re = rng.gaussian();
    let im = rng.gaussian();
    Complex::new(re, im)
}

/// Haar-random pure state: four i.i.d. complex Gaussians, normalized.
pub fn random_pure(rng: &mut SeededRng) -> PureState {
    let amps = core::array::from_fn(|_| complex_gaussian(rng));
    PureState::normalize(amps).expect("Gaussian draws are almost surely nonzero")
}

/// Ginibre-ensemble density matrix `G·G†/Tr(G·G†)` with `G` of size
/// `4 × rank`.
pub fn random_density(rng: &mut SeededRng, rank: usize) -> Result<DensityMatrix> {
    if !(1..=4).contains(&rank) {
        return Err(Error::Domain {
            what: "rank",
            value: rank as f64,
        });
    }
    let mut g = Matrix4::zero();
    for i in 0..4 {
        for j in 0..rank {
            g[(i, j)] = complex_gaussian(rng);
        }
    }
    let mut m = g * g.adjoint();
    let tr = m.trace().re;
    m = m * (1.0 / tr);
    // G·G† is Hermitian up to rounding; symmetrize exactly.
    m = (m + m.adjoint()) * 0.5;
    Ok(DensityMatrix { m })
}

/// `t[i][j] = Re Tr(ρ·σ_i⊗σ_j)`.
pub fn correlation_matrix(rho: &DensityMatrix) -> CorrelationMatrix {
    let paulis = Matrix2::paulis();
    let mut t = [[0.0; 3]; 3];
    for (i, si) in paulis.iter().enumerate() {
        for (j, sj) in paulis.iter().enumerate() {
            let e = rho.expectation(&si.kron(sj));
            debug_assert!(e.im.abs() <= 1e-10, "imaginary correlation {e:?}");
            t[i][j] = e.re;
        }
    }
    CorrelationMatrix { t }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

    fn approx(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn canonical_examples() {
        let r = FRAC_1_SQRT_2;
        let psi = canonical_state(FRAC_PI_2, 0.0).unwrap();
        let a = psi.amplitudes();
        assert!(approx(a[1].re, r, 1e-15) && approx(a[2].re, r, 1e-15));
        assert_eq!(a[0], Complex::ZERO);

        let a = *canonical_state(0.0, 1.3).unwrap().amplitudes();
        assert_eq!(a[1], Complex::ONE);
        assert_eq!(a[2].abs(), 0.0);

        let a = *canonical_state(FRAC_PI_3, PI).unwrap().amplitudes();
        assert!(approx(a[1].re, 3f64.sqrt() / 2.0, 1e-15));
        assert!(approx(a[2].re, -0.5, 1e-15) && a[2].im.abs() < 1e-15);

        assert!(matches!(canonical_state(-0.1, 0.0), Err(Error::Domain { .. })));
        assert!(matches!(canonical_state(3.2, 0.0), Err(Error::Domain { .. })));
    }

    #[test]
    fn pure_state_validation() {
        let bad = [Complex::real(1.0), Complex::real(0.1), Complex::ZERO, Complex::ZERO];
        assert!(matches!(PureState::new(bad), Err(Error::NotNormalized { .. })));
        assert!(PureState::normalize(bad).is_ok());
        assert!(PureState::normalize([Complex::ZERO; 4]).is_err());
    }

    #[test]
    fn schmidt_examples() {
        let psi = canonical_state(FRAC_PI_2, 0.0).unwrap();
        let f = schmidt_decompose(&psi);
        assert!(approx(f.theta, FRAC_PI_2, 1e-12));
        assert!(f.transform(&psi).fidelity(&f.canonical()) >= 1.0 - 1e-12);

        let f = schmidt_decompose(&PureState::basis(0));
        assert_eq!(f.theta, 0.0);
        assert!(f.transform(&PureState::basis(0)).fidelity(&f.canonical()) >= 1.0 - 1e-12);

        let psi = PureState::new([
            Complex::real(0.5),
            Complex::real(0.5),
            Complex::real(0.5),
            Complex::real(-0.5),
        ])
        .unwrap();
        let f = schmidt_decompose(&psi);
        assert!(approx(f.theta, FRAC_PI_2, 1e-12));
        assert!(f.transform(&psi).fidelity(&f.canonical()) >= 1.0 - 1e-12);
    }

    #[test]
    fn schmidt_larger_coefficient_first() {
        // sin(θ/2) dominant on input; output still has θ ≤ π/2.
        let psi = canonical_state(2.5, 0.4).unwrap();
        let f = schmidt_decompose(&psi);
        assert!(approx(f.theta, PI - 2.5, 1e-12));
        assert!(f.transform(&psi).fidelity(&f.canonical()) >= 1.0 - 1e-12);
    }

    #[test]
    fn local_unitary_round_trip() {
        for &(a, b, g, d) in &[(0.3, 1.1, 0.7, -0.4), (-1.0, 2.0, 2.9, 0.5), (0.0, 0.0, 0.0, 0.0)] {
            let u = LocalUnitary::from_angles(a, b, g, d);
            assert!(u.matrix().is_unitary(1e-12));
            let back = LocalUnitary::from_matrix(u.matrix()).unwrap();
            assert!((*back.matrix() - *u.matrix()).max_abs() <= 1e-12);
        }
        // γ = 0 fixes β = δ; γ = π fixes β = −δ.
        let z = LocalUnitary::from_matrix(&Matrix2::pauli_z()).unwrap();
        assert!(approx(z.gamma, 0.0, 1e-15) && approx(z.beta, z.delta, 1e-15));
        let x = LocalUnitary::from_matrix(&Matrix2::pauli_x()).unwrap();
        assert!(approx(x.gamma, PI, 1e-15) && approx(x.beta, -x.delta, 1e-15));
        assert!((*x.matrix() - Matrix2::pauli_x()).max_abs() <= 1e-12);
        let y = LocalUnitary::from_matrix(&Matrix2::pauli_y()).unwrap();
        assert!((*y.matrix() - Matrix2::pauli_y()).max_abs() <= 1e-12);
        assert!(LocalUnitary::from_matrix(&(Matrix2::identity() * 1.1)).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert!(approx(entanglement_entropy(FRAC_PI_2).unwrap(), 1.0, 1e-15));
        assert_eq!(entanglement_entropy(0.0).unwrap(), 0.0);
        assert!(approx(entanglement_entropy(PI).unwrap(), 0.0, 1e-15));
        // −¾·log₂¾ − ¼·log₂¼
        let oracle = -0.75 * (0.75f64).log2() + 0.5;
        assert!(approx(entanglement_entropy(FRAC_PI_3).unwrap(), oracle, 1e-15));
        assert!(approx(oracle, 0.8112781, 1e-7));
        assert!(entanglement_entropy(-1e-9).is_err());
    }

    #[test]
    fn concurrence_examples() {
        assert!(approx(
            concurrence(&canonical_state(FRAC_PI_2, 0.0).unwrap()),
            1.0,
            1e-15
        ));
        assert_eq!(concurrence(&PureState::basis(0)), 0.0);
        assert!(approx(
            concurrence(&canonical_state(FRAC_PI_6, 0.7).unwrap()),
            0.5,
            1e-15
        ));
    }

    #[test]
    fn partial_trace_examples() {
        let (theta, chi) = (1.1, 0.6);
        let rho = canonical_state(theta, chi).unwrap().projector();
        let ra = partial_trace(&rho, Subsystem::A);
        let c2 = (theta / 2.0).cos().powi(2);
        assert!((ra - Matrix2::diag([c2, 1.0 - c2])).max_abs() < 1e-15);

        let rb = partial_trace(&DensityMatrix::maximally_mixed(), Subsystem::B);
        assert_eq!(rb, Matrix2::identity() * 0.5);

        let r00 = partial_trace(&PureState::basis(0).projector(), Subsystem::A);
        assert_eq!(r00, Matrix2::diag([1.0, 0.0]));

        // Keep b on |01⟩ gives |1⟩⟨1|.
        let r01 = partial_trace(&PureState::basis(1).projector(), Subsystem::B);
        assert_eq!(r01, Matrix2::diag([0.0, 1.0]));
    }

    #[test]
    fn purity_examples() {
        assert!(approx(purity(&PureState::singlet().projector()), 1.0, 1e-15));
        assert!(approx(purity(&DensityMatrix::maximally_mixed()), 0.25, 1e-15));
        // 0.8|Φ⟩⟨Φ| + 0.2·I/4: Tr ρ² = 0.64 + 2·0.8·0.2/4 + 0.04/4 = 0.73
        let phi = canonical_state(0.9, 0.2).unwrap().projector();
        let rho = phi.mix(&DensityMatrix::maximally_mixed(), 0.8);
        assert!(approx(purity(&rho), 0.73, 1e-14));
    }

    #[test]
    fn density_validation() {
        assert!(DensityMatrix::new(Matrix4::identity() * 0.25).is_ok());
        assert!(matches!(
            DensityMatrix::new(Matrix4::identity() * 0.3),
            Err(Error::TraceNotOne { .. })
        ));
        assert!(matches!(
            DensityMatrix::new(Matrix4::diag([1.2, -0.2, 0.0, 0.0])),
            Err(Error::NotPositive { .. })
        ));
        let mut m = Matrix4::identity() * 0.25;
        m[(0, 1)] = Complex::new(0.0, 0.1);
        assert!(matches!(DensityMatrix::new(m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn random_density_ranks() {
        let mut rng = SeededRng::new(3);
        let r1 = random_density(&mut rng, 1).unwrap();
        assert!(approx(purity(&r1), 1.0, 1e-10));
        let r4 = random_density(&mut rng, 4).unwrap();
        assert!(purity(&r4) < 1.0);
        assert!(DensityMatrix::new(*r4.matrix()).is_ok());
        assert!(matches!(random_density(&mut rng, 0), Err(Error::Domain { .. })));
        assert!(matches!(random_density(&mut rng, 5), Err(Error::Domain { .. })));
    }

    #[test]
    fn correlation_examples() {
        let theta = 0.8;
        let t = correlation_matrix(&canonical_state(theta, 0.0).unwrap().projector()).t;
        let s = theta.sin();
        let expect = [[s, 0.0, 0.0], [0.0, s, 0.0], [0.0, 0.0, -1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!(approx(t[i][j], expect[i][j], 1e-15), "{t:?}");
            }
        }
        let t0 = correlation_matrix(&DensityMatrix::maximally_mixed()).t;
        assert!(t0.iter().flatten().all(|x| *x == 0.0));

        let t = correlation_matrix(&DensityMatrix::werner(0.5).unwrap()).t;
        for i in 0..3 {
            for j in 0..3 {
                let e = if i == j { -0.5 } else { 0.0 };
                assert!(approx(t[i][j], e, 1e-15));
            }
        }
    }
}

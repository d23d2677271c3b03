use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong in the numeric kernel and the state/Bell
/// constructors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A complex or real component was NaN or infinite.
    NonFinite,
    /// `max |H_ij − conj(H_ji)|` exceeded the Hermiticity tolerance.
    NotHermitian { residual: f64 },
    /// `max |S_ij − S_ji|` exceeded the symmetry tolerance.
    NotSymmetric { residual: f64 },
    /// Jacobi iteration hit its sweep cap.
    NoConvergence { sweeps: usize },
    /// A Bloch vector was not of unit length.
    NotUnit { norm: f64 },
    /// Pure-state amplitudes were not normalized.
    NotNormalized { norm: f64 },
    /// A 2×2 matrix was not unitary.
    NotUnitary { residual: f64 },
    /// A density matrix had trace different from one.
    TraceNotOne { trace: f64 },
    /// A density matrix had a negative eigenvalue.
    NotPositive { min_eigenvalue: f64 },
    /// An argument was outside its documented domain.
    Domain { what: &'static str, value: f64 },
    /// An optimizer setting was out of range.
    InvalidConfig { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NonFinite => write!(f, "non-finite component"),
            Error::NotHermitian { residual } => {
                write!(f, "matrix is not Hermitian (residual {residual:e})")
            }
            Error::NotSymmetric { residual } => {
                write!(f, "matrix is not symmetric (residual {residual:e})")
            }
            Error::NoConvergence { sweeps } => {
                write!(f, "eigensolver did not converge after {sweeps} sweeps")
            }
            Error::NotUnit { norm } => write!(f, "Bloch vector has norm {norm}, expected 1"),
            Error::NotNormalized { norm } => {
                write!(f, "state has squared norm {norm}, expected 1")
            }
            Error::NotUnitary { residual } => {
                write!(f, "matrix is not unitary (residual {residual:e})")
            }
            Error::TraceNotOne { trace } => write!(f, "density matrix has trace {trace}"),
            Error::NotPositive { min_eigenvalue } => {
                write!(f, "density matrix has negative eigenvalue {min_eigenvalue:e}")
            }
            Error::Domain { what, value } => write!(f, "{what} out of domain: {value}"),
            Error::InvalidConfig { what } => write!(f, "invalid optimizer config: {what}"),
        }
    }
}

impl core::error::Error for Error {}

//! JSON state files.
//!
//! ```text
//! {"kind":"pure","amplitudes":[[re,im],[re,im],[re,im],[re,im]]}
//! {"kind":"density","matrix":[[[re,im],…×4],…×4]}
//! ```
//!
//! Amplitudes are in basis order `|00⟩,|01⟩,|10⟩,|11⟩`; the density matrix
//! is row-major.

use std::fs;
use std::path::Path;

use chsh_core::{Complex, DensityMatrix, Matrix4, PureState};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StateFile {
    Pure { amplitudes: [[f64; 2]; 4] },
    Density { matrix: [[[f64; 2]; 4]; 4] },
}

/// A validated state read from a file.
#[derive(Clone, Copy, Debug)]
pub enum State {
    Pure(PureState),
    Density(DensityMatrix),
}

impl State {
    pub fn density(&self) -> DensityMatrix {
        match self {
            State::Pure(psi) => psi.projector(),
            State::Density(rho) => *rho,
        }
    }

    pub fn pure(&self) -> Result<PureState, CliError> {
        match self {
            State::Pure(psi) => Ok(*psi),
            State::Density(_) => Err(CliError::Validation("this command needs a pure state file".into())),
        }
    }
}

fn pair(z: Complex) -> [f64; 2] {
    [z.re, z.im]
}

fn complex([re, im]: [f64; 2]) -> chsh_core::Result<Complex> {
    Complex::try_new(re, im)
}

impl StateFile {
    pub fn from_pure(psi: &PureState) -> Self {
        StateFile::Pure {
            amplitudes: psi.amplitudes().map(pair),
        }
    }

    pub fn from_density(rho: &DensityMatrix) -> Self {
        StateFile::Density {
            matrix: rho.matrix().rows().map(|row| row.map(pair)),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain arrays always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_owned(),
            source,
        })?;
        Self::from_json(&text).map_err(|source| CliError::Parse {
            path: path.to_owned(),
            source,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), CliError> {
        fs::write(path, self.to_json() + "\n").map_err(|source| CliError::Write {
            path: path.to_owned(),
            source,
        })
    }

    /// Runs the core validators (normalization; Hermiticity, trace and
    /// positivity).
    pub fn validate(&self) -> chsh_core::Result<State> {
        match self {
            StateFile::Pure { amplitudes } => {
                let mut amps = [Complex::ZERO; 4];
                for (z, p) in amps.iter_mut().zip(amplitudes) {
                    *z = complex(*p)?;
                }
                PureState::new(amps).map(State::Pure)
            }
            StateFile::Density { matrix } => {
                let mut m = Matrix4::zero();
                for i in 0..4 {
                    for j in 0..4 {
                        m[(i, j)] = complex(matrix[i][j])?;
                    }
                }
                DensityMatrix::new(m).map(State::Density)
            }
        }
    }
}

/// Reads and validates a state file.
pub fn read_state(path: &Path) -> Result<State, CliError> {
    Ok(StateFile::load(path)?.validate()?)
}

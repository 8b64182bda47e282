//! File formats.
//!
//! * probability vectors: JSON array, or CSV with one value per line
//! * density matrices: `{"dim": N, "re": [[…]], "im": [[…]]}`, row-major
//! * direction grids: JSON array of `{"theta", "phi", "psi"?}`

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classical::ProbabilityVector;
use crate::error::{Error, Result};
use crate::quantum::DensityMatrix;
use crate::tomography::Direction;

pub fn parse_probability(text: &str) -> Result<ProbabilityVector> {
    let trimmed = text.trim_start();
    let values: Vec<f64> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed)?
    } else {
        trimmed
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| {
                l.trim_end_matches(',')
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("bad probability value '{l}'")))
            })
            .collect::<Result<_>>()?
    };
    ProbabilityVector::new(values)
}

pub fn read_probability(path: &Path) -> Result<ProbabilityVector> {
    parse_probability(&fs::read_to_string(path)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrixFile {
    pub dim: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default)]
    pub im: Vec<Vec<f64>>,
}

impl DensityMatrixFile {
    pub fn from_matrix(d: &DensityMatrix) -> Self {
        let n = d.dim();
        let m = d.matrix();
        Self {
            dim: n,
            re: (0..n).map(|i| (0..n).map(|j| m[(i, j)].re).collect()).collect(),
            im: (0..n).map(|i| (0..n).map(|j| m[(i, j)].im).collect()).collect(),
        }
    }

    /// Checks the shape and validates the matrix.
    pub fn into_matrix(self) -> Result<DensityMatrix> {
        let n = self.dim;
        let shape_ok = |rows: &Vec<Vec<f64>>| rows.len() == n && rows.iter().all(|r| r.len() == n);
        if !shape_ok(&self.re) {
            return Err(Error::Parse(format!("'re' must be {n}x{n}")));
        }
        if !self.im.is_empty() && !shape_ok(&self.im) {
            return Err(Error::Parse(format!("'im' must be {n}x{n} or absent")));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let im = if self.im.is_empty() { 0.0 } else { self.im[i][j] };
                entries.push(Complex64::new(self.re[i][j], im));
            }
        }
        DensityMatrix::from_rows(n, &entries)
    }
}

pub fn parse_density_matrix(text: &str) -> Result<DensityMatrix> {
    serde_json::from_str::<DensityMatrixFile>(text)?.into_matrix()
}

pub fn read_density_matrix(path: &Path) -> Result<DensityMatrix> {
    parse_density_matrix(&fs::read_to_string(path)?)
}

/// Serialized with shortest round-trip float formatting, so reading the
/// output back reproduces every entry bit for bit.
pub fn density_matrix_json(d: &DensityMatrix) -> String {
    serde_json::to_string(&DensityMatrixFile::from_matrix(d)).expect("plain data serializes")
}

pub fn parse_grid(text: &str) -> Result<Vec<Direction>> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_grid(path: &Path) -> Result<Vec<Direction>> {
    parse_grid(&fs::read_to_string(path)?)
}

//! The partition map between a flat index `y ∈ 1..=N` and a multi-index
//! `(x₁, …, x_M)` with `x_k ∈ 1..=X_k` and `N = ∏ X_k`.
//!
//! The first coordinate varies fastest:
//!
//! ```text
//! y = x₁ + Σ_{k≥2} (x_k − 1) · X₁ ⋯ X_{k−1}
//! ```
//!
//! Everything public is 1-based. The `*_zero_based` helpers expose the raw
//! mixed-radix digits for the numerical kernels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ordered subsystem dimensions `(X₁, …, X_M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Factorization {
    dims: Vec<usize>,
    total: usize,
}

impl Factorization {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidFactorization("no factors given".into()));
        }
        if let Some(pos) = dims.iter().position(|&d| d == 0) {
            return Err(Error::InvalidFactorization(format!(
                "factor {} is zero",
                pos + 1
            )));
        }
        let total = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .ok_or_else(|| Error::InvalidFactorization("product overflows".into()))?;
        Ok(Self { dims, total })
    }

    /// Parses a comma-separated list such as `2,3,2`.
    pub fn parse(list: &str) -> Result<Self> {
        let dims = list
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad dimension '{}' in '{list}'", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dims)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `N`, the size of the flat index space.
    pub fn total(&self) -> usize {
        self.total
    }

    /// `M`, the number of artificial subsystems.
    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    /// A single factor carries no correlation structure.
    pub fn is_trivial(&self) -> bool {
        self.dims.len() < 2
    }

    pub fn ensure_total(&self, n: usize) -> Result<()> {
        if self.total != n {
            return Err(Error::DimensionMismatch {
                expected: self.total,
                found: n,
            });
        }
        Ok(())
    }

    /// Flat index `y` of a 1-based multi-index.
    pub fn compose(&self, coords: &[usize]) -> Result<usize> {
        if coords.len() != self.dims.len() {
            return Err(Error::DimensionMismatch {
                expected: self.dims.len(),
                found: coords.len(),
            });
        }
        let mut y = 0usize;
        let mut stride = 1usize;
        for (axis, (&x, &dim)) in coords.iter().zip(&self.dims).enumerate() {
            if x == 0 || x > dim {
                return Err(Error::CoordinateOutOfRange {
                    axis: axis + 1,
                    value: x,
                    max: dim,
                });
            }
            y += (x - 1) * stride;
            stride *= dim;
        }
        Ok(y + 1)
    }

    /// Inverse of [`compose`](Self::compose).
    pub fn decompose(&self, y: usize) -> Result<MultiIndex> {
        if y == 0 || y > self.total {
            return Err(Error::IndexOutOfRange {
                index: y,
                total: self.total,
            });
        }
        let mut digits = vec![0; self.dims.len()];
        self.digits_zero_based(y - 1, &mut digits);
        Ok(MultiIndex(digits.into_iter().map(|d| d + 1).collect()))
    }

    /// Mixed-radix digits of a 0-based flat index, first axis fastest.
    pub fn digits_zero_based(&self, mut flat: usize, out: &mut [usize]) {
        debug_assert_eq!(out.len(), self.dims.len());
        for (slot, &dim) in out.iter_mut().zip(&self.dims) {
            *slot = flat % dim;
            flat /= dim;
        }
    }

    /// 0-based flat index of 0-based digits.
    pub fn flat_zero_based(&self, digits: &[usize]) -> usize {
        let mut flat = 0;
        let mut stride = 1;
        for (&d, &dim) in digits.iter().zip(&self.dims) {
            flat += d * stride;
            stride *= dim;
        }
        flat
    }

    /// The factorization restricted to a subset of axes (1-based, ascending).
    pub fn restrict(&self, axes: &[usize]) -> Result<Factorization> {
        Factorization::new(axes.iter().map(|&a| self.dims[a - 1]).collect())
    }

    /// Checks a 1-based axis list: nonempty, in range, strictly ascending.
    pub(crate) fn check_axes(&self, axes: &[usize]) -> Result<()> {
        if axes.is_empty() {
            return Err(Error::Usage("axis set must be nonempty".into()));
        }
        for &a in axes {
            if a == 0 || a > self.arity() {
                return Err(Error::Usage(format!(
                    "axis {a} not in 1..={}",
                    self.arity()
                )));
            }
        }
        if axes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Usage(format!(
                "axes {axes:?} must be strictly ascending without repeats"
            )));
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Factorization {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        Factorization::new(dims)
    }
}

impl From<Factorization> for Vec<usize> {
    fn from(f: Factorization) -> Self {
        f.dims
    }
}

/// 1-based coordinates `(x₁, …, x_M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn coords(&self) -> &[usize] {
        &self.0
    }
}

/// Bipartition of a factorization into the first `s` factors and the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuditSplit {
    factorization: Factorization,
    s: usize,
    dim_left: usize,
    dim_right: usize,
}

impl QuditSplit {
    pub fn new(factorization: Factorization, s: usize) -> Result<Self> {
        let m = factorization.arity();
        if s == 0 || s >= m {
            return Err(Error::InvalidSplit { s, m });
        }
        let dim_left = factorization.dims()[..s].iter().product();
        let dim_right = factorization.dims()[s..].iter().product();
        Ok(Self {
            factorization,
            s,
            dim_left,
            dim_right,
        })
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn dim_left(&self) -> usize {
        self.dim_left
    }

    pub fn dim_right(&self) -> usize {
        self.dim_right
    }

    /// 1-based axes of the leading block.
    pub fn left_axes(&self) -> Vec<usize> {
        (1..=self.s).collect()
    }

    /// 1-based axes of the trailing block.
    pub fn right_axes(&self) -> Vec<usize> {
        (self.s + 1..=self.factorization.arity()).collect()
    }

    /// Composite indices `(a, b)` of the two blocks for flat index `y`.
    pub fn split_index(&self, y: usize) -> Result<(usize, usize)> {
        let n = self.factorization.total();
        if y == 0 || y > n {
            return Err(Error::IndexOutOfRange { index: y, total: n });
        }
        let (a, b) = self.split_zero_based(y - 1);
        Ok((a + 1, b + 1))
    }

    /// Leading axes vary fastest, so the leading block is the low part of the
    /// mixed-radix number.
    pub fn split_zero_based(&self, flat: usize) -> (usize, usize) {
        (flat % self.dim_left, flat / self.dim_left)
    }

    pub fn join_zero_based(&self, a: usize, b: usize) -> usize {
        a + b * self.dim_left
    }
}

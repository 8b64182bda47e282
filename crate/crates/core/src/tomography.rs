//! Spin tomograms `w(m|n) = ⟨m| u ρ u† |m⟩` and their hidden-correlation
//! diagnostics.
//!
//! States and rotations live in the `|m⟩` basis with `m = j, j−1, …, −j`.
//! Tables are relabeled `m = −j → 1, …, m = j → 2j+1` before any partition map
//! is applied; [`TomogramTable`] owns that reversal.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classical::{
    relative_entropy_tsallis, shannon_entropy, tsallis_entropy, JointView, ProbabilityVector,
    TsallisParam,
};
use crate::error::{Error, Result};
use crate::partition::{Factorization, QuditSplit};
use crate::quantum::{CMatrix, DensityMatrix};
use crate::tol;

/// Euler angles. Tomograms depend only on `theta` and `phi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction {
    pub theta: f64,
    pub phi: f64,
    #[serde(default)]
    pub psi: f64,
}

impl Direction {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi, psi: 0.0 }
    }

    pub fn with_psi(self, psi: f64) -> Self {
        Self { psi, ..self }
    }

    /// Unit vector `(cos φ sin θ, sin φ sin θ, cos θ)`.
    pub fn unit_vector(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [cp * st, sp * st, ct]
    }
}

/// Spin quantum number stored as `2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Spin(u32);

impl Spin {
    pub fn from_twice(twice_j: u32) -> Result<Self> {
        if twice_j == 0 {
            return Err(Error::Usage("spin must be at least 1/2".into()));
        }
        Ok(Self(twice_j))
    }

    /// The spin whose multiplicity `2j + 1` equals `dim`.
    pub fn from_dim(dim: usize) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Usage(format!("spin multiplicity must be >= 2, got {dim}")));
        }
        Self::from_twice((dim - 1) as u32)
    }

    pub fn j(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub fn dim(self) -> usize {
        self.0 as usize + 1
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Angular-momentum matrices for one spin in the `m`-descending basis.
#[derive(Debug, Clone)]
pub struct SpinRep {
    spin: Spin,
    jx: CMatrix,
    jy: CMatrix,
    jz: CMatrix,
    /// Eigenvectors and eigenvalues of `J_y`, for `exp(iθJ_y)`.
    jy_vectors: CMatrix,
    jy_values: Vec<f64>,
}

impl SpinRep {
    pub fn new(spin: Spin) -> Self {
        let n = spin.dim();
        let j = spin.j();
        let m = |k: usize| j - k as f64;
        let mut raise = CMatrix::zeros(n, n);
        for k in 0..n - 1 {
            // J₊|m⟩ = √(j(j+1) − m(m+1)) |m+1⟩, and |m+1⟩ sits one row up
            let mk = m(k + 1);
            raise[(k, k + 1)] = Complex64::new((j * (j + 1.0) - mk * (mk + 1.0)).sqrt(), 0.0);
        }
        let lower = raise.adjoint();
        let jx = (&raise + &lower).map(|z| z * 0.5);
        let jy = (&raise - &lower).map(|z| z * Complex64::new(0.0, -0.5));
        let jz = CMatrix::from_fn(n, n, |r, c| {
            if r == c {
                Complex64::new(m(r), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let eig = jy.clone().symmetric_eigen();
        Self {
            spin,
            jx,
            jy,
            jz,
            jy_vectors: eig.eigenvectors,
            jy_values: eig.eigenvalues.iter().copied().collect(),
        }
    }

    pub fn spin(&self) -> Spin {
        self.spin
    }

    pub fn dim(&self) -> usize {
        self.spin.dim()
    }

    pub fn jx(&self) -> &CMatrix {
        &self.jx
    }

    pub fn jy(&self) -> &CMatrix {
        &self.jy
    }

    pub fn jz(&self) -> &CMatrix {
        &self.jz
    }

    fn exp_i_jz(&self, angle: f64) -> CMatrix {
        let n = self.dim();
        let j = self.spin.j();
        CMatrix::from_fn(n, n, |r, c| {
            if r == c {
                Complex64::from_polar(1.0, angle * (j - r as f64))
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    fn exp_i_jy(&self, angle: f64) -> CMatrix {
        let phases = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            self.dim(),
            self.jy_values.iter().map(|&l| Complex64::from_polar(1.0, angle * l)),
        ));
        &self.jy_vectors * phases * self.jy_vectors.adjoint()
    }
}

/// `u(φ, θ, ψ) = exp(iψJ_z) · exp(iθJ_y) · exp(iφJ_z)`. For `j = 1/2` this is
/// the matrix
///
/// ```text
/// ⎛  cos(θ/2) e^{ i(ψ+φ)/2}   sin(θ/2) e^{ i(ψ−φ)/2} ⎞
/// ⎝ −sin(θ/2) e^{−i(ψ−φ)/2}   cos(θ/2) e^{−i(ψ+φ)/2} ⎠
/// ```
pub fn rotation_matrix(rep: &SpinRep, d: Direction) -> CMatrix {
    rep.exp_i_jz(d.psi) * rep.exp_i_jy(d.theta) * rep.exp_i_jz(d.phi)
}

/// `w(m|n)` relabeled so that index 1 is `m = −j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TomogramTable {
    pub direction: Direction,
    values: Vec<f64>,
}

impl TomogramTable {
    /// Builds a table from `w` in the `m`-descending storage order.
    pub fn from_descending(direction: Direction, mut descending: Vec<f64>) -> Result<Self> {
        descending.reverse();
        let values = ProbabilityVector::with_tolerance(descending, tol::TOMOGRAM)?.into_inner();
        Ok(Self { direction, values })
    }

    /// Builds a table from values already in `y` order.
    pub fn from_y_order(direction: Direction, values: Vec<f64>) -> Result<Self> {
        let values = ProbabilityVector::with_tolerance(values, tol::TOMOGRAM)?.into_inner();
        Ok(Self { direction, values })
    }

    /// `P(y|n)`, `y = 1..=2j+1`.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `w(m|n)` for a projection `m` given as `2m`.
    pub fn at_twice_m(&self, twice_m: i32) -> f64 {
        let n = self.values.len() as i32;
        self.values[((twice_m + n - 1) / 2) as usize]
    }

    pub fn as_probability(&self) -> ProbabilityVector {
        ProbabilityVector::from_weights(self.values.clone()).expect("table is normalized")
    }
}

/// Diagonal of `u ρ u†` for a state in the `m`-descending basis.
pub fn tomogram(d: &DensityMatrix, rep: &SpinRep, dir: Direction) -> Result<TomogramTable> {
    if d.dim() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            found: d.dim(),
        });
    }
    let u = rotation_matrix(rep, dir);
    let n = rep.dim();
    let rho = d.matrix();
    let mut diag = Vec::with_capacity(n);
    for m in 0..n {
        // ⟨m|uρu†|m⟩ = Σ_{k,l} u_{mk} ρ_{kl} conj(u_{ml})
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..n {
            let mut row = Complex64::new(0.0, 0.0);
            for l in 0..n {
                row += rho[(k, l)] * u[(m, l)].conj();
            }
            acc += u[(m, k)] * row;
        }
        diag.push(acc.re);
    }
    TomogramTable::from_descending(dir, diag)
}

fn two_factor_view<'a>(
    p: &'a ProbabilityVector,
    f: &'a Factorization,
) -> Result<JointView<'a>> {
    if f.arity() != 2 {
        return Err(Error::Usage(format!(
            "tomographic analysis needs two factors, got {}",
            f.arity()
        )));
    }
    JointView::new(p, f)
}

/// `(P₁(x₁|n), P₂(x₂|n))`.
pub fn tomographic_marginals(
    t: &TomogramTable,
    f: &Factorization,
) -> Result<(ProbabilityVector, ProbabilityVector)> {
    let p = t.as_probability();
    let view = two_factor_view(&p, f)?;
    Ok((view.marginal(&[1])?, view.marginal(&[2])?))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TomographicTsallisReport {
    pub q: f64,
    pub s_q1: f64,
    pub s_q2: f64,
    pub s_q: f64,
    pub subadditivity_holds: bool,
    pub tolerance: f64,
}

/// Tsallis entropies of both marginals and of the whole tomogram.
pub fn tomographic_tsallis_report(
    t: &TomogramTable,
    f: &Factorization,
    tq: TsallisParam,
) -> Result<TomographicTsallisReport> {
    let (p1, p2) = tomographic_marginals(t, f)?;
    let s_q1 = tsallis_entropy(&p1, tq);
    let s_q2 = tsallis_entropy(&p2, tq);
    let s_q = tsallis_entropy(&t.as_probability(), tq);
    Ok(TomographicTsallisReport {
        q: tq.q(),
        s_q1,
        s_q2,
        s_q,
        subadditivity_holds: s_q1 + s_q2 - s_q >= -tol::INEQUALITY,
        tolerance: tol::INEQUALITY,
    })
}

/// Tsallis relative entropy between two marginals of equal size, possibly
/// from different directions. Needs `q > 1`.
pub fn tomographic_tsallis_relative(
    first: &ProbabilityVector,
    second: &ProbabilityVector,
    tq: TsallisParam,
) -> Result<f64> {
    if first.len() != second.len() {
        return Err(Error::Usage(format!(
            "tomographic relative entropy requires X1 = X2, got {} and {}",
            first.len(),
            second.len()
        )));
    }
    if tq.q() <= 1.0 {
        return Err(Error::Usage(format!(
            "tomographic relative entropy needs q > 1, got {}",
            tq.q()
        )));
    }
    relative_entropy_tsallis(first, second, tq)
}

/// `I(n) = S₁ + S₂ − S` for the tomogram read through `f`.
pub fn mutual_tomographic_information(t: &TomogramTable, f: &Factorization) -> Result<f64> {
    let p = t.as_probability();
    let view = two_factor_view(&p, f)?;
    let split = QuditSplit::new(f.clone(), 1)?;
    Ok(crate::classical::subadditivity_report(&view, &split)?.mutual_info)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectionRecord {
    pub index: usize,
    pub direction: Direction,
    pub tomogram: Vec<f64>,
    pub mutual_information: f64,
    pub mutual_information_holds: bool,
    pub tsallis: Vec<TomographicTsallisReport>,
}

/// One record per grid direction, in grid order.
pub fn direction_sweep(
    d: &DensityMatrix,
    rep: &SpinRep,
    f: &Factorization,
    grid: &[Direction],
    qs: &[TsallisParam],
) -> Result<Vec<DirectionRecord>> {
    if grid.is_empty() {
        return Err(Error::Usage("direction grid is empty".into()));
    }
    f.ensure_total(rep.dim())?;
    grid.iter()
        .enumerate()
        .map(|(index, &direction)| {
            let t = tomogram(d, rep, direction)?;
            let mutual_information = mutual_tomographic_information(&t, f)?;
            let tsallis = qs
                .iter()
                .map(|&q| tomographic_tsallis_report(&t, f, q))
                .collect::<Result<Vec<_>>>()?;
            Ok(DirectionRecord {
                index,
                direction,
                tomogram: t.values,
                mutual_information,
                mutual_information_holds: mutual_information >= -tol::INEQUALITY,
                tsallis,
            })
        })
        .collect()
}

/// `shannon_entropy` of the whole table.
pub fn tomographic_entropy(t: &TomogramTable) -> f64 {
    shannon_entropy(&t.as_probability())
}

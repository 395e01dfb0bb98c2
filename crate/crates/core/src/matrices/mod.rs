//! Dense exact matrices and the ψ-extended Pascal and Fermat matrices.
//!
//! Operator-valued entries are diagonal on monomials, so a Pascal or Fermat
//! matrix with entries in the q̂_ψ calculus is materialized one eigenvalue at
//! a time: pick an [`EvalMode`], resolve it to a scalar deformation `t`, and
//! build an ordinary matrix over that field.

mod subspaces;

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::psi::{gauss_binomial, PsiFamily};
use crate::qhat::{eigen_binomial, qhat_operator};
use crate::report::{Location, Report};
use crate::scalars::{Field, Scalar};

pub use subspaces::{count_subspaces, MAX_SUBSPACE_DIM};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        ScalarMatrix { rows, cols, field, data: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = ScalarMatrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one(field);
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let data = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect();
        ScalarMatrix { rows, cols, field, data }
    }

    pub fn try_from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<Scalar>,
    ) -> Result<Self> {
        let data = (0..rows * cols).map(|idx| f(idx / cols, idx % cols)).collect::<Result<_>>()?;
        Ok(ScalarMatrix { rows, cols, field, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> ScalarMatrix {
        ScalarMatrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    fn shape(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    pub fn mul(&self, rhs: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: format!("{} rows", self.cols),
                found: rhs.shape(),
            });
        }
        let mut out = ScalarMatrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let cell = &mut out.data[i * rhs.cols + j];
                        *cell = &*cell + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &ScalarMatrix) -> Result<ScalarMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch { expected: self.shape(), found: rhs.shape() });
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Ok(ScalarMatrix { data, ..*self })
    }

    /// Multiplies row `i` by `weights[i]`, i.e. left multiplication by a
    /// diagonal matrix.
    pub fn scale_rows(&self, weights: &[Scalar]) -> Result<ScalarMatrix> {
        if weights.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: format!("{} row weights", self.rows),
                found: weights.len().to_string(),
            });
        }
        Ok(ScalarMatrix::from_fn(self.field, self.rows, self.cols, |i, j| &weights[i] * &self[(i, j)]))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: format!("vector of length {}", self.cols),
                found: v.len().to_string(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(self.field), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let grid: Vec<&[Scalar]> = (0..self.rows).map(|i| self.row(i)).collect();
        serde_json::to_string(&grid).expect("scalars serialize as strings")
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Csv => self.to_csv(),
            ExportFormat::Json => self.to_json(),
        }
    }
}

impl Index<(usize, usize)> for ScalarMatrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ScalarMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Serialize for ScalarMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let grid: Vec<&[Scalar]> = (0..self.rows).map(|i| self.row(i)).collect();
        grid.serialize(serializer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

impl fmt::Display for ExportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExportFormat::Csv => "csv",
            ExportFormat::Json => "json",
        })
    }
}

/// How operator-valued entries are turned into scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalMode {
    /// A fixed deformation `t`, e.g. `Scalar::q()` for the symbolic case.
    Scalar(Scalar),
    /// The eigenvalue `λ_m` of the q̂_ψ-mutator operator of `fam` at degree `m`.
    Eigen { family: PsiFamily, degree: usize },
}

impl EvalMode {
    pub fn symbolic() -> Self {
        EvalMode::Scalar(Scalar::q())
    }

    /// The deformation parameter this mode stands for.
    pub fn resolve(&self) -> Result<Scalar> {
        match self {
            EvalMode::Scalar(t) => Ok(t.clone()),
            EvalMode::Eigen { family, degree } => {
                Ok(qhat_operator(family, *degree)?.eval_on_monomial(*degree)?.clone())
            }
        }
    }

    /// `(n choose k)` in this mode. Scalar mode uses the division-free
    /// recurrence; eigen mode uses the operator quotient, which can fail.
    fn binomial(&self, t: &Scalar, n: usize, k: usize) -> Result<Scalar> {
        match self {
            EvalMode::Scalar(_) => Ok(gauss_binomial(n as i64, k as i64, t)),
            EvalMode::Eigen { degree, .. } => {
                eigen_binomial(n as i64, k as i64, t).ok_or(Error::NonInvertibleDenominator(*degree))
            }
        }
    }
}

/// Lower-triangular `P[x]`: entry `(i, j)` is `x^(i-j) (i choose j)_t`.
pub fn pascal_matrix(x0: &Scalar, size: usize, mode: &EvalMode) -> Result<ScalarMatrix> {
    let t = mode.resolve()?;
    let field = t.field();
    let x0 = x0.to_field(field)?;
    ScalarMatrix::try_from_fn(field, size, size, |i, j| {
        if j > i {
            return Ok(Scalar::zero(field));
        }
        Ok(x0.pow((i - j) as u32) * mode.binomial(&t, i, j)?)
    })
}

/// Symmetric `F[1]`: entry `(i, j)` is `(i+j choose j)_t`.
pub fn fermat_matrix(size: usize, mode: &EvalMode) -> Result<ScalarMatrix> {
    let t = mode.resolve()?;
    ScalarMatrix::try_from_fn(t.field(), size, size, |i, j| mode.binomial(&t, i + j, j))
}

/// Checks `F[1]_{ij} = Σ_k t^((i-k)(j-k)) (i choose k)_t (j choose k)_t`
/// entrywise for `i, j < size`.
pub fn verify_fermat_factorization(size: usize, mode: &EvalMode) -> Result<Report> {
    let t = mode.resolve()?;
    let fermat = fermat_matrix(size, mode)?;
    let pascal = pascal_matrix(&Scalar::one(t.field()), size, mode)?;
    let mut report = Report::new().param("size", size).param("t", t.to_string());
    if let EvalMode::Eigen { family, degree } = mode {
        report = report.param("family", family.to_string()).param("degree", *degree);
    }
    for i in 0..size {
        for j in 0..size {
            let sum = (0..=i.min(j)).fold(Scalar::zero(t.field()), |acc, k| {
                acc + t.pow(((i - k) * (j - k)) as u32) * &pascal[(i, k)] * &pascal[(j, k)]
            });
            report.check(Location::Entry { row: i, col: j }, sum, fermat[(i, j)].clone());
        }
    }
    Ok(report)
}

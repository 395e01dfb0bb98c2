//! The q̂_ψ-mutator operator and its diagonal functional calculus.
//!
//! On the monomial basis the mutator operator is diagonal with eigenvalue
//! `λ_m = ((m+1)_ψ - 1) / m_ψ` on `x^m`. Every operator built from it
//! (q̂_ψ-integers, factorials, binomial symbols, powers) is diagonal too and
//! is stored as its eigenvalue sequence up to a truncation degree.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrices::ScalarMatrix;
use crate::psi::PsiFamily;
use crate::scalars::{geometric_sum, Field, Scalar};

/// Operator `x^m ↦ λ_m x^m` for `0 <= m <= trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagOperator {
    field: Field,
    eigenvalues: Vec<Scalar>,
}

impl DiagOperator {
    /// Eigenvalues `λ_0, ..., λ_trunc`; all must share one field.
    pub fn from_eigenvalues(field: Field, eigenvalues: Vec<Scalar>) -> Result<Self> {
        if let Some(bad) = eigenvalues.iter().find(|s| s.field() != field) {
            return Err(Error::MixedFieldTags(field, bad.field()));
        }
        assert!(!eigenvalues.is_empty(), "operator needs at least degree 0");
        Ok(DiagOperator { field, eigenvalues })
    }

    pub fn constant(value: Scalar, trunc: usize) -> Self {
        DiagOperator { field: value.field(), eigenvalues: vec![value; trunc + 1] }
    }

    pub fn identity(field: Field, trunc: usize) -> Self {
        DiagOperator::constant(Scalar::one(field), trunc)
    }

    pub fn zero(field: Field, trunc: usize) -> Self {
        DiagOperator::constant(Scalar::zero(field), trunc)
    }

    /// The dilation `Q̂: x^m ↦ q^m x^m`, i.e. `φ(x) ↦ φ(qx)`.
    pub fn dilation(q: &Scalar, trunc: usize) -> Self {
        DiagOperator { field: q.field(), eigenvalues: (0..=trunc).map(|m| q.pow(m as u32)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn truncation(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    /// `λ_m`.
    pub fn eval_on_monomial(&self, m: usize) -> Result<&Scalar> {
        self.eigenvalues.get(m).ok_or(Error::DegreeOutOfRange { degree: m, trunc: self.truncation() })
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> DiagOperator {
        DiagOperator { field: self.field, eigenvalues: self.eigenvalues.iter().map(f).collect() }
    }

    fn zip_with(&self, rhs: &DiagOperator, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<DiagOperator> {
        if self.truncation() != rhs.truncation() {
            return Err(Error::DimensionMismatch {
                expected: format!("truncation {}", self.truncation()),
                found: format!("truncation {}", rhs.truncation()),
            });
        }
        if self.field != rhs.field {
            return Err(Error::MixedFieldTags(self.field, rhs.field));
        }
        Ok(DiagOperator {
            field: self.field,
            eigenvalues: self.eigenvalues.iter().zip(&rhs.eigenvalues).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Operator product; diagonal operators commute.
    pub fn compose(&self, rhs: &DiagOperator) -> Result<DiagOperator> {
        self.zip_with(rhs, |a, b| a * b)
    }

    pub fn add(&self, rhs: &DiagOperator) -> Result<DiagOperator> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn pow(&self, exp: u32) -> DiagOperator {
        self.map(|l| l.pow(exp))
    }

    /// The `size x size` matrix on `1, x, ..., x^(size-1)`.
    pub fn to_matrix(&self, size: usize) -> Result<ScalarMatrix> {
        if size > self.eigenvalues.len() {
            return Err(Error::DegreeOutOfRange { degree: size - 1, trunc: self.truncation() });
        }
        let mut m = ScalarMatrix::zeros(self.field, size, size);
        for (i, l) in self.eigenvalues.iter().take(size).enumerate() {
            m[(i, i)] = l.clone();
        }
        Ok(m)
    }
}

impl Serialize for DiagOperator {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            degree: usize,
            eigenvalue: &'a Scalar,
        }
        let mut seq = serializer.serialize_seq(Some(self.eigenvalues.len()))?;
        for (degree, eigenvalue) in self.eigenvalues.iter().enumerate() {
            seq.serialize_element(&Entry { degree, eigenvalue })?;
        }
        seq.end()
    }
}

/// The q̂_ψ-mutator operator of `fam` up to degree `trunc`:
/// `λ_m = ((m+1)_ψ - 1) / m_ψ` for `m >= 1`. The `m = 0` formula is `0/0`;
/// `λ_0` is set to `λ_1`.
pub fn qhat_operator(fam: &PsiFamily, trunc: usize) -> Result<DiagOperator> {
    let one = Scalar::one(fam.field());
    let top = trunc.max(1);
    let mut eigenvalues = Vec::with_capacity(top + 1);
    let mut current = fam.psi_int(1)?;
    for m in 1..=top {
        let next = fam.psi_int(m + 1)?;
        eigenvalues.push((&next - &one).try_div(&current)?);
        current = next;
    }
    eigenvalues.insert(0, eigenvalues[0].clone());
    eigenvalues.truncate(trunc + 1);
    DiagOperator::from_eigenvalues(fam.field(), eigenvalues)
}

/// `n_{q̂}`: eigenvalue-wise `1 + λ + ... + λ^(n-1)`. This is the closed
/// form `(1 - λ^n)/(1 - λ)` without dividing, so `λ = 1` is fine.
pub fn op_integer(n: usize, d: &DiagOperator) -> DiagOperator {
    d.map(|l| geometric_sum(l, n))
}

/// `n_{q̂}! = n_{q̂} (n-1)_{q̂} ... 1_{q̂}`; `0_{q̂}! = 1`.
pub fn op_factorial(n: usize, d: &DiagOperator) -> DiagOperator {
    d.map(|l| factorial_at(n, l))
}

fn factorial_at(n: usize, t: &Scalar) -> Scalar {
    (1..=n).fold(Scalar::one(t.field()), |acc, j| acc * geometric_sum(t, j))
}

/// One eigenvalue of the binomial symbol: `[n]![k]!^-1[n-k]!^-1` at `t`,
/// evaluated as a falling product over `[min(k, n-k)]!`. `None` when that
/// denominator vanishes; zero outside `0 <= k <= n`.
pub fn eigen_binomial(n: i64, k: i64, t: &Scalar) -> Option<Scalar> {
    let field = t.field();
    if n < 0 || k < 0 || k > n {
        return Some(Scalar::zero(field));
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    let num = ((n - k + 1)..=n).fold(Scalar::one(field), |acc, j| acc * geometric_sum(t, j));
    num.try_div(&factorial_at(k, t)).ok()
}

/// The q̂_ψ-binomial symbol `(n choose k)_{q̂}` as a diagonal operator.
pub fn op_binomial(n: i64, k: i64, d: &DiagOperator) -> Result<DiagOperator> {
    let eigenvalues = d
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(m, l)| eigen_binomial(n, k, l).ok_or(Error::NonInvertibleDenominator(m)))
        .collect::<Result<_>>()?;
    Ok(DiagOperator { field: d.field, eigenvalues })
}

/// `[A, B]_{q̂} = AB - q̂ BA` on the monomial basis `1, x, ..., x^(n-1)`.
pub fn qhat_mutator(a: &ScalarMatrix, b: &ScalarMatrix, d: &DiagOperator) -> Result<ScalarMatrix> {
    let degrees: Vec<usize> = (0..a.rows()).collect();
    qhat_mutator_graded(a, b, d, &degrees)
}

/// `AB - q̂ BA` on a basis whose `i`-th element has x-degree `degrees[i]`;
/// `q̂` acts on each basis vector by its x-degree.
pub fn qhat_mutator_graded(
    a: &ScalarMatrix,
    b: &ScalarMatrix,
    d: &DiagOperator,
    degrees: &[usize],
) -> Result<ScalarMatrix> {
    let n = a.rows();
    for m in [a, b] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: format!("{n}x{n}"),
                found: format!("{}x{}", m.rows(), m.cols()),
            });
        }
    }
    if degrees.len() != n {
        return Err(Error::DimensionMismatch {
            expected: format!("{n} basis degrees"),
            found: degrees.len().to_string(),
        });
    }
    let weights = degrees.iter().map(|&m| d.eval_on_monomial(m).cloned()).collect::<Result<Vec<_>>>()?;
    a.mul(b)?.sub(&b.mul(a)?.scale_rows(&weights)?)
}

//! Admissible ψ-families and their scalar combinatorics.
//!
//! A family is identified by its ψ-integers `n_ψ` (with `0_ψ = 0`): the
//! classical integers, the Gauss integers `1 + q + ... + q^(n-1)` (symbolic
//! or at a rational point), the Fibonacci numbers, or a finite user table.
//! Factorials, falling factorials and binomials are built from those.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::{geometric_sum, Field, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsiFamily {
    /// `n_ψ = n`.
    Classical,
    /// `n_ψ = 1 + q + ... + q^(n-1)`; `None` keeps `q` symbolic.
    Gauss(Option<Rational>),
    /// `n_ψ = F_n` with `F_1 = F_2 = 1`.
    Fibonacci,
    /// `table[n-1] = n_ψ` for `1 <= n <= table.len()`.
    Custom(Vec<Scalar>),
}

impl PsiFamily {
    pub fn gauss_symbolic() -> Self {
        PsiFamily::Gauss(None)
    }

    pub fn gauss_at(q0: Rational) -> Self {
        PsiFamily::Gauss(Some(q0))
    }

    /// Builds a custom family from its table of `n_ψ`, `n = 1, 2, ...`.
    /// Entries must share one coefficient field.
    pub fn custom(table: Vec<Scalar>) -> Result<Self> {
        if let Some(first) = table.first() {
            if let Some(other) = table.iter().find(|s| s.field() != first.field()) {
                return Err(Error::MixedFieldTags(first.field(), other.field()));
            }
        }
        Ok(PsiFamily::Custom(table))
    }

    /// The coefficient field all of this family's quantities live in.
    pub fn field(&self) -> Field {
        match self {
            PsiFamily::Gauss(None) => Field::RatFunc,
            PsiFamily::Custom(t) => t.first().map_or(Field::Rational, Scalar::field),
            _ => Field::Rational,
        }
    }

    /// `n_ψ`. Zero at `n = 0`; an error if it vanishes for `n >= 1`.
    pub fn psi_int(&self, n: usize) -> Result<Scalar> {
        if n == 0 {
            return Ok(Scalar::zero(self.field()));
        }
        let value = match self {
            PsiFamily::Classical => Scalar::from_int(Field::Rational, n),
            PsiFamily::Gauss(None) => geometric_sum(&Scalar::q(), n),
            PsiFamily::Gauss(Some(q0)) => geometric_sum(&Scalar::Rat(q0.clone()), n),
            PsiFamily::Fibonacci => Scalar::from_int(Field::Rational, fibonacci(n)),
            PsiFamily::Custom(table) => {
                table.get(n - 1).cloned().ok_or(Error::TableExhausted { n, len: table.len() })?
            }
        };
        if value.is_zero() {
            return Err(Error::InadmissibleFamily { n });
        }
        Ok(value)
    }

    /// `n_ψ! = n_ψ (n-1)_ψ ... 1_ψ`, with `0_ψ! = 1`.
    pub fn psi_factorial(&self, n: usize) -> Result<Scalar> {
        (1..=n).try_fold(Scalar::one(self.field()), |acc, i| Ok(acc * self.psi_int(i)?))
    }

    /// `x_ψ (x-1)_ψ ... (x-k+1)_ψ`; the empty product is 1.
    pub fn psi_falling(&self, x: i64, k: usize) -> Result<Scalar> {
        let lowest = x - k as i64 + 1;
        if k > 0 && lowest < 0 {
            return Err(Error::NegativeIndex(lowest));
        }
        (0..k as i64).try_fold(Scalar::one(self.field()), |acc, i| Ok(acc * self.psi_int((x - i) as usize)?))
    }

    /// `(n choose k)_ψ = n_ψ^(k falling) / k_ψ!`, zero outside `0 <= k <= n`.
    pub fn psi_binomial(&self, n: i64, k: i64) -> Result<Scalar> {
        if n < 0 {
            return Err(Error::NegativeIndex(n));
        }
        if k < 0 || k > n {
            return Ok(Scalar::zero(self.field()));
        }
        let k = k.min(n - k) as usize;
        self.psi_falling(n, k)?.try_div(&self.psi_factorial(k)?)
    }

    /// The sequence element `ψ_n = 1 / n_ψ!`.
    pub fn psi_weight(&self, n: usize) -> Result<Scalar> {
        self.psi_factorial(n)?.inv()
    }
}

impl fmt::Display for PsiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsiFamily::Classical => f.write_str("classical"),
            PsiFamily::Gauss(None) => f.write_str("gauss"),
            PsiFamily::Gauss(Some(q0)) => write!(f, "gauss@{q0}"),
            PsiFamily::Fibonacci => f.write_str("fib"),
            PsiFamily::Custom(t) => write!(f, "custom[{}]", t.len()),
        }
    }
}

fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Gaussian binomial `(n choose k)_t` by the q-Pascal rule
/// `(n, k) = (n-1, k-1) + t^k (n-1, k)`. Division free, so it is defined
/// at every `t`; zero outside `0 <= k <= n`.
pub fn gauss_binomial(n: i64, k: i64, t: &Scalar) -> Scalar {
    let field = t.field();
    if n < 0 || k < 0 || k > n {
        return Scalar::zero(field);
    }
    let k = k as usize;
    let powers: Vec<Scalar> =
        std::iter::successors(Some(Scalar::one(field)), |p| Some(p * t)).take(k + 1).collect();
    let mut row = vec![Scalar::zero(field); k + 1];
    row[0] = Scalar::one(field);
    for m in 1..=n as usize {
        for j in (1..=k.min(m)).rev() {
            row[j] = &row[j - 1] + &(&powers[j] * &row[j]);
        }
    }
    row.swap_remove(k)
}

/// Polynomial in two commuting variables, `Σ c_{k,l} x^k y^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommPoly2 {
    field: Field,
    terms: BTreeMap<(u32, u32), Scalar>,
}

impl CommPoly2 {
    pub fn zero(field: Field) -> Self {
        CommPoly2 { field, terms: BTreeMap::new() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn add_term(&mut self, xdeg: u32, ydeg: u32, coeff: Scalar) {
        let slot = self.terms.entry((xdeg, ydeg)).or_insert_with(|| Scalar::zero(self.field));
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.remove(&(xdeg, ydeg));
        }
    }

    pub fn coeff(&self, xdeg: u32, ydeg: u32) -> Scalar {
        self.terms.get(&(xdeg, ydeg)).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    /// Nonzero terms in `(xdeg, ydeg)` lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Scalar)> {
        self.terms.iter().map(|(&(k, l), c)| (k, l, c))
    }

    pub fn mul(&self, rhs: &CommPoly2) -> CommPoly2 {
        let mut out = CommPoly2::zero(self.field);
        for (&(a, b), c) in &self.terms {
            for (&(d, e), g) in &rhs.terms {
                out.add_term(a + d, b + e, c * g);
            }
        }
        out
    }
}

impl Serialize for CommPoly2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            xdeg: u32,
            ydeg: u32,
            coeff: &'a Scalar,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (xdeg, ydeg, coeff) in self.terms() {
            seq.serialize_element(&Term { xdeg, ydeg, coeff })?;
        }
        seq.end()
    }
}

/// `(x +_ψ y)^n = Σ_k (n choose k)_ψ x^k y^(n-k)`.
pub fn psi_plus_power(fam: &PsiFamily, n: u32) -> Result<CommPoly2> {
    let mut out = CommPoly2::zero(fam.field());
    for k in 0..=n {
        out.add_term(k, n - k, fam.psi_binomial(n as i64, k as i64)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientDiff {
    pub xdeg: u32,
    pub ydeg: u32,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicativityCheck {
    pub equal: bool,
    pub first_difference: Option<CoefficientDiff>,
}

/// Compares `(x +_ψ y)^r (x +_ψ y)^s` (ordinary commuting product) with
/// `(x +_ψ y)^(r+s)`, reporting the lexicographically first differing
/// monomial.
pub fn check_psi_multiplicativity(fam: &PsiFamily, r: u32, s: u32) -> Result<MultiplicativityCheck> {
    let lhs = psi_plus_power(fam, r)?.mul(&psi_plus_power(fam, s)?);
    let rhs = psi_plus_power(fam, r + s)?;
    let first_difference = (0..=r + s)
        .map(|k| (k, r + s - k))
        .map(|(k, l)| (k, l, lhs.coeff(k, l), rhs.coeff(k, l)))
        .find(|(_, _, a, b)| a != b)
        .map(|(xdeg, ydeg, lhs, rhs)| CoefficientDiff { xdeg, ydeg, lhs, rhs });
    Ok(MultiplicativityCheck { equal: first_difference.is_none(), first_difference })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(text: &str) -> Scalar {
        Scalar::parse(text).unwrap()
    }

    #[test]
    fn psi_int_examples() {
        assert_eq!(PsiFamily::Fibonacci.psi_int(5).unwrap(), Scalar::int(5));
        assert_eq!(PsiFamily::gauss_symbolic().psi_int(3).unwrap(), qpoly("1 + q + q^2"));
        assert_eq!(PsiFamily::Classical.psi_int(7).unwrap(), Scalar::int(7));
        assert!(PsiFamily::Fibonacci.psi_int(0).unwrap().is_zero());
    }

    #[test]
    fn fibonacci_prefix() {
        let got: Vec<_> = (1..=10).map(fibonacci).collect();
        let want: Vec<BigInt> = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55].map(BigInt::from).to_vec();
        assert_eq!(got, want);
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(PsiFamily::Fibonacci.psi_factorial(5).unwrap(), Scalar::int(30));
        for fam in [PsiFamily::Classical, PsiFamily::Fibonacci, PsiFamily::gauss_symbolic()] {
            assert!(fam.psi_factorial(0).unwrap().is_one());
        }
        assert_eq!(PsiFamily::gauss_symbolic().psi_factorial(2).unwrap(), qpoly("1 + q"));
    }

    #[test]
    fn falling_examples() {
        assert_eq!(PsiFamily::Fibonacci.psi_falling(4, 2).unwrap(), Scalar::int(6));
        assert!(PsiFamily::Fibonacci.psi_falling(-3, 0).unwrap().is_one());
        assert_eq!(PsiFamily::gauss_symbolic().psi_falling(3, 3).unwrap(), qpoly("(1 + q + q^2)*(1 + q)"));
        assert_eq!(PsiFamily::Classical.psi_falling(2, 4), Err(Error::NegativeIndex(-1)));
        // Reaching 0_ψ is allowed and kills the product.
        assert!(PsiFamily::Classical.psi_falling(2, 3).unwrap().is_zero());
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(PsiFamily::Fibonacci.psi_binomial(4, 2).unwrap(), Scalar::int(6));
        assert_eq!(
            PsiFamily::gauss_symbolic().psi_binomial(4, 2).unwrap(),
            qpoly("1 + q + 2*q^2 + q^3 + q^4")
        );
        assert!(PsiFamily::Fibonacci.psi_binomial(5, -1).unwrap().is_zero());
        assert!(PsiFamily::Classical.psi_binomial(3, 4).unwrap().is_zero());
        assert_eq!(PsiFamily::Classical.psi_binomial(-1, 0), Err(Error::NegativeIndex(-1)));
    }

    #[test]
    fn custom_table_errors() {
        let fam = PsiFamily::custom(vec![Scalar::int(1), Scalar::int(0)]).unwrap();
        assert_eq!(fam.psi_int(1).unwrap(), Scalar::int(1));
        assert_eq!(fam.psi_int(2), Err(Error::InadmissibleFamily { n: 2 }));
        assert_eq!(fam.psi_int(3), Err(Error::TableExhausted { n: 3, len: 2 }));
        assert!(PsiFamily::custom(vec![Scalar::int(1), Scalar::q()]).is_err());
    }

    #[test]
    fn gauss_at_minus_one_is_inadmissible() {
        let fam = PsiFamily::gauss_at(Rational::from_integer((-1).into()));
        assert_eq!(fam.psi_int(2), Err(Error::InadmissibleFamily { n: 2 }));
    }

    #[test]
    fn weight_is_reciprocal_factorial() {
        assert_eq!(PsiFamily::Classical.psi_weight(4).unwrap(), Scalar::rational(1, 24));
    }

    #[test]
    fn plus_power_examples() {
        let two = psi_plus_power(&PsiFamily::Fibonacci, 2).unwrap();
        let coeffs: Vec<_> = two.terms().map(|(k, l, c)| (k, l, c.clone())).collect();
        assert_eq!(coeffs, vec![(0, 2, Scalar::int(1)), (1, 1, Scalar::int(1)), (2, 0, Scalar::int(1))]);
        let four = psi_plus_power(&PsiFamily::Fibonacci, 4).unwrap();
        let got: Vec<_> = (0..=4).map(|k| four.coeff(4 - k, k)).collect();
        assert_eq!(got, [1, 3, 6, 3, 1].map(Scalar::int).to_vec());
        let three = psi_plus_power(&PsiFamily::Classical, 3).unwrap();
        assert_eq!(three.coeff(2, 1), Scalar::int(3));
    }

    #[test]
    fn plus_power_json() {
        let json = serde_json::to_string(&psi_plus_power(&PsiFamily::gauss_symbolic(), 2).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"[{"xdeg":0,"ydeg":2,"coeff":"1"},{"xdeg":1,"ydeg":1,"coeff":"1 + q"},{"xdeg":2,"ydeg":0,"coeff":"1"}]"#
        );
    }

    #[test]
    fn fibonomial_non_multiplicative() {
        let check = check_psi_multiplicativity(&PsiFamily::Fibonacci, 1, 4).unwrap();
        assert!(!check.equal);
        let diff = check.first_difference.unwrap();
        // (x + y)(x^4 + 3x^3y + 6x^2y^2 + 3xy^3 + y^4) has x y^4 coefficient 4; F_5 = 5.
        assert_eq!((diff.xdeg, diff.ydeg), (1, 4));
        assert_eq!((diff.lhs, diff.rhs), (Scalar::int(4), Scalar::int(5)));
    }

    #[test]
    fn classical_and_gauss_at_one_multiplicative() {
        for r in 0..=10 {
            for s in 0..=10 - r {
                assert!(check_psi_multiplicativity(&PsiFamily::Classical, r, s).unwrap().equal);
            }
        }
        let at_one = PsiFamily::gauss_at(Rational::one());
        assert!(check_psi_multiplicativity(&at_one, 2, 3).unwrap().equal);
    }

    #[test]
    fn symmetry_and_boundary() {
        for fam in [PsiFamily::Classical, PsiFamily::Fibonacci, PsiFamily::gauss_symbolic()] {
            for n in 0..=20i64 {
                assert!(fam.psi_binomial(n, 0).unwrap().is_one());
                assert!(fam.psi_binomial(n, n).unwrap().is_one());
                for k in 0..=n {
                    assert_eq!(fam.psi_binomial(n, k).unwrap(), fam.psi_binomial(n, n - k).unwrap());
                }
            }
        }
    }

    #[test]
    fn gauss_at_one_is_classical() {
        let at_one = PsiFamily::gauss_at(Rational::one());
        for n in 0..=15 {
            for k in 0..=n {
                assert_eq!(
                    at_one.psi_binomial(n, k).unwrap(),
                    PsiFamily::Classical.psi_binomial(n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn recurrence_agrees_with_factorial_quotient() {
        let q = Scalar::q();
        for n in 0..=10 {
            for k in -1..=n + 1 {
                assert_eq!(gauss_binomial(n, k, &q), PsiFamily::gauss_symbolic().psi_binomial(n, k).unwrap());
            }
        }
        // Division-free at t = -1, where the quotient form is 0/0.
        assert_eq!(gauss_binomial(4, 2, &Scalar::int(-1)), Scalar::int(2));
    }

    /// Independent oracle: the coefficient of `q^i` in `(n choose k)_q` counts
    /// 0/1 words with `k` ones and `i` inversions.
    #[test]
    fn gauss_binomial_matches_inversion_count() {
        for n in 0..=9u32 {
            for k in 0..=n {
                let mut counts = vec![0i64; (k * (n - k) + 1) as usize];
                for word in 0u32..(1 << n) {
                    if word.count_ones() != k {
                        continue;
                    }
                    let mut inv = 0;
                    let mut ones_seen = 0;
                    for bit in 0..n {
                        if word >> bit & 1 == 1 {
                            ones_seen += 1;
                        } else {
                            inv += ones_seen;
                        }
                    }
                    counts[inv] += 1;
                }
                let want = counts
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{c}*q^{i}"))
                    .collect::<Vec<_>>()
                    .join(" + ");
                assert_eq!(gauss_binomial(n as i64, k as i64, &Scalar::q()), qpoly(&want), "n={n} k={k}");
            }
        }
    }
}

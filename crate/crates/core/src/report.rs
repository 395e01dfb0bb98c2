//! Verification reports: `{params, verdict, mismatches}`.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::scalars::Scalar;

/// Where a mismatch was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Location {
    /// Eigenvalue index of a diagonal operator.
    Degree(usize),
    /// Coefficient of `x^xdeg y^ydeg`.
    Monomial { xdeg: u32, ydeg: u32 },
    /// Matrix entry.
    Entry { row: usize, col: usize },
    /// One instance of a Cauchy-type sum, optionally at an operator degree.
    Cauchy {
        r: usize,
        s: usize,
        j: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        degree: Option<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    #[serde(flatten)]
    pub at: Location,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub params: Map<String, Value>,
    pub verdict: bool,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip)]
    pub checks: usize,
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}

impl Report {
    pub fn new() -> Self {
        Report { params: Map::new(), verdict: true, mismatches: Vec::new(), checks: 0 }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_owned(), value.into());
        self
    }

    /// Records one comparison; a difference clears the verdict.
    pub fn check(&mut self, at: Location, lhs: Scalar, rhs: Scalar) {
        self.checks += 1;
        if lhs != rhs {
            self.verdict = false;
            self.mismatches.push(Mismatch { at, lhs, rhs });
        }
    }

    /// Folds another report's comparisons into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        self.verdict &= other.verdict;
        self.mismatches.extend(other.mismatches);
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty { serde_json::to_string_pretty(self) } else { serde_json::to_string(self) }
            .expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = Report::new().param("n", 3);
        r.check(Location::Monomial { xdeg: 2, ydeg: 1 }, Scalar::int(1), Scalar::int(3));
        r.check(Location::Degree(4), Scalar::int(2), Scalar::int(2));
        assert!(!r.verdict);
        assert_eq!(r.checks, 2);
        assert_eq!(
            r.to_json(false),
            r#"{"params":{"n":3},"verdict":false,"mismatches":[{"monomial":{"xdeg":2,"ydeg":1},"lhs":"1","rhs":"3"}]}"#
        );
    }

    #[test]
    fn degree_location() {
        let m = Mismatch { at: Location::Degree(5), lhs: Scalar::int(0), rhs: Scalar::int(1) };
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"degree":5,"lhs":"0","rhs":"1"}"#);
    }
}

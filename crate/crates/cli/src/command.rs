//! Argument grammar for `psifoc`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use psifoc_core::{ExportFormat, Field, Rational, Scalar};

/// A ψ-family as written on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Classical,
    /// Symbolic `q`.
    Gauss,
    GaussAt(Rational),
    Fib,
    /// One scalar per line; line `n` holds `n_ψ`.
    Custom(PathBuf),
}

impl FromStr for FamilySpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "classical" => Ok(FamilySpec::Classical),
            "gauss" => Ok(FamilySpec::Gauss),
            "fib" => Ok(FamilySpec::Fib),
            _ => {
                if let Some(point) = s.strip_prefix("gauss@") {
                    return point
                        .parse::<Rational>()
                        .map(FamilySpec::GaussAt)
                        .map_err(|_| "rational evaluation point after gauss@".to_owned());
                }
                if let Some(path) = s.strip_prefix("custom:") {
                    if path.is_empty() {
                        return Err("file path after custom:".to_owned());
                    }
                    return Ok(FamilySpec::Custom(PathBuf::from(path)));
                }
                Err("family (classical, gauss, gauss@<rational>, fib, custom:<path>)".to_owned())
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Classical => f.write_str("classical"),
            FamilySpec::Gauss => f.write_str("gauss"),
            FamilySpec::GaussAt(q0) => write!(f, "gauss@{q0}"),
            FamilySpec::Fib => f.write_str("fib"),
            FamilySpec::Custom(path) => write!(f, "custom:{}", path.display()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    Pascal,
    Fermat,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixKind::Pascal => "pascal",
            MatrixKind::Fermat => "fermat",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Action {
    Binom {
        family: FamilySpec,
        n: i64,
        k: i64,
    },
    Fact {
        family: FamilySpec,
        n: usize,
    },
    Falling {
        family: FamilySpec,
        x: i64,
        k: usize,
    },
    Expand {
        family: FamilySpec,
        power: u32,
    },
    VerifyCauchy {
        family: FamilySpec,
        r: usize,
        s: usize,
        j: usize,
        maxdeg: Option<usize>,
    },
    VerifyFermat {
        family: FamilySpec,
        size: usize,
        maxdeg: Option<usize>,
    },
    VerifyObs1 {
        family: FamilySpec,
        n: usize,
    },
    Matrix {
        kind: MatrixKind,
        family: FamilySpec,
        size: usize,
        x: Option<Scalar>,
        eigen: Option<usize>,
        format: ExportFormat,
        out: Option<PathBuf>,
    },
    OracleSubspaces {
        q: u32,
        n: usize,
        k: usize,
    },
}

/// A parsed invocation: what to do, plus the global `--pretty` switch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub action: Action,
    pub pretty: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("argument {position}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Index into the argument list, program name excluded. Equal to the
    /// list length when input ended early.
    pub position: usize,
    pub expected: String,
    pub found: String,
}

const END: &str = "end of input";

fn err(position: usize, expected: impl Into<String>, found: impl Into<String>) -> ParseError {
    ParseError { position, expected: expected.into(), found: found.into() }
}

impl Command {
    /// Canonical argument list; `parse_command(&c.to_argv()) == Ok(c)`.
    pub fn to_argv(&self) -> Vec<String> {
        let mut v: Vec<String> = Vec::new();
        let flag = |v: &mut Vec<String>, name: &str, value: String| {
            v.push(format!("--{name}"));
            v.push(value);
        };
        match &self.action {
            Action::Binom { family, n, k } => {
                v.push("binom".into());
                flag(&mut v, "family", family.to_string());
                v.extend([n.to_string(), k.to_string()]);
            }
            Action::Fact { family, n } => {
                v.push("fact".into());
                flag(&mut v, "family", family.to_string());
                v.push(n.to_string());
            }
            Action::Falling { family, x, k } => {
                v.push("falling".into());
                flag(&mut v, "family", family.to_string());
                v.extend([x.to_string(), k.to_string()]);
            }
            Action::Expand { family, power } => {
                v.push("expand".into());
                flag(&mut v, "family", family.to_string());
                flag(&mut v, "power", power.to_string());
            }
            Action::VerifyCauchy { family, r, s, j, maxdeg } => {
                v.extend(["verify".into(), "cauchy".into()]);
                flag(&mut v, "family", family.to_string());
                flag(&mut v, "r", r.to_string());
                flag(&mut v, "s", s.to_string());
                flag(&mut v, "j", j.to_string());
                if let Some(m) = maxdeg {
                    flag(&mut v, "maxdeg", m.to_string());
                }
            }
            Action::VerifyFermat { family, size, maxdeg } => {
                v.extend(["verify".into(), "fermat".into()]);
                flag(&mut v, "family", family.to_string());
                flag(&mut v, "size", size.to_string());
                if let Some(m) = maxdeg {
                    flag(&mut v, "maxdeg", m.to_string());
                }
            }
            Action::VerifyObs1 { family, n } => {
                v.extend(["verify".into(), "obs1".into()]);
                flag(&mut v, "family", family.to_string());
                flag(&mut v, "n", n.to_string());
            }
            Action::Matrix { kind, family, size, x, eigen, format, out } => {
                v.extend(["matrix".into(), kind.to_string()]);
                flag(&mut v, "family", family.to_string());
                flag(&mut v, "size", size.to_string());
                if let Some(x) = x {
                    flag(&mut v, "x", x.to_string());
                }
                if let Some(m) = eigen {
                    flag(&mut v, "eigen", m.to_string());
                }
                flag(&mut v, "format", format.to_string());
                if let Some(path) = out {
                    flag(&mut v, "out", path.display().to_string());
                }
            }
            Action::OracleSubspaces { q, n, k } => {
                v.extend(["oracle".into(), "subspaces".into()]);
                flag(&mut v, "q", q.to_string());
                flag(&mut v, "n", n.to_string());
                flag(&mut v, "k", k.to_string());
            }
        }
        if self.pretty {
            v.push("--pretty".into());
        }
        v
    }
}

impl fmt::Display for Command {
    /// The canonical argument list joined by spaces, single-quoting any
    /// argument a POSIX shell would split or expand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let quoted: Vec<String> = self
            .to_argv()
            .into_iter()
            .map(|a| {
                let plain = !a.is_empty()
                    && a.chars().all(|c| c.is_ascii_alphanumeric() || "-_@:/.+=,^%".contains(c));
                if plain {
                    a
                } else {
                    format!("'{}'", a.replace('\'', r"'\''"))
                }
            })
            .collect();
        f.write_str(&quoted.join(" "))
    }
}

/// Flags and positionals after the verb, with their argument positions.
struct Args<'a> {
    flags: BTreeMap<&'static str, (usize, &'a str)>,
    positionals: Vec<(usize, &'a str)>,
    pretty: bool,
    end: usize,
}

fn looks_numeric(tok: &str) -> bool {
    tok.strip_prefix('-').is_some_and(|rest| rest.starts_with(|c: char| c.is_ascii_digit()))
}

fn collect<'a>(
    args: &'a [&'a str],
    start: usize,
    allowed: &[&'static str],
    pretty: bool,
) -> Result<Args<'a>, ParseError> {
    let mut out = Args { flags: BTreeMap::new(), positionals: Vec::new(), pretty, end: args.len() };
    let mut i = start;
    while i < args.len() {
        let tok = args[i];
        if tok == "--pretty" {
            out.pretty = true;
            i += 1;
            continue;
        }
        if tok.starts_with('-') && !looks_numeric(tok) {
            let name =
                tok.strip_prefix("--").and_then(|n| allowed.iter().find(|&&a| a == n)).ok_or_else(|| {
                    let list: Vec<String> = allowed.iter().map(|a| format!("--{a}")).collect();
                    err(i, format!("one of {}, --pretty", list.join(", ")), tok)
                })?;
            if out.flags.contains_key(name) {
                return Err(err(i, "each flag at most once", tok));
            }
            let value = args.get(i + 1).ok_or_else(|| err(i + 1, format!("value for --{name}"), END))?;
            out.flags.insert(name, (i + 1, value));
            i += 2;
            continue;
        }
        out.positionals.push((i, tok));
        i += 1;
    }
    Ok(out)
}

impl<'a> Args<'a> {
    fn optional<T: FromStr>(&self, name: &'static str, what: &str) -> Result<Option<T>, ParseError> {
        match self.flags.get(name) {
            None => Ok(None),
            Some(&(pos, raw)) => raw.parse().map(Some).map_err(|_| err(pos, what, raw)),
        }
    }

    fn required<T: FromStr>(&self, name: &'static str, what: &str) -> Result<T, ParseError> {
        self.optional(name, what)?.ok_or_else(|| err(self.end, format!("--{name}"), END))
    }

    fn family(&self) -> Result<FamilySpec, ParseError> {
        match self.flags.get("family") {
            None => Err(err(self.end, "--family", END)),
            Some(&(pos, raw)) => raw.parse().map_err(|what: String| err(pos, what, raw)),
        }
    }

    /// Checks there are exactly `names.len()` positionals.
    fn arity(&self, names: &[&str]) -> Result<(), ParseError> {
        if let Some(&(pos, tok)) = self.positionals.get(names.len()) {
            return Err(err(pos, "flag or end of input", tok));
        }
        match names.get(self.positionals.len()) {
            Some(name) => Err(err(self.end, *name, END)),
            None => Ok(()),
        }
    }

    fn positional<T: FromStr>(&self, index: usize, name: &str) -> Result<T, ParseError> {
        let (pos, tok) = self.positionals[index];
        tok.parse().map_err(|_| err(pos, name, tok))
    }

    fn no_positionals(&self) -> Result<(), ParseError> {
        self.positionals.first().map_or(Ok(()), |&(pos, tok)| Err(err(pos, "flag or end of input", tok)))
    }
}

const NAT: &str = "nonnegative integer";

fn parse_x(raw: &str, pos: usize) -> Result<Scalar, ParseError> {
    let x = Scalar::parse(raw).map_err(|e| err(pos, format!("scalar expression ({e})"), raw))?;
    // Constants are kept rational so the canonical text parses back to the same value.
    Ok(x.to_field(Field::Rational).unwrap_or(x))
}

/// Parses an argument list, program name excluded.
pub fn parse_command<S: AsRef<str>>(argv: &[S]) -> Result<Command, ParseError> {
    let args: Vec<&str> = argv.iter().map(AsRef::as_ref).collect();
    let mut i = 0;
    let mut pretty = false;
    while args.get(i) == Some(&"--pretty") {
        pretty = true;
        i += 1;
    }
    const VERBS: &str = "one of binom, fact, falling, expand, verify, matrix, oracle";
    let verb = *args.get(i).ok_or_else(|| err(i, VERBS, END))?;
    let sub = |choices: &'static [&'static str]| -> Result<&str, ParseError> {
        let what = format!("one of {}", choices.join(", "));
        match args.get(i + 1) {
            Some(s) if choices.contains(s) => Ok(*s),
            Some(s) => Err(err(i + 1, what, *s)),
            None => Err(err(i + 1, what, END)),
        }
    };
    let action = match verb {
        "binom" => {
            let a = collect(&args, i + 1, &["family"], pretty)?;
            let family = a.family()?;
            a.arity(&["N (integer)", "K (integer)"])?;
            pretty = a.pretty;
            Action::Binom { family, n: a.positional(0, "N (integer)")?, k: a.positional(1, "K (integer)")? }
        }
        "fact" => {
            let a = collect(&args, i + 1, &["family"], pretty)?;
            let family = a.family()?;
            a.arity(&["N (nonnegative integer)"])?;
            pretty = a.pretty;
            Action::Fact { family, n: a.positional(0, "N (nonnegative integer)")? }
        }
        "falling" => {
            let a = collect(&args, i + 1, &["family"], pretty)?;
            let family = a.family()?;
            a.arity(&["X (integer)", "K (nonnegative integer)"])?;
            pretty = a.pretty;
            Action::Falling {
                family,
                x: a.positional(0, "X (integer)")?,
                k: a.positional(1, "K (nonnegative integer)")?,
            }
        }
        "expand" => {
            let a = collect(&args, i + 1, &["family", "power"], pretty)?;
            a.no_positionals()?;
            let family = a.family()?;
            let power = a.required("power", NAT)?;
            pretty = a.pretty;
            Action::Expand { family, power }
        }
        "verify" => {
            let which = sub(&["cauchy", "fermat", "obs1"])?;
            let allowed: &[&'static str] = match which {
                "cauchy" => &["family", "r", "s", "j", "maxdeg"],
                "fermat" => &["family", "size", "maxdeg"],
                _ => &["family", "n"],
            };
            let a = collect(&args, i + 2, allowed, pretty)?;
            a.no_positionals()?;
            let family = a.family()?;
            pretty = a.pretty;
            match which {
                "cauchy" => Action::VerifyCauchy {
                    family,
                    r: a.required("r", NAT)?,
                    s: a.required("s", NAT)?,
                    j: a.required("j", NAT)?,
                    maxdeg: a.optional("maxdeg", NAT)?,
                },
                "fermat" => Action::VerifyFermat {
                    family,
                    size: a.required("size", NAT)?,
                    maxdeg: a.optional("maxdeg", NAT)?,
                },
                _ => Action::VerifyObs1 { family, n: a.required("n", NAT)? },
            }
        }
        "matrix" => {
            let kind = match sub(&["pascal", "fermat"])? {
                "pascal" => MatrixKind::Pascal,
                _ => MatrixKind::Fermat,
            };
            let a = collect(&args, i + 2, &["family", "size", "x", "eigen", "format", "out"], pretty)?;
            a.no_positionals()?;
            let family = a.family()?;
            let size = a.required("size", NAT)?;
            let x = a.flags.get("x").map(|&(pos, raw)| parse_x(raw, pos)).transpose()?;
            let eigen = a.optional("eigen", NAT)?;
            let format = match a.flags.get("format") {
                None => return Err(err(a.end, "--format", END)),
                Some(&(_, "csv")) => ExportFormat::Csv,
                Some(&(_, "json")) => ExportFormat::Json,
                Some(&(pos, raw)) => return Err(err(pos, "csv or json", raw)),
            };
            let out = a.flags.get("out").map(|&(_, raw)| PathBuf::from(raw));
            pretty = a.pretty;
            Action::Matrix { kind, family, size, x, eigen, format, out }
        }
        "oracle" => {
            sub(&["subspaces"])?;
            let a = collect(&args, i + 2, &["q", "n", "k"], pretty)?;
            a.no_positionals()?;
            pretty = a.pretty;
            Action::OracleSubspaces {
                q: a.required("q", "field size (2 or 3)")?,
                n: a.required("n", NAT)?,
                k: a.required("k", NAT)?,
            }
        }
        other => return Err(err(i, VERBS, other)),
    };
    Ok(Command { action, pretty })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(line: &str) -> Result<Command, ParseError> {
        parse_command(&line.split_whitespace().collect::<Vec<_>>())
    }

    #[test]
    fn binom_fib() {
        assert_eq!(
            parse("binom --family fib 4 2").unwrap(),
            Command { action: Action::Binom { family: FamilySpec::Fib, n: 4, k: 2 }, pretty: false }
        );
    }

    #[test]
    fn missing_k() {
        let e = parse("binom --family fib 4").unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.found, END);
        assert!(e.expected.starts_with('K'));
    }

    #[test]
    fn verify_cauchy() {
        let c = parse("verify cauchy --family gauss --r 2 --s 1 --j 1").unwrap();
        assert_eq!(
            c.action,
            Action::VerifyCauchy { family: FamilySpec::Gauss, r: 2, s: 1, j: 1, maxdeg: None }
        );
    }

    #[test]
    fn flags_in_any_order() {
        let a = parse("verify cauchy --j 1 --s 1 --r 2 --family gauss --maxdeg 4").unwrap();
        let b = parse("verify cauchy --family gauss --r 2 --s 1 --j 1 --maxdeg 4").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn family_forms() {
        assert_eq!(
            "gauss@1".parse::<FamilySpec>().unwrap(),
            FamilySpec::GaussAt(Rational::from_integer(1.into()))
        );
        assert_eq!("gauss@-6/4".parse::<FamilySpec>().unwrap().to_string(), "gauss@-3/2");
        assert_eq!("custom:a/b.txt".parse::<FamilySpec>().unwrap(), FamilySpec::Custom("a/b.txt".into()));
        assert!("gauss@".parse::<FamilySpec>().is_err());
        assert!("gauss@1/0".parse::<FamilySpec>().is_err());
        assert!("custom:".parse::<FamilySpec>().is_err());
        assert!("fibonacci".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn unknown_flag_rejected() {
        let e = parse("binom --family fib --verbose 4 2").unwrap_err();
        assert_eq!((e.position, e.found.as_str()), (3, "--verbose"));
        let e = parse("expand --family fib --power 3 --size 2").unwrap_err();
        assert_eq!(e.position, 5);
        assert!(parse("binom --family fib -v 4 2").is_err());
    }

    #[test]
    fn duplicate_flag_rejected() {
        assert_eq!(parse("expand --family fib --family gauss --power 2").unwrap_err().position, 3);
    }

    #[test]
    fn negative_positionals() {
        let c = parse("binom --family classical -3 2").unwrap();
        assert_eq!(c.action, Action::Binom { family: FamilySpec::Classical, n: -3, k: 2 });
        let c = parse("falling --family fib -2 0").unwrap();
        assert_eq!(c.action, Action::Falling { family: FamilySpec::Fib, x: -2, k: 0 });
        assert_eq!(parse("falling --family fib 3 -1").unwrap_err().position, 4);
    }

    #[test]
    fn pretty_anywhere() {
        assert!(parse("--pretty verify obs1 --family fib --n 3").unwrap().pretty);
        assert!(parse("verify obs1 --pretty --family fib --n 3").unwrap().pretty);
        assert!(!parse("verify obs1 --family fib --n 3").unwrap().pretty);
    }

    #[test]
    fn matrix_command() {
        let c = parse("matrix pascal --family gauss --size 4 --x 1/2 --format csv --out p.csv").unwrap();
        assert_eq!(
            c.action,
            Action::Matrix {
                kind: MatrixKind::Pascal,
                family: FamilySpec::Gauss,
                size: 4,
                x: Some(Scalar::rational(1, 2)),
                eigen: None,
                format: ExportFormat::Csv,
                out: Some("p.csv".into()),
            }
        );
        assert_eq!(parse("matrix fermat --family fib --size 3 --eigen 2").unwrap_err().expected, "--format");
        assert_eq!(parse("matrix fermat --family fib --size 3 --format xml").unwrap_err().position, 7);
        assert_eq!(parse("matrix lower --family fib").unwrap_err().position, 1);
    }

    #[test]
    fn oracle_command() {
        assert_eq!(
            parse("oracle subspaces --q 2 --n 4 --k 2").unwrap().action,
            Action::OracleSubspaces { q: 2, n: 4, k: 2 }
        );
        assert!(parse("oracle subspaces --q 2 --n 4").is_err());
        assert!(parse("oracle lines --q 2").is_err());
    }

    #[test]
    fn empty_and_unknown_verb() {
        assert_eq!(parse("").unwrap_err().position, 0);
        assert_eq!(parse("--pretty").unwrap_err().position, 1);
        assert_eq!(parse("bogus").unwrap_err().found, "bogus");
    }

    #[test]
    fn stray_positional() {
        assert_eq!(parse("expand --family fib --power 2 7").unwrap_err().position, 5);
        assert_eq!(parse("binom --family fib 4 2 1").unwrap_err().position, 5);
    }

    #[test]
    fn canonical_round_trip() {
        for line in [
            "binom --family fib 4 2",
            "--pretty fact --family gauss@3 5",
            "falling --family custom:t.txt -4 3",
            "expand --power 5 --family gauss",
            "verify fermat --size 8 --family fib --maxdeg 8",
            "verify obs1 --family classical --n 10",
            "matrix fermat --family fib --eigen 3 --size 3 --format json --pretty",
            "matrix pascal --family gauss --size 3 --x q^2+1 --format csv",
            "oracle subspaces --k 1 --n 3 --q 3",
        ] {
            let c = parse(line).unwrap();
            assert_eq!(parse_command(&c.to_argv()).unwrap(), c, "{line}");
        }
        let c = parse("verify cauchy --j 5 --family gauss --r 3 --s 4").unwrap();
        assert_eq!(c.to_string(), "verify cauchy --family gauss --r 3 --s 4 --j 5");
        let c = parse("matrix pascal --family gauss --size 3 --x 1+q --format csv").unwrap();
        assert_eq!(c.to_string(), "matrix pascal --family gauss --size 3 --x '1 + q' --format csv");
    }
}

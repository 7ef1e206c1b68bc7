//! The `.bb` file format.
//!
//! Line-oriented; `#` starts a comment. Recognized lines:
//!
//! ```text
//! space N R
//! let NAME = EXPR
//! theta mu=VALUE gamma=VALUE phi=VALUE psi=VALUE
//! expect classification=NAME verdict=BOOL
//! ```
//!
//! A theta component VALUE is an expression, the name of an earlier `let`
//! binding, `0`, or (for `mu` only, and only when the base dimension equals
//! the fibre rank) the keyword `derham`.

use crate::error::{Error, Result};
use crate::frontend::parse::parse_expression_at;
use crate::poly::SuperPoly;
use crate::space::GeneratorSpace;
use crate::structures::{CheckReport, Classification, StructureTheta};
use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

#[derive(Debug, Clone, Default)]
pub struct Expectation {
    pub classification: Option<Classification>,
    pub verdict: Option<bool>,
}

/// A parsed `.bb` file.
#[derive(Debug, Clone)]
pub struct SourceFile {
    pub space: GeneratorSpace,
    pub bindings: BTreeMap<String, SuperPoly>,
    pub theta: Option<StructureTheta>,
    pub expect: Expectation,
}

impl SourceFile {
    pub fn load(path: impl AsRef<Path>) -> Result<SourceFile> {
        let text = std::fs::read_to_string(path)?;
        SourceFile::parse(&text)
    }

    pub fn parse(text: &str) -> Result<SourceFile> {
        let mut space: Option<GeneratorSpace> = None;
        let mut bindings: BTreeMap<String, SuperPoly> = BTreeMap::new();
        let mut theta: Option<StructureTheta> = None;
        let mut expect = Expectation::default();

        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw_line.find('#') {
                Some(pos) => &raw_line[..pos],
                None => raw_line,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = match line.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (line, ""),
            };
            match keyword {
                "space" => {
                    let mut parts = rest.split_whitespace();
                    let n = parts
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| {
                            Error::parse(line_no, 1, "space line needs `space N R`")
                        })?;
                    let r = parts
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| {
                            Error::parse(line_no, 1, "space line needs `space N R`")
                        })?;
                    if parts.next().is_some() {
                        return Err(Error::parse(line_no, 1, "trailing input on space line"));
                    }
                    space = Some(GeneratorSpace::new(n, r));
                }
                "let" => {
                    let space = space.ok_or_else(|| {
                        Error::parse(line_no, 1, "`let` before `space` declaration")
                    })?;
                    let (name, expr_text) = rest.split_once('=').ok_or_else(|| {
                        Error::parse(line_no, 1, "let line needs `let NAME = EXPR`")
                    })?;
                    let name = name.trim();
                    if !is_valid_name(name) {
                        return Err(Error::parse(
                            line_no,
                            1,
                            format!("invalid binding name `{name}`"),
                        ));
                    }
                    if bindings.contains_key(name) {
                        return Err(Error::parse(
                            line_no,
                            1,
                            format!("binding `{name}` already defined"),
                        ));
                    }
                    let value = parse_expression_at(expr_text.trim(), space, line_no)?;
                    bindings.insert(name.to_string(), value);
                }
                "theta" => {
                    let space = space.ok_or_else(|| {
                        Error::parse(line_no, 1, "`theta` before `space` declaration")
                    })?;
                    theta = Some(parse_theta(rest, space, &bindings, line_no)?);
                }
                "expect" => {
                    for part in rest.split_whitespace() {
                        let (key, value) = part.split_once('=').ok_or_else(|| {
                            Error::parse(line_no, 1, "expect entries look like key=value")
                        })?;
                        match key {
                            "classification" => {
                                expect.classification =
                                    Some(Classification::from_str(value).map_err(|e| {
                                        Error::parse(line_no, 1, e)
                                    })?);
                            }
                            "verdict" => {
                                expect.verdict = Some(match value {
                                    "true" => true,
                                    "false" => false,
                                    other => {
                                        return Err(Error::parse(
                                            line_no,
                                            1,
                                            format!("verdict must be true or false, got `{other}`"),
                                        ))
                                    }
                                });
                            }
                            other => {
                                return Err(Error::parse(
                                    line_no,
                                    1,
                                    format!("unknown expect key `{other}`"),
                                ))
                            }
                        }
                    }
                }
                other => {
                    return Err(Error::parse(
                        line_no,
                        1,
                        format!("unknown directive `{other}`"),
                    ))
                }
            }
        }

        let space =
            space.ok_or_else(|| Error::parse(1, 1, "missing `space N R` declaration"))?;
        Ok(SourceFile {
            space,
            bindings,
            theta,
            expect,
        })
    }

    pub fn require_theta(&self) -> Result<&StructureTheta> {
        self.theta.as_ref().ok_or_else(|| {
            Error::Precondition("this command needs a `theta` block in the file".into())
        })
    }

    /// Run the master check on the file's structure; used by `check` and by
    /// the fixture replay harness.
    pub fn evaluate(&self) -> Result<CheckReport> {
        Ok(self.require_theta()?.master_residual())
    }
}

fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_')
        && name.chars().next().unwrap().is_ascii_alphabetic()
        && name != "derham"
        && crate::space::Family::from_symbol(name).is_none()
}

fn parse_theta(
    rest: &str,
    space: GeneratorSpace,
    bindings: &BTreeMap<String, SuperPoly>,
    line_no: usize,
) -> Result<StructureTheta> {
    const KEYS: [&str; 4] = ["mu", "gamma", "phi", "psi"];
    // Locate `key=` markers at word boundaries; values run to the next marker.
    let bytes = rest.as_bytes();
    let mut markers: Vec<(usize, usize, &str)> = Vec::new(); // (start, value_start, key)
    for key in KEYS {
        let pattern = format!("{key}=");
        let mut search_from = 0;
        let mut found = None;
        while let Some(pos) = rest[search_from..].find(&pattern) {
            let abs = search_from + pos;
            let boundary_ok = abs == 0 || bytes[abs - 1].is_ascii_whitespace();
            if boundary_ok {
                found = Some(abs);
                break;
            }
            search_from = abs + pattern.len();
        }
        let pos = found.ok_or_else(|| {
            Error::parse(line_no, 1, format!("theta line is missing `{key}=`"))
        })?;
        markers.push((pos, pos + pattern.len(), key));
    }
    markers.sort();
    let mut values: BTreeMap<&str, &str> = BTreeMap::new();
    for (i, &(_, value_start, key)) in markers.iter().enumerate() {
        let value_end = markers
            .get(i + 1)
            .map_or(rest.len(), |&(next_start, _, _)| next_start);
        values.insert(key, rest[value_start..value_end].trim());
    }

    let component = |key: &str, allow_derham: bool| -> Result<SuperPoly> {
        let value = values[key];
        if value.is_empty() {
            return Err(Error::parse(
                line_no,
                1,
                format!("theta component `{key}` is empty"),
            ));
        }
        if value == "derham" {
            if !allow_derham {
                return Err(Error::parse(
                    line_no,
                    1,
                    "`derham` is only valid for mu",
                ));
            }
            return StructureTheta::derham_mu(space).map_err(|e| match e {
                Error::Precondition(msg) => Error::parse(line_no, 1, msg),
                other => other,
            });
        }
        if let Some(bound) = bindings.get(value) {
            return Ok(bound.clone());
        }
        parse_expression_at(value, space, line_no)
    };

    let mu = component("mu", true)?;
    let gamma = component("gamma", false)?;
    let phi = component("phi", false)?;
    let psi = component("psi", false)?;
    StructureTheta::new(mu, gamma, phi, psi).map_err(|e| match e {
        Error::Degree(msg) => Error::parse(line_no, 1, msg),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontend::parse::parse_expression;

    #[test]
    fn parses_a_full_file() {
        let text = "\
# comment line
space 2 2
let pi = x1*th1*th2   # inline comment
theta mu=derham gamma=x1*th1*p2 - x1*th2*p1 - xi1*th1*th2 phi=0 psi=0
expect classification=lie_bialgebroid verdict=true
";
        let file = SourceFile::parse(text).unwrap();
        assert_eq!(file.space, GeneratorSpace::new(2, 2));
        assert!(file.bindings.contains_key("pi"));
        assert_eq!(file.expect.verdict, Some(true));
        assert_eq!(
            file.expect.classification,
            Some(Classification::LieBialgebroid)
        );
        let theta = file.theta.unwrap();
        assert_eq!(
            theta.mu(),
            &parse_expression("xi1*p1 + xi2*p2", file.space).unwrap()
        );
    }

    #[test]
    fn theta_component_can_reference_binding() {
        let text = "\
space 3 3
let myphi = x1*xi1*xi2*xi3
theta mu=derham gamma=0 phi=myphi psi=0
";
        let file = SourceFile::parse(text).unwrap();
        let theta = file.theta.unwrap();
        assert_eq!(
            theta.phi(),
            &parse_expression("x1*xi1*xi2*xi3", file.space).unwrap()
        );
    }

    #[test]
    fn derham_requires_square_space() {
        let text = "space 1 2\ntheta mu=derham gamma=0 phi=0 psi=0\n";
        assert!(matches!(
            SourceFile::parse(text),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn rejects_component_of_wrong_bidegree() {
        let text = "space 2 2\ntheta mu=th1*th2*p1 gamma=0 phi=0 psi=0\n";
        assert!(SourceFile::parse(text).is_err());
    }

    #[test]
    fn rejects_unknown_directive_and_missing_space() {
        assert!(SourceFile::parse("bogus 1 2\n").is_err());
        assert!(SourceFile::parse("let a = 1\n").is_err());
        assert!(SourceFile::parse("# only comments\n").is_err());
    }

    #[test]
    fn rejects_reserved_binding_names() {
        assert!(SourceFile::parse("space 1 1\nlet derham = x1\n").is_err());
        assert!(SourceFile::parse("space 1 1\nlet xi = x1\n").is_err());
    }
}

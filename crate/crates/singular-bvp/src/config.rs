//! Problem-spec config files.
//!
//! A UTF-8 key–value format, one `key = value` pair per line, `#` starts
//! a comment:
//!
//! ```text
//! # right-end layer benchmark
//! epsilon  = -0.1          # signed y'' coefficient; negative means -eps y''
//! interval = [0, 1]
//! alpha    = 0
//! beta     = 0
//! p.const  = 1
//! q.poly   = [1, 0.5]      # ascending coefficients
//! r.exp    = {1, -2}       # c, k of c*e^(k x)
//! ```
//!
//! `epsilon` is the signed second-derivative coefficient of the problem as
//! written; normalization flips all signs when it is negative. Each of
//! `p`, `q`, `r` takes exactly one of `.const`, `.poly`, `.exp`. Parse
//! errors carry the 1-based line number and the offending key.

use crate::coef::CoefExpr;
use crate::error::Error;
use crate::problem::RawProblem;
use crate::Result;

/// Parses config text into a raw (not yet normalized) problem.
pub fn parse_problem_config(text: &str) -> Result<RawProblem> {
    let mut epsilon: Option<f64> = None;
    let mut interval: Option<(f64, f64)> = None;
    let mut alpha: Option<f64> = None;
    let mut beta: Option<f64> = None;
    let mut p: Option<CoefExpr> = None;
    let mut q: Option<CoefExpr> = None;
    let mut r: Option<CoefExpr> = None;

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| Error::ConfigParse {
            line: line_no,
            key: line.to_string(),
            message: "expected `key = value`".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        let err = |message: String| Error::ConfigParse {
            line: line_no,
            key: key.to_string(),
            message,
        };

        match key {
            "epsilon" => epsilon = Some(parse_number(value).map_err(err)?),
            "alpha" => alpha = Some(parse_number(value).map_err(err)?),
            "beta" => beta = Some(parse_number(value).map_err(err)?),
            "interval" => {
                let list = parse_list(value).map_err(err)?;
                if list.len() != 2 {
                    return Err(err(format!(
                        "interval needs exactly two endpoints, got {}",
                        list.len()
                    )));
                }
                interval = Some((list[0], list[1]));
            }
            _ => {
                let (name, form) = key.split_once('.').ok_or_else(|| Error::ConfigParse {
                    line: line_no,
                    key: key.to_string(),
                    message: "unknown key (expected epsilon, interval, alpha, beta, \
                              or p/q/r with .const/.poly/.exp)"
                        .into(),
                })?;
                let slot = match name {
                    "p" => &mut p,
                    "q" => &mut q,
                    "r" => &mut r,
                    _ => {
                        return Err(err(format!("unknown coefficient `{name}`")));
                    }
                };
                if slot.is_some() {
                    return Err(err(format!("coefficient `{name}` defined twice")));
                }
                *slot = Some(match form {
                    "const" => CoefExpr::Constant(parse_number(value).map_err(err)?),
                    "poly" => CoefExpr::poly(parse_list(value).map_err(err)?),
                    "exp" => {
                        let pair = parse_braced_pair(value).map_err(err)?;
                        CoefExpr::ExpLinear {
                            c: pair.0,
                            k: pair.1,
                        }
                    }
                    _ => {
                        return Err(err(format!(
                            "unknown coefficient form `.{form}` (use .const, .poly or .exp)"
                        )));
                    }
                });
            }
        }
    }

    let missing = |key: &str| Error::ConfigParse {
        line: 0,
        key: key.to_string(),
        message: "required key is missing".into(),
    };
    let (a, b) = interval.ok_or_else(|| missing("interval"))?;
    Ok(RawProblem {
        second_coef: epsilon.ok_or_else(|| missing("epsilon"))?,
        p: p.ok_or_else(|| missing("p"))?,
        q: q.ok_or_else(|| missing("q"))?,
        r: r.ok_or_else(|| missing("r"))?,
        a,
        b,
        alpha: alpha.ok_or_else(|| missing("alpha"))?,
        beta: beta.ok_or_else(|| missing("beta"))?,
    })
}

fn parse_number(s: &str) -> std::result::Result<f64, String> {
    s.parse::<f64>()
        .map_err(|_| format!("`{s}` is not a number"))
}

fn parse_list(s: &str) -> std::result::Result<Vec<f64>, String> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| format!("`{s}` is not a bracketed list like [0, 1]"))?;
    let trimmed = inner.trim();
    if trimmed.is_empty() {
        return Err("list must not be empty".into());
    }
    trimmed
        .split(',')
        .map(|part| parse_number(part.trim()))
        .collect()
}

fn parse_braced_pair(s: &str) -> std::result::Result<(f64, f64), String> {
    let inner = s
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| format!("`{s}` is not a braced pair like {{c, k}}"))?;
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected two values in braces, got {}", parts.len()));
    }
    Ok((
        parse_number(parts[0].trim())?,
        parse_number(parts[1].trim())?,
    ))
}

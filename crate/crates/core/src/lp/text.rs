//! Plain-text LP format.
//!
//! ```text
//! # cubecover-lp 1
//! vars y1 y2 y3
//! minimize 1 1 1
//! lower 0 0 0
//! row 3 3 0 >= 12
//! row 1 0 0 <= 8
//! ```
//!
//! Numbers are exact integers or `p/q` fractions.

use std::fmt::Write;

use super::{LinearProgram, Relation};
use crate::{Error, Rational, Result};

const HEADER: &str = "# cubecover-lp 1";

pub(super) fn write(lp: &LinearProgram) -> String {
    let join = |v: &[Rational]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "vars {}", lp.names.join(" ")).unwrap();
    writeln!(out, "minimize {}", join(&lp.objective)).unwrap();
    writeln!(out, "lower {}", join(&lp.lower_bounds)).unwrap();
    for c in &lp.constraints {
        writeln!(out, "row {} {} {}", join(&c.coeffs), c.relation.symbol(), c.rhs).unwrap();
    }
    out
}

fn number(tok: &str, line: usize) -> Result<Rational> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("not an exact rational: {tok:?}"),
    })
}

pub(super) fn read(input: &str) -> Result<LinearProgram> {
    let mut lp: Option<LinearProgram> = None;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let mut toks = text.split_whitespace();
        let keyword = toks.next().expect("nonempty line");
        let rest: Vec<&str> = toks.collect();
        if keyword == "vars" {
            if lp.is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "duplicate vars line".into(),
                });
            }
            let names = rest.iter().map(|s| s.to_string()).collect();
            lp = Some(LinearProgram::new(rest.len()).with_names(names)?);
            continue;
        }
        let Some(prog) = lp.as_mut() else {
            return Err(Error::Parse {
                line,
                msg: "expected vars line first".into(),
            });
        };
        let wrap = |e: Error| match e {
            Error::Validation(msg) => Error::Parse { line, msg },
            other => other,
        };
        match keyword {
            "minimize" => {
                let v = rest.iter().map(|t| number(t, line)).collect::<Result<Vec<_>>>()?;
                prog.set_objective(v).map_err(wrap)?;
            }
            "lower" => {
                let v = rest.iter().map(|t| number(t, line)).collect::<Result<Vec<_>>>()?;
                if v.len() != prog.num_vars() {
                    return Err(Error::Parse {
                        line,
                        msg: "lower bound count mismatch".into(),
                    });
                }
                for (i, b) in v.into_iter().enumerate() {
                    prog.set_lower_bound(i, b)?;
                }
            }
            "row" => {
                if rest.len() < 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "row needs a relation and rhs".into(),
                    });
                }
                let (coeffs, tail) = rest.split_at(rest.len() - 2);
                let relation = match tail[0] {
                    ">=" => Relation::Ge,
                    "<=" => Relation::Le,
                    other => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("unknown relation {other:?}"),
                        })
                    }
                };
                let coeffs = coeffs.iter().map(|t| number(t, line)).collect::<Result<Vec<_>>>()?;
                let rhs = number(tail[1], line)?;
                prog.add_constraint(coeffs, relation, rhs).map_err(wrap)?;
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown keyword {other:?}"),
                });
            }
        }
    }
    lp.ok_or(Error::Parse {
        line: 0,
        msg: "empty program".into(),
    })
}

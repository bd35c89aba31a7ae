//! Hand-constructed LP corpus with frozen expectations, plus a brute-force
//! vertex-enumeration oracle that is independent of the tableau solver.

#![allow(dead_code)]

use cubecover::lp::{LinearProgram, Relation};
use cubecover::Rational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum Expected {
    Optimal(&'static str),
    Infeasible,
    Unbounded,
}

pub struct Case {
    pub name: &'static str,
    pub lp: LinearProgram,
    pub expected: Expected,
}

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn lp(objective: &[&str], rows: &[(&[&str], Relation, &str)]) -> LinearProgram {
    let mut p = LinearProgram::new(objective.len());
    p.set_objective(objective.iter().map(|s| q(s)).collect()).unwrap();
    for (coeffs, rel, rhs) in rows {
        p.add_constraint(coeffs.iter().map(|s| q(s)).collect(), *rel, q(rhs))
            .unwrap();
    }
    p
}

fn with_lower(mut p: LinearProgram, lower: &[&str]) -> LinearProgram {
    for (i, l) in lower.iter().enumerate() {
        p.set_lower_bound(i, q(l)).unwrap();
    }
    p
}

pub fn corpus() -> Vec<Case> {
    use Expected::*;
    use Relation::{Ge, Le};
    vec![
        Case {
            name: "sum at least three",
            lp: lp(&["1", "1"], &[(&["1", "1"], Ge, "3")]),
            expected: Optimal("3"),
        },
        Case {
            name: "reduced program d=3",
            lp: lp(
                &["1", "1", "1"],
                &[
                    (&["3", "3", "0"], Ge, "12"),
                    (&["3", "2", "0"], Ge, "12"),
                    (&["1", "1", "2"], Ge, "6"),
                    (&["1", "0", "0"], Le, "8"),
                ],
            ),
            expected: Optimal("5"),
        },
        Case {
            name: "negative upper bound",
            lp: lp(&["1"], &[(&["1"], Le, "-1")]),
            expected: Infeasible,
        },
        Case {
            name: "unbounded ray",
            lp: lp(&["-1", "0"], &[(&["1", "-1"], Le, "1")]),
            expected: Unbounded,
        },
        Case {
            name: "two covering rows",
            lp: lp(&["2", "3"], &[(&["1", "1"], Ge, "4"), (&["1", "3"], Ge, "6")]),
            expected: Optimal("9"),
        },
        Case {
            name: "symmetric covering",
            lp: lp(&["1", "1"], &[(&["2", "1"], Ge, "3"), (&["1", "2"], Ge, "3")]),
            expected: Optimal("2"),
        },
        Case {
            name: "packing maximum",
            lp: lp(&["-1", "-1"], &[(&["1", "2"], Le, "4"), (&["3", "1"], Le, "6")]),
            expected: Optimal("-14/5"),
        },
        Case {
            name: "Beale cycling example",
            lp: lp(
                &["-3/4", "20", "-1/2", "6"],
                &[
                    (&["1/4", "-8", "-1", "9"], Le, "0"),
                    (&["1/2", "-12", "-1/2", "3"], Le, "0"),
                    (&["0", "0", "1", "0"], Le, "1"),
                ],
            ),
            expected: Optimal("-5/4"),
        },
        Case {
            name: "positive lower bounds",
            lp: with_lower(lp(&["1", "1"], &[(&["1", "1"], Ge, "4")]), &["2", "3"]),
            expected: Optimal("5"),
        },
        Case {
            name: "negative lower bound",
            lp: with_lower(lp(&["1"], &[(&["1"], Ge, "-3")]), &["-5"]),
            expected: Optimal("-3"),
        },
        Case {
            name: "contradictory rows",
            lp: lp(&["1", "1"], &[(&["1", "1"], Le, "1"), (&["1", "1"], Ge, "2")]),
            expected: Infeasible,
        },
        Case {
            name: "no rows, descending",
            lp: lp(&["-1"], &[]),
            expected: Unbounded,
        },
        Case {
            name: "no rows, ascending",
            lp: lp(&["1", "1"], &[]),
            expected: Optimal("0"),
        },
        Case {
            name: "equality by two rows",
            lp: lp(&["1", "-1"], &[(&["1", "1"], Ge, "2"), (&["1", "1"], Le, "2")]),
            expected: Optimal("-2"),
        },
        Case {
            name: "redundant rows",
            lp: lp(&["1"], &[(&["1"], Ge, "1"), (&["1"], Ge, "1"), (&["2"], Ge, "2")]),
            expected: Optimal("1"),
        },
        Case {
            name: "Klee-Minty cube",
            lp: lp(
                &["-4", "-2", "-1"],
                &[
                    (&["1", "0", "0"], Le, "5"),
                    (&["4", "1", "0"], Le, "25"),
                    (&["8", "4", "1"], Le, "125"),
                ],
            ),
            expected: Optimal("-125"),
        },
        Case {
            name: "diet with ties",
            lp: lp(
                &["3", "2", "4"],
                &[(&["1", "1", "2"], Ge, "4"), (&["2", "1", "3"], Ge, "5")],
            ),
            expected: Optimal("8"),
        },
        Case {
            name: "fractional vertex",
            lp: lp(&["1", "1"], &[(&["3", "1"], Ge, "2"), (&["1", "3"], Ge, "2")]),
            expected: Optimal("1"),
        },
        Case {
            name: "zero objective",
            lp: lp(&["0", "0"], &[(&["1", "1"], Ge, "1")]),
            expected: Optimal("0"),
        },
        Case {
            name: "bound conflicts row",
            lp: with_lower(lp(&["1"], &[(&["1"], Le, "1")]), &["2"]),
            expected: Infeasible,
        },
        Case {
            name: "general program d=3",
            lp: lp(
                &["1", "1"],
                &[(&["3", "0"], Ge, "12"), (&["3", "0"], Ge, "12"), (&["1", "2"], Ge, "6")],
            ),
            expected: Optimal("5"),
        },
        Case {
            name: "unbounded above a floor",
            lp: lp(&["-1"], &[(&["1"], Ge, "1")]),
            expected: Unbounded,
        },
        Case {
            name: "negative rhs rows",
            lp: lp(
                &["1", "0"],
                &[
                    (&["-1", "0"], Ge, "-4"),
                    (&["1", "-1"], Ge, "-2"),
                    (&["0", "1"], Ge, "3"),
                ],
            ),
            expected: Optimal("1"),
        },
        Case {
            name: "fractional data",
            lp: lp(&["1/2", "1/3"], &[(&["1/4", "1/6"], Ge, "1"), (&["1", "0"], Le, "3/2")]),
            expected: Optimal("2"),
        },
    ]
}

fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = Rational::one() / &a[col][col];
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] * &inv;
                for c in col..n {
                    let v = &f * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &f * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Minimum over all basic feasible points: every choice of `n` tight
/// constraints among rows and lower bounds. `None` if no vertex is feasible.
/// Only meaningful for bounded programs with at least one vertex.
pub fn brute_force_min(lp: &LinearProgram) -> Option<Rational> {
    let n = lp.num_vars();
    let mut planes: Vec<(Vec<Rational>, Rational)> = lp
        .constraints()
        .iter()
        .map(|c| (c.coeffs.clone(), c.rhs.clone()))
        .collect();
    for j in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[j] = Rational::one();
        planes.push((e, lp.lower_bounds()[j].clone()));
    }
    let k = planes.len();
    let mut best: Option<Rational> = None;
    let mut pick: Vec<usize> = (0..n).collect();
    if n == 0 || n > k {
        return None;
    }
    loop {
        let a = pick.iter().map(|&i| planes[i].0.clone()).collect();
        let b = pick.iter().map(|&i| planes[i].1.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            if lp.is_feasible(&x) {
                let v = lp.objective_value(&x);
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
        }
        // next combination
        let mut i = n;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if pick[i] < k - n + i {
                pick[i] += 1;
                for j in i + 1..n {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

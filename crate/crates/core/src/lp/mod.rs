//! Exact linear programming over arbitrary-precision rationals.
//!
//! Small dense minimization problems with `>=`/`<=` rows and finite lower
//! bounds, solved by a two-phase tableau simplex with Bland's rule. There are
//! no tolerances: every comparison is exact.

mod solver;
mod text;

use std::fmt;

use num_traits::{Signed, Zero};

use crate::{Error, Rational, Result};

pub use solver::solve_min;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Ge,
    Le,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Le => "<=",
        }
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Le => lhs <= rhs,
        }
    }

    fn flipped(self) -> Self {
        match self {
            Relation::Ge => Relation::Le,
            Relation::Le => Relation::Ge,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn lhs(&self, point: &[Rational]) -> Rational {
        dot(&self.coeffs, point)
    }

    pub fn is_satisfied(&self, point: &[Rational]) -> bool {
        self.relation.holds(&self.lhs(point), &self.rhs)
    }

    /// The same constraint with both sides multiplied by a positive factor.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        if !factor.is_positive() {
            return Err(Error::Validation(format!("scale factor {factor} is not positive")));
        }
        Ok(Constraint {
            coeffs: self.coeffs.iter().map(|a| a * factor).collect(),
            relation: self.relation,
            rhs: &self.rhs * factor,
        })
    }
}

/// `minimize objective · y` subject to the constraint rows and `y >= lower_bounds`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    names: Vec<String>,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
    lower_bounds: Vec<Rational>,
}

impl LinearProgram {
    /// A program over `num_vars` variables named `x1..xn`, zero objective, `y >= 0`.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            names: (1..=num_vars).map(|i| format!("x{i}")).collect(),
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
            lower_bounds: vec![Rational::zero(); num_vars],
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.num_vars {
            return Err(Error::Validation(format!(
                "{} names for {} variables",
                names.len(),
                self.num_vars
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) -> Result<()> {
        self.check_len(objective.len(), "objective")?;
        self.objective = objective;
        Ok(())
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Result<()> {
        self.check_len(coeffs.len(), "constraint row")?;
        self.constraints.push(Constraint { coeffs, relation, rhs });
        Ok(())
    }

    pub fn set_lower_bound(&mut self, var: usize, bound: Rational) -> Result<()> {
        if var >= self.num_vars {
            return Err(Error::Validation(format!("variable {var} out of range")));
        }
        self.lower_bounds[var] = bound;
        Ok(())
    }

    fn check_len(&self, len: usize, what: &str) -> Result<()> {
        if len != self.num_vars {
            return Err(Error::Validation(format!(
                "{what} has {len} entries, expected {}",
                self.num_vars
            )));
        }
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn lower_bounds(&self) -> &[Rational] {
        &self.lower_bounds
    }

    /// Replaces constraint `i` by a positive multiple of itself.
    pub fn scale_constraint(&mut self, i: usize, factor: &Rational) -> Result<()> {
        let c = self
            .constraints
            .get(i)
            .ok_or_else(|| Error::Validation(format!("constraint {i} out of range")))?;
        self.constraints[i] = c.scaled(factor)?;
        Ok(())
    }

    /// Whether `point` satisfies every row and bound.
    pub fn is_feasible(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars
            && point.iter().zip(&self.lower_bounds).all(|(y, l)| y >= l)
            && self.constraints.iter().all(|c| c.is_satisfied(point))
    }

    pub fn objective_value(&self, point: &[Rational]) -> Rational {
        dot(&self.objective, point)
    }

    /// Plain-text dump; see [`LinearProgram::from_text`].
    pub fn to_text(&self) -> String {
        text::write(self)
    }

    /// Parses the plain-text format produced by [`LinearProgram::to_text`].
    pub fn from_text(input: &str) -> Result<Self> {
        text::read(input)
    }
}

impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Optimal objective value; zero unless `status` is optimal.
    pub value: Rational,
    /// Optimal vertex; empty unless `status` is optimal.
    pub assignment: Vec<Rational>,
    /// Dual multipliers, one per constraint row; empty unless optimal.
    pub duals: Vec<Rational>,
    pub pivots: usize,
}

impl LpSolution {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    fn without_optimum(status: LpStatus, pivots: usize) -> Self {
        LpSolution {
            status,
            value: Rational::zero(),
            assignment: Vec::new(),
            duals: Vec::new(),
            pivots,
        }
    }
}

/// Re-checks an optimal solution against the program from scratch:
/// bounds, every row, and the objective value.
pub fn verify_solution(lp: &LinearProgram, sol: &LpSolution) -> bool {
    sol.is_optimal() && lp.is_feasible(&sol.assignment) && lp.objective_value(&sol.assignment) == sol.value
}

/// Checks that `sol.duals` certify optimality of `sol.value`.
///
/// Dual feasibility: multipliers are `>= 0` on `>=` rows and `<= 0` on `<=`
/// rows, and every reduced cost `c_j - Σ λ_i a_ij` is nonnegative. The dual
/// objective `Σ λ_i b_i + Σ_j r_j l_j` must equal the primal value exactly.
pub fn verify_dual(lp: &LinearProgram, sol: &LpSolution) -> bool {
    if !sol.is_optimal() || sol.duals.len() != lp.constraints.len() {
        return false;
    }
    let signs_ok = lp.constraints.iter().zip(&sol.duals).all(|(c, l)| match c.relation {
        Relation::Ge => !l.is_negative(),
        Relation::Le => !l.is_positive(),
    });
    if !signs_ok {
        return false;
    }
    let mut dual_value: Rational = lp.constraints.iter().zip(&sol.duals).map(|(c, l)| &c.rhs * l).sum();
    for j in 0..lp.num_vars {
        let reduced = &lp.objective[j]
            - lp.constraints
                .iter()
                .zip(&sol.duals)
                .map(|(c, l)| &c.coeffs[j] * l)
                .sum::<Rational>();
        if reduced.is_negative() {
            return false;
        }
        dual_value += reduced * &lp.lower_bounds[j];
    }
    dual_value == sol.value
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

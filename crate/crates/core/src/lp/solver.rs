use num_traits::{One, Signed, Zero};

use super::{LinearProgram, LpSolution, LpStatus, Relation};
use crate::Rational;

/// Dense simplex tableau. Row `m` holds reduced costs and `-z`; the last
/// column holds right-hand sides.
struct Tableau {
    cells: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Columns that may enter the basis.
    allowed: Vec<bool>,
    pivots: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rows(&self) -> usize {
        self.basis.len()
    }

    fn rhs_col(&self) -> usize {
        self.cells[0].len() - 1
    }

    /// Installs `costs` as the objective row for the current basis.
    fn set_costs(&mut self, costs: &[Rational]) {
        let m = self.rows();
        let width = self.cells[0].len();
        let mut obj: Vec<Rational> = (0..width)
            .map(|j| costs.get(j).cloned().unwrap_or_else(Rational::zero))
            .collect();
        obj[width - 1] = Rational::zero();
        for i in 0..m {
            let cb = &costs[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for (o, t) in obj.iter_mut().zip(&self.cells[i]) {
                *o -= cb * t;
            }
        }
        self.cells[m] = obj;
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = Rational::one() / &self.cells[row][col];
        for v in self.cells[row].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = self.cells[row].clone();
        for (i, r) in self.cells.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (v, p) in r.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        self.basis[row] = col;
        self.pivots += 1;
    }

    /// Bland's rule: lowest-index improving column enters; ratio ties leave
    /// by lowest basic variable index.
    fn run(&mut self) -> Outcome {
        let m = self.rows();
        let rhs = self.rhs_col();
        loop {
            let entering = (0..rhs).find(|&j| self.allowed[j] && self.cells[m][j].is_negative());
            let Some(col) = entering else {
                return Outcome::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..m {
                let a = &self.cells[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.cells[i][rhs] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return Outcome::Unbounded,
            }
        }
    }
}

/// Solves `lp` exactly; see the module docs.
///
/// Infeasible and unbounded programs are reported through
/// [`LpSolution::status`]. The result is deterministic.
pub fn solve_min(lp: &LinearProgram) -> LpSolution {
    let n = lp.num_vars;
    let m = lp.constraints.len();

    // Shift y = x + l so that x >= 0, and make every rhs nonnegative.
    let mut rows: Vec<(Vec<Rational>, Relation, Rational, bool)> = Vec::with_capacity(m);
    for c in &lp.constraints {
        let rhs = &c.rhs - super::dot(&c.coeffs, &lp.lower_bounds);
        if rhs.is_negative() {
            rows.push((c.coeffs.iter().map(|a| -a).collect(), c.relation.flipped(), -rhs, true));
        } else {
            rows.push((c.coeffs.clone(), c.relation, rhs, false));
        }
    }

    // Columns: x (n), one slack or surplus per row (m), artificials for >= rows.
    let ge_rows: Vec<usize> = (0..m).filter(|&i| rows[i].1 == Relation::Ge).collect();
    let art_start = n + m;
    let width = art_start + ge_rows.len() + 1;
    let mut cells = vec![vec![Rational::zero(); width]; m + 1];
    let mut basis = vec![0; m];
    for (i, (coeffs, rel, rhs, _)) in rows.iter().enumerate() {
        cells[i][..n].clone_from_slice(coeffs);
        cells[i][width - 1] = rhs.clone();
        match rel {
            Relation::Le => {
                cells[i][n + i] = Rational::one();
                basis[i] = n + i;
            }
            Relation::Ge => {
                cells[i][n + i] = -Rational::one();
                let a = art_start + ge_rows.iter().position(|&g| g == i).expect("ge row");
                cells[i][a] = Rational::one();
                basis[i] = a;
            }
        }
    }
    let mut tab = Tableau {
        cells,
        basis,
        allowed: vec![true; width - 1],
        pivots: 0,
    };

    if !ge_rows.is_empty() {
        let mut phase1 = vec![Rational::zero(); width - 1];
        for c in phase1.iter_mut().skip(art_start) {
            *c = Rational::one();
        }
        tab.set_costs(&phase1);
        // Phase 1 is bounded below by zero.
        let _ = tab.run();
        if !tab.cells[m][width - 1].is_zero() {
            return LpSolution::without_optimum(LpStatus::Infeasible, tab.pivots);
        }
        // Every row owns a slack or surplus column, so the structural columns
        // have full row rank and a zero-level artificial can always be pivoted out.
        for i in 0..m {
            if tab.basis[i] >= art_start {
                let col = (0..art_start)
                    .find(|&j| !tab.cells[i][j].is_zero())
                    .expect("structural columns have full row rank");
                tab.pivot(i, col);
            }
        }
        for a in tab.allowed.iter_mut().skip(art_start) {
            *a = false;
        }
    }

    let mut costs = vec![Rational::zero(); width - 1];
    costs[..n].clone_from_slice(&lp.objective);
    tab.set_costs(&costs);
    if let Outcome::Unbounded = tab.run() {
        return LpSolution::without_optimum(LpStatus::Unbounded, tab.pivots);
    }

    let mut x = vec![Rational::zero(); n];
    for i in 0..m {
        if tab.basis[i] < n {
            x[tab.basis[i]] = tab.cells[i][width - 1].clone();
        }
    }
    let assignment: Vec<Rational> = x.iter().zip(&lp.lower_bounds).map(|(x, l)| x + l).collect();
    let value = super::dot(&lp.objective, &assignment);

    // Reduced cost of a slack column is -λ, of a surplus column +λ.
    let duals = rows
        .iter()
        .enumerate()
        .map(|(i, (_, rel, _, flipped))| {
            let rc = &tab.cells[m][n + i];
            let lambda = match rel {
                Relation::Le => -rc,
                Relation::Ge => rc.clone(),
            };
            if *flipped {
                -lambda
            } else {
                lambda
            }
        })
        .collect();

    LpSolution {
        status: LpStatus::Optimal,
        value,
        assignment,
        duals,
        pivots: tab.pivots,
    }
}

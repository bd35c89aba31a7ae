//! Covering linear programs and the lower-bound comparison table.
//!
//! Both programs count how much `d'`-volume of the cube's `d'`-faces the
//! exterior faces of a cover can supply. Variables group simplices by class:
//! `y_k` counts simplices whose class lies in `(V(k-1), V(k)]`. The reduced
//! program additionally splits class 1 into corners (`y_1`, at most one per
//! cube vertex) and non-corners (`y_2`).
//!
//! Row `d'` is stored multiplied by `d'!` unless an unscaled build is asked
//! for; both give the same optimum.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::counting::{binomial, factorial, FaceCounts, VTable};
use crate::exec::Execution;
use crate::lp::{solve_min, verify_dual, verify_solution, LinearProgram, LpStatus, Relation};
use crate::{Error, Rational, Result, MAX_DIM};

/// Smith's per-dimension lower bounds, `d = 3..=12`. Display only.
pub const SMITH_REFERENCE: [(usize, u64); 10] = [
    (3, 5),
    (4, 15),
    (5, 48),
    (6, 174),
    (7, 681),
    (8, 2863),
    (9, 12811),
    (10, 60574),
    (11, 300956),
    (12, 1564340),
];

/// Hughes / Hughes-Anderson / Cottle-Sallee bounds for `D^v, T^v`, `d = 3..=11`. Display only.
pub const HUGHES_REFERENCE: [(usize, u64); 9] = [
    (3, 5),
    (4, 16),
    (5, 61),
    (6, 270),
    (7, 1175),
    (8, 5522),
    (9, 26593),
    (10, 131269),
    (11, 665272),
];

fn lookup(table: &[(usize, u64)], d: usize) -> Option<u64> {
    table.iter().find(|&&(k, _)| k == d).map(|&(_, v)| v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProgramKind {
    General,
    #[default]
    Reduced,
}

impl fmt::Display for ProgramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProgramKind::General => "general",
            ProgramKind::Reduced => "reduced",
        })
    }
}

impl FromStr for ProgramKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(ProgramKind::General),
            "reduced" => Ok(ProgramKind::Reduced),
            other => Err(Error::Validation(format!("unknown program kind {other:?}"))),
        }
    }
}

/// One row of the comparison table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub dim: usize,
    pub program: ProgramKind,
    /// Exact optimum of the covering program.
    pub lp_value: Rational,
    /// `ceil(lp_value)`.
    pub our_bound: BigInt,
    /// Optimal `y` vector.
    pub assignment: Vec<Rational>,
    pub naive_volume_bound: BigInt,
    pub smith_asymptotic: BigInt,
    pub reference_smith: Option<u64>,
    pub reference_hughes: Option<u64>,
    /// Some coefficient used the asymptotic bound instead of an exact `V(k)`.
    pub asymptotic_v: bool,
}

/// Serialized form of a [`BoundReport`]; big numbers are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub dim: usize,
    pub our_bound: String,
    pub lp_value_num: String,
    pub lp_value_den: String,
    pub program: ProgramKind,
    pub naive_bound: String,
    pub smith_asymptotic: String,
    pub reference_smith: Option<u64>,
    pub reference_hughes: Option<u64>,
}

impl From<&BoundReport> for BoundRecord {
    fn from(r: &BoundReport) -> Self {
        BoundRecord {
            dim: r.dim,
            our_bound: r.our_bound.to_string(),
            lp_value_num: r.lp_value.numer().to_string(),
            lp_value_den: r.lp_value.denom().to_string(),
            program: r.program,
            naive_bound: r.naive_volume_bound.to_string(),
            smith_asymptotic: r.smith_asymptotic.to_string(),
            reference_smith: r.reference_smith,
            reference_hughes: r.reference_hughes,
        }
    }
}

impl BoundRecord {
    fn int(field: &str, s: &str) -> Result<BigInt> {
        s.parse()
            .map_err(|_| Error::Validation(format!("{field} is not an integer: {s:?}")))
    }

    pub fn lp_value(&self) -> Result<Rational> {
        let den = Self::int("lp_value_den", &self.lp_value_den)?;
        if den <= BigInt::zero() {
            return Err(Error::Validation("lp_value_den must be positive".into()));
        }
        Ok(Rational::new(Self::int("lp_value_num", &self.lp_value_num)?, den))
    }

    pub fn our_bound(&self) -> Result<BigInt> {
        Self::int("our_bound", &self.our_bound)
    }

    pub fn naive_bound(&self) -> Result<BigInt> {
        Self::int("naive_bound", &self.naive_bound)
    }

    pub fn smith_asymptotic(&self) -> Result<BigInt> {
        Self::int("smith_asymptotic", &self.smith_asymptotic)
    }
}

/// `ceil(6^(d/2) · d! / (2 · (d+1)^((d+1)/2)))`, evaluated exactly.
///
/// With `P = 6^d (d!)^2` and `Q = 4 (d+1)^(d+1)` the bound is `sqrt(P/Q)`,
/// so its ceiling is the least `n` with `n^2 Q >= P`.
pub fn smith_asymptotic(d: usize) -> BigInt {
    let fact = factorial(d);
    let p = num_traits::pow(BigUint::from(6u32), d) * &fact * &fact;
    let q = BigUint::from(4u32) * num_traits::pow(BigUint::from(d + 1), d + 1);
    let mut n = (&p / &q).sqrt();
    while &n * &n * &q < p {
        n += 1u32;
    }
    BigInt::from(n)
}

/// `ceil(d! / V(d))`, with the asymptotic upper bound for `V` beyond the table.
pub fn naive_volume_bound(d: usize, vtable: &VTable) -> BigInt {
    let v = BigInt::from(vtable.v_upper(d));
    let f = BigInt::from(factorial(d));
    (&f + &v - 1u32) / v
}

fn ceil(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

/// Builds and solves the covering programs over a fixed V table.
#[derive(Debug, Default)]
pub struct BoundPipeline {
    counts: FaceCounts,
}

impl BoundPipeline {
    pub fn new(vtable: VTable) -> Self {
        BoundPipeline {
            counts: FaceCounts::new(vtable),
        }
    }

    pub fn vtable(&self) -> &VTable {
        self.counts.vtable()
    }

    fn check_dim(d: usize) -> Result<()> {
        if d == 0 || d > MAX_DIM {
            return Err(Error::Unsupported(format!("dimension {d} outside 1..={MAX_DIM}")));
        }
        Ok(())
    }

    fn rhs(d: usize, dp: usize, scaled: bool) -> Rational {
        let faces = (BigInt::one() << (d - dp)) * BigInt::from(binomial(d, dp));
        let rhs = Rational::from_integer(faces);
        if scaled {
            rhs * Rational::from_integer(BigInt::from(factorial(dp)))
        } else {
            rhs
        }
    }

    fn coeff(numer: BigInt, dp: usize, scaled: bool) -> Rational {
        if scaled {
            Rational::from_integer(numer)
        } else {
            Rational::new(numer, BigInt::from(factorial(dp)))
        }
    }

    /// `V(k) · F(d, V(k), d', V(k))` with `F` from the closed form.
    fn class_term(&self, d: usize, k: usize, dp: usize) -> BigInt {
        let v = self.vtable().v_upper(k);
        BigInt::from(v) * BigInt::from(self.counts.f_closed(d, v, dp))
    }

    /// Program over `y_2..y_d`, where `y_2` counts all class-1 simplices.
    ///
    /// For `d = 1` the single variable `y_2` still stands for class 1.
    pub fn build_general_program(&self, d: usize, scaled: bool) -> Result<LinearProgram> {
        Self::check_dim(d)?;
        let ks: Vec<usize> = (2..=d.max(2)).collect();
        let names = ks.iter().map(|k| format!("y{k}")).collect();
        let mut lp = LinearProgram::new(ks.len()).with_names(names)?;
        lp.set_objective(vec![Rational::one(); ks.len()])?;
        for dp in 1..=d {
            let row = ks
                .iter()
                .map(|&k| Self::coeff(self.class_term(d, k, dp), dp, scaled))
                .collect();
            lp.add_constraint(row, Relation::Ge, Self::rhs(d, dp, scaled))?;
        }
        Ok(lp)
    }

    /// Program over `y_1..y_d` with corners split off and capped by `2^d`.
    ///
    /// The non-corner class-1 coefficient is `floor((d-1)/d · binom(d, d'))`
    /// for `1 < d' < d`; the floor is taken before the `d'!` scaling.
    pub fn build_reduced_program(&self, d: usize, scaled: bool) -> Result<LinearProgram> {
        Self::check_dim(d)?;
        let names = (1..=d).map(|k| format!("y{k}")).collect();
        let mut lp = LinearProgram::new(d).with_names(names)?;
        lp.set_objective(vec![Rational::one(); d])?;
        for dp in 1..=d {
            let row = (1..=d)
                .map(|k| {
                    let mut term = self.class_term(d, k, dp);
                    if k == 2 && 1 < dp && dp < d {
                        term = term * BigInt::from(d - 1) / BigInt::from(d);
                    }
                    Self::coeff(term, dp, scaled)
                })
                .collect();
            lp.add_constraint(row, Relation::Ge, Self::rhs(d, dp, scaled))?;
        }
        let mut cap = vec![Rational::zero(); d];
        cap[0] = Rational::one();
        lp.add_constraint(cap, Relation::Le, Rational::from_integer(BigInt::one() << d))?;
        Ok(lp)
    }

    pub fn build_program(&self, d: usize, kind: ProgramKind, scaled: bool) -> Result<LinearProgram> {
        match kind {
            ProgramKind::General => self.build_general_program(d, scaled),
            ProgramKind::Reduced => self.build_reduced_program(d, scaled),
        }
    }

    /// A feasible point: `d! · 2^d` class-1 simplices (and `2^d` corners).
    pub fn feasible_witness(&self, d: usize, kind: ProgramKind) -> Vec<Rational> {
        let many = Rational::from_integer(BigInt::from(factorial(d)) << d);
        match kind {
            ProgramKind::General => {
                let mut y = vec![Rational::zero(); d.max(2) - 1];
                y[0] = many;
                y
            }
            ProgramKind::Reduced => {
                let mut y = vec![Rational::zero(); d];
                y[0] = Rational::from_integer(BigInt::one() << d);
                if d >= 2 {
                    y[1] = many;
                }
                y
            }
        }
    }

    /// Solves the chosen program exactly and assembles the report row.
    pub fn cover_lower_bound(&self, d: usize, kind: ProgramKind) -> Result<BoundReport> {
        let lp = self.build_program(d, kind, true)?;
        if !lp.is_feasible(&self.feasible_witness(d, kind)) {
            return Err(Error::Lp(format!(
                "{kind} program for d={d} rejects its feasibility witness"
            )));
        }
        let sol = solve_min(&lp);
        match sol.status {
            LpStatus::Optimal => {}
            other => return Err(Error::Lp(format!("{kind} program for d={d} is {other:?}"))),
        }
        if !verify_solution(&lp, &sol) || !verify_dual(&lp, &sol) {
            return Err(Error::Lp(format!("{kind} program for d={d} failed its audit")));
        }
        Ok(BoundReport {
            dim: d,
            program: kind,
            our_bound: ceil(&sol.value),
            lp_value: sol.value,
            assignment: sol.assignment,
            naive_volume_bound: naive_volume_bound(d, self.vtable()),
            smith_asymptotic: smith_asymptotic(d),
            reference_smith: lookup(&SMITH_REFERENCE, d),
            reference_hughes: lookup(&HUGHES_REFERENCE, d),
            asymptotic_v: d > self.vtable().exact_through(),
        })
    }

    /// One report per dimension `2..=max_dim`, in order.
    pub fn bounds_table(&self, max_dim: usize, kind: ProgramKind, exec: Execution) -> Result<Vec<BoundReport>> {
        Self::check_dim(max_dim)?;
        exec.map((2..=max_dim).collect(), |d| self.cover_lower_bound(d, kind))
            .into_iter()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn reduced_d3_rows() {
        let p = BoundPipeline::default();
        let lp = p.build_reduced_program(3, true).unwrap();
        let rows: Vec<_> = lp
            .constraints()
            .iter()
            .map(|c| (c.coeffs.clone(), c.relation, c.rhs.clone()))
            .collect();
        assert_eq!(
            rows,
            vec![
                (ints(&[3, 3, 0]), Relation::Ge, q("12")),
                (ints(&[3, 2, 0]), Relation::Ge, q("12")),
                (ints(&[1, 1, 2]), Relation::Ge, q("6")),
                (ints(&[1, 0, 0]), Relation::Le, q("8")),
            ]
        );
    }

    #[test]
    fn unscaled_rows_divide_by_factorial() {
        let p = BoundPipeline::default();
        let lp = p.build_reduced_program(3, false).unwrap();
        let c = &lp.constraints()[2];
        assert_eq!(c.coeffs, vec![q("1/6"), q("1/6"), q("1/3")]);
        assert_eq!(c.rhs, q("1"));
    }

    #[test]
    fn general_d3_rows() {
        let p = BoundPipeline::default();
        let lp = p.build_general_program(3, true).unwrap();
        assert_eq!(lp.names(), &["y2".to_string(), "y3".to_string()]);
        let rows: Vec<_> = lp
            .constraints()
            .iter()
            .map(|c| (c.coeffs.clone(), c.rhs.clone()))
            .collect();
        assert_eq!(
            rows,
            vec![
                (ints(&[3, 0]), q("12")),
                (ints(&[3, 0]), q("12")),
                (ints(&[1, 2]), q("6"))
            ]
        );
    }

    #[test]
    fn small_dimensions() {
        let p = BoundPipeline::default();
        for kind in [ProgramKind::General, ProgramKind::Reduced] {
            assert_eq!(p.cover_lower_bound(1, kind).unwrap().our_bound, BigInt::from(1));
            assert_eq!(p.cover_lower_bound(2, kind).unwrap().our_bound, BigInt::from(2));
            assert_eq!(p.cover_lower_bound(3, kind).unwrap().our_bound, BigInt::from(5));
        }
        let r = p.cover_lower_bound(3, ProgramKind::Reduced).unwrap();
        assert_eq!(r.lp_value, q("5"));
    }

    #[test]
    fn dimension_limits() {
        let p = BoundPipeline::default();
        assert!(matches!(
            p.cover_lower_bound(0, ProgramKind::Reduced),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            p.cover_lower_bound(61, ProgramKind::Reduced),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn smith_values() {
        assert_eq!(smith_asymptotic(2), BigInt::from(2));
        assert_eq!(smith_asymptotic(1), BigInt::from(1));
    }

    #[test]
    fn naive_values() {
        let t = VTable::default();
        assert_eq!(naive_volume_bound(3, &t), BigInt::from(3));
        assert_eq!(naive_volume_bound(4, &t), BigInt::from(8));
        assert_eq!(naive_volume_bound(7, &t), BigInt::from(158));
        assert_eq!(naive_volume_bound(1, &t), BigInt::from(1));
    }

    #[test]
    fn program_kind_parsing() {
        assert_eq!("general".parse::<ProgramKind>().unwrap(), ProgramKind::General);
        assert_eq!(ProgramKind::Reduced.to_string(), "reduced");
        assert!("other".parse::<ProgramKind>().is_err());
    }

    #[test]
    fn record_round_trip() {
        let p = BoundPipeline::default();
        let r = p.cover_lower_bound(6, ProgramKind::Reduced).unwrap();
        let rec = BoundRecord::from(&r);
        assert_eq!(rec.lp_value().unwrap(), r.lp_value);
        assert_eq!(rec.our_bound().unwrap(), r.our_bound);
        assert_eq!(rec.naive_bound().unwrap(), r.naive_volume_bound);
        assert_eq!(rec.smith_asymptotic().unwrap(), r.smith_asymptotic);
        let json = serde_json::to_string(&rec).unwrap();
        let back: BoundRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
    }
}

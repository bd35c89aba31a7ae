//! The `V(d)` table and bounds on the exterior-face counting function.
//!
//! `F(d, c, d', c')` is the largest number of exterior faces of dimension
//! `d'` and class `c'` that a class-`c` simplex of the `d`-cube can have.
//! This module provides the footprint/shadow recurrence bound, the closed
//! form along `c' = c`, and the refinement for non-corner class-1 simplices.
//!
//! Soundness beyond the exact table: `V(d)` is replaced by the Hadamard-type
//! upper bound `(d+1)^((d+1)/2) / 2^d`. Overestimating `V` can only make more
//! keys nonzero and grow LP coefficients on the covering side, and it makes
//! `delta_lower` underestimate `Δ`, which enlarges `binom(d-Δ, d'-Δ)`. Every
//! fallback therefore weakens a bound and never invalidates it.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::{Class, Error, Result};

/// `V(0..=13)`: the largest class of a simplex in the `d`-cube.
pub const V_TABLE: [Class; 14] = [1, 1, 1, 2, 3, 5, 9, 32, 56, 144, 320, 1458, 3645, 9477];

/// Environment variable naming a default V-table override file.
pub const VTABLE_ENV: &str = "CUBECOVER_VTABLE";

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Class {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: Class = 1;
    for i in 0..k {
        acc = acc * (n - i) as Class / (i + 1) as Class;
    }
    acc
}

/// `binom(n, m)` for signed arguments, zero when `m < 0` or `m > n`.
pub fn binomial_signed(n: i64, m: i64) -> Class {
    if n < 0 || m < 0 || m > n {
        0
    } else {
        binomial(n as usize, m as usize)
    }
}

/// `floor((d+1)^((d+1)/2) / 2^d)`, saturating at `u128::MAX`.
pub fn hadamard_upper(d: usize) -> Class {
    let n = BigUint::from(d + 1);
    let root = num_traits::pow(n, d + 1).sqrt();
    (root >> d).to_u128().unwrap_or(Class::MAX)
}

/// Exact values of `V(d)`, optionally extended from a data file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VTable {
    exact: BTreeMap<usize, Class>,
}

impl Default for VTable {
    fn default() -> Self {
        VTable {
            exact: V_TABLE.iter().enumerate().map(|(d, &v)| (d, v)).collect(),
        }
    }
}

impl VTable {
    /// Applies overrides in the `d V(d)` text format.
    ///
    /// Blank lines and `#` comments are ignored. Values must be at least one,
    /// and the merged table must stay nondecreasing in `d`.
    pub fn with_overrides(mut self, text: &str) -> Result<Self> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |msg: &str| Error::Parse {
                line: lineno + 1,
                msg: format!("{msg}: {raw:?}"),
            };
            let mut parts = line.split_whitespace();
            let (Some(d), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(parse_err("expected two fields"));
            };
            let d: usize = d.parse().map_err(|_| parse_err("bad dimension"))?;
            let v: Class = v.parse().map_err(|_| parse_err("bad value"))?;
            if v == 0 {
                return Err(parse_err("V(d) must be at least 1"));
            }
            self.exact.insert(d, v);
        }
        let values: Vec<_> = self.exact.iter().collect();
        if let Some(w) = values.windows(2).find(|w| w[0].1 > w[1].1) {
            return Err(Error::Validation(format!(
                "V table decreases between d={} ({}) and d={} ({})",
                w[0].0, w[0].1, w[1].0, w[1].1
            )));
        }
        Ok(self)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
        VTable::default().with_overrides(&text)
    }

    pub fn v_exact(&self, d: usize) -> Option<Class> {
        self.exact.get(&d).copied()
    }

    /// `V(d)` when known, else the Hadamard-type upper bound.
    pub fn v_upper(&self, d: usize) -> Class {
        self.v_exact(d).unwrap_or_else(|| hadamard_upper(d))
    }

    /// Largest `d` such that `V(0..=d)` are all exact.
    pub fn exact_through(&self) -> usize {
        (0..).take_while(|d| self.exact.contains_key(d)).last().unwrap_or(0)
    }

    /// `min { d : v_upper(d) >= c }`; equals `Δ(c)` inside the exact table
    /// and is a lower bound for it beyond.
    pub fn delta_lower(&self, c: Class) -> usize {
        (0..)
            .find(|&d| self.v_upper(d) >= c)
            .expect("v_upper grows without bound")
    }
}

type FKey = (usize, Class, usize, Class);

/// Memoized bounds for `F(d, c, d', c')` over a fixed V table.
///
/// Safe to share between threads; the memo is filled on demand.
#[derive(Debug, Default)]
pub struct FaceCounts {
    vtable: VTable,
    memo: Mutex<HashMap<FKey, Class>>,
}

impl FaceCounts {
    pub fn new(vtable: VTable) -> Self {
        FaceCounts {
            vtable,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn vtable(&self) -> &VTable {
        &self.vtable
    }

    pub fn memo_len(&self) -> usize {
        self.memo.lock().expect("memo lock").len()
    }

    /// Recurrence upper bound for `F(d, c, d', c')`.
    ///
    /// Zero when `c > V(d)`, `c' > V(d')`, `d' > d` or `c'` does not divide
    /// `c`; one for `d' = 0` by convention; `[c' = c]` for `d' = d`; otherwise
    /// the sum over footprint dimension `δ` and footprint class `γ | c'` of
    /// `F(d', c', δ, γ) · F(d - d', c/c', d' - δ, c'/γ)`. Saturating arithmetic
    /// keeps the value an upper bound if it ever overflows.
    pub fn f_bound(&self, d: usize, c: Class, dp: usize, cp: Class) -> Class {
        if c == 0
            || cp == 0
            || dp > d
            || !c.is_multiple_of(cp)
            || c > self.vtable.v_upper(d)
            || cp > self.vtable.v_upper(dp)
        {
            return 0;
        }
        if dp == 0 {
            return 1;
        }
        if dp == d {
            return Class::from(cp == c);
        }
        let key = (d, c, dp, cp);
        if let Some(&v) = self.memo.lock().expect("memo lock").get(&key) {
            return v;
        }
        let divisors = divisors(cp);
        let mut total: Class = 0;
        for delta in 0..=dp {
            for &gamma in &divisors {
                let foot = self.f_bound(dp, cp, delta, gamma);
                if foot == 0 {
                    continue;
                }
                let shadow = self.f_bound(d - dp, c / cp, dp - delta, cp / gamma);
                total = total.saturating_add(foot.saturating_mul(shadow));
            }
        }
        self.memo.lock().expect("memo lock").insert(key, total);
        total
    }

    /// Closed form `binom(d - Δ(c), d' - Δ(c))` for `F(d, c, d', c)`.
    pub fn f_closed(&self, d: usize, c: Class, dp: usize) -> Class {
        let delta = self.vtable.delta_lower(c) as i64;
        binomial_signed(d as i64 - delta, dp as i64 - delta)
    }
}

/// Bound on exterior `d'`-faces of a non-corner simplex of the `d`-cube:
/// `floor((d-1)/d · binom(d, d'))` for `1 < d' < d`, `binom(d, d')` otherwise.
pub fn f_noncorner(d: usize, dp: usize) -> Class {
    let b = binomial(d, dp);
    if 1 < dp && dp < d {
        (d as Class - 1) * b / d as Class
    } else {
        b
    }
}

/// Positive divisors of `n` in increasing order.
fn divisors(n: Class) -> Vec<Class> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i: Class = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i * i != n {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `d!` as a big integer.
pub fn factorial(d: usize) -> BigUint {
    (1..=d).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_table_values() {
        let t = VTable::default();
        assert_eq!(t.v_exact(7), Some(32));
        assert_eq!(t.v_exact(0), Some(1));
        assert_eq!(t.v_exact(13), Some(9477));
        assert_eq!(t.v_exact(14), None);
        assert_eq!(t.exact_through(), 13);
    }

    #[test]
    fn v_upper_prefers_exact() {
        let t = VTable::default();
        assert_eq!(t.v_upper(13), 9477);
        assert_eq!(t.v_upper(3), 2);
        // floor(15^7 * sqrt(15) / 2^14) = floor(661735581.4... / 16384)
        assert_eq!(t.v_upper(14), 40389);
    }

    #[test]
    fn hadamard_bound_dominates_table() {
        for (d, &v) in V_TABLE.iter().enumerate() {
            assert!(hadamard_upper(d) >= v, "d={d}");
        }
        for d in 14..=60 {
            assert!(hadamard_upper(d) > hadamard_upper(d - 1));
        }
        assert_eq!(hadamard_upper(200), Class::MAX);
    }

    #[test]
    fn delta_values() {
        let t = VTable::default();
        assert_eq!(t.delta_lower(1), 0);
        assert_eq!(t.delta_lower(2), 3);
        assert_eq!(t.delta_lower(4), 5);
        assert_eq!(t.delta_lower(5), 5);
        let table3 = [
            (9, 6),
            (32, 7),
            (56, 8),
            (144, 9),
            (320, 10),
            (1458, 11),
            (3645, 12),
            (9477, 13),
        ];
        for (c, d) in table3 {
            assert_eq!(t.delta_lower(c), d);
        }
        for k in 3..=13 {
            assert_eq!(t.delta_lower(V_TABLE[k]), k);
        }
    }

    #[test]
    fn overrides() {
        let t = VTable::default()
            .with_overrides("# extra\n14 20000\n\n15 40000 # comment\n")
            .unwrap();
        assert_eq!(t.v_exact(14), Some(20000));
        assert_eq!(t.exact_through(), 15);
        assert!(VTable::default().with_overrides("14 0").is_err());
        assert!(VTable::default().with_overrides("14").is_err());
        assert!(VTable::default().with_overrides("x 3").is_err());
        assert!(matches!(
            VTable::default().with_overrides("14 100"),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(60, 30), 118264581564861424);
        assert_eq!(binomial_signed(0, -2), 0);
        assert_eq!(binomial_signed(2, 1), 2);
    }

    #[test]
    fn f_bound_base_cases() {
        let f = FaceCounts::default();
        for d in 0..8 {
            for c in 1..=V_TABLE[d] {
                assert_eq!(f.f_bound(d, c, 0, 1), 1);
            }
        }
        assert_eq!(f.f_bound(3, 1, 2, 1), 3);
        assert_eq!(f.f_bound(4, 1, 2, 1), 6);
        assert_eq!(f.f_bound(3, 2, 3, 2), 1);
        assert_eq!(f.f_bound(3, 2, 3, 1), 0);
    }

    #[test]
    fn f_bound_zero_rules() {
        let f = FaceCounts::default();
        assert_eq!(f.f_bound(4, 3, 2, 2), 0); // 2 does not divide 3
        assert_eq!(f.f_bound(3, 1, 4, 1), 0); // d' > d
        assert_eq!(f.f_bound(4, 4, 2, 1), 0); // c > V(4)
        assert_eq!(f.f_bound(5, 4, 2, 2), 0); // c' > V(2)
    }

    #[test]
    fn f_closed_values() {
        let f = FaceCounts::default();
        for d in 0..10 {
            for dp in 0..=d {
                assert_eq!(f.f_closed(d, 1, dp), binomial(d, dp));
            }
        }
        assert_eq!(f.f_closed(5, 2, 4), 2);
        assert_eq!(f.f_closed(4, 3, 2), 0);
    }

    #[test]
    fn f_noncorner_values() {
        assert_eq!(f_noncorner(3, 2), 2);
        assert_eq!(f_noncorner(4, 2), 4);
        assert_eq!(f_noncorner(4, 4), 1);
        assert_eq!(f_noncorner(4, 1), 4);
        assert_eq!(f_noncorner(7, 7), 1);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
    }

    #[test]
    fn memo_is_shared_across_threads() {
        let f = FaceCounts::default();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| assert_eq!(f.f_bound(6, 1, 3, 1), 20));
            }
        });
        assert!(f.memo_len() > 0);
    }
}

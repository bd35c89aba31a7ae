//! Statement-by-statement checks of the structural facts about cube simplices.
//!
//! Per-simplex checks run over the whole census for `d <= 4`. For `d = 5`
//! the pairwise face checks run on a seeded sample, while the cheap
//! face-count checks still cover every simplex.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::census::{enumerate_simplices, CensusEntry, CensusOptions, SimplexCensus, HEAVY_CENSUS_DIM};
use crate::counting::{binomial, FaceCounts, VTable};
use crate::exec::Execution;
use crate::simplex::{full_mask, CubeSimplex, ExteriorFace, FaceSelector, Vertex};
use crate::{Class, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

/// Simplices drawn for the sampled pairwise checks.
pub const SAMPLE_SIZE: usize = 3000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub simplex: Option<CubeSimplex>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub cases: u64,
    pub failure: Option<Counterexample>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub dim: usize,
    /// `None` when every check was exhaustive.
    pub sample_seed: Option<u64>,
    pub simplices: usize,
    pub checks: Vec<CheckResult>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sample_seed {
            None => writeln!(f, "d={} exhaustive over {} simplices", self.dim, self.simplices)?,
            Some(seed) => writeln!(
                f,
                "d={} over {} simplices, pairwise checks sampled (seed {seed})",
                self.dim, self.simplices
            )?,
        }
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{verdict} {:<28} {:>10} cases  {}", c.name, c.cases, c.statement)?;
            if let Some(cx) = &c.failure {
                if let Some(s) = &cx.simplex {
                    writeln!(f, "     counterexample {:?}", s.row_strings())?;
                }
                writeln!(f, "     {}", cx.detail)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    ClassDivides,
    ParallelExclusion,
    WitnessUnique,
    ProjectionInjective,
    ClassFactorization,
    SharedRowsColumns,
    FootprintExterior,
    ShadowExterior,
    FootprintShadowAdditive,
    FootprintShadowUnique,
    CornerFaceCounts,
    ThresholdCornersExceed,
    ThresholdOnlyCorners,
}

const PAIRWISE: [Check; 10] = [
    Check::ClassDivides,
    Check::ParallelExclusion,
    Check::WitnessUnique,
    Check::ProjectionInjective,
    Check::ClassFactorization,
    Check::SharedRowsColumns,
    Check::FootprintExterior,
    Check::ShadowExterior,
    Check::FootprintShadowAdditive,
    Check::FootprintShadowUnique,
];

const COUNTING: [Check; 3] = [
    Check::CornerFaceCounts,
    Check::ThresholdCornersExceed,
    Check::ThresholdOnlyCorners,
];

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::ClassDivides => "class-divides",
            Check::ParallelExclusion => "parallel-exclusion",
            Check::WitnessUnique => "column-witness-unique",
            Check::ProjectionInjective => "projection-injective",
            Check::ClassFactorization => "class-factorization",
            Check::SharedRowsColumns => "shared-rows-columns",
            Check::FootprintExterior => "footprint-exterior",
            Check::ShadowExterior => "shadow-exterior",
            Check::FootprintShadowAdditive => "footprint-shadow-additive",
            Check::FootprintShadowUnique => "footprint-shadow-unique",
            Check::CornerFaceCounts => "corner-face-counts",
            Check::ThresholdCornersExceed => "threshold-corners-exceed",
            Check::ThresholdOnlyCorners => "threshold-only-corners",
        }
    }

    fn statement(self) -> &'static str {
        match self {
            Check::ClassDivides => "an exterior face's class divides the simplex class; equal on facets",
            Check::ParallelExclusion => "cube faces parallel to an exterior face hold at most one vertex",
            Check::WitnessUnique => "distinct exterior j-faces (j>0) have distinct column sets",
            Check::ProjectionInjective => "projection along a face is injective off the face",
            Check::ClassFactorization => "class(s) = class(sigma) * class(projection)",
            Check::SharedRowsColumns => "shared rows j, columns k: j>0 => j=k+1, j=0 => k=0, off-face counts agree",
            Check::FootprintExterior => "sigma ∩ tau is an exterior face",
            Check::ShadowExterior => "the shadow of tau is exterior on the projection",
            Check::FootprintShadowAdditive => "footprint and shadow dimensions add, classes multiply",
            Check::FootprintShadowUnique => "equal-dimension faces have distinct footprint-shadow point sets",
            Check::CornerFaceCounts => "a corner has binom(d,d') exterior d'-faces",
            Check::ThresholdCornersExceed => "for 1<d'<d a corner has more than (d-1)/d binom(d,d') exterior d'-faces",
            Check::ThresholdOnlyCorners => "for 1<d'<d only corners exceed (d-1)/d binom(d,d') exterior d'-faces",
        }
    }
}

#[derive(Clone, Debug)]
struct Tally {
    check: Check,
    cases: u64,
    failure: Option<Counterexample>,
}

impl Tally {
    fn new(check: Check) -> Self {
        Tally {
            check,
            cases: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, s: &CubeSimplex, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(Counterexample {
                simplex: Some(s.clone()),
                detail: detail(),
            });
        }
    }

    fn absorb(&mut self, later: Tally) {
        self.cases += later.cases;
        if self.failure.is_none() {
            self.failure = later.failure;
        }
    }

    fn result(self) -> CheckResult {
        CheckResult {
            name: self.check.name(),
            statement: self.check.statement(),
            cases: self.cases,
            failure: self.failure,
        }
    }
}

struct Tallies(Vec<Tally>);

impl Tallies {
    fn new(checks: &[Check]) -> Self {
        Tallies(checks.iter().map(|&c| Tally::new(c)).collect())
    }

    fn get(&mut self, check: Check) -> &mut Tally {
        self.0.iter_mut().find(|t| t.check == check).expect("check registered")
    }

    fn absorb(&mut self, later: Tallies) {
        for (a, b) in self.0.iter_mut().zip(later.0) {
            a.absorb(b);
        }
    }
}

fn pick(rows: &[Vertex], mask: u64) -> impl Iterator<Item = (usize, Vertex)> + '_ {
    rows.iter()
        .enumerate()
        .filter(move |&(i, _)| mask >> i & 1 == 1)
        .map(|(i, &v)| (i, v))
}

fn pairwise_checks(s: &CubeSimplex, t: &mut Tallies) {
    let d = s.dim();
    let faces = match s.all_exterior_faces() {
        Ok(f) => f,
        Err(e) => {
            t.get(Check::WitnessUnique).record(false, s, || e.to_string());
            return;
        }
    };
    let rows = s.rows();

    for f in &faces {
        t.get(Check::ClassDivides).record(
            s.class().is_multiple_of(f.class()) && (f.dim() + 1 != d || f.class() == s.class()),
            s,
            || {
                format!(
                    "face {:?} has class {} in a class-{} simplex",
                    f.row_indices(),
                    f.class(),
                    s.class()
                )
            },
        );

        let mut seen: HashSet<Vertex> = HashSet::new();
        let mut ok = true;
        for (_, v) in pick(rows, !f.rows_mask()) {
            let anchor = v & !f.cols_mask();
            ok &= anchor != f.fixed_coords() && seen.insert(anchor);
        }
        t.get(Check::ParallelExclusion).record(ok, s, || {
            format!(
                "a cube face parallel to that of {:?} holds two vertices",
                f.row_indices()
            )
        });
    }

    for j in 1..=d {
        let cols: Vec<u64> = faces.iter().filter(|f| f.dim() == j).map(|f| f.cols_mask()).collect();
        let distinct: BTreeSet<u64> = cols.iter().copied().collect();
        t.get(Check::WitnessUnique).record(distinct.len() == cols.len(), s, || {
            format!("two exterior {j}-faces share columns")
        });
    }

    for sigma in &faces {
        let origin = pick(rows, sigma.rows_mask()).map(|(_, v)| v).min().expect("nonempty");
        let kept = full_mask(d) & !sigma.cols_mask();
        let mut images: HashSet<Vertex> = HashSet::new();
        images.insert(0);
        let injective = pick(rows, !sigma.rows_mask()).all(|(_, v)| images.insert((v ^ origin) & kept));
        t.get(Check::ProjectionInjective).record(injective, s, || {
            format!("projection along {:?} identifies two vertices", sigma.row_indices())
        });

        let proj = match s.project_along(sigma) {
            Ok(p) => {
                t.get(Check::ClassFactorization)
                    .record(p.simplex.class() * sigma.class() == s.class(), s, || {
                        format!(
                            "projection along {:?} has class {}",
                            sigma.row_indices(),
                            p.simplex.class()
                        )
                    });
                p
            }
            Err(e) => {
                t.get(Check::ClassFactorization).record(false, s, || e.to_string());
                continue;
            }
        };

        let mut pairs: HashSet<(Vec<Vertex>, Vec<Vertex>)> = HashSet::new();
        let mut unique = true;
        for tau in &faces {
            let shared = sigma.rows_mask() & tau.rows_mask();
            let j = shared.count_ones();
            let k = (sigma.cols_mask() & tau.cols_mask()).count_ones();
            let off_rows = (!(sigma.rows_mask() | tau.rows_mask()) & ((1u64 << (d + 1)) - 1)).count_ones();
            let off_cols = (full_mask(d) & !(sigma.cols_mask() | tau.cols_mask())).count_ones();
            let lemma = if j > 0 { j == k + 1 } else { k == 0 } && (k == 0 || off_rows == off_cols);
            t.get(Check::SharedRowsColumns).record(lemma, s, || {
                format!(
                    "faces {:?} and {:?} share {j} rows, {k} columns, {off_rows} off-rows, {off_cols} off-columns",
                    sigma.row_indices(),
                    tau.row_indices()
                )
            });

            let footprint: Option<ExteriorFace> = if shared == 0 {
                None
            } else {
                match s.check_exterior(&FaceSelector::from_mask(shared)) {
                    Ok(Some(f)) => Some(f),
                    other => {
                        t.get(Check::FootprintExterior).record(false, s, || {
                            format!(
                                "rows {:?} of the intersection: {other:?}",
                                FaceSelector::from_mask(shared).indices()
                            )
                        });
                        continue;
                    }
                }
            };
            t.get(Check::FootprintExterior).record(true, s, String::new);

            let shadow_rows = tau
                .row_indices()
                .into_iter()
                .fold(0u64, |m, r| m | 1 << proj.image_row(r));
            let shadow = match proj.simplex.check_exterior(&FaceSelector::from_mask(shadow_rows)) {
                Ok(Some(f)) => f,
                other => {
                    t.get(Check::ShadowExterior).record(false, s, || {
                        format!(
                            "shadow of {:?} along {:?}: {other:?}",
                            tau.row_indices(),
                            sigma.row_indices()
                        )
                    });
                    continue;
                }
            };
            t.get(Check::ShadowExterior).record(true, s, String::new);

            let (fp_dim, fp_class) = footprint.map_or((0, 1), |f| (f.dim(), f.class()));
            t.get(Check::FootprintShadowAdditive).record(
                fp_dim + shadow.dim() == tau.dim() && fp_class * shadow.class() == tau.class(),
                s,
                || {
                    format!(
                        "footprint ({fp_dim}, {fp_class}) and shadow ({}, {}) of {:?}",
                        shadow.dim(),
                        shadow.class(),
                        tau.row_indices()
                    )
                },
            );

            if tau.dim() == sigma.dim() {
                let mut fp: Vec<Vertex> = pick(rows, shared).map(|(_, v)| v).collect();
                let mut sh: Vec<Vertex> = pick(rows, tau.rows_mask()).map(|(_, v)| proj.image_vertex(v)).collect();
                fp.sort_unstable();
                sh.sort_unstable();
                sh.dedup();
                unique &= pairs.insert((fp, sh));
            }
        }
        t.get(Check::FootprintShadowUnique).record(unique, s, || {
            format!(
                "two faces share a footprint-shadow pair along {:?}",
                sigma.row_indices()
            )
        });
    }
}

fn counting_checks(s: &CubeSimplex, claimed_corner: bool, faces_of_dim: impl Fn(usize) -> usize, t: &mut Tallies) {
    let d = s.dim();
    if claimed_corner {
        for dp in 1..=d {
            let n = faces_of_dim(dp);
            t.get(Check::CornerFaceCounts)
                .record(n as Class == binomial(d, dp), s, || {
                    format!("{n} exterior {dp}-faces, expected {}", binomial(d, dp))
                });
        }
    }
    for dp in 2..d {
        let n = faces_of_dim(dp) as Class;
        let exceeds = n * d as Class > (d as Class - 1) * binomial(d, dp);
        if claimed_corner {
            t.get(Check::ThresholdCornersExceed).record(exceeds, s, || {
                format!("labelled corner with only {n} exterior {dp}-faces")
            });
        } else {
            t.get(Check::ThresholdOnlyCorners)
                .record(!exceeds, s, || format!("non-corner with {n} exterior {dp}-faces"));
        }
    }
}

/// Runs every per-simplex check on one simplex, treating it as a corner iff
/// `claimed_corner`.
pub fn check_simplex(s: &CubeSimplex, claimed_corner: bool) -> Vec<CheckResult> {
    let mut t = Tallies::new(&[&PAIRWISE[..], &COUNTING[..]].concat());
    if let Err(e) = s.require_nondegenerate() {
        t.get(Check::ClassDivides).record(false, s, || e.to_string());
    } else {
        pairwise_checks(s, &mut t);
        counting_checks(
            s,
            claimed_corner,
            |dp| s.count_exterior(dp).unwrap_or(usize::MAX),
            &mut t,
        );
    }
    t.0.into_iter().map(Tally::result).collect()
}

const CHUNK: usize = 64;

fn run_pairwise(simplices: &[&CubeSimplex], exec: Execution) -> Tallies {
    let chunks: Vec<&[&CubeSimplex]> = simplices.chunks(CHUNK).collect();
    let parts = exec.map(chunks, |chunk| {
        let mut t = Tallies::new(&PAIRWISE);
        for s in chunk {
            pairwise_checks(s, &mut t);
        }
        t
    });
    let mut all = Tallies::new(&PAIRWISE);
    for p in parts {
        all.absorb(p);
    }
    all
}

fn run_counting(entries: &[CensusEntry]) -> Tallies {
    let mut t = Tallies::new(&COUNTING);
    for e in entries {
        counting_checks(&e.simplex, e.corner, |dp| e.faces_of_dim(dp), &mut t);
    }
    t
}

fn census_checks(census: &SimplexCensus, vtable: &VTable) -> Vec<CheckResult> {
    let d = census.dim();
    let counts = FaceCounts::new(vtable.clone());

    let mut sound = CheckResult {
        name: "census-vs-recurrence",
        statement: "exact F(d,c,d',c') <= recurrence bound for d' >= 1",
        cases: 0,
        failure: None,
    };
    for ((c, dp, cp), w) in census.realized() {
        if dp == 0 {
            continue;
        }
        sound.cases += 1;
        let bound = counts.f_bound(d, c, dp, cp);
        if w.value as Class > bound && sound.failure.is_none() {
            sound.failure = Some(Counterexample {
                simplex: Some(w.simplex.clone()),
                detail: format!("F({d},{c},{dp},{cp}) = {} exceeds bound {bound}", w.value),
            });
        }
    }

    let mut sharp = CheckResult {
        name: "closed-form-sharp-class-1",
        statement: "exact F(d,1,d',1) = binom(d,d') for d' >= 1",
        cases: 0,
        failure: None,
    };
    for dp in 1..=d {
        sharp.cases += 1;
        let got = census.exact_f(1, dp, 1);
        if got as Class != binomial(d, dp) && sharp.failure.is_none() {
            sharp.failure = Some(Counterexample {
                simplex: census.witness(1, dp, 1).map(|w| w.simplex.clone()),
                detail: format!("F({d},1,{dp},1) = {got}, binom = {}", binomial(d, dp)),
            });
        }
    }

    let top = census.max_class();
    let expected = vtable.v_exact(d);
    let max_class = CheckResult {
        name: "max-class",
        statement: "the largest class in the census is V(d)",
        cases: census.len() as u64,
        failure: (expected != Some(top)).then(|| Counterexample {
            simplex: census
                .entries()
                .iter()
                .find(|e| e.simplex.class() == top)
                .map(|e| e.simplex.clone()),
            detail: format!("census maximum {top}, table value {expected:?}"),
        }),
    };

    vec![sound, sharp, max_class]
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub heavy: bool,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            heavy: false,
            exec: Execution::default(),
        }
    }
}

/// Checks every structural statement against the `d`-cube census.
pub fn verify_theorems(d: usize, opts: VerifyOptions) -> Result<TheoremReport> {
    let census = enumerate_simplices(
        d,
        CensusOptions {
            max_class: None,
            heavy: opts.heavy,
            exec: opts.exec,
        },
    )?;
    verify_census(&census, &VTable::default(), opts)
}

/// Like [`verify_theorems`] on an already computed census.
pub fn verify_census(census: &SimplexCensus, vtable: &VTable, opts: VerifyOptions) -> Result<TheoremReport> {
    let d = census.dim();
    let entries = census.entries();
    let (chosen, sample_seed): (Vec<&CubeSimplex>, Option<u64>) = if d < HEAVY_CENSUS_DIM {
        (entries.iter().map(|e| &e.simplex).collect(), None)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut idx = sample(&mut rng, entries.len(), SAMPLE_SIZE.min(entries.len())).into_vec();
        idx.sort_unstable();
        (idx.into_iter().map(|i| &entries[i].simplex).collect(), Some(opts.seed))
    };
    let mut checks: Vec<CheckResult> = run_pairwise(&chosen, opts.exec)
        .0
        .into_iter()
        .map(Tally::result)
        .collect();
    checks.extend(run_counting(entries).0.into_iter().map(Tally::result));
    checks.extend(census_checks(census, vtable));
    Ok(TheoremReport {
        dim: d,
        sample_seed,
        simplices: entries.len(),
        checks,
    })
}

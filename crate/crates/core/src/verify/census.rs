//! Exhaustive enumeration of cube simplices with exterior-face profiles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exec::Execution;
use crate::simplex::{CubeSimplex, Vertex};
use crate::{Class, Error, Result};

/// Largest census dimension; it needs the heavy flag.
pub const HEAVY_CENSUS_DIM: usize = 5;

#[derive(Clone, Copy, Debug, Default)]
pub struct CensusOptions {
    /// Skip simplices above this class entirely.
    pub max_class: Option<Class>,
    /// Allow the `d = 5` census.
    pub heavy: bool,
    pub exec: Execution,
}

/// Exterior faces of one dimension and class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProfileKey {
    pub face_dim: usize,
    pub class: Class,
}

/// One nondegenerate simplex and how many exterior faces of each kind it has.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub simplex: CubeSimplex,
    pub corner: bool,
    /// Sorted by key; only nonzero counts.
    pub profile: Vec<(ProfileKey, usize)>,
}

impl CensusEntry {
    pub fn new(simplex: CubeSimplex) -> Result<Self> {
        let mut counts: BTreeMap<ProfileKey, usize> = BTreeMap::new();
        for f in simplex.all_exterior_faces()? {
            *counts
                .entry(ProfileKey {
                    face_dim: f.dim(),
                    class: f.class(),
                })
                .or_default() += 1;
        }
        Ok(CensusEntry {
            corner: simplex.is_corner(),
            simplex,
            profile: counts.into_iter().collect(),
        })
    }

    pub fn count(&self, key: ProfileKey) -> usize {
        self.profile
            .binary_search_by(|(k, _)| k.cmp(&key))
            .map(|i| self.profile[i].1)
            .unwrap_or(0)
    }

    /// Exterior faces of dimension `face_dim`, any class.
    pub fn faces_of_dim(&self, face_dim: usize) -> usize {
        self.profile
            .iter()
            .filter(|(k, _)| k.face_dim == face_dim)
            .map(|(_, n)| n)
            .sum()
    }

    pub fn record(&self) -> CensusRecord {
        CensusRecord {
            dim: self.simplex.dim(),
            rows: self.simplex.row_strings(),
            class: self.simplex.class(),
            corner: self.corner,
            profile: self
                .profile
                .iter()
                .map(|(k, n)| (format!("{},{}", k.face_dim, k.class), *n))
                .collect(),
        }
    }
}

/// JSON-lines export row. Profile keys are `"d',c'"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub dim: usize,
    pub rows: Vec<String>,
    pub class: Class,
    pub corner: bool,
    pub profile: BTreeMap<String, usize>,
}

/// A count together with the first simplex (in census order) attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnessed {
    pub value: usize,
    pub simplex: CubeSimplex,
}

#[derive(Default)]
struct Block {
    entries: Vec<CensusEntry>,
    maxima: BTreeMap<(Class, ProfileKey), Witnessed>,
}

impl Block {
    fn push(&mut self, entry: CensusEntry) {
        let c = entry.simplex.class();
        for &(key, n) in &entry.profile {
            let slot = self.maxima.entry((c, key));
            match slot {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(Witnessed {
                        value: n,
                        simplex: entry.simplex.clone(),
                    });
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    if n > o.get().value {
                        o.insert(Witnessed {
                            value: n,
                            simplex: entry.simplex.clone(),
                        });
                    }
                }
            }
        }
        self.entries.push(entry);
    }

    fn absorb(&mut self, later: Block) {
        for (key, w) in later.maxima {
            match self.maxima.get(&key) {
                Some(old) if old.value >= w.value => {}
                _ => {
                    self.maxima.insert(key, w);
                }
            }
        }
        self.entries.extend(later.entries);
    }
}

/// All nondegenerate simplices of the `d`-cube, in lexicographic row order.
#[derive(Clone, Debug)]
pub struct SimplexCensus {
    dim: usize,
    subsets: u128,
    entries: Vec<CensusEntry>,
    maxima: BTreeMap<(Class, ProfileKey), Witnessed>,
}

impl SimplexCensus {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of `(d+1)`-subsets of cube vertices examined.
    pub fn subsets(&self) -> u128 {
        self.subsets
    }

    pub fn entries(&self) -> &[CensusEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Simplices grouped by class.
    pub fn by_class(&self) -> BTreeMap<Class, Vec<&CensusEntry>> {
        let mut out: BTreeMap<Class, Vec<&CensusEntry>> = BTreeMap::new();
        for e in &self.entries {
            out.entry(e.simplex.class()).or_default().push(e);
        }
        out
    }

    pub fn max_class(&self) -> Class {
        self.entries.iter().map(|e| e.simplex.class()).max().unwrap_or(0)
    }

    /// Maximum number of exterior `(dp, cp)`-faces over class-`c` simplices.
    pub fn exact_f(&self, c: Class, dp: usize, cp: Class) -> usize {
        self.witness(c, dp, cp).map_or(0, |w| w.value)
    }

    pub fn witness(&self, c: Class, dp: usize, cp: Class) -> Option<&Witnessed> {
        self.maxima.get(&(
            c,
            ProfileKey {
                face_dim: dp,
                class: cp,
            },
        ))
    }

    /// Every `(c, d', c')` realized by some simplex, with its maximum.
    pub fn realized(&self) -> impl Iterator<Item = ((Class, usize, Class), &Witnessed)> {
        self.maxima.iter().map(|(&(c, k), w)| ((c, k.face_dim, k.class), w))
    }
}

fn vertex_count(d: usize) -> usize {
    1 << d
}

/// Calls `f` with each `k`-subset of `lo..n` in lexicographic order.
fn for_each_combination(lo: usize, n: usize, k: usize, mut f: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if k == 0 {
        return f(&[]);
    }
    if n < lo + k {
        return Ok(());
    }
    let mut idx: Vec<usize> = (lo..lo + k).collect();
    loop {
        f(&idx)?;
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] < n - (k - i) {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn census_block(d: usize, first: usize, max_class: Option<Class>) -> Result<Block> {
    let mut block = Block::default();
    let mut rows: Vec<Vertex> = vec![first as Vertex; d + 1];
    for_each_combination(first + 1, vertex_count(d), d, |rest| {
        for (slot, &v) in rows[1..].iter_mut().zip(rest) {
            *slot = v as Vertex;
        }
        let s = CubeSimplex::new(d, rows.clone())?;
        if s.is_degenerate() || max_class.is_some_and(|m| s.class() > m) {
            return Ok(());
        }
        block.push(CensusEntry::new(s)?);
        Ok(())
    })?;
    Ok(block)
}

/// Enumerates every nondegenerate simplex of the `d`-cube, `2 <= d <= 5`.
///
/// Work is split by the smallest vertex and merged in that order, so the
/// result does not depend on the execution mode.
pub fn enumerate_simplices(d: usize, opts: CensusOptions) -> Result<SimplexCensus> {
    if !(2..=HEAVY_CENSUS_DIM).contains(&d) {
        return Err(Error::Unsupported(format!(
            "census dimension {d} outside 2..={HEAVY_CENSUS_DIM}"
        )));
    }
    if d == HEAVY_CENSUS_DIM && !opts.heavy {
        return Err(Error::Unsupported(format!(
            "the {d}-cube census is heavy; enable it explicitly"
        )));
    }
    let n = vertex_count(d);
    let firsts: Vec<usize> = (0..n - d).collect();
    let blocks = opts.exec.map(firsts, |first| census_block(d, first, opts.max_class));
    let mut all = Block::default();
    for b in blocks {
        all.absorb(b?);
    }
    Ok(SimplexCensus {
        dim: d,
        subsets: crate::counting::binomial(n, d + 1),
        entries: all.entries,
        maxima: all.maxima,
    })
}

//! Rational triangulations of the cube and the covers they induce.
//!
//! Every vertex of a triangulation is sent to the lexicographically smallest
//! vertex of the smallest cube face containing it (coordinates strictly
//! between 0 and 1 become 0). Each simplex maps to the simplex spanned by its
//! images; the nondegenerate images form a simplicial cover.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counting::factorial;
use crate::simplex::{col_bit, CubeSimplex, Vertex};
use crate::{Error, Rational, Result};

pub type Point = Vec<Rational>;

/// Largest dimension for [`standard_triangulation`].
pub const MAX_STANDARD_DIM: usize = 6;

/// Largest denominator of sampled coverage points.
pub const SAMPLE_DENOMINATOR: i64 = 97;

/// Simplices with rational vertices in `[0,1]^d`.
///
/// Face-to-face meeting of the simplices is assumed, not checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricTriangulation {
    dim: usize,
    simplices: Vec<Vec<Point>>,
}

impl GeometricTriangulation {
    pub fn new(dim: usize, simplices: Vec<Vec<Point>>) -> Result<Self> {
        for (i, s) in simplices.iter().enumerate() {
            if s.len() != dim + 1 || s.iter().any(|p| p.len() != dim) {
                return Err(Error::Validation(format!(
                    "simplex {i} is not {} points in dimension {dim}",
                    dim + 1
                )));
            }
            if signed_volume(s).is_zero() {
                return Err(Error::Degenerate(format!("simplex {i} has zero volume")));
            }
        }
        Ok(GeometricTriangulation { dim, simplices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simplices(&self) -> &[Vec<Point>] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Sum of the simplex volumes.
    pub fn volume(&self) -> Rational {
        self.simplices.iter().map(|s| signed_volume(s).abs()).sum()
    }
}

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut acc = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let pivot = m[c][c].clone();
        acc *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let (top, bottom) = m.split_at_mut(r);
            let (src, dst) = (&top[c], &mut bottom[0]);
            let f = &dst[c] / &pivot;
            for (x, y) in dst[c..].iter_mut().zip(&src[c..]) {
                *x -= &f * y;
            }
        }
    }
    acc
}

/// `det[1|P] / d!` for `d + 1` points in dimension `d`.
pub fn signed_volume(points: &[Point]) -> Rational {
    let d = points.len().saturating_sub(1);
    let m = points
        .iter()
        .map(|p| std::iter::once(Rational::one()).chain(p.iter().cloned()).collect())
        .collect();
    det(m) / Rational::from_integer(BigInt::from(factorial(d)))
}

pub fn vertex_point(dim: usize, v: Vertex) -> Point {
    (0..dim)
        .map(|j| Rational::from_integer(BigInt::from((v & col_bit(dim, j) != 0) as u8)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// The chain `0, e_{s_d}, e_{s_d} + e_{s_{d-1}}, ..., 1` of a coordinate order.
fn chain(dim: usize, order: &[usize], base: Vertex) -> Vec<Vertex> {
    let mut v = base;
    let mut out = vec![v];
    for &c in order.iter().rev() {
        v |= col_bit(dim, c);
        out.push(v);
    }
    out
}

/// The `d!` simplices `0 <= x_{s_1} <= ... <= x_{s_d} <= 1`, one per
/// permutation in lexicographic order.
pub fn standard_triangulation(d: usize) -> Result<GeometricTriangulation> {
    if !(1..=MAX_STANDARD_DIM).contains(&d) {
        return Err(Error::Unsupported(format!(
            "standard triangulation dimension {d} outside 1..={MAX_STANDARD_DIM}"
        )));
    }
    let simplices = permutations(d)
        .into_iter()
        .map(|s| chain(d, &s, 0).into_iter().map(|v| vertex_point(d, v)).collect())
        .collect();
    GeometricTriangulation::new(d, simplices)
}

/// The boundary of the `d`-cube, each facet triangulated by its standard
/// triangulation, coned to the barycenter: `2d (d-1)!` simplices.
pub fn coned_cube_triangulation(d: usize) -> Result<GeometricTriangulation> {
    if !(2..=MAX_STANDARD_DIM).contains(&d) {
        return Err(Error::Unsupported(format!(
            "coned triangulation dimension {d} outside 2..={MAX_STANDARD_DIM}"
        )));
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let center: Point = vec![half; d];
    let mut simplices = Vec::new();
    for axis in 0..d {
        let others: Vec<usize> = (0..d).filter(|&c| c != axis).collect();
        for base in [0, col_bit(d, axis)] {
            for perm in permutations(d - 1) {
                let order: Vec<usize> = perm.iter().map(|&i| others[i]).collect();
                let mut s: Vec<Point> = chain(d, &order, base).into_iter().map(|v| vertex_point(d, v)).collect();
                s.push(center.clone());
                simplices.push(s);
            }
        }
    }
    GeometricTriangulation::new(d, simplices)
}

/// Lexicographically smallest vertex of the smallest cube face containing `p`.
pub fn sperner_vertex(p: &[Rational]) -> Result<Vertex> {
    let d = p.len();
    let mut v = 0;
    for (j, x) in p.iter().enumerate() {
        if x.is_negative() || *x > Rational::one() {
            return Err(Error::Validation(format!("coordinate {x} lies outside [0,1]")));
        }
        if x.is_one() {
            v |= col_bit(d, j);
        }
    }
    Ok(v)
}

/// The image of one input simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverImage {
    /// Index of the input simplex.
    pub source: usize,
    /// Rows in the order of the input simplex's vertices.
    pub simplex: CubeSimplex,
    /// `+1` if the map preserves orientation on this simplex, `-1` if it reverses it.
    pub orientation: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverExtraction {
    pub dim: usize,
    pub images: Vec<CoverImage>,
    /// Inputs whose image is degenerate.
    pub degenerate: Vec<usize>,
}

impl CoverExtraction {
    /// Nondegenerate images as vertex sets, merged and sorted.
    pub fn distinct(&self) -> Vec<CubeSimplex> {
        let mut out: Vec<CubeSimplex> = self
            .images
            .iter()
            .map(|im| {
                let mut rows = im.simplex.rows().to_vec();
                rows.sort_unstable();
                CubeSimplex::new(self.dim, rows).expect("rows already validated")
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Total signed volume of the images; the degree of the map times the cube volume.
    pub fn degree(&self) -> Rational {
        let d = Rational::from_integer(BigInt::from(factorial(self.dim)));
        self.images
            .iter()
            .map(|im| Rational::from_integer(BigInt::from(im.simplex.class()) * im.orientation as i32) / &d)
            .sum()
    }
}

/// Maps a triangulation of the cube to a simplicial cover.
pub fn cover_from_triangulation(t: &GeometricTriangulation) -> Result<CoverExtraction> {
    let d = t.dim();
    let mut images = Vec::new();
    let mut degenerate = Vec::new();
    for (i, s) in t.simplices().iter().enumerate() {
        let rows = s.iter().map(|p| sperner_vertex(p)).collect::<Result<Vec<_>>>()?;
        let image = match CubeSimplex::new(d, rows) {
            Ok(im) if !im.is_degenerate() => im,
            Ok(_) | Err(Error::Degenerate(_)) => {
                degenerate.push(i);
                continue;
            }
            Err(e) => return Err(e),
        };
        let points: Vec<Point> = image.rows().iter().map(|&v| vertex_point(d, v)).collect();
        let same = signed_volume(&points).is_positive() == signed_volume(s).is_positive();
        images.push(CoverImage {
            source: i,
            simplex: image,
            orientation: if same { 1 } else { -1 },
        });
    }
    Ok(CoverExtraction {
        dim: d,
        images,
        degenerate,
    })
}

/// Exact point location in a fixed simplex via barycentric coordinates.
struct Locator {
    /// Inverse of the matrix whose columns are `(1, v_i)`.
    inverse: Vec<Vec<Rational>>,
}

impl Locator {
    fn new(points: &[Point]) -> Option<Self> {
        let n = points.len();
        let mut m: Vec<Vec<Rational>> = (0..n)
            .map(|r| {
                let mut row: Vec<Rational> = points
                    .iter()
                    .map(|p| if r == 0 { Rational::one() } else { p[r - 1].clone() })
                    .collect();
                row.extend((0..n).map(|k| if k == r { Rational::one() } else { Rational::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero())?;
            m.swap(p, c);
            let inv = Rational::one() / &m[c][c];
            for x in m[c].iter_mut() {
                *x *= &inv;
            }
            let pivot = m[c].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == c || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        Some(Locator {
            inverse: m.into_iter().map(|row| row[n..].to_vec()).collect(),
        })
    }

    /// Boundary points count as inside.
    fn contains(&self, p: &[Rational]) -> bool {
        self.inverse.iter().all(|row| {
            let lambda: Rational = &row[0] + row[1..].iter().zip(p).map(|(a, x)| a * x).sum::<Rational>();
            !lambda.is_negative()
        })
    }
}

/// Barycentric coordinates of `p` with respect to `points`, if nondegenerate.
pub fn barycentric(points: &[Point], p: &[Rational]) -> Option<Vec<Rational>> {
    let loc = Locator::new(points)?;
    Some(
        loc.inverse
            .iter()
            .map(|row| &row[0] + row[1..].iter().zip(p).map(|(a, x)| a * x).sum::<Rational>())
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub samples: usize,
    pub uncovered: Vec<Point>,
}

impl CoverageReport {
    pub fn passed(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// Seeded rational points of `[0,1]^d`, boundary included.
pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let den = rng.gen_range(1..=SAMPLE_DENOMINATOR);
                    let num = rng.gen_range(0..=den);
                    Rational::new(num.into(), den.into())
                })
                .collect()
        })
        .collect()
}

/// Checks that each sampled point lies in at least one of `simplices`.
pub fn coverage_audit(dim: usize, simplices: &[CubeSimplex], samples: usize, seed: u64) -> CoverageReport {
    let locators: Vec<Locator> = simplices
        .iter()
        .filter_map(|s| Locator::new(&s.rows().iter().map(|&v| vertex_point(dim, v)).collect::<Vec<_>>()))
        .collect();
    let uncovered = sample_points(dim, samples, seed)
        .into_iter()
        .filter(|p| !locators.iter().any(|l| l.contains(p)))
        .collect();
    CoverageReport { samples, uncovered }
}

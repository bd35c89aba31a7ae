//! Simplices spanned by vertices of the unit `d`-cube.
//!
//! A simplex is stored as its matrix representation: `d + 1` rows, each a
//! vertex of `{0,1}^d` packed into a `u64`. Column `j` (0-based, left to
//! right) lives in bit `d - 1 - j`, so the numeric order of packed vertices
//! is the lexicographic order of their coordinate strings.
//!
//! The *class* of a simplex is `|det[1|M]|`, i.e. `d!` times its volume.
//! A `j`-face is *exterior* when its `j + 1` face-rows agree outside some `j`
//! columns (its cube-face-columns).

mod det;

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::{Class, Error, Result, MAX_DIM};

pub use det::{augmented_abs_det, det as integer_det};

/// A cube vertex, packed most-significant coordinate first.
pub type Vertex = u64;

/// Mask of all `dim` coordinates.
pub fn full_mask(dim: usize) -> u64 {
    if dim == 0 {
        0
    } else {
        u64::MAX >> (64 - dim)
    }
}

/// Bit of column `col` in a `dim`-dimensional vertex.
pub fn col_bit(dim: usize, col: usize) -> u64 {
    1u64 << (dim - 1 - col)
}

/// Keeps the coordinates selected by `mask`, packed in their original order.
pub fn compress(v: Vertex, mask: u64, dim: usize) -> Vertex {
    let mut out = 0;
    for col in 0..dim {
        let bit = col_bit(dim, col);
        if mask & bit != 0 {
            out = (out << 1) | u64::from(v & bit != 0);
        }
    }
    out
}

/// Column indices set in `mask`, ascending.
pub fn mask_columns(mask: u64, dim: usize) -> Vec<usize> {
    (0..dim).filter(|&c| mask & col_bit(dim, c) != 0).collect()
}

/// All `k`-element subsets of `{0, .., n-1}` as bitmasks, in increasing order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(u64::MAX >> (64 - k))
    };
    std::iter::from_fn(move || {
        let x = next?;
        next = if x == 0 {
            None
        } else {
            // Gosper's hack
            let c = x & x.wrapping_neg();
            let r = x.wrapping_add(c);
            let nx = (((r ^ x) >> 2) / c) | r;
            (r != 0 && (nx as u128) < limit).then_some(nx)
        };
        Some(x)
    })
}

fn format_vertex(v: Vertex, dim: usize) -> String {
    (0..dim)
        .map(|c| if v & col_bit(dim, c) != 0 { '1' } else { '0' })
        .collect()
}

fn to_class(v: num_bigint::BigInt) -> Class {
    v.to_u128()
        .expect("class of a cube simplex with dim <= MAX_DIM fits in u128")
}

/// Class of the simplex whose vertices are `rows` in the `dim`-cube.
fn class_of(rows: &[Vertex], dim: usize) -> Class {
    let entries: Vec<Vec<i64>> = rows
        .iter()
        .map(|&v| (0..dim).map(|c| i64::from(v & col_bit(dim, c) != 0)).collect())
        .collect();
    to_class(augmented_abs_det(&entries))
}

/// A simplex spanned by `dim + 1` distinct vertices of the `dim`-cube.
///
/// Construction accepts affinely degenerate simplices (class 0) so censuses
/// can filter them, but every face and projection operation requires class
/// at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SimplexRepr", into = "SimplexRepr")]
pub struct CubeSimplex {
    dim: usize,
    rows: Vec<Vertex>,
    class: Class,
}

#[derive(Serialize, Deserialize)]
struct SimplexRepr {
    dim: usize,
    rows: Vec<String>,
}

impl TryFrom<SimplexRepr> for CubeSimplex {
    type Error = Error;

    fn try_from(r: SimplexRepr) -> Result<Self> {
        let rows: Vec<&str> = r.rows.iter().map(String::as_str).collect();
        CubeSimplex::parse(r.dim, &rows)
    }
}

impl From<CubeSimplex> for SimplexRepr {
    fn from(s: CubeSimplex) -> Self {
        SimplexRepr {
            dim: s.dim,
            rows: s.row_strings(),
        }
    }
}

impl CubeSimplex {
    /// Builds a simplex from packed vertices.
    pub fn new(dim: usize, rows: Vec<Vertex>) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::Unsupported(format!(
                "cube dimension {dim} exceeds the supported maximum {MAX_DIM}"
            )));
        }
        if rows.len() != dim + 1 {
            return Err(Error::Validation(format!(
                "a simplex in the {dim}-cube needs {} rows, got {}",
                dim + 1,
                rows.len()
            )));
        }
        let full = full_mask(dim);
        if let Some(v) = rows.iter().find(|&&v| v & !full != 0) {
            return Err(Error::Validation(format!(
                "vertex {v:#x} has coordinates outside the {dim}-cube"
            )));
        }
        for (i, a) in rows.iter().enumerate() {
            if let Some(j) = rows[i + 1..].iter().position(|b| b == a) {
                return Err(Error::Degenerate(format!(
                    "rows {i} and {} repeat vertex {}",
                    i + 1 + j,
                    format_vertex(*a, dim)
                )));
            }
        }
        let class = class_of(&rows, dim);
        Ok(CubeSimplex { dim, rows, class })
    }

    /// Builds a simplex from rows of explicit 0/1 coordinates.
    pub fn from_bits(dim: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut packed = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Validation(format!(
                    "row {i} has length {}, expected {dim}",
                    row.len()
                )));
            }
            let mut v = 0u64;
            for &b in row {
                if b > 1 {
                    return Err(Error::Validation(format!("row {i} has non-binary entry {b}")));
                }
                v = (v << 1) | u64::from(b);
            }
            packed.push(v);
        }
        if dim > MAX_DIM {
            return Err(Error::Unsupported(format!(
                "cube dimension {dim} exceeds the supported maximum {MAX_DIM}"
            )));
        }
        Self::new(dim, packed)
    }

    /// Builds a simplex from coordinate strings such as `"00110"`.
    pub fn parse(dim: usize, rows: &[&str]) -> Result<Self> {
        let bits = rows
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.chars()
                    .map(|ch| match ch {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        other => Err(Error::Validation(format!("row {i} has non-binary character {other:?}"))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(dim, &bits)
    }

    /// The corner simplex at the origin: `0` and the `dim` unit vectors.
    pub fn corner(dim: usize) -> Self {
        let mut rows = vec![0];
        rows.extend((0..dim).map(|c| col_bit(dim, c)));
        Self::new(dim, rows).expect("corner simplex is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vertex] {
        &self.rows
    }

    pub fn row_strings(&self) -> Vec<String> {
        self.rows.iter().map(|&v| format_vertex(v, self.dim)).collect()
    }

    /// Entry `m[row][col]` of the matrix representation.
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        u8::from(self.rows[row] & col_bit(self.dim, col) != 0)
    }

    /// `|det[1|M]|`; zero iff the simplex is degenerate.
    pub fn class(&self) -> Class {
        self.class
    }

    pub fn is_degenerate(&self) -> bool {
        self.class == 0
    }

    pub fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::Degenerate(format!("{self} has class 0")))
        } else {
            Ok(())
        }
    }

    /// Applies the cube symmetry that flips every coordinate in `mask`.
    pub fn toggle_columns(&self, mask: u64) -> Self {
        let rows = self.rows.iter().map(|&v| v ^ (mask & full_mask(self.dim))).collect();
        Self::new(self.dim, rows).expect("coordinate flips preserve validity")
    }

    /// Returns a copy with entry `m[row][col]` flipped, if the result has no repeated rows.
    pub fn toggle_entry(&self, row: usize, col: usize) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows[row] ^= col_bit(self.dim, col);
        Self::new(self.dim, rows)
    }

    /// Returns the exterior face selected by `sel`, or `None` if the face is not exterior.
    ///
    /// The witness is the set of columns on which the selected rows are not
    /// all equal. On a nondegenerate simplex it has at least `j` columns for
    /// a `j`-face; fewer would place `j + 1` vertices in a lower-dimensional
    /// cube face and is reported as an inconsistency.
    pub fn check_exterior(&self, sel: &FaceSelector) -> Result<Option<ExteriorFace>> {
        self.require_nondegenerate()?;
        sel.validate(self.rows.len())?;
        self.exterior_unchecked(sel.mask)
    }

    fn exterior_unchecked(&self, rows_mask: u64) -> Result<Option<ExteriorFace>> {
        let mut idx = (0..self.rows.len()).filter(|&i| rows_mask >> i & 1 == 1);
        let first = self.rows[idx.next().expect("nonempty selector")];
        let varying = idx.fold(0u64, |acc, i| acc | (self.rows[i] ^ first));
        let j = rows_mask.count_ones() - 1;
        let width = varying.count_ones();
        if width < j {
            return Err(Error::Inconsistency(format!(
                "rows {:?} of {self} agree outside {width} < {j} columns",
                FaceSelector::from_mask(rows_mask).indices()
            )));
        }
        if width > j {
            return Ok(None);
        }
        let face_rows: Vec<Vertex> = (0..self.rows.len())
            .filter(|&i| rows_mask >> i & 1 == 1)
            .map(|i| compress(self.rows[i], varying, self.dim))
            .collect();
        Ok(Some(ExteriorFace {
            rows: rows_mask,
            cols: varying,
            fixed: first & !varying,
            class: class_of(&face_rows, j as usize),
        }))
    }

    /// All exterior `face_dim`-faces, in increasing order of their row masks.
    pub fn exterior_faces(&self, face_dim: usize) -> Result<Vec<ExteriorFace>> {
        self.require_nondegenerate()?;
        if face_dim > self.dim {
            return Err(Error::Validation(format!(
                "face dimension {face_dim} exceeds simplex dimension {}",
                self.dim
            )));
        }
        let mut faces = Vec::new();
        for mask in k_subsets(self.rows.len(), face_dim + 1) {
            if let Some(f) = self.exterior_unchecked(mask)? {
                faces.push(f);
            }
        }
        if face_dim > 0 {
            let mut cols: Vec<u64> = faces.iter().map(|f| f.cols).collect();
            cols.sort_unstable();
            if cols.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Inconsistency(format!(
                    "{self} has two exterior {face_dim}-faces in parallel cube faces"
                )));
            }
        }
        Ok(faces)
    }

    /// Every exterior face of every dimension, by increasing row mask.
    ///
    /// Walks all `2^(d+1) - 1` row subsets, so it is limited to `d <= 20`.
    pub fn all_exterior_faces(&self) -> Result<Vec<ExteriorFace>> {
        self.require_nondegenerate()?;
        if self.dim > 20 {
            return Err(Error::Unsupported(format!(
                "full exterior-face scan of a {}-simplex",
                self.dim
            )));
        }
        let mut faces = Vec::new();
        for mask in 1..(1u64 << self.rows.len()) {
            if let Some(f) = self.exterior_unchecked(mask)? {
                faces.push(f);
            }
        }
        Ok(faces)
    }

    /// Number of exterior `face_dim`-faces.
    pub fn count_exterior(&self, face_dim: usize) -> Result<usize> {
        Ok(self.exterior_faces(face_dim)?.len())
    }

    fn require_face(&self, face: &ExteriorFace) -> Result<()> {
        let n = self.rows.len();
        if face.rows == 0 || (n < 64 && face.rows >> n != 0) {
            return Err(Error::Validation(format!(
                "face rows {:#b} invalid for {self}",
                face.rows
            )));
        }
        match self.exterior_unchecked(face.rows)? {
            Some(f) if f == *face => Ok(()),
            _ => Err(Error::Validation(format!(
                "rows {:?} are not the given exterior face of {self}",
                face.row_indices()
            ))),
        }
    }

    /// The `j`-simplex spanned by `face` inside its own `j`-dimensional cube face.
    pub fn face_simplex(&self, face: &ExteriorFace) -> Result<CubeSimplex> {
        self.require_nondegenerate()?;
        self.require_face(face)?;
        let rows = face
            .row_indices()
            .into_iter()
            .map(|i| compress(self.rows[i], face.cols, self.dim))
            .collect();
        CubeSimplex::new(face.dim(), rows)
    }

    /// Projects the simplex along the exterior face `sigma`.
    ///
    /// The cube is reflected so that the lexicographically smallest vertex of
    /// `sigma` sits at the origin, the cube-face-columns of `sigma` are
    /// dropped and the remaining columns keep their order. The result's row 0
    /// is the origin (the image of `sigma`); the other rows are the images of
    /// the non-face-rows in their original order.
    pub fn project_along(&self, sigma: &ExteriorFace) -> Result<Projection> {
        self.require_nondegenerate()?;
        self.require_face(sigma)?;
        let origin = sigma
            .row_indices()
            .into_iter()
            .map(|i| self.rows[i])
            .min()
            .expect("nonempty face");
        let kept = full_mask(self.dim) & !sigma.cols;
        let mut rows = vec![0];
        let mut row_map = vec![0; self.rows.len()];
        for (i, &v) in self.rows.iter().enumerate() {
            if sigma.rows >> i & 1 == 0 {
                row_map[i] = rows.len();
                rows.push(compress(v ^ origin, kept, self.dim));
            }
        }
        let simplex = CubeSimplex::new(self.dim - sigma.dim(), rows).map_err(|e| match e {
            Error::Degenerate(m) => Error::Inconsistency(format!(
                "projection along {:?} is not injective on {self}: {m}",
                sigma.row_indices()
            )),
            other => other,
        })?;
        if simplex.class * sigma.class != self.class {
            return Err(Error::Inconsistency(format!(
                "class {} of {self} is not class({:?}) {} times projected class {}",
                self.class,
                sigma.row_indices(),
                sigma.class,
                simplex.class
            )));
        }
        Ok(Projection {
            simplex,
            origin,
            kept_cols: kept,
            source_dim: self.dim,
            row_map,
        })
    }

    /// Footprint and shadow of `tau` with respect to `sigma`.
    pub fn footprint_shadow(&self, sigma: &ExteriorFace, tau: &ExteriorFace) -> Result<FootprintShadow> {
        let proj = self.project_along(sigma)?;
        proj.footprint_shadow(self, sigma, tau)
    }

    /// True iff some vertex together with all of its cube neighbours spans the simplex.
    pub fn is_corner(&self) -> bool {
        let full = full_mask(self.dim);
        self.rows.iter().any(|&apex| {
            let mut seen = 0u64;
            self.rows.iter().filter(|&&v| v != apex).all(|&v| {
                let diff = v ^ apex;
                let ok = diff.count_ones() == 1 && seen & diff == 0;
                seen |= diff;
                ok
            }) && seen == full
        })
    }
}

impl fmt::Display for CubeSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.row_strings().join(" "))
    }
}

/// A set of row indices selecting a face of a simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceSelector {
    mask: u64,
}

impl FaceSelector {
    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &i in indices {
            if i >= 64 {
                return Err(Error::Validation(format!("row index {i} out of range")));
            }
            mask |= 1 << i;
        }
        if mask == 0 {
            return Err(Error::Validation("face selector is empty".into()));
        }
        Ok(FaceSelector { mask })
    }

    pub fn from_mask(mask: u64) -> Self {
        FaceSelector { mask }
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..64).filter(|&i| self.mask >> i & 1 == 1).collect()
    }

    fn validate(&self, num_rows: usize) -> Result<()> {
        if self.mask == 0 {
            return Err(Error::Validation("face selector is empty".into()));
        }
        if num_rows < 64 && self.mask >> num_rows != 0 {
            return Err(Error::Validation(format!(
                "face selector {:?} references rows beyond {}",
                self.indices(),
                num_rows - 1
            )));
        }
        Ok(())
    }
}

/// An exterior face: its face-rows, cube-face-columns and class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExteriorFace {
    rows: u64,
    cols: u64,
    fixed: u64,
    class: Class,
}

impl ExteriorFace {
    pub fn dim(&self) -> usize {
        self.cols.count_ones() as usize
    }

    pub fn selector(&self) -> FaceSelector {
        FaceSelector::from_mask(self.rows)
    }

    pub fn rows_mask(&self) -> u64 {
        self.rows
    }

    pub fn row_indices(&self) -> Vec<usize> {
        self.selector().indices()
    }

    /// Cube-face-columns as a mask in the owning simplex's vertex layout.
    pub fn cols_mask(&self) -> u64 {
        self.cols
    }

    /// Values shared by all face-rows outside the cube-face-columns.
    pub fn fixed_coords(&self) -> u64 {
        self.fixed
    }

    /// Class of the face as a simplex in its own cube face.
    pub fn class(&self) -> Class {
        self.class
    }
}

/// The footprint `tau ∩ sigma`, which may be empty.
///
/// The empty footprint counts as dimension 0 and class 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Footprint {
    Empty,
    Face(ExteriorFace),
}

impl Footprint {
    pub fn dim(&self) -> usize {
        match self {
            Footprint::Empty => 0,
            Footprint::Face(f) => f.dim(),
        }
    }

    pub fn class(&self) -> Class {
        match self {
            Footprint::Empty => 1,
            Footprint::Face(f) => f.class(),
        }
    }

    pub fn rows_mask(&self) -> u64 {
        match self {
            Footprint::Empty => 0,
            Footprint::Face(f) => f.rows,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FootprintShadow {
    /// `tau ∩ sigma`, as a face of the original simplex.
    pub footprint: Footprint,
    /// `pi_sigma(tau)`, as a face of the projected simplex.
    pub shadow: ExteriorFace,
}

/// The result of projecting a simplex along one of its exterior faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    /// The projected simplex; row 0 is the origin.
    pub simplex: CubeSimplex,
    /// The face vertex that was moved to the origin.
    pub origin: Vertex,
    /// Non-cube-face-columns of the face, in the source layout.
    pub kept_cols: u64,
    source_dim: usize,
    row_map: Vec<usize>,
}

impl Projection {
    /// Row of the projected simplex holding the image of source row `row`.
    pub fn image_row(&self, row: usize) -> usize {
        self.row_map[row]
    }

    /// Image of an arbitrary cube vertex under the projection.
    pub fn image_vertex(&self, v: Vertex) -> Vertex {
        compress(v ^ self.origin, self.kept_cols, self.source_dim)
    }

    /// Footprint and shadow of `tau`, reusing this projection along `sigma`.
    pub fn footprint_shadow(
        &self,
        source: &CubeSimplex,
        sigma: &ExteriorFace,
        tau: &ExteriorFace,
    ) -> Result<FootprintShadow> {
        source.require_face(tau)?;
        let shared = sigma.rows & tau.rows;
        let footprint = if shared == 0 {
            Footprint::Empty
        } else {
            match source.exterior_unchecked(shared)? {
                Some(f) => Footprint::Face(f),
                None => {
                    return Err(Error::Inconsistency(format!(
                        "footprint rows {:?} of {source} are not exterior",
                        FaceSelector::from_mask(shared).indices()
                    )))
                }
            }
        };
        let shadow_rows = tau
            .row_indices()
            .into_iter()
            .fold(0u64, |acc, r| acc | 1 << self.row_map[r]);
        let shadow = self.simplex.exterior_unchecked(shadow_rows)?.ok_or_else(|| {
            Error::Inconsistency(format!(
                "shadow of {:?} on {} is not exterior",
                tau.row_indices(),
                self.simplex
            ))
        })?;
        if footprint.dim() + shadow.dim() != tau.dim() {
            return Err(Error::Inconsistency(format!(
                "footprint dim {} + shadow dim {} != face dim {}",
                footprint.dim(),
                shadow.dim(),
                tau.dim()
            )));
        }
        if footprint.class() * shadow.class() != tau.class() {
            return Err(Error::Inconsistency(format!(
                "footprint class {} * shadow class {} != face class {}",
                footprint.class(),
                shadow.class(),
                tau.class()
            )));
        }
        Ok(FootprintShadow { footprint, shadow })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> CubeSimplex {
        CubeSimplex::parse(5, &["00110", "10110", "00010", "01100", "01110", "01111"]).unwrap()
    }

    // The paper-style 1-based row and column lists.
    fn sel(one_based: &[usize]) -> FaceSelector {
        FaceSelector::new(&one_based.iter().map(|i| i - 1).collect::<Vec<_>>()).unwrap()
    }

    fn cols(dim: usize, one_based: &[usize]) -> u64 {
        one_based.iter().fold(0, |m, &c| m | col_bit(dim, c - 1))
    }

    fn fat_tetrahedron() -> CubeSimplex {
        CubeSimplex::parse(3, &["000", "110", "101", "011"]).unwrap()
    }

    #[test]
    fn packing_is_msb_first() {
        let s = CubeSimplex::parse(3, &["000", "100", "010", "001"]).unwrap();
        assert_eq!(s.rows(), &[0b000, 0b100, 0b010, 0b001]);
        assert_eq!(s.entry(1, 0), 1);
        assert_eq!(s.row_strings(), vec!["000", "100", "010", "001"]);
        assert_eq!(s, CubeSimplex::corner(3));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            CubeSimplex::parse(2, &["00", "00", "11"]),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            CubeSimplex::parse(2, &["00", "01"]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            CubeSimplex::parse(2, &["00", "010", "11"]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            CubeSimplex::from_bits(2, &[vec![0, 0], vec![0, 2], vec![1, 1]]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(CubeSimplex::new(2, vec![0, 1, 4]), Err(Error::Validation(_))));
    }

    #[test]
    fn degenerate_simplices_construct_with_class_zero() {
        let s = CubeSimplex::parse(3, &["000", "100", "010", "110"]).unwrap();
        assert_eq!(s.class(), 0);
        assert!(matches!(s.exterior_faces(1), Err(Error::Degenerate(_))));
        assert!(matches!(
            s.check_exterior(&FaceSelector::new(&[0, 1]).unwrap()),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn classes() {
        for d in 0..8 {
            assert_eq!(CubeSimplex::corner(d).class(), 1);
        }
        assert_eq!(fat_tetrahedron().class(), 2);
        // frozen from a cofactor-expansion oracle
        assert_eq!(alpha().class(), 1);
    }

    #[test]
    fn worked_example_exterior_faces() {
        let a = alpha();
        let sigma = a.check_exterior(&sel(&[1, 2, 3, 5])).unwrap().unwrap();
        assert_eq!(sigma.dim(), 3);
        assert_eq!(sigma.cols_mask(), cols(5, &[1, 2, 3]));
        let tau = a.check_exterior(&sel(&[1, 4, 5, 6])).unwrap().unwrap();
        assert_eq!(tau.cols_mask(), cols(5, &[2, 4, 5]));
        let tri = a.check_exterior(&sel(&[4, 5, 6])).unwrap().unwrap();
        assert_eq!(tri.cols_mask(), cols(5, &[4, 5]));
        let edge = a.check_exterior(&sel(&[1, 2])).unwrap().unwrap();
        assert_eq!(edge.cols_mask(), cols(5, &[1]));
        assert_eq!(a.check_exterior(&sel(&[2, 3])).unwrap(), None);
    }

    #[test]
    fn invalid_selector() {
        let a = alpha();
        assert!(matches!(
            a.check_exterior(&FaceSelector::new(&[0, 6]).unwrap()),
            Err(Error::Validation(_))
        ));
        assert!(FaceSelector::new(&[]).is_err());
    }

    #[test]
    fn corner_has_binomial_exterior_faces() {
        let binom = [
            [1, 0, 0, 0, 0],
            [1, 1, 0, 0, 0],
            [1, 2, 1, 0, 0],
            [1, 3, 3, 1, 0],
            [1, 4, 6, 4, 1],
        ];
        for d in 1..=4 {
            let c = CubeSimplex::corner(d);
            for j in 1..=d {
                assert_eq!(c.count_exterior(j).unwrap(), binom[d][j], "d={d} j={j}");
            }
        }
        assert_eq!(CubeSimplex::corner(3).count_exterior(2).unwrap(), 3);
    }

    #[test]
    fn fat_tetrahedron_has_no_exterior_edges() {
        let t = fat_tetrahedron();
        assert!(t.exterior_faces(1).unwrap().is_empty());
        assert!(t.exterior_faces(2).unwrap().is_empty());
        assert_eq!(t.exterior_faces(3).unwrap().len(), 1);
        assert_eq!(t.exterior_faces(0).unwrap().len(), 4);
    }

    #[test]
    fn corner_detection() {
        assert!(CubeSimplex::corner(4).is_corner());
        assert!(!fat_tetrahedron().is_corner());
        let far = CubeSimplex::parse(3, &["111", "011", "101", "110"]).unwrap();
        assert!(far.is_corner());
        assert!(CubeSimplex::corner(5).toggle_columns(0b10110).is_corner());
        // a class-1 non-corner: a path 000-100-110-111
        let path = CubeSimplex::parse(3, &["000", "100", "110", "111"]).unwrap();
        assert_eq!(path.class(), 1);
        assert!(!path.is_corner());
    }

    #[test]
    fn project_corner_along_edge() {
        let c = CubeSimplex::corner(3);
        let edge = c.check_exterior(&FaceSelector::new(&[0, 1]).unwrap()).unwrap().unwrap();
        let p = c.project_along(&edge).unwrap();
        assert_eq!(p.simplex, CubeSimplex::corner(2));
    }

    #[test]
    fn project_worked_example() {
        let a = alpha();
        let sigma = a.check_exterior(&sel(&[1, 2, 3, 5])).unwrap().unwrap();
        let p = a.project_along(&sigma).unwrap();
        // hand elimination: origin 00010; rows 4 and 6 keep columns 4,5 after flipping column 4
        assert_eq!(p.origin, 0b00010);
        assert_eq!(p.simplex, CubeSimplex::parse(2, &["00", "10", "01"]).unwrap());
        assert_eq!(p.simplex.class(), a.class() / sigma.class());
    }

    #[test]
    fn project_rejects_non_faces() {
        let a = alpha();
        let c = CubeSimplex::corner(5);
        let foreign = c.check_exterior(&FaceSelector::new(&[0, 1]).unwrap()).unwrap().unwrap();
        assert!(matches!(a.project_along(&foreign), Err(Error::Validation(_))));
    }

    #[test]
    fn footprint_shadow_of_self_is_origin() {
        let a = alpha();
        let sigma = a.check_exterior(&sel(&[1, 2, 3, 5])).unwrap().unwrap();
        let fs = a.footprint_shadow(&sigma, &sigma).unwrap();
        assert_eq!(fs.footprint, Footprint::Face(sigma));
        assert_eq!(fs.shadow.dim(), 0);
        assert_eq!(fs.shadow.rows_mask(), 1);
    }

    #[test]
    fn footprint_shadow_worked_example() {
        let a = alpha();
        let sigma = a.check_exterior(&sel(&[1, 2, 3, 5])).unwrap().unwrap();
        let tau = a.check_exterior(&sel(&[1, 4, 5, 6])).unwrap().unwrap();
        let fs = a.footprint_shadow(&sigma, &tau).unwrap();
        match fs.footprint {
            Footprint::Face(f) => {
                assert_eq!(f.row_indices(), vec![0, 4]);
                assert_eq!(f.cols_mask(), cols(5, &[2]));
            }
            Footprint::Empty => panic!("footprint should be an edge"),
        }
        assert_eq!(fs.footprint.dim() + fs.shadow.dim(), tau.dim());
        assert_eq!(fs.shadow.dim(), 2);
    }

    #[test]
    fn empty_footprint() {
        let c = CubeSimplex::corner(3);
        let e1 = c.check_exterior(&FaceSelector::new(&[0]).unwrap()).unwrap().unwrap();
        let e2 = c.check_exterior(&FaceSelector::new(&[2, 3]).unwrap());
        // rows 2,3 of a corner differ in two columns
        assert_eq!(e2.unwrap(), None);
        let v = c.check_exterior(&FaceSelector::new(&[3]).unwrap()).unwrap().unwrap();
        let fs = c.footprint_shadow(&e1, &v).unwrap();
        assert_eq!(fs.footprint, Footprint::Empty);
        assert_eq!(fs.footprint.class(), 1);
        assert_eq!(fs.shadow.dim(), 0);
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(4, 4).collect::<Vec<_>>(), vec![0b1111]);
        let v: Vec<u64> = k_subsets(4, 2).collect();
        assert_eq!(v, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(64, 64).count(), 1);
    }

    #[test]
    fn json_format() {
        let a = alpha();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(
            json,
            r#"{"dim":5,"rows":["00110","10110","00010","01100","01110","01111"]}"#
        );
        let back: CubeSimplex = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<CubeSimplex>(r#"{"dim":2,"rows":["00","00","11"]}"#).is_err());
    }
}

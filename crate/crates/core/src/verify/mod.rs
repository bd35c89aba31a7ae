//! Brute-force oracles over small cubes.

mod census;
mod geometry;
mod theorems;

pub use census::{
    enumerate_simplices, CensusEntry, CensusOptions, CensusRecord, ProfileKey, SimplexCensus, Witnessed,
    HEAVY_CENSUS_DIM,
};
pub use geometry::{
    barycentric, coned_cube_triangulation, cover_from_triangulation, coverage_audit, sample_points, signed_volume,
    sperner_vertex, standard_triangulation, vertex_point, CoverExtraction, CoverImage, CoverageReport,
    GeometricTriangulation, Point, MAX_STANDARD_DIM, SAMPLE_DENOMINATOR,
};
pub use theorems::{
    check_simplex, verify_census, verify_theorems, CheckResult, Counterexample, TheoremReport, VerifyOptions,
    DEFAULT_SEED, SAMPLE_SIZE,
};

//! Sampled certification of sphere constructions: the moment-curve arrangement, antipode-free
//! covers, the standard coloring of Borsuk graphs and a circle map for even-dimensional ones.
//! Every random draw comes from a seeded generator.

mod borsuk;
mod cover;
mod hemisphere;
mod remark7;
mod sphere;

pub use borsuk::{
    alpha_threshold, borsuk_standard_coloring, borsuk_wide_check, facet_diameter, standard_proper_alpha,
    standard_wide_alpha, BorsukWideReport, SimplexColoring,
};
pub use cover::{
    cover_plus, simplex_cover, verify_cover, CoverReport, SphereCover, FACET_TIE_TOLERANCE, MAX_COVER_DIM,
};
pub use hemisphere::{hemisphere_stable_check, moment_curve_points, HemisphereReport};
pub use remark7::{
    borsuk_edge_samples, remark7_base_check, remark7_edge_distances, remark7_map, remark7_pq_coloring, BaseCheck,
    EdgeDistanceReport, Remark7Map, Remark7Report, REMARK7_BASE_ALPHA,
};
pub use sphere::{circle_distance, random_point, regular_simplex, sphere_samples, PointOnSphere};

//! Explicit colorings and homomorphisms. Every public constructor re-verifies its output.

mod hom;
mod interval;
mod local;
mod mycielski;
mod pipeline;
mod wide_universal;

pub use hom::{compose, hom_from_swide, w_to_gmyc_hom, Homomorphism};
pub use interval::{sg_interval_coloring, sg_with_interval_coloring, IntervalPartition, IntervalRule};
pub use local::{sg_remark4_coloring, troublesome_vertices, widen_to_local};
pub use mycielski::{
    collapse_level, gmyc_direct_coloring, gmyc_wide_extension, gmyc_wide_extension_iter, mycielski_psi_coloring,
    DirectBase,
};
pub use pipeline::{gmyc_circular_target, oddsch_pipeline, pipeline_parameters, PipelineOutput};
pub use wide_universal::{w_canonical_coloring, w_edge_deleted_coloring};

//! Triangle meshes, a minimal mesh-file parser, the built-in parametric
//! whale, rigid poses, and ray-triangle intersection.
//!
//! Meshes are immutable after construction and safe to share across threads
//! for read-only intersection queries.

mod intersect;
mod mesh;
mod wavefront;
mod whale;

pub use intersect::{intersect, intersect_exhaustive, Hit, Ray};
pub use mesh::{apply_pose, Aabb, Mesh, Pose};
pub use wavefront::{parse_mesh, serialize_mesh};
pub use whale::{
    axis_aligned_box, parametric_whale, DEFAULT_WHALE_BODY_LENGTH, DEFAULT_WHALE_FLUKE_SPAN,
};

use thiserror::Error;

/// Errors from mesh construction, parsing, and geometric queries.
#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("empty mesh")]
    EmptyMesh,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("triangle {triangle} references vertex {index}, but the mesh has {vertex_count} vertices")]
    IndexOutOfRange {
        triangle: usize,
        index: u32,
        vertex_count: usize,
    },

    #[error("triangle {triangle} repeats vertex index {index}")]
    RepeatedIndex { triangle: usize, index: u32 },

    #[error("{0}")]
    InvalidArgument(String),
}

impl GeometryError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Self::Parse {
            line,
            message: message.into(),
        }
    }
}

//! Indexed triangle mesh and rigid pose transform.

use serde::{Deserialize, Serialize};

use crate::math::{Mat3, Vec3};
use crate::scalar::Real;

use super::GeometryError;

/// Axis-aligned bounding box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Aabb<T> {
    pub min: Vec3<T>,
    pub max: Vec3<T>,
}

impl<T: Real> Aabb<T> {
    pub fn of_points(points: &[Vec3<T>]) -> Self {
        let mut min = points[0];
        let mut max = points[0];
        for &p in &points[1..] {
            min = min.min(p);
            max = max.max(p);
        }
        Self { min, max }
    }

    /// Conservative slab test: returns false only when the ray certainly
    /// misses the box for every t >= 0.
    pub fn hit_by(&self, origin: Vec3<T>, direction: Vec3<T>) -> bool {
        let mut t_near = T::zero();
        let mut t_far = T::infinity();
        let o = [origin.x, origin.y, origin.z];
        let d = [direction.x, direction.y, direction.z];
        let lo = [self.min.x, self.min.y, self.min.z];
        let hi = [self.max.x, self.max.y, self.max.z];
        for axis in 0..3 {
            if d[axis] == T::zero() {
                if o[axis] < lo[axis] || o[axis] > hi[axis] {
                    return false;
                }
            } else {
                let inv = T::one() / d[axis];
                let mut t0 = (lo[axis] - o[axis]) * inv;
                let mut t1 = (hi[axis] - o[axis]) * inv;
                if t0 > t1 {
                    std::mem::swap(&mut t0, &mut t1);
                }
                t_near = t_near.max(t0);
                t_far = t_far.min(t1);
                if t_near > t_far {
                    return false;
                }
            }
        }
        true
    }
}

/// Indexed triangle mesh. Vertices are in meters; triangles index into the
/// vertex list. The bounding box is computed once at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh<T> {
    vertices: Vec<Vec3<T>>,
    triangles: Vec<[u32; 3]>,
    bounds: Aabb<T>,
}

impl<T: Real> Mesh<T> {
    /// Builds a mesh, enforcing the structural invariants: at least one
    /// triangle, all indices in range, no triangle with a repeated index.
    pub fn new(vertices: Vec<Vec3<T>>, triangles: Vec<[u32; 3]>) -> Result<Self, GeometryError> {
        if vertices.is_empty() || triangles.is_empty() {
            return Err(GeometryError::EmptyMesh);
        }
        for (ti, tri) in triangles.iter().enumerate() {
            for &ix in tri {
                if ix as usize >= vertices.len() {
                    return Err(GeometryError::IndexOutOfRange {
                        triangle: ti,
                        index: ix,
                        vertex_count: vertices.len(),
                    });
                }
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                let dup = if tri[0] == tri[1] || tri[0] == tri[2] {
                    tri[0]
                } else {
                    tri[1]
                };
                return Err(GeometryError::RepeatedIndex {
                    triangle: ti,
                    index: dup,
                });
            }
        }
        let bounds = Aabb::of_points(&vertices);
        Ok(Self {
            vertices,
            triangles,
            bounds,
        })
    }

    pub fn vertices(&self) -> &[Vec3<T>] {
        &self.vertices
    }

    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    pub fn bounds(&self) -> &Aabb<T> {
        &self.bounds
    }

    pub fn triangle_vertices(&self, i: usize) -> [Vec3<T>; 3] {
        let [a, b, c] = self.triangles[i];
        [
            self.vertices[a as usize],
            self.vertices[b as usize],
            self.vertices[c as usize],
        ]
    }

    /// Mean of the vertex positions.
    pub fn centroid(&self) -> Vec3<T> {
        let mut sum = Vec3::zero();
        for &v in &self.vertices {
            sum = sum + v;
        }
        sum / T::from_usize(self.vertices.len()).unwrap_or_else(T::one)
    }
}

/// Rigid pose: uniform scale, then rotation (yaw about Z, pitch about Y,
/// roll about X, applied in that order), then translation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pose<T> {
    /// Yaw angle about Z, radians.
    pub yaw: T,
    /// Pitch angle about Y, radians.
    pub pitch: T,
    /// Roll angle about X, radians.
    pub roll: T,
    /// Offset applied after rotation, meters.
    pub translation: Vec3<T>,
    /// Uniform scale factor, must be positive.
    pub scale: T,
}

impl<T: Real> Pose<T> {
    pub fn identity() -> Self {
        Self {
            yaw: T::zero(),
            pitch: T::zero(),
            roll: T::zero(),
            translation: Vec3::zero(),
            scale: T::one(),
        }
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        if !(self.scale > T::zero()) || !self.scale.is_finite() {
            return Err(GeometryError::InvalidArgument(format!(
                "pose scale must be positive and finite, got {}",
                self.scale
            )));
        }
        for v in [
            self.yaw,
            self.pitch,
            self.roll,
            self.translation.x,
            self.translation.y,
            self.translation.z,
        ] {
            if !v.is_finite() {
                return Err(GeometryError::InvalidArgument(
                    "pose contains a non-finite component".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn rotation(&self) -> Mat3<T> {
        Mat3::from_euler(self.yaw, self.pitch, self.roll)
    }

    /// scale -> rotate -> translate.
    pub fn transform_point(&self, p: Vec3<T>) -> Vec3<T> {
        self.rotation().apply(p * self.scale) + self.translation
    }

    /// Exact inverse of [`Pose::transform_point`].
    pub fn inverse_transform_point(&self, p: Vec3<T>) -> Vec3<T> {
        self.rotation().transpose().apply(p - self.translation) / self.scale
    }
}

/// Applies a pose to every vertex; the triangle list is carried over
/// unchanged, so topology is preserved.
pub fn apply_pose<T: Real>(mesh: &Mesh<T>, pose: &Pose<T>) -> Mesh<T> {
    debug_assert!(pose.validate().is_ok());
    let vertices: Vec<Vec3<T>> = mesh
        .vertices
        .iter()
        .map(|&v| pose.transform_point(v))
        .collect();
    let bounds = Aabb::of_points(&vertices);
    Mesh {
        vertices,
        triangles: mesh.triangles.clone(),
        bounds,
    }
}

impl<T: Real> Mesh<T> {
    /// Convenience wrapper around [`apply_pose`].
    pub fn posed(&self, pose: &Pose<T>) -> Mesh<T> {
        apply_pose(self, pose)
    }
}

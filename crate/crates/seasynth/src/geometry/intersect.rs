//! Ray-triangle intersection (Moller-Trumbore) over indexed meshes.

use crate::math::Vec3;
use crate::scalar::Real;

use super::{GeometryError, Mesh};

/// Ray with a unit-length direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ray<T> {
    origin: Vec3<T>,
    direction: Vec3<T>,
}

impl<T: Real> Ray<T> {
    /// Builds a ray, normalizing the direction. A zero or non-finite
    /// direction is an error.
    pub fn new(origin: Vec3<T>, direction: Vec3<T>) -> Result<Self, GeometryError> {
        let direction = direction.normalized().ok_or_else(|| {
            GeometryError::InvalidArgument("ray direction must be a nonzero finite vector".into())
        })?;
        Ok(Self { origin, direction })
    }

    #[inline]
    pub fn origin(&self) -> Vec3<T> {
        self.origin
    }

    #[inline]
    pub fn direction(&self) -> Vec3<T> {
        self.direction
    }

    #[inline]
    pub fn at(&self, t: T) -> Vec3<T> {
        self.origin + self.direction * t
    }
}

/// Nearest intersection along a ray.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hit<T> {
    /// Ray parameter of the hit, meters, >= 0.
    pub t: T,
    /// Unit geometric normal, oriented to face the ray origin.
    pub normal: Vec3<T>,
    /// Identifier of the intersected object; 0 from a single-mesh query,
    /// assigned by the caller when casting against multiple objects.
    pub object_id: u32,
}

impl<T: Real> Hit<T> {
    pub fn with_object_id(mut self, id: u32) -> Self {
        self.object_id = id;
        self
    }
}

/// Two hit parameters within this distance count as a tie, broken by the
/// lower triangle index for determinism.
const TIE_EPS: f64 = 1e-12;

/// Nearest non-negative-t intersection, with bounding-box rejection. The
/// rejection is conservative: results are identical to
/// [`intersect_exhaustive`].
pub fn intersect<T: Real>(ray: &Ray<T>, mesh: &Mesh<T>) -> Option<Hit<T>> {
    if !mesh.bounds().hit_by(ray.origin, ray.direction) {
        return None;
    }
    intersect_exhaustive(ray, mesh)
}

/// Reference intersection path: tests every triangle, no acceleration.
pub fn intersect_exhaustive<T: Real>(ray: &Ray<T>, mesh: &Mesh<T>) -> Option<Hit<T>> {
    let tie = T::of(TIE_EPS);
    let mut best: Option<(T, usize)> = None;
    for index in 0..mesh.triangles().len() {
        let [v0, v1, v2] = mesh.triangle_vertices(index);
        if let Some(t) = ray_triangle_t(ray, v0, v1, v2) {
            match best {
                Some((best_t, _)) if t >= best_t - tie => {}
                _ => best = Some((t, index)),
            }
        }
    }
    best.map(|(t, index)| {
        let [v0, v1, v2] = mesh.triangle_vertices(index);
        let mut normal = (v1 - v0)
            .cross(v2 - v0)
            .normalized()
            .unwrap_or_else(|| Vec3::new(T::zero(), T::zero(), T::one()));
        if normal.dot(ray.direction) > T::zero() {
            normal = -normal;
        }
        Hit {
            t,
            normal,
            object_id: 0,
        }
    })
}

/// Moller-Trumbore. Returns the ray parameter of the intersection, if any.
/// Degenerate (zero-area) triangles never intersect.
fn ray_triangle_t<T: Real>(ray: &Ray<T>, v0: Vec3<T>, v1: Vec3<T>, v2: Vec3<T>) -> Option<T> {
    let e1 = v1 - v0;
    let e2 = v2 - v0;
    if e1.cross(e2).norm() * T::of(0.5) <= T::of(1e-12) {
        return None; // degenerate triangle, skipped by design
    }
    let p = ray.direction.cross(e2);
    let det = e1.dot(p);
    if det.abs() < T::of(1e-14) {
        return None; // ray parallel to the triangle plane
    }
    let inv_det = T::one() / det;
    let s = ray.origin - v0;
    let u = s.dot(p) * inv_det;
    if !(u >= T::zero() && u <= T::one()) {
        return None;
    }
    let q = s.cross(e1);
    let v = ray.direction.dot(q) * inv_det;
    if !(v >= T::zero() && u + v <= T::one()) {
        return None;
    }
    let t = e2.dot(q) * inv_det;
    if t >= T::zero() {
        Some(t)
    } else {
        None
    }
}

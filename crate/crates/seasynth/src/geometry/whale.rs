//! Built-in parametric meshes: the whale used as the default object of
//! interest, and an axis-aligned box useful for rocks and test slabs.

use crate::math::Vec3;
use crate::scalar::Real;

use super::{GeometryError, Mesh};

/// Default whale body length in meters (adult humpback scale).
pub const DEFAULT_WHALE_BODY_LENGTH: f64 = 12.0;
/// Default fluke span in meters.
pub const DEFAULT_WHALE_FLUKE_SPAN: f64 = 4.0;

/// Cross-sections along the body, nose to tail tip.
const STATIONS: usize = 25;
/// Vertices per cross-section ring.
const RING: usize = 16;

/// Body half-width as a fraction of body length.
const HALF_WIDTH_FRAC: f64 = 0.12;
/// Body half-height as a fraction of body length.
const HALF_HEIGHT_FRAC: f64 = 0.085;
/// Exponent shaping the sin profile along the body.
const PROFILE_EXP: f64 = 0.85;
/// Fluke lobe center along the body, as a fraction of length. 23/25 lands a
/// cross-section exactly here, so the fluke span is hit exactly.
const FLUKE_CENTER: f64 = 0.92;
/// Half-extent of the fluke lobe along the body.
const FLUKE_HALF_EXTENT: f64 = 0.07;
/// How much the fluke is flattened vertically relative to the body profile.
const FLUKE_FLATTEN: f64 = 0.72;

/// Watertight whale mesh seen from above as an elongated body with a wide
/// flattened fluke near the tail. The body axis is X, centered at the
/// origin: the bounding-box x-extent equals `body_length` exactly and the
/// y-extent is at least `fluke_span`.
pub fn parametric_whale<T: Real>(body_length: T, fluke_span: T) -> Result<Mesh<T>, GeometryError> {
    if !(body_length > T::zero()) || !body_length.is_finite() {
        return Err(GeometryError::InvalidArgument(format!(
            "body_length must be positive, got {body_length}"
        )));
    }
    if !(fluke_span > T::zero()) || !fluke_span.is_finite() {
        return Err(GeometryError::InvalidArgument(format!(
            "fluke_span must be positive, got {fluke_span}"
        )));
    }

    let length = body_length;
    let half = T::of(0.5);
    let stations_t = T::from_usize(STATIONS).unwrap_or_else(T::one);

    let lobe = |u: T| -> T {
        let d = (u - T::of(FLUKE_CENTER)) / T::of(FLUKE_HALF_EXTENT);
        (T::one() - d * d).max(T::zero())
    };
    let body_profile = |u: T| -> T { (T::PI() * u).sin().max(T::zero()).powf(T::of(PROFILE_EXP)) };
    let half_width = |u: T| -> T {
        let body = T::of(HALF_WIDTH_FRAC) * length * body_profile(u);
        let fluke = fluke_span * half * lobe(u);
        body.max(fluke)
    };
    let half_height =
        |u: T| -> T { T::of(HALF_HEIGHT_FRAC) * length * body_profile(u) * (T::one() - T::of(FLUKE_FLATTEN) * lobe(u)) };

    let station_x = |i: usize| -> T {
        length * (T::from_usize(i).unwrap_or_else(T::zero) / stations_t) - length * half
    };

    let mut vertices: Vec<Vec3<T>> = Vec::with_capacity(2 + (STATIONS - 1) * RING);
    let mut triangles: Vec<[u32; 3]> = Vec::with_capacity(2 * RING * (STATIONS - 1));

    // Nose pole, interior rings, tail pole: sphere topology, so every edge
    // is shared by exactly two triangles.
    vertices.push(Vec3::new(station_x(0), T::zero(), T::zero()));
    for i in 1..STATIONS {
        let u = T::from_usize(i).unwrap_or_else(T::zero) / stations_t;
        let w = half_width(u);
        let h = half_height(u);
        let x = station_x(i);
        for j in 0..RING {
            let theta = T::TAU() * T::from_usize(j).unwrap_or_else(T::zero)
                / T::from_usize(RING).unwrap_or_else(T::one);
            vertices.push(Vec3::new(x, w * theta.cos(), h * theta.sin()));
        }
    }
    vertices.push(Vec3::new(station_x(STATIONS), T::zero(), T::zero()));

    let ring_start = |ring: usize| -> u32 { (1 + ring * RING) as u32 };
    let nose = 0u32;
    let tail = (vertices.len() - 1) as u32;

    for j in 0..RING {
        let jn = (j + 1) % RING;
        triangles.push([nose, ring_start(0) + jn as u32, ring_start(0) + j as u32]);
    }
    for ring in 0..STATIONS - 2 {
        let a = ring_start(ring);
        let b = ring_start(ring + 1);
        for j in 0..RING {
            let jn = (j + 1) % RING;
            triangles.push([a + j as u32, a + jn as u32, b + jn as u32]);
            triangles.push([a + j as u32, b + jn as u32, b + j as u32]);
        }
    }
    let last = ring_start(STATIONS - 2);
    for j in 0..RING {
        let jn = (j + 1) % RING;
        triangles.push([last + j as u32, last + jn as u32, tail]);
    }

    Mesh::new(vertices, triangles)
}

/// Axis-aligned rectangular box as a 12-triangle mesh.
pub fn axis_aligned_box<T: Real>(min: Vec3<T>, max: Vec3<T>) -> Result<Mesh<T>, GeometryError> {
    if !(min.x < max.x && min.y < max.y && min.z < max.z) {
        return Err(GeometryError::InvalidArgument(
            "box min must be strictly below max on every axis".into(),
        ));
    }
    let v = vec![
        Vec3::new(min.x, min.y, min.z),
        Vec3::new(max.x, min.y, min.z),
        Vec3::new(max.x, max.y, min.z),
        Vec3::new(min.x, max.y, min.z),
        Vec3::new(min.x, min.y, max.z),
        Vec3::new(max.x, min.y, max.z),
        Vec3::new(max.x, max.y, max.z),
        Vec3::new(min.x, max.y, max.z),
    ];
    let quads: [[u32; 4]; 6] = [
        [0, 3, 2, 1], // bottom
        [4, 5, 6, 7], // top
        [0, 1, 5, 4],
        [1, 2, 6, 5],
        [2, 3, 7, 6],
        [3, 0, 4, 7],
    ];
    let mut triangles = Vec::with_capacity(12);
    for q in quads {
        triangles.push([q[0], q[1], q[2]]);
        triangles.push([q[0], q[2], q[3]]);
    }
    Mesh::new(v, triangles)
}

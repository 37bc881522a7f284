//! Procedural ocean surface and water optics.
//!
//! The wave surface is a fractal sum of 2D gradient noise octaves over an
//! integer lattice. Lattice gradients come from an integer hash of
//! (cell, octave, phase seed), so the surface is bit-identical across runs,
//! thread counts, and platforms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::math::Rgb;
use crate::scalar::Real;
use crate::seeding::{mix, mix_i64};

/// Number of colors in the default water palette.
pub const WATER_PALETTE_LEN: u32 = 1030;

/// Palette ramp endpoints: hue in degrees, interpolated linearly from blue
/// to green with fixed saturation and value.
pub const PALETTE_HUE_BLUE: f64 = 215.0;
pub const PALETTE_HUE_GREEN: f64 = 140.0;
pub const PALETTE_SATURATION: f64 = 0.78;
pub const PALETTE_VALUE: f64 = 0.52;

/// Default extinction coefficient at turbidity 0, 1/m.
pub const DEFAULT_K_MIN: f64 = 0.05;
/// Default extinction coefficient at turbidity 1, 1/m.
pub const DEFAULT_K_MAX: f64 = 3.0;

#[derive(Debug, Error)]
pub enum OceanError {
    #[error("palette index {0} out of range 0..={}", WATER_PALETTE_LEN - 1)]
    PaletteIndex(u32),

    #[error("{0}")]
    InvalidArgument(String),
}

/// Wave-field shape parameters.
///
/// `scale` is the feature size in meters (larger is calmer), `detail` the
/// octave count, `dimension` the per-octave amplitude falloff, `lacunarity`
/// the per-octave frequency ratio, `strength` the overall amplitude in
/// meters, and `metallic` the specular-reflection weight consumed by the
/// renderer.
///
/// `tilt` (directional stretch of the pattern along x) and `sharpness`
/// (exponent applied to positive elevations) are experimental shape knobs;
/// both default to 1, which disables them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaveParams<T> {
    pub scale: T,
    pub detail: u32,
    pub dimension: T,
    pub lacunarity: T,
    pub strength: T,
    pub metallic: T,
    #[serde(default = "one")]
    pub tilt: T,
    #[serde(default = "one")]
    pub sharpness: T,
}

fn one<T: Real>() -> T {
    T::one()
}

impl<T: Real> WaveParams<T> {
    pub fn validate(&self) -> Result<(), OceanError> {
        let err = |msg: String| Err(OceanError::InvalidArgument(msg));
        if !(self.scale > T::zero()) || !self.scale.is_finite() {
            return err(format!("wave scale must be positive, got {}", self.scale));
        }
        if !(1..=12).contains(&self.detail) {
            return err(format!("wave detail must be in 1..=12, got {}", self.detail));
        }
        if !(self.dimension > T::zero() && self.dimension <= T::one()) {
            return err(format!(
                "wave dimension must be in (0, 1], got {}",
                self.dimension
            ));
        }
        if !(self.lacunarity > T::one()) || !self.lacunarity.is_finite() {
            return err(format!(
                "wave lacunarity must be > 1, got {}",
                self.lacunarity
            ));
        }
        if !(self.strength >= T::zero()) || !self.strength.is_finite() {
            return err(format!(
                "wave strength must be >= 0, got {}",
                self.strength
            ));
        }
        if !(self.metallic >= T::zero() && self.metallic <= T::one()) {
            return err(format!(
                "wave metallic must be in [0, 1], got {}",
                self.metallic
            ));
        }
        if !(self.tilt > T::zero()) || !self.tilt.is_finite() {
            return err(format!("wave tilt must be positive, got {}", self.tilt));
        }
        if !(self.sharpness > T::zero()) || !self.sharpness.is_finite() {
            return err(format!(
                "wave sharpness must be positive, got {}",
                self.sharpness
            ));
        }
        Ok(())
    }

    /// Upper bound on |elevation|: strength times the octave amplitude sum.
    pub fn amplitude_bound(&self) -> T {
        let mut amp = T::one();
        let mut total = T::zero();
        for _ in 0..self.detail {
            total = total + amp;
            amp = amp * self.dimension;
        }
        self.strength * total
    }
}

/// Water color and clarity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WaterOptics<T> {
    /// Index into the 1030-entry water palette.
    pub color_index: u32,
    /// Cloudiness in [0, 1]; maps linearly onto [k_min, k_max].
    pub turbidity: T,
    #[serde(default = "default_k_min")]
    pub k_min: T,
    #[serde(default = "default_k_max")]
    pub k_max: T,
}

fn default_k_min<T: Real>() -> T {
    T::of(DEFAULT_K_MIN)
}

fn default_k_max<T: Real>() -> T {
    T::of(DEFAULT_K_MAX)
}

impl<T: Real> WaterOptics<T> {
    pub fn validate(&self) -> Result<(), OceanError> {
        if self.color_index >= WATER_PALETTE_LEN {
            return Err(OceanError::PaletteIndex(self.color_index));
        }
        if !(self.turbidity >= T::zero() && self.turbidity <= T::one()) {
            return Err(OceanError::InvalidArgument(format!(
                "turbidity must be in [0, 1], got {}",
                self.turbidity
            )));
        }
        if !(T::zero() < self.k_min && self.k_min < self.k_max) || !self.k_max.is_finite() {
            return Err(OceanError::InvalidArgument(format!(
                "extinction bounds must satisfy 0 < k_min < k_max, got {} and {}",
                self.k_min, self.k_max
            )));
        }
        Ok(())
    }

    /// Extinction coefficient for the current turbidity, 1/m.
    pub fn extinction(&self) -> T {
        self.k_min + self.turbidity * (self.k_max - self.k_min)
    }
}

// --- gradient noise -------------------------------------------------------

/// sqrt(2)/2, the diagonal gradient component.
const DIAG: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Eight unit gradients; picking from a fixed table avoids transcendental
/// functions in the hash-to-gradient path, keeping results bit-identical
/// across libm implementations.
const GRADIENTS: [(f64, f64); 8] = [
    (1.0, 0.0),
    (-1.0, 0.0),
    (0.0, 1.0),
    (0.0, -1.0),
    (DIAG, DIAG),
    (DIAG, -DIAG),
    (-DIAG, DIAG),
    (-DIAG, -DIAG),
];

#[inline]
fn corner_gradient<T: Real>(seed: u64, ix: i64, iy: i64) -> (T, T) {
    let h = mix_i64(mix_i64(seed, ix), iy);
    let (gx, gy) = GRADIENTS[(h & 7) as usize];
    (T::of(gx), T::of(gy))
}

#[inline]
fn fade<T: Real>(t: T) -> T {
    // 6t^5 - 15t^4 + 10t^3
    t * t * t * (t * (t * T::of(6.0) - T::of(15.0)) + T::of(10.0))
}

#[inline]
fn lerp<T: Real>(a: T, b: T, t: T) -> T {
    a + (b - a) * t
}

/// 2D gradient noise with range [-1, 1], continuous in (x, y).
fn gradient_noise<T: Real>(x: T, y: T, seed: u64) -> T {
    let x0 = x.floor();
    let y0 = y.floor();
    let ix = x0.to_i64().unwrap_or(0);
    let iy = y0.to_i64().unwrap_or(0);
    let fx = x - x0;
    let fy = y - y0;

    let dot = |cx: i64, cy: i64, ox: T, oy: T| -> T {
        let (gx, gy) = corner_gradient::<T>(seed, cx, cy);
        gx * ox + gy * oy
    };
    let n00 = dot(ix, iy, fx, fy);
    let n10 = dot(ix + 1, iy, fx - T::one(), fy);
    let n01 = dot(ix, iy + 1, fx, fy - T::one());
    let n11 = dot(ix + 1, iy + 1, fx - T::one(), fy - T::one());

    let u = fade(fx);
    let v = fade(fy);
    let n = lerp(lerp(n00, n10, u), lerp(n01, n11, u), v);
    // The theoretical extreme of 2D lattice gradient noise with unit
    // gradients is +/- sqrt(2)/2; rescale to [-1, 1] and clamp so the
    // advertised range holds even at the extremes.
    (n * T::SQRT_2()).max(-T::one()).min(T::one())
}

/// Wave elevation at (x, y) in meters:
/// `strength * sum_{o < detail} dimension^o * noise((x, y) * lacunarity^o / scale)`,
/// with octave `o` hashed from (phase_seed, o). When `sharpness != 1`,
/// positive elevations are additionally shaped by
/// `bound * (h / bound)^sharpness`.
pub fn surface_height<T: Real>(x: T, y: T, params: &WaveParams<T>, phase_seed: u64) -> T {
    debug_assert!(params.validate().is_ok());
    let xs = (x * params.tilt) / params.scale;
    let ys = y / params.scale;

    let mut amp = T::one();
    let mut freq = T::one();
    let mut sum = T::zero();
    for octave in 0..params.detail {
        let seed = mix(phase_seed, u64::from(octave));
        sum = sum + amp * gradient_noise(xs * freq, ys * freq, seed);
        amp = amp * params.dimension;
        freq = freq * params.lacunarity;
    }
    let h = params.strength * sum;
    if params.sharpness != T::one() && h > T::zero() {
        let bound = params.amplitude_bound();
        bound * (h / bound).powf(params.sharpness)
    } else {
        h
    }
}

// --- palette & transmittance ----------------------------------------------

/// HSV to RGB, hue in degrees. Piecewise-linear, so it is exact arithmetic.
fn hsv_to_rgb<T: Real>(hue_deg: f64, saturation: f64, value: f64) -> Rgb<T> {
    let c = value * saturation;
    let hp = hue_deg / 60.0;
    let x = c * (1.0 - (hp.rem_euclid(2.0) - 1.0).abs());
    let (r1, g1, b1) = match hp as i32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = value - c;
    Rgb::new(T::of(r1 + m), T::of(g1 + m), T::of(b1 + m))
}

/// Linear-RGB water color for a palette index. The ramp interpolates hue
/// from the blue endpoint to the green endpoint at fixed saturation and
/// value; all 1030 entries are pairwise distinct.
pub fn water_palette<T: Real>(index: u32) -> Result<Rgb<T>, OceanError> {
    if index >= WATER_PALETTE_LEN {
        return Err(OceanError::PaletteIndex(index));
    }
    let t = f64::from(index) / f64::from(WATER_PALETTE_LEN - 1);
    let hue = PALETTE_HUE_BLUE + (PALETTE_HUE_GREEN - PALETTE_HUE_BLUE) * t;
    Ok(hsv_to_rgb(hue, PALETTE_SATURATION, PALETTE_VALUE))
}

/// Beer-Lambert transmittance `exp(-k * depth)` with
/// `k = k_min + turbidity * (k_max - k_min)`.
pub fn transmittance<T: Real>(depth: T, optics: &WaterOptics<T>) -> Result<T, OceanError> {
    if !(depth >= T::zero()) {
        return Err(OceanError::InvalidArgument(format!(
            "depth must be non-negative, got {depth}"
        )));
    }
    Ok((-optics.extinction() * depth).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(strength: f64) -> WaveParams<f64> {
        WaveParams {
            scale: 8.0,
            detail: 4,
            dimension: 0.55,
            lacunarity: 2.0,
            strength,
            metallic: 0.3,
            tilt: 1.0,
            sharpness: 1.0,
        }
    }

    fn optics(turbidity: f64) -> WaterOptics<f64> {
        WaterOptics {
            color_index: 100,
            turbidity,
            k_min: DEFAULT_K_MIN,
            k_max: DEFAULT_K_MAX,
        }
    }

    #[test]
    fn zero_strength_is_flat() {
        let p = params(0.0);
        for i in 0..64 {
            let x = i as f64 * 0.37 - 5.0;
            assert_eq!(surface_height(x, -x, &p, 7), 0.0);
        }
    }

    #[test]
    fn elevation_respects_amplitude_bound_on_grid() {
        let p = params(0.8);
        let bound = p.amplitude_bound();
        for iy in 0..256 {
            for ix in 0..256 {
                let x = ix as f64 * 0.311 - 40.0;
                let y = iy as f64 * 0.291 - 35.0;
                let h = surface_height(x, y, &p, 99);
                assert!(h.abs() <= bound, "h={h} exceeds bound {bound}");
            }
        }
    }

    #[test]
    fn single_octave_scales_with_feature_size_exactly() {
        let mut p = params(0.5);
        p.detail = 1;
        let mut p2 = p;
        p2.scale = 2.0 * p.scale;
        for i in 0..100 {
            let x = i as f64 * 0.17 - 7.0;
            let y = i as f64 * 0.05 + 2.0;
            assert_eq!(
                surface_height(2.0 * x, 2.0 * y, &p2, 3),
                surface_height(x, y, &p, 3)
            );
        }
    }

    #[test]
    fn deterministic_across_calls() {
        let p = params(0.4);
        assert_eq!(
            surface_height(1.2345, -6.789, &p, 42).to_bits(),
            surface_height(1.2345, -6.789, &p, 42).to_bits()
        );
    }

    #[test]
    fn noise_is_continuous_under_small_steps() {
        let p = params(1.0);
        let mut prev = surface_height(0.0, 0.0, &p, 5);
        for i in 1..4000 {
            let x = i as f64 * 1e-3;
            let h = surface_height(x, 0.3, &p, 5);
            assert!((h - prev).abs() < 0.02, "jump at x={x}");
            prev = h;
        }
    }

    #[test]
    fn stronger_waves_never_shrink_relief() {
        let grid = |strength: f64| -> f64 {
            let p = params(strength);
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for iy in 0..64 {
                for ix in 0..64 {
                    let h = surface_height(ix as f64 * 0.5, iy as f64 * 0.5, &p, 11);
                    lo = lo.min(h);
                    hi = hi.max(h);
                }
            }
            hi - lo
        };
        let mut prev = grid(0.0);
        for s in [0.1, 0.2, 0.5, 1.0, 2.0] {
            let relief = grid(s);
            assert!(relief >= prev);
            prev = relief;
        }
    }

    #[test]
    fn palette_endpoints_match_documented_constants() {
        let blue: Rgb<f64> = water_palette(0).unwrap();
        let green: Rgb<f64> = water_palette(1029).unwrap();
        assert_eq!(
            blue,
            hsv_to_rgb(PALETTE_HUE_BLUE, PALETTE_SATURATION, PALETTE_VALUE)
        );
        assert_eq!(
            green,
            hsv_to_rgb(PALETTE_HUE_GREEN, PALETTE_SATURATION, PALETTE_VALUE)
        );
        // Blue endpoint is blue-dominant, green endpoint green-dominant.
        assert!(blue.b > blue.g && blue.g > blue.r);
        assert!(green.g > green.b && green.b > green.r);
    }

    #[test]
    fn palette_rejects_out_of_range() {
        assert!(water_palette::<f64>(1030).is_err());
    }

    #[test]
    fn palette_is_injective() {
        let mut seen = std::collections::HashSet::new();
        for i in 0..WATER_PALETTE_LEN {
            let c: Rgb<f64> = water_palette(i).unwrap();
            assert!(seen.insert((c.r.to_bits(), c.g.to_bits(), c.b.to_bits())));
        }
        assert_eq!(seen.len(), 1030);
    }

    #[test]
    fn transmittance_at_zero_depth_is_one() {
        assert_eq!(transmittance(0.0, &optics(0.7)).unwrap(), 1.0);
    }

    #[test]
    fn transmittance_squares_under_depth_doubling() {
        let o = optics(0.35);
        for d in [0.1, 0.5, 1.0, 2.5, 7.0] {
            let t1 = transmittance(d, &o).unwrap();
            let t2 = transmittance(2.0 * d, &o).unwrap();
            assert!((t2 - t1 * t1).abs() < 1e-12);
        }
    }

    #[test]
    fn transmittance_decreases_with_turbidity() {
        let depth = 1.5;
        let mut prev = f64::INFINITY;
        for i in 0..=10 {
            let t = transmittance(depth, &optics(i as f64 * 0.1)).unwrap();
            assert!(t < prev, "turbidity step {i} did not decrease");
            assert!(t > 0.0 && t < 1.0);
            prev = t;
        }
    }

    #[test]
    fn negative_depth_is_an_error() {
        assert!(transmittance(-0.1, &optics(0.0)).is_err());
    }

    #[test]
    fn works_at_f32() {
        let p = WaveParams::<f32> {
            scale: 8.0,
            detail: 3,
            dimension: 0.5,
            lacunarity: 2.0,
            strength: 0.5,
            metallic: 0.0,
            tilt: 1.0,
            sharpness: 1.0,
        };
        let h = surface_height(1.5f32, 2.5, &p, 9);
        assert!(h.abs() <= p.amplitude_bound());
    }
}

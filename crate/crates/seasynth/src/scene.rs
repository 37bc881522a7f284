//! Complete, serializable description of one render.
//!
//! A [`SceneSpec`] plus a seed fully determines a render: water shape and
//! optics, lighting, camera, sensor noise, and the posed objects. The JSON
//! encoding of this struct is the schema consumed by the `render` CLI and
//! echoed into dataset manifests.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{
    parametric_whale, parse_mesh, GeometryError, Mesh, Pose, DEFAULT_WHALE_BODY_LENGTH,
    DEFAULT_WHALE_FLUKE_SPAN,
};
use crate::math::Rgb;
use crate::ocean::{OceanError, WaveParams, WaterOptics};
use crate::scalar::Real;

/// Hard cap on objects of interest plus objects of non-interest.
pub const MAX_SCENE_OBJECTS: usize = 16;
/// Maximum image dimension per side, pixels.
pub const MAX_IMAGE_DIM: u32 = 30_000;

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("{0}")]
    Invalid(String),

    #[error("failed to read mesh file {path}: {source}")]
    MeshIo {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("failed to parse mesh file {path}: {source}")]
    MeshParse {
        path: PathBuf,
        source: GeometryError,
    },

    #[error(transparent)]
    Geometry(#[from] GeometryError),

    #[error(transparent)]
    Ocean(#[from] OceanError),
}

/// Overhead pinhole camera.
///
/// The camera sits at (0, 0, altitude) looking straight down. Image +x is
/// world +x; image rows grow toward world -y.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CameraSpec<T> {
    /// Height above mean sea level, meters.
    pub altitude: T,
    /// Focal length, meters.
    pub focal_length: T,
    /// Physical sensor width, meters.
    pub sensor_width: T,
    /// Image width, pixels.
    pub width: u32,
    /// Image height, pixels.
    pub height: u32,
    /// Principal point in pixel coordinates; image center when omitted.
    #[serde(default)]
    pub principal: Option<[T; 2]>,
}

impl<T: Real> CameraSpec<T> {
    pub fn validate(&self) -> Result<(), SceneError> {
        if self.width == 0 || self.height == 0 {
            return Err(SceneError::Invalid(format!(
                "image size must be at least 1x1, got {}x{}",
                self.width, self.height
            )));
        }
        if self.width > MAX_IMAGE_DIM || self.height > MAX_IMAGE_DIM {
            return Err(SceneError::Invalid(format!(
                "image size {}x{} exceeds the {MAX_IMAGE_DIM} pixel per-side maximum",
                self.width, self.height
            )));
        }
        if !(self.focal_length > T::zero()) || !self.focal_length.is_finite() {
            return Err(SceneError::Invalid(format!(
                "focal length must be positive, got {}",
                self.focal_length
            )));
        }
        if !(self.sensor_width > T::zero()) || !self.sensor_width.is_finite() {
            return Err(SceneError::Invalid(format!(
                "sensor width must be positive, got {}",
                self.sensor_width
            )));
        }
        if !self.altitude.is_finite() {
            return Err(SceneError::Invalid("altitude must be finite".into()));
        }
        if let Some([px, py]) = self.principal {
            if !px.is_finite() || !py.is_finite() {
                return Err(SceneError::Invalid(
                    "principal point must be finite".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Directional sun plus constant sky ambient.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LightSpec<T> {
    /// Sun elevation above the horizon, radians, in (0, pi/2].
    pub sun_elevation: T,
    /// Sun azimuth, radians.
    pub sun_azimuth: T,
    /// Dimensionless sun intensity, >= 0.
    pub sun_intensity: T,
    /// Dimensionless sky ambient term, >= 0.
    pub sky_ambient: T,
}

impl<T: Real> LightSpec<T> {
    pub fn validate(&self) -> Result<(), SceneError> {
        let half_pi = T::FRAC_PI_2();
        if !(self.sun_elevation > T::zero() && self.sun_elevation <= half_pi) {
            return Err(SceneError::Invalid(format!(
                "sun elevation must be in (0, pi/2], got {}",
                self.sun_elevation
            )));
        }
        if !self.sun_azimuth.is_finite() {
            return Err(SceneError::Invalid("sun azimuth must be finite".into()));
        }
        if !(self.sun_intensity >= T::zero()) || !self.sun_intensity.is_finite() {
            return Err(SceneError::Invalid(format!(
                "sun intensity must be >= 0, got {}",
                self.sun_intensity
            )));
        }
        if !(self.sky_ambient >= T::zero()) || !self.sky_ambient.is_finite() {
            return Err(SceneError::Invalid(format!(
                "sky ambient must be >= 0, got {}",
                self.sky_ambient
            )));
        }
        Ok(())
    }
}

/// Sensor noise applied after tone mapping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpec<T> {
    /// Gaussian std-dev per channel, as a fraction of the full pixel range.
    pub gaussian_sigma: T,
    /// Probability that a pixel is replaced by uniform random values.
    pub white_amount: T,
}

impl<T: Real> NoiseSpec<T> {
    pub fn none() -> Self {
        Self {
            gaussian_sigma: T::zero(),
            white_amount: T::zero(),
        }
    }

    pub fn validate(&self) -> Result<(), SceneError> {
        let in_unit = |v: T| v >= T::zero() && v <= T::one();
        if !in_unit(self.gaussian_sigma) {
            return Err(SceneError::Invalid(format!(
                "gaussian sigma must be in [0, 1], got {}",
                self.gaussian_sigma
            )));
        }
        if !in_unit(self.white_amount) {
            return Err(SceneError::Invalid(format!(
                "white noise amount must be in [0, 1], got {}",
                self.white_amount
            )));
        }
        Ok(())
    }
}

/// Where an object's mesh comes from: the built-in parametric whale or a
/// mesh file. Serialized as `"parametric"` or `"file:<path>"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum MeshSource {
    Parametric,
    File(PathBuf),
}

impl MeshSource {
    /// Loads the mesh in object-local coordinates (pose not yet applied).
    pub fn load<T: Real>(&self) -> Result<Mesh<T>, SceneError> {
        match self {
            MeshSource::Parametric => Ok(parametric_whale(
                T::of(DEFAULT_WHALE_BODY_LENGTH),
                T::of(DEFAULT_WHALE_FLUKE_SPAN),
            )?),
            MeshSource::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|source| SceneError::MeshIo {
                    path: path.clone(),
                    source,
                })?;
                parse_mesh(&text).map_err(|source| SceneError::MeshParse {
                    path: path.clone(),
                    source,
                })
            }
        }
    }
}

impl fmt::Display for MeshSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeshSource::Parametric => f.write_str("parametric"),
            MeshSource::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl From<MeshSource> for String {
    fn from(value: MeshSource) -> Self {
        value.to_string()
    }
}

impl FromStr for MeshSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "parametric" {
            Ok(MeshSource::Parametric)
        } else if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                Err("mesh source \"file:\" is missing a path".into())
            } else {
                Ok(MeshSource::File(PathBuf::from(path)))
            }
        } else {
            Err(format!(
                "mesh source must be \"parametric\" or \"file:<path>\", got {s:?}"
            ))
        }
    }
}

impl TryFrom<String> for MeshSource {
    type Error = String;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        value.parse()
    }
}

/// One posed, colored object in the scene.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneObject<T> {
    pub source: MeshSource,
    pub pose: Pose<T>,
    /// Linear-RGB albedo, components in [0, 1].
    pub albedo: Rgb<T>,
}

impl<T: Real> SceneObject<T> {
    pub fn validate(&self) -> Result<(), SceneError> {
        self.pose.validate()?;
        if !self.albedo.in_unit_range() {
            return Err(SceneError::Invalid(format!(
                "object albedo components must be in [0, 1], got ({}, {}, {})",
                self.albedo.r, self.albedo.g, self.albedo.b
            )));
        }
        Ok(())
    }
}

/// Complete description of one render; the sole input to the deterministic
/// renderer besides the seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SceneSpec<T> {
    pub camera: CameraSpec<T>,
    pub light: LightSpec<T>,
    pub waves: WaveParams<T>,
    pub optics: WaterOptics<T>,
    pub noise: NoiseSpec<T>,
    pub objects_of_interest: Vec<SceneObject<T>>,
    #[serde(default)]
    pub objects_of_non_interest: Vec<SceneObject<T>>,
    /// Seafloor plane depth below mean sea level, meters, > 0.
    pub seafloor_depth: T,
}

impl<T: Real> SceneSpec<T> {
    pub fn validate(&self) -> Result<(), SceneError> {
        self.camera.validate()?;
        self.light.validate()?;
        self.waves.validate()?;
        self.optics.validate()?;
        self.noise.validate()?;
        let total = self.objects_of_interest.len() + self.objects_of_non_interest.len();
        if total > MAX_SCENE_OBJECTS {
            return Err(SceneError::Invalid(format!(
                "scene has {total} objects, maximum is {MAX_SCENE_OBJECTS}"
            )));
        }
        for obj in self
            .objects_of_interest
            .iter()
            .chain(&self.objects_of_non_interest)
        {
            obj.validate()?;
        }
        if !(self.seafloor_depth > T::zero()) || !self.seafloor_depth.is_finite() {
            return Err(SceneError::Invalid(format!(
                "seafloor depth must be positive, got {}",
                self.seafloor_depth
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::Vec3;

    pub(crate) fn basic_scene() -> SceneSpec<f64> {
        SceneSpec {
            camera: CameraSpec {
                altitude: 100.0,
                focal_length: 0.05,
                sensor_width: 0.036,
                width: 140,
                height: 140,
                principal: None,
            },
            light: LightSpec {
                sun_elevation: 1.0,
                sun_azimuth: 0.8,
                sun_intensity: 1.0,
                sky_ambient: 0.25,
            },
            waves: WaveParams {
                scale: 8.0,
                detail: 4,
                dimension: 0.55,
                lacunarity: 2.0,
                strength: 0.2,
                metallic: 0.3,
                tilt: 1.0,
                sharpness: 1.0,
            },
            optics: WaterOptics {
                color_index: 300,
                turbidity: 0.1,
                k_min: 0.05,
                k_max: 3.0,
            },
            noise: NoiseSpec::none(),
            objects_of_interest: vec![SceneObject {
                source: MeshSource::Parametric,
                pose: Pose {
                    translation: Vec3::new(0.0, 0.0, -1.0),
                    ..Pose::identity()
                },
                albedo: Rgb::new(0.16, 0.16, 0.18),
            }],
            objects_of_non_interest: vec![],
            seafloor_depth: 20.0,
        }
    }

    #[test]
    fn valid_scene_validates() {
        basic_scene().validate().unwrap();
    }

    #[test]
    fn mesh_source_round_trips_through_json() {
        let file = MeshSource::File(PathBuf::from("assets/rock.obj"));
        let json = serde_json::to_string(&file).unwrap();
        assert_eq!(json, "\"file:assets/rock.obj\"");
        assert_eq!(serde_json::from_str::<MeshSource>(&json).unwrap(), file);

        let par: MeshSource = serde_json::from_str("\"parametric\"").unwrap();
        assert_eq!(par, MeshSource::Parametric);
    }

    #[test]
    fn bad_mesh_source_is_rejected() {
        assert!(serde_json::from_str::<MeshSource>("\"box\"").is_err());
        assert!(serde_json::from_str::<MeshSource>("\"file:\"").is_err());
    }

    #[test]
    fn object_count_cap_is_enforced() {
        let mut scene = basic_scene();
        let obj = scene.objects_of_interest[0].clone();
        scene.objects_of_interest = vec![obj; 17];
        assert!(scene.validate().is_err());
    }

    #[test]
    fn scene_spec_round_trips_through_json() {
        let scene = basic_scene();
        let json = serde_json::to_string_pretty(&scene).unwrap();
        let back: SceneSpec<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(scene, back);
    }

    #[test]
    fn optics_defaults_apply_when_omitted() {
        let json = r#"{"color_index": 10, "turbidity": 0.5}"#;
        let optics: WaterOptics<f64> = serde_json::from_str(json).unwrap();
        assert_eq!(optics.k_min, 0.05);
        assert_eq!(optics.k_max, 3.0);
    }
}

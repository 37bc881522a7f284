//! Minimal mesh-file reader and writer.
//!
//! Supported subset of the Wavefront-style text format:
//! - `v x y z` vertex positions (extra components after z are ignored)
//! - `f i j k ...` faces with 3+ indices, fan-triangulated from the first
//!   index; indices are 1-based, negative indices count back from the
//!   vertices defined so far, and `i/t/n` forms keep only the vertex part
//! - `#` comments
//!
//! Any other directive (normals, texture coordinates, groups, materials) is
//! ignored; shading computes geometric normals.

use crate::math::Vec3;
use crate::scalar::Real;

use super::{GeometryError, Mesh};

/// Parses mesh text into a [`Mesh`]. Indices must reference vertices already
/// defined at the point the face appears.
pub fn parse_mesh<T: Real>(text: &str) -> Result<Mesh<T>, GeometryError> {
    let mut vertices: Vec<Vec3<T>> = Vec::new();
    let mut triangles: Vec<[u32; 3]> = Vec::new();

    for (line_index, raw_line) in text.lines().enumerate() {
        let line_no = line_index + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let mut coords = [T::zero(); 3];
                for (i, slot) in coords.iter_mut().enumerate() {
                    let tok = tokens.next().ok_or_else(|| {
                        GeometryError::parse(line_no, "vertex line has fewer than 3 coordinates")
                    })?;
                    *slot = parse_coord(tok, i, line_no)?;
                }
                vertices.push(Vec3::new(coords[0], coords[1], coords[2]));
            }
            Some("f") => {
                let mut indices: Vec<u32> = Vec::new();
                for tok in tokens {
                    indices.push(resolve_index(tok, vertices.len(), line_no)?);
                }
                if indices.len() < 3 {
                    return Err(GeometryError::parse(
                        line_no,
                        "face has fewer than 3 indices",
                    ));
                }
                // Fan triangulation anchored at the first index.
                for k in 1..indices.len() - 1 {
                    let tri = [indices[0], indices[k], indices[k + 1]];
                    if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                        return Err(GeometryError::parse(
                            line_no,
                            "face repeats a vertex index",
                        ));
                    }
                    triangles.push(tri);
                }
            }
            _ => {} // comments, blank lines, unsupported directives
        }
    }

    Mesh::new(vertices, triangles)
}

fn parse_coord<T: Real>(token: &str, which: usize, line_no: usize) -> Result<T, GeometryError> {
    let value: f64 = token.parse().map_err(|_| {
        GeometryError::parse(
            line_no,
            format!("non-numeric coordinate {} in vertex line: {token:?}", which + 1),
        )
    })?;
    if !value.is_finite() {
        return Err(GeometryError::parse(
            line_no,
            format!("non-finite coordinate in vertex line: {token:?}"),
        ));
    }
    Ok(T::of(value))
}

fn resolve_index(token: &str, vertex_count: usize, line_no: usize) -> Result<u32, GeometryError> {
    // "i", "i/t", "i//n", "i/t/n": keep the vertex part.
    let vertex_part = token.split('/').next().unwrap_or(token);
    let signed: i64 = vertex_part.parse().map_err(|_| {
        GeometryError::parse(line_no, format!("non-numeric face index: {token:?}"))
    })?;
    let resolved: i64 = if signed > 0 {
        signed - 1
    } else if signed < 0 {
        vertex_count as i64 + signed
    } else {
        return Err(GeometryError::parse(line_no, "face index 0 is invalid"));
    };
    if resolved < 0 || resolved >= vertex_count as i64 {
        return Err(GeometryError::parse(
            line_no,
            format!("face index {signed} out of range (have {vertex_count} vertices)"),
        ));
    }
    Ok(resolved as u32)
}

/// Writes a mesh back to the text format accepted by [`parse_mesh`].
/// Coordinates use the shortest representation that round-trips, so
/// parse -> serialize -> parse is lossless.
pub fn serialize_mesh<T: Real>(mesh: &Mesh<T>) -> String {
    let mut out = String::new();
    for v in mesh.vertices() {
        out.push_str(&format!("v {} {} {}\n", v.x, v.y, v.z));
    }
    for t in mesh.triangles() {
        out.push_str(&format!("f {} {} {}\n", t[0] + 1, t[1] + 1, t[2] + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_string_is_empty_mesh_error() {
        let err = parse_mesh::<f64>("").unwrap_err();
        assert!(matches!(err, GeometryError::EmptyMesh));
        assert_eq!(err.to_string(), "empty mesh");
    }

    #[test]
    fn vertices_without_faces_is_empty_mesh_error() {
        let err = parse_mesh::<f64>("v 0 0 0\nv 1 0 0\nv 0 1 0\n").unwrap_err();
        assert!(matches!(err, GeometryError::EmptyMesh));
    }

    #[test]
    fn minimal_valid_file() {
        let m = parse_mesh::<f64>("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n").unwrap();
        assert_eq!(m.vertices().len(), 3);
        assert_eq!(m.triangles().len(), 1);
        assert_eq!(m.triangles()[0], [0, 1, 2]);
    }

    #[test]
    fn unit_cube_fan_triangulates_to_12() {
        // 8 vertices, 6 quad faces; each quad fans into 2 triangles.
        let text = "\
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
v 0 0 1
v 1 0 1
v 1 1 1
v 0 1 1
f 1 2 3 4
f 5 8 7 6
f 1 5 6 2
f 2 6 7 3
f 3 7 8 4
f 4 8 5 1
";
        let m = parse_mesh::<f64>(text).unwrap();
        assert_eq!(m.vertices().len(), 8);
        assert_eq!(m.triangles().len(), 12);
    }

    #[test]
    fn negative_indices_resolve_backwards() {
        let m = parse_mesh::<f64>("v 0 0 0\nv 1 0 0\nv 0 1 0\nf -3 -2 -1\n").unwrap();
        assert_eq!(m.triangles()[0], [0, 1, 2]);
    }

    #[test]
    fn slash_forms_keep_vertex_index() {
        let m = parse_mesh::<f64>("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1/1 2/2/2 3//3\n").unwrap();
        assert_eq!(m.triangles()[0], [0, 1, 2]);
    }

    #[test]
    fn malformed_vertex_reports_line_number() {
        let err = parse_mesh::<f64>("v 0 0 0\nv 1 oops 0\n").unwrap_err();
        match err {
            GeometryError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error: {other:?}"),
        }
    }

    #[test]
    fn face_index_out_of_range_is_an_error() {
        let err = parse_mesh::<f64>("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 4\n").unwrap_err();
        assert!(matches!(err, GeometryError::Parse { line: 4, .. }));
    }

    #[test]
    fn comments_and_unknown_directives_are_ignored() {
        let text = "# a comment\nvn 0 0 1\nv 0 0 0\nv 1 0 0\nv 0 1 0\nusemtl whale\nf 1 2 3 # trailing\n";
        let m = parse_mesh::<f64>(text).unwrap();
        assert_eq!(m.triangles().len(), 1);
    }

    #[test]
    fn serialize_round_trips() {
        let text = "v 0.1 -2.25 3e-7\nv 1 0 0\nv 0 1 0\nv 0 0 1\nf 1 2 3 4\n";
        let m1 = parse_mesh::<f64>(text).unwrap();
        let m2 = parse_mesh::<f64>(&serialize_mesh(&m1)).unwrap();
        assert_eq!(m1, m2);
    }
}

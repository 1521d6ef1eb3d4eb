//! OBJ and CSV output.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use super::{SpectrumGrid, SpectrumMesh};
use crate::error::{Error, Result};

/// "v x y z [c]" lines, then 1-based "f i j k" lines.
pub fn mesh_obj(mesh: &SpectrumMesh) -> String {
    let mut out = String::new();
    for (k, v) in mesh.vertices.iter().enumerate() {
        write!(out, "v {:.16e} {:.16e} {:.16e}", v[0], v[1], v[2]).unwrap();
        if let Some(c) = &mesh.colors {
            write!(out, " {:.16e}", c[k]).unwrap();
        }
        out.push('\n');
    }
    for t in &mesh.triangles {
        writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1).unwrap();
    }
    out
}

/// Header "l1,…,ld,value", one row per node in grid order.
pub fn grid_csv(grid: &SpectrumGrid) -> String {
    let d = grid.spec.d;
    let mut out = String::new();
    for c in 1..=d {
        write!(out, "l{c},").unwrap();
    }
    out.push_str("value\n");
    for (flat, v) in grid.values.iter().enumerate() {
        for x in grid.spec.point_f64(flat) {
            write!(out, "{x:.16e},").unwrap();
        }
        writeln!(out, "{v:.16e}").unwrap();
    }
    out
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_mesh_obj(mesh: &SpectrumMesh, path: &Path) -> Result<()> {
    write(path, &mesh_obj(mesh))
}

pub fn write_grid_csv(grid: &SpectrumGrid, path: &Path) -> Result<()> {
    write(path, &grid_csv(grid))
}

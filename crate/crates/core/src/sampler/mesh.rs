//! Marching tetrahedra over a sampled grid.

use std::collections::{BTreeMap, HashMap};

use super::SpectrumGrid;
use crate::error::{Error, Result};

const DEGENERATE_AREA: f64 = 1e-12;
/// Node values within this fraction of the largest |value| of the level count as on it.
const LEVEL_SNAP: f64 = 1e-12;
/// Edge parameters this close to an end are welded to the grid node.
const SNAP: f64 = 1e-7;

/// Cube corners as (dx, dy, dz) offsets.
const CORNERS: [[usize; 3]; 8] = [
    [0, 0, 0],
    [1, 0, 0],
    [1, 1, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, 0, 1],
    [1, 1, 1],
    [0, 1, 1],
];

/// Six tetrahedra around the 0–6 diagonal; neighbouring cubes share faces consistently.
const TETS: [[usize; 4]; 6] = [[0, 6, 1, 2], [0, 6, 2, 3], [0, 6, 3, 7], [0, 6, 7, 4], [0, 6, 4, 5], [0, 6, 5, 1]];

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SpectrumMesh {
    pub vertices: Vec<[f64; 3]>,
    /// Per-vertex value of a fourth coordinate, when the grid is a slice.
    pub colors: Option<Vec<f64>>,
    pub triangles: Vec<[usize; 3]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeshStats {
    pub vertices: usize,
    pub triangles: usize,
    pub edges: usize,
    /// Edges with exactly one incident triangle; zero for a closed surface.
    pub boundary_edges: usize,
    /// Edges with more than two incident triangles.
    pub nonmanifold_edges: usize,
    pub euler: i64,
    pub components: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum VertexKey {
    Node(usize),
    Edge(usize, usize),
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

struct Builder<'a> {
    grid: &'a SpectrumGrid,
    values: Vec<f64>,
    level: f64,
    keys: HashMap<VertexKey, usize>,
    mesh: SpectrumMesh,
}

impl Builder<'_> {
    fn position(&self, flat: usize) -> [f64; 3] {
        let idx = self.grid.spec.unflatten(flat);
        let a = &self.grid.spec.axes;
        [a[0].node_f64(idx[0]), a[1].node_f64(idx[1]), a[2].node_f64(idx[2])]
    }

    /// Vertex where the level crosses the edge from an inside node to an outside node.
    fn vertex(&mut self, inside: usize, outside: usize) -> usize {
        let (va, vb) = (self.values[inside], self.values[outside]);
        let t = ((self.level - va) / (vb - va)).clamp(0.0, 1.0);
        let t = if t < SNAP {
            0.0
        } else if t > 1.0 - SNAP {
            1.0
        } else {
            t
        };
        let key = if t == 0.0 {
            VertexKey::Node(inside)
        } else if t == 1.0 {
            VertexKey::Node(outside)
        } else {
            VertexKey::Edge(inside.min(outside), inside.max(outside))
        };
        if let Some(&id) = self.keys.get(&key) {
            return id;
        }
        let (pa, pb) = (self.position(inside), self.position(outside));
        let p = [pa[0] + t * (pb[0] - pa[0]), pa[1] + t * (pb[1] - pa[1]), pa[2] + t * (pb[2] - pa[2])];
        let id = self.mesh.vertices.len();
        self.mesh.vertices.push(p);
        self.keys.insert(key, id);
        id
    }

    /// Emits a triangle whose normal points from the inside region to the outside.
    fn triangle(&mut self, mut tri: [usize; 3], outward: [f64; 3]) {
        if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
            return;
        }
        let v = &self.mesh.vertices;
        let n = cross(sub(v[tri[1]], v[tri[0]]), sub(v[tri[2]], v[tri[0]]));
        if 0.5 * dot(n, n).sqrt() <= DEGENERATE_AREA {
            return;
        }
        if dot(n, outward) < 0.0 {
            tri.swap(1, 2);
        }
        self.mesh.triangles.push(tri);
    }

    fn tet(&mut self, nodes: [usize; 4]) {
        let inside: Vec<usize> = nodes.iter().copied().filter(|&k| self.values[k] < self.level).collect();
        let outside: Vec<usize> = nodes.iter().copied().filter(|&k| self.values[k] >= self.level).collect();
        if inside.is_empty() || outside.is_empty() {
            return;
        }
        let centroid = |pts: &[usize], b: &Builder| {
            let mut c = [0.0; 3];
            for &k in pts {
                let p = b.position(k);
                for i in 0..3 {
                    c[i] += p[i] / pts.len() as f64;
                }
            }
            c
        };
        let outward = sub(centroid(&outside, self), centroid(&inside, self));
        match inside.len() {
            1 | 3 => {
                let (apex, others, apex_inside) = if inside.len() == 1 {
                    (inside[0], outside.clone(), true)
                } else {
                    (outside[0], inside.clone(), false)
                };
                let ids: Vec<usize> = others
                    .iter()
                    .map(|&o| if apex_inside { self.vertex(apex, o) } else { self.vertex(o, apex) })
                    .collect();
                self.triangle([ids[0], ids[1], ids[2]], outward);
            }
            _ => {
                let (a, b) = (inside[0], inside[1]);
                let (c, d) = (outside[0], outside[1]);
                let ac = self.vertex(a, c);
                let ad = self.vertex(a, d);
                let bc = self.vertex(b, c);
                let bd = self.vertex(b, d);
                // quad ac–ad–bd–bc
                self.triangle([ac, ad, bd], outward);
                self.triangle([ac, bd, bc], outward);
            }
        }
    }
}

/// Surface {value = level} by marching tetrahedra; nodes with value < level are inside.
///
/// An empty result is not an error.
pub fn extract_isosurface(grid: &SpectrumGrid, level: f64) -> Result<SpectrumMesh> {
    let axes = &grid.spec.axes;
    if axes.len() != 3 {
        return Err(Error::Dimension(format!("isosurface needs 3 sampled axes, got {}", axes.len())));
    }
    if !level.is_finite() {
        return Err(Error::Config("contour level is not finite".into()));
    }
    let scale = grid.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let values: Vec<f64> = grid
        .values
        .iter()
        .map(|&v| if (v - level).abs() <= LEVEL_SNAP * scale { level } else { v })
        .collect();
    let mut b = Builder {
        grid,
        values,
        level,
        keys: HashMap::new(),
        mesh: SpectrumMesh::default(),
    };
    let (cx, cy, cz) = (axes[0].count, axes[1].count, axes[2].count);
    for i in 0..cx - 1 {
        for j in 0..cy - 1 {
            for k in 0..cz - 1 {
                let corner = |c: [usize; 3]| grid.spec.flatten(&[i + c[0], j + c[1], k + c[2]]);
                let flat: Vec<usize> = CORNERS.iter().map(|&c| corner(c)).collect();
                let vals: Vec<bool> = flat.iter().map(|&f| b.values[f] < level).collect();
                if vals.iter().all(|&v| v) || vals.iter().all(|&v| !v) {
                    continue;
                }
                for t in TETS {
                    b.tet([flat[t[0]], flat[t[1]], flat[t[2]], flat[t[3]]]);
                }
            }
        }
    }
    let mut mesh = b.mesh;
    if grid.spec.d == 4 && grid.spec.fixed.len() == 1 {
        mesh.colors = Some(vec![grid.spec.fixed[0].1; mesh.vertices.len()]);
    }
    Ok(mesh)
}

impl SpectrumMesh {
    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn stats(&self) -> MeshStats {
        let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for t in &self.triangles {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                *edges.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        let used: Vec<bool> = {
            let mut u = vec![false; self.vertices.len()];
            for t in &self.triangles {
                for &v in t {
                    u[v] = true;
                }
            }
            u
        };
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in edges.keys() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let nv = used.iter().filter(|&&u| u).count();
        let components = (0..self.vertices.len())
            .filter(|&v| used[v] && find(&mut parent, v) == v)
            .count();
        MeshStats {
            vertices: nv,
            triangles: self.triangles.len(),
            edges: edges.len(),
            boundary_edges: edges.values().filter(|&&c| c == 1).count(),
            nonmanifold_edges: edges.values().filter(|&&c| c > 2).count(),
            euler: nv as i64 - edges.len() as i64 + self.triangles.len() as i64,
            components,
        }
    }

    /// True when every edge has exactly two incident triangles.
    pub fn is_closed(&self) -> bool {
        let s = self.stats();
        !self.is_empty() && s.boundary_edges == 0 && s.nonmanifold_edges == 0
    }

    /// Euclidean norms of the vertex positions.
    pub fn radii(&self) -> Vec<f64> {
        self.vertices.iter().map(|v| dot(*v, *v).sqrt()).collect()
    }
}

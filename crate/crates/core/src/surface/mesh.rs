use std::collections::HashMap;
use std::fmt::Write as _;

use super::field::ScalarField3;
use super::tables::{CORNERS, EDGES, EDGE_TABLE, TRI_TABLE};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct TriangleMesh {
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[u32; 3]>,
}

impl TriangleMesh {
    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// `(min corner, max corner)`, or `None` for an empty mesh.
    pub fn bounding_box(&self) -> Option<([f64; 3], [f64; 3])> {
        let first = *self.vertices.first()?;
        Some(self.vertices.iter().fold((first, first), |(lo, hi), v| {
            (
                [lo[0].min(v[0]), lo[1].min(v[1]), lo[2].min(v[2])],
                [hi[0].max(v[0]), hi[1].max(v[1]), hi[2].max(v[2])],
            )
        }))
    }

    /// Index range and non-degeneracy of every triangle.
    pub fn check(&self) -> Result<()> {
        let n = self.vertices.len() as u32;
        for (t, tri) in self.triangles.iter().enumerate() {
            if tri.iter().any(|&i| i >= n) {
                return Err(Error::Format(format!(
                    "triangle {t} indexes past {n} vertices"
                )));
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(Error::Format(format!("triangle {t} repeats a vertex")));
            }
        }
        Ok(())
    }

    /// Every undirected edge is shared by exactly two triangles.
    pub fn is_closed(&self) -> bool {
        let mut counts: HashMap<(u32, u32), u32> = HashMap::new();
        for tri in &self.triangles {
            for e in 0..3 {
                let (a, b) = (tri[e], tri[(e + 1) % 3]);
                *counts.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        counts.values().all(|&c| c == 2)
    }

    /// `v x y z` and `f i j k` lines with 1-based indices.
    pub fn to_obj(&self) -> String {
        let mut out = String::with_capacity(32 * (self.vertices.len() + self.triangles.len()));
        for v in &self.vertices {
            let _ = writeln!(out, "v {} {} {}", v[0], v[1], v[2]);
        }
        for t in &self.triangles {
            let _ = writeln!(out, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1);
        }
        out
    }
}

/// Marching-cubes triangulation of `{field = level}` with linear interpolation
/// along cell edges. Vertices on shared edges are emitted once; triangles are
/// appended in cell-index order (`c1` fastest).
pub fn isosurface(field: &ScalarField3, level: f64) -> Result<TriangleMesh> {
    let (min, max) = field.range().unwrap_or((f64::NAN, f64::NAN));
    if !(min < level && level < max) {
        return Err(Error::EmptyLevelSet { level, min, max });
    }

    let n = field.n();
    let mut mesh = TriangleMesh::default();
    let mut edge_vertex: HashMap<(usize, usize), u32> = HashMap::new();

    for k in 0..n - 1 {
        for j in 0..n - 1 {
            for i in 0..n - 1 {
                let corners = CORNERS.map(|[di, dj, dk]| (i + di, j + dj, k + dk));
                if corners.iter().any(|&(a, b, c)| !field.included(a, b, c)) {
                    continue;
                }
                let values = corners.map(|(a, b, c)| field.value(a, b, c));
                let case = values
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v < level)
                    .fold(0usize, |acc, (bit, _)| acc | (1 << bit));
                if EDGE_TABLE[case] == 0 {
                    continue;
                }

                let mut slots = [u32::MAX; 12];
                for (e, [ca, cb]) in EDGES.iter().enumerate() {
                    if EDGE_TABLE[case] & (1 << e) == 0 {
                        continue;
                    }
                    let (pa, pb) = (corners[*ca], corners[*cb]);
                    let key = edge_key(field, pa, pb);
                    slots[e] = *edge_vertex.entry(key).or_insert_with(|| {
                        let (va, vb) = (values[*ca], values[*cb]);
                        let t = (level - va) / (vb - va);
                        let xa = field.point(pa.0, pa.1, pa.2);
                        let xb = field.point(pb.0, pb.1, pb.2);
                        mesh.vertices.push([
                            xa[0] + t * (xb[0] - xa[0]),
                            xa[1] + t * (xb[1] - xa[1]),
                            xa[2] + t * (xb[2] - xa[2]),
                        ]);
                        (mesh.vertices.len() - 1) as u32
                    });
                }

                for tri in TRI_TABLE[case].chunks(3).take_while(|t| t[0] >= 0) {
                    mesh.triangles.push([
                        slots[tri[0] as usize],
                        slots[tri[1] as usize],
                        slots[tri[2] as usize],
                    ]);
                }
            }
        }
    }
    Ok(mesh)
}

/// `(index of the lower end point, axis)` identifies a grid edge.
fn edge_key(
    field: &ScalarField3,
    a: (usize, usize, usize),
    b: (usize, usize, usize),
) -> (usize, usize) {
    let lo = a.min(b);
    let axis = if a.0 != b.0 {
        0
    } else if a.1 != b.1 {
        1
    } else {
        2
    };
    (field.index(lo.0, lo.1, lo.2), axis)
}

//! Level-set data for the Bell-diagonal coherence: a heightmap of the
//! `gamma1` coherence over `(c1, c2)` and triangulated surfaces of constant
//! summed coherence over `(c1, c2, c3)`.

mod field;
mod mesh;
mod tables;

pub use field::{
    coherence_field, coherence_field_physical, fig1_heightmap, grid_coord, HeightMap, ScalarField3,
};
pub use mesh::{isosurface, TriangleMesh};

use crate::error::Result;

pub const FIG1_DEFAULT_GRID: usize = 201;
pub const FIG2_DEFAULT_GRID: usize = 101;
pub const FIG2_DEFAULT_LEVELS: [f64; 3] = [0.5, 1.0, 2.0];

/// One mesh per level over a shared field.
pub fn fig2_meshes(
    n: usize,
    levels: &[f64],
    physical_only: bool,
) -> Result<Vec<(f64, TriangleMesh)>> {
    let field = if physical_only {
        coherence_field_physical(n)?
    } else {
        coherence_field(n)?
    };
    levels
        .iter()
        .map(|&level| isosurface(&field, level).map(|mesh| (level, mesh)))
        .collect()
}

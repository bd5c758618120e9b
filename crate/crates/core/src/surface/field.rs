use std::fmt::Write as _;

use crate::coherence::{bell_closed_form, bell_sum_raw, AmubBasis};
use crate::error::{Error, Result};
use crate::states::CorrelationTriple;

/// Coordinate of grid index `i` on a uniform `n`-point grid over `[-1, 1]`.
///
/// Computed as `(2i - (n-1)) / (n-1)` so that mirrored indices give exactly
/// opposite coordinates and the end points are exactly `-1` and `1`.
pub fn grid_coord(i: usize, n: usize) -> f64 {
    let m = (n - 1) as f64;
    (2.0 * i as f64 - m) / m
}

fn check_resolution(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidResolution(n));
    }
    Ok(())
}

/// Coherence in `gamma1` over the `(c1, c2)` square; `c1` varies fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightMap {
    n: usize,
    values: Vec<f64>,
}

impl HeightMap {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at `(c1, c2) = (grid_coord(i), grid_coord(j))`.
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.n + i]
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("c1,c2,value\n");
        for j in 0..self.n {
            for i in 0..self.n {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    grid_coord(i, self.n),
                    grid_coord(j, self.n),
                    self.value(i, j)
                );
            }
        }
        out
    }
}

/// Samples the `gamma1` coherence, which does not depend on `c3`.
pub fn fig1_heightmap(n: usize) -> Result<HeightMap> {
    check_resolution(n)?;
    let mut values = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let t = CorrelationTriple::new(grid_coord(i, n), grid_coord(j, n), 0.0)?;
            values.push(bell_closed_form(t, AmubBasis::Gamma1));
        }
    }
    Ok(HeightMap { n, values })
}

/// The summed gamma-basis coherence on the cube `[-1, 1]^3`, `c1` fastest,
/// then `c2`, then `c3`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField3 {
    n: usize,
    values: Vec<f64>,
    /// When present, only points flagged `true` take part in meshing.
    mask: Option<Vec<bool>>,
}

impl ScalarField3 {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (k * self.n + j) * self.n + i
    }

    pub fn value(&self, i: usize, j: usize, k: usize) -> f64 {
        self.values[self.index(i, j, k)]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn included(&self, i: usize, j: usize, k: usize) -> bool {
        self.mask.as_ref().is_none_or(|m| m[self.index(i, j, k)])
    }

    pub fn is_masked(&self) -> bool {
        self.mask.is_some()
    }

    pub fn point(&self, i: usize, j: usize, k: usize) -> [f64; 3] {
        [
            grid_coord(i, self.n),
            grid_coord(j, self.n),
            grid_coord(k, self.n),
        ]
    }

    /// Grid spacing along one axis.
    pub fn spacing(&self) -> f64 {
        2.0 / (self.n - 1) as f64
    }

    pub fn cell_diagonal(&self) -> f64 {
        self.spacing() * 3f64.sqrt()
    }

    /// `(min, max)` over included points.
    pub fn range(&self) -> Option<(f64, f64)> {
        let mut range: Option<(f64, f64)> = None;
        for (idx, &v) in self.values.iter().enumerate() {
            if self.mask.as_ref().is_some_and(|m| !m[idx]) {
                continue;
            }
            range = Some(match range {
                None => (v, v),
                Some((lo, hi)) => (lo.min(v), hi.max(v)),
            });
        }
        range
    }

    pub fn to_csv(&self) -> String {
        let n = self.n;
        let mut out = String::from("c1,c2,c3,value\n");
        for k in 0..n {
            for j in 0..n {
                for i in 0..n {
                    if !self.included(i, j, k) {
                        continue;
                    }
                    let [a, b, c] = self.point(i, j, k);
                    let _ = writeln!(out, "{a},{b},{c},{}", self.value(i, j, k));
                }
            }
        }
        out
    }
}

/// The summed coherence over the full cube.
pub fn coherence_field(n: usize) -> Result<ScalarField3> {
    check_resolution(n)?;
    let coords: Vec<f64> = (0..n).map(|i| grid_coord(i, n)).collect();
    let mut values = Vec::with_capacity(n * n * n);
    for &c3 in &coords {
        for &c2 in &coords {
            for &c1 in &coords {
                values.push(bell_sum_raw(c1, c2, c3));
            }
        }
    }
    Ok(ScalarField3 {
        n,
        values,
        mask: None,
    })
}

/// Like [`coherence_field`], restricted to triples whose Bell-diagonal
/// matrix is positive semidefinite.
pub fn coherence_field_physical(n: usize) -> Result<ScalarField3> {
    let mut field = coherence_field(n)?;
    let mut mask = Vec::with_capacity(field.values.len());
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                let [a, b, c] = field.point(i, j, k);
                mask.push(CorrelationTriple::new(a, b, c)?.is_physical());
            }
        }
    }
    field.mask = Some(mask);
    Ok(field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coordinates_are_symmetric_and_exact_at_ends() {
        for n in [2, 3, 101, 201] {
            assert_eq!(grid_coord(0, n), -1.0);
            assert_eq!(grid_coord(n - 1, n), 1.0);
            for i in 0..n {
                assert_eq!(grid_coord(n - 1 - i, n), -grid_coord(i, n));
            }
        }
        assert_eq!(grid_coord(50, 101), 0.0);
    }

    #[test]
    fn heightmap_examples() {
        let h = fig1_heightmap(201).unwrap();
        assert_eq!(h.value(200, 200), 1.0);
        assert_eq!(h.value(100, 100), 0.0);
        // (1, 0.3) sits at j = 130.
        assert!((grid_coord(130, 201) - 0.3).abs() < 1e-15);
        assert!((h.value(200, 130) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn heightmap_csv_layout() {
        let csv = fig1_heightmap(3).unwrap().to_csv();
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "c1,c2,value");
        assert_eq!(lines.len(), 10);
        assert_eq!(lines[1], "-1,-1,1");
        assert_eq!(lines[2], "0,-1,1");
        assert_eq!(lines[5], "0,0,0");
    }

    #[test]
    fn field_examples() {
        let f = coherence_field(101).unwrap();
        assert_eq!(f.value(50, 50, 50), 0.0);
        assert_eq!(f.value(100, 100, 100), 3.0);
        assert_eq!(f.value(100, 50, 50), 2.0);
        assert!(f.values().iter().all(|&v| (0.0..=3.0).contains(&v)));
        assert_eq!(f.range(), Some((0.0, 3.0)));
    }

    #[test]
    fn field_symmetries() {
        let n = 21;
        let f = coherence_field(n).unwrap();
        let m = |i: usize| n - 1 - i;
        for k in 0..n {
            for j in 0..n {
                for i in 0..n {
                    let v = f.value(i, j, k);
                    for w in [
                        f.value(m(i), j, k),
                        f.value(i, m(j), k),
                        f.value(i, j, m(k)),
                        f.value(j, i, k),
                        f.value(k, j, i),
                        f.value(i, k, j),
                        f.value(j, k, i),
                    ] {
                        assert!((v - w).abs() <= 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn physical_mask_is_tetrahedron() {
        let f = coherence_field_physical(5).unwrap();
        // (1,-1,1) is a Bell state; (1,1,1) is not physical.
        assert!(f.included(4, 0, 4));
        assert!(!f.included(4, 4, 4));
        assert!(f.included(2, 2, 2));
    }

    #[test]
    fn resolution_checked() {
        assert_eq!(fig1_heightmap(1), Err(Error::InvalidResolution(1)));
        assert!(coherence_field(0).is_err());
    }
}

//! Seeded samplers over the parameter domains.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::states::{BlochVector, CorrelationTriple};

/// Uniform direction on the unit sphere from normalized standard normals.
pub fn unit_direction(rng: &mut ChaCha8Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if n > 1e-12 {
            return v.map(|c| c / n);
        }
    }
}

/// Uniform point of the Bloch ball: uniform direction, radius `u^(1/3)`.
pub fn bloch_ball(rng: &mut ChaCha8Rng) -> BlochVector {
    let r = rng.random::<f64>().cbrt();
    let [x, y, z] = unit_direction(rng).map(|c| c * r);
    BlochVector::new(x, y, z).expect("sampled inside the unit ball")
}

/// Uniform point of the Bloch sphere (pure states).
pub fn bloch_sphere(rng: &mut ChaCha8Rng) -> BlochVector {
    let [x, y, z] = unit_direction(rng);
    BlochVector::new(x, y, z).expect("unit vector")
}

/// `(x, y, z)` for which the X-type state is positive semidefinite:
/// `x, y >= 0`, `x + y <= 1`, `z^2 <= x y`.
pub fn physical_x_params(rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
    let (mut x, mut y): (f64, f64) = (rng.random(), rng.random());
    if x + y > 1.0 {
        (x, y) = (1.0 - x, 1.0 - y);
    }
    let bound = (x * y).sqrt();
    let z = rng.random_range(-1.0..=1.0) * bound;
    (x, y, z)
}

/// Any real triple in `[-1, 1]^3`.
pub fn cube_params(rng: &mut ChaCha8Rng) -> (f64, f64, f64) {
    (
        rng.random_range(-1.0..=1.0),
        rng.random_range(-1.0..=1.0),
        rng.random_range(-1.0..=1.0),
    )
}

pub fn cube_triple(rng: &mut ChaCha8Rng) -> CorrelationTriple {
    let (a, b, c) = cube_params(rng);
    CorrelationTriple::new(a, b, c).expect("inside the cube")
}

/// Rejection-samples the cube until the Bell-diagonal state is physical.
pub fn physical_triple(rng: &mut ChaCha8Rng) -> CorrelationTriple {
    loop {
        let t = cube_triple(rng);
        if t.is_physical() {
            return t;
        }
    }
}

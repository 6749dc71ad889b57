//! Shared inputs for the benchmarks.

use bast_core::generate::{rng, uniform_square};
use bast_core::{Generator, PointSet};

/// `n` uniform points in the unit square.
pub fn uniform(n: usize, seed: u64) -> PointSet {
    uniform_square(&mut rng(seed), n, 1.0).expect("continuous samples are distinct")
}

/// `n` points in a box sized for an average unit-disk degree of about 6,
/// resampled until the unit disk graph is connected.
pub fn connected_udg(n: usize, seed: u64) -> PointSet {
    let side = (n as f64 * std::f64::consts::PI / 6.3).sqrt();
    Generator::ConnectedUdg { n, side }
        .generate(seed)
        .expect("connected sample within budget")
        .points
}

pub fn triplets(count: usize, seed: u64) -> Vec<[bast_core::Point; 3]> {
    let pts = uniform(3 * count, seed);
    pts.chunks(3).map(|c| [c[0], c[1], c[2]]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bast_core::unit_disk_graph;

    #[test]
    fn inputs_have_requested_sizes() {
        assert_eq!(uniform(50, 1).len(), 50);
        assert_eq!(triplets(7, 1).len(), 7);
        let ps = connected_udg(100, 1);
        assert!(unit_disk_graph(&ps, 1.0).is_connected());
    }
}

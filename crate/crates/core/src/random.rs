//! Seeded graph generators. All output is a pure function of the arguments.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::{Graph, GraphBuilder};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős-Rényi `G(n, p)`.
pub fn random_gnp(n: usize, seed: u64, p: f64) -> Graph {
    let mut rng = rng_from_seed(seed);
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                b.add_edge(i, j);
            }
        }
    }
    b.build()
}

/// A graph with independence number at most 2, built as the complement of a
/// maximal triangle-free graph `H`.
///
/// All vertex pairs are shuffled once. A first pass adds each pair to `H` with
/// probability `target_density` when it closes no triangle; a second pass over
/// the same order adds every remaining pair that still closes no triangle, so
/// `H` ends maximal. Densities above 1 behave as 1.
pub fn random_complement_triangle_free(n: usize, seed: u64, target_density: Ratio<u64>) -> Graph {
    triangle_free_maximal(n, seed, target_density).complement()
}

/// The maximal triangle-free graph `H` behind [`random_complement_triangle_free`].
pub fn triangle_free_maximal(n: usize, seed: u64, target_density: Ratio<u64>) -> Graph {
    let mut rng = rng_from_seed(seed);
    let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n as u32 {
        for j in i + 1..n as u32 {
            pairs.push((i, j));
        }
    }
    pairs.shuffle(&mut rng);

    let (num, den) = (*target_density.numer(), *target_density.denom());
    let mut h = GraphBuilder::new(n);
    let closes_triangle = |h: &GraphBuilder, i: usize, j: usize| !bits::is_disjoint(h.row(i), h.row(j));

    for &(i, j) in &pairs {
        let (i, j) = (i as usize, j as usize);
        let take = den != 0 && rng.gen_range(0..den) < num;
        if take && !closes_triangle(&h, i, j) {
            h.add_edge(i, j);
        }
    }
    for &(i, j) in &pairs {
        let (i, j) = (i as usize, j as usize);
        if !h.has_edge(i, j) && !closes_triangle(&h, i, j) {
            h.add_edge(i, j);
        }
    }
    h.build()
}

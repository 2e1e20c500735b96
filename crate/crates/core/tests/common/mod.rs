#![allow(dead_code)]

use std::collections::HashSet;

use cliquemin::random::{rng_from_seed, triangle_free_maximal};
use cliquemin::{Graph, GraphBuilder};
use rand::Rng;

/// Plain adjacency-matrix counts, written without any of the library's
/// bitset machinery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaiveCounts {
    pub m: u128,
    pub t3: u128,
    pub t3p: u128,
    pub t3pp: u128,
    pub i3: u128,
    pub t4: u128,
    pub t4p: u128,
}

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (i, j) in g.edges() {
        a[i][j] = true;
        a[j][i] = true;
    }
    a
}

pub fn naive_counts(g: &Graph) -> NaiveCounts {
    let a = matrix(g);
    let n = g.n();
    let e = |i: usize, j: usize| a[i][j] as u32;
    let mut c = NaiveCounts {
        m: 0,
        t3: 0,
        t3p: 0,
        t3pp: 0,
        i3: 0,
        t4: 0,
        t4p: 0,
    };
    for i in 0..n {
        for j in i + 1..n {
            c.m += e(i, j) as u128;
            for k in j + 1..n {
                match e(i, j) + e(i, k) + e(j, k) {
                    3 => c.t3 += 1,
                    2 => c.t3p += 1,
                    1 => c.t3pp += 1,
                    _ => c.i3 += 1,
                }
                for l in k + 1..n {
                    let s = e(i, j) + e(i, k) + e(i, l) + e(j, k) + e(j, l) + e(k, l);
                    if s == 6 {
                        c.t4 += 1;
                    } else if s == 5 {
                        c.t4p += 1;
                    }
                }
            }
        }
    }
    c
}

/// Complement of a random triangle-free graph: a maximal one with a random
/// fraction of its edges thinned out, so the samples are not all saturated.
pub fn random_ctf(n: usize, seed: u64) -> Graph {
    let mut rng = rng_from_seed(seed ^ 0xA5A5);
    let density = num_rational::Ratio::new(rng.gen_range(0..=4u64), 4);
    let h = triangle_free_maximal(n, seed, density);
    let keep_num: u32 = rng.gen_range(1..=4);
    let mut b = GraphBuilder::new(n);
    for (i, j) in h.edges() {
        if rng.gen_range(0..4) < keep_num {
            b.add_edge(i, j);
        }
    }
    b.build().complement()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![0; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = k;
            idx[j][i] = k;
            k += 1;
        }
    }
    idx
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                b.add_edge(i, j);
            }
            k += 1;
        }
    }
    b.build()
}

fn mask_triangle_free(n: usize, mask: u64, idx: &[Vec<usize>]) -> bool {
    let has = |i: usize, j: usize| mask >> idx[i][j] & 1 == 1;
    for i in 0..n {
        for j in i + 1..n {
            if !has(i, j) {
                continue;
            }
            for k in j + 1..n {
                if has(i, k) && has(j, k) {
                    return false;
                }
            }
        }
    }
    true
}

/// Isomorphism classes of labeled triangle-free graphs on `n <= 7`
/// vertices, by sweeping all labeled graphs and marking every relabeling of
/// each new representative. Returns one representative per class.
pub fn brute_force_triangle_free_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 7);
    let idx = pair_index(n);
    let pairs = n * n.saturating_sub(1) / 2;
    let perms = permutations(n);
    let mut seen: HashSet<u64> = HashSet::new();
    let mut reps = Vec::new();
    for mask in 0..1u64 << pairs {
        if seen.contains(&mask) || !mask_triangle_free(n, mask, &idx) {
            continue;
        }
        reps.push(graph_from_mask(n, mask));
        for p in &perms {
            let mut image = 0u64;
            for i in 0..n {
                for j in i + 1..n {
                    if mask >> idx[i][j] & 1 == 1 {
                        image |= 1 << idx[p[i]][p[j]];
                    }
                }
            }
            seen.insert(image);
        }
    }
    reps
}

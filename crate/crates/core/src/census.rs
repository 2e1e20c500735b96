//! Exact order-3 and order-4 induced-subgraph counts.
//!
//! The fast path works on pairs of vertices: with `C = N_i ∩ N_j`,
//!
//! - adjacent pairs contribute `|C|` to `3·t3` and `e(G[C])` to `6·t4`;
//! - nonadjacent pairs contribute `e(G[C])` to `t4p`, since each induced
//!   `K4 - e` has exactly one nonadjacent pair and its other two vertices
//!   form the unique edge inside that pair's common neighbourhood.
//!
//! The remaining order-3 counts follow from `t3`, the degree sequence and
//! `C(n,3)`. [`census_bruteforce`] classifies every 3- and 4-subset directly
//! and is the oracle for all of this.

use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::json::dec;
use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CensusRecord {
    #[serde(serialize_with = "dec")]
    pub n: u128,
    #[serde(serialize_with = "dec")]
    pub m: u128,
    /// Triangles.
    #[serde(serialize_with = "dec")]
    pub t3: u128,
    /// Induced 3-sets with exactly two edges.
    #[serde(serialize_with = "dec")]
    pub t3p: u128,
    /// Induced 3-sets with exactly one edge.
    #[serde(serialize_with = "dec")]
    pub t3pp: u128,
    /// Independent triples.
    #[serde(serialize_with = "dec")]
    pub i3: u128,
    #[serde(serialize_with = "dec")]
    pub t4: u128,
    /// Induced 4-sets with exactly five edges.
    #[serde(serialize_with = "dec")]
    pub t4p: u128,
}

/// `t[i]` = number of triangles through `i` = `e(G[N_i])`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexTriangleProfile {
    pub t: Vec<u64>,
}

impl VertexTriangleProfile {
    pub fn total(&self) -> u128 {
        self.t.iter().map(|&x| x as u128).sum()
    }
}

pub fn binomial(n: u128, k: u32) -> u128 {
    if (k as u128) > n {
        return 0;
    }
    let mut acc = 1u128;
    for i in 0..k as u128 {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Default, Clone, Copy)]
struct PairSums {
    common_on_edges: u128,
    k4_on_edges: u128,
    t4p: u128,
}

impl PairSums {
    fn merge(self, o: PairSums) -> Result<PairSums> {
        let add = |a: u128, b: u128| a.checked_add(b).ok_or(Error::Overflow("census pair sums"));
        Ok(PairSums {
            common_on_edges: add(self.common_on_edges, o.common_on_edges)?,
            k4_on_edges: add(self.k4_on_edges, o.k4_on_edges)?,
            t4p: add(self.t4p, o.t4p)?,
        })
    }
}

fn row_sums(g: &Graph, i: usize, buf: &mut [u64]) -> PairSums {
    let mut s = PairSums::default();
    let ri = g.row(i);
    for j in i + 1..g.n() {
        bits::and_into(buf, ri, g.row(j));
        let inside = g.edges_within(buf) as u128;
        if bits::test(ri, j) {
            s.common_on_edges += bits::popcount(buf) as u128;
            s.k4_on_edges += inside;
        } else {
            s.t4p += inside;
        }
    }
    s
}

/// Fast exact census. Work is split by vertex; partial sums are integers, so
/// the result does not depend on the thread count.
pub fn census(g: &Graph) -> Result<CensusRecord> {
    let stride = g.stride();
    let sums = (0..g.n())
        .into_par_iter()
        .map_init(|| vec![0u64; stride], |buf, i| Ok(row_sums(g, i, buf)))
        .try_reduce(PairSums::default, |a, b| a.merge(b))?;

    assert!(sums.common_on_edges % 3 == 0, "sum of edge codegrees must be divisible by 3");
    assert!(sums.k4_on_edges % 6 == 0, "edge-weighted K4 sum must be divisible by 6");
    let t3 = sums.common_on_edges / 3;
    let t4 = sums.k4_on_edges / 6;
    finish(g, t3, t4, sums.t4p)
}

fn finish(g: &Graph, t3: u128, t4: u128, t4p: u128) -> Result<CensusRecord> {
    let n = g.n() as u128;
    let m = g.m() as u128;
    // cherries: 2-paths counted at their centre = 3·t3 + t3p
    let cherries: u128 = (0..g.n()).map(|i| binomial(g.degree(i) as u128, 2)).sum();
    let t3p = cherries
        .checked_sub(3 * t3)
        .ok_or(Error::Overflow("t3p (negative)"))?;
    // (edge, third vertex) incidences = 3·t3 + 2·t3p + t3pp
    let edge_vertex = if n >= 2 { (n - 2) * m } else { 0 };
    let t3pp = edge_vertex
        .checked_sub(3 * t3 + 2 * t3p)
        .ok_or(Error::Overflow("t3pp (negative)"))?;
    let i3 = binomial(n, 3)
        .checked_sub(t3 + t3p + t3pp)
        .ok_or(Error::Overflow("i3 (negative)"))?;
    Ok(CensusRecord {
        n,
        m,
        t3,
        t3p,
        t3pp,
        i3,
        t4,
        t4p,
    })
}

/// Oracle: classify every 3-subset and 4-subset by induced edge count.
pub fn census_bruteforce(g: &Graph) -> CensusRecord {
    let n = g.n();
    let e = |a: usize, b: usize| g.has_edge(a, b) as u32;
    let mut by3 = [0u128; 4];
    let mut t4 = 0u128;
    let mut t4p = 0u128;
    for a in 0..n {
        for b in a + 1..n {
            let ab = e(a, b);
            for c in b + 1..n {
                let abc = ab + e(a, c) + e(b, c);
                by3[abc as usize] += 1;
                for d in c + 1..n {
                    match abc + e(a, d) + e(b, d) + e(c, d) {
                        6 => t4 += 1,
                        5 => t4p += 1,
                        _ => {}
                    }
                }
            }
        }
    }
    CensusRecord {
        n: n as u128,
        m: g.m() as u128,
        t3: by3[3],
        t3p: by3[2],
        t3pp: by3[1],
        i3: by3[0],
        t4,
        t4p,
    }
}

pub fn vertex_triangles(g: &Graph) -> VertexTriangleProfile {
    let t = (0..g.n())
        .into_par_iter()
        .map(|i| g.edges_within(g.row(i)))
        .collect();
    VertexTriangleProfile { t }
}

/// `|N_i ∩ N_j|`.
pub fn codegree(g: &Graph, i: usize, j: usize) -> Result<usize> {
    if i == j {
        return Err(Error::domain("codegree requires distinct vertices"));
    }
    if i >= g.n() || j >= g.n() {
        return Err(Error::domain(format!("vertex out of range for n={}", g.n())));
    }
    Ok(bits::popcount_and(g.row(i), g.row(j)) as usize)
}

/// `Σ_{i~j} d_i d_j` over unordered edges.
pub fn edge_degree_product_sum(g: &Graph) -> Result<u128> {
    let d = g.degrees();
    g.edges().try_fold(0u128, |acc, (i, j)| {
        acc.checked_add(d[i] as u128 * d[j] as u128)
            .ok_or(Error::Overflow("edge degree product sum"))
    })
}

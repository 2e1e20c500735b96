//! Immutable simple graphs backed by fixed-width bitset rows.
//!
//! Vertices are `0..n`. Row `i` holds the neighbourhood `N_i`; rows are
//! stored contiguously with a fixed stride of `ceil(n / 64)` words. A
//! [`Graph`] is never mutated after construction; use [`GraphBuilder`].

use std::fmt;

use crate::bits;
use crate::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
    m: usize,
}

/// Which hypothesis class a graph is known to belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFamily {
    Arbitrary,
    /// The complement is triangle-free, i.e. no three pairwise nonadjacent vertices.
    ComplementTriangleFree,
}

impl GraphFamily {
    /// The most specific family `g` belongs to.
    pub fn classify(g: &Graph) -> Self {
        if g.has_independence_at_most_2() {
            GraphFamily::ComplementTriangleFree
        } else {
            GraphFamily::Arbitrary
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphFamily::Arbitrary => true,
            GraphFamily::ComplementTriangleFree => g.has_independence_at_most_2(),
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            for j in i + 1..n {
                b.add_edge(i, j);
            }
        }
        b.build()
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            b.add_edge(i, (i + 1) % n);
        }
        b.build()
    }

    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for i in 1..n {
            b.add_edge(i - 1, i);
        }
        b.build()
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut b = GraphBuilder::new(leaves + 1);
        for i in 1..=leaves {
            b.add_edge(0, i);
        }
        b.build()
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - (i+5)`.
    pub fn petersen() -> Self {
        let mut b = GraphBuilder::new(10);
        for i in 0..5 {
            b.add_edge(i, (i + 1) % 5);
            b.add_edge(5 + i, 5 + (i + 2) % 5);
            b.add_edge(i, i + 5);
        }
        b.build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::domain(format!("edge ({i},{j}) out of range for n={n}")));
            }
            if i == j {
                return Err(Error::domain(format!("loop at vertex {i}")));
            }
            b.add_edge(i, j);
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        bits::test(self.row(i), j)
    }

    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        bits::popcount(self.row(i)) as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(i))
    }

    /// Edges `(i, j)` with `i < j`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn is_regular(&self) -> bool {
        let mut d = (0..self.n).map(|i| self.degree(i));
        match d.next() {
            None => true,
            Some(first) => d.all(|x| x == first),
        }
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for i in 0..self.n {
            let src = self.row(i);
            let dst = b.row_mut(i);
            for (d, s) in dst.iter_mut().zip(src) {
                *d = !s;
            }
            mask_tail(dst, self.n);
            bits::clear(dst, i);
        }
        b.build()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(i, j)| bits::is_disjoint(self.row(i), self.row(j)))
    }

    /// True iff no three vertices are pairwise nonadjacent.
    ///
    /// Checked directly: for every nonadjacent pair `{i, j}` the closed
    /// neighbourhoods must cover the whole vertex set.
    pub fn has_independence_at_most_2(&self) -> bool {
        let mut cover = vec![0u64; self.stride];
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(i, j) {
                    continue;
                }
                for ((c, a), b) in cover.iter_mut().zip(self.row(i)).zip(self.row(j)) {
                    *c = a | b;
                }
                bits::set(&mut cover, i);
                bits::set(&mut cover, j);
                if (bits::popcount(&cover) as usize) < self.n {
                    return false;
                }
            }
        }
        true
    }

    /// Relabel vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut b = GraphBuilder::new(self.n);
        for (i, j) in self.edges() {
            b.add_edge(perm[i], perm[j]);
        }
        b.build()
    }

    /// Subgraph induced on `keep` (in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (c, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(a, c);
                }
            }
        }
        b.build()
    }

    /// Edge count of the subgraph induced on the vertex set `set` (a row-shaped bitset).
    pub fn edges_within(&self, set: &[u64]) -> u64 {
        let twice: u64 = bits::ones(set).map(|k| bits::popcount_and(self.row(k), set) as u64).sum();
        twice / 2
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            n: self.n,
            stride: self.stride,
            rows: self.rows.clone(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, g6={})", self.n, self.m, crate::graph6::to_graph6(self))
    }
}

fn mask_tail(row: &mut [u64], n: usize) {
    let rem = n & 63;
    if rem != 0 {
        if let Some(last) = row.last_mut() {
            *last &= (1u64 << rem) - 1;
        }
    }
}

/// Mutable adjacency rows; the only way to produce a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "graph order {n} exceeds {MAX_ORDER}");
        let stride = bits::words_for(n);
        GraphBuilder {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.rows[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        bits::test(self.row(i), j)
    }

    /// Panics on loops or out-of-range vertices.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "loops are not allowed");
        assert!(i < self.n && j < self.n, "vertex out of range");
        bits::set(self.row_mut(i), j);
        bits::set(self.row_mut(j), i);
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n, "vertex out of range");
        bits::clear(self.row_mut(i), j);
        bits::clear(self.row_mut(j), i);
    }

    pub fn build(self) -> Graph {
        let twice: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        Graph {
            n: self.n,
            stride: self.stride,
            rows: self.rows,
            m: twice / 2,
        }
    }
}

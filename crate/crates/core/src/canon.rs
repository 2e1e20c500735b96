//! Canonical forms for graphs of order at most 16.
//!
//! A search tree in the individualization-refinement style: each node is an
//! ordered partition refined to be equitable (cells split by neighbour counts,
//! sub-cells ordered by count, so the first split is the degree partition);
//! the first non-singleton cell is the target and each of its vertices is
//! individualized in turn. Every leaf is a discrete partition, i.e. a
//! relabeling. The canonical form is the lexicographically smallest graph6
//! string among leaf relabelings. Because refinement and target choice are
//! label-independent, the set of leaves is an isomorphism invariant.
//! Siblings that are images of an explored sibling under an automorphism
//! fixing the current path are skipped; automorphisms are collected whenever
//! two leaves produce the same string.

use std::cmp::Ordering;

use crate::graph6;
use crate::{Error, Graph, GraphBuilder, Result};

pub const CANON_MAX_ORDER: usize = 16;

const MAX_STORED_AUTOMORPHISMS: usize = 256;

/// Adjacency of a graph on at most 16 vertices, one `u16` row per vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    pub n: u8,
    pub adj: [u16; CANON_MAX_ORDER],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= CANON_MAX_ORDER);
        SmallGraph {
            n: n as u8,
            adj: [0; CANON_MAX_ORDER],
        }
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        if g.n() > CANON_MAX_ORDER {
            return Err(Error::capability(format!(
                "canonical form supports n <= {CANON_MAX_ORDER}, got n = {}",
                g.n()
            )));
        }
        let mut s = SmallGraph::empty(g.n());
        for (i, j) in g.edges() {
            s.add_edge(i, j);
        }
        Ok(s)
    }

    pub fn to_graph(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n as usize);
        for i in 0..self.n as usize {
            for j in ones(self.adj[i]).filter(|&j| j > i) {
                b.add_edge(i, j);
            }
        }
        b.build()
    }

    #[inline]
    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    #[inline]
    pub fn degree(&self, i: usize) -> u32 {
        self.adj[i].count_ones()
    }

    #[inline]
    fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    /// Graph with vertex `lab[p]` moved to position `p`.
    pub fn relabeled(&self, lab: &[u8]) -> SmallGraph {
        let n = self.n as usize;
        let mut pos = [0u8; CANON_MAX_ORDER];
        for (p, &v) in lab.iter().enumerate().take(n) {
            pos[v as usize] = p as u8;
        }
        let mut out = SmallGraph::empty(n);
        for (p, &v) in lab.iter().enumerate().take(n) {
            let mut row = 0u16;
            for u in ones(self.adj[v as usize]) {
                row |= 1 << pos[u];
            }
            out.adj[p] = row;
        }
        out
    }

    /// Upper triangle in graph6 column order, first pair in the highest bit.
    pub fn key(&self) -> u128 {
        let n = self.n as usize;
        let mut k = 0u128;
        for j in 1..n {
            let col = self.adj[j] as u128 & ((1u128 << j) - 1);
            // bits (0,j),(1,j),...,(j-1,j) in that order
            let rev = col.reverse_bits() >> (128 - j);
            k = (k << j) | rev;
        }
        k
    }

    /// Graph with vertex `v` removed; later vertices shift down by one.
    pub fn delete_vertex(&self, v: usize) -> SmallGraph {
        let n = self.n as usize;
        let mut out = SmallGraph::empty(n - 1);
        let low = (1u16 << v) - 1;
        let mut p = 0;
        for u in (0..n).filter(|&u| u != v) {
            let row = self.adj[u];
            out.adj[p] = (row & low) | ((row >> 1) & !low);
            p += 1;
        }
        out
    }

    pub fn graph6(&self) -> String {
        graph6::to_graph6(&self.to_graph())
    }
}

#[inline]
fn ones(mut x: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let t = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(t)
        }
    })
}

/// Canonical representative of an isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub graph6: String,
    /// Upper-triangle bits of the canonical relabeling; compares like `graph6` for equal `n`.
    pub key: u128,
    pub n: usize,
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.key).cmp(&(other.n, other.key))
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let s = SmallGraph::from_graph(g)?;
    let (canon, _) = canonical_labeling(&s);
    Ok(CanonicalForm {
        graph6: canon.graph6(),
        key: canon.key(),
        n: g.n(),
    })
}

/// Canonical relabeling of `g` and the labeling used: `lab[p]` is the
/// original vertex placed at position `p`.
pub fn canonical_labeling(g: &SmallGraph) -> (SmallGraph, [u8; CANON_MAX_ORDER]) {
    let n = g.n as usize;
    let mut search = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    if n == 0 {
        return (*g, [0; CANON_MAX_ORDER]);
    }
    let mut path = Vec::with_capacity(n);
    search.descend(vec![g.all()], &mut path);
    let (_, lab) = search.best.expect("search visits at least one leaf");
    (g.relabeled(&lab[..n]), lab)
}

struct Search<'a> {
    g: &'a SmallGraph,
    first: Option<(u128, [u8; CANON_MAX_ORDER])>,
    best: Option<(u128, [u8; CANON_MAX_ORDER])>,
    autos: Vec<[u8; CANON_MAX_ORDER]>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<u16>, path: &mut Vec<u8>) {
        refine(self.g, &mut cells, path.last().map(|&v| 1u16 << v));
        let n = self.g.n as usize;
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let ti = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete partition");
        let target = cells[ti];
        let mut explored = 0u16;
        for v in ones(target) {
            if explored != 0 && self.equivalent_to_explored(v, explored, path) {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            path.push(v as u8);
            self.descend(child, path);
            path.pop();
        }
    }

    fn leaf(&mut self, cells: &[u16]) {
        let mut lab = [0u8; CANON_MAX_ORDER];
        for (p, c) in cells.iter().enumerate() {
            lab[p] = c.trailing_zeros() as u8;
        }
        let key = self.g.relabeled(&lab[..cells.len()]).key();
        let Some((first_key, first_lab)) = self.first else {
            self.first = Some((key, lab));
            self.best = Some((key, lab));
            return;
        };
        let (best_key, best_lab) = self.best.expect("best set with first");
        if key == first_key {
            self.record_automorphism(&first_lab, &lab, cells.len());
        } else if key == best_key {
            self.record_automorphism(&best_lab, &lab, cells.len());
        } else if key < best_key {
            self.best = Some((key, lab));
        }
    }

    fn record_automorphism(&mut self, from: &[u8; CANON_MAX_ORDER], to: &[u8; CANON_MAX_ORDER], n: usize) {
        if self.autos.len() >= MAX_STORED_AUTOMORPHISMS {
            return;
        }
        let mut a = [0u8; CANON_MAX_ORDER];
        for v in 0..CANON_MAX_ORDER {
            a[v] = v as u8;
        }
        for p in 0..n {
            a[from[p] as usize] = to[p];
        }
        if !self.autos.contains(&a) {
            self.autos.push(a);
        }
    }

    /// Is `v` in the orbit of an explored vertex under the automorphisms found
    /// so far that fix `path` pointwise?
    fn equivalent_to_explored(&self, v: usize, explored: u16, path: &[u8]) -> bool {
        let mut parent: [u8; CANON_MAX_ORDER] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; CANON_MAX_ORDER], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if path.iter().any(|&p| a[p as usize] != p) {
                continue;
            }
            any = true;
            for x in 0..self.g.n as usize {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x] as usize));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        ones(explored).any(|u| find(&mut parent, u) == rv)
    }
}

/// Refine `cells` to the coarsest equitable partition finer than it.
/// Splitting uses `seed` (the last individualized cell) first when given,
/// otherwise every cell.
fn refine(g: &SmallGraph, cells: &mut Vec<u16>, seed: Option<u16>) {
    let mut queue: Vec<u16> = match seed {
        Some(s) => vec![s],
        None => cells.iter().rev().copied().collect(),
    };
    let n = g.n as usize;
    while let Some(w) = queue.pop() {
        if cells.len() == n {
            return;
        }
        let mut xi = 0;
        while xi < cells.len() {
            let x = cells[xi];
            if x.count_ones() < 2 {
                xi += 1;
                continue;
            }
            let mut buckets = [0u16; CANON_MAX_ORDER + 1];
            let mut lo = usize::MAX;
            let mut hi = 0;
            for v in ones(x) {
                let c = (g.adj[v] & w).count_ones() as usize;
                buckets[c] |= 1 << v;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                xi += 1;
                continue;
            }
            let parts: Vec<u16> = buckets[lo..=hi].iter().copied().filter(|&b| b != 0).collect();
            let k = parts.len();
            cells.splice(xi..=xi, parts.iter().copied());
            queue.extend(parts.iter().rev());
            xi += k;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_gnp, rng_from_seed};
    use rand::seq::SliceRandom;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng_from_seed(seed));
        g.relabel(&perm)
    }

    #[test]
    fn key_matches_graph6_order() {
        let g = Graph::cycle(5);
        let s = SmallGraph::from_graph(&g).unwrap();
        // Dhc -> 101001 1001(00)
        assert_eq!(s.key(), 0b1010011001);
        assert_eq!(s.graph6(), "Dhc");
    }

    #[test]
    fn c5_every_labeling() {
        let reference = canonical_form(&Graph::cycle(5)).unwrap();
        let mut perm: Vec<usize> = (0..5).collect();
        let mut count = 0;
        permute_all(&mut perm, 0, &mut |p| {
            let f = canonical_form(&Graph::cycle(5).relabel(p)).unwrap();
            assert_eq!(f, reference);
            count += 1;
        });
        assert_eq!(count, 120);
    }

    fn permute_all(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute_all(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn relabelings_agree() {
        for seed in 0..40 {
            let g = random_gnp(9, seed, 0.45);
            let a = canonical_form(&shuffled(&g, 1000 + seed)).unwrap();
            let b = canonical_form(&shuffled(&g, 2000 + seed)).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, canonical_form(&g).unwrap());
        }
    }

    #[test]
    fn canonical_graph_is_isomorphic_copy() {
        let g = Graph::petersen();
        let f = canonical_form(&g).unwrap();
        let h = graph6::from_graph6(&f.graph6).unwrap();
        assert_eq!(h.m(), 15);
        assert_eq!(canonical_form(&h).unwrap(), f);
    }

    #[test]
    fn distinguishes_k4_and_k4_minus_edge() {
        let k4 = canonical_form(&Graph::complete(4)).unwrap();
        let k4e = canonical_form(&Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()).unwrap();
        assert_ne!(k4, k4e);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        for n in [0, 1, 11, 16] {
            let e = canonical_form(&Graph::empty(n)).unwrap();
            assert_eq!(e.key, 0);
            let k = canonical_form(&Graph::complete(n)).unwrap();
            assert_eq!(k.graph6, graph6::to_graph6(&Graph::complete(n)));
        }
        // 4 disjoint K4s and the 4x4 rook's graph
        let mut b = GraphBuilder::new(16);
        for i in 0..16 {
            for j in i + 1..16 {
                if i / 4 == j / 4 {
                    b.add_edge(i, j);
                }
            }
        }
        let g = b.build();
        assert_eq!(canonical_form(&shuffled(&g, 3)).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn rejects_large_orders() {
        assert!(matches!(canonical_form(&Graph::empty(17)), Err(Error::Capability(_))));
    }

    #[test]
    fn delete_vertex_shifts() {
        let s = SmallGraph::from_graph(&Graph::path(4)).unwrap();
        let d = s.delete_vertex(1);
        assert_eq!(d.to_graph(), Graph::from_edges(3, &[(1, 2)]).unwrap());
    }
}

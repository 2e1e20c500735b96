//! Isomorphism-free generation of triangle-free graphs by canonical
//! augmentation.
//!
//! A graph of order `k` is grown from a canonical graph `P` of order `k - 1`
//! by adding a vertex whose neighbourhood `S` is an independent set of `P`
//! (so no triangle appears) and whose degree is minimum in the child. The
//! child `C` is kept only if its canonical deletion vertex (the minimum-degree
//! vertex occupying the last such position in `C`'s canonical labeling)
//! leaves a graph isomorphic to `P`. Each class therefore has exactly one
//! parent class; duplicates from the same parent are merged locally.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, SmallGraph};
use crate::{Error, Graph, Result};

pub const ENUMERATION_MAX_ORDER: usize = 11;

fn check_order(n: usize) -> Result<()> {
    if n > ENUMERATION_MAX_ORDER {
        return Err(Error::capability(format!(
            "triangle-free enumeration supports n <= {ENUMERATION_MAX_ORDER}, got n = {n}"
        )));
    }
    Ok(())
}

/// One canonical representative per isomorphism class of triangle-free
/// graphs of order `n`, sorted by canonical key.
pub fn triangle_free_classes(n: usize) -> Result<Vec<SmallGraph>> {
    check_order(n)?;
    let mut level = vec![SmallGraph::empty(0)];
    for _ in 1..=n {
        level = next_level(&level);
    }
    Ok(level)
}

/// Class counts for every order `0..=n`.
pub fn class_counts(n: usize) -> Result<Vec<usize>> {
    check_order(n)?;
    let mut counts = vec![1];
    let mut level = vec![SmallGraph::empty(0)];
    for _ in 1..=n {
        level = next_level(&level);
        counts.push(level.len());
    }
    Ok(counts)
}

/// Stream of triangle-free graphs of order `n`, one per isomorphism class,
/// each in canonical labeling.
pub fn enumerate_triangle_free(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(triangle_free_classes(n)?.into_iter().map(|s| s.to_graph()))
}

fn next_level(parents: &[SmallGraph]) -> Vec<SmallGraph> {
    let mut out: Vec<SmallGraph> = parents.par_iter().flat_map_iter(children).collect();
    out.sort_unstable_by_key(|s| s.key());
    out
}

fn sorted_degrees(g: &SmallGraph) -> Vec<u32> {
    let mut d: Vec<u32> = (0..g.n as usize).map(|i| g.degree(i)).collect();
    d.sort_unstable();
    d
}

fn children(parent: &SmallGraph) -> Vec<SmallGraph> {
    let k = parent.n as usize;
    let degs: Vec<u32> = (0..k).map(|i| parent.degree(i)).collect();
    let min_deg = degs.iter().copied().min().unwrap_or(0);
    let parent_key = parent.key();
    let parent_degs = sorted_degrees(parent);

    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut sets = Vec::new();
    independent_sets(parent, 0, 0, 0, min_deg as usize + 1, &mut sets);

    for s in sets {
        let size = s.count_ones();
        // new vertex must have minimum degree in the child
        let ok = (0..k).all(|u| degs[u] + (s >> u & 1) as u32 >= size);
        if !ok {
            continue;
        }
        let mut child = *parent;
        child.n = k as u8 + 1;
        child.adj[k] = s;
        for u in (0..k).filter(|&u| s >> u & 1 == 1) {
            child.adj[u] |= 1 << k;
        }

        let (canon, lab) = canonical_labeling(&child);
        let del = (0..=k)
            .rev()
            .map(|p| lab[p] as usize)
            .find(|&v| child.degree(v) == size)
            .expect("new vertex has minimum degree");
        let accept = del == k || {
            let reduced = child.delete_vertex(del);
            sorted_degrees(&reduced) == parent_degs && canonical_labeling(&reduced).0.key() == parent_key
        };
        if accept && seen.insert(canon.key()) {
            out.push(canon);
        }
    }
    out
}

/// All independent sets of `g` drawn from vertices `>= from`, extending
/// `current`, with at most `limit` vertices.
fn independent_sets(g: &SmallGraph, from: usize, current: u16, blocked: u16, limit: usize, out: &mut Vec<u16>) {
    out.push(current);
    if current.count_ones() as usize == limit {
        return;
    }
    for v in from..g.n as usize {
        if blocked >> v & 1 == 1 {
            continue;
        }
        independent_sets(g, v + 1, current | 1 << v, blocked | g.adj[v], limit, out);
    }
}

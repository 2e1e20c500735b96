//! Minimising the 4-clique count over graphs with triangle-free complement.
//!
//! - [`f_exact`]: exhaustive over isomorphism classes (complements of the
//!   enumerated triangle-free graphs).
//! - [`local_search_min_t4`]: seeded heuristic upper bounds for larger orders.
//! - [`blowup_optimize`]: best part sizes for a 5-cycle blow-up of order `n`.

use std::time::Instant;

use num_rational::Ratio;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits;
use crate::canon::{canonical_form, CANON_MAX_ORDER};
use crate::census::census;
use crate::constructions::{blowup_t4_closed_form, c5_blowup, BlowupSpec};
use crate::enumerate::{triangle_free_classes, ENUMERATION_MAX_ORDER};
use crate::graph6::to_graph6;
use crate::json::{dec, dec_opt};
use crate::random::{random_complement_triangle_free, rng_from_seed};
use crate::{Error, Graph, GraphBuilder, Result};

pub const WITNESS_CAP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    #[serde(serialize_with = "dec")]
    pub n: usize,
    #[serde(serialize_with = "dec")]
    pub f_value: u128,
    pub exhaustive: bool,
    /// graph6 strings, canonical when `n <= 16`, sorted and deduplicated.
    pub witnesses: Vec<String>,
    #[serde(serialize_with = "dec")]
    pub graphs_examined: u64,
    /// Wall time; omitted from JSON when cleared for reproducible output.
    #[serde(serialize_with = "dec_opt", skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl SearchResult {
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// Canonical graph6 when canonical forms are available, else the labeled graph6.
fn witness_string(g: &Graph) -> String {
    if g.n() <= CANON_MAX_ORDER {
        canonical_form(g).expect("order checked").graph6
    } else {
        to_graph6(g)
    }
}

/// `f(n)`: the minimum number of 4-cliques over all graphs of order `n`
/// whose complement is triangle-free, with up to [`WITNESS_CAP`] witnesses.
pub fn f_exact(n: usize) -> Result<SearchResult> {
    if n > ENUMERATION_MAX_ORDER {
        return Err(Error::capability(format!(
            "exhaustive search supports n <= {ENUMERATION_MAX_ORDER}, got n = {n}"
        )));
    }
    let start = Instant::now();
    let classes = triangle_free_classes(n)?;
    let scored: Vec<(u128, Graph)> = classes
        .par_iter()
        .map(|h| {
            let g = h.to_graph().complement();
            census(&g).map(|c| (c.t4, g))
        })
        .collect::<Result<_>>()?;
    let f_value = scored.iter().map(|(t, _)| *t).min().expect("at least one class");
    let mut witnesses: Vec<String> = scored
        .par_iter()
        .filter(|(t, _)| *t == f_value)
        .map(|(_, g)| witness_string(g))
        .collect();
    witnesses.sort();
    witnesses.dedup();
    witnesses.truncate(WITNESS_CAP);
    Ok(SearchResult {
        n,
        f_value,
        exhaustive: true,
        witnesses,
        graphs_examined: classes.len() as u64,
        elapsed_ms: Some(start.elapsed().as_millis()),
    })
}

fn mix_seed(seed: u64, stream: u64) -> u64 {
    seed ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn builder_edges_within(g: &GraphBuilder, set: &[u64]) -> u128 {
    let twice: u64 = bits::ones(set).map(|k| bits::popcount_and(g.row(k), set) as u64).sum();
    (twice / 2) as u128
}

struct RunOutcome {
    t4: u128,
    graph: Graph,
    steps: u64,
}

/// Moves act on the complement `H` (kept triangle-free): a uniformly random
/// pair `{u, v}` is either a non-edge of `H` (add it unless it closes a
/// triangle) or an edge of `H` (remove it). A move is accepted when it does
/// not increase the 4-clique count of the graph itself.
fn descend(start: &Graph, seed: u64, step_budget: u64) -> Result<RunOutcome> {
    let n = start.n();
    let mut g = start.to_builder();
    let mut t4 = census(start)?.t4;
    let mut best_t4 = t4;
    let mut best = start.clone();
    if n < 2 {
        return Ok(RunOutcome {
            t4,
            graph: best,
            steps: 0,
        });
    }
    let stride = bits::words_for(n);
    let mut common = vec![0u64; stride];
    let mut rng = rng_from_seed(seed);
    for _ in 0..step_budget {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        bits::and_into(&mut common, g.row(u), g.row(v));
        let inside = builder_edges_within(&g, &common);
        if g.has_edge(u, v) {
            // adding {u,v} to H closes a triangle iff some w is adjacent in G to neither
            let covered: u32 = g
                .row(u)
                .iter()
                .zip(g.row(v))
                .map(|(a, b)| (a | b).count_ones())
                .sum();
            if covered as usize == n {
                g.remove_edge(u, v);
                t4 -= inside;
            }
        } else if inside == 0 {
            g.add_edge(u, v);
        }
        if t4 < best_t4 {
            best_t4 = t4;
            best = g.clone().build();
        }
    }
    Ok(RunOutcome {
        t4: best_t4,
        graph: best,
        steps: step_budget,
    })
}

/// Seeded local search. Run 0 starts from the near-balanced 5-cycle blow-up,
/// runs `1..=restarts` from random complement-triangle-free graphs. The best
/// run wins by 4-clique count, then by smaller witness string.
pub fn local_search_min_t4(n: usize, seed: u64, step_budget: u64, restarts: u64) -> Result<SearchResult> {
    if n == 0 {
        return Err(Error::domain("local search needs n >= 1"));
    }
    let start = Instant::now();
    let starts: Vec<Graph> = std::iter::once(c5_blowup(&BlowupSpec::near_balanced(n as u64)))
        .chain((0..restarts).map(|r| random_complement_triangle_free(n, mix_seed(seed, 2 * r), Ratio::new(1, 2))))
        .collect();
    let runs: Vec<(RunOutcome, String)> = starts
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let out = descend(g, mix_seed(seed, 2 * k as u64 + 1), step_budget)?;
            let w = witness_string(&out.graph);
            Ok((out, w))
        })
        .collect::<Result<_>>()?;

    let examined = runs.iter().map(|(r, _)| r.steps + 1).sum();
    let (best, witness) = runs
        .into_iter()
        .min_by(|a, b| (a.0.t4, &a.1).cmp(&(b.0.t4, &b.1)))
        .expect("at least one run");
    debug_assert!(best.graph.has_independence_at_most_2());
    Ok(SearchResult {
        n,
        f_value: best.t4,
        exhaustive: false,
        witnesses: vec![witness],
        graphs_examined: examined,
        elapsed_ms: Some(start.elapsed().as_millis()),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlowupOptimum {
    pub spec: BlowupSpec,
    #[serde(serialize_with = "dec")]
    pub n: u64,
    #[serde(serialize_with = "dec")]
    pub t4: u128,
}

/// Minimise the blow-up 4-clique count over compositions of `n` into five
/// parts; ties go to the lexicographically smallest parts. For `n >= 5` every
/// part is at least 1, so each vertex of the 5-cycle is actually blown up.
/// Cost grows like `n⁴`.
pub fn blowup_optimize(n: u64) -> (BlowupSpec, u128) {
    let lo = if n >= 5 { 1 } else { 0 };
    let best = (lo..=n - 4 * lo)
        .into_par_iter()
        .map(|a| {
            let mut best: Option<(u128, [u64; 5])> = None;
            for b in lo..=n - a - 3 * lo {
                for c in lo..=n - a - b - 2 * lo {
                    for d in lo..=n - a - b - c - lo {
                        let parts = [a, b, c, d, n - a - b - c - d];
                        let t = blowup_t4_closed_form(&BlowupSpec::new(parts));
                        if best.is_none_or(|(bt, _)| t < bt) {
                            best = Some((t, parts));
                        }
                    }
                }
            }
            best.expect("nonempty range")
        })
        .min()
        .expect("nonempty range");
    (BlowupSpec::new(best.1), best.0)
}

pub fn blowup_optimum(n: u64) -> BlowupOptimum {
    let (spec, t4) = blowup_optimize(n);
    BlowupOptimum { spec, n, t4 }
}

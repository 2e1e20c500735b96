//! Lexicographic blow-ups of the 5-cycle.
//!
//! Every pentagon vertex `k` becomes a clique ("block") of `parts[k]`
//! vertices; blocks of consecutive pentagon vertices are completely joined.
//! Vertices are numbered block-major. Because the pentagon is triangle-free,
//! every clique of the blow-up lives inside two consecutive blocks, which
//! gives the closed form used by [`blowup_t4_closed_form`].

use serde::Serialize;

use crate::census::binomial;
use crate::json::{dec, dec_vec};
use crate::{Error, Graph, GraphBuilder, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlowupSpec {
    #[serde(serialize_with = "dec_vec")]
    pub parts: [u64; 5],
}

impl BlowupSpec {
    pub fn new(parts: [u64; 5]) -> Self {
        BlowupSpec { parts }
    }

    /// `C5[K_p]`.
    pub fn balanced(p: u64) -> Self {
        BlowupSpec { parts: [p; 5] }
    }

    /// Parts differing by at most one, larger parts first.
    pub fn near_balanced(n: u64) -> Self {
        let (q, r) = (n / 5, n % 5);
        let mut parts = [q; 5];
        for p in parts.iter_mut().take(r as usize) {
            *p += 1;
        }
        BlowupSpec { parts }
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Parse `p1,p2,p3,p4,p5`.
    pub fn parse(text: &str) -> Result<Self> {
        let fields: Vec<&str> = text.split(',').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(Error::domain(format!(
                "expected exactly 5 comma-separated parts, got {}",
                fields.len()
            )));
        }
        let mut parts = [0u64; 5];
        for (slot, f) in parts.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| Error::domain(format!("part '{f}' is not a nonnegative integer")))?;
        }
        Ok(BlowupSpec { parts })
    }

    /// The ten images of these part sizes under the pentagon's dihedral group.
    pub fn dihedral_images(&self) -> [BlowupSpec; 10] {
        let p = self.parts;
        let mut out = [*self; 10];
        for r in 0..5 {
            out[r].parts = std::array::from_fn(|k| p[(k + r) % 5]);
            out[5 + r].parts = std::array::from_fn(|k| p[(5 + r - k) % 5]);
        }
        out
    }

    /// Index of the first vertex of every block, plus the total.
    fn offsets(&self) -> [usize; 6] {
        let mut off = [0usize; 6];
        for k in 0..5 {
            off[k + 1] = off[k] + self.parts[k] as usize;
        }
        off
    }

    /// Degree of any vertex in block `k`.
    pub fn block_degree(&self, k: usize) -> u64 {
        let p = &self.parts;
        (p[k] + p[(k + 4) % 5] + p[(k + 1) % 5]).saturating_sub(1)
    }
}

pub fn c5_blowup(spec: &BlowupSpec) -> Graph {
    let off = spec.offsets();
    let mut b = GraphBuilder::new(off[5]);
    for k in 0..5 {
        let next = (k + 1) % 5;
        for u in off[k]..off[k + 1] {
            for v in u + 1..off[k + 1] {
                b.add_edge(u, v);
            }
            for v in off[next]..off[next + 1] {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// `Σ_k C(p_k + p_{k+1}, 4) - Σ_k C(p_k, 4)` (indices mod 5): K4s inside a
/// single block are seen by both adjacent block pairs.
pub fn blowup_t4_closed_form(spec: &BlowupSpec) -> u128 {
    let p = spec.parts.map(|x| x as u128);
    let pairs: u128 = (0..5).map(|k| binomial(p[k] + p[(k + 1) % 5], 4)).sum();
    let singles: u128 = p.iter().map(|&x| binomial(x, 4)).sum();
    pairs - singles
}

/// `g[K_p]` with cliques as fibres: `(i,x) ~ (j,y)` iff `i ~ j`, or `i = j` and `x != y`.
/// Vertex `(i, x)` gets index `i·p + x`.
pub fn lex_product_with_clique(g: &Graph, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(Error::domain("clique order p must be at least 1"));
    }
    let n = g.n();
    let mut b = GraphBuilder::new(n * p);
    for i in 0..n {
        for x in 0..p {
            for y in x + 1..p {
                b.add_edge(i * p + x, i * p + y);
            }
        }
    }
    for (i, j) in g.edges() {
        for x in 0..p {
            for y in 0..p {
                b.add_edge(i * p + x, j * p + y);
            }
        }
    }
    Ok(b.build())
}

/// JSON block emitted next to a constructed graph.
#[derive(Debug, Clone, Serialize)]
pub struct ConstructionReport {
    #[serde(serialize_with = "dec_vec")]
    pub parts: [u64; 5],
    #[serde(serialize_with = "dec")]
    pub n: u64,
    #[serde(serialize_with = "dec")]
    pub t4_closed_form: u128,
}

impl ConstructionReport {
    pub fn new(spec: &BlowupSpec) -> Self {
        ConstructionReport {
            parts: spec.parts,
            n: spec.n(),
            t4_closed_form: blowup_t4_closed_form(spec),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::census;

    #[test]
    fn unit_blowup_is_c5() {
        assert_eq!(c5_blowup(&BlowupSpec::balanced(1)), Graph::cycle(5));
        assert_eq!(blowup_t4_closed_form(&BlowupSpec::balanced(1)), 0);
    }

    #[test]
    fn degenerate_blowup_is_complete() {
        let g = c5_blowup(&BlowupSpec::new([0, 0, 0, 0, 6]));
        assert_eq!(g, Graph::complete(6));
        assert_eq!(blowup_t4_closed_form(&BlowupSpec::new([0, 0, 0, 0, 6])), 15);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(blowup_t4_closed_form(&BlowupSpec::balanced(2)), 5);
        assert_eq!(blowup_t4_closed_form(&BlowupSpec::new([3, 2, 2, 2, 2])), 13);
        let g = c5_blowup(&BlowupSpec::new([3, 2, 2, 2, 2]));
        assert_eq!(census(&g).unwrap().t4, 13);
    }

    #[test]
    fn degrees_follow_blocks() {
        let spec = BlowupSpec::new([3, 1, 4, 0, 2]);
        let g = c5_blowup(&spec);
        let off = spec.offsets();
        for k in 0..5 {
            for v in off[k]..off[k + 1] {
                assert_eq!(g.degree(v) as u64, spec.block_degree(k));
            }
        }
    }

    #[test]
    fn lex_product() {
        assert_eq!(lex_product_with_clique(&Graph::cycle(5), 1).unwrap(), Graph::cycle(5));
        assert_eq!(lex_product_with_clique(&Graph::empty(1), 4).unwrap(), Graph::complete(4));
        assert_eq!(
            lex_product_with_clique(&Graph::cycle(5), 2).unwrap(),
            c5_blowup(&BlowupSpec::balanced(2))
        );
        assert!(matches!(lex_product_with_clique(&Graph::cycle(5), 0), Err(Error::Domain(_))));
    }

    #[test]
    fn parse_parts() {
        assert_eq!(BlowupSpec::parse("2,2,2,2,2").unwrap(), BlowupSpec::balanced(2));
        assert!(BlowupSpec::parse("1,2,3").is_err());
        assert!(BlowupSpec::parse("1,2,3,4,x").is_err());
    }

    #[test]
    fn dihedral() {
        let s = BlowupSpec::new([1, 2, 3, 4, 5]);
        let imgs = s.dihedral_images();
        assert_eq!(imgs[1].parts, [2, 3, 4, 5, 1]);
        assert_eq!(imgs[5].parts, [1, 5, 4, 3, 2]);
        for im in imgs {
            assert_eq!(blowup_t4_closed_form(&im), blowup_t4_closed_form(&s));
        }
    }
}

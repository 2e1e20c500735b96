//! Instance-level verifiers for the counting identities and inequalities
//! behind the 4-clique lower bound.
//!
//! Each verifier evaluates both sides exactly and returns an
//! [`IdentityCertificate`]. Verifiers never refuse an input that violates
//! their hypothesis; they record `hypothesis_satisfied = false` and still
//! evaluate, which is how the necessity of the hypothesis is exercised.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::census::{census, vertex_triangles, CensusRecord};
use crate::json::{dec, rational};
use crate::{bits, Error, Graph, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    /// `Σ_{i~j} d_i d_j ≥ 4m³/n²`
    #[serde(rename = "LE00")]
    Le00,
    /// `6 t3 = n³ - 3n² + 2n + Σ (3d² - 3nd + 3d)`
    #[serde(rename = "LE0")]
    Le0,
    /// `2 t3 + t3' = (n-2) m - C(n,3)`
    #[serde(rename = "EQ1")]
    Eq1,
    /// `8 t4 + 2 t4' = Σ (d_i - 2) t_i - Σ C(d_i, 3)`
    #[serde(rename = "EQ2")]
    Eq2,
    /// `t4' ≤ Σ_{i≁j} C(|N_i ∩ N_j|, 2)`
    #[serde(rename = "LE3")]
    Le3,
    /// `|N_i ∩ N_j| = d_i + d_j - n + 2` for every nonadjacent pair
    #[serde(rename = "LE4")]
    Le4,
    /// `Σ d_i t_i = Σ_{i~j} d_i d_j - ½ Σ d_i² - ½ Σ_{i≁j} (d_i + d_j)|N_i ∩ N_j|`
    #[serde(rename = "LE5")]
    Le5,
    /// Lower bound on `8 t4` in terms of degrees and `t3`.
    #[serde(rename = "EQ3")]
    Eq3,
    /// Lower bound on `8 t4` in terms of degrees, `m` and `n` only.
    #[serde(rename = "FINAL_EXACT")]
    FinalExact,
    /// `Σ_{i~j} d_i d_j - 3 Σ_{i≁j} d_i d_j = 4 Σ_{i~j} d_i d_j - 6m² + 3/2 Σ d_i²`
    #[serde(rename = "EDGE_NONEDGE")]
    EdgeNonedge,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::Le00,
        IdentityId::Le0,
        IdentityId::Eq1,
        IdentityId::Eq2,
        IdentityId::Le3,
        IdentityId::Le4,
        IdentityId::Le5,
        IdentityId::Eq3,
        IdentityId::FinalExact,
        IdentityId::EdgeNonedge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Le00 => "LE00",
            IdentityId::Le0 => "LE0",
            IdentityId::Eq1 => "EQ1",
            IdentityId::Eq2 => "EQ2",
            IdentityId::Le3 => "LE3",
            IdentityId::Le4 => "LE4",
            IdentityId::Le5 => "LE5",
            IdentityId::Eq3 => "EQ3",
            IdentityId::FinalExact => "FINAL_EXACT",
            IdentityId::EdgeNonedge => "EDGE_NONEDGE",
        }
    }

    pub fn hypothesis(self) -> Hypothesis {
        match self {
            IdentityId::Le00 | IdentityId::Le3 | IdentityId::Le5 | IdentityId::EdgeNonedge => Hypothesis::AnyGraph,
            _ => Hypothesis::ComplementTriangleFree,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == norm)
            .ok_or_else(|| Error::domain(format!("unknown identity '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Kind {
    #[serde(rename = "equality")]
    Equality,
    #[serde(rename = "inequality-geq")]
    Geq,
    #[serde(rename = "inequality-leq")]
    Leq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Hypothesis {
    #[serde(rename = "any-graph")]
    AnyGraph,
    #[serde(rename = "complement-triangle-free")]
    ComplementTriangleFree,
}

/// Extra per-identity data carried alongside the two sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Auxiliary {
    /// `t4' = Σ_{i≁j} e(G[N_i ∩ N_j])`, the exact step before the inequality.
    Le3 {
        #[serde(serialize_with = "rational")]
        intermediate: Rational,
        intermediate_holds: bool,
    },
    /// Per-pair view of the codegree equality.
    Le4 {
        #[serde(serialize_with = "dec")]
        pairs_checked: u64,
        #[serde(serialize_with = "dec")]
        violating_pairs: u64,
        #[serde(serialize_with = "dec")]
        max_abs_violation: i128,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCertificate {
    pub identity: IdentityId,
    #[serde(serialize_with = "rational")]
    pub lhs: Rational,
    #[serde(serialize_with = "rational")]
    pub rhs: Rational,
    #[serde(serialize_with = "rational")]
    pub slack: Rational,
    pub kind: Kind,
    pub holds: bool,
    pub hypothesis_required: Hypothesis,
    pub hypothesis_satisfied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub auxiliary: Option<Auxiliary>,
}

impl IdentityCertificate {
    fn new(identity: IdentityId, kind: Kind, lhs: Rational, rhs: Rational, complement_tf: bool) -> Self {
        let slack = &lhs - &rhs;
        let holds = match kind {
            Kind::Equality => slack.is_zero(),
            Kind::Geq => !slack.is_negative(),
            Kind::Leq => !slack.is_positive(),
        };
        let hypothesis_required = identity.hypothesis();
        let hypothesis_satisfied = match hypothesis_required {
            Hypothesis::AnyGraph => true,
            Hypothesis::ComplementTriangleFree => complement_tf,
        };
        IdentityCertificate {
            identity,
            lhs,
            rhs,
            slack,
            kind,
            holds,
            hypothesis_required,
            hypothesis_satisfied,
            auxiliary: None,
        }
    }

    fn with_auxiliary(mut self, aux: Auxiliary) -> Self {
        self.auxiliary = Some(aux);
        self
    }

    /// Every exact check recorded in the certificate passed.
    pub fn all_hold(&self) -> bool {
        let aux_ok = match &self.auxiliary {
            Some(Auxiliary::Le3 { intermediate_holds, .. }) => *intermediate_holds,
            _ => true,
        };
        self.holds && aux_ok
    }

    /// A failed check on an input that satisfies the hypothesis.
    pub fn is_falsification(&self) -> bool {
        self.hypothesis_satisfied && !self.all_hold()
    }
}

fn int(x: i128) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn frac(num: i128, den: i128) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn choose2(x: i128) -> i128 {
    x * (x - 1) / 2
}

fn choose3(x: i128) -> i128 {
    x * (x - 1) * (x - 2) / 6
}

/// Pair-level sums shared by several verifiers.
#[derive(Debug, Default, Clone, Copy)]
struct PairTotals {
    adj_dd: i128,
    /// `Σ_{i~j} [C(|N_i∩N_j|, 2) - e(G[N_i∩N_j])]`: induced `K4 - e` counted by their spine edge.
    spine_t4p: i128,
    non_dd: i128,
    non_codeg: i128,
    non_codeg_formula: i128,
    non_codeg_choose2: i128,
    non_common_edges: i128,
    non_weighted_codeg: i128,
    non_eq3_product: i128,
    le4_pairs: i128,
    le4_violations: i128,
    le4_max_violation: i128,
}

impl PairTotals {
    fn merge(self, o: PairTotals) -> PairTotals {
        PairTotals {
            adj_dd: self.adj_dd + o.adj_dd,
            spine_t4p: self.spine_t4p + o.spine_t4p,
            non_dd: self.non_dd + o.non_dd,
            non_codeg: self.non_codeg + o.non_codeg,
            non_codeg_formula: self.non_codeg_formula + o.non_codeg_formula,
            non_codeg_choose2: self.non_codeg_choose2 + o.non_codeg_choose2,
            non_common_edges: self.non_common_edges + o.non_common_edges,
            non_weighted_codeg: self.non_weighted_codeg + o.non_weighted_codeg,
            non_eq3_product: self.non_eq3_product + o.non_eq3_product,
            le4_pairs: self.le4_pairs + o.le4_pairs,
            le4_violations: self.le4_violations + o.le4_violations,
            le4_max_violation: self.le4_max_violation.max(o.le4_max_violation),
        }
    }
}

/// Everything the verifiers need, computed once per graph.
pub struct GraphSums {
    n: i128,
    m: i128,
    degrees: Vec<i128>,
    census: CensusRecord,
    triangles_at: Vec<i128>,
    pairs: PairTotals,
    complement_tf: bool,
}

impl GraphSums {
    pub fn new(g: &Graph) -> Result<Self> {
        let census = census(g)?;
        let triangles_at = vertex_triangles(g).t.into_iter().map(|x| x as i128).collect();
        let degrees: Vec<i128> = g.degrees().into_iter().map(|d| d as i128).collect();
        let n = g.n() as i128;
        let stride = g.stride();
        let pairs = (0..g.n())
            .into_par_iter()
            .map_init(
                || vec![0u64; stride],
                |buf, i| {
                    let mut s = PairTotals::default();
                    let di = degrees[i];
                    for j in i + 1..g.n() {
                        let dj = degrees[j];
                        bits::and_into(buf, g.row(i), g.row(j));
                        let codeg = bits::popcount(buf) as i128;
                        let inside = g.edges_within(buf) as i128;
                        if g.has_edge(i, j) {
                            s.adj_dd += di * dj;
                            s.spine_t4p += choose2(codeg) - inside;
                        } else {
                            let formula = di + dj - n + 2;
                            s.non_dd += di * dj;
                            s.non_codeg += codeg;
                            s.non_codeg_formula += formula;
                            s.non_codeg_choose2 += choose2(codeg);
                            s.non_common_edges += inside;
                            s.non_weighted_codeg += (di + dj) * codeg;
                            s.non_eq3_product += formula * (3 * di + 3 * dj - 2 * n + 2);
                            s.le4_pairs += 1;
                            let v = (codeg - formula).abs();
                            if v != 0 {
                                s.le4_violations += 1;
                            }
                            s.le4_max_violation = s.le4_max_violation.max(v);
                        }
                    }
                    s
                },
            )
            .reduce(PairTotals::default, PairTotals::merge);
        Ok(GraphSums {
            n,
            m: g.m() as i128,
            degrees,
            census,
            triangles_at,
            pairs,
            complement_tf: census.i3 == 0 && g.has_independence_at_most_2(),
        })
    }

    pub fn census(&self) -> &CensusRecord {
        &self.census
    }

    fn deg_sum<F: Fn(i128) -> i128>(&self, f: F) -> i128 {
        self.degrees.iter().map(|&d| f(d)).sum()
    }

    fn t3(&self) -> i128 {
        self.census.t3 as i128
    }

    pub fn certificate(&self, id: IdentityId) -> Result<IdentityCertificate> {
        let (n, m) = (self.n, self.m);
        let p = &self.pairs;
        let sq = self.deg_sum(|d| d * d);
        let ctf = self.complement_tf;
        let cert = match id {
            IdentityId::Le00 => {
                if n == 0 {
                    return Err(Error::domain("LE00 needs n >= 1"));
                }
                IdentityCertificate::new(id, Kind::Geq, int(p.adj_dd), frac(4 * m * m * m, n * n), ctf)
            }
            IdentityId::Le0 => {
                let rhs = n * n * n - 3 * n * n + 2 * n + self.deg_sum(|d| 3 * d * d - 3 * n * d + 3 * d);
                IdentityCertificate::new(id, Kind::Equality, int(6 * self.t3()), int(rhs), ctf)
            }
            IdentityId::Eq1 => {
                let lhs = 2 * self.t3() + self.census.t3p as i128;
                let rhs = (n - 2) * m - choose3(n);
                IdentityCertificate::new(id, Kind::Equality, int(lhs), int(rhs), ctf)
            }
            IdentityId::Eq2 => {
                let lhs = 8 * self.census.t4 as i128 + 2 * self.census.t4p as i128;
                let weighted: i128 = self
                    .degrees
                    .iter()
                    .zip(&self.triangles_at)
                    .map(|(&d, &t)| (d - 2) * t)
                    .sum();
                let rhs = weighted - self.deg_sum(choose3);
                IdentityCertificate::new(id, Kind::Equality, int(lhs), int(rhs), ctf)
            }
            IdentityId::Le3 => {
                let lhs = int(p.spine_t4p);
                let intermediate = int(p.non_common_edges);
                let intermediate_holds = lhs == intermediate;
                IdentityCertificate::new(id, Kind::Leq, lhs, int(p.non_codeg_choose2), ctf).with_auxiliary(
                    Auxiliary::Le3 {
                        intermediate,
                        intermediate_holds,
                    },
                )
            }
            IdentityId::Le4 => {
                // per pair, codegree - (d_i + d_j - n + 2) = n - 2 - |N_i ∪ N_j| >= 0,
                // so the sums agree exactly when every pair does
                IdentityCertificate::new(id, Kind::Equality, int(p.non_codeg), int(p.non_codeg_formula), ctf)
                    .with_auxiliary(Auxiliary::Le4 {
                        pairs_checked: p.le4_pairs as u64,
                        violating_pairs: p.le4_violations as u64,
                        max_abs_violation: p.le4_max_violation,
                    })
            }
            IdentityId::Le5 => {
                let lhs: i128 = self.degrees.iter().zip(&self.triangles_at).map(|(&d, &t)| d * t).sum();
                let rhs = frac(2 * p.adj_dd - sq - p.non_weighted_codeg, 2);
                IdentityCertificate::new(id, Kind::Equality, int(lhs), rhs, ctf)
            }
            IdentityId::Eq3 => {
                let lhs = 8 * self.census.t4 as i128;
                let cubic = self.deg_sum(|d| d * d * d + 2 * d);
                let rhs6 = 6 * p.adj_dd - 3 * p.non_eq3_product - cubic - 36 * self.t3();
                IdentityCertificate::new(id, Kind::Geq, int(lhs), frac(rhs6, 6), ctf)
            }
            IdentityId::FinalExact => {
                let lhs = 8 * self.census.t4 as i128;
                let per_vertex = self.deg_sum(|d| {
                    8 * d * d * d - 24 * n * d * d + 24 * d * d + 18 * n * n * d - 30 * n * d + 10 * d
                });
                let n2 = n * n;
                let rhs6 = 24 * p.adj_dd - 36 * m * m - 3 * n2 * n2 + 6 * n2 * n + 3 * n2 - 6 * n + per_vertex;
                IdentityCertificate::new(id, Kind::Geq, int(lhs), frac(rhs6, 6), ctf)
            }
            IdentityId::EdgeNonedge => {
                let lhs = p.adj_dd - 3 * p.non_dd;
                let rhs = frac(8 * p.adj_dd - 12 * m * m + 3 * sq, 2);
                IdentityCertificate::new(id, Kind::Equality, int(lhs), rhs, ctf)
            }
        };
        Ok(cert)
    }
}

pub fn verify(g: &Graph, id: IdentityId) -> Result<IdentityCertificate> {
    GraphSums::new(g)?.certificate(id)
}

/// Certificates for every identity, in [`IdentityId::ALL`] order.
/// LE00 is skipped on the empty graph, where its right side is undefined.
pub fn verify_all(g: &Graph) -> Result<Vec<IdentityCertificate>> {
    let sums = GraphSums::new(g)?;
    IdentityId::ALL
        .into_iter()
        .filter(|&id| !(id == IdentityId::Le00 && g.n() == 0))
        .map(|id| sums.certificate(id))
        .collect()
}

pub fn verify_le00(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::Le00)
}

pub fn verify_le0(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::Le0)
}

pub fn verify_eq1(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::Eq1)
}

pub fn verify_eq2(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::Eq2)
}

pub fn verify_le3(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::Le3)
}

pub fn verify_le4(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::Le4)
}

pub fn verify_le5(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::Le5)
}

pub fn verify_eq3(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::Eq3)
}

pub fn verify_final_exact(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::FinalExact)
}

pub fn verify_edge_nonedge_identity(g: &Graph) -> Result<IdentityCertificate> {
    verify(g, IdentityId::EdgeNonedge)
}

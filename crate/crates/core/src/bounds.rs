//! Exact scalar bound calculus.
//!
//! Upper side: the balanced blow-up on `5p >= n` vertices and the quartic
//! polynomial in `n` that dominates it. Lower side: the cubic in the edge
//! count `m`, `(80/3) m³/n² - 22 m² + 6 m n² - n⁴/2`, which bounds `8·t4`
//! from below up to terms of order `n³` for nearly regular graphs. Those
//! lower-order terms are never folded in here; see [`REMAINDER_NOTE`].

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::census::{binomial, census};
use crate::json::{dec, rational, rational_approx, rational_text};
use crate::{Error, Graph, Rational, Result};

pub const REMAINDER_NOTE: &str =
    "lower cubic omits terms of order n^3 and the near-regularity error; use the exact FINAL_EXACT certificate for instance-level checks";

fn int(x: impl Into<BigInt>) -> Rational {
    Rational::from_integer(x.into())
}

fn frac(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// `n⁴/200 + n³/100 - 17n²/200 - 13n/100 + 1/5`
pub fn upper_bound_poly(n: u64) -> Rational {
    let x = int(n);
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    let x4 = &x3 * &x;
    x4 * frac(1, 200) + x3 * frac(1, 100) - x2 * frac(17, 200) - x * frac(13, 100) + frac(1, 5)
}

/// `5·(C(2p,4) - C(p,4))`, the 4-clique count of `C5[K_p]`.
pub fn balanced_blowup_t4(p: u64) -> u128 {
    let p = p as u128;
    5 * (binomial(2 * p, 4) - binomial(p, 4))
}

/// `(25/8)p⁴ - (35/4)p³ + (55/8)p² - (5/4)p`
pub fn balanced_blowup_quartic(p: u64) -> Rational {
    let x = int(p);
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    let x4 = &x3 * &x;
    x4 * frac(25, 8) - x3 * frac(35, 4) + x2 * frac(55, 8) - x * frac(5, 4)
}

/// 4-clique count of `C5[K_p]` with `p = ceil(n/5)`; an upper bound on `f(n)`.
pub fn construction_upper_bound(n: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::domain("construction bound needs n >= 1"));
    }
    Ok(balanced_blowup_t4(n.div_ceil(5)))
}

/// Does `construction_upper_bound(n) <= upper_bound_poly(n)` hold?
pub fn construction_within_poly(n: u64) -> Result<bool> {
    Ok(int(construction_upper_bound(n)?) <= upper_bound_poly(n))
}

/// `(80/3) m³/n² - 22 m² + 6 m n² - n⁴/2`
pub fn lower_cubic(n: u64, m: &Rational) -> Result<Rational> {
    if n == 0 {
        return Err(Error::domain("lower cubic needs n >= 1"));
    }
    let nn = int(n) * int(n);
    let m2 = m * m;
    let m3 = &m2 * m;
    Ok(m3 * frac(80, 3) / &nn - m2 * int(22) + m * &nn * int(6) - &nn * &nn * frac(1, 2))
}

/// The three leading terms alone, without `-n⁴/2`.
pub fn lower_cubic_three_term(n: u64, m: &Rational) -> Result<Rational> {
    let nn = int(n) * int(n);
    Ok(lower_cubic(n, m)? + &nn * &nn * frac(1, 2))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicMinimizer {
    #[serde(serialize_with = "dec")]
    pub n: u64,
    /// `3n²/10`
    #[serde(serialize_with = "rational")]
    pub argmin: Rational,
    /// `n²/4`, the other critical point (a local maximum).
    #[serde(serialize_with = "rational")]
    pub local_max_at: Rational,
    /// Integer neighbour of `argmin` with the smaller cubic value (the lower one on ties).
    #[serde(serialize_with = "dec")]
    pub best_integer_m: u128,
    /// Three-term value at the minimum, `27n⁴/50`.
    #[serde(serialize_with = "rational")]
    pub three_term_min: Rational,
    /// Full cubic at the minimum, `n⁴/25`: the leading term of the bound on `8·t4`.
    #[serde(serialize_with = "rational")]
    pub min_value: Rational,
    /// `min_value / 8 = n⁴/200`.
    #[serde(serialize_with = "rational")]
    pub implied_t4_bound: Rational,
}

/// Critical points solve `80m²/n² - 44m + 6n² = 0`: the discriminant is
/// `(44² - 4·80·6)·n² = 16n²`, giving `m = (44 ± 4)n²/160`. The second
/// derivative `160m/n² - 44` is positive only at the larger root.
pub fn lower_cubic_minimizer(n: u64) -> Result<CubicMinimizer> {
    if n == 0 {
        return Err(Error::domain("lower cubic needs n >= 1"));
    }
    let nn = int(n) * int(n);
    let disc = int(44 * 44 - 4 * 80 * 6);
    debug_assert_eq!(disc, int(16));
    let root = int(4); // sqrt(16)
    let argmin = (int(44) + &root) * &nn / int(160);
    let local_max_at = (int(44) - &root) * &nn / int(160);
    let min_value = lower_cubic(n, &argmin)?;

    let lo = argmin.floor();
    let hi = argmin.ceil();
    let best_integer = if lower_cubic(n, &hi)? < lower_cubic(n, &lo)? { hi } else { lo };
    let best_integer_m = best_integer
        .to_integer()
        .to_string()
        .parse()
        .expect("edge count fits u128");

    Ok(CubicMinimizer {
        n,
        three_term_min: lower_cubic_three_term(n, &argmin)?,
        implied_t4_bound: &min_value / int(8),
        argmin,
        local_max_at,
        best_integer_m,
        min_value,
    })
}

/// `Σ_i |d_i - 2m/n|`; zero exactly for regular graphs.
pub fn regularity_deviation(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Err(Error::domain("regularity deviation needs n >= 1"));
    }
    let n = g.n() as i64;
    let mean = Rational::new(BigInt::from(2 * g.m() as i64), BigInt::from(n));
    Ok(g.degrees()
        .into_iter()
        .map(|d| (int(d as i64) - &mean).abs())
        .fold(Rational::zero(), |a, b| a + b))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRow {
    #[serde(serialize_with = "dec")]
    pub p: u64,
    #[serde(serialize_with = "dec")]
    pub n: u64,
    #[serde(serialize_with = "dec")]
    pub t4: u128,
    /// `200·t4/n⁴`
    #[serde(serialize_with = "rational")]
    pub ratio: Rational,
    /// `1 - 3/p < ratio <= 1`
    pub in_band: bool,
}

/// `1 - (14/5)/p + (11/5)/p² - (2/5)/p³`
pub fn ratio_closed_form(p: u64) -> Rational {
    let x = int(p);
    int(1) - frac(14, 5) / &x + frac(11, 5) / (&x * &x) - frac(2, 5) / (&x * &x * &x)
}

/// `200·t4(C5[K_p])/(5p)⁴` for `p = 1..=p_max`.
pub fn asymptotic_ratio_report(p_max: u64) -> Result<Vec<RatioRow>> {
    if p_max == 0 {
        return Err(Error::domain("ratio table needs p_max >= 1"));
    }
    Ok((1..=p_max)
        .map(|p| {
            let n = 5 * p;
            let t4 = balanced_blowup_t4(p);
            let n4 = int(n) * int(n) * int(n) * int(n);
            let ratio = int(200u128 * t4) / n4;
            let lower = int(1) - frac(3, 1) / int(p);
            let in_band = ratio > lower && ratio <= int(1);
            RatioRow { p, n, t4, ratio, in_band }
        })
        .collect())
}

pub fn ratio_csv(rows: &[RatioRow]) -> String {
    let mut s = String::from("p,n,t4,ratio_num,ratio_den,ratio_approx,in_band\n");
    for r in rows {
        s.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.p,
            r.n,
            r.t4,
            r.ratio.numer(),
            r.ratio.denom(),
            rational_approx(&r.ratio, 9),
            r.in_band
        ));
    }
    s
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphBoundData {
    #[serde(serialize_with = "dec")]
    pub m: u64,
    #[serde(serialize_with = "rational")]
    pub regularity_deviation: Rational,
    #[serde(serialize_with = "rational")]
    pub lower_cubic_at_m: Rational,
    #[serde(serialize_with = "dec")]
    pub t4: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    #[serde(serialize_with = "dec")]
    pub n: u64,
    #[serde(serialize_with = "rational")]
    pub upper_poly: Rational,
    #[serde(serialize_with = "dec")]
    pub construction_value: u128,
    pub construction_within_upper_poly: bool,
    #[serde(serialize_with = "rational")]
    pub lower_cubic_min_m: Rational,
    #[serde(serialize_with = "dec")]
    pub lower_cubic_best_integer_m: u128,
    #[serde(serialize_with = "rational")]
    pub lower_cubic_min_value: Rational,
    #[serde(serialize_with = "rational")]
    pub implied_t4_lower_bound: Rational,
    pub remainder_note: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_graph: Option<GraphBoundData>,
}

impl BoundReport {
    pub fn new(n: u64, graph: Option<&Graph>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("bound report needs n >= 1"));
        }
        let per_graph = match graph {
            None => None,
            Some(g) => {
                if g.n() as u64 != n {
                    return Err(Error::domain(format!("graph has order {} but n = {n}", g.n())));
                }
                let m = g.m() as u64;
                Some(GraphBoundData {
                    m,
                    regularity_deviation: regularity_deviation(g)?,
                    lower_cubic_at_m: lower_cubic(n, &int(m))?,
                    t4: census(g)?.t4,
                })
            }
        };
        let min = lower_cubic_minimizer(n)?;
        let construction_value = construction_upper_bound(n)?;
        let upper_poly = upper_bound_poly(n);
        Ok(BoundReport {
            n,
            construction_within_upper_poly: int(construction_value) <= upper_poly,
            upper_poly,
            construction_value,
            lower_cubic_min_m: min.argmin,
            lower_cubic_best_integer_m: min.best_integer_m,
            lower_cubic_min_value: min.min_value,
            implied_t4_lower_bound: min.implied_t4_bound,
            remainder_note: REMAINDER_NOTE,
            per_graph,
        })
    }

    pub fn csv_header() -> &'static str {
        "n,upper_poly,construction_value,construction_within_upper_poly,lower_cubic_min_m,lower_cubic_min_value,implied_t4_lower_bound,m,regularity_deviation,lower_cubic_at_m,t4\n"
    }

    pub fn csv_row(&self) -> String {
        let (m, dev, at_m, t4) = match &self.per_graph {
            Some(p) => (
                p.m.to_string(),
                rational_text(&p.regularity_deviation),
                rational_text(&p.lower_cubic_at_m),
                p.t4.to_string(),
            ),
            None => Default::default(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            self.n,
            rational_text(&self.upper_poly),
            self.construction_value,
            self.construction_within_upper_poly,
            rational_text(&self.lower_cubic_min_m),
            rational_text(&self.lower_cubic_min_value),
            rational_text(&self.implied_t4_lower_bound),
            m,
            dev,
            at_m,
            t4
        )
    }
}

//! Closed-form lower and upper bound calculators, plus the reference
//! constants bounding forced-vertex structure in clique-free graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::identify;
use serde::Serialize;

/// Lower bounds on the identifying code number of a twin-free graph with
/// at least one edge, together with the trivial upper bound `n - 1`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    /// `ceil(log2(n + 1))`.
    pub log_lower: usize,
    /// `ceil(2n / (d + 2))` where `d` is the maximum degree.
    pub degree_lower: usize,
    /// Number of forced vertices; each lies in every code.
    pub forced_lower: usize,
    pub best_lower: usize,
    pub trivial_upper: usize,
}

fn ceil_log2(m: usize) -> usize {
    usize::BITS as usize - (m - 1).leading_zeros() as usize
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Evaluates the classical lower bounds for a twin-free graph with an edge.
pub fn lower_bounds(g: &Graph) -> Result<BoundReport> {
    g.require_twin_free()?;
    if g.edge_count() == 0 {
        return Err(Error::domain(
            "graph",
            "edgeless",
            "at least one edge required",
        ));
    }
    let n = g.n();
    let d = g.max_degree();
    let forced = identify::forced_vertices(g)?;
    let log_lower = ceil_log2(n + 1);
    let degree_lower = ceil_div(2 * n, d + 2);
    let forced_lower = forced.forced.len();
    Ok(BoundReport {
        log_lower,
        degree_lower,
        forced_lower,
        best_lower: log_lower.max(degree_lower).max(forced_lower),
        trivial_upper: n - 1,
    })
}

/// `beta(k) = sum_{i=0}^{k-2} (2k-3)^i` bounds the two-way reachability
/// closure of any vertex in the inclusion digraph of a `K_k`-free graph;
/// `gamma(k) = k beta(k) + C(k beta(k), 2)` bounds the covering-set size
/// in the non-forced-fraction argument.
pub fn beta_gamma(k: u32) -> Result<(u128, u128)> {
    if k < 3 {
        return Err(Error::domain("k", k, "k >= 3"));
    }
    let base = 2u128 * k as u128 - 3;
    let mut beta: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..(k - 1) {
        beta = beta
            .checked_add(pow)
            .ok_or(Error::domain("k", k, "beta(k) overflows u128"))?;
        pow = pow
            .checked_mul(base)
            .ok_or(Error::domain("k", k, "beta(k) overflows u128"))?;
    }
    let kb = beta
        .checked_mul(k as u128)
        .ok_or(Error::domain("k", k, "gamma(k) overflows u128"))?;
    let choose2 = kb
        .checked_mul(kb - 1)
        .ok_or(Error::domain("k", k, "gamma(k) overflows u128"))?
        / 2;
    let gamma = kb
        .checked_add(choose2)
        .ok_or(Error::domain("k", k, "gamma(k) overflows u128"))?;
    Ok((beta, gamma))
}

/// A labelled formula evaluation. Entries with `asymptotic` set carry
/// unknown constant or lower-order terms and must never be asserted
/// against; they exist for report columns only.
#[derive(Clone, Debug, Serialize)]
pub struct ReferenceValue {
    pub label: &'static str,
    pub value: f64,
    pub asymptotic: bool,
}

/// Evaluates the known bound formulas at the given parameters.
/// `f_ratio` is the non-forced proportion; `delta` is the minimum degree
/// used by the girth-5 term, which is omitted (not an error) when
/// `delta < 3`.
pub fn theorem_upper_bounds(
    n: usize,
    d: usize,
    f_ratio: f64,
    delta: usize,
) -> Result<Vec<ReferenceValue>> {
    if d < 3 {
        return Err(Error::domain("d", d, "d >= 3"));
    }
    if !(f_ratio > 0.0 && f_ratio <= 1.0) {
        return Err(Error::domain("f_ratio", f_ratio, "0 < f <= 1"));
    }
    let nf = n as f64;
    let df = d as f64;
    let mut out = vec![
        ReferenceValue {
            label: "max_degree_upper",
            value: nf - nf * f_ratio * f_ratio / (103.0 * df),
            asymptotic: false,
        },
        ReferenceValue {
            label: "general_upper",
            value: nf - nf / (103.0 * df * (df + 1.0) * (df + 1.0)),
            asymptotic: false,
        },
    ];
    if delta >= 3 {
        let deltaf = delta as f64;
        out.push(ReferenceValue {
            label: "girth5_upper_main",
            value: 3.0 * deltaf.ln() / (2.0 * deltaf) * nf,
            asymptotic: true,
        });
    }
    out.push(ReferenceValue {
        label: "rrg_upper_main",
        value: (df.ln() + df.ln().ln()) / df * nf,
        asymptotic: true,
    });
    out.push(ReferenceValue {
        label: "domination_lower_main",
        value: (df.ln() - 2.0 * df.ln().ln()) / df * nf,
        asymptotic: true,
    });
    Ok(out)
}

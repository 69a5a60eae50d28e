//! Exhaustive enumeration of small connected graphs up to isomorphism,
//! the substrate for oracle sweeps.
//!
//! Graphs on up to 8 vertices are encoded as canonical keys: the
//! adjacency bits of vertex `r` against vertices `0..r`, for `r = 1..n`,
//! concatenated most-significant-first. The canonical key is the minimum
//! over all vertex orderings, found by prefix-pruned backtracking, and
//! enumeration proceeds by vertex augmentation: every graph on `k+1`
//! vertices arises from some graph on `k` vertices by attaching one new
//! vertex.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;

/// Hard cap: keys use u64 bit slices and the sweep is exponential anyway.
pub const MAX_ORDER: usize = 8;

/// A connected graph of the corpus with its twin-freeness flag.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub graph: Graph,
    pub twin_free: bool,
}

fn key_bits(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

/// Minimum key over all relabelings. A partial ordering of `k` vertices
/// decides exactly the top `C(k,2)` bits of the key, so a branch whose
/// partial key exceeds the corresponding prefix of the best complete key
/// cannot improve on it.
fn canonical_key(n: usize, adj: &[u64]) -> u64 {
    fn rec(
        n: usize,
        adj: &[u64],
        perm: &mut Vec<usize>,
        used: &mut [bool],
        partial: u64,
        best: &mut u64,
    ) {
        let row = perm.len();
        if row == n {
            if partial < *best {
                *best = partial;
            }
            return;
        }
        for cand in 0..n {
            if used[cand] {
                continue;
            }
            let mut bits = 0u64;
            for &p in perm.iter() {
                bits = bits << 1 | (adj[cand] >> p & 1);
            }
            let next = partial << row | bits;
            let remaining = key_bits(n) - key_bits(row + 1);
            if next > *best >> remaining {
                continue;
            }
            used[cand] = true;
            perm.push(cand);
            rec(n, adj, perm, used, next, best);
            perm.pop();
            used[cand] = false;
        }
    }

    let mut best = u64::MAX >> (64 - key_bits(n).max(1));
    if n == 1 {
        return 0;
    }
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    rec(n, adj, &mut perm, &mut used, 0, &mut best);
    best
}

/// Edges encoded by a canonical key, in the layout written by
/// [`canonical_key`]: vertex `r`'s bit against earlier vertex `c` sits
/// `r - 1 - c` positions above the least significant bit of its group.
fn key_edges(n: usize, key: u64) -> Vec<(usize, usize)> {
    let total = key_bits(n);
    let mut edges = Vec::new();
    for r in 1..n {
        let group_lsb = total - key_bits(r + 1);
        for c in 0..r {
            if key >> (group_lsb + (r - 1 - c) as u32) & 1 == 1 {
                edges.push((c, r));
            }
        }
    }
    edges
}

struct LevelGraph {
    n: usize,
    adj: Vec<u64>, // adjacency rows as vertex bitmasks
}

impl LevelGraph {
    fn from_key(n: usize, key: u64) -> Self {
        let mut adj = vec![0u64; n];
        for (u, v) in key_edges(n, key) {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        LevelGraph { n, adj }
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        edges
    }
}

/// All connected graphs up to isomorphism with `1 <= n <= max_n`
/// vertices, in order of increasing `n`. Each is flagged twin-free.
pub fn corpus_enumerate(max_n: usize) -> Result<Vec<CorpusGraph>> {
    if max_n > MAX_ORDER {
        return Err(Error::CorpusCapExceeded(max_n));
    }
    let mut out = Vec::new();
    if max_n == 0 {
        return Ok(out);
    }
    let mut level: Vec<LevelGraph> = vec![LevelGraph { n: 1, adj: vec![0] }];
    emit_connected(&level, &mut out)?;
    for n in 2..=max_n {
        let mut seen: HashSet<u64> = HashSet::new();
        let mut next_level = Vec::new();
        for parent in &level {
            for attach in 0u64..(1 << parent.n) {
                let mut adj = parent.adj.clone();
                adj.push(attach);
                for v in 0..parent.n {
                    if attach >> v & 1 == 1 {
                        adj[v] |= 1 << parent.n;
                    }
                }
                let canon = canonical_key(n, &adj);
                if seen.insert(canon) {
                    next_level.push(LevelGraph::from_key(n, canon));
                }
            }
        }
        emit_connected(&next_level, &mut out)?;
        level = next_level;
    }
    Ok(out)
}

fn emit_connected(level: &[LevelGraph], out: &mut Vec<CorpusGraph>) -> Result<()> {
    for lg in level {
        let graph = Graph::from_edges_allow_isolated(lg.n, &lg.edges())?;
        if graph.is_connected() {
            let twin_free = graph.is_twin_free();
            out.push(CorpusGraph { graph, twin_free });
        }
    }
    Ok(())
}

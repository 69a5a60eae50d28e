//! Built-in named graph families used by tests, the corpus, and the CLI.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Complete graph `K_k`.
pub fn complete(k: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            edges.push((u, v));
        }
    }
    Graph::from_edges_allow_isolated(k, &edges)
}

/// Path on `k` vertices.
pub fn path(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges_allow_isolated(k, &edges)
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::domain("k", k, "cycles need k >= 3"));
    }
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::from_edges(k, &edges)
}

/// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges_allow_isolated(a + b, &edges)
}

/// Hypercube of dimension `dim`, on `2^dim` vertices.
pub fn hypercube(dim: u32) -> Result<Graph> {
    if dim > 20 {
        return Err(Error::domain(
            "dim",
            dim,
            "hypercube dimension is capped at 20",
        ));
    }
    let n = 1usize << dim;
    let mut edges = Vec::new();
    for u in 0..n {
        for bit in 0..dim {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_allow_isolated(n, &edges)
}

/// The Petersen graph: outer 5-cycle 0..5, inner 5-star 5..10, spokes i—i+5.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges).expect("petersen graph is well-formed")
}

/// Parses a generator spec like `complete:5`, `cycle:7`, `path:3`,
/// `hypercube:3`, `complete_bipartite:3:3`, or `petersen`.
pub fn from_spec(spec: &str) -> Result<Graph> {
    let parts: Vec<&str> = spec.split(':').collect();
    let arg = |i: usize| -> Result<usize> {
        parts
            .get(i)
            .ok_or(Error::domain("generator", spec, "missing size argument"))?
            .parse()
            .map_err(|_| Error::domain("generator", spec, "size must be an integer"))
    };
    match parts[0] {
        "complete" => complete(arg(1)?),
        "path" => path(arg(1)?),
        "cycle" => cycle(arg(1)?),
        "hypercube" => hypercube(arg(1)? as u32),
        "complete_bipartite" => complete_bipartite(arg(1)?, arg(2)?),
        "petersen" => Ok(petersen()),
        _ => Err(Error::domain(
            "generator",
            spec,
            "one of complete:k, path:k, cycle:k, hypercube:k, complete_bipartite:a:b, petersen",
        )),
    }
}

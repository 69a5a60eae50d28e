//! Generators for the tight families: graphs with known optimal
//! identifying codes certifying that the general upper bounds cannot be
//! improved beyond constants.

use crate::error::{Error, Result};
use crate::graph::{Graph, MultiGraph};
use crate::identify;
use crate::vertex_set::VertexSet;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    C1,
    C2,
    C3,
    AkUniversal,
}

/// A generated graph together with a certified optimal code.
#[derive(Clone, Debug)]
pub struct ExtremalInstance {
    pub graph: Graph,
    pub optimal_code: VertexSet,
    pub claimed_gamma: usize,
    pub family: Family,
}

impl ExtremalInstance {
    fn checked(self) -> Self {
        assert!(
            self.graph.is_twin_free(),
            "extremal instance must be twin-free"
        );
        assert_eq!(self.optimal_code.len(), self.claimed_gamma);
        assert!(
            identify::is_identifying_code(&self.graph, &self.optimal_code).valid,
            "generated code failed verification"
        );
        self
    }
}

/// Port bookkeeping shared by the clique-expansion constructions: edges of
/// `H` are walked in stored order and each endpoint consumes its lowest
/// free port, giving a canonical matching between clique vertices.
fn assign_ports(
    h: &MultiGraph,
    first_port: usize,
    clique_size: usize,
) -> Vec<(usize, usize, usize, usize)> {
    let mut next_port = vec![first_port; h.n()];
    let mut out = Vec::with_capacity(h.edge_count());
    for &(u, v) in h.edges() {
        let i = next_port[u];
        next_port[u] += 1;
        let j = next_port[v];
        next_port[v] += 1;
        debug_assert!(i < clique_size && j < clique_size);
        out.push((u, i, v, j));
    }
    out
}

/// Replaces each vertex of a `d_H`-regular loopless multigraph by a clique
/// on `d_H + 1` vertices and matches every clique vertex except port 0 to
/// a unique vertex of the neighbouring clique. The matched vertices are
/// all forced and themselves form a minimum identifying code of size
/// `n - n/d`.
pub fn construct_c1(h: &MultiGraph) -> Result<ExtremalInstance> {
    h.require_loopless()?;
    let dh = h.regular_degree()?;
    if dh < 2 {
        return Err(Error::domain("d_H", dh, "H must be regular of degree >= 2"));
    }
    let size = dh + 1;
    let n = h.n() * size;
    let k = |v: usize, i: usize| v * size + i;

    let mut edges = Vec::new();
    for v in 0..h.n() {
        for a in 0..size {
            for b in (a + 1)..size {
                edges.push((k(v, a), k(v, b)));
            }
        }
    }
    for (u, i, v, j) in assign_ports(h, 1, size) {
        edges.push((k(u, i), k(v, j)));
    }
    let graph = Graph::from_edges(n, &edges)?;

    let mut code = VertexSet::full(n);
    for v in 0..h.n() {
        code.remove(k(v, 0));
    }
    let claimed_gamma = n - h.n();
    Ok(ExtremalInstance {
        graph,
        optimal_code: code,
        claimed_gamma,
        family: Family::C1,
    }
    .checked())
}

/// Kuhn augmenting-path matching on the bipartite double cover: finds a
/// permutation `t` of `V(H)` with `t(v)` adjacent to `v`. Exists for every
/// regular multigraph, by Hall's theorem on the regular bipartite cover.
fn adjacent_permutation(h: &MultiGraph) -> Vec<usize> {
    let n = h.n();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in h.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    let mut matched_to: Vec<Option<usize>> = vec![None; n]; // target -> chooser
    let mut choice: Vec<Option<usize>> = vec![None; n]; // chooser -> target

    fn try_assign(
        v: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        matched_to: &mut [Option<usize>],
        choice: &mut [Option<usize>],
    ) -> bool {
        for &w in &adj[v] {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            if matched_to[w].is_none()
                || try_assign(matched_to[w].unwrap(), adj, visited, matched_to, choice)
            {
                matched_to[w] = Some(v);
                choice[v] = Some(w);
                return true;
            }
        }
        false
    }

    for v in 0..n {
        let mut visited = vec![false; n];
        let ok = try_assign(v, &adj, &mut visited, &mut matched_to, &mut choice);
        assert!(
            ok,
            "regular multigraph always admits an adjacent permutation"
        );
    }
    choice
        .into_iter()
        .map(|c| c.expect("perfect matching"))
        .collect()
}

/// Replaces each vertex of a `d_H`-regular loopless multigraph (`d_H >= 3`)
/// by a clique on `d_H` vertices with every clique vertex matched outward,
/// yielding a `d_H`-regular graph with no forced vertices whose identifying
/// code number is still `n - n/d`. The returned code excludes one external
/// anchor per clique, spread so that every clique loses exactly one vertex.
pub fn construct_c2(h: &MultiGraph) -> Result<ExtremalInstance> {
    h.require_loopless()?;
    let dh = h.regular_degree()?;
    if dh < 3 {
        return Err(Error::domain("d_H", dh, "H must be regular of degree >= 3"));
    }
    let size = dh;
    let n = h.n() * size;
    let k = |v: usize, i: usize| v * size + (i - 1);

    let mut edges = Vec::new();
    for v in 0..h.n() {
        for a in 1..=size {
            for b in (a + 1)..=size {
                edges.push((k(v, a), k(v, b)));
            }
        }
    }
    let ports = assign_ports(h, 1, size + 1);
    let mut partner = vec![usize::MAX; n];
    for &(u, i, v, j) in &ports {
        edges.push((k(u, i), k(v, j)));
        partner[k(u, i)] = k(v, j);
        partner[k(v, j)] = k(u, i);
    }
    let graph = Graph::from_edges(n, &edges)?;

    // Excluded set: for each H-vertex v pick an incident edge towards t(v)
    // and drop the anchor sitting in clique K(t(v)). The permutation
    // guarantees one exclusion per clique, which keeps the code valid.
    let t = adjacent_permutation(h);
    let mut code = VertexSet::full(n);
    for v in 0..h.n() {
        let target = t[v];
        let (u, i, w, j) = *ports
            .iter()
            .find(|&&(u, _, w, _)| (u == v && w == target) || (w == v && u == target))
            .expect("t(v) is adjacent to v");
        let excluded = if u == v { k(w, j) } else { k(u, i) };
        debug_assert!(excluded / size == target);
        code.remove(excluded);
    }
    let claimed_gamma = n - h.n();
    Ok(ExtremalInstance {
        graph,
        optimal_code: code,
        claimed_gamma,
        family: Family::C2,
    }
    .checked())
}

/// The matched-cycle-of-bicliques family: `2k` cycle vertices alternately
/// joined through copies of `K_{d-1,d-1}`, giving a twin-free `d`-regular
/// triangle-free graph on `2kd` vertices with code number `k + 2k(d-2)`.
pub fn construct_c3(two_k: usize, d: usize) -> Result<ExtremalInstance> {
    if two_k % 2 != 0 || two_k < 4 {
        return Err(Error::domain("two_k", two_k, "even integer >= 4"));
    }
    if d < 3 {
        return Err(Error::domain("d", d, "d >= 3"));
    }
    let k = two_k / 2;
    let side = d - 1;
    let n = two_k * d;
    let block = |i: usize| two_k + (i / 2) * 2 * side; // base of K(i), i even

    let mut edges = Vec::new();
    for i in (1..two_k).step_by(2) {
        edges.push((i, (i + 1) % two_k));
    }
    for i in (0..two_k).step_by(2) {
        let base = block(i);
        for a in 0..side {
            for b in 0..side {
                edges.push((base + a, base + side + b));
            }
            edges.push((i, base + a));
            edges.push((i + 1, base + side + a));
        }
    }
    let graph = Graph::from_edges(n, &edges)?;

    let mut code = VertexSet::empty(n);
    for i in (0..two_k).step_by(2) {
        code.insert(i);
        let base = block(i);
        // d-2 vertices of each part; the last of each part stays out
        for a in 0..(side - 1) {
            code.insert(base + a);
            code.insert(base + side + a);
        }
    }
    let claimed_gamma = k + 2 * k * (d - 2);
    Ok(ExtremalInstance {
        graph,
        optimal_code: code,
        claimed_gamma,
        family: Family::C3,
    }
    .checked())
}

/// The `(k-1)`-th power of the path on `2k` vertices plus a universal
/// vertex: every vertex except the universal one is forced, witnessing
/// that the non-forced proportion can be as low as `1/(d+1)`.
pub fn construct_ak_universal(k: usize) -> Result<ExtremalInstance> {
    if k < 2 {
        return Err(Error::domain("k", k, "k >= 2"));
    }
    let n = 2 * k + 1;
    let x = 2 * k;
    let mut edges = Vec::new();
    for i in 0..2 * k {
        for j in (i + 1)..2 * k {
            if j - i < k {
                edges.push((i, j));
            }
        }
        edges.push((i, x));
    }
    let graph = Graph::from_edges(n, &edges)?;

    let mut code = VertexSet::full(n);
    code.remove(x);
    Ok(ExtremalInstance {
        graph,
        optimal_code: code,
        claimed_gamma: n - 1,
        family: Family::AkUniversal,
    }
    .checked())
}

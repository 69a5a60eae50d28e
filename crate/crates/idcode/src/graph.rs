//! Simple graphs with precomputed closed neighbourhoods, loopless
//! multigraphs, and the neighbourhood/cycle machinery the rest of the
//! crate is built on.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An immutable simple undirected graph.
///
/// Vertices are dense integers `0..n`. Adjacency lists are sorted and the
/// closed neighbourhood `N[v] = {v} ∪ N(v)` of every vertex is precomputed
/// as a [`VertexSet`], since almost every operation in this crate is
/// phrased in terms of closed-neighbourhood algebra.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    closed: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and isolated
    /// vertices. Every bound in this domain assumes no isolated vertices,
    /// so rejection is the default; see [`Graph::from_edges_allow_isolated`].
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let g = Self::build(n, edges)?;
        if let Some(v) = (0..n).find(|&v| g.adj[v].is_empty()) {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] but permits isolated vertices.
    pub fn from_edges_allow_isolated(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges)
    }

    fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for v in 0..n {
            adj[v].sort_unstable();
            if adj[v].windows(2).any(|w| w[0] == w[1]) {
                let dup = adj[v].windows(2).find(|w| w[0] == w[1]).unwrap()[0];
                return Err(Error::DuplicateEdge(v.min(dup), v.max(dup)));
            }
        }
        let closed = (0..n)
            .map(|v| {
                let mut s = VertexSet::empty(n);
                s.insert(v);
                for &w in &adj[v] {
                    s.insert(w);
                }
                s
            })
            .collect();
        Ok(Graph { n, adj, closed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// The closed neighbourhood `N[v]`, checked.
    pub fn closed_neighborhood(&self, v: usize) -> Result<&VertexSet> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(&self.closed[v])
    }

    /// Unchecked access to `N[v]` for internal hot paths.
    pub fn closed(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    /// `N[u] Δ N[v]` for distinct vertices.
    pub fn nbhd_symmetric_difference(&self, u: usize, v: usize) -> Result<VertexSet> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(Error::EqualVertices(u));
        }
        Ok(self.closed[u].symmetric_difference(&self.closed[v]))
    }

    /// True if `(N[u] Δ N[v]) ∩ set` is nonempty, without materializing
    /// the symmetric difference.
    pub fn sym_diff_intersects(&self, u: usize, v: usize, set: &VertexSet) -> bool {
        self.closed[u]
            .symmetric_difference(&self.closed[v])
            .intersects(set)
    }

    /// BFS distances from `source`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// BFS from every vertex; each non-tree edge closes a walk containing a
    /// cycle no longer than the walk, and a root on a shortest cycle
    /// realizes the girth exactly, so the minimum over roots is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// All triangles as sorted vertex triples, ascending lexicographic.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for (i, &v) in self.adj[u].iter().enumerate() {
                if v <= u {
                    continue;
                }
                for &w in &self.adj[u][i + 1..] {
                    if w > v && self.has_edge(v, w) {
                        out.push([u, v, w]);
                    }
                }
            }
        }
        out
    }

    /// All 4-cycles, each once, as `[a, b, c, d]` in cycle order with
    /// `a` the smallest vertex and `b < d` its two cycle neighbours.
    pub fn four_cycles(&self) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for (i, &b) in self.adj[a].iter().enumerate() {
                if b <= a {
                    continue;
                }
                for &d in &self.adj[a][i + 1..] {
                    // b < d, both > a; c ranges over common neighbours of b, d
                    for &c in &self.adj[b] {
                        if c > a && c != d && c != a && self.has_edge(d, c) {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    /// Exact counts of 3-cycles and 4-cycles, each cycle counted once.
    pub fn count_short_cycles(&self) -> (usize, usize) {
        (self.triangles().len(), self.four_cycles().len())
    }

    /// All twin pairs, i.e. `N[u] = N[v]`. Twins are necessarily adjacent,
    /// so scanning edges is complete.
    pub fn find_twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            if self.closed[u] == self.closed[v] {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_twin_free(&self) -> bool {
        self.find_twins().is_empty()
    }

    /// Returns `Err(TwinsPresent)` carrying the lowest twin pair, if any.
    pub fn require_twin_free(&self) -> Result<()> {
        match self.find_twins().first() {
            Some(&(u, v)) => Err(Error::TwinsPresent(u, v)),
            None => Ok(()),
        }
    }

    /// All false-twin pairs, i.e. `N(u) = N(v)` with `u` and `v`
    /// non-adjacent. Such pairs are at distance two, and for them
    /// `N[u] Δ N[v] = {u, v}`.
    pub fn find_false_twins(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, v) in self.distance_two_pairs() {
            let diff = self.closed[u].symmetric_difference(&self.closed[v]);
            if diff.len() == 2 && diff.contains(u) && diff.contains(v) {
                out.push((u, v));
            }
        }
        out
    }

    /// Unordered pairs at distance exactly two, ascending lexicographic.
    pub fn distance_two_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut mark = vec![false; self.n];
        for u in 0..self.n {
            let mut touched = Vec::new();
            for &v in &self.adj[u] {
                for &w in &self.adj[v] {
                    if w > u && !mark[w] && !self.has_edge(u, w) {
                        mark[w] = true;
                        touched.push(w);
                    }
                }
            }
            touched.sort_unstable();
            out.extend(touched.iter().map(|&w| (u, w)));
            for w in touched {
                mark[w] = false;
            }
        }
        out
    }

    /// Unordered pairs at distance one or two, ascending lexicographic.
    pub fn pairs_within_distance_two(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut mark = vec![false; self.n];
        for u in 0..self.n {
            let mut touched = Vec::new();
            for &v in &self.adj[u] {
                if v > u && !mark[v] {
                    mark[v] = true;
                    touched.push(v);
                }
                for &w in &self.adj[v] {
                    if w > u && !mark[w] {
                        mark[w] = true;
                        touched.push(w);
                    }
                }
            }
            touched.sort_unstable();
            out.extend(touched.iter().map(|&w| (u, w)));
            for w in touched {
                mark[w] = false;
            }
        }
        out
    }

    /// Parses the shared edge-list format: optional `#` comments, a header
    /// line `n m`, then `m` lines `u v` with 0-based endpoints.
    pub fn parse_edge_list(input: &str, allow_isolated: bool) -> Result<Self> {
        let (n, edges) = parse_edge_list_lines(input)?;
        if allow_isolated {
            Self::from_edges_allow_isolated(n, &edges)
        } else {
            Self::from_edges(n, &edges)
        }
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// A loopless check is *not* enforced at construction: the configuration
/// model legitimately produces loops, so loops are representable and
/// callers that require looplessness (the extremal constructions) check
/// [`MultiGraph::require_loopless`].
#[derive(Clone, Debug)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl MultiGraph {
    /// Builds a multigraph from an edge multiset. Pairs are normalized to
    /// `(min, max)` and kept sorted so equal multisets compare equal.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        Ok(MultiGraph { n, edges: norm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree counting multiplicity; a loop contributes two.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edges.windows(2).any(|w| w[0] == w[1])
    }

    pub fn is_simple(&self) -> bool {
        !self.has_loops() && !self.has_parallel_edges()
    }

    pub fn require_loopless(&self) -> Result<()> {
        match self.edges.iter().find(|&&(a, b)| a == b) {
            Some(&(a, _)) => Err(Error::LoopedInput(a)),
            None => Ok(()),
        }
    }

    /// Common degree if regular, else an error naming two distinct degrees.
    pub fn regular_degree(&self) -> Result<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let d = deg.first().copied().unwrap_or(0);
        match deg.iter().find(|&&x| x != d) {
            Some(&other) => Err(Error::NotRegular(d, other)),
            None => Ok(d),
        }
    }

    /// Conversion to a simple graph; fails on loops or parallel edges.
    pub fn to_simple(&self, allow_isolated: bool) -> Result<Graph> {
        self.require_loopless()?;
        if let Some(w) = self.edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if allow_isolated {
            Graph::from_edges_allow_isolated(self.n, &self.edges)
        } else {
            Graph::from_edges(self.n, &self.edges)
        }
    }

    pub fn parse_edge_list(input: &str) -> Result<Self> {
        let (n, edges) = parse_edge_list_lines(input)?;
        Self::from_edges(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl From<&Graph> for MultiGraph {
    fn from(g: &Graph) -> Self {
        MultiGraph::from_edges(g.n(), &g.edges()).expect("simple graph is a valid multigraph")
    }
}

fn parse_edge_list_lines(input: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>, line_no: usize| -> Result<usize> {
            tok.ok_or(Error::Parse {
                line: line_no,
                message: "expected two integers".into(),
            })?
            .parse()
            .map_err(|e| Error::Parse {
                line: line_no,
                message: format!("invalid integer: {e}"),
            })
        };
        let a = parse(it.next(), idx + 1)?;
        let b = parse(it.next(), idx + 1)?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: idx + 1,
                message: "trailing tokens".into(),
            });
        }
        match header {
            None => header = Some((a, b)),
            Some(_) => edges.push((a, b)),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok((n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn k33() -> Graph {
        generators::complete_bipartite(3, 3).unwrap()
    }

    #[test]
    fn closed_neighborhoods() {
        let g = p3();
        assert_eq!(g.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(g.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1]);
        assert!(g.closed_neighborhood(3).is_err());
        // K_{3,3}: parts {0,1,2} and {3,4,5}
        assert_eq!(
            k33().closed_neighborhood(0).unwrap().to_vec(),
            vec![0, 3, 4, 5]
        );
    }

    #[test]
    fn symmetric_differences() {
        let g = p3();
        assert_eq!(
            g.nbhd_symmetric_difference(0, 2).unwrap().to_vec(),
            vec![0, 2]
        );
        assert!(g.nbhd_symmetric_difference(1, 1).is_err());

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(k2.nbhd_symmetric_difference(0, 1).unwrap().is_empty());

        assert_eq!(
            k33().nbhd_symmetric_difference(0, 1).unwrap().to_vec(),
            vec![0, 1]
        );
    }

    #[test]
    fn sym_diff_cardinality_identity() {
        // |N[u] Δ N[v]| = |N[u]| + |N[v]| - 2 |N[u] ∩ N[v]|
        let g = generators::petersen();
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                let lhs = g.nbhd_symmetric_difference(u, v).unwrap().len();
                let rhs = g.closed(u).len() + g.closed(v).len()
                    - 2 * g.closed(u).intersection_len(g.closed(v));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn girth_values() {
        assert_eq!(k33().girth(), Some(4));
        assert_eq!(p3().girth(), None);
        assert_eq!(generators::cycle(5).unwrap().girth(), Some(5));
        assert_eq!(generators::complete(4).unwrap().girth(), Some(3));
        assert_eq!(generators::hypercube(3).unwrap().girth(), Some(4));
    }

    // Independent oracle: girth via induced-cycle search over vertex subsets.
    fn brute_force_has_cycle_of_len(g: &Graph, k: usize) -> bool {
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn rec(
                start: usize,
                n: usize,
                k: usize,
                cur: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for v in start..n {
                    cur.push(v);
                    rec(v + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(0, n, k, &mut cur, &mut out);
            out
        }
        // a subset carries a k-cycle iff some cyclic ordering is fully adjacent
        for sub in subsets(g.n(), k) {
            let mut perm: Vec<usize> = (1..k).collect();
            let heads = sub[0];
            loop {
                let mut ok = true;
                let mut prev = heads;
                for &i in &perm {
                    if !g.has_edge(prev, sub[i]) {
                        ok = false;
                        break;
                    }
                    prev = sub[i];
                }
                if ok && g.has_edge(prev, heads) {
                    return true;
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        false
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn petersen_girth_five_against_brute_force() {
        let g = generators::petersen();
        assert!(!brute_force_has_cycle_of_len(&g, 3));
        assert!(!brute_force_has_cycle_of_len(&g, 4));
        assert!(brute_force_has_cycle_of_len(&g, 5));
        assert_eq!(g.girth(), Some(5));
    }

    // Independent oracle for cycle counts: brute force over vertex subsets,
    // counting distinct cyclic orderings per subset.
    fn distinct_cycles_on(g: &Graph, sub: &[usize]) -> usize {
        // fix sub[0] first and quotient out direction
        let k = sub.len();
        let mut perm: Vec<usize> = (1..k).collect();
        let mut cycles = 0;
        loop {
            if perm[0] < perm[k - 2] {
                let mut ok = g.has_edge(sub[0], sub[perm[0]]);
                for w in perm.windows(2) {
                    ok = ok && g.has_edge(sub[w[0]], sub[w[1]]);
                }
                ok = ok && g.has_edge(sub[perm[k - 2]], sub[0]);
                if ok {
                    cycles += 1;
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        cycles
    }

    fn count_cycles_rec(
        g: &Graph,
        start: usize,
        k: usize,
        sub: &mut Vec<usize>,
        count: &mut usize,
    ) {
        if sub.len() == k {
            *count += distinct_cycles_on(g, sub);
            return;
        }
        for v in start..g.n() {
            sub.push(v);
            count_cycles_rec(g, v + 1, k, sub, count);
            sub.pop();
        }
    }

    fn brute_force_count_cycles(g: &Graph, k: usize) -> usize {
        let mut count = 0usize;
        let mut sub = Vec::new();
        count_cycles_rec(g, 0, k, &mut sub, &mut count);
        count
    }

    #[test]
    fn short_cycle_counts() {
        let k4 = generators::complete(4).unwrap();
        assert_eq!(brute_force_count_cycles(&k4, 3), 4);
        assert_eq!(brute_force_count_cycles(&k4, 4), 3);
        assert_eq!(k4.count_short_cycles(), (4, 3));

        let g = k33();
        assert_eq!(brute_force_count_cycles(&g, 3), 0);
        assert_eq!(brute_force_count_cycles(&g, 4), 9);
        assert_eq!(g.count_short_cycles(), (0, 9));

        assert_eq!(generators::cycle(5).unwrap().count_short_cycles(), (0, 0));

        let pet = generators::petersen();
        assert_eq!(
            pet.count_short_cycles(),
            (
                brute_force_count_cycles(&pet, 3),
                brute_force_count_cycles(&pet, 4)
            )
        );
    }

    #[test]
    fn twins_and_false_twins() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.find_twins(), vec![(0, 1)]);
        assert!(k2.require_twin_free().is_err());

        let g = k33();
        assert!(g.find_twins().is_empty());
        let ft = g.find_false_twins();
        // exactly n(d-1)/2 pairs on K_{d,d}
        assert_eq!(ft.len(), 6);
        assert_eq!(ft.len(), g.n() * (g.max_degree() - 1) / 2);

        let pet = generators::petersen();
        assert!(pet.find_twins().is_empty());
        assert!(pet.find_false_twins().is_empty());
    }

    #[test]
    fn false_twin_bound_on_small_graphs() {
        for g in [
            k33(),
            generators::complete(4).unwrap(),
            generators::hypercube(3).unwrap(),
        ] {
            let bound = g.n() * (g.max_degree().saturating_sub(1)) / 2;
            assert!(g.find_false_twins().len() <= bound);
        }
    }

    #[test]
    fn distance_sets() {
        let g = p3();
        assert_eq!(g.distance_two_pairs(), vec![(0, 2)]);
        assert_eq!(g.pairs_within_distance_two(), vec![(0, 1), (0, 2), (1, 2)]);

        let c5 = generators::cycle(5).unwrap();
        assert_eq!(c5.pairs_within_distance_two().len(), 10); // every pair in C5
    }

    #[test]
    fn distance_at_least_three_means_disjoint_neighbourhoods() {
        let c7 = generators::cycle(7).unwrap();
        for u in 0..7 {
            let dist = c7.bfs_distances(u);
            for v in (u + 1)..7 {
                if dist[v] >= 3 {
                    let s = c7.nbhd_symmetric_difference(u, v).unwrap();
                    assert_eq!(s, c7.closed(u).union(c7.closed(v)));
                }
            }
        }
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1)]),
            Err(Error::IsolatedVertex(2))
        ));
        assert!(Graph::from_edges_allow_isolated(3, &[(0, 1)]).is_ok());
        assert!(matches!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { vertex: 5, .. })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = generators::petersen();
        let text = g.to_edge_list();
        let back = Graph::parse_edge_list(&text, false).unwrap();
        assert_eq!(back.edges(), g.edges());

        let commented = format!("# a comment\n\n{text}");
        assert!(Graph::parse_edge_list(&commented, false).is_ok());

        assert!(Graph::parse_edge_list("2 1\n0 1\n0 1\n", false).is_err());
        assert!(Graph::parse_edge_list("not a header\n", false).is_err());
    }

    #[test]
    fn multigraph_basics() {
        let m = MultiGraph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(m.degree(0), 2);
        assert!(m.has_parallel_edges());
        assert!(!m.has_loops());
        assert_eq!(m.regular_degree().unwrap(), 2);

        let looped = MultiGraph::from_edges(2, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(looped.degree(0), 3);
        assert!(looped.require_loopless().is_err());

        let text = "3 3\n0 1\n0 1\n1 2\n";
        let parsed = MultiGraph::parse_edge_list(text).unwrap();
        assert_eq!(parsed.edge_count(), 3);
        assert!(parsed.to_simple(false).is_err());
        assert!(parsed.regular_degree().is_err());
    }
}

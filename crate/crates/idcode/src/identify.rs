//! Verification of dominating / 2-dominating / separating / identifying
//! sets, forced-vertex computation, the auxiliary digraph on closed
//! neighbourhood inclusions, and generic code repair.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use serde::Serialize;

/// Default cap on recorded violation witnesses; the verdict itself is
/// always exact.
pub const DEFAULT_WITNESS_CAP: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Undominated,
    Unseparated,
    Twins,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witnesses: Vec<usize>,
}

/// A candidate code together with the verification verdict.
#[derive(Clone, Debug, Serialize)]
pub struct CodeCertificate {
    pub valid: bool,
    pub code: VertexSet,
    pub violations: Vec<Violation>,
}

/// Lowest vertex `v` with `N[v] ∩ code = ∅`, if any.
pub fn undominated_witness(g: &Graph, code: &VertexSet) -> Option<usize> {
    (0..g.n()).find(|&v| g.closed(v).is_disjoint(code))
}

pub fn is_dominating(g: &Graph, code: &VertexSet) -> bool {
    undominated_witness(g, code).is_none()
}

/// Lowest vertex outside `set` with fewer than two neighbours in `set`.
pub fn not_two_dominated_witness(g: &Graph, set: &VertexSet) -> Option<usize> {
    (0..g.n()).find(|&v| {
        !set.contains(v)
            && g.neighbors(v)
                .iter()
                .filter(|&&w| set.contains(w))
                .take(2)
                .count()
                < 2
    })
}

pub fn is_two_dominating(g: &Graph, set: &VertexSet) -> bool {
    not_two_dominated_witness(g, set).is_none()
}

/// True iff all vertex pairs have distinct code traces `N[·] ∩ code`.
///
/// When `code` dominates, only pairs at distance at most two need
/// checking: vertices at distance three or more have disjoint closed
/// neighbourhoods, so their nonempty traces differ. Without domination
/// the shortcut is unsound and the check falls back to all pairs.
pub fn is_separating(g: &Graph, code: &VertexSet) -> bool {
    if is_dominating(g, code) {
        g.pairs_within_distance_two()
            .iter()
            .all(|&(u, v)| g.sym_diff_intersects(u, v, code))
    } else {
        let n = g.n();
        (0..n).all(|u| ((u + 1)..n).all(|v| g.sym_diff_intersects(u, v, code)))
    }
}

/// Unseparated pairs under `code`, lowest indices first, at most `cap`
/// recorded. Twin pairs are unseparated under any code and are included.
pub fn unseparated_witnesses(g: &Graph, code: &VertexSet, cap: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let push = |u: usize, v: usize, out: &mut Vec<(usize, usize)>| {
        if out.len() < cap {
            out.push((u, v));
        }
        out.len() >= cap
    };
    if is_dominating(g, code) {
        for (u, v) in g.pairs_within_distance_two() {
            if !g.sym_diff_intersects(u, v, code) && push(u, v, &mut out) {
                break;
            }
        }
    } else {
        'outer: for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                if !g.sym_diff_intersects(u, v, code) && push(u, v, &mut out) {
                    break 'outer;
                }
            }
        }
    }
    out
}

/// Full verification with witness collection, capped at
/// [`DEFAULT_WITNESS_CAP`] recorded violations.
pub fn is_identifying_code(g: &Graph, code: &VertexSet) -> CodeCertificate {
    certify(g, code, DEFAULT_WITNESS_CAP)
}

/// Verification with an explicit witness cap. Scanning always completes,
/// so `valid` is exact even when recording stops.
pub fn certify(g: &Graph, code: &VertexSet, witness_cap: usize) -> CodeCertificate {
    let mut violations = Vec::new();
    let mut found_any = false;
    let record = |kind: ViolationKind, witnesses: Vec<usize>, violations: &mut Vec<Violation>| {
        if violations.len() < witness_cap {
            violations.push(Violation { kind, witnesses });
        }
    };

    let mut dominating = true;
    for v in 0..g.n() {
        if g.closed(v).is_disjoint(code) {
            dominating = false;
            found_any = true;
            record(ViolationKind::Undominated, vec![v], &mut violations);
        }
    }

    let scan_pair = |u: usize, v: usize, violations: &mut Vec<Violation>, found: &mut bool| {
        let diff = g.closed(u).symmetric_difference(g.closed(v));
        if diff.is_empty() {
            *found = true;
            record(ViolationKind::Twins, vec![u, v], violations);
        } else if diff.is_disjoint(code) {
            *found = true;
            record(ViolationKind::Unseparated, vec![u, v], violations);
        }
    };

    if dominating {
        for (u, v) in g.pairs_within_distance_two() {
            scan_pair(u, v, &mut violations, &mut found_any);
        }
    } else {
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                scan_pair(u, v, &mut violations, &mut found_any);
            }
        }
    }

    CodeCertificate {
        valid: !found_any,
        code: code.clone(),
        violations,
    }
}

/// The forced vertices of a twin-free graph and the non-forced proportion.
#[derive(Clone, Debug)]
pub struct ForcedReport {
    pub forced: VertexSet,
    /// Number of non-forced vertices, the numerator of `f(G) = x/n`.
    pub non_forced: usize,
    pub n: usize,
}

impl ForcedReport {
    pub fn f_ratio(&self) -> f64 {
        self.non_forced as f64 / self.n as f64
    }

    /// Exact comparison `f(G) >= 1/(d+1)` in integer arithmetic.
    pub fn f_ratio_at_least_inverse(&self, denom: usize) -> bool {
        self.non_forced * denom >= self.n
    }
}

/// Computes all forced vertices: every `w` with `N[u] Δ N[v] = {w}` for
/// some pair. Such a pair is necessarily adjacent (a non-adjacent pair
/// contributes both endpoints to the symmetric difference), so scanning
/// edges is complete.
pub fn forced_vertices(g: &Graph) -> Result<ForcedReport> {
    g.require_twin_free()?;
    let mut forced = VertexSet::empty(g.n());
    for (u, v) in g.edges() {
        let diff = g.closed(u).symmetric_difference(g.closed(v));
        if diff.len() == 1 {
            forced.insert(diff.min().expect("nonempty"));
        }
    }
    let non_forced = g.n() - forced.len();
    Ok(ForcedReport {
        forced,
        non_forced,
        n: g.n(),
    })
}

/// An arc `from → to` recording `N[to] = N[from] ∪ {label}`; the label is
/// exactly the vertex forced by the pair `(from, to)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HasseArc {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

/// The subgraph of the Hasse diagram of closed-neighbourhood inclusion
/// restricted to arcs whose neighbourhoods differ in a single vertex.
/// Acyclic by construction: arcs follow a strict partial order.
#[derive(Clone, Debug)]
pub struct HasseDigraph {
    n: usize,
    arcs: Vec<HasseArc>,
    out_adj: Vec<Vec<(usize, usize)>>,
    in_adj: Vec<Vec<(usize, usize)>>,
}

impl HasseDigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[HasseArc] {
        &self.arcs
    }

    /// Outgoing `(to, label)` pairs of `v`.
    pub fn successors(&self, v: usize) -> &[(usize, usize)] {
        &self.out_adj[v]
    }

    /// Incoming `(from, label)` pairs of `v`.
    pub fn predecessors(&self, v: usize) -> &[(usize, usize)] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    /// `{v}` together with everything reachable from `v` and everything
    /// that reaches `v`.
    pub fn forced_closure(&self, v: usize) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut closure = VertexSet::empty(self.n);
        closure.insert(v);
        for forward in [true, false] {
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                let next = if forward {
                    &self.out_adj[u]
                } else {
                    &self.in_adj[u]
                };
                for &(w, _) in next {
                    if !closure.contains(w) {
                        closure.insert(w);
                        stack.push(w);
                    }
                }
            }
        }
        Ok(closure)
    }

    /// Kahn topological check; the structure is acyclic by construction,
    /// this exists for the invariant suite.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = (0..self.n).map(|v| self.in_degree(v)).collect();
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &(w, _) in &self.out_adj[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        seen == self.n
    }
}

/// Builds the auxiliary digraph: an arc `u → v` labelled `x` exactly when
/// `N[u] ⊂ N[v]` with `N[v] ∖ N[u] = {x}`. Only adjacent pairs can carry
/// an arc, so edges are scanned.
pub fn hasse_digraph(g: &Graph) -> Result<HasseDigraph> {
    g.require_twin_free()?;
    let n = g.n();
    let mut arcs = Vec::new();
    for (a, b) in g.edges() {
        let diff = g.closed(a).symmetric_difference(g.closed(b));
        if diff.len() == 1 {
            let x = diff.min().expect("nonempty");
            if g.closed(b).contains(x) {
                arcs.push(HasseArc {
                    from: a,
                    to: b,
                    label: x,
                });
            } else {
                arcs.push(HasseArc {
                    from: b,
                    to: a,
                    label: x,
                });
            }
        }
    }
    arcs.sort_unstable_by_key(|arc| (arc.from, arc.to));
    let mut out_adj = vec![Vec::new(); n];
    let mut in_adj = vec![Vec::new(); n];
    for arc in &arcs {
        out_adj[arc.from].push((arc.to, arc.label));
        in_adj[arc.to].push((arc.from, arc.label));
    }
    Ok(HasseDigraph {
        n,
        arcs,
        out_adj,
        in_adj,
    })
}

/// Extends `code` to a valid identifying code by repeatedly adding the
/// vertex that resolves the most open violations (ties broken by lowest
/// index). Terminates because `V(G)` is an identifying code of any
/// twin-free graph.
pub fn greedy_repair(g: &Graph, code: &VertexSet) -> Result<VertexSet> {
    g.require_twin_free()?;
    let n = g.n();
    let mut code = code.clone();
    let pairs = g.pairs_within_distance_two();
    loop {
        let mut gain = vec![0usize; n];
        let mut open = 0usize;
        for v in 0..n {
            if g.closed(v).is_disjoint(&code) {
                open += 1;
                for w in g.closed(v).iter() {
                    gain[w] += 1;
                }
            }
        }
        for &(u, v) in &pairs {
            let diff = g.closed(u).symmetric_difference(g.closed(v));
            if diff.is_disjoint(&code) {
                open += 1;
                for w in diff.iter() {
                    gain[w] += 1;
                }
            }
        }
        if open == 0 {
            // dominating and separated at distance <= 2, hence separating
            debug_assert!(is_separating(g, &code));
            return Ok(code);
        }
        let best = (0..n)
            .filter(|&w| !code.contains(w) && gain[w] > 0)
            .max_by(|&a, &b| gain[a].cmp(&gain[b]).then(b.cmp(&a)))
            .expect("twin-free graph always has a resolving vertex");
        code.insert(best);
    }
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

    fn vs(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, members.iter().copied())
    }

    #[test]
    fn domination() {
        let g = p3();
        assert!(is_dominating(&g, &vs(3, &[1])));
        assert_eq!(undominated_witness(&g, &vs(3, &[0])), Some(2));
        assert!(is_dominating(&g, &VertexSet::full(3)));
    }

    #[test]
    fn two_domination() {
        let c5 = generators::cycle(5).unwrap();
        assert!(is_two_dominating(&c5, &vs(5, &[0, 1, 2, 3])));
        assert_eq!(not_two_dominated_witness(&c5, &vs(5, &[0, 2])), Some(3));
        assert!(is_two_dominating(&c5, &VertexSet::full(5)));
    }

    // Oracle: all-pairs separation check, independent of the optimized path.
    fn naive_separating(g: &Graph, code: &VertexSet) -> bool {
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                if g.closed(u)
                    .intersection(code)
                    .eq(&g.closed(v).intersection(code))
                {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn separation() {
        let g = k33();
        assert!(is_separating(&g, &vs(6, &[0, 1, 3, 4])));
        assert!(naive_separating(&g, &vs(6, &[0, 1, 3, 4])));

        let c = vs(6, &[0, 3, 4]);
        assert!(!is_separating(&g, &c));
        assert!(!naive_separating(&g, &c));
        let cert = is_identifying_code(&g, &c);
        assert!(!cert.valid);
        assert!(cert
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::Unseparated && v.witnesses == vec![1, 2]));

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(!is_separating(&k2, &VertexSet::full(2)));
        assert_eq!(
            unseparated_witnesses(&k2, &VertexSet::full(2), 8),
            vec![(0, 1)]
        );
    }

    #[test]
    fn certificate_json_schema() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let cert = is_identifying_code(&k2, &vs(2, &[0]));
        let json = serde_json::to_value(&cert).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "valid": false,
                "code": [0],
                "violations": [{ "kind": "twins", "witnesses": [0, 1] }],
            })
        );

        let g = p3();
        let json = serde_json::to_value(is_identifying_code(&g, &vs(3, &[0, 2]))).unwrap();
        assert_eq!(
            json,
            serde_json::json!({ "valid": true, "code": [0, 2], "violations": [] })
        );
    }

    #[test]
    fn witness_listing_respects_cap() {
        let g = k33();
        let empty = VertexSet::empty(6);
        let all = unseparated_witnesses(&g, &empty, 64);
        assert!(!all.is_empty());
        let capped = unseparated_witnesses(&g, &empty, 2);
        assert_eq!(capped.len(), 2);
        assert_eq!(&all[..2], &capped[..]);
    }

    #[test]
    fn distance_two_shortcut_matches_all_pairs() {
        // random-ish codes over a few fixed graphs, including non-dominating
        let graphs = vec![
            p3(),
            k33(),
            generators::petersen(),
            generators::cycle(7).unwrap(),
            generators::hypercube(3).unwrap(),
        ];
        for g in graphs {
            let n = g.n();
            for mask in 0..(1usize << n.min(10)) {
                let code = VertexSet::from_iter(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                assert_eq!(is_separating(&g, &code), naive_separating(&g, &code));
            }
        }
    }

    #[test]
    fn certificates() {
        let g = k33();
        assert!(is_identifying_code(&g, &vs(6, &[0, 1, 3, 4])).valid);

        let g = p3();
        let cert = is_identifying_code(&g, &vs(3, &[0, 2]));
        assert!(cert.valid && cert.violations.is_empty());
        // exhaustive: {0,2} is the only valid 2-subset of P3
        let mut valid_pairs = Vec::new();
        for u in 0..3 {
            for v in (u + 1)..3 {
                if is_identifying_code(&g, &vs(3, &[u, v])).valid {
                    valid_pairs.push((u, v));
                }
            }
        }
        assert_eq!(valid_pairs, vec![(0, 2)]);

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        for mask in 0..4usize {
            let code = VertexSet::from_iter(2, (0..2).filter(|&v| mask >> v & 1 == 1));
            let cert = is_identifying_code(&k2, &code);
            assert!(!cert.valid);
            assert!(cert
                .violations
                .iter()
                .any(|v| v.kind == ViolationKind::Twins));
        }
    }

    #[test]
    fn monotone_supersets_stay_valid() {
        let g = generators::petersen();
        let base = greedy_repair(&g, &VertexSet::empty(10)).unwrap();
        assert!(is_identifying_code(&g, &base).valid);
        for extra in 0..10 {
            let mut bigger = base.clone();
            bigger.insert(extra);
            assert!(is_identifying_code(&g, &bigger).valid);
        }
    }

    #[test]
    fn forced_vertices_on_p3() {
        let g = p3();
        let report = forced_vertices(&g).unwrap();
        assert_eq!(report.forced.to_vec(), vec![0, 2]);
        assert_eq!(report.non_forced, 1);
        assert!(report.f_ratio_at_least_inverse(g.max_degree() + 1));
    }

    #[test]
    fn forced_vertices_requires_twin_free() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            forced_vertices(&k2),
            Err(Error::TwinsPresent(0, 1))
        ));
        assert!(matches!(
            greedy_repair(&k2, &VertexSet::empty(2)),
            Err(Error::TwinsPresent(0, 1))
        ));
    }

    #[test]
    fn hasse_digraph_on_p3() {
        let h = hasse_digraph(&p3()).unwrap();
        assert_eq!(
            h.arcs(),
            &[
                HasseArc {
                    from: 0,
                    to: 1,
                    label: 2
                },
                HasseArc {
                    from: 2,
                    to: 1,
                    label: 0
                },
            ]
        );
        assert!(h.is_acyclic());
        assert_eq!(h.forced_closure(1).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(h.forced_closure(0).unwrap().to_vec(), vec![0, 1]);
    }

    #[test]
    fn hasse_digraph_on_k33_is_empty() {
        let h = hasse_digraph(&k33()).unwrap();
        assert!(h.arcs().is_empty());
        // every vertex is isolated in the digraph: closure is the singleton
        assert_eq!(h.forced_closure(4).unwrap().to_vec(), vec![4]);
    }

    #[test]
    fn arc_labels_are_exactly_the_forced_vertices() {
        for g in [
            p3(),
            generators::petersen(),
            generators::hypercube(3).unwrap(),
        ] {
            let report = forced_vertices(&g).unwrap();
            let h = hasse_digraph(&g).unwrap();
            let labels = VertexSet::from_iter(g.n(), h.arcs().iter().map(|a| a.label));
            assert_eq!(labels, report.forced);
        }
    }

    #[test]
    fn greedy_repair_behaviour() {
        let g = p3();
        let repaired = greedy_repair(&g, &VertexSet::empty(3)).unwrap();
        assert!(is_identifying_code(&g, &repaired).valid);
        assert!(repaired.len() <= 3);

        let valid = vs(3, &[0, 2]);
        assert_eq!(greedy_repair(&g, &valid).unwrap(), valid);
    }
}

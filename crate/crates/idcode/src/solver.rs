//! Exact and heuristic minimum identifying code computation via a
//! hitting-set reformulation, plus exact minimum domination.
//!
//! A set `C` is an identifying code iff it hits every constraint in the
//! family `{N[u]} ∪ {N[u] Δ N[v] : dist(u, v) <= 2}`: the neighbourhood
//! constraints encode domination and the symmetric-difference constraints
//! encode separation, which only needs checking at distance at most two.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::identify;
use crate::vertex_set::VertexSet;
use std::collections::HashSet;
use std::time::{Duration, Instant};

/// Where a constraint came from; useful when reporting twins or forced
/// vertices discovered during construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintOrigin {
    /// Domination constraint `N[u]`.
    Neighborhood(usize),
    /// Separation constraint `N[u] Δ N[v]` for a pair at distance <= 2.
    Separation(usize, usize),
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub members: VertexSet,
    pub origin: ConstraintOrigin,
}

/// The deduplicated constraint family of a graph. Hitting sets of the
/// family are exactly the identifying codes; an empty constraint would
/// witness a twin pair and is rejected at construction.
#[derive(Clone, Debug)]
pub struct ConstraintFamily {
    n: usize,
    pub constraints: Vec<Constraint>,
}

impl ConstraintFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    /// Singleton constraints; their members are exactly the forced
    /// vertices (every code must contain them), plus any isolated
    /// vertices when those are permitted.
    pub fn singleton_members(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for c in &self.constraints {
            if c.members.len() == 1 {
                out.insert(c.members.min().expect("nonempty"));
            }
        }
        out
    }

    pub fn is_hitting_set(&self, set: &VertexSet) -> bool {
        self.constraints.iter().all(|c| c.members.intersects(set))
    }
}

/// Builds the constraint family, deduplicated, erroring with
/// `TwinsPresent` if any separation constraint is empty.
pub fn build_constraints(g: &Graph) -> Result<ConstraintFamily> {
    let n = g.n();
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut constraints = Vec::new();
    for u in 0..n {
        let members = g.closed(u).clone();
        if seen.insert(members.clone()) {
            constraints.push(Constraint {
                members,
                origin: ConstraintOrigin::Neighborhood(u),
            });
        }
    }
    for (u, v) in g.pairs_within_distance_two() {
        let members = g.closed(u).symmetric_difference(g.closed(v));
        if members.is_empty() {
            return Err(Error::TwinsPresent(u, v));
        }
        if seen.insert(members.clone()) {
            constraints.push(Constraint {
                members,
                origin: ConstraintOrigin::Separation(u, v),
            });
        }
    }
    Ok(ConstraintFamily { n, constraints })
}

/// Domination-only family `{N[u] : u}`; hitting sets are dominating sets.
pub fn build_domination_constraints(g: &Graph) -> ConstraintFamily {
    let n = g.n();
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut constraints = Vec::new();
    for u in 0..n {
        let members = g.closed(u).clone();
        if seen.insert(members.clone()) {
            constraints.push(Constraint {
                members,
                origin: ConstraintOrigin::Neighborhood(u),
            });
        }
    }
    ConstraintFamily { n, constraints }
}

/// Outcome of an exact solve. `optimal` is false when the time budget ran
/// out; `gamma` and `code` then describe the best incumbent found.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub gamma: usize,
    pub code: VertexSet,
    pub optimal: bool,
}

struct Search {
    constraints: Vec<VertexSet>,
    n: usize,
    incumbent: VertexSet,
    deadline: Option<Instant>,
    timed_out: bool,
    nodes: u64,
}

impl Search {
    /// Greedy packing of pairwise-disjoint uncovered constraints plus a
    /// counting bound: any vertex hits at most `max_hits` constraints.
    fn lower_bound(&self, uncovered: &[usize]) -> usize {
        if uncovered.is_empty() {
            return 0;
        }
        let mut used = VertexSet::empty(self.n);
        let mut packing = 0usize;
        let mut order: Vec<usize> = uncovered.to_vec();
        order.sort_unstable_by_key(|&i| self.constraints[i].len());
        for &i in &order {
            if self.constraints[i].is_disjoint(&used) {
                packing += 1;
                used.union_with(&self.constraints[i]);
            }
        }
        let mut hits = vec![0usize; self.n];
        for &i in uncovered {
            for v in self.constraints[i].iter() {
                hits[v] += 1;
            }
        }
        let max_hits = hits.iter().copied().max().unwrap_or(1).max(1);
        packing.max(uncovered.len().div_ceil(max_hits))
    }

    fn recurse(&mut self, chosen: &mut VertexSet, chosen_len: usize, uncovered: Vec<usize>) {
        self.nodes += 1;
        if let Some(deadline) = self.deadline {
            if self.nodes % 256 == 0 && Instant::now() >= deadline {
                self.timed_out = true;
            }
        }
        if self.timed_out {
            return;
        }
        if uncovered.is_empty() {
            if chosen_len < self.incumbent.len() {
                self.incumbent = chosen.clone();
            }
            return;
        }
        if chosen_len + self.lower_bound(&uncovered) >= self.incumbent.len() {
            return;
        }
        // unit propagation: singletons are forced into the solution
        if let Some(&unit) = uncovered.iter().find(|&&i| self.constraints[i].len() == 1) {
            let v = self.constraints[unit].min().expect("nonempty");
            let rest: Vec<usize> = uncovered
                .iter()
                .copied()
                .filter(|&i| !self.constraints[i].contains(v))
                .collect();
            chosen.insert(v);
            self.recurse(chosen, chosen_len + 1, rest);
            chosen.remove(v);
            return;
        }
        // branch on the smallest uncovered constraint, lowest index first
        let &branch = uncovered
            .iter()
            .min_by_key(|&&i| (self.constraints[i].len(), i))
            .expect("nonempty");
        let members: Vec<usize> = self.constraints[branch].to_vec();
        for v in members {
            let rest: Vec<usize> = uncovered
                .iter()
                .copied()
                .filter(|&i| !self.constraints[i].contains(v))
                .collect();
            chosen.insert(v);
            self.recurse(chosen, chosen_len + 1, rest);
            chosen.remove(v);
            if self.timed_out {
                return;
            }
        }
    }
}

fn solve_family(
    family: &ConstraintFamily,
    initial: VertexSet,
    budget: Option<Duration>,
) -> SolveOutcome {
    // drop constraints that contain another constraint: hitting the
    // smaller one hits the larger for free
    let mut sets: Vec<VertexSet> = family
        .constraints
        .iter()
        .map(|c| c.members.clone())
        .collect();
    sets.sort_unstable_by_key(VertexSet::len);
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    'outer: for s in sets {
        for k in &kept {
            if k.is_subset_of(&s) {
                continue 'outer;
            }
        }
        kept.push(s);
    }

    let mut search = Search {
        n: family.n(),
        constraints: kept,
        incumbent: initial,
        deadline: budget.map(|b| Instant::now() + b),
        timed_out: false,
        nodes: 0,
    };
    let all: Vec<usize> = (0..search.constraints.len()).collect();
    let mut chosen = VertexSet::empty(family.n());
    search.recurse(&mut chosen, 0, all);
    SolveOutcome {
        gamma: search.incumbent.len(),
        code: search.incumbent,
        optimal: !search.timed_out,
    }
}

/// Minimum identifying code by branch and bound over the hitting-set
/// family. Forced vertices enter through unit propagation, the initial
/// incumbent comes from [`greedy_code`], and `budget = None` means solve
/// to proven optimality.
pub fn solve_exact(g: &Graph, budget: Option<Duration>) -> Result<SolveOutcome> {
    let family = build_constraints(g)?;
    let initial = greedy_code(g)?;
    debug_assert!(family.is_hitting_set(&initial));
    let outcome = solve_family(&family, initial, budget);
    debug_assert!(!outcome.optimal || identify::is_identifying_code(g, &outcome.code).valid);
    Ok(outcome)
}

fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Ground-truth oracle: exhaustive ascending-size subset search using the
/// verifier directly. Exponential; intended for n <= 20.
pub fn solve_naive(g: &Graph) -> Result<SolveOutcome> {
    g.require_twin_free()?;
    let n = g.n();
    if n > 24 {
        return Err(Error::domain(
            "n",
            n,
            "exhaustive search is capped at n <= 24",
        ));
    }
    for size in 0..=n {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let code = VertexSet::from_iter(n, subset.iter().copied());
            if identify::is_identifying_code(g, &code).valid {
                return Ok(SolveOutcome {
                    gamma: size,
                    code,
                    optimal: true,
                });
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    unreachable!("V(G) is an identifying code of a twin-free graph")
}

/// Greedy cover: repeatedly add the vertex hitting the most uncovered
/// constraints, ties to the lowest index.
fn greedy_hitting(family: &ConstraintFamily) -> VertexSet {
    let n = family.n();
    let mut set = VertexSet::empty(n);
    let mut uncovered: Vec<&VertexSet> = family.constraints.iter().map(|c| &c.members).collect();
    while !uncovered.is_empty() {
        let mut gain = vec![0usize; n];
        for c in &uncovered {
            for v in c.iter() {
                gain[v] += 1;
            }
        }
        let best = (0..n)
            .max_by(|&a, &b| gain[a].cmp(&gain[b]).then(b.cmp(&a)))
            .expect("nonempty ground set");
        debug_assert!(gain[best] > 0);
        set.insert(best);
        uncovered.retain(|c| !c.contains(best));
    }
    set
}

/// Greedy set cover over the identifying-code constraint family. Always
/// returns a valid code.
pub fn greedy_code(g: &Graph) -> Result<VertexSet> {
    let family = build_constraints(g)?;
    let code = greedy_hitting(&family);
    debug_assert!(identify::is_identifying_code(g, &code).valid);
    Ok(code)
}

/// Minimum dominating set via the domination-only family.
pub fn solve_exact_domination(g: &Graph, budget: Option<Duration>) -> SolveOutcome {
    let family = build_domination_constraints(g);
    let initial = greedy_hitting(&family);
    solve_family(&family, initial, budget)
}

//! Atom dependency graph, SCC stratification, odd-negative-cycle check.
//!
//! The graph has one node per program atom and an edge from each head atom
//! to every body atom (negative polarity for negated body atoms) and to
//! every other head atom of the same rule (positive). A pair of atoms can
//! be linked by two parallel edges of opposite polarity; merging them would
//! hide odd cycles.
//!
//! Components are ordered so that every edge points from a later component
//! to an earlier one — dependencies first. Ties between incomparable
//! components default to first-interned-atom order; a seeded variant
//! permutes those ties to exercise order-independence downstream.

use crate::atoms::AtomId;
use crate::program::{Program, Rule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

pub type Edge = (AtomId, AtomId, Polarity);

#[derive(Clone, Debug, Default)]
pub struct DependencyGraph {
    /// Program atoms, ascending by id.
    pub nodes: Vec<AtomId>,
    pub edges: BTreeSet<Edge>,
}

fn edges_of(rules: &[Rule], edges: &mut BTreeSet<Edge>) {
    for r in rules {
        for &h in &r.head {
            for &b in &r.pos_body {
                edges.insert((h, b, Polarity::Positive));
            }
            for &b in &r.neg_body {
                edges.insert((h, b, Polarity::Negative));
            }
            for &h2 in &r.head {
                if h2 != h {
                    edges.insert((h, h2, Polarity::Positive));
                }
            }
        }
    }
}

/// Build the dependency graph of a program. Empty-head rules contribute
/// nodes but no edges. Nodes are the atoms occurring in rules plus any
/// declared program atoms, so every edge endpoint is a node.
pub fn dependency_graph(p: &Program) -> DependencyGraph {
    let nodes: Vec<AtomId> = p.universe().into_iter().collect();
    let mut edges = BTreeSet::new();
    edges_of(&p.rules, &mut edges);
    DependencyGraph { nodes, edges }
}

/// Graph induced by a bare rule set: nodes are the atoms the rules
/// mention. Cheaper than wrapping the rules in a program when only the
/// cycle structure matters.
pub fn rules_graph(rules: &[Rule]) -> DependencyGraph {
    let nodes: Vec<AtomId> = rules
        .iter()
        .flat_map(|r| r.atoms())
        .collect::<BTreeSet<AtomId>>()
        .into_iter()
        .collect();
    let mut edges = BTreeSet::new();
    edges_of(rules, &mut edges);
    DependencyGraph { nodes, edges }
}

/// Strongly connected components in topological order: every edge of the
/// underlying graph runs from a later component into an earlier one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SccOrder {
    pub components: Vec<BTreeSet<AtomId>>,
}

impl SccOrder {
    pub fn n(&self) -> usize {
        self.components.len()
    }

    /// Cumulative prefix of the first `j` components (1-based, j=0 empty).
    pub fn prefix(&self, j: usize) -> BTreeSet<AtomId> {
        self.components
            .iter()
            .take(j)
            .flat_map(|c| c.iter().copied())
            .collect()
    }

    /// 1-based index of the component containing `a`.
    pub fn component_of(&self, a: AtomId) -> Option<usize> {
        self.components
            .iter()
            .position(|c| c.contains(&a))
            .map(|i| i + 1)
    }
}

/// Kosaraju SCC over an index-based adjacency list; iterative so deep
/// chains cannot overflow the stack. Returns a component id per node.
fn kosaraju(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    // pass 1: post-order finish times
    let mut finish = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        seen[root] = true;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                finish.push(v);
                stack.pop();
            }
        }
    }
    // pass 2: reversed edges, roots in reverse finish order
    let mut radj = vec![Vec::new(); n];
    for (v, outs) in adj.iter().enumerate() {
        for &w in outs {
            radj[w].push(v);
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for &root in finish.iter().rev() {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = next;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &w in &radj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

fn order_components(g: &DependencyGraph, mut pick: impl FnMut(usize) -> usize) -> SccOrder {
    let nodes = &g.nodes;
    let idx = |a: AtomId| nodes.binary_search(&a).expect("edge endpoint not a node");
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for &(u, v, _) in &g.edges {
        adj[idx(u)].push(idx(v));
    }
    let comp = kosaraju(&adj);
    let ncomp = comp.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut members: Vec<BTreeSet<AtomId>> = vec![BTreeSet::new(); ncomp];
    for (i, &c) in comp.iter().enumerate() {
        members[c].insert(nodes[i]);
    }
    // earliest-interned member, the default tie-break key
    let keys: Vec<AtomId> = members
        .iter()
        .map(|m| *m.iter().next().expect("empty component"))
        .collect();
    // condensation arcs follow original arcs: cu depends on cv
    let mut deps: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncomp];
    let mut rdeps: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncomp];
    for &(u, v, _) in &g.edges {
        let (cu, cv) = (comp[idx(u)], comp[idx(v)]);
        if cu != cv {
            deps[cu].insert(cv);
            rdeps[cv].insert(cu);
        }
    }
    // Kahn over the condensation: a component becomes available once all
    // components it depends on are placed; `pick` breaks ties.
    let mut pending: Vec<usize> = deps.iter().map(BTreeSet::len).collect();
    let mut avail: Vec<usize> = (0..ncomp).filter(|&c| pending[c] == 0).collect();
    let mut components = Vec::with_capacity(ncomp);
    while !avail.is_empty() {
        avail.sort_by_key(|&c| keys[c]);
        let c = avail.remove(pick(avail.len()));
        components.push(std::mem::take(&mut members[c]));
        for &d in &rdeps[c] {
            pending[d] -= 1;
            if pending[d] == 0 {
                avail.push(d);
            }
        }
    }
    assert_eq!(components.len(), ncomp, "condensation is acyclic");
    SccOrder { components }
}

/// Deterministic topological SCC order (first-occurrence tie-breaking).
pub fn scc_topological(g: &DependencyGraph) -> SccOrder {
    order_components(g, |_| 0)
}

/// Same partition, with ties among simultaneously available components
/// broken by a seeded RNG. Seed 0 is a valid permutation source too.
pub fn scc_topological_seeded(g: &DependencyGraph, seed: u64) -> SccOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order_components(g, move |n| rng.gen_range(0..n))
}

/// Rules grouped by the component of their head atoms, in component order.
/// Layer `j` (1-based) holds exactly the rules whose atoms all lie in the
/// prefix Γ_j but not all in Γ_{j−1}.
#[derive(Clone, Debug, Default)]
pub struct Stratification {
    pub layers: Vec<Vec<Rule>>,
}

pub fn stratify(p: &Program, order: &SccOrder) -> Stratification {
    // indexed up front: component_of is a scan, too slow for big programs
    let mut comp_of = BTreeMap::new();
    for (i, c) in order.components.iter().enumerate() {
        for &a in c {
            comp_of.insert(a, i + 1);
        }
    }
    let mut layers = vec![Vec::new(); order.n()];
    for r in &p.rules {
        let layer = r
            .atoms()
            .filter_map(|a| comp_of.get(&a).copied())
            .max()
            .unwrap_or(1);
        assert!(layer >= 1 && layer <= order.n(), "rule atom outside the order");
        layers[layer - 1].push(r.clone());
    }
    Stratification { layers }
}

/// Check that every cumulative prefix of the order is a splitting set of
/// the program: a rule whose head touches Γ_j lies entirely inside Γ_j.
pub fn splitting_prefixes_ok(p: &Program, order: &SccOrder) -> bool {
    for j in 1..=order.n() {
        let prefix = order.prefix(j);
        for r in &p.rules {
            if r.head.iter().any(|a| prefix.contains(a))
                && !r.atoms().all(|a| prefix.contains(&a))
            {
                return false;
            }
        }
    }
    true
}

/// True iff some directed cycle carries an odd number of negative edges.
///
/// Positive edges are split through a fresh midpoint so that every original
/// negative edge contributes odd length and every positive edge even length;
/// a strongly connected digraph then has an odd directed cycle exactly when
/// its underlying undirected graph is non-bipartite. Linear in the edge
/// count.
pub fn has_odd_negative_cycle(g: &DependencyGraph) -> bool {
    let base = g.nodes.len();
    let idx = |a: AtomId| g.nodes.binary_search(&a).expect("edge endpoint not a node");
    // transformed digraph over base nodes + one midpoint per positive edge
    let mut n = base;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); base];
    for &(u, v, pol) in &g.edges {
        let (ui, vi) = (idx(u), idx(v));
        match pol {
            Polarity::Negative => adj[ui].push(vi),
            Polarity::Positive => {
                adj.push(vec![vi]);
                adj[ui].push(n);
                n += 1;
            }
        }
    }
    let comp = kosaraju(&adj);
    // 2-color the undirected restriction of each component
    let mut undirected: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, outs) in adj.iter().enumerate() {
        for &v in outs {
            if comp[u] == comp[v] {
                if u == v {
                    return true; // negative self-loop
                }
                undirected[u].push(v);
                undirected[v].push(u);
            }
        }
    }
    let mut color: Vec<i8> = vec![-1; n];
    for start in 0..n {
        if color[start] != -1 {
            continue;
        }
        color[start] = 0;
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for &v in &undirected[u] {
                if color[v] == -1 {
                    color[v] = 1 - color[u];
                    queue.push(v);
                } else if color[v] == color[u] {
                    return true;
                }
            }
        }
    }
    false
}

/// DOT rendering of the condensation, one box per component, dashed edges
/// where some underlying edge is negative.
pub fn condensation_dot(p: &Program, g: &DependencyGraph, order: &SccOrder) -> String {
    use std::fmt::Write as _;
    let mut out = String::from("digraph condensation {\n  rankdir=BT;\n");
    for (i, c) in order.components.iter().enumerate() {
        let mut label: Vec<&str> = c.iter().map(|&a| p.sig.name(a)).collect();
        label.sort_unstable();
        let _ = writeln!(
            out,
            "  c{} [shape=box, label=\"C{}: {}\"];",
            i + 1,
            i + 1,
            label.join(", ")
        );
    }
    let comp_of = |a: AtomId| order.component_of(a).expect("node outside order");
    let mut arcs: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    for &(u, v, pol) in &g.edges {
        let (cu, cv) = (comp_of(u), comp_of(v));
        if cu != cv {
            let neg = arcs.entry((cu, cv)).or_insert(false);
            *neg |= pol == Polarity::Negative;
        }
    }
    for ((cu, cv), neg) in arcs {
        let style = if neg { " [style=dashed, label=\"not\"]" } else { "" };
        let _ = writeln!(out, "  c{cu} -> c{cv}{style};");
    }
    out.push_str("}\n");
    out
}

//! Planar orders, their conjugate orders, and input/output windows.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result, Violation};
use crate::graph::{EdgeId, ProgressiveGraph};

/// A sequence of edge ids, meant to be a permutation of some graph's edges.
/// Ranks are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PlanarOrder(Vec<EdgeId>);

impl PlanarOrder {
    pub fn new<I, E>(seq: I) -> Self
    where
        I: IntoIterator<Item = E>,
        E: Into<EdgeId>,
    {
        PlanarOrder(seq.into_iter().map(Into::into).collect())
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, EdgeId> {
        self.0.iter()
    }

    pub fn rank(&self, e: &str) -> Option<usize> {
        self.0.iter().position(|x| x.as_str() == e).map(|p| p + 1)
    }

    pub fn into_vec(self) -> Vec<EdgeId> {
        self.0
    }
}

impl fmt::Display for PlanarOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A progressive graph together with a validated planar order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PopGraph {
    graph: ProgressiveGraph,
    /// Edge index at each position.
    seq: Vec<usize>,
    /// Position (0-based) of each edge index.
    pos: Vec<usize>,
}

/// Checks P1 and P2 for `seq` on `g` and wraps the pair on success. Every
/// violation is reported, not only the first.
pub fn validate_planar_order(g: ProgressiveGraph, seq: &[EdgeId]) -> Result<PopGraph> {
    PopGraph::new(g, seq)
}

impl PopGraph {
    pub fn new(graph: ProgressiveGraph, seq: &[EdgeId]) -> Result<Self> {
        let ixs = permutation_indices(&graph, seq)?;
        let violations = axiom_violations(&graph, &ixs);
        if !violations.is_empty() {
            return Err(Error::InvalidPlanarOrder(violations));
        }
        Ok(Self::from_indices(graph, ixs))
    }

    pub fn from_order(graph: ProgressiveGraph, order: &PlanarOrder) -> Result<Self> {
        Self::new(graph, order.as_slice())
    }

    /// Wraps an already validated index sequence.
    pub(crate) fn from_indices(graph: ProgressiveGraph, seq: Vec<usize>) -> Self {
        let mut pos = vec![0; seq.len()];
        for (p, &e) in seq.iter().enumerate() {
            pos[e] = p;
        }
        PopGraph { graph, seq, pos }
    }

    pub fn graph(&self) -> &ProgressiveGraph {
        &self.graph
    }

    pub fn into_graph(self) -> ProgressiveGraph {
        self.graph
    }

    pub fn order(&self) -> PlanarOrder {
        PlanarOrder(self.seq.iter().map(|&e| self.graph.edge_id(e).clone()).collect())
    }

    pub fn edge_count(&self) -> usize {
        self.seq.len()
    }

    /// The edge at 1-based rank `k`.
    pub fn edge_at(&self, k: usize) -> Option<&EdgeId> {
        k.checked_sub(1)
            .and_then(|p| self.seq.get(p))
            .map(|&e| self.graph.edge_id(e))
    }

    pub fn rank(&self, e: &str) -> Result<usize> {
        Ok(self.pos[self.graph.require_edge(e)?] + 1)
    }

    pub fn precedes(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.rank(a)? < self.rank(b)?)
    }

    pub(crate) fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub(crate) fn pos(&self, e: usize) -> usize {
        self.pos[e]
    }

    /// `items` sorted by position.
    pub(crate) fn sorted(&self, items: &[usize]) -> Vec<usize> {
        let mut v = items.to_vec();
        v.sort_by_key(|&e| self.pos[e]);
        v
    }

    pub(crate) fn inputs_sorted(&self) -> Vec<usize> {
        self.sorted(self.graph.input_ixs())
    }

    pub(crate) fn outputs_sorted(&self) -> Vec<usize> {
        self.sorted(self.graph.output_ixs())
    }

    /// `(i⁻(e), i⁺(e))` as edge indices; `(e, e)` for inputs.
    pub(crate) fn input_window_ix(&self, e: usize) -> (usize, usize) {
        if self.graph.is_input_ix(e) {
            return (e, e);
        }
        let g = &self.graph;
        let reaching = self.inputs_sorted().into_iter().filter(|&i| g.sreach(i, e));
        min_max(reaching).expect("every non-input edge is reached by an input")
    }

    /// `(o⁻(e), o⁺(e))` as edge indices; `(e, e)` for outputs.
    pub(crate) fn output_window_ix(&self, e: usize) -> (usize, usize) {
        if self.graph.is_output_ix(e) {
            return (e, e);
        }
        let g = &self.graph;
        let reached = self.outputs_sorted().into_iter().filter(|&o| g.sreach(e, o));
        min_max(reached).expect("every non-output edge reaches an output")
    }
}

fn min_max(mut it: impl Iterator<Item = usize>) -> Option<(usize, usize)> {
    let first = it.next()?;
    let last = it.last().unwrap_or(first);
    Some((first, last))
}

pub(crate) fn permutation_indices(g: &ProgressiveGraph, seq: &[EdgeId]) -> Result<Vec<usize>> {
    if seq.len() != g.edge_count() {
        return Err(Error::NotAPermutation(format!(
            "{} ids given for {} edges",
            seq.len(),
            g.edge_count()
        )));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(seq.len());
    for id in seq {
        let e = g
            .edge_ix(id.as_str())
            .ok_or_else(|| Error::NotAPermutation(format!("unknown edge {id}")))?;
        if !seen.insert(e) {
            return Err(Error::NotAPermutation(format!("edge {id} repeated")));
        }
        out.push(e);
    }
    Ok(out)
}

/// All P1 and P2 violations of an index sequence, by exhaustive pair and
/// triple enumeration.
pub(crate) fn axiom_violations(g: &ProgressiveGraph, seq: &[usize]) -> Vec<Violation> {
    let id = |e: usize| g.edge_id(e).clone();
    let mut out = axiom_violations_p1(g, seq);
    for (i, &a) in seq.iter().enumerate() {
        for k in i + 2..seq.len() {
            let c = seq[k];
            if !g.sreach(a, c) {
                continue;
            }
            for &b in &seq[i + 1..k] {
                if !g.sreach(a, b) && !g.sreach(b, c) {
                    out.push(Violation::P2 {
                        first: id(a),
                        middle: id(b),
                        last: id(c),
                    });
                }
            }
        }
    }
    out
}

/// P2 restricted to consecutive edges: for `t(e1) = s(e2)` and
/// `e1 ≺ e3 ≺ e2`, require `e1 → e3` or `e3 → e2`. Equivalent to full P2,
/// but only walks the windows between adjacent edge pairs.
pub(crate) fn adjacent_p2_violations(g: &ProgressiveGraph, seq: &[usize]) -> Vec<Violation> {
    let mut pos = vec![0; seq.len()];
    for (p, &e) in seq.iter().enumerate() {
        pos[e] = p;
    }
    let mut out = Vec::new();
    for &e1 in seq {
        for &e2 in g.out_ixs(g.dst_ix(e1)) {
            let (lo, hi) = (pos[e1], pos[e2]);
            if lo >= hi {
                continue;
            }
            for &e3 in &seq[lo + 1..hi] {
                if !g.sreach(e1, e3) && !g.sreach(e3, e2) {
                    out.push(Violation::P2 {
                        first: g.edge_id(e1).clone(),
                        middle: g.edge_id(e3).clone(),
                        last: g.edge_id(e2).clone(),
                    });
                }
            }
        }
    }
    out
}

/// Exhaustive P1/P2 check of an arbitrary sequence.
pub fn check_axioms(g: &ProgressiveGraph, seq: &[EdgeId]) -> Result<Vec<Violation>> {
    let ixs = permutation_indices(g, seq)?;
    Ok(axiom_violations(g, &ixs))
}

/// P1 check plus the adjacent-pair form of P2. Agrees with
/// [`check_axioms`] on whether a sequence is a planar order; the witnesses
/// reported for P2 are adjacent triples.
pub fn check_axioms_adjacent(g: &ProgressiveGraph, seq: &[EdgeId]) -> Result<Vec<Violation>> {
    let ixs = permutation_indices(g, seq)?;
    let mut out: Vec<Violation> = axiom_violations_p1(g, &ixs);
    out.extend(adjacent_p2_violations(g, &ixs));
    Ok(out)
}

fn axiom_violations_p1(g: &ProgressiveGraph, seq: &[usize]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (i, &a) in seq.iter().enumerate() {
        for &b in &seq[i + 1..] {
            if g.sreach(b, a) {
                out.push(Violation::P1 {
                    from: g.edge_id(b).clone(),
                    to: g.edge_id(a).clone(),
                });
            }
        }
    }
    out
}

/// A strict partial order on edges, stored as its set of ordered pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjugateOrder {
    pairs: BTreeSet<(EdgeId, EdgeId)>,
}

impl ConjugateOrder {
    pub fn from_pairs<I, E>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (E, E)>,
        E: Into<EdgeId>,
    {
        ConjugateOrder {
            pairs: pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        }
    }

    pub fn contains(&self, a: &str, b: &str) -> bool {
        self.pairs.contains(&(a.into(), b.into()))
    }

    pub fn insert(&mut self, a: impl Into<EdgeId>, b: impl Into<EdgeId>) -> bool {
        self.pairs.insert((a.into(), b.into()))
    }

    pub fn remove(&mut self, a: &str, b: &str) -> bool {
        self.pairs.remove(&(a.into(), b.into()))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EdgeId, &EdgeId)> {
        self.pairs.iter().map(|(a, b)| (a, b))
    }
}

/// `e1 <* e2` iff `e1 ≺ e2` and `e1` does not reach `e2`.
pub fn conjugate_order(pop: &PopGraph) -> ConjugateOrder {
    let g = pop.graph();
    let seq = pop.seq();
    let mut pairs = BTreeSet::new();
    for (i, &a) in seq.iter().enumerate() {
        for &b in &seq[i + 1..] {
            if !g.sreach(a, b) {
                pairs.insert((g.edge_id(a).clone(), g.edge_id(b).clone()));
            }
        }
    }
    ConjugateOrder { pairs }
}

/// What is wrong with a candidate conjugate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyDefect {
    UnknownEdge(EdgeId),
    Reflexive(EdgeId),
    /// Related by both the edge poset and the candidate.
    Both(EdgeId, EdgeId),
    /// Related by neither.
    Neither(EdgeId, EdgeId),
    /// Related in both directions by the candidate.
    Symmetric(EdgeId, EdgeId),
    /// `a <* b <* c` without `a <* c`.
    Intransitive(EdgeId, EdgeId, EdgeId),
}

impl fmt::Display for ConjugacyDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyDefect::UnknownEdge(e) => write!(f, "unknown edge {e}"),
            ConjugacyDefect::Reflexive(e) => write!(f, "{e} related to itself"),
            ConjugacyDefect::Both(a, b) => write!(f, "{a} and {b} comparable by both relations"),
            ConjugacyDefect::Neither(a, b) => {
                write!(f, "{a} and {b} comparable by neither relation")
            }
            ConjugacyDefect::Symmetric(a, b) => write!(f, "{a} <* {b} and {b} <* {a}"),
            ConjugacyDefect::Intransitive(a, b, c) => {
                write!(f, "{a} <* {b} <* {c} but not {a} <* {c}")
            }
        }
    }
}

/// Result of [`check_conjugacy`]; empty when the relation is conjugate.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConjugacyReport {
    pub defects: Vec<ConjugacyDefect>,
}

impl ConjugacyReport {
    pub fn is_conjugate(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Relation as a dense boolean matrix over edge indices.
fn relation_matrix(
    g: &ProgressiveGraph,
    rel: &ConjugateOrder,
    defects: &mut Vec<ConjugacyDefect>,
) -> Vec<Vec<bool>> {
    let m = g.edge_count();
    let mut mat = vec![vec![false; m]; m];
    for (a, b) in rel.iter() {
        let (Some(x), Some(y)) = (g.edge_ix(a.as_str()), g.edge_ix(b.as_str())) else {
            for e in [a, b] {
                if !g.contains_edge(e.as_str()) {
                    defects.push(ConjugacyDefect::UnknownEdge(e.clone()));
                }
            }
            continue;
        };
        mat[x][y] = true;
    }
    mat
}

/// Exhaustive check that `rel` is a strict partial order and that every pair
/// of distinct edges is comparable by exactly one of `rel` and the edge poset.
pub fn check_conjugacy(g: &ProgressiveGraph, rel: &ConjugateOrder) -> ConjugacyReport {
    let mut defects = Vec::new();
    let mat = relation_matrix(g, rel, &mut defects);
    let m = g.edge_count();
    let id = |e: usize| g.edge_id(e).clone();
    for a in 0..m {
        if mat[a][a] {
            defects.push(ConjugacyDefect::Reflexive(id(a)));
        }
        for b in a + 1..m {
            let poset = g.sreach(a, b) || g.sreach(b, a);
            let starred = mat[a][b] || mat[b][a];
            if mat[a][b] && mat[b][a] {
                defects.push(ConjugacyDefect::Symmetric(id(a), id(b)));
            }
            match (poset, starred) {
                (true, true) => defects.push(ConjugacyDefect::Both(id(a), id(b))),
                (false, false) => defects.push(ConjugacyDefect::Neither(id(a), id(b))),
                _ => {}
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            if !mat[a][b] {
                continue;
            }
            for c in 0..m {
                if mat[b][c] && !mat[a][c] && a != c {
                    defects.push(ConjugacyDefect::Intransitive(id(a), id(b), id(c)));
                }
            }
        }
    }
    ConjugacyReport { defects }
}

/// The total order `e1 ≺ e2` iff `e1 → e2` or `e1 <* e2`.
pub fn order_from_conjugate(g: &ProgressiveGraph, rel: &ConjugateOrder) -> Result<PlanarOrder> {
    let report = check_conjugacy(g, rel);
    if !report.is_conjugate() {
        let msg = report
            .defects
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::NotConjugate(msg));
    }
    let mut unused = Vec::new();
    let mat = relation_matrix(g, rel, &mut unused);
    let m = g.edge_count();
    let mut slots: Vec<Option<usize>> = vec![None; m];
    for b in 0..m {
        let before = (0..m).filter(|&a| g.sreach(a, b) || mat[a][b]).count();
        if slots[before].replace(b).is_some() {
            return Err(Error::NotConjugate("union is not a total order".into()));
        }
    }
    Ok(PlanarOrder(
        slots
            .into_iter()
            .map(|e| g.edge_id(e.expect("all slots filled")).clone())
            .collect(),
    ))
}

pub fn input_window(pop: &PopGraph, e: &str) -> Result<(EdgeId, EdgeId)> {
    let e = pop.graph().require_edge(e)?;
    let (lo, hi) = pop.input_window_ix(e);
    Ok((pop.graph().edge_id(lo).clone(), pop.graph().edge_id(hi).clone()))
}

pub fn output_window(pop: &PopGraph, e: &str) -> Result<(EdgeId, EdgeId)> {
    let e = pop.graph().require_edge(e)?;
    let (lo, hi) = pop.output_window_ix(e);
    Ok((pop.graph().edge_id(lo).clone(), pop.graph().edge_id(hi).clone()))
}

/// The edges strictly between one boundary edge and the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    /// The input `i_k` opening a P-interval, or the output `o_k` closing a
    /// Q-interval.
    pub boundary: EdgeId,
    pub members: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    /// `P_k = (i_k, i_{k+1})`, with `P_m = (i_m, +∞]`.
    pub p: Vec<Interval>,
    /// `Q_1 = [1, o_1)`, `Q_k = (o_{k-1}, o_k)`.
    pub q: Vec<Interval>,
}

pub fn interval_partition(pop: &PopGraph) -> IntervalPartition {
    let g = pop.graph();
    let seq = pop.seq();
    let ids = |r: &[usize]| r.iter().map(|&e| g.edge_id(e).clone()).collect::<Vec<_>>();

    let inputs = pop.inputs_sorted();
    let p = inputs
        .iter()
        .enumerate()
        .map(|(k, &i)| {
            let from = pop.pos(i) + 1;
            let to = inputs.get(k + 1).map_or(seq.len(), |&n| pop.pos(n));
            Interval {
                boundary: g.edge_id(i).clone(),
                members: ids(&seq[from..to]),
            }
        })
        .collect();

    let outputs = pop.outputs_sorted();
    let q = outputs
        .iter()
        .enumerate()
        .map(|(k, &o)| {
            let from = if k == 0 { 0 } else { pop.pos(outputs[k - 1]) + 1 };
            Interval {
                boundary: g.edge_id(o).clone(),
                members: ids(&seq[from..pop.pos(o)]),
            }
        })
        .collect();
    IntervalPartition { p, q }
}

impl IntervalPartition {
    /// Confirms `e ∈ P_k ⟺ i⁺(e) = i_k` for non-inputs and
    /// `e ∈ Q_k ⟺ o⁻(e) = o_k` for non-outputs, and that the P-intervals
    /// cover every non-input edge. Returns the first offending edge.
    pub fn check_membership(&self, pop: &PopGraph) -> std::result::Result<(), EdgeId> {
        let g = pop.graph();
        let mut covered = 0;
        for iv in &self.p {
            for e in &iv.members {
                let ix = g.require_edge(e.as_str()).map_err(|_| e.clone())?;
                let (_, hi) = pop.input_window_ix(ix);
                if g.is_input_ix(ix) || g.edge_id(hi) != &iv.boundary {
                    return Err(e.clone());
                }
                covered += 1;
            }
        }
        if covered + g.input_ixs().len() != g.edge_count() {
            let first = pop.inputs_sorted().first().map(|&i| pop.pos(i)).unwrap_or(0);
            let stray = pop.seq()[..first]
                .first()
                .map(|&e| g.edge_id(e).clone())
                .unwrap_or_else(|| EdgeId::from("?"));
            return Err(stray);
        }
        for iv in &self.q {
            for e in &iv.members {
                let ix = g.require_edge(e.as_str()).map_err(|_| e.clone())?;
                if g.is_output_ix(ix) {
                    continue;
                }
                let (lo, _) = pop.output_window_ix(ix);
                if g.edge_id(lo) != &iv.boundary {
                    return Err(e.clone());
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DirectedMultigraph;

    fn graph(edges: &[(&str, &str, &str)]) -> ProgressiveGraph {
        ProgressiveGraph::new(DirectedMultigraph::from_edges(edges.iter().copied()).unwrap())
            .unwrap()
    }

    fn spider22() -> ProgressiveGraph {
        graph(&[
            ("i1", "p1", "v"),
            ("i2", "p2", "v"),
            ("o1", "v", "q1"),
            ("o2", "v", "q2"),
        ])
    }

    fn ids(s: &str) -> Vec<EdgeId> {
        s.split_whitespace().map(EdgeId::from).collect()
    }

    #[test]
    fn rejects_non_permutations() {
        let g = spider22();
        for bad in ["i1 i2 o1", "i1 i2 o1 o1", "i1 i2 o1 zz"] {
            assert!(matches!(
                PopGraph::new(g.clone(), &ids(bad)),
                Err(Error::NotAPermutation(_))
            ));
        }
    }

    #[test]
    fn reports_every_p1_violation() {
        let g = spider22();
        let err = PopGraph::new(g, &ids("o1 o2 i1 i2")).unwrap_err();
        let Error::InvalidPlanarOrder(v) = err else {
            panic!("expected violations")
        };
        assert_eq!(v.iter().filter(|x| matches!(x, Violation::P1 { .. })).count(), 4);
    }

    #[test]
    fn conjugate_of_two_disjoint_edges() {
        let g = graph(&[("a", "u1", "w1"), ("b", "u2", "w2")]);
        let pop = PopGraph::new(g.clone(), &ids("a b")).unwrap();
        let conj = conjugate_order(&pop);
        assert_eq!(conj, ConjugateOrder::from_pairs([("a", "b")]));
        assert_eq!(order_from_conjugate(&g, &conj).unwrap(), PlanarOrder::new(["a", "b"]));
    }

    #[test]
    fn conjugate_of_spider() {
        let pop = PopGraph::new(spider22(), &ids("i1 i2 o1 o2")).unwrap();
        assert_eq!(
            conjugate_order(&pop),
            ConjugateOrder::from_pairs([("i1", "i2"), ("o1", "o2")])
        );
    }

    #[test]
    fn empty_relation_on_a_path() {
        let g = graph(&[("i", "p", "v"), ("o", "v", "q")]);
        let order = order_from_conjugate(&g, &ConjugateOrder::default()).unwrap();
        assert_eq!(order, PlanarOrder::new(["i", "o"]));
    }

    #[test]
    fn conjugacy_defects_are_reported() {
        let g = graph(&[("i", "p", "v"), ("o", "v", "q"), ("b", "x", "y")]);
        let both = ConjugateOrder::from_pairs([("i", "o"), ("i", "b"), ("o", "b")]);
        let r = check_conjugacy(&g, &both);
        assert!(r.defects.contains(&ConjugacyDefect::Both("i".into(), "o".into())));

        let missing = ConjugateOrder::from_pairs([("i", "b")]);
        let r = check_conjugacy(&g, &missing);
        assert_eq!(r.defects, vec![ConjugacyDefect::Neither("o".into(), "b".into())]);
        assert!(order_from_conjugate(&g, &missing).is_err());
    }

    #[test]
    fn intransitive_relation_is_rejected() {
        let g = graph(&[("a", "u1", "w1"), ("b", "u2", "w2"), ("c", "u3", "w3")]);
        let cyc = ConjugateOrder::from_pairs([("a", "b"), ("b", "c"), ("c", "a")]);
        let r = check_conjugacy(&g, &cyc);
        assert!(r
            .defects
            .iter()
            .any(|d| matches!(d, ConjugacyDefect::Intransitive(..))));
    }

    #[test]
    fn spider_intervals() {
        let pop = PopGraph::new(spider22(), &ids("i1 i2 o1 o2")).unwrap();
        let part = interval_partition(&pop);
        assert_eq!(part.p[0].members, Vec::<EdgeId>::new());
        assert_eq!(part.p[1].members, ids("o1 o2"));
        assert_eq!(part.q[0].members, ids("i1 i2"));
        assert!(part.q[1].members.is_empty());
        part.check_membership(&pop).unwrap();
    }

    #[test]
    fn bare_edges_have_empty_intervals() {
        let g = graph(&[("a", "u1", "w1"), ("b", "u2", "w2")]);
        let pop = PopGraph::new(g, &ids("a b")).unwrap();
        let part = interval_partition(&pop);
        assert!(part.p.iter().chain(&part.q).all(|iv| iv.members.is_empty()));
        assert_eq!(input_window(&pop, "b").unwrap(), ("b".into(), "b".into()));
        assert_eq!(output_window(&pop, "a").unwrap(), ("a".into(), "a".into()));
    }

    #[test]
    fn ranks_are_one_based() {
        let pop = PopGraph::new(spider22(), &ids("i2 i1 o1 o2")).unwrap();
        assert_eq!(pop.rank("i2").unwrap(), 1);
        assert_eq!(pop.edge_at(4).unwrap().as_str(), "o2");
        assert!(pop.edge_at(0).is_none());
    }
}

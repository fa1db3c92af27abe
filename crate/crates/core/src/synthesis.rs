//! Planar orders from polarization and anchor data, and the brute-force
//! enumeration oracle.
//!
//! A polarization fixes a left-to-right order on the incoming and on the
//! outgoing edges of every internal vertex; an anchor fixes the order of the
//! global inputs and outputs. Together they determine at most one planar
//! order. Each pair of edges is decided by one of three rules:
//!
//! * one edge reaches the other, so the edge poset decides;
//! * no vertex reaches both, so their input windows are disjoint in the
//!   anchor and the anchor decides;
//! * otherwise a maximal common ancestor `v` has distinct outgoing edges
//!   leading to each, and the polarization at `v` decides.
//!
//! The full pairwise relation is materialized and then checked to be a total
//! order satisfying the axioms and agreeing with every prescribed incidence
//! order.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result, SynthesisDefect};
use crate::graph::{DirectedMultigraph, EdgeId, ProgressiveGraph, VertexId};
use crate::order::{axiom_violations, PlanarOrder, PopGraph};

/// Left-to-right orders on the incoming and outgoing edges of one vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexOrder {
    pub incoming: Vec<EdgeId>,
    pub outgoing: Vec<EdgeId>,
}

/// Per-vertex incidence orders, keyed by vertex id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polarization(BTreeMap<VertexId, VertexOrder>);

impl Polarization {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert<I, O, E, F>(&mut self, v: impl Into<VertexId>, incoming: I, outgoing: O)
    where
        I: IntoIterator<Item = E>,
        O: IntoIterator<Item = F>,
        E: Into<EdgeId>,
        F: Into<EdgeId>,
    {
        self.0.insert(
            v.into(),
            VertexOrder {
                incoming: incoming.into_iter().map(Into::into).collect(),
                outgoing: outgoing.into_iter().map(Into::into).collect(),
            },
        );
    }

    pub fn set(&mut self, v: impl Into<VertexId>, order: VertexOrder) {
        self.0.insert(v.into(), order);
    }

    pub fn get(&self, v: &str) -> Option<&VertexOrder> {
        self.0.get(v)
    }

    pub fn get_mut(&mut self, v: &str) -> Option<&mut VertexOrder> {
        self.0.get_mut(v)
    }

    pub fn remove(&mut self, v: &str) -> Option<VertexOrder> {
        self.0.remove(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VertexId, &VertexOrder)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every listed vertex must exist, pass `allowed`, and have its incident
    /// edges partitioned exactly by direction.
    pub(crate) fn check_against(
        &self,
        g: &DirectedMultigraph,
        allowed: impl Fn(&VertexId) -> bool,
    ) -> Result<()> {
        for (v, ord) in &self.0 {
            if !g.contains_vertex(v.as_str()) {
                return Err(Error::UnknownVertex(v.clone()));
            }
            if !allowed(v) {
                return Err(Error::InvalidPolarization(format!(
                    "{v} is not an internal vertex"
                )));
            }
            let ins: Vec<&EdgeId> = g.edges().iter().filter(|e| &e.dst == v).map(|e| &e.id).collect();
            let outs: Vec<&EdgeId> = g.edges().iter().filter(|e| &e.src == v).map(|e| &e.id).collect();
            check_permutation(&ord.incoming, &ins, &format!("incoming edges of {v}"))?;
            check_permutation(&ord.outgoing, &outs, &format!("outgoing edges of {v}"))?;
        }
        Ok(())
    }
}

fn check_permutation(given: &[EdgeId], expected: &[&EdgeId], what: &str) -> Result<()> {
    let mut a: Vec<&EdgeId> = given.iter().collect();
    let mut b = expected.to_vec();
    a.sort();
    b.sort();
    if a != b {
        let shown = given.iter().map(EdgeId::as_str).collect::<Vec<_>>().join(" ");
        return Err(Error::InvalidPolarization(format!(
            "[{shown}] is not a permutation of the {what}"
        )));
    }
    Ok(())
}

/// Left-to-right orders on the global inputs and outputs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Anchor {
    pub inputs: Vec<EdgeId>,
    pub outputs: Vec<EdgeId>,
}

impl Anchor {
    pub fn new<I, O, E, F>(inputs: I, outputs: O) -> Self
    where
        I: IntoIterator<Item = E>,
        O: IntoIterator<Item = F>,
        E: Into<EdgeId>,
        F: Into<EdgeId>,
    {
        Anchor {
            inputs: inputs.into_iter().map(Into::into).collect(),
            outputs: outputs.into_iter().map(Into::into).collect(),
        }
    }
}

/// A progressive graph with a polarization at every internal vertex and an
/// anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaGraph {
    graph: ProgressiveGraph,
    polarization: Polarization,
    anchor: Anchor,
}

impl PaGraph {
    pub fn new(graph: ProgressiveGraph, polarization: Polarization, anchor: Anchor) -> Result<Self> {
        polarization.check_against(graph.graph(), |v| graph.is_internal(v.as_str()))?;
        for v in graph.internal_vertices() {
            if polarization.get(v.as_str()).is_none() {
                return Err(Error::InvalidPolarization(format!(
                    "internal vertex {v} has no incidence order"
                )));
            }
        }
        check_permutation(&anchor.inputs, &graph.inputs(), "input edges")?;
        check_permutation(&anchor.outputs, &graph.outputs(), "output edges")?;
        Ok(PaGraph {
            graph,
            polarization,
            anchor,
        })
    }

    pub fn graph(&self) -> &ProgressiveGraph {
        &self.graph
    }

    pub fn polarization(&self) -> &Polarization {
        &self.polarization
    }

    pub fn anchor(&self) -> &Anchor {
        &self.anchor
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Inconsistent,
}

impl Comparison {
    pub fn reverse(self) -> Self {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Greater => Comparison::Less,
            other => other,
        }
    }
}

/// Which rule decided a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompareCase {
    /// One edge reaches the other.
    Orientation,
    /// No vertex reaches both edges.
    Anchor,
    /// Some vertex reaches both edges.
    Polarization,
}

/// Index-level view of a [`PaGraph`].
struct PaIndex<'a> {
    pa: &'a PaGraph,
    /// `(lo, hi)` anchor positions of the inputs reaching each edge.
    in_window: Vec<(usize, usize)>,
    /// `(lo, hi)` anchor positions of the outputs reached from each edge.
    out_window: Vec<(usize, usize)>,
}

impl<'a> PaIndex<'a> {
    fn new(pa: &'a PaGraph) -> Self {
        let g = &pa.graph;
        let m = g.edge_count();
        let mut in_anchor = vec![None; m];
        let mut out_anchor = vec![None; m];
        for (k, e) in pa.anchor.inputs.iter().enumerate() {
            in_anchor[g.edge_ix(e.as_str()).expect("checked")] = Some(k);
        }
        for (k, e) in pa.anchor.outputs.iter().enumerate() {
            out_anchor[g.edge_ix(e.as_str()).expect("checked")] = Some(k);
        }
        let window = |pairs: &mut dyn Iterator<Item = usize>| {
            pairs.fold((usize::MAX, 0), |(lo, hi), k| (lo.min(k), hi.max(k)))
        };
        let in_window = (0..m)
            .map(|e| {
                window(&mut g.input_ixs().iter().filter(|&&i| g.ereach(i, e)).map(|&i| in_anchor[i].unwrap()))
            })
            .collect();
        let out_window = (0..m)
            .map(|e| {
                window(&mut g.output_ixs().iter().filter(|&&o| g.ereach(e, o)).map(|&o| out_anchor[o].unwrap()))
            })
            .collect();
        PaIndex {
            pa,
            in_window,
            out_window,
        }
    }

    fn case(&self, a: usize, b: usize) -> CompareCase {
        let g = &self.pa.graph;
        if g.sreach(a, b) || g.sreach(b, a) {
            CompareCase::Orientation
        } else if self.common_ancestors(a, b).is_empty() {
            CompareCase::Anchor
        } else {
            CompareCase::Polarization
        }
    }

    /// Vertices reaching the tails of both edges, reflexively.
    fn common_ancestors(&self, a: usize, b: usize) -> Vec<usize> {
        let g = &self.pa.graph;
        let (sa, sb) = (g.src_ix(a), g.src_ix(b));
        (0..g.vertex_count())
            .filter(|&v| g.vreach(v, sa) && g.vreach(v, sb))
            .collect()
    }

    fn compare(&self, a: usize, b: usize) -> (CompareCase, Comparison) {
        use Comparison::*;
        let g = &self.pa.graph;
        if a == b {
            return (CompareCase::Orientation, Equal);
        }
        if g.sreach(a, b) {
            return (CompareCase::Orientation, Less);
        }
        if g.sreach(b, a) {
            return (CompareCase::Orientation, Greater);
        }
        let common = self.common_ancestors(a, b);
        if common.is_empty() {
            return (CompareCase::Anchor, self.compare_by_anchor(a, b));
        }
        (CompareCase::Polarization, self.compare_by_polarization(a, b, &common))
    }

    fn compare_by_anchor(&self, a: usize, b: usize) -> Comparison {
        let by_windows = |wa: (usize, usize), wb: (usize, usize)| {
            if wa.1 < wb.0 {
                Some(Comparison::Less)
            } else if wb.1 < wa.0 {
                Some(Comparison::Greater)
            } else {
                None
            }
        };
        let Some(verdict) = by_windows(self.in_window[a], self.in_window[b]) else {
            return Comparison::Inconsistent;
        };
        // Disjoint output windows force an order as well; it must agree.
        match by_windows(self.out_window[a], self.out_window[b]) {
            Some(other) if other != verdict => Comparison::Inconsistent,
            _ => verdict,
        }
    }

    fn compare_by_polarization(&self, a: usize, b: usize, common: &[usize]) -> Comparison {
        let g = &self.pa.graph;
        let maximal = common
            .iter()
            .copied()
            .filter(|&v| !common.iter().any(|&w| w != v && g.vreach(v, w)))
            .min_by(|&x, &y| g.vertex_id(x).cmp(g.vertex_id(y)))
            .expect("a finite nonempty poset has a maximal element");
        let outgoing: Vec<usize> = match self.pa.polarization.get(g.vertex_id(maximal).as_str()) {
            Some(ord) => ord
                .outgoing
                .iter()
                .map(|e| g.edge_ix(e.as_str()).expect("checked"))
                .collect(),
            None => g.out_ixs(maximal).to_vec(),
        };
        let h1 = outgoing.iter().position(|&h| g.ereach(h, a));
        let h2 = outgoing.iter().position(|&h| g.ereach(h, b));
        match (h1, h2) {
            (Some(x), Some(y)) if x < y => Comparison::Less,
            (Some(x), Some(y)) if x > y => Comparison::Greater,
            _ => Comparison::Inconsistent,
        }
    }
}

/// Decides the relative position of two edges from orientation,
/// anchor or polarization, whichever applies.
pub fn compare_edges(pa: &PaGraph, e1: &str, e2: &str) -> Result<Comparison> {
    Ok(compare_edges_with_case(pa, e1, e2)?.1)
}

/// Like [`compare_edges`], also naming the rule that applied.
pub fn compare_edges_with_case(
    pa: &PaGraph,
    e1: &str,
    e2: &str,
) -> Result<(CompareCase, Comparison)> {
    let g = pa.graph();
    let (a, b) = (g.require_edge(e1)?, g.require_edge(e2)?);
    Ok(PaIndex::new(pa).compare(a, b))
}

/// Which rule applies to a pair of edges, decided from the graph alone.
pub fn compare_case(pa: &PaGraph, e1: &str, e2: &str) -> Result<CompareCase> {
    let g = pa.graph();
    let (a, b) = (g.require_edge(e1)?, g.require_edge(e2)?);
    Ok(PaIndex::new(pa).case(a, b))
}

const MAX_CYCLE_WITNESSES: usize = 16;

/// The unique planar order compatible with the polarization and anchor.
pub fn synthesize_order(pa: &PaGraph) -> Result<PlanarOrder> {
    synthesize_pop(pa).map(|p| p.order())
}

/// [`synthesize_order`], returning the ordered graph.
pub fn synthesize_pop(pa: &PaGraph) -> Result<PopGraph> {
    let g = pa.graph();
    let idx = PaIndex::new(pa);
    let m = g.edge_count();
    let id = |e: usize| g.edge_id(e).clone();

    let mut less = vec![vec![false; m]; m];
    let mut defects = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            match idx.compare(a, b).1 {
                Comparison::Less => less[a][b] = true,
                Comparison::Greater => less[b][a] = true,
                _ => defects.push(SynthesisDefect::Inconsistent { a: id(a), b: id(b) }),
            }
        }
    }
    if !defects.is_empty() {
        return Err(Error::NoConsistentOrder(defects));
    }

    // A tournament is transitive iff its "beaten by" counts are 0..m.
    let mut slots: Vec<Option<usize>> = vec![None; m];
    let mut transitive = true;
    for b in 0..m {
        let before = (0..m).filter(|&a| less[a][b]).count();
        if slots[before].replace(b).is_some() {
            transitive = false;
        }
    }
    if !transitive {
        'outer: for a in 0..m {
            for b in 0..m {
                if !less[a][b] {
                    continue;
                }
                for c in 0..m {
                    if less[b][c] && less[c][a] && a < b && a < c {
                        defects.push(SynthesisDefect::Cycle {
                            a: id(a),
                            b: id(b),
                            c: id(c),
                        });
                        if defects.len() >= MAX_CYCLE_WITNESSES {
                            break 'outer;
                        }
                    }
                }
            }
        }
        return Err(Error::NoConsistentOrder(defects));
    }
    let seq: Vec<usize> = slots.into_iter().map(|s| s.expect("permutation")).collect();

    defects.extend(axiom_violations(g, &seq).into_iter().map(SynthesisDefect::Axiom));
    let mut pos = vec![0; m];
    for (p, &e) in seq.iter().enumerate() {
        pos[e] = p;
    }
    let mut agree = |list: &[EdgeId], at: String| {
        for w in list.windows(2) {
            let (x, y) = (
                g.edge_ix(w[0].as_str()).expect("checked"),
                g.edge_ix(w[1].as_str()).expect("checked"),
            );
            if pos[x] > pos[y] {
                defects.push(SynthesisDefect::Disagrees {
                    a: w[0].clone(),
                    b: w[1].clone(),
                    at: at.clone(),
                });
            }
        }
    };
    for (v, ord) in pa.polarization().iter() {
        agree(&ord.incoming, format!("incoming order at {v}"));
        agree(&ord.outgoing, format!("outgoing order at {v}"));
    }
    agree(&pa.anchor().inputs, "input anchor".into());
    agree(&pa.anchor().outputs, "output anchor".into());
    if !defects.is_empty() {
        return Err(Error::NoConsistentOrder(defects));
    }
    Ok(PopGraph::from_indices(g.clone(), seq))
}

/// Reads the polarization and anchor off a planar order by restriction.
pub fn extract_pa(pop: &PopGraph) -> PaGraph {
    let g = pop.graph();
    let ids = |v: Vec<usize>| v.into_iter().map(|e| g.edge_id(e).clone()).collect::<Vec<_>>();
    let mut polarization = Polarization::new();
    for &v in g.internal_ixs() {
        polarization.set(
            g.vertex_id(v).clone(),
            VertexOrder {
                incoming: ids(pop.sorted(g.in_ixs(v))),
                outgoing: ids(pop.sorted(g.out_ixs(v))),
            },
        );
    }
    let anchor = Anchor {
        inputs: ids(pop.inputs_sorted()),
        outputs: ids(pop.outputs_sorted()),
    };
    PaGraph {
        graph: g.clone(),
        polarization,
        anchor,
    }
}

/// Default edge bound above which enumeration refuses to run unless forced.
pub const DEFAULT_MAX_EDGES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Stop after this many orders.
    pub limit: Option<usize>,
    pub max_edges: usize,
    /// Ignore `max_edges`.
    pub force: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            limit: None,
            max_edges: DEFAULT_MAX_EDGES,
            force: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub orders: Vec<PlanarOrder>,
    /// More orders exist beyond `limit`.
    pub truncated: bool,
}

/// Depth-first generation of linear extensions of the edge poset, pruning
/// any prefix whose newest edge closes a P2 violation. Candidates are tried
/// in edge declaration order, so results come out lexicographically.
struct Extensions<'a> {
    g: &'a ProgressiveGraph,
    prefix: Vec<usize>,
    placed: Vec<bool>,
    pending_preds: Vec<usize>,
}

impl<'a> Extensions<'a> {
    fn new(g: &'a ProgressiveGraph) -> Self {
        let m = g.edge_count();
        let pending_preds = (0..m)
            .map(|b| (0..m).filter(|&a| g.sreach(a, b)).count())
            .collect();
        Extensions {
            g,
            prefix: Vec::with_capacity(m),
            placed: vec![false; m],
            pending_preds,
        }
    }

    /// Every triple whose last element is `c` is checked exactly when `c`
    /// is appended.
    fn closes_violation(&self, c: usize) -> bool {
        let g = self.g;
        self.prefix.iter().enumerate().any(|(j, &a)| {
            g.sreach(a, c)
                && self.prefix[j + 1..]
                    .iter()
                    .any(|&b| !g.sreach(a, b) && !g.sreach(b, c))
        })
    }

    fn walk<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let m = self.g.edge_count();
        if self.prefix.len() == m {
            return visit(&self.prefix);
        }
        for e in 0..m {
            if self.placed[e] || self.pending_preds[e] > 0 || self.closes_violation(e) {
                continue;
            }
            self.place(e, true);
            let flow = self.walk(visit);
            self.place(e, false);
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn place(&mut self, e: usize, on: bool) {
        let g = self.g;
        self.placed[e] = on;
        if on {
            self.prefix.push(e);
        } else {
            self.prefix.pop();
        }
        for b in 0..g.edge_count() {
            if g.sreach(e, b) {
                if on {
                    self.pending_preds[b] -= 1;
                } else {
                    self.pending_preds[b] += 1;
                }
            }
        }
    }
}

fn guard(g: &ProgressiveGraph, opts: &EnumerationOptions) -> Result<()> {
    if !opts.force && g.edge_count() > opts.max_edges {
        return Err(Error::TooLarge {
            edges: g.edge_count(),
            bound: opts.max_edges,
        });
    }
    Ok(())
}

pub fn enumerate_planar_orders(g: &ProgressiveGraph, limit: Option<usize>) -> Result<Enumeration> {
    enumerate_planar_orders_with(
        g,
        &EnumerationOptions {
            limit,
            ..Default::default()
        },
    )
}

pub fn enumerate_planar_orders_with(
    g: &ProgressiveGraph,
    opts: &EnumerationOptions,
) -> Result<Enumeration> {
    guard(g, opts)?;
    let mut orders = Vec::new();
    let mut truncated = false;
    let _ = Extensions::new(g).walk(&mut |seq: &[usize]| {
        if opts.limit.is_some_and(|l| orders.len() >= l) {
            truncated = true;
            return ControlFlow::Break(());
        }
        orders.push(PlanarOrder::new(seq.iter().map(|&e| g.edge_id(e).clone())));
        ControlFlow::Continue(())
    });
    Ok(Enumeration { orders, truncated })
}

/// Same search as [`enumerate_planar_orders`], only counting.
pub fn count_planar_orders(g: &ProgressiveGraph) -> Result<u64> {
    count_planar_orders_with(g, &EnumerationOptions::default())
}

pub fn count_planar_orders_with(g: &ProgressiveGraph, opts: &EnumerationOptions) -> Result<u64> {
    guard(g, opts)?;
    let mut n = 0u64;
    let _ = Extensions::new(g).walk(&mut |_: &[usize]| {
        n += 1;
        ControlFlow::Continue(())
    });
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spider(p: usize, q: usize) -> ProgressiveGraph {
        let mut edges = Vec::new();
        for k in 1..=p {
            edges.push((format!("i{k}"), format!("p{k}"), "v".to_string()));
        }
        for k in 1..=q {
            edges.push((format!("o{k}"), "v".to_string(), format!("q{k}")));
        }
        ProgressiveGraph::new(DirectedMultigraph::from_edges(edges).unwrap()).unwrap()
    }

    fn bare(k: usize) -> ProgressiveGraph {
        let edges: Vec<_> = (0..k).map(|i| (format!("e{i}"), format!("u{i}"), format!("w{i}"))).collect();
        ProgressiveGraph::new(DirectedMultigraph::from_edges(edges).unwrap()).unwrap()
    }

    fn factorial(n: u64) -> u64 {
        (1..=n).product()
    }

    #[test]
    fn single_edge_has_one_order() {
        assert_eq!(count_planar_orders(&bare(1)).unwrap(), 1);
    }

    #[test]
    fn two_bare_edges_in_lexicographic_order() {
        let en = enumerate_planar_orders(&bare(2), None).unwrap();
        assert_eq!(
            en.orders,
            vec![PlanarOrder::new(["e0", "e1"]), PlanarOrder::new(["e1", "e0"])]
        );
        assert!(!en.truncated);
    }

    #[test]
    fn spider_counts() {
        for p in 1..=3 {
            for q in 1..=3 {
                assert_eq!(
                    count_planar_orders(&spider(p, q)).unwrap(),
                    factorial(p as u64) * factorial(q as u64)
                );
            }
        }
    }

    #[test]
    fn limit_truncates() {
        let en = enumerate_planar_orders(&bare(3), Some(2)).unwrap();
        assert_eq!(en.orders.len(), 2);
        assert!(en.truncated);
        let en = enumerate_planar_orders(&bare(3), Some(6)).unwrap();
        assert!(!en.truncated);
    }

    #[test]
    fn large_graphs_need_force() {
        let g = bare(11);
        assert!(matches!(
            count_planar_orders(&g),
            Err(Error::TooLarge { edges: 11, bound: 10 })
        ));
        let opts = EnumerationOptions {
            limit: Some(3),
            force: true,
            ..Default::default()
        };
        assert_eq!(enumerate_planar_orders_with(&g, &opts).unwrap().orders.len(), 3);
    }

    #[test]
    fn spider_synthesis() {
        let g = spider(2, 2);
        let mut pol = Polarization::new();
        pol.insert("v", ["i1", "i2"], ["o1", "o2"]);
        let pa = PaGraph::new(g, pol, Anchor::new(["i1", "i2"], ["o1", "o2"])).unwrap();
        assert_eq!(
            synthesize_order(&pa).unwrap(),
            PlanarOrder::new(["i1", "i2", "o1", "o2"])
        );
        assert_eq!(compare_edges(&pa, "o1", "o2").unwrap(), Comparison::Less);
        assert_eq!(compare_case(&pa, "i1", "i2").unwrap(), CompareCase::Anchor);
    }

    #[test]
    fn crossed_bare_edges_have_no_order() {
        let pa = PaGraph::new(bare(2), Polarization::new(), Anchor::new(["e0", "e1"], ["e1", "e0"]))
            .unwrap();
        assert_eq!(compare_edges(&pa, "e0", "e1").unwrap(), Comparison::Inconsistent);
        assert!(matches!(synthesize_order(&pa), Err(Error::NoConsistentOrder(_))));
    }

    #[test]
    fn anchor_contradicting_polarization_is_caught() {
        // Outputs anchored opposite to the outgoing order at v.
        let mut pol = Polarization::new();
        pol.insert("v", ["i1"], ["o1", "o2"]);
        let pa = PaGraph::new(spider(1, 2), pol, Anchor::new(vec!["i1"], vec!["o2", "o1"])).unwrap();
        let Err(Error::NoConsistentOrder(defects)) = synthesize_order(&pa) else {
            panic!("expected failure")
        };
        assert!(defects
            .iter()
            .any(|d| matches!(d, SynthesisDefect::Disagrees { .. })));
    }

    #[test]
    fn pa_validation() {
        let g = spider(2, 1);
        let mut pol = Polarization::new();
        pol.insert("v", ["i1"], ["o1"]);
        assert!(PaGraph::new(g.clone(), pol, Anchor::new(vec!["i1", "i2"], vec!["o1"])).is_err());
        let mut pol = Polarization::new();
        pol.insert("v", ["i1", "i2"], ["o1"]);
        pol.insert("p1", Vec::<&str>::new(), vec!["i1"]);
        assert!(PaGraph::new(g.clone(), pol, Anchor::new(vec!["i1", "i2"], vec!["o1"])).is_err());
        let mut pol = Polarization::new();
        pol.insert("v", ["i1", "i2"], ["o1"]);
        assert!(PaGraph::new(g.clone(), pol.clone(), Anchor::new(vec!["i1"], vec!["o1"])).is_err());
        assert!(PaGraph::new(g, pol, Anchor::new(vec!["i2", "i1"], vec!["o1"])).is_ok());
    }

    #[test]
    fn extract_from_bare_edge() {
        let pop = PopGraph::new(bare(1), &[EdgeId::from("e0")]).unwrap();
        let pa = extract_pa(&pop);
        assert!(pa.polarization().is_empty());
        assert_eq!(pa.anchor(), &Anchor::new(["e0"], ["e0"]));
    }
}

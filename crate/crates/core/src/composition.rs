//! Shuffle composition of planarly ordered progressive graphs, and
//! elementary decomposition by peeling maximal vertices.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{fresh_name, DirectedMultigraph, EdgeId, ProgressiveGraph, VertexId};
use crate::order::{axiom_violations, PopGraph};

/// Provenance of an edge created by gluing the `k`-th output of the first
/// factor to the `k`-th input of the second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedEdge {
    pub id: EdgeId,
    pub output: EdgeId,
    pub input: EdgeId,
}

#[derive(Clone, Debug)]
pub struct Composite {
    pub pop: PopGraph,
    pub glued: Vec<GluedEdge>,
}

/// True iff every connected component has at most one internal vertex.
pub fn is_elementary(g: &ProgressiveGraph) -> bool {
    g.component_ixs()
        .iter()
        .all(|c| c.iter().filter(|&&v| g.is_internal_ix(v)).count() <= 1)
}

/// Feeds the outputs of `first` into the inputs of `second`.
pub fn compose(first: &PopGraph, second: &PopGraph) -> Result<PopGraph> {
    compose_with_provenance(first, second).map(|c| c.pop)
}

/// [`compose`], also returning which edges were glued.
///
/// Glued edges keep their id when output and input share it and are named
/// `output~input` otherwise. Any other id of `second` that clashes with one
/// already taken gets primes appended.
pub fn compose_with_provenance(first: &PopGraph, second: &PopGraph) -> Result<Composite> {
    let (g1, g2) = (first.graph(), second.graph());
    let outs = first.outputs_sorted();
    let ins = second.inputs_sorted();
    if outs.len() != ins.len() {
        return Err(Error::ArityMismatch(outs.len(), ins.len()));
    }
    let n = outs.len();

    let mut glued_at = vec![None; g1.edge_count()];
    for (k, &o) in outs.iter().enumerate() {
        glued_at[o] = Some(k);
    }
    let dropped_sinks: HashSet<usize> = outs.iter().map(|&o| g1.dst_ix(o)).collect();
    let dropped_sources: HashSet<usize> = ins.iter().map(|&i| g2.src_ix(i)).collect();

    let mut taken_v: HashSet<String> = HashSet::new();
    for v in 0..g1.vertex_count() {
        if !dropped_sinks.contains(&v) {
            taken_v.insert(g1.vertex_id(v).as_str().to_owned());
        }
    }
    let mut v2_name = vec![String::new(); g2.vertex_count()];
    for (v, name) in v2_name.iter_mut().enumerate() {
        if !dropped_sources.contains(&v) {
            *name = fresh_name(g2.vertex_id(v).as_str(), &mut taken_v);
        }
    }

    let mut taken_e: HashSet<String> = HashSet::new();
    for e in 0..g1.edge_count() {
        if glued_at[e].is_none() {
            taken_e.insert(g1.edge_id(e).as_str().to_owned());
        }
    }
    let glued: Vec<GluedEdge> = outs
        .iter()
        .zip(&ins)
        .map(|(&o, &i)| {
            let (oid, iid) = (g1.edge_id(o), g2.edge_id(i));
            let base = if oid == iid {
                oid.as_str().to_owned()
            } else {
                format!("{oid}~{iid}")
            };
            GluedEdge {
                id: fresh_name(&base, &mut taken_e).into(),
                output: oid.clone(),
                input: iid.clone(),
            }
        })
        .collect();
    let mut glued_from_input = vec![None; g2.edge_count()];
    for (k, &i) in ins.iter().enumerate() {
        glued_from_input[i] = Some(k);
    }
    let mut e2_name = vec![String::new(); g2.edge_count()];
    for (e, name) in e2_name.iter_mut().enumerate() {
        if glued_from_input[e].is_none() {
            *name = fresh_name(g2.edge_id(e).as_str(), &mut taken_e);
        }
    }

    let mut g = DirectedMultigraph::new();
    for e in 0..g1.edge_count() {
        let src = g1.vertex_id(g1.src_ix(e)).clone();
        match glued_at[e] {
            None => g.add_edge(g1.edge_id(e).clone(), src, g1.vertex_id(g1.dst_ix(e)).clone())?,
            Some(k) => {
                let dst = v2_name[g2.dst_ix(ins[k])].clone();
                g.add_edge(glued[k].id.clone(), src, dst)?
            }
        }
    }
    for e in 0..g2.edge_count() {
        if glued_from_input[e].is_none() {
            g.add_edge(
                e2_name[e].clone(),
                v2_name[g2.src_ix(e)].clone(),
                v2_name[g2.dst_ix(e)].clone(),
            )?;
        }
    }

    // Shuffle: Q_1 ē_1 P_1 ... Q_n ē_n P_n.
    let mut seq: Vec<EdgeId> = Vec::with_capacity(g.edges().len());
    let s1 = first.seq();
    let s2 = second.seq();
    let mut cursor1 = 0;
    for k in 0..n {
        let upto = first.pos(outs[k]);
        seq.extend(s1[cursor1..upto].iter().map(|&e| g1.edge_id(e).clone()));
        cursor1 = upto + 1;
        seq.push(glued[k].id.clone());
        let from = second.pos(ins[k]) + 1;
        let to = ins.get(k + 1).map_or(s2.len(), |&i| second.pos(i));
        seq.extend(s2[from..to].iter().map(|&e| EdgeId::from(e2_name[e].clone())));
    }
    let head_of_second = ins.first().map_or(s2.len(), |&i| second.pos(i));
    if cursor1 != s1.len() || head_of_second != 0 {
        return Err(Error::Internal(
            "factor order has edges outside its boundary windows".into(),
        ));
    }

    let graph = ProgressiveGraph::new(g)
        .map_err(|e| Error::Internal(format!("composite is not progressive: {e}")))?;
    let ixs = crate::order::permutation_indices(&graph, &seq)?;
    let violations = axiom_violations(&graph, &ixs);
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "shuffle order is not planar: {}",
            Error::InvalidPlanarOrder(violations)
        )));
    }
    Ok(Composite {
        pop: PopGraph::from_indices(graph, ixs),
        glued,
    })
}

/// Equality up to renaming: the `k`-th edge of `a` must correspond to the
/// `k`-th edge of `b`, and that edge map must extend to a vertex bijection.
pub fn pop_isomorphic(a: &PopGraph, b: &PopGraph) -> bool {
    let (ga, gb) = (a.graph(), b.graph());
    if ga.edge_count() != gb.edge_count() || ga.vertex_count() != gb.vertex_count() {
        return false;
    }
    let mut fwd = vec![usize::MAX; ga.vertex_count()];
    let mut bwd = vec![usize::MAX; gb.vertex_count()];
    let mut bind = |x: usize, y: usize| {
        if fwd[x] == usize::MAX && bwd[y] == usize::MAX {
            fwd[x] = y;
            bwd[y] = x;
            true
        } else {
            fwd[x] == y && bwd[y] == x
        }
    };
    a.seq().iter().zip(b.seq()).all(|(&ea, &eb)| {
        bind(ga.src_ix(ea), gb.src_ix(eb)) && bind(ga.dst_ix(ea), gb.dst_ix(eb))
    })
}

/// Internal vertices all of whose outgoing edges are outputs.
pub fn maximal_vertices(pop: &PopGraph) -> Vec<VertexId> {
    let g = pop.graph();
    maximal_ixs(pop)
        .into_iter()
        .map(|v| g.vertex_id(v).clone())
        .collect()
}

fn maximal_ixs(pop: &PopGraph) -> Vec<usize> {
    let g = pop.graph();
    g.internal_ixs()
        .iter()
        .copied()
        .filter(|&v| g.out_ixs(v).iter().all(|&e| g.is_output_ix(e)))
        .collect()
}

/// Splits off one maximal vertex `v` as `compose(remainder, factor)`.
///
/// `v` is the maximal vertex whose first outgoing edge comes earliest in the
/// planar order.
pub fn decompose_step(pop: &PopGraph) -> Result<(PopGraph, PopGraph)> {
    let g = pop.graph();
    let v = maximal_ixs(pop)
        .into_iter()
        .min_by_key(|&v| g.out_ixs(v).iter().map(|&e| pop.pos(e)).min())
        .ok_or(Error::NoInternalVertex)?;
    split_at(pop, v)
}

/// [`decompose_step`] at a caller-chosen maximal vertex.
pub fn decompose_step_at(pop: &PopGraph, v: &str) -> Result<(PopGraph, PopGraph)> {
    let g = pop.graph();
    let vx = g.require_vertex(v)?;
    if !maximal_ixs(pop).contains(&vx) {
        return Err(Error::NotMaximal(v.into()));
    }
    split_at(pop, vx)
}

fn split_at(pop: &PopGraph, v: usize) -> Result<(PopGraph, PopGraph)> {
    let g = pop.graph();
    let m = g.edge_count();
    let mut into_v = vec![false; m];
    for &h in g.in_ixs(v) {
        into_v[h] = true;
    }
    let mut out_of_v = vec![false; m];
    for &o in g.out_ixs(v) {
        out_of_v[o] = true;
    }
    let names = || -> HashSet<String> {
        g.graph()
            .vertices()
            .iter()
            .map(|x| x.as_str().to_owned())
            .collect()
    };
    let vid = |x: usize| g.vertex_id(x).clone();
    let eid = |e: usize| g.edge_id(e).clone();

    let mut taken = names();
    let mut lower = DirectedMultigraph::new();
    for e in (0..m).filter(|&e| !out_of_v[e]) {
        let dst = if into_v[e] {
            VertexId::from(fresh_name(&format!("t@{}", eid(e)), &mut taken))
        } else {
            vid(g.dst_ix(e))
        };
        lower.add_edge(eid(e), vid(g.src_ix(e)), dst)?;
    }

    let mut taken = names();
    let mut upper = DirectedMultigraph::new();
    for e in (0..m).filter(|&e| into_v[e] || g.is_output_ix(e)) {
        let src = if out_of_v[e] {
            vid(v)
        } else {
            VertexId::from(fresh_name(&format!("s@{}", eid(e)), &mut taken))
        };
        let dst = if into_v[e] { vid(v) } else { vid(g.dst_ix(e)) };
        upper.add_edge(eid(e), src, dst)?;
    }

    let restrict = |graph: DirectedMultigraph| -> Result<PopGraph> {
        let graph = ProgressiveGraph::new(graph)
            .map_err(|e| Error::Internal(format!("peeled graph is not progressive: {e}")))?;
        let seq: Vec<EdgeId> = pop
            .seq()
            .iter()
            .filter(|&&e| graph.contains_edge(g.edge_id(e).as_str()))
            .map(|&e| eid(e))
            .collect();
        PopGraph::new(graph, &seq)
            .map_err(|e| Error::Internal(format!("restricted order is not planar: {e}")))
    };
    Ok((restrict(lower)?, restrict(upper)?))
}

/// Elementary factors in composition order: the first factor receives the
/// global inputs, the last one produces the global outputs.
#[derive(Clone, Debug)]
pub struct ElementaryDecomposition {
    factors: Vec<PopGraph>,
    interfaces: Vec<Vec<(EdgeId, EdgeId)>>,
}

impl ElementaryDecomposition {
    pub fn new(factors: Vec<PopGraph>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Internal("a decomposition needs a factor".into()));
        }
        if let Some(bad) = factors.iter().position(|f| !is_elementary(f.graph())) {
            return Err(Error::Internal(format!("factor {} is not elementary", bad + 1)));
        }
        let mut interfaces = Vec::with_capacity(factors.len() - 1);
        for w in factors.windows(2) {
            let outs = w[0].outputs_sorted();
            let ins = w[1].inputs_sorted();
            if outs.len() != ins.len() {
                return Err(Error::ArityMismatch(outs.len(), ins.len()));
            }
            interfaces.push(
                outs.iter()
                    .zip(&ins)
                    .map(|(&o, &i)| {
                        (
                            w[0].graph().edge_id(o).clone(),
                            w[1].graph().edge_id(i).clone(),
                        )
                    })
                    .collect(),
            );
        }
        Ok(ElementaryDecomposition {
            factors,
            interfaces,
        })
    }

    pub fn factors(&self) -> &[PopGraph] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// For each consecutive pair of factors, `(output of lower, input of
    /// upper)` pairs in order.
    pub fn interfaces(&self) -> &[Vec<(EdgeId, EdgeId)>] {
        &self.interfaces
    }
}

/// Peels maximal vertices until none remain. A graph without internal
/// vertices is its own single factor.
pub fn elementary_decomposition(pop: &PopGraph) -> ElementaryDecomposition {
    let mut factors = Vec::new();
    let mut rest = pop.clone();
    while !rest.graph().internal_ixs().is_empty() {
        let (lower, factor) = decompose_step(&rest).expect("graph has an internal vertex");
        factors.push(factor);
        rest = lower;
    }
    if factors.is_empty() {
        factors.push(rest);
    }
    factors.reverse();
    ElementaryDecomposition::new(factors).expect("peeled factors are elementary and composable")
}

/// Left fold of [`compose`] over the factors.
pub fn recompose(d: &ElementaryDecomposition) -> Result<PopGraph> {
    let mut it = d.factors.iter();
    let first = it.next().ok_or_else(|| Error::Internal("empty decomposition".into()))?;
    it.try_fold(first.clone(), |acc, f| compose(&acc, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pop(edges: &[(&str, &str, &str)], order: &str) -> PopGraph {
        let g = ProgressiveGraph::new(DirectedMultigraph::from_edges(edges.iter().copied()).unwrap())
            .unwrap();
        let seq: Vec<EdgeId> = order.split_whitespace().map(EdgeId::from).collect();
        PopGraph::new(g, &seq).unwrap()
    }

    fn spider22(order: &str) -> PopGraph {
        pop(
            &[
                ("i1", "p1", "v"),
                ("i2", "p2", "v"),
                ("o1", "v", "q1"),
                ("o2", "v", "q2"),
            ],
            order,
        )
    }

    #[test]
    fn wire_composed_with_wire() {
        let a = pop(&[("a", "u", "w")], "a");
        let c = compose(&a, &a).unwrap();
        assert_eq!(c.edge_count(), 1);
        assert!(pop_isomorphic(&c, &a));
    }

    #[test]
    fn spider_under_two_wires() {
        let sp = pop(&[("x", "p", "v"), ("o1", "v", "q1"), ("o2", "v", "q2")], "x o1 o2");
        let wires = pop(&[("i1", "a1", "b1"), ("i2", "a2", "b2")], "i1 i2");
        let comp = compose_with_provenance(&sp, &wires).unwrap();
        assert_eq!(comp.pop.order().to_string(), "x o1~i1 o2~i2");
        assert!(pop_isomorphic(&comp.pop, &sp));
        assert_eq!(comp.glued[1].output.as_str(), "o2");
        assert_eq!(comp.glued[1].input.as_str(), "i2");
    }

    #[test]
    fn arity_mismatch() {
        let sp = spider22("i1 i2 o1 o2");
        let one = pop(&[("a", "u", "w")], "a");
        assert!(matches!(compose(&sp, &one), Err(Error::ArityMismatch(2, 1))));
    }

    #[test]
    fn clashing_ids_are_primed() {
        let sp = spider22("i1 i2 o1 o2");
        let c = compose(&sp, &sp).unwrap();
        assert_eq!(c.edge_count(), 6);
        assert_eq!(c.graph().internal_vertices().len(), 2);
        assert!(c.graph().contains_vertex("v'"));
    }

    #[test]
    fn isomorphism_follows_roles_of_ranked_edges() {
        // All planar orders of a spider relabel into one another.
        let a = spider22("i1 i2 o1 o2");
        assert!(pop_isomorphic(&a, &spider22("i2 i1 o1 o2")));
        assert!(pop_isomorphic(&a, &spider22("i1 i2 o2 o1")));
        // Here the rank-1 edge is a bare wire in one order and enters the
        // internal vertex in the other.
        let edges = [("w", "a", "b"), ("i", "p", "v"), ("o", "v", "q")];
        assert!(!pop_isomorphic(&pop(&edges, "w i o"), &pop(&edges, "i o w")));
        let path = pop(&[("x", "p", "v"), ("y", "v", "w"), ("z", "w", "q")], "x y z");
        let fork = pop(&[("x", "p", "v"), ("y", "v", "q1"), ("z", "v", "q2")], "x y z");
        assert!(!pop_isomorphic(&path, &fork));
    }

    #[test]
    fn spider_step() {
        let sp = spider22("i1 i2 o1 o2");
        let (rest, factor) = decompose_step(&sp).unwrap();
        assert_eq!(rest.edge_count(), 2);
        assert!(rest.graph().internal_vertices().is_empty());
        assert!(pop_isomorphic(&factor, &sp));
        assert!(pop_isomorphic(&compose(&rest, &factor).unwrap(), &sp));
    }

    #[test]
    fn no_internal_vertex() {
        let a = pop(&[("a", "u", "w")], "a");
        assert!(matches!(decompose_step(&a), Err(Error::NoInternalVertex)));
        let d = elementary_decomposition(&a);
        assert_eq!(d.len(), 1);
        assert!(pop_isomorphic(&recompose(&d).unwrap(), &a));
    }

    #[test]
    fn non_maximal_vertex_is_refused() {
        let path = pop(&[("x", "p", "v"), ("y", "v", "w"), ("z", "w", "q")], "x y z");
        assert!(matches!(decompose_step_at(&path, "v"), Err(Error::NotMaximal(_))));
        assert!(decompose_step_at(&path, "w").is_ok());
    }

    #[test]
    fn elementary_check() {
        let wires = pop(&[("i1", "a1", "b1"), ("i2", "a2", "b2")], "i1 i2");
        assert!(is_elementary(wires.graph()));
        let path = pop(&[("x", "p", "v"), ("y", "v", "w"), ("z", "w", "q")], "x y z");
        assert!(!is_elementary(path.graph()));
    }
}

//! Directed multigraphs, progressive graphs and st graphs.
//!
//! A progressive graph is an acyclic directed multigraph whose sources and
//! sinks all have degree one. Reachability over vertices is precomputed once
//! as a bit matrix; edge reachability is answered from it in constant time.

use std::borrow::Borrow;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::synthesis::Polarization;

macro_rules! string_id {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                $name(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(s)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }
    };
}

string_id!(
    /// Textual edge identifier, unique within one graph.
    EdgeId
);
string_id!(
    /// Textual vertex identifier, unique within one graph.
    VertexId
);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub src: VertexId,
    pub dst: VertexId,
}

/// Vertices plus an ordered list of uniquely named edges. Parallel edges are
/// allowed; nothing about acyclicity is checked here.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DirectedMultigraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    vertex_set: HashSet<VertexId>,
    edge_set: HashSet<EdgeId>,
}

impl DirectedMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from `(id, src, dst)` triples.
    pub fn from_edges<I, E, V>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, V, V)>,
        E: Into<EdgeId>,
        V: Into<VertexId>,
    {
        let mut g = Self::new();
        for (id, src, dst) in edges {
            g.add_edge(id, src, dst)?;
        }
        Ok(g)
    }

    /// Declares a vertex. Declaring an existing vertex again is a no-op.
    pub fn add_vertex(&mut self, v: impl Into<VertexId>) -> Result<()> {
        let v = v.into();
        if v.as_str().is_empty() {
            return Err(Error::EmptyId);
        }
        if self.vertex_set.insert(v.clone()) {
            self.vertices.push(v);
        }
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<EdgeId>,
        src: impl Into<VertexId>,
        dst: impl Into<VertexId>,
    ) -> Result<()> {
        let id = id.into();
        if id.as_str().is_empty() {
            return Err(Error::EmptyId);
        }
        if self.edge_set.contains(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        let (src, dst) = (src.into(), dst.into());
        self.add_vertex(src.clone())?;
        self.add_vertex(dst.clone())?;
        self.edge_set.insert(id.clone());
        self.edges.push(Edge { id, src, dst });
        Ok(())
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertex_set.contains(v)
    }
}

/// Dense indexing of a multigraph plus adjacency lists.
#[derive(Clone, Debug)]
struct Indexed {
    edge_ix: HashMap<EdgeId, usize>,
    vertex_ix: HashMap<VertexId, usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl Indexed {
    fn new(g: &DirectedMultigraph) -> Self {
        let vertex_ix: HashMap<VertexId, usize> = g
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let edge_ix = g
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id.clone(), i))
            .collect();
        let n = g.vertices.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let mut src = Vec::with_capacity(g.edges.len());
        let mut dst = Vec::with_capacity(g.edges.len());
        for (i, e) in g.edges.iter().enumerate() {
            let (s, t) = (vertex_ix[&e.src], vertex_ix[&e.dst]);
            src.push(s);
            dst.push(t);
            out_adj[s].push(i);
            in_adj[t].push(i);
        }
        Indexed {
            edge_ix,
            vertex_ix,
            src,
            dst,
            out_adj,
            in_adj,
        }
    }

    /// Kahn's algorithm, smallest index first. Returns the leftover vertices
    /// on failure.
    fn topological_order(&self) -> std::result::Result<Vec<usize>, Vec<usize>> {
        let n = self.out_adj.len();
        let mut indeg: Vec<usize> = self.in_adj.iter().map(Vec::len).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &e in &self.out_adj[v] {
                let w = self.dst[e];
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push_back(w);
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err((0..n).filter(|&v| indeg[v] > 0).collect())
        }
    }

    /// Walks forward inside the leftover set until a vertex repeats.
    fn cycle_witness(&self, leftover: &[usize]) -> Vec<usize> {
        let alive: HashSet<usize> = leftover.iter().copied().collect();
        let mut seen: HashMap<usize, usize> = HashMap::new();
        let mut path = Vec::new();
        let mut v = leftover[0];
        loop {
            if let Some(&at) = seen.get(&v) {
                return path[at..].to_vec();
            }
            seen.insert(v, path.len());
            path.push(v);
            v = self.out_adj[v]
                .iter()
                .map(|&e| self.dst[e])
                .find(|w| alive.contains(w))
                .expect("every leftover vertex has a leftover successor");
        }
    }

    /// Reflexive reachability rows, filled in reverse topological order.
    fn closure(&self, topo: &[usize]) -> Vec<FixedBitSet> {
        let n = self.out_adj.len();
        let mut reach = vec![FixedBitSet::with_capacity(n); n];
        for &v in topo.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(v);
            for &e in &self.out_adj[v] {
                row.union_with(&reach[self.dst[e]]);
            }
            reach[v] = row;
        }
        reach
    }
}

/// An acyclic multigraph whose sources and sinks have degree one, with
/// cached reachability.
#[derive(Clone, Debug)]
pub struct ProgressiveGraph {
    base: DirectedMultigraph,
    ix: Indexed,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
    internal: Vec<usize>,
    reach: Vec<FixedBitSet>,
}

impl PartialEq for ProgressiveGraph {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base
    }
}

impl Eq for ProgressiveGraph {}

/// Checks the progressive-graph axioms and computes inputs, outputs,
/// internal vertices and the reachability closure.
pub fn validate_progressive(g: DirectedMultigraph) -> Result<ProgressiveGraph> {
    ProgressiveGraph::new(g)
}

impl ProgressiveGraph {
    pub fn new(base: DirectedMultigraph) -> Result<Self> {
        let ix = Indexed::new(&base);
        for (v, id) in base.vertices.iter().enumerate() {
            if ix.in_adj[v].is_empty() && ix.out_adj[v].is_empty() {
                return Err(Error::IsolatedVertex(id.clone()));
            }
        }
        let topo = match ix.topological_order() {
            Ok(t) => t,
            Err(left) => {
                let cycle = ix.cycle_witness(&left);
                return Err(Error::CycleDetected(
                    cycle.into_iter().map(|v| base.vertices[v].clone()).collect(),
                ));
            }
        };
        let mut internal = Vec::new();
        for (v, id) in base.vertices.iter().enumerate() {
            let (indeg, outdeg) = (ix.in_adj[v].len(), ix.out_adj[v].len());
            if (indeg == 0 || outdeg == 0) && indeg + outdeg != 1 {
                return Err(Error::BadBoundaryDegree {
                    vertex: id.clone(),
                    degree: indeg + outdeg,
                });
            }
            if indeg > 0 && outdeg > 0 {
                internal.push(v);
            }
        }
        let m = base.edges.len();
        let inputs = (0..m).filter(|&e| ix.in_adj[ix.src[e]].is_empty()).collect();
        let outputs = (0..m).filter(|&e| ix.out_adj[ix.dst[e]].is_empty()).collect();
        let reach = ix.closure(&topo);
        Ok(ProgressiveGraph {
            base,
            ix,
            inputs,
            outputs,
            internal,
            reach,
        })
    }

    pub fn graph(&self) -> &DirectedMultigraph {
        &self.base
    }

    pub fn edges(&self) -> &[Edge] {
        &self.base.edges
    }

    pub fn edge_count(&self) -> usize {
        self.base.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertices.len()
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.ix.edge_ix.get(id).map(|&i| &self.base.edges[i])
    }

    pub fn contains_edge(&self, id: &str) -> bool {
        self.ix.edge_ix.contains_key(id)
    }

    pub fn contains_vertex(&self, id: &str) -> bool {
        self.ix.vertex_ix.contains_key(id)
    }

    /// Input edges, in declaration order.
    pub fn inputs(&self) -> Vec<&EdgeId> {
        self.inputs.iter().map(|&e| self.edge_id(e)).collect()
    }

    /// Output edges, in declaration order.
    pub fn outputs(&self) -> Vec<&EdgeId> {
        self.outputs.iter().map(|&e| self.edge_id(e)).collect()
    }

    pub fn internal_vertices(&self) -> Vec<&VertexId> {
        self.internal.iter().map(|&v| self.vertex_id(v)).collect()
    }

    pub fn is_input(&self, e: &str) -> bool {
        self.ix
            .edge_ix
            .get(e)
            .is_some_and(|&i| self.is_input_ix(i))
    }

    pub fn is_output(&self, e: &str) -> bool {
        self.ix
            .edge_ix
            .get(e)
            .is_some_and(|&i| self.is_output_ix(i))
    }

    pub fn is_internal(&self, v: &str) -> bool {
        self.ix
            .vertex_ix
            .get(v)
            .is_some_and(|&i| self.is_internal_ix(i))
    }

    /// Incoming edges of `v`, in declaration order.
    pub fn incoming(&self, v: &str) -> Result<Vec<&EdgeId>> {
        let v = self.require_vertex(v)?;
        Ok(self.ix.in_adj[v].iter().map(|&e| self.edge_id(e)).collect())
    }

    /// Outgoing edges of `v`, in declaration order.
    pub fn outgoing(&self, v: &str) -> Result<Vec<&EdgeId>> {
        let v = self.require_vertex(v)?;
        Ok(self.ix.out_adj[v].iter().map(|&e| self.edge_id(e)).collect())
    }

    /// Reflexive edge reachability: `e1 == e2` or a directed path runs from
    /// the head of `e1` to the tail of `e2`.
    pub fn reaches(&self, e1: &str, e2: &str) -> Result<bool> {
        let (a, b) = (self.require_edge(e1)?, self.require_edge(e2)?);
        Ok(self.ereach(a, b))
    }

    /// The strict edge poset relation.
    pub fn strictly_reaches(&self, e1: &str, e2: &str) -> Result<bool> {
        let (a, b) = (self.require_edge(e1)?, self.require_edge(e2)?);
        Ok(self.sreach(a, b))
    }

    pub fn vertex_reaches(&self, v1: &str, v2: &str) -> Result<bool> {
        let (a, b) = (self.require_vertex(v1)?, self.require_vertex(v2)?);
        Ok(self.vreach(a, b))
    }

    /// Connected components as sorted lists of vertex ids, ordered by the
    /// first vertex of each component in declaration order.
    pub fn components(&self) -> Vec<Vec<&VertexId>> {
        self.component_ixs()
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.vertex_id(v)).collect())
            .collect()
    }

    /// `true` when the identity map on edge ids extends to a vertex bijection
    /// preserving heads and tails.
    pub fn same_up_to_vertex_renaming(&self, other: &ProgressiveGraph) -> bool {
        same_shape(&self.base, &other.base)
    }

    /// Completes the graph to a PERT graph by merging all boundary sources
    /// into a fresh `s` and all boundary sinks into a fresh `t`.
    pub fn hat(&self) -> Result<StGraph> {
        for reserved in [ST_SOURCE, ST_SINK] {
            if self.contains_vertex(reserved) {
                return Err(Error::ReservedVertexName(reserved.into()));
            }
        }
        // Vertices are declared through the edges, as a parser would.
        let mut g = DirectedMultigraph::new();
        for (i, e) in self.base.edges.iter().enumerate() {
            let src = if self.is_input_ix(i) {
                VertexId::from(ST_SOURCE)
            } else {
                e.src.clone()
            };
            let dst = if self.is_output_ix(i) {
                VertexId::from(ST_SINK)
            } else {
                e.dst.clone()
            };
            g.add_edge(e.id.clone(), src, dst)?;
        }
        g.add_vertex(ST_SOURCE)?;
        g.add_vertex(ST_SINK)?;
        StGraph::new(g, ST_SOURCE, ST_SINK)
    }

    // Index-level helpers used across the crate.

    pub(crate) fn edge_ix(&self, id: &str) -> Option<usize> {
        self.ix.edge_ix.get(id).copied()
    }

    pub(crate) fn vertex_ix(&self, id: &str) -> Option<usize> {
        self.ix.vertex_ix.get(id).copied()
    }

    pub(crate) fn require_edge(&self, id: &str) -> Result<usize> {
        self.edge_ix(id)
            .ok_or_else(|| Error::UnknownEdge(id.into()))
    }

    pub(crate) fn require_vertex(&self, id: &str) -> Result<usize> {
        self.vertex_ix(id)
            .ok_or_else(|| Error::UnknownVertex(id.into()))
    }

    pub(crate) fn edge_id(&self, e: usize) -> &EdgeId {
        &self.base.edges[e].id
    }

    pub(crate) fn vertex_id(&self, v: usize) -> &VertexId {
        &self.base.vertices[v]
    }

    pub(crate) fn src_ix(&self, e: usize) -> usize {
        self.ix.src[e]
    }

    pub(crate) fn dst_ix(&self, e: usize) -> usize {
        self.ix.dst[e]
    }

    pub(crate) fn out_ixs(&self, v: usize) -> &[usize] {
        &self.ix.out_adj[v]
    }

    pub(crate) fn in_ixs(&self, v: usize) -> &[usize] {
        &self.ix.in_adj[v]
    }

    pub(crate) fn input_ixs(&self) -> &[usize] {
        &self.inputs
    }

    pub(crate) fn output_ixs(&self) -> &[usize] {
        &self.outputs
    }

    pub(crate) fn internal_ixs(&self) -> &[usize] {
        &self.internal
    }

    pub(crate) fn is_input_ix(&self, e: usize) -> bool {
        self.ix.in_adj[self.ix.src[e]].is_empty()
    }

    pub(crate) fn is_output_ix(&self, e: usize) -> bool {
        self.ix.out_adj[self.ix.dst[e]].is_empty()
    }

    pub(crate) fn is_internal_ix(&self, v: usize) -> bool {
        !self.ix.in_adj[v].is_empty() && !self.ix.out_adj[v].is_empty()
    }

    pub(crate) fn vreach(&self, a: usize, b: usize) -> bool {
        self.reach[a].contains(b)
    }

    pub(crate) fn ereach(&self, a: usize, b: usize) -> bool {
        a == b || self.reach[self.ix.dst[a]].contains(self.ix.src[b])
    }

    pub(crate) fn sreach(&self, a: usize, b: usize) -> bool {
        a != b && self.ereach(a, b)
    }

    pub(crate) fn component_ixs(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut members = vec![start];
            comp[start] = c;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let nbrs = self.ix.out_adj[v]
                    .iter()
                    .map(|&e| self.ix.dst[e])
                    .chain(self.ix.in_adj[v].iter().map(|&e| self.ix.src[e]));
                for w in nbrs.collect::<Vec<_>>() {
                    if comp[w] == usize::MAX {
                        comp[w] = c;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

pub const ST_SOURCE: &str = "s";
pub const ST_SINK: &str = "t";

/// A PERT graph: acyclic, with `source` the only source and `sink` the only
/// sink. Optionally carries incidence orders at each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StGraph {
    graph: DirectedMultigraph,
    source: VertexId,
    sink: VertexId,
    rotation: Option<Polarization>,
}

impl StGraph {
    pub fn new(
        graph: DirectedMultigraph,
        source: impl Into<VertexId>,
        sink: impl Into<VertexId>,
    ) -> Result<Self> {
        let (source, sink) = (source.into(), sink.into());
        for v in [&source, &sink] {
            if !graph.contains_vertex(v.as_str()) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        if source == sink {
            return Err(Error::NotPert("source and sink coincide".into()));
        }
        let ix = Indexed::new(&graph);
        if let Err(left) = ix.topological_order() {
            let cycle = ix.cycle_witness(&left);
            return Err(Error::CycleDetected(
                cycle.into_iter().map(|v| graph.vertices[v].clone()).collect(),
            ));
        }
        for (v, id) in graph.vertices.iter().enumerate() {
            if ix.in_adj[v].is_empty() && *id != source {
                return Err(Error::NotPert(format!("{id} is a second source")));
            }
            if ix.out_adj[v].is_empty() && *id != sink {
                return Err(Error::NotPert(format!("{id} is a second sink")));
            }
        }
        let s = ix.vertex_ix[&source];
        let t = ix.vertex_ix[&sink];
        if !ix.in_adj[s].is_empty() {
            return Err(Error::NotPert(format!("source {source} has incoming edges")));
        }
        if !ix.out_adj[t].is_empty() {
            return Err(Error::NotPert(format!("sink {sink} has outgoing edges")));
        }
        Ok(StGraph {
            graph,
            source,
            sink,
            rotation: None,
        })
    }

    /// Attaches incidence orders; every listed vertex must have its incident
    /// edges partitioned exactly by direction.
    pub fn with_rotation(mut self, rotation: Polarization) -> Result<Self> {
        rotation.check_against(&self.graph, |_| true)?;
        self.rotation = Some(rotation);
        Ok(self)
    }

    pub fn graph(&self) -> &DirectedMultigraph {
        &self.graph
    }

    pub fn source(&self) -> &VertexId {
        &self.source
    }

    pub fn sink(&self) -> &VertexId {
        &self.sink
    }

    pub fn rotation(&self) -> Option<&Polarization> {
        self.rotation.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges.len()
    }

    pub fn out_degree(&self, v: &str) -> usize {
        self.graph.edges.iter().filter(|e| e.src.as_str() == v).count()
    }

    pub fn in_degree(&self, v: &str) -> usize {
        self.graph.edges.iter().filter(|e| e.dst.as_str() == v).count()
    }

    /// Removes `source` and `sink`, giving every edge that touched them a
    /// fresh degree-one endpoint named `s@<edge>` / `t@<edge>`.
    pub fn circ(&self) -> Result<ProgressiveGraph> {
        let mut taken: HashSet<String> = self
            .graph
            .vertices
            .iter()
            .map(|v| v.as_str().to_owned())
            .collect();
        let mut g = DirectedMultigraph::new();
        for e in &self.graph.edges {
            let src = if e.src == self.source {
                VertexId::from(fresh_name(&format!("s@{}", e.id), &mut taken))
            } else {
                e.src.clone()
            };
            let dst = if e.dst == self.sink {
                VertexId::from(fresh_name(&format!("t@{}", e.id), &mut taken))
            } else {
                e.dst.clone()
            };
            g.add_edge(e.id.clone(), src, dst)?;
        }
        ProgressiveGraph::new(g)
    }

    /// Edge-id-preserving isomorphism, as for progressive graphs, with the
    /// extra requirement that the poles correspond.
    pub fn same_up_to_vertex_renaming(&self, other: &StGraph) -> bool {
        let Some(map) = vertex_map(&self.graph, &other.graph) else {
            return false;
        };
        map.get(&self.source) == Some(&&other.source) && map.get(&self.sink) == Some(&&other.sink)
    }
}

/// Appends primes to `base` until it is unused, then reserves it.
pub(crate) fn fresh_name(base: &str, taken: &mut HashSet<String>) -> String {
    let mut name = base.to_owned();
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}

fn vertex_map<'a>(
    a: &'a DirectedMultigraph,
    b: &'a DirectedMultigraph,
) -> Option<HashMap<&'a VertexId, &'a VertexId>> {
    if a.edges.len() != b.edges.len() || a.vertices.len() != b.vertices.len() {
        return None;
    }
    let by_id: HashMap<&EdgeId, &Edge> = b.edges.iter().map(|e| (&e.id, e)).collect();
    let mut fwd: HashMap<&VertexId, &VertexId> = HashMap::new();
    let mut bwd: HashMap<&VertexId, &VertexId> = HashMap::new();
    for e in &a.edges {
        let f = by_id.get(&e.id)?;
        for (x, y) in [(&e.src, &f.src), (&e.dst, &f.dst)] {
            if *fwd.entry(x).or_insert(y) != y || *bwd.entry(y).or_insert(x) != x {
                return None;
            }
        }
    }
    (fwd.len() == a.vertices.len()).then_some(fwd)
}

fn same_shape(a: &DirectedMultigraph, b: &DirectedMultigraph) -> bool {
    vertex_map(a, b).is_some()
}

//! Graph families and random POP-graphs for tests and experiments.
//!
//! Deterministic families name boundary sources `a1, a2, …` and boundary
//! sinks `z1, z2, …`. Random layers draw from any [`rand::Rng`], so a seeded
//! generator reproduces the same graphs.

use rand::Rng;

use crate::composition::compose;
use crate::graph::{DirectedMultigraph, EdgeId, ProgressiveGraph};
use crate::order::PopGraph;

fn build(edges: Vec<(String, String, String)>) -> ProgressiveGraph {
    let g = DirectedMultigraph::from_edges(edges).expect("generated ids are distinct");
    ProgressiveGraph::new(g).expect("generated graphs are progressive")
}

/// One internal vertex `v` with inputs `i1..ip` and outputs `o1..oq`.
pub fn spider(p: usize, q: usize) -> ProgressiveGraph {
    assert!(p >= 1 && q >= 1, "a spider needs at least one leg on each side");
    let mut edges = Vec::new();
    for k in 1..=p {
        edges.push((format!("i{k}"), format!("a{k}"), "v".into()));
    }
    for k in 1..=q {
        edges.push((format!("o{k}"), "v".into(), format!("z{k}")));
    }
    build(edges)
}

/// `k` disjoint bare edges `e1..ek`.
pub fn bare_edges(k: usize) -> ProgressiveGraph {
    build(
        (1..=k)
            .map(|j| (format!("e{j}"), format!("a{j}"), format!("z{j}")))
            .collect(),
    )
}

/// A single input `i` splits at `u` into two branches that rejoin at `w`
/// before the single output `o`; branch `j` is a path of `len[j]` edges.
pub fn fork(left: usize, right: usize) -> ProgressiveGraph {
    assert!(left >= 1 && right >= 1);
    let mut edges = vec![("i".to_string(), "a1".to_string(), "u".to_string())];
    for (side, len) in [("l", left), ("r", right)] {
        let mut prev = "u".to_string();
        for j in 1..=len {
            let next = if j == len { "w".to_string() } else { format!("{side}{j}") };
            edges.push((format!("{side}e{j}"), prev, next.clone()));
            prev = next;
        }
    }
    edges.push(("o".into(), "w".into(), "z1".into()));
    build(edges)
}

/// `k` parallel edges `m1..mk` from `u` to `w`, fed by input `i` and
/// drained by output `o`.
pub fn parallel(k: usize) -> ProgressiveGraph {
    assert!(k >= 1);
    let mut edges = vec![("i".to_string(), "a1".to_string(), "u".to_string())];
    for j in 1..=k {
        edges.push((format!("m{j}"), "u".into(), "w".into()));
    }
    edges.push(("o".into(), "w".into(), "z1".into()));
    build(edges)
}

/// A path through `n` internal vertices.
pub fn chain(n: usize) -> ProgressiveGraph {
    let names: Vec<String> = std::iter::once("a1".to_string())
        .chain((1..=n).map(|j| format!("c{j}")))
        .chain(std::iter::once("z1".to_string()))
        .collect();
    build(
        names
            .windows(2)
            .enumerate()
            .map(|(j, w)| (format!("e{}", j + 1), w[0].clone(), w[1].clone()))
            .collect(),
    )
}

/// Side-by-side union; ids of `a` get the prefix `L.`, ids of `b` `R.`.
pub fn disjoint_union(a: &ProgressiveGraph, b: &ProgressiveGraph) -> ProgressiveGraph {
    let mut edges = Vec::new();
    for (tag, g) in [("L.", a), ("R.", b)] {
        for e in g.edges() {
            edges.push((format!("{tag}{}", e.id), format!("{tag}{}", e.src), format!("{tag}{}", e.dst)));
        }
    }
    build(edges)
}

/// Named members of the fixed suite with at most `max_edges` edges:
/// spiders, bare edges, forks, parallel pairs, chains, and disjoint unions
/// of two small members.
pub fn suite(max_edges: usize) -> Vec<(String, ProgressiveGraph)> {
    let mut base: Vec<(String, ProgressiveGraph)> = Vec::new();
    for p in 1..=4 {
        for q in 1..=4 {
            base.push((format!("spider({p},{q})"), spider(p, q)));
        }
    }
    for k in 1..=6 {
        base.push((format!("bare({k})"), bare_edges(k)));
    }
    for l in 1..=3 {
        for r in l..=3 {
            base.push((format!("fork({l},{r})"), fork(l, r)));
        }
    }
    for k in 2..=5 {
        base.push((format!("parallel({k})"), parallel(k)));
    }
    for n in 1..=4 {
        base.push((format!("chain({n})"), chain(n)));
    }
    let small: Vec<(String, ProgressiveGraph)> = base
        .iter()
        .filter(|(name, g)| g.edge_count() <= 4 && !name.starts_with("bare"))
        .cloned()
        .collect();
    for (i, (na, a)) in small.iter().enumerate() {
        for (nb, b) in &small[i..] {
            base.push((format!("{na}+{nb}"), disjoint_union(a, b)));
        }
    }
    base.retain(|(_, g)| g.edge_count() <= max_edges);
    base
}

/// Shape parameters for random elementary layers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LayerShape {
    /// Upper bound on legs per side of one spider.
    pub max_legs: usize,
    /// Upper bound on the number of outputs of a layer.
    pub max_width: usize,
}

impl Default for LayerShape {
    fn default() -> Self {
        LayerShape {
            max_legs: 3,
            max_width: 6,
        }
    }
}

/// A random elementary POP-graph with `inputs` inputs: left to right, a mix
/// of bare edges and spiders, each component contiguous in the order with
/// its inputs before its outputs. Ids carry the prefix `tag`.
pub fn random_layer<R: Rng + ?Sized>(
    rng: &mut R,
    inputs: usize,
    shape: LayerShape,
    tag: &str,
) -> PopGraph {
    assert!(inputs >= 1, "a layer needs an input");
    let max_legs = shape.max_legs.max(1);
    let mut edges: Vec<(String, String, String)> = Vec::new();
    let mut order: Vec<EdgeId> = Vec::new();
    let mut remaining = inputs;
    let mut width = 0;
    let mut next = 0;
    let mut fresh = |kind: &str| {
        next += 1;
        format!("{tag}{kind}{next}")
    };
    while remaining > 0 {
        // Leave room for one output per remaining input.
        let room = shape.max_width.saturating_sub(width + remaining - 1).max(1);
        if rng.gen_bool(0.4) {
            let id = fresh("e");
            edges.push((id.clone(), fresh("a"), fresh("z")));
            order.push(id.into());
            remaining -= 1;
            width += 1;
            continue;
        }
        let p = rng.gen_range(1..=max_legs.min(remaining));
        let q = rng.gen_range(1..=max_legs.min(room));
        let v = fresh("v");
        for _ in 0..p {
            let id = fresh("e");
            edges.push((id.clone(), fresh("a"), v.clone()));
            order.push(id.into());
        }
        for _ in 0..q {
            let id = fresh("e");
            edges.push((id.clone(), v.clone(), fresh("z")));
            order.push(id.into());
        }
        remaining -= p;
        width += q;
    }
    PopGraph::new(build(edges), &order).expect("layer orders are planar")
}

/// Composes `layers` random elementary layers, starting from `inputs`
/// inputs. Layer `k` uses the id prefix `L<k>.`.
pub fn random_pop<R: Rng + ?Sized>(
    rng: &mut R,
    inputs: usize,
    layers: usize,
    shape: LayerShape,
) -> PopGraph {
    let mut acc = random_layer(rng, inputs, shape, "L1.");
    for k in 2..=layers {
        let n = acc.graph().outputs().len();
        let layer = random_layer(rng, n, shape, &format!("L{k}."));
        acc = compose(&acc, &layer).expect("arities match by construction");
    }
    acc
}

//! Line-oriented text formats.
//!
//! `.ppg` describes a progressive graph with optional polarization/anchor
//! data and an optional planar order:
//!
//! ```text
//! ppg 1
//! edge <edge-id> <src-vertex> <dst-vertex>
//! inputs <edge-id> ...
//! outputs <edge-id> ...
//! in <vertex> <edge-id> ...
//! out <vertex> <edge-id> ...
//! order <edge-id> ...
//! ```
//!
//! `.stg` describes an st graph: header `stg 1`, `edge` lines, one `source`
//! and one `sink` line, and optional `in`/`out` incidence orders. `#` starts
//! a comment anywhere on a line.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, Result, SynthesisDefect};
use crate::graph::{DirectedMultigraph, EdgeId, ProgressiveGraph, StGraph};
use crate::order::PopGraph;
use crate::synthesis::{extract_pa, Anchor, PaGraph, Polarization, VertexOrder};

/// A parsed `.ppg` file. `pa` is present when any anchor or polarization
/// line was given; `pop` when an `order` line was given. When both are
/// present they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PpgDocument {
    graph: ProgressiveGraph,
    pa: Option<PaGraph>,
    pop: Option<PopGraph>,
}

impl PpgDocument {
    pub fn from_graph(graph: ProgressiveGraph) -> Self {
        PpgDocument {
            graph,
            pa: None,
            pop: None,
        }
    }

    pub fn from_pa(pa: PaGraph) -> Self {
        PpgDocument {
            graph: pa.graph().clone(),
            pa: Some(pa),
            pop: None,
        }
    }

    /// The order together with the polarization and anchor it induces.
    pub fn from_pop(pop: PopGraph) -> Self {
        PpgDocument {
            graph: pop.graph().clone(),
            pa: Some(extract_pa(&pop)),
            pop: Some(pop),
        }
    }

    /// The order alone, without derived polarization lines.
    pub fn from_order(pop: PopGraph) -> Self {
        PpgDocument {
            graph: pop.graph().clone(),
            pa: None,
            pop: Some(pop),
        }
    }

    pub fn graph(&self) -> &ProgressiveGraph {
        &self.graph
    }

    pub fn pa(&self) -> Option<&PaGraph> {
        self.pa.as_ref()
    }

    pub fn pop(&self) -> Option<&PopGraph> {
        self.pop.as_ref()
    }
}

/// Either kind of file, dispatched on the header line.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Ppg(PpgDocument),
    Stg(StGraph),
}

struct Line<'a> {
    no: usize,
    keyword: &'a str,
    args: Vec<&'a str>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut tokens = body.split_whitespace();
            let keyword = tokens.next()?;
            Some(Line {
                no: i + 1,
                keyword,
                args: tokens.collect(),
            })
        })
        .collect()
}

fn header<'a, 'b>(lines: &'b [Line<'a>]) -> Result<(&'a str, &'b [Line<'a>])> {
    let Some((first, rest)) = lines.split_first() else {
        return Err(Error::parse(1, "empty document: expected a `ppg 1` or `stg 1` header"));
    };
    match (first.keyword, first.args.as_slice()) {
        (kind @ ("ppg" | "stg"), ["1"]) => Ok((kind, rest)),
        (kind @ ("ppg" | "stg"), _) => Err(Error::parse(
            first.no,
            format!("unsupported {kind} header; expected `{kind} 1`"),
        )),
        _ => Err(Error::parse(
            first.no,
            format!("expected a `ppg 1` or `stg 1` header, found `{}`", first.keyword),
        )),
    }
}

/// Parses either format, dispatching on the header.
pub fn parse_document(text: &str) -> Result<Document> {
    let all = lines(text);
    let (kind, _) = header(&all)?;
    if kind == "ppg" {
        parse_ppg(text).map(Document::Ppg)
    } else {
        parse_stg(text).map(Document::Stg)
    }
}

/// Shared state for the directives both formats understand.
#[derive(Default)]
struct Common<'a> {
    edges: Vec<(usize, &'a str, &'a str, &'a str)>,
    ins: BTreeMap<&'a str, (usize, Vec<&'a str>)>,
    outs: BTreeMap<&'a str, (usize, Vec<&'a str>)>,
}

impl<'a> Common<'a> {
    /// Returns `Ok(false)` for keywords it does not handle.
    fn accept(&mut self, line: &Line<'a>) -> Result<bool> {
        match line.keyword {
            "edge" => match line.args.as_slice() {
                [id, src, dst] => self.edges.push((line.no, id, src, dst)),
                _ => return Err(Error::parse(line.no, "expected `edge <id> <src> <dst>`")),
            },
            kw @ ("in" | "out") => {
                let Some((v, list)) = line.args.split_first() else {
                    return Err(Error::parse(line.no, format!("expected `{kw} <vertex> <edge>...`")));
                };
                let map = if kw == "in" { &mut self.ins } else { &mut self.outs };
                if map.insert(v, (line.no, list.to_vec())).is_some() {
                    return Err(Error::parse(line.no, format!("second `{kw}` line for vertex {v}")));
                }
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn multigraph(&self) -> Result<DirectedMultigraph> {
        let mut g = DirectedMultigraph::new();
        for &(no, id, src, dst) in &self.edges {
            g.add_edge(id, src, dst)
                .map_err(|e| Error::parse(no, e.to_string()))?;
        }
        Ok(g)
    }

    fn check_edges(&self, g: &DirectedMultigraph, no: usize, ids: &[&str]) -> Result<()> {
        let known: HashSet<&str> = g.edges().iter().map(|e| e.id.as_str()).collect();
        for id in ids {
            if !known.contains(id) {
                return Err(Error::parse(no, format!("undeclared edge {id}")));
            }
        }
        Ok(())
    }

    /// Checks references and builds the incidence orders; a vertex with only
    /// one of its two lines gets an empty list for the other.
    fn polarization(
        &self,
        g: &DirectedMultigraph,
        vertex_ok: impl Fn(&str) -> std::result::Result<(), String>,
    ) -> Result<Polarization> {
        let mut pol = Polarization::new();
        for (map, incoming) in [(&self.ins, true), (&self.outs, false)] {
            for (&v, (no, list)) in map {
                if !g.contains_vertex(v) {
                    return Err(Error::parse(*no, format!("undeclared vertex {v}")));
                }
                vertex_ok(v).map_err(|m| Error::parse(*no, m))?;
                self.check_edges(g, *no, list)?;
                if pol.get(v).is_none() {
                    pol.set(v, VertexOrder::default());
                }
                let ord = pol.get_mut(v).expect("just inserted");
                let ids = list.iter().map(|&e| EdgeId::from(e)).collect();
                if incoming {
                    ord.incoming = ids;
                } else {
                    ord.outgoing = ids;
                }
            }
        }
        Ok(pol)
    }
}

fn take_list<'a>(
    slot: &mut Option<(usize, Vec<&'a str>)>,
    line: &Line<'a>,
) -> Result<()> {
    if slot.is_some() {
        return Err(Error::parse(line.no, format!("second `{}` line", line.keyword)));
    }
    *slot = Some((line.no, line.args.clone()));
    Ok(())
}

/// Parses a `.ppg` document and applies all structural validations.
pub fn parse_ppg(text: &str) -> Result<PpgDocument> {
    let all = lines(text);
    let (kind, body) = header(&all)?;
    if kind != "ppg" {
        return Err(Error::parse(all[0].no, "expected a `ppg 1` header"));
    }
    let mut common = Common::default();
    let mut inputs = None;
    let mut outputs = None;
    let mut order = None;
    for line in body {
        if common.accept(line)? {
            continue;
        }
        match line.keyword {
            "inputs" => take_list(&mut inputs, line)?,
            "outputs" => take_list(&mut outputs, line)?,
            "order" => take_list(&mut order, line)?,
            kw => return Err(Error::parse(line.no, format!("unknown directive `{kw}`"))),
        }
    }

    let base = common.multigraph()?;
    for (no, ids) in [&inputs, &outputs, &order].into_iter().flatten() {
        common.check_edges(&base, *no, ids)?;
    }
    let graph = ProgressiveGraph::new(base)?;
    let polarization = common.polarization(graph.graph(), |v| {
        if graph.is_internal(v) {
            Ok(())
        } else {
            Err(format!("boundary vertex {v} takes no in/out line"))
        }
    })?;

    let has_pa = inputs.is_some() || outputs.is_some() || !polarization.is_empty();
    let pa = if has_pa {
        let list = |l: &Option<(usize, Vec<&str>)>| {
            l.as_ref()
                .map(|(_, ids)| ids.iter().map(|&e| EdgeId::from(e)).collect())
                .unwrap_or_default()
        };
        let anchor = Anchor {
            inputs: list(&inputs),
            outputs: list(&outputs),
        };
        Some(PaGraph::new(graph.clone(), polarization, anchor)?)
    } else {
        None
    };
    let pop = match &order {
        Some((_, ids)) => {
            let seq: Vec<EdgeId> = ids.iter().map(|&e| EdgeId::from(e)).collect();
            Some(PopGraph::new(graph.clone(), &seq)?)
        }
        None => None,
    };
    if let (Some(pa), Some(pop)) = (&pa, &pop) {
        let defects = disagreements(pa, pop);
        if !defects.is_empty() {
            return Err(Error::NoConsistentOrder(defects));
        }
    }
    Ok(PpgDocument { graph, pa, pop })
}

/// Adjacent pairs of a prescribed incidence or anchor order that the planar
/// order places the other way round.
fn disagreements(pa: &PaGraph, pop: &PopGraph) -> Vec<SynthesisDefect> {
    let mut defects = Vec::new();
    let mut check = |list: &[EdgeId], at: String| {
        for w in list.windows(2) {
            let before = |a: &EdgeId, b: &EdgeId| {
                pop.rank(a.as_str()).ok() < pop.rank(b.as_str()).ok()
            };
            if !before(&w[0], &w[1]) {
                defects.push(SynthesisDefect::Disagrees {
                    a: w[0].clone(),
                    b: w[1].clone(),
                    at: at.clone(),
                });
            }
        }
    };
    for (v, ord) in pa.polarization().iter() {
        check(&ord.incoming, format!("incoming order at {v}"));
        check(&ord.outgoing, format!("outgoing order at {v}"));
    }
    check(&pa.anchor().inputs, "input anchor".into());
    check(&pa.anchor().outputs, "output anchor".into());
    defects
}

fn push_list<'a>(out: &mut String, keyword: &str, items: impl IntoIterator<Item = &'a EdgeId>) {
    out.push_str(keyword);
    for e in items {
        out.push(' ');
        out.push_str(e.as_str());
    }
    out.push('\n');
}

fn push_edges(out: &mut String, g: &DirectedMultigraph) {
    for e in g.edges() {
        writeln!(out, "edge {} {} {}", e.id, e.src, e.dst).expect("writing to a String");
    }
}

fn push_rotation(out: &mut String, pol: &Polarization) {
    for (v, ord) in pol.iter() {
        if !ord.incoming.is_empty() {
            push_list(out, &format!("in {v}"), &ord.incoming);
        }
        if !ord.outgoing.is_empty() {
            push_list(out, &format!("out {v}"), &ord.outgoing);
        }
    }
}

/// Canonical text: header, edges in declaration order, anchor, incidence
/// orders by vertex id, then the planar order.
pub fn emit_ppg(doc: &PpgDocument) -> String {
    let mut out = String::from("ppg 1\n");
    push_edges(&mut out, doc.graph.graph());
    if let Some(pa) = &doc.pa {
        push_list(&mut out, "inputs", &pa.anchor().inputs);
        push_list(&mut out, "outputs", &pa.anchor().outputs);
        push_rotation(&mut out, pa.polarization());
    }
    if let Some(pop) = &doc.pop {
        push_list(&mut out, "order", pop.order().iter());
    }
    out
}

/// Parses a `.stg` document.
pub fn parse_stg(text: &str) -> Result<StGraph> {
    let all = lines(text);
    let (kind, body) = header(&all)?;
    if kind != "stg" {
        return Err(Error::parse(all[0].no, "expected an `stg 1` header"));
    }
    let mut common = Common::default();
    let mut source: Option<(usize, &str)> = None;
    let mut sink: Option<(usize, &str)> = None;
    for line in body {
        if common.accept(line)? {
            continue;
        }
        let slot = match line.keyword {
            "source" => &mut source,
            "sink" => &mut sink,
            kw => return Err(Error::parse(line.no, format!("unknown directive `{kw}`"))),
        };
        match (line.args.as_slice(), slot.is_some()) {
            (_, true) => {
                return Err(Error::parse(line.no, format!("second `{}` line", line.keyword)))
            }
            ([v], false) => *slot = Some((line.no, v)),
            _ => return Err(Error::parse(line.no, format!("expected `{} <vertex>`", line.keyword))),
        }
    }
    let last = all.last().map_or(1, |l| l.no);
    let base = common.multigraph()?;
    let pole = |p: Option<(usize, &str)>, what: &str| -> Result<String> {
        let (no, v) = p.ok_or_else(|| Error::parse(last, format!("missing `{what}` line")))?;
        if !base.contains_vertex(v) {
            return Err(Error::parse(no, format!("undeclared vertex {v}")));
        }
        Ok(v.to_owned())
    };
    let (s, t) = (pole(source, "source")?, pole(sink, "sink")?);
    let rotation = common.polarization(&base, |_| Ok(()))?;
    let st = StGraph::new(base, s, t)?;
    if rotation.is_empty() {
        Ok(st)
    } else {
        st.with_rotation(rotation)
    }
}

/// Canonical `.stg` text: header, edges, poles, then incidence orders by
/// vertex id with empty lists omitted.
pub fn emit_stg(st: &StGraph) -> String {
    let mut out = String::from("stg 1\n");
    push_edges(&mut out, st.graph());
    writeln!(out, "source {}", st.source()).expect("writing to a String");
    writeln!(out, "sink {}", st.sink()).expect("writing to a String");
    if let Some(rot) = st.rotation() {
        push_rotation(&mut out, rot);
    }
    out
}

/// `hat` of a polarized, anchored graph, carrying the anchor as the
/// incidence orders at the poles.
pub fn hat_pa(pa: &PaGraph) -> Result<StGraph> {
    let st = pa.graph().hat()?;
    let mut rot = pa.polarization().clone();
    rot.set(
        st.source().clone(),
        VertexOrder {
            incoming: Vec::new(),
            outgoing: pa.anchor().inputs.clone(),
        },
    );
    rot.set(
        st.sink().clone(),
        VertexOrder {
            incoming: pa.anchor().outputs.clone(),
            outgoing: Vec::new(),
        },
    );
    st.with_rotation(rot)
}

/// `circ` of an st graph; when it carries incidence orders, the pole orders
/// become the anchor and the rest the polarization.
pub fn circ_document(st: &StGraph) -> Result<PpgDocument> {
    let graph = st.circ()?;
    let Some(rot) = st.rotation() else {
        return Ok(PpgDocument::from_graph(graph));
    };
    let mut pol = rot.clone();
    let from_s = pol.remove(st.source().as_str()).unwrap_or_default().outgoing;
    let into_t = pol.remove(st.sink().as_str()).unwrap_or_default().incoming;
    let pa = PaGraph::new(graph, pol, Anchor::new(from_s, into_t))?;
    Ok(PpgDocument::from_pa(pa))
}

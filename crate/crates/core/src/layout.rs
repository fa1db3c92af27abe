//! Upward layered drawings built from the elementary decomposition.
//!
//! Factor `k` (1-based, in composition order) occupies the band
//! `y ∈ [k-1, k]`. A factor's inputs sit on the band's upper line at columns
//! `1, 2, …` in planar order and its outputs on the lower line likewise, so
//! consecutive bands meet at matching columns. The factor's spider sits at
//! mid-band, halfway between its extreme incident columns. Coordinates are
//! exact rationals; `y` grows in the direction of flow for [`Flow::Down`].

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};

use num_rational::Rational64;

use crate::composition::elementary_decomposition;
use crate::graph::{fresh_name, EdgeId, VertexId, ST_SINK, ST_SOURCE};
use crate::order::PopGraph;
use crate::synthesis::{Anchor, Polarization, VertexOrder};

pub type Coord = Rational64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: Coord, y: Coord) -> Self {
        Point { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point::new(Coord::from_integer(x), Coord::from_integer(y))
    }
}

/// `Down`: sources on the line `y = 0`, routes increasing in `y` (the
/// progressive-graph convention). `Up`: mirrored, sources on `y = height`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flow {
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Source,
    Sink,
    Internal,
    /// The merged source of the st completion, outside the box.
    SourceApex,
    /// The merged sink of the st completion, outside the box.
    SinkApex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedVertex {
    pub id: VertexId,
    pub kind: VertexKind,
    pub at: Point,
}

/// Polyline of one edge, from its tail vertex to its head vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Route {
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
    pub points: Vec<Point>,
}

/// A horizontal band holding one elementary factor; `y0` is the line the
/// flow enters through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Band {
    pub y0: Coord,
    pub y1: Coord,
    pub vertex: Option<VertexId>,
}

/// The box is `[0, width] × [0, height]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub width: Coord,
    pub height: Coord,
    pub flow: Flow,
    pub bands: Vec<Band>,
    pub vertices: Vec<PlacedVertex>,
    pub routes: Vec<Route>,
}

impl Drawing {
    /// The same drawing mirrored so that it flows in `flow`.
    pub fn with_flow(mut self, flow: Flow) -> Self {
        if flow == self.flow {
            return self;
        }
        let h = self.height;
        let flip = |p: &mut Point| p.y = h - p.y;
        for v in &mut self.vertices {
            flip(&mut v.at);
        }
        for r in &mut self.routes {
            r.points.iter_mut().for_each(flip);
        }
        for b in &mut self.bands {
            b.y0 = h - b.y0;
            b.y1 = h - b.y1;
        }
        self.flow = flow;
        self
    }

    fn source_line(&self) -> Coord {
        match self.flow {
            Flow::Down => Coord::from_integer(0),
            Flow::Up => self.height,
        }
    }

    fn sink_line(&self) -> Coord {
        match self.flow {
            Flow::Down => self.height,
            Flow::Up => Coord::from_integer(0),
        }
    }

    /// Signed progress along the flow.
    fn along(&self, y: Coord) -> Coord {
        match self.flow {
            Flow::Down => y,
            Flow::Up => -y,
        }
    }
}

fn push_point(points: &mut Vec<Point>, p: Point) {
    if points.last() != Some(&p) {
        points.push(p);
    }
}

/// Draws `pop` downward, one band per elementary factor.
pub fn layout(pop: &PopGraph) -> Drawing {
    let g = pop.graph();
    let decomposition = elementary_decomposition(pop);
    let half = Coord::new(1, 2);
    let mut pieces: Vec<Vec<Point>> = vec![Vec::new(); g.edge_count()];
    let mut internal: Vec<PlacedVertex> = Vec::new();
    let mut bands = Vec::new();
    let mut columns = 0;

    for (k, f) in decomposition.factors().iter().enumerate() {
        let fg = f.graph();
        let top = Coord::from_integer(k as i64);
        let bottom = top + 1;
        let ins = f.inputs_sorted();
        let outs = f.outputs_sorted();
        columns = columns.max(ins.len()).max(outs.len());
        let mut in_col = vec![None; fg.edge_count()];
        for (j, &e) in ins.iter().enumerate() {
            in_col[e] = Some(Coord::from_integer(j as i64 + 1));
        }
        let mut out_col = vec![None; fg.edge_count()];
        for (j, &e) in outs.iter().enumerate() {
            out_col[e] = Some(Coord::from_integer(j as i64 + 1));
        }

        let spider = fg.internal_ixs().first().map(|&v| {
            let cols: Vec<Coord> = fg
                .in_ixs(v)
                .iter()
                .filter_map(|&e| in_col[e])
                .chain(fg.out_ixs(v).iter().filter_map(|&e| out_col[e]))
                .collect();
            let lo = *cols.iter().min().expect("internal vertices have edges");
            let hi = *cols.iter().max().expect("internal vertices have edges");
            let at = Point::new((lo + hi) / 2, top + half);
            internal.push(PlacedVertex {
                id: fg.vertex_id(v).clone(),
                kind: VertexKind::Internal,
                at,
            });
            at
        });

        for e in 0..fg.edge_count() {
            let original = g
                .edge_ix(fg.edge_id(e).as_str())
                .expect("factor edges keep their ids");
            let at_spider = || spider.expect("non-boundary factor edge touches the spider");
            let a = in_col[e].map_or_else(at_spider, |c| Point::new(c, top));
            let b = out_col[e].map_or_else(at_spider, |c| Point::new(c, bottom));
            push_point(&mut pieces[original], a);
            push_point(&mut pieces[original], b);
        }
        bands.push(Band {
            y0: top,
            y1: bottom,
            vertex: fg.internal_ixs().first().map(|&v| fg.vertex_id(v).clone()),
        });
    }

    let mut vertices = Vec::new();
    for &e in &pop.inputs_sorted() {
        vertices.push(PlacedVertex {
            id: g.vertex_id(g.src_ix(e)).clone(),
            kind: VertexKind::Source,
            at: pieces[e][0],
        });
    }
    vertices.extend(internal);
    for &e in &pop.outputs_sorted() {
        vertices.push(PlacedVertex {
            id: g.vertex_id(g.dst_ix(e)).clone(),
            kind: VertexKind::Sink,
            at: *pieces[e].last().expect("routes are non-empty"),
        });
    }
    let routes = pop
        .seq()
        .iter()
        .map(|&e| Route {
            edge: g.edge_id(e).clone(),
            from: g.vertex_id(g.src_ix(e)).clone(),
            to: g.vertex_id(g.dst_ix(e)).clone(),
            points: std::mem::take(&mut pieces[e]),
        })
        .collect();
    Drawing {
        width: Coord::from_integer(columns as i64 + 1),
        height: Coord::from_integer(bands.len() as i64),
        flow: Flow::Down,
        bands,
        vertices,
        routes,
    }
}

/// [`layout`] of the st completion: the boundary sources merge into an apex
/// one unit above the box, the sinks into an apex one unit below.
pub fn layout_st(pop: &PopGraph) -> Drawing {
    let mut d = layout(pop);
    let mut taken: HashSet<String> = d.vertices.iter().map(|v| v.id.as_str().to_owned()).collect();
    let s = VertexId::from(fresh_name(ST_SOURCE, &mut taken));
    let t = VertexId::from(fresh_name(ST_SINK, &mut taken));
    let cx = d.width / 2;
    let s_at = Point::new(cx, Coord::from_integer(-1));
    let t_at = Point::new(cx, d.height + 1);
    let kinds: HashMap<VertexId, VertexKind> =
        d.vertices.iter().map(|v| (v.id.clone(), v.kind)).collect();
    for r in &mut d.routes {
        if kinds[&r.from] == VertexKind::Source {
            r.from = s.clone();
            r.points.insert(0, s_at);
        }
        if kinds[&r.to] == VertexKind::Sink {
            r.to = t.clone();
            r.points.push(t_at);
        }
    }
    d.vertices.retain(|v| v.kind == VertexKind::Internal);
    d.vertices.insert(
        0,
        PlacedVertex {
            id: s,
            kind: VertexKind::SourceApex,
            at: s_at,
        },
    );
    d.vertices.push(PlacedVertex {
        id: t,
        kind: VertexKind::SinkApex,
        at: t_at,
    });
    d
}

/// A broken drawing invariant, with the offending elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrawingDefect {
    /// The route has fewer than two points.
    ShortRoute { edge: EdgeId },
    /// A route end is not at the position of the vertex it names.
    DetachedEnd { edge: EdgeId, vertex: VertexId },
    /// Segment `segment` (0-based) does not advance along the flow.
    NonMonotone { edge: EdgeId, segment: usize },
    /// The vertex is not where its kind requires.
    Misplaced { vertex: VertexId, kind: VertexKind },
    CoincidentVertices { a: VertexId, b: VertexId },
    /// Two routes meet somewhere other than a common end vertex.
    Crossing {
        a: EdgeId,
        segment_a: usize,
        b: EdgeId,
        segment_b: usize,
    },
}

impl fmt::Display for DrawingDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawingDefect::ShortRoute { edge } => write!(f, "route of {edge} has fewer than two points"),
            DrawingDefect::DetachedEnd { edge, vertex } => {
                write!(f, "route of {edge} does not end at vertex {vertex}")
            }
            DrawingDefect::NonMonotone { edge, segment } => {
                write!(f, "segment {segment} of {edge} is not monotone in the flow direction")
            }
            DrawingDefect::Misplaced { vertex, kind } => {
                write!(f, "{kind:?} vertex {vertex} is misplaced")
            }
            DrawingDefect::CoincidentVertices { a, b } => {
                write!(f, "vertices {a} and {b} share a position")
            }
            DrawingDefect::Crossing {
                a,
                segment_a,
                b,
                segment_b,
            } => write!(f, "segment {segment_a} of {a} meets segment {segment_b} of {b}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DrawingReport {
    pub defects: Vec<DrawingDefect>,
}

impl DrawingReport {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }
}

fn cross(o: Point, a: Point, b: Point) -> Ordering {
    let v = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    v.cmp(&Coord::from_integer(0))
}

fn within(p: Point, a: Point, b: Point) -> bool {
    a.x.min(b.x) <= p.x && p.x <= a.x.max(b.x) && a.y.min(b.y) <= p.y && p.y <= a.y.max(b.y)
}

enum Contact {
    Apart,
    Touch(Point),
    Cross,
}

/// Exact intersection class of two closed segments.
fn contact(a1: Point, a2: Point, b1: Point, b2: Point) -> Contact {
    let d1 = cross(b1, b2, a1);
    let d2 = cross(b1, b2, a2);
    let d3 = cross(a1, a2, b1);
    let d4 = cross(a1, a2, b2);
    use Ordering::Equal;
    if d1 == Equal && d2 == Equal {
        // Collinear: compare the lexicographic extents.
        let (alo, ahi) = (a1.min(a2), a1.max(a2));
        let (blo, bhi) = (b1.min(b2), b1.max(b2));
        let (lo, hi) = (alo.max(blo), ahi.min(bhi));
        return match lo.cmp(&hi) {
            Ordering::Greater => Contact::Apart,
            Ordering::Equal => Contact::Touch(lo),
            Ordering::Less => Contact::Cross,
        };
    }
    if d1 != Equal && d2 != Equal && d3 != Equal && d4 != Equal {
        return if d1 != d2 && d3 != d4 {
            Contact::Cross
        } else {
            Contact::Apart
        };
    }
    for (d, p, s1, s2) in [(d1, a1, b1, b2), (d2, a2, b1, b2), (d3, b1, a1, a2), (d4, b2, a1, a2)] {
        if d == Equal && within(p, s1, s2) {
            return Contact::Touch(p);
        }
    }
    Contact::Apart
}

/// Verifies the drawing invariants exactly: every route runs between the
/// positions of its end vertices and strictly advances along the flow;
/// sources and sinks lie inside the box's entry and exit lines, internal
/// vertices strictly inside, apexes strictly outside; vertex positions are
/// distinct; and two routes meet only at a vertex both of them end at.
pub fn check_drawing(d: &Drawing) -> DrawingReport {
    let mut defects = Vec::new();
    let zero = Coord::from_integer(0);
    let (entry, exit) = (d.source_line(), d.sink_line());
    let mut position: HashMap<&VertexId, Point> = HashMap::new();
    let mut seen: HashMap<Point, &VertexId> = HashMap::new();
    for v in &d.vertices {
        position.insert(&v.id, v.at);
        if let Some(other) = seen.insert(v.at, &v.id) {
            defects.push(DrawingDefect::CoincidentVertices {
                a: other.clone(),
                b: v.id.clone(),
            });
        }
        let inside_x = zero < v.at.x && v.at.x < d.width;
        let progress = d.along(v.at.y);
        let ok = match v.kind {
            VertexKind::Source => inside_x && v.at.y == entry,
            VertexKind::Sink => inside_x && v.at.y == exit,
            VertexKind::Internal => d.along(entry) < progress && progress < d.along(exit),
            VertexKind::SourceApex => progress < d.along(entry),
            VertexKind::SinkApex => progress > d.along(exit),
        };
        let ok = ok && (v.kind != VertexKind::Internal || inside_x);
        if !ok {
            defects.push(DrawingDefect::Misplaced {
                vertex: v.id.clone(),
                kind: v.kind,
            });
        }
    }

    for r in &d.routes {
        if r.points.len() < 2 {
            defects.push(DrawingDefect::ShortRoute {
                edge: r.edge.clone(),
            });
            continue;
        }
        for (vertex, p) in [(&r.from, r.points[0]), (&r.to, r.points[r.points.len() - 1])] {
            if position.get(vertex) != Some(&p) {
                defects.push(DrawingDefect::DetachedEnd {
                    edge: r.edge.clone(),
                    vertex: vertex.clone(),
                });
            }
        }
        for (i, w) in r.points.windows(2).enumerate() {
            if d.along(w[0].y) >= d.along(w[1].y) {
                defects.push(DrawingDefect::NonMonotone {
                    edge: r.edge.clone(),
                    segment: i,
                });
            }
        }
    }

    let ends = |r: &Route| -> [Point; 2] {
        [r.points[0], r.points[r.points.len() - 1]]
    };
    let drawable: Vec<&Route> = d.routes.iter().filter(|r| r.points.len() >= 2).collect();
    for (i, ra) in drawable.iter().enumerate() {
        for rb in &drawable[i + 1..] {
            let (ea, eb) = (ends(ra), ends(rb));
            'segments: for (sa, wa) in ra.points.windows(2).enumerate() {
                for (sb, wb) in rb.points.windows(2).enumerate() {
                    let bad = match contact(wa[0], wa[1], wb[0], wb[1]) {
                        Contact::Apart => false,
                        Contact::Cross => true,
                        Contact::Touch(p) => !(ea.contains(&p) && eb.contains(&p)),
                    };
                    if bad {
                        defects.push(DrawingDefect::Crossing {
                            a: ra.edge.clone(),
                            segment_a: sa,
                            b: rb.edge.clone(),
                            segment_b: sb,
                        });
                        break 'segments;
                    }
                }
            }
        }
    }
    DrawingReport { defects }
}

/// Incidence orders and anchor recovered from the geometry alone.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReadBack {
    pub polarization: Polarization,
    pub anchor: Anchor,
}

/// Reads left-to-right orders off the drawing: edges leaving a point are
/// ordered by the slope of their first segment, edges entering a point by
/// the slope of their last segment, and boundary edges first by position.
pub fn read_back(d: &Drawing) -> ReadBack {
    let kinds: HashMap<&VertexId, VertexKind> = d.vertices.iter().map(|v| (&v.id, v.kind)).collect();
    let slope = |from: Point, to: Point| -> Coord {
        let dy = (to.y - from.y).max(from.y - to.y);
        if dy == Coord::from_integer(0) {
            Coord::from_integer(0)
        } else {
            (to.x - from.x) / dy
        }
    };
    let leaving = |r: &Route| (r.points[0].x, slope(r.points[0], r.points[1]));
    let entering = |r: &Route| {
        let n = r.points.len();
        (r.points[n - 1].x, slope(r.points[n - 1], r.points[n - 2]))
    };
    let routes: Vec<&Route> = d.routes.iter().filter(|r| r.points.len() >= 2).collect();
    let sorted = |mut rs: Vec<&Route>, key: &dyn Fn(&Route) -> (Coord, Coord)| -> Vec<EdgeId> {
        rs.sort_by_key(|r| key(r));
        rs.into_iter().map(|r| r.edge.clone()).collect()
    };
    let kind = |v: &VertexId| kinds.get(v).copied();

    let inputs = sorted(
        routes
            .iter()
            .copied()
            .filter(|r| matches!(kind(&r.from), Some(VertexKind::Source | VertexKind::SourceApex)))
            .collect(),
        &leaving,
    );
    let outputs = sorted(
        routes
            .iter()
            .copied()
            .filter(|r| matches!(kind(&r.to), Some(VertexKind::Sink | VertexKind::SinkApex)))
            .collect(),
        &entering,
    );
    let mut polarization = Polarization::new();
    for v in d.vertices.iter().filter(|v| v.kind == VertexKind::Internal) {
        polarization.set(
            v.id.clone(),
            VertexOrder {
                incoming: sorted(routes.iter().copied().filter(|r| r.to == v.id).collect(), &entering),
                outgoing: sorted(routes.iter().copied().filter(|r| r.from == v.id).collect(), &leaving),
            },
        );
    }
    ReadBack {
        polarization,
        anchor: Anchor { inputs, outputs },
    }
}

const SCALE: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn to_f64(c: Coord) -> f64 {
    *c.numer() as f64 / *c.denom() as f64
}

/// Fixed two-decimal formatting without negative zero.
fn num(v: f64) -> String {
    let s = format!("{:.2}", v + 0.0);
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

/// Short decimal formatting for TikZ coordinates.
fn short(v: f64) -> String {
    let s = num(v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn escape_xml(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Point halfway along the route's extent in `y`, with the direction of the
/// segment containing it.
fn midpoint(points: &[Point]) -> (Point, Point, Point) {
    let (y0, y1) = (points[0].y, points[points.len() - 1].y);
    let ym = (y0 + y1) / 2;
    for w in points.windows(2) {
        let (lo, hi) = (w[0].y.min(w[1].y), w[0].y.max(w[1].y));
        if lo <= ym && ym <= hi && w[0].y != w[1].y {
            let t = (ym - w[0].y) / (w[1].y - w[0].y);
            let p = Point::new(w[0].x + t * (w[1].x - w[0].x), ym);
            return (p, w[0], w[1]);
        }
    }
    (points[0], points[0], points[points.len() - 1])
}

fn y_extent(d: &Drawing) -> (Coord, Coord) {
    let mut lo = Coord::from_integer(0);
    let mut hi = d.height;
    for p in d.vertices.iter().map(|v| v.at).chain(d.routes.iter().flat_map(|r| r.points.iter().copied())) {
        lo = lo.min(p.y);
        hi = hi.max(p.y);
    }
    (lo, hi)
}

/// SVG 1.1 document: a dashed box, one `<path>` per edge, a filled
/// arrowhead at each route's midpoint, and a circle per internal vertex or
/// apex.
pub fn render_svg(d: &Drawing) -> String {
    let (ylo, yhi) = y_extent(d);
    let sx = |x: Coord| MARGIN + SCALE * to_f64(x);
    let sy = |y: Coord| MARGIN + SCALE * to_f64(y - ylo);
    let width = 2.0 * MARGIN + SCALE * to_f64(d.width);
    let height = 2.0 * MARGIN + SCALE * to_f64(yhi - ylo);
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(width),
        num(height),
        num(width),
        num(height)
    );
    let _ = writeln!(
        w,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#888888" stroke-dasharray="4 3"/>"##,
        num(sx(Coord::from_integer(0))),
        num(sy(Coord::from_integer(0))),
        num(SCALE * to_f64(d.width)),
        num(SCALE * to_f64(d.height))
    );
    let _ = writeln!(w, r#"  <g fill="none" stroke="black" stroke-width="1.5">"#);
    for r in &d.routes {
        let mut path = String::new();
        for (i, p) in r.points.iter().enumerate() {
            let _ = write!(path, "{}{} {}", if i == 0 { "M" } else { " L" }, num(sx(p.x)), num(sy(p.y)));
        }
        let _ = writeln!(w, r#"    <path data-edge="{}" d="{}"/>"#, escape_xml(r.edge.as_str()), path);
    }
    let _ = writeln!(w, "  </g>");
    let _ = writeln!(w, r#"  <g fill="black" stroke="none">"#);
    for r in d.routes.iter().filter(|r| r.points.len() >= 2) {
        let (m, a, b) = midpoint(&r.points);
        let (mx, my) = (sx(m.x), sy(m.y));
        let (dx, dy) = (sx(b.x) - sx(a.x), sy(b.y) - sy(a.y));
        let len = (dx * dx + dy * dy).sqrt().max(f64::MIN_POSITIVE);
        let (ux, uy) = (dx / len, dy / len);
        let (tip, back, side) = (4.0, 4.0, 3.5);
        let pts = [
            (mx + ux * tip, my + uy * tip),
            (mx - ux * back - uy * side, my - uy * back + ux * side),
            (mx - ux * back + uy * side, my - uy * back - ux * side),
        ];
        let pts: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", num(x), num(y))).collect();
        let _ = writeln!(w, r#"    <polygon points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(w, "  </g>");
    let _ = writeln!(w, r#"  <g fill="black" font-family="sans-serif" font-size="11">"#);
    for v in d.vertices.iter().filter(|v| {
        matches!(v.kind, VertexKind::Internal | VertexKind::SourceApex | VertexKind::SinkApex)
    }) {
        let (cx, cy) = (sx(v.at.x), sy(v.at.y));
        let _ = writeln!(w, r#"    <circle cx="{}" cy="{}" r="4"/>"#, num(cx), num(cy));
        let _ = writeln!(
            w,
            r#"    <text x="{}" y="{}">{}</text>"#,
            num(cx + 6.0),
            num(cy - 6.0),
            escape_xml(v.id.as_str())
        );
    }
    let _ = writeln!(w, "  </g>");
    let _ = writeln!(w, "</svg>");
    out
}

fn escape_tex(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\textbackslash{}"),
            '{' | '}' | '$' | '&' | '#' | '_' | '%' => {
                out.push('\\');
                out.push(c);
            }
            '~' => out.push_str("\\textasciitilde{}"),
            '^' => out.push_str("\\textasciicircum{}"),
            _ => out.push(c),
        }
    }
    out
}

/// A `tikzpicture` (needs `\usetikzlibrary{decorations.markings}`) with
/// arrows at mid-edge and filled dots for internal vertices and apexes.
pub fn render_tikz(d: &Drawing) -> String {
    let pt = |p: Point| format!("({},{})", short(to_f64(p.x)), short(-to_f64(p.y)));
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, "% requires \\usetikzlibrary{{decorations.markings}}");
    let _ = writeln!(w, "\\begin{{tikzpicture}}[x=1cm,y=1cm,");
    let _ = writeln!(w, "  vertex/.style={{circle,fill,inner sep=1.5pt}},");
    let _ = writeln!(
        w,
        "  wire/.style={{thick,postaction={{decorate}},decoration={{markings,mark=at position 0.5 with {{\\arrow{{>}}}}}}}}]"
    );
    let _ = writeln!(
        w,
        "  \\draw[dashed,gray] {} rectangle {};",
        pt(Point::int(0, 0)),
        pt(Point::new(d.width, d.height))
    );
    for r in &d.routes {
        let path: Vec<String> = r.points.iter().map(|&p| pt(p)).collect();
        let _ = writeln!(w, "  \\draw[wire] {}; % {}", path.join(" -- "), escape_tex(r.edge.as_str()));
    }
    for v in d.vertices.iter().filter(|v| {
        matches!(v.kind, VertexKind::Internal | VertexKind::SourceApex | VertexKind::SinkApex)
    }) {
        let _ = writeln!(
            w,
            "  \\node[vertex,label=right:{{{}}}] at {} {{}};",
            escape_tex(v.id.as_str()),
            pt(v.at)
        );
    }
    let _ = writeln!(w, "\\end{{tikzpicture}}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{DirectedMultigraph, ProgressiveGraph};
    use crate::synthesis::extract_pa;

    fn pop(edges: &[(&str, &str, &str)], order: &str) -> PopGraph {
        let g = ProgressiveGraph::new(DirectedMultigraph::from_edges(edges.iter().copied()).unwrap())
            .unwrap();
        let seq: Vec<EdgeId> = order.split_whitespace().map(EdgeId::from).collect();
        PopGraph::new(g, &seq).unwrap()
    }

    fn spider22() -> PopGraph {
        pop(
            &[("i1", "p1", "v"), ("i2", "p2", "v"), ("o1", "v", "q1"), ("o2", "v", "q2")],
            "i1 i2 o1 o2",
        )
    }

    fn assert_realizes(p: &PopGraph, d: &Drawing) {
        let report = check_drawing(d);
        assert!(report.is_valid(), "{:?}", report.defects);
        let rb = read_back(d);
        let pa = extract_pa(p);
        assert_eq!(&rb.anchor, pa.anchor());
        assert_eq!(&rb.polarization, pa.polarization());
    }

    #[test]
    fn bare_edge() {
        let p = pop(&[("a", "u", "w")], "a");
        let d = layout(&p);
        assert_eq!(d.bands.len(), 1);
        assert_eq!(d.routes[0].points, vec![Point::int(1, 0), Point::int(1, 1)]);
        assert_realizes(&p, &d);
        assert_eq!(render_svg(&d).matches("<path").count(), 1);
        let st = layout_st(&p);
        assert_eq!(
            st.routes[0].points,
            vec![Point::int(1, -1), Point::int(1, 0), Point::int(1, 1), Point::int(1, 2)]
        );
        assert_realizes(&p, &st);
    }

    #[test]
    fn spider_is_x_shaped() {
        let p = spider22();
        let d = layout(&p);
        assert_eq!(d.bands.len(), 1);
        let half = Coord::new(1, 2);
        let v = d.vertices.iter().find(|v| v.id.as_str() == "v").unwrap();
        assert_eq!(v.at, Point::new(Coord::new(3, 2), half));
        let starts: Vec<Point> = d.routes.iter().map(|r| r.points[0]).collect();
        assert_eq!(starts[..2], [Point::int(1, 0), Point::int(2, 0)]);
        assert_realizes(&p, &d);
        assert_realizes(&p, &d.clone().with_flow(Flow::Up));
        assert_realizes(&p, &layout_st(&p).with_flow(Flow::Up));
    }

    #[test]
    fn crossing_is_detected() {
        let d = Drawing {
            width: Coord::from_integer(3),
            height: Coord::from_integer(1),
            flow: Flow::Down,
            bands: Vec::new(),
            vertices: vec![
                PlacedVertex { id: "a".into(), kind: VertexKind::Source, at: Point::int(1, 0) },
                PlacedVertex { id: "b".into(), kind: VertexKind::Source, at: Point::int(2, 0) },
                PlacedVertex { id: "c".into(), kind: VertexKind::Sink, at: Point::int(2, 1) },
                PlacedVertex { id: "d".into(), kind: VertexKind::Sink, at: Point::int(1, 1) },
            ],
            routes: vec![
                Route {
                    edge: "x".into(),
                    from: "a".into(),
                    to: "c".into(),
                    points: vec![Point::int(1, 0), Point::int(2, 1)],
                },
                Route {
                    edge: "y".into(),
                    from: "b".into(),
                    to: "d".into(),
                    points: vec![Point::int(2, 0), Point::int(1, 1)],
                },
            ],
        };
        let report = check_drawing(&d);
        assert_eq!(
            report.defects,
            vec![DrawingDefect::Crossing {
                a: "x".into(),
                segment_a: 0,
                b: "y".into(),
                segment_b: 0
            }]
        );
    }

    #[test]
    fn non_monotone_is_detected() {
        let d = Drawing {
            width: Coord::from_integer(2),
            height: Coord::from_integer(1),
            flow: Flow::Down,
            bands: Vec::new(),
            vertices: vec![
                PlacedVertex { id: "a".into(), kind: VertexKind::Source, at: Point::int(1, 0) },
                PlacedVertex { id: "b".into(), kind: VertexKind::Sink, at: Point::int(1, 1) },
            ],
            routes: vec![Route {
                edge: "x".into(),
                from: "a".into(),
                to: "b".into(),
                points: vec![
                    Point::int(1, 0),
                    Point::new(Coord::new(3, 2), Coord::new(3, 4)),
                    Point::new(Coord::new(3, 2), Coord::new(1, 2)),
                    Point::int(1, 1),
                ],
            }],
        };
        let report = check_drawing(&d);
        assert_eq!(
            report.defects,
            vec![DrawingDefect::NonMonotone { edge: "x".into(), segment: 1 }]
        );
    }

    #[test]
    fn touching_away_from_vertices_is_a_crossing() {
        // y's segment ends on the interior of x's segment.
        let a = Point::int(0, 0);
        let b = Point::int(2, 2);
        let c = Point::int(1, 1);
        assert!(matches!(contact(a, b, Point::int(3, 0), c), Contact::Touch(p) if p == c));
        assert!(matches!(contact(a, b, c, Point::int(3, 3)), Contact::Cross));
        assert!(matches!(contact(a, c, c, b), Contact::Touch(p) if p == c));
        assert!(matches!(contact(a, c, Point::int(0, 1), Point::int(1, 2)), Contact::Apart));
    }

    #[test]
    fn rendering_is_deterministic() {
        let d = layout(&spider22());
        assert_eq!(render_svg(&d), render_svg(&d));
        let svg = render_svg(&d);
        assert_eq!(svg.matches("<path").count(), 4);
        assert_eq!(svg.matches("<circle").count(), 1);
        let tikz = render_tikz(&d);
        assert_eq!(tikz.matches("\\draw[wire]").count(), 4);
        assert!(tikz.contains("\\node[vertex,label=right:{v}] at (1.5,-0.5) {};"), "{tikz}");
    }
}

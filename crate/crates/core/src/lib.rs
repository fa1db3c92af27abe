//! Planarly ordered progressive graphs.
//!
//! A progressive graph is an acyclic directed multigraph whose sources and
//! sinks all have degree one. A planar order is a total order on its edges
//! that captures an upward planar embedding with boundary on two lines.
//! This crate validates, synthesizes, composes, decomposes and draws such
//! graphs.

// Dense relation matrices read most clearly with index loops.
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod composition;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod layout;
pub mod order;
pub mod synthesis;

pub use composition::{
    compose, compose_with_provenance, decompose_step, decompose_step_at,
    elementary_decomposition, is_elementary, maximal_vertices, pop_isomorphic, recompose,
    Composite, ElementaryDecomposition, GluedEdge,
};
pub use error::{Error, Result, SynthesisDefect, Violation};
pub use graph::{
    validate_progressive, DirectedMultigraph, Edge, EdgeId, ProgressiveGraph, StGraph, VertexId,
};
pub use order::{
    check_axioms, check_axioms_adjacent, check_conjugacy, conjugate_order, input_window,
    interval_partition, order_from_conjugate, output_window, validate_planar_order,
    ConjugacyDefect, ConjugacyReport, ConjugateOrder, Interval, IntervalPartition, PlanarOrder,
    PopGraph,
};
pub use synthesis::{
    compare_case, compare_edges, compare_edges_with_case, count_planar_orders,
    count_planar_orders_with, enumerate_planar_orders, enumerate_planar_orders_with, extract_pa,
    synthesize_order, synthesize_pop, Anchor, CompareCase, Comparison, Enumeration,
    EnumerationOptions, PaGraph, Polarization, VertexOrder, DEFAULT_MAX_EDGES,
};
pub use format::{
    circ_document, emit_ppg, emit_stg, hat_pa, parse_document, parse_ppg, parse_stg, Document,
    PpgDocument,
};
pub use layout::{
    check_drawing, layout, layout_st, read_back, render_svg, render_tikz, Band, Coord, Drawing,
    DrawingDefect, DrawingReport, Flow, PlacedVertex, Point, ReadBack, Route, VertexKind,
};

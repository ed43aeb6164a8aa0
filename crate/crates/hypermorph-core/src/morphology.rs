//! Morphological operators on hypergraphs.
//!
//! Four elementary operators move subsets between the vertex lattice and the
//! edge lattice:
//!
//! * [`edge_to_vertex_dilation`] — union of the selected edges' vertex sets
//! * [`vertex_to_edge_erosion`] — edges entirely inside a vertex set
//! * [`edge_to_vertex_erosion`] — vertices avoiding every unselected edge
//! * [`vertex_to_edge_dilation`] — edges meeting a vertex set
//!
//! `(vertex_to_edge_erosion, edge_to_vertex_dilation)` and
//! `(edge_to_vertex_erosion, vertex_to_edge_dilation)` are adjunctions, so
//! their two-hop compositions are genuine dilations/erosions on each lattice
//! and the derived openings and closings obey the standard lattice laws
//! (idempotent, anti-extensive/extensive, increasing). The single-hop
//! compositions ("half" operators) are already openings/closings in their own
//! right.
//!
//! Erosion results include isolated vertices vacuously: a vertex contained in
//! no edge survives every erosion and is never produced by any dilation.
//! Image-derived hypergraphs (see [`crate::image`]) have no isolated vertices,
//! so none of these edge cases arise there.

use alloc::vec::Vec;

use crate::hypergraph::Hypergraph;
use crate::set::{EdgeSet, VertexSet};

/// A subset of a hypergraph given by both of its parts: vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexEdgePair {
    pub vertices: VertexSet,
    pub edges: EdgeSet,
}

impl VertexEdgePair {
    pub fn new(vertices: VertexSet, edges: EdgeSet) -> Self {
        VertexEdgePair { vertices, edges }
    }
}

/// Operator selector for pipelines and iteration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    Dilate,
    Erode,
    Open,
    Close,
    HalfOpen,
    HalfClose,
    /// Alternating sequential filter; `iterations` counts stages.
    Asf,
}

/// One preprocessing step: an operator applied a number of times.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    /// Number of applications (stages for [`OperatorKind::Asf`]); at least 1.
    pub iterations: usize,
}

impl OperatorSpec {
    pub fn new(kind: OperatorKind, iterations: usize) -> Self {
        assert!(iterations >= 1, "operator iterations must be >= 1");
        OperatorSpec { kind, iterations }
    }
}

/// Stage order of the alternating sequential filter.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AsfOrder {
    /// Each stage opens first, then closes.
    #[default]
    OpenThenClose,
    /// Each stage closes first, then opens.
    CloseThenOpen,
}

fn check_vertex_operand(h: &Hypergraph, x: &VertexSet) {
    assert_eq!(
        x.universe(),
        h.vertex_count(),
        "vertex set does not belong to this hypergraph"
    );
}

fn check_edge_operand(h: &Hypergraph, x: &EdgeSet) {
    assert_eq!(
        x.universe(),
        h.edge_count(),
        "edge set does not belong to this hypergraph"
    );
}

/// Union of the vertex sets of the selected edges.
pub fn edge_to_vertex_dilation(h: &Hypergraph, x: &EdgeSet) -> VertexSet {
    check_edge_operand(h, x);
    let mut out = h.empty_vertex_set();
    for e in x.iter() {
        for &v in h.edge_members(e) {
            out.insert(v);
        }
    }
    out
}

/// Edges whose vertex set lies entirely inside `x`.
pub fn vertex_to_edge_erosion(h: &Hypergraph, x: &VertexSet) -> EdgeSet {
    check_vertex_operand(h, x);
    let mut out = h.empty_edge_set();
    for e in h.all_edges().iter() {
        if h.edge_members(e).iter().all(|&v| x.contains(v)) {
            out.insert(e);
        }
    }
    out
}

/// Vertices belonging to no unselected edge: the intersection of the
/// complements of `v(e_j)` over `j` outside the selection. When every edge is
/// selected the intersection ranges over an empty family and yields the full
/// vertex universe.
pub fn edge_to_vertex_erosion(h: &Hypergraph, x: &EdgeSet) -> VertexSet {
    check_edge_operand(h, x);
    // Complement of the union of unselected edges.
    let mut covered = h.empty_vertex_set();
    for e in x.complement().iter() {
        for &v in h.edge_members(e) {
            covered.insert(v);
        }
    }
    covered.complement()
}

/// Edges sharing at least one vertex with `x`.
pub fn vertex_to_edge_dilation(h: &Hypergraph, x: &VertexSet) -> EdgeSet {
    check_vertex_operand(h, x);
    let mut out = h.empty_edge_set();
    for e in h.all_edges().iter() {
        if h.edge_members(e).iter().any(|&v| x.contains(v)) {
            out.insert(e);
        }
    }
    out
}

/// Vertex dilation: select edges meeting `x`, then take their union.
/// Equivalently, vertices sharing an edge with `x`. Note a vertex that lies
/// in no edge never shows up: dilation cannot reach isolated vertices.
pub fn vertex_dilation(h: &Hypergraph, x: &VertexSet) -> VertexSet {
    edge_to_vertex_dilation(h, &vertex_to_edge_dilation(h, x))
}

/// Vertex erosion: keep the edges inside `x`, then the vertices avoiding all
/// other edges. Equivalently, vertices all of whose edges lie inside `x`.
///
/// The direct characterization is universal, not existential: a vertex
/// survives iff *every* edge containing it is inside `x`. The existential
/// variant ("some containing edge is inside `x`") is a different, larger set
/// and is not what the composition computes; see the unit tests for a
/// counterexample. Isolated vertices qualify vacuously.
pub fn vertex_erosion(h: &Hypergraph, x: &VertexSet) -> VertexSet {
    edge_to_vertex_erosion(h, &vertex_to_edge_erosion(h, x))
}

/// Hyperedge dilation: edges sharing a vertex with some selected edge.
pub fn edge_dilation(h: &Hypergraph, x: &EdgeSet) -> EdgeSet {
    vertex_to_edge_dilation(h, &edge_to_vertex_dilation(h, x))
}

/// Hyperedge erosion: edges all of whose vertices avoid every unselected
/// edge. Always a subset of the selection.
pub fn edge_erosion(h: &Hypergraph, x: &EdgeSet) -> EdgeSet {
    vertex_to_edge_erosion(h, &edge_to_vertex_erosion(h, x))
}

/// Componentwise dilation of a vertex/edge pair. The parts do not interact.
pub fn pair_dilation(h: &Hypergraph, x: &VertexEdgePair) -> VertexEdgePair {
    VertexEdgePair {
        vertices: vertex_dilation(h, &x.vertices),
        edges: edge_dilation(h, &x.edges),
    }
}

/// Componentwise erosion of a vertex/edge pair.
pub fn pair_erosion(h: &Hypergraph, x: &VertexEdgePair) -> VertexEdgePair {
    VertexEdgePair {
        vertices: vertex_erosion(h, &x.vertices),
        edges: edge_erosion(h, &x.edges),
    }
}

/// Opening on the vertex lattice: erosion then dilation.
pub fn vertex_opening(h: &Hypergraph, x: &VertexSet) -> VertexSet {
    vertex_dilation(h, &vertex_erosion(h, x))
}

/// Closing on the vertex lattice: dilation then erosion.
pub fn vertex_closing(h: &Hypergraph, x: &VertexSet) -> VertexSet {
    vertex_erosion(h, &vertex_dilation(h, x))
}

/// Opening on the edge lattice.
pub fn edge_opening(h: &Hypergraph, x: &EdgeSet) -> EdgeSet {
    edge_dilation(h, &edge_erosion(h, x))
}

/// Closing on the edge lattice.
pub fn edge_closing(h: &Hypergraph, x: &EdgeSet) -> EdgeSet {
    edge_erosion(h, &edge_dilation(h, x))
}

/// Componentwise opening of a pair.
pub fn pair_opening(h: &Hypergraph, x: &VertexEdgePair) -> VertexEdgePair {
    VertexEdgePair {
        vertices: vertex_opening(h, &x.vertices),
        edges: edge_opening(h, &x.edges),
    }
}

/// Componentwise closing of a pair.
pub fn pair_closing(h: &Hypergraph, x: &VertexEdgePair) -> VertexEdgePair {
    VertexEdgePair {
        vertices: vertex_closing(h, &x.vertices),
        edges: edge_closing(h, &x.edges),
    }
}

/// Half-opening: union of the edges lying inside `x`. A single round trip
/// through the edge lattice, already idempotent and anti-extensive.
pub fn half_opening(h: &Hypergraph, x: &VertexSet) -> VertexSet {
    edge_to_vertex_dilation(h, &vertex_to_edge_erosion(h, x))
}

/// Half-closing: vertices avoiding every edge that misses `x`. Idempotent
/// and extensive.
pub fn half_closing(h: &Hypergraph, x: &VertexSet) -> VertexSet {
    edge_to_vertex_erosion(h, &vertex_to_edge_dilation(h, x))
}

/// Half-opening on the edge lattice.
pub fn edge_half_opening(h: &Hypergraph, x: &EdgeSet) -> EdgeSet {
    vertex_to_edge_dilation(h, &edge_to_vertex_erosion(h, x))
}

/// Half-closing on the edge lattice.
pub fn edge_half_closing(h: &Hypergraph, x: &EdgeSet) -> EdgeSet {
    vertex_to_edge_erosion(h, &edge_to_vertex_dilation(h, x))
}

/// Applies `spec.kind` to a vertex set `spec.iterations` times. For the
/// idempotent kinds (open, close, half variants) extra iterations change
/// nothing; for dilate/erode they deepen the effect. [`OperatorKind::Asf`]
/// treats `iterations` as the stage count, with the default
/// [`AsfOrder::OpenThenClose`] stage order.
pub fn iterate(h: &Hypergraph, spec: &OperatorSpec, x: &VertexSet) -> VertexSet {
    apply_with_order(h, spec, x, AsfOrder::default())
}

/// [`iterate`] with an explicit ASF stage order.
pub fn apply_with_order(
    h: &Hypergraph,
    spec: &OperatorSpec,
    x: &VertexSet,
    asf_order: AsfOrder,
) -> VertexSet {
    assert!(spec.iterations >= 1, "operator iterations must be >= 1");
    if spec.kind == OperatorKind::Asf {
        return alternating_sequential_filter(h, x, spec.iterations, asf_order);
    }
    let step: fn(&Hypergraph, &VertexSet) -> VertexSet = match spec.kind {
        OperatorKind::Dilate => vertex_dilation,
        OperatorKind::Erode => vertex_erosion,
        OperatorKind::Open => vertex_opening,
        OperatorKind::Close => vertex_closing,
        OperatorKind::HalfOpen => half_opening,
        OperatorKind::HalfClose => half_closing,
        OperatorKind::Asf => unreachable!(),
    };
    let mut current = step(h, x);
    for _ in 1..spec.iterations {
        current = step(h, &current);
    }
    current
}

/// Alternating sequential filter: `stages` rounds of opening and closing,
/// each round feeding on the previous round's output.
pub fn alternating_sequential_filter(
    h: &Hypergraph,
    x: &VertexSet,
    stages: usize,
    order: AsfOrder,
) -> VertexSet {
    assert!(stages >= 1, "ASF needs at least one stage");
    let mut current = x.clone();
    for _ in 0..stages {
        current = match order {
            AsfOrder::OpenThenClose => vertex_closing(h, &vertex_opening(h, &current)),
            AsfOrder::CloseThenOpen => vertex_opening(h, &vertex_closing(h, &current)),
        };
    }
    current
}

/// Applies an operator sequence left to right.
pub fn apply_sequence(
    h: &Hypergraph,
    ops: &[OperatorSpec],
    x: &VertexSet,
    asf_order: AsfOrder,
) -> VertexSet {
    let mut current = x.clone();
    for spec in ops {
        current = apply_with_order(h, spec, &current, asf_order);
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use alloc::vec;

    /// e0 = {0,1}, e1 = {1,2}, vertex 3 isolated.
    fn chain_with_isolated() -> Hypergraph {
        Hypergraph::build(4, [vec![0, 1], vec![1, 2]]).unwrap()
    }

    /// e0 = {0,1}, e1 = {1,2}, no isolated vertices.
    fn chain() -> Hypergraph {
        Hypergraph::build(3, [vec![0, 1], vec![1, 2]]).unwrap()
    }

    /// e0 = {0,1}, e1 = {1,2}, e2 = {3,4}: a chain plus a disconnected edge.
    fn chain_plus_island() -> Hypergraph {
        Hypergraph::build(5, [vec![0, 1], vec![1, 2], vec![3, 4]]).unwrap()
    }

    fn vs(h: &Hypergraph, ids: &[usize]) -> VertexSet {
        VertexSet::from_indices(h.vertex_count(), ids.iter().copied())
    }

    fn es(h: &Hypergraph, ids: &[usize]) -> EdgeSet {
        EdgeSet::from_indices(h.edge_count(), ids.iter().copied())
    }

    #[test]
    fn edge_to_vertex_dilation_examples() {
        let h = chain();
        assert_eq!(edge_to_vertex_dilation(&h, &es(&h, &[0, 1])), vs(&h, &[0, 1, 2]));
        assert_eq!(edge_to_vertex_dilation(&h, &es(&h, &[])), vs(&h, &[]));
        assert_eq!(edge_to_vertex_dilation(&h, &es(&h, &[0])), vs(&h, &[0, 1]));
    }

    #[test]
    fn vertex_to_edge_erosion_examples() {
        let h = chain();
        assert_eq!(vertex_to_edge_erosion(&h, &vs(&h, &[0, 1])), es(&h, &[0]));
        assert_eq!(vertex_to_edge_erosion(&h, &h.all_vertices()), h.all_edges());
        assert_eq!(vertex_to_edge_erosion(&h, &vs(&h, &[])), es(&h, &[]));
    }

    #[test]
    fn edge_to_vertex_erosion_examples() {
        let h = chain_with_isolated();
        // Unselected edge is e1 = {1,2}; its complement is {0,3}.
        assert_eq!(edge_to_vertex_erosion(&h, &es(&h, &[0])), vs(&h, &[0, 3]));
        // Empty family convention: everything.
        assert_eq!(edge_to_vertex_erosion(&h, &h.all_edges()), h.all_vertices());
        // Nothing selected: only vertices in no edge at all.
        assert_eq!(edge_to_vertex_erosion(&h, &es(&h, &[])), vs(&h, &[3]));
    }

    #[test]
    fn vertex_to_edge_dilation_examples() {
        let h = chain();
        assert_eq!(vertex_to_edge_dilation(&h, &vs(&h, &[1])), es(&h, &[0, 1]));
        assert_eq!(vertex_to_edge_dilation(&h, &vs(&h, &[])), es(&h, &[]));
        assert_eq!(vertex_to_edge_dilation(&h, &h.all_vertices()), h.all_edges());
    }

    #[test]
    fn vertex_dilation_examples() {
        let h = chain_with_isolated();
        assert_eq!(vertex_dilation(&h, &vs(&h, &[0])), vs(&h, &[0, 1]));
        assert_eq!(vertex_dilation(&h, &vs(&h, &[])), vs(&h, &[]));
        // An isolated vertex is not recovered by dilation: no edge contains it.
        assert_eq!(vertex_dilation(&h, &vs(&h, &[3])), vs(&h, &[]));
    }

    #[test]
    fn vertex_erosion_examples() {
        let h = chain_with_isolated();
        // Edges inside {0,1}: e0. Vertices avoiding e1: {0,3} (3 vacuously).
        assert_eq!(vertex_erosion(&h, &vs(&h, &[0, 1])), vs(&h, &[0, 3]));
        assert_eq!(vertex_erosion(&h, &h.all_vertices()), h.all_vertices());
        assert_eq!(vertex_erosion(&h, &vs(&h, &[])), vs(&h, &[3]));
    }

    #[test]
    fn erosion_characterization_is_universal_not_existential() {
        // In e0 = {0,1}, e1 = {1,2}: vertex 1 has an edge inside X = {0,1}
        // (namely e0), but also an edge leaving X (e1). The existential
        // reading would keep vertex 1; the composition must not.
        let h = chain();
        let eroded = vertex_erosion(&h, &vs(&h, &[0, 1]));
        assert!(!eroded.contains(crate::hypergraph::VertexId(1)));

        let existential: VertexSet = {
            let mut out = h.empty_vertex_set();
            for v in h.all_vertices().iter() {
                let keeps = h.incident_edges(v).unwrap().iter().any(|e| {
                    h.edge_members(e).iter().all(|&u| vs(&h, &[0, 1]).contains(u))
                });
                if keeps {
                    out.insert(v);
                }
            }
            out
        };
        assert_ne!(eroded, existential, "the two readings differ on this hypergraph");
    }

    #[test]
    fn edge_dilation_examples() {
        let h = chain_plus_island();
        assert_eq!(edge_dilation(&h, &es(&h, &[0])), es(&h, &[0, 1]));
        assert_eq!(edge_dilation(&h, &es(&h, &[])), es(&h, &[]));
        assert_eq!(edge_dilation(&h, &es(&h, &[2])), es(&h, &[2]));
    }

    #[test]
    fn edge_erosion_examples() {
        let h = chain_plus_island();
        // e0 loses: its vertex 1 lies in the unselected edge e1.
        assert_eq!(edge_erosion(&h, &es(&h, &[0, 2])), es(&h, &[2]));
        assert_eq!(edge_erosion(&h, &h.all_edges()), h.all_edges());
        assert_eq!(edge_erosion(&h, &es(&h, &[])), es(&h, &[]));
    }

    #[test]
    fn pair_operators_are_componentwise() {
        let h = chain();
        let empty = VertexEdgePair::new(h.empty_vertex_set(), h.empty_edge_set());
        assert_eq!(pair_dilation(&h, &empty), empty);

        let x = VertexEdgePair::new(vs(&h, &[0]), es(&h, &[0]));
        let dilated = pair_dilation(&h, &x);
        assert_eq!(dilated.vertices, vs(&h, &[0, 1]));
        assert_eq!(dilated.edges, es(&h, &[0, 1]));

        let top = VertexEdgePair::new(h.all_vertices(), h.all_edges());
        assert_eq!(pair_erosion(&h, &top), top);
    }

    #[test]
    fn vertex_opening_examples() {
        let h = chain();
        assert_eq!(vertex_opening(&h, &vs(&h, &[])), vs(&h, &[]));
        assert_eq!(vertex_closing(&h, &h.all_vertices()), h.all_vertices());
        // Erosion of {0,1} keeps {0}; dilating {0} gives back {0,1}.
        assert_eq!(vertex_opening(&h, &vs(&h, &[0, 1])), vs(&h, &[0, 1]));
    }

    #[test]
    fn edge_opening_examples() {
        let h = chain_plus_island();
        assert_eq!(edge_opening(&h, &es(&h, &[])), es(&h, &[]));
        assert_eq!(edge_opening(&h, &h.all_edges()), h.all_edges());
        assert_eq!(edge_opening(&h, &es(&h, &[0, 2])), es(&h, &[2]));
    }

    #[test]
    fn pair_opening_closing_componentwise() {
        let h = chain_plus_island();
        let x = VertexEdgePair::new(vs(&h, &[0, 1]), es(&h, &[0, 2]));
        let opened = pair_opening(&h, &x);
        assert_eq!(opened.vertices, vertex_opening(&h, &x.vertices));
        assert_eq!(opened.edges, edge_opening(&h, &x.edges));
        let closed = pair_closing(&h, &x);
        assert_eq!(closed.vertices, vertex_closing(&h, &x.vertices));
        assert_eq!(closed.edges, edge_closing(&h, &x.edges));
    }

    #[test]
    fn half_opening_examples() {
        let h = chain();
        assert_eq!(half_opening(&h, &vs(&h, &[0, 1, 2])), vs(&h, &[0, 1, 2]));
        // No edge fits inside {0,2}.
        assert_eq!(half_opening(&h, &vs(&h, &[0, 2])), vs(&h, &[]));
        assert_eq!(half_opening(&h, &vs(&h, &[])), vs(&h, &[]));
    }

    #[test]
    fn edge_half_operators_examples() {
        let h = chain_plus_island();
        assert_eq!(edge_half_opening(&h, &h.all_edges()), h.all_edges());
        assert_eq!(edge_half_opening(&h, &es(&h, &[])), es(&h, &[]));
        // Vertices avoiding the unselected e0, e1 are {3,4}; the edges
        // meeting {3,4} are exactly {e2}.
        assert_eq!(edge_half_opening(&h, &es(&h, &[2])), es(&h, &[2]));

        assert_eq!(edge_half_closing(&h, &es(&h, &[])), es(&h, &[]));
        assert_eq!(edge_half_closing(&h, &h.all_edges()), h.all_edges());
    }

    #[test]
    fn iterate_matches_manual_composition() {
        let h = chain_plus_island();
        let x = vs(&h, &[0]);
        let twice = iterate(&h, &OperatorSpec::new(OperatorKind::Dilate, 2), &x);
        assert_eq!(twice, vertex_dilation(&h, &vertex_dilation(&h, &x)));

        let once = iterate(&h, &OperatorSpec::new(OperatorKind::Open, 1), &x);
        let thrice = iterate(&h, &OperatorSpec::new(OperatorKind::Open, 3), &x);
        assert_eq!(once, thrice, "opening is idempotent");

        assert_eq!(
            iterate(&h, &OperatorSpec::new(OperatorKind::Erode, 1), &x),
            vertex_erosion(&h, &x)
        );
    }

    #[test]
    fn asf_examples() {
        let h = chain_plus_island();
        let x = vs(&h, &[0, 1]);
        assert_eq!(
            alternating_sequential_filter(&h, &x, 1, AsfOrder::OpenThenClose),
            vertex_closing(&h, &vertex_opening(&h, &x))
        );
        assert_eq!(
            alternating_sequential_filter(&h, &h.empty_vertex_set(), 2, AsfOrder::OpenThenClose),
            h.empty_vertex_set()
        );
        assert_eq!(
            alternating_sequential_filter(&h, &h.all_vertices(), 3, AsfOrder::OpenThenClose),
            h.all_vertices()
        );
        assert_eq!(
            alternating_sequential_filter(&h, &x, 1, AsfOrder::CloseThenOpen),
            vertex_opening(&h, &vertex_closing(&h, &x))
        );
    }

    #[test]
    fn apply_sequence_left_to_right() {
        let h = chain_plus_island();
        let x = vs(&h, &[0, 1, 3, 4]);
        let ops = [
            OperatorSpec::new(OperatorKind::Erode, 1),
            OperatorSpec::new(OperatorKind::Dilate, 1),
        ];
        let seq = apply_sequence(&h, &ops, &x, AsfOrder::default());
        assert_eq!(seq, vertex_opening(&h, &x));
        assert_eq!(apply_sequence(&h, &[], &x, AsfOrder::default()), x);
    }

    #[test]
    #[should_panic(expected = "does not belong")]
    fn foreign_operand_panics() {
        let h = chain();
        let other = VertexSet::empty(99);
        let _ = vertex_dilation(&h, &other);
    }
}

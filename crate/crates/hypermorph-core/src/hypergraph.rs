//! Finite hypergraphs: a vertex universe `H•` plus an indexed family `H×` of
//! non-empty hyperedges, with the structural operations the morphological
//! operators are built on (incidence, dual, induced and partial hypergraphs,
//! rank and uniformity).
//!
//! Both id spaces are dense: `VertexId(k)` ranges over `0..vertex_count` and
//! `EdgeId(k)` is the position of the edge in construction order. Duplicate
//! hyperedges are allowed (the edge family is indexed, not a set of sets);
//! empty hyperedges are rejected at construction.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::set::{EdgeSet, VertexSet};

/// Dense vertex index, unique within one hypergraph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// Dense hyperedge index into the edge family.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypergraphError {
    /// An edge listed a vertex id outside `0..vertex_count`.
    VertexOutOfRange { edge: usize, vertex: usize, vertex_count: usize },
    /// An edge had no vertices.
    EmptyEdge { edge: usize },
    /// `dual` was asked for on a hypergraph with an isolated vertex, which
    /// would produce an empty dual edge.
    IsolatedVertexInDual { vertex: usize },
    /// A vertex or edge id was out of range for this hypergraph.
    IdOutOfRange { index: usize, limit: usize },
}

impl fmt::Display for HypergraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypergraphError::VertexOutOfRange { edge, vertex, vertex_count } => write!(
                f,
                "edge {edge} lists vertex {vertex}, but the universe has {vertex_count} vertices"
            ),
            HypergraphError::EmptyEdge { edge } => {
                write!(f, "edge {edge} is empty; hyperedges must be non-empty")
            }
            HypergraphError::IsolatedVertexInDual { vertex } => write!(
                f,
                "vertex {vertex} is isolated, so the dual would contain an empty edge"
            ),
            HypergraphError::IdOutOfRange { index, limit } => {
                write!(f, "id {index} out of range (limit {limit})")
            }
        }
    }
}

/// Immutable finite hypergraph. All queries are pure; nothing mutates after
/// construction, so sharing across threads is safe.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    /// Edge family in construction order; each member list sorted + deduped.
    edges: Vec<Vec<VertexId>>,
    /// Transpose of `edges`: for each vertex, the edges containing it.
    incidence: Vec<Vec<EdgeId>>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({} vertices; ", self.vertex_count)?;
        for (i, edge) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "e{i}={:?}", edge)?;
        }
        write!(f, ")")
    }
}

impl Hypergraph {
    /// Builds a hypergraph from a vertex count and an ordered edge family.
    /// `EdgeId(k)` is the k-th input edge. Vertices listed twice in one edge
    /// are collapsed; vertices in no edge stay as isolated vertices.
    pub fn build<I, E>(vertex_count: usize, edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = usize>,
    {
        let mut family: Vec<Vec<VertexId>> = Vec::new();
        for (edge_index, edge) in edges.into_iter().enumerate() {
            let mut members: Vec<usize> = edge.into_iter().collect();
            members.sort_unstable();
            members.dedup();
            if members.is_empty() {
                return Err(HypergraphError::EmptyEdge { edge: edge_index });
            }
            if let Some(&bad) = members.iter().find(|&&v| v >= vertex_count) {
                return Err(HypergraphError::VertexOutOfRange {
                    edge: edge_index,
                    vertex: bad,
                    vertex_count,
                });
            }
            family.push(members.into_iter().map(VertexId).collect());
        }

        let mut incidence = vec![Vec::new(); vertex_count];
        for (i, edge) in family.iter().enumerate() {
            for &v in edge {
                incidence[v.0].push(EdgeId(i));
            }
        }

        Ok(Hypergraph { vertex_count, edges: family, incidence })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All vertices as a set (the universe `H•`).
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count)
    }

    /// All edge indices as a set (the full selection `I`).
    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn empty_vertex_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count)
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::empty(self.edges.len())
    }

    fn check_vertex(&self, x: VertexId) -> Result<(), HypergraphError> {
        if x.0 < self.vertex_count {
            Ok(())
        } else {
            Err(HypergraphError::IdOutOfRange { index: x.0, limit: self.vertex_count })
        }
    }

    fn check_edge(&self, e: EdgeId) -> Result<(), HypergraphError> {
        if e.0 < self.edges.len() {
            Ok(())
        } else {
            Err(HypergraphError::IdOutOfRange { index: e.0, limit: self.edges.len() })
        }
    }

    /// Member list of one edge, sorted by id. Never empty.
    pub fn edge_members(&self, e: EdgeId) -> &[VertexId] {
        &self.edges[e.0]
    }

    /// The vertex set `v(e)` of a hyperedge.
    pub fn edge_vertices(&self, e: EdgeId) -> Result<VertexSet, HypergraphError> {
        self.check_edge(e)?;
        Ok(VertexSet::from_indices(
            self.vertex_count,
            self.edges[e.0].iter().map(|v| v.0),
        ))
    }

    /// Edges containing vertex `x`; empty exactly when `x` is isolated.
    pub fn incident_edges(&self, x: VertexId) -> Result<EdgeSet, HypergraphError> {
        self.check_vertex(x)?;
        Ok(EdgeSet::from_indices(
            self.edges.len(),
            self.incidence[x.0].iter().map(|e| e.0),
        ))
    }

    /// True when no hyperedge contains `x`.
    pub fn is_isolated(&self, x: VertexId) -> Result<bool, HypergraphError> {
        self.check_vertex(x)?;
        Ok(self.incidence[x.0].is_empty())
    }

    /// Number of vertices of one hyperedge.
    pub fn rank(&self, e: EdgeId) -> Result<usize, HypergraphError> {
        self.check_edge(e)?;
        Ok(self.edges[e.0].len())
    }

    /// True when every hyperedge has exactly `k` vertices. Vacuously true for
    /// an empty edge family.
    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|edge| edge.len() == k)
    }

    /// Dual hypergraph: one vertex per original edge, one edge `X_m` per
    /// original vertex `x_m` with `X_m = {e_i : x_m ∈ v(e_i)}`. Requires no
    /// isolated vertices (an isolated vertex would give an empty dual edge),
    /// which keeps the no-empty-edge invariant closed under dualization.
    pub fn dual(&self) -> Result<Hypergraph, HypergraphError> {
        if let Some(v) = (0..self.vertex_count).find(|&v| self.incidence[v].is_empty()) {
            return Err(HypergraphError::IsolatedVertexInDual { vertex: v });
        }
        Hypergraph::build(
            self.edges.len(),
            self.incidence.iter().map(|edges| edges.iter().map(|e| e.0).collect::<Vec<_>>()),
        )
    }

    /// Subhypergraph induced by a vertex subset `A`: the universe becomes `A`
    /// (renumbered densely in increasing id order) and each surviving edge is
    /// `v(e_i) ∩ A`, kept only when non-empty. Returns the hypergraph plus the
    /// old-edge to new-edge mapping (`None` for dropped edges).
    pub fn induced_subhypergraph(&self, a: &VertexSet) -> (Hypergraph, Vec<Option<EdgeId>>) {
        assert_eq!(a.universe(), self.vertex_count, "vertex subset from another hypergraph");
        let mut vertex_map = vec![None; self.vertex_count];
        for (new, old) in a.iter().enumerate() {
            vertex_map[old.0] = Some(new);
        }

        let mut edge_map = vec![None; self.edges.len()];
        let mut new_edges: Vec<Vec<usize>> = Vec::new();
        for (i, edge) in self.edges.iter().enumerate() {
            let survivors: Vec<usize> =
                edge.iter().filter_map(|v| vertex_map[v.0]).collect();
            if !survivors.is_empty() {
                edge_map[i] = Some(EdgeId(new_edges.len()));
                new_edges.push(survivors);
            }
        }

        let induced = Hypergraph::build(a.len(), new_edges)
            .expect("induced edges are non-empty by construction");
        (induced, edge_map)
    }

    /// Partial hypergraph: same vertex universe, edge family restricted to
    /// the selection `J` and renumbered densely in increasing id order.
    /// Returns the hypergraph plus the old-edge to new-edge mapping.
    pub fn partial_hypergraph(&self, j: &EdgeSet) -> (Hypergraph, Vec<Option<EdgeId>>) {
        assert_eq!(j.universe(), self.edges.len(), "edge subset from another hypergraph");
        let mut edge_map = vec![None; self.edges.len()];
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for e in j.iter() {
            edge_map[e.0] = Some(EdgeId(kept.len()));
            kept.push(self.edges[e.0].iter().map(|v| v.0).collect());
        }
        let partial = Hypergraph::build(self.vertex_count, kept)
            .expect("kept edges are non-empty by construction");
        (partial, edge_map)
    }
}

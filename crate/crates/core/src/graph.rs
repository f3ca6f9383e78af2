//! Undirected multigraph with stable edge identities, nontrivial cuts in
//! canonical form, and the exact cut statistics everything else is built on.
//!
//! Cuts are stored as vertex sets, never as edge sets: the symmetric
//! difference of two vertex sets is again a vertex set, so every
//! intermediate object stays a genuine cut and the edge-set symmetric
//! difference law `delta(a + b) = delta(a) + delta(b)` is induced for free.
//! The canonical representative of a bipartition is the side that excludes
//! vertex 0; with that convention the symmetric difference of two canonical
//! sides is canonical, and a trivial result shows up as the empty set.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Dense edge index, 0..m-1 in insertion order.
pub type EdgeId = usize;

/// Undirected multigraph. Parallel edges are allowed; self-loops are not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidArgument(format!(
                    "edge {id} endpoints ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!(
                    "edge {id} is a self-loop at vertex {u}"
                )));
            }
        }
        Ok(Self {
            vertex_count,
            edges,
        })
    }

    /// Path v0 - v1 - ... - v(n-1).
    pub fn path(vertex_count: usize) -> Self {
        let edges = (0..vertex_count.saturating_sub(1))
            .map(|i| (i, i + 1))
            .collect();
        Self {
            vertex_count,
            edges,
        }
    }

    /// Cycle on n >= 3 vertices, edges (0,1), (1,2), ..., (n-1,0).
    pub fn cycle(vertex_count: usize) -> Self {
        assert!(vertex_count >= 3, "cycle needs at least 3 vertices");
        let edges = (0..vertex_count)
            .map(|i| (i, (i + 1) % vertex_count))
            .collect();
        Self {
            vertex_count,
            edges,
        }
    }

    /// Complete graph, edges in lexicographic (u, v) order.
    pub fn complete(vertex_count: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..vertex_count {
            for v in (u + 1)..vertex_count {
                edges.push((u, v));
            }
        }
        Self {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of an edge as stored (unordered pair).
    pub fn endpoints(&self, edge: EdgeId) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, usize, usize)> + '_ {
        self.edges.iter().enumerate().map(|(id, &(u, v))| (id, u, v))
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| u == vertex || v == vertex)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// True iff the graph has a single connected component. Zero or one
    /// vertex counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut adjacency = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut seen = FixedBitSet::with_capacity(self.vertex_count);
        let mut stack = vec![0usize];
        seen.insert(0);
        let mut visited = 1usize;
        while let Some(x) = stack.pop() {
            for &y in &adjacency[x] {
                if !seen.contains(y) {
                    seen.insert(y);
                    visited += 1;
                    stack.push(y);
                }
            }
        }
        visited == self.vertex_count
    }

    fn check_cut(&self, cut: &Cut) -> Result<()> {
        if cut.vertex_count() != self.vertex_count {
            return Err(Error::InvalidCut(format!(
                "cut is over {} vertices, graph has {}",
                cut.vertex_count(),
                self.vertex_count
            )));
        }
        Ok(())
    }

    /// Edge ids with exactly one endpoint in the cut's side, ascending.
    pub fn delta(&self, cut: &Cut) -> Result<Vec<EdgeId>> {
        self.check_cut(cut)?;
        Ok(self
            .edges()
            .filter(|&(_, u, v)| cut.contains(u) != cut.contains(v))
            .map(|(id, _, _)| id)
            .collect())
    }

    /// |delta(cut)| without materialising the edge list.
    pub fn crossing_count(&self, cut: &Cut) -> Result<usize> {
        self.check_cut(cut)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| cut.contains(u) != cut.contains(v))
            .count())
    }

    /// Merges `u` and `v` into one vertex. Edges between them are deleted
    /// (they would become self-loops and could never appear in any cut);
    /// every other edge survives, with parallel edges preserved. Returns the
    /// contracted graph and the old-edge-id -> new-edge-id mapping
    /// (`None` for deleted edges).
    ///
    /// Vertex relabelling: with a = min(u,v), b = max(u,v), the merged vertex
    /// is `a`, and vertices above `b` shift down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<(Multigraph, Vec<Option<EdgeId>>)> {
        if u == v {
            return Err(Error::InvalidArgument(format!(
                "cannot contract vertex {u} with itself"
            )));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(Error::InvalidArgument(format!(
                "contract({u}, {v}) out of range for {} vertices",
                self.vertex_count
            )));
        }
        let a = u.min(v);
        let b = u.max(v);
        let relabel = |x: usize| -> usize {
            if x == b {
                a
            } else if x > b {
                x - 1
            } else {
                x
            }
        };
        let mut mapping = vec![None; self.edges.len()];
        let mut edges = Vec::with_capacity(self.edges.len());
        for (id, &(x, y)) in self.edges.iter().enumerate() {
            let (nx, ny) = (relabel(x), relabel(y));
            if nx == ny {
                continue;
            }
            mapping[id] = Some(edges.len());
            edges.push((nx, ny));
        }
        Ok((
            Multigraph {
                vertex_count: self.vertex_count - 1,
                edges,
            },
            mapping,
        ))
    }

    /// Exact sum of the signed weights over `delta(cut)`.
    pub fn cut_weight_sum(&self, weights: &SignedWeights, cut: &Cut) -> Result<i64> {
        self.check_cut(cut)?;
        weights.check_len(self.edge_count())?;
        Ok(self
            .edges()
            .filter(|&(_, u, v)| cut.contains(u) != cut.contains(v))
            .map(|(id, _, _)| i64::from(weights.get(id)))
            .sum())
    }

    /// Exact average weight of the cut; always in [-1, 1].
    pub fn avg_cut_weight(&self, weights: &SignedWeights, cut: &Cut) -> Result<Rational> {
        let sum = self.cut_weight_sum(weights, cut)?;
        let size = self.crossing_count(cut)?;
        if size == 0 {
            return Err(Error::InvalidInstance(
                "cut crosses no edges; the graph is not connected".into(),
            ));
        }
        Ok(Rational::new(sum.into(), (size as i64).into()))
    }
}

/// Edge weights restricted to {-1, +1}, one per edge of the host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedWeights {
    values: Vec<i8>,
}

impl SignedWeights {
    pub fn new(values: Vec<i8>) -> Result<Self> {
        if let Some(pos) = values.iter().position(|w| *w != 1 && *w != -1) {
            return Err(Error::InvalidArgument(format!(
                "weight for edge {pos} is {}, expected -1 or +1",
                values[pos]
            )));
        }
        Ok(Self { values })
    }

    pub fn all_plus(edge_count: usize) -> Self {
        Self {
            values: vec![1; edge_count],
        }
    }

    pub fn all_minus(edge_count: usize) -> Self {
        Self {
            values: vec![-1; edge_count],
        }
    }

    pub fn get(&self, edge: EdgeId) -> i8 {
        self.values[edge]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    fn check_len(&self, edge_count: usize) -> Result<()> {
        if self.values.len() != edge_count {
            return Err(Error::InvalidInstance(format!(
                "{} weights for {edge_count} edges",
                self.values.len()
            )));
        }
        Ok(())
    }

    /// Carries weights through an edge-id mapping produced by
    /// [`Multigraph::contract`].
    pub fn remap(&self, mapping: &[Option<EdgeId>], new_edge_count: usize) -> SignedWeights {
        let mut values = vec![0i8; new_edge_count];
        for (old, target) in mapping.iter().enumerate() {
            if let Some(new) = target {
                values[*new] = self.values[old];
            }
        }
        SignedWeights { values }
    }
}

/// Nontrivial vertex bipartition in canonical form: the stored side never
/// contains vertex 0 (the complement is stored instead).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cut {
    vertex_count: usize,
    side: FixedBitSet,
}

impl Cut {
    /// Builds the canonical cut whose one side is `side_vertices`.
    /// Errors when the bipartition is trivial or a vertex is out of range.
    pub fn new(vertex_count: usize, side_vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut side = FixedBitSet::with_capacity(vertex_count);
        for v in side_vertices {
            if v >= vertex_count {
                return Err(Error::InvalidCut(format!(
                    "vertex {v} out of range for {vertex_count} vertices"
                )));
            }
            side.insert(v);
        }
        Self::from_side(vertex_count, side)
    }

    /// Canonicalizes an arbitrary side bit set (complementing when it
    /// contains vertex 0) and rejects trivial bipartitions.
    pub fn from_side(vertex_count: usize, mut side: FixedBitSet) -> Result<Self> {
        if side.len() != vertex_count {
            return Err(Error::InvalidCut(format!(
                "side bit set has {} bits, graph has {vertex_count} vertices",
                side.len()
            )));
        }
        let ones = side.count_ones(..);
        if ones == 0 || ones == vertex_count {
            return Err(Error::InvalidCut(
                "bipartition is trivial (one side is empty)".into(),
            ));
        }
        if side.contains(0) {
            side.toggle_range(..);
        }
        Ok(Self { vertex_count, side })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Canonical side A; never contains vertex 0.
    pub fn side(&self) -> &FixedBitSet {
        &self.side
    }

    pub fn contains(&self, vertex: usize) -> bool {
        self.side.contains(vertex)
    }

    /// Vertices of the canonical side, ascending.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.side.ones()
    }

    pub fn side_len(&self) -> usize {
        self.side.count_ones(..)
    }

    /// Vertex-set symmetric difference; `None` marks the trivial result
    /// (the two cuts were the same bipartition). Because both operands are
    /// canonical, the result is canonical without further work.
    pub fn symmetric_difference(&self, other: &Cut) -> Result<Option<Cut>> {
        if self.vertex_count != other.vertex_count {
            return Err(Error::InvalidCut(format!(
                "cut vertex counts differ: {} vs {}",
                self.vertex_count, other.vertex_count
            )));
        }
        let mut side = self.side.clone();
        side ^= &other.side;
        if side.is_clear() {
            return Ok(None);
        }
        Ok(Some(Cut {
            vertex_count: self.vertex_count,
            side,
        }))
    }
}

/// All 2^(n-1) - 1 nontrivial canonical cuts, in lexicographic bit order:
/// the cut with mask `m` places vertex j+1 on side A iff bit j of `m` is
/// set. This is the tie-break order every brute-force oracle uses.
pub fn canonical_cuts(vertex_count: usize) -> impl Iterator<Item = Cut> {
    assert!(
        (2..=32).contains(&vertex_count),
        "canonical cut enumeration supports 2..=32 vertices, got {vertex_count}"
    );
    (1u64..(1u64 << (vertex_count - 1))).map(move |mask| cut_from_mask(vertex_count, mask))
}

/// The cut at position `mask` in the canonical enumeration order.
pub fn cut_from_mask(vertex_count: usize, mask: u64) -> Cut {
    assert!(
        mask > 0 && mask < (1u64 << (vertex_count - 1)),
        "mask {mask} is out of range for {vertex_count} vertices"
    );
    let mut side = FixedBitSet::with_capacity(vertex_count);
    for j in 0..(vertex_count - 1) {
        if mask & (1u64 << j) != 0 {
            side.insert(j + 1);
        }
    }
    Cut {
        vertex_count,
        side,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn triangle() -> Multigraph {
        // e0 = (0,1), e1 = (1,2), e2 = (0,2): matches the e01/e12/e02 naming
        // used throughout the oracle tests.
        Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    /// Everything is immutable after construction and freely shareable
    /// across threads.
    #[test]
    fn core_types_are_send_and_sync() {
        fn check<T: Send + Sync>() {}
        check::<Multigraph>();
        check::<SignedWeights>();
        check::<Cut>();
        check::<crate::oracle::SpanningTree>();
        check::<crate::reduce::GadgetInstance>();
    }

    #[test]
    fn rejects_self_loops_and_bad_endpoints() {
        assert!(Multigraph::new(3, vec![(0, 0)]).is_err());
        assert!(Multigraph::new(2, vec![(0, 2)]).is_err());
        assert!(Multigraph::new(2, vec![(0, 1), (1, 0)]).is_ok());
    }

    #[test]
    fn delta_on_path_and_triangle() {
        let path = Multigraph::path(3);
        let cut = Cut::new(3, [1]).unwrap();
        assert_eq!(path.delta(&cut).unwrap(), vec![0, 1]);

        let cut = Cut::new(3, [1]).unwrap();
        assert_eq!(triangle().delta(&cut).unwrap().len(), 2);
    }

    #[test]
    fn delta_counts_parallel_edges() {
        let double = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let cut = Cut::new(2, [1]).unwrap();
        assert_eq!(double.delta(&cut).unwrap(), vec![0, 1]);
    }

    #[test]
    fn delta_invariant_under_complement() {
        let g = Multigraph::cycle(5);
        for mask in 1u64..16 {
            let cut = cut_from_mask(5, mask);
            let complement: Vec<usize> = (0..5).filter(|v| !cut.contains(*v)).collect();
            let from_complement = Cut::new(5, complement).unwrap();
            assert_eq!(cut, from_complement);
            assert_eq!(g.delta(&cut).unwrap(), g.delta(&from_complement).unwrap());
        }
    }

    #[test]
    fn trivial_cuts_are_rejected() {
        assert!(Cut::new(3, []).is_err());
        assert!(Cut::new(3, [0, 1, 2]).is_err());
        assert!(Cut::new(1, [0]).is_err());
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let cut = Cut::new(4, [0, 2]).unwrap();
        assert!(!cut.contains(0));
        assert_eq!(cut.vertices().collect::<Vec<_>>(), vec![1, 3]);
        let again = Cut::new(4, cut.vertices().collect::<Vec<_>>()).unwrap();
        assert_eq!(cut, again);
    }

    #[test]
    fn connectivity() {
        assert!(triangle().is_connected());
        assert!(Multigraph::path(3).is_connected());
        assert!(!Multigraph::new(2, vec![]).unwrap().is_connected());
        assert!(Multigraph::new(0, vec![]).unwrap().is_connected());
        assert!(Multigraph::new(1, vec![]).unwrap().is_connected());
    }

    #[test]
    fn contract_triangle_gives_double_edge() {
        let (g, mapping) = triangle().contract(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        // e0 = (0,1) is deleted; e1 = (1,2) and e2 = (0,2) survive.
        assert_eq!(mapping, vec![None, Some(0), Some(1)]);
        assert_eq!(g.endpoints(0), (0, 1));
        assert_eq!(g.endpoints(1), (0, 1));
    }

    #[test]
    fn contract_path_endpoints() {
        let (g, mapping) = Multigraph::path(3).contract(0, 2).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(mapping, vec![Some(0), Some(1)]);
    }

    #[test]
    fn contract_double_edge_to_point() {
        let double = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let (g, mapping) = double.contract(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(mapping, vec![None, None]);
        assert!(double.contract(1, 1).is_err());
    }

    #[test]
    fn symmetric_difference_examples() {
        let a = Cut::new(4, [1]).unwrap();
        assert_eq!(a.symmetric_difference(&a).unwrap(), None);

        let b = Cut::new(4, [2]).unwrap();
        let ab = a.symmetric_difference(&b).unwrap().unwrap();
        assert_eq!(ab.vertices().collect::<Vec<_>>(), vec![1, 2]);
        let c4 = Multigraph::cycle(4);
        assert_eq!(c4.delta(&ab).unwrap(), vec![0, 2]);

        let d = Cut::new(4, [1, 2]).unwrap();
        let ad = a.symmetric_difference(&d).unwrap().unwrap();
        assert_eq!(ad.vertices().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn cut_weights_on_triangle() {
        let g = triangle();
        let all_plus = SignedWeights::all_plus(3);
        let mixed = SignedWeights::new(vec![1, 1, -1]).unwrap();

        let v1 = Cut::new(3, [1]).unwrap();
        let v0 = Cut::new(3, [1, 2]).unwrap(); // canonical form of {v0}

        assert_eq!(g.cut_weight_sum(&all_plus, &v1).unwrap(), 2);
        assert_eq!(g.cut_weight_sum(&mixed, &v0).unwrap(), 0);
        assert_eq!(g.cut_weight_sum(&mixed, &v1).unwrap(), 2);

        assert_eq!(
            g.avg_cut_weight(&all_plus, &v1).unwrap(),
            crate::rational::rational(1, 1)
        );
        assert_eq!(
            g.avg_cut_weight(&mixed, &v0).unwrap(),
            crate::rational::rational(0, 1)
        );
        assert_eq!(
            g.avg_cut_weight(&SignedWeights::all_minus(3), &v1).unwrap(),
            crate::rational::rational(-1, 1)
        );
    }

    #[test]
    fn avg_cut_weight_needs_a_crossing_edge() {
        let disconnected = Multigraph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let cut = Cut::new(4, [1]).unwrap();
        assert!(disconnected.avg_cut_weight(&SignedWeights::all_plus(2), &cut).is_ok());
        let split = Cut::new(4, [2, 3]).unwrap();
        assert!(matches!(
            disconnected.avg_cut_weight(&SignedWeights::all_plus(2), &split),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn weights_validate_and_remap() {
        assert!(SignedWeights::new(vec![1, -1, 1]).is_ok());
        assert!(SignedWeights::new(vec![1, 0]).is_err());
        assert!(SignedWeights::new(vec![2]).is_err());

        let w = SignedWeights::new(vec![1, -1, 1]).unwrap();
        let remapped = w.remap(&[None, Some(0), Some(1)], 2);
        assert_eq!(remapped.values(), &[-1, 1]);
    }

    /// delta(a + b) = delta(a) + delta(b), exhaustively on small graphs.
    #[test]
    fn symmetric_difference_law_exhaustive() {
        let graphs = [
            Multigraph::cycle(6),
            Multigraph::complete(5),
            Multigraph::new(4, vec![(0, 1), (0, 1), (1, 2), (2, 3), (1, 3), (0, 3)]).unwrap(),
        ];
        for g in &graphs {
            let n = g.vertex_count();
            let cuts: Vec<Cut> = canonical_cuts(n).collect();
            for a in &cuts {
                for b in &cuts {
                    let lhs: BTreeSet<EdgeId> = match a.symmetric_difference(b).unwrap() {
                        Some(c) => g.delta(&c).unwrap().into_iter().collect(),
                        None => BTreeSet::new(),
                    };
                    let da: BTreeSet<EdgeId> = g.delta(a).unwrap().into_iter().collect();
                    let db: BTreeSet<EdgeId> = g.delta(b).unwrap().into_iter().collect();
                    let rhs: BTreeSet<EdgeId> =
                        da.symmetric_difference(&db).copied().collect();
                    assert_eq!(lhs, rhs, "law failed on cuts {a:?}, {b:?}");
                }
            }
        }
    }

    /// Cuts of contract(g, u, v) are in bijection with cuts of g that keep
    /// u and v on the same side, with identical deltas under the edge map.
    #[test]
    fn contraction_law_exhaustive() {
        let graphs = [
            Multigraph::cycle(5),
            Multigraph::complete(4),
            Multigraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)])
                .unwrap(),
        ];
        for g in &graphs {
            let n = g.vertex_count();
            for u in 0..n {
                for v in (u + 1)..n {
                    let (h, mapping) = g.contract(u, v).unwrap();
                    let same_side: Vec<Cut> = canonical_cuts(n)
                        .filter(|c| c.contains(u) == c.contains(v))
                        .collect();
                    let contracted: Vec<Cut> = canonical_cuts(h.vertex_count()).collect();
                    assert_eq!(same_side.len(), contracted.len());

                    // Map each same-side cut of g down to a cut of h and
                    // compare deltas through the edge-id mapping.
                    let relabel = |x: usize| -> usize {
                        let b = u.max(v);
                        if x == b {
                            u.min(v)
                        } else if x > b {
                            x - 1
                        } else {
                            x
                        }
                    };
                    let mut seen = std::collections::HashSet::new();
                    for cut in &same_side {
                        let down: BTreeSet<usize> = cut.vertices().map(relabel).collect();
                        let down_cut = Cut::new(h.vertex_count(), down).unwrap();
                        assert!(seen.insert(down_cut.clone()), "mapping not injective");
                        let mapped: BTreeSet<EdgeId> = g
                            .delta(cut)
                            .unwrap()
                            .into_iter()
                            .map(|e| mapping[e].expect("crossing edge survived contraction"))
                            .collect();
                        let direct: BTreeSet<EdgeId> =
                            h.delta(&down_cut).unwrap().into_iter().collect();
                        assert_eq!(mapped, direct);
                    }
                }
            }
        }
    }
}

//! Exponential-time ground-truth solvers for the four problems of the
//! reduction chain, plus the thin-tree verifier with violating-cut
//! certificates.
//!
//! Every oracle enumerates the 2^(n-1) - 1 canonical cuts in lexicographic
//! bit order (see [`canonical_cuts`]) and breaks ties by taking the first
//! maximiser in that order, so transcripts and golden files are
//! reproducible. A guard refuses graphs above [`DEFAULT_VERTEX_LIMIT`]
//! vertices; gadget-scale instances go through
//! [`crate::reduce::ttvc_clique_respecting_oracle`] instead, which only
//! needs the lifted cuts.

use fixedbitset::FixedBitSet;

use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::graph::{canonical_cuts, Cut, EdgeId, Multigraph, SignedWeights};
use crate::rational::Rational;

/// Default enumeration guard: 2^25 cuts is about 3e7, still bearable;
/// anything bigger is almost certainly an accidental gadget-scale call.
pub const DEFAULT_VERTEX_LIMIT: usize = 26;

/// Spanning tree of a host multigraph, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    edge_ids: Vec<EdgeId>,
    membership: FixedBitSet,
}

impl SpanningTree {
    /// Checks |edges| = n - 1, acyclicity, and that all vertices are
    /// connected; stores a sorted edge list plus a membership mask.
    pub fn new(graph: &Multigraph, edge_ids: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        let mut membership = FixedBitSet::with_capacity(m);
        let mut sorted = Vec::new();
        for e in edge_ids {
            if e >= m {
                return Err(Error::InvalidArgument(format!(
                    "tree edge id {e} out of range for {m} edges"
                )));
            }
            if membership.contains(e) {
                return Err(Error::InvalidArgument(format!("duplicate tree edge id {e}")));
            }
            membership.insert(e);
            sorted.push(e);
        }
        sorted.sort_unstable();
        if n == 0 || sorted.len() != n - 1 {
            return Err(Error::InvalidInstance(format!(
                "spanning tree of a {n}-vertex graph needs {} edges, got {}",
                n.saturating_sub(1),
                sorted.len()
            )));
        }
        let mut dsu = UnionFind::new(n);
        for &e in &sorted {
            let (u, v) = graph.endpoints(e);
            if !dsu.union(u, v) {
                return Err(Error::InvalidInstance(format!(
                    "tree edges contain a cycle through edge {e}"
                )));
            }
        }
        // n - 1 successful unions on n vertices leave one component.
        Ok(Self {
            edge_ids: sorted,
            membership,
        })
    }

    pub fn contains(&self, edge: EdgeId) -> bool {
        self.membership.contains(edge)
    }

    /// Tree edge ids, ascending.
    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edge_ids
    }

    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }
}

/// Outcome of a thinness query. `worst_thickness` is the maximum thickness
/// over all cuts; the certificate is present exactly when the tree is not
/// thin, and re-evaluating it reproduces `worst_thickness`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinnessVerdict {
    pub is_thin: bool,
    pub worst_cut: Option<Cut>,
    pub worst_thickness: Rational,
}

/// (in-tree crossing, total crossing) edge counts for one cut; shared hot
/// path for thickness at both desk and gadget scale.
pub(crate) fn crossing_counts(graph: &Multigraph, tree: &SpanningTree, cut: &Cut) -> (usize, usize) {
    let mut in_tree = 0usize;
    let mut total = 0usize;
    for (id, u, v) in graph.edges() {
        if cut.contains(u) != cut.contains(v) {
            total += 1;
            if tree.contains(id) {
                in_tree += 1;
            }
        }
    }
    (in_tree, total)
}

/// T-thickness of a cut: |delta_T(A)| / |delta_G(A)|, exact in [0, 1].
pub fn thickness(graph: &Multigraph, tree: &SpanningTree, cut: &Cut) -> Result<Rational> {
    if cut.vertex_count() != graph.vertex_count() {
        return Err(Error::InvalidCut(format!(
            "cut is over {} vertices, graph has {}",
            cut.vertex_count(),
            graph.vertex_count()
        )));
    }
    if tree.len() + 1 != graph.vertex_count() {
        return Err(Error::InvalidInstance(
            "tree does not span the given graph".into(),
        ));
    }
    let (in_tree, total) = crossing_counts(graph, tree, cut);
    if total == 0 {
        return Err(Error::InvalidInstance(
            "cut crosses no edges; the graph is not connected".into(),
        ));
    }
    Ok(Rational::new((in_tree as i64).into(), (total as i64).into()))
}

/// Hard cap of the cut enumeration itself (the canonical order is a u64
/// mask, and 2^31 cuts is already far beyond reason).
pub const ENUMERATION_HARD_CAP: usize = 32;

fn check_guard(graph: &Multigraph, limit: usize, hint: &str) -> Result<()> {
    let n = graph.vertex_count();
    let limit = limit.min(ENUMERATION_HARD_CAP);
    if n > limit {
        return Err(Error::GuardExceeded {
            actual: n,
            limit,
            hint: hint.to_string(),
        });
    }
    if n < 2 {
        return Err(Error::InvalidInstance(format!(
            "no nontrivial cuts exist on a {n}-vertex graph"
        )));
    }
    if !graph.is_connected() {
        return Err(Error::InvalidInstance("graph is not connected".into()));
    }
    Ok(())
}

/// Brute-force thin-tree verifier: enumerates every nontrivial cut and
/// decides whether any has thickness strictly above `alpha`. On a negative
/// (not thin) verdict the returned certificate is a cut of maximum
/// thickness, ties broken by the smallest canonical vertex set in
/// lexicographic bit order.
pub fn thin_tree_verify_bf(
    graph: &Multigraph,
    tree: &SpanningTree,
    alpha: &Rational,
    vertex_limit: usize,
) -> Result<ThinnessVerdict> {
    check_guard(
        graph,
        vertex_limit,
        "for gadget instances use the clique-respecting oracle \
         (reduce::ttvc_clique_respecting_oracle), which only enumerates lifted cuts",
    )?;
    if tree.len() + 1 != graph.vertex_count() {
        return Err(Error::InvalidInstance(
            "tree does not span the given graph".into(),
        ));
    }
    if *alpha < Rational::from_integer(0.into()) || *alpha > Rational::from_integer(1.into()) {
        return Err(Error::InvalidArgument(format!(
            "alpha must lie in [0, 1], got {alpha}"
        )));
    }

    let mut worst: Option<(Rational, Cut)> = None;
    for cut in canonical_cuts(graph.vertex_count()) {
        let (in_tree, total) = crossing_counts(graph, tree, &cut);
        if total == 0 {
            return Err(Error::InvalidInstance(
                "cut crosses no edges; the graph is not connected".into(),
            ));
        }
        let value = Rational::new((in_tree as i64).into(), (total as i64).into());
        match &worst {
            Some((best, _)) if value <= *best => {}
            _ => worst = Some((value, cut)),
        }
    }
    let (worst_thickness, worst_cut) = worst.expect("n >= 2 guarantees at least one cut");
    let is_thin = worst_thickness <= *alpha;
    Ok(ThinnessVerdict {
        is_thin,
        worst_cut: if is_thin { None } else { Some(worst_cut) },
        worst_thickness,
    })
}

/// Exact MaxCut by enumeration: maximum |delta(A)| and the first argmax in
/// canonical order.
pub fn max_cut_bf(graph: &Multigraph) -> Result<(usize, Cut)> {
    max_cut_bf_limited(graph, DEFAULT_VERTEX_LIMIT)
}

pub fn max_cut_bf_limited(graph: &Multigraph, vertex_limit: usize) -> Result<(usize, Cut)> {
    check_guard(graph, vertex_limit, "MaxCut has no large-graph fallback")?;
    let mut best: Option<(usize, Cut)> = None;
    for cut in canonical_cuts(graph.vertex_count()) {
        let size = graph.crossing_count(&cut)?;
        match &best {
            Some((value, _)) if size <= *value => {}
            _ => best = Some((size, cut)),
        }
    }
    Ok(best.expect("n >= 2 guarantees at least one cut"))
}

/// Exact MaxAvgCutOpt by enumeration: a cut maximising the average signed
/// weight, compared as exact rationals, first argmax in canonical order.
pub fn max_avg_cut_opt_bf(graph: &Multigraph, weights: &SignedWeights) -> Result<(Rational, Cut)> {
    max_avg_cut_opt_bf_limited(graph, weights, DEFAULT_VERTEX_LIMIT)
}

pub fn max_avg_cut_opt_bf_limited(
    graph: &Multigraph,
    weights: &SignedWeights,
    vertex_limit: usize,
) -> Result<(Rational, Cut)> {
    check_guard(graph, vertex_limit, "MaxAvgCutOpt has no large-graph fallback")?;
    let mut best: Option<(Rational, Cut)> = None;
    for cut in canonical_cuts(graph.vertex_count()) {
        let value = graph.avg_cut_weight(weights, &cut)?;
        match &best {
            Some((record, _)) if value <= *record => {}
            _ => best = Some((value, cut)),
        }
    }
    Ok(best.expect("n >= 2 guarantees at least one cut"))
}

/// Exact MaxAvgCut decision: does some nontrivial cut have average weight
/// at least `threshold`?
pub fn max_avg_cut_decision_bf(
    graph: &Multigraph,
    weights: &SignedWeights,
    threshold: &Rational,
) -> Result<bool> {
    max_avg_cut_decision_bf_limited(graph, weights, threshold, DEFAULT_VERTEX_LIMIT)
}

pub fn max_avg_cut_decision_bf_limited(
    graph: &Multigraph,
    weights: &SignedWeights,
    threshold: &Rational,
    vertex_limit: usize,
) -> Result<bool> {
    check_guard(graph, vertex_limit, "MaxAvgCut has no large-graph fallback")?;
    if *threshold < Rational::new((-1).into(), 1.into()) {
        return Err(Error::InvalidArgument(format!(
            "MaxAvgCut threshold must be at least -1, got {threshold}"
        )));
    }
    for cut in canonical_cuts(graph.vertex_count()) {
        if graph.avg_cut_weight(weights, &cut)? >= *threshold {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rational;

    /// C4 with the spanning path v1 - v0 - v3 - v2, i.e. tree edges
    /// {e01, e03, e23}. Cut {v1} then has thickness 1/2 and the worst cut
    /// is {v1, v2} with thickness 1.
    fn c4_with_bent_path() -> (Multigraph, SpanningTree) {
        let g = Multigraph::cycle(4); // e0=(0,1) e1=(1,2) e2=(2,3) e3=(3,0)
        let t = SpanningTree::new(&g, [0, 2, 3]).unwrap();
        (g, t)
    }

    #[test]
    fn spanning_tree_validation() {
        let g = Multigraph::cycle(4);
        assert!(SpanningTree::new(&g, [0, 1, 2]).is_ok());
        assert!(SpanningTree::new(&g, [0, 1]).is_err()); // too few
        assert!(SpanningTree::new(&g, [0, 1, 2, 3]).is_err()); // cycle
        assert!(SpanningTree::new(&g, [0, 0, 1]).is_err()); // duplicate
        assert!(SpanningTree::new(&g, [0, 1, 7]).is_err()); // bad id
    }

    #[test]
    fn thickness_examples() {
        let (g, t) = c4_with_bent_path();
        let v1 = Cut::new(4, [1]).unwrap();
        assert_eq!(thickness(&g, &t, &v1).unwrap(), rational(1, 2));

        // side {v1, v2}: delta_G = {e01, e23}, both in T.
        let v12 = Cut::new(4, [1, 2]).unwrap();
        assert_eq!(thickness(&g, &t, &v12).unwrap(), rational(1, 1));

        // With the straight path {e01, e12, e23} instead, cut {v1} has both
        // incident edges in the tree.
        let straight = SpanningTree::new(&g, [0, 1, 2]).unwrap();
        assert_eq!(thickness(&g, &straight, &v1).unwrap(), rational(1, 1));

        let k2 = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let t2 = SpanningTree::new(&k2, [0]).unwrap();
        let c2 = Cut::new(2, [1]).unwrap();
        assert_eq!(thickness(&k2, &t2, &c2).unwrap(), rational(1, 1));
    }

    #[test]
    fn verify_c4_examples() {
        let (g, t) = c4_with_bent_path();

        let verdict = thin_tree_verify_bf(&g, &t, &rational(1, 1), DEFAULT_VERTEX_LIMIT).unwrap();
        assert!(verdict.is_thin);
        assert_eq!(verdict.worst_cut, None);
        assert_eq!(verdict.worst_thickness, rational(1, 1));

        let verdict = thin_tree_verify_bf(&g, &t, &rational(1, 2), DEFAULT_VERTEX_LIMIT).unwrap();
        assert!(!verdict.is_thin);
        assert_eq!(verdict.worst_thickness, rational(1, 1));
        // First maximiser in canonical order: {v1} -> 1/2, {v2} -> 1/2,
        // then {v1, v2} -> 1.
        let cert = verdict.worst_cut.unwrap();
        assert_eq!(cert.vertices().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(thickness(&g, &t, &cert).unwrap(), verdict.worst_thickness);
    }

    #[test]
    fn verify_k2() {
        let k2 = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let t = SpanningTree::new(&k2, [0]).unwrap();
        let verdict = thin_tree_verify_bf(&k2, &t, &rational(1, 2), DEFAULT_VERTEX_LIMIT).unwrap();
        assert!(!verdict.is_thin);
        assert_eq!(verdict.worst_thickness, rational(1, 1));
    }

    #[test]
    fn verify_guard_mentions_clique_oracle() {
        let g = Multigraph::path(30);
        let t = SpanningTree::new(&g, 0..29).unwrap();
        let err = thin_tree_verify_bf(&g, &t, &rational(1, 1), DEFAULT_VERTEX_LIMIT).unwrap_err();
        let text = err.to_string();
        assert!(text.contains("clique-respecting"), "got: {text}");
    }

    #[test]
    fn max_cut_examples() {
        let (value, cut) = max_cut_bf(&Multigraph::path(3)).unwrap();
        assert_eq!(value, 2);
        assert_eq!(cut.vertices().collect::<Vec<_>>(), vec![1]);

        let (value, _) = max_cut_bf(&Multigraph::cycle(5)).unwrap();
        assert_eq!(value, 4);

        let (value, _) = max_cut_bf(&Multigraph::complete(4)).unwrap();
        assert_eq!(value, 4);
    }

    /// Cross-check the enumeration with an independent reverse-order pass.
    #[test]
    fn max_cut_second_enumeration_ordering() {
        let graphs = [
            Multigraph::cycle(5),
            Multigraph::complete(5),
            Multigraph::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4), (2, 5)])
                .unwrap(),
        ];
        for g in &graphs {
            let (value, _) = max_cut_bf(g).unwrap();
            let n = g.vertex_count();
            let mut best = 0usize;
            for mask in (1u64..(1u64 << (n - 1))).rev() {
                let cut = crate::graph::cut_from_mask(n, mask);
                best = best.max(g.crossing_count(&cut).unwrap());
            }
            assert_eq!(value, best);
        }
    }

    #[test]
    fn max_avg_cut_opt_examples() {
        let triangle = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();

        let (value, cut) = max_avg_cut_opt_bf(&triangle, &SignedWeights::all_plus(3)).unwrap();
        assert_eq!(value, rational(1, 1));
        assert_eq!(cut.vertices().collect::<Vec<_>>(), vec![1]); // lexicographic tie-break

        let (value, _) = max_avg_cut_opt_bf(&triangle, &SignedWeights::all_minus(3)).unwrap();
        assert_eq!(value, rational(-1, 1));

        let mixed = SignedWeights::new(vec![1, 1, -1]).unwrap();
        let (value, cut) = max_avg_cut_opt_bf(&triangle, &mixed).unwrap();
        assert_eq!(value, rational(1, 1));
        assert_eq!(cut.vertices().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn max_avg_cut_decision_examples() {
        let triangle = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        let plus = SignedWeights::all_plus(3);
        let minus = SignedWeights::all_minus(3);
        let mixed = SignedWeights::new(vec![1, 1, -1]).unwrap();

        assert!(max_avg_cut_decision_bf(&triangle, &plus, &rational(1, 1)).unwrap());
        assert!(max_avg_cut_decision_bf(&triangle, &minus, &rational(-1, 1)).unwrap());
        assert!(max_avg_cut_decision_bf(&triangle, &mixed, &rational(1, 1)).unwrap());
        assert!(!max_avg_cut_decision_bf(&triangle, &mixed, &rational(999, 998)).unwrap());
        assert!(max_avg_cut_decision_bf(&triangle, &mixed, &rational(-2, 1)).is_err());
    }

    /// Monotonicity in alpha plus decision/optimisation consistency.
    #[test]
    fn verdict_monotonicity_and_consistency() {
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3), (0, 2)])
            .unwrap();
        let t = SpanningTree::new(&g, [0, 1, 2, 3]).unwrap();
        let worst = thin_tree_verify_bf(&g, &t, &rational(0, 1), DEFAULT_VERTEX_LIMIT)
            .unwrap()
            .worst_thickness;
        for q in 1..=8i64 {
            for p in 0..=q {
                let alpha = rational(p, q);
                let verdict = thin_tree_verify_bf(&g, &t, &alpha, DEFAULT_VERTEX_LIMIT).unwrap();
                assert_eq!(verdict.is_thin, worst <= alpha);
                if let Some(cert) = &verdict.worst_cut {
                    let recomputed = thickness(&g, &t, cert).unwrap();
                    assert_eq!(recomputed, verdict.worst_thickness);
                    assert!(recomputed > alpha);
                }
            }
        }

        let weights = SignedWeights::new(vec![1, -1, 1, -1, 1, 1, -1]).unwrap();
        let (opt, _) = max_avg_cut_opt_bf(&g, &weights).unwrap();
        for q in 1..=7i64 {
            for p in -q..=q {
                let k = rational(p, q);
                assert_eq!(
                    max_avg_cut_decision_bf(&g, &weights, &k).unwrap(),
                    opt >= k,
                    "decision disagrees with optimiser at k = {k}"
                );
            }
        }
    }

    /// The worst thickness dominates every single-vertex cut's thickness.
    #[test]
    fn worst_thickness_dominates_singletons() {
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)]).unwrap();
        let t = SpanningTree::new(&g, [0, 1, 2, 3]).unwrap();
        let verdict = thin_tree_verify_bf(&g, &t, &rational(1, 1), DEFAULT_VERTEX_LIMIT).unwrap();
        for v in 1..5 {
            let single = Cut::new(5, [v]).unwrap();
            assert!(thickness(&g, &t, &single).unwrap() <= verdict.worst_thickness);
        }
        let zero = Cut::new(5, [1, 2, 3, 4]).unwrap(); // canonical form of {v0}
        assert!(thickness(&g, &t, &zero).unwrap() <= verdict.worst_thickness);
    }
}

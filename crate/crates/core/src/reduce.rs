//! The reduction chain: MaxCut solved with a MaxAvgCutOpt oracle,
//! MaxAvgCutOpt solved with a MaxAvgCut decision oracle, and the Karp map
//! that turns a MaxAvgCut instance (G, w, k) into a thin-tree instance
//! (G', T, alpha) built from one large clique per vertex.
//!
//! The gadget replaces every vertex of G by a clique of `multiplier * m`
//! fresh vertices and every edge e of G by a triplet `d_e` of three edges
//! between so-far-unused clique vertices, so no gadget vertex ever carries
//! more than one inter-clique edge. The tree T takes a spanning path
//! inside each clique and exactly `w_e + 2` edges of each triplet, which
//! makes the thickness of a lifted cut equal to (avg_weight + 2) / 3.
//! `alpha` is the largest fraction with denominator at most |E(G')|
//! strictly below (k + 2) / 3, so "thickness > alpha" and
//! "average weight >= k" coincide exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use std::collections::BTreeSet;
use std::collections::HashSet;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::{canonical_cuts, Cut, EdgeId, Multigraph, SignedWeights};
use crate::oracle::{crossing_counts, SpanningTree, DEFAULT_VERTEX_LIMIT};
use crate::rational::{format_rational, rational, Rational};

/// Clique size multiplier used by the hardness construction proper. The
/// clique-splitting bound is only established at this size; smaller values
/// are allowed for structural tests and flagged as unsound.
pub const SOUND_MULTIPLIER: usize = 24;

// ---------------------------------------------------------------------------
// MaxCut via a MaxAvgCutOpt oracle
// ---------------------------------------------------------------------------

/// One oracle round of [`max_cut_with_oracle`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxCutIteration {
    /// Cut returned by the MaxAvgCutOpt oracle under the round's weights.
    pub oracle_cut: Cut,
    /// Signed weight sum of that cut; the loop stops when this is <= 0.
    pub oracle_cut_weight_sum: i64,
    /// |delta(C)| after folding the oracle cut in; 0 when C became trivial.
    pub cut_size_after: usize,
}

/// Full record of a [`max_cut_with_oracle`] run. Re-running against the
/// same oracle reproduces the transcript verbatim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxCutTranscript {
    pub iterations: Vec<MaxCutIteration>,
    /// The cut the run claims is maximum (`None` only if the oracle
    /// immediately returned a nonpositive cut, which a correct oracle
    /// never does on a graph with an edge).
    pub claimed_max_cut: Option<Cut>,
    pub claimed_max_cut_size: usize,
    pub answer: bool,
}

fn require_connected(graph: &Multigraph) -> Result<()> {
    if graph.vertex_count() < 2 {
        return Err(Error::InvalidInstance(format!(
            "need at least 2 vertices, got {}",
            graph.vertex_count()
        )));
    }
    if !graph.is_connected() {
        return Err(Error::InvalidInstance("graph is not connected".into()));
    }
    Ok(())
}

fn require_simple(graph: &Multigraph) -> Result<()> {
    let mut seen = HashSet::new();
    for (_, u, v) in graph.edges() {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::InvalidInstance(format!(
                "graph has parallel edges between {u} and {v}; MaxCut instances are simple"
            )));
        }
    }
    Ok(())
}

/// Decides MaxCut(G, k) using an oracle for MaxAvgCutOpt.
///
/// Grows a cut C by symmetric differences: each round reweights edges to
/// -1 inside delta(C) and +1 outside, asks the oracle for a
/// maximum-average cut C', and folds it in. While a larger cut exists the
/// oracle's cut has positive weight and strictly enlarges C, so the loop
/// stops (in at most n^2 rounds) exactly when C is maximum.
pub fn max_cut_with_oracle<F>(
    graph: &Multigraph,
    k: usize,
    mut maco_oracle: F,
) -> Result<(bool, MaxCutTranscript)>
where
    F: FnMut(&Multigraph, &SignedWeights) -> Result<Cut>,
{
    require_connected(graph)?;
    require_simple(graph)?;

    let n = graph.vertex_count();
    let max_iterations = n * n;
    let mut current: Option<Cut> = None;
    let mut iterations = Vec::new();

    for _ in 0..max_iterations {
        let weights = weights_against(graph, current.as_ref())?;
        let oracle_cut = maco_oracle(graph, &weights)?;
        if oracle_cut.vertex_count() != n {
            return Err(Error::Protocol(format!(
                "oracle returned a cut over {} vertices for a {n}-vertex graph",
                oracle_cut.vertex_count()
            )));
        }
        let sum = graph.cut_weight_sum(&weights, &oracle_cut)?;
        let previous = current.clone();
        current = match &current {
            None => Some(oracle_cut.clone()),
            Some(c) => c.symmetric_difference(&oracle_cut)?,
        };
        let cut_size_after = match &current {
            Some(c) => graph.crossing_count(c)?,
            None => 0,
        };
        iterations.push(MaxCutIteration {
            oracle_cut,
            oracle_cut_weight_sum: sum,
            cut_size_after,
        });
        if sum <= 0 {
            let claimed_max_cut_size = match &previous {
                Some(c) => graph.crossing_count(c)?,
                None => 0,
            };
            let answer = claimed_max_cut_size >= k;
            return Ok((
                answer,
                MaxCutTranscript {
                    iterations,
                    claimed_max_cut: previous,
                    claimed_max_cut_size,
                    answer,
                },
            ));
        }
    }
    Err(Error::InvariantViolation(format!(
        "MaxCut loop did not terminate within n^2 = {max_iterations} oracle rounds; \
         the MaxAvgCutOpt oracle is not returning maximum-average cuts"
    )))
}

/// Weights -1 on delta(current), +1 elsewhere; all +1 when current is the
/// empty edge set.
fn weights_against(graph: &Multigraph, current: Option<&Cut>) -> Result<SignedWeights> {
    let values = match current {
        None => vec![1i8; graph.edge_count()],
        Some(cut) => {
            if cut.vertex_count() != graph.vertex_count() {
                return Err(Error::InvalidCut("cut/graph vertex count mismatch".into()));
            }
            graph
                .edges()
                .map(|(_, u, v)| if cut.contains(u) != cut.contains(v) { -1 } else { 1 })
                .collect()
        }
    };
    SignedWeights::new(values)
}

// ---------------------------------------------------------------------------
// MaxAvgCutOpt via a MaxAvgCut decision oracle
// ---------------------------------------------------------------------------

/// Every reduced fraction p/q with |p| <= q <= m, ascending. This is a
/// superset of the average weights any cut of a graph with m edges can
/// attain under {-1, +1} weights, since a cut contains at most m edges.
pub fn enumerate_candidate_avg_weights(graph: &Multigraph) -> Result<Vec<Rational>> {
    let m = graph.edge_count();
    if m == 0 {
        return Err(Error::InvalidInstance(
            "candidate average weights need at least one edge".into(),
        ));
    }
    let mut set = BTreeSet::new();
    for q in 1..=(m as i64) {
        for p in -q..=q {
            set.insert(rational(p, q));
        }
    }
    Ok(set.into_iter().collect())
}

/// One contraction probe of [`max_avg_cut_opt_with_oracle`]: the unordered
/// pair tried (labels of the then-current graph) and the oracle's answer.
/// The probe was committed exactly when the answer is `true`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionProbe {
    pub pair: (usize, usize),
    pub answer: bool,
}

/// Full record of a [`max_avg_cut_opt_with_oracle`] run.
#[derive(Clone, Debug, PartialEq)]
pub struct AvgCutOptTranscript {
    /// Threshold search: (candidate, oracle answer) for every candidate.
    pub search: Vec<(Rational, bool)>,
    /// Largest candidate the oracle accepted.
    pub k_star: Rational,
    pub probes: Vec<ContractionProbe>,
}

/// Solves MaxAvgCutOpt(G, w) with a MaxAvgCut decision oracle.
///
/// First finds the optimum k* by exhaustively querying every candidate
/// average weight, then repeatedly contracts a vertex pair whose
/// contraction keeps the oracle answering YES at k*, until two vertices
/// remain; the classes of the surviving vertices induce the answer cut.
pub fn max_avg_cut_opt_with_oracle<F>(
    graph: &Multigraph,
    weights: &SignedWeights,
    mut mac_oracle: F,
) -> Result<(Cut, AvgCutOptTranscript)>
where
    F: FnMut(&Multigraph, &SignedWeights, &Rational) -> Result<bool>,
{
    require_connected(graph)?;
    if weights.len() != graph.edge_count() {
        return Err(Error::InvalidInstance(format!(
            "{} weights for {} edges",
            weights.len(),
            graph.edge_count()
        )));
    }

    let mut search = Vec::new();
    let mut k_star: Option<Rational> = None;
    for candidate in enumerate_candidate_avg_weights(graph)? {
        let answer = mac_oracle(graph, weights, &candidate)?;
        if answer {
            k_star = Some(candidate.clone());
        }
        search.push((candidate, answer));
    }
    let k_star = k_star.ok_or_else(|| {
        Error::InvariantViolation(
            "MaxAvgCut oracle rejected every candidate including -1; every cut of a \
             connected graph has average weight at least -1"
                .into(),
        )
    })?;

    let n = graph.vertex_count();
    let mut class: Vec<usize> = (0..n).collect();
    let mut current = graph.clone();
    let mut current_weights = weights.clone();
    let mut probes = Vec::new();

    while current.vertex_count() > 2 {
        let mut committed = false;
        'pairs: for u in 0..current.vertex_count() {
            for v in (u + 1)..current.vertex_count() {
                let (contracted, mapping) = current.contract(u, v)?;
                let contracted_weights =
                    current_weights.remap(&mapping, contracted.edge_count());
                let answer = mac_oracle(&contracted, &contracted_weights, &k_star)?;
                probes.push(ContractionProbe {
                    pair: (u, v),
                    answer,
                });
                if answer {
                    // Commit: relabel the class map the same way contract()
                    // relabels vertices (b merges into a, higher shift down).
                    let (a, b) = (u, v);
                    for entry in class.iter_mut() {
                        if *entry == b {
                            *entry = a;
                        } else if *entry > b {
                            *entry -= 1;
                        }
                    }
                    current = contracted;
                    current_weights = contracted_weights;
                    committed = true;
                    break 'pairs;
                }
            }
        }
        if !committed {
            return Err(Error::InvariantViolation(format!(
                "no contractible pair at k* = {} in a {}-vertex graph; with a correct \
                 oracle some optimal cut keeps two vertices on one side",
                format_rational(&k_star),
                current.vertex_count()
            )));
        }
    }

    debug_assert_eq!(class[0], 0);
    let side: Vec<usize> = (0..n).filter(|v| class[*v] == 1).collect();
    let cut = Cut::new(n, side)?;
    Ok((
        cut,
        AvgCutOptTranscript {
            search,
            k_star,
            probes,
        },
    ))
}

// ---------------------------------------------------------------------------
// Clique gadget
// ---------------------------------------------------------------------------

/// The blown-up graph G' with its correspondence maps, before the tree and
/// alpha are attached.
#[derive(Clone, Debug)]
pub struct GadgetGraph {
    g_prime: Multigraph,
    clique_size: usize,
    multiplier: usize,
    triplet_of: Vec<[EdgeId; 3]>,
    source_graph: Multigraph,
}

impl GadgetGraph {
    pub fn g_prime(&self) -> &Multigraph {
        &self.g_prime
    }

    pub fn clique_size(&self) -> usize {
        self.clique_size
    }

    pub fn multiplier(&self) -> usize {
        self.multiplier
    }

    /// Contiguous range of gadget vertices forming the clique of an
    /// original vertex.
    pub fn clique_range(&self, source_vertex: usize) -> Range<usize> {
        let start = source_vertex * self.clique_size;
        start..start + self.clique_size
    }

    /// The triplet d_e of inter-clique edge ids for an original edge.
    pub fn triplet_of(&self, source_edge: EdgeId) -> [EdgeId; 3] {
        self.triplet_of[source_edge]
    }

    pub fn source_graph(&self) -> &Multigraph {
        &self.source_graph
    }

    /// Which original vertex a gadget vertex belongs to.
    pub fn clique_of_vertex(&self, gadget_vertex: usize) -> usize {
        gadget_vertex / self.clique_size
    }

    /// Edge id of the clique-internal edge between local indices i < j of
    /// the given clique, following the lexicographic emission order.
    fn clique_edge_id(&self, source_vertex: usize, i: usize, j: usize) -> EdgeId {
        debug_assert!(i < j && j < self.clique_size);
        let per_clique = self.clique_size * (self.clique_size - 1) / 2;
        let offset = i * self.clique_size - i * (i + 1) / 2 + (j - i - 1);
        source_vertex * per_clique + offset
    }
}

/// Builds the blown-up graph: one clique of `multiplier * m` vertices per
/// original vertex, then for each original edge three inter-clique edges
/// between previously unused endpoints, allocated by scanning each
/// clique's vertices in index order. Output is deterministic.
///
/// Edge ids: all clique-internal edges first (clique by clique, pairs in
/// lexicographic order), then the triplets in original edge order, so
/// `d_e` is always three consecutive ids.
pub fn build_gadget_graph(graph: &Multigraph, multiplier: usize) -> Result<GadgetGraph> {
    require_connected(graph)?;
    let m = graph.edge_count();
    if m == 0 {
        return Err(Error::InvalidInstance("gadget needs at least one edge".into()));
    }
    if multiplier == 0 {
        return Err(Error::InvalidArgument("multiplier must be positive".into()));
    }
    let n = graph.vertex_count();
    let clique_size = multiplier * m;
    if 3 * graph.max_degree() > clique_size {
        return Err(Error::Construction(format!(
            "fresh-pair exhaustion: a vertex of degree {} needs {} clique vertices, \
             clique size is only {clique_size}",
            graph.max_degree(),
            3 * graph.max_degree()
        )));
    }

    let per_clique = clique_size * (clique_size - 1) / 2;
    let mut edges = Vec::with_capacity(n * per_clique + 3 * m);
    for v in 0..n {
        let start = v * clique_size;
        for i in 0..clique_size {
            for j in (i + 1)..clique_size {
                edges.push((start + i, start + j));
            }
        }
    }

    let mut next_free = vec![0usize; n];
    let mut triplet_of = Vec::with_capacity(m);
    for (_, u, v) in graph.edges() {
        let first_id = edges.len();
        for t in 0..3 {
            edges.push((
                u * clique_size + next_free[u] + t,
                v * clique_size + next_free[v] + t,
            ));
        }
        next_free[u] += 3;
        next_free[v] += 3;
        triplet_of.push([first_id, first_id + 1, first_id + 2]);
    }

    Ok(GadgetGraph {
        g_prime: Multigraph::new(n * clique_size, edges)?,
        clique_size,
        multiplier,
        triplet_of,
        source_graph: graph.clone(),
    })
}

/// Builds the gadget tree: a spanning path inside each clique plus the
/// `w_e + 2` lowest-indexed edges of each triplet, with clique-internal
/// edges that would close a cycle dropped incrementally. Inter-clique
/// edges never form a cycle among themselves (no two share a vertex), so
/// triplet membership survives intact: |d_e intersect T| = w_e + 2.
pub fn build_gadget_tree(gadget: &GadgetGraph, weights: &SignedWeights) -> Result<SpanningTree> {
    let m = gadget.source_graph.edge_count();
    if weights.len() != m {
        return Err(Error::InvalidInstance(format!(
            "{} weights for {m} source edges",
            weights.len()
        )));
    }
    let n_prime = gadget.g_prime.vertex_count();
    let mut dsu = crate::dsu::UnionFind::new(n_prime);
    let mut tree_edges = Vec::with_capacity(n_prime - 1);

    for e in 0..m {
        let keep = (i64::from(weights.get(e)) + 2) as usize;
        for &id in gadget.triplet_of[e].iter().take(keep) {
            let (u, v) = gadget.g_prime.endpoints(id);
            if !dsu.union(u, v) {
                return Err(Error::InvariantViolation(format!(
                    "inter-clique edge {id} closed a cycle among inter-clique edges; \
                     two of them share a vertex, which the fresh-pair allocation forbids"
                )));
            }
            tree_edges.push(id);
        }
    }

    for v in 0..gadget.source_graph.vertex_count() {
        let start = v * gadget.clique_size;
        for i in 0..(gadget.clique_size - 1) {
            let id = gadget.clique_edge_id(v, i, i + 1);
            let (a, b) = gadget.g_prime.endpoints(id);
            debug_assert_eq!((a, b), (start + i, start + i + 1));
            if dsu.union(a, b) {
                tree_edges.push(id);
            }
        }
    }

    SpanningTree::new(&gadget.g_prime, tree_edges)
}

/// Largest fraction p/q with 0 <= p <= q <= `denominator_limit` strictly
/// below (k + 2) / 3. Because every thickness value in the gadget has
/// denominator at most |E(G')|, no cut's thickness can land strictly
/// between the result and (k + 2) / 3.
///
/// Linear scan over denominators with p = ceil(q * threshold) - 1; exact
/// integer arithmetic throughout (i128 when it fits, big integers
/// otherwise).
pub fn compute_alpha(k: &Rational, denominator_limit: usize) -> Result<Rational> {
    if *k < rational(-1, 1) {
        return Err(Error::InvalidArgument(format!(
            "threshold k must be at least -1, got {k}"
        )));
    }
    if denominator_limit == 0 {
        return Err(Error::InvalidArgument("denominator limit must be positive".into()));
    }
    // threshold = (k + 2) / 3 = a / b with a, b > 0 (k >= -1 makes a >= 1).
    let a_big: BigInt = k.numer() + 2 * k.denom();
    let b_big: BigInt = 3 * k.denom();
    debug_assert!(a_big.is_positive() && b_big.is_positive());

    let limit = denominator_limit;
    if let (Some(a), Some(b)) = (a_big.to_i128(), b_big.to_i128()) {
        if a.checked_mul(limit as i128).is_some()
            && (limit as i128).checked_mul(limit as i128).is_some()
        {
            let (mut best_p, mut best_q) = (0i128, 1i128);
            for q in 1..=(limit as i128) {
                // floor((q * a - 1) / b) = ceil(q * a / b) - 1, valid since
                // q * a >= 1.
                let p = ((q * a - 1) / b).min(q);
                if p > 0 && p * best_q > best_p * q {
                    best_p = p;
                    best_q = q;
                }
            }
            return Ok(Rational::new(best_p.into(), best_q.into()));
        }
    }

    let one = BigInt::from(1);
    let mut best_p = BigInt::from(0);
    let mut best_q = one.clone();
    for q in 1..=limit {
        let q_big = BigInt::from(q);
        let p = ((&q_big * &a_big - &one).div_floor(&b_big)).min(q_big.clone());
        if p.is_positive() && &p * &best_q > &best_p * &q_big {
            best_p = p;
            best_q = q_big;
        }
    }
    Ok(Rational::new(best_p, best_q))
}

// ---------------------------------------------------------------------------
// The full Karp map (G, w, k) -> (G', T, alpha)
// ---------------------------------------------------------------------------

/// A complete thin-tree instance produced from a MaxAvgCut instance,
/// together with the correspondence maps back to the source.
#[derive(Clone, Debug)]
pub struct GadgetInstance {
    gadget: GadgetGraph,
    tree: SpanningTree,
    alpha: Rational,
    source_weights: SignedWeights,
    source_k: Rational,
}

impl GadgetInstance {
    pub fn g_prime(&self) -> &Multigraph {
        self.gadget.g_prime()
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn gadget(&self) -> &GadgetGraph {
        &self.gadget
    }

    pub fn clique_size(&self) -> usize {
        self.gadget.clique_size()
    }

    pub fn multiplier(&self) -> usize {
        self.gadget.multiplier()
    }

    pub fn clique_range(&self, source_vertex: usize) -> Range<usize> {
        self.gadget.clique_range(source_vertex)
    }

    pub fn triplet_of(&self, source_edge: EdgeId) -> [EdgeId; 3] {
        self.gadget.triplet_of(source_edge)
    }

    pub fn source_graph(&self) -> &Multigraph {
        self.gadget.source_graph()
    }

    pub fn source_weights(&self) -> &SignedWeights {
        &self.source_weights
    }

    pub fn source_k(&self) -> &Rational {
        &self.source_k
    }

    /// Sidecar correspondence map: `c` lines give each original vertex's
    /// clique range, `d` lines each original edge's triplet, and the `a`
    /// line the threshold alpha.
    pub fn write_map(&self) -> String {
        let mut out = String::new();
        for v in 0..self.source_graph().vertex_count() {
            let range = self.clique_range(v);
            out.push_str(&format!("c {v} {} {}\n", range.start, range.len()));
        }
        for e in 0..self.source_graph().edge_count() {
            let [a, b, c] = self.triplet_of(e);
            out.push_str(&format!("d {e} {a} {b} {c}\n"));
        }
        out.push_str(&format!("a {} {}\n", self.alpha.numer(), self.alpha.denom()));
        out
    }
}

/// The Karp map: composes the gadget graph, the gadget tree, and the
/// alpha threshold into a complete (G', T, alpha) instance.
pub fn reduce_mac_to_ttvc(
    graph: &Multigraph,
    weights: &SignedWeights,
    k: &Rational,
    multiplier: usize,
) -> Result<GadgetInstance> {
    if *k < rational(-1, 1) {
        return Err(Error::InvalidArgument(format!(
            "MaxAvgCut threshold must be at least -1, got {k}"
        )));
    }
    let gadget = build_gadget_graph(graph, multiplier)?;
    let tree = build_gadget_tree(&gadget, weights)?;
    let alpha = compute_alpha(k, gadget.g_prime().edge_count())?;
    Ok(GadgetInstance {
        gadget,
        tree,
        alpha,
        source_weights: weights.clone(),
        source_k: k.clone(),
    })
}

/// Lifts a cut of G to the clique-respecting cut of G' whose side is the
/// union of the cliques of the side's vertices. The lifted cut crosses
/// exactly 3 |delta_G(A)| edges, of which sum(w_e + 2) lie in the tree.
pub fn lift_cut(instance: &GadgetInstance, cut: &Cut) -> Result<Cut> {
    let source_n = instance.source_graph().vertex_count();
    if cut.vertex_count() != source_n {
        return Err(Error::InvalidCut(format!(
            "cut is over {} vertices, source graph has {source_n}",
            cut.vertex_count()
        )));
    }
    let mut side = Vec::with_capacity(cut.side_len() * instance.clique_size());
    for v in cut.vertices() {
        side.extend(instance.clique_range(v));
    }
    Cut::new(instance.g_prime().vertex_count(), side)
}

/// Projects a clique-respecting cut of G' back to the cut of G it lifts
/// from; errors when any clique is split across the bipartition.
pub fn project_cut(instance: &GadgetInstance, cut_prime: &Cut) -> Result<Cut> {
    let n_prime = instance.g_prime().vertex_count();
    if cut_prime.vertex_count() != n_prime {
        return Err(Error::InvalidCut(format!(
            "cut is over {} vertices, gadget graph has {n_prime}",
            cut_prime.vertex_count()
        )));
    }
    let mut side = Vec::new();
    for v in 0..instance.source_graph().vertex_count() {
        let inside = instance
            .clique_range(v)
            .filter(|x| cut_prime.contains(*x))
            .count();
        if inside == instance.clique_size() {
            side.push(v);
        } else if inside != 0 {
            return Err(Error::NotCliqueRespecting(format!(
                "clique of source vertex {v} has {inside} of {} vertices on side A",
                instance.clique_size()
            )));
        }
    }
    Cut::new(instance.source_graph().vertex_count(), side)
}

/// Answer of the clique-respecting thin-tree oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct CliqueOracleAnswer {
    /// True iff some lifted cut has thickness strictly above alpha, i.e.
    /// the tree is not alpha-thin.
    pub is_yes: bool,
    /// On YES, a lifted cut of maximum thickness (ties broken by the
    /// source enumeration order); recomputing its thickness exceeds alpha.
    pub certificate: Option<Cut>,
    /// Whether the clique-splitting bound is established for this
    /// instance's multiplier (>= [`SOUND_MULTIPLIER`]). When false the
    /// answer ignores splitting cuts without justification.
    pub sound: bool,
}

/// Decides whether the gadget tree fails to be alpha-thin by enumerating
/// only the 2^(n-1) - 1 lifted (clique-respecting) cuts. Splitting cuts
/// need no enumeration: at multiplier >= 24 every cut that splits a clique
/// has thickness below 1/3, while alpha is always at least the best
/// fraction below (k + 2)/3 >= 1/3, so no splitting cut can be a witness.
pub fn ttvc_clique_respecting_oracle(instance: &GadgetInstance) -> Result<CliqueOracleAnswer> {
    let source_n = instance.source_graph().vertex_count();
    if source_n > DEFAULT_VERTEX_LIMIT {
        return Err(Error::GuardExceeded {
            actual: source_n,
            limit: DEFAULT_VERTEX_LIMIT,
            hint: "the clique-respecting oracle still enumerates all cuts of the source graph"
                .to_string(),
        });
    }
    let mut worst: Option<(Rational, Cut)> = None;
    for cut in canonical_cuts(source_n) {
        let lifted = lift_cut(instance, &cut)?;
        let (in_tree, total) = crossing_counts(instance.g_prime(), instance.tree(), &lifted);
        debug_assert!(total > 0);
        let value = Rational::new((in_tree as i64).into(), (total as i64).into());
        match &worst {
            Some((best, _)) if value <= *best => {}
            _ => worst = Some((value, lifted)),
        }
    }
    let (worst_thickness, worst_cut) =
        worst.ok_or_else(|| Error::InvalidInstance("source graph has no cuts".into()))?;
    let is_yes = worst_thickness > *instance.alpha();
    Ok(CliqueOracleAnswer {
        is_yes,
        certificate: if is_yes { Some(worst_cut) } else { None },
        sound: instance.multiplier() >= SOUND_MULTIPLIER,
    })
}

//! Seeded instance generation, the two lemma checkers, and the end-to-end
//! chain verification used by the fuzz campaign.
//!
//! Everything here is deterministic per seed: identical configuration
//! produces identical instances, reports, and verdicts.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{canonical_cuts, Cut, Multigraph, SignedWeights};
use crate::oracle::{crossing_counts, max_cut_bf, thickness};
use crate::rational::{format_rational, rational, Rational};
use crate::reduce::{
    lift_cut, max_avg_cut_opt_with_oracle, max_cut_with_oracle, reduce_mac_to_ttvc,
    ttvc_clique_respecting_oracle, GadgetInstance, SOUND_MULTIPLIER,
};

/// Guard for the lemma checkers, which enumerate all cuts of the source.
pub const LEMMA_VERTEX_LIMIT: usize = 16;

/// Guard for the full chain, whose cost is exponential in n through the
/// brute-force reference answer and the lifted-cut enumeration.
pub const END_TO_END_VERTEX_LIMIT: usize = 7;

/// Configuration for [`generate_connected`]. Identical configs produce
/// identical instances.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub seed: u64,
    /// Inclusive (min, max) vertex count range; min must be at least 2.
    pub vertex_range: (usize, usize),
    /// Probability of adding each extra candidate edge, exact in [0, 1].
    pub extra_edge_probability: Rational,
    /// Whether extra edges may duplicate existing ones.
    pub allow_parallel: bool,
    /// Probability that an edge weight is +1, exact in [0, 1].
    pub weight_bias: Rational,
}

impl GeneratorConfig {
    fn validate(&self) -> Result<()> {
        let (lo, hi) = self.vertex_range;
        if lo < 2 || lo > hi {
            return Err(Error::InvalidArgument(format!(
                "vertex range ({lo}, {hi}) must satisfy 2 <= min <= max"
            )));
        }
        for (name, p) in [
            ("extra_edge_probability", &self.extra_edge_probability),
            ("weight_bias", &self.weight_bias),
        ] {
            if *p < rational(0, 1) || *p > rational(1, 1) {
                return Err(Error::InvalidArgument(format!(
                    "{name} must lie in [0, 1], got {p}"
                )));
            }
            if p.denom().to_u64().is_none() {
                return Err(Error::InvalidArgument(format!(
                    "{name} denominator does not fit in 64 bits"
                )));
            }
        }
        Ok(())
    }
}

/// Exact Bernoulli draw: true with probability `p`.
fn bernoulli(rng: &mut ChaCha8Rng, p: &Rational) -> bool {
    let denom = p.denom().to_u64().expect("validated denominator");
    let numer = p.numer().to_u64().unwrap_or(0);
    if denom == 0 {
        return false;
    }
    rng.random_range(0..denom) < numer
}

fn generate_once(rng: &mut ChaCha8Rng, config: &GeneratorConfig) -> (Multigraph, SignedWeights) {
    let (lo, hi) = config.vertex_range;
    let n = rng.random_range(lo..=hi);

    // Random recursive spanning tree, then Bernoulli extra edges over all
    // remaining vertex pairs in lexicographic order.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        let parent = rng.random_range(0..v);
        edges.push((parent, v));
    }
    let tree_len = edges.len();
    for u in 0..n {
        for v in (u + 1)..n {
            if bernoulli(rng, &config.extra_edge_probability) {
                let duplicate = edges[..tree_len].contains(&(u, v));
                if config.allow_parallel || !duplicate {
                    edges.push((u, v));
                }
            }
        }
    }
    let weights = (0..edges.len())
        .map(|_| if bernoulli(rng, &config.weight_bias) { 1 } else { -1 })
        .collect();
    let graph = Multigraph::new(n, edges).expect("generator emits valid edges");
    (graph, SignedWeights::new(weights).expect("generator emits +-1"))
}

/// Connected multigraph from a random spanning tree plus Bernoulli extra
/// edges, with i.i.d. weights (P(+1) = weight_bias).
pub fn generate_connected(config: &GeneratorConfig) -> Result<(Multigraph, SignedWeights)> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    Ok(generate_once(&mut rng, config))
}

/// Same as [`generate_connected`] but re-rolls (within the same seeded
/// stream) until the instance has at most `max_edges` edges. Used to keep
/// gadget corpora at full multiplier affordable.
pub fn generate_connected_with_edge_cap(
    config: &GeneratorConfig,
    max_edges: usize,
) -> Result<(Multigraph, SignedWeights)> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..10_000 {
        let (graph, weights) = generate_once(&mut rng, config);
        if graph.edge_count() <= max_edges {
            return Ok((graph, weights));
        }
    }
    Err(Error::InvalidArgument(format!(
        "could not generate an instance with at most {max_edges} edges; \
         lower extra_edge_probability or the vertex range"
    )))
}

/// One recorded discrepancy. The cut (when one is attached) together with
/// the serialized instance suffices to re-derive both sides offline.
#[derive(Clone, Debug)]
pub struct LemmaViolation {
    pub cut: Option<Cut>,
    pub expected: String,
    pub observed: String,
}

/// Result of one checker run over one instance.
#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub instance: String,
    pub checks_run: usize,
    pub violations: Vec<LemmaViolation>,
    pub elapsed: Duration,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn instance_descriptor(graph: &Multigraph, extra: &str) -> String {
    format!(
        "n={} m={} {extra}",
        graph.vertex_count(),
        graph.edge_count()
    )
}

/// Checks the threshold equivalence underlying the Karp map: for every
/// cut c of G, avg_weight(c) >= k iff thickness(lift(c)) > alpha.
pub fn lemma1_check(
    graph: &Multigraph,
    weights: &SignedWeights,
    k: &Rational,
    multiplier: usize,
) -> Result<LemmaReport> {
    let start = Instant::now();
    let n = graph.vertex_count();
    if n > LEMMA_VERTEX_LIMIT {
        return Err(Error::GuardExceeded {
            actual: n,
            limit: LEMMA_VERTEX_LIMIT,
            hint: "the equivalence check enumerates every cut of the source graph".into(),
        });
    }
    let instance = reduce_mac_to_ttvc(graph, weights, k, multiplier)?;
    let alpha = instance.alpha().clone();

    let mut checks_run = 0usize;
    let mut violations = Vec::new();
    for cut in canonical_cuts(n) {
        let avg = graph.avg_cut_weight(weights, &cut)?;
        let lifted = lift_cut(&instance, &cut)?;
        let lifted_thickness = thickness(instance.g_prime(), instance.tree(), &lifted)?;
        checks_run += 1;
        let avg_reaches_k = avg >= *k;
        let thickness_exceeds_alpha = lifted_thickness > alpha;
        if avg_reaches_k != thickness_exceeds_alpha {
            violations.push(LemmaViolation {
                cut: Some(cut),
                expected: "(avg >= k) == (lifted thickness > alpha)".into(),
                observed: format!(
                    "avg={} k={} thickness={} alpha={}",
                    format_rational(&avg),
                    format_rational(k),
                    format_rational(&lifted_thickness),
                    format_rational(&alpha)
                ),
            });
        }
    }

    Ok(LemmaReport {
        instance: instance_descriptor(
            graph,
            &format!(
                "k={} multiplier={multiplier} alpha={}",
                format_rational(k),
                format_rational(&alpha)
            ),
        ),
        checks_run,
        violations,
        elapsed: start.elapsed(),
    })
}

/// True iff the cut puts vertices of at least one clique on both sides.
fn splits_a_clique(instance: &GadgetInstance, cut: &Cut) -> bool {
    let cs = instance.clique_size();
    (0..instance.source_graph().vertex_count()).any(|v| {
        let inside = instance.clique_range(v).filter(|x| cut.contains(*x)).count();
        inside != 0 && inside != cs
    })
}

/// Checks that clique-splitting cuts stay strictly below thickness 1/3
/// (and hence below alpha) on structured families plus random samples:
/// (a) one vertex peeled off a clique, (b) one clique split in half,
/// (c) every clique split in half, (d) uniformly random vertex subsets,
/// (e) lifted cuts perturbed by moving 1..3 vertices across.
pub fn lemma2_check(instance: &GadgetInstance, samples: usize, seed: u64) -> Result<LemmaReport> {
    let start = Instant::now();
    if instance.multiplier() < SOUND_MULTIPLIER {
        return Err(Error::InvalidArgument(format!(
            "the clique-splitting bound needs multiplier >= {SOUND_MULTIPLIER}, got {}",
            instance.multiplier()
        )));
    }
    let source_n = instance.source_graph().vertex_count();
    if source_n > LEMMA_VERTEX_LIMIT {
        return Err(Error::GuardExceeded {
            actual: source_n,
            limit: LEMMA_VERTEX_LIMIT,
            hint: "family (e) enumerates every cut of the source graph".into(),
        });
    }

    let g_prime = instance.g_prime();
    let n_prime = g_prime.vertex_count();
    let cs = instance.clique_size();
    let one_third = rational(1, 3);
    let mut checks_run = 0usize;
    let mut violations = Vec::new();

    let mut check = |cut: Cut, family: &str, violations: &mut Vec<LemmaViolation>| {
        if !splits_a_clique(instance, &cut) {
            return false;
        }
        checks_run += 1;
        let (in_tree, total) = crossing_counts(g_prime, instance.tree(), &cut);
        let value = Rational::new((in_tree as i64).into(), (total as i64).into());
        if value >= one_third || value > *instance.alpha() {
            violations.push(LemmaViolation {
                cut: Some(cut),
                expected: format!("splitting cut ({family}) has thickness < 1/3 and <= alpha"),
                observed: format!(
                    "thickness={} alpha={}",
                    format_rational(&value),
                    format_rational(instance.alpha())
                ),
            });
        }
        true
    };

    // (a) peel a single vertex: the first clique vertex (which carries an
    // inter-clique edge whenever the source vertex has one) and the last
    // (which never does).
    for v in 0..source_n {
        let range = instance.clique_range(v);
        check(Cut::new(n_prime, [range.start])?, "peel-first", &mut violations);
        check(Cut::new(n_prime, [range.end - 1])?, "peel-last", &mut violations);
    }

    // (b) one clique split in half.
    for v in 0..source_n {
        let range = instance.clique_range(v);
        let half: Vec<usize> = range.clone().take(cs / 2).collect();
        check(Cut::new(n_prime, half)?, "half-one-clique", &mut violations);
    }

    // (c) every clique split in half.
    let all_halves: Vec<usize> = (0..source_n)
        .flat_map(|v| instance.clique_range(v).take(cs / 2))
        .collect();
    check(Cut::new(n_prime, all_halves)?, "half-all-cliques", &mut violations);

    // (d) uniformly random vertex subsets, drawn until `samples` splitting
    // cuts have been evaluated (a uniform subset at gadget scale splits
    // some clique with overwhelming probability).
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    while accepted < samples && attempts < 2 * samples + 64 {
        attempts += 1;
        let side: Vec<usize> = (0..n_prime).filter(|_| rng.random::<bool>()).collect();
        if side.is_empty() || side.len() == n_prime {
            continue;
        }
        if check(Cut::new(n_prime, side)?, "random-subset", &mut violations) {
            accepted += 1;
        }
    }

    // (e) lifted cuts with 1..3 vertices moved across.
    for source_cut in canonical_cuts(source_n) {
        let lifted = lift_cut(instance, &source_cut)?;
        for moved in 1..=3usize {
            let removed: Vec<usize> = lifted.vertices().skip(moved).collect();
            check(Cut::new(n_prime, removed)?, "lifted-minus", &mut violations);

            let mut added: Vec<usize> = lifted.vertices().collect();
            added.extend(
                (0..n_prime)
                    .filter(|x| !lifted.contains(*x))
                    .take(moved),
            );
            check(Cut::new(n_prime, added)?, "lifted-plus", &mut violations);
        }
    }

    Ok(LemmaReport {
        instance: instance_descriptor(
            instance.source_graph(),
            &format!(
                "multiplier={} samples={samples} seed={seed} alpha={}",
                instance.multiplier(),
                format_rational(instance.alpha())
            ),
        ),
        checks_run,
        violations,
        elapsed: start.elapsed(),
    })
}

/// Runs the whole chain on one instance: MaxCut answered through
/// MaxAvgCutOpt, answered through MaxAvgCut, answered through the gadget
/// map plus the clique-respecting thin-tree oracle; compares against the
/// brute-force MaxCut answer.
pub fn end_to_end_check(graph: &Multigraph, k: usize, multiplier: usize) -> Result<LemmaReport> {
    let start = Instant::now();
    let n = graph.vertex_count();
    if n > END_TO_END_VERTEX_LIMIT {
        return Err(Error::GuardExceeded {
            actual: n,
            limit: END_TO_END_VERTEX_LIMIT,
            hint: "the chain check brute-forces the reference MaxCut answer".into(),
        });
    }

    let (reference_value, _) = max_cut_bf(graph)?;
    let expected = reference_value >= k;

    let (answer, transcript) = max_cut_with_oracle(graph, k, |g, w| {
        let (cut, _) = max_avg_cut_opt_with_oracle(g, w, |g2, w2, threshold| {
            let instance = reduce_mac_to_ttvc(g2, w2, threshold, multiplier)?;
            Ok(ttvc_clique_respecting_oracle(&instance)?.is_yes)
        })?;
        Ok(cut)
    })?;

    let mut violations = Vec::new();
    if answer != expected {
        violations.push(LemmaViolation {
            cut: transcript.claimed_max_cut.clone(),
            expected: format!("chain answer == (max_cut {reference_value} >= k {k})"),
            observed: format!("chain answered {answer}, brute force implies {expected}"),
        });
    }

    Ok(LemmaReport {
        instance: instance_descriptor(graph, &format!("k={k} multiplier={multiplier}")),
        checks_run: 1,
        violations,
        elapsed: start.elapsed(),
    })
}

/// One fuzz trial: a generated instance checked at every k in 0..=m+1.
#[derive(Clone, Debug)]
pub struct FuzzTrial {
    pub index: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub checks: usize,
    pub disagreements: usize,
}

/// Outcome of a seeded end-to-end campaign.
#[derive(Clone, Debug)]
pub struct FuzzOutcome {
    pub trials: Vec<FuzzTrial>,
    pub total_checks: usize,
    pub total_disagreements: usize,
}

/// Edge cap applied to fuzz instances so multiplier-24 gadgets stay small.
pub const FUZZ_EDGE_CAP: usize = 6;

/// Runs `count` end-to-end trials on seeded random connected simple graphs
/// with 2..=max_n vertices, checking every k in 0..=m+1 at full
/// multiplier. Trials are processed in seed order, so the outcome is
/// deterministic.
pub fn fuzz_campaign(seed: u64, count: usize, max_n: usize) -> Result<FuzzOutcome> {
    if !(2..=END_TO_END_VERTEX_LIMIT).contains(&max_n) {
        return Err(Error::InvalidArgument(format!(
            "max-n must lie in 2..={END_TO_END_VERTEX_LIMIT}, got {max_n}"
        )));
    }
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let mut trials = Vec::with_capacity(count);
    let mut total_checks = 0usize;
    let mut total_disagreements = 0usize;
    for index in 0..count {
        let config = GeneratorConfig {
            seed: master.random::<u64>(),
            vertex_range: (2, max_n),
            extra_edge_probability: rational(1, 3),
            allow_parallel: false,
            weight_bias: rational(1, 2),
        };
        let (graph, _) = generate_connected_with_edge_cap(&config, FUZZ_EDGE_CAP)?;
        let m = graph.edge_count();
        let mut checks = 0usize;
        let mut disagreements = 0usize;
        for k in 0..=(m + 1) {
            let report = end_to_end_check(&graph, k, SOUND_MULTIPLIER)?;
            checks += report.checks_run;
            disagreements += report.violations.len();
        }
        total_checks += checks;
        total_disagreements += disagreements;
        trials.push(FuzzTrial {
            index,
            vertex_count: graph.vertex_count(),
            edge_count: m,
            checks,
            disagreements,
        });
    }
    Ok(FuzzOutcome {
        trials,
        total_checks,
        total_disagreements,
    })
}

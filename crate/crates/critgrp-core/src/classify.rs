//! Bounded exhaustive searches reproducing the finiteness and
//! classification statements for small multigraphs and small totally
//! unimodular representations.
//!
//! Enumeration is a serial generator; per-candidate evaluation is pure so
//! callers may farm it out. The aggregation functions accept evaluations in
//! any order.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::Error;
use crate::graph::{CanonicalKey, Multigraph};
use crate::group::AbelianGroup;
use crate::jacobian::jacobian_laplacian;
use crate::matroid::{exponent2_structure_check, is_totally_unimodular, RegularMatroidRep};
use crate::report::StructureReport;
use crate::Caps;

/// Size limits for the searches. Defaults fit a minutes-scale run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_rank: usize,
    pub max_elements: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_vertices: 6,
            max_edges: 8,
            max_rank: 3,
            max_elements: 5,
        }
    }
}

/// Everything the searches need to know about one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEvaluation {
    pub graph: Multigraph,
    pub key: CanonicalKey,
    pub jacobian: AbelianGroup,
    pub max_degree: usize,
    pub biconnected: bool,
    pub doubled_tree: bool,
}

/// Search outcome compared against the expected set of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub k: usize,
    pub bounds: SearchBounds,
    pub found: Vec<GraphEvaluation>,
    pub expected: Vec<Multigraph>,
    pub matches: bool,
}

/// Every connected multigraph (no self-loops) within the bounds, exactly
/// once up to isomorphism, as canonical representatives sorted by key.
///
/// Simple connected skeletons are enumerated per vertex count, then extra
/// parallel edges are distributed over the skeleton edges; duplicates are
/// removed with the brute-force canonical form throughout.
pub fn enumerate_connected_multigraphs(
    bounds: &SearchBounds,
    caps: &Caps,
) -> Result<Vec<Multigraph>, Error> {
    if bounds.max_vertices > caps.canonical_vertices {
        return Err(Error::CapExceeded {
            what: "enumeration vertex count",
            cap: caps.canonical_vertices,
            needed: bounds.max_vertices,
        });
    }
    let mut keys: BTreeSet<CanonicalKey> = BTreeSet::new();
    if bounds.max_vertices >= 1 {
        keys.insert(Multigraph::single_vertex().canonical_form(caps.canonical_vertices)?);
    }
    for n in 2..=bounds.max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        if pairs.len() >= 31 {
            // Skeleton enumeration walks subsets as a u32 bitmask.
            return Err(Error::CapExceeded {
                what: "skeleton vertex-pair count",
                cap: 30,
                needed: pairs.len(),
            });
        }
        if n - 1 > bounds.max_edges {
            continue;
        }
        let mut skeleton_keys: BTreeSet<CanonicalKey> = BTreeSet::new();
        let mut skeletons: Vec<Multigraph> = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let count = mask.count_ones() as usize;
            if count < n - 1 || count > bounds.max_edges {
                continue;
            }
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Multigraph::new(n, edges).expect("skeleton edges are valid");
            if !g.is_connected() {
                continue;
            }
            if skeleton_keys.insert(g.canonical_form(caps.canonical_vertices)?) {
                skeletons.push(g);
            }
        }

        for skeleton in skeletons {
            let support: Vec<(usize, usize)> = skeleton.edges().to_vec();
            let spare = bounds.max_edges - support.len();
            // Distribute up to `spare` extra copies over the parallel classes.
            let mut extra = vec![0usize; support.len()];
            loop {
                let mut edges = Vec::new();
                for (i, &e) in support.iter().enumerate() {
                    for _ in 0..=extra[i] {
                        edges.push(e);
                    }
                }
                let g = Multigraph::new(n, edges).expect("expanded edges are valid");
                keys.insert(g.canonical_form(caps.canonical_vertices)?);

                // Odometer bounded by the total of extra copies.
                let mut i = 0;
                loop {
                    if i == extra.len() {
                        extra.clear();
                        break;
                    }
                    extra[i] += 1;
                    if extra.iter().sum::<usize>() <= spare {
                        break;
                    }
                    extra[i] = 0;
                    i += 1;
                }
                if extra.is_empty() {
                    break;
                }
            }
        }
    }
    Ok(keys.iter().map(Multigraph::from_canonical_key).collect())
}

/// Pure per-candidate evaluation used by all the graph sweeps.
pub fn evaluate_graph(g: &Multigraph, caps: &Caps) -> Result<GraphEvaluation, Error> {
    let jacobian = jacobian_laplacian(g)?;
    Ok(GraphEvaluation {
        key: g.canonical_form(caps.canonical_vertices)?,
        jacobian,
        max_degree: g.max_degree(),
        biconnected: g.is_biconnected(),
        doubled_tree: g.is_doubled_tree(),
        graph: g.clone(),
    })
}

/// The expected classification sets: exponent 1 admits the one-vertex graph
/// and the single edge; exponent 2 adds the doubled edge; exponent 3 adds
/// the triangle and the three-edge banana.
pub fn expected_biconnected_graphs(k: usize) -> Result<Vec<Multigraph>, Error> {
    let mut expected = vec![
        Multigraph::single_vertex(),
        Multigraph::new(2, vec![(0, 1)]).expect("single edge"),
    ];
    match k {
        1 => {}
        2 => expected.push(Multigraph::cycle(2)),
        3 => {
            expected.push(Multigraph::cycle(2));
            expected.push(Multigraph::cycle(3));
            expected.push(Multigraph::banana(3));
        }
        _ => return Err(Error::UnsupportedExponent { k }),
    }
    Ok(expected)
}

/// Aggregates evaluations into the biconnected exponent-at-most-k
/// classification and compares with the expected set.
pub fn classify_biconnected_graphs_from(
    k: usize,
    bounds: &SearchBounds,
    caps: &Caps,
    evaluations: &[GraphEvaluation],
) -> Result<ClassificationResult, Error> {
    let expected = expected_biconnected_graphs(k)?;
    let mut found: Vec<GraphEvaluation> = evaluations
        .iter()
        .filter(|e| e.biconnected && e.jacobian.exponent() <= BigInt::from(k as u64))
        .cloned()
        .collect();
    found.sort_by(|a, b| a.key.cmp(&b.key));
    found.dedup_by(|a, b| a.key == b.key);

    let found_keys: BTreeSet<CanonicalKey> = found.iter().map(|e| e.key.clone()).collect();
    let expected_keys: BTreeSet<CanonicalKey> = expected
        .iter()
        .map(|g| g.canonical_form(caps.canonical_vertices))
        .collect::<Result<_, _>>()?;
    Ok(ClassificationResult {
        k,
        bounds: bounds.clone(),
        matches: found_keys == expected_keys,
        found,
        expected,
    })
}

/// Full search: enumerate, evaluate serially, aggregate.
pub fn classify_biconnected_graphs(
    k: usize,
    bounds: &SearchBounds,
    caps: &Caps,
) -> Result<ClassificationResult, Error> {
    let evaluations = enumerate_connected_multigraphs(bounds, caps)?
        .iter()
        .map(|g| evaluate_graph(g, caps))
        .collect::<Result<Vec<_>, _>>()?;
    classify_biconnected_graphs_from(k, bounds, caps, &evaluations)
}

/// Both directions of the doubled-tree characterization of exponent at most
/// two, over every connected multigraph within bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledTreeReport {
    pub checked: usize,
    /// Exponent at most two but not a doubled tree.
    pub forward_failures: Vec<Multigraph>,
    /// Doubled tree but exponent above two.
    pub converse_failures: Vec<Multigraph>,
}

impl DoubledTreeReport {
    pub fn passed(&self) -> bool {
        self.forward_failures.is_empty() && self.converse_failures.is_empty()
    }
}

pub fn verify_doubled_tree_from(evaluations: &[GraphEvaluation]) -> DoubledTreeReport {
    let two = BigInt::from(2);
    let mut forward = Vec::new();
    let mut converse = Vec::new();
    for e in evaluations {
        let small_exponent = e.jacobian.exponent() <= two;
        if small_exponent && !e.doubled_tree {
            forward.push(e.graph.clone());
        }
        if e.doubled_tree && !small_exponent {
            converse.push(e.graph.clone());
        }
    }
    DoubledTreeReport {
        checked: evaluations.len(),
        forward_failures: forward,
        converse_failures: converse,
    }
}

pub fn verify_doubled_tree_characterization(
    bounds: &SearchBounds,
    caps: &Caps,
) -> Result<DoubledTreeReport, Error> {
    let evaluations = enumerate_connected_multigraphs(bounds, caps)?
        .iter()
        .map(|g| evaluate_graph(g, caps))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(verify_doubled_tree_from(&evaluations))
}

/// Exponent-versus-maximum-degree sweep over every connected graph with at
/// least two vertices within bounds. Violations are collected, not asserted;
/// the inequality provably holds for biconnected graphs but fails in the
/// presence of cut vertices (the three-vertex path already violates it), so
/// each violation records whether the graph was biconnected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundSweep {
    pub checked: usize,
    pub violations: Vec<LowerBoundViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundViolation {
    pub graph: Multigraph,
    pub max_degree: usize,
    pub exponent: BigInt,
    pub biconnected: bool,
}

impl LowerBoundSweep {
    pub fn biconnected_violations(&self) -> usize {
        self.violations.iter().filter(|v| v.biconnected).count()
    }
}

pub fn lower_bound_sweep_from(evaluations: &[GraphEvaluation]) -> LowerBoundSweep {
    let mut checked = 0;
    let mut violations = Vec::new();
    for e in evaluations {
        if e.graph.vertex_count() < 2 {
            continue;
        }
        checked += 1;
        if e.jacobian.exponent() < BigInt::from(e.max_degree as u64) {
            violations.push(LowerBoundViolation {
                graph: e.graph.clone(),
                max_degree: e.max_degree,
                exponent: e.jacobian.exponent(),
                biconnected: e.biconnected,
            });
        }
    }
    LowerBoundSweep {
        checked,
        violations,
    }
}

pub fn lower_bound_sweep(bounds: &SearchBounds, caps: &Caps) -> Result<LowerBoundSweep, Error> {
    let evaluations = enumerate_connected_multigraphs(bounds, caps)?
        .iter()
        .map(|g| evaluate_graph(g, caps))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(lower_bound_sweep_from(&evaluations))
}

/// One surviving representation in the matroid sweep.
#[derive(Debug, Clone)]
pub struct MatroidSurvivor {
    pub rep: RegularMatroidRep,
    pub jacobian: AbelianGroup,
    pub element_count: usize,
    pub structure: StructureReport,
}

/// Result of the exponent-2 matroid search: every connected loopless
/// totally unimodular representation within bounds whose Jacobian has
/// exponent at most two, with the projection-structure report for each.
#[derive(Debug, Clone)]
pub struct MatroidExp2Result {
    pub bounds: SearchBounds,
    pub candidates_checked: usize,
    pub survivors: Vec<MatroidSurvivor>,
    pub matches: bool,
}

/// Candidate representations: multisets of nonzero sign-normalized columns
/// over {-1, 0, 1}, which is exactly deduplication by column permutation
/// and column negation. Looplessness is built in (no zero columns).
pub fn enumerate_tu_candidates(bounds: &SearchBounds) -> Vec<RegularMatroidRep> {
    let mut out = Vec::new();
    for rank in 1..=bounds.max_rank {
        // Nonzero columns up to sign: first nonzero entry is +1.
        let mut classes: Vec<Vec<i64>> = Vec::new();
        let values = [0i64, 1, -1];
        let total = 3usize.pow(rank as u32);
        for code in 0..total {
            let mut c = code;
            let col: Vec<i64> = (0..rank)
                .map(|_| {
                    let v = values[c % 3];
                    c /= 3;
                    v
                })
                .collect();
            if col.iter().find(|&&v| v != 0) == Some(&1) {
                classes.push(col);
            }
        }

        // Multisets of classes of each size up to the element bound.
        for size in 1..=bounds.max_elements {
            let mut chosen = vec![0usize; size];
            loop {
                let cols: Vec<Vec<i64>> = chosen.iter().map(|&c| classes[c].clone()).collect();
                let matrix =
                    crate::linalg::IntMatrix::from_fn(rank, size, |i, j| BigInt::from(cols[j][i]));
                out.push(
                    RegularMatroidRep::new_unverified(matrix).expect("entries are within range"),
                );
                // Next non-decreasing index vector.
                let mut i = size;
                loop {
                    if i == 0 {
                        chosen.clear();
                        break;
                    }
                    i -= 1;
                    if chosen[i] + 1 < classes.len() {
                        chosen[i] += 1;
                        for j in i + 1..size {
                            chosen[j] = chosen[i];
                        }
                        break;
                    }
                }
                if chosen.is_empty() {
                    break;
                }
            }
        }
    }
    out
}

/// Per-candidate evaluation: `None` when the candidate is not totally
/// unimodular or not connected, otherwise the survivor data if the
/// exponent is at most two.
pub fn evaluate_tu_candidate(
    rep: &RegularMatroidRep,
    caps: &Caps,
) -> Result<Option<MatroidSurvivor>, Error> {
    if !is_totally_unimodular(rep.matrix(), caps.tu_dimension)? {
        return Ok(None);
    }
    if !rep.is_connected(caps.circuit_elements)? {
        return Ok(None);
    }
    let jacobian = rep.jacobian()?;
    if jacobian.exponent() > BigInt::from(2) {
        return Ok(None);
    }
    let structure = exponent2_structure_check(rep, caps.circuit_elements)?;
    Ok(Some(MatroidSurvivor {
        element_count: rep.element_count(),
        rep: rep.clone(),
        jacobian,
        structure,
    }))
}

pub fn classify_regular_matroids_exp2_from(
    bounds: &SearchBounds,
    candidates_checked: usize,
    survivors: Vec<MatroidSurvivor>,
) -> MatroidExp2Result {
    let matches = survivors
        .iter()
        .all(|s| s.element_count <= 2 && s.structure.applicable && s.structure.passed());
    MatroidExp2Result {
        bounds: bounds.clone(),
        candidates_checked,
        survivors,
        matches,
    }
}

pub fn classify_regular_matroids_exp2(
    bounds: &SearchBounds,
    caps: &Caps,
) -> Result<MatroidExp2Result, Error> {
    let candidates = enumerate_tu_candidates(bounds);
    let checked = candidates.len();
    let mut survivors = Vec::new();
    for rep in &candidates {
        if let Some(s) = evaluate_tu_candidate(rep, caps)? {
            survivors.push(s);
        }
    }
    Ok(classify_regular_matroids_exp2_from(
        bounds, checked, survivors,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_bounds(v: usize, e: usize) -> SearchBounds {
        SearchBounds {
            max_vertices: v,
            max_edges: e,
            ..SearchBounds::default()
        }
    }

    #[test]
    fn enumerate_two_vertices() {
        let graphs =
            enumerate_connected_multigraphs(&small_bounds(2, 2), &Caps::default()).unwrap();
        // One vertex; single edge; doubled edge.
        assert_eq!(graphs.len(), 3);
    }

    #[test]
    fn enumerate_three_vertices() {
        let graphs =
            enumerate_connected_multigraphs(&small_bounds(3, 3), &Caps::default()).unwrap();
        // One vertex; edge; doubled edge; tripled edge; path; path with one
        // doubled edge; triangle.
        assert_eq!(graphs.len(), 7);
        let caps = Caps::default();
        let keys: BTreeSet<CanonicalKey> = graphs
            .iter()
            .map(|g| g.canonical_form(caps.canonical_vertices).unwrap())
            .collect();
        for named in [
            Multigraph::single_vertex(),
            Multigraph::new(2, vec![(0, 1)]).unwrap(),
            Multigraph::cycle(2),
            Multigraph::banana(3),
            Multigraph::path(3),
            Multigraph::cycle(3),
            Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap(),
        ] {
            assert!(keys.contains(&named.canonical_form(caps.canonical_vertices).unwrap()));
        }
    }

    #[test]
    fn enumerate_one_vertex_cell() {
        let graphs =
            enumerate_connected_multigraphs(&small_bounds(1, 0), &Caps::default()).unwrap();
        assert_eq!(graphs.len(), 1);
    }

    #[test]
    fn enumeration_respects_vertex_cap() {
        let bounds = SearchBounds {
            max_vertices: 9,
            ..SearchBounds::default()
        };
        assert!(matches!(
            enumerate_connected_multigraphs(&bounds, &Caps::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn classify_k1_graphs() {
        let result = classify_biconnected_graphs(1, &small_bounds(4, 5), &Caps::default()).unwrap();
        assert!(result.matches, "{result:?}");
        assert_eq!(result.found.len(), 2);
    }

    #[test]
    fn classify_k2_graphs_small_bounds() {
        let result = classify_biconnected_graphs(2, &small_bounds(4, 5), &Caps::default()).unwrap();
        assert!(result.matches);
        assert_eq!(result.found.len(), 3);
    }

    #[test]
    fn classify_rejects_unsupported_k() {
        assert!(matches!(
            classify_biconnected_graphs(4, &small_bounds(3, 3), &Caps::default()),
            Err(Error::UnsupportedExponent { k: 4 })
        ));
    }

    #[test]
    fn doubled_tree_small_bounds() {
        let report =
            verify_doubled_tree_characterization(&small_bounds(4, 5), &Caps::default()).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.checked > 0);
    }

    #[test]
    fn lower_bound_sweep_finds_cut_vertex_violations_only() {
        let sweep = lower_bound_sweep(&small_bounds(4, 4), &Caps::default()).unwrap();
        assert!(!sweep.violations.is_empty());
        assert_eq!(sweep.biconnected_violations(), 0);
    }

    #[test]
    fn tu_candidate_counts_rank_one() {
        let bounds = SearchBounds {
            max_rank: 1,
            max_elements: 3,
            ..SearchBounds::default()
        };
        // Only the all-ones rows [1], [1,1], [1,1,1].
        assert_eq!(enumerate_tu_candidates(&bounds).len(), 3);
    }

    #[test]
    fn matroid_exp2_small_sweep() {
        let bounds = SearchBounds {
            max_rank: 2,
            max_elements: 3,
            ..SearchBounds::default()
        };
        let result = classify_regular_matroids_exp2(&bounds, &Caps::default()).unwrap();
        assert!(result.matches, "survivors: {:?}", result.survivors.len());
        assert!(result.survivors.iter().all(|s| s.element_count <= 2));
        // The single columns and the parallel/antiparallel pairs survive.
        assert!(!result.survivors.is_empty());
    }
}

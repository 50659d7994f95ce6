//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.
//!
//! Criterion 6 is expected to FAIL and is left failing on purpose: the
//! exponent-versus-maximum-degree inequality it asserts over all connected
//! graphs is false as soon as a cut vertex is present (the three-vertex
//! path is the smallest counterexample: trivial Jacobian, maximum degree
//! two). The burning-algorithm argument behind the bound needs the graph
//! minus the max-degree vertex to stay connected, i.e. biconnectivity. The
//! test prints the biconnected-only result, which has zero violations,
//! before failing on the full family.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use critgrp_core::classify::{
    classify_biconnected_graphs, classify_regular_matroids_exp2, enumerate_connected_multigraphs,
    lower_bound_sweep, verify_doubled_tree_characterization, SearchBounds,
};
use critgrp_core::graph::{Multigraph, Orientation};
use critgrp_core::group::AbelianGroup;
use critgrp_core::jacobian::{
    check_definition_equivalence, cycle_lattice_basis, jacobian_dual_cut, jacobian_edge_lattice,
    jacobian_laplacian, projection_and_dual,
};
use critgrp_core::linalg::IntMatrix;
use critgrp_core::matroid::{exponent3_entry_diagnostics, RegularMatroidRep};
use critgrp_core::sandpile::{degree_zero_reduced_divisors, jacobian_by_reduced_divisors};
use critgrp_core::Caps;

const GROUP_CAP: usize = 512;

fn bounds(v: usize, e: usize) -> SearchBounds {
    SearchBounds {
        max_vertices: v,
        max_edges: e,
        ..SearchBounds::default()
    }
}

/// The exhaustive comparison family: every connected multigraph with at
/// most five vertices and seven edges, up to isomorphism.
fn comparison_family() -> Vec<Multigraph> {
    enumerate_connected_multigraphs(&bounds(5, 7), &Caps::default()).unwrap()
}

fn four_routes(g: &Multigraph) -> [AbelianGroup; 4] {
    let o = Orientation::default_for(g);
    [
        jacobian_laplacian(g).unwrap(),
        jacobian_edge_lattice(g, &o).unwrap(),
        jacobian_dual_cut(&g.incidence_matrix(&o).unwrap()).unwrap(),
        jacobian_by_reduced_divisors(g, 0, GROUP_CAP).unwrap(),
    ]
}

/// Independent oracle for criterion 4: spanning trees by enumeration of
/// (n-1)-edge subsets with a union-find acyclicity test.
fn brute_force_spanning_trees(g: &Multigraph) -> u64 {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n == 1 {
        return 1;
    }
    if m < n - 1 {
        return 0;
    }
    let mut count = 0;
    let mut subset: Vec<usize> = (0..n - 1).collect();
    loop {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        let mut acyclic = true;
        for &e in &subset {
            let (u, v) = g.edges()[e];
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                acyclic = false;
                break;
            }
            parent[ru] = rv;
        }
        if acyclic {
            count += 1;
        }
        let k = subset.len();
        let mut i = k;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if subset[i] + (k - i) < m {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[test]
fn criterion_01_cycle_groups() {
    for n in 2..=10usize {
        let g = Multigraph::cycle(n);
        let expected = AbelianGroup::cyclic(n as u64);
        for (route, jac) in four_routes(&g).into_iter().enumerate() {
            assert_eq!(jac, expected, "route {route} on cycle of length {n}");
        }
        assert_eq!(expected.exponent(), BigInt::from(n as u64));
    }
    println!("criterion 01 (cycle groups Z/n, all four routes, n = 2..10): PASS");
}

#[test]
fn criterion_02_banana_groups() {
    for m in 2..=8usize {
        let g = Multigraph::banana(m);
        let expected = AbelianGroup::cyclic(m as u64);
        for (route, jac) in four_routes(&g).into_iter().enumerate() {
            assert_eq!(jac, expected, "route {route} on banana with {m} edges");
        }
    }
    assert_eq!(
        jacobian_laplacian(&Multigraph::banana(3))
            .unwrap()
            .exponent(),
        BigInt::from(3)
    );
    println!("criterion 02 (banana groups Z/m, all four routes, m = 2..8): PASS");
}

#[test]
fn criterion_03_definition_equivalence() {
    let family = comparison_family();
    let mut mismatches = Vec::new();
    for g in &family {
        let report = check_definition_equivalence(g, GROUP_CAP).unwrap();
        // Every group order in this family is below the cap, so all four
        // routes must be present.
        assert_eq!(report.routes.len(), 4, "{g:?}");
        if !report.agree {
            mismatches.push((g.clone(), report));
        }
    }
    assert!(
        mismatches.is_empty(),
        "route disagreement on {} graphs: {mismatches:?}",
        mismatches.len()
    );
    println!(
        "criterion 03 (definition equivalence over {} connected multigraphs <= (5,7)): PASS",
        family.len()
    );
}

#[test]
fn criterion_04_order_equals_tree_count() {
    let family = comparison_family();
    for g in &family {
        let trees = g.spanning_tree_count().unwrap();
        assert_eq!(
            trees,
            BigInt::from(brute_force_spanning_trees(g)),
            "matrix-tree count vs enumeration on {g:?}"
        );
        for jac in four_routes(g) {
            assert_eq!(jac.order(), trees, "group order vs tree count on {g:?}");
        }
    }
    println!(
        "criterion 04 (group order = tree count = brute-force enumeration, {} graphs): PASS",
        family.len()
    );
}

#[test]
fn criterion_05_reduced_divisor_uniqueness() {
    let family = comparison_family();
    for g in &family {
        let trees = g.spanning_tree_count().unwrap();
        for q in 0..g.vertex_count() {
            let count = degree_zero_reduced_divisors(g, q).unwrap().len();
            assert_eq!(
                BigInt::from(count),
                trees,
                "reduced-divisor count at base {q} on {g:?}"
            );
        }
    }
    println!(
        "criterion 05 (q-reduced divisor count = tree count for every base, {} graphs): PASS",
        family.len()
    );
}

#[test]
fn criterion_06_exponent_lower_bound_sweep() {
    let sweep = lower_bound_sweep(&bounds(5, 7), &Caps::default()).unwrap();
    println!(
        "criterion 06: checked {} graphs; {} violations, of which {} biconnected",
        sweep.checked,
        sweep.violations.len(),
        sweep.biconnected_violations()
    );
    // The bound does hold on every biconnected graph in the family.
    assert_eq!(sweep.biconnected_violations(), 0);
    if sweep.violations.is_empty() {
        println!("criterion 06 (exponent >= max degree over all connected graphs): PASS");
    } else {
        println!("criterion 06 (exponent >= max degree over all connected graphs): FAIL");
    }
    let examples: Vec<String> = sweep
        .violations
        .iter()
        .take(5)
        .map(|v| {
            format!(
                "n={} edges={:?} max_degree={} exponent={} biconnected={}",
                v.graph.vertex_count(),
                v.graph.edges(),
                v.max_degree,
                v.exponent,
                v.biconnected
            )
        })
        .collect();
    assert!(
        sweep.violations.is_empty(),
        "exponent >= max degree fails on {} of {} connected graphs; every violating \
         graph has a cut vertex and the biconnected sub-family has zero violations. \
         The inequality is only provable when the graph stays connected after \
         deleting the max-degree vertex; the smallest counterexample is the \
         three-vertex path (trivial group, max degree 2). First violations: {:#?}",
        sweep.violations.len(),
        sweep.checked,
        examples
    );
}

#[test]
fn criterion_07_exponent2_graph_classification() {
    let result = classify_biconnected_graphs(2, &bounds(6, 8), &Caps::default()).unwrap();
    assert!(
        result.matches,
        "found {:?}, expected {:?}",
        result.found, result.expected
    );
    assert_eq!(result.found.len(), 3);
    println!(
        "criterion 07 (exponent <= 2 biconnected graphs at (6,8) = {{one vertex, edge, doubled edge}}): PASS"
    );
}

#[test]
fn criterion_08_exponent3_graph_classification() {
    let result = classify_biconnected_graphs(3, &bounds(6, 8), &Caps::default()).unwrap();
    assert!(
        result.matches,
        "found {:?}, expected {:?}",
        result.found, result.expected
    );
    assert_eq!(result.found.len(), 5);
    println!(
        "criterion 08 (exponent <= 3 adds exactly the triangle and the three-edge banana): PASS"
    );
}

#[test]
fn criterion_09_doubled_tree_characterization() {
    let report = verify_doubled_tree_characterization(&bounds(6, 8), &Caps::default()).unwrap();
    assert!(
        report.passed(),
        "forward failures {:?}, converse failures {:?}",
        report.forward_failures,
        report.converse_failures
    );
    println!(
        "criterion 09 (exponent <= 2 iff doubled tree, both directions over {} graphs): PASS",
        report.checked
    );
}

#[test]
fn criterion_10_matroid_exponent2_classification() {
    let result =
        classify_regular_matroids_exp2(&SearchBounds::default(), &Caps::default()).unwrap();
    assert!(result.matches);
    assert!(!result.survivors.is_empty());
    for s in &result.survivors {
        assert!(s.element_count <= 2, "{:?}", s.rep);
        assert!(
            s.structure.applicable && s.structure.passed(),
            "{:?}",
            s.structure
        );
    }
    println!(
        "criterion 10 (matroid exponent <= 2 over {} TU candidates, rank <= 3, <= 5 elements; \
         {} survivors, all with <= 2 elements and valid projection structure): PASS",
        result.candidates_checked,
        result.survivors.len()
    );
}

#[test]
fn criterion_11_projection_identities() {
    let mut reps: Vec<IntMatrix> = Vec::new();
    for g in enumerate_connected_multigraphs(&bounds(4, 6), &Caps::default()).unwrap() {
        let o = Orientation::default_for(&g);
        reps.push(g.incidence_matrix(&o).unwrap());
    }
    for m in 2..=8usize {
        let g = Multigraph::banana(m);
        reps.push(g.incidence_matrix(&Orientation::default_for(&g)).unwrap());
    }
    reps.push(IntMatrix::from_i64_rows(vec![vec![1, 1]]));
    reps.push(IntMatrix::from_i64_rows(vec![vec![1, 0, 1], vec![0, 1, 1]]));

    let one = BigRational::one();
    let mut checked = 0;
    for rep in &reps {
        if rep.cols() == 0 {
            continue;
        }
        let dec = projection_and_dual(rep);
        let p = &dec.projection;
        assert_eq!(p.mul(p), p.clone(), "idempotence");
        assert!(p.is_symmetric(), "symmetry");
        let dt = rep.to_rational().transpose();
        assert_eq!(p.mul(&dt), dt, "identity on the cut space");
        assert!(p.mul(dec.cycle_basis.basis()).is_zero(), "zero on cycles");
        for i in 0..p.rows() {
            for j in 0..p.cols() {
                assert!(p[(i, j)].abs() <= one, "entry bound");
            }
        }
        checked += 1;
    }
    println!(
        "criterion 11 (P^2 = P, P^t = P, P D^t = D^t, P z = 0, entries in [-1,1] on {checked} inputs): PASS"
    );
}

#[test]
fn criterion_12_orientation_and_wedge_invariance() {
    let family = enumerate_connected_multigraphs(&bounds(4, 7), &Caps::default()).unwrap();

    // Re-orientation leaves all routes unchanged.
    for g in &family {
        let base = jacobian_laplacian(g).unwrap();
        let mut orientations = vec![Orientation::default_for(g)];
        for e in 0..g.edge_count() {
            let mut o = Orientation::default_for(g);
            o.reverse_edge(e);
            orientations.push(o);
        }
        let mut all = Orientation::default_for(g);
        for e in 0..g.edge_count() {
            all.reverse_edge(e);
        }
        orientations.push(all);
        for o in &orientations {
            assert_eq!(jacobian_edge_lattice(g, o).unwrap(), base, "{g:?}");
            assert_eq!(
                jacobian_dual_cut(&g.incidence_matrix(o).unwrap()).unwrap(),
                base,
                "{g:?}"
            );
        }
    }

    // Wedge sums split as direct sums, for every ordered pair.
    let jacobians: Vec<AbelianGroup> = family
        .iter()
        .map(|g| jacobian_laplacian(g).unwrap())
        .collect();
    let mut pairs = 0;
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate() {
            let w = a.wedge_sum(0, b, 0).unwrap();
            let expected = jacobians[i].direct_sum(&jacobians[j]);
            assert_eq!(
                jacobian_laplacian(&w).unwrap(),
                expected,
                "{a:?} wedge {b:?}"
            );
            pairs += 1;
        }
    }
    println!(
        "criterion 12 (orientation invariance over {} graphs; wedge identity over {pairs} pairs): PASS",
        family.len()
    );
}

#[test]
fn criterion_13_exponent3_projection_diagnostics() {
    for g in [Multigraph::cycle(3), Multigraph::banana(3)] {
        let d = g.incidence_matrix(&Orientation::default_for(&g)).unwrap();
        let rep = RegularMatroidRep::new_unverified(d).unwrap();
        let report = exponent3_entry_diagnostics(&rep).unwrap();
        assert!(report.applicable, "{g:?}");
        assert_eq!(report.conditions.len(), 4);
        assert!(report.passed(), "{g:?}: {report:?}");
    }
    // Sanity: the cycle basis used above really has the advertised shape.
    let g = Multigraph::cycle(3);
    let o = Orientation::default_for(&g);
    assert_eq!(cycle_lattice_basis(&g, &o).unwrap().rank(), 1);
    println!(
        "criterion 13 (all four exponent-3 projection conditions on the triangle and banana): PASS"
    );
}

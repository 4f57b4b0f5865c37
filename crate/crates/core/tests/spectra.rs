mod common;

use common::*;
use pseudoramsey::atlas::*;
use pseudoramsey::spectra::*;
use pseudoramsey::Graph;

fn atlas_graphs() -> Vec<Graph> {
    let mut out = vec![petersen(), cycle(9).unwrap(), complete(7).unwrap(), path(6).unwrap()];
    for q in [5u64, 9, 13, 17, 25, 29] {
        out.push(paley(q).unwrap());
    }
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        out.push(er_polarity(q).unwrap());
    }
    for q in [2u64, 3, 4] {
        out.push(pg_incidence(q).unwrap().to_graph());
        out.push(gq_incidence(q).unwrap().to_graph());
    }
    out.push(dkq(4, 3).unwrap().to_graph());
    out.push(dkq(5, 2).unwrap().to_graph());
    out
}

fn assert_close(a: &[f64], b: &[f64], tol: f64, what: &str) {
    assert_eq!(a.len(), b.len(), "{what}");
    for (x, y) in a.iter().zip(b) {
        assert!((x - y).abs() <= tol, "{what}: {x} vs {y}");
    }
}

#[test]
fn eigenvalues_agree_with_nalgebra() {
    for g in atlas_graphs() {
        assert_close(&spectrum(&g).unwrap(), &nalgebra_spectrum(&g), 1e-8, g.provenance());
    }
    for seed in 0..20u64 {
        let g = random_graph(10 + 3 * seed as usize, 10 + 4 * seed, seed);
        assert_close(&spectrum(&g).unwrap(), &nalgebra_spectrum(&g), 1e-8, g.provenance());
    }
}

#[test]
fn raw_eigensolver_handles_weighted_matrices() {
    let n = 7;
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let x = ((i * 31 + j * 17) % 11) as f64 - 5.0;
            a[i * n + j] = x;
            a[j * n + i] = x;
        }
    }
    let ours = symmetric_eigenvalues(a.clone(), n);
    let m = nalgebra::DMatrix::from_row_slice(n, n, &a);
    let mut theirs: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    theirs.sort_by(|x, y| y.total_cmp(x));
    assert_close(&ours, &theirs, 1e-9, "weighted");
}

#[test]
fn moment_identities_hold() {
    for g in atlas_graphs() {
        let eigs = spectrum(&g).unwrap();
        let m = moment_check(&g, &eigs);
        assert!(m.ok, "{}: {m:?}", g.provenance());
        assert_eq!(m.trace_cube, 6 * triangles(&g), "{}", g.provenance());
    }
}

#[test]
fn regular_connected_graphs_have_top_eigenvalue_d() {
    for g in atlas_graphs() {
        if let Some(d) = g.regular_degree() {
            let top = spectrum(&g).unwrap()[0];
            assert!((top - d as f64).abs() <= 1e-6 * (d as f64).max(1.0), "{}", g.provenance());
        }
    }
}

#[test]
fn polarity_graph_eigenvalues_obey_the_perturbation_bound() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13] {
        let eigs = spectrum(&er_polarity(q).unwrap()).unwrap();
        let root = (q as f64).sqrt();
        // absolute points have degree q, so the top eigenvalue sits in [q, q+1]
        assert!(eigs[0] >= q as f64 && eigs[0] <= (q + 1) as f64);
        assert!(eigs[1..].iter().all(|x| x.abs() <= root + 1.0 + 1e-9), "q={q}");
        if q >= 3 {
            assert!((eigs[1] - root).abs() < 1e-6, "q={q}: {}", eigs[1]);
        }
    }
    // ER_2 is too small for √2 to occur among its eigenvalues
    let eigs = spectrum(&er_polarity(2).unwrap()).unwrap();
    assert!(eigs.iter().all(|x| (x - 2f64.sqrt()).abs() > 0.1));
}

#[test]
fn polarity_graph_with_absolute_loops_has_exact_spectrum() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let g = er_polarity(q).unwrap();
        let n = g.n();
        let mut a = vec![0.0; n * n];
        for (u, v) in g.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        for v in (0..n).filter(|&v| g.degree(v) == q as usize) {
            a[v * n + v] = 1.0;
        }
        let eigs = symmetric_eigenvalues(a, n);
        let root = (q as f64).sqrt();
        assert!((eigs[0] - (q + 1) as f64).abs() < 1e-9);
        assert!(eigs[1..].iter().all(|x| (x.abs() - root).abs() < 1e-9), "q={q}");
    }
}

#[test]
fn singular_values_agree_with_nalgebra() {
    for b in [gq_incidence(2).unwrap(), pg_incidence(3).unwrap(), dkq(4, 3).unwrap()] {
        let ours = singular_values(&b).unwrap();
        let m = nalgebra::DMatrix::from_row_slice(b.m(), b.n(), &b.biadjacency_dense());
        let mut theirs: Vec<f64> = m.singular_values().iter().copied().collect();
        theirs.sort_by(|x, y| y.total_cmp(x));
        theirs.resize(ours.len(), 0.0);
        // square roots of near-zero Gram eigenvalues lose precision
        assert_close(&ours, &theirs, 1e-6, b.provenance());
    }
}

#[test]
fn paley_lambda_and_ssv_ratios() {
    let r = ndl_report(&paley(13).unwrap(), &[3, 4]).unwrap();
    assert!((r.lambda - (1.0 + 13f64.sqrt()) / 2.0).abs() < 1e-9);
    assert!(r.is_regular && r.d == 6 && !r.bipartite);
    assert_eq!(r.degree_multiset.into_iter().collect::<Vec<_>>(), vec![(6, 13)]);
    let expected3 = r.lambda * 13.0 / 36.0;
    assert!((r.ssv_ratios[0].ratio.unwrap() - expected3).abs() < 1e-12);
}

#[test]
fn trace_inequality_status() {
    for g in atlas_graphs() {
        let r = ndl_report(&g, &[]).unwrap();
        let tc = trace_cube_check(&g, &r);
        assert_eq!(tc.trace_cube, 6 * triangles(&g));
        if r.is_regular {
            assert_eq!(tc.status, TraceStatus::Pass, "{}", g.provenance());
        } else {
            assert_eq!(tc.status, TraceStatus::NotApplicable);
        }
    }
}

use proptest::prelude::*;
use pseudoramsey::atlas::*;
use pseudoramsey::engine::*;
use pseudoramsey::graph::{independence_number, is_independent, AlphaMode};
use pseudoramsey::{BipartiteGraph, Graph};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde_json::Value;

fn k3() -> Graph {
    complete(3).unwrap()
}

/// Strips leaves until none remain and returns the core.
fn strip_leaves(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut alive = vec![true; g.n()];
    let mut stripped = Vec::new();
    loop {
        let leaves: Vec<usize> = (0..g.n())
            .filter(|&v| alive[v] && g.neighbors(v).iter().filter(|&&u| alive[u]).count() <= 1)
            .collect();
        if leaves.is_empty() {
            break;
        }
        for v in leaves {
            alive[v] = false;
            stripped.push(v);
        }
    }
    ((0..g.n()).filter(|&v| alive[v]).collect(), stripped)
}

fn is_single_cycle(g: &Graph, core: &[usize]) -> bool {
    let h = g.induced_subgraph(core).unwrap();
    h.n() >= 3 && h.regular_degree() == Some(2) && {
        let mut seen = vec![false; h.n()];
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            if !std::mem::replace(&mut seen[v], true) {
                stack.extend(h.neighbors(v));
            }
        }
        seen.into_iter().all(|x| x)
    }
}

#[test]
fn lf_of_triangle_is_hexagon_and_square_with_pendant() {
    let fam = lf_family(&k3()).unwrap();
    assert_eq!(fam.members.len(), 2);
    let mut shapes: Vec<(usize, usize, Vec<usize>)> = fam
        .members
        .iter()
        .map(|m| {
            let mut deg: Vec<usize> = m.graph.degrees();
            deg.sort_unstable();
            (m.graph.n(), m.graph.edge_count(), deg)
        })
        .collect();
    shapes.sort();
    assert_eq!(shapes, vec![(5, 5, vec![1, 2, 2, 2, 3]), (6, 6, vec![2; 6])]);
    for m in &fam.members {
        let (core, stripped) = strip_leaves(&m.graph);
        assert!(is_single_cycle(&m.graph, &core));
        assert_eq!(core.len() + stripped.len(), m.graph.n());
        let cycle_len = core.len();
        assert!(cycle_len == 4 || cycle_len == 6);
    }
}

#[test]
fn lf_of_pentagon_members_are_cycles_with_pendants() {
    let fam = lf_family(&cycle(5).unwrap()).unwrap();
    assert_eq!((fam.partitions, fam.members.len()), (26, 6));
    let mut lengths = std::collections::BTreeSet::new();
    for m in &fam.members {
        let g = &m.graph;
        let (core, _) = strip_leaves(g);
        assert!(is_single_cycle(g, &core), "{:?}", m.partition);
        lengths.insert(core.len());
        // members are bipartite, so the cycle is even; splitting off a
        // single edge next to a four-edge path leaves a 4-cycle
        assert!(core.len() % 2 == 0 && (4..=10).contains(&core.len()));
        // every vertex off the cycle is a leaf hanging on it
        for v in (0..g.n()).filter(|v| !core.contains(v)) {
            assert_eq!(g.degree(v), 1);
            assert!(core.contains(&g.neighbors(v)[0]));
        }
    }
    assert_eq!(lengths.into_iter().collect::<Vec<_>>(), vec![4, 6, 8, 10]);
}

#[test]
fn members_have_the_apex_edge_structure() {
    for f in [k3(), cycle(5).unwrap(), path(4).unwrap(), petersen().induced_subgraph(&[0, 1, 2, 3, 4, 5]).unwrap()] {
        let fam = lf_family(&f).unwrap();
        let n = f.n();
        for m in &fam.members {
            assert_eq!(m.graph.n(), n + m.partition.len());
            let mut expected = Vec::new();
            for (i, part) in m.partition.iter().enumerate() {
                let mut vs: Vec<usize> = part.iter().flat_map(|&(a, b)| [a, b]).collect();
                vs.sort_unstable();
                vs.dedup();
                // each part is a simple path: |V(P)| = |E(P)| + 1
                assert_eq!(vs.len(), part.len() + 1);
                expected.extend(vs.into_iter().map(|y| (y, n + i)));
            }
            expected.sort_unstable();
            assert_eq!(m.graph.edges().collect::<Vec<_>>(), expected);
            assert!(m.partition.iter().flatten().all(|&(a, b)| f.has_edge(a, b)));
            assert_eq!(m.partition.iter().map(Vec::len).sum::<usize>(), f.edge_count());
        }
        let mut canon: Vec<_> = fam.members.iter().map(|m| m.canonical.clone()).collect();
        canon.dedup();
        assert_eq!(canon.len(), fam.members.len());
    }
}

#[test]
fn build_fp_rejects_bad_partitions() {
    let f = k3();
    assert!(build_fp(&f, &[vec![(0, 1)], vec![(1, 2)]]).is_err());
    assert!(build_fp(&f, &[vec![(0, 1), (1, 2)], vec![(1, 2), (0, 2)]]).is_err());
    assert!(build_fp(&f, &[vec![(0, 1)], vec![(1, 2)], vec![(0, 3)]]).is_err());
    assert!(build_fp(&f, &[vec![(0, 1)], vec![(1, 2)], vec![(0, 2)]]).is_ok());
}

fn transfer(host: &BipartiteGraph, f: &Graph, seeds: std::ops::Range<u64>) {
    let fam = lf_family(f).unwrap();
    assert!(is_lf_free(&host.to_graph(), &fam).unwrap().is_none(), "{}", host.provenance());
    for seed in seeds {
        let (h, _) = block_construct(host, seed);
        assert!(pseudoramsey::graph::subgraph_embed(f, &h).unwrap().is_none(), "{} seed {seed}", host.provenance());
    }
}

#[test]
fn freeness_transfers_through_the_block_construction() {
    transfer(&gq_incidence(2).unwrap(), &k3(), 0..20);
    transfer(&gq_incidence(3).unwrap(), &k3(), 0..20);
    transfer(&dkq(5, 2).unwrap(), &cycle(5).unwrap(), 0..20);
}

#[test]
fn lf_violation_is_reported() {
    let fam = lf_family(&k3()).unwrap();
    let host = pg_incidence(2).unwrap().to_graph();
    let v = is_lf_free(&host, &fam).unwrap().expect("the Heawood graph contains a hexagon");
    let member = &fam.members[v.member].graph;
    assert!(member.edges().all(|(a, b)| host.has_edge(v.embedding[a], v.embedding[b])));
}

/// Every 2^(Σ|N(u)|) partition choice, with the overlay built by hand.
fn brute_force_law(g: &BipartiteGraph) -> Vec<u64> {
    let slots: Vec<(usize, usize)> = (0..g.m()).flat_map(|u| g.u_neighbors(u).iter().map(move |&v| (u, v))).collect();
    let total = slots.len();
    assert!(total <= 20);
    let n = g.n();
    let mut counts = vec![0u64; 1 << n];
    for choice in 0u64..1 << total {
        let mut adj = vec![0u32; n];
        for u in 0..g.m() {
            let mine: Vec<(usize, bool)> = slots
                .iter()
                .enumerate()
                .filter(|(_, s)| s.0 == u)
                .map(|(i, s)| (s.1, choice >> i & 1 == 1))
                .collect();
            for &(x, sx) in &mine {
                for &(y, sy) in &mine {
                    if sx != sy {
                        adj[x] |= 1 << y;
                    }
                }
            }
        }
        for (set, count) in counts.iter_mut().enumerate() {
            if (0..n).all(|v| set >> v & 1 == 0 || adj[v] & set as u32 == 0) {
                *count += 1;
            }
        }
    }
    counts
}

fn random_bipartite(m: usize, n: usize, max_slots: usize, seed: u64) -> BipartiteGraph {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..m {
        for v in 0..n {
            if edges.len() < max_slots && rng.next_u64() % 3 == 0 {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::new(m, n, edges, "custom()").unwrap()
}

#[test]
fn probability_law_matches_enumeration() {
    for seed in 0..12u64 {
        let (m, n) = (2 + (seed % 5) as usize, 3 + (seed % 6) as usize);
        let g = random_bipartite(m, n, 14, seed);
        let slots = g.edge_count() as u32;
        let counts = brute_force_law(&g);
        for (set, &count) in counts.iter().enumerate() {
            let members: Vec<usize> = (0..n).filter(|v| set >> v & 1 == 1).collect();
            let p = indep_probability(&g, &members).unwrap();
            // count / 2^slots == 2^-halvings, exactly
            assert_eq!(count << p.halvings, 1u64 << slots, "seed {seed}, set {members:?}");
            assert!(p.value() <= p.product_value());
        }
    }
}

#[test]
fn probability_law_matches_monte_carlo() {
    let g = gq_incidence(2).unwrap();
    let mut rng = Xoshiro256StarStar::seed_from_u64(2024);
    for _ in 0..3 {
        let mut set: Vec<usize> = Vec::new();
        while set.len() < 4 {
            let v = (rng.next_u64() % g.n() as u64) as usize;
            if !set.contains(&v) {
                set.push(v);
            }
        }
        let p = indep_probability(&g, &set).unwrap().value();
        let trials = 100_000u64;
        let hits = independence_frequency(&g, &set, 0..trials) as f64;
        let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
        assert!((hits - trials as f64 * p).abs() <= 3.0 * sigma.max(1e-9), "{set:?}: {hits} vs p={p}");
    }
}

#[test]
fn block_construction_is_deterministic() {
    let g = gq_incidence(3).unwrap();
    let (h1, p1) = block_construct(&g, 77);
    let (h2, p2) = block_construct(&g, 77);
    assert_eq!(h1, h2);
    assert_eq!(p1, p2);
    assert_eq!(h1.provenance(), "gq_incidence(q=3) |> block(seed=77)");
    let (h3, _) = block_construct(&g, 78);
    assert_ne!(h1.edges().collect::<Vec<_>>(), h3.edges().collect::<Vec<_>>());
    for (u, (a, b)) in p1.sides.iter().enumerate() {
        let mut all: Vec<usize> = a.iter().chain(b).copied().collect();
        all.sort_unstable();
        assert_eq!(all, g.u_neighbors(u));
    }
}

#[test]
fn sampling_postcondition_and_verification() {
    let g = er_polarity(9).unwrap();
    let c4: Forbidden = "C4".parse().unwrap();
    let lambda = pseudoramsey::spectra::lambda_of(&pseudoramsey::spectra::spectrum(&g).unwrap());
    for seed in 0..5u64 {
        let (h, cert) = sample_ramsey_graph(&g, &c4, 8, SampleOptions::default(), seed, DEFAULT_ALPHA_BUDGET).unwrap();
        assert!(independence_number(&h, AlphaMode::Exact, u64::MAX).unwrap().alpha <= 7);
        let s = cert.sampling.as_ref().unwrap();
        let expected = ((91f64).ln().powi(2) / (2.0 * std::f64::consts::E.powi(2) * lambda)).min(1.0);
        assert!((s.p - expected).abs() <= 1e-12);
        assert_eq!(s.sampled, sample_vertices(91, s.p, seed).len());
        assert_eq!(h.n(), s.sampled - s.removed.len());
        let report = verify_certificate(&cert, DEFAULT_ALPHA_BUDGET).unwrap();
        assert!(report.passed, "{:?}", report.failures().collect::<Vec<_>>());
    }
}

#[test]
fn sampling_with_overrides() {
    let g = er_polarity(7).unwrap();
    let c4: Forbidden = "C4".parse().unwrap();
    let (_, cert) =
        sample_ramsey_graph(&g, &c4, 6, SampleOptions { p: Some(0.5), lambda: None }, 3, DEFAULT_ALPHA_BUDGET).unwrap();
    assert_eq!(cert.sampling.as_ref().unwrap().p_source, ParamSource::Override);
    assert!(verify_certificate(&cert, DEFAULT_ALPHA_BUDGET).unwrap().passed);
    let (_, cert) =
        sample_ramsey_graph(&g, &c4, 6, SampleOptions { p: None, lambda: Some(2.5) }, 3, DEFAULT_ALPHA_BUDGET).unwrap();
    assert_eq!(cert.sampling.as_ref().unwrap().lambda_source, Some(ParamSource::Override));
    assert!(verify_certificate(&cert, DEFAULT_ALPHA_BUDGET).unwrap().passed);
    assert!(sample_ramsey_graph(&g, &"K3".parse().unwrap(), 6, SampleOptions::default(), 0, 1000).is_err());
}

#[test]
fn certify_rejects_graphs_with_the_pattern_or_small_t() {
    let p13 = paley(13).unwrap();
    assert!(certify(&p13, &"K3".parse().unwrap(), None, DEFAULT_ALPHA_BUDGET).is_err());
    assert!(certify(&p13, &"K4".parse().unwrap(), Some(3), DEFAULT_ALPHA_BUDGET).is_err());
    let c = certify(&p13, &"K4".parse().unwrap(), Some(6), DEFAULT_ALPHA_BUDGET).unwrap();
    assert_eq!(c.claim, "r(4, 6) > 13");
    assert_eq!(c.t_source, TSource::Explicit);
}

/// Every single-leaf edit of a JSON document.
fn mutations(v: &Value) -> Vec<(String, Value)> {
    fn walk(v: &Value, path: String, root: &Value, out: &mut Vec<(String, Value)>) {
        let edit = |f: &dyn Fn(&mut Value)| {
            let mut copy = root.clone();
            f(copy.pointer_mut(&path).unwrap());
            copy
        };
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    walk(child, format!("{path}/{k}"), root, out);
                }
            }
            Value::Array(items) => {
                for (i, child) in items.iter().enumerate() {
                    walk(child, format!("{path}/{i}"), root, out);
                }
                out.push((format!("{path} (push)"), edit(&|x| x.as_array_mut().unwrap().push(Value::from(0)))));
                if !items.is_empty() {
                    out.push((format!("{path} (pop)"), edit(&|x| drop(x.as_array_mut().unwrap().pop()))));
                }
            }
            Value::Number(n) => {
                let bumped = match n.as_u64() {
                    Some(u) => Value::from(u + 1),
                    None => Value::from(n.as_f64().unwrap() * (1.0 + 1e-9) + 1e-12),
                };
                out.push((path.clone(), edit(&|x| *x = bumped.clone())));
            }
            Value::String(s) => out.push((path.clone(), edit(&|x| *x = Value::from(format!("{s}x"))))),
            Value::Bool(b) => out.push((path.clone(), edit(&|x| *x = Value::from(!b)))),
            Value::Null => out.push((path.clone(), edit(&|x| *x = Value::from(1)))),
        }
    }
    let mut out = Vec::new();
    walk(v, String::new(), v, &mut out);
    out
}

fn assert_every_edit_is_caught(cert: &RamseyCertificate) {
    let original = serde_json::to_value(cert).unwrap();
    let edits = mutations(&original);
    assert!(edits.len() > 20);
    for (path, edited) in edits {
        let rejected = match serde_json::from_value::<RamseyCertificate>(edited) {
            Err(_) => true,
            Ok(c) => match verify_certificate(&c, DEFAULT_ALPHA_BUDGET) {
                Err(_) => true,
                Ok(r) => !r.passed,
            },
        };
        assert!(rejected, "edit at {path} went unnoticed");
    }
}

#[test]
fn tampering_any_field_fails_verification() {
    let c = certify(&paley(13).unwrap(), &"K4".parse().unwrap(), None, DEFAULT_ALPHA_BUDGET).unwrap();
    assert_eq!(c.claim, "r(4, 4) > 13");
    assert!(verify_certificate(&c, DEFAULT_ALPHA_BUDGET).unwrap().passed);
    assert_every_edit_is_caught(&c);

    let (_, sampled) =
        sample_ramsey_graph(&er_polarity(7).unwrap(), &"C4".parse().unwrap(), 7, SampleOptions::default(), 5, DEFAULT_ALPHA_BUDGET)
            .unwrap();
    assert!(verify_certificate(&sampled, DEFAULT_ALPHA_BUDGET).unwrap().passed);
    assert_every_edit_is_caught(&sampled);
}

#[test]
fn forged_alpha_is_caught_by_recomputation() {
    // a consistent record whose stored alpha understates the truth
    let g = er_polarity(5).unwrap();
    let mut c = certify(&g, &"C4".parse().unwrap(), None, DEFAULT_ALPHA_BUDGET).unwrap();
    c.alpha.value -= 1;
    c.alpha.witness.pop();
    c.t -= 1;
    c.claim = format!("r(C4, {}) > {}", c.t, c.n);
    c.theorem_t.as_mut().map(|r| r.satisfied = c.t as u64 >= r.value);
    let report = verify_certificate(&c, DEFAULT_ALPHA_BUDGET).unwrap();
    assert!(!report.passed);
    assert!(report.failures().any(|f| f.name == "alpha.value"), "{:?}", report.checks);
}

#[test]
fn certificates_are_deterministic() {
    let g = er_polarity(8).unwrap();
    let c4: Forbidden = "C4".parse().unwrap();
    let a = sample_ramsey_graph(&g, &c4, 9, SampleOptions::default(), 11, DEFAULT_ALPHA_BUDGET).unwrap();
    let b = sample_ramsey_graph(&g, &c4, 9, SampleOptions::default(), 11, DEFAULT_ALPHA_BUDGET).unwrap();
    assert_eq!(a.0, b.0);
    assert_eq!(serde_json::to_string(&a.1).unwrap(), serde_json::to_string(&b.1).unwrap());
    let x = certify(&g, &c4, None, DEFAULT_ALPHA_BUDGET).unwrap();
    let y = certify(&g, &c4, None, DEFAULT_ALPHA_BUDGET).unwrap();
    assert_eq!(x, y);
}

#[test]
fn rebuilt_block_graphs_match() {
    let g = gq_incidence(2).unwrap();
    let (h, _) = block_construct(&g, 5);
    let rebuilt = rebuild_graph(h.provenance()).unwrap();
    assert_eq!(rebuilt.edges().collect::<Vec<_>>(), h.edges().collect::<Vec<_>>());
}

/// ln of the intermediate counting bound by direct summation of logarithms.
fn ln_intermediate_oracle(n: u64, d: f64, lambda: f64, t: u64, ell: u64) -> f64 {
    let ln_fact = |k: u64| (1..=k).map(|i| (i as f64).ln()).sum::<f64>();
    let ln_choose = ln_fact(t) - ln_fact(ell) - ln_fact(t - ell);
    -ln_fact(t) + ln_choose + ell as f64 * (n as f64).ln() + (t - ell) as f64 * (2.0 * lambda * n as f64 / d).ln()
}

proptest! {
    #[test]
    fn counting_bound_matches_log_sum(n in 2u64..100_000, d in 1.0f64..500.0, lambda in 0.51f64..50.0, t in 1u64..3000) {
        let r = alon_rodl_bound(n, d, lambda, t).unwrap();
        let expected_ell = ((t as f64 / (n as f64).ln()).ceil() as u64).clamp(1, t);
        prop_assert_eq!(r.ell, expected_ell);
        let oracle = ln_intermediate_oracle(n, d, lambda, t, r.ell);
        prop_assert!((r.ln_intermediate - oracle).abs() <= 1e-9 * oracle.abs().max(1.0));
        let ln_n = (n as f64).ln();
        let fin = t as f64 * (2.0 * std::f64::consts::E.powi(2) * lambda).ln() - 2.0 * t as f64 * ln_n.ln();
        prop_assert!((r.ln_final - fin).abs() <= 1e-9 * fin.abs().max(1.0));
        prop_assert_eq!(r.flags.t_above_threshold, t as f64 >= 2.0 * n as f64 * ln_n * ln_n / d);
    }

    #[test]
    fn sampling_probability_is_clamped(n in 2usize..1_000_000, lambda in 0.01f64..1000.0) {
        let p = sampling_probability(n, lambda);
        prop_assert!((0.0..=1.0).contains(&p));
        let raw = (n as f64).ln().powi(2) / (2.0 * std::f64::consts::E.powi(2) * lambda);
        prop_assert!((p - raw.min(1.0)).abs() <= 1e-15 * raw.max(1.0));
    }
}

#[test]
fn counting_bound_rejects_bad_inputs() {
    assert!(alon_rodl_bound(1, 2.0, 1.0, 3).is_err());
    assert!(alon_rodl_bound(10, 0.5, 1.0, 3).is_err());
    assert!(alon_rodl_bound(10, 2.0, 0.5, 3).is_err());
    assert!(alon_rodl_bound(10, 2.0, 1.0, 0).is_err());
}

#[test]
fn feasibility_uses_exact_integers() {
    let r = block_feasibility(10, 8, 5, 4, FeasibilityMode::Theorem5).unwrap();
    // 5·4 − 10 = 10 > 4·3 = 12 fails
    assert_eq!(r.integer_part, 10);
    assert!(!r.holds && r.claim.is_none());
    let r = block_feasibility(10, 8, 6, 4, FeasibilityMode::Theorem5).unwrap();
    assert_eq!(r.integer_part, 14);
    assert!(r.holds);
    assert_eq!(r.claim.as_deref(), Some("r(F, 4) > 8"));
    let (m, n, d) = hexagon_parameters(2).unwrap();
    assert_eq!((m, n, d), (3 * 273, 9 * 273, 3));
    assert!(hexagon_parameters(1 << 20).is_err());
    let h = block_feasibility(m, n, 2, 1000, FeasibilityMode::Hexagon).unwrap();
    assert_eq!(h.integer_part, m as i128 - 3000);
    assert_eq!(h.log_base, LogBase::Two);
}

#[test]
fn sampled_sets_follow_the_coin_flips() {
    let s = sample_vertices(1000, 0.3, 9);
    assert!(s.windows(2).all(|w| w[0] < w[1]));
    assert!((250..350).contains(&s.len()));
    assert_eq!(sample_vertices(50, 1.0, 1).len(), 50);
    assert!(sample_vertices(50, 0.0, 1).is_empty());
    assert_eq!(s, sample_vertices(1000, 0.3, 9));
}

#[test]
fn independence_check_of_witnesses() {
    let g = er_polarity(7).unwrap();
    let c = certify(&g, &"C4".parse().unwrap(), None, DEFAULT_ALPHA_BUDGET).unwrap();
    assert!(is_independent(&g, &c.alpha.witness));
    assert_eq!(c.alpha.value, brute_alpha_small(&g));
}

/// Include/exclude scan, fast enough for ER_7.
fn brute_alpha_small(g: &Graph) -> usize {
    fn go(g: &Graph, cand: Vec<usize>, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some((&v, rest)) = cand.split_first() else {
            *best = size;
            return;
        };
        go(g, rest.iter().copied().filter(|&u| !g.has_edge(u, v)).collect(), size + 1, best);
        go(g, rest.to_vec(), size, best);
    }
    let mut best = 0;
    go(g, (0..g.n()).collect(), 0, &mut best);
    best
}

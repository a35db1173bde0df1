//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measurements. Run with `cargo test --test acceptance`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tildeh_core::bitset::BitSet;
use tildeh_core::classify::{
    canonical_class_mask, classify, enumerate_strongly_acyclic, is_strongly_acyclic, PatternTag,
};
use tildeh_core::construct::{
    disjoint_bicliques, lll_search, tight_2k2, tight_h4, tight_p4, verify_coloring, LllParams,
};
use tildeh_core::extract::{self, Dichotomy};
use tildeh_core::graph::{find_induced_copy, BipartiteGraph};
use tildeh_core::harness::{
    naive_verify_certificate, random_pattern_free, verify_certificate, verify_embedding,
    GenMethod, GenSpec,
};
use tildeh_core::patterns;
use tildeh_core::solve::{forb_min, tilde_alpha, tilde_h, tilde_omega, CertKind, Certificate};
use tildeh_core::tree::{tree_split, verify_tree_split, RootedTree};

fn class_set(graphs: &[BipartiteGraph]) -> std::collections::BTreeSet<u64> {
    graphs.iter().map(canonical_class_mask).collect()
}

#[test]
fn criterion_1_strongly_acyclic_enumeration() {
    let start = std::time::Instant::now();
    let expect_33 = class_set(&[patterns::p5_prime(), patterns::p6()]);
    let expect_34 = class_set(&[patterns::h_3_4_1(), patterns::p7()]);
    assert_eq!(
        class_set(&enumerate_strongly_acyclic(3, 3).unwrap()),
        expect_33,
        "(3,3) classes"
    );
    assert_eq!(
        class_set(&enumerate_strongly_acyclic(3, 4).unwrap()),
        expect_34,
        "(3,4) classes"
    );
    for (k, l) in [(3, 5), (4, 4), (4, 5)] {
        assert!(
            enumerate_strongly_acyclic(k, l).unwrap().is_empty(),
            "({k},{l}) must be empty"
        );
    }
    println!(
        "criterion 1 (strongly acyclic enumeration): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_2_tight_constructions() {
    let start = std::time::Instant::now();
    for (n, want) in [(6, 2), (9, 3)] {
        let g = tight_p4(n).unwrap();
        assert!(find_induced_copy(&g, &patterns::p4()).unwrap().is_none());
        assert_eq!(tilde_h(&g).0, want, "tight_p4({n})");
    }
    for n in 3..=8usize {
        let g = tight_2k2(n).unwrap();
        assert!(find_induced_copy(&g, &patterns::two_k2()).unwrap().is_none());
        assert_eq!(tilde_h(&g).0, n.div_ceil(2), "tight_2k2({n})");
    }
    for (n, want) in [(5, 2), (10, 4)] {
        let g = tight_h4(n).unwrap();
        assert!(find_induced_copy(&g, &patterns::h4()).unwrap().is_none());
        assert_eq!(tilde_h(&g).0, want, "tight_h4({n})");
    }
    println!(
        "criterion 2 (tight construction values): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_3_forb_min_oracle() {
    let start = std::time::Instant::now();
    // Values bracketed by the lower-bound formula and the tight construction.
    let (v, g) = forb_min(3, &patterns::two_k2()).unwrap();
    assert_eq!(v, 2);
    assert!(find_induced_copy(&g, &patterns::two_k2()).unwrap().is_none());
    assert!(extract::two_k2_guarantee(3) <= v && v <= tilde_h(&tight_2k2(3).unwrap()).0);

    let (v, g) = forb_min(3, &patterns::p4()).unwrap();
    assert_eq!(v, 1);
    assert!(find_induced_copy(&g, &patterns::p4()).unwrap().is_none());
    assert!(extract::p4_guarantee(3) <= v && v <= tilde_h(&tight_p4(3).unwrap()).0);

    let (v, g) = forb_min(4, &patterns::two_k2()).unwrap();
    assert_eq!(v, 2);
    assert!(find_induced_copy(&g, &patterns::two_k2()).unwrap().is_none());
    assert!(extract::two_k2_guarantee(4) <= v && v <= tilde_h(&tight_2k2(4).unwrap()).0);

    println!(
        "criterion 3 (exact small-n minima): PASS in {:?}",
        start.elapsed()
    );
}

/// Structured pattern-free instances mixed into the generated pool.
fn structured_instances(family: &str, n: usize, seed: u64) -> Vec<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<BipartiteGraph> = vec![BipartiteGraph::empty(n, n), BipartiteGraph::complete(n, n)];
    match family {
        "two_k2" => {
            // Nested chains are exactly the free graphs.
            let mut sizes: Vec<usize> = (0..n).map(|_| rng.random_range(0..=n)).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            out.push(BipartiteGraph::from_edges(
                n,
                n,
                sizes
                    .iter()
                    .enumerate()
                    .flat_map(|(u, &d)| (0..d).map(move |v| (u, v))),
            ));
            out.push(tight_2k2(n).unwrap());
        }
        "p4" => {
            // A random partition into complete blocks.
            let mut tops: Vec<usize> = (0..n).collect();
            let mut bottoms: Vec<usize> = (0..n).collect();
            let mut edges = Vec::new();
            while !tops.is_empty() && !bottoms.is_empty() {
                let a = rng.random_range(1..=tops.len());
                let b = rng.random_range(1..=bottoms.len());
                let bt: Vec<usize> = tops.drain(..a).collect();
                let bb: Vec<usize> = bottoms.drain(..b).collect();
                for &u in &bt {
                    for &v in &bb {
                        edges.push((u, v));
                    }
                }
            }
            out.push(BipartiteGraph::from_edges(n, n, edges));
            if n % 3 == 0 {
                out.push(tight_p4(n).unwrap());
            }
        }
        "h4" => {
            // Sunflower with petals of size at most one.
            let core = rng.random_range(0..n);
            let edges = (0..n).flat_map(|u| {
                let petal = rng.random_range(core..n + 1);
                (0..core)
                    .chain((petal < n).then_some(petal))
                    .map(move |v| (u, v))
                    .collect::<Vec<_>>()
            });
            out.push(BipartiteGraph::from_edges(n, n, edges));
            if n % 5 == 0 {
                out.push(tight_h4(n).unwrap());
            }
        }
        "hs" | "ms" | "ms_star" => {
            // Disjoint complete blocks have no private leaves at all.
            let b = rng.random_range(1..=4usize);
            if n % b == 0 {
                out.push(disjoint_bicliques(b, n / b));
            }
            let mut sizes: Vec<usize> = (0..n).map(|_| rng.random_range(0..=n)).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            out.push(BipartiteGraph::from_edges(
                n,
                n,
                sizes
                    .iter()
                    .enumerate()
                    .flat_map(|(u, &d)| (0..d).map(move |v| (u, v))),
            ));
        }
        _ => {}
    }
    out
}

struct BoundCase {
    family: &'static str,
    pattern: BipartiteGraph,
    extract: Box<dyn Fn(&BipartiteGraph) -> Dichotomy>,
    /// Floor asserted when `Some`; validity is always asserted.
    floor: Box<dyn Fn(usize) -> Option<usize>>,
    n_range: (usize, usize),
    trials: usize,
}

#[test]
fn criterion_4_extractor_bound_suite() {
    let start = std::time::Instant::now();
    let cases: Vec<BoundCase> = vec![
        BoundCase {
            family: "two_k2",
            pattern: patterns::two_k2(),
            extract: Box::new(extract::extract_2k2free),
            floor: Box::new(|n| Some(extract::two_k2_guarantee(n))),
            n_range: (4, 40),
            trials: 500,
        },
        BoundCase {
            family: "p4",
            pattern: patterns::p4(),
            extract: Box::new(extract::extract_p4free),
            floor: Box::new(|n| Some(extract::p4_guarantee(n))),
            n_range: (3, 39),
            trials: 500,
        },
        BoundCase {
            family: "h4",
            pattern: patterns::h4(),
            extract: Box::new(extract::extract_h4free),
            floor: Box::new(|n| Some(extract::h4_guarantee(n))),
            n_range: (5, 40),
            trials: 500,
        },
    ];
    let mut cases = cases;
    for s in [1usize, 2, 3] {
        cases.push(BoundCase {
            family: "hs",
            pattern: patterns::h_family(s, s),
            extract: Box::new(move |g| extract::extract_hs(g, s, s)),
            floor: Box::new(move |n| Some(extract::hs_guarantee(n, s, s))),
            n_range: (4 * s, 60),
            trials: 167,
        });
    }
    for s in [1usize, 2] {
        cases.push(BoundCase {
            family: "ms",
            pattern: patterns::m_family(s, s),
            extract: Box::new(move |g| extract::extract_ms(g, s)),
            floor: Box::new(move |n| {
                extract::MS_N0[s]
                    .is_some_and(|n0| n >= n0)
                    .then(|| extract::ms_guarantee(n, s))
                    .or_else(|| (extract::ms_guarantee(n, s) == 1).then_some(1))
            }),
            n_range: (4, 48),
            trials: 125,
        });
        cases.push(BoundCase {
            family: "ms_star",
            pattern: patterns::m_star_family(s, s),
            extract: Box::new(move |g| extract::extract_ms_star(g, s)),
            floor: Box::new(move |n| {
                extract::MS_STAR_N0[s]
                    .is_some_and(|n0| n >= n0)
                    .then(|| extract::ms_star_guarantee(n, s))
                    .or_else(|| (extract::ms_star_guarantee(n, s) == 1).then_some(1))
            }),
            n_range: (4, 48),
            trials: 125,
        });
    }

    let mut total_instances = 0usize;
    for case in &cases {
        let (lo, hi) = case.n_range;
        let mut produced = 0usize;
        let mut trial = 0u64;
        while produced < case.trials {
            let n = lo + (produced % (hi - lo + 1));
            let structured_pool = structured_instances(case.family, n, 7 + trial);
            let pattern_fits = case.pattern.n_top() <= n && case.pattern.n_bottom() <= n;
            let g = if produced % 5 == 4 {
                // Every fifth instance comes from the structured pool.
                let g = structured_pool[(trial as usize) % structured_pool.len()].clone();
                if pattern_fits && find_induced_copy(&g, &case.pattern).unwrap().is_some() {
                    trial += 1;
                    continue;
                }
                g
            } else {
                // Densities scale with n to keep the repair distance short;
                // the sparsest tier uses plain rejection.
                let nf = n as f64;
                let densities = [0.5 / nf, 1.5 / nf, 3.0 / nf, 0.1];
                let density = densities[(produced + trial as usize) % densities.len()].min(0.35);
                let spec = GenSpec {
                    n,
                    pattern: case.pattern.clone(),
                    density,
                    seed: 0x51ec * trial + produced as u64,
                    method: if density <= 1.0 / nf {
                        GenMethod::Rejection
                    } else {
                        GenMethod::Repair
                    },
                };
                match random_pattern_free(&spec) {
                    Ok(g) => g,
                    Err(_) => {
                        trial += 1;
                        continue;
                    }
                }
            };
            trial += 1;
            produced += 1;
            total_instances += 1;
            assert!(
                !pattern_fits || find_induced_copy(&g, &case.pattern).unwrap().is_none(),
                "{} n={n} trial={trial}: pool produced a non-free instance",
                case.family
            );
            match (case.extract)(&g) {
                Dichotomy::Copy(_) => {
                    panic!("{}: copy returned on a pattern-free instance", case.family)
                }
                Dichotomy::Cert { certificate, .. } => {
                    assert!(
                        verify_certificate(&g, &certificate),
                        "{} n={n}: invalid certificate",
                        case.family
                    );
                    if let Some(floor) = (case.floor)(n) {
                        assert!(
                            certificate.size() >= floor,
                            "{} n={n}: certificate {} below floor {floor}",
                            case.family,
                            certificate.size()
                        );
                    }
                }
            }
        }
    }
    println!(
        "criterion 4 (extractor bound suite, {total_instances} instances): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_5_tree_split() {
    let start = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    for i in 0..10_000usize {
        let n = rng.random_range(1..=1000);
        let parent: Vec<usize> = (0..n)
            .map(|v| if v == 0 { 0 } else { rng.random_range(0..v) })
            .collect();
        let tree = RootedTree::new(parent).unwrap();
        let split = tree_split(&tree);
        assert!(verify_tree_split(&tree, &split), "tree {i} (n={n})");
    }
    println!("criterion 5 (tree split, 10^4 trees): PASS in {:?}", start.elapsed());
}

#[test]
fn criterion_6_ehp_dichotomy() {
    let start = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut copies = 0usize;
    let mut certs = 0usize;
    for trial in 0..200usize {
        let (hk, hl) = if trial % 2 == 0 { (2, 2) } else { (2, 3) };
        let h = BipartiteGraph::from_edges(
            hk,
            hl,
            (0..hk * hl)
                .filter(|_| rng.random_bool(0.5))
                .map(|c| (c / hl, c % hl))
                .collect::<Vec<_>>(),
        );
        let l = hk.max(hl);
        let k = hk.min(hl);
        let n_max = l.pow(k as u32) * 4;
        let n = rng.random_range(2..=n_max);
        let density = rng.random_range(0.05..0.95);
        let g = BipartiteGraph::from_edges(
            n,
            n,
            (0..n * n)
                .filter(|_| rng.random_bool(density))
                .map(|c| (c / n, c % n))
                .collect::<Vec<_>>(),
        );
        let t = extract::ehp_threshold(n, k, l);
        match extract::ehp_embed(&g, &h).unwrap() {
            Dichotomy::Copy(emb) => {
                copies += 1;
                assert!(verify_embedding(&g, &h, &emb), "trial {trial}");
            }
            Dichotomy::Cert {
                certificate,
                below_threshold,
            } => {
                certs += 1;
                assert!(verify_certificate(&g, &certificate), "trial {trial}");
                if !below_threshold {
                    assert!(certificate.size() >= t, "trial {trial}");
                }
                // The certificate branch must only appear when the host
                // really has a large biclique or co-biclique: whenever both
                // exact values are below t, the copy branch is mandatory.
                if t >= 1 {
                    let (w, _) = tilde_omega(&g);
                    let (a, _) = tilde_alpha(&g);
                    assert!(
                        w >= t || a >= t,
                        "trial {trial}: certificate branch with omega={w}, alpha={a} < t={t}"
                    );
                }
            }
        }
    }
    println!(
        "criterion 6 (embedding dichotomy, 200 pairs, {copies} copies / {certs} certs): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_7_lll_golden_parameters() {
    let start = std::time::Instant::now();
    let raw = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../lll_params.json"),
    )
    .expect("committed parameter file");
    let params: LllParams = serde_json::from_str(&raw).unwrap();
    assert_eq!((params.n, params.cycle_len), (24, 4));
    let coloring = lll_search(&params).expect("golden parameters must succeed");
    let report = verify_coloring(&coloring, &params);
    assert_eq!(
        (report.red_violations, report.blue_violations),
        (0, 0),
        "verification must be clean"
    );
    println!(
        "criterion 7 (resampling coloring, n={} t={} p={}): PASS in {:?}",
        params.n,
        params.t,
        params.p,
        start.elapsed()
    );
}

#[test]
fn criterion_8_duality_and_soundness() {
    let start = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    // Complement involution and omega/alpha duality on random graphs.
    for _ in 0..500 {
        let nt = rng.random_range(1..=8);
        let nb = rng.random_range(1..=8);
        let g = BipartiteGraph::from_edges(
            nt,
            nb,
            (0..nt * nb)
                .filter(|_| rng.random_bool(0.5))
                .map(|c| (c / nb, c % nb))
                .collect::<Vec<_>>(),
        );
        assert_eq!(g.bipartite_complement().bipartite_complement(), g);
        assert_eq!(tilde_omega(&g).0, tilde_alpha(&g.bipartite_complement()).0);
        assert_eq!(tilde_h(&g).0, tilde_h(&g.bipartite_complement()).0);
    }
    // classify agrees with is_strongly_acyclic, exhaustively for parts <= 4.
    for k in 1..=4usize {
        for l in 1..=4usize {
            for mask in 0u64..(1 << (k * l)) {
                let h = BipartiteGraph::from_edges(
                    k,
                    l,
                    (0..k * l)
                        .filter(|c| mask >> c & 1 == 1)
                        .map(|c| (c / l, c % l)),
                );
                let acyclic = is_strongly_acyclic(&h);
                let tagged_cyclic = matches!(
                    classify(&h).tag,
                    PatternTag::NotStronglyAcyclic { .. }
                );
                assert_eq!(acyclic, !tagged_cyclic, "k={k} l={l} mask={mask}");
            }
        }
    }
    // verify_certificate agrees with the naive checker for parts <= 6.
    for _ in 0..2000 {
        let n = rng.random_range(1..=6);
        let g = BipartiteGraph::from_edges(
            n,
            n,
            (0..n * n)
                .filter(|_| rng.random_bool(0.5))
                .map(|c| (c / n, c % n))
                .collect::<Vec<_>>(),
        );
        let kind = if rng.random_bool(0.5) {
            CertKind::Biclique
        } else {
            CertKind::CoBiclique
        };
        let tops: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.4)).collect();
        let bottoms: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.4)).collect();
        let cert = Certificate::new(kind, tops, bottoms);
        assert_eq!(
            verify_certificate(&g, &cert),
            naive_verify_certificate(&g, &cert)
        );
    }
    let _ = BitSet::empty(1);
    println!(
        "criterion 8 (duality and soundness invariants): PASS in {:?}",
        start.elapsed()
    );
}

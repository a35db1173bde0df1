//! Tight extremal constructions for the four two-by-two patterns and the
//! randomized resampling construction of colorings without short red cycles
//! or large blue bicliques.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::ConstructError;
use crate::graph::{find_induced_copy, BipartiteGraph, CycleWitness};
use crate::patterns;
use crate::solve::has_balanced_biclique;

/// Union of `blocks` disjoint `K_{size,size}` blocks.
pub fn disjoint_bicliques(blocks: usize, size: usize) -> BipartiteGraph {
    let n = blocks * size;
    let edges = (0..blocks).flat_map(|b| {
        (0..size).flat_map(move |i| (0..size).map(move |j| (b * size + i, b * size + j)))
    });
    BipartiteGraph::from_edges(n, n, edges)
}

/// Three disjoint balanced bicliques: tight for the forbidden path on four
/// vertices; requires `n` divisible by 3.
pub fn tight_p4(n: usize) -> Result<BipartiteGraph, ConstructError> {
    if n % 3 != 0 {
        return Err(ConstructError::BadModulus { n, modulus: 3 });
    }
    let g = disjoint_bicliques(3, n / 3);
    debug_assert!(find_induced_copy(&g, &patterns::p4()).unwrap().is_none());
    Ok(g)
}

/// A complete `K_{ceil(n/2),n}` plus isolated tops: tight for two disjoint
/// edges at every `n`.
pub fn tight_2k2(n: usize) -> Result<BipartiteGraph, ConstructError> {
    let full = n.div_ceil(2);
    let g = BipartiteGraph::from_edges(
        n,
        n,
        (0..full).flat_map(|u| (0..n).map(move |v| (u, v))),
    );
    debug_assert!(find_induced_copy(&g, &patterns::two_k2()).unwrap().is_none());
    Ok(g)
}

/// The five-block construction tight for the two-adjacent-edges pattern;
/// requires `n` divisible by 5. All tops see a common 2n/5 core plus one
/// private matched vertex.
pub fn tight_h4(n: usize) -> Result<BipartiteGraph, ConstructError> {
    if n % 5 != 0 {
        return Err(ConstructError::BadModulus { n, modulus: 5 });
    }
    let fifth = n / 5;
    let core = 2 * fifth; // V1
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in 0..core {
            edges.push((u, v));
        }
    }
    // U1 = first 2n/5 tops, matched into V2 = [core, core + 2n/5).
    for (i, u) in (0..2 * fifth).enumerate() {
        edges.push((u, core + i));
    }
    // U2 = remaining 3n/5 tops, matched into V2 union V3 = [core, n).
    for (i, u) in (2 * fifth..n).enumerate() {
        edges.push((u, core + i));
    }
    let g = BipartiteGraph::from_edges(n, n, edges);
    debug_assert!(find_induced_copy(&g, &patterns::h4()).unwrap().is_none());
    Ok(g)
}

/// A red/blue edge coloring of `K_{n,n}`: `red` holds the red edges, blue is
/// its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoColoring {
    pub n: usize,
    pub red: BipartiteGraph,
}

impl TwoColoring {
    pub fn blue(&self) -> BipartiteGraph {
        self.red.bipartite_complement()
    }
}

/// Parameters for the resampling search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LllParams {
    pub n: usize,
    /// Forbidden red cycle length: 4, 6, or 8.
    pub cycle_len: usize,
    /// Forbidden blue balanced biclique size.
    pub t: usize,
    /// Red probability.
    pub p: f64,
    pub max_resamples: usize,
    pub seed: u64,
}

/// Verification report: the number of red cycles of the forbidden length,
/// and 1 if a blue `K_{t,t}` exists (0 otherwise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub red_violations: usize,
    pub blue_violations: usize,
}

impl ColoringReport {
    pub fn ok(&self) -> bool {
        self.red_violations == 0 && self.blue_violations == 0
    }
}

/// Exhaustively certifies a coloring: counts red cycles of the forbidden
/// length exactly, and decides blue `K_{t,t}` existence by branch and bound.
pub fn verify_coloring(c: &TwoColoring, params: &LllParams) -> ColoringReport {
    let red_violations = count_cycles(&c.red, params.cycle_len);
    let blue = c.blue();
    let full_top = BitSet::full(blue.n_top());
    let full_bottom = BitSet::full(blue.n_bottom());
    let blue_violations =
        usize::from(has_balanced_biclique(&blue, &full_top, &full_bottom, params.t));
    ColoringReport {
        red_violations,
        blue_violations,
    }
}

/// Exact count of cycles of length 4, 6, or 8 in a bipartite graph.
pub fn count_cycles(g: &BipartiteGraph, cycle_len: usize) -> usize {
    let n_top = g.n_top();
    let tops: Vec<usize> = (0..n_top).collect();
    match cycle_len {
        4 => {
            let mut count = 0;
            for i in 0..n_top {
                for j in i + 1..n_top {
                    let c = g.row(i).intersection_len(g.row(j));
                    count += c * c.saturating_sub(1) / 2;
                }
            }
            count
        }
        6 => {
            // A hexagon picks three tops and one distinct common neighbor
            // per top pair.
            let mut count = 0;
            for i in 0..n_top {
                for j in i + 1..n_top {
                    for k in j + 1..n_top {
                        count += sdr3(
                            &g.row(tops[i]).and(g.row(tops[j])),
                            &g.row(tops[j]).and(g.row(tops[k])),
                            &g.row(tops[k]).and(g.row(tops[i])),
                        );
                    }
                }
            }
            count
        }
        8 => {
            // An octagon picks four tops in one of three cyclic orders and a
            // distinct connector per adjacent pair.
            let mut count = 0;
            for a in 0..n_top {
                for b in a + 1..n_top {
                    for c in b + 1..n_top {
                        for d in c + 1..n_top {
                            for (x, y, z, w) in [(a, b, c, d), (a, c, b, d), (a, b, d, c)] {
                                count += sdr4(
                                    &g.row(x).and(g.row(y)),
                                    &g.row(y).and(g.row(z)),
                                    &g.row(z).and(g.row(w)),
                                    &g.row(w).and(g.row(x)),
                                );
                            }
                        }
                    }
                }
            }
            count
        }
        other => panic!("unsupported cycle length {other}"),
    }
}

/// Number of ways to choose distinct representatives from three sets, by
/// inclusion-exclusion over coinciding choices.
fn sdr3(a: &BitSet, b: &BitSet, c: &BitSet) -> usize {
    let (la, lb, lc) = (a.len() as i64, b.len() as i64, c.len() as i64);
    let ab = a.intersection_len(b) as i64;
    let bc = b.intersection_len(c) as i64;
    let ac = a.intersection_len(c) as i64;
    let abc = a.and(b).intersection_len(c) as i64;
    (la * lb * lc - ab * lc - bc * la - ac * lb + 2 * abc) as usize
}

/// Number of ways to choose distinct representatives from four sets, by
/// summing over the first choice.
fn sdr4(a: &BitSet, b: &BitSet, c: &BitSet, d: &BitSet) -> usize {
    let mut total = 0;
    for v in a.iter() {
        let mut b2 = b.clone();
        let mut c2 = c.clone();
        let mut d2 = d.clone();
        if v < b2.capacity() {
            b2.remove(v);
            c2.remove(v);
            d2.remove(v);
        }
        total += sdr3(&b2, &c2, &d2);
    }
    total
}

/// Lexicographically smallest red cycle of the given length, if any.
fn find_red_cycle(g: &BipartiteGraph, cycle_len: usize) -> Option<CycleWitness> {
    let n = g.n_top();
    match cycle_len {
        4 => {
            for i in 0..n {
                for j in i + 1..n {
                    let common = g.row(i).and(g.row(j));
                    if common.len() >= 2 {
                        let vs: Vec<usize> = common.iter().take(2).collect();
                        return Some(CycleWitness {
                            vertices: vec![(i, vs[0]), (j, vs[1])],
                        });
                    }
                }
            }
            None
        }
        6 => {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        let ab = g.row(i).and(g.row(j));
                        let bc = g.row(j).and(g.row(k));
                        let ca = g.row(k).and(g.row(i));
                        if let Some((v1, v2, v3)) = pick_distinct3(&ab, &bc, &ca) {
                            return Some(CycleWitness {
                                vertices: vec![(i, v1), (j, v2), (k, v3)],
                            });
                        }
                    }
                }
            }
            None
        }
        8 => {
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        for d in c + 1..n {
                            for (x, y, z, w) in [(a, b, c, d), (a, c, b, d), (a, b, d, c)] {
                                let s1 = g.row(x).and(g.row(y));
                                let s2 = g.row(y).and(g.row(z));
                                let s3 = g.row(z).and(g.row(w));
                                let s4 = g.row(w).and(g.row(x));
                                if let Some((v1, v2, v3, v4)) =
                                    pick_distinct4(&s1, &s2, &s3, &s4)
                                {
                                    return Some(CycleWitness {
                                        vertices: vec![(x, v1), (y, v2), (z, v3), (w, v4)],
                                    });
                                }
                            }
                        }
                    }
                }
            }
            None
        }
        other => panic!("unsupported cycle length {other}"),
    }
}

fn pick_distinct3(a: &BitSet, b: &BitSet, c: &BitSet) -> Option<(usize, usize, usize)> {
    for v1 in a.iter() {
        for v2 in b.iter() {
            if v2 == v1 {
                continue;
            }
            for v3 in c.iter() {
                if v3 != v1 && v3 != v2 {
                    return Some((v1, v2, v3));
                }
            }
        }
    }
    None
}

fn pick_distinct4(
    a: &BitSet,
    b: &BitSet,
    c: &BitSet,
    d: &BitSet,
) -> Option<(usize, usize, usize, usize)> {
    for v1 in a.iter() {
        let mut b2 = b.clone();
        let mut c2 = c.clone();
        let mut d2 = d.clone();
        b2.remove(v1);
        c2.remove(v1);
        d2.remove(v1);
        if let Some((v2, v3, v4)) = pick_distinct3(&b2, &c2, &d2) {
            return Some((v1, v2, v3, v4));
        }
    }
    None
}

/// Resampling search: sample each edge red with probability `p`; while a red
/// cycle of the forbidden length exists, resample its edges. Once the red
/// side is clean, a blue `K_{t,t}` triggers a full restart with a fresh
/// stream. Returns a verified coloring or `None` when the resample budget
/// runs out. Deterministic for a fixed seed.
pub fn lll_search(params: &LllParams) -> Option<TwoColoring> {
    let n = params.n;
    let mut spent = 0usize;
    let mut restart = 0u64;
    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed.wrapping_add(restart));
        let mut rows: Vec<BitSet> = (0..n)
            .map(|_| {
                BitSet::from_indices(n, (0..n).filter(|_| rng.random_bool(params.p)))
            })
            .collect();
        // Moser-Tardos loop on red cycles.
        let red = loop {
            let g = BipartiteGraph::new(n, n, rows.clone());
            match find_red_cycle(&g, params.cycle_len) {
                None => break Some(g),
                Some(cycle) => {
                    if spent >= params.max_resamples {
                        break None;
                    }
                    spent += 1;
                    let m = cycle.vertices.len();
                    for idx in 0..m {
                        let (u1, v) = cycle.vertices[idx];
                        let u2 = cycle.vertices[(idx + 1) % m].0;
                        for u in [u1, u2] {
                            if rng.random_bool(params.p) {
                                rows[u].insert(v);
                            } else {
                                rows[u].remove(v);
                            }
                        }
                    }
                }
            }
        };
        let Some(red) = red else { return None };
        let coloring = TwoColoring { n, red };
        let blue = coloring.blue();
        let full = BitSet::full(n);
        if !has_balanced_biclique(&blue, &full, &full, params.t) {
            return Some(coloring);
        }
        if spent >= params.max_resamples {
            return None;
        }
        spent += 1; // a restart consumes budget too
        restart += 1;
    }
}

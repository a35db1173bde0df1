//! Constructive certificate extraction: given a graph promised free of some
//! forbidden pattern, produce a biclique or co-biclique of the guaranteed
//! size; if the promise is broken along the way, produce an induced copy of
//! the pattern instead. Every routine follows one proof and checks for the
//! pattern only along the openings that proof provides.

mod ehp;
mod ms;

pub use ehp::{ehp_embed, ehp_threshold};
pub use ms::{extract_ms, extract_ms_star, ms_guarantee, ms_star_guarantee, pessimistic_ms_value, MS_N0, MS_STAR_N0};

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::classify::{classify, PatternTag};
use crate::error::ExtractError;
use crate::graph::{find_induced_copy, BipartiteGraph, Embedding};
use crate::solve::{CertKind, Certificate};

/// Outcome of an extraction: an induced copy of the forbidden pattern, or a
/// certificate. `below_threshold` marks certificates smaller than the bound
/// the proof guarantees at full scale (possible only outside its validity
/// range, e.g. very small `n`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dichotomy {
    Copy(Embedding),
    Cert {
        certificate: Certificate,
        below_threshold: bool,
    },
}

impl Dichotomy {
    pub fn cert(certificate: Certificate, bound: usize) -> Self {
        let below_threshold = certificate.size() < bound;
        Dichotomy::Cert {
            certificate,
            below_threshold,
        }
    }

    pub fn as_copy(&self) -> Option<&Embedding> {
        match self {
            Dichotomy::Copy(e) => Some(e),
            _ => None,
        }
    }

    pub fn as_cert(&self) -> Option<&Certificate> {
        match self {
            Dichotomy::Cert { certificate, .. } => Some(certificate),
            _ => None,
        }
    }

    pub fn is_below_threshold(&self) -> bool {
        matches!(
            self,
            Dichotomy::Cert {
                below_threshold: true,
                ..
            }
        )
    }
}

/// A certificate expressed in the coordinates of the graph the pipeline ran
/// on, before complement/transpose bookkeeping.
#[derive(Debug, Clone)]
pub(crate) struct RawCert {
    pub kind: CertKind,
    pub tops: BitSet,
    pub bottoms: BitSet,
}

impl RawCert {
    pub fn size(&self) -> usize {
        self.tops.len().min(self.bottoms.len())
    }

    pub fn into_certificate(self) -> Certificate {
        Certificate::from_bitsets(self.kind, &self.tops, &self.bottoms)
    }
}

/// Any single vertex pair yields a certificate of size one; used so that
/// degenerate branches never return an empty certificate on a nonempty graph.
pub(crate) fn trivial_cert(g: &BipartiteGraph) -> RawCert {
    if g.n_top() == 0 || g.n_bottom() == 0 {
        return RawCert {
            kind: CertKind::CoBiclique,
            tops: BitSet::empty(g.n_top()),
            bottoms: BitSet::empty(g.n_bottom()),
        };
    }
    let tops = BitSet::from_indices(g.n_top(), [0]);
    match g.row(0).first() {
        Some(v) => RawCert {
            kind: CertKind::Biclique,
            tops,
            bottoms: BitSet::from_indices(g.n_bottom(), [v]),
        },
        None => RawCert {
            kind: CertKind::CoBiclique,
            tops,
            bottoms: BitSet::from_indices(g.n_bottom(), [0]),
        },
    }
}

pub(crate) fn better(a: RawCert, b: RawCert) -> RawCert {
    if b.size() > a.size() {
        b
    } else {
        a
    }
}

/// Greedy co-biclique from low-degree rows: scans the tops of the board in
/// ascending board-degree order and keeps the prefix whose removal of
/// neighborhoods leaves the best balanced pair.
pub(crate) fn greedy_cobiclique_rows(
    g: &BipartiteGraph,
    tops: &BitSet,
    bottoms: &BitSet,
) -> RawCert {
    let mut order: Vec<usize> = tops.iter().collect();
    order.sort_by_key(|&u| (g.row(u).intersection_len(bottoms), u));
    let mut removed = BitSet::empty(g.n_bottom());
    let mut best = (0usize, 0usize); // (value, prefix length)
    for (i, &u) in order.iter().enumerate() {
        removed = removed.or(&g.row(u).and(bottoms));
        let value = (i + 1).min(bottoms.len() - removed.len());
        if value > best.0 {
            best = (value, i + 1);
        }
    }
    let chosen = BitSet::from_indices(g.n_top(), order.iter().take(best.1).copied());
    let kept = bottoms.diff(&g.neighborhood_of(&chosen));
    RawCert {
        kind: CertKind::CoBiclique,
        tops: chosen,
        bottoms: kept,
    }
}

/// Column-side analogue: scans bottoms of the board by ascending board
/// degree, keeping tops untouched by the chosen prefix.
pub(crate) fn greedy_cobiclique_cols(
    g: &BipartiteGraph,
    tops: &BitSet,
    bottoms: &BitSet,
) -> RawCert {
    let mut order: Vec<usize> = bottoms.iter().collect();
    order.sort_by_key(|&v| (g.col(v).intersection_len(tops), v));
    let mut removed = BitSet::empty(g.n_top());
    let mut best = (0usize, 0usize);
    for (i, &v) in order.iter().enumerate() {
        removed = removed.or(&g.col(v).and(tops));
        let value = (i + 1).min(tops.len() - removed.len());
        if value > best.0 {
            best = (value, i + 1);
        }
    }
    let chosen = BitSet::from_indices(g.n_bottom(), order.iter().take(best.1).copied());
    let mut touched = BitSet::empty(g.n_top());
    for v in chosen.iter() {
        touched = touched.or(&g.col(v).and(tops));
    }
    RawCert {
        kind: CertKind::CoBiclique,
        tops: tops.diff(&touched),
        bottoms: chosen,
    }
}

/// Extends a co-biclique to a maximal one: first adds every top with no
/// neighbor in the bottom set, then every bottom with no neighbor in the
/// enlarged top set. Deterministic and only ever grows the certificate.
pub(crate) fn close_cobiclique(g: &BipartiteGraph, cert: RawCert) -> RawCert {
    debug_assert_eq!(cert.kind, CertKind::CoBiclique);
    let mut tops = cert.tops;
    for u in 0..g.n_top() {
        if !tops.contains(u) && !g.row(u).intersects(&cert.bottoms) {
            tops.insert(u);
        }
    }
    let mut bottoms = cert.bottoms;
    for v in 0..g.n_bottom() {
        if !bottoms.contains(v) && !g.col(v).intersects(&tops) {
            bottoms.insert(v);
        }
    }
    RawCert {
        kind: CertKind::CoBiclique,
        tops,
        bottoms,
    }
}

/// The small-degree co-biclique: if every top degree is below `s`, picking
/// `ceil(n/s)` smallest-degree tops leaves a bottom remainder of comparable
/// size.
pub fn extract_maxdeg_cobiclique(
    g: &BipartiteGraph,
    s: usize,
) -> Result<Certificate, ExtractError> {
    assert!(s >= 1, "s must be positive");
    let n = g.n_top();
    for u in 0..n {
        if g.degree(u) >= s {
            return Err(ExtractError::DegreeTooHigh {
                vertex: u,
                degree: g.degree(u),
                bound: s,
            });
        }
    }
    let take = n.div_ceil(s);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (g.degree(u), u));
    let chosen = BitSet::from_indices(n, order.into_iter().take(take));
    let kept = g.neighborhood_of(&chosen).complement();
    Ok(Certificate::from_bitsets(
        CertKind::CoBiclique,
        &chosen,
        &kept,
    ))
}

pub fn single_row_guarantee(n: usize, s: usize, t: usize) -> usize {
    let p = s.max(t).max(1);
    n.div_ceil(2 * p)
}

/// Dichotomy for the one-vertex pattern with `s` neighbors and `t`
/// non-neighbors: a top vertex rich on both sides yields a copy; otherwise
/// every top is poor on one side and the majority side feeds the low-degree
/// co-biclique (in the graph or its complement).
pub fn extract_single_row(g: &BipartiteGraph, s: usize, t: usize) -> Dichotomy {
    let n = g.n_top();
    debug_assert_eq!(n, g.n_bottom());
    for u in 0..n {
        let d = g.degree(u);
        if d >= s && n - d >= t {
            let neighbors: Vec<usize> = g.row(u).iter().take(s).collect();
            let non: Vec<usize> = g.row(u).complement().iter().take(t).collect();
            let mut bottom_map = neighbors;
            bottom_map.extend(non);
            return Dichotomy::Copy(Embedding {
                top_map: vec![u],
                bottom_map,
            });
        }
    }
    // Every top vertex has degree <= s-1 or complement degree <= t-1.
    let low = BitSet::from_indices(n, (0..n).filter(|&u| g.degree(u) < s));
    let high = low.complement();
    let all_bottoms = BitSet::full(n);
    let mut best = trivial_cert(g);
    if !low.is_empty() {
        let c = close_cobiclique(g, greedy_cobiclique_rows(g, &low, &all_bottoms));
        best = better(best, c);
    }
    if !high.is_empty() {
        let gc = g.bipartite_complement();
        let c = close_cobiclique(&gc, greedy_cobiclique_rows(&gc, &high, &all_bottoms));
        best = better(
            best,
            RawCert {
                kind: CertKind::Biclique,
                tops: c.tops,
                bottoms: c.bottoms,
            },
        );
    }
    Dichotomy::cert(best.into_certificate(), single_row_guarantee(n, s, t))
}

pub fn hs_guarantee(n: usize, s1: usize, s2: usize) -> usize {
    debug_assert!(s1 >= 1 && s1 >= s2);
    if s2 == 0 && s1 >= 2 {
        // Stronger bound for the one-sided star pattern.
        n.div_ceil(2 * s1 - 1)
    } else {
        n.div_ceil(2 * s1)
    }
}

/// Result of the two-hub-disjoint-stars extraction on a (possibly
/// rectangular) board, in board coordinates.
pub(crate) enum HsOutcome {
    /// Hubs `(a, b)` where `a` has at least `s` private neighbors beyond
    /// `b`'s, and `deg(a) <= deg(b)`; private sets are taken smallest-first.
    CopyHubs { low: usize, high: usize },
    Cert(RawCert),
}

/// Core of the disjoint-stars extraction, shared by the square public entry
/// point and the clique-route of the two-hub-shared-leaf pipeline.
///
/// Orders the board tops by degree; works in the board or its within-board
/// complement so the median-degree pivot has degree at most half the board
/// bottoms. Any low-half vertex with `s` neighbors outside the pivot's
/// neighborhood yields hubs for a copy; otherwise the low half has bounded
/// degree into the pivot's non-neighborhood and the greedy co-biclique
/// applies. With `all_rows` (the `s2 = 0` pattern), freeness bounds every
/// row, not just the low half.
pub(crate) fn hs_core(
    g: &BipartiteGraph,
    tops: &BitSet,
    bottoms: &BitSet,
    s: usize,
    all_rows: bool,
) -> (HsOutcome, bool) {
    let a = tops.len();
    let b = bottoms.len();
    if a == 0 || b == 0 {
        return (
            HsOutcome::Cert(RawCert {
                kind: CertKind::CoBiclique,
                tops: tops.clone(),
                bottoms: bottoms.clone(),
            }),
            false,
        );
    }
    let deg = |u: usize| g.row(u).intersection_len(bottoms);
    let mut order: Vec<usize> = tops.iter().collect();
    order.sort_by_key(|&u| (deg(u), u));
    let med = a.div_ceil(2) - 1;
    let complemented = deg(order[med]) > b / 2;

    // Board-local adjacency, complemented on demand.
    let row = |u: usize| -> BitSet {
        if complemented {
            bottoms.diff(g.row(u))
        } else {
            g.row(u).and(bottoms)
        }
    };
    if complemented {
        order.sort_by_key(|&u| (row(u).len(), u));
    }
    let pivot = order[med];
    let pivot_row = row(pivot);
    let scan_count = if all_rows { a } else { med + 1 };
    for &u in order.iter().take(scan_count) {
        if u == pivot {
            continue;
        }
        if row(u).diff_len(&pivot_row) >= s {
            // deg(u) <= deg(pivot), so the pivot has at least as many
            // private neighbors back.
            let (low, high) = (u, pivot);
            return (HsOutcome::CopyHubs { low, high }, complemented);
        }
    }
    let y = bottoms.diff(&pivot_row);
    let half = BitSet::from_indices(g.n_top(), order.iter().take(scan_count).copied());
    let board = if complemented {
        g.bipartite_complement()
    } else {
        g.clone()
    };
    let c1 = greedy_cobiclique_rows(&board, &half, &y);
    let c2 = greedy_cobiclique_cols(&board, &half, &y);
    let cert = close_cobiclique(&board, better(c1, c2));
    let kind = if complemented {
        CertKind::Biclique
    } else {
        CertKind::CoBiclique
    };
    (
        HsOutcome::Cert(RawCert {
            kind,
            tops: cert.tops,
            bottoms: cert.bottoms,
        }),
        complemented,
    )
}

/// Dichotomy for the forbidden two disjoint stars `H_{s1,s2}` (`s1 >= 1`,
/// `s1 >= s2`), on a square graph.
pub fn extract_hs(g: &BipartiteGraph, s1: usize, s2: usize) -> Dichotomy {
    assert!(s1 >= 1 && s1 >= s2, "require s1 >= max(1, s2)");
    let n = g.n_top();
    debug_assert_eq!(n, g.n_bottom());
    let tops = BitSet::full(n);
    let bottoms = BitSet::full(n);
    let (outcome, complemented) = hs_core(g, &tops, &bottoms, s1, s2 == 0);
    match outcome {
        HsOutcome::CopyHubs { low, high } => {
            let emb = build_h_copy(g, complemented, low, high, s1, s2);
            Dichotomy::Copy(emb)
        }
        HsOutcome::Cert(raw) => Dichotomy::cert(raw.into_certificate(), hs_guarantee(n, s1, s2)),
    }
}

/// Assembles an induced copy of `h_family(s1, s2)` in the input graph from
/// the hub pair found by `hs_core`. In the complement world the private
/// neighborhoods swap owners, so the hub roles flip.
fn build_h_copy(
    g: &BipartiteGraph,
    complemented: bool,
    low: usize,
    high: usize,
    s1: usize,
    s2: usize,
) -> Embedding {
    let (row_low, row_high) = if complemented {
        (g.row(low).complement(), g.row(high).complement())
    } else {
        (g.row(low).clone(), g.row(high).clone())
    };
    // World privates of `low` are input-graph privates of `high` when
    // complemented, and of `low` otherwise; either way the same sets serve.
    let leaves0: Vec<usize> = row_low.diff(&row_high).iter().take(s1).collect();
    let leaves1: Vec<usize> = row_high.diff(&row_low).iter().take(s2).collect();
    debug_assert_eq!(leaves0.len(), s1);
    debug_assert_eq!(leaves1.len(), s2);
    let top_map = if complemented {
        vec![high, low]
    } else {
        vec![low, high]
    };
    let mut bottom_map = leaves0;
    bottom_map.extend(leaves1);
    Embedding { top_map, bottom_map }
}

pub fn p4_guarantee(n: usize) -> usize {
    n.div_ceil(3)
}

/// Dichotomy for the forbidden path on four vertices: a P4-free graph is a
/// disjoint union of bicliques, and grouping blocks by side yields a
/// certificate of size at least `ceil(n/3)`.
pub fn extract_p4free(g: &BipartiteGraph) -> Dichotomy {
    let n = g.n_top();
    debug_assert_eq!(n, g.n_bottom());
    let comps = bipartite_components(g);
    // A component that is not complete bipartite pinpoints an induced P4.
    for (tops, bottoms) in &comps {
        for u in tops.iter() {
            if g.row(u).intersection_len(bottoms) < bottoms.len() {
                let v = bottoms.diff(g.row(u)).first().unwrap();
                return Dichotomy::Copy(p4_from_path(g, u, v));
            }
        }
    }
    let t_goal = p4_guarantee(n);
    let full_tops = BitSet::full(n);
    let full_bottoms = BitSet::full(n);

    // Step 1: a block balanced enough is itself a biclique certificate.
    for (tops, bottoms) in &comps {
        if tops.len().min(bottoms.len()) >= t_goal {
            return Dichotomy::cert(
                Certificate::from_bitsets(CertKind::Biclique, tops, bottoms),
                t_goal,
            );
        }
    }
    // Step 2: a block long on one side pairs with everything outside it.
    for (tops, bottoms) in &comps {
        if tops.len() >= t_goal {
            return Dichotomy::cert(
                Certificate::from_bitsets(CertKind::CoBiclique, tops, &full_bottoms.diff(bottoms)),
                t_goal,
            );
        }
        if bottoms.len() >= t_goal {
            return Dichotomy::cert(
                Certificate::from_bitsets(CertKind::CoBiclique, &full_tops.diff(tops), bottoms),
                t_goal,
            );
        }
    }
    // Step 3: group blocks by which side is smaller.
    let prim: Vec<usize> = (0..comps.len())
        .filter(|&i| comps[i].0.len() <= comps[i].1.len())
        .collect();
    let sec: Vec<usize> = (0..comps.len())
        .filter(|&i| comps[i].0.len() > comps[i].1.len())
        .collect();
    let union_tops = |ids: &[usize]| {
        let mut s = BitSet::empty(n);
        for &i in ids {
            s = s.or(&comps[i].0);
        }
        s
    };
    let union_bottoms = |ids: &[usize]| {
        let mut s = BitSet::empty(n);
        for &i in ids {
            s = s.or(&comps[i].1);
        }
        s
    };
    let b_prim = union_bottoms(&prim);
    let a_sec = union_tops(&sec);
    if b_prim.len() >= t_goal && a_sec.len() >= t_goal {
        return Dichotomy::cert(
            Certificate::from_bitsets(CertKind::CoBiclique, &a_sec, &b_prim),
            t_goal,
        );
    }
    if b_prim.len() < t_goal {
        // The secondary side carries almost all tops; a minimal prefix of its
        // blocks crosses the threshold with few bottoms attached.
        let mut chosen = Vec::new();
        let mut total = 0;
        for &i in &sec {
            if total >= t_goal {
                break;
            }
            chosen.push(i);
            total += comps[i].0.len();
        }
        let tops = union_tops(&chosen);
        let bottoms = full_bottoms.diff(&union_bottoms(&chosen));
        return Dichotomy::cert(
            Certificate::from_bitsets(CertKind::CoBiclique, &tops, &bottoms),
            t_goal,
        );
    }
    // Mirror case: the primary side carries almost all bottoms.
    let mut chosen = Vec::new();
    let mut total = 0;
    for &i in &prim {
        if total >= t_goal {
            break;
        }
        chosen.push(i);
        total += comps[i].1.len();
    }
    let bottoms = union_bottoms(&chosen);
    let tops = full_tops.diff(&union_tops(&chosen));
    Dichotomy::cert(
        Certificate::from_bitsets(CertKind::CoBiclique, &tops, &bottoms),
        t_goal,
    )
}

/// Connected components over the union of both sides, as (tops, bottoms)
/// pairs; isolated vertices form singleton components.
fn bipartite_components(g: &BipartiteGraph) -> Vec<(BitSet, BitSet)> {
    let (nt, nb) = (g.n_top(), g.n_bottom());
    let mut seen_top = vec![false; nt];
    let mut seen_bottom = vec![false; nb];
    let mut comps = Vec::new();
    let visit = |start_top: Option<usize>, start_bottom: Option<usize>,
                     seen_top: &mut Vec<bool>, seen_bottom: &mut Vec<bool>| {
        let mut tops = BitSet::empty(nt);
        let mut bottoms = BitSet::empty(nb);
        let mut stack: Vec<(bool, usize)> = Vec::new();
        if let Some(u) = start_top {
            stack.push((true, u));
            seen_top[u] = true;
        }
        if let Some(v) = start_bottom {
            stack.push((false, v));
            seen_bottom[v] = true;
        }
        while let Some((is_top, x)) = stack.pop() {
            if is_top {
                tops.insert(x);
                for v in g.row(x).iter() {
                    if !seen_bottom[v] {
                        seen_bottom[v] = true;
                        stack.push((false, v));
                    }
                }
            } else {
                bottoms.insert(x);
                for u in g.col(x).iter() {
                    if !seen_top[u] {
                        seen_top[u] = true;
                        stack.push((true, u));
                    }
                }
            }
        }
        (tops, bottoms)
    };
    for u in 0..nt {
        if !seen_top[u] {
            comps.push(visit(Some(u), None, &mut seen_top, &mut seen_bottom));
        }
    }
    for v in 0..nb {
        if !seen_bottom[v] {
            comps.push(visit(None, Some(v), &mut seen_top, &mut seen_bottom));
        }
    }
    comps
}

/// Finds the induced P4 exposed by a top vertex `u` and a same-component
/// non-neighbor `v`: the last four vertices of a shortest u-v path.
fn p4_from_path(g: &BipartiteGraph, u: usize, v: usize) -> Embedding {
    // BFS over the doubled vertex space from u (a top vertex).
    let (nt, nb) = (g.n_top(), g.n_bottom());
    let enc_top = |x: usize| x;
    let enc_bottom = |x: usize| nt + x;
    let mut parent = vec![usize::MAX; nt + nb];
    let mut seen = vec![false; nt + nb];
    seen[enc_top(u)] = true;
    let mut queue = std::collections::VecDeque::from([enc_top(u)]);
    while let Some(x) = queue.pop_front() {
        let nbrs: Vec<usize> = if x < nt {
            g.row(x).iter().map(enc_bottom).collect()
        } else {
            g.col(x - nt).iter().map(enc_top).collect()
        };
        for y in nbrs {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    // Path from v back to u; length is odd and at least 3.
    let mut path = vec![enc_bottom(v)];
    while *path.last().unwrap() != enc_top(u) {
        path.push(parent[*path.last().unwrap()]);
    }
    debug_assert!(path.len() >= 4 && path.len() % 2 == 0);
    let quad = &path[..4]; // v .. toward u, alternating bottom/top
    // quad[0] is a bottom vertex: beta1, tau1, beta0, tau0 with edges
    // tau1-beta1, tau1-beta0, tau0-beta0 and non-edge tau0-beta1.
    let (beta1, tau1, beta0, tau0) = (quad[0] - nt, quad[1], quad[2] - nt, quad[3]);
    debug_assert!(!g.has_edge(tau0, beta1));
    Embedding {
        top_map: vec![tau1, tau0],
        bottom_map: vec![beta1, beta0],
    }
}

pub fn two_k2_guarantee(n: usize) -> usize {
    n.div_ceil(2)
}

/// Dichotomy for the forbidden two disjoint edges: free graphs have nested
/// neighborhoods, and splitting the chain at the median gives a biclique on
/// one side and a co-biclique on the other; one of them is balanced.
pub fn extract_2k2free(g: &BipartiteGraph) -> Dichotomy {
    let n = g.n_top();
    debug_assert_eq!(n, g.n_bottom());
    if n == 0 {
        return Dichotomy::cert(
            Certificate::new(CertKind::CoBiclique, vec![], vec![]),
            0,
        );
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
    for w in order.windows(2) {
        let (hi, lo) = (w[0], w[1]);
        if !g.row(lo).is_subset_of(g.row(hi)) {
            // Crossing neighborhoods: both private sides are nonempty.
            let v_hi = g.row(hi).diff(g.row(lo)).first().unwrap();
            let v_lo = g.row(lo).diff(g.row(hi)).first().unwrap();
            // two_k2 layout: hub 0 adj bottom 0, hub 1 adj bottom 1.
            return Dichotomy::Copy(Embedding {
                top_map: vec![hi, lo],
                bottom_map: vec![v_hi, v_lo],
            });
        }
    }
    let t_goal = two_k2_guarantee(n);
    let pivot = order[t_goal - 1];
    let upper = BitSet::from_indices(n, order.iter().take(t_goal).copied());
    let lower = BitSet::from_indices(n, order.iter().skip(t_goal - 1).copied());
    let v1 = g.row(pivot).clone();
    let v2 = v1.complement();
    if v1.len() >= v2.len() {
        Dichotomy::cert(
            Certificate::from_bitsets(CertKind::Biclique, &upper, &v1),
            t_goal,
        )
    } else {
        Dichotomy::cert(
            Certificate::from_bitsets(CertKind::CoBiclique, &lower, &v2),
            t_goal,
        )
    }
}

pub fn h4_guarantee(n: usize) -> usize {
    2 * n / 5
}

/// Dichotomy for the forbidden two-adjacent-edges pattern (a two-leaf star
/// plus an isolated top vertex): free graphs have sunflower neighborhoods
/// with petals of size at most one, in the graph or its complement.
pub fn extract_h4free(g: &BipartiteGraph) -> Dichotomy {
    let n = g.n_top();
    debug_assert_eq!(n, g.n_bottom());
    // The proof's opening observation: any pair with two one-sided private
    // neighbors is a copy.
    for a in 0..n {
        for b in 0..n {
            if a != b && g.row(a).diff_len(g.row(b)) >= 2 {
                let leaves: Vec<usize> = g.row(a).diff(g.row(b)).iter().take(2).collect();
                return Dichotomy::Copy(Embedding {
                    top_map: vec![a, b],
                    bottom_map: leaves,
                });
            }
        }
    }
    let t_goal = h4_guarantee(n);
    if n == 0 {
        return Dichotomy::cert(Certificate::new(CertKind::CoBiclique, vec![], vec![]), 0);
    }
    // Sunflower core: the common intersection works in the graph or in its
    // complement (pairwise differences at most one force one of the two).
    let core_of = |q: &BipartiteGraph| -> Option<BitSet> {
        let mut core = BitSet::full(n);
        for u in 0..n {
            core = core.and(q.row(u));
        }
        (0..n).all(|u| q.row(u).diff_len(&core) <= 1).then_some(core)
    };
    let complement = g.bipartite_complement();
    let (q, core, kind_of_biclique) = if let Some(core) = core_of(g) {
        (g.clone(), core, CertKind::Biclique)
    } else if let Some(core) = core_of(&complement) {
        (complement, core, CertKind::CoBiclique)
    } else {
        unreachable!("pairwise one-sided differences <= 1 admit a sunflower core");
    };

    if core.len() >= (2 * n).div_ceil(5) {
        return Dichotomy::cert(
            Certificate::from_bitsets(kind_of_biclique, &BitSet::full(n), &core),
            t_goal,
        );
    }
    // Petals form disjoint stars with centers outside the core; the
    // smallest-degree centers leave most tops untouched.
    let outside = core.complement();
    let mut order: Vec<usize> = outside.iter().collect();
    order.sort_by_key(|&v| (q.col(v).len(), v));
    let take = t_goal.min(order.len());
    let chosen = BitSet::from_indices(n, order.into_iter().take(take));
    let mut touched = BitSet::empty(n);
    for v in chosen.iter() {
        touched = touched.or(q.col(v));
    }
    let kept = touched.complement();
    debug_assert!(kept.len() >= t_goal);
    Dichotomy::cert(
        Certificate::from_bitsets(kind_of_biclique.complemented(), &kept, &chosen),
        t_goal,
    )
}

/// Classifies the forbidden pattern and dispatches to the matching
/// extractor, transporting the graph through complement/side-swap as the
/// classification requires and mapping the outcome back.
pub fn extract_auto(g: &BipartiteGraph, h: &BipartiteGraph) -> Result<Dichotomy, ExtractError> {
    debug_assert_eq!(g.n_top(), g.n_bottom());
    let class = classify(h);
    let (complemented, transposed) = (class.complemented, class.transposed);
    let rebuild = match class.rebuild() {
        Some(r) => r,
        None => return Err(ExtractError::NotStronglyAcyclic),
    };
    let mut eff = g.clone();
    if complemented {
        eff = eff.bipartite_complement();
    }
    if transposed {
        eff = eff.transpose();
    }
    let inner = match &class.tag {
        PatternTag::SingleRow {
            neighbors,
            non_neighbors,
        } => extract_single_row(&eff, *neighbors, *non_neighbors),
        PatternTag::Hfam { s1, s2 } => {
            if *s1 == 0 {
                // Two isolated tops: embeds into any graph with two tops.
                if eff.n_top() >= 2 {
                    Dichotomy::Copy(Embedding {
                        top_map: vec![0, 1],
                        bottom_map: vec![],
                    })
                } else {
                    Dichotomy::cert(trivial_cert(&eff).into_certificate(), 0)
                }
            } else {
                extract_hs(&eff, *s1, *s2)
            }
        }
        PatternTag::Mfam { s1, s2 } => {
            debug_assert!(*s1 >= 1, "M with empty hubs classifies as single-row");
            let d = extract_ms(&eff, *s1);
            narrow_two_hub_copy(d, *s1, *s2, false)
        }
        PatternTag::MstarFam { s1, s2 } => {
            debug_assert!(*s1 >= 1, "M* with empty hubs classifies into the H family");
            let d = extract_ms_star(&eff, *s1);
            narrow_two_hub_copy(d, *s1, *s2, true)
        }
        PatternTag::Exceptional { which } => {
            return Err(ExtractError::ExceptionalPattern(which.to_string()))
        }
        PatternTag::NotStronglyAcyclic { .. } => return Err(ExtractError::NotStronglyAcyclic),
    };

    // Map the outcome from the transformed graph back to `g`, then recast the
    // copy (which targets the canonical rebuild) as a copy of `h` itself.
    Ok(match inner {
        Dichotomy::Cert {
            certificate,
            below_threshold,
        } => {
            let mut c = certificate;
            if transposed {
                c = c.transposed();
            }
            if complemented {
                c = c.complemented();
            }
            Dichotomy::Cert {
                certificate: c,
                below_threshold,
            }
        }
        Dichotomy::Copy(e) => {
            let canonical = if transposed {
                Embedding {
                    top_map: e.bottom_map,
                    bottom_map: e.top_map,
                }
            } else {
                e
            };
            // canonical: rebuild -> g. Compose with an isomorphism h -> rebuild.
            let iso = find_induced_copy(&rebuild, h)
                .expect("sizes match")
                .expect("classification rebuilds an isomorphic pattern");
            Dichotomy::Copy(Embedding {
                top_map: iso.top_map.iter().map(|&i| canonical.top_map[i]).collect(),
                bottom_map: iso
                    .bottom_map
                    .iter()
                    .map(|&i| canonical.bottom_map[i])
                    .collect(),
            })
        }
    })
}

/// The shared-leaf extractors find copies of the balanced `M_{s1,s1}` (or
/// its starred variant); a copy of `M_{s1,s2}` sits inside by dropping the
/// second hub's extra leaves.
fn narrow_two_hub_copy(d: Dichotomy, s1: usize, s2: usize, star: bool) -> Dichotomy {
    match d {
        Dichotomy::Copy(e) if s2 < s1 => {
            let mut bottom_map = Vec::with_capacity(s1 + s2 + 1 + star as usize);
            bottom_map.extend_from_slice(&e.bottom_map[..s1]); // hub 0 privates
            bottom_map.extend_from_slice(&e.bottom_map[s1..s1 + s2]); // hub 1 privates
            bottom_map.push(e.bottom_map[2 * s1]); // shared leaf
            if star {
                bottom_map.push(e.bottom_map[2 * s1 + 1]); // isolated vertex
            }
            Dichotomy::Copy(Embedding {
                top_map: e.top_map,
                bottom_map,
            })
        }
        other => other,
    }
}

#[cfg(test)]
mod tests;

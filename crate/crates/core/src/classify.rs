//! Strong acyclicity, classification of strongly acyclic patterns into the
//! two-hub families and the four exceptional graphs, and exhaustive
//! enumeration of strongly acyclic graphs at small part sizes.

use serde::{Deserialize, Serialize};

use crate::error::SolveError;
use crate::graph::{shortest_cycle, BipartiteGraph, CycleWitness};
use crate::patterns::{self, ExceptionalKind};

/// True iff neither `H` nor its bipartite complement contains a cycle.
pub fn is_strongly_acyclic(h: &BipartiteGraph) -> bool {
    shortest_cycle(h).is_none() && shortest_cycle(&h.bipartite_complement()).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PatternTag {
    /// One part has size 1: the solo vertex has `neighbors` neighbors and
    /// `non_neighbors` non-neighbors.
    SingleRow { neighbors: usize, non_neighbors: usize },
    /// Two top hubs with disjoint leaf sets.
    Hfam { s1: usize, s2: usize },
    /// Two top hubs sharing exactly one leaf.
    Mfam { s1: usize, s2: usize },
    /// `Mfam` plus one isolated bottom vertex.
    MstarFam { s1: usize, s2: usize },
    /// One of the four fixed graphs with parts of size at least 3.
    Exceptional { which: ExceptionalKind },
    /// A cycle of length 4, 6, or 8 in the pattern or its complement.
    NotStronglyAcyclic { witness: CycleWitness },
}

/// Classification result. `complemented` means the tag describes the
/// bipartite complement of the input; `transposed` means it describes the
/// input with its sides swapped. To rebuild: take the tag's graph, complement
/// it if `complemented`, then transpose it if `transposed`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternClass {
    pub tag: PatternTag,
    pub complemented: bool,
    pub transposed: bool,
}

impl PatternClass {
    fn plain(tag: PatternTag) -> Self {
        PatternClass {
            tag,
            complemented: false,
            transposed: false,
        }
    }

    /// Reconstructs a graph in the class, side-respecting isomorphic to the
    /// classified input (families are rebuilt in canonical layout).
    pub fn rebuild(&self) -> Option<BipartiteGraph> {
        let base = match &self.tag {
            PatternTag::SingleRow { neighbors, non_neighbors } => {
                patterns::single_row(*neighbors, *non_neighbors)
            }
            PatternTag::Hfam { s1, s2 } => patterns::h_family(*s1, *s2),
            PatternTag::Mfam { s1, s2 } => patterns::m_family(*s1, *s2),
            PatternTag::MstarFam { s1, s2 } => patterns::m_star_family(*s1, *s2),
            PatternTag::Exceptional { which } => match which {
                ExceptionalKind::P5Prime => patterns::p5_prime(),
                ExceptionalKind::P6 => patterns::p6(),
                ExceptionalKind::H341 => patterns::h_3_4_1(),
                ExceptionalKind::P7 => patterns::p7(),
            },
            PatternTag::NotStronglyAcyclic { .. } => return None,
        };
        let g = if self.complemented {
            base.bipartite_complement()
        } else {
            base
        };
        Some(if self.transposed { g.transpose() } else { g })
    }
}

/// Hub structure of a graph with exactly two top vertices: the number of
/// shared bottom neighbors and of bottom vertices adjacent to neither hub.
fn hub_profile(h: &BipartiteGraph) -> (usize, usize) {
    debug_assert_eq!(h.n_top(), 2);
    let shared = h.row(0).intersection_len(h.row(1));
    let covered = h.row(0).or(h.row(1)).len();
    (shared, h.n_bottom() - covered)
}

fn normalized_privates(h: &BipartiteGraph, shared: usize) -> (usize, usize) {
    let a = h.degree(0) - shared;
    let b = h.degree(1) - shared;
    (a.max(b), a.min(b))
}

/// The four orientations of a pattern: (complemented, transposed) in the
/// preference order plain, complemented, transposed, both.
const ORIENTATIONS: [(bool, bool); 4] = [(false, false), (true, false), (false, true), (true, true)];

fn oriented(h: &BipartiteGraph, complemented: bool, transposed: bool) -> BipartiteGraph {
    let g = if complemented {
        h.bipartite_complement()
    } else {
        h.clone()
    };
    if transposed {
        g.transpose()
    } else {
        g
    }
}

/// Classifies a pattern per the strongly-acyclic characterization.
///
/// Precedence among candidate tags is SingleRow, then Hfam, Mfam, MstarFam,
/// Exceptional, matching the extractor dispatch order; within a tag the
/// orientation preference is plain, complemented, transposed, both.
///
/// Graphs with an empty part (other than the 2x0 / 0x2 hub shapes) fall
/// outside the characterization; they are reported as `Hfam{0,0}` since,
/// like it, they embed vacuously wherever they fit.
pub fn classify(h: &BipartiteGraph) -> PatternClass {
    if h.n_top() == 1 {
        let s = h.degree(0);
        return PatternClass::plain(PatternTag::SingleRow {
            neighbors: s,
            non_neighbors: h.n_bottom() - s,
        });
    }
    if h.n_bottom() == 1 {
        let s = h.col(0).len();
        return PatternClass {
            tag: PatternTag::SingleRow {
                neighbors: s,
                non_neighbors: h.n_top() - s,
            },
            complemented: false,
            transposed: true,
        };
    }

    // Shortest cycle over the pattern and its complement; by the
    // characterization the shorter of the two has length at most 8.
    let cyc = shortest_cycle(h);
    let cyc_c = shortest_cycle(&h.bipartite_complement());
    match (cyc, cyc_c) {
        (Some(w), Some(wc)) => {
            let (witness, complemented) = if w.length() <= wc.length() {
                (w, false)
            } else {
                (wc, true)
            };
            return PatternClass {
                tag: PatternTag::NotStronglyAcyclic { witness },
                complemented,
                transposed: false,
            };
        }
        (Some(w), None) => {
            return PatternClass::plain(PatternTag::NotStronglyAcyclic { witness: w })
        }
        (None, Some(wc)) => {
            return PatternClass {
                tag: PatternTag::NotStronglyAcyclic { witness: wc },
                complemented: true,
                transposed: false,
            }
        }
        (None, None) => {}
    }

    // Strongly acyclic with both parts >= 2 (or a degenerate empty part).
    // Two-hub families: examine every orientation with a top part of size 2.
    #[derive(Clone, Copy, PartialEq)]
    enum Fam {
        H,
        M,
        MStar,
    }
    for fam in [Fam::H, Fam::M, Fam::MStar] {
        for (complemented, transposed) in ORIENTATIONS {
            let top = if transposed { h.n_bottom() } else { h.n_top() };
            if top != 2 {
                continue;
            }
            let g = oriented(h, complemented, transposed);
            let (shared, uncovered) = hub_profile(&g);
            // Strong acyclicity forces shared <= 1 and uncovered <= 1.
            debug_assert!(shared <= 1 && uncovered <= 1);
            let matched = match fam {
                Fam::H => (shared, uncovered) == (0, 0),
                Fam::M => (shared, uncovered) == (1, 0),
                Fam::MStar => (shared, uncovered) == (1, 1),
            };
            if matched {
                let (s1, s2) = normalized_privates(&g, shared);
                let tag = match fam {
                    Fam::H => PatternTag::Hfam { s1, s2 },
                    Fam::M => PatternTag::Mfam { s1, s2 },
                    Fam::MStar => PatternTag::MstarFam { s1, s2 },
                };
                return PatternClass {
                    tag,
                    complemented,
                    transposed,
                };
            }
        }
    }

    // The four exceptional graphs, up to complement and side swap.
    for (complemented, transposed) in ORIENTATIONS {
        let g = oriented(h, complemented, transposed);
        for (which, fixed) in patterns::exceptional() {
            if g.n_top() == fixed.n_top()
                && g.n_bottom() == fixed.n_bottom()
                && are_iso_sided(&g, &fixed)
            {
                return PatternClass {
                    tag: PatternTag::Exceptional { which },
                    complemented,
                    transposed,
                };
            }
        }
    }

    if h.n_top() == 0 || h.n_bottom() == 0 {
        return PatternClass::plain(PatternTag::Hfam { s1: 0, s2: 0 });
    }

    // Strongly acyclic, no part of size <= 2, and not exceptional: by the
    // characterization (verified exhaustively for parts <= 4 in tests, and
    // impossible by edge counting beyond that) this cannot happen.
    unreachable!("strongly acyclic graph escaped the characterization")
}

/// Side-respecting isomorphism test for small graphs: tries all top
/// permutations and compares the column multisets.
pub fn are_iso_sided(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
    if a.n_top() != b.n_top() || a.n_bottom() != b.n_bottom() {
        return false;
    }
    let k = a.n_top();
    let col_key = |g: &BipartiteGraph, v: usize, perm: Option<&[usize]>| -> u64 {
        (0..k)
            .map(|u| {
                let src = perm.map_or(u, |p| p[u]);
                (g.has_edge(src, v) as u64) << u
            })
            .sum()
    };
    let mut b_cols: Vec<u64> = (0..b.n_bottom()).map(|v| col_key(b, v, None)).collect();
    b_cols.sort_unstable();
    let mut found = false;
    for_each_permutation(k, &mut |perm| {
        if found {
            return;
        }
        let mut a_cols: Vec<u64> = (0..a.n_bottom()).map(|v| col_key(a, v, Some(perm))).collect();
        a_cols.sort_unstable();
        if a_cols == b_cols {
            found = true;
        }
    });
    found
}

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, f);
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

pub const ENUMERATE_MAX_PART: usize = 5;

/// The smallest adjacency bitmask over all side-respecting relabelings.
fn canonical_mask(g: &BipartiteGraph) -> u64 {
    let (k, l) = (g.n_top(), g.n_bottom());
    debug_assert!(k * l <= 64);
    let mut best = u64::MAX;
    for_each_permutation(k, &mut |tp| {
        for_each_permutation(l, &mut |bp| {
            let mut mask = 0u64;
            for i in 0..k {
                for j in 0..l {
                    if g.has_edge(tp[i], bp[j]) {
                        mask |= 1 << (i * l + j);
                    }
                }
            }
            if mask < best {
                best = mask;
            }
        });
    });
    best
}

/// Canonical key up to side-respecting isomorphism and bipartite complement.
/// Square graphs are additionally quotiented by the side swap, matching the
/// characterization's normalization of the two parts by size.
pub fn canonical_class_mask(g: &BipartiteGraph) -> u64 {
    let mut best = canonical_mask(g).min(canonical_mask(&g.bipartite_complement()));
    if g.n_top() == g.n_bottom() {
        let t = g.transpose();
        best = best
            .min(canonical_mask(&t))
            .min(canonical_mask(&t.bipartite_complement()));
    }
    best
}

/// All strongly acyclic graphs with parts `(k, l)`, one representative per
/// class up to side-respecting isomorphism and bipartite complement, sorted
/// by canonical mask.
pub fn enumerate_strongly_acyclic(
    k: usize,
    l: usize,
) -> Result<Vec<BipartiteGraph>, SolveError> {
    if k > ENUMERATE_MAX_PART || l > ENUMERATE_MAX_PART {
        return Err(SolveError::TooLarge {
            n: k.max(l),
            max: ENUMERATE_MAX_PART,
        });
    }
    let cells = k * l;
    let mut classes = std::collections::BTreeSet::new();
    for mask in 0u64..(1 << cells) {
        // Both the graph and its complement must be forests, so both edge
        // counts are at most k + l - 1.
        let e = mask.count_ones() as usize;
        if k + l > 0 && (e > k + l - 1 || cells - e > k + l - 1) {
            continue;
        }
        let g = rect_graph_from_mask(k, l, mask);
        if is_strongly_acyclic(&g) {
            classes.insert(canonical_class_mask(&g));
        }
    }
    Ok(classes
        .into_iter()
        .map(|m| rect_graph_from_mask(k, l, m))
        .collect())
}

fn rect_graph_from_mask(k: usize, l: usize, mask: u64) -> BipartiteGraph {
    BipartiteGraph::from_edges(
        k,
        l,
        (0..k * l)
            .filter(|c| mask >> c & 1 == 1)
            .map(|c| (c / l, c % l)),
    )
}

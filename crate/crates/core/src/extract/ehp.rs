//! Embedding dichotomy for an arbitrary pattern with parts `k <= l`
//! (`k >= 2`): on a host with parts of size `n`, either an induced copy is
//! assembled in `k` rounds of the candidate-refinement lemma, or the round
//! that fails hands over an explicit `K_{t,t}` or co-biclique with
//! `t = floor((n/l)^(1/k))`.

use crate::bitset::BitSet;
use crate::error::ExtractError;
use crate::graph::{BipartiteGraph, Embedding};
use crate::solve::{CertKind, Certificate};

use super::{trivial_cert, Dichotomy};

/// `floor(x^(1/k))` by integer search.
fn integer_kth_root(x: usize, k: u32) -> usize {
    if x == 0 {
        return 0;
    }
    let mut r = 1usize;
    while (r + 1).checked_pow(k).is_some_and(|p| p <= x) {
        r += 1;
    }
    r
}

/// The guaranteed certificate size for host part size `n` and pattern parts
/// `k <= l`.
pub fn ehp_threshold(n: usize, k: usize, l: usize) -> usize {
    integer_kth_root(n / l, k as u32)
}

pub fn ehp_embed(g: &BipartiteGraph, h: &BipartiteGraph) -> Result<Dichotomy, ExtractError> {
    let k = h.n_top().min(h.n_bottom());
    if k < 2 {
        return Err(ExtractError::BadPattern(format!(
            "pattern parts ({}, {}): both must be at least 2",
            h.n_top(),
            h.n_bottom()
        )));
    }
    // Orient so the larger pattern part lives on the host's top side.
    if h.n_top() >= h.n_bottom() {
        run(g, h)
    } else {
        let out = run(&g.transpose(), &h.transpose())?;
        Ok(match out {
            Dichotomy::Copy(e) => Dichotomy::Copy(Embedding {
                top_map: e.bottom_map,
                bottom_map: e.top_map,
            }),
            Dichotomy::Cert {
                certificate,
                below_threshold,
            } => Dichotomy::Cert {
                certificate: certificate.transposed(),
                below_threshold,
            },
        })
    }
}

fn run(g: &BipartiteGraph, h: &BipartiteGraph) -> Result<Dichotomy, ExtractError> {
    let l = h.n_top();
    let k = h.n_bottom();
    let n = g.n_top().min(g.n_bottom());
    let t_official = ehp_threshold(n, k, l);

    // Largest t the round structure supports: l groups of t^k candidates on
    // top and k groups of t*l scan pools on the bottom.
    let mut t = integer_kth_root(g.n_top() / l, k as u32);
    while t > 0 && k * t * l > g.n_bottom() {
        t -= 1;
    }
    if t == 0 {
        // Too small to run a single round; the pattern may not even fit.
        return Ok(Dichotomy::cert(
            trivial_cert(g).into_certificate(),
            t_official,
        ));
    }

    // Contiguous partitions: top groups of floor(n_top/l), bottom groups of
    // floor(n_bottom/k); leftovers join the last group.
    let top_group = |i: usize| -> BitSet {
        let size = g.n_top() / l;
        let start = i * size;
        let end = if i + 1 == l { g.n_top() } else { start + size };
        BitSet::from_indices(g.n_top(), start..end)
    };
    let bottom_group = |j: usize| -> Vec<usize> {
        let size = g.n_bottom() / k;
        let start = j * size;
        let end = if j + 1 == k { g.n_bottom() } else { start + size };
        (start..end).collect()
    };

    let mut candidates: Vec<BitSet> = (0..l).map(top_group).collect();
    let mut chosen_bottoms: Vec<usize> = Vec::with_capacity(k);

    for j in 0..k {
        let need = t.pow((k - j - 1) as u32);
        let pool = bottom_group(j);
        let good = pool.iter().copied().find(|&v| {
            (0..l).all(|i| {
                if h.has_edge(i, j) {
                    g.col(v).intersection_len(&candidates[i]) >= need
                } else {
                    candidates[i].diff_len(g.col(v)) >= need
                }
            })
        });
        match good {
            Some(v) => {
                chosen_bottoms.push(v);
                for i in 0..l {
                    candidates[i] = if h.has_edge(i, j) {
                        candidates[i].and(g.col(v))
                    } else {
                        candidates[i].diff(g.col(v))
                    };
                }
            }
            None => {
                // Every pool vertex is bad for some group; pigeonhole one
                // group bad for at least t of them and read off the biclique
                // or co-biclique directly.
                let bad_index = |v: usize| -> usize {
                    (0..l)
                        .find(|&i| {
                            if h.has_edge(i, j) {
                                g.col(v).intersection_len(&candidates[i]) < need
                            } else {
                                candidates[i].diff_len(g.col(v)) < need
                            }
                        })
                        .expect("no good vertex means every vertex has a bad group")
                };
                let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); l];
                for &v in &pool {
                    buckets[bad_index(v)].push(v);
                }
                let star = (0..l).max_by_key(|&i| (buckets[i].len(), std::cmp::Reverse(i))).unwrap();
                debug_assert!(buckets[star].len() >= t);
                let picked: Vec<usize> = buckets[star].iter().take(t).copied().collect();
                let cert = if h.has_edge(star, j) {
                    // Bad means few candidate neighbors: the unhit candidates
                    // miss every picked vertex, a co-biclique.
                    let mut hit = BitSet::empty(g.n_top());
                    for &v in &picked {
                        hit = hit.or(&g.col(v).and(&candidates[star]));
                    }
                    let free = candidates[star].diff(&hit);
                    debug_assert!(free.len() >= t);
                    Certificate::new(CertKind::CoBiclique, free.to_vec(), picked)
                } else {
                    // Bad means few candidate non-neighbors: the candidates
                    // hit by all picked vertices form a biclique.
                    let mut common = candidates[star].clone();
                    for &v in &picked {
                        common = common.and(g.col(v));
                    }
                    debug_assert!(common.len() >= t);
                    Certificate::new(CertKind::Biclique, common.to_vec(), picked)
                };
                return Ok(Dichotomy::cert(cert, t_official));
            }
        }
    }
    // All rounds succeeded: one candidate per group embeds the larger part.
    let top_map: Vec<usize> = candidates
        .iter()
        .map(|c| c.first().expect("a candidate survives k rounds"))
        .collect();
    Ok(Dichotomy::Copy(Embedding {
        top_map,
        bottom_map: chosen_bottoms,
    }))
}

//! Generators for the forbidden-pattern families and the fixed small graphs
//! used throughout: two-hub families, single-row patterns, paths, and the
//! four exceptional graphs with parts of size at least 3.

use crate::error::GraphError;
use crate::graph::BipartiteGraph;

/// Two top hubs with disjoint leaf sets of sizes `s1` and `s2`.
/// Bottom layout: `0..s1` are leaves of hub 0, `s1..s1+s2` leaves of hub 1.
pub fn h_family(s1: usize, s2: usize) -> BipartiteGraph {
    let edges = (0..s1)
        .map(|v| (0, v))
        .chain((0..s2).map(|v| (1, s1 + v)));
    BipartiteGraph::from_edges(2, s1 + s2, edges)
}

/// Two top hubs sharing exactly one common leaf, plus `s1`/`s2` private
/// leaves. Bottom layout: privates of hub 0, privates of hub 1, shared last.
pub fn m_family(s1: usize, s2: usize) -> BipartiteGraph {
    let shared = s1 + s2;
    let edges = (0..s1)
        .map(|v| (0, v))
        .chain((0..s2).map(|v| (1, s1 + v)))
        .chain([(0, shared), (1, shared)]);
    BipartiteGraph::from_edges(2, s1 + s2 + 1, edges)
}

/// `m_family` plus one isolated bottom vertex (last index).
pub fn m_star_family(s1: usize, s2: usize) -> BipartiteGraph {
    let m = m_family(s1, s2);
    let edges: Vec<(usize, usize)> = (0..2)
        .flat_map(|u| m.row(u).iter().map(move |v| (u, v)))
        .collect();
    BipartiteGraph::from_edges(2, s1 + s2 + 2, edges)
}

/// One top vertex with `s` neighbors and `t` non-neighbors.
pub fn single_row(s: usize, t: usize) -> BipartiteGraph {
    BipartiteGraph::from_edges(1, s + t, (0..s).map(|v| (0, v)))
}

/// Two disjoint edges; equals `h_family(1, 1)`.
pub fn two_k2() -> BipartiteGraph {
    h_family(1, 1)
}

/// The path on four vertices, oriented as rows `["11", "01"]`;
/// equals `m_family(1, 0)`.
pub fn p4() -> BipartiteGraph {
    BipartiteGraph::from_matrix(&["11", "01"]).unwrap()
}

/// Two adjacent edges sharing a top vertex (one hub with two leaves plus an
/// isolated top vertex); equals `h_family(2, 0)`.
pub fn h4() -> BipartiteGraph {
    BipartiteGraph::from_matrix(&["11", "00"]).unwrap()
}

/// Path on five vertices plus an isolated top vertex; parts (3, 3).
pub fn p5_prime() -> BipartiteGraph {
    BipartiteGraph::from_matrix(&["110", "011", "000"]).unwrap()
}

/// Path on six vertices; parts (3, 3).
pub fn p6() -> BipartiteGraph {
    BipartiteGraph::from_matrix(&["100", "110", "011"]).unwrap()
}

/// The third exceptional graph; parts (3, 4), top degrees 1, 3, 2.
pub fn h_3_4_1() -> BipartiteGraph {
    BipartiteGraph::from_matrix(&["1000", "1110", "0011"]).unwrap()
}

/// Path on seven vertices; parts (3, 4).
pub fn p7() -> BipartiteGraph {
    BipartiteGraph::from_matrix(&["1100", "0110", "0011"]).unwrap()
}

/// The four exceptional strongly acyclic graphs, in a fixed order.
pub fn exceptional() -> [(ExceptionalKind, BipartiteGraph); 4] {
    [
        (ExceptionalKind::P5Prime, p5_prime()),
        (ExceptionalKind::P6, p6()),
        (ExceptionalKind::H341, h_3_4_1()),
        (ExceptionalKind::P7, p7()),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum ExceptionalKind {
    P5Prime,
    P6,
    H341,
    P7,
}

impl std::fmt::Display for ExceptionalKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ExceptionalKind::P5Prime => "P5'",
            ExceptionalKind::P6 => "P6",
            ExceptionalKind::H341 => "H1_3,4",
            ExceptionalKind::P7 => "P7",
        };
        f.write_str(s)
    }
}

/// Path on `i >= 2` vertices, alternating sides so that the layout matches
/// the fixed graphs above for i in {4, 6, 7}.
pub fn path(i: usize) -> Result<BipartiteGraph, GraphError> {
    match i {
        4 => Ok(p4()),
        6 => Ok(p6()),
        7 => Ok(p7()),
        _ => {
            if i < 2 {
                return Err(GraphError::PatternTooLarge);
            }
            // Vertices 0..i along the path; even positions on top.
            let top_of = |pos: usize| pos / 2;
            let bottom_of = |pos: usize| pos / 2;
            let n_top = i.div_ceil(2);
            let n_bottom = i / 2;
            let edges = (0..i - 1).map(|pos| {
                if pos % 2 == 0 {
                    (top_of(pos), bottom_of(pos + 1))
                } else {
                    (top_of(pos + 1), bottom_of(pos))
                }
            });
            Ok(BipartiteGraph::from_edges(n_top, n_bottom, edges))
        }
    }
}

/// Parses the `family:` shorthand used by the CLI:
/// `H,s1,s2` / `M,s1,s2` / `Mstar,s1,s2` / `singlerow,s,t`.
pub fn from_family_spec(spec: &str) -> Result<BipartiteGraph, String> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!(
            "expected `<family>,<a>,<b>` with family in {{H, M, Mstar, singlerow}}, got {spec:?}"
        ));
    }
    let a: usize = parts[1].parse().map_err(|_| format!("bad parameter {:?}", parts[1]))?;
    let b: usize = parts[2].parse().map_err(|_| format!("bad parameter {:?}", parts[2]))?;
    match parts[0] {
        "H" | "h" => Ok(h_family(a, b)),
        "M" | "m" => Ok(m_family(a, b)),
        "Mstar" | "mstar" | "MSTAR" => Ok(m_star_family(a, b)),
        "singlerow" | "SingleRow" => Ok(single_row(a, b)),
        other => Err(format!("unknown family {other:?}")),
    }
}

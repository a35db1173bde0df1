//! Bipartite graphs with distinguished top and bottom parts.
//!
//! Vertices are identified by `(side, index)`; adjacency is stored as one
//! bottom-index bit set per top vertex. Values are immutable after
//! construction: every operation that "modifies" a graph returns a new one.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::GraphError;

/// A bipartite graph `G = ((U, V), E)` with `|U| = n_top`, `|V| = n_bottom`.
#[derive(Debug, Clone)]
pub struct BipartiteGraph {
    n_top: usize,
    n_bottom: usize,
    adj: Vec<BitSet>,
    // Bottom-side rows, built on first use.
    transpose_rows: OnceLock<Vec<BitSet>>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n_top == other.n_top && self.n_bottom == other.n_bottom && self.adj == other.adj
    }
}

impl Eq for BipartiteGraph {}

impl BipartiteGraph {
    /// Builds a graph from adjacency rows. Each row must have capacity `n_bottom`.
    pub fn new(n_top: usize, n_bottom: usize, adj: Vec<BitSet>) -> Self {
        assert_eq!(adj.len(), n_top);
        for row in &adj {
            assert_eq!(row.capacity(), n_bottom);
        }
        BipartiteGraph {
            n_top,
            n_bottom,
            adj,
            transpose_rows: OnceLock::new(),
        }
    }

    pub fn empty(n_top: usize, n_bottom: usize) -> Self {
        Self::new(n_top, n_bottom, vec![BitSet::empty(n_bottom); n_top])
    }

    pub fn complete(n_top: usize, n_bottom: usize) -> Self {
        Self::new(n_top, n_bottom, vec![BitSet::full(n_bottom); n_top])
    }

    pub fn from_edges(
        n_top: usize,
        n_bottom: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut adj = vec![BitSet::empty(n_bottom); n_top];
        for (u, v) in edges {
            assert!(u < n_top && v < n_bottom, "edge ({u},{v}) out of range");
            adj[u].insert(v);
        }
        Self::new(n_top, n_bottom, adj)
    }

    /// Parses rows of `'0'`/`'1'` characters, one row per top vertex.
    pub fn from_matrix<S: AsRef<str>>(rows: &[S]) -> Result<Self, GraphError> {
        let n_top = rows.len();
        let n_bottom = rows.first().map_or(0, |r| r.as_ref().len());
        let mut adj = Vec::with_capacity(n_top);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_bottom {
                return Err(GraphError::RaggedInput {
                    row: i,
                    expected: n_bottom,
                    got: row.len(),
                });
            }
            let mut bits = BitSet::empty(n_bottom);
            for (j, c) in row.chars().enumerate() {
                match c {
                    '1' => bits.insert(j),
                    '0' => {}
                    other => return Err(GraphError::BadChar { row: i, col: j, ch: other }),
                }
            }
            adj.push(bits);
        }
        Ok(Self::new(n_top, n_bottom, adj))
    }

    /// Parses a newline-separated matrix, ignoring blank lines and surrounding whitespace.
    pub fn from_matrix_text(text: &str) -> Result<Self, GraphError> {
        let rows: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        Self::from_matrix(&rows)
    }

    pub fn to_matrix_text(&self) -> String {
        let mut out = String::with_capacity(self.n_top * (self.n_bottom + 1));
        for row in &self.adj {
            for j in 0..self.n_bottom {
                out.push(if row.contains(j) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighborhood of top vertex `u` as a bottom-index set.
    pub fn row(&self, u: usize) -> &BitSet {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Neighborhood of bottom vertex `v` as a top-index set.
    pub fn col(&self, v: usize) -> &BitSet {
        &self.transpose_rows()[v]
    }

    pub fn bottom_degree(&self, v: usize) -> usize {
        self.col(v).len()
    }

    fn transpose_rows(&self) -> &Vec<BitSet> {
        self.transpose_rows.get_or_init(|| {
            let mut cols = vec![BitSet::empty(self.n_top); self.n_bottom];
            for (u, row) in self.adj.iter().enumerate() {
                for v in row.iter() {
                    cols[v].insert(u);
                }
            }
            cols
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::len).sum()
    }

    /// Union of neighborhoods of the given top vertices.
    pub fn neighborhood_of(&self, tops: &BitSet) -> BitSet {
        let mut out = BitSet::empty(self.n_bottom);
        for u in tops.iter() {
            out = out.or(&self.adj[u]);
        }
        out
    }

    /// The bipartite complement: same parts, edge set `(U x V) \ E`.
    pub fn bipartite_complement(&self) -> BipartiteGraph {
        Self::new(
            self.n_top,
            self.n_bottom,
            self.adj.iter().map(BitSet::complement).collect(),
        )
    }

    /// Swaps the two sides.
    pub fn transpose(&self) -> BipartiteGraph {
        Self::new(
            self.n_bottom,
            self.n_top,
            self.transpose_rows().clone(),
        )
    }

    /// Subgraph induced by `tops x bottoms`, reindexed consecutively.
    /// Returns the graph along with the original indices of its vertices.
    pub fn induced(&self, tops: &BitSet, bottoms: &BitSet) -> (BipartiteGraph, Vec<usize>, Vec<usize>) {
        let top_ids = tops.to_vec();
        let bottom_ids = bottoms.to_vec();
        let mut adj = Vec::with_capacity(top_ids.len());
        for &u in &top_ids {
            let mut row = BitSet::empty(bottom_ids.len());
            for (j, &v) in bottom_ids.iter().enumerate() {
                if self.has_edge(u, v) {
                    row.insert(j);
                }
            }
            adj.push(row);
        }
        (
            Self::new(top_ids.len(), bottom_ids.len(), adj),
            top_ids,
            bottom_ids,
        )
    }
}

/// Serialized form: `{"n_top", "n_bottom", "rows": ["01...", ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n_top: usize,
    n_bottom: usize,
    rows: Vec<String>,
}

impl Serialize for BipartiteGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows = (0..self.n_top)
            .map(|u| {
                (0..self.n_bottom)
                    .map(|v| if self.has_edge(u, v) { '1' } else { '0' })
                    .collect()
            })
            .collect();
        GraphJson {
            n_top: self.n_top,
            n_bottom: self.n_bottom,
            rows,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BipartiteGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        if raw.rows.len() != raw.n_top {
            return Err(serde::de::Error::custom("row count does not match n_top"));
        }
        let g = BipartiteGraph::from_matrix(&raw.rows).map_err(serde::de::Error::custom)?;
        if g.n_bottom != raw.n_bottom {
            return Err(serde::de::Error::custom("row length does not match n_bottom"));
        }
        Ok(g)
    }
}

/// A side-respecting induced embedding of a pattern into a host graph.
///
/// For every pattern pair `(u, v)`: `uv` is a pattern edge iff
/// `(top_map[u], bottom_map[v])` is a host edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub top_map: Vec<usize>,
    pub bottom_map: Vec<usize>,
}

/// An even cycle, listed as alternating top/bottom vertices `u1,v1,...,um,vm`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    /// `(top, bottom)` pairs in cycle order; consecutive pairs and the
    /// wrap-around pair are joined by edges.
    pub vertices: Vec<(usize, usize)>,
}

impl CycleWitness {
    pub fn length(&self) -> usize {
        2 * self.vertices.len()
    }

    /// Checks the witness against a graph: all vertices distinct, length >= 4,
    /// and every consecutive (and wrap-around) pair is an edge.
    pub fn verify(&self, g: &BipartiteGraph) -> bool {
        let m = self.vertices.len();
        if m < 2 {
            return false;
        }
        let tops: Vec<usize> = self.vertices.iter().map(|&(u, _)| u).collect();
        let bottoms: Vec<usize> = self.vertices.iter().map(|&(_, v)| v).collect();
        let mut t = tops.clone();
        let mut b = bottoms.clone();
        t.sort_unstable();
        t.dedup();
        b.sort_unstable();
        b.dedup();
        if t.len() != m || b.len() != m {
            return false;
        }
        if tops.iter().any(|&u| u >= g.n_top()) || bottoms.iter().any(|&v| v >= g.n_bottom()) {
            return false;
        }
        // Edges u_i v_i and v_i u_{i+1} (wrapping).
        (0..m).all(|i| g.has_edge(tops[i], bottoms[i]) && g.has_edge(tops[(i + 1) % m], bottoms[i]))
    }
}

/// Shortest cycle via BFS from every top vertex, or `None` for a forest.
pub fn shortest_cycle(g: &BipartiteGraph) -> Option<CycleWitness> {
    // Vertices 0..n_top are tops, n_top..n_top+n_bottom are bottoms.
    let n = g.n_top() + g.n_bottom();
    let mut best: Option<Vec<usize>> = None;

    for start in 0..g.n_top() {
        // BFS that remembers parents; a non-parent edge closing two BFS
        // branches of the same root yields a cycle through their meeting.
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        'bfs: while let Some(x) = queue.pop_front() {
            let neighbors: Vec<usize> = if x < g.n_top() {
                g.row(x).iter().map(|v| v + g.n_top()).collect()
            } else {
                g.col(x - g.n_top()).iter().collect()
            };
            for y in neighbors {
                if y == parent[x] {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else {
                    // Cycle through x and y; reconstruct both root paths.
                    let mut px = path_to_root(x, &parent);
                    let mut py = path_to_root(y, &parent);
                    // Drop the common prefix above the meeting vertex.
                    while px.len() >= 2
                        && py.len() >= 2
                        && px[px.len() - 1] == py[py.len() - 1]
                        && px[px.len() - 2] == py[py.len() - 2]
                    {
                        px.pop();
                        py.pop();
                    }
                    if px.last() != py.last() {
                        continue; // not a simple cycle through this edge
                    }
                    py.pop();
                    py.reverse();
                    px.extend(py);
                    let cycle = px;
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                    continue 'bfs;
                }
            }
        }
    }

    best.map(|cycle| {
        // Rotate so a top vertex leads, then pair up (top, bottom).
        let k = cycle.iter().position(|&x| x < g.n_top()).unwrap();
        let rotated: Vec<usize> = cycle[k..].iter().chain(&cycle[..k]).copied().collect();
        let vertices = rotated
            .chunks(2)
            .map(|c| (c[0], c[1] - g.n_top()))
            .collect();
        CycleWitness { vertices }
    })
}

fn path_to_root(mut x: usize, parent: &[usize]) -> Vec<usize> {
    let mut path = vec![x];
    while parent[x] != usize::MAX {
        x = parent[x];
        path.push(x);
    }
    path
}

/// Searches for a side-respecting induced copy of `pattern` in `host`.
///
/// Backtracking over injective top assignments, pattern rows in descending
/// degree order; bottom vertices are matched by adjacency signature once all
/// tops are placed. Intended for desk-scale patterns (a few vertices per side).
pub fn find_induced_copy(
    host: &BipartiteGraph,
    pattern: &BipartiteGraph,
) -> Result<Option<Embedding>, GraphError> {
    if pattern.n_top() > host.n_top() || pattern.n_bottom() > host.n_bottom() {
        return Err(GraphError::PatternTooLarge);
    }
    let k = pattern.n_top();

    // Order pattern tops by descending degree; high-degree rows constrain most.
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&u| (std::cmp::Reverse(pattern.degree(u)), u));

    let mut assignment = vec![usize::MAX; k];
    let mut used = vec![false; host.n_top()];
    let found = assign_tops(host, pattern, &order, 0, &mut assignment, &mut used);
    Ok(found.map(|bottom_map| Embedding {
        top_map: assignment,
        bottom_map,
    }))
}

fn assign_tops(
    host: &BipartiteGraph,
    pattern: &BipartiteGraph,
    order: &[usize],
    depth: usize,
    assignment: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> Option<Vec<usize>> {
    if depth == order.len() {
        return match_bottoms(host, pattern, assignment);
    }
    let pu = order[depth];
    let need_deg = pattern.degree(pu);
    let need_nondeg = pattern.n_bottom() - need_deg;
    for h in 0..host.n_top() {
        if used[h] {
            continue;
        }
        // A host top needs enough neighbors and non-neighbors overall.
        if host.degree(h) < need_deg || host.n_bottom() - host.degree(h) < need_nondeg {
            continue;
        }
        assignment[pu] = h;
        used[h] = true;
        if let Some(b) = assign_tops(host, pattern, order, depth + 1, assignment, used) {
            return Some(b);
        }
        used[h] = false;
        assignment[pu] = usize::MAX;
    }
    None
}

/// With all pattern tops placed, each pattern bottom requires a host bottom
/// whose adjacency restricted to the chosen tops equals the pattern column.
/// Distinct signatures have disjoint candidate pools, so a greedy assignment
/// per signature class suffices.
fn match_bottoms(
    host: &BipartiteGraph,
    pattern: &BipartiteGraph,
    top_map: &[usize],
) -> Option<Vec<usize>> {
    let k = pattern.n_top();
    let l = pattern.n_bottom();
    let signature = |pv: usize| -> u64 {
        (0..k)
            .map(|pu| (pattern.has_edge(pu, pv) as u64) << pu)
            .sum()
    };
    let host_signature = |hv: usize| -> u64 {
        (0..k)
            .map(|pu| (host.has_edge(top_map[pu], hv) as u64) << pu)
            .sum()
    };

    let mut bottom_map = vec![usize::MAX; l];
    let mut classes: std::collections::HashMap<u64, Vec<usize>> = std::collections::HashMap::new();
    for pv in 0..l {
        classes.entry(signature(pv)).or_default().push(pv);
    }
    let mut taken = vec![false; host.n_bottom()];
    for (sig, members) in classes {
        let mut candidates = (0..host.n_bottom()).filter(|&hv| !taken[hv] && host_signature(hv) == sig);
        for pv in members {
            match candidates.next() {
                Some(hv) => {
                    bottom_map[pv] = hv;
                }
                None => return None,
            }
        }
        for &hv in bottom_map.iter().filter(|&&hv| hv != usize::MAX) {
            taken[hv] = true;
        }
    }
    Some(bottom_map)
}

//! Rooted trees and the handle-peeling split: every rooted tree on `n`
//! vertices has either a root-to-descendant path on at least `ceil(n/4)`
//! vertices or two independent subforests of that size each.

use serde::{Deserialize, Serialize};

/// A rooted tree as a parent array with `parent[root] == root`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedTree {
    parent: Vec<usize>,
}

impl RootedTree {
    /// Validates that there is exactly one root and every vertex reaches it.
    pub fn new(parent: Vec<usize>) -> Result<RootedTree, String> {
        let n = parent.len();
        if n == 0 {
            return Err("tree must have at least one vertex".into());
        }
        let roots: Vec<usize> = (0..n).filter(|&i| parent[i] == i).collect();
        if roots.len() != 1 {
            return Err(format!("expected exactly one root, found {}", roots.len()));
        }
        if parent.iter().any(|&p| p >= n) {
            return Err("parent index out of range".into());
        }
        let t = RootedTree { parent };
        // Connectivity from the root implies acyclicity for n-1 edges.
        let mut seen = vec![false; n];
        let mut stack = vec![roots[0]];
        seen[roots[0]] = true;
        let children = t.children_lists();
        while let Some(x) = stack.pop() {
            for &c in &children[x] {
                if !seen[c] {
                    seen[c] = true;
                    stack.push(c);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(t)
        } else {
            Err("not all vertices reach the root".into())
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn root(&self) -> usize {
        (0..self.parent.len())
            .find(|&i| self.parent[i] == i)
            .expect("validated tree has a root")
    }

    pub fn parent_of(&self, v: usize) -> usize {
        self.parent[v]
    }

    pub fn children_lists(&self) -> Vec<Vec<usize>> {
        let mut children = vec![Vec::new(); self.parent.len()];
        for (v, &p) in self.parent.iter().enumerate() {
            if p != v {
                children[p].push(v);
            }
        }
        children
    }

    /// Preorder entry/exit times; `x` is an ancestor of `y` (inclusive) iff
    /// `tin[x] <= tin[y] < tout[x]`.
    pub fn preorder_intervals(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.parent.len();
        let children = self.children_lists();
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut clock = 0;
        // Iterative DFS with explicit exit records.
        let mut stack = vec![(self.root(), false)];
        while let Some((x, exiting)) = stack.pop() {
            if exiting {
                tout[x] = clock;
            } else {
                tin[x] = clock;
                clock += 1;
                stack.push((x, true));
                for &c in children[x].iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        (tin, tout)
    }

    /// Strict-or-equal ancestor test via precomputed intervals.
    pub fn is_ancestor(tin: &[usize], tout: &[usize], x: usize, y: usize) -> bool {
        tin[x] <= tin[y] && tin[y] < tout[x]
    }
}

/// Result of [`tree_split`]: either a long root-to-descendant path or two
/// independent subforests (no vertex of one is an ancestor of a vertex of
/// the other), each on at least `ceil(n/4)` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TreeSplit {
    HandlePath(Vec<usize>),
    Forests { a: Vec<usize>, b: Vec<usize> },
}

/// Peels handles from the root, descending into the largest remaining
/// component, until the remainder is a star; if the accumulated path is
/// short, balances the side components into two groups by an exact
/// subset-sum partition.
pub fn tree_split(tree: &RootedTree) -> TreeSplit {
    let n = tree.len();
    let children = tree.children_lists();
    let mut subtree_size = vec![1usize; n];
    // Sizes via reverse preorder accumulation.
    let (tin, _) = tree.preorder_intervals();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(tin[v]));
    for &v in &order {
        for &c in &children[v] {
            subtree_size[v] += subtree_size[c];
        }
    }

    let mut path = Vec::new();
    let mut side_components: Vec<usize> = Vec::new(); // component roots
    let mut cur = tree.root();
    loop {
        // Handle: the maximal chain of unique children from the current root.
        path.push(cur);
        while children[cur].len() == 1 {
            cur = children[cur][0];
            path.push(cur);
        }
        let comps = &children[cur];
        if comps.is_empty() {
            break;
        }
        let largest = *comps
            .iter()
            .max_by_key(|&&c| (subtree_size[c], std::cmp::Reverse(c)))
            .unwrap();
        if subtree_size[largest] == 1 {
            // The remainder is a star: all children become side components.
            side_components.extend(comps.iter().copied());
            break;
        }
        side_components.extend(comps.iter().filter(|&&c| c != largest));
        cur = largest;
    }

    let threshold = n.div_ceil(4);
    if path.len() >= threshold {
        return TreeSplit::HandlePath(path);
    }

    // Balance the component sizes into two groups; with the path shorter
    // than n/4 and every component at most half its stage, the closest
    // partition puts at least ceil(n/4) vertices on each side.
    let sizes: Vec<usize> = side_components.iter().map(|&r| subtree_size[r]).collect();
    let pick = closest_partition(&sizes);
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (idx, &root) in side_components.iter().enumerate() {
        let out = if pick[idx] { &mut a } else { &mut b };
        collect_subtree(root, &children, out);
    }
    debug_assert!(a.len() >= threshold && b.len() >= threshold);
    TreeSplit::Forests { a, b }
}

fn collect_subtree(root: usize, children: &[Vec<usize>], out: &mut Vec<usize>) {
    let mut stack = vec![root];
    while let Some(x) = stack.pop() {
        out.push(x);
        stack.extend(children[x].iter().copied());
    }
}

/// Chooses a subset whose sum is as close as possible to half the total
/// (exact subset-sum dynamic program). Returns membership flags; the chosen
/// subset is the one with the smaller-or-equal sum.
fn closest_partition(sizes: &[usize]) -> Vec<bool> {
    let total: usize = sizes.iter().sum();
    let half = total / 2;
    // reachable[i] = sums achievable with the first i items.
    let words = half / 64 + 1;
    let mut layers: Vec<Vec<u64>> = Vec::with_capacity(sizes.len() + 1);
    let mut cur = vec![0u64; words];
    cur[0] = 1;
    layers.push(cur.clone());
    for &s in sizes {
        let prev = cur.clone();
        if s <= half {
            // cur |= prev << s, truncated to half.
            let (wshift, bshift) = (s / 64, s % 64);
            for w in (wshift..words).rev() {
                let mut v = prev[w - wshift] << bshift;
                if bshift > 0 && w > wshift {
                    v |= prev[w - wshift - 1] >> (64 - bshift);
                }
                cur[w] |= v;
            }
            if half % 64 != 63 {
                let last = words - 1;
                cur[last] &= (1u64 << (half % 64 + 1)) - 1;
            }
        }
        layers.push(cur.clone());
    }
    let get = |layer: &Vec<u64>, s: usize| layer[s / 64] >> (s % 64) & 1 == 1;
    let best = (0..=half).rev().find(|&s| get(&cur, s)).unwrap_or(0);

    // Reconstruct which items were used, scanning items backwards and
    // skipping an item whenever the remaining sum is reachable without it.
    let mut pick = vec![false; sizes.len()];
    let mut s = best;
    for i in (0..sizes.len()).rev() {
        if !get(&layers[i], s) {
            pick[i] = true;
            s -= sizes[i];
        }
    }
    debug_assert_eq!(s, 0);
    pick
}

/// Checks a split against its tree: used by tests and the harness.
pub fn verify_tree_split(tree: &RootedTree, split: &TreeSplit) -> bool {
    let n = tree.len();
    let threshold = n.div_ceil(4);
    match split {
        TreeSplit::HandlePath(path) => {
            if path.len() < threshold || path.first() != Some(&tree.root()) {
                return false;
            }
            path.windows(2).all(|w| tree.parent_of(w[1]) == w[0])
        }
        TreeSplit::Forests { a, b } => {
            if a.len() < threshold || b.len() < threshold {
                return false;
            }
            let in_a: std::collections::HashSet<_> = a.iter().collect();
            if b.iter().any(|v| in_a.contains(v)) {
                return false;
            }
            let (tin, tout) = tree.preorder_intervals();
            for &x in a {
                for &y in b {
                    if RootedTree::is_ancestor(&tin, &tout, x, y)
                        || RootedTree::is_ancestor(&tin, &tout, y, x)
                    {
                        return false;
                    }
                }
            }
            true
        }
    }
}

//! Maximum matching in general graphs (Edmonds' blossom algorithm) and the
//! minimum edge cover derived from it.

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// In the decider the vertices stand for the surviving disks that have a
/// neighbor within `2r`, and an edge joins two disks that one ball of radius
/// `r` can reach simultaneously.
#[derive(Debug, Clone, Default)]
pub struct ProximityGraph {
    /// Object index of each vertex in the caller's numbering.
    pub labels: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl ProximityGraph {
    /// Graph on `n` vertices labelled `0..n`. Self loops and repeated edges
    /// are dropped.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Self::with_labels((0..n).collect(), edges)
    }

    pub fn with_labels(labels: Vec<usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        let mut kept = Vec::new();
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            if u == v || adj[u].contains(&v) {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
            kept.push((u.min(v), u.max(v)));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        ProximityGraph { labels, edges: kept, adj }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

/// Maximum-cardinality matching; `mate[v]` is `v`'s partner.
pub fn maximum_matching(g: &ProximityGraph) -> Vec<Option<usize>> {
    Blossom::new(g).run()
}

struct Blossom<'a> {
    g: &'a ProximityGraph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a ProximityGraph) -> Self {
        let n = g.len();
        Blossom {
            g,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn run(mut self) -> Vec<Option<usize>> {
        // Greedy warm start; augmenting paths fix any suboptimality.
        for v in 0..self.g.len() {
            if self.mate[v].is_none() {
                if let Some(&w) = self.g.neighbors(v).iter().find(|&&w| self.mate[w].is_none()) {
                    self.mate[v] = Some(w);
                    self.mate[w] = Some(v);
                }
            }
        }
        for root in 0..self.g.len() {
            if self.mate[root].is_some() {
                continue;
            }
            let mut end = self.find_augmenting_path(root);
            while let Some(v) = end {
                let pv = self.parent[v].expect("augmenting path has parents");
                let next = self.mate[pv];
                self.mate[v] = Some(pv);
                self.mate[pv] = Some(v);
                end = next;
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("outer vertex has a parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let m = self.mate[b].expect("path reaches the root");
            b = self.parent[m].expect("outer vertex has a parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom vertices are matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("outer vertex has a parent");
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for idx in 0..self.g.neighbors(v).len() {
                let to = self.g.neighbors(v)[idx];
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer = to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Minimum edge cover: a maximum matching plus, for every unmatched vertex,
/// its edge to the lowest-numbered neighbor. Its size is `|V| - |M|`.
pub fn min_edge_cover(g: &ProximityGraph) -> Result<Vec<(usize, usize)>> {
    if let Some(v) = (0..g.len()).find(|&v| g.neighbors(v).is_empty()) {
        return Err(Error::IsolatedVertex(v));
    }
    let mate = maximum_matching(g);
    let mut cover = Vec::new();
    for (v, m) in mate.iter().enumerate() {
        match *m {
            Some(w) if v < w => cover.push((v, w)),
            Some(_) => {}
            None => cover.push((v.min(g.neighbors(v)[0]), v.max(g.neighbors(v)[0]))),
        }
    }
    Ok(cover)
}

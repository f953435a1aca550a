//! Edmonds' blossom algorithm, augmenting-path form, O(V^3).

use std::collections::VecDeque;

use crate::graph::{SimpleGraph, Vertex};

pub(crate) const NONE: usize = usize::MAX;

pub(crate) struct Blossom {
    adj: Vec<Vec<Vertex>>,
    pub(crate) mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl Blossom {
    /// Search state over `g` with `excluded` treated as deleted.
    pub(crate) fn new(g: &SimpleGraph, excluded: Option<Vertex>) -> Self {
        let n = g.n_vertices();
        let adj = (0..n)
            .map(|v| {
                if Some(v) == excluded {
                    Vec::new()
                } else {
                    g.neighbors(v).filter(|&u| Some(u) != excluded).collect()
                }
            })
            .collect();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    pub(crate) fn greedy_init(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&u) = self.adj[v].iter().find(|&&u| self.mate[u] == NONE) {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    pub(crate) fn solve(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
    }

    fn lca(&self, a: Vertex, b: Vertex) -> Vertex {
        let mut seen = vec![false; self.adj.len()];
        let mut a = a;
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from the exposed vertex `root`; returns its other end.
    pub(crate) fn find_path(&mut self, root: Vertex) -> Option<Vertex> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for k in 0..self.adj[v].len() {
                let to = self.adj[v][k];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract into its base
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    pub(crate) fn augment(&mut self, mut v: Vertex) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

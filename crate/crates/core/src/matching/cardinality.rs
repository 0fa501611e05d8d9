//! Maximum-cardinality matching in general graphs (Edmonds' blossom
//! shrinking with BFS augmenting-path search, O(V^3)).

use std::collections::VecDeque;

use super::graph::WeightedGraph;

const NONE: usize = usize::MAX;

struct Search<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Self {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_ancestor(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, blossom_base: usize, mut child: usize) {
        while self.base[v] != blossom_base {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_ancestor(v, to);
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
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

fn adjacency(g: &WeightedGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.num_vertices()];
    for &(u, v, _) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Mates of a maximum-cardinality matching of `g`.
pub(crate) fn max_cardinality_mates(g: &WeightedGraph) -> Vec<Option<usize>> {
    let adj = adjacency(g);
    let mut search = Search::new(&adj);
    // Greedy start; augmenting paths take care of the rest.
    for (v, nbrs) in adj.iter().enumerate() {
        if search.mate[v] == NONE {
            if let Some(&u) = nbrs.iter().find(|&&u| search.mate[u] == NONE) {
                search.mate[v] = u;
                search.mate[u] = v;
            }
        }
    }
    for root in 0..adj.len() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_path(root) {
                search.augment(end);
            }
        }
    }
    search
        .mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

/// True iff `g` has a matching covering every vertex. The empty graph does.
pub fn has_perfect_matching(g: &WeightedGraph) -> bool {
    if g.num_vertices() % 2 == 1 {
        return false;
    }
    max_cardinality_mates(g).iter().all(Option::is_some)
}

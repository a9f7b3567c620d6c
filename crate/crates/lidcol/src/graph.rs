//! Immutable simple undirected graphs with the neighbourhood queries and
//! vertex orderings (smallest-last degeneracy, maximum cardinality search)
//! that drive the constructive colouring algorithms.

use crate::Error;

/// Vertices are dense integer ids `0..n`.
pub type Vertex = usize;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse to one
    /// edge; self-loops and out-of-range endpoints are input errors.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, Error> {
        if n == 0 {
            return Err(Error::invalid_input("vertex count must be positive"));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid_input(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::invalid_input(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Sorted open neighbourhood N(v).
    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as ordered pairs (u, v) with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sorted closed neighbourhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighbourhood(&self, v: Vertex) -> Vec<Vertex> {
        assert!(v < self.n(), "vertex {v} out of range");
        let mut nb = self.adj[v].clone();
        let at = nb.binary_search(&v).unwrap_err();
        nb.insert(at, v);
        nb
    }

    /// Sorted set of vertices at graph distance exactly 2 from v.
    pub fn distance_two_set(&self, v: Vertex) -> Vec<Vertex> {
        assert!(v < self.n(), "vertex {v} out of range");
        let mut seen = vec![false; self.n()];
        seen[v] = true;
        for &u in &self.adj[v] {
            seen[u] = true;
        }
        let mut out = Vec::new();
        for &u in &self.adj[v] {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True iff N[u] = N[v] (the identification-exempt "closed twins" case).
    pub fn closed_twins(&self, u: Vertex, v: Vertex) -> bool {
        assert!(u != v, "closed_twins needs two distinct vertices");
        self.closed_neighbourhood(u) == self.closed_neighbourhood(v)
    }

    /// Smallest-last removal order: repeatedly delete a minimum-degree
    /// vertex (ties to the smallest id). The width is the degeneracy.
    pub fn degeneracy_ordering(&self) -> EliminationOrder {
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut width = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            width = width.max(deg[v]);
            removed[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        EliminationOrder {
            order,
            width,
            kind: OrderKind::Degeneracy,
        }
    }

    /// Maximum cardinality search. Returns the visit order, whose reverse is
    /// a perfect elimination ordering iff the graph is chordal; `None` when
    /// the clique verification of that ordering fails.
    pub fn chordal_peo(&self) -> Option<EliminationOrder> {
        let n = self.n();
        let mut label = vec![0usize; n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            // max label, ties to smallest id
            let v = (0..n)
                .filter(|&v| !visited[v])
                .max_by(|&a, &b| label[a].cmp(&label[b]).then(b.cmp(&a)))
                .unwrap();
            visited[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !visited[u] {
                    label[u] += 1;
                }
            }
        }
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // Reverse visit order = candidate PEO. A vertex's neighbours that
        // come later in the PEO are exactly its earlier-visited neighbours;
        // they must form a clique.
        let mut width = 0;
        for &v in &order {
            let earlier: Vec<Vertex> = self.adj[v]
                .iter()
                .copied()
                .filter(|&u| pos[u] < pos[v])
                .collect();
            width = width.max(earlier.len());
            for (i, &a) in earlier.iter().enumerate() {
                for &b in &earlier[i + 1..] {
                    if !self.has_edge(a, b) {
                        return None;
                    }
                }
            }
        }
        Some(EliminationOrder {
            order,
            width,
            kind: OrderKind::ChordalPeo,
        })
    }

    /// Clique number of a chordal graph from a verified PEO:
    /// 1 + the largest set of already-visited neighbours at any step.
    pub fn clique_number_chordal(&self, peo: &EliminationOrder) -> Result<usize, Error> {
        if peo.kind != OrderKind::ChordalPeo {
            return Err(Error::invalid_input("ordering is not a chordal PEO"));
        }
        let n = self.n();
        if peo.order.len() != n || !is_permutation(&peo.order, n) {
            return Err(Error::invalid_input("ordering is not a vertex permutation"));
        }
        let mut pos = vec![0usize; n];
        for (i, &v) in peo.order.iter().enumerate() {
            pos[v] = i;
        }
        let mut best = 0;
        for &v in &peo.order {
            let earlier: Vec<Vertex> = self.adj[v]
                .iter()
                .copied()
                .filter(|&u| pos[u] < pos[v])
                .collect();
            for (i, &a) in earlier.iter().enumerate() {
                for &b in &earlier[i + 1..] {
                    if !self.has_edge(a, b) {
                        return Err(Error::invalid_input(
                            "ordering fails the perfect elimination clique test",
                        ));
                    }
                }
            }
            best = best.max(earlier.len());
        }
        Ok(best + 1)
    }

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraph on `vertices` (must be sorted); vertex i of the
    /// result is vertices[i].
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                if local[u] != usize::MAX && local[u] > i {
                    edges.push((i, local[u]));
                }
            }
        }
        Graph::from_edge_list(vertices.len(), &edges).expect("induced subgraph is valid")
    }
}

fn is_permutation(order: &[Vertex], n: usize) -> bool {
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Degeneracy,
    ChordalPeo,
}

/// A vertex ordering together with its width. For `Degeneracy` the order is
/// the removal order and the width is the degeneracy; for `ChordalPeo` the
/// order is the MCS visit order (its reverse is the perfect elimination
/// ordering) and the width is ω − 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    pub order: Vec<Vertex>,
    pub width: usize,
    pub kind: OrderKind,
}

//! Simple undirected connected graphs in canonical form.
//!
//! Edges are stored with the smaller endpoint first and sorted
//! lexicographically, which makes file output and edge indexing
//! reproducible bit for bit.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected connected graph.
///
/// Immutable after construction and safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// For each vertex, the canonical edge index of the edge to the
    /// corresponding neighbor in `adj`.
    inc: Vec<Vec<usize>>,
}

impl Graph {
    /// Validate and canonicalize an edge list into a `Graph`.
    ///
    /// Rejects self-loops, duplicate edges, out-of-range endpoints, and
    /// disconnected inputs, each with an error naming the offending item.
    pub fn build(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidFamilyParams {
                family: "graph",
                reason: "vertex count must be at least 1".into(),
            });
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].0, w[0].1));
            }
        }

        let mut adj = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            inc[u].push(idx);
            adj[v].push(u);
            inc[v].push(idx);
        }
        // neighbor lists come out sorted except for the low-endpoint runs;
        // sort jointly so adj and inc stay aligned
        for v in 0..n {
            let mut pairs: Vec<(usize, usize)> =
                adj[v].iter().copied().zip(inc[v].iter().copied()).collect();
            pairs.sort_unstable();
            adj[v] = pairs.iter().map(|p| p.0).collect();
            inc[v] = pairs.iter().map(|p| p.1).collect();
        }

        let g = Graph { n, edges, adj, inc };
        if let Some(unreached) = g.first_unreached() {
            return Err(Error::Disconnected { unreached });
        }
        debug_assert_eq!(g.adj.iter().map(Vec::len).sum::<usize>(), 2 * g.edges.len());
        Ok(g)
    }

    fn first_unreached(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Canonical edge indices incident to `v`, aligned with `neighbors(v)`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    /// Canonical index of edge `(u, v)`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let i = self.adj[u].binary_search(&v).ok()?;
        Some(self.inc[u][i])
    }

    /// Connected graphs are trees exactly when m = n - 1.
    pub fn is_tree(&self) -> bool {
        self.edges.len() == self.n - 1
    }

    pub fn min_endpoint_degree(&self, edge: usize) -> usize {
        let (u, v) = self.edges[edge];
        self.degree(u).min(self.degree(v))
    }

    pub fn max_endpoint_degree(&self, edge: usize) -> usize {
        let (u, v) = self.edges[edge];
        self.degree(u).max(self.degree(v))
    }

    /// Serialize as `{"n": .., "edges": [[u, v], ..]}` plus an optional
    /// provenance object.
    pub fn write_json<W: Write>(&self, w: W, provenance: Option<serde_json::Value>) -> Result<()> {
        let file = GraphFile {
            n: self.n,
            edges: self.edges.clone(),
            provenance,
        };
        serde_json::to_writer_pretty(w, &file)
            .map_err(|e| Error::NonCanonicalGraph { reason: e.to_string() })
    }

    /// Read a graph file, rejecting non-canonical edge lists.
    pub fn read_json<R: Read>(r: R) -> Result<Graph> {
        let file: GraphFile = serde_json::from_reader(r)
            .map_err(|e| Error::NonCanonicalGraph { reason: e.to_string() })?;
        for (i, w) in file.edges.windows(2).enumerate() {
            if w[0] >= w[1] {
                return Err(Error::NonCanonicalGraph {
                    reason: format!("edges {} and {} are not in sorted order", i, i + 1),
                });
            }
        }
        for (i, &(u, v)) in file.edges.iter().enumerate() {
            if u >= v {
                return Err(Error::NonCanonicalGraph {
                    reason: format!("edge {i} is not stored smaller endpoint first"),
                });
            }
        }
        Graph::build(file.n, &file.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<serde_json::Value>,
}

//! Undirected simple graphs, the DIMACS edge format, and metric queries.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted ascending, so every traversal is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from 0-indexed edges, rejecting loops, repeats and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (v, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Precondition(format!("duplicate edge at vertex {v}")));
            }
        }
        Ok(Graph { adjacency })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances(0).iter().all(Option::is_some)
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        self.distances(v)
            .into_iter()
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            .ok_or(Error::Disconnected)
    }

    /// Largest pairwise distance, computed by one BFS per vertex.
    pub fn diameter(&self) -> Result<usize> {
        (0..self.n()).try_fold(0, |acc, v| Ok(acc.max(self.eccentricity(v)?)))
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// One BFS per root; a non-tree edge `uv` met from root `s` closes a
    /// closed walk of length `d(u) + d(v) + 1` containing a cycle at most
    /// that long, and the shortest cycle is found exactly from any of its
    /// vertices.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // Any cycle closed from here on has length at least 2 d(u).
                    if 2 * dist[u] >= b {
                        break 'bfs;
                    }
                }
                for &v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// True when the graph has no cycle shorter than 5.
    pub fn has_girth_at_least_five(&self) -> bool {
        self.girth().is_none_or(|g| g >= 5)
    }

    /// Shared precondition of every construction: connected, girth >= 5.
    pub fn require_connected_girth_five(&self) -> Result<()> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        match self.girth() {
            Some(girth) if girth < 5 => Err(Error::GirthTooSmall { girth }),
            _ => Ok(()),
        }
    }

    /// The subgraph induced by `keep`, relabelled `0..keep.len()` in the
    /// given order. Returns the graph and the map new index -> old vertex.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self
                    .neighbors(v)
                    .iter()
                    .filter(|&&u| index[u] != usize::MAX)
                    .map(|&u| index[u])
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        (Graph { adjacency }, keep.to_vec())
    }

    /// The graph obtained by renaming vertex `v` to `image[v]`.
    pub fn relabel(&self, image: &[usize]) -> Graph {
        let mut adjacency = vec![Vec::new(); self.n()];
        for (u, v) in self.edges() {
            adjacency[image[u]].push(image[v]);
            adjacency[image[v]].push(image[u]);
        }
        adjacency.iter_mut().for_each(|l: &mut Vec<usize>| l.sort_unstable());
        Graph { adjacency }
    }

    /// Parses the DIMACS edge format: optional `c` comment lines, one
    /// `p edge <n> <m>` header, then `m` lines `e <u> <v>` with 1-indexed
    /// endpoints.
    pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut adjacency: Vec<Vec<usize>> = Vec::new();
        let mut found = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                continue;
            }
            let malformed = || ParseError::Malformed {
                line,
                content: trimmed.to_string(),
            };
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match fields.as_slice() {
                ["p", kind, n, m] if *kind == "edge" || *kind == "col" => {
                    if header.is_some() {
                        return Err(ParseError::DuplicateHeader { line });
                    }
                    let n: usize = n.parse().map_err(|_| malformed())?;
                    let m: usize = m.parse().map_err(|_| malformed())?;
                    header = Some((n, m));
                    adjacency = vec![Vec::new(); n];
                }
                ["e", u, v] => {
                    let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                    let u: usize = u.parse().map_err(|_| malformed())?;
                    let v: usize = v.parse().map_err(|_| malformed())?;
                    for x in [u, v] {
                        if x == 0 || x > n {
                            return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
                        }
                    }
                    if u == v {
                        return Err(ParseError::SelfLoop { line, vertex: u });
                    }
                    let (a, b) = (u - 1, v - 1);
                    if adjacency[a].contains(&b) {
                        return Err(ParseError::DuplicateEdge { line, u, v });
                    }
                    adjacency[a].push(b);
                    adjacency[b].push(a);
                    found += 1;
                }
                _ => return Err(malformed()),
            }
        }
        let (_, declared) = header.ok_or(ParseError::MissingHeader)?;
        if declared != found {
            return Err(ParseError::EdgeCountMismatch { declared, found });
        }
        adjacency.iter_mut().for_each(|l| l.sort_unstable());
        Ok(Graph { adjacency })
    }

    /// Canonical DIMACS rendering: header, then edges sorted by `(u, v)`
    /// with `u < v`, 1-indexed.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p edge {} {}", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {} {}", u + 1, v + 1);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, heawood, path, petersen, star};

    #[test]
    fn parses_single_edge() {
        let g = Graph::parse_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g, Graph::from_edges(2, &[(0, 1)]).unwrap());
    }

    #[test]
    fn parses_triangle_with_comments() {
        let g = Graph::parse_dimacs("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.neighbors(0), &[1, 2]);
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(
            Graph::parse_dimacs("p edge 2 1\ne 1 1\n"),
            Err(ParseError::SelfLoop { line: 2, vertex: 1 })
        );
        assert_eq!(
            Graph::parse_dimacs("p edge 2 1\ne 1 3\n"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 3,
                n: 2
            })
        );
        assert_eq!(
            Graph::parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n"),
            Err(ParseError::DuplicateEdge { line: 3, u: 2, v: 1 })
        );
        assert!(matches!(
            Graph::parse_dimacs("p edge 2 1\nx 1 2\n"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert_eq!(Graph::parse_dimacs("e 1 2\n"), Err(ParseError::MissingHeader));
        assert_eq!(
            Graph::parse_dimacs("p edge 3 2\ne 1 2\n"),
            Err(ParseError::EdgeCountMismatch { declared: 2, found: 1 })
        );
    }

    #[test]
    fn dimacs_round_trip() {
        let g = petersen();
        assert_eq!(Graph::parse_dimacs(&g.to_dimacs()).unwrap(), g);
    }

    #[test]
    fn girth_of_small_families() {
        assert_eq!(cycle(6).unwrap().girth(), Some(6));
        assert_eq!(path(7).unwrap().girth(), None);
        assert_eq!(star(5).unwrap().girth(), None);
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(heawood().girth(), Some(6));
    }

    #[test]
    fn distances_and_diameter() {
        let p4 = path(4).unwrap();
        assert_eq!(p4.distances(0), vec![Some(0), Some(1), Some(2), Some(3)]);
        assert_eq!(p4.diameter(), Ok(3));
        assert_eq!(petersen().diameter(), Ok(2));
        assert_eq!(heawood().diameter(), Ok(3));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert_eq!(split.distances(0)[2], None);
        assert_eq!(split.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn induced_subgraph_keeps_order() {
        let c5 = cycle(5).unwrap();
        let (h, map) = c5.induced_subgraph(&[4, 0, 1]);
        assert_eq!(map, vec![4, 0, 1]);
        assert!(h.has_edge(0, 1) && h.has_edge(1, 2) && !h.has_edge(0, 2));
    }
}

//! Vertex-colored graph representation and hop-distance queries.

use std::collections::VecDeque;

use crate::{Error, Result};

/// A simple undirected graph with a color per vertex.
///
/// Vertices are dense indices `0..n`, colors dense ids `0..c` with every
/// color used by at least one vertex. Neighbor lists are sorted ascending.
/// The structure is immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    adjacency: Vec<Vec<usize>>,
    colors: Vec<usize>,
    num_colors: usize,
}

impl ColoredGraph {
    /// Builds a graph from an edge list, validating all invariants.
    pub fn new(n: usize, edges: &[(usize, usize)], colors: Vec<usize>) -> Result<Self> {
        if colors.len() != n {
            return Err(Error::Consistency(format!(
                "expected {n} colors, got {}",
                colors.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::Consistency(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Consistency("duplicate edge".into()));
            }
        }
        let num_colors = match colors.iter().max() {
            Some(&m) => m + 1,
            None => 0,
        };
        let mut used = vec![false; num_colors];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(gap) = used.iter().position(|&u| !u) {
            return Err(Error::Consistency(format!("color {gap} is unused")));
        }
        Ok(ColoredGraph {
            adjacency,
            colors,
            num_colors,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Hop distance between `u` and `v`; `None` iff they lie in different
    /// components. `d(v, v) = 0`.
    pub fn hop_distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Some(0));
        }
        Ok(self.bfs_distances(u)[v])
    }

    /// `d(v, U) = min over u in U of d(v, u)`; zero when `v` is in `U`.
    pub fn set_distance(&self, v: usize, set: &[usize]) -> Result<Option<usize>> {
        self.check_vertex(v)?;
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        for &u in set {
            self.check_vertex(u)?;
        }
        if set.contains(&v) {
            return Ok(Some(0));
        }
        let dist = self.bfs_distances(v);
        Ok(set.iter().filter_map(|&u| dist[u]).min())
    }

    /// All vertices of `U` attaining `d(v, U)`; equals `{v}` when `v` is in
    /// `U`. Empty when no member of `U` is reachable.
    pub fn nearest_neighbors(&self, v: usize, set: &[usize]) -> Result<Vec<usize>> {
        let d = self.set_distance(v, set)?;
        if set.contains(&v) {
            return Ok(vec![v]);
        }
        let Some(d) = d else {
            return Ok(Vec::new());
        };
        let dist = self.bfs_distances(v);
        let mut out: Vec<usize> = set.iter().copied().filter(|&u| dist[u] == Some(d)).collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// `N[v, U] = {v} ∪ (neighbors of v within U)`; `v` always included.
    pub fn closed_neighborhood(&self, v: usize, set: &[usize]) -> Vec<usize> {
        let mut out = vec![v];
        for &u in &self.adjacency[v] {
            if set.contains(&u) {
                out.push(u);
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Connected components, each sorted ascending, ordered by smallest
    /// member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut components = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }
}

/// Seeded Erdos-Renyi style colored graph; colors are compacted so every
/// color id in `0..c` is used.
pub fn random_colored_graph(n: usize, colors: usize, edge_prob: f64, seed: u64) -> ColoredGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    let assigned: Vec<usize> = (0..n).map(|_| rng.gen_range(0..colors.max(1))).collect();
    ColoredGraph::new(n, &edges, compact_colors(assigned)).unwrap()
}

/// Seeded random connected graph: a uniform random tree plus `extra_edges`
/// additional random non-edges, all vertices colored 0.
pub fn random_connected_graph(n: usize, extra_edges: usize, seed: u64) -> ColoredGraph {
    use rand::{Rng, SeedableRng};
    assert!(n >= 1);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let mut present: std::collections::BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let max_edges = n * (n - 1) / 2;
    let mut added = 0;
    while added < extra_edges && present.len() < max_edges {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && present.insert(e) {
            edges.push(e);
            added += 1;
        }
    }
    ColoredGraph::new(n, &edges, vec![0; n]).unwrap()
}

/// Remaps arbitrary color ids onto dense `0..c` preserving first-seen order
/// by ascending id.
pub fn compact_colors(colors: Vec<usize>) -> Vec<usize> {
    let mut used: Vec<usize> = colors.clone();
    used.sort_unstable();
    used.dedup();
    colors
        .into_iter()
        .map(|c| used.binary_search(&c).unwrap())
        .collect()
}

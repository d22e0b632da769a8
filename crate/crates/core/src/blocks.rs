//! Maximal monochromatic connected blocks and their boundary sets.

use std::collections::VecDeque;

use crate::graph::ColoredGraph;

/// A maximal connected monochromatic region of the graph together with its
/// boundary sets.
///
/// `b1` holds the block vertices with at least one differently-colored
/// neighbor, `b2` the remaining block vertices adjacent to `b1`, and
/// `b3 = b1 ∪ b2`. All vertex lists are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub id: usize,
    pub color: usize,
    pub vertices: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub b3: Vec<usize>,
}

impl Block {
    /// A block whose boundary is empty is an entire monochromatic
    /// component; solvers treat those specially.
    pub fn is_monochromatic_component(&self) -> bool {
        self.b1.is_empty()
    }
}

/// Splits the graph into blocks, ordered by smallest member vertex.
///
/// Blocks partition the vertex set: each is a connected component of the
/// subgraph induced by same-colored edges.
pub fn decompose_blocks(graph: &ColoredGraph) -> Vec<Block> {
    let n = graph.n();
    let mut assigned = vec![false; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if assigned[start] {
            continue;
        }
        let color = graph.color(start);
        let mut vertices = vec![start];
        assigned[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in graph.neighbors(u) {
                if !assigned[w] && graph.color(w) == color {
                    assigned[w] = true;
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        vertices.sort_unstable();
        let (b1, b2, b3) = boundary_sets(graph, &vertices);
        blocks.push(Block {
            id: blocks.len(),
            color,
            vertices,
            b1,
            b2,
            b3,
        });
    }
    blocks
}

/// Computes `(b1, b2, b3)` for a block given as its sorted vertex list.
pub fn boundary_sets(graph: &ColoredGraph, vertices: &[usize]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let b1: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| {
            graph
                .neighbors(v)
                .iter()
                .any(|&u| graph.color(u) != graph.color(v))
        })
        .collect();
    let b2: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| {
            !b1.contains(&v) && graph.neighbors(v).iter().any(|u| b1.contains(u))
        })
        .collect();
    let mut b3 = b1.clone();
    b3.extend_from_slice(&b2);
    b3.sort_unstable();
    (b1, b2, b3)
}

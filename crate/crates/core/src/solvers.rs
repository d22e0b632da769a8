//! Exact solvers: minimum selective subsets (globally and per local
//! target set), an exhaustive test oracle, and minimum dominating sets.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::blocks::{decompose_blocks, Block};
use crate::cover::min_cover;
use crate::graph::ColoredGraph;
use crate::par;
use crate::validator::is_selective_subset;
use crate::{Error, Result};

/// Default branch-and-bound node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Guard on the enumeration universe of [`enumerate_oracle`].
pub const ORACLE_UNIVERSE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Ptas,
    Greedy,
    Oracle,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct SolveStats {
    /// Branch-and-bound nodes explored (zero for enumeration).
    pub nodes: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// A solver answer: the chosen vertex set with a per-block breakdown.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveResult {
    pub chosen: Vec<usize>,
    pub size: usize,
    pub per_block: BTreeMap<usize, Vec<usize>>,
    pub method: Method,
    pub stats: SolveStats,
}

impl SolveResult {
    pub(crate) fn from_blocks(
        per_block: BTreeMap<usize, Vec<usize>>,
        method: Method,
        nodes: u64,
        elapsed: Duration,
    ) -> Self {
        let mut chosen: Vec<usize> = per_block.values().flatten().copied().collect();
        chosen.sort_unstable();
        chosen.dedup();
        SolveResult {
            size: chosen.len(),
            chosen,
            per_block,
            method,
            stats: SolveStats { nodes, elapsed },
        }
    }
}

/// Minimum subset of `b3` covering every `b1` vertex by itself or a
/// `b3`-neighbor; lexicographically smallest among minima.
pub fn exact_block_cover(
    graph: &ColoredGraph,
    b1: &[usize],
    b3: &[usize],
    budget: u64,
) -> Result<(Vec<usize>, u64)> {
    local_min_selective(graph, b1, b3, budget)
}

/// Minimum local selective subset for an arbitrary target set
/// `targets ⊆ b1`, covering within `b3_active`.
///
/// The solution is a subset of `N[targets, b3_active]`; every target is in
/// the solution or adjacent (within `b3_active`) to it.
pub fn local_min_selective(
    graph: &ColoredGraph,
    targets: &[usize],
    b3_active: &[usize],
    budget: u64,
) -> Result<(Vec<usize>, u64)> {
    let problems: Vec<(usize, Vec<usize>)> = targets
        .iter()
        .map(|&v| (v, graph.closed_neighborhood(v, b3_active)))
        .collect();
    let outcome = min_cover(&problems, budget)?;
    Ok((outcome.chosen, outcome.nodes))
}

/// Exact minimum selective subset.
///
/// Solved independently per block (the blocks are independent): a minimum
/// cover of `b1` by vertices of `b3`, unioned over blocks. A monochromatic
/// component contributes its smallest-index vertex.
pub fn exact_mss(graph: &ColoredGraph, budget: u64) -> Result<SolveResult> {
    let start = Instant::now();
    let blocks = decompose_blocks(graph);
    let solved = par::try_map(&blocks, |block| -> Result<(usize, Vec<usize>, u64)> {
        if block.is_monochromatic_component() {
            return Ok((block.id, vec![block.vertices[0]], 0));
        }
        let (chosen, nodes) = exact_block_cover(graph, &block.b1, &block.b3, budget)?;
        Ok((block.id, chosen, nodes))
    })?;
    let mut per_block = BTreeMap::new();
    let mut nodes = 0;
    for (id, chosen, n) in solved {
        per_block.insert(id, chosen);
        nodes += n;
    }
    let result = SolveResult::from_blocks(per_block, Method::Exact, nodes, start.elapsed());
    debug_assert!(is_selective_subset(graph, &result.chosen)?.valid);
    Ok(result)
}

/// Exhaustive minimum selective subset, provably minimum.
///
/// Enumerates subsets of `⋃ b3` (plus the smallest vertex of each
/// monochromatic component, which suffices there) by increasing size and
/// validates each with [`is_selective_subset`]. Guarded by
/// [`ORACLE_UNIVERSE_LIMIT`].
pub fn enumerate_oracle(graph: &ColoredGraph) -> Result<SolveResult> {
    let start = Instant::now();
    let blocks = decompose_blocks(graph);
    let mut universe = Vec::new();
    for block in &blocks {
        if block.is_monochromatic_component() {
            universe.push(block.vertices[0]);
        } else {
            universe.extend_from_slice(&block.b3);
        }
    }
    universe.sort_unstable();
    if universe.len() > ORACLE_UNIVERSE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "oracle enumeration universe",
            limit: ORACLE_UNIVERSE_LIMIT,
            got: universe.len(),
        });
    }
    for size in 0..=universe.len() {
        if let Some(chosen) = first_valid_of_size(graph, &universe, size)? {
            let per_block = split_per_block(&blocks, &chosen);
            let mut result =
                SolveResult::from_blocks(per_block, Method::Oracle, 0, start.elapsed());
            result.stats.elapsed = start.elapsed();
            return Ok(result);
        }
    }
    unreachable!("the full universe is always valid")
}

fn first_valid_of_size(
    graph: &ColoredGraph,
    universe: &[usize],
    size: usize,
) -> Result<Option<Vec<usize>>> {
    fn go(
        graph: &ColoredGraph,
        universe: &[usize],
        size: usize,
        start: usize,
        acc: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>> {
        if acc.len() == size {
            return Ok(if is_selective_subset(graph, acc)?.valid {
                Some(acc.clone())
            } else {
                None
            });
        }
        for i in start..universe.len() {
            acc.push(universe[i]);
            if let Some(found) = go(graph, universe, size, i + 1, acc)? {
                return Ok(Some(found));
            }
            acc.pop();
        }
        Ok(None)
    }
    go(graph, universe, size, 0, &mut Vec::new())
}

pub(crate) fn split_per_block(blocks: &[Block], chosen: &[usize]) -> BTreeMap<usize, Vec<usize>> {
    let mut per_block: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for block in blocks {
        let members: Vec<usize> = chosen
            .iter()
            .copied()
            .filter(|v| block.vertices.binary_search(v).is_ok())
            .collect();
        if !members.is_empty() {
            per_block.insert(block.id, members);
        }
    }
    per_block
}

/// Minimum dominating set via the same branch-and-bound engine;
/// lexicographically smallest among minima.
pub fn exact_dominating_set(graph: &ColoredGraph, budget: u64) -> Result<Vec<usize>> {
    let targets: Vec<(usize, Vec<usize>)> = (0..graph.n())
        .map(|v| {
            let mut cands = vec![v];
            cands.extend_from_slice(graph.neighbors(v));
            cands.sort_unstable();
            (v, cands)
        })
        .collect();
    Ok(min_cover(&targets, budget)?.chosen)
}

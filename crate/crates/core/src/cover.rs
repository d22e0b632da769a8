//! Generic minimum-cover engine behind the exact solvers.
//!
//! Input: a list of targets, each with a non-empty candidate list of
//! vertices that would cover it. Output: a minimum-cardinality set of
//! candidate vertices covering all targets; among minima the
//! lexicographically smallest sorted vertex list. Branch and bound:
//! branch on the uncovered target with the fewest remaining candidates,
//! lower-bound by greedily counting targets with pairwise disjoint
//! candidate sets.

use crate::bitset::BitSet;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub(crate) struct CoverOutcome {
    pub chosen: Vec<usize>,
    pub nodes: u64,
}

struct Search<'a> {
    /// candidate vertex ids, sorted ascending
    candidates: &'a [usize],
    /// per candidate: bitset of target indices it covers
    covers: Vec<BitSet>,
    /// per target: candidate indices that cover it, ascending
    coverers: Vec<Vec<usize>>,
    num_targets: usize,
    budget: u64,
    nodes: u64,
    best: Option<Vec<usize>>,
}

pub(crate) fn min_cover(targets: &[(usize, Vec<usize>)], budget: u64) -> Result<CoverOutcome> {
    if targets.is_empty() {
        return Ok(CoverOutcome {
            chosen: Vec::new(),
            nodes: 0,
        });
    }
    let mut candidates: Vec<usize> = targets.iter().flat_map(|(_, c)| c.clone()).collect();
    candidates.sort_unstable();
    candidates.dedup();
    let num_targets = targets.len();
    let mut covers = vec![BitSet::new(num_targets); candidates.len()];
    let mut coverers = vec![Vec::new(); num_targets];
    for (ti, (_, cands)) in targets.iter().enumerate() {
        debug_assert!(!cands.is_empty(), "target without candidates");
        for &v in cands {
            let ci = candidates.binary_search(&v).unwrap();
            covers[ci].insert(ti);
            coverers[ti].push(ci);
        }
        coverers[ti].sort_unstable();
        coverers[ti].dedup();
    }
    let mut search = Search {
        candidates: &candidates,
        covers,
        coverers,
        num_targets,
        budget,
        nodes: 0,
        best: None,
    };
    let covered = BitSet::new(num_targets);
    let forbidden = BitSet::new(candidates.len());
    let mut chosen = Vec::new();
    search.recurse(&covered, &forbidden, &mut chosen)?;
    let mut chosen: Vec<usize> = search
        .best
        .expect("cover always exists: every target covers itself")
        .iter()
        .map(|&ci| search.candidates[ci])
        .collect();
    chosen.sort_unstable();
    Ok(CoverOutcome {
        chosen,
        nodes: search.nodes,
    })
}

impl Search<'_> {
    fn recurse(
        &mut self,
        covered: &BitSet,
        forbidden: &BitSet,
        chosen: &mut Vec<usize>,
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        if covered.len() == self.num_targets {
            let candidate = self.sorted_vertices(chosen);
            let better = match &self.best {
                None => true,
                Some(best) => match chosen.len().cmp(&best.len()) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => candidate < self.sorted_vertices(best),
                },
            };
            if better {
                self.best = Some(chosen.clone());
            }
            return Ok(());
        }
        if let Some(best) = &self.best {
            // keep equal-size branches alive for the lexicographic tie-break
            if chosen.len() + self.lower_bound(covered, forbidden) > best.len() {
                return Ok(());
            }
        }
        // branch on the uncovered target with the fewest allowed coverers
        let mut branch_target = None;
        let mut branch_count = usize::MAX;
        for ti in 0..self.num_targets {
            if covered.contains(ti) {
                continue;
            }
            let count = self.coverers[ti]
                .iter()
                .filter(|&&ci| !forbidden.contains(ci))
                .count();
            if count == 0 {
                return Ok(()); // dead branch: target can no longer be covered
            }
            if count < branch_count {
                branch_count = count;
                branch_target = Some(ti);
            }
        }
        let ti = branch_target.expect("some target is uncovered");
        let mut forbidden = forbidden.clone();
        let options: Vec<usize> = self.coverers[ti]
            .iter()
            .copied()
            .filter(|&ci| !forbidden.contains(ci))
            .collect();
        for ci in options {
            let mut next_covered = covered.clone();
            next_covered.union_with(&self.covers[ci]);
            chosen.push(ci);
            self.recurse(&next_covered, &forbidden, chosen)?;
            chosen.pop();
            // later siblings must cover this target without ci
            forbidden.insert(ci);
        }
        Ok(())
    }

    /// Greedy packing of uncovered targets with pairwise disjoint candidate
    /// sets; each needs its own cover vertex.
    fn lower_bound(&self, covered: &BitSet, forbidden: &BitSet) -> usize {
        let mut used = BitSet::new(self.covers.len());
        let mut bound = 0;
        for ti in 0..self.num_targets {
            if covered.contains(ti) {
                continue;
            }
            let allowed: Vec<usize> = self.coverers[ti]
                .iter()
                .copied()
                .filter(|&ci| !forbidden.contains(ci))
                .collect();
            if allowed.iter().all(|&ci| !used.contains(ci)) {
                bound += 1;
                for ci in allowed {
                    used.insert(ci);
                }
            }
        }
        bound.max(1)
    }

    fn sorted_vertices(&self, chosen: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = chosen.iter().map(|&ci| self.candidates[ci]).collect();
        v.sort_unstable();
        v
    }
}

//! Exact matching search by branch and bound.
//!
//! All searches are deterministic: edges are visited in colex order and
//! colors in ascending family size. Exhausting a [`SolverLimits`] budget is
//! reported as [`Error::Resource`]; a negative answer is only returned once
//! the search space has been covered.

use std::time::Instant;

use serde::Serialize;

use crate::binom::binom;
use crate::colex::KSubsets;
use crate::error::{Error, Result};
use crate::family::{ColoredFamilies, Edge, Matching, SetFamily};

/// Search budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolverLimits {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            max_nodes: 500_000_000,
            max_millis: 600_000,
        }
    }
}

pub const ENV_MAX_NODES: &str = "SHIFTMATCH_MAX_NODES";
pub const ENV_MAX_MILLIS: &str = "SHIFTMATCH_MAX_MILLIS";

impl SolverLimits {
    pub fn new(max_nodes: u64, max_millis: u64) -> Result<Self> {
        if max_nodes == 0 || max_millis == 0 {
            return Err(Error::Validation("solver limits must be positive".into()));
        }
        Ok(SolverLimits {
            max_nodes,
            max_millis,
        })
    }

    /// Defaults overridden by `SHIFTMATCH_MAX_NODES` / `SHIFTMATCH_MAX_MILLIS`.
    pub fn from_env() -> Result<Self> {
        let d = Self::default();
        let read = |key: &str, default: u64| -> Result<u64> {
            match std::env::var(key) {
                Ok(v) => v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Validation(format!("{key}={v} is not a positive integer"))),
                Err(_) => Ok(default),
            }
        };
        Self::new(
            read(ENV_MAX_NODES, d.max_nodes)?,
            read(ENV_MAX_MILLIS, d.max_millis)?,
        )
    }
}

pub(crate) struct Budget {
    limits: SolverLimits,
    start: Instant,
    pub(crate) nodes: u64,
}

impl Budget {
    pub(crate) fn new(limits: SolverLimits) -> Self {
        Budget {
            limits,
            start: Instant::now(),
            nodes: 0,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes
            || (self.nodes & 0xfff == 0
                && self.start.elapsed().as_millis() > self.limits.max_millis as u128)
        {
            return Err(Error::Resource {
                nodes: self.nodes,
                millis: self.start.elapsed().as_millis(),
            });
        }
        Ok(())
    }
}

/// Maximum matching with a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxMatching {
    pub nu: usize,
    pub witness: Matching,
    pub nodes: u64,
}

/// Outcome of a bounded-size matching or rainbow search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Found {
    pub matching: Option<Matching>,
    pub nodes: u64,
}

impl Found {
    pub fn found(&self) -> bool {
        self.matching.is_some()
    }
}

/// Colex-first maximal matching.
pub fn greedy_matching(f: &SetFamily) -> Matching {
    let mut used = Edge::EMPTY;
    let mut out = Vec::new();
    for e in f.iter() {
        if used.is_disjoint(e) {
            used = used.union(e);
            out.push(e);
        }
    }
    Matching::plain(out)
}

struct PlainSearch<'b> {
    k: usize,
    target: usize,
    cur: Vec<u128>,
    best: Vec<u128>,
    budget: &'b mut Budget,
}

impl PlainSearch<'_> {
    fn run(&mut self, cands: &[u128]) -> Result<()> {
        self.budget.tick()?;
        if self.cur.len() > self.best.len() {
            self.best.clone_from(&self.cur);
        }
        if self.best.len() >= self.target || cands.is_empty() {
            return Ok(());
        }
        let cover = cands.iter().fold(0u128, |a, &c| a | c);
        let room = (cover.count_ones() as usize / self.k).min(cands.len());
        if self.cur.len() + room <= self.best.len() {
            return Ok(());
        }
        // branch on the lowest coverable vertex: matched by one of its
        // edges, or left uncovered
        let low = cover & cover.wrapping_neg();
        for &c in cands.iter().filter(|&&c| c & low != 0) {
            let rest: Vec<u128> = cands.iter().copied().filter(|&d| d & c == 0).collect();
            self.cur.push(c);
            self.run(&rest)?;
            self.cur.pop();
            if self.best.len() >= self.target {
                return Ok(());
            }
        }
        let rest: Vec<u128> = cands.iter().copied().filter(|&d| d & low == 0).collect();
        self.run(&rest)
    }
}

fn search_plain(edges: &[u128], k: usize, target: usize, budget: &mut Budget) -> Result<Vec<u128>> {
    if k == 0 {
        // only the empty set can be present
        return Ok(edges.iter().copied().take(1.min(target)).collect());
    }
    let greedy = {
        let mut used = 0u128;
        let mut g = Vec::new();
        for &e in edges {
            if used & e == 0 {
                used |= e;
                g.push(e);
            }
        }
        g
    };
    let mut s = PlainSearch {
        k,
        target,
        cur: Vec::new(),
        best: greedy,
        budget,
    };
    if s.best.len() < target {
        s.run(edges)?;
    }
    let mut best = s.best;
    best.truncate(target);
    best.sort_unstable();
    Ok(best)
}

fn masks(f: &SetFamily) -> Vec<u128> {
    f.iter().map(Edge::mask).collect()
}

/// `ν(F)` with a maximum matching as witness.
pub fn max_matching(f: &SetFamily, limits: SolverLimits) -> Result<MaxMatching> {
    let mut budget = Budget::new(limits);
    let best = search_plain(&masks(f), f.k(), usize::MAX, &mut budget)?;
    Ok(MaxMatching {
        nu: best.len(),
        witness: Matching::plain(best.into_iter().map(Edge::from_mask)),
        nodes: budget.nodes,
    })
}

/// Searches for `t` pairwise disjoint edges, stopping at the first found.
pub fn has_t_matching(f: &SetFamily, t: usize, limits: SolverLimits) -> Result<Found> {
    let mut budget = Budget::new(limits);
    let best = search_plain(&masks(f), f.k(), t, &mut budget)?;
    Ok(Found {
        matching: (best.len() >= t).then(|| Matching::plain(best.into_iter().map(Edge::from_mask))),
        nodes: budget.nodes,
    })
}

struct RainbowSearch<'a, 'b> {
    edges: &'a [Vec<u128>],
    order: Vec<usize>,
    chosen: Vec<u128>,
    budget: &'b mut Budget,
}

impl RainbowSearch<'_, '_> {
    fn run(&mut self, pos: usize, used: u128) -> Result<bool> {
        self.budget.tick()?;
        if pos == self.order.len() {
            return Ok(true);
        }
        let color = self.order[pos];
        for &e in &self.edges[color] {
            if e & used != 0 {
                continue;
            }
            let next = used | e;
            let viable = self.order[pos + 1..]
                .iter()
                .all(|&c| self.edges[c].iter().any(|&d| d & next == 0));
            if !viable {
                continue;
            }
            self.chosen.push(e);
            if self.run(pos + 1, next)? {
                return Ok(true);
            }
            self.chosen.pop();
        }
        Ok(false)
    }
}

/// A rainbow matching using one edge from every family, or a proof of absence.
pub fn rainbow_matching(fams: &ColoredFamilies, limits: SolverLimits) -> Result<Found> {
    let mut budget = Budget::new(limits);
    let edges: Vec<Vec<u128>> = fams.families().iter().map(masks).collect();
    let mut order: Vec<usize> = (0..fams.t()).collect();
    order.sort_by_key(|&c| (edges[c].len(), c));
    let mut s = RainbowSearch {
        edges: &edges,
        order,
        chosen: Vec::new(),
        budget: &mut budget,
    };
    let ok = s.run(0, 0)?;
    let matching = ok.then(|| {
        let mut entries: Vec<(usize, Edge)> = s
            .order
            .iter()
            .zip(&s.chosen)
            .map(|(&c, &e)| (c, Edge::from_mask(e)))
            .collect();
        entries.sort_unstable();
        Matching::new(entries)
    });
    Ok(Found {
        matching,
        nodes: budget.nodes,
    })
}

/// Result of the exhaustive extremal search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremal {
    pub max: usize,
    pub family: SetFamily,
    pub nodes: u64,
}

/// Largest power-set cap for [`max_edges_no_t_matching`].
pub const EXTREMAL_MAX_EDGES: u128 = 24;

/// The largest `k`-uniform family on `[n]` without `t` disjoint edges,
/// by include/exclude branch and bound over all `k`-subsets in colex order.
pub fn max_edges_no_t_matching(
    n: usize,
    k: usize,
    t: usize,
    limits: SolverLimits,
) -> Result<Extremal> {
    let total = binom(n as u64, k as u64)?;
    if k < 1 || total > EXTREMAL_MAX_EDGES {
        return Err(Error::Precondition(format!(
            "exhaustive extremal search needs k >= 1 and C(n,k) <= {EXTREMAL_MAX_EDGES}, got C({n},{k})={total}"
        )));
    }
    if t == 0 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    let all: Vec<u128> = KSubsets::new(n, k).map(Edge::mask).collect();
    let mut budget = Budget::new(limits);
    let mut best: Vec<u128> = Vec::new();
    let mut chosen: Vec<u128> = Vec::new();
    extremal_dfs(&all, 0, k, t, &mut chosen, &mut best, &mut budget)?;
    Ok(Extremal {
        max: best.len(),
        family: SetFamily::from_edges_unchecked(
            n,
            k,
            best.into_iter().map(Edge::from_mask).collect(),
        ),
        nodes: budget.nodes,
    })
}

fn extremal_dfs(
    all: &[u128],
    idx: usize,
    k: usize,
    t: usize,
    chosen: &mut Vec<u128>,
    best: &mut Vec<u128>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    if chosen.len() > best.len() {
        best.clone_from(chosen);
    }
    if idx == all.len() || chosen.len() + (all.len() - idx) <= best.len() {
        return Ok(());
    }
    let e = all[idx];
    // e closes a t-matching iff the chosen edges avoiding e contain t-1
    // disjoint ones
    let avoiding: Vec<u128> = chosen.iter().copied().filter(|&c| c & e == 0).collect();
    let closes = search_plain(&avoiding, k, t - 1, budget)?.len() >= t - 1;
    if !closes {
        chosen.push(e);
        extremal_dfs(all, idx + 1, k, t, chosen, best, budget)?;
        chosen.pop();
    }
    extremal_dfs(all, idx + 1, k, t, chosen, best, budget)
}

//! The `(i, j)`-shift, compression toward the top vertex, the split of a
//! family by containment of `n`, and the two matching transports that make
//! shifting constructive: pulling a matching back through a sequence of
//! shifts, and lifting a matching of split families back onto `[n]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{ColoredFamilies, Edge, Matching, SetFamily};

/// The shift `S_ij`, which replaces `i` by the smaller `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ShiftOp {
    pub i: usize,
    pub j: usize,
}

impl ShiftOp {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if j == 0 || j >= i {
            return Err(Error::Validation(format!(
                "shift requires 1 <= j < i, got i={i} j={j}"
            )));
        }
        Ok(ShiftOp { i, j })
    }

    fn check(self, n: usize) -> Result<()> {
        if self.j == 0 || self.j >= self.i || self.i > n {
            return Err(Error::Validation(format!(
                "shift S({},{}) invalid for n={n}",
                self.i, self.j
            )));
        }
        Ok(())
    }

    /// `S_ij(e)` relative to `family`.
    pub fn image(self, e: Edge, family: &SetFamily) -> Edge {
        if e.contains(self.i) && !e.contains(self.j) {
            let moved = e.without(self.i).with(self.j);
            if !family.contains(moved) {
                return moved;
            }
        }
        e
    }
}

/// `S_ij(F)` for one family.
pub fn shift_family(f: &SetFamily, op: ShiftOp) -> Result<SetFamily> {
    op.check(f.n())?;
    let edges: Vec<Edge> = f.iter().map(|e| op.image(e, f)).collect();
    let out = SetFamily::from_edges_unchecked(f.n(), f.k(), edges);
    debug_assert_eq!(out.len(), f.len());
    Ok(out)
}

/// Applies `S_ij` to every family independently.
pub fn apply_shift(fams: &ColoredFamilies, op: ShiftOp) -> Result<ColoredFamilies> {
    let shifted = fams
        .families()
        .iter()
        .map(|f| shift_family(f, op))
        .collect::<Result<Vec<_>>>()?;
    ColoredFamilies::new(shifted)
}

/// One effective shift and the families it was applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftStep {
    pub op: ShiftOp,
    pub before: ColoredFamilies,
}

/// Replayable record of the shifts that changed something.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShiftTrace {
    pub steps: Vec<ShiftStep>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStepReport {
    pub i: usize,
    pub j: usize,
    /// Family sizes before the step (unchanged by it).
    pub sizes: Vec<usize>,
    /// Number of sets each family moved.
    pub moved: Vec<usize>,
}

impl ShiftTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Checks that replaying every op reproduces the next snapshot and,
    /// for the last step, `last`.
    pub fn replay_matches(&self, last: &ColoredFamilies) -> Result<bool> {
        for (idx, step) in self.steps.iter().enumerate() {
            let after = apply_shift(&step.before, step.op)?;
            let expected = self.steps.get(idx + 1).map_or(last, |s| &s.before);
            if &after != expected {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn report(&self) -> Vec<TraceStepReport> {
        self.steps
            .iter()
            .map(|s| TraceStepReport {
                i: s.op.i,
                j: s.op.j,
                sizes: s.before.families().iter().map(SetFamily::len).collect(),
                moved: s
                    .before
                    .families()
                    .iter()
                    .map(|f| f.iter().filter(|&e| s.op.image(e, f) != e).count())
                    .collect(),
            })
            .collect()
    }
}

/// True when no `S_{n,j}`, `j < n`, changes any family.
pub fn is_compressed(fams: &ColoredFamilies) -> bool {
    let n = fams.n();
    (1..n).all(|j| {
        let op = ShiftOp { i: n, j };
        fams.families()
            .iter()
            .all(|f| f.iter().all(|e| op.image(e, f) == e))
    })
}

/// Applies `S_{n,1}, ..., S_{n,n-1}` in rounds until a full round is a no-op.
///
/// Every effective shift lowers the total vertex sum, so this terminates.
pub fn compress_to_target(
    fams: &ColoredFamilies,
    target: usize,
) -> Result<(ColoredFamilies, ShiftTrace)> {
    let n = fams.n();
    if target != n || n == 0 {
        return Err(Error::Precondition(format!(
            "compression target must be the top vertex n={n}, got {target}"
        )));
    }
    let mut cur = fams.clone();
    let mut trace = ShiftTrace::default();
    loop {
        let mut changed = false;
        for j in 1..n {
            let op = ShiftOp { i: n, j };
            let next = apply_shift(&cur, op)?;
            if next != cur {
                changed = true;
                trace.steps.push(ShiftStep {
                    op,
                    before: std::mem::replace(&mut cur, next),
                });
            }
        }
        if !changed {
            return Ok((cur, trace));
        }
    }
}

/// `F(n)` and `F(n̄)` for one family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// `{F \ {n} : n ∈ F}`, `(k-1)`-uniform on `[n-1]`.
    pub with_n: SetFamily,
    /// `{F : n ∉ F}`, `k`-uniform on `[n-1]`.
    pub without_n: SetFamily,
    pub origin: usize,
}

pub fn decompose(f: &SetFamily) -> Decomposition {
    let n = f.n();
    let (with, without): (Vec<Edge>, Vec<Edge>) = f.iter().partition(|e| e.contains(n));
    let lower = n.saturating_sub(1);
    Decomposition {
        with_n: SetFamily::from_edges_unchecked(
            lower,
            f.k().saturating_sub(1),
            with.into_iter().map(|e| e.without(n)).collect(),
        ),
        without_n: SetFamily::from_edges_unchecked(lower, f.k(), without),
        origin: n,
    }
}

/// Which half of the split a family contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    WithN,
    WithoutN,
}

/// The families `F_i(n)` or `F_i(n̄)` per `sides`, on `[n-1]`.
pub fn split_families(fams: &ColoredFamilies, sides: &[Side]) -> Result<ColoredFamilies> {
    if sides.len() != fams.t() {
        return Err(Error::Validation(format!(
            "{} sides given for {} families",
            sides.len(),
            fams.t()
        )));
    }
    let parts = fams
        .families()
        .iter()
        .zip(sides)
        .map(|(f, side)| {
            let d = decompose(f);
            match side {
                Side::WithN => d.with_n,
                Side::WithoutN => d.without_n,
            }
        })
        .collect();
    ColoredFamilies::new(parts)
}

/// Transports a rainbow matching of the last snapshot's shifted families back
/// to a rainbow matching of the first snapshot, step by step.
///
/// For each step `S_ij` (last to first) at most one matching edge `G` can be
/// missing from the pre-shift family; it is the image of `G \ {j} ∪ {i}`. If
/// that reintroduces `i` into another matching edge `H`, then `H` was blocked
/// from shifting, so `H \ {i} ∪ {j}` is in its family and the two swap.
pub fn pull_back_matching(trace: &ShiftTrace, m: &Matching) -> Result<Matching> {
    let mut entries = m.entries().to_vec();
    for step in trace.steps.iter().rev() {
        let ShiftOp { i, j } = step.op;
        let before = &step.before;
        let after = apply_shift(before, step.op)?;
        let current = Matching::new(entries.clone());
        verify_repeated(&current, &after)
            .map_err(|e| Error::Consistency(format!("pullback input at S({i},{j}): {e}")))?;

        let moved: Vec<usize> = (0..entries.len())
            .filter(|&p| !before.family(entries[p].0).contains(entries[p].1))
            .collect();
        if moved.len() > 1 {
            return Err(Error::Consistency(format!(
                "{} matching edges moved by S({i},{j}); at most one can",
                moved.len()
            )));
        }
        if let Some(&p) = moved.first() {
            let (c, g) = entries[p];
            if !g.contains(j) || g.contains(i) {
                return Err(Error::Consistency(format!(
                    "edge {g} cannot be an image of S({i},{j})"
                )));
            }
            let restored = g.without(j).with(i);
            if !before.family(c).contains(restored) {
                return Err(Error::Consistency(format!(
                    "preimage {restored} missing from family {}",
                    c + 1
                )));
            }
            if let Some(q) = (0..entries.len()).find(|&q| q != p && entries[q].1.contains(i)) {
                let (c2, h) = entries[q];
                let swapped = h.without(i).with(j);
                if h.contains(j) || !before.family(c2).contains(swapped) {
                    return Err(Error::Consistency(format!(
                        "blocked edge {h} in family {} lacks its shifted partner",
                        c2 + 1
                    )));
                }
                entries[q].1 = swapped;
            }
            entries[p].1 = restored;
        }
        if !Matching::new(entries.clone()).is_pairwise_disjoint() {
            return Err(Error::Consistency(format!(
                "pullback through S({i},{j}) broke disjointness"
            )));
        }
    }
    Ok(Matching::new(entries))
}

/// Membership and disjointness when family indices may repeat.
fn verify_repeated(m: &Matching, fams: &ColoredFamilies) -> Result<()> {
    if !m.is_pairwise_disjoint() {
        return Err(Error::Consistency(format!("{m} is not pairwise disjoint")));
    }
    for &(c, e) in m.entries() {
        if c >= fams.t() || !fams.family(c).contains(e) {
            return Err(Error::Consistency(format!(
                "edge {e} not in family {}",
                c + 1
            )));
        }
    }
    Ok(())
}

/// Extends a rainbow matching of the split families (on `[n-1]`) to one of
/// the compressed families on `[n]`.
///
/// Every `WithN` edge `F` gets a distinct new vertex `x` outside the matching;
/// the lowest-indexed one takes `n` itself, the rest take the smallest free
/// ids. `F ∪ {n}` is in the family by definition and stability under
/// `S_{n,x}` puts `F ∪ {x}` there too.
pub fn lift_decomposed_matching(
    fams: &ColoredFamilies,
    sides: &[Side],
    m: &Matching,
) -> Result<Matching> {
    let n = fams.n();
    let total: usize = fams.uniformities().iter().sum();
    if total > n {
        return Err(Error::Precondition(format!(
            "sum of uniformities {total} exceeds n={n}"
        )));
    }
    if !is_compressed(fams) {
        return Err(Error::Precondition(format!(
            "families are not stable under every S({n},j)"
        )));
    }
    let split = split_families(fams, sides)?;
    m.verify_rainbow(&split, fams.t()).map_err(|e| {
        Error::Precondition(format!("matching is not valid for the split instance: {e}"))
    })?;

    let support = m.support();
    let mut free = (1..n).filter(|&v| !support.contains(v));
    let mut top_used = false;
    let mut entries: Vec<(usize, Edge)> = m.entries().to_vec();
    entries.sort_unstable();
    for (c, e) in entries.iter_mut() {
        if sides[*c] == Side::WithN {
            let x = if !top_used {
                top_used = true;
                n
            } else {
                free.next().ok_or_else(|| {
                    Error::Consistency("ran out of free vertices while lifting".into())
                })?
            };
            *e = e.with(x);
        }
        if !fams.family(*c).contains(*e) {
            return Err(Error::Consistency(format!(
                "lifted edge {e} is not in family {}",
                *c + 1
            )));
        }
    }
    let lifted = Matching::new(entries);
    lifted.verify_rainbow(fams, fams.t())?;
    Ok(lifted)
}

//! Constructive matching extractors.
//!
//! Each extractor follows an inductive existence argument step by step and
//! returns the matching it produces, together with the sequence of cases
//! that fired. When the entry hypotheses hold, every step is guaranteed to
//! succeed; a step that fails anyway is reported as [`Error::Consistency`].
//! Hypotheses that fail at the entry point are [`Error::Precondition`].

use serde::Serialize;

use crate::binom::binom_signed;
use crate::bounds::{
    cover_bound, heavy_degree_threshold, high_degree_threshold, rainbow_threshold,
};
use crate::error::{Error, Result};
use crate::family::{ColoredFamilies, Edge, Matching, SetFamily};
use crate::shift::{
    compress_to_target, decompose, lift_decomposed_matching, pull_back_matching, split_families,
    Side,
};
use crate::solver::{rainbow_matching, SolverLimits};

/// Which branch of an argument produced a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CaseTag {
    /// A vertex of very high degree; recurse without it, then extend.
    HighDegreeVertex,
    /// `t` heavy centers; finish through link families and the rainbow lemma.
    TopDegreeLemma3,
    /// Recurse for `t-1` edges, then sweep for one more disjoint edge.
    GapSweep,
    /// Compress toward the top vertex.
    ShiftCompress,
    /// `t = 1`: any edge will do.
    SingletonBase,
    /// A 1-uniform family contains `{n}`; use it and recurse below `n`.
    SingletonPeel,
    /// Ground set exactly the sum of uniformities: exhaustive search.
    MinimalNBase,
    /// Split every family on containment of `n` and recurse on `[n-1]`.
    SplitRecurse,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtractionReport {
    pub matching: Matching,
    pub recursion_depth: usize,
    pub case_trace: Vec<CaseTag>,
}

struct Extractor {
    trace: Vec<CaseTag>,
    depth: usize,
    limits: SolverLimits,
}

/// Failed hypotheses of a nested call are bugs, not bad input.
fn nested(e: Error) -> Error {
    match e {
        Error::Precondition(msg) => {
            Error::Consistency(format!("recursive hypothesis failed: {msg}"))
        }
        other => other,
    }
}

fn first_edge(f: &SetFamily) -> Result<Edge> {
    f.edges()
        .first()
        .copied()
        .ok_or_else(|| Error::Consistency("expected a nonempty family".into()))
}

fn check_lemma3(fams: &ColoredFamilies) -> Result<()> {
    let n = fams.n();
    let t = fams.t();
    let total: usize = fams.uniformities().iter().sum();
    if total > n {
        return Err(Error::Precondition(format!(
            "n={n} is smaller than the sum of uniformities {total}"
        )));
    }
    for (i, f) in fams.families().iter().enumerate() {
        let threshold = (t as u128 - 1) * binom_signed(n as i64 - 1, f.k() as i64 - 1)?;
        if f.len() as u128 <= threshold {
            return Err(Error::Precondition(format!(
                "family {} has {} sets, needs more than (t-1)C(n-1,k-1) = {threshold}",
                i + 1,
                f.len()
            )));
        }
    }
    Ok(())
}

fn check_uniform_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::UnsupportedUniformity(format!(
            "degree-based extractors need k >= 2, got k={k}"
        )));
    }
    Ok(())
}

fn check_theorem_range(n: usize, k: usize, t: usize) -> Result<()> {
    if 3 * (k as u128) * (k as u128) * (t as u128) >= n as u128 {
        return Err(Error::Precondition(format!(
            "need 3k²t < n, got 3·{k}²·{t} >= {n}"
        )));
    }
    Ok(())
}

fn check_cover(i: usize, f: &SetFamily, t: usize) -> Result<()> {
    let bound = cover_bound(f.n() as u64, f.k() as u64, t as u64)?;
    if f.len() as u128 <= bound {
        return Err(Error::Precondition(format!(
            "family {} has {} edges, needs more than C(n,k)-C(n-t+1,k) = {bound}",
            i + 1,
            f.len()
        )));
    }
    Ok(())
}

fn check_centers(f: &SetFamily, t: usize, centers: &[usize]) -> Result<Edge> {
    if centers.len() != t {
        return Err(Error::Precondition(format!(
            "{} centers given, expected t={t}",
            centers.len()
        )));
    }
    let mut mask = Edge::EMPTY;
    for &v in centers {
        if v == 0 || v > f.n() {
            return Err(Error::Precondition(format!(
                "center {v} outside 1..={}",
                f.n()
            )));
        }
        if mask.contains(v) {
            return Err(Error::Precondition(format!("center {v} repeated")));
        }
        mask = mask.with(v);
    }
    Ok(mask)
}

impl Extractor {
    fn new(limits: SolverLimits) -> Self {
        Extractor {
            trace: Vec::new(),
            depth: 0,
            limits,
        }
    }

    fn enter(&mut self, depth: usize) {
        self.depth = self.depth.max(depth);
    }

    fn report(self, matching: Matching) -> ExtractionReport {
        ExtractionReport {
            matching,
            recursion_depth: self.depth,
            case_trace: self.trace,
        }
    }

    /// Rainbow matching under `|F_i| > (t-1)C(n-1,k_i-1)`, `n >= Σ k_i`.
    fn lemma3(&mut self, fams: &ColoredFamilies, depth: usize) -> Result<Matching> {
        self.enter(depth);
        if depth > 0 {
            check_lemma3(fams).map_err(nested)?;
        }
        let n = fams.n();
        let t = fams.t();
        if t == 1 {
            self.trace.push(CaseTag::SingletonBase);
            return Ok(Matching::new(vec![(0, first_edge(fams.family(0))?)]));
        }
        if fams.uniformities().iter().sum::<usize>() == n {
            self.trace.push(CaseTag::MinimalNBase);
            return rainbow_matching(fams, self.limits)?
                .matching
                .ok_or_else(|| {
                    Error::Consistency(
                        "no rainbow matching in a minimal instance above threshold".into(),
                    )
                });
        }

        self.trace.push(CaseTag::ShiftCompress);
        let (comp, shifts) = compress_to_target(fams, n)?;
        let top = Edge::singleton(n);
        let peel = (0..t).find(|&i| comp.family(i).k() == 1 && comp.family(i).contains(top));

        let compressed_matching = if let Some(i) = peel {
            self.trace.push(CaseTag::SingletonPeel);
            let others: Vec<usize> = (0..t).filter(|&j| j != i).collect();
            let below = ColoredFamilies::new(
                others
                    .iter()
                    .map(|&j| comp.family(j).restrict_below_top())
                    .collect(),
            )?;
            let sub = self.lemma3(&below, depth + 1)?;
            let mut entries: Vec<(usize, Edge)> = sub
                .into_entries()
                .into_iter()
                .map(|(c, e)| (others[c], e))
                .collect();
            entries.push((i, top));
            entries.sort_unstable();
            Matching::new(entries)
        } else {
            self.trace.push(CaseTag::SplitRecurse);
            let scale = t as u128 - 1;
            let sides = comp
                .families()
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let d = decompose(f);
                    let k = f.k() as i64;
                    let without_ok =
                        d.without_n.len() as u128 > scale * binom_signed(n as i64 - 2, k - 1)?;
                    let with_ok =
                        d.with_n.len() as u128 > scale * binom_signed(n as i64 - 2, k - 2)?;
                    // prefer keeping the uniformity when both halves are large
                    match (without_ok, with_ok) {
                        (true, _) => Ok(Side::WithoutN),
                        (false, true) => Ok(Side::WithN),
                        _ => Err(Error::Consistency(format!(
                            "family {} is large on neither side of the split",
                            i + 1
                        ))),
                    }
                })
                .collect::<Result<Vec<Side>>>()?;
            let split = split_families(&comp, &sides)?;
            let sub = self.lemma3(&split, depth + 1)?;
            lift_decomposed_matching(&comp, &sides, &sub).map_err(nested)?
        };
        pull_back_matching(&shifts, &compressed_matching)
    }

    /// `t` disjoint edges through `t` heavy centers, via link families.
    fn cor1(
        &mut self,
        f: &SetFamily,
        t: usize,
        centers: &[usize],
        depth: usize,
    ) -> Result<Matching> {
        self.enter(depth);
        let (n, k) = (f.n(), f.k());
        let cmask = check_centers(f, t, centers)?;
        self.trace.push(CaseTag::TopDegreeLemma3);
        let need = (t as u128 - 1) * binom_signed(n as i64 - t as i64 - 1, k as i64 - 2)?;
        let mut links = Vec::with_capacity(t);
        let mut relabel = None;
        for &v in centers {
            let link = f.link(v, cmask.without(v))?.family;
            let reduced = link.delete_vertices(cmask);
            if reduced.family.len() as u128 <= need {
                return Err(Error::Consistency(format!(
                    "link of {v} has {} sets, expected more than {need}",
                    reduced.family.len()
                )));
            }
            relabel = Some(reduced.relabel);
            links.push(reduced.family);
        }
        let relabel = relabel.expect("t >= 1");
        let sub = self
            .lemma3(&ColoredFamilies::new(links)?, depth + 1)
            .map_err(nested)?;
        let mut edges: Vec<Edge> = sub
            .entries()
            .iter()
            .map(|&(c, e)| relabel.to_old(e).with(centers[c]))
            .collect();
        edges.sort_unstable();
        Ok(Matching::plain(edges))
    }

    fn thm1(&mut self, f: &SetFamily, t: usize, depth: usize) -> Result<Matching> {
        self.enter(depth);
        let (n, k) = (f.n(), f.k());
        if depth > 0 {
            check_theorem_range(n, k, t).map_err(nested)?;
            check_cover(0, f, t).map_err(nested)?;
        }
        if t == 1 {
            self.trace.push(CaseTag::SingletonBase);
            return Ok(Matching::plain([first_edge(f)?]));
        }
        let seq = f.degree_sequence();
        let (v, dv) = seq[0];
        if dv as u128 > high_degree_threshold(n as u64, k as u64, t as u64)? {
            self.trace.push(CaseTag::HighDegreeVertex);
            let minus = f.delete_vertex(v)?;
            let sub = self.thm1(&minus.family, t - 1, depth + 1)?;
            let mut edges: Vec<Edge> = sub.edges().map(|e| minus.relabel.to_old(e)).collect();
            let used = edges.iter().fold(Edge::EMPTY, |a, &e| a.union(e));
            let last = f
                .iter()
                .find(|e| e.contains(v) && e.is_disjoint(used))
                .ok_or_else(|| Error::Consistency(format!("no edge through {v} avoids {used}")))?;
            edges.push(last);
            edges.sort_unstable();
            return Ok(Matching::plain(edges));
        }
        if seq[t - 1].1 as u128 > heavy_degree_threshold(n as u64, k as u64, t as u64)? {
            let centers: Vec<usize> = seq[..t].iter().map(|&(v, _)| v).collect();
            return self.cor1(f, t, &centers, depth);
        }
        self.trace.push(CaseTag::GapSweep);
        let sub = self.thm1(f, t - 1, depth + 1)?;
        let used = sub.support();
        let extra = f
            .iter()
            .find(|e| e.is_disjoint(used))
            .ok_or_else(|| Error::Consistency(format!("every edge meets {used}")))?;
        let mut edges: Vec<Edge> = sub.edges().chain([extra]).collect();
        edges.sort_unstable();
        Ok(Matching::plain(edges))
    }

    fn thm2(&mut self, fams: &ColoredFamilies, depth: usize) -> Result<Matching> {
        self.enter(depth);
        let n = fams.n();
        let t = fams.t();
        let k = fams.family(0).k();
        if depth > 0 {
            check_theorem_range(n, k, t).map_err(nested)?;
            for (i, f) in fams.families().iter().enumerate() {
                check_cover(i, f, t).map_err(nested)?;
            }
        }
        if t == 1 {
            self.trace.push(CaseTag::SingletonBase);
            return Ok(Matching::new(vec![(0, first_edge(fams.family(0))?)]));
        }
        let high = high_degree_threshold(n as u64, k as u64, t as u64)?;
        let heavy = heavy_degree_threshold(n as u64, k as u64, t as u64)?;
        let seqs: Vec<Vec<(usize, usize)>> = fams
            .families()
            .iter()
            .map(SetFamily::degree_sequence)
            .collect();

        if let Some(i) = (0..t).find(|&i| seqs[i][0].1 as u128 > high) {
            self.trace.push(CaseTag::HighDegreeVertex);
            let v = seqs[i][0].0;
            let others: Vec<usize> = (0..t).filter(|&j| j != i).collect();
            let removed = Edge::singleton(v);
            let reduced: Vec<_> = others
                .iter()
                .map(|&j| fams.family(j).delete_vertices(removed))
                .collect();
            let relabel = reduced[0].relabel.clone();
            let sub = self.thm2(
                &ColoredFamilies::new(reduced.into_iter().map(|r| r.family).collect())?,
                depth + 1,
            )?;
            let mut entries: Vec<(usize, Edge)> = sub
                .entries()
                .iter()
                .map(|&(c, e)| (others[c], relabel.to_old(e)))
                .collect();
            let used = entries.iter().fold(Edge::EMPTY, |a, &(_, e)| a.union(e));
            let last = fams
                .family(i)
                .iter()
                .find(|e| e.contains(v) && e.is_disjoint(used))
                .ok_or_else(|| {
                    Error::Consistency(format!(
                        "no edge of family {} through {v} avoids {used}",
                        i + 1
                    ))
                })?;
            entries.push((i, last));
            entries.sort_unstable();
            return Ok(Matching::new(entries));
        }

        if let Some(i) = (0..t).find(|&i| seqs[i][t - 1].1 as u128 <= heavy) {
            self.trace.push(CaseTag::GapSweep);
            let others: Vec<usize> = (0..t).filter(|&j| j != i).collect();
            let sub = self.thm2(
                &ColoredFamilies::new(others.iter().map(|&j| fams.family(j).clone()).collect())?,
                depth + 1,
            )?;
            let used = sub.support();
            let extra = fams
                .family(i)
                .iter()
                .find(|e| e.is_disjoint(used))
                .ok_or_else(|| {
                    Error::Consistency(format!("every edge of family {} meets {used}", i + 1))
                })?;
            let mut entries: Vec<(usize, Edge)> =
                sub.entries().iter().map(|&(c, e)| (others[c], e)).collect();
            entries.push((i, extra));
            entries.sort_unstable();
            return Ok(Matching::new(entries));
        }

        self.trace.push(CaseTag::TopDegreeLemma3);
        let heavy_sets: Vec<Vec<usize>> = seqs
            .iter()
            .map(|s| {
                s.iter()
                    .filter(|&&(_, d)| d as u128 > heavy)
                    .map(|&(v, _)| v)
                    .collect()
            })
            .collect();
        let centers = distinct_representatives(&heavy_sets).ok_or_else(|| {
            Error::Consistency("heavy vertices admit no system of distinct representatives".into())
        })?;
        let cmask = centers.iter().fold(Edge::EMPTY, |a, &v| a.with(v));
        let need = (t as u128 - 1) * binom_signed(n as i64 - t as i64 - 1, k as i64 - 2)?;
        let mut links = Vec::with_capacity(t);
        let mut relabel = None;
        for (i, &v) in centers.iter().enumerate() {
            let reduced = fams
                .family(i)
                .link(v, cmask.without(v))?
                .family
                .delete_vertices(cmask);
            if reduced.family.len() as u128 <= need {
                return Err(Error::Consistency(format!(
                    "link of {v} in family {} has {} sets, expected more than {need}",
                    i + 1,
                    reduced.family.len()
                )));
            }
            relabel = Some(reduced.relabel);
            links.push(reduced.family);
        }
        let relabel = relabel.expect("t >= 2");
        let sub = self
            .lemma3(&ColoredFamilies::new(links)?, depth + 1)
            .map_err(nested)?;
        let entries = sub
            .entries()
            .iter()
            .map(|&(c, e)| (c, relabel.to_old(e).with(centers[c])))
            .collect();
        Ok(Matching::new(entries).sorted())
    }
}

/// Distinct `v_i ∈ sets[i]`, by backtracking in index order and ascending
/// vertex order.
fn distinct_representatives(sets: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn go(sets: &[Vec<usize>], used: Edge, acc: &mut Vec<usize>) -> bool {
        let Some(options) = sets.get(acc.len()) else {
            return true;
        };
        let mut sorted = options.clone();
        sorted.sort_unstable();
        for v in sorted {
            if !used.contains(v) {
                acc.push(v);
                if go(sets, used.with(v), acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::with_capacity(sets.len());
    go(sets, Edge::EMPTY, &mut acc).then_some(acc)
}

fn finish_plain(ex: Extractor, f: &SetFamily, t: usize, m: Matching) -> Result<ExtractionReport> {
    if m.len() != t {
        return Err(Error::Consistency(format!(
            "extracted {} edges, expected {t}",
            m.len()
        )));
    }
    m.verify_in(f)?;
    Ok(ex.report(m))
}

/// Rainbow `t`-matching for families with `|F_i| > (t-1)C(n-1,k_i-1)` and
/// `n >= Σ k_i`, by compression, splitting on the top vertex and recursion.
pub fn rainbow_by_lemma3(fams: &ColoredFamilies) -> Result<ExtractionReport> {
    rainbow_by_lemma3_with(fams, SolverLimits::default())
}

pub fn rainbow_by_lemma3_with(
    fams: &ColoredFamilies,
    limits: SolverLimits,
) -> Result<ExtractionReport> {
    if let Some((i, f)) = fams.families().iter().enumerate().find(|(_, f)| f.k() < 1) {
        return Err(Error::Precondition(format!(
            "family {} has uniformity {}",
            i + 1,
            f.k()
        )));
    }
    check_lemma3(fams)?;
    let mut ex = Extractor::new(limits);
    let m = ex.lemma3(fams, 0)?;
    m.verify_rainbow(fams, fams.t())?;
    Ok(ex.report(m))
}

/// `t` disjoint edges given `t` distinct centers of degree above
/// `2(t-1)C(n-2,k-2)` and `kt <= n`.
pub fn t_disjoint_by_cor1(f: &SetFamily, t: usize, centers: &[usize]) -> Result<ExtractionReport> {
    let (n, k) = (f.n(), f.k());
    check_uniform_k(k)?;
    if t < 1 || k * t > n {
        return Err(Error::Precondition(format!(
            "need 1 <= t and kt <= n, got k={k} t={t} n={n}"
        )));
    }
    check_centers(f, t, centers)?;
    let heavy = heavy_degree_threshold(n as u64, k as u64, t as u64)?;
    for &v in centers {
        let d = f.degree(v)?;
        if d as u128 <= heavy {
            return Err(Error::Precondition(format!(
                "center {v} has degree {d}, needs more than 2(t-1)C(n-2,k-2) = {heavy}"
            )));
        }
    }
    let mut ex = Extractor::new(SolverLimits::default());
    let m = ex.cor1(f, t, centers, 0)?;
    finish_plain(ex, f, t, m)
}

/// `t` disjoint edges when `3k²t < n` and `e(F)` exceeds the cover bound.
pub fn t_disjoint_by_thm1(f: &SetFamily, t: usize) -> Result<ExtractionReport> {
    check_uniform_k(f.k())?;
    if t < 1 {
        return Err(Error::Precondition("t must be at least 1".into()));
    }
    check_theorem_range(f.n(), f.k(), t)?;
    check_cover(0, f, t)?;
    let mut ex = Extractor::new(SolverLimits::default());
    let m = ex.thm1(f, t, 0)?;
    finish_plain(ex, f, t, m)
}

/// Rainbow `t`-matching for `k`-uniform families each above the cover bound,
/// `3k²t < n`.
pub fn rainbow_by_thm2(fams: &ColoredFamilies) -> Result<ExtractionReport> {
    let ks = fams.uniformities();
    let k = ks[0];
    if ks.iter().any(|&ki| ki != k) {
        return Err(Error::Precondition(format!(
            "families must share one uniformity, got {ks:?}"
        )));
    }
    check_uniform_k(k)?;
    check_theorem_range(fams.n(), k, fams.t())?;
    for (i, f) in fams.families().iter().enumerate() {
        check_cover(i, f, fams.t())?;
    }
    let mut ex = Extractor::new(SolverLimits::default());
    let m = ex.thm2(fams, 0)?;
    m.verify_rainbow(fams, fams.t())?;
    Ok(ex.report(m))
}

/// `(t-1)C(n-1,k-1)` for every family, for callers reporting thresholds.
pub fn lemma3_thresholds(fams: &ColoredFamilies) -> Result<Vec<u128>> {
    fams.families()
        .iter()
        .map(|f| rainbow_threshold(fams.n() as u64, f.k() as u64, fams.t() as u64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{gen_cover_construction, gen_star_families};
    use crate::solver::has_t_matching;

    fn fam(n: usize, k: usize, edges: &[&[usize]]) -> SetFamily {
        SetFamily::new(n, k, edges.iter().copied()).unwrap()
    }

    fn plus(f: &SetFamily, extra: &[usize]) -> SetFamily {
        let mut edges = f.edges().to_vec();
        edges.push(Edge::from_vertices(extra.iter().copied()).unwrap());
        SetFamily::from_edges(f.n(), f.k(), edges).unwrap()
    }

    #[test]
    fn lemma3_single_family() {
        let f = fam(4, 2, &[&[2, 3], &[1, 4]]);
        let r = rainbow_by_lemma3(&ColoredFamilies::new(vec![f]).unwrap()).unwrap();
        assert_eq!(
            r.matching.entries(),
            &[(0, Edge::from_vertices([2, 3]).unwrap())]
        );
        assert_eq!(r.case_trace, vec![CaseTag::SingletonBase]);
    }

    #[test]
    fn lemma3_minimal_singletons() {
        let f = fam(2, 1, &[&[1], &[2]]);
        let fams = ColoredFamilies::repeated(&f, 2).unwrap();
        let r = rainbow_by_lemma3(&fams).unwrap();
        r.matching.verify_rainbow(&fams, 2).unwrap();
        assert_eq!(r.case_trace, vec![CaseTag::MinimalNBase]);
    }

    #[test]
    fn lemma3_cover_plus_one() {
        let f = plus(&gen_cover_construction(9, 3, 2).unwrap(), &[2, 3, 4]);
        assert_eq!(f.len(), 29);
        let fams = ColoredFamilies::repeated(&f, 2).unwrap();
        let r = rainbow_by_lemma3(&fams).unwrap();
        r.matching.verify_rainbow(&fams, 2).unwrap();
        assert!(r.case_trace.contains(&CaseTag::ShiftCompress));
    }

    #[test]
    fn lemma3_rejects_star_families() {
        let stars = gen_star_families(6, 2, 2).unwrap();
        let err = rainbow_by_lemma3(&stars).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)), "{err}");
        assert!(err.to_string().contains("family 1"));
    }

    #[test]
    fn cor1_examples() {
        let k6 = SetFamily::complete(6, 2);
        let r = t_disjoint_by_cor1(&k6, 2, &[1, 2]).unwrap();
        assert_eq!(r.matching.len(), 2);
        r.matching.verify_in(&k6).unwrap();
        assert!(r.matching.edges().any(|e| e.contains(1)));
        assert!(r.matching.edges().any(|e| e.contains(2)));

        let f = gen_cover_construction(12, 3, 3).unwrap();
        assert_eq!(f.degree(1).unwrap(), 55);
        let r = t_disjoint_by_cor1(&f, 2, &[1, 2]).unwrap();
        r.matching.verify_in(&f).unwrap();

        let r = t_disjoint_by_cor1(&k6, 1, &[4]).unwrap();
        assert!(r.matching.edges().all(|e| e.contains(4)));
    }

    #[test]
    fn cor1_rejects_light_center() {
        let f = fam(6, 2, &[&[1, 2], &[1, 3], &[2, 4]]);
        assert!(matches!(
            t_disjoint_by_cor1(&f, 2, &[1, 2]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn thm1_star_plus_edge() {
        let f = plus(&gen_cover_construction(25, 2, 2).unwrap(), &[2, 3]);
        let r = t_disjoint_by_thm1(&f, 2).unwrap();
        r.matching.verify_in(&f).unwrap();
        assert_eq!(r.matching.len(), 2);
        assert_eq!(r.case_trace[0], CaseTag::HighDegreeVertex);
        assert!(has_t_matching(&f, 2, SolverLimits::default())
            .unwrap()
            .found());
    }

    #[test]
    fn thm1_rejects_cover_construction() {
        let f = gen_cover_construction(25, 2, 2).unwrap();
        assert!(matches!(
            t_disjoint_by_thm1(&f, 2),
            Err(Error::Precondition(_))
        ));
        let small = SetFamily::complete(10, 2);
        assert!(matches!(
            t_disjoint_by_thm1(&small, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn thm2_two_stars() {
        let star = |c: usize, extra: [usize; 2]| {
            let mut edges: Vec<Vec<usize>> = (1..=25)
                .filter(|&v| v != c)
                .map(|v| if v < c { vec![v, c] } else { vec![c, v] })
                .collect();
            edges.push(extra.to_vec());
            SetFamily::new(25, 2, edges).unwrap()
        };
        let fams = ColoredFamilies::new(vec![star(1, [2, 3]), star(4, [5, 6])]).unwrap();
        let r = rainbow_by_thm2(&fams).unwrap();
        r.matching.verify_rainbow(&fams, 2).unwrap();
    }

    #[test]
    fn thm2_equal_families_match_thm1_contract() {
        let f = plus(&gen_cover_construction(40, 2, 2).unwrap(), &[5, 9]);
        let fams = ColoredFamilies::repeated(&f, 2).unwrap();
        let r2 = rainbow_by_thm2(&fams).unwrap();
        let r1 = t_disjoint_by_thm1(&f, 2).unwrap();
        assert_eq!(r2.matching.len(), r1.matching.len());
        r2.matching.verify_rainbow(&fams, 2).unwrap();
        let single = ColoredFamilies::new(vec![f.clone()]).unwrap();
        assert_eq!(
            rainbow_by_thm2(&single).unwrap().matching.entries()[0].1,
            f.edges()[0]
        );
    }

    #[test]
    fn sdr_backtracks() {
        assert_eq!(
            distinct_representatives(&[vec![1, 2], vec![1]]),
            Some(vec![2, 1])
        );
        assert_eq!(distinct_representatives(&[vec![1], vec![1]]), None);
    }
}

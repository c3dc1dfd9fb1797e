//! Seeded verification suites with machine-readable reports.
//!
//! Random suites draw every case from its own generator stream
//! ([`SplitMix64::for_case`]), run the cases in parallel, and merge results
//! in case order, so a report depends only on `(suite, seed, cases)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::binom::binom;
use crate::bounds::{
    clique_bound, cover_bound, degree_sum_gap_check, erdos_bound, gen_clique_construction,
    gen_cover_construction, gen_star_families, heavy_degree_threshold, high_degree_threshold,
    rainbow_threshold,
};
use crate::colex::KSubsets;
use crate::error::{Error, Result};
use crate::family::{ColoredFamilies, Edge, SetFamily};
use crate::format::{to_shg, to_shgm};
use crate::random::{sample_family, SplitMix64};
use crate::shift::{
    apply_shift, compress_to_target, is_compressed, lift_decomposed_matching, pull_back_matching,
    split_families, ShiftOp, Side,
};
use crate::solver::{
    has_t_matching, max_edges_no_t_matching, max_matching, rainbow_matching, SolverLimits,
};
use crate::witness::{rainbow_by_lemma3, rainbow_by_thm2, t_disjoint_by_cor1, t_disjoint_by_thm1};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Shifts preserve size, uniformity and rainbow-freeness.
    Lemma1,
    /// Splits of compressed rainbow-free families stay rainbow-free.
    Lemma2,
    /// Pullback through shift traces and lifting of split matchings.
    Pullback,
    Lemma3,
    Cor1,
    Thm1,
    Thm2,
    /// Closed-form grids and constructions.
    Bounds,
    /// Exhaustive extremal search against the closed form.
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Pullback,
        Suite::Lemma3,
        Suite::Cor1,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Bounds,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Pullback => "pullback",
            Suite::Lemma3 => "lemma3",
            Suite::Cor1 => "cor1",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Bounds => "bounds",
            Suite::Oracle => "oracle",
        }
    }

    /// Case count used when none is given.
    pub fn default_cases(self) -> usize {
        match self {
            Suite::Lemma1 => 1000,
            Suite::Lemma2 => 200,
            Suite::Pullback => 500,
            Suite::Lemma3 => 300,
            Suite::Cor1 | Suite::Thm1 | Suite::Thm2 => 100,
            Suite::Bounds | Suite::Oracle => 1,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub case: usize,
    pub message: String,
    /// The failing instance in SHG/SHGM form.
    pub instance: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: Suite,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Deterministic per-suite tallies.
    pub counters: BTreeMap<String, u64>,
    /// Not serialized: reports must be byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Outcome {
    failures: Vec<Failure>,
    counters: Vec<(&'static str, u64)>,
}

impl Outcome {
    fn count(&mut self, key: &'static str, by: u64) {
        self.counters.push((key, by));
    }

    fn fail(&mut self, case: usize, message: impl Into<String>, instance: String) {
        self.failures.push(Failure {
            case,
            message: message.into(),
            instance,
        });
    }

    /// Records `Err` results as failures.
    fn check(&mut self, case: usize, instance: &dyn Fn() -> String, r: Result<()>) {
        if let Err(e) = r {
            self.fail(case, e.to_string(), instance());
        }
    }
}

fn limits() -> SolverLimits {
    SolverLimits::default()
}

/// Runs a suite. `cases` is ignored by the deterministic grid suites.
pub fn run_suite(suite: Suite, seed: u64, cases: usize) -> SuiteReport {
    let start = Instant::now();
    let outcomes: Vec<Outcome> = match suite {
        Suite::Bounds => vec![bounds_suite()],
        Suite::Oracle => vec![oracle_suite()],
        _ => (0..cases)
            .into_par_iter()
            .map(|case| {
                let mut rng = SplitMix64::for_case(seed, case as u64);
                let mut out = Outcome::default();
                match suite {
                    Suite::Lemma1 => lemma1_case(case, &mut rng, &mut out),
                    Suite::Lemma2 => lemma2_case(case, &mut rng, &mut out),
                    Suite::Pullback => pullback_case(case, &mut rng, &mut out),
                    Suite::Lemma3 => lemma3_case(case, &mut rng, &mut out),
                    Suite::Cor1 => cor1_case(case, &mut rng, &mut out),
                    Suite::Thm1 => thm1_case(case, &mut rng, &mut out),
                    Suite::Thm2 => thm2_case(case, &mut rng, &mut out),
                    Suite::Bounds | Suite::Oracle => unreachable!(),
                }
                out
            })
            .collect(),
    };
    let mut failures = Vec::new();
    let mut counters = BTreeMap::new();
    for o in outcomes {
        failures.extend(o.failures);
        for (k, v) in o.counters {
            *counters.entry(k.to_string()).or_insert(0) += v;
        }
    }
    SuiteReport {
        schema: 1,
        suite,
        seed,
        cases: match suite {
            Suite::Bounds | Suite::Oracle => 1,
            _ => cases,
        },
        failures,
        counters,
        wall_time: start.elapsed(),
    }
}

// ---------------------------------------------------------------------------
// instance generation

/// Uniformities `k_1..k_t`, each in `1..=kmax`, with sum at most `n`.
fn draw_uniformities(rng: &mut SplitMix64, n: usize, t: usize, kmax: usize) -> Vec<usize> {
    assert!(t <= n, "t={t} sets cannot fit in n={n}");
    loop {
        let ks: Vec<usize> = (0..t).map(|_| rng.range(1, kmax)).collect();
        if ks.iter().sum::<usize>() <= n {
            return ks;
        }
    }
}

fn random_sized(rng: &mut SplitMix64, n: usize, k: usize) -> SetFamily {
    let total = binom(n as u64, k as u64).expect("desk scale") as u64;
    let m = rng.below(total + 1);
    sample_family(rng, n, k, m).expect("m <= total")
}

/// Random subfamily of the `k`-sets meeting `core`.
fn random_meeting(rng: &mut SplitMix64, n: usize, k: usize, core: Edge) -> SetFamily {
    let p = rng.next_f64();
    let edges: Vec<_> = KSubsets::new(n, k)
        .filter(|e| !e.is_disjoint(core))
        .filter(|_| rng.chance(p))
        .collect();
    SetFamily::from_edges(n, k, edges).expect("valid edges")
}

fn random_subset(rng: &mut SplitMix64, n: usize, size: usize) -> Edge {
    let mut vs: Vec<usize> = (1..=n).collect();
    rng.shuffle(&mut vs);
    Edge::from_vertices(vs.into_iter().take(size)).expect("valid vertices")
}

/// Families with no rainbow `t`-matching by construction: every set meets a
/// fixed `(t-1)`-set.
fn covered_instance(rng: &mut SplitMix64, n: usize, ks: &[usize]) -> ColoredFamilies {
    let core = random_subset(rng, n, ks.len() - 1);
    ColoredFamilies::new(
        ks.iter()
            .map(|&k| random_meeting(rng, n, k, core))
            .collect(),
    )
    .expect("t >= 1")
}

fn random_instance(rng: &mut SplitMix64, n: usize, ks: &[usize]) -> ColoredFamilies {
    ColoredFamilies::new(ks.iter().map(|&k| random_sized(rng, n, k)).collect()).expect("t >= 1")
}

fn dense_instance(rng: &mut SplitMix64, n: usize, ks: &[usize]) -> ColoredFamilies {
    let fams = ks
        .iter()
        .map(|&k| {
            let total = binom(n as u64, k as u64).expect("desk scale") as u64;
            let m = rng.range(total as usize / 2, total as usize) as u64;
            sample_family(rng, n, k, m).expect("m <= total")
        })
        .collect();
    ColoredFamilies::new(fams).expect("t >= 1")
}

fn has_rainbow(fams: &ColoredFamilies) -> Result<bool> {
    Ok(rainbow_matching(fams, limits())?.found())
}

// ---------------------------------------------------------------------------
// lemma1

fn lemma1_case(case: usize, rng: &mut SplitMix64, out: &mut Outcome) {
    let n = rng.range(3, 10);
    let t = rng.range(1, 3);
    let ks = draw_uniformities(rng, n, t, 3);
    let fams = if rng.chance(0.5) {
        covered_instance(rng, n, &ks)
    } else {
        random_instance(rng, n, &ks)
    };
    let i = rng.range(2, n);
    let j = rng.range(1, i - 1);
    let op = ShiftOp { i, j };
    let instance = || format!("# S({i},{j})\n{}", to_shgm(&fams));
    let r = (|| -> Result<()> {
        let shifted = apply_shift(&fams, op)?;
        for (idx, (a, b)) in fams.families().iter().zip(shifted.families()).enumerate() {
            if a.len() != b.len() {
                return Err(Error::Consistency(format!(
                    "family {} changed size {} -> {}",
                    idx + 1,
                    a.len(),
                    b.len()
                )));
            }
            if b.k() != a.k() || b.iter().any(|e| e.len() != a.k()) {
                return Err(Error::Consistency(format!(
                    "family {} lost uniformity",
                    idx + 1
                )));
            }
        }
        if !has_rainbow(&fams)? {
            out.count("rainbow_free_instances", 1);
            if has_rainbow(&shifted)? {
                return Err(Error::Consistency(
                    "shift created a rainbow matching".into(),
                ));
            }
        }
        let before = max_matching(fams.family(0), limits())?.nu;
        let after = max_matching(shifted.family(0), limits())?.nu;
        if after > before {
            return Err(Error::Consistency(format!(
                "shift raised nu from {before} to {after}"
            )));
        }
        if shifted != fams {
            out.count("effective_shifts", 1);
        }
        Ok(())
    })();
    out.check(case, &instance, r);
}

// ---------------------------------------------------------------------------
// lemma2

fn all_sides(t: usize) -> impl Iterator<Item = Vec<Side>> {
    (0u32..1 << t).map(move |bits| {
        (0..t)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Side::WithN
                } else {
                    Side::WithoutN
                }
            })
            .collect()
    })
}

fn rainbow_free_instance(rng: &mut SplitMix64) -> ColoredFamilies {
    loop {
        let n = rng.range(3, 10);
        let t = rng.range(1, 3);
        let ks = draw_uniformities(rng, n, t, 3);
        if rng.chance(0.5) {
            return covered_instance(rng, n, &ks);
        }
        let fams = random_instance(rng, n, &ks);
        if !has_rainbow(&fams).unwrap_or(true) {
            return fams;
        }
    }
}

fn lemma2_case(case: usize, rng: &mut SplitMix64, out: &mut Outcome) {
    let fams = rainbow_free_instance(rng);
    let instance = || to_shgm(&fams);
    let r = (|| -> Result<()> {
        let (comp, _) = compress_to_target(&fams, fams.n())?;
        if !is_compressed(&comp) {
            return Err(Error::Consistency(
                "compression did not reach a fixpoint".into(),
            ));
        }
        if has_rainbow(&comp)? {
            return Err(Error::Consistency(
                "compressed families gained a rainbow matching".into(),
            ));
        }
        for sides in all_sides(comp.t()) {
            let split = split_families(&comp, &sides)?;
            out.count("assignments", 1);
            if let Some(m) = rainbow_matching(&split, limits())?.matching {
                return Err(Error::Consistency(format!(
                    "split {sides:?} has rainbow matching {m}"
                )));
            }
        }
        Ok(())
    })();
    out.check(case, &instance, r);
}

// ---------------------------------------------------------------------------
// pullback and lift

fn pullback_case(case: usize, rng: &mut SplitMix64, out: &mut Outcome) {
    for _attempt in 0..100 {
        let n = rng.range(4, 10);
        let t = rng.range(1, 3);
        let ks = draw_uniformities(rng, n, t, 3);
        let fams = dense_instance(rng, n, &ks);
        let sides: Vec<Side> = (0..t)
            .map(|_| {
                if rng.chance(0.5) {
                    Side::WithN
                } else {
                    Side::WithoutN
                }
            })
            .collect();
        let instance = || format!("# sides {sides:?}\n{}", to_shgm(&fams));
        let (comp, trace) = match compress_to_target(&fams, n) {
            Ok(x) => x,
            Err(e) => return out.fail(case, e.to_string(), instance()),
        };
        let Ok(found) = rainbow_matching(&comp, limits()) else {
            continue;
        };
        let Some(m) = found.matching else { continue };
        out.count("trace_steps", trace.len() as u64);
        let r = pull_back_matching(&trace, &m).and_then(|back| back.verify_rainbow(&fams, t));
        out.count("pullbacks", 1);
        out.check(case, &instance, r);

        let r = (|| -> Result<()> {
            let split = split_families(&comp, &sides)?;
            if let Some(sm) = rainbow_matching(&split, limits())?.matching {
                out.count("lifts", 1);
                lift_decomposed_matching(&comp, &sides, &sm)?.verify_rainbow(&comp, t)?;
            }
            Ok(())
        })();
        out.check(case, &instance, r);
        return;
    }
    out.fail(
        case,
        "no instance with a rainbow matching in 100 attempts",
        String::new(),
    );
}

// ---------------------------------------------------------------------------
// lemma3

fn lemma3_case(case: usize, rng: &mut SplitMix64, out: &mut Outcome) {
    let (n, t, ks) = loop {
        let t = rng.range(1, 3);
        let n = rng.range(t.max(2), 12);
        let ks = draw_uniformities(rng, n, t, 3);
        // the threshold (t-1)C(n-1,k-1) is below C(n,k) iff (t-1)k < n
        if ks.iter().all(|&k| (t - 1) * k < n) {
            break (n, t, ks);
        }
    };
    let fams = ColoredFamilies::new(
        ks.iter()
            .map(|&k| {
                let thr =
                    rainbow_threshold(n as u64, k as u64, t as u64).expect("desk scale") as usize;
                let total = binom(n as u64, k as u64).expect("desk scale") as usize;
                let m = rng.range(thr + 1, total) as u64;
                sample_family(rng, n, k, m).expect("m <= total")
            })
            .collect(),
    )
    .expect("t >= 1");
    let instance = || to_shgm(&fams);
    let r = (|| -> Result<()> {
        let report = rainbow_by_lemma3(&fams)?;
        report.matching.verify_rainbow(&fams, t)?;
        if !has_rainbow(&fams)? {
            return Err(Error::Consistency(
                "solver disagrees: no rainbow matching".into(),
            ));
        }
        for tag in &report.case_trace {
            out.counters.push((tag_name(*tag), 1));
        }
        Ok(())
    })();
    out.check(case, &instance, r);

    // negative control: t >= 2 stars sit exactly at the threshold
    let k = ks[0];
    if t >= 2 && k * t <= n {
        let stars = gen_star_families(n, k, t).expect("k <= n");
        let instance = || to_shgm(&stars);
        let r = match rainbow_by_lemma3(&stars) {
            Err(Error::Precondition(_)) => match has_rainbow(&stars) {
                Ok(false) => Ok(()),
                Ok(true) => Err(Error::Consistency(
                    "star families have a rainbow matching".into(),
                )),
                Err(e) => Err(e),
            },
            Err(e) => Err(e),
            Ok(_) => Err(Error::Consistency(
                "extractor accepted star families".into(),
            )),
        };
        out.count("star_controls", 1);
        out.check(case, &instance, r);
    }
}

fn tag_name(tag: crate::witness::CaseTag) -> &'static str {
    use crate::witness::CaseTag::*;
    match tag {
        HighDegreeVertex => "case_high_degree_vertex",
        TopDegreeLemma3 => "case_top_degree_lemma3",
        GapSweep => "case_gap_sweep",
        ShiftCompress => "case_shift_compress",
        SingletonBase => "case_singleton_base",
        SingletonPeel => "case_singleton_peel",
        MinimalNBase => "case_minimal_n_base",
        SplitRecurse => "case_split_recurse",
    }
}

// ---------------------------------------------------------------------------
// cor1

fn cor1_case(case: usize, rng: &mut SplitMix64, out: &mut Outcome) {
    let (n, k, t) = loop {
        let k = rng.range(2, 3);
        let t = rng.range(1, 3);
        let n = rng.range(k * t, 12);
        let heavy = heavy_degree_threshold(n as u64, k as u64, t as u64).expect("small");
        if binom(n as u64 - 1, k as u64 - 1).expect("small") > heavy {
            break (n, k, t);
        }
    };
    let heavy = heavy_degree_threshold(n as u64, k as u64, t as u64).expect("small") as usize;
    let centers: Vec<usize> = random_subset(rng, n, t).vertices().collect();
    let base = random_sized(rng, n, k);
    let mut edges = base.edges().to_vec();
    for &v in &centers {
        let mut star: Vec<Edge> = KSubsets::new(n, k).filter(|e| e.contains(v)).collect();
        rng.shuffle(&mut star);
        let have = edges.iter().filter(|e| e.contains(v)).count();
        edges.extend(star.into_iter().take((heavy + 1).saturating_sub(have)));
        edges.sort_unstable();
        edges.dedup();
    }
    let f = SetFamily::from_edges(n, k, edges).expect("valid");
    let f = top_up(f, &centers, heavy);
    let instance = || format!("# t={t} centers {centers:?}\n{}", to_shg(&f));
    let r = (|| -> Result<()> {
        let report = t_disjoint_by_cor1(&f, t, &centers)?;
        if report.matching.len() != t {
            return Err(Error::Consistency("wrong matching size".into()));
        }
        report.matching.verify_in(&f)?;
        if !has_t_matching(&f, t, limits())?.found() {
            return Err(Error::Consistency("solver disagrees".into()));
        }
        Ok(())
    })();
    out.count("extractions", 1);
    out.check(case, &instance, r);
}

/// Adds sets through each center until its degree exceeds `floor`.
fn top_up(f: SetFamily, centers: &[usize], floor: usize) -> SetFamily {
    let (n, k) = (f.n(), f.k());
    let mut edges = f.edges().to_vec();
    for &v in centers {
        for e in KSubsets::new(n, k).filter(|e| e.contains(v)) {
            if edges.iter().filter(|x| x.contains(v)).count() > floor {
                break;
            }
            if !edges.contains(&e) {
                edges.push(e);
            }
        }
    }
    SetFamily::from_edges(n, k, edges).expect("valid")
}

// ---------------------------------------------------------------------------
// thm1 / thm2

/// A family above the cover bound, drawn from one of several shapes that
/// steer the extractor into different cases.
fn theorem_family(rng: &mut SplitMix64, n: usize, k: usize, t: usize) -> SetFamily {
    let cover = cover_bound(n as u64, k as u64, t as u64).expect("desk scale") as usize;
    let total = binom(n as u64, k as u64).expect("desk scale") as usize;
    let shapes = if k >= 3 { 4 } else { 3 };
    match rng.below(shapes) {
        // cover construction on a random core plus a few extra sets
        0 => {
            let core = random_subset(rng, n, t - 1);
            let mut edges: Vec<Edge> = KSubsets::new(n, k)
                .filter(|e| !e.is_disjoint(core))
                .collect();
            let mut rest: Vec<Edge> = KSubsets::new(n, k)
                .filter(|e| e.is_disjoint(core))
                .collect();
            rng.shuffle(&mut rest);
            let extra = rng.range(1, 5.min(rest.len()));
            edges.extend(rest.into_iter().take(extra));
            SetFamily::from_edges(n, k, edges).expect("valid")
        }
        // uniform size above the bound
        1 => {
            let m = rng.range(cover + 1, total) as u64;
            sample_family(rng, n, k, m).expect("m <= total")
        }
        // t centers of moderate degree over a random base, between the
        // heavy and high-degree thresholds
        3 => {
            let (nn, kk, tt) = (n as u64, k as u64, t as u64);
            let heavy = heavy_degree_threshold(nn, kk, tt).expect("small") as usize;
            let high = high_degree_threshold(nn, kk, tt).expect("small") as usize;
            let base = sample_family(rng, n, k, cover as u64 + 1).expect("m <= total");
            let centers: Vec<usize> = random_subset(rng, n, t).vertices().collect();
            top_up(base, &centers, rng.range(heavy, (heavy + high) / 2))
        }
        // low maximum degree: a union of cycles on a random vertex order
        // (k = 2), padded with random sets if that is not enough
        _ => {
            let mut order: Vec<usize> = (1..=n).collect();
            rng.shuffle(&mut order);
            let mut edges: Vec<Edge> = Vec::new();
            if k == 2 {
                for w in 0..n {
                    let (a, b) = (order[w], order[(w + 1) % n]);
                    edges.push(Edge::from_vertices([a, b]).expect("distinct"));
                }
            }
            let mut all: Vec<Edge> = KSubsets::new(n, k).collect();
            rng.shuffle(&mut all);
            let mut pool = all.into_iter();
            edges.sort_unstable();
            edges.dedup();
            while edges.len() <= cover {
                let e = pool.next().expect("total > cover");
                if !edges.contains(&e) {
                    edges.push(e);
                }
            }
            SetFamily::from_edges(n, k, edges).expect("valid")
        }
    }
}

fn theorem_params(rng: &mut SplitMix64) -> (usize, usize, usize) {
    if rng.chance(0.2) {
        return (rng.range(55, 60), 3, 2);
    }
    let n = rng.range(25, 40);
    let t = if 36 < n && rng.chance(0.5) { 3 } else { 2 };
    (n, 2, t)
}

fn thm1_case(case: usize, rng: &mut SplitMix64, out: &mut Outcome) {
    let (n, k, t) = theorem_params(rng);
    let f = theorem_family(rng, n, k, t);
    let instance = || format!("# t={t}\n{}", to_shg(&f));
    let r = (|| -> Result<()> {
        let report = t_disjoint_by_thm1(&f, t)?;
        if report.matching.len() != t {
            return Err(Error::Consistency("wrong matching size".into()));
        }
        report.matching.verify_in(&f)?;
        if !has_t_matching(&f, t, limits())?.found() {
            return Err(Error::Consistency("solver disagrees".into()));
        }
        for tag in &report.case_trace {
            out.counters.push((tag_name(*tag), 1));
        }
        Ok(())
    })();
    out.check(case, &instance, r);
}

fn thm2_case(case: usize, rng: &mut SplitMix64, out: &mut Outcome) {
    let (n, k, t) = theorem_params(rng);
    let fams = ColoredFamilies::new((0..t).map(|_| theorem_family(rng, n, k, t)).collect())
        .expect("t >= 1");
    let instance = || to_shgm(&fams);
    let r = (|| -> Result<()> {
        let report = rainbow_by_thm2(&fams)?;
        report.matching.verify_rainbow(&fams, t)?;
        if !has_rainbow(&fams)? {
            return Err(Error::Consistency("solver disagrees".into()));
        }
        for tag in &report.case_trace {
            out.counters.push((tag_name(*tag), 1));
        }
        Ok(())
    })();
    out.check(case, &instance, r);
}

// ---------------------------------------------------------------------------
// deterministic grids

fn bounds_suite() -> Outcome {
    let mut out = Outcome::default();
    let no_instance = String::new;

    // cover dominates clique throughout t(k+1) <= n
    for n in 1..=200u64 {
        for k in 2..=6u64 {
            for t in 2..=n {
                if t * (k + 1) > n {
                    break;
                }
                out.count("regime_points", 1);
                let r = (|| -> Result<()> {
                    let (cover, clique) = (cover_bound(n, k, t)?, clique_bound(k, t)?);
                    if cover <= clique {
                        return Err(Error::Consistency(format!(
                            "regime: n={n} k={k} t={t}: cover {cover} <= clique {clique}"
                        )));
                    }
                    Ok(())
                })();
                out.check(0, &no_instance, r);
            }
        }
    }

    // degree-sum gap throughout 3k²t < n
    for n in 1..=200u64 {
        for k in 2..=6u64 {
            for t in 2..=n {
                if 3 * k * k * t >= n {
                    break;
                }
                out.count("gap_points", 1);
                let r = degree_sum_gap_check(n, k, t).and_then(|(ok, lhs, rhs)| {
                    if ok {
                        Ok(())
                    } else {
                        Err(Error::Consistency(format!(
                            "gap: n={n} k={k} t={t}: {lhs} >= {rhs}"
                        )))
                    }
                });
                out.check(0, &no_instance, r);
            }
        }
    }

    // cover bound at t = 2 equals C(n-1, k-1)
    for n in 1..=60u64 {
        for k in 1..=n {
            let r = (|| -> Result<()> {
                if cover_bound(n, k, 2)? != binom(n - 1, k - 1)? {
                    return Err(Error::Consistency(format!(
                        "cover(n={n},k={k},2) != C(n-1,k-1)"
                    )));
                }
                Ok(())
            })();
            out.check(0, &no_instance, r);
        }
    }

    // constructions against their bounds and matching numbers
    for n in 1..=12usize {
        for k in 1..=4usize.min(n) {
            for t in 1..=3usize {
                if k * t > n {
                    continue;
                }
                out.count("construction_points", 1);
                let r = (|| -> Result<()> {
                    let cover = gen_cover_construction(n, k, t)?;
                    let clique = gen_clique_construction(n, k, t)?;
                    let (nn, kk, tt) = (n as u64, k as u64, t as u64);
                    if cover.len() as u128 != cover_bound(nn, kk, tt)? {
                        return Err(Error::Consistency(format!("cover size n={n} k={k} t={t}")));
                    }
                    if clique.len() as u128 != clique_bound(kk, tt)? {
                        return Err(Error::Consistency(format!("clique size n={n} k={k} t={t}")));
                    }
                    for (name, f) in [("cover", &cover), ("clique", &clique)] {
                        let nu = max_matching(f, limits())?.nu;
                        if nu != t - 1 {
                            return Err(Error::Consistency(format!(
                                "{name} n={n} k={k} t={t}: nu={nu}, expected {}",
                                t - 1
                            )));
                        }
                    }
                    Ok(())
                })();
                out.check(0, &no_instance, r);
            }
        }
    }
    out
}

/// `(n, k, t)` points small enough for the exhaustive extremal search.
pub const ORACLE_GRID: [(usize, usize, usize); 5] =
    [(5, 2, 2), (6, 2, 3), (6, 3, 2), (4, 2, 2), (6, 2, 2)];

fn oracle_suite() -> Outcome {
    let mut out = Outcome::default();
    for &(n, k, t) in &ORACLE_GRID {
        let r = (|| -> Result<()> {
            let ex = max_edges_no_t_matching(n, k, t, limits())?;
            let bound = erdos_bound(n as u64, k as u64, t as u64)?.erdos_bound;
            out.count("extremal_nodes", ex.nodes);
            if ex.max as u128 != bound {
                return Err(Error::Consistency(format!(
                    "({n},{k},{t}): exhaustive maximum {} != closed form {bound}",
                    ex.max
                )));
            }
            let nu = max_matching(&ex.family, limits())?.nu;
            if nu != t - 1 {
                return Err(Error::Consistency(format!(
                    "({n},{k},{t}): extremal family has nu={nu}"
                )));
            }
            if t == 2 && n >= 2 * k && ex.max as u128 != binom(n as u64 - 1, k as u64 - 1)? {
                return Err(Error::Consistency(format!(
                    "({n},{k},2): maximum differs from C(n-1,k-1)"
                )));
            }
            Ok(())
        })();
        out.count("grid_points", 1);
        out.check(0, &|| format!("# n={n} k={k} t={t}"), r);
    }
    out
}

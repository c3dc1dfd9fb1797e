//! Seeded instance generation.
//!
//! The generator is SplitMix64, chosen so that other implementations can
//! reproduce a failing case from its seed alone. With 64-bit wrapping
//! arithmetic, each draw is
//!
//! ```text
//! state = state + 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```
//!
//! Bounded integers use rejection sampling: draw `r` until
//! `r >= (2^64 - bound) mod bound`, then return `r mod bound`. Floats are
//! `(r >> 11) * 2^-53`. Case `c` of a suite with seed `s` uses the generator
//! seeded with `mix(s) ^ mix(c + 1)`, where `mix` is one SplitMix64 output
//! step applied to its argument as the state.

use std::collections::BTreeSet;

use crate::binom::binom;
use crate::colex::{unrank, KSubsets};
use crate::error::{Error, Result};
use crate::family::{ColoredFamilies, SetFamily};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for case `case` of a run seeded with `seed`.
    pub fn for_case(seed: u64, case: u64) -> Self {
        SplitMix64::new(mix(seed) ^ mix(case.wrapping_add(1)))
    }

    pub fn next_u64(&mut self) -> u64 {
        let out = mix(self.state);
        self.state = self.state.wrapping_add(GOLDEN);
        out
    }

    /// Uniform in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let floor = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= floor {
                return r % bound;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        lo + self.below((hi - lo) as u64 + 1) as usize
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// `m` distinct values from `0..total`, ascending (Floyd's algorithm).
    pub fn sample_distinct(&mut self, total: u64, m: u64) -> Vec<u64> {
        assert!(m <= total);
        let mut chosen = BTreeSet::new();
        for j in total - m..total {
            let r = self.below(j + 1);
            if !chosen.insert(r) {
                chosen.insert(j);
            }
        }
        chosen.into_iter().collect()
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// How many edges a random family gets.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Density {
    /// Exactly this many edges, uniformly without replacement.
    Count(u64),
    /// Each `k`-set independently with this probability.
    Probability(f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomFamilySpec {
    pub n: usize,
    pub k: usize,
    pub density: Density,
    pub seed: u64,
}

/// A family with `m` uniformly chosen colex positions.
pub fn sample_family(rng: &mut SplitMix64, n: usize, k: usize, m: u64) -> Result<SetFamily> {
    let total = binom(n as u64, k as u64)?;
    if m as u128 > total {
        return Err(Error::Validation(format!(
            "cannot draw {m} edges from C({n},{k})={total}"
        )));
    }
    let total = u64::try_from(total)
        .map_err(|_| Error::Validation(format!("C({n},{k}) too large to sample")))?;
    let edges = rng
        .sample_distinct(total, m)
        .into_iter()
        .map(|r| unrank(r as u128, n, k))
        .collect::<Result<Vec<_>>>()?;
    SetFamily::from_edges(n, k, edges)
}

pub fn random_family(spec: &RandomFamilySpec) -> Result<SetFamily> {
    if spec.k < 1 || spec.k > spec.n {
        return Err(Error::Validation(format!(
            "need 1 <= k <= n, got n={} k={}",
            spec.n, spec.k
        )));
    }
    let mut rng = SplitMix64::new(spec.seed);
    match spec.density {
        Density::Count(m) => sample_family(&mut rng, spec.n, spec.k, m),
        Density::Probability(p) => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::Validation(format!("probability {p} outside [0,1]")));
            }
            let edges: Vec<_> = KSubsets::new(spec.n, spec.k)
                .filter(|_| rng.chance(p))
                .collect();
            SetFamily::from_edges(spec.n, spec.k, edges)
        }
    }
}

pub fn random_colored(specs: &[RandomFamilySpec]) -> Result<ColoredFamilies> {
    ColoredFamilies::new(
        specs
            .iter()
            .map(random_family)
            .collect::<Result<Vec<_>>>()?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // first outputs for seed 0 of the reference SplitMix64
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn count_spec_is_deterministic() {
        let spec = RandomFamilySpec {
            n: 6,
            k: 2,
            density: Density::Count(5),
            seed: 1,
        };
        let a = random_family(&spec).unwrap();
        assert_eq!(a, random_family(&spec).unwrap());
        assert_eq!(a.len(), 5);
    }

    #[test]
    fn count_extremes() {
        let full = RandomFamilySpec {
            n: 6,
            k: 2,
            density: Density::Count(15),
            seed: 9,
        };
        assert_eq!(random_family(&full).unwrap(), SetFamily::complete(6, 2));
        let none = RandomFamilySpec {
            density: Density::Count(0),
            ..full
        };
        assert!(random_family(&none).unwrap().is_empty());
        let over = RandomFamilySpec {
            density: Density::Count(16),
            ..full
        };
        assert!(random_family(&over).is_err());
    }

    #[test]
    fn probability_extremes() {
        let spec = RandomFamilySpec {
            n: 7,
            k: 3,
            density: Density::Probability(1.0),
            seed: 3,
        };
        assert_eq!(random_family(&spec).unwrap().len(), 35);
        let spec = RandomFamilySpec {
            density: Density::Probability(0.0),
            ..spec
        };
        assert!(random_family(&spec).unwrap().is_empty());
    }

    #[test]
    fn below_stays_in_range() {
        let mut r = SplitMix64::new(42);
        for bound in [1u64, 2, 3, 7, 1000] {
            for _ in 0..200 {
                assert!(r.below(bound) < bound);
            }
        }
    }
}

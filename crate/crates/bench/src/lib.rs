//! Fixed benchmark inputs shared by the criterion benches.

use shiftmatch_core::bounds::gen_cover_construction;
use shiftmatch_core::family::{ColoredFamilies, Edge, SetFamily};
use shiftmatch_core::random::{sample_family, SplitMix64};

/// Cover construction plus one set avoiding its core.
pub fn cover_plus_one(n: usize, k: usize, t: usize) -> SetFamily {
    let cover = gen_cover_construction(n, k, t).expect("valid parameters");
    let extra = Edge::from_vertices(n + 1 - k..=n).expect("valid vertices");
    SetFamily::from_edges(n, k, cover.iter().chain([extra])).expect("valid edges")
}

/// `t` random families of `m` sets each, seeded.
pub fn random_colored(n: usize, k: usize, t: usize, m: u64, seed: u64) -> ColoredFamilies {
    let mut rng = SplitMix64::new(seed);
    let fams = (0..t)
        .map(|_| sample_family(&mut rng, n, k, m).expect("m fits"))
        .collect();
    ColoredFamilies::new(fams).expect("t >= 1")
}

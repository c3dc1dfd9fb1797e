use proptest::prelude::*;

use shiftmatch_core::colex::{rank, unrank};
use shiftmatch_core::family::Relabel;
use shiftmatch_core::random::{sample_family, SplitMix64};
use shiftmatch_core::shift::{apply_shift, compress_to_target, is_compressed, shift_family};
use shiftmatch_core::solver::greedy_matching;
use shiftmatch_core::{
    binom, max_matching, parse_shg, parse_shgm, rainbow_matching, to_shg, to_shgm, ColoredFamilies,
    Edge, SetFamily, ShiftOp, SolverLimits,
};

/// `(n, k, family)` with `n <= 9`, `k <= 3`.
fn small_family() -> impl Strategy<Value = SetFamily> {
    (2usize..=9, 1usize..=3, any::<u64>(), 0.0f64..=1.0).prop_map(|(n, k, seed, p)| {
        let k = k.min(n);
        let total = binom(n as u64, k as u64).unwrap() as u64;
        let m = (total as f64 * p) as u64;
        sample_family(&mut SplitMix64::new(seed), n, k, m).unwrap()
    })
}

fn small_colored() -> impl Strategy<Value = ColoredFamilies> {
    (3usize..=8, 1usize..=3, any::<u64>()).prop_map(|(n, t, seed)| {
        let mut rng = SplitMix64::new(seed);
        let fams = (0..t)
            .map(|_| {
                let k = rng.range(1, 3);
                let total = binom(n as u64, k as u64).unwrap() as u64;
                let m = rng.below(total + 1);
                sample_family(&mut rng, n, k, m).unwrap()
            })
            .collect();
        ColoredFamilies::new(fams).unwrap()
    })
}

fn limits() -> SolverLimits {
    SolverLimits::default()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn rank_unrank_round_trip(n in 1usize..=40, k in 1usize..=6, r in any::<u64>()) {
        let k = k.min(n);
        let total = binom(n as u64, k as u64).unwrap();
        let r = r as u128 % total;
        let e = unrank(r, n, k).unwrap();
        prop_assert_eq!(e.len(), k);
        prop_assert!(e.max_vertex().unwrap() <= n);
        prop_assert_eq!(rank(e).unwrap(), r);
    }

    #[test]
    fn construction_is_idempotent(f in small_family()) {
        let again = SetFamily::from_edges(f.n(), f.k(), f.iter().chain(f.iter())).unwrap();
        prop_assert_eq!(&again, &f);
    }

    #[test]
    fn degree_sum_is_k_times_edges(f in small_family()) {
        let total: usize = f.degrees().iter().sum();
        prop_assert_eq!(total, f.k() * f.len());
    }

    #[test]
    fn delete_vertex_drops_its_degree(f in small_family(), v in 1usize..=9) {
        let v = v.min(f.n());
        let d = f.degree(v).unwrap();
        let r = f.delete_vertex(v).unwrap();
        prop_assert_eq!(r.family.len(), f.len() - d);
        prop_assert_eq!(r.family.n(), f.n() - 1);
    }

    #[test]
    fn shift_preserves_size_and_uniformity(f in small_family(), i in 2usize..=9, j in 1usize..=8) {
        prop_assume!(j < i && i <= f.n());
        let g = shift_family(&f, ShiftOp::new(i, j).unwrap()).unwrap();
        prop_assert_eq!(g.len(), f.len());
        prop_assert!(g.iter().all(|e| e.len() == f.k()));
    }

    #[test]
    fn shift_never_creates_rainbow(fams in small_colored(), a in any::<usize>(), b in any::<usize>()) {
        if rainbow_matching(&fams, limits()).unwrap().found() {
            return Ok(());
        }
        let i = 2 + a % (fams.n() - 1);
        let j = 1 + b % (i - 1);
        let g = apply_shift(&fams, ShiftOp::new(i, j).unwrap()).unwrap();
        prop_assert!(!rainbow_matching(&g, limits()).unwrap().found());
    }

    #[test]
    fn compression_reaches_a_fixpoint(fams in small_colored()) {
        let (c, trace) = compress_to_target(&fams, fams.n()).unwrap();
        prop_assert!(is_compressed(&c));
        prop_assert!(trace.replay_matches(&c).unwrap());
    }

    #[test]
    fn shg_round_trip(f in small_family()) {
        prop_assert_eq!(parse_shg(&to_shg(&f)).unwrap(), f);
    }

    #[test]
    fn shgm_round_trip(fams in small_colored()) {
        prop_assert_eq!(parse_shgm(&to_shgm(&fams)).unwrap(), fams);
    }

    #[test]
    fn nu_is_invariant_under_relabeling(f in small_family(), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (1..=f.n()).collect();
        SplitMix64::new(seed).shuffle(&mut perm);
        let image = |e: Edge| Edge::from_vertices(e.vertices().map(|v| perm[v - 1])).unwrap();
        let g = SetFamily::from_edges(f.n(), f.k(), f.iter().map(image)).unwrap();
        prop_assert_eq!(max_matching(&f, limits()).unwrap().nu, max_matching(&g, limits()).unwrap().nu);
    }

    #[test]
    fn greedy_at_most_nu_at_most_edges(f in small_family()) {
        let g = greedy_matching(&f);
        prop_assert!(g.is_pairwise_disjoint());
        let m = max_matching(&f, limits()).unwrap();
        m.witness.verify_in(&f).unwrap();
        prop_assert_eq!(m.witness.len(), m.nu);
        prop_assert!(g.len() <= m.nu && m.nu <= f.len());
        prop_assert!(m.nu <= f.n() / f.k());
    }

    #[test]
    fn relabel_round_trip(n in 2usize..=20, removed in any::<u32>(), e in any::<u32>()) {
        let mask = |bits: u32| (bits as u128) & ((1u128 << n) - 1);
        let removed = Edge::from_mask(mask(removed));
        let r = Relabel::removing(n, removed);
        let e = Edge::from_mask(mask(e)).minus(removed);
        prop_assert_eq!(r.new_n(), n - removed.len());
        prop_assert_eq!(r.to_old(r.to_new(e)), e);
    }
}

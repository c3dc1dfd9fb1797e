//! Closed-form matching bounds, regime flags and the two extremal
//! constructions, all in exact integers.

use serde::Serialize;

use crate::binom::{binom, binom_signed, mul};
use crate::colex::KSubsets;
use crate::error::{Error, Result};
use crate::family::{ColoredFamilies, Edge, SetFamily};

/// Which construction attains the maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    CoverDominant,
    CliqueDominant,
    Tie,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub schema: u32,
    pub n: u64,
    pub k: u64,
    pub t: u64,
    #[serde(serialize_with = "as_string")]
    pub cover_bound: u128,
    #[serde(serialize_with = "as_string")]
    pub clique_bound: u128,
    #[serde(serialize_with = "as_string")]
    pub erdos_bound: u128,
    #[serde(serialize_with = "as_string")]
    pub rainbow_threshold: u128,
    pub regime: Regime,
    /// `3k²t < n`
    pub in_theorem_range: bool,
    /// `t(k+1) <= n`
    pub in_cover_range: bool,
    /// `tk <= n`
    pub in_conjecture_range: bool,
}

// u128 does not survive JSON number parsers intact.
fn as_string<S: serde::Serializer>(v: &u128, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `C(n,k) - C(n-t+1,k)`: edges of the family of all `k`-sets meeting a
/// fixed `(t-1)`-set.
pub fn cover_bound(n: u64, k: u64, t: u64) -> Result<u128> {
    if t < 1 || k > n || t > n + 1 {
        return Err(Error::Precondition(format!(
            "cover bound needs 1 <= t <= n+1 and k <= n, got n={n} k={k} t={t}"
        )));
    }
    Ok(binom(n, k)? - binom(n + 1 - t, k)?)
}

/// `C(kt-1, k)`: edges of the complete `k`-graph on `kt-1` vertices.
pub fn clique_bound(k: u64, t: u64) -> Result<u128> {
    if k < 1 || t < 1 {
        return Err(Error::Precondition(format!(
            "clique bound needs k,t >= 1, got k={k} t={t}"
        )));
    }
    let m = k
        .checked_mul(t)
        .ok_or_else(|| Error::Overflow(format!("k*t for k={k} t={t}")))?;
    binom(m - 1, k)
}

/// `(t-1) C(n-1, k_i-1)`.
pub fn rainbow_threshold(n: u64, k: u64, t: u64) -> Result<u128> {
    if k < 1 || t < 1 || n < 1 {
        return Err(Error::Precondition(format!(
            "rainbow threshold needs n,k,t >= 1, got n={n} k={k} t={t}"
        )));
    }
    mul((t - 1) as u128, binom(n - 1, k - 1)?, "rainbow threshold")
}

fn wide(a: u64, b: u64, c: u64) -> u128 {
    a as u128 * b as u128 * c as u128
}

pub fn erdos_bound(n: u64, k: u64, t: u64) -> Result<BoundReport> {
    let cover = cover_bound(n, k, t)?;
    let clique = clique_bound(k, t)?;
    let regime = match cover.cmp(&clique) {
        std::cmp::Ordering::Greater => Regime::CoverDominant,
        std::cmp::Ordering::Less => Regime::CliqueDominant,
        std::cmp::Ordering::Equal => Regime::Tie,
    };
    Ok(BoundReport {
        schema: 1,
        n,
        k,
        t,
        cover_bound: cover,
        clique_bound: clique,
        erdos_bound: cover.max(clique),
        rainbow_threshold: rainbow_threshold(n, k, t)?,
        regime,
        in_theorem_range: wide(3, k * k, t) < n as u128,
        in_cover_range: wide(t, k + 1, 1) <= n as u128,
        in_conjecture_range: wide(t, k, 1) <= n as u128,
    })
}

/// `k(t-1) C(n-2, k-2)`: the high-degree threshold.
pub fn high_degree_threshold(n: u64, k: u64, t: u64) -> Result<u128> {
    let c = binom_signed(n as i64 - 2, k as i64 - 2)?;
    mul(wide(k, t.saturating_sub(1), 1), c, "high degree threshold")
}

/// `2(t-1) C(n-2, k-2)`: the heavy-vertex threshold.
pub fn heavy_degree_threshold(n: u64, k: u64, t: u64) -> Result<u128> {
    let c = binom_signed(n as i64 - 2, k as i64 - 2)?;
    mul(wide(2, t.saturating_sub(1), 1), c, "heavy degree threshold")
}

/// Degree-sum comparison: whether `(t-1)²(3k-2) C(n-2,k-2)` is strictly
/// below `C(n,k) - C(n-t+1,k)`. Returns `(holds, lhs, rhs)`.
pub fn degree_sum_gap_check(n: u64, k: u64, t: u64) -> Result<(bool, u128, u128)> {
    if k < 2 || t < 1 {
        return Err(Error::Precondition(format!(
            "gap check needs k >= 2, t >= 1, got k={k} t={t}"
        )));
    }
    let s = (t - 1) as u128;
    let lhs = mul(
        s * s * (3 * k as u128 - 2),
        binom_signed(n as i64 - 2, k as i64 - 2)?,
        "gap lhs",
    )?;
    let rhs = cover_bound(n, k, t)?;
    Ok((lhs < rhs, lhs, rhs))
}

fn ksets(n: usize, k: usize, keep: impl Fn(Edge) -> bool) -> SetFamily {
    SetFamily::from_edges_unchecked(n, k, KSubsets::new(n, k).filter(|&e| keep(e)).collect())
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n || n > crate::family::MAX_N {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= n <= 128, got n={n} k={k}"
        )));
    }
    Ok(())
}

/// All `k`-subsets of `[n]` meeting `{1, ..., t-1}`.
pub fn gen_cover_construction(n: usize, k: usize, t: usize) -> Result<SetFamily> {
    check_nk(n, k)?;
    if t < 1 || t > n + 1 {
        return Err(Error::Precondition(format!(
            "cover construction needs 1 <= t <= n+1, got t={t}"
        )));
    }
    let core = Edge::from_mask(if t == 1 { 0 } else { u128::MAX >> (129 - t) });
    Ok(ksets(n, k, |e| !e.is_disjoint(core)))
}

/// All `k`-subsets of `[kt-1]`, on ground set `[n]`.
pub fn gen_clique_construction(n: usize, k: usize, t: usize) -> Result<SetFamily> {
    check_nk(n, k)?;
    if t < 1 || k * t - 1 > n {
        return Err(Error::Precondition(format!(
            "clique construction needs 1 <= t and kt-1 <= n, got kt-1={} n={n}",
            (k * t).saturating_sub(1)
        )));
    }
    let clique = KSubsets::new(k * t - 1, k).collect();
    Ok(SetFamily::from_edges_unchecked(n, k, clique))
}

/// `t` copies of the star of all `k`-sets through vertex 1.
pub fn gen_star_families(n: usize, k: usize, t: usize) -> Result<ColoredFamilies> {
    check_nk(n, k)?;
    if t < 1 {
        return Err(Error::Precondition("need t >= 1".into()));
    }
    ColoredFamilies::repeated(&ksets(n, k, |e| e.contains(1)), t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cover_and_clique_values() {
        assert_eq!(cover_bound(9, 3, 2).unwrap(), 28);
        assert_eq!(cover_bound(7, 3, 1).unwrap(), 0);
        assert_eq!(cover_bound(6, 2, 3).unwrap(), 9);
        assert_eq!(clique_bound(3, 2).unwrap(), 10);
        assert_eq!(clique_bound(2, 3).unwrap(), 10);
        assert_eq!(clique_bound(4, 1).unwrap(), 0);
    }

    #[test]
    fn report_fields() {
        let r = erdos_bound(9, 3, 2).unwrap();
        assert_eq!(r.erdos_bound, 28);
        assert_eq!(r.regime, Regime::CoverDominant);
        assert!(r.in_cover_range);
        assert!(!r.in_theorem_range);

        let r = erdos_bound(6, 2, 3).unwrap();
        assert_eq!(r.erdos_bound, 10);
        assert_eq!(r.regime, Regime::CliqueDominant);
        assert!(!r.in_cover_range);
        assert!(r.in_conjecture_range);

        let r = erdos_bound(8, 3, 1).unwrap();
        assert_eq!((r.erdos_bound, r.regime), (0, Regime::Tie));
    }

    #[test]
    fn range_flags_at_boundaries() {
        // 3·4·2 = 24: n = 24 is outside, n = 25 inside
        assert!(!erdos_bound(24, 2, 2).unwrap().in_theorem_range);
        assert!(erdos_bound(25, 2, 2).unwrap().in_theorem_range);
        assert!(erdos_bound(9, 2, 3).unwrap().in_cover_range);
        assert!(!erdos_bound(8, 2, 3).unwrap().in_cover_range);
    }

    #[test]
    fn thresholds() {
        assert_eq!(rainbow_threshold(9, 3, 2).unwrap(), 28);
        assert_eq!(rainbow_threshold(9, 3, 1).unwrap(), 0);
        assert_eq!(rainbow_threshold(5, 1, 3).unwrap(), 2);
    }

    #[test]
    fn gap_examples() {
        assert_eq!(degree_sum_gap_check(25, 2, 2).unwrap(), (true, 4, 24));
        assert_eq!(degree_sum_gap_check(10, 3, 1).unwrap(), (false, 0, 0));
        let (ok, lhs, rhs) = degree_sum_gap_check(55, 3, 2).unwrap();
        assert!(ok);
        assert_eq!((lhs, rhs), (371, 1431));
    }

    #[test]
    fn constructions() {
        let c = gen_cover_construction(5, 2, 2).unwrap();
        assert_eq!(
            c,
            SetFamily::new(5, 2, [[1, 2], [1, 3], [1, 4], [1, 5]]).unwrap()
        );
        assert!(gen_cover_construction(6, 3, 1).unwrap().is_empty());
        assert_eq!(gen_cover_construction(6, 2, 3).unwrap().len(), 9);

        assert_eq!(gen_clique_construction(6, 2, 3).unwrap().len(), 10);
        assert_eq!(
            gen_clique_construction(5, 3, 2).unwrap(),
            SetFamily::complete(5, 3)
        );
        assert!(gen_clique_construction(5, 3, 1).unwrap().is_empty());
        assert!(gen_clique_construction(5, 3, 3).is_err());

        let stars = gen_star_families(4, 2, 2).unwrap();
        assert_eq!(stars.t(), 2);
        assert_eq!(
            stars.family(0),
            &SetFamily::new(4, 2, [[1, 2], [1, 3], [1, 4]]).unwrap()
        );
    }
}

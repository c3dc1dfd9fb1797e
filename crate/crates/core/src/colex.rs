//! Colex enumeration, ranking and unranking of `k`-subsets of `[n]`.
//!
//! The colex rank of `{c_1 < ... < c_k}` (1-based) is
//! `sum_i C(c_i - 1, i)`, the combinatorial number system.

use crate::binom::binom;
use crate::error::{Error, Result};
use crate::family::{Edge, MAX_N};

/// Iterator over all `k`-subsets of `[n]` in colex order (Gosper's hack).
#[derive(Clone, Debug)]
pub struct KSubsets {
    next: Option<u128>,
    n: usize,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= MAX_N, "n={n} exceeds {MAX_N}");
        let next = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else if k == 128 {
            Some(u128::MAX)
        } else {
            Some((1u128 << k) - 1)
        };
        KSubsets { next, n }
    }
}

impl Iterator for KSubsets {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            match cur.checked_add(c) {
                None => None,
                Some(r) => {
                    let nxt = (((r ^ cur) >> 2) / c) | r;
                    (self.n == 128 || nxt >> self.n == 0).then_some(nxt)
                }
            }
        };
        Some(Edge::from_mask(cur))
    }
}

/// Colex rank of a set among sets of the same size.
pub fn rank(e: Edge) -> Result<u128> {
    let mut r = 0u128;
    for (i, v) in e.vertices().enumerate() {
        r += binom((v - 1) as u64, (i + 1) as u64)?;
    }
    Ok(r)
}

/// The `k`-subset of `[n]` at colex position `r`.
pub fn unrank(r: u128, n: usize, k: usize) -> Result<Edge> {
    let total = binom(n as u64, k as u64)?;
    if r >= total {
        return Err(Error::Validation(format!(
            "rank {r} out of range for C({n},{k})={total}"
        )));
    }
    let mut rest = r;
    let mut mask = 0u128;
    let mut hi = n;
    for i in (1..=k).rev() {
        // largest c (0-based) with C(c, i) <= rest
        let mut c = hi - 1;
        while binom(c as u64, i as u64)? > rest {
            c -= 1;
        }
        rest -= binom(c as u64, i as u64)?;
        mask |= 1u128 << c;
        hi = c;
    }
    Ok(Edge::from_mask(mask))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(n: usize, k: usize) -> Vec<Vec<usize>> {
        KSubsets::new(n, k).map(Edge::to_vec).collect()
    }

    #[test]
    fn enumerate_4_choose_2() {
        assert_eq!(
            sets(4, 2),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
                vec![1, 4],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }

    #[test]
    fn degenerate_sizes() {
        assert_eq!(sets(3, 0), vec![Vec::<usize>::new()]);
        assert!(sets(2, 3).is_empty());
        assert_eq!(sets(3, 3), vec![vec![1, 2, 3]]);
        assert_eq!(KSubsets::new(0, 0).count(), 1);
    }

    #[test]
    fn counts_match_binomials() {
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(
                    KSubsets::new(n, k).count() as u128,
                    binom(n as u64, k as u64).unwrap()
                );
            }
        }
    }

    #[test]
    fn rank_unrank_examples() {
        let e = Edge::from_vertices([1, 2, 3]).unwrap();
        assert_eq!(rank(e).unwrap(), 0);
        assert_eq!(unrank(5, 4, 2).unwrap().to_vec(), vec![3, 4]);
        assert!(unrank(6, 4, 2).is_err());
    }

    #[test]
    fn ranks_follow_enumeration() {
        for (i, e) in KSubsets::new(9, 4).enumerate() {
            assert_eq!(rank(e).unwrap(), i as u128);
            assert_eq!(unrank(i as u128, 9, 4).unwrap(), e);
        }
    }

    #[test]
    fn top_of_ground_set() {
        let last = KSubsets::new(128, 2).last().unwrap();
        assert_eq!(last.to_vec(), vec![127, 128]);
        assert_eq!(KSubsets::new(128, 1).count(), 128);
    }
}

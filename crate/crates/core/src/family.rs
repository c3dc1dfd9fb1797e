//! Edges, uniform set families and colored family collections.
//!
//! An [`Edge`] is a subset of the ground set `[n] = {1, ..., n}` stored as a
//! bitmask with bit `v - 1` standing for vertex `v`. Comparing two masks as
//! integers is exactly colex order on the underlying sets, so a family sorted
//! by mask is colex-sorted.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_N: usize = 128;

/// A set of vertices from `[n]`, `n <= 128`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Edge(u128);

impl Edge {
    pub const EMPTY: Edge = Edge(0);

    pub const fn from_mask(mask: u128) -> Self {
        Edge(mask)
    }

    pub const fn mask(self) -> u128 {
        self.0
    }

    /// Builds an edge from 1-based vertex ids in any order.
    ///
    /// Fails on a zero id, an id above [`MAX_N`] or a repeated id.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut mask = 0u128;
        for v in vertices {
            if v == 0 || v > MAX_N {
                return Err(Error::Validation(format!("vertex {v} outside 1..={MAX_N}")));
            }
            let bit = 1u128 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::Validation(format!("vertex {v} repeated in edge")));
            }
            mask |= bit;
        }
        Ok(Edge(mask))
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_N).contains(&v));
        Edge(1u128 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_N).contains(&v) && self.0 & (1u128 << (v - 1)) != 0
    }

    pub fn is_disjoint(self, other: Edge) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Edge) -> Edge {
        Edge(self.0 | other.0)
    }

    pub fn minus(self, other: Edge) -> Edge {
        Edge(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Edge {
        self.union(Edge::singleton(v))
    }

    pub fn without(self, v: usize) -> Edge {
        self.minus(Edge::singleton(v))
    }

    /// Largest vertex, if any.
    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 128 - self.0.leading_zeros() as usize)
    }

    /// Smallest vertex, if any.
    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }
}

/// Iterator over the vertices of an [`Edge`], ascending.
#[derive(Clone, Debug)]
pub struct Vertices(u128);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, v) in self.vertices().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.vertices())
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        Edge::from_vertices(vs).map_err(serde::de::Error::custom)
    }
}

/// A `k`-uniform family of subsets of `[n]`, deduplicated and colex-sorted.
///
/// `k = 0` is representable (the family is then empty or `{∅}`) because the
/// decomposition of a 1-uniform family produces it; [`SetFamily::new`] rejects
/// it for user input.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SetFamily {
    n: usize,
    k: usize,
    edges: Vec<Edge>,
}

impl SetFamily {
    /// Validates, deduplicates and colex-sorts a raw edge list.
    pub fn new<E, I>(n: usize, k: usize, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if k < 1 {
            return Err(Error::Validation(format!(
                "uniformity k={k} must be at least 1"
            )));
        }
        let mut edges = Vec::new();
        for r in raw {
            let r = r.as_ref();
            if let Some(&bad) = r.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::Validation(format!(
                    "edge {r:?}: vertex {bad} > n={n}"
                )));
            }
            let e = Edge::from_vertices(r.iter().copied())
                .map_err(|err| Error::Validation(format!("edge {r:?}: {err}")))?;
            if e.len() != k || r.len() != k {
                return Err(Error::Validation(format!(
                    "edge {r:?} has {} vertices, expected k={k}",
                    r.len()
                )));
            }
            edges.push(e);
        }
        Self::from_edges(n, k, edges)
    }

    /// Builds a family from already-constructed edges, validating each.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, k: usize, edges: I) -> Result<Self> {
        if n > MAX_N {
            return Err(Error::Validation(format!(
                "n={n} exceeds supported maximum {MAX_N}"
            )));
        }
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for &e in &edges {
            if e.len() != k {
                return Err(Error::Validation(format!(
                    "edge {e} has {} vertices, expected k={k}",
                    e.len()
                )));
            }
            if let Some(m) = e.max_vertex() {
                if m > n {
                    return Err(Error::Validation(format!("edge {e}: vertex {m} > n={n}")));
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(SetFamily { n, k, edges })
    }

    /// Trusted constructor for edges known to be valid; sorts and dedups.
    pub(crate) fn from_edges_unchecked(n: usize, k: usize, mut edges: Vec<Edge>) -> Self {
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == k && e.max_vertex().unwrap_or(0) <= n));
        edges.sort_unstable();
        edges.dedup();
        SetFamily { n, k, edges }
    }

    pub fn empty(n: usize, k: usize) -> Self {
        SetFamily {
            n,
            k,
            edges: Vec::new(),
        }
    }

    /// All `k`-subsets of `[n]`.
    pub fn complete(n: usize, k: usize) -> Self {
        SetFamily {
            n,
            k,
            edges: crate::colex::KSubsets::new(n, k).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of edges, `e(F)`.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::Validation(format!(
                "vertex {v} outside 1..={}",
                self.n
            )))
        } else {
            Ok(())
        }
    }

    /// `d(v)`: number of edges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// All `n` degrees indexed by `v - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            for v in e.vertices() {
                d[v - 1] += 1;
            }
        }
        d
    }

    /// `(vertex, degree)` for every vertex, degree descending, ties by id.
    pub fn degree_sequence(&self) -> Vec<(usize, usize)> {
        let mut seq: Vec<(usize, usize)> = self
            .degrees()
            .into_iter()
            .enumerate()
            .map(|(i, d)| (i + 1, d))
            .collect();
        seq.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        seq
    }

    /// Link of `v` avoiding `excluded`: the `(k-1)`-sets `e \ {v}` over edges
    /// `e ∋ v` with `e ∩ excluded = ∅`. Labels are kept; the effective number
    /// of usable vertices is recorded alongside.
    pub fn link(&self, v: usize, excluded: Edge) -> Result<Link> {
        self.check_vertex(v)?;
        if self.k < 2 {
            return Err(Error::UnsupportedUniformity(format!(
                "link requires k >= 2, got k={}",
                self.k
            )));
        }
        if excluded.contains(v) {
            return Err(Error::Precondition(format!(
                "link vertex {v} is in the excluded set"
            )));
        }
        if excluded.max_vertex().unwrap_or(0) > self.n {
            return Err(Error::Validation(format!(
                "excluded set {excluded} exceeds n={}",
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.contains(v) && e.is_disjoint(excluded))
            .map(|e| e.without(v))
            .collect();
        Ok(Link {
            family: SetFamily::from_edges_unchecked(self.n, self.k - 1, edges),
            effective_n: self.n - excluded.len() - 1,
        })
    }

    /// Sub-family induced on `[n] \ {v}`, relabeled onto `[n-1]`.
    pub fn delete_vertex(&self, v: usize) -> Result<Relabeled> {
        self.check_vertex(v)?;
        Ok(self.delete_vertices(Edge::singleton(v)))
    }

    /// Sub-family induced on `[n] \ removed`, relabeled onto a contiguous
    /// ground set with order preserved.
    pub fn delete_vertices(&self, removed: Edge) -> Relabeled {
        let relabel = Relabel::removing(self.n, removed);
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_disjoint(removed))
            .map(|&e| relabel.to_new(e))
            .collect();
        Relabeled {
            family: SetFamily::from_edges_unchecked(relabel.new_n(), self.k, edges),
            relabel,
        }
    }

    /// Edges not containing vertex `n`, viewed on the ground set `[n-1]`.
    pub fn restrict_below_top(&self) -> SetFamily {
        let top = self.n;
        SetFamily {
            n: top.saturating_sub(1),
            k: self.k,
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|e| !e.contains(top))
                .collect(),
        }
    }

    /// Same edges on a larger ground set.
    pub fn widen(&self, n: usize) -> Result<SetFamily> {
        if n < self.n {
            return Err(Error::Validation(format!(
                "cannot shrink ground set {} to {n}",
                self.n
            )));
        }
        Ok(SetFamily {
            n,
            k: self.k,
            edges: self.edges.clone(),
        })
    }
}

/// Result of [`SetFamily::link`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Link {
    pub family: SetFamily,
    /// `n - |excluded| - 1`
    pub effective_n: usize,
}

/// An order-preserving relabeling of `[n] \ removed` onto `[n - |removed|]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    /// `old_ids[new - 1]` is the original id of new vertex `new`.
    old_ids: Vec<usize>,
    old_n: usize,
}

impl Relabel {
    pub fn removing(n: usize, removed: Edge) -> Self {
        Relabel {
            old_ids: (1..=n).filter(|&v| !removed.contains(v)).collect(),
            old_n: n,
        }
    }

    pub fn new_n(&self) -> usize {
        self.old_ids.len()
    }

    pub fn old_n(&self) -> usize {
        self.old_n
    }

    pub fn old_ids(&self) -> &[usize] {
        &self.old_ids
    }

    pub fn to_old(&self, e: Edge) -> Edge {
        Edge::from_mask(
            e.vertices()
                .fold(0u128, |m, v| m | 1u128 << (self.old_ids[v - 1] - 1)),
        )
    }

    /// Maps an edge avoiding the removed vertices into the new labels.
    pub fn to_new(&self, e: Edge) -> Edge {
        Edge::from_mask(e.vertices().fold(0u128, |m, v| {
            let idx = self
                .old_ids
                .binary_search(&v)
                .expect("edge touches a removed vertex");
            m | 1u128 << idx
        }))
    }
}

/// A family together with the relabeling that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeled {
    pub family: SetFamily,
    pub relabel: Relabel,
}

/// An ordered list of families `F_1, ..., F_t` on a common ground set.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct ColoredFamilies {
    n: usize,
    families: Vec<SetFamily>,
}

impl ColoredFamilies {
    pub fn new(families: Vec<SetFamily>) -> Result<Self> {
        let n = families
            .first()
            .map(SetFamily::n)
            .ok_or_else(|| Error::Validation("at least one family is required".into()))?;
        if let Some((i, f)) = families.iter().enumerate().find(|(_, f)| f.n() != n) {
            return Err(Error::Validation(format!(
                "family {} has n={} but family 1 has n={n}",
                i + 1,
                f.n()
            )));
        }
        Ok(ColoredFamilies { n, families })
    }

    /// `t` copies of one family.
    pub fn repeated(f: &SetFamily, t: usize) -> Result<Self> {
        Self::new(vec![f.clone(); t])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of families `t`.
    pub fn t(&self) -> usize {
        self.families.len()
    }

    pub fn families(&self) -> &[SetFamily] {
        &self.families
    }

    pub fn family(&self, i: usize) -> &SetFamily {
        &self.families[i]
    }

    pub fn uniformities(&self) -> Vec<usize> {
        self.families.iter().map(SetFamily::k).collect()
    }

    pub fn into_families(self) -> Vec<SetFamily> {
        self.families
    }
}

/// Disjoint edges, each tagged with the 0-based index of its source family.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize)]
pub struct Matching {
    entries: Vec<(usize, Edge)>,
}

impl Matching {
    pub fn new(entries: Vec<(usize, Edge)>) -> Self {
        Matching { entries }
    }

    /// A matching from a single family: every entry is tagged `0`.
    pub fn plain<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        Matching {
            entries: edges.into_iter().map(|e| (0, e)).collect(),
        }
    }

    pub fn entries(&self) -> &[(usize, Edge)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Edge)> {
        self.entries
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.entries.iter().map(|&(_, e)| e)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Union of all edges.
    pub fn support(&self) -> Edge {
        self.edges().fold(Edge::EMPTY, Edge::union)
    }

    /// Entries ordered by family index, then by edge.
    pub fn sorted(mut self) -> Self {
        self.entries.sort_unstable();
        self
    }

    pub fn is_pairwise_disjoint(&self) -> bool {
        let mut seen = Edge::EMPTY;
        for e in self.edges() {
            if !seen.is_disjoint(e) {
                return false;
            }
            seen = seen.union(e);
        }
        true
    }

    /// Checks disjointness and that every edge lies in one family.
    pub fn verify_in(&self, family: &SetFamily) -> Result<()> {
        if !self.is_pairwise_disjoint() {
            return Err(Error::Consistency(format!(
                "matching {self} is not pairwise disjoint"
            )));
        }
        if let Some(e) = self.edges().find(|&e| !family.contains(e)) {
            return Err(Error::Consistency(format!("edge {e} is not in the family")));
        }
        Ok(())
    }

    /// Checks a rainbow matching: disjoint, distinct family indices, each
    /// edge a member of its family, and exactly `size` entries.
    pub fn verify_rainbow(&self, fams: &ColoredFamilies, size: usize) -> Result<()> {
        if self.len() != size {
            return Err(Error::Consistency(format!(
                "matching has {} edges, expected {size}",
                self.len()
            )));
        }
        if !self.is_pairwise_disjoint() {
            return Err(Error::Consistency(format!(
                "matching {self} is not pairwise disjoint"
            )));
        }
        let mut used = vec![false; fams.t()];
        for &(i, e) in &self.entries {
            if i >= fams.t() {
                return Err(Error::Consistency(format!(
                    "family index {} out of range",
                    i + 1
                )));
            }
            if std::mem::replace(&mut used[i], true) {
                return Err(Error::Consistency(format!("family {} used twice", i + 1)));
            }
            if !fams.family(i).contains(e) {
                return Err(Error::Consistency(format!(
                    "edge {e} is not in family {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, (i, e)) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "F{}:{e}", i + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, k: usize, edges: &[&[usize]]) -> SetFamily {
        SetFamily::new(n, k, edges.iter().copied()).unwrap()
    }

    #[test]
    fn make_family_dedups_and_sorts() {
        let f = fam(3, 2, &[&[2, 1], &[1, 2]]);
        assert_eq!(f.len(), 1);
        assert_eq!(f.edges()[0].to_vec(), vec![1, 2]);
        let g = SetFamily::new(3, 2, [[2, 3], [1, 3], [1, 2]]).unwrap();
        let order: Vec<_> = g.iter().map(Edge::to_vec).collect();
        assert_eq!(order, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn make_family_rejects_bad_input() {
        let err = SetFamily::new(4, 2, [[1, 5]]).unwrap_err();
        assert!(err.to_string().contains("vertex 5 > n=4"), "{err}");
        assert!(SetFamily::new(4, 2, [vec![1, 2, 3]]).is_err());
        assert!(SetFamily::new(4, 2, [[1, 1]]).is_err());
        assert!(SetFamily::new(4, 0, Vec::<Vec<usize>>::new()).is_err());
        let empty = SetFamily::new(5, 3, Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(empty.len(), 0);
    }

    #[test]
    fn degrees() {
        let k4 = SetFamily::complete(4, 2);
        assert_eq!(k4.degree(1).unwrap(), 3);
        assert!(k4.degree_sequence().iter().all(|&(_, d)| d == 3));
        assert_eq!(SetFamily::empty(4, 2).degree(2).unwrap(), 0);
        assert!(k4.degree(5).is_err());
        let f = fam(3, 2, &[&[1, 2], &[1, 3]]);
        assert_eq!(f.degree_sequence(), vec![(1, 2), (2, 1), (3, 1)]);
    }

    #[test]
    fn link_examples() {
        let f = fam(5, 3, &[&[1, 2, 3], &[1, 4, 5]]);
        let l = f.link(1, Edge::EMPTY).unwrap();
        assert_eq!(l.family, fam(5, 2, &[&[2, 3], &[4, 5]]));
        assert_eq!(l.effective_n, 4);

        let f = fam(3, 3, &[&[1, 2, 3]]);
        assert!(f.link(1, Edge::singleton(2)).unwrap().family.is_empty());

        let star: Vec<Vec<usize>> = SetFamily::complete(5, 3)
            .iter()
            .filter(|e| e.contains(1))
            .map(Edge::to_vec)
            .collect();
        let l = SetFamily::new(5, 3, star)
            .unwrap()
            .link(1, Edge::EMPTY)
            .unwrap();
        assert_eq!(l.family.len(), 6);
        assert!(l.family.iter().all(|e| !e.contains(1)));

        let one = fam(3, 1, &[&[1]]);
        assert!(matches!(
            one.link(1, Edge::EMPTY),
            Err(Error::UnsupportedUniformity(_))
        ));
    }

    #[test]
    fn delete_vertex_relabels() {
        let f = fam(3, 2, &[&[1, 2], &[2, 3]]);
        let r = f.delete_vertex(1).unwrap();
        assert_eq!(r.family, fam(2, 2, &[&[1, 2]]));
        assert_eq!(r.relabel.to_old(r.family.edges()[0]).to_vec(), vec![2, 3]);

        let star = fam(4, 2, &[&[1, 2], &[1, 3], &[1, 4]]);
        assert!(star.delete_vertex(1).unwrap().family.is_empty());

        let k3 = SetFamily::complete(4, 2).delete_vertex(4).unwrap().family;
        assert_eq!(k3, SetFamily::complete(3, 2));
    }

    #[test]
    fn matching_verification() {
        let k4 = SetFamily::complete(4, 2);
        let e = |v: &[usize]| Edge::from_vertices(v.iter().copied()).unwrap();
        Matching::plain([e(&[1, 2]), e(&[3, 4])])
            .verify_in(&k4)
            .unwrap();
        assert!(Matching::plain([e(&[1, 2]), e(&[2, 4])])
            .verify_in(&k4)
            .is_err());

        let fams = ColoredFamilies::new(vec![k4.clone(), k4]).unwrap();
        Matching::new(vec![(0, e(&[1, 2])), (1, e(&[3, 4]))])
            .verify_rainbow(&fams, 2)
            .unwrap();
        assert!(Matching::new(vec![(0, e(&[1, 2])), (0, e(&[3, 4]))])
            .verify_rainbow(&fams, 2)
            .is_err());
    }
}

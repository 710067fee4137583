//! Immutable simple undirected graphs over dense ids `0..n` with bit-row adjacency.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of `0..n`, stored as a bit set.
///
/// The bound `n` is part of the value: two sets over different vertex
/// counts are never equal, and binary operations require matching bounds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(n);
            let bits = hi - lo;
            *w = if bits == WORD {
                u64::MAX
            } else {
                (1u64 << bits) - 1
            };
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Result<Self> {
        Self::from_vertices(n, [v])
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.words[v / WORD] |= 1 << (v % WORD);
        }
        Ok(s)
    }

    /// Builds a set from the low `n` bits of a single word (`n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "from_mask needs n <= 64");
        let keep = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
        let mut s = Self::empty(n);
        if n > 0 {
            s.words[0] = mask & keep;
        }
        s
    }

    /// Number of vertices of the graph this set is bound to.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        self.words[v / WORD] |= 1 << (v % WORD);
        Ok(())
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.n, other.n, "vertex sets bound to different graphs");
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Self { n: self.n, words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_same(other);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & !b)
            .collect();
        Self { n: self.n, words }
    }

    /// `V(G) \ self`.
    pub fn complement(&self) -> Self {
        Self::full(self.n).difference(self)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection_len(other) == 0
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// The set as a single word, when `n <= 64`.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple undirected graph.
///
/// Every invariant (irreflexive, symmetric, cached degrees) is established
/// once by the constructors; there is no way to mutate a `Graph` afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    degree: Vec<usize>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            rows: vec![VertexSet::empty(n); n],
            degree: vec![0; n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops are rejected.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut rows = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v)?;
            rows[v].insert(u)?;
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<VertexSet>) -> Self {
        let n = rows.len();
        let degree: Vec<usize> = rows.iter().map(VertexSet::len).collect();
        let m = degree.iter().sum::<usize>() / 2;
        debug_assert!((0..n).all(|v| !rows[v].contains(v)));
        debug_assert!((0..n).all(|u| rows[u].iter().all(|v| rows[v].contains(u))));
        Self { n, rows, degree, m }
    }

    /// Builds a graph from single-word adjacency masks (`n <= 64`), validating
    /// symmetry and irreflexivity.
    pub fn from_masks(masks: &[u64]) -> Result<Self> {
        let n = masks.len();
        if n > WORD {
            return Err(Error::Usage(format!(
                "from_masks takes at most 64 rows, got {n}"
            )));
        }
        let mut edges = Vec::new();
        for (u, &mask) in masks.iter().enumerate() {
            let row = VertexSet::from_mask(n, mask);
            if row.as_mask() != Some(mask) {
                return Err(Error::VertexOutOfRange {
                    vertex: 64 - mask.leading_zeros() as usize - 1,
                    n,
                });
            }
            for v in row.iter() {
                if masks[v] >> u & 1 == 0 {
                    return Err(Error::InvariantViolation(format!(
                        "adjacency not symmetric at ({u}, {v})"
                    )));
                }
                edges.push((u, v));
            }
        }
        Self::from_edges(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    /// `N(v)`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// `V(G)` as a vertex set.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Result<VertexSet> {
        VertexSet::from_vertices(self.n, vertices)
    }

    pub(crate) fn check_bound(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: s.universe(),
            });
        }
        Ok(())
    }

    /// `N(S) = ∩_{v ∈ S} N(v)`. The empty base is rejected.
    pub fn common_neighborhood(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_bound(s)?;
        let mut it = s.iter();
        let first = it.next().ok_or(Error::EmptyIntersectionBase)?;
        let mut acc = self.rows[first].clone();
        for v in it {
            acc.intersect_with(&self.rows[v]);
        }
        Ok(acc)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let rows = (0..self.n)
            .map(|v| {
                let mut row = full.difference(&self.rows[v]);
                row.remove(v);
                row
            })
            .collect();
        Self::from_rows(rows)
    }

    /// `G[S]`, relabelled to `0..|S|`. The returned mapping sends new ids to old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_bound(s)?;
        let map: Vec<usize> = s.iter().collect();
        let k = map.len();
        let rows = map
            .iter()
            .map(|&old| {
                let mut row = VertexSet::empty(k);
                for (new, &other) in map.iter().enumerate() {
                    if self.rows[old].contains(other) {
                        row.words[new / WORD] |= 1 << (new % WORD);
                    }
                }
                row
            })
            .collect();
        Ok((Self::from_rows(rows), map))
    }

    /// Degree of `v` inside `G[s]`, i.e. `|N(v) ∩ s|`.
    pub fn degree_within(&self, v: usize, s: &VertexSet) -> usize {
        self.rows[v].intersection_len(s)
    }

    pub fn is_clique(&self, s: &VertexSet) -> Result<bool> {
        self.check_bound(s)?;
        Ok(s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.rows[v])
        }))
    }

    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        self.check_bound(s)?;
        Ok(s.iter().all(|v| self.rows[v].is_disjoint(s)))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n + other.n, edges).expect("shifted edges stay in range")
    }

    /// Adjacency rows as single words, when `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        self.rows.iter().map(VertexSet::as_mask).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

//! Exact Wei weights, δ-set recognition and generalized r-partite partitions.
//!
//! For a graph on `n` vertices and `V ⊆ V(G)`:
//!
//! * `W(V) = Σ_{v ∈ V} 1/(n - d(v))`, with `n` and `d` always taken from the
//!   full graph, and `W(G) = W(V(G))`;
//! * `V` is a δ-set when `d(v) <= n - |V|` for every `v ∈ V`;
//! * a partition of `V(G)` into δ-sets makes `G` generalized r-partite.
//!
//! Every δ-set has `W(V) <= 1`, which with additivity of `W` gives
//! `r >= W(G)` for any such partition.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Exact non-negative rational, always held in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(BigRational);

impl Weight {
    pub fn zero() -> Self {
        Weight(BigRational::zero())
    }

    pub fn new(numer: i64, denom: i64) -> Self {
        Weight(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(k: usize) -> Self {
        Weight(BigRational::from_integer(k.into()))
    }

    /// `1/k`.
    pub fn unit_fraction(k: usize) -> Self {
        Weight(BigRational::new(BigInt::one(), k.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// `⌈self⌉` as a machine integer; weights never exceed `n`.
    pub fn ceil_usize(&self) -> usize {
        self.ceil().to_usize().expect("weight ceiling fits usize")
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact `self <= k`.
    pub fn le_int(&self, k: usize) -> bool {
        *self <= Weight::from_integer(k)
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Weight> for Weight {
    type Output = Weight;
    fn add(self, rhs: &'a Weight) -> Weight {
        Weight(self.0 + &rhs.0)
    }
}

impl Sum for Weight {
    fn sum<I: Iterator<Item = Weight>>(iter: I) -> Weight {
        iter.fold(Weight::zero(), Add::add)
    }
}

/// `W(s) = Σ_{v ∈ s} 1/(n - d(v))` with degrees from the whole of `g`.
pub fn wei_weight(g: &Graph, s: &VertexSet) -> Result<Weight> {
    g.check_bound(s)?;
    let n = g.n();
    // Group by denominator so the big-rational additions stay few.
    let mut counts = vec![0usize; n + 1];
    for v in s.iter() {
        counts[n - g.degree(v)] += 1;
    }
    Ok(counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(den, &c)| Weight(BigRational::new(c.into(), den.into())))
        .sum())
}

/// `W(G)`, the Wei lower bound on `ω(G)`.
pub fn wei_bound(g: &Graph) -> Result<Weight> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    wei_weight(g, &g.vertices())
}

/// `Σ_v 1/(1 + d(v))`, the independence-number form of the bound.
pub fn wei_independence_bound(g: &Graph) -> Result<Weight> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(g.degrees()
        .iter()
        .map(|&d| Weight::unit_fraction(d + 1))
        .sum())
}

/// True iff every `v ∈ s` has `d(v) <= n - |s|`.
pub fn is_delta_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_bound(s)?;
    if s.is_empty() {
        return Err(Error::EmptyDeltaCandidate);
    }
    let cap = g.n() - s.len();
    Ok(s.iter().all(|v| g.degree(v) <= cap))
}

/// Checks whether `V(G) \ s` is a δ-set. That set is guaranteed to be one
/// whenever `|s| >= Δ(G)`.
pub fn delta_complement_check(g: &Graph, s: &VertexSet) -> Result<bool> {
    g.check_bound(s)?;
    let rest = s.complement();
    if rest.is_empty() {
        return Err(Error::ComplementEmpty);
    }
    is_delta_set(g, &rest)
}

/// A partition of `V(G)` into nonempty blocks, each claimed to be a δ-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPartition {
    n: usize,
    blocks: Vec<VertexSet>,
}

impl DeltaPartition {
    /// Validates that `blocks` are nonempty, pairwise disjoint and cover `0..n`.
    pub fn new(n: usize, blocks: Vec<VertexSet>) -> Result<Self> {
        check_partition(n, &blocks)?;
        Ok(Self { n, blocks })
    }

    pub fn from_vertex_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let blocks = lists
            .iter()
            .map(|l| VertexSet::from_vertices(n, l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }
}

fn check_partition(n: usize, blocks: &[VertexSet]) -> Result<()> {
    let mut seen = VertexSet::empty(n);
    for (i, b) in blocks.iter().enumerate() {
        if b.universe() != n {
            return Err(Error::NotAPartition(format!(
                "block {i} is bound to {} vertices, expected {n}",
                b.universe()
            )));
        }
        if b.is_empty() {
            return Err(Error::NotAPartition(format!("block {i} is empty")));
        }
        if !b.is_disjoint(&seen) {
            return Err(Error::NotAPartition(format!(
                "block {i} overlaps an earlier block"
            )));
        }
        seen = seen.union(b);
    }
    if seen.len() != n {
        return Err(Error::NotAPartition(format!(
            "blocks cover {} of {n} vertices",
            seen.len()
        )));
    }
    Ok(())
}

/// True iff every block of `p` is a δ-set in `g`.
pub fn verify_generalized_partition(g: &Graph, p: &DeltaPartition) -> Result<bool> {
    if p.n() != g.n() {
        return Err(Error::NotAPartition(format!(
            "partition is over {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    check_partition(g.n(), p.blocks())?;
    for b in p.blocks() {
        if !is_delta_set(g, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        Graph::from_edges(10, e).unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l))).unwrap()
    }

    fn set(g: &Graph, vs: &[usize]) -> VertexSet {
        g.vertex_set(vs.iter().copied()).unwrap()
    }

    /// Independent oracle: plain fraction sum with a running lcm, in i128.
    fn oracle_weight(g: &Graph, vs: &[usize]) -> (i128, i128) {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let n = g.n() as i128;
        let (mut p, mut q) = (0i128, 1i128);
        for &v in vs {
            let den = n - g.degree(v) as i128;
            p = p * den + q;
            q *= den;
            let d = gcd(p, q);
            p /= d;
            q /= d;
        }
        (p, q)
    }

    fn as_pair(w: &Weight) -> (i128, i128) {
        (w.numer().try_into().unwrap(), w.denom().try_into().unwrap())
    }

    #[test]
    fn wei_weight_examples() {
        for n in 1..8 {
            assert_eq!(wei_bound(&complete(n)).unwrap(), Weight::from_integer(n));
        }
        let c5 = cycle(5);
        assert_eq!(oracle_weight(&c5, &[0, 1, 2, 3, 4]), (5, 3));
        assert_eq!(as_pair(&wei_weight(&c5, &c5.vertices()).unwrap()), (5, 3));
        assert_eq!(oracle_weight(&c5, &[0, 1]), (2, 3));
        assert_eq!(
            as_pair(&wei_weight(&c5, &set(&c5, &[0, 1])).unwrap()),
            (2, 3)
        );
    }

    #[test]
    fn wei_bound_examples() {
        let g = k33();
        assert_eq!(oracle_weight(&g, &[0, 1, 2, 3, 4, 5]), (2, 1));
        assert_eq!(wei_bound(&g).unwrap(), Weight::from_integer(2));
        let p = petersen();
        assert_eq!(oracle_weight(&p, &(0..10).collect::<Vec<_>>()), (10, 7));
        assert_eq!(wei_bound(&p).unwrap(), Weight::new(10, 7));
        assert_eq!(
            wei_bound(&Graph::empty(1)).unwrap(),
            Weight::from_integer(1)
        );
        assert_eq!(wei_bound(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn wei_independence_examples() {
        assert_eq!(
            wei_independence_bound(&Graph::empty(6)).unwrap(),
            Weight::from_integer(6)
        );
        assert_eq!(
            wei_independence_bound(&complete(6)).unwrap(),
            Weight::from_integer(1)
        );
        assert_eq!(
            wei_independence_bound(&cycle(5)).unwrap(),
            Weight::new(5, 3)
        );
        assert_eq!(
            wei_independence_bound(&Graph::empty(0)),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn delta_set_examples() {
        let c5 = cycle(5);
        assert!(is_delta_set(&c5, &set(&c5, &[0, 2])).unwrap());
        assert!(is_delta_set(&c5, &set(&c5, &[0, 1])).unwrap());
        assert!(!c5.is_independent(&set(&c5, &[0, 1])).unwrap());
        let k4 = complete(4);
        assert!(!is_delta_set(&k4, &set(&k4, &[0, 1])).unwrap());
        assert_eq!(
            is_delta_set(&k4, &VertexSet::empty(4)),
            Err(Error::EmptyDeltaCandidate)
        );
    }

    #[test]
    fn partition_examples() {
        let c5 = cycle(5);
        let p = DeltaPartition::from_vertex_lists(5, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        assert_eq!(p.r(), 2);
        assert!(verify_generalized_partition(&c5, &p).unwrap());

        for n in 1..7 {
            let lists: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
            let p = DeltaPartition::from_vertex_lists(n, &lists).unwrap();
            assert!(verify_generalized_partition(&complete(n), &p).unwrap());
        }

        let k4 = complete(4);
        let p = DeltaPartition::from_vertex_lists(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!verify_generalized_partition(&k4, &p).unwrap());
    }

    #[test]
    fn partition_structure_errors() {
        assert!(matches!(
            DeltaPartition::from_vertex_lists(4, &[vec![0, 1], vec![1, 2, 3]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            DeltaPartition::from_vertex_lists(4, &[vec![0, 1], vec![2]]),
            Err(Error::NotAPartition(_))
        ));
        assert!(matches!(
            DeltaPartition::from_vertex_lists(2, &[vec![0, 1], vec![]]),
            Err(Error::NotAPartition(_))
        ));
        let p = DeltaPartition::from_vertex_lists(3, &[vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            verify_generalized_partition(&cycle(5), &p),
            Err(Error::NotAPartition(_))
        ));
    }

    #[test]
    fn delta_complement_examples() {
        let c5 = cycle(5);
        assert!(delta_complement_check(&c5, &set(&c5, &[0, 1])).unwrap());
        let k5 = complete(5);
        assert!(delta_complement_check(&k5, &set(&k5, &[0, 1, 2, 3])).unwrap());
        let s = star(4);
        assert!(!delta_complement_check(&s, &set(&s, &[1])).unwrap());
        assert_eq!(
            delta_complement_check(&c5, &c5.vertices()),
            Err(Error::ComplementEmpty)
        );
    }

    #[test]
    fn weight_formatting_and_ceiling() {
        let w = Weight::new(5, 4);
        assert_eq!(w.to_string(), "5/4");
        assert_eq!(w.ceil_usize(), 2);
        assert_eq!(Weight::from_integer(3).ceil_usize(), 3);
        assert_eq!(Weight::new(6, 4), Weight::new(3, 2));
        assert!(Weight::new(5, 3).le_int(2));
        assert!(!Weight::new(7, 3).le_int(2));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e);
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
        (1u64..(1 << n)).map(move |m| VertexSet::from_mask(n, m))
    }

    proptest! {
        #[test]
        fn delta_sets_weigh_at_most_one(g in arb_graph(7)) {
            for s in subsets(g.n()) {
                if is_delta_set(&g, &s).unwrap() {
                    prop_assert!(wei_weight(&g, &s).unwrap().le_int(1));
                }
            }
        }

        #[test]
        fn independent_sets_are_delta_sets(g in arb_graph(7)) {
            for s in subsets(g.n()) {
                if g.is_independent(&s).unwrap() {
                    prop_assert!(is_delta_set(&g, &s).unwrap());
                }
            }
        }

        #[test]
        fn large_sets_leave_delta_complements(g in arb_graph(7)) {
            let max_deg = g.max_degree();
            for s in subsets(g.n()) {
                if s.len() >= max_deg && s.len() < g.n() {
                    prop_assert!(delta_complement_check(&g, &s).unwrap());
                }
            }
        }

        #[test]
        fn weight_is_additive(g in arb_graph(12), mask in any::<u64>(), other in any::<u64>()) {
            let n = g.n();
            let a = VertexSet::from_mask(n, mask);
            let b = VertexSet::from_mask(n, other).difference(&a);
            let lhs = wei_weight(&g, &a).unwrap() + wei_weight(&g, &b).unwrap();
            prop_assert_eq!(lhs, wei_weight(&g, &a.union(&b)).unwrap());
        }

        #[test]
        fn independence_form_is_dual(g in arb_graph(14)) {
            prop_assert_eq!(wei_independence_bound(&g).unwrap(), wei_bound(&g.complement()).unwrap());
        }

        #[test]
        fn weight_matches_fraction_oracle(g in arb_graph(14), mask in any::<u64>()) {
            let s = VertexSet::from_mask(g.n(), mask);
            let vs: Vec<usize> = s.iter().collect();
            prop_assert_eq!(as_pair(&wei_weight(&g, &s).unwrap()), oracle_weight(&g, &vs));
        }

        #[test]
        fn valid_partitions_bound_wei(g in arb_graph(8), labels in prop::collection::vec(0usize..8, 8)) {
            let n = g.n();
            let mut lists: Vec<Vec<usize>> = vec![Vec::new(); 8];
            for v in 0..n {
                lists[labels[v]].push(v);
            }
            lists.retain(|l| !l.is_empty());
            let p = DeltaPartition::from_vertex_lists(n, &lists).unwrap();
            if verify_generalized_partition(&g, &p).unwrap() {
                prop_assert!(wei_bound(&g).unwrap().le_int(p.r()));
            }
        }
    }
}

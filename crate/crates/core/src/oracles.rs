//! Exact brute-force values of `ω(G)`, `α(G)` and `φ(G)` for small graphs.
//!
//! These are the ground truth every bound in the crate is checked against.
//! The branch-and-bound clique search is itself validated against
//! [`clique_number_naive`], a plain scan over all vertex subsets.

use crate::bounds::{is_delta_set, wei_bound, DeltaPartition, Weight};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Vertex caps for the exponential oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    max_n_clique: usize,
    max_n_phi: usize,
}

impl OracleLimits {
    pub const DEFAULT_CLIQUE_CAP: usize = 64;
    pub const DEFAULT_PHI_CAP: usize = 12;

    pub fn new(max_n_clique: usize, max_n_phi: usize) -> Result<Self> {
        if max_n_clique == 0 || max_n_phi == 0 {
            return Err(Error::InvalidLimits("caps must be positive".into()));
        }
        if max_n_clique > 64 {
            return Err(Error::InvalidLimits(format!(
                "clique cap {max_n_clique} exceeds the single-word limit of 64"
            )));
        }
        if max_n_phi > max_n_clique {
            return Err(Error::InvalidLimits(format!(
                "φ cap {max_n_phi} exceeds clique cap {max_n_clique}"
            )));
        }
        Ok(Self {
            max_n_clique,
            max_n_phi,
        })
    }

    pub fn with_phi_cap(self, max_n_phi: usize) -> Result<Self> {
        Self::new(self.max_n_clique, max_n_phi)
    }

    pub fn max_n_clique(&self) -> usize {
        self.max_n_clique
    }

    pub fn max_n_phi(&self) -> usize {
        self.max_n_phi
    }
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_n_clique: Self::DEFAULT_CLIQUE_CAP,
            max_n_phi: Self::DEFAULT_PHI_CAP,
        }
    }
}

fn masks_within(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    if g.n() > cap {
        return Err(Error::InstanceTooLarge { n: g.n(), cap });
    }
    Ok(g.masks().expect("n <= 64 fits one word per row"))
}

struct CliqueSearch<'a> {
    adj: &'a [u64],
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    // Only vertices after the last one taken stay candidates, so every
    // clique is visited once; the size bound prunes the rest.
    fn expand(&mut self, mut candidates: u64) {
        if candidates == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        while candidates != 0 {
            if self.current.len() + candidates.count_ones() as usize <= self.best.len() {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.current.push(v);
            self.expand(candidates & self.adj[v]);
            self.current.pop();
        }
    }
}

/// A maximum clique, by branch and bound over bit-set adjacency.
pub fn maximum_clique_exact(g: &Graph, limits: &OracleLimits) -> Result<VertexSet> {
    let adj = masks_within(g, limits.max_n_clique)?;
    let all = VertexSet::full(g.n()).as_mask().unwrap_or(0);
    let mut search = CliqueSearch {
        adj: &adj,
        current: Vec::new(),
        best: Vec::new(),
    };
    search.expand(all);
    g.vertex_set(search.best)
}

/// `ω(G)`.
pub fn clique_number_exact(g: &Graph, limits: &OracleLimits) -> Result<usize> {
    maximum_clique_exact(g, limits).map(|s| s.len())
}

/// `α(G) = ω(Ḡ)`.
pub fn independence_number_exact(g: &Graph, limits: &OracleLimits) -> Result<usize> {
    clique_number_exact(&g.complement(), limits)
}

/// Largest `n` accepted by [`clique_number_naive`].
pub const NAIVE_CAP: usize = 20;

/// `ω(G)` by testing every vertex subset. Reference implementation only.
pub fn clique_number_naive(g: &Graph) -> Result<usize> {
    let adj = masks_within(g, NAIVE_CAP)?;
    let n = g.n();
    let mut best = 0;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let is_clique = (0..n)
            .filter(|&v| subset >> v & 1 == 1)
            .all(|v| subset & !(1 << v) & !adj[v] == 0);
        if is_clique {
            best = size;
        }
    }
    Ok(best)
}

#[derive(Clone, Copy)]
struct Block {
    members: u64,
    size: usize,
    max_degree: usize,
}

struct PartitionSearch<'a> {
    degree: &'a [usize],
    n: usize,
    limit: usize,
    blocks: Vec<Block>,
}

impl PartitionSearch<'_> {
    // Vertices are placed in id order; a vertex may join any open block or
    // open the next one, so blocks are ordered by their lowest member and no
    // permutation of a partition is visited twice.
    fn place(&mut self, v: usize) -> bool {
        if v == self.n {
            return true;
        }
        let d = self.degree[v];
        for i in 0..self.blocks.len() {
            let b = self.blocks[i];
            let grown = Block {
                members: b.members | 1 << v,
                size: b.size + 1,
                max_degree: b.max_degree.max(d),
            };
            // Adding vertices never repairs a violated δ-condition.
            if grown.max_degree + grown.size > self.n {
                continue;
            }
            self.blocks[i] = grown;
            if self.place(v + 1) {
                return true;
            }
            self.blocks[i] = b;
        }
        if self.blocks.len() < self.limit {
            self.blocks.push(Block {
                members: 1 << v,
                size: 1,
                max_degree: d,
            });
            if self.place(v + 1) {
                return true;
            }
            self.blocks.pop();
        }
        false
    }
}

/// `φ(G)`, the fewest δ-sets partitioning `V(G)`, with a witness partition.
///
/// Deepens from `r = ⌈W(G)⌉`, which no δ-partition can beat.
pub fn phi_exact(g: &Graph, limits: &OracleLimits) -> Result<(usize, DeltaPartition)> {
    masks_within(g, limits.max_n_phi)?;
    let n = g.n();
    let start = wei_bound(g)?.ceil_usize().max(1);
    for r in start..=n {
        let mut search = PartitionSearch {
            degree: g.degrees(),
            n,
            limit: r,
            blocks: Vec::with_capacity(r),
        };
        if search.place(0) {
            let blocks = search
                .blocks
                .iter()
                .map(|b| VertexSet::from_mask(n, b.members))
                .collect();
            let partition = DeltaPartition::new(n, blocks)?;
            debug_assert!(partition
                .blocks()
                .iter()
                .all(|b| is_delta_set(g, b).unwrap()));
            return Ok((r, partition));
        }
    }
    Err(Error::InvariantViolation(
        "singleton blocks always form a δ-partition".into(),
    ))
}

/// Exact values of `ω(G) >= φ(G) >= W(G)`.
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub omega: usize,
    pub phi: usize,
    pub wei: Weight,
    pub partition: DeltaPartition,
}

/// Computes `ω`, `φ` and `W` and checks `ω >= φ >= W` exactly.
pub fn wei_bound_floor_check(g: &Graph, limits: &OracleLimits) -> Result<ChainReport> {
    let (phi, partition) = phi_exact(g, limits)?;
    let omega = clique_number_exact(g, limits)?;
    let wei = wei_bound(g)?;
    if omega < phi {
        return Err(Error::InvariantViolation(format!(
            "ω = {omega} < φ = {phi}"
        )));
    }
    if !wei.le_int(phi) {
        return Err(Error::InvariantViolation(format!("φ = {phi} < W = {wei}")));
    }
    Ok(ChainReport {
        omega,
        phi,
        wei,
        partition,
    })
}

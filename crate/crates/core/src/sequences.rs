//! Greedy α- and β-sequences and the clique-number certificates built on them.
//!
//! Both sequences start at a vertex of maximum degree and keep adding a
//! vertex from the common neighborhood of everything chosen so far, so the
//! result is always a clique. They differ only in how candidates are ranked:
//!
//! * α: degree inside the induced subgraph on the current common neighborhood;
//! * β: degree in the whole graph.
//!
//! Step `i` always maximizes over `N(v_1, …, v_{i-1})`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{is_delta_set, wei_bound, Weight};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SequenceKind {
    Alpha,
    Beta,
}

impl SequenceKind {
    fn symbol(self) -> &'static str {
        match self {
            SequenceKind::Alpha => "α",
            SequenceKind::Beta => "β",
        }
    }
}

/// How ties between equally ranked candidates are broken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum TieBreak {
    #[default]
    LowestId,
    /// Uniform choice among tied candidates. Step `i` draws from a generator
    /// seeded by `(seed, i)`, so extending a prefix reproduces a full build.
    Seeded(u64),
}

impl TieBreak {
    fn pick(self, step: usize, tied: &[usize]) -> usize {
        match self {
            TieBreak::LowestId => tied[0],
            TieBreak::Seeded(seed) => {
                let mixed = seed ^ (step as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
                let mut rng = ChaCha8Rng::seed_from_u64(mixed);
                tied[rng.gen_range(0..tied.len())]
            }
        }
    }
}

/// One greedy step: the candidate pool, the vertex taken and the degree it won with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub candidates: VertexSet,
    pub chosen: usize,
    pub degree: usize,
}

/// An ordered α- or β-sequence together with its construction trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSequence {
    kind: SequenceKind,
    tie_break: TieBreak,
    vertices: Vec<usize>,
    trace: Vec<Step>,
}

fn rank(g: &Graph, kind: SequenceKind, v: usize, candidates: &VertexSet) -> usize {
    match kind {
        SequenceKind::Alpha => g.degree_within(v, candidates),
        SequenceKind::Beta => g.degree(v),
    }
}

impl VertexSequence {
    fn start(kind: SequenceKind, tie_break: TieBreak) -> Self {
        Self {
            kind,
            tie_break,
            vertices: Vec::new(),
            trace: Vec::new(),
        }
    }

    /// Rebuilds a sequence from its vertices, checking the greedy rule at every step.
    pub fn from_vertices(
        g: &Graph,
        kind: SequenceKind,
        tie_break: TieBreak,
        vertices: &[usize],
    ) -> Result<Self> {
        let fail = |reason: String| Error::NotAPrefix {
            kind: kind.symbol(),
            reason,
        };
        if vertices.is_empty() {
            return Err(fail("sequence is empty".into()));
        }
        let mut seq = Self::start(kind, tie_break);
        for (i, &v) in vertices.iter().enumerate() {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: g.n(),
                });
            }
            let candidates = seq.next_candidates(g);
            if !candidates.contains(v) {
                return Err(fail(format!(
                    "v{} = {v} is not in the common neighborhood of its predecessors",
                    i + 1
                )));
            }
            let best = candidates
                .iter()
                .map(|u| rank(g, kind, u, &candidates))
                .max()
                .unwrap_or(0);
            let degree = rank(g, kind, v, &candidates);
            if degree != best {
                return Err(fail(format!(
                    "v{} = {v} has rank {degree}, maximum is {best}",
                    i + 1
                )));
            }
            seq.vertices.push(v);
            seq.trace.push(Step {
                candidates,
                chosen: v,
                degree,
            });
        }
        Ok(seq)
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie_break
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn trace(&self) -> &[Step] {
        &self.trace
    }

    /// `N(v_1, …, v_{r-1})`, defined for `r >= 2`.
    pub fn terminal(&self) -> Option<&VertexSet> {
        if self.len() >= 2 {
            self.trace.last().map(|s| &s.candidates)
        } else {
            None
        }
    }

    /// `N(v_1, …, v_r)`; all of `V(G)` for the empty sequence.
    pub fn next_candidates(&self, g: &Graph) -> VertexSet {
        match self.vertices.last() {
            None => g.vertices(),
            Some(&last) => self
                .trace
                .last()
                .expect("trace tracks vertices")
                .candidates
                .intersection(g.neighbors(last)),
        }
    }

    /// True when no vertex extends the sequence to a larger clique.
    pub fn is_maximal(&self, g: &Graph) -> bool {
        self.next_candidates(g).is_empty()
    }

    /// `d(v_1) + … + d(v_r)` with degrees in `g`.
    pub fn degree_sum(&self, g: &Graph) -> usize {
        self.vertices.iter().map(|&v| g.degree(v)).sum()
    }

    /// The first `k` vertices, with their trace.
    pub fn prefix(&self, k: usize) -> VertexSequence {
        let k = k.min(self.len());
        Self {
            kind: self.kind,
            tie_break: self.tie_break,
            vertices: self.vertices[..k].to_vec(),
            trace: self.trace[..k].to_vec(),
        }
    }

    /// Takes one greedy step. Returns false if the sequence is already maximal.
    fn grow(&mut self, g: &Graph) -> bool {
        let candidates = self.next_candidates(g);
        if candidates.is_empty() {
            return false;
        }
        let ranked: Vec<(usize, usize)> = candidates
            .iter()
            .map(|u| (u, rank(g, self.kind, u, &candidates)))
            .collect();
        let best = ranked.iter().map(|&(_, d)| d).max().expect("nonempty");
        let tied: Vec<usize> = ranked
            .iter()
            .filter(|&&(_, d)| d == best)
            .map(|&(u, _)| u)
            .collect();
        let chosen = self.tie_break.pick(self.len(), &tied);
        self.vertices.push(chosen);
        self.trace.push(Step {
            candidates,
            chosen,
            degree: best,
        });
        true
    }
}

fn build(g: &Graph, kind: SequenceKind, tie_break: TieBreak) -> Result<VertexSequence> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut seq = VertexSequence::start(kind, tie_break);
    while seq.grow(g) {}
    Ok(seq)
}

/// Greedy maximal α-sequence.
pub fn build_alpha_sequence(g: &Graph, tie_break: TieBreak) -> Result<VertexSequence> {
    build(g, SequenceKind::Alpha, tie_break)
}

/// Greedy maximal β-sequence.
pub fn build_beta_sequence(g: &Graph, tie_break: TieBreak) -> Result<VertexSequence> {
    build(g, SequenceKind::Beta, tie_break)
}

/// Extends `seq` greedily, under its own tie-break policy, to the shortest
/// sequence whose terminal `N(v_1, …, v_{r-1})` is a δ-set. The input is
/// returned unchanged if it already qualifies.
///
/// For α-sequences this always succeeds once `r >= 2` is reachable, since a
/// maximal α-sequence has an independent terminal.
pub fn extend_to_delta_terminal(g: &Graph, seq: &VertexSequence) -> Result<VertexSequence> {
    let mut seq = VertexSequence::from_vertices(g, seq.kind, seq.tie_break, &seq.vertices)?;
    loop {
        if let Some(t) = seq.terminal() {
            if is_delta_set(g, t)? {
                return Ok(seq);
            }
        }
        if !seq.grow(g) {
            break;
        }
    }
    if seq.len() < 2 {
        Err(Error::SequenceTooShort(seq.len()))
    } else {
        Err(Error::NoApplicableTheorem(format!(
            "maximal {}-sequence has a terminal that is not a δ-set",
            seq.kind.symbol()
        )))
    }
}

/// Which result justifies a certified lower bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Justification {
    /// α-sequence with `r >= 2` and δ-set terminal: `φ(G) <= r <= ω(G)`.
    #[serde(rename = "THEOREM_1")]
    Theorem1,
    /// β-sequence with `d(v_1) + … + d(v_r) <= (r-1)n`.
    #[serde(rename = "THEOREM_2")]
    Theorem2,
    /// β-sequence with `r >= 2` and δ-set terminal.
    #[serde(rename = "THEOREM_3")]
    Theorem3,
    /// β-sequence not contained in any `(r+1)`-clique.
    #[serde(rename = "COROLLARY")]
    Corollary,
    /// Only the clique itself; no comparison with `W(G)` is claimed.
    #[serde(rename = "CLIQUE_ONLY")]
    CliqueOnly,
}

impl Justification {
    pub fn as_str(self) -> &'static str {
        match self {
            Justification::Theorem1 => "THEOREM_1",
            Justification::Theorem2 => "THEOREM_2",
            Justification::Theorem3 => "THEOREM_3",
            Justification::Corollary => "COROLLARY",
            Justification::CliqueOnly => "CLIQUE_ONLY",
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A lower bound `r <= ω(G)` with the evidence for its justification.
///
/// Certificates are only handed out after every side condition of the
/// justification, and `r >= W(G)` where claimed, has been checked exactly.
#[derive(Clone, Debug)]
pub struct BoundCertificate {
    justification: Justification,
    sequence: VertexSequence,
    terminal_delta: Option<VertexSet>,
    degree_sum: usize,
    degree_cap: usize,
    maximal: bool,
    also_applies: Vec<Justification>,
    first_delta_len: Option<usize>,
    wei_value: Weight,
}

impl BoundCertificate {
    fn verified(
        g: &Graph,
        justification: Justification,
        sequence: VertexSequence,
        also_applies: Vec<Justification>,
        first_delta_len: Option<usize>,
    ) -> Result<Self> {
        let r = sequence.len();
        let bad = |msg: String| Err(Error::InvariantViolation(format!("{justification}: {msg}")));
        let clique = g.vertex_set(sequence.vertices().iter().copied())?;
        if clique.len() != r || !g.is_clique(&clique)? {
            return bad("sequence is not a clique".into());
        }
        let degree_sum = sequence.degree_sum(g);
        let degree_cap = r.saturating_sub(1) * g.n();
        let maximal = sequence.is_maximal(g);
        let terminal_delta = match sequence.terminal() {
            Some(t) if is_delta_set(g, t)? => Some(t.clone()),
            _ => None,
        };
        let wei_value = wei_bound(g)?;

        for j in std::iter::once(justification).chain(also_applies.iter().copied()) {
            let expected_kind = match j {
                Justification::Theorem1 => Some(SequenceKind::Alpha),
                Justification::CliqueOnly => None,
                _ => Some(SequenceKind::Beta),
            };
            if expected_kind.is_some_and(|k| k != sequence.kind()) {
                return bad(format!(
                    "{j} does not apply to a {:?} sequence",
                    sequence.kind()
                ));
            }
            let holds = match j {
                Justification::Theorem1 | Justification::Theorem3 => {
                    r >= 2 && terminal_delta.is_some()
                }
                Justification::Theorem2 => degree_sum <= degree_cap,
                Justification::Corollary => maximal,
                Justification::CliqueOnly => true,
            };
            if !holds {
                return bad(format!("side condition of {j} fails"));
            }
        }
        if justification != Justification::CliqueOnly && !wei_value.le_int(r) {
            return bad(format!("r = {r} < W(G) = {wei_value}"));
        }

        Ok(Self {
            justification,
            sequence,
            terminal_delta,
            degree_sum,
            degree_cap,
            maximal,
            also_applies,
            first_delta_len,
            wei_value,
        })
    }

    /// The certified lower bound on `ω(G)`.
    pub fn r(&self) -> usize {
        self.sequence.len()
    }

    pub fn justification(&self) -> Justification {
        self.justification
    }

    pub fn sequence(&self) -> &VertexSequence {
        &self.sequence
    }

    /// The terminal neighborhood, when it is a δ-set.
    pub fn terminal_delta(&self) -> Option<&VertexSet> {
        self.terminal_delta.as_ref()
    }

    pub fn degree_sum(&self) -> usize {
        self.degree_sum
    }

    /// `(r - 1) n`.
    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Whether the sequence is contained in no larger clique.
    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    /// Further justifications whose conditions also hold.
    pub fn also_applies(&self) -> &[Justification] {
        &self.also_applies
    }

    /// Length of the shortest greedy prefix extension with a δ-set terminal.
    pub fn first_delta_len(&self) -> Option<usize> {
        self.first_delta_len
    }

    /// `W(G)`.
    pub fn wei_value(&self) -> &Weight {
        &self.wei_value
    }
}

/// Certifies `r <= ω(G)` and `r >= W(G)` from the maximal α-sequence.
///
/// Graphs without edges only support `r = 1` and get [`Justification::CliqueOnly`].
pub fn certify_alpha_bound(g: &Graph, tie_break: TieBreak) -> Result<BoundCertificate> {
    let seq = build_alpha_sequence(g, tie_break)?;
    let first_delta_len = match extend_to_delta_terminal(g, &seq.prefix(1)) {
        Ok(s) => Some(s.len()),
        Err(Error::SequenceTooShort(_)) => None,
        Err(e) => return Err(e),
    };
    match extend_to_delta_terminal(g, &seq) {
        Ok(s) => {
            BoundCertificate::verified(g, Justification::Theorem1, s, Vec::new(), first_delta_len)
        }
        Err(Error::SequenceTooShort(_)) => {
            BoundCertificate::verified(g, Justification::CliqueOnly, seq, Vec::new(), None)
        }
        Err(e) => Err(e),
    }
}

/// Certifies the maximal β-sequence.
pub fn certify_beta_bound(g: &Graph, tie_break: TieBreak) -> Result<BoundCertificate> {
    let seq = build_beta_sequence(g, tie_break)?;
    certify_beta_sequence(g, &seq)
}

/// Certifies an arbitrary (not necessarily maximal) β-sequence.
///
/// Preference order: degree-sum condition, then δ-set terminal. Maximality
/// is recorded as an additional justification when it holds.
pub fn certify_beta_sequence(g: &Graph, seq: &VertexSequence) -> Result<BoundCertificate> {
    if seq.kind() != SequenceKind::Beta {
        return Err(Error::NotAPrefix {
            kind: SequenceKind::Beta.symbol(),
            reason: "sequence was built as an α-sequence".into(),
        });
    }
    let seq =
        VertexSequence::from_vertices(g, SequenceKind::Beta, seq.tie_break(), seq.vertices())?;
    let r = seq.len();
    let degree_sum_holds = seq.degree_sum(g) <= (r - 1) * g.n();
    let delta_terminal = match seq.terminal() {
        Some(t) => is_delta_set(g, t)?,
        None => false,
    };

    let mut also = Vec::new();
    let primary = if degree_sum_holds {
        if delta_terminal {
            also.push(Justification::Theorem3);
        }
        Justification::Theorem2
    } else if delta_terminal {
        Justification::Theorem3
    } else {
        return Err(Error::NoApplicableTheorem(format!(
            "degree sum {} > {} and terminal is not a δ-set",
            seq.degree_sum(g),
            (r - 1) * g.n()
        )));
    };
    if seq.is_maximal(g) {
        also.push(Justification::Corollary);
    }
    BoundCertificate::verified(g, primary, seq, also, None)
}

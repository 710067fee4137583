use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named graph family with its parameters.
///
/// The textual form is `<name> <params…>`, e.g. `turan 9 3`,
/// `complete_multipartite 2,2,2` or `gnp 12 0.3 7`.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    Complete(usize),
    Empty(usize),
    Cycle(usize),
    Path(usize),
    /// `K_{1,leaves}` with the center at id 0.
    Star(usize),
    CompleteMultipartite(Vec<usize>),
    Turan {
        n: usize,
        r: usize,
    },
    /// Erdős–Rényi `G(n, p)`. Pairs `u < v` are visited in lexicographic
    /// order and kept when a `ChaCha8Rng` seeded with `seed` yields
    /// `gen::<f64>() < p`.
    Gnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    Petersen,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Complete(n) => write!(f, "complete {n}"),
            Generator::Empty(n) => write!(f, "empty {n}"),
            Generator::Cycle(n) => write!(f, "cycle {n}"),
            Generator::Path(n) => write!(f, "path {n}"),
            Generator::Star(n) => write!(f, "star {n}"),
            Generator::CompleteMultipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "complete_multipartite {}", parts.join(","))
            }
            Generator::Turan { n, r } => write!(f, "turan {n} {r}"),
            Generator::Gnp { n, p, seed } => write!(f, "gnp {n} {p} {seed}"),
            Generator::Petersen => f.write_str("petersen"),
        }
    }
}

fn num<T: FromStr>(token: Option<&&str>, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| usage(format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| usage(format!("invalid {what} '{token}'")))
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let (name, args) = tokens
            .split_first()
            .ok_or_else(|| usage("empty generator"))?;
        let arity = |k: usize| -> Result<()> {
            if args.len() == k {
                Ok(())
            } else {
                Err(usage(format!(
                    "{name} takes {k} parameter(s), got {}",
                    args.len()
                )))
            }
        };
        let g = match *name {
            "complete" => {
                arity(1)?;
                Generator::Complete(num(args.first(), "n")?)
            }
            "empty" => {
                arity(1)?;
                Generator::Empty(num(args.first(), "n")?)
            }
            "cycle" => {
                arity(1)?;
                Generator::Cycle(num(args.first(), "n")?)
            }
            "path" => {
                arity(1)?;
                Generator::Path(num(args.first(), "n")?)
            }
            "star" => {
                arity(1)?;
                Generator::Star(num(args.first(), "leaf count")?)
            }
            "complete_multipartite" => {
                let parts = args
                    .iter()
                    .flat_map(|a| a.split(','))
                    .filter(|p| !p.is_empty())
                    .map(|p| {
                        p.parse()
                            .map_err(|_| usage(format!("invalid part size '{p}'")))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                Generator::CompleteMultipartite(parts)
            }
            "turan" => {
                arity(2)?;
                Generator::Turan {
                    n: num(args.first(), "n")?,
                    r: num(args.get(1), "r")?,
                }
            }
            "gnp" => {
                arity(3)?;
                Generator::Gnp {
                    n: num(args.first(), "n")?,
                    p: num(args.get(1), "p")?,
                    seed: num(args.get(2), "seed")?,
                }
            }
            "petersen" => {
                arity(0)?;
                Generator::Petersen
            }
            other => return Err(usage(format!("unknown generator '{other}'"))),
        };
        g.validate()?;
        Ok(g)
    }
}

impl Generator {
    pub fn validate(&self) -> Result<()> {
        let positive = |n: usize, what: &str| {
            if n == 0 {
                Err(usage(format!("{what} must be at least 1")))
            } else {
                Ok(())
            }
        };
        match self {
            Generator::Complete(n) | Generator::Empty(n) | Generator::Path(n) => positive(*n, "n"),
            Generator::Star(n) => positive(*n, "leaf count"),
            Generator::Cycle(n) if *n < 3 => Err(usage("cycle needs n >= 3")),
            Generator::Cycle(_) | Generator::Petersen => Ok(()),
            Generator::CompleteMultipartite(parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    Err(usage(
                        "complete_multipartite needs nonempty positive part sizes",
                    ))
                } else {
                    Ok(())
                }
            }
            Generator::Turan { n, r } => {
                positive(*r, "r")?;
                if r > n {
                    Err(usage(format!("turan needs r <= n, got r = {r}, n = {n}")))
                } else {
                    Ok(())
                }
            }
            Generator::Gnp { n, p, .. } => {
                positive(*n, "n")?;
                if (0.0..=1.0).contains(p) {
                    Ok(())
                } else {
                    Err(usage(format!("p must lie in [0, 1], got {p}")))
                }
            }
        }
    }
}

fn multipartite(parts: &[usize]) -> Graph {
    let owner: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    let n = owner.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| owner[u] != owner[v]);
    Graph::from_edges(n, edges).expect("valid multipartite edges")
}

/// Part sizes of `T(n, r)`: as equal as possible, larger parts first.
pub fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// Builds the graph; deterministic for fixed inputs.
pub fn generate(spec: &Generator) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        Generator::Complete(n) => multipartite(&vec![1; n]),
        Generator::Empty(n) => Graph::empty(n),
        Generator::Cycle(n) => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?,
        Generator::Path(n) => Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?,
        Generator::Star(leaves) => Graph::from_edges(leaves + 1, (1..=leaves).map(|l| (0, l)))?,
        Generator::CompleteMultipartite(ref parts) => multipartite(parts),
        Generator::Turan { n, r } => multipartite(&turan_parts(n, r)),
        Generator::Gnp { n, p, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges)?
        }
        Generator::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::from_edges(10, outer.chain(spokes).chain(inner))?
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn turan_edge_count() {
        // T(n, r) edges = (n^2 - Σ part^2) / 2
        let g = gen("turan 9 3");
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), (81 - 3 * 9) / 2);
        assert_eq!(g.edge_count(), 27);
        assert_eq!(turan_parts(10, 3), vec![4, 3, 3]);
        assert_eq!(gen("turan 10 3").edge_count(), (100 - 16 - 9 - 9) / 2);
    }

    #[test]
    fn octahedron() {
        let g = gen("complete_multipartite 2,2,2");
        assert_eq!((g.n(), g.edge_count()), (6, 12));
        assert_eq!(gen("complete_multipartite 2 2 2"), g);
    }

    #[test]
    fn small_families() {
        let c5 = gen("cycle 5");
        assert_eq!(
            c5.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        );
        assert_eq!(gen("complete 5").edge_count(), 10);
        assert_eq!(gen("path 4").edge_count(), 3);
        assert_eq!(gen("star 4").degrees(), &[4, 1, 1, 1, 1]);
        assert_eq!(gen("empty 3").edge_count(), 0);
        let p = gen("petersen");
        assert_eq!((p.n(), p.edge_count()), (10, 15));
        assert!(p.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn gnp_is_reproducible() {
        let a = gen("gnp 30 0.4 11");
        assert_eq!(a, gen("gnp 30 0.4 11"));
        assert_ne!(a, gen("gnp 30 0.4 12"));
        assert_eq!(gen("gnp 8 0 1").edge_count(), 0);
        assert_eq!(gen("gnp 8 1 1").edge_count(), 28);
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "turan 9 3",
            "complete_multipartite 2,3",
            "gnp 12 0.3 7",
            "petersen",
            "star 4",
        ] {
            let g: Generator = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
    }

    #[test]
    fn invalid_parameters() {
        for s in [
            "turan 3 4",
            "gnp 5 1.5 0",
            "gnp 5 -0.1 0",
            "cycle 2",
            "complete 0",
            "complete_multipartite 2,0",
            "hypercube 3",
            "turan 9",
            "complete x",
            "",
        ] {
            assert!(
                matches!(s.parse::<Generator>(), Err(Error::Usage(_))),
                "{s}"
            );
        }
    }
}

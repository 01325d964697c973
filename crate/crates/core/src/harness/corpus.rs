use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::generators::{self, all_labeled_cubic, random_cubic};
use crate::graph::{line_graph, Graph};

/// A named graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Complete(Vec<usize>),
    CompleteBipartite(Vec<(usize, usize)>),
    Cycle(Vec<usize>),
    Prism(Vec<usize>),
    Petersen,
    Friendship(Vec<usize>),
    /// Line graphs of subdivisions (truncations) of K4, K3,3, prism3 and Petersen.
    Truncated,
    /// Line graphs of K4, K3,3 and Petersen.
    Line,
    /// Non-regular graphs whose blocks are odd cycles or odd cliques.
    Cactus,
}

fn parse_range(s: &str) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.parse().ok()?, b.parse().ok()?);
                if a > b {
                    return None;
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().ok()?),
        }
    }
    Some(out)
}

fn fmt_list(v: &[usize]) -> String {
    if v.len() > 1 && v.windows(2).all(|w| w[1] == w[0] + 1) {
        format!("{}-{}", v[0], v[v.len() - 1])
    } else {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `name` or `name:params`, e.g. `prism:3-7`, `bipartite:3x3,2x3`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("invalid family `{s}`"));
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let list = |default: &[usize]| match params {
            Some(p) => parse_range(p).ok_or_else(bad),
            None => Ok(default.to_vec()),
        };
        let fam = match name {
            "complete" => Family::Complete(list(&[3, 4, 5, 6])?),
            "cycle" => Family::Cycle(list(&[3, 4, 5, 6, 7, 8, 9])?),
            "prism" => Family::Prism(list(&[3, 4, 5, 6, 7])?),
            "friendship" => Family::Friendship(list(&[2, 3])?),
            "bipartite" => {
                let pairs = match params {
                    None => vec![(3, 3), (2, 3), (4, 4)],
                    Some(p) => p
                        .split(',')
                        .map(|pair| {
                            let (a, b) = pair.split_once('x')?;
                            Some((a.parse().ok()?, b.parse().ok()?))
                        })
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(bad)?,
                };
                Family::CompleteBipartite(pairs)
            }
            "petersen" if params.is_none() => Family::Petersen,
            "truncated" if params.is_none() => Family::Truncated,
            "line" if params.is_none() => Family::Line,
            "cactus" if params.is_none() => Family::Cactus,
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(v) => write!(f, "complete:{}", fmt_list(v)),
            Family::CompleteBipartite(v) => {
                let parts: Vec<String> = v.iter().map(|(a, b)| format!("{a}x{b}")).collect();
                write!(f, "bipartite:{}", parts.join(","))
            }
            Family::Cycle(v) => write!(f, "cycle:{}", fmt_list(v)),
            Family::Prism(v) => write!(f, "prism:{}", fmt_list(v)),
            Family::Petersen => f.write_str("petersen"),
            Family::Friendship(v) => write!(f, "friendship:{}", fmt_list(v)),
            Family::Truncated => f.write_str("truncated"),
            Family::Line => f.write_str("line"),
            Family::Cactus => f.write_str("cactus"),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn cactus_fixtures() -> Vec<Graph> {
    let build = |n: usize, edges: &[(usize, usize)], name: &str| {
        Graph::from_edges(n, edges.iter().copied()).expect("fixture").with_name(name)
    };
    vec![
        // triangle and pentagon sharing vertex 0
        build(7, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 6), (6, 0)], "cactus-3-5"),
        // three triangles in a chain
        build(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 4)],
            "cactus-3-3-3",
        ),
        // two pentagons sharing vertex 0
        build(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 0)],
            "cactus-5-5",
        ),
        // K5 and a triangle sharing vertex 4
        build(
            7,
            &[
                (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
                (4, 5), (5, 6), (6, 4),
            ],
            "cactus-k5-3",
        ),
    ]
}

impl Family {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let out = match self {
            Family::Complete(v) => v.iter().map(|&n| generators::complete(n)).collect(),
            Family::CompleteBipartite(v) => {
                v.iter().map(|&(a, b)| generators::complete_bipartite(a, b)).collect()
            }
            Family::Cycle(v) => v
                .iter()
                .map(|&r| {
                    if r < 3 {
                        Err(Error::domain(format!("cycle needs r >= 3, got {r}")))
                    } else {
                        Ok(generators::cycle(r))
                    }
                })
                .collect::<Result<_>>()?,
            Family::Prism(v) => v.iter().map(|&r| generators::prism(r)).collect::<Result<_>>()?,
            Family::Petersen => vec![generators::petersen()],
            Family::Friendship(v) => v
                .iter()
                .map(|&k| {
                    if k == 0 {
                        Err(Error::domain("friendship graph needs k >= 1"))
                    } else {
                        Ok(generators::friendship(k))
                    }
                })
                .collect::<Result<_>>()?,
            Family::Truncated => [
                generators::complete(4),
                generators::complete_bipartite(3, 3),
                generators::prism(3)?,
                generators::petersen(),
            ]
            .iter()
            .map(|b| {
                let name = format!("T({})", b.name().unwrap_or("?"));
                Ok(line_graph(&generators::subdivide(b)?)?.graph.with_name(name))
            })
            .collect::<Result<_>>()?,
            Family::Line => {
                [generators::complete(4), generators::complete_bipartite(3, 3), generators::petersen()]
                    .iter()
                    .map(|b| Ok(line_graph(b)?.graph))
                    .collect::<Result<_>>()?
            }
            Family::Cactus => cactus_fixtures(),
        };
        Ok(out)
    }
}

/// Random cubic graphs: `count` per order, all derived from one seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub orders: Vec<usize>,
    pub count: usize,
    pub seed: u64,
}

/// Which graphs a verification run covers, and the caps it runs under.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub families: Vec<Family>,
    /// Orders for which every labeled connected cubic graph is included.
    pub exhaustive_orders: Vec<usize>,
    pub random: Option<RandomSpec>,
    /// Search cap for alliance / domination searches on corpus graphs.
    pub alliance_cap: usize,
    /// Search cap for searches on line graphs of corpus graphs.
    pub line_graph_cap: usize,
    /// Permits `n = 10` in `exhaustive_orders`.
    pub allow_large_exhaustive: bool,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            families: [
                "complete", "bipartite", "cycle", "prism", "petersen", "friendship", "truncated",
                "line", "cactus",
            ]
            .iter()
            .map(|f| f.parse().expect("default family"))
            .collect(),
            exhaustive_orders: vec![4, 6, 8],
            random: Some(RandomSpec { orders: vec![10, 12, 14], count: 50, seed: 42 }),
            alliance_cap: 16,
            line_graph_cap: 21,
            allow_large_exhaustive: false,
        }
    }
}

/// A graph in a corpus with a stable identifier.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub id: String,
    pub source: String,
    pub graph: Graph,
}

fn random_seed(seed: u64, n: usize, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((n as u64) << 32 | i as u64)
}

impl CorpusSpec {
    pub fn empty() -> Self {
        CorpusSpec { families: vec![], exhaustive_orders: vec![], random: None, ..Default::default() }
    }

    /// Materializes the corpus in a fixed order: families, exhaustive, random.
    pub fn build(&self) -> Result<Vec<CorpusGraph>> {
        let mut out = Vec::new();
        for fam in &self.families {
            for g in fam.graphs()? {
                let id = g.name().unwrap_or("unnamed").to_string();
                out.push(CorpusGraph { id, source: fam.to_string(), graph: g });
            }
        }
        for &n in &self.exhaustive_orders {
            for g in all_labeled_cubic(n, self.allow_large_exhaustive)? {
                let id = g.name().unwrap_or("unnamed").to_string();
                out.push(CorpusGraph { id, source: format!("exhaustive:{n}"), graph: g });
            }
        }
        if let Some(r) = &self.random {
            for &n in &r.orders {
                for i in 0..r.count {
                    let g = random_cubic(n, random_seed(r.seed, n, i))?;
                    out.push(CorpusGraph {
                        id: format!("random{n}-s{}-{i:03}", r.seed),
                        source: format!("random:{n}"),
                        graph: g,
                    });
                }
            }
        }
        for cg in &out {
            if !cg.graph.is_connected() {
                return Err(Error::domain(format!("corpus graph {} is disconnected", cg.id)));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_strings_round_trip() {
        for s in ["complete:3-6", "bipartite:3x3,2x3", "cycle:3,5,9", "prism:3-7", "petersen", "cactus"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
        assert!("prism:7-3".parse::<Family>().is_err());
        assert!("hypercube".parse::<Family>().is_err());
        assert_eq!("prism".parse::<Family>().unwrap(), Family::Prism(vec![3, 4, 5, 6, 7]));
    }

    #[test]
    fn fixture_families_are_well_formed() {
        let trunc = Family::Truncated.graphs().unwrap();
        assert_eq!(trunc.iter().map(Graph::order).collect::<Vec<_>>(), vec![12, 18, 18, 30]);
        assert!(trunc.iter().all(Graph::is_cubic));
        for g in Family::Cactus.graphs().unwrap() {
            let d = crate::graph::blocks(&g).unwrap();
            assert!(d.all_odd_cliques_or_cycles(), "{:?}", g.name());
        }
    }

    #[test]
    fn random_part_is_deterministic() {
        let spec = CorpusSpec {
            random: Some(RandomSpec { orders: vec![10], count: 5, seed: 7 }),
            ..CorpusSpec::empty()
        };
        let a: Vec<_> = spec.build().unwrap().into_iter().map(|c| c.graph).collect();
        let b: Vec<_> = spec.build().unwrap().into_iter().map(|c| c.graph).collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
    }
}

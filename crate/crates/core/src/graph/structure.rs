use serde::Serialize;

use super::{Graph, VertexSet, MAX_ORDER};
use crate::error::{Error, Result};

/// Minimum and maximum degree, plus the common degree of a regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub regular: Option<usize>,
}

/// A proper 2-coloring; the lowest vertex of each component is on the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let left = VertexSet::from_vertices(n, (0..n).filter(|&v| color[v] == Some(false)));
    Some(Bipartition { left, right: left.complement() })
}

/// Shape of a single block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    /// A cycle of odd length (the triangle is reported here).
    OddCycle,
    /// A complete graph on an odd number of vertices other than K3.
    OddClique,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub kinds: Vec<BlockKind>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    pub fn all_odd_cycles(&self) -> bool {
        self.kinds.iter().all(|&k| k == BlockKind::OddCycle)
    }

    pub fn all_odd_cliques_or_cycles(&self) -> bool {
        self.kinds.iter().all(|&k| k != BlockKind::Other)
    }
}

fn edges_within(g: &Graph, s: &VertexSet) -> usize {
    s.iter().map(|v| (g.neighbor_mask(v) & s.bits()).count_ones() as usize).sum::<usize>() / 2
}

fn classify(g: &Graph, block: &VertexSet) -> BlockKind {
    let k = block.len();
    let e = edges_within(g, block);
    if k % 2 == 0 {
        BlockKind::Other
    } else if k >= 3 && e == k {
        BlockKind::OddCycle
    } else if e == k * (k - 1) / 2 {
        BlockKind::OddClique
    } else {
        BlockKind::Other
    }
}

struct BlockSearch<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cut: VertexSet,
}

const UNSEEN: usize = usize::MAX;

impl BlockSearch<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for &v in self.g.neighbors(u) {
            if self.disc[v] == UNSEEN {
                children += 1;
                self.stack.push((u, v));
                self.visit(v, Some(u));
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.cut.insert(u);
                    }
                    let mut block = VertexSet::empty(self.g.order());
                    while let Some((a, b)) = self.stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Lowpoint block / cut-vertex decomposition of a connected graph.
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.order();
    let mut search = BlockSearch {
        g,
        disc: vec![UNSEEN; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cut: VertexSet::empty(n),
    };
    if n == 1 {
        search.blocks.push(VertexSet::full(1));
    } else if n > 1 {
        search.visit(0, None);
    }
    search.blocks.sort_by_key(|b| b.to_vec());
    let kinds = search.blocks.iter().map(|b| classify(g, b)).collect();
    Ok(BlockDecomposition { blocks: search.blocks, kinds, cut_vertices: search.cut })
}

/// The line graph together with the endpoint pair behind each of its vertices.
#[derive(Debug, Clone)]
pub struct LineGraph {
    pub graph: Graph,
    pub edge_map: Vec<(usize, usize)>,
}

/// Vertices of the result are the edges of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<LineGraph> {
    let edge_map: Vec<(usize, usize)> = g.edges().collect();
    let m = edge_map.len();
    if m == 0 {
        return Err(Error::domain("line graph of an edgeless graph"));
    }
    if m > MAX_ORDER {
        return Err(Error::Unsupported(format!(
            "line graph would have {m} vertices (limit {MAX_ORDER})"
        )));
    }
    let mut edges = Vec::new();
    for i in 0..m {
        let (a, b) = edge_map[i];
        for (j, &(c, d)) in edge_map.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                edges.push((i, j));
            }
        }
    }
    let mut graph = Graph::from_edges(m, edges)?;
    if let Some(name) = g.name() {
        graph = graph.with_name(format!("L({name})"));
    }
    Ok(LineGraph { graph, edge_map })
}

/// Subgraph induced by `s`, relabeled to `0..|s|` in increasing order.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph> {
    if s.is_empty() {
        return Err(Error::domain("induced subgraph of the empty set"));
    }
    let members = s.to_vec();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in members.iter().enumerate() {
        index[v] = i;
    }
    let edges = g
        .edges()
        .filter(|&(u, v)| s.contains(u) && s.contains(v))
        .map(|(u, v)| (index[u], index[v]));
    Graph::from_edges(members.len(), edges)
}

/// True iff every vertex of `s` has exactly one neighbor inside `s`.
pub fn induced_is_one_factor(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|v| (g.neighbor_mask(v) & s.bits()).count_ones() == 1)
}

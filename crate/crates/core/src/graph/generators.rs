//! Named graph families and cubic-graph generators.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{Error, Result};

/// Retry budget for [`random_cubic`].
pub const DEFAULT_RETRY_BUDGET: usize = 10_000;

fn build(n: usize, edges: Vec<(usize, usize)>, name: String) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced an invalid graph").with_name(name)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, edges, format!("K{n}"))
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    build(a + b, edges, format!("K{a},{b}"))
}

/// Cycle `C_r` on `0..r` (`r >= 3`).
pub fn cycle(r: usize) -> Graph {
    assert!(r >= 3, "cycle needs at least 3 vertices");
    let edges = (0..r).map(|i| (i, (i + 1) % r)).collect();
    build(r, edges, format!("C{r}"))
}

/// Prism `C_r x K_2`: outer cycle `0..r`, inner cycle `r..2r`, spokes `i -- r+i`.
pub fn prism(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::domain(format!("prism needs r >= 3, got {r}")));
    }
    let mut edges = Vec::with_capacity(3 * r);
    for i in 0..r {
        edges.push((i, (i + 1) % r));
        edges.push((r + i, r + (i + 1) % r));
        edges.push((i, r + i));
    }
    Ok(build(2 * r, edges, format!("prism{r}")))
}

/// Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    build(10, edges, "petersen".into())
}

/// `k` triangles sharing the vertex 0.
pub fn friendship(k: usize) -> Graph {
    assert!(k >= 1);
    let mut edges = Vec::with_capacity(3 * k);
    for t in 0..k {
        let (a, b) = (2 * t + 1, 2 * t + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    build(2 * k + 1, edges, format!("friendship{k}"))
}

/// Replaces every edge by a path of length two. New vertices follow the
/// originals in edge order.
pub fn subdivide(g: &Graph) -> Result<Graph> {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * g.size());
    for (i, (u, v)) in g.edges().enumerate() {
        edges.push((u, n + i));
        edges.push((v, n + i));
    }
    let mut s = Graph::from_edges(n + g.size(), edges)?;
    if let Some(name) = g.name() {
        s = s.with_name(format!("S({name})"));
    }
    Ok(s)
}

fn check_cubic_order(n: usize) -> Result<()> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::domain(format!("cubic graphs need an even order >= 4, got {n}")));
    }
    Ok(())
}

/// Uniform-ish random connected cubic graph from the pairing model.
///
/// Each attempt shuffles `3n` points and pairs them off; any loop,
/// repeated edge or disconnected result discards the whole attempt.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    random_cubic_with_budget(n, seed, DEFAULT_RETRY_BUDGET)
}

pub fn random_cubic_with_budget(n: usize, seed: u64, budget: usize) -> Result<Graph> {
    check_cubic_order(n)?;
    if n > super::MAX_ORDER {
        return Err(Error::Unsupported(format!("order {n} exceeds {}", super::MAX_ORDER)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    'attempt: for _ in 0..budget {
        points.shuffle(&mut rng);
        let mut masks = vec![0u64; n];
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || masks[u] >> v & 1 == 1 {
                continue 'attempt;
            }
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        let masks = &masks;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).filter(move |&v| masks[u] >> v & 1 == 1).map(move |v| (u, v)));
        let g = Graph::from_edges(n, edges)?;
        if g.is_connected() {
            return Ok(g.with_name(format!("random-cubic{n}-s{seed}")));
        }
    }
    Err(Error::Numeric(format!(
        "no simple connected cubic graph on {n} vertices after {budget} pairings"
    )))
}

/// Every labeled connected cubic graph on `n` vertices.
///
/// Intended for `n` in {4, 6, 8}; `n = 10` (about 11 million graphs) requires
/// `allow_large`.
pub fn all_labeled_cubic(n: usize, allow_large: bool) -> Result<Vec<Graph>> {
    check_cubic_order(n)?;
    if n > 10 || (n == 10 && !allow_large) {
        return Err(Error::domain(format!(
            "exhaustive enumeration supports n in {{4,6,8}} (10 with override), got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut masks = vec![0u64; n];
    extend_cubic(n, 0, &mut masks, &mut out);
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.with_name(format!("cubic{n}-{i:05}")))
        .collect())
}

// Vertices are completed in index order; vertex v picks its remaining
// neighbors among higher-indexed vertices, so each labeled graph is reached
// exactly once.
fn extend_cubic(n: usize, v: usize, masks: &mut [u64], out: &mut Vec<Graph>) {
    if v == n {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
            .filter(|&(u, w)| masks[u] >> w & 1 == 1)
            .collect();
        let g = Graph::from_edges(n, edges).expect("valid by construction");
        if g.is_connected() {
            out.push(g);
        }
        return;
    }
    let need = 3 - masks[v].count_ones() as usize;
    let candidates: Vec<usize> =
        (v + 1..n).filter(|&w| masks[w].count_ones() < 3).collect();
    if candidates.len() < need {
        return;
    }
    choose(&candidates, need, 0, &mut Vec::with_capacity(need), &mut |picked| {
        for &w in picked {
            masks[v] |= 1 << w;
            masks[w] |= 1 << v;
        }
        extend_cubic(n, v + 1, masks, out);
        for &w in picked {
            masks[v] &= !(1 << w);
            masks[w] &= !(1 << v);
        }
    });
}

fn choose<F: FnMut(&[usize])>(
    items: &[usize],
    k: usize,
    start: usize,
    picked: &mut Vec<usize>,
    f: &mut F,
) {
    if picked.len() == k {
        f(picked);
        return;
    }
    for i in start..items.len() {
        if items.len() - i < k - picked.len() {
            break;
        }
        picked.push(items[i]);
        choose(items, k, i + 1, picked, f);
        picked.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let p3 = prism(3).unwrap();
        assert_eq!((p3.order(), p3.size()), (6, 9));
        assert!(p3.is_cubic());
        assert!(prism(2).is_err());

        let pg = petersen();
        assert_eq!((pg.order(), pg.size()), (10, 15));
        assert!(pg.is_cubic());
        assert_eq!(girth(&pg), Some(5));

        assert_eq!(complete(4).size(), 6);
        assert_eq!(complete_bipartite(3, 3).size(), 9);
        assert_eq!(friendship(2).size(), 6);
    }

    fn girth(g: &Graph) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..g.order() {
            let mut dist = vec![usize::MAX; g.order()];
            let mut parent = vec![usize::MAX; g.order()];
            dist[root] = 0;
            let mut q = std::collections::VecDeque::from([root]);
            while let Some(u) = q.pop_front() {
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        q.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    #[test]
    fn all_labeled_cubic_four_is_k4() {
        let gs = all_labeled_cubic(4, false).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0], complete(4));
    }

    #[test]
    fn labeled_cubic_counts() {
        assert_eq!(all_labeled_cubic(6, false).unwrap().len(), 70);
        assert_eq!(all_labeled_cubic(8, false).unwrap().len(), 19_320);
    }

    #[test]
    fn labeled_cubic_rejects_bad_orders() {
        assert!(all_labeled_cubic(5, false).is_err());
        assert!(all_labeled_cubic(2, false).is_err());
        assert!(all_labeled_cubic(10, false).is_err());
        assert!(all_labeled_cubic(12, true).is_err());
    }

    #[test]
    fn random_cubic_is_deterministic_and_valid() {
        for n in [4, 6, 10, 14, 30] {
            for seed in 0..5 {
                let g = random_cubic(n, seed).unwrap();
                assert!(g.is_cubic() && g.is_connected());
                assert_eq!(g, random_cubic(n, seed).unwrap());
            }
        }
        assert!(random_cubic(7, 1).is_err());
    }

    #[test]
    fn random_cubic_budget_exhaustion() {
        assert!(matches!(random_cubic_with_budget(12, 3, 0), Err(Error::Numeric(_))));
    }

    #[test]
    fn subdivision_counts() {
        let s = subdivide(&complete(4)).unwrap();
        assert_eq!((s.order(), s.size()), (10, 12));
    }
}

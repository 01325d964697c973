//! Brute-force oracles that only look at adjacency lists.
#![allow(dead_code)]

use alliance_core::Graph;
use proptest::prelude::*;

pub fn inside(g: &Graph, v: usize, s: u64) -> usize {
    g.neighbors(v).iter().filter(|&&u| s >> u & 1 == 1).count()
}

fn outside(g: &Graph, s: u64) -> impl Iterator<Item = usize> + '_ {
    (0..g.order()).filter(move |&v| s >> v & 1 == 0)
}

pub fn global_offensive(g: &Graph, s: u64, extra: usize) -> bool {
    s != 0 && outside(g, s).all(|v| 2 * inside(g, v, s) >= g.degree(v) + extra)
}

pub fn offensive(g: &Graph, s: u64, extra: usize) -> bool {
    s != 0 && outside(g, s).filter(|&v| inside(g, v, s) > 0).all(|v| 2 * inside(g, v, s) >= g.degree(v) + extra)
}

pub fn k_dominating(g: &Graph, s: u64, k: usize) -> bool {
    s != 0 && outside(g, s).all(|v| inside(g, v, s) >= k)
}

pub fn independent(g: &Graph, s: u64) -> bool {
    (0..g.order()).filter(|&v| s >> v & 1 == 1).all(|v| inside(g, v, s) == 0)
}

pub fn strong_defensive(g: &Graph, s: u64) -> bool {
    s != 0 && (0..g.order()).filter(|&v| s >> v & 1 == 1).all(|v| 2 * inside(g, v, s) >= g.degree(v))
}

/// Every non-empty subset of `x` is checked.
pub fn sda_free(g: &Graph, x: u64) -> bool {
    let mut sub = x;
    while sub != 0 {
        if strong_defensive(g, sub) {
            return false;
        }
        sub = (sub - 1) & x;
    }
    true
}

pub fn all_masks(n: usize) -> impl Iterator<Item = u64> {
    0u64..1 << n
}

pub fn min_size(n: usize, pred: impl Fn(u64) -> bool) -> Option<usize> {
    all_masks(n).filter(|&m| pred(m)).map(|m| m.count_ones() as usize).min()
}

pub fn max_size(n: usize, pred: impl Fn(u64) -> bool) -> Option<usize> {
    all_masks(n).filter(|&m| pred(m)).map(|m| m.count_ones() as usize).max()
}

/// Smallest set meeting every strong defensive alliance.
pub fn min_sda_cover(g: &Graph) -> usize {
    let n = g.order();
    let sdas: Vec<u64> = all_masks(n).filter(|&s| strong_defensive(g, s)).collect();
    min_size(n, |y| sdas.iter().all(|&s| s & y != 0)).unwrap()
}

pub fn graph_from_pairs(n: usize, pairs: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if pairs >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Every connected labeled graph on `n` vertices.
pub fn all_connected(n: usize) -> Vec<Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(|p| graph_from_pairs(n, p)).filter(Graph::is_connected).collect()
}

/// Connected graphs: a random spanning tree plus random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), prop::collection::vec(any::<usize>(), n), prop::collection::vec(prop::bool::weighted(0.3), pairs))
            .prop_map(|(n, parents, extra)| {
                let mut edges = std::collections::BTreeSet::new();
                for v in 1..n {
                    let p = parents[v] % v;
                    edges.insert((p, v));
                }
                let mut bit = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if extra[bit] {
                            edges.insert((u, v));
                        }
                        bit += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
    })
}

/// Compares every exact solver on `g` with full enumeration. Returns the first
/// mismatch.
pub fn compare_solvers(g: &Graph) -> Result<(), String> {
    use alliance_core::solvers::*;
    let o = SearchOptions::default();
    let n = g.order();
    let size = |w: alliance_core::Result<Witnessed>| w.map(|w| w.size).map_err(|e| e.to_string());
    let opt = |w: alliance_core::Result<Option<Witnessed>>| {
        w.map(|w| w.map(|w| w.size)).map_err(|e| e.to_string())
    };
    let mut cases: Vec<(String, Result<Option<usize>, String>, Option<usize>)> = vec![
        ("gamma".into(), size(gamma(g, &o)).map(Some), min_size(n, |s| k_dominating(g, s, 1))),
        (
            "i_gamma".into(),
            size(i_gamma(g, &o)).map(Some),
            min_size(n, |s| independent(g, s) && k_dominating(g, s, 1)),
        ),
        ("gamma_o".into(), size(gamma_o(g, &o)).map(Some), min_size(n, |s| global_offensive(g, s, 1))),
        ("gamma_so".into(), size(gamma_so(g, &o)).map(Some), min_size(n, |s| global_offensive(g, s, 2))),
        (
            "gamma_i".into(),
            opt(gamma_i(g, &o)),
            min_size(n, |s| independent(g, s) && global_offensive(g, s, 1)),
        ),
        ("a_o".into(), size(a_o(g, &o)).map(Some), min_size(n, |s| offensive(g, s, 1))),
        ("a_so".into(), opt(a_so(g, &o)), min_size(n, |s| offensive(g, s, 2))),
        ("a_i".into(), opt(a_i(g, &o)), min_size(n, |s| independent(g, s) && offensive(g, s, 1))),
        ("alpha".into(), size(independence_number(g, &o)).map(Some), max_size(n, |s| independent(g, s))),
        ("phi0".into(), size(phi0(g, &o)).map(Some), max_size(n, |x| sda_free(g, x))),
    ];
    for k in 1..=g.max_degree().max(1) {
        cases.push((
            format!("gamma_{k}"),
            size(gamma_k(g, k, &o)).map(Some),
            min_size(n, |s| k_dominating(g, s, k)),
        ));
    }
    for (name, got, want) in cases {
        match got {
            Ok(got) if got == want => {}
            other => return Err(format!("{name} on {g:?}: solver {other:?}, oracle {want:?}")),
        }
    }
    Ok(())
}

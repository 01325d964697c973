use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::kernel::{independent_mask, Predicate};
use crate::par;

/// Size caps and parallelism for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchOptions {
    /// Largest order for subset searches over alliance and domination predicates.
    pub alliance_cap: usize,
    /// Largest order for the independence-number branch and bound.
    pub alpha_cap: usize,
    /// Largest order for the strong-defensive-alliance-free search.
    pub phi_cap: usize,
    /// Split each cardinality level across threads.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { alliance_cap: 16, alpha_cap: 32, phi_cap: 16, parallel: par::available() }
    }
}

impl SearchOptions {
    pub fn sequential(self) -> Self {
        SearchOptions { parallel: false, ..self }
    }
}

/// A minimum (or maximum) set together with its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witnessed {
    pub size: usize,
    pub witness: VertexSet,
}

impl Witnessed {
    pub(crate) fn new(witness: VertexSet) -> Self {
        Witnessed { size: witness.len(), witness }
    }
}

/// A predicate, optionally conjoined with independence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Query {
    pub predicate: Predicate,
    pub independent: bool,
}

impl Query {
    pub fn plain(predicate: Predicate) -> Self {
        Query { predicate, independent: false }
    }

    pub fn independent(predicate: Predicate) -> Self {
        Query { predicate, independent: true }
    }

    pub fn holds(&self, g: &Graph, s: &VertexSet) -> bool {
        self.predicate.holds(g, s) && (!self.independent || independent_mask(g, s.bits()))
    }
}

pub(crate) fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        Err(Error::CapExceeded { n: g.order(), cap })
    } else {
        Ok(())
    }
}

struct LevelSearch<'a> {
    g: &'a Graph,
    query: Query,
    n: usize,
    k: usize,
    monotone: bool,
}

impl LevelSearch<'_> {
    /// Vertices at or after `next` that may still join `chosen`.
    #[inline]
    fn open_after(&self, chosen: u64, next: usize) -> u64 {
        let tail = if next >= 64 { 0 } else { self.g.vertices().bits() & (u64::MAX << next) };
        if self.query.independent {
            let mut blocked = 0u64;
            let mut rest = chosen;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                blocked |= self.g.neighbor_mask(v);
                rest &= rest - 1;
            }
            tail & !blocked
        } else {
            tail
        }
    }

    // Members are chosen in increasing order, so the first hit is the
    // lexicographically smallest k-subset.
    fn dfs(&self, chosen: u64, count: usize, next: usize) -> Option<u64> {
        if count == self.k {
            return self.query.predicate.holds_mask(self.g, chosen).then_some(chosen);
        }
        let open = self.open_after(chosen, next);
        let need = self.k - count;
        if (open.count_ones() as usize) < need {
            return None;
        }
        if self.monotone && !self.query.predicate.holds_mask(self.g, chosen | open) {
            return None;
        }
        let mut rest = open;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (rest.count_ones() as usize) + 1 < need {
                break;
            }
            if let Some(hit) = self.dfs(chosen | 1 << v, count + 1, v + 1) {
                return Some(hit);
            }
        }
        None
    }

    fn run(&self, parallel: bool) -> Option<u64> {
        let firsts: Vec<usize> = (0..=self.n - self.k).collect();
        par::find_map_first(&firsts, parallel, |&v| self.dfs(1 << v, 1, v + 1))
    }
}

/// Smallest non-empty set satisfying `query`, lexicographically first among
/// sets of that size. `None` when no subset of `V` qualifies.
pub fn min_satisfying(g: &Graph, query: Query, opts: &SearchOptions) -> Result<Option<Witnessed>> {
    g.require_connected()?;
    check_cap(g, opts.alliance_cap)?;
    let n = g.order();
    let monotone = query.predicate.is_monotone();
    if monotone && !query.independent && n > 0 && !query.predicate.holds_mask(g, g.vertices().bits())
    {
        return Ok(None);
    }
    for k in 1..=n {
        let level = LevelSearch { g, query, n, k, monotone };
        if let Some(bits) = level.run(opts.parallel) {
            return Ok(Some(Witnessed::new(VertexSet::from_bits(n, bits))));
        }
    }
    Ok(None)
}

fn required(g: &Graph, query: Query, opts: &SearchOptions) -> Result<Witnessed> {
    min_satisfying(g, query, opts)?
        .ok_or_else(|| Error::Inconsistent(format!("{query:?} has no solution, yet V qualifies")))
}

/// Domination number.
pub fn gamma(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    required(g, Query::plain(Predicate::Dominating), opts)
}

/// Independent domination number.
pub fn i_gamma(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    required(g, Query::independent(Predicate::Dominating), opts)
}

/// Minimum `k`-dominating set.
pub fn gamma_k(g: &Graph, k: usize, opts: &SearchOptions) -> Result<Witnessed> {
    if k == 0 {
        return Err(Error::domain("k-domination needs k >= 1"));
    }
    required(g, Query::plain(Predicate::KDominating(k)), opts)
}

/// Global offensive alliance number.
pub fn gamma_o(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    required(g, Query::plain(Predicate::GlobalOffensive), opts)
}

/// Global strong offensive alliance number.
pub fn gamma_so(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    required(g, Query::plain(Predicate::GlobalStrongOffensive), opts)
}

/// Global independent offensive alliance number, if any such alliance exists.
pub fn gamma_i(g: &Graph, opts: &SearchOptions) -> Result<Option<Witnessed>> {
    min_satisfying(g, Query::independent(Predicate::GlobalOffensive), opts)
}

/// Offensive alliance number.
pub fn a_o(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    required(g, Query::plain(Predicate::Offensive), opts)
}

/// Strong offensive alliance number.
pub fn a_so(g: &Graph, opts: &SearchOptions) -> Result<Option<Witnessed>> {
    min_satisfying(g, Query::plain(Predicate::StrongOffensive), opts)
}

/// Independent offensive alliance number, if any such alliance exists.
pub fn a_i(g: &Graph, opts: &SearchOptions) -> Result<Option<Witnessed>> {
    min_satisfying(g, Query::independent(Predicate::Offensive), opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::graph::line_graph;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn k4_global_offensive() {
        let w = min_satisfying(&complete(4), Query::plain(Predicate::GlobalOffensive), &opts())
            .unwrap()
            .unwrap();
        assert_eq!(w.size, 2);
        assert_eq!(w.witness, set(4, &[0, 1]));
    }

    #[test]
    fn k33_global_strong() {
        assert_eq!(gamma_so(&complete_bipartite(3, 3), &opts()).unwrap().size, 3);
    }

    #[test]
    fn prism3_has_no_global_independent_alliance() {
        assert_eq!(gamma_i(&prism(3).unwrap(), &opts()).unwrap(), None);
    }

    #[test]
    fn named_values() {
        for r in 3..=5 {
            assert_eq!(gamma_o(&prism(r).unwrap(), &opts()).unwrap().size, r);
        }
        let lk33 = line_graph(&complete_bipartite(3, 3)).unwrap().graph;
        assert_eq!(gamma_o(&lk33, &opts()).unwrap().size, 5);
        assert_eq!(gamma_so(&complete(4), &opts()).unwrap().size, 3);
        assert_eq!(a_i(&complete_bipartite(3, 3), &opts()).unwrap().unwrap().size, 2);
        let p = petersen();
        assert_eq!(
            gamma_i(&p, &opts()).unwrap().unwrap().size,
            gamma_o(&p, &opts()).unwrap().size
        );
        assert_eq!(a_i(&complete(4), &opts()).unwrap(), None);
    }

    #[test]
    fn caps_and_connectivity() {
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(gamma_o(&split, &opts()), Err(Error::Disconnected));
        let big = cycle(17);
        assert_eq!(gamma_o(&big, &opts()), Err(Error::CapExceeded { n: 17, cap: 16 }));
        let wide = SearchOptions { alliance_cap: 20, ..opts() };
        assert_eq!(gamma_o(&big, &wide).unwrap().size, 9);
        assert!(gamma_k(&big, 0, &wide).is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = line_graph(&petersen()).unwrap().graph;
        let seq = gamma_o(&g, &opts().sequential()).unwrap();
        let par = gamma_o(&g, &SearchOptions { parallel: true, ..opts() }).unwrap();
        assert_eq!(seq, par);
    }
}

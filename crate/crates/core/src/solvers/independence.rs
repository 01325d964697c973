use super::search::{check_cap, SearchOptions, Witnessed};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

struct MaxIndependent<'a> {
    g: &'a Graph,
    best: u64,
}

impl MaxIndependent<'_> {
    fn branch(&mut self, candidates: u64, chosen: u64) {
        if candidates == 0 {
            if chosen.count_ones() > self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        if chosen.count_ones() + candidates.count_ones() <= self.best.count_ones() {
            return;
        }
        // Highest degree inside the candidate set, lowest index on ties.
        let mut pick = usize::MAX;
        let mut pick_deg = 0u32;
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (self.g.neighbor_mask(v) & candidates).count_ones();
            if pick == usize::MAX || d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        let bit = 1u64 << pick;
        if pick_deg == 0 {
            // Every candidate is isolated among the candidates: take them all.
            self.branch(0, chosen | candidates);
            return;
        }
        self.branch(candidates & !bit & !self.g.neighbor_mask(pick), chosen | bit);
        self.branch(candidates & !bit, chosen);
    }
}

/// Maximum independent set by branch and bound.
pub fn independence_number(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    check_cap(g, opts.alpha_cap)?;
    let mut search = MaxIndependent { g, best: 0 };
    search.branch(g.vertices().bits(), 0);
    Ok(Witnessed::new(VertexSet::from_bits(g.order(), search.best)))
}

/// `gamma_so = n - alpha` for connected cubic graphs; the witness is the
/// complement of a maximum independent set.
pub fn gamma_so_cubic_fast(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    g.require_connected()?;
    if !g.is_cubic() {
        return Err(Error::domain("cubic fast path needs a 3-regular graph"));
    }
    let alpha = independence_number(g, opts)?;
    Ok(Witnessed::new(alpha.witness.complement()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;
    use crate::kernel::is_independent;

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(independence_number(&complete(4), &opts()).unwrap().size, 1);
        assert_eq!(independence_number(&petersen(), &opts()).unwrap().size, 4);
        assert_eq!(independence_number(&complete_bipartite(3, 3), &opts()).unwrap().size, 3);
        for r in 3..=8 {
            assert_eq!(independence_number(&cycle(r), &opts()).unwrap().size, r / 2);
        }
        let w = independence_number(&petersen(), &opts()).unwrap();
        assert!(is_independent(&petersen(), &w.witness));
    }

    #[test]
    fn alpha_on_empty_and_edgeless() {
        let e = Graph::from_edges(5, []).unwrap();
        assert_eq!(independence_number(&e, &opts()).unwrap().size, 5);
        let z = Graph::from_edges(0, []).unwrap();
        assert_eq!(independence_number(&z, &opts()).unwrap().size, 0);
    }

    #[test]
    fn alpha_cap() {
        let g = random_cubic(40, 1).unwrap();
        assert!(matches!(independence_number(&g, &opts()), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn fast_path_examples() {
        assert_eq!(gamma_so_cubic_fast(&complete(4), &opts()).unwrap().size, 3);
        assert_eq!(gamma_so_cubic_fast(&complete_bipartite(3, 3), &opts()).unwrap().size, 3);
        assert_eq!(gamma_so_cubic_fast(&petersen(), &opts()).unwrap().size, 6);
        assert!(matches!(gamma_so_cubic_fast(&cycle(5), &opts()), Err(Error::Domain(_))));
    }
}

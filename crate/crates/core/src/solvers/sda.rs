use super::search::{check_cap, SearchOptions, Witnessed};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::kernel::sda_residue_mask;
use crate::par;

// SDA-freeness is hereditary, so a partial set that already contains a
// strong defensive alliance is abandoned.
fn dfs(g: &Graph, k: usize, chosen: u64, count: usize, next: usize) -> Option<u64> {
    if sda_residue_mask(g, chosen) != 0 {
        return None;
    }
    if count == k {
        return Some(chosen);
    }
    let n = g.order();
    for v in next..n {
        if n - v < k - count {
            break;
        }
        if let Some(hit) = dfs(g, k, chosen | 1 << v, count + 1, v + 1) {
            return Some(hit);
        }
    }
    None
}

/// Largest strong-defensive-alliance-free set (lexicographically first among
/// those of maximum size).
pub fn phi0(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    g.require_connected()?;
    check_cap(g, opts.phi_cap)?;
    let n = g.order();
    for k in (1..=n).rev() {
        let firsts: Vec<usize> = (0..=n - k).collect();
        if let Some(bits) =
            par::find_map_first(&firsts, opts.parallel, |&v| dfs(g, k, 1 << v, 1, v + 1))
        {
            return Ok(Witnessed::new(VertexSet::from_bits(n, bits)));
        }
    }
    Ok(Witnessed::new(VertexSet::empty(n)))
}

/// Smallest strong-defensive-alliance cover, as the complement of a maximum
/// free set.
pub fn zeta0(g: &Graph, opts: &SearchOptions) -> Result<Witnessed> {
    let free = phi0(g, opts)?;
    Ok(Witnessed::new(free.witness.complement()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn k4_values() {
        let o = SearchOptions::default();
        let p = phi0(&complete(4), &o).unwrap();
        assert_eq!(p.size, 2);
        assert_eq!(p.witness, VertexSet::from_vertices(4, [0, 1]));
        assert_eq!(zeta0(&complete(4), &o).unwrap().size, 2);
    }

    #[test]
    fn odd_cycle_values() {
        // In a cycle every edge is a strong defensive alliance, so free sets
        // are exactly the independent sets.
        let o = SearchOptions::default();
        assert_eq!(phi0(&cycle(5), &o).unwrap().size, 2);
        assert_eq!(zeta0(&cycle(5), &o).unwrap().size, 3);
    }

    #[test]
    fn isolated_vertex_is_its_own_alliance() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(phi0(&g, &SearchOptions::default()).unwrap().size, 0);
    }
}

use std::cell::OnceCell;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{blocks, is_bipartite, line_graph, Bipartition, BlockDecomposition, Graph};
use crate::kernel::Predicate;
use crate::solvers::{self, min_satisfying, Query, SearchOptions, Witnessed};
use crate::spectral::{spectral_radius, SpectralRadius, DEFAULT_MAX_ITER, DEFAULT_TOL};

/// Deliberate harness faults, used to check that violations are detected
/// and reported end to end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// The harness answers every bipartiteness question wrongly.
    FlipBipartite,
}

fn cached<T: Clone>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<T> {
    cell.get_or_init(f).clone()
}

/// Lazily computed invariants of one corpus graph, shared by all claims.
pub(crate) struct Facts<'a> {
    pub g: &'a Graph,
    pub opts: SearchOptions,
    line_opts: SearchOptions,
    fault: Option<Fault>,
    bip: OnceCell<Option<Bipartition>>,
    blocks: OnceCell<Result<BlockDecomposition>>,
    triangles: OnceCell<bool>,
    alpha: OnceCell<Result<Witnessed>>,
    gamma: OnceCell<Result<Witnessed>>,
    gamma_delta: OnceCell<Result<Witnessed>>,
    gamma_o: OnceCell<Result<Witnessed>>,
    gamma_so: OnceCell<Result<Witnessed>>,
    gamma_so_fast: OnceCell<Result<Witnessed>>,
    gamma_i: OnceCell<Result<Option<Witnessed>>>,
    gsi: OnceCell<Result<Option<Witnessed>>>,
    a_i: OnceCell<Result<Option<Witnessed>>>,
    phi0: OnceCell<Result<Witnessed>>,
    line: OnceCell<Result<Graph>>,
    line_gamma_o: OnceCell<Result<Witnessed>>,
    line_gamma_so: OnceCell<Result<Witnessed>>,
    line_mu: OnceCell<Result<SpectralRadius>>,
}

impl<'a> Facts<'a> {
    pub fn new(g: &'a Graph, opts: SearchOptions, line_cap: usize, fault: Option<Fault>) -> Self {
        Facts {
            g,
            opts,
            line_opts: SearchOptions { alliance_cap: line_cap, ..opts },
            fault,
            bip: OnceCell::new(),
            blocks: OnceCell::new(),
            triangles: OnceCell::new(),
            alpha: OnceCell::new(),
            gamma: OnceCell::new(),
            gamma_delta: OnceCell::new(),
            gamma_o: OnceCell::new(),
            gamma_so: OnceCell::new(),
            gamma_so_fast: OnceCell::new(),
            gamma_i: OnceCell::new(),
            gsi: OnceCell::new(),
            a_i: OnceCell::new(),
            phi0: OnceCell::new(),
            line: OnceCell::new(),
            line_gamma_o: OnceCell::new(),
            line_gamma_so: OnceCell::new(),
            line_mu: OnceCell::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.g.order()
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bip.get_or_init(|| is_bipartite(self.g)).as_ref()
    }

    /// Bipartiteness as the claims see it (subject to fault injection).
    pub fn is_bipartite(&self) -> bool {
        let truth = self.bipartition().is_some();
        match self.fault {
            Some(Fault::FlipBipartite) => !truth,
            None => truth,
        }
    }

    pub fn blocks(&self) -> Result<BlockDecomposition> {
        cached(&self.blocks, || blocks(self.g))
    }

    /// The vertex set splits into vertex-disjoint triangles.
    pub fn has_triangle_partition(&self) -> bool {
        *self.triangles.get_or_init(|| {
            self.n() % 3 == 0 && triangle_cover(self.g, self.g.vertices().bits())
        })
    }

    pub fn alpha(&self) -> Result<Witnessed> {
        cached(&self.alpha, || solvers::independence_number(self.g, &self.opts))
    }

    pub fn gamma(&self) -> Result<Witnessed> {
        cached(&self.gamma, || solvers::gamma(self.g, &self.opts))
    }

    /// `gamma_k` at `k = delta` for a regular graph.
    pub fn gamma_delta(&self) -> Result<Witnessed> {
        cached(&self.gamma_delta, || {
            let d = self
                .g
                .regular_degree()
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::domain("requires a regular graph with edges"))?;
            solvers::gamma_k(self.g, d, &self.opts)
        })
    }

    pub fn gamma_o(&self) -> Result<Witnessed> {
        cached(&self.gamma_o, || solvers::gamma_o(self.g, &self.opts))
    }

    /// Strong global offensive number by subset search.
    pub fn gamma_so_search(&self) -> Result<Witnessed> {
        cached(&self.gamma_so, || solvers::gamma_so(self.g, &self.opts))
    }

    /// Strong global offensive number by the cubic complement identity.
    pub fn gamma_so_fast(&self) -> Result<Witnessed> {
        cached(&self.gamma_so_fast, || solvers::gamma_so_cubic_fast(self.g, &self.opts))
    }

    /// Search below the cap, the cubic fast path above it.
    pub fn gamma_so(&self) -> Result<Witnessed> {
        if self.n() <= self.opts.alliance_cap || !self.g.is_cubic() {
            self.gamma_so_search()
        } else {
            self.gamma_so_fast()
        }
    }

    pub fn gamma_i(&self) -> Result<Option<Witnessed>> {
        cached(&self.gamma_i, || solvers::gamma_i(self.g, &self.opts))
    }

    /// Smallest independent global strong offensive alliance.
    pub fn gamma_si(&self) -> Result<Option<Witnessed>> {
        cached(&self.gsi, || {
            min_satisfying(self.g, Query::independent(Predicate::GlobalStrongOffensive), &self.opts)
        })
    }

    pub fn a_i(&self) -> Result<Option<Witnessed>> {
        cached(&self.a_i, || solvers::a_i(self.g, &self.opts))
    }

    pub fn phi0(&self) -> Result<Witnessed> {
        cached(&self.phi0, || solvers::phi0(self.g, &self.opts))
    }

    pub fn line(&self) -> Result<Graph> {
        cached(&self.line, || Ok(line_graph(self.g)?.graph))
    }

    pub fn line_gamma_o(&self) -> Result<Witnessed> {
        cached(&self.line_gamma_o, || solvers::gamma_o(&self.line()?, &self.line_opts))
    }

    pub fn line_gamma_so(&self) -> Result<Witnessed> {
        cached(&self.line_gamma_so, || solvers::gamma_so(&self.line()?, &self.line_opts))
    }

    pub fn line_mu(&self) -> Result<SpectralRadius> {
        cached(&self.line_mu, || spectral_radius(&self.line()?, DEFAULT_TOL, DEFAULT_MAX_ITER))
    }
}

fn triangle_cover(g: &Graph, open: u64) -> bool {
    if open == 0 {
        return true;
    }
    let v = open.trailing_zeros() as usize;
    let rest = open & !(1 << v);
    let mut nbrs = g.neighbor_mask(v) & rest;
    while nbrs != 0 {
        let a = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        let mut common = nbrs & g.neighbor_mask(a);
        while common != 0 {
            let b = common.trailing_zeros() as usize;
            common &= common - 1;
            if triangle_cover(g, rest & !(1 << a) & !(1 << b)) {
                return true;
            }
        }
    }
    false
}

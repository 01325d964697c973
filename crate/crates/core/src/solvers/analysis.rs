use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::independence::{gamma_so_cubic_fast, independence_number};
use super::sda::phi0;
use super::search::{self, SearchOptions, Witnessed};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The invariants [`analyze`] can compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantId {
    Gamma,
    IGamma,
    Alpha,
    GammaK(usize),
    GammaO,
    GammaSo,
    GammaI,
    AO,
    ASo,
    AI,
    Phi0,
    Zeta0,
}

impl InvariantId {
    /// Everything except `gamma_k`, which needs a parameter.
    pub const ALL: [InvariantId; 11] = [
        InvariantId::Gamma,
        InvariantId::IGamma,
        InvariantId::Alpha,
        InvariantId::GammaO,
        InvariantId::GammaSo,
        InvariantId::GammaI,
        InvariantId::AO,
        InvariantId::ASo,
        InvariantId::AI,
        InvariantId::Phi0,
        InvariantId::Zeta0,
    ];
}

impl fmt::Display for InvariantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantId::Gamma => f.write_str("gamma"),
            InvariantId::IGamma => f.write_str("i_gamma"),
            InvariantId::Alpha => f.write_str("alpha"),
            InvariantId::GammaK(k) => write!(f, "gamma_k({k})"),
            InvariantId::GammaO => f.write_str("gamma_o"),
            InvariantId::GammaSo => f.write_str("gamma_so"),
            InvariantId::GammaI => f.write_str("gamma_i"),
            InvariantId::AO => f.write_str("a_o"),
            InvariantId::ASo => f.write_str("a_so"),
            InvariantId::AI => f.write_str("a_i"),
            InvariantId::Phi0 => f.write_str("phi0"),
            InvariantId::Zeta0 => f.write_str("zeta0"),
        }
    }
}

impl FromStr for InvariantId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "gamma" => InvariantId::Gamma,
            "i_gamma" => InvariantId::IGamma,
            "alpha" => InvariantId::Alpha,
            "gamma_o" => InvariantId::GammaO,
            "gamma_so" => InvariantId::GammaSo,
            "gamma_i" => InvariantId::GammaI,
            "a_o" => InvariantId::AO,
            "a_so" => InvariantId::ASo,
            "a_i" => InvariantId::AI,
            "phi0" => InvariantId::Phi0,
            "zeta0" => InvariantId::Zeta0,
            other => {
                let k = other
                    .strip_prefix("gamma_k(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::domain(format!("unknown invariant `{other}`")))?;
                InvariantId::GammaK(k)
            }
        };
        Ok(id)
    }
}

impl Serialize for InvariantId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Search,
    CubicFastPath,
    ComplementIdentity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Entry {
    /// `None` when no set with the defining property exists.
    pub value: Option<usize>,
    pub witness: Option<VertexSet>,
    pub method: Method,
}

impl Entry {
    fn found(w: Witnessed, method: Method) -> Self {
        Entry { value: Some(w.size), witness: Some(w.witness), method }
    }

    fn maybe(w: Option<Witnessed>, method: Method) -> Self {
        match w {
            Some(w) => Entry::found(w, method),
            None => Entry { value: None, witness: None, method },
        }
    }
}

/// Invariant values with witnesses for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllianceAnalysis {
    pub n: usize,
    pub m: usize,
    pub entries: BTreeMap<InvariantId, Entry>,
    /// Set when `gamma_so` was computed both by search and by `n - alpha`.
    pub gamma_so_cross_checked: bool,
}

impl AllianceAnalysis {
    pub fn value(&self, id: InvariantId) -> Option<usize> {
        self.entries.get(&id).and_then(|e| e.value)
    }
}

/// Computes the requested invariants of a connected graph.
///
/// On cubic graphs `gamma_so` comes from `n - alpha`; when the order is also
/// within the search cap it is recomputed by search and a mismatch is
/// reported as [`Error::Inconsistent`].
pub fn analyze(g: &Graph, ids: &[InvariantId], opts: &SearchOptions) -> Result<AllianceAnalysis> {
    g.require_connected()?;
    let mut entries = BTreeMap::new();
    let mut cross_checked = false;
    for &id in ids {
        if entries.contains_key(&id) {
            continue;
        }
        let entry = match id {
            InvariantId::Gamma => Entry::found(search::gamma(g, opts)?, Method::Search),
            InvariantId::IGamma => Entry::found(search::i_gamma(g, opts)?, Method::Search),
            InvariantId::Alpha => Entry::found(independence_number(g, opts)?, Method::Search),
            InvariantId::GammaK(k) => Entry::found(search::gamma_k(g, k, opts)?, Method::Search),
            InvariantId::GammaO => Entry::found(search::gamma_o(g, opts)?, Method::Search),
            InvariantId::GammaSo => {
                let (entry, checked) = gamma_so_entry(g, opts)?;
                cross_checked |= checked;
                entry
            }
            InvariantId::GammaI => Entry::maybe(search::gamma_i(g, opts)?, Method::Search),
            InvariantId::AO => Entry::found(search::a_o(g, opts)?, Method::Search),
            InvariantId::ASo => Entry::maybe(search::a_so(g, opts)?, Method::Search),
            InvariantId::AI => Entry::maybe(search::a_i(g, opts)?, Method::Search),
            InvariantId::Phi0 => Entry::found(phi0(g, opts)?, Method::Search),
            InvariantId::Zeta0 => {
                let free = phi0(g, opts)?;
                Entry::found(Witnessed::new(free.witness.complement()), Method::ComplementIdentity)
            }
        };
        entries.insert(id, entry);
    }
    Ok(AllianceAnalysis { n: g.order(), m: g.size(), entries, gamma_so_cross_checked: cross_checked })
}

fn gamma_so_entry(g: &Graph, opts: &SearchOptions) -> Result<(Entry, bool)> {
    if !g.is_cubic() {
        return Ok((Entry::found(search::gamma_so(g, opts)?, Method::Search), false));
    }
    let fast = gamma_so_cubic_fast(g, opts)?;
    if g.order() > opts.alliance_cap {
        return Ok((Entry::found(fast, Method::CubicFastPath), false));
    }
    let searched = search::gamma_so(g, opts)?;
    if searched.size != fast.size {
        return Err(Error::Inconsistent(format!(
            "gamma_so by search is {} but n - alpha is {}",
            searched.size, fast.size
        )));
    }
    Ok((Entry::found(searched, Method::Search), true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    #[test]
    fn k33_full_analysis() {
        let a = analyze(&complete_bipartite(3, 3), &InvariantId::ALL, &SearchOptions::default())
            .unwrap();
        assert_eq!(a.value(InvariantId::GammaO), Some(3));
        assert_eq!(a.value(InvariantId::GammaSo), Some(3));
        assert_eq!(a.value(InvariantId::GammaI), Some(3));
        assert_eq!(a.value(InvariantId::Alpha), Some(3));
        assert_eq!(a.value(InvariantId::AI), Some(2));
        assert_eq!(a.value(InvariantId::Gamma), Some(2));
        assert!(a.gamma_so_cross_checked);
        assert_eq!(
            a.value(InvariantId::Phi0).unwrap() + a.value(InvariantId::Zeta0).unwrap(),
            6
        );
        assert_eq!(a.entries[&InvariantId::Zeta0].method, Method::ComplementIdentity);
    }

    #[test]
    fn fast_path_beyond_search_cap() {
        let g = random_cubic(20, 3).unwrap();
        let a = analyze(&g, &[InvariantId::GammaSo, InvariantId::Alpha], &SearchOptions::default())
            .unwrap();
        assert_eq!(a.entries[&InvariantId::GammaSo].method, Method::CubicFastPath);
        assert_eq!(a.value(InvariantId::GammaSo).unwrap() + a.value(InvariantId::Alpha).unwrap(), 20);
    }

    #[test]
    fn invariant_names_round_trip() {
        for id in InvariantId::ALL.into_iter().chain([InvariantId::GammaK(3)]) {
            assert_eq!(id.to_string().parse::<InvariantId>().unwrap(), id);
        }
        assert!("gamma_q".parse::<InvariantId>().is_err());
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(analyze(&g, &[InvariantId::Alpha], &SearchOptions::default()), Err(Error::Disconnected));
    }
}

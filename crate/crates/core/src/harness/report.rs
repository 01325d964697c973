use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::to_graph6;
use crate::par;
use crate::solvers::SearchOptions;

use super::claims::{out_of_scope, register_claims, Claim, ClaimKind, OutOfScope, Outcome, Status};
use super::corpus::{CorpusGraph, CorpusSpec};
use super::facts::{Facts, Fault};

/// Which per-graph verdicts a report keeps. Aggregates always cover every verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Detail {
    /// Violations, discrepancies and band flips.
    #[default]
    Notable,
    /// Every verdict except hypothesis skips.
    Checked,
    All,
}

impl std::str::FromStr for Detail {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "notable" => Ok(Detail::Notable),
            "checked" => Ok(Detail::Checked),
            "all" => Ok(Detail::All),
            _ => Err(Error::domain(format!("unknown verdict detail `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Restrict to these claim ids; all claims when empty.
    pub claims: Vec<String>,
    pub detail: Detail,
    pub fault: Option<Fault>,
    /// Spread graphs across the rayon pool.
    pub parallel: bool,
}

/// One (claim, graph) cell of the verdict matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub claim_id: String,
    pub graph: String,
    pub graph6: Option<String>,
    pub n: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Verdict {
    fn keep(&self, detail: Detail) -> bool {
        let o = &self.outcome;
        let notable = o.status == Status::Violated || o.discrepancy.is_some() || o.band_flip;
        match detail {
            Detail::Notable => notable,
            Detail::Checked => notable || o.status != Status::Skipped,
            Detail::All => true,
        }
    }
}

struct Tally {
    status: Status,
    discrepancy: bool,
    band_flip: bool,
}

impl Tally {
    fn of(o: &Outcome) -> Self {
        Tally { status: o.status, discrepancy: o.discrepancy.is_some(), band_flip: o.band_flip }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
    pub hypothesis: &'static str,
    /// Graphs with a definite verdict (holds or violated).
    pub checked: usize,
    pub holds: usize,
    pub violations: usize,
    pub vacuous: usize,
    pub skipped: usize,
    pub discrepancies: usize,
    pub band_flips: usize,
    /// `violated` if any graph violates, `vacuous` if none was checked, else `holds`.
    pub status: Status,
}

impl ClaimSummary {
    fn new(c: &Claim) -> Self {
        ClaimSummary {
            id: c.id,
            kind: c.kind,
            statement: c.statement,
            hypothesis: c.hypothesis,
            checked: 0,
            holds: 0,
            violations: 0,
            vacuous: 0,
            skipped: 0,
            discrepancies: 0,
            band_flips: 0,
            status: Status::Vacuous,
        }
    }

    fn add(&mut self, t: &Tally) {
        match t.status {
            Status::Holds => self.holds += 1,
            Status::Violated => self.violations += 1,
            Status::Vacuous => self.vacuous += 1,
            Status::Skipped => self.skipped += 1,
        }
        self.discrepancies += t.discrepancy as usize;
        self.band_flips += t.band_flip as usize;
    }

    fn finish(&mut self) {
        self.checked = self.holds + self.violations;
        self.status = if self.violations > 0 {
            Status::Violated
        } else if self.holds == 0 {
            Status::Vacuous
        } else {
            Status::Holds
        };
    }
}

/// Outcome of a corpus run. Serializes deterministically for a fixed spec.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub corpus: CorpusSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
    pub detail: Detail,
    pub graphs: usize,
    pub out_of_scope: Vec<OutOfScope>,
    pub claims: Vec<ClaimSummary>,
    pub violations: usize,
    pub discrepancies: Vec<Verdict>,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.violations == 0
    }

    pub fn summary(&self, id: &str) -> Option<&ClaimSummary> {
        self.claims.iter().find(|c| c.id.eq_ignore_ascii_case(id))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Numeric(e.to_string()))
    }

    /// One row per retained verdict.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let io = |e: csv::Error| Error::domain(format!("csv: {e}"));
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["claim_id", "graph", "graph6", "n", "status", "evidence", "note", "discrepancy", "band_flip"])
            .map_err(io)?;
        for v in &self.verdicts {
            let o = &v.outcome;
            let evidence: Vec<String> = o.evidence.iter().map(ToString::to_string).collect();
            w.write_record([
                v.claim_id.as_str(),
                v.graph.as_str(),
                v.graph6.as_deref().unwrap_or(""),
                &v.n.to_string(),
                &o.status.to_string(),
                &evidence.join(" "),
                o.note.as_deref().unwrap_or(""),
                o.discrepancy.as_deref().unwrap_or(""),
                if o.band_flip { "true" } else { "false" },
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::domain(format!("csv: {e}")))
    }
}

fn select_claims(ids: &[String]) -> Result<Vec<&'static Claim>> {
    if ids.is_empty() {
        return Ok(register_claims().iter().collect());
    }
    let mut out: Vec<&'static Claim> = Vec::new();
    for id in ids {
        let c = super::claims::find_claim(id)?;
        if !out.iter().any(|x| x.id == c.id) {
            out.push(c);
        }
    }
    // report order follows the registry
    let pos = |c: &Claim| register_claims().iter().position(|x| x.id == c.id);
    out.sort_by_key(|c| pos(c));
    Ok(out)
}

fn validate(spec: &CorpusSpec) -> Result<()> {
    let search = SearchOptions::default();
    if spec.alliance_cap > 64 || spec.line_graph_cap > 64 {
        return Err(Error::domain("caps above 64 are not supported"));
    }
    if let Some(r) = &spec.random {
        if let Some(&n) = r.orders.iter().find(|&&n| n > search.alpha_cap) {
            return Err(Error::CapExceeded { n, cap: search.alpha_cap });
        }
    }
    Ok(())
}

/// Runs the selected claims over every graph of the corpus.
pub fn run_corpus(spec: &CorpusSpec, opts: &RunOptions) -> Result<Report> {
    validate(spec)?;
    let claims = select_claims(&opts.claims)?;
    let corpus = spec.build()?;
    let search = SearchOptions { alliance_cap: spec.alliance_cap, ..SearchOptions::default() }.sequential();

    let rows = par::map(&corpus, opts.parallel, |cg: &CorpusGraph| {
        let facts = Facts::new(&cg.graph, search, spec.line_graph_cap, opts.fault);
        let mut tally = Vec::with_capacity(claims.len());
        let mut kept = Vec::new();
        for c in &claims {
            let outcome = c.evaluate(&facts);
            tally.push(Tally::of(&outcome));
            let v = Verdict {
                claim_id: c.id.to_string(),
                graph: cg.id.clone(),
                graph6: to_graph6(&cg.graph).ok(),
                n: cg.graph.order(),
                outcome,
            };
            if v.keep(opts.detail) || v.outcome.discrepancy.is_some() {
                kept.push(v);
            }
        }
        (tally, kept)
    });

    let mut summaries: Vec<ClaimSummary> = claims.iter().map(|c| ClaimSummary::new(c)).collect();
    let mut verdicts = Vec::new();
    let mut discrepancies = Vec::new();
    for (tally, kept) in rows {
        for (s, t) in summaries.iter_mut().zip(&tally) {
            s.add(t);
        }
        for v in kept {
            if v.outcome.discrepancy.is_some() {
                discrepancies.push(v.clone());
            }
            if v.keep(opts.detail) {
                verdicts.push(v);
            }
        }
    }
    summaries.iter_mut().for_each(ClaimSummary::finish);

    // rows arrive in corpus order; regroup by registry order of claims
    let claim_pos = |id: &str| claims.iter().position(|c| c.id == id);
    verdicts.sort_by_key(|v| claim_pos(&v.claim_id));
    discrepancies.sort_by_key(|v| claim_pos(&v.claim_id));

    Ok(Report {
        corpus: spec.clone(),
        fault: opts.fault,
        detail: opts.detail,
        graphs: corpus.len(),
        out_of_scope: out_of_scope(),
        violations: summaries.iter().map(|s| s.violations).sum(),
        claims: summaries,
        discrepancies,
        verdicts,
    })
}

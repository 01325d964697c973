use std::time::Instant;

use alliance_core::graph::to_graph6;
use alliance_core::spectral::{evaluate_bound, BoundId, BoundOutcome, DEFAULT_TOL};
use anyhow::Result;
use clap::Args;
use serde::Serialize;

use crate::input::read_graphs;
use crate::{envelope, usage, CapArgs, InputArgs};

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    caps: CapArgs,
    /// Bounds to evaluate (th1, thof, coro, cotainf, cotasup, eq5, eq6, otfen22); all by default.
    #[arg(long, value_delimiter = ',')]
    claim: Vec<String>,
    /// Power-iteration tolerance for spectral bounds.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Serialize)]
struct Evaluated {
    label: String,
    graph6: Option<String>,
    bounds: Vec<BoundOutcome>,
}

#[derive(Serialize)]
struct Payload {
    kind: &'static str,
    graphs: Vec<Evaluated>,
}

pub fn run(args: BoundsArgs, json: bool) -> Result<u8> {
    let start = Instant::now();
    let ids: Vec<BoundId> = if args.claim.is_empty() {
        BoundId::ALL.to_vec()
    } else {
        args.claim
            .iter()
            .map(|c| c.parse().map_err(|_| usage(format!("unknown bound `{c}`"))))
            .collect::<Result<_>>()?
    };
    if !(args.tol > 0.0) {
        return Err(usage("--tol must be positive"));
    }
    let opts = args.caps.options();
    let mut out = Vec::new();
    for item in read_graphs(args.input.input.as_deref(), args.input.format)? {
        let bounds = ids
            .iter()
            .map(|&id| evaluate_bound(&item.graph, id, &opts, args.tol))
            .collect::<alliance_core::Result<Vec<_>>>()
            .map_err(|e| anyhow::Error::new(e).context(item.label.clone()))?;
        out.push(Evaluated { graph6: to_graph6(&item.graph).ok(), label: item.label, bounds });
    }
    if json {
        envelope::print("bounds", start, Payload { kind: "bounds", graphs: out })?;
        return Ok(0);
    }
    for e in &out {
        println!("{}", e.label);
        for b in &e.bounds {
            match b {
                BoundOutcome::Skipped { claim_id, reason } => {
                    println!("  {claim_id:<8} skipped: {reason}");
                }
                BoundOutcome::Evaluated(r) => {
                    let exact = r.exact.map_or("?".to_string(), |x| x.to_string());
                    let verdict = if !r.applicable {
                        "not applicable"
                    } else if r.exact.is_none() {
                        "unchecked"
                    } else if r.holds() {
                        "ok"
                    } else {
                        "VIOLATED"
                    };
                    let mut tags = Vec::new();
                    if r.lower_tight() {
                        tags.push("lower tight");
                    }
                    if r.upper_tight() {
                        tags.push("upper tight");
                    }
                    if r.band_flip {
                        tags.push("band flip");
                    }
                    let tags = if tags.is_empty() { String::new() } else { format!(" ({})", tags.join(", ")) };
                    println!("  {:<8} [{}, {}]  exact {exact}  {verdict}{tags}", r.claim_id, r.lower, r.upper);
                    if let Some(n) = &r.note {
                        println!("           {n}");
                    }
                }
            }
        }
    }
    Ok(0)
}

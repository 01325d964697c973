use std::time::Instant;

use alliance_core::graph::to_graph6;
use alliance_core::solvers::{analyze, AllianceAnalysis, InvariantId};
use anyhow::Result;
use clap::Args;
use serde::Serialize;

use crate::input::read_graphs;
use crate::{envelope, CapArgs, InputArgs};

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    caps: CapArgs,
    /// Every invariant (the default when no invariant flag is given).
    #[arg(long)]
    all: bool,
    #[arg(long)]
    gamma: bool,
    #[arg(long)]
    i_gamma: bool,
    #[arg(long)]
    alpha: bool,
    #[arg(long)]
    gamma_o: bool,
    #[arg(long)]
    gamma_so: bool,
    #[arg(long)]
    gamma_i: bool,
    #[arg(long)]
    a_o: bool,
    #[arg(long)]
    a_so: bool,
    #[arg(long)]
    a_i: bool,
    #[arg(long)]
    phi0: bool,
    #[arg(long)]
    zeta0: bool,
    /// k-domination number; repeatable.
    #[arg(long, value_name = "K")]
    gamma_k: Vec<usize>,
}

impl AnalyzeArgs {
    fn ids(&self) -> Vec<InvariantId> {
        use InvariantId::*;
        let flags = [
            (self.gamma, Gamma),
            (self.i_gamma, IGamma),
            (self.alpha, Alpha),
            (self.gamma_o, GammaO),
            (self.gamma_so, GammaSo),
            (self.gamma_i, GammaI),
            (self.a_o, AO),
            (self.a_so, ASo),
            (self.a_i, AI),
            (self.phi0, Phi0),
            (self.zeta0, Zeta0),
        ];
        let mut ids: Vec<InvariantId> = flags.iter().filter(|f| f.0).map(|f| f.1).collect();
        ids.extend(self.gamma_k.iter().map(|&k| GammaK(k)));
        if self.all || ids.is_empty() {
            ids.extend(InvariantId::ALL);
        }
        ids.sort();
        ids.dedup();
        ids
    }
}

#[derive(Serialize)]
struct Analyzed {
    label: String,
    graph6: Option<String>,
    analysis: AllianceAnalysis,
}

#[derive(Serialize)]
struct Payload {
    kind: &'static str,
    graphs: Vec<Analyzed>,
}

pub fn run(args: AnalyzeArgs, json: bool) -> Result<u8> {
    let start = Instant::now();
    if args.gamma_k.contains(&0) {
        return Err(crate::usage("--gamma-k needs k >= 1"));
    }
    let ids = args.ids();
    let opts = args.caps.options();
    let mut out = Vec::new();
    for item in read_graphs(args.input.input.as_deref(), args.input.format)? {
        let analysis = analyze(&item.graph, &ids, &opts)
            .map_err(|e| anyhow::Error::new(e).context(item.label.clone()))?;
        out.push(Analyzed { graph6: to_graph6(&item.graph).ok(), label: item.label, analysis });
    }
    if json {
        envelope::print("analyze", start, Payload { kind: "analysis", graphs: out })?;
        return Ok(0);
    }
    for a in &out {
        println!("{}  n={} m={}", a.label, a.analysis.n, a.analysis.m);
        for (id, e) in &a.analysis.entries {
            let value = e.value.map_or("none".to_string(), |v| v.to_string());
            let witness = e.witness.map_or("-".to_string(), |w| w.to_string());
            let method = serde_json::to_value(e.method)?;
            println!("  {:<12} {:>5}  {:<24} {}", id.to_string(), value, witness, method.as_str().unwrap_or(""));
        }
        if a.analysis.gamma_so_cross_checked {
            println!("  gamma_so agrees with n - alpha");
        }
    }
    Ok(0)
}

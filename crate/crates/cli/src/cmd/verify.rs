use std::fs::File;
use std::path::PathBuf;
use std::time::Instant;

use alliance_core::harness::{run_corpus, CorpusSpec, Detail, Family, Fault, RandomSpec, Report, RunOptions, Status, Verdict};
use anyhow::{Context, Result};
use clap::{Args, ValueEnum};
use serde::Serialize;

use crate::{envelope, usage, EXIT_VIOLATION};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FaultArg {
    FlipBipartite,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DetailArg {
    Notable,
    Checked,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Orders of exhaustive labeled cubic graphs, e.g. 4,6,8.
    #[arg(long, value_delimiter = ',')]
    exhaustive: Vec<usize>,
    /// Random cubic orders: `10,12,14` or `n=10..14,count=50,seed=42`.
    #[arg(long)]
    random: Option<String>,
    /// Random graphs per order [default: 50].
    #[arg(long)]
    count: Option<usize>,
    /// Seed for the random part of the corpus [default: 42].
    #[arg(long)]
    seed: Option<u64>,
    /// Named families, e.g. `petersen,prism:3-7,bipartite:3x3,2x3`.
    #[arg(long)]
    families: Vec<String>,
    /// Restrict to these claim ids.
    #[arg(long, value_delimiter = ',')]
    claim: Vec<String>,
    /// Worker threads; the report does not depend on this.
    #[arg(long)]
    threads: Option<usize>,
    /// Which per-graph verdicts to include in the report.
    #[arg(long, value_enum, default_value = "notable")]
    verdicts: DetailArg,
    /// Also write the retained verdicts as CSV.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Search cap for corpus graphs.
    #[arg(long, default_value_t = 16)]
    cap: usize,
    /// Search cap for line graphs of corpus graphs.
    #[arg(long, default_value_t = 21)]
    line_cap: usize,
    /// Permit n = 10 in --exhaustive (hundreds of millions of labeled graphs).
    #[arg(long)]
    allow_large: bool,
    /// Testing aid: deliberately break one harness predicate.
    #[arg(long, value_enum, hide = true)]
    inject_fault: Option<FaultArg>,
}

/// Splits on commas, keeping numeric continuations (`cycle:3,5`) attached.
fn split_families(raw: &[String]) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for part in raw.iter().flat_map(|r| r.split(',')) {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        match out.last_mut() {
            Some(last) if part.starts_with(|c: char| c.is_ascii_digit()) && last.contains(':') => {
                last.push(',');
                last.push_str(part);
            }
            _ => out.push(part.to_string()),
        }
    }
    out
}

fn parse_orders(s: &str) -> Result<Vec<usize>> {
    if let Some((a, b)) = s.split_once("..") {
        let (a, b): (usize, usize) = (a.parse()?, b.parse()?);
        anyhow::ensure!(a <= b, "empty range {s}");
        return Ok((a..=b).filter(|n| n % 2 == 0).collect());
    }
    Ok(s.split('/').map(str::parse).collect::<std::result::Result<_, _>>()?)
}

fn parse_random(s: &str) -> Result<(Vec<usize>, Option<usize>, Option<u64>)> {
    if !s.contains('=') {
        let orders = s.split(',').map(|x| x.trim().parse()).collect::<std::result::Result<_, _>>()?;
        return Ok((orders, None, None));
    }
    let (mut orders, mut count, mut seed) = (None, None, None);
    for kv in s.split(',') {
        let (k, v) = kv.split_once('=').with_context(|| format!("expected key=value, got `{kv}`"))?;
        match k.trim() {
            "n" => orders = Some(parse_orders(v.trim())?),
            "count" => count = Some(v.trim().parse()?),
            "seed" => seed = Some(v.trim().parse()?),
            other => anyhow::bail!("unknown key `{other}`"),
        }
    }
    Ok((orders.context("missing n=")?, count, seed))
}

impl VerifyArgs {
    fn spec(&self) -> Result<CorpusSpec> {
        let custom = !self.exhaustive.is_empty() || self.random.is_some() || !self.families.is_empty();
        let mut spec = if custom { CorpusSpec::empty() } else { CorpusSpec::default() };
        if custom {
            spec.exhaustive_orders = self.exhaustive.clone();
            spec.families = split_families(&self.families)
                .iter()
                .map(|f| f.parse::<Family>().map_err(|e| usage(e.to_string())))
                .collect::<Result<_>>()?;
            if let Some(r) = &self.random {
                let (orders, count, seed) =
                    parse_random(r).map_err(|e| usage(format!("--random {r}: {e}")))?;
                spec.random = Some(RandomSpec { orders, count: count.unwrap_or(50), seed: seed.unwrap_or(42) });
            }
        }
        if let Some(r) = spec.random.as_mut() {
            r.count = self.count.unwrap_or(r.count);
            r.seed = self.seed.unwrap_or(r.seed);
        }
        spec.alliance_cap = self.cap;
        spec.line_graph_cap = self.line_cap;
        spec.allow_large_exhaustive = self.allow_large;
        Ok(spec)
    }
}

#[derive(Serialize)]
struct Payload<'a> {
    kind: &'static str,
    report: &'a Report,
}

fn print_verdict(v: &Verdict) {
    let g6 = v.graph6.as_deref().unwrap_or("-");
    println!("  {:<15} {:<18} {:<9} {g6}", v.claim_id, v.graph, v.outcome.status.to_string());
    if let Some(n) = &v.outcome.note {
        println!("      {n}");
    }
    if let Some(d) = &v.outcome.discrepancy {
        println!("      discrepancy: {d}");
    }
    for e in &v.outcome.evidence {
        println!("      {e}");
    }
}

fn print_table(r: &Report) {
    println!("corpus: {} graphs", r.graphs);
    println!(
        "{:<15} {:<9} {:>8} {:>8} {:>6} {:>8} {:>8} {:>6} {:>6}",
        "claim", "status", "checked", "holds", "viol", "vacuous", "skipped", "disc", "flips"
    );
    for c in &r.claims {
        println!(
            "{:<15} {:<9} {:>8} {:>8} {:>6} {:>8} {:>8} {:>6} {:>6}",
            c.id,
            c.status.to_string(),
            c.checked,
            c.holds,
            c.violations,
            c.vacuous,
            c.skipped,
            c.discrepancies,
            c.band_flips
        );
    }
    for o in &r.out_of_scope {
        println!("out of scope: {} ({}): {}", o.id, o.statement, o.reason);
    }
    let violated: Vec<&Verdict> = r.verdicts.iter().filter(|v| v.outcome.status == Status::Violated).collect();
    if !violated.is_empty() {
        println!("\nviolations ({} total, first {} shown):", r.violations, violated.len().min(20));
        violated.iter().take(20).for_each(|v| print_verdict(v));
    }
    if !r.discrepancies.is_empty() {
        println!("\ndiscrepancies ({} total, first {} shown):", r.discrepancies.len(), r.discrepancies.len().min(5));
        r.discrepancies.iter().take(5).for_each(print_verdict);
    }
    let others: Vec<&Verdict> = r
        .verdicts
        .iter()
        .filter(|v| v.outcome.status != Status::Violated && v.outcome.discrepancy.is_none())
        .collect();
    if !others.is_empty() {
        println!("\nverdicts ({}):", others.len());
        others.iter().for_each(|v| print_verdict(v));
    }
    println!("\n{}", if r.ok() { "no violations" } else { "VIOLATIONS FOUND" });
}

pub fn run(args: VerifyArgs, json: bool) -> Result<u8> {
    let start = Instant::now();
    if let Some(t) = args.threads {
        if t == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("starting thread pool")?;
    }
    let spec = args.spec()?;
    let opts = RunOptions {
        claims: args.claim.clone(),
        detail: match args.verdicts {
            DetailArg::Notable => Detail::Notable,
            DetailArg::Checked => Detail::Checked,
            DetailArg::All => Detail::All,
        },
        fault: args.inject_fault.map(|FaultArg::FlipBipartite| Fault::FlipBipartite),
        parallel: true,
    };
    let report = run_corpus(&spec, &opts).map_err(|e| match e {
        alliance_core::Error::Domain(msg) => usage(msg),
        other => other.into(),
    })?;
    if let Some(path) = &args.csv {
        let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        report.write_csv(f)?;
    }
    if json {
        envelope::print("verify", start, Payload { kind: "verify", report: &report })?;
    } else {
        print_table(&report);
    }
    Ok(if report.ok() { 0 } else { EXIT_VIOLATION })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_splitting() {
        let raw = vec!["petersen,cycle:3,5,bipartite:3x3,2x3".to_string(), "prism:3-7".to_string()];
        assert_eq!(split_families(&raw), ["petersen", "cycle:3,5", "bipartite:3x3,2x3", "prism:3-7"]);
    }

    #[test]
    fn random_forms() {
        assert_eq!(parse_random("10,12").unwrap(), (vec![10, 12], None, None));
        assert_eq!(parse_random("n=10..14,count=5,seed=7").unwrap(), (vec![10, 12, 14], Some(5), Some(7)));
        assert!(parse_random("n=14..10").is_err());
        assert!(parse_random("q=1").is_err());
    }
}

use std::time::Instant;

use alliance_core::graph::generators::{self, all_labeled_cubic, random_cubic};
use alliance_core::harness::Family;
use alliance_core::Graph;
use anyhow::Result;
use clap::Args;
use serde::Serialize;

use crate::input::{render, Format};
use crate::{envelope, usage};

#[derive(Args, Debug)]
pub struct GenArgs {
    /// complete N | bipartite A B | cycle R | prism R | petersen | friendship K |
    /// random-cubic N | cubic N | truncated | line | cactus
    family: String,
    params: Vec<usize>,
    /// Seed for random-cubic.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Permit `cubic 10`.
    #[arg(long)]
    allow_large: bool,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(Serialize)]
struct Generated {
    label: String,
    n: usize,
    m: usize,
    graph6: String,
}

#[derive(Serialize)]
struct Payload {
    kind: &'static str,
    graphs: Vec<Generated>,
}

fn build(args: &GenArgs) -> Result<Vec<Graph>> {
    let p = &args.params;
    let want = |k: usize| {
        if p.len() == k {
            Ok(())
        } else {
            Err(usage(format!("`{}` takes {k} parameter(s), got {}", args.family, p.len())))
        }
    };
    let positive = |x: usize, what: &str| if x == 0 { Err(usage(format!("{what} must be positive"))) } else { Ok(x) };
    Ok(match args.family.as_str() {
        "complete" => {
            want(1)?;
            vec![generators::complete(positive(p[0], "n")?)]
        }
        "bipartite" => {
            want(2)?;
            vec![generators::complete_bipartite(positive(p[0], "a")?, positive(p[1], "b")?)]
        }
        "cycle" => {
            want(1)?;
            if p[0] < 3 {
                return Err(usage("cycle needs r >= 3"));
            }
            vec![generators::cycle(p[0])]
        }
        "prism" => {
            want(1)?;
            vec![generators::prism(p[0])?]
        }
        "petersen" => {
            want(0)?;
            vec![generators::petersen()]
        }
        "friendship" => {
            want(1)?;
            vec![generators::friendship(positive(p[0], "k")?)]
        }
        "random-cubic" => {
            want(1)?;
            vec![random_cubic(p[0], args.seed)?]
        }
        "cubic" => {
            want(1)?;
            all_labeled_cubic(p[0], args.allow_large)?
        }
        "truncated" | "line" | "cactus" => {
            want(0)?;
            args.family.parse::<Family>()?.graphs()?
        }
        other => return Err(usage(format!("unknown family `{other}`"))),
    })
}

pub fn run(args: GenArgs, json: bool) -> Result<u8> {
    let start = Instant::now();
    let graphs = build(&args)?;
    if json {
        let graphs = graphs
            .iter()
            .map(|g| {
                Ok(Generated {
                    label: g.name().unwrap_or("").to_string(),
                    n: g.order(),
                    m: g.size(),
                    graph6: render(g, Format::Graph6)?,
                })
            })
            .collect::<Result<_>>()?;
        envelope::print("gen", start, Payload { kind: "graphs", graphs })?;
        return Ok(0);
    }
    for (i, g) in graphs.iter().enumerate() {
        if args.format == Format::Edgelist && i > 0 {
            println!();
        }
        print!("{}", render(g, args.format)?);
        if args.format != Format::Edgelist {
            println!();
        }
    }
    Ok(0)
}

use std::time::Instant;

use anyhow::Result;
use clap::Args;
use serde::Serialize;

use crate::input::{read_graphs, render, Format};
use crate::{envelope, usage, InputArgs};

#[derive(Args, Debug)]
pub struct ConvertArgs {
    /// Input file; `-` or nothing reads stdin.
    input: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "auto")]
    from: Format,
    #[arg(long, value_enum)]
    to: Format,
}

#[derive(Serialize)]
struct Payload {
    kind: &'static str,
    format: &'static str,
    outputs: Vec<String>,
}

pub fn run(args: ConvertArgs, json: bool) -> Result<u8> {
    let start = Instant::now();
    let format = match args.to {
        Format::Auto => return Err(usage("--to must be graph6 or edgelist")),
        f => f,
    };
    let input = InputArgs { input: args.input, format: args.from };
    let outputs: Vec<String> = read_graphs(input.input.as_deref(), input.format)?
        .iter()
        .map(|l| render(&l.graph, format))
        .collect::<Result<_>>()?;
    if json {
        let name = if format == Format::Graph6 { "graph6" } else { "edgelist" };
        envelope::print("convert", start, Payload { kind: "convert", format: name, outputs })?;
        return Ok(0);
    }
    match format {
        Format::Graph6 => outputs.iter().for_each(|o| println!("{o}")),
        _ => print!("{}", outputs.join("\n")),
    }
    Ok(0)
}

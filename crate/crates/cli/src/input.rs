use std::fs;
use std::io::{self, Read};
use std::path::Path;

use alliance_core::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use alliance_core::Graph;
use anyhow::{Context, Result};
use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// graph6 lines, or edge list when any line contains whitespace.
    Auto,
    Graph6,
    Edgelist,
}

/// A graph read from the input together with a display label.
pub struct Labeled {
    pub label: String,
    pub graph: Graph,
}

pub fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn resolve(text: &str, format: Format) -> Format {
    if format != Format::Auto {
        return format;
    }
    let edge_like = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .any(|l| l.contains(char::is_whitespace));
    if edge_like || text.trim().is_empty() {
        Format::Edgelist
    } else {
        Format::Graph6
    }
}

/// One graph per graph6 line, or a single edge-list graph.
pub fn parse_graphs(text: &str, format: Format, source: &str) -> Result<Vec<Labeled>> {
    match resolve(text, format) {
        Format::Graph6 => {
            let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
            let multi = lines.len() > 1;
            lines
                .iter()
                .enumerate()
                .map(|(i, line)| {
                    let graph = parse_graph6(line).map_err(|e| {
                        anyhow::Error::new(e).context(format!("{source}, graph {}", i + 1))
                    })?;
                    let label = if multi { format!("{source}#{}", i + 1) } else { source.to_string() };
                    Ok(Labeled { label, graph })
                })
                .collect()
        }
        _ => {
            let graph = parse_edge_list(text).map_err(|e| anyhow::Error::new(e).context(source.to_string()))?;
            Ok(vec![Labeled { label: source.to_string(), graph }])
        }
    }
}

pub fn read_graphs(path: Option<&Path>, format: Format) -> Result<Vec<Labeled>> {
    let source = match path {
        Some(p) if p != Path::new("-") => p.display().to_string(),
        _ => "stdin".to_string(),
    };
    let graphs = parse_graphs(&read_text(path)?, format, &source)?;
    anyhow::ensure!(!graphs.is_empty(), "no graph in {source}");
    Ok(graphs)
}

pub fn render(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Edgelist => to_edge_list(g),
        _ => to_graph6(g)?,
    })
}

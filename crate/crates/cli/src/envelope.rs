use std::time::Instant;

use serde::Serialize;

/// The `--json` wrapper shared by every subcommand.
#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: CommandEcho,
    pub payload: T,
    pub timing: Timing,
}

#[derive(Serialize)]
pub struct CommandEcho {
    pub name: &'static str,
    pub args: Vec<String>,
}

#[derive(Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

pub fn print<T: Serialize>(name: &'static str, start: Instant, payload: T) -> anyhow::Result<()> {
    let env = Envelope {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command: CommandEcho { name, args: std::env::args().skip(1).collect() },
        payload,
        timing: Timing { elapsed_ms: start.elapsed().as_secs_f64() * 1e3 },
    };
    println!("{}", serde_json::to_string_pretty(&env)?);
    Ok(())
}

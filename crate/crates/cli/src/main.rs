use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sector_cli::commands::{
    cmd_cycle, cmd_flat_edges, cmd_heights, cmd_link, cmd_pairing, cmd_render, cmd_stab,
    cmd_verify, CommandOutput,
};
use sector_cli::report::Params;

/// Exact computations in the sector of the SL3 Euclidean building:
/// stabilizer profiles, the Morse relabel, descending links, the local
/// cocycles and cycles, and the pairing certificate.
#[derive(Parser)]
#[command(name = "sector", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct VertexArg {
    /// Vertex exponents I J.
    #[arg(long, num_args = 2, value_names = ["I", "J"], allow_negative_numbers = true)]
    vertex: Vec<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Run every verification suite and print one line per lemma.
    Verify {
        /// Window bound for height and census checks.
        #[arg(long, default_value_t = 21)]
        imax: i64,
        /// Largest cocycle/cycle level.
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Stabilizer profile and generators of a sector vertex.
    Stab {
        #[command(flatten)]
        vertex: VertexArg,
    },
    /// The integer Morse relabel over a sector window.
    Heights {
        #[arg(long, default_value_t = 21)]
        imax: i64,
    },
    /// Census of height-flat edges in a window.
    #[command(name = "flat-edges")]
    FlatEdges {
        #[arg(long, default_value_t = 21)]
        imax: i64,
    },
    /// Descending link of an apartment vertex.
    Link {
        #[command(flatten)]
        vertex: VertexArg,
        #[arg(long, default_value_t = 21)]
        imax: i64,
    },
    /// The eight-term chamber cycle at a level and its projection.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// The pairing matrix up to a level, with rank and certificates.
    Pairing {
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// Render the sector window as SVG.
    Render {
        #[arg(long, default_value_t = 21)]
        imax: i64,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
    },
}

fn vertex_pair(arg: &VertexArg) -> (i64, i64) {
    (arg.vertex[0], arg.vertex[1])
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { imax, nmax, seed } => {
            cmd_verify(Params { imax: *imax, nmax: *nmax, seed: *seed })
        }
        Command::Stab { vertex } => {
            let (i, j) = vertex_pair(vertex);
            cmd_stab(i, j)
        }
        Command::Heights { imax } => cmd_heights(*imax),
        Command::FlatEdges { imax } => cmd_flat_edges(*imax),
        Command::Link { vertex, imax } => {
            let (i, j) = vertex_pair(vertex);
            cmd_link(i, j, *imax)
        }
        Command::Cycle { n } => cmd_cycle(*n),
        Command::Pairing { nmax } => cmd_pairing(*nmax),
        Command::Render { imax, out } => cmd_render(*imax, out),
    };

    match result {
        Ok(CommandOutput { human, json, ok }) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json).expect("serializable"));
            } else {
                print!("{}", human);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::FAILURE
        }
    }
}

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hvg::cli::{self, BenchInput, BenchOptions, CensusOptions};

#[derive(Parser)]
#[command(name = "hvg", version, about = "Horizontal visibility graphs")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    Json,
    Dot,
}

impl From<Format> for cli::GraphFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Edges => cli::GraphFormat::Edges,
            Format::Json => cli::GraphFormat::Json,
            Format::Dot => cli::GraphFormat::Dot,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Naive,
    Fast,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Standard,
    Nesting,
}

#[derive(Clone, Copy, ValueEnum)]
enum Codec {
    Parens,
    Brackets,
}

impl From<Codec> for cli::Codec {
    fn from(c: Codec) -> Self {
        match c {
            Codec::Parens => cli::Codec::Parens,
            Codec::Brackets => cli::Codec::Brackets,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Universe {
    Distinct,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Brute,
    Bijective,
}

#[derive(Clone, Copy, ValueEnum)]
enum Input {
    Walk,
    Adversarial,
}

#[derive(Subcommand)]
enum Command {
    /// Build the HVG of each sequence in a series file
    Build {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "fast")]
        algo: Algo,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Print a data sequence whose HVG is the given graph
    Realize {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "standard")]
        mode: Mode,
    },
    /// Reconstruct a distinct-data HVG from its degree sequence
    FromDegrees {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Encode a graph as a parenthesis word or bracketing
    Encode {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "parens")]
        codec: Codec,
    },
    /// Decode a parenthesis word or bracketing into a graph
    Decode {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "parens")]
        codec: Codec,
        /// Unwrap redundant brackets instead of rejecting them
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Count or list all HVGs on n vertices
    Census {
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        universe: Universe,
        #[arg(long, value_enum, default_value = "brute")]
        strategy: Strategy,
        #[arg(long)]
        list: bool,
        /// Also count distinct degree sequences
        #[arg(long)]
        degrees: bool,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value = "edges")]
        format: Format,
    },
    /// Randomized count of visibility graphs on n vertices
    VgCensus {
        n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Values are drawn uniformly from 0..=max-value
        #[arg(long, default_value_t = 1_000)]
        max_value: i64,
    },
    /// Time the naive and fast builders on doubling sizes
    Bench {
        #[arg(long, default_value_t = 1_000)]
        min_n: usize,
        #[arg(long, default_value_t = 200_000)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "walk")]
        input: Input,
        #[arg(long, default_value_t = 20_000)]
        naive_max: usize,
    },
}

fn read_input(file: Option<PathBuf>) -> std::io::Result<String> {
    match file {
        Some(path) => std::fs::read_to_string(path),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn run(command: Command) -> Result<String, hvg::HvgError> {
    let input = |file: Option<PathBuf>| {
        read_input(file).unwrap_or_else(|e| {
            eprintln!("error: {e}");
            std::process::exit(1)
        })
    };
    match command {
        Command::Build { file, algo, format } => {
            let algo = match algo {
                Algo::Naive => cli::Algorithm::Naive,
                Algo::Fast => cli::Algorithm::Fast,
            };
            cli::cmd_build(&input(file), algo, format.into())
        }
        Command::Realize { file, mode } => {
            let mode = match mode {
                Mode::Standard => cli::RealizeMode::Standard,
                Mode::Nesting => cli::RealizeMode::Nesting,
            };
            cli::cmd_realize(&input(file), mode)
        }
        Command::FromDegrees { file, format } => cli::cmd_from_degrees(&input(file), format.into()),
        Command::Encode { file, codec } => cli::cmd_encode(&input(file), codec.into()),
        Command::Decode {
            file,
            codec,
            lenient,
            format,
        } => cli::cmd_decode(&input(file), codec.into(), lenient, format.into()),
        Command::Census {
            n,
            universe,
            strategy,
            list,
            degrees,
            workers,
            format,
        } => cli::cmd_census(&CensusOptions {
            n,
            universe: match universe {
                Universe::Distinct => cli::Universe::Distinct,
                Universe::All => cli::Universe::All,
            },
            strategy: match strategy {
                Strategy::Brute => cli::Strategy::Brute,
                Strategy::Bijective => cli::Strategy::Bijective,
            },
            list,
            degrees,
            workers,
            format: format.into(),
        }),
        Command::VgCensus {
            n,
            trials,
            seed,
            max_value,
        } => cli::vg_census(n, trials, seed, max_value).map(|r| r.to_string()),
        Command::Bench {
            min_n,
            max_n,
            reps,
            seed,
            input,
            naive_max,
        } => cli::bench(&BenchOptions {
            min_n,
            max_n,
            repetitions: reps,
            seed,
            input: match input {
                Input::Walk => BenchInput::RandomWalk,
                Input::Adversarial => BenchInput::Adversarial,
            },
            naive_max,
        })
        .map(|r| r.to_string().trim_end().to_string()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}

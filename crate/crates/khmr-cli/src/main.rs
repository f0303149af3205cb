//! `khmr`: Khovanov homology of links in connected sums of `S^2 x S^1`.

mod corpus;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use khmr::decat::{kauffman_bracket, skein_consistency};
use khmr::diagram::{knotify, parse, parse_pairs, to_json, MrDiagram};
use khmr::pipeline::{khovanov_homology, KhOptions};
use khmr::twist::TwistCache;
use khmr::Error;

#[derive(Parser)]
#[command(name = "khmr", version, about = "Khovanov homology for links in #^r(S^2 x S^1)")]
struct Cli {
    /// JSON config with optional `cache`, `k_max` and `max_objects`; flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Twist cache directory (default: $KHMR_CACHE, else no cache).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Abort once a complex grows past this many objects.
    #[arg(long, global = true)]
    max_objects: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Stabilized homology table of a diagram (JSON or PD).
    Kh {
        file: PathBuf,
        /// Lowest homological degree reported.
        #[arg(long, allow_hyphen_values = true)]
        hmin: Option<i32>,
        /// Largest twist count tried before giving up.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Run a self-check suite.
    Verify {
        suite: Suite,
        /// Strand count for the twist suite.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Largest twist count for the twist suite.
        #[arg(long, default_value_t = 4)]
        k: usize,
    },
    /// Join link components through surgery gates; prints the diagram as JSON.
    Knotify {
        file: PathBuf,
        /// Pairs of points, e.g. `1-5,3:1-7`.
        pairs: String,
    },
    /// Normalized Kauffman bracket, or its series for a gated diagram.
    Bracket {
        file: PathBuf,
        /// Window `LO:HI` of q-exponents; required for gated diagrams.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Twist,
    Invariance,
    Skein,
    Knotify,
}

enum Fail {
    Verify,
    Input(String),
    Ceiling(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Ceiling { .. } | Error::TooLarge(_) => Fail::Ceiling(e.to_string()),
            e => Fail::Input(e.to_string()),
        }
    }
}

fn options(cli: &Cli, h_min: i32, k_max: Option<usize>) -> Result<KhOptions, Fail> {
    let mut o = KhOptions::new(h_min);
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))?;
        let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Fail::Input(format!("config: {e}")))?;
        let num = |key: &str| -> Result<Option<usize>, Fail> {
            match v.get(key) {
                None => Ok(None),
                Some(x) => x.as_u64().map(|n| Some(n as usize)).ok_or_else(|| Fail::Input(format!("config: {key} must be a count"))),
            }
        };
        if let Some(n) = num("k_max")? {
            o.k_max = n;
        }
        if let Some(n) = num("max_objects")? {
            o.max_objects = n;
        }
        if let Some(c) = v.get("cache").and_then(|c| c.as_str()) {
            o.cache = TwistCache::new(Some(c.into()));
        }
    }
    if let Some(n) = k_max {
        o.k_max = n;
    }
    if let Some(n) = cli.max_objects {
        o.max_objects = n;
    }
    if let Some(c) = &cli.cache {
        o.cache = TwistCache::new(Some(c.clone()));
    }
    Ok(o)
}

fn read(path: &PathBuf) -> Result<MrDiagram, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))?;
    match parse(&text) {
        // Odd gates are legal input; the pipeline flags them.
        Err(Error::OddIntersection { .. }) => Ok(khmr::diagram::parse_any(&text)?),
        r => Ok(r?),
    }
}

fn window(s: &str) -> Result<(i32, i32), Fail> {
    let bad = || Fail::Input(format!("bad window {s:?}, expected LO:HI"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn run(cli: &Cli) -> Result<(), Fail> {
    match &cli.cmd {
        Cmd::Kh { file, hmin, kmax, format } => {
            let d = read(file)?;
            // Classical tables start at -n_minus, so -crossings shows them whole.
            let h_min = hmin.unwrap_or(if d.gates.is_empty() { -(d.crossings.len() as i32) } else { -4 });
            let r = khovanov_homology(&d, &options(cli, h_min, *kmax)?)?;
            match format {
                Format::Json => println!("{}", r.to_json()),
                Format::Tsv => {
                    if let Some(g) = r.odd_intersection {
                        println!("# gate {g} has an odd number of strands: the invariant is zero");
                    }
                    print!("{}", r.to_tsv());
                }
            }
        }
        Cmd::Verify { suite, n, k } => {
            let mut t = verify::Tally::default();
            let opts = options(cli, -4, None)?;
            match suite {
                Suite::Twist => verify::twist(&mut t, *n, *k),
                Suite::Invariance => verify::invariance(&mut t, &opts),
                Suite::Skein => verify::skein(&mut t),
                Suite::Knotify => verify::knotify(&mut t, &options(cli, -3, None)?),
            }
            if t.failed > 0 {
                return Err(Fail::Verify);
            }
        }
        Cmd::Knotify { file, pairs } => {
            let d = knotify(&read(file)?, &parse_pairs(pairs)?)?;
            println!("{}", to_json(&d));
        }
        Cmd::Bracket { file, window: w, format } => {
            let d = read(file)?;
            let w = w.as_deref().map(window).transpose()?;
            let series = if d.gates.is_empty() {
                let b = kauffman_bracket(&d)?;
                match w {
                    Some((lo, hi)) => b.restrict(lo, hi),
                    None => b,
                }
            } else {
                let (lo, hi) = w.ok_or_else(|| Fail::Input("a gated diagram needs --window".into()))?;
                skein_consistency(&d, lo, hi)?.bracket
            };
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&series.to_json()).expect("json")),
                Format::Tsv => print!("{}", series.to_lines()),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verify) => ExitCode::from(1),
        Err(Fail::Input(m)) => {
            eprintln!("khmr: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Ceiling(m)) => {
            eprintln!("khmr: {m}");
            ExitCode::from(3)
        }
    }
}

use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ratcat::statistics::CellPartition;
use ratcat::three_n::{construct_word, swap_bijection, triple_of_path};
use ratcat::{
    enumerate_paths, rational_catalan, stat_triple, BqtPolynomial, Cell, CoprimePair, DyckPath,
    DyckTriple, Var,
};
use serde_json::json;

mod checks;
mod config;
mod failure;
mod genfun;
mod sweep;

use checks::Status;
use config::{Format, RunConfig};
use failure::Failure;

/// Rational q,t-Catalan combinatorics: Dyck paths, rank words and their statistics.
#[derive(Parser, Debug)]
#[command(name = "ratcat", version)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every (m,n)-Dyck path with its area, dinv and skips
    Enumerate {
        m: u32,
        n: u32,
        /// Stop after this many paths
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Statistics of one path, given as top-row-first row lengths
    Stats {
        m: u32,
        n: u32,
        #[arg(long)]
        path: String,
        /// Also list the area, dinv and skips cells
        #[arg(long)]
        cells: bool,
    },
    /// The generating function W_{m,n}(b,q,t), or C_{m,n}(q,t) with --var b=1
    Genfun {
        m: u32,
        n: u32,
        /// Substitute a variable, as `b=1`
        #[arg(long = "var")]
        var: Vec<String>,
    },
    /// Run invariant checks over every (m,n)-Dyck path
    Verify {
        m: u32,
        n: u32,
        /// Comma-separated check names, or `all`
        #[arg(long, default_value = "all")]
        checks: String,
    },
    /// Build the (3,n)-rank word with area a, dinv d and skips s
    Triple {
        /// `a d s` or `a,d,s`
        #[arg(num_args = 1..=3, required = true)]
        values: Vec<String>,
    },
    /// Apply the area/dinv swap to a (3,n)-Dyck path
    Swap {
        m: u32,
        n: u32,
        #[arg(long)]
        path: String,
    },
}

type Out<'a> = &'a mut dyn Write;

fn no_latex(cfg: &RunConfig, what: &str) -> Result<(), Failure> {
    if cfg.format == Format::Latex {
        return Err(Failure::usage(format!(
            "--format latex is not available for {what}"
        )));
    }
    Ok(())
}

fn json_line(out: Out, value: &serde_json::Value) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn cells_text(cells: &std::collections::BTreeSet<Cell>) -> String {
    cells
        .iter()
        .map(Cell::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn enumerate(cfg: &RunConfig, out: Out, m: u32, n: u32, limit: Option<u64>) -> Result<(), Failure> {
    no_latex(cfg, "enumerate")?;
    let pair = CoprimePair::new(m, n)?;
    let total = rational_catalan(pair);
    let emitted = match (total, limit) {
        (Some(t), Some(l)) => Some(t.min(l as u128)),
        (None, Some(l)) => Some(l as u128),
        (t, None) => t,
    };
    cfg.admit(pair, emitted)?;
    let pool = cfg.pool()?;
    let take = limit.map_or(usize::MAX, |l| usize::try_from(l).unwrap_or(usize::MAX));
    let mut err = None;
    sweep::ordered(
        &pool,
        enumerate_paths(pair).take(take),
        stat_triple,
        |p, st| {
            let written = match cfg.format {
                Format::Json => json_line(out, &json!({ "path": p, "stats": st })),
                _ => writeln!(
                    out,
                    "{p} area={} dinv={} skips={}",
                    st.area, st.dinv, st.skips
                )
                .map_err(Failure::from),
            };
            match written {
                Ok(()) => ControlFlow::Continue(()),
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            }
        },
    );
    if let Some(e) = err {
        return Err(e);
    }
    if let (Some(l), Some(t)) = (limit, total) {
        if (l as u128) < t {
            eprintln!("note: output truncated to {l} of {t} paths");
        }
    }
    Ok(())
}

fn stats(
    cfg: &RunConfig,
    out: Out,
    m: u32,
    n: u32,
    shape: &str,
    cells: bool,
) -> Result<(), Failure> {
    no_latex(cfg, "stats")?;
    let pair = CoprimePair::new(m, n)?;
    let path = DyckPath::parse_shape(pair, shape)?;
    let part = CellPartition::of(&path);
    let st = part.stats();
    match cfg.format {
        Format::Json => {
            let mut v = json!({ "path": path, "stats": st });
            if cells {
                v["cells"] = serde_json::to_value(&part)?;
            }
            json_line(out, &v)?;
        }
        _ => {
            writeln!(out, "area={} dinv={} skips={}", st.area, st.dinv, st.skips)?;
            if cells {
                writeln!(out, "area cells: {}", cells_text(&part.area_cells))?;
                writeln!(out, "dinv cells: {}", cells_text(&part.dinv_cells))?;
                writeln!(out, "skips cells: {}", cells_text(&part.skips_cells))?;
            }
        }
    }
    Ok(())
}

fn parse_substitutions(vars: &[String]) -> Result<Vec<Var>, Failure> {
    vars.iter()
        .map(|arg| {
            let (name, value) = arg
                .split_once('=')
                .ok_or_else(|| Failure::usage(format!("expected VAR=1, got `{arg}`")))?;
            if value.trim() != "1" {
                return Err(Failure::usage(format!(
                    "only substitution by 1 is supported, got `{arg}`"
                )));
            }
            name.trim().parse::<Var>().map_err(Failure::from)
        })
        .collect()
}

fn genfun(cfg: &RunConfig, out: Out, m: u32, n: u32, vars: &[String]) -> Result<(), Failure> {
    let pair = CoprimePair::new(m, n)?;
    let subs = parse_substitutions(vars)?;
    let mut poly: BqtPolynomial = genfun::w_cached(cfg, pair)?;
    for &v in &subs {
        poly = poly.substitute_one(v)?;
    }
    match cfg.format {
        Format::Text => writeln!(out, "{poly}")?,
        Format::Latex => writeln!(out, "{}", poly.to_latex())?,
        Format::Json => {
            let names: Vec<String> = subs.iter().map(|v| format!("{}=1", v.name())).collect();
            json_line(
                out,
                &json!({ "m": m, "n": n, "substitutions": names, "polynomial": poly }),
            )?;
        }
    }
    Ok(())
}

fn verify(cfg: &RunConfig, out: Out, m: u32, n: u32, list: &str) -> Result<bool, Failure> {
    no_latex(cfg, "verify")?;
    let pair = CoprimePair::new(m, n)?;
    let selected = checks::parse_checks(list)?;
    let mut all_ok = true;
    for check in selected {
        let report = checks::run(cfg, pair, check)?;
        all_ok &= report.status != Status::Fail;
        match cfg.format {
            Format::Json => json_line(out, &serde_json::to_value(&report)?)?,
            _ => writeln!(out, "{report}")?,
        }
    }
    Ok(all_ok)
}

fn triple(cfg: &RunConfig, out: Out, values: &[String]) -> Result<(), Failure> {
    no_latex(cfg, "triple")?;
    let text = values.join(",");
    let t: DyckTriple = text.parse()?;
    let word = construct_word(t)?;
    let path = word.to_path();
    match cfg.format {
        Format::Json => json_line(out, &json!({ "triple": t, "word": word, "path": path }))?,
        _ => {
            writeln!(out, "triple: {t}")?;
            writeln!(out, "word: {word}")?;
            writeln!(out, "path: {path}")?;
        }
    }
    Ok(())
}

fn swap(cfg: &RunConfig, out: Out, m: u32, n: u32, shape: &str) -> Result<(), Failure> {
    no_latex(cfg, "swap")?;
    if m != 3 {
        return Err(Failure::usage(format!("swap requires m = 3 (got m={m})")));
    }
    let pair = CoprimePair::new(m, n)?;
    let path = DyckPath::parse_shape(pair, shape)?;
    let image = swap_bijection(&path)?;
    let (from, to) = (triple_of_path(&path)?, triple_of_path(&image)?);
    match cfg.format {
        Format::Json => json_line(
            out,
            &json!({ "path": path, "triple": from, "image": image, "image_triple": to }),
        )?,
        _ => {
            writeln!(out, "path: {path} triple: {from}")?;
            writeln!(out, "image: {image} triple: {to}")?;
        }
    }
    Ok(())
}

fn run(cli: &Cli, out: Out) -> Result<bool, Failure> {
    let cfg = &cli.config;
    match &cli.command {
        Command::Enumerate { m, n, limit } => enumerate(cfg, out, *m, *n, *limit)?,
        Command::Stats { m, n, path, cells } => stats(cfg, out, *m, *n, path, *cells)?,
        Command::Genfun { m, n, var } => genfun(cfg, out, *m, *n, var)?,
        Command::Verify { m, n, checks } => return verify(cfg, out, *m, *n, checks),
        Command::Triple { values } => triple(cfg, out, values)?,
        Command::Swap { m, n, path } => swap(cfg, out, *m, *n, path)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(true) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(Failure::INTERNAL),
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {f}");
            f.exit_code()
        }
    }
}

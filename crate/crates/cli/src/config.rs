use std::path::PathBuf;

use clap::{Args, ValueEnum};
use ratcat::{rational_catalan, CoprimePair};

use crate::failure::Failure;

pub const DEFAULT_WORK_BOUND: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// Options shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Maximum number of paths a command may enumerate
    #[arg(long, global = true, env = "RATCAT_WORK_BOUND", default_value_t = DEFAULT_WORK_BOUND,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub work_bound: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached generating functions
    #[arg(long, global = true, env = "RATCAT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads (defaults to the number of cores)
    #[arg(long, global = true, env = "RATCAT_PARALLELISM",
          value_parser = clap::value_parser!(u32).range(1..))]
    pub parallelism: Option<u32>,
}

impl RunConfig {
    pub fn threads(&self) -> usize {
        match self.parallelism {
            Some(p) => p as usize,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }

    /// Fails with the resource exit code if `count` paths exceed the bound.
    pub fn admit(&self, pair: CoprimePair, count: Option<u128>) -> Result<(), Failure> {
        match count {
            Some(c) if c <= self.work_bound as u128 => Ok(()),
            Some(c) => Err(Failure::resource(format!(
                "{pair} needs {c} paths, work bound is {}",
                self.work_bound
            ))),
            None => Err(Failure::resource(format!(
                "{pair} needs more than 2^128 paths, work bound is {}",
                self.work_bound
            ))),
        }
    }

    pub fn admit_all(&self, pair: CoprimePair) -> Result<(), Failure> {
        self.admit(pair, rational_catalan(pair))
    }

    pub fn pool(&self) -> Result<rayon::ThreadPool, Failure> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads())
            .build()
            .map_err(|e| Failure::internal(format!("cannot start worker pool: {e}")))
    }
}

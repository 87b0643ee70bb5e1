use clap::{Args, Parser, Subcommand};

use crate::class::{ClassKind, ClassSpec, DEFAULT_CAP};
use crate::error::Result;

use super::{OutputFormat, RunConfig};

/// Universal cycles for classes of n-letter words.
#[derive(Debug, Parser)]
#[command(name = "ucycle", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a U-cycle for the class, or the evidence that none exists.
    Generate(ClassArgs),
    /// Check whether CANDIDATE is a U-cycle for the class.
    Verify {
        #[command(flatten)]
        class: ClassArgs,
        candidate: String,
    },
    /// Print the size of the class.
    Count(ClassArgs),
    /// Compare the known existence result with the engine's verdict.
    Exists(ClassArgs),
    /// Print the transition digraph in DOT format.
    Graph(ClassArgs),
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    /// all_words, injective, noninjective, surjective, nonsurjective,
    /// alternating, legal_ranking, illegal_ranking, password, nonpassword
    #[arg(long = "class")]
    pub class: String,
    /// Word length.
    #[arg(short = 'n')]
    pub n: usize,
    /// Alphabet size (implied for rankings, alternating and password classes).
    #[arg(short = 'k')]
    pub k: Option<usize>,
    /// Vowel count for `alternating`.
    #[arg(long)]
    pub kv: Option<usize>,
    /// Consonant count for `alternating`.
    #[arg(long)]
    pub kc: Option<usize>,
    /// Comma-separated category sizes for `password` / `nonpassword`.
    #[arg(long, value_delimiter = ',')]
    pub categories: Option<Vec<usize>>,
    /// Display symbols, one character per letter.
    #[arg(long)]
    pub symbols: Option<String>,
    /// Refuse to enumerate more than this many words.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Rotate generated cycles to their least rotation.
    #[arg(long)]
    pub canonical: bool,
}

impl ClassArgs {
    pub fn into_config(self) -> Result<RunConfig> {
        let kind: ClassKind = self.class.parse()?;
        let spec = ClassSpec {
            kind,
            n: self.n,
            k: self.k,
            vowels: self.kv,
            consonants: self.kc,
            categories: self.categories,
            symbols: self.symbols.map(|s| s.chars().collect()),
            cap: self.cap,
        };
        Ok(RunConfig {
            spec,
            format: if self.json {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            },
            canonical: self.canonical,
        })
    }
}

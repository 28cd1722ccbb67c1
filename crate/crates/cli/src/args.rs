use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jtwist_core::exactalg::Rational;
use jtwist_core::twists::{Family, Form, Generator, UMode};

#[derive(Debug, Parser)]
#[command(
    name = "jtwist",
    version,
    about = "Exact expansions and checks of Jordanian twists over [P,D] = P"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal-ordered expansion of a twist or its inverse.
    Expand(ExpandArgs),
    /// Run verification checks on the twist families.
    Verify(VerifyArgs),
    /// Run the binomial identity suites or print the independence determinant.
    Identities(IdentitiesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// 0, 1, L or R.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Expand the inverse twist.
    #[arg(long)]
    pub inverse: bool,
    /// product, closed or inverted-closed; defaults to the closed form that
    /// exists for the chosen family and direction.
    #[arg(long, value_parser = parse_form)]
    pub form: Option<Form>,
    /// Truncation order in 1/κ.
    #[arg(long, default_value_t = 3)]
    pub order: u32,
    /// `symbolic` or a rational such as 1/2.
    #[arg(long, value_parser = parse_umode, default_value = "symbolic")]
    pub u: UMode,
    /// Write `kappa` and `(x)` instead of κ and ⊗.
    #[arg(long)]
    pub ascii: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum CheckName {
    Cocycle,
    Normalization,
    InversePair,
    Endpoints,
    FormEquality,
    HopfData,
    TwistedCoassociativity,
    DeformedCounit,
    LrRelation,
    LrAtOne,
    VFamily,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(
        long,
        value_enum,
        required_unless_present = "all",
        conflicts_with = "all"
    )]
    pub check: Option<CheckName>,
    /// Run every check for both interpolating families.
    #[arg(long)]
    pub all: bool,
    #[arg(long, value_parser = parse_family, default_value = "L")]
    pub family: Family,
    /// Generator for hopf-data, twisted-coassociativity and deformed-counit;
    /// all three when omitted.
    #[arg(long, value_parser = parse_generator)]
    pub generator: Option<Generator>,
    #[arg(long, default_value_t = 3)]
    pub order: u32,
    #[arg(long, value_parser = parse_umode, default_value = "symbolic")]
    pub u: UMode,
    /// Cochain parameter for v-family; the default set -2, -1, 0, 1/2, 3 when omitted.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub v: Option<Rational>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long)]
    pub bigident: bool,
    #[arg(long)]
    pub lchain: bool,
    #[arg(long)]
    pub rchain: bool,
    /// Exhaustive bound on the summation indices; per-suite defaults
    /// (4, 4, 3) when omitted.
    #[arg(long)]
    pub bound: Option<u32>,
    /// Print the signed independence determinant for this n.
    #[arg(long)]
    pub det: Option<u32>,
    #[command(flatten)]
    pub output: Output,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: jtwist_core::Error| e.to_string())
}

fn parse_form(s: &str) -> Result<Form, String> {
    s.parse().map_err(|e: jtwist_core::Error| e.to_string())
}

fn parse_umode(s: &str) -> Result<UMode, String> {
    s.parse().map_err(|e: jtwist_core::Error| e.to_string())
}

fn parse_generator(s: &str) -> Result<Generator, String> {
    s.parse().map_err(|e: jtwist_core::Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: jtwist_core::Error| e.to_string())
}

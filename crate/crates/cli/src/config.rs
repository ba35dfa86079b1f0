//! Command-line arguments and their validation into a [`RunConfig`].

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bgbc_core::vecfields::{parse_vector_field, AlgebraType};
use bgbc_core::verify::DEFAULT_SEED;
use bgbc_core::{Flavor, Rational};

#[derive(Parser, Debug)]
#[command(name = "bgbc", version, about = "Invariants of the beta-gamma-b-c system under vector fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Weight-space dimensions of the Fock space, checked against the product character.
    Basis(CommonArgs),
    /// Invariant dimensions per grade, compared with the generated subalgebra.
    Invariants(CommonArgs),
    /// Runs the full property suite.
    Verify(CommonArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum TypeArg {
    A,
    C,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlavorArg {
    Plus,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Dimension N of the underlying vector space.
    #[arg(long = "n", default_value_t = 2)]
    pub n: usize,
    /// Vector-field algebra: divergence-free (A) or symplectic (C).
    #[arg(long = "type", value_enum, ignore_case = true, default_value = "a")]
    pub kind: TypeArg,
    /// Largest conformal weight k.
    #[arg(long, default_value_t = 2, allow_negative_numbers = true)]
    pub kmax: i64,
    /// Smallest charge l to report.
    #[arg(long, allow_negative_numbers = true)]
    pub lmin: Option<i64>,
    /// Largest charge l to report.
    #[arg(long, allow_negative_numbers = true)]
    pub lmax: Option<i64>,
    /// Fock space flavor (FULL only for `basis`).
    #[arg(long, value_enum, default_value = "plus")]
    pub flavor: FlavorArg,
    /// Bound on the gamma_(-1) degree for the FULL flavor.
    #[arg(long, default_value_t = 2)]
    pub gamma_bound: u32,
    /// Degree-one vector field used for the reduction, e.g. "x1^2 d2".
    #[arg(long)]
    pub g1: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for the randomized properties.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads (defaults to all cores); never affects the output.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Negates the adjoint side of the adjunction checks (negative control).
    #[arg(long, hide = true)]
    pub inject_sign_flip: bool,
}

/// Validated configuration; serialized verbatim into JSON reports.
///
/// The thread count is deliberately not part of it, so reports do not
/// depend on it.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: &'static str,
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(rename = "type")]
    pub kind: TypeArg,
    pub k_max: i64,
    pub l_min: Option<i64>,
    pub l_max: Option<i64>,
    pub flavor: FlavorArg,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_bound: Option<u32>,
    pub g1: Option<String>,
    pub seed: u64,
    #[serde(skip)]
    pub format: Format,
    #[serde(skip)]
    pub inject_sign_flip: bool,
}

impl RunConfig {
    pub fn algebra(&self) -> AlgebraType {
        match self.kind {
            TypeArg::A => AlgebraType::A,
            TypeArg::C => AlgebraType::C,
        }
    }

    pub fn flavor(&self) -> Flavor {
        match self.flavor {
            FlavorArg::Plus => Flavor::Plus,
            FlavorArg::Full => Flavor::Full,
        }
    }

    /// The charge window, if either end was given.
    pub fn charges(&self) -> Option<(i64, i64)> {
        if self.l_min.is_none() && self.l_max.is_none() {
            return None;
        }
        Some((self.l_min.unwrap_or(i64::MIN), self.l_max.unwrap_or(i64::MAX)))
    }

    pub fn in_window(&self, l: i64) -> bool {
        self.charges().is_none_or(|(lo, hi)| lo <= l && l <= hi)
    }
}

/// Checks the arguments and builds the configuration for `command`.
pub fn validate(command: &'static str, args: &CommonArgs) -> Result<RunConfig, String> {
    if args.n == 0 || args.n > 9 {
        return Err(format!("N must lie in 1..=9, got {}", args.n));
    }
    let cfg = RunConfig {
        command,
        n: args.n,
        kind: args.kind,
        k_max: args.kmax,
        l_min: args.lmin,
        l_max: args.lmax,
        flavor: args.flavor,
        gamma_bound: (args.flavor == FlavorArg::Full).then_some(args.gamma_bound),
        g1: args.g1.clone(),
        seed: args.seed,
        format: args.format,
        inject_sign_flip: args.inject_sign_flip,
    };
    cfg.algebra().check_dim(cfg.n).map_err(|e| e.to_string())?;
    if command != "basis" && cfg.flavor == FlavorArg::Full {
        return Err("invariants and properties are computed on the PLUS space; use --flavor plus".into());
    }
    if let Some(text) = &cfg.g1 {
        parse_vector_field::<Rational>(text, cfg.n).map_err(|e| format!("--g1: {e}"))?;
    }
    if args.threads == Some(0) {
        return Err("--threads must be positive".into());
    }
    Ok(cfg)
}

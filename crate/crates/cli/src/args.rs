use std::fmt::Display;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "knotcover",
    version,
    about = "First homology of cyclic branched covers of genus 1 and 2 two-bridge knots"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute H1(M_n) for one knot over a level or a range of levels
    Compute(ComputeArgs),
    /// Print the alpha and beta rows for n = 1..n-max
    Table(TableArgs),
    /// Cross-check the closed forms against both matrix pipelines
    Verify(VerifyArgs),
    /// List, validate or extend a knot catalog
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned human-readable text
    #[default]
    Table,
    /// One JSON object per line
    Records,
}

/// A knot either by catalog name or inline parameters.
#[derive(Args, Debug, Clone)]
pub struct KnotArgs {
    /// Knot name in the catalog, e.g. 6_2
    #[arg(long, conflicts_with_all = ["genus", "a", "b"])]
    pub knot: Option<String>,
    /// Seifert genus (inferred from --a when omitted)
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub genus: Option<u8>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
    /// Catalog file; `default` selects the bundled one
    #[arg(long, default_value = "default")]
    pub catalog: String,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    /// Level N or inclusive range LO..HI
    #[arg(long, value_parser = parse_range::<u32>)]
    pub n: RangeInclusive<u32>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Also run both matrix pipelines and report agreement
    #[arg(long)]
    pub verify: bool,
    /// Evaluate levels on the calling thread only
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    #[arg(long, default_value_t = 12)]
    pub n_max: u32,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Inclusive range of a, e.g. -3..3 (genus 2 grids)
    #[arg(long = "a-range", visible_alias = "a", allow_hyphen_values = true, value_parser = parse_range::<i64>)]
    pub a_range: Option<RangeInclusive<i64>>,
    /// Inclusive range of b
    #[arg(long = "b-range", visible_alias = "b", allow_hyphen_values = true, value_parser = parse_range::<i64>)]
    pub b_range: Option<RangeInclusive<i64>>,
    /// Grid genus
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub genus: u8,
    /// Verify every knot of a catalog instead of a grid
    #[arg(long, conflicts_with_all = ["a_range", "b_range"])]
    pub catalog: Option<String>,
    #[arg(long, default_value_t = 12)]
    pub n_max: u32,
    #[arg(long)]
    pub sequential: bool,
    /// Adds a spurious Z_2 to every closed-form answer (exercises the failure path)
    #[arg(long, hide = true)]
    pub corrupt_closed_form: bool,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    #[command(subcommand)]
    pub action: CatalogAction,
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    /// Print every record
    List {
        #[arg(long, default_value = "default")]
        catalog: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check names, fields and parameters
    Validate {
        #[arg(long, default_value = "default")]
        catalog: String,
    },
    /// Append a validated record (the file is created if missing)
    Add {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        name: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        genus: u8,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long)]
        slope: Option<String>,
        #[arg(long)]
        source: Option<String>,
    },
}

/// Parses `N`, `LO..HI` or `LO..=HI` (both ends inclusive).
pub fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>, String>
where
    T: FromStr + PartialOrd + Copy,
    T::Err: Display,
{
    let value = |x: &str| x.trim().parse::<T>().map_err(|e| format!("{x:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (value(lo)?, value(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = value(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range::<i64>("-3..3"), Ok(-3..=3));
        assert_eq!(parse_range::<i64>("-3..=-1"), Ok(-3..=-1));
        assert_eq!(parse_range::<u32>("5"), Ok(5..=5));
        assert!(parse_range::<u32>("4..2").is_err());
        assert!(parse_range::<u32>("x..2").is_err());
        assert!(parse_range::<u32>("-1").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn negative_parameters_parse() {
        let cli = Cli::try_parse_from([
            "knotcover",
            "compute",
            "--a",
            "-1",
            "--b",
            "2",
            "--n",
            "1..4",
        ])
        .unwrap();
        let Command::Compute(args) = cli.command else {
            panic!()
        };
        assert_eq!(
            (args.knot.a, args.knot.b, args.n),
            (Some(-1), Some(2), 1..=4)
        );
        let cli =
            Cli::try_parse_from(["knotcover", "verify", "--a", "-3..3", "--b-range", "-2..-1"])
                .unwrap();
        let Command::Verify(args) = cli.command else {
            panic!()
        };
        assert_eq!((args.a_range, args.b_range), (Some(-3..=3), Some(-2..=-1)));
    }
}

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use gensum_core::{rational, Polynomial, Rational};

mod commands;

#[derive(Parser)]
#[command(name = "gensum", version, about = "Exact generalized summation polynomials and their applications")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    Gamma,
    Ln2,
}

#[derive(Subcommand)]
enum Command {
    /// Print F_r, optionally F*_r, with the Bernoulli and Gregory numbers
    Coeffs {
        #[arg(long)]
        max_order: usize,
        /// Add the F*_r column to the text table (CSV always carries it)
        #[arg(long)]
        star: bool,
        /// Also evaluate each polynomial at this rational point
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        eval: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check the summation identities exactly on seeded random polynomials
    Verify {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = parse_rational_list, allow_hyphen_values = true,
              default_value = gensum_core::verify::DEFAULT_X_GRID)]
        x_grid: RationalList,
        /// Also run the Euler-Maclaurin, Gregory and alternating reductions
        #[arg(long)]
        classical: bool,
    },
    /// Fractional sum of a polynomial, sum_{0 <= k < n} f(k), or its downsampled form
    Sum {
        /// Ascending coefficients, e.g. "0,-1/6,0,1/6"
        #[arg(long, value_parser = parse_polynomial, allow_hyphen_values = true)]
        poly: Polynomial,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        n: Rational,
        /// Sample spacing x: evaluates x * sum_{0 <= k < n/x} f(k x)
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        downsample_x: Option<Rational>,
    },
    /// Correct downsampled window sums of a CSV column and write the error table
    Downsample {
        #[arg(long)]
        input: PathBuf,
        /// Zero-based column index
        #[arg(long)]
        col: usize,
        /// The first line is a header
        #[arg(long)]
        header: bool,
        #[arg(long)]
        window: usize,
        #[arg(long, value_parser = parse_usize_list)]
        factors: UsizeList,
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 0)]
        t0: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Accelerate an alternating series or sum Euler's constant from Gregory coefficients
    Accelerate {
        #[arg(long, value_enum, conflicts_with = "terms_file", required_unless_present = "terms_file")]
        target: Option<Target>,
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// One term f(k) per line, k = 0, 1, ...; the series is sum (-1)^k f(k)
        #[arg(long)]
        terms_file: Option<PathBuf>,
    },
}

#[derive(Clone, Debug)]
struct RationalList(Vec<Rational>);

#[derive(Clone, Debug)]
struct UsizeList(Vec<usize>);

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse_rational(s).map_err(|e| e.to_string())
}

fn parse_polynomial(s: &str) -> Result<Polynomial, String> {
    s.parse::<Polynomial>().map_err(|e| e.to_string())
}

fn parse_rational_list(s: &str) -> Result<RationalList, String> {
    s.split(',').map(parse_rational).collect::<Result<_, _>>().map(RationalList)
}

fn parse_usize_list(s: &str) -> Result<UsizeList, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("`{}` is not a nonnegative integer", t.trim())))
        .collect::<Result<_, _>>()
        .map(UsizeList)
}

/// The accelerate flags whose legality depends on `--target`.
fn accelerate_mode(
    target: Option<Target>,
    terms: Option<usize>,
    order: Option<usize>,
    terms_file: Option<PathBuf>,
) -> Result<commands::Accelerate, clap::Error> {
    let usage = |msg: &str| {
        let mut cli = Cli::command();
        cli.build();
        let sub = cli.find_subcommand_mut("accelerate").expect("accelerate subcommand");
        sub.error(clap::error::ErrorKind::ArgumentConflict, msg)
    };
    match (target, terms_file) {
        (Some(Target::Gamma), None) => match (terms, order) {
            (Some(n), None) => Ok(commands::Accelerate::Gamma { terms: n }),
            (None, _) => Err(usage("--target gamma requires --terms")),
            (Some(_), Some(_)) => Err(usage("--order cannot be used with --target gamma")),
        },
        (Some(Target::Ln2), None) => match (terms, order) {
            (None, Some(r)) => Ok(commands::Accelerate::Ln2 { order: r }),
            (_, None) => Err(usage("--target ln2 requires --order")),
            (Some(_), Some(_)) => Err(usage("--terms cannot be used with --target ln2")),
        },
        (None, Some(path)) => match (terms, order) {
            (None, Some(r)) => Ok(commands::Accelerate::File { path, order: r }),
            (_, None) => Err(usage("--terms-file requires --order")),
            (Some(_), Some(_)) => Err(usage("--terms cannot be used with --terms-file")),
        },
        _ => Err(usage("exactly one of --target or --terms-file is required")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Coeffs {
            max_order,
            star,
            eval,
            format,
        } => commands::coeffs(max_order, star, eval.as_ref(), matches!(format, Format::Csv)),
        Command::Verify {
            degree,
            trials,
            seed,
            x_grid,
            classical,
        } => commands::verify(degree, trials, seed, x_grid.0, classical),
        Command::Sum { poly, n, downsample_x } => commands::sum(&poly, &n, downsample_x.as_ref()),
        Command::Downsample {
            input,
            col,
            header,
            window,
            factors,
            max_order,
            t0,
            output,
        } => commands::downsample(&commands::DownsampleArgs {
            input,
            col,
            header,
            window,
            factors: factors.0,
            max_order,
            t0,
            output,
        }),
        Command::Accelerate {
            target,
            terms,
            order,
            terms_file,
        } => match accelerate_mode(target, terms, order, terms_file) {
            Ok(mode) => commands::accelerate(mode),
            Err(e) => e.exit(),
        },
    };
    match result {
        Ok(out) => {
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

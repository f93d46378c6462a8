use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use knotstab::cli::{self, Family, Format, Input, SweepSpec};
use knotstab::{Error, Result};

#[derive(Parser)]
#[command(name = "knotstab", version, about = "Zero locations of Alexander polynomials of 2-bridge knots and links")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify one polynomial, continued fraction or Seifert matrix.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Classify every member of a family.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Write the complex zeros of one input or a whole family.
    ExportZeros {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(long, default_value_t = 6)]
        max_coef: i64,
        #[arg(long)]
        range: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Even continued fraction, e.g. "[2,-2,-8,2]".
    #[arg(long, allow_hyphen_values = true)]
    cf: Option<String>,
    /// Coefficients from the leading one down, e.g. "1,-3,1".
    #[arg(long, allow_hyphen_values = true)]
    poly: Option<String>,
    /// Seifert matrix rows separated by ';', e.g. "1,1;0,-1".
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
}

#[derive(Args)]
struct FamilyArgs {
    /// cf_enum, xn, yn, appc_vertical, appc_horizontal, salem or montesinos.
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 6)]
    max_len: usize,
    #[arg(long, default_value_t = 6)]
    max_coef: i64,
    /// Inclusive parameter range "lo..hi" for one-parameter families.
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    #[arg(long, default_value_t = cli::DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    out: Option<PathBuf>,
    /// json or csv.
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; KNOTSTAB_THREADS takes precedence.
    #[arg(long)]
    threads: Option<usize>,
}

impl Common {
    fn format(&self) -> Result<Format> {
        self.format.parse()
    }

    fn sink(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }

    fn init_threads(&self) -> Result<()> {
        let env = std::env::var("KNOTSTAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
        if let Some(n) = env.or(self.threads) {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| Error::Invariant(e.to_string()))?;
        }
        Ok(())
    }
}

fn sweep_spec(family: &str, max_len: usize, max_coef: i64, range: Option<&str>, tol: f64) -> Result<SweepSpec> {
    let mut spec = SweepSpec::new(family.parse::<Family>()?);
    spec.max_len = max_len;
    spec.max_coef = max_coef;
    spec.range = range.map(cli::parse_range).transpose()?;
    spec.tol = tol;
    Ok(spec)
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Classify { input, common } => {
            common.init_threads()?;
            let format = common.format()?;
            let inp = Input::parse(input.cf.as_deref(), input.poly.as_deref(), input.matrix.as_deref())?;
            let mut out = common.sink()?;
            match format {
                Format::Json => cli::write_json(&cli::run_classify(&inp, common.tol, common.seed)?, &mut out)?,
                Format::Csv => cli::write_csv(&[cli::sweep_row(&inp.member()?, common.tol)?], &mut out)?,
            }
            out.flush()?;
        }
        Cmd::Sweep { family, common } => {
            common.init_threads()?;
            let format = common.format()?;
            let mut spec = sweep_spec(&family.family, family.max_len, family.max_coef, family.range.as_deref(), common.tol)?;
            spec.cap = family.cap;
            let rows = cli::run_sweep(&spec)?;
            let mut out = common.sink()?;
            match format {
                Format::Json => cli::write_json(&rows, &mut out)?,
                Format::Csv => cli::write_csv(&rows, &mut out)?,
            }
            out.flush()?;
        }
        Cmd::ExportZeros { input, family, max_len, max_coef, range, common } => {
            common.init_threads()?;
            let format = common.format()?;
            let members = match family {
                Some(f) => sweep_spec(&f, max_len, max_coef, range.as_deref(), common.tol)?.members()?,
                None => {
                    vec![Input::parse(input.cf.as_deref(), input.poly.as_deref(), input.matrix.as_deref())?.member()?]
                }
            };
            let rows = cli::export_zeros(&members, common.tol, common.seed)?;
            let mut out = common.sink()?;
            match format {
                Format::Json => cli::write_json(&rows, &mut out)?,
                Format::Csv => cli::write_csv(&rows, &mut out)?,
            }
            out.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("knotstab: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}

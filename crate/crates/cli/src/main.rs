mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gradalg::conjectures::{
    check_anick_quadratic, check_froberg, check_genkos, check_lie, sweep, ConjectureVerdict, Sampling,
};
use gradalg::generic::{corpus_names, corpus_source, generic_estimate, max_lie_relations};
use gradalg::series::{anick_polynomial, exp_op, froberg_series, log_op};
use gradalg::{
    algebra_type, degree3_span_test, hilbert_series, koszul_dual, lie_series, parse_presentation_over,
    serialize_presentation, strongly_free_test, AlgebraType, Flavor, PowerSeries, Presentation, PrimeField,
};
use serde::Serialize;

use report::{CorpusList, DualOut, HilbertOut, SeriesOut, StrongOut, Verdicts};

/// Largest generator count swept without `--long`.
const SHORT_SWEEP_MAX: usize = 4;
const LONG_SWEEP_MAX: usize = 6;

#[derive(Parser)]
#[command(name = "gradalg", version, about = "Hilbert series and generic-series checks for graded algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args)]
struct Options {
    /// Field characteristic; overrides the `prime` line of input files.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Random specializations per generic estimate.
    #[arg(long, global = true, default_value_t = 3)]
    samples: usize,
    /// Base seed; sample i uses seed + i.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    json: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Exit with status 2 when a conjecture check does not hold.
    #[arg(long, global = true)]
    strict: bool,
    /// Let sweeps reach 6 generators.
    #[arg(long, global = true)]
    long: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Truncated Hilbert series of a presentation.
    Hilbert {
        /// An `.alg` file or a corpus entry name.
        input: String,
        #[arg(long)]
        degree: usize,
    },
    /// Type after dropping relations that lie in the ideal of earlier ones.
    Type {
        input: String,
        #[arg(long)]
        degree: usize,
    },
    /// Quadratic (Koszul) dual, written in the input format.
    Dual { input: String },
    /// Checks B(z) p_t(z) = 1 through the degree bound.
    Strongfree {
        input: String,
        #[arg(long)]
        degree: usize,
    },
    /// Rank of the degree-3 multiples of the quadratic relations.
    Span3 { input: String },
    /// Coefficientwise minimum of the series of random presentations.
    Generic {
        #[arg(long, value_parser = parse_flavor)]
        flavor: Flavor,
        /// Type as `n;d1,d2,...`.
        #[arg(long = "type", value_parser = parse_type)]
        t: AlgebraType,
        #[arg(long)]
        degree: usize,
    },
    /// Compares sampled generic series with a conjectured formula.
    Conjecture {
        #[command(subcommand)]
        which: ConjectureCmd,
    },
    /// Closed-form series and series operators.
    Series {
        #[command(subcommand)]
        which: SeriesCmd,
    },
    /// Named example presentations.
    Corpus {
        #[command(subcommand)]
        which: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum ConjectureCmd {
    /// Commutative generic series against the Froberg series.
    Froberg {
        #[arg(long = "type", value_parser = parse_type)]
        t: AlgebraType,
        #[arg(long)]
        degree: usize,
    },
    /// Quadratic word algebras against [1/(1 - nz + rz^2)].
    Anick(SweepArgs),
    /// Lie-type algebras against [Log 1/(1 - nz + rz^2)].
    Lie(SweepArgs),
    /// Numerical Koszulness against the predicted regime.
    Koszul(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Generator count; every n up to 4 (6 with --long) when omitted.
    #[arg(long)]
    n: Option<usize>,
    /// Relation count; every admissible r when omitted.
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    degree: usize,
}

#[derive(Subcommand)]
enum SeriesCmd {
    /// [prod (1 - z^d_i) / (1 - z)^n]
    Froberg {
        #[arg(long = "type", value_parser = parse_type)]
        t: AlgebraType,
        #[arg(long)]
        degree: usize,
    },
    /// 1/p_t(z) with p_t(z) = 1 - nz + sum z^d_i, unbracketed.
    AnickInv {
        #[arg(long = "type", value_parser = parse_type)]
        t: AlgebraType,
        #[arg(long)]
        degree: usize,
    },
    /// Enveloping series of a Lie dimension series.
    Exp {
        /// Comma-separated coefficients, constant term first.
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Lie dimension series of an enveloping series.
    Log {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Truncation at the first nonpositive coefficient.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
}

#[derive(Subcommand)]
enum CorpusCmd {
    List,
    /// Hilbert series of a corpus entry.
    Run {
        name: String,
        #[arg(long)]
        degree: usize,
    },
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    Flavor::parse(s).ok_or_else(|| format!("unknown flavor {s:?}"))
}

fn parse_type(s: &str) -> Result<AlgebraType, String> {
    AlgebraType::parse(s).map_err(|e| e.to_string())
}

fn parse_coeffs(s: &str) -> Result<PowerSeries, String> {
    let items: Vec<&str> = s.split(',').map(str::trim).collect();
    PowerSeries::from_strings(&items).map_err(|e| e.to_string())
}

/// A rendered report and whether it records a failed check.
struct Report {
    json: String,
    text: String,
    failed: bool,
}

impl Report {
    fn new<T: Serialize>(value: &T, text: String) -> Result<Self, String> {
        let json = serde_json::to_string(value).map_err(|e| e.to_string())?;
        Ok(Report { json, text, failed: false })
    }
}

struct Ctx<'a> {
    opts: &'a Options,
    field: Option<PrimeField>,
}

impl Ctx<'_> {
    fn sampling_field(&self) -> PrimeField {
        self.field.unwrap_or_default()
    }

    fn sampling(&self, degree: usize) -> Sampling {
        Sampling {
            field: self.sampling_field(),
            ..Sampling::new(degree, self.opts.samples, self.opts.seed)
        }
    }

    /// Reads `input` as a file, falling back to a corpus entry of that name
    /// (with any `.alg` suffix removed).
    fn load(&self, input: &str) -> Result<Presentation, String> {
        let path = Path::new(input);
        let text = if path.exists() {
            std::fs::read_to_string(path).map_err(|e| format!("{input}: {e}"))?
        } else {
            let name = input.strip_suffix(".alg").unwrap_or(input);
            corpus_source(name)
                .map_err(|_| format!("{input}: no such file or corpus entry"))?
                .to_string()
        };
        parse_presentation_over(&text, self.field).map_err(|e| format!("{input}: {e}"))
    }

    fn n_range(&self, n: Option<usize>) -> Result<Vec<usize>, String> {
        let cap = if self.opts.long { LONG_SWEEP_MAX } else { SHORT_SWEEP_MAX };
        match n {
            Some(n) if n > cap => Err(format!("n = {n} exceeds {cap}; pass --long for up to {LONG_SWEEP_MAX}")),
            Some(0) => Err("n must be positive".into()),
            Some(n) => Ok(vec![n]),
            None => Ok((1..=cap).collect()),
        }
    }
}

fn hilbert_report(p: &Presentation, degree: usize) -> Result<Report, String> {
    let h = hilbert_series(p, degree);
    let out = HilbertOut {
        series: h.series,
        slice_dims: h.slice_dims,
        t: p.presentation_type(),
        lie_series: match p.flavor() {
            Flavor::Lie => lie_series(p, degree).ok(),
            _ => None,
        },
    };
    Report::new(&out, out.text())
}

fn sweep_report<C, M>(ctx: &Ctx, args: &SweepArgs, max_r: M, check: C) -> Result<Report, String>
where
    C: Fn(usize, usize, Sampling) -> gradalg::Result<ConjectureVerdict> + Sync,
    M: Fn(usize) -> usize,
{
    let ns = ctx.n_range(args.n)?;
    if args.r.is_some() && args.n.is_none() {
        return Err("--r needs --n".into());
    }
    let s = ctx.sampling(args.degree);
    let verdicts = match args.r {
        Some(r) => vec![check(ns[0], r, s).map_err(|e| e.to_string())?],
        None => sweep(ns[0], ns[ns.len() - 1], |n| 1..=max_r(n), |n, r| check(n, r, s))
            .map_err(|e| e.to_string())?,
    };
    verdicts_report(Verdicts { verdicts })
}

fn verdicts_report(v: Verdicts) -> Result<Report, String> {
    let mut report = Report::new(&v, v.text())?;
    report.failed = !v.all_hold();
    Ok(report)
}

fn series_report(series: PowerSeries) -> Result<Report, String> {
    let text = format!("{}\n", report::coeff_list(&series));
    Report::new(&SeriesOut { series }, text)
}

fn run(cli: &Cli) -> Result<Report, String> {
    let field = cli
        .opts
        .prime
        .map(|p| PrimeField::new(p).map_err(|e| e.to_string()))
        .transpose()?;
    let ctx = Ctx { opts: &cli.opts, field };
    let err = |e: gradalg::Error| e.to_string();
    match &cli.command {
        Command::Hilbert { input, degree } => hilbert_report(&ctx.load(input)?, *degree),
        Command::Type { input, degree } => {
            let r = algebra_type(&ctx.load(input)?, *degree).map_err(err)?;
            Report::new(&r, report::type_text(&r))
        }
        Command::Dual { input } => {
            let d = koszul_dual(&ctx.load(input)?).map_err(err)?;
            let text = serialize_presentation(&d);
            Report::new(
                &DualOut {
                    flavor: d.flavor(),
                    presentation: text.clone(),
                },
                text,
            )
        }
        Command::Strongfree { input, degree } => {
            let p = ctx.load(input)?;
            let v = strongly_free_test(&p, *degree).map_err(err)?;
            let out = StrongOut {
                t: p.presentation_type(),
                strongly_free: v.strongly_free,
                degree: v.degree,
                product: v.product,
            };
            Report::new(&out, out.text())
        }
        Command::Span3 { input } => {
            let s = degree3_span_test(&ctx.load(input)?).map_err(err)?;
            let text = format!(
                "rank {} of {} multiples in a space of dimension {}\nindependent {}\nspanning {}\n",
                s.rank, s.rows, s.cols, s.independent, s.spanning
            );
            Report::new(&s, text)
        }
        Command::Generic { flavor, t, degree } => {
            let r = generic_estimate(*flavor, t, *degree, cli.opts.samples, cli.opts.seed, ctx.sampling_field())
                .map_err(err)?;
            Report::new(&r, report::generic_text(&r))
        }
        Command::Conjecture { which } => match which {
            ConjectureCmd::Froberg { t, degree } => {
                let v = check_froberg(t, ctx.sampling(*degree)).map_err(err)?;
                verdicts_report(Verdicts { verdicts: vec![v] })
            }
            ConjectureCmd::Anick(a) => sweep_report(&ctx, a, |n| n * n, check_anick_quadratic),
            ConjectureCmd::Lie(a) => sweep_report(&ctx, a, max_lie_relations, check_lie),
            ConjectureCmd::Koszul(a) => sweep_report(&ctx, a, |n| n * n, check_genkos),
        },
        Command::Series { which } => match which {
            SeriesCmd::Froberg { t, degree } => series_report(froberg_series(t, *degree)),
            SeriesCmd::AnickInv { t, degree } => series_report(anick_polynomial(t, *degree).inverse().map_err(err)?),
            SeriesCmd::Exp { coeffs } => series_report(exp_op(&parse_coeffs(coeffs)?).map_err(err)?),
            SeriesCmd::Log { coeffs } => series_report(log_op(&parse_coeffs(coeffs)?).map_err(err)?),
            SeriesCmd::Bracket { coeffs } => series_report(parse_coeffs(coeffs)?.bracket()),
        },
        Command::Corpus { which } => match which {
            CorpusCmd::List => {
                let names = corpus_names();
                let text = names.iter().map(|n| format!("{n}\n")).collect();
                Report::new(&CorpusList { corpus: names }, text)
            }
            CorpusCmd::Run { name, degree } => {
                let text = corpus_source(name).map_err(err)?;
                let p = parse_presentation_over(text, ctx.field).map_err(err)?;
                hilbert_report(&p, *degree)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let body = if cli.opts.json {
        format!("{}\n", report.json)
    } else {
        report.text
    };
    match &cli.opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{body}"),
    }
    if cli.opts.strict && report.failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

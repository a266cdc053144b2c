//! `octaq`: classify, verify, sweep and mesh octahedral quartics.
//!
//! Exit codes: 0 ok, 1 usage error, 2 invalid coefficients, 3 the oracle
//! disagrees with the classifier, 4 the oracle is inconclusive.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use octaq::classify::{parse_range, sweep, SweepAxis, SweepFamily, SweepRow, SweepSpec, SWEEP_COLUMNS};
use octaq::oracle::{self, Agreement};
use octaq::rational::{fmt_q, parse_q, q};
use octaq::{classify, octgroup, QuarticCoefficients, TopologyReport};

const EXIT_USAGE: u8 = 1;
const EXIT_COEFFS: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "octaq", version, about = "Topology of octahedrally symmetric quartic surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Obj,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    A0,
    B0,
    C0,
    Eps,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the zero set of A·v + B·u² + C·u + D.
    Classify {
        /// Coefficients "A,B,C,D" (integers, decimals or p/q).
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify, then check the verdict on a sampled grid.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Grid cells per axis (default 64, or $OCTAQ_RESOLUTION).
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a grid of normal-form parameters, one CSV row per node.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, allow_hyphen_values = true)]
        eps1: Option<i8>,
        #[arg(long, allow_hyphen_values = true)]
        eps2: Option<i8>,
        /// Single β (eps family).
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        /// β grid LO:HI:STEP (eps family).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "beta")]
        beta_range: Option<String>,
        /// k grid LO:HI:STEP (eps family).
        #[arg(long, allow_hyphen_values = true)]
        k_range: Option<String>,
        /// d grid LO:HI:STEP (a0, b0: D·lead/C²; c0: D/A).
        #[arg(long, allow_hyphen_values = true)]
        d_range: Option<String>,
        /// Single b = B/A (c0 family).
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// b grid LO:HI:STEP (c0 family).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "b")]
        b_range: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a triangle mesh of the zero set as Wavefront OBJ.
    Mesh {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        resolution: Option<usize>,
        #[arg(long, value_enum, default_value = "obj")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the 48 group elements.
    Group {
        /// Dump all matrices (the only mode).
        #[arg(long)]
        dump: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Coeffs(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn parse_coeffs(s: &str) -> Result<QuarticCoefficients, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Failure::Coeffs(format!("expected four coefficients A,B,C,D, got {s:?}")));
    }
    let mut v = Vec::with_capacity(4);
    for p in parts {
        v.push(parse_q(p).map_err(|e| Failure::Coeffs(e.to_string()))?);
    }
    let [a, b, c, d]: [_; 4] = v.try_into().expect("four parsed values");
    QuarticCoefficients::new(a, b, c, d).map_err(|e| Failure::Coeffs(e.to_string()))
}

fn resolution(flag: Option<usize>) -> Result<usize, Failure> {
    let n = match flag {
        Some(n) => n,
        None => match std::env::var("OCTAQ_RESOLUTION") {
            Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("OCTAQ_RESOLUTION is not an integer: {s:?}")))?,
            Err(_) => oracle::DEFAULT_RESOLUTION,
        },
    };
    if !(16..=oracle::MAX_RESOLUTION).contains(&n) {
        return Err(Failure::Usage(format!("resolution must be in 16..={}, got {n}", oracle::MAX_RESOLUTION)));
    }
    Ok(n)
}

fn output(out: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn require_format(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("format {format:?} is not available for this subcommand")))
    }
}

fn text_report(r: &TopologyReport) -> String {
    let mut s = String::new();
    s += &format!("case:        {}\n", r.case_label);
    s += &format!("components:  {} ({} isolated points)\n", r.components, r.isolated_points);
    s += &format!("unbounded:   {}\n", r.unbounded);
    s += &format!("nesting:     {}\n", r.nesting_depth);
    let sing: Vec<String> = r.singular_orbits.iter().map(|o| format!("{:?}x{}", o.kind, o.size)).collect();
    s += &format!("singular:    {}\n", if sing.is_empty() { "none".into() } else { sing.join(", ") });
    if r.nonisolated_singular {
        s += "             (singular along a curve or surface)\n";
    }
    for rad in &r.radii {
        s += &format!("radius:      {:.12}\n", rad.to_f64());
    }
    s += &format!("quadric:     {:?}\n", r.quadric.kind);
    s += &format!("region:      {} [{}]\n", r.provenance.bullet, r.provenance.status.as_str());
    for d in &r.provenance.diagnostics {
        s += &format!("note:        {d}\n");
    }
    s
}

fn axis(single: &Option<String>, range: &Option<String>, name: &str) -> Result<SweepAxis, Failure> {
    match (single, range) {
        (Some(s), _) => Ok(SweepAxis::single(parse_q(s).map_err(|e| Failure::Usage(format!("--{name}: {e}")))?)),
        (None, Some(r)) => parse_range(r).map_err(|e| Failure::Usage(format!("--{name}-range: {e}"))),
        (None, None) => Err(Failure::Usage(format!("--{name} or --{name}-range is required"))),
    }
}

fn sign_flag(v: Option<i8>, name: &str, allow_zero: bool) -> Result<i8, Failure> {
    match v {
        Some(1) | Some(-1) => Ok(v.unwrap()),
        Some(0) if allow_zero => Ok(0),
        Some(x) => Err(Failure::Usage(format!("--{name} must be ±1, got {x}"))),
        None => Err(Failure::Usage(format!("--{name} is required for this family"))),
    }
}

fn range_flag(r: &Option<String>, name: &str) -> Result<SweepAxis, Failure> {
    match r {
        Some(r) => parse_range(r).map_err(|e| Failure::Usage(format!("--{name}-range: {e}"))),
        None => Err(Failure::Usage(format!("--{name}-range is required for this family"))),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Classify { coeffs, format, out } => {
            require_format(format, &[Format::Json, Format::Text])?;
            let f = parse_coeffs(&coeffs)?;
            let report = classify(&f);
            let mut w = output(&out)?;
            match format {
                Format::Text => write!(w, "{}", text_report(&report))?,
                _ => writeln!(w, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))?,
            }
            w.flush()?;
            Ok(0)
        }
        Command::Verify { coeffs, resolution: res, format, out } => {
            require_format(format, &[Format::Json, Format::Text])?;
            let f = parse_coeffs(&coeffs)?;
            let n = resolution(res)?;
            let report = classify(&f);
            let o = oracle::verify(&f, &report, n);
            let mut w = output(&out)?;
            match format {
                Format::Text => {
                    write!(w, "{}", text_report(&report))?;
                    writeln!(w, "oracle:      {:?} at n={} (L={})", o.agreement, o.resolution, fmt_q(&o.half_width))?;
                    for m in &o.mismatches {
                        writeln!(w, "mismatch:    {m}")?;
                    }
                }
                _ => writeln!(w, "{}", serde_json::to_string_pretty(&o).expect("oracle report serializes"))?,
            }
            w.flush()?;
            Ok(match o.agreement {
                Agreement::Agree => 0,
                Agreement::Disagree => EXIT_DISAGREE,
                Agreement::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Sweep { family, eps1, eps2, beta, beta_range, k_range, d_range, b, b_range, format, out } => {
            require_format(format, &[Format::Csv])?;
            let spec = match family {
                Family::A0 | Family::B0 => {
                    let e2 = sign_flag(eps2, "eps2", true)?;
                    let fam = if family == Family::A0 { SweepFamily::AZero { eps2: e2 } } else { SweepFamily::BZero { eps2: e2 } };
                    SweepSpec { family: fam, outer: SweepAxis::single(q(0)), inner: range_flag(&d_range, "d")? }
                }
                Family::C0 => SweepSpec {
                    family: SweepFamily::CZero,
                    outer: axis(&b, &b_range, "b")?,
                    inner: range_flag(&d_range, "d")?,
                },
                Family::Eps => SweepSpec {
                    family: SweepFamily::Eps { eps1: sign_flag(eps1, "eps1", false)?, eps2: sign_flag(eps2, "eps2", false)? },
                    outer: axis(&beta, &beta_range, "beta")?,
                    inner: range_flag(&k_range, "k")?,
                },
            };
            let rows = sweep(&spec);
            let mut w = csv::Writer::from_writer(output(&out)?);
            w.write_record(SWEEP_COLUMNS).map_err(csv_io)?;
            for r in &rows {
                w.write_record(SweepRow::fields(r)).map_err(csv_io)?;
            }
            w.flush()?;
            Ok(0)
        }
        Command::Mesh { coeffs, resolution: res, format, out } => {
            require_format(format, &[Format::Obj])?;
            let f = parse_coeffs(&coeffs)?;
            let n = resolution(res)?;
            let grid = oracle::SignGrid::sample(&f, &oracle::choose_box(&f), n);
            let mesh = oracle::extract_mesh(&grid).map_err(|e| Failure::Coeffs(e.to_string()))?;
            let mut w = output(&out)?;
            mesh.write_obj(&mut w)?;
            w.flush()?;
            Ok(0)
        }
        Command::Group { dump: _, format, out } => {
            require_format(format, &[Format::Json])?;
            let elems: Vec<serde_json::Value> = octgroup::group()
                .iter()
                .map(|g| serde_json::json!({ "matrix": g.rows(), "det": g.det() }))
                .collect();
            let mut w = output(&out)?;
            writeln!(w, "{}", serde_json::to_string_pretty(&elems).expect("matrices serialize"))?;
            w.flush()?;
            Ok(0)
        }
    }
}

fn csv_io(e: csv::Error) -> Failure {
    Failure::Io(io::Error::other(e))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Coeffs(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_COEFFS)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

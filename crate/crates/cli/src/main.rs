mod svg;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ganita::arith::{Length, QuadraticSurd, Rational};
use ganita::bija::{self, SolveTrace};
use ganita::calendar::{self, CalendarConfig, PartitionFilter};
use ganita::notation::{self, ParseMode};
use ganita::proportion::ProportionProblem;
use ganita::sulva::{self, PartLabel, StepSign};
use ganita::{Error, ErrorClass};

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "ganita", version, about = "Altar geometry, brick and day counts, proportions and early algebra, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a rope-and-peg construction and emit its scene document.
    Construct {
        /// One of: prachi, perpendicular, square, rectangle, diagonal-square.
        #[arg(long)]
        recipe: String,
        /// Write the scene JSON here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also draw the scene as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Solve a two-row yāva/yā/rū equation file.
    Solve {
        #[arg(long)]
        file: PathBuf,
        /// Show each completing-the-square step.
        #[arg(long)]
        trace: bool,
        /// Also accept `+`, `x` and `×` as negative marks.
        #[arg(long)]
        lenient: bool,
        /// Print the roots and trace as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Count days through months and solstices; prints a JSON report.
    Calendar {
        #[arg(long)]
        days: u64,
        /// key = value file with synodic_month_days and tropical_year_days.
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// List the equal splits of a heap of bricks.
    Partition {
        #[arg(long)]
        total: u64,
        /// Keep only bodies of at least thirty bricks.
        #[arg(long)]
        sb_filter: bool,
        /// Split into this many bodies instead of listing all splits.
        #[arg(long)]
        split: Option<u64>,
    },
    /// Solve `a:b::x:?` (or `a:b,c:d::x:?` for a chained rule).
    Proportion { problem: String },
    /// Measure the unit square's diagonal by cord corrections.
    ApproxDiagonal {
        #[arg(long)]
        steps: usize,
        /// Side length to scale the corrections to, e.g. "35 ft".
        #[arg(long)]
        unit: Option<String>,
    },
    /// Cut the square on X + Y into two squares and two rectangles.
    Identity {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

enum CliError {
    Io(PathBuf, std::io::Error),
    Domain(Error),
}

impl<E: Into<Error>> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Domain(e.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => EXIT_PARSE,
            CliError::Domain(e) => match e.class() {
                ErrorClass::Parse => EXIT_PARSE,
                ErrorClass::Domain => EXIT_DOMAIN,
            },
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

/// Exact value first, then six decimals.
fn exact(v: &QuadraticSurd) -> String {
    format!("{v} ≈ {}", v.to_decimal(6))
}

fn exact_rational(r: &Rational) -> String {
    format!("{r} ≈ {}", r.to_decimal_truncated(6))
}

fn number(s: &str) -> Result<Rational, CliError> {
    Ok(s.parse::<Rational>()?)
}

fn run(command: Command) -> Result<String, CliError> {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match command {
        Command::Construct { recipe, out: json_path, svg: svg_path } => {
            let scene = sulva::recipe(&recipe)?;
            let json = scene.to_json();
            if let Some(p) = &svg_path {
                write(p, &svg::render(&scene))?;
            }
            match json_path {
                Some(p) => write(&p, &format!("{json}\n"))?,
                None => line(json),
            }
        }
        Command::Solve { file, trace, lenient, json } => {
            let mode = if lenient { ParseMode::Lenient } else { ParseMode::Strict };
            let e = notation::parse_text(&read(&file)?, mode)?;
            let normalized = bija::normalize(&e)?;
            let (roots, steps) = bija::solve(&e)?;
            if json {
                let doc = serde_json::json!({
                    "equation": e,
                    "normalized": normalized,
                    "roots": roots,
                    "trace": steps,
                });
                line(serde_json::to_string_pretty(&doc).expect("serializable"));
            } else {
                line(format!("equation: {e}"));
                line(format!("normalized: {normalized}"));
                if let (true, Some(t)) = (trace, &steps) {
                    line(format_trace(t));
                }
                for v in &roots.values {
                    line(format!("x = {}", exact(v)));
                }
            }
        }
        Command::Calendar { days, config } => {
            let cfg = match config {
                Some(p) => read(&p)?.parse::<CalendarConfig>()?,
                None => CalendarConfig::default(),
            };
            line(calendar::simulate(cfg, days)?.to_json());
        }
        Command::Partition { total, sb_filter, split } => match split {
            Some(k) => {
                let heap = calendar::BrickCollection::heap(total)?;
                let parts = calendar::split_collection(&heap, k)?;
                line(format!("({}, {})", parts.bodies().len(), parts.bodies()[0]));
            }
            None => {
                let filter = if sb_filter { PartitionFilter::Attested } else { PartitionFilter::All };
                for (k, size) in calendar::equal_partitions_of(total, filter)? {
                    line(format!("({k}, {size})"));
                }
            }
        },
        Command::Proportion { problem } => {
            let p: ProportionProblem = problem.parse()?;
            line(exact_rational(&p.solve()?));
        }
        Command::ApproxDiagonal { steps, unit } => {
            let t = sulva::sulba_diagonal_refinement(steps)?;
            line(t.to_string());
            line(exact_rational(&t.value()));
            line(format!("residual: {}", t.residual()));
            if let Some(u) = unit {
                let side: Length = u.parse::<Length>()?;
                for c in sulva::scale_trace_to_unit(&t, &side) {
                    let sign = match c.sign {
                        StepSign::Add => "+",
                        StepSign::Subtract => "-",
                    };
                    let mut s = format!("{sign} {}: {} ≈ {:.6} {}", c.term, c.length, c.length.magnitude.to_f64(), c.length.unit);
                    if let Some(inches) = &c.inches {
                        s.push_str(&format!(" = {inches} ≈ {:.4} in", inches.magnitude.to_f64()));
                    }
                    if c.exceeds_angula() == Some(true) {
                        s.push_str(" (more than one aṅgula)");
                    }
                    line(s);
                }
            }
        }
        Command::Identity { x, y } => {
            let (x, y) = (number(&x)?, number(&y)?);
            let parts = sulva::decompose_square(&x, &y)?;
            for p in &parts {
                line(format!("{}: {}", p.label.name(), exact_rational(&p.area)));
            }
            let total: Rational = parts.iter().map(|p| p.area.clone()).sum();
            let whole = (&x + &y).square();
            line(format!("sum: {} (square on X + Y: {whole})", exact_rational(&total)));
            let product = bija::product_via_squares(&x, &y);
            let half_rects: Rational = parts
                .iter()
                .filter(|p| p.label == PartLabel::Rectangle)
                .map(|p| p.area.clone())
                .sum::<Rational>()
                / Rational::from(2);
            let ok = total == whole && product == &x * &y && half_rects == product;
            line(format!("product via squares: {} ({})", exact_rational(&product), if ok { "checks" } else { "MISMATCH" }));
        }
    }
    Ok(out)
}

fn format_trace(t: &SolveTrace) -> String {
    t.steps
        .iter()
        .map(|s| match &s.factor {
            Some(k) => format!("  {:<18} {}    [{k}]", s.label.as_str(), s.snapshot),
            None => format!("  {:<18} {}", s.label.as_str(), s.snapshot),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use legendrian::dsl::{self, FrontDocument};
use legendrian::enumerate::{self, EnumerateError, Method, RulingReport, DEFAULT_BUDGET};
use legendrian::generators::{self, TorusVariant};
use legendrian::moves;
use legendrian::render::{self, RenderError, RenderFormat};
use legendrian::report;
use legendrian::ruling::{check_ruling, RulingError};
use legendrian::Front;

const BUDGET_VAR: &str = "RULING_BF_LIMIT";

#[derive(Parser)]
#[command(
    name = "legendrian",
    version,
    about = "Fronts, normal rulings and ruling polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file holds a valid front
    Validate(Input),
    /// Print components, tb and rotation number
    Invariants {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Count or list normal rulings
    Rulings {
        #[command(flatten)]
        input: Input,
        /// List every ruling (brute force)
        #[arg(long)]
        list: bool,
        /// Print the ruling polynomial
        #[arg(long)]
        poly: bool,
        #[arg(long, value_enum, default_value_t = MethodArg::Dp)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Generate a front
    #[command(subcommand)]
    Generate(Generate),
    /// Generate the (4, -(2n+5)) torus knot front
    Family(FamilyArgs),
    /// Draw a front, optionally resolving a ruling
    Render {
        #[command(flatten)]
        input: Input,
        /// Comma-separated switch labels to resolve
        #[arg(long)]
        ruling: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply a seeded random walk of front moves
    Fuzz {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check whether a switch set is a normal ruling
    Check {
        #[command(flatten)]
        input: Input,
        /// Comma-separated switch labels (may be empty)
        #[arg(long, allow_hyphen_values = true)]
        ruling: String,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// Torus link front
    Torus {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Nested)]
        variant: VariantArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Same as the top-level `family` command
    Family(FamilyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(short)]
    n: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Input {
    /// Front file, or `-` for standard input
    #[arg(default_value = "-")]
    file: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Bf,
    Dp,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Nested,
    Argyle,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

const PARSE: u8 = 1;
const CHECK: u8 = 2;
const BUDGET: u8 = 3;
const MISMATCH: u8 = 4;

fn read_document(input: &Input) -> Result<FrontDocument, Failure> {
    let text = if input.file == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(PARSE, format!("<stdin>: {e}")))?;
        s
    } else {
        fs::read_to_string(&input.file)
            .map_err(|e| Failure::new(PARSE, format!("{}: {e}", input.file)))?
    };
    let name = if input.file == "-" {
        "<stdin>"
    } else {
        &input.file
    };
    dsl::parse(&text).map_err(|e| Failure::new(PARSE, format!("{name}: {e}")))
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::new(PARSE, format!("{}: {e}", p.display())))
        }
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::new(PARSE, e.to_string())),
    }
}

fn parse_labels(list: &str) -> Result<Vec<usize>, Failure> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::new(PARSE, format!("invalid crossing label {s:?}")))
        })
        .collect()
}

fn budget() -> Result<u64, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::new(PARSE, format!("{BUDGET_VAR} must be an integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn brute_force(front: &Front) -> Result<RulingReport, Failure> {
    enumerate::enumerate_with_budget(front, budget()?).map_err(|e| match e {
        EnumerateError::BudgetExceeded { .. } => {
            Failure::new(BUDGET, format!("{e} (or raise {BUDGET_VAR})"))
        }
    })
}

fn rulings(
    front: &Front,
    list: bool,
    poly: bool,
    method: MethodArg,
    json: bool,
) -> Result<String, Failure> {
    if list && method == MethodArg::Dp {
        return Err(Failure::new(PARSE, "--list needs --method bf or both"));
    }
    let mut rep = match method {
        MethodArg::Dp => enumerate::count(front),
        MethodArg::Bf => brute_force(front)?,
        MethodArg::Both => {
            let bf = brute_force(front)?;
            let dp = enumerate::count(front);
            if bf.count != dp.count || bf.polynomial != dp.polynomial {
                return Err(Failure::new(
                    MISMATCH,
                    format!(
                        "brute force and dynamic programming disagree: {} ({}) vs {} ({})",
                        bf.count, bf.polynomial, dp.count, dp.polynomial
                    ),
                ));
            }
            RulingReport {
                method: Method::Both,
                ..bf
            }
        }
    };
    if !list {
        rep.rulings = None;
    }
    if json {
        return Ok(report::emit_json(&rep, &front.invariants()) + "\n");
    }
    let mut out = format!("count: {}\n", rep.count);
    if poly {
        out += &format!("polynomial: {}\n", rep.polynomial);
    }
    if let Some(rs) = &rep.rulings {
        for r in rs {
            out += &format!("{r}\n");
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate(input) => {
            let doc = read_document(&input)?;
            let f = &doc.front;
            write_output(
                None,
                &format!(
                    "valid: {} events, {} crossings, {} left cusps, max {} strands\n",
                    f.len(),
                    f.crossing_count(),
                    f.left_cusp_count(),
                    f.max_strands()
                ),
            )
        }
        Command::Invariants { input, json } => {
            let inv = read_document(&input)?.front.invariants();
            let text = if json {
                report::invariants_json(&inv) + "\n"
            } else {
                format!(
                    "crossings: {}\nleft cusps: {}\ncomponents: {}\ntb: {}\nrotation: {}\n",
                    inv.crossings, inv.left_cusps, inv.components, inv.tb, inv.rotation
                )
            };
            write_output(None, &text)
        }
        Command::Rulings {
            input,
            list,
            poly,
            method,
            json,
        } => {
            let front = read_document(&input)?.front;
            write_output(None, &rulings(&front, list, poly, method, json)?)
        }
        Command::Generate(Generate::Torus {
            p,
            q,
            variant,
            output,
        }) => {
            let variant = match variant {
                VariantArg::Nested => TorusVariant::NestedTwist,
                VariantArg::Argyle => TorusVariant::Argyle,
            };
            let front = variant
                .build(p, q)
                .map_err(|e| Failure::new(PARSE, e.to_string()))?;
            let name = format!("torus p={p} q={q} {}", variant.name());
            write_output(output.as_ref(), &dsl::serialize_named(&front, &name))
        }
        Command::Generate(Generate::Family(args)) | Command::Family(args) => {
            let front = generators::paper_family(args.n);
            let name = format!("torus (4, -{}) family n={}", 2 * args.n + 5, args.n);
            write_output(args.output.as_ref(), &dsl::serialize_named(&front, &name))
        }
        Command::Render {
            input,
            ruling,
            format,
            output,
        } => {
            let front = read_document(&input)?.front;
            let labels = ruling.as_deref().map(parse_labels).transpose()?;
            let format = match format {
                FormatArg::Ascii => RenderFormat::Ascii,
                FormatArg::Svg => RenderFormat::Svg,
            };
            let text = render::render(&front, labels.as_deref(), format).map_err(|e| match e {
                RenderError::InvalidRuling(_) => Failure::new(CHECK, e.to_string()),
            })?;
            write_output(output.as_ref(), &text)
        }
        Command::Fuzz {
            input,
            steps,
            seed,
            output,
        } => {
            let front = read_document(&input)?.front;
            let out = moves::fuzz(&front, seed, steps);
            if let Some(k) = out.stuck_at {
                eprintln!("stuck: no applicable move after {k} steps");
            }
            let name = format!("fuzz seed={seed} steps={}", out.applied.len());
            write_output(output.as_ref(), &dsl::serialize_named(&out.front, &name))
        }
        Command::Check { input, ruling } => {
            let front = read_document(&input)?.front;
            let labels = parse_labels(&ruling)?;
            match check_ruling(&front, &labels) {
                Ok(r) => write_output(
                    None,
                    &format!(
                        "normal ruling: {} switches, {} eyes\n",
                        r.switch_count(),
                        r.eyes
                    ),
                ),
                Err(e @ RulingError::Violation(_)) => {
                    Err(Failure::new(CHECK, format!("not a normal ruling: {e}")))
                }
                Err(e) => Err(Failure::new(PARSE, e.to_string())),
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

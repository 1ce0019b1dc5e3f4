//! The `hfseq` command line.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith;
use crate::bench::{self, BenchConfig};
use crate::dyck::{self, DyckCode};
use crate::error::Error;
use crate::system_t;
use crate::tree::{parse_tree, HFSeq};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Inputs beyond these sizes are rejected with a range error.
pub const MAX_DECIMAL_BITS: u64 = 1 << 18;
pub const MAX_DIGIT_BITS: u64 = 1 << 24;
pub const MAX_RENDER_NODES: u64 = 1 << 24;

pub const DEFAULT_KRAFT_MS: [u64; 6] = [10, 100, 1000, 2000, 3000, 4000];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Decimal natural.
    Dec,
    /// Tree literal such as `[[],[]]`.
    Tree,
    /// System T type such as `(e->e->e)`.
    Type,
    /// Balanced-parenthesis code such as `001011`.
    Dyck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ArithOp {
    Add,
    Mul,
    Sub,
    Cmp,
    Pow,
    Succ,
    Pred,
}

impl ArithOp {
    fn arity(self) -> usize {
        match self {
            ArithOp::Succ | ArithOp::Pred => 1,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hfseq",
    version,
    about = "Arithmetic on hereditarily finite sequences"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert between decimal, tree, type and Dyck forms.
    Convert {
        #[arg(long)]
        from: Option<Format>,
        #[arg(long)]
        to: Format,
        /// Items to convert; read from stdin, one per line, when absent.
        inputs: Vec<String>,
    },
    /// Apply an arithmetic operation.
    Arith {
        op: ArithOp,
        #[arg(long)]
        from: Option<Format>,
        /// Output format; defaults to the format of the first operand.
        #[arg(long)]
        to: Option<Format>,
        /// Operands; read from stdin, one per line, when absent.
        operands: Vec<String>,
    },
    /// List the first K naturals in the given format.
    Enum {
        k: u64,
        #[arg(long, default_value = "tree")]
        format: Format,
    },
    /// Kraft sums of the code lengths of 0..m.
    Kraft { ms: Vec<u64> },
    /// Time addition and multiplication on random operands of doubling size.
    Bench {
        #[arg(long, default_value_t = 4096)]
        max_bits: u64,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = bench::DEFAULT_SEED)]
        seed: u64,
        /// Skip multiplication above this many digits.
        #[arg(long)]
        mul_max_bits: Option<u64>,
        /// Also time the succ/pred round trip on the depth-8 tower.
        #[arg(long)]
        tower: bool,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::Range(_) | Error::Domain(_) | Error::Underflow => EXIT_DOMAIN,
            Error::Usage(_) => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 1,
            message: format!("i/o error: {e}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Error::Usage(msg.into()).into()
}

/// Guesses the format of an item: Dyck codes use only `0 1 ( )` and start
/// with an open symbol (decimals never start with `0` unless they are `0`),
/// types mention `e` or `->`, trees start with `[`, anything else is decimal.
pub fn detect_format(s: &str) -> Format {
    let s = s.trim();
    let dyck_chars = !s.is_empty() && s.chars().all(|c| matches!(c, '0' | '1' | '(' | ')'));
    if dyck_chars && (s.starts_with('(') || s.starts_with('0')) && s != "0" {
        Format::Dyck
    } else if s.contains('e') || s.contains("->") {
        Format::Type
    } else if s.starts_with('[') {
        Format::Tree
    } else {
        Format::Dec
    }
}

pub fn parse_item(s: &str, format: Format) -> crate::Result<HFSeq> {
    let s = s.trim();
    match format {
        Format::Dec => arith::from_decimal(s),
        Format::Tree => parse_tree(s),
        Format::Type => system_t::parse_type(s).map(|t| system_t::type_to_hfseq(&t)),
        Format::Dyck => dyck::decode(&s.parse::<DyckCode>()?),
    }
}

fn bits_within(t: &HFSeq, limit: u64, what: &str) -> crate::Result<u64> {
    t.bit_length()
        .filter(|&b| b <= limit)
        .ok_or_else(|| Error::Range(format!("{what} needs more than {limit} binary digits")))
}

pub fn render(t: &HFSeq, format: Format) -> crate::Result<String> {
    if format == Format::Dec {
        bits_within(t, MAX_DECIMAL_BITS, "decimal output")?;
        return Ok(arith::to_decimal(t));
    }
    if !t.node_count().is_some_and(|n| n <= MAX_RENDER_NODES) {
        return Err(Error::Range(format!(
            "output has more than {MAX_RENDER_NODES} nodes"
        )));
    }
    Ok(match format {
        Format::Dec => unreachable!(),
        Format::Tree => t.to_string(),
        Format::Type => system_t::hfseq_to_type(t).to_string(),
        Format::Dyck => dyck::encode(t).to_string(),
    })
}

fn read_items(stdin: &mut dyn BufRead) -> Result<Vec<String>, Failure> {
    let mut items = Vec::new();
    for line in stdin.lines() {
        let line = line?;
        if !line.trim().is_empty() {
            items.push(line.trim().to_string());
        }
    }
    Ok(items)
}

fn execute(args: Args, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), Failure> {
    match args.command {
        Command::Convert { from, to, inputs } => {
            let inputs = if inputs.is_empty() {
                read_items(stdin)?
            } else {
                inputs
            };
            for item in &inputs {
                let fmt = from.unwrap_or_else(|| detect_format(item));
                let t = parse_item(item, fmt)?;
                writeln!(out, "{}", render(&t, to)?)?;
            }
        }
        Command::Arith {
            op,
            from,
            to,
            operands,
        } => {
            let operands = if operands.is_empty() {
                read_items(stdin)?
            } else {
                operands
            };
            if operands.len() != op.arity() {
                return Err(usage(format!(
                    "{op:?} takes {} operand(s), got {}",
                    op.arity(),
                    operands.len()
                )));
            }
            let formats: Vec<Format> = operands
                .iter()
                .map(|s| from.unwrap_or_else(|| detect_format(s)))
                .collect();
            let values = operands
                .iter()
                .zip(&formats)
                .map(|(s, &f)| parse_item(s, f))
                .collect::<crate::Result<Vec<_>>>()?;
            let to = to.unwrap_or(formats[0]);
            let (x, y) = (&values[0], values.get(1));
            if !matches!(op, ArithOp::Succ | ArithOp::Pred) {
                for v in &values {
                    bits_within(v, MAX_DIGIT_BITS, "operand")?;
                }
            }
            let result = match op {
                ArithOp::Add => arith::add(x, y.unwrap()),
                ArithOp::Mul => arith::mul(x, y.unwrap()),
                ArithOp::Sub => arith::sub(x, y.unwrap())?,
                ArithOp::Pow => {
                    let k = arith::to_nat(y.unwrap())?;
                    let bits = bits_within(x, MAX_DIGIT_BITS, "operand")?;
                    if bits.saturating_mul(k) > MAX_DIGIT_BITS {
                        return Err(Error::Range(format!(
                            "power needs more than {MAX_DIGIT_BITS} binary digits"
                        ))
                        .into());
                    }
                    arith::pow(x, k)?
                }
                ArithOp::Succ => arith::succ(x),
                ArithOp::Pred => arith::pred(x)?,
                ArithOp::Cmp => {
                    let label = match arith::cmp(x, y.unwrap()) {
                        std::cmp::Ordering::Less => "LT",
                        std::cmp::Ordering::Equal => "EQ",
                        std::cmp::Ordering::Greater => "GT",
                    };
                    writeln!(out, "{label}")?;
                    return Ok(());
                }
            };
            writeln!(out, "{}", render(&result, to)?)?;
        }
        Command::Enum { k, format } => {
            for (i, t) in arith::enumerate(k).enumerate() {
                writeln!(out, "{i}\t{}", render(&t, format)?)?;
            }
        }
        Command::Kraft { ms } => {
            let ms = if ms.is_empty() {
                DEFAULT_KRAFT_MS.to_vec()
            } else {
                ms
            };
            for m in ms {
                let r = dyck::kraft_check(m)?;
                writeln!(out, "{}\t{:.6}\t{}", r.m, r.sum, r.holds)?;
            }
        }
        Command::Bench {
            max_bits,
            trials,
            seed,
            mul_max_bits,
            tower,
        } => {
            if max_bits < bench::MIN_BITS {
                return Err(usage(format!(
                    "--max-bits must be at least {}",
                    bench::MIN_BITS
                )));
            }
            let cfg = BenchConfig {
                max_bits,
                trials,
                seed,
                mul_max_bits: mul_max_bits.unwrap_or(u64::MAX),
            };
            writeln!(out, "#{}", bench::BenchRow::HEADER)?;
            for row in bench::run(&cfg) {
                writeln!(out, "{}", row.to_tsv())?;
            }
            if tower {
                let (ok, elapsed) = bench::tower_round_trip(8);
                writeln!(
                    out,
                    "tower\t8\t{}\t{}",
                    if ok { "ok" } else { "FAIL" },
                    elapsed.as_nanos()
                )?;
            }
        }
    }
    Ok(())
}

/// Runs the CLI against the given streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(args, stdin, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "hfseq: {}", f.message);
            f.code
        }
    }
}

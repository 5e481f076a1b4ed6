//! The `tricomplex` command line: argument parsing, dispatch, and the
//! mapping from library errors to exit codes.

pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use tricomplex::arith::{cf_of_rational, cf_of_surd};
use tricomplex::complexity::{
    lens_bounds, platonic_bounds, prism_bounds, product_bounds, sol_bounds_cf, sol_bounds_word,
};
use tricomplex::farey::{cutting_sequence, translation_length, tree_path, CutTarget, TranslationMethod};
use tricomplex::psl2z::{classify, cyclic_reduce, matrix_to_word, word_to_matrix};
use tricomplex::triangulate::{build_lens, build_sol, build_torus_product, homology, validate};
use tricomplex::{Error, FareyTriangle, GluingTable, GroupWord, IntMatrix, QuadraticSurd, SeifertData, Slope};

use output::{CfOutput, SolOutput, SurdOutput, TlenOutput, ValidateOutput, WordOutput};

#[derive(Debug, Parser)]
#[command(
    name = "tricomplex",
    version,
    about = "Triangulation complexity bounds and certified triangulations"
)]
struct Cli {
    /// Print a single JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Continued fraction of a rational `p/q`
    Cf {
        #[arg(allow_hyphen_values = true)]
        value: Slope,
    },
    /// Periodic continued fraction of `(p + sqrt(d)) / q`
    Surd {
        #[arg(allow_hyphen_values = true)]
        p: BigInt,
        d: BigInt,
        #[arg(allow_hyphen_values = true)]
        q: BigInt,
    },
    /// Normal-form word of a matrix `[[a,b],[c,d]]`, or the matrix of a word such as `ST'ST`
    Word { input: String },
    /// Translation length on the Farey tree
    Tlen {
        matrix: IntMatrix,
        /// Report only this method: word, axis or cf
        #[arg(long)]
        method: Option<TranslationMethod>,
    },
    /// Bounds for the lens space L(p, q)
    Lens { p: BigInt, q: BigInt },
    /// Bounds for the prism manifold P(p, q)
    Prism {
        #[arg(allow_hyphen_values = true)]
        p: BigInt,
        #[arg(allow_hyphen_values = true)]
        q: BigInt,
    },
    /// Bounds for a Platonic manifold with Seifert data (p0; p1/q1, p2/q2, p3/q3)
    Platonic {
        #[arg(allow_hyphen_values = true)]
        p0: BigInt,
        fibres: Vec<Slope>,
    },
    /// Bounds for the sol torus bundle with monodromy `[[a,b],[c,d]]`
    Sol { matrix: IntMatrix },
    /// Bounds for T² × I with boundary triangulations `{a,b,c}` and `{d,e,f}`
    Product { bottom: FareyTriangle, top: FareyTriangle },
    /// Layered triangulation of L(p, q)
    BuildLens { p: BigInt, q: BigInt },
    /// Triangulation of the torus bundle with monodromy `[[a,b],[c,d]]`
    BuildSol { matrix: IntMatrix },
    /// Triangulation of T² × I along the Farey geodesic between two triangles
    BuildProduct { bottom: FareyTriangle, top: FareyTriangle },
    /// Check a gluing table read from FILE or standard input
    Validate { file: Option<PathBuf> },
    /// Integer homology of a gluing table read from FILE or standard input
    Homology { file: Option<PathBuf> },
}

/// Why a command failed, and the exit code that goes with it.
enum Failure {
    Usage(String),
    Precondition(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Precondition(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs one invocation and returns the process exit code: 0 on success, 1
/// when the input violates a mathematical precondition, 2 on usage or
/// syntax errors.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Precondition(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn render<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Outcome {
    if json {
        Ok(serde_json::to_string_pretty(value).expect("output types serialize"))
    } else {
        Ok(text())
    }
}

fn read_table(file: &Option<PathBuf>, stdin: &mut dyn Read) -> std::result::Result<GluingTable, Failure> {
    let text = match file {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?
        }
        None => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    let table = if text.trim_start().starts_with('{') {
        GluingTable::from_json(&text)?
    } else {
        text.parse::<GluingTable>()?
    };
    Ok(table)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Cf { value } => {
            let r = value
                .to_rational()
                .ok_or_else(|| Failure::Precondition("inf has no continued fraction".into()))?;
            let digits = cf_of_rational(&r);
            let cutting = if r.numer().sign() == num_bigint::Sign::Plus {
                Some(cutting_sequence(&CutTarget::Rational(r.clone()), 1)?)
            } else {
                None
            };
            let o = CfOutput {
                value: value.to_string(),
                noncanonical: digits.to_noncanonical(),
                digit_sum: digits.digit_sum(),
                digits,
                cutting_sequence: cutting,
            };
            render(json, &o, || {
                let mut s = format!("{} = {}\ndigit sum: {}", o.value, o.digits, o.digit_sum);
                if let Some(c) = &o.cutting_sequence {
                    s.push_str(&format!("\ncutting sequence: {c}"));
                }
                s
            })
        }
        Command::Surd { p, d, q } => {
            let x = QuadraticSurd::new(p.clone(), d.clone(), q.clone())?;
            let expansion = cf_of_surd(&x)?;
            let o = SurdOutput {
                value: x.to_string(),
                periodic_sum: expansion.periodic_sum(),
                expansion,
            };
            render(json, &o, || {
                format!(
                    "{} = {}\nminimal period length: {}\nperiodic sum: {}",
                    o.value,
                    o.expansion,
                    o.expansion.minimal_period_len(),
                    o.periodic_sum
                )
            })
        }
        Command::Word { input } => {
            let matrix = if input.trim_start().starts_with('[') {
                input.parse::<IntMatrix>()?
            } else {
                word_to_matrix(&input.parse::<GroupWord>()?)
            };
            let word = matrix_to_word(&matrix)?;
            let reduced = cyclic_reduce(&word);
            let o = WordOutput {
                classification: classify(&matrix)?,
                matrix,
                cyclic_length: reduced.len(),
                cyclically_reduced: reduced,
                word,
            };
            render(json, &o, || {
                format!(
                    "matrix: {}\nword: {}\ncyclically reduced: {} (length {})\nclass: {:?}, trace {}",
                    o.matrix,
                    o.word,
                    o.cyclically_reduced,
                    o.cyclic_length,
                    o.classification.kind,
                    o.classification.trace
                )
            })
        }
        Command::Tlen { matrix, method } => {
            let methods: Vec<TranslationMethod> = match method {
                Some(m) => vec![*m],
                None => TranslationMethod::ALL.to_vec(),
            };
            let mut values = [None, None, None];
            let mut first_error = None;
            for m in methods {
                let slot = TranslationMethod::ALL.iter().position(|k| *k == m).expect("listed");
                match translation_length(matrix, m) {
                    Ok(v) => values[slot] = Some(v),
                    Err(e) => {
                        first_error.get_or_insert(e);
                    }
                }
            }
            let Some(length) = values.iter().flatten().next().cloned() else {
                return Err(first_error.expect("some method ran").into());
            };
            let [word, axis, cf] = values;
            let o = TlenOutput {
                matrix: matrix.clone(),
                translation_length: length,
                word,
                axis,
                cf,
            };
            render(json, &o, || {
                let show = |v: &Option<BigInt>| v.as_ref().map_or("n/a".to_string(), |n| n.to_string());
                let parts: Vec<String> = [("word", &o.word), ("axis", &o.axis), ("cf", &o.cf)]
                    .iter()
                    .filter(|(name, _)| method.is_none() || method.map(|m| m.to_string()).as_deref() == Some(name))
                    .map(|(name, v)| format!("{name}={}", show(v)))
                    .collect();
                format!("translation length: {} ({})", o.translation_length, parts.join(", "))
            })
        }
        Command::Lens { p, q } => {
            let r = lens_bounds(p, q)?;
            render(json, &r, || r.to_string())
        }
        Command::Prism { p, q } => {
            let r = prism_bounds(p, q)?;
            render(json, &r, || r.to_string())
        }
        Command::Platonic { p0, fibres } => {
            let [a, b, c]: [Slope; 3] = fibres
                .clone()
                .try_into()
                .map_err(|_| Failure::Usage(format!("expected three fibres p/q, got {}", fibres.len())))?;
            let pair = |s: Slope| (s.p().clone(), s.q().clone());
            let data = SeifertData::from_big(p0.clone(), [pair(a), pair(b), pair(c)])?;
            let r = platonic_bounds(&data)?;
            render(json, &r, || r.to_string())
        }
        Command::Sol { matrix } => {
            let o = SolOutput {
                word: sol_bounds_word(matrix)?,
                cf: sol_bounds_cf(matrix)?,
            };
            render(json, &o, || {
                format!(
                    "word bound:\n{}\n\ncontinued-fraction bound:\n{}\npower: {}\nfixed-point reading: {}\ntrace reading: {}\ndisagreement: {}",
                    o.word, o.cf.report, o.cf.power, o.cf.fixed_point_reading, o.cf.trace_reading, o.cf.disagreement
                )
            })
        }
        Command::Product { bottom, top } => {
            let r = product_bounds(bottom, top);
            render(json, &r, || r.to_string())
        }
        Command::BuildLens { p, q } => table_output(json, &build_lens(p, q)?),
        Command::BuildSol { matrix } => table_output(json, &build_sol(matrix)?),
        Command::BuildProduct { bottom, top } => {
            table_output(json, &build_torus_product(&tree_path(bottom, top))?.table)
        }
        Command::Validate { file } => {
            let table = read_table(file, stdin)?;
            let o = ValidateOutput {
                report: validate(&table)?,
                homology: homology(&table)?,
            };
            render(json, &o, || format!("{}\n{}", o.report, o.homology))
        }
        Command::Homology { file } => {
            let table = read_table(file, stdin)?;
            let h = homology(&table)?;
            render(json, &h, || h.to_string())
        }
    }
}

fn table_output(json: bool, table: &GluingTable) -> Outcome {
    render(json, table, || table.to_string().trim_end().to_string())
}

//! Command-line front end. Output is canonical JSON (sorted keys, sorted
//! monomials) unless `--format text` is given.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::loop_group::{word_to_loop, LaurentPoly, LoopElement, NumericLoop};
use crate::networks::{enumerate_families, family_weight, path_to_tableau, render_ascii};
use crate::partitions::Partition;
use crate::phi::{euler_coefficients, phi_polynomial};
use crate::ring::Coefficient;
use crate::shapemod::{build_module, conjecture1_prediction, count_flags_fq, delta_partition_type};
use crate::tableaux::{
    enumerate_by_parity, enumerate_chess, enumerate_standard, ground_state, BitString,
};
use crate::toeplitz::{minor, minor_staircase, pieri_determinant};
use crate::verify::{self, Status, SweepSummary};

#[derive(Parser, Debug)]
#[command(
    name = "affine-phi",
    version,
    about = "Chess tableaux, phi-polynomials and block-Toeplitz minors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Standard tableaux of a shape, optionally filtered by parity string.
    Tableaux {
        #[arg(long)]
        shape: Partition,
        #[arg(long, requires = "d")]
        parity: Option<u8>,
        /// Parity string `d`; needs `--parity`.
        #[arg(long, requires = "parity")]
        d: Option<BitString>,
    },
    /// Chess tableaux with labels `1..=k`, grouped by content.
    Chess {
        #[arg(long)]
        shape: Partition,
        #[arg(long, value_parser = parity_bit)]
        parity: u8,
        #[arg(long)]
        labels: usize,
    },
    /// The phi-polynomial of a shape module along an alternating word.
    Phi {
        #[arg(long)]
        shape: Partition,
        #[arg(long, value_parser = parity_bit)]
        parity: u8,
        #[arg(long)]
        word: BitString,
    },
    /// A block-Toeplitz minor.
    Minor {
        #[command(flatten)]
        source: LoopSource,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long, required_unless_present = "staircase")]
        lambda: Option<Partition>,
        /// `m,n` for the staircase minor; replaces `--mu/--lambda`.
        #[arg(long, conflicts_with_all = ["lambda"])]
        staircase: Option<String>,
        #[arg(long, value_parser = parity_bit)]
        parity: u8,
    },
    /// The Pieri determinant in the single-row entries.
    Pieri {
        #[command(flatten)]
        source: LoopSource,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = parity_bit)]
        parity: u8,
    },
    /// Non-crossing path families in the concatenated chip diagram.
    Paths {
        #[arg(long)]
        word: BitString,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_parser = parity_bit)]
        parity: u8,
    },
    /// The skew-shape module: basis, arrows and delta type.
    Module {
        #[arg(long)]
        outer: Partition,
        #[arg(long, default_value = "")]
        inner: Partition,
        #[arg(long, value_parser = parity_bit)]
        parity: u8,
    },
    /// F_q points of a flag variety against the ground-state prediction.
    Points {
        #[arg(long)]
        shape: Partition,
        #[arg(long, value_parser = parity_bit)]
        parity: u8,
        #[arg(long)]
        d: BitString,
        #[arg(long)]
        q: u64,
    },
    /// Cross-route sweeps.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = 5)]
        max_word: usize,
        /// Field orders for the F_q checks.
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3])]
        q: Vec<u64>,
        /// Worker threads (default: THREADS or all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Emit every case, not only failures and mismatches.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Theorem1,
    Theorem2,
    Prop1,
    Pieri,
    Lindstrom,
    Conjecture1,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct LoopSource {
    /// Alternating word; entries become polynomials in a1..ak.
    #[arg(long)]
    word: Option<BitString>,
    /// JSON file `[[g11, g12], [g21, g22]]`, each entry `{"exp": "p/q"}`.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

fn parity_bit(s: &str) -> std::result::Result<u8, String> {
    match s {
        "0" => Ok(0),
        "1" => Ok(1),
        _ => Err(format!("parity must be 0 or 1, got {s:?}")),
    }
}

/// What a command produced, rendered both ways.
pub struct Output {
    /// Canonical JSON, one object per line.
    pub json: String,
    pub text: String,
    /// Theorem sweep failures turn into exit code 1.
    pub failed: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json: format!("{json}\n"),
            text,
            failed: false,
        }
    }

    fn render(&self, format: Format) -> &str {
        match format {
            Format::Json => &self.json,
            Format::Text => &self.text,
        }
    }
}

fn rows_text(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

fn read_matrix(path: &PathBuf) -> Result<NumericLoop> {
    let raw =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&raw).map_err(|e| Error::Parse(e.to_string()))?;
    let entry = |i: usize, j: usize| -> Result<LaurentPoly<BigRational>> {
        let obj = value
            .get(i)
            .and_then(|row| row.get(j))
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse(format!("matrix entry ({}, {}) missing", i + 1, j + 1)))?;
        let terms = obj
            .iter()
            .map(|(e, c)| {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?;
                let text = match c {
                    Value::String(s) => s.clone(),
                    Value::Number(n) => n.to_string(),
                    _ => return Err(Error::Parse(format!("bad coefficient {c}"))),
                };
                let coeff: BigRational = text
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?;
                Ok((exp, coeff))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::from_terms(terms))
    };
    LoopElement::new([[entry(0, 0)?, entry(0, 1)?], [entry(1, 0)?, entry(1, 1)?]])
}

fn value_output<C: Coefficient>(symbolic: bool, value: C) -> Output {
    let key = if symbolic { "polynomial" } else { "value" };
    Output::new(json!({ key: value.to_string() }), format!("{value}\n"))
}

fn parse_staircase(s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [m, n] => Ok((
            m.parse()
                .map_err(|_| Error::Parse(format!("bad staircase {s:?}")))?,
            n.parse()
                .map_err(|_| Error::Parse(format!("bad staircase {s:?}")))?,
        )),
        _ => Err(Error::Parse(format!("staircase needs `m,n`, got {s:?}"))),
    }
}

fn sweep_output(summary: &SweepSummary, all: bool) -> Output {
    let shown: Vec<Value> = summary
        .reports
        .iter()
        .filter(|r| all || matches!(r.status, Status::Fail | Status::Mismatch))
        .map(|r| r.to_json())
        .collect();
    let summary_json = summary.to_json();
    let mut json_lines: Vec<String> = shown.iter().map(Value::to_string).collect();
    json_lines.push(summary_json.to_string());
    let mut text_lines: Vec<String> = summary
        .reports
        .iter()
        .filter(|r| all || matches!(r.status, Status::Fail | Status::Mismatch))
        .map(|r| {
            let case = r
                .case
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            let routes = r
                .routes
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("; ");
            format!("{} {} [{}] {}", r.check, r.status.as_str(), case, routes)
        })
        .collect();
    text_lines.push(format!(
        "cases {} failures {}",
        summary.cases(),
        summary.failures()
    ));
    Output {
        json: json_lines.join("\n") + "\n",
        text: text_lines.join("\n") + "\n",
        failed: summary.failures() > 0,
    }
}

pub fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Tableaux { shape, parity, d } => {
            let list = match (parity, d) {
                (Some(i), Some(d)) => enumerate_by_parity(shape, *i, d)?,
                _ => enumerate_standard(shape),
            };
            let text = list
                .iter()
                .map(|t| rows_text(t.rows()) + "\n")
                .collect::<String>();
            Ok(Output::new(
                json!({ "count": list.len(), "tableaux": list.iter().map(|t| t.to_json()).collect::<Vec<_>>() }),
                text,
            ))
        }
        Command::Chess {
            shape,
            parity,
            labels,
        } => {
            let groups = enumerate_chess(shape, *parity, *labels);
            let count: usize = groups.values().map(Vec::len).sum();
            let by_content: serde_json::Map<String, Value> = groups
                .iter()
                .map(|(j, ts)| {
                    let key = j.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                    (key, Value::Array(ts.iter().map(|t| t.to_json()).collect()))
                })
                .collect();
            let text = groups
                .iter()
                .flat_map(|(j, ts)| {
                    ts.iter()
                        .map(move |t| format!("{j:?}: {}\n", rows_text(t.rows())))
                })
                .collect();
            Ok(Output::new(
                json!({ "count": count, "by_content": by_content }),
                text,
            ))
        }
        Command::Phi {
            shape,
            parity,
            word,
        } => {
            let phi = phi_polynomial(shape, *parity, word)?;
            let euler: serde_json::Map<String, Value> = euler_coefficients(shape, *parity, word)?
                .into_iter()
                .map(|(j, chi)| {
                    let key = j.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
                    (key, Value::String(chi.to_string()))
                })
                .collect();
            Ok(Output::new(
                json!({
                    "polynomial": phi.to_string(),
                    "coefficients": phi.to_json(word.len()),
                    "euler_characteristics": euler,
                }),
                format!("{phi}\n"),
            ))
        }
        Command::Minor {
            source,
            mu,
            lambda,
            staircase,
            parity,
        } => {
            if let Some(s) = staircase {
                let (m, n) = parse_staircase(s)?;
                return match (&source.word, &source.matrix) {
                    (Some(w), _) => Ok(value_output(
                        true,
                        minor_staircase(&word_to_loop(w)?, m, n, *parity)?,
                    )),
                    (_, Some(path)) => Ok(value_output(
                        false,
                        minor_staircase(&read_matrix(path)?, m, n, *parity)?,
                    )),
                    _ => unreachable!("clap requires a loop source"),
                };
            }
            let lambda = lambda
                .as_ref()
                .expect("clap requires --lambda or --staircase");
            match (&source.word, &source.matrix) {
                (Some(w), _) => Ok(value_output(
                    true,
                    minor(&word_to_loop(w)?, mu, lambda, *parity)?,
                )),
                (_, Some(path)) => Ok(value_output(
                    false,
                    minor(&read_matrix(path)?, mu, lambda, *parity)?,
                )),
                _ => unreachable!("clap requires a loop source"),
            }
        }
        Command::Pieri {
            source,
            lambda,
            parity,
        } => match (&source.word, &source.matrix) {
            (Some(w), _) => Ok(value_output(
                true,
                pieri_determinant(&word_to_loop(w)?, lambda, *parity)?,
            )),
            (_, Some(path)) => Ok(value_output(
                false,
                pieri_determinant(&read_matrix(path)?, lambda, *parity)?,
            )),
            _ => unreachable!("clap requires a loop source"),
        },
        Command::Paths {
            word,
            mu,
            lambda,
            parity,
        } => {
            let families = enumerate_families(word, mu, lambda, parity.to_owned())?;
            let total: crate::poly::MultiPoly = families.iter().map(family_weight).sum();
            let mut listed = Vec::new();
            let mut text = String::new();
            for (n, f) in families.iter().enumerate() {
                let mut obj = f.to_json();
                if mu.is_empty() {
                    obj["tableau"] = path_to_tableau(f)?.to_json();
                }
                listed.push(obj);
                text.push_str(&format!("family {} weight {}\n", n + 1, family_weight(f)));
                text.push_str(&render_ascii(f));
                text.push('\n');
            }
            text.push_str(&format!("total {total}\n"));
            Ok(Output::new(
                json!({ "count": families.len(), "families": listed, "polynomial": total.to_string() }),
                text,
            ))
        }
        Command::Module {
            outer,
            inner,
            parity,
        } => {
            let module = build_module(outer, inner, *parity)?;
            let mut obj = module.to_json();
            obj["delta_type"] = json!(delta_partition_type(&module)?.to_string());
            let mut text = format!(
                "dim {} delta type ({})\n",
                module.dim(),
                delta_partition_type(&module)?
            );
            for (src, arrow, dst) in module.arrows() {
                text.push_str(&format!("{arrow} v{src:?} = v{dst:?}\n"));
            }
            Ok(Output::new(obj, text))
        }
        Command::Points {
            shape,
            parity,
            d,
            q,
        } => {
            let module = build_module(shape, &Partition::empty(), *parity)?;
            let count = count_flags_fq(&module, d, *q)?;
            let predicted = conjecture1_prediction(shape, *parity, d, *q)?;
            let grounds: Vec<usize> = enumerate_by_parity(shape, *parity, d)?
                .iter()
                .map(|t| ground_state(t, *parity))
                .collect();
            let status = if num_bigint::BigInt::from(count) == predicted {
                "match"
            } else {
                "mismatch"
            };
            Ok(Output::new(
                json!({
                    "count": count,
                    "prediction": predicted.to_string(),
                    "ground_states": grounds,
                    "status": status,
                }),
                format!("count {count} prediction {predicted} {status}\n"),
            ))
        }
        Command::Verify {
            check,
            max_size,
            max_word,
            q,
            threads,
            all,
        } => {
            let summary = match check {
                Check::Theorem1 => verify::sweep_theorem1(*max_size, *threads)?,
                Check::Theorem2 => verify::sweep_theorem2(*max_size, *max_word, *threads)?,
                Check::Prop1 => verify::sweep_prop1(*max_size, *max_word, *threads)?,
                Check::Pieri => verify::sweep_pieri(*max_size, *max_word, *threads)?,
                Check::Lindstrom => verify::sweep_lindstrom(*max_size, *max_word, *threads)?,
                Check::Conjecture1 => verify::sweep_conjecture1(*max_size, q, *threads)?,
            };
            Ok(sweep_output(&summary, *all))
        }
    }
}

fn error_json(err: &Error) -> Value {
    json!({ "error": { "kind": err.kind(), "message": err.to_string() } })
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(output) => {
            let rendered = output.render(cli.format);
            let written = match &cli.out {
                Some(path) => fs::write(path, rendered).map_err(|e| e.to_string()),
                None => std::io::stdout()
                    .write_all(rendered.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("{}", json!({ "error": { "kind": "io", "message": e } }));
                return 1;
            }
            i32::from(output.failed)
        }
        Err(err) => {
            eprintln!("{}", error_json(&err));
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Output> {
        let cli =
            Cli::try_parse_from(std::iter::once("affine-phi").chain(args.iter().copied())).unwrap();
        execute(&cli.command)
    }

    #[test]
    fn golden_minor_output() {
        let out = exec(&[
            "minor", "--word", "1,0,1,0", "--mu", "", "--lambda", "2,1", "--parity", "1",
        ])
        .unwrap();
        assert_eq!(
            out.json.trim_end(),
            r#"{"polynomial":"a1*a2^2 + 2*a1*a2*a4 + a1*a4^2 + a3*a4^2"}"#
        );
    }

    #[test]
    fn tableaux_output() {
        let out = exec(&["tableaux", "--shape", "2,1"]).unwrap();
        assert_eq!(
            out.json.trim_end(),
            r#"{"count":2,"tableaux":[[[1,2],[3]],[[1,3],[2]]]}"#
        );
    }

    #[test]
    fn staircase_minor_matches_partition_form() {
        let a = exec(&[
            "minor",
            "--word",
            "1,0,1,0",
            "--staircase",
            "0,2",
            "--parity",
            "1",
        ])
        .unwrap();
        let b = exec(&[
            "minor", "--word", "1,0,1,0", "--lambda", "2,1", "--parity", "1",
        ])
        .unwrap();
        assert_eq!(a.json, b.json);
    }

    #[test]
    fn bad_options_are_rejected() {
        let parse = |args: &[&str]| {
            Cli::try_parse_from(std::iter::once("affine-phi").chain(args.iter().copied()))
        };
        assert!(parse(&["minor", "--lambda", "2,1", "--parity", "1"]).is_err());
        assert!(parse(&["phi", "--shape", "2,1", "--parity", "2", "--word", "1,0"]).is_err());
        assert!(parse(&["tableaux", "--shape", "1,2"]).is_err());
        assert!(parse(&["frobnicate"]).is_err());
    }

    #[test]
    fn domain_errors_are_structured() {
        let err = exec(&["phi", "--shape", "2,1", "--parity", "1", "--word", "1,1"])
            .err()
            .unwrap();
        assert_eq!(error_json(&err)["error"]["kind"], "not-alternating");
    }
}

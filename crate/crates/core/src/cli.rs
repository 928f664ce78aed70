//! `tsg` command-line interface.
//!
//! Exit status: 0 on success, 1 when `check` or `auto` answers "not
//! realizable", 2 on usage or domain errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::automorphism::{self, CycleType};
use crate::catalog::{self, JsonRow, NameStyle, TableFormat};
use crate::classify;
use crate::error::{Error, Result};
use crate::group::parse_group;
use crate::selftest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "tsg", version, about = "Topological symmetry groups of embedded complete graphs K_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every group realizable on K_n.
    Classify {
        n: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also list the trivial group (n > 6 only).
        #[arg(long)]
        include_trivial: bool,
        /// Unicode group names.
        #[arg(long)]
        pretty: bool,
    },
    /// Decide whether one group is realizable on K_n.
    Check {
        n: u64,
        /// Group name, e.g. "D7", "Z3xZ3", "(Z3xZ3):Z2", "Z5xD7", "A4".
        group: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        pretty: bool,
    },
    /// Decide whether an automorphism of K_n is induced by an order-m homeomorphism.
    Auto {
        n: u64,
        /// Cycle type such as "[9,3]+f0", or a comma-separated image list.
        automorphism: String,
        m: u64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Emit the four-column table for a range of n.
    Table {
        from: u64,
        to: u64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[arg(long)]
        pretty: bool,
    },
    /// Check the classifier against the catalog and the structural property suites.
    Selftest {
        #[arg(long, default_value_t = 500)]
        max_n: u64,
    },
}

fn style(pretty: bool) -> NameStyle {
    if pretty {
        NameStyle::Pretty
    } else {
        NameStyle::Ascii
    }
}

fn csv_line<I: IntoIterator<Item = String>>(fields: I) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(fields).map_err(|e| Error::Domain(format!("csv: {e}")))?;
    let bytes = w.into_inner().map_err(|e| Error::Domain(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Serialize)]
struct CheckJson<'a> {
    n: u64,
    name: String,
    family: &'static str,
    order: u128,
    realizable: bool,
    clause: String,
    note: &'a str,
    verdict: String,
}

#[derive(Serialize)]
struct AutoJson {
    n: u64,
    cycle_type: String,
    m: u64,
    realizable: bool,
    part: Option<u8>,
}

/// Output text and exit status for a parsed command.
pub fn execute(command: &Command) -> Result<(String, i32)> {
    match command {
        Command::Classify { n, format, include_trivial, pretty } => {
            let results = classify::enumerate_with_clauses(*n, *include_trivial)?;
            let style = style(*pretty);
            let out = match format {
                Format::Json => {
                    let row = JsonRow::from_results(*n, &results, style);
                    serde_json::to_string(&row).expect("rows serialize") + "\n"
                }
                Format::Md => {
                    let mut s = format!("## K_{n}\n\n");
                    for r in &results {
                        s.push_str(&format!("- {}: {}\n", style.render(&r.group), r.clause));
                    }
                    s
                }
                Format::Csv => {
                    let mut s = csv_line(["name", "family", "order", "clause"].map(String::from))?;
                    for r in &results {
                        s.push_str(&csv_line([
                            style.render(&r.group),
                            r.group.family().as_str().to_string(),
                            r.group.order().to_string(),
                            r.clause.to_string(),
                        ])?);
                    }
                    s
                }
            };
            Ok((out, 0))
        }
        Command::Check { n, group, format, pretty } => {
            let g = parse_group(group)?;
            let r = classify::check(*n, &g)?;
            let name = style(*pretty).render(&r.group);
            let out = match format {
                Format::Json => {
                    let body = CheckJson {
                        n: r.n,
                        name,
                        family: r.group.family().as_str(),
                        order: r.group.order(),
                        realizable: r.realizable,
                        clause: r.clause.to_string(),
                        note: &r.note,
                        verdict: r.verdict(),
                    };
                    serde_json::to_string(&body).expect("result serializes") + "\n"
                }
                Format::Md => r.verdict() + "\n",
                Format::Csv => {
                    csv_line(["n", "name", "realizable", "clause", "note"].map(String::from))?
                        + &csv_line([
                            r.n.to_string(),
                            name,
                            r.realizable.to_string(),
                            r.clause.to_string(),
                            r.note.clone(),
                        ])?
                }
            };
            Ok((out, if r.realizable { 0 } else { 1 }))
        }
        Command::Auto { n, automorphism: spec, m, format } => {
            let ct: CycleType = if spec.trim_start().starts_with('[') {
                spec.parse()?
            } else {
                automorphism::cycle_type_of(&automorphism::parse_permutation(spec)?)?
            };
            if ct.n() != *n {
                return Err(Error::Domain(format!(
                    "{ct} acts on {} vertices, not n = {n}",
                    ct.n()
                )));
            }
            let v = automorphism::is_realizable(&ct, *m)?;
            let out = match format {
                Format::Json => {
                    let body = AutoJson {
                        n: *n,
                        cycle_type: ct.to_string(),
                        m: *m,
                        realizable: v.realizable,
                        part: v.part,
                    };
                    serde_json::to_string(&body).expect("verdict serializes") + "\n"
                }
                Format::Md => format!("{v}\n"),
                Format::Csv => {
                    csv_line(["n", "cycle_type", "m", "realizable", "part"].map(String::from))?
                        + &csv_line([
                            n.to_string(),
                            ct.to_string(),
                            m.to_string(),
                            v.realizable.to_string(),
                            v.part.map(|p| p.to_string()).unwrap_or_default(),
                        ])?
                }
            };
            Ok((out, if v.realizable { 0 } else { 1 }))
        }
        Command::Table { from, to, format, pretty } => {
            let format = match format {
                Format::Md => TableFormat::Markdown,
                Format::Csv => TableFormat::Csv,
                Format::Json => TableFormat::Json,
            };
            Ok((catalog::emit_table(*from, *to, format, style(*pretty))?, 0))
        }
        Command::Selftest { max_n } => {
            let mut out = String::new();
            let mut ok = true;
            for s in selftest::run_all(*max_n) {
                match &s.failure {
                    None => out.push_str(&format!("PASS {}\n", s.name)),
                    Some(why) => {
                        ok = false;
                        out.push_str(&format!("FAIL {}: {why}\n", s.name));
                    }
                }
            }
            Ok((out, if ok { 0 } else { 1 }))
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// status. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            let _ = writeln!(err, "hint: run `tsg help` for usage");
            2
        }
    }
}

//! Command-line front end for `fwgray`.
//!
//! Exit codes: 0 for success, "exists" or a valid list; 1 for "does not
//! exist" or an invalid input list; 2 for usage and parameter errors.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fwgray::{
    build_transition_digraph, compress_cycle, count_fixed_weight, enumerate,
    exists_fixed_weight_ocycle, fixed_weight_ocycle, fwm_list, fwm_stream, verify_gray,
    verify_ocycle_self, weight_range_ocycle, Error, GenParams, OcycleSolution, Word,
};

#[derive(Debug, Parser)]
#[command(
    name = "fwgray",
    version,
    about = "Fixed-weight Gray codes and overlap cycles"
)]
#[command(args_override_self = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List B_k(m,n) in Gray-code order, one word per line
    Gray {
        m: u32,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        /// Generate lazily with O(n) memory instead of building the list
        #[arg(long)]
        stream: bool,
    },
    /// Print |B_k(m,n)|
    Count {
        m: u32,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// Decide whether B_k(m,n) has an s-overlap cycle
    Exists {
        m: u32,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        k: i64,
        s: usize,
    },
    /// Construct an s-overlap cycle
    Ocycle {
        #[command(subcommand)]
        set: SetSpec,
        /// Print the compressed cyclic string instead of the word list
        #[arg(long, global = true)]
        compressed: bool,
    },
    /// Check a word list read from standard input
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Emit the transition digraph in Graphviz DOT format
    Digraph {
        #[command(subcommand)]
        set: SetSpec,
        /// Write the DOT text to this file instead of standard output
        #[arg(long, global = true)]
        dot: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum SetSpec {
    /// Words of fixed weight k
    Fixed(FixedArgs),
    /// Words with weight in p..=q
    Range(RangeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct FixedArgs {
    pub m: u32,
    pub n: usize,
    #[arg(allow_negative_numbers = true)]
    pub k: i64,
    pub s: usize,
}

#[derive(Debug, Clone, Args)]
pub struct RangeArgs {
    pub m: u32,
    pub n: usize,
    pub p: u64,
    pub q: u64,
    pub s: usize,
}

#[derive(Debug, Subcommand)]
pub enum VerifyTarget {
    /// Gray-code list for B_k(m,n)
    Gray {
        m: u32,
        n: usize,
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// s-overlap cycle of length-n words
    Ocycle { n: usize, s: usize },
}

enum Failure {
    /// Exit 1 with this diagnostic.
    Negative(String),
    /// Exit 2 with this diagnostic.
    Usage(String),
    /// Downstream reader went away; stop quietly.
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotEulerian(_) | Error::SingletonMismatch(_) | Error::EmptySet => {
                Failure::Negative(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Closed;
        }
        Failure::Usage(format!("i/o error: {e}"))
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let outcome = dispatch(cli.command, stdin, stdout);
    let _ = stdout.flush();
    match outcome {
        Ok(code) => code,
        Err(Failure::Closed) => 0,
        Err(Failure::Negative(msg)) => {
            let _ = writeln!(stderr, "fwgray: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "fwgray: {msg}");
            2
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Gray { m, n, k, stream } => {
            GenParams::fixed(m, n, k)?;
            if stream {
                for w in fwm_stream(m, n, k) {
                    writeln!(out, "{}", w.to_text(m))?;
                }
            } else {
                let list = fwm_list(m, n, k).map_err(|e| match e {
                    Error::CapExceeded { .. } => Failure::Usage(format!("{e}; use --stream")),
                    e => e.into(),
                })?;
                for w in &list.words {
                    writeln!(out, "{}", w.to_text(m))?;
                }
            }
            Ok(0)
        }
        Command::Count { m, n, k } => {
            GenParams::fixed(m, n, k)?;
            writeln!(out, "{}", count_fixed_weight(m, n, k))?;
            Ok(0)
        }
        Command::Exists { m, n, k, s } => {
            let verdict = exists_fixed_weight_ocycle(m, n, k, s)?;
            writeln!(out, "{verdict}")?;
            Ok(if verdict.exists { 0 } else { 1 })
        }
        Command::Ocycle { set, compressed } => {
            let (m, sol) = match set {
                SetSpec::Fixed(a) => (a.m, fixed_weight_ocycle(a.m, a.n, a.k, a.s)?),
                SetSpec::Range(a) => (a.m, weight_range_ocycle(a.m, a.n, a.p, a.q, a.s)?),
            };
            write_cycle(out, m, &sol, compressed)?;
            Ok(0)
        }
        Command::Verify { target } => {
            let words = match read_words(stdin)? {
                Ok(words) => words,
                Err(msg) => {
                    writeln!(out, "invalid: {msg}")?;
                    return Ok(1);
                }
            };
            let (ok, report) = match target {
                VerifyTarget::Gray { m, n, k } => {
                    GenParams::fixed(m, n, k)?;
                    let r = verify_gray(&words, m, n, k);
                    (r.ok, r.to_string())
                }
                VerifyTarget::Ocycle { n, s } => {
                    if s == 0 || s >= n {
                        return Err(Error::OverlapOutOfRange { s, n }.into());
                    }
                    match words.iter().position(|w| w.len() != n) {
                        Some(i) => (
                            false,
                            format!("word {i} has length {}, expected {n}", words[i].len()),
                        ),
                        None => {
                            let r = verify_ocycle_self(&words, s);
                            (r.ok, r.to_string())
                        }
                    }
                }
            };
            if ok {
                writeln!(out, "ok")?;
                Ok(0)
            } else {
                writeln!(out, "invalid: {report}")?;
                Ok(1)
            }
        }
        Command::Digraph { set, dot } => {
            let (params, s) = match set {
                SetSpec::Fixed(a) => (GenParams::fixed(a.m, a.n, a.k)?, a.s),
                SetSpec::Range(a) => (GenParams::range(a.m, a.n, a.p, a.q)?, a.s),
            };
            if s == 0 || s >= params.n {
                return Err(Error::OverlapOutOfRange { s, n: params.n }.into());
            }
            let graph = build_transition_digraph(&enumerate(&params)?, s)?;
            let text = graph.to_dot(params.m);
            match dot {
                Some(path) => {
                    fs::write(&path, text)?;
                    writeln!(
                        out,
                        "vertices={} edges={} balanced={} connected={}",
                        graph.vertex_count(),
                        graph.edge_count(),
                        graph.is_balanced(),
                        graph.is_weakly_connected()
                    )?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
    }
}

fn write_cycle(
    out: &mut dyn Write,
    m: u32,
    sol: &OcycleSolution,
    compressed: bool,
) -> Result<(), Failure> {
    if compressed {
        writeln!(out, "{}", compress_cycle(sol)?.to_text(m))?;
    } else {
        for w in &sol.cycle {
            writeln!(out, "{}", w.to_text(m))?;
        }
    }
    Ok(())
}

/// One word per line; blank lines and `#` comments are skipped.
fn read_words(input: &mut dyn BufRead) -> Result<Result<Vec<Word>, String>, Failure> {
    let mut words = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        match Word::parse(body) {
            Ok(w) => words.push(w),
            Err(e) => return Ok(Err(format!("line {}: {e}", lineno + 1))),
        }
    }
    Ok(Ok(words))
}

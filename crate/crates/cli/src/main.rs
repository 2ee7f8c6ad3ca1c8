use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use mininterval::ir::{self, PositionalIndex};
use mininterval::verify::{check_exhaustive, CheckOp, Checker, OpReport};
use mininterval::{cardinality, enumerate_all, level_profile, width, Antichain};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimal-interval semantics: indexing, querying and lattice tools.
#[derive(Debug, Parser)]
#[command(name = "mininterval", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Index text files, one document per file named after the file.
    Index {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Output index file (JSON lines).
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run a structured query against an index.
    Query {
        index: PathBuf,
        #[arg(long)]
        q: String,
        /// Number of snippets to print per result.
        #[arg(long, value_name = "K")]
        snippets: Option<usize>,
        /// Print the score with four decimals.
        #[arg(long)]
        score: bool,
        /// Restrict evaluation to one document.
        #[arg(long, value_name = "ID")]
        doc: Option<String>,
    },
    /// Enumerate the lattice of antichains over {0..n-1}.
    #[command(group(ArgGroup::new("what").args(["count", "levels", "width", "list"])))]
    Enum {
        #[arg(long)]
        n: usize,
        /// Print the number of elements (the default).
        #[arg(long)]
        count: bool,
        /// Print the number of elements of each rank, as rank:count.
        #[arg(long)]
        levels: bool,
        /// Print the size of a largest antichain of the lattice.
        #[arg(long)]
        width: bool,
        /// Print every element in generation order.
        #[arg(long)]
        list: bool,
    },
    /// Compare the closed-form operators with the brute-force oracle.
    Check {
        #[arg(long)]
        n: usize,
        /// Comma-separated subset of leq,join,meet,minus,implies,crit,rank, or "all".
        #[arg(long, default_value = "all")]
        ops: String,
        /// Check this many random inputs instead of all of them.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(1)
        }
        Err(Failure::Runtime(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> CmdResult {
    match command {
        Command::Index { paths, output } => index(&paths, &output),
        Command::Query { index, q, snippets, score, doc } => query(&index, &q, snippets, score, doc.as_deref(), out),
        Command::Enum { n, levels, width, list, .. } => enumerate(n, levels, width, list, out),
        Command::Check { n, ops, samples, seed } => check(n, &ops, samples, seed, out),
    }
}

fn index(paths: &[PathBuf], output: &PathBuf) -> CmdResult {
    let mut docs = Vec::with_capacity(paths.len());
    for path in paths {
        let id = path
            .file_name()
            .ok_or_else(|| Failure::Usage(format!("{} is not a file", path.display())))?
            .to_string_lossy()
            .into_owned();
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
        docs.push((id, text));
    }
    let idx = ir::build_index(docs)?;
    let file = File::create(output).map_err(|e| Failure::Runtime(format!("{}: {e}", output.display())))?;
    let mut w = BufWriter::new(file);
    idx.write_jsonl(&mut w)?;
    w.flush()?;
    Ok(())
}

fn query(
    path: &PathBuf,
    q: &str,
    snippets: Option<usize>,
    show_score: bool,
    doc: Option<&str>,
    out: &mut impl Write,
) -> CmdResult {
    let file = File::open(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    let idx = PositionalIndex::read_jsonl(BufReader::new(file))?;
    let k = snippets.unwrap_or(0);
    let results = match doc {
        Some(id) => {
            let a = ir::evaluate(&ir::parse_query(q)?, &idx, id)?;
            vec![ir::SearchResult { doc: id.to_string(), score: ir::score(&a)?, snippets: ir::snippets(&a, k) }]
        }
        None => ir::search(&idx, q, k)?,
    };
    for r in results {
        let mut fields = vec![r.doc];
        if show_score {
            fields.push(ir::format_score(&r.score, 4));
        }
        if snippets.is_some() {
            fields.push(r.snippets.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        }
        writeln!(out, "{}", fields.join("\t"))?;
    }
    Ok(())
}

fn enumerate(n: usize, levels: bool, show_width: bool, list: bool, out: &mut impl Write) -> CmdResult {
    if levels {
        let profile = level_profile(n)?;
        for (rank, count) in profile.counts_by_rank.iter().enumerate() {
            writeln!(out, "{rank}:{count}")?;
        }
    } else if show_width {
        writeln!(out, "{}", width(n)?)?;
    } else if list {
        for a in enumerate_all(n) {
            writeln!(out, "{a}")?;
        }
    } else {
        writeln!(out, "{}", cardinality(n as u64)?)?;
    }
    Ok(())
}

/// Largest `n` for which `check` will enumerate the lattice.
const CHECK_MAX_N: usize = 12;

fn parse_ops(spec: &str) -> Result<Vec<CheckOp>, Failure> {
    if spec == "all" {
        return Ok(CheckOp::ALL.to_vec());
    }
    let mut ops = Vec::new();
    for name in spec.split(',').map(str::trim) {
        let op: CheckOp = name.parse().map_err(|_| Failure::Usage(format!("unknown operation {name:?}")))?;
        if !ops.contains(&op) {
            ops.push(op);
        }
    }
    Ok(ops)
}

fn check(n: usize, ops: &str, samples: Option<u64>, seed: u64, out: &mut impl Write) -> CmdResult {
    let ops = parse_ops(ops)?;
    if n == 0 {
        return Err(Failure::Usage("--n must be positive".into()));
    }
    if n > CHECK_MAX_N {
        return Err(Failure::Usage(format!("--n must be at most {CHECK_MAX_N}")));
    }
    let checker = Checker::new(n, &ops)?;
    let elements: Vec<Antichain> = enumerate_all(n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all_passed = true;
    for op in ops {
        let report = match samples {
            None => check_exhaustive(&checker, op, &elements)?,
            Some(count) => {
                let mut report = OpReport::new(op);
                for _ in 0..count {
                    let a = &elements[rng.gen_range(0..elements.len())];
                    let b = &elements[rng.gen_range(0..elements.len())];
                    report.record(checker.check(op, a, b)?);
                }
                report
            }
        };
        write!(out, "{}: {} checked, {} mismatches", report.op, report.checked, report.mismatches)?;
        match &report.first_mismatch {
            Some(msg) => writeln!(out, " (first: {msg})")?,
            None => writeln!(out)?,
        }
        all_passed &= report.passed();
    }
    if all_passed {
        writeln!(out, "OK")?;
        Ok(())
    } else {
        writeln!(out, "FAILED")?;
        Err(Failure::Runtime("closed form and oracle disagree".into()))
    }
}

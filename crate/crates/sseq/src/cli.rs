//! Command-line front end: parse → analyze → transform → solve/emit.
//!
//! Exit codes: 0 success, 1 bad input (usage, syntax, unknown atoms,
//! weak constraints in the input), 2 resource guard exceeded, 20 the
//! program has no classical model (and therefore no relaxed model).

use crate::atoms::{AtomId, Signature};
use crate::depgraph::{
    condensation_dot, dependency_graph, scc_topological, scc_topological_seeded,
};
use crate::paracoherent::{
    gap, k_closure, seq_models, split_seq_fast, split_seq_oracle_with,
};
use crate::parse::parse_program;
use crate::program::{desugar_constraints, Interpretation, Program};
use crate::serialize::{serialize, Dialect};
use crate::solver::{RefSolver, SolveError};
use crate::transform::{build_split, build_split_optimized};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

const EXIT_OK: i32 = 0;
const EXIT_INPUT: i32 = 1;
const EXIT_GUARD: i32 = 2;
const EXIT_NO_MODEL: i32 = 20;

#[derive(Parser)]
#[command(
    name = "sseq",
    version,
    about = "relaxed (semi-equilibrium) models of ground disjunctive logic programs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the weighted rewriting whose optimal answer sets encode the
    /// preferred relaxed models; solve it with any optimizing ASP solver.
    Rewrite {
        /// program file ('-' or omitted: standard input)
        input: Option<PathBuf>,
        /// transform every rule, even the coherent prefix
        #[arg(long)]
        no_prefix_opt: bool,
        /// output syntax
        #[arg(long, value_enum, default_value_t = DialectOpt::Native)]
        dialect: DialectOpt,
    },
    /// Compute one preferred relaxed model with the built-in engine.
    Solve {
        /// program file ('-' or omitted: standard input)
        input: Option<PathBuf>,
        /// transform every rule, even the coherent prefix
        #[arg(long)]
        no_prefix_opt: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// input-size bound for the exhaustive engine
        #[arg(long, default_value_t = 24)]
        max_atoms: usize,
    },
    /// Enumerate every layered relaxed model by the layer-by-layer
    /// reference evaluation (exponential; for study and testing).
    Oracle {
        /// program file ('-' or omitted: standard input)
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// input-size bound for the exhaustive engine
        #[arg(long, default_value_t = 24)]
        max_atoms: usize,
        /// permute tie-breaking among incomparable components
        #[arg(long)]
        order_seed: Option<u64>,
    },
    /// Enumerate every relaxed model, layered or not.
    Seq {
        /// program file ('-' or omitted: standard input)
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// input-size bound for the exhaustive engine
        #[arg(long, default_value_t = 24)]
        max_atoms: usize,
    },
    /// Classify an interpretation: answer set, split seq model, seq
    /// model, or none. Atoms are space/comma separated; beliefs may be
    /// written K(a) or k_a.
    Check {
        /// the interpretation, e.g. "b k_b k_c" or "b K(b) K(c)"
        model: String,
        /// program file ('-' or omitted: standard input)
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// input-size bound for the exhaustive engine
        #[arg(long, default_value_t = 24)]
        max_atoms: usize,
    },
    /// Dump the dependency condensation as DOT.
    Graph {
        /// program file ('-' or omitted: standard input)
        input: Option<PathBuf>,
        /// permute tie-breaking among incomparable components
        #[arg(long)]
        order_seed: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DialectOpt {
    Native,
    Aspcore2,
}

impl From<DialectOpt> for Dialect {
    fn from(d: DialectOpt) -> Dialect {
        match d {
            DialectOpt::Native => Dialect::Native,
            DialectOpt::Aspcore2 => Dialect::AspCore2,
        }
    }
}

/// Run the command line given by `argv` (first element: program name),
/// writing to the given streams. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_INPUT
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Failure {
        Failure { code: EXIT_GUARD, message: e.to_string() }
    }
}

fn load(input: &Option<PathBuf>) -> Result<Program, Failure> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::input(format!("standard input: {e}")))?;
            s
        }
    };
    parse_program(&text).map_err(|e| Failure::input(e.to_string()))
}

fn dispatch(cli: Cli, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, Failure> {
    match cli.cmd {
        Cmd::Rewrite { input, no_prefix_opt, dialect } => {
            let p = load(&input)?;
            let d = desugar_constraints(&p);
            let wp = if no_prefix_opt { build_split(&d) } else { build_split_optimized(&d) };
            let _ = write!(out, "{}", serialize(&wp, dialect.into()));
            Ok(EXIT_OK)
        }
        Cmd::Solve { input, no_prefix_opt, format, max_atoms } => {
            let p = load(&input)?;
            RefSolver::new(max_atoms).admit(&p)?;
            let engine = RefSolver::unguarded();
            match split_seq_fast(&p, !no_prefix_opt, &engine)? {
                Some(m) => {
                    let mut sig = desugar_constraints(&p).sig;
                    sig.ensure_all_beliefs();
                    print_models(out, &sig, &BTreeSet::from([m]), format);
                    Ok(EXIT_OK)
                }
                None => {
                    match format {
                        Format::Text => {
                            let _ = writeln!(out, "no model: the program is classically unsatisfiable");
                        }
                        Format::Json => {
                            let v = serde_json::json!({
                                "model": serde_json::Value::Null,
                                "gap": serde_json::Value::Null,
                                "status": "no-model",
                            });
                            let _ = writeln!(out, "{v}");
                        }
                    }
                    Ok(EXIT_NO_MODEL)
                }
            }
        }
        Cmd::Oracle { input, format, max_atoms, order_seed } => {
            let p = load(&input)?;
            RefSolver::new(max_atoms).admit(&p)?;
            let d = desugar_constraints(&p);
            let g = dependency_graph(&d);
            let order = match order_seed {
                Some(seed) => scc_topological_seeded(&g, seed),
                None => scc_topological(&g),
            };
            let models = split_seq_oracle_with(&d, &RefSolver::unguarded(), &order)?;
            let mut sig = d.sig.clone();
            sig.ensure_all_beliefs();
            print_models(out, &sig, &models, format);
            Ok(EXIT_OK)
        }
        Cmd::Seq { input, format, max_atoms } => {
            let p = load(&input)?;
            RefSolver::new(max_atoms).admit(&p)?;
            let d = desugar_constraints(&p);
            let models = seq_models(&d, &RefSolver::unguarded())?;
            let mut sig = d.sig.clone();
            sig.ensure_all_beliefs();
            print_models(out, &sig, &models, format);
            Ok(EXIT_OK)
        }
        Cmd::Check { model, input, format, max_atoms } => {
            let p = load(&input)?;
            RefSolver::new(max_atoms).admit(&p)?;
            let d = desugar_constraints(&p);
            let mut sig = d.sig.clone();
            sig.ensure_all_beliefs();
            let m = parse_model(&sig, &model)?;
            let engine = RefSolver::unguarded();

            let objective = m.retain_by(|a| sig.kind(a).is_program_atom());
            let closure = k_closure(&mut sig, &objective);
            let verdict = if engine.answer_sets(&p)?.contains(&objective)
                && (m == objective || m == closure)
            {
                "answer set"
            } else if split_seq_oracle_with(
                &d,
                &engine,
                &scc_topological(&dependency_graph(&d)),
            )?
            .contains(&m)
            {
                "split seq model"
            } else if seq_models(&d, &engine)?.contains(&m) {
                "seq model"
            } else {
                "none"
            };
            match format {
                Format::Text => {
                    let _ = writeln!(out, "{verdict}");
                }
                Format::Json => {
                    let v = serde_json::json!({
                        "model": pretty_names(&sig, &m),
                        "gap": pretty_names(&sig, &gap(&sig, &m)),
                        "status": verdict,
                    });
                    let _ = writeln!(out, "{v}");
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Graph { input, order_seed } => {
            let p = load(&input)?;
            let d = desugar_constraints(&p);
            let g = dependency_graph(&d);
            let order = match order_seed {
                Some(seed) => scc_topological_seeded(&g, seed),
                None => scc_topological(&g),
            };
            let _ = write!(out, "{}", condensation_dot(&d, &g, &order));
            Ok(EXIT_OK)
        }
    }
}

/// Atom names of `m` in display order (objective name, then its belief).
fn pretty_names(sig: &Signature, m: &Interpretation) -> Vec<String> {
    let mut atoms: Vec<AtomId> = m.iter().collect();
    atoms.sort_by_key(|&a| sig.pretty_sort_key(a));
    atoms.iter().map(|&a| sig.pretty(a)).collect()
}

fn print_models(
    out: &mut dyn Write,
    sig: &Signature,
    models: &BTreeSet<Interpretation>,
    format: Format,
) {
    for (idx, m) in models.iter().enumerate() {
        let g = gap(sig, m);
        match format {
            Format::Text => {
                if idx > 0 {
                    let _ = writeln!(out);
                }
                let _ = writeln!(out, "{}", m.pretty(sig));
                let _ = writeln!(out, "gap: {{{}}}", pretty_names(sig, &g).join(", "));
            }
            Format::Json => {
                let v = serde_json::json!({
                    "model": pretty_names(sig, m),
                    "gap": pretty_names(sig, &g),
                    "status": "ok",
                });
                let _ = writeln!(out, "{v}");
            }
        }
    }
}

/// Parse a user-supplied interpretation: atom names, `k_name`, or
/// `K(name)`, separated by spaces or commas.
fn parse_model(sig: &Signature, text: &str) -> Result<Interpretation, Failure> {
    let mut atoms = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let id = if let Some(a) = sig.lookup(tok) {
            a
        } else if let Some(inner) = tok.strip_prefix("K(").and_then(|t| t.strip_suffix(')')) {
            sig.lookup(inner)
                .and_then(|obj| sig.belief_of(obj))
                .ok_or_else(|| Failure::input(format!("unknown atom '{inner}'")))?
        } else {
            return Err(Failure::input(format!("unknown atom '{tok}'")));
        };
        atoms.push(id);
    }
    Ok(Interpretation::from_iter(atoms))
}

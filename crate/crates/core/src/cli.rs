//! The `ppg` command-line front end.
//!
//! Exit codes: 0 success; 1 validation failure or no consistent order;
//! 2 parse error; 3 arity mismatch, usage error, or unreadable/unwritable
//! file. Data goes to standard output, diagnostics to standard error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::composition::{compose, elementary_decomposition};
use crate::error::Error;
use crate::format::{
    circ_document, emit_ppg, emit_stg, hat_pa, parse_document, parse_ppg, parse_stg, Document,
    PpgDocument,
};
use crate::layout::{layout, layout_st, render_svg, render_tikz, Flow};
use crate::order::{conjugate_order, PopGraph};
use crate::synthesis::{
    count_planar_orders_with, enumerate_planar_orders_with, extract_pa, synthesize_order,
    synthesize_pop, EnumerationOptions, DEFAULT_MAX_EDGES,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::ArityMismatch(..) | Error::TooLarge { .. } => EXIT_USAGE,
        _ => EXIT_INVALID,
    }
}

#[derive(Parser, Debug)]
#[command(name = "ppg", version, about = "Planarly ordered progressive graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a .ppg or .stg file.
    Validate { file: PathBuf },
    /// Synthesize the planar order from polarization and anchor lines.
    Order { file: PathBuf },
    /// Check the file's order line against the planar-order axioms.
    CheckOrder { file: PathBuf },
    /// Compose two POP-graphs: outputs of A feed the inputs of B.
    Compose {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write the elementary factors and a manifest into a directory.
    Decompose {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// List (or count) all planar orders of the underlying graph.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        count: bool,
        /// Lift the edge bound.
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        max_edges: usize,
    },
    /// Print the conjugate order as pairs `a b` meaning a <* b.
    Conjugate { file: PathBuf },
    /// Convert a .ppg file to its st completion in .stg form.
    Hat {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a .stg file to its progressive truncation in .ppg form.
    Circ {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw the POP-graph as SVG, or TikZ when the output ends in .tex.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Draw the st completion with apexes above and below the box.
        #[arg(long)]
        st: bool,
        /// Flow upward instead of downward.
        #[arg(long)]
        up: bool,
        /// Emit TikZ regardless of the output name.
        #[arg(long)]
        tikz: bool,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            report(&e, err);
            exit_code(&e)
        }
    }
}

/// One line per violation or defect, so long lists stay readable.
fn report(e: &Error, err: &mut dyn Write) {
    match e {
        Error::InvalidPlanarOrder(vs) => {
            let _ = writeln!(err, "error: invalid planar order ({} violations)", vs.len());
            for v in vs {
                let _ = writeln!(err, "  {v}");
            }
        }
        Error::NoConsistentOrder(ds) => {
            let _ = writeln!(err, "error: no consistent planar order ({} defects)", ds.len());
            for d in ds {
                let _ = writeln!(err, "  {d}");
            }
        }
        other => {
            let _ = writeln!(err, "error: {other}");
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn annotate(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse { line, message } => Failure::Lib(Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        }),
        other => Failure::Lib(other),
    }
}

fn load_ppg(path: &Path) -> std::result::Result<PpgDocument, Failure> {
    parse_ppg(&read(path)?).map_err(|e| annotate(path, e))
}

/// The file's order, or the order synthesized from its polarization.
fn load_pop(path: &Path) -> std::result::Result<PopGraph, Failure> {
    let doc = load_ppg(path)?;
    if let Some(pop) = doc.pop() {
        return Ok(pop.clone());
    }
    match doc.pa() {
        Some(pa) => Ok(synthesize_pop(pa)?),
        None => Err(Failure::Usage(format!(
            "{} has neither an order line nor polarization/anchor lines",
            path.display()
        ))),
    }
}

fn deliver(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Outcome {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("cannot write output: {e}"))),
    }
}

fn line(out: &mut dyn Write, text: &str) -> Outcome {
    deliver(&format!("{text}\n"), None, out)
}

fn execute(cmd: Command, out: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Validate { file } => {
            let text = read(&file)?;
            match parse_document(&text).map_err(|e| annotate(&file, e))? {
                Document::Ppg(doc) => {
                    let g = doc.graph();
                    let mut extras = Vec::new();
                    if doc.pa().is_some() {
                        extras.push("polarization and anchor");
                    }
                    if doc.pop().is_some() {
                        extras.push("planar order");
                    }
                    let extras = if extras.is_empty() {
                        String::new()
                    } else {
                        format!(", with {}", extras.join(" and "))
                    };
                    line(
                        out,
                        &format!(
                            "valid progressive graph: {} edges, {} internal vertices, {} inputs, {} outputs{extras}",
                            g.edge_count(),
                            g.internal_vertices().len(),
                            g.inputs().len(),
                            g.outputs().len()
                        ),
                    )
                }
                Document::Stg(st) => line(
                    out,
                    &format!(
                        "valid st graph: {} vertices, {} edges, source {}, sink {}",
                        st.vertex_count(),
                        st.edge_count(),
                        st.source(),
                        st.sink()
                    ),
                ),
            }
        }
        Command::Order { file } => {
            let doc = load_ppg(&file)?;
            let order = match (doc.pa(), doc.pop()) {
                (Some(pa), _) => synthesize_order(pa)?,
                (None, Some(pop)) => pop.order(),
                (None, None) => {
                    return Err(Failure::Usage(format!(
                        "{} has no polarization/anchor lines to synthesize from",
                        file.display()
                    )))
                }
            };
            line(out, &order.to_string())
        }
        Command::CheckOrder { file } => {
            let doc = load_ppg(&file)?;
            match doc.pop() {
                Some(pop) => line(out, &format!("planar order ok ({} edges)", pop.edge_count())),
                None => Err(Failure::Usage(format!("{} has no order line", file.display()))),
            }
        }
        Command::Compose { a, b, output } => {
            let (pa, pb) = (load_pop(&a)?, load_pop(&b)?);
            let c = compose(&pa, &pb)?;
            deliver(&emit_ppg(&PpgDocument::from_pop(c)), output.as_deref(), out)
        }
        Command::Decompose { file, output } => {
            let pop = load_pop(&file)?;
            let d = elementary_decomposition(&pop);
            fs::create_dir_all(&output)
                .map_err(|e| Failure::Usage(format!("cannot create {}: {e}", output.display())))?;
            let mut manifest = String::from(
                "# elementary factors in composition order; the first receives the inputs\n",
            );
            let mut written = Vec::new();
            for (k, f) in d.factors().iter().enumerate() {
                let name = format!("factor-{:02}.ppg", k + 1);
                let path = output.join(&name);
                deliver(&emit_ppg(&PpgDocument::from_pop(f.clone())), Some(&path), out)?;
                let vertex = f
                    .graph()
                    .internal_vertices()
                    .first()
                    .map_or_else(|| "-".to_string(), |v| v.to_string());
                manifest.push_str(&format!("factor {} {name} {vertex}\n", k + 1));
                written.push(path);
            }
            for (k, pairs) in d.interfaces().iter().enumerate() {
                manifest.push_str(&format!("glue {} {}", k + 1, k + 2));
                for (o, i) in pairs {
                    manifest.push_str(&format!(" {o}:{i}"));
                }
                manifest.push('\n');
            }
            let path = output.join("manifest.txt");
            deliver(&manifest, Some(&path), out)?;
            written.push(path);
            for p in written {
                line(out, &p.display().to_string())?;
            }
            Ok(())
        }
        Command::Enumerate {
            file,
            limit,
            count,
            force,
            max_edges,
        } => {
            let doc = load_ppg(&file)?;
            let opts = EnumerationOptions {
                limit,
                max_edges,
                force,
            };
            if count {
                let n = count_planar_orders_with(doc.graph(), &opts)?;
                return line(out, &n.to_string());
            }
            let e = enumerate_planar_orders_with(doc.graph(), &opts)?;
            let mut text = String::new();
            for o in &e.orders {
                text.push_str(&o.to_string());
                text.push('\n');
            }
            deliver(&text, None, out)
        }
        Command::Conjugate { file } => {
            let pop = load_pop(&file)?;
            let rel = conjugate_order(&pop);
            let seq = pop.order();
            let mut text = String::new();
            for (i, a) in seq.iter().enumerate() {
                for b in &seq.as_slice()[i + 1..] {
                    if rel.contains(a.as_str(), b.as_str()) {
                        text.push_str(&format!("{a} {b}\n"));
                    }
                }
            }
            deliver(&text, None, out)
        }
        Command::Hat { file, output } => {
            let doc = load_ppg(&file)?;
            let pa = doc
                .pa()
                .cloned()
                .or_else(|| doc.pop().map(extract_pa));
            let st = match pa {
                Some(pa) => hat_pa(&pa)?,
                None => doc.graph().hat()?,
            };
            deliver(&emit_stg(&st), output.as_deref(), out)
        }
        Command::Circ { file, output } => {
            let st = parse_stg(&read(&file)?).map_err(|e| annotate(&file, e))?;
            deliver(&emit_ppg(&circ_document(&st)?), output.as_deref(), out)
        }
        Command::Render {
            file,
            output,
            st,
            up,
            tikz,
        } => {
            let pop = load_pop(&file)?;
            let d = if st { layout_st(&pop) } else { layout(&pop) };
            let d = d.with_flow(if up { Flow::Up } else { Flow::Down });
            let as_tex = tikz
                || output
                    .as_deref()
                    .and_then(Path::extension)
                    .is_some_and(|ext| ext == "tex");
            let text = if as_tex { render_tikz(&d) } else { render_svg(&d) };
            deliver(&text, output.as_deref(), out)
        }
    }
}

//! `unfoldium` — spanning trees, symmetry orbits, and the eleven
//! unfoldings of the cube, from the command line.
//!
//! Exit codes are part of the interface: 0 for success, 1 for usage and
//! parse errors, 2 for mathematical failures (an input that is not a
//! spanning tree, a verification check that does not pass), 3 for I/O
//! errors. All output is deterministic for a given invocation; JSON output
//! carries a top-level `"schema": 1` marker and only exact integers.

use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use unfoldium::{build_report, VerificationReport, VerifyOptions};
use unfoldium_core::graph::{cube_graph, k4_graph, path2_graph, EdgeSet, Graph};
use unfoldium_core::render::{cells_ascii, shape_ascii, shape_svg};
use unfoldium_core::symmetry::{compute_orbits, OrbitReport, SymmetryGroup};
use unfoldium_core::unfold::{
    canonical_form, classify_shapes, fold_back, hinge_tree, layout, CanonicalShape,
};
use unfoldium_core::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_MATH: u8 = 2;
const EXIT_IO: u8 = 3;

/// `println!` that survives a closed pipe. When output is piped into a
/// reader that stops early (`unfoldium shapes | head`), plain `println!`
/// panics on the broken pipe; the downstream closing means it has all it
/// wants, so the right response is a quiet successful exit.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut stdout = std::io::stdout().lock();
        if writeln!(stdout, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "unfoldium",
    version,
    about = "Spanning trees, symmetry orbits, and the eleven unfoldings of the cube"
)]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count spanning trees by determinant and by enumeration
    CountTrees {
        /// Which bundled graph to count
        #[arg(long, value_enum, default_value_t = GraphChoice::Cube)]
        graph: GraphChoice,
    },
    /// Print the per-class fixed-tree table and the orbit count it implies
    Burnside,
    /// List the orbits of cut trees under the full symmetry group
    Orbits,
    /// Cut along seven edges and lay the cube flat
    Unfold {
        /// The cut tree, as comma-separated edges like 1-5,2-6,3-7,4-8,5-6,6-7,7-8
        tree: String,
    },
    /// Print or render the eleven distinct unfolding shapes
    Shapes {
        /// Output form for each shape
        #[arg(long, value_enum, default_value_t = RenderChoice::Ascii)]
        render: RenderChoice,
        /// Directory for the SVG files and index (required with --render svg)
        #[arg(long, required_if_eq("render", "svg"))]
        out_dir: Option<PathBuf>,
    },
    /// Recompute every headline number and report pass/fail per check
    Verify {
        /// Corrupt a group generator so the group-structure check fails
        #[arg(long, hide = true)]
        inject_bad_generator: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphChoice {
    Cube,
    K4,
    Path2,
}

impl GraphChoice {
    fn name(self) -> &'static str {
        match self {
            GraphChoice::Cube => "cube",
            GraphChoice::K4 => "k4",
            GraphChoice::Path2 => "path2",
        }
    }

    fn build(self) -> Graph {
        match self {
            GraphChoice::Cube => cube_graph(),
            GraphChoice::K4 => k4_graph(),
            GraphChoice::Path2 => path2_graph(),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderChoice {
    Ascii,
    Svg,
}

/// A failed run: which exit code to use and what to print on stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn math(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_MATH,
            message: message.into(),
        }
    }

    fn io(path: &Path, error: std::io::Error) -> Failure {
        Failure {
            code: EXIT_IO,
            message: format!("{}: {error}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Failure {
        let code = match error {
            Error::VertexOutOfRange(..)
            | Error::TooManyEdges(..)
            | Error::ParseEdge(..)
            | Error::UnknownEdge(..)
            | Error::DuplicateEdge(..)
            | Error::ParseCycles(..)
            | Error::NotAnIsometry(..) => EXIT_USAGE,
            _ => EXIT_MATH,
        };
        Failure {
            code,
            message: error.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            // --help and --version are successful exits; everything else is
            // a usage error.
            let code = match error.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = error.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            use std::io::Write;
            let _ = writeln!(std::io::stderr(), "error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::CountTrees { graph } => cmd_count_trees(*graph, cli.json),
        Command::Burnside => cmd_burnside(cli.json),
        Command::Orbits => cmd_orbits(cli.json),
        Command::Unfold { tree } => cmd_unfold(tree, cli.json),
        Command::Shapes { render, out_dir } => cmd_shapes(*render, out_dir.as_deref(), cli.json),
        Command::Verify {
            inject_bad_generator,
        } => cmd_verify(
            VerifyOptions {
                inject_bad_generator: *inject_bad_generator,
            },
            cli.json,
        ),
    }
}

/// Whether to emit ANSI colors: only when stdout is a terminal and the
/// NO_COLOR convention does not forbid it.
fn use_color() -> bool {
    let no_color = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty());
    !no_color && std::io::stdout().is_terminal()
}

fn paint(text: &str, code: &str, colored: bool) -> String {
    if colored {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn cmd_count_trees(choice: GraphChoice, as_json: bool) -> Result<(), Failure> {
    let graph = choice.build();
    let determinant = graph.matrix_tree_count();
    let enumerated = graph
        .enumerate_spanning_trees()
        .map_err(Failure::from)?
        .len() as u64;
    if determinant != enumerated {
        return Err(Failure::math(format!(
            "spanning-tree counts disagree: matrix_tree={determinant} enumerated={enumerated}"
        )));
    }
    if as_json {
        out!(
            "{}",
            json!({
                "schema": 1,
                "graph": choice.name(),
                "matrix_tree": determinant,
                "enumerated": enumerated,
            })
        );
    } else {
        out!("matrix_tree={determinant} enumerated={enumerated}");
    }
    Ok(())
}

/// The full group, the 384 cut trees, and their orbit report, which several
/// subcommands share.
fn cube_orbit_report() -> Result<(Graph, Vec<EdgeSet>, OrbitReport), Failure> {
    let cube = cube_graph();
    let trees = cube.enumerate_spanning_trees().map_err(Failure::from)?;
    let group = SymmetryGroup::full().map_err(Failure::from)?;
    let report = compute_orbits(&group, &trees);
    Ok((cube, trees, report))
}

fn cmd_burnside(as_json: bool) -> Result<(), Failure> {
    let (_, _, report) = cube_orbit_report()?;
    let order = 48u64;
    if as_json {
        out!(
            "{}",
            json!({
                "schema": 1,
                "group_order": order,
                "classes": report.fixed_table.iter().map(|row| json!({
                    "class": row.class.to_string(),
                    "description": row.class.description(),
                    "elements": row.elements,
                    "fixed_per_element": row.fixed_per_element,
                    "contribution": row.elements as u64 * row.fixed_per_element,
                })).collect::<Vec<_>>(),
                "sum": report.burnside_sum,
                "orbits": report.burnside_orbit_count,
            })
        );
        return Ok(());
    }
    out!(
        "{:<10} {:>8} {:>6} {:>12}  description",
        "class",
        "elements",
        "fixed",
        "contribution"
    );
    for row in &report.fixed_table {
        out!(
            "{:<10} {:>8} {:>6} {:>12}  {}",
            row.class.to_string(),
            row.elements,
            row.fixed_per_element,
            row.elements as u64 * row.fixed_per_element,
            row.class.description()
        );
    }
    out!(
        "sum={} group_order={order} orbits={}",
        report.burnside_sum,
        report.burnside_orbit_count
    );
    Ok(())
}

/// The canonical shapes in classification order, each with its cut trees.
/// Classification order is what numbers the shapes 1 through 11 everywhere
/// in the output.
fn shape_rows(trees: &[EdgeSet]) -> Result<Vec<(CanonicalShape, Vec<EdgeSet>)>, Failure> {
    let by_shape = classify_shapes(trees).map_err(Failure::from)?;
    Ok(by_shape.into_iter().collect())
}

fn shape_index_of(rows: &[(CanonicalShape, Vec<EdgeSet>)], shape: CanonicalShape) -> usize {
    rows.iter()
        .position(|(s, _)| *s == shape)
        .map_or(0, |i| i + 1)
}

fn cmd_orbits(as_json: bool) -> Result<(), Failure> {
    let (cube, trees, report) = cube_orbit_report()?;
    let rows = shape_rows(&trees)?;
    let orbit_lines: Vec<(usize, usize, usize, String)> = report
        .orbits
        .iter()
        .enumerate()
        .map(|(i, orbit)| {
            let net = layout(orbit.representative).map_err(Failure::from)?;
            let shape = shape_index_of(&rows, canonical_form(&net));
            Ok((
                i + 1,
                orbit.members.len(),
                shape,
                cube.edge_set_string(orbit.representative),
            ))
        })
        .collect::<Result<_, Failure>>()?;
    if as_json {
        out!(
            "{}",
            json!({
                "schema": 1,
                "orbits": orbit_lines.iter().map(|(index, size, shape, representative)| json!({
                    "index": index,
                    "size": size,
                    "shape": shape,
                    "representative": representative,
                })).collect::<Vec<_>>(),
                "count": report.orbits.len(),
                "trees": trees.len(),
            })
        );
        return Ok(());
    }
    out!(
        "{:>5} {:>5} {:>5}  representative",
        "orbit",
        "size",
        "shape"
    );
    for (index, size, shape, representative) in &orbit_lines {
        out!("{index:>5} {size:>5} {shape:>5}  {representative}");
    }
    out!("orbits={} trees={}", report.orbits.len(), trees.len());
    Ok(())
}

fn cmd_unfold(tree: &str, as_json: bool) -> Result<(), Failure> {
    let (cube, _, report) = cube_orbit_report()?;
    let cut = cube.parse_edge_set(tree).map_err(Failure::from)?;
    let net = layout(cut).map_err(Failure::from)?;
    let hinges = hinge_tree(cut).map_err(Failure::from)?;
    let refolded = fold_back(&net).map_err(Failure::from)?;
    if refolded != cut {
        return Err(Failure::math(format!(
            "folding the net back recovered {} instead of the input cut",
            cube.edge_set_string(refolded)
        )));
    }
    let shape = canonical_form(&net);
    let orbit = report
        .orbits
        .iter()
        .find(|orbit| orbit.members.binary_search(&cut).is_ok())
        .expect("every cut tree belongs to an orbit");
    let representative = cube.edge_set_string(orbit.representative);

    if as_json {
        out!(
            "{}",
            json!({
                "schema": 1,
                "cut": cube.edge_set_string(cut),
                "hinges": hinges.links().iter().map(|link| json!({
                    "edge": link.edge.to_string(),
                    "faces": [link.faces.0.to_string(), link.faces.1.to_string()],
                })).collect::<Vec<_>>(),
                "placements": net.placements().iter().map(|p| json!({
                    "face": p.face.to_string(),
                    "cell": [p.cell.0, p.cell.1],
                    "corners": p.corners.iter().map(|(v, (x, y))| json!({
                        "vertex": v.label(),
                        "at": [x, y],
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "orbit_representative": representative,
                "shape_cells": shape.cells().iter()
                    .map(|&(x, y)| json!([x, y]))
                    .collect::<Vec<_>>(),
            })
        );
        return Ok(());
    }

    out!("cut: {}", cube.edge_set_string(cut));
    out!("hinges:");
    for link in hinges.links() {
        out!("  {}  {}-{}", link.edge, link.faces.0, link.faces.1);
    }
    out!("placements:");
    for p in net.placements() {
        let corners: Vec<String> = p
            .corners
            .iter()
            .map(|(v, (x, y))| format!("{}:({x},{y})", v.label()))
            .collect();
        out!(
            "  {:<6} cell ({},{})  corners {}",
            p.face.to_string(),
            p.cell.0,
            p.cell.1,
            corners.join(" ")
        );
    }
    out!("orbit representative: {representative}");
    out!("net:");
    out!("{}", cells_ascii(&net.cells()));
    out!("canonical shape:");
    out!("{}", shape_ascii(&shape));
    Ok(())
}

/// The JSON index of the eleven shapes, shared between `--json` output and
/// the `index.json` written next to the SVG files.
fn shapes_index(cube: &Graph, rows: &[(CanonicalShape, Vec<EdgeSet>)]) -> Value {
    let total: usize = rows.iter().map(|(_, bucket)| bucket.len()).sum();
    json!({
        "schema": 1,
        "shapes": rows.iter().enumerate().map(|(i, (shape, bucket))| json!({
            "index": i + 1,
            "cells": shape.cells().iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>(),
            "trees": bucket.len(),
            "achiral": shape.is_achiral(),
            "representative": cube.edge_set_string(bucket[0]),
        })).collect::<Vec<_>>(),
        "shape_count": rows.len(),
        "tree_total": total,
    })
}

fn cmd_shapes(render: RenderChoice, out_dir: Option<&Path>, as_json: bool) -> Result<(), Failure> {
    let cube = cube_graph();
    let trees = cube.enumerate_spanning_trees().map_err(Failure::from)?;
    let rows = shape_rows(&trees)?;

    if render == RenderChoice::Ascii && out_dir.is_some() {
        return Err(Failure::usage("--out-dir is only used with --render svg"));
    }

    if render == RenderChoice::Svg {
        let dir = out_dir.expect("clap requires --out-dir with --render svg");
        std::fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
        for (i, (shape, _)) in rows.iter().enumerate() {
            let path = dir.join(format!("shape_{:02}.svg", i + 1));
            std::fs::write(&path, shape_svg(shape)).map_err(|e| Failure::io(&path, e))?;
        }
        let index_path = dir.join("index.json");
        let index = shapes_index(&cube, &rows);
        let pretty = serde_json::to_string_pretty(&index).expect("index serializes");
        std::fs::write(&index_path, pretty + "\n").map_err(|e| Failure::io(&index_path, e))?;
        if as_json {
            out!("{index}");
        } else {
            out!(
                "wrote {} SVG files and index.json to {}",
                rows.len(),
                dir.display()
            );
        }
        return Ok(());
    }

    if as_json {
        out!("{}", shapes_index(&cube, &rows));
        return Ok(());
    }
    for (i, (shape, bucket)) in rows.iter().enumerate() {
        out!(
            "shape {:02}  trees={}  achiral={}  representative={}",
            i + 1,
            bucket.len(),
            if shape.is_achiral() { "yes" } else { "no" },
            cube.edge_set_string(bucket[0])
        );
        out!("{}", shape_ascii(shape));
        out!();
    }
    let total: usize = rows.iter().map(|(_, bucket)| bucket.len()).sum();
    out!("shapes={} trees={total}", rows.len());
    Ok(())
}

fn print_report_text(report: &VerificationReport) {
    let colored = use_color();
    for check in &report.checks {
        let verdict = if check.pass {
            paint(" ok ", "32", colored)
        } else {
            paint("FAIL", "31", colored)
        };
        out!("{verdict}  {:<22} {}", check.id, check.description);
        if !check.pass {
            out!("      expected  {}", check.expected);
            out!("      actual    {}", check.actual);
        }
    }
    out!("summary: {} checks passed", report.summary());
}

fn cmd_verify(options: VerifyOptions, as_json: bool) -> Result<(), Failure> {
    let report = build_report(options);
    if as_json {
        out!("{}", report.to_json());
    } else {
        print_report_text(&report);
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::math(format!(
            "verification failed: {} checks passed",
            report.summary()
        )))
    }
}

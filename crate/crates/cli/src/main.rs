//! Command-line front end: load documents, apply set operations, run the
//! convexity/separation analyses and the property suites.
//!
//! Exit codes: 0 success (verdict computed, even a negative one), 1 usage
//! error, 2 validation error, 3 property failure.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dfuzzy::convex::{
    bounding_radius, core_points, essential_supremum, grid_convex_witness, is_convex_by_cuts,
    is_convex_pointwise, is_strongly_convex, optimal_separation, q_set, shadow, shadow_witness,
    ConvexityReport, Hyperplane, ShadowVerdict,
};
use dfuzzy::document::{Document, ValueEncoding};
use dfuzzy::suites::{run_all, run_suite, SuiteOutcome};
use dfuzzy::{DFuzzySet, Error, Hyp, OrderMode, SubsetVerdict, Universe};

#[derive(Parser)]
#[command(name = "dfuzzy", version, about = "Hyperbolic-valued fuzzy set calculator")]
struct Cli {
    /// Output format (text and structured carry the same content)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Lattice,
    Strict,
}

impl From<ModeArg> for OrderMode {
    fn from(m: ModeArg) -> OrderMode {
        match m {
            ModeArg::Lattice => OrderMode::Lattice,
            ModeArg::Strict => OrderMode::Strict,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EncodingArg {
    Idempotent,
    Standard,
}

#[derive(Subcommand)]
enum Command {
    /// Load, validate and summarize a document
    Eval {
        #[arg(long)]
        file: PathBuf,
    },
    /// Apply a set operation: union, intersection, complement,
    /// algebraic-sum, algebraic-product, absolute-difference, cartesian,
    /// convex-combination, subset, equals, decompose
    Op {
        name: String,
        /// Operand set names
        sets: Vec<String>,
        #[arg(long)]
        file: PathBuf,
        /// Second document (cartesian products across universes)
        #[arg(long)]
        file2: Option<PathBuf>,
        /// Store the result under this name (needs --save)
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Where to write the updated document
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Analyze a set: convexity, bounded, core, shadow, separate
    Analyze {
        what: String,
        /// Set names (one for convexity/bounded/core, one or two for
        /// shadow, two for separate)
        sets: Vec<String>,
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Coordinate axis to drop for shadows (default 0)
        #[arg(long)]
        axis: Option<usize>,
        /// Near-supremum tolerance for `core`, e.g. "0.05" or "0.05e1+0.1e2"
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Run property suites (law and theorem checks)
    Props {
        /// Suite name, or "all"
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Convert a number literal, or a whole document, between standard and
    /// idempotent form
    Convert {
        /// A hyperbolic number, e.g. "0.5+(-0.2)k" or "0.3e1+0.7e2"
        number: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Target encoding for document conversion
        #[arg(long, value_enum, default_value_t = EncodingArg::Idempotent)]
        to: EncodingArg,
        /// Where to write the converted document (stdout when omitted)
        #[arg(long)]
        save: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Core(e)
    }
}

type CmdResult = Result<(String, Value, i32), CliError>;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let format = cli.format;
    let outcome = match cli.command {
        Command::Eval { file } => cmd_eval(&file),
        Command::Op {
            name,
            sets,
            file,
            file2,
            out,
            mode,
            save,
        } => cmd_op(&name, &sets, &file, file2.as_deref(), out, mode, save),
        Command::Analyze {
            what,
            sets,
            file,
            mode,
            axis,
            epsilon,
        } => cmd_analyze(&what, &sets, &file, mode, axis, epsilon),
        Command::Props {
            suite,
            seed,
            trials,
        } => cmd_props(&suite, seed, trials),
        Command::Convert {
            number,
            file,
            to,
            save,
        } => cmd_convert(number, file.as_deref(), to, save),
    };
    match outcome {
        Ok((text, value, code)) => {
            match format {
                Format::Text => print!("{text}"),
                Format::Structured => println!(
                    "{}",
                    serde_json::to_string_pretty(&value).expect("reports serialize")
                ),
            }
            std::process::exit(code);
        }
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            std::process::exit(1);
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::UnknownSet { .. } | Error::UnknownSuite { .. } => 1,
                _ => 2,
            };
            std::process::exit(code);
        }
    }
}

fn point_desc(universe: &Universe, index: usize) -> String {
    if let Some(label) = universe.label(index) {
        return label.to_string();
    }
    let coords: Vec<String> = universe
        .point(index)
        .iter()
        .map(|&c| dfuzzy::format_sig(c, 12))
        .collect();
    format!("({})", coords.join(", "))
}

fn point_json(universe: &Universe, index: usize) -> Value {
    json!({
        "index": index,
        "point": universe.point(index),
        "label": universe.label(index),
    })
}

fn set_lines(universe: &Universe, set: &DFuzzySet, indent: &str) -> String {
    let mut out = String::new();
    for (i, value) in set.values().iter().enumerate() {
        out.push_str(&format!(
            "{indent}[{i}] {}: {value}\n",
            point_desc(universe, i)
        ));
    }
    out
}

fn set_values_json(set: &DFuzzySet) -> Value {
    Value::Array(set.values().iter().map(|v| json!(v.to_string())).collect())
}

fn parse_hyp_arg(text: &str) -> Result<Hyp, CliError> {
    text.parse::<Hyp>().map_err(CliError::from)
}

fn cmd_eval(file: &Path) -> CmdResult {
    let doc = Document::load(file)?;
    let mode = match doc.default_mode {
        OrderMode::Lattice => "lattice",
        OrderMode::Strict => "strict",
    };
    let mut text = format!(
        "universe: dim {}, {} points\nmode: {mode}\n",
        doc.universe.dim(),
        doc.universe.len()
    );
    let mut sets_json = serde_json::Map::new();
    for (name, set) in &doc.sets {
        let (sup, attained) = essential_supremum(set);
        text.push_str(&format!("set {name} ({} values):\n", set.values().len()));
        text.push_str(&set_lines(&doc.universe, set, "  "));
        text.push_str(&format!(
            "  empty: {}\n  supremum: {sup} ({})\n",
            if set.is_empty() { "yes" } else { "no" },
            if attained { "attained" } else { "not attained at a single point" }
        ));
        sets_json.insert(
            name.clone(),
            json!({
                "values": set_values_json(set),
                "empty": set.is_empty(),
                "supremum": sup.to_string(),
                "supremum_attained": attained,
            }),
        );
    }
    let value = json!({
        "universe": { "dim": doc.universe.dim(), "points": doc.universe.len() },
        "mode": mode,
        "sets": Value::Object(sets_json),
    });
    Ok((text, value, 0))
}

fn expect_args(sets: &[String], n: usize, op: &str) -> Result<(), CliError> {
    if sets.len() != n {
        return Err(CliError::Usage(format!(
            "{op} takes exactly {n} set name(s), got {}",
            sets.len()
        )));
    }
    Ok(())
}

fn incomparable_note(points: &[usize]) -> String {
    if points.is_empty() {
        "lattice fallback on incomparable memberships: none\n".to_string()
    } else {
        let list: Vec<String> = points.iter().map(usize::to_string).collect();
        format!(
            "lattice fallback on incomparable memberships: points {}\n",
            list.join(", ")
        )
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_op(
    name: &str,
    sets: &[String],
    file: &Path,
    file2: Option<&Path>,
    out: Option<String>,
    mode: Option<ModeArg>,
    save: Option<PathBuf>,
) -> CmdResult {
    let mut doc = Document::load(file)?;
    let mode: OrderMode = mode.map(OrderMode::from).unwrap_or(doc.default_mode);
    let mode_name = match mode {
        OrderMode::Lattice => "lattice",
        OrderMode::Strict => "strict",
    };
    if out.is_some() && save.is_none() {
        return Err(CliError::Usage(
            "--out stores a result; pass --save <path> to write the updated document".into(),
        ));
    }

    let mut text = format!("op: {name} ({mode_name})\noperands: {}\n", sets.join(", "));
    let mut value = json!({ "op": name, "mode": mode_name, "operands": sets });
    let object = value.as_object_mut().expect("object");

    enum Outcome {
        Stored(DFuzzySet),
        StoredForeign(DFuzzySet),
        Printed,
    }

    let outcome = match name {
        "union" | "intersection" | "algebraic-sum" | "algebraic-product"
        | "absolute-difference" => {
            expect_args(sets, 2, name)?;
            let a = doc.get(&sets[0])?.clone();
            let b = doc.get(&sets[1])?.clone();
            let result = match name {
                "union" => a.union(&b, mode)?,
                "intersection" => a.intersection(&b, mode)?,
                "algebraic-sum" => a.algebraic_sum(&b)?,
                "algebraic-product" => a.algebraic_product(&b)?,
                _ => a.absolute_difference(&b)?,
            };
            if matches!(name, "union" | "intersection") && mode == OrderMode::Lattice {
                let fallback = a.incomparable_points(&b)?;
                text.push_str(&incomparable_note(&fallback));
                object.insert("incomparable_points".into(), json!(fallback));
            }
            text.push_str("result:\n");
            text.push_str(&set_lines(&doc.universe, &result, "  "));
            object.insert("result".into(), set_values_json(&result));
            Outcome::Stored(result)
        }
        "complement" => {
            expect_args(sets, 1, name)?;
            let result = doc.get(&sets[0])?.complement();
            text.push_str("result:\n");
            text.push_str(&set_lines(&doc.universe, &result, "  "));
            object.insert("result".into(), set_values_json(&result));
            Outcome::Stored(result)
        }
        "convex-combination" => {
            expect_args(sets, 3, name)?;
            let a = doc.get(&sets[0])?.clone();
            let b = doc.get(&sets[1])?.clone();
            let weight = doc.get(&sets[2])?.clone();
            let result = DFuzzySet::convex_combination(&a, &b, &weight)?;
            text.push_str("result:\n");
            text.push_str(&set_lines(&doc.universe, &result, "  "));
            object.insert("result".into(), set_values_json(&result));
            Outcome::Stored(result)
        }
        "cartesian" => {
            expect_args(sets, 2, name)?;
            let a = doc.get(&sets[0])?.clone();
            let other_doc;
            let b = match file2 {
                Some(path) => {
                    other_doc = Document::load(path)?;
                    other_doc.get(&sets[1])?.clone()
                }
                None => doc.get(&sets[1])?.clone(),
            };
            let result = a.cartesian_product(&b, mode)?;
            text.push_str(&format!(
                "product universe: dim {}, {} points\nresult:\n",
                result.universe().dim(),
                result.universe().len()
            ));
            text.push_str(&set_lines(result.universe(), &result, "  "));
            object.insert("result".into(), set_values_json(&result));
            object.insert(
                "product_universe".into(),
                json!({ "dim": result.universe().dim(), "points": result.universe().len() }),
            );
            Outcome::StoredForeign(result)
        }
        "subset" => {
            expect_args(sets, 2, name)?;
            let verdict = doc.get(&sets[0])?.is_subset(doc.get(&sets[1])?)?;
            let description = match verdict {
                SubsetVerdict::Subset => "subset".to_string(),
                SubsetVerdict::NotSubset => "not a subset".to_string(),
                SubsetVerdict::IncomparableAt(i) => format!("incomparable at point {i}"),
            };
            text.push_str(&format!("verdict: {description}\n"));
            object.insert("verdict".into(), json!(verdict));
            Outcome::Printed
        }
        "equals" => {
            expect_args(sets, 2, name)?;
            let equal = doc.get(&sets[0])?.equals(doc.get(&sets[1])?)?;
            text.push_str(&format!("equal: {}\n", if equal { "yes" } else { "no" }));
            object.insert("equal".into(), json!(equal));
            Outcome::Printed
        }
        "decompose" => {
            expect_args(sets, 1, name)?;
            let (first, second) = doc.get(&sets[0])?.decompose();
            let fmt = |vals: &[f64]| -> String {
                let parts: Vec<String> =
                    vals.iter().map(|&x| dfuzzy::format_sig(x, 12)).collect();
                parts.join(", ")
            };
            text.push_str(&format!(
                "e1 component: [{}]\ne2 component: [{}]\n",
                fmt(first.values()),
                fmt(second.values())
            ));
            object.insert("e1_component".into(), json!(first.values()));
            object.insert("e2_component".into(), json!(second.values()));
            Outcome::Printed
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown op {other:?} (try union, intersection, complement, algebraic-sum, \
                 algebraic-product, absolute-difference, cartesian, convex-combination, \
                 subset, equals, decompose)"
            )))
        }
    };

    if let Some(out_name) = out {
        let save_path = save.expect("checked above");
        match outcome {
            Outcome::Stored(result) => {
                doc.insert(&out_name, result)?;
                doc.save(&save_path, ValueEncoding::Idempotent)?;
            }
            Outcome::StoredForeign(result) => {
                let mut product_doc = Document::new(result.universe().clone());
                product_doc.insert(&out_name, result)?;
                product_doc.save(&save_path, ValueEncoding::Idempotent)?;
            }
            Outcome::Printed => {
                return Err(CliError::Usage(format!(
                    "{name} produces a verdict, not a set; --out does not apply"
                )))
            }
        }
        text.push_str(&format!(
            "stored as {out_name} in {}\n",
            save_path.display()
        ));
        object.insert("stored_as".into(), json!(out_name));
        object.insert("saved".into(), json!(save_path.display().to_string()));
    }
    Ok((text, value, 0))
}

fn convexity_text(universe: &Universe, label: &str, report: &ConvexityReport) -> String {
    let mut out = format!(
        "{label}: {}\n",
        if report.convex { "yes" } else { "no" }
    );
    if let Some(w) = &report.witness {
        let (i, j) = w.endpoints;
        out.push_str(&format!(
            "  witness: segment {} -- {} fails at {} (lambda {}{})\n",
            point_desc(universe, i),
            point_desc(universe, j),
            point_desc(universe, w.interior),
            dfuzzy::format_sig(w.lambda, 12),
            match w.alpha {
                Some(alpha) => format!(", alpha {alpha}"),
                None => String::new(),
            }
        ));
    }
    out
}

fn witness_json(universe: &Universe, report: &ConvexityReport) -> Value {
    match &report.witness {
        None => Value::Null,
        Some(w) => json!({
            "endpoints": [point_json(universe, w.endpoints.0), point_json(universe, w.endpoints.1)],
            "interior": point_json(universe, w.interior),
            "lambda": w.lambda,
            "alpha": w.alpha.map(|a| a.to_string()),
        }),
    }
}

fn hyperplane_json(h: &Hyperplane) -> Value {
    json!({ "axis": h.axis, "threshold": h.threshold })
}

fn cmd_analyze(
    what: &str,
    sets: &[String],
    file: &Path,
    mode: Option<ModeArg>,
    axis: Option<usize>,
    epsilon: Option<String>,
) -> CmdResult {
    let doc = Document::load(file)?;
    let mode: OrderMode = mode.map(OrderMode::from).unwrap_or(doc.default_mode);
    match what {
        "convexity" => {
            expect_args(sets, 1, "analyze convexity")?;
            let set = doc.get(&sets[0])?;
            let by_cuts = is_convex_by_cuts(set);
            let pointwise = is_convex_pointwise(set, mode)?;
            let strong = is_strongly_convex(set);
            let mut text = format!("set: {}\n", sets[0]);
            text.push_str(&convexity_text(&doc.universe, "convex (alpha-cuts)", &by_cuts));
            text.push_str(&convexity_text(&doc.universe, "convex (pointwise)", &pointwise));
            text.push_str(&convexity_text(&doc.universe, "strongly convex", &strong));
            text.push_str(&format!("alphas tested: {}\n", by_cuts.alphas_tested.len()));
            let value = json!({
                "set": sets[0],
                "convex_by_cuts": by_cuts.convex,
                "convex_pointwise": pointwise.convex,
                "strongly_convex": strong.convex,
                "witness_by_cuts": witness_json(&doc.universe, &by_cuts),
                "witness_pointwise": witness_json(&doc.universe, &pointwise),
                "witness_strong": witness_json(&doc.universe, &strong),
                "alphas_tested": by_cuts.alphas_tested.len(),
            });
            Ok((text, value, 0))
        }
        "bounded" => {
            expect_args(sets, 1, "analyze bounded")?;
            let set = doc.get(&sets[0])?;
            let radii = bounding_radius(set);
            let mut text = format!(
                "set: {}\nbounded: yes (finite universe)\nradius per alpha:\n",
                sets[0]
            );
            let mut rows = Vec::new();
            for (alpha, radius) in &radii {
                text.push_str(&format!("  alpha {alpha}: R = {radius}\n"));
                rows.push(json!({ "alpha": alpha.to_string(), "radius": radius.to_string() }));
            }
            let value = json!({ "set": sets[0], "bounded": true, "radii": rows });
            Ok((text, value, 0))
        }
        "core" => {
            expect_args(sets, 1, "analyze core")?;
            let set = doc.get(&sets[0])?;
            let (sup, attained) = essential_supremum(set);
            let core = core_points(set);
            let core_convex = grid_convex_witness(&doc.universe, &core).is_none();
            let mut text = format!(
                "set: {}\nsupremum M: {sup} ({})\n",
                sets[0],
                if attained { "attained" } else { "not attained at a single point" }
            );
            if core.is_empty() {
                text.push_str(
                    "core: empty (component maxima are reached at different points; \
                     the near-supremum set can be empty for small epsilon)\n",
                );
            } else {
                let descs: Vec<String> = core
                    .iter()
                    .map(|&i| format!("{i} {}", point_desc(&doc.universe, i)))
                    .collect();
                text.push_str(&format!("core: points {}\n", descs.join(", ")));
                text.push_str(&format!(
                    "core grid-convex: {}\n",
                    if core_convex { "yes" } else { "no" }
                ));
            }
            let mut value = json!({
                "set": sets[0],
                "supremum": sup.to_string(),
                "supremum_attained": attained,
                "core": core,
                "core_grid_convex": core_convex,
            });
            if let Some(eps_text) = epsilon {
                let eps = parse_hyp_arg(&eps_text)?;
                let q = q_set(set, eps)?;
                if q.is_empty() {
                    text.push_str(&format!("q-set(epsilon={eps}): empty\n"));
                } else {
                    let list: Vec<String> = q.iter().map(usize::to_string).collect();
                    text.push_str(&format!(
                        "q-set(epsilon={eps}): points {}\n",
                        list.join(", ")
                    ));
                }
                value
                    .as_object_mut()
                    .expect("object")
                    .insert("q_set".into(), json!({ "epsilon": eps.to_string(), "points": q }));
            }
            Ok((text, value, 0))
        }
        "shadow" => match sets.len() {
            1 => {
                let set = doc.get(&sets[0])?;
                let axis = axis.unwrap_or(0);
                let projected = shadow(set, axis)?;
                let convex = is_convex_pointwise(&projected, OrderMode::Lattice)?.convex;
                let mut text = format!(
                    "set: {}, dropping axis {axis}\nshadow universe: dim {}, {} points\n",
                    sets[0],
                    projected.universe().dim(),
                    projected.universe().len()
                );
                text.push_str(&set_lines(projected.universe(), &projected, "  "));
                text.push_str(&format!(
                    "shadow convex (pointwise): {}\n",
                    if convex { "yes" } else { "no" }
                ));
                let value = json!({
                    "set": sets[0],
                    "axis": axis,
                    "shadow": set_values_json(&projected),
                    "shadow_points": projected.universe().points(),
                    "shadow_convex": convex,
                });
                Ok((text, value, 0))
            }
            2 => {
                let a = doc.get(&sets[0])?;
                let b = doc.get(&sets[1])?;
                let axes: Vec<usize> = (0..doc.universe.dim()).collect();
                let verdict = shadow_witness(a, b, &axes)?;
                let description = match verdict {
                    ShadowVerdict::Equal => "sets are equal".to_string(),
                    ShadowVerdict::DifferingAxis(ax) => {
                        format!("shadows differ when dropping axis {ax}")
                    }
                    ShadowVerdict::Inconclusive => {
                        "inconclusive: sets differ but every axis-aligned shadow agrees"
                            .to_string()
                    }
                };
                let text = format!("sets: {}, {}\nverdict: {description}\n", sets[0], sets[1]);
                let value = json!({ "sets": sets, "verdict": verdict });
                Ok((text, value, 0))
            }
            n => Err(CliError::Usage(format!(
                "analyze shadow takes 1 set (projection) or 2 sets (witness search), got {n}"
            ))),
        },
        "separate" => {
            expect_args(sets, 2, "analyze separate")?;
            let a = doc.get(&sets[0])?;
            let b = doc.get(&sets[1])?;
            let report = optimal_separation(a, b)?;
            let expected = Hyp::ONE - report.intersection_max;
            let theorem = report.best_degree.approx_eq(expected, 1e-12);
            let text = format!(
                "sets: {}, {}\nper-component optimum D: {}\n  e1 component via axis {}, threshold {}\n  e2 component via axis {}, threshold {}\njoint hyperplane: axis {}, threshold {} (degree {})\nintersection supremum M: {} ({})\nseparation theorem D = 1 - M: {}\n",
                sets[0],
                sets[1],
                report.best_degree,
                report.best_threshold_u.axis,
                dfuzzy::format_sig(report.best_threshold_u.threshold, 12),
                report.best_threshold_v.axis,
                dfuzzy::format_sig(report.best_threshold_v.threshold, 12),
                report.joint_hyperplane.axis,
                dfuzzy::format_sig(report.joint_hyperplane.threshold, 12),
                report.joint_best_degree,
                report.intersection_max,
                if report.intersection_max_attained {
                    "attained"
                } else {
                    "not attained at a single point"
                },
                if theorem { "PASS" } else { "FAIL" }
            );
            let value = json!({
                "sets": sets,
                "best_degree": report.best_degree.to_string(),
                "best_threshold_e1": hyperplane_json(&report.best_threshold_u),
                "best_threshold_e2": hyperplane_json(&report.best_threshold_v),
                "joint_best_degree": report.joint_best_degree.to_string(),
                "joint_hyperplane": hyperplane_json(&report.joint_hyperplane),
                "intersection_max": report.intersection_max.to_string(),
                "intersection_max_attained": report.intersection_max_attained,
                "theorem_check": if theorem { "PASS" } else { "FAIL" },
            });
            Ok((text, value, 0))
        }
        other => Err(CliError::Usage(format!(
            "unknown analysis {other:?} (try convexity, bounded, core, shadow, separate)"
        ))),
    }
}

fn cmd_props(suite: &str, seed: u64, trials: usize) -> CmdResult {
    let outcomes: Vec<SuiteOutcome> = if suite == "all" {
        run_all(seed, trials)
    } else {
        vec![run_suite(suite, seed, trials)?]
    };
    let mut text = format!("{:<24} {:>8} {:>9}  first counterexample\n", "suite", "trials", "failures");
    for o in &outcomes {
        text.push_str(&format!(
            "{:<24} {:>8} {:>9}  {}\n",
            o.name,
            o.trials,
            o.failures,
            o.first_counterexample.as_deref().unwrap_or("-")
        ));
    }
    let failed: usize = outcomes.iter().filter(|o| !o.passed()).count();
    let all_pass = failed == 0;
    text.push_str(&format!(
        "result: {} ({} suites, seed {seed}, {trials} trials)\n",
        if all_pass { "PASS" } else { "FAIL" },
        outcomes.len()
    ));
    let value = json!({
        "seed": seed,
        "trials": trials,
        "suites": outcomes,
        "result": if all_pass { "PASS" } else { "FAIL" },
    });
    Ok((text, value, if all_pass { 0 } else { 3 }))
}

fn cmd_convert(
    number: Option<String>,
    file: Option<&Path>,
    to: EncodingArg,
    save: Option<PathBuf>,
) -> CmdResult {
    match (number, file) {
        (Some(literal), None) => {
            let x = parse_hyp_arg(&literal)?;
            let text = format!(
                "idempotent: {x}\nstandard:   {}\n",
                x.to_standard_string()
            );
            let value = json!({
                "idempotent": x.to_string(),
                "standard": x.to_standard_string(),
            });
            Ok((text, value, 0))
        }
        (None, Some(path)) => {
            let doc = Document::load(path)?;
            let encoding = match to {
                EncodingArg::Idempotent => ValueEncoding::Idempotent,
                EncodingArg::Standard => ValueEncoding::Standard,
            };
            let rendered = doc.to_json(encoding);
            match save {
                Some(out_path) => {
                    doc.save(&out_path, encoding)?;
                    let text = format!("converted document written to {}\n", out_path.display());
                    let value = json!({ "saved": out_path.display().to_string() });
                    Ok((text, value, 0))
                }
                None => {
                    let value = serde_json::from_str(&rendered).expect("own output parses");
                    Ok((rendered, value, 0))
                }
            }
        }
        _ => Err(CliError::Usage(
            "pass either a number literal or --file <document>".into(),
        )),
    }
}

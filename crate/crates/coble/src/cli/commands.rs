//! Argument parsing and the subcommands.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand};
use serde_json::{json, Value};

use super::registry::{registry, run_checks, select};
use super::tables::{table_report, TableOptions, TABLES};
use super::CliError;
use crate::algebra::{format_poly, parse_scalar, Scalar};
use crate::crconfig::{incidence_matrix, jail_decompositions, quartic_kernel};
use crate::groups::{all_perms, classify_subgroup, display_name, subgroup_classes};
use crate::report::CheckReport;
use crate::reps::{a5_irreps, classes_with_rank, sn_irreps, Action, ClassFunction, Variety};
use crate::varieties::{
    component_action, conic_fiber, fiber_involution, orbit_catalog, orbit_singularities, singular_parameter, wiman_edge_singular_params, LinePair,
};

#[derive(Parser, Debug)]
#[command(name = "coble", version, about = "Exact checks on the S6-symmetric quartic threefolds and the Coble fourfold")]
struct Cli {
    /// Also write the JSON lines to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for `verify` (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: Option<u32>,
    /// Per-check progress on stderr.
    #[arg(short, long, global = true, action = ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run named checks (default: all).
    Verify {
        names: Vec<String>,
        /// Print the registered check names and exit.
        #[arg(long)]
        list: bool,
    },
    /// Recompute a table and compare it with the expected rows.
    Table {
        /// Table id; `list` prints the ids.
        id: String,
        #[arg(long)]
        action: Option<String>,
        #[arg(long)]
        variety: Option<String>,
    },
    /// Catalog orbits singular on X_t.
    SingularLocus {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// The special orbits and the parameter at which each is singular.
    Orbits,
    /// The Cremona-Richmond configuration.
    Cr(CrArgs),
    /// Subgroup classes whose invariant class-group rank is `rank`.
    Subgroups {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        rank: u32,
        #[arg(long)]
        variety: String,
        #[arg(long, default_value = "natural")]
        action: String,
    },
    /// The conic fiber of the Verra bundle over `u` at parameter `tau`.
    Conic {
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        /// Point of P2, colon- or comma-separated.
        #[arg(long)]
        u: String,
    },
    /// The Wiman-Edge pencil.
    WimanEdge {
        #[arg(long, required = true)]
        singular_members: bool,
    },
    /// Character tables.
    Characters {
        #[arg(long)]
        group: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = true)]
struct CrArgs {
    /// Run the configuration checks (`all` or a check name).
    #[arg(long, num_args = 0..=1, default_missing_value = "all", value_name = "NAME")]
    check: Option<String>,
    /// The ten jail decompositions.
    #[arg(long)]
    decompositions: bool,
    /// Kernel of the quartics singular along the lines.
    #[arg(long)]
    kernel: bool,
    /// The 15 x 15 point-line incidence matrix.
    #[arg(long)]
    incidence: bool,
}

const CR_SUITE: &[&str] = &["cremona-richmond"];
const CR_EXTRA: &[&str] = &["q_infinity_meets_cr_lines"];

/// Output of one command: JSON lines plus whether everything passed.
struct Outcome {
    lines: Vec<String>,
    passed: bool,
    summary: Option<String>,
}

impl Outcome {
    fn single(v: Value) -> Self {
        Outcome { lines: vec![v.to_string()], passed: true, summary: None }
    }
}

/// Parses a point given as colon- or comma-separated exact scalars.
/// The whole point may be wrapped in one pair of parentheses.
pub fn parse_point(s: &str) -> Result<Vec<Scalar>, CliError> {
    let split = |s: &str| -> Result<Vec<Scalar>, CliError> {
        let sep = if s.contains(':') { ':' } else { ',' };
        s.split(sep).map(|x| parse_scalar(x.trim()).map_err(CliError::from)).collect()
    };
    let s = s.trim();
    match split(s) {
        Err(e) => s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).map_or(Err(e.clone()), |t| split(t).map_err(|_| e)),
        ok => ok,
    }
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn line_pair_json(p: &LinePair) -> Value {
    json!({
        "field": p.field,
        "scalar": p.scalar.to_string(),
        "lines": [strings(&p.lines[0]), strings(&p.lines[1])],
        "point": strings(&p.point),
    })
}

fn character_table(group: &str) -> Result<Value, CliError> {
    let irreps: Vec<(String, ClassFunction)> = match group {
        "S6" => sn_irreps(6),
        "S5" => sn_irreps(5),
        "A5" => a5_irreps(),
        _ => return Err(CliError::Usage(format!("unknown group {group:?} (expected S6, S5 or A5)"))),
    };
    let g = irreps[0].1.group().clone();
    let perms = all_perms();
    let mut classes = g.conjugacy_classes();
    for c in &mut classes {
        c.sort_unstable();
    }
    classes.sort_by_key(|c| (perms[c[0]].order(), c.len(), c[0]));
    let cols: Vec<Value> = classes
        .iter()
        .map(|c| json!({ "representative": perms[c[0]].to_string(), "size": c.len() }))
        .collect();
    let rows: Vec<Value> = irreps
        .iter()
        .map(|(label, chi)| {
            let values: Vec<String> =
                classes.iter().map(|c| chi.at(c[0]).map_or_else(|| "?".into(), |x| x.to_string())).collect();
            json!({ "irrep": label, "values": values })
        })
        .collect();
    Ok(json!({ "group": group, "order": g.order(), "classes": cols, "characters": rows }))
}

fn checks_outcome(reports: &[CheckReport], verbose: u8, err: &mut dyn Write) -> Outcome {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    if verbose > 0 {
        for r in reports {
            let _ = writeln!(err, "{} {} ({:.0} ms)", if r.passed { "PASS" } else { "FAIL" }, r.name, r.elapsed_ms);
        }
    }
    let mut summary = format!("{}/{} checks passed", reports.len() - failed.len(), reports.len());
    if !failed.is_empty() {
        summary.push_str(&format!("; failed: {}", failed.join(", ")));
    }
    Outcome { lines: reports.iter().map(CheckReport::json_line).collect(), passed: failed.is_empty(), summary: Some(summary) }
}

fn jobs_or_default(jobs: Option<u32>) -> usize {
    jobs.map(|j| j as usize).unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let jobs = jobs_or_default(cli.jobs);
    match &cli.command {
        Command::Verify { names, list } => {
            if *list {
                let lines = registry().iter().map(|e| json!({ "name": e.name, "suite": e.suite }).to_string()).collect();
                return Ok(Outcome { lines, passed: true, summary: None });
            }
            let checks = select(names)?;
            let reports = run_checks(&checks, cli.seed, jobs)?;
            Ok(checks_outcome(&reports, cli.verbose, err))
        }
        Command::Table { id, action, variety } => {
            if id == "list" {
                let lines = TABLES.iter().map(|(id, title)| json!({ "table": id, "title": title }).to_string()).collect();
                return Ok(Outcome { lines, passed: true, summary: None });
            }
            if !TABLES.iter().any(|(t, _)| t == id) {
                let known: Vec<&str> = TABLES.iter().map(|(t, _)| *t).collect();
                return Err(CliError::Usage(format!("unknown table id {id:?}; known: {}", known.join(", "))));
            }
            let opts = TableOptions {
                action: action.as_deref().map(Action::parse).transpose()?,
                variety: variety.as_deref().map(Variety::parse).transpose()?,
            };
            let t = table_report(id, &opts)?;
            let summary = format!("table {}: {}", t.table, if t.matched { "matches" } else { "MISMATCH" });
            let passed = t.matched;
            let line = serde_json::to_string(&t).map_err(|e| CliError::Io(e.to_string()))?;
            Ok(Outcome { lines: vec![line], passed, summary: Some(summary) })
        }
        Command::SingularLocus { t } => {
            let t = parse_scalar(t)?;
            if !t.is_rational() {
                return Err(CliError::Usage(format!("t = {t} is not rational")));
            }
            let statuses = orbit_singularities(&t)?;
            let singular: Vec<&str> = statuses.iter().filter(|s| s.singular > 0).map(|s| s.orbit).collect();
            Ok(Outcome::single(json!({ "t": t.to_string(), "orbits": statuses, "singular_orbits": singular })))
        }
        Command::Orbits => {
            let cat = orbit_catalog();
            let mut orbits = Vec::new();
            for o in &cat.orbits {
                let p = singular_parameter(&o.representative)?;
                orbits.push(json!({
                    "name": o.name,
                    "size": o.points.len(),
                    "representative": o.representative.to_string(),
                    "singular_where": if p.is_zero() { "all t".to_string() } else { p.display("t") },
                }));
            }
            Ok(Outcome::single(json!({ "orbits": orbits, "total_points": cat.total_points() })))
        }
        Command::Cr(args) => {
            let mut lines = Vec::new();
            let mut passed = true;
            let mut summary = None;
            if let Some(which) = &args.check {
                let cr: Vec<_> = registry()
                    .iter()
                    .filter(|e| CR_SUITE.contains(&e.suite) || CR_EXTRA.contains(&e.name))
                    .copied()
                    .collect();
                let chosen: Vec<_> = if which == "all" {
                    cr
                } else {
                    let c: Vec<_> = cr.into_iter().filter(|e| e.name == which).collect();
                    if c.is_empty() {
                        return Err(CliError::UnknownCheck(which.clone()));
                    }
                    c
                };
                let reports = run_checks(&chosen, cli.seed, jobs)?;
                let o = checks_outcome(&reports, cli.verbose, err);
                lines.extend(o.lines);
                passed = o.passed;
                summary = o.summary;
            }
            if args.decompositions {
                lines.push(json!({ "decompositions": jail_decompositions() }).to_string());
            }
            if args.kernel {
                let mut rows = Vec::new();
                for dropped in 0..4 {
                    let kept: Vec<usize> = (dropped..15).collect();
                    let (dim, gen) = quartic_kernel(&kept);
                    rows.push(json!({ "lines": kept.len(), "dimension": dim, "generator": gen.as_ref().map(format_poly) }));
                }
                lines.push(json!({ "kernel": rows }).to_string());
            }
            if args.incidence {
                lines.push(json!({ "incidence": incidence_matrix() }).to_string());
            }
            Ok(Outcome { lines, passed, summary })
        }
        Command::Subgroups { rank, variety, action } => {
            let v = Variety::parse(variety)?;
            let a = Action::parse(action)?;
            let classes = classes_with_rank(v, a, *rank)?;
            let rows: Vec<Value> = classes
                .iter()
                .map(|&k| {
                    let c = &subgroup_classes()[k];
                    let info = classify_subgroup(&c.rep);
                    json!({
                        "class": k,
                        "name": display_name(k),
                        "names": info.names,
                        "order": info.order,
                        "conjugates": c.size,
                        "census": c.rep.census_label(),
                    })
                })
                .collect();
            Ok(Outcome::single(json!({
                "variety": v.id(), "action": a, "rank": rank, "count": rows.len(), "classes": rows,
            })))
        }
        Command::Conic { tau, u } => {
            let tau = parse_scalar(tau)?;
            let u = parse_point(u)?;
            let f = conic_fiber(&tau, &u)?;
            let matrix: Vec<Vec<String>> = (0..f.matrix.rows()).map(|i| strings(&f.matrix.row(i))).collect();
            Ok(Outcome::single(json!({
                "tau": tau.to_string(),
                "u": strings(&u),
                "matrix": matrix,
                "rank": f.rank,
                "factors": f.factors.as_ref().map(line_pair_json),
                "involution_on_lines": component_action(&fiber_involution(), &f).ok(),
            })))
        }
        Command::WimanEdge { .. } => {
            let locus = wiman_edge_singular_params()?;
            let passed = locus.unconfirmed.is_empty();
            Ok(Outcome { lines: vec![json!({ "singular_members": locus }).to_string()], passed, summary: None })
        }
        Command::Characters { group } => Ok(Outcome::single(character_table(group)?)),
    }
}

fn write_lines(out: &mut dyn Write, lines: &[String]) -> std::io::Result<()> {
    for l in lines {
        writeln!(out, "{l}")?;
    }
    out.flush()
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let outcome = match execute(&cli, err) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return e.exit_code();
        }
    };
    if let Err(e) = write_lines(out, &outcome.lines) {
        let _ = writeln!(err, "error: writing output: {e}");
        return 2;
    }
    if let Some(path) = &cli.json {
        let written = std::fs::File::create(path).and_then(|mut f| write_lines(&mut f, &outcome.lines));
        if let Err(e) = written {
            let _ = writeln!(err, "error: writing {}: {e}", path.display());
            return 2;
        }
    }
    if let Some(s) = &outcome.summary {
        let _ = writeln!(err, "{s}");
    }
    if outcome.passed {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(std::iter::once("coble").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&["verify", "no_such_check"]).0, 2);
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(run(&["table", "nope"]).0, 2);
        assert_eq!(run(&["subgroups", "--rank", "3", "--variety", "X_t"]).0, 2);
        assert_eq!(run(&["subgroups", "--rank", "1", "--variety", "X_1/2", "--action", "twisted"]).0, 2);
        assert_eq!(run(&["characters", "--group", "S7"]).0, 2);
        assert_eq!(run(&["conic", "--tau", "1", "--u", "0,0,0"]).0, 2);
        assert_eq!(run(&["cr"]).0, 2);
    }

    #[test]
    fn point_parsing() {
        assert_eq!(parse_point("0,1,1").unwrap(), parse_point("(0:1:1)").unwrap());
        assert_eq!(parse_point("1/2:sqrt(5):-1").unwrap().len(), 3);
        assert!(parse_point("1,x").is_err());
    }

    #[test]
    fn conic_at_special_point() {
        let (code, out, _) = run(&["conic", "--tau", "0", "--u", "0:1:1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["rank"], 2);
        assert!(v["factors"].is_object());
        assert_eq!(v["involution_on_lines"], "fixes");
        let (_, out, _) = run(&["conic", "--tau", "1", "--u", "0,1,1"]);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["involution_on_lines"], "swaps");
    }

    #[test]
    fn singular_locus_at_seven_tenths() {
        let (code, out, _) = run(&["singular-locus", "--t", "7/10"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["singular_orbits"], json!(["Sigma6", "Sigma30"]));
    }

    #[test]
    fn twisted_rank_one_row_has_16_classes() {
        let (code, out, _) = run(&["table", "rank1-subgroups", "--action", "twisted"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["rows"][0]["computed"].as_array().unwrap().len(), 16);
    }

    #[test]
    fn character_tables() {
        for (g, n) in [("S6", 11), ("S5", 7), ("A5", 5)] {
            let (code, out, _) = run(&["characters", "--group", g]);
            assert_eq!(code, 0);
            let v: Value = serde_json::from_str(out.trim()).unwrap();
            assert_eq!(v["characters"].as_array().unwrap().len(), n);
            assert_eq!(v["classes"].as_array().unwrap().len(), n);
        }
    }

    #[test]
    fn cr_outputs() {
        let (code, out, _) = run(&["cr", "--decompositions", "--incidence"]);
        assert_eq!(code, 0);
        let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(lines[0]["decompositions"].as_array().unwrap().len(), 10);
        assert_eq!(lines[1]["incidence"].as_array().unwrap().len(), 15);
        assert_eq!(run(&["cr", "--check", "cr_self_duality"]).0, 0);
        assert_eq!(run(&["cr", "--check", "burkhardt_factorization"]).0, 2);
    }
}

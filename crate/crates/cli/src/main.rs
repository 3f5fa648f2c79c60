//! `powergraph` command-line front end.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when any
//! verified claim fails.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use powergraph::connectivity::vertex_connectivity;
use powergraph::graph::{components, power_graph, proper_power_graph, Graph};
use powergraph::group::FiniteGroup;
use powergraph::groupspec::parse_group_spec;
use powergraph::pgroup::{classify_eigenvalues, decompose, tree_charpoly, Form};
use powergraph::spectra::{
    algebraic_connectivity, spectral_radius, spectral_radius_multiplicity, spectrum, Spectrum,
};
use powergraph::verify::{
    run_claim_family, scan_conjecture, ClaimReport, SuiteConfig, Verdict, CLAIM_IDS,
};

#[derive(Parser)]
#[command(
    name = "powergraph",
    version,
    about = "Laplacian spectra of power graphs of finite groups"
)]
struct Cli {
    /// Accepted for scripting compatibility; every command is deterministic.
    #[arg(long, global = true)]
    seedless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Laplacian spectrum of a power graph.
    Spectrum {
        #[command(flatten)]
        group: GroupArgs,
        /// Drop the identity vertex.
        #[arg(long)]
        proper: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Join/union decomposition of a p-group power graph.
    Decompose {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check structural claims over parameter ranges.
    Verify {
        /// Claim family to run; repeatable.
        #[arg(long = "theorem", value_name = "ID")]
        theorems: Vec<String>,
        /// Run every claim family.
        #[arg(long)]
        all: bool,
        /// Upper bound for every range not set explicitly.
        #[arg(long, value_name = "N")]
        max: Option<usize>,
        #[arg(long, value_name = "N")]
        cyclic_max: Option<usize>,
        #[arg(long, value_name = "N")]
        dicyclic_max: Option<usize>,
        #[arg(long, value_name = "N")]
        pgroup_max: Option<usize>,
        #[arg(long, value_name = "N")]
        scan_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Integrality conjecture scan over cyclic groups.
    Scan {
        #[arg(long, value_name = "N", default_value_t = 200)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Group and power-graph summary with per-element data.
    Info {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Group spec: zn:<n>, qn:<n>, gq:<alpha>, prod:<a>x<b>[x...], table:<path>.
    #[arg(value_name = "GROUP")]
    spec: Option<String>,
    #[arg(long = "group", value_name = "SPEC", conflicts_with = "spec")]
    group: Option<String>,
    /// Multiplication table file.
    #[arg(long, value_name = "PATH", conflicts_with_all = ["spec", "group"])]
    table: Option<String>,
}

impl GroupArgs {
    fn resolve(&self) -> Result<FiniteGroup, String> {
        let spec = match (&self.spec, &self.group, &self.table) {
            (Some(s), _, _) | (_, Some(s), _) => s.clone(),
            (_, _, Some(path)) => format!("table:{path}"),
            _ => return Err("a group is required (GROUP, --group or --table)".into()),
        };
        parse_group_spec(&spec).map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

enum Failure {
    Usage(String),
    Claims(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Claims(out)) => {
            print!("{out}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Spectrum {
            group,
            proper,
            format,
        } => {
            let g = group.resolve().map_err(Failure::Usage)?;
            let graph = if proper {
                proper_power_graph(&g).map_err(|e| Failure::Usage(e.to_string()))?
            } else {
                power_graph(&g)
            };
            spectrum_output(&g, &graph, proper, format).map_err(Failure::Usage)
        }
        Command::Decompose { group, format } => {
            let g = group.resolve().map_err(Failure::Usage)?;
            decompose_output(&g, format).map_err(Failure::Usage)
        }
        Command::Verify {
            theorems,
            all,
            max,
            cyclic_max,
            dicyclic_max,
            pgroup_max,
            scan_max,
            format,
        } => {
            let defaults = SuiteConfig::default();
            let config = SuiteConfig {
                cyclic_max: range_flag("--cyclic-max", cyclic_max.or(max), defaults.cyclic_max)?,
                dicyclic_max: range_flag(
                    "--dicyclic-max",
                    dicyclic_max.or(max),
                    defaults.dicyclic_max,
                )?,
                pgroup_max: range_flag("--pgroup-max", pgroup_max.or(max), defaults.pgroup_max)?,
                scan_max: range_flag("--scan-max", scan_max.or(max), defaults.scan_max)?,
            };
            let ids: Vec<String> = if all {
                CLAIM_IDS.iter().map(|s| s.to_string()).collect()
            } else if theorems.is_empty() {
                return Err(Failure::Usage(
                    "verify needs --theorem <ID> or --all".into(),
                ));
            } else {
                theorems
            };
            let mut reports = Vec::new();
            for id in &ids {
                let family = run_claim_family(id, &config).ok_or_else(|| {
                    Failure::Usage(format!(
                        "--theorem: unknown claim `{id}` (expected one of {})",
                        CLAIM_IDS.join(", ")
                    ))
                })?;
                reports.extend(family);
            }
            let out = verify_output(&reports, format);
            if reports.iter().any(|r| r.verdict.is_fail()) {
                Err(Failure::Claims(out))
            } else {
                Ok(out)
            }
        }
        Command::Scan { max, format } => {
            range_flag("--max", Some(max), max)?;
            let scan = scan_conjecture(max).map_err(|e| Failure::Usage(e.to_string()))?;
            let out = match format {
                Format::Json => json_line(&scan.to_json()),
                Format::Tsv => scan.tsv(),
                Format::Text => {
                    let mut s = String::new();
                    let _ = writeln!(s, "scanned n = 2..{max}: {} rows", scan.rows.len());
                    let _ = writeln!(s, "failures (distinct primes): {:?}", scan.failures_strict);
                    let _ = writeln!(
                        s,
                        "failures (primes may coincide): {:?}",
                        scan.failures_loose
                    );
                    s
                }
            };
            if scan.failures_strict.is_empty() {
                Ok(out)
            } else {
                Err(Failure::Claims(out))
            }
        }
        Command::Info { group, format } => {
            let g = group.resolve().map_err(Failure::Usage)?;
            info_output(&g, format).map_err(Failure::Usage)
        }
    }
}

fn range_flag(flag: &str, value: Option<usize>, default: usize) -> Result<usize, Failure> {
    let v = value.unwrap_or(default);
    if v < 2 {
        return Err(Failure::Usage(format!(
            "{flag} must be at least 2, got {v}"
        )));
    }
    Ok(v)
}

fn json_line(v: &Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("json serializes")
    )
}

fn charpoly_text(s: &Spectrum) -> String {
    match s.as_exact() {
        Some(p) => p.to_string(),
        None => {
            let numeric: Vec<String> = s
                .numeric_part()
                .iter()
                .map(|x| format!("{x:.10}"))
                .collect();
            format!(
                "{} * numeric roots [{}]",
                s.exact_part(),
                numeric.join(", ")
            )
        }
    }
}

fn spectrum_output(
    g: &FiniteGroup,
    graph: &Graph,
    proper: bool,
    format: Format,
) -> Result<String, String> {
    let s = spectrum(graph);
    let err = |e: powergraph::Error| e.to_string();
    Ok(match format {
        Format::Json => {
            let mut doc = json!({
                "group": g.label(),
                "order": g.order(),
                "graph": if proper { "proper" } else { "power" },
                "vertices": graph.vertex_count(),
                "edges": graph.edge_count(),
                "charpoly": charpoly_text(&s),
                "spectrum": s,
            });
            if graph.vertex_count() >= 2 {
                doc["algebraic_connectivity"] = json!(algebraic_connectivity(&s).map_err(err)?);
                doc["spectral_radius"] = json!(spectral_radius(&s).map_err(err)?);
                doc["radius_multiplicity"] = json!(spectral_radius_multiplicity(&s).map_err(err)?);
            }
            json_line(&doc)
        }
        Format::Tsv => {
            let mut out = String::from("eigenvalue\tmultiplicity\n");
            let values = s.values();
            let mut i = 0;
            while i < values.len() {
                let mut j = i + 1;
                while j < values.len() && values[j] == values[i] {
                    j += 1;
                }
                let _ = writeln!(out, "{}\t{}", values[i], j - i);
                i = j;
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "{} ({} vertices, {} edges)",
                g.label(),
                graph.vertex_count(),
                graph.edge_count()
            );
            let _ = writeln!(out, "{}", charpoly_text(&s));
            let _ = writeln!(out, "{}", s.table());
            if graph.vertex_count() >= 2 {
                let _ = writeln!(
                    out,
                    "algebraic connectivity: {}",
                    algebraic_connectivity(&s).map_err(err)?
                );
                let _ = writeln!(
                    out,
                    "spectral radius: {} (multiplicity {})",
                    spectral_radius(&s).map_err(err)?,
                    spectral_radius_multiplicity(&s).map_err(err)?
                );
            }
            let _ = writeln!(out, "laplacian integral: {}", s.is_laplacian_integral());
            out
        }
    })
}

fn decompose_output(g: &FiniteGroup, format: Format) -> Result<String, String> {
    let tree = decompose(g).map_err(|e| e.to_string())?;
    let charpoly = tree_charpoly(&tree).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Json => json_line(&json!({
            "group": g.label(),
            "expression": tree.to_string(),
            "charpoly": charpoly.to_string(),
            "tree": tree.to_json(),
        })),
        Format::Tsv => {
            let mut out = String::from("element\tlabel\torder\tup_size\tvertices\tchildren\n");
            for node in tree.nodes() {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    node.element,
                    node.label,
                    node.order,
                    node.up_size,
                    node.vertex_count(),
                    node.children().len()
                );
            }
            out
        }
        Format::Text => format!("{tree}\n{charpoly}\n"),
    })
}

fn verify_output(reports: &[ClaimReport], format: Format) -> String {
    let failed = reports.iter().filter(|r| r.verdict.is_fail()).count();
    match format {
        Format::Json => json_line(&json!({
            "reports": reports,
            "total": reports.len(),
            "failed": failed,
        })),
        Format::Tsv => {
            let mut out = String::from("claim\tparams\tverdict\twitness\n");
            for r in reports {
                let witness = match &r.verdict {
                    Verdict::Pass => "",
                    Verdict::Fail { witness } => witness,
                    Verdict::Inapplicable { reason } => reason,
                };
                let params = serde_json::to_string(&r.params).expect("params serialize");
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    r.claim,
                    params,
                    r.verdict.name(),
                    witness
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                let params = serde_json::to_string(&r.params).expect("params serialize");
                let line = match &r.verdict {
                    Verdict::Pass => format!("PASS {} {params}", r.claim),
                    Verdict::Fail { witness } => format!("FAIL {} {params}: {witness}", r.claim),
                    Verdict::Inapplicable { reason } => {
                        format!("SKIP {} {params}: {reason}", r.claim)
                    }
                };
                let _ = writeln!(out, "{line}");
            }
            let _ = writeln!(out, "{} reports, {failed} failed", reports.len());
            out
        }
    }
}

fn info_output(g: &FiniteGroup, format: Format) -> Result<String, String> {
    let graph = power_graph(g);
    let cut = vertex_connectivity(&graph);
    let proper_components = proper_power_graph(g).map(|p| components(&p).len()).ok();
    let prime = g.is_p_group();
    let mut elements = Vec::with_capacity(g.order());
    for x in g.elements() {
        let info = g.element_info(x).map_err(|e| e.to_string())?;
        let up = g.up_set(x).map_err(|e| e.to_string())?;
        elements.push(json!({
            "element": x,
            "label": g.element_label(x),
            "order": info.order,
            "class_size": info.eq_class.len(),
            "up_size": up.len(),
            "degree": graph.degree(x),
        }));
    }
    let forms = if prime.is_some() {
        let s = spectrum(&graph);
        classify_eigenvalues(g, &s).ok()
    } else {
        None
    };
    let summary = json!({
        "group": g.label(),
        "order": g.order(),
        "cyclic": g.is_cyclic(),
        "p_group": prime,
        "generalized_quaternion": g.is_generalized_quaternion(),
        "edges": graph.edge_count(),
        "kappa": cut.size,
        "separating_set": cut.separating_set,
        "proper_components": proper_components,
    });
    Ok(match format {
        Format::Json => {
            let mut doc = summary;
            doc["elements"] = Value::Array(elements);
            if let Some(forms) = &forms {
                doc["eigenvalue_forms"] = json!(forms);
            }
            json_line(&doc)
        }
        Format::Tsv => {
            let mut out = String::from("element\tlabel\torder\tclass_size\tup_size\tdegree\n");
            for e in &elements {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    e["element"],
                    e["label"].as_str().unwrap_or(""),
                    e["order"],
                    e["class_size"],
                    e["up_size"],
                    e["degree"]
                );
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "group: {} (order {})", g.label(), g.order());
            let _ = writeln!(out, "cyclic: {}", g.is_cyclic());
            match prime {
                Some(p) => {
                    let _ = writeln!(out, "p-group: p = {p}");
                }
                None => {
                    let _ = writeln!(out, "p-group: no");
                }
            }
            let _ = writeln!(
                out,
                "generalized quaternion: {}",
                g.is_generalized_quaternion()
            );
            let _ = writeln!(out, "power graph edges: {}", graph.edge_count());
            let _ = writeln!(
                out,
                "vertex connectivity: {} via {:?}",
                cut.size, cut.separating_set
            );
            if let Some(c) = proper_components {
                let _ = writeln!(out, "proper power graph components: {c}");
            }
            if let Some(forms) = &forms {
                for f in forms {
                    let form = match f.form {
                        Form::Zero => "zero".to_string(),
                        Form::OrderOf(e) => format!("o({})", g.element_label(e)),
                        Form::UhatPlusOrder(e) => {
                            let l = g.element_label(e);
                            format!("|U^({l})| + o({l})")
                        }
                        Form::Unclassified => "unclassified".to_string(),
                    };
                    let _ = writeln!(out, "eigenvalue {} (x{}): {form}", f.value, f.multiplicity);
                }
            }
            out
        }
    })
}

//! Pipeline driver behind the `extq` binary.

use std::fmt::Write as _;

use serde_json::{json, Value};
use thiserror::Error;

use extq_core::bernstein::{centralizer_subdatum, check_condition_cc, iwahori_datum, BernsteinDatum, BernsteinError};
use extq_core::extquot::extended_quotient;
use extq_core::lpackets::packets_by_fiber;
use extq_core::parameters::{mu_tilde_report, MuTildeAssignment, MuTildeOptions, ParamError};
use extq_core::rootdata::{build_root_datum, recognize_components, CartanType, RootDataError};
use extq_core::torus::TorusPoint;
use extq_core::unipotent::{springer_correspondence, unipotent_classes, UnipotentError};

/// Version of the report layout described by `schemas/report.schema.json`.
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    Extquot,
    Unipotents,
    Springer,
    Bijection,
    Lpackets,
    CheckCc,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::Extquot,
        Command::Unipotents,
        Command::Springer,
        Command::Bijection,
        Command::Lpackets,
        Command::CheckCc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Extquot => "extquot",
            Command::Unipotents => "unipotents",
            Command::Springer => "springer",
            Command::Bijection => "bijection",
            Command::Lpackets => "lpackets",
            Command::CheckCc => "check-cc",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Config(format!("unknown command `{s}`; expected one of extquot, unipotents, springer, bijection, lpackets, check-cc")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub datum: String,
    /// Generators of the image of `c^s`, as fraction vectors such as `1/2,0`.
    pub gens: Vec<String>,
    pub commands: Vec<Command>,
    pub torsion_bound: u32,
    /// Residual characteristic for `check-cc`.
    pub p: Option<u64>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(datum: &str, commands: Vec<Command>) -> Self {
        RunConfig {
            datum: datum.to_string(),
            gens: Vec::new(),
            commands,
            torsion_bound: 4,
            p: None,
            format: Format::Json,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Bernstein(#[from] BernsteinError),
    #[error(transparent)]
    Unipotent(#[from] UnipotentError),
    #[error(transparent)]
    Param(#[from] ParamError),
}

impl CliError {
    /// 2 for bad input, 3 for failed computations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::RootData(e) | CliError::Bernstein(BernsteinError::RootData(e)) => root_data_code(e),
            CliError::Bernstein(_) => 2,
            CliError::Unipotent(UnipotentError::UnsupportedType(_)) => 2,
            CliError::Unipotent(_) | CliError::Param(_) => 3,
        }
    }
}

fn root_data_code(e: &RootDataError) -> i32 {
    match e {
        RootDataError::Parse(_) | RootDataError::UnsupportedType(_) => 2,
        _ => 3,
    }
}

/// A finished run: the document and the exit status it implies.
#[derive(Clone, Debug)]
pub struct Report {
    pub document: Value,
    /// Invariant failures found (exit status 4 when nonempty).
    pub violations: Vec<String>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.violations.is_empty() {
            0
        } else {
            4
        }
    }
}

pub fn validate(config: &RunConfig) -> Result<(), CliError> {
    if config.torsion_bound < 1 {
        return Err(CliError::Config("--torsion-bound must be at least 1".into()));
    }
    if config.commands.is_empty() {
        return Err(CliError::Config("no command given; use --cmd".into()));
    }
    if config.commands.contains(&Command::CheckCc) && config.p.is_none() {
        return Err(CliError::Config("check-cc needs a residual characteristic, pass --p".into()));
    }
    Ok(())
}

pub fn build_datum(config: &RunConfig) -> Result<BernsteinDatum, CliError> {
    let rd = build_root_datum(&config.datum)?;
    if config.gens.is_empty() {
        return Ok(iwahori_datum(&rd)?);
    }
    let gens = config
        .gens
        .iter()
        .map(|g| {
            TorusPoint::parse_torsion(g)
                .ok_or_else(|| CliError::Config(format!("cannot parse generator `{g}`; write fractions like 1/2,0")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(centralizer_subdatum(&rd, &gens)?)
}

fn cartan_types(d: &BernsteinDatum) -> Vec<CartanType> {
    recognize_components(&d.h).into_iter().map(|c| c.cartan).collect()
}

fn bijection_violations(a: &MuTildeAssignment) -> Vec<String> {
    let mut v: Vec<String> = a
        .failed_fibers()
        .map(|f| format!("no assignment over {}: {}", f.t0.display(), f.failure.as_deref().unwrap_or_default()))
        .collect();
    v.extend(a.inconsistencies.iter().map(|i| {
        format!(
            "label inconsistency over {}: component {} is {} but gets {}",
            i.t0, i.component, i.component_label, i.param_label
        )
    }));
    v
}

/// Runs every requested command in a fixed order.
pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    validate(config)?;
    let datum = build_datum(config)?;
    let opts = MuTildeOptions { torsion_bound: config.torsion_bound };
    let mut commands = config.commands.clone();
    commands.sort();
    commands.dedup();
    let mut results = serde_json::Map::new();
    let mut violations = Vec::new();
    let mut mu: Option<MuTildeAssignment> = None;
    for cmd in commands {
        let value = match cmd {
            Command::Extquot => {
                let comps = extended_quotient(&datum.ws);
                json!({"count": comps.len(), "components": comps.iter().map(|c| c.to_json()).collect::<Vec<_>>()})
            }
            Command::Unipotents => {
                let classes = unipotent_classes(&datum.h)?;
                json!({"classes": classes.iter().map(|c| c.to_json()).collect::<Vec<_>>()})
            }
            Command::Springer => springer_correspondence(&datum.h)?.to_json(),
            Command::Bijection | Command::Lpackets => {
                if mu.is_none() {
                    let a = mu_tilde_report(&datum, opts)?;
                    violations.extend(bijection_violations(&a));
                    mu = Some(a);
                }
                let a = mu.as_ref().expect("computed above");
                if cmd == Command::Bijection {
                    a.to_json()
                } else {
                    let (fibers, skipped) = packets_by_fiber(&datum.ws, a);
                    json!({
                        "fibers": fibers.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
                        "skipped": skipped.iter().map(|(t, e)| json!({"t0": t.display(), "reason": e.to_string()})).collect::<Vec<_>>(),
                    })
                }
            }
            Command::CheckCc => {
                let p = config.p.expect("validated");
                check_condition_cc(&cartan_types(&datum), p)?.to_json()
            }
        };
        results.insert(cmd.name().to_string(), value);
    }
    let document = json!({
        "version": REPORT_VERSION,
        "datum": {
            "descriptor": config.datum,
            "id": datum.id,
            "generators": config.gens,
            "weyl_order": datum.ws.order(),
            "types": cartan_types(&datum).iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        },
        "torsion_bound": config.torsion_bound,
        "results": Value::Object(results),
        "violations": violations,
    });
    Ok(Report { document, violations })
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn table(out: &mut String, headers: &[&str], rows: impl IntoIterator<Item = Vec<String>>) {
    let _ = writeln!(out, "| {} |", headers.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(headers.len()));
    for r in rows {
        let _ = writeln!(out, "| {} |", r.join(" | "));
    }
    out.push('\n');
}

/// Markdown rendering of a report document.
pub fn render_table(doc: &Value) -> String {
    let mut out = String::new();
    let d = &doc["datum"];
    let _ = writeln!(out, "# {} (W^s of order {})\n", cell(&d["id"]), d["weyl_order"]);
    let r = &doc["results"];
    if let Some(x) = r.get("extquot") {
        out.push_str("## Extended quotient\n\n");
        table(
            &mut out,
            &["id", "w", "dim", "base point"],
            x["components"].as_array().into_iter().flatten().map(|c| {
                vec![cell(&c["id"]), cell(&c["weyl_class_word"]), cell(&c["dim"]), cell(&c["base_point"])]
            }),
        );
    }
    if let Some(x) = r.get("unipotents") {
        out.push_str("## Unipotent classes\n\n");
        table(
            &mut out,
            &["class", "weights", "h_x", "A_x", "dim B_x"],
            x["classes"].as_array().into_iter().flatten().map(|c| {
                vec![cell(&c["name"]), cell(&c["weighted_dynkin"]), cell(&c["h_x"]), cell(&c["A_x"]), cell(&c["dim_Bx"])]
            }),
        );
    }
    if let Some(x) = r.get("springer") {
        out.push_str("## Springer correspondence\n\n");
        table(
            &mut out,
            &["class", "rho1", "Weyl character"],
            x["rows"].as_array().into_iter().flatten().map(|row| {
                vec![cell(&row["class"]), cell(&row["rho1"]), cell(&row["weyl_char"])]
            }),
        );
    }
    if let Some(x) = r.get("bijection") {
        out.push_str("## Bijection\n\n");
        let mut rows = Vec::new();
        for f in x["fibers"].as_array().into_iter().flatten() {
            for p in f["assignments"].as_array().into_iter().flatten() {
                let param = &p["param"];
                rows.push(vec![
                    cell(&f["t0"]),
                    cell(&p["component"]),
                    cell(&param["x"]),
                    cell(&param["rho1"]),
                    cell(&param["label"]),
                    cell(&p["label_ok"]),
                ]);
            }
        }
        table(&mut out, &["t0", "component", "x", "rho1", "label", "label ok"], rows);
    }
    if let Some(x) = r.get("lpackets") {
        out.push_str("## L-packets\n\n");
        let mut rows = Vec::new();
        for f in x["fibers"].as_array().into_iter().flatten() {
            for (i, p) in f["packets"].as_array().into_iter().flatten().enumerate() {
                let members: Vec<String> = p["points"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .map(|m| format!("[{}, c{}]", cell(&m["w"]), cell(&m["component"])))
                    .collect();
                rows.push(vec![cell(&f["t0"]), i.to_string(), cell(&p["key"]["label"]), cell(&p["key"]["h"]), members.join(" ")]);
            }
        }
        table(&mut out, &["t0", "packet", "label", "h", "points"], rows);
    }
    if let Some(x) = r.get("check-cc") {
        out.push_str("## Residual characteristic\n\n");
        let _ = writeln!(out, "ok: {}\n", x["ok"]);
        table(
            &mut out,
            &["factor", "excluded p"],
            x["violations"].as_array().into_iter().flatten().map(|v| vec![cell(&v["type"]), cell(&v["p"])]),
        );
    }
    if let Some(v) = doc["violations"].as_array().filter(|v| !v.is_empty()) {
        out.push_str("## Violations\n\n");
        for x in v {
            let _ = writeln!(out, "- {}", cell(x));
        }
    }
    out
}

/// The report in the requested format, newline terminated.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.document).expect("serializable");
            s.push('\n');
            s
        }
        Format::Table => render_table(&report.document),
    }
}

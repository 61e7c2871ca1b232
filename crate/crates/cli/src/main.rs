//! Command-line front end: enumeration, characters, dimensions, fusion
//! tables, spectra, and verification reports as JSON or CSV.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on
//! usage errors, unparsable labels, or domain violations.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use sl3fusion::admissible::{dual_set, eigen_data, fusion_table};
use sl3fusion::checks::{suite, Check};
use sl3fusion::extring::{dimension, ext_character};
use sl3fusion::weyl::{enumerate_alcove, is_dominant};
use sl3fusion::AffineElement;

#[derive(Parser)]
#[command(
    name = "sl3fusion",
    version,
    about = "Extended sl(3) character ring and admissible fusion rules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List the admissible alcove C_p with twisted logs and dimensions.
    Alcove {
        #[arg(long)]
        p: i64,
        /// List the extended alcove (all three unit cosets) instead.
        #[arg(long)]
        extended: bool,
    },
    /// List the dual set E_p with signs and hyperplane annotations.
    Dual {
        #[arg(long)]
        p: i64,
    },
    /// Expand the character of a dominant element in ℤ[W̃].
    Character {
        /// Element label, e.g. "s121*t[-1,-1]".
        #[arg(long)]
        y: String,
    },
    /// Fusion multiplicities at shifted level 3/p.
    Fusion {
        #[arg(long)]
        p: i64,
        #[arg(long, required_unless_present = "all")]
        x: Option<String>,
        #[arg(long, required_unless_present = "all")]
        y: Option<String>,
        /// Emit the whole tensor instead of one product.
        #[arg(long)]
        all: bool,
    },
    /// Eigenvector matrix and eigenvalue lists of the fusion algebra.
    Spectrum {
        #[arg(long)]
        p: i64,
    },
    /// Run a named verification suite (group, ring, fusion, spectral, all).
    Verify {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        suite: String,
    },
}

#[derive(Serialize)]
struct CheckOut {
    name: String,
    status: String,
    max_defect: f64,
}

impl From<&Check> for CheckOut {
    fn from(c: &Check) -> Self {
        CheckOut {
            name: c.name.clone(),
            status: if c.pass { "pass" } else { "fail" }.to_string(),
            max_defect: c.max_defect,
        }
    }
}

#[derive(Serialize)]
struct Report {
    command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<i64>,
    payload: Value,
    checks: Vec<CheckOut>,
}

fn parse_element(label: &str) -> Result<AffineElement, sl3fusion::Error> {
    label.parse()
}

fn complex_pair(z: sl3fusion::Complex64) -> Value {
    json!([z.re, z.im])
}

fn cmd_alcove(p: i64, extended: bool) -> Result<Report, sl3fusion::Error> {
    let elements = if extended {
        sl3fusion::weyl::enumerate_extended_alcove(p)?
    } else {
        enumerate_alcove(p)?
    };
    let rows: Vec<Value> = elements
        .iter()
        .map(|y| {
            json!({
                "label": y.to_string(),
                "iota": y.twisted_log().to_string(),
                "dim": dimension(*y).expect("alcove elements are dominant"),
            })
        })
        .collect();
    Ok(Report {
        command: "alcove".into(),
        p: Some(p),
        payload: json!({ "count": rows.len(), "rows": rows }),
        checks: vec![],
    })
}

fn cmd_dual(p: i64) -> Result<Report, sl3fusion::Error> {
    let rows: Vec<Value> = dual_set(p)?
        .iter()
        .map(|d| {
            json!({
                "mu": d.mu.to_string(),
                "epsilon": d.epsilon,
                "hyperplane": d.on_hyperplane.map(|r| r.label()),
            })
        })
        .collect();
    Ok(Report {
        command: "dual".into(),
        p: Some(p),
        payload: json!({ "count": rows.len(), "rows": rows }),
        checks: vec![],
    })
}

fn cmd_character(label: &str) -> Result<Report, sl3fusion::Error> {
    let y = parse_element(label)?;
    if !is_dominant(y) {
        return Err(sl3fusion::Error::NotDominant(label.to_string()));
    }
    let chi = ext_character(y)?;
    let mut coeffs = Map::new();
    for (z, c) in chi.elem.iter() {
        coeffs.insert(z.to_string(), json!(c));
    }
    Ok(Report {
        command: "character".into(),
        p: None,
        payload: json!({
            "y": y.to_string(),
            "iota": y.twisted_log().to_string(),
            "dim": dimension(y)?,
            "coeffs": Value::Object(coeffs),
        }),
        checks: vec![],
    })
}

fn cmd_fusion(
    p: i64,
    x: Option<&str>,
    y: Option<&str>,
    all: bool,
) -> Result<Report, sl3fusion::Error> {
    let table = fusion_table(p)?;
    let payload = if all {
        let mut entries = Vec::new();
        for (xi, xl) in table.labels().iter().enumerate() {
            for (yi, yl) in table.labels().iter().enumerate() {
                for (zi, zl) in table.labels().iter().enumerate() {
                    let n = table.get(xi, yi, zi);
                    if n != 0 {
                        entries.push(json!([xl.to_string(), yl.to_string(), zl.to_string(), n]));
                    }
                }
            }
        }
        json!({ "size": table.size(), "entries": entries })
    } else {
        let xe = parse_element(x.expect("clap enforces presence"))?;
        let ye = parse_element(y.expect("clap enforces presence"))?;
        let xi = table
            .index_of(&xe)
            .ok_or_else(|| sl3fusion::Error::OutsideAdmissibleAlcove(xe.to_string(), p))?;
        let yi = table
            .index_of(&ye)
            .ok_or_else(|| sl3fusion::Error::OutsideAdmissibleAlcove(ye.to_string(), p))?;
        let mut product = Map::new();
        for (zi, zl) in table.labels().iter().enumerate() {
            let n = table.get(xi, yi, zi);
            if n != 0 {
                product.insert(zl.to_string(), json!(n));
            }
        }
        json!({
            "x": xe.to_string(),
            "y": ye.to_string(),
            "product": Value::Object(product),
        })
    };
    Ok(Report {
        command: "fusion".into(),
        p: Some(p),
        payload,
        checks: vec![],
    })
}

fn cmd_spectrum(p: i64) -> Result<Report, sl3fusion::Error> {
    let data = eigen_data(p)?;
    let labels: Vec<String> = data.labels.iter().map(|y| y.to_string()).collect();
    let dual: Vec<String> = data.dual.iter().map(|d| d.mu.to_string()).collect();
    let psi: Vec<Value> = data
        .psi
        .iter()
        .map(|row| Value::Array(row.iter().map(|&z| complex_pair(z)).collect()))
        .collect();
    let eigenvalues: Vec<Value> = data
        .chi
        .iter()
        .map(|row| Value::Array(row.iter().map(|&z| complex_pair(z)).collect()))
        .collect();
    Ok(Report {
        command: "spectrum".into(),
        p: Some(p),
        payload: json!({
            "labels": labels,
            "dual": dual,
            "psi_one": data.psi_one,
            "psi": psi,
            "eigenvalues": eigenvalues,
        }),
        checks: vec![],
    })
}

fn cmd_verify(p: i64, name: &str) -> Result<Report, sl3fusion::Error> {
    let checks = suite(name, p)?;
    let outs: Vec<CheckOut> = checks.iter().map(CheckOut::from).collect();
    Ok(Report {
        command: "verify".into(),
        p: Some(p),
        payload: json!({ "suite": name }),
        checks: outs,
    })
}

fn quote(field: &str) -> String {
    format!("\"{field}\"")
}

fn to_csv(report: &Report) -> String {
    let mut out = String::new();
    let payload = &report.payload;
    match report.command.as_str() {
        "alcove" => {
            out.push_str("label,iota,dim\n");
            for row in payload["rows"].as_array().unwrap() {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    quote(row["label"].as_str().unwrap()),
                    quote(row["iota"].as_str().unwrap()),
                    row["dim"]
                );
            }
        }
        "dual" => {
            out.push_str("mu,epsilon,hyperplane\n");
            for row in payload["rows"].as_array().unwrap() {
                let plane = row["hyperplane"].as_str().unwrap_or("");
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    quote(row["mu"].as_str().unwrap()),
                    row["epsilon"],
                    plane
                );
            }
        }
        "character" => {
            out.push_str("element,coeff\n");
            for (k, v) in payload["coeffs"].as_object().unwrap() {
                let _ = writeln!(out, "{},{}", quote(k), v);
            }
        }
        "fusion" => {
            out.push_str("x,y,z,n\n");
            if let Some(entries) = payload.get("entries").and_then(Value::as_array) {
                for e in entries {
                    let row = e.as_array().unwrap();
                    let _ = writeln!(
                        out,
                        "{},{},{},{}",
                        quote(row[0].as_str().unwrap()),
                        quote(row[1].as_str().unwrap()),
                        quote(row[2].as_str().unwrap()),
                        row[3]
                    );
                }
            } else {
                let x = payload["x"].as_str().unwrap();
                let y = payload["y"].as_str().unwrap();
                for (z, n) in payload["product"].as_object().unwrap() {
                    let _ = writeln!(out, "{},{},{},{}", quote(x), quote(y), quote(z), n);
                }
            }
        }
        "spectrum" => {
            out.push_str("kind,y,mu,re,im\n");
            let labels = payload["labels"].as_array().unwrap();
            let dual = payload["dual"].as_array().unwrap();
            for (kind, key) in [("psi", "psi"), ("chi", "eigenvalues")] {
                for (yi, row) in payload[key].as_array().unwrap().iter().enumerate() {
                    for (mi, z) in row.as_array().unwrap().iter().enumerate() {
                        let pair = z.as_array().unwrap();
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{}",
                            kind,
                            quote(labels[yi].as_str().unwrap()),
                            quote(dual[mi].as_str().unwrap()),
                            pair[0],
                            pair[1]
                        );
                    }
                }
            }
        }
        "verify" => {
            out.push_str("name,status,max_defect\n");
            for c in &report.checks {
                let _ = writeln!(out, "{},{},{}", quote(&c.name), c.status, c.max_defect);
            }
        }
        _ => unreachable!("unknown command in report"),
    }
    out
}

fn run(cli: Cli) -> Result<ExitCode, sl3fusion::Error> {
    let report = match &cli.command {
        Command::Alcove { p, extended } => cmd_alcove(*p, *extended)?,
        Command::Dual { p } => cmd_dual(*p)?,
        Command::Character { y } => cmd_character(y)?,
        Command::Fusion { p, x, y, all } => cmd_fusion(*p, x.as_deref(), y.as_deref(), *all)?,
        Command::Spectrum { p } => cmd_spectrum(*p)?,
        Command::Verify { p, suite } => cmd_verify(*p, suite)?,
    };
    let rendered = match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("report serialises");
            s.push('\n');
            s
        }
        Format::Csv => to_csv(&report),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, &rendered).map_err(|e| sl3fusion::Error::Parse {
            what: "output path",
            input: format!("{}: {e}", path.display()),
        })?,
        None => print!("{rendered}"),
    }
    let failed = report.checks.iter().any(|c| c.status == "fail");
    Ok(if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

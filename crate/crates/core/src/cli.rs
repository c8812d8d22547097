//! The `suzuki` command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::curve::Curve;
use crate::dims::{dim_report, table_for, KappaClosed};
use crate::error::{Error, Result};
use crate::expr::parse_expression;
use crate::forms::{extra_forms, kappa_row, kernel, unique_quadric, KappaRow};
use crate::params::{make_params, SuzukiParams};
use crate::report::{Discrepancy, Report};
use crate::rewrite::{mu_rank, sigma_rank, Reducer};
use crate::semigroup::SemigroupTable;
use crate::tuples::{basis_tuples, normalize, ExponentTuple};
use crate::verify::run_suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "suzuki", version, about = "Exact geometry of Suzuki curves embedded in P^4")]
pub struct Cli {
    /// Family index: q0 = 2^n, q = 2 q0^2.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Derived constants of the family member.
    Params,
    /// Gaps and Frobenius number of the Weierstrass semigroup.
    Gaps,
    /// dim L(m P_inf) and spannedness of |m P_inf|.
    Dim {
        #[arg(long)]
        m: u64,
    },
    /// Very ampleness of |m P_inf|; without --m, the two smallest very ample m.
    VeryAmple {
        #[arg(long)]
        m: Option<u64>,
    },
    /// dim L(t m_embed P_inf) by closed formula and by semigroup count.
    DimTable {
        #[arg(long, default_value_t = 12)]
        tmax: u64,
    },
    /// Dimension of degree-t forms vanishing on the embedded curve.
    Kappa {
        #[arg(long)]
        t: u64,
        /// Skip the point-evaluation oracle.
        #[arg(long)]
        no_eval: bool,
        /// Include the kernel basis as monomial/coefficient lists.
        #[arg(long)]
        kernel: bool,
    },
    /// Kappa for a range of degrees
    KappaTable {
        #[arg(long, default_value_t = 2)]
        tmin: u64,
        #[arg(long)]
        tmax: u64,
        #[arg(long)]
        no_eval: bool,
    },
    /// Canonical monomial basis of L(m P_inf).
    Basis {
        #[arg(long)]
        m: u64,
    },
    /// Canonical tuple of the same pole order as (a, b, c, d).
    Normalize { a: u64, b: u64, c: u64, d: u64 },
    /// Normal form of a sum of monomials in x, y, v, w.
    Reduce { expr: String },
    /// Rational points as JSON lines with hex coordinates.
    Points,
    /// The unique quadric through the curve and the extra degree-(q0+1) forms.
    Quadric,
    /// Ranks of multiplication maps.
    Sigma {
        #[arg(long, conflicts_with = "tmax")]
        t: Option<u64>,
        /// Report t = 1..=tmax.
        #[arg(long)]
        tmax: Option<u64>,
        #[arg(long, requires = "beta", conflicts_with_all = ["t", "tmax"])]
        alpha: Option<u64>,
        #[arg(long, requires = "alpha")]
        beta: Option<u64>,
    },
    /// Run the full invariant suite.
    Verify,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Params => "params",
            Command::Gaps => "gaps",
            Command::Dim { .. } => "dim",
            Command::VeryAmple { .. } => "very-ample",
            Command::DimTable { .. } => "dim-table",
            Command::Kappa { .. } => "kappa",
            Command::KappaTable { .. } => "kappa-table",
            Command::Basis { .. } => "basis",
            Command::Normalize { .. } => "normalize",
            Command::Reduce { .. } => "reduce",
            Command::Points => "points",
            Command::Quadric => "quadric",
            Command::Sigma { .. } => "sigma",
            Command::Verify => "verify",
        }
    }
}

/// Everything a command produces, renderable in each format.
struct Output {
    report: Report<Value>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    /// Replaces the aligned table under `--format table`.
    text: Option<String>,
    /// JSON lines replace the report under `--format json`.
    json_lines: Option<Vec<Value>>,
    failed: bool,
}

impl Output {
    fn new<T: Serialize>(command: &str, params: SuzukiParams, result: T) -> Self {
        Output {
            report: Report::new(command, params, serde_json::to_value(result).expect("serializable")),
            header: Vec::new(),
            rows: Vec::new(),
            text: None,
            json_lines: None,
            failed: false,
        }
    }

    fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.iter().map(|s| s.to_string()).collect();
        self.rows = rows;
        self
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => match &self.json_lines {
                Some(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
                None => self.report.to_json() + "\n",
            },
            Format::Csv => {
                let mut s = self.header.join(",") + "\n";
                for r in &self.rows {
                    s += &r.join(",");
                    s.push('\n');
                }
                s
            }
            Format::Table => {
                let mut s = match &self.text {
                    Some(t) => t.clone(),
                    None => aligned(&self.header, &self.rows),
                };
                for d in &self.report.discrepancies {
                    let _ = writeln!(s, "note: {}", d.detail);
                }
                s
            }
        }
    }
}

fn aligned(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, w))| if i == 0 { format!("{c:<w$}") } else { format!("{c:>w$}") })
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
            + "\n"
    };
    let mut s = line(header);
    for r in rows {
        s += &line(r);
    }
    s
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn kv_rows(value: &Value) -> Vec<Vec<String>> {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| {
                let v = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string().replace(',', ";"),
                };
                vec![k.clone(), v]
            })
            .collect(),
        other => vec![vec!["value".into(), other.to_string()]],
    }
}

fn kappa_table_rows(rows: &[KappaRow]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| {
            let (kind, value) = match r.kappa_closed_or_bound {
                Some(KappaClosed::Exact(v)) => ("exact", v.to_string()),
                Some(KappaClosed::LowerBound(v)) => ("lower-bound", v.to_string()),
                None => ("", String::new()),
            };
            vec![
                r.t.to_string(),
                r.kappa_rank.to_string(),
                opt(r.kappa_eval),
                kind.to_string(),
                value,
                r.quadric_multiples_dim.to_string(),
                opt(r.oracles_agree),
                opt(r.printed_low_range),
                opt(r.printed_low_range_consistent),
            ]
        })
        .collect()
}

const KAPPA_HEADER: [&str; 9] = [
    "t",
    "kappa_rank",
    "kappa_eval",
    "kappa_closed_kind",
    "kappa_closed_value",
    "quadric_multiples_dim",
    "oracles_agree",
    "printed_low_range",
    "printed_low_range_consistent",
];

fn execute(params: SuzukiParams, command: &Command) -> Result<Output> {
    let p = params;
    let name = command.name();
    let out = match command {
        Command::Params => {
            let mut o = Output::new(name, p, p);
            o.rows = kv_rows(&serde_json::to_value(p).unwrap());
            o.header = vec!["field".into(), "value".into()];
            o
        }
        Command::Gaps => {
            let s = SemigroupTable::with_default_bound(p).summary()?;
            let rows = s.gaps.iter().map(|g| vec![g.to_string()]).collect();
            let text = format!(
                "genus      {}\ngap count  {}\nfrobenius  {}\n",
                s.genus, s.gap_count, s.frobenius
            );
            let mut o = Output::new(name, p, &s).table(&["gap"], rows);
            o.text = Some(text);
            o
        }
        Command::Dim { m } => {
            let table = SemigroupTable::build(p, (*m).max(2 * p.genus));
            let result = json!({
                "m": m,
                "dim": table.count_up_to(*m)?,
                "spanned": table.is_spanned(*m)?,
                "very_ample": *m >= 1 && table.is_very_ample(*m)?,
            });
            let rows = kv_rows(&result);
            Output::new(name, p, result).table(&["field", "value"], rows)
        }
        Command::VeryAmple { m } => {
            let table = SemigroupTable::build(p, m.unwrap_or(0).max(2 * p.genus + p.m_embed));
            let result = match m {
                Some(m) => {
                    let va = table.is_very_ample(*m)?;
                    json!({
                        "m": m,
                        "very_ample": va,
                        "embedding_dimension": if va { Some(table.embedding_dimension(*m)?) } else { None },
                    })
                }
                None => {
                    let first = table.smallest_very_ample()?;
                    let next = table.next_very_ample(first)?;
                    json!({
                        "smallest": first,
                        "smallest_embedding_dimension": table.embedding_dimension(first)?,
                        "next": next,
                        "next_embedding_dimension": table.embedding_dimension(next)?,
                    })
                }
            };
            let second = 2 * p.q + 2 * p.q0 + 1;
            let flagged = match m {
                Some(m) => *m == second,
                None => result["next"] == json!(second),
            };
            let rows = kv_rows(&result);
            let mut o = Output::new(name, p, result).table(&["field", "value"], rows);
            if flagged && table.embedding_dimension(second)? != 9 {
                o.report.flag(Discrepancy::SecondEmbeddingDimension);
            }
            o
        }
        Command::DimTable { tmax } => {
            let table = table_for(p, *tmax);
            let reports = (0..=*tmax)
                .map(|t| dim_report(&table, t))
                .collect::<Result<Vec<_>>>()?;
            let rows = reports
                .iter()
                .map(|r| {
                    vec![
                        r.t.to_string(),
                        r.m.to_string(),
                        opt(r.dim_closed),
                        r.dim_oracle.to_string(),
                        r.agree.to_string(),
                        r.case_label.to_string(),
                    ]
                })
                .collect();
            let mut o = Output::new(name, p, &reports).table(
                &["t", "m", "dim_closed", "dim_oracle", "agree", "case_label"],
                rows,
            );
            o.failed = reports.iter().any(|r| !r.agree);
            o
        }
        Command::Kappa { t, no_eval, kernel: with_kernel } => {
            let mut reducer = Reducer::new(p);
            let curve = if *no_eval { None } else { Some(Curve::new(p)?) };
            let row = kappa_row(&mut reducer, curve.as_ref(), *t)?;
            let mut result = serde_json::to_value(&row).unwrap();
            if *with_kernel {
                result["kernel"] = kernel(&mut reducer, *t).to_json();
            }
            let rows = kappa_table_rows(std::slice::from_ref(&row));
            let mut o = Output::new(name, p, result).table(&KAPPA_HEADER, rows);
            if row.printed_low_range_consistent == Some(false) {
                o.report.flag(Discrepancy::KappaLowRangeFormula);
            }
            o.failed = row.oracles_agree == Some(false);
            o
        }
        Command::KappaTable { tmin, tmax, no_eval } => {
            let mut reducer = Reducer::new(p);
            let curve = if *no_eval { None } else { Some(Curve::new(p)?) };
            let rows = ((*tmin).max(2)..=*tmax)
                .map(|t| kappa_row(&mut reducer, curve.as_ref(), t))
                .collect::<Result<Vec<_>>>()?;
            let mut o = Output::new(name, p, &rows).table(&KAPPA_HEADER, kappa_table_rows(&rows));
            if rows.iter().any(|r| r.printed_low_range_consistent == Some(false)) {
                o.report.flag(Discrepancy::KappaLowRangeFormula);
            }
            o.failed = rows.iter().any(|r| r.oracles_agree == Some(false));
            o
        }
        Command::Basis { m } => {
            let basis = basis_tuples(&p, *m);
            let rows = basis
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    let t = c.tuple();
                    vec![
                        i.to_string(),
                        t.a.to_string(),
                        t.b.to_string(),
                        t.c.to_string(),
                        t.d.to_string(),
                        t.norm(&p).to_string(),
                    ]
                })
                .collect();
            Output::new(name, p, json!({ "m": m, "dim": basis.len(), "basis": basis }))
                .table(&["index", "a", "b", "c", "d", "norm"], rows)
        }
        Command::Normalize { a, b, c, d } => {
            let t = ExponentTuple::new(*a, *b, *c, *d);
            let canon = normalize(t, &p);
            let result = json!({ "input": t, "canonical": canon, "norm": t.norm(&p) });
            let rows = vec![vec![
                t.to_string(),
                canon.to_string(),
                t.norm(&p).to_string(),
            ]];
            let mut o = Output::new(name, p, result).table(&["input", "canonical", "norm"], rows);
            o.text = Some(format!("{canon}\n"));
            o
        }
        Command::Reduce { expr } => {
            let poly = parse_expression(expr)?;
            let mut reducer = Reducer::new(p);
            let red = reducer.reduce(&poly)?;
            let printed = red.to_string();
            let terms: Vec<ExponentTuple> = red.monomials().collect();
            let result = json!({
                "input": poly.to_string(),
                "normal_form": printed,
                "terms": terms,
                "pole_order": red.max_norm(&p),
            });
            let mut o = Output::new(name, p, result)
                .table(&["normal_form"], vec![vec![printed.clone()]]);
            o.text = Some(format!("{printed}\n"));
            if reducer.rules_fired()[2] {
                o.report.flag(Discrepancy::R3Exponent);
            }
            o
        }
        Command::Points => {
            let curve = Curve::new(p)?;
            let mut lines = Vec::new();
            let mut rows = Vec::new();
            for pt in curve.enumerate_points() {
                let [x, y, v, w] = curve.coordinates(pt);
                let e = curve.embed(pt);
                lines.push(json!({ "x": x, "y": y, "v": v, "w": w, "embedded": e.coords }));
                rows.push(vec![x.to_hex(), y.to_hex(), v.to_hex(), w.to_hex()]);
            }
            let inf = curve.embed_infinity();
            lines.push(json!({ "point": "infinity", "embedded": inf.coords }));
            rows.push(vec!["inf".into(), "inf".into(), "inf".into(), "inf".into()]);
            let count = lines.len();
            let mut o = Output::new(name, p, json!({ "count": count }))
                .table(&["x", "y", "v", "w"], rows);
            o.json_lines = Some(lines);
            o
        }
        Command::Quadric => {
            let mut reducer = Reducer::new(p);
            let q = unique_quadric(&mut reducer)?;
            let support: Vec<String> = q.forms()[0].iter().map(|m| m.to_string()).collect();
            let extra = extra_forms(&mut reducer)?;
            let text = format!(
                "Q = {}\ndegree-{} forms beyond quadric multiples: {}\n",
                support.join(" + "),
                extra.t,
                extra.count
            );
            let result = json!({ "dim": q.dim(), "support": support, "kernel": q.to_json(), "extra_forms": extra });
            let rows = vec![vec![support.join(" + ")]];
            let mut o = Output::new(name, p, result).table(&["quadric"], rows);
            o.text = Some(text);
            o.report.flag(Discrepancy::R3Exponent);
            o
        }
        Command::Sigma { t, tmax, alpha, beta } => {
            let mut reducer = Reducer::new(p);
            if let (Some(a), Some(b)) = (alpha, beta) {
                let r = mu_rank(&mut reducer, *a, *b);
                let result = json!({ "alpha": a, "beta": b, "image_dim": r.image_dim, "target_dim": r.target_dim, "surjective": r.surjective() });
                let rows = vec![vec![a.to_string(), b.to_string(), r.image_dim.to_string(), r.target_dim.to_string(), r.surjective().to_string()]];
                Output::new(name, p, result).table(&["alpha", "beta", "image_dim", "target_dim", "surjective"], rows)
            } else {
                let ts: Vec<u64> = match (t, tmax) {
                    (Some(t), _) => vec![*t],
                    (None, Some(m)) => (1..=*m).collect(),
                    (None, None) => {
                        return Err(Error::Precondition("sigma needs --t, --tmax or --alpha/--beta".into()))
                    }
                };
                let results: Vec<Value> = ts
                    .iter()
                    .map(|&t| {
                        let r = sigma_rank(&mut reducer, t);
                        json!({ "t": t, "image_dim": r.image_dim, "target_dim": r.target_dim, "surjective": r.surjective() })
                    })
                    .collect();
                let rows = results
                    .iter()
                    .map(|r| {
                        ["t", "image_dim", "target_dim", "surjective"]
                            .iter()
                            .map(|k| r[k].to_string())
                            .collect()
                    })
                    .collect();
                Output::new(name, p, results).table(&["t", "image_dim", "target_dim", "surjective"], rows)
            }
        }
        Command::Verify => {
            let checks = run_suite(p)?;
            let mut text = String::new();
            for c in &checks {
                let _ = writeln!(text, "{} {:<36} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            let passed = checks.iter().filter(|c| c.passed).count();
            let _ = writeln!(text, "{passed}/{} checks passed", checks.len());
            let rows = checks
                .iter()
                .map(|c| vec![c.name.clone(), c.passed.to_string(), format!("\"{}\"", c.detail.replace('"', "'"))])
                .collect();
            let failed = passed != checks.len();
            let mut o = Output::new(name, p, &checks).table(&["check", "passed", "detail"], rows);
            o.text = Some(text);
            o.failed = failed;
            if p.q0 >= 4 {
                o.report.flag(Discrepancy::KappaLowRangeFormula);
            }
            o.report.flag(Discrepancy::R3Exponent);
            let table = SemigroupTable::with_default_bound(p);
            let second = 2 * p.q + 2 * p.q0 + 1;
            if table.embedding_dimension(second).map(|d| d != 9).unwrap_or(false) {
                o.report.flag(Discrepancy::SecondEmbeddingDimension);
            }
            o
        }
    };
    Ok(out)
}

/// Runs the CLI on `args` (program name first). Returns the exit code and
/// whatever went to standard output.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if code == 0 {
                return (0, e.to_string());
            }
            eprintln!("{e}");
            return (2, String::new());
        }
    };
    let Some(n) = cli.n else {
        eprintln!("error: --n <N> is required");
        return (2, String::new());
    };
    let result = make_params(n).and_then(|p| execute(p, &cli.command));
    let output = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return (2, String::new());
        }
    };
    let text = output.render(cli.format);
    let code = if output.failed { 1 } else { 0 };
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => (code, String::new()),
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                (2, String::new())
            }
        },
        None => (code, text),
    }
}

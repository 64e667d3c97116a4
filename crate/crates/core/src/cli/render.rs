use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::classical_bounds::{castelnuovo_bound, halphen_bound, pi1_bound, pi2_bound, pi2_profile, GenusBoundResult};
use crate::error::{Error, Result};
use crate::scroll_surfaces::{
    degree, extremal_class, frame_from_class, is_admissible, k2_intersection, scan_degree, sectional_genus, DivisorClass,
    ExtremalSurface, ScanRecord,
};
use crate::theorem_verifier::{
    check_range, r6_certificates, verify_appendix, verify_r4, verify_r5_exclusion, verify_r5_remark, verify_sharpness,
    verify_theorem, CaseVerdict, Certificate, Status,
};

use super::{BoundCmd, Case, Cli, Command, Format, ScrollCmd};

/// Bumped whenever a JSON field is renamed or removed.
pub const JSON_FORMAT_VERSION: u32 = 1;
/// Value of the leading `format_version` column of every CSV row.
pub const CSV_FORMAT_VERSION: u32 = 1;

pub struct Rendered {
    pub text: String,
    /// Certificate statuses, empty for commands that emit none.
    pub statuses: Vec<Status>,
}

/// Top-level JSON object of every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub format_version: u32,
    pub tool_version: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at_unix: Option<u64>,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Records<T> {
    pub records: Vec<T>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    #[serde(flatten)]
    pub result: GenusBoundResult,
    pub floor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub alpha: i64,
    pub beta: i64,
    pub degree: i64,
    pub admissible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k2: Option<i128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<i128>,
}

struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    footer: Vec<String>,
}

impl Table {
    fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new(), footer: Vec::new() }
    }

    fn text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.len()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let mut s = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            s.truncate(s.trim_end().len());
            s.push('\n');
            s
        };
        let mut out = line(self.header.clone());
        for row in &self.rows {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
        }
        for f in &self.footer {
            out.push_str(f);
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
        let mut header = vec!["format_version"];
        header.extend(&self.header);
        w.write_record(&header).map_err(io)?;
        for row in &self.rows {
            let mut rec = vec![CSV_FORMAT_VERSION.to_string()];
            rec.extend(row.iter().cloned());
            w.write_record(&rec).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(format!("csv: {e}")))
    }
}

fn opt(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn envelope<T: Serialize>(cli: &Cli, command: String, body: T) -> Result<String> {
    let generated_at_unix = if cli.no_timestamp {
        None
    } else {
        SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs())
    };
    let env = Envelope {
        format_version: JSON_FORMAT_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command,
        generated_at_unix,
        body,
    };
    let mut s = serde_json::to_string_pretty(&env).map_err(|e| Error::InvalidArgument(format!("json: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn emit<T: Serialize>(cli: &Cli, command: String, body: T, table: impl FnOnce() -> Table) -> Result<String> {
    match cli.format {
        Format::Json => envelope(cli, command, body),
        Format::Csv => table().csv(),
        Format::Table => Ok(table().text()),
    }
}

fn bound_records(cmd: &BoundCmd) -> Result<(String, Vec<BoundRecord>)> {
    let (name, degrees) = match cmd {
        BoundCmd::Castelnuovo { r, degrees } => (format!("bound castelnuovo --r {r}"), degrees),
        BoundCmd::Halphen { s, degrees } => (format!("bound halphen --s {s}"), degrees),
        BoundCmd::Pi1 { degrees } => ("bound pi1".to_string(), degrees),
        BoundCmd::Pi2 { degrees } => ("bound pi2".to_string(), degrees),
    };
    let (a, b) = degrees.range()?;
    let mut out = Vec::new();
    for d in a..=b {
        let (result, profile) = match cmd {
            BoundCmd::Castelnuovo { r, .. } => (castelnuovo_bound(*r, d)?, None),
            BoundCmd::Halphen { s, .. } => (halphen_bound(d, *s)?, None),
            BoundCmd::Pi1 { .. } => (pi1_bound(d)?, None),
            BoundCmd::Pi2 { .. } => (pi2_bound(d)?, Some(pi2_profile(d)?.values().to_vec())),
        };
        out.push(BoundRecord { floor: result.floor().to_string(), result, profile });
    }
    let name = if a == b { format!("{name} --d {a}") } else { format!("{name} --from {a} --to {b}") };
    Ok((name, out))
}

fn bound_table(records: &[BoundRecord], floor: bool) -> Table {
    let mut t = Table::new(vec![
        "formula", "d", "r", "s", "m", "epsilon", "n", "v", "w", "p", "q", "t", "bound", "integral", "in_asserted_range",
        "profile",
    ]);
    for rec in records {
        let p = &rec.result.parameters;
        let formula = serde_json::to_value(rec.result.formula_id)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default();
        let bound = if floor { rec.floor.clone() } else { rec.result.bound.to_string() };
        let profile = rec
            .profile
            .as_ref()
            .map(|v| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        t.rows.push(vec![
            formula,
            p.d.to_string(),
            opt(p.r),
            opt(p.s),
            opt(p.m),
            opt(p.epsilon),
            opt(p.n),
            opt(p.v),
            opt(p.w),
            opt(p.p),
            opt(p.q),
            opt(p.t),
            bound,
            rec.result.integral.to_string(),
            rec.result.in_asserted_range.to_string(),
            profile,
        ]);
    }
    t
}

/// Invariants of `alpha H_T + beta W`, or why it is not admissible.
pub fn class_report(c: DivisorClass) -> ClassReport {
    let deg = degree(c);
    let mut report = ClassReport {
        alpha: c.alpha,
        beta: c.beta,
        degree: deg,
        admissible: is_admissible(c),
        reason: None,
        a: None,
        k2: None,
        genus: None,
    };
    if !report.admissible {
        let mut why = Vec::new();
        if c.alpha <= 0 {
            why.push("alpha <= 0".to_string());
        }
        if c.alpha + c.beta < 0 {
            why.push("alpha + beta < 0".to_string());
        }
        if deg < 4 {
            why.push(format!("degree {deg} < 4"));
        }
        report.reason = Some(why.join(", "));
        return report;
    }
    report.a = frame_from_class(c, deg).ok().map(|f| f.a);
    report.k2 = k2_intersection(c).ok();
    report.genus = sectional_genus(c).ok();
    report
}

fn scroll_output(cli: &Cli, cmd: &ScrollCmd) -> Result<String> {
    match cmd {
        ScrollCmd::Scan { d } => {
            let records = scan_degree(*d)?;
            let table = || {
                let mut t = Table::new(vec!["d", "a", "alpha", "beta", "degree", "k2", "genus", "admissible", "extremal"]);
                for r in &records {
                    t.rows.push(scan_row(r));
                }
                t
            };
            emit(cli, format!("scroll scan --d {d}"), Records { records: records.clone() }, table)
        }
        ScrollCmd::Class { alpha, beta } => {
            let report = class_report(DivisorClass::new(*alpha, *beta));
            let table = || {
                let mut t = Table::new(vec!["alpha", "beta", "degree", "admissible", "a", "k2", "genus", "reason"]);
                t.rows.push(vec![
                    report.alpha.to_string(),
                    report.beta.to_string(),
                    report.degree.to_string(),
                    report.admissible.to_string(),
                    opt(report.a),
                    report.k2.map(|v| v.to_string()).unwrap_or_default(),
                    report.genus.map(|v| v.to_string()).unwrap_or_default(),
                    report.reason.clone().map(|r| format!("inadmissible ({r})")).unwrap_or_default(),
                ]);
                t
            };
            emit(cli, format!("scroll class --alpha {alpha} --beta {beta}"), &report, table)
        }
        ScrollCmd::Extremal { d } => {
            let ex: ExtremalSurface = extremal_class(*d)?;
            let table = || {
                let mut t = Table::new(vec!["d", "alpha", "beta", "a", "k2", "genus"]);
                t.rows.push(vec![
                    ex.d.to_string(),
                    ex.class.alpha.to_string(),
                    ex.class.beta.to_string(),
                    ex.a.to_string(),
                    ex.k2.to_string(),
                    ex.genus.to_string(),
                ]);
                t
            };
            emit(cli, format!("scroll extremal --d {d}"), &ex, table)
        }
    }
}

fn scan_row(r: &ScanRecord) -> Vec<String> {
    vec![
        r.d.to_string(),
        r.a.to_string(),
        r.alpha.to_string(),
        r.beta.to_string(),
        r.degree.to_string(),
        r.k2.to_string(),
        r.genus.to_string(),
        r.admissible.to_string(),
        r.extremal.to_string(),
    ]
}

/// Runs one verification case over `[from, to]`.
pub fn verify_case(case: Case, from: i64, to: i64) -> Result<CaseVerdict> {
    check_range(from, to)?;
    let certs: Vec<Certificate> = match case {
        Case::All => return verify_theorem(from, to),
        Case::R4 => verify_r4(from, to)?,
        Case::R6 => r6_certificates()?,
        Case::R5 => {
            let mut v = vec![verify_r5_remark()?];
            v.extend(verify_r5_exclusion(from, to)?);
            v
        }
        Case::Appendix => vec![verify_appendix(from, to)?],
        Case::Sharpness => vec![verify_sharpness(from, to)?],
    };
    Ok(CaseVerdict::from_certificates(from, to, certs))
}

fn case_name(case: Case) -> &'static str {
    match case {
        Case::All => "all",
        Case::R4 => "r4",
        Case::R6 => "r6",
        Case::R5 => "r5",
        Case::Appendix => "appendix",
        Case::Sharpness => "sharpness",
    }
}

fn verify_table(v: &CaseVerdict) -> Table {
    let mut t = Table::new(vec![
        "claim_id",
        "params",
        "status",
        "sign_certificates",
        "identities",
        "scanned",
        "witness",
    ]);
    for c in &v.certificates {
        let signs_ok = c.sign_certificates.iter().filter(|s| s.certificate.holds()).count();
        let ids_ok = c.identities.iter().filter(|i| i.holds).count();
        let scanned: u64 = c.scans.iter().map(|s| s.points_checked).sum();
        let witness = c
            .witness
            .as_ref()
            .map(|w| match w.d {
                Some(d) => format!("d={d}: {}", w.detail),
                None => w.detail.clone(),
            })
            .unwrap_or_default();
        t.rows.push(vec![
            c.claim_id.clone(),
            c.params.to_string(),
            c.status.to_string(),
            format!("{signs_ok}/{}", c.sign_certificates.len()),
            format!("{ids_ok}/{}", c.identities.len()),
            scanned.to_string(),
            witness,
        ]);
    }
    t
}

fn verify_output(cli: &Cli, case: Case, from: i64, to: i64) -> Result<Rendered> {
    let verdict = verify_case(case, from, to)?;
    let statuses = verdict.certificates.iter().map(|c| c.status).collect();
    let command = format!("verify {} --from {from} --to {to}", case_name(case));
    let text = emit(cli, command, &verdict, || {
        let mut t = verify_table(&verdict);
        if cli.format == Format::Table {
            t.footer.push(format!(
                "overall: {}  (degrees {}..={}, theorem asserted for d >= {})",
                if verdict.overall { "verified" } else { "FAILED" },
                verdict.d_from,
                verdict.d_to,
                verdict.asserted_from
            ));
        }
        t
    })?;
    Ok(Rendered { text, statuses })
}

/// Produces the output text for a parsed command line.
pub fn render(cli: &Cli) -> Result<Rendered> {
    match &cli.command {
        Command::Bound(cmd) => {
            let (name, records) = bound_records(cmd)?;
            let text = emit(cli, name, Records { records: records.clone() }, || bound_table(&records, cli.floor))?;
            Ok(Rendered { text, statuses: Vec::new() })
        }
        Command::Scroll(cmd) => Ok(Rendered { text: scroll_output(cli, cmd)?, statuses: Vec::new() }),
        Command::Verify(args) => verify_output(cli, args.case, args.from, args.to),
    }
}

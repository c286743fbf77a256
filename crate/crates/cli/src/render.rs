use std::io::Write;

use anyhow::Result;
use curvearr::format::{AuditRecord, IntervalRecord, ReportRecord};
use curvearr::search::SearchResult;
use curvearr::{ArrangementClass, TVector};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(r: &Option<curvearr::Rational>) -> String {
    r.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into())
}

pub fn report_table(out: &mut dyn Write, reports: &[ReportRecord]) -> Result<()> {
    let rows: Vec<[String; 7]> = reports
        .iter()
        .map(|r| {
            [
                r.id.clone(),
                yes_no(r.applicable).into(),
                opt(&r.lhs),
                opt(&r.rhs),
                opt(&r.slack),
                if r.applicable { yes_no(r.equality).into() } else { "-".into() },
                r.reason.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let header = ["ID", "APPLICABLE", "LHS", "RHS", "SLACK", "EQUALITY", "NOTE"].map(String::from);
    let mut widths = header.clone().map(|h| h.len());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let mut line = String::new();
        for (i, (cell, w)) in row.iter().zip(widths).enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<w$}  "));
            }
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}

pub fn report_csv(out: &mut dyn Write, reports: &[ReportRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["id", "applicable", "reason", "lhs", "rhs", "slack", "equality"])?;
    for r in reports {
        let cell = |x: &Option<curvearr::Rational>| x.as_ref().map(ToString::to_string).unwrap_or_default();
        w.write_record([
            r.id.clone(),
            r.applicable.to_string(),
            r.reason.clone().unwrap_or_default(),
            cell(&r.lhs),
            cell(&r.rhs),
            cell(&r.slack),
            r.equality.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn audit_table(out: &mut dyn Write, rec: &AuditRecord) -> Result<()> {
    let id = &rec.identity;
    if id.valid {
        writeln!(out, "identity: ok ({} = {})", id.incidences, id.pairs)?;
    } else {
        writeln!(out, "identity violated: {} \u{2260} {}", id.incidences, id.pairs)?;
    }
    match &rec.alpha_interval {
        IntervalRecord::Interval(i) => writeln!(out, "alpha interval: [{}, {}]", i.lo, i.hi)?,
        IntervalRecord::Empty(i) => writeln!(out, "alpha interval: empty ({} > {})", i.lo, i.hi)?,
    }
    writeln!(out)?;
    report_table(out, &rec.reports)?;
    if let Some(a) = &rec.alpha {
        writeln!(out)?;
        writeln!(out, "at alpha = {}:", a.alpha)?;
        if let Some(e) = &a.error {
            writeln!(out, "  {e}")?;
        }
        if !a.reports.is_empty() {
            report_table(out, &a.reports)?;
        }
        if let Some(l) = &a.lmy {
            writeln!(
                out,
                "orbifold check (K + aC)^2 <= 3 e_orb: {} <= {} {}{}",
                l.lhs,
                l.rhs,
                if l.satisfied { "holds" } else { "FAILS" },
                if l.exact { "" } else { " (e_orb bounded above)" }
            )?;
        }
    }
    Ok(())
}

pub fn audit_csv(out: &mut dyn Write, rec: &AuditRecord) -> Result<()> {
    let mut all = rec.reports.clone();
    if let Some(a) = &rec.alpha {
        all.extend(a.reports.iter().cloned());
    }
    report_csv(out, &all)
}

fn composition(a: &ArrangementClass) -> String {
    a.components.groups().iter().map(|g| format!("{} x degree {}", g.count, g.degree)).collect::<Vec<_>>().join(", ")
}

pub fn class_table(out: &mut dyn Write, a: &ArrangementClass) -> Result<()> {
    writeln!(out, "components: {} (total degree {})", composition(a), a.total_degree())?;
    writeln!(out, "t: {}", a.t)?;
    writeln!(
        out,
        "identity: {} ({} incidences, {} pairs)",
        if a.validate_identity() { "ok" } else { "violated" },
        a.t.incidence_pairs(),
        a.pair_count()
    )?;
    Ok(())
}

pub fn class_csv(out: &mut dyn Write, a: &ArrangementClass) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["r", "t_r"])?;
    for (r, n) in a.t.iter() {
        w.write_record([r.to_string(), n.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn tvector_csv_cell(t: &TVector) -> String {
    t.iter().map(|(r, n)| format!("{r}:{n}")).collect::<Vec<_>>().join(";")
}

pub fn search_summary(res: &SearchResult) -> String {
    let mut s = format!(
        "examined {}, survivors {}, eliminated {}",
        res.examined,
        res.examined - res.eliminated(),
        res.eliminated()
    );
    if !res.eliminated_by.is_empty() {
        let parts: Vec<String> = res.eliminated_by.iter().map(|(k, n)| format!("{k}: {n}")).collect();
        s.push_str(&format!(" ({})", parts.join(", ")));
    }
    if res.excluded > 0 {
        s.push_str(&format!(", excluded {}", res.excluded));
    }
    if res.truncated {
        s.push_str(", truncated");
    }
    s
}

//! `curvearr` command-line front end.
//!
//! Exit codes: 0 consistent, 1 usage or input error, 2 ruled out.

mod args;
mod render;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use curvearr::format::{self, AlphaRecord, AuditRecord, ReportRecord};
use curvearr::inequalities::{self, InequalityKind};
use curvearr::orbifold::{alpha_interval, lmy_global_check};
use curvearr::search::{self, ApplicabilityPolicy, SearchMode, SearchSpec};
use curvearr::{geometry, ArrangementClass, CatalogEntry};
use serde_json::json;

use args::{Cli, Command, OutputFormat, Policy, SearchArgs};

const EXIT_RULED_OUT: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => {
            Box::new(BufWriter::new(fs::File::create(path).with_context(|| format!("creating {}", path.display()))?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let code = match cli.command {
        Command::Audit { path, alpha } => cmd_audit(&mut out, &path, cli.format.unwrap_or(OutputFormat::Table), alpha)?,
        Command::Generate { name, params } => {
            let class = CatalogEntry::parse(&name, &params)?.build()?;
            write_class(&mut out, &class, cli.format.unwrap_or(OutputFormat::Json))?;
            0
        }
        Command::Intersect { path } => {
            let text = read(&path)?;
            let lines = format::lines_from_json(&text).with_context(|| path.display().to_string())?;
            let class = geometry::t_vector_from_lines(&lines)?;
            write_class(&mut out, &class, cli.format.unwrap_or(OutputFormat::Json))?;
            0
        }
        Command::Search(args) => cmd_search(&mut out, &args, cli.format.unwrap_or(OutputFormat::Table))?,
    };
    out.flush()?;
    Ok(code)
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_class(out: &mut dyn Write, class: &ArrangementClass, fmt: OutputFormat) -> Result<()> {
    match fmt {
        OutputFormat::Json => out.write_all(format::class_to_json(class).as_bytes())?,
        OutputFormat::Table => render::class_table(out, class)?,
        OutputFormat::Csv => render::class_csv(out, class)?,
    }
    Ok(())
}

fn cmd_audit(out: &mut dyn Write, path: &Path, fmt: OutputFormat, alpha: Option<curvearr::Rational>) -> Result<u8> {
    let text = read(path)?;
    let class = format::class_from_json(&text).with_context(|| path.display().to_string())?;
    let audit = inequalities::audit(&class);
    let mut rec = AuditRecord::from(&audit);
    let mut ruled_out = audit.ruled_out();

    if let Some(alpha) = alpha {
        let mut extra = AlphaRecord { alpha: alpha.clone(), error: None, reports: Vec::new(), lmy: None };
        if audit.identity_valid {
            let interval = alpha_interval(&class)?;
            if !interval.contains(&alpha) {
                bail!("alpha {alpha} outside [{}, {}]", interval.lo, interval.hi);
            }
            let reports = inequalities::parametric_reports(&class, &alpha)?;
            ruled_out |= reports.iter().any(|r| r.violated());
            extra.reports = reports.iter().map(ReportRecord::from).collect();
            let lmy = lmy_global_check(&class, &alpha)?;
            ruled_out |= !lmy.satisfied;
            extra.lmy = Some(lmy);
        } else {
            extra.error = Some("skipped: pair-count identity violated".into());
        }
        rec.alpha = Some(extra);
    }

    match fmt {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &rec)?;
            writeln!(out)?;
        }
        OutputFormat::Table => render::audit_table(out, &rec)?,
        OutputFormat::Csv => render::audit_csv(out, &rec)?,
    }
    if !audit.identity_valid {
        eprintln!("identity violated: {} \u{2260} {}", audit.incidences, audit.pairs);
    }
    Ok(if ruled_out { EXIT_RULED_OUT } else { 0 })
}

fn parse_filters(s: &str) -> Result<Vec<InequalityKind>> {
    match s.trim().to_ascii_lowercase().as_str() {
        "" | "none" => Ok(Vec::new()),
        "all" => Ok(InequalityKind::ALL.to_vec()),
        list => list.split(',').map(|name| name.parse::<InequalityKind>().map_err(|e| anyhow!(e))).collect(),
    }
}

fn search_spec(args: &SearchArgs) -> Result<SearchSpec> {
    let mode = match (args.lines, &args.equal_degree, &args.line_conic) {
        (Some(k), None, None) => SearchMode::Lines { k },
        (None, Some(dk), None) => SearchMode::EqualDegree { d: dk[0], k: dk[1] },
        (None, None, Some(lk)) => SearchMode::LineConic { l: lk[0], k: lk[1] },
        _ => bail!("exactly one of --lines, --equal-degree, --line-conic is required"),
    };
    mode.components()?;
    let mut spec = SearchSpec::new(mode).with_filters(parse_filters(&args.filters)?);
    spec.r_cap = args.r_cap;
    spec.limit = args.limit;
    spec.policy = match args.policy {
        Policy::Pass => ApplicabilityPolicy::PassThrough,
        Policy::Require => ApplicabilityPolicy::RequireApplicable,
    };
    spec.effective_r_cap()?;
    Ok(spec)
}

fn cmd_search(out: &mut dyn Write, args: &SearchArgs, fmt: OutputFormat) -> Result<u8> {
    let spec = search_spec(args)?;
    let mut io_err: Option<io::Error> = None;
    let mut index = 0u64;
    if fmt == OutputFormat::Csv {
        writeln!(out, "survivor,t")?;
    }
    let result = search::search_stream(&spec, |class| {
        if io_err.is_some() {
            return;
        }
        index += 1;
        let res = match fmt {
            OutputFormat::Json => writeln!(out, "{}", format::class_to_json_line(&class)),
            OutputFormat::Table => writeln!(out, "{}", class.t),
            OutputFormat::Csv => writeln!(out, "{index},{}", render::tvector_csv_cell(&class.t)),
        };
        if let Err(e) = res {
            io_err = Some(e);
        }
    })?;
    if let Some(e) = io_err {
        return Err(e.into());
    }
    match fmt {
        OutputFormat::Json => {
            let eliminated: serde_json::Map<String, serde_json::Value> =
                result.eliminated_by.iter().map(|(k, n)| (k.to_string(), json!(n))).collect();
            let summary = json!({
                "summary": {
                    "examined": result.examined,
                    "survivors": result.examined - result.eliminated(),
                    "eliminated": eliminated,
                    "excluded": result.excluded,
                    "truncated": result.truncated,
                }
            });
            writeln!(out, "{summary}")?;
        }
        OutputFormat::Table => writeln!(out, "{}", render::search_summary(&result))?,
        OutputFormat::Csv => {}
    }
    Ok(0)
}

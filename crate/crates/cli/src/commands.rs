use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;
use std::fmt::Write;

use lamina_core::catalog::{self, RecordStatus, Tolerances};
use lamina_core::{
    angle_ply_point, feasibility_with, max_zone, min_nu12_global, nu12_laminate, DimensionlessMaterial, Error,
    LaminationPoint, MaterialDatabase, MaterialRecord,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Cli, Command, Format, MaterialsAction, Nu12Args, PlotArgs, PlotKind, Selection, XiDomainArgs};
use crate::report::{degrees, fixed, value, Nu12Series, RunReport, RunResults, XiDomain};
use crate::svg::{self, Marker};
use crate::{EXIT_DATA, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_DATA,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OutOfDomain { .. }
            | Error::NotOnBoundary { .. }
            | Error::AngleOutOfRange(_)
            | Error::UnknownMaterial(_)
            | Error::InvalidGrid(_)
            | Error::EmptyStack => EXIT_USAGE,
            _ => EXIT_DATA,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            warnings: Vec::new(),
            code: EXIT_OK,
        }
    }
}

struct Context<'a> {
    cli: &'a Cli,
    argv: Vec<String>,
}

pub fn run(cli: &Cli, argv: Vec<String>) -> Result<Output, CliError> {
    let ctx = Context { cli, argv };
    match &cli.command {
        Command::Materials { action } => ctx.materials(action),
        Command::Nu12(a) => ctx.nu12(a),
        Command::MinNu(s) => ctx.min_nu(s),
        Command::MaxZone(s) => ctx.max_zone(s),
        Command::XiDomain(a) => ctx.xi_domain(a),
        Command::Plot(a) => plot(a),
    }
}

fn parse_tolerances(specs: &[String]) -> Result<Tolerances, CliError> {
    let mut tol = Tolerances::default();
    for spec in specs {
        let (key, raw) = spec
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("tolerance `{spec}` is not KEY=VALUE")))?;
        let v: f64 = raw
            .trim()
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite() && *v >= 0.0)
            .ok_or_else(|| CliError::usage(format!("tolerance `{spec}`: value must be a non-negative number")))?;
        match key.trim() {
            "modulus" => tol.modulus = v,
            "ratio" => tol.ratio = v,
            other => {
                return Err(CliError::usage(format!(
                    "unknown tolerance `{other}` (expected modulus or ratio)"
                )))
            }
        }
    }
    Ok(tol)
}

fn csv_line(fields: &[String]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(fields).expect("in-memory write");
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn strings<const N: usize>(a: [&str; N]) -> Vec<String> {
    a.iter().map(|s| (*s).to_owned()).collect()
}

impl Context<'_> {
    fn db(&self) -> Result<MaterialDatabase, CliError> {
        catalog::open(self.cli.db.as_deref()).map_err(|errors| {
            let lines: Vec<String> = errors.iter().map(ToString::to_string).collect();
            CliError::data(lines.join("\n"))
        })
    }

    fn material(&self, rec: &MaterialRecord) -> Result<DimensionlessMaterial, CliError> {
        let m = if self.cli.from_constants {
            rec.constants.check()?;
            rec.material_from_constants()
        } else {
            rec.design_material()
        };
        m.map_err(|e| CliError::data(format!("material {} ({}): {e}", rec.id, rec.name())))
    }

    fn selected<'d>(&self, db: &'d MaterialDatabase, s: &Selection) -> Result<Vec<&'d MaterialRecord>, CliError> {
        if s.all {
            Ok(db.records().iter().collect())
        } else {
            let key = s.material.as_deref().expect("clap requires material or --all");
            Ok(vec![db.find(key)?])
        }
    }

    fn report(&self, rec: &MaterialRecord, results: RunResults) -> RunReport {
        RunReport::new(self.argv.clone(), Some((rec.id, rec.name().to_owned())), results)
    }

    fn reports(&self, all: bool, reports: Vec<RunReport>) -> String {
        if all {
            json(&reports)
        } else {
            json(&reports[0])
        }
    }

    fn materials(&self, action: &MaterialsAction) -> Result<Output, CliError> {
        let db = self.db()?;
        match action {
            MaterialsAction::List => {
                if self.cli.format == Format::Json {
                    return Ok(Output::ok(json(db.records())));
                }
                let mut out = csv_line(&strings(["id", "name", "E1", "E2", "G12", "nu12", "provenance"]));
                for r in db.records() {
                    let c = &r.constants;
                    out += &csv_line(&[
                        r.id.to_string(),
                        c.name.clone(),
                        fixed(c.e1, 2),
                        fixed(c.e2, 2),
                        fixed(c.g12, 2),
                        fixed(c.nu12, 2),
                        r.provenance.clone().unwrap_or_default(),
                    ]);
                }
                Ok(Output::ok(out))
            }
            MaterialsAction::Show { material } => self.show(db.find(material)?),
            MaterialsAction::Validate => self.validate(&db),
        }
    }

    fn show(&self, rec: &MaterialRecord) -> Result<Output, CliError> {
        let polar = rec.computed_polar().ok();
        let dims = rec.material_from_constants().ok();
        if self.cli.format == Format::Json {
            #[derive(Serialize)]
            struct Show<'a> {
                record: &'a MaterialRecord,
                computed_polar: Option<lamina_core::PolarParameters>,
                computed_dimensionless: Option<DimensionlessMaterial>,
                design_material: Option<DimensionlessMaterial>,
            }
            return Ok(Output::ok(json(&Show {
                record: rec,
                computed_polar: polar,
                computed_dimensionless: dims,
                design_material: self.material(rec).ok(),
            })));
        }
        let c = &rec.constants;
        let mut rows: Vec<(String, String)> = vec![
            ("id".into(), rec.id.to_string()),
            ("name".into(), c.name.clone()),
            ("E1".into(), fixed(c.e1, 2)),
            ("E2".into(), fixed(c.e2, 2)),
            ("G12".into(), fixed(c.g12, 2)),
            ("nu12".into(), fixed(c.nu12, 2)),
            ("provenance".into(), rec.provenance.clone().unwrap_or_default()),
        ];
        if let Some(p) = polar {
            for (k, v) in [("T0", p.t0), ("T1", p.t1), ("R0", p.r0), ("R1", p.r1)] {
                rows.push((k.into(), value(v)));
            }
            rows.push(("K".into(), p.k.index().to_string()));
        }
        if let Some(d) = dims {
            for (k, v) in [("tau0", d.tau0), ("tau1", d.tau1), ("rho", d.rho)] {
                rows.push((k.into(), value(v)));
            }
        }
        if let Some(p) = rec.reference_polar {
            for (k, v) in [("T0", p.t0), ("T1", p.t1), ("R0", p.r0), ("R1", p.r1)] {
                rows.push((format!("reference {k}"), fixed(v, 2)));
            }
        }
        if let Some(d) = rec.reference_dimensionless {
            for (k, v) in [("tau0", d.tau0), ("tau1", d.tau1), ("rho", d.rho)] {
                rows.push((format!("reference {k}"), fixed(v, 3)));
            }
        }
        let mut out = csv_line(&strings(["field", "value"]));
        for (k, v) in rows {
            out += &csv_line(&[k, v]);
        }
        Ok(Output::ok(out))
    }

    fn validate(&self, db: &MaterialDatabase) -> Result<Output, CliError> {
        let tol = parse_tolerances(&self.cli.tolerances)?;
        let results = db.validate(&tol);
        let failed: Vec<String> = results
            .iter()
            .filter(|v| !v.is_valid())
            .map(|v| v.id.to_string())
            .collect();
        let stdout = if self.cli.format == Format::Json {
            json(&results)
        } else {
            let mut out = csv_line(&strings([
                "id",
                "name",
                "status",
                "T0",
                "T1",
                "R0",
                "R1",
                "tau0",
                "tau1",
                "rho",
                "deviations",
            ]));
            for v in &results {
                let (status, detail) = match &v.status {
                    RecordStatus::Ok => ("ok", String::new()),
                    RecordStatus::NonPhysical(why) => ("non-physical", why.clone()),
                    RecordStatus::Deviates(devs) => (
                        "deviates",
                        devs.iter()
                            .map(|d| format!("{} reference {} computed {}", d.field, d.reference, value(d.computed)))
                            .collect::<Vec<_>>()
                            .join("; "),
                    ),
                };
                let mut fields = vec![v.id.to_string(), v.name.clone(), status.to_owned()];
                match v.computed_polar {
                    Some(p) => fields.extend([p.t0, p.t1, p.r0, p.r1].map(value)),
                    None => fields.extend(vec![String::new(); 4]),
                }
                match v.computed_dimensionless {
                    Some(d) => fields.extend([d.tau0, d.tau1, d.rho].map(value)),
                    None => fields.extend(vec![String::new(); 3]),
                }
                fields.push(detail);
                out += &csv_line(&fields);
            }
            out
        };
        let mut output = Output::ok(stdout);
        if !failed.is_empty() {
            output.code = EXIT_DATA;
            output.warnings.push(format!(
                "{} of {} records failed validation: {}",
                failed.len(),
                results.len(),
                failed.join(", ")
            ));
        }
        Ok(output)
    }

    fn nu12(&self, a: &Nu12Args) -> Result<Output, CliError> {
        let db = self.db()?;
        let rec = db.find(&a.material)?;
        let m = self.material(rec)?;
        let (point, delta) = match (&a.point, a.angle_ply) {
            (Some(p), _) => (LaminationPoint::checked(p[0], p[1])?, None),
            (None, Some(deg)) => {
                let d = deg.to_radians();
                (angle_ply_point(d)?, Some(d))
            }
            (None, None) => unreachable!("clap requires --point or --angle-ply"),
        };
        let n = a.theta_grid as usize;
        let step_deg = 90.0 / n as f64;
        let decimals = if step_deg >= 0.1 {
            1
        } else {
            ((-step_deg.log10()).ceil() as usize + 1).min(9)
        };
        let mut series = Nu12Series {
            point,
            delta,
            theta: Vec::with_capacity(n + 1),
            nu12: Vec::with_capacity(n + 1),
        };
        for k in 0..=n {
            let theta = FRAC_PI_2 * k as f64 / n as f64;
            series.theta.push(theta);
            series.nu12.push(nu12_laminate(&m, &point, theta)?);
        }
        if self.cli.format == Format::Json {
            let r = self.report(rec, RunResults::Nu12(series));
            return Ok(Output::ok(json(&r)));
        }
        let mut out = String::new();
        let _ = writeln!(out, "# material: {} {}", rec.id, rec.name());
        let _ = writeln!(out, "# point: xi3={} xi1={}", value(point.xi3), value(point.xi1));
        if let Some(d) = delta {
            let _ = writeln!(out, "# angle-ply: delta_deg={}", degrees(d));
        }
        out += &csv_line(&strings(["theta_deg", "nu12"]));
        for (t, v) in series.theta.iter().zip(&series.nu12) {
            out += &csv_line(&[fixed(t.to_degrees(), decimals), value(*v)]);
        }
        Ok(Output::ok(out))
    }

    fn per_material<T: Send>(
        &self,
        records: &[&MaterialRecord],
        f: impl Fn(&MaterialRecord, &DimensionlessMaterial) -> Result<T, CliError> + Sync,
    ) -> Result<Vec<T>, CliError> {
        // rayon keeps the input order in the collected vector
        records
            .par_iter()
            .map(|rec| {
                let m = self.material(rec)?;
                f(rec, &m)
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect()
    }

    fn min_nu(&self, s: &Selection) -> Result<Output, CliError> {
        let db = self.db()?;
        let records = self.selected(&db, s)?;
        let results = self.per_material(&records, |_, m| Ok(min_nu12_global(m)?))?;
        let mut output = Output::ok(String::new());
        for (rec, r) in records.iter().zip(&results) {
            if r.nu_min >= 0.0 {
                output.warnings.push(format!(
                    "material {} ({}): no auxetic laminate exists",
                    rec.id,
                    rec.name()
                ));
            }
        }
        if self.cli.format == Format::Json {
            let reports = records
                .iter()
                .zip(results)
                .map(|(rec, r)| self.report(rec, RunResults::MinNu(r)))
                .collect();
            output.stdout = self.reports(s.all, reports);
            return Ok(output);
        }
        let mut out = csv_line(&strings([
            "id",
            "name",
            "nu12_min",
            "theta_deg",
            "xi3",
            "xi1",
            "delta_deg",
            "feasible",
        ]));
        for (rec, r) in records.iter().zip(&results) {
            out += &csv_line(&[
                rec.id.to_string(),
                rec.name().to_owned(),
                value(r.nu_min),
                degrees(r.theta_star),
                value(r.point.xi3),
                value(r.point.xi1),
                r.delta.map(degrees).unwrap_or_default(),
                (r.nu_min < 0.0).to_string(),
            ]);
        }
        output.stdout = out;
        Ok(output)
    }

    fn max_zone(&self, s: &Selection) -> Result<Output, CliError> {
        let db = self.db()?;
        let records = self.selected(&db, s)?;
        let results = self.per_material(&records, |_, m| Ok(max_zone(m)?))?;
        let mut output = Output::ok(String::new());
        for (rec, r) in records.iter().zip(&results) {
            if r.zone.empty {
                output.warnings.push(format!(
                    "material {} ({}): no auxetic zone on the boundary",
                    rec.id,
                    rec.name()
                ));
            }
        }
        if self.cli.format == Format::Json {
            let reports = records
                .iter()
                .zip(results)
                .map(|(rec, r)| self.report(rec, RunResults::MaxZone(r)))
                .collect();
            output.stdout = self.reports(s.all, reports);
            return Ok(output);
        }
        let mut out = csv_line(&strings([
            "id",
            "name",
            "xi3_opt",
            "xi1_opt",
            "theta1_deg",
            "theta2_deg",
            "delta_theta_deg",
            "delta_deg",
            "nu12_min",
            "theta_min_deg",
            "clamped",
        ]));
        for (rec, r) in records.iter().zip(&results) {
            out += &csv_line(&[
                rec.id.to_string(),
                rec.name().to_owned(),
                value(r.point_opt.xi3),
                value(r.point_opt.xi1),
                degrees(r.zone.theta1),
                degrees(r.zone.theta2),
                degrees(r.zone.width),
                degrees(r.delta),
                value(r.nu_min_at_opt),
                degrees(r.theta_min_at_opt),
                r.clamped.to_string(),
            ]);
        }
        output.stdout = out;
        Ok(output)
    }

    fn xi_domain(&self, a: &XiDomainArgs) -> Result<Output, CliError> {
        let db = self.db()?;
        let rec = db.find(&a.material)?;
        let m = self.material(rec)?;
        let f = feasibility_with(&m, a.resolution as usize);
        let mut output = Output::ok(String::new());
        if !f.feasible {
            output.warnings.push(format!(
                "material {} ({}): the auxetic region is empty",
                rec.id,
                rec.name()
            ));
        }
        let (nu_point, zone_point) = if a.markers {
            let zone = max_zone(&m)?;
            (
                Some(min_nu12_global(&m)?.point),
                (!zone.zone.empty).then_some(zone.point_opt),
            )
        } else {
            (None, None)
        };
        if self.cli.format == Format::Json {
            let r = self.report(
                rec,
                RunResults::Feasibility(XiDomain {
                    feasibility: f,
                    nu_min_point: nu_point,
                    zone_max_point: zone_point,
                }),
            );
            output.stdout = json(&r);
            return Ok(output);
        }
        let mut out = csv_line(&strings(["kind", "index", "xi3", "xi1"]));
        let mut row = |kind: &str, index: usize, p: &LaminationPoint| {
            out += &csv_line(&[kind.to_owned(), index.to_string(), value(p.xi3), value(p.xi1)]);
        };
        for (i, line) in f.xi_boundary.iter().enumerate() {
            for p in line {
                row("contour", i, p);
            }
        }
        row("eta_min", 0, &f.argmin);
        if let Some(p) = nu_point {
            row("nu_min", 0, &p);
        }
        if let Some(p) = zone_point {
            row("zone_max", 0, &p);
        }
        output.stdout = out;
        Ok(output)
    }
}

fn read_table(args: &PlotArgs, expected: &[&str]) -> Result<(Vec<csv::StringRecord>, Vec<String>), CliError> {
    let text =
        std::fs::read_to_string(&args.input).map_err(|e| CliError::usage(format!("{}: {e}", args.input.display())))?;
    let comments: Vec<String> = text
        .lines()
        .filter_map(|l| l.strip_prefix('#').map(|c| c.trim().to_owned()))
        .collect();
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::usage(format!("{}: {e}", args.input.display())))?
        .clone();
    if headers.iter().collect::<Vec<_>>() != expected {
        return Err(CliError::usage(format!(
            "{}: expected columns `{}`, found `{}`",
            args.input.display(),
            expected.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let rows = reader
        .records()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::usage(format!("{}: {e}", args.input.display())))?;
    if rows.is_empty() {
        return Err(CliError::usage(format!("{}: no data rows", args.input.display())));
    }
    Ok((rows, comments))
}

fn number(rec: &csv::StringRecord, i: usize) -> Result<f64, CliError> {
    let raw = &rec[i];
    raw.parse().map_err(|_| {
        let line = rec.position().map_or(0, |p| p.line());
        CliError::usage(format!("line {line}: `{raw}` is not a number"))
    })
}

fn plot(a: &PlotArgs) -> Result<Output, CliError> {
    let svg = match a.kind {
        PlotKind::PolarNu12 => {
            let (rows, comments) = read_table(a, &["theta_deg", "nu12"])?;
            let mut theta = Vec::with_capacity(rows.len());
            let mut nu = Vec::with_capacity(rows.len());
            for r in &rows {
                theta.push(number(r, 0)?);
                nu.push(number(r, 1)?);
            }
            let title = comments
                .iter()
                .find_map(|c| c.strip_prefix("material:"))
                .map_or_else(|| "ν12(θ)".to_owned(), |m| format!("ν12(θ), material {}", m.trim()));
            svg::polar_nu12(&theta, &nu, &title)
        }
        PlotKind::DomainMap => {
            let (rows, _) = read_table(a, &["kind", "index", "xi3", "xi1"])?;
            let mut contours: BTreeMap<usize, Vec<(f64, f64)>> = BTreeMap::new();
            let mut markers = Vec::new();
            for r in &rows {
                let (x3, x1) = (number(r, 2)?, number(r, 3)?);
                match &r[0] {
                    "contour" => {
                        let i: usize = r[1]
                            .parse()
                            .map_err(|_| CliError::usage(format!("`{}` is not a contour index", &r[1])))?;
                        contours.entry(i).or_default().push((x3, x1));
                    }
                    kind => {
                        let m = Marker::from_kind(kind)
                            .ok_or_else(|| CliError::usage(format!("unknown row kind `{kind}`")))?;
                        markers.push((m, x3, x1));
                    }
                }
            }
            let lines: Vec<Vec<(f64, f64)>> = contours.into_values().collect();
            svg::domain_map(&lines, &markers, "Lamination domain Ω and auxetic region Ξ")
        }
    };
    match &a.output {
        Some(path) => {
            std::fs::write(path, svg).map_err(|e| CliError::data(format!("{}: {e}", path.display())))?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(svg)),
    }
}

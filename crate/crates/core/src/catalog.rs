//! Material database: CSV or JSON records of ply constants, optionally with
//! reference polar moduli, and the bundled catalogue of UD plies.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::material::{
    dimensionless, polar_from_stiffness, reduce_stiffness, DimensionlessMaterial, EngineeringConstants, Orthotropy,
    PolarParameters,
};

/// The bundled catalogue of fifteen unidirectional plies.
pub const BUNDLED_CSV: &str = include_str!("../data/materials.csv");

const REQUIRED: [&str; 5] = ["name", "E1", "E2", "G12", "nu12"];

/// One database row, with field names shared by the CSV header and JSON keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialRow {
    pub name: String,
    #[serde(rename = "E1")]
    pub e1: f64,
    #[serde(rename = "E2")]
    pub e2: f64,
    #[serde(rename = "G12")]
    pub g12: f64,
    pub nu12: f64,
    #[serde(rename = "T0", default, skip_serializing_if = "Option::is_none")]
    pub t0: Option<f64>,
    #[serde(rename = "T1", default, skip_serializing_if = "Option::is_none")]
    pub t1: Option<f64>,
    #[serde(rename = "R0", default, skip_serializing_if = "Option::is_none")]
    pub r0: Option<f64>,
    #[serde(rename = "R1", default, skip_serializing_if = "Option::is_none")]
    pub r1: Option<f64>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau0: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialRecord {
    /// 1-based position in the database.
    pub id: usize,
    pub constants: EngineeringConstants,
    pub reference_polar: Option<PolarParameters>,
    pub reference_dimensionless: Option<DimensionlessMaterial>,
    pub provenance: Option<String>,
}

impl MaterialRecord {
    fn from_row(id: usize, row: MaterialRow) -> Self {
        let k = Orthotropy::from_index(i64::from(row.k.unwrap_or(0)));
        let reference_polar = match (row.t0, row.t1, row.r0, row.r1) {
            (Some(t0), Some(t1), Some(r0), Some(r1)) => Some(PolarParameters::orthotropic(t0, t1, r0, r1, k)),
            _ => None,
        };
        let reference_dimensionless = match (row.tau0, row.tau1, row.rho) {
            (Some(a), Some(b), Some(c)) => Some(DimensionlessMaterial::new(a, b, c, k)),
            _ => None,
        };
        Self {
            id,
            constants: EngineeringConstants {
                name: row.name,
                e1: row.e1,
                e2: row.e2,
                g12: row.g12,
                nu12: row.nu12,
            },
            reference_polar,
            reference_dimensionless,
            provenance: row.provenance.filter(|p| !p.is_empty()),
        }
    }

    pub fn to_row(&self) -> MaterialRow {
        let c = &self.constants;
        let p = self.reference_polar;
        let d = self.reference_dimensionless;
        let k = p.map(|p| p.k).or(d.map(|d| d.k));
        MaterialRow {
            name: c.name.clone(),
            e1: c.e1,
            e2: c.e2,
            g12: c.g12,
            nu12: c.nu12,
            t0: p.map(|p| p.t0),
            t1: p.map(|p| p.t1),
            r0: p.map(|p| p.r0),
            r1: p.map(|p| p.r1),
            k: k.filter(|k| *k != Orthotropy::K0).map(Orthotropy::index),
            tau0: d.map(|d| d.tau0),
            tau1: d.map(|d| d.tau1),
            rho: d.map(|d| d.rho),
            provenance: self.provenance.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.constants.name
    }

    /// Polar moduli recomputed from the engineering constants.
    pub fn computed_polar(&self) -> Result<PolarParameters> {
        Ok(polar_from_stiffness(&reduce_stiffness(&self.constants)?))
    }

    pub fn material_from_constants(&self) -> Result<DimensionlessMaterial> {
        dimensionless(&self.computed_polar()?)
    }

    /// The material used for design: reference polar moduli when present,
    /// then reference ratios, then the engineering constants.
    pub fn design_material(&self) -> Result<DimensionlessMaterial> {
        self.constants.check()?;
        if let Some(p) = &self.reference_polar {
            dimensionless(p)
        } else if let Some(d) = self.reference_dimensionless {
            Ok(d)
        } else {
            self.material_from_constants()
        }
    }

    /// Compares reference fields with values recomputed from the constants.
    pub fn validate(&self, tol: &Tolerances) -> Validation {
        let polar = match self.computed_polar() {
            Ok(p) => p,
            Err(e) => {
                return Validation {
                    id: self.id,
                    name: self.name().to_owned(),
                    computed_polar: None,
                    computed_dimensionless: None,
                    status: RecordStatus::NonPhysical(e.to_string()),
                }
            }
        };
        let dims = dimensionless(&polar).ok();
        let mut deviations = Vec::new();
        if let Some(r) = &self.reference_polar {
            for (field, reference, computed) in [
                ("T0", r.t0, polar.t0),
                ("T1", r.t1, polar.t1),
                ("R0", r.r0, polar.r0),
                ("R1", r.r1, polar.r1),
            ] {
                if (reference - computed).abs() > tol.modulus {
                    deviations.push(Deviation {
                        field: field.into(),
                        reference,
                        computed,
                        tolerance: tol.modulus,
                    });
                }
            }
            if r.k != polar.k {
                deviations.push(Deviation {
                    field: "K".into(),
                    reference: f64::from(r.k.index()),
                    computed: f64::from(polar.k.index()),
                    tolerance: 0.0,
                });
            }
        }
        if let (Some(r), Some(d)) = (&self.reference_dimensionless, &dims) {
            for (field, reference, computed) in [
                ("tau0", r.tau0, d.tau0),
                ("tau1", r.tau1, d.tau1),
                ("rho", r.rho, d.rho),
            ] {
                if (reference - computed).abs() > tol.ratio {
                    deviations.push(Deviation {
                        field: field.into(),
                        reference,
                        computed,
                        tolerance: tol.ratio,
                    });
                }
            }
        }
        let status = if dims.is_none() {
            RecordStatus::NonPhysical("R1 = 0: square-symmetric ply".into())
        } else if deviations.is_empty() {
            RecordStatus::Ok
        } else {
            RecordStatus::Deviates(deviations)
        };
        Validation {
            id: self.id,
            name: self.name().to_owned(),
            computed_polar: Some(polar),
            computed_dimensionless: dims,
            status,
        }
    }
}

/// Acceptance bands for reference values: GPa for moduli, absolute for ratios.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub modulus: f64,
    pub ratio: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            modulus: 0.01,
            ratio: 0.001,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deviation {
    pub field: String,
    pub reference: f64,
    pub computed: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum RecordStatus {
    Ok,
    Deviates(Vec<Deviation>),
    NonPhysical(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Validation {
    pub id: usize,
    pub name: String,
    pub computed_polar: Option<PolarParameters>,
    pub computed_dimensionless: Option<DimensionlessMaterial>,
    pub status: RecordStatus,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.status == RecordStatus::Ok
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialDatabase {
    records: Vec<MaterialRecord>,
}

impl MaterialDatabase {
    pub fn bundled() -> Self {
        Self::from_csv_str(BUNDLED_CSV).expect("bundled database parses")
    }

    pub fn records(&self) -> &[MaterialRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Looks a material up by 1-based id, or by name (case-insensitive, must be unique).
    pub fn find(&self, key: &str) -> Result<&MaterialRecord> {
        let key = key.trim();
        if let Ok(id) = key.parse::<usize>() {
            return self
                .records
                .iter()
                .find(|r| r.id == id)
                .ok_or_else(|| Error::UnknownMaterial(key.to_owned()));
        }
        let mut hits = self.records.iter().filter(|r| r.name().eq_ignore_ascii_case(key));
        match (hits.next(), hits.next()) {
            (Some(r), None) => Ok(r),
            (Some(_), Some(_)) => Err(Error::UnknownMaterial(format!("{key} (ambiguous name, use the id)"))),
            _ => Err(Error::UnknownMaterial(key.to_owned())),
        }
    }

    pub fn validate(&self, tol: &Tolerances) -> Vec<Validation> {
        self.records.iter().map(|r| r.validate(tol)).collect()
    }

    pub fn load(path: &Path) -> Result<Self, Vec<Error>> {
        let text = std::fs::read_to_string(path).map_err(|e| vec![Error::Io(format!("{}: {e}", path.display()))])?;
        let is_json =
            path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) || text.trim_start().starts_with('[');
        if is_json {
            Self::from_json_str(&text)
        } else {
            Self::from_csv_str(&text)
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self, Vec<Error>> {
        let rows: Vec<MaterialRow> = serde_json::from_str(text).map_err(|e| {
            vec![Error::Parse {
                line: e.line() as u64,
                message: e.to_string(),
            }]
        })?;
        Self::from_rows(rows)
    }

    pub fn to_json_string(&self) -> String {
        let rows: Vec<MaterialRow> = self.records.iter().map(MaterialRecord::to_row).collect();
        serde_json::to_string_pretty(&rows).expect("rows serialize")
    }

    pub fn from_rows(rows: Vec<MaterialRow>) -> Result<Self, Vec<Error>> {
        if rows.is_empty() {
            return Err(vec![Error::NoMaterials]);
        }
        Ok(Self {
            records: rows
                .into_iter()
                .enumerate()
                .map(|(i, r)| MaterialRecord::from_row(i + 1, r))
                .collect(),
        })
    }

    /// Parses a CSV database. Every malformed row is reported with its line.
    pub fn from_csv_str(text: &str) -> Result<Self, Vec<Error>> {
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(text.as_bytes());
        let headers = reader.headers().map_err(|e| vec![csv_error(&e)])?.clone();
        if headers.is_empty() || (headers.len() == 1 && headers[0].is_empty()) {
            return Err(vec![Error::NoMaterials]);
        }
        let missing: Vec<&str> = REQUIRED
            .iter()
            .copied()
            .filter(|h| !headers.iter().any(|x| x == *h))
            .collect();
        if !missing.is_empty() {
            return Err(vec![Error::Parse {
                line: 1,
                message: format!("missing required column(s): {}", missing.join(", ")),
            }]);
        }

        let mut rows = Vec::new();
        let mut errors = Vec::new();
        for rec in reader.records() {
            let rec = match rec {
                Ok(r) => r,
                Err(e) => {
                    errors.push(csv_error(&e));
                    continue;
                }
            };
            let line = rec.position().map_or(0, |p| p.line());
            if rec.len() != headers.len() {
                errors.push(Error::Parse {
                    line,
                    message: format!("expected {} fields, found {}", headers.len(), rec.len()),
                });
                continue;
            }
            match parse_row(&headers, &rec) {
                Ok(row) => rows.push(row),
                Err(message) => errors.push(Error::Parse { line, message }),
            }
        }
        if !errors.is_empty() {
            return Err(errors);
        }
        Self::from_rows(rows)
    }

    pub fn to_csv_string(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let rows: Vec<MaterialRow> = self.records.iter().map(MaterialRecord::to_row).collect();
        let header = [
            "name",
            "E1",
            "E2",
            "G12",
            "nu12",
            "T0",
            "T1",
            "R0",
            "R1",
            "K",
            "tau0",
            "tau1",
            "rho",
            "provenance",
        ];
        w.write_record(header).expect("in-memory write");
        let opt = |v: Option<f64>| v.map(|v| v.to_string()).unwrap_or_default();
        for r in rows {
            w.write_record([
                r.name,
                r.e1.to_string(),
                r.e2.to_string(),
                r.g12.to_string(),
                r.nu12.to_string(),
                opt(r.t0),
                opt(r.t1),
                opt(r.r0),
                opt(r.r1),
                r.k.map(|k| k.to_string()).unwrap_or_default(),
                opt(r.tau0),
                opt(r.tau1),
                opt(r.rho),
                r.provenance.unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

fn csv_error(e: &csv::Error) -> Error {
    Error::Parse {
        line: e.position().map_or(0, |p| p.line()),
        message: e.to_string(),
    }
}

fn parse_row(headers: &csv::StringRecord, rec: &csv::StringRecord) -> std::result::Result<MaterialRow, String> {
    let get = |name: &str| headers.iter().position(|h| h == name).map(|i| &rec[i]);
    let required = |name: &str| -> std::result::Result<f64, String> {
        let raw = get(name).unwrap_or_default();
        raw.parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| format!("column {name}: `{raw}` is not a number"))
    };
    let optional = |name: &str| -> std::result::Result<Option<f64>, String> {
        match get(name) {
            None | Some("") => Ok(None),
            Some(raw) => raw
                .parse::<f64>()
                .map(Some)
                .map_err(|_| format!("column {name}: `{raw}` is not a number")),
        }
    };
    let name = get("name").unwrap_or_default().to_owned();
    if name.is_empty() {
        return Err("empty name".into());
    }
    let k = match get("K") {
        None | Some("") => None,
        Some("0") => Some(0),
        Some("1") => Some(1),
        Some(raw) => return Err(format!("column K: `{raw}` must be 0 or 1")),
    };
    Ok(MaterialRow {
        name,
        e1: required("E1")?,
        e2: required("E2")?,
        g12: required("G12")?,
        nu12: required("nu12")?,
        t0: optional("T0")?,
        t1: optional("T1")?,
        r0: optional("R0")?,
        r1: optional("R1")?,
        k,
        tau0: optional("tau0")?,
        tau1: optional("tau1")?,
        rho: optional("rho")?,
        provenance: get("provenance").map(str::to_owned),
    })
}

/// Loads from an explicit path, else the bundled catalogue.
pub fn open(path: Option<&Path>) -> Result<MaterialDatabase, Vec<Error>> {
    match path {
        Some(p) => MaterialDatabase::load(p),
        None => Ok(MaterialDatabase::bundled()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_has_fifteen_plies_in_order() {
        let db = MaterialDatabase::bundled();
        assert_eq!(db.len(), 15);
        assert_eq!(db.records()[0].name(), "Pine wood");
        assert_eq!(db.find("2").unwrap().name(), "Carbon-epoxy T300/5208");
        assert_eq!(db.find("carbon-epoxy t300/5208").unwrap().id, 2);
        assert!(db.find("16").is_err());
        // two "Carbon-epoxy" rows
        assert!(db.find("Carbon-epoxy").is_err());
        assert!(db.records().iter().all(|r| r.provenance.is_some()));
    }

    #[test]
    fn minimal_header_is_enough() {
        let db = MaterialDatabase::from_csv_str("name,E1,E2,G12,nu12\nply,181,10.3,7.17,0.28\n").unwrap();
        let r = &db.records()[0];
        assert!(r.reference_polar.is_none());
        let m = r.design_material().unwrap();
        assert!((m.tau0 - 1.254).abs() < 1e-3);
        assert!(r.validate(&Tolerances::default()).is_valid());
    }

    #[test]
    fn malformed_rows_carry_line_numbers() {
        let text = "name,E1,E2,G12,nu12\na,1,2,3\nb,x,1,1,0.1\nc,10,1,1,0.2\n";
        let errs = MaterialDatabase::from_csv_str(text).unwrap_err();
        let lines: Vec<u64> = errs
            .iter()
            .map(|e| match e {
                Error::Parse { line, .. } => *line,
                other => panic!("{other:?}"),
            })
            .collect();
        assert_eq!(lines, vec![2, 3]);
    }

    #[test]
    fn empty_input_has_no_materials() {
        assert_eq!(
            MaterialDatabase::from_csv_str("").unwrap_err(),
            vec![Error::NoMaterials]
        );
        assert_eq!(
            MaterialDatabase::from_csv_str("name,E1,E2,G12,nu12\n").unwrap_err(),
            vec![Error::NoMaterials]
        );
        assert_eq!(
            MaterialDatabase::from_json_str("[]").unwrap_err(),
            vec![Error::NoMaterials]
        );
    }

    #[test]
    fn missing_column() {
        let errs = MaterialDatabase::from_csv_str("name,E1,E2,nu12\na,1,1,0.1\n").unwrap_err();
        assert!(matches!(&errs[0], Error::Parse { line: 1, .. }));
    }

    #[test]
    fn non_physical_row_is_flagged() {
        let db = MaterialDatabase::from_csv_str("name,E1,E2,G12,nu12\nbad,10,5,1,1.5\n").unwrap();
        let v = db.validate(&Tolerances::default());
        assert!(matches!(v[0].status, RecordStatus::NonPhysical(_)));
        assert!(db.records()[0].design_material().is_err());
    }

    #[test]
    fn json_and_csv_describe_the_same_records() {
        let db = MaterialDatabase::bundled();
        let from_json = MaterialDatabase::from_json_str(&db.to_json_string()).unwrap();
        assert_eq!(from_json, db);
        let from_csv = MaterialDatabase::from_csv_str(&db.to_csv_string()).unwrap();
        assert_eq!(from_csv, db);
    }
}

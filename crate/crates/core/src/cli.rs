//! Library side of the `knotstab` command: input parsing, family sweeps and
//! zero export, with CSV and JSON writers.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{self, EvenCF};
use crate::polyring::{normalize_alexander, IntPoly};
use crate::seifert::{self, CfForm, MontesinosSpec, SeifertMatrix, SplitSpec};
use crate::stability::{
    classify_with, hoste_report, numeric_zeros_seeded, HosteReport, StabilityReport, DEFAULT_BUCKET, DEFAULT_TOL,
};

pub const DEFAULT_CAP: u64 = 1_000_000;

pub const SWEEP_HEADER: &str = "id,cf,polynomial,verdict,n_real,n_unit,n_other,delta_max,signature,hoste_ok";
pub const EXPORT_HEADER: &str = "re,im,label";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown format {s:?}") }),
        }
    }
}

/// A single knot or link given by continued fraction, polynomial or Seifert
/// matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Cf(EvenCF),
    Poly(IntPoly),
    Matrix(SeifertMatrix),
}

impl Input {
    /// Exactly one of the three must be given.
    pub fn parse(cf: Option<&str>, poly: Option<&str>, matrix: Option<&str>) -> Result<Self> {
        match (cf, poly, matrix) {
            (Some(c), None, None) => Ok(Input::Cf(c.parse()?)),
            (None, Some(p), None) => Ok(Input::Poly(p.parse()?)),
            (None, None, Some(m)) => Ok(Input::Matrix(m.parse()?)),
            _ => Err(Error::Parse { pos: 0, msg: "give exactly one of --cf, --poly, --matrix".into() }),
        }
    }

    pub fn member(&self) -> Result<Member> {
        Ok(match self {
            Input::Cf(cf) => Member::from_cf(cf.to_string(), cf)?,
            Input::Poly(p) => Member { id: p.to_string(), cf: None, poly: p.clone(), matrix: None },
            Input::Matrix(m) => Member {
                id: m.to_string(),
                cf: None,
                poly: normalize_alexander(&seifert::alexander_poly(m), None)?,
                matrix: Some(m.clone()),
            },
        })
    }
}

impl fmt::Display for Input {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Input::Cf(c) => write!(f, "{c}"),
            Input::Poly(p) => write!(f, "{p}"),
            Input::Matrix(m) => write!(f, "{m}"),
        }
    }
}

/// One polynomial to classify, with whatever presentation produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Member {
    pub id: String,
    pub cf: Option<String>,
    pub poly: IntPoly,
    pub matrix: Option<SeifertMatrix>,
}

impl Member {
    fn from_cf(id: String, cf: &EvenCF) -> Result<Self> {
        Ok(Member {
            id,
            cf: Some(cf.to_string()),
            poly: cf.alexander(),
            matrix: Some(seifert::seifert_2bridge(cf, CfForm::TwistedChain)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassifyOutput {
    pub input: String,
    pub polynomial: String,
    pub report: StabilityReport,
    pub signature: Option<i64>,
    pub hoste: HosteReport,
}

pub fn run_classify(input: &Input, tol: f64, seed: u64) -> Result<ClassifyOutput> {
    let m = input.member()?;
    let report = classify_with(&m.poly, tol, DEFAULT_BUCKET)?.with_zeros(&m.poly, tol, seed)?;
    Ok(ClassifyOutput {
        input: input.to_string(),
        polynomial: m.poly.to_string(),
        report,
        signature: m.matrix.as_ref().map(seifert::signature),
        hoste: hoste_report(&m.poly)?,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    CfEnum,
    Xn,
    Yn,
    AppcVertical,
    AppcHorizontal,
    Salem,
    Montesinos,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::CfEnum,
        Family::Xn,
        Family::Yn,
        Family::AppcVertical,
        Family::AppcHorizontal,
        Family::Salem,
        Family::Montesinos,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::CfEnum => "cf_enum",
            Family::Xn => "xn",
            Family::Yn => "yn",
            Family::AppcVertical => "appc_vertical",
            Family::AppcHorizontal => "appc_horizontal",
            Family::Salem => "salem",
            Family::Montesinos => "montesinos",
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parse { pos: 0, msg: format!("unknown family {s:?}") })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parse `lo..hi` (inclusive).
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse { pos: 0, msg: format!("expected lo..hi, found {s:?}") };
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = a.trim().parse().map_err(|_| bad())?;
    let hi: i64 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub family: Family,
    /// Longest continued fraction, or largest index for indexed families.
    pub max_len: usize,
    /// Largest absolute entry, or largest twist parameter.
    pub max_coef: i64,
    /// Inclusive parameter range for one-parameter families.
    pub range: Option<(i64, i64)>,
    pub cap: u64,
    pub tol: f64,
}

impl SweepSpec {
    pub fn new(family: Family) -> Self {
        SweepSpec { family, max_len: 6, max_coef: 6, range: None, cap: DEFAULT_CAP, tol: DEFAULT_TOL }
    }

    fn index_range(&self, lo_default: i64, hi_default: i64) -> (i64, i64) {
        self.range.unwrap_or((lo_default, hi_default))
    }

    /// Number of members, computed without building them.
    pub fn size(&self) -> u64 {
        let span = |(lo, hi): (i64, i64)| (hi - lo + 1).max(0) as u64;
        match self.family {
            Family::CfEnum => families::count_cfs(self.max_len, self.max_coef),
            Family::Xn | Family::Yn | Family::AppcHorizontal => span(self.index_range(1, self.max_len as i64)),
            Family::AppcVertical => span(self.index_range(-self.max_coef, self.max_coef)),
            Family::Salem => salem_params(self.max_len).len() as u64,
            Family::Montesinos => {
                let e = (self.max_coef.max(0) as u64).div_ceil(2);
                let h = (self.max_coef / 2).max(0) as u64;
                e * h * h * h
            }
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_len == 0 || self.max_coef <= 0 {
            return Err(Error::Parse { pos: 0, msg: "bounds must be positive".into() });
        }
        let size = self.size();
        if size > self.cap {
            return Err(Error::CapExceeded { size, cap: self.cap });
        }
        Ok(())
    }

    /// Family members in canonical order.
    pub fn members(&self) -> Result<Vec<Member>> {
        self.validate()?;
        match self.family {
            Family::CfEnum => families::enumerate_cfs(self.max_len, self.max_coef)
                .enumerate()
                .map(|(i, cf)| Member::from_cf(i.to_string(), &cf))
                .collect(),
            Family::Xn => {
                let (lo, hi) = self.index_range(1, self.max_len as i64);
                (lo.max(1)..=hi)
                    .map(|n| {
                        let n = n as usize;
                        let spec = SplitSpec::xn(&vec![1; n], &vec![-1; n])?;
                        Ok(Member {
                            id: format!("n={n}"),
                            cf: None,
                            poly: families::xn_recursion(n),
                            matrix: Some(seifert::seifert_split(&spec)?),
                        })
                    })
                    .collect()
            }
            Family::Yn => {
                let (lo, hi) = self.index_range(1, self.max_len as i64);
                (lo.max(1)..=hi)
                    .map(|n| {
                        let b = families::yn_bundle(n as usize)?;
                        Ok(Member { id: format!("n={n}"), cf: None, poly: b.h, matrix: None })
                    })
                    .collect()
            }
            Family::AppcVertical => {
                let (lo, hi) = self.index_range(-self.max_coef, self.max_coef);
                (lo..=hi)
                    .filter(|&k| k != 0)
                    .map(|k| Member::from_cf(format!("k={k}"), &families::appc_vertical_cf(k)?))
                    .collect()
            }
            Family::AppcHorizontal => {
                let (lo, hi) = self.index_range(1, self.max_len as i64);
                (lo.max(1)..=hi)
                    .map(|n| {
                        let p = families::appc_horizontal(n as usize)?;
                        Ok(Member { id: format!("n={n}"), cf: None, poly: p, matrix: None })
                    })
                    .collect()
            }
            Family::Salem => salem_params(self.max_len)
                .into_iter()
                .map(|(m, n)| Member::from_cf(format!("m={m},n={n}"), &families::salem_cf(m, n)))
                .collect(),
            Family::Montesinos => {
                let h = self.max_coef / 2;
                let mut out = Vec::new();
                for e in (1..=self.max_coef).step_by(2) {
                    for a in 1..=h {
                        for b in 1..=h {
                            for c in 1..=h {
                                let spec = MontesinosSpec {
                                    e,
                                    tangles: vec![EvenCF::new(vec![a])?, EvenCF::new(vec![b, -c])?],
                                };
                                let m = seifert::seifert_montesinos(&spec)?;
                                let desc = spec.tangles.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ");
                                out.push(Member {
                                    id: format!("e={e} {desc}"),
                                    cf: Some(desc),
                                    poly: normalize_alexander(&seifert::alexander_poly(&m), None)?,
                                    matrix: Some(m),
                                });
                            }
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

/// `(m, n)` with `m >= n >= 0`, `m + n` odd and `m + n + 1 <= max_len`.
fn salem_params(max_len: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in 1..max_len {
        if total % 2 == 1 {
            for n in 0..=total / 2 {
                out.push((total - n, n));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub id: String,
    pub cf: Option<String>,
    pub polynomial: String,
    pub verdict: String,
    pub n_real: usize,
    pub n_unit: usize,
    pub n_other: usize,
    pub delta_max: Option<f64>,
    pub signature: Option<i64>,
    pub hoste_ok: bool,
}

pub fn sweep_row(m: &Member, tol: f64) -> Result<SweepRow> {
    let r = classify_with(&m.poly, tol, DEFAULT_BUCKET)?;
    Ok(SweepRow {
        id: m.id.clone(),
        cf: m.cf.clone(),
        polynomial: m.poly.to_string(),
        verdict: r.verdict.to_string(),
        n_real: r.n_real,
        n_unit: r.n_unit,
        n_other: r.n_other,
        delta_max: r.delta_max.as_ref().map(|iv| iv.mid_f64()),
        signature: m.matrix.as_ref().map(seifert::signature),
        hoste_ok: crate::stability::hoste_ok(&m.poly),
    })
}

/// Rows come back in member order whatever the thread count.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let members = spec.members()?;
    members.par_iter().map(|m| sweep_row(m, spec.tol)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroRow {
    pub re: f64,
    pub im: f64,
    pub label: String,
}

/// Every complex zero, with multiplicity, labelled by member id.
pub fn export_zeros(members: &[Member], tol: f64, seed: u64) -> Result<Vec<ZeroRow>> {
    let per: Vec<Vec<ZeroRow>> = members
        .par_iter()
        .map(|m| {
            let zs = numeric_zeros_seeded(&m.poly, tol, seed)?;
            Ok(zs.into_iter().map(|z| ZeroRow { re: z.re, im: z.im, label: m.id.clone() }).collect())
        })
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// CSV with a header row, or a pretty-printed JSON value.
pub fn write_output<T: Serialize>(value: &T, rows: Option<&[T]>, format: Format, out: &mut dyn Write) -> Result<()> {
    match (format, rows) {
        (Format::Csv, Some(rows)) => write_csv(rows, out),
        (Format::Csv, None) => write_csv(std::slice::from_ref(value), out),
        (Format::Json, Some(rows)) => write_json(&rows, out),
        (Format::Json, None) => write_json(value, out),
    }
}

pub fn write_csv<T: Serialize>(rows: &[T], out: &mut dyn Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

/// Process exit status: 2 for bad input, 3 for an oversized sweep, 4 for
/// a failed internal check, 1 for I/O.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::EmptyCF
        | Error::ZeroEntry(_)
        | Error::ZeroPolynomial
        | Error::BadFraction(_)
        | Error::DimensionMismatch(_)
        | Error::BadDimensions(_)
        | Error::InvalidInput(_)
        | Error::ZeroK
        | Error::ParityViolation => 2,
        Error::CapExceeded { .. } => 3,
        Error::Io(_) => 1,
        _ => 4,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::Verdict;

    #[test]
    fn classify_inputs() {
        let out = run_classify(&Input::parse(Some("[2,-2,-8,2]"), None, None).unwrap(), DEFAULT_TOL, 0).unwrap();
        assert_eq!(out.report.verdict, Verdict::Stable);
        let sq = IntPoly::from_desc(&[2, -5, 2]).pow(2);
        assert_eq!(out.polynomial, sq.to_string());
        let out = run_classify(&Input::parse(None, Some("1,-3,1"), None).unwrap(), DEFAULT_TOL, 0).unwrap();
        assert_eq!(out.report.zeros.len(), 2);
        let out = run_classify(&Input::parse(None, None, Some("1,1;0,-1")).unwrap(), DEFAULT_TOL, 0).unwrap();
        assert_eq!(out.report.verdict, Verdict::Stable);
        assert_eq!(out.signature, Some(0));
        let e = Input::parse(Some("[2,x]"), None, None).unwrap_err();
        assert_eq!(exit_code(&e), 2);
    }

    #[test]
    fn sweep_cap_and_order() {
        let mut spec = SweepSpec::new(Family::CfEnum);
        spec.max_len = 3;
        spec.max_coef = 4;
        assert_eq!(spec.size(), 4 + 16 + 64);
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 84);
        assert!(rows.iter().enumerate().all(|(i, r)| r.id == i.to_string()));
        spec.cap = 10;
        assert_eq!(exit_code(&run_sweep(&spec).unwrap_err()), 3);
    }

    #[test]
    fn csv_header() {
        let mut spec = SweepSpec::new(Family::Xn);
        spec.range = Some((1, 2));
        let rows = run_sweep(&spec).unwrap();
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), SWEEP_HEADER);
        let zs = export_zeros(&spec.members().unwrap(), DEFAULT_TOL, 0).unwrap();
        let mut buf = Vec::new();
        write_csv(&zs, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().next().unwrap(), EXPORT_HEADER);
        assert_eq!(zs.len(), 6);
    }

    #[test]
    fn family_names() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert_eq!(parse_range("-4..8").unwrap(), (-4, 8));
        assert!(parse_range("3..1").is_err());
    }
}

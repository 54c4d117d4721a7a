//! Requests, reports, batch tables and the on-disk memo cache.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::git::{classify_section_value, is_torus_separable, kempf_one_ps, minimal_norm_point, OneParamSubgroup, Stability, SupportVector};
use crate::lattice::{require_prime, IntMatrix};
use crate::limits::Limits;
use crate::reps::{expand, RepSpec};
use crate::roots::{RationalHeight, RootDatum, TypeLetter, Weight};
use crate::separable::{check_weak_bound, is_low_separable_index, IndexReport};

/// Which character lattice the group has.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum LatticeSpec {
    /// Full weight lattice (simply-connected form).
    #[default]
    Weight,
    /// Root lattice (adjoint form).
    Root,
    /// Explicit basis; columns are the basis vectors in fundamental-weight
    /// coordinates.
    Matrix(Vec<Vec<i64>>),
}

impl FromStr for LatticeSpec {
    type Err = Error;

    /// `weight`, `root`, or `matrix:` followed by rows separated by `;`
    /// with entries separated by `,`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "weight" => Ok(LatticeSpec::Weight),
            "root" => Ok(LatticeSpec::Root),
            t => match t.strip_prefix("matrix:") {
                Some(body) => {
                    let offset = s.find("matrix:").unwrap_or(0) + "matrix:".len();
                    Ok(LatticeSpec::Matrix(parse_int_rows(body, offset)?))
                }
                None => Err(Error::parse(0, format!("unknown lattice '{t}', expected root, weight or matrix:<rows>"))),
            },
        }
    }
}

impl std::fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeSpec::Weight => f.write_str("weight"),
            LatticeSpec::Root => f.write_str("root"),
            LatticeSpec::Matrix(rows) => {
                let r: Vec<String> =
                    rows.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
                write!(f, "matrix:{}", r.join(";"))
            }
        }
    }
}

impl Serialize for LatticeSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LatticeSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Comma-separated integers; error positions are offset by `offset`.
pub fn parse_int_list(s: &str, offset: usize) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for part in s.split(',') {
        let t = part.trim();
        let lead = part.len() - part.trim_start().len();
        out.push(t.parse().map_err(|_| Error::parse(offset + pos + lead, format!("expected an integer, found '{t}'")))?);
        pos += part.len() + 1;
    }
    Ok(out)
}

/// Rows separated by `;`, each a comma-separated integer list.
pub fn parse_int_rows(s: &str, offset: usize) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for row in s.split(';') {
        out.push(parse_int_list(row, offset + pos)?);
        pos += row.len() + 1;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

/// A group and a representation to analyze.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRequest {
    #[serde(rename = "type")]
    pub type_letter: TypeLetter,
    pub rank: usize,
    #[serde(default)]
    pub lattice: LatticeSpec,
    pub rep: RepSpec,
    #[serde(default)]
    pub prime: Option<u64>,
    #[serde(default)]
    pub format: OutputFormat,
}

impl AnalysisRequest {
    pub fn new(type_letter: TypeLetter, rank: usize, rep: RepSpec) -> Self {
        AnalysisRequest { type_letter, rank, lattice: LatticeSpec::Weight, rep, prime: None, format: OutputFormat::Json }
    }

    pub fn with_prime(mut self, p: u64) -> Self {
        self.prime = Some(p);
        self
    }

    pub fn with_lattice(mut self, lattice: LatticeSpec) -> Self {
        self.lattice = lattice;
        self
    }

    pub fn datum(&self) -> Result<RootDatum> {
        match &self.lattice {
            LatticeSpec::Weight => RootDatum::new(self.type_letter, self.rank, None),
            LatticeSpec::Root => RootDatum::adjoint_form(self.type_letter, self.rank),
            LatticeSpec::Matrix(rows) => RootDatum::new(self.type_letter, self.rank, Some(IntMatrix::from_rows(rows)?)),
        }
    }

    /// `A2`, or `A2[root]` for a non-default lattice.
    pub fn group(&self) -> Group {
        Group { type_letter: self.type_letter, rank: self.rank, lattice: self.lattice.clone() }
    }

    pub fn group_label(&self) -> String {
        self.group().label()
    }

    /// Hex SHA-256 of the canonical (datum, representation) description.
    pub fn cache_key(&self) -> String {
        let canonical = format!("{}|{}|{}|{}", self.type_letter.as_char(), self.rank, self.lattice, self.rep);
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Group {
    #[serde(rename = "type")]
    pub type_letter: TypeLetter,
    pub rank: usize,
    pub lattice: LatticeSpec,
}

impl Group {
    /// Same label as the table rows, e.g. "A2" or "A2[root]".
    pub fn label(&self) -> String {
        match self.lattice {
            LatticeSpec::Weight => format!("{}{}", self.type_letter.as_char(), self.rank),
            ref l => format!("{}{}[{}]", self.type_letter.as_char(), self.rank, l),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub low_height: bool,
    pub low_separable_index: bool,
}

/// Everything computed for one request.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub group: Group,
    pub rep: RepSpec,
    pub dim: u64,
    pub weight_count: usize,
    pub height: RationalHeight,
    pub torsion_primes: Vec<u64>,
    #[serde(rename = "p_T")]
    pub p_t: u64,
    pub psi: RationalHeight,
    pub weak_bound: u128,
    /// `None` when the height is below 1.
    pub weak_bound_ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Verdicts>,
}

impl AnalysisReport {
    fn from_index(req: &AnalysisRequest, index: &IndexReport) -> Result<Self> {
        let weak_bound = index
            .weak_bound
            .to_u128()
            .ok_or_else(|| Error::Unsupported(format!("weak bound {} does not fit in 128 bits", index.weak_bound)))?;
        let weak_bound_ok = check_weak_bound(index);
        if weak_bound_ok == Some(false) {
            log::error!(
                "{} {}: p_T = {} exceeds the weak bound {}",
                req.group_label(),
                req.rep,
                index.p_t,
                weak_bound
            );
        }
        Ok(AnalysisReport {
            group: req.group(),
            rep: req.rep.clone(),
            dim: index.dimension,
            weight_count: index.weight_count,
            height: index.height.clone(),
            torsion_primes: index.torsion_primes.iter().copied().collect(),
            p_t: index.p_t,
            psi: index.psi.clone(),
            weak_bound,
            weak_bound_ok,
            prime: None,
            verdicts: None,
        })
    }

    /// Fills in the verdicts for `p`; `None` clears them.
    pub fn with_prime(mut self, p: Option<u64>) -> Result<Self> {
        self.prime = p;
        self.verdicts = match p {
            None => None,
            Some(p) => {
                require_prime(p)?;
                let q = num_rational::BigRational::from_integer(p.into());
                Some(Verdicts { low_height: self.height.0 < q, low_separable_index: self.psi.0 < q })
            }
        };
        Ok(self)
    }
}

/// Runs the full analysis of one request.
pub fn analyze(req: &AnalysisRequest, limits: &Limits) -> Result<AnalysisReport> {
    if let Some(p) = req.prime {
        require_prime(p)?;
    }
    let datum = req.datum()?;
    let w = expand(&datum, &req.rep, limits)?;
    let index = IndexReport::from_multiset(&w, limits)?;
    let report = AnalysisReport::from_index(req, &index)?.with_prime(req.prime)?;
    if let (Some(p), Some(v)) = (req.prime, report.verdicts) {
        debug_assert_eq!(v.low_separable_index, is_low_separable_index(&index, p).unwrap_or(false));
    }
    Ok(report)
}

/// Like [`analyze`], reading and writing the prime-independent part of the
/// report through `cache` when one is given.
pub fn analyze_cached(req: &AnalysisRequest, limits: &Limits, cache: Option<&Cache>) -> Result<AnalysisReport> {
    let Some(cache) = cache else { return analyze(req, limits) };
    if let Some(p) = req.prime {
        require_prime(p)?;
    }
    if let Some(hit) = cache.get(req) {
        return hit.with_prime(req.prime);
    }
    let mut bare = req.clone();
    bare.prime = None;
    let report = analyze(&bare, limits)?;
    cache.put(req, &report)?;
    report.with_prime(req.prime)
}

/// Memo of reports on disk, one JSON file per (datum, representation).
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, req: &AnalysisRequest) -> PathBuf {
        self.dir.join(format!("{}.json", req.cache_key()))
    }

    /// A stored report for the same group and representation. Unreadable
    /// or mismatching entries count as misses.
    pub fn get(&self, req: &AnalysisRequest) -> Option<AnalysisReport> {
        let text = fs::read_to_string(self.path(req)).ok()?;
        let report: AnalysisReport = serde_json::from_str(&text).ok()?;
        let same = report.group.type_letter == req.type_letter
            && report.group.rank == req.rank
            && report.group.lattice == req.lattice
            && report.rep == req.rep;
        if !same {
            log::warn!("ignoring cache entry {} for a different request", self.path(req).display());
            return None;
        }
        Some(report)
    }

    /// Writes via a uniquely named temporary file and a rename, so
    /// concurrent writers of the same entry never expose a partial file.
    pub fn put(&self, req: &AnalysisRequest, report: &AnalysisReport) -> Result<()> {
        let text = serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
        let target = self.path(req);
        let tmp = self.dir.join(format!(
            ".{}.{}.{:?}.tmp",
            req.cache_key(),
            std::process::id(),
            std::thread::current().id()
        ));
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &target)?;
        Ok(())
    }
}

/// The built-in catalog: A1–A4, B2, C3, G2, each with its standard and
/// adjoint representation.
pub fn catalog() -> Vec<AnalysisRequest> {
    use TypeLetter::*;
    let groups = [(A, 1), (A, 2), (A, 3), (A, 4), (B, 2), (C, 3), (G, 2)];
    groups
        .iter()
        .flat_map(|&(l, r)| [RepSpec::Standard, RepSpec::Adjoint].map(|rep| AnalysisRequest::new(l, r, rep)))
        .collect()
}

/// Every (group, representation) pair from the given lists, in order.
pub fn sweep(groups: &[(TypeLetter, usize)], reps: &[RepSpec]) -> Vec<AnalysisRequest> {
    groups
        .iter()
        .flat_map(|&(l, r)| reps.iter().map(move |rep| AnalysisRequest::new(l, r, rep.clone())))
        .collect()
}

/// One row of a batch table; failures are kept per row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "FlatRow", into = "FlatRow")]
pub struct TableRow {
    pub group: String,
    pub rep: String,
    pub outcome: RowOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowOutcome {
    Ok { dim: u64, height: RationalHeight, p_t: u64, psi: RationalHeight, weak_bound: u128 },
    Err { error: String },
}

/// Wire form of a row: value fields on success, `error` otherwise.
#[derive(Serialize, Deserialize)]
struct FlatRow {
    group: String,
    rep: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    height: Option<RationalHeight>,
    #[serde(default, rename = "p_T", skip_serializing_if = "Option::is_none")]
    p_t: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    psi: Option<RationalHeight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weak_bound: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

impl From<TableRow> for FlatRow {
    fn from(r: TableRow) -> Self {
        let mut flat = FlatRow {
            group: r.group,
            rep: r.rep,
            dim: None,
            height: None,
            p_t: None,
            psi: None,
            weak_bound: None,
            error: None,
        };
        match r.outcome {
            RowOutcome::Ok { dim, height, p_t, psi, weak_bound } => {
                flat.dim = Some(dim);
                flat.height = Some(height);
                flat.p_t = Some(p_t);
                flat.psi = Some(psi);
                flat.weak_bound = Some(weak_bound);
            }
            RowOutcome::Err { error } => flat.error = Some(error),
        }
        flat
    }
}

impl From<FlatRow> for TableRow {
    fn from(f: FlatRow) -> Self {
        let outcome = match (f.error, f.dim, f.height, f.p_t, f.psi, f.weak_bound) {
            (None, Some(dim), Some(height), Some(p_t), Some(psi), Some(weak_bound)) => {
                RowOutcome::Ok { dim, height, p_t, psi, weak_bound }
            }
            (error, ..) => RowOutcome::Err { error: error.unwrap_or_else(|| "incomplete row".to_string()) },
        };
        TableRow { group: f.group, rep: f.rep, outcome }
    }
}

pub const CSV_HEADER: [&str; 7] = ["group", "rep", "dim", "height", "p_T", "psi", "weak_bound"];

/// Analyzes each request (in parallel) and returns rows in request order.
pub fn batch_table(requests: &[AnalysisRequest], limits: &Limits, cache: Option<&Cache>) -> Vec<TableRow> {
    requests
        .par_iter()
        .map(|req| TableRow {
            group: req.group_label(),
            rep: req.rep.to_string(),
            outcome: match analyze_cached(req, limits, cache) {
                Ok(r) => RowOutcome::Ok { dim: r.dim, height: r.height, p_t: r.p_t, psi: r.psi, weak_bound: r.weak_bound },
                Err(e) => RowOutcome::Err { error: e.to_string() },
            },
        })
        .collect()
}

/// CSV with the fixed header; a failed row carries `error: ...` in the
/// `dim` cell and leaves the other value cells empty.
pub fn table_csv(rows: &[TableRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for row in rows {
        let cells: [String; 7] = match &row.outcome {
            RowOutcome::Ok { dim, height, p_t, psi, weak_bound } => [
                row.group.clone(),
                row.rep.clone(),
                dim.to_string(),
                height.to_string(),
                p_t.to_string(),
                psi.to_string(),
                weak_bound.to_string(),
            ],
            RowOutcome::Err { error } => [
                row.group.clone(),
                row.rep.clone(),
                format!("error: {error}"),
                String::new(),
                String::new(),
                String::new(),
                String::new(),
            ],
        };
        w.write_record(&cells).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Parses CSV produced by [`table_csv`].
pub fn parse_table_csv(text: &str) -> Result<Vec<TableRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let headers = r.headers().map_err(|e| Error::Io(e.to_string()))?.clone();
    if headers.iter().ne(CSV_HEADER) {
        return Err(Error::parse(0, "unexpected CSV header"));
    }
    let mut rows = Vec::new();
    for (line, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| Error::Io(e.to_string()))?;
        let bad = |what: &str| Error::parse(line + 1, format!("bad {what} cell"));
        let outcome = match rec[2].strip_prefix("error: ") {
            Some(msg) => RowOutcome::Err { error: msg.to_string() },
            None => RowOutcome::Ok {
                dim: rec[2].parse().map_err(|_| bad("dim"))?,
                height: RationalHeight::parse(&rec[3]).map_err(|_| bad("height"))?,
                p_t: rec[4].parse().map_err(|_| bad("p_T"))?,
                psi: RationalHeight::parse(&rec[5]).map_err(|_| bad("psi"))?,
                weak_bound: rec[6].parse().map_err(|_| bad("weak_bound"))?,
            },
        };
        rows.push(TableRow { group: rec[0].to_string(), rep: rec[1].to_string(), outcome });
    }
    Ok(rows)
}

pub fn table_json(rows: &[TableRow]) -> Result<String> {
    serde_json::to_string_pretty(rows).map_err(|e| Error::Io(e.to_string()))
}

pub fn table_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:<10} {:<24} {:>8} {:>8} {:>5} {:>8} {:>12}", "group", "rep", "dim", "height", "p_T", "psi", "weak_bound");
    for row in rows {
        match &row.outcome {
            RowOutcome::Ok { dim, height, p_t, psi, weak_bound } => {
                let _ = writeln!(
                    out,
                    "{:<10} {:<24} {:>8} {:>8} {:>5} {:>8} {:>12}",
                    row.group,
                    row.rep,
                    dim,
                    height.to_string(),
                    p_t,
                    psi.to_string(),
                    weak_bound
                );
            }
            RowOutcome::Err { error } => {
                let _ = writeln!(out, "{:<10} {:<24} error: {}", row.group, row.rep, error);
            }
        }
    }
    out
}

pub fn report_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let primes: Vec<String> = r.torsion_primes.iter().map(|p| p.to_string()).collect();
    let _ = writeln!(out, "group:          {}{} ({} lattice)", r.group.type_letter.as_char(), r.group.rank, r.group.lattice);
    let _ = writeln!(out, "rep:            {}", r.rep);
    let _ = writeln!(out, "dim:            {}", r.dim);
    let _ = writeln!(out, "weights:        {}", r.weight_count);
    let _ = writeln!(out, "height:         {}", r.height);
    let _ = writeln!(out, "torsion primes: [{}]", primes.join(", "));
    let _ = writeln!(out, "p_T:            {}", r.p_t);
    let _ = writeln!(out, "psi:            {}", r.psi);
    let check = match r.weak_bound_ok {
        Some(true) => "holds",
        Some(false) => "VIOLATED",
        None => "not applicable",
    };
    let _ = writeln!(out, "weak bound:     {} ({check})", r.weak_bound);
    if let (Some(p), Some(v)) = (r.prime, r.verdicts) {
        let _ = writeln!(out, "p = {p}: low height {}, low separable index {}", v.low_height, v.low_separable_index);
    }
    out
}

pub fn report_csv(r: &AnalysisReport) -> Result<String> {
    let row = TableRow {
        group: r.group.label(),
        rep: r.rep.to_string(),
        outcome: RowOutcome::Ok { dim: r.dim, height: r.height.clone(), p_t: r.p_t, psi: r.psi.clone(), weak_bound: r.weak_bound },
    };
    table_csv(&[row])
}

/// One line of a weight listing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    pub weight: Weight,
    pub multiplicity: u64,
    pub height: RationalHeight,
    pub dominant: bool,
}

/// All weights of the requested representation in lexicographic order.
pub fn dump_weights(req: &AnalysisRequest, limits: &Limits) -> Result<Vec<WeightRow>> {
    let datum = req.datum()?;
    let w = expand(&datum, &req.rep, limits)?;
    Ok(w.entries()
        .iter()
        .map(|(mu, &m)| WeightRow {
            weight: mu.clone(),
            multiplicity: m,
            height: datum.weight_height(mu),
            dominant: mu.is_dominant(),
        })
        .collect())
}

pub fn weights_csv(rows: &[WeightRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["weight", "multiplicity", "height", "dominant"]).map_err(io)?;
    for r in rows {
        w.write_record([r.weight.to_string(), r.multiplicity.to_string(), r.height.to_string(), r.dominant.to_string()])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn weights_text(rows: &[WeightRow]) -> String {
    let mut out = String::new();
    for r in rows {
        let mark = if r.dominant { " *" } else { "" };
        let _ = writeln!(out, "{:<20} x{:<4} ht {}{}", r.weight.to_string(), r.multiplicity, r.height, mark);
    }
    out
}

/// Torus GIT summary for an explicit weight support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GitReport {
    pub group: Group,
    pub support: Vec<Weight>,
    pub classification: Stability,
    pub minimal_norm_squared: RationalHeight,
    pub kempf: Option<OneParamSubgroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separable: Option<bool>,
}

/// Parses `a,b;c,d` into weights.
pub fn parse_support(s: &str) -> Result<Vec<Weight>> {
    Ok(parse_int_rows(s, 0)?.into_iter().map(Weight).collect())
}

pub fn git_check(req: &AnalysisRequest, support: &[Weight], limits: &Limits) -> Result<GitReport> {
    let datum = req.datum()?;
    let sv = SupportVector::from_weights(&datum, support.iter().cloned())?;
    let separable = req.prime.map(|p| is_torus_separable(&sv, p)).transpose()?;
    let mnp = minimal_norm_point(&sv, limits)?;
    Ok(GitReport {
        group: req.group(),
        support: sv.weights().iter().cloned().collect(),
        classification: classify_section_value(&sv, limits)?,
        minimal_norm_squared: RationalHeight(mnp.norm_squared),
        kempf: kempf_one_ps(&sv, limits)?,
        prime: req.prime,
        separable,
    })
}

pub fn git_text(r: &GitReport) -> String {
    let mut out = String::new();
    let s: Vec<String> = r.support.iter().map(|w| w.to_string()).collect();
    let _ = writeln!(out, "support:        {}", s.join(" "));
    let _ = writeln!(out, "classification: {}", r.classification);
    let _ = writeln!(out, "min norm^2:     {}", r.minimal_norm_squared);
    match &r.kempf {
        Some(k) => {
            let _ = writeln!(out, "kempf 1-PS:     {k}");
        }
        None => {
            let _ = writeln!(out, "kempf 1-PS:     none (semistable)");
        }
    }
    if let (Some(p), Some(sep)) = (r.prime, r.separable) {
        let _ = writeln!(out, "separable at p = {p}: {sep}");
    }
    out
}

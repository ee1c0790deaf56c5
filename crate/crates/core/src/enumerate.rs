// Copyright 2026 the descartes-core Authors
// SPDX-License-Identifier: Apache-2.0

//! Batch generation of integral Descartes quadruples from every spinor pair
//! in a square lattice window.
//!
//! Pairs `(a, b) = ((m1, n1), (m2, n2))` are visited in lexicographic order
//! of `(m1, n1, m2, n2)`. A shard `i/k` owns the `i`-th of `k` contiguous
//! blocks of that order, so concatenating shards `0..k` reproduces the
//! unsharded stream.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadruple::{canonicalize, descartes_residual, from_spinor_pair};
use crate::rational;
use crate::spinor::Spinor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    JsonLines,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" | "json-lines" => Ok(OutputFormat::JsonLines),
            _ => Err(Error::Parse(format!("unknown format `{s}`, expected csv or jsonl"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

impl Default for Shard {
    fn default() -> Self {
        Shard { index: 0, count: 1 }
    }
}

impl FromStr for Shard {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("`{s}` is not a shard of the form i/k"));
        let (i, k) = s.split_once('/').ok_or_else(bad)?;
        let shard = Shard {
            index: i.trim().parse().map_err(|_| bad())?,
            count: k.trim().parse().map_err(|_| bad())?,
        };
        if shard.count == 0 || shard.index >= shard.count {
            return Err(Error::InvalidJob(format!("shard {s} needs 0 <= i < k")));
        }
        Ok(shard)
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationJob {
    /// Largest absolute value of a spinor component.
    pub bound: u32,
    pub primitive_only: bool,
    pub output_format: OutputFormat,
    pub shard: Shard,
    /// Keep pairs where `a` or `b` is the zero spinor.
    pub include_zero: bool,
}

impl EnumerationJob {
    pub fn new(bound: u32) -> Self {
        EnumerationJob {
            bound,
            primitive_only: false,
            output_format: OutputFormat::Csv,
            shard: Shard::default(),
            include_zero: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.bound == 0 {
            return Err(Error::InvalidJob("bound must be at least 1".into()));
        }
        if self.shard.count == 0 || self.shard.index >= self.shard.count {
            return Err(Error::InvalidJob(format!("invalid shard {}", self.shard)));
        }
        Ok(())
    }

    fn side(&self) -> u64 {
        2 * u64::from(self.bound) + 1
    }

    /// Number of lattice pairs in the whole window.
    pub fn window_size(&self) -> u64 {
        self.side().pow(4)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadrupleRecord {
    pub m1: i64,
    pub n1: i64,
    pub m2: i64,
    pub n2: i64,
    #[serde(rename = "A")]
    pub a: i64,
    #[serde(rename = "B")]
    pub b: i64,
    #[serde(rename = "C")]
    pub c: i64,
    #[serde(rename = "D1")]
    pub d1: i64,
    #[serde(rename = "D2")]
    pub d2: i64,
    /// `(A, B, C, D1)` sorted ascending and divided by its gcd.
    pub canonical: [i64; 4],
    pub primitive: bool,
}

impl QuadrupleRecord {
    pub fn from_pair(m1: i64, n1: i64, m2: i64, n2: i64) -> QuadrupleRecord {
        let f = from_spinor_pair(&Spinor::from_ints(m1, n1), &Spinor::from_ints(m2, n2));
        let int = |r: &rational::Rational| rational::to_i64(r).expect("integral curvature");
        let [a, b, c] = f.abc().map(|r| int(&r));
        let canon = canonicalize(&f.quadruple_1.to_array()).expect("integral quadruple");
        QuadrupleRecord {
            m1,
            n1,
            m2,
            n2,
            a,
            b,
            c,
            d1: int(f.d1()),
            d2: int(f.d2()),
            canonical: canon.primitive_form.map(|x| x.to_i64().expect("fits in i64")),
            primitive: canon.is_primitive,
        }
    }

    pub fn residuals(&self) -> (i128, i128) {
        let r = |d: i64| {
            let q = [self.a, self.b, self.c, d].map(rational::int);
            descartes_residual(&q).to_integer().to_i128().unwrap()
        };
        (r(self.d1), r(self.d2))
    }

    fn key(&self) -> (i64, i64, i64, i64) {
        (self.m1, self.n1, self.m2, self.n2)
    }
}

/// Iterator over the records of one shard.
#[derive(Clone, Debug)]
pub struct Enumeration {
    job: EnumerationJob,
    next: u64,
    end: u64,
}

pub fn enumerate(job: &EnumerationJob) -> Result<Enumeration> {
    job.validate()?;
    let total = job.window_size();
    let Shard { index, count } = job.shard;
    let block = |i: u64| ((u128::from(total) * u128::from(i)) / u128::from(count)) as u64;
    Ok(Enumeration {
        job: job.clone(),
        next: block(index),
        end: block(index + 1),
    })
}

impl Iterator for Enumeration {
    type Item = QuadrupleRecord;

    fn next(&mut self) -> Option<QuadrupleRecord> {
        let side = self.job.side();
        let bound = i64::from(self.job.bound);
        while self.next < self.end {
            let mut idx = self.next;
            self.next += 1;
            let mut digits = [0i64; 4];
            for d in digits.iter_mut().rev() {
                *d = (idx % side) as i64 - bound;
                idx /= side;
            }
            let [m1, n1, m2, n2] = digits;
            if !self.job.include_zero && ((m1 == 0 && n1 == 0) || (m2 == 0 && n2 == 0)) {
                continue;
            }
            let record = QuadrupleRecord::from_pair(m1, n1, m2, n2);
            if self.job.primitive_only && !record.primitive {
                continue;
            }
            return Some(record);
        }
        None
    }
}

/// Merges shard outputs into the unsharded order.
pub fn merge_shards(shards: impl IntoIterator<Item = Vec<QuadrupleRecord>>) -> Vec<QuadrupleRecord> {
    let mut all: Vec<QuadrupleRecord> = shards.into_iter().flatten().collect();
    all.sort_by_key(QuadrupleRecord::key);
    all
}

/// Distinct canonical quadruples, ordered by `(sum, entries)`.
pub fn dedup_canonical(records: impl IntoIterator<Item = QuadrupleRecord>) -> Vec<[i64; 4]> {
    let set: BTreeSet<(i64, [i64; 4])> = records
        .into_iter()
        .map(|r| (r.canonical.iter().sum(), r.canonical))
        .collect();
    set.into_iter().map(|(_, q)| q).collect()
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    m1: i64,
    n1: i64,
    m2: i64,
    n2: i64,
    #[serde(rename = "A")]
    a: i64,
    #[serde(rename = "B")]
    b: i64,
    #[serde(rename = "C")]
    c: i64,
    #[serde(rename = "D1")]
    d1: i64,
    #[serde(rename = "D2")]
    d2: i64,
    canonical: String,
    primitive: bool,
}

impl From<&QuadrupleRecord> for CsvRow {
    fn from(r: &QuadrupleRecord) -> Self {
        CsvRow {
            m1: r.m1,
            n1: r.n1,
            m2: r.m2,
            n2: r.n2,
            a: r.a,
            b: r.b,
            c: r.c,
            d1: r.d1,
            d2: r.d2,
            canonical: r.canonical.map(|x| x.to_string()).join(","),
            primitive: r.primitive,
        }
    }
}

impl TryFrom<CsvRow> for QuadrupleRecord {
    type Error = Error;
    fn try_from(row: CsvRow) -> Result<Self> {
        let parts: Vec<i64> = row
            .canonical
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse(format!("canonical `{}`: {e}", row.canonical)))?;
        let canonical: [i64; 4] = parts
            .try_into()
            .map_err(|_| Error::Parse(format!("canonical `{}` needs 4 entries", row.canonical)))?;
        Ok(QuadrupleRecord {
            m1: row.m1,
            n1: row.n1,
            m2: row.m2,
            n2: row.n2,
            a: row.a,
            b: row.b,
            c: row.c,
            d1: row.d1,
            d2: row.d2,
            canonical,
            primitive: row.primitive,
        })
    }
}

pub const CSV_HEADER: &str = "m1,n1,m2,n2,A,B,C,D1,D2,canonical,primitive";

pub fn write_records<W: Write>(
    records: impl IntoIterator<Item = QuadrupleRecord>,
    format: OutputFormat,
    out: W,
) -> Result<()> {
    match format {
        OutputFormat::Csv => {
            // header written by hand so that an empty run still has one
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(CSV_HEADER.split(','))
                .map_err(|e| Error::Io(e.to_string()))?;
            for r in records {
                w.serialize(CsvRow::from(&r)).map_err(|e| Error::Io(e.to_string()))?;
            }
            w.flush()?;
        }
        OutputFormat::JsonLines => {
            let mut out = std::io::BufWriter::new(out);
            for r in records {
                serde_json::to_writer(&mut out, &r).map_err(|e| Error::Io(e.to_string()))?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

pub fn read_records(format: OutputFormat, input: &str) -> Result<Vec<QuadrupleRecord>> {
    match format {
        OutputFormat::Csv => csv::Reader::from_reader(input.as_bytes())
            .deserialize::<CsvRow>()
            .map(|row| row.map_err(|e| Error::Parse(e.to_string()))?.try_into())
            .collect(),
        OutputFormat::JsonLines => input
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).map_err(|e| Error::Parse(e.to_string())))
            .collect(),
    }
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error.to_string()))?;
    Ok(())
}

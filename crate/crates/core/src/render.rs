//! Tables and listings: the `(r, iota, c)` partition grid, the monomial grid
//! and ULF groupings, with CSV, JSON and aligned-text output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{BettiClassification, Semigroup};
use crate::triple::{gamma, render_monomial, MonomialStyle, TripleDecomposition, TripleSemigroup};

/// Which of the eight `(iota, c)` families an entry belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryClass {
    /// `(0, 0)`
    Zero,
    /// `(1, -1)`
    M1,
    /// `(1, 0)`
    Z1,
    /// `(1, 1)`
    P1,
    /// `(i, -i)`, `i >= 2`
    NegI,
    /// `(i, -i+1)`, `i >= 2`
    NegI1,
    /// `(i, i-1)`, `i >= 2`
    PosI1,
    /// `(i, i)`, `i >= 2`
    PosI,
}

impl EntryClass {
    pub fn classify(iota: i64, c: i64) -> Option<Self> {
        match (iota, c) {
            (0, 0) => Some(EntryClass::Zero),
            (1, -1) => Some(EntryClass::M1),
            (1, 0) => Some(EntryClass::Z1),
            (1, 1) => Some(EntryClass::P1),
            (i, c) if i >= 2 && c == -i => Some(EntryClass::NegI),
            (i, c) if i >= 2 && c == -i + 1 => Some(EntryClass::NegI1),
            (i, c) if i >= 2 && c == i - 1 => Some(EntryClass::PosI1),
            (i, c) if i >= 2 && c == i => Some(EntryClass::PosI),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            EntryClass::Zero => "zero",
            EntryClass::M1 => "m1",
            EntryClass::Z1 => "z1",
            EntryClass::P1 => "p1",
            EntryClass::NegI => "neg_i",
            EntryClass::NegI1 => "neg_i1",
            EntryClass::PosI1 => "pos_i1",
            EntryClass::PosI => "pos_i",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub r: i64,
    pub iota: i64,
    pub c: i64,
    pub class: EntryClass,
}

impl TableEntry {
    fn new(r: i64, iota: i64, c: i64) -> Self {
        let class = EntryClass::classify(iota, c).expect("c lies in Gamma_iota");
        TableEntry { r, iota, c, class }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCell {
    pub ell: i64,
    pub d: i64,
    pub entries: Vec<TableEntry>,
}

/// Members of `S cap [0, (a+2)L]` laid out by length (rows) and denumerant
/// (columns). Cells are stored row-major, empty cells included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTable {
    pub a: i64,
    pub max_length: i64,
    pub max_denumerant: i64,
    pub cells: Vec<PartitionCell>,
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    ell: i64,
    d: i64,
    r: i64,
    iota: i64,
    c: i64,
    class: EntryClass,
}

pub const PARTITION_CSV_HEADER: &str = "ell,d,r,iota,c,class";

impl PartitionTable {
    fn empty_grid(t: &TripleSemigroup) -> Self {
        let (rows, cols) = (t.max_table_length(), t.max_table_denumerant());
        let cells = (0..=rows)
            .flat_map(|ell| {
                (1..=cols).map(move |d| PartitionCell {
                    ell,
                    d,
                    entries: Vec::new(),
                })
            })
            .collect();
        PartitionTable {
            a: t.a(),
            max_length: rows,
            max_denumerant: cols,
            cells,
        }
    }

    fn index(&self, ell: i64, d: i64) -> Option<usize> {
        if (0..=self.max_length).contains(&ell) && (1..=self.max_denumerant).contains(&d) {
            Some((ell * self.max_denumerant + d - 1) as usize)
        } else {
            None
        }
    }

    pub fn cell(&self, ell: i64, d: i64) -> Option<&PartitionCell> {
        self.index(ell, d).map(|i| &self.cells[i])
    }

    pub fn entries(&self) -> impl Iterator<Item = (&PartitionCell, &TableEntry)> {
        self.cells
            .iter()
            .flat_map(|c| c.entries.iter().map(move |e| (c, e)))
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        // header is written even for an empty table
        w.write_record(PARTITION_CSV_HEADER.split(','))
            .map_err(|e| Error::Parse(e.to_string()))?;
        let mut w = csv::WriterBuilder::new()
            .has_headers(false)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(w.into_inner().map_err(|e| Error::Parse(e.to_string()))?);
        for (cell, e) in self.entries() {
            w.serialize(CsvRow {
                ell: cell.ell,
                d: cell.d,
                r: e.r,
                iota: e.iota,
                c: e.c,
                class: e.class,
            })
            .map_err(|e| Error::Parse(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Rebuilds the table for `a` from its CSV form.
    pub fn from_csv(a: i64, text: &str) -> Result<Self> {
        let t = TripleSemigroup::new(a)?;
        let mut table = PartitionTable::empty_grid(&t);
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let header = reader.headers().map_err(|e| Error::Parse(e.to_string()))?;
        if header.iter().collect::<Vec<_>>().join(",") != PARTITION_CSV_HEADER {
            return Err(Error::Parse(format!("unexpected header {header:?}")));
        }
        for row in reader.deserialize::<CsvRow>() {
            let row = row.map_err(|e| Error::Parse(e.to_string()))?;
            if EntryClass::classify(row.iota, row.c) != Some(row.class) {
                return Err(Error::Parse(format!("class mismatch for r = {}", row.r)));
            }
            let idx = table.index(row.ell, row.d).ok_or_else(|| {
                Error::Parse(format!("cell ({}, {}) out of range", row.ell, row.d))
            })?;
            table.cells[idx].entries.push(TableEntry {
                r: row.r,
                iota: row.iota,
                c: row.c,
                class: row.class,
            });
        }
        Ok(table)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(&self.cells).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Aligned grid: one band per length, one column per denumerant.
    pub fn to_text(&self) -> String {
        let render = |e: &TableEntry| format!("{:>4} {:>3} {:>3}", e.r, e.iota, e.c);
        let cells: Vec<Vec<String>> = (0..=self.max_length)
            .flat_map(|ell| (1..=self.max_denumerant).map(move |d| (ell, d)))
            .map(|(ell, d)| {
                self.cell(ell, d)
                    .unwrap()
                    .entries
                    .iter()
                    .map(render)
                    .collect()
            })
            .collect();
        let header: Vec<String> = (1..=self.max_denumerant)
            .map(|d| format!("d={d}"))
            .collect();
        text_grid(self.max_length, self.max_denumerant, &header, &cells)
    }
}

fn text_grid(max_length: i64, cols: i64, header: &[String], cells: &[Vec<String>]) -> String {
    let cols = cols as usize;
    let mut widths: Vec<usize> = header.iter().map(String::len).collect();
    for (k, cell) in cells.iter().enumerate() {
        for line in cell {
            widths[k % cols] = widths[k % cols].max(line.chars().count());
        }
    }
    let label_width = format!("ell={max_length}").len();
    let mut out = String::new();
    let row_line = |label: &str, items: &[&str]| {
        let mut line = format!("{label:<label_width$}");
        for (w, item) in widths.iter().zip(items) {
            let pad = w - item.chars().count();
            let _ = write!(line, " | {item}{}", " ".repeat(pad));
        }
        line.trim_end().to_string() + "\n"
    };
    let sep = {
        let mut s = "-".repeat(label_width);
        for w in &widths {
            s.push_str("-+-");
            s.push_str(&"-".repeat(*w));
        }
        s + "\n"
    };
    let head: Vec<&str> = header.iter().map(String::as_str).collect();
    out.push_str(&row_line("", &head));
    for ell in 0..=max_length {
        out.push_str(&sep);
        let row = &cells[ell as usize * cols..(ell as usize + 1) * cols];
        let height = row.iter().map(Vec::len).max().unwrap_or(0).max(1);
        for h in 0..height {
            let label = if h == 0 {
                format!("ell={ell}")
            } else {
                String::new()
            };
            let items: Vec<&str> = row
                .iter()
                .map(|c| c.get(h).map(String::as_str).unwrap_or(""))
                .collect();
            out.push_str(&row_line(&label, &items));
        }
    }
    out
}

pub fn partition_table(a: i64) -> Result<PartitionTable> {
    let t = TripleSemigroup::new(a)?;
    let mut table = PartitionTable::empty_grid(&t);
    for ell in 0..=table.max_length {
        for d in 1..=table.max_denumerant {
            let i = ell + 2 - 2 * d;
            if i < 0 {
                continue;
            }
            let idx = table.index(ell, d).expect("in range");
            table.cells[idx].entries = t
                .s_d_i(d, i)?
                .into_iter()
                .map(|r| TableEntry::new(r, i, r - (a + 1) * ell))
                .collect();
        }
    }
    Ok(table)
}

/// The same grid computed by enumeration: every member of
/// `S cap [0, (a+2)L]` is placed by its length and denumerant.
pub fn partition_table_by_enumeration(a: i64) -> Result<PartitionTable> {
    let t = TripleSemigroup::new(a)?;
    let s = t.semigroup();
    let mut table = PartitionTable::empty_grid(&t);
    for r in 0..=(a + 2) * table.max_length {
        if !s.contains(r) {
            continue;
        }
        let lengths = s.length_set(r)?;
        let d = s.denumerant(r) as i64;
        let ell = lengths[0];
        let idx = match (lengths.len(), table.index(ell, d)) {
            (1, Some(idx)) => idx,
            _ => {
                return Err(Error::OutsideClosedForm(format!(
                    "{r} does not fit the table for a = {a}"
                )))
            }
        };
        table.cells[idx]
            .entries
            .push(TableEntry::new(r, ell + 2 - 2 * d, r - (a + 1) * ell));
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialEntry {
    pub r: i64,
    pub basis: Vec<String>,
    pub iota: i64,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialCell {
    pub ell: i64,
    pub d: i64,
    pub entries: Vec<MonomialEntry>,
}

/// Monomial bases `W_r` laid out like [`PartitionTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialTable {
    pub a: i64,
    pub max_length: i64,
    pub max_denumerant: i64,
    pub cells: Vec<MonomialCell>,
}

impl MonomialTable {
    pub fn cell(&self, ell: i64, d: i64) -> Option<&MonomialCell> {
        if (0..=self.max_length).contains(&ell) && (1..=self.max_denumerant).contains(&d) {
            Some(&self.cells[(ell * self.max_denumerant + d - 1) as usize])
        } else {
            None
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(&self.cells).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|c| {
                c.entries
                    .iter()
                    .map(|e| format!("{} {} {}", e.basis.join(","), e.iota, e.c))
                    .collect()
            })
            .collect();
        let header: Vec<String> = (1..=self.max_denumerant)
            .map(|d| format!("d={d}"))
            .collect();
        text_grid(self.max_length, self.max_denumerant, &header, &cells)
    }
}

/// Monomial grid for lengths `0..=max_length` and denumerants
/// `1..=max_denumerant`. Every cell must lie below the first element with
/// two factorization lengths.
pub fn monomial_table(
    a: i64,
    max_length: i64,
    max_denumerant: i64,
    style: MonomialStyle,
) -> Result<MonomialTable> {
    let t = TripleSemigroup::new(a)?;
    if max_length < 0 || max_denumerant < 1 {
        return Err(Error::InvalidParameter(format!(
            "table needs max_length >= 0 and max_denumerant >= 1, got {max_length} and {max_denumerant}"
        )));
    }
    let mut cells = Vec::new();
    for ell in 0..=max_length {
        for d in 1..=max_denumerant {
            let i = ell + 2 - 2 * d;
            let mut entries = Vec::new();
            if i >= 0 {
                for c in gamma(i)? {
                    let r = (a + 1) * ell + c;
                    if t.decompose(r).ok() != Some(TripleDecomposition { d, i, c }) {
                        return Err(Error::OutsideClosedForm(format!(
                            "cell (ell={ell}, d={d}) is outside the closed-form range for a = {a}"
                        )));
                    }
                    entries.push(MonomialEntry {
                        r,
                        basis: t.monomial_basis(r, style)?,
                        iota: i,
                        c,
                    });
                }
            }
            cells.push(MonomialCell { ell, d, entries });
        }
    }
    Ok(MonomialTable {
        a,
        max_length,
        max_denumerant,
        cells,
    })
}

/// The monomial grid from enumerated factorizations of the members below the
/// first two-length element, each basis in descending lexicographic order.
pub fn monomial_table_by_enumeration(
    a: i64,
    max_length: i64,
    max_denumerant: i64,
    style: MonomialStyle,
) -> Result<MonomialTable> {
    let t = TripleSemigroup::new(a)?;
    if max_length < 0 || max_denumerant < 1 {
        return Err(Error::InvalidParameter(format!(
            "table needs max_length >= 0 and max_denumerant >= 1, got {max_length} and {max_denumerant}"
        )));
    }
    let s = t.semigroup();
    let mut cells: Vec<MonomialCell> = (0..=max_length)
        .flat_map(|ell| {
            (1..=max_denumerant).map(move |d| MonomialCell {
                ell,
                d,
                entries: Vec::new(),
            })
        })
        .collect();
    for r in 0..t.ulf_bound() {
        let facts = s.factorizations(r);
        let Some(first) = facts.first() else { continue };
        let (ell, d) = (first.length(), facts.len() as i64);
        if ell > max_length || d > max_denumerant {
            continue;
        }
        let basis = facts
            .iter()
            .rev()
            .map(|f| render_monomial([f.coords()[0], f.coords()[1], f.coords()[2]], style))
            .collect();
        cells[(ell * max_denumerant + d - 1) as usize]
            .entries
            .push(MonomialEntry {
                r,
                basis,
                iota: ell + 2 - 2 * d,
                c: r - (a + 1) * ell,
            });
    }
    Ok(MonomialTable {
        a,
        max_length,
        max_denumerant,
        cells,
    })
}

/// ULF elements grouped by their unique factorization length, ascending;
/// only nonempty groups are listed.
pub fn ulf_by_length_report(s: &Semigroup, window: Option<i64>) -> Result<Vec<(i64, Vec<i64>)>> {
    let ulf = s.ulf(window)?;
    group_by(&ulf, |r| {
        s.length_set(r)
            .map(|ls| ls[0])
            .expect("ULF members have a single length")
    })
}

/// ULF elements grouped by denumerant, ascending.
pub fn ulf_by_denumerant_report(
    s: &Semigroup,
    window: Option<i64>,
) -> Result<Vec<(i64, Vec<i64>)>> {
    let ulf = s.ulf(window)?;
    group_by(&ulf, |r| s.denumerant(r) as i64)
}

fn group_by(members: &[i64], key: impl Fn(i64) -> i64) -> Result<Vec<(i64, Vec<i64>)>> {
    let mut groups: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for &r in members {
        groups.entry(key(r)).or_default().push(r);
    }
    Ok(groups
        .into_iter()
        .map(|(k, mut v)| {
            v.sort_unstable();
            (k, v)
        })
        .collect())
}

/// `[ 10, 11, 12 ]`
pub fn gap_list(values: &[i64]) -> String {
    let body: Vec<String> = values.iter().map(i64::to_string).collect();
    format!("[ {} ]", body.join(", "))
}

pub fn betti_text(b: &BettiClassification) -> String {
    format!(
        "betti: {}\nbalanced: {}\nunbalanced: {}\n",
        gap_list(&b.betti),
        gap_list(&b.balanced),
        gap_list(&b.unbalanced)
    )
}

//! Published ground truth for small complete graphs and for `K_140`, plus the
//! table emitters.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::classify::{self, ClassificationResult};
use crate::error::{Error, Result};
use crate::group::{parse_group, Family, GroupDescriptor, GroupList};

const CATALOG_TEXT: &str = include_str!("../data/catalog.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Source {
    /// The table covering `2 <= n <= 20`.
    Table1,
    /// The complete list printed for `n = 140`.
    Sec2K140,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub n: u64,
    pub groups: GroupList,
    pub source: Source,
}

/// Groups on one side of a catalog comparison.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffReport {
    pub n: u64,
    /// Listed in the catalog but not produced by the classifier.
    pub missing: Vec<GroupDescriptor>,
    /// Produced by the classifier but absent from the catalog.
    pub extra: Vec<GroupDescriptor>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Parses catalog text in the `K<n>: name, name, ...` format.
pub fn parse_catalog(text: &str) -> Result<BTreeMap<u64, CatalogEntry>> {
    let mut rows = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Catalog { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| err("missing ':' after K<n>".into()))?;
        let n: u64 = head
            .trim()
            .strip_prefix(['K', 'k'])
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| err(format!("bad row label {head:?}")))?;
        let body = body.trim();
        let names: Vec<&str> = if body.eq_ignore_ascii_case("none") {
            Vec::new()
        } else {
            body.split(',').map(str::trim).collect()
        };
        let groups = names
            .iter()
            .map(|name| parse_group(name).map_err(|e| err(format!("{name}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        let count = groups.len();
        let groups = GroupList::new(n, groups)?;
        if groups.len() != count {
            return Err(err("duplicate group in row".into()));
        }
        let source = if n <= 20 { Source::Table1 } else { Source::Sec2K140 };
        if rows.insert(n, CatalogEntry { n, groups, source }).is_some() {
            return Err(err(format!("K{n} listed twice")));
        }
    }
    Ok(rows)
}

fn catalog() -> &'static BTreeMap<u64, CatalogEntry> {
    static CATALOG: OnceLock<BTreeMap<u64, CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(CATALOG_TEXT).expect("embedded catalog is well-formed"))
}

/// Every `n` with a catalog row, ascending.
pub fn catalog_ns() -> Vec<u64> {
    catalog().keys().copied().collect()
}

pub fn known_groups(n: u64) -> Result<CatalogEntry> {
    catalog().get(&n).cloned().ok_or(Error::NotFound(n))
}

/// Compares the classifier's enumeration for `n > 6` against the catalog row.
pub fn verify_against_catalog(n: u64) -> Result<DiffReport> {
    let entry = known_groups(n)?;
    if n <= 6 {
        return Err(Error::Domain(format!(
            "K{n} is answered from the catalog itself; only rows with n > 6 can be verified"
        )));
    }
    let produced = classify::enumerate(n, false)?;
    Ok(DiffReport {
        n,
        missing: entry.groups.iter().filter(|g| !produced.contains(g)).copied().collect(),
        extra: produced.iter().filter(|g| !entry.groups.contains(g)).copied().collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NameStyle {
    #[default]
    Ascii,
    /// Unicode subscripts and product symbols.
    Pretty,
}

impl NameStyle {
    pub fn render(self, g: &GroupDescriptor) -> String {
        match self {
            NameStyle::Ascii => g.to_string(),
            NameStyle::Pretty => g.pretty(),
        }
    }
}

/// Column of the four-column layout a group belongs to.
pub fn column(g: &GroupDescriptor) -> usize {
    match g.family() {
        Family::Polyhedral => 0,
        Family::Trivial | Family::Cyclic | Family::Dihedral => 1,
        Family::Zxz | Family::ZxzSemiZ2 => 2,
        Family::Zxd | Family::Dxd => 3,
    }
}

fn row_cells(list: &GroupList, style: NameStyle, sep: &str) -> [String; 4] {
    let mut cols: [Vec<String>; 4] = Default::default();
    for g in list {
        cols[column(g)].push(style.render(g));
    }
    cols.map(|c| if c.is_empty() { "None".to_string() } else { c.join(sep) })
}

#[derive(Serialize)]
pub struct JsonGroup {
    pub name: String,
    pub family: &'static str,
    pub order: u128,
    pub clause: String,
}

#[derive(Serialize)]
pub struct JsonRow {
    pub n: u64,
    pub groups: Vec<JsonGroup>,
}

impl JsonRow {
    pub fn from_results(n: u64, results: &[ClassificationResult], style: NameStyle) -> Self {
        JsonRow {
            n,
            groups: results
                .iter()
                .map(|r| JsonGroup {
                    name: style.render(&r.group),
                    family: r.group.family().as_str(),
                    order: r.group.order(),
                    clause: r.clause.to_string(),
                })
                .collect(),
        }
    }
}

/// Renders one row per `n` in `n_from..=n_to`.
///
/// Markdown mirrors the published four-column layout; CSV uses the columns
/// `n,polyhedral,cyclic_dihedral,zxz_family,product_dihedral` with
/// `;`-separated cells; JSON emits one object per line.
pub fn emit_table(n_from: u64, n_to: u64, format: TableFormat, style: NameStyle) -> Result<String> {
    if n_from < 2 || n_from > n_to {
        return Err(Error::Domain(format!(
            "invalid range {n_from}..={n_to}; need 2 <= from <= to"
        )));
    }
    let mut out = String::new();
    match format {
        TableFormat::Markdown => {
            out.push_str(
                "| Graph | Polyhedral Groups | Z_m and D_m | Z_r x Z_s and (Z_r x Z_s):Z2 | Z_r x D_s and D_r x D_s |\n",
            );
            out.push_str("|---|---|---|---|---|\n");
            for n in n_from..=n_to {
                let [a, b, c, d] = row_cells(&classify::enumerate(n, false)?, style, ", ");
                out.push_str(&format!("| K_{n} | {a} | {b} | {c} | {d} |\n"));
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::Domain(format!("csv: {e}"));
            w.write_record(["n", "polyhedral", "cyclic_dihedral", "zxz_family", "product_dihedral"])
                .map_err(csv_err)?;
            for n in n_from..=n_to {
                let cells = row_cells(&classify::enumerate(n, false)?, style, ";");
                let n_text = n.to_string();
                w.write_record(std::iter::once(n_text.as_str()).chain(cells.iter().map(String::as_str)))
                    .map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Domain(format!("csv: {e}")))?;
            out = String::from_utf8(bytes).expect("csv output is utf-8");
        }
        TableFormat::Json => {
            for n in n_from..=n_to {
                let results = classify::enumerate_with_clauses(n, false)?;
                let row = JsonRow::from_results(n, &results, style);
                out.push_str(&serde_json::to_string(&row).expect("rows serialize"));
                out.push('\n');
            }
        }
    }
    Ok(out)
}

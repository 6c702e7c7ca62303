//! Serializable report documents and their pretty, JSON and CSV renderings.
//!
//! Renderings contain no timestamps or host data, so identical inputs give
//! identical bytes.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::domains::{DomainSpec, PaperThreshold};
use crate::error::Result;
use crate::mok::{closed_form_m, computed_m, score, verdict, Classification, Convention, Threshold, Verdict};
use crate::partitions::sym_power_dim;
use crate::plethysm::{decompose, total_dim};
use crate::rootdata::Block;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub s: u32,
    pub label: String,
    /// Decimal string; dimensions are unbounded integers.
    pub dim: String,
    pub highest: Vec<i64>,
    pub lowest: Vec<i64>,
    pub sigma: i64,
    pub class: Classification,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub domain: String,
    pub rank: usize,
    pub dim_m: usize,
    pub convention: Convention,
    pub blocks: Vec<Block>,
    pub rows: Vec<ReportRow>,
    pub m_computed: Threshold,
    pub m_paper: PaperThreshold,
    pub verdict: Verdict,
}

fn weight_string(w: &[i64], blocks: &[Block]) -> String {
    let parts: Vec<String> = blocks.iter().map(|b| w[b.range()].iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("({})", parts.join(";"))
}

impl ReportDocument {
    /// Scores every `s` in `sym` and searches for the threshold up to the end
    /// of the range.
    pub fn build(d: &DomainSpec, sym: RangeInclusive<u32>, convention: Convention) -> Result<Self> {
        let m_computed = computed_m(d, (*sym.end()).max(1))?;
        let mut rows = Vec::new();
        for s in sym {
            for x in score(d, s, convention) {
                rows.push(ReportRow {
                    s,
                    label: x.summand.label.to_string(),
                    dim: x.summand.dim.to_string(),
                    highest: x.summand.highest.coords().to_vec(),
                    lowest: x.summand.lowest.coords().to_vec(),
                    sigma: x.sigma,
                    class: x.classification,
                    note: x.note,
                });
            }
        }
        Ok(ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            domain: d.family.to_string(),
            rank: d.rank,
            dim_m: d.dim_m,
            convention,
            blocks: d.blocks.blocks().to_vec(),
            rows,
            m_computed,
            m_paper: d.paper_m,
            verdict: verdict(m_computed, d.paper_m),
        })
    }

    /// Distinct `s` values in row order.
    pub fn levels(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for r in &self.rows {
            if out.last() != Some(&r.s) {
                out.push(r.s);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One header line opens each `s` block.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        for s in self.levels() {
            w.write_record(["domain", "s", "label", "dim", "highest", "lowest", "sigma", "class"]).expect("in-memory write");
            for r in self.rows.iter().filter(|r| r.s == s) {
                w.write_record([
                    self.domain.as_str(),
                    &r.s.to_string(),
                    &r.label,
                    &r.dim,
                    &weight_string(&r.highest, &self.blocks),
                    &weight_string(&r.lowest, &self.blocks),
                    &r.sigma.to_string(),
                    &r.class.to_string(),
                ])
                .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_pretty(&self) -> String {
        let mut out = format!("domain {}  rank {}  dim {}  convention {}\n", self.domain, self.rank, self.dim_m, self.convention);
        for s in self.levels() {
            let rows: Vec<&ReportRow> = self.rows.iter().filter(|r| r.s == s).collect();
            out.push_str(&format!("\nSym^{s}: {} summands\n", rows.len()));
            let cells: Vec<[String; 6]> = rows
                .iter()
                .map(|r| {
                    let class = match &r.note {
                        Some(n) => format!("{} ({n})", r.class),
                        None => r.class.to_string(),
                    };
                    [
                        r.label.clone(),
                        r.dim.clone(),
                        weight_string(&r.highest, &self.blocks),
                        weight_string(&r.lowest, &self.blocks),
                        r.sigma.to_string(),
                        class,
                    ]
                })
                .collect();
            let header = ["label", "dim", "highest", "lowest", "sigma", "class"].map(String::from);
            out.push_str(&render_table(&header, &cells));
        }
        out.push_str(&format!("\nm computed {}  m listed {}  verdict {}\n", self.m_computed, self.m_paper, self.verdict));
        out
    }
}

fn render_table<const N: usize>(header: &[String; N], rows: &[[String; N]]) -> String {
    let mut widths = header.each_ref().map(|h| h.chars().count());
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String; N]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        format!("  {}\n", padded.join("  ").trim_end())
    };
    let mut out = line(header);
    for r in rows {
        out.push_str(&line(r));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub domain: String,
    pub rank: usize,
    pub dim_m: usize,
    pub s_max: u32,
    pub m_computed: Threshold,
    pub closed_form: u32,
    pub m_paper: PaperThreshold,
    /// `Σ dims = binomial(dim_m + s - 1, s)` for every `s <= s_max`.
    pub dims_conserved: bool,
    pub verdict: Verdict,
}

impl TableRow {
    pub fn build(d: &DomainSpec, s_max: Option<u32>) -> Result<Self> {
        let closed = closed_form_m(&d.family);
        let s_max = s_max.unwrap_or_else(|| closed.max(d.paper_m.value()).max(1));
        let m_computed = computed_m(d, s_max)?;
        let dims_conserved = (1..=s_max).all(|s| total_dim(&decompose(d, s)) == sym_power_dim(d.dim_m as u64, s as u64));
        Ok(TableRow {
            domain: d.family.to_string(),
            rank: d.rank,
            dim_m: d.dim_m,
            s_max,
            m_computed,
            closed_form: closed,
            m_paper: d.paper_m,
            dims_conserved,
            verdict: verdict(m_computed, d.paper_m),
        })
    }

    pub fn is_failure(&self) -> bool {
        self.verdict == Verdict::Mismatch || !self.dims_conserved
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema_version: String,
    pub rows: Vec<TableRow>,
}

impl TableDocument {
    pub fn new(rows: Vec<TableRow>) -> Self {
        TableDocument { schema_version: SCHEMA_VERSION.to_string(), rows }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["domain", "rank", "dim_m", "s_max", "m_computed", "closed_form", "m_listed", "dims_conserved", "verdict"])
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.domain.clone(),
                r.rank.to_string(),
                r.dim_m.to_string(),
                r.s_max.to_string(),
                r.m_computed.to_string(),
                r.closed_form.to_string(),
                r.m_paper.to_string(),
                r.dims_conserved.to_string(),
                r.verdict.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_pretty(&self) -> String {
        let header = ["domain", "rank", "dim", "s_max", "m_computed", "closed_form", "m_listed", "dims", "verdict"].map(String::from);
        let cells: Vec<[String; 9]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.domain.clone(),
                    r.rank.to_string(),
                    r.dim_m.to_string(),
                    r.s_max.to_string(),
                    r.m_computed.to_string(),
                    r.closed_form.to_string(),
                    r.m_paper.to_string(),
                    if r.dims_conserved { "ok" } else { "FAIL" }.to_string(),
                    r.verdict.to_string(),
                ]
            })
            .collect();
        render_table(&header, &cells)
    }
}

//! Report emission: JSON with stable key order, optional timings, and the
//! text renderings of character tables.

use std::collections::BTreeMap;
use std::time::Instant;

use szgelfand::chartab::CharacterTable;
use szgelfand::groups::GroupElement;

/// Wall-clock phase timings, dropped entirely under --no-timings so output
/// stays byte-deterministic.
pub struct Timings {
    enabled: bool,
    map: BTreeMap<String, u128>,
}

impl Timings {
    pub fn new(enabled: bool) -> Timings {
        Timings { enabled, map: BTreeMap::new() }
    }
    pub fn record(&mut self, phase: &str, start: Instant) {
        if self.enabled {
            self.map.insert(phase.to_string(), start.elapsed().as_millis());
        }
    }
    pub fn into_map(self) -> Option<BTreeMap<String, u128>> {
        self.enabled.then_some(self.map)
    }
}

/// Print a report as pretty JSON with a trailing newline.
pub fn emit<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

pub fn element_json(e: &GroupElement) -> serde_json::Value {
    match e {
        GroupElement::Perm(images) => serde_json::json!(images),
        GroupElement::Mat4(entries) => {
            serde_json::json!(entries.iter().map(|x| x.bits() as u64).collect::<Vec<_>>())
        }
    }
}

/// Aligned text table: one header per class (size, element order), one row
/// per irreducible character with its degree and residues.
pub fn pretty_table(t: &CharacterTable) -> String {
    let k = t.class_count();
    let mut cols: Vec<Vec<String>> = Vec::new();
    let mut head = vec!["size".to_string(), "order".to_string()];
    head.extend(t.degrees().iter().map(|d| format!("deg {d}")));
    cols.push(head);
    for j in 0..k {
        let mut col = vec![
            t.class_sizes()[j].to_string(),
            t.element_orders()[j].to_string(),
        ];
        col.extend((0..k).map(|r| t.values()[r][j].to_string()));
        cols.push(col);
    }
    let widths: Vec<usize> =
        cols.iter().map(|c| c.iter().map(String::len).max().unwrap_or(0)).collect();
    let mut out = String::new();
    out.push_str(&format!(
        "character table mod p = {} (e = {}, omega = {})\n",
        t.context().p,
        t.context().e,
        t.context().omega
    ));
    for row in 0..k + 2 {
        let line: Vec<String> = cols
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{:>width$}", c[row], width = w))
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

/// Tab-separated rendering: a header line, then degree + residues per row.
pub fn tsv_table(t: &CharacterTable) -> String {
    let mut out = String::new();
    out.push_str("degree");
    for j in 0..t.class_count() {
        out.push_str(&format!(
            "\tc{}[{}|{}]",
            j,
            t.class_sizes()[j],
            t.element_orders()[j]
        ));
    }
    out.push('\n');
    for (r, row) in t.values().iter().enumerate() {
        out.push_str(&t.degrees()[r].to_string());
        for v in row {
            out.push('\t');
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

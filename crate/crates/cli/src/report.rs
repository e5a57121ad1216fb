//! Report documents. Field names and nesting are a stable contract.

use std::fmt::Write as _;

use magic_compound::props::Commutation;
use magic_compound::{BigPoly, PropertyReport};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub semi_magic: bool,
    pub magic: bool,
    pub natural: bool,
    pub regular: bool,
    pub pandiagonal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairSection {
    pub commutes: bool,
    pub product_scalar: Option<i64>,
    pub orthogonal_pair: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub order: usize,
    pub summation_index: Option<i128>,
    pub flags: Flags,
    pub regular_constant: Option<i128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairSection>,
}

impl CheckReport {
    pub fn new(p: &PropertyReport) -> Self {
        Self {
            order: p.order,
            summation_index: p.summation_index,
            flags: Flags {
                semi_magic: p.is_semi_magic,
                magic: p.is_magic,
                natural: p.is_natural,
                regular: p.is_regular,
                pandiagonal: p.is_pandiagonal,
            },
            regular_constant: p.regular_constant,
            pair: None,
        }
    }

    pub fn with_pair(mut self, c: Commutation, orthogonal_pair: bool) -> Self {
        self.pair = Some(PairSection {
            commutes: c.commutes,
            product_scalar: c.product_scalar,
            orthogonal_pair,
        });
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharpolySection {
    /// Decimal strings, constant term first.
    pub coefficients: BigPoly,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimSection {
    pub text: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectraReport {
    pub order: usize,
    pub charpoly: CharpolySection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim: Option<ClaimSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub singular_values: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WrittenSquare {
    pub role: String,
    pub path: String,
    pub order: usize,
    pub summation_index: Option<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompoundReport {
    pub m: usize,
    pub n: usize,
    pub outputs: Vec<WrittenSquare>,
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".into(), ToString::to_string)
}

/// Two-column `field value` table.
fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        writeln!(out, "{k:<width$}  {v}").expect("write to string");
    }
    out
}

pub trait Plain {
    fn plain(&self) -> String;
}

impl Plain for CheckReport {
    fn plain(&self) -> String {
        let mut rows = vec![
            ("order", self.order.to_string()),
            ("summation_index", opt(&self.summation_index)),
            ("semi_magic", self.flags.semi_magic.to_string()),
            ("magic", self.flags.magic.to_string()),
            ("natural", self.flags.natural.to_string()),
            ("regular", self.flags.regular.to_string()),
            ("pandiagonal", self.flags.pandiagonal.to_string()),
            ("regular_constant", opt(&self.regular_constant)),
        ];
        if let Some(p) = &self.pair {
            rows.push(("commutes", p.commutes.to_string()));
            rows.push(("product_scalar", opt(&p.product_scalar)));
            rows.push(("orthogonal_pair", p.orthogonal_pair.to_string()));
        }
        table(&rows)
    }
}

impl Plain for SpectraReport {
    fn plain(&self) -> String {
        let mut rows = vec![
            ("order", self.order.to_string()),
            ("charpoly", self.charpoly.text.clone()),
        ];
        if let Some(c) = &self.claim {
            rows.push(("claim", c.text.clone()));
            rows.push(("claim_holds", c.holds.to_string()));
        }
        if let Some(sv) = &self.singular_values {
            let shown: Vec<String> = sv.iter().map(|x| format!("{x:.10}")).collect();
            rows.push(("singular_values", shown.join(" ")));
        }
        table(&rows)
    }
}

impl Plain for CompoundReport {
    fn plain(&self) -> String {
        let rows: Vec<(&str, String)> = self
            .outputs
            .iter()
            .map(|w| {
                (
                    w.role.as_str(),
                    format!("{}  mu={}", w.path, opt(&w.summation_index)),
                )
            })
            .collect();
        table(&rows)
    }
}

//! Serializable descent traces.
//!
//! Elements are rendered with the domain's format rules and norms as decimal
//! strings, so JSON consumers never see a lossy number.

use serde::{Deserialize, Serialize};

use crate::descent::{DescentStep, DescentTrace};
use crate::domain::NormedDomain;
use crate::quadratic::QuadraticPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    pub step: usize,
    pub b: String,
    pub norm_b: String,
    pub y: Vec<String>,
    pub v: Vec<String>,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b_coeff: String,
    #[serde(rename = "C")]
    pub c: String,
    pub b_next: String,
    pub norm_b_next: String,
    pub x_next: String,
}

const TEXT_KEYS: [&str; 11] = [
    "step",
    "b",
    "norm_b",
    "y",
    "v",
    "A",
    "B",
    "C",
    "b_next",
    "norm_b_next",
    "x_next",
];

fn elems<D: NormedDomain>(d: &D, v: &[D::Elem]) -> Vec<String> {
    v.iter().map(|a| d.format_elem(a)).collect()
}

fn vec_text(v: &[String]) -> String {
    format!("({})", v.join(","))
}

impl TraceRecord {
    pub fn from_step<D: NormedDomain>(d: &D, step: usize, s: &DescentStep<D::Elem>) -> Self {
        TraceRecord {
            step,
            b: d.format_elem(&s.den),
            norm_b: d.norm(&s.den).to_string(),
            y: elems(d, &s.y),
            v: elems(d, &s.v),
            a: d.format_elem(&s.line.a),
            b_coeff: d.format_elem(&s.line.b),
            c: d.format_elem(&s.line.c),
            b_next: d.format_elem(&s.den_next),
            norm_b_next: d.norm(&s.den_next).to_string(),
            x_next: s.x_next.format(d),
        }
    }

    /// One line of `key=value` pairs in field order. Values contain no spaces.
    pub fn to_text(&self) -> String {
        let values = [
            self.step.to_string(),
            self.b.clone(),
            self.norm_b.clone(),
            vec_text(&self.y),
            vec_text(&self.v),
            self.a.clone(),
            self.b_coeff.clone(),
            self.c.clone(),
            self.b_next.clone(),
            self.norm_b_next.clone(),
            self.x_next.clone(),
        ];
        TEXT_KEYS
            .iter()
            .zip(values)
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Inverse of [`TraceRecord::to_text`].
    pub fn from_text(line: &str) -> Option<Self> {
        let mut fields = Vec::with_capacity(TEXT_KEYS.len());
        for (part, key) in line.split(' ').zip(TEXT_KEYS) {
            fields.push(part.strip_prefix(key)?.strip_prefix('=')?);
        }
        if fields.len() != TEXT_KEYS.len() || line.split(' ').count() != TEXT_KEYS.len() {
            return None;
        }
        let vector = |s: &str| -> Option<Vec<String>> {
            let inner = s.strip_prefix('(')?.strip_suffix(')')?;
            Some(split_top_level(inner))
        };
        Some(TraceRecord {
            step: fields[0].parse().ok()?,
            b: fields[1].to_owned(),
            norm_b: fields[2].to_owned(),
            y: vector(fields[3])?,
            v: vector(fields[4])?,
            a: fields[5].to_owned(),
            b_coeff: fields[6].to_owned(),
            c: fields[7].to_owned(),
            b_next: fields[8].to_owned(),
            norm_b_next: fields[9].to_owned(),
            x_next: fields[10].to_owned(),
        })
    }
}

// Gaussian entries such as (1+2i) carry their own parentheses.
fn split_top_level(s: &str) -> Vec<String> {
    let (mut out, mut cur, mut depth) = (Vec::new(), String::new(), 0i32);
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out
}

/// The whole run: `{domain, form, start, steps, result}`, plus the common
/// value when the run represents a value of a form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub domain: String,
    pub form: String,
    pub start: String,
    pub steps: Vec<TraceRecord>,
    pub result: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl TraceDocument {
    pub fn new<D: NormedDomain>(
        d: &D,
        f: &QuadraticPolynomial<D::Elem>,
        trace: &DescentTrace<D::Elem>,
    ) -> Self {
        TraceDocument {
            domain: d.descriptor().to_string(),
            form: crate::parser::format_form(d, f),
            start: trace.start.format(d),
            steps: trace
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| TraceRecord::from_step(d, i, s))
                .collect(),
            result: elems(d, &trace.result),
            value: None,
        }
    }

    pub fn result_text(&self) -> String {
        vec_text(&self.result)
    }
}

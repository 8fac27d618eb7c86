//! Text and JSON renderings. JSON objects are written with their keys in
//! sorted order, so re-serializing parsed output reproduces it byte for byte.

use serde::Serialize;

use unitarity_core::classify::{InfCharReport, UnitarityVerdict};
use unitarity_core::text::{format_coords, format_tuple};
use unitarity_core::theta::ThetaType;
use unitarity_core::{Family, Weight};

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
pub struct ClassifyReport {
    clause: Option<String>,
    family: &'static str,
    form: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    status: &'static str,
    verma_irreducible: bool,
    weight: Vec<String>,
    #[serde(skip)]
    display_family: String,
    #[serde(skip)]
    tuple: String,
}

impl ClassifyReport {
    pub fn new(family: Family, lambda_form: bool, w: &Weight, v: &UnitarityVerdict) -> Self {
        ClassifyReport {
            clause: v.clause.map(|c| c.to_string()),
            family: family.name(),
            form: if lambda_form { "lambda" } else { "infchar" },
            n: family.rank(),
            status: v.status.as_str(),
            verma_irreducible: v.verma_irreducible,
            weight: format_coords(w),
            display_family: family.to_string(),
            tuple: format_tuple(w),
        }
    }

    pub fn to_text(&self) -> String {
        let what = if self.form == "lambda" {
            "highest weight"
        } else {
            "infinitesimal character"
        };
        let mut s = format!("{}, {what} {}\n", self.display_family, self.tuple);
        s.push_str(&format!("verdict: {}\n", self.status));
        if let Some(c) = &self.clause {
            s.push_str(&format!("case: {c}\n"));
        }
        s.push_str(&format!(
            "irreducible Verma module: {}\n",
            if self.verma_irreducible { "yes" } else { "no" }
        ));
        s
    }
}

#[derive(Serialize)]
pub struct InfCharJson {
    dominant: Vec<String>,
    family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    nonunitary: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    not_parameter: Vec<Vec<String>>,
    unitary: Vec<Vec<String>>,
}

impl InfCharJson {
    pub fn new(family: Family, r: &InfCharReport) -> Self {
        let all = |v: &[Weight]| v.iter().map(format_coords).collect();
        InfCharJson {
            dominant: format_coords(&r.dominant),
            family: family.name(),
            n: family.rank(),
            nonunitary: all(&r.nonunitary),
            not_parameter: all(&r.not_parameter),
            unitary: all(&r.unitary),
        }
    }
}

/// `[(a, b),\n(c, d)]`, one tuple per line.
fn tuple_list(v: &[Weight]) -> String {
    let rows: Vec<String> = v.iter().map(format_tuple).collect();
    format!("[{}]", rows.join(",\n"))
}

pub fn inf_char_text(family: Family, r: &InfCharReport) -> String {
    let mut s = format!(
        "{family}, infinitesimal character {}\n",
        format_tuple(&r.dominant)
    );
    s.push_str(&format!(
        "unitary ({}):\n{}\n",
        r.unitary.len(),
        tuple_list(&r.unitary)
    ));
    s.push_str(&format!(
        "nonunitary ({}):\n{}\n",
        r.nonunitary.len(),
        tuple_list(&r.nonunitary)
    ));
    if !r.not_parameter.is_empty() {
        s.push_str(&format!(
            "not k-integral ({}):\n{}\n",
            r.not_parameter.len(),
            tuple_list(&r.not_parameter)
        ));
    }
    s
}

#[derive(Serialize)]
pub struct ThetaRow {
    a: u32,
    b: u32,
    c: u32,
    hprime_weight: i64,
    n: u32,
}

impl From<ThetaType> for ThetaRow {
    fn from(t: ThetaType) -> Self {
        ThetaRow {
            a: t.a,
            b: t.b,
            c: t.c,
            hprime_weight: t.hprime_weight,
            n: t.n,
        }
    }
}

#[derive(Serialize)]
pub struct ThetaReport {
    m: i64,
    max_level: u32,
    minimal: ThetaRow,
    types: Vec<ThetaRow>,
}

impl ThetaReport {
    pub fn new(m: i64, max_level: u32, types: Vec<ThetaType>, minimal: ThetaType) -> Self {
        ThetaReport {
            m,
            max_level,
            minimal: minimal.into(),
            types: types.into_iter().map(Into::into).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let row = |t: &ThetaRow| {
            format!(
                "{:>3} {:>3} {:>3} {:>3} {:>5}\n",
                t.a, t.b, t.c, t.n, t.hprime_weight
            )
        };
        let mut s = format!(
            "Pi[{}]', levels n <= {}: {} types\n",
            self.m - 2,
            self.max_level,
            self.types.len()
        );
        s.push_str(&format!(
            "{:>3} {:>3} {:>3} {:>3} {:>5}\n",
            "a", "b", "c", "n", "h'"
        ));
        for t in &self.types {
            s.push_str(&row(t));
        }
        s.push_str("minimal type:\n");
        s.push_str(&row(&self.minimal));
        s
    }
}

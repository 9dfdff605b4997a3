//! Machine-readable (JSON) and human-readable renderings of verdicts.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::GaussianRational;
use crate::correspondence::{Classification, Factorization, SymmetryReport};
use crate::oracle::{OracleVerdict, TupleWitness};

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationJson {
    pub phi: String,
    pub psi: String,
}

impl From<&Factorization> for FactorizationJson {
    fn from(f: &Factorization) -> Self {
        Self { phi: f.phi.display_in('x'), psi: f.psi.display_in('y') }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ClassificationJson {
    Rank2 {
        degree: usize,
        factorization: FactorizationJson,
        scalar: String,
    },
    PerfectPower {
        degree: usize,
        m: usize,
        constant: String,
        base: String,
        base_classification: Box<ClassificationJson>,
    },
    NotMapOfTuples {
        degree: usize,
        rank: usize,
    },
}

impl ClassificationJson {
    pub fn new(c: &Classification, degree: usize) -> Self {
        match c {
            Classification::Rank2 { factorization, scalar } => {
                ClassificationJson::Rank2 { degree, factorization: factorization.into(), scalar: scalar.to_string() }
            }
            Classification::PerfectPower { m, base, base_class, c } => ClassificationJson::PerfectPower {
                degree,
                m: *m,
                constant: c.to_string(),
                base: base.to_string(),
                base_classification: Box::new(ClassificationJson::new(base_class, base.degree())),
            },
            Classification::NotMapOfTuples { rank } => ClassificationJson::NotMapOfTuples { degree, rank: *rank },
        }
    }
}

fn opt_string(g: &Option<GaussianRational>) -> Option<String> {
    g.as_ref().map(ToString::to_string)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryJson {
    pub symmetric: bool,
    pub swap_scalar: Option<String>,
    pub real_up_to_constant: bool,
    pub real_witness: Option<String>,
    pub hermitian_up_to_unimodular: Option<String>,
}

impl From<&SymmetryReport> for SymmetryJson {
    fn from(r: &SymmetryReport) -> Self {
        Self {
            symmetric: r.symmetric,
            swap_scalar: opt_string(&r.swap_scalar),
            real_up_to_constant: r.is_real_up_to_constant(),
            real_witness: opt_string(&r.real_up_to_constant),
            hermitian_up_to_unimodular: opt_string(&r.hermitian_up_to_unimodular),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleJson {
    pub passed: bool,
    pub samples: usize,
    pub rejected: usize,
    pub max_mismatch: f64,
}

impl From<&OracleVerdict> for OracleJson {
    fn from(v: &OracleVerdict) -> Self {
        Self { passed: v.passed, samples: v.samples, rejected: v.rejected, max_mismatch: v.worst.max_mismatch }
    }
}

/// Common envelope for command output.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub verdict: String,
    pub classification: Option<ClassificationJson>,
    pub symmetry: Option<SymmetryJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleJson>,
    pub witnesses: Vec<TupleWitness>,
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(verdict: impl Into<String>) -> Self {
        Self {
            verdict: verdict.into(),
            classification: None,
            symmetry: None,
            factorization: None,
            scalar: None,
            oracle: None,
            witnesses: Vec::new(),
            timings: BTreeMap::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// One-line summary, e.g. `PerfectPower m=3, base: map of 1-tuples`.
pub fn classification_headline(c: &Classification, degree: usize) -> String {
    match c {
        Classification::Rank2 { .. } => format!("Rank2: map of {degree}-tuples"),
        Classification::PerfectPower { m, base, .. } => {
            format!("PerfectPower m={m}, base: map of {}-tuples", base.degree())
        }
        Classification::NotMapOfTuples { rank } => format!("NotMapOfTuples rank={rank}"),
    }
}

pub fn classification_text(c: &Classification, degree: usize) -> String {
    let mut out = classification_headline(c, degree);
    out.push('\n');
    match c {
        Classification::Rank2 { factorization, scalar } => {
            out.push_str(&format!("  phi(x) = {}\n", factorization.phi.display_in('x')));
            out.push_str(&format!("  psi(y) = {}\n", factorization.psi.display_in('y')));
            out.push_str(&format!("  scalar: {scalar}\n"));
        }
        Classification::PerfectPower { base, base_class, c, .. } => {
            out.push_str(&format!("  base: {base}\n"));
            out.push_str(&format!("  constant: {c}\n"));
            for line in classification_text(base_class, base.degree()).lines() {
                out.push_str(&format!("  {line}\n"));
            }
        }
        Classification::NotMapOfTuples { .. } => {}
    }
    out
}

pub fn symmetry_text(r: &SymmetryReport) -> String {
    let swap = r.swap_scalar.as_ref().map_or("none".to_string(), ToString::to_string);
    let real = match &r.real_up_to_constant {
        Some(w) => format!("true (constant {w})"),
        None => "false".to_string(),
    };
    let herm = match &r.hermitian_up_to_unimodular {
        Some(u) if r.is_skew_hermitian() => format!("u = {u} (skew-Hermitian)"),
        Some(u) if *u == GaussianRational::from(1) => format!("u = {u} (Hermitian)"),
        Some(u) => format!("u = {u}"),
        None => "none".to_string(),
    };
    format!(
        "symmetric: {}\nswap_scalar: {swap}\nreal_up_to_constant: {real}\nhermitian_up_to_unimodular: {herm}\n",
        r.symmetric
    )
}

pub fn witness_text(w: &TupleWitness) -> String {
    let list = |pts: &[crate::oracle::SpherePoint]| pts.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    let mut out = format!(
        "worst witness: start {} = {}, max mismatch {:.3e}\n  forward: [{}]\n",
        w.start,
        w.x1,
        w.max_mismatch,
        list(w.forward.points())
    );
    for (j, b) in w.back.iter().enumerate() {
        out.push_str(&format!("  back[{j}]: [{}]\n", list(b.points())));
    }
    out
}

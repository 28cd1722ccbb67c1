//! Versioned JSON forms of expansions and verification reports.
//!
//! Rationals are written as `"num/den"` strings. Terms appear in the
//! element's own order (κ-grade, then lexicographic monomial), so equal
//! inputs give byte-identical output.

use jtwist_core::borel::{LegMonomial, Monomial, TensorElement};
use jtwist_core::exactalg::{DPoly, Rational, UPoly};
use jtwist_core::twists::VerificationReport;
use jtwist_core::MAX_LEGS;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct ElementDoc {
    pub schema: u32,
    pub legs: usize,
    pub truncation: u32,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermDoc {
    pub kappa_power: u32,
    pub legs: Vec<LegDoc>,
    pub dpoly: Vec<DTermDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LegDoc {
    pub p: u32,
    pub q: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DTermDoc {
    pub exps: Vec<u32>,
    pub upoly: Vec<(usize, String)>,
}

#[derive(Debug, thiserror::Error)]
pub enum DecodeError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}")]
    Schema(u32),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Core(#[from] jtwist_core::Error),
}

pub fn element_doc(e: &TensorElement) -> ElementDoc {
    let legs = e.legs();
    let terms = e
        .terms()
        .map(|(m, c)| TermDoc {
            kappa_power: m.grade(),
            legs: (0..legs)
                .map(|i| LegDoc {
                    p: m.leg(i).p,
                    q: m.leg(i).q,
                })
                .collect(),
            dpoly: c
                .terms()
                .map(|(exps, u)| DTermDoc {
                    exps: exps[..legs].to_vec(),
                    upoly: u
                        .terms()
                        .map(|(d, r)| (d, r.to_fraction_string()))
                        .collect(),
                })
                .collect(),
        })
        .collect();
    ElementDoc {
        schema: SCHEMA,
        legs,
        truncation: e.truncation(),
        terms,
    }
}

pub fn element_to_json(e: &TensorElement) -> String {
    serde_json::to_string_pretty(&element_doc(e)).expect("element documents always serialize")
}

pub fn element_from_json(s: &str) -> Result<TensorElement, DecodeError> {
    let doc: ElementDoc = serde_json::from_str(s)?;
    if doc.schema != SCHEMA {
        return Err(DecodeError::Schema(doc.schema));
    }
    if doc.legs == 0 || doc.legs > MAX_LEGS {
        return Err(DecodeError::Shape(format!(
            "leg count {} out of range",
            doc.legs
        )));
    }
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        if t.legs.len() != doc.legs {
            return Err(DecodeError::Shape(
                "term has the wrong number of legs".into(),
            ));
        }
        let legs: Vec<LegMonomial> = t.legs.iter().map(|l| LegMonomial::new(l.p, l.q)).collect();
        let m = Monomial::new(&legs);
        if m.grade() != t.kappa_power {
            return Err(DecodeError::Shape(format!(
                "kappa_power {} does not match momentum degree {}",
                t.kappa_power,
                m.grade()
            )));
        }
        let mut dterms = Vec::with_capacity(t.dpoly.len());
        for d in &t.dpoly {
            if d.exps.len() != doc.legs {
                return Err(DecodeError::Shape(
                    "exponent vector has the wrong length".into(),
                ));
            }
            let mut exps = [0u32; MAX_LEGS];
            exps[..doc.legs].copy_from_slice(&d.exps);
            let coeffs = d
                .upoly
                .iter()
                .map(|(deg, r)| Ok((*deg, r.parse::<Rational>()?)))
                .collect::<Result<Vec<_>, jtwist_core::Error>>()?;
            dterms.push((exps, UPoly::from_sparse(coeffs)));
        }
        terms.push((m, DPoly::from_terms(doc.legs, dterms)));
    }
    Ok(TensorElement::from_terms(doc.legs, doc.truncation, terms))
}

#[derive(Debug, Serialize)]
pub struct ReportDoc<'a> {
    pub check: &'a str,
    pub status: &'static str,
    pub params: serde_json::Map<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grades: Option<Vec<GradeDoc>>,
    pub subchecks: Vec<SubCheckDoc<'a>>,
    pub first_failure: Option<FailureDoc<'a>>,
    pub notes: &'a [String],
}

#[derive(Debug, Serialize)]
pub struct GradeDoc {
    pub grade: u32,
    pub status: &'static str,
}

#[derive(Debug, Serialize)]
pub struct SubCheckDoc<'a> {
    pub label: &'a str,
    pub status: &'static str,
    pub failing_grades: &'a [u32],
}

#[derive(Debug, Serialize)]
pub struct FailureDoc<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grade: Option<u32>,
    pub label: &'a str,
    pub detail: &'a str,
}

fn status(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

pub fn report_doc(r: &VerificationReport) -> ReportDoc<'_> {
    let params = r
        .params
        .iter()
        .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
        .collect();
    ReportDoc {
        check: &r.check,
        status: r.status().as_str(),
        params,
        order: r.graded.then_some(r.order),
        grades: r.graded.then(|| {
            r.grades
                .iter()
                .map(|g| GradeDoc {
                    grade: g.grade,
                    status: status(g.passed),
                })
                .collect()
        }),
        subchecks: r
            .subchecks
            .iter()
            .map(|s| SubCheckDoc {
                label: &s.label,
                status: status(s.passed),
                failing_grades: &s.failing_grades,
            })
            .collect(),
        first_failure: r.first_failure.as_ref().map(|f| FailureDoc {
            grade: r.graded.then_some(f.grade),
            label: &f.label,
            detail: &f.detail,
        }),
        notes: &r.notes,
    }
}

#[derive(Debug, Serialize)]
struct ReportsDoc<'a> {
    schema: u32,
    status: &'static str,
    reports: Vec<ReportDoc<'a>>,
}

/// All reports in one document, with an overall status.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    let doc = ReportsDoc {
        schema: SCHEMA,
        status: status(reports.iter().all(|r| r.passed())),
        reports: reports.iter().map(report_doc).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("report documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use jtwist_core::twists::{build_twist, Family, TwistSpec};

    #[test]
    fn round_trip_closed_l() {
        let f = build_twist(&TwistSpec::closed(Family::L, 3)).unwrap();
        let back = element_from_json(&element_to_json(&f)).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(element_from_json("{"), Err(DecodeError::Json(_))));
        let wrong_schema = r#"{"schema":2,"legs":1,"truncation":0,"terms":[]}"#;
        assert!(matches!(
            element_from_json(wrong_schema),
            Err(DecodeError::Schema(2))
        ));
        let bad_grade = r#"{"schema":1,"legs":1,"truncation":2,
            "terms":[{"kappa_power":2,"legs":[{"p":1,"q":0}],"dpoly":[]}]}"#;
        assert!(matches!(
            element_from_json(bad_grade),
            Err(DecodeError::Shape(_))
        ));
        let bad_rational = r#"{"schema":1,"legs":1,"truncation":0,
            "terms":[{"kappa_power":0,"legs":[{"p":0,"q":0}],"dpoly":[{"exps":[0],"upoly":[[0,"1/0"]]}]}]}"#;
        assert!(matches!(
            element_from_json(bad_rational),
            Err(DecodeError::Core(_))
        ));
    }

    #[test]
    fn unit_document() {
        let doc = element_doc(&TensorElement::one(2, 0));
        assert_eq!(doc.terms.len(), 1);
        assert_eq!(doc.terms[0].dpoly[0].upoly, vec![(0, "1/1".to_string())]);
    }
}

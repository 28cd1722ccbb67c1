use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::borel::{Comparison, Difference, TensorElement};
use crate::exactalg::VARIABLE_NAMES;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeResult {
    pub grade: u32,
    pub passed: bool,
}

/// One named comparison inside a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubCheck {
    pub label: String,
    pub passed: bool,
    pub failing_grades: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub grade: u32,
    pub label: String,
    pub detail: String,
}

/// Structured pass/fail record of one check, resolved per κ-grade.
///
/// The check passes iff every grade `0..=order` passes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: String,
    pub params: Vec<(String, String)>,
    pub order: u32,
    pub grades: Vec<GradeResult>,
    pub subchecks: Vec<SubCheck>,
    pub first_failure: Option<Failure>,
    pub notes: Vec<String>,
    /// `false` for checks without a κ-grading (identity suites); their
    /// single grade entry carries the overall outcome.
    pub graded: bool,
}

impl VerificationReport {
    pub fn new(check: &str, order: u32) -> Self {
        VerificationReport {
            check: check.to_string(),
            params: Vec::new(),
            order,
            grades: (0..=order)
                .map(|grade| GradeResult {
                    grade,
                    passed: true,
                })
                .collect(),
            subchecks: Vec::new(),
            first_failure: None,
            notes: Vec::new(),
            graded: true,
        }
    }

    /// A report for a check that has no κ-grading.
    pub fn ungraded(check: &str) -> Self {
        let mut r = Self::new(check, 0);
        r.graded = false;
        r
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn status(&self) -> Status {
        if self.passed() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.grades.iter().all(|g| g.passed) && self.subchecks.iter().all(|s| s.passed)
    }

    /// Lowest failing grade, if any.
    pub fn first_failing_grade(&self) -> Option<u32> {
        self.grades.iter().find(|g| !g.passed).map(|g| g.grade)
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records a comparison result under `label`.
    pub fn record(&mut self, label: &str, cmp: &Comparison, legs: usize) {
        for g in &cmp.failing_grades {
            if let Some(slot) = self.grades.iter_mut().find(|r| r.grade == *g) {
                slot.passed = false;
            }
        }
        if let Some(diff) = &cmp.first_difference {
            let replace = self
                .first_failure
                .as_ref()
                .is_none_or(|f| diff.grade < f.grade);
            if replace {
                self.first_failure = Some(Failure {
                    grade: diff.grade,
                    label: label.to_string(),
                    detail: describe_difference(diff, legs),
                });
            }
        }
        self.subchecks.push(SubCheck {
            label: label.to_string(),
            passed: cmp.equal,
            failing_grades: cmp.failing_grades.clone(),
        });
    }

    /// Compares `lhs` against `rhs` and records the outcome; shape errors are
    /// recorded as a failure at grade 0.
    pub fn compare(&mut self, label: &str, lhs: &TensorElement, rhs: &TensorElement) -> bool {
        match lhs.equals(rhs) {
            Ok(cmp) => {
                let ok = cmp.equal;
                self.record(label, &cmp, lhs.legs());
                ok
            }
            Err(e) => {
                self.fail_with_error(label, &e);
                false
            }
        }
    }

    /// Records a named outcome that is not a comparison of elements, with a
    /// description of the first failing case if any.
    pub fn record_outcome(&mut self, label: &str, first_failure: Option<String>) {
        let passed = first_failure.is_none();
        if let Some(detail) = first_failure {
            self.grades[0].passed = false;
            if self.first_failure.is_none() {
                self.first_failure = Some(Failure {
                    grade: 0,
                    label: label.to_string(),
                    detail,
                });
            }
        }
        self.subchecks.push(SubCheck {
            label: label.to_string(),
            passed,
            failing_grades: if passed { Vec::new() } else { vec![0] },
        });
    }

    /// Marks the whole check failed because a computation errored.
    pub fn fail_with_error(&mut self, label: &str, err: &Error) {
        for g in &mut self.grades {
            g.passed = false;
        }
        self.subchecks.push(SubCheck {
            label: label.to_string(),
            passed: false,
            failing_grades: (0..=self.order).collect(),
        });
        if self.first_failure.is_none() {
            self.first_failure = Some(Failure {
                grade: 0,
                label: label.to_string(),
                detail: format!("error: {err}"),
            });
        }
    }

    /// One-line summary, e.g. `pass cocycle family=L N=5`.
    pub fn summary(&self) -> String {
        let mut s = format!("{} {}", self.status().as_str(), self.check);
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        if self.graded {
            s.push_str(&format!(" N={}", self.order));
        }
        if let Some(f) = &self.first_failure {
            if self.graded {
                s.push_str(&format!(
                    " [first failure: grade {} in {}: {}]",
                    f.grade, f.label, f.detail
                ));
            } else {
                s.push_str(&format!(" [first failure in {}: {}]", f.label, f.detail));
            }
        }
        s
    }
}

fn describe_difference(d: &Difference, legs: usize) -> String {
    let mut mono = String::new();
    for i in 0..legs {
        if i > 0 {
            mono.push('⊗');
        }
        let leg = d.monomial.leg(i);
        let mut part = String::new();
        if leg.p > 0 {
            part.push_str(&format!("P^{}", leg.p));
        }
        if leg.q > 0 {
            part.push_str(&format!("Q^{}", leg.q));
        }
        if part.is_empty() {
            part.push('1');
        }
        mono.push_str(&part);
    }
    let mut dmono = String::new();
    for (i, &k) in d.exponents.iter().enumerate().take(legs) {
        if k > 0 {
            dmono.push_str(&format!("{}^{k}", VARIABLE_NAMES[i]));
        }
    }
    if dmono.is_empty() {
        dmono.push('1');
    }
    format!(
        "coefficient of [{mono}]·{dmono}: left {} vs right {}",
        d.left, d.right
    )
}

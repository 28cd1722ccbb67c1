//! Exact checks of the binomial identities behind the closed-form twists.
//!
//! Every identity is written once against a small arithmetic interface and
//! instantiated twice: over exact polynomials in `x, y, z` for the canonical
//! comparison, and over rationals for independent point evaluation.

mod arith;
mod bigident;
mod chains;
mod det;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use bigident::{bigident_params, verify_bigident, verify_bigident_shift, SAMPLE_POINTS};
pub use chains::{l_chain_instances, r_chain_instances, Chain};
pub use det::{determinant, independence_det, independence_matrix};

use crate::exactalg::DPoly;
use crate::twists::VerificationReport;
use crate::Error;

/// Largest exhaustive bound accepted by the suites.
pub const MAX_BOUND: u32 = 8;

/// One instance of an identity at fixed integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance {
    pub id: &'static str,
    pub params: Vec<(&'static str, u32)>,
    pub lhs: DPoly,
    pub rhs: DPoly,
    /// Canonical polynomial equality of the two sides.
    pub equal: bool,
    /// Point evaluations agree with the polynomials (true when no points
    /// were sampled).
    pub samples_consistent: bool,
}

impl IdentityInstance {
    pub fn passed(&self) -> bool {
        self.equal && self.samples_consistent
    }

    /// e.g. `id5(l1=1, l2=0, k'=2)`
    pub fn label(&self) -> String {
        let mut s = String::from(self.id);
        s.push('(');
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&format!("{k}={v}"));
        }
        s.push(')');
        s
    }

    fn failure_detail(&self) -> String {
        if self.equal {
            format!(
                "{}: point evaluation disagrees with the polynomials",
                self.label()
            )
        } else {
            format!("{}: {} vs {}", self.label(), self.lhs, self.rhs)
        }
    }
}

/// Folds instances into a report with one subcheck per identity id, in
/// order of first appearance.
pub fn tally(report: &mut VerificationReport, instances: &[IdentityInstance]) {
    let mut ids: Vec<&'static str> = Vec::new();
    for inst in instances {
        if !ids.contains(&inst.id) {
            ids.push(inst.id);
        }
    }
    for id in ids {
        let of_id = instances.iter().filter(|c| c.id == id);
        let count = of_id.clone().count();
        let failure = of_id
            .clone()
            .find(|c| !c.passed())
            .map(|c| c.failure_detail());
        report.note(format!("{id}: {count} instances"));
        report.record_outcome(id, failure);
    }
}

fn bound_error(check: &str, bound: u32) -> Option<VerificationReport> {
    (bound > MAX_BOUND).then(|| {
        let mut r = VerificationReport::ungraded(check).param("bound", bound);
        r.fail_with_error(
            check,
            &Error::Bounds("identity bound exceeds the configured maximum"),
        );
        r
    })
}

/// Every `(k, l, A, C)` with `k, l ≤ bound`: the identity itself with point
/// sampling, and the index-shift rewrite of both sides.
pub fn verify_bigident_suite(bound: u32) -> VerificationReport {
    if let Some(r) = bound_error("bigident", bound) {
        return r;
    }
    let mut instances = Vec::new();
    for [k, l, a, c] in bigident_params(bound) {
        instances.push(verify_bigident(k, l, a, c).expect("parameters are in bounds"));
        instances.extend(verify_bigident_shift(k, l, a, c).expect("parameters are in bounds"));
    }
    let mut report = VerificationReport::ungraded("bigident").param("bound", bound);
    tally(&mut report, &instances);
    report
}

pub fn verify_identity_chain(chain: Chain, bound: u32) -> VerificationReport {
    let check = match chain {
        Chain::L => "L-chain",
        Chain::R => "R-chain",
    };
    if let Some(r) = bound_error(check, bound) {
        return r;
    }
    let instances = match chain {
        Chain::L => l_chain_instances(bound),
        Chain::R => r_chain_instances(bound),
    };
    let mut report = VerificationReport::ungraded(check).param("bound", bound);
    tally(&mut report, &instances);
    report
}

/// `|det| = 1` for every `n ≤ max_n`; the signed values go into the notes.
pub fn verify_independence(max_n: u32) -> VerificationReport {
    let mut report = VerificationReport::ungraded("independence-det").param("max_n", max_n);
    let mut failure = None;
    for n in 0..=max_n {
        let det = independence_det(n);
        report.note(format!("n={n}: det={det}"));
        if det.numer().magnitude() != det.denom().magnitude() && failure.is_none() {
            failure = Some(format!("n={n}: det={det}"));
        }
    }
    report.record_outcome("|det| = 1", failure);
    report
}

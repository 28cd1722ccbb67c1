use std::fmt::Write as _;

use clap::ValueEnum;
use jtwist_core::exactalg::Rational;
use jtwist_core::identities::{
    bigident_params, independence_det, tally, verify_bigident, verify_bigident_shift,
    verify_identity_chain, Chain, MAX_BOUND,
};
use jtwist_core::twists::{
    build_twist, check_cocycle, check_deformed_counit, check_endpoints, check_form_equality,
    check_hopf_data, check_inverse_pair, check_lr_at_one, check_lr_relation, check_normalization,
    check_twisted_coassociativity, check_v_family, Direction, Family, Form, Generator, TwistSpec,
    UMode, VerificationReport,
};
use rayon::prelude::*;
use serde_json::json;

use crate::args::{CheckName, ExpandArgs, Format, IdentitiesArgs, VerifyArgs};
use crate::json::{element_to_json, report_doc, reports_to_json, SCHEMA};

/// Anything that stops a command before it produces a verdict; exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] jtwist_core::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

/// Rendered output plus the verdict that decides the exit code.
#[derive(Debug)]
pub struct Rendered {
    pub body: String,
    pub passed: bool,
}

/// The closed form available for each family and direction.
pub fn default_form(family: Family, inverse: bool) -> Form {
    match (family, inverse) {
        (Family::R, false) | (Family::L, true) => Form::InvertedClosed,
        _ => Form::Closed,
    }
}

pub fn expand(args: &ExpandArgs) -> Result<Rendered, UsageError> {
    let direction = if args.inverse {
        Direction::Inverse
    } else {
        Direction::Twist
    };
    let form = args
        .form
        .unwrap_or_else(|| default_form(args.family, args.inverse));
    let spec = TwistSpec::new(args.family, direction, form, args.order).with_u(args.u.clone());
    let element = build_twist(&spec)?;
    let body = match args.output.format {
        Format::Text => element.render(args.ascii),
        Format::Json => element_to_json(&element) + "\n",
    };
    Ok(Rendered { body, passed: true })
}

const V_DEFAULTS: [(i64, i64); 5] = [(-2, 1), (-1, 1), (0, 1), (1, 2), (3, 1)];
const GENERATORS: [Generator; 3] = [Generator::P, Generator::Q, Generator::D];

#[derive(Debug, Clone)]
enum Job {
    Cocycle(TwistSpec),
    Normalization(TwistSpec),
    InversePair(Family),
    Endpoints(Family),
    FormEquality(Family),
    HopfData(Family, Generator),
    TwistedCoassociativity(Family, Generator),
    DeformedCounit(Family, Generator),
    LrRelation,
    LrAtOne,
    VFamily(Rational),
}

impl Job {
    fn run(&self, n: u32, u: &UMode) -> VerificationReport {
        match self {
            Job::Cocycle(spec) => check_cocycle(spec),
            Job::Normalization(spec) => check_normalization(spec),
            Job::InversePair(f) => check_inverse_pair(*f, n, u),
            Job::Endpoints(f) => check_endpoints(*f, n),
            Job::FormEquality(f) => check_form_equality(*f, n, u),
            Job::HopfData(f, g) => check_hopf_data(*f, *g, n, u),
            Job::TwistedCoassociativity(f, g) => check_twisted_coassociativity(*f, *g, n, u),
            Job::DeformedCounit(f, g) => check_deformed_counit(*f, *g, n, u),
            Job::LrRelation => check_lr_relation(n, u),
            Job::LrAtOne => check_lr_at_one(n),
            Job::VFamily(v) => check_v_family(v, n),
        }
    }
}

/// Every supported (direction, form) of `family`.
fn specs(family: Family, n: u32, u: &UMode) -> Vec<TwistSpec> {
    let mut out = Vec::new();
    for direction in [Direction::Twist, Direction::Inverse] {
        for form in [Form::Product, Form::Closed, Form::InvertedClosed] {
            let spec = TwistSpec::new(family, direction, form, n).with_u(u.clone());
            if spec.is_supported() {
                out.push(spec);
            }
        }
    }
    out
}

fn jobs_for(check: CheckName, args: &VerifyArgs, family: Family) -> Result<Vec<Job>, UsageError> {
    let n = args.order;
    let needs_lr = matches!(
        check,
        CheckName::InversePair
            | CheckName::Endpoints
            | CheckName::FormEquality
            | CheckName::HopfData
            | CheckName::TwistedCoassociativity
            | CheckName::DeformedCounit
    );
    if needs_lr && !matches!(family, Family::L | Family::R) {
        let name = check
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        return Err(UsageError::Invalid(format!(
            "check {name} covers families L and R only"
        )));
    }
    let generators: Vec<Generator> = match args.generator {
        Some(g) => vec![g],
        None => GENERATORS.to_vec(),
    };
    Ok(match check {
        CheckName::Cocycle => specs(family, n, &args.u)
            .into_iter()
            .map(Job::Cocycle)
            .collect(),
        CheckName::Normalization => specs(family, n, &args.u)
            .into_iter()
            .map(Job::Normalization)
            .collect(),
        CheckName::InversePair => vec![Job::InversePair(family)],
        CheckName::Endpoints => vec![Job::Endpoints(family)],
        CheckName::FormEquality => vec![Job::FormEquality(family)],
        CheckName::HopfData => generators
            .iter()
            .map(|&g| Job::HopfData(family, g))
            .collect(),
        CheckName::TwistedCoassociativity => generators
            .iter()
            .map(|&g| Job::TwistedCoassociativity(family, g))
            .collect(),
        CheckName::DeformedCounit => generators
            .iter()
            .map(|&g| Job::DeformedCounit(family, g))
            .collect(),
        CheckName::LrRelation => vec![Job::LrRelation],
        CheckName::LrAtOne => vec![Job::LrAtOne],
        CheckName::VFamily => match &args.v {
            Some(v) => vec![Job::VFamily(v.clone())],
            None => V_DEFAULTS
                .iter()
                .map(|&(p, q)| Job::VFamily(Rational::new(p, q).expect("nonzero denominator")))
                .collect(),
        },
    })
}

fn all_jobs(args: &VerifyArgs) -> Vec<Job> {
    let per_family = [
        CheckName::Cocycle,
        CheckName::Normalization,
        CheckName::InversePair,
        CheckName::Endpoints,
        CheckName::FormEquality,
        CheckName::HopfData,
        CheckName::TwistedCoassociativity,
        CheckName::DeformedCounit,
    ];
    let mut jobs = Vec::new();
    for family in [Family::Zero, Family::One] {
        jobs.extend(jobs_for(CheckName::Cocycle, args, family).expect("cocycle covers F0 and F1"));
    }
    for family in [Family::L, Family::R] {
        for check in per_family {
            jobs.extend(jobs_for(check, args, family).expect("families L and R are supported"));
        }
    }
    for check in [
        CheckName::LrRelation,
        CheckName::LrAtOne,
        CheckName::VFamily,
    ] {
        jobs.extend(jobs_for(check, args, Family::L).expect("family-independent check"));
    }
    jobs
}

/// Runs the selected checks in parallel; reports keep the job order.
pub fn verify(args: &VerifyArgs) -> Result<Rendered, UsageError> {
    let jobs = match args.check {
        _ if args.all => all_jobs(args),
        Some(check) => jobs_for(check, args, args.family)?,
        None => return Err(UsageError::Invalid("give --check or --all".into())),
    };
    let reports: Vec<VerificationReport> = jobs
        .par_iter()
        .map(|j| j.run(args.order, &args.u))
        .collect();
    Ok(render_reports(&reports, args.output.format))
}

/// Text or JSON for a batch of reports; `passed` iff every report passed.
pub fn render_reports(reports: &[VerificationReport], format: Format) -> Rendered {
    let passed = reports.iter().all(|r| r.passed());
    let body = match format {
        Format::Json => reports_to_json(reports) + "\n",
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(s, "{}", r.summary());
                for sub in &r.subchecks {
                    let mark = if sub.passed { "ok  " } else { "FAIL" };
                    let _ = writeln!(s, "  {mark} {}", sub.label);
                }
                for n in &r.notes {
                    let _ = writeln!(s, "  {n}");
                }
            }
            let _ = writeln!(
                s,
                "{} of {} checks passed",
                reports.iter().filter(|r| r.passed()).count(),
                reports.len()
            );
            s
        }
    };
    Rendered { body, passed }
}

/// Bigident suite with the parameter tuples fanned out across threads.
fn bigident_report(bound: u32) -> VerificationReport {
    let instances: Vec<_> = bigident_params(bound)
        .par_iter()
        .flat_map_iter(|&[k, l, a, c]| {
            let mut v = vec![verify_bigident(k, l, a, c).expect("parameters are in bounds")];
            v.extend(verify_bigident_shift(k, l, a, c).expect("parameters are in bounds"));
            v
        })
        .collect();
    let mut report = VerificationReport::ungraded("bigident").param("bound", bound);
    tally(&mut report, &instances);
    report
}

pub fn identities(args: &IdentitiesArgs) -> Result<Rendered, UsageError> {
    if let Some(b) = args.bound.filter(|&b| b > MAX_BOUND) {
        return Err(UsageError::Invalid(format!(
            "bound {b} exceeds the maximum {MAX_BOUND}"
        )));
    }
    let none_selected = !(args.bigident || args.lchain || args.rchain);
    let run_all = none_selected && args.det.is_none();
    let mut suites: Vec<Box<dyn Fn() -> VerificationReport + Sync>> = Vec::new();
    if args.bigident || run_all {
        let b = args.bound.unwrap_or(4);
        suites.push(Box::new(move || bigident_report(b)));
    }
    if args.lchain || run_all {
        let b = args.bound.unwrap_or(4);
        suites.push(Box::new(move || verify_identity_chain(Chain::L, b)));
    }
    if args.rchain || run_all {
        let b = args.bound.unwrap_or(3);
        suites.push(Box::new(move || verify_identity_chain(Chain::R, b)));
    }
    let reports: Vec<VerificationReport> = suites.par_iter().map(|f| f()).collect();
    let det = args.det.map(|n| (n, independence_det(n)));
    let det_ok = det
        .as_ref()
        .is_none_or(|(_, d)| d == &Rational::one() || d == &-Rational::one());
    let passed = reports.iter().all(|r| r.passed()) && det_ok;

    let body = match args.output.format {
        Format::Json => {
            let mut doc = json!({
                "schema": SCHEMA,
                "status": if passed { "pass" } else { "fail" },
                "reports": reports.iter().map(report_doc).collect::<Vec<_>>(),
            });
            if let Some((n, d)) = &det {
                doc["det"] = json!({ "n": n, "value": d.to_fraction_string() });
            }
            serde_json::to_string_pretty(&doc).expect("report documents always serialize") + "\n"
        }
        Format::Text => {
            let mut s = if reports.is_empty() {
                String::new()
            } else {
                render_reports(&reports, Format::Text).body
            };
            if let Some((_, d)) = &det {
                let _ = writeln!(s, "{d}");
            }
            s
        }
    };
    Ok(Rendered { body, passed })
}

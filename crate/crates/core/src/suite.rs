//! Named suites of checks and a concurrent runner.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matq::{builtin_rep, check_rep, check_universal_t, CoproductVariant};
use crate::ncpoly::{builtin_presentation, check_confluence, CATALOG};
use crate::osc::{self, OscParams};
use crate::qgroup;
use crate::report::{timed, CheckReport, SuiteResult};
use crate::rmat;

pub const SUITES: [&str; 6] = [
    "all",
    "plane",
    "qgroup",
    "universal-t",
    "rmatrix",
    "oscillator",
];

const PLANE: [&str; 4] = [
    "confluence-quantum_plane",
    "confluence-covariance",
    "covariance",
    "covariance-classical",
];

const QGROUP: [&str; 14] = [
    "confluence-funq_gl2",
    "confluence-funq_sl2",
    "confluence-uq_sl2",
    "confluence-q_osc",
    "rep-fund",
    "rep-spin1",
    "detq-central",
    "t-inverse",
    "delta-fun",
    "corep-fund",
    "corep-spin1",
    "delta-uq-q",
    "delta-uq-qinv",
    "delta-flip",
];

const UNIVERSAL_T: [&str; 3] = [
    "confluence-param_alg",
    "universal-t-fund",
    "universal-t-spin1",
];

/// Check names making up `suite`, sorted.
pub fn suite_checks(suite: &str) -> Result<Vec<&'static str>> {
    let mut out: Vec<&'static str> = match suite {
        "plane" => PLANE.to_vec(),
        "qgroup" => QGROUP.to_vec(),
        "universal-t" => UNIVERSAL_T.to_vec(),
        "rmatrix" => rmat::CHECKS.to_vec(),
        "oscillator" => osc::CHECKS.to_vec(),
        "all" => PLANE
            .iter()
            .chain(&QGROUP)
            .chain(&UNIVERSAL_T)
            .chain(&rmat::CHECKS)
            .chain(&osc::CHECKS)
            .copied()
            .collect(),
        other => {
            return Err(Error::UnknownKey {
                kind: "suite",
                key: other.into(),
            })
        }
    };
    out.sort_unstable();
    Ok(out)
}

/// Every check name known to the runner, sorted.
pub fn all_checks() -> Vec<&'static str> {
    suite_checks("all").expect("all")
}

pub fn is_oscillator_check(name: &str) -> bool {
    osc::CHECKS.contains(&name)
}

fn run_unchecked(name: &str, params: OscParams) -> Result<CheckReport> {
    if let Some(pres) = name.strip_prefix("confluence-") {
        if CATALOG.contains(&pres) {
            return Ok(check_confluence(&*builtin_presentation(pres)?));
        }
    }
    if let Some(rep) = name.strip_prefix("rep-") {
        if let Ok(r) = builtin_rep(rep) {
            return Ok(check_rep(&r));
        }
    }
    if let Some(rep) = name.strip_prefix("universal-t-") {
        if let Ok(r) = builtin_rep(rep) {
            return Ok(check_universal_t(&r));
        }
    }
    Ok(match name {
        "covariance" => qgroup::check_covariance(),
        "covariance-classical" => qgroup::check_covariance_classical(),
        "detq-central" => qgroup::check_detq_central(),
        "t-inverse" => qgroup::check_t_inverse(),
        "delta-fun" => qgroup::check_delta_fun(),
        "corep-fund" => qgroup::check_corep_fund(),
        "corep-spin1" => qgroup::check_corep_spin1(),
        "delta-uq-q" => qgroup::check_delta_uq(CoproductVariant::Q),
        "delta-uq-qinv" => qgroup::check_delta_uq(CoproductVariant::QInv),
        "delta-flip" => qgroup::check_delta_flip(),
        n if rmat::CHECKS.contains(&n) => rmat::run_check(n)?,
        n if osc::CHECKS.contains(&n) => osc::run_check(n, params)?,
        other => {
            return Err(Error::UnknownKey {
                kind: "check",
                key: other.into(),
            })
        }
    })
}

/// Runs one check by name, timing it.
pub fn run_check(name: &str, params: OscParams) -> Result<CheckReport> {
    if !all_checks().contains(&name) {
        return Err(Error::UnknownKey {
            kind: "check",
            key: name.into(),
        });
    }
    let mut out = None;
    let report = timed(|| match run_unchecked(name, params) {
        Ok(r) => r,
        Err(e) => {
            out = Some(e);
            CheckReport::exact(name, None)
        }
    });
    match out {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

/// Runs a suite, or a single check when `target` names one. Oscillator
/// parameters are validated whenever an oscillator check is selected.
pub fn run(target: &str, params: OscParams) -> Result<SuiteResult> {
    let names = if SUITES.contains(&target) {
        suite_checks(target)?
    } else if all_checks().contains(&target) {
        vec![all_checks()
            .into_iter()
            .find(|n| *n == target)
            .expect("known")]
    } else {
        return Err(Error::UnknownKey {
            kind: "suite or check",
            key: target.into(),
        });
    };
    if names.iter().any(|n| is_oscillator_check(n)) {
        params.validate()?;
    }
    let reports = names
        .par_iter()
        .map(|n| run_check(n, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteResult::new(target, reports))
}

//! End-to-end consistency checks behind `f4 verify`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{LinForm, SignClass};
use crate::multiplet::fixtures::{match_fixtures, FixtureTable, MatchReport, NodeName};
use crate::multiplet::{
    self, arrow_labels, generate, ks_pairing, MultipletError, MultipletGraph, Params,
};
use crate::parabolic::{
    classify_roots, discrete_series_check, ParabolicError, ParabolicSpec, Side,
};
use crate::rootsys::{LengthClass, RootError, RootSystem, RootVector};
use crate::verma::{rho_in_root_basis, VermaError};

pub const EXPECTED_HISTOGRAM: [usize; 21] = [
    1, 1, 2, 3, 4, 5, 6, 7, 7, 8, 8, 8, 7, 7, 6, 5, 4, 3, 2, 1, 1,
];

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Root(#[from] RootError),
    #[error(transparent)]
    Verma(#[from] VermaError),
    #[error(transparent)]
    Parabolic(#[from] ParabolicError),
    #[error(transparent)]
    Multiplet(#[from] MultipletError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.id, self.detail)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub params: Params,
    pub checks: Vec<Check>,
    pub summary: String,
    /// Fixture problems and failed checks, one line each.
    pub failures: Vec<String>,
    pub corrections: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(id: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        id,
        passed,
        detail: detail.into(),
    }
}

fn sorted_set(roots: &[RootVector]) -> BTreeSet<RootVector> {
    roots.iter().cloned().collect()
}

/// Normalizes a sign-definite form to its positive representative.
fn abs_form(f: &LinForm) -> LinForm {
    match f.sign_over_positive() {
        SignClass::GenericNegative => -f,
        _ => f.clone(),
    }
}

fn hc_sign_check(rs: &RootSystem, g: &MultipletGraph) -> Result<Check, VerifyError> {
    let mut top: Vec<LinForm> = Vec::new();
    for beta in rs.positive() {
        top.push(g.top().symbolic_weight.hc_param(rs, beta)?);
    }
    top.sort();
    let mut bad = Vec::new();
    for n in &g.nodes {
        let mut forms = Vec::new();
        for beta in rs.positive() {
            let m = n.symbolic_weight.hc_param(rs, beta)?;
            match m.sign_over_positive() {
                SignClass::GenericPositive | SignClass::GenericNegative => forms.push(abs_form(&m)),
                class => bad.push(format!("node {} root {beta}: {m} is {class:?}", n.id)),
            }
        }
        forms.sort();
        if forms.len() == top.len() && forms != top {
            bad.push(format!(
                "node {}: parameters are not a signed permutation of the top's",
                n.id
            ));
        }
    }
    let detail = if bad.is_empty() {
        format!("{} nodes x {} roots sign-definite", g.len(), rs.len())
    } else {
        bad.join("; ")
    };
    Ok(check("hc-signs", bad.is_empty(), detail))
}

fn find_named(g: &MultipletGraph, side: Side) -> Option<&multiplet::MultipletNode> {
    g.node_by_name(&NodeName {
        side,
        index: "0".parse().ok()?,
    })
}

/// Runs every check for `params` against the fixture `table`.
pub fn run_checks(table: &FixtureTable, params: Params) -> Result<VerifyReport, VerifyError> {
    let rs = RootSystem::f4();
    let p = ParabolicSpec::f4_sl3_sl2();
    let mut checks = Vec::new();
    let mut failures = Vec::new();

    let long = rs.long_roots().count();
    let short = rs.short_roots().count();
    checks.push(check(
        "roots",
        rs.len() == 24 && long == 12 && short == 12,
        format!("{} ({long} long, {short} short)", rs.len()),
    ));
    let theta = RootVector::new([2, 3, 4, 2]);
    let highest_ok = rs.contains(&theta) && rs.length_class(&theta)? == LengthClass::Long;
    checks.push(check("highest-root", highest_ok, format!("θ = {theta}")));

    let rho = rho_in_root_basis(rs.data())?;
    let rho_txt: Vec<String> = rho.iter().map(ToString::to_string).collect();
    checks.push(check(
        "rho",
        rho_txt == ["8", "15", "21", "11"],
        format!("ρ = ({})", rho_txt.join(", ")),
    ));

    let w = rs.weyl_order()?;
    let a2 = rs.subsystem(&[0, 1])?.weyl_order()?;
    let a1 = rs.subsystem(&[3])?.weyl_order()?;
    checks.push(check(
        "weyl",
        w == 1152 && a2 == 6 && a1 == 2,
        format!("|W|={w}, |W(A2)|={a2}, |W(A1)|={a1}"),
    ));

    let part = classify_roots(&rs, &p);
    let expected_compact = sorted_set(&[
        RootVector::new([1, 0, 0, 0]),
        RootVector::new([0, 1, 0, 0]),
        RootVector::new([1, 1, 0, 0]),
        RootVector::new([0, 0, 0, 1]),
    ]);
    checks.push(check(
        "parabolic",
        sorted_set(&part.compact) == expected_compact && part.noncompact.len() == 20,
        format!(
            "{} compact, {} noncompact",
            part.compact.len(),
            part.noncompact.len()
        ),
    ));

    let mut g = generate(&rs, &p, params)?;
    let hist = g.level_histogram();
    checks.push(check(
        "multiplet",
        g.len() == 96 && hist == EXPECTED_HISTOGRAM,
        format!("{} nodes, levels {:?}", g.len(), hist),
    ));

    let oracle = multiplet::orbit_quotient_oracle(&rs, &p)?;
    let oracle_equal = oracle.dominant == g.symbolic_weights();
    checks.push(check(
        "oracle",
        oracle_equal && oracle.orbit_size / oracle.m_weyl_order == g.len(),
        format!(
            "orbit {} / |W_M| {} = {}; {} dominant; sets {}",
            oracle.orbit_size,
            oracle.m_weyl_order,
            oracle.orbit_size / oracle.m_weyl_order,
            oracle.dominant.len(),
            if oracle_equal { "equal" } else { "differ" }
        ),
    ));

    let report: MatchReport = match_fixtures(&g, table);
    g.assign_names(&report);
    let matched = report.matched_signatures();
    let bijection = report.is_bijection();
    let level_ok = report
        .entries
        .iter()
        .all(|e| e.chosen.is_none() || e.level_consistent);
    let corrections: Vec<String> = report
        .corrections()
        .map(|e| {
            let note = e
                .chosen_outcome()
                .and_then(|o| o.note.clone())
                .unwrap_or_default();
            format!("{}: {note}", e.name)
        })
        .collect();
    checks.push(check(
        "fixtures",
        bijection && level_ok,
        format!(
            "{matched}/{} signatures matched, {} corrected readings",
            g.len(),
            corrections.len()
        ),
    ));
    failures.extend(report.failures());

    let (ks_ok, ks_detail) = match ks_pairing(&g) {
        Ok(pairs) => {
            let max = g.max_level();
            let sums_ok = pairs
                .iter()
                .all(|&(a, b)| g.nodes[a].level + g.nodes[b].level == max);
            (
                pairs.len() * 2 == g.len() && sums_ok,
                format!("{} pairs, levels sum to {max}", pairs.len()),
            )
        }
        Err(e) => (false, e.to_string()),
    };
    checks.push(check("ks-duality", ks_ok, ks_detail));

    let arrows = arrow_labels(&g);
    let connected = g.diagram_is_connected();
    let acyclic = g.edges_increase_level();
    checks.push(check(
        "arrows",
        arrows.violations.is_empty() && connected && acyclic,
        format!(
            "{} diagram edges, {} violations, connected={connected}, acyclic={acyclic}",
            arrows.arrows.len(),
            arrows.violations.len()
        ),
    ));
    failures.extend(arrows.violations.iter().cloned());

    checks.push(hc_sign_check(&rs, &g)?);

    let mut d_plus = None;
    if let Params::Concrete(_) = params {
        let minus0 = find_named(&g, Side::Minus);
        let plus0 = find_named(&g, Side::Plus);
        let (ok, detail) = match (minus0, plus0) {
            (Some(m), Some(pl)) => {
                let (dm, dp) = (m.signature.d().clone(), pl.signature.d().clone());
                let sum_ok = (&dm + &dp) == LinForm::constant(crate::Rational::integer(7));
                let unit_ok = params != Params::Concrete([1, 1, 1, 1])
                    || (dm.is_zero() && dp == LinForm::constant(crate::Rational::integer(7)));
                let ds = discrete_series_check(&rs, &pl.symbolic_weight, &p)?;
                d_plus = Some(dp.clone());
                (
                    sum_ok && unit_ok && ds,
                    format!("d(χ^-_0)={dm}; d(χ^+_0)={dp}; χ^+_0 noncompact parameters all negative: {ds}"),
                )
            }
            _ => (false, "χ^∓_0 not named".to_string()),
        };
        checks.push(check("conformal-weight", ok, detail));
    }

    for c in checks.iter().filter(|c| !c.passed) {
        failures.push(format!("{}: {}", c.id, c.detail));
    }

    let mut summary = format!(
        "{matched}/{} signatures matched; oracle set {}; |W|={w}",
        g.len(),
        if oracle_equal { "equal" } else { "differs" }
    );
    if let Some(dp) = d_plus {
        summary.push_str(&format!("; d(χ^+_0)={dp}"));
    }

    Ok(VerifyReport {
        params,
        checks,
        summary,
        failures,
        corrections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplet::fixtures::BUILTIN_TABLE;

    #[test]
    fn symbolic_run_passes() {
        let r = run_checks(&FixtureTable::builtin(), Params::Symbolic).unwrap();
        assert!(r.passed(), "{:#?}", r.failures);
        assert_eq!(
            r.summary,
            "96/96 signatures matched; oracle set equal; |W|=1152"
        );
        assert!(r.failures.is_empty());
        assert_eq!(r.corrections.len(), 6);
    }

    #[test]
    fn unit_labels_report_d7() {
        let r = run_checks(&FixtureTable::builtin(), Params::Concrete([1, 1, 1, 1])).unwrap();
        assert!(r.passed(), "{:#?}", r.failures);
        assert!(r.summary.ends_with("; d(χ^+_0)=7"));
    }

    #[test]
    fn perturbed_fixture_fails() {
        let text = BUILTIN_TABLE.replace(
            "printed   2,2   | m1 | m2+m3+m4 | -+ | m1+m2+1/2*m3 | m3",
            "printed   2,2   | m1 | m2+m3+m4 | -+ | m1+m2+1/2*m3 | m3+m4",
        );
        let table = FixtureTable::parse(&text).unwrap();
        let r = run_checks(&table, Params::Symbolic).unwrap();
        assert!(!r.passed());
        assert!(r.failures.iter().any(|f| f.contains("χ^-_{2,2}")));
        assert!(r.summary.starts_with("94/96"));
    }
}

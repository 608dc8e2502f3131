//! Cross-validation harness: every identity the crate implements, checked
//! against the Freudenthal oracle over a configurable box of labels.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::Result;
use crate::exact::{RationalGF, TruncatedSeries2};
use crate::genfunc::c2;
use crate::lie::{weyl_character, Algebra, MultOracle, RepLabel};
use crate::recurrence;

#[derive(Clone, Copy, Debug)]
pub struct VerifyBounds {
    pub max_p: i64,
    pub max_q: i64,
    pub max_m: i64,
    pub max_n: i64,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        Self {
            max_p: 10,
            max_q: 10,
            max_m: 10,
            max_n: 10,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub checks: u64,
    pub failure: Option<String>,
}

impl CheckResult {
    fn pass(name: &'static str, checks: u64) -> Self {
        Self {
            name,
            checks,
            failure: None,
        }
    }

    fn fail(name: &'static str, checks: u64, msg: String) -> Self {
        Self {
            name,
            checks,
            failure: Some(msg),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub categories: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.categories.iter().all(CheckResult::passed)
    }

    pub fn total_checks(&self) -> u64 {
        self.categories.iter().map(|c| c.checks).sum()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.categories {
            match &c.failure {
                None => writeln!(out, "{:<18} {:>8} checks  ok", c.name, c.checks).unwrap(),
                Some(msg) => {
                    writeln!(out, "{:<18} {:>8} checks  FAILED: {msg}", c.name, c.checks).unwrap()
                }
            }
        }
        if self.passed() {
            writeln!(out, "all {} checks passed", self.total_checks()).unwrap();
        } else {
            writeln!(out, "verification FAILED").unwrap();
        }
        out
    }
}

/// Runs every category against the shipped generating-function catalog.
pub fn run_all(bounds: VerifyBounds) -> Result<VerifyReport> {
    let oracle = MultOracle::new(Algebra::C2);
    Ok(VerifyReport {
        categories: vec![
            verify_oracle_agreement(&oracle, bounds)?,
            verify_counting_rule(&oracle, bounds),
            verify_rec1(&oracle, bounds),
            verify_rec2(&oracle, bounds),
            verify_catalog(&c2::low_weight_gf_table()),
            verify_border_formulas(&oracle, bounds),
        ],
    })
}

/// Freudenthal, Weyl-character and generating-function multiplicities must
/// coincide on every dominant weight of every R_{p,q} in the box.
pub fn verify_oracle_agreement(oracle: &MultOracle, bounds: VerifyBounds) -> Result<CheckResult> {
    const NAME: &str = "oracle-agreement";
    let rs = oracle.root_system();
    let order = (bounds.max_p + bounds.max_q) as u32;
    let mut gf_cache: HashMap<(i64, i64), TruncatedSeries2> = HashMap::new();
    let mut checks = 0;
    for p in 0..=bounds.max_p {
        for q in 0..=bounds.max_q {
            let r = RepLabel::new(p, q);
            let table = oracle.table(p, q);
            let chi = weyl_character(rs, r)?;
            if chi.eval_at_one() != rs.weyl_dim(r).into() {
                return Ok(CheckResult::fail(
                    NAME,
                    checks,
                    format!("character dimension mismatch at p={p} q={q}"),
                ));
            }
            for w in rs.dominant_weights_of(r) {
                let expected = table.mult(w);
                let from_char = crate::lie::mult_from_character(&chi, w);
                let series = match gf_cache.entry((w.m, w.n)) {
                    std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c2::mult_gf(w.m, w.n).series(order)?)
                    }
                };
                let from_gf = series.coeff(p as u32, q as u32);
                checks += 2;
                if from_char != expected || from_gf != expected.into() {
                    return Ok(CheckResult::fail(
                        NAME,
                        checks,
                        format!(
                            "p={p} q={q} m={} n={}: freudenthal={expected} character={from_char} genfunc={from_gf}",
                            w.m, w.n
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckResult::pass(NAME, checks))
}

/// The lattice counting rule must reproduce the oracle.
pub fn verify_counting_rule(oracle: &MultOracle, bounds: VerifyBounds) -> CheckResult {
    const NAME: &str = "counting-rule";
    let rs = oracle.root_system();
    let mut checks = 0;
    for p in 0..=bounds.max_p {
        for q in 0..=bounds.max_q {
            let table = oracle.table(p, q);
            for w in rs.dominant_weights_of(RepLabel::new(p, q)) {
                let counted = recurrence::counting_rule_mult(p, q, w.m, w.n);
                checks += 1;
                if counted != table.mult(w) {
                    return CheckResult::fail(
                        NAME,
                        checks,
                        format!(
                            "p={p} q={q} m={} n={}: counted={counted} freudenthal={}",
                            w.m,
                            w.n,
                            table.mult(w)
                        ),
                    );
                }
            }
        }
    }
    CheckResult::pass(NAME, checks)
}

/// First recurrence: the alternating four-term combination over
/// representation labels equals the containment indicator.
pub fn verify_rec1(oracle: &MultOracle, bounds: VerifyBounds) -> CheckResult {
    const NAME: &str = "rec1";
    let mut checks = 0;
    for p in 0..=bounds.max_p {
        for q in 0..=bounds.max_q {
            for m in 0..=bounds.max_m {
                for n in 0..=bounds.max_n {
                    let lhs = recurrence::rec1_residual(oracle, p, q, m, n);
                    let rhs = recurrence::counting_indicator(p, q, m, n);
                    checks += 1;
                    if lhs != rhs {
                        return CheckResult::fail(
                            NAME,
                            checks,
                            format!("p={p} q={q} m={m} n={n}: residual={lhs} indicator={rhs}"),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass(NAME, checks)
}

/// Second recurrence: the alternating four-term combination over weights
/// equals X + Y - Z, the flags are mutually exclusive, and the geometric
/// domain classification agrees on every weight of every representation.
pub fn verify_rec2(oracle: &MultOracle, bounds: VerifyBounds) -> CheckResult {
    const NAME: &str = "rec2";
    let rs = oracle.root_system();
    let mut checks = 0;
    for p in 0..=bounds.max_p {
        for q in 0..=bounds.max_q {
            for m in 0..=bounds.max_m {
                for n in 0..=bounds.max_n {
                    let flags = recurrence::rec2_indicator(p, q, m, n);
                    let lhs = recurrence::rec2_residual(oracle, p, q, m, n);
                    checks += 1;
                    if flags.x && flags.y {
                        return CheckResult::fail(
                            NAME,
                            checks,
                            format!("p={p} q={q} m={m} n={n}: X and Y both set"),
                        );
                    }
                    if lhs != flags.value() {
                        return CheckResult::fail(
                            NAME,
                            checks,
                            format!(
                                "p={p} q={q} m={m} n={n}: residual={lhs} X+Y-Z={}",
                                flags.value()
                            ),
                        );
                    }
                }
            }
            for w in rs.dominant_weights_of(RepLabel::new(p, q)) {
                let dom = recurrence::rec2_domain(p, q, w.m, w.n);
                let val = recurrence::rec2_indicator(p, q, w.m, w.n).value();
                checks += 1;
                if dom != val {
                    return CheckResult::fail(
                        NAME,
                        checks,
                        format!(
                            "domain p={p} q={q} m={} n={}: classified={dom} indicator={val}",
                            w.m, w.n
                        ),
                    );
                }
            }
        }
    }
    CheckResult::pass(NAME, checks)
}

/// Regression of a generating-function catalog against the closed form and
/// the master-function coefficients.
pub fn verify_catalog(catalog: &[((i64, i64), RationalGF)]) -> CheckResult {
    const NAME: &str = "gf-catalog";
    let master = c2::master_gf();
    let mut checks = 0;
    for ((m, n), gf) in catalog {
        checks += 2;
        if !gf.rational_equal(&c2::mult_gf(*m, *n)) {
            return CheckResult::fail(
                NAME,
                checks,
                format!("A_{{{m},{n}}} differs from the closed form"),
            );
        }
        if !gf.rational_equal(&master.coeff_gf(*m, *n)) {
            return CheckResult::fail(
                NAME,
                checks,
                format!("A_{{{m},{n}}} differs from the master-function coefficient"),
            );
        }
    }
    CheckResult::pass(NAME, checks)
}

/// Border formulas against the oracle, for even p, q with q <= p/2 inside
/// the box, including the difference constraints along the n-axis.
pub fn verify_border_formulas(oracle: &MultOracle, bounds: VerifyBounds) -> CheckResult {
    const NAME: &str = "border-formulas";
    let mut checks = 0;
    for p in (0..=bounds.max_p).step_by(2) {
        for q in (0..=bounds.max_q.min(p / 2)).step_by(2) {
            let border = match recurrence::border_mults(p, q) {
                Ok(b) => b,
                Err(e) => return CheckResult::fail(NAME, checks, format!("p={p} q={q}: {e}")),
            };
            for (&w, &v) in &border.entries {
                checks += 1;
                let oracle_v = oracle.mult(p, q, w.m, w.n) as u64;
                if v != oracle_v {
                    return CheckResult::fail(
                        NAME,
                        checks,
                        format!(
                            "p={p} q={q} m={} n={}: formula={v} freudenthal={oracle_v}",
                            w.m, w.n
                        ),
                    );
                }
            }
            for &(s, d) in &border.axis_differences {
                checks += 1;
                let lhs = oracle.mult(p, q, 0, s) - oracle.mult(p, q, 0, s + 1);
                if lhs != d {
                    return CheckResult::fail(
                        NAME,
                        checks,
                        format!("p={p} q={q} s={s}: mu(0,s)-mu(0,s+1)={lhs} formula={d}"),
                    );
                }
            }
        }
    }
    CheckResult::pass(NAME, checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Poly2;

    #[test]
    fn small_box_passes_everything() {
        let report = run_all(VerifyBounds {
            max_p: 4,
            max_q: 4,
            max_m: 4,
            max_n: 4,
        })
        .unwrap();
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn trivial_box_passes() {
        let report = run_all(VerifyBounds {
            max_p: 0,
            max_q: 0,
            max_m: 0,
            max_n: 0,
        })
        .unwrap();
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn corrupted_catalog_entry_is_named() {
        let mut catalog = c2::low_weight_gf_table();
        // corrupt A_{1,1} by adding 1 to its numerator
        let idx = catalog.iter().position(|((m, n), _)| (*m, *n) == (1, 1)).unwrap();
        let bad = &catalog[idx].1;
        catalog[idx].1 = RationalGF::new(
            &bad.numerator + &Poly2::one(),
            bad.denominator.clone(),
        );
        let result = verify_catalog(&catalog);
        assert!(!result.passed());
        assert!(result.failure.unwrap().contains("A_{1,1}"));
    }
}

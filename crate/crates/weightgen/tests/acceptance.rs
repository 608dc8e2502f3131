//! Acceptance suite: one test per criterion, each exercising a complete
//! cross-validation claim at its full stated range, exactly (tolerance 0).

use std::collections::BTreeMap;

use num_bigint::BigInt;

use weightgen::exact::RationalGF;
use weightgen::genfunc::{a2, c2};
use weightgen::lie::{
    freudenthal_table, weyl_character, Algebra, Method, MultOracle, RepLabel, RootSystem, Weight,
};
use weightgen::recurrence;
use weightgen::verify::{
    verify_border_formulas, verify_catalog, verify_counting_rule, verify_oracle_agreement,
    verify_rec1, verify_rec2, VerifyBounds,
};

fn bounds(max_p: i64, max_q: i64, max_m: i64, max_n: i64) -> VerifyBounds {
    VerifyBounds {
        max_p,
        max_q,
        max_m,
        max_n,
    }
}

#[test]
fn c01_zero_weight_closed_form() {
    let series = c2::zero_weight_gf().series(40).unwrap();
    let rs = RootSystem::c2();
    for p in 0..=20i64 {
        for q in 0..=20i64 {
            let closed = c2::zero_weight_mult(p, q);
            assert_eq!(
                BigInt::from(closed),
                series.coeff(p as u32, q as u32),
                "series vs closed form at p={p} q={q}"
            );
            let oracle = freudenthal_table(&rs, RepLabel::new(p, q)).mult(Weight::new(0, 0));
            assert_eq!(closed, oracle, "closed form vs Freudenthal at p={p} q={q}");
        }
    }
    assert_eq!(c2::zero_weight_mult(10, 5), 33);
    assert_eq!(c2::zero_weight_mult(10, 9), 55);
    println!("PASS c01: zero-weight closed form == series == Freudenthal for p,q <= 20");
}

#[test]
fn c02_low_weight_catalog_regression() {
    let result = verify_catalog(&c2::low_weight_gf_table());
    assert!(result.passed(), "{:?}", result.failure);
    assert_eq!(result.checks, 30);
    println!("PASS c02: all 15 catalog functions match the closed form and the master function");
}

#[test]
fn c03_unreduced_form_consistency() {
    for m in 0..=8 {
        for n in 0..=8 {
            assert!(
                c2::mult_gf_unreduced(m, n).rational_equal(&c2::mult_gf(m, n)),
                "A_{{{m},{n}}} unreduced vs simplified"
            );
        }
    }
    println!("PASS c03: unreduced closed form == simplified form for all m,n <= 8");
}

#[test]
fn c04_four_way_multiplicity_agreement() {
    let oracle = MultOracle::new(Algebra::C2);
    let b = bounds(12, 12, 12, 12);
    let three_way = verify_oracle_agreement(&oracle, b).unwrap();
    assert!(three_way.passed(), "{:?}", three_way.failure);
    let counting = verify_counting_rule(&oracle, b);
    assert!(counting.passed(), "{:?}", counting.failure);
    println!(
        "PASS c04: Freudenthal, character, generating function and counting rule agree \
         on every dominant weight for p,q <= 12 ({} + {} checks)",
        three_way.checks, counting.checks
    );
}

#[test]
fn c05_first_recurrence() {
    let oracle = MultOracle::new(Algebra::C2);
    let result = verify_rec1(&oracle, bounds(15, 15, 15, 15));
    assert!(result.passed(), "{:?}", result.failure);
    assert_eq!(result.checks, 16 * 16 * 16 * 16);
    println!("PASS c05: first recurrence holds for all p,q,m,n <= 15");
}

#[test]
fn c06_second_recurrence_and_domains() {
    let oracle = MultOracle::new(Algebra::C2);
    let result = verify_rec2(&oracle, bounds(15, 15, 15, 15));
    assert!(result.passed(), "{:?}", result.failure);
    // the three geometric cases are all exercised inside the box
    assert_eq!(recurrence::rec2_domain(10, 5, 6, 4), 1);
    assert_eq!(recurrence::rec2_domain(10, 9, 0, 5), 0);
    assert_eq!(recurrence::rec2_domain(5, 10, 1, 2), 0);
    println!("PASS c06: second recurrence and domain classification hold for all p,q,m,n <= 15");
}

#[test]
fn c07_border_formulas() {
    let oracle = MultOracle::new(Algebra::C2);
    let result = verify_border_formulas(&oracle, bounds(14, 14, 14, 14));
    assert!(result.passed(), "{:?}", result.failure);
    // the weight (q, 0) is reachable by two formulas, which must agree
    for p in (0..=14i64).step_by(2) {
        for q in (0..=(p / 2)).step_by(2) {
            let border = recurrence::border_mults(p, q).unwrap();
            let w = Weight::new(q, 0);
            let f2: Vec<u64> = border.by_formula[1]
                .iter()
                .filter(|(x, _)| *x == w)
                .map(|&(_, v)| v)
                .collect();
            let f3: Vec<u64> = border.by_formula[2]
                .iter()
                .filter(|(x, _)| *x == w)
                .map(|&(_, v)| v)
                .collect();
            assert_eq!(f2.len(), 1, "formula 2 reaches ({q},0)");
            assert_eq!(f3.len(), 1, "formula 3 reaches ({q},0)");
            assert_eq!(f2[0], f3[0], "overlap at ({q},0) for p={p} q={q}");
        }
    }
    println!("PASS c07: all six border formulas match the oracle for even p,q <= 14, q <= p/2");
}

#[test]
fn c08_character_generating_function() {
    let g = c2::character_gf();
    assert!(g.forms_agree(), "z-form and x-form of G must agree");
    let rs = RootSystem::c2();
    let chars = g.expand_characters(8).unwrap();
    for (r, chi) in &chars {
        let direct = weyl_character(&rs, *r).unwrap();
        assert_eq!(chi, &direct, "character at p={} q={}", r.p, r.q);
        assert_eq!(
            chi.eval_at_one(),
            BigInt::from(rs.weyl_dim(*r)),
            "dimension at p={} q={}",
            r.p,
            r.q
        );
    }
    assert_eq!(chars.len(), 45);
    println!("PASS c08: G expansion reproduces Weyl characters for p+q <= 8, forms identical");
}

#[test]
fn c09_a2_zero_weight_example() {
    let rs = RootSystem::a2();
    let series = a2::zero_weight_gf().series(24).unwrap();
    for p in 0..=12i64 {
        for q in 0..=12i64 {
            let oracle = freudenthal_table(&rs, RepLabel::new(p, q)).mult(Weight::new(0, 0));
            assert_eq!(
                series.coeff(p as u32, q as u32),
                BigInt::from(oracle),
                "A2 zero weight at p={p} q={q}"
            );
        }
    }
    assert_eq!(series.coeff(1, 1), BigInt::from(2), "A2 adjoint zero weight");
    println!("PASS c09: A2 zero-weight generating function matches Freudenthal for p,q <= 12");
}

#[test]
fn c10_figure_tables_match_golden_files() {
    let cases = [
        ((10, 5), include_str!("golden/c2_table_10_5.csv")),
        ((10, 9), include_str!("golden/c2_table_10_9.csv")),
        ((5, 10), include_str!("golden/c2_table_5_10.csv")),
    ];
    let bin = env!("CARGO_BIN_EXE_weightgen");
    for ((p, q), golden) in cases {
        let golden_rows = parse_rows(golden, &[0, 1, 2, 3]);
        let out = std::process::Command::new(bin)
            .args([
                "table",
                "C2",
                &p.to_string(),
                &q.to_string(),
                "--format",
                "csv",
                "--overlay",
                "epsilon",
            ])
            .output()
            .expect("table command runs");
        assert!(out.status.success());
        let stdout = String::from_utf8(out.stdout).unwrap();
        let table_rows = parse_rows(&stdout, &[0, 1, 4, 6]);
        assert_eq!(
            table_rows,
            golden_rows,
            "table output vs golden file for R_{{{p},{q}}}"
        );
        // every route reproduces the same multiplicities
        let rs = RootSystem::c2();
        for method in Method::ALL {
            let doc =
                weightgen::table::build_table(&rs, RepLabel::new(p, q), method, false).unwrap();
            let rows: BTreeMap<(i64, i64), i64> = doc
                .entries
                .iter()
                .map(|e| ((e.m, e.n), e.mult as i64))
                .collect();
            let expected: BTreeMap<(i64, i64), i64> = golden_rows
                .iter()
                .map(|(&(m, n), v)| ((m, n), v[0]))
                .collect();
            assert_eq!(rows, expected, "method {} vs golden", method.name());
        }
    }
    println!("PASS c10: tables of R_(10,5), R_(10,9), R_(5,10) match the golden files");
}

/// Parses CSV lines into (m, n) -> remaining selected columns.
fn parse_rows(csv: &str, cols: &[usize]) -> BTreeMap<(i64, i64), Vec<i64>> {
    csv.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let f: Vec<i64> = l.split(',').map(|x| x.trim().parse().unwrap()).collect();
            ((f[cols[0]], f[cols[1]]), cols[2..].iter().map(|&i| f[i]).collect())
        })
        .collect()
}

#[test]
fn series_roundtrip_for_every_shipped_rational_function() {
    // series(r, N) * denominator == numerator, modulo total degree > N
    let order = 12;
    let mut functions: Vec<RationalGF> = vec![
        c2::zero_weight_gf(),
        c2::zero_weight_gf_partial_fractions(),
        a2::zero_weight_gf(),
    ];
    for m in 0..=5 {
        for n in 0..=5 {
            functions.push(c2::mult_gf(m, n));
            functions.push(c2::master_gf().coeff_gf(m, n));
            functions.push(c2::rec1_residual_gf_explicit(m, n));
            functions.push(c2::rec2_residual_gf_explicit(m, n));
        }
    }
    for ((_, _), gf) in c2::low_weight_gf_table() {
        functions.push(gf);
    }
    for r in functions {
        let s = r.series(order).unwrap();
        let den = weightgen::exact::TruncatedSeries2::from_poly(&r.denominator, order);
        let num = weightgen::exact::TruncatedSeries2::from_poly(&r.numerator, order);
        assert_eq!(s.mul(&den).unwrap(), num, "series * denominator != numerator");
    }
}

//! Classical multiplicity oracles and the per-representation tables.
//!
//! Two independent routes are implemented here: the Freudenthal recursion
//! (exact rational arithmetic, top-down from the highest weight) and the
//! Weyl character formula (alternating-sum quotient, exact Laurent
//! division). The generating-function and lattice-counting routes from the
//! other modules are wired in through [`mult_table`] so that all four can be
//! compared on identical inputs.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_rational::Rational64;

use super::{Algebra, RepLabel, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::exact::LaurentPoly2;

/// Multiplicities of all dominant weights of one irreducible representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable {
    pub label: RepLabel,
    pub entries: BTreeMap<Weight, u64>,
}

impl MultTable {
    /// Multiplicity of a dominant weight (zero when absent).
    pub fn mult(&self, w: Weight) -> u64 {
        self.entries.get(&w).copied().unwrap_or(0)
    }

    /// `sum_w mult(w) * |orbit(w)|`, which must equal the Weyl dimension.
    pub fn orbit_weighted_sum(&self, rs: &RootSystem) -> i64 {
        self.entries
            .iter()
            .map(|(&w, &mu)| mu as i64 * rs.weyl_orbit(w).len() as i64)
            .sum()
    }
}

/// Freudenthal recursion for the full dominant multiplicity table.
///
/// Dominant weights are processed by increasing depth below the highest
/// weight; each step divides an exact rational sum over the positive roots,
/// and the division is checked to land on a positive integer.
pub fn freudenthal_table(rs: &RootSystem, r: RepLabel) -> MultTable {
    let lam = r.highest_weight();
    let lam_rho = Weight::new(lam.m + rs.rho.m, lam.n + rs.rho.n);
    let c_top = rs.inner(lam_rho, lam_rho);

    let mut doms = rs.dominant_weights_of(r);
    doms.sort_by_key(|&w| {
        let (a, b) = rs.root_coordinates(r, w).expect("enumerated weight");
        a + b
    });

    let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
    for w in doms {
        if w == lam {
            entries.insert(w, 1);
            continue;
        }
        let mut sum = Rational64::from(0);
        for &alpha in &rs.positive_roots {
            for k in 1.. {
                let u = Weight::new(w.m + k * alpha.m, w.n + k * alpha.n);
                let du = rs.dominant_representative(u);
                if !rs.contains_weight(r, du) {
                    break;
                }
                let mu = *entries
                    .get(&du)
                    .expect("weights above the current one are already computed");
                sum += Rational64::from(mu as i64) * rs.inner(u, alpha);
            }
        }
        let w_rho = Weight::new(w.m + rs.rho.m, w.n + rs.rho.n);
        let c = c_top - rs.inner(w_rho, w_rho);
        assert!(c > Rational64::from(0), "Freudenthal denominator must be positive");
        let mu = Rational64::from(2) * sum / c;
        assert!(mu.is_integer() && *mu.numer() > 0, "multiplicity must be a positive integer");
        entries.insert(w, *mu.numer() as u64);
    }
    MultTable { label: r, entries }
}

/// Multiplicity of one weight by the Freudenthal route. Non-dominant
/// weights are reduced to their dominant representative first.
pub fn freudenthal_mult(rs: &RootSystem, r: RepLabel, w: Weight) -> u64 {
    freudenthal_table(rs, r).mult(rs.dominant_representative(w))
}

/// Alternating orbit sum `sum_sigma det(sigma) x^{sigma(v)}`.
fn alternating_sum(rs: &RootSystem, v: Weight) -> LaurentPoly2 {
    let mut acc = LaurentPoly2::new();
    for s in &rs.weyl_group {
        let sv = s.apply(v);
        acc = &acc + &LaurentPoly2::term(s.det(), sv.m, sv.n);
    }
    acc
}

/// The character as a Laurent polynomial in x1, x2, via the Weyl quotient
/// of alternating sums. Errors if the denominator does not divide the
/// numerator exactly (which would indicate a bug, not a bad input).
pub fn weyl_character(rs: &RootSystem, r: RepLabel) -> Result<LaurentPoly2> {
    let lam_rho = Weight::new(r.p + rs.rho.m, r.q + rs.rho.n);
    let num = alternating_sum(rs, lam_rho);
    let den = alternating_sum(rs, rs.rho);
    let max_terms = rs.weyl_dim(r) as usize + rs.weyl_group.len();
    num.div_exact(&den, max_terms)
}

/// Coefficient extraction from a character: the multiplicity of the weight
/// `m*lambda1 + n*lambda2` is the coefficient of `x1^m x2^n`.
pub fn mult_from_character(chi: &LaurentPoly2, w: Weight) -> u64 {
    let c = chi.coeff(w.m, w.n);
    u64::try_from(c).expect("character coefficients are small nonnegative integers")
}

/// Computation route for a multiplicity table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Freudenthal,
    Character,
    GenFunc,
    Counting,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Freudenthal,
        Method::Character,
        Method::GenFunc,
        Method::Counting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Freudenthal => "freudenthal",
            Method::Character => "character",
            Method::GenFunc => "genfunc",
            Method::Counting => "counting",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "freudenthal" => Ok(Method::Freudenthal),
            "character" => Ok(Method::Character),
            "genfunc" => Ok(Method::GenFunc),
            "counting" => Ok(Method::Counting),
            other => Err(format!(
                "unknown method `{other}` (expected freudenthal, character, genfunc or counting)"
            )),
        }
    }
}

/// Builds the dominant multiplicity table by the requested route. The
/// generating-function and counting routes are defined only for C2.
pub fn mult_table(rs: &RootSystem, r: RepLabel, method: Method) -> Result<MultTable> {
    match method {
        Method::Freudenthal => Ok(freudenthal_table(rs, r)),
        Method::Character => {
            let chi = weyl_character(rs, r)?;
            let entries = rs
                .dominant_weights_of(r)
                .into_iter()
                .map(|w| (w, mult_from_character(&chi, w)))
                .filter(|&(_, mu)| mu > 0)
                .collect();
            Ok(MultTable { label: r, entries })
        }
        Method::GenFunc => {
            if rs.algebra != Algebra::C2 {
                return Err(Error::MethodUnsupported("genfunc"));
            }
            let entries = rs
                .dominant_weights_of(r)
                .into_iter()
                .map(|w| {
                    let mu = crate::genfunc::c2::mult_from_gf(w.m, w.n, r.p, r.q)?;
                    Ok((w, mu))
                })
                .filter(|res: &Result<(Weight, u64)>| !matches!(res, Ok((_, 0))))
                .collect::<Result<BTreeMap<_, _>>>()?;
            Ok(MultTable { label: r, entries })
        }
        Method::Counting => {
            if rs.algebra != Algebra::C2 {
                return Err(Error::MethodUnsupported("counting"));
            }
            let entries = rs
                .dominant_weights_of(r)
                .into_iter()
                .map(|w| (w, crate::recurrence::counting_rule_mult(r.p, r.q, w.m, w.n)))
                .filter(|&(_, mu)| mu > 0)
                .collect();
            Ok(MultTable { label: r, entries })
        }
    }
}

/// Cache of Freudenthal tables for sweeps over many representations.
pub struct MultOracle {
    rs: RootSystem,
    cache: RefCell<HashMap<(i64, i64), Rc<MultTable>>>,
}

impl MultOracle {
    pub fn new(algebra: Algebra) -> Self {
        Self {
            rs: RootSystem::new(algebra),
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn table(&self, p: i64, q: i64) -> Rc<MultTable> {
        assert!(p >= 0 && q >= 0);
        self.cache
            .borrow_mut()
            .entry((p, q))
            .or_insert_with(|| Rc::new(freudenthal_table(&self.rs, RepLabel::new(p, q))))
            .clone()
    }

    /// Multiplicity as a signed integer, with out-of-range labels reading
    /// as zero so that recurrence residuals can be formed directly.
    pub fn mult(&self, p: i64, q: i64, m: i64, n: i64) -> i64 {
        if p < 0 || q < 0 {
            return 0;
        }
        let w = self.rs.dominant_representative(Weight::new(m, n));
        self.table(p, q).mult(w) as i64
    }
}

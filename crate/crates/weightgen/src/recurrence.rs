//! Recurrence relations among C2 weight multiplicities, the lattice
//! counting rule, and the border-multiplicity formulas.
//!
//! Two recurrences are wired up here, both stated for `mu_{p,q}(m,n)` with
//! all indices nonnegative and missing indices reading as zero:
//!
//! - across representations of a fixed weight:
//!   `mu_{p,q} - mu_{p-2,q} - mu_{p,q-1} + mu_{p-2,q-1} = y_{p,q}(m,n)`
//!   with a 0/1 right-hand side ([`counting_indicator`]);
//! - across weights of a fixed representation:
//!   `mu_{p,q}(m,n) - mu_{p,q}(m+2,n) - mu_{p,q}(m,n+1) + mu_{p,q}(m+2,n+1)`
//!   `= X + Y - Z` with three 0/1 flags ([`rec2_indicator`]).
//!
//! Telescoping the first recurrence turns multiplicity computation into
//! counting lattice points ([`counting_rule_mult`]); specializing the count
//! to the boundary of the weight diagram gives closed border formulas
//! ([`border_mults`]).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lie::{MultOracle, Weight};

/// Cartesian coordinates [x, y] = [m, m + 2n] on the weight diagram; the
/// weights of one representation form a square lattice in these
/// coordinates, contained in the polygon with vertices [0, p+2q],
/// [p, p+2q], [p+q, p+q], [0, 0].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartesianWeight {
    pub x: i64,
    pub y: i64,
}

impl CartesianWeight {
    pub fn from_weight(w: Weight) -> Self {
        Self {
            x: w.m,
            y: w.m + 2 * w.n,
        }
    }
}

/// Containment of the dominant weight (m, n) in R_{p,q}, as plain integer
/// conditions: matching parity of p and m, p + q >= m + n, and
/// p + 2q >= m + 2n.
fn contains(p: i64, q: i64, m: i64, n: i64) -> bool {
    (p - m) % 2 == 0 && p + q >= m + n && p + 2 * q >= m + 2 * n
}

/// The right-hand side of the first recurrence: 1 when R_{p,q} contains
/// the weight (m, n), except that on the p = 0 axis with q and n of
/// opposite parity the indicator vanishes despite containment.
pub fn counting_indicator(p: i64, q: i64, m: i64, n: i64) -> i64 {
    assert!(p >= 0 && q >= 0 && m >= 0 && n >= 0);
    if !contains(p, q, m, n) {
        return 0;
    }
    if p == 0 && m % 2 == 0 && (q - n) % 2 != 0 {
        return 0;
    }
    1
}

/// First-recurrence residual
/// `mu_{p,q}(m,n) - mu_{p-2,q}(m,n) - mu_{p,q-1}(m,n) + mu_{p-2,q-1}(m,n)`
/// computed from the Freudenthal oracle; must equal [`counting_indicator`].
pub fn rec1_residual(oracle: &MultOracle, p: i64, q: i64, m: i64, n: i64) -> i64 {
    assert!(p >= 0 && q >= 0 && m >= 0 && n >= 0);
    oracle.mult(p, q, m, n) - oracle.mult(p - 2, q, m, n) - oracle.mult(p, q - 1, m, n)
        + oracle.mult(p - 2, q - 1, m, n)
}

/// The three-flag decomposition of the second-recurrence residual.
/// X and Y never hold together, so the value X + Y - Z is always
/// +1, 0 or -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rec2Flags {
    pub x: bool,
    pub y: bool,
    pub z: bool,
}

impl Rec2Flags {
    pub fn value(self) -> i64 {
        i64::from(self.x) + i64::from(self.y) - i64::from(self.z)
    }
}

/// Right-hand side of the second recurrence, within the parity class
/// p == m (mod 2) (off the class both sides vanish):
/// X = 1 when m <= p and p <= m + 2n <= p + 2q;
/// Y = 1 when m >= p + 2 and m + n <= p + q;
/// Z = 1 when m + n <= q - 1.
///
/// The parity factor is forced by the closed form of the residual
/// generating function P_{m,n}: every term of its numerator carries t1
/// powers of the parity of m, so residuals at labels of the opposite
/// parity are identically zero.
pub fn rec2_indicator(p: i64, q: i64, m: i64, n: i64) -> Rec2Flags {
    assert!(p >= 0 && q >= 0 && m >= 0 && n >= 0);
    let parity = (p - m) % 2 == 0;
    let flags = Rec2Flags {
        x: parity && m <= p && p <= m + 2 * n && m + 2 * n <= p + 2 * q,
        y: parity && m >= p + 2 && m + n <= p + q,
        z: parity && m + n <= q - 1,
    };
    debug_assert!(!(flags.x && flags.y));
    flags
}

/// Second-recurrence residual
/// `mu_{p,q}(m,n) - mu_{p,q}(m+2,n) - mu_{p,q}(m,n+1) + mu_{p,q}(m+2,n+1)`
/// from the Freudenthal oracle; must equal `rec2_indicator(...).value()`.
pub fn rec2_residual(oracle: &MultOracle, p: i64, q: i64, m: i64, n: i64) -> i64 {
    assert!(p >= 0 && q >= 0 && m >= 0 && n >= 0);
    oracle.mult(p, q, m, n) - oracle.mult(p, q, m + 2, n) - oracle.mult(p, q, m, n + 1)
        + oracle.mult(p, q, m + 2, n + 1)
}

/// Geometric classification of the weight (m, n) of R_{p,q} into the
/// domains where the second-recurrence residual is +1, 0 or -1, carried
/// out in Cartesian coordinates.
///
/// Writing P_X, P_Y, P_Z for the regions where the respective flag holds,
/// the overlap of (P_X u P_Y) with P_Z is empty when 2q - 2 < p, the
/// (possibly degenerate) triangle with vertices [0, 2q-2], [0, p],
/// [2q-2-p, p] when p <= 2q - 2 <= 2p, and the quadrilateral with vertices
/// [0, p], [0, 2q-2], [q-1, q-1], [p, p] when 2q - 2 > 2p. Points of the
/// overlap land in the 0-domain; the rest of P_X u P_Y is the +1 domain
/// and the rest of P_Z the -1 domain.
pub fn rec2_domain(p: i64, q: i64, m: i64, n: i64) -> i64 {
    assert!(p >= 0 && q >= 0 && m >= 0 && n >= 0);
    let CartesianWeight { x, y } = CartesianWeight::from_weight(Weight::new(m, n));
    let in_px = x <= p && p <= y && y <= p + 2 * q;
    let in_py = x >= p + 2 && x + y <= 2 * (p + q);
    let in_pz = x + y <= 2 * q - 2;
    let cut = 2 * q - 2;
    let excluded = if cut < p {
        false
    } else if cut <= 2 * p {
        // triangle [0, 2q-2], [0, p], [2q-2-p, p], degenerate when cut == p
        x >= 0 && y >= p && x + y <= cut
    } else {
        // quadrilateral [0, p], [0, 2q-2], [q-1, q-1], [p, p]
        x >= 0 && y >= p && y >= x && x + y <= cut
    };
    if (in_px || in_py) && !excluded {
        1
    } else if in_pz && !excluded {
        -1
    } else {
        0
    }
}

/// Multiplicity by lattice counting:
/// `mu_{p,q}(m,n) = sum_{i,j >= 0, p-2i >= 0, q-j >= 0} y_{p-2i, q-j}(m,n)`,
/// the telescoped form of the first recurrence.
pub fn counting_rule_mult(p: i64, q: i64, m: i64, n: i64) -> u64 {
    assert!(p >= 0 && q >= 0 && m >= 0 && n >= 0);
    let mut count = 0u64;
    let mut pp = p;
    while pp >= 0 {
        for qq in 0..=q {
            count += counting_indicator(pp, qq, m, n) as u64;
        }
        pp -= 2;
    }
    count
}

/// Border multiplicities of R_{p,q} for even p and q with q <= p/2.
#[derive(Clone, Debug)]
pub struct BorderMults {
    /// Merged map of all absolute border values, checked for consistency
    /// where two formulas reach the same weight.
    pub entries: BTreeMap<Weight, u64>,
    /// The five absolute formulas individually, for overlap inspection.
    pub by_formula: [Vec<(Weight, u64)>; 5],
    /// Difference constraints on the n-axis: pairs (s, d) asserting
    /// `mu(0, s) - mu(0, s+1) = d` for 0 <= s <= q - 1.
    pub axis_differences: Vec<(i64, i64)>,
}

/// Closed formulas for the multiplicities on the borders of the weight
/// diagram, valid for even p, even q, q <= p/2:
///
/// 1. `mu(p+q-2s, 0) = (s+1)^2`                      for 0 <= s <= q/2
/// 2. `mu(p-2s, 0)   = (q/2+1)^2 + s(q+1)`           for 0 <= s <= (p-q)/2
/// 3. `mu(2s, 0)     = mu(0,0) - s^2`                for 0 <= s <= q/2
/// 4. `mu(0, p/2+q-s) = (s+1)(s+2)/2`                for 0 <= s <= q
/// 5. `mu(0, p/2-s)  = (q+1)(q+2)/2 + s(q+1)`        for 0 <= s <= p/2-q
/// 6. `mu(0, s) - mu(0, s+1) = s + 1 - theta(s+1)`   for 0 <= s <= q-1,
///    where theta(r) is 1 for even r and 0 for odd r.
///
/// Formula 5 is the linear continuation of formula 4 past their junction
/// at (0, p/2): the triangular growth (s+1)(s+2)/2 ends there with value
/// (q+1)(q+2)/2 and continues with constant slope q+1.
pub fn border_mults(p: i64, q: i64) -> Result<BorderMults> {
    if p < 0 || q < 0 || p % 2 != 0 || q % 2 != 0 || q > p / 2 {
        return Err(Error::BorderDomain(p, q));
    }
    let mu00 = ((p + 1) * (q + 1) + 1) / 2; // zero-weight closed form, p and q even
    let mut by_formula: [Vec<(Weight, u64)>; 5] = Default::default();
    for s in 0..=(q / 2) {
        by_formula[0].push((Weight::new(p + q - 2 * s, 0), ((s + 1) * (s + 1)) as u64));
    }
    for s in 0..=((p - q) / 2) {
        let v = (q / 2 + 1) * (q / 2 + 1) + s * (q + 1);
        by_formula[1].push((Weight::new(p - 2 * s, 0), v as u64));
    }
    for s in 0..=(q / 2) {
        by_formula[2].push((Weight::new(2 * s, 0), (mu00 - s * s) as u64));
    }
    for s in 0..=q {
        by_formula[3].push((Weight::new(0, p / 2 + q - s), ((s + 1) * (s + 2) / 2) as u64));
    }
    for s in 0..=(p / 2 - q) {
        let v = (q + 1) * (q + 2) / 2 + s * (q + 1);
        by_formula[4].push((Weight::new(0, p / 2 - s), v as u64));
    }
    let mut entries: BTreeMap<Weight, u64> = BTreeMap::new();
    for group in &by_formula {
        for &(w, v) in group {
            if let Some(&prev) = entries.get(&w) {
                if prev != v {
                    return Err(Error::BorderOverlap(w.m, w.n, prev, v));
                }
            }
            entries.insert(w, v);
        }
    }
    let theta = |r: i64| i64::from(r % 2 == 0);
    let axis_differences = (0..=(q - 1))
        .map(|s| (s, s + 1 - theta(s + 1)))
        .collect();
    Ok(BorderMults {
        entries,
        by_formula,
        axis_differences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Algebra;

    #[test]
    fn counting_indicator_examples() {
        assert_eq!(counting_indicator(10, 5, 6, 4), 1);
        // contained, but p = 0 with q and n of opposite parity
        assert_eq!(counting_indicator(0, 2, 0, 1), 0);
        // parity class mismatch
        assert_eq!(counting_indicator(1, 0, 0, 0), 0);
    }

    #[test]
    fn rec1_residual_examples() {
        let oracle = MultOracle::new(Algebra::C2);
        assert_eq!(rec1_residual(&oracle, 0, 0, 0, 0), 1);
        assert_eq!(rec1_residual(&oracle, 2, 0, 0, 0), 1);
        assert_eq!(rec1_residual(&oracle, 0, 2, 0, 1), 0);
    }

    #[test]
    fn rec2_indicator_examples() {
        let f = rec2_indicator(0, 0, 0, 0);
        assert_eq!((f.x, f.y, f.z, f.value()), (true, false, false, 1));
        let f = rec2_indicator(0, 2, 0, 0);
        assert_eq!((f.x, f.y, f.z, f.value()), (true, false, true, 0));
        let f = rec2_indicator(2, 2, 0, 0);
        assert_eq!((f.x, f.y, f.z, f.value()), (false, false, true, -1));
    }

    #[test]
    fn rec2_indicator_vanishes_off_parity() {
        // all four residual terms are zero when p and m differ in parity,
        // so the flags must vanish too
        let oracle = MultOracle::new(Algebra::C2);
        assert_eq!(rec2_indicator(0, 2, 1, 0).value(), 0);
        assert_eq!(rec2_residual(&oracle, 0, 2, 1, 0), 0);
        assert_eq!(rec2_indicator(1, 1, 0, 1).value(), 0);
        assert_eq!(rec2_residual(&oracle, 1, 1, 0, 1), 0);
    }

    #[test]
    fn rec2_residual_examples() {
        let oracle = MultOracle::new(Algebra::C2);
        assert_eq!(rec2_residual(&oracle, 0, 0, 0, 0), 1);
        assert_eq!(rec2_residual(&oracle, 2, 2, 0, 0), -1);
        assert_eq!(rec2_residual(&oracle, 10, 5, 10, 5), 1);
    }

    #[test]
    fn counting_rule_examples() {
        assert_eq!(counting_rule_mult(2, 0, 0, 0), 2);
        assert_eq!(counting_rule_mult(2, 2, 0, 0), 5);
        assert_eq!(counting_rule_mult(10, 5, 0, 0), 33);
    }

    #[test]
    fn border_formula_examples() {
        let b = border_mults(4, 2).unwrap();
        assert_eq!(b.entries[&Weight::new(6, 0)], 1);
        assert_eq!(b.entries[&Weight::new(4, 0)], 4);
        // reachable by formulas 2 and 3, which must agree: 4 + 3 = 8 - 1
        assert_eq!(b.entries[&Weight::new(2, 0)], 7);
        assert_eq!(b.entries[&Weight::new(0, 4)], 1);
        assert_eq!(b.axis_differences, vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn border_domain_is_enforced() {
        assert!(matches!(border_mults(3, 0), Err(Error::BorderDomain(3, 0))));
        assert!(matches!(border_mults(4, 3), Err(Error::BorderDomain(4, 3))));
        assert!(matches!(border_mults(4, 4), Err(Error::BorderDomain(4, 4))));
    }

    #[test]
    fn domain_classification_cases() {
        // 2q - 2 < p: everything with y >= p is in the +1 domain
        assert_eq!(rec2_domain(10, 5, 6, 4), 1); // y = 14 >= 10
        assert_eq!(rec2_domain(10, 5, 4, 1), 0); // y = 6, m + n = 5 > 4
        assert_eq!(rec2_domain(10, 5, 2, 1), -1); // m + n = 3 <= 4
        // p <= 2q - 2 <= 2p: triangle overlap near the y axis moves
        // some weights with y >= p into the 0 domain
        assert_eq!(rec2_domain(10, 9, 0, 5), 0); // [0, 10] in the triangle
        assert_eq!(rec2_domain(10, 9, 8, 1), 1); // [8, 10] outside it
        // 2q - 2 > 2p: quadrilateral overlap
        assert_eq!(rec2_domain(5, 10, 1, 2), 0); // [1, 5] in the quadrilateral
        assert_eq!(rec2_domain(5, 10, 9, 1), 1); // [9, 11] via the Y flag
        assert_eq!(rec2_domain(5, 10, 1, 1), -1); // [1, 3] below it
    }

    #[test]
    fn domain_matches_indicator_on_small_reps() {
        let oracle = MultOracle::new(Algebra::C2);
        for p in 0..=8 {
            for q in 0..=8 {
                let rs = oracle.root_system();
                let r = crate::lie::RepLabel::new(p, q);
                for w in rs.dominant_weights_of(r) {
                    assert_eq!(
                        rec2_domain(p, q, w.m, w.n),
                        rec2_indicator(p, q, w.m, w.n).value(),
                        "p={p} q={q} m={} n={}",
                        w.m,
                        w.n
                    );
                }
            }
        }
    }
}

//! Rank-2 root-system data and the classical multiplicity oracles.
//!
//! Weights are written in the fundamental-weight basis: `(m, n)` stands for
//! `m*lambda1 + n*lambda2`. A representation is labelled by its highest
//! weight `(p, q)` with `p, q >= 0`. The two supported algebras are C2
//! (Weyl group of order 8, fundamental weights of squared length 1 and 2)
//! and A2 (Weyl group of order 6).

mod oracle;

use std::collections::BTreeSet;

use num_rational::Rational64;

pub use oracle::{
    freudenthal_mult, freudenthal_table, mult_from_character, mult_table, weyl_character, Method,
    MultOracle, MultTable,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    C2,
    A2,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::C2 => "C2",
            Algebra::A2 => "A2",
        }
    }
}

impl std::str::FromStr for Algebra {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "C2" => Ok(Algebra::C2),
            "A2" => Ok(Algebra::A2),
            other => Err(format!("unknown algebra `{other}` (expected C2 or A2)")),
        }
    }
}

/// A weight `m*lambda1 + n*lambda2`; coordinates may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub m: i64,
    pub n: i64,
}

impl Weight {
    pub const fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    pub fn is_dominant(self) -> bool {
        self.m >= 0 && self.n >= 0
    }

    fn add(self, other: Weight) -> Weight {
        Weight::new(self.m + other.m, self.n + other.n)
    }

    fn scaled(self, k: i64) -> Weight {
        Weight::new(self.m * k, self.n * k)
    }
}

/// Highest-weight label of an irreducible representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepLabel {
    pub p: i64,
    pub q: i64,
}

impl RepLabel {
    pub fn new(p: i64, q: i64) -> Self {
        assert!(p >= 0 && q >= 0, "representation label must be dominant");
        Self { p, q }
    }

    pub fn highest_weight(self) -> Weight {
        Weight::new(self.p, self.q)
    }
}

/// A Weyl group element as an integer matrix acting on fundamental-weight
/// coordinates: `(m, n) -> (a*m + b*n, c*m + d*n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeylElement {
    pub mat: [[i64; 2]; 2],
}

impl WeylElement {
    pub fn apply(&self, w: Weight) -> Weight {
        Weight::new(
            self.mat[0][0] * w.m + self.mat[0][1] * w.n,
            self.mat[1][0] * w.m + self.mat[1][1] * w.n,
        )
    }

    pub fn det(&self) -> i64 {
        self.mat[0][0] * self.mat[1][1] - self.mat[0][1] * self.mat[1][0]
    }

    fn compose(&self, other: &WeylElement) -> WeylElement {
        let a = &self.mat;
        let b = &other.mat;
        WeylElement {
            mat: [
                [
                    a[0][0] * b[0][0] + a[0][1] * b[1][0],
                    a[0][0] * b[0][1] + a[0][1] * b[1][1],
                ],
                [
                    a[1][0] * b[0][0] + a[1][1] * b[1][0],
                    a[1][0] * b[0][1] + a[1][1] * b[1][1],
                ],
            ],
        }
    }
}

pub struct RootSystem {
    pub algebra: Algebra,
    pub simple_roots: [Weight; 2],
    pub positive_roots: Vec<Weight>,
    pub rho: Weight,
    /// Exact Gram matrix of the fundamental weights.
    pub gram: [[Rational64; 2]; 2],
    pub weyl_group: Vec<WeylElement>,
}

impl RootSystem {
    pub fn new(algebra: Algebra) -> Self {
        let (simple_roots, positive_roots, gram, expected_order) = match algebra {
            Algebra::C2 => (
                [Weight::new(2, -1), Weight::new(-2, 2)],
                vec![
                    Weight::new(2, -1),
                    Weight::new(-2, 2),
                    Weight::new(0, 1),
                    Weight::new(2, 0),
                ],
                // lambda1 = e1, lambda2 = e1 + e2
                [
                    [Rational64::from(1), Rational64::from(1)],
                    [Rational64::from(1), Rational64::from(2)],
                ],
                8,
            ),
            Algebra::A2 => (
                [Weight::new(2, -1), Weight::new(-1, 2)],
                vec![Weight::new(2, -1), Weight::new(-1, 2), Weight::new(1, 1)],
                // normalization with squared root length 2
                [
                    [Rational64::new(2, 3), Rational64::new(1, 3)],
                    [Rational64::new(1, 3), Rational64::new(2, 3)],
                ],
                6,
            ),
        };
        let weyl_group = generate_weyl_group(algebra);
        assert_eq!(weyl_group.len(), expected_order);
        let rs = Self {
            algebra,
            simple_roots,
            positive_roots,
            rho: Weight::new(1, 1),
            gram,
            weyl_group,
        };
        debug_assert!(rs.weyl_permutes_roots());
        rs
    }

    pub fn c2() -> Self {
        Self::new(Algebra::C2)
    }

    pub fn a2() -> Self {
        Self::new(Algebra::A2)
    }

    fn weyl_permutes_roots(&self) -> bool {
        let all: BTreeSet<Weight> = self
            .positive_roots
            .iter()
            .flat_map(|&r| [r, r.scaled(-1)])
            .collect();
        self.weyl_group.iter().all(|s| {
            all.iter().all(|&r| all.contains(&s.apply(r)))
        })
    }

    /// Exact inner product of two weights via the Gram matrix.
    pub fn inner(&self, a: Weight, b: Weight) -> Rational64 {
        let av = [a.m, a.n];
        let bv = [b.m, b.n];
        let mut acc = Rational64::from(0);
        for i in 0..2 {
            for j in 0..2 {
                acc += self.gram[i][j] * Rational64::from(av[i] * bv[j]);
            }
        }
        acc
    }

    /// Full Weyl orbit of a weight.
    pub fn weyl_orbit(&self, w: Weight) -> BTreeSet<Weight> {
        self.weyl_group.iter().map(|s| s.apply(w)).collect()
    }

    /// The unique dominant weight in the orbit of `w`, reached by applying
    /// simple reflections while some coordinate is negative.
    pub fn dominant_representative(&self, w: Weight) -> Weight {
        let [alpha1, alpha2] = self.simple_roots;
        let mut cur = w;
        for _ in 0..1000 {
            if cur.m < 0 {
                cur = cur.add(alpha1.scaled(-cur.m)); // s1: m -> -m
            } else if cur.n < 0 {
                cur = cur.add(alpha2.scaled(-cur.n)); // s2: n -> -n
            } else {
                return cur;
            }
        }
        unreachable!("dominant reduction did not terminate for {w:?}");
    }

    /// Writes `highest_weight - dominant(w)` over the simple roots, returning
    /// the coefficient pair when it is integral.
    pub fn root_coordinates(&self, r: RepLabel, dominant_w: Weight) -> Option<(i64, i64)> {
        let dm = r.p - dominant_w.m;
        let dn = r.q - dominant_w.n;
        let [a1, a2] = self.simple_roots;
        let det = a1.m * a2.n - a2.m * a1.n;
        let a_num = a2.n * dm - a2.m * dn;
        let b_num = -a1.n * dm + a1.m * dn;
        if a_num % det != 0 || b_num % det != 0 {
            return None;
        }
        Some((a_num / det, b_num / det))
    }

    /// Whether the weight occurs in the representation, i.e. whether
    /// `highest_weight - dominant(w)` is a nonnegative integer combination
    /// of the simple roots. For C2 this reduces to the three conditions
    /// `p == m (mod 2)`, `p + q >= m + n`, `p + 2q >= m + 2n` on the
    /// dominant representative.
    pub fn contains_weight(&self, r: RepLabel, w: Weight) -> bool {
        let dw = self.dominant_representative(w);
        matches!(self.root_coordinates(r, dw), Some((a, b)) if a >= 0 && b >= 0)
    }

    /// Dimension of the irreducible representation, by the Weyl product
    /// formula `prod_{alpha > 0} <lambda + rho, alpha> / <rho, alpha>`.
    /// For C2 this equals `(p+1)(q+1)(p+q+2)(p+2q+3)/6`.
    pub fn weyl_dim(&self, r: RepLabel) -> i64 {
        let lam_rho = r.highest_weight().add(self.rho);
        let mut acc = Rational64::from(1);
        for &alpha in &self.positive_roots {
            acc *= self.inner(lam_rho, alpha) / self.inner(self.rho, alpha);
        }
        assert!(acc.is_integer() && *acc.numer() > 0);
        *acc.numer()
    }

    /// All dominant weights contained in the representation, i.e. the keys
    /// of its multiplicity table.
    pub fn dominant_weights_of(&self, r: RepLabel) -> Vec<Weight> {
        // every contained dominant weight satisfies m + n <= p + q
        let bound = r.p + r.q;
        let mut out = Vec::new();
        for m in 0..=bound {
            for n in 0..=(bound - m) {
                let w = Weight::new(m, n);
                if matches!(self.root_coordinates(r, w), Some((a, b)) if a >= 0 && b >= 0) {
                    out.push(w);
                }
            }
        }
        out
    }
}

fn generate_weyl_group(algebra: Algebra) -> Vec<WeylElement> {
    // simple reflections acting on fundamental-weight coordinates
    let s1 = WeylElement {
        mat: [[-1, 0], [1, 1]],
    };
    let s2 = match algebra {
        Algebra::C2 => WeylElement {
            mat: [[1, 2], [0, -1]],
        },
        Algebra::A2 => WeylElement {
            mat: [[1, 1], [0, -1]],
        },
    };
    let identity = WeylElement {
        mat: [[1, 0], [0, 1]],
    };
    let mut group: BTreeSet<WeylElement> = BTreeSet::new();
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        if group.insert(g) {
            frontier.push(s1.compose(&g));
            frontier.push(s2.compose(&g));
        }
    }
    group.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_group_orders() {
        assert_eq!(RootSystem::c2().weyl_group.len(), 8);
        assert_eq!(RootSystem::a2().weyl_group.len(), 6);
    }

    #[test]
    fn orbits_of_fundamental_weights() {
        let rs = RootSystem::c2();
        assert_eq!(rs.weyl_orbit(Weight::new(0, 0)).len(), 1);
        assert_eq!(rs.weyl_orbit(Weight::new(1, 0)).len(), 4);
        assert_eq!(rs.weyl_orbit(Weight::new(0, 1)).len(), 4);
    }

    #[test]
    fn dominant_representatives() {
        let rs = RootSystem::c2();
        assert_eq!(rs.dominant_representative(Weight::new(-1, 1)), Weight::new(1, 0));
        assert_eq!(rs.dominant_representative(Weight::new(3, 2)), Weight::new(3, 2));
        assert_eq!(rs.dominant_representative(Weight::new(0, -1)), Weight::new(0, 1));
    }

    #[test]
    fn orbit_contains_exactly_one_dominant_weight() {
        for rs in [RootSystem::c2(), RootSystem::a2()] {
            for m in -4..=4 {
                for n in -4..=4 {
                    let orbit = rs.weyl_orbit(Weight::new(m, n));
                    let dominant: Vec<_> =
                        orbit.iter().filter(|w| w.is_dominant()).collect();
                    assert_eq!(dominant.len(), 1, "orbit of ({m},{n}) in {:?}", rs.algebra);
                    assert_eq!(
                        *dominant[0],
                        rs.dominant_representative(Weight::new(m, n))
                    );
                }
            }
        }
    }

    #[test]
    fn c2_containment_matches_closed_conditions() {
        let rs = RootSystem::c2();
        for p in 0..=8 {
            for q in 0..=8 {
                let r = RepLabel::new(p, q);
                for m in 0..=10 {
                    for n in 0..=10 {
                        let expect =
                            (p - m) % 2 == 0 && p + q >= m + n && p + 2 * q >= m + 2 * n;
                        assert_eq!(rs.contains_weight(r, Weight::new(m, n)), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn containment_examples() {
        let rs = RootSystem::c2();
        assert!(rs.contains_weight(RepLabel::new(10, 5), Weight::new(6, 4)));
        assert!(rs.contains_weight(RepLabel::new(0, 1), Weight::new(0, 0)));
        assert!(!rs.contains_weight(RepLabel::new(1, 0), Weight::new(0, 0)));
    }

    #[test]
    fn weyl_dimensions() {
        let rs = RootSystem::c2();
        assert_eq!(rs.weyl_dim(RepLabel::new(1, 0)), 4);
        assert_eq!(rs.weyl_dim(RepLabel::new(0, 1)), 5);
        assert_eq!(rs.weyl_dim(RepLabel::new(2, 0)), 10);
        for p in 0..=6 {
            for q in 0..=6 {
                assert_eq!(
                    rs.weyl_dim(RepLabel::new(p, q)),
                    (p + 1) * (q + 1) * (p + q + 2) * (p + 2 * q + 3) / 6
                );
            }
        }
        let a2 = RootSystem::a2();
        assert_eq!(a2.weyl_dim(RepLabel::new(1, 0)), 3);
        assert_eq!(a2.weyl_dim(RepLabel::new(1, 1)), 8);
        assert_eq!(a2.weyl_dim(RepLabel::new(3, 0)), 10);
    }

    #[test]
    fn gram_matrix_magnitudes() {
        let rs = RootSystem::c2();
        assert_eq!(rs.inner(Weight::new(1, 0), Weight::new(1, 0)), Rational64::from(1));
        assert_eq!(rs.inner(Weight::new(0, 1), Weight::new(0, 1)), Rational64::from(2));
        // simple roots: short of squared length 2, long of squared length 4
        assert_eq!(
            rs.inner(rs.simple_roots[0], rs.simple_roots[0]),
            Rational64::from(2)
        );
        assert_eq!(
            rs.inner(rs.simple_roots[1], rs.simple_roots[1]),
            Rational64::from(4)
        );
    }
}

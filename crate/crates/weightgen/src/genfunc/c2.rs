//! C2 generating functions: characters, zero-weight closed form, the master
//! function, and the closed forms of every A_{m,n}.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::exact::{LaurentPoly2, Poly2, RationalGF, TruncatedSeries2};
use crate::lie::RepLabel;

/// Polynomial in the fundamental-character variables z1, z2.
type ZPoly = Poly2;

fn tp(terms: &[(i64, u32, u32)]) -> Poly2 {
    Poly2::from_i64_terms(terms)
}

fn mono(d1: i64, d2: i64) -> Poly2 {
    assert!(d1 >= 0 && d2 >= 0);
    Poly2::monomial(d1 as u32, d2 as u32)
}

/// The fundamental characters of C2:
/// z1 = x1 + 1/x1 + x1/x2 + x2/x1 (the 4-dimensional representation) and
/// z2 = 1 + x2 + 1/x2 + x1^2/x2 + x2/x1^2 (the 5-dimensional one).
pub fn fundamental_characters() -> (LaurentPoly2, LaurentPoly2) {
    let z1 = LaurentPoly2::from_terms(
        [(1, 0), (-1, 0), (1, -1), (-1, 1)]
            .map(|e| (e, BigInt::one())),
    );
    let z2 = LaurentPoly2::from_terms(
        [(0, 0), (0, 1), (0, -1), (2, -1), (-2, 1)]
            .map(|e| (e, BigInt::one())),
    );
    (z1, z2)
}

/// The generating function of the C2 characters,
/// `G(t1,t2) = sum_{p,q} chi_{p,q} t1^p t2^q`, in two equivalent closed
/// forms: one with coefficients that are polynomials in z1, z2, and one
/// with Laurent-polynomial coefficients in x1, x2. Substituting the
/// fundamental characters into the z-form reproduces the x-form exactly
/// after clearing denominators.
pub struct CharacterGf {
    pub numerator_z: Poly2<ZPoly>,
    pub denominator_z: Poly2<ZPoly>,
    pub numerator_x: Poly2<LaurentPoly2>,
    pub denominator_x: Poly2<LaurentPoly2>,
}

pub fn character_gf() -> CharacterGf {
    let z1: ZPoly = Poly2::monomial(1, 0);
    let z2: ZPoly = Poly2::monomial(0, 1);

    // numerator 1 + t2 - z1 t1 t2 + t1^2 t2 + t1^2 t2^2
    let numerator_z = Poly2::<ZPoly>::from_terms([
        ((0, 0), ZPoly::one()),
        ((0, 1), ZPoly::one()),
        ((1, 1), -z1.clone()),
        ((2, 1), ZPoly::one()),
        ((2, 2), ZPoly::one()),
    ]);
    // (1 - (t1 + t1^3) z1 + t1^2 (z2 + 1) + t1^4)
    let f1 = Poly2::<ZPoly>::from_terms([
        ((0, 0), ZPoly::one()),
        ((1, 0), -z1.clone()),
        ((2, 0), &z2 + &ZPoly::one()),
        ((3, 0), -z1.clone()),
        ((4, 0), ZPoly::one()),
    ]);
    // (1 - (t2 + t2^3)(z2 - 1) + t2^2 (z1^2 - 2 z2) + t2^4)
    let z2_minus_1 = &z2 - &ZPoly::one();
    let z1sq_minus_2z2 = &(&z1 * &z1) - &Poly2::term(BigInt::from(2), 0, 1);
    let f2 = Poly2::<ZPoly>::from_terms([
        ((0, 0), ZPoly::one()),
        ((0, 1), -z2_minus_1.clone()),
        ((0, 2), z1sq_minus_2z2),
        ((0, 3), -z2_minus_1),
        ((0, 4), ZPoly::one()),
    ]);
    let denominator_z = &f1 * &f2;

    let x = LaurentPoly2::monomial;
    // x1^3 x2^2 ((1 + t2) x1 x2 + t1^2 t2 (1 + t2) x1 x2 - t1 t2 (1 + x2)(x1^2 + x2))
    let x4x3 = x(4, 3);
    let cross = &(&x(3, 2) + &x(3, 3)) * &(&x(2, 0) + &x(0, 1)); // x1^3 x2^2 (1 + x2)(x1^2 + x2)
    let numerator_x = Poly2::<LaurentPoly2>::from_terms([
        ((0, 0), x4x3.clone()),
        ((0, 1), x4x3.clone()),
        ((2, 1), x4x3.clone()),
        ((2, 2), x4x3),
        ((1, 1), -&cross),
    ]);
    let factors: [[((u32, u32), LaurentPoly2); 2]; 8] = [
        [((0, 0), x(1, 0)), ((1, 0), -&LaurentPoly2::one())], // x1 - t1
        [((1, 0), x(1, 0)), ((0, 0), -&LaurentPoly2::one())], // t1 x1 - 1
        [((1, 0), x(1, 0)), ((0, 0), -&x(0, 1))],             // t1 x1 - x2
        [((0, 1), x(2, 0)), ((0, 0), -&x(0, 1))],             // t2 x1^2 - x2
        [((0, 0), x(0, 1)), ((0, 1), -&LaurentPoly2::one())], // x2 - t2
        [((0, 0), x(1, 0)), ((1, 0), -&x(0, 1))],             // x1 - t1 x2
        [((0, 0), x(2, 0)), ((0, 1), -&x(0, 1))],             // x1^2 - t2 x2
        [((0, 1), x(0, 1)), ((0, 0), -&LaurentPoly2::one())], // t2 x2 - 1
    ];
    let mut denominator_x = Poly2::<LaurentPoly2>::one();
    for f in factors {
        denominator_x = &denominator_x * &Poly2::from_terms(f);
    }

    CharacterGf {
        numerator_z,
        denominator_z,
        numerator_x,
        denominator_x,
    }
}

impl CharacterGf {
    /// The z-form with the fundamental characters substituted for z1, z2.
    pub fn z_form_substituted(&self) -> (Poly2<LaurentPoly2>, Poly2<LaurentPoly2>) {
        let (z1, z2) = fundamental_characters();
        let eval = |zp: &ZPoly| -> LaurentPoly2 {
            let mut acc = LaurentPoly2::new();
            for (&(a, b), c) in zp.iter() {
                let mut term = LaurentPoly2::term(c.clone(), 0, 0);
                for _ in 0..a {
                    term = &term * &z1;
                }
                for _ in 0..b {
                    term = &term * &z2;
                }
                acc = &acc + &term;
            }
            acc
        };
        (
            self.numerator_z.map_coeffs(&eval),
            self.denominator_z.map_coeffs(&eval),
        )
    }

    /// Exact cross-multiplied identity between the substituted z-form and
    /// the x-form.
    pub fn forms_agree(&self) -> bool {
        let (nz, dz) = self.z_form_substituted();
        &nz * &self.denominator_x == &self.numerator_x * &dz
    }

    /// Expands G as a power series in t1, t2 with Laurent-polynomial
    /// coefficients; the coefficient of t1^p t2^q is the character
    /// chi_{p,q}. Uses the x-form, normalized so the denominator has
    /// constant term 1.
    pub fn expand_characters(&self, order: u32) -> Result<BTreeMap<RepLabel, LaurentPoly2>> {
        let unit = self.denominator_x.constant_term();
        debug_assert_eq!(unit.num_terms(), 1);
        let inv = invert_monomial(&unit);
        let num = self.numerator_x.map_coeffs(|c| c * &inv);
        let den = self.denominator_x.map_coeffs(|c| c * &inv);
        let series = TruncatedSeries2::<LaurentPoly2>::expand_quotient(&num, &den, order)?;
        let mut out = BTreeMap::new();
        for p in 0..=order {
            for q in 0..=(order - p) {
                out.insert(
                    RepLabel::new(p as i64, q as i64),
                    series.coeff(p, q),
                );
            }
        }
        Ok(out)
    }
}

fn invert_monomial(m: &LaurentPoly2) -> LaurentPoly2 {
    let (&(e1, e2), c) = m.iter().next().expect("nonzero monomial");
    assert!(c == &BigInt::one() || c == &BigInt::from(-1));
    LaurentPoly2::term(c.clone(), -e1, -e2)
}

/// Common denominator of the simplified generating functions:
/// `(1 - t1^2)^2 (1 - t2^2)(1 - t2)`.
pub fn standard_denominator() -> Poly2 {
    let om_t1sq = tp(&[(1, 0, 0), (-1, 2, 0)]);
    let om_t2sq = tp(&[(1, 0, 0), (-1, 0, 2)]);
    let om_t2 = tp(&[(1, 0, 0), (-1, 0, 1)]);
    &(&om_t1sq.pow(2) * &om_t2sq) * &om_t2
}

/// The zero-weight generating function
/// `A_{0,0} = (1 + t1^2 t2) / ((1 - t1^2)^2 (1 - t2)(1 - t2^2))`.
pub fn zero_weight_gf() -> RationalGF {
    RationalGF::new(tp(&[(1, 0, 0), (1, 2, 1)]), standard_denominator())
}

/// Closed form for zero-weight multiplicities:
/// `mu_{p,q}(0,0) = (1/2) eps_p [eps_q + (p+1)(q+1)]` with `eps_k = 1` for
/// even k and 0 for odd k.
pub fn zero_weight_mult(p: i64, q: i64) -> u64 {
    assert!(p >= 0 && q >= 0);
    if p % 2 != 0 {
        return 0;
    }
    let eps_q = i64::from(q % 2 == 0);
    let twice = eps_q + (p + 1) * (q + 1);
    debug_assert!(twice % 2 == 0);
    (twice / 2) as u64
}

/// The partial-fraction resolution of the zero-weight function,
/// `(1/2) [ 1/((1-t1^2)(1-t2^2)) + (1+t1^2)/((1-t1^2)^2 (1-t2)^2) ]`,
/// kept as a single rational function with denominator scaled by 2.
pub fn zero_weight_gf_partial_fractions() -> RationalGF {
    let om_t1sq = tp(&[(1, 0, 0), (-1, 2, 0)]);
    let om_t2sq = tp(&[(1, 0, 0), (-1, 0, 2)]);
    let om_t2 = tp(&[(1, 0, 0), (-1, 0, 1)]);
    let a = RationalGF::new(Poly2::one(), &om_t1sq * &om_t2sq);
    let b = RationalGF::new(
        tp(&[(1, 0, 0), (1, 2, 0)]),
        &om_t1sq.pow(2) * &om_t2.pow(2),
    );
    let sum = a.add(&b);
    RationalGF::new(sum.numerator, &sum.denominator * &tp(&[(2, 0, 0)]))
}

/// The master generating function
/// `H(t1,t2;y1,y2) = sum_{m,n,p,q} mu_{p,q}(m,n) y1^m y2^n t1^p t2^q`
/// in its closed form: a six-term numerator in y1, y2 over
/// `(1-t1^2)^2 (1-t2^2)(1-t2) (1-t1 y1)(1-t2^2 y1^2)(1-t1^2 y2)(1-t2 y2)`.
pub struct MasterGf {
    pub a: Poly2,
    pub b1: Poly2,
    pub b2: Poly2,
    pub c12: Poly2,
    pub d: Poly2,
    pub e: Poly2,
}

pub fn master_gf() -> MasterGf {
    MasterGf {
        a: tp(&[(1, 0, 0), (1, 2, 1)]),
        b1: tp(&[(1, 1, 1), (-1, 3, 1)]),
        b2: tp(&[(-1, 4, 1), (-1, 2, 2)]),
        c12: tp(&[(1, 5, 1), (-1, 3, 1)]),
        d: tp(&[(-1, 2, 2), (-1, 2, 3)]),
        e: tp(&[(1, 4, 2), (1, 4, 3), (1, 2, 4), (-1, 2, 2)]),
    }
}

impl MasterGf {
    /// Coefficient of y1^m y2^n as a rational function of t1, t2: the
    /// generating function A_{m,n}. The four (1 - _*y) denominator factors
    /// are traded for geometric series in y1 and y2, so the coefficient is
    /// a finite sum of the six numerator blocks against the partial sums
    /// below, all over the standard denominator.
    pub fn coeff_gf(&self, m: i64, n: i64) -> RationalGF {
        assert!(m >= 0 && n >= 0);
        // [y1^k] 1/((1 - t1 y1)(1 - t2^2 y1^2)) = sum_{i + 2j = k} t1^i t2^{2j}
        let gy1 = |k: i64| -> Poly2 {
            let mut acc = Poly2::zero();
            if k < 0 {
                return acc;
            }
            for j in 0..=(k / 2) {
                acc = &acc + &mono(k - 2 * j, 2 * j);
            }
            acc
        };
        // [y2^k] 1/((1 - t1^2 y2)(1 - t2 y2)) = sum_{i + j = k} t1^{2i} t2^j
        let gy2 = |k: i64| -> Poly2 {
            let mut acc = Poly2::zero();
            if k < 0 {
                return acc;
            }
            for i in 0..=k {
                acc = &acc + &mono(2 * i, k - i);
            }
            acc
        };
        let blocks = [
            (&self.a, m, n),
            (&self.b1, m - 1, n),
            (&self.b2, m, n - 1),
            (&self.c12, m - 1, n - 1),
            (&self.d, m - 2, n),
            (&self.e, m - 2, n - 1),
        ];
        let mut num = Poly2::zero();
        for (c, km, kn) in blocks {
            num = &num + &(&(c * &gy1(km)) * &gy2(kn));
        }
        RationalGF::new(num, standard_denominator())
    }
}

/// `sum_{j=0}^{n-1} t1^{m+2n-2j} t2^j` (zero when n = 0).
fn upper_diagonal_sum(m: i64, n: i64) -> Poly2 {
    let mut acc = Poly2::zero();
    for j in 0..n {
        acc = &acc + &mono(m + 2 * n - 2 * j, j);
    }
    acc
}

/// `sum_{j=0}^{m/2} t1^{2j} t2^{m+n-2j}` for even m.
fn even_column_sum(m: i64, n: i64) -> Poly2 {
    let mut acc = Poly2::zero();
    for j in 0..=(m / 2) {
        acc = &acc + &mono(2 * j, m + n - 2 * j);
    }
    acc
}

/// `sum_{j=0}^{(m-3)/2} t1^{2j+1} t2^{m+n-1-2j}` for odd m (empty at m = 1).
fn odd_column_sum(m: i64, n: i64) -> Poly2 {
    let mut acc = Poly2::zero();
    let mut j = 0;
    while 2 * j + 3 <= m {
        acc = &acc + &mono(2 * j + 1, m + n - 1 - 2 * j);
        j += 1;
    }
    acc
}

/// The simplified closed form of A_{m,n} over the standard denominator,
/// with separate numerators for even and odd m. Empty sums at boundary
/// indices evaluate to zero.
pub fn mult_gf(m: i64, n: i64) -> RationalGF {
    assert!(m >= 0 && n >= 0);
    let mut num = &tp(&[(1, 0, 0), (-1, 0, 2)]) * &upper_diagonal_sum(m, n);
    if m % 2 == 0 {
        num = &num + &(&tp(&[(1, 0, 0), (-1, 2, 0), (1, 0, 1), (-1, 0, 3)]) * &even_column_sum(m, n));
        num = &num - &(&tp(&[(1, 0, 0), (-1, 2, 0), (-1, 0, 2)]) * &mono(0, m + n + 1));
        num = &num + &mono(m + 2, n);
    } else {
        num = &num + &(&tp(&[(1, 0, 0), (1, 0, 1), (-1, 0, 2), (-1, 2, 1)]) * &odd_column_sum(m, n));
        num = &num + &(&tp(&[(1, 0, 0), (1, 0, 1), (-1, 0, 2)]) * &mono(m, n));
        num = &num + &mono(1, m + n + 1);
    }
    RationalGF::new(num, standard_denominator())
}

/// The unreduced closed form of A_{m,n}, carrying the removable factors
/// `(t1^2 - t2^2)(t1^2 - t2)` in the denominator. Its denominator has zero
/// constant term, so it can only be compared by cross-multiplication,
/// never expanded directly.
pub fn mult_gf_unreduced(m: i64, n: i64) -> RationalGF {
    assert!(m >= 0 && n >= 0);
    let t1sq_minus_t2sq = tp(&[(1, 2, 0), (-1, 0, 2)]);
    let t1sq_minus_t2 = tp(&[(1, 2, 0), (-1, 0, 1)]);
    let om_t1sq = tp(&[(1, 0, 0), (-1, 2, 0)]);
    let om_t2sq = tp(&[(1, 0, 0), (-1, 0, 2)]);
    let f = if m % 2 == 0 {
        tp(&[(1, 2, 0), (1, 0, 1)])
    } else {
        tp(&[(1, 1, 0), (1, 1, 1)])
    };
    let num = &(&(&mono(m + 2 * n + 2, 0) * &t1sq_minus_t2sq) * &om_t2sq)
        - &(&(&(&mono(m + 2, n + 1) * &om_t1sq) * &om_t2sq)
            + &(&(&(&mono(0, m + n + 1) * &t1sq_minus_t2) * &om_t1sq) * &f));
    let den = &(&standard_denominator() * &t1sq_minus_t2sq) * &t1sq_minus_t2;
    RationalGF::new(num, den)
}

/// Multiplicity by coefficient extraction:
/// `mu_{p,q}(m,n) = [t1^p t2^q] A_{m,n}`.
pub fn mult_from_gf(m: i64, n: i64, p: i64, q: i64) -> Result<u64> {
    assert!(m >= 0 && n >= 0 && p >= 0 && q >= 0);
    let c = mult_gf(m, n).coeff(p as u32, q as u32)?;
    Ok(u64::try_from(c).expect("multiplicities are small nonnegative integers"))
}

/// `X_{m,n} = (1 - t1^2)(1 - t2) A_{m,n}`, whose series coefficient at
/// (p, q) is the first-recurrence residual
/// `mu_{p,q} - mu_{p-2,q} - mu_{p,q-1} + mu_{p-2,q-1}` of the weight (m, n).
pub fn rec1_residual_gf(m: i64, n: i64) -> RationalGF {
    let shift = &tp(&[(1, 0, 0), (-1, 2, 0)]) * &tp(&[(1, 0, 0), (-1, 0, 1)]);
    mult_gf(m, n).mul_poly(&shift)
}

/// Closed form of X_{m,n} over `(1 - t1^2)(1 - t2^2)`.
pub fn rec1_residual_gf_explicit(m: i64, n: i64) -> RationalGF {
    assert!(m >= 0 && n >= 0);
    let om_t2sq = tp(&[(1, 0, 0), (-1, 0, 2)]);
    let op_t2 = tp(&[(1, 0, 0), (1, 0, 1)]);
    let mut num = &om_t2sq * &upper_diagonal_sum(m, n);
    if m % 2 == 0 {
        let inner = &(&op_t2 * &even_column_sum(m, n)) - &mono(0, m + n + 1);
        num = &num + &(&om_t2sq * &inner);
        num = &num + &(&mono(2, m + n + 1) + &mono(0, m + n + 2));
    } else {
        let inner = &odd_column_sum(m, n) + &mono(m, n);
        num = &num + &(&(&om_t2sq * &op_t2) * &inner);
        num = &num + &(&op_t2 * &mono(1, m + n + 1));
    }
    let den = &tp(&[(1, 0, 0), (-1, 2, 0)]) * &om_t2sq;
    RationalGF::new(num, den)
}

/// `P_{m,n} = A_{m,n} - A_{m+2,n} - A_{m,n+1} + A_{m+2,n+1}`, whose series
/// coefficient at (p, q) is the second-recurrence residual
/// `mu_{p,q}(m,n) - mu_{p,q}(m+2,n) - mu_{p,q}(m,n+1) + mu_{p,q}(m+2,n+1)`.
pub fn rec2_residual_gf(m: i64, n: i64) -> RationalGF {
    let num = &(&mult_gf(m, n).numerator - &mult_gf(m + 2, n).numerator)
        - &(&mult_gf(m, n + 1).numerator - &mult_gf(m + 2, n + 1).numerator);
    RationalGF::new(num, standard_denominator())
}

/// Closed form of P_{m,n} over `(1 - t1^2)(1 - t2)`.
pub fn rec2_residual_gf_explicit(m: i64, n: i64) -> RationalGF {
    assert!(m >= 0 && n >= 0);
    let om_t1sq = tp(&[(1, 0, 0), (-1, 2, 0)]);
    let om_t2 = tp(&[(1, 0, 0), (-1, 0, 1)]);
    let mut diag = Poly2::zero();
    for j in 0..=n {
        diag = &diag + &mono(m + 2 * n - 2 * j, j);
    }
    let (column, tail) = if m % 2 == 0 {
        let mut col = Poly2::zero();
        let mut j = 0;
        while 2 * j + 2 <= m {
            col = &col + &mono(2 * j, m + n - 2 * j);
            j += 1;
        }
        (col, mono(0, m + n + 1))
    } else {
        (odd_column_sum(m, n), mono(1, m + n + 1))
    };
    let num = &(&om_t1sq * &(&diag + &column)) - &tail;
    RationalGF::new(num, &om_t1sq * &om_t2)
}

/// Catalog of the fifteen generating functions A_{m,n} with m + n <= 4,
/// in their individually reduced closed forms. These serve as frozen
/// regression data for [`mult_gf`] and [`MasterGf::coeff_gf`].
pub fn low_weight_gf_table() -> Vec<((i64, i64), RationalGF)> {
    let om_t1sq = tp(&[(1, 0, 0), (-1, 2, 0)]);
    let om_t2 = tp(&[(1, 0, 0), (-1, 0, 1)]);
    let op_t2 = tp(&[(1, 0, 0), (1, 0, 1)]);
    let om_t2sq = tp(&[(1, 0, 0), (-1, 0, 2)]);
    // (1 - t1^2)^2 (1 - t2)^2 and the same with an extra (1 + t2)
    let den_sq = &om_t1sq.pow(2) * &om_t2.pow(2);
    let den_cube = &den_sq * &op_t2;
    let mut out: Vec<((i64, i64), RationalGF)> = Vec::new();

    out.push(((0, 0), zero_weight_gf()));
    out.push(((1, 0), RationalGF::new(tp(&[(1, 1, 0)]), den_sq.clone())));
    out.push(((0, 1), RationalGF::new(
        tp(&[(1, 2, 0), (1, 0, 1)]),
        &(&om_t1sq.pow(2) * &om_t2) * &om_t2sq,
    )));
    out.push(((2, 0), RationalGF::new(
        tp(&[(1, 0, 2), (1, 2, 0), (1, 2, 1), (-1, 2, 2)]),
        den_cube.clone(),
    )));
    out.push(((1, 1), RationalGF::new(
        tp(&[(1, 3, 0), (-1, 3, 1), (1, 1, 1)]),
        den_sq.clone(),
    )));
    out.push(((0, 2), RationalGF::new(
        tp(&[(1, 2, 1), (1, 0, 2), (1, 4, 0), (-1, 4, 2)]),
        den_cube.clone(),
    )));
    out.push(((3, 0), RationalGF::new(
        tp(&[(1, 1, 2), (1, 3, 0), (-1, 3, 2)]),
        den_sq.clone(),
    )));
    out.push(((2, 1), RationalGF::new(
        tp(&[(1, 0, 3), (1, 4, 0), (-1, 4, 2), (1, 2, 1), (1, 2, 2), (-1, 2, 3)]),
        den_cube.clone(),
    )));
    out.push(((1, 2), RationalGF::new(
        tp(&[(1, 5, 0), (-1, 5, 1), (1, 3, 1), (-1, 3, 2), (1, 1, 2)]),
        den_sq.clone(),
    )));
    out.push(((0, 3), RationalGF::new(
        tp(&[(1, 2, 2), (1, 0, 3), (1, 6, 0), (-1, 6, 2), (1, 4, 1), (-1, 4, 3)]),
        den_cube.clone(),
    )));
    // t2^4 + t1^4 (1 - t2)(1 + t2)^2 + t1^2 t2^2 (1 + t2 - t2^2)
    let a40_num = &(&tp(&[(1, 0, 4)])
        + &(&(&tp(&[(1, 4, 0)]) * &om_t2) * &op_t2.pow(2)))
        + &(&tp(&[(1, 2, 2)]) * &tp(&[(1, 0, 0), (1, 0, 1), (-1, 0, 2)]));
    out.push(((4, 0), RationalGF::new(a40_num, den_cube.clone())));
    out.push(((3, 1), RationalGF::new(
        tp(&[(1, 5, 0), (-1, 5, 1), (1, 1, 3), (1, 3, 1), (-1, 3, 3)]),
        den_sq.clone(),
    )));
    out.push(((2, 2), RationalGF::new(
        tp(&[(1, 0, 4), (1, 6, 0), (-1, 6, 2), (1, 4, 1), (-1, 4, 3), (1, 2, 2), (1, 2, 3), (-1, 2, 4)]),
        den_cube.clone(),
    )));
    out.push(((1, 3), RationalGF::new(
        tp(&[(1, 7, 0), (-1, 7, 1), (1, 5, 1), (-1, 5, 2), (1, 3, 2), (-1, 3, 3), (1, 1, 3)]),
        den_sq.clone(),
    )));
    out.push(((0, 4), RationalGF::new(
        tp(&[(1, 2, 3), (1, 0, 4), (1, 8, 0), (-1, 8, 2), (1, 6, 1), (-1, 6, 3), (1, 4, 2), (-1, 4, 4)]),
        den_cube,
    )));
    out
}

//! A2 generating functions: fundamental characters, the character
//! generating function, and the zero-weight multiplicity function.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::exact::{LaurentPoly2, Poly2, RationalGF, TruncatedSeries2};
use crate::lie::RepLabel;

fn tp(terms: &[(i64, u32, u32)]) -> Poly2 {
    Poly2::from_i64_terms(terms)
}

/// The fundamental characters of A2:
/// z1 = x1 + 1/x2 + x2/x1 (the 3) and z2 = x2 + 1/x1 + x1/x2 (its
/// conjugate); z2 is z1 with x1 and x2 swapped.
pub fn fundamental_characters() -> (LaurentPoly2, LaurentPoly2) {
    let z1 = LaurentPoly2::from_terms(
        [(1, 0), (0, -1), (-1, 1)].map(|e| (e, BigInt::one())),
    );
    let z2 = z1.swap_vars();
    (z1, z2)
}

/// The generating function of the A2 characters,
/// `G = (1 - t1 t2) / ((1 - t1 z1 + t1^2 z2 - t1^3)(1 - t2 z2 + t2^2 z1 - t2^3))`,
/// as numerator/denominator polynomials in t1, t2 with coefficients that
/// are polynomials in z1, z2.
pub struct CharacterGf {
    pub numerator_z: Poly2<Poly2>,
    pub denominator_z: Poly2<Poly2>,
}

pub fn character_gf() -> CharacterGf {
    let z1: Poly2 = Poly2::monomial(1, 0);
    let z2: Poly2 = Poly2::monomial(0, 1);
    let numerator_z = Poly2::<Poly2>::from_terms([
        ((0, 0), Poly2::one()),
        ((1, 1), -Poly2::one()),
    ]);
    let f1 = Poly2::<Poly2>::from_terms([
        ((0, 0), Poly2::one()),
        ((1, 0), -z1.clone()),
        ((2, 0), z2.clone()),
        ((3, 0), -Poly2::one()),
    ]);
    let f2 = Poly2::<Poly2>::from_terms([
        ((0, 0), Poly2::one()),
        ((0, 1), -z2),
        ((0, 2), z1),
        ((0, 3), -Poly2::one()),
    ]);
    CharacterGf {
        numerator_z,
        denominator_z: &f1 * &f2,
    }
}

impl CharacterGf {
    /// Expands G with the fundamental characters substituted; the
    /// coefficient of t1^p t2^q is the A2 character chi_{p,q}.
    pub fn expand_characters(&self, order: u32) -> Result<BTreeMap<RepLabel, LaurentPoly2>> {
        let (z1, z2) = fundamental_characters();
        let eval = |zp: &Poly2| -> LaurentPoly2 {
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
        let num = self.numerator_z.map_coeffs(&eval);
        let den = self.denominator_z.map_coeffs(&eval);
        let series = TruncatedSeries2::<LaurentPoly2>::expand_quotient(&num, &den, order)?;
        let mut out = BTreeMap::new();
        for p in 0..=order {
            for q in 0..=(order - p) {
                out.insert(RepLabel::new(p as i64, q as i64), series.coeff(p, q));
            }
        }
        Ok(out)
    }
}

/// The A2 zero-weight generating function
/// `A_{0,0} = (1 - t1^3 t2^3) / ((1 - t1^3)(1 - t1 t2)^2 (1 - t2^3))`.
pub fn zero_weight_gf() -> RationalGF {
    let num = tp(&[(1, 0, 0), (-1, 3, 3)]);
    let den = &(&tp(&[(1, 0, 0), (-1, 3, 0)]) * &tp(&[(1, 0, 0), (-1, 1, 1)]).pow(2))
        * &tp(&[(1, 0, 0), (-1, 0, 3)]);
    RationalGF::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn fundamental_characters_shape() {
        let (z1, z2) = fundamental_characters();
        assert_eq!(z1.eval_at_one(), BigInt::from(3));
        assert_eq!(z2, z1.swap_vars());
        assert_eq!(z1.coeff(-1, 1), BigInt::one());
    }

    #[test]
    fn character_expansion_low_orders() {
        let g = character_gf();
        let chars = g.expand_characters(2).unwrap();
        let (z1, z2) = fundamental_characters();
        assert_eq!(chars[&RepLabel::new(0, 0)], LaurentPoly2::monomial(0, 0));
        assert_eq!(chars[&RepLabel::new(1, 0)], z1.clone());
        assert_eq!(chars[&RepLabel::new(0, 1)], z2.clone());
        // adjoint: chi_{1,1} = z1 z2 - 1
        assert_eq!(
            chars[&RepLabel::new(1, 1)],
            &(&z1 * &z2) - &LaurentPoly2::monomial(0, 0)
        );
    }

    #[test]
    fn zero_weight_series_coefficients() {
        let gf = zero_weight_gf();
        assert_eq!(gf.coeff(0, 0).unwrap(), BigInt::one());
        assert_eq!(gf.coeff(1, 1).unwrap(), BigInt::from(2));
        assert_eq!(gf.coeff(3, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn zero_weight_gf_is_symmetric() {
        let gf = zero_weight_gf();
        assert!(gf.rational_equal(&gf.swap_vars()));
        let s = gf.series(12).unwrap();
        for p in 0..=6u32 {
            for q in 0..=(6 - p) {
                assert_eq!(s.coeff(p, q), s.coeff(q, p));
            }
        }
    }

    #[test]
    fn zero_weight_absent_off_root_lattice() {
        let gf = zero_weight_gf();
        // (p, q) = (1, 0): p + 2q not divisible by 3, so no zero weight
        assert!(gf.coeff(1, 0).unwrap().is_zero());
    }
}

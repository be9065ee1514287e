//! Exact coefficient rings: `Q`, the polynomial ring `Q[h]`, the rational
//! function field `Q(q)`, and the mixed ring `Q(q)[h]` used during
//! contraction. No floating point anywhere; every identity checked by the
//! engine is an exact polynomial identity.

mod poly;
mod qrat;

pub use poly::Poly;
pub use qrat::QRat;

use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

/// Exact rational numbers with arbitrary-precision integers. `Ratio` keeps
/// the invariants we need: reduced form, positive denominator.
pub type Rational = num_rational::BigRational;

/// Polynomials in the deformation parameter `h` over `Q`.
pub type HPoly = Poly<Rational>;

/// Polynomials in `h` with coefficients in `Q(q)`; the contraction conjugate
/// `G^{-1} (x) G` lives here before the `q -> 1` limit is taken.
pub type QhPoly = Poly<QRat>;

/// Common bound for matrix/polynomial entries. All implementors are exact.
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    fn from_rational(r: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `(a/b) h^k` as an element of `Q[h]`.
pub fn hmono(num: i64, den: i64, k: usize) -> HPoly {
    HPoly::monomial(rat(num, den), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hp(coeffs: &[(i64, i64)]) -> HPoly {
        HPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn hpoly_ring_identities() {
        // (1+h)(1-h) = 1-h^2
        let a = hp(&[(1, 1), (1, 1)]);
        let b = hp(&[(1, 1), (-1, 1)]);
        assert_eq!(a * b, hp(&[(1, 1), (0, 1), (-1, 1)]));
        // (h^2/4) * 4 = h^2
        assert_eq!(
            hmono(1, 4, 2).scale(&rat_int(4)),
            HPoly::monomial(rat_int(1), 2)
        );
    }

    #[test]
    fn hpoly_eval_h0() {
        assert_eq!(hp(&[(1, 1), (2, 1), (3, 1)]).eval_at_zero(), rat_int(1));
        assert_eq!(HPoly::monomial(rat_int(1), 2).eval_at_zero(), rat_int(0));
        assert_eq!(hp(&[(1, 1), (-1, 2)]).eval_at_zero(), rat_int(1));
        assert_eq!(HPoly::zero().eval_at_zero(), rat_int(0));
    }

    #[test]
    fn hpoly_div_exact_var() {
        let p = hp(&[(0, 1), (2, 1), (1, 1)]); // 2h + h^2
        assert_eq!(p.div_exact_var().unwrap(), hp(&[(2, 1), (1, 1)]));
        assert!(hp(&[(1, 1), (1, 1)]).div_exact_var().is_err());
    }

    #[test]
    fn render_descending() {
        assert_eq!(hp(&[(1, 1), (0, 1), (-1, 2)]).render("h"), "-1/2*h^2+1");
        assert_eq!(HPoly::monomial(rat_int(1), 1).render("h"), "h");
        assert_eq!(HPoly::zero().render("h"), "0");
        assert_eq!(hp(&[(-1, 1)]).render("h"), "-1");
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
    }

    fn small_hpoly() -> impl Strategy<Value = HPoly> {
        proptest::collection::vec(small_rat(), 0..4).prop_map(HPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn hpoly_ring_axioms(a in small_hpoly(), b in small_hpoly(), c in small_hpoly()) {
            prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!(
                (a.clone() + b.clone()) * c.clone(),
                a.clone() * c.clone() + b.clone() * c.clone()
            );
            prop_assert_eq!(
                (a.clone() * b.clone()) * c.clone(),
                a.clone() * (b.clone() * c.clone())
            );
        }

        #[test]
        fn hpoly_div_rem_roundtrip(a in small_hpoly(), b in small_hpoly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q * b.clone() + r.clone(), a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }
    }
}

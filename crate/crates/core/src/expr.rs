//! Expression trees over generator labels. Coproducts, antipodes, operator
//! entries and relation sides are all finite expressions of this shape;
//! evaluation in a representation is a homomorphic fold (products become
//! matrix products in order, sums become matrix sums).

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::labels::GeneratorLabel;
use crate::scalars::{hmono, HPoly};
use crate::superlinalg::{GradedMatrix, SuperSpace};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Gen(GeneratorLabel),
    /// A scalar multiple of the identity.
    Scalar(HPoly),
    Sum(Vec<Expr>),
    /// Ordered product.
    Prod(Vec<Expr>),
    Pow(Box<Expr>, u32),
    /// Exact division by `h`; evaluation fails unless every entry of the
    /// inner matrix is divisible by `h`.
    DivH(Box<Expr>),
}

pub fn g(l: GeneratorLabel) -> Expr {
    Expr::Gen(l)
}

pub fn sc(p: HPoly) -> Expr {
    Expr::Scalar(p)
}

/// Rational constant `a/b`.
pub fn num(a: i64, b: i64) -> Expr {
    sc(hmono(a, b, 0))
}

/// `(a/b) h^k`.
pub fn hnum(a: i64, b: i64, k: usize) -> Expr {
    sc(hmono(a, b, k))
}

/// `T^k` for any integer `k` (`k = 0` is the identity).
pub fn t(k: i32) -> Expr {
    match k {
        0 => Expr::Scalar(HPoly::one()),
        1 => g(GeneratorLabel::T(1)),
        -1 => g(GeneratorLabel::T(-1)),
        k if k > 0 => Expr::Pow(Box::new(g(GeneratorLabel::T(1))), k as u32),
        k => Expr::Pow(Box::new(g(GeneratorLabel::T(-1))), (-k) as u32),
    }
}

/// `T^{k/2}` for odd `k` in `{1, -1}`.
pub fn th(k: i8) -> Expr {
    g(GeneratorLabel::THalf(k))
}

pub fn divh(e: Expr) -> Expr {
    Expr::DivH(Box::new(e))
}

impl Expr {
    pub fn pow(self, k: u32) -> Expr {
        Expr::Pow(Box::new(self), k)
    }

    pub fn zero() -> Expr {
        Expr::Scalar(HPoly::zero())
    }

    pub fn one() -> Expr {
        Expr::Scalar(HPoly::one())
    }

    /// Z2-degree of a homogeneous expression; `None` when the summands
    /// disagree. Scalars count as even.
    pub fn degree(&self, n: u8) -> Option<u8> {
        match self {
            Expr::Gen(l) => Some(l.parity(n)),
            Expr::Scalar(_) => Some(0),
            Expr::Sum(terms) => {
                let mut degs = terms.iter().filter_map(|e| {
                    if matches!(e, Expr::Scalar(s) if s.is_zero()) {
                        None
                    } else {
                        Some(e.degree(n))
                    }
                });
                let first = degs.next().unwrap_or(Some(0))?;
                for d in degs {
                    if d? != first {
                        return None;
                    }
                }
                Some(first)
            }
            Expr::Prod(factors) => {
                let mut p = 0u8;
                for f in factors {
                    p = (p + f.degree(n)?) % 2;
                }
                Some(p)
            }
            Expr::Pow(b, k) => Some((b.degree(n)? * (*k % 2) as u8) % 2),
            Expr::DivH(b) => b.degree(n),
        }
    }
}

/// Graded commutator `[a, b] = ab - (-1)^{deg a deg b} ba` as an expression;
/// degrees are read off the labels, so both arguments must be homogeneous.
pub fn comm(n: u8, a: Expr, b: Expr) -> Expr {
    let da = a.degree(n).expect("homogeneous left operand");
    let db = b.degree(n).expect("homogeneous right operand");
    let ab = Expr::Prod(vec![a.clone(), b.clone()]);
    let ba = Expr::Prod(vec![b, a]);
    if da * db == 1 {
        ab + ba
    } else {
        ab - ba
    }
}

/// Commutator of two bare generators.
pub fn commg(n: u8, a: GeneratorLabel, b: GeneratorLabel) -> Expr {
    comm(n, g(a), g(b))
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        match (self, rhs) {
            (Expr::Sum(mut a), Expr::Sum(b)) => {
                a.extend(b);
                Expr::Sum(a)
            }
            (Expr::Sum(mut a), b) => {
                a.push(b);
                Expr::Sum(a)
            }
            (a, Expr::Sum(mut b)) => {
                b.insert(0, a);
                Expr::Sum(b)
            }
            (a, b) => Expr::Sum(vec![a, b]),
        }
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        self + (-rhs)
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        match self {
            Expr::Scalar(s) => Expr::Scalar(-s),
            Expr::Sum(terms) => Expr::Sum(terms.into_iter().map(|e| -e).collect()),
            Expr::Prod(mut factors) => {
                factors.insert(0, num(-1, 1));
                Expr::Prod(factors)
            }
            e => Expr::Prod(vec![num(-1, 1), e]),
        }
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        match (self, rhs) {
            (Expr::Prod(mut a), Expr::Prod(b)) => {
                a.extend(b);
                Expr::Prod(a)
            }
            (Expr::Prod(mut a), b) => {
                a.push(b);
                Expr::Prod(a)
            }
            (a, Expr::Prod(mut b)) => {
                b.insert(0, a);
                Expr::Prod(b)
            }
            (a, b) => Expr::Prod(vec![a, b]),
        }
    }
}

/// Evaluate an expression in a representation. `lookup` supplies generator
/// matrices on `space`; scalar leaves become multiples of the identity.
pub fn eval<F>(expr: &Expr, space: &SuperSpace, lookup: &F) -> Result<GradedMatrix<HPoly>>
where
    F: Fn(&GeneratorLabel) -> Option<GradedMatrix<HPoly>>,
{
    match expr {
        Expr::Gen(l) => lookup(l).ok_or_else(|| Error::UnknownGenerator(l.to_string())),
        Expr::Scalar(s) => Ok(GradedMatrix::identity(space.clone()).scale(s)),
        Expr::Sum(terms) => {
            let mut acc = GradedMatrix::zero(space.clone());
            for t in terms {
                acc = acc.add(&eval(t, space, lookup)?);
            }
            Ok(acc)
        }
        Expr::Prod(factors) => {
            let mut acc = GradedMatrix::identity(space.clone());
            for f in factors {
                acc = acc.mul(&eval(f, space, lookup)?);
            }
            Ok(acc)
        }
        Expr::Pow(base, k) => Ok(eval(base, space, lookup)?.pow(*k)),
        Expr::DivH(inner) => {
            let m = eval(inner, space, lookup)?;
            m.try_map(|r, c, p: &HPoly| {
                p.div_exact_var().map_err(|_| {
                    Error::DivisibilityFailure(format!(
                        "entry ({}, {}) = {} is not divisible by h",
                        r + 1,
                        c + 1,
                        p.render("h")
                    ))
                })
            })
        }
    }
}

/// Fold the counit through an expression: generators map to their stated
/// counit value, products multiply, sums add.
pub fn counit_fold<F>(expr: &Expr, eps: &F) -> Result<HPoly>
where
    F: Fn(&GeneratorLabel) -> Option<HPoly>,
{
    match expr {
        Expr::Gen(l) => eps(l).ok_or_else(|| Error::UnknownGenerator(l.to_string())),
        Expr::Scalar(s) => Ok(s.clone()),
        Expr::Sum(terms) => {
            let mut acc = HPoly::zero();
            for t in terms {
                acc = acc + counit_fold(t, eps)?;
            }
            Ok(acc)
        }
        Expr::Prod(factors) => {
            let mut acc = HPoly::one();
            for f in factors {
                acc = acc * counit_fold(f, eps)?;
            }
            Ok(acc)
        }
        Expr::Pow(base, k) => Ok(counit_fold(base, eps)?.pow(*k)),
        Expr::DivH(inner) => counit_fold(inner, eps)?.div_exact_var().map_err(|_| {
            Error::DivisibilityFailure("counit image not divisible by h".into())
        }),
    }
}

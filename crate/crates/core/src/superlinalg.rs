//! Graded linear algebra: Z2-graded vector spaces, dense square matrices
//! over an exact scalar ring, graded Kronecker products with Koszul signs,
//! graded commutators, flips, and exact series of unipotent/nilpotent
//! matrices.
//!
//! Indices are 0-based internally; report/dump layers convert to 1-based.

use num_traits::One;

use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};

/// A finite-dimensional Z2-graded vector space: one parity bit per basis
/// vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    parity: Vec<u8>,
}

impl SuperSpace {
    pub fn new(parity: Vec<u8>) -> Self {
        assert!(!parity.is_empty());
        assert!(parity.iter().all(|&p| p <= 1));
        SuperSpace { parity }
    }

    pub fn all_even(dim: usize) -> Self {
        Self::new(vec![0; dim])
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.parity
    }

    /// Tensor product, basis ordered row-major (left factor outer):
    /// `(i, k) -> i * dim(W) + k`, parity `p(i) + p(k) mod 2`.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut parity = Vec::with_capacity(self.dim() * other.dim());
        for &pi in &self.parity {
            for &pk in &other.parity {
                parity.push((pi + pk) % 2);
            }
        }
        SuperSpace { parity }
    }

    pub fn tensor_power(&self, k: u32) -> SuperSpace {
        assert!(k >= 1);
        let mut s = self.clone();
        for _ in 1..k {
            s = s.tensor(self);
        }
        s
    }
}

/// Dense square matrix with an attached [`SuperSpace`] and an optional
/// operator parity. The parity bit is metadata: equality compares space and
/// entries only.
#[derive(Clone, Debug)]
pub struct GradedMatrix<S> {
    space: SuperSpace,
    parity: Option<u8>,
    entries: Vec<S>,
}

impl<S: Scalar> PartialEq for GradedMatrix<S> {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.entries == other.entries
    }
}

impl<S: Scalar> GradedMatrix<S> {
    pub fn zero(space: SuperSpace) -> Self {
        let d = space.dim();
        GradedMatrix {
            space,
            parity: Some(0),
            entries: vec![S::zero(); d * d],
        }
    }

    pub fn identity(space: SuperSpace) -> Self {
        let d = space.dim();
        let mut m = Self::zero(space);
        for i in 0..d {
            m.entries[i * d + i] = S::one();
        }
        m
    }

    /// Matrix unit `E_ij` (0-based); its parity is `p(i) + p(j)`.
    pub fn unit(space: SuperSpace, i: usize, j: usize) -> Self {
        let p = (space.parity(i) + space.parity(j)) % 2;
        let mut m = Self::zero(space);
        m.parity = Some(p);
        let d = m.dim();
        m.entries[i * d + j] = S::one();
        m
    }

    pub fn from_diag(space: SuperSpace, diag: Vec<S>) -> Self {
        assert_eq!(space.dim(), diag.len());
        let mut m = Self::zero(space);
        let d = m.dim();
        for (i, v) in diag.into_iter().enumerate() {
            m.entries[i * d + i] = v;
        }
        m
    }

    /// The parity operator `(-1)^F = diag((-1)^{p(i)})`.
    pub fn parity_operator(space: SuperSpace) -> Self {
        let diag = space
            .parities()
            .iter()
            .map(|&p| if p == 0 { S::one() } else { -S::one() })
            .collect();
        Self::from_diag(space, diag)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn parity(&self) -> Option<u8> {
        self.parity
    }

    pub fn with_parity(mut self, p: Option<u8>) -> Self {
        self.parity = p;
        self
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        let d = self.dim();
        self.entries[i * d + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// First position where the two matrices differ, 0-based.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        assert_eq!(self.space, other.space);
        let d = self.dim();
        (0..d * d)
            .find(|&k| self.entries[k] != other.entries[k])
            .map(|k| (k / d, k % d))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.space, rhs.space);
        let parity = match (self.parity, rhs.parity) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        };
        GradedMatrix {
            space: self.space.clone(),
            parity,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        GradedMatrix {
            space: self.space.clone(),
            parity: self.parity,
            entries: self.entries.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        GradedMatrix {
            space: self.space.clone(),
            parity: self.parity,
            entries: self.entries.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.scale(&S::from_rational(c.clone()))
    }

    fn mul_parity(&self, rhs: &Self) -> Option<u8> {
        match (self.parity, rhs.parity) {
            (Some(a), Some(b)) => Some((a + b) % 2),
            _ => None,
        }
    }

    pub fn mul_sequential(&self, rhs: &Self) -> Self {
        assert_eq!(self.space, rhs.space);
        let d = self.dim();
        let mut entries = vec![S::zero(); d * d];
        for (i, row) in entries.chunks_mut(d).enumerate() {
            mul_row(&self.entries, &rhs.entries, d, i, row);
        }
        GradedMatrix {
            space: self.space.clone(),
            parity: self.mul_parity(rhs),
            entries,
        }
    }

    #[cfg(feature = "parallel")]
    pub fn mul_parallel(&self, rhs: &Self) -> Self {
        use rayon::prelude::*;
        assert_eq!(self.space, rhs.space);
        let d = self.dim();
        let mut entries = vec![S::zero(); d * d];
        entries
            .par_chunks_mut(d)
            .enumerate()
            .for_each(|(i, row)| mul_row(&self.entries, &rhs.entries, d, i, row));
        GradedMatrix {
            space: self.space.clone(),
            parity: self.mul_parity(rhs),
            entries,
        }
    }

    /// Multiply, parallelizing across output rows for large spaces.
    /// Relation checks already run concurrently, so the row-level split
    /// only pays off once a single product dominates (triple tensor
    /// spaces); below the threshold the sequential kernel wins.
    pub fn mul(&self, rhs: &Self) -> Self {
        #[cfg(feature = "parallel")]
        {
            if self.dim() >= 64 {
                return self.mul_parallel(rhs);
            }
        }
        self.mul_sequential(rhs)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.space.clone());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Graded Kronecker product. Entry `((i,k),(j,l))` carries the Koszul
    /// sign `(-1)^{(p(k)+p(l)) p(j)}`; for homogeneous factors this agrees
    /// with the operator rule `(a (x) b)(c (x) d) = (-1)^{p(b) p(c)} ac (x) bd`
    /// and it extends entrywise to inhomogeneous ones.
    pub fn graded_kron(&self, rhs: &Self) -> Self {
        self.kron_impl(rhs, true)
    }

    /// Ungraded Kronecker product (no signs).
    pub fn plain_kron(&self, rhs: &Self) -> Self {
        self.kron_impl(rhs, false)
    }

    fn kron_impl(&self, rhs: &Self, signed: bool) -> Self {
        let dv = self.dim();
        let dw = rhs.dim();
        let space = self.space.tensor(rhs.space());
        let d = dv * dw;
        let mut entries = vec![S::zero(); d * d];
        for i in 0..dv {
            for j in 0..dv {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                let pj = self.space.parity(j);
                for k in 0..dw {
                    for l in 0..dw {
                        let b = rhs.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        let sign_neg = signed
                            && pj == 1
                            && (rhs.space.parity(k) + rhs.space.parity(l)) % 2 == 1;
                        let v = a.clone() * b.clone();
                        entries[(i * dw + k) * d + (j * dw + l)] =
                            if sign_neg { -v } else { v };
                    }
                }
            }
        }
        let parity = match (self.parity, rhs.parity) {
            (Some(a), Some(b)) => Some((a + b) % 2),
            _ => None,
        };
        GradedMatrix {
            space,
            parity,
            entries,
        }
    }

    /// Graded commutator `ab - (-1)^{p(a) p(b)} ba`; an anticommutator when
    /// both operands are odd. Requires declared parities.
    pub fn graded_commutator(&self, rhs: &Self) -> Result<Self> {
        let (pa, pb) = match (self.parity, rhs.parity) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::UndeclaredParity),
        };
        let ab = self.mul(rhs);
        let ba = rhs.mul(self);
        Ok(if pa * pb == 1 { ab.add(&ba) } else { ab.sub(&ba) })
    }

    /// Check the declared parity entrywise: every nonzero entry `(i, j)`
    /// must satisfy `p(i) + p(j) = parity (mod 2)`.
    pub fn verify_parity(&self) -> bool {
        let Some(p) = self.parity else { return false };
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                if !self.get(i, j).is_zero() && (self.space.parity(i) + self.space.parity(j)) % 2 != p
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> GradedMatrix<T> {
        GradedMatrix {
            space: self.space.clone(),
            parity: self.parity,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entrywise fallible map; the closure receives 0-based coordinates so
    /// errors can be tied to an entry.
    pub fn try_map<T: Scalar>(
        &self,
        mut f: impl FnMut(usize, usize, &S) -> Result<T>,
    ) -> Result<GradedMatrix<T>> {
        let d = self.dim();
        let mut entries = Vec::with_capacity(d * d);
        for (k, e) in self.entries.iter().enumerate() {
            entries.push(f(k / d, k % d, e)?);
        }
        Ok(GradedMatrix {
            space: self.space.clone(),
            parity: self.parity,
            entries,
        })
    }

    /// Smallest `k >= 1` with `m^k = 0`, or an error after `dim` steps.
    pub fn nilpotency_index(&self) -> Result<u32> {
        if self.is_zero() {
            return Ok(1);
        }
        let mut p = self.clone();
        for k in 1..=self.dim() as u32 {
            if p.is_zero() {
                return Ok(k);
            }
            p = p.mul(self);
        }
        if p.is_zero() {
            Ok(self.dim() as u32 + 1)
        } else {
            Err(Error::NotNilpotent { dim: self.dim() })
        }
    }

    /// Exact inverse of a unipotent matrix (`m - 1` nilpotent):
    /// `sum_k (1 - m)^k`.
    pub fn unipotent_inverse(&self) -> Result<Self> {
        let n = Self::identity(self.space.clone()).sub(self);
        let idx = n.nilpotency_index()?;
        let mut acc = Self::identity(self.space.clone());
        let mut p = Self::identity(self.space.clone());
        for _ in 1..idx {
            p = p.mul(&n);
            acc = acc.add(&p);
        }
        Ok(acc)
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// Nonzero entries as 1-based `(row, col, value)` triples, row-major.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, &S)> {
        let d = self.dim();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(k, e)| (k / d + 1, k % d + 1, e))
            .collect()
    }
}

fn mul_row<S: Scalar>(a: &[S], b: &[S], d: usize, i: usize, out: &mut [S]) {
    for k in 0..d {
        let aik = &a[i * d + k];
        if aik.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            let bkj = &b[k * d + j];
            if !bkj.is_zero() {
                *o = o.clone() + aik.clone() * bkj.clone();
            }
        }
    }
}

/// Matrix of the graded flip `tau(x (x) y) = (-1)^{p(x) p(y)} y (x) x` on
/// `V (x) W` (spaces of equal dimension).
pub fn graded_flip<S: Scalar>(v: &SuperSpace, w: &SuperSpace) -> GradedMatrix<S> {
    flip_impl(v, w, true)
}

/// Ungraded flip (plain permutation), used for the `R13` embedding.
pub fn plain_flip<S: Scalar>(v: &SuperSpace, w: &SuperSpace) -> GradedMatrix<S> {
    flip_impl(v, w, false)
}

fn flip_impl<S: Scalar>(v: &SuperSpace, w: &SuperSpace, signed: bool) -> GradedMatrix<S> {
    assert_eq!(v.dim(), w.dim(), "flip needs equal factor dimensions");
    let dv = v.dim();
    let dw = w.dim();
    let space = v.tensor(w);
    let mut m = GradedMatrix::zero(space);
    for x in 0..dv {
        for y in 0..dw {
            let neg = signed && v.parity(x) == 1 && w.parity(y) == 1;
            let val = if neg { -S::one() } else { S::one() };
            m.set(y * dv + x, x * dw + y, val);
        }
    }
    m.parity = Some(0);
    m
}

/// Series functions of nilpotent/unipotent matrices, truncated exactly at
/// the nilpotency index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesFn {
    /// `sqrt(1 + m)` for nilpotent `m`.
    SqrtOnePlus,
    /// `log m` for unipotent `m`.
    Log,
    /// `exp m` for nilpotent `m`.
    Exp,
}

pub fn unipotent_series<S: Scalar>(
    m: &GradedMatrix<S>,
    f: SeriesFn,
) -> Result<GradedMatrix<S>> {
    let id = GradedMatrix::identity(m.space().clone());
    let n = match f {
        SeriesFn::Log => m.sub(&id),
        _ => m.clone(),
    };
    let idx = n.nilpotency_index()?;
    let mut acc = match f {
        SeriesFn::Log => GradedMatrix::zero(m.space().clone()),
        _ => id.clone(),
    };
    let mut p = id;
    let mut coeff = Rational::one();
    for k in 1..idx {
        p = p.mul(&n);
        coeff = match f {
            // binom(1/2, k) = binom(1/2, k-1) * (1/2 - (k-1)) / k
            SeriesFn::SqrtOnePlus => {
                coeff * (Rational::new(1.into(), 2.into())
                    - Rational::from_integer((k as i64 - 1).into()))
                    / Rational::from_integer((k as i64).into())
            }
            // (-1)^{k+1} / k
            SeriesFn::Log => {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                Rational::new(sign.into(), (k as i64).into())
            }
            // 1 / k!
            SeriesFn::Exp => coeff / Rational::from_integer((k as i64).into()),
        };
        acc = acc.add(&p.scale_rat(&coeff));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{hmono, rat_int, HPoly};
    use num_traits::Zero;

    fn fund_space() -> SuperSpace {
        // sl(2|1) fundamental: parities (0, 0, 1)
        SuperSpace::new(vec![0, 0, 1])
    }

    fn unit(i: usize, j: usize) -> GradedMatrix<HPoly> {
        GradedMatrix::unit(fund_space(), i, j)
    }

    #[test]
    fn kron_identity() {
        let id = GradedMatrix::<HPoly>::identity(fund_space());
        let big = id.graded_kron(&id);
        assert_eq!(big, GradedMatrix::identity(fund_space().tensor(&fund_space())));
    }

    #[test]
    fn kron_supercommutativity_sign() {
        // (1 (x) f2)(e2 (x) 1) = -(e2 (x) f2) since both are odd
        let id = GradedMatrix::<HPoly>::identity(fund_space());
        let e2 = unit(1, 2);
        let f2 = unit(2, 1);
        let lhs = id.graded_kron(&f2).mul(&e2.graded_kron(&id));
        let rhs = e2.graded_kron(&f2).neg();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_entry_sign_example() {
        // graded_kron(E12, E23): entry ((1,2),(2,3)) = +1 (0-based: ((0,1),(1,2)))
        let k = unit(0, 1).graded_kron(&unit(1, 2));
        let d = 3;
        let (row, col) = (1, d + 2);
        assert_eq!(k.get(row, col), &HPoly::one());
    }

    #[test]
    fn product_rule_homogeneous() {
        // (a (x) b)(c (x) d) = (-1)^{p(b) p(c)} (ac (x) bd) on matrix units
        let s = fund_space();
        let units: Vec<_> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| GradedMatrix::<HPoly>::unit(s.clone(), i, j))
            .collect();
        for a in &units {
            for b in &units {
                for c in &units {
                    for d in &units {
                        let lhs = a.graded_kron(b).mul(&c.graded_kron(d));
                        let mut rhs = a.mul(c).graded_kron(&b.mul(d));
                        if b.parity().unwrap() * c.parity().unwrap() == 1 {
                            rhs = rhs.neg();
                        }
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn flip_squares_to_identity() {
        let v = fund_space();
        let tau = graded_flip::<HPoly>(&v, &v);
        assert_eq!(tau.mul(&tau), GradedMatrix::identity(v.tensor(&v)));
    }

    #[test]
    fn flip_odd_odd_sign() {
        // tau(v3 (x) v3) = -v3 (x) v3
        let v = fund_space();
        let tau = graded_flip::<HPoly>(&v, &v);
        assert_eq!(tau.get(8, 8), &(-HPoly::one()));
    }

    #[test]
    fn flip_all_even_is_permutation() {
        let v = SuperSpace::all_even(2);
        let tau = graded_flip::<HPoly>(&v, &v);
        let p = plain_flip::<HPoly>(&v, &v);
        assert_eq!(tau, p);
    }

    #[test]
    fn commutator_examples() {
        // [e2, f2] (both odd) is the anticommutator diag(0, 1, 1)
        let e2 = unit(1, 2);
        let f2 = unit(2, 1);
        let h2 = GradedMatrix::from_diag(
            fund_space(),
            vec![HPoly::zero(), HPoly::one(), HPoly::one()],
        );
        assert_eq!(e2.graded_commutator(&f2).unwrap(), h2);

        // [h1, e1] = 2 e1
        let h1 = GradedMatrix::from_diag(
            fund_space(),
            vec![HPoly::one(), -HPoly::one(), HPoly::zero()],
        )
        .with_parity(Some(0));
        let e1 = unit(0, 1);
        assert_eq!(
            h1.graded_commutator(&e1).unwrap(),
            e1.scale_rat(&rat_int(2))
        );

        // [x, 1] = 0
        let id = GradedMatrix::<HPoly>::identity(fund_space());
        assert!(e2.graded_commutator(&id).unwrap().is_zero());

        // undeclared parity is an error
        let no_parity = e2.clone().with_parity(None);
        assert!(matches!(
            no_parity.graded_commutator(&f2),
            Err(Error::UndeclaredParity)
        ));
    }

    #[test]
    fn series_examples() {
        // e1^2 = 0, so sqrt(1 + h^2 e1^2) = 1 and T = 1 + h E12
        let e1 = unit(0, 1);
        let arg = e1.pow(2).scale(&hmono(1, 1, 2));
        assert_eq!(
            unipotent_series(&arg, SeriesFn::SqrtOnePlus).unwrap(),
            GradedMatrix::identity(fund_space())
        );

        let t = GradedMatrix::identity(fund_space()).add(&e1.scale(&hmono(1, 1, 1)));
        assert_eq!(
            unipotent_series(&t, SeriesFn::Log).unwrap(),
            e1.scale(&hmono(1, 1, 1))
        );

        let zero = GradedMatrix::<HPoly>::zero(fund_space());
        assert_eq!(
            unipotent_series(&zero, SeriesFn::Exp).unwrap(),
            GradedMatrix::identity(fund_space())
        );
    }

    #[test]
    fn series_inverses() {
        // a strictly upper-triangular nilpotent with a couple of entries
        let mut n = GradedMatrix::<HPoly>::zero(fund_space());
        n.set(0, 1, hmono(1, 1, 1));
        n.set(1, 2, hmono(3, 2, 0));
        n.set(0, 2, hmono(-2, 1, 2));
        let exp_n = unipotent_series(&n, SeriesFn::Exp).unwrap();
        let log_exp = unipotent_series(&exp_n, SeriesFn::Log).unwrap();
        assert_eq!(log_exp, n);

        let id = GradedMatrix::identity(fund_space());
        let t = id.add(&n);
        let log_t = unipotent_series(&t, SeriesFn::Log).unwrap();
        assert_eq!(unipotent_series(&log_t, SeriesFn::Exp).unwrap(), t);

        let sqrt = unipotent_series(&n, SeriesFn::SqrtOnePlus).unwrap();
        assert_eq!(sqrt.mul(&sqrt), id.add(&n));
        assert_eq!(t.mul(&t.unipotent_inverse().unwrap()), id);
    }

    #[test]
    fn not_nilpotent_detected() {
        let id = GradedMatrix::<HPoly>::identity(fund_space());
        assert!(matches!(
            unipotent_series(&id, SeriesFn::Exp),
            Err(Error::NotNilpotent { .. })
        ));
    }

    #[test]
    fn parity_verification() {
        assert!(unit(0, 2).verify_parity()); // odd unit
        let mixed = unit(0, 2).add(&unit(0, 1));
        assert!(!mixed.with_parity(Some(1)).verify_parity());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_mul_matches_sequential() {
        let v = fund_space().tensor(&fund_space());
        let a = graded_flip(&fund_space(), &fund_space());
        let mut b = GradedMatrix::<HPoly>::identity(v);
        b.set(0, 5, hmono(2, 3, 1));
        b.set(4, 7, hmono(-1, 1, 2));
        assert_eq!(a.mul_parallel(&b), a.mul_sequential(&b));
    }
}

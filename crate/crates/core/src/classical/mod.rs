//! The classical superalgebra `sl(N|1)`: Chevalley and composite root
//! generators in the fundamental representation and its graded tensor
//! powers, plus the relation and automorphism suites.

mod suite;

pub use suite::{
    classical_automorphism_check, classical_catalog, classical_relations_suite,
    phi_image_table, PhiVariant,
};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::labels::{e, h, GeneratorLabel};
use crate::scalars::HPoly;
use crate::superlinalg::{GradedMatrix, SuperSpace};

/// Which representation a suite runs in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rep {
    Fund,
    Fund2,
    Fund3,
}

impl Rep {
    pub fn power(self) -> u32 {
        match self {
            Rep::Fund => 1,
            Rep::Fund2 => 2,
            Rep::Fund3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rep::Fund => "fund",
            Rep::Fund2 => "fund2",
            Rep::Fund3 => "fund3",
        }
    }
}

/// Generator matrices for one representation of `sl(N|1)`.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    n: u8,
    space: SuperSpace,
    entries: BTreeMap<GeneratorLabel, GradedMatrix<HPoly>>,
}

impl GeneratorTable {
    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn get(&self, l: &GeneratorLabel) -> Option<&GradedMatrix<HPoly>> {
        self.entries.get(l)
    }

    pub fn matrix(&self, l: GeneratorLabel) -> Result<&GradedMatrix<HPoly>> {
        self.entries
            .get(&l)
            .ok_or_else(|| Error::UnknownGenerator(l.to_string()))
    }

    pub fn insert(&mut self, l: GeneratorLabel, m: GradedMatrix<HPoly>) {
        self.entries.insert(l, m);
    }

    pub fn labels(&self) -> impl Iterator<Item = &GeneratorLabel> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GeneratorLabel, &GradedMatrix<HPoly>)> {
        self.entries.iter()
    }

    /// Lookup closure for expression evaluation; `(-1)^F` is always
    /// available.
    pub fn lookup(&self) -> impl Fn(&GeneratorLabel) -> Option<GradedMatrix<HPoly>> + Sync + '_ {
        move |l| match l {
            GeneratorLabel::ParityOp => {
                Some(GradedMatrix::parity_operator(self.space.clone()).with_parity(Some(0)))
            }
            _ => self.entries.get(l).cloned(),
        }
    }
}

/// Parity pattern of the fundamental representation: `(0, ..., 0, 1)`.
pub fn fundamental_space(n: u8) -> SuperSpace {
    let mut parity = vec![0u8; n as usize];
    parity.push(1);
    SuperSpace::new(parity)
}

/// The `(N+1)`-dimensional fundamental representation: every `e_ij` is the
/// matrix unit `E_ij`; Cartan generators are `h_{i,i+1} = E_ii - E_{i+1,i+1}`
/// for `i < N`, `h_{N,N+1} = E_NN + E_{N+1,N+1}`, and composite `h_ij` by
/// additivity along the path from `i` to `j`.
pub fn fundamental_generators(n: u8) -> Result<GeneratorTable> {
    if n < 2 {
        return Err(Error::InvalidN(n));
    }
    let space = fundamental_space(n);
    let dim = n as usize + 1;
    let mut entries = BTreeMap::new();

    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                let m = GradedMatrix::unit(space.clone(), i, j);
                entries.insert(e(i as u8 + 1, j as u8 + 1), m);
            }
        }
    }

    let unit = |i: usize| GradedMatrix::<HPoly>::unit(space.clone(), i, i);
    let mut simple_h = Vec::new();
    for i in 1..n {
        simple_h.push(unit(i as usize - 1).sub(&unit(i as usize)).with_parity(Some(0)));
    }
    simple_h.push(
        unit(n as usize - 1)
            .add(&unit(n as usize))
            .with_parity(Some(0)),
    );
    for i in 1..=n {
        for j in (i + 1)..=(n + 1) {
            let mut m = GradedMatrix::zero(space.clone()).with_parity(Some(0));
            for k in i..j {
                m = m.add(&simple_h[k as usize - 1]);
            }
            entries.insert(h(i, j), m);
        }
    }

    Ok(GeneratorTable { n, space, entries })
}

/// Rebuild every composite root generator from the simple ones by the
/// bracket conventions `e_ij = [e_{i,j-1}, e_{j-1,j}]` (raising) and
/// `e_ji = [e_{j,j-1}, e_{j-1,i}]` (lowering), replacing the stored
/// entries. In the fundamental representation the result coincides with
/// the matrix units; the relation suite checks this.
pub fn composite_roots(table: &GeneratorTable) -> Result<GeneratorTable> {
    let n = table.n;
    let mut out = table.clone();
    for span in 2..=n {
        for i in 1..=(n + 1 - span) {
            let j = i + span;
            let raise = out
                .matrix(e(i, j - 1))?
                .graded_commutator(out.matrix(e(j - 1, j))?)?;
            out.insert(e(i, j), raise);
            let lower = out
                .matrix(e(j, j - 1))?
                .graded_commutator(out.matrix(e(j - 1, i))?)?;
            out.insert(e(j, i), lower);
        }
    }
    Ok(out)
}

/// Lift a matrix on `V` to the iterated classical coproduct action
/// `x -> x (x) 1 + 1 (x) x` on `V^{(x) k}`, with Koszul signs.
pub fn tensor_lift(x: &GradedMatrix<HPoly>, k: u32) -> GradedMatrix<HPoly> {
    let v = x.space().clone();
    let mut acc = x.clone();
    let mut cur = v.clone();
    for _ in 1..k {
        let id_v = GradedMatrix::identity(v.clone());
        let id_cur = GradedMatrix::identity(cur.clone());
        acc = acc.graded_kron(&id_v).add(&id_cur.graded_kron(x));
        cur = cur.tensor(&v);
    }
    acc
}

/// Generator table on the `k`-fold graded tensor power.
pub fn classical_tensor_rep(table: &GeneratorTable, k: u32) -> GeneratorTable {
    assert!((1..=3).contains(&k));
    let space = table.space.tensor_power(k);
    let entries = table
        .entries
        .iter()
        .map(|(l, m)| (*l, tensor_lift(m, k)))
        .collect();
    GeneratorTable {
        n: table.n,
        space,
        entries,
    }
}

/// Table for the requested representation.
pub fn representation(n: u8, rep: Rep) -> Result<GeneratorTable> {
    let fund = fundamental_generators(n)?;
    Ok(match rep {
        Rep::Fund => fund,
        _ => classical_tensor_rep(&fund, rep.power()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_int;
    use num_traits::One;

    fn diag(table: &GeneratorTable, l: GeneratorLabel) -> Vec<i64> {
        let m = table.get(&l).unwrap();
        (0..m.dim())
            .map(|i| {
                let c = m.get(i, i).eval_at_zero();
                assert!(c.is_integer());
                c.to_integer().try_into().unwrap()
            })
            .collect()
    }

    #[test]
    fn n2_matches_stated_fundamental() {
        let t = fundamental_generators(2).unwrap();
        assert_eq!(diag(&t, h(1, 2)), vec![1, -1, 0]);
        assert_eq!(diag(&t, h(2, 3)), vec![0, 1, 1]);
        assert_eq!(diag(&t, h(1, 3)), vec![1, 0, 1]);
        let e1 = t.get(&e(1, 2)).unwrap();
        assert!(e1.get(0, 1).is_one() && e1.parity() == Some(0));
        let e2 = t.get(&e(2, 3)).unwrap();
        assert_eq!(e2.parity(), Some(1));
        let f2 = t.get(&e(3, 2)).unwrap();
        assert_eq!(f2.parity(), Some(1));
    }

    #[test]
    fn n3_distinguished_cartan() {
        let t = fundamental_generators(3).unwrap();
        assert_eq!(diag(&t, h(3, 4)), vec![0, 0, 1, 1]);
        assert_eq!(diag(&t, h(1, 4)), vec![1, 0, 0, 1]);
        assert_eq!(diag(&t, h(2, 4)), vec![0, 1, 0, 1]);
        assert_eq!(t.get(&e(2, 4)).unwrap().parity(), Some(1));
        assert_eq!(t.get(&e(2, 3)).unwrap().parity(), Some(0));
    }

    #[test]
    fn invalid_n_rejected() {
        assert!(matches!(fundamental_generators(1), Err(Error::InvalidN(1))));
    }

    #[test]
    fn composites_equal_units() {
        for n in 2..=5u8 {
            let t = fundamental_generators(n).unwrap();
            let c = composite_roots(&t).unwrap();
            for (l, m) in c.iter() {
                assert_eq!(m, t.get(l).unwrap(), "mismatch at {l} (n = {n})");
            }
        }
    }

    #[test]
    fn tensor_square_even_generator_has_no_signs() {
        let t = fundamental_generators(2).unwrap();
        let e1 = t.get(&e(1, 2)).unwrap();
        let id = GradedMatrix::identity(t.space().clone());
        let plain = e1.plain_kron(&id).add(&id.plain_kron(e1));
        assert_eq!(tensor_lift(e1, 2), plain);
    }

    #[test]
    fn tensor_square_of_long_root_squares_to_twice_kron() {
        // rho2(e_1N)^2 = 2 (e_1N (x) e_1N) since e_1N^2 = 0 in fund
        let t = fundamental_generators(2).unwrap();
        let e1 = t.get(&e(1, 2)).unwrap();
        let lifted = tensor_lift(e1, 2);
        let expected = e1.graded_kron(e1).scale_rat(&rat_int(2));
        assert_eq!(lifted.pow(2), expected);
        assert!(!lifted.pow(2).is_zero());
    }

    #[test]
    fn tensor_rep_preserves_brackets() {
        for n in [2u8, 3] {
            let t = fundamental_generators(n).unwrap();
            let labels: Vec<_> = t.labels().copied().collect();
            for a in &labels {
                for b in &labels {
                    let ma = t.get(a).unwrap();
                    let mb = t.get(b).unwrap();
                    let bracket = ma.graded_commutator(mb).unwrap();
                    let lifted_bracket = tensor_lift(
                        &bracket.with_parity(Some((a.parity(n) + b.parity(n)) % 2)),
                        2,
                    );
                    let la = tensor_lift(ma, 2);
                    let lb = tensor_lift(mb, 2);
                    assert_eq!(
                        la.graded_commutator(&lb).unwrap(),
                        lifted_bracket,
                        "bracket not preserved for [{a}, {b}] (n = {n})"
                    );
                }
            }
        }
    }
}

//! Property tests for the structural invariants that hold for whole
//! families of inputs rather than single stated values.

use proptest::prelude::*;

use sjord_core::classical::{fundamental_generators, fundamental_space};
use sjord_core::labels::GeneratorLabel;
use sjord_core::rmatrix::{
    contract, qybe_holds, rq_fundamental, stated_contracted_rh_n2, transformation_g,
};
use sjord_core::scalars::{rat, HPoly, Rational};
use sjord_core::superlinalg::{GradedMatrix, SuperSpace};

fn small_hpoly() -> impl Strategy<Value = HPoly> {
    proptest::collection::vec((-3i64..=3, 1i64..=2).prop_map(|(n, d)| rat(n, d)), 0..3)
        .prop_map(HPoly::from_coeffs)
}

fn small_matrix(space: SuperSpace) -> impl Strategy<Value = GradedMatrix<HPoly>> {
    let d = space.dim();
    proptest::collection::vec(small_hpoly(), d * d).prop_map(move |entries| {
        let mut m = GradedMatrix::zero(space.clone());
        for (k, v) in entries.into_iter().enumerate() {
            m.set(k / d, k % d, v);
        }
        m
    })
}

/// Strictly upper-triangular matrices supported on even positions
/// (`p(i) = p(j)`), so `1 + n` is an invertible even operator.
fn even_unipotent(space: SuperSpace) -> impl Strategy<Value = GradedMatrix<HPoly>> {
    let d = space.dim();
    let positions: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| i < j && space.parity(i) == space.parity(j))
        .collect();
    let space2 = space.clone();
    proptest::collection::vec(small_hpoly(), positions.len()).prop_map(move |vals| {
        let mut m = GradedMatrix::identity(space2.clone());
        for (&(i, j), v) in positions.iter().zip(vals) {
            m.set(i, j, v);
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Conjugating a Yang-Baxter solution by M (x) M for invertible even M
    /// preserves the plain Yang-Baxter identity; this is why the contracted
    /// matrix inherits it from the q-side.
    #[test]
    fn conjugation_preserves_yang_baxter(m in even_unipotent(fundamental_space(2))) {
        let v = fundamental_space(2);
        let r = stated_contracted_rh_n2();
        let mm = m.plain_kron(&m);
        let mm_inv = mm.unipotent_inverse().unwrap();
        let conj = mm_inv.mul(&r).mul(&mm);
        prop_assert!(qybe_holds(&conj, &v));
    }

    /// Graded Kronecker is associative on the nose with the row-major
    /// basis ordering.
    #[test]
    fn graded_kron_is_associative(
        a in small_matrix(fundamental_space(2)),
        b in small_matrix(fundamental_space(2)),
        c in small_matrix(fundamental_space(2)),
    ) {
        let left = a.graded_kron(&b).graded_kron(&c);
        let right = a.graded_kron(&b.graded_kron(&c));
        prop_assert_eq!(left, right);
    }
}

/// Graded Jacobi identity over every triple of classical generators.
#[test]
fn graded_jacobi_on_classical_generators() {
    let table = fundamental_generators(2).unwrap();
    let gens: Vec<(GeneratorLabel, GradedMatrix<HPoly>)> =
        table.iter().map(|(l, m)| (*l, m.clone())).collect();
    let n = 2;
    let sign = |p: u8| {
        if p == 1 {
            -Rational::from_integer(1.into())
        } else {
            Rational::from_integer(1.into())
        }
    };
    for (la, ma) in &gens {
        for (lb, mb) in &gens {
            for (lc, mc) in &gens {
                // [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)} [b,[a,c]]
                let lhs = ma
                    .graded_commutator(&mb.graded_commutator(mc).unwrap().with_parity(Some(
                        (lb.parity(n) + lc.parity(n)) % 2,
                    )))
                    .unwrap();
                let first = ma
                    .graded_commutator(mb)
                    .unwrap()
                    .with_parity(Some((la.parity(n) + lb.parity(n)) % 2))
                    .graded_commutator(mc)
                    .unwrap();
                let second = mb
                    .graded_commutator(&ma.graded_commutator(mc).unwrap().with_parity(Some(
                        (la.parity(n) + lc.parity(n)) % 2,
                    )))
                    .unwrap()
                    .scale_rat(&sign(la.parity(n) * lb.parity(n)));
                assert_eq!(lhs, first.add(&second), "jacobi fails on [{la},[{lb},{lc}]]");
            }
        }
    }
}

/// Contraction is the identity on the identity matrix and reproduces the
/// stated matrix from the stated input.
#[test]
fn contraction_endpoints() {
    let gmat = transformation_g(2).unwrap();
    let rq = rq_fundamental(2).unwrap();
    assert_eq!(
        contract(&rq, &gmat).unwrap(),
        stated_contracted_rh_n2()
    );
    let id = GradedMatrix::identity(rq.space().clone());
    assert_eq!(
        contract(&id, &gmat).unwrap(),
        GradedMatrix::identity(rq.space().clone())
    );
}

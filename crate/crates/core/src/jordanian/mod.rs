//! The nonlinear deformation map: from a classical generator table (any
//! representation where `e_1N` is nilpotent) to the deformed generators
//! `T^{+-1}`, `T^{+-1/2}`, `H_ij`, `E_ij` over `Q[h]`, together with the
//! deformed relation suites, the specialization cross-check, the algebra
//! automorphism check and the commutator-table artifact.

mod catalog;
mod suite;

pub use catalog::{prop1_catalog, prop5_catalog, prop6_catalog, sl2_sector_catalog};
pub use suite::{
    automorphism_phi_check, deformed_relations_suite, deformed_suite_for,
    phi_deformed_images, specialization_crosscheck,
};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classical::{representation, GeneratorTable, Rep};
use crate::error::{Error, Result};
use crate::labels::{e, h, GeneratorLabel};
use crate::report::Check;
use crate::scalars::{hmono, HPoly, Rational};
use crate::superlinalg::{unipotent_series, GradedMatrix, SeriesFn};

/// Which reading of the general-N deformation map to apply.
///
/// The general display has two slips that its own `n = 2, 3`
/// specializations expose: the lowering correction `E_ji` is missing the
/// factor `e_1N` that the explicit low-rank formulas carry, and the
/// selector on `E_{N+1,i}` must be `delta_i1` (as in the low-rank formulas
/// and the coproducts), not `delta_iN`. `Corrected` applies both fixes;
/// `Stated` is kept so the cross-check can exhibit the difference.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapVariant {
    Stated,
    Corrected,
}

/// Deformed generator matrices for one representation, kept next to their
/// classical source so limit checks can compare against it.
#[derive(Clone, Debug)]
pub struct DeformedTable {
    n: u8,
    rep: Rep,
    classical: GeneratorTable,
    entries: BTreeMap<GeneratorLabel, GradedMatrix<HPoly>>,
}

impl DeformedTable {
    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn rep(&self) -> Rep {
        self.rep
    }

    pub fn space(&self) -> &crate::superlinalg::SuperSpace {
        self.classical.space()
    }

    pub fn classical(&self) -> &GeneratorTable {
        &self.classical
    }

    pub fn get(&self, l: &GeneratorLabel) -> Option<&GradedMatrix<HPoly>> {
        self.entries.get(l)
    }

    pub fn matrix(&self, l: GeneratorLabel) -> Result<&GradedMatrix<HPoly>> {
        self.entries
            .get(&l)
            .ok_or_else(|| Error::UnknownGenerator(l.to_string()))
    }

    pub fn labels(&self) -> impl Iterator<Item = &GeneratorLabel> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GeneratorLabel, &GradedMatrix<HPoly>)> {
        self.entries.iter()
    }

    pub fn lookup(&self) -> impl Fn(&GeneratorLabel) -> Option<GradedMatrix<HPoly>> + Sync + '_ {
        move |l| match l {
            GeneratorLabel::ParityOp => Some(
                GradedMatrix::parity_operator(self.classical.space().clone())
                    .with_parity(Some(0)),
            ),
            _ => self.entries.get(l).cloned(),
        }
    }

    /// `X_1 = h^{-1} log T`, exact since `log T` is divisible by `h`.
    pub fn log_t_over_h(&self) -> Result<GradedMatrix<HPoly>> {
        let t = self.matrix(GeneratorLabel::T(1))?;
        let log = unipotent_series(t, SeriesFn::Log)?;
        log.try_map(|r, c, p| {
            p.div_exact_var().map_err(|_| {
                Error::DivisibilityFailure(format!(
                    "log T entry ({}, {}) not divisible by h",
                    r + 1,
                    c + 1
                ))
            })
        })
    }
}

/// Every deformed generator label for `sl(N|1)`.
pub fn deformed_labels(n: u8) -> Vec<GeneratorLabel> {
    let mut v = vec![
        GeneratorLabel::T(1),
        GeneratorLabel::T(-1),
        GeneratorLabel::THalf(1),
        GeneratorLabel::THalf(-1),
        h(1, n),
        e(n, 1),
    ];
    for i in 1..=n {
        for j in (i + 1)..=n {
            if (i, j) != (1, n) {
                v.push(h(i, j));
                v.push(e(i, j));
                v.push(e(j, i));
            }
        }
        v.push(h(i, n + 1));
        v.push(e(i, n + 1));
        v.push(e(n + 1, i));
    }
    v
}

/// Apply the deformation map with the documented corrections.
pub fn deform(table: &GeneratorTable) -> Result<DeformedTable> {
    deform_with(table, MapVariant::Corrected)
}

pub fn deform_with(table: &GeneratorTable, variant: MapVariant) -> Result<DeformedTable> {
    let n = table.n();
    let space = table.space().clone();
    let id = GradedMatrix::identity(space.clone());
    let h2 = hmono(1, 1, 2);
    let h2_half = hmono(1, 2, 2);
    let h2_quarter = hmono(1, 4, 2);

    let e1n = table.matrix(e(1, n))?;
    let h1n = table.matrix(h(1, n))?;
    let sq = unipotent_series(&e1n.pow(2).scale(&h2), SeriesFn::SqrtOnePlus)?;
    let t_pos = sq.add(&e1n.scale(&hmono(1, 1, 1))).with_parity(Some(0));
    let t_neg = sq.sub(&e1n.scale(&hmono(1, 1, 1))).with_parity(Some(0));
    let t_half_pos =
        unipotent_series(&t_pos.sub(&id), SeriesFn::SqrtOnePlus)?.with_parity(Some(0));
    let t_half_neg =
        unipotent_series(&t_neg.sub(&id), SeriesFn::SqrtOnePlus)?.with_parity(Some(0));

    let mut entries = BTreeMap::new();
    entries.insert(GeneratorLabel::T(1), t_pos);
    entries.insert(GeneratorLabel::T(-1), t_neg);
    entries.insert(GeneratorLabel::THalf(1), t_half_pos);
    entries.insert(GeneratorLabel::THalf(-1), t_half_neg);
    entries.insert(h(1, n), sq.mul(h1n).with_parity(Some(0)));

    // 2 h_1N + 1 appears in every quarter-strength correction
    let two_h_plus_one = h1n.scale_rat(&Rational::from_integer(2.into())).add(&id);
    let e1n_sq_h1n = e1n.pow(2).mul(h1n);

    let en1 = table.matrix(e(n, 1))?;
    let correction = e1n.mul(&h1n.pow(2).sub(&id)).scale(&h2_quarter);
    entries.insert(e(n, 1), en1.sub(&correction).with_parity(Some(0)));

    for i in 1..=n {
        for j in (i + 1)..=n {
            if (i, j) == (1, n) {
                continue;
            }
            let delta = i64::from(i == 1) + i64::from(j == n);
            let mut hij = table.matrix(h(i, j))?.clone();
            if delta != 0 {
                hij = hij.add(&e1n_sq_h1n.scale(&h2_half).scale_rat(&Rational::from_integer(delta.into())));
            }
            entries.insert(h(i, j), hij.with_parity(Some(0)));

            entries.insert(e(i, j), table.matrix(e(i, j))?.clone());

            // E_ji = e_ji + (h^2/4)(delta_i1 e_jN - delta_jN e_1i) [e_1N] (2 h_1N + 1)
            let mut eji = table.matrix(e(j, i))?.clone();
            let factor = if i == 1 {
                Some((table.matrix(e(j, n))?.clone(), 1))
            } else if j == n {
                Some((table.matrix(e(1, i))?.clone(), -1))
            } else {
                None
            };
            if let Some((f, sign)) = factor {
                let mut corr = match variant {
                    MapVariant::Corrected => f.mul(e1n),
                    MapVariant::Stated => f,
                };
                corr = corr.mul(&two_h_plus_one).scale(&h2_quarter);
                eji = if sign == 1 {
                    eji.add(&corr)
                } else {
                    eji.sub(&corr)
                };
            }
            entries.insert(e(j, i), eji.with_parity(Some(0)));
        }
    }

    for i in 1..=n {
        let delta = i64::from(i == 1) - i64::from(i == n);
        let mut hi = table.matrix(h(i, n + 1))?.clone();
        if delta != 0 {
            hi = hi.add(&e1n_sq_h1n.scale(&h2_half).scale_rat(&Rational::from_integer(delta.into())));
        }
        entries.insert(h(i, n + 1), hi.with_parity(Some(0)));

        let mut raise = table.matrix(e(i, n + 1))?.clone();
        if i == n {
            let corr = table
                .matrix(e(1, n + 1))?
                .mul(e1n)
                .mul(&two_h_plus_one)
                .scale(&h2_quarter);
            raise = raise.sub(&corr);
        }
        entries.insert(e(i, n + 1), raise.with_parity(Some(1)));

        let selector = match variant {
            MapVariant::Corrected => i == 1,
            MapVariant::Stated => i == n,
        };
        let mut lower = table.matrix(e(n + 1, i))?.clone();
        if selector {
            let corr = table
                .matrix(e(n + 1, n))?
                .mul(e1n)
                .mul(&two_h_plus_one)
                .scale(&h2_quarter);
            lower = lower.add(&corr);
        }
        entries.insert(e(n + 1, i), lower.with_parity(Some(1)));
    }

    Ok(DeformedTable {
        n,
        rep: Rep::Fund, // adjusted by deformed_representation when lifting
        classical: table.clone(),
        entries,
    })
}

/// Classical table for the requested representation, deformed.
pub fn deformed_representation(n: u8, rep: Rep) -> Result<DeformedTable> {
    let table = representation(n, rep)?;
    let mut dt = deform(&table)?;
    dt.rep = rep;
    Ok(dt)
}

/// `h = 0` evaluation of every deformed generator against its classical
/// source (`T`-family against the identity).
pub fn h0_checks(dt: &DeformedTable) -> Vec<Check> {
    let mut checks = Vec::new();
    let id = GradedMatrix::<HPoly>::identity(dt.space().clone());
    for (l, m) in dt.iter() {
        let at0 = m.map(|p| HPoly::constant(p.eval_at_zero()));
        let expected = match l {
            GeneratorLabel::T(_) | GeneratorLabel::THalf(_) => Some(&id),
            GeneratorLabel::H(_, _) | GeneratorLabel::E(_, _) => dt.classical.get(l),
            GeneratorLabel::ParityOp => None,
        };
        match expected {
            Some(exp) => checks.push(Check::from_bool(format!("h0:{l}"), &at0 == exp)),
            None => checks.push(Check::fail_msg(format!("h0:{l}"), "no classical source")),
        }
    }
    checks
}

/// Full pairwise graded-commutator table in the table's representation,
/// as a serializable artifact. Pairs are ordered; entries are 1-based
/// `(row, col, polynomial)` triples of the bracket matrix.
#[derive(Clone, Debug, Serialize)]
pub struct CommutatorTable {
    pub n: u8,
    pub rep: String,
    pub generators: Vec<String>,
    pub pairs: Vec<CommutatorEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorEntry {
    pub left: String,
    pub right: String,
    pub bracket: Vec<(usize, usize, String)>,
}

pub fn commutator_table(dt: &DeformedTable) -> Result<CommutatorTable> {
    let labels: Vec<GeneratorLabel> = dt.labels().copied().collect();
    let pairs: Vec<(GeneratorLabel, GeneratorLabel)> = labels
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| labels[i..].iter().map(move |&b| (a, b)))
        .collect();

    let compute = |&(a, b): &(GeneratorLabel, GeneratorLabel)| -> Result<CommutatorEntry> {
        let bracket = dt.matrix(a)?.graded_commutator(dt.matrix(b)?)?;
        Ok(CommutatorEntry {
            left: a.to_string(),
            right: b.to_string(),
            bracket: bracket
                .nonzero_entries()
                .into_iter()
                .map(|(r, c, p)| (r, c, p.render("h")))
                .collect(),
        })
    };

    #[cfg(feature = "parallel")]
    let entries: Result<Vec<_>> = {
        use rayon::prelude::*;
        pairs.par_iter().map(compute).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let entries: Result<Vec<_>> = pairs.iter().map(compute).collect();

    Ok(CommutatorTable {
        n: dt.n,
        rep: dt.rep.name().to_string(),
        generators: labels.iter().map(|l| l.to_string()).collect(),
        pairs: entries?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::fundamental_generators;
    use num_traits::One;

    #[test]
    fn n2_fundamental_deformation_is_matrix_units_plus_t() {
        let fund = fundamental_generators(2).unwrap();
        let dt = deform(&fund).unwrap();
        // T = 1 + h E12
        let t = dt.matrix(GeneratorLabel::T(1)).unwrap();
        let expected = GradedMatrix::identity(fund.space().clone())
            .add(&fund.matrix(e(1, 2)).unwrap().scale(&hmono(1, 1, 1)));
        assert_eq!(t, &expected);
        // F_1 = f_1 exactly: e_1 (h_1^2 - 1) vanishes here
        assert_eq!(
            dt.matrix(e(2, 1)).unwrap(),
            fund.matrix(e(2, 1)).unwrap()
        );
        // the fermionic corrections vanish in the fundamental
        for l in [e(2, 3), e(3, 1), e(3, 2), e(1, 3)] {
            assert_eq!(dt.matrix(l).unwrap(), fund.matrix(l).unwrap());
        }
    }

    #[test]
    fn n3_fundamental_h12_undeformed() {
        let fund = fundamental_generators(3).unwrap();
        let dt = deform(&fund).unwrap();
        assert_eq!(dt.matrix(h(1, 2)).unwrap(), fund.matrix(h(1, 2)).unwrap());
    }

    #[test]
    fn h0_limit_recovers_classical() {
        for n in 2..=5u8 {
            for rep in [Rep::Fund, Rep::Fund2] {
                let dt = deformed_representation(n, rep).unwrap();
                for c in h0_checks(&dt) {
                    assert_eq!(
                        c.status,
                        crate::report::Status::Pass,
                        "n = {n} {:?}: {}",
                        rep,
                        c.id
                    );
                }
            }
        }
    }

    #[test]
    fn t_family_invariants() {
        for n in 2..=5u8 {
            for rep in [Rep::Fund, Rep::Fund2] {
                let dt = deformed_representation(n, rep).unwrap();
                let id = GradedMatrix::identity(dt.space().clone());
                let t = dt.matrix(GeneratorLabel::T(1)).unwrap();
                let tinv = dt.matrix(GeneratorLabel::T(-1)).unwrap();
                let th = dt.matrix(GeneratorLabel::THalf(1)).unwrap();
                assert_eq!(t.mul(tinv), id);
                assert_eq!(tinv.mul(t), id);
                assert_eq!(th.mul(th), *t);
            }
        }
    }

    #[test]
    fn label_enumeration_matches_table() {
        for n in 2..=5u8 {
            let dt = deformed_representation(n, Rep::Fund).unwrap();
            let mut listed = deformed_labels(n);
            listed.sort();
            let stored: Vec<GeneratorLabel> = dt.labels().copied().collect();
            assert_eq!(listed, stored, "n = {n}");
        }
    }

    #[test]
    fn log_t_over_h_is_exact() {
        let dt = deformed_representation(2, Rep::Fund).unwrap();
        let x1 = dt.log_t_over_h().unwrap();
        // in the fundamental, log T = h E12 exactly
        let mut expected = GradedMatrix::zero(dt.space().clone());
        expected.set(0, 1, HPoly::one());
        assert_eq!(x1, expected);
    }
}

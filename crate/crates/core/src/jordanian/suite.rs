//! Verification suites over deformed tables: the stated commutator lists,
//! the specialization cross-check of the general map against the explicit
//! low-rank formulas, and the deformed algebra automorphism.

use std::collections::BTreeMap;

use crate::classical::{phi_image_table, GeneratorTable, PhiVariant, Rep};
use crate::error::Result;
use crate::jordanian::{
    deform_with, deformed_representation, h0_checks, prop1_catalog, prop5_catalog,
    prop6_catalog, sl2_sector_catalog, DeformedTable, MapVariant,
};
use crate::labels::{e, h, GeneratorLabel};
use crate::relations::{check_relation, run_relations, Relation};
use crate::report::{Check, CheckReport, Status, Witness};
use crate::scalars::{hmono, HPoly, Rational};
use crate::superlinalg::{unipotent_series, GradedMatrix, SeriesFn};

fn catalogs_for(n: u8) -> Vec<Relation> {
    match n {
        2 => {
            let mut v = sl2_sector_catalog(2);
            v.extend(prop1_catalog());
            v
        }
        3 => {
            let mut v = prop5_catalog();
            v.extend(prop6_catalog());
            v
        }
        _ => sl2_sector_catalog(n),
    }
}

/// Check every stated relation as an exact matrix identity over `Q[h]` in
/// the table's representation, then the `h = 0` limits of all generators.
pub fn deformed_relations_suite(dt: &DeformedTable, allow_variants: bool) -> CheckReport {
    let mut report = CheckReport::new("deformed", dt.n(), dt.rep().name());
    let lookup = dt.lookup();
    report.extend(run_relations(
        &catalogs_for(dt.n()),
        dt.space(),
        &lookup,
        allow_variants,
    ));
    report.extend(h0_checks(dt));
    report
}

fn sq_factor(table: &GeneratorTable) -> Result<GradedMatrix<HPoly>> {
    let n = table.n();
    let e1n = table.matrix(e(1, n))?;
    unipotent_series(&e1n.pow(2).scale(&hmono(1, 1, 2)), SeriesFn::SqrtOnePlus)
}

/// quarter-strength correction `(h^2/4) a b (2 h_ref + 1)`
fn quarter(
    a: &GradedMatrix<HPoly>,
    b: &GradedMatrix<HPoly>,
    h_ref: &GradedMatrix<HPoly>,
) -> GradedMatrix<HPoly> {
    let id = GradedMatrix::identity(a.space().clone());
    let two_h_plus_one = h_ref.scale_rat(&Rational::from_integer(2.into())).add(&id);
    a.mul(b).mul(&two_h_plus_one).scale(&hmono(1, 4, 2))
}

/// half-strength Cartan correction `(h^2/2) e^2 h_ref`
fn half(e1n: &GradedMatrix<HPoly>, h_ref: &GradedMatrix<HPoly>) -> GradedMatrix<HPoly> {
    e1n.pow(2).mul(h_ref).scale(&hmono(1, 2, 2))
}

/// The explicit rank-2 deformation formulas, evaluated on a classical table.
fn explicit_n2(
    table: &GeneratorTable,
) -> Result<BTreeMap<GeneratorLabel, GradedMatrix<HPoly>>> {
    let sq = sq_factor(table)?;
    let e1 = table.matrix(e(1, 2))?;
    let h1 = table.matrix(h(1, 2))?;
    let id = GradedMatrix::identity(table.space().clone());
    let mut m = BTreeMap::new();
    m.insert(
        GeneratorLabel::T(1),
        sq.add(&e1.scale(&hmono(1, 1, 1))),
    );
    m.insert(
        GeneratorLabel::T(-1),
        sq.sub(&e1.scale(&hmono(1, 1, 1))),
    );
    m.insert(h(1, 2), sq.mul(h1));
    m.insert(
        e(2, 1),
        table
            .matrix(e(2, 1))?
            .sub(&e1.mul(&h1.pow(2).sub(&id)).scale(&hmono(1, 4, 2))),
    );
    m.insert(h(2, 3), table.matrix(h(2, 3))?.sub(&half(e1, h1)));
    m.insert(
        e(2, 3),
        table
            .matrix(e(2, 3))?
            .sub(&quarter(e1, table.matrix(e(1, 3))?, h1)),
    );
    m.insert(e(3, 2), table.matrix(e(3, 2))?.clone());
    m.insert(h(1, 3), table.matrix(h(1, 3))?.add(&half(e1, h1)));
    m.insert(e(1, 3), table.matrix(e(1, 3))?.clone());
    m.insert(
        e(3, 1),
        table
            .matrix(e(3, 1))?
            .add(&quarter(e1, table.matrix(e(3, 2))?, h1)),
    );
    Ok(m)
}

/// The explicit rank-3 deformation formulas.
fn explicit_n3(
    table: &GeneratorTable,
) -> Result<BTreeMap<GeneratorLabel, GradedMatrix<HPoly>>> {
    let sq = sq_factor(table)?;
    let e13 = table.matrix(e(1, 3))?;
    let h13 = table.matrix(h(1, 3))?;
    let id = GradedMatrix::identity(table.space().clone());
    let mut m = BTreeMap::new();
    m.insert(GeneratorLabel::T(1), sq.add(&e13.scale(&hmono(1, 1, 1))));
    m.insert(GeneratorLabel::T(-1), sq.sub(&e13.scale(&hmono(1, 1, 1))));
    m.insert(h(1, 3), sq.mul(h13));
    m.insert(
        e(3, 1),
        table
            .matrix(e(3, 1))?
            .sub(&e13.mul(&h13.pow(2).sub(&id)).scale(&hmono(1, 4, 2))),
    );
    m.insert(h(1, 2), table.matrix(h(1, 2))?.add(&half(e13, h13)));
    m.insert(e(1, 2), table.matrix(e(1, 2))?.clone());
    m.insert(
        e(2, 1),
        table
            .matrix(e(2, 1))?
            .add(&quarter(table.matrix(e(2, 3))?, e13, h13)),
    );
    m.insert(h(2, 3), table.matrix(h(2, 3))?.add(&half(e13, h13)));
    m.insert(e(2, 3), table.matrix(e(2, 3))?.clone());
    m.insert(
        e(3, 2),
        table
            .matrix(e(3, 2))?
            .sub(&quarter(table.matrix(e(1, 2))?, e13, h13)),
    );
    m.insert(h(3, 4), table.matrix(h(3, 4))?.sub(&half(e13, h13)));
    m.insert(
        e(3, 4),
        table
            .matrix(e(3, 4))?
            .sub(&quarter(e13, table.matrix(e(1, 4))?, h13)),
    );
    m.insert(e(4, 3), table.matrix(e(4, 3))?.clone());
    m.insert(h(2, 4), table.matrix(h(2, 4))?.clone());
    m.insert(e(2, 4), table.matrix(e(2, 4))?.clone());
    m.insert(e(4, 2), table.matrix(e(4, 2))?.clone());
    m.insert(h(1, 4), table.matrix(h(1, 4))?.add(&half(e13, h13)));
    m.insert(e(1, 4), table.matrix(e(1, 4))?.clone());
    m.insert(
        e(4, 1),
        table
            .matrix(e(4, 1))?
            .add(&quarter(e13, table.matrix(e(4, 3))?, h13)),
    );
    Ok(m)
}

fn display_deviation_note(n: u8, l: &GeneratorLabel) -> String {
    match l {
        GeneratorLabel::E(i, j) if *i == n + 1 || *j == n + 1 => {
            "general display selector delta_iN on E_{N+1,i} read as delta_i1 \
             (fixed by the explicit low-rank formulas and the coproducts)"
                .into()
        }
        _ => "general display is missing the factor e_1N in the lowering \
              correction (present in the explicit low-rank formulas)"
            .into(),
    }
}

/// Compare the general-map specialization at `n = 2, 3` with the explicit
/// low-rank formulas, entry by entry, in the fundamental representation and
/// its tensor square. Commuting-factor reorderings are resolved by actual
/// matrix equality. Sites where the literal general display deviates are
/// reported as variant-passes with the correction note.
pub fn specialization_crosscheck(n: u8) -> Result<CheckReport> {
    let mut report = CheckReport::new("crosscheck", n, "fund+fund2");
    for rep in [Rep::Fund, Rep::Fund2] {
        let table = crate::classical::representation(n, rep)?;
        let corrected = deform_with(&table, MapVariant::Corrected)?;
        let stated = deform_with(&table, MapVariant::Stated)?;
        let explicit = match n {
            2 => explicit_n2(&table)?,
            3 => explicit_n3(&table)?,
            _ => {
                return Err(crate::error::Error::Unsupported(format!(
                    "explicit formulas only stated for N = 2, 3 (got {n})"
                )))
            }
        };
        for (l, expected) in &explicit {
            let id = format!("spec:{}:{l}", rep.name());
            let lit = stated.matrix(*l)?;
            let cor = corrected.matrix(*l)?;
            if lit == expected {
                report.push(Check::pass(id));
            } else if cor == expected {
                report.push(Check::variant_pass(id, display_deviation_note(n, l)));
            } else {
                let w = cor.first_difference(expected).map(|(r, c)| Witness {
                    row: r + 1,
                    col: c + 1,
                    lhs: cor.get(r, c).render("h"),
                    rhs: expected.get(r, c).render("h"),
                });
                report.push(Check::fail(id, w));
            }
        }
    }
    Ok(report)
}

/// Images of the deformed generators under the algebra automorphism,
/// computed by twisting the classical table and re-applying the deformation
/// map (the automorphism commutes with the nonlinear map by construction).
pub fn phi_deformed_images(
    dt: &DeformedTable,
    variant: PhiVariant,
) -> Result<BTreeMap<GeneratorLabel, GradedMatrix<HPoly>>> {
    let twisted = phi_image_table(dt.classical(), variant)?;
    let deformed = deform_with(&twisted, MapVariant::Corrected)?;
    Ok(deformed.iter().map(|(l, m)| (*l, m.clone())).collect())
}

/// Substitute the automorphism images into every deformed relation (in the
/// form that holds) and verify the relation is preserved; also checks the
/// stated image list for `n = 2`, involutivity, and the `h = 0` reduction
/// to the classical automorphism.
pub fn automorphism_phi_check(dt: &DeformedTable, allow_variants: bool) -> Result<CheckReport> {
    let n = dt.n();
    let mut report = CheckReport::new("automorphism", n, dt.rep().name());
    let stated_images = phi_deformed_images(dt, PhiVariant::Stated)?;
    let corrected_images = phi_deformed_images(dt, PhiVariant::Corrected)?;
    let space = dt.space().clone();
    let parity = GradedMatrix::parity_operator(space.clone()).with_parity(Some(0));
    let look = |images: &BTreeMap<GeneratorLabel, GradedMatrix<HPoly>>| {
        let images = images.clone();
        let parity = parity.clone();
        move |l: &GeneratorLabel| match l {
            GeneratorLabel::ParityOp => Some(parity.clone()),
            _ => images.get(l).cloned(),
        }
    };
    let stated_lookup = look(&stated_images);
    let corrected_lookup = look(&corrected_images);

    if n == 2 {
        // the stated image list: T, F_1, H_1 fixed; E_2 -> F_3, F_2 -> -E_3,
        // H_2 -> -H_3, E_3 -> -F_2, F_3 -> E_2, H_3 -> -H_2
        let image_list: Vec<(GeneratorLabel, i64, GeneratorLabel)> = vec![
            (GeneratorLabel::T(1), 1, GeneratorLabel::T(1)),
            (GeneratorLabel::T(-1), 1, GeneratorLabel::T(-1)),
            (e(2, 1), 1, e(2, 1)),
            (h(1, 2), 1, h(1, 2)),
            (e(2, 3), 1, e(3, 1)),
            (e(3, 2), -1, e(1, 3)),
            (h(2, 3), -1, h(1, 3)),
            (e(1, 3), -1, e(3, 2)),
            (e(3, 1), 1, e(2, 3)),
            (h(1, 3), -1, h(2, 3)),
        ];
        for (src, sign, dst) in &image_list {
            let got = &stated_images[src];
            let want = dt.matrix(*dst)?;
            let want = if *sign == 1 { want.clone() } else { want.neg() };
            report.push(Check::from_bool(format!("Prop2:image:{src}"), got == &want));
        }
        // involution on the generators
        let twisted = phi_image_table(dt.classical(), PhiVariant::Stated)?;
        let twice = phi_image_table(&twisted, PhiVariant::Stated)?;
        let squared = deform_with(&twice, MapVariant::Corrected)?;
        for (l, m) in squared.iter() {
            report.push(Check::from_bool(
                format!("Prop2:squared:{l}"),
                m == dt.matrix(*l)?,
            ));
        }
    }

    // h = 0: the deformed automorphism reduces to the classical one
    let classical_images = phi_image_table(
        dt.classical(),
        if n == 2 {
            PhiVariant::Stated
        } else {
            PhiVariant::Corrected
        },
    )?;
    for (l, m) in &match n {
        2 => stated_images.clone(),
        _ => corrected_images.clone(),
    } {
        let at0 = m.map(|p| HPoly::constant(p.eval_at_zero()));
        let expected = match l {
            GeneratorLabel::T(_) | GeneratorLabel::THalf(_) => {
                GradedMatrix::identity(space.clone())
            }
            _ => classical_images.matrix(*l)?.clone(),
        };
        report.push(Check::from_bool(format!("Phi:h0:{l}"), at0 == expected));
    }

    let table_lookup = dt.lookup();
    for rel in catalogs_for(n) {
        let id = format!("Phi:{}", rel.id);
        let Some((lhs, rhs)) = rel.resolved_form(&space, &table_lookup) else {
            report.push(Check::fail_msg(id, "base relation does not hold"));
            continue;
        };
        let resolved = Relation::new(&id, lhs, rhs);
        let first = check_relation(&resolved, &space, &stated_lookup, false);
        if first.status == Status::Pass || !allow_variants {
            report.push(first);
            continue;
        }
        let second = check_relation(&resolved, &space, &corrected_lookup, false);
        if second.status == Status::Pass {
            report.push(Check::variant_pass(
                id,
                "phi images corrected: e_32 -> e_21, e_43 -> -e_14",
            ));
        } else {
            report.push(first);
        }
    }
    Ok(report)
}

/// Convenience: run the deformed suite for `n` in a representation.
pub fn deformed_suite_for(n: u8, rep: Rep, allow_variants: bool) -> Result<CheckReport> {
    let dt = deformed_representation(n, rep)?;
    Ok(deformed_relations_suite(&dt, allow_variants))
}

//! Relation catalog and verification suites for the classical algebra:
//! Chevalley/Serre relations, the all-pairs matrix-unit bracket identity,
//! parity-operator consistency, and the automorphism substitution check.

use std::collections::BTreeMap;

use crate::classical::{classical_tensor_rep, composite_roots, tensor_lift, GeneratorTable, Rep};
use crate::error::{Error, Result};
use crate::expr::{comm, commg, g, Expr};
use crate::labels::{e, h, GeneratorLabel};
use crate::relations::{check_relation, run_relations, Relation};
use crate::report::{Check, CheckReport, Status};
use crate::superlinalg::GradedMatrix;

fn cartan(n: u8, i: u8, j: u8) -> i64 {
    if i == j {
        if i < n {
            2
        } else {
            0
        }
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// All classical relations for `sl(N|1)`: the Chevalley/Serre presentation
/// on simple roots plus the graded bracket identity
/// `[e_ij, e_kl] = d_jk e_il - (-1)^{deg deg} d_li e_kj` over every pair of
/// root generators.
pub fn classical_catalog(n: u8) -> Vec<Relation> {
    let mut rels = Vec::new();
    let simple_e = |i: u8| e(i, i + 1);
    let simple_f = |i: u8| e(i + 1, i);
    let simple_h = |i: u8| h(i, i + 1);

    for i in 1..=n {
        for j in 1..=n {
            if i < j {
                rels.push(Relation::new(
                    format!("chevalley:[h{i},h{j}]"),
                    commg(n, simple_h(i), simple_h(j)),
                    Expr::zero(),
                ));
            }
            let a = cartan(n, i, j);
            rels.push(Relation::new(
                format!("chevalley:[h{i},e{j}]"),
                commg(n, simple_h(i), simple_e(j)),
                num(a) * g(simple_e(j)),
            ));
            rels.push(Relation::new(
                format!("chevalley:[h{i},f{j}]"),
                commg(n, simple_h(i), simple_f(j)),
                num(-a) * g(simple_f(j)),
            ));
            let rhs = if i == j {
                g(simple_h(i))
            } else {
                Expr::zero()
            };
            rels.push(Relation::new(
                format!("chevalley:[e{i},f{j}]"),
                commg(n, simple_e(i), simple_f(j)),
                rhs,
            ));
        }
    }

    rels.push(Relation::new(
        format!("serre:e{n}^2"),
        g(simple_e(n)).pow(2),
        Expr::zero(),
    ));
    rels.push(Relation::new(
        format!("serre:f{n}^2"),
        g(simple_f(n)).pow(2),
        Expr::zero(),
    ));
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) == 1 {
                rels.push(Relation::new(
                    format!("serre:[e{i},[e{i},e{j}]]"),
                    comm(n, g(simple_e(i)), commg(n, simple_e(i), simple_e(j))),
                    Expr::zero(),
                ));
                rels.push(Relation::new(
                    format!("serre:[f{i},[f{i},f{j}]]"),
                    comm(n, g(simple_f(i)), commg(n, simple_f(i), simple_f(j))),
                    Expr::zero(),
                ));
            } else if i.abs_diff(j) >= 2 {
                rels.push(Relation::new(
                    format!("serre:[e{i},e{j}]"),
                    commg(n, simple_e(i), simple_e(j)),
                    Expr::zero(),
                ));
            }
        }
    }

    let roots = root_labels(n);
    for &(i, j) in &roots {
        for &(k, l) in &roots {
            rels.push(Relation::new(
                format!("gl:[E_{i}{j},E_{k}{l}]"),
                commg(n, e(i, j), e(k, l)),
                gl_bracket_rhs(n, i, j, k, l),
            ));
        }
    }

    rels
}

fn num(a: i64) -> Expr {
    crate::expr::num(a, 1)
}

fn root_labels(n: u8) -> Vec<(u8, u8)> {
    let mut v = Vec::new();
    for i in 1..=(n + 1) {
        for j in 1..=(n + 1) {
            if i != j {
                v.push((i, j));
            }
        }
    }
    v
}

/// Right-hand side of `[e_ij, e_kl]` expressed through table generators.
fn gl_bracket_rhs(n: u8, i: u8, j: u8, k: u8, l: u8) -> Expr {
    let sign = if e(i, j).parity(n) * e(k, l).parity(n) == 1 {
        -1
    } else {
        1
    };
    if j == k && l == i {
        // e_ii - (-1)^{deg deg} e_jj, a Cartan combination
        return if i < j {
            g(h(i, j))
        } else if sign == -1 {
            // i > j and both odd: e_ii + e_jj = h_{j,i}
            g(h(j, i))
        } else {
            -g(h(j, i))
        };
    }
    let mut rhs = Expr::zero();
    if j == k {
        rhs = rhs + g(e(i, l));
    }
    if l == i {
        let term = g(e(k, j));
        rhs = if sign == 1 { rhs - term } else { rhs + term };
    }
    rhs
}

/// Verify the classical relations as exact matrix identities in the given
/// representation; also checks composite-bracket consistency and the
/// parity-operator (anti)commutation pattern.
pub fn classical_relations_suite(fund: &GeneratorTable, rep: Rep) -> Result<CheckReport> {
    let n = fund.n();
    let table = match rep {
        Rep::Fund => fund.clone(),
        _ => classical_tensor_rep(fund, rep.power()),
    };
    let mut report = CheckReport::new("classical", n, rep.name());
    let lookup = table.lookup();

    report.extend(run_relations(
        &classical_catalog(n),
        table.space(),
        &lookup,
        true,
    ));

    let rebuilt = composite_roots(&table)?;
    for (l, m) in rebuilt.iter() {
        if let GeneratorLabel::E(i, j) = l {
            if i.abs_diff(*j) >= 2 {
                report.push(Check::from_bool(
                    format!("composite:{l}"),
                    m == table.matrix(*l)?,
                ));
            }
        }
    }

    let pf = GradedMatrix::parity_operator(table.space().clone());
    for (l, m) in table.iter() {
        let conj = pf.mul(m).mul(&pf);
        let expected = if l.parity(n) == 0 { m.clone() } else { m.neg() };
        report.push(Check::from_bool(format!("parityop:{l}"), conj == expected));
    }

    if rep != Rep::Fund {
        let labels: Vec<_> = fund.labels().copied().collect();
        for a in &labels {
            for b in &labels {
                let bracket = fund
                    .matrix(*a)?
                    .graded_commutator(fund.matrix(*b)?)?
                    .with_parity(Some((a.parity(n) + b.parity(n)) % 2));
                let ok = table.matrix(*a)?.graded_commutator(table.matrix(*b)?)?
                    == tensor_lift(&bracket, rep.power());
                report.push(Check::from_bool(format!("lift:[{a},{b}]"), ok));
            }
        }
    }

    Ok(report)
}

/// Which reading of the automorphism data to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiVariant {
    /// The image list exactly as displayed.
    Stated,
    /// Documented corrections for `n = 3`: the displayed list repeats
    /// `E_12` where the flip forces `phi(e_32) = e_21`, and the fermionic
    /// lowering image needs the sign `phi(e_43) = -e_14` (the `n = 2`
    /// pattern places the sign on the lowering image).
    Corrected,
}

fn phi_simple_images(
    n: u8,
    variant: PhiVariant,
) -> Result<Vec<(GeneratorLabel, i64, GeneratorLabel)>> {
    match n {
        2 => Ok(vec![
            (h(1, 2), 1, h(1, 2)),
            (h(2, 3), -1, h(1, 3)),
            (h(1, 3), -1, h(2, 3)),
            (e(1, 2), 1, e(1, 2)),
            (e(2, 1), 1, e(2, 1)),
            (e(2, 3), 1, e(3, 1)),
            (e(3, 2), -1, e(1, 3)),
            (e(1, 3), -1, e(3, 2)),
            (e(3, 1), 1, e(2, 3)),
        ]),
        3 => {
            let mut v = vec![
                (e(1, 2), 1, e(2, 3)),
                (e(2, 1), 1, e(3, 2)),
                (h(1, 2), 1, h(2, 3)),
                (e(2, 3), 1, e(1, 2)),
                (h(2, 3), 1, h(1, 2)),
                (e(3, 4), 1, e(4, 1)),
                (h(3, 4), -1, h(1, 4)),
            ];
            match variant {
                PhiVariant::Stated => {
                    v.push((e(3, 2), 1, e(1, 2)));
                    v.push((e(4, 3), 1, e(1, 4)));
                }
                PhiVariant::Corrected => {
                    v.push((e(3, 2), 1, e(2, 1)));
                    v.push((e(4, 3), -1, e(1, 4)));
                }
            }
            Ok(v)
        }
        _ => Err(Error::Unsupported(format!(
            "automorphism data only available for N = 2, 3 (got {n})"
        ))),
    }
}

/// Matrices of the automorphism images, keyed by the original label:
/// simple-root images from the displayed data, composite roots extended by
/// the same bracket conventions, Cartan composites by additivity.
pub fn phi_image_table(table: &GeneratorTable, variant: PhiVariant) -> Result<GeneratorTable> {
    let n = table.n();
    let mut entries: BTreeMap<GeneratorLabel, GradedMatrix<_>> = BTreeMap::new();
    if n == 2 {
        // the displayed list covers all nine generators
        for (src, sign, dst) in phi_simple_images(n, variant)? {
            let m = table.matrix(dst)?.clone();
            entries.insert(src, if sign == 1 { m } else { m.neg() });
        }
    } else {
        for (src, sign, dst) in phi_simple_images(n, variant)? {
            let m = table.matrix(dst)?.clone();
            entries.insert(src, if sign == 1 { m } else { m.neg() });
        }
        for span in 2..=n {
            for i in 1..=(n + 1 - span) {
                let j = i + span;
                let raise = entries[&e(i, j - 1)].graded_commutator(&entries[&e(j - 1, j)])?;
                entries.insert(e(i, j), raise.with_parity(Some(e(i, j).parity(n))));
                let lower = entries[&e(j, j - 1)].graded_commutator(&entries[&e(j - 1, i)])?;
                entries.insert(e(j, i), lower.with_parity(Some(e(j, i).parity(n))));
            }
        }
        for i in 1..=n {
            for j in (i + 1)..=(n + 1) {
                if entries.contains_key(&h(i, j)) {
                    continue;
                }
                let mut m = GradedMatrix::zero(table.space().clone()).with_parity(Some(0));
                for k in i..j {
                    m = m.add(&entries[&h(k, k + 1)]);
                }
                entries.insert(h(i, j), m);
            }
        }
    }
    let mut out = table.clone();
    for (l, m) in entries {
        out.insert(l, m);
    }
    Ok(out)
}

/// Substitute the automorphism images into every classical relation and
/// verify the relation still holds as matrices. For `n = 3` the displayed
/// image list is tried first; failures fall back to the documented
/// corrected images and report as variant-passes.
pub fn classical_automorphism_check(
    fund: &GeneratorTable,
    rep: Rep,
    allow_variants: bool,
) -> Result<CheckReport> {
    let n = fund.n();
    let table = match rep {
        Rep::Fund => fund.clone(),
        _ => classical_tensor_rep(fund, rep.power()),
    };
    let stated = phi_image_table(&table, PhiVariant::Stated)?;
    let corrected = phi_image_table(&table, PhiVariant::Corrected)?;
    let stated_lookup = stated.lookup();
    let corrected_lookup = corrected.lookup();

    let mut report = CheckReport::new("classical-automorphism", n, rep.name());
    for rel in classical_catalog(n) {
        let rel = Relation {
            id: format!("phi:{}", rel.id),
            ..rel
        };
        let first = check_relation(&rel, table.space(), &stated_lookup, false);
        if first.status == Status::Pass || !allow_variants {
            report.push(first);
            continue;
        }
        let second = check_relation(&rel, table.space(), &corrected_lookup, false);
        if second.status == Status::Pass {
            report.push(Check::variant_pass(
                rel.id,
                "phi images corrected: e_32 -> e_21, e_43 -> -e_14",
            ));
        } else {
            report.push(first);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::fundamental_generators;

    #[test]
    fn fundamental_relations_pass() {
        for n in 2..=4u8 {
            let fund = fundamental_generators(n).unwrap();
            let report = classical_relations_suite(&fund, Rep::Fund).unwrap();
            assert!(
                report.passed(),
                "n = {n}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn tensor_square_relations_pass() {
        for n in [2u8, 3] {
            let fund = fundamental_generators(n).unwrap();
            let report = classical_relations_suite(&fund, Rep::Fund2).unwrap();
            assert!(
                report.passed(),
                "n = {n}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn automorphism_n2_passes_verbatim() {
        let fund = fundamental_generators(2).unwrap();
        let report = classical_automorphism_check(&fund, Rep::Fund, true).unwrap();
        assert!(report.passed());
        assert_eq!(report.variant_passes().count(), 0);
    }

    #[test]
    fn automorphism_n3_needs_documented_correction() {
        let fund = fundamental_generators(3).unwrap();
        let report = classical_automorphism_check(&fund, Rep::Fund, true).unwrap();
        assert!(
            report.passed(),
            "{:?}",
            report.failures().collect::<Vec<_>>()
        );
        assert!(report.variant_passes().count() > 0);
    }

    #[test]
    fn specific_automorphism_images() {
        // [phi(e_2), phi(f_2)] = [f_3, -e_3] = -h_3 = phi(h_2) for n = 2
        let fund = fundamental_generators(2).unwrap();
        let phi = phi_image_table(&fund, PhiVariant::Stated).unwrap();
        let lhs = phi
            .matrix(e(2, 3))
            .unwrap()
            .graded_commutator(phi.matrix(e(3, 2)).unwrap())
            .unwrap();
        assert_eq!(lhs, phi.matrix(h(2, 3)).unwrap().clone());
    }
}

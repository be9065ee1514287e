//! Deformed relation catalogs.
//!
//! Each relation is transcribed verbatim from the stated lists and carries
//! a stable id (`Prop1:...`, `Prop5:...`, `Prop6:...`, `sl2:...`). Where a
//! list uses a symbol it never defines (the `F_ij` of the rank-3 lists),
//! the documented alias `F_ij -> E_ij` is applied and permanently
//! annotated. Where a line is inconsistent with the rest of the algebra, a
//! corrected variant derived from the rank-2 pattern or the embedded
//! `sl(2)` relations is attached; variants are only consulted when the
//! verbatim form fails.

use crate::expr::{commg, divh, g, hnum, num, t, Expr};
use crate::labels::{e, h, GeneratorLabel};
use crate::relations::Relation;

fn ts() -> Expr {
    t(1) + t(-1)
}

fn td() -> Expr {
    t(1) - t(-1)
}

fn td2() -> Expr {
    t(2) - t(-2)
}

/// `(T^k + 6 + T^-k)` with `k = 2`, a recurring Cartan coefficient.
fn tsix() -> Expr {
    t(2) + num(6, 1) + t(-2)
}

/// The embedded `sl(2)` sector on `(T, H_1N, E_N1)`, stated for every `N`.
pub fn sl2_sector_catalog(n: u8) -> Vec<Relation> {
    let hh = h(1, n);
    let ff = e(n, 1);
    let c = |a: GeneratorLabel, b: GeneratorLabel| commg(n, a, b);
    vec![
        Relation::new("sl2:T*T^-1", t(1) * t(-1), Expr::one()),
        Relation::new("sl2:T^-1*T", t(-1) * t(1), Expr::one()),
        Relation::new("sl2:(T^1/2)^2", g(GeneratorLabel::THalf(1)).pow(2), t(1)),
        Relation::new("sl2:(T^-1/2)^2", g(GeneratorLabel::THalf(-1)).pow(2), t(-1)),
        Relation::new(
            "sl2:T^1/2*T^-1/2",
            g(GeneratorLabel::THalf(1)) * g(GeneratorLabel::THalf(-1)),
            Expr::one(),
        ),
        Relation::new("sl2:[H,T]", c(hh, GeneratorLabel::T(1)), t(2) - Expr::one()),
        Relation::new(
            "sl2:[H,T^-1]",
            c(hh, GeneratorLabel::T(-1)),
            t(-2) - Expr::one(),
        ),
        Relation::new(
            "sl2:[T,F]",
            c(GeneratorLabel::T(1), ff),
            hnum(1, 2, 1) * (g(hh) * t(1) + t(1) * g(hh)),
        ),
        Relation::new(
            "sl2:[T^-1,F]",
            c(GeneratorLabel::T(-1), ff),
            -(hnum(1, 2, 1) * (g(hh) * t(-1) + t(-1) * g(hh))),
        ),
        Relation::new(
            "sl2:[H,F]",
            c(hh, ff),
            -(num(1, 2)
                * (t(1) * g(ff) + g(ff) * t(1) + t(-1) * g(ff) + g(ff) * t(-1))),
        ),
    ]
}

/// The rank-2 deformed commutator list.
pub fn prop1_catalog() -> Vec<Relation> {
    let n = 2;
    let h1 = h(1, 2);
    let f1 = e(2, 1);
    let h2 = h(2, 3);
    let h3 = h(1, 3);
    let e2 = e(2, 3);
    let f2 = e(3, 2);
    let e3 = e(1, 3);
    let f3 = e(3, 1);
    let c = |a: GeneratorLabel, b: GeneratorLabel| commg(n, a, b);

    vec![
        Relation::new(
            "Prop1:[H1,H2]",
            c(h1, h2),
            -(num(1, 4) * td().pow(2) * g(h1)),
        ),
        Relation::new("Prop1:[H1,H3]", c(h1, h3), num(1, 4) * td().pow(2) * g(h1)),
        Relation::new("Prop1:[H2,H3]", c(h2, h3), Expr::zero()),
        Relation::new(
            "Prop1:[H1,E2]",
            c(h1, e2),
            -(num(1, 2) * ts() * g(e2))
                - hnum(1, 2, 1) * td() * g(e3) * g(h1)
                - hnum(1, 4, 1) * td2() * g(e3),
        ),
        Relation::new(
            "Prop1:[H1,F3]",
            c(h1, f3),
            -(num(1, 2) * ts() * g(f3))
                + hnum(1, 2, 1) * td() * g(f2) * g(h1)
                + hnum(1, 4, 1) * td2() * g(f2),
        ),
        Relation::new("Prop1:[H1,F2]", c(h1, f2), num(1, 2) * ts() * g(f2)),
        Relation::new("Prop1:[H1,E3]", c(h1, e3), num(1, 2) * ts() * g(e3)),
        Relation::new(
            "Prop1:[H2,T]",
            c(h2, GeneratorLabel::T(1)),
            -(num(1, 4) * (t(3) - t(-1))),
        ),
        Relation::new(
            "Prop1:[H2,T^-1]",
            c(h2, GeneratorLabel::T(-1)),
            -(num(1, 4) * (t(-3) - t(1))),
        ),
        Relation::new(
            "Prop1:[H3,T]",
            c(h3, GeneratorLabel::T(1)),
            num(1, 4) * (t(3) - t(-1)),
        ),
        Relation::new(
            "Prop1:[H3,T^-1]",
            c(h3, GeneratorLabel::T(-1)),
            num(1, 4) * (t(-3) - t(1)),
        ),
        Relation::new(
            "Prop1:[H2,F1]",
            c(h2, f1),
            num(1, 4) * ts().pow(2) * g(f1)
                - hnum(1, 4, 1) * td() * g(h1).pow(2)
                - hnum(1, 4, 1) * td2() * g(h1)
                - hnum(1, 16, 1) * td2() * ts(),
        ),
        Relation::new(
            "Prop1:[H3,F1]",
            c(h3, f1),
            -(num(1, 4) * ts().pow(2) * g(f1))
                + hnum(1, 4, 1) * td() * g(h1).pow(2)
                + hnum(1, 4, 1) * td2() * g(h1)
                + hnum(1, 16, 1) * td2() * ts(),
        ),
        Relation::new(
            "Prop1:[H2,E2]",
            c(h2, e2),
            hnum(1, 16, 1) * ts() * td2() * g(e3) + num(1, 8) * td().pow(2) * g(e2),
        ),
        Relation::new(
            "Prop1:[H3,F3]",
            c(h3, f3),
            hnum(1, 16, 1) * td() * td2() * g(f2) - num(1, 8) * td().pow(2) * g(f3),
        )
        .with_variant(
            "coefficient (T-T^-1) read as (T+T^-1), the image of Prop1:[H2,E2] under the algebra automorphism",
            c(h3, f3),
            hnum(1, 16, 1) * ts() * td2() * g(f2) - num(1, 8) * td().pow(2) * g(f3),
        ),
        Relation::new(
            "Prop1:[H2,F3]",
            c(h2, f3),
            num(1, 8) * tsix() * g(f3) - hnum(1, 16, 1) * td2() * ts() * g(f2),
        ),
        Relation::new(
            "Prop1:[H3,E2]",
            c(h3, e2),
            -(num(1, 8) * tsix() * g(e2)) - hnum(1, 16, 1) * td2() * ts() * g(e3),
        ),
        Relation::new(
            "Prop1:[H2,F2]",
            c(h2, f2),
            -(num(1, 8) * td().pow(2) * g(f2)),
        ),
        Relation::new(
            "Prop1:[H3,E3]",
            c(h3, e3),
            num(1, 8) * td().pow(2) * g(e3),
        ),
        Relation::new("Prop1:[H3,F2]", c(h3, f2), num(1, 8) * tsix() * g(f2)),
        Relation::new(
            "Prop1:[H2,E3]",
            c(h2, e3),
            -(num(1, 8) * tsix() * g(e3)),
        ),
        Relation::new(
            "Prop1:[E2,F2]",
            c(e2, f2),
            g(h2) - num(1, 16) * td().pow(2) - hnum(1, 4, 1) * td() * g(e3) * g(f2),
        ),
        Relation::new(
            "Prop1:[E3,F3]",
            c(e3, f3),
            g(h3) + num(1, 16) * td().pow(2) + hnum(1, 4, 1) * td() * g(f2) * g(e3),
        ),
        Relation::new("Prop1:[T,F2]", c(GeneratorLabel::T(1), f2), Expr::zero()),
        Relation::new("Prop1:[T^-1,F2]", c(GeneratorLabel::T(-1), f2), Expr::zero()),
        Relation::new("Prop1:[T,E3]", c(GeneratorLabel::T(1), e3), Expr::zero()),
        Relation::new("Prop1:[T^-1,E3]", c(GeneratorLabel::T(-1), e3), Expr::zero()),
        Relation::new("Prop1:F2^2", g(f2).pow(2), Expr::zero()),
        Relation::new("Prop1:E3^2", g(e3).pow(2), Expr::zero()),
        Relation::new("Prop1:[F2,F1]", c(f2, f1), g(f3)),
        Relation::new("Prop1:[F1,E3]", c(f1, e3), g(e2)),
        Relation::new(
            "Prop1:E2^2",
            g(e2).pow(2),
            hnum(1, 4, 1) * td() * g(e3) * g(e2),
        ),
        Relation::new(
            "Prop1:F3^2",
            g(f3).pow(2),
            -(hnum(1, 4, 1) * td() * g(f2) * g(f3)),
        ),
        Relation::new("Prop1:[E2,E3]", c(e2, e3), Expr::zero()),
        Relation::new("Prop1:[F2,F3]", c(f2, f3), Expr::zero()),
        Relation::new(
            "Prop1:[T,E2]",
            c(GeneratorLabel::T(1), e2),
            hnum(1, 2, 1) * (t(2) + Expr::one()) * g(e3),
        ),
        Relation::new(
            "Prop1:[T^-1,E2]",
            c(GeneratorLabel::T(-1), e2),
            -(hnum(1, 2, 1) * (t(-2) + Expr::one()) * g(e3)),
        ),
        Relation::new(
            "Prop1:[T,F3]",
            c(GeneratorLabel::T(1), f3),
            -(hnum(1, 2, 1) * (t(2) + Expr::one()) * g(f2)),
        ),
        Relation::new(
            "Prop1:[T^-1,F3]",
            c(GeneratorLabel::T(-1), f3),
            hnum(1, 2, 1) * (t(-2) + Expr::one()) * g(f2),
        ),
        Relation::new("Prop1:[F2,E3]", c(f2, e3), num(1, 2) * divh(td())),
        Relation::new(
            "Prop1:[E2,F1]",
            c(e2, f1),
            hnum(1, 4, 1) * td() * g(e2) + hnum(1, 2, 1) * td() * g(e3) * g(f1)
                - hnum(1, 4, 2) * g(e3) * g(h1).pow(2)
                - hnum(3, 8, 2) * ts() * g(e3) * g(h1)
                - hnum(1, 2, 2) * g(e3)
                - hnum(15, 64, 2) * td().pow(2) * g(e3),
        ),
        Relation::new(
            "Prop1:[F3,F1]",
            c(f3, f1),
            hnum(1, 4, 1) * td() * g(f3) - hnum(1, 2, 1) * td() * g(f2) * g(f1)
                + hnum(1, 4, 2) * g(f2) * g(h1).pow(2)
                + hnum(3, 8, 2) * ts() * g(f2) * g(h1)
                + hnum(1, 2, 2) * g(f2)
                + hnum(15, 64, 2) * td().pow(2) * g(f2),
        ),
        Relation::new(
            "Prop1:[F3,E2]",
            c(f3, e2),
            g(f1) - hnum(1, 4, 1) * td() * g(f2) * g(e2)
                + hnum(1, 4, 1) * td() * g(e3) * g(f3)
                - hnum(1, 8, 1) * td() * g(h1).pow(2)
                - hnum(1, 8, 1) * td2() * g(h1)
                - hnum(1, 16, 1) * g(h1) * td2()
                - hnum(7, 128, 1) * td().pow(3),
        ),
    ]
}

/// The rank-3 bosonic deformed commutator list.
pub fn prop5_catalog() -> Vec<Relation> {
    let n = 3;
    let h12 = h(1, 2);
    let h23 = h(2, 3);
    let h13 = h(1, 3);
    let e12 = e(1, 2);
    let e21 = e(2, 1);
    let e23 = e(2, 3);
    let e32 = e(3, 2);
    let e31 = e(3, 1);
    let c = |a: GeneratorLabel, b: GeneratorLabel| commg(n, a, b);

    // the corrected Cartan action on E_31, shared by the two variant lines:
    // derived inside the embedded sl(2) from [H_13, E_31] and [T, E_31]
    let corrected_cartan_e31 = || {
        -(num(1, 4) * ts().pow(2) * g(e31))
            + hnum(1, 4, 1) * td() * g(h13).pow(2)
            + hnum(1, 4, 1) * td2() * g(h13)
            + hnum(1, 16, 1) * td2() * ts()
    };

    let mut rels = vec![
        Relation::new(
            "Prop5:[H13,E31]",
            c(h13, e31),
            -(num(1, 2) * (ts() * g(e31) + g(e31) * ts())),
        ),
        Relation::new("Prop5:[H12,H23]", c(h12, h23), Expr::zero()),
        Relation::new(
            "Prop5:[H12,H13]",
            c(h12, h13),
            -(num(1, 4) * td().pow(2) * g(h13)),
        ),
        Relation::new(
            "Prop5:[H23,H13]",
            c(h23, h13),
            -(num(1, 4) * td().pow(2) * g(h13)),
        ),
        Relation::new(
            "Prop5:[H12,E12]",
            c(h12, e12),
            num(2, 1) * g(e12) + num(1, 8) * td().pow(2) * g(e12),
        ),
        Relation::new(
            "Prop5:[H12,E23]",
            c(h12, e23),
            -g(e23) + num(1, 8) * td().pow(2) * g(e23),
        ),
        Relation::new(
            "Prop5:[H23,E12]",
            c(h23, e12),
            -g(e12) + num(1, 8) * td().pow(2) * g(e12),
        ),
        Relation::new(
            "Prop5:[H23,E23]",
            c(h23, e23),
            num(2, 1) * g(e23) + num(1, 8) * td().pow(2) * g(e23),
        ),
        Relation::new(
            "Prop5:[H12,E21]",
            c(h12, e21),
            -(num(2, 1) * g(e21)) - num(1, 8) * td().pow(2) * g(e21)
                + hnum(1, 16, 1) * ts() * td2() * g(e23),
        ),
        Relation::new(
            "Prop5:[H23,E32]",
            c(h23, e32),
            -(num(2, 1) * g(e32)) - num(1, 8) * td().pow(2) * g(e32)
                - hnum(1, 16, 1) * ts() * td2() * g(e12),
        ),
        Relation::new(
            "Prop5:[H12,E32]",
            c(h12, e32),
            g(e32) - num(1, 8) * td().pow(2) * g(e32)
                - hnum(1, 16, 1) * ts() * td2() * g(e12),
        ),
        Relation::new(
            "Prop5:[H23,E21]",
            c(h23, e21),
            g(e21) - num(1, 8) * td().pow(2) * g(e21)
                + hnum(1, 16, 1) * ts() * td2() * g(e23),
        ),
        Relation::new(
            "Prop5:[H13,E12]",
            c(h13, e12),
            num(1, 2) * ts() * g(e12),
        ),
        Relation::new(
            "Prop5:[H13,E23]",
            c(h13, e23),
            num(1, 2) * ts() * g(e23),
        ),
        Relation::new(
            "Prop5:[H13,E21]",
            c(h13, e21),
            -(num(1, 2) * ts() * g(e21))
                + hnum(1, 2, 1) * td() * g(e23) * g(h13)
                + hnum(1, 4, 1) * td2() * g(e23),
        ),
        Relation::new(
            "Prop5:[H13,E32]",
            c(h13, e32),
            -(num(1, 2) * ts() * g(e32))
                - hnum(1, 2, 1) * td() * g(e12) * g(h13)
                - hnum(1, 4, 1) * td2() * g(e12),
        ),
        Relation::new(
            "Prop5:[E21,F31]",
            c(e21, e31),
            hnum(1, 4, 1) * td() * g(e21) - hnum(1, 2, 1) * td() * g(e23) * g(e31)
                + hnum(1, 4, 2) * g(e23) * g(h13).pow(2)
                + hnum(3, 8, 2) * ts() * g(e23) * g(h13)
                + hnum(1, 2, 2) * g(e23)
                + hnum(15, 64, 2) * td().pow(2) * g(e23),
        )
        .with_note("alias F_31 -> E_31"),
        Relation::new(
            "Prop5:[E32,F31]",
            c(e32, e31),
            hnum(1, 4, 1) * td() * g(e32) + hnum(1, 2, 1) * td() * g(e12) * g(e31)
                - hnum(1, 4, 2) * g(e12) * g(h13).pow(2)
                - hnum(3, 8, 2) * ts() * g(e12) * g(h13)
                - hnum(1, 2, 2) * g(e12)
                - hnum(15, 64, 2) * td().pow(2) * g(e12),
        )
        .with_note("alias F_31 -> E_31"),
        Relation::new(
            "Prop5:[H12,T]",
            c(h12, GeneratorLabel::T(1)),
            -(num(1, 4) * (t(3) - t(-1))),
        )
        .with_variant(
            "overall sign read as +: [H_12, e_13] = +e_13 here, so [H_12, T] = +(1/4)(T^3-T^-1) by the embedded sl(2) relations (the rank-2 analogue has coefficient -1)",
            c(h12, GeneratorLabel::T(1)),
            num(1, 4) * (t(3) - t(-1)),
        ),
        Relation::new(
            "Prop5:[H12,T^-1]",
            c(h12, GeneratorLabel::T(-1)),
            -(num(1, 4) * (t(-3) - t(1))),
        )
        .with_variant(
            "overall sign read as +: [H_12, e_13] = +e_13 here, so [H_12, T^-1] = +(1/4)(T^-3-T) by the embedded sl(2) relations (the rank-2 analogue has coefficient -1)",
            c(h12, GeneratorLabel::T(-1)),
            num(1, 4) * (t(-3) - t(1)),
        ),
        Relation::new(
            "Prop5:[H23,T]",
            c(h23, GeneratorLabel::T(1)),
            -(num(1, 4) * (t(3) - t(-1))),
        )
        .with_variant(
            "overall sign read as +: [H_23, e_13] = +e_13 here, so [H_23, T] = +(1/4)(T^3-T^-1) by the embedded sl(2) relations (the rank-2 analogue has coefficient -1)",
            c(h23, GeneratorLabel::T(1)),
            num(1, 4) * (t(3) - t(-1)),
        ),
        Relation::new(
            "Prop5:[H23,T^-1]",
            c(h23, GeneratorLabel::T(-1)),
            -(num(1, 4) * (t(-3) - t(1))),
        )
        .with_variant(
            "overall sign read as +: [H_23, e_13] = +e_13 here, so [H_23, T^-1] = +(1/4)(T^-3-T) by the embedded sl(2) relations (the rank-2 analogue has coefficient -1)",
            c(h23, GeneratorLabel::T(-1)),
            num(1, 4) * (t(-3) - t(1)),
        ),
        Relation::new(
            "Prop5:[H12,E31]",
            c(h12, e31),
            -(num(1, 4) * ts().pow(2) * g(e31))
                + hnum(1, 4, 1) * td() * g(h13).pow(2)
                + hnum(1, 2, 1) * ts() * g(e23) * g(h13)
                + hnum(1, 16, 1) * (t(3) + t(1) - t(-1) - t(-3)),
        )
        .with_variant(
            "(h/2)(T+T^-1)E_23 H_13 read as (h/4)(T^2-T^-2)H_13: the stated term is not root-graded; corrected form derived from the embedded sl(2) relations",
            c(h12, e31),
            corrected_cartan_e31(),
        ),
        Relation::new(
            "Prop5:[H23,E31]",
            c(h23, e31),
            -(num(1, 4) * ts().pow(2) * g(e31))
                + hnum(1, 4, 1) * td() * g(h13).pow(2)
                - hnum(1, 2, 1) * ts() * g(e12) * g(h13)
                + hnum(1, 16, 1) * (t(3) + t(1) - t(-1) - t(-3)),
        )
        .with_variant(
            "-(h/2)(T+T^-1)E_12 H_13 read as (h/4)(T^2-T^-2)H_13: the stated term is not root-graded; corrected form derived from the embedded sl(2) relations",
            c(h23, e31),
            corrected_cartan_e31(),
        ),
        Relation::new(
            "Prop5:[F32,E21]",
            c(e32, e21),
            g(e31) + hnum(1, 4, 1) * td() * (g(e12) * g(e21) + g(e23) * g(e32))
                - hnum(1, 8, 1) * td() * g(h13).pow(2)
                - hnum(1, 4, 1) * td()
                - hnum(3, 16, 1) * td2() * g(h13)
                - hnum(9, 128, 1) * td().pow(3),
        )
        .with_note("aliases F_32 -> E_32, F_31 -> E_31"),
        Relation::new(
            "Prop5:[E12,E21]",
            c(e12, e21),
            g(h12) + num(1, 16) * td().pow(2) - hnum(1, 4, 1) * td() * g(e23) * g(e12),
        ),
        Relation::new(
            "Prop5:[E23,E32]",
            c(e23, e32),
            g(h23) + num(1, 16) * td().pow(2) + hnum(1, 4, 1) * td() * g(e12) * g(e23),
        ),
        Relation::new("Prop5:[T,E12]", c(GeneratorLabel::T(1), e12), Expr::zero()),
        Relation::new(
            "Prop5:[T^-1,E12]",
            c(GeneratorLabel::T(-1), e12),
            Expr::zero(),
        ),
        Relation::new("Prop5:[T,E23]", c(GeneratorLabel::T(1), e23), Expr::zero()),
        Relation::new(
            "Prop5:[T^-1,E23]",
            c(GeneratorLabel::T(-1), e23),
            Expr::zero(),
        ),
        Relation::new(
            "Prop5:[E23,E21]",
            c(e23, e21),
            -(hnum(1, 4, 1) * td() * g(e23).pow(2)),
        ),
        Relation::new(
            "Prop5:[E12,E32]",
            c(e12, e32),
            hnum(1, 4, 1) * td() * g(e12).pow(2),
        ),
        Relation::new(
            "Prop5:[T,E21]",
            c(GeneratorLabel::T(1), e21),
            -(hnum(1, 2, 1) * (t(2) + Expr::one()) * g(e23)),
        ),
        Relation::new(
            "Prop5:[T^-1,E21]",
            c(GeneratorLabel::T(-1), e21),
            hnum(1, 2, 1) * (t(-2) + Expr::one()) * g(e23),
        ),
        Relation::new(
            "Prop5:[T,E32]",
            c(GeneratorLabel::T(1), e32),
            hnum(1, 2, 1) * (t(2) + Expr::one()) * g(e12),
        ),
        Relation::new(
            "Prop5:[T^-1,E32]",
            c(GeneratorLabel::T(-1), e32),
            -(hnum(1, 2, 1) * (t(-2) + Expr::one()) * g(e12)),
        ),
        Relation::new("Prop5:[E12,E23]", c(e12, e23), num(1, 2) * divh(td())),
    ];

    rels.extend(sl2_sector_catalog(3).into_iter().map(|mut r| {
        r.id = r.id.replace("sl2:", "Prop5:sl2:");
        r
    }));
    rels
}

/// The rank-3 fermionic deformed commutator list.
pub fn prop6_catalog() -> Vec<Relation> {
    let n = 3;
    let h13 = h(1, 3);
    let h34 = h(3, 4);
    let h14 = h(1, 4);
    let e14 = e(1, 4);
    let e41 = e(4, 1);
    let e34 = e(3, 4);
    let e43 = e(4, 3);
    let e31 = e(3, 1);
    let e24 = e(2, 4);
    let e42 = e(4, 2);
    let e12 = e(1, 2);
    let c = |a: GeneratorLabel, b: GeneratorLabel| commg(n, a, b);

    vec![
        Relation::new(
            "Prop6:[H13,H34]",
            c(h13, h34),
            -(num(1, 4) * td().pow(2) * g(h13)),
        ),
        Relation::new(
            "Prop6:[H13,H14]",
            c(h13, h14),
            num(1, 4) * td().pow(2) * g(h13),
        ),
        Relation::new(
            "Prop6:[H13,E14]",
            c(h13, e14),
            num(1, 2) * ts() * g(e14),
        ),
        Relation::new(
            "Prop6:[H13,E43]",
            c(h13, e43),
            num(1, 2) * ts() * g(e43),
        ),
        Relation::new(
            "Prop6:[H13,E41]",
            c(h13, e41),
            -(num(1, 2) * ts() * g(e41))
                + hnum(1, 2, 1) * td() * g(e43) * g(h13)
                + hnum(1, 4, 1) * td2() * g(e43),
        ),
        Relation::new(
            "Prop6:[H13,E34]",
            c(h13, e34),
            -(num(1, 2) * ts() * g(e34))
                - hnum(1, 2, 1) * td() * g(e14) * g(h13)
                - hnum(1, 2, 1) * td2() * g(e14),
        )
        .with_variant(
            "coefficient h/2 on the (T^2-T^-2)E_14 term read as h/4, matching Prop1:[H1,E2] and Prop6:[H13,E41]",
            c(h13, e34),
            -(num(1, 2) * ts() * g(e34))
                - hnum(1, 2, 1) * td() * g(e14) * g(h13)
                - hnum(1, 4, 1) * td2() * g(e14),
        ),
        Relation::new(
            "Prop6:[H34,E14]",
            c(h34, e14),
            -((Expr::one() + num(1, 8) * td().pow(2)) * g(e14)),
        ),
        Relation::new(
            "Prop6:[H14,E43]",
            c(h14, e43),
            (Expr::one() + num(1, 8) * td().pow(2)) * g(e43),
        ),
        Relation::new(
            "Prop6:[H34,E41]",
            c(h34, e41),
            (Expr::one() + num(1, 8) * td().pow(2)) * g(e41)
                - hnum(1, 16, 1) * td2() * ts() * g(e43),
        ),
        Relation::new(
            "Prop6:[H34,E34]",
            c(h34, e34),
            num(1, 8) * td().pow(2) * g(e34) + hnum(1, 16, 1) * td2() * td() * g(e14),
        )
        .with_variant(
            "coefficient (T^2-T^-2)(T-T^-1) read as (T^2-T^-2)(T+T^-1), matching Prop1:[H2,E2]",
            c(h34, e34),
            num(1, 8) * td().pow(2) * g(e34) + hnum(1, 16, 1) * td2() * ts() * g(e14),
        ),
        Relation::new(
            "Prop6:[H34,E43]",
            c(h34, e43),
            -(num(1, 8) * td().pow(2) * g(e43)),
        ),
        Relation::new(
            "Prop6:[H34,T]",
            c(h34, GeneratorLabel::T(1)),
            -(num(1, 4) * (t(3) - t(-1))),
        ),
        Relation::new(
            "Prop6:[H34,T^-1]",
            c(h34, GeneratorLabel::T(-1)),
            -(num(1, 4) * (t(-3) - t(1))),
        ),
        Relation::new(
            "Prop6:[H14,T]",
            c(h14, GeneratorLabel::T(1)),
            num(1, 4) * (t(3) - t(-1)),
        ),
        Relation::new(
            "Prop6:[H14,T^-1]",
            c(h14, GeneratorLabel::T(-1)),
            num(1, 4) * (t(-3) - t(1)),
        ),
        Relation::new(
            "Prop6:[H34,E31]",
            c(h34, e31),
            num(1, 4) * ts().pow(2) * g(e31)
                - hnum(1, 4, 1) * td() * g(h13).pow(2)
                - hnum(1, 4, 1) * td2() * g(h13)
                - hnum(1, 16, 1) * td2() * ts(),
        ),
        Relation::new(
            "Prop6:[H14,E31]",
            c(h14, e31),
            -(num(1, 4) * ts().pow(2) * g(e31))
                + hnum(1, 4, 1) * td() * g(h13).pow(2)
                + hnum(1, 4, 1) * td2() * g(h13)
                + hnum(1, 16, 1) * td2() * ts(),
        ),
        Relation::new(
            "Prop6:[H14,E34]",
            c(h14, e34),
            -((Expr::one() + num(1, 8) * td().pow(2)) * g(e34))
                - hnum(1, 16, 1) * td2() * ts() * g(e43),
        )
        .with_variant(
            "last factor E_43 read as E_14 (root grading; the image of Prop6:[H34,E41] under the algebra automorphism)",
            c(h14, e34),
            -((Expr::one() + num(1, 8) * td().pow(2)) * g(e34))
                - hnum(1, 16, 1) * td2() * ts() * g(e14),
        ),
        Relation::new(
            "Prop6:[T,E34]",
            c(GeneratorLabel::T(1), e34),
            hnum(1, 2, 1) * (t(2) + Expr::one()) * g(e14),
        ),
        Relation::new(
            "Prop6:[T^-1,E34]",
            c(GeneratorLabel::T(-1), e34),
            -(hnum(1, 2, 1) * (t(-2) + Expr::one()) * g(e14)),
        ),
        Relation::new(
            "Prop6:[T,E41]",
            c(GeneratorLabel::T(1), e41),
            -(hnum(1, 2, 1) * (t(2) + Expr::one()) * g(e43)),
        ),
        Relation::new(
            "Prop6:[T^-1,E41]",
            c(GeneratorLabel::T(-1), e41),
            hnum(1, 2, 1) * (t(-2) + Expr::one()) * g(e43),
        ),
        Relation::new("Prop6:[E43,E14]", c(e43, e14), num(1, 2) * divh(td())),
        Relation::new(
            "Prop6:[E34,E43]",
            c(e34, e43),
            g(h34) - num(1, 16) * td().pow(2) - hnum(1, 4, 1) * td() * g(e14) * g(e43),
        ),
        Relation::new(
            "Prop6:[E14,E41]",
            c(e14, e41),
            g(h14) + num(1, 16) * td().pow(2) + hnum(1, 4, 1) * td() * g(e43) * g(e14),
        ),
        Relation::new(
            "Prop6:[E43,E31]",
            c(e43, e31),
            hnum(1, 4, 1) * td() * g(e34) + hnum(1, 2, 1) * td() * g(e14) * g(e31)
                - hnum(1, 4, 2) * g(e14) * g(h13).pow(2)
                - hnum(3, 8, 2) * ts() * g(e14) * g(h13)
                - hnum(1, 2, 2) * g(e14)
                - hnum(15, 64, 2) * td().pow(2) * g(e14),
        )
        .with_variant(
            "left side read as [E_34, E_31]: the stated right side is the rank-2 pattern for the raising pair and carries no leading E_41, while [E_43, E_31] = E_41 + O(h)",
            c(e34, e31),
            hnum(1, 4, 1) * td() * g(e34) + hnum(1, 2, 1) * td() * g(e14) * g(e31)
                - hnum(1, 4, 2) * g(e14) * g(h13).pow(2)
                - hnum(3, 8, 2) * ts() * g(e14) * g(h13)
                - hnum(1, 2, 2) * g(e14)
                - hnum(15, 64, 2) * td().pow(2) * g(e14),
        ),
        Relation::new(
            "Prop6:[E41,E31]",
            c(e41, e31),
            hnum(1, 4, 1) * td() * g(e41) - hnum(1, 2, 1) * td() * g(e43) * g(e31)
                + hnum(1, 4, 2) * g(e43) * g(h13).pow(2)
                + hnum(3, 8, 2) * ts() * g(e43) * g(h13)
                + hnum(1, 2, 2) * g(e43)
                + hnum(15, 64, 2) * td().pow(2) * g(e43),
        ),
        Relation::new(
            "Prop6:[E43,E32]",
            c(e43, e(3, 2)),
            g(e42) + hnum(1, 4, 1) * td() * g(e12) * g(e43),
        )
        .with_note("alias F_42 -> E_42"),
        Relation::new(
            "Prop6:E34^2",
            g(e34).pow(2),
            hnum(1, 4, 1) * td() * g(e14) * g(e34),
        ),
        Relation::new(
            "Prop6:E41^2",
            g(e41).pow(2),
            -(hnum(1, 4, 1) * td() * g(e43) * g(e41)),
        ),
        Relation::new("Prop6:[T,E14]", c(GeneratorLabel::T(1), e14), Expr::zero()),
        Relation::new(
            "Prop6:[T^-1,E14]",
            c(GeneratorLabel::T(-1), e14),
            Expr::zero(),
        ),
        Relation::new("Prop6:[T,E43]", c(GeneratorLabel::T(1), e43), Expr::zero()),
        Relation::new(
            "Prop6:[T^-1,E43]",
            c(GeneratorLabel::T(-1), e43),
            Expr::zero(),
        ),
        Relation::new("Prop6:[T,E24]", c(GeneratorLabel::T(1), e24), Expr::zero()),
        Relation::new(
            "Prop6:[T^-1,E24]",
            c(GeneratorLabel::T(-1), e24),
            Expr::zero(),
        ),
        Relation::new("Prop6:[T,E42]", c(GeneratorLabel::T(1), e42), Expr::zero()),
        Relation::new(
            "Prop6:[T^-1,E42]",
            c(GeneratorLabel::T(-1), e42),
            Expr::zero(),
        ),
        Relation::new(
            "Prop6:[E34,E41]",
            c(e34, e41),
            g(e31) - hnum(1, 4, 1) * td() * g(e43) * g(e34)
                + hnum(1, 4, 1) * td() * g(e14) * g(e41)
                - hnum(1, 8, 1) * td() * g(h13).pow(2)
                - hnum(1, 8, 1) * td2() * g(h13).pow(2)
                - hnum(1, 16, 1) * g(h13) * td2()
                + hnum(7, 128, 1) * td().pow(3),
        )
        .with_note("aliases F_31 -> E_31, F_41 -> E_41")
        .with_variant(
            "fifth term (h/8)(T^2-T^-2)H_13^2 read as (h/8)(T^2-T^-2)H_13 and the (T-T^-1)^3 sign read as -, matching Prop1:[F3,E2]",
            c(e34, e41),
            g(e31) - hnum(1, 4, 1) * td() * g(e43) * g(e34)
                + hnum(1, 4, 1) * td() * g(e14) * g(e41)
                - hnum(1, 8, 1) * td() * g(h13).pow(2)
                - hnum(1, 8, 1) * td2() * g(h13)
                - hnum(1, 16, 1) * g(h13) * td2()
                - hnum(7, 128, 1) * td().pow(3),
        ),
    ]
}

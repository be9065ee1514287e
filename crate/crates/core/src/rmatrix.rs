//! The q-side and R-matrix laboratory: the deformed exponential, the
//! singular transformation `G`, the `q -> 1` contraction of the standard
//! R-matrix, the universal R-matrix evaluated in a representation, the
//! L-operator, and the Yang-Baxter / intertwining / RLL checks.
//!
//! During contraction, entries live in `Q(q)[h]` (polynomials in `h` with
//! rational-function coefficients) so the deformation parameter stays
//! symbolic end to end; the limit maps coefficients through `q -> 1`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::expr::{eval, g, hnum, t, th, Expr};
use crate::hopf::{coproduct_matrix, coproduct_rules, counit, HopfContext};
use crate::jordanian::DeformedTable;
use crate::labels::{e, h, GeneratorLabel};
use crate::report::{Check, CheckReport, Witness};
use crate::scalars::{hmono, HPoly, QRat, QhPoly, Scalar};
use crate::superlinalg::{
    graded_flip, plain_flip, unipotent_series, GradedMatrix, SeriesFn, SuperSpace,
};

pub type QMatrix = GradedMatrix<QRat>;
pub type QhMatrix = GradedMatrix<QhPoly>;

/// Base of the deformed exponential series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpBase {
    Q,
    QSquared,
}

/// `[k]_b = (b^k - b^-k)/(b - b^-1)`.
pub fn quantum_integer(k: u32, base: ExpBase) -> QRat {
    let step = match base {
        ExpBase::Q => 1,
        ExpBase::QSquared => 2,
    };
    let k = k as i64;
    let num = QRat::q_pow(step * k) - QRat::q_pow(-step * k);
    let den = QRat::q_pow(step) - QRat::q_pow(-step);
    num.checked_div(&den).expect("nonzero q-bracket")
}

pub fn quantum_factorial(k: u32, base: ExpBase) -> QRat {
    let mut acc = QRat::one();
    for i in 1..=k {
        acc = acc * quantum_integer(i, base);
    }
    acc
}

/// `E_b(x) = sum_k x^k / [k]_b!` for nilpotent `x`, truncated exactly.
pub fn deformed_exponential(x: &QhMatrix, base: ExpBase) -> Result<QhMatrix> {
    let idx = x.nilpotency_index()?;
    let mut acc = GradedMatrix::identity(x.space().clone());
    let mut p = GradedMatrix::identity(x.space().clone());
    for k in 1..idx {
        p = p.mul(x);
        let inv = quantum_factorial(k, base)
            .inverse()
            .expect("nonzero factorial");
        acc = acc.add(&p.scale(&QhPoly::constant(inv)));
    }
    Ok(acc)
}

/// The standard R-matrix on (fund.) (x) (fund.), stated for `n = 2` only:
/// diagonal `(q, 1, 1, 1, q, 1, 1, 1, -q^-2)` with `q - q^-1` at the
/// positions `(2,4)`, `(3,7)`, `(6,8)` (1-based).
pub fn rq_fundamental(n: u8) -> Result<QMatrix> {
    if n != 2 {
        return Err(Error::Unsupported(format!(
            "the standard R-matrix is stated for N = 2 only (got {n})"
        )));
    }
    let v = crate::classical::fundamental_space(2);
    let space = v.tensor(&v);
    let qq = QRat::q_pow(1);
    let diag = vec![
        qq.clone(),
        QRat::one(),
        QRat::one(),
        QRat::one(),
        qq,
        QRat::one(),
        QRat::one(),
        QRat::one(),
        -QRat::q_pow(-2),
    ];
    let mut m = GradedMatrix::from_diag(space, diag);
    let off = QRat::q_pow(1) - QRat::q_pow(-1);
    m.set(1, 3, off.clone());
    m.set(2, 6, off.clone());
    m.set(5, 7, off);
    Ok(m)
}

/// The singular transformation `G = E_q(h e_1N / (q - 1))` in the
/// fundamental representation.
pub fn transformation_g(n: u8) -> Result<QhMatrix> {
    if n < 2 {
        return Err(Error::InvalidN(n));
    }
    let v = crate::classical::fundamental_space(n);
    let mut eta = GradedMatrix::<QhPoly>::zero(v);
    let u = QRat::one()
        .checked_div(&(QRat::q_pow(1) - QRat::one()))
        .expect("q - 1 is nonzero");
    eta.set(0, n as usize - 1, QhPoly::monomial(u, 1));
    deformed_exponential(&eta, ExpBase::Q)
}

pub fn lift_q(m: &QMatrix) -> QhMatrix {
    m.map(|c| QhPoly::constant(c.clone()))
}

/// Conjugate by `G (x) G` (plain Kronecker: `G` is even) and take the
/// `q -> 1` limit entrywise, keeping `h` symbolic. A pole in any entry is
/// reported with its coordinates: it means the expected singularity
/// cancellation failed.
pub fn contract(rq: &QMatrix, gmat: &QhMatrix) -> Result<GradedMatrix<HPoly>> {
    let gg = gmat.plain_kron(gmat);
    let gg_inv = gg.unipotent_inverse()?;
    let conj = gg_inv.mul(&lift_q(rq)).mul(&gg);
    conj.try_map(|r, c, p| {
        p.try_map_coeffs(|qc| qc.limit_q1()).map_err(|err| match err {
            Error::PoleAtOne { .. } => Error::PoleAtOne {
                row: Some(r + 1),
                col: Some(c + 1),
            },
            other => other,
        })
    })
}

/// The stated contracted matrix for `n = 2`, frozen entry by entry.
pub fn stated_contracted_rh_n2() -> GradedMatrix<HPoly> {
    let v = crate::classical::fundamental_space(2);
    let mut m = GradedMatrix::zero(v.tensor(&v));
    let one = HPoly::one;
    let hh = || hmono(1, 1, 1);
    let entries: Vec<(usize, usize, HPoly)> = vec![
        (1, 1, one()),
        (1, 2, hh()),
        (1, 4, -hh()),
        (1, 5, hmono(1, 1, 2)),
        (2, 2, one()),
        (2, 5, hh()),
        (3, 3, one()),
        (4, 4, one()),
        (4, 5, -hh()),
        (5, 5, one()),
        (6, 6, one()),
        (7, 7, one()),
        (8, 8, one()),
        (9, 9, -one()),
    ];
    for (r, c, p) in entries {
        m.set(r - 1, c - 1, p);
    }
    m
}

/// The universal element `exp(-h X_1 (x) T H_1N) exp(h T H_1N (x) X_1)`
/// with `X_1 = h^-1 log T`, evaluated on `V (x) V`. Uses only the
/// `(T, H_1N)` pair.
pub fn universal_rh(dt: &DeformedTable) -> Result<GradedMatrix<HPoly>> {
    let x1 = dt.log_t_over_h()?;
    let th1 = dt
        .matrix(GeneratorLabel::T(1))?
        .mul(dt.matrix(h(1, dt.n()))?);
    let first = x1.plain_kron(&th1).scale(&hmono(-1, 1, 1));
    let second = th1.plain_kron(&x1).scale(&hmono(1, 1, 1));
    Ok(unipotent_series(&first, SeriesFn::Exp)?
        .mul(&unipotent_series(&second, SeriesFn::Exp)?))
}

/// Koszul dressing on `V (x) V`: `diag((-1)^{p_i p_k})`.
pub fn koszul_dressing(v: &SuperSpace) -> GradedMatrix<HPoly> {
    let diag = v
        .parities()
        .iter()
        .flat_map(|&pi| {
            v.parities().iter().map(move |&pk| {
                if pi * pk == 1 {
                    -HPoly::one()
                } else {
                    HPoly::one()
                }
            })
        })
        .collect();
    GradedMatrix::from_diag(v.tensor(v), diag)
}

/// Plain (ungraded) Yang-Baxter check `R12 R13 R23 = R23 R13 R12` on
/// `V (x) V (x) V`; `R13` is the conjugation of `R12` by the flip of the
/// last two factors. The stated R-matrices carry their Koszul signs inside
/// the entries, so the plain embedding is the right one for them.
pub fn qybe_holds<S: Scalar>(r: &GradedMatrix<S>, v: &SuperSpace) -> bool {
    let idv = GradedMatrix::<S>::identity(v.clone());
    let r12 = r.plain_kron(&idv);
    let r23 = idv.plain_kron(r);
    let p23 = idv.plain_kron(&plain_flip::<S>(v, v));
    let r13 = p23.mul(&r12).mul(&p23);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    lhs == rhs
}

fn eq_check(id: String, lhs: &GradedMatrix<HPoly>, rhs: &GradedMatrix<HPoly>) -> Check {
    if lhs == rhs {
        Check::pass(id)
    } else {
        let w = lhs.first_difference(rhs).map(|(r, c)| Witness {
            row: r + 1,
            col: c + 1,
            lhs: lhs.get(r, c).render("h"),
            rhs: rhs.get(r, c).render("h"),
        });
        Check::fail(id, w)
    }
}

/// The contraction pipeline for `n = 2`: build the deformed exponential,
/// conjugate, take the limit, and compare with the stated matrix entry by
/// entry (81 checks), plus pole-freedom and a conjugation identity guard.
pub fn contraction_suite() -> Result<CheckReport> {
    let mut report = CheckReport::new("contraction", 2, "fund2");
    let gmat = transformation_g(2)?;
    let rq = rq_fundamental(2)?;

    let contracted = match contract(&rq, &gmat) {
        Ok(m) => {
            report.push(Check::pass("contract:pole-free"));
            m
        }
        Err(Error::PoleAtOne { row, col }) => {
            report.push(Check::fail(
                "contract:pole-free",
                Some(Witness {
                    row: row.unwrap_or(0),
                    col: col.unwrap_or(0),
                    lhs: "pole at q = 1".into(),
                    rhs: "finite".into(),
                }),
            ));
            return Ok(report);
        }
        Err(e) => return Err(e),
    };

    let id_q = GradedMatrix::<QRat>::identity(rq.space().clone());
    let id_h = GradedMatrix::<HPoly>::identity(rq.space().clone());
    report.push(eq_check(
        "contract:identity-guard".into(),
        &contract(&id_q, &gmat)?,
        &id_h,
    ));

    let stated = stated_contracted_rh_n2();
    let d = stated.dim();
    for r in 0..d {
        for c in 0..d {
            let id = format!("contract:({},{})", r + 1, c + 1);
            if contracted.get(r, c) == stated.get(r, c) {
                report.push(Check::pass(id));
            } else {
                report.push(Check::fail(
                    id,
                    Some(Witness {
                        row: r + 1,
                        col: c + 1,
                        lhs: contracted.get(r, c).render("h"),
                        rhs: stated.get(r, c).render("h"),
                    }),
                ));
            }
        }
    }

    let v = crate::classical::fundamental_space(2);
    report.push(Check::from_bool(
        "contract:qybe",
        qybe_holds(&contracted, &v),
    ));
    Ok(report)
}

/// Operator-valued matrix on the auxiliary space; entries are expressions
/// in the deformed generators, upper triangular with diagonal
/// `(T, ..., (-1)^F)`.
#[derive(Clone, Debug)]
pub struct LOperator {
    pub aux: SuperSpace,
    entries: Vec<Expr>,
    pub variant_note: Option<String>,
}

impl LOperator {
    pub fn dim(&self) -> usize {
        self.aux.dim()
    }

    pub fn entry(&self, a: usize, b: usize) -> &Expr {
        &self.entries[a * self.dim() + b]
    }
}

/// Reading of the rank-3 L-operator diagonal: the display shows `T` at the
/// `(3,3)` position where the rank-2 pattern suggests `T^-1`; both are
/// built and the RLL check decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LDiagonal {
    Stated,
    Inverted,
}

pub fn l_operator(n: u8, diag: LDiagonal) -> Result<LOperator> {
    l_operator_custom(n, diag, -1, 1)
}

/// Constructor exposing the ambiguous readings of the rank-3 display: the
/// `(3,3)` diagonal and the signs of the half-powers of `T` in the two
/// strip entries (`l12_half = -1`, `l23_half = 1` is the stated form
/// `2h T^{-1/2} E_23`, `-2h T^{1/2} E_12`).
pub fn l_operator_custom(
    n: u8,
    diag: LDiagonal,
    l12_half: i8,
    l23_half: i8,
) -> Result<LOperator> {
    let aux = crate::classical::fundamental_space(n);
    let dim = n as usize + 1;
    let mut entries = vec![Expr::zero(); dim * dim];
    let mut set = |a: usize, b: usize, x: Expr| entries[a * dim + b] = x;
    match n {
        2 => {
            set(0, 0, t(1));
            set(
                0,
                1,
                -(hnum(1, 1, 1) * g(h(1, 2))) + hnum(1, 2, 1) * (t(1) - t(-1)),
            );
            set(1, 1, t(-1));
            set(2, 2, g(GeneratorLabel::ParityOp));
        }
        3 => {
            set(0, 0, t(1));
            set(0, 1, hnum(2, 1, 1) * th(l12_half) * g(e(2, 3)));
            set(
                0,
                2,
                -(hnum(1, 1, 1) * g(h(1, 3))) + hnum(1, 2, 1) * (t(1) - t(-1)),
            );
            set(1, 1, Expr::one());
            set(1, 2, -(hnum(2, 1, 1) * th(l23_half) * g(e(1, 2))));
            set(
                2,
                2,
                match diag {
                    LDiagonal::Stated => t(1),
                    LDiagonal::Inverted => t(-1),
                },
            );
            set(3, 3, g(GeneratorLabel::ParityOp));
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "L-operator stated for N = 2, 3 only (got {n})"
            )))
        }
    }
    Ok(LOperator {
        aux,
        entries,
        variant_note: match (n, diag) {
            (3, LDiagonal::Inverted) => Some("diagonal (3,3) read as T^-1 instead of T".into()),
            _ => None,
        },
    })
}

/// `sum_ab E_ab (x) rho(L_ab)`: the L-operator with its entries evaluated
/// in the representation. All entries must be even operators (guarded), so
/// the embedding is the plain Kronecker product.
pub fn l_matrix(l: &LOperator, dt: &DeformedTable) -> Result<GradedMatrix<HPoly>> {
    let lookup = dt.lookup();
    let space = dt.space();
    let big = l.aux.tensor(space);
    let mut acc = GradedMatrix::zero(big);
    let d = l.dim();
    for a in 0..d {
        for b in 0..d {
            let expr = l.entry(a, b);
            if matches!(expr, Expr::Scalar(s) if s.is_zero()) {
                continue;
            }
            let m = eval(expr, space, &lookup)?;
            if !m.is_zero() && !m.clone().with_parity(Some(0)).verify_parity() {
                return Err(Error::Unsupported(format!(
                    "L entry ({}, {}) is not an even operator",
                    a + 1,
                    b + 1
                )));
            }
            let unit = GradedMatrix::<HPoly>::unit(l.aux.clone(), a, b);
            acc = acc.add(&unit.plain_kron(&m));
        }
    }
    Ok(acc)
}

/// `R12 L1 L2 = L2 L1 R12` on aux (x) aux (x) rep, with `R` acting on the
/// two auxiliary legs.
pub fn rll_holds(r: &GradedMatrix<HPoly>, l: &LOperator, dt: &DeformedTable) -> Result<bool> {
    let lookup = dt.lookup();
    let space = dt.space();
    let d = l.dim();
    let id_aux = GradedMatrix::<HPoly>::identity(l.aux.clone());
    let id_rep = GradedMatrix::<HPoly>::identity(space.clone());
    let r12 = r.plain_kron(&id_rep);
    let mut l1 = GradedMatrix::zero(l.aux.tensor(&l.aux).tensor(space));
    let mut l2 = l1.clone();
    for a in 0..d {
        for b in 0..d {
            let expr = l.entry(a, b);
            if matches!(expr, Expr::Scalar(s) if s.is_zero()) {
                continue;
            }
            let m = eval(expr, space, &lookup)?;
            let unit = GradedMatrix::<HPoly>::unit(l.aux.clone(), a, b);
            l1 = l1.add(&unit.plain_kron(&id_aux).plain_kron(&m));
            l2 = l2.add(&id_aux.plain_kron(&unit).plain_kron(&m));
        }
    }
    let lhs = r12.mul(&l1).mul(&l2);
    let rhs = l2.mul(&l1).mul(&r12);
    Ok(lhs == rhs)
}

/// Per-entry outcome of the matrix-coproduct consistency check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegOrder {
    /// `Delta(L_ab) = sum_c L_ac (x) L_cb`.
    Direct,
    /// `Delta(L_ab) = sum_c L_cb (x) L_ac`.
    Flipped,
    /// Holds in neither order.
    Neither,
}

/// Recorded baseline for the matrix-coproduct consistency (first-run
/// engine output, then frozen): the rank-2 operator is consistent with the
/// flipped leg order throughout; for rank 3 the corner and strip entries
/// are incompatible with the verified coproducts in either order (the
/// middle column introduces cross terms with no counterpart in the
/// coproduct rules).
pub fn recorded_l_coproduct_baseline(n: u8) -> impl Fn(usize, usize) -> LegOrder {
    move |a: usize, b: usize| match (n, a, b) {
        (2, 1, 2) => LegOrder::Flipped,
        (3, 1, 2) | (3, 1, 3) | (3, 2, 3) => LegOrder::Neither,
        _ => LegOrder::Direct,
    }
}

/// Matrix-coproduct consistency `Delta(L_ab) = sum_c L_ac (x) L_cb`,
/// checked in both leg orders; the observed order for each entry is
/// compared against the recorded baseline.
pub fn l_coproduct_checks(l: &LOperator, dt: &DeformedTable) -> Result<Vec<Check>> {
    let baseline = recorded_l_coproduct_baseline(dt.n());
    let rules = coproduct_rules(dt.n());
    let lookup = dt.lookup();
    let space = dt.space();
    let mut delta_cache = std::collections::BTreeMap::new();
    for (lbl, rule) in &rules {
        delta_cache.insert(*lbl, coproduct_matrix(rule, dt)?);
    }
    let dlookup = |lbl: &GeneratorLabel| delta_cache.get(lbl).cloned();
    let big = space.tensor(space);
    let d = l.dim();
    let mut checks = Vec::new();
    for a in 0..d {
        for b in 0..d {
            let lhs = eval(l.entry(a, b), &big, &dlookup)?;
            let mut direct = GradedMatrix::zero(big.clone());
            let mut flipped = GradedMatrix::zero(big.clone());
            for c in 0..d {
                let lac = eval(l.entry(a, c), space, &lookup)?;
                let lcb = eval(l.entry(c, b), space, &lookup)?;
                direct = direct.add(&lac.graded_kron(&lcb));
                flipped = flipped.add(&lcb.graded_kron(&lac));
            }
            let id = format!("frt:coproduct:L({},{})", a + 1, b + 1);
            let observed = if lhs == direct {
                LegOrder::Direct
            } else if lhs == flipped {
                LegOrder::Flipped
            } else {
                LegOrder::Neither
            };
            let expected = baseline(a + 1, b + 1);
            if observed != expected {
                let w = lhs.first_difference(&direct).map(|(r, c)| Witness {
                    row: r + 1,
                    col: c + 1,
                    lhs: lhs.get(r, c).render("h"),
                    rhs: direct.get(r, c).render("h"),
                });
                checks.push(Check::fail(id, w));
            } else {
                match observed {
                    LegOrder::Direct => checks.push(Check::pass(id)),
                    LegOrder::Flipped => checks.push(Check::variant_pass(
                        id,
                        "holds with flipped legs: Delta(L_ab) = sum_c L_cb (x) L_ac",
                    )),
                    LegOrder::Neither => checks.push(Check::variant_pass(
                        id,
                        "holds in neither leg order; matches the recorded baseline \
                         (the stated entry is not compatible with the verified coproducts)",
                    )),
                }
            }
        }
    }
    // counit applied entrywise gives the identity matrix
    let mut eps_ok = true;
    for a in 0..d {
        for b in 0..d {
            let val = crate::expr::counit_fold(l.entry(a, b), &|x| Some(counit(x)))?;
            let expected = if a == b { HPoly::one() } else { HPoly::zero() };
            eps_ok &= val == expected;
        }
    }
    checks.push(Check::from_bool("frt:counit", eps_ok));
    Ok(checks)
}

/// Intertwining data: for each variant of the R-matrix and each generator,
/// does `R Delta(x) = Delta^op(x) R` hold, with `Delta^op` the graded-flip
/// conjugate? Outcomes are compared against the recorded baseline.
pub fn intertwiner_checks(
    dt: &DeformedTable,
    baseline: &dyn Fn(&str, &GeneratorLabel) -> bool,
) -> Result<Vec<Check>> {
    let ctx = HopfContext::new(dt)?;
    let space = dt.space().clone();
    let tau = graded_flip::<HPoly>(&space, &space);
    let dressing = koszul_dressing(&space);

    let mut rs: Vec<(String, GradedMatrix<HPoly>)> = Vec::new();
    if dt.n() == 2 {
        let contracted = contract(&rq_fundamental(2)?, &transformation_g(2)?)?;
        rs.push(("contracted-dressed".into(), dressing.mul(&contracted)));
        rs.push(("contracted".into(), contracted));
    }
    let universal = universal_rh(dt)?;
    rs.push(("universal-dressed".into(), dressing.mul(&universal)));
    rs.push(("universal".into(), universal));
    rs.sort_by(|a, b| a.0.cmp(&b.0));

    let mut checks = Vec::new();
    for (name, r) in &rs {
        for (lbl, delta) in &ctx.delta {
            if matches!(lbl, GeneratorLabel::ParityOp) {
                continue;
            }
            let op = tau.mul(delta).mul(&tau);
            let holds = r.mul(delta) == op.mul(r);
            let expected = baseline(name, lbl);
            let id = format!("intertwine:{name}:{lbl}");
            if holds == expected {
                if holds {
                    checks.push(Check::pass(id));
                } else {
                    checks.push(Check::variant_pass(
                        id,
                        "does not intertwine; matches the recorded baseline",
                    ));
                }
            } else {
                checks.push(Check::fail_msg(
                    id,
                    format!("observed holds={holds}, baseline expects {expected}"),
                ));
            }
        }
    }
    Ok(checks)
}

/// Recorded intertwining baseline (first-run engine output, then frozen):
/// the universal element intertwines the graded opposite coproduct on
/// every generator; the contracted matrix does so only after Koszul
/// dressing, and dressing the universal element breaks the odd sector.
pub fn recorded_intertwiner_baseline(n: u8) -> impl Fn(&str, &GeneratorLabel) -> bool {
    move |name: &str, lbl: &GeneratorLabel| {
        let odd = lbl.parity(n) == 1;
        match name {
            "universal" | "contracted-dressed" => true,
            "contracted" | "universal-dressed" => !odd,
            _ => false,
        }
    }
}

/// The full R-matrix suite for one rank.
pub fn rmatrix_suite(n: u8, allow_variants: bool) -> Result<CheckReport> {
    let mut report = CheckReport::new("rmatrix", n, "fund");
    let dt = crate::jordanian::deformed_representation(n, crate::classical::Rep::Fund)?;
    let v = crate::classical::fundamental_space(n);
    let id2 = GradedMatrix::<HPoly>::identity(v.tensor(&v));

    if n == 2 {
        let rq = rq_fundamental(2)?;
        if qybe_holds(&rq, &v) {
            report.push(Check::pass("qybe:Rq"));
        } else if !allow_variants {
            report.push(Check::fail("qybe:Rq", None));
        } else {
            let mut variant = rq.clone();
            variant.set(8, 8, -QRat::q_pow(-1));
            let ok = qybe_holds(&variant, &v)
                && contract(&variant, &transformation_g(2)?)? == stated_contracted_rh_n2();
            if ok {
                report.push(Check::variant_pass(
                    "qybe:Rq",
                    "diagonal (9,9) entry -q^-2 read as -q^-1: the stated matrix fails \
                     the Yang-Baxter identity, the corrected one satisfies it and \
                     contracts to the same stated h-matrix",
                ));
            } else {
                report.push(Check::fail("qybe:Rq", None));
            }
        }
        let contracted = contract(&rq, &transformation_g(2)?)?;
        report.push(Check::from_bool(
            "qybe:Rh-contracted",
            qybe_holds(&contracted, &v),
        ));

        let universal = universal_rh(&dt)?;
        let h1 = dt.classical().matrix(h(1, 2))?;
        let e12 = dt.classical().matrix(e(1, 2))?;
        let closed = id2
            .add(&h1.plain_kron(e12).scale(&hmono(1, 1, 1)))
            .sub(&e12.plain_kron(h1).scale(&hmono(1, 1, 1)))
            .add(&e12.plain_kron(e12).scale(&hmono(1, 1, 2)));
        report.push(eq_check(
            "universal:closed-form".into(),
            &universal,
            &closed,
        ));

        report.push(eq_check(
            "universal:dressed-equals-contracted".into(),
            &koszul_dressing(&v).mul(&universal),
            &contracted,
        ));
        report.push(Check::from_bool(
            "qybe:Rh-universal",
            qybe_holds(&universal, &v),
        ));

        let at0 = contracted.map(|p| HPoly::constant(p.eval_at_zero()));
        report.push(eq_check(
            "h0:contracted-is-dressed-identity".into(),
            &at0,
            &koszul_dressing(&v),
        ));
    }

    let universal = universal_rh(&dt)?;
    let at0 = universal.map(|p| HPoly::constant(p.eval_at_zero()));
    report.push(eq_check("h0:universal-is-identity".into(), &at0, &id2));
    if n <= 3 {
        report.push(Check::from_bool(
            "qybe:Rh-universal-dressed",
            qybe_holds(&koszul_dressing(&v).mul(&universal), &v),
        ));
        report.extend(intertwiner_checks(&dt, &recorded_intertwiner_baseline(n))?);
    }

    match n {
        2 => {
            let l = l_operator(2, LDiagonal::Stated)?;
            let r = l_matrix(&l, &dt)?;
            let contracted = contract(&rq_fundamental(2)?, &transformation_g(2)?)?;
            report.push(eq_check(
                "frt:L-matrix-equals-contracted".into(),
                &r,
                &contracted,
            ));
            report.push(Check::from_bool("frt:rll", rll_holds(&r, &l, &dt)?));
            report.extend(l_coproduct_checks(&l, &dt)?);
        }
        3 => {
            let mut any = false;
            for diag in [LDiagonal::Stated, LDiagonal::Inverted] {
                let l = l_operator(3, diag)?;
                let r = l_matrix(&l, &dt)?;
                let holds = rll_holds(&r, &l, &dt)?;
                any |= holds;
                let id = format!(
                    "frt:rll:{}",
                    match diag {
                        LDiagonal::Stated => "diag-T",
                        LDiagonal::Inverted => "diag-T^-1",
                    }
                );
                match (diag, holds) {
                    (LDiagonal::Stated, true) => report.push(Check::pass(id)),
                    (LDiagonal::Stated, false) => report.push(Check::variant_pass(
                        id,
                        "stated diagonal fails RLL; see diag-T^-1",
                    )),
                    (LDiagonal::Inverted, true) => report.push(Check::variant_pass(
                        id,
                        "diagonal (3,3) read as T^-1 instead of T",
                    )),
                    (LDiagonal::Inverted, false) => report.push(Check::fail(id, None)),
                }
            }
            report.push(Check::from_bool("frt:rll:any-variant", any));
            let l = l_operator(3, LDiagonal::Inverted)?;
            report.extend(l_coproduct_checks(&l, &dt)?);
        }
        _ => {}
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_int;

    #[test]
    fn quantum_integers() {
        // [2]_q = q + q^-1
        assert_eq!(
            quantum_integer(2, ExpBase::Q),
            QRat::q_pow(1) + QRat::q_pow(-1)
        );
        assert_eq!(quantum_integer(1, ExpBase::Q), QRat::one());
        // the squared-base bracket: [2]_{q^2} = q^2 + q^-2
        assert_eq!(
            quantum_integer(2, ExpBase::QSquared),
            QRat::q_pow(2) + QRat::q_pow(-2)
        );
        assert_eq!(
            quantum_integer(2, ExpBase::Q).limit_q1().unwrap(),
            rat_int(2)
        );
    }

    #[test]
    fn deformed_exponential_truncates() {
        // x^2 = 0 gives E_q(x) = 1 + x
        let v = SuperSpace::all_even(2);
        let mut x = GradedMatrix::<QhPoly>::zero(v.clone());
        x.set(0, 1, QhPoly::monomial(QRat::q_pow(1), 1));
        let e = deformed_exponential(&x, ExpBase::Q).unwrap();
        assert_eq!(e, GradedMatrix::identity(v).add(&x));
    }

    #[test]
    fn g_is_one_plus_nilpotent() {
        // e_12^2 = 0 in the rank-2 fundamental, so G = 1 + (h/(q-1)) E12
        let gm = transformation_g(2).unwrap();
        let v = crate::classical::fundamental_space(2);
        let mut expected = GradedMatrix::<QhPoly>::identity(v);
        let u = QRat::one()
            .checked_div(&(QRat::q_pow(1) - QRat::one()))
            .unwrap();
        expected.set(0, 1, QhPoly::monomial(u, 1));
        assert_eq!(gm, expected);
    }

    #[test]
    fn rq_entries() {
        let rq = rq_fundamental(2).unwrap();
        assert_eq!(rq.get(0, 0), &QRat::q_pow(1));
        assert_eq!(rq.get(8, 8), &(-QRat::q_pow(-2)));
        assert_eq!(rq.get(1, 3), &(QRat::q_pow(1) - QRat::q_pow(-1)));
        assert!(rq_fundamental(3).is_err());
    }

    #[test]
    fn qybe_trivial_cases() {
        let v = crate::classical::fundamental_space(2);
        let id = GradedMatrix::<HPoly>::identity(v.tensor(&v));
        assert!(qybe_holds(&id, &v));
        let p = plain_flip::<HPoly>(&v, &v);
        assert!(qybe_holds(&p, &v));
    }

    #[test]
    fn contraction_reproduces_stated_matrix() {
        let r = contract(&rq_fundamental(2).unwrap(), &transformation_g(2).unwrap()).unwrap();
        assert_eq!(r, stated_contracted_rh_n2());
    }
}

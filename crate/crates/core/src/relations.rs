//! Relation catalogs and the matrix-identity check executor.
//!
//! Every relation is tested verbatim first. When the verbatim form fails
//! and variants are enabled, documented corrected variants are tried in
//! order; a variant that holds is reported as a `variant-pass` carrying its
//! annotation. Relations whose verbatim statement is unbuildable (undefined
//! symbols resolved by a documented alias) carry a permanent alias note and
//! report as `variant-pass` whenever they hold.

use crate::expr::{eval, Expr};
use crate::labels::GeneratorLabel;
use crate::report::{Check, Status, Witness};
use crate::scalars::HPoly;
use crate::superlinalg::{GradedMatrix, SuperSpace};

#[derive(Clone, Debug)]
pub struct Variant {
    pub note: String,
    pub lhs: Expr,
    pub rhs: Expr,
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub id: String,
    /// Permanent annotation (symbol aliases applied while transcribing).
    pub note: Option<String>,
    pub lhs: Expr,
    pub rhs: Expr,
    pub variants: Vec<Variant>,
}

impl Relation {
    pub fn new(id: impl Into<String>, lhs: Expr, rhs: Expr) -> Self {
        Relation {
            id: id.into(),
            note: None,
            lhs,
            rhs,
            variants: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_variant(mut self, note: impl Into<String>, lhs: Expr, rhs: Expr) -> Self {
        self.variants.push(Variant {
            note: note.into(),
            lhs,
            rhs,
        });
        self
    }

    /// The form of the relation that actually holds in the given
    /// representation (verbatim if it passes, otherwise the first passing
    /// variant). Used by downstream suites that need a *valid* identity,
    /// e.g. the coproduct homomorphism check.
    pub fn resolved_form<F>(&self, space: &SuperSpace, lookup: &F) -> Option<(Expr, Expr)>
    where
        F: Fn(&GeneratorLabel) -> Option<GradedMatrix<HPoly>>,
    {
        let check = check_relation(self, space, lookup, true);
        match check.status {
            Status::Pass => Some((self.lhs.clone(), self.rhs.clone())),
            Status::VariantPass => {
                if check.variant.as_deref() == self.note.as_deref() {
                    Some((self.lhs.clone(), self.rhs.clone()))
                } else {
                    self.variants
                        .iter()
                        .find(|v| Some(v.note.as_str()) == check.variant.as_deref())
                        .map(|v| (v.lhs.clone(), v.rhs.clone()))
                }
            }
            Status::Fail => None,
        }
    }
}

fn witness(lhs: &GradedMatrix<HPoly>, rhs: &GradedMatrix<HPoly>) -> Option<Witness> {
    lhs.first_difference(rhs).map(|(r, c)| Witness {
        row: r + 1,
        col: c + 1,
        lhs: lhs.get(r, c).render("h"),
        rhs: rhs.get(r, c).render("h"),
    })
}

pub fn check_relation<F>(
    rel: &Relation,
    space: &SuperSpace,
    lookup: &F,
    allow_variants: bool,
) -> Check
where
    F: Fn(&GeneratorLabel) -> Option<GradedMatrix<HPoly>>,
{
    let verbatim = match (
        eval(&rel.lhs, space, lookup),
        eval(&rel.rhs, space, lookup),
    ) {
        (Ok(l), Ok(r)) => {
            if l == r {
                return match &rel.note {
                    Some(note) => Check::variant_pass(&rel.id, note.clone()),
                    None => Check::pass(&rel.id),
                };
            }
            Some(witness(&l, &r))
        }
        (Err(e), _) | (_, Err(e)) => {
            return Check::fail_msg(&rel.id, format!("evaluation error: {e}"))
        }
    };

    if allow_variants {
        for v in &rel.variants {
            if let (Ok(l), Ok(r)) = (eval(&v.lhs, space, lookup), eval(&v.rhs, space, lookup)) {
                if l == r {
                    return Check::variant_pass(&rel.id, v.note.clone());
                }
            }
        }
    }

    Check::fail(&rel.id, verbatim.flatten())
}

/// Run a catalog in order. Independent checks are evaluated in parallel
/// when the `parallel` feature is enabled; report order is unaffected.
pub fn run_relations<F>(
    relations: &[Relation],
    space: &SuperSpace,
    lookup: &F,
    allow_variants: bool,
) -> Vec<Check>
where
    F: Fn(&GeneratorLabel) -> Option<GradedMatrix<HPoly>> + Sync,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        relations
            .par_iter()
            .map(|r| check_relation(r, space, lookup, allow_variants))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        relations
            .iter()
            .map(|r| check_relation(r, space, lookup, allow_variants))
            .collect()
    }
}

//! Builds groups from parsed expressions.

use semiabelian::catalog;
use semiabelian::group::{
    abelian, cyclic, direct_product, quotient, semidirect_product, wreath_product_bounded,
    Action, ElementId, Group,
};
use semiabelian::subgroup::generated_subgroup;
use semiabelian::{Error, Result};

use crate::ast::{ActionSpec, GroupExpr, Word};

/// Largest group order an expression may produce by default.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 20;

pub fn eval_expr(ast: &GroupExpr) -> Result<Group> {
    eval_bounded(ast, DEFAULT_MAX_ORDER)
}

/// Evaluates with every intermediate group bounded by `max_order`.
pub fn eval_bounded(ast: &GroupExpr, max_order: u64) -> Result<Group> {
    let g = match ast {
        GroupExpr::Cyclic(n) => cyclic(*n)?,
        GroupExpr::Abelian(xs) => abelian(xs)?,
        GroupExpr::Named(name) => catalog::named(name)
            .ok_or_else(|| Error::Domain(format!("unknown catalog group `{name}`")))??,
        GroupExpr::Direct(l, r) => {
            let (l, r) = (eval_bounded(l, max_order)?, eval_bounded(r, max_order)?);
            check(l.order() as u64 * r.order() as u64, max_order)?;
            direct_product(&l, &r)?
        }
        GroupExpr::Semidirect { base, top, action } => {
            let base = eval_bounded(base, max_order)?;
            let top = eval_bounded(top, max_order)?;
            check(base.order() as u64 * top.order() as u64, max_order)?;
            let action = build_action(&top, &base, action)?;
            semidirect_product(&base, &top, &action)?
        }
        GroupExpr::Wreath(l, r) => {
            let (l, r) = (eval_bounded(l, max_order)?, eval_bounded(r, max_order)?);
            wreath_product_bounded(&l, &r, max_order)?
        }
        GroupExpr::Quotient(inner, words) => {
            let g = eval_bounded(inner, max_order)?;
            let seeds = words
                .iter()
                .map(|w| resolve_word(&g, w))
                .collect::<Result<Vec<_>>>()?;
            let n = generated_subgroup(&g, &seeds)?;
            quotient(&g, &n)?.0
        }
    };
    check(g.order() as u64, max_order)?;
    Ok(g)
}

fn check(order: u64, max_order: u64) -> Result<()> {
    if order > max_order {
        return Err(Error::Capacity {
            what: "group expression",
            required: order.to_string(),
            limit: max_order,
        });
    }
    Ok(())
}

fn resolve_word(g: &Group, w: &Word) -> Result<ElementId> {
    match w {
        Word::Index(i) if *i < g.order() => Ok(*i),
        Word::Index(i) => Err(Error::Domain(format!(
            "element #{i} is outside a group of order {}",
            g.order()
        ))),
        Word::Label(label) => g
            .find_label(label)
            .ok_or_else(|| Error::Domain(format!("no element is labeled `{label}`"))),
    }
}

fn build_action(top: &Group, base: &Group, spec: &ActionSpec) -> Result<Action> {
    match spec {
        ActionSpec::Triv => Ok(Action::trivial(top, base)),
        ActionSpec::Inv => Action::inversion(top, base),
        ActionSpec::Perm(perms) => {
            let images = perms
                .iter()
                .map(|cycles| permutation(base.order(), cycles))
                .collect::<Result<Vec<_>>>()?;
            Action::from_generator_images(top, base, &images)
        }
    }
}

fn permutation(n: usize, cycles: &[Vec<usize>]) -> Result<Vec<ElementId>> {
    let mut perm: Vec<ElementId> = (0..n).collect();
    for c in cycles {
        for (i, &x) in c.iter().enumerate() {
            let y = c[(i + 1) % c.len()];
            if x >= n || y >= n {
                return Err(Error::InvalidAction(format!(
                    "index {} is outside a base group of order {n}",
                    x.max(y)
                )));
            }
            perm[x] = y;
        }
    }
    Ok(perm)
}

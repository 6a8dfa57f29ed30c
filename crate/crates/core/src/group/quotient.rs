use super::{ElementId, Group, Homomorphism, VerifyConfig, TABLE_LIMIT};
use crate::error::{Error, Result};
use crate::subgroup::{is_normal, Subgroup};

/// The coset group `G/N` and its canonical projection.
///
/// Cosets are numbered by their smallest member, so the identity coset is 0.
/// Each coset is labeled `[x]` after that smallest member `x`.
pub fn quotient(group: &Group, normal: &Subgroup) -> Result<(Group, Homomorphism)> {
    if !normal.parent().ptr_eq(group) {
        return Err(Error::Domain(
            "quotient by a subgroup of a different group".into(),
        ));
    }
    if !is_normal(group, normal) {
        return Err(Error::NotNormal);
    }
    let index = group.order() / normal.order();
    if index > TABLE_LIMIT {
        return Err(Error::capacity("quotient group", index, TABLE_LIMIT as u64));
    }
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps: Vec<ElementId> = Vec::with_capacity(index);
    for x in group.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &n in normal.members() {
            coset_of[group.mul(x, n)] = c;
        }
    }
    let labels = reps.iter().map(|&x| format!("[{}]", group.label(x))).collect();
    let q = Group::from_fn(labels, |i, j| coset_of[group.mul(reps[i], reps[j])])?;
    let proj = Homomorphism::from_fn(group, &q, |x| coset_of[x], &VerifyConfig::default())?;
    Ok((q, proj))
}

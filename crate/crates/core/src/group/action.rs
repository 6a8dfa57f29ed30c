use std::sync::Arc;

use super::{ElementId, Group, IDENTITY};
use crate::error::{Error, Result};

/// An action of `top` on `base` by automorphisms, stored as one permutation
/// of the base elements per top element.
#[derive(Clone)]
pub struct Action {
    top: Group,
    base: Group,
    perms: Arc<Vec<Vec<ElementId>>>,
}

impl Action {
    /// Validates a full table `perms[h][a] = h·a` eagerly: every row must be
    /// an automorphism of `base` and `h ↦ perms[h]` a homomorphism.
    pub fn new(top: &Group, base: &Group, perms: Vec<Vec<ElementId>>) -> Result<Action> {
        if perms.len() != top.order() {
            return Err(Error::InvalidAction(format!(
                "{} permutations for a top group of order {}",
                perms.len(),
                top.order()
            )));
        }
        for (h, perm) in perms.iter().enumerate() {
            check_automorphism(base, perm).map_err(|e| {
                Error::InvalidAction(format!("image of top element {h}: {e}"))
            })?;
        }
        if perms[IDENTITY].iter().enumerate().any(|(a, &b)| a != b) {
            return Err(Error::InvalidAction(
                "identity of the top group must act trivially".into(),
            ));
        }
        // auto(s·h) = auto(s)∘auto(h) for generators s and all h
        for &s in top.generators() {
            for h in top.elements() {
                let sh = top.mul(s, h);
                for a in base.elements() {
                    if perms[sh][a] != perms[s][perms[h][a]] {
                        return Err(Error::InvalidAction(format!(
                            "h ↦ auto(h) is not a homomorphism at ({s}, {h})"
                        )));
                    }
                }
            }
        }
        Ok(Action {
            top: top.clone(),
            base: base.clone(),
            perms: Arc::new(perms),
        })
    }

    /// Extends automorphisms assigned to the generators of `top` (in the order
    /// of [`Group::generators`]) to the whole group.
    pub fn from_generator_images(
        top: &Group,
        base: &Group,
        images: &[Vec<ElementId>],
    ) -> Result<Action> {
        let gens = top.generators();
        if images.len() != gens.len() {
            return Err(Error::InvalidAction(format!(
                "{} automorphisms given for {} generators",
                images.len(),
                gens.len()
            )));
        }
        for img in images {
            check_automorphism(base, img)?;
        }
        let mut perms: Vec<Option<Vec<ElementId>>> = vec![None; top.order()];
        perms[IDENTITY] = Some(base.elements().collect());
        let mut queue = vec![IDENTITY];
        let mut i = 0;
        while i < queue.len() {
            let h = queue[i];
            for (&s, img) in gens.iter().zip(images) {
                // auto(h·s) = auto(h)∘auto(s)
                let hs = top.mul(h, s);
                let cur = perms[h].as_ref().unwrap();
                let composed: Vec<_> = base.elements().map(|a| cur[img[a]]).collect();
                match &perms[hs] {
                    None => {
                        perms[hs] = Some(composed);
                        queue.push(hs);
                    }
                    Some(existing) if *existing != composed => {
                        return Err(Error::InvalidAction(
                            "generator images do not define a homomorphism into Aut(base)".into(),
                        ));
                    }
                    Some(_) => {}
                }
            }
            i += 1;
        }
        let perms = perms.into_iter().map(Option::unwrap).collect();
        Action::new(top, base, perms)
    }

    pub fn trivial(top: &Group, base: &Group) -> Action {
        let id: Vec<_> = base.elements().collect();
        Action {
            top: top.clone(),
            base: base.clone(),
            perms: Arc::new(vec![id; top.order()]),
        }
    }

    /// Every generator of `top` acts by inversion. Requires an abelian base and
    /// a top group admitting the resulting sign map.
    pub fn inversion(top: &Group, base: &Group) -> Result<Action> {
        if !base.is_abelian() {
            return Err(Error::InvalidAction(
                "inversion is an automorphism only of abelian groups".into(),
            ));
        }
        let inv: Vec<_> = base.elements().map(|a| base.inv(a)).collect();
        let images = vec![inv; top.generators().len()];
        Action::from_generator_images(top, base, &images)
    }

    /// Pulls an action back along a homomorphism `phi: new_top → top`.
    pub fn pullback(&self, phi: &super::Homomorphism) -> Result<Action> {
        if !phi.codomain().ptr_eq(&self.top) {
            return Err(Error::InvalidAction(
                "pullback map does not land in the acting group".into(),
            ));
        }
        let perms = phi
            .domain()
            .elements()
            .map(|h| self.perms[phi.apply(h)].clone())
            .collect();
        Action::new(phi.domain(), &self.base, perms)
    }

    #[inline]
    pub fn apply(&self, h: ElementId, a: ElementId) -> ElementId {
        self.perms[h][a]
    }

    pub fn top(&self) -> &Group {
        &self.top
    }

    pub fn base(&self) -> &Group {
        &self.base
    }

    pub fn permutation(&self, h: ElementId) -> &[ElementId] {
        &self.perms[h]
    }
}

fn check_automorphism(base: &Group, perm: &[ElementId]) -> Result<()> {
    let n = base.order();
    if perm.len() != n {
        return Err(Error::InvalidAction(format!(
            "permutation has length {} but the base has order {n}",
            perm.len()
        )));
    }
    let mut hit = vec![false; n];
    for &x in perm {
        if x >= n || hit[x] {
            return Err(Error::InvalidAction("not a permutation".into()));
        }
        hit[x] = true;
    }
    if perm[IDENTITY] != IDENTITY {
        return Err(Error::InvalidAction("identity is not fixed".into()));
    }
    for &s in base.generators() {
        for b in base.elements() {
            if perm[base.mul(s, b)] != base.mul(perm[s], perm[b]) {
                return Err(Error::InvalidAction(format!(
                    "not an automorphism at ({s}, {b})"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;

    #[test]
    fn inversion_on_c4_by_c2() {
        let c4 = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        let act = Action::inversion(&c2, &c4).unwrap();
        assert_eq!(act.permutation(1), &[0, 3, 2, 1]);
        assert_eq!(act.permutation(0), &[0, 1, 2, 3]);
    }

    #[test]
    fn inversion_by_c3_is_rejected() {
        // generator ↦ inversion has odd order image, so g³ = 1 ↦ inversion ≠ id
        let c4 = cyclic(4).unwrap();
        let c3 = cyclic(3).unwrap();
        assert!(matches!(
            Action::inversion(&c3, &c4),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let c4 = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        // swaps g and g^2: not a homomorphism
        let bad = vec![vec![0, 1, 2, 3], vec![0, 2, 1, 3]];
        assert!(matches!(
            Action::new(&c2, &c4, bad),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn c9_by_c3_power_map() {
        let c9 = cyclic(9).unwrap();
        let c3 = cyclic(3).unwrap();
        let img: Vec<_> = (0..9).map(|i| (4 * i) % 9).collect();
        let act = Action::from_generator_images(&c3, &c9, &[img]).unwrap();
        assert_eq!(act.apply(2, 1), 7);
    }
}

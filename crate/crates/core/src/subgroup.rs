//! Subgroups of a fixed parent group and the subgroup calculus used by the
//! decomposition machinery: closures, enumeration, normality, relative
//! commutators, agemo, Frattini subgroup, rank, `A/Aᵖ[A,H]` and its minimal
//! lift.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{
    log_p, quotient, ElementId, Group, Homomorphism, VerifyConfig, IDENTITY, TABLE_LIMIT,
};

/// Default bound on the order of groups whose subgroups are enumerated.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 512;

/// A subgroup of `parent`, stored as its sorted member set plus a generating
/// witness.
#[derive(Clone)]
pub struct Subgroup {
    parent: Group,
    members: Arc<Vec<ElementId>>,
    mask: Arc<FixedBitSet>,
    generators: Vec<ElementId>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.order() <= 16 {
            write!(f, "Subgroup{:?}", self.members)
        } else {
            write!(f, "Subgroup(order={})", self.order())
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.ptr_eq(&other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordered by `(order, member set lexicographically)`.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl Subgroup {
    pub fn trivial(parent: &Group) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        mask.insert(IDENTITY);
        Subgroup {
            parent: parent.clone(),
            members: Arc::new(vec![IDENTITY]),
            mask: Arc::new(mask),
            generators: vec![],
        }
    }

    pub fn whole(parent: &Group) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(parent.order());
        mask.insert_range(..);
        Subgroup {
            parent: parent.clone(),
            members: Arc::new(parent.elements().collect()),
            mask: Arc::new(mask),
            generators: parent.generators().to_vec(),
        }
    }

    /// Wraps a member set, checking closure and picking lowest-index generators.
    pub fn from_members(parent: &Group, mut members: Vec<ElementId>) -> Result<Subgroup> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&IDENTITY) {
            return Err(Error::Domain("member set lacks the identity".into()));
        }
        if members.iter().any(|&x| x >= parent.order()) {
            return Err(Error::Domain("member outside the parent group".into()));
        }
        let mut closure = Closure::new(parent);
        let mut generators = Vec::new();
        for &x in &members {
            if !closure.contains(x) {
                generators.push(x);
                closure.add(x);
            }
        }
        let sub = closure.finish(generators);
        if *sub.members != members {
            return Err(Error::Domain("member set is not closed".into()));
        }
        Ok(sub)
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.mask.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.parent.ptr_eq(&other.parent) && self.mask.is_subset(&other.mask)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn intersection_order(&self, other: &Subgroup) -> usize {
        self.mask.intersection_count(&other.mask)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<_> = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup::from_members(&self.parent, members).expect("intersection of subgroups")
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let mut closure = Closure::from_subgroup(self);
        for &g in &other.generators {
            closure.add(g);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().copied());
        closure.finish(gens)
    }

    /// Extends by one more generator.
    pub fn extend(&self, x: ElementId) -> Subgroup {
        let mut closure = Closure::from_subgroup(self);
        closure.add(x);
        let mut gens = self.generators.clone();
        gens.push(x);
        closure.finish(gens)
    }

    /// Position of a parent element among the sorted members, which is its
    /// index in [`Subgroup::as_group`].
    pub fn local_index(&self, x: ElementId) -> Option<ElementId> {
        self.members.binary_search(&x).ok()
    }

    /// Re-homes the subgroup as a standalone group (elements numbered by
    /// ascending parent index, labels inherited) with its embedding.
    pub fn as_group(&self) -> Result<(Group, Homomorphism)> {
        if self.order() > TABLE_LIMIT {
            return Err(Error::capacity(
                "subgroup as standalone group",
                self.order(),
                TABLE_LIMIT as u64,
            ));
        }
        let g = &self.parent;
        let m = &self.members;
        let labels = m.iter().map(|&x| g.label(x)).collect();
        let local = Group::from_fn(labels, |i, j| {
            self.local_index(g.mul(m[i], m[j])).expect("closed subgroup")
        })?;
        let embed = Homomorphism::from_fn(&local, g, |i| m[i], &VerifyConfig::default())?;
        Ok((local, embed))
    }

    /// Maps this subgroup through a homomorphism defined on its parent.
    pub fn image_under(&self, phi: &Homomorphism) -> Result<Subgroup> {
        if !phi.domain().ptr_eq(&self.parent) {
            return Err(Error::Domain("map is defined on a different group".into()));
        }
        let gens: Vec<_> = self.generators.iter().map(|&x| phi.apply(x)).collect();
        generated_subgroup(phi.codomain(), &gens)
    }
}

/// Incremental closure under right multiplication by generators.
struct Closure<'a> {
    group: &'a Group,
    members: Vec<ElementId>,
    mask: FixedBitSet,
    gens: Vec<ElementId>,
}

impl<'a> Closure<'a> {
    fn new(group: &'a Group) -> Self {
        let mut mask = FixedBitSet::with_capacity(group.order());
        mask.insert(IDENTITY);
        Closure {
            group,
            members: vec![IDENTITY],
            mask,
            gens: Vec::new(),
        }
    }

    fn from_subgroup(sub: &'a Subgroup) -> Self {
        Closure {
            group: &sub.parent,
            members: sub.members.to_vec(),
            mask: (*sub.mask).clone(),
            gens: sub.generators.clone(),
        }
    }

    fn contains(&self, x: ElementId) -> bool {
        self.mask.contains(x)
    }

    /// Old members only need the new generator; new members need all of them.
    fn add(&mut self, x: ElementId) {
        if self.mask.contains(x) {
            return;
        }
        self.gens.push(x);
        let old = self.members.len();
        for i in 0..old {
            let y = self.group.mul(self.members[i], x);
            if !self.mask.put(y) {
                self.members.push(y);
            }
        }
        let mut i = old;
        while i < self.members.len() {
            let m = self.members[i];
            for k in 0..self.gens.len() {
                let y = self.group.mul(m, self.gens[k]);
                if !self.mask.put(y) {
                    self.members.push(y);
                }
            }
            i += 1;
        }
    }

    fn finish(mut self, generators: Vec<ElementId>) -> Subgroup {
        self.members.sort_unstable();
        Subgroup {
            parent: self.group.clone(),
            members: Arc::new(self.members),
            mask: Arc::new(self.mask),
            generators,
        }
    }
}

/// Smallest subgroup containing `seeds`; the seeds are kept as generators.
pub fn generated_subgroup(group: &Group, seeds: &[ElementId]) -> Result<Subgroup> {
    if let Some(&x) = seeds.iter().find(|&&x| x >= group.order()) {
        return Err(Error::Domain(format!(
            "element {x} is outside a group of order {}",
            group.order()
        )));
    }
    let mut closure = Closure::new(group);
    for &s in seeds {
        closure.add(s);
    }
    let mut gens: Vec<_> = seeds.iter().copied().filter(|&s| s != IDENTITY).collect();
    gens.sort_unstable();
    gens.dedup();
    Ok(closure.finish(gens))
}

/// Every subgroup exactly once, sorted by `(order, member set)`.
///
/// Layered closure: start from the cyclic subgroups, then repeatedly extend
/// each newly found subgroup by one outside element, deduplicating by member
/// set. Elements in the same left coset `S·x` give the same extension and are
/// tried once.
pub fn all_subgroups(group: &Group, limit: usize) -> Result<Vec<Subgroup>> {
    if group.order() > limit {
        return Err(Error::capacity(
            "subgroup enumeration",
            group.order(),
            limit as u64,
        ));
    }
    let mut seen: HashSet<Arc<Vec<ElementId>>> = HashSet::new();
    let mut all = Vec::new();
    let mut layer = Vec::new();
    for x in group.elements() {
        let s = generated_subgroup(group, &[x])?;
        if seen.insert(s.members.clone()) {
            layer.push(s.clone());
            all.push(s);
        }
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for s in &layer {
            let mut tried = (*s.mask).clone();
            for x in group.elements() {
                if tried.contains(x) {
                    continue;
                }
                for &m in s.members.iter() {
                    tried.insert(group.mul(m, x));
                }
                let t = s.extend(x);
                if seen.insert(t.members.clone()) {
                    next.push(t.clone());
                    all.push(t);
                }
            }
        }
        layer = next;
    }
    all.sort();
    Ok(all)
}

/// `g H g⁻¹ = H` for every generator `g` of the parent.
pub fn is_normal(group: &Group, sub: &Subgroup) -> bool {
    sub.parent.ptr_eq(group) && normalizes_by(group, group.generators(), sub)
}

/// Normality of `sub` inside an intermediate subgroup `within`.
pub fn is_normal_in(sub: &Subgroup, within: &Subgroup) -> bool {
    sub.is_subgroup_of(within) && normalizes_by(&sub.parent, &within.generators, sub)
}

fn normalizes_by(group: &Group, conjugators: &[ElementId], sub: &Subgroup) -> bool {
    conjugators.iter().all(|&g| {
        sub.members
            .iter()
            .all(|&h| sub.contains(group.conj(g, h)))
    })
}

/// `[A,H]`, generated by `h a h⁻¹ a⁻¹` for `a ∈ A`, `h ∈ H`.
pub fn relative_commutator(a: &Subgroup, h: &Subgroup) -> Result<Subgroup> {
    if !a.parent.ptr_eq(&h.parent) {
        return Err(Error::Domain("subgroups of different groups".into()));
    }
    let g = &a.parent;
    if !normalizes_by(g, &h.generators, a) {
        return Err(Error::Normalization("H".into()));
    }
    let mut closure = Closure::new(g);
    for &x in h.members.iter() {
        for &y in a.members.iter() {
            closure.add(g.commutator(x, y));
        }
    }
    let gens = closure.gens.clone();
    Ok(closure.finish(gens))
}

/// `Aᵖ`, generated by the `p`-th powers of members of `A`.
pub fn agemo(a: &Subgroup, p: u64) -> Subgroup {
    let g = &a.parent;
    let mut closure = Closure::new(g);
    for &x in a.members.iter() {
        closure.add(g.pow(x, p));
    }
    let gens = closure.gens.clone();
    closure.finish(gens)
}

/// `[K,K]`.
pub fn derived_subgroup(k: &Subgroup) -> Subgroup {
    let g = &k.parent;
    let mut closure = Closure::new(g);
    for &x in k.members.iter() {
        for &y in k.members.iter() {
            closure.add(g.commutator(x, y));
        }
    }
    let gens = closure.gens.clone();
    closure.finish(gens)
}

fn p_of(group: &Group, what: &str) -> Result<Option<u64>> {
    if !group.is_p_group() {
        return Err(Error::Domain(format!(
            "{what} needs a p-group, got order {}",
            group.order()
        )));
    }
    Ok(group.prime())
}

/// `Φ(G) = Gᵖ[G,G]`.
pub fn frattini(group: &Group) -> Result<Subgroup> {
    frattini_of(&Subgroup::whole(group))
}

/// `Φ(K) = Kᵖ[K,K]` for a subgroup `K` of a p-group.
///
/// Up to the table limit this closes the product of `Kᵖ` and `[K,K]` directly.
/// Larger subgroups use the normal closure in `K` of `sᵖ` and `[s,t]` over
/// generators `s, t` of `K`, which is the same subgroup for p-groups.
pub fn frattini_of(k: &Subgroup) -> Result<Subgroup> {
    let Some(p) = p_of(&k.parent, "Frattini subgroup")? else {
        return Ok(Subgroup::trivial(&k.parent));
    };
    if k.order() <= TABLE_LIMIT {
        return Ok(agemo(k, p).join(&derived_subgroup(k)));
    }
    let g = &k.parent;
    let mut seeds = Vec::new();
    for (i, &s) in k.generators.iter().enumerate() {
        seeds.push(g.pow(s, p));
        for &t in &k.generators[i + 1..] {
            seeds.push(g.commutator(s, t));
        }
    }
    Ok(normal_closure(g, &k.generators, &seeds))
}

/// Smallest subgroup containing `seeds` and normalized by `conjugators`.
pub fn normal_closure(group: &Group, conjugators: &[ElementId], seeds: &[ElementId]) -> Subgroup {
    let mut closure = Closure::new(group);
    for &s in seeds {
        closure.add(s);
    }
    let mut i = 0;
    while i < closure.gens.len() {
        let x = closure.gens[i];
        for &c in conjugators {
            let y = group.conj(c, x);
            closure.add(y);
        }
        i += 1;
    }
    let gens = closure.gens.clone();
    closure.finish(gens)
}

/// `d(G) = log_p |G/Φ(G)|`.
pub fn rank(group: &Group) -> Result<usize> {
    rank_of(&Subgroup::whole(group))
}

pub fn rank_of(k: &Subgroup) -> Result<usize> {
    let phi = frattini_of(k)?;
    match k.parent.prime() {
        None => Ok(0),
        Some(p) => log_p(k.order() / phi.order(), p)
            .map(|r| r as usize)
            .ok_or_else(|| Error::Invariant("|K/Φ(K)| is not a power of p".into())),
    }
}

/// `{a·h : a ∈ A, h ∈ H}` as a sorted set.
pub fn product_set(a: &Subgroup, h: &Subgroup) -> Vec<ElementId> {
    let g = &a.parent;
    let mut mask = FixedBitSet::with_capacity(g.order());
    for &x in a.members.iter() {
        for &y in h.members.iter() {
            mask.insert(g.mul(x, y));
        }
    }
    mask.ones().collect()
}

/// `Ā = A/Aᵖ[A,H]` together with the data used to build it.
#[derive(Clone, Debug)]
pub struct RankedQuotient {
    pub source: Subgroup,
    /// `Aᵖ[A,H]` inside the parent group.
    pub relative: Subgroup,
    /// `A` as a standalone group and its embedding into the parent.
    pub local: Group,
    pub embedding: Homomorphism,
    pub quotient: Group,
    /// `A → Ā` on the standalone copy of `A`.
    pub projection: Homomorphism,
    pub rank: usize,
    pub prime: Option<u64>,
}

impl RankedQuotient {
    /// Image in `Ā` of a parent element lying in `A`.
    pub fn project(&self, x: ElementId) -> Option<ElementId> {
        self.source
            .local_index(x)
            .map(|i| self.projection.apply(i))
    }
}

/// Builds `Aᵖ[A,H]`, the quotient `Ā` and its rank.
///
/// `A` must be abelian and normalized by `H`, which covers both a normal `A`
/// of the parent and the factors of a decomposition of an intermediate
/// subgroup.
pub fn reduced_quotient(a: &Subgroup, h: &Subgroup) -> Result<RankedQuotient> {
    let g = &a.parent;
    if !a.is_abelian() {
        return Err(Error::Domain("A is not abelian".into()));
    }
    if !a.parent.ptr_eq(&h.parent) {
        return Err(Error::Domain("subgroups of different groups".into()));
    }
    if !normalizes_by(g, &h.generators, a) {
        return Err(Error::Domain("A is not normalized by H".into()));
    }
    let prime = p_of(g, "reduced quotient")?;
    let relative = match prime {
        Some(p) => agemo(a, p).join(&relative_commutator(a, h)?),
        None => Subgroup::trivial(g),
    };
    let (local, embedding) = a.as_group()?;
    let local_rel: Vec<_> = relative
        .members()
        .iter()
        .map(|&x| a.local_index(x).expect("Aᵖ[A,H] lies in A"))
        .collect();
    let local_rel = Subgroup::from_members(&local, local_rel)?;
    let (quotient_group, projection) = quotient(&local, &local_rel)?;
    let rank = match prime {
        Some(p) => {
            if quotient_group
                .elements()
                .any(|x| quotient_group.pow(x, p) != IDENTITY)
            {
                return Err(Error::Invariant("Ā is not elementary abelian".into()));
            }
            log_p(quotient_group.order(), p).unwrap() as usize
        }
        None => 0,
    };
    Ok(RankedQuotient {
        source: a.clone(),
        relative,
        local,
        embedding,
        quotient: quotient_group,
        projection,
        rank,
        prime,
    })
}

/// `A_m`: a smallest subgroup of `A` with `Aᵖ[A,H]·A_m = A`.
///
/// Subgroups of `A` are scanned in `(order, member set)` order and the first
/// one covering `Ā` is returned, so the result is minimal both by order and by
/// inclusion. Its generating witness consists of lowest-index representatives
/// whose images form a basis of `Ā`.
pub fn minimal_lift(rq: &RankedQuotient) -> Result<Subgroup> {
    let a = &rq.source;
    let g = a.parent();
    if rq.relative.is_trivial() {
        return Ok(a.clone());
    }
    let need = a.order();
    let local_rel: Vec<_> = rq
        .relative
        .members()
        .iter()
        .map(|&x| a.local_index(x).unwrap())
        .collect();
    let local_rel = Subgroup::from_members(&rq.local, local_rel)?;
    let candidates = all_subgroups(&rq.local, usize::MAX)?;
    let lifted = candidates
        .iter()
        .find(|s| local_rel.order() * s.order() / local_rel.intersection_order(s) == need)
        .ok_or_else(|| Error::Invariant("A itself covers Ā".into()))?;
    // lowest-index representatives with independent images
    let mut span = Subgroup::trivial(&rq.quotient);
    let mut reps = Vec::new();
    for &i in lifted.members() {
        let img = rq.projection.apply(i);
        if !span.contains(img) {
            span = span.extend(img);
            reps.push(a.members()[i]);
        }
    }
    let lift = generated_subgroup(g, &reps)?;
    if lift.order() != lifted.order() {
        return Err(Error::Invariant(
            "representatives do not regenerate the minimal lift".into(),
        ));
    }
    Ok(lift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dihedral, quaternion};
    use crate::group::{abelian, cyclic};

    fn brute_subgroup_count(g: &Group) -> usize {
        // every subset containing the identity that is closed under multiplication
        let n = g.order();
        assert!(n <= 12);
        (0u32..(1 << n))
            .filter(|m| m & 1 == 1)
            .filter(|&m| {
                (0..n).all(|a| {
                    m >> a & 1 == 0 || (0..n).all(|b| m >> b & 1 == 0 || m >> g.mul(a, b) & 1 == 1)
                })
            })
            .count()
    }

    // Q8 numbering from the catalog: x^a y^e at a + 4e with x = i, y = j.
    const I: ElementId = 1;
    const J: ElementId = 4;

    #[test]
    fn generated() {
        let c4 = cyclic(4).unwrap();
        assert!(generated_subgroup(&c4, &[]).unwrap().is_trivial());
        assert_eq!(generated_subgroup(&c4, &[2]).unwrap().order(), 2);
        let d8 = dihedral(8).unwrap();
        let k = generated_subgroup(&d8, &[2, 4]).unwrap();
        assert_eq!(k.order(), 4);
        assert!(k.is_abelian());
        assert_eq!(k.members(), &[0, 2, 4, 6]);
    }

    #[test]
    fn subgroup_counts() {
        let c5 = cyclic(5).unwrap();
        assert_eq!(all_subgroups(&c5, 512).unwrap().len(), 2);
        let klein = abelian(&[2, 2]).unwrap();
        assert_eq!(all_subgroups(&klein, 512).unwrap().len(), 5);
        assert_eq!(brute_subgroup_count(&klein), 5);
        let d8 = dihedral(8).unwrap();
        assert_eq!(all_subgroups(&d8, 512).unwrap().len(), 10);
        assert_eq!(brute_subgroup_count(&d8), 10);
        let q8 = quaternion(8).unwrap();
        assert_eq!(all_subgroups(&q8, 512).unwrap().len(), brute_subgroup_count(&q8));
    }

    #[test]
    fn enumeration_is_sorted_and_bounded() {
        let d8 = dihedral(8).unwrap();
        let subs = all_subgroups(&d8, 512).unwrap();
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            all_subgroups(&d8, 4),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn normality() {
        let klein = abelian(&[2, 2]).unwrap();
        for s in all_subgroups(&klein, 512).unwrap() {
            assert!(is_normal(&klein, &s));
        }
        let d8 = dihedral(8).unwrap();
        let refl = generated_subgroup(&d8, &[4]).unwrap();
        assert!(!is_normal(&d8, &refl));
        let q8 = quaternion(8).unwrap();
        let center = generated_subgroup(&q8, &[2]).unwrap();
        assert!(is_normal(&q8, &center));
    }

    #[test]
    fn relative_commutators() {
        let d8 = dihedral(8).unwrap();
        let rot = generated_subgroup(&d8, &[1]).unwrap();
        let triv = Subgroup::trivial(&d8);
        assert!(relative_commutator(&rot, &triv).unwrap().is_trivial());
        let refl = generated_subgroup(&d8, &[4]).unwrap();
        let c = relative_commutator(&rot, &refl).unwrap();
        assert_eq!(c.members(), &[0, 2]);
        // ⟨s⟩ does not normalize ⟨rs⟩... use A = ⟨s⟩, H = ⟨r⟩
        assert!(matches!(
            relative_commutator(&refl, &rot),
            Err(Error::Normalization(_))
        ));

        let q8 = quaternion(8).unwrap();
        let a = generated_subgroup(&q8, &[I]).unwrap();
        let h = generated_subgroup(&q8, &[J]).unwrap();
        let c = relative_commutator(&a, &h).unwrap();
        assert_eq!(c.order(), 2);
        assert_eq!(c, generated_subgroup(&q8, &[2]).unwrap());
    }

    #[test]
    fn agemos() {
        let klein = abelian(&[2, 2]).unwrap();
        assert!(agemo(&Subgroup::whole(&klein), 2).is_trivial());
        let c4 = cyclic(4).unwrap();
        assert_eq!(agemo(&Subgroup::whole(&c4), 2).order(), 2);
        let g = abelian(&[8, 2]).unwrap();
        let a = agemo(&Subgroup::whole(&g), 2);
        assert_eq!(a.order(), 4);
        assert!(a.members().iter().all(|&x| g.element_order(x) <= 4));
        assert!(a.members().iter().any(|&x| g.element_order(x) == 4));
    }

    #[test]
    fn frattini_and_rank() {
        let klein = abelian(&[2, 2]).unwrap();
        assert!(frattini(&klein).unwrap().is_trivial());
        assert_eq!(frattini(&cyclic(4).unwrap()).unwrap().order(), 2);
        let d8 = dihedral(8).unwrap();
        assert_eq!(frattini(&d8).unwrap().members(), &[0, 2]);
        assert_eq!(rank(&Group::trivial()).unwrap(), 0);
        assert_eq!(rank(&cyclic(27).unwrap()).unwrap(), 1);
        assert_eq!(rank(&d8).unwrap(), 2);
        assert_eq!(rank(&quaternion(8).unwrap()).unwrap(), 2);
        assert!(matches!(rank(&cyclic(6).unwrap()), Err(Error::Domain(_))));
        assert!(matches!(frattini(&cyclic(6).unwrap()), Err(Error::Domain(_))));
    }

    #[test]
    fn reduced_quotients() {
        let c4 = cyclic(4).unwrap();
        let rq = reduced_quotient(&Subgroup::whole(&c4), &Subgroup::trivial(&c4)).unwrap();
        assert_eq!(rq.quotient.order(), 2);
        assert_eq!(rq.rank, 1);

        let d8 = dihedral(8).unwrap();
        let klein = generated_subgroup(&d8, &[2, 4]).unwrap();
        // rotation·reflection = r·s = index 5
        let h = generated_subgroup(&d8, &[d8.mul(1, 4)]).unwrap();
        let rq = reduced_quotient(&klein, &h).unwrap();
        assert_eq!(relative_commutator(&klein, &h).unwrap().members(), &[0, 2]);
        assert_eq!(rq.quotient.order(), 2);
        assert_eq!(rq.rank, 1);

        let q8 = quaternion(8).unwrap();
        let a = generated_subgroup(&q8, &[I]).unwrap();
        let h = generated_subgroup(&q8, &[J]).unwrap();
        let rq = reduced_quotient(&a, &h).unwrap();
        assert_eq!(rq.relative.members(), &[0, 2]);
        assert_eq!(rq.rank, 1);

        let refl = generated_subgroup(&d8, &[4]).unwrap();
        assert!(matches!(
            reduced_quotient(&refl, &h),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn minimal_lifts() {
        // trivial Aᵖ[A,H]: A_m = A
        let klein = abelian(&[2, 2]).unwrap();
        let whole = Subgroup::whole(&klein);
        let rq = reduced_quotient(&whole, &Subgroup::trivial(&klein)).unwrap();
        assert_eq!(minimal_lift(&rq).unwrap(), whole);

        // C4 over ⟨g²⟩: only a generator lifts, so A_m = C4
        let c4 = cyclic(4).unwrap();
        let rq = reduced_quotient(&Subgroup::whole(&c4), &Subgroup::trivial(&c4)).unwrap();
        assert_eq!(minimal_lift(&rq).unwrap().order(), 4);

        // Klein inside D8 over ⟨r²⟩: A_m of order 2 avoiding r²
        let d8 = dihedral(8).unwrap();
        let a = generated_subgroup(&d8, &[2, 4]).unwrap();
        let h = generated_subgroup(&d8, &[d8.mul(1, 4)]).unwrap();
        let rq = reduced_quotient(&a, &h).unwrap();
        let am = minimal_lift(&rq).unwrap();
        assert_eq!(am.order(), 2);
        assert!(!am.contains(2));
        assert_eq!(rank_of(&am).unwrap(), rq.rank);
    }

    #[test]
    fn minimal_lift_is_order_minimal() {
        for factors in [&[2, 4][..], &[8, 2], &[4, 4], &[2, 2, 2]] {
            let g = abelian(factors).unwrap();
            let whole = Subgroup::whole(&g);
            let rq = reduced_quotient(&whole, &Subgroup::trivial(&g)).unwrap();
            let am = minimal_lift(&rq).unwrap();
            let best = all_subgroups(&g, 512)
                .unwrap()
                .into_iter()
                .filter(|s| product_set(&rq.relative, s).len() == g.order())
                .map(|s| s.order())
                .min()
                .unwrap();
            assert_eq!(am.order(), best, "{factors:?}");
            assert_eq!(rank_of(&am).unwrap(), rq.rank);
        }
    }

    #[test]
    fn product_sets() {
        let q8 = quaternion(8).unwrap();
        let a = generated_subgroup(&q8, &[I]).unwrap();
        assert_eq!(product_set(&a, &a), a.members());
        let h = generated_subgroup(&q8, &[J]).unwrap();
        assert_eq!(product_set(&a, &h).len(), 8);
        let klein = abelian(&[2, 2]).unwrap();
        let l1 = generated_subgroup(&klein, &[1]).unwrap();
        let l2 = generated_subgroup(&klein, &[2]).unwrap();
        assert_eq!(product_set(&l1, &l2).len(), 4);
    }

    #[test]
    fn as_group_round_trip() {
        let d8 = dihedral(8).unwrap();
        let k = generated_subgroup(&d8, &[2, 4]).unwrap();
        let (local, embed) = k.as_group().unwrap();
        assert_eq!(local.order(), 4);
        assert!(embed.is_injective());
        assert_eq!(embed.image().unwrap(), &k);
        assert_eq!(local.label(1), d8.label(2));
    }
}

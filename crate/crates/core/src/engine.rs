//! Deciding semiabelianity and computing minimal decompositions, decomposition
//! chains and rank-graded chains.
//!
//! Everything runs inside the subgroup lattice of one ambient group. A
//! subgroup `K` is semiabelian when it is trivial, abelian, or `K = AH` for a
//! normal abelian `A ◁ K` and a proper semiabelian `H < K`. Verdicts are
//! memoized per lattice position.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElementId, Group};
use crate::subgroup::{
    all_subgroups, frattini_of, is_normal_in, minimal_lift, rank_of, reduced_quotient,
    Subgroup, DEFAULT_ENUMERATION_LIMIT,
};

/// Which notion of "minimal" picks `A` and `H` in a decomposition.
///
/// Candidates are always visited in `(order, member set)` order, so the first
/// admissible candidate is minimal under both notions and the two settings
/// agree on every input. `Inclusion` computes the full admissible family and
/// keeps its inclusion-minimal members; `Order` stops at the first hit.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Minimality {
    #[default]
    Inclusion,
    Order,
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Minimality::Inclusion => "inclusion",
            Minimality::Order => "order",
        })
    }
}

impl FromStr for Minimality {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "inclusion" => Ok(Minimality::Inclusion),
            "order" => Ok(Minimality::Order),
            _ => Err(format!("unknown ordering `{s}` (expected inclusion or order)")),
        }
    }
}

/// `K = AH` with `A ◁ K` abelian and `H < K` semiabelian.
#[derive(Debug, Clone)]
pub struct Decomposition {
    /// The decomposed subgroup `K` (the whole ambient group at top level).
    pub parent: Subgroup,
    pub a: Subgroup,
    pub h: Subgroup,
    pub a_minimal: bool,
    pub h_minimal: bool,
    pub ordering: Minimality,
}

impl Decomposition {
    /// Checks the structural invariants. `H` being semiabelian is the caller's
    /// business, since it needs an engine.
    pub fn validate(&self) -> Result<()> {
        let (k, a, h) = (&self.parent, &self.a, &self.h);
        if !a.is_subgroup_of(k) || !h.is_subgroup_of(k) {
            return Err(Error::Invariant("factor outside the decomposed group".into()));
        }
        if !a.is_abelian() || !is_normal_in(a, k) {
            return Err(Error::Invariant("A is not normal abelian".into()));
        }
        if h.order() == k.order() {
            return Err(Error::Invariant("H is not proper".into()));
        }
        if a.order() * h.order() != k.order() * a.intersection_order(h) {
            return Err(Error::Invariant("AH differs from the group".into()));
        }
        Ok(())
    }
}

/// `{1} = H₁ < H₂ < … < H_n = G` with `H_{i+1} = A_i H_i`.
#[derive(Debug, Clone)]
pub struct DecompositionChain {
    /// Decomposition of `H_{i+1}` into `A_i H_i`, ascending.
    pub steps: Vec<Decomposition>,
}

impl DecompositionChain {
    /// `H₁, …, H_n`.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let mut out: Vec<_> = self.steps.iter().map(|d| d.h.clone()).collect();
        if let Some(last) = self.steps.last() {
            out.push(last.parent.clone());
        }
        out
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let Some(first) = self.steps.first() else {
            return Ok(());
        };
        if !first.h.is_trivial() {
            return Err(Error::Invariant("chain does not start at the trivial group".into()));
        }
        for (i, d) in self.steps.iter().enumerate() {
            d.validate()?;
            if d.parent.order() % d.h.order() != 0 {
                return Err(Error::Invariant("|H_i| does not divide |H_{i+1}|".into()));
            }
            if let Some(next) = self.steps.get(i + 1) {
                if next.h != d.parent {
                    return Err(Error::Invariant("chain steps do not link up".into()));
                }
            }
        }
        Ok(())
    }
}

/// Subgroup lattice of one group with memoized semiabelian verdicts.
pub struct Engine {
    group: Group,
    lattice: Vec<Subgroup>,
    index: HashMap<Vec<ElementId>, usize>,
    memo: Vec<OnceLock<bool>>,
}

impl Engine {
    pub fn new(group: &Group) -> Result<Engine> {
        Engine::with_limit(group, DEFAULT_ENUMERATION_LIMIT)
    }

    pub fn with_limit(group: &Group, limit: usize) -> Result<Engine> {
        let lattice = all_subgroups(group, limit)?;
        let index = lattice
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().to_vec(), i))
            .collect();
        let memo = (0..lattice.len()).map(|_| OnceLock::new()).collect();
        Ok(Engine {
            group: group.clone(),
            lattice,
            index,
            memo,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// All subgroups, sorted by `(order, member set)`.
    pub fn lattice(&self) -> &[Subgroup] {
        &self.lattice
    }

    fn position(&self, k: &Subgroup) -> Result<usize> {
        if !k.parent().ptr_eq(&self.group) {
            return Err(Error::Domain("subgroup of a different group".into()));
        }
        self.index
            .get(k.members())
            .copied()
            .ok_or_else(|| Error::Invariant("subgroup missing from the lattice".into()))
    }

    /// Lattice positions of the proper subgroups of `lattice[k]`, ascending.
    fn proper_below(&self, k: usize) -> Vec<usize> {
        let mask = self.lattice[k].mask();
        (0..k)
            .filter(|&i| self.lattice[i].mask().is_subset(mask))
            .collect()
    }

    fn normal_abelian_below(&self, k: usize, below: &[usize]) -> Vec<usize> {
        let whole = &self.lattice[k];
        below
            .iter()
            .copied()
            .chain(whole.is_abelian().then_some(k))
            .filter(|&i| {
                let a = &self.lattice[i];
                a.is_abelian() && is_normal_in(a, whole)
            })
            .collect()
    }

    fn covers(&self, k: usize, a: usize, h: usize) -> bool {
        let (k, a, h) = (&self.lattice[k], &self.lattice[a], &self.lattice[h]);
        a.order() * h.order() == k.order() * a.intersection_order(h)
    }

    fn semi(&self, k: usize) -> bool {
        if let Some(&v) = self.memo[k].get() {
            return v;
        }
        let v = self.decide(k);
        *self.memo[k].get_or_init(|| v)
    }

    fn decide(&self, k: usize) -> bool {
        let sub = &self.lattice[k];
        if sub.is_trivial() || sub.is_abelian() {
            return true;
        }
        let below = self.proper_below(k);
        for a in self.normal_abelian_below(k, &below) {
            for &h in &below {
                if self.covers(k, a, h) && self.semi(h) {
                    return true;
                }
            }
        }
        false
    }

    pub fn is_semiabelian(&self) -> bool {
        self.semi(self.lattice.len() - 1)
    }

    pub fn is_semiabelian_subgroup(&self, k: &Subgroup) -> Result<bool> {
        Ok(self.semi(self.position(k)?))
    }

    pub fn minimal_decomposition(&self, ordering: Minimality) -> Result<Decomposition> {
        self.minimal_decomposition_of(&Subgroup::whole(&self.group), ordering)
    }

    /// Minimal decomposition of a subgroup `K`: `A` minimal among normal
    /// abelian subgroups of `K` admitting a proper semiabelian `H` with
    /// `AH = K`, then `H` minimal for that `A`.
    pub fn minimal_decomposition_of(
        &self,
        k: &Subgroup,
        ordering: Minimality,
    ) -> Result<Decomposition> {
        let k = self.position(k)?;
        if self.lattice[k].is_trivial() {
            return Err(Error::NoDecomposition);
        }
        if !self.semi(k) {
            return Err(Error::NotSemiabelian);
        }
        let below = self.proper_below(k);
        let complements =
            |a: usize| below.iter().copied().filter(move |&h| self.covers(k, a, h) && self.semi(h));
        let candidates = self.normal_abelian_below(k, &below);
        let (a, h) = match ordering {
            Minimality::Order => {
                let a = candidates
                    .into_iter()
                    .find(|&a| complements(a).next().is_some())
                    .ok_or_else(|| Error::Invariant("no decomposition found".into()))?;
                (a, complements(a).next().unwrap())
            }
            Minimality::Inclusion => {
                let admissible: Vec<usize> = candidates
                    .into_iter()
                    .filter(|&a| complements(a).next().is_some())
                    .collect();
                let a = self
                    .inclusion_minimal(&admissible)
                    .ok_or_else(|| Error::Invariant("no decomposition found".into()))?;
                let hs: Vec<usize> = complements(a).collect();
                (a, self.inclusion_minimal(&hs).unwrap())
            }
        };
        Ok(Decomposition {
            parent: self.lattice[k].clone(),
            a: self.lattice[a].clone(),
            h: self.lattice[h].clone(),
            a_minimal: true,
            h_minimal: true,
            ordering,
        })
    }

    /// First, in lattice order, of the members having no other member inside.
    fn inclusion_minimal(&self, family: &[usize]) -> Option<usize> {
        family.iter().copied().find(|&x| {
            let mx = self.lattice[x].mask();
            !family
                .iter()
                .any(|&y| y != x && self.lattice[y].mask().is_subset(mx))
        })
    }

    pub fn decomposition_chain(&self, ordering: Minimality) -> Result<DecompositionChain> {
        self.decomposition_chain_of(&Subgroup::whole(&self.group), ordering)
    }

    /// Iterates minimal decompositions from `K` down to the trivial group.
    pub fn decomposition_chain_of(
        &self,
        k: &Subgroup,
        ordering: Minimality,
    ) -> Result<DecompositionChain> {
        if !self.is_semiabelian_subgroup(k)? {
            return Err(Error::NotSemiabelian);
        }
        let mut steps = Vec::new();
        let mut cur = k.clone();
        while !cur.is_trivial() {
            let d = self.minimal_decomposition_of(&cur, ordering)?;
            // |H| strictly decreases, so this terminates
            if d.h.order() >= cur.order() || !cur.order().is_multiple_of(d.h.order()) {
                return Err(Error::Invariant("decomposition did not shrink".into()));
            }
            cur = d.h.clone();
            steps.push(d);
        }
        steps.reverse();
        let chain = DecompositionChain { steps };
        chain.validate()?;
        Ok(chain)
    }

    pub fn rank_graded_chain(&self, ordering: Minimality) -> Result<Vec<Subgroup>> {
        self.rank_graded_chain_of(&Subgroup::whole(&self.group), ordering)
    }

    /// `H₁ ≤ … ≤ H_r = K` with every `H_i` semiabelian of rank `i`.
    ///
    /// With `K = AH` minimal and `d(Ā) = 1`, recurse on `H`. Otherwise lift a
    /// basis `x₁, …, x_a` of `Ā`, let `A₂` be the preimage of `⟨x₂, …, x_a⟩`
    /// and recurse on `A₂H`, which has rank `d(K) - 1`.
    pub fn rank_graded_chain_of(&self, k: &Subgroup, ordering: Minimality) -> Result<Vec<Subgroup>> {
        if !self.is_semiabelian_subgroup(k)? {
            return Err(Error::NotSemiabelian);
        }
        let r = rank_of(k)?;
        if r == 0 {
            return Ok(Vec::new());
        }
        if r == 1 {
            return Ok(vec![k.clone()]);
        }
        let d = self.minimal_decomposition_of(k, ordering)?;
        let rq = reduced_quotient(&d.a, &d.h)?;
        let next = match rq.rank {
            0 => return Err(Error::Invariant("Ā is trivial for a minimal decomposition".into())),
            1 => d.h.clone(),
            _ => {
                let basis = minimal_lift(&rq)?.generators().to_vec();
                let mut a2 = rq.relative.clone();
                for &x in &basis[1..] {
                    a2 = a2.extend(x);
                }
                a2.join(&d.h)
            }
        };
        if rank_of(&next)? != r - 1 || !self.is_semiabelian_subgroup(&next)? {
            return Err(Error::Invariant(format!(
                "reduction step left rank {} instead of {}",
                rank_of(&next)?,
                r - 1
            )));
        }
        let mut chain = self.rank_graded_chain_of(&next, ordering)?;
        chain.push(k.clone());
        Ok(chain)
    }
}

pub fn is_semiabelian(g: &Group) -> Result<bool> {
    Ok(Engine::new(g)?.is_semiabelian())
}

pub fn minimal_decomposition(g: &Group, ordering: Minimality) -> Result<Decomposition> {
    Engine::new(g)?.minimal_decomposition(ordering)
}

pub fn decomposition_chain(g: &Group, ordering: Minimality) -> Result<DecompositionChain> {
    Engine::new(g)?.decomposition_chain(ordering)
}

pub fn rank_graded_chain(g: &Group, ordering: Minimality) -> Result<Vec<Subgroup>> {
    Engine::new(g)?.rank_graded_chain(ordering)
}

/// `A∩H ⊆ Aᵖ[A,H] ∩ Φ(H)`.
pub fn verify_cap_condition(d: &Decomposition) -> Result<bool> {
    let rq = reduced_quotient(&d.a, &d.h)?;
    let phi = frattini_of(&d.h)?;
    Ok(d
        .a
        .members()
        .iter()
        .filter(|&&x| d.h.contains(x))
        .all(|&x| rq.relative.contains(x) && phi.contains(x)))
}

/// `d(G) = d(Ā) + d(H)` for the decomposition.
pub fn rank_additivity(d: &Decomposition) -> Result<(usize, usize, usize)> {
    let rq = reduced_quotient(&d.a, &d.h)?;
    Ok((rank_of(&d.parent)?, rq.rank, rank_of(&d.h)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dihedral, heisenberg, quaternion};
    use crate::group::{abelian, cyclic, wreath_product};
    use crate::oracle::semiabelian_naive;
    use crate::subgroup::{generated_subgroup, rank};

    const ORDERINGS: [Minimality; 2] = [Minimality::Inclusion, Minimality::Order];

    #[test]
    fn trivial_and_abelian() {
        let t = Group::trivial();
        assert!(is_semiabelian(&t).unwrap());
        assert_eq!(
            minimal_decomposition(&t, Minimality::Inclusion).unwrap_err(),
            Error::NoDecomposition
        );
        assert!(decomposition_chain(&t, Minimality::Inclusion).unwrap().is_empty());
        for g in [cyclic(8).unwrap(), abelian(&[4, 2]).unwrap(), abelian(&[3, 3]).unwrap()] {
            assert!(is_semiabelian(&g).unwrap());
        }
    }

    #[test]
    fn q8_witness() {
        let q8 = quaternion(8).unwrap();
        let e = Engine::new(&q8).unwrap();
        assert!(e.is_semiabelian());
        let a = generated_subgroup(&q8, &[1]).unwrap();
        let h = generated_subgroup(&q8, &[4]).unwrap();
        assert!(is_normal_in(&a, &Subgroup::whole(&q8)));
        assert_eq!(crate::subgroup::product_set(&a, &h).len(), 8);
        for ord in ORDERINGS {
            let d = e.minimal_decomposition(ord).unwrap();
            assert_eq!((d.a.order(), d.h.order()), (4, 4));
            assert_eq!(d.a.intersection(&d.h).members(), &[0, 2]);
            assert!(verify_cap_condition(&d).unwrap());
        }
    }

    #[test]
    fn elementary_abelian_rank_two() {
        for p in [2, 3] {
            let g = abelian(&[p, p]).unwrap();
            let d = minimal_decomposition(&g, Minimality::Inclusion).unwrap();
            assert_eq!((d.a.order(), d.h.order()), (p, p));
            assert!(d.a.intersection(&d.h).is_trivial());
            assert!(verify_cap_condition(&d).unwrap());
        }
    }

    #[test]
    fn d8_decomposition() {
        let d8 = dihedral(8).unwrap();
        let d = minimal_decomposition(&d8, Minimality::Inclusion).unwrap();
        assert_eq!((d.a.order(), d.h.order()), (4, 2));
        assert!(d.a.intersection(&d.h).is_trivial());
        assert!(verify_cap_condition(&d).unwrap());
        // exhaustively: no normal abelian subgroup of order 2 has a proper complement
        let e = Engine::new(&d8).unwrap();
        let whole = Subgroup::whole(&d8);
        for a in e.lattice().iter().filter(|a| a.order() == 2) {
            if !is_normal_in(a, &whole) {
                continue;
            }
            assert!(e
                .lattice()
                .iter()
                .filter(|h| h.order() < 8)
                .all(|h| a.order() * h.order() != 8 * a.intersection_order(h)));
        }
    }

    #[test]
    fn chains() {
        let q8 = quaternion(8).unwrap();
        let c = decomposition_chain(&q8, Minimality::Inclusion).unwrap();
        let orders: Vec<_> = c.subgroups().iter().map(|s| s.order()).collect();
        assert_eq!(orders, [1, 4, 8]);
        let d8 = dihedral(8).unwrap();
        let c = decomposition_chain(&d8, Minimality::Inclusion).unwrap();
        let orders: Vec<_> = c.subgroups().iter().map(|s| s.order()).collect();
        assert_eq!(orders, [1, 2, 8]);
        let c8 = cyclic(8).unwrap();
        let c = decomposition_chain(&c8, Minimality::Inclusion).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.steps[0].h.is_trivial() && c.steps[0].a.is_whole());
        // a non-cyclic abelian group needs one step per rank
        let klein = abelian(&[2, 2]).unwrap();
        let c = decomposition_chain(&klein, Minimality::Inclusion).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn rank_graded() {
        let c9 = cyclic(9).unwrap();
        let ch = rank_graded_chain(&c9, Minimality::Inclusion).unwrap();
        assert_eq!(ch.len(), 1);
        assert!(ch[0].is_whole());
        for g in [
            abelian(&[2, 2]).unwrap(),
            dihedral(8).unwrap(),
            abelian(&[2, 2, 2]).unwrap(),
            abelian(&[4, 2, 2]).unwrap(),
            heisenberg(3).unwrap(),
        ] {
            let e = Engine::new(&g).unwrap();
            let ch = e.rank_graded_chain(Minimality::Inclusion).unwrap();
            assert_eq!(ch.len(), rank(&g).unwrap());
            for (i, s) in ch.iter().enumerate() {
                assert_eq!(rank_of(s).unwrap(), i + 1);
                assert!(e.is_semiabelian_subgroup(s).unwrap());
                let (local, _) = s.as_group().unwrap();
                if local.order() <= 64 {
                    assert_eq!(crate::oracle::brute_rank(&local).unwrap(), i + 1);
                }
            }
            assert!(ch.windows(2).all(|w| w[0].is_subgroup_of(&w[1])));
        }
    }

    #[test]
    fn orderings_agree() {
        for g in [
            dihedral(16).unwrap(),
            quaternion(16).unwrap(),
            abelian(&[4, 2, 2]).unwrap(),
            heisenberg(3).unwrap(),
            wreath_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap(),
        ] {
            let e = Engine::new(&g).unwrap();
            let x = e.minimal_decomposition(Minimality::Inclusion).unwrap();
            let y = e.minimal_decomposition(Minimality::Order).unwrap();
            assert_eq!((x.a, x.h), (y.a, y.h));
        }
    }

    #[test]
    fn non_p_groups() {
        // S3 = C3 ⋊ C2
        assert!(is_semiabelian(&dihedral(6).unwrap()).unwrap());
        assert!(is_semiabelian(&cyclic(6).unwrap()).unwrap());
    }

    #[test]
    fn decomposition_properties_on_small_groups() {
        for g in [
            dihedral(8).unwrap(),
            quaternion(8).unwrap(),
            dihedral(16).unwrap(),
            quaternion(16).unwrap(),
            heisenberg(3).unwrap(),
            abelian(&[4, 4]).unwrap(),
        ] {
            let e = Engine::new(&g).unwrap();
            assert_eq!(e.is_semiabelian(), semiabelian_naive(&g).unwrap());
            let chain = e.decomposition_chain(Minimality::Inclusion).unwrap();
            for d in &chain.steps {
                assert!(verify_cap_condition(d).unwrap());
                let (dg, da, dh) = rank_additivity(d).unwrap();
                assert_eq!(dg, da + dh);
            }
        }
    }

    #[test]
    fn ordering_parse() {
        assert_eq!("order".parse::<Minimality>().unwrap(), Minimality::Order);
        assert_eq!(Minimality::default().to_string(), "inclusion");
        assert!("size".parse::<Minimality>().is_err());
    }
}

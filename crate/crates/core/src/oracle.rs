//! Brute-force reference implementations.
//!
//! Nothing here calls into the subgroup or engine modules; the only shared
//! surface is element multiplication and inversion on [`Group`].

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{ElementId, Group, IDENTITY};

pub const NAIVE_SEMIABELIAN_LIMIT: usize = 128;
pub const BRUTE_RANK_LIMIT: usize = 64;
pub const MAXIMAL_SUBGROUP_LIMIT: usize = 512;

type Members = BTreeSet<ElementId>;

/// Isomorphism invariants; equal fingerprints never prove isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: usize,
    pub element_order_histogram: BTreeMap<usize, usize>,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
}

/// Multiply every pair of members until nothing new appears.
fn close(g: &Group, seeds: impl IntoIterator<Item = ElementId>) -> Members {
    let mut list: Vec<ElementId> = vec![IDENTITY];
    let mut set: Members = [IDENTITY].into();
    for s in seeds {
        if set.insert(s) {
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        for j in 0..=i {
            for y in [g.mul(list[i], list[j]), g.mul(list[j], list[i])] {
                if set.insert(y) {
                    list.push(y);
                }
            }
        }
        i += 1;
    }
    set
}

/// Depth-first generation of every subgroup as `⟨S, x⟩` from already found
/// `S`, deduplicated by member set. Elements of one coset `S·x` give the same
/// extension, so one per coset is tried.
fn subgroups(g: &Group) -> Vec<Members> {
    fn dfs(g: &Group, cur: &Members, seen: &mut HashSet<Members>) {
        let mut tried = cur.clone();
        for x in g.elements() {
            if tried.contains(&x) {
                continue;
            }
            tried.extend(cur.iter().map(|&c| g.mul(c, x)));
            let next = close(g, cur.iter().copied().chain([x]));
            if seen.insert(next.clone()) {
                dfs(g, &next, seen);
            }
        }
    }
    let trivial: Members = [IDENTITY].into();
    let mut seen = HashSet::from([trivial.clone()]);
    dfs(g, &trivial, &mut seen);
    let mut all: Vec<_> = seen.into_iter().collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

fn commute(g: &Group, a: ElementId, b: ElementId) -> bool {
    g.mul(a, b) == g.mul(b, a)
}

fn abelian_set(g: &Group, s: &Members) -> bool {
    s.iter().all(|&a| s.iter().all(|&b| commute(g, a, b)))
}

fn normal_in(g: &Group, n: &Members, k: &Members) -> bool {
    k.iter()
        .all(|&x| n.iter().all(|&y| n.contains(&g.mul(g.mul(x, y), g.inv(x)))))
}

/// Decides semiabelianity straight from "trivial, or `AH` with `A` normal
/// abelian and `H` a proper semiabelian subgroup", trying every pair and
/// caching nothing.
pub fn semiabelian_naive(g: &Group) -> Result<bool> {
    if g.order() > NAIVE_SEMIABELIAN_LIMIT {
        return Err(Error::capacity(
            "naive semiabelian search",
            g.order(),
            NAIVE_SEMIABELIAN_LIMIT as u64,
        ));
    }
    let all = subgroups(g);
    let whole: Members = g.elements().collect();
    Ok(naive_within(g, &all, &whole))
}

fn naive_within(g: &Group, all: &[Members], k: &Members) -> bool {
    if k.len() == 1 {
        return true;
    }
    let inside: Vec<&Members> = all.iter().filter(|s| s.is_subset(k)).collect();
    for a in &inside {
        if !abelian_set(g, a) || !normal_in(g, a, k) {
            continue;
        }
        for h in &inside {
            if h.len() == k.len() || a.len() * h.len() < k.len() {
                continue;
            }
            let product: Members = a
                .iter()
                .flat_map(|&x| h.iter().map(move |&y| g.mul(x, y)))
                .collect();
            if product == *k && naive_within(g, all, h) {
                return true;
            }
        }
    }
    false
}

/// Smallest `k` such that some `k` elements generate the group.
///
/// Searched level by level: the `k`-generated subgroups are exactly the
/// `⟨S, x⟩` over `(k-1)`-generated `S`, so the first level containing the
/// whole group gives the answer.
pub fn brute_rank(g: &Group) -> Result<usize> {
    if g.order() > BRUTE_RANK_LIMIT {
        return Err(Error::capacity(
            "brute-force rank",
            g.order(),
            BRUTE_RANK_LIMIT as u64,
        ));
    }
    let mut level: HashSet<Members> = HashSet::from([[IDENTITY].into()]);
    let mut seen = level.clone();
    for k in 0.. {
        if level.iter().any(|s| s.len() == g.order()) {
            return Ok(k);
        }
        let mut next = HashSet::new();
        for s in &level {
            for x in g.elements() {
                if s.contains(&x) {
                    continue;
                }
                let t = close(g, s.iter().copied().chain([x]));
                if seen.insert(t.clone()) {
                    next.insert(t);
                }
            }
        }
        level = next;
    }
    unreachable!()
}

/// Intersection of all maximal subgroups (the whole group when trivial).
pub fn frattini_by_maximal(g: &Group) -> Result<Vec<ElementId>> {
    if g.order() > MAXIMAL_SUBGROUP_LIMIT {
        return Err(Error::capacity(
            "maximal-subgroup enumeration",
            g.order(),
            MAXIMAL_SUBGROUP_LIMIT as u64,
        ));
    }
    let all = subgroups(g);
    let proper: Vec<_> = all.iter().filter(|s| s.len() < g.order()).collect();
    let maximal = proper
        .iter()
        .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t)));
    let mut phi: Members = g.elements().collect();
    for m in maximal {
        phi = phi.intersection(m).copied().collect();
    }
    Ok(phi.into_iter().collect())
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let mut hist = BTreeMap::new();
    for x in g.elements() {
        let mut k = 1;
        let mut y = x;
        while y != IDENTITY {
            y = g.mul(y, x);
            k += 1;
        }
        *hist.entry(k).or_insert(0) += 1;
    }
    let center_order = g
        .elements()
        .filter(|&z| g.elements().all(|x| commute(g, z, x)))
        .count();
    let commutators = g.elements().flat_map(|x| {
        g.elements()
            .map(move |y| g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))))
    });
    let derived = close(g, commutators.collect::<Members>());
    Fingerprint {
        order: g.order(),
        element_order_histogram: hist,
        abelian: center_order == g.order(),
        center_order,
        derived_order: derived.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dihedral, quaternion};
    use crate::group::{abelian, cyclic, wreath_product};

    #[test]
    fn naive_basics() {
        assert!(semiabelian_naive(&Group::trivial()).unwrap());
        for g in [
            cyclic(2).unwrap(),
            cyclic(3).unwrap(),
            cyclic(4).unwrap(),
            abelian(&[2, 2]).unwrap(),
            cyclic(9).unwrap(),
            abelian(&[3, 3]).unwrap(),
        ] {
            assert!(semiabelian_naive(&g).unwrap());
        }
        assert!(semiabelian_naive(&quaternion(8).unwrap()).unwrap());
        assert!(matches!(
            semiabelian_naive(&cyclic(256).unwrap()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn brute_ranks() {
        assert_eq!(brute_rank(&Group::trivial()).unwrap(), 0);
        assert_eq!(brute_rank(&cyclic(9).unwrap()).unwrap(), 1);
        assert_eq!(brute_rank(&dihedral(8).unwrap()).unwrap(), 2);
        assert_eq!(brute_rank(&abelian(&[2, 2, 2]).unwrap()).unwrap(), 3);
    }

    #[test]
    fn frattini_by_maximal_subgroups() {
        assert_eq!(frattini_by_maximal(&abelian(&[2, 2]).unwrap()).unwrap(), vec![0]);
        assert_eq!(frattini_by_maximal(&cyclic(4).unwrap()).unwrap(), vec![0, 2]);
        assert_eq!(frattini_by_maximal(&dihedral(8).unwrap()).unwrap(), vec![0, 2]);
    }

    #[test]
    fn fingerprints() {
        let c2 = cyclic(2).unwrap();
        let w = wreath_product(&c2, &c2).unwrap();
        let d8 = dihedral(8).unwrap();
        let q8 = quaternion(8).unwrap();
        assert_eq!(fingerprint(&w), fingerprint(&d8));
        let (fd, fq) = (fingerprint(&d8), fingerprint(&q8));
        assert_eq!(fd.element_order_histogram[&4], 2);
        assert_eq!(fq.element_order_histogram[&4], 6);
        assert_eq!(fd.center_order, 2);
        assert_eq!(fd.derived_order, 2);
        let k = fingerprint(&abelian(&[2, 4]).unwrap());
        assert!(k.abelian);
        assert_eq!(k.element_order_histogram.values().sum::<usize>(), 8);
    }
}

//! Worked examples on small groups, with expected values recomputed here by
//! direct enumeration wherever that is cheap.

use std::collections::BTreeSet;

use semiabelian::catalog::{dihedral, quaternion};
use semiabelian::engine::{
    decomposition_chain, minimal_decomposition, rank_graded_chain, verify_cap_condition, Engine,
    Minimality,
};
use semiabelian::epi::{
    base_epi, is_rank_preserving, lift_second_argument, semidirect_epi, semidirect_tower,
    wreath_tower, Conjugation, TowerConfig,
};
use semiabelian::group::{
    abelian, cyclic, direct_product, quotient, semidirect_product, wreath_product, Action,
    ElementId, Group, Homomorphism, VerifyConfig,
};
use semiabelian::oracle::{brute_rank, fingerprint};
use semiabelian::subgroup::{
    agemo, all_subgroups, frattini, generated_subgroup, is_normal, minimal_lift, product_set,
    rank, reduced_quotient, relative_commutator, Subgroup,
};

const MIN: Minimality = Minimality::Inclusion;

fn cfg() -> VerifyConfig {
    VerifyConfig::default()
}

fn histogram(g: &Group) -> Vec<(usize, usize)> {
    fingerprint(g).element_order_histogram.into_iter().collect()
}

/// Subgroups found by closing every subset of size at most two, which covers
/// every subgroup of the small groups used here.
fn subgroups_by_pairs(g: &Group) -> BTreeSet<Vec<ElementId>> {
    let mut out = BTreeSet::new();
    for x in g.elements() {
        for y in g.elements() {
            out.insert(generated_subgroup(g, &[x, y]).unwrap().members().to_vec());
        }
    }
    out
}

#[test]
fn constructors() {
    assert_eq!(histogram(&cyclic(6).unwrap()), [(1, 1), (2, 1), (3, 2), (6, 2)]);
    let c4 = cyclic(4).unwrap();
    let c2 = cyclic(2).unwrap();
    assert_eq!(brute_rank(&abelian(&[4, 2]).unwrap()).unwrap(), 2);
    assert_eq!(brute_rank(&direct_product(&c2, &c4).unwrap()).unwrap(), 2);
    let d8 = semidirect_product(&c4, &c2, &Action::inversion(&c2, &c4).unwrap()).unwrap();
    assert_eq!(histogram(&d8), [(1, 1), (2, 5), (4, 2)]);
    let c3 = cyclic(3).unwrap();
    let s3 = semidirect_product(&c3, &c2, &Action::inversion(&c2, &c3).unwrap()).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    let triv = semidirect_product(&c4, &c2, &Action::trivial(&c2, &c4)).unwrap();
    assert_eq!(histogram(&triv), histogram(&direct_product(&c4, &c2).unwrap()));
    let w = wreath_product(&c2, &c2).unwrap();
    assert_eq!(histogram(&w), histogram(&dihedral(8).unwrap()));
    let w23 = wreath_product(&c2, &c3).unwrap();
    assert_eq!(w23.order(), 24);
    assert_eq!(brute_rank(&w23).unwrap(), 2);
    let (q, pi) = quotient(&c4, &generated_subgroup(&c4, &[2]).unwrap()).unwrap();
    assert_eq!(q.order(), 2);
    assert_eq!(pi.kernel_order(), Some(2));
}

#[test]
fn homomorphisms() {
    let d8 = dihedral(8).unwrap();
    let c2 = cyclic(2).unwrap();
    let (r, s) = (d8.find_label("r").unwrap(), d8.find_label("s").unwrap());
    let kill_rotation =
        Homomorphism::from_generator_images(&d8, &c2, &[(r, 0), (s, 1)], &cfg()).unwrap();
    let kernel: Vec<_> = d8.elements().filter(|&x| kill_rotation.apply(x) == 0).collect();
    assert_eq!(kernel.len(), 4);
    assert_eq!(kill_rotation.kernel_order(), Some(4));
    let id = Homomorphism::identity(&d8).unwrap();
    assert_eq!(id.kernel_order(), Some(1));
}

#[test]
fn subgroup_lattices() {
    for (g, count) in [
        (cyclic(2).unwrap(), 2),
        (abelian(&[2, 2]).unwrap(), 5),
        (dihedral(8).unwrap(), 10),
    ] {
        let subs = all_subgroups(&g, 512).unwrap();
        assert_eq!(subs.len(), count);
        let found: BTreeSet<_> = subs.iter().map(|s| s.members().to_vec()).collect();
        assert_eq!(found, subgroups_by_pairs(&g));
    }
}

#[test]
fn subgroup_operations_on_d8_and_q8() {
    let d8 = dihedral(8).unwrap();
    let (r, s) = (d8.find_label("r").unwrap(), d8.find_label("s").unwrap());
    let r2 = d8.mul(r, r);
    assert_eq!(generated_subgroup(&d8, &[r2, s]).unwrap().order(), 4);
    assert!(!is_normal(&d8, &generated_subgroup(&d8, &[s]).unwrap()));
    let rot = generated_subgroup(&d8, &[r]).unwrap();
    let refl = generated_subgroup(&d8, &[s]).unwrap();
    let comm = relative_commutator(&rot, &refl).unwrap();
    assert_eq!(comm.members(), &[0, r2]);
    assert_eq!(frattini(&d8).unwrap().members(), &[0, r2]);
    assert_eq!(rank(&d8).unwrap(), 2);

    let q8 = quaternion(8).unwrap();
    let (i, j) = (q8.find_label("x").unwrap(), q8.find_label("y").unwrap());
    let center: Vec<_> = q8
        .elements()
        .filter(|&z| q8.elements().all(|y| q8.mul(z, y) == q8.mul(y, z)))
        .collect();
    let center_sub = generated_subgroup(&q8, &center).unwrap();
    assert!(is_normal(&q8, &center_sub));
    let a = generated_subgroup(&q8, &[i]).unwrap();
    let h = generated_subgroup(&q8, &[j]).unwrap();
    assert_eq!(relative_commutator(&a, &h).unwrap().members(), center.as_slice());
    assert_eq!(product_set(&a, &h).len(), 8);
    assert_eq!(rank(&q8).unwrap(), 2);

    let c8c2 = abelian(&[8, 2]).unwrap();
    assert_eq!(agemo(&Subgroup::whole(&c8c2), 2).order(), 4);
}

#[test]
fn reduced_quotients_and_lifts() {
    // H trivial, A = C4
    let c4 = cyclic(4).unwrap();
    let rq = reduced_quotient(&Subgroup::whole(&c4), &Subgroup::trivial(&c4)).unwrap();
    assert_eq!((rq.quotient.order(), rq.rank), (2, 1));
    assert_eq!(minimal_lift(&rq).unwrap().order(), 4);

    // A = Klein inside D8, H generated by a reflection r·s
    let d8 = dihedral(8).unwrap();
    let (r, s) = (d8.find_label("r").unwrap(), d8.find_label("s").unwrap());
    let klein = generated_subgroup(&d8, &[d8.mul(r, r), s]).unwrap();
    let h = generated_subgroup(&d8, &[d8.mul(r, s)]).unwrap();
    let rq = reduced_quotient(&klein, &h).unwrap();
    assert_eq!(rq.rank, 1);
    assert_eq!(rq.relative.members(), &[0, d8.mul(r, r)]);
    let lift = minimal_lift(&rq).unwrap();
    assert_eq!(lift.order(), 2);
    assert!(!rq.relative.contains(lift.generators()[0]));

    // A = ⟨i⟩, H = ⟨j⟩ in Q8
    let q8 = quaternion(8).unwrap();
    let a = generated_subgroup(&q8, &[1]).unwrap();
    let h = generated_subgroup(&q8, &[4]).unwrap();
    let rq = reduced_quotient(&a, &h).unwrap();
    assert_eq!((rq.quotient.order(), rq.rank), (2, 1));
    assert_eq!(minimal_lift(&rq).unwrap().order(), 4);
}

#[test]
fn decompositions() {
    let klein = abelian(&[2, 2]).unwrap();
    let d = minimal_decomposition(&klein, MIN).unwrap();
    assert_eq!((d.a.order(), d.h.order(), d.a.intersection_order(&d.h)), (2, 2, 1));

    let d8 = dihedral(8).unwrap();
    let d = minimal_decomposition(&d8, MIN).unwrap();
    assert_eq!((d.a.order(), d.h.order()), (4, 2));
    assert!(verify_cap_condition(&d).unwrap());
    // no normal subgroup of order 2 admits a proper complement
    let center = generated_subgroup(&d8, &[2]).unwrap();
    for h in all_subgroups(&d8, 512).unwrap().iter().filter(|h| !h.is_whole()) {
        assert!(product_set(&center, h).len() < 8);
    }

    let q8 = quaternion(8).unwrap();
    let d = minimal_decomposition(&q8, MIN).unwrap();
    assert_eq!((d.a.order(), d.h.order(), d.a.intersection_order(&d.h)), (4, 4, 2));
    assert!(verify_cap_condition(&d).unwrap());

    let orders = |g: &Group| -> Vec<usize> {
        decomposition_chain(g, MIN)
            .unwrap()
            .subgroups()
            .iter()
            .map(Subgroup::order)
            .collect()
    };
    assert_eq!(orders(&q8), [1, 4, 8]);
    assert_eq!(orders(&d8), [1, 2, 8]);

    let graded = rank_graded_chain(&d8, MIN).unwrap();
    assert_eq!(graded.len(), 2);
    assert_eq!(rank(&graded[1].as_group().unwrap().0).unwrap(), 2);
    assert!(graded[0].order() >= 2);
    assert!(Engine::new(&d8).unwrap().is_semiabelian_subgroup(&graded[0]).unwrap());
}

#[test]
fn epimorphisms() {
    let q8 = quaternion(8).unwrap();
    let d = minimal_decomposition(&q8, MIN).unwrap();
    let s = semidirect_epi(&d, &cfg()).unwrap();
    assert_eq!(s.product.order(), 16);
    assert_eq!(s.epi.kernel_order(), Some(2));
    assert!(is_rank_preserving(&s.epi).unwrap());

    let d8 = dihedral(8).unwrap();
    let s = semidirect_epi(&minimal_decomposition(&d8, MIN).unwrap(), &cfg()).unwrap();
    assert_eq!(s.epi.kernel_order(), Some(1));

    // Q8 from C4 ≀ C4
    let (am, e_am) = generated_subgroup(&q8, &[1]).unwrap().as_group().unwrap();
    let (_, e_h) = generated_subgroup(&q8, &[4]).unwrap().as_group().unwrap();
    let phi = base_epi(&e_am, &e_h, Conjugation::Right, 1 << 20, &cfg()).unwrap();
    assert_eq!(am.order(), 4);
    assert_eq!(phi.domain().order(), 1024);
    assert!(phi.is_surjective());
    assert!(is_rank_preserving(&phi).unwrap());

    // Klein from C2 ≀ C2
    let klein = abelian(&[2, 2]).unwrap();
    let (_, e_a) = generated_subgroup(&klein, &[1]).unwrap().as_group().unwrap();
    let (_, e_h) = generated_subgroup(&klein, &[2]).unwrap().as_group().unwrap();
    let phi = base_epi(&e_a, &e_h, Conjugation::Right, 1 << 20, &cfg()).unwrap();
    assert_eq!(phi.kernel_order(), Some(2));

    // second-argument lift along C4 → C2
    let c4 = cyclic(4).unwrap();
    let (_, psi) = quotient(&c4, &generated_subgroup(&c4, &[2]).unwrap()).unwrap();
    let lift = lift_second_argument(&cyclic(2).unwrap(), &psi, 1 << 20, &cfg()).unwrap();
    assert_eq!((lift.domain().order(), lift.codomain().order()), (64, 8));
    assert!(lift.is_surjective());

    let c2c2_to_c2 = Homomorphism::from_generator_images(
        &klein,
        &cyclic(2).unwrap(),
        &[(1, 1), (2, 0)],
        &cfg(),
    )
    .unwrap();
    assert!(!is_rank_preserving(&c2c2_to_c2).unwrap());
}

#[test]
fn towers() {
    let tc = TowerConfig::default();
    let q8 = quaternion(8).unwrap();
    let t = semidirect_tower(&q8, &tc).unwrap();
    assert_eq!(t.tower.order(), 16);
    assert_eq!(t.epi.kernel_order(), Some(2));
    assert_eq!(t.tower_rank, 2);

    let d8 = dihedral(8).unwrap();
    let t = semidirect_tower(&d8, &tc).unwrap();
    assert_eq!((t.tower.order(), t.tower_rank), (8, 2));

    let klein = abelian(&[2, 2]).unwrap();
    let t = wreath_tower(&klein, &tc).unwrap();
    assert_eq!(t.abelian_layers.iter().map(Group::order).collect::<Vec<_>>(), [2, 2]);
    assert_eq!((t.tower.order(), t.rank_sum, t.tower_rank), (8, 2, 2));

    let t = wreath_tower(&d8, &tc).unwrap();
    assert_eq!(t.rank_sum, 2);
    let (am, top) = t.tower.wreath_factors().unwrap();
    assert_eq!(t.tower.order(), am.order().pow(top.order() as u32) * top.order());
    assert!(t.rank_preserving);
}

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{ElementId, Group, IDENTITY, TABLE_LIMIT};
use crate::error::{Error, Result};
use crate::subgroup::{generated_subgroup, Subgroup};

/// Largest domain for which a homomorphism table is stored.
pub const MAP_LIMIT: usize = 1 << 22;

/// How homomorphism laws are certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Domains up to this order are checked on every pair.
    pub exhaustive_limit: usize,
    /// Random pairs checked above the exhaustive limit.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            exhaustive_limit: 65536,
            samples: 1_000_000,
            seed: 0,
        }
    }
}

/// The certification a homomorphism actually received.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyPolicy {
    Unverified,
    /// `f(xy) = f(x)f(y)` for every pair.
    Exhaustive,
    /// Every (generator, element) pair plus `samples` seeded random pairs.
    Sampled { samples: usize, seed: u64 },
}

impl fmt::Display for VerifyPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyPolicy::Unverified => write!(f, "unverified"),
            VerifyPolicy::Exhaustive => write!(f, "exhaustive"),
            VerifyPolicy::Sampled { samples, seed } => {
                write!(f, "generators+sampled(pairs={samples},seed={seed})")
            }
        }
    }
}

/// A total map between two groups, stored as a table.
#[derive(Clone)]
pub struct Homomorphism {
    domain: Group,
    codomain: Group,
    table: Arc<Vec<u32>>,
    policy: VerifyPolicy,
    image: Option<Subgroup>,
    kernel: Option<Subgroup>,
}

impl fmt::Debug for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Homomorphism({:?} -> {:?}, {})",
            self.domain, self.codomain, self.policy
        )
    }
}

impl Homomorphism {
    /// Tabulates `f` without checking anything.
    pub fn unverified_from_fn(
        domain: &Group,
        codomain: &Group,
        f: impl Fn(ElementId) -> ElementId,
    ) -> Result<Homomorphism> {
        if domain.order() > MAP_LIMIT {
            return Err(Error::capacity(
                "homomorphism table",
                domain.order(),
                MAP_LIMIT as u64,
            ));
        }
        let mut table = Vec::with_capacity(domain.order());
        for x in domain.elements() {
            let y = f(x);
            if y >= codomain.order() {
                return Err(Error::Domain(format!(
                    "image {y} of {x} lies outside the codomain"
                )));
            }
            table.push(y as u32);
        }
        Ok(Homomorphism {
            domain: domain.clone(),
            codomain: codomain.clone(),
            table: Arc::new(table),
            policy: VerifyPolicy::Unverified,
            image: None,
            kernel: None,
        })
    }

    /// Tabulates `f` and certifies it under `cfg`.
    pub fn from_fn(
        domain: &Group,
        codomain: &Group,
        f: impl Fn(ElementId) -> ElementId,
        cfg: &VerifyConfig,
    ) -> Result<Homomorphism> {
        let mut hom = Homomorphism::unverified_from_fn(domain, codomain, f)?;
        hom.verify(cfg)?;
        Ok(hom)
    }

    /// Extends images of generators to the whole domain by word evaluation.
    /// The keys must generate the domain.
    pub fn from_generator_images(
        domain: &Group,
        codomain: &Group,
        images: &[(ElementId, ElementId)],
        cfg: &VerifyConfig,
    ) -> Result<Homomorphism> {
        if domain.order() > MAP_LIMIT {
            return Err(Error::capacity(
                "homomorphism table",
                domain.order(),
                MAP_LIMIT as u64,
            ));
        }
        let mut table = vec![u32::MAX; domain.order()];
        table[IDENTITY] = IDENTITY as u32;
        let mut queue = vec![IDENTITY];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for &(s, t) in images {
                // φ(x·s) = φ(x)·φ(s)
                let y = domain.mul(x, s);
                let img = codomain.mul(table[x] as usize, t) as u32;
                if table[y] == u32::MAX {
                    table[y] = img;
                    queue.push(y);
                } else if table[y] != img {
                    return Err(Error::NotAHomomorphism { x, y: s });
                }
            }
            i += 1;
        }
        if queue.len() != domain.order() {
            return Err(Error::Precondition(format!(
                "generator keys reach {} of {} elements",
                queue.len(),
                domain.order()
            )));
        }
        let mut hom = Homomorphism {
            domain: domain.clone(),
            codomain: codomain.clone(),
            table: Arc::new(table),
            policy: VerifyPolicy::Unverified,
            image: None,
            kernel: None,
        };
        hom.verify(cfg)?;
        Ok(hom)
    }

    pub fn identity(group: &Group) -> Result<Homomorphism> {
        let cfg = VerifyConfig::default();
        Homomorphism::from_fn(group, group, |x| x, &cfg)
    }

    /// Runs the homomorphism check per `cfg` and fills in image and kernel.
    pub fn verify(&mut self, cfg: &VerifyConfig) -> Result<()> {
        let dom = &self.domain;
        let cod = &self.codomain;
        let f = |x: ElementId| self.table[x] as ElementId;
        if f(IDENTITY) != IDENTITY {
            return Err(Error::NotAHomomorphism {
                x: IDENTITY,
                y: IDENTITY,
            });
        }
        let check = |x: ElementId, y: ElementId| -> Result<()> {
            if f(dom.mul(x, y)) != cod.mul(f(x), f(y)) {
                Err(Error::NotAHomomorphism { x, y })
            } else {
                Ok(())
            }
        };
        let n = dom.order();
        let policy = if n <= cfg.exhaustive_limit {
            for x in 0..n {
                for y in 0..n {
                    check(x, y)?;
                }
            }
            VerifyPolicy::Exhaustive
        } else {
            for &s in dom.generators() {
                for x in 0..n {
                    check(s, x)?;
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            for _ in 0..cfg.samples {
                check(rng.random_range(0..n), rng.random_range(0..n))?;
            }
            VerifyPolicy::Sampled {
                samples: cfg.samples,
                seed: cfg.seed,
            }
        };
        let gens: Vec<_> = dom.generators().iter().map(|&s| f(s)).collect();
        let image = generated_subgroup(cod, &gens)?;
        let kernel = if n <= TABLE_LIMIT {
            let members: Vec<_> = dom.elements().filter(|&x| f(x) == IDENTITY).collect();
            let k = Subgroup::from_members(dom, members)?;
            if k.order() * image.order() != n {
                return Err(Error::Invariant(format!(
                    "|ker| = {}, |im| = {} but |domain| = {n}",
                    k.order(),
                    image.order()
                )));
            }
            Some(k)
        } else {
            None
        };
        self.policy = policy;
        self.image = Some(image);
        self.kernel = kernel;
        Ok(())
    }

    /// `self ∘ inner`, re-certified under `cfg`.
    pub fn compose(&self, inner: &Homomorphism, cfg: &VerifyConfig) -> Result<Homomorphism> {
        if !inner.codomain.ptr_eq(&self.domain) {
            return Err(Error::Precondition(
                "composition of maps with mismatched groups".into(),
            ));
        }
        Homomorphism::from_fn(
            &inner.domain,
            &self.codomain,
            |x| self.apply(inner.apply(x)),
            cfg,
        )
    }

    #[inline]
    pub fn apply(&self, x: ElementId) -> ElementId {
        self.table[x] as ElementId
    }

    pub fn domain(&self) -> &Group {
        &self.domain
    }

    pub fn codomain(&self) -> &Group {
        &self.codomain
    }

    pub fn is_verified(&self) -> bool {
        self.policy != VerifyPolicy::Unverified
    }

    pub fn policy(&self) -> VerifyPolicy {
        self.policy
    }

    pub fn image(&self) -> Option<&Subgroup> {
        self.image.as_ref()
    }

    pub fn image_order(&self) -> Option<usize> {
        self.image.as_ref().map(Subgroup::order)
    }

    pub fn is_surjective(&self) -> bool {
        self.image_order() == Some(self.codomain.order())
    }

    /// Preimage of the identity, kept for domains up to the table limit.
    pub fn kernel(&self) -> Option<&Subgroup> {
        self.kernel.as_ref()
    }

    /// `|domain| / |image|`, available for every verified map.
    pub fn kernel_order(&self) -> Option<usize> {
        self.image_order().map(|i| self.domain.order() / i)
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_order() == Some(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::dihedral;
    use crate::group::{abelian, cyclic, direct_product};

    #[test]
    fn identity_on_generators() {
        let d8 = dihedral(8).unwrap();
        let imgs: Vec<_> = d8.generators().iter().map(|&s| (s, s)).collect();
        let id =
            Homomorphism::from_generator_images(&d8, &d8, &imgs, &VerifyConfig::default()).unwrap();
        assert!(d8.elements().all(|x| id.apply(x) == x));
        assert_eq!(id.kernel().unwrap().order(), 1);
        assert!(id.is_surjective());
        assert_eq!(id.policy(), VerifyPolicy::Exhaustive);
    }

    #[test]
    fn c4_onto_c2() {
        let c4 = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        let h = Homomorphism::from_generator_images(&c4, &c2, &[(1, 1)], &VerifyConfig::default())
            .unwrap();
        assert_eq!(h.kernel().unwrap().order(), 2);
        assert!(h.is_surjective());
    }

    #[test]
    fn d8_onto_c2_killing_rotation() {
        let d8 = dihedral(8).unwrap();
        let c2 = cyclic(2).unwrap();
        // r = index 1, s = index 4 in the dihedral catalog numbering
        let h = Homomorphism::from_generator_images(
            &d8,
            &c2,
            &[(1, 0), (4, 1)],
            &VerifyConfig::default(),
        )
        .unwrap();
        assert_eq!(h.kernel().unwrap().order(), 4);
        // exhaustive table agrees with the homomorphism law
        for x in d8.elements() {
            for y in d8.elements() {
                assert_eq!(h.apply(d8.mul(x, y)), c2.mul(h.apply(x), h.apply(y)));
            }
        }
    }

    #[test]
    fn inconsistent_images_are_rejected() {
        let c4 = cyclic(4).unwrap();
        let c3 = cyclic(3).unwrap();
        let err = Homomorphism::from_generator_images(&c4, &c3, &[(1, 1)], &VerifyConfig::default())
            .unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { .. }));
    }

    #[test]
    fn keys_must_generate() {
        let klein = abelian(&[2, 2]).unwrap();
        let err =
            Homomorphism::from_generator_images(&klein, &klein, &[(1, 1)], &VerifyConfig::default())
                .unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn sampled_policy_above_limit() {
        let c2 = cyclic(2).unwrap();
        let g = direct_product(&cyclic(8).unwrap(), &c2).unwrap();
        let cfg = VerifyConfig {
            exhaustive_limit: 4,
            samples: 100,
            seed: 7,
        };
        let h = Homomorphism::from_fn(&g, &c2, |x| (x / 8) % 2, &cfg).unwrap();
        assert_eq!(h.policy(), VerifyPolicy::Sampled { samples: 100, seed: 7 });
        assert_eq!(h.kernel_order(), Some(8));
    }

    #[test]
    fn non_homomorphism_fails_verification() {
        let c4 = cyclic(4).unwrap();
        let err = Homomorphism::from_fn(&c4, &c4, |x| (x * x) % 4, &VerifyConfig::default())
            .unwrap_err();
        assert!(matches!(err, Error::NotAHomomorphism { .. }));
    }
}

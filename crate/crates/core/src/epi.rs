//! Rank-preserving epimorphisms onto semiabelian groups: the semidirect
//! projection `A ⋊ H → G`, the wreath-base map `A_m ≀ H → G`, the
//! second-argument lift `A ≀ G → A ≀ H`, and the iterated towers built from
//! them.

use std::fmt;

use serde::Serialize;

use crate::engine::{Decomposition, Engine, Minimality};
use crate::error::{Error, Result};
use crate::group::{
    semidirect_product, wreath_order, wreath_product_bounded, Action, ElementId, Group,
    Homomorphism, VerifyConfig, VerifyPolicy, WreathElement, IDENTITY,
};
use crate::subgroup::{generated_subgroup, minimal_lift, rank, reduced_quotient};

/// Default bound on the order of a tower group.
pub const DEFAULT_TOWER_LIMIT: u64 = 1 << 20;

/// Meaning of `x^t` in the wreath-base map.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Conjugation {
    /// `x^t = t⁻¹·x·t`.
    #[default]
    Right,
    /// `x^t = t·x·t⁻¹`.
    Left,
}

impl Conjugation {
    fn apply(self, g: &Group, t: ElementId, x: ElementId) -> ElementId {
        match self {
            Conjugation::Right => g.conj(g.inv(t), x),
            Conjugation::Left => g.conj(t, x),
        }
    }
}

impl fmt::Display for Conjugation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conjugation::Right => "right",
            Conjugation::Left => "left",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TowerKind {
    Semidirect,
    Wreath,
}

impl fmt::Display for TowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerKind::Semidirect => "semidirect",
            TowerKind::Wreath => "wreath",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TowerConfig {
    pub max_order: u64,
    pub verify: VerifyConfig,
    pub ordering: Minimality,
    pub conjugation: Conjugation,
}

impl Default for TowerConfig {
    fn default() -> Self {
        TowerConfig {
            max_order: DEFAULT_TOWER_LIMIT,
            verify: VerifyConfig::default(),
            ordering: Minimality::default(),
            conjugation: Conjugation::default(),
        }
    }
}

/// An iterated product of abelian layers with an epimorphism onto the target.
#[derive(Debug, Clone)]
pub struct TowerReport {
    pub kind: TowerKind,
    /// `A₁, …, A_k`, outermost first.
    pub abelian_layers: Vec<Group>,
    pub tower: Group,
    pub epi: Homomorphism,
    /// Maps whose composition, first to last, is `epi`.
    pub factors: Vec<Homomorphism>,
    pub rank_sum: usize,
    pub target_rank: usize,
    pub tower_rank: usize,
    pub rank_preserving: bool,
    /// Only meaningful for wreath towers.
    pub conjugation: Conjugation,
}

impl TowerReport {
    pub fn verify_policy(&self) -> VerifyPolicy {
        self.epi.policy()
    }
}

/// Semidirect product `A ⋊ H` of a decomposition and the map `(a, h) ↦ ah`.
#[derive(Debug, Clone)]
pub struct SemidirectEpi {
    pub product: Group,
    /// `A` and `H` as standalone groups with their embeddings.
    pub a: (Group, Homomorphism),
    pub h: (Group, Homomorphism),
    pub epi: Homomorphism,
}

fn require_surjective(phi: &Homomorphism) -> Result<()> {
    if !phi.is_surjective() {
        return Err(Error::NotSurjective {
            image: phi.image_order().unwrap_or(0),
            codomain: phi.codomain().order(),
        });
    }
    Ok(())
}

/// `ψ: A ⋊ H → G`, `(a, h) ↦ ah`, with `H` acting on `A` by conjugation in `G`.
pub fn semidirect_epi(d: &Decomposition, cfg: &VerifyConfig) -> Result<SemidirectEpi> {
    if !d.parent.is_whole() {
        return Err(Error::Precondition(
            "decomposition of a proper subgroup; re-home it first".into(),
        ));
    }
    let g = d.parent.parent();
    let (a_loc, ea) = d.a.as_group()?;
    let (h_loc, eh) = d.h.as_group()?;
    let perms = h_loc
        .elements()
        .map(|h| {
            let t = eh.apply(h);
            a_loc
                .elements()
                .map(|x| d.a.local_index(g.conj(t, ea.apply(x))).expect("A is normal"))
                .collect()
        })
        .collect();
    let action = Action::new(&h_loc, &a_loc, perms)?;
    let product = semidirect_product(&a_loc, &h_loc, &action)?;
    let n = a_loc.order();
    let epi = Homomorphism::from_fn(
        &product,
        g,
        |x| g.mul(ea.apply(x % n), eh.apply(x / n)),
        cfg,
    )?;
    require_surjective(&epi)?;
    Ok(SemidirectEpi {
        product,
        a: (a_loc, ea),
        h: (h_loc, eh),
        epi,
    })
}

fn require_embedding(phi: &Homomorphism, what: &str) -> Result<()> {
    if !phi.is_verified() || !phi.is_injective() {
        return Err(Error::Precondition(format!(
            "{what} must be a verified injective homomorphism"
        )));
    }
    Ok(())
}

/// `φ: A_m ≀ H → G`, `(f, h) ↦ (∏_{t ∈ H} f(t)^t)·h`, product over ascending `t`.
///
/// Both embeddings must land in the same `G`, and the image of `A_m` must sit
/// in an abelian normal subgroup for the map to be a homomorphism; the
/// verification catches anything else.
pub fn base_epi(
    embed_a: &Homomorphism,
    embed_h: &Homomorphism,
    conjugation: Conjugation,
    max_order: u64,
    cfg: &VerifyConfig,
) -> Result<Homomorphism> {
    require_embedding(embed_a, "embedding of A_m")?;
    require_embedding(embed_h, "embedding of H")?;
    let g = embed_a.codomain();
    if !embed_h.codomain().ptr_eq(g) {
        return Err(Error::Precondition("embeddings land in different groups".into()));
    }
    let (am, h) = (embed_a.domain(), embed_h.domain());
    let seeds: Vec<_> = am
        .generators()
        .iter()
        .map(|&x| embed_a.apply(x))
        .chain(h.generators().iter().map(|&t| embed_h.apply(t)))
        .collect();
    let span = generated_subgroup(g, &seeds)?;
    if span.order() != g.order() {
        return Err(Error::NotSurjective {
            image: span.order(),
            codomain: g.order(),
        });
    }
    let w = wreath_product_bounded(am, h, max_order)?;
    base_epi_on(&w, embed_a, embed_h, conjugation, cfg)
}

fn base_epi_on(
    w: &Group,
    embed_a: &Homomorphism,
    embed_h: &Homomorphism,
    conjugation: Conjugation,
    cfg: &VerifyConfig,
) -> Result<Homomorphism> {
    let (g, h) = (embed_a.codomain(), embed_h.domain());
    let hs: Vec<ElementId> = h.elements().map(|t| embed_h.apply(t)).collect();
    let epi = Homomorphism::from_fn(
        w,
        g,
        |x| {
            let WreathElement { f, top } = w.wreath_decode(x).unwrap();
            let mut acc = IDENTITY;
            for (t, &ft) in f.iter().enumerate() {
                if ft != IDENTITY {
                    acc = g.mul(acc, conjugation.apply(g, hs[t], embed_a.apply(ft)));
                }
            }
            g.mul(acc, hs[top])
        },
        cfg,
    )?;
    require_surjective(&epi)?;
    Ok(epi)
}

/// `ψ̂(f)(h) = ∏_{k ∈ ψ⁻¹(h)} f(k)`.
pub fn lift_function(a: &Group, psi: &Homomorphism, f: &[ElementId]) -> Vec<ElementId> {
    let mut out = vec![IDENTITY; psi.codomain().order()];
    for (k, &fk) in f.iter().enumerate() {
        let h = psi.apply(k);
        out[h] = a.mul(out[h], fk);
    }
    out
}

/// `ψ̃: A ≀ G → A ≀ H`, `(f, g) ↦ (ψ̂(f), ψ(g))` for an epimorphism `ψ: G → H`.
pub fn lift_second_argument(
    a: &Group,
    psi: &Homomorphism,
    max_order: u64,
    cfg: &VerifyConfig,
) -> Result<Homomorphism> {
    if !a.is_abelian() {
        return Err(Error::Domain(
            "the lifted product needs an abelian base group".into(),
        ));
    }
    if !psi.is_verified() || !psi.is_surjective() {
        return Err(Error::Precondition(
            "ψ must be a verified epimorphism".into(),
        ));
    }
    let source = wreath_product_bounded(a, psi.domain(), max_order)?;
    let target = wreath_product_bounded(a, psi.codomain(), max_order)?;
    lift_between(&source, &target, a, psi, cfg)
}

fn lift_between(
    source: &Group,
    target: &Group,
    a: &Group,
    psi: &Homomorphism,
    cfg: &VerifyConfig,
) -> Result<Homomorphism> {
    let lift = Homomorphism::from_fn(
        source,
        target,
        |x| {
            let w = source.wreath_decode(x).unwrap();
            let image = WreathElement {
                f: lift_function(a, psi, &w.f),
                top: psi.apply(w.top),
            };
            target.wreath_encode(&image).unwrap()
        },
        cfg,
    )?;
    require_surjective(&lift)?;
    Ok(lift)
}

/// True when `d(domain) = d(codomain)` for an epimorphism.
pub fn is_rank_preserving(phi: &Homomorphism) -> Result<bool> {
    if !phi.is_verified() || !phi.is_surjective() {
        return Err(Error::Precondition(
            "rank preservation is defined for verified epimorphisms".into(),
        ));
    }
    Ok(rank(phi.domain())? == rank(phi.codomain())?)
}

struct Built {
    tower: Group,
    epi: Homomorphism,
    factors: Vec<Homomorphism>,
    layers: Vec<Group>,
}

fn finish(
    kind: TowerKind,
    target: &Group,
    built: Built,
    cfg: &TowerConfig,
) -> Result<TowerReport> {
    let rank_sum = built
        .layers
        .iter()
        .map(rank)
        .sum::<Result<usize>>()?;
    let target_rank = rank(target)?;
    let tower_rank = rank(&built.tower)?;
    Ok(TowerReport {
        kind,
        abelian_layers: built.layers,
        tower: built.tower,
        epi: built.epi,
        factors: built.factors,
        rank_sum,
        target_rank,
        tower_rank,
        rank_preserving: tower_rank == target_rank,
        conjugation: cfg.conjugation,
    })
}

fn base_case(g: &Group) -> Result<Built> {
    let id = Homomorphism::identity(g)?;
    Ok(Built {
        tower: g.clone(),
        epi: id.clone(),
        factors: vec![id],
        layers: if g.is_trivial() { vec![] } else { vec![g.clone()] },
    })
}

/// `A₁ ⋊ (A₂ ⋊ (… ⋊ A_r)) ↠ G` from iterated minimal decompositions, each inner
/// tower acting on `A` through its epimorphism.
pub fn semidirect_tower(g: &Group, cfg: &TowerConfig) -> Result<TowerReport> {
    let built = semidirect_rec(g, cfg)?;
    finish(TowerKind::Semidirect, g, built, cfg)
}

fn semidirect_rec(g: &Group, cfg: &TowerConfig) -> Result<Built> {
    let engine = Engine::new(g)?;
    if !engine.is_semiabelian() {
        return Err(Error::NotSemiabelian);
    }
    if g.is_abelian() {
        return base_case(g);
    }
    let d = engine.minimal_decomposition(cfg.ordering)?;
    let step = semidirect_epi(&d, &cfg.verify)?;
    let (a_loc, ea) = step.a;
    let (h_loc, eh) = step.h;
    let inner = semidirect_rec(&h_loc, cfg)?;
    let order = a_loc.order() as u64 * inner.tower.order() as u64;
    if order > cfg.max_order {
        return Err(Error::capacity("semidirect tower", order, cfg.max_order));
    }
    let (_, _, action) = step.product.semidirect_factors().unwrap();
    let pulled = action.pullback(&inner.epi)?;
    let tower = semidirect_product(&a_loc, &inner.tower, &pulled)?;
    let lift = Homomorphism::from_fn(
        &tower,
        &step.product,
        |x| {
            let (a, t) = tower.semidirect_split(x).unwrap();
            step.product.semidirect_pair(a, inner.epi.apply(t)).unwrap()
        },
        &cfg.verify,
    )?;
    let epi = Homomorphism::from_fn(
        &tower,
        g,
        |x| {
            let (a, t) = tower.semidirect_split(x).unwrap();
            g.mul(ea.apply(a), eh.apply(inner.epi.apply(t)))
        },
        &cfg.verify,
    )?;
    require_surjective(&epi)?;
    let mut layers = vec![a_loc];
    layers.extend(inner.layers);
    Ok(Built {
        tower,
        epi,
        factors: vec![lift, step.epi],
        layers,
    })
}

/// `A_m ≀ H′ ↠ A_m ≀ H ↠ G`, recursing on the rank of `G`.
pub fn wreath_tower(g: &Group, cfg: &TowerConfig) -> Result<TowerReport> {
    let built = wreath_rec(g, cfg)?;
    let report = finish(TowerKind::Wreath, g, built, cfg)?;
    if report.rank_sum != report.target_rank {
        return Err(Error::Invariant(format!(
            "layer ranks sum to {} but d(G) = {}",
            report.rank_sum, report.target_rank
        )));
    }
    Ok(report)
}

fn wreath_rec(g: &Group, cfg: &TowerConfig) -> Result<Built> {
    let engine = Engine::new(g)?;
    if !engine.is_semiabelian() {
        return Err(Error::NotSemiabelian);
    }
    if rank(g)? <= 1 {
        return base_case(g);
    }
    let d = engine.minimal_decomposition(cfg.ordering)?;
    let rq = reduced_quotient(&d.a, &d.h)?;
    let (am, e_am) = minimal_lift(&rq)?.as_group()?;
    let (h_loc, e_h) = d.h.as_group()?;
    let inner = wreath_rec(&h_loc, cfg)?;
    let required = wreath_order(am.order(), inner.tower.order());
    if required > cfg.max_order.into() {
        return Err(Error::capacity("wreath tower", required, cfg.max_order));
    }
    let middle = wreath_product_bounded(&am, &h_loc, cfg.max_order)?;
    let top = wreath_product_bounded(&am, &inner.tower, cfg.max_order)?;
    let phi = base_epi_on(&middle, &e_am, &e_h, cfg.conjugation, &cfg.verify)?;
    let lift = lift_between(&top, &middle, &am, &inner.epi, &cfg.verify)?;
    let epi = phi.compose(&lift, &cfg.verify)?;
    require_surjective(&epi)?;
    let mut layers = vec![am];
    layers.extend(inner.layers);
    Ok(Built {
        tower: lift.domain().clone(),
        epi,
        factors: vec![lift, phi],
        layers,
    })
}

//! Finite groups with dense element indices.
//!
//! Every group numbers its elements `0..order` with the identity at index 0.
//! Small groups (order up to [`TABLE_LIMIT`]) carry a materialized Cayley
//! table; larger products stay structural and multiply on demand from their
//! factors.

mod action;
mod hom;
mod quotient;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use action::Action;
pub use hom::{Homomorphism, VerifyConfig, VerifyPolicy};
pub use quotient::quotient;

/// Dense index of an element inside one [`Group`].
pub type ElementId = usize;

/// Index of the identity in every group.
pub const IDENTITY: ElementId = 0;

/// Largest order for which a Cayley table is materialized.
pub const TABLE_LIMIT: usize = 4096;

/// Default bound on the order of structural (non-tabled) groups.
pub const DEFAULT_STRUCTURAL_LIMIT: u64 = 1 << 24;

#[derive(Clone)]
pub struct Group {
    inner: Arc<Inner>,
}

struct Inner {
    order: usize,
    prime: Option<u64>,
    structure: Structure,
    table: Option<CayleyTable>,
    generators: OnceLock<Vec<ElementId>>,
}

struct CayleyTable {
    mul: Vec<u16>,
    inv: Vec<u16>,
}

#[derive(Clone)]
enum Structure {
    Cyclic {
        n: usize,
    },
    Abelian {
        factors: Vec<usize>,
    },
    Tabled {
        labels: Vec<String>,
    },
    Direct {
        left: Group,
        right: Group,
    },
    Semidirect {
        base: Group,
        top: Group,
        action: Action,
    },
    Wreath {
        base: Group,
        top: Group,
        base_size: usize,
    },
}

/// An element `(f, g)` of a regular wreath product `A ≀ H`, where `f` lists
/// the base coordinate for every top-group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub f: Vec<ElementId>,
    pub top: ElementId,
}

/// Cayley table serialization: `{"order": n, "labels": [...], "table": [[...]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyJson {
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<ElementId>>,
}

/// Returns `p` when `n` is a positive power of the prime `p`.
pub fn prime_power_base(n: usize) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n && !n.is_multiple_of(p) {
        p += 1;
    }
    if !n.is_multiple_of(p) {
        p = n;
    }
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p as u64)
}

/// Exponent `k` with `p^k = n`, if any.
pub fn log_p(n: usize, p: u64) -> Option<u32> {
    let p = p as usize;
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        if !m.is_multiple_of(p) {
            return None;
        }
        m /= p;
        k += 1;
    }
    Some(k)
}

impl Group {
    fn build(order: usize, structure: Structure) -> Group {
        let group = Group {
            inner: Arc::new(Inner {
                order,
                prime: prime_power_base(order),
                structure,
                table: None,
                generators: OnceLock::new(),
            }),
        };
        if order > TABLE_LIMIT || matches!(group.inner.structure, Structure::Tabled { .. }) {
            return group;
        }
        let mut mul = vec![0u16; order * order];
        let mut inv = vec![0u16; order];
        for a in 0..order {
            for b in 0..order {
                mul[a * order + b] = group.structural_mul(a, b) as u16;
            }
            inv[a] = group.structural_inv(a) as u16;
        }
        let inner = Inner {
            order,
            prime: group.inner.prime,
            structure: group.inner.structure.clone(),
            table: Some(CayleyTable { mul, inv }),
            generators: OnceLock::new(),
        };
        Group {
            inner: Arc::new(inner),
        }
    }

    /// The trivial group.
    pub fn trivial() -> Group {
        Group::build(1, Structure::Cyclic { n: 1 })
    }

    /// Builds a group from an explicit Cayley table, validating the group axioms.
    pub fn from_table(labels: Vec<String>, table: Vec<Vec<ElementId>>) -> Result<Group> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if order > TABLE_LIMIT {
            return Err(Error::capacity("Cayley table", order, TABLE_LIMIT as u64));
        }
        if labels.len() != order {
            return Err(Error::InvalidTable(format!(
                "{} labels for {} elements",
                labels.len(),
                order
            )));
        }
        let mut mul = Vec::with_capacity(order * order);
        for row in &table {
            if row.len() != order {
                return Err(Error::InvalidTable("table is not square".into()));
            }
            for &c in row {
                if c >= order {
                    return Err(Error::InvalidTable(format!("entry {c} out of range")));
                }
                mul.push(c as u16);
            }
        }
        for (x, row) in table.iter().enumerate() {
            if table[0][x] != x || row[0] != x {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        let mut inv = vec![0u16; order];
        for (x, row) in table.iter().enumerate() {
            let Some(y) = row.iter().position(|&c| c == IDENTITY) else {
                return Err(Error::InvalidTable(format!("element {x} has no inverse")));
            };
            if table[y][x] != IDENTITY {
                return Err(Error::InvalidTable(format!("element {x} has no two-sided inverse")));
            }
            inv[x] = y as u16;
        }
        let group = Group {
            inner: Arc::new(Inner {
                order,
                prime: prime_power_base(order),
                structure: Structure::Tabled { labels },
                table: Some(CayleyTable { mul, inv }),
                generators: OnceLock::new(),
            }),
        };
        group.verify_axioms()?;
        Ok(group)
    }

    /// Builds a group from a multiplication rule on `0..order`.
    /// Used by the catalog and quotient constructions; the result is validated.
    pub fn from_fn(
        labels: Vec<String>,
        mul: impl Fn(ElementId, ElementId) -> ElementId,
    ) -> Result<Group> {
        let order = labels.len();
        let table = (0..order)
            .map(|a| (0..order).map(|b| mul(a, b)).collect())
            .collect();
        Group::from_table(labels, table)
    }

    pub fn from_cayley_json(json: CayleyJson) -> Result<Group> {
        if json.order != json.table.len() {
            return Err(Error::InvalidTable(format!(
                "order {} but {} rows",
                json.order,
                json.table.len()
            )));
        }
        Group::from_table(json.labels, json.table)
    }

    pub fn to_cayley_json(&self) -> Result<CayleyJson> {
        if self.order() > TABLE_LIMIT {
            return Err(Error::capacity(
                "Cayley table",
                self.order(),
                TABLE_LIMIT as u64,
            ));
        }
        let n = self.order();
        Ok(CayleyJson {
            order: n,
            labels: (0..n).map(|x| self.label(x)).collect(),
            table: (0..n)
                .map(|a| (0..n).map(|b| self.mul(a, b)).collect())
                .collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    /// The prime `p` when the order is a positive power of `p`.
    pub fn prime(&self) -> Option<u64> {
        self.inner.prime
    }

    /// True for the trivial group and for groups of prime-power order.
    pub fn is_p_group(&self) -> bool {
        self.order() == 1 || self.prime().is_some()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn has_table(&self) -> bool {
        self.inner.table.is_some()
    }

    /// Identity of the underlying allocation, for "same group" checks.
    pub fn ptr_eq(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order()
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.inner.table {
            Some(t) => t.mul[a * self.inner.order + b] as ElementId,
            None => self.structural_mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        match &self.inner.table {
            Some(t) => t.inv[a] as ElementId,
            None => self.structural_inv(a),
        }
    }

    pub fn pow(&self, a: ElementId, k: u64) -> ElementId {
        let mut acc = IDENTITY;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `x y x⁻¹`
    pub fn conj(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul(self.mul(x, y), self.inv(x))
    }

    /// `x y x⁻¹ y⁻¹`
    pub fn commutator(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul(self.mul(x, y), self.mul(self.inv(x), self.inv(y)))
    }

    pub fn element_order(&self, a: ElementId) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, a: ElementId) -> String {
        match &self.inner.structure {
            Structure::Cyclic { .. } => format!("g^{a}"),
            Structure::Abelian { factors } => {
                let coords = decode_mixed(a, factors);
                let parts: Vec<String> = coords.iter().map(|c| format!("g^{c}")).collect();
                format!("({})", parts.join(", "))
            }
            Structure::Tabled { labels } => labels[a].clone(),
            Structure::Direct { left, .. } => {
                let (l, r) = (a % left.order(), a / left.order());
                let right = self.direct_right();
                format!("({}, {})", left.label(l), right.label(r))
            }
            Structure::Semidirect { base, top, .. } => {
                let (x, h) = (a % base.order(), a / base.order());
                format!("({}, {})", base.label(x), top.label(h))
            }
            Structure::Wreath { base, top, .. } => {
                let w = self.wreath_decode(a).expect("wreath structure");
                let f: Vec<String> = w.f.iter().map(|&x| base.label(x)).collect();
                format!("([{}], {})", f.join(", "), top.label(w.top))
            }
        }
    }

    /// Finds the element carrying the given label.
    pub fn find_label(&self, label: &str) -> Option<ElementId> {
        self.elements().find(|&x| self.label(x) == label)
    }

    /// A deterministic generating set. Product constructions use the images of
    /// their factors' generators; tabled groups use a greedy lowest-index choice.
    pub fn generators(&self) -> &[ElementId] {
        self.inner.generators.get_or_init(|| self.compute_generators())
    }

    fn compute_generators(&self) -> Vec<ElementId> {
        match &self.inner.structure {
            Structure::Cyclic { n } => {
                if *n > 1 {
                    vec![1]
                } else {
                    vec![]
                }
            }
            Structure::Abelian { factors } => {
                let mut radix = 1;
                let mut gens = Vec::new();
                for &f in factors {
                    gens.push(radix);
                    radix *= f;
                }
                gens
            }
            Structure::Tabled { .. } => self.greedy_generators(),
            Structure::Direct { left, right } => {
                let mut gens: Vec<_> = left.generators().to_vec();
                gens.extend(right.generators().iter().map(|&r| r * left.order()));
                gens
            }
            Structure::Semidirect { base, top, .. } => {
                let mut gens: Vec<_> = base.generators().to_vec();
                gens.extend(top.generators().iter().map(|&h| h * base.order()));
                gens
            }
            Structure::Wreath {
                base,
                top,
                base_size,
            } => {
                let mut gens: Vec<_> = base.generators().to_vec();
                gens.extend(top.generators().iter().map(|&h| h * base_size));
                gens
            }
        }
    }

    fn greedy_generators(&self) -> Vec<ElementId> {
        let mut gens = Vec::new();
        let mut seen = vec![false; self.order()];
        seen[IDENTITY] = true;
        let mut members = vec![IDENTITY];
        for x in self.elements() {
            if seen[x] {
                continue;
            }
            gens.push(x);
            let mut i = 0;
            while i < members.len() {
                for &s in &gens {
                    let y = self.mul(members[i], s);
                    if !seen[y] {
                        seen[y] = true;
                        members.push(y);
                    }
                }
                i += 1;
            }
            if members.len() == self.order() {
                break;
            }
        }
        gens
    }

    /// Checks identity, inverse and associativity laws.
    ///
    /// Associativity uses Light's test against a generating set, which is
    /// exhaustive: `(x g) y = x (g y)` for all `x, y` and every generator `g`
    /// implies associativity once the generators reach every element by right
    /// multiplication. Groups above [`TABLE_LIMIT`] are spot-checked with
    /// seeded random triples.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order();
        for x in self.elements() {
            if self.mul(IDENTITY, x) != x || self.mul(x, IDENTITY) != x {
                return Err(Error::Invariant(format!("{x} breaks the identity law")));
            }
            let y = self.inv(x);
            if self.mul(x, y) != IDENTITY || self.mul(y, x) != IDENTITY {
                return Err(Error::Invariant(format!("{x} has no two-sided inverse")));
            }
            if n > TABLE_LIMIT && x > 4096 {
                break;
            }
        }
        if n > TABLE_LIMIT {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..100_000 {
                let (x, y, z) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                    return Err(Error::Invariant(format!("({x},{y},{z}) not associative")));
                }
            }
            return Ok(());
        }
        let gens = self.generators().to_vec();
        let mut seen = vec![false; n];
        seen[IDENTITY] = true;
        let mut queue = vec![IDENTITY];
        let mut i = 0;
        while i < queue.len() {
            for &g in &gens {
                let y = self.mul(queue[i], g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
            i += 1;
        }
        if queue.len() != n {
            return Err(Error::Invariant("generators do not reach every element".into()));
        }
        for &g in &gens {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(Error::Invariant(format!(
                            "({x},{g},{y}) not associative"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Decodes an element of a wreath product. `None` for other groups.
    pub fn wreath_decode(&self, a: ElementId) -> Option<WreathElement> {
        let Structure::Wreath {
            base,
            top,
            base_size,
        } = &self.inner.structure
        else {
            return None;
        };
        let mut rest = a % base_size;
        let mut f = Vec::with_capacity(top.order());
        for _ in 0..top.order() {
            f.push(rest % base.order());
            rest /= base.order();
        }
        Some(WreathElement {
            f,
            top: a / base_size,
        })
    }

    /// Encodes a wreath element. `None` for other groups or malformed input.
    pub fn wreath_encode(&self, w: &WreathElement) -> Option<ElementId> {
        let Structure::Wreath {
            base,
            top,
            base_size,
        } = &self.inner.structure
        else {
            return None;
        };
        if w.f.len() != top.order() || w.top >= top.order() {
            return None;
        }
        let mut id = 0;
        for &x in w.f.iter().rev() {
            if x >= base.order() {
                return None;
            }
            id = id * base.order() + x;
        }
        Some(id + w.top * base_size)
    }

    /// Base and top factors of a wreath product.
    pub fn wreath_factors(&self) -> Option<(&Group, &Group)> {
        match &self.inner.structure {
            Structure::Wreath { base, top, .. } => Some((base, top)),
            _ => None,
        }
    }

    /// Base and top factors of a semidirect product, with its action.
    pub fn semidirect_factors(&self) -> Option<(&Group, &Group, &Action)> {
        match &self.inner.structure {
            Structure::Semidirect { base, top, action } => Some((base, top, action)),
            _ => None,
        }
    }

    /// Element `(a, h)` of a semidirect product.
    pub fn semidirect_pair(&self, a: ElementId, h: ElementId) -> Option<ElementId> {
        self.semidirect_factors().map(|(base, _, _)| a + h * base.order())
    }

    /// Splits an element of a semidirect product into `(a, h)`.
    pub fn semidirect_split(&self, x: ElementId) -> Option<(ElementId, ElementId)> {
        self.semidirect_factors()
            .map(|(base, _, _)| (x % base.order(), x / base.order()))
    }

    /// Left and right factors of a direct product.
    pub fn direct_factors(&self) -> Option<(&Group, &Group)> {
        match &self.inner.structure {
            Structure::Direct { left, right } => Some((left, right)),
            _ => None,
        }
    }

    fn direct_right(&self) -> &Group {
        match &self.inner.structure {
            Structure::Direct { right, .. } => right,
            _ => unreachable!(),
        }
    }

    fn structural_mul(&self, a: ElementId, b: ElementId) -> ElementId {
        match &self.inner.structure {
            Structure::Cyclic { n } => (a + b) % n,
            Structure::Abelian { factors } => {
                let mut id = 0;
                let mut radix = 1;
                let (mut a, mut b) = (a, b);
                for &f in factors {
                    id += ((a % f + b % f) % f) * radix;
                    a /= f;
                    b /= f;
                    radix *= f;
                }
                id
            }
            Structure::Tabled { .. } => unreachable!("tabled groups always carry a table"),
            Structure::Direct { left, right } => {
                let n = left.order();
                left.mul(a % n, b % n) + n * right.mul(a / n, b / n)
            }
            Structure::Semidirect { base, top, action } => {
                let n = base.order();
                let (a1, h1) = (a % n, a / n);
                let (a2, h2) = (b % n, b / n);
                base.mul(a1, action.apply(h1, a2)) + n * top.mul(h1, h2)
            }
            Structure::Wreath {
                base,
                top,
                base_size,
            } => {
                // (f1, g1)(f2, g2) = (t ↦ f1(t)·f2(t·g1), g1·g2)
                let (m, k) = (Radix::new(base.order()), top.order());
                let size = Radix::new(*base_size);
                let (f1, g1) = size.split(a);
                let (f2, g2) = size.split(b);
                let mut inline = [0; INLINE_DIGITS];
                let mut heap = Vec::new();
                let f2 = digits(f2, m, k, &mut inline, &mut heap);
                let (mut rest, mut id) = (f1, 0);
                for t in 0..k {
                    let (d, r) = m.split(rest);
                    id += m.shift_left(base.mul(d, f2[top.mul(t, g1)]), t);
                    rest = r;
                }
                id + base_size * top.mul(g1, g2)
            }
        }
    }

    fn structural_inv(&self, a: ElementId) -> ElementId {
        match &self.inner.structure {
            Structure::Cyclic { n } => (n - a) % n,
            Structure::Abelian { factors } => {
                let mut id = 0;
                let mut radix = 1;
                let mut a = a;
                for &f in factors {
                    id += ((f - a % f) % f) * radix;
                    a /= f;
                    radix *= f;
                }
                id
            }
            Structure::Tabled { .. } => unreachable!("tabled groups always carry a table"),
            Structure::Direct { left, right } => {
                let n = left.order();
                left.inv(a % n) + n * right.inv(a / n)
            }
            Structure::Semidirect { base, top, action } => {
                // (a, h)⁻¹ = (act(h⁻¹)(a⁻¹), h⁻¹)
                let n = base.order();
                let (x, h) = (a % n, a / n);
                let hi = top.inv(h);
                action.apply(hi, base.inv(x)) + n * hi
            }
            Structure::Wreath {
                base,
                top,
                base_size,
            } => {
                // (f, g)⁻¹ = (s ↦ f(s·g⁻¹)⁻¹, g⁻¹)
                let (m, k) = (Radix::new(base.order()), top.order());
                let (f, g) = Radix::new(*base_size).split(a);
                let mut inline = [0; INLINE_DIGITS];
                let mut heap = Vec::new();
                let f = digits(f, m, k, &mut inline, &mut heap);
                let gi = top.inv(g);
                let mut id = 0;
                for s in (0..k).rev() {
                    id = id * m.m + base.inv(f[top.mul(s, gi)]);
                }
                id + base_size * gi
            }
        }
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.inner.structure {
            Structure::Cyclic { .. } => "cyclic",
            Structure::Abelian { .. } => "abelian",
            Structure::Tabled { .. } => "tabled",
            Structure::Direct { .. } => "direct",
            Structure::Semidirect { .. } => "semidirect",
            Structure::Wreath { .. } => "wreath",
        };
        write!(f, "Group({kind}, order={})", self.order())
    }
}

const INLINE_DIGITS: usize = 32;

/// Digit splitting in base `m`, with shifts when `m` is a power of two.
#[derive(Clone, Copy)]
struct Radix {
    m: usize,
    shift: Option<u32>,
}

impl Radix {
    fn new(m: usize) -> Radix {
        Radix {
            m,
            shift: m.is_power_of_two().then(|| m.trailing_zeros()),
        }
    }

    /// `(a mod m, a div m)`.
    #[inline]
    fn split(self, a: usize) -> (usize, usize) {
        match self.shift {
            Some(s) => (a & (self.m - 1), a >> s),
            None => (a % self.m, a / self.m),
        }
    }

    /// `x · m^t`.
    #[inline]
    fn shift_left(self, x: usize, t: usize) -> usize {
        match self.shift {
            Some(s) => x << (s as usize * t),
            None => x * self.m.pow(t as u32),
        }
    }
}

/// Base-`m` digits of `a`, least significant first, in a stack buffer when `k` is small.
fn digits<'a>(
    mut a: usize,
    m: Radix,
    k: usize,
    inline: &'a mut [usize; INLINE_DIGITS],
    heap: &'a mut Vec<usize>,
) -> &'a [usize] {
    let out: &mut [usize] = if k <= INLINE_DIGITS {
        &mut inline[..k]
    } else {
        heap.resize(k, 0);
        heap
    };
    for d in out.iter_mut() {
        (*d, a) = m.split(a);
    }
    out
}

fn decode_mixed(mut a: usize, radices: &[usize]) -> Vec<usize> {
    radices
        .iter()
        .map(|&r| {
            let c = a % r;
            a /= r;
            c
        })
        .collect()
}

fn checked_order(what: &'static str, order: BigUint, limit: u64) -> Result<usize> {
    match u64::try_from(&order) {
        Ok(n) if n <= limit => Ok(n as usize),
        _ => Err(Error::capacity(what, order, limit)),
    }
}

/// `ℤ/nℤ` with element `i` labeled `g^i`.
pub fn cyclic(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    checked_order("cyclic group", BigUint::from(n), DEFAULT_STRUCTURAL_LIMIT)?;
    Ok(Group::build(n, Structure::Cyclic { n }))
}

/// Direct product of cyclic groups of the given orders.
pub fn abelian(factors: &[usize]) -> Result<Group> {
    if let Some(&bad) = factors.iter().find(|&&f| f < 2) {
        return Err(Error::InvalidOrder(bad));
    }
    match factors {
        [] => Ok(Group::trivial()),
        [n] => cyclic(*n),
        _ => {
            let order = factors.iter().map(|&f| BigUint::from(f)).product();
            let order = checked_order("abelian group", order, DEFAULT_STRUCTURAL_LIMIT)?;
            Ok(Group::build(
                order,
                Structure::Abelian {
                    factors: factors.to_vec(),
                },
            ))
        }
    }
}

/// Componentwise product; element `(g, h)` has index `g + |G|·h`.
pub fn direct_product(left: &Group, right: &Group) -> Result<Group> {
    let order = BigUint::from(left.order()) * BigUint::from(right.order());
    let order = checked_order("direct product", order, DEFAULT_STRUCTURAL_LIMIT)?;
    Ok(Group::build(
        order,
        Structure::Direct {
            left: left.clone(),
            right: right.clone(),
        },
    ))
}

/// `A ⋊ H` with `(a₁,h₁)(a₂,h₂) = (a₁·act(h₁)(a₂), h₁h₂)`; element `(a, h)`
/// has index `a + |A|·h`.
pub fn semidirect_product(base: &Group, top: &Group, action: &Action) -> Result<Group> {
    if !action.base().ptr_eq(base) || !action.top().ptr_eq(top) {
        return Err(Error::InvalidAction(
            "action is defined for different groups".into(),
        ));
    }
    let order = BigUint::from(base.order()) * BigUint::from(top.order());
    let order = checked_order("semidirect product", order, DEFAULT_STRUCTURAL_LIMIT)?;
    Ok(Group::build(
        order,
        Structure::Semidirect {
            base: base.clone(),
            top: top.clone(),
            action: action.clone(),
        },
    ))
}

/// Required order `|A|^|H|·|H|` of the regular wreath product.
pub fn wreath_order(base_order: usize, top_order: usize) -> BigUint {
    BigUint::from(base_order).pow(top_order as u32) * BigUint::from(top_order)
}

/// Regular wreath product `A ≀ H` under the default structural bound.
pub fn wreath_product(base: &Group, top: &Group) -> Result<Group> {
    wreath_product_bounded(base, top, DEFAULT_STRUCTURAL_LIMIT)
}

/// Regular wreath product `A ≀ H` with pairs `(f, g)`, `f: H → A`, and
/// `(f₁,g₁)(f₂,g₂) = (f₁·f₂^{g₁⁻¹}, g₁g₂)` where `f₂^{g₁⁻¹}(t) = f₂(t·g₁)`.
pub fn wreath_product_bounded(base: &Group, top: &Group, limit: u64) -> Result<Group> {
    let order = wreath_order(base.order(), top.order());
    let order = checked_order("wreath product", order, limit)?;
    let base_size = order / top.order();
    Ok(Group::build(
        order,
        Structure::Wreath {
            base: base.clone(),
            top: top.clone(),
            base_size,
        },
    ))
}

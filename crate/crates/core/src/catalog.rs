//! Named small groups: dihedral, generalized quaternion, semidihedral,
//! modular and Heisenberg groups.
//!
//! The metacyclic families use elements `x^a y^e` indexed `a + m·e`, where
//! `m` is the order of `x`.

use crate::error::{Error, Result};
use crate::group::{prime_power_base, Group};

fn metacyclic_label(a: usize, e: usize, x: &str, y: &str) -> String {
    let xs = match a {
        0 => String::new(),
        1 => x.to_string(),
        _ => format!("{x}^{a}"),
    };
    match (xs.is_empty(), e) {
        (true, 0) => "e".into(),
        (false, 0) => xs,
        (_, _) => format!("{xs}{y}"),
    }
}

/// `⟨x, y | x^m, y² = x^c, y x y⁻¹ = x^k⟩` on elements `x^a y^e`.
fn metacyclic(m: usize, k: usize, c: usize, names: (&str, &str)) -> Result<Group> {
    let labels = (0..2 * m)
        .map(|i| metacyclic_label(i % m, i / m, names.0, names.1))
        .collect();
    Group::from_fn(labels, |p, q| {
        let (a, e) = (p % m, p / m);
        let (b, f) = (q % m, q / m);
        // y^e x^b = x^{k^e b} y^e
        let twisted = if e == 1 { (k * b) % m } else { b };
        let mut exp = (a + twisted) % m;
        let mut y = e + f;
        if y == 2 {
            exp = (exp + c) % m;
            y = 0;
        }
        exp + m * y
    })
}

/// Dihedral group of order `n` (`n` even, at least 4), on `r^k s^e`.
pub fn dihedral(n: usize) -> Result<Group> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidOrder(n));
    }
    let m = n / 2;
    metacyclic(m, m - 1, 0, ("r", "s"))
}

/// Generalized quaternion group of order `n` (a power of two, at least 8).
pub fn quaternion(n: usize) -> Result<Group> {
    if n < 8 || prime_power_base(n) != Some(2) {
        return Err(Error::InvalidOrder(n));
    }
    let m = n / 2;
    metacyclic(m, m - 1, m / 2, ("x", "y"))
}

/// Semidihedral group of order `n` (power of two, at least 16): `y x y⁻¹ = x^{m/2-1}`.
pub fn semidihedral(n: usize) -> Result<Group> {
    if n < 16 || prime_power_base(n) != Some(2) {
        return Err(Error::InvalidOrder(n));
    }
    let m = n / 2;
    metacyclic(m, m / 2 - 1, 0, ("x", "y"))
}

/// Modular group of order `n` (power of two, at least 16): `y x y⁻¹ = x^{m/2+1}`.
pub fn modular(n: usize) -> Result<Group> {
    if n < 16 || prime_power_base(n) != Some(2) {
        return Err(Error::InvalidOrder(n));
    }
    let m = n / 2;
    metacyclic(m, m / 2 + 1, 0, ("x", "y"))
}

/// Heisenberg group of upper unitriangular 3×3 matrices over `𝔽_p`, order `p³`.
/// Element `(a, b, c)` has index `a + p·b + p²·c` and
/// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+a·b')`.
pub fn heisenberg(p: usize) -> Result<Group> {
    if prime_power_base(p) != Some(p as u64) {
        return Err(Error::InvalidOrder(p));
    }
    let n = p * p * p;
    let split = |i: usize| (i % p, (i / p) % p, i / (p * p));
    let labels = (0..n)
        .map(|i| {
            let (a, b, c) = split(i);
            format!("[{a} {b} {c}]")
        })
        .collect();
    Group::from_fn(labels, |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
    })
}

/// Resolves a catalog name: `D<n>`, `Q<n>`, `SD<n>`, `M<n>`, `He<p>`.
/// Returns `None` for names outside the catalog.
pub fn named(name: &str) -> Option<Result<Group>> {
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (prefix, digits) = name.split_at(split);
    let n: usize = digits.parse().ok()?;
    if digits.starts_with('0') {
        return None;
    }
    let build = match prefix {
        "D" => dihedral,
        "Q" => quaternion,
        "SD" => semidihedral,
        "M" => modular,
        "He" => heisenberg,
        _ => return None,
    };
    Some(build(n))
}

/// True when [`named`] recognizes the name (it may still reject the size).
pub fn is_catalog_name(name: &str) -> bool {
    named(name).is_some()
}

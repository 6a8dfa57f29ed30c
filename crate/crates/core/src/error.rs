use thiserror::Error;

use crate::group::ElementId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group order {0}: a group needs at least one element")]
    InvalidOrder(usize),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    /// A construction or search would exceed a configured size bound.
    /// `required` is the exact decimal size that was asked for.
    #[error("capacity exceeded for {what}: required {required}, limit {limit}")]
    Capacity {
        what: &'static str,
        required: String,
        limit: u64,
    },

    #[error("subgroup is not normal in its parent")]
    NotNormal,

    #[error("{0}")]
    Domain(String),

    #[error("{0} does not normalize the given subgroup")]
    Normalization(String),

    #[error("map is not a homomorphism: f({x}·{y}) != f({x})·f({y})")]
    NotAHomomorphism { x: ElementId, y: ElementId },

    #[error("map is not surjective: image has order {image} in a group of order {codomain}")]
    NotSurjective { image: usize, codomain: usize },

    #[error("group is not semiabelian")]
    NotSemiabelian,

    #[error("the trivial group has no decomposition")]
    NoDecomposition,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
}

impl Error {
    pub(crate) fn capacity(what: &'static str, required: impl ToString, limit: u64) -> Self {
        Error::Capacity {
            what,
            required: abbreviate(required.to_string()),
            limit,
        }
    }
}

/// Keeps exact decimal for moderate numbers, `d.ddde<exp>` beyond 30 digits.
fn abbreviate(n: String) -> String {
    if n.len() <= 30 || !n.bytes().all(|b| b.is_ascii_digit()) {
        return n;
    }
    format!("{}.{}e{}", &n[..1], &n[1..4], n.len() - 1)
}

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn capacity_numbers() {
        let e = Error::capacity("x", "68719476736", 10);
        assert!(matches!(e, Error::Capacity { ref required, .. } if required == "68719476736"));
        let big = format!("1234{}", "0".repeat(40));
        let e = Error::capacity("x", big, 10);
        assert!(matches!(e, Error::Capacity { ref required, .. } if required == "1.234e43"));
    }
}

//! Report structures shared by every command, plus their text rendering.

use std::fmt::Write as _;

use serde::Serialize;

use semiabelian::engine::Minimality;
use semiabelian::group::{log_p, Group, VerifyConfig};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub command: String,
    pub input: String,
    pub ordering: Minimality,
    pub verify: VerifyConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semiabelian: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<ChainStep>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank_graded_chain: Option<Vec<GradedStep>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tower: Option<TowerSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<Vec<CensusRow>>,
}

impl AnalysisReport {
    pub fn new(command: &str, input: &str, ordering: Minimality, verify: VerifyConfig) -> Self {
        AnalysisReport {
            schema: SCHEMA_VERSION,
            command: command.into(),
            input: input.into(),
            ordering,
            verify,
            group: None,
            semiabelian: None,
            decomposition: None,
            chain: None,
            rank_graded_chain: None,
            tower: None,
            checks: None,
            census: None,
        }
    }

    /// True when a `verify` run recorded a failed check.
    pub fn has_failures(&self) -> bool {
        self.checks
            .iter()
            .flatten()
            .any(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub prime: Option<u64>,
    pub rank: Option<usize>,
    pub frattini_order: Option<usize>,
    pub abelian: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionSummary {
    pub a_order: usize,
    pub h_order: usize,
    pub intersection_order: usize,
    pub a_generators: Vec<String>,
    pub h_generators: Vec<String>,
    pub a_bar_rank: usize,
    pub h_rank: usize,
    pub cap_condition: bool,
}

/// One step `H_{i+1} = A_i H_i` of a decomposition chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub group_order: usize,
    pub a_order: usize,
    pub h_order: usize,
    pub cap_condition: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedStep {
    pub order: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerSummary {
    pub kind: String,
    pub layers: Vec<String>,
    pub tower_order: usize,
    pub tower_rank: usize,
    pub target_rank: usize,
    pub rank_sum: usize,
    pub rank_preserving: bool,
    pub kernel_order: Option<usize>,
    pub verify_policy: String,
    pub conjugation: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub group: String,
    pub order: usize,
    pub rank: Option<usize>,
    pub semiabelian: Option<bool>,
    pub chain_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Invariant factors of an abelian p-group, largest first.
pub fn abelian_invariants(g: &Group) -> Option<Vec<usize>> {
    if !g.is_abelian() {
        return None;
    }
    let Some(p) = g.prime() else {
        return g.is_trivial().then(Vec::new);
    };
    let p = p as usize;
    // c[k] = log_p #{x : x^(p^k) = 1}; factors of exponent ≥ k number c[k] - c[k-1]
    let mut counts = vec![0u32];
    let mut pk = 1usize;
    while *counts.last().unwrap() < log_p(g.order(), p as u64)? {
        pk *= p;
        let n = g.elements().filter(|&x| pk.is_multiple_of(g.element_order(x))).count();
        counts.push(log_p(n, p as u64)?);
    }
    let at_least: Vec<u32> = counts.windows(2).map(|w| w[1] - w[0]).collect();
    let mut factors = Vec::new();
    for (k, w) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..(w - next) {
            factors.push(p.pow(k as u32 + 1));
        }
    }
    factors.reverse();
    Some(factors)
}

/// `C4 x C2` style name of an abelian p-group; `1` when trivial.
pub fn abelian_name(g: &Group) -> String {
    match abelian_invariants(g) {
        Some(f) if f.is_empty() => "1".into(),
        Some(f) => f
            .iter()
            .map(|n| format!("C{n}"))
            .collect::<Vec<_>>()
            .join(" x "),
        None => format!("group of order {}", g.order()),
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or("-".into(), T::to_string)
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    if r.input.is_empty() {
        let _ = writeln!(s, "{}", r.command);
    } else {
        let _ = writeln!(s, "{} {}", r.command, r.input);
    }
    if let Some(g) = &r.group {
        let _ = writeln!(
            s,
            "order {}  prime {}  rank {}  frattini order {}  abelian {}",
            g.order,
            opt(&g.prime),
            opt(&g.rank),
            opt(&g.frattini_order),
            g.abelian
        );
    }
    if let Some(b) = r.semiabelian {
        let _ = writeln!(s, "semiabelian: {b}");
    }
    if let Some(d) = &r.decomposition {
        let _ = writeln!(
            s,
            "decomposition ({} minimality): |A| = {}, |H| = {}, |A∩H| = {}",
            r.ordering, d.a_order, d.h_order, d.intersection_order
        );
        let _ = writeln!(s, "  A = <{}>", d.a_generators.join(", "));
        let _ = writeln!(s, "  H = <{}>", d.h_generators.join(", "));
        let _ = writeln!(
            s,
            "  d(Ā) = {}, d(H) = {}, cap condition: {}",
            d.a_bar_rank, d.h_rank, d.cap_condition
        );
    }
    if let Some(chain) = &r.chain {
        let _ = writeln!(s, "decomposition chain ({} steps):", chain.len());
        for c in chain {
            let _ = writeln!(
                s,
                "  {} = {}·{}  cap condition: {}",
                c.group_order, c.a_order, c.h_order, c.cap_condition
            );
        }
    }
    if let Some(chain) = &r.rank_graded_chain {
        let steps: Vec<String> = chain
            .iter()
            .map(|c| format!("{} (d={})", c.order, c.rank))
            .collect();
        let _ = writeln!(s, "rank-graded chain: {}", steps.join(" < "));
    }
    if let Some(t) = &r.tower {
        let _ = writeln!(s, "{} tower: {}", t.kind, t.layers.join(" | "));
        let _ = writeln!(
            s,
            "  order {}  d(tower) {}  d(G) {}  rank sum {}  rank preserving {}",
            t.tower_order, t.tower_rank, t.target_rank, t.rank_sum, t.rank_preserving
        );
        let _ = writeln!(
            s,
            "  kernel order {}  verification {}  conjugation {}",
            opt(&t.kernel_order),
            t.verify_policy,
            t.conjugation
        );
    }
    if let Some(checks) = &r.checks {
        for c in checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skip => "SKIP",
            };
            let _ = writeln!(s, "[{status}] {}: {}", c.name, c.detail);
        }
    }
    if let Some(rows) = &r.census {
        let _ = writeln!(
            s,
            "{:<36} {:>6} {:>3} {:>12} {:>6}",
            "group", "order", "d", "semiabelian", "chain"
        );
        for row in rows {
            let _ = writeln!(
                s,
                "{:<36} {:>6} {:>3} {:>12} {:>6}{}",
                row.group,
                row.order,
                opt(&row.rank),
                opt(&row.semiabelian),
                opt(&row.chain_length),
                row.error.as_ref().map_or(String::new(), |e| format!("  ({e})"))
            );
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use semiabelian::catalog::quaternion;
    use semiabelian::group::{abelian, cyclic};

    #[test]
    fn invariants() {
        assert_eq!(abelian_invariants(&abelian(&[2, 4]).unwrap()).unwrap(), [4, 2]);
        assert_eq!(abelian_invariants(&abelian(&[2, 2, 8]).unwrap()).unwrap(), [8, 2, 2]);
        assert_eq!(abelian_invariants(&abelian(&[3, 9, 9]).unwrap()).unwrap(), [9, 9, 3]);
        assert_eq!(abelian_name(&cyclic(4).unwrap()), "C4");
        assert_eq!(abelian_name(&Group::trivial()), "1");
        assert!(abelian_invariants(&quaternion(8).unwrap()).is_none());
        assert!(abelian_invariants(&cyclic(6).unwrap()).is_none());
    }
}

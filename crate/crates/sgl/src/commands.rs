//! Command dispatch: each command turns an expression and a configuration
//! into an [`AnalysisReport`].

use std::fmt;

use semiabelian::engine::{verify_cap_condition, Decomposition, Engine, Minimality};
use semiabelian::epi::{
    is_rank_preserving, semidirect_epi, semidirect_tower, wreath_tower, Conjugation,
    TowerConfig, TowerKind, TowerReport,
};
use semiabelian::group::{Group, VerifyConfig};
use semiabelian::oracle;
use semiabelian::subgroup::{
    frattini, rank, rank_of, reduced_quotient, Subgroup, DEFAULT_ENUMERATION_LIMIT,
};
use semiabelian::Error;
use thiserror::Error as ThisError;

use crate::census::CATALOG;
use crate::eval::{eval_bounded, DEFAULT_MAX_ORDER};
use crate::parser::{parse_group_expr, ParseError};
use crate::report::{
    abelian_name, AnalysisReport, CensusRow, ChainStep, Check, CheckStatus,
    DecompositionSummary, GradedStep, GroupSummary, TowerSummary,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Decompose,
    Chain,
    Tower(TowerKind),
    Verify,
    Census,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Analyze => write!(f, "analyze"),
            Command::Decompose => write!(f, "decompose"),
            Command::Chain => write!(f, "chain"),
            Command::Tower(k) => write!(f, "tower --kind={k}"),
            Command::Verify => write!(f, "verify"),
            Command::Census => write!(f, "census"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    /// Bound on evaluated groups and tower groups.
    pub max_order: u64,
    pub verify: VerifyConfig,
    pub ordering: Minimality,
    pub conjugation: Conjugation,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_order: DEFAULT_MAX_ORDER,
            verify: VerifyConfig::default(),
            ordering: Minimality::default(),
            conjugation: Conjugation::default(),
        }
    }
}

impl RunConfig {
    fn tower(&self) -> TowerConfig {
        TowerConfig {
            max_order: self.max_order,
            verify: self.verify,
            ordering: self.ordering,
            conjugation: self.conjugation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 parse or bad input, 3 capacity, 4 not semiabelian, 5 internal failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::InvalidOrder(_)
                | Error::InvalidAction(_)
                | Error::NotNormal
                | Error::Domain(_) => 2,
                Error::Capacity { .. } => 3,
                Error::NotSemiabelian | Error::NoDecomposition => 4,
                Error::Normalization(_)
                | Error::NotAHomomorphism { .. }
                | Error::NotSurjective { .. }
                | Error::Precondition(_)
                | Error::Invariant(_)
                | Error::InvalidTable(_) => 5,
            },
        }
    }
}

/// Exit code for a report whose checks failed.
pub const CHECK_FAILURE_EXIT: i32 = 5;

pub fn run_command(cmd: Command, expr_text: &str, cfg: &RunConfig) -> Result<AnalysisReport, CliError> {
    let mut report = AnalysisReport::new(&cmd.to_string(), expr_text, cfg.ordering, cfg.verify);
    if cmd == Command::Census {
        report.census = Some(census(cfg));
        return Ok(report);
    }
    let ast = parse_group_expr(expr_text)?;
    let g = eval_bounded(&ast, cfg.max_order)?;
    report.group = Some(summarize(&g));
    match cmd {
        Command::Analyze => {
            let engine = engine_for(&g)?;
            let semi = engine.is_semiabelian();
            report.semiabelian = Some(semi);
            if semi && g.is_p_group() {
                report.chain = Some(chain_steps(&engine, cfg.ordering)?);
            }
        }
        Command::Decompose => {
            let engine = engine_for(&g)?;
            report.semiabelian = Some(engine.is_semiabelian());
            let d = engine.minimal_decomposition(cfg.ordering)?;
            report.decomposition = Some(decomposition_summary(&d)?);
        }
        Command::Chain => {
            let engine = engine_for(&g)?;
            report.semiabelian = Some(engine.is_semiabelian());
            report.chain = Some(chain_steps(&engine, cfg.ordering)?);
            let graded = engine.rank_graded_chain(cfg.ordering)?;
            report.rank_graded_chain = Some(
                graded
                    .iter()
                    .map(|s| {
                        Ok(GradedStep {
                            order: s.order(),
                            rank: rank_of(s)?,
                        })
                    })
                    .collect::<Result<_, Error>>()?,
            );
        }
        Command::Tower(kind) => {
            report.semiabelian = Some(engine_for(&g)?.is_semiabelian());
            let t = match kind {
                TowerKind::Semidirect => semidirect_tower(&g, &cfg.tower())?,
                TowerKind::Wreath => wreath_tower(&g, &cfg.tower())?,
            };
            report.tower = Some(tower_summary(&t));
        }
        Command::Verify => {
            let engine = engine_for(&g)?;
            report.semiabelian = Some(engine.is_semiabelian());
            report.checks = Some(verify_checks(&g, &engine, cfg));
        }
        Command::Census => unreachable!(),
    }
    Ok(report)
}

fn engine_for(g: &Group) -> Result<Engine, Error> {
    Engine::with_limit(g, DEFAULT_ENUMERATION_LIMIT)
}

fn summarize(g: &Group) -> GroupSummary {
    let p_group = g.is_p_group() || g.is_trivial();
    GroupSummary {
        order: g.order(),
        prime: g.prime(),
        rank: p_group.then(|| rank(g).ok()).flatten(),
        frattini_order: p_group.then(|| frattini(g).ok().map(|f| f.order())).flatten(),
        abelian: g.is_abelian(),
    }
}

fn labels(s: &Subgroup) -> Vec<String> {
    s.generators().iter().map(|&x| s.parent().label(x)).collect()
}

fn decomposition_summary(d: &Decomposition) -> Result<DecompositionSummary, Error> {
    let rq = reduced_quotient(&d.a, &d.h)?;
    Ok(DecompositionSummary {
        a_order: d.a.order(),
        h_order: d.h.order(),
        intersection_order: d.a.intersection_order(&d.h),
        a_generators: labels(&d.a),
        h_generators: labels(&d.h),
        a_bar_rank: rq.rank,
        h_rank: rank_of(&d.h)?,
        cap_condition: verify_cap_condition(d)?,
    })
}

fn chain_steps(engine: &Engine, ordering: Minimality) -> Result<Vec<ChainStep>, Error> {
    engine
        .decomposition_chain(ordering)?
        .steps
        .iter()
        .map(|d| {
            Ok(ChainStep {
                group_order: d.parent.order(),
                a_order: d.a.order(),
                h_order: d.h.order(),
                cap_condition: verify_cap_condition(d)?,
            })
        })
        .collect()
}

fn tower_summary(t: &TowerReport) -> TowerSummary {
    TowerSummary {
        kind: t.kind.to_string(),
        layers: t.abelian_layers.iter().map(abelian_name).collect(),
        tower_order: t.tower.order(),
        tower_rank: t.tower_rank,
        target_rank: t.target_rank,
        rank_sum: t.rank_sum,
        rank_preserving: t.rank_preserving,
        kernel_order: t.epi.kernel_order(),
        verify_policy: t.verify_policy().to_string(),
        conjugation: t.conjugation.to_string(),
    }
}

fn check(name: &str, outcome: Result<(bool, String), Error>) -> Check {
    let (status, detail) = match outcome {
        Ok((true, d)) => (CheckStatus::Pass, d),
        Ok((false, d)) => (CheckStatus::Fail, d),
        Err(e @ Error::Capacity { .. }) => (CheckStatus::Skip, e.to_string()),
        Err(e) => (CheckStatus::Fail, e.to_string()),
    };
    Check {
        name: name.into(),
        status,
        detail,
    }
}

fn skip(name: &str, why: &str) -> Check {
    Check {
        name: name.into(),
        status: CheckStatus::Skip,
        detail: why.into(),
    }
}

fn verify_checks(g: &Group, engine: &Engine, cfg: &RunConfig) -> Vec<Check> {
    let mut out = Vec::new();
    let semi = engine.is_semiabelian();
    out.push(check(
        "definition-based semiabelian search agrees",
        oracle::semiabelian_naive(g).map(|b| (b == semi, format!("engine {semi}, oracle {b}"))),
    ));
    if !g.is_p_group() {
        out.push(skip("p-group checks", "not a p-group"));
        return out;
    }
    out.push(check(
        "rank equals brute-force rank",
        rank(g).and_then(|r| {
            let b = oracle::brute_rank(g)?;
            Ok((r == b, format!("d(G) = {r}, brute force {b}")))
        }),
    ));
    out.push(check(
        "Frattini subgroup equals intersection of maximal subgroups",
        frattini(g).and_then(|f| {
            let m = oracle::frattini_by_maximal(g)?;
            Ok((f.members() == m, format!("|Φ(G)| = {}", f.order())))
        }),
    ));
    if !semi {
        out.push(skip("decomposition checks", "group is not semiabelian"));
        return out;
    }
    let chain = engine.decomposition_chain(cfg.ordering);
    out.push(check(
        "decomposition chain validates",
        chain
            .as_ref()
            .map(|c| (true, format!("{} steps", c.len())))
            .map_err(Clone::clone),
    ));
    if let Ok(chain) = &chain {
        for d in &chain.steps {
            let n = d.parent.order();
            out.push(check(
                &format!("cap condition at order {n}"),
                verify_cap_condition(d).map(|b| (b, format!("|A∩H| = {}", d.a.intersection_order(&d.h)))),
            ));
            out.push(check(
                &format!("rank additivity at order {n}"),
                semiabelian::engine::rank_additivity(d).map(|(dg, da, dh)| {
                    (dg == da + dh, format!("d(G) = {dg}, d(Ā) = {da}, d(H) = {dh}"))
                }),
            ));
        }
    }
    if !g.is_trivial() {
        out.push(check(
            "semidirect epimorphism is rank preserving",
            engine
                .minimal_decomposition(cfg.ordering)
                .and_then(|d| semidirect_epi(&d, &cfg.verify))
                .and_then(|s| {
                    let ok = is_rank_preserving(&s.epi)?;
                    Ok((ok, format!("|A⋊H| = {}, {}", s.product.order(), s.epi.policy())))
                }),
        ));
    }
    out.push(check(
        "rank-graded chain",
        engine.rank_graded_chain(cfg.ordering).and_then(|ch| {
            let mut ok = ch.len() == rank(g)?;
            for (i, s) in ch.iter().enumerate() {
                ok &= rank_of(s)? == i + 1 && engine.is_semiabelian_subgroup(s)?;
            }
            Ok((ok, format!("{} subgroups", ch.len())))
        }),
    ));
    for kind in [TowerKind::Semidirect, TowerKind::Wreath] {
        let t = match kind {
            TowerKind::Semidirect => semidirect_tower(g, &cfg.tower()),
            TowerKind::Wreath => wreath_tower(g, &cfg.tower()),
        };
        out.push(check(
            &format!("{kind} tower"),
            t.map(|t| {
                let ok = t.epi.is_surjective()
                    && t.rank_preserving
                    && (kind == TowerKind::Semidirect || t.rank_sum == t.target_rank);
                (
                    ok,
                    format!("order {}, {}", t.tower.order(), t.verify_policy()),
                )
            }),
        ));
    }
    out
}

fn census(cfg: &RunConfig) -> Vec<CensusRow> {
    CATALOG
        .iter()
        .map(|text| {
            let row = |order, rank, semi, len, error| CensusRow {
                group: text.to_string(),
                order,
                rank,
                semiabelian: semi,
                chain_length: len,
                error,
            };
            let g = match parse_group_expr(text)
                .map_err(CliError::from)
                .and_then(|a| Ok(eval_bounded(&a, cfg.max_order)?))
            {
                Ok(g) => g,
                Err(e) => return row(0, None, None, None, Some(e.to_string())),
            };
            let r = rank(&g).ok();
            match engine_for(&g) {
                Ok(engine) => {
                    let semi = engine.is_semiabelian();
                    let len = semi
                        .then(|| engine.decomposition_chain(cfg.ordering).ok().map(|c| c.len()))
                        .flatten();
                    row(g.order(), r, Some(semi), len, None)
                }
                Err(e) => row(g.order(), r, None, None, Some(e.to_string())),
            }
        })
        .collect()
}

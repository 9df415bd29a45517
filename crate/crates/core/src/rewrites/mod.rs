//! Degree-preserving edge swaps on the chord graph. Each rule matches a
//! local configuration, swaps edges, and lays the result back out on the
//! rim. A swap that lands in a different isomorphism class witnesses that
//! the sequence is not unigraphic.

mod fixtures;
mod layout;
mod rules;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::apex::ChordDiagram;
use crate::error::{Error, Result};
use crate::graph::DegreeSequence;
use crate::oracle::enumerate_realizations;

pub use layout::layout;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RewriteRule {
    AcyclicBlockMerge,
    CaterpillarAbsorb,
    PendantRotate,
    HexagonDiagonalFlip,
    RegionBoundaryMove,
    PentagonCaseMove,
    SpineDetach,
    PathTriangleSwap,
    PendantBulkTransfer,
    CornerSwap,
    TrianglePairSwap,
    Degree2Swap,
}

impl RewriteRule {
    pub const ALL: [RewriteRule; 12] = [
        RewriteRule::AcyclicBlockMerge,
        RewriteRule::CaterpillarAbsorb,
        RewriteRule::PendantRotate,
        RewriteRule::HexagonDiagonalFlip,
        RewriteRule::RegionBoundaryMove,
        RewriteRule::PentagonCaseMove,
        RewriteRule::SpineDetach,
        RewriteRule::PathTriangleSwap,
        RewriteRule::PendantBulkTransfer,
        RewriteRule::CornerSwap,
        RewriteRule::TrianglePairSwap,
        RewriteRule::Degree2Swap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RewriteRule::AcyclicBlockMerge => "acyclic_block_merge",
            RewriteRule::CaterpillarAbsorb => "caterpillar_absorb",
            RewriteRule::PendantRotate => "pendant_rotate",
            RewriteRule::HexagonDiagonalFlip => "hexagon_diagonal_flip",
            RewriteRule::RegionBoundaryMove => "region_boundary_move",
            RewriteRule::PentagonCaseMove => "pentagon_case_move",
            RewriteRule::SpineDetach => "spine_detach",
            RewriteRule::PathTriangleSwap => "path_triangle_swap",
            RewriteRule::PendantBulkTransfer => "pendant_bulk_transfer",
            RewriteRule::CornerSwap => "corner_swap",
            RewriteRule::TrianglePairSwap => "triangle_pair_swap",
            RewriteRule::Degree2Swap => "degree2_swap",
        }
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RewriteRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RewriteRule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Diagram(format!("unknown rewrite rule {s:?}")))
    }
}

/// Every diagram reachable from `cd` by one application of `rule`, sorted
/// and deduplicated. All results share the chord-degree sequence of `cd`.
pub fn apply_rule(cd: &ChordDiagram, rule: RewriteRule) -> Vec<ChordDiagram> {
    let ctx = rules::Ctx::new(cd.chord_graph());
    let out: BTreeSet<ChordDiagram> = rules::matches(&ctx, rule)
        .into_iter()
        .filter_map(|g| layout(&g, cd.rim()))
        .collect();
    debug_assert!(out.iter().all(|r| r.chord_degree_sequence() == cd.chord_degree_sequence()));
    out.into_iter().collect()
}

/// Two non-isomorphic realisations of one sequence.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub sequence: DegreeSequence,
    /// A rule name, or `oracle_pair` when no rule chain was found.
    pub rule: String,
    pub before: ChordDiagram,
    pub after: ChordDiagram,
}

/// One step of the witness search.
#[derive(Clone, Copy)]
enum Move {
    Rule(RewriteRule),
    TwoSwitch,
}

impl Move {
    fn name(self) -> &'static str {
        match self {
            Move::Rule(rule) => rule.name(),
            Move::TwoSwitch => "two_switch",
        }
    }

    fn apply(self, cd: &ChordDiagram) -> Vec<ChordDiagram> {
        match self {
            Move::Rule(rule) => apply_rule(cd, rule),
            Move::TwoSwitch => {
                let out: BTreeSet<ChordDiagram> = rules::two_switches(&cd.chord_graph())
                    .into_iter()
                    .filter_map(|g| layout(&g, cd.rim()))
                    .collect();
                out.into_iter().collect()
            }
        }
    }
}

/// Breadth-first search over move chains of length at most `depth` from the
/// first realisations the oracle finds. Returns the first step that changes
/// the polytope's isomorphism class.
fn search(s: &DegreeSequence, depth: usize, moves: &[Move]) -> Option<Witness> {
    let report = enumerate_realizations(s, Some(2));
    for root in &report.representatives {
        let class = root.to_polytope().canonical_form();
        let mut seen = BTreeSet::from([root.clone()]);
        let mut queue = VecDeque::from([(root.clone(), 0)]);
        while let Some((cd, level)) = queue.pop_front() {
            if level == depth {
                continue;
            }
            for &m in moves {
                for next in m.apply(&cd) {
                    if next.to_polytope().canonical_form() != class {
                        return Some(Witness {
                            sequence: s.clone(),
                            rule: m.name().to_string(),
                            before: cd,
                            after: next,
                        });
                    }
                    if seen.insert(next.clone()) {
                        queue.push_back((next, level + 1));
                    }
                }
            }
        }
    }
    None
}

/// A witness reached by named rules alone.
pub fn find_rule_witness(s: &DegreeSequence, depth: usize) -> Option<Witness> {
    search(s, depth, &RewriteRule::ALL.map(Move::Rule))
}

/// Named rules first, then generic 2-switches on the chord graph, then the
/// first two oracle classes (`oracle_pair`). `None` exactly when the
/// sequence has at most one realisation.
pub fn find_witness(s: &DegreeSequence, depth: usize) -> Option<Witness> {
    find_rule_witness(s, depth)
        .or_else(|| search(s, depth, &[Move::TwoSwitch]))
        .or_else(|| {
            let report = enumerate_realizations(s, Some(2));
            match &report.representatives[..] {
                [before, after, ..] => Some(Witness {
                    sequence: s.clone(),
                    rule: "oracle_pair".to_string(),
                    before: before.clone(),
                    after: after.clone(),
                }),
                _ => None,
            }
        })
}

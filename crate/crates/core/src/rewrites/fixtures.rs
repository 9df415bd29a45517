use crate::apex::ChordDiagram;
use crate::graph::PolytopeGraph;

use super::{layout, RewriteRule};

/// Rim twice the graph order plus `spare`, enough room for any outerplanar `G`.
fn fixture(n: usize, edges: &[(usize, usize)], spare: usize) -> ChordDiagram {
    let g = PolytopeGraph::from_edges(n, edges.iter().copied()).unwrap();
    layout(&g, 2 * n + spare).expect("fixture is a chord graph")
}

/// `v` with pendant leaves numbered from `next`.
fn pendants(edges: &mut Vec<(usize, usize)>, next: &mut usize, v: usize, count: usize) {
    for _ in 0..count {
        edges.push((v, *next));
        *next += 1;
    }
}

impl RewriteRule {
    /// A small diagram in the configuration the rule was written for. At
    /// least one application changes the polytope's isomorphism class.
    pub fn fixture(self) -> ChordDiagram {
        let mut e: Vec<(usize, usize)>;
        let mut next;
        match self {
            RewriteRule::AcyclicBlockMerge => {
                // C4 beside a triangle carrying a pendant.
                fixture(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 4), (4, 7)], 3)
            }
            RewriteRule::CaterpillarAbsorb => {
                fixture(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (4, 6), (4, 7)], 3)
            }
            RewriteRule::PendantRotate => {
                e = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
                next = 4;
                for v in 0..4 {
                    pendants(&mut e, &mut next, v, 1);
                }
                fixture(next, &e, 3)
            }
            RewriteRule::HexagonDiagonalFlip => {
                e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3), (0, 4)];
                next = 6;
                for v in 0..6 {
                    pendants(&mut e, &mut next, v, 1);
                }
                fixture(next, &e, 3)
            }
            RewriteRule::RegionBoundaryMove => {
                e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)];
                next = 6;
                for v in 0..6 {
                    pendants(&mut e, &mut next, v, 1);
                }
                fixture(next, &e, 3)
            }
            RewriteRule::PentagonCaseMove => {
                e = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 3)];
                next = 5;
                for v in 0..5 {
                    pendants(&mut e, &mut next, v, 1);
                }
                fixture(next, &e, 3)
            }
            RewriteRule::SpineDetach => {
                // Square 0..3, bridge 3-4, spine vertex 4 with two leaves.
                fixture(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (4, 6)], 3)
            }
            RewriteRule::PathTriangleSwap => {
                fixture(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 7)], 3)
            }
            RewriteRule::PendantBulkTransfer => {
                // Triangle 0,1,2 and square 0,3,4,5 share 0; K2 1-6 with
                // leaves 7, 8 on 6; leaf 9 on 4.
                fixture(
                    10,
                    &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0), (1, 6), (6, 7), (6, 8), (4, 9)],
                    3,
                )
            }
            RewriteRule::CornerSwap => {
                // Diamond 0,1,3,2 with diagonal 1-2 hangs at 0; triangle
                // 0,4,5; bridge 5-6; leaves 7, 8 on 6.
                fixture(
                    9,
                    &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 0), (5, 6), (6, 7), (6, 8)],
                    3,
                )
            }
            RewriteRule::TrianglePairSwap => {
                e = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 6), (6, 3)];
                next = 7;
                for v in [1, 2, 4, 5] {
                    pendants(&mut e, &mut next, v, 1);
                }
                fixture(next, &e, 3)
            }
            RewriteRule::Degree2Swap => {
                fixture(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (4, 6)], 3)
            }
        }
    }
}

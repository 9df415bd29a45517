//! Structure of the chord graph `G`: isolated vertices `Z`, leaves `Y`, the
//! residual `B = G - Z - Y`, blocks of `G` and of `B`, cyclic components,
//! caterpillars, and the block-size bounds on `a`.

use serde::{Deserialize, Serialize};

use crate::graph::{articulation_points, biconnected_blocks, bits, PolytopeGraph};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    /// Anything other than a single edge.
    pub cyclic: bool,
    /// Vertices of the block that are cut vertices of the ambient graph.
    pub separating: Vec<usize>,
    /// Exactly one separating vertex.
    pub endblock: bool,
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }
}

fn blocks_of(g: &PolytopeGraph) -> (Vec<Block>, Vec<usize>) {
    let cut = articulation_points(g);
    let cut_mask = cut.iter().fold(0u64, |m, &v| m | 1 << v);
    let blocks = biconnected_blocks(g)
        .into_iter()
        .map(|edges| {
            let mask = edges.iter().fold(0u64, |m, &(u, v)| m | 1 << u | 1 << v);
            let separating: Vec<usize> = bits(mask & cut_mask).collect();
            Block {
                vertices: bits(mask).collect(),
                cyclic: edges.len() > 1,
                endblock: separating.len() == 1,
                separating,
                edges,
            }
        })
        .collect();
    (blocks, cut)
}

/// The `(Z, Y, B)` split of a chord graph. Vertex labels are those of `G`
/// throughout; `b_edges` are the edges of `G` with both ends in `B`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Decomposition {
    pub z_set: Vec<usize>,
    pub y_set: Vec<usize>,
    pub b_vertices: Vec<usize>,
    pub b_edges: Vec<(usize, usize)>,
    pub blocks: Vec<Block>,
    pub b_blocks: Vec<Block>,
    pub separating_in_g: Vec<usize>,
    pub separating_in_b: Vec<usize>,
    /// Connected components of `G` containing a cycle.
    pub cyclic_component_count: usize,
}

pub fn decompose(g: &PolytopeGraph) -> Decomposition {
    let n = g.vertex_count();
    let z_set: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    let y_set: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    let b_vertices: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 2).collect();
    let b_mask = b_vertices.iter().fold(0u64, |m, &v| m | 1 << v);
    let b_edges: Vec<(usize, usize)> = g
        .edges()
        .filter(|&(u, v)| b_mask >> u & 1 == 1 && b_mask >> v & 1 == 1)
        .collect();
    let b_on_g = PolytopeGraph::from_edges(n, b_edges.iter().copied()).expect("subgraph of G");
    let (blocks, separating_in_g) = blocks_of(g);
    let (b_blocks, separating_in_b) = blocks_of(&b_on_g);
    Decomposition {
        z_set,
        y_set,
        b_vertices,
        b_edges,
        blocks,
        b_blocks,
        separating_in_g,
        separating_in_b,
        cyclic_component_count: count_cyclic_components(g),
    }
}

impl Decomposition {
    /// `B` relabelled onto `0..|B|` in the order of `b_vertices`.
    pub fn b_graph(&self) -> PolytopeGraph {
        let mut index = vec![usize::MAX; 64];
        for (i, &v) in self.b_vertices.iter().enumerate() {
            index[v] = i;
        }
        PolytopeGraph::from_edges(
            self.b_vertices.len(),
            self.b_edges.iter().map(|&(u, v)| (index[u], index[v])),
        )
        .expect("subgraph of G")
    }

    pub fn cyclic_blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.cyclic)
    }

    /// Whether `B` is 2-connected: a single block spanning all of `B`.
    pub fn b_is_two_connected(&self) -> bool {
        self.b_blocks.len() == 1 && self.b_blocks[0].order() == self.b_vertices.len()
    }
}

/// Components of `g` with at least as many edges as vertices.
pub fn count_cyclic_components(g: &PolytopeGraph) -> usize {
    g.connected_components()
        .iter()
        .filter(|comp| {
            let mask = comp.iter().fold(0u64, |m, &v| m | 1 << v);
            let twice_edges: usize = comp.iter().map(|&v| (g.neighbor_mask(v) & mask).count_ones() as usize).sum();
            twice_edges / 2 >= comp.len()
        })
        .count()
}

/// Caterpillar `C(x_1, ..., x_l)` by the degrees of its spine.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Caterpillar {
    pub spine_degrees: Vec<usize>,
}

impl Caterpillar {
    pub fn spine_length(&self) -> usize {
        self.spine_degrees.len()
    }
}

/// Spine degrees of `g` if it is a caterpillar, read in the orientation
/// giving the lexicographically least list. The spine is the set of
/// non-leaf vertices, or one end of `K2`. `K1` and non-trees give `None`.
pub fn recognize_caterpillar(g: &PolytopeGraph) -> Option<Caterpillar> {
    let n = g.vertex_count();
    if n < 2 || !g.is_connected() || g.edge_count() != n - 1 {
        return None;
    }
    if n == 2 {
        return Some(Caterpillar { spine_degrees: vec![1] });
    }
    let spine_mask = (0..n).filter(|&v| g.degree(v) >= 2).fold(0u64, |m, v| m | 1 << v);
    let spine_degree = |v: usize| (g.neighbor_mask(v) & spine_mask).count_ones();
    if bits(spine_mask).any(|v| spine_degree(v) > 2) {
        return None;
    }
    let start = bits(spine_mask).find(|&v| spine_degree(v) <= 1).expect("spine of a tree is a path");
    let mut order = vec![start];
    let mut seen = 1u64 << start;
    while let Some(next) = bits(g.neighbor_mask(*order.last().unwrap()) & spine_mask & !seen).next() {
        seen |= 1 << next;
        order.push(next);
    }
    let forward: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();
    Some(Caterpillar {
        spine_degrees: forward.min(backward),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Bound {
    pub lhs: usize,
    pub rhs: usize,
    /// `lhs >= rhs` for lower bounds on `a`, `lhs <= rhs` for the order
    /// bound; always recorded, applicable or not.
    pub holds: bool,
}

/// Both sides of the bounds relating `a`, `p` and the cyclic blocks of `G`.
/// `eq5`/`eq6` are only asserted in the configuration where they are
/// derived: one cyclic component, `B` not 2-connected, each cyclic block
/// with exactly one vertex separating in `G`, and some cyclic block on four
/// or more vertices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub a: usize,
    pub p: usize,
    /// Number of cyclic blocks of `G`.
    pub k: usize,
    /// `a >= 2 + sum(|V(B_j)| - 2)` over cyclic blocks.
    pub eq4: Bound,
    /// `p <= 2a + 2 + k`.
    pub eq5: Bound,
    /// `a >= 3 + k`.
    pub eq6: Bound,
    pub eq5_eq6_applicable: bool,
}

impl BoundReport {
    /// No applicable bound is violated.
    pub fn holds(&self) -> bool {
        self.eq4.holds && (!self.eq5_eq6_applicable || (self.eq5.holds && self.eq6.holds))
    }
}

/// `p` is taken as `|V(G)| + 1`.
pub fn check_block_bound(d: &Decomposition, a: usize) -> BoundReport {
    let p = d.z_set.len() + d.y_set.len() + d.b_vertices.len() + 1;
    let cyclic: Vec<&Block> = d.cyclic_blocks().collect();
    let k = cyclic.len();
    let eq4_rhs = 2 + cyclic.iter().map(|b| b.order() - 2).sum::<usize>();
    let applicable = d.cyclic_component_count == 1
        && !d.b_is_two_connected()
        && cyclic.iter().all(|b| b.separating.len() == 1)
        && cyclic.iter().any(|b| b.order() >= 4);
    BoundReport {
        a,
        p,
        k,
        eq4: Bound {
            lhs: a,
            rhs: eq4_rhs,
            holds: a >= eq4_rhs,
        },
        eq5: Bound {
            lhs: p,
            rhs: 2 * a + 2 + k,
            holds: p <= 2 * a + 2 + k,
        },
        eq6: Bound {
            lhs: a,
            rhs: 3 + k,
            holds: a >= 3 + k,
        },
        eq5_eq6_applicable: applicable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangles(k: usize, isolated: usize) -> PolytopeGraph {
        let edges = (0..k).flat_map(|t| {
            let b = 3 * t;
            [(b, b + 1), (b + 1, b + 2), (b, b + 2)]
        });
        PolytopeGraph::from_edges(3 * k + isolated, edges).unwrap()
    }

    #[test]
    fn three_triangles_and_five_isolated() {
        let g = triangles(3, 5);
        let d = decompose(&g);
        assert_eq!(d.z_set, vec![9, 10, 11, 12, 13]);
        assert!(d.y_set.is_empty());
        assert_eq!(d.b_vertices.len(), 9);
        assert_eq!(d.cyclic_component_count, 3);
        assert!(d.blocks.iter().all(|b| b.cyclic && b.order() == 3 && b.separating.is_empty()));
        assert_eq!(g.connected_components().iter().filter(|c| c.len() == 3).count(), 3);
        let r = check_block_bound(&d, 5);
        assert_eq!((r.eq4.lhs, r.eq4.rhs), (5, 5));
        assert!(r.eq4.holds);
    }

    #[test]
    fn cycle_and_star() {
        let d = decompose(&PolytopeGraph::cycle(6).unwrap());
        assert!(d.z_set.is_empty() && d.y_set.is_empty());
        assert_eq!(d.blocks.len(), 1);
        assert!(d.blocks[0].cyclic);
        assert!(d.b_is_two_connected());
        assert_eq!(d.cyclic_component_count, 1);

        let star = PolytopeGraph::complete_bipartite(1, 3).unwrap();
        let d = decompose(&star);
        assert!(d.z_set.is_empty());
        assert_eq!(d.y_set, vec![1, 2, 3]);
        assert_eq!(d.b_vertices, vec![0]);
        assert_eq!(d.b_graph().edge_count(), 0);
        assert_eq!(d.cyclic_component_count, 0);
    }

    #[test]
    fn endblocks_of_a_bowtie_with_tail() {
        // Triangles 0-1-2 and 2-3-4, path 4-5-6.
        let g = PolytopeGraph::from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6)]).unwrap();
        let d = decompose(&g);
        assert_eq!(d.separating_in_g, vec![2, 4, 5]);
        assert_eq!(d.y_set, vec![6]);
        assert_eq!(d.separating_in_b, vec![2, 4]);
        let ends: Vec<&Vec<usize>> = d.blocks.iter().filter(|b| b.endblock).map(|b| &b.vertices).collect();
        assert_eq!(ends, vec![&vec![0, 1, 2], &vec![5, 6]]);
        let b_ends = d.b_blocks.iter().filter(|b| b.endblock).count();
        assert_eq!(b_ends, 2);
    }

    #[test]
    fn block_bound_examples() {
        let d = decompose(&triangles(1, 3));
        let r = check_block_bound(&d, 3);
        assert_eq!((r.eq4.lhs, r.eq4.rhs, r.eq4.holds), (3, 3, true));
        let d = decompose(&PolytopeGraph::cycle(7).unwrap().disjoint_union(&PolytopeGraph::empty(3).unwrap()).unwrap());
        let r = check_block_bound(&d, 3);
        assert_eq!((r.eq4.rhs, r.eq4.holds), (7, false));
        assert!(!r.holds());
    }

    #[test]
    fn cyclic_component_counts() {
        assert_eq!(count_cyclic_components(&triangles(3, 0)), 3);
        assert_eq!(count_cyclic_components(&PolytopeGraph::path(5).unwrap()), 0);
        let g = PolytopeGraph::cycle(4)
            .unwrap()
            .disjoint_union(&PolytopeGraph::cycle(3).unwrap())
            .unwrap()
            .disjoint_union(&PolytopeGraph::path(2).unwrap())
            .unwrap();
        assert_eq!(count_cyclic_components(&g), 2);
    }

    #[test]
    fn caterpillars() {
        let c = |g: PolytopeGraph| recognize_caterpillar(&g).map(|c| c.spine_degrees);
        assert_eq!(c(PolytopeGraph::path(5).unwrap()), Some(vec![2, 2, 2]));
        assert_eq!(c(PolytopeGraph::complete_bipartite(1, 4).unwrap()), Some(vec![4]));
        assert_eq!(c(PolytopeGraph::path(2).unwrap()), Some(vec![1]));
        assert_eq!(c(PolytopeGraph::empty(1).unwrap()), None);
        assert_eq!(c(PolytopeGraph::cycle(4).unwrap()), None);
        let spider = PolytopeGraph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(c(spider), None);
        // Spine 0-1-2 with degrees 3, 2, 4: least orientation is 3,2,4.
        let g = PolytopeGraph::from_edges(8, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6), (2, 7)]).unwrap();
        assert_eq!(c(g), Some(vec![3, 2, 4]));
    }

    #[test]
    fn json_schema() {
        let d = decompose(&triangles(1, 1));
        let v: serde_json::Value = serde_json::to_value(&d).unwrap();
        assert_eq!(v["z_set"], serde_json::json!([3]));
        assert_eq!(v["blocks"][0]["vertices"], serde_json::json!([0, 1, 2]));
        assert_eq!(serde_json::from_value::<Decomposition>(v).unwrap(), d);
    }
}

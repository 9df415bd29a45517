use std::collections::HashMap;

use crate::apex::ChordDiagram;
use crate::graph::{biconnected_blocks, bits, full_mask, PolytopeGraph, MAX_VERTICES};

/// Place the vertices of `g`, padded with isolated vertices up to `rim`,
/// around a polygon so that every edge becomes a chord: no two edges cross
/// and no edge joins rim-adjacent positions. Returns the dihedrally
/// canonical diagram, or `None` if no placement exists.
///
/// Only the non-isolated vertices are ordered. Isolated vertices are spent
/// as separators between rim-consecutive neighbours, and the rest go last.
pub fn layout(g: &PolytopeGraph, rim: usize) -> Option<ChordDiagram> {
    let m = g.vertex_count();
    if m > rim || !(3..MAX_VERTICES).contains(&rim) {
        return None;
    }
    // Outerplanar blocks have at most 2|V| - 3 edges.
    for block in biconnected_blocks(g) {
        let vertices = block.iter().fold(0u64, |acc, &(u, v)| acc | 1 << u | 1 << v);
        if block.len() + 3 > 2 * vertices.count_ones() as usize {
            return None;
        }
    }
    let core: Vec<usize> = (0..m).filter(|&v| g.degree(v) > 0).collect();
    if core.is_empty() {
        return ChordDiagram::polygon(rim).ok();
    }
    let sub = g.induced_subgraph(&core);
    let first = (0..core.len()).max_by_key(|&v| (sub.degree(v), std::cmp::Reverse(v)))?;
    let mut state = Placement {
        adj: sub.adjacency().to_vec(),
        n: core.len(),
        order: vec![first],
        separated: vec![false],
        placed: 1 << first,
        visible: vec![first],
        dead: HashMap::new(),
    };
    if !state.extend(rim - core.len()) {
        return None;
    }
    let mut position = vec![usize::MAX; m];
    let mut next = 0;
    for (&v, &gap) in state.order.iter().zip(&state.separated) {
        next += usize::from(gap);
        position[core[v]] = next;
        next += 1;
    }
    let chords = g.edges().map(|(u, v)| (position[u], position[v]));
    Some(ChordDiagram::new(rim, chords).expect("placement avoids crossings").dihedral_canonical())
}

struct Placement {
    adj: Vec<u64>,
    n: usize,
    order: Vec<usize>,
    /// Whether an isolated vertex sits just before each placed vertex.
    separated: Vec<bool>,
    placed: u64,
    /// Placed vertices not enclosed by any chord, in position order.
    visible: Vec<usize>,
    /// Largest separator budget known to fail from each state.
    dead: HashMap<(u64, usize, Vec<usize>), usize>,
}

impl Placement {
    fn extend(&mut self, budget: usize) -> bool {
        let k = self.order.len();
        let prev = self.order[k - 1];
        if k == self.n {
            let wrap = usize::from(self.n > 1 && self.adj[prev] >> self.order[0] & 1 == 1);
            return wrap <= budget;
        }
        let key = (self.placed, prev, self.visible.clone());
        if self.dead.get(&key).is_some_and(|&b| budget <= b) {
            return false;
        }
        let unplaced = full_mask(self.n) & !self.placed;
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(unplaced) {
            // Swapping two unplaced twins maps placements to placements.
            if tried.iter().any(|&u| self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)) {
                continue;
            }
            tried.push(v);
            let gap = self.adj[v] >> prev & 1 == 1;
            if gap && budget == 0 {
                continue;
            }
            let back = self.adj[v] & self.placed;
            let cut = if back == 0 {
                self.visible.len()
            } else {
                let Some(first) = self.visible.iter().position(|&x| back >> x & 1 == 1) else {
                    continue;
                };
                let visible_back = self.visible[first..].iter().fold(0u64, |acc, &x| acc | 1 << x);
                if back & !visible_back != 0 {
                    continue;
                }
                let open = self.visible[first + 1..]
                    .iter()
                    .any(|&x| self.adj[x] & unplaced & !(1 << v) != 0);
                if open {
                    continue;
                }
                first + 1
            };
            let saved: Vec<usize> = self.visible.drain(cut..).collect();
            self.visible.push(v);
            self.order.push(v);
            self.separated.push(gap);
            self.placed |= 1 << v;
            if self.extend(budget - usize::from(gap)) {
                return true;
            }
            self.placed &= !(1 << v);
            self.separated.pop();
            self.order.pop();
            self.visible.pop();
            self.visible.extend(saved);
        }
        let worst = self.dead.entry(key).or_insert(0);
        *worst = (*worst).max(budget);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_on_rim_nine() {
        let cd = layout(&PolytopeGraph::cycle(3).unwrap(), 9).unwrap();
        assert_eq!(cd.rim(), 9);
        assert_eq!(cd.chord_degree_sequence().zeros(), 6);
        assert!(cd.chord_graph().is_isomorphic(
            &PolytopeGraph::cycle(3).unwrap().disjoint_union(&PolytopeGraph::empty(6).unwrap()).unwrap()
        ));
    }

    #[test]
    fn k4_and_k23_have_no_layout() {
        for rim in 4..10 {
            assert!(layout(&PolytopeGraph::complete(4).unwrap(), rim).is_none());
            assert!(layout(&PolytopeGraph::complete_bipartite(2, 3).unwrap(), rim).is_none());
        }
    }

    #[test]
    fn three_triangles_on_rim_fourteen() {
        let g = (0..3).fold(PolytopeGraph::empty(0).unwrap(), |acc, _| {
            acc.disjoint_union(&PolytopeGraph::cycle(3).unwrap()).unwrap()
        });
        let cd = layout(&g, 14).unwrap();
        let exc: ChordDiagram = "14: 0-6,0-12,6-12,1-3,1-5,3-5,7-9,7-11,9-11".parse().unwrap();
        assert_eq!(cd.to_polytope().canonical_form(), exc.to_polytope().canonical_form());
        // Nine chord vertices need more than nine rim positions.
        assert!(layout(&g, 9).is_none());
    }

    #[test]
    fn star_needs_a_free_rim_vertex() {
        let star = PolytopeGraph::complete_bipartite(1, 4).unwrap();
        assert!(layout(&star, 6).is_none());
        assert!(layout(&star, 7).is_some());
    }

    #[test]
    fn every_small_diagram_relays_out() {
        for n in 3..=8 {
            for cd in crate::apex::canonical_diagrams(n) {
                let again = layout(&cd.chord_graph(), n).expect("chord graphs have layouts");
                assert!(again.chord_graph().is_isomorphic(&cd.chord_graph()), "{cd}");
            }
        }
    }

    #[test]
    fn agrees_with_exhaustive_diagrams() {
        use std::collections::HashSet;
        for rim in 5..=8 {
            let drawable: HashSet<_> = crate::apex::all_diagrams(rim)
                .iter()
                .map(|cd| cd.chord_graph().canonical_form())
                .collect();
            let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
                let g = PolytopeGraph::from_edges(5, edges).unwrap();
                let padded = g.disjoint_union(&PolytopeGraph::empty(rim - 5).unwrap()).unwrap();
                let expected = drawable.contains(&padded.canonical_form());
                let got = layout(&g, rim);
                assert_eq!(got.is_some(), expected, "rim {rim}, {}", g.to_graph6());
                if let Some(cd) = got {
                    assert!(cd.chord_graph().is_isomorphic(&padded));
                }
            }
        }
    }
}

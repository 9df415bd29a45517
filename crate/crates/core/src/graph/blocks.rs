use super::{bits, PolytopeGraph};

/// Blocks (maximal 2-connected subgraphs and bridges) as sorted edge lists.
/// Isolated vertices belong to no block. Blocks are ordered by their
/// sorted vertex lists.
pub fn biconnected_blocks(g: &PolytopeGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    // Iterative DFS; each frame is (vertex, parent, remaining neighbours).
    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![(root, usize::MAX, g.neighbor_mask(root))];
        while let Some(&mut (v, parent, ref mut rest)) = stack.last_mut() {
            if *rest != 0 {
                let w = rest.trailing_zeros() as usize;
                *rest &= *rest - 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, g.neighbor_mask(w)));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort_by_cached_key(|b| block_vertices(b));
    blocks
}

/// Sorted vertex set of a block given by its edges.
pub(crate) fn block_vertices(edges: &[(usize, usize)]) -> Vec<usize> {
    let mut mask = 0u64;
    for &(u, v) in edges {
        mask |= 1 << u | 1 << v;
    }
    bits(mask).collect()
}

/// Cut vertices: vertices lying in two or more blocks.
pub fn articulation_points(g: &PolytopeGraph) -> Vec<usize> {
    let mut count = vec![0usize; g.vertex_count()];
    for block in biconnected_blocks(g) {
        for v in block_vertices(&block) {
            count[v] += 1;
        }
    }
    (0..g.vertex_count()).filter(|&v| count[v] >= 2).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bowtie_with_pendant() {
        // Two triangles sharing vertex 2, plus pendant 5 on vertex 4.
        let g = PolytopeGraph::from_edges(
            6,
            [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)],
        )
        .unwrap();
        let blocks = biconnected_blocks(&g);
        assert_eq!(blocks.len(), 3);
        assert_eq!(block_vertices(&blocks[0]), vec![0, 1, 2]);
        assert_eq!(block_vertices(&blocks[1]), vec![2, 3, 4]);
        assert_eq!(blocks[2], vec![(4, 5)]);
        assert_eq!(articulation_points(&g), vec![2, 4]);
    }

    #[test]
    fn cycle_is_one_block_and_path_is_bridges() {
        let c = PolytopeGraph::cycle(6).unwrap();
        assert_eq!(biconnected_blocks(&c).len(), 1);
        assert!(articulation_points(&c).is_empty());
        let p = PolytopeGraph::path(5).unwrap();
        assert_eq!(biconnected_blocks(&p).len(), 4);
        assert_eq!(articulation_points(&p), vec![1, 2, 3]);
        assert!(biconnected_blocks(&PolytopeGraph::empty(3).unwrap()).is_empty());
    }
}

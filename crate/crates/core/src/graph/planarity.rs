//! Exact planarity test by path addition (Demoucron, Malgrange and
//! Pertuiset), applied block by block.

use super::blocks::{biconnected_blocks, block_vertices};
use super::{bits, PolytopeGraph};

pub(super) fn is_planar(g: &PolytopeGraph) -> bool {
    let n = g.vertex_count();
    if n <= 4 {
        return true;
    }
    if g.edge_count() > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g).iter().all(|edges| {
        let vertices = block_vertices(edges);
        let local = g.induced_subgraph(&vertices);
        block_is_planar(&local)
    })
}

/// A bridge of the embedded subgraph: its attachment vertices and the
/// vertices of its interior (empty for a single chord edge).
struct Fragment {
    attachments: u64,
    interior: u64,
    chord: Option<(usize, usize)>,
}

fn block_is_planar(g: &PolytopeGraph) -> bool {
    let n = g.vertex_count();
    let m = g.edge_count();
    if n <= 4 || m <= n {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    let cycle = find_cycle(g);
    let mut embedded_vertices = 0u64;
    let mut embedded = vec![0u64; n];
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded[u] |= 1 << v;
        embedded[v] |= 1 << u;
        embedded_vertices |= 1 << u;
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces = vec![cycle, reversed];

    loop {
        let fragments = fragments(g, &embedded, embedded_vertices);
        if fragments.is_empty() {
            return true;
        }
        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attachments & !face_masks[k] == 0)
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.expect("at least one fragment");
        let path = fragment_path(g, &fragments[fi]);
        for w in path.windows(2) {
            embedded[w[0]] |= 1 << w[1];
            embedded[w[1]] |= 1 << w[0];
        }
        for &v in &path {
            embedded_vertices |= 1 << v;
        }
        let face = faces.swap_remove(face_index);
        let (a, b) = split_face(&face, &path);
        faces.push(a);
        faces.push(b);
    }
}

/// Any cycle of a 2-connected graph with at least three vertices.
fn find_cycle(g: &PolytopeGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    depth[0] = 0;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                stack.push(w);
            } else if w != parent[v] && parent[w] != v {
                // Walk both endpoints up to their common ancestor.
                let (mut x, mut y) = (v, w);
                let mut left = vec![x];
                let mut right = vec![y];
                while depth[x] > depth[y] {
                    x = parent[x];
                    left.push(x);
                }
                while depth[y] > depth[x] {
                    y = parent[y];
                    right.push(y);
                }
                while x != y {
                    x = parent[x];
                    y = parent[y];
                    left.push(x);
                    right.push(y);
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return left;
            }
        }
    }
    unreachable!("2-connected block without a cycle")
}

fn fragments(g: &PolytopeGraph, embedded: &[u64], embedded_vertices: u64) -> Vec<Fragment> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let in_h = embedded_vertices >> u & 1 == 1 && embedded_vertices >> v & 1 == 1;
        if in_h && embedded[u] >> v & 1 == 0 {
            out.push(Fragment {
                attachments: 1 << u | 1 << v,
                interior: 0,
                chord: Some((u, v)),
            });
        }
    }
    let outside = super::full_mask(n) & !embedded_vertices;
    let mut left = outside;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let comp = g.reach(start, outside);
        left &= !comp;
        let attachments = bits(comp).fold(0u64, |m, v| m | g.neighbor_mask(v)) & embedded_vertices;
        out.push(Fragment {
            attachments,
            interior: comp,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(g: &PolytopeGraph, frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let start = frag.attachments.trailing_zeros() as usize;
    let first = (g.neighbor_mask(start) & frag.interior).trailing_zeros() as usize;
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([first]);
    prev[first] = first;
    while let Some(x) = queue.pop_front() {
        let exits = g.neighbor_mask(x) & frag.attachments & !(1 << start);
        if exits != 0 {
            let end = exits.trailing_zeros() as usize;
            let mut path = vec![end, x];
            let mut y = x;
            while prev[y] != y {
                y = prev[y];
                path.push(y);
            }
            path.push(start);
            path.reverse();
            return path;
        }
        for w in bits(g.neighbor_mask(x) & frag.interior) {
            if prev[w] == usize::MAX {
                prev[w] = x;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a 2-connected block has two attachments")
}

/// Split a face (a cyclic vertex list) along a path joining two of its
/// vertices.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (u, v) = (path[0], *path.last().unwrap());
    let len = face.len();
    let iu = face.iter().position(|&x| x == u).unwrap();
    let iv = face.iter().position(|&x| x == v).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % len;
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut first = arc(iu, iv);
    first.extend(interior.iter().rev());
    let mut second = arc(iv, iu);
    second.extend(interior.iter());
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(PolytopeGraph::complete(4).unwrap().is_planar());
        assert!(!PolytopeGraph::complete(5).unwrap().is_planar());
        assert!(!PolytopeGraph::complete_bipartite(3, 3).unwrap().is_planar());
        assert!(PolytopeGraph::complete_bipartite(2, 7).unwrap().is_planar());
    }

    #[test]
    fn petersen_is_not_planar() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = PolytopeGraph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert!(!g.is_planar());
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        // K3,3 with every edge subdivided once: 15 vertices, 18 edges.
        let mut edges = Vec::new();
        let mut next = 6;
        for a in 0..3 {
            for b in 3..6 {
                edges.push((a, next));
                edges.push((next, b));
                next += 1;
            }
        }
        let g = PolytopeGraph::from_edges(next, edges).unwrap();
        assert!(!g.is_planar());
    }

    #[test]
    fn wheels_grids_and_prisms_are_planar() {
        for n in 4..40 {
            assert!(PolytopeGraph::wheel(n).unwrap().is_planar());
        }
        let mut grid = Vec::new();
        for r in 0..7 {
            for c in 0..7 {
                let v = r * 7 + c;
                if c + 1 < 7 {
                    grid.push((v, v + 1));
                }
                if r + 1 < 7 {
                    grid.push((v, v + 7));
                }
            }
        }
        assert!(PolytopeGraph::from_edges(49, grid).unwrap().is_planar());
        let k = 20;
        let prism = (0..k)
            .map(|i| (i, (i + 1) % k))
            .chain((0..k).map(|i| (k + i, k + (i + 1) % k)))
            .chain((0..k).map(|i| (i, k + i)));
        assert!(PolytopeGraph::from_edges(2 * k, prism).unwrap().is_planar());
    }
}

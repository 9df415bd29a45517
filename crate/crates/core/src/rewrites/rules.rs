use crate::graph::PolytopeGraph;
use crate::structure::{decompose, recognize_caterpillar, Block, Decomposition};

use super::RewriteRule;

/// A chord graph together with its decomposition. Vertex labels are rim
/// positions, so sorting a block's vertices gives its boundary order.
pub(super) struct Ctx {
    g: PolytopeGraph,
    d: Decomposition,
}

impl Ctx {
    pub(super) fn new(g: PolytopeGraph) -> Self {
        let d = decompose(&g);
        Ctx { g, d }
    }

    fn n(&self) -> usize {
        self.g.vertex_count()
    }

    fn deg(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    fn leaves(&self, v: usize) -> Vec<usize> {
        self.g.neighbors(v).filter(|&y| self.deg(y) == 1).collect()
    }

    fn in_cyclic_block(&self, v: usize) -> bool {
        self.d.cyclic_blocks().any(|b| b.vertices.contains(&v))
    }

    /// Apply an edge swap. `None` if a removed edge is missing, an added
    /// edge is already present, or the degree multiset would change.
    fn edit(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Option<PolytopeGraph> {
        let mut h = self.g.clone();
        for &(u, v) in remove {
            if !h.has_edge(u, v) {
                return None;
            }
            h.remove_edge(u, v);
        }
        for &(u, v) in add {
            if u == v || h.has_edge(u, v) {
                return None;
            }
            h.add_edge(u, v).ok()?;
        }
        (h.degree_sequence() == self.g.degree_sequence()).then_some(h)
    }

    /// Components that are chordless cycles, in walk order.
    fn cycle_components(&self) -> Vec<Vec<usize>> {
        self.g
            .connected_components()
            .into_iter()
            .filter(|c| c.len() >= 3 && c.iter().all(|&v| self.deg(v) == 2))
            .map(|c| self.walk(c[0], &c))
            .collect()
    }

    /// Walk a chordless cycle through `members` starting at `start`.
    fn walk(&self, start: usize, members: &[usize]) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self
                .g
                .neighbors(cur)
                .find(|&x| x != prev && members.contains(&x))
                .expect("cycle");
            if next == start {
                return order;
            }
            order.push(next);
            prev = cur;
            cur = next;
        }
    }

    fn component_of(&self, v: usize) -> Vec<usize> {
        self.g
            .connected_components()
            .into_iter()
            .find(|c| c.contains(&v))
            .expect("every vertex lies in a component")
    }

    fn component_is_cyclic(&self, v: usize) -> bool {
        let comp = self.component_of(v);
        let twice: usize = comp.iter().map(|&u| self.deg(u)).sum();
        twice / 2 >= comp.len()
    }
}

fn cycle_edges(cycle: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..cycle.len()).map(move |i| (cycle[i], cycle[(i + 1) % cycle.len()]))
}

fn block_edges_of(block: &Block, v: usize) -> Vec<usize> {
    block
        .edges
        .iter()
        .filter_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
        .collect()
}

/// Inner faces of a 2-connected block drawn on the rim, each as a cyclic
/// vertex list.
fn faces(block: &Block) -> Vec<Vec<usize>> {
    let verts = &block.vertices;
    let m = verts.len();
    let boundary = |a: usize, b: usize| {
        let i = verts.iter().position(|&x| x == a).unwrap();
        let j = verts.iter().position(|&x| x == b).unwrap();
        (i + 1) % m == j || (j + 1) % m == i
    };
    let mut faces = vec![verts.clone()];
    for &(a, b) in block.edges.iter().filter(|&&(a, b)| !boundary(a, b)) {
        let k = faces
            .iter()
            .position(|f| f.contains(&a) && f.contains(&b))
            .expect("diagonal lies in a face");
        let f = faces.swap_remove(k);
        let i = f.iter().position(|&x| x == a).unwrap();
        let j = f.iter().position(|&x| x == b).unwrap();
        let (i, j) = (i.min(j), i.max(j));
        faces.push(f[i..=j].to_vec());
        faces.push(f[j..].iter().chain(&f[..=i]).copied().collect());
    }
    faces
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut rest| {
            rest.insert(0, items[0]);
            rest
        })
        .collect();
    out.extend(subsets(&items[1..], k));
    out
}

fn consecutive(face: &[usize], a: usize, b: usize) -> bool {
    let m = face.len();
    (0..m).any(|i| {
        let (x, y) = (face[i], face[(i + 1) % m]);
        (x, y) == (a, b) || (x, y) == (b, a)
    })
}

/// Neighbour of `v` on the boundary of `face`, other than `not`.
fn face_neighbour(face: &[usize], v: usize, not: usize) -> usize {
    let m = face.len();
    let i = face.iter().position(|&x| x == v).unwrap();
    let (l, r) = (face[(i + m - 1) % m], face[(i + 1) % m]);
    if l == not {
        r
    } else {
        l
    }
}

/// A diagonal and the two faces on either side of it.
type FacePair = ((usize, usize), Vec<usize>, Vec<usize>);

/// Pairs of adjacent faces across each diagonal of each cyclic block.
fn adjacent_faces(ctx: &Ctx) -> Vec<FacePair> {
    let mut out = Vec::new();
    for block in ctx.d.cyclic_blocks().filter(|b| b.order() >= 4) {
        let fs = faces(block);
        for &(a, b) in &block.edges {
            let sharing: Vec<&Vec<usize>> = fs.iter().filter(|f| consecutive(f, a, b)).collect();
            if let [f1, f2] = sharing[..] {
                out.push(((a, b), f1.clone(), f2.clone()));
            }
        }
    }
    out
}

/// Every 2-switch `ab, cd -> ac, bd` that keeps the graph simple.
pub(super) fn two_switches(g: &PolytopeGraph) -> Vec<PolytopeGraph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            for (x, y) in [(c, d), (d, c)] {
                if g.has_edge(a, x) || g.has_edge(b, y) {
                    continue;
                }
                let mut h = g.clone();
                h.remove_edge(a, b);
                h.remove_edge(c, d);
                h.add_edge(a, x).expect("distinct endpoints");
                h.add_edge(b, y).expect("distinct endpoints");
                out.push(h);
            }
        }
    }
    out
}

pub(super) fn matches(ctx: &Ctx, rule: RewriteRule) -> Vec<PolytopeGraph> {
    let mut out = Vec::new();
    let mut push = |h: Option<PolytopeGraph>| out.extend(h);
    let n = ctx.n();
    match rule {
        RewriteRule::AcyclicBlockMerge => {
            for cycle in ctx.cycle_components() {
                for (u1, ui) in cycle_edges(&cycle) {
                    for block in ctx.d.blocks.iter().filter(|b| !b.cyclic) {
                        let (w, w2) = block.edges[0];
                        if cycle.contains(&w) || !ctx.component_is_cyclic(w) {
                            continue;
                        }
                        for (x, y) in [(w, w2), (w2, w)] {
                            push(ctx.edit(&[(x, y), (u1, ui)], &[(x, u1), (ui, y)]));
                        }
                    }
                }
            }
        }
        RewriteRule::CaterpillarAbsorb => {
            for cycle in ctx.cycle_components() {
                for comp in ctx.g.connected_components() {
                    let sub = ctx.g.induced_subgraph(&comp);
                    if comp.len() < 2 || recognize_caterpillar(&sub).is_none() {
                        continue;
                    }
                    let spine: Vec<usize> = comp.iter().copied().filter(|&v| ctx.deg(v) >= 2).collect();
                    let ends: Vec<usize> = if spine.is_empty() {
                        comp.clone()
                    } else {
                        spine
                            .iter()
                            .copied()
                            .filter(|&c| ctx.g.neighbors(c).filter(|x| spine.contains(x)).count() <= 1)
                            .collect()
                    };
                    let (u1, ui) = (cycle[0], cycle[1]);
                    for c in ends {
                        if let Some(&y) = ctx.leaves(c).first() {
                            push(ctx.edit(&[(c, y), (u1, ui)], &[(c, u1), (ui, y)]));
                        }
                    }
                }
            }
        }
        RewriteRule::PendantRotate => {
            for block in ctx.d.cyclic_blocks() {
                if block.order() < 4 || block.edges.len() != block.order() {
                    continue;
                }
                for &b1 in &block.vertices {
                    let Some(&y) = ctx.leaves(b1).first() else { continue };
                    for b2 in block_edges_of(block, b1) {
                        let b3 = block_edges_of(block, b2).into_iter().find(|&x| x != b1).unwrap();
                        push(ctx.edit(&[(y, b1), (b2, b3)], &[(y, b2), (b1, b3)]));
                    }
                }
            }
        }
        RewriteRule::HexagonDiagonalFlip => {
            for block in ctx.d.cyclic_blocks().filter(|b| b.order() >= 6) {
                for set in subsets(&block.vertices, 6) {
                    let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
                    let inner = |v: usize| ctx.g.neighbor_mask(v) & mask;
                    let edges: u32 = set.iter().map(|&v| inner(v).count_ones()).sum::<u32>() / 2;
                    if edges != 9 {
                        continue;
                    }
                    for &j1 in &set {
                        for &j2 in set.iter().filter(|&&j2| j2 > j1 && inner(j1) >> j2 & 1 == 1) {
                            let common = inner(j1) & inner(j2);
                            if common.count_ones() != 2 {
                                continue;
                            }
                            let j3 = common.trailing_zeros() as usize;
                            let j4 = 63 - common.leading_zeros() as usize;
                            let (Some(&y3), Some(&y4)) = (ctx.leaves(j3).first(), ctx.leaves(j4).first()) else {
                                continue;
                            };
                            for (t3, t4) in [(j1, j2), (j2, j1)] {
                                push(ctx.edit(
                                    &[(j1, j2), (y3, j3), (y4, j4)],
                                    &[(j3, j4), (y3, t3), (y4, t4)],
                                ));
                            }
                        }
                    }
                }
            }
        }
        RewriteRule::RegionBoundaryMove => {
            for ((a, b), f1, f2) in adjacent_faces(ctx) {
                for (r1, r2) in [(&f1, &f2), (&f2, &f1)] {
                    if r1.len() < 4 || (r1.len() < r2.len() && r2.len() != r1.len() + 1) {
                        continue;
                    }
                    for (j1, j2) in [(a, b), (b, a)] {
                        let j3 = face_neighbour(r1, j2, j1);
                        let Some(&y) = ctx.leaves(j3).first() else { continue };
                        push(ctx.edit(&[(j1, j2), (y, j3)], &[(j1, j3), (y, j2)]));
                    }
                }
            }
        }
        RewriteRule::PentagonCaseMove => {
            for ((a, b), f1, f2) in adjacent_faces(ctx) {
                let quad = match (f1.len(), f2.len()) {
                    (4, 3) => &f1,
                    (3, 4) => &f2,
                    _ => continue,
                };
                for (j1, j4) in [(a, b), (b, a)] {
                    let j3 = face_neighbour(quad, j4, j1);
                    let Some(&y) = ctx.leaves(j1).first() else { continue };
                    push(ctx.edit(&[(j3, j4), (y, j1)], &[(j1, j3), (y, j4)]));
                }
            }
        }
        RewriteRule::SpineDetach => {
            for block in ctx.d.cyclic_blocks() {
                let seps: Vec<usize> = block.separating.clone();
                for &u in &seps {
                    let comp = ctx.component_of(u);
                    for &c1 in comp.iter().filter(|&&c| {
                        ctx.deg(c) >= 3 && !ctx.in_cyclic_block(c) && !block.vertices.contains(&c)
                    }) {
                        let Some(&y) = ctx.leaves(c1).first() else { continue };
                        for &(p, q) in &block.edges {
                            if p == u || q == u {
                                continue;
                            }
                            for (u1, u2) in [(p, q), (q, p)] {
                                push(ctx.edit(&[(y, c1), (u1, u2)], &[(c1, u1), (u2, y)]));
                            }
                        }
                    }
                }
            }
        }
        RewriteRule::PathTriangleSwap => {
            for block in ctx.d.cyclic_blocks() {
                for &u in &block.vertices {
                    for w in block_edges_of(block, u) {
                        for c1 in ctx.g.neighbors(u).filter(|&c| ctx.deg(c) == 2 && !ctx.in_cyclic_block(c)) {
                            let Some(c2) = ctx.g.neighbors(c1).find(|&x| x != u) else { continue };
                            if ctx.deg(c2) != 2 || ctx.in_cyclic_block(c2) {
                                continue;
                            }
                            let Some(c3) = ctx.g.neighbors(c2).find(|&x| x != c1) else { continue };
                            push(ctx.edit(&[(c2, c3), (w, u)], &[(c2, u), (c3, w)]));
                        }
                    }
                }
            }
        }
        RewriteRule::PendantBulkTransfer => {
            for w1 in 0..n {
                let leaves = ctx.leaves(w1);
                let others = ctx.deg(w1) - leaves.len();
                if leaves.is_empty() || others != 1 {
                    continue;
                }
                // One representative leaf per attachment vertex.
                let mut seen = Vec::new();
                for y in (0..n).filter(|&y| ctx.deg(y) == 1 && !ctx.g.has_edge(w1, y)) {
                    let t = ctx.g.neighbors(y).next().unwrap();
                    if seen.contains(&t) {
                        continue;
                    }
                    seen.push(t);
                    let remove: Vec<_> = leaves.iter().map(|&l| (w1, l)).collect();
                    let add: Vec<_> = leaves.iter().map(|&l| (y, l)).collect();
                    push(ctx.edit(&remove, &add));
                }
            }
        }
        RewriteRule::CornerSwap => {
            for block in &ctx.d.b_blocks {
                let k = block.order();
                if !block.endblock || !(4..=5).contains(&k) || block.edges.len() != 2 * k - 3 {
                    continue;
                }
                let w0 = block.separating[0];
                let [w1, w2] = block_edges_of(block, w0)[..] else { continue };
                for u in (0..n).filter(|u| !block.vertices.contains(u)) {
                    let ys = ctx.leaves(u);
                    let [y1, y2, ..] = ys[..] else { continue };
                    push(ctx.edit(
                        &[(u, y1), (u, y2), (w0, w1), (w0, w2)],
                        &[(u, w1), (u, w2), (w0, y1), (w0, y2)],
                    ));
                }
            }
        }
        RewriteRule::TrianglePairSwap => {
            let triangles: Vec<&Block> =
                ctx.d.b_blocks.iter().filter(|b| b.order() == 3 && b.endblock).collect();
            for (i, tj) in triangles.iter().enumerate() {
                for (k, tk) in triangles.iter().enumerate() {
                    if i == k {
                        continue;
                    }
                    let w0 = tj.separating[0];
                    let [w1, w2] = block_edges_of(tj, w0)[..] else { continue };
                    let (Some(&y1), Some(&y2)) = (ctx.leaves(w1).first(), ctx.leaves(w2).first()) else {
                        continue;
                    };
                    let v0 = tk.separating[0];
                    let [a, b] = block_edges_of(tk, v0)[..] else { continue };
                    for (v1, v2) in [(a, b), (b, a)] {
                        push(ctx.edit(
                            &[(w1, y1), (w2, y2), (v0, v2), (v1, v2)],
                            &[(w1, v2), (w2, v2), (v1, y1), (v0, y2)],
                        ));
                    }
                }
            }
        }
        RewriteRule::Degree2Swap => {
            for v in (0..n).filter(|&v| ctx.deg(v) >= 3) {
                let leaves = ctx.leaves(v);
                let moved = ctx.deg(v) - 2;
                if leaves.len() < moved {
                    continue;
                }
                for w in (0..n).filter(|&w| w != v && ctx.deg(w) == 2 && ctx.in_cyclic_block(w)) {
                    let remove: Vec<_> = leaves[..moved].iter().map(|&y| (v, y)).collect();
                    let add: Vec<_> = leaves[..moved].iter().map(|&y| (w, y)).collect();
                    push(ctx.edit(&remove, &add));
                }
            }
        }
    }
    out
}

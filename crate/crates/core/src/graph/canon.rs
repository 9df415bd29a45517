//! Canonical labelling by colour refinement plus exhaustive individualisation.
//!
//! The certificate is the graph6 encoding of the relabelled graph, minimised
//! over every leaf of the search tree. Swapping two twin vertices (equal
//! neighbourhoods apart from each other) is an automorphism that fixes the
//! current partition, so only one twin per target cell is branched on.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bits, graph6, PolytopeGraph};

/// Isomorphism certificate: equal certificates iff isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// The canonical representative of the isomorphism class.
    pub fn to_graph(&self) -> PolytopeGraph {
        graph6::decode(&self.0).expect("certificates are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Certificate together with a canonical order: `order[i]` is the original
/// vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &PolytopeGraph) -> (CanonicalForm, Vec<usize>) {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
    let root = if n == 0 { vec![] } else { vec![super::full_mask(n)] };
    search(adj, root, &mut best);
    let (bytes, order) = best.unwrap_or_default();
    let mut text = graph6::size_prefix(n);
    text.extend(bytes);
    (
        CanonicalForm(String::from_utf8(text).expect("graph6 is ASCII")),
        order,
    )
}

fn search(adj: &[u64], mut cells: Vec<u64>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    refine(adj, &mut cells);
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = encode(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for v in bits(cell) {
        if tried.iter().any(|&u| twins(adj, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(1 << v);
        next.push(cell & !(1 << v));
        next.extend_from_slice(&cells[target + 1..]);
        search(adj, next, best);
    }
}

#[inline]
fn twins(adj: &[u64], u: usize, v: usize) -> bool {
    adj[u] & !(1 << v) == adj[v] & !(1 << u)
}

/// Equitable refinement of an ordered partition. Each round splits every cell
/// by the vector of neighbour counts into all current cells; the split parts
/// are ordered by that vector, so the result is labelling-invariant.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    loop {
        let snapshot = cells.clone();
        let mut next = Vec::with_capacity(cells.len());
        for &cell in &snapshot {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = bits(cell)
                .map(|v| {
                    let sig = snapshot.iter().map(|&c| (adj[v] & c).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut part = 0u64;
            for i in 0..keyed.len() {
                part |= 1 << keyed[i].1;
                if i + 1 == keyed.len() || keyed[i + 1].0 != keyed[i].0 {
                    next.push(part);
                    part = 0;
                }
            }
        }
        let done = next.len() == snapshot.len();
        *cells = next;
        if done {
            return;
        }
    }
}

/// graph6 body bytes of the graph relabelled by `order`.
fn encode(adj: &[u64], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity((n * n.saturating_sub(1) / 2).div_ceil(6));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = adj[order[j]];
        for &oi in &order[..j] {
            acc = acc << 1 | (row >> oi & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

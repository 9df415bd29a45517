#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use unigraph::{CanonicalForm, DegreeSequence, PolytopeGraph};

/// Radius-one 3-polytopes on `p` vertices straight from the definition:
/// every graph on `p - 1` vertices, joined to a universal vertex, kept when
/// planar and 3-connected. Classes grouped by degree sequence.
pub fn naive_classes(p: usize) -> BTreeMap<DegreeSequence, BTreeSet<CanonicalForm>> {
    let m = p - 1;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let mut out: BTreeMap<DegreeSequence, BTreeSet<CanonicalForm>> = BTreeMap::new();
    for mask in 0u64..1 << pairs.len() {
        let mut deg = vec![0usize; m];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg.iter().any(|&d| d < 2) {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .chain((0..m).map(|v| (v, m)));
        let g = PolytopeGraph::from_edges(p, edges).unwrap();
        if g.is_planar() && g.is_k_connected(3) {
            out.entry(g.degree_sequence()).or_default().insert(g.canonical_form());
        }
    }
    out
}

/// Number of isomorphism classes among all graphs on `n` vertices, and
/// among the planar ones.
pub fn graph_class_counts(n: usize) -> (usize, usize) {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut all = BTreeSet::new();
    let mut planar = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = PolytopeGraph::from_edges(n, edges).unwrap();
        let c = g.canonical_form();
        if !all.contains(&c) {
            if g.is_planar() {
                planar.insert(c.clone());
            }
            all.insert(c);
        }
    }
    (all.len(), planar.len())
}

use unigraph::structure::check_block_bound;
use unigraph::{decompose, ChordDiagram, FamilySpec, FamilyTag};

fn components(g: &PolytopeGraph) -> Vec<(usize, usize)> {
    g.connected_components()
        .iter()
        .map(|c| {
            let twice: usize = c.iter().map(|&v| g.degree(v)).sum();
            (c.len(), twice / 2)
        })
        .collect()
}

/// Structural lemmas a unigraphic realisation with `a >= 3` and `p >= 3a`
/// must satisfy. Returns a description of each violation.
pub fn lemma_violations(cd: &ChordDiagram) -> Vec<String> {
    let s = cd.to_polytope().degree_sequence();
    let a = s.threes();
    let g = cd.chord_graph();
    let comps = components(&g);
    let nontrivial: Vec<&(usize, usize)> = comps.iter().filter(|c| c.0 > 1).collect();
    let cyclic: Vec<&(usize, usize)> = comps.iter().filter(|c| c.1 >= c.0).collect();
    let exceptional = s == "14,5^9,3^5".parse().unwrap();
    let mut bad = Vec::new();
    if !exceptional && !(nontrivial.len() == 1 && nontrivial[0].1 >= nontrivial[0].0) {
        bad.push(format!("{cd}: not a single non-trivial component containing a cycle"));
    }
    if comps.iter().any(|&(n, m)| n > 1 && m + 1 == n) {
        bad.push(format!("{cd}: non-trivial tree component"));
    }
    if !(1..=3).contains(&cyclic.len()) || (cyclic.len() == 3 && cyclic.iter().any(|&&c| c != (3, 3))) {
        bad.push(format!("{cd}: cyclic components {cyclic:?}"));
    }
    let bound = check_block_bound(&decompose(&g), a);
    if !bound.holds() {
        bad.push(format!("{cd}: block bounds {bound:?}"));
    }
    bad
}

/// The decomposition of the constructed chord graph matches the family's
/// description.
pub fn structure_matches(spec: &FamilySpec) -> Result<(), String> {
    let cd = spec.construct();
    let g = cd.chord_graph();
    let d = decompose(&g);
    let cyclic: Vec<_> = d.cyclic_blocks().collect();
    let b_blocks = &d.b_blocks;
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(format!("{spec}: {what}")) };
    let chord_degree = |v: usize| g.degree(v);
    match spec.tag() {
        FamilyTag::Exc => {
            check(d.cyclic_component_count == 3, "three cyclic components")?;
            check(cyclic.len() == 3 && cyclic.iter().all(|b| b.order() == 3 && b.edges.len() == 3), "three triangles")?;
            check(d.y_set.is_empty() && d.z_set.len() == 5, "no pendants, five isolated")
        }
        FamilyTag::B1 | FamilyTag::B2 | FamilyTag::B3 => {
            let (order, edges) = match spec.tag() {
                FamilyTag::B1 => (3, 3),
                FamilyTag::B2 => (4, 5),
                _ => (5, 7),
            };
            check(d.cyclic_component_count == 1, "one cyclic component")?;
            check(b_blocks.len() == 1 && d.b_is_two_connected(), "B is one block")?;
            check(b_blocks[0].order() == order && b_blocks[0].edges.len() == edges, "block shape")?;
            check(!d.y_set.is_empty(), "pendants present")?;
            check(d.y_set.iter().all(|&y| d.b_vertices.contains(&g.neighbors(y).next().unwrap())), "pendants hang off B")?;
            if let Some(q) = spec.common_degree() {
                check(d.b_vertices.iter().all(|&v| chord_degree(v) == q), "equal core chord-degrees")?;
            }
            Ok(())
        }
        FamilyTag::C => {
            let l = spec.path_length().unwrap();
            check(cyclic.iter().all(|b| b.order() == 3 && b.edges.len() == 3), "cyclic blocks are triangles")?;
            let bridges: Vec<_> = d.blocks.iter().filter(|b| !b.cyclic).collect();
            check(bridges.len() == l, "path of length p - 3a + 2")?;
            // The bridges form one path whose ends carry all triangles.
            let path = PolytopeGraph::from_edges(g.vertex_count(), bridges.iter().map(|b| b.edges[0])).unwrap();
            let ends: Vec<usize> = (0..g.vertex_count()).filter(|&v| path.degree(v) == 1).collect();
            check(ends.len() == 2, "path has two ends")?;
            let on_path = (0..g.vertex_count()).filter(|&v| path.degree(v) > 0).count();
            check(on_path == l + 1, "bridges form a single path")?;
            check(cyclic.iter().all(|b| ends.iter().any(|e| b.vertices.contains(e))), "triangles at the path ends")?;
            // A path end without triangles (y = 1) is the only leaf.
            check(d.y_set.iter().all(|y| ends.contains(y)), "no pendants off the path")?;
            let t = (spec.x().unwrap() - 1) / 2 + (spec.y().unwrap() - 1) / 2;
            check(cyclic.len() == t, "(x - 1)/2 + (y - 1)/2 triangles")
        }
        FamilyTag::D => {
            let q = spec.common_degree().unwrap();
            check(d.cyclic_component_count == 1, "one cyclic component")?;
            check(cyclic.len() == 1 && cyclic[0].order() == 3, "one triangle")?;
            let acyclic: Vec<_> = b_blocks.iter().filter(|b| !b.cyclic).collect();
            check(acyclic.len() == 1, "one acyclic block in B")?;
            check(d.b_vertices.len() == 4, "four core vertices")?;
            check(d.b_vertices.iter().all(|&v| chord_degree(v) == q), "equal core chord-degrees")?;
            check(d.y_set.iter().all(|&y| d.b_vertices.contains(&g.neighbors(y).next().unwrap())), "pendants hang off B")
        }
    }
}

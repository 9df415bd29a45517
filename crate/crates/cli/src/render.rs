use std::f64::consts::TAU;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use unigraph::{
    decompose, ChordDiagram, Decomposition, DegreeSequence, FamilyMatch, FamilySpec, PolytopeGraph, RealizationReport,
    Scope, VerificationReport,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Unigraphic,
    NotInFamilies,
    OutOfScope,
}

impl Verdict {
    fn label(self) -> &'static str {
        match self {
            Verdict::Unigraphic => "UNIGRAPHIC",
            Verdict::NotInFamilies => "NOT-IN-FAMILIES",
            Verdict::OutOfScope => "OUT-OF-SCOPE",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub sequence: DegreeSequence,
    pub scope: Scope,
    pub matches: Vec<FamilySpec>,
    pub verdict: Verdict,
}

impl ClassifyReport {
    pub fn new(s: &DegreeSequence, m: FamilyMatch) -> Self {
        let verdict = match m.scope {
            Scope::InScope if m.matches.is_empty() => Verdict::NotInFamilies,
            Scope::InScope => Verdict::Unigraphic,
            _ => Verdict::OutOfScope,
        };
        ClassifyReport {
            sequence: s.clone(),
            scope: m.scope,
            matches: m.matches,
            verdict,
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("sequence: {}\n", self.sequence);
        let scope = match self.scope {
            Scope::InScope => "in scope",
            Scope::OutOfScopeA => "out of scope (2a > p)",
            Scope::OutOfScopeP => "out of scope (3a > p)",
            Scope::Infeasible => "infeasible",
        };
        writeln!(out, "scope: {scope}").unwrap();
        for spec in &self.matches {
            writeln!(out, "family: {spec}").unwrap();
        }
        writeln!(out, "{}", self.verdict.label()).unwrap();
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConstructReport {
    pub spec: FamilySpec,
    pub sequence: DegreeSequence,
    pub diagram: ChordDiagram,
    pub graph6: String,
}

impl ConstructReport {
    pub fn new(spec: &FamilySpec, cd: &ChordDiagram) -> Self {
        ConstructReport {
            spec: *spec,
            sequence: spec.sequence(),
            diagram: cd.clone(),
            graph6: cd.to_polytope().to_graph6(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub graph6: String,
    pub vertices: usize,
    pub edges: usize,
    pub sequence: DegreeSequence,
    pub planar: bool,
    pub three_connected: bool,
    /// `None` for disconnected graphs.
    pub radius: Option<usize>,
    /// Present when the graph is a radius-one 3-polytope.
    pub diagram: Option<ChordDiagram>,
    pub decomposition: Option<Decomposition>,
}

impl CheckReport {
    pub fn new(g: &PolytopeGraph) -> Self {
        let diagram = ChordDiagram::from_polytope(g).ok();
        CheckReport {
            graph6: g.to_graph6(),
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            sequence: g.degree_sequence(),
            planar: g.is_planar(),
            three_connected: g.is_k_connected(3),
            radius: g.radius().ok(),
            decomposition: diagram.as_ref().map(|cd| decompose(&cd.chord_graph())),
            diagram,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph6: {}", self.graph6).unwrap();
        writeln!(out, "vertices: {}", self.vertices).unwrap();
        writeln!(out, "edges: {}", self.edges).unwrap();
        writeln!(out, "sequence: {}", self.sequence).unwrap();
        writeln!(out, "planar: {}", self.planar).unwrap();
        writeln!(out, "3-connected: {}", self.three_connected).unwrap();
        match self.radius {
            Some(r) => writeln!(out, "radius: {r}").unwrap(),
            None => writeln!(out, "radius: infinite").unwrap(),
        }
        match (&self.diagram, &self.decomposition) {
            (Some(cd), Some(d)) => {
                writeln!(out, "diagram: {cd}").unwrap();
                writeln!(out, "Z: {}, Y: {}, B: {}", d.z_set.len(), d.y_set.len(), d.b_vertices.len()).unwrap();
                writeln!(
                    out,
                    "blocks: {} ({} cyclic), cyclic components: {}",
                    d.blocks.len(),
                    d.cyclic_blocks().count(),
                    d.cyclic_component_count
                )
                .unwrap();
            }
            _ => writeln!(out, "diagram: none (not a radius-one 3-polytope)").unwrap(),
        }
        out
    }
}

pub fn enumerate_text(r: &RealizationReport) -> String {
    let mut out = format!("sequence: {}\nclass_count: {}\n", r.sequence, r.class_count);
    if r.truncated {
        out.push_str("truncated: true\n");
    }
    writeln!(out, "nodes_explored: {}", r.nodes_explored).unwrap();
    for cd in &r.representatives {
        writeln!(out, "  {cd}").unwrap();
    }
    out
}

pub fn verify_text(r: &VerificationReport) -> String {
    let mut out = format!(
        "p in [{}, {}]: {} sequences, {} agreements, {} disagreements, {} unigraphic\n",
        r.p_min,
        r.p_max,
        r.sequences_checked,
        r.agreements,
        r.disagreements.len(),
        r.unigraphic.len()
    );
    for (family, count) in &r.confirmed_per_family {
        writeln!(out, "  {family}: {count}").unwrap();
    }
    for d in &r.disagreements {
        let families: Vec<String> = d.matches.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "DISAGREEMENT {}: families [{}], oracle unigraphic {}",
            d.sequence,
            families.join(", "),
            d.oracle_unigraphic
        )
        .unwrap();
    }
    writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" }).unwrap();
    out
}

/// The polytope of `cd` with rim vertices pinned in cyclic order around the
/// apex. Chords are drawn in blue, spokes dashed.
pub fn dot(cd: &ChordDiagram, name: &str) -> String {
    let n = cd.rim();
    let mut out = format!("graph {name} {{\n  layout=neato;\n  node [shape=circle];\n");
    writeln!(out, "  {n} [label=\"apex\", shape=doublecircle, pos=\"0,0!\"];").unwrap();
    for i in 0..n {
        let angle = TAU * i as f64 / n as f64;
        writeln!(out, "  {i} [pos=\"{:.3},{:.3}!\"];", 3.0 * angle.cos(), 3.0 * angle.sin()).unwrap();
    }
    for i in 0..n {
        writeln!(out, "  {i} -- {};", (i + 1) % n).unwrap();
    }
    for i in 0..n {
        writeln!(out, "  {n} -- {i} [style=dashed, color=gray];").unwrap();
    }
    for &(a, b) in cd.chords() {
        writeln!(out, "  {a} -- {b} [color=blue];").unwrap();
    }
    out.push_str("}\n");
    out
}

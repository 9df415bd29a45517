//! Chord-diagram model of radius-one 3-polytopes.
//!
//! Removing a universal vertex from a radius-one 3-polytope leaves a
//! 2-connected outerplanar graph: a Hamiltonian rim cycle plus pairwise
//! non-crossing chords. A [`ChordDiagram`] records the rim length and the
//! chords; the apex is restored by [`ChordDiagram::to_polytope`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, full_mask, PolytopeGraph, MAX_VERTICES};

/// Rim length `n` with chords `(a, b)`, `a < b`, sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "DiagramJson", into = "DiagramJson")]
pub struct ChordDiagram {
    rim: usize,
    chords: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    rim: usize,
    chords: Vec<[usize; 2]>,
}

impl TryFrom<DiagramJson> for ChordDiagram {
    type Error = Error;

    fn try_from(value: DiagramJson) -> Result<Self> {
        ChordDiagram::new(value.rim, value.chords.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<ChordDiagram> for DiagramJson {
    fn from(cd: ChordDiagram) -> Self {
        DiagramJson {
            rim: cd.rim,
            chords: cd.chords.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// Whether chords `(a, b)` and `(c, d)` (each with `a < b`, `c < d`) cross
/// strictly inside the polygon. Chords sharing an endpoint never cross.
#[inline]
pub fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

#[inline]
fn rim_adjacent(n: usize, a: usize, b: usize) -> bool {
    b - a == 1 || (a == 0 && b == n - 1)
}

impl ChordDiagram {
    pub fn new<I>(rim: usize, chords: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let bad = |msg: String| Error::Diagram(msg);
        if rim < 3 {
            return Err(bad(format!("rim length {rim} is below 3")));
        }
        if rim >= MAX_VERTICES {
            return Err(Error::TooManyVertices(rim + 1));
        }
        let mut list = Vec::new();
        for (a, b) in chords {
            let (a, b) = (a.min(b), a.max(b));
            if b >= rim {
                return Err(bad(format!("chord {a}-{b} leaves a rim of length {rim}")));
            }
            if a == b || rim_adjacent(rim, a, b) {
                return Err(bad(format!("{a}-{b} is not a chord of the {rim}-gon")));
            }
            list.push((a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(bad(format!("chord {}-{} listed twice", w[0].0, w[0].1)));
        }
        for (i, &c) in list.iter().enumerate() {
            if let Some(&d) = list[i + 1..].iter().find(|&&d| crosses(c, d)) {
                return Err(bad(format!("chords {}-{} and {}-{} cross", c.0, c.1, d.0, d.1)));
            }
        }
        Ok(ChordDiagram { rim, chords: list })
    }

    /// Caller guarantees the chords are valid and sorted.
    pub(crate) fn from_sorted_unchecked(rim: usize, chords: Vec<(usize, usize)>) -> Self {
        debug_assert!(ChordDiagram::new(rim, chords.iter().copied()).is_ok_and(|c| c.chords == chords));
        ChordDiagram { rim, chords }
    }

    /// The bare polygon: its polytope is the wheel on `rim + 1` vertices.
    pub fn polygon(rim: usize) -> Result<Self> {
        ChordDiagram::new(rim, [])
    }

    pub fn rim(&self) -> usize {
        self.rim
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    /// Order `p = rim + 1` of the polytope.
    pub fn order(&self) -> usize {
        self.rim + 1
    }

    /// Chord-degree of every rim vertex, indexed by rim position.
    pub fn chord_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.rim];
        for &(a, b) in &self.chords {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn chord_degree_sequence(&self) -> ChordDegreeSequence {
        ChordDegreeSequence::new(self.chord_degrees())
    }

    /// The graph `G` on the rim vertices whose edges are the chords.
    pub fn chord_graph(&self) -> PolytopeGraph {
        PolytopeGraph::from_edges(self.rim, self.chords.iter().copied())
            .expect("diagram chords form a simple graph")
    }

    /// Apex `rim` joined to every rim vertex, plus rim cycle and chords.
    pub fn to_polytope(&self) -> PolytopeGraph {
        let n = self.rim;
        let rim_edges = (0..n).map(|i| (i, (i + 1) % n));
        let spokes = (0..n).map(|i| (i, n));
        PolytopeGraph::from_edges(n + 1, rim_edges.chain(spokes).chain(self.chords.iter().copied()))
            .expect("diagram polytope is a simple graph")
    }

    /// Recover a diagram from a radius-one 3-polytope. The apex is the
    /// universal vertex coming first in the canonical order; the result is
    /// dihedrally canonical.
    pub fn from_polytope(f: &PolytopeGraph) -> Result<Self> {
        let reject = |msg: &str| Err(Error::NotRadiusOnePolytope(msg.to_string()));
        let p = f.vertex_count();
        if p < 4 {
            return reject("fewer than 4 vertices");
        }
        if f.universal_vertices().is_empty() {
            return reject("no universal vertex");
        }
        if !f.is_planar() {
            return reject("not planar");
        }
        if !f.is_k_connected(3) {
            return reject("not 3-connected");
        }
        let (_, order) = crate::graph::canonical_labeling(f);
        let apex = *order
            .iter()
            .find(|&&v| f.degree(v) == p - 1)
            .expect("a universal vertex exists");
        let rest: Vec<usize> = (0..p).filter(|&v| v != apex).collect();
        let r = f.induced_subgraph(&rest);
        let n = p - 1;
        let all = full_mask(n);
        // An edge is a rim edge iff deleting both endpoints leaves the
        // remainder connected; a chord always separates its two sides.
        let mut rim_adj = vec![0u64; n];
        for (u, v) in r.edges() {
            if r.is_connected_within(all & !(1 << u | 1 << v)) {
                rim_adj[u] |= 1 << v;
                rim_adj[v] |= 1 << u;
            }
        }
        if rim_adj.iter().any(|m| m.count_ones() != 2) {
            return reject("rim is not a Hamiltonian cycle");
        }
        let mut position = vec![usize::MAX; n];
        let (mut prev, mut cur) = (usize::MAX, 0usize);
        for i in 0..n {
            if position[cur] != usize::MAX {
                return reject("rim is not a Hamiltonian cycle");
            }
            position[cur] = i;
            let next = bits(rim_adj[cur]).find(|&w| w != prev).expect("degree two");
            prev = cur;
            cur = next;
        }
        if cur != 0 {
            return reject("rim is not a Hamiltonian cycle");
        }
        let chords = r
            .edges()
            .filter(|&(u, v)| rim_adj[u] >> v & 1 == 0)
            .map(|(u, v)| (position[u], position[v]));
        Ok(ChordDiagram::new(n, chords)?.dihedral_canonical())
    }

    /// Image under the rim map `v -> (shift ± v) mod n`.
    fn mapped(&self, shift: usize, reflect: bool) -> Vec<(usize, usize)> {
        let n = self.rim;
        let map = |v: usize| if reflect { (shift + n - v) % n } else { (v + shift) % n };
        let mut out: Vec<(usize, usize)> = self
            .chords
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map(a), map(b));
                (x.min(y), x.max(y))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Least sorted chord list over the `2n` rotations and reflections.
    pub fn dihedral_canonical(&self) -> ChordDiagram {
        let mut best = self.chords.clone();
        for reflect in [false, true] {
            for shift in 0..self.rim {
                let image = self.mapped(shift, reflect);
                if image < best {
                    best = image;
                }
            }
        }
        ChordDiagram { rim: self.rim, chords: best }
    }

    pub fn is_dihedral_canonical(&self) -> bool {
        self.dihedral_canonical() == *self
    }
}

/// `n: a-b,c-d`, e.g. `9: 0-2,0-4,2-4`.
impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.rim)?;
        for (i, (a, b)) in self.chords.iter().enumerate() {
            let sep = if i == 0 { " " } else { "," };
            write!(f, "{sep}{a}-{b}")?;
        }
        Ok(())
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Diagram(msg);
        let (rim, rest) = text
            .split_once(':')
            .ok_or_else(|| bad("expected 'n: a-b,c-d,...'".into()))?;
        let rim: usize = rim
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad rim length '{}'", rim.trim())))?;
        let mut chords = Vec::new();
        for token in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (a, b) = token
                .split_once('-')
                .ok_or_else(|| bad(format!("bad chord '{token}'")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad(format!("bad chord '{token}'")));
            chords.push((parse(a)?, parse(b)?));
        }
        ChordDiagram::new(rim, chords)
    }
}

/// Chord-degree multiset `s'`, sorted non-increasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChordDegreeSequence {
    entries: Vec<usize>,
}

impl ChordDegreeSequence {
    pub fn new(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        ChordDegreeSequence { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Number of chord-isolated rim vertices, i.e. `|Z|`.
    pub fn zeros(&self) -> usize {
        self.entries.iter().filter(|&&d| d == 0).count()
    }

    /// Polytope degree sequence obtained by adding 3 to every rim entry and
    /// prepending the apex.
    pub fn to_degree_sequence(&self) -> crate::graph::DegreeSequence {
        let n = self.entries.len();
        let mut all: Vec<usize> = self.entries.iter().map(|d| d + 3).collect();
        all.push(n);
        crate::graph::DegreeSequence::new(all)
    }
}

/// Every valid chord set on the `n`-gon, in lexicographic order of sorted
/// chord lists.
pub fn all_diagrams(n: usize) -> Vec<ChordDiagram> {
    fn go(
        n: usize,
        candidates: &[(usize, usize)],
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<ChordDiagram>,
    ) {
        out.push(ChordDiagram { rim: n, chords: chosen.clone() });
        for (i, &c) in candidates.iter().enumerate() {
            if chosen.iter().all(|&d| !crosses(c, d)) {
                chosen.push(c);
                go(n, &candidates[i + 1..], chosen, out);
                chosen.pop();
            }
        }
    }
    if !(3..MAX_VERTICES).contains(&n) {
        return Vec::new();
    }
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 2..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !rim_adjacent(n, a, b))
        .collect();
    let mut out = Vec::new();
    go(n, &candidates, &mut Vec::new(), &mut out);
    out
}

/// One representative per dihedral orbit, sorted.
pub fn canonical_diagrams(n: usize) -> Vec<ChordDiagram> {
    let mut out: Vec<ChordDiagram> = all_diagrams(n)
        .into_iter()
        .filter(ChordDiagram::is_dihedral_canonical)
        .collect();
    out.sort();
    out
}

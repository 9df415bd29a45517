//! The unigraphic families B1, B2, B3, C, D and the exceptional sequence
//! `14,5^9,3^5`: row constraints, classification and canonical
//! constructions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::apex::ChordDiagram;
use crate::error::{Error, Result};
use crate::graph::DegreeSequence;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum FamilyTag {
    B1,
    B2,
    B3,
    C,
    D,
    #[serde(rename = "EXC")]
    Exc,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::B1,
        FamilyTag::B2,
        FamilyTag::B3,
        FamilyTag::C,
        FamilyTag::D,
        FamilyTag::Exc,
    ];

    /// Least `p` admitting a valid spec.
    pub fn min_order(self) -> usize {
        match self {
            FamilyTag::B1 => 10,
            FamilyTag::B2 => 15,
            FamilyTag::B3 => 22,
            FamilyTag::C => 9,
            FamilyTag::D => 12,
            FamilyTag::Exc => 15,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyTag::B1 => "B1",
            FamilyTag::B2 => "B2",
            FamilyTag::B3 => "B3",
            FamilyTag::C => "C",
            FamilyTag::D => "D",
            FamilyTag::Exc => "EXC",
        })
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(text.trim()))
            .ok_or_else(|| Error::FamilyConstraint {
                family: text.to_string(),
                constraint: "unknown family (expected B1, B2, B3, C, D or EXC)".into(),
            })
    }
}

/// A family row with its parameters. `x` is set for B1 and C only; `a` is
/// the number of 3-entries (free for C, fixed by the row otherwise).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "SpecJson", into = "SpecJson")]
pub struct FamilySpec {
    tag: FamilyTag,
    p: usize,
    a: usize,
    x: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    family: FamilyTag,
    p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<usize>,
}

impl TryFrom<SpecJson> for FamilySpec {
    type Error = Error;

    fn try_from(v: SpecJson) -> Result<Self> {
        FamilySpec::new(v.family, v.p, v.x, v.a)
    }
}

impl From<FamilySpec> for SpecJson {
    fn from(s: FamilySpec) -> Self {
        SpecJson {
            family: s.tag,
            p: s.p,
            a: Some(s.a),
            x: s.x,
        }
    }
}

impl FamilySpec {
    /// Validates the row constraints. `x` is required for B1 and C, `a` for
    /// C; for the other rows a supplied `a` must equal the fixed value.
    pub fn new(tag: FamilyTag, p: usize, x: Option<usize>, a: Option<usize>) -> Result<Self> {
        let fail = |constraint: &str| {
            Err(Error::FamilyConstraint {
                family: tag.to_string(),
                constraint: constraint.to_string(),
            })
        };
        let fixed_a = match tag {
            FamilyTag::B1 | FamilyTag::D => Some(3),
            FamilyTag::B2 => Some(4),
            FamilyTag::B3 | FamilyTag::Exc => Some(5),
            FamilyTag::C => None,
        };
        let a = match (fixed_a, a) {
            (Some(f), Some(given)) if given != f => return fail(&format!("a = {f} for this family")),
            (Some(f), _) => f,
            (None, Some(given)) => given,
            (None, None) => return fail("a is required"),
        };
        match tag {
            FamilyTag::B1 | FamilyTag::C => {
                if x.is_none() {
                    return fail("x is required");
                }
            }
            _ => {
                if x.is_some() {
                    return fail("x is not a parameter of this family");
                }
            }
        }
        match tag {
            FamilyTag::B1 => {
                let x = x.unwrap();
                if p < 10 {
                    return fail("p >= 10");
                }
                if x < 3 || x > (p - 4) / 2 {
                    return fail("3 <= x <= floor((p-4)/2)");
                }
            }
            FamilyTag::B2 => {
                if p % 4 != 3 {
                    return fail("p = 3 (mod 4)");
                }
                if p < 15 {
                    return fail("p >= 15");
                }
            }
            FamilyTag::B3 => {
                if p % 5 != 2 {
                    return fail("p = 2 (mod 5)");
                }
                if p < 22 {
                    return fail("p >= 22");
                }
            }
            FamilyTag::C => {
                let x = x.unwrap();
                if p < 8 {
                    return fail("p >= 8");
                }
                if a < 3 || 3 * a > p {
                    return fail("3 <= a <= p/3");
                }
                if x.is_multiple_of(2) {
                    return fail("x odd");
                }
                if x < 1 + 2 * (a - 2).div_ceil(2) || x > 2 * a - 3 {
                    return fail("1 + 2*ceil((a-2)/2) <= x <= 2a-3");
                }
            }
            FamilyTag::D => {
                if !p.is_multiple_of(4) {
                    return fail("p = 0 (mod 4)");
                }
                if p < 12 {
                    return fail("p >= 12");
                }
            }
            FamilyTag::Exc => {
                if p != 15 {
                    return fail("p = 15");
                }
            }
        }
        Ok(FamilySpec { tag, p, a, x })
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn x(&self) -> Option<usize> {
        self.x
    }

    /// `y = 2(a-1) - x`, family C only.
    pub fn y(&self) -> Option<usize> {
        (self.tag == FamilyTag::C).then(|| 2 * (self.a - 1) - self.x.unwrap())
    }

    /// Length `p - 3a + 2` of the `uv`-path, family C only.
    pub fn path_length(&self) -> Option<usize> {
        (self.tag == FamilyTag::C).then(|| self.p + 2 - 3 * self.a)
    }

    /// Common chord-degree of the core vertices of B2, B3 and D.
    pub fn common_degree(&self) -> Option<usize> {
        match self.tag {
            FamilyTag::B2 => Some((self.p + 1) / 4),
            FamilyTag::B3 => Some((self.p + 3) / 5),
            FamilyTag::D => Some(self.p / 4),
            _ => None,
        }
    }

    /// The displayed degree sequence of the row.
    pub fn sequence(&self) -> DegreeSequence {
        let p = self.p;
        let mut s = vec![p - 1];
        let mut push = |d: usize, k: usize| s.extend(std::iter::repeat_n(d, k));
        match self.tag {
            FamilyTag::B1 => {
                let x = self.x.unwrap();
                push(x + 3, 2);
                push(p - 1 - 2 * x + 3, 1);
                push(4, p - 7);
                push(3, 3);
            }
            FamilyTag::B2 => {
                push((p + 1) / 4 + 3, 4);
                push(4, p - 9);
                push(3, 4);
            }
            FamilyTag::B3 => {
                push((p + 3) / 5 + 3, 5);
                push(4, p - 11);
                push(3, 5);
            }
            FamilyTag::C => {
                let (x, y, a) = (self.x.unwrap(), self.y().unwrap(), self.a);
                push(x + 3, 1);
                push(y + 3, 1);
                push(5, p - a - 3);
                push(3, a);
            }
            FamilyTag::D => {
                push(p / 4 + 3, 4);
                push(4, p - 8);
                push(3, 3);
            }
            FamilyTag::Exc => {
                push(5, 9);
                push(3, 5);
            }
        }
        DegreeSequence::new(s)
    }

    /// The canonical realisation as a chord diagram on rim `p - 1`.
    pub fn construct(&self) -> ChordDiagram {
        let mut b = RimBuilder::default();
        match self.tag {
            FamilyTag::B1 => {
                let x = self.x.unwrap();
                b.polygon_with_pendants(&[x - 2, x - 2, self.p - 3 - 2 * x], &[]);
            }
            FamilyTag::B2 => {
                let q = (self.p + 1) / 4;
                b.polygon_with_pendants(&[q - 3, q - 2, q - 3, q - 2], &[(0, 2)]);
            }
            FamilyTag::B3 => {
                let q = (self.p + 3) / 5;
                b.polygon_with_pendants(&[q - 4, q - 2, q - 3, q - 3, q - 2], &[(0, 2), (0, 3)]);
            }
            FamilyTag::C => self.build_c(&mut b),
            FamilyTag::D => {
                let q = self.p / 4;
                let w0 = b.vertex();
                let w1p_leaves = b.vertices(q - 1);
                b.vertex();
                let w1p = b.vertex();
                let w0_leaves = b.vertices(q - 3);
                let w1 = b.vertex();
                b.vertex();
                let w1_leaves = b.vertices(q - 2);
                let w2 = b.vertex();
                b.vertex();
                let w2_leaves = b.vertices(q - 2);
                b.chords.extend([(w0, w1p), (w0, w1), (w1, w2), (w2, w0)]);
                b.pendants(w1p, &w1p_leaves);
                b.pendants(w0, &w0_leaves);
                b.pendants(w1, &w1_leaves);
                b.pendants(w2, &w2_leaves);
            }
            FamilyTag::Exc => {
                b.next = 14;
                b.chords.extend([
                    (0, 6),
                    (0, 12),
                    (6, 12),
                    (1, 3),
                    (1, 5),
                    (3, 5),
                    (7, 9),
                    (7, 11),
                    (9, 11),
                ]);
            }
        }
        debug_assert_eq!(b.next, self.p - 1);
        ChordDiagram::new(b.next, b.chords).expect("family layouts are valid chord diagrams")
    }

    /// Path `u = c_0, ..., c_l = v` laid out as a zigzag: even indices
    /// ascend from position 0, odd indices return towards the end. The
    /// triangles at `v` sit at the turn, those at `u` after `c_1`.
    fn build_c(&self, b: &mut RimBuilder) {
        let l = self.path_length().unwrap();
        let t = (self.x.unwrap() - 1) / 2;
        let s = (self.y().unwrap() - 1) / 2;
        let mut path = vec![usize::MAX; l + 1];
        for i in (0..=l).step_by(2) {
            path[i] = b.vertex();
        }
        let v = path[l];
        let bouquet = |b: &mut RimBuilder, centre: usize, count: usize, chords: &mut Vec<(usize, usize)>| {
            for _ in 0..count {
                let a = b.vertex();
                b.vertex();
                let c = b.vertex();
                chords.extend([(centre, a), (centre, c), (a, c)]);
            }
        };
        let mut chords = Vec::new();
        if l.is_multiple_of(2) {
            b.vertex();
            bouquet(b, v, s, &mut chords);
        } else {
            // v is on the returning side: its triangles come before it.
            let mut tri = Vec::new();
            for _ in 0..s {
                tri.push((b.vertex(), b.vertex(), b.vertex()));
            }
            b.vertex();
            path[l] = b.vertex();
            for (a, _, c) in tri {
                chords.extend([(path[l], a), (path[l], c), (a, c)]);
            }
        }
        let top = if l.is_multiple_of(2) { l - 1 } else { l - 2 };
        for i in (1..=top).rev().step_by(2) {
            path[i] = b.vertex();
        }
        bouquet(b, path[0], t, &mut chords);
        b.vertex();
        b.chords.extend(chords);
        for w in path.windows(2) {
            b.chords.push((w[0], w[1]));
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(p={}", self.tag, self.p)?;
        if self.tag == FamilyTag::C {
            write!(f, ", a={}", self.a)?;
        }
        if let Some(x) = self.x {
            write!(f, ", x={x}")?;
        }
        f.write_str(")")
    }
}

/// Allocates rim positions in order.
#[derive(Default)]
struct RimBuilder {
    next: usize,
    chords: Vec<(usize, usize)>,
}

impl RimBuilder {
    fn vertex(&mut self) -> usize {
        self.next += 1;
        self.next - 1
    }

    fn vertices(&mut self, k: usize) -> Vec<usize> {
        (0..k).map(|_| self.vertex()).collect()
    }

    fn pendants(&mut self, centre: usize, leaves: &[usize]) {
        self.chords.extend(leaves.iter().map(|&y| (centre, y)));
    }

    /// Polygon `c_0 .. c_{k-1}` laid out as `c_i, z, Y(c_i)` per corner,
    /// with the given diagonals (by corner index).
    fn polygon_with_pendants(&mut self, pendants: &[usize], diagonals: &[(usize, usize)]) {
        let k = pendants.len();
        let mut corners = Vec::with_capacity(k);
        for &count in pendants {
            let c = self.vertex();
            self.vertex();
            let leaves = self.vertices(count);
            self.pendants(c, &leaves);
            corners.push(c);
        }
        for i in 0..k {
            self.chords.push((corners[i], corners[(i + 1) % k]));
        }
        for &(i, j) in diagonals {
            self.chords.push((corners[i], corners[j]));
        }
    }
}

/// Where a sequence stands relative to the classification hypotheses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Scope {
    /// `a >= 3` and `p >= 3a`: the classification decides.
    InScope,
    /// `a < 3`, or `a > p/2` (no unigraphic non-wheel exists there).
    OutOfScopeA,
    /// `p/3 < a <= p/2`: the unresolved regime.
    OutOfScopeP,
    /// Not the sequence of any radius-one 3-polytope on arithmetic grounds.
    Infeasible,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub matches: Vec<FamilySpec>,
    pub scope: Scope,
}

impl FamilyMatch {
    /// In scope and in some family.
    pub fn is_unigraphic(&self) -> bool {
        self.scope == Scope::InScope && !self.matches.is_empty()
    }
}

/// `d_1 = p - 1`, every entry in `[3, p - 1]`, even sum.
pub fn is_admissible(s: &DegreeSequence) -> bool {
    let p = s.order();
    p >= 4
        && s.entries()[0] == p - 1
        && s.entries().iter().all(|&d| (3..p).contains(&d))
        && s.has_even_sum()
}

pub fn scope(s: &DegreeSequence) -> Scope {
    if !is_admissible(s) {
        return Scope::Infeasible;
    }
    let (p, a) = (s.order(), s.threes());
    if a < 3 || 2 * a > p {
        Scope::OutOfScopeA
    } else if 3 * a > p {
        Scope::OutOfScopeP
    } else {
        Scope::InScope
    }
}

/// Every valid spec at order `p`, ordered by family then parameters.
pub fn family_specs(p: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let mut try_push = |tag, x, a| {
        if let Ok(spec) = FamilySpec::new(tag, p, x, a) {
            out.push(spec);
        }
    };
    for x in 0..=p {
        try_push(FamilyTag::B1, Some(x), None);
    }
    try_push(FamilyTag::B2, None, None);
    try_push(FamilyTag::B3, None, None);
    for a in 0..=p / 3 {
        for x in 0..=2 * a {
            try_push(FamilyTag::C, Some(x), Some(a));
        }
    }
    try_push(FamilyTag::D, None, None);
    try_push(FamilyTag::Exc, None, None);
    out
}

/// One `(sequence, spec)` per distinct family sequence at order `p`,
/// keeping the first spec in [`family_specs`] order.
pub fn iterate_family_sequences(p: usize) -> Vec<(DegreeSequence, FamilySpec)> {
    let mut seen = std::collections::HashSet::new();
    family_specs(p)
        .into_iter()
        .map(|spec| (spec.sequence(), spec))
        .filter(|(s, _)| seen.insert(s.clone()))
        .collect()
}

/// All rows whose displayed sequence equals `s`, with the scope flag.
pub fn classify(s: &DegreeSequence) -> FamilyMatch {
    let scope = scope(s);
    let matches = if scope == Scope::Infeasible {
        Vec::new()
    } else {
        family_specs(s.order())
            .into_iter()
            .filter(|spec| spec.sequence() == *s)
            .collect()
    };
    FamilyMatch { matches, scope }
}

//! Exhaustive enumeration of the radius-one 3-polytopes realising a degree
//! sequence, independent of the family classification.
//!
//! The search runs over chord sets of the `(p-1)`-gon whose chord-degree
//! multiset is `d_i - 3`. Rim vertices are completed in order; at vertex
//! `i` the chords `(i, j)` with `j > i + 1` are chosen by include/exclude in
//! order of increasing span, bounded by the innermost chord enclosing `i`.
//! A rotation puts a vertex of maximum chord-degree at position 0.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::apex::ChordDiagram;
use crate::families::{classify, is_admissible, FamilySpec, FamilyTag};
use crate::graph::{CanonicalForm, DegreeSequence};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RealizationReport {
    pub sequence: DegreeSequence,
    /// Distinct isomorphism classes found; a lower bound when truncated.
    pub class_count: usize,
    /// One dihedrally canonical diagram per class, ordered by the
    /// polytope's canonical form.
    pub representatives: Vec<ChordDiagram>,
    pub truncated: bool,
    pub nodes_explored: u64,
}

struct Search {
    n: usize,
    /// `count[d]`: unfinished rim vertices still owed chord-degree `d`.
    count: Vec<usize>,
    partial: Vec<usize>,
    chords: Vec<(usize, usize)>,
    nodes: u64,
    limit: Option<usize>,
    stopped: bool,
    seen: HashSet<Vec<(usize, usize)>>,
    classes: BTreeMap<CanonicalForm, ChordDiagram>,
}

impl Search {
    fn max_remaining(&self) -> usize {
        self.count.iter().rposition(|&c| c > 0).unwrap_or(0)
    }

    /// Innermost right endpoint of a chosen chord enclosing `i`.
    fn ceiling(&self, i: usize) -> usize {
        let outer = if i == 0 { self.n - 2 } else { self.n - 1 };
        self.chords
            .iter()
            .filter(|&&(a, b)| a < i && i < b)
            .map(|&(_, b)| b)
            .min()
            .unwrap_or(outer)
    }

    /// Residual feasibility once vertices `< next` are complete: partial
    /// degrees must be dominated by the owed degrees, and the remaining
    /// chord ends must pair up.
    fn feasible(&self, next: usize) -> bool {
        let mut partials: Vec<usize> = self.partial[next..].iter().copied().filter(|&d| d > 0).collect();
        partials.sort_unstable_by(|a, b| b.cmp(a));
        let mut owed_sum = 0;
        let mut k = 0;
        for d in (0..self.count.len()).rev() {
            for _ in 0..self.count[d] {
                if k < partials.len() && partials[k] > d {
                    return false;
                }
                k += 1;
                owed_sum += d;
            }
        }
        let partial_sum: usize = partials.iter().sum();
        owed_sum >= partial_sum && (owed_sum - partial_sum).is_multiple_of(2)
    }

    fn vertex(&mut self, i: usize) {
        if self.stopped {
            return;
        }
        self.nodes += 1;
        if i == self.n {
            self.record();
            return;
        }
        let hi = self.ceiling(i);
        let targets: Vec<usize> = (i + 2..=hi).collect();
        self.choose(i, &targets, 0);
    }

    fn choose(&mut self, i: usize, targets: &[usize], from: usize) {
        if self.stopped {
            return;
        }
        let d = self.partial[i];
        if d < self.count.len() && self.count[d] > 0 {
            self.count[d] -= 1;
            if self.feasible(i + 1) {
                self.vertex(i + 1);
            }
            self.count[d] += 1;
        }
        if d >= self.max_remaining() {
            return;
        }
        let cap = self.max_remaining();
        for k in from..targets.len() {
            let j = targets[k];
            if self.partial[j] >= cap {
                continue;
            }
            self.nodes += 1;
            self.partial[i] += 1;
            self.partial[j] += 1;
            self.chords.push((i, j));
            self.choose(i, targets, k + 1);
            self.chords.pop();
            self.partial[j] -= 1;
            self.partial[i] -= 1;
            if self.stopped {
                return;
            }
        }
    }

    fn record(&mut self) {
        let mut chords = self.chords.clone();
        chords.sort_unstable();
        let cd = ChordDiagram::from_sorted_unchecked(self.n, chords).dihedral_canonical();
        if !self.seen.insert(cd.chords().to_vec()) {
            return;
        }
        let form = cd.to_polytope().canonical_form();
        let entry = self.classes.entry(form).or_insert_with(|| cd.clone());
        if cd < *entry {
            *entry = cd;
        }
        if self.limit.is_some_and(|l| self.classes.len() >= l) {
            self.stopped = true;
        }
    }
}

/// Enumerate realisation classes of `s`. `limit` caps the number of classes
/// looked for; the search tree is split by the chords at rim vertex 0 and
/// the parts run on the current rayon pool. Parts are merged in a fixed
/// order, so the report does not depend on the number of workers.
pub fn enumerate_realizations(s: &DegreeSequence, limit: Option<usize>) -> RealizationReport {
    let empty = RealizationReport {
        sequence: s.clone(),
        class_count: 0,
        representatives: Vec::new(),
        truncated: false,
        nodes_explored: 0,
    };
    if !is_admissible(s) || limit == Some(0) {
        return empty;
    }
    let Some(mut targets) = s.chord_degrees() else {
        return empty;
    };
    targets.sort_unstable_by(|a, b| b.cmp(a));
    let n = targets.len();
    if n < 3 {
        return empty;
    }
    let mut count = vec![0usize; targets[0] + 1];
    for &d in &targets {
        count[d] += 1;
    }

    // Each part fixes the chord set at vertex 0 (it has the maximum
    // chord-degree, so exactly `targets[0]` chords).
    let mut parts: Vec<Vec<usize>> = Vec::new();
    combinations(2, n - 2, targets[0], &mut Vec::new(), &mut parts);

    let results: Vec<(BTreeMap<CanonicalForm, ChordDiagram>, u64, bool)> = parts
        .par_iter()
        .map(|ends| {
            let mut search = Search {
                n,
                count: count.clone(),
                partial: vec![0; n],
                chords: Vec::new(),
                nodes: 1,
                limit,
                stopped: false,
                seen: HashSet::new(),
                classes: BTreeMap::new(),
            };
            for &j in ends {
                search.partial[0] += 1;
                search.partial[j] += 1;
                search.chords.push((0, j));
            }
            search.count[targets[0]] -= 1;
            if search.feasible(1) {
                search.vertex(1);
            }
            (search.classes, search.nodes, search.stopped)
        })
        .collect();

    let mut classes: BTreeMap<CanonicalForm, ChordDiagram> = BTreeMap::new();
    let mut nodes = 0;
    let mut stopped = false;
    for (part, part_nodes, part_stopped) in results {
        nodes += part_nodes;
        stopped |= part_stopped;
        for (form, cd) in part {
            let entry = classes.entry(form).or_insert_with(|| cd.clone());
            if cd < *entry {
                *entry = cd;
            }
        }
    }
    let class_count = classes.len();
    let keep = limit.unwrap_or(usize::MAX);
    RealizationReport {
        sequence: s.clone(),
        class_count,
        truncated: stopped || class_count > keep,
        representatives: classes.into_values().take(keep).collect(),
        nodes_explored: nodes,
    }
}

/// All `k`-subsets of `lo..=hi` in lexicographic order.
fn combinations(lo: usize, hi: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == 0 {
        out.push(cur.clone());
        return;
    }
    let mut v = lo;
    while v + k <= hi + 1 {
        cur.push(v);
        combinations(v + 1, hi, k - 1, cur, out);
        cur.pop();
        v += 1;
    }
}

/// Exactly one realisation up to isomorphism.
pub fn is_unigraphic(s: &DegreeSequence) -> bool {
    enumerate_realizations(s, Some(2)).class_count == 1
}

/// Every sequence at order `p` that passes the cheap necessary conditions:
/// `d_1 = p - 1`, the rest in `[3, p - 1]`, even sum. Lexicographically
/// decreasing.
pub fn feasible_sequences(p: usize) -> Vec<DegreeSequence> {
    fn go(max: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
        if left == 0 {
            let s = DegreeSequence::new(cur.clone());
            if s.has_even_sum() {
                out.push(s);
            }
            return;
        }
        for d in (3..=max).rev() {
            cur.push(d);
            go(d, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p >= 4 {
        go(p - 1, p - 1, &mut vec![p - 1], &mut out);
    }
    out
}

/// Sequences examined by [`verify_theorem`] at order `p`: the feasible
/// ones with `a >= 3` and `p >= 3a`.
pub fn admissible_sequences(p: usize) -> Vec<DegreeSequence> {
    feasible_sequences(p)
        .into_iter()
        .filter(|s| s.threes() >= 3 && 3 * s.threes() <= p)
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SequenceVerdict {
    pub sequence: DegreeSequence,
    pub matches: Vec<FamilySpec>,
    pub oracle_unigraphic: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub p_min: usize,
    pub p_max: usize,
    pub sequences_checked: usize,
    pub agreements: usize,
    pub disagreements: Vec<SequenceVerdict>,
    /// Sequences confirmed unigraphic by the oracle, with their families.
    pub unigraphic: Vec<SequenceVerdict>,
    /// Oracle-confirmed sequences per family tag.
    pub confirmed_per_family: BTreeMap<String, usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compare the classification against the oracle for every admissible
/// sequence with `p_min <= p <= p_max`.
pub fn verify_theorem(p_min: usize, p_max: usize) -> VerificationReport {
    let mut report = VerificationReport {
        p_min,
        p_max,
        ..Default::default()
    };
    for tag in FamilyTag::ALL {
        report.confirmed_per_family.insert(tag.to_string(), 0);
    }
    let sequences: Vec<DegreeSequence> = (p_min..=p_max).flat_map(admissible_sequences).collect();
    let verdicts: Vec<SequenceVerdict> = sequences
        .into_par_iter()
        .map(|s| SequenceVerdict {
            matches: classify(&s).matches,
            oracle_unigraphic: is_unigraphic(&s),
            sequence: s,
        })
        .collect();
    for v in verdicts {
        report.sequences_checked += 1;
        let predicted = classify(&v.sequence).is_unigraphic();
        if predicted == v.oracle_unigraphic {
            report.agreements += 1;
        } else {
            report.disagreements.push(v.clone());
        }
        if v.oracle_unigraphic {
            let mut tags: Vec<FamilyTag> = v.matches.iter().map(FamilySpec::tag).collect();
            tags.dedup();
            for tag in tags {
                *report.confirmed_per_family.get_mut(&tag.to_string()).unwrap() += 1;
            }
            report.unigraphic.push(v);
        }
    }
    report
}

/// Run `f` on a dedicated pool of `jobs` workers.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(text: &str) -> DegreeSequence {
        text.parse().unwrap()
    }

    #[test]
    fn wheels_are_unique() {
        for p in 5..=9 {
            let s = DegreeSequence::new(std::iter::once(p - 1).chain(std::iter::repeat_n(3, p - 1)).collect());
            let r = enumerate_realizations(&s, None);
            assert_eq!(r.class_count, 1, "p = {p}");
            assert!(r.representatives[0].chords().is_empty());
        }
        assert!(is_unigraphic(&seq("4,3,3,3,3")));
    }

    #[test]
    fn small_exceptional_sequence() {
        let r = enumerate_realizations(&seq("5,4,4,3,3,3"), None);
        assert_eq!(r.class_count, 1);
        assert!(!r.truncated);
    }

    #[test]
    fn infeasible_inputs_give_zero() {
        for text in ["9,5,5,5,5,4,3,3,3,3", "8,5,5,5,5,4,4,3,3,3", "3,3,3", "5,5,5,5,5,5"] {
            assert_eq!(enumerate_realizations(&seq(text), None).class_count, 0, "{text}");
        }
    }

    #[test]
    fn non_family_sequence_has_several_classes() {
        let s = seq("9,5,5,5,5,4,4,3,3,3");
        let r = enumerate_realizations(&s, None);
        assert!(r.class_count >= 2);
        assert_eq!(r.representatives.len(), r.class_count);
        let truncated = enumerate_realizations(&s, Some(1));
        assert!(truncated.truncated);
        assert_eq!(truncated.representatives.len(), 1);
        assert!(!is_unigraphic(&s));
    }

    #[test]
    fn representatives_realise_the_sequence() {
        let s = seq("9,5,5,5,5,4,4,3,3,3");
        let r = enumerate_realizations(&s, None);
        let mut forms = HashSet::new();
        for cd in &r.representatives {
            let f = cd.to_polytope();
            assert_eq!(f.degree_sequence(), s);
            assert!(cd.is_dihedral_canonical());
            assert!(forms.insert(f.canonical_form()));
        }
    }

    #[test]
    fn report_is_independent_of_worker_count() {
        let s = seq("11,6,5,5,5,5,4,4,4,3,3,3");
        let one = with_jobs(1, || enumerate_realizations(&s, None));
        let four = with_jobs(4, || enumerate_realizations(&s, None));
        assert_eq!(one, four);
        let one = with_jobs(1, || enumerate_realizations(&s, Some(2)));
        let four = with_jobs(4, || enumerate_realizations(&s, Some(2)));
        assert_eq!(one, four);
    }

    #[test]
    fn admissible_sequence_counts() {
        assert!(admissible_sequences(8).is_empty());
        for s in admissible_sequences(10) {
            assert!(is_admissible(&s));
            assert!(s.threes() >= 3 && 3 * s.threes() <= 10);
        }
        assert!(admissible_sequences(10).contains(&seq("9,5,5,5,5,4,4,3,3,3")));
    }

    #[test]
    fn empty_range() {
        let r = verify_theorem(10, 9);
        assert_eq!(r.sequences_checked, 0);
        assert!(r.passed());
    }
}

mod common;

use common::{lemma_violations, structure_matches};
use unigraph::families::family_specs;
use unigraph::oracle::admissible_sequences;
use unigraph::{classify, enumerate_realizations, verify_theorem, FamilyTag};

#[test]
fn classification_agrees_with_oracle_up_to_eleven() {
    let r = verify_theorem(9, 11);
    assert!(r.passed(), "{:?}", r.disagreements);
    assert_eq!(r.sequences_checked, 60 + 236 + 848);
    assert_eq!(r.unigraphic.len(), 1 + 2 + 2);
}

#[test]
fn every_family_row_has_the_described_structure() {
    for p in 8..=30 {
        for spec in family_specs(p) {
            structure_matches(&spec).unwrap();
        }
    }
}

#[test]
fn family_rows_classify_back_to_themselves() {
    for p in 8..=30 {
        for spec in family_specs(p) {
            let m = classify(&spec.sequence());
            assert!(m.is_unigraphic(), "{spec}");
            assert!(m.matches.contains(&spec), "{spec}");
        }
    }
}

#[test]
fn unigraphic_realisations_satisfy_the_lemmas() {
    let mut seen = 0;
    for p in 7..=11 {
        for s in admissible_sequences(p) {
            let r = enumerate_realizations(&s, Some(2));
            if r.class_count == 1 {
                seen += 1;
                let bad = lemma_violations(&r.representatives[0]);
                assert!(bad.is_empty(), "{bad:?}");
            }
        }
    }
    assert_eq!(seen, 5);
}

#[test]
fn minimum_orders() {
    for tag in FamilyTag::ALL {
        let first = (4..=30).find(|&p| family_specs(p).iter().any(|s| s.tag() == tag));
        let expected = match tag {
            FamilyTag::B1 => 10,
            FamilyTag::B2 => 15,
            FamilyTag::B3 => 22,
            FamilyTag::C => 9,
            FamilyTag::D => 12,
            FamilyTag::Exc => 15,
        };
        assert_eq!(first, Some(expected), "{tag}");
    }
}

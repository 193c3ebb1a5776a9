mod common;

use rand::RngExt;

use common::{dims, random_set, rng, valid_pool};
use torus2dd::domination::{received_weight, Halves};
use torus2dd::sequence::{
    ab_block_values, check_lemma1, check_window4, column_sequence, max_zero_run, rotate_to_proper,
    ColumnCheck, ColumnSequence, ProperForm,
};

const SHAPES: [(usize, usize); 14] = [
    (3, 5), (3, 8), (3, 11), (4, 5), (4, 7), (4, 10), (5, 5), (5, 7),
    (6, 6), (6, 8), (7, 7), (8, 8), (8, 10), (9, 11),
];

#[test]
fn lemma_suite_on_valid_sets() {
    let mut rng = rng(30);
    let mut checked = 0;
    for &(m, n) in &SHAPES {
        let d = dims(m, n);
        for s in valid_pool(&mut rng, d, 45) {
            let seq = column_sequence(d, &s);
            assert_eq!(seq.total(), s.len());
            assert!(check_lemma1(d, &seq).unwrap().iter().all(ColumnCheck::holds), "{d} {s:?}");
            if let ProperForm::Blocks(_) = rotate_to_proper(&seq).unwrap() {
                assert!(max_zero_run(&seq) <= 3, "{d} {:?}", seq.counts);
            }
            for y in d.vertices().filter(|&y| !s.contains(y)) {
                assert!(received_weight(d, &s, y) >= Halves::ONE);
            }
            if m == 4 {
                assert!(check_window4(d, &seq).unwrap().iter().all(ColumnCheck::holds));
            }
            checked += 1;
        }
    }
    assert!(checked >= 500);
}

#[test]
fn aggregate_block_values_for_three_and_eight_rows() {
    let mut rng = rng(31);
    for (m, n, a, b) in [(3, 7, 2, 1), (3, 10, 2, 1), (3, 13, 2, 1), (8, 9, 1, 1), (8, 10, 1, 1)] {
        let d = dims(m, n);
        for s in valid_pool(&mut rng, d, 60) {
            let seq = column_sequence(d, &s);
            if let ProperForm::Blocks(blocks) = rotate_to_proper(&seq).unwrap() {
                assert!(ab_block_values(&blocks, a, b).total() >= 0, "{d} {:?}", seq.counts);
            }
        }
    }
}

#[test]
fn decomposition_identities_on_random_sequences() {
    let mut rng = rng(32);
    for _ in 0..2000 {
        let d = dims(rng.random_range(3..=8), rng.random_range(3..=16));
        let s = random_set(&mut rng, d, 0.02..0.3);
        let seq = column_sequence(d, &s);
        assert_eq!(seq.total(), s.len());
        let Ok(ProperForm::Blocks(blocks)) = rotate_to_proper(&seq) else {
            continue;
        };
        let rotated = blocks.rotated();
        let n = d.n();
        assert_eq!(rotated, (0..n).map(|k| seq.counts[(k + blocks.rotation) % n]).collect::<Vec<_>>());
        assert!(rotated[0] > 0 && rotated[n - 1] == 0);
        let mut sorted = rotated.clone();
        sorted.sort();
        let mut orig = seq.counts.clone();
        orig.sort();
        assert_eq!(sorted, orig);
        for blk in &blocks.blocks {
            assert!(blk.positives >= 1 && blk.zeros >= 1);
            assert_eq!(blk.values.len(), blk.positives + blk.zeros);
        }
        for (a, b) in [(1, 1), (2, 1), (1, 0)] {
            let v = ab_block_values(&blocks, a, b);
            assert_eq!(v.total(), a as i64 * s.len() as i64 - b as i64 * n as i64);
        }
    }
}

#[test]
fn sequence_rejects_bad_input() {
    assert!(ColumnSequence::new(dims(3, 5), vec![1, 2, 3]).is_err());
    assert!(ColumnSequence::new(dims(3, 3), vec![1, 4, 0]).is_err());
}

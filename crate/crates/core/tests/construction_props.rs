mod common;

use rand::RngExt;

use common::{dims, random_vertex, rng, valid_pool};
use torus2dd::constructions::{construct, fold, fold_vertex, folded_lattice, Axis, Family};
use torus2dd::domination::is_2dd_set;
use torus2dd::VertexSet;

#[test]
fn every_admissible_construction_is_valid_with_exact_size() {
    let mut checked = 0;
    for fam in Family::ALL {
        let ms: Vec<usize> = match fam.fixed_m() {
            Some(m) => vec![m],
            None => (4..=32).step_by(4).collect(),
        };
        for &m in &ms {
            for n in 3..=100 {
                if !fam.admits(m, n) {
                    assert!(construct(fam, m, n).is_err());
                    continue;
                }
                let s = construct(fam, m, n).unwrap();
                assert!(is_2dd_set(s.dims(), &s).unwrap().is_valid(), "{fam} on {m} x {n}");
                assert_eq!(s.len(), fam.cardinality(m, n), "{fam} on {m} x {n}");
                checked += 1;
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn c8_cardinalities() {
    for n in 8..=100 {
        let expected = match n % 4 {
            0 => n,
            2 => n + 2,
            _ => n + 1,
        };
        assert_eq!(construct(Family::C8, 8, n).unwrap().len(), expected);
    }
}

#[test]
fn folded_lattice_is_valid() {
    for m in 6..=14 {
        for n in m..=14 {
            let s = folded_lattice(m, n).unwrap();
            assert_eq!(s.dims(), dims(m, n));
            assert!(is_2dd_set(s.dims(), &s).unwrap().is_valid());
            assert!(s.len() <= 2 * m.div_ceil(4) * n.div_ceil(4));
        }
    }
}

#[test]
fn fold_preserves_domination() {
    let mut rng = rng(20);
    let shapes = [(6, 7), (7, 7), (6, 9), (7, 8), (8, 9), (9, 10), (10, 10)];
    let mut checked = 0;
    for &(m, n) in &shapes {
        let d = dims(m, n);
        for s in valid_pool(&mut rng, d, 30) {
            for axis in [Axis::Column, Axis::Row] {
                let Ok((reduced, image)) = fold(d, &s, axis) else {
                    continue;
                };
                assert!(is_2dd_set(reduced, &image).unwrap().is_valid(), "{d} {axis:?} {s:?}");
                assert!(image.len() <= s.len());
                checked += 1;
            }
        }
    }
    assert!(checked >= 200);
}

#[test]
fn fold_full_set_and_boundary() {
    let d = dims(6, 7);
    let (reduced, image) = fold(d, &VertexSet::full(d), Axis::Column).unwrap();
    assert_eq!(reduced, dims(6, 6));
    assert_eq!(image, VertexSet::full(reduced));
    assert!(fold(dims(6, 6), &VertexSet::full(dims(6, 6)), Axis::Column).is_err());
    assert!(fold(d, &VertexSet::full(d), Axis::Row).is_err());
}

#[test]
fn fold_contracts_distances_by_at_most_one() {
    let mut rng = rng(21);
    for _ in 0..10_000 {
        let d = dims(rng.random_range(6..=10), rng.random_range(7..=10));
        let reduced = dims(d.m(), d.n() - 1);
        let (u, v) = (random_vertex(&mut rng, d), random_vertex(&mut rng, d));
        let before = d.distance(u, v);
        let after = reduced.distance(fold_vertex(d, u, Axis::Column), fold_vertex(d, v, Axis::Column));
        assert!(after <= before && before <= after + 1, "{d} {u} {v}");
    }
}

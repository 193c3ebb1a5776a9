#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use torus2dd::constructions::{construct, folded_lattice, Family};
use torus2dd::domination::is_2dd_set;
use torus2dd::solver::{solve, Budget, Method};
use torus2dd::{TorusDims, Vertex, VertexSet};

/// Fixed default seed; override with `TORUS2DD_SEED` to explore.
pub fn rng(salt: u64) -> StdRng {
    let seed = std::env::var("TORUS2DD_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0x2dd_u64);
    StdRng::seed_from_u64(seed ^ salt)
}

pub fn dims(m: usize, n: usize) -> TorusDims {
    TorusDims::new(m, n).unwrap()
}

/// Each vertex joins independently with a density drawn from `density`.
pub fn random_set(rng: &mut StdRng, d: TorusDims, density: std::ops::Range<f64>) -> VertexSet {
    let density = rng.random_range(density);
    let mut s = VertexSet::new(d);
    for v in d.vertices() {
        if rng.random_bool(density) {
            s.insert(v);
        }
    }
    s
}

pub fn random_vertex(rng: &mut StdRng, d: TorusDims) -> Vertex {
    Vertex::new(rng.random_range(0..d.m()), rng.random_range(0..d.n()))
}

/// Adds each vertex outside `s` with probability `p`.
pub fn random_superset(rng: &mut StdRng, s: &VertexSet, p: f64) -> VertexSet {
    let mut out = s.clone();
    for v in s.dims().vertices() {
        if rng.random_bool(p) {
            out.insert(v);
        }
    }
    out
}

/// Random vertices are added until the set dominates.
pub fn random_valid(rng: &mut StdRng, d: TorusDims) -> VertexSet {
    let mut order: Vec<Vertex> = d.vertices().collect();
    for k in (1..order.len()).rev() {
        order.swap(k, rng.random_range(0..=k));
    }
    let mut s = VertexSet::new(d);
    for v in order {
        if is_2dd_set(d, &s).unwrap().is_valid() {
            break;
        }
        s.insert(v);
    }
    s
}

/// The admissible constructions on `d`, including the folded lattice.
pub fn constructions_on(d: TorusDims) -> Vec<VertexSet> {
    let mut out: Vec<_> = Family::ALL
        .into_iter()
        .filter_map(|f| construct(f, d.m(), d.n()).ok())
        .collect();
    out.extend(folded_lattice(d.m(), d.n()));
    out
}

/// A pool of valid 2DD-sets on `d`: constructions, one solver optimum when
/// the torus is small, random supersets of those, and random completions.
pub fn valid_pool(rng: &mut StdRng, d: TorusDims, count: usize) -> Vec<VertexSet> {
    let mut base = constructions_on(d);
    if d.vertex_count() <= 64 {
        base.push(solve(d, Method::Auto, &Budget::unlimited()).unwrap().optimal_set);
    }
    let mut out = base.clone();
    while out.len() < count {
        let pick = rng.random_range(0..base.len() + 1);
        let s = if pick < base.len() {
            let p = rng.random_range(0.0..0.3);
            random_superset(rng, &base[pick], p)
        } else {
            random_valid(rng, d)
        };
        out.push(s);
    }
    for s in &out {
        assert!(is_2dd_set(d, s).unwrap().is_valid());
    }
    out
}

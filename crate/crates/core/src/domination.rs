//! Disjunctive domination checks and the counting weight function.
//!
//! A set `S` is a 2DD-set when every vertex outside `S` has a neighbour in
//! `S` or at least two members of `S` at distance exactly two. Two
//! formulations are provided: the definitional one ([`is_2dd_set`]) and the
//! linear one ([`coverage_lhs`] `>= 2`), which the solvers use.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use crate::error::{Error, Result};
use crate::torus::{TorusDims, Vertex, VertexSet};

/// An undominated vertex and its hit counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub vertex: Vertex,
    pub neighbor_hits: usize,
    pub dist2_hits: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Witness),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Sphere offsets of radius 1 and 2, computed once per torus.
#[derive(Debug, Clone)]
pub struct Neighborhoods {
    dims: TorusDims,
    ring1: Vec<(usize, usize)>,
    ring2: Vec<(usize, usize)>,
}

impl Neighborhoods {
    pub fn new(dims: TorusDims) -> Self {
        Self { dims, ring1: dims.sphere_offsets(1), ring2: dims.sphere_offsets(2) }
    }

    pub fn dims(&self) -> TorusDims {
        self.dims
    }

    pub fn ring1_len(&self) -> usize {
        self.ring1.len()
    }

    pub fn ring2_len(&self) -> usize {
        self.ring2.len()
    }

    fn hits(&self, ring: &[(usize, usize)], s: &VertexSet, v: Vertex) -> usize {
        ring.iter()
            .filter(|&&(di, dj)| s.contains(self.dims.offset(v, di as isize, dj as isize)))
            .count()
    }

    pub fn neighbor_hits(&self, s: &VertexSet, v: Vertex) -> usize {
        self.hits(&self.ring1, s, v)
    }

    pub fn dist2_hits(&self, s: &VertexSet, v: Vertex) -> usize {
        self.hits(&self.ring2, s, v)
    }

    /// `None` when `v` is dominated.
    pub fn witness(&self, s: &VertexSet, v: Vertex) -> Option<Witness> {
        if s.contains(v) {
            return None;
        }
        let neighbor_hits = self.neighbor_hits(s, v);
        if neighbor_hits > 0 {
            return None;
        }
        let dist2_hits = self.dist2_hits(s, v);
        (dist2_hits < 2).then_some(Witness { vertex: v, neighbor_hits, dist2_hits })
    }
}

fn same_dims(dims: TorusDims, s: &VertexSet) -> Result<()> {
    if s.dims() == dims {
        Ok(())
    } else {
        Err(Error::DimsMismatch { expected: dims, found: s.dims() })
    }
}

/// Scans vertices in index order and stops at the first undominated one.
pub fn is_2dd_set(dims: TorusDims, s: &VertexSet) -> Result<Verdict> {
    same_dims(dims, s)?;
    let hoods = Neighborhoods::new(dims);
    Ok(dims
        .vertices()
        .find_map(|v| hoods.witness(s, v))
        .map_or(Verdict::Valid, Verdict::Invalid))
}

/// Every undominated vertex, in index order.
pub fn all_failures(dims: TorusDims, s: &VertexSet) -> Result<Vec<Witness>> {
    same_dims(dims, s)?;
    let hoods = Neighborhoods::new(dims);
    Ok(dims.vertices().filter_map(|v| hoods.witness(s, v)).collect())
}

/// `2 |N[v] ∩ S| + |Γ₂(v) ∩ S|`; `v` is dominated iff this is at least 2.
pub fn coverage_lhs(dims: TorusDims, s: &VertexSet, v: Vertex) -> usize {
    let hoods = Neighborhoods::new(dims);
    let own = usize::from(s.contains(v));
    2 * (own + hoods.neighbor_hits(s, v)) + hoods.dist2_hits(s, v)
}

/// An exact non-negative multiple of one half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Halves(pub u64);

impl Halves {
    pub const ZERO: Halves = Halves(0);
    pub const HALF: Halves = Halves(1);
    pub const ONE: Halves = Halves(2);
}

impl Add for Halves {
    type Output = Halves;
    fn add(self, rhs: Halves) -> Halves {
        Halves(self.0 + rhs.0)
    }
}

impl Sum for Halves {
    fn sum<I: Iterator<Item = Halves>>(iter: I) -> Halves {
        iter.fold(Halves::ZERO, Add::add)
    }
}

impl fmt::Display for Halves {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Weight that source `x ∈ S` sends to target `y`.
pub fn weight(dims: TorusDims, x: Vertex, y: Vertex, s: &VertexSet) -> Result<Halves> {
    if !s.contains(x) {
        return Err(Error::SourceNotInSet { i: x.i, j: x.j });
    }
    if x == y {
        return Ok(Halves::ONE);
    }
    if s.contains(y) {
        return Ok(Halves::ZERO);
    }
    Ok(match dims.distance(x, y) {
        1 => Halves::ONE,
        2 => Halves::HALF,
        _ => Halves::ZERO,
    })
}

/// Total weight `y` receives from all of `S`.
pub fn received_weight(dims: TorusDims, s: &VertexSet, y: Vertex) -> Halves {
    s.iter()
        .map(|x| weight(dims, x, y, s).expect("source drawn from the set"))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(m: usize, n: usize) -> TorusDims {
        TorusDims::new(m, n).unwrap()
    }

    fn set(d: TorusDims, vs: &[(usize, usize)]) -> VertexSet {
        VertexSet::from_vertices(d, vs.iter().map(|&(i, j)| Vertex::new(i, j))).unwrap()
    }

    #[test]
    fn full_set_is_valid() {
        let d = dims(3, 3);
        assert_eq!(is_2dd_set(d, &VertexSet::full(d)), Ok(Verdict::Valid));
    }

    #[test]
    fn single_vertex_fails_with_minimal_witness() {
        let d = dims(5, 5);
        let verdict = is_2dd_set(d, &set(d, &[(0, 0)])).unwrap();
        // (2, 0) is first in index order: distance 2, so one dist-2 hit.
        assert_eq!(
            verdict,
            Verdict::Invalid(Witness { vertex: Vertex::new(2, 0), neighbor_hits: 0, dist2_hits: 1 })
        );
        let failures = all_failures(d, &set(d, &[(0, 0)])).unwrap();
        let far = failures.iter().find(|w| w.vertex == Vertex::new(2, 2)).unwrap();
        assert_eq!((far.neighbor_hits, far.dist2_hits), (0, 0));
    }

    #[test]
    fn c3_pair_on_3x3() {
        let d = dims(3, 3);
        assert!(is_2dd_set(d, &set(d, &[(0, 0), (1, 1)])).unwrap().is_valid());
    }

    #[test]
    fn dims_mismatch() {
        let s = VertexSet::new(dims(4, 4));
        assert!(matches!(is_2dd_set(dims(4, 5), &s), Err(Error::DimsMismatch { .. })));
    }

    #[test]
    fn coverage_lhs_examples() {
        let d = dims(5, 5);
        let s = set(d, &[(0, 2), (2, 0)]);
        assert_eq!(coverage_lhs(d, &s, Vertex::new(1, 1)), 2);
        assert!(coverage_lhs(d, &s, Vertex::new(0, 2)) >= 2);
        // column 3 is at cyclic distance 2 from column 0 on C5
        assert_eq!(coverage_lhs(d, &set(d, &[(0, 3)]), Vertex::new(0, 0)), 1);
        assert_eq!(coverage_lhs(d, &set(d, &[(1, 2)]), Vertex::new(0, 0)), 0);
    }

    #[test]
    fn weight_examples() {
        let d = dims(5, 5);
        let s = set(d, &[(0, 0), (1, 1)]);
        let o = Vertex::new(0, 0);
        assert_eq!(weight(d, o, o, &s), Ok(Halves::ONE));
        assert_eq!(weight(d, o, Vertex::new(0, 1), &s), Ok(Halves::ONE));
        assert_eq!(weight(d, o, Vertex::new(1, 1), &s), Ok(Halves::ZERO));
        assert_eq!(weight(d, o, Vertex::new(0, 2), &s), Ok(Halves::HALF));
        assert_eq!(
            weight(d, Vertex::new(3, 3), o, &s),
            Err(Error::SourceNotInSet { i: 3, j: 3 })
        );
    }

    #[test]
    fn received_weight_examples() {
        let d = dims(5, 5);
        let s = set(d, &[(0, 2), (2, 0)]);
        assert_eq!(received_weight(d, &s, Vertex::new(1, 1)), Halves::ONE);
        assert!(received_weight(d, &s, Vertex::new(0, 2)) >= Halves::ONE);
        assert_eq!(Halves(3).to_string(), "3/2");
        assert_eq!(Halves(4).to_string(), "2");
    }
}

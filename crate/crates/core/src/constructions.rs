//! Explicit 2DD-sets and the column/row folding map.
//!
//! Each family places a periodic pattern `A` and intersects it with the
//! vertex set; the pattern is never wrapped modulo `n`, so columns past the
//! last full period simply receive fewer vertices. Families whose pattern
//! breaks at the seam for `n ≡ 2 (mod 4)` add correction vertices in
//! column 0.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::torus::{TorusDims, Vertex, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Even coordinates with `x + y ≡ 0 (mod 4)`, for `m, n ≡ 0 (mod 4)`.
    Lattice4,
    /// The diagonal `i ≡ 2j (mod 5)` on `C_5 x C_n`.
    Diag5,
    /// Every other column of row 0 on `C_3 x C_n`.
    C3,
    /// Alternating rows 0 and 2 every other column on `C_4 x C_n`.
    C4,
    /// Two antipodal rows every other column on `C_8 x C_n`.
    C8,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Lattice4, Family::Diag5, Family::C3, Family::C4, Family::C8];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Lattice4 => "lattice4",
            Family::Diag5 => "diag5",
            Family::C3 => "c3",
            Family::C4 => "c4",
            Family::C8 => "c8",
        }
    }

    /// The row count the family is tied to, if any.
    pub fn fixed_m(&self) -> Option<usize> {
        match self {
            Family::Lattice4 => None,
            Family::Diag5 => Some(5),
            Family::C3 => Some(3),
            Family::C4 => Some(4),
            Family::C8 => Some(8),
        }
    }

    pub fn admits(&self, m: usize, n: usize) -> bool {
        match self {
            Family::Lattice4 => m >= 4 && n >= 4 && m.is_multiple_of(4) && n.is_multiple_of(4),
            Family::Diag5 => m == 5 && n >= 3,
            Family::C3 => m == 3 && n >= 3,
            Family::C4 => m == 4 && n >= 4,
            Family::C8 => m == 8 && n >= 8,
        }
    }

    /// Closed-form cardinality of [`construct`] on admissible dims.
    pub fn cardinality(&self, m: usize, n: usize) -> usize {
        match self {
            Family::Lattice4 => 2 * (m / 4) * (n / 4),
            Family::Diag5 => n,
            Family::C3 => n.div_ceil(2),
            Family::C4 if n % 4 == 2 => n / 2 + 1,
            Family::C4 => n.div_ceil(2),
            Family::C8 if n % 4 == 2 => n + 2,
            Family::C8 => 2 * n.div_ceil(2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family '{s}' (expected lattice4, diag5, c3, c4 or c8)"))
    }
}

pub fn construct(family: Family, m: usize, n: usize) -> Result<VertexSet> {
    if !family.admits(m, n) {
        return Err(Error::FamilyDimsMismatch { family, m, n });
    }
    let dims = TorusDims::new(m, n)?;
    let mut s = VertexSet::new(dims);
    let mut put = |i: usize, j: usize| {
        s.insert(Vertex::new(i, j));
    };
    match family {
        Family::Lattice4 => {
            for j in (0..n).step_by(2) {
                for i in (0..m).step_by(2) {
                    if (i + j) % 4 == 0 {
                        put(i, j);
                    }
                }
            }
        }
        Family::Diag5 => {
            for j in 0..n {
                put(2 * j % 5, j);
            }
        }
        Family::C3 => {
            for j in (0..n).step_by(2) {
                put(0, j);
            }
        }
        Family::C4 => {
            for j in (0..n).step_by(4) {
                put(0, j);
            }
            for j in (2..n).step_by(4) {
                put(2, j);
            }
            if n % 4 == 2 {
                put(2, 0);
            }
        }
        Family::C8 => {
            for j in (0..n).step_by(4) {
                put(0, j);
                put(4, j);
            }
            for j in (2..n).step_by(4) {
                put(2, j);
                put(6, j);
            }
            if n % 4 == 2 {
                put(2, 0);
                put(6, 0);
            }
        }
    }
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl Axis {
    fn name(&self) -> &'static str {
        match self {
            Axis::Row => "row",
            Axis::Column => "column",
        }
    }
}

/// Identifies the last two columns (or rows), mapping index `len-1` onto
/// `len-2`. Requires the folded axis to have length at least 7 and the other
/// at least 6.
pub fn fold(dims: TorusDims, s: &VertexSet, axis: Axis) -> Result<(TorusDims, VertexSet)> {
    if s.dims() != dims {
        return Err(Error::DimsMismatch { expected: dims, found: s.dims() });
    }
    let (folded, other) = match axis {
        Axis::Column => (dims.n(), dims.m()),
        Axis::Row => (dims.m(), dims.n()),
    };
    if folded < 7 || other < 6 {
        return Err(Error::DimsTooSmall { dims, axis: axis.name() });
    }
    let reduced = match axis {
        Axis::Column => TorusDims::new(dims.m(), dims.n() - 1)?,
        Axis::Row => TorusDims::new(dims.m() - 1, dims.n())?,
    };
    let mut out = VertexSet::new(reduced);
    for v in s.iter() {
        out.insert(fold_vertex(dims, v, axis));
    }
    Ok((reduced, out))
}

/// The folding map on a single vertex.
pub fn fold_vertex(dims: TorusDims, v: Vertex, axis: Axis) -> Vertex {
    match axis {
        Axis::Column if v.j == dims.n() - 1 => Vertex::new(v.i, v.j - 1),
        Axis::Row if v.i == dims.m() - 1 => Vertex::new(v.i - 1, v.j),
        _ => v,
    }
}

/// The lattice on `(4⌈m/4⌉, 4⌈n/4⌉)` folded down to `(m, n)`, for `m, n >= 6`.
pub fn folded_lattice(m: usize, n: usize) -> Result<VertexSet> {
    if m < 6 || n < 6 {
        return Err(Error::HypothesisViolation(format!(
            "folded lattice needs m, n >= 6, got {m} x {n}"
        )));
    }
    let mut s = construct(Family::Lattice4, 4 * m.div_ceil(4), 4 * n.div_ceil(4))?;
    while s.dims().n() > n {
        s = fold(s.dims(), &s, Axis::Column)?.1;
    }
    while s.dims().m() > m {
        s = fold(s.dims(), &s, Axis::Row)?.1;
    }
    Ok(s)
}

/// The smallest explicit 2DD-set available for `(m, n)`, in user orientation.
pub fn best_construction(dims: TorusDims) -> VertexSet {
    let (canon, swapped) = dims.canonical();
    let (m, n) = (canon.m(), canon.n());
    let mut candidates: Vec<VertexSet> = Family::ALL
        .into_iter()
        .filter(|f| f.admits(m, n))
        .filter_map(|f| construct(f, m, n).ok())
        .collect();
    if let Ok(s) = folded_lattice(m, n) {
        candidates.push(s);
    }
    let best = candidates
        .into_iter()
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(b)))
        .unwrap_or_else(|| VertexSet::full(canon));
    if swapped {
        best.transposed()
    } else {
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_2dd_set;

    fn members(s: &VertexSet) -> Vec<(usize, usize)> {
        s.iter().map(|v| (v.i, v.j)).collect()
    }

    #[test]
    fn c3_example() {
        let s = construct(Family::C3, 3, 10).unwrap();
        assert_eq!(members(&s), vec![(0, 0), (0, 2), (0, 4), (0, 6), (0, 8)]);
    }

    #[test]
    fn c4_example_with_correction() {
        let s = construct(Family::C4, 4, 6).unwrap();
        assert_eq!(members(&s), vec![(0, 0), (2, 0), (2, 2), (0, 4)]);
    }

    #[test]
    fn c8_and_diag5_sizes() {
        assert_eq!(construct(Family::C8, 8, 8).unwrap().len(), 8);
        let d = construct(Family::Diag5, 5, 7).unwrap();
        assert_eq!(d.len(), 7);
        assert!(d.iter().all(|v| v.i == 2 * v.j % 5));
    }

    #[test]
    fn inadmissible_dims() {
        assert_eq!(
            construct(Family::C8, 8, 7),
            Err(Error::FamilyDimsMismatch { family: Family::C8, m: 8, n: 7 })
        );
        assert!(construct(Family::Lattice4, 8, 10).is_err());
        assert!(construct(Family::C3, 4, 10).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>(), Ok(f));
        }
        assert!("c5".parse::<Family>().is_err());
    }

    #[test]
    fn fold_full_set() {
        let d = TorusDims::new(6, 7).unwrap();
        let (r, s) = fold(d, &VertexSet::full(d), Axis::Column).unwrap();
        assert_eq!(r, TorusDims::new(6, 6).unwrap());
        assert_eq!(s, VertexSet::full(r));
    }

    #[test]
    fn fold_hypothesis_boundary() {
        let d = TorusDims::new(6, 6).unwrap();
        assert!(matches!(
            fold(d, &VertexSet::full(d), Axis::Column),
            Err(Error::DimsTooSmall { .. })
        ));
        let d = TorusDims::new(7, 5).unwrap();
        assert!(fold(d, &VertexSet::full(d), Axis::Row).is_err());
    }

    #[test]
    fn folded_lattice_is_valid() {
        for (m, n) in [(6, 6), (6, 7), (7, 9), (10, 11)] {
            let s = folded_lattice(m, n).unwrap();
            assert_eq!(s.dims(), TorusDims::new(m, n).unwrap());
            assert!(s.len() <= 2 * m.div_ceil(4) * n.div_ceil(4));
            assert!(is_2dd_set(s.dims(), &s).unwrap().is_valid(), "{m}x{n}");
        }
    }

    #[test]
    fn best_construction_respects_orientation() {
        let d = TorusDims::new(10, 3).unwrap();
        let s = best_construction(d);
        assert_eq!(s.dims(), d);
        assert_eq!(s.len(), 5);
        assert!(is_2dd_set(d, &s).unwrap().is_valid());
    }
}

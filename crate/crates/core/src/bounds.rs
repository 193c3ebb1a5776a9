//! Closed-form bounds on the disjunctive domination number.

use std::fmt;

use crate::constructions::Family;
use crate::error::{Error, Result};
use crate::torus::TorusDims;

/// Where a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundSource {
    /// `mn/9 <= γ <= 2⌈m/4⌉⌈n/4⌉` for `m, n >= 5`.
    Theorem1,
    /// `γ(C_3 x C_n) = ⌈n/2⌉`.
    Theorem2,
    /// `γ(C_4 x C_n)`, with the `n ≡ 2 (mod 4)` correction.
    Theorem3,
    /// `n <= γ(C_8 x C_n)` with the mod-4 upper bounds.
    Theorem4,
    /// The cardinality of an explicit construction.
    Construction(Family),
    /// The weight-capacity argument run with the actual sphere sizes.
    DerivedCapacity,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundSource::Theorem1 => f.write_str("Thm 1"),
            BoundSource::Theorem2 => f.write_str("Thm 2"),
            BoundSource::Theorem3 => f.write_str("Thm 3"),
            BoundSource::Theorem4 => f.write_str("Thm 4"),
            BoundSource::Construction(fam) => {
                let thm = match fam {
                    Family::Lattice4 | Family::Diag5 => 1,
                    Family::C3 => 2,
                    Family::C4 => 3,
                    Family::C8 => 4,
                };
                write!(f, "Thm {thm} construction {fam}")
            }
            BoundSource::DerivedCapacity => f.write_str("derived-capacity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundInterval {
    pub lower: usize,
    pub upper: usize,
    pub exact: Option<usize>,
    pub lower_sources: Vec<BoundSource>,
    pub upper_sources: Vec<BoundSource>,
}

impl fmt::Display for BoundInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[BoundSource]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        match self.exact {
            Some(g) => {
                let mut tags = self.lower_sources.clone();
                tags.extend(self.upper_sources.iter().copied());
                tags.sort();
                tags.dedup();
                write!(f, "gamma = {g} ({})", join(&tags))
            }
            None => write!(
                f,
                "{} ≤ gamma ≤ {} (lower: {}; upper: {})",
                self.lower,
                self.upper,
                join(&self.lower_sources),
                join(&self.upper_sources)
            ),
        }
    }
}

fn require_five(m: usize, n: usize) -> Result<()> {
    if m < 5 || n < 5 {
        return Err(Error::HypothesisViolation(format!("general bounds need m, n >= 5, got {m} x {n}")));
    }
    Ok(())
}

/// `⌈mn/9⌉`.
pub fn lower_bound_general(m: usize, n: usize) -> Result<usize> {
    require_five(m, n)?;
    Ok((m * n).div_ceil(9))
}

/// `2⌈m/4⌉⌈n/4⌉`.
pub fn upper_bound_general(m: usize, n: usize) -> Result<usize> {
    require_five(m, n)?;
    Ok(2 * m.div_ceil(4) * n.div_ceil(4))
}

/// Coverage a single vertex can supply, in half units: `2(1 + |Γ|) + |Γ₂|`.
pub fn capacity_halves(dims: TorusDims) -> usize {
    2 * (1 + dims.sphere_offsets(1).len()) + dims.sphere_offsets(2).len()
}

/// `⌈2mn / capacity⌉`; each vertex needs two half units of coverage.
pub fn capacity_lower_bound(dims: TorusDims) -> usize {
    (2 * dims.vertex_count()).div_ceil(capacity_halves(dims)).max(1)
}

/// The exact value where one of the closed formulas applies.
pub fn known_gamma(m: usize, n: usize) -> Option<usize> {
    known_gamma_tagged(m, n).map(|(g, _)| g)
}

fn known_gamma_tagged(m: usize, n: usize) -> Option<(usize, BoundSource)> {
    let (m, n) = if m <= n { (m, n) } else { (n, m) };
    match m {
        3 => Some((n.div_ceil(2), BoundSource::Theorem2)),
        4 if n % 4 == 2 => Some((n / 2 + 1, BoundSource::Theorem3)),
        4 => Some((n.div_ceil(2), BoundSource::Theorem3)),
        8 if n % 4 == 0 => Some((n, BoundSource::Theorem4)),
        _ => None,
    }
}

/// The tightest interval all applicable results give for `γ(C_m x C_n)`.
pub fn known_bounds(m: usize, n: usize) -> Result<BoundInterval> {
    let dims = TorusDims::new(m, n)?;
    let (m, n) = if m <= n { (m, n) } else { (n, m) };

    let mut lower: Vec<(usize, BoundSource)> = Vec::new();
    let mut upper: Vec<(usize, BoundSource)> = Vec::new();

    if m >= 5 {
        lower.push((lower_bound_general(m, n)?, BoundSource::Theorem1));
        upper.push((upper_bound_general(m, n)?, BoundSource::Theorem1));
    } else {
        lower.push((capacity_lower_bound(dims), BoundSource::DerivedCapacity));
    }
    if let Some((g, src)) = known_gamma_tagged(m, n) {
        lower.push((g, src));
        upper.push((g, src));
    }
    if m == 8 && n >= 8 {
        lower.push((n, BoundSource::Theorem4));
        let up = match n % 4 {
            0 => n,
            2 => n + 2,
            _ => n + 1,
        };
        upper.push((up, BoundSource::Theorem4));
    }
    for fam in Family::ALL {
        if fam.admits(m, n) {
            upper.push((fam.cardinality(m, n), BoundSource::Construction(fam)));
        }
    }

    let lo = lower.iter().map(|&(v, _)| v).max().expect("a lower bound always applies");
    let hi = upper.iter().map(|&(v, _)| v).min().unwrap_or(m * n);
    let pick = |list: &[(usize, BoundSource)], v: usize| {
        let mut tags: Vec<_> = list.iter().filter(|&&(x, _)| x == v).map(|&(_, s)| s).collect();
        tags.sort();
        tags.dedup();
        tags
    };
    let mut upper_sources = pick(&upper, hi);
    if upper_sources.is_empty() {
        upper_sources.push(BoundSource::DerivedCapacity);
    }
    Ok(BoundInterval {
        lower: lo,
        upper: hi,
        exact: (lo == hi).then_some(lo),
        lower_sources: pick(&lower, lo),
        upper_sources,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_bounds() {
        assert_eq!(lower_bound_general(5, 5), Ok(3));
        assert_eq!(lower_bound_general(9, 9), Ok(9));
        assert_eq!(lower_bound_general(5, 7), Ok(4));
        assert_eq!(upper_bound_general(5, 5), Ok(8));
        assert_eq!(upper_bound_general(8, 8), Ok(8));
        assert_eq!(upper_bound_general(6, 9), Ok(12));
        assert!(lower_bound_general(4, 9).is_err());
        assert!(upper_bound_general(9, 4).is_err());
    }

    #[test]
    fn exact_formulas() {
        assert_eq!(known_gamma(3, 10), Some(5));
        assert_eq!(known_gamma(10, 3), Some(5));
        assert_eq!(known_gamma(4, 6), Some(4));
        assert_eq!(known_gamma(8, 12), Some(12));
        assert_eq!(known_gamma(8, 9), None);
        assert_eq!(known_gamma(5, 5), None);
    }

    #[test]
    fn capacity_matches_general_bound_from_five() {
        for m in 5..12 {
            for n in 5..12 {
                let d = TorusDims::new(m, n).unwrap();
                assert_eq!(capacity_halves(d), 18);
                assert_eq!(capacity_lower_bound(d), lower_bound_general(m, n).unwrap());
            }
        }
        assert_eq!(capacity_halves(TorusDims::new(3, 7).unwrap()), 2 * 5 + 6);
        assert_eq!(capacity_halves(TorusDims::new(4, 7).unwrap()), 2 * 5 + 7);
    }

    #[test]
    fn interval_examples() {
        let b = known_bounds(8, 9).unwrap();
        assert_eq!((b.lower, b.upper, b.exact), (9, 10, None));
        assert!(b.lower_sources.contains(&BoundSource::Theorem4));

        let b = known_bounds(8, 10).unwrap();
        assert_eq!((b.lower, b.upper), (10, 12));
        assert!(b.to_string().starts_with("10 ≤ gamma ≤ 12"));

        let b = known_bounds(3, 7).unwrap();
        assert_eq!(b.exact, Some(4));

        let b = known_bounds(3, 51).unwrap();
        assert_eq!(b.to_string(), "gamma = 26 (Thm 2, Thm 2 construction c3)");

        let b = known_bounds(5, 5).unwrap();
        assert_eq!((b.lower, b.upper), (3, 5));
        assert_eq!(b.lower_sources, vec![BoundSource::Theorem1]);
        assert_eq!(b.upper_sources, vec![BoundSource::Construction(Family::Diag5)]);

        let b = known_bounds(8, 8).unwrap();
        assert_eq!(b.exact, Some(8));
    }

    #[test]
    fn small_dims_use_capacity() {
        let b = known_bounds(3, 3).unwrap();
        assert_eq!(b.exact, Some(2));
        let b = known_bounds(4, 4).unwrap();
        assert_eq!(b.exact, Some(2));
        assert!(known_bounds(2, 7).is_err());
    }

    #[test]
    fn symmetric() {
        for m in 3..14 {
            for n in 3..14 {
                assert_eq!(known_bounds(m, n), known_bounds(n, m));
            }
        }
    }

    #[test]
    fn formulas_within_general_bounds() {
        for n in 5..60 {
            for m in [5usize, 8] {
                if let Some(g) = known_gamma(m, n) {
                    assert!(lower_bound_general(m, n).unwrap() <= g);
                    assert!(g <= upper_bound_general(m, n).unwrap());
                }
            }
        }
    }
}

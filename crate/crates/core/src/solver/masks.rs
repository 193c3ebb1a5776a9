use crate::error::{Error, Result};
use crate::torus::{TorusDims, VertexSet};

/// Neighbourhood bitmasks for tori with at most 128 vertices.
pub(crate) struct Masks {
    pub dims: TorusDims,
    pub len: usize,
    /// `N[v]`, the closed neighbourhood.
    pub closed: Vec<u128>,
    /// `Γ₂(v)`.
    pub ring2: Vec<u128>,
}

impl Masks {
    pub fn new(dims: TorusDims) -> Result<Self> {
        let len = dims.vertex_count();
        if len > 128 {
            return Err(Error::InstanceTooLarge { dims });
        }
        let to_mask = |s: &VertexSet| s.indices().fold(0u128, |acc, k| acc | 1 << k);
        let mut closed = Vec::with_capacity(len);
        let mut ring2 = Vec::with_capacity(len);
        for v in dims.vertices() {
            let mut ball = dims.sphere(v, 1);
            ball.insert(v);
            closed.push(to_mask(&ball));
            ring2.push(to_mask(&dims.sphere(v, 2)));
        }
        Ok(Self { dims, len, closed, ring2 })
    }

    /// The linear coverage value `2|N[v] ∩ S| + |Γ₂(v) ∩ S|`.
    #[inline]
    pub fn coverage(&self, s: u128, v: usize) -> u32 {
        2 * (s & self.closed[v]).count_ones() + (s & self.ring2[v]).count_ones()
    }

    pub fn is_dominating(&self, s: u128) -> bool {
        (0..self.len).all(|v| self.coverage(s, v) >= 2)
    }

    pub fn to_set(&self, s: u128) -> VertexSet {
        VertexSet::from_indices(self.dims, bits(s))
    }
}

pub(crate) fn bits(mut s: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if s == 0 {
            return None;
        }
        let b = s.trailing_zeros() as usize;
        s &= s - 1;
        Some(b)
    })
}

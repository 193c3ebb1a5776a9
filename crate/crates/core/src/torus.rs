//! The torus grid graph `C_m x C_n`, represented analytically.
//!
//! Vertices are pairs `(i, j)` with `i` in `[m]` (row) and `j` in `[n]`
//! (column). Nothing about adjacency is stored: distances follow from the
//! two cyclic distances, and spheres are produced by enumerating offsets and
//! collapsing the ones that land on the same vertex, which happens on `C_3`
//! and `C_4`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// The pair `(m, n)` of a torus `C_m x C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusDims {
    m: usize,
    n: usize,
}

impl TorusDims {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m < 3 || n < 3 {
            return Err(Error::DimensionTooSmall { m, n });
        }
        Ok(Self { m, n })
    }

    /// Number of rows, the length of each column cycle.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    /// Orientation with `m <= n`. The flag is true when the axes were swapped.
    pub fn canonical(&self) -> (TorusDims, bool) {
        if self.m <= self.n {
            (*self, false)
        } else {
            (self.transposed(), true)
        }
    }

    pub fn transposed(&self) -> TorusDims {
        TorusDims { m: self.n, n: self.m }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.i < self.m && v.j < self.n
    }

    pub fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { i: v.i, j: v.j, dims: *self })
        }
    }

    /// Column-major index `i + m * j`.
    pub fn index(&self, v: Vertex) -> usize {
        v.i + self.m * v.j
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        Vertex { i: index % self.m, j: index / self.m }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count()).map(|k| self.vertex(k))
    }

    /// `v` shifted by `(di, dj)` with wrap-around.
    pub fn offset(&self, v: Vertex, di: isize, dj: isize) -> Vertex {
        Vertex {
            i: wrap(v.i as isize + di, self.m),
            j: wrap(v.j as isize + dj, self.n),
        }
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        cyclic_distance(u.i, v.i, self.m) + cyclic_distance(u.j, v.j, self.n)
    }

    /// Offsets `(di, dj)` from the origin that reach exactly distance `r`.
    ///
    /// Every vertex at distance `r` is reached by some offset with
    /// `|di| + |dj| = r`; offsets that wrap to a closer vertex are dropped and
    /// duplicates collapsed. By vertex transitivity the same list serves
    /// every centre.
    pub fn sphere_offsets(&self, r: usize) -> Vec<(usize, usize)> {
        let origin = Vertex { i: 0, j: 0 };
        let r = r as isize;
        let mut seen = VertexSet::new(*self);
        let mut out = Vec::new();
        for di in -r..=r {
            let rest = r - di.abs();
            let djs: &[isize] = if rest == 0 { &[0] } else { &[-rest, rest] };
            for &dj in djs {
                let u = self.offset(origin, di, dj);
                if self.distance(origin, u) == r as usize && seen.insert(u) {
                    out.push((u.i, u.j));
                }
            }
        }
        out.sort_by_key(|&(i, j)| (j, i));
        out
    }

    pub fn sphere(&self, v: Vertex, r: usize) -> VertexSet {
        let mut out = VertexSet::new(*self);
        for (di, dj) in self.sphere_offsets(r) {
            out.insert(self.offset(v, di as isize, dj as isize));
        }
        out
    }
}

impl fmt::Display for TorusDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{} x C{}", self.m, self.n)
    }
}

pub fn make_dims(m: usize, n: usize) -> Result<TorusDims> {
    TorusDims::new(m, n)
}

fn wrap(x: isize, k: usize) -> usize {
    x.rem_euclid(k as isize) as usize
}

fn cyclic_distance(a: usize, b: usize, k: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(k - d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub i: usize,
    pub j: usize,
}

impl Vertex {
    pub fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn transposed(&self) -> Vertex {
        Vertex { i: self.j, j: self.i }
    }
}

/// Column-then-row order, which is also index order.
impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.j, self.i).cmp(&(other.j, other.i))
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

/// A subset of the vertices of a torus, one bit per vertex in index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    dims: TorusDims,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(dims: TorusDims) -> Self {
        Self { dims, words: vec![0; dims.vertex_count().div_ceil(64)] }
    }

    pub fn full(dims: TorusDims) -> Self {
        let mut s = Self::new(dims);
        for k in 0..dims.vertex_count() {
            s.words[k / 64] |= 1 << (k % 64);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(dims: TorusDims, vertices: I) -> Result<Self> {
        let mut s = Self::new(dims);
        for v in vertices {
            dims.check(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(dims: TorusDims, indices: I) -> Self {
        let mut s = Self::new(dims);
        for k in indices {
            assert!(k < dims.vertex_count(), "index {k} outside {dims}");
            s.words[k / 64] |= 1 << (k % 64);
        }
        s
    }

    pub fn dims(&self) -> TorusDims {
        self.dims
    }

    /// Inserts `v`, returning true if it was not already present.
    pub fn insert(&mut self, v: Vertex) -> bool {
        let k = self.dims.index(v);
        let bit = 1 << (k % 64);
        let fresh = self.words[k / 64] & bit == 0;
        self.words[k / 64] |= bit;
        fresh
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let k = self.dims.index(v);
        let bit = 1 << (k % 64);
        let present = self.words[k / 64] & bit != 0;
        self.words[k / 64] &= !bit;
        present
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.dims.contains(v) && self.contains_index(self.dims.index(v))
    }

    pub fn contains_index(&self, k: usize) -> bool {
        self.words[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Members in index order, i.e. sorted by `(j, i)`.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.indices().map(|k| self.dims.vertex(k))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.dims == other.dims && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    /// Number of members in column `j`.
    pub fn column_count(&self, j: usize) -> usize {
        let m = self.dims.m;
        (j * m..(j + 1) * m).filter(|&k| self.contains_index(k)).count()
    }

    /// The same set on the transposed torus.
    pub fn transposed(&self) -> VertexSet {
        let mut out = VertexSet::new(self.dims.transposed());
        for v in self.iter() {
            out.insert(v.transposed());
        }
        out
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        self.indices().cmp(other.indices())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({}, ", self.dims)?;
        f.debug_set().entries(self.iter().map(|v| (v.i, v.j))).finish()?;
        write!(f, ")")
    }
}

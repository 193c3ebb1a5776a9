//! Column sequences, block decompositions and the column inequalities.
//!
//! For a set `S` the sequence is `x_j = |S ∩ T_j|`. When some `x_j` is zero
//! the sequence is rotated to start positive and end with a zero, then cut
//! into blocks, each a maximal positive run followed by its maximal zero run.
//! The `(a, b)` block value of a block is `Σ (a·x − b)` over its entries.

use crate::error::{Error, Result};
use crate::torus::{TorusDims, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnSequence {
    pub dims: TorusDims,
    pub counts: Vec<usize>,
}

impl ColumnSequence {
    pub fn new(dims: TorusDims, counts: Vec<usize>) -> Result<Self> {
        if counts.len() != dims.n() {
            return Err(Error::HypothesisViolation(format!(
                "sequence has {} entries, {} has {} columns",
                counts.len(),
                dims,
                dims.n()
            )));
        }
        if let Some(&x) = counts.iter().find(|&&x| x > dims.m()) {
            return Err(Error::HypothesisViolation(format!("count {x} exceeds m = {}", dims.m())));
        }
        Ok(Self { dims, counts })
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// `x_ℓ` for any integer `ℓ`, read cyclically.
    pub fn at(&self, l: isize) -> usize {
        self.counts[l.rem_euclid(self.counts.len() as isize) as usize]
    }
}

pub fn column_sequence(dims: TorusDims, s: &VertexSet) -> ColumnSequence {
    ColumnSequence { dims, counts: (0..dims.n()).map(|j| s.column_count(j)).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Position of the block's first entry in the rotated sequence.
    pub start: usize,
    pub positives: usize,
    pub zeros: usize,
    /// The block's entries, positives then zeros.
    pub values: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Rotated entry `k` is original entry `(k + rotation) mod n`.
    pub rotation: usize,
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn rotated(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|b| b.values.iter().copied()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProperForm {
    /// Every column is occupied, so `|S| >= n`.
    AllPositive,
    Blocks(BlockDecomposition),
}

/// Rotates by the smallest offset that puts a positive entry first and a zero
/// last, then splits into blocks.
pub fn rotate_to_proper(seq: &ColumnSequence) -> Result<ProperForm> {
    let x = &seq.counts;
    let n = x.len();
    if x.iter().all(|&c| c == 0) {
        return Err(Error::AllZero);
    }
    if x.iter().all(|&c| c > 0) {
        return Ok(ProperForm::AllPositive);
    }
    let rotation = (0..n)
        .find(|&r| x[r] > 0 && x[(r + n - 1) % n] == 0)
        .expect("a mixed cyclic sequence has a zero-to-positive step");
    let rotated: Vec<usize> = (0..n).map(|k| x[(k + rotation) % n]).collect();

    let mut blocks = Vec::new();
    let mut k = 0;
    while k < n {
        let start = k;
        while k < n && rotated[k] > 0 {
            k += 1;
        }
        let positives = k - start;
        while k < n && rotated[k] == 0 {
            k += 1;
        }
        blocks.push(Block {
            start,
            positives,
            zeros: k - start - positives,
            values: rotated[start..k].to_vec(),
        });
    }
    Ok(ProperForm::Blocks(BlockDecomposition { rotation, blocks }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbBlockValues {
    pub a: i64,
    pub b: i64,
    pub values: Vec<i64>,
}

impl AbBlockValues {
    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }
}

pub fn ab_block_values(blocks: &BlockDecomposition, a: u32, b: u32) -> AbBlockValues {
    let (a, b) = (i64::from(a), i64::from(b));
    let values = blocks
        .blocks
        .iter()
        .map(|blk| blk.values.iter().map(|&x| a * x as i64 - b).sum())
        .collect();
    AbBlockValues { a, b, values }
}

/// One evaluated column inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColumnCheck {
    pub index: usize,
    pub lhs: usize,
    pub rhs: usize,
}

impl ColumnCheck {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }
}

/// `x_{j-2} + 4x_{j-1} + 8x_j + 4x_{j+1} + x_{j+2} >= 2m` at every column.
pub fn check_lemma1(dims: TorusDims, seq: &ColumnSequence) -> Result<Vec<ColumnCheck>> {
    if dims.n() < 5 {
        return Err(Error::HypothesisViolation(format!("column inequality needs n >= 5, got {dims}")));
    }
    Ok((0..dims.n())
        .map(|j| {
            let j = j as isize;
            let lhs = seq.at(j - 2) + 4 * seq.at(j - 1) + 8 * seq.at(j) + 4 * seq.at(j + 1) + seq.at(j + 2);
            ColumnCheck { index: j as usize, lhs, rhs: 2 * dims.m() }
        })
        .collect())
}

/// Longest cyclic run of zeros.
pub fn max_zero_run(seq: &ColumnSequence) -> usize {
    let x = &seq.counts;
    let n = x.len();
    let Some(anchor) = x.iter().position(|&c| c > 0) else {
        return n;
    };
    let mut best = 0;
    let mut run = 0;
    for k in 1..=n {
        if x[(anchor + k) % n] == 0 {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    best
}

/// Four consecutive columns of a 2DD-set of `C_4 x C_n` hold at least two vertices.
pub fn check_window4(dims: TorusDims, seq: &ColumnSequence) -> Result<Vec<ColumnCheck>> {
    if dims.m() != 4 || dims.n() < 5 {
        return Err(Error::HypothesisViolation(format!("window check needs m = 4 and n >= 5, got {dims}")));
    }
    Ok((0..dims.n())
        .map(|l| {
            let lhs = (0..4).map(|t| seq.at((l + t) as isize)).sum();
            ColumnCheck { index: l, lhs, rhs: 2 }
        })
        .collect())
}

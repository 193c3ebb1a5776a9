use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::{Budget, Meter, Method, SolveReport};
use crate::constructions::best_construction;
use crate::error::{Error, Result};
use crate::torus::{TorusDims, Vertex, VertexSet};

/// Which five-column windows dominate their middle column, for a fixed `m`.
///
/// A column pattern is a subset of `[m]` as an `m`-bit mask. A window packs
/// the patterns of columns `j-2 .. j+2` from the low bits up. Valid for
/// `n >= 5`, where those five columns are distinct and at column distance
/// `|offset|` from `j`.
pub struct CoverTable {
    m: usize,
    ok: Vec<bool>,
}

impl CoverTable {
    pub fn new(m: usize) -> Self {
        assert!((3..=4).contains(&m), "cover table supports m = 3 or 4");
        let patterns = 1usize << m;
        let row_dist = |a: usize, b: usize| {
            let d = a.abs_diff(b);
            d.min(m - d)
        };
        // Coverage units one vertex gives, by row distance then column distance.
        let unit = |dr: usize, dc: usize| -> u32 {
            match dr {
                0 => [2, 2, 1][dc],
                1 => [2, 1, 0][dc],
                2 => [1, 0, 0][dc],
                _ => 0,
            }
        };
        // contrib[column distance][pattern][row]
        let contrib: Vec<Vec<Vec<u32>>> = (0..3)
            .map(|dc| {
                (0..patterns)
                    .map(|p| {
                        (0..m)
                            .map(|i| (0..m).filter(|&r| p >> r & 1 == 1).map(|r| unit(row_dist(i, r), dc)).sum())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mask = patterns - 1;
        let ok = (0..1usize << (5 * m))
            .map(|w| {
                let col = |k: usize| w >> (k * m) & mask;
                (0..m).all(|i| {
                    contrib[2][col(0)][i]
                        + contrib[1][col(1)][i]
                        + contrib[0][col(2)][i]
                        + contrib[1][col(3)][i]
                        + contrib[2][col(4)][i]
                        >= 2
                })
            })
            .collect();
        Self { m, ok }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    fn packed(&self, window: usize) -> bool {
        self.ok[window]
    }

    /// Whether the middle of five consecutive column patterns is dominated.
    pub fn covered(&self, patterns: [usize; 5]) -> bool {
        let w = patterns.iter().enumerate().fold(0, |acc, (k, &p)| acc | p << (k * self.m));
        self.ok[w]
    }
}

/// Row automorphisms of `C_m` (rotations and reflections) acting on patterns.
fn row_symmetries(m: usize) -> Vec<Vec<usize>> {
    let patterns = 1usize << m;
    let mut maps = Vec::new();
    for r in 0..m {
        for reflect in [false, true] {
            let image = |i: usize| if reflect { (r + m - i) % m } else { (i + r) % m };
            maps.push(
                (0..patterns)
                    .map(|p| (0..m).filter(|&i| p >> i & 1 == 1).fold(0, |acc, i| acc | 1 << image(i)))
                    .collect(),
            );
        }
    }
    maps
}

struct Scratch {
    cost_cur: Vec<u16>,
    cost_next: Vec<u16>,
    active_cur: Vec<u32>,
    active_next: Vec<u32>,
    back: Vec<Vec<u8>>,
}

impl Scratch {
    fn new(states: usize, n: usize) -> Self {
        Self {
            cost_cur: vec![u16::MAX; states],
            cost_next: vec![u16::MAX; states],
            active_cur: Vec::new(),
            active_next: Vec::new(),
            back: vec![vec![0; states]; n],
        }
    }
}

struct Instance<'a> {
    m: usize,
    n: usize,
    table: &'a CoverTable,
    meter: &'a Meter,
}

impl Instance<'_> {
    /// Cheapest cyclic pattern sequence starting with `start` in which every
    /// column is dominated and no four-column window holds fewer vertices
    /// than `start` does. Returns `None` when nothing costs at most `limit`.
    fn run(&self, start: u32, limit: usize, scratch: &mut Scratch) -> Option<(usize, Vec<usize>)> {
        let (m, n) = (self.m, self.n);
        let pmask = (1u32 << m) - 1;
        let mask4 = (1u64 << (4 * m)) - 1;
        let mask5 = (1u64 << (5 * m)) - 1;
        let floor = start.count_ones() as usize;

        scratch.active_cur.clear();
        scratch.active_cur.push(start);
        scratch.cost_cur[start as usize] = floor as u16;

        for j in 4..n {
            scratch.active_cur.sort_unstable();
            // Later columns contain this many disjoint four-column windows.
            let ahead = (n - 1 - j) / 4 * floor;
            let mut transitions = 0u64;
            for idx in 0..scratch.active_cur.len() {
                let st = scratch.active_cur[idx];
                let c = scratch.cost_cur[st as usize] as usize;
                for q in 0..=pmask {
                    let c2 = c + q.count_ones() as usize;
                    if c2 + ahead > limit {
                        continue;
                    }
                    transitions += 1;
                    let w = st as usize | (q as usize) << (4 * m);
                    if !self.table.packed(w) {
                        continue;
                    }
                    let ns = (w >> m) as u32;
                    if (ns.count_ones() as usize) < floor {
                        continue;
                    }
                    let slot = &mut scratch.cost_next[ns as usize];
                    if (c2 as u16) < *slot {
                        if *slot == u16::MAX {
                            scratch.active_next.push(ns);
                        }
                        *slot = c2 as u16;
                        scratch.back[j][ns as usize] = (st & pmask) as u8;
                    }
                }
            }
            for &st in &scratch.active_cur {
                scratch.cost_cur[st as usize] = u16::MAX;
            }
            scratch.active_cur.clear();
            std::mem::swap(&mut scratch.cost_cur, &mut scratch.cost_next);
            std::mem::swap(&mut scratch.active_cur, &mut scratch.active_next);
            if !self.meter.tick(transitions.max(1)) {
                break;
            }
        }

        let mut best: Option<(usize, u32)> = None;
        if !self.meter.stopped() {
            scratch.active_cur.sort_unstable();
            for &fin in &scratch.active_cur {
                let c = scratch.cost_cur[fin as usize] as usize;
                if c > limit || best.is_some_and(|(b, _)| c >= b) {
                    continue;
                }
                // columns n-4 .. n-1 followed by columns 0 .. 3
                let ring = fin as u64 | (start as u64) << (4 * m);
                let closes = (0..4).all(|k| self.table.packed((ring >> (k * m) & mask5) as usize))
                    && (1..4).all(|k| (ring >> (k * m) & mask4).count_ones() as usize >= floor);
                if closes {
                    best = Some((c, fin));
                }
            }
        }
        for &st in &scratch.active_cur {
            scratch.cost_cur[st as usize] = u16::MAX;
        }
        scratch.active_cur.clear();

        let (cost, fin) = best?;
        let mut cols = vec![0usize; n];
        for (k, col) in cols.iter_mut().take(4).enumerate() {
            *col = (start >> (k * m) & pmask) as usize;
        }
        let mut state = fin;
        for j in (4..n).rev() {
            cols[j] = (state >> (3 * m)) as usize;
            let dropped = scratch.back[j][state as usize] as u32;
            state = (state << m) & mask4 as u32 | dropped;
        }
        debug_assert_eq!(state, start);
        Some((cost, cols))
    }
}

/// Exact solve for `m <= 4`, `n >= 5` by dynamic programming over columns.
///
/// The sequence is rotated so that its lightest four-column window comes
/// first, and row symmetries reduce that window to a canonical form. With an
/// upper bound `U` from a construction, the lightest window holds at most
/// `4U/n` vertices, which limits the start windows to a small set. Start
/// windows are processed in parallel; ties between equally cheap results are
/// broken by the lexicographically smallest vertex set.
pub fn solve_column_dp(dims: TorusDims, budget: &Budget) -> Result<SolveReport> {
    let (m, n) = (dims.m(), dims.n());
    if m > 4 || n < 5 {
        return Err(Error::StateSpaceTooLarge { dims });
    }
    let meter = Meter::new(budget);
    let incumbent = best_construction(dims);
    let upper = incumbent.len();
    let table = CoverTable::new(m);
    let syms = row_symmetries(m);
    let pmask = (1usize << m) - 1;
    let states = 1usize << (4 * m);
    let max_floor = 4 * upper / n;

    let starts: Vec<u32> = (0..states as u32)
        .filter(|&w| w.count_ones() as usize <= max_floor)
        .filter(|&w| {
            syms.iter().all(|g| {
                let image = (0..4).fold(0u32, |acc, k| {
                    acc | (g[w as usize >> (k * m) & pmask] as u32) << (k * m)
                });
                w <= image
            })
        })
        .collect();

    let inst = Instance { m, n, table: &table, meter: &meter };
    let shared = AtomicUsize::new(upper);
    let results: Vec<(usize, VertexSet)> = starts
        .par_iter()
        .map_init(
            || Scratch::new(states, n),
            |scratch, &start| {
                if meter.stopped() {
                    return None;
                }
                let limit = shared.load(Ordering::Relaxed);
                let (cost, cols) = inst.run(start, limit, scratch)?;
                shared.fetch_min(cost, Ordering::Relaxed);
                Some((cost, patterns_to_set(dims, &cols)))
            },
        )
        .flatten()
        .collect();

    let best = results
        .into_iter()
        .min_by(|(ca, a), (cb, b)| ca.cmp(cb).then_with(|| a.lex_cmp(b)));
    let proven = !meter.stopped();
    match best {
        Some((cost, set)) if cost <= upper => meter.report(set, Method::Dp, proven),
        _ => meter.report(incumbent, Method::Dp, false),
    }
}

fn patterns_to_set(dims: TorusDims, cols: &[usize]) -> VertexSet {
    let mut s = VertexSet::new(dims);
    for (j, &p) in cols.iter().enumerate() {
        for i in (0..dims.m()).filter(|&i| p >> i & 1 == 1) {
            s.insert(Vertex::new(i, j));
        }
    }
    s
}

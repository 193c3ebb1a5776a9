use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::masks::{bits, Masks};
use super::{Budget, Meter, Method, SolveReport};
use crate::bounds::capacity_halves;
use crate::constructions::best_construction;
use crate::error::Result;
use crate::torus::TorusDims;

/// Subtrees down to this depth become independent tasks.
const SPLIT_DEPTH: usize = 2;

#[derive(Clone, Copy)]
struct Node {
    chosen: u128,
    forbidden: u128,
    size: usize,
}

enum Probe {
    Dominating,
    Prune,
    Branch { vertex: usize, lower: usize },
}

struct Search<'a> {
    masks: &'a Masks,
    capacity: usize,
    meter: &'a Meter,
    /// Largest size still worth finding, shared by all tasks.
    target: &'a AtomicUsize,
}

impl Search<'_> {
    /// Deficit-based lower bound on the vertices still needed, plus the first
    /// undominated vertex.
    fn probe(&self, node: &Node) -> Probe {
        let open = !(node.chosen | node.forbidden);
        let mut deficit = 0usize;
        let mut first = None;
        for v in 0..self.masks.len {
            let have = self.masks.coverage(node.chosen, v);
            if have >= 2 {
                continue;
            }
            if have + self.masks.coverage(open, v) < 2 {
                return Probe::Prune;
            }
            deficit += 2 - have as usize;
            first.get_or_insert(v);
        }
        match first {
            None => Probe::Dominating,
            Some(vertex) => Probe::Branch { vertex, lower: deficit.div_ceil(self.capacity) },
        }
    }

    fn candidates(&self, node: &Node, vertex: usize) -> u128 {
        (self.masks.closed[vertex] | self.masks.ring2[vertex]) & !(node.chosen | node.forbidden)
    }

    fn children(&self, node: &Node, vertex: usize) -> impl Iterator<Item = Node> {
        let cands = self.candidates(node, vertex);
        let node = *node;
        let mut earlier = 0u128;
        bits(cands).map(move |u| {
            let child = Node {
                chosen: node.chosen | 1 << u,
                forbidden: node.forbidden | earlier,
                size: node.size + 1,
            };
            earlier |= 1 << u;
            child
        })
    }

    /// Depth-first search below `node`. `best` is the smallest size found in
    /// this task so far; a node is expanded only if it could beat both that
    /// and the shared target.
    fn dfs(&self, node: Node, best: &mut Option<(usize, u128)>) {
        if !self.meter.tick(1) {
            return;
        }
        let threshold = {
            let shared = self.target.load(Ordering::Relaxed);
            best.map_or(shared, |(b, _)| shared.min(b - 1))
        };
        match self.probe(&node) {
            Probe::Prune => {}
            Probe::Dominating => {
                if node.size <= threshold {
                    *best = Some((node.size, node.chosen));
                    self.target.fetch_min(node.size, Ordering::Relaxed);
                }
            }
            Probe::Branch { vertex, lower } => {
                if node.size + lower > threshold {
                    return;
                }
                for child in self.children(&node, vertex) {
                    self.dfs(child, best);
                    if self.meter.stopped() {
                        return;
                    }
                }
            }
        }
    }

    /// Frontier nodes at `SPLIT_DEPTH`, in depth-first order.
    fn split(&self, node: Node, depth: usize, out: &mut Vec<Node>) {
        if depth == SPLIT_DEPTH {
            out.push(node);
            return;
        }
        self.meter.tick(1);
        let threshold = self.target.load(Ordering::Relaxed);
        match self.probe(&node) {
            Probe::Prune => {}
            Probe::Dominating => out.push(node),
            Probe::Branch { vertex, lower } => {
                if node.size + lower > threshold {
                    return;
                }
                for child in self.children(&node, vertex) {
                    self.split(child, depth + 1, out);
                }
            }
        }
    }
}

/// Branch and bound on the first undominated vertex.
///
/// Every completion must add a vertex of `N[v] ∪ Γ₂(v)` for the first
/// undominated `v`; later siblings exclude the candidates tried before them.
/// Each selected vertex adds at most `2(1 + |Γ|) + |Γ₂|` to the total
/// coverage, which bounds the vertices still needed. The search looks only
/// for sets smaller than the best construction, which is reported when
/// nothing smaller exists.
pub fn solve_bnb(dims: TorusDims, budget: &Budget) -> Result<SolveReport> {
    let masks = Masks::new(dims)?;
    let meter = Meter::new(budget);
    let incumbent = best_construction(dims);
    let target = AtomicUsize::new(incumbent.len() - 1);
    let search = Search { masks: &masks, capacity: capacity_halves(dims), meter: &meter, target: &target };

    let mut tasks = Vec::new();
    search.split(Node { chosen: 0, forbidden: 0, size: 0 }, 0, &mut tasks);

    let found: Vec<(usize, u128)> = tasks
        .par_iter()
        .filter_map(|&node| {
            let mut best = None;
            search.dfs(node, &mut best);
            best
        })
        .collect();

    let proven = !meter.stopped();
    let best = found
        .into_iter()
        .map(|(size, s)| (size, masks.to_set(s)))
        .min_by(|(sa, a), (sb, b)| sa.cmp(sb).then_with(|| a.lex_cmp(b)));
    match best {
        Some((_, set)) => meter.report(set, Method::Bnb, proven),
        None => meter.report(incumbent, Method::Bnb, proven),
    }
}

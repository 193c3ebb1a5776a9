use super::masks::Masks;
use super::{Budget, Meter, Method, SolveReport};
use crate::bounds::capacity_lower_bound;
use crate::constructions::best_construction;
use crate::error::Result;
use crate::torus::TorusDims;

/// Tries every set of size `k` that contains vertex 0, for `k` rising from the
/// capacity bound. Every 2DD-set has a translate through `(0, 0)`, so the
/// first size with a hit is the optimum; the set reported is the
/// lexicographically smallest of that size through the origin.
pub fn solve_bruteforce(dims: TorusDims, budget: &Budget) -> Result<SolveReport> {
    let masks = Masks::new(dims)?;
    let meter = Meter::new(budget);
    let incumbent = best_construction(dims);
    let total = masks.len;

    for k in capacity_lower_bound(dims)..=incumbent.len() {
        // choose k - 1 further vertices from 1..total
        let r = k - 1;
        let mut pick: Vec<usize> = (1..=r).collect();
        loop {
            if !meter.tick(1) {
                return meter.report(incumbent, Method::Brute, false);
            }
            let s = pick.iter().fold(1u128, |acc, &v| acc | 1 << v);
            if masks.is_dominating(s) {
                return meter.report(masks.to_set(s), Method::Brute, true);
            }
            if !next_combination(&mut pick, total) {
                break;
            }
        }
    }
    // The construction itself is a 2DD-set, so some k <= its size succeeds.
    unreachable!("no 2DD-set found up to the size of a known construction")
}

/// Advances `pick` (strictly increasing, values in `1..total`) to the next
/// combination in lexicographic order.
fn next_combination(pick: &mut [usize], total: usize) -> bool {
    let r = pick.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if pick[i] < total - (r - i) {
            pick[i] += 1;
            for t in i + 1..r {
                pick[t] = pick[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

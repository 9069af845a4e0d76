//! Subsets of factor lists, selected by the sum of their degrees.

use std::collections::BTreeSet;

/// Default ceiling on the number of subsets a single check may enumerate.
pub const DEFAULT_SUBSET_CEILING: u64 = 1 << 20;

/// Lexicographic `k`-combinations of `0..r`.
#[derive(Clone, Debug)]
pub struct Combinations {
    r: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(r: usize, k: usize) -> Self {
        Self {
            r,
            current: (k <= r).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let k = cur.len();
        match (0..k).rev().find(|&i| cur[i] < self.r - k + i) {
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// Number of index subsets with each degree sum, saturating at `u128::MAX`.
pub fn count_by_degree_sum(degrees: &[usize]) -> Vec<u128> {
    let total: usize = degrees.iter().sum();
    let mut count = vec![0u128; total + 1];
    count[0] = 1;
    for &d in degrees {
        for s in (d..=total).rev() {
            count[s] = count[s].saturating_add(count[s - d]);
        }
    }
    count
}

/// How many subsets have a degree sum in `allowed`.
pub fn count_with_degree_sums(degrees: &[usize], allowed: &BTreeSet<usize>) -> u128 {
    let count = count_by_degree_sum(degrees);
    allowed
        .iter()
        .filter_map(|&k| count.get(k))
        .fold(0u128, |acc, c| acc.saturating_add(*c))
}

/// Index subsets whose degree sum lies in `allowed`, ordered by size and then
/// lexicographically. Degrees must be positive.
pub fn subsets_with_degree_sums(degrees: &[usize], allowed: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    fn walk(
        degrees: &[usize],
        allowed: &BTreeSet<usize>,
        max: usize,
        i: usize,
        sum: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == degrees.len() {
            if allowed.contains(&sum) {
                out.push(chosen.clone());
            }
            return;
        }
        if sum + degrees[i] <= max {
            chosen.push(i);
            walk(degrees, allowed, max, i + 1, sum + degrees[i], chosen, out);
            chosen.pop();
        }
        walk(degrees, allowed, max, i + 1, sum, chosen, out);
    }

    let mut out = Vec::new();
    if let Some(&max) = allowed.last() {
        walk(degrees, allowed, max, 0, 0, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

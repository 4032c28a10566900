//! Implicit sorted matrix of pairwise differences and the threshold search
//! over it (Frederickson–Johnson style quadrant splitting).

use crate::error::{Error, Result};

/// `(m-1) x (m-1)` matrix with `entry(i, j) = a[m-1-i] - a[j]` for ascending
/// `a`. Rows and columns are nonincreasing and the entries include every
/// pairwise difference `p - q` with `p > q`.
#[derive(Debug, Clone, PartialEq)]
pub struct SortedMatrix {
    values: Vec<f64>,
}

pub fn build_sorted_matrix(values: &[f64]) -> Result<SortedMatrix> {
    if values.len() < 2 {
        return Err(Error::InvalidParameter("a sorted matrix needs at least two values".into()));
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let base = v[0];
    for x in &mut v {
        *x -= base;
    }
    Ok(SortedMatrix { values: v })
}

impl SortedMatrix {
    /// Number of rows (and columns).
    pub fn size(&self) -> usize {
        self.values.len() - 1
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        let m = self.values.len();
        self.values[m - 1 - i] - self.values[j]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.size()).map(|i| (0..self.size()).map(|j| self.entry(i, j)).collect()).collect()
    }
}

/// Axis-aligned block of the matrix: rows `r..r+h`, columns `c..c+w`.
#[derive(Debug, Clone, Copy)]
struct Block {
    r: usize,
    c: usize,
    h: usize,
    w: usize,
}

impl Block {
    fn largest(&self, m: &SortedMatrix) -> f64 {
        m.entry(self.r, self.c)
    }

    fn smallest(&self, m: &SortedMatrix) -> f64 {
        m.entry(self.r + self.h - 1, self.c + self.w - 1)
    }

    fn cells(&self) -> usize {
        self.h * self.w
    }

    fn split(self, out: &mut Vec<Block>) {
        if self.h == 1 && self.w == 1 {
            out.push(self);
            return;
        }
        let (h1, w1) = (self.h.div_ceil(2), self.w.div_ceil(2));
        for (r, h) in [(self.r, h1), (self.r + h1, self.h - h1)] {
            for (c, w) in [(self.c, w1), (self.c + w1, self.w - w1)] {
                if h > 0 && w > 0 {
                    out.push(Block { r, c, h, w });
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    /// Largest value known infeasible.
    pub lower: f64,
    /// Smallest value known feasible.
    pub upper: f64,
    /// Entries strictly between `lower` and `upper` still undecided.
    pub survivors: Vec<f64>,
    /// Number of feasibility tests performed.
    pub tests: usize,
}

/// Narrows `(lower, upper)` around the feasibility threshold using matrix
/// entries as probes until at most `keep` undecided entries remain. With
/// `keep = 0`, `upper` ends as the smallest feasible entry above `lower`, or
/// stays at its initial value when there is none.
///
/// `feasible` must be monotone. A finite initial `upper` is verified first.
pub fn msearch(
    m: &SortedMatrix,
    mut feasible: impl FnMut(f64) -> bool,
    keep: usize,
    range: (f64, f64),
) -> Result<SearchOutcome> {
    let (mut lower, mut upper) = range;
    let mut tests = 0;
    if upper.is_finite() {
        tests += 1;
        if !feasible(upper) {
            return Err(Error::NonMonotone(format!("the given upper bound {upper} is infeasible")));
        }
    }
    let mut active = vec![Block { r: 0, c: 0, h: m.size(), w: m.size() }];
    let live = |b: &Block, lower: f64, upper: f64| b.largest(m) > lower && b.smallest(m) < upper;
    loop {
        active.retain(|b| live(b, lower, upper));
        if active.iter().map(Block::cells).sum::<usize>() <= keep || active.is_empty() {
            break;
        }
        let mut next = Vec::with_capacity(active.len() * 4);
        for b in active.drain(..) {
            b.split(&mut next);
        }
        active = next;
        active.retain(|b| live(b, lower, upper));
        for pick in [Block::largest as fn(&Block, &SortedMatrix) -> f64, Block::smallest] {
            let mut reps: Vec<f64> = active.iter().map(|b| pick(b, m)).filter(|&v| v > lower && v < upper).collect();
            if reps.is_empty() {
                continue;
            }
            let mid = reps.len() / 2;
            let (_, &mut probe, _) = reps.select_nth_unstable_by(mid, f64::total_cmp);
            tests += 1;
            if feasible(probe) {
                upper = probe;
            } else {
                lower = probe;
            }
            active.retain(|b| live(b, lower, upper));
        }
    }
    let mut survivors = Vec::new();
    for b in &active {
        for i in b.r..b.r + b.h {
            for j in b.c..b.c + b.w {
                let v = m.entry(i, j);
                if v > lower && v < upper {
                    survivors.push(v);
                }
            }
        }
    }
    survivors.sort_by(f64::total_cmp);
    Ok(SearchOutcome { lower, upper, survivors, tests })
}

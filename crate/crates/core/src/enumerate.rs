//! Backtracking enumeration of semistandard tableaux with a prescribed shape
//! and weight.
//!
//! Cells are filled in reading order (bottom row first, left to right) and
//! each cell tries labels in increasing order, so tableaux come out in
//! lexicographic order of their reading words.

use crate::partition::Partition;
use crate::tableau::{Label, Tableau, WeightVector};

/// Lazily yields every straight SSYT of one shape and weight exactly once.
pub struct TableauStream {
    shape: Vec<usize>,
    cells: Vec<Cell>,
    fill: Vec<Label>,
    remaining: Vec<usize>,
    limit: Option<usize>,
    yielded: usize,
    started: bool,
    exhausted: bool,
    diagnostic: Option<String>,
}

#[derive(Clone, Copy)]
struct Cell {
    /// Index of the left neighbour in `fill`, if any.
    left: Option<usize>,
    below: Option<usize>,
    /// Largest label that still leaves room for a strictly increasing
    /// column above this cell.
    max_label: Label,
}

/// Starts enumerating SSYT of `shape` whose label `i` occurs `weight[i - 1]`
/// times. Stops after `limit` tableaux when given.
pub fn enumerate_tableaux(
    shape: &Partition,
    weight: &WeightVector,
    limit: Option<usize>,
) -> TableauStream {
    let n = weight.len() as Label;
    let column_heights = shape.conjugate();
    let mut cells = Vec::with_capacity(shape.size());
    let mut row_start = Vec::with_capacity(shape.len());
    for (r, &len) in shape.parts().iter().enumerate() {
        row_start.push(cells.len());
        for c in 0..len {
            let above = (column_heights[c] - 1 - r) as Label;
            cells.push(Cell {
                left: (c > 0).then(|| cells.len() - 1),
                below: (r > 0).then(|| row_start[r - 1] + c),
                max_label: n.saturating_sub(above),
            });
        }
    }

    let diagnostic = (shape.size() != weight.total()).then(|| {
        format!(
            "shape {shape} has {} cells but weight {weight} sums to {}",
            shape.size(),
            weight.total()
        )
    });

    TableauStream {
        shape: shape.parts().to_vec(),
        fill: vec![0; cells.len()],
        cells,
        remaining: weight.counts().to_vec(),
        limit,
        yielded: 0,
        started: false,
        exhausted: diagnostic.is_some(),
        diagnostic,
    }
}

/// Number of SSYT with the given shape and weight (a Kostka number).
pub fn count_tableaux(shape: &Partition, weight: &WeightVector) -> usize {
    let mut stream = enumerate_tableaux(shape, weight, None);
    stream.by_ref().for_each(drop);
    stream.count_so_far()
}

/// Every straight SSYT of `shape` with entries in `[n]`, grouped by weight
/// (weights in lexicographic order, largest first).
pub fn tableaux_with_labels(shape: &Partition, n: usize) -> impl Iterator<Item = Tableau> + '_ {
    weak_compositions(shape.size(), n)
        .flat_map(move |w| enumerate_tableaux(shape, &WeightVector::new(w), None))
}

/// All length-`parts` sequences of nonnegative integers summing to `total`,
/// in decreasing lexicographic order.
pub fn weak_compositions(total: usize, parts: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = match parts {
        0 if total == 0 => Some(Vec::new()),
        0 => None,
        _ => {
            let mut first = vec![0; parts];
            first[0] = total;
            Some(first)
        }
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        // Move one unit from the rightmost nonzero entry (excluding the last)
        // to its right neighbour, collecting the tail there.
        let k = current.len();
        if k > 1 {
            if let Some(i) = (0..k - 1).rev().find(|&i| current[i] > 0) {
                let mut succ = current.clone();
                let tail: usize = succ[i + 1..].iter().sum();
                succ[i] -= 1;
                for x in &mut succ[i + 1..] {
                    *x = 0;
                }
                succ[i + 1] = tail + 1;
                next = Some(succ);
            }
        }
        Some(current)
    })
}

impl TableauStream {
    /// Tableaux produced so far; the total once the stream is exhausted.
    pub fn count_so_far(&self) -> usize {
        self.yielded
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }

    /// Why the stream is empty, when the inputs are incompatible.
    pub fn diagnostic(&self) -> Option<&str> {
        self.diagnostic.as_deref()
    }

    fn lower_bound(&self, p: usize) -> Label {
        let cell = self.cells[p];
        let left = cell.left.map_or(1, |i| self.fill[i]);
        let below = cell.below.map_or(1, |i| self.fill[i] + 1);
        left.max(below)
    }

    /// Moves to the next complete filling. `p` is the cell to advance.
    fn advance(&mut self, mut p: usize) -> bool {
        loop {
            let prev = self.fill[p];
            if prev != 0 {
                self.remaining[prev as usize - 1] += 1;
            }
            let start = (prev + 1).max(self.lower_bound(p));
            let found = (start..=self.cells[p].max_label).find(|&v| self.remaining[v as usize - 1] > 0);
            match found {
                Some(v) => {
                    self.fill[p] = v;
                    self.remaining[v as usize - 1] -= 1;
                    if p + 1 == self.cells.len() {
                        return true;
                    }
                    p += 1;
                    self.fill[p] = 0;
                }
                None => {
                    self.fill[p] = 0;
                    if p == 0 {
                        return false;
                    }
                    p -= 1;
                }
            }
        }
    }

    fn current(&self) -> Tableau {
        let mut rows = Vec::with_capacity(self.shape.len());
        let mut offset = 0;
        for &len in &self.shape {
            rows.push(self.fill[offset..offset + len].to_vec());
            offset += len;
        }
        Tableau::straight(rows)
    }
}

impl Iterator for TableauStream {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.exhausted || self.limit.is_some_and(|l| self.yielded >= l) {
            return None;
        }
        let found = if self.cells.is_empty() {
            !std::mem::replace(&mut self.started, true)
        } else if !self.started {
            self.started = true;
            self.advance(0)
        } else {
            self.advance(self.cells.len() - 1)
        };
        if !found {
            self.exhausted = true;
            return None;
        }
        self.yielded += 1;
        Some(self.current())
    }
}

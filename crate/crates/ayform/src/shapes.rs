//! Partitions, skew shapes, and standard fillings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AyError;

/// A skew diagram μ/ν given by its outer and inner partitions.
///
/// Boxes are the cells `(r, c)` (1-based) with `ν_r < c ≤ μ_r`. The inner
/// partition may be empty, giving a straight shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Vec<usize>,
    inner: Vec<usize>,
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |p: &[usize]| {
            p.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        if self.inner.is_empty() {
            write!(f, "({})", join(&self.outer))
        } else {
            write!(f, "({})/({})", join(&self.outer), join(&self.inner))
        }
    }
}

impl SkewShape {
    pub fn new(outer: Vec<usize>, inner: Vec<usize>) -> Result<Self, AyError> {
        let mut inner = inner;
        while inner.last() == Some(&0) {
            inner.pop();
        }
        if outer.is_empty() || outer.iter().any(|&p| p == 0) {
            return Err(AyError::InvalidShape(format!(
                "outer partition must have positive parts, got {outer:?}"
            )));
        }
        if !is_weakly_decreasing(&outer) || !is_weakly_decreasing(&inner) {
            return Err(AyError::InvalidShape(format!(
                "parts must be weakly decreasing: {outer:?}/{inner:?}"
            )));
        }
        if inner.len() > outer.len() || inner.iter().zip(&outer).any(|(&v, &u)| v > u) {
            return Err(AyError::InvalidShape(format!(
                "inner partition not contained in outer: {outer:?}/{inner:?}"
            )));
        }
        let shape = SkewShape { outer, inner };
        if shape.size() == 0 {
            return Err(AyError::InvalidShape("empty shape".into()));
        }
        Ok(shape)
    }

    pub fn straight(outer: Vec<usize>) -> Result<Self, AyError> {
        Self::new(outer, vec![])
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        let o: usize = self.outer.iter().sum();
        let i: usize = self.inner.iter().sum();
        o - i
    }

    /// Number of rows of the outer partition (h).
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of rows of the inner partition (ℓ).
    pub fn inner_rows(&self) -> usize {
        self.inner.len()
    }

    fn inner_at(&self, r: usize) -> usize {
        self.inner.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains_box(&self, r: usize, c: usize) -> bool {
        r >= 1 && r <= self.rows() && c > self.inner_at(r) && c <= self.outer[r - 1]
    }

    /// Boxes in row-major reading order.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for r in 1..=self.rows() {
            for c in self.inner_at(r) + 1..=self.outer[r - 1] {
                out.push((r, c));
            }
        }
        out
    }

    /// The lower-left box `(h, ν_h + 1)`.
    pub fn lower_left(&self) -> (usize, usize) {
        let h = self.rows();
        (h, self.inner_at(h) + 1)
    }

    /// Whether the box directly above the lower-left box is in the shape.
    pub fn has_box_above_lower_left(&self) -> bool {
        let (h, c) = self.lower_left();
        h >= 2 && self.contains_box(h - 1, c)
    }

    /// Whether the box directly right of the lower-left box is in the shape.
    pub fn has_box_right_of_lower_left(&self) -> bool {
        let (h, c) = self.lower_left();
        self.contains_box(h, c + 1)
    }

    /// All standard placements of `n` increasing abstract values, as vectors
    /// `ord` where `ord[k]` is the index (in `boxes()` order) of the box
    /// receiving the k-th smallest value.
    pub fn standard_orders(&self) -> Vec<Vec<usize>> {
        let boxes = self.boxes();
        let n = boxes.len();
        let index_of = |r: usize, c: usize| boxes.iter().position(|&b| b == (r, c));
        // Per box, the boxes that must be filled earlier.
        let prereq: Vec<Vec<usize>> = boxes
            .iter()
            .map(|&(r, c)| {
                let mut pre = Vec::new();
                if self.contains_box(r, c - 1) {
                    pre.push(index_of(r, c - 1).unwrap());
                }
                if r > 1 && self.contains_box(r - 1, c) {
                    pre.push(index_of(r - 1, c).unwrap());
                }
                pre
            })
            .collect();
        let mut out = Vec::new();
        let mut filled = vec![false; n];
        let mut order = Vec::with_capacity(n);
        fill_rec(&prereq, &mut filled, &mut order, &mut out);
        out
    }

    /// Number of standard fillings by 1..n, counted by enumeration.
    pub fn count_standard_by_enumeration(&self) -> u64 {
        self.standard_orders().len() as u64
    }

    /// Number of standard Young tableaux f^λ.
    ///
    /// Hook length formula for straight shapes, enumeration for skew ones;
    /// agreement on straight shapes is checked in the tests.
    pub fn count_standard(&self) -> u64 {
        if self.is_straight() {
            self.hook_length_count()
        } else {
            self.count_standard_by_enumeration()
        }
    }

    /// f^λ by the hook length formula (straight shapes only).
    pub fn hook_length_count(&self) -> u64 {
        assert!(self.is_straight(), "hook length formula needs a straight shape");
        let n = self.size() as u128;
        let col_len = |c: usize| self.outer.iter().filter(|&&p| p >= c).count();
        let mut numerator: u128 = (1..=n).product();
        for (r, c) in self.boxes() {
            let hook = (self.outer[r - 1] - c) + (col_len(c) - r) + 1;
            numerator /= hook as u128;
        }
        numerator as u64
    }
}

fn fill_rec(
    prereq: &[Vec<usize>],
    filled: &mut Vec<bool>,
    order: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = prereq.len();
    if order.len() == n {
        out.push(order.clone());
        return;
    }
    for b in 0..n {
        if !filled[b] && prereq[b].iter().all(|&p| filled[p]) {
            filled[b] = true;
            order.push(b);
            fill_rec(prereq, filled, order, out);
            order.pop();
            filled[b] = false;
        }
    }
}

fn is_weakly_decreasing(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

/// All partitions of n, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    partitions_rec(n, n, &mut prefix, &mut out);
    out
}

fn partitions_rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=n.min(max)).rev() {
        prefix.push(part);
        partitions_rec(n - part, part, prefix, out);
        prefix.pop();
    }
}

//! Partitions, Young and skew diagrams, conjugation, the prefix-sum order,
//! hook-shape composition, and domino tilings.
//!
//! Row/column indices are 0-based, rows numbered downward and columns
//! rightward (English convention).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Doubles as the cycle type of a permutation when the parts are read as
/// cycle lengths. The empty partition (size 0) is allowed.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and non-monotone sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Parses the textual grammar `(p1, p2, ..., pk)` where each `pi` is
    /// either `c` or `c^k` for a run of `k` copies of `c`. `()` is the
    /// empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("partition must be parenthesized: {text:?}")))?;
        let inner = inner.trim();
        let mut parts = Vec::new();
        if !inner.is_empty() {
            for item in inner.split(',') {
                let item = item.trim();
                let (base, rep) = match item.split_once('^') {
                    Some((c, k)) => (c.trim(), k.trim()),
                    None => (item, "1"),
                };
                let c: u32 = base
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad part {item:?} in {text:?}")))?;
                let k: u32 = rep
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent {item:?} in {text:?}")))?;
                if k == 0 {
                    return Err(Error::Parse(format!("zero run length in {text:?}")));
                }
                parts.extend(std::iter::repeat(c).take(k as usize));
            }
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Row length at `row`, zero past the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Total number of cells.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Size minus height: the number of cells outside the first column.
    pub fn excess(&self) -> u32 {
        self.size() - self.height() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        if let Some(&first) = self.parts.first() {
            parts.reserve(first as usize);
            for col in 0..first {
                parts.push(self.parts.iter().take_while(|&&p| p > col).count() as u32);
            }
        }
        Partition { parts }
    }

    /// Whether `self` precedes `other` in the box-moving order, realized as
    /// reverse dominance on prefix sums: `(n)` is minimal, `(1^n)` maximal.
    pub fn leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let rows = self.height().max(other.height());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..rows {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The partition with the first column deleted (every part reduced by
    /// one, unit parts dropped).
    pub fn first_column_removed(&self) -> Partition {
        let parts = self
            .parts
            .iter()
            .filter(|&&p| p > 1)
            .map(|&p| p - 1)
            .collect();
        Partition { parts }
    }

    /// All partitions of `n`, largest first part first.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    /// Run-compressed form, e.g. `(3,3,1,1,1)` prints as `(3^2,1^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let mut i = 0;
        let mut first = true;
        while i < self.parts.len() {
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == self.parts[i] {
                j += 1;
            }
            if !first {
                write!(f, ",")?;
            }
            if j - i == 1 {
                write!(f, "{}", self.parts[i])?;
            } else {
                write!(f, "{}^{}", self.parts[i], j - i)?;
            }
            first = false;
            i = j;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Builds the partition `(w, 1+d_1, ..., 1+d_h, 1, ..., 1)` of total size
/// exactly `n`, where `d` runs over the parts of `lambda_d`.
pub fn compose_hook_shape(w: u32, lambda_d: &Partition, n: u32) -> Result<Partition> {
    if w == 0 {
        return Err(Error::InvalidArgument("first row must be nonempty".into()));
    }
    if let Some(&top) = lambda_d.parts().first() {
        if w < 1 + top {
            return Err(Error::InvalidArgument(format!(
                "first row {w} shorter than following row {}",
                1 + top
            )));
        }
    }
    let used = w + lambda_d.size() + lambda_d.height() as u32;
    if n < used {
        return Err(Error::InvalidArgument(format!(
            "target size {n} smaller than minimum {used}"
        )));
    }
    let mut parts = Vec::with_capacity(1 + lambda_d.height() + (n - used) as usize);
    parts.push(w);
    parts.extend(lambda_d.parts().iter().map(|&p| p + 1));
    parts.extend(std::iter::repeat(1).take((n - used) as usize));
    Partition::new(parts)
}

/// Builds the partition `(1+d_1, ..., 1+d_h, 1, ..., 1)` of total size
/// exactly `n`.
pub fn compose_augmented_shape(lambda_d: &Partition, n: u32) -> Result<Partition> {
    let used = lambda_d.size() + lambda_d.height() as u32;
    if n < used {
        return Err(Error::InvalidArgument(format!(
            "target size {n} smaller than minimum {used}"
        )));
    }
    let mut parts: Vec<u32> = lambda_d.parts().iter().map(|&p| p + 1).collect();
    parts.extend(std::iter::repeat(1).take((n - used) as usize));
    Partition::new(parts)
}

/// One way of removing a border strip (connected rim segment whose removal
/// leaves a partition) from a shape.
#[derive(Clone, Debug)]
pub struct StripRemoval {
    pub remaining: Partition,
    /// Cells of the removed strip, row-major.
    pub cells: Vec<(usize, usize)>,
    /// Number of rows the strip touches.
    pub rows_spanned: usize,
}

/// All ways of removing a border strip of `size` cells from `shape`,
/// ordered topmost strip first.
///
/// Uses the beta-set encoding: with `b_i = part_i + (h-1-i)` strictly
/// decreasing, removable strips of length `size` correspond to positions
/// `i` with `b_i >= size` and `b_i - size` not already present.
pub fn border_strip_removals(shape: &Partition, size: u32) -> Vec<StripRemoval> {
    let parts = shape.parts();
    let h = parts.len();
    if size == 0 || h == 0 {
        return Vec::new();
    }
    let beta: Vec<u32> = parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (h - 1 - i) as u32)
        .collect();
    let mut out = Vec::new();
    for i in 0..h {
        if beta[i] < size {
            continue;
        }
        let target = beta[i] - size;
        if beta.contains(&target) {
            continue;
        }
        let passed = beta[i + 1..].iter().filter(|&&b| b > target).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (h - 1 - j) as u32)
            .collect();
        while new_parts.last() == Some(&0) {
            new_parts.pop();
        }
        let remaining = Partition { parts: new_parts };
        let mut cells = Vec::with_capacity(size as usize);
        for (r, &p) in parts.iter().enumerate() {
            let lo = remaining.part(r);
            for c in lo..p {
                cells.push((r, c as usize));
            }
        }
        debug_assert_eq!(cells.len(), size as usize);
        out.push(StripRemoval {
            remaining,
            cells,
            rows_spanned: passed + 1,
        });
    }
    out
}

/// The cell set difference of two nested Young diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if inner.height() > outer.height() {
            return Err(Error::InvalidArgument(format!(
                "inner shape {inner} taller than outer {outer}"
            )));
        }
        for (i, &m) in inner.parts().iter().enumerate() {
            if m > outer.parts()[i] {
                return Err(Error::InvalidArgument(format!(
                    "inner shape {inner} not contained in {outer}"
                )));
            }
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn from_partition(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        (col as u32) < self.outer.part(row) && (col as u32) >= self.inner.part(row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.cell_count() as usize);
        for r in 0..self.outer.height() {
            for c in self.inner.part(r)..self.outer.part(r) {
                out.push((r, c as usize));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

/// A single 1x2 tile on two edge-adjacent cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domino {
    pub cells: [(usize, usize); 2],
    #[serde(rename = "orient")]
    pub orientation: Orientation,
}

/// An exact cover of a (skew) shape by dominoes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominoTiling {
    pub dominoes: Vec<Domino>,
}

impl DominoTiling {
    /// Parity (0/1) of the number of horizontally oriented dominoes.
    pub fn horizontal_parity(&self) -> u8 {
        (self
            .dominoes
            .iter()
            .filter(|d| d.orientation == Orientation::Horizontal)
            .count()
            % 2) as u8
    }

    pub fn horizontal_count(&self) -> usize {
        self.dominoes
            .iter()
            .filter(|d| d.orientation == Orientation::Horizontal)
            .count()
    }
}

/// All domino tilings of a skew shape, in the deterministic order produced
/// by covering the first free cell (row-major) horizontally before
/// vertically. Empty iff the shape is untilable.
pub fn domino_tilings(shape: &SkewShape) -> Vec<DominoTiling> {
    let mut out = Vec::new();
    tile_search(shape, &mut |t| {
        out.push(t.clone());
        true
    });
    out
}

/// Tilings of a straight shape.
pub fn domino_tilings_of(shape: &Partition) -> Vec<DominoTiling> {
    domino_tilings(&SkewShape::from_partition(shape.clone()))
}

/// Whether at least one tiling exists (early-exit search).
pub fn is_domino_tilable(shape: &SkewShape) -> bool {
    let mut found = false;
    tile_search(shape, &mut |_| {
        found = true;
        false
    });
    found
}

fn tile_search(shape: &SkewShape, emit: &mut dyn FnMut(&DominoTiling) -> bool) {
    let cells = shape.cells();
    if cells.len() % 2 != 0 {
        return;
    }
    let index: std::collections::HashMap<(usize, usize), usize> =
        cells.iter().copied().enumerate().map(|(i, c)| (c, i)).collect();
    let mut covered = vec![false; cells.len()];
    let mut tiling = Vec::with_capacity(cells.len() / 2);
    rec(&cells, &index, &mut covered, &mut tiling, emit);

    fn rec(
        cells: &[(usize, usize)],
        index: &std::collections::HashMap<(usize, usize), usize>,
        covered: &mut [bool],
        tiling: &mut Vec<Domino>,
        emit: &mut dyn FnMut(&DominoTiling) -> bool,
    ) -> bool {
        let first = match covered.iter().position(|&c| !c) {
            None => {
                return emit(&DominoTiling {
                    dominoes: tiling.clone(),
                });
            }
            Some(i) => i,
        };
        let (r, c) = cells[first];
        for (cell2, orientation) in [
            ((r, c + 1), Orientation::Horizontal),
            ((r + 1, c), Orientation::Vertical),
        ] {
            if let Some(&j) = index.get(&cell2) {
                if !covered[j] {
                    covered[first] = true;
                    covered[j] = true;
                    tiling.push(Domino {
                        cells: [(r, c), cell2],
                        orientation,
                    });
                    let keep_going = rec(cells, index, covered, tiling, emit);
                    tiling.pop();
                    covered[first] = false;
                    covered[j] = false;
                    if !keep_going {
                        return false;
                    }
                }
            }
        }
        true
    }
}

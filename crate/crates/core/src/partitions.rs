//! Integer partitions, their cells, hooks and corners.
//!
//! Cells use English (matrix) coordinates, 1-based: row 1 is the longest
//! row and columns grow to the right.
//!
//! Naming of corners follows the hook-expansion literature:
//!
//! * an **outer corner** is an *addable* position, a cell outside `λ` whose
//!   addition leaves a partition (there are `d` of them);
//! * an **inner corner** is a *removable* cell of `λ`, equivalently a cell
//!   with hook length 1 (there are `d - 1` of them).
//!
//! Some authors use the opposite words; everything here means the above.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::factorial;

/// A cell `(row, col)` of a Young diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

/// `c(i, j) = j - i`.
pub fn content(cell: Cell) -> i64 {
    cell.col as i64 - cell.row as i64
}

/// A partition: weakly decreasing positive parts. The empty partition is
/// the unique partition of 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".to_string()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing".to_string()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n = Σ parts`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-based); 0 beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Length of column `c` (1-based); 0 beyond the first row's length.
    pub fn col_len(&self, c: usize) -> usize {
        if c == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width).map(|c| self.col_len(c)).collect(),
        }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// `arm + leg + 1` at `cell`.
    pub fn hook_length(&self, cell: Cell) -> Result<usize> {
        if !self.contains(cell) {
            return Err(Error::CellOutsideShape {
                row: cell.row,
                col: cell.col,
            });
        }
        let arm = self.row_len(cell.row) - cell.col;
        let leg = self.col_len(cell.col) - cell.row;
        Ok(arm + leg + 1)
    }

    /// Hook lengths of all cells, row-major.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| (self.parts[c.row - 1] - c.col) + (conj.parts[c.col - 1] - c.row) + 1)
            .collect()
    }

    /// Outer corners (addable cells), top-right to bottom-left.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.len() + 1 {
            let len = self.row_len(r);
            if r == 1 || self.row_len(r - 1) > len {
                out.push(Cell::new(r, len + 1));
            }
        }
        out
    }

    /// Inner corners (removable cells), top-right to bottom-left.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Cell::new(r, self.row_len(r)))
            .collect()
    }

    pub fn add_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.addable_cells().contains(&cell) {
            return Err(Error::NotAddable {
                row: cell.row,
                col: cell.col,
            });
        }
        let mut parts = self.parts.clone();
        if cell.row > parts.len() {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_cell(&self, cell: Cell) -> Result<Partition> {
        if !self.removable_cells().contains(&cell) {
            return Err(Error::NotRemovable {
                row: cell.row,
                col: cell.col,
            });
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        if parts[cell.row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Contents and cells of the outer and inner corners; see [`CornerProfile`].
    pub fn corner_profile(&self) -> CornerProfile {
        let outer_cells = self.addable_cells();
        let inner_cells = self.removable_cells();
        CornerProfile {
            outer_contents: outer_cells.iter().copied().map(content).collect(),
            inner_contents: inner_cells.iter().copied().map(content).collect(),
            outer_cells,
            inner_cells,
        }
    }
}

/// All partitions of `n` in reverse-lexicographic order, e.g.
/// `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of shape `λ` by the hook formula
/// `n! / Π h(x)`. The division is checked to be exact.
pub fn f_lambda(lambda: &Partition) -> Result<BigUint> {
    let prod = lambda
        .hooks()
        .into_iter()
        .fold(BigUint::from(1u32), |acc, h| acc * BigUint::from(h));
    let (q, r) = factorial(lambda.size()).div_rem(&prod);
    if !r.is_zero() {
        return Err(Error::Internal(alloc::format!(
            "hook product does not divide n! for {lambda}"
        )));
    }
    Ok(q)
}

/// Outer and inner corners of a partition ordered by strictly decreasing
/// content, so that `x_1 > y_1 > x_2 > ... > y_{d-1} > x_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerProfile {
    pub outer_contents: Vec<i64>,
    pub inner_contents: Vec<i64>,
    pub outer_cells: Vec<Cell>,
    pub inner_cells: Vec<Cell>,
}

impl CornerProfile {
    /// Number of outer corners `d`.
    pub fn d(&self) -> usize {
        self.outer_contents.len()
    }

    /// Whether the contents strictly interlace and `|outer| = |inner| + 1`.
    pub fn is_interlaced(&self) -> bool {
        if self.outer_contents.len() != self.inner_contents.len() + 1 {
            return false;
        }
        let mut merged = Vec::with_capacity(2 * self.outer_contents.len());
        for (i, &x) in self.outer_contents.iter().enumerate() {
            merged.push(x);
            if let Some(&y) = self.inner_contents.get(i) {
                merged.push(y);
            }
        }
        merged.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, `-` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(String::from(s)))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

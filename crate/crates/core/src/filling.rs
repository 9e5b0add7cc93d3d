//! Fillings of Young diagrams and the inv/maj statistics.
//!
//! A filling assigns a positive integer to every cell of a shape, with no
//! ordering constraints. A descent is a cell whose entry strictly exceeds
//! the entry directly below it; `maj` sums `leg + 1` over descents. An
//! inversion is an attacking pair whose earlier-in-reading-order entry is
//! strictly larger (ties never count); `inv` is the inversion count minus
//! the arms of the descents. Both statistics also decompose row by row,
//! and the two routes are kept in agreement by a debug assertion.

use std::fmt;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::partition::{Cell, CellPair, Partition};

/// A filling of a partition shape. Entries are stored in reading order
/// (rows top-down, left to right within each row).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: Partition,
    entries: Vec<u32>,
}

impl Filling {
    /// Builds a filling from entries listed in reading order.
    pub fn new(shape: Partition, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::EntryCountMismatch {
                shape: shape.to_string(),
                expected: shape.size(),
                got: entries.len(),
            });
        }
        if entries.contains(&0) {
            return Err(Error::EntryNotPositive);
        }
        Ok(Filling { shape, entries })
    }

    /// Builds a filling from rows listed top-down (the order tableaux are
    /// printed in). The row lengths, read bottom-up, must form a partition.
    pub fn from_rows_top_down(rows: Vec<Vec<u32>>) -> Result<Self> {
        let parts: Vec<usize> = rows.iter().rev().map(|r| r.len()).collect();
        let shape = Partition::new(parts).map_err(|e| Error::RowsNotAShape {
            reason: e.to_string(),
        })?;
        Filling::new(shape, rows.into_iter().flatten().collect())
    }

    /// The filling with every entry equal to `value`.
    pub fn constant(shape: Partition, value: u32) -> Result<Self> {
        let n = shape.size();
        Filling::new(shape, vec![value; n])
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entries in reading order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Index of `cell` in the reading-order entry list.
    fn index_of(&self, cell: Cell) -> usize {
        let above: usize = (cell.row + 1..=self.shape.len())
            .map(|r| self.shape.part(r))
            .sum();
        above + cell.col - 1
    }

    pub fn get(&self, cell: Cell) -> Result<u32> {
        if !self.shape.contains(cell) {
            return Err(Error::CellOutsideShape {
                cell,
                shape: self.shape.to_string(),
            });
        }
        Ok(self.entries[self.index_of(cell)])
    }

    /// Rows listed top-down.
    pub fn rows_top_down(&self) -> Vec<Vec<u32>> {
        let mut rows = Vec::with_capacity(self.shape.len());
        let mut at = 0;
        for row in (1..=self.shape.len()).rev() {
            let w = self.shape.part(row);
            rows.push(self.entries[at..at + w].to_vec());
            at += w;
        }
        rows
    }

    /// Descent cells in reading order: cells whose entry strictly exceeds
    /// the entry directly below. Row 1 never qualifies.
    pub fn descents(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for row in (2..=self.shape.len()).rev() {
            for col in 1..=self.shape.part(row) {
                let here = Cell::new(row, col);
                let below = Cell::new(row - 1, col);
                if self.get(here).unwrap() > self.get(below).unwrap() {
                    cells.push(here);
                }
            }
        }
        cells
    }

    /// Descents restricted to row `i` (requires `2 <= i <= len`).
    pub fn des_rows(&self, i: usize) -> Result<Vec<Cell>> {
        self.require_row(i)?;
        Ok(self.descents().into_iter().filter(|c| c.row == i).collect())
    }

    /// `maj`: sum of `leg + 1` over all descents.
    pub fn maj(&self) -> u64 {
        self.descents()
            .iter()
            .map(|&c| self.shape.leg(c).unwrap() as u64 + 1)
            .sum()
    }

    /// `maj` restricted to the descents in row `i`.
    pub fn maj_rows(&self, i: usize) -> Result<u64> {
        Ok(self
            .des_rows(i)?
            .iter()
            .map(|&c| self.shape.leg(c).unwrap() as u64 + 1)
            .sum())
    }

    /// Sum of the arms of the descents in row `i`.
    pub fn arm_rows(&self, i: usize) -> Result<u64> {
        Ok(self
            .des_rows(i)?
            .iter()
            .map(|&c| self.shape.arm(c).unwrap() as u64)
            .sum())
    }

    /// The inversion subsets of the attacking pairs from row `i`: the
    /// same-row pairs and the pairs into row `i-1` whose earlier cell holds
    /// the strictly larger entry. The second component is empty for `i = 1`.
    pub fn inv_sets(&self, i: usize) -> Result<(Vec<CellPair>, Vec<CellPair>)> {
        if i < 1 || i > self.shape.len() {
            return Err(Error::RowOutOfRange {
                row: i,
                min: 1,
                max: self.shape.len(),
            });
        }
        let filter = |pairs: Vec<CellPair>| {
            pairs
                .into_iter()
                .filter(|&(b, c)| self.get(b).unwrap() > self.get(c).unwrap())
                .collect::<Vec<_>>()
        };
        let same = filter(self.shape.att_same_row(i)?);
        let below = if i >= 2 {
            filter(self.shape.att_row_below(i)?)
        } else {
            Vec::new()
        };
        Ok((same, below))
    }

    /// `inv_{i,i-1} = |Inv_i| + |Inv_{i,i-1}| - arm_{i,i-1}`; may be negative.
    pub fn inv_rows(&self, i: usize) -> Result<i64> {
        self.require_row(i)?;
        let (same, below) = self.inv_sets(i)?;
        Ok(same.len() as i64 + below.len() as i64 - self.arm_rows(i)? as i64)
    }

    /// All inversion pairs, grouped by row from the top down.
    pub fn inversion_pairs(&self) -> Vec<CellPair> {
        let mut pairs = Vec::new();
        for i in (1..=self.shape.len()).rev() {
            let (same, below) = self.inv_sets(i).unwrap();
            pairs.extend(same);
            pairs.extend(below);
        }
        pairs
    }

    /// `|Inv|`: the number of inversion pairs.
    pub fn inversion_count(&self) -> u64 {
        self.inversion_pairs().len() as u64
    }

    /// `inv = |Inv| - sum of arms over descents`. Computed globally; the
    /// row-restricted decomposition must agree.
    pub fn inv(&self) -> i64 {
        let arm_sum: u64 = self
            .descents()
            .iter()
            .map(|&c| self.shape.arm(c).unwrap() as u64)
            .sum();
        let inv = self.inversion_count() as i64 - arm_sum as i64;
        debug_assert_eq!(inv, self.inv_via_rows(), "inv decomposition drifted");
        inv
    }

    /// The row-restricted route: `|Inv_1| + sum over i of inv_{i,i-1}`.
    pub fn inv_via_rows(&self) -> i64 {
        if self.shape.is_empty() {
            return 0;
        }
        let row1 = self.inv_sets(1).unwrap().0.len() as i64;
        (2..=self.shape.len()).fold(row1, |acc, i| acc + self.inv_rows(i).unwrap())
    }

    /// The row-restricted route for `maj`.
    pub fn maj_via_rows(&self) -> u64 {
        (2..=self.shape.len())
            .map(|i| self.maj_rows(i).unwrap())
            .sum()
    }

    /// The evaluation in an alphabet of size `m`: entry `i` counts the
    /// cells labeled `i`. Errors if some entry exceeds `m`.
    pub fn evaluation(&self, m: usize) -> Result<Composition> {
        let mut counts = vec![0usize; m];
        for &e in &self.entries {
            if e as usize > m {
                return Err(Error::EntryExceedsAlphabet {
                    entry: e,
                    alphabet: m,
                });
            }
            counts[e as usize - 1] += 1;
        }
        Ok(Composition::new(counts))
    }

    fn require_row(&self, i: usize) -> Result<()> {
        if i < 2 || i > self.shape.len() {
            Err(Error::RowOutOfRange {
                row: i,
                min: 2,
                max: self.shape.len(),
            })
        } else {
            Ok(())
        }
    }
}

/// Compact form: rows top-down, entries comma-separated, rows joined by ";".
impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows_top_down();
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling[{self}]")
    }
}

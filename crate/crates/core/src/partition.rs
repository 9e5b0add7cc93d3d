//! Partitions, diagram cells, and the attacking-pair geometry.
//!
//! Diagrams use the French convention: row 1 is the bottom row and carries
//! the largest part, rows grow upward, columns grow to the right. All
//! indices are 1-based.

use std::fmt;

use crate::error::{Error, Result};

/// A cell `(row, col)` of a Young diagram, 1-based, row 1 at the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An ordered pair of attacking cells; the first component is the cell that
/// comes earlier in reading order (same-row left cell, or the upper-row cell
/// for consecutive rows).
pub type CellPair = (Cell, Cell);

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Row `i` of its diagram has `parts[i-1]` cells.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing and strictly positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::PartNotPositive { position: i + 1 });
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::PartsNotWeaklyDecreasing {
                    position: i + 1,
                    part: p,
                    previous: parts[i - 1],
                });
            }
        }
        Ok(Partition { parts })
    }

    /// The empty partition (one empty filling, all statistics zero).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts (rows).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Width of row `row` (1-based); 0 when the row is above the diagram.
    pub fn part(&self, row: usize) -> usize {
        if row >= 1 && row <= self.parts.len() {
            self.parts[row - 1]
        } else {
            0
        }
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    fn require(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutsideShape {
                cell,
                shape: self.to_string(),
            })
        }
    }

    fn require_row(&self, row: usize, min: usize) -> Result<()> {
        if row < min || row > self.len() {
            Err(Error::RowOutOfRange {
                row,
                min,
                max: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// The conjugate partition (diagram transposed).
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Number of cells strictly to the right of `cell` in its row.
    pub fn arm(&self, cell: Cell) -> Result<usize> {
        self.require(cell)?;
        Ok(self.part(cell.row) - cell.col)
    }

    /// Number of cells strictly above `cell` in its column.
    pub fn leg(&self, cell: Cell) -> Result<usize> {
        self.require(cell)?;
        Ok(self
            .parts
            .iter()
            .skip(cell.row)
            .filter(|&&p| p >= cell.col)
            .count())
    }

    /// Cells listed row by row from the top row down, left to right.
    pub fn reading_order(&self) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.size());
        for row in (1..=self.len()).rev() {
            for col in 1..=self.part(row) {
                cells.push(Cell::new(row, col));
            }
        }
        cells
    }

    /// Attacking pairs inside row `i`: `((i,j),(i,k))` for `j < k`.
    pub fn att_same_row(&self, i: usize) -> Result<Vec<CellPair>> {
        self.require_row(i, 1)?;
        let width = self.part(i);
        let mut pairs = Vec::new();
        for j in 1..=width {
            for k in (j + 1)..=width {
                pairs.push((Cell::new(i, j), Cell::new(i, k)));
            }
        }
        Ok(pairs)
    }

    /// Attacking pairs between row `i` and row `i-1`: the upper cell lies
    /// strictly to the right of the lower one, recorded as (upper, lower),
    /// i.e. `((i,k),(i-1,j))` for `j < k <= part(i)`.
    pub fn att_row_below(&self, i: usize) -> Result<Vec<CellPair>> {
        self.require_row(i, 2)?;
        let width = self.part(i);
        let mut pairs = Vec::new();
        for k in 2..=width {
            for j in 1..k {
                pairs.push((Cell::new(i, k), Cell::new(i - 1, j)));
            }
        }
        Ok(pairs)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(matches!(
            Partition::new(vec![2, 3]),
            Err(Error::PartsNotWeaklyDecreasing { .. })
        ));
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(matches!(
            Partition::new(vec![2, 0]),
            Err(Error::PartNotPositive { .. })
        ));
    }

    #[test]
    fn empty_partition_is_valid() {
        let p = Partition::empty();
        assert_eq!(p.size(), 0);
        assert_eq!(p.reading_order(), vec![]);
    }

    #[test]
    fn arm_and_leg_on_432() {
        let p = shape(&[4, 3, 2]);
        assert_eq!(p.arm(Cell::new(2, 1)).unwrap(), 2);
        assert_eq!(p.leg(Cell::new(2, 1)).unwrap(), 1);
        assert_eq!(p.arm(Cell::new(1, 4)).unwrap(), 0);
        assert_eq!(p.leg(Cell::new(3, 1)).unwrap(), 0);
    }

    #[test]
    fn arm_on_2221() {
        let p = shape(&[2, 2, 2, 1]);
        assert_eq!(p.arm(Cell::new(3, 1)).unwrap(), 1);
    }

    #[test]
    fn leg_in_tall_tail() {
        let p = shape(&[3, 3, 2, 2, 2, 2, 2]);
        assert_eq!(p.leg(Cell::new(3, 1)).unwrap(), 4);
    }

    #[test]
    fn invalid_cell_is_an_error() {
        let p = shape(&[4, 3, 2]);
        assert!(matches!(
            p.arm(Cell::new(3, 3)),
            Err(Error::CellOutsideShape { .. })
        ));
        assert!(matches!(
            p.leg(Cell::new(4, 1)),
            Err(Error::CellOutsideShape { .. })
        ));
    }

    #[test]
    fn reading_order_listing() {
        let p = shape(&[2, 1]);
        assert_eq!(
            p.reading_order(),
            vec![Cell::new(2, 1), Cell::new(1, 1), Cell::new(1, 2)]
        );
        assert_eq!(shape(&[1]).reading_order(), vec![Cell::new(1, 1)]);
        let cells = shape(&[4, 3, 2]).reading_order();
        let expected = [
            (3, 1),
            (3, 2),
            (2, 1),
            (2, 2),
            (2, 3),
            (1, 1),
            (1, 2),
            (1, 3),
            (1, 4),
        ];
        assert_eq!(cells, expected.map(|(r, c)| Cell::new(r, c)).to_vec());
    }

    #[test]
    fn same_row_attacking_pairs() {
        let p = shape(&[2, 2, 2, 1]);
        assert_eq!(
            p.att_same_row(2).unwrap(),
            vec![(Cell::new(2, 1), Cell::new(2, 2))]
        );
        assert_eq!(p.att_same_row(4).unwrap(), vec![]);
        assert_eq!(shape(&[4, 3, 2]).att_same_row(1).unwrap().len(), 6);
        assert!(matches!(
            p.att_same_row(5),
            Err(Error::RowOutOfRange { .. })
        ));
    }

    #[test]
    fn row_below_attacking_pairs() {
        let p = shape(&[2, 2, 2, 1]);
        assert_eq!(
            p.att_row_below(3).unwrap(),
            vec![(Cell::new(3, 2), Cell::new(2, 1))]
        );
        assert_eq!(p.att_row_below(4).unwrap(), vec![]);
        let pairs = shape(&[3, 3]).att_row_below(2).unwrap();
        assert_eq!(
            pairs,
            vec![
                (Cell::new(2, 2), Cell::new(1, 1)),
                (Cell::new(2, 3), Cell::new(1, 1)),
                (Cell::new(2, 3), Cell::new(1, 2)),
            ]
        );
        assert!(matches!(
            p.att_row_below(1),
            Err(Error::RowOutOfRange { .. })
        ));
    }

    #[test]
    fn attacking_pair_counts_are_binomial() {
        for parts in [vec![4, 3, 2], vec![2, 2, 2, 1], vec![5, 1]] {
            let p = Partition::new(parts).unwrap();
            for i in 1..=p.len() {
                let w = p.part(i);
                assert_eq!(p.att_same_row(i).unwrap().len(), w * (w - 1) / 2);
                if i >= 2 {
                    assert_eq!(p.att_row_below(i).unwrap().len(), w * (w - 1) / 2);
                }
            }
        }
    }

    #[test]
    fn conjugate_is_an_involution() {
        let p = shape(&[4, 3, 2]);
        assert_eq!(p.conjugate(), shape(&[3, 3, 2, 1]));
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn display_round_trip() {
        assert_eq!(shape(&[4, 3, 2]).to_string(), "(4,3,2)");
        assert_eq!(Partition::empty().to_string(), "()");
    }
}

use std::fmt;

/// A composition: a sequence of non-negative integers. Used both as the
/// evaluation of a filling (entry `i` counts the cells labeled `i`) and as
/// a monomial exponent vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    entries: Vec<usize>,
}

impl Composition {
    pub fn new(entries: Vec<usize>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the entries.
    pub fn size(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Componentwise sum; the two compositions must have equal length.
    pub fn add(&self, other: &Composition) -> Composition {
        debug_assert_eq!(self.len(), other.len());
        Composition::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Entries sorted decreasingly with trailing zeros stripped: the
    /// partition underlying this exponent vector.
    pub fn sorted_parts(&self) -> Vec<usize> {
        let mut parts: Vec<usize> = self.entries.iter().copied().filter(|&e| e > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition({self})")
    }
}

//! The operation interface shared by evaluation, counting and compilation.
//!
//! Every pure-DP routine in this crate is written once against [`Machine`].
//! Running it on [`Eval`] computes values and tallies operations; running it
//! on the circuit builder records the same operations as nodes. Since the
//! routines never inspect a value, the sequence of calls depends only on the
//! graph.

use std::fmt;
use std::marker::PhantomData;

use crate::weight::Weight;

/// A target for `(min, max, +)` programs.
pub trait Machine {
    type Value: Copy;

    /// The constant 0.
    fn zero(&mut self) -> Self::Value;
    fn min(&mut self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn max(&mut self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn add(&mut self, a: Self::Value, b: Self::Value) -> Self::Value;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OpCounts {
    pub min_count: u64,
    pub max_count: u64,
    pub add_count: u64,
}

impl OpCounts {
    pub fn total(&self) -> u64 {
        self.min_count + self.max_count + self.add_count
    }
}

impl std::ops::Add for OpCounts {
    type Output = OpCounts;

    fn add(self, rhs: OpCounts) -> OpCounts {
        OpCounts {
            min_count: self.min_count + rhs.min_count,
            max_count: self.max_count + rhs.max_count,
            add_count: self.add_count + rhs.add_count,
        }
    }
}

impl fmt::Display for OpCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "min={} max={} add={} total={}",
            self.min_count,
            self.max_count,
            self.add_count,
            self.total()
        )
    }
}

/// Direct evaluation over a [`Weight`] type, counting every operation.
#[derive(Debug, Clone, Default)]
pub struct Eval<W> {
    pub counts: OpCounts,
    _weight: PhantomData<W>,
}

impl<W> Eval<W> {
    pub fn new() -> Self {
        Eval {
            counts: OpCounts::default(),
            _weight: PhantomData,
        }
    }
}

impl<W: Weight> Machine for Eval<W> {
    type Value = W;

    fn zero(&mut self) -> W {
        W::ZERO
    }

    fn min(&mut self, a: W, b: W) -> W {
        self.counts.min_count += 1;
        a.min_of(b)
    }

    fn max(&mut self, a: W, b: W) -> W {
        self.counts.max_count += 1;
        a.max_of(b)
    }

    fn add(&mut self, a: W, b: W) -> W {
        self.counts.add_count += 1;
        a + b
    }
}

/// Square table of machine values, kept symmetric by [`Table::set`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table<T> {
    n: usize,
    cells: Vec<T>,
}

impl<T: Copy> Table<T> {
    pub fn filled(n: usize, value: T) -> Self {
        Table {
            n,
            cells: vec![value; n * n],
        }
    }

    pub(crate) fn from_cells(n: usize, cells: Vec<T>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        Table { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.cells[i * self.n + j]
    }

    /// Writes both `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.cells[i * self.n + j] = value;
        self.cells[j * self.n + i] = value;
    }

    pub(crate) fn into_cells(self) -> Vec<T> {
        self.cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_counts_each_kind() {
        let mut m = Eval::<u32>::new();
        let a = m.min(3, 5);
        let b = m.max(a, 4);
        let c = m.add(b, b);
        let _ = m.zero();
        assert_eq!((a, b, c), (3, 4, 8));
        assert_eq!(
            m.counts,
            OpCounts {
                min_count: 1,
                max_count: 1,
                add_count: 1
            }
        );
        assert_eq!(m.counts.total(), 3);
    }

    #[test]
    fn table_set_is_symmetric() {
        let mut t = Table::filled(3, 0u8);
        t.set(0, 2, 7);
        assert_eq!(t.get(2, 0), 7);
        assert_eq!(t.get(0, 2), 7);
    }
}

//! Dense square and rectangular operation tables.

use crate::error::{Error, Result};

/// Largest order any table may have; entries are stored as `u16`.
pub const MAX_TABLE_ORDER: usize = u16::MAX as usize;

/// A `rows × cols` table of element indices, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table {
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Table {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        assert!(rows <= MAX_TABLE_ORDER && cols <= MAX_TABLE_ORDER);
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert!(v <= MAX_TABLE_ORDER);
                data.push(v as u16);
            }
        }
        Table { rows, cols, data }
    }

    /// Builds a table from nested rows, checking the shape and that every
    /// entry lies in `0..bound`.
    pub fn from_rows(rows: &[Vec<usize>], cols: usize, bound: usize, what: &str) -> Result<Self> {
        if rows.len() > MAX_TABLE_ORDER || cols > MAX_TABLE_ORDER {
            return Err(Error::Format(format!("`{what}` is too large")));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Format(format!(
                    "`{what}` row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= bound {
                    return Err(Error::Format(format!(
                        "`{what}`[{i}][{j}] = {v} is out of range 0..{bound}"
                    )));
                }
                data.push(v as u16);
            }
        }
        Ok(Table {
            rows: rows.len(),
            cols,
            data,
        })
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.data[i * self.cols + j] as usize
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.data[i * self.cols..(i + 1) * self.cols]
            .iter()
            .map(|&v| v as usize)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows).map(|i| self.row(i).collect()).collect()
    }
}

impl std::fmt::Debug for Table {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i).collect::<Vec<_>>()))
            .finish()
    }
}

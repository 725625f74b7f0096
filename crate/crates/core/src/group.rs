//! Finite groups given by their addition table.
//!
//! Groups are written additively and need not be commutative. Index 0 is
//! always the identity.

use crate::error::{Error, Result};
use crate::nearring::{AxiomViolation, Law};
use crate::table::Table;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    add: Table,
    neg: Vec<usize>,
    labels: Vec<String>,
}

/// Checks that `add` is the Cayley table of a group with identity 0.
///
/// Scan order is identity, then inverses, then associativity; the first
/// failure is reported with its witness.
pub fn validate_group(add: &[Vec<usize>]) -> Result<FiniteGroup> {
    let n = add.len();
    if n == 0 {
        return Err(Error::Format("group table is empty".into()));
    }
    let table = Table::from_rows(add, n, n, "add")?;
    FiniteGroup::from_table(table, default_labels(n))
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl FiniteGroup {
    /// Validates a square table. Labels must have one entry per element.
    pub fn from_table(add: Table, labels: Vec<String>) -> Result<Self> {
        let n = add.rows();
        debug_assert_eq!(add.cols(), n);
        if let Some(x) = (0..n).find(|&x| add.get(0, x) != x || add.get(x, 0) != x) {
            return Err(Error::Axiom(AxiomViolation::new(Law::AddIdentity, vec![0, x])));
        }
        let mut neg = Vec::with_capacity(n);
        for i in 0..n {
            match (0..n).find(|&j| add.get(i, j) == 0 && add.get(j, i) == 0) {
                Some(j) => neg.push(j),
                None => {
                    return Err(Error::Axiom(AxiomViolation::new(Law::AddInverse, vec![i])));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = add.get(x, y);
                for z in 0..n {
                    if add.get(xy, z) != add.get(x, add.get(y, z)) {
                        return Err(Error::Axiom(AxiomViolation::new(Law::AddAssoc, vec![x, y, z])));
                    }
                }
            }
        }
        Ok(FiniteGroup { add, neg, labels })
    }

    /// Wraps a table already known to be a group (built by a construction).
    pub(crate) fn trusted(add: Table, labels: Vec<String>) -> Self {
        let n = add.rows();
        let neg = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| add.get(i, j) == 0)
                    .expect("constructed group lacks an inverse")
            })
            .collect();
        FiniteGroup { add, neg, labels }
    }

    /// The cyclic group ℤₙ with elements `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        FiniteGroup::trusted(Table::from_fn(n, n, |i, j| (i + j) % n), default_labels(n))
    }

    /// The Klein four-group on `0, a, b, c` with `a + c = b`.
    pub fn klein_four() -> Self {
        let labels = ["0", "a", "b", "c"].map(String::from).to_vec();
        // 0 ↔ 00, a ↔ 10, b ↔ 11, c ↔ 01
        let bits = [0b00usize, 0b10, 0b11, 0b01];
        let index = |v: usize| bits.iter().position(|&b| b == v).unwrap();
        FiniteGroup::trusted(Table::from_fn(4, 4, |i, j| index(bits[i] ^ bits[j])), labels)
    }

    /// Direct product, indexed row-major with the first factor most significant.
    pub fn product(factors: &[&FiniteGroup]) -> Self {
        let orders: Vec<usize> = factors.iter().map(|g| g.order()).collect();
        let n: usize = orders.iter().product();
        let add = Table::from_fn(n, n, |i, j| {
            let (xi, xj) = (split_index(i, &orders), split_index(j, &orders));
            let parts: Vec<usize> = factors.iter().enumerate().map(|(k, g)| g.add(xi[k], xj[k])).collect();
            join_index(&parts, &orders)
        });
        let labels = (0..n)
            .map(|i| {
                let parts = split_index(i, &orders);
                let inner: Vec<&str> = factors.iter().zip(&parts).map(|(g, &p)| g.label(p)).collect();
                format!("({})", inner.join(","))
            })
            .collect();
        FiniteGroup::trusted(add, labels)
    }

    pub fn order(&self) -> usize {
        self.neg.len()
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add.get(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    /// `x - y`, that is `x + (-y)`.
    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.add.get(x, self.neg[y])
    }

    pub fn table(&self) -> &Table {
        &self.add
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order());
        self.labels = labels;
        self
    }

    /// First pair `(x, y)` with `x + y ≠ y + x`, if any.
    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.add(x, y) != self.add(y, x))
    }
}

/// Splits a row-major product index into its coordinates.
pub(crate) fn split_index(mut i: usize, orders: &[usize]) -> Vec<usize> {
    let mut parts = vec![0; orders.len()];
    for k in (0..orders.len()).rev() {
        parts[k] = i % orders[k];
        i /= orders[k];
    }
    parts
}

pub(crate) fn join_index(parts: &[usize], orders: &[usize]) -> usize {
    parts.iter().zip(orders).fold(0, |acc, (&p, &o)| acc * o + p)
}

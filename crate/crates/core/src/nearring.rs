//! Finite right near-rings stored as a pair of Cayley tables.
//!
//! A right near-ring is a group `(N, +)`, not necessarily abelian, with an
//! associative multiplication `⋆` that distributes from the right:
//! `(x + y) ⋆ z = x ⋆ z + y ⋆ z`. Left distributivity, commutativity of `+`,
//! zero-symmetry (`x ⋆ 0 = 0`) and the existence of a unity are recorded as
//! flags rather than required.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{validate_group, FiniteGroup};
use crate::modules::NModule;
use crate::table::Table;

/// The axiom named by an [`AxiomViolation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    AddAssoc,
    AddIdentity,
    AddInverse,
    MulAssoc,
    RightDist,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Law::AddAssoc => "add_assoc",
            Law::AddIdentity => "add_identity",
            Law::AddInverse => "add_inverse",
            Law::MulAssoc => "mul_assoc",
            Law::RightDist => "right_dist",
        })
    }
}

/// A law together with the elements that break it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub law: Law,
    pub witness: Vec<usize>,
}

impl AxiomViolation {
    pub fn new(law: Law, witness: Vec<usize>) -> Self {
        AxiomViolation { law, witness }
    }

    /// Re-evaluates the witness directly against raw tables.
    pub fn violated_by(&self, add: &Table, mul: Option<&Table>) -> bool {
        let w = &self.witness;
        let n = add.rows();
        match self.law {
            Law::AddIdentity => w.len() == 2 && (add.get(w[0], w[1]) != w[1] || add.get(w[1], w[0]) != w[1]),
            Law::AddInverse => w.len() == 1 && !(0..n).any(|j| add.get(w[0], j) == 0 && add.get(j, w[0]) == 0),
            Law::AddAssoc => {
                let (x, y, z) = (w[0], w[1], w[2]);
                add.get(add.get(x, y), z) != add.get(x, add.get(y, z))
            }
            Law::MulAssoc => {
                let Some(mul) = mul else { return false };
                let (x, y, z) = (w[0], w[1], w[2]);
                mul.get(mul.get(x, y), z) != mul.get(x, mul.get(y, z))
            }
            Law::RightDist => {
                let Some(mul) = mul else { return false };
                let (x, y, z) = (w[0], w[1], w[2]);
                mul.get(add.get(x, y), z) != add.get(mul.get(x, z), mul.get(y, z))
            }
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.law, self.witness)
    }
}

/// A universally quantified property and, when it fails, the first
/// counterexample found in ascending scan order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<usize>,
}

impl Flag {
    pub const HOLDS: Flag = Flag {
        holds: true,
        witness: Vec::new(),
    };

    pub fn fails(witness: Vec<usize>) -> Self {
        Flag { holds: false, witness }
    }

    pub fn from_witness(witness: Option<Vec<usize>>) -> Self {
        match witness {
            None => Flag::HOLDS,
            Some(w) => Flag::fails(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// Always true for an accepted near-ring.
    pub right_distributive: bool,
    pub left_distributive: Flag,
    pub abelian_add: Flag,
    pub zero_symmetric: Flag,
    pub unital: bool,
    pub commutative_mul: Flag,
}

/// How a near-ring came to be. Constructions remember their inputs so that
/// results about products and extensions can be checked against them.
#[derive(Clone, Debug)]
pub enum Origin {
    Tables,
    M0(FiniteGroup),
    Product(Vec<NearRing>),
    Extension { ring: Box<NearRing>, module: Box<NModule> },
}

#[derive(Clone, Debug)]
pub struct NearRing {
    name: String,
    group: FiniteGroup,
    mul: Table,
    one: Option<usize>,
    flags: Flags,
    origin: Origin,
}

/// Validates a pair of tables as a right near-ring.
///
/// When `one` is `None` the unity is searched for (ascending, skipping 0) and
/// recorded if it exists; a missing unity is not an error.
pub fn validate_nearring(add: &[Vec<usize>], mul: &[Vec<usize>], one: Option<usize>) -> Result<NearRing> {
    let group = validate_group(add)?;
    let n = group.order();
    if mul.len() != n {
        return Err(Error::Format(format!("`mul` has {} rows, expected {n}", mul.len())));
    }
    let mul = Table::from_rows(mul, n, n, "mul")?;
    NearRing::from_parts(group, mul, one)
}

impl NearRing {
    /// Validates multiplication over an already validated group.
    pub fn from_parts(group: FiniteGroup, mul: Table, one: Option<usize>) -> Result<Self> {
        let n = group.order();
        if mul.rows() != n || mul.cols() != n {
            return Err(Error::Format("`mul` must be square of the group's order".into()));
        }
        for x in 0..n {
            for y in 0..n {
                let xy = mul.get(x, y);
                for z in 0..n {
                    if mul.get(xy, z) != mul.get(x, mul.get(y, z)) {
                        return Err(Error::Axiom(AxiomViolation::new(Law::MulAssoc, vec![x, y, z])));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let s = group.add(x, y);
                for z in 0..n {
                    if mul.get(s, z) != group.add(mul.get(x, z), mul.get(y, z)) {
                        return Err(Error::Axiom(AxiomViolation::new(Law::RightDist, vec![x, y, z])));
                    }
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| mul.get(0, x) != 0) {
            return Err(Error::Internal(format!("0 * {x} != 0 despite right distributivity")));
        }
        let one = match one {
            Some(u) => {
                if u >= n {
                    return Err(Error::Format(format!("`one` = {u} is out of range 0..{n}")));
                }
                if let Some(w) = (0..n).find(|&x| mul.get(u, x) != x || mul.get(x, u) != x) {
                    return Err(Error::BadUnity {
                        declared: u,
                        witness: w,
                    });
                }
                if u == 0 {
                    // a unity equal to 0 only exists in the trivial near-ring
                    return Err(Error::BadUnity {
                        declared: 0,
                        witness: 0,
                    });
                }
                Some(u)
            }
            None => find_unity(&mul),
        };
        let flags = compute_flags(&group, &mul, one);
        Ok(NearRing {
            name: String::new(),
            group,
            mul,
            one,
            flags,
            origin: Origin::Tables,
        })
    }

    /// Assembles a near-ring whose axioms hold by construction. Flags are
    /// still computed by exhaustive scan.
    pub(crate) fn trusted(group: FiniteGroup, mul: Table, one: Option<usize>, origin: Origin) -> Self {
        let flags = compute_flags(&group, &mul, one);
        Self::trusted_with_flags(group, mul, one, flags, origin)
    }

    pub(crate) fn trusted_with_flags(
        group: FiniteGroup,
        mul: Table,
        one: Option<usize>,
        flags: Flags,
        origin: Origin,
    ) -> Self {
        NearRing {
            name: String::new(),
            group,
            mul,
            one,
            flags,
            origin,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub(crate) fn with_origin(mut self, origin: Origin) -> Self {
        self.origin = origin;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.group = self.group.with_labels(labels);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.group.add(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.group.neg(x)
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.group.sub(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    /// `x ⋆ x ⋆ … ⋆ x` with `k ≥ 1` factors.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        assert!(k >= 1);
        (1..k).fold(x, |acc, _| self.mul(acc, x))
    }

    pub fn add_table(&self) -> &Table {
        self.group.table()
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn require_one(&self) -> Result<usize> {
        self.one.ok_or(Error::NotUnital)
    }

    pub fn flags(&self) -> &Flags {
        &self.flags
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn label(&self, x: usize) -> &str {
        self.group.label(x)
    }

    pub fn labels(&self) -> &[String] {
        self.group.labels()
    }

    /// Resolves an element by label, falling back to a decimal index.
    pub fn element(&self, key: &str) -> Option<usize> {
        self.labels()
            .iter()
            .position(|l| l == key)
            .or_else(|| key.parse().ok().filter(|&i| i < self.order()))
    }

    /// True when both near-rings have identical tables and unity.
    pub fn same_tables(&self, other: &NearRing) -> bool {
        self.add_table() == other.add_table() && self.mul == other.mul && self.one == other.one
    }

    /// A ring in the usual sense: abelian addition and both distributive laws.
    pub fn is_ring(&self) -> bool {
        self.flags.abelian_add.holds && self.flags.left_distributive.holds
    }
}

fn find_unity(mul: &Table) -> Option<usize> {
    let n = mul.rows();
    (1..n).find(|&u| (0..n).all(|x| mul.get(u, x) == x && mul.get(x, u) == x))
}

pub(crate) fn compute_flags(group: &FiniteGroup, mul: &Table, one: Option<usize>) -> Flags {
    let n = group.order();
    let left_dist = (|| {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = mul.get(x, group.add(y, z));
                    if lhs != group.add(mul.get(x, y), mul.get(x, z)) {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    })();
    let abelian = group.commutativity_witness().map(|(x, y)| vec![x, y]);
    let zero_sym = (0..n).find(|&x| mul.get(x, 0) != 0).map(|x| vec![x]);
    let commutative = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| mul.get(x, y) != mul.get(y, x))
        .map(|(x, y)| vec![x, y]);
    Flags {
        right_distributive: true,
        left_distributive: Flag::from_witness(left_dist),
        abelian_add: Flag::from_witness(abelian),
        zero_symmetric: Flag::from_witness(zero_sym),
        unital: one.is_some(),
        commutative_mul: Flag::from_witness(commutative),
    }
}

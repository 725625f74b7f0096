use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::nearring::NearRing;
use crate::subset::Subset;
use crate::table::Table;

/// A left module over a fixed near-ring `N`: a group `(M, +)` with an
/// action `N × M → M` that distributes over addition in `N` and is
/// associative with respect to `⋆`.
///
/// The module does not hold a reference to `N`; every operation that needs
/// the near-ring takes it as an argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NModule {
    carrier: FiniteGroup,
    action: Table,
}

impl NModule {
    /// Checks both module laws exhaustively, and `1·m = m` when `N` is unital.
    pub fn new(n: &NearRing, carrier: FiniteGroup, action: Table) -> Result<Self> {
        let m = NModule { carrier, action };
        if m.action.rows() != n.order() || m.action.cols() != m.order() {
            return Err(Error::ModuleLaw(format!(
                "action table is {}×{}, expected {}×{}",
                m.action.rows(),
                m.action.cols(),
                n.order(),
                m.order()
            )));
        }
        if let Some(w) = m.law_violation(n) {
            return Err(Error::ModuleLaw(w));
        }
        Ok(m)
    }

    pub(crate) fn trusted(carrier: FiniteGroup, action: Table) -> Self {
        NModule { carrier, action }
    }

    /// `N` acting on itself by left multiplication.
    pub fn regular(n: &NearRing) -> Self {
        NModule {
            carrier: n.group().clone(),
            action: n.mul_table().clone(),
        }
    }

    fn law_violation(&self, n: &NearRing) -> Option<String> {
        for r1 in n.elements() {
            for r2 in n.elements() {
                let (s, p) = (n.add(r1, r2), n.mul(r1, r2));
                for x in self.elements() {
                    if self.act(s, x) != self.add(self.act(r1, x), self.act(r2, x)) {
                        return Some(format!("(r1 + r2)m != r1 m + r2 m at r1={r1}, r2={r2}, m={x}"));
                    }
                    if self.act(p, x) != self.act(r1, self.act(r2, x)) {
                        return Some(format!("(r1 r2)m != r1(r2 m) at r1={r1}, r2={r2}, m={x}"));
                    }
                }
            }
        }
        if let Some(one) = n.one() {
            if let Some(x) = self.elements().find(|&x| self.act(one, x) != x) {
                return Some(format!("1·m != m at m={x}"));
            }
        }
        None
    }

    pub fn order(&self) -> usize {
        self.carrier.order()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn carrier(&self) -> &FiniteGroup {
        &self.carrier
    }

    pub fn action_table(&self) -> &Table {
        &self.action
    }

    /// `r · x`.
    #[inline]
    pub fn act(&self, r: usize, x: usize) -> usize {
        self.action.get(r, x)
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.carrier.add(x, y)
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.carrier.neg(x)
    }

    #[inline]
    pub fn sub(&self, x: usize, y: usize) -> usize {
        self.carrier.sub(x, y)
    }

    /// `N · x`, the set of all `r · x`.
    pub fn orbit(&self, x: usize) -> Subset {
        Subset::from_iter(self.order(), (0..self.action.rows()).map(|r| self.act(r, x)))
    }

    /// `{ r ∈ N : r · x = 0 }`.
    pub fn annihilator_of(&self, x: usize) -> Subset {
        Subset::from_iter(
            self.action.rows(),
            (0..self.action.rows()).filter(|&r| self.act(r, x) == 0),
        )
    }

    /// Restricts the module to `l`, which must be a subgroup closed under the
    /// action. Elements of the result are the members of `l` in ascending
    /// order; the returned vector maps new indices back to old ones.
    pub fn submodule(&self, l: &Subset) -> Result<(NModule, Vec<usize>)> {
        let members = l.to_vec();
        if members.first() != Some(&0) {
            return Err(Error::ModuleLaw("subset does not contain 0".into()));
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &x) in members.iter().enumerate() {
            index[x] = i;
        }
        let k = members.len();
        for &x in &members {
            for &y in &members {
                if !l.contains(self.add(x, y)) {
                    return Err(Error::ModuleLaw(format!("subset not closed under + at ({x}, {y})")));
                }
            }
            for r in 0..self.action.rows() {
                if !l.contains(self.act(r, x)) {
                    return Err(Error::ModuleLaw(format!(
                        "subset not closed under the action at ({r}, {x})"
                    )));
                }
            }
        }
        let add = Table::from_fn(k, k, |i, j| index[self.add(members[i], members[j])]);
        let labels = members.iter().map(|&x| self.carrier.label(x).to_string()).collect();
        let action = Table::from_fn(self.action.rows(), k, |r, i| index[self.act(r, members[i])]);
        Ok((
            NModule {
                carrier: FiniteGroup::trusted(add, labels),
                action,
            },
            members,
        ))
    }
}

/// The regular representation `_N N`.
pub fn regular_representation(n: &NearRing) -> NModule {
    NModule::regular(n)
}

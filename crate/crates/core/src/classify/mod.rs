//! Element-level and structure-level predicates, each with the witness
//! that decides it.
//!
//! [`Analysis`] computes the per-element sets once (orbits, annihilators,
//! units, morphic verdicts) and serves every query from them. Witnesses are
//! always the least index that works.

mod morphic;
mod structure;

pub use morphic::{algorithm_i, is_left_morphic, MorphicStatus, MorphicVerdict, CROSS_CHECK_ORDER};
pub use structure::{idempotent_statements, StructureProfile};

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modules::{annihilator, orbit, NModule, Side};
use crate::nearring::NearRing;
use crate::subset::Subset;
use morphic::{verdict_for, LeftSets};

/// Full classification is refused above this order.
pub const CLASSIFY_ORDER_CAP: usize = 256;

/// The units of a unital near-ring and their inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Units {
    pub members: Subset,
    /// `inverse[u]` for every unit `u`, `None` elsewhere.
    pub inverse: Vec<Option<usize>>,
}

impl Units {
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    pub fn inverse_of(&self, u: usize) -> Option<usize> {
        self.inverse[u]
    }
}

/// All elements with a two-sided inverse.
pub fn units(n: &NearRing) -> Result<Units> {
    let one = n.require_one()?;
    let inverse: Vec<Option<usize>> = n
        .elements()
        .map(|a| n.elements().find(|&x| n.mul(a, x) == one && n.mul(x, a) == one))
        .collect();
    let members = Subset::from_iter(n.order(), n.elements().filter(|&a| inverse[a].is_some()));
    Ok(Units { members, inverse })
}

/// `|Na|`, `|aN|`, `|(0:_l a)|` and `|(0:_r a)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sizes {
    pub left_orbit: usize,
    pub right_orbit: usize,
    pub left_annihilator: usize,
    pub right_annihilator: usize,
}

/// Everything known about one element. `Option<usize>` fields hold the
/// least witness when the property holds. Fields that need a unity are
/// `None` on non-unital near-rings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementProfile {
    pub index: usize,
    pub label: String,
    pub unit: Option<bool>,
    pub inverse: Option<usize>,
    pub idempotent: bool,
    pub central: bool,
    /// Least `k` with `aᵏ = 0`, or 0 when `a` is not nilpotent.
    pub nilpotency_index: usize,
    /// `x` with `a = axa`.
    pub regular: Option<usize>,
    /// Unit `u` with `a = aua`.
    pub unit_regular: Option<usize>,
    /// `x` with `a = xa²`.
    pub left_strongly_regular: Option<usize>,
    /// `x` with `a = a²x`.
    pub right_strongly_regular: Option<usize>,
    pub morphic: Option<MorphicVerdict>,
    pub sizes: Sizes,
}

/// Cached per-element data for one near-ring.
pub struct Analysis<'a> {
    n: &'a NearRing,
    reg: NModule,
    left: LeftSets,
    right_orbits: Vec<Subset>,
    right_annihilators: Vec<Subset>,
    units: Option<Units>,
    morphic: Option<Vec<MorphicVerdict>>,
    structure: OnceLock<StructureProfile>,
}

impl<'a> Analysis<'a> {
    /// Builds the cache. Morphic verdicts are computed for unital
    /// near-rings, cross-checked when `cross_check` and `|N| ≤ 8`.
    pub fn new(n: &'a NearRing, cross_check: bool) -> Result<Self> {
        Self::with_cap(n, cross_check, CLASSIFY_ORDER_CAP)
    }

    pub fn with_cap(n: &'a NearRing, cross_check: bool, cap: usize) -> Result<Self> {
        if n.order() > cap {
            return Err(Error::CapExceeded {
                what: "classification",
                actual: n.order(),
                limit: cap,
            });
        }
        let k = n.order();
        let reg = NModule::regular(n);
        let left = LeftSets::new(n);
        let right_orbits = n.elements().map(|a| orbit(n, Side::Right, a)).collect();
        let right_annihilators = n
            .elements()
            .map(|a| annihilator(n, Side::Right, &Subset::singleton(k, a)))
            .collect();
        let units = units(n).ok();
        let morphic = match units {
            Some(_) => Some(
                n.elements()
                    .map(|a| verdict_for(n, &reg, &left, a, cross_check))
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        Ok(Analysis {
            n,
            reg,
            left,
            right_orbits,
            right_annihilators,
            units,
            morphic,
            structure: OnceLock::new(),
        })
    }

    pub fn nearring(&self) -> &'a NearRing {
        self.n
    }

    pub fn regular_module(&self) -> &NModule {
        &self.reg
    }

    /// `Na`.
    pub fn left_orbit(&self, a: usize) -> &Subset {
        &self.left.orbits[a]
    }

    /// `(0:_l a)`.
    pub fn left_annihilator(&self, a: usize) -> &Subset {
        &self.left.annihilators[a]
    }

    /// `aN`.
    pub fn right_orbit(&self, a: usize) -> &Subset {
        &self.right_orbits[a]
    }

    /// `(0:_r a)`.
    pub fn right_annihilator(&self, a: usize) -> &Subset {
        &self.right_annihilators[a]
    }

    pub fn units(&self) -> Result<&Units> {
        self.units.as_ref().ok_or(Error::NotUnital)
    }

    pub fn morphic(&self, a: usize) -> Result<&MorphicVerdict> {
        self.morphic.as_ref().map(|v| &v[a]).ok_or(Error::NotUnital)
    }

    pub fn is_morphic(&self, a: usize) -> Result<bool> {
        Ok(self.morphic(a)?.is_morphic())
    }

    /// `1 − e`, computed as `1 + (−e)`.
    pub fn one_minus(&self, e: usize) -> Result<usize> {
        Ok(self.n.add(self.n.require_one()?, self.n.neg(e)))
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.n.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.n.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    /// First `x` with `a ⋆ x ≠ x ⋆ a`.
    pub fn centrality_witness(&self, a: usize) -> Option<usize> {
        self.n.elements().find(|&x| self.n.mul(a, x) != self.n.mul(x, a))
    }

    pub fn nilpotency_index(&self, a: usize) -> usize {
        let mut p = a;
        for k in 1..=self.n.order() {
            if p == 0 {
                return k;
            }
            p = self.n.mul(p, a);
        }
        0
    }

    pub fn regular_witness(&self, a: usize) -> Option<usize> {
        let n = self.n;
        n.elements().find(|&x| n.mul(n.mul(a, x), a) == a)
    }

    pub fn unit_regular_witness(&self, a: usize) -> Option<usize> {
        let n = self.n;
        self.units.as_ref()?.iter().find(|&u| n.mul(n.mul(a, u), a) == a)
    }

    pub fn lsr_witness(&self, a: usize) -> Option<usize> {
        let n = self.n;
        let sq = n.mul(a, a);
        n.elements().find(|&x| n.mul(x, sq) == a)
    }

    pub fn rsr_witness(&self, a: usize) -> Option<usize> {
        let n = self.n;
        let sq = n.mul(a, a);
        n.elements().find(|&x| n.mul(sq, x) == a)
    }

    pub fn element_profile(&self, a: usize) -> Result<ElementProfile> {
        let n = self.n;
        if a >= n.order() {
            return Err(Error::ElementOutOfRange(a));
        }
        let units = self.units.as_ref();
        Ok(ElementProfile {
            index: a,
            label: n.label(a).to_string(),
            unit: units.map(|u| u.contains(a)),
            inverse: units.and_then(|u| u.inverse_of(a)),
            idempotent: self.is_idempotent(a),
            central: self.centrality_witness(a).is_none(),
            nilpotency_index: self.nilpotency_index(a),
            regular: self.regular_witness(a),
            unit_regular: self.unit_regular_witness(a),
            left_strongly_regular: self.lsr_witness(a),
            right_strongly_regular: self.rsr_witness(a),
            morphic: self.morphic.as_ref().map(|v| v[a].clone()),
            sizes: Sizes {
                left_orbit: self.left_orbit(a).len(),
                right_orbit: self.right_orbit(a).len(),
                left_annihilator: self.left_annihilator(a).len(),
                right_annihilator: self.right_annihilator(a).len(),
            },
        })
    }

    pub fn element_profiles(&self) -> Result<Vec<ElementProfile>> {
        self.n.elements().map(|a| self.element_profile(a)).collect()
    }

    /// Structure flags, computed on first use.
    pub fn structure(&self) -> &StructureProfile {
        self.structure.get_or_init(|| StructureProfile::compute(self))
    }

    pub fn structure_profile(&self) -> StructureProfile {
        self.structure().clone()
    }
}

/// Profile of one element, computed from scratch.
pub fn element_profile(n: &NearRing, a: usize) -> Result<ElementProfile> {
    Analysis::new(n, false)?.element_profile(a)
}

/// Structure flags of a near-ring, computed from scratch.
pub fn structure_profile(n: &NearRing) -> Result<StructureProfile> {
    Ok(Analysis::new(n, false)?.structure_profile())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;

    fn labels(n: &NearRing, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
        xs.into_iter().map(|x| n.label(x).to_string()).collect()
    }

    #[test]
    fn units_of_examples() {
        let m = builtin("m0_z3").unwrap();
        assert_eq!(labels(&m, units(&m).unwrap().iter()), ["f6", "f8"]);
        let k = builtin("klein4_ring").unwrap();
        assert_eq!(labels(&k, units(&k).unwrap().iter()), ["b"]);
        let z5 = builtin("zn_ring(5)").unwrap();
        assert_eq!(units(&z5).unwrap().iter().collect::<Vec<_>>(), [1, 2, 3, 4]);
        assert_eq!(units(&z5).unwrap().inverse_of(2), Some(3));
    }

    #[test]
    fn f5_profile() {
        let n = builtin("m0_z3").unwrap();
        let p = element_profile(&n, n.element("f5").unwrap()).unwrap();
        assert!(p.idempotent);
        assert!(p.unit_regular.is_some());
        assert!(!p.morphic.unwrap().is_morphic());
    }

    #[test]
    fn square_zero_matrix_profile() {
        let n = builtin("mat2_f2").unwrap();
        let p = element_profile(&n, n.element("[01;00]").unwrap()).unwrap();
        assert_eq!(p.nilpotency_index, 2);
        assert_eq!(p.left_strongly_regular, None);
        assert!(p.regular.is_some());
    }

    #[test]
    fn zero_is_regular_and_morphic_with_a_unit_witness() {
        for name in ["klein4_ring", "m0_z3", "mat2_f2", "zn_ring(6)", "m0_z3_x_f2"] {
            let n = builtin(name).unwrap();
            let an = Analysis::new(&n, false).unwrap();
            let p = an.element_profile(0).unwrap();
            assert!(p.regular.is_some());
            let u = p.unit_regular.unwrap();
            assert!(an.units().unwrap().contains(u));
            let b = p.morphic.unwrap().witness().unwrap();
            assert!(an.units().unwrap().contains(b), "{name}");
        }
    }

    #[test]
    fn non_unital_profiles_gate_unit_fields() {
        let n = crate::nearring::validate_nearring(&[vec![0, 1], vec![1, 0]], &[vec![0, 0], vec![0, 0]], None).unwrap();
        let an = Analysis::new(&n, true).unwrap();
        let p = an.element_profile(1).unwrap();
        assert_eq!(p.unit, None);
        assert_eq!(p.unit_regular, None);
        assert!(p.morphic.is_none());
        assert_eq!(p.nilpotency_index, 2);
    }

    #[test]
    fn classification_cap() {
        let n = builtin("zn_ring(12)").unwrap();
        assert!(matches!(
            Analysis::with_cap(&n, false, 10),
            Err(Error::CapExceeded { .. })
        ));
    }
}

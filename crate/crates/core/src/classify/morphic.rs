use serde::Serialize;

use crate::error::{Error, Result};
use crate::modules::{
    annihilator, is_n_ideal, modules_isomorphic, orbit, quotient_module, IdealVerdict, IsoMode, NModule, Side,
    BRUTEFORCE_ISO_CAP,
};
use crate::nearring::NearRing;
use crate::subset::Subset;

/// Near-rings up to this order get both morphic decision procedures.
pub const CROSS_CHECK_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MorphicStatus {
    /// `Na = (0:_l b)` and `Nb = (0:_l a)`.
    Morphic { witness: usize },
    /// `Na` fails to be an N-ideal of the regular module.
    NaNotIdeal { verdict: IdealVerdict },
    /// `Na` is an N-ideal but no `b` works.
    NoWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphicVerdict {
    #[serde(flatten)]
    pub status: MorphicStatus,
    /// Whether the quotient-isomorphism procedure was also run and agreed.
    pub cross_checked: bool,
}

impl MorphicVerdict {
    pub fn is_morphic(&self) -> bool {
        matches!(self.status, MorphicStatus::Morphic { .. })
    }

    pub fn witness(&self) -> Option<usize> {
        match self.status {
            MorphicStatus::Morphic { witness } => Some(witness),
            _ => None,
        }
    }
}

/// Left orbits and left annihilators of every element, indexed by element.
pub(crate) struct LeftSets {
    pub orbits: Vec<Subset>,
    pub annihilators: Vec<Subset>,
}

impl LeftSets {
    pub fn new(n: &NearRing) -> Self {
        let k = n.order();
        LeftSets {
            orbits: n.elements().map(|a| orbit(n, Side::Left, a)).collect(),
            annihilators: n
                .elements()
                .map(|a| annihilator(n, Side::Left, &Subset::singleton(k, a)))
                .collect(),
        }
    }
}

/// The witness search: `Na` must be an N-ideal, then the least `b` with
/// `Na = (0:_l b)` and `Nb = (0:_l a)` is returned.
pub(crate) fn algorithm_w(n: &NearRing, reg: &NModule, sets: &LeftSets, a: usize) -> MorphicStatus {
    let na = &sets.orbits[a];
    let verdict = is_n_ideal(n, reg, na);
    if !verdict.is_n_ideal() {
        return MorphicStatus::NaNotIdeal { verdict };
    }
    let ann = &sets.annihilators[a];
    match n
        .elements()
        .find(|&b| &sets.annihilators[b] == na && &sets.orbits[b] == ann)
    {
        Some(witness) => MorphicStatus::Morphic { witness },
        None => MorphicStatus::NoWitness,
    }
}

/// Decides `N/Na ≅ (0:_l a)` directly: builds the quotient module and
/// searches for an isomorphism onto the annihilator, by enumerating
/// bijections for small modules and by images of the generator `1 + Na`
/// otherwise.
///
/// When `(0:_l a)` is not closed under the action it is not a submodule
/// and the answer is `false`. This only happens without zero-symmetry.
pub fn algorithm_i(n: &NearRing, a: usize) -> Result<bool> {
    n.require_one()?;
    if a >= n.order() {
        return Err(Error::ElementOutOfRange(a));
    }
    let reg = NModule::regular(n);
    let na = orbit(n, Side::Left, a);
    let q = match quotient_module(n, &reg, &na) {
        Ok(q) => q,
        Err(Error::NotNIdeal(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let ann = annihilator(n, Side::Left, &Subset::singleton(n.order(), a));
    let Ok((sub, _)) = reg.submodule(&ann) else {
        return Ok(false);
    };
    let mode = if q.module.order() <= BRUTEFORCE_ISO_CAP {
        IsoMode::Bruteforce
    } else {
        IsoMode::Generator
    };
    Ok(modules_isomorphic(n, &q.module, &sub, mode)?.is_some())
}

/// Left-morphic verdict for one element.
///
/// With `cross_check` and `|N| ≤ 8` the verdict is confirmed by
/// [`algorithm_i`]; a disagreement is reported as an internal error.
pub fn is_left_morphic(n: &NearRing, a: usize, cross_check: bool) -> Result<MorphicVerdict> {
    n.require_one()?;
    if a >= n.order() {
        return Err(Error::ElementOutOfRange(a));
    }
    let reg = NModule::regular(n);
    let sets = LeftSets::new(n);
    verdict_for(n, &reg, &sets, a, cross_check)
}

pub(crate) fn verdict_for(
    n: &NearRing,
    reg: &NModule,
    sets: &LeftSets,
    a: usize,
    cross_check: bool,
) -> Result<MorphicVerdict> {
    let status = algorithm_w(n, reg, sets, a);
    let cross_checked = cross_check && n.order() <= CROSS_CHECK_ORDER;
    if cross_checked {
        let by_iso = algorithm_i(n, a)?;
        let by_witness = matches!(status, MorphicStatus::Morphic { .. });
        if by_iso != by_witness {
            return Err(Error::Internal(format!(
                "morphic procedures disagree on element {a} of {}: witness search {by_witness}, isomorphism {by_iso}",
                n.name()
            )));
        }
    }
    Ok(MorphicVerdict { status, cross_checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;

    #[test]
    fn klein_witnesses() {
        let n = builtin("klein4_ring").unwrap();
        let e = |l: &str| n.element(l).unwrap();
        let v = is_left_morphic(&n, e("a"), true).unwrap();
        assert_eq!(v.witness(), Some(e("c")));
        assert!(v.cross_checked);
        assert_eq!(is_left_morphic(&n, e("b"), true).unwrap().witness(), Some(0));
        assert_eq!(is_left_morphic(&n, e("c"), true).unwrap().witness(), Some(e("a")));
        assert_eq!(is_left_morphic(&n, 0, true).unwrap().witness(), Some(e("b")));
    }

    #[test]
    fn f5_is_not_morphic() {
        let n = builtin("m0_z3").unwrap();
        let f5 = n.element("f5").unwrap();
        let v = is_left_morphic(&n, f5, false).unwrap();
        match &v.status {
            MorphicStatus::NaNotIdeal { verdict } => {
                let na = orbit(&n, Side::Left, f5);
                assert!(verdict.witness_holds(&NModule::regular(&n), &na));
            }
            other => panic!("{other:?}"),
        }
        assert!(!algorithm_i(&n, f5).unwrap());
    }

    #[test]
    fn non_unital_is_refused() {
        // the zero multiplication on ℤ₂
        let n = crate::nearring::validate_nearring(&[vec![0, 1], vec![1, 0]], &[vec![0, 0], vec![0, 0]], None).unwrap();
        assert!(matches!(is_left_morphic(&n, 0, false), Err(Error::NotUnital)));
    }

    #[test]
    fn procedures_agree_without_zero_symmetry() {
        let n = builtin("ext_f2_f2").unwrap();
        for a in n.elements() {
            is_left_morphic(&n, a, true).unwrap();
        }
    }
}

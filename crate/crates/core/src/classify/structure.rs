use serde::Serialize;

use super::Analysis;
use crate::error::Result;
use crate::modules::{generated_left_ideal, LEFT_IDEAL_ORDER_CAP};
use crate::nearring::Flag;
use crate::subset::Subset;

/// Structure-level flags. A failing flag carries the first counterexample:
///
/// | flag | witness |
/// |------|---------|
/// | `is_ring` | the left-distributivity or commutativity witness |
/// | `is_near_field` | `[a]`, a nonzero non-unit (empty when there is no unity) |
/// | `reduced` | `[a]`, a nonzero nilpotent |
/// | `has_ifp` | `[a, r, b]` with `ab = 0` and `arb ≠ 0` |
/// | `subcommutative` | `[a]` with `Na ≠ aN` |
/// | `boolean` | `[a]` with `a² ≠ a` |
/// | `weakly_divisible` | `[a, b]` with `b ∉ Na` and `a ∉ Nb` |
/// | `left_duo` | `[x, r]` with `xr` outside the left ideal generated by `x` |
/// | `idempotents_central` | `[e, x]` with `ex ≠ xe` |
/// | regularity flags, `left_morphic` | `[a]`, the first element without a witness |
///
/// `unit_regular` and `left_morphic` are `None` without a unity and
/// `left_duo` is `None` above order 64.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureProfile {
    pub zero_symmetric: Flag,
    pub abelian_add: Flag,
    pub is_ring: Flag,
    pub is_near_field: Flag,
    pub reduced: Flag,
    pub has_ifp: Flag,
    pub subcommutative: Flag,
    pub boolean: Flag,
    pub weakly_divisible: Flag,
    pub left_duo: Option<Flag>,
    pub idempotents_central: Flag,
    pub regular: Flag,
    pub unit_regular: Option<Flag>,
    pub left_strongly_regular: Flag,
    pub right_strongly_regular: Flag,
    pub left_morphic: Option<Flag>,
    pub generalised_near_field: Flag,
}

fn first(it: impl IntoIterator<Item = usize>, bad: impl Fn(usize) -> bool) -> Flag {
    Flag::from_witness(it.into_iter().find(|&a| bad(a)).map(|a| vec![a]))
}

impl StructureProfile {
    pub(crate) fn compute(an: &Analysis<'_>) -> Self {
        let n = an.nearring();
        let f = n.flags();
        let elems = || n.elements();

        let is_ring = if !f.left_distributive.holds {
            f.left_distributive.clone()
        } else {
            f.abelian_add.clone()
        };
        let is_near_field = match an.units() {
            Ok(u) => first(elems().skip(1), |a| !u.contains(a)),
            Err(_) => Flag::fails(vec![]),
        };
        let reduced = first(elems().skip(1), |a| an.nilpotency_index(a) > 0);
        let has_ifp = Flag::from_witness(
            elems()
                .flat_map(|a| elems().map(move |b| (a, b)))
                .filter(|&(a, b)| n.mul(a, b) == 0)
                .find_map(|(a, b)| elems().find(|&r| n.mul(n.mul(a, r), b) != 0).map(|r| vec![a, r, b])),
        );
        let subcommutative = first(elems(), |a| an.left_orbit(a) != an.right_orbit(a));
        let boolean = first(elems(), |a| !an.is_idempotent(a));
        let weakly_divisible = Flag::from_witness(
            elems()
                .flat_map(|a| elems().map(move |b| (a, b)))
                .find(|&(a, b)| !an.left_orbit(a).contains(b) && !an.left_orbit(b).contains(a))
                .map(|(a, b)| vec![a, b]),
        );
        let left_duo = (n.order() <= LEFT_IDEAL_ORDER_CAP).then(|| {
            // every left ideal is a sum of principal ones, so it suffices
            // that each principal left ideal absorbs right multiplication
            Flag::from_witness(elems().find_map(|x| {
                let l = generated_left_ideal(n, &Subset::singleton(n.order(), x));
                let found = l
                    .iter()
                    .flat_map(|y| elems().map(move |r| (y, r)))
                    .find(|&(y, r)| !l.contains(n.mul(y, r)));
                found.map(|(y, r)| vec![y, r])
            }))
        });
        let idempotents_central = Flag::from_witness(
            an.idempotents()
                .into_iter()
                .find_map(|e| an.centrality_witness(e).map(|x| vec![e, x])),
        );
        let regular = first(elems(), |a| an.regular_witness(a).is_none());
        let unit_regular = an
            .units()
            .ok()
            .map(|_| first(elems(), |a| an.unit_regular_witness(a).is_none()));
        let left_strongly_regular = first(elems(), |a| an.lsr_witness(a).is_none());
        let right_strongly_regular = first(elems(), |a| an.rsr_witness(a).is_none());
        let left_morphic = an
            .units()
            .ok()
            .map(|_| first(elems(), |a| !an.is_morphic(a).unwrap_or(false)));
        let generalised_near_field = if !regular.holds {
            regular.clone()
        } else {
            subcommutative.clone()
        };
        StructureProfile {
            zero_symmetric: f.zero_symmetric.clone(),
            abelian_add: f.abelian_add.clone(),
            is_ring,
            is_near_field,
            reduced,
            has_ifp,
            subcommutative,
            boolean,
            weakly_divisible,
            left_duo,
            idempotents_central,
            regular,
            unit_regular,
            left_strongly_regular,
            right_strongly_regular,
            left_morphic,
            generalised_near_field,
        }
    }

    /// Left morphic and regular; `None` without a unity.
    pub fn left_morphic_regular(&self) -> Option<bool> {
        self.left_morphic.as_ref().map(|m| m.holds && self.regular.holds)
    }
}

/// For an idempotent `e`, the seven conditions
///
/// 1. `e` is left morphic;
/// 2. `Ne = (0:_l 1−e)`;
/// 3. `x(1−e) = −xe + x` for all `x`;
/// 4. `(0:_l e) ∩ (0:_l 1−e) = {0}` and `e(1−e) = 0`;
/// 5. `x(1−e) = x − xe` for all `x`;
/// 6. `N(1−e) = (0:_l e)` and `e(1−e) = 0`;
/// 7. `1−e` is left morphic and idempotent.
///
/// Needs a unity.
pub fn idempotent_statements(an: &Analysis<'_>, e: usize) -> Result<[bool; 7]> {
    let n = an.nearring();
    let f = an.one_minus(e)?;
    let ef_zero = n.mul(e, f) == 0;
    let s1 = an.is_morphic(e)?;
    let s2 = an.left_orbit(e) == an.left_annihilator(f);
    let s3 = n.elements().all(|x| n.mul(x, f) == n.add(n.neg(n.mul(x, e)), x));
    let s4 = an.left_annihilator(e).intersection(an.left_annihilator(f)).is_zero() && ef_zero;
    let s5 = n.elements().all(|x| n.mul(x, f) == n.add(x, n.neg(n.mul(x, e))));
    let s6 = an.left_orbit(f) == an.left_annihilator(e) && ef_zero;
    let s7 = an.is_morphic(f)? && an.is_idempotent(f);
    Ok([s1, s2, s3, s4, s5, s6, s7])
}

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::NModule;
use crate::error::{Error, Result};
use crate::nearring::NearRing;
use crate::subset::Subset;

/// Left ideals are enumerated only up to this order.
pub const LEFT_IDEAL_ORDER_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Left: `{x : x⋆s = 0 for all s ∈ S}`. Right: `{x : s⋆x = 0 for all s ∈ S}`.
pub fn annihilator(n: &NearRing, side: Side, s: &Subset) -> Subset {
    Subset::from_iter(
        n.order(),
        n.elements().filter(|&x| {
            s.iter().all(|y| match side {
                Side::Left => n.mul(x, y) == 0,
                Side::Right => n.mul(y, x) == 0,
            })
        }),
    )
}

/// Left: `Na`. Right: `aN`.
pub fn orbit(n: &NearRing, side: Side, a: usize) -> Subset {
    Subset::from_iter(
        n.order(),
        n.elements().map(|x| match side {
            Side::Left => n.mul(x, a),
            Side::Right => n.mul(a, x),
        }),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    NotSubgroup,
    NotNormal,
    #[serde(rename = "not_N_ideal")]
    NotNIdeal,
    #[serde(rename = "N_ideal")]
    NIdeal,
}

/// Outcome of [`is_n_ideal`]. The witness breaks the named condition:
/// `[]` when 0 is missing or `[x, y]` with `x + y ∉ L` for `NotSubgroup`,
/// `[m, l]` with `m + l − m ∉ L` for `NotNormal`, and `[r, l, m]` with
/// `r(l + m) − rm ∉ L` for `NotNIdeal`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealVerdict {
    pub kind: IdealKind,
    pub witness: Vec<usize>,
}

impl IdealVerdict {
    pub fn is_n_ideal(&self) -> bool {
        self.kind == IdealKind::NIdeal
    }

    /// Re-evaluates the witness against the module.
    pub fn witness_holds(&self, m: &NModule, l: &Subset) -> bool {
        let w = &self.witness;
        match self.kind {
            IdealKind::NIdeal => w.is_empty(),
            IdealKind::NotSubgroup => match w.as_slice() {
                [] => !l.contains(0),
                [x, y] => l.contains(*x) && l.contains(*y) && !l.contains(m.add(*x, *y)),
                _ => false,
            },
            IdealKind::NotNormal => match w.as_slice() {
                [g, x] => l.contains(*x) && !l.contains(m.sub(m.add(*g, *x), *g)),
                _ => false,
            },
            IdealKind::NotNIdeal => match w.as_slice() {
                [r, x, y] => l.contains(*x) && !l.contains(m.sub(m.act(*r, m.add(*x, *y)), m.act(*r, *y))),
                _ => false,
            },
        }
    }
}

impl fmt::Display for IdealVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            IdealKind::NotSubgroup => "not a subgroup",
            IdealKind::NotNormal => "not normal",
            IdealKind::NotNIdeal => "fails r(l+m)-rm ∈ L",
            IdealKind::NIdeal => "N-ideal",
        };
        if self.witness.is_empty() {
            f.write_str(kind)
        } else {
            write!(f, "{kind} at {:?}", self.witness)
        }
    }
}

/// Decides whether `l` is an N-ideal of `m`, checking subgroup, normality
/// and the condition `r(l + m) − rm ∈ L` in that order, each scanned in
/// ascending index order.
pub fn is_n_ideal(n: &NearRing, m: &NModule, l: &Subset) -> IdealVerdict {
    let verdict = |kind, witness| IdealVerdict { kind, witness };
    if !l.contains(0) {
        return verdict(IdealKind::NotSubgroup, vec![]);
    }
    for x in l.iter() {
        for y in l.iter() {
            if !l.contains(m.add(x, y)) {
                return verdict(IdealKind::NotSubgroup, vec![x, y]);
            }
        }
    }
    for g in m.elements() {
        for x in l.iter() {
            if !l.contains(m.sub(m.add(g, x), g)) {
                return verdict(IdealKind::NotNormal, vec![g, x]);
            }
        }
    }
    for r in n.elements() {
        for x in l.iter() {
            for y in m.elements() {
                if !l.contains(m.sub(m.act(r, m.add(x, y)), m.act(r, y))) {
                    return verdict(IdealKind::NotNIdeal, vec![r, x, y]);
                }
            }
        }
    }
    verdict(IdealKind::NIdeal, vec![])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealClass {
    NotLeftIdeal,
    LeftIdeal,
    TwoSidedIdeal,
}

/// A left ideal is an N-ideal of the regular representation; it is
/// two-sided when additionally `LN ⊆ L`.
pub fn is_ideal(n: &NearRing, l: &Subset) -> IdealClass {
    if !is_n_ideal(n, &NModule::regular(n), l).is_n_ideal() {
        IdealClass::NotLeftIdeal
    } else if right_absorption_witness(n, l).is_some() {
        IdealClass::LeftIdeal
    } else {
        IdealClass::TwoSidedIdeal
    }
}

/// First `(x, r)` with `x ∈ L` and `x⋆r ∉ L`.
pub fn right_absorption_witness(n: &NearRing, l: &Subset) -> Option<(usize, usize)> {
    l.iter()
        .flat_map(|x| n.elements().map(move |r| (x, r)))
        .find(|&(x, r)| !l.contains(n.mul(x, r)))
}

/// The smallest left ideal containing `seeds`.
pub fn generated_left_ideal(n: &NearRing, seeds: &Subset) -> Subset {
    let mut l = seeds.clone();
    l.insert(0);
    loop {
        let mut next = l.clone();
        for x in l.iter() {
            for y in l.iter() {
                next.insert(n.add(x, y));
            }
            for g in n.elements() {
                next.insert(n.sub(n.add(g, x), g));
            }
            for r in n.elements() {
                for y in n.elements() {
                    next.insert(n.sub(n.mul(r, n.add(x, y)), n.mul(r, y)));
                }
            }
        }
        if next == l {
            return l;
        }
        l = next;
    }
}

/// All left ideals of `N`, ascending by size and then by members.
///
/// Every left ideal is the join of the principal left ideals of its
/// elements, so seeding with the principal ones and closing under pairwise
/// joins reaches the whole lattice.
pub fn enumerate_left_ideals(n: &NearRing, cap: usize) -> Result<Vec<Subset>> {
    if n.order() > LEFT_IDEAL_ORDER_CAP {
        return Err(Error::CapExceeded {
            what: "left-ideal enumeration",
            actual: n.order(),
            limit: LEFT_IDEAL_ORDER_CAP,
        });
    }
    let mut found: BTreeSet<Subset> = BTreeSet::new();
    let check_cap = |found: &BTreeSet<Subset>| {
        if found.len() > cap {
            Err(Error::IdealCap {
                found: found.len(),
                cap,
            })
        } else {
            Ok(())
        }
    };
    for x in n.elements() {
        found.insert(generated_left_ideal(n, &Subset::singleton(n.order(), x)));
        check_cap(&found)?;
    }
    let mut frontier: Vec<Subset> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        let known: Vec<Subset> = found.iter().cloned().collect();
        for a in &frontier {
            for b in &known {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let join = generated_left_ideal(n, &a.union(b));
                if found.insert(join.clone()) {
                    check_cap(&found)?;
                    fresh.push(join);
                }
            }
        }
        frontier = fresh;
    }
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;

    fn set(n: &NearRing, labels: &[&str]) -> Subset {
        Subset::from_iter(n.order(), labels.iter().map(|l| n.element(l).unwrap()))
    }

    #[test]
    fn klein_annihilators_and_orbits() {
        let n = builtin("klein4_ring").unwrap();
        let c = n.element("c").unwrap();
        assert_eq!(
            annihilator(&n, Side::Left, &Subset::singleton(4, c)),
            set(&n, &["0", "a"])
        );
        assert_eq!(annihilator(&n, Side::Left, &Subset::singleton(4, 0)), Subset::full(4));
        assert_eq!(orbit(&n, Side::Left, n.element("a").unwrap()), set(&n, &["0", "a"]));
        assert_eq!(orbit(&n, Side::Left, n.one().unwrap()), Subset::full(4));
    }

    #[test]
    fn m0_identity_has_zero_left_annihilator() {
        let n = builtin("m0_z3").unwrap();
        let f6 = n.element("f6").unwrap();
        assert_eq!(annihilator(&n, Side::Left, &Subset::singleton(9, f6)), set(&n, &["f1"]));
    }

    #[test]
    fn m0_orbit_of_f5_matches_brute_force() {
        let n = builtin("m0_z3").unwrap();
        let f5 = n.element("f5").unwrap();
        // x ∘ f5 sends 1 and 2 both to x(1), so Nf5 = {maps with f(1) = f(2)}
        assert_eq!(orbit(&n, Side::Left, f5), set(&n, &["f1", "f5", "f9"]));
        assert_eq!(orbit(&n, Side::Right, f5), set(&n, &["f1", "f2", "f4", "f5"]));
    }

    #[test]
    fn zero_and_annihilators_are_n_ideals() {
        for name in ["klein4_ring", "m0_z3", "mat2_f2", "ext_f2_f2", "zn_ring(12)"] {
            let n = builtin(name).unwrap();
            let m = NModule::regular(&n);
            assert!(is_n_ideal(&n, &m, &Subset::singleton(n.order(), 0)).is_n_ideal());
            for a in n.elements() {
                let ann = annihilator(&n, Side::Left, &Subset::singleton(n.order(), a));
                assert!(is_n_ideal(&n, &m, &ann).is_n_ideal(), "{name} {a}");
            }
        }
    }

    #[test]
    fn failing_verdicts_carry_rechecked_witnesses() {
        let n = builtin("m0_z3").unwrap();
        let m = NModule::regular(&n);
        let cases = [set(&n, &["f2"]), set(&n, &["f1", "f2"]), set(&n, &["f1", "f5", "f9"])];
        for l in cases {
            let v = is_n_ideal(&n, &m, &l);
            assert!(!v.is_n_ideal());
            assert!(v.witness_holds(&m, &l), "{v:?} for {l:?}");
        }
    }

    #[test]
    fn ideal_classes() {
        let k = builtin("klein4_ring").unwrap();
        assert_eq!(is_ideal(&k, &Subset::singleton(4, 0)), IdealClass::TwoSidedIdeal);
        for a in k.elements() {
            let ann = annihilator(&k, Side::Left, &Subset::singleton(4, a));
            assert_eq!(is_ideal(&k, &ann), IdealClass::TwoSidedIdeal);
        }
        // matrices with zero second column: a left ideal of M₂(F₂) that is not two-sided
        let mat = builtin("mat2_f2").unwrap();
        let column = set(&mat, &["[00;00]", "[10;00]", "[00;10]", "[10;10]"]);
        assert_eq!(is_ideal(&mat, &column), IdealClass::LeftIdeal);
    }

    #[test]
    fn left_ideal_lattices() {
        let k = builtin("klein4_ring").unwrap();
        let ideals = enumerate_left_ideals(&k, 100).unwrap();
        for want in [
            set(&k, &["0"]),
            set(&k, &["0", "a"]),
            set(&k, &["0", "c"]),
            Subset::full(4),
        ] {
            assert!(ideals.contains(&want));
        }

        let f2 = builtin("zn_ring(2)").unwrap();
        assert_eq!(
            enumerate_left_ideals(&f2, 100).unwrap(),
            vec![Subset::singleton(2, 0), Subset::full(2)]
        );

        let mat = builtin("mat2_f2").unwrap();
        let ideals = enumerate_left_ideals(&mat, 100).unwrap();
        let sizes: Vec<usize> = ideals.iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![1, 4, 4, 4, 16]);
    }

    #[test]
    fn left_ideal_cap_is_reported() {
        let mat = builtin("mat2_f2").unwrap();
        assert!(matches!(
            enumerate_left_ideals(&mat, 2),
            Err(Error::IdealCap { cap: 2, .. })
        ));
        let big = builtin("ext_mat2f2_f2sq").unwrap();
        assert!(enumerate_left_ideals(&big, 1000).is_ok());
    }
}

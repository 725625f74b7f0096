use itertools::Itertools;
use serde::Serialize;

use super::NModule;
use crate::error::{Error, Result};
use crate::nearring::NearRing;

/// Bijections are enumerated only for modules of at most this order.
pub const BRUTEFORCE_ISO_CAP: usize = 8;

/// Outcome of [`hom_from_cyclic_generator`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicHom {
    /// The hom as a table over the elements of `M₁`.
    WellDefined(Vec<usize>),
    /// `r·g = s·g` but `r·b ≠ s·b`.
    Violated { r: usize, s: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoMode {
    Generator,
    Bruteforce,
    Auto,
}

/// First `g` (ascending) with `N·g = M`.
pub fn cyclic_generator(m: &NModule) -> Option<usize> {
    m.elements().find(|&g| m.orbit(g).is_full())
}

/// The unique N-linear map `M₁ → M₂` sending `g ↦ b`, if it exists.
///
/// Since `N·g = M₁`, every element is `r·g` and the map must send it to
/// `r·b`. This is well defined exactly when every relation `r·g = s·g`
/// also holds for `b`; additivity and N-linearity then follow from the
/// module laws.
pub fn hom_from_cyclic_generator(n: &NearRing, m1: &NModule, g: usize, m2: &NModule, b: usize) -> Result<CyclicHom> {
    if g >= m1.order() || !m1.orbit(g).is_full() {
        return Err(Error::NotGenerator(g));
    }
    if b >= m2.order() {
        return Err(Error::ElementOutOfRange(b));
    }
    let mut map = vec![usize::MAX; m1.order()];
    let mut first = vec![usize::MAX; m1.order()];
    for r in n.elements() {
        let x = m1.act(r, g);
        let y = m2.act(r, b);
        if map[x] == usize::MAX {
            map[x] = y;
            first[x] = r;
        } else if map[x] != y {
            return Ok(CyclicHom::Violated { r: first[x], s: r });
        }
    }
    Ok(CyclicHom::WellDefined(map))
}

/// Whether `map` is additive and N-linear from `M₁` to `M₂`.
pub fn is_module_hom(n: &NearRing, m1: &NModule, m2: &NModule, map: &[usize]) -> bool {
    map.len() == m1.order()
        && m1
            .elements()
            .all(|x| m1.elements().all(|y| map[m1.add(x, y)] == m2.add(map[x], map[y])))
        && n.elements()
            .all(|r| m1.elements().all(|x| map[m1.act(r, x)] == m2.act(r, map[x])))
}

fn is_bijective(map: &[usize], target_order: usize) -> bool {
    map.len() == target_order && map.iter().all_unique()
}

/// Decides whether `M₁ ≅ M₂` as N-modules and returns an isomorphism.
///
/// `Generator` needs `M₁` cyclic and tries each image of a generator;
/// `Bruteforce` enumerates bijections fixing 0 and needs `|M₁| ≤
/// BRUTEFORCE_ISO_CAP`; `Auto` picks the first of these that applies.
pub fn modules_isomorphic(n: &NearRing, m1: &NModule, m2: &NModule, mode: IsoMode) -> Result<Option<Vec<usize>>> {
    if m1.order() != m2.order() {
        return Ok(None);
    }
    let mode = match mode {
        IsoMode::Auto if cyclic_generator(m1).is_some() => IsoMode::Generator,
        IsoMode::Auto if m1.order() <= BRUTEFORCE_ISO_CAP => IsoMode::Bruteforce,
        IsoMode::Auto => {
            return Err(Error::NoIsoMode(format!(
                "module of order {} is not cyclic and exceeds the bijection cap {BRUTEFORCE_ISO_CAP}",
                m1.order()
            )))
        }
        other => other,
    };
    match mode {
        IsoMode::Generator => {
            let g = cyclic_generator(m1).ok_or(Error::NotCyclic)?;
            for b in m2.elements() {
                if let CyclicHom::WellDefined(map) = hom_from_cyclic_generator(n, m1, g, m2, b)? {
                    if is_bijective(&map, m2.order()) {
                        return Ok(Some(map));
                    }
                }
            }
            Ok(None)
        }
        IsoMode::Bruteforce => {
            if m1.order() > BRUTEFORCE_ISO_CAP {
                return Err(Error::NoIsoMode(format!(
                    "bijection search needs order <= {BRUTEFORCE_ISO_CAP}, got {}",
                    m1.order()
                )));
            }
            let k = m1.order();
            for perm in (1..k).permutations(k - 1) {
                let map: Vec<usize> = std::iter::once(0).chain(perm).collect();
                if is_module_hom(n, m1, m2, &map) {
                    return Ok(Some(map));
                }
            }
            Ok(None)
        }
        IsoMode::Auto => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;
    use crate::modules::{annihilator, orbit, quotient_module, Side};
    use crate::subset::Subset;

    #[test]
    fn klein_quotient_is_isomorphic_to_annihilator() {
        let n = builtin("klein4_ring").unwrap();
        let reg = NModule::regular(&n);
        let (a, c) = (n.element("a").unwrap(), n.element("c").unwrap());
        let q = quotient_module(&n, &reg, &orbit(&n, Side::Left, a)).unwrap();
        let (ann, members) = reg
            .submodule(&annihilator(&n, Side::Left, &Subset::singleton(4, a)))
            .unwrap();
        assert_eq!(members, vec![0, c]);

        // 1 + Na ↦ c
        let one_coset = q.projection[n.one().unwrap()];
        match hom_from_cyclic_generator(&n, &q.module, one_coset, &ann, 1).unwrap() {
            CyclicHom::WellDefined(map) => {
                assert!(is_bijective(&map, 2));
                assert!(is_module_hom(&n, &q.module, &ann, &map));
            }
            v => panic!("{v:?}"),
        }
        for mode in [IsoMode::Generator, IsoMode::Bruteforce, IsoMode::Auto] {
            assert!(modules_isomorphic(&n, &q.module, &ann, mode).unwrap().is_some());
        }
    }

    #[test]
    fn zero_image_is_always_a_hom() {
        let n = builtin("m0_z3").unwrap();
        let reg = NModule::regular(&n);
        let one = n.one().unwrap();
        match hom_from_cyclic_generator(&n, &reg, one, &reg, 0).unwrap() {
            CyclicHom::WellDefined(map) => assert!(map.iter().all(|&y| y == 0)),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn non_generator_is_an_error() {
        let n = builtin("m0_z3").unwrap();
        let reg = NModule::regular(&n);
        assert!(matches!(
            hom_from_cyclic_generator(&n, &reg, 0, &reg, 0),
            Err(Error::NotGenerator(0))
        ));
    }

    #[test]
    fn f5_quotient_admits_no_isomorphism() {
        let n = builtin("m0_z3").unwrap();
        let reg = NModule::regular(&n);
        let f5 = n.element("f5").unwrap();
        let nf5 = orbit(&n, Side::Left, f5);
        let ann = annihilator(&n, Side::Left, &Subset::singleton(9, f5));
        // Nf5 is not an N-ideal, so there is no quotient to compare at all
        assert!(quotient_module(&n, &reg, &nf5).is_err());
        // and no image b of 1 yields a hom N → (0:_l f5) whose kernel is Nf5
        let (sub, _) = reg.submodule(&ann).unwrap();
        for b in sub.elements() {
            match hom_from_cyclic_generator(&n, &reg, n.one().unwrap(), &sub, b).unwrap() {
                CyclicHom::WellDefined(map) => {
                    let kernel = Subset::from_iter(9, (0..9).filter(|&x| map[x] == 0));
                    assert_ne!(kernel, nf5);
                }
                v => panic!("a hom out of the free module always exists: {v:?}"),
            }
        }
    }

    #[test]
    fn trivial_modules_are_isomorphic() {
        let n = builtin("zn_ring(5)").unwrap();
        let reg = NModule::regular(&n);
        let q = quotient_module(&n, &reg, &Subset::full(5)).unwrap();
        let (zero, _) = reg.submodule(&Subset::singleton(5, 0)).unwrap();
        assert_eq!(
            modules_isomorphic(&n, &q.module, &zero, IsoMode::Auto).unwrap(),
            Some(vec![0])
        );
    }

    #[test]
    fn bruteforce_cap_is_enforced() {
        let n = builtin("zn_ring(9)").unwrap();
        let reg = NModule::regular(&n);
        assert!(matches!(
            modules_isomorphic(&n, &reg, &reg, IsoMode::Bruteforce),
            Err(Error::NoIsoMode(_))
        ));
        assert!(modules_isomorphic(&n, &reg, &reg, IsoMode::Auto).unwrap().is_some());
    }
}

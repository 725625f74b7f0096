//! Library results checked against brute force over the raw Cayley tables.
//! Nothing in the oracle half of these tests calls back into the library.

use nearring_core::builtin::{builtin, catalog, default_corpus};
use nearring_core::classify::{units, Analysis};
use nearring_core::construct::{build_m0, build_product, DEFAULT_CONSTRUCT_CAP};
use nearring_core::modules::{annihilator, enumerate_left_ideals, orbit, Side};
use nearring_core::theorems::{check_with, run_suite, CheckOptions, Status, TheoremId};
use nearring_core::{FiniteGroup, NearRing, Subset};

/// Plain tables, detached from the library.
struct Raw {
    k: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
}

impl Raw {
    fn of(n: &NearRing) -> Self {
        Raw {
            k: n.order(),
            add: n.add_table().to_rows(),
            mul: n.mul_table().to_rows(),
        }
    }

    fn neg(&self, x: usize) -> usize {
        (0..self.k).find(|&y| self.add[x][y] == 0).unwrap()
    }

    fn one(&self) -> Option<usize> {
        (0..self.k).find(|&e| (0..self.k).all(|x| self.mul[e][x] == x && self.mul[x][e] == x))
    }

    fn left_orbit(&self, a: usize) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.k).map(|r| self.mul[r][a]).collect();
        v.sort();
        v.dedup();
        v
    }

    fn left_ann(&self, a: usize) -> Vec<usize> {
        (0..self.k).filter(|&r| self.mul[r][a] == 0).collect()
    }

    fn right_ann(&self, a: usize) -> Vec<usize> {
        (0..self.k).filter(|&r| self.mul[a][r] == 0).collect()
    }

    fn units(&self) -> Vec<usize> {
        let Some(e) = self.one() else { return vec![] };
        (0..self.k)
            .filter(|&u| (0..self.k).any(|v| self.mul[u][v] == e && self.mul[v][u] == e))
            .collect()
    }

    fn idempotents(&self) -> Vec<usize> {
        (0..self.k).filter(|&a| self.mul[a][a] == a).collect()
    }

    fn is_subgroup(&self, s: &[bool]) -> bool {
        s[0] && (0..self.k)
            .filter(|&x| s[x])
            .all(|x| s[self.neg(x)] && (0..self.k).filter(|&y| s[y]).all(|y| s[self.add[x][y]]))
    }

    fn is_normal(&self, s: &[bool]) -> bool {
        (0..self.k).all(|g| {
            (0..self.k)
                .filter(|&x| s[x])
                .all(|x| s[self.add[self.add[g][x]][self.neg(g)]])
        })
    }

    /// `r(x + l) − rx ∈ L` for all `r`, `x` and `l ∈ L`.
    fn absorbs_left(&self, s: &[bool]) -> bool {
        (0..self.k).all(|r| {
            (0..self.k).all(|x| {
                (0..self.k).filter(|&l| s[l]).all(|l| {
                    let v = self.add[self.mul[r][self.add[x][l]]][self.neg(self.mul[r][x])];
                    s[v]
                })
            })
        })
    }

    fn is_left_morphic(&self, a: usize) -> bool {
        let na = self.left_orbit(a);
        let ann = self.left_ann(a);
        (0..self.k).any(|b| self.left_ann(b) == na && self.left_orbit(b) == ann)
    }
}

fn set(n: &NearRing, xs: &[usize]) -> Subset {
    Subset::from_iter(n.order(), xs.iter().copied())
}

fn small_corpus() -> Vec<NearRing> {
    default_corpus().into_iter().filter(|n| n.order() <= 16).collect()
}

/// Every subset of a small near-ring that is a left ideal, by exhaustion.
fn brute_left_ideals(raw: &Raw) -> (usize, Vec<Vec<usize>>) {
    let mut subgroups = 0;
    let mut ideals = Vec::new();
    for mask in 0u32..(1 << raw.k) {
        let s: Vec<bool> = (0..raw.k).map(|i| mask >> i & 1 == 1).collect();
        if !raw.is_subgroup(&s) {
            continue;
        }
        subgroups += 1;
        if raw.is_normal(&s) && raw.absorbs_left(&s) {
            ideals.push((0..raw.k).filter(|&i| s[i]).collect());
        }
    }
    (subgroups, ideals)
}

#[test]
fn m0_z3_matches_the_value_table() {
    // (f(1), f(2)) for f1 … f9
    const VALUES: [(usize, usize); 9] = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)];
    let n = builtin("m0_z3").unwrap();
    let eval = |i: usize, x: usize| match x {
        0 => 0,
        1 => VALUES[i].0,
        _ => VALUES[i].1,
    };
    let find = |f: &dyn Fn(usize) -> usize| (0..9).find(|&i| (1..3).all(|x| eval(i, x) == f(x))).unwrap();
    for i in 0..9 {
        assert_eq!(n.label(i), format!("f{}", i + 1));
        for j in 0..9 {
            assert_eq!(n.add(i, j), find(&|x| (eval(i, x) + eval(j, x)) % 3));
            assert_eq!(n.mul(i, j), find(&|x| eval(i, eval(j, x))));
        }
    }
    let f = |l: &str| n.element(l).unwrap();
    assert_eq!(n.one(), Some(f("f6")));

    let raw = Raw::of(&n);
    assert_eq!(raw.units(), vec![f("f6"), f("f8")]);
    let idem: Vec<usize> = ["f1", "f3", "f4", "f5", "f6", "f9"].iter().map(|l| f(l)).collect();
    assert_eq!(raw.idempotents(), idem);
    assert_eq!(units(&n).unwrap().iter().collect::<Vec<_>>(), raw.units());
    assert_eq!(Analysis::new(&n, false).unwrap().idempotents(), idem);

    // every element is unit-regular
    let us = raw.units();
    for a in 0..9 {
        assert!(us.iter().any(|&u| raw.mul[raw.mul[a][u]][a] == a));
    }
    // f5 ⋆ (1 − f5) is nonzero at 2
    let (f5, one) = (f("f5"), f("f6"));
    let g = raw.mul[f5][raw.add[one][raw.neg(f5)]];
    assert_ne!(eval(g, 2), 0);
    assert!(!raw.is_left_morphic(f5));
}

#[test]
fn m0_orders() {
    for k in 2..=4 {
        let n = build_m0(&FiniteGroup::cyclic(k), DEFAULT_CONSTRUCT_CAP).unwrap();
        assert_eq!(n.order(), k.pow(k as u32 - 1));
        assert!(n.flags().zero_symmetric.holds);
    }
    let v4 = build_m0(&FiniteGroup::klein_four(), DEFAULT_CONSTRUCT_CAP).unwrap();
    assert_eq!(v4.order(), 64);
    assert!(build_m0(&FiniteGroup::cyclic(6), DEFAULT_CONSTRUCT_CAP).is_err());
}

#[test]
fn axioms_hold_on_raw_tables() {
    for n in small_corpus() {
        let r = Raw::of(&n);
        for x in 0..r.k {
            for y in 0..r.k {
                for z in 0..r.k {
                    assert_eq!(r.add[r.add[x][y]][z], r.add[x][r.add[y][z]]);
                    assert_eq!(r.mul[r.mul[x][y]][z], r.mul[x][r.mul[y][z]]);
                    assert_eq!(r.mul[r.add[x][y]][z], r.add[r.mul[x][z]][r.mul[y][z]]);
                }
            }
        }
    }
}

#[test]
fn orbits_annihilators_and_units_agree() {
    for n in small_corpus() {
        let r = Raw::of(&n);
        let an = Analysis::new(&n, true).unwrap();
        for a in n.elements() {
            assert_eq!(an.left_orbit(a), &set(&n, &r.left_orbit(a)), "{} Na, a={a}", n.name());
            assert_eq!(an.left_annihilator(a), &set(&n, &r.left_ann(a)));
            assert_eq!(an.right_annihilator(a), &set(&n, &r.right_ann(a)));
            assert_eq!(orbit(&n, Side::Left, a), set(&n, &r.left_orbit(a)));
            if n.one().is_some() {
                assert_eq!(an.is_morphic(a).unwrap(), r.is_left_morphic(a), "{} a={a}", n.name());
            }
        }
        assert_eq!(n.one(), r.one());
        if let Ok(u) = an.units() {
            assert_eq!(u.iter().collect::<Vec<_>>(), r.units());
        }
    }
}

#[test]
fn flags_are_sound() {
    for n in small_corpus() {
        let r = Raw::of(&n);
        let f = n.flags();
        let zs = (0..r.k).all(|x| r.mul[x][0] == 0);
        assert_eq!(f.zero_symmetric.holds, zs, "{}", n.name());
        let ld = (0..r.k)
            .all(|x| (0..r.k).all(|y| (0..r.k).all(|z| r.mul[x][r.add[y][z]] == r.add[r.mul[x][y]][r.mul[x][z]])));
        assert_eq!(f.left_distributive.holds, ld);
        let ab = (0..r.k).all(|x| (0..r.k).all(|y| r.add[x][y] == r.add[y][x]));
        assert_eq!(f.abelian_add.holds, ab);
        let p = Analysis::new(&n, false).unwrap().structure_profile();
        let reduced = (1..r.k).all(|a| {
            let mut x = a;
            (0..r.k).all(|_| {
                x = r.mul[x][a];
                x != 0
            })
        });
        assert_eq!(p.reduced.holds, reduced, "{}", n.name());
        let regular = (0..r.k).all(|a| (0..r.k).any(|x| r.mul[r.mul[a][x]][a] == a));
        assert_eq!(p.regular.holds, regular);
        let lsr = (0..r.k).all(|a| (0..r.k).any(|x| r.mul[x][r.mul[a][a]] == a));
        assert_eq!(p.left_strongly_regular.holds, lsr);
    }
}

#[test]
fn mat2_f2_left_ideals_by_exhaustion() {
    let n = builtin("mat2_f2").unwrap();
    let raw = Raw::of(&n);
    let (subgroups, ideals) = brute_left_ideals(&raw);
    assert_eq!(subgroups, 67);
    assert_eq!(ideals.len(), 5);
    let mut ours: Vec<Vec<usize>> = enumerate_left_ideals(&n, 64)
        .unwrap()
        .iter()
        .map(|s| s.to_vec())
        .collect();
    ours.sort();
    let mut theirs = ideals.clone();
    theirs.sort();
    assert_eq!(ours, theirs);
    // the three proper nonzero left ideals are not right ideals
    let proper: Vec<&Vec<usize>> = ideals.iter().filter(|l| l.len() == 4).collect();
    assert_eq!(proper.len(), 3);
    for l in proper {
        assert!(l.iter().any(|&x| (0..16).any(|r| !l.contains(&raw.mul[x][r]))));
    }
}

#[test]
fn small_left_ideal_lattices() {
    for name in ["klein4_ring", "zn_ring(2)", "zn_ring(6)", "m0_z3", "klein4_x_f2"] {
        let n = builtin(name).unwrap();
        let (_, mut theirs) = brute_left_ideals(&Raw::of(&n));
        let mut ours: Vec<Vec<usize>> = enumerate_left_ideals(&n, 64)
            .unwrap()
            .iter()
            .map(|s| s.to_vec())
            .collect();
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs, "{name}");
    }
}

#[test]
fn product_annihilators_and_projections() {
    let (a, b) = (builtin("klein4_ring").unwrap(), builtin("zn_ring(3)").unwrap());
    let p = build_product(&[a.clone(), b.clone()], DEFAULT_CONSTRUCT_CAP).unwrap();
    let (ra, rb, rp) = (Raw::of(&a), Raw::of(&b), Raw::of(&p));
    let split = |x: usize| (x / b.order(), x % b.order());
    for x in 0..rp.k {
        for y in 0..rp.k {
            let ((x1, x2), (y1, y2)) = (split(x), split(y));
            assert_eq!(split(rp.add[x][y]), (ra.add[x1][y1], rb.add[x2][y2]));
            assert_eq!(split(rp.mul[x][y]), (ra.mul[x1][y1], rb.mul[x2][y2]));
        }
        let (x1, x2) = split(x);
        let expect: Vec<usize> = (0..rp.k)
            .filter(|&z| {
                let (z1, z2) = split(z);
                ra.left_ann(x1).contains(&z1) && rb.left_ann(x2).contains(&z2)
            })
            .collect();
        assert_eq!(
            annihilator(&p, Side::Left, &Subset::singleton(rp.k, x)),
            set(&p, &expect)
        );
    }
}

#[test]
fn extension_tables() {
    let n = builtin("ext_f2_f2").unwrap();
    let raw = Raw::of(&n);
    for x in 0..4 {
        for y in 0..4 {
            let ((a1, m1), (a2, m2)) = ((x / 2, x % 2), (y / 2, y % 2));
            assert_eq!(raw.mul[x][y], 2 * (a1 * a2 % 2) + (a1 * m2 + m1) % 2);
        }
    }
    assert_eq!(raw.one(), Some(2));
}

#[test]
fn zero_symmetry_is_needed() {
    // without zero-symmetry, 0 itself is not left morphic: N0 ≠ {0}
    let n = builtin("ext_f2_f2").unwrap();
    let raw = Raw::of(&n);
    assert!((0..raw.k).any(|x| raw.mul[x][0] != 0));
    assert!(!raw.is_left_morphic(0));
    let an = Analysis::new(&n, true).unwrap();
    let relaxed = CheckOptions {
        relax_zero_symmetry: true,
    };
    let mut broken = Vec::new();
    for &id in TheoremId::ALL {
        let strict = check_with(&an, id, CheckOptions::default()).unwrap();
        assert_ne!(strict.status, Status::Fail);
        let r = check_with(&an, id, relaxed).unwrap();
        if r.status == Status::Fail {
            broken.push(id.as_str());
        }
    }
    broken.sort();
    assert_eq!(
        broken,
        vec![
            "lemma213",
            "lemma_hdt",
            "lemma_this_thm217",
            "prop226",
            "prop_ff_morphic",
            "wsw_morphic"
        ]
    );
    // a left strongly regular near-ring that is not left morphic
    let p = an.structure();
    assert!(p.left_strongly_regular.holds);
    assert!(!p.left_morphic.as_ref().unwrap().holds);
}

#[test]
fn suite_is_deterministic() {
    let corpus = small_corpus();
    let a = serde_json::to_string(&run_suite(&corpus, TheoremId::ALL)).unwrap();
    let b = serde_json::to_string(&run_suite(&corpus, TheoremId::ALL)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn catalog_entries_build() {
    for name in catalog() {
        let name = name.replace("(n)", "(5)");
        let n = builtin(&name).unwrap();
        assert_eq!(n.name(), name);
    }
}

//! Randomised laws over the builtin corpus, `ℤₙ` for n ≤ 32 and a few
//! direct products.

use std::sync::OnceLock;

use proptest::prelude::*;

use nearring_core::builtin::builtin;
use nearring_core::classify::Analysis;
use nearring_core::construct::{build_product, DEFAULT_CONSTRUCT_CAP};
use nearring_core::modules::is_n_ideal;
use nearring_core::NearRing;

fn corpus() -> &'static [NearRing] {
    static CORPUS: OnceLock<Vec<NearRing>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut v: Vec<NearRing> = [
            "klein4_ring",
            "m0_z3",
            "mat2_f2",
            "ext_f2_f2",
            "ext_mat2f2_f2sq",
            "klein4_x_f2",
            "m0_z3_x_f2",
        ]
        .iter()
        .map(|name| builtin(name).unwrap())
        .collect();
        v.extend((2..=32).map(|k| builtin(&format!("zn_ring({k})")).unwrap()));
        for (a, b) in [
            ("zn_ring(2)", "zn_ring(3)"),
            ("zn_ring(4)", "zn_ring(2)"),
            ("klein4_ring", "klein4_ring"),
            ("m0_z3", "zn_ring(3)"),
            ("mat2_f2", "zn_ring(2)"),
        ] {
            let p = build_product(&[builtin(a).unwrap(), builtin(b).unwrap()], DEFAULT_CONSTRUCT_CAP).unwrap();
            v.push(p.with_name(format!("{a} × {b}")));
        }
        v
    })
}

fn analyses() -> &'static [Analysis<'static>] {
    static ANALYSES: OnceLock<Vec<Analysis<'static>>> = OnceLock::new();
    ANALYSES.get_or_init(|| corpus().iter().map(|n| Analysis::new(n, false).unwrap()).collect())
}

/// A corpus member and an element of it.
fn member() -> impl Strategy<Value = (usize, usize)> {
    (0..corpus().len()).prop_flat_map(|i| (Just(i), 0..corpus()[i].order()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn orbit_times_annihilator_is_order((i, a) in member()) {
        let an = &analyses()[i];
        prop_assert_eq!(an.left_orbit(a).len() * an.left_annihilator(a).len(), corpus()[i].order());
    }

    #[test]
    fn annihilator_is_an_n_ideal((i, a) in member()) {
        let an = &analyses()[i];
        let v = is_n_ideal(&corpus()[i], an.regular_module(), an.left_annihilator(a));
        prop_assert!(v.is_n_ideal(), "{:?}", v);
    }

    #[test]
    fn morphic_closed_under_units((i, a) in member(), pick in any::<prop::sample::Index>()) {
        let (n, an) = (&corpus()[i], &analyses()[i]);
        let units: Vec<usize> = an.units().unwrap().iter().collect();
        let u = units[pick.index(units.len())];
        if an.is_morphic(a).unwrap() {
            prop_assert!(an.is_morphic(n.mul(u, a)).unwrap());
            prop_assert!(an.is_morphic(n.mul(a, u)).unwrap());
        }
    }

    #[test]
    fn unit_translates_of_annihilators((i, a) in member(), pick in any::<prop::sample::Index>()) {
        let (n, an) = (&corpus()[i], &analyses()[i]);
        let units = an.units().unwrap();
        let all: Vec<usize> = units.iter().collect();
        let u = all[pick.index(all.len())];
        let ui = units.inverse_of(u).unwrap();
        let l = an.left_annihilator(a);
        prop_assert!(an.left_orbit(u).is_full());
        prop_assert_eq!(l, an.left_annihilator(n.mul(a, ui)));
        prop_assert_eq!(&l.map(|x| n.mul(x, ui)), an.left_annihilator(n.mul(u, a)));
        let image = l.map(|x| n.mul(x, u));
        prop_assert_eq!(image.len(), l.len());
        for x in l.iter() {
            for r in n.elements() {
                prop_assert_eq!(n.mul(n.mul(r, x), u), n.mul(r, n.mul(x, u)));
            }
        }
    }

    #[test]
    fn morphic_witness_annihilates_both_ways((i, a) in member()) {
        let (n, an) = (&corpus()[i], &analyses()[i]);
        if let Some(b) = an.morphic(a).unwrap().witness() {
            prop_assert_eq!(n.mul(a, b), 0);
            prop_assert_eq!(n.mul(b, a), 0);
            prop_assert_eq!(an.left_orbit(a), an.left_annihilator(b));
            prop_assert_eq!(an.left_orbit(b), an.left_annihilator(a));
        }
    }
}

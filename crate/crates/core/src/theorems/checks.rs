use std::sync::OnceLock;

use super::{CheckOptions, Counterexample, TheoremId};
use crate::builtin::builtin;
use crate::classify::{algorithm_i, idempotent_statements, Analysis};
use crate::error::{Error, Result};
use crate::group::split_index;
use crate::modules::is_n_ideal;
use crate::nearring::{Flag, NearRing, Origin};
use crate::subset::Subset;

pub(super) enum Outcome {
    Pass(u64),
    Fail(u64, Counterexample),
    NotApplicable(Counterexample),
}

/// Counts one instantiation and returns the failure if `cond` is false.
macro_rules! ensure {
    ($k:ident, $cond:expr, $elems:expr, $clause:expr) => {
        $k += 1;
        if !$cond {
            return Ok(Outcome::Fail($k, Counterexample::new($elems, $clause)));
        }
    };
}

macro_rules! require {
    ($hyp:expr) => {
        if let Some(h) = $hyp {
            return Ok(Outcome::NotApplicable(h));
        }
    };
}

fn unital(n: &NearRing) -> Option<Counterexample> {
    n.one().is_none().then(|| Counterexample::new(vec![], "no unity"))
}

fn standing(n: &NearRing, opts: CheckOptions) -> Option<Counterexample> {
    unital(n).or_else(|| {
        let z = &n.flags().zero_symmetric;
        (!z.holds && !opts.relax_zero_symmetry).then(|| Counterexample::new(z.witness.clone(), "not zero-symmetric"))
    })
}

fn holds(flag: &Flag, name: &str) -> Option<Counterexample> {
    (!flag.holds).then(|| Counterexample::new(flag.witness.clone(), format!("not {name}")))
}

fn unit_flag(flag: &Option<Flag>) -> Result<&Flag> {
    flag.as_ref().ok_or(Error::NotUnital)
}

fn same_as_builtin(n: &NearRing, name: &'static str, cell: &'static OnceLock<NearRing>) -> bool {
    n.same_tables(cell.get_or_init(|| builtin(name).expect("catalog entry")))
}

pub(super) fn run(an: &Analysis<'_>, id: TheoremId, opts: CheckOptions) -> Result<Outcome> {
    use TheoremId::*;
    match id {
        Lemma1Equiv => lemma1_equiv(an),
        Lemma10 => lemma10(an),
        Prop2 => prop2(an),
        Prop64 => prop64(an),
        ProductMorphic => product_morphic(an),
        CccDecomposition => ccc_decomposition(an, opts),
        WswMorphic => wsw_morphic(an, opts),
        Lemma213 => lemma213(an, opts),
        LemmaHdt => lemma_hdt(an, opts),
        Lemma13 => lemma13(an, opts),
        LemmaFfff => lemma_ffff(an, opts),
        PropFfSquare => prop_ff_square(an, opts),
        PropFfMorphic => prop_ff_morphic(an, opts),
        LemmaThisThm217 => lemma_this_thm217(an, opts),
        PropCccxi => prop_cccxi(an, opts),
        Prop226 => prop226(an, opts),
        Thm62 => thm62(an, opts),
        PropTttt => prop_tttt(an, opts),
        EhrlichT => ehrlich_t(an, opts),
        Ex20Claim => ex20_claim(an),
        Ex20cClaim => ex20c_claim(an),
        ExGgggClaim => ex_gggg_claim(an),
    }
}

fn all_morphic(an: &Analysis<'_>, mut k: u64) -> Result<Outcome> {
    for a in an.nearring().elements() {
        ensure!(k, an.is_morphic(a)?, vec![a], "a is left morphic");
    }
    Ok(Outcome::Pass(k))
}

fn lemma1_equiv(an: &Analysis<'_>) -> Result<Outcome> {
    let n = an.nearring();
    require!(unital(n));
    let mut k = 0;
    for a in n.elements() {
        let by_witness = an.is_morphic(a)?;
        let by_iso = algorithm_i(n, a)?;
        ensure!(
            k,
            by_witness == by_iso,
            vec![a],
            format!("witness search says {by_witness}, quotient isomorphism says {by_iso}")
        );
    }
    Ok(Outcome::Pass(k))
}

fn lemma10(an: &Analysis<'_>) -> Result<Outcome> {
    let n = an.nearring();
    require!(unital(n));
    let units = an.units()?;
    let mut k = 0;
    for u in units.iter() {
        ensure!(k, an.left_orbit(u).is_full(), vec![u], "Nu = N");
    }
    for a in n.elements() {
        let l = an.left_annihilator(a);
        for u in units.iter() {
            let ui = units.inverse_of(u).expect("units have inverses");
            ensure!(
                k,
                l == an.left_annihilator(n.mul(a, ui)),
                vec![a, u],
                "(0:_l a) = (0:_l au⁻¹)"
            );
            ensure!(
                k,
                &l.map(|x| n.mul(x, ui)) == an.left_annihilator(n.mul(u, a)),
                vec![a, u],
                "(0:_l a)u⁻¹ = (0:_l ua)"
            );
            let image = l.map(|x| n.mul(x, u));
            let iso = image.len() == l.len()
                && l.iter().all(|x| {
                    l.iter()
                        .all(|y| n.mul(n.add(x, y), u) == n.add(n.mul(x, u), n.mul(y, u)))
                })
                && n.elements()
                    .all(|r| l.iter().all(|x| n.mul(n.mul(r, x), u) == n.mul(r, n.mul(x, u))));
            ensure!(
                k,
                iso,
                vec![a, u],
                "x ↦ xu is an N-isomorphism from (0:_l a) onto (0:_l a)u"
            );
        }
    }
    Ok(Outcome::Pass(k))
}

fn prop2(an: &Analysis<'_>) -> Result<Outcome> {
    let n = an.nearring();
    require!(unital(n));
    let units = an.units()?;
    let mut k = 0;
    for a in n.elements() {
        if !an.is_morphic(a)? {
            continue;
        }
        for u in units.iter() {
            ensure!(k, an.is_morphic(n.mul(u, a))?, vec![a, u], "ua is left morphic");
            ensure!(k, an.is_morphic(n.mul(a, u))?, vec![a, u], "au is left morphic");
        }
    }
    Ok(Outcome::Pass(k))
}

fn prop64(an: &Analysis<'_>) -> Result<Outcome> {
    let n = an.nearring();
    require!(unital(n));
    let units = an.units()?;
    let mut k = 0;
    for a in n.elements() {
        if !an.is_morphic(a)? {
            continue;
        }
        let c = [
            an.left_annihilator(a).is_zero(),
            an.left_orbit(a).is_full(),
            units.contains(a),
        ];
        ensure!(
            k,
            c[0] == c[1] && c[1] == c[2],
            vec![a],
            format!("(0:_l a) = {{0}}, Na = N, a unit: {c:?}")
        );
    }
    Ok(Outcome::Pass(k))
}

fn product_morphic(an: &Analysis<'_>) -> Result<Outcome> {
    let n = an.nearring();
    let Origin::Product(factors) = n.origin() else {
        return Ok(Outcome::NotApplicable(Counterexample::new(
            vec![],
            "not constructed as a direct product",
        )));
    };
    require!(unital(n));
    let orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    let parts: Vec<Analysis<'_>> = factors.iter().map(|f| Analysis::new(f, false)).collect::<Result<_>>()?;
    let mut k = 0;
    for a in n.elements() {
        let coords = split_index(a, &orders);
        let expected = Subset::from_iter(
            n.order(),
            n.elements().filter(|&x| {
                split_index(x, &orders)
                    .iter()
                    .enumerate()
                    .all(|(i, &xi)| parts[i].left_annihilator(coords[i]).contains(xi))
            }),
        );
        ensure!(
            k,
            an.left_annihilator(a) == &expected,
            vec![a],
            "(0:_l a) is the product of the factor annihilators"
        );
        let factors_morphic = coords
            .iter()
            .enumerate()
            .map(|(i, &c)| parts[i].is_morphic(c))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|m| m);
        ensure!(
            k,
            an.is_morphic(a)? == factors_morphic,
            vec![a],
            "a is left morphic iff every coordinate is"
        );
    }
    let whole = n.elements().map(|a| an.is_morphic(a)).collect::<Result<Vec<_>>>()?;
    let each = parts
        .iter()
        .map(|p| {
            p.nearring()
                .elements()
                .map(|a| p.is_morphic(a))
                .collect::<Result<Vec<_>>>()
                .map(|v| v.into_iter().all(|m| m))
        })
        .collect::<Result<Vec<_>>>()?;
    ensure!(
        k,
        whole.iter().all(|&m| m) == each.iter().all(|&m| m),
        vec![],
        "the product is left morphic iff every factor is"
    );
    Ok(Outcome::Pass(k))
}

fn ccc_decomposition(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    let n = an.nearring();
    require!(standing(n, opts));
    let p = an.structure();
    require!(holds(&p.regular, "regular"));
    require!(holds(&p.subcommutative, "subcommutative"));
    let mut k = 0;
    for a in n.elements() {
        let na = an.left_orbit(a);
        let ann = an.left_annihilator(a);
        ensure!(
            k,
            is_n_ideal(n, an.regular_module(), na).is_n_ideal(),
            vec![a],
            "Na is an N-ideal"
        );
        ensure!(k, ann.intersection(na).is_zero(), vec![a], "(0:_l a) ∩ Na = {0}");
        let sum = Subset::from_iter(n.order(), ann.iter().flat_map(|x| na.iter().map(move |y| n.add(x, y))));
        ensure!(k, sum.is_full(), vec![a], "(0:_l a) + Na = N");
        ensure!(k, an.is_morphic(a)?, vec![a], "a is left morphic");
    }
    Ok(Outcome::Pass(k))
}

fn wsw_morphic(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    require!(standing(an.nearring(), opts));
    require!(holds(&an.structure().weakly_divisible, "weakly divisible"));
    all_morphic(an, 0)
}

fn lemma213(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    let n = an.nearring();
    require!(standing(n, opts));
    let p = an.structure();
    require!(holds(&p.regular, "regular"));
    let mut k = 0;
    let witness = if p.reduced.holds {
        p.idempotents_central.witness.clone()
    } else {
        p.reduced.witness.clone()
    };
    ensure!(
        k,
        p.reduced.holds == p.idempotents_central.holds,
        witness,
        format!(
            "reduced is {}, idempotents central is {}",
            p.reduced.holds, p.idempotents_central.holds
        )
    );
    Ok(Outcome::Pass(k))
}

fn lemma_hdt(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    require!(standing(an.nearring(), opts));
    let p = an.structure();
    let c = [
        p.left_strongly_regular.holds,
        p.regular.holds && p.reduced.holds,
        p.regular.holds && p.idempotents_central.holds,
    ];
    let mut k = 0;
    ensure!(
        k,
        c[0] == c[1] && c[1] == c[2],
        vec![],
        format!("left strongly regular, regular and reduced, regular with central idempotents: {c:?}")
    );
    Ok(Outcome::Pass(k))
}

fn lsr_hypothesis(an: &Analysis<'_>, opts: CheckOptions) -> Option<Counterexample> {
    standing(an.nearring(), opts).or_else(|| holds(&an.structure().left_strongly_regular, "left strongly regular"))
}

fn lemma13(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    require!(lsr_hypothesis(an, opts));
    let n = an.nearring();
    let mut k = 0;
    for a in n.elements() {
        let sq = n.mul(a, a);
        for x in n.elements().filter(|&x| n.mul(x, sq) == a) {
            ensure!(k, n.mul(n.mul(a, x), a) == a, vec![a, x], "a = axa");
            ensure!(k, n.mul(a, x) == n.mul(x, a), vec![a, x], "ax = xa");
        }
    }
    Ok(Outcome::Pass(k))
}

fn lemma_ffff(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    require!(lsr_hypothesis(an, opts));
    let mut k = 0;
    for a in an.nearring().elements() {
        ensure!(k, an.unit_regular_witness(a).is_some(), vec![a], "a is unit-regular");
    }
    Ok(Outcome::Pass(k))
}

fn prop_ff_square(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    require!(lsr_hypothesis(an, opts));
    let n = an.nearring();
    let mut k = 0;
    for a in n.elements() {
        ensure!(k, an.regular_witness(n.mul(a, a)).is_some(), vec![a], "a² is regular");
    }
    Ok(Outcome::Pass(k))
}

fn prop_ff_morphic(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    require!(lsr_hypothesis(an, opts));
    all_morphic(an, 0)
}

fn lemma_this_thm217(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    let n = an.nearring();
    require!(standing(n, opts));
    let mut k = 0;
    for e in an.idempotents() {
        let s = idempotent_statements(an, e)?;
        k += 7;
        if s.iter().any(|&b| b != s[0]) {
            return Ok(Outcome::Fail(
                k,
                Counterexample::new(vec![e], format!("the seven statements disagree: {s:?}")),
            ));
        }
        if s[0] {
            let f = an.one_minus(e)?;
            if an.one_minus(f)? != e {
                return Ok(Outcome::Fail(k, Counterexample::new(vec![e], "1 - (1 - e) = e")));
            }
            if an.left_orbit(f) != an.left_annihilator(e) {
                return Ok(Outcome::Fail(k, Counterexample::new(vec![e], "N(1 - e) = (0:_l e)")));
            }
        }
    }
    Ok(Outcome::Pass(k))
}

fn prop_cccxi(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    let n = an.nearring();
    require!(standing(n, opts));
    require!(holds(&an.structure().boolean, "Boolean"));
    let f = n.flags();
    let mut k = 0;
    ensure!(
        k,
        f.abelian_add.holds,
        f.abelian_add.witness.clone(),
        "addition is abelian"
    );
    ensure!(
        k,
        f.left_distributive.holds,
        f.left_distributive.witness.clone(),
        "left distributive"
    );
    ensure!(
        k,
        f.commutative_mul.holds,
        f.commutative_mul.witness.clone(),
        "multiplication is commutative"
    );
    all_morphic(an, k)
}

fn prop226(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    let n = an.nearring();
    require!(standing(n, opts));
    let p = an.structure();
    let duo = p.left_duo.as_ref().ok_or(Error::CapExceeded {
        what: "left-duo check",
        actual: n.order(),
        limit: crate::modules::LEFT_IDEAL_ORDER_CAP,
    })?;
    let c = [
        p.reduced.holds && unit_flag(&p.left_morphic)?.holds,
        p.left_strongly_regular.holds,
        p.regular.holds && duo.holds,
    ];
    let mut k = 0;
    ensure!(
        k,
        c[0] == c[1] && c[1] == c[2],
        vec![],
        format!("reduced and left morphic, left strongly regular, regular and left duo: {c:?}")
    );
    Ok(Outcome::Pass(k))
}

fn thm62(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    let n = an.nearring();
    require!(standing(n, opts));
    let p = an.structure();
    require!(holds(unit_flag(&p.left_morphic)?, "left morphic"));
    require!(holds(&p.regular, "regular"));
    let units = an.units()?;
    let mut k = 0;
    for a in n.elements() {
        let x = an.regular_witness(a).expect("regular near-ring");
        let b = an.morphic(a)?.witness().expect("left morphic near-ring");
        let u = n.add(n.mul(n.mul(x, a), x), b);
        ensure!(k, units.contains(u), vec![a, x, b, u], "u = xax + b is a unit");
        ensure!(k, n.mul(n.mul(a, u), a) == a, vec![a, x, b, u], "a = aua");
        ensure!(k, an.unit_regular_witness(a).is_some(), vec![a], "a is unit-regular");
    }
    Ok(Outcome::Pass(k))
}

fn prop_tttt(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    require!(standing(an.nearring(), opts));
    let p = an.structure();
    require!(holds(&p.has_ifp, "IFP"));
    let c = [
        p.left_strongly_regular.holds,
        unit_flag(&p.left_morphic)?.holds && p.regular.holds,
        unit_flag(&p.unit_regular)?.holds,
    ];
    let mut k = 0;
    ensure!(
        k,
        c[0] == c[1] && c[1] == c[2],
        vec![],
        format!("left strongly regular, left morphic and regular, unit-regular: {c:?}")
    );
    Ok(Outcome::Pass(k))
}

fn ehrlich_t(an: &Analysis<'_>, opts: CheckOptions) -> Result<Outcome> {
    require!(standing(an.nearring(), opts));
    let p = an.structure();
    require!(holds(&p.is_ring, "a ring"));
    let ur = unit_flag(&p.unit_regular)?.holds;
    let rm = p.regular.holds && unit_flag(&p.left_morphic)?.holds;
    let mut k = 0;
    ensure!(
        k,
        ur == rm,
        vec![],
        format!("unit-regular is {ur}, regular and left morphic is {rm}")
    );
    Ok(Outcome::Pass(k))
}

fn ex20_claim(an: &Analysis<'_>) -> Result<Outcome> {
    static M0_Z3: OnceLock<NearRing> = OnceLock::new();
    let n = an.nearring();
    if !same_as_builtin(n, "m0_z3", &M0_Z3) {
        return Ok(Outcome::NotApplicable(Counterexample::new(vec![], "not M0(Z3)")));
    }
    let p = an.structure();
    let ur = unit_flag(&p.unit_regular)?;
    let lm = unit_flag(&p.left_morphic)?;
    let mut k = 0;
    ensure!(k, ur.holds, ur.witness.clone(), "unit-regular");
    ensure!(k, !lm.holds, vec![], "not left morphic");
    // f5 is the map 1 ↦ 1, 2 ↦ 1; the value at 2 of a map is its index mod 3
    let f5 = 4;
    let g = n.mul(f5, an.one_minus(f5)?);
    ensure!(k, !g.is_multiple_of(3), vec![f5], "f5(1 - f5)(2) ≠ 0");
    ensure!(k, !an.is_morphic(f5)?, vec![f5], "f5 is not left morphic");
    Ok(Outcome::Pass(k))
}

fn ex20c_claim(an: &Analysis<'_>) -> Result<Outcome> {
    let n = an.nearring();
    let Origin::Extension { ring, module } = n.origin() else {
        return Ok(Outcome::NotApplicable(Counterexample::new(
            vec![],
            "not constructed as R × M",
        )));
    };
    require!(unital(n));
    if module.order() < 2 {
        return Ok(Outcome::NotApplicable(Counterexample::new(vec![], "M is zero")));
    }
    let r_an = Analysis::new(ring, false)?;
    let r_ur = unit_flag(&r_an.structure().unit_regular)?.clone();
    require!(holds(&r_ur, "unit-regular in R"));
    let r_units = r_an.units()?;
    let nm = module.order();
    let join = |a: usize, m: usize| a * nm + m;
    let one = n.require_one()?;
    let mut k = 0;
    for idx in n.elements() {
        let (a, m) = (idx / nm, idx % nm);
        let u = r_an.unit_regular_witness(a).expect("R is unit-regular");
        let w = join(u, module.neg(module.act(u, m)));
        let winv = join(r_units.inverse_of(u).expect("unit"), m);
        ensure!(
            k,
            n.mul(n.mul(idx, w), idx) == idx,
            vec![idx, w],
            "<a,m><u,-um><a,m> = <a,m>"
        );
        ensure!(
            k,
            n.mul(w, winv) == one && n.mul(winv, w) == one,
            vec![w, winv],
            "<u,-um> is a unit with inverse <u⁻¹,m>"
        );
        if m != 0 {
            ensure!(
                k,
                !an.is_morphic(idx)?,
                vec![idx],
                "<a,m> with m ≠ 0 is not left morphic"
            );
        }
    }
    Ok(Outcome::Pass(k))
}

fn ex_gggg_claim(an: &Analysis<'_>) -> Result<Outcome> {
    static MAT2_F2: OnceLock<NearRing> = OnceLock::new();
    let n = an.nearring();
    if !same_as_builtin(n, "mat2_f2", &MAT2_F2) {
        return Ok(Outcome::NotApplicable(Counterexample::new(
            vec![],
            "not the 2×2 matrices over F2",
        )));
    }
    let p = an.structure();
    let lm = unit_flag(&p.left_morphic)?;
    let duo = p.left_duo.as_ref().expect("order 16");
    let mut k = 0;
    ensure!(k, p.regular.holds, p.regular.witness.clone(), "regular");
    ensure!(k, lm.holds, lm.witness.clone(), "left morphic");
    ensure!(k, !duo.holds, vec![], "not left duo");
    ensure!(k, !p.left_strongly_regular.holds, vec![], "not left strongly regular");
    let nilpotent = n.elements().skip(1).find(|&a| n.mul(a, a) == 0);
    ensure!(k, nilpotent.is_some(), vec![], "a nonzero element squares to zero");
    Ok(Outcome::Pass(k))
}

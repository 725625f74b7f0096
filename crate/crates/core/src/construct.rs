//! Building near-rings from smaller pieces.

use crate::error::{Error, Result};
use crate::group::{join_index, split_index, FiniteGroup};
use crate::modules::NModule;
use crate::nearring::{compute_flags, Flag, Flags, NearRing, Origin};
use crate::table::Table;

/// Constructions refuse to produce more elements than this.
pub const DEFAULT_CONSTRUCT_CAP: usize = 4096;

/// `M₀(G)`: all maps `G → G` fixing 0, with pointwise addition and
/// composition `(f ⋆ g)(x) = f(g(x))`.
///
/// A map is stored as its value vector `(f(1), …, f(n−1))` and the elements
/// are ordered lexicographically on that vector, so index 0 is the zero map.
/// Labels are the value vectors, e.g. `(1,2)`.
pub fn build_m0(g: &FiniteGroup, cap: usize) -> Result<NearRing> {
    let k = g.order();
    if k < 2 {
        return Err(Error::BadParameter("M0(G) needs |G| >= 2".into()));
    }
    let size = (k as u128).checked_pow((k - 1) as u32).unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::CapExceeded {
            what: "M0(G)",
            actual: usize::try_from(size).unwrap_or(usize::MAX),
            limit: cap,
        });
    }
    let size = size as usize;
    let orders = vec![k; k - 1];
    // values[f][x] = f(x), with f(0) = 0
    let values: Vec<Vec<usize>> = (0..size)
        .map(|f| std::iter::once(0).chain(split_index(f, &orders)).collect())
        .collect();
    let encode = |v: &[usize]| join_index(&v[1..], &orders);
    let add = Table::from_fn(size, size, |f, h| {
        let v: Vec<usize> = (0..k).map(|x| g.add(values[f][x], values[h][x])).collect();
        encode(&v)
    });
    let mul = Table::from_fn(size, size, |f, h| {
        let v: Vec<usize> = (0..k).map(|x| values[f][values[h][x]]).collect();
        encode(&v)
    });
    let identity: Vec<usize> = (0..k).collect();
    let one = Some(encode(&identity));
    let labels = values
        .iter()
        .map(|v| {
            let parts: Vec<&str> = v[1..].iter().map(|&x| g.label(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let group = FiniteGroup::trusted(add, labels);
    Ok(NearRing::trusted(group, mul, one, Origin::M0(g.clone())))
}

/// Direct product with componentwise operations, indexed row-major with the
/// first factor most significant.
///
/// Flags are derived from the factors: a law holds in the product iff it
/// holds in every factor, and a failing factor's witness is embedded with
/// zeros in the other coordinates.
pub fn build_product(factors: &[NearRing], cap: usize) -> Result<NearRing> {
    if factors.is_empty() {
        return Err(Error::BadParameter("a product needs at least one factor".into()));
    }
    let orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    let size = orders
        .iter()
        .try_fold(1usize, |acc, &o| acc.checked_mul(o))
        .unwrap_or(usize::MAX);
    if size > cap {
        return Err(Error::CapExceeded {
            what: "direct product",
            actual: size,
            limit: cap,
        });
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone().with_origin(Origin::Product(factors.to_vec())));
    }
    let coords: Vec<Vec<usize>> = (0..size).map(|i| split_index(i, &orders)).collect();
    let groups: Vec<&FiniteGroup> = factors.iter().map(|f| f.group()).collect();
    let group = FiniteGroup::product(&groups);
    let mul = Table::from_fn(size, size, |i, j| {
        let parts: Vec<usize> = factors
            .iter()
            .enumerate()
            .map(|(k, f)| f.mul(coords[i][k], coords[j][k]))
            .collect();
        join_index(&parts, &orders)
    });
    let one = factors
        .iter()
        .map(|f| f.one())
        .collect::<Option<Vec<usize>>>()
        .map(|parts| join_index(&parts, &orders));

    // embed element `x` of factor `k` as (0, …, x, …, 0)
    let embed = |k: usize, x: usize| {
        let mut parts = vec![0; factors.len()];
        parts[k] = x;
        join_index(&parts, &orders)
    };
    let lift = |pick: &dyn Fn(&Flags) -> &Flag| -> Flag {
        factors
            .iter()
            .enumerate()
            .find(|(_, f)| !pick(f.flags()).holds)
            .map(|(k, f)| Flag::fails(pick(f.flags()).witness.iter().map(|&x| embed(k, x)).collect()))
            .unwrap_or(Flag::HOLDS)
    };
    let flags = Flags {
        right_distributive: true,
        left_distributive: lift(&|f| &f.left_distributive),
        abelian_add: lift(&|f| &f.abelian_add),
        zero_symmetric: lift(&|f| &f.zero_symmetric),
        unital: one.is_some(),
        commutative_mul: lift(&|f| &f.commutative_mul),
    };
    Ok(NearRing::trusted_with_flags(
        group,
        mul,
        one,
        flags,
        Origin::Product(factors.to_vec()),
    ))
}

/// The near-ring `R × M` with `⟨a₁,m₁⟩ + ⟨a₂,m₂⟩ = ⟨a₁+a₂, m₁+m₂⟩` and
/// `⟨a₁,m₁⟩ ⋆ ⟨a₂,m₂⟩ = ⟨a₁a₂, a₁m₂ + m₁⟩`, for a unital ring `R` and a
/// left `R`-module `M` with abelian addition and `r(m + m') = rm + rm'`.
///
/// The unity is `⟨1, 0⟩`. The result is zero-symmetric only when `M` is
/// trivial.
pub fn build_extension(r: &NearRing, m: &NModule, cap: usize) -> Result<NearRing> {
    let f = r.flags();
    if !(f.abelian_add.holds && f.left_distributive.holds && f.unital) {
        return Err(Error::NotRing(
            "the coefficient near-ring must be unital with abelian addition and both distributive laws".into(),
        ));
    }
    if let Some((x, y)) = m.carrier().commutativity_witness() {
        return Err(Error::NotRing(format!("module addition is not abelian at ({x}, {y})")));
    }
    for a in r.elements() {
        for x in m.elements() {
            for y in m.elements() {
                if m.act(a, m.add(x, y)) != m.add(m.act(a, x), m.act(a, y)) {
                    return Err(Error::NotRing(format!("r(m + m') != rm + rm' at r={a}, m={x}, m'={y}")));
                }
            }
        }
    }
    let (nr, nm) = (r.order(), m.order());
    let size = nr.saturating_mul(nm);
    if size > cap {
        return Err(Error::CapExceeded {
            what: "extension R x M",
            actual: size,
            limit: cap,
        });
    }
    let split = |i: usize| (i / nm, i % nm);
    let join = |a: usize, x: usize| a * nm + x;
    let add = Table::from_fn(size, size, |i, j| {
        let ((a1, m1), (a2, m2)) = (split(i), split(j));
        join(r.add(a1, a2), m.add(m1, m2))
    });
    let mul = Table::from_fn(size, size, |i, j| {
        let ((a1, m1), (a2, m2)) = (split(i), split(j));
        join(r.mul(a1, a2), m.add(m.act(a1, m2), m1))
    });
    let labels = (0..size)
        .map(|i| {
            let (a, x) = split(i);
            format!("<{},{}>", r.label(a), m.carrier().label(x))
        })
        .collect();
    let one = join(r.require_one()?, 0);
    let group = FiniteGroup::trusted(add, labels);
    let flags = compute_flags(&group, &mul, Some(one));
    Ok(NearRing::trusted_with_flags(
        group,
        mul,
        Some(one),
        flags,
        Origin::Extension {
            ring: Box::new(r.clone()),
            module: Box::new(m.clone()),
        },
    ))
}
